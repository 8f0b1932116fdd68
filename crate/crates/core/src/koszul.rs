//! Koszulity certificates: quadratic Gröbner bases with the predicted
//! initial ideal, NBC monomial bases, the flat decomposition of the model,
//! and the numerical identity `h_A(t)·h_{A^!}(−t) = 1`.

use std::fmt::Write as _;

use crate::duality::{dual_hilbert, dualize, QuadraticData};
use crate::error::{Error, Result};
use crate::extalg::{buchberger, ExtPoly, GroebnerBasis, Monomial, VarTable};
use crate::graph::{BrokenCircuits, EdgeSet, Flat, OrderedGraph};
use crate::models::{ArrangementSource, CurveType, DgaPresentation};
use crate::series::TruncatedSeries;
use crate::{Rational, Scalar};

/// Default truncation for the Hilbert series identity.
pub const DEFAULT_TRUNCATION: usize = 10;

fn source_for<'a, T: Scalar>(p: &'a DgaPresentation<T>, g: &OrderedGraph, curve: CurveType) -> Result<&'a ArrangementSource> {
    let src = p.source().ok_or_else(|| Error::invariant("arrangement source", "presentation was not built from a graph"))?;
    if src.graph != *g || src.curve != curve {
        return Err(Error::invariant("arrangement source", "presentation was built for another graph or curve"));
    }
    Ok(src)
}

/// Monomials of degree at most two living at one vertex that survive in
/// the cohomology of the curve: `1`, every `x^i`, every `y^i`, and `x^1y^1`.
fn local_factors(src: &ArrangementSource, v: usize) -> Vec<Monomial> {
    let mut out = vec![Monomial::ONE];
    match src.curve {
        CurveType::Rational => {}
        CurveType::Toric => out.push(Monomial::var(src.x(1, v))),
        CurveType::Projective(genus) => {
            for i in 1..=genus {
                out.push(Monomial::var(src.x(i, v)));
                out.push(Monomial::var(src.y(i, v)));
            }
            out.push(Monomial::from_vars([src.x(1, v), src.y(1, v)]));
        }
    }
    out
}

/// The monomial basis `x_A y_B g_S`: `S` runs over NBC sets, the vertex part
/// avoids the heads of `S` and is a product of [`local_factors`]. Listed per
/// degree, sorted.
pub fn nbc_monomial_basis<T: Scalar>(p: &DgaPresentation<T>, g: &OrderedGraph, curve: CurveType, cap: usize) -> Result<Vec<Vec<Monomial>>> {
    g.check_chordal_peo()?;
    let src = source_for(p, g, curve)?;
    let bc = BrokenCircuits::new(g, cap)?;
    let mut out = vec![Vec::new(); p.num_vars() + 1];
    let locals: Vec<Vec<Monomial>> = (0..g.num_vertices()).map(|v| local_factors(src, v)).collect();
    for s in bc.all_nbc_sets(g, cap)? {
        let heads = g.head_mask(s);
        let base = Monomial::from_vars(s.iter().map(|e| src.g(e)));
        let mut partial = vec![base];
        for (v, local) in locals.iter().enumerate() {
            if heads >> v & 1 == 1 {
                continue;
            }
            partial = partial.iter().flat_map(|m| local.iter().map(move |l| m.union(*l))).collect();
            if partial.len() > cap {
                return Err(Error::SizeLimitExceeded { what: "NBC monomial basis", cap });
            }
        }
        for m in partial {
            out[m.degree() as usize].push(m);
        }
    }
    for d in &mut out {
        d.sort();
    }
    Ok(out)
}

/// Minimal generators of the initial ideal predicted for a chordal graph in
/// a perfect elimination ordering: `g_e g_{e'}` for edges with a common
/// head, `x^i_{h(e)} g_e` and `y^i_{h(e)} g_e`, and at each vertex the
/// leading monomials `x^i x^j, y^i y^j` (`i < j`), `x^i y^j` (`i ≠ j`) and
/// `x^j y^j` (`j ≥ 2`) of the point relations.
pub fn predicted_initial_ideal(src: &ArrangementSource) -> Result<Vec<Monomial>> {
    let g = &src.graph;
    g.check_chordal_peo()?;
    let mut out = Vec::new();
    for e in 0..g.num_edges() {
        for f in e + 1..g.num_edges() {
            if g.edge(e).head == g.edge(f).head {
                out.push(Monomial::from_vars([src.g(e), src.g(f)]));
            }
        }
        let h = g.edge(e).head;
        let ge = src.g(e);
        match src.curve {
            CurveType::Rational => {}
            CurveType::Toric => out.push(Monomial::from_vars([src.x(1, h), ge])),
            CurveType::Projective(genus) => {
                for i in 1..=genus {
                    out.push(Monomial::from_vars([src.x(i, h), ge]));
                    out.push(Monomial::from_vars([src.y(i, h), ge]));
                }
            }
        }
    }
    if let CurveType::Projective(genus) = src.curve {
        for v in 0..g.num_vertices() {
            for i in 1..=genus {
                for j in 1..=genus {
                    if i != j {
                        out.push(Monomial::from_vars([src.x(i, v), src.y(j, v)]));
                    }
                    if i < j {
                        out.push(Monomial::from_vars([src.x(i, v), src.x(j, v)]));
                        out.push(Monomial::from_vars([src.y(i, v), src.y(j, v)]));
                    }
                }
                if i >= 2 {
                    out.push(Monomial::from_vars([src.x(i, v), src.y(i, v)]));
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Everything [`certify_koszul`] established.
#[derive(Debug, Clone)]
pub struct KoszulCertificate<T> {
    pub vars: VarTable,
    /// Reduced Gröbner basis, all elements of degree at most two.
    pub groebner: GroebnerBasis<T>,
    /// Leading monomials of the basis, sorted.
    pub initial: Vec<Monomial>,
    /// Whether the initial ideal was compared with the prediction (only for
    /// arrangement presentations on chordal graphs in PEO order).
    pub initial_checked: bool,
    pub hilbert: TruncatedSeries,
    pub dual_hilbert: TruncatedSeries,
    pub dual_order: String,
    pub dual_overlaps: usize,
    pub truncation: usize,
}

/// Certify Koszulity of the algebra underlying `p`.
pub fn certify_koszul<T: Scalar>(p: &DgaPresentation<T>, truncation: usize, pair_cap: usize) -> Result<KoszulCertificate<T>> {
    let gb = p.groebner_basis(pair_cap)?.reduce_to_quadratic()?;
    let mut initial = gb.leading_monomials();
    initial.sort();
    let mut initial_checked = false;
    if let Some(src) = p.source() {
        if src.graph.check_chordal_peo().is_ok() {
            let predicted = predicted_initial_ideal(src)?;
            if predicted != initial {
                let show = |ms: &[Monomial]| ms.iter().map(|m| p.vars().monomial_name(*m)).collect::<Vec<_>>().join(", ");
                return Err(Error::invariant(
                    "initial ideal",
                    format!("computed {{{}}}, predicted {{{}}}", show(&initial), show(&predicted)),
                ));
            }
            initial_checked = true;
        }
    }
    let qla = dualize(&QuadraticData::from_groebner(p, &gb)?)?;
    let dual = dual_hilbert(&qla, truncation)?;
    let hilbert = gb.hilbert_series(truncation);
    let dual_series = dual.series(truncation);
    let product = &hilbert * &dual_series.alternate();
    if let Some(k) = product.first_difference(&TruncatedSeries::one(truncation)) {
        return Err(Error::HilbertIdentityFails(k));
    }
    Ok(KoszulCertificate {
        vars: p.vars().clone(),
        groebner: gb,
        initial,
        initial_checked,
        hilbert,
        dual_hilbert: dual_series,
        dual_order: dual.order.to_string(),
        dual_overlaps: dual.overlaps_checked,
        truncation,
    })
}

impl<T: Scalar> KoszulCertificate<T> {
    /// Structured text report.
    pub fn to_text(&self) -> String {
        let mut s = String::from("arrangelab-v1 koszul\n");
        let _ = writeln!(s, "generators {}", self.vars.len());
        let _ = writeln!(s, "order {}", self.groebner.order_name());
        let _ = writeln!(s, "groebner-size {}", self.groebner.len());
        let _ = writeln!(s, "quadratic {}", if self.groebner.reduced_to_quadratic() { "yes" } else { "no" });
        let _ = writeln!(s, "initial-ideal {}", self.initial.len());
        for m in &self.initial {
            let _ = writeln!(s, "in {}", self.vars.monomial_name(*m));
        }
        let _ = writeln!(s, "initial-ideal-predicted {}", if self.initial_checked { "match" } else { "unchecked" });
        let _ = writeln!(s, "hilbert {}", self.hilbert);
        let _ = writeln!(s, "dual-hilbert {}", self.dual_hilbert);
        let _ = writeln!(s, "dual-order {}", self.dual_order);
        let _ = writeln!(s, "dual-overlaps {}", self.dual_overlaps);
        let _ = writeln!(s, "identity ok through {}", self.truncation);
        s.push_str("end\n");
        s
    }
}

/// One summand `H*(H_F) ⊗ V_F` of the flat decomposition.
#[derive(Debug, Clone)]
pub struct FlatContribution {
    pub flat: Flat,
    pub nbc_count: usize,
    /// Graded dimension of the cohomology of the stratum `H_F`.
    pub local: TruncatedSeries,
    /// `local · nbc_count · t^{rk F}`.
    pub contribution: TruncatedSeries,
}

#[derive(Debug, Clone)]
pub struct FlatDecomposition {
    pub entries: Vec<FlatContribution>,
    pub total: TruncatedSeries,
}

/// Vertex generators of the curve model (class `c` at vertex `v` is
/// variable `c·n + v`), identified along the edges of `flat`, with the
/// point relations; returns the variable count and the relations.
fn stratum_algebra(g: &OrderedGraph, curve: CurveType, flat: EdgeSet) -> (usize, Vec<ExtPoly<Rational>>) {
    let n = g.num_vertices();
    let classes = match curve {
        CurveType::Rational => 0,
        CurveType::Toric => 1,
        CurveType::Projective(genus) => 2 * genus as usize,
    };
    // variable for class c at vertex v
    let var = |c: usize, v: usize| ExtPoly::<Rational>::var(c * n + v);
    let mut rels = Vec::new();
    for e in flat.iter() {
        let edge = g.edge(e);
        for c in 0..classes {
            rels.push(&var(c, edge.head) - &var(c, edge.tail));
        }
    }
    if let CurveType::Projective(genus) = curve {
        let genus = genus as usize;
        // classes 0..genus are x^1..x^g, genus..2genus are y^1..y^g
        for v in 0..n {
            for i in 0..genus {
                for j in 0..genus {
                    if i != j {
                        rels.push(&var(i, v) * &var(genus + j, v));
                    }
                    if i < j {
                        rels.push(&var(i, v) * &var(j, v));
                        rels.push(&var(genus + i, v) * &var(genus + j, v));
                    }
                }
                if i > 0 {
                    rels.push(&(&var(0, v) * &var(genus, v)) - &(&var(i, v) * &var(genus + i, v)));
                }
            }
        }
    }
    (classes * n, rels)
}

/// `A = ⊕_F H*(H_F) ⊗ V_F`, with `dim V_F` the number of NBC bases of `F`
/// and `H*(H_F)` computed as a quotient of the vertex generators by the
/// identifications along `F`.
pub fn flat_decomposition(g: &OrderedGraph, curve: CurveType, cap: usize, pair_cap: usize) -> Result<FlatDecomposition> {
    let bc = BrokenCircuits::new(g, cap)?;
    let classes = match curve {
        CurveType::Rational => 0,
        CurveType::Toric => 1,
        CurveType::Projective(genus) => 2 * genus as usize,
    };
    let truncation = classes * g.num_vertices() + g.num_edges();
    let mut entries = Vec::new();
    let mut total = TruncatedSeries::zero(truncation);
    for flat in g.flats(cap)? {
        let nbc_count = bc.nbc_sets_of_flat(g, &flat, cap)?.len();
        let (nvars, rels) = stratum_algebra(g, curve, flat.edges);
        let local = buchberger(&rels, nvars, pair_cap)?.hilbert_series(truncation);
        let mut shift = TruncatedSeries::zero(truncation);
        shift.set(flat.rank, nbc_count as u64);
        let contribution = &local * &shift;
        total = &total + &contribution;
        entries.push(FlatContribution { flat, nbc_count, local, contribution });
    }
    Ok(FlatDecomposition { entries, total })
}
