//! Nilpotent quotients `L/Γ_i L` with explicit bases and structure constants.
//!
//! `L` is graded by weight (bracket length, with `c_e` of weight two), so
//! `L/Γ_i L` is the sum of the weight spaces `L_w`, `w < i`. Each `L_w` is
//! spanned inside `U(L)` by the generators of weight `w` and the brackets
//! `[g, y]` with `y` a basis element of weight `w − wt(g)`; normal forms in
//! `U(L)` make independence an exact rank question.

use std::collections::{BTreeMap, HashMap};

use super::enveloping::{Enveloping, UElem, WordKey};
use crate::duality::LiePresentation;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::models::{ArrangementSource, VarKind};
use crate::Scalar;

/// Default bound on the dimension of a single weight space.
pub const DEFAULT_DIM_CAP: usize = 400;

#[derive(Debug, Clone)]
pub struct LieBasisElement<T> {
    pub weight: u32,
    /// Bracket expression in the dual generators, e.g. `[a.1, c.1.2]`.
    pub lie_name: String,
    /// Name of the dual degree-one generator of the standard complex.
    pub ce_name: String,
    pub(crate) elem: UElem<T>,
}

/// `L/Γ_i L` for a weight cap `i`.
#[derive(Debug, Clone)]
pub struct GradedLieStage<T> {
    cap: u32,
    basis: Vec<LieBasisElement<T>>,
    /// `[e_p, e_q]` for `p < q`, in basis coordinates; zero brackets omitted.
    brackets: BTreeMap<(usize, usize), SparseVec<T>>,
    source: Option<ArrangementSource>,
}

impl<T: Scalar> GradedLieStage<T> {
    /// Assemble a stage from raw data (used for fixtures); checks nothing.
    pub fn from_parts(cap: u32, basis: Vec<LieBasisElement<T>>, brackets: BTreeMap<(usize, usize), SparseVec<T>>) -> Self {
        GradedLieStage { cap, basis, brackets, source: None }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[LieBasisElement<T>] {
        &self.basis
    }

    pub fn source(&self) -> Option<&ArrangementSource> {
        self.source.as_ref()
    }

    /// `dim L_w` for `w = 1 .. cap−1`.
    pub fn weight_dims(&self) -> Vec<usize> {
        (1..self.cap).map(|w| self.basis.iter().filter(|b| b.weight == w).count()).collect()
    }

    /// `[e_p, e_q]` in basis coordinates.
    pub fn bracket(&self, p: usize, q: usize) -> SparseVec<T> {
        match p.cmp(&q) {
            std::cmp::Ordering::Less => self.brackets.get(&(p, q)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => {
                let mut v = self.brackets.get(&(q, p)).cloned().unwrap_or_default();
                for c in v.values_mut() {
                    *c = T::zero() - c.clone();
                }
                v
            }
            std::cmp::Ordering::Equal => SparseVec::new(),
        }
    }

    /// Nonzero structure constants `[e_p, e_q]`, `p < q`.
    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), SparseVec<T>> {
        &self.brackets
    }

    fn bracket_vec(&self, u: &SparseVec<T>, v: &SparseVec<T>) -> SparseVec<T> {
        let mut out = SparseVec::new();
        for (&p, a) in u {
            for (&q, b) in v {
                for (k, c) in self.bracket(p, q) {
                    let e = out.entry(k).or_insert_with(T::zero);
                    *e = e.clone() + a.clone() * b.clone() * c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Exhaustive Jacobi check over basis triples.
    pub fn check_jacobi(&self) -> Result<()> {
        let n = self.dim();
        let e = |i: usize| -> SparseVec<T> { [(i, T::one())].into_iter().collect() };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut s = self.bracket_vec(&e(i), &self.bracket(j, k));
                    for (t, c) in self.bracket_vec(&e(j), &self.bracket(k, i)).into_iter().chain(self.bracket_vec(&e(k), &self.bracket(i, j))) {
                        let x = s.entry(t).or_insert_with(T::zero);
                        *x = x.clone() + c;
                    }
                    s.retain(|_, c| !c.is_zero());
                    if !s.is_empty() {
                        let names = [i, j, k].map(|t| self.basis[t].ce_name.clone());
                        return Err(Error::invariant("jacobi", format!("fails on ({}, {}, {})", names[0], names[1], names[2])));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Candidate spanning vector of a weight space.
struct Candidate<T> {
    lie_name: String,
    ce_name: Option<String>,
    elem: UElem<T>,
}

/// Coordinates of `U(L)` elements of one weight.
#[derive(Default)]
struct Columns {
    index: HashMap<WordKey, usize>,
}

impl Columns {
    fn vector<T: Scalar>(&mut self, e: &UElem<T>) -> SparseVec<T> {
        let mut v = SparseVec::new();
        for (k, c) in e {
            let next = self.index.len();
            v.insert(*self.index.entry(k.clone()).or_insert(next), c.clone());
        }
        v
    }

    fn existing<T: Scalar>(&self, e: &UElem<T>) -> Option<SparseVec<T>> {
        e.iter().map(|(k, c)| self.index.get(k).map(|&i| (i, c.clone()))).collect()
    }
}

/// Letters of the degree-one dual generators at a vertex: `(suffix, index)`.
fn vertex_letters<T: Scalar>(lp: &LiePresentation<T>, src: &ArrangementSource, v: usize) -> Vec<(String, usize)> {
    let genus = src.curve.genus();
    let mut out = Vec::new();
    for (letter, is_x) in [("a", true), ("b", false)] {
        for i in 1..=genus.max(1) {
            let kind = if is_x { VarKind::X { index: i, vertex: v } } else { VarKind::Y { index: i, vertex: v } };
            if let Some(g) = src.find(kind).filter(|&g| g < lp.dim()) {
                let suffix = if genus >= 2 { format!("{letter}{i}") } else { letter.to_string() };
                out.push((suffix, g));
            }
        }
    }
    out
}

fn triangles(src: &ArrangementSource) -> Vec<([usize; 3], [usize; 3])> {
    let g = &src.graph;
    let n = g.num_vertices();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if let (Some(a), Some(b), Some(c)) = (g.edge_index(u, v), g.edge_index(u, w), g.edge_index(v, w)) {
                    out.push(([u, v, w], [a, b, c]));
                }
            }
        }
    }
    out
}

/// Model-side name of a generator: the dual letters `a, b, c` become
/// `x, y, g`.
fn model_name(dual: &str) -> String {
    let mut chars = dual.chars();
    match chars.next() {
        Some('a') => format!("x{}", chars.as_str()),
        Some('b') => format!("y{}", chars.as_str()),
        Some('c') => format!("g{}", chars.as_str()),
        _ => format!("{dual}_star"),
    }
}

/// `L/Γ_i L`, computed weight by weight.
pub fn lcs_quotient<T: Scalar>(lp: &LiePresentation<T>, i: u32) -> Result<GradedLieStage<T>> {
    lcs_quotient_capped(lp, i, DEFAULT_DIM_CAP)
}

pub fn lcs_quotient_capped<T: Scalar>(lp: &LiePresentation<T>, i: u32, dim_cap: usize) -> Result<GradedLieStage<T>> {
    let u = Enveloping::new(lp)?;
    let names = lp.names();
    let weights = lp.weights();
    let src = lp.source();
    let mut basis: Vec<LieBasisElement<T>> = Vec::new();
    let mut spaces: Vec<(Columns, Echelon<T>, Vec<usize>)> = Vec::new();
    // named families: edge ↦ [(suffix, global basis index)] of the latest weight
    let mut families: BTreeMap<usize, Vec<(String, usize)>> = BTreeMap::new();
    for w in 1..i {
        let mut cands: Vec<Candidate<T>> = Vec::new();
        for g in (0..lp.dim()).filter(|&g| weights[g] == w) {
            cands.push(Candidate { lie_name: names[g].clone(), ce_name: Some(model_name(&names[g])), elem: u.generator(g) });
        }
        let mut next_families: BTreeMap<usize, Vec<(String, Candidate<T>)>> = BTreeMap::new();
        if let Some(src) = src {
            for (verts, [e1, e2, _]) in triangles(src) {
                let (Some(p), Some(q)) = (src.find(VarKind::G { edge: e1 }), src.find(VarKind::G { edge: e2 })) else { continue };
                if weights[p] + weights[q] == w {
                    let label = verts.map(|v| src.graph.label(v).to_string()).join(".");
                    cands.push(Candidate {
                        lie_name: format!("[{}, {}]", names[p], names[q]),
                        ce_name: Some(format!("k.{label}")),
                        elem: u.commutator(&u.generator(p), &u.generator(q)),
                    });
                }
            }
            for e in 0..src.graph.num_edges() {
                // [ℓ, c_e] first, then [ℓ, Y] for Y in the family one weight down
                let inner: Vec<(String, String, UElem<T>)> = match src.find(VarKind::G { edge: e }) {
                    Some(c) if weights[c] + 1 == w => vec![(String::new(), names[c].clone(), u.generator(c))],
                    _ => families.get(&e).map(|f| f.iter().map(|(s, k)| (s.clone(), basis[*k].lie_name.clone(), basis[*k].elem.clone())).collect()).unwrap_or_default(),
                };
                let h = src.graph.edge(e).head;
                for (letter, g) in vertex_letters(lp, src, h).into_iter().filter(|&(_, g)| weights[g] == 1) {
                    for (suffix, inner_name, y) in &inner {
                        let s = format!("{letter}{suffix}");
                        let cand = Candidate {
                            lie_name: format!("[{}, {inner_name}]", names[g]),
                            ce_name: Some(format!("k.{}.{s}", src.graph.edge_name(e))),
                            elem: u.commutator(&u.generator(g), y),
                        };
                        next_families.entry(e).or_default().push((s, cand));
                    }
                }
            }
        }
        let mut family_members: Vec<(usize, String)> = Vec::new();
        for (e, list) in next_families {
            for (s, cand) in list {
                family_members.push((e, s));
                cands.push(cand);
            }
        }
        let named = cands.len();
        for g in (0..lp.dim()).filter(|&g| weights[g] < w) {
            let wl = (w - weights[g]) as usize;
            for &k in &spaces[wl - 1].2 {
                cands.push(Candidate {
                    lie_name: format!("[{}, {}]", names[g], basis[k].lie_name),
                    ce_name: None,
                    elem: u.commutator(&u.generator(g), &basis[k].elem),
                });
            }
        }
        let mut cols = Columns::default();
        let mut ech = Echelon::tracking();
        let mut members = Vec::new();
        families.clear();
        for (idx, cand) in cands.into_iter().enumerate() {
            if let Some(key) = cand.elem.keys().find(|k| u.weight_of(k) != w) {
                return Err(Error::invariant("weight grading", format!("{} has a term of weight {} in weight {w}", cand.lie_name, u.weight_of(key))));
            }
            let v = cols.vector(&cand.elem);
            if v.is_empty() || ech.contains(&v) {
                continue;
            }
            ech.insert(v);
            if members.len() >= dim_cap {
                return Err(Error::CapExceeded { what: "weight space dimension", cap: dim_cap });
            }
            let k = basis.len();
            let ce_name = cand.ce_name.unwrap_or_else(|| format!("k.w{w}.{}", members.len() + 1));
            if idx < named {
                if let Some(pos) = idx.checked_sub(named - family_members.len()) {
                    let (e, s) = &family_members[pos];
                    families.entry(*e).or_default().push((s.clone(), k));
                }
            }
            members.push(k);
            basis.push(LieBasisElement { weight: w, lie_name: cand.lie_name, ce_name, elem: cand.elem });
        }
        spaces.push((cols, ech, members));
    }
    let mut brackets = BTreeMap::new();
    for p in 0..basis.len() {
        for q in p + 1..basis.len() {
            let w = basis[p].weight + basis[q].weight;
            if w >= i {
                continue;
            }
            let br = u.commutator(&basis[p].elem, &basis[q].elem);
            if br.is_empty() {
                continue;
            }
            let (cols, ech, members) = &spaces[w as usize - 1];
            let coords = cols
                .existing(&br)
                .and_then(|v| ech.coordinates(&v))
                .ok_or_else(|| Error::invariant("bracket closure", format!("[{}, {}] is not in the span of weight {w}", basis[p].lie_name, basis[q].lie_name)))?;
            let v: SparseVec<T> = coords.into_iter().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (members[j], c)).collect();
            if !v.is_empty() {
                brackets.insert((p, q), v);
            }
        }
    }
    Ok(GradedLieStage { cap: i, basis, brackets, source: src.cloned() })
}

/// `dim L_w` for `w = 1 .. max_weight`.
pub fn lcs_dims<T: Scalar>(lp: &LiePresentation<T>, max_weight: u32, dim_cap: usize) -> Result<Vec<usize>> {
    Ok(lcs_quotient_capped(lp, max_weight + 1, dim_cap)?.weight_dims())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{dual_hilbert, dualize, QuadraticData};
    use crate::extalg::DEFAULT_PAIR_CAP;
    use crate::graph::corpus;
    use crate::liealg::free::witt_dimension;
    use crate::models::{build_projective, DgaPresentation};
    use crate::series::TruncatedSeries;
    use crate::Rational;

    fn lie(p: &DgaPresentation<Rational>) -> LiePresentation<Rational> {
        let gb = p.groebner_basis(DEFAULT_PAIR_CAP).unwrap().reduce_to_quadratic().unwrap();
        dualize(&QuadraticData::from_groebner(p, &gb).unwrap()).unwrap().to_lie_presentation().unwrap()
    }

    #[test]
    fn punctured_elliptic_is_free_on_two() {
        let lp = lie(&crate::duality::tests::punctured_elliptic());
        let dims = lcs_dims(&lp, 6, DEFAULT_DIM_CAP).unwrap();
        // c sits in weight two and equals [a, b]
        let witt: Vec<usize> = (1..=6).map(|w| witt_dimension(2, w) as usize).collect();
        assert_eq!(dims, witt);
    }

    #[test]
    fn triangle_elliptic_dims_and_names() {
        let lp = lie(&build_projective(&corpus::complete(3), 1, 1 << 20).unwrap());
        let st = lcs_quotient(&lp, 5).unwrap();
        assert_eq!(st.weight_dims(), vec![6, 3, 6, 10]);
        let names: Vec<&str> = st.basis().iter().filter(|b| b.weight >= 3).map(|b| b.ce_name.as_str()).collect();
        assert!(names.contains(&"k.1.2.a") && names.contains(&"k.1.2.ab") && names.contains(&"k.1.2.3"), "{names:?}");
        st.check_jacobi().unwrap();
    }

    #[test]
    fn pbw_matches_dual_series() {
        let lp = lie(&build_projective(&corpus::complete(3), 1, 1 << 20).unwrap());
        let p = build_projective::<Rational>(&corpus::complete(3), 1, 1 << 20).unwrap();
        let gb = p.groebner_basis(DEFAULT_PAIR_CAP).unwrap().reduce_to_quadratic().unwrap();
        let qla = dualize(&QuadraticData::from_groebner(&p, &gb).unwrap()).unwrap();
        let dual = dual_hilbert(&qla, 6).unwrap().weight_series(6);
        let dims = lcs_dims(&lp, 6, DEFAULT_DIM_CAP).unwrap();
        assert_eq!(TruncatedSeries::pbw_product(&dims, 6), dual);
    }

    #[test]
    fn corrupted_bracket_breaks_jacobi() {
        let lp = lie(&build_projective(&corpus::complete(3), 1, 1 << 20).unwrap());
        let st = lcs_quotient(&lp, 4).unwrap();
        let mut brackets = st.structure_constants().clone();
        let key = *brackets.keys().next().unwrap();
        for c in brackets.get_mut(&key).unwrap().values_mut() {
            *c = c.clone() * Rational::from_integer(2.into());
        }
        let bad = GradedLieStage::from_parts(st.cap(), st.basis().to_vec(), brackets);
        assert!(bad.check_jacobi().is_err());
    }
}
