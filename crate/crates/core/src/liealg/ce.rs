//! The standard (Chevalley–Eilenberg) complex of a nilpotent stage, and
//! bigraded cohomology of presented DGAs.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::stage::GradedLieStage;
use crate::error::{Error, Result};
use crate::extalg::{ExtPoly, GroebnerBasis, Monomial, VarTable, DEFAULT_PAIR_CAP};
use crate::linalg::{Echelon, SparseVec};
use crate::models::DgaPresentation;
use crate::Scalar;

/// `Ω(L/Γ_i L)`: one degree-one generator per basis element, `d` dual to
/// the bracket.
#[derive(Debug, Clone)]
pub struct CeStage<T> {
    cap: u32,
    vars: VarTable,
    degrees: Vec<u32>,
    weights: Vec<u32>,
    differential: Vec<ExtPoly<T>>,
}

/// `dξ^k = Σ_{p<q} c^k_{pq} ξ^p ξ^q` where `[e_p, e_q] = Σ_k c^k_{pq} e_k`.
pub fn ce_stage<T: Scalar>(stage: &GradedLieStage<T>) -> Result<CeStage<T>> {
    let vars = VarTable::new(stage.basis().iter().map(|b| b.ce_name.clone()))?;
    let mut differential = vec![ExtPoly::zero(); stage.dim()];
    for (&(p, q), v) in stage.structure_constants() {
        let pq = ExtPoly::product_of_vars(&[p, q]);
        for (&k, c) in v {
            differential[k] = &differential[k] + &pq.scale(c);
        }
    }
    Ok(CeStage {
        cap: stage.cap(),
        vars,
        degrees: vec![1; stage.dim()],
        weights: stage.basis().iter().map(|b| b.weight).collect(),
        differential,
    })
}

impl<T: Scalar> CeStage<T> {
    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn vars(&self) -> &VarTable {
        &self.vars
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn differential(&self) -> &[ExtPoly<T>] {
        &self.differential
    }

    /// `d` of the named generator.
    pub fn d(&self, name: &str) -> Option<&ExtPoly<T>> {
        self.vars.rank(name).map(|i| &self.differential[i])
    }

    /// Every generator sits in degree one.
    pub fn generated_in_degree_one(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    /// No differential has a constant or linear term.
    pub fn is_minimal(&self) -> bool {
        self.differential.iter().all(|d| d.terms().all(|(m, _)| m.degree() >= 2))
    }

    /// The stage as a free graded-commutative DGA.
    pub fn to_presentation(&self) -> Result<DgaPresentation<T>> {
        DgaPresentation::new(self.vars.clone(), self.weights.clone(), Vec::new(), self.differential.clone())
    }

    /// `d² = 0` on every generator.
    pub fn check_d_squared(&self) -> Result<()> {
        let p = self.to_presentation()?;
        for (i, d) in self.differential.iter().enumerate() {
            let dd = p.differential_raw(d);
            if !dd.is_zero() {
                return Err(Error::invariant("d^2 = 0", format!("d(d({})) = {}", self.vars.name(i), p.show(&dd))));
            }
        }
        Ok(())
    }

    /// Line-oriented text form:
    ///
    /// ```text
    /// arrangelab-v1 minimal-model
    /// stage 3
    /// generators 9
    /// gen x.1 degree 1 weight 1
    /// ...
    /// d g.1.2 = x.1^y.1 - ...
    /// end
    /// ```
    pub fn to_text(&self) -> String {
        let mut s = String::from("arrangelab-v1 minimal-model\n");
        let _ = writeln!(s, "stage {}", self.cap);
        let _ = writeln!(s, "generators {}", self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            let _ = writeln!(s, "gen {name} degree {} weight {}", self.degrees[i], self.weights[i]);
        }
        for (i, d) in self.differential.iter().enumerate() {
            let _ = writeln!(s, "d {} = {}", self.vars.name(i), crate::extalg::to_text(d, &self.vars));
        }
        s.push_str("end\n");
        s
    }
}

/// `dim H^{d,w}` for `d ≤ max_deg`, `w ≤ max_weight`, as `table[d][w]`.
pub fn dga_cohomology_dims<T: Scalar>(p: &DgaPresentation<T>, max_deg: usize, max_weight: u32) -> Result<Vec<Vec<usize>>> {
    let gb = p.groebner_basis(DEFAULT_PAIR_CAP)?;
    cohomology_with(p, &gb, max_deg, max_weight)
}

fn cohomology_with<T: Scalar>(p: &DgaPresentation<T>, gb: &GroebnerBasis<T>, max_deg: usize, max_weight: u32) -> Result<Vec<Vec<usize>>> {
    let mw = max_weight as usize;
    // standard monomials by (degree, weight), one degree beyond the range
    let mut slices: Vec<Vec<Vec<Monomial>>> = vec![vec![Vec::new(); mw + 1]; max_deg + 2];
    let leads = gb.leading_monomials();
    if leads.iter().all(|l| *l != Monomial::ONE) {
        let n = p.num_vars();
        let mut stack = vec![(Monomial::ONE, 0usize, 0u32)];
        while let Some((m, start, w)) = stack.pop() {
            slices[m.degree() as usize][w as usize].push(m);
            if m.degree() as usize > max_deg {
                continue;
            }
            for v in start..n {
                let w2 = w + p.weights()[v];
                let next = m.union(Monomial::var(v));
                if w2 <= max_weight && leads.iter().all(|l| !l.divides(next)) {
                    stack.push((next, v + 1, w2));
                }
            }
        }
    }
    for row in &mut slices {
        for s in row {
            s.sort();
        }
    }
    // rank of d: (deg, w) → (deg+1, w)
    let mut ranks = vec![vec![0usize; mw + 1]; max_deg + 1];
    for (deg, row) in ranks.iter_mut().enumerate() {
        for (w, r) in row.iter_mut().enumerate() {
            let target: HashMap<Monomial, usize> = slices[deg + 1][w].iter().enumerate().map(|(i, m)| (*m, i)).collect();
            let mut ech = Echelon::<T>::new();
            for &m in &slices[deg][w] {
                let dm = p.apply_differential(&ExtPoly::term(m, T::one()), gb);
                let mut v = SparseVec::new();
                for (t, c) in dm.terms() {
                    let col = target.get(t).ok_or_else(|| Error::invariant("differential weight", format!("d({}) leaves weight {w}", p.show(&ExtPoly::term(m, T::one())))))?;
                    v.insert(*col, c.clone());
                }
                ech.insert(v);
            }
            *r = ech.rank();
        }
    }
    let mut out = vec![vec![0usize; mw + 1]; max_deg + 1];
    for deg in 0..=max_deg {
        for w in 0..=mw {
            let below = if deg == 0 { 0 } else { ranks[deg - 1][w] };
            out[deg][w] = slices[deg][w].len() - ranks[deg][w] - below;
        }
    }
    Ok(out)
}

/// Cohomology tables of a model and of a stage over weights `< i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiIsoReport {
    pub stage: u32,
    pub max_degree: usize,
    pub model: Vec<Vec<usize>>,
    pub ce: Vec<Vec<usize>>,
}

impl QuasiIsoReport {
    pub fn equal(&self) -> bool {
        self.model == self.ce
    }

    /// First `(degree, weight)` where the tables differ.
    pub fn first_mismatch(&self) -> Option<(usize, usize)> {
        for (d, (a, b)) in self.model.iter().zip(&self.ce).enumerate() {
            if let Some(w) = a.iter().zip(b).position(|(x, y)| x != y) {
                return Some((d, w));
            }
        }
        None
    }
}

/// Compare `H^{≤deg_cap}` of `p` and of `stage` in every weight `< i`.
pub fn check_stage_quasi_iso<T: Scalar>(p: &DgaPresentation<T>, stage: &CeStage<T>, i: u32, deg_cap: usize) -> Result<QuasiIsoReport> {
    if i == 0 {
        return Ok(QuasiIsoReport { stage: i, max_degree: deg_cap, model: Vec::new(), ce: Vec::new() });
    }
    let model = dga_cohomology_dims(p, deg_cap, i - 1)?;
    let ce = dga_cohomology_dims(&stage.to_presentation()?, deg_cap, i - 1)?;
    Ok(QuasiIsoReport { stage: i, max_degree: deg_cap, model, ce })
}
