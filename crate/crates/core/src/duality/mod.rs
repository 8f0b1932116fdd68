//! Quadratic-linear duality: from a quadratic DGA `(A, d)` with
//! `A = T(V)/(J)` to the algebra `T(V*)/(x − φ(x) : x ∈ J^⊥)` and, for
//! commutative inputs, the presentation of the dual Lie algebra.
//!
//! Tensors in `V⊗V` use coordinates `k·n + l` for `v_k⊗v_l`. The pairing is
//! `⟨u⊗v, α⊗β⟩ = α(u)β(v)` with no sign, so `J^⊥` is the ordinary
//! orthogonal complement in these coordinates and `φ(x)(v) = ⟨x, d(v)⟩`.
//! The exterior monomial `v_k v_l` (`k < l`) lifts to `v_k⊗v_l`; any other
//! lift differs by an element of `S²(V) ⊆ J`.

mod normal_words;
mod reference;

pub use normal_words::{dual_dims_explicit, dual_hilbert, DualHilbert, WordOrder};
pub use reference::{reference_relations, verify_against_reference, SpanReport};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::extalg::{ExtPoly, GroebnerBasis, Monomial};
use crate::linalg::{Echelon, SparseVec};
use crate::models::{ArrangementSource, DgaPresentation, VarKind};
use crate::Scalar;

/// `V = A¹`, the relation span `J ⊆ V⊗V` and `d₁ : V → V⊗V` (lifted).
#[derive(Debug, Clone)]
pub struct QuadraticData<T> {
    names: Vec<String>,
    weights: Vec<u32>,
    j: Echelon<T>,
    d1: Vec<SparseVec<T>>,
    source: Option<ArrangementSource>,
}

fn lift<T: Scalar>(p: &ExtPoly<T>, n: usize) -> SparseVec<T> {
    let mut out = SparseVec::new();
    for (m, c) in p.terms() {
        let v: Vec<usize> = m.vars().collect();
        out.insert(v[0] * n + v[1], c.clone());
    }
    out
}

impl<T: Scalar> QuadraticData<T> {
    /// Quadratic data of `p` itself; every relation must be homogeneous
    /// quadratic.
    pub fn from_presentation(p: &DgaPresentation<T>) -> Result<Self> {
        Self::with_relations(p, p.relations())
    }

    /// Quadratic data of `p` with the relations replaced by the elements of a
    /// Gröbner basis (typically after quadratic reduction).
    pub fn from_groebner(p: &DgaPresentation<T>, gb: &GroebnerBasis<T>) -> Result<Self> {
        Self::with_relations(p, gb.elements())
    }

    fn with_relations(p: &DgaPresentation<T>, relations: &[ExtPoly<T>]) -> Result<Self> {
        let n = p.num_vars();
        for r in relations {
            if r.is_zero() {
                continue;
            }
            if !r.is_homogeneous() || r.degree() != Some(2) {
                return Err(Error::NotQuadraticInput);
            }
        }
        let mut j = Echelon::new();
        for k in 0..n {
            for l in k..n {
                let mut s = SparseVec::new();
                s.insert(k * n + l, T::one());
                let e = s.entry(l * n + k).or_insert_with(T::zero);
                *e = e.clone() + T::one();
                j.insert(s);
            }
        }
        for r in relations.iter().filter(|r| !r.is_zero()) {
            j.insert(lift(r, n));
        }
        j.fully_reduce();
        let d1 = p.differential().iter().map(|d| lift(d, n)).collect();
        Ok(QuadraticData {
            names: p.vars().names().to_vec(),
            weights: p.weights().to_vec(),
            j,
            d1,
            source: p.source().cloned(),
        })
    }

    /// `dim V`.
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn dim_j(&self) -> usize {
        self.j.rank()
    }

    /// Reduced rows of `J`.
    pub fn j_rows(&self) -> impl Iterator<Item = &SparseVec<T>> {
        self.j.rows().map(|(_, r)| r)
    }

    /// `dim (V⊗V)/J`, which is `dim A²` of the quadratic algebra.
    pub fn quotient_dim(&self) -> usize {
        self.dim() * self.dim() - self.dim_j()
    }

    /// Lift of `d(v_k)`.
    pub fn d1(&self, k: usize) -> &SparseVec<T> {
        &self.d1[k]
    }

    pub fn source(&self) -> Option<&ArrangementSource> {
        self.source.as_ref()
    }
}

/// Name of the generator dual to a model generator: `x ↦ a`, `y ↦ b`,
/// `g ↦ c` (keeping the rest of the name), anything else gets a `_dual`
/// suffix.
pub fn dual_name(name: &str) -> String {
    let mut chars = name.chars();
    match chars.next() {
        Some('x') => format!("a{}", chars.as_str()),
        Some('y') => format!("b{}", chars.as_str()),
        Some('g') => format!("c{}", chars.as_str()),
        _ => format!("{name}_dual"),
    }
}

/// `T(V*)` modulo the ideal generated by `x − φ(x)`, `x` running over a
/// reduced basis of `J^⊥`.
#[derive(Debug, Clone)]
pub struct QlaPresentation<T> {
    names: Vec<String>,
    weights: Vec<u32>,
    jperp: Vec<SparseVec<T>>,
    phi: Vec<SparseVec<T>>,
    source: Option<ArrangementSource>,
}

/// Dualize: `J^⊥` by exact linear algebra and `φ = d₁^T`.
pub fn dualize<T: Scalar>(q: &QuadraticData<T>) -> Result<QlaPresentation<T>> {
    let n = q.dim();
    let mut perp = Echelon::new();
    for v in q.j.nullspace(n * n) {
        perp.insert(v);
    }
    perp.fully_reduce();
    let jperp: Vec<SparseVec<T>> = perp.rows().map(|(_, r)| r.clone()).collect();
    if jperp.len() + q.dim_j() != n * n {
        return Err(Error::invariant("dim J + dim J^perp", format!("{} + {} != {}", q.dim_j(), jperp.len(), n * n)));
    }
    let mut phi = Vec::with_capacity(jperp.len());
    for x in &jperp {
        let mut image = SparseVec::new();
        for (v, dv) in q.d1.iter().enumerate() {
            let mut s = T::zero();
            for (c, a) in dv {
                if let Some(b) = x.get(c) {
                    s = s + a.clone() * b.clone();
                }
            }
            if !s.is_zero() {
                image.insert(v, s);
            }
        }
        phi.push(image);
    }
    let qla = QlaPresentation {
        names: q.names.iter().map(|s| dual_name(s)).collect(),
        weights: q.weights.clone(),
        jperp,
        phi,
        source: q.source.clone(),
    };
    qla.check_h_zero(q)?;
    Ok(qla)
}

impl<T: Scalar> QlaPresentation<T> {
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    /// Basis of `J^⊥`, reduced rows in tensor coordinates.
    pub fn jperp(&self) -> &[SparseVec<T>] {
        &self.jperp
    }

    /// `φ` on the basis of `J^⊥`, as vectors over the generators.
    pub fn phi(&self) -> &[SparseVec<T>] {
        &self.phi
    }

    pub fn source(&self) -> Option<&ArrangementSource> {
        self.source.as_ref()
    }

    /// The ideal generators need no constant part: `φ` pairs `J^⊥` only with
    /// `d(V) ⊆ A²`, and `d(1) = 0` gives nothing in degree 0. Re-derive both
    /// facts from the data.
    fn check_h_zero(&self, q: &QuadraticData<T>) -> Result<()> {
        let n = self.dim();
        for x in &self.jperp {
            if x.keys().any(|&c| c >= n * n) {
                return Err(Error::MalformedQla("J^perp leaves V*⊗V*".into()));
            }
            for r in q.j_rows() {
                let s = r.iter().filter_map(|(c, a)| x.get(c).map(|b| a.clone() * b.clone())).fold(T::zero(), |a, b| a + b);
                if !s.is_zero() {
                    return Err(Error::MalformedQla("J^perp does not annihilate J".into()));
                }
            }
        }
        Ok(())
    }

    /// The ideal generators as noncommutative polynomials, e.g.
    /// `a*b - b*a - c`.
    pub fn ideal_generators_text(&self) -> Vec<String> {
        let n = self.dim();
        let mut out = Vec::new();
        for (x, f) in self.jperp.iter().zip(&self.phi) {
            let mut terms: Vec<(String, T)> =
                x.iter().rev().map(|(&c, a)| (format!("{}*{}", self.names[c / n], self.names[c % n]), a.clone())).collect();
            terms.extend(f.iter().rev().map(|(&v, a)| (self.names[v].clone(), -a.clone())));
            out.push(signed_sum(&terms));
        }
        out
    }

    /// Rewrite the generators as Lie relations `Σ c_kl [a_k, a_l] − φ = 0`.
    pub fn to_lie_presentation(&self) -> Result<LiePresentation<T>> {
        let n = self.dim();
        let mut relations = Vec::with_capacity(self.jperp.len());
        for (x, f) in self.jperp.iter().zip(&self.phi) {
            let mut bracket = BTreeMap::new();
            for (&c, a) in x {
                let (k, l) = (c / n, c % n);
                let mirror = x.get(&(l * n + k)).cloned().unwrap_or_else(T::zero);
                if k == l || mirror != -a.clone() {
                    return Err(Error::NotAntisymmetric);
                }
                if k > l {
                    bracket.insert((k, l), a.clone());
                }
            }
            relations.push(LieRelation { bracket, linear: f.clone() });
        }
        Ok(LiePresentation { names: self.names.clone(), weights: self.weights.clone(), relations, source: self.source.clone() })
    }
}

fn signed_sum<T: Scalar>(terms: &[(String, T)]) -> String {
    let mut s = String::new();
    for (i, (name, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            let _ = write!(s, "{abs}*");
        }
        s.push_str(name);
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// `Σ bracket[(k, l)]·[a_k, a_l] − Σ linear[v]·a_v = 0`, stored with `k > l`.
#[derive(Debug, Clone, PartialEq)]
pub struct LieRelation<T> {
    pub bracket: BTreeMap<(usize, usize), T>,
    pub linear: SparseVec<T>,
}

impl<T: Scalar> LieRelation<T> {
    /// Coordinates in `Λ²(V*) ⊕ V*`: bracket `(k, l)` at `k·n + l`, the
    /// generator `v` at `n² + v`, so that the relation is `bracket − linear`.
    pub fn to_vector(&self, n: usize) -> SparseVec<T> {
        let mut v: SparseVec<T> = self.bracket.iter().map(|(&(k, l), c)| (k * n + l, c.clone())).collect();
        for (&g, c) in &self.linear {
            v.insert(n * n + g, -c.clone());
        }
        v
    }
}

/// Generators and degree ≤ 2 relations of the Lie algebra dual to a
/// commutative quadratic DGA.
#[derive(Debug, Clone)]
pub struct LiePresentation<T> {
    names: Vec<String>,
    weights: Vec<u32>,
    relations: Vec<LieRelation<T>>,
    source: Option<ArrangementSource>,
}

impl<T: Scalar> LiePresentation<T> {
    pub fn new(names: Vec<String>, weights: Vec<u32>, relations: Vec<LieRelation<T>>) -> Self {
        LiePresentation { names, weights, relations, source: None }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Weight of each generator in the model grading (`g` has weight two in
    /// the projective case, so `c_e` sits in bracket length two).
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn relations(&self) -> &[LieRelation<T>] {
        &self.relations
    }

    pub fn source(&self) -> Option<&ArrangementSource> {
        self.source.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn rank(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn relation_vectors(&self) -> Vec<SparseVec<T>> {
        self.relations.iter().map(|r| r.to_vector(self.dim())).collect()
    }

    /// Text of one relation, `[b.2, a.1] - c.1.2 = 0`.
    pub fn relation_text(&self, r: &LieRelation<T>) -> String {
        let mut terms: Vec<(String, T)> = r
            .bracket
            .iter()
            .rev()
            .map(|(&(k, l), c)| (format!("[{}, {}]", self.names[k], self.names[l]), c.clone()))
            .collect();
        terms.extend(r.linear.iter().rev().map(|(&v, c)| (self.names[v].clone(), -c.clone())));
        format!("{} = 0", signed_sum(&terms))
    }

    /// Line-oriented text form.
    pub fn to_text(&self) -> String {
        let mut s = String::from("arrangelab-v1 lie-presentation\n");
        for (name, w) in self.names.iter().zip(&self.weights) {
            let _ = writeln!(s, "gen {name} weight {w}");
        }
        for r in &self.relations {
            let _ = writeln!(s, "rel {}", self.relation_text(r));
        }
        s.push_str("end\n");
        s
    }
}

/// Name of a dual generator for an arrangement variable.
pub fn dual_generator_name(src: &ArrangementSource, kind: VarKind) -> Option<String> {
    src.find(kind).map(|_| match kind {
        VarKind::X { index, vertex } => prefixed("a", index, src, vertex),
        VarKind::Y { index, vertex } => prefixed("b", index, src, vertex),
        VarKind::G { edge } => format!("c.{}", src.graph.edge_name(edge)),
    })
}

fn prefixed(letter: &str, index: u32, src: &ArrangementSource, vertex: usize) -> String {
    if src.curve.genus() >= 2 {
        format!("{letter}{index}.{}", src.graph.label(vertex))
    } else {
        format!("{letter}.{}", src.graph.label(vertex))
    }
}

/// Exterior monomial whose tensor coordinate is `c` (for reports).
pub fn coordinate_monomial(c: usize, n: usize) -> Monomial {
    Monomial::from_vars([c / n, c % n])
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::extalg::VarTable;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    /// `Λ(x, y, g)/(xg, yg)`, `dg = xy`.
    pub(crate) fn punctured_elliptic() -> DgaPresentation<Rational> {
        let vars = VarTable::new(["x", "y", "g"]).unwrap();
        let v = |i| ExtPoly::<Rational>::var(i);
        let rels = vec![&v(0) * &v(2), &v(1) * &v(2)];
        let d = vec![ExtPoly::zero(), ExtPoly::zero(), &v(0) * &v(1)];
        DgaPresentation::new(vars, vec![1, 1, 2], rels, d).unwrap()
    }

    #[test]
    fn punctured_elliptic_quadratic_data() {
        let qd = QuadraticData::from_presentation(&punctured_elliptic()).unwrap();
        assert_eq!(qd.dim(), 3);
        assert_eq!(qd.dim_j(), 8);
        assert_eq!(qd.quotient_dim(), 1);
    }

    #[test]
    fn punctured_elliptic_dual() {
        let qd = QuadraticData::from_presentation(&punctured_elliptic()).unwrap();
        let qla = dualize(&qd).unwrap();
        assert_eq!(qla.names(), ["a", "b", "c"]);
        assert_eq!(qla.jperp().len(), 1);
        // b⊗a − a⊗b + c, i.e. ab − ba − c up to sign
        assert_eq!(qla.ideal_generators_text(), vec!["b*a - a*b + c"]);
        let lp = qla.to_lie_presentation().unwrap();
        assert_eq!(lp.relation_text(&lp.relations()[0]), "[b, a] + c = 0");
        assert_eq!(lp.relations()[0].bracket.get(&(1, 0)), Some(&q(1)));
    }

    #[test]
    fn exterior_on_one_generator() {
        let vars = VarTable::new(["x"]).unwrap();
        let p = DgaPresentation::<Rational>::new(vars, vec![1], vec![], vec![ExtPoly::zero()]).unwrap();
        let qd = QuadraticData::from_presentation(&p).unwrap();
        assert_eq!(qd.dim_j(), 1);
        let qla = dualize(&qd).unwrap();
        assert!(qla.jperp().is_empty());
    }

    #[test]
    fn zero_differential_gives_homogeneous_dual() {
        // free exterior algebra: J = S²(V), J^⊥ = Λ²(V*), abelian Lie algebra
        let vars = VarTable::new(["x", "y"]).unwrap();
        let p = DgaPresentation::<Rational>::new(vars, vec![1, 1], vec![], vec![ExtPoly::zero(); 2]).unwrap();
        let lp = dualize(&QuadraticData::from_presentation(&p).unwrap()).unwrap().to_lie_presentation().unwrap();
        assert_eq!(lp.relations().len(), 1);
        assert!(lp.relations()[0].linear.is_empty());
        assert_eq!(lp.relation_text(&lp.relations()[0]), "[b, a] = 0");
        // Λ(x, y)/(xy): J = V⊗V, nothing left, free Lie algebra
        let vars = VarTable::new(["x", "y"]).unwrap();
        let v = |i| ExtPoly::<Rational>::var(i);
        let p = DgaPresentation::<Rational>::new(vars, vec![1, 1], vec![&v(0) * &v(1)], vec![ExtPoly::zero(); 2]).unwrap();
        assert!(dualize(&QuadraticData::from_presentation(&p).unwrap()).unwrap().jperp().is_empty());
    }

    #[test]
    fn rejects_non_quadratic() {
        let vars = VarTable::new(["x", "y", "z"]).unwrap();
        let v = |i| ExtPoly::<Rational>::var(i);
        let p = DgaPresentation::<Rational>::new(vars, vec![1; 3], vec![&(&v(0) * &v(1)) * &v(2)], vec![ExtPoly::zero(); 3]).unwrap();
        assert!(matches!(QuadraticData::from_presentation(&p), Err(Error::NotQuadraticInput)));
    }

    #[test]
    fn non_commutative_input_is_rejected() {
        let mut qla = dualize(&QuadraticData::from_presentation(&punctured_elliptic()).unwrap()).unwrap();
        qla.jperp[0].insert(0, q(1));
        assert!(matches!(qla.to_lie_presentation(), Err(Error::NotAntisymmetric)));
    }
}
