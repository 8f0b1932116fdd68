//! The closed-form presentation of the Lie algebra dual to the model of a
//! chordal arrangement on a curve of genus `g ≥ 1`, written down relation by
//! relation, and a span comparison against the computed one.
//!
//! Relations, for vertices `v ≠ w`, edges `e`, classes `i, j`:
//!
//! * `[a^i_v, a^j_w] = [b^i_v, b^j_w] = 0`
//! * `[b^i_{h(e)}, a^i_{t(e)}] = [b^i_{t(e)}, a^i_{h(e)}] = c_e`
//! * `[a^i_v, b^j_w] = 0` when `v ≠ w` and either they are not adjacent or
//!   `i ≠ j` (at a single vertex `x^i y^j = 0` for `i ≠ j` already, so
//!   `[a^i_v, b^j_v]` is only constrained through the sum below)
//! * `Σ_i [a^i_v, b^i_v] = Σ_{e ∋ v} c_e`
//! * `[a^i_v, c_e] = [b^i_v, c_e] = 0` for `v ∉ e`
//! * `[a^i_{h(e)} + a^i_{t(e)}, c_e] = [b^i_{h(e)} + b^i_{t(e)}, c_e] = 0`
//! * `[c_e, c_{e'}] = 0` when `e, e'` lie in no common triangle
//! * `[c_{e_1}, c_{e_2} + c_{e_3}] = 0` for every triangle and each choice of
//!   `e_1` in it.

use super::{dual_generator_name, LiePresentation};
use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::linalg::{rank, SparseVec};
use crate::models::{ArrangementSource, CurveType, VarKind};
use crate::Scalar;

/// Outcome of comparing two relation spans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanReport {
    pub computed_dim: usize,
    pub reference_dim: usize,
    /// Dimension of the sum of the two spans.
    pub joint_dim: usize,
}

impl SpanReport {
    pub fn equal(&self) -> bool {
        self.computed_dim == self.joint_dim && self.reference_dim == self.joint_dim
    }
}

struct Builder<'a, T> {
    lp: &'a LiePresentation<T>,
    src: &'a ArrangementSource,
    out: Vec<SparseVec<T>>,
}

impl<T: Scalar> Builder<'_, T> {
    fn index(&self, kind: VarKind) -> Result<usize> {
        let name = dual_generator_name(self.src, kind).ok_or_else(|| Error::invariant("reference presentation", format!("{kind:?} missing")))?;
        self.lp.rank(&name).ok_or(Error::UnknownVariable(name))
    }

    fn a(&self, i: u32, v: usize) -> Result<usize> {
        self.index(VarKind::X { index: i, vertex: v })
    }

    fn b(&self, i: u32, v: usize) -> Result<usize> {
        self.index(VarKind::Y { index: i, vertex: v })
    }

    fn c(&self, e: usize) -> Result<usize> {
        self.index(VarKind::G { edge: e })
    }

    /// `Σ coeff·[p, q] − Σ coeff·r`.
    fn push(&mut self, brackets: &[(usize, usize, i64)], linear: &[(usize, i64)]) {
        let n = self.lp.dim();
        let mut v = SparseVec::new();
        let mut add = |k: usize, c: T| {
            let e = v.entry(k).or_insert_with(T::zero);
            *e = e.clone() + c;
        };
        for &(p, q, c) in brackets {
            if p > q {
                add(p * n + q, T::from_int(c));
            } else if p < q {
                add(q * n + p, -T::from_int(c));
            }
        }
        for &(r, c) in linear {
            add(n * n + r, -T::from_int(c));
        }
        v.retain(|_, c| !c.is_zero());
        if !v.is_empty() {
            self.out.push(v);
        }
    }
}

/// The reference relations for `(g, genus)`, as vectors in the coordinates
/// of [`super::LieRelation::to_vector`] for the generators of `lp`.
pub fn reference_relations<T: Scalar>(lp: &LiePresentation<T>, g: &OrderedGraph, genus: u32) -> Result<Vec<SparseVec<T>>> {
    if genus == 0 {
        return Err(Error::GenusZeroUnsupported);
    }
    let src = lp.source().cloned().ok_or_else(|| Error::invariant("reference presentation", "presentation has no arrangement source"))?;
    if src.curve != CurveType::Projective(genus) || src.graph != *g {
        return Err(Error::invariant("reference presentation", "presentation was built for another graph or curve"));
    }
    let mut b = Builder { lp, src: &src, out: Vec::new() };
    let nv = g.num_vertices();
    let ne = g.num_edges();
    for v in 0..nv {
        for w in 0..nv {
            for i in 1..=genus {
                for j in 1..=genus {
                    if v != w {
                        let (p, q) = (b.a(i, v)?, b.a(j, w)?);
                        b.push(&[(p, q, 1)], &[]);
                        let (p, q) = (b.b(i, v)?, b.b(j, w)?);
                        b.push(&[(p, q, 1)], &[]);
                    }
                    if v != w && (!g.adjacent(v, w) || i != j) {
                        let (p, q) = (b.a(i, v)?, b.b(j, w)?);
                        b.push(&[(p, q, 1)], &[]);
                    }
                }
            }
        }
        let mut brackets = Vec::new();
        for i in 1..=genus {
            brackets.push((b.a(i, v)?, b.b(i, v)?, 1));
        }
        let mut linear = Vec::new();
        for e in 0..ne {
            let edge = g.edge(e);
            if edge.head == v || edge.tail == v {
                linear.push((b.c(e)?, 1));
            }
        }
        b.push(&brackets, &linear);
    }
    for e in 0..ne {
        let edge = g.edge(e);
        let (h, t) = (edge.head, edge.tail);
        let c = b.c(e)?;
        for i in 1..=genus {
            b.push(&[(b.b(i, h)?, b.a(i, t)?, 1)], &[(c, 1)]);
            b.push(&[(b.b(i, t)?, b.a(i, h)?, 1)], &[(c, 1)]);
            for v in (0..nv).filter(|&v| v != h && v != t) {
                b.push(&[(b.a(i, v)?, c, 1)], &[]);
                b.push(&[(b.b(i, v)?, c, 1)], &[]);
            }
            b.push(&[(b.a(i, h)?, c, 1), (b.a(i, t)?, c, 1)], &[]);
            b.push(&[(b.b(i, h)?, c, 1), (b.b(i, t)?, c, 1)], &[]);
        }
    }
    let triangles = triangles(g);
    for e in 0..ne {
        for f in e + 1..ne {
            if !triangles.iter().any(|t| t.contains(&e) && t.contains(&f)) {
                b.push(&[(b.c(e)?, b.c(f)?, 1)], &[]);
            }
        }
    }
    for t in &triangles {
        for k in 0..3 {
            let (e1, e2, e3) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
            b.push(&[(b.c(e1)?, b.c(e2)?, 1), (b.c(e1)?, b.c(e3)?, 1)], &[]);
        }
    }
    Ok(b.out)
}

/// Edge triples forming triangles.
fn triangles(g: &OrderedGraph) -> Vec<[usize; 3]> {
    let n = g.num_vertices();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                if let (Some(a), Some(b), Some(c)) = (g.edge_index(u, v), g.edge_index(u, w), g.edge_index(v, w)) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Compare the span of `lp`'s relations with the reference list.
pub fn verify_against_reference<T: Scalar>(lp: &LiePresentation<T>, g: &OrderedGraph, genus: u32) -> Result<SpanReport> {
    let computed = lp.relation_vectors();
    let reference = reference_relations(lp, g, genus)?;
    let computed_dim = rank(computed.iter().cloned());
    let reference_dim = rank(reference.iter().cloned());
    let joint_dim = rank(computed.into_iter().chain(reference));
    Ok(SpanReport { computed_dim, reference_dim, joint_dim })
}

#[cfg(test)]
mod tests {
    use super::super::{dualize, QuadraticData};
    use super::*;
    use crate::extalg::DEFAULT_PAIR_CAP;
    use crate::graph::corpus;
    use crate::models::build_projective;
    use crate::Rational;

    fn lie(g: &OrderedGraph, genus: u32) -> LiePresentation<Rational> {
        let p = build_projective::<Rational>(g, genus, 1 << 20).unwrap();
        let gb = p.groebner_basis(DEFAULT_PAIR_CAP).unwrap().reduce_to_quadratic().unwrap();
        dualize(&QuadraticData::from_groebner(&p, &gb).unwrap()).unwrap().to_lie_presentation().unwrap()
    }

    #[test]
    fn triangle_genus_one() {
        let g = corpus::complete(3);
        let r = verify_against_reference(&lie(&g, 1), &g, 1).unwrap();
        assert!(r.equal(), "{r:?}");
    }

    #[test]
    fn k4_genus_two() {
        let g = corpus::complete(4);
        let r = verify_against_reference(&lie(&g, 2), &g, 2).unwrap();
        assert!(r.equal(), "{r:?}");
    }

    #[test]
    fn single_edge_and_edgeless() {
        for g in [corpus::path(2), corpus::empty(2)] {
            for genus in [1, 2] {
                let r = verify_against_reference(&lie(&g, genus), &g, genus).unwrap();
                assert!(r.equal(), "{r:?}");
            }
        }
    }

    #[test]
    fn wrong_sign_is_detected() {
        let g = corpus::path(2);
        let lp = lie(&g, 1);
        let mut rels = lp.relations().to_vec();
        for r in &mut rels {
            for c in r.linear.values_mut() {
                *c = -c.clone();
            }
        }
        let flipped = LiePresentation { relations: rels, ..lp };
        assert!(!verify_against_reference(&flipped, &g, 1).unwrap().equal());
    }
}
