use std::collections::VecDeque;

use super::{ExtPoly, Monomial};
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;
use crate::Scalar;

/// Default bound on the number of critical pairs Buchberger may process.
pub const DEFAULT_PAIR_CAP: usize = 5_000_000;

/// Reduced Gröbner basis of an ideal of an exterior algebra under the
/// degree-lexicographic order of [`Monomial`].
///
/// Elements are monic and sorted by leading monomial; the reduced basis of a
/// given ideal is unique, so equality of bases is equality of ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<T> {
    elements: Vec<ExtPoly<T>>,
    nvars: usize,
    reduced_to_quadratic: bool,
}

enum Pair {
    Two(usize, usize),
    /// `x_v · g` for a variable `v` of the leading monomial of `g`.
    Own(usize, usize),
}

/// Multiply `g` on the left by `w` and normalise so that `w · LM(g)` has
/// coefficient one.
fn shifted<T: Scalar>(w: Monomial, g: &ExtPoly<T>) -> ExtPoly<T> {
    let (l, c) = g.leading().expect("nonzero");
    let (_, neg) = w.mul(l).expect("disjoint");
    let k = T::one() / c.clone();
    g.mul_term_left(w, &if neg { -k } else { k })
}

/// Leading monomials of a basis grouped by their largest variable, for
/// fast divisor lookup.
struct LeadIndex {
    by_max: Vec<Vec<usize>>,
}

impl LeadIndex {
    fn new<T: Scalar>(basis: &[ExtPoly<T>], nvars: usize) -> Self {
        let mut idx = LeadIndex { by_max: vec![Vec::new(); nvars + 1] };
        for (i, g) in basis.iter().enumerate() {
            idx.push(i, g);
        }
        idx
    }

    fn push<T: Scalar>(&mut self, i: usize, g: &ExtPoly<T>) {
        let l = g.leading_monomial().expect("nonzero");
        self.by_max[l.max_var().map_or(0, |v| v + 1)].push(i);
    }

    fn divisor<T: Scalar>(&self, basis: &[ExtPoly<T>], m: Monomial) -> Option<usize> {
        let slots = std::iter::once(0).chain(m.vars().map(|v| v + 1));
        for s in slots {
            for &i in &self.by_max[s] {
                if basis[i].leading_monomial().expect("nonzero").divides(m) {
                    return Some(i);
                }
            }
        }
        None
    }

    fn normal_form<T: Scalar>(&self, basis: &[ExtPoly<T>], p: &ExtPoly<T>) -> ExtPoly<T> {
        let mut p = p.clone();
        let mut rem = ExtPoly::zero();
        while let Some((m, c)) = p.leading().map(|(m, c)| (m, c.clone())) {
            match self.divisor(basis, m) {
                Some(i) => {
                    let g = &basis[i];
                    let w = m.minus(g.leading_monomial().expect("nonzero"));
                    let s = shifted(w, g);
                    for (u, x) in s.terms() {
                        p.add_term(*u, -(x.clone() * c.clone()));
                    }
                }
                None => {
                    p.add_term(m, -c.clone());
                    rem.add_term(m, c);
                }
            }
        }
        rem
    }
}

/// Gröbner basis of the two-sided ideal generated by `gens` in the exterior
/// algebra on `nvars` variables.
///
/// Critical pairs are processed first-in first-out, with no pair-elimination
/// criteria; the result is auto-reduced, so it does not depend on the
/// processing order.
pub fn buchberger<T: Scalar>(gens: &[ExtPoly<T>], nvars: usize, pair_cap: usize) -> Result<GroebnerBasis<T>> {
    if nvars > 128 {
        return Err(Error::TooManyVariables(nvars));
    }
    for g in gens {
        g.check_vars(nvars)?;
    }
    let mut input: Vec<ExtPoly<T>> = Vec::new();
    for g in gens {
        input.push(g.clone());
        // left ideal generated by f and conj(f) is two-sided
        let conj = g.parity_conjugate();
        if conj != *g && conj != -g {
            input.push(conj);
        }
    }

    let mut basis: Vec<ExtPoly<T>> = Vec::new();
    let mut index = LeadIndex::new(&basis, nvars);
    let mut queue: VecDeque<Pair> = VecDeque::new();
    let mut processed = 0usize;

    let add = |basis: &mut Vec<ExtPoly<T>>, index: &mut LeadIndex, queue: &mut VecDeque<Pair>, f: ExtPoly<T>| {
        let f = f.monic();
        let j = basis.len();
        let l = f.leading_monomial().expect("nonzero");
        index.push(j, &f);
        basis.push(f);
        for v in l.vars() {
            queue.push_back(Pair::Own(j, v));
        }
        for i in 0..j {
            queue.push_back(Pair::Two(i, j));
        }
    };

    for f in input {
        let r = index.normal_form(&basis, &f);
        if !r.is_zero() {
            add(&mut basis, &mut index, &mut queue, r);
        }
    }

    while let Some(pair) = queue.pop_front() {
        processed += 1;
        if processed > pair_cap {
            return Err(Error::CapExceeded { what: "Buchberger critical pairs", cap: pair_cap });
        }
        let s = match pair {
            Pair::Two(i, j) => {
                let (li, lj) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
                let l = li.union(lj);
                &shifted(l.minus(li), &basis[i]) - &shifted(l.minus(lj), &basis[j])
            }
            Pair::Own(i, v) => basis[i].mul_term_left(Monomial::var(v), &T::one()),
        };
        if s.is_zero() {
            continue;
        }
        let r = index.normal_form(&basis, &s);
        if !r.is_zero() {
            add(&mut basis, &mut index, &mut queue, r);
        }
    }
    Ok(GroebnerBasis::auto_reduce(basis, nvars))
}

impl<T: Scalar> GroebnerBasis<T> {
    fn auto_reduce(mut basis: Vec<ExtPoly<T>>, nvars: usize) -> Self {
        basis.sort_by_key(|g| g.leading_monomial());
        let leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap()).collect();
        let minimal: Vec<ExtPoly<T>> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                !leads.iter().enumerate().any(|(j, l)| j != *i && l.divides(leads[*i]) && (*l != leads[*i] || j < *i))
            })
            .map(|(_, g)| g.monic())
            .collect();
        let index = LeadIndex::new(&minimal, nvars);
        let mut elements: Vec<ExtPoly<T>> = minimal
            .iter()
            .map(|g| {
                let (l, _) = g.leading().unwrap();
                let tail = &g.clone() - &ExtPoly::term(l, T::one());
                &ExtPoly::term(l, T::one()) + &index.normal_form(&minimal, &tail)
            })
            .collect();
        elements.sort_by_key(|g| g.leading_monomial());
        GroebnerBasis { elements, nvars, reduced_to_quadratic: false }
    }

    pub fn elements(&self) -> &[ExtPoly<T>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Whether [`GroebnerBasis::reduce_to_quadratic`] has certified it.
    pub fn reduced_to_quadratic(&self) -> bool {
        self.reduced_to_quadratic
    }

    pub fn order_name(&self) -> &'static str {
        "deglex"
    }

    /// Leading monomials, sorted; they generate the initial ideal.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().unwrap()).collect()
    }

    pub fn normal_form(&self, p: &ExtPoly<T>) -> ExtPoly<T> {
        LeadIndex::new(&self.elements, self.nvars).normal_form(&self.elements, p)
    }

    pub fn contains(&self, p: &ExtPoly<T>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_standard(&self, m: Monomial) -> bool {
        !self.elements.iter().any(|g| g.leading_monomial().unwrap().divides(m))
    }

    fn walk(&self, max_deg: usize, mut visit: impl FnMut(Monomial)) {
        if self.elements.iter().any(|g| g.leading_monomial() == Some(Monomial::ONE)) {
            return;
        }
        let mut by_max: Vec<Vec<Monomial>> = vec![Vec::new(); self.nvars];
        for l in self.leading_monomials() {
            by_max[l.max_var().unwrap()].push(l);
        }
        let mut stack = vec![(Monomial::ONE, 0usize)];
        while let Some((m, start)) = stack.pop() {
            visit(m);
            if m.degree() as usize >= max_deg {
                continue;
            }
            for v in (start..self.nvars).rev() {
                let next = m.union(Monomial::var(v));
                if by_max[v].iter().all(|l| !l.divides(next)) {
                    stack.push((next, v + 1));
                }
            }
        }
    }

    /// Standard monomials grouped by degree `0..=max_deg`, each group sorted.
    pub fn standard_monomials(&self, max_deg: usize) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); max_deg + 1];
        self.walk(max_deg, |m| out[m.degree() as usize].push(m));
        for g in &mut out {
            g.sort();
        }
        out
    }

    /// Number of standard monomials per degree, up to `truncation`.
    pub fn hilbert_series(&self, truncation: usize) -> TruncatedSeries {
        let mut counts = vec![0u64; truncation + 1];
        self.walk(truncation, |m| counts[m.degree() as usize] += 1);
        TruncatedSeries::from_coeffs(counts, truncation)
    }

    /// Certify that the ideal has a Gröbner basis of elements of degree at
    /// most two. The reduced basis is the minimal candidate, so it is
    /// returned flagged, or the smallest degree above two is reported.
    pub fn reduce_to_quadratic(&self) -> Result<Self> {
        let bad = self.elements.iter().filter_map(|g| g.degree()).filter(|&d| d > 2).min();
        match bad {
            Some(d) => Err(Error::NotQuadratic(d)),
            None => Ok(GroebnerBasis { reduced_to_quadratic: true, ..self.clone() }),
        }
    }

    /// Check the Buchberger criterion directly: every pair and self-overlap
    /// reduces to zero.
    pub fn verify(&self) -> bool {
        let n = self.elements.len();
        for i in 0..n {
            let li = self.elements[i].leading_monomial().unwrap();
            for v in li.vars() {
                if !self.contains(&self.elements[i].mul_term_left(Monomial::var(v), &T::one())) {
                    return false;
                }
            }
            for j in i + 1..n {
                let lj = self.elements[j].leading_monomial().unwrap();
                let l = li.union(lj);
                let s = &shifted(l.minus(li), &self.elements[i]) - &shifted(l.minus(lj), &self.elements[j]);
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = ExtPoly<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn v(i: usize) -> P {
        P::var(i)
    }

    /// ∂ of the triangle g0 g1 g2: g1g2 − g0g2 + g0g1.
    fn triangle() -> P {
        &(&(&v(1) * &v(2)) - &(&v(0) * &v(2))) + &(&v(0) * &v(1))
    }

    #[test]
    fn triangle_basis_and_normal_form() {
        let gb = buchberger(&[triangle()], 3, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(gb.leading_monomials(), vec![Monomial::from_vars([1, 2])]);
        let nf = gb.normal_form(&(&v(1) * &v(2)));
        assert_eq!(nf, &(&v(0) * &v(2)) - &(&v(0) * &v(1)));
        assert_eq!(gb.hilbert_series(3).coeffs(), &[1.into(), 3.into(), 2.into(), 0.into()]);
        assert!(gb.verify());
    }

    #[test]
    fn normal_form_is_idempotent_and_kills_ideal() {
        let gb = buchberger(&[triangle()], 4, DEFAULT_PAIR_CAP).unwrap();
        let f = &(&v(3) * &triangle()) + &(&v(2) * &v(3));
        let nf = gb.normal_form(&f);
        assert_eq!(gb.normal_form(&nf), nf);
        assert!(gb.contains(&(&triangle() * &v(3))));
    }

    #[test]
    fn trivial_ideals() {
        let gb = buchberger(&[v(0)], 1, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(gb.elements(), &[v(0)]);
        let empty = buchberger::<Rational>(&[], 3, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(empty.hilbert_series(3).coeffs(), &[1.into(), 3.into(), 3.into(), 1.into()]);
        let all = buchberger(&[v(0), v(1)], 2, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(all.standard_monomials(2), vec![vec![Monomial::ONE], vec![], vec![]]);
        let unit = buchberger(&[P::one()], 2, DEFAULT_PAIR_CAP).unwrap();
        assert!(unit.standard_monomials(2).iter().all(Vec::is_empty));
    }

    #[test]
    fn self_overlaps_are_needed() {
        // x0 x1 + x2 x3: multiplying by x1 gives x1 x2 x3, a new leading term
        let f = &(&v(0) * &v(1)) + &(&v(2) * &v(3));
        let gb = buchberger(&[f], 4, DEFAULT_PAIR_CAP).unwrap();
        assert!(gb.len() > 1);
        assert!(gb.verify());
        assert!(gb.reduce_to_quadratic().is_err());
    }

    #[test]
    fn inhomogeneous_generators_are_two_sided() {
        // f = x0 + x1 x2 ; f·x3 must lie in the ideal
        let f = &v(0) + &(&v(1) * &v(2));
        let gb = buchberger(&[f.clone()], 4, DEFAULT_PAIR_CAP).unwrap();
        assert!(gb.contains(&(&f * &v(3))));
        assert!(gb.contains(&(&v(3) * &f)));
    }

    #[test]
    fn pair_cap_is_enforced() {
        let f = &(&v(0) * &v(1)) + &(&v(2) * &v(3));
        assert!(matches!(buchberger(&[f], 4, 1), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn independent_of_generator_order() {
        let a = &(&v(0) * &v(1)) - &(&v(2) * &v(3)).scale(&q(2));
        let b = &(&v(1) * &v(2)) + &(&v(0) * &v(3));
        let g1 = buchberger(&[a.clone(), b.clone()], 4, DEFAULT_PAIR_CAP).unwrap();
        let g2 = buchberger(&[b, a], 4, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(g1, g2);
    }
}
