//! Sparse exact linear algebra over a [`Scalar`] field.
//!
//! Vectors are `BTreeMap<column, coefficient>` with no stored zeros. The
//! echelon form keeps one row per pivot, the pivot being the row's largest
//! column (the same convention as leading terms in a Gröbner basis).

use std::collections::BTreeMap;

use crate::Scalar;

pub type SparseVec<T> = BTreeMap<usize, T>;

/// `v += c * w`.
pub fn axpy<T: Scalar>(v: &mut SparseVec<T>, c: &T, w: &SparseVec<T>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in w {
        let add = c.clone() * x.clone();
        match v.get_mut(k) {
            Some(y) => {
                *y = y.clone() + add;
                if y.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(*k, add);
            }
        }
    }
}

pub fn scale<T: Scalar>(v: &mut SparseVec<T>, c: &T) {
    if c.is_zero() {
        v.clear();
        return;
    }
    for x in v.values_mut() {
        *x = x.clone() * c.clone();
    }
}

pub fn unit<T: Scalar>(k: usize) -> SparseVec<T> {
    let mut v = SparseVec::new();
    v.insert(k, T::one());
    v
}

/// Incrementally built row echelon form.
///
/// When `track` is on, every stored row remembers which combination of the
/// inserted vectors produced it, so vectors in the span can be written in
/// terms of the inserted ones.
#[derive(Debug, Clone)]
pub struct Echelon<T> {
    rows: BTreeMap<usize, SparseVec<T>>,
    combos: BTreeMap<usize, SparseVec<T>>,
    track: bool,
    inserted: usize,
}

impl<T: Scalar> Default for Echelon<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> Echelon<T> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new(), combos: BTreeMap::new(), track: false, inserted: 0 }
    }

    pub fn tracking() -> Self {
        Echelon { track: true, ..Self::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.rows.contains_key(&col)
    }

    pub fn row(&self, pivot: usize) -> Option<&SparseVec<T>> {
        self.rows.get(&pivot)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&usize, &SparseVec<T>)> {
        self.rows.iter()
    }

    /// Reduce `v` against the stored rows; returns the remainder and, when
    /// tracking, the combination of inserted vectors that was subtracted.
    fn reduce_tracked(&self, mut v: SparseVec<T>) -> (SparseVec<T>, SparseVec<T>) {
        let mut used = SparseVec::new();
        let mut bound = usize::MAX;
        loop {
            let next = v
                .range(..=bound)
                .rev()
                .find(|(k, _)| self.rows.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let neg = -c;
            axpy(&mut v, &neg, &self.rows[&k]);
            if self.track {
                axpy(&mut used, &neg, &self.combos[&k]);
            }
            if k == 0 {
                break;
            }
            bound = k - 1;
        }
        (v, used)
    }

    pub fn reduce(&self, v: SparseVec<T>) -> SparseVec<T> {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &SparseVec<T>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Insert a vector; returns its new pivot if it was independent. The
    /// vector gets id `inserted` for coordinate tracking either way.
    pub fn insert(&mut self, v: SparseVec<T>) -> Option<usize> {
        let id = self.inserted;
        self.inserted += 1;
        let (mut r, used) = self.reduce_tracked(v);
        let (&p, lead) = r.iter().next_back()?;
        let inv = T::one() / lead.clone();
        scale(&mut r, &inv);
        if self.track {
            // r = v + used  =>  r/lead = (e_id + used)/lead
            let mut combo = used;
            axpy(&mut combo, &T::one(), &unit(id));
            scale(&mut combo, &inv);
            self.combos.insert(p, combo);
        }
        self.rows.insert(p, r);
        Some(p)
    }

    /// Coordinates of `v` in terms of the inserted vectors, or `None` when
    /// `v` is not in their span. Requires tracking.
    pub fn coordinates(&self, v: &SparseVec<T>) -> Option<SparseVec<T>> {
        assert!(self.track, "coordinates need a tracking echelon");
        let (r, used) = self.reduce_tracked(v.clone());
        if !r.is_empty() {
            return None;
        }
        let mut out = used;
        scale(&mut out, &-T::one());
        Some(out)
    }

    /// Bring every row to reduced form: a row's non-pivot entries avoid all
    /// other pivots.
    pub fn fully_reduce(&mut self) {
        let keys: Vec<usize> = self.rows.keys().copied().collect();
        for p in keys {
            let mut row = self.rows.remove(&p).expect("pivot present");
            let mut combo = self.combos.remove(&p).unwrap_or_default();
            let lead = row.remove(&p).expect("pivot entry");
            let (tail, used) = self.reduce_tracked(row);
            row = tail;
            row.insert(p, lead);
            if self.track {
                axpy(&mut combo, &T::one(), &used);
                self.combos.insert(p, combo);
            }
            self.rows.insert(p, row);
        }
    }

    /// Basis of `{x : <row, x> = 0 for all rows}` inside columns `0..ncols`.
    /// Rows must be fully reduced.
    pub fn nullspace(&self, ncols: usize) -> Vec<SparseVec<T>> {
        let mut out = Vec::new();
        for f in (0..ncols).filter(|c| !self.rows.contains_key(c)) {
            let mut v = unit::<T>(f);
            for (&p, row) in &self.rows {
                if let Some(c) = row.get(&f) {
                    v.insert(p, -c.clone());
                }
            }
            out.push(v);
        }
        out
    }
}

/// Rank of a list of vectors.
pub fn rank<T: Scalar>(vectors: impl IntoIterator<Item = SparseVec<T>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// Whether two lists of vectors span the same subspace.
pub fn same_span<T: Scalar>(a: &[SparseVec<T>], b: &[SparseVec<T>]) -> bool {
    let mut ea = Echelon::new();
    for v in a {
        ea.insert(v.clone());
    }
    let mut eb = Echelon::new();
    for v in b {
        eb.insert(v.clone());
    }
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn v(entries: &[(usize, i64)]) -> SparseVec<Rational> {
        entries.iter().map(|&(k, c)| (k, q(c))).collect()
    }

    #[test]
    fn rank_and_dependence() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (1, 1)])).is_some());
        assert!(e.insert(v(&[(1, 1), (2, 1)])).is_some());
        assert!(e.insert(v(&[(0, 1), (2, 1)])).is_some());
        assert_eq!(e.insert(v(&[(0, 2), (1, 2)])), None);
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let mut e = Echelon::new();
        e.insert(v(&[(0, 1), (1, 2), (3, 1)]));
        e.insert(v(&[(1, 1), (2, -1)]));
        e.fully_reduce();
        let ns = e.nullspace(4);
        assert_eq!(ns.len(), 2);
        for n in &ns {
            for (_, row) in e.rows() {
                let dot: Rational = row.iter().filter_map(|(k, c)| n.get(k).map(|d| c * d)).sum();
                assert_eq!(dot, q(0));
            }
        }
    }

    #[test]
    fn coordinates_recover_combination() {
        let mut e = Echelon::tracking();
        let a = v(&[(0, 1), (2, 3)]);
        let b = v(&[(1, 2), (2, 1)]);
        e.insert(a.clone());
        e.insert(b.clone());
        let mut target = a.clone();
        axpy(&mut target, &q(-5), &b);
        let c = e.coordinates(&target).unwrap();
        assert_eq!(c, v(&[(0, 1), (1, -5)]));
        assert!(e.coordinates(&v(&[(0, 1)])).is_none());
    }

    #[test]
    fn span_comparison() {
        let a = vec![v(&[(0, 1)]), v(&[(1, 1)])];
        let b = vec![v(&[(0, 1), (1, 1)]), v(&[(0, 1), (1, -1)])];
        assert!(same_span(&a, &b));
        assert!(!same_span(&a, &[v(&[(2, 1)])]));
    }
}
