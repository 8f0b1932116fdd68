//! Hilbert series of the homogeneous quadratic dual `A^! = T(V*)/(J^⊥)`.
//!
//! `J^⊥` is row reduced under a word order; its leading words are forbidden
//! two-letter factors and the normal words (words avoiding them) span
//! `A^!`. They form a basis exactly when every overlap `abc` of leading
//! words `ab`, `bc` resolves, which is checked before any counting. Counting
//! normal words is then a transfer-matrix computation, bigraded by length
//! and weight.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::QlaPresentation;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::series::TruncatedSeries;
use crate::Scalar;

/// Degree-lexicographic word orders: letters compared from the left or from
/// the right, with the letter order as given or reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordOrder {
    Left { reversed: bool },
    Right { reversed: bool },
}

impl WordOrder {
    pub const ALL: [WordOrder; 4] = [
        WordOrder::Left { reversed: true },
        WordOrder::Right { reversed: true },
        WordOrder::Left { reversed: false },
        WordOrder::Right { reversed: false },
    ];

    /// Rank of a word among words of its length.
    fn rank(self, word: &[usize], n: usize) -> usize {
        let (rev, right) = match self {
            WordOrder::Left { reversed } => (reversed, false),
            WordOrder::Right { reversed } => (reversed, true),
        };
        let letter = |a: usize| if rev { n - 1 - a } else { a };
        let mut r = 0;
        if right {
            for &a in word.iter().rev() {
                r = r * n + letter(a);
            }
        } else {
            for &a in word {
                r = r * n + letter(a);
            }
        }
        r
    }

    fn unrank(self, mut r: usize, len: usize, n: usize) -> Vec<usize> {
        let (rev, right) = match self {
            WordOrder::Left { reversed } => (reversed, false),
            WordOrder::Right { reversed } => (reversed, true),
        };
        let mut word = vec![0; len];
        for i in 0..len {
            let digit = r % n;
            r /= n;
            let a = if rev { n - 1 - digit } else { digit };
            // the last digit processed by `rank` is the least significant
            let pos = if right { i } else { len - 1 - i };
            word[pos] = a;
        }
        word
    }
}

impl fmt::Display for WordOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordOrder::Left { reversed } => write!(f, "deglex-left{}", if *reversed { "-reversed" } else { "" }),
            WordOrder::Right { reversed } => write!(f, "deglex-right{}", if *reversed { "-reversed" } else { "" }),
        }
    }
}

/// Normal-word description of `A^!` and its bigraded dimensions.
#[derive(Debug, Clone)]
pub struct DualHilbert {
    pub order: WordOrder,
    pub leading_words: Vec<(usize, usize)>,
    /// Number of overlaps `abc` checked to resolve.
    pub overlaps_checked: usize,
    /// `table[k][w]`: normal words of length `k` and weight `w`.
    pub table: Vec<Vec<BigInt>>,
}

impl DualHilbert {
    pub fn max_degree(&self) -> usize {
        self.table.len() - 1
    }

    /// `Σ_k dim A^!_k t^k`.
    pub fn series(&self, truncation: usize) -> TruncatedSeries {
        let coeffs: Vec<BigInt> = self.table.iter().map(|row| row.iter().sum()).collect();
        TruncatedSeries::from_coeffs(coeffs, truncation)
    }

    /// `Σ_w dim A^!_{(w)} t^w` over all lengths; exact up to `t^{max_degree}`
    /// since every generator has weight at least one.
    pub fn weight_series(&self, truncation: usize) -> TruncatedSeries {
        let top = truncation.min(self.max_degree());
        let mut s = TruncatedSeries::zero(truncation);
        for row in &self.table {
            for (w, c) in row.iter().enumerate().take(top + 1) {
                s.add_at(w, c.clone());
            }
        }
        s
    }
}

type Rules<T> = HashMap<(usize, usize), Vec<((usize, usize), T)>>;

/// Compute the dual Hilbert series up to `max_degree`, trying each
/// [`WordOrder`] until one has resolvable overlaps.
pub fn dual_hilbert<T: Scalar>(qla: &QlaPresentation<T>, max_degree: usize) -> Result<DualHilbert> {
    for order in WordOrder::ALL {
        if let Some(h) = dual_hilbert_in(qla, order, max_degree) {
            return Ok(h);
        }
    }
    Err(Error::invariant("dual normal words", "no word order gives a quadratic Gröbner basis for J^perp"))
}

/// Same, for one fixed order; `None` when some overlap does not resolve.
pub fn dual_hilbert_in<T: Scalar>(qla: &QlaPresentation<T>, order: WordOrder, max_degree: usize) -> Option<DualHilbert> {
    let n = qla.dim();
    if n == 0 {
        let mut table = vec![vec![BigInt::from(1)]];
        table.extend((0..max_degree).map(|_| vec![BigInt::zero()]));
        return Some(DualHilbert { order, leading_words: vec![], overlaps_checked: 0, table });
    }
    let mut ech = Echelon::<T>::new();
    for x in qla.jperp() {
        let v: SparseVec<T> = x.iter().map(|(&c, a)| (order.rank(&[c / n, c % n], n), a.clone())).collect();
        ech.insert(v);
    }
    ech.fully_reduce();
    let mut rules: Rules<T> = HashMap::new();
    for (&p, row) in ech.rows() {
        let lead = order.unrank(p, 2, n);
        let lead_coeff = row[&p].clone();
        let tail = row
            .iter()
            .filter(|(&c, _)| c != p)
            .map(|(&c, a)| {
                let w = order.unrank(c, 2, n);
                ((w[0], w[1]), -a.clone() / lead_coeff.clone())
            })
            .collect();
        rules.insert((lead[0], lead[1]), tail);
    }
    let mut by_first: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(a, b) in rules.keys() {
        by_first.entry(a).or_default().push(b);
    }
    let mut overlaps = 0;
    let mut leads: Vec<(usize, usize)> = rules.keys().copied().collect();
    leads.sort_unstable();
    for &(a, b) in &leads {
        for &c in by_first.get(&b).map(Vec::as_slice).unwrap_or(&[]) {
            overlaps += 1;
            let mut left = BTreeMap::new();
            for ((u, v), k) in &rules[&(a, b)] {
                add(&mut left, order.rank(&[*u, *v, c], n), k.clone());
            }
            let mut right = BTreeMap::new();
            for ((u, v), k) in &rules[&(b, c)] {
                add(&mut right, order.rank(&[a, *u, *v], n), k.clone());
            }
            if reduce3(left, &rules, order, n) != reduce3(right, &rules, order, n) {
                return None;
            }
        }
    }
    let forbidden: HashSet<(usize, usize)> = rules.keys().copied().collect();
    let table = count_words(n, qla.weights(), &forbidden, max_degree);
    Some(DualHilbert { order, leading_words: leads, overlaps_checked: overlaps, table })
}

fn add<T: Scalar>(p: &mut BTreeMap<usize, T>, k: usize, c: T) {
    let e = p.entry(k).or_insert_with(T::zero);
    *e = e.clone() + c;
    if e.is_zero() {
        p.remove(&k);
    }
}

/// Normal form of a length-3 polynomial under the rewriting rules.
fn reduce3<T: Scalar>(mut p: BTreeMap<usize, T>, rules: &Rules<T>, order: WordOrder, n: usize) -> BTreeMap<usize, T> {
    let mut done = BTreeMap::new();
    while let Some((r, c)) = p.pop_last() {
        let w = order.unrank(r, 3, n);
        if let Some(tail) = rules.get(&(w[0], w[1])) {
            for ((u, v), k) in tail {
                add(&mut p, order.rank(&[*u, *v, w[2]], n), c.clone() * k.clone());
            }
        } else if let Some(tail) = rules.get(&(w[1], w[2])) {
            for ((u, v), k) in tail {
                add(&mut p, order.rank(&[w[0], *u, *v], n), c.clone() * k.clone());
            }
        } else {
            done.insert(r, c);
        }
    }
    done
}

fn count_words(n: usize, weights: &[u32], forbidden: &HashSet<(usize, usize)>, max_degree: usize) -> Vec<Vec<BigInt>> {
    let max_w = weights.iter().copied().max().unwrap_or(1) as usize;
    let width = max_degree * max_w + 1;
    let mut table = vec![vec![BigInt::zero(); width]; max_degree + 1];
    table[0][0] = BigInt::from(1);
    if max_degree == 0 {
        return table;
    }
    // cur[a][w]: normal words of the current length ending in `a`
    let mut cur = vec![vec![BigInt::zero(); width]; n];
    for a in 0..n {
        cur[a][weights[a] as usize] = BigInt::from(1);
    }
    for k in 1..=max_degree {
        for row in &cur {
            for (w, c) in row.iter().enumerate() {
                table[k][w] += c;
            }
        }
        if k == max_degree {
            break;
        }
        let mut next = vec![vec![BigInt::zero(); width]; n];
        for a in 0..n {
            for b in (0..n).filter(|&b| !forbidden.contains(&(a, b))) {
                let wb = weights[b] as usize;
                for w in 0..width - wb {
                    if !cur[a][w].is_zero() {
                        let c = cur[a][w].clone();
                        next[b][w + wb] += c;
                    }
                }
            }
        }
        cur = next;
    }
    table
}

/// `dim A^!_k` for `k ≤ max_degree` by brute-force linear algebra in
/// `(V*)^{⊗k}`; only for small `n` and `k`.
pub fn dual_dims_explicit<T: Scalar>(qla: &QlaPresentation<T>, max_degree: usize) -> Vec<usize> {
    let n = qla.dim();
    let mut dims = vec![1];
    for k in 1..=max_degree {
        let total = n.pow(k as u32);
        if k < 2 {
            dims.push(total);
            continue;
        }
        let mut ech = Echelon::<T>::new();
        for i in 0..=k - 2 {
            let (pre, post) = (n.pow(i as u32), n.pow((k - 2 - i) as u32));
            for u in 0..pre {
                for w in 0..post {
                    for x in qla.jperp() {
                        let v: SparseVec<T> = x.iter().map(|(&c, a)| ((u * n * n + c) * post + w, a.clone())).collect();
                        ech.insert(v);
                    }
                }
            }
        }
        dims.push(total - ech.rank());
    }
    dims
}

#[cfg(test)]
mod tests {
    use super::super::{dualize, QuadraticData};
    use super::*;
    use crate::extalg::{ExtPoly, VarTable};
    use crate::models::DgaPresentation;
    use crate::Rational;

    fn qla_of(p: &DgaPresentation<Rational>) -> QlaPresentation<Rational> {
        dualize(&QuadraticData::from_presentation(p).unwrap()).unwrap()
    }

    fn free_exterior(n: usize) -> DgaPresentation<Rational> {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        DgaPresentation::new(VarTable::new(names).unwrap(), vec![1; n], vec![], vec![ExtPoly::zero(); n]).unwrap()
    }

    #[test]
    fn rank_round_trip() {
        for order in WordOrder::ALL {
            for r in 0..27 {
                assert_eq!(order.rank(&order.unrank(r, 3, 3), 3), r);
            }
        }
    }

    #[test]
    fn exterior_dual_is_polynomial() {
        // Λ(x, y) has dual ℚ[a, b]: dims k + 1
        let h = dual_hilbert(&qla_of(&free_exterior(2)), 6).unwrap();
        let s: Vec<i64> = h.series(6).coeffs().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(s, vec![1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(dual_dims_explicit(&qla_of(&free_exterior(2)), 4), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn three_variables_match_explicit() {
        let h = dual_hilbert(&qla_of(&free_exterior(3)), 4).unwrap();
        let s: Vec<usize> = h.series(4).coeffs().iter().map(|c| c.try_into().unwrap()).collect();
        assert_eq!(s, dual_dims_explicit(&qla_of(&free_exterior(3)), 4));
        assert_eq!(s, vec![1, 3, 6, 10, 15]);
    }
}
