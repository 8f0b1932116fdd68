//! Normal forms in `U(L) = T(V*)/(x − φ(x) : x ∈ J^⊥)`.
//!
//! The quadratic parts are row reduced under a degree-lexicographic word
//! order; each leading two-letter word becomes a rewriting rule whose right
//! side has smaller quadratic words and the linear part `φ`. The rules are
//! accepted only if every overlap `abc` resolves, so normal words form a
//! basis of `U(L)` and normal forms are canonical.

use std::collections::{BTreeMap, HashMap};

use crate::duality::{LiePresentation, WordOrder};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::Scalar;

/// Sort key of a word: length first, then letters in the order's direction.
pub type WordKey = (usize, Vec<usize>);

/// Element of `U(L)` in normal form, keyed by [`WordKey`].
pub type UElem<T> = BTreeMap<WordKey, T>;

#[derive(Debug, Clone)]
pub struct Enveloping<T> {
    n: usize,
    order: WordOrder,
    weights: Vec<u32>,
    /// Leading key of a two-letter word ↦ its replacement.
    rules: HashMap<Vec<usize>, Vec<(WordKey, T)>>,
}

impl<T: Scalar> Enveloping<T> {
    /// Rewriting system for `qla`, using the first order whose overlaps
    /// resolve.
    pub fn new(lp: &LiePresentation<T>) -> Result<Self> {
        for order in WordOrder::ALL {
            let u = Self::with_order(lp, order);
            if u.overlaps_resolve() {
                return Ok(u);
            }
        }
        Err(Error::invariant("enveloping algebra", "no word order gives a confluent rewriting system"))
    }

    pub fn with_order(lp: &LiePresentation<T>, order: WordOrder) -> Self {
        let n = lp.dim();
        let mut u = Enveloping { n, order, weights: lp.weights().to_vec(), rules: HashMap::new() };
        // echelon over the key order: column = rank of the two-letter key
        let col = |k: &[usize]| k[0] * n + k[1];
        // quadratic words sit above the linear ones, in key order
        let mut ech = Echelon::<T>::new();
        let offset = n;
        for r in lp.relations() {
            // [a_k, a_l] = a_k a_l − a_l a_k
            let mut v: SparseVec<T> = SparseVec::new();
            for (&(k, l), a) in &r.bracket {
                v.insert(offset + col(&u.key_of(&[k, l]).1), a.clone());
                v.insert(offset + col(&u.key_of(&[l, k]).1), T::zero() - a.clone());
            }
            for (&g, a) in &r.linear {
                v.insert(u.key_of(&[g]).1[0], T::zero() - a.clone());
            }
            ech.insert(v);
        }
        ech.fully_reduce();
        for (&p, row) in ech.rows() {
            if p < offset {
                // a purely linear relation cannot come from a Lie relation
                // with nonzero bracket part
                continue;
            }
            let lead = row[&p].clone();
            let lead_key = vec![(p - offset) / n, (p - offset) % n];
            let tail = row
                .iter()
                .filter(|(&c, _)| c != p)
                .map(|(&c, a)| {
                    let key = if c >= offset { (2, vec![(c - offset) / n, (c - offset) % n]) } else { (1, vec![c]) };
                    (key, T::zero() - a.clone() / lead.clone())
                })
                .collect();
            u.rules.insert(lead_key, tail);
        }
        u
    }

    pub fn order(&self) -> WordOrder {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn letter(&self, a: usize) -> usize {
        match self.order {
            WordOrder::Left { reversed } | WordOrder::Right { reversed } if reversed => self.n - 1 - a,
            _ => a,
        }
    }

    /// Key of a word given in generator indices.
    pub fn key_of(&self, word: &[usize]) -> WordKey {
        let mut k: Vec<usize> = word.iter().map(|&a| self.letter(a)).collect();
        if matches!(self.order, WordOrder::Right { .. }) {
            k.reverse();
        }
        (word.len(), k)
    }

    /// Generator indices of a key.
    pub fn word_of(&self, key: &WordKey) -> Vec<usize> {
        let mut w: Vec<usize> = key.1.iter().map(|&a| self.letter(a)).collect();
        if matches!(self.order, WordOrder::Right { .. }) {
            w.reverse();
        }
        w
    }

    pub fn weight_of(&self, key: &WordKey) -> u32 {
        self.word_of(key).iter().map(|&a| self.weights[a]).sum()
    }

    /// Leading words of the rules, as generator index pairs.
    pub fn leading_words(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .rules
            .keys()
            .map(|k| {
                let w = self.word_of(&(2, k.clone()));
                (w[0], w[1])
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Position of a reducible factor in a key, if any.
    fn reducible_at(&self, key: &[usize]) -> Option<usize> {
        (0..key.len().saturating_sub(1)).find(|&i| self.rules.contains_key(&key[i..i + 2]))
    }

    /// Normal form.
    pub fn reduce(&self, mut p: UElem<T>) -> UElem<T> {
        let mut done = UElem::new();
        while let Some((key, c)) = p.pop_last() {
            let Some(i) = self.reducible_at(&key.1) else {
                done.insert(key, c);
                continue;
            };
            for ((len, mid), k) in &self.rules[&key.1[i..i + 2]] {
                let mut w = key.1[..i].to_vec();
                w.extend_from_slice(mid);
                w.extend_from_slice(&key.1[i + 2..]);
                add(&mut p, (key.0 - 2 + len, w), c.clone() * k.clone());
            }
        }
        done
    }

    /// Generator `g` as an element.
    pub fn generator(&self, g: usize) -> UElem<T> {
        let mut p = UElem::new();
        p.insert(self.key_of(&[g]), T::one());
        self.reduce(p)
    }

    /// Product in normal form.
    pub fn mul(&self, a: &UElem<T>, b: &UElem<T>) -> UElem<T> {
        let right = matches!(self.order, WordOrder::Right { .. });
        let mut p = UElem::new();
        for ((la, ka), ca) in a {
            for ((lb, kb), cb) in b {
                // keys store words reversed for right orders
                let k = if right { [kb.as_slice(), ka.as_slice()].concat() } else { [ka.as_slice(), kb.as_slice()].concat() };
                add(&mut p, (la + lb, k), ca.clone() * cb.clone());
            }
        }
        self.reduce(p)
    }

    /// `ab − ba`.
    pub fn commutator(&self, a: &UElem<T>, b: &UElem<T>) -> UElem<T> {
        let mut p = self.mul(a, b);
        for (k, c) in self.mul(b, a) {
            add(&mut p, k, T::zero() - c);
        }
        p
    }

    /// Every overlap of two rules resolves to the same normal form.
    pub fn overlaps_resolve(&self) -> bool {
        let mut by_first: HashMap<usize, Vec<usize>> = HashMap::new();
        for k in self.rules.keys() {
            by_first.entry(k[0]).or_default().push(k[1]);
        }
        for k in self.rules.keys() {
            for &c in by_first.get(&k[1]).map(Vec::as_slice).unwrap_or(&[]) {
                let (a, b) = (k[0], k[1]);
                let mut left = UElem::new();
                for ((len, mid), coef) in &self.rules[&vec![a, b]] {
                    let mut w = mid.clone();
                    w.push(c);
                    add(&mut left, (len + 1, w), coef.clone());
                }
                let mut right = UElem::new();
                for ((len, mid), coef) in &self.rules[&vec![b, c]] {
                    let mut w = vec![a];
                    w.extend_from_slice(mid);
                    add(&mut right, (len + 1, w), coef.clone());
                }
                if self.reduce(left) != self.reduce(right) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn add<T: Scalar>(p: &mut UElem<T>, k: WordKey, c: T) {
    let e = p.entry(k.clone()).or_insert_with(T::zero);
    *e = e.clone() + c;
    if e.is_zero() {
        p.remove(&k);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::duality::{dualize, QuadraticData};
    use crate::extalg::{ExtPoly, VarTable};
    use crate::models::DgaPresentation;
    use crate::Rational;

    fn punctured() -> Enveloping<Rational> {
        let vars = VarTable::new(["x", "y", "g"]).unwrap();
        let v = |i| ExtPoly::<Rational>::var(i);
        let p = DgaPresentation::new(vars, vec![1, 1, 2], vec![&v(0) * &v(2), &v(1) * &v(2)], vec![ExtPoly::zero(), ExtPoly::zero(), &v(0) * &v(1)])
            .unwrap();
        Enveloping::new(&dualize(&QuadraticData::from_presentation(&p).unwrap()).unwrap().to_lie_presentation().unwrap()).unwrap()
    }

    #[test]
    fn commutator_of_a_and_b_is_c() {
        let u = punctured();
        let (a, b, c) = (u.generator(0), u.generator(1), u.generator(2));
        assert_eq!(u.commutator(&a, &b), c);
        assert_eq!(u.leading_words().len(), 1);
    }

    #[test]
    fn associativity_on_samples() {
        let u = punctured();
        let g: Vec<_> = (0..3).map(|i| u.generator(i)).collect();
        for x in &g {
            for y in &g {
                for z in &g {
                    assert_eq!(u.mul(&u.mul(x, y), z), u.mul(x, &u.mul(y, z)));
                }
            }
        }
    }
}
