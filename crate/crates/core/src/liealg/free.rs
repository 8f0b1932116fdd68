//! Free Lie algebras: Lyndon words, their standard bracketing, and the Witt
//! dimension formula.

use std::fmt;

/// Bracketed Lie monomial over generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LieWord {
    Letter(usize),
    Bracket(Box<LieWord>, Box<LieWord>),
}

impl LieWord {
    /// Render with generator names: `[a, [a, b]]`.
    pub fn render(&self, names: &[String]) -> String {
        match self {
            LieWord::Letter(i) => names[*i].clone(),
            LieWord::Bracket(x, y) => format!("[{}, {}]", x.render(names), y.render(names)),
        }
    }

    /// Expansion in the tensor algebra as `(word, coefficient)` pairs.
    pub fn expand(&self) -> Vec<(Vec<usize>, i64)> {
        match self {
            LieWord::Letter(i) => vec![(vec![*i], 1)],
            LieWord::Bracket(x, y) => {
                let (ex, ey) = (x.expand(), y.expand());
                let mut out = Vec::new();
                for (u, a) in &ex {
                    for (v, b) in &ey {
                        out.push(([u.as_slice(), v.as_slice()].concat(), a * b));
                        out.push(([v.as_slice(), u.as_slice()].concat(), -a * b));
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for LieWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieWord::Letter(i) => write!(f, "{i}"),
            LieWord::Bracket(x, y) => write!(f, "[{x}, {y}]"),
        }
    }
}

/// Lyndon words of length `len` over `k` letters, in lexicographic order
/// (Duval's algorithm).
pub fn lyndon_words(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || len == 0 {
        return out;
    }
    let mut w = vec![0usize];
    while !w.is_empty() {
        if w.len() == len {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < len {
            let c = w[w.len() - m];
            w.push(c);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        if let Some(last) = w.last_mut() {
            *last += 1;
        }
    }
    out
}

fn is_lyndon(w: &[usize]) -> bool {
    (1..w.len()).all(|i| w[i..] > *w)
}

/// Standard bracketing: `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_bracketing(w: &[usize]) -> LieWord {
    if w.len() == 1 {
        return LieWord::Letter(w[0]);
    }
    let split = (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("a letter is Lyndon");
    LieWord::Bracket(Box::new(standard_bracketing(&w[..split])), Box::new(standard_bracketing(&w[split..])))
}

/// Basis of the degree-`len` part of the free Lie algebra on `k` generators.
pub fn free_lie_basis(k: usize, len: usize) -> Vec<LieWord> {
    lyndon_words(k, len).iter().map(|w| standard_bracketing(w)).collect()
}

fn mobius(mut n: usize) -> i64 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Witt's formula `(1/n) Σ_{d | n} μ(d) k^{n/d}`.
pub fn witt_dimension(k: usize, n: usize) -> u128 {
    let mut s: i128 = 0;
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        s += mobius(d) as i128 * (k as i128).pow((n / d) as u32);
    }
    (s / n as i128) as u128
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank;
    use crate::Rational;
    use std::collections::HashMap;

    #[test]
    fn two_generators_match_witt() {
        let dims: Vec<usize> = (1..=5).map(|n| free_lie_basis(2, n).len()).collect();
        assert_eq!(dims, vec![2, 1, 2, 3, 6]);
        for n in 1..=7 {
            assert_eq!(lyndon_words(2, n).len() as u128, witt_dimension(2, n));
            assert_eq!(lyndon_words(3, n).len() as u128, witt_dimension(3, n));
        }
    }

    #[test]
    fn small_cases() {
        assert!(free_lie_basis(1, 2).is_empty());
        assert_eq!(free_lie_basis(3, 2).len(), 3);
        assert_eq!(standard_bracketing(&[0, 0, 1]).to_string(), "[0, [0, 1]]");
    }

    #[test]
    fn bracketings_are_independent() {
        for n in 1..=5 {
            let mut index = HashMap::new();
            let vecs: Vec<_> = free_lie_basis(3, n)
                .iter()
                .map(|w| {
                    let mut v = std::collections::BTreeMap::new();
                    for (word, c) in w.expand() {
                        let next = index.len();
                        let col = *index.entry(word).or_insert(next);
                        let e = v.entry(col).or_insert_with(|| Rational::from_integer(0.into()));
                        *e += Rational::from_integer(c.into());
                    }
                    v.retain(|_, c: &mut Rational| *c != Rational::from_integer(0.into()));
                    v
                })
                .collect();
            assert_eq!(rank(vecs.clone()), vecs.len());
        }
    }
}
