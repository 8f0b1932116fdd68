use std::cmp::Ordering;
use std::fmt;

/// Square-free monomial in at most 128 odd variables, stored as a bitset over
/// variable ranks. The canonical form lists variables in increasing rank and
/// carries sign `+1`.
///
/// Ordering is degree-lexicographic: higher degree first, then the monomial
/// containing the largest differing variable is larger.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(i: usize) -> Self {
        assert!(i < 128, "variable rank out of range");
        Monomial(1 << i)
    }

    pub fn from_vars(vars: impl IntoIterator<Item = usize>) -> Self {
        vars.into_iter().fold(Monomial::ONE, |m, i| Monomial(m.0 | Monomial::var(i).0))
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn contains(self, i: usize) -> bool {
        i < 128 && self.0 >> i & 1 == 1
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Monomial) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    /// `self` with the variables of `other` removed.
    pub fn minus(self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }

    /// Largest variable rank, if any.
    pub fn max_var(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Variable ranks in increasing order.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut m = self.0;
        std::iter::from_fn(move || {
            if m == 0 {
                return None;
            }
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        })
    }

    /// Product `self * other` as a canonical monomial and a sign flag
    /// (`true` for −1), or `None` if the variables overlap.
    pub fn mul(self, other: Monomial) -> Option<(Monomial, bool)> {
        if !self.is_disjoint(other) {
            return None;
        }
        // count pairs (i in self, j in other) with i > j
        let mut inversions = 0u32;
        for j in other.vars() {
            let above = if j == 127 { 0 } else { self.0 >> (j + 1) };
            inversions += above.count_ones();
        }
        Some((self.union(other), inversions % 2 == 1))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.vars().map(|i| format!("v{i}")).collect();
        write!(f, "{}", parts.join("^"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_signs() {
        let (x, y) = (Monomial::var(0), Monomial::var(1));
        assert_eq!(x.mul(y), Some((Monomial(0b11), false)));
        assert_eq!(y.mul(x), Some((Monomial(0b11), true)));
        assert_eq!(x.mul(x), None);
        // (v0 v2) * v1 = - v0 v1 v2
        assert_eq!(Monomial::from_vars([0, 2]).mul(Monomial::var(1)), Some((Monomial(0b111), true)));
        assert_eq!(Monomial::var(127).mul(Monomial::var(0)).unwrap().1, true);
    }

    #[test]
    fn deglex_prefers_large_variables() {
        let a = Monomial::from_vars([1, 2]);
        let b = Monomial::from_vars([0, 2]);
        let c = Monomial::from_vars([0, 1]);
        assert!(a > b && b > c);
        assert!(Monomial::var(0) < c);
        assert!(Monomial::ONE < Monomial::var(0));
    }
}
