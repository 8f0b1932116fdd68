//! Truncated integer power series.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `c_0 + c_1 t + … + c_N t^N`, everything above `t^N` discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(truncation: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigInt::zero(); truncation + 1] }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Series from the given coefficients, padded or cut to `truncation`.
    pub fn from_coeffs<I, C>(coeffs: I, truncation: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(truncation);
        for (k, c) in coeffs.into_iter().enumerate().take(truncation + 1) {
            s.coeffs[k] = c.into();
        }
        s
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn set(&mut self, k: usize, c: impl Into<BigInt>) {
        if k < self.coeffs.len() {
            self.coeffs[k] = c.into();
        }
    }

    pub fn add_at(&mut self, k: usize, c: impl Into<BigInt>) {
        if k < self.coeffs.len() {
            self.coeffs[k] += c.into();
        }
    }

    pub fn retruncate(&self, truncation: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), truncation)
    }

    /// `f(t) ↦ f(-t)`.
    pub fn alternate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Multiplicative inverse; `None` unless the constant term is ±1.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = &self.coeffs[0];
        if !(c0.abs().is_one()) {
            return None;
        }
        let n = self.truncation();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = c0.clone();
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &inv.coeffs[k - j];
            }
            inv.coeffs[k] = -(acc * c0);
        }
        Some(inv)
    }

    /// `(1 - t^w)^e`, truncated; `e` may be negative.
    pub fn one_minus_power(w: usize, e: i64, truncation: usize) -> Self {
        assert!(w >= 1);
        let base = {
            let mut s = Self::one(truncation);
            if w <= truncation {
                s.coeffs[w] = -BigInt::one();
            }
            s
        };
        let base = if e < 0 { base.inverse().expect("unit constant term") } else { base };
        let mut out = Self::one(truncation);
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        out
    }

    /// `Π_w (1 − t^w)^{−dims[w−1]}`: the Hilbert series of the enveloping
    /// algebra of a graded Lie algebra with these weight dimensions.
    pub fn pbw_product(dims: &[usize], truncation: usize) -> Self {
        let mut out = Self::one(truncation);
        for (i, &d) in dims.iter().enumerate() {
            out = &out * &Self::one_minus_power(i + 1, -(d as i64), truncation);
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// First degree where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.truncation().min(other.truncation());
        (0..=n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.truncation().min(rhs.truncation());
        TruncatedSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect() }
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.truncation().min(rhs.truncation());
        TruncatedSeries { coeffs: (0..=n).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect() }
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.truncation().min(rhs.truncation());
        let mut out = TruncatedSeries::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    /// Coefficient list, e.g. `[1, 3, 2, 0]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_geometric() {
        let s = TruncatedSeries::from_coeffs([1, -1], 6);
        let inv = s.inverse().unwrap();
        assert_eq!(inv, TruncatedSeries::from_coeffs([1; 7], 6));
        assert!((&s * &inv).is_one());
    }

    #[test]
    fn k3_dual_series() {
        // 1 / (1 - 3t + 2t^2) = 1/((1-t)(1-2t)), coefficients 2^{k+1} - 1
        let h = TruncatedSeries::from_coeffs([1, 3, 2], 10);
        let dual = h.alternate().inverse().unwrap();
        let expect: Vec<i64> = (0..=10).map(|k| (1i64 << (k + 1)) - 1).collect();
        assert_eq!(dual, TruncatedSeries::from_coeffs(expect, 10));
    }

    #[test]
    fn one_minus_power_negative_exponent() {
        let s = TruncatedSeries::one_minus_power(1, -2, 5);
        assert_eq!(s, TruncatedSeries::from_coeffs([1, 2, 3, 4, 5, 6], 5));
        let s = TruncatedSeries::one_minus_power(2, 1, 5);
        assert_eq!(s, TruncatedSeries::from_coeffs([1, 0, -1], 5));
    }

    #[test]
    fn non_unit_constant_has_no_inverse() {
        assert!(TruncatedSeries::from_coeffs([2, 1], 3).inverse().is_none());
    }
}
