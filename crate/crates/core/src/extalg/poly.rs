use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use super::Monomial;
use crate::error::{Error, Result};
use crate::Scalar;

/// Ordered variable names; a variable's rank is its position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

impl VarTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > 128 {
            return Err(Error::TooManyVariables(names.len()));
        }
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(Error::InvalidGraph(format!("bad variable name `{n}`")));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate variable `{n}`")));
            }
        }
        Ok(VarTable { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn monomial_name(&self, m: Monomial) -> String {
        if m == Monomial::ONE {
            return "1".into();
        }
        m.vars().map(|i| self.names[i].as_str()).collect::<Vec<_>>().join("^")
    }
}

/// Element of an exterior algebra: a sparse map from canonical monomials to
/// nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtPoly<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Default for ExtPoly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> ExtPoly<T> {
    pub fn zero() -> Self {
        ExtPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::term(Monomial::ONE, T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), T::one())
    }

    pub fn term(m: Monomial, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// Product of the variables in the given order (with the resulting sign).
    pub fn product_of_vars(vars: &[usize]) -> Self {
        vars.iter().fold(Self::one(), |acc, &v| &acc * &Self::var(v))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = x.clone() + c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> T {
        self.terms.get(&m).cloned().unwrap_or_else(T::zero)
    }

    /// Leading (largest) monomial and its coefficient.
    pub fn leading(&self) -> Option<(Monomial, &T)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next_back().copied()
    }

    /// Top degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        ExtPoly { terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Even part minus odd part; `f·v = v·conj(f)` for a variable `v`.
    pub fn parity_conjugate(&self) -> Self {
        self.map_coeffs(|m, c| if m.degree() % 2 == 1 { -c.clone() } else { c.clone() })
    }

    pub fn map_coeffs(&self, f: impl Fn(Monomial, &T) -> T) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(*m, c))))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map_coeffs(|_, x| x.clone() * c.clone())
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => {
                let inv = T::one() / c.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// `c · m · self`.
    pub fn mul_term_left(&self, m: Monomial, c: &T) -> Self {
        let mut out = BTreeMap::new();
        for (u, x) in &self.terms {
            if let Some((w, neg)) = m.mul(*u) {
                let v = x.clone() * c.clone();
                out.insert(w, if neg { -v } else { v });
            }
        }
        ExtPoly { terms: out }
    }

    /// Union of all variables that occur.
    pub fn support(&self) -> Monomial {
        self.terms.keys().fold(Monomial::ONE, |a, m| a.union(*m))
    }

    /// Error unless every variable has rank below `nvars`.
    pub fn check_vars(&self, nvars: usize) -> Result<()> {
        match self.support().max_var() {
            Some(v) if v >= nvars => Err(Error::VarTableMismatch),
            _ => Ok(()),
        }
    }

    /// Product that first checks both factors against a variable table size.
    pub fn multiply(&self, other: &Self, nvars: usize) -> Result<Self> {
        self.check_vars(nvars)?;
        other.check_vars(nvars)?;
        Ok(self * other)
    }

    /// Substitute each variable by a polynomial of degree one (or zero);
    /// variables without an image are kept. Images must be odd or constant so
    /// that the substitution respects the exterior relations.
    pub fn substitute(&self, images: &HashMap<usize, ExtPoly<T>>) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut prod = Self::constant(c.clone());
            for v in m.vars() {
                let img = images.get(&v).cloned().unwrap_or_else(|| Self::var(v));
                prod = &prod * &img;
            }
            out = &out + &prod;
        }
        out
    }
}

impl<T: Scalar> Add for &ExtPoly<T> {
    type Output = ExtPoly<T>;
    fn add(self, rhs: &ExtPoly<T>) -> ExtPoly<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &ExtPoly<T> {
    type Output = ExtPoly<T>;
    fn sub(self, rhs: &ExtPoly<T>) -> ExtPoly<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &ExtPoly<T> {
    type Output = ExtPoly<T>;
    fn neg(self) -> ExtPoly<T> {
        self.map_coeffs(|_, c| -c.clone())
    }
}

impl<T: Scalar> Mul for &ExtPoly<T> {
    type Output = ExtPoly<T>;
    fn mul(self, rhs: &ExtPoly<T>) -> ExtPoly<T> {
        let mut out = ExtPoly::zero();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                if let Some((m, neg)) = a.mul(*b) {
                    let c = x.clone() * y.clone();
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }
}

impl<T: Scalar> Add for ExtPoly<T> {
    type Output = ExtPoly<T>;
    fn add(self, rhs: ExtPoly<T>) -> ExtPoly<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for ExtPoly<T> {
    type Output = ExtPoly<T>;
    fn sub(self, rhs: ExtPoly<T>) -> ExtPoly<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for ExtPoly<T> {
    type Output = ExtPoly<T>;
    fn mul(self, rhs: ExtPoly<T>) -> ExtPoly<T> {
        &self * &rhs
    }
}

impl<T: Scalar> Neg for ExtPoly<T> {
    type Output = ExtPoly<T>;
    fn neg(self) -> ExtPoly<T> {
        -&self
    }
}
