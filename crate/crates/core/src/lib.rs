//! Exact computational toolkit for graphic arrangements over `ℂ`, `ℂ×` and
//! projective curves of positive genus.
//!
//! The pipeline runs from an ordered graph to
//!
//! * the model differential graded algebra of the arrangement complement
//!   ([`models`]),
//! * a Koszulity certificate built from a quadratic Gröbner basis in the
//!   exterior algebra and the Hilbert series identity ([`koszul`]),
//! * the quadratic-linear dual Lie algebra presentation ([`duality`]),
//! * lower central series quotients and Chevalley–Eilenberg stages of the
//!   minimal model ([`liealg`]).
//!
//! All arithmetic is exact. The algebraic code is generic over a coefficient
//! field implementing [`Scalar`]; [`Rational`] (arbitrary precision) is the
//! type used by the command line tool, and the `Q*` aliases below fix it.

pub mod cli;
pub mod duality;
pub mod error;
pub mod extalg;
pub mod graph;
pub mod koszul;
pub mod liealg;
pub mod linalg;
pub mod models;
pub mod series;

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{FromPrimitive, Num, Signed};

pub use error::{Error, Result};

/// Coefficient field used by every algebraic routine.
///
/// Any exact field with a decimal/fraction `from_str_radix` works; floating
/// point types satisfy the bounds syntactically but are not exact and should
/// not be used for Gröbner bases.
pub trait Scalar:
    Clone + PartialEq + Debug + Display + Num + Signed + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer is representable")
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + Debug + Display + Num + Signed + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}

/// Arbitrary precision rationals.
pub type Rational = num_rational::BigRational;

pub type QPoly = extalg::ExtPoly<Rational>;
pub type QGroebnerBasis = extalg::GroebnerBasis<Rational>;




pub type QPresentation = models::DgaPresentation<Rational>;
pub type QLiePresentation = duality::LiePresentation<Rational>;
pub type QStage = liealg::GradedLieStage<Rational>;
pub type QCeStage = liealg::CeStage<Rational>;
