//! Exterior algebras over a field: square-free monomials with signs, sparse
//! polynomials, Gröbner bases of two-sided ideals, standard monomials and
//! Hilbert series.

mod groebner;
mod monomial;
mod poly;
pub mod text;

pub use groebner::{buchberger, GroebnerBasis, DEFAULT_PAIR_CAP};
pub use monomial::Monomial;
pub use poly::{ExtPoly, VarTable};
pub use text::{parse_poly, to_text};
