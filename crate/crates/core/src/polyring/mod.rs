//! Exact scalars, monomials and orders, sparse polynomials, and text input.

mod monomial;
mod parse;
mod polynomial;
mod ring;
mod scalar;

pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_ideal_file, parse_point, parse_polynomial};
pub use polynomial::Polynomial;
pub use ring::PolyRing;
pub use scalar::{Field, Scalar, DEFAULT_PRIME};
