//! Arbitrary-precision integers, exact rationals, sparse multivariate
//! Laurent polynomials, and 2x2 integer matrices.

mod mat2;
mod poly;
mod value;

pub use mat2::Mat2;
pub use poly::{ExponentVector, LaurentPoly};
pub use value::{ExchangeRing, ExchangeValue, FriezeValue};

pub use num_bigint::BigInt;
/// Exact rational numbers, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("variable arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("not exactly divisible")]
    NotDivisible,
    #[error("division by zero")]
    ZeroDivisor,
    #[error("substituting 0 for variable `{0}`, which occurs with a negative exponent")]
    ZeroSubstitution(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
