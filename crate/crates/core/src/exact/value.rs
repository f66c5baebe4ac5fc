use num_traits::{One, Signed, Zero};

use super::{ExactError, LaurentPoly, Rational};

/// Values that support the subtraction-free exchange operations used by
/// Ptolemy-style propagation. Implemented by exact rationals, Laurent
/// polynomials, and the tropical semiring.
pub trait ExchangeValue: Clone + PartialEq + std::fmt::Debug {
    /// Multiplicative identity in the same context (same variable list
    /// for polynomials).
    fn one_like(&self) -> Self;
    /// Semiring addition (`+`, or `max` tropically).
    fn plus(&self, rhs: &Self) -> Self;
    /// Semiring multiplication (`*`, or `+` tropically).
    fn times(&self, rhs: &Self) -> Self;
    /// Exact division (`/`, or `-` tropically).
    fn try_div(&self, rhs: &Self) -> Result<Self, ExactError>;
    /// True for a value that cannot be divided by.
    fn is_zero_value(&self) -> bool;
}

/// Exchange values that additionally support subtraction; needed by the
/// top-down frieze recurrence and the variant recurrence, which are not
/// subtraction-free. The tropical semiring deliberately does not
/// implement this.
pub trait ExchangeRing: ExchangeValue {
    fn minus(&self, rhs: &Self) -> Self;
}

/// Entry-level checks and rendering for values stored in frieze tables.
pub trait FriezeValue: ExchangeRing + std::fmt::Display {
    fn is_positive_value(&self) -> bool;
    /// `Some(true/false)` for numeric types, `None` where integrality
    /// has no meaning.
    fn is_integral(&self) -> Option<bool>;
    /// JSON rendering: rationals as strings like "5/3", polynomials in
    /// their structured form.
    fn value_json(&self) -> serde_json::Value;
}

impl ExchangeValue for Rational {
    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        Ok(self / rhs)
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl ExchangeRing for Rational {
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
}

impl FriezeValue for Rational {
    fn is_positive_value(&self) -> bool {
        self.is_positive()
    }

    fn is_integral(&self) -> Option<bool> {
        Some(self.is_integer())
    }

    fn value_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

impl ExchangeValue for LaurentPoly {
    fn one_like(&self) -> Self {
        let vars: Vec<&str> = self.vars().iter().map(|s| s.as_str()).collect();
        LaurentPoly::one(&vars)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }

    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        self.div_exact(rhs)
    }

    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
}

impl ExchangeRing for LaurentPoly {
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
}

impl FriezeValue for LaurentPoly {
    fn is_positive_value(&self) -> bool {
        self.is_positive()
    }

    fn is_integral(&self) -> Option<bool> {
        None
    }

    fn value_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("poly serializes")
    }
}
