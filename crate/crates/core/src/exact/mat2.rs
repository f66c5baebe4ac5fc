use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// 2x2 matrix over arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Mat2::new(1, 0, 0, 1)
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        Mat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn entry_sum(&self) -> BigInt {
        &self.a + &self.b + &self.c + &self.d
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2 {
            a: self.a.clone(),
            b: self.c.clone(),
            c: self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// Inverse of a matrix with determinant +-1.
    pub fn inverse_unimodular(&self) -> Option<Mat2> {
        let det = self.det();
        if det.abs() != BigInt::one() {
            return None;
        }
        let adj = Mat2 {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        };
        Some(if det.is_one() {
            adj
        } else {
            Mat2 {
                a: -adj.a,
                b: -adj.b,
                c: -adj.c,
                d: -adj.d,
            }
        })
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abaab_product() {
        // A = [[0,1],[1,1]], B = [[1,1],[1,0]]: ABAAB = [[2,1],[7,3]].
        let a = Mat2::new(0, 1, 1, 1);
        let b = Mat2::new(1, 1, 1, 0);
        let m = a.mul(&b).mul(&a).mul(&a).mul(&b);
        assert_eq!(m, Mat2::new(2, 1, 7, 3));
        assert_eq!(m.entry_sum(), BigInt::from(13));
    }

    #[test]
    fn identity_is_neutral() {
        let m = Mat2::new(3, -2, 7, 5);
        assert_eq!(Mat2::identity().mul(&m), m);
        assert_eq!(m.mul(&Mat2::identity()), m);
    }

    #[test]
    fn det_multiplicative_on_lr() {
        let l = Mat2::new(1, 1, 0, 1);
        let r = Mat2::new(1, 0, 1, 1);
        assert_eq!(l.mul(&r).det(), BigInt::one());
    }

    #[test]
    fn unimodular_inverse() {
        let b = Mat2::new(1, 1, 1, 0);
        let inv = b.inverse_unimodular().unwrap();
        assert_eq!(b.mul(&inv), Mat2::identity());
        assert!(Mat2::new(2, 0, 0, 2).inverse_unimodular().is_none());
    }
}
