//! Exact 2×2 integer matrices and 1×2 row vectors.
//!
//! One reduction step of the gcd loop is one right-multiplication by the
//! step matrix `[[0, 1], [1, -⌊a/b⌋]]`: it maps the row `[a, b]` to
//! `[b, a mod b]` and applies the matching update to the coefficient rows.

use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;

/// Row-major 2×2 matrix with exact signed entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2 {
    pub m00: BigInt,
    pub m01: BigInt,
    pub m10: BigInt,
    pub m11: BigInt,
}

impl Mat2 {
    pub fn new(m00: BigInt, m01: BigInt, m10: BigInt, m11: BigInt) -> Self {
        Mat2 { m00, m01, m10, m11 }
    }

    pub fn identity() -> Self {
        Mat2::new(One::one(), Zero::zero(), Zero::zero(), One::one())
    }

    /// Step matrix for a known quotient `q`: `[[0, 1], [1, -q]]`.
    pub fn step_for_quotient(q: &BigInt) -> Self {
        Mat2::new(Zero::zero(), One::one(), One::one(), -q.clone())
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(
            self.m00.clone(),
            self.m10.clone(),
            self.m01.clone(),
            self.m11.clone(),
        )
    }

    pub fn det(&self) -> BigInt {
        &self.m00 * &self.m11 - &self.m01 * &self.m10
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: &Mat2) -> Mat2 {
        Mat2::new(
            &self.m00 * &rhs.m00 + &self.m01 * &rhs.m10,
            &self.m00 * &rhs.m01 + &self.m01 * &rhs.m11,
            &self.m10 * &rhs.m00 + &self.m11 * &rhs.m10,
            &self.m10 * &rhs.m01 + &self.m11 * &rhs.m11,
        )
    }
}

/// 1×2 row vector with exact signed entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row2 {
    pub r0: BigInt,
    pub r1: BigInt,
}

impl Row2 {
    pub fn new(r0: BigInt, r1: BigInt) -> Self {
        Row2 { r0, r1 }
    }
}

impl Mul<&Mat2> for &Row2 {
    type Output = Row2;

    fn mul(self, rhs: &Mat2) -> Row2 {
        Row2::new(
            &self.r0 * &rhs.m00 + &self.r1 * &rhs.m10,
            &self.r0 * &rhs.m01 + &self.r1 * &rhs.m11,
        )
    }
}

/// Step matrix for the pair `(a, b)`: `[[0, 1], [1, -⌊a/b⌋]]`.
///
/// Errors with [`Error::DivisionByZero`] when `b = 0`.
pub fn step_matrix(a: &BigUint, b: &BigUint) -> Result<Mat2, Error> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let q = BigInt::from(a / b);
    Ok(Mat2::step_for_quotient(&q))
}
