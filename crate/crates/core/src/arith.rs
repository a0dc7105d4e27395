//! Checked integer helpers. Coefficients in this crate are tiny, so overflow
//! means a corrupted input; we fail loudly instead of wrapping.

use crate::error::{Error, Result};

pub(crate) fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter()
        .zip(b)
        .try_fold(0i64, |acc, (&x, &y)| add(acc, mul(x, y)?))
}

/// `a - k * b` coordinatewise.
pub(crate) fn sub_scaled(a: &[i64], k: i64, b: &[i64]) -> Result<Vec<i64>> {
    a.iter().zip(b).map(|(&x, &y)| sub(x, mul(k, y)?)).collect()
}

pub(crate) fn sum(a: &[i64]) -> Result<i64> {
    a.iter().try_fold(0i64, |acc, &x| add(acc, x))
}
