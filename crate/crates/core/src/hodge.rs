//! Dimension series of Jacobian rings and the invariants they carry.
//!
//! For a general member of a quasi-smooth type the partial derivatives
//! form a regular sequence, so the graded Jacobian ring has dimension
//! series `prod (1 - t^(d - w)) / (1 - t^w)` over the weights `w`.
//! The numerator is expanded in full and the denominator factors are
//! divided out one by one; each division must be exact, which fails
//! loudly on types where the series is not a polynomial.

use serde::Serialize;
use thiserror::Error;

use crate::arith::{ArithError, IntPolynomial};
use crate::wtypes::WeightedType;

/// Errors from dimension-series computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    /// Every weight must be strictly below the degree.
    #[error("weight {weight} is not below the degree {degree}")]
    WeightNotBelowDegree { weight: u64, degree: u64 },
    /// The requested invariant needs a specific number of weights.
    #[error("expected {expected} weights, got {count}")]
    WrongDimension { expected: usize, count: usize },
    /// The requested invariant needs weights summing to the degree.
    #[error("weights must sum to the degree, off by {amplitude}")]
    NotCalabiYau { amplitude: i64 },
    /// Underlying polynomial arithmetic failed; in particular the
    /// series of a non-quasi-smooth type is not a polynomial.
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Hodge numbers of middle cohomology in weight 3, or of one
/// eigenspace of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HodgeVector {
    pub h30: i64,
    pub h21: i64,
    pub h12: i64,
    pub h03: i64,
}

impl HodgeVector {
    /// A vector with all four entries zero.
    pub fn zero() -> Self {
        Self {
            h30: 0,
            h21: 0,
            h12: 0,
            h03: 0,
        }
    }

    /// Total dimension `h30 + h21 + h12 + h03`.
    pub fn total(&self) -> i64 {
        self.h30 + self.h21 + self.h12 + self.h03
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Self) -> Self {
        Self {
            h30: self.h30 + other.h30,
            h21: self.h21 + other.h21,
            h12: self.h12 + other.h12,
            h03: self.h03 + other.h03,
        }
    }
}

impl std::fmt::Display for HodgeVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.h30, self.h21, self.h12, self.h03
        )
    }
}

/// Top degree of the Jacobian ring, `sum(d - 2w)` over the weights.
pub fn socle_degree(t: &WeightedType) -> i64 {
    t.weights()
        .iter()
        .map(|&w| t.degree() as i64 - 2 * w as i64)
        .sum()
}

/// Dimension series of the Jacobian ring of a general member,
/// truncated at degree `cap`.
///
/// Fails when a weight reaches the degree, when the series is not a
/// polynomial (the type has no quasi-smooth member), or when a
/// coefficient turns negative.
pub fn milnor_series(t: &WeightedType, cap: usize) -> Result<IntPolynomial, HodgeError> {
    let d = t.degree();
    for &w in t.weights() {
        if w >= d {
            return Err(HodgeError::WeightNotBelowDegree {
                weight: w,
                degree: d,
            });
        }
    }
    let full: usize = t.weights().iter().map(|&w| (d - w) as usize).sum();
    let mut p = IntPolynomial::one();
    for &w in t.weights() {
        p = p.mul(&IntPolynomial::one_minus_power((d - w) as usize), full)?;
    }
    for &w in t.weights() {
        p = p.div_exact(&IntPolynomial::one_minus_power(w as usize), full)?;
    }
    p.check_nonnegative()?;
    Ok(p.truncated(cap))
}

/// Hodge numbers `(1, h21, h12, 1)` of a Calabi-Yau threefold in five
/// weights, read off the Jacobian ring in degrees `d` and `2d`.
pub fn hodge_numbers_cy3(t: &WeightedType) -> Result<HodgeVector, HodgeError> {
    if t.weights().len() != 5 {
        return Err(HodgeError::WrongDimension {
            expected: 5,
            count: t.weights().len(),
        });
    }
    if !t.is_calabi_yau() {
        return Err(HodgeError::NotCalabiYau {
            amplitude: t.amplitude(),
        });
    }
    let d = t.degree() as usize;
    let series = milnor_series(t, 2 * d)?;
    Ok(HodgeVector {
        h30: 1,
        h21: series.coeff(d),
        h12: series.coeff(2 * d),
        h03: 1,
    })
}

/// Genus of a quasi-smooth curve in three weights: the Jacobian ring
/// dimension in degree `d - (w0 + w1 + w2)`, and 0 when that degree is
/// negative.
pub fn genus(t: &WeightedType) -> Result<i64, HodgeError> {
    if t.weights().len() != 3 {
        return Err(HodgeError::WrongDimension {
            expected: 3,
            count: t.weights().len(),
        });
    }
    let amp = t.amplitude();
    if amp < 0 {
        return Ok(0);
    }
    let series = milnor_series(t, amp as usize)?;
    Ok(series.coeff(amp as usize))
}

/// Dimension of the space of first-order deformations of the defining
/// equation modulo coordinate changes: the Jacobian ring dimension in
/// the degree of the equation.
pub fn kuranishi_dim(t: &WeightedType) -> Result<i64, HodgeError> {
    let d = t.degree() as usize;
    let series = milnor_series(t, d)?;
    Ok(series.coeff(d))
}
