//! Compensated floating-point accumulation and the rounded-integer wrapper
//! used by the cosine-weighted identities.
//!
//! Those identities are integer-valued in exact arithmetic only; in f64
//! they produce a raw sum that must sit close to an integer before the
//! rounding is trusted. The guard thresholds live here.

use std::fmt;
use std::ops::AddAssign;

use serde::Serialize;

use crate::error::Error;
use crate::rational::ExactRational;
use crate::Result;

/// Rounding is refused outright at or above this distance from the nearest
/// integer.
pub const RESIDUAL_HARD_LIMIT: f64 = 0.49;
/// Residuals above this are surfaced as warnings in verification output.
pub const RESIDUAL_WARN_LIMIT: f64 = 1e-3;
/// Residual budget the acceptance sweeps hold the float identities to.
pub const RESIDUAL_ACCEPT_LIMIT: f64 = 1e-6;

/// Neumaier-compensated accumulator. The quadratic cosine sums add up to
/// ~n^3/4 terms' worth of magnitude; plain summation would eat most of the
/// residual budget.
#[derive(Debug, Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl AddAssign<f64> for KahanSum {
    fn add_assign(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }
}

/// cos(2*pi*k/n) evaluated on the reduced angle 2*pi*(k mod n)/n.
pub fn cos_two_pi_ratio(k: u64, n: u64) -> f64 {
    (std::f64::consts::TAU * ((k % n) as f64) / (n as f64)).cos()
}

/// sin(2*pi*k/n) evaluated on the reduced angle.
pub fn sin_two_pi_ratio(k: u64, n: u64) -> f64 {
    (std::f64::consts::TAU * ((k % n) as f64) / (n as f64)).sin()
}

/// A floating-point sum paired with the nearest integer and the distance
/// to it. Constructed only when the residual clears the hard guard, so
/// `residual < 0.49 <= 0.5` always holds and the nearest integer is
/// unambiguous.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApproxInteger {
    pub raw: f64,
    pub nearest: i64,
    pub residual: f64,
}

impl ApproxInteger {
    /// Wraps a raw sum, refusing values whose distance to the nearest
    /// integer reaches [`RESIDUAL_HARD_LIMIT`].
    pub fn try_from_raw(raw: f64, what: &'static str) -> Result<Self> {
        if !raw.is_finite() {
            return Err(Error::ResidualGuard {
                what,
                raw,
                residual: f64::INFINITY,
            });
        }
        let rounded = raw.round();
        let residual = (raw - rounded).abs();
        if residual >= RESIDUAL_HARD_LIMIT {
            return Err(Error::ResidualGuard {
                what,
                raw,
                residual,
            });
        }
        if rounded < i64::MIN as f64 || rounded > i64::MAX as f64 {
            return Err(Error::Overflow { what });
        }
        Ok(ApproxInteger {
            raw,
            nearest: rounded as i64,
            residual,
        })
    }
}

/// The value an identity side evaluates to. The variant is fixed by the
/// identity's declared arithmetic mode, never chosen from the runtime
/// magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EvalValue {
    Exact(i64),
    Rational(ExactRational),
    Approx(ApproxInteger),
}

impl EvalValue {
    /// Residual carried by this value: zero for the exact modes.
    pub fn residual(&self) -> f64 {
        match self {
            EvalValue::Approx(a) => a.residual,
            _ => 0.0,
        }
    }

    /// Integer reading of the value, when it has one.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            EvalValue::Exact(v) => Some(*v),
            EvalValue::Rational(r) => r.to_integer(),
            EvalValue::Approx(a) => Some(a.nearest),
        }
    }
}

impl fmt::Display for EvalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalValue::Exact(v) => write!(f, "{v}"),
            EvalValue::Rational(r) => write!(f, "{r}"),
            EvalValue::Approx(a) => write!(f, "{} (residual {:.3e})", a.nearest, a.residual),
        }
    }
}
