//! The four closed forms of the gcd-sum function P(n), each checked
//! against the literal definition by the verifier.

use crate::approx::EvalValue;
use crate::error::Error;
use crate::exact::factorize;
use crate::rational::ExactRational;
use crate::reference::{mu, phi_factored, tau_factored};
use crate::Result;

/// Closed form of the gcd-sum function.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PillaiForm {
    /// sum_{d|n} d * phi(n/d); exact integer arithmetic.
    DivisorPhi,
    /// sum_{d|n} d * tau(d) * mu(n/d); exact signed arithmetic.
    DivisorTauMu,
    /// n * prod over p|n of (1 + v_p(n) * (1 - 1/p)); rational arithmetic,
    /// must reduce to an integer.
    PadicProduct,
    /// n * sum_{d|n} phi(d)/d; rational arithmetic, must reduce to an
    /// integer.
    PhiOverD,
}

impl PillaiForm {
    pub fn name(self) -> &'static str {
        match self {
            PillaiForm::DivisorPhi => "divisor-phi",
            PillaiForm::DivisorTauMu => "divisor-tau-mu",
            PillaiForm::PadicProduct => "padic-product",
            PillaiForm::PhiOverD => "phi-over-d",
        }
    }
}

/// Evaluates P(n) through the selected closed form. The rational forms
/// error with `NonIntegerResult` if the reduced denominator is not 1,
/// which is how a violated form would surface.
pub fn pillai_form(n: u64, form: PillaiForm) -> Result<EvalValue> {
    if n == 0 {
        return Err(Error::UnsupportedInput {
            what: "pillai form",
            value: 0,
        });
    }
    let f = factorize(n)?;
    match form {
        PillaiForm::DivisorPhi => {
            let mut total = 0u64;
            for d in f.divisors() {
                total += d * phi_factored(&factorize(n / d)?);
            }
            Ok(EvalValue::Exact(total as i64))
        }
        PillaiForm::DivisorTauMu => {
            let mut total = 0i64;
            for d in f.divisors() {
                let fd = factorize(d)?;
                total += (d * tau_factored(&fd)) as i64 * mu(&factorize(n / d)?) as i64;
            }
            Ok(EvalValue::Exact(total))
        }
        PillaiForm::PadicProduct => {
            let mut r = ExactRational::from_integer(n as i64);
            for &(p, e) in f.factors() {
                // 1 + e*(1 - 1/p) = (p + e*(p-1)) / p
                let term = ExactRational::new((p + e as u64 * (p - 1)) as i128, p as i128)?;
                r = r.checked_mul(&term)?;
            }
            require_integer(r, "pillai padic-product")
        }
        PillaiForm::PhiOverD => {
            let mut sum = ExactRational::zero();
            for d in f.divisors() {
                let term = ExactRational::ratio(phi_factored(&factorize(d)?), d);
                sum = sum.checked_add(&term)?;
            }
            let r = sum.checked_mul(&ExactRational::from_integer(n as i64))?;
            require_integer(r, "pillai phi-over-d")
        }
    }
}

fn require_integer(r: ExactRational, what: &'static str) -> Result<EvalValue> {
    if r.is_integer() {
        Ok(EvalValue::Rational(r))
    } else {
        Err(Error::NonIntegerResult {
            what,
            value: r.to_string(),
        })
    }
}
