//! Totient-side evaluators: the four identity rewrites of phi, the Menon
//! sum, and the Mobius-inversion divisor sum.

use crate::approx::{ApproxInteger, EvalValue};
use crate::exact::{factorize, gcd, FactoredInteger};
use crate::reference::tau_factored;
use crate::Result;

use super::sums::{
    coprime_floor_double_sum, exact_div, floor_cos_double_sum, gcd_cos_sum, require_min,
    shifted_coprime_floor_double_sum, triangular_f64, width_guard,
};

/// The identity used to rebuild phi(n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiMethod {
    /// 4 / (n^2 - 3n + 2) * sum_j sum_{coprime k} floor(j*k/n); exact,
    /// valid for n >= 3 (the denominator is (n-1)(n-2)).
    Res1,
    /// sum_k gcd(k, n) * cos(2*pi*k/n); the totient is the DFT of the gcd
    /// evaluated at 1. Float mode, valid for all n >= 1.
    Fourier,
    /// -n(n-1)/2 + 2 * sum_j sum_k floor(j*k/n) * cos(2*pi*k/n); float
    /// mode, valid for n >= 2.
    Res2,
    /// 4 / (2*tau(n) + n^2 - 5n + 2) * sum_j sum_{coprime k}
    /// floor(j*(k-1)/n); exact, valid for n >= 4 (denominator vanishes
    /// for n in {1, 2, 3}).
    Res3,
}

impl PhiMethod {
    pub fn name(self) -> &'static str {
        match self {
            PhiMethod::Res1 => "res1",
            PhiMethod::Fourier => "fourier",
            PhiMethod::Res2 => "res2",
            PhiMethod::Res3 => "res3",
        }
    }
}

/// Evaluates phi(n) through the selected identity. Exact methods enforce
/// zero remainder; float methods return the compensated sum under the
/// rounding guard.
pub fn phi_formula(n: u64, method: PhiMethod) -> Result<EvalValue> {
    match method {
        PhiMethod::Res1 => {
            require_min(n, 3, "phi res1", "n >= 3")?;
            let s = coprime_floor_double_sum(n)? as i128;
            let den = (n as i128 - 1) * (n as i128 - 2);
            exact_div(4 * s, den, "phi res1", n)
        }
        PhiMethod::Fourier => {
            require_min(n, 1, "phi fourier", "n >= 1")?;
            ApproxInteger::try_from_raw(gcd_cos_sum(n), "phi fourier").map(EvalValue::Approx)
        }
        PhiMethod::Res2 => {
            require_min(n, 2, "phi res2", "n >= 2")?;
            let raw = 2.0 * floor_cos_double_sum(n)? - triangular_f64(n);
            ApproxInteger::try_from_raw(raw, "phi res2").map(EvalValue::Approx)
        }
        PhiMethod::Res3 => {
            require_min(n, 4, "phi res3", "n >= 4")?;
            // tau comes from the factored reference form, not from any of
            // the tau identities, to keep the validation non-circular.
            let tau = tau_factored(&factorize(n)?) as i128;
            let s = shifted_coprime_floor_double_sum(n)? as i128;
            let den = 2 * tau + (n as i128) * (n as i128) - 5 * n as i128 + 2;
            exact_div(4 * s, den, "phi res3", n)
        }
    }
}

/// The Menon sum: sum of gcd(k-1, n) over the totatives k of n, with
/// gcd(0, n) = n covering the k = 1 term.
pub fn menon_rhs(n: u64) -> Result<u64> {
    width_guard(n, "menon sum")?;
    require_min(n, 1, "menon sum", "n >= 1")?;
    Ok((1..=n)
        .filter(|&k| gcd(k, n) == 1)
        .map(|k| gcd(k - 1, n))
        .sum())
}

/// phi(n) by Mobius inversion of the divisor-sum formula:
/// sum_{d|n} mu(d) * n/d. Only squarefree divisors contribute, so the sum
/// runs over the subsets of the distinct primes.
pub fn phi_inversion_sum(n: &FactoredInteger) -> i64 {
    let primes: Vec<u64> = n.distinct_primes().collect();
    let mut total = 0i64;
    for mask in 0u32..(1 << primes.len()) {
        let mut d = 1u64;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d *= p;
            }
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        total += sign * (n.value() / d) as i64;
    }
    total
}
