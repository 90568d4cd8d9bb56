//! Shared building blocks for the floor-sum and cosine-sum evaluators.
//!
//! All double sums are accumulated literally, term by term, in the order
//! the identities write them; no closed forms are substituted, since the
//! closed forms are themselves identities under test.

use crate::approx::{cos_two_pi_ratio, EvalValue, KahanSum};
use crate::error::Error;
use crate::exact::gcd;
use crate::Result;

/// Width guard for the floor double sums. The largest accumulator below is
/// bounded by n(n-1)(n+1)/4, which at this ceiling is still a factor of
/// four inside i64; the 4x numerator scaling afterwards happens in i128.
pub const MAX_FLOOR_N: u64 = 2_000_000;

pub(crate) fn width_guard(n: u64, what: &'static str) -> Result<()> {
    if n > MAX_FLOOR_N {
        return Err(Error::Overflow { what });
    }
    Ok(())
}

/// Guard for the (k, n) floor sums, where k is not tied to n: k*n must
/// leave headroom for the 2*sum + k + n - k*n combination.
pub(crate) fn pair_width_guard(k: u64, n: u64, what: &'static str) -> Result<()> {
    if n > MAX_FLOOR_N || (k as u128) * (n as u128) > (i64::MAX / 4) as u128 {
        return Err(Error::Overflow { what });
    }
    Ok(())
}

pub(crate) fn require_min(
    n: u64,
    min: u64,
    what: &'static str,
    requirement: &'static str,
) -> Result<()> {
    if n < min {
        return Err(Error::DegenerateDomain {
            what,
            n,
            requirement,
        });
    }
    Ok(())
}

/// Exact integer division with the remainder checked: a nonzero remainder
/// is exactly how a violated exact-mode identity shows up, so it is an
/// error here rather than a truncation.
pub(crate) fn exact_div(num: i128, den: i128, what: &'static str, n: u64) -> Result<EvalValue> {
    if den == 0 {
        return Err(Error::DivisionByZero { what, n });
    }
    if num % den != 0 {
        return Err(Error::InexactDivision {
            what,
            numerator: num,
            denominator: den,
        });
    }
    i64::try_from(num / den)
        .map(EvalValue::Exact)
        .map_err(|_| Error::Overflow { what })
}

/// n(n-1)/2 as an exactly-represented f64 (n stays far below 2^26).
pub(crate) fn triangular_f64(n: u64) -> f64 {
    ((n as u128) * ((n - 1) as u128) / 2) as f64
}

/// The totatives of n: k in 1..=n with gcd(k, n) = 1, ascending.
pub(crate) fn coprime_residues(n: u64) -> Vec<u64> {
    (1..=n).filter(|&k| gcd(k, n) == 1).collect()
}

/// sum_{j=1}^{n-1} floor(j*k/n). Callers guard k*n first.
pub(crate) fn floor_sum_over_j(k: u64, n: u64) -> i64 {
    let (k, n) = (k as i64, n as i64);
    let mut s = 0i64;
    for j in 1..n {
        s += j * k / n;
    }
    s
}

/// sum_{j=1}^{n-1} sum over totatives k of floor(j*k/n).
pub(crate) fn coprime_floor_double_sum(n: u64) -> Result<i64> {
    let what = "coprime floor double sum";
    width_guard(n, what)?;
    let ks: Vec<i64> = coprime_residues(n).into_iter().map(|k| k as i64).collect();
    let ni = n as i64;
    let mut total = 0i64;
    for j in 1..ni {
        let mut row = 0i64;
        for &k in &ks {
            row += j * k / ni;
        }
        total = total.checked_add(row).ok_or(Error::Overflow { what })?;
    }
    Ok(total)
}

/// sum_{j=1}^{n-1} sum over totatives k of floor(j*(k-1)/n). The k = 1
/// column contributes zero.
pub(crate) fn shifted_coprime_floor_double_sum(n: u64) -> Result<i64> {
    let what = "shifted coprime floor double sum";
    width_guard(n, what)?;
    let ks: Vec<i64> = coprime_residues(n)
        .into_iter()
        .map(|k| k as i64 - 1)
        .collect();
    let ni = n as i64;
    let mut total = 0i64;
    for j in 1..ni {
        let mut row = 0i64;
        for &k in &ks {
            row += j * k / ni;
        }
        total = total.checked_add(row).ok_or(Error::Overflow { what })?;
    }
    Ok(total)
}

/// sum_{k=1}^{n} gcd(k, n) * cos(2*pi*k/n), compensated.
pub(crate) fn gcd_cos_sum(n: u64) -> f64 {
    let mut acc = KahanSum::new();
    for k in 1..=n {
        acc += gcd(k, n) as f64 * cos_two_pi_ratio(k, n);
    }
    acc.value()
}

/// sum_{j=1}^{n-1} sum_{k=1}^{n} floor(j*k/n) * cos(2*pi*k/n), compensated,
/// accumulated in the written order (j outer, k inner). The cosine column
/// is tabulated once per n; the table holds the same values the direct
/// calls would produce, so results are unchanged.
pub(crate) fn floor_cos_double_sum(n: u64) -> Result<f64> {
    width_guard(n, "floor cosine double sum")?;
    let cos_k: Vec<f64> = (1..=n).map(|k| cos_two_pi_ratio(k, n)).collect();
    let ni = n as i64;
    let mut acc = KahanSum::new();
    for j in 1..ni {
        for k in 1..=ni {
            let floor = j * k / ni;
            acc += floor as f64 * cos_k[(k - 1) as usize];
        }
    }
    Ok(acc.value())
}
