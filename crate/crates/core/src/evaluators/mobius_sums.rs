//! Mobius-side sums: the totative exponential sum for mu(n) and the two
//! constant-valued Mobius sums.

use crate::approx::{
    cos_two_pi_ratio, sin_two_pi_ratio, ApproxInteger, EvalValue, KahanSum, RESIDUAL_HARD_LIMIT,
};
use crate::error::Error;
use crate::exact::{factorize, gcd};
use crate::reference::mu;
use crate::Result;

/// Which Mobius-side sum to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MobiusSum {
    /// sum over totatives k of e^(2*pi*i*k/n); equals mu(n). Float mode:
    /// the real part is returned, the imaginary part must vanish under the
    /// rounding guard.
    Expsum,
    /// sum_{k<=n} floor(n/k) * mu(k); equals 1 for every n >= 1.
    FloorSum,
    /// sum over j*k <= n of sin(pi*j*k/2) * mu(k); equals 1 for every
    /// n >= 1. The sine factor is evaluated exactly from j*k mod 4:
    /// 0 -> 0, 1 -> +1, 2 -> 0, 3 -> -1.
    Kline,
}

impl MobiusSum {
    pub fn name(self) -> &'static str {
        match self {
            MobiusSum::Expsum => "expsum",
            MobiusSum::FloorSum => "floor-sum",
            MobiusSum::Kline => "kline",
        }
    }
}

/// Evaluates the selected sum for n >= 1.
pub fn mobius_sum_lhs(n: u64, which: MobiusSum) -> Result<EvalValue> {
    if n == 0 {
        return Err(Error::UnsupportedInput {
            what: "mobius sum",
            value: 0,
        });
    }
    match which {
        MobiusSum::Expsum => {
            let mut re = KahanSum::new();
            let mut im = KahanSum::new();
            for k in (1..=n).filter(|&k| gcd(k, n) == 1) {
                re += cos_two_pi_ratio(k, n);
                im += sin_two_pi_ratio(k, n);
            }
            let imag = im.value();
            if imag.abs() >= RESIDUAL_HARD_LIMIT {
                return Err(Error::ResidualGuard {
                    what: "mobius expsum (imaginary part)",
                    raw: imag,
                    residual: imag.abs(),
                });
            }
            ApproxInteger::try_from_raw(re.value(), "mobius expsum").map(EvalValue::Approx)
        }
        MobiusSum::FloorSum => {
            let mut total = 0i64;
            for k in 1..=n {
                total += (n / k) as i64 * mu(&factorize(k)?) as i64;
            }
            Ok(EvalValue::Exact(total))
        }
        MobiusSum::Kline => {
            let mut total = 0i64;
            for k in 1..=n {
                let m = mu(&factorize(k)?) as i64;
                if m == 0 {
                    continue;
                }
                let mut row = 0i64;
                for j in 1..=n / k {
                    row += match (j * k) % 4 {
                        1 => 1,
                        3 => -1,
                        _ => 0,
                    };
                }
                total += m * row;
            }
            Ok(EvalValue::Exact(total))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::RESIDUAL_ACCEPT_LIMIT;

    #[test]
    fn examples() {
        assert_eq!(
            mobius_sum_lhs(1, MobiusSum::Kline).unwrap(),
            EvalValue::Exact(1)
        );
        // 5 - 2 - 1 + 0 - 1
        assert_eq!(
            mobius_sum_lhs(5, MobiusSum::FloorSum).unwrap(),
            EvalValue::Exact(1)
        );
        // cos(pi/2) + cos(3*pi/2) = 0 = mu(4)
        assert_eq!(
            mobius_sum_lhs(4, MobiusSum::Expsum).unwrap().as_integer(),
            Some(0)
        );
    }

    #[test]
    fn constant_sums_are_one() {
        for n in 1..=400u64 {
            assert_eq!(
                mobius_sum_lhs(n, MobiusSum::FloorSum).unwrap(),
                EvalValue::Exact(1),
                "floor sum at {n}"
            );
            assert_eq!(
                mobius_sum_lhs(n, MobiusSum::Kline).unwrap(),
                EvalValue::Exact(1),
                "sine sum at {n}"
            );
        }
    }

    #[test]
    fn expsum_recovers_mu() {
        for n in 1..=400u64 {
            let expected = mu(&factorize(n).unwrap()) as i64;
            let v = mobius_sum_lhs(n, MobiusSum::Expsum).unwrap();
            assert_eq!(v.as_integer(), Some(expected), "expsum at {n}");
            assert!(v.residual() < RESIDUAL_ACCEPT_LIMIT);
        }
    }
}
