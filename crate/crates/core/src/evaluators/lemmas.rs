//! Supporting lemmas used by the main identities, each returning both
//! sides for the verifier to compare.

use crate::approx::{cos_two_pi_ratio, ApproxInteger, EvalValue, KahanSum};
use crate::error::Error;
use crate::exact::{factorize, gcd};
use crate::rational::ExactRational;
use crate::reference::{mu, phi_factored};
use crate::Result;

use super::sums::{coprime_residues, floor_sum_over_j, pair_width_guard, require_min};

/// A lemma with both sides evaluated by [`lemma_sides`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lemma {
    /// sum over totatives k of k = n*phi(n)/2, for n >= 2 (at n = 1 the
    /// left side is 1 against 1/2).
    CoprimeSum,
    /// sum_{j=1}^{n-1} floor(j*k/n) = (k-1)(n-1)/2 whenever gcd(k, n) = 1.
    /// Coprimality forces (k-1)(n-1) even, so the division is exact.
    CoprimeFloor { k: u64 },
    /// sum_{k=1}^{n} cos(2*pi*k/n) = 0, for n >= 2.
    CosSum,
    /// sum_{k=1}^{n} k * cos(2*pi*k/n) = n/2, for n >= 2. Both sides are
    /// exposed doubled (2*sum against n) so the comparison target stays an
    /// integer when n is odd.
    KCosSum,
    /// sum_{d|n} mu(d)^2 / phi(d) = n / phi(n), as reduced rationals.
    Mu2OverPhi,
    /// phi(m*n) * phi(d) = phi(m) * phi(n) * d with d = gcd(m, n),
    /// cross-multiplied to stay in integer arithmetic.
    PhiMult { m: u64 },
}

impl Lemma {
    pub fn name(self) -> &'static str {
        match self {
            Lemma::CoprimeSum => "coprime-sum",
            Lemma::CoprimeFloor { .. } => "coprime-floor",
            Lemma::CosSum => "cos-sum",
            Lemma::KCosSum => "k-cos-sum",
            Lemma::Mu2OverPhi => "mu2-over-phi",
            Lemma::PhiMult { .. } => "phi-mult",
        }
    }
}

/// Evaluates both sides of the lemma at n.
pub fn lemma_sides(n: u64, lemma: Lemma) -> Result<(EvalValue, EvalValue)> {
    match lemma {
        Lemma::CoprimeSum => {
            require_min(n, 2, "coprime-sum lemma", "n >= 2")?;
            let lhs: u64 = coprime_residues(n).iter().sum();
            let product = n * phi_factored(&factorize(n)?);
            assert!(product.is_multiple_of(2), "n*phi(n) is even for n >= 2");
            Ok((
                EvalValue::Exact(lhs as i64),
                EvalValue::Exact((product / 2) as i64),
            ))
        }
        Lemma::CoprimeFloor { k } => {
            let what = "coprime-floor lemma";
            if k == 0 || n == 0 {
                return Err(Error::UnsupportedInput { what, value: 0 });
            }
            if gcd(k, n) != 1 {
                return Err(Error::DegenerateDomain {
                    what,
                    n,
                    requirement: "gcd(k, n) = 1",
                });
            }
            pair_width_guard(k, n, what)?;
            let lhs = floor_sum_over_j(k, n);
            let product = (k as i64 - 1) * (n as i64 - 1);
            assert!(product % 2 == 0, "(k-1)(n-1) is even when gcd(k, n) = 1");
            Ok((EvalValue::Exact(lhs), EvalValue::Exact(product / 2)))
        }
        Lemma::CosSum => {
            require_min(n, 2, "cos-sum lemma", "n >= 2")?;
            let mut acc = KahanSum::new();
            for k in 1..=n {
                acc += cos_two_pi_ratio(k, n);
            }
            let lhs = ApproxInteger::try_from_raw(acc.value(), "cos-sum lemma")?;
            Ok((EvalValue::Approx(lhs), EvalValue::Exact(0)))
        }
        Lemma::KCosSum => {
            require_min(n, 2, "k-cos-sum lemma", "n >= 2")?;
            let mut acc = KahanSum::new();
            for k in 1..=n {
                acc += k as f64 * cos_two_pi_ratio(k, n);
            }
            // doubling by 2 is exact in binary floating point
            let lhs = ApproxInteger::try_from_raw(2.0 * acc.value(), "k-cos-sum lemma")?;
            Ok((EvalValue::Approx(lhs), EvalValue::Exact(n as i64)))
        }
        Lemma::Mu2OverPhi => {
            require_min(n, 1, "mu2-over-phi lemma", "n >= 1")?;
            let f = factorize(n)?;
            let mut lhs = ExactRational::zero();
            for d in f.divisors() {
                let fd = factorize(d)?;
                let mu_sq = (mu(&fd) * mu(&fd)) as u64;
                lhs = lhs.checked_add(&ExactRational::ratio(mu_sq, phi_factored(&fd)))?;
            }
            let rhs = ExactRational::ratio(n, phi_factored(&f));
            Ok((EvalValue::Rational(lhs), EvalValue::Rational(rhs)))
        }
        Lemma::PhiMult { m } => {
            let what = "phi-mult lemma";
            if m == 0 || n == 0 {
                return Err(Error::UnsupportedInput { what, value: 0 });
            }
            let mn = m.checked_mul(n).ok_or(Error::Overflow { what })?;
            let d = gcd(m, n);
            let phi = |v: u64| -> Result<u64> { Ok(phi_factored(&factorize(v)?)) };
            let lhs = phi(mn)?
                .checked_mul(phi(d)?)
                .ok_or(Error::Overflow { what })?;
            let rhs = phi(m)?
                .checked_mul(phi(n)?)
                .and_then(|v| v.checked_mul(d))
                .ok_or(Error::Overflow { what })?;
            Ok((EvalValue::Exact(lhs as i64), EvalValue::Exact(rhs as i64)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::RESIDUAL_ACCEPT_LIMIT;

    #[test]
    fn coprime_sum_example() {
        // 1+2+3+4 against 5*4/2
        let (lhs, rhs) = lemma_sides(5, Lemma::CoprimeSum).unwrap();
        assert_eq!((lhs, rhs), (EvalValue::Exact(10), EvalValue::Exact(10)));
        assert!(matches!(
            lemma_sides(1, Lemma::CoprimeSum),
            Err(Error::DegenerateDomain { .. })
        ));
    }

    #[test]
    fn coprime_floor_example() {
        let (lhs, rhs) = lemma_sides(5, Lemma::CoprimeFloor { k: 3 }).unwrap();
        assert_eq!((lhs, rhs), (EvalValue::Exact(4), EvalValue::Exact(4)));
        assert!(matches!(
            lemma_sides(6, Lemma::CoprimeFloor { k: 4 }),
            Err(Error::DegenerateDomain { .. })
        ));
    }

    #[test]
    fn cosine_lemmas() {
        let (lhs, _) = lemma_sides(7, Lemma::CosSum).unwrap();
        assert_eq!(lhs.as_integer(), Some(0));

        // -0.5 - 1 + 3 = 1.5 at n = 3; sides are doubled to (3, 3)
        let (lhs, rhs) = lemma_sides(3, Lemma::KCosSum).unwrap();
        match lhs {
            EvalValue::Approx(a) => {
                assert_eq!(a.nearest, 3);
                assert!((a.raw / 2.0 - 1.5).abs() < 1e-12);
            }
            other => panic!("expected approx, got {other}"),
        }
        assert_eq!(rhs, EvalValue::Exact(3));

        for which in [Lemma::CosSum, Lemma::KCosSum] {
            assert!(matches!(
                lemma_sides(1, which),
                Err(Error::DegenerateDomain { .. })
            ));
        }
    }

    #[test]
    fn cosine_lemmas_hold_over_a_range() {
        for n in 2..=500u64 {
            let (lhs, rhs) = lemma_sides(n, Lemma::CosSum).unwrap();
            assert_eq!(lhs.as_integer(), rhs.as_integer(), "cos sum at {n}");
            assert!(lhs.residual() < RESIDUAL_ACCEPT_LIMIT);
            let (lhs, rhs) = lemma_sides(n, Lemma::KCosSum).unwrap();
            assert_eq!(lhs.as_integer(), rhs.as_integer(), "k cos sum at {n}");
            assert!(lhs.residual() < RESIDUAL_ACCEPT_LIMIT);
        }
    }

    #[test]
    fn mu2_over_phi_example() {
        // 1 + 1 + 1/2 + 1/2 against 6/2
        let (lhs, rhs) = lemma_sides(6, Lemma::Mu2OverPhi).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.as_integer(), Some(3));
        for n in 1..=500u64 {
            let (lhs, rhs) = lemma_sides(n, Lemma::Mu2OverPhi).unwrap();
            assert_eq!(lhs, rhs, "mu2/phi at {n}");
        }
    }

    #[test]
    fn phi_mult_example() {
        // phi(24)*phi(2) against phi(4)*phi(6)*2
        let (lhs, rhs) = lemma_sides(6, Lemma::PhiMult { m: 4 }).unwrap();
        assert_eq!((lhs, rhs), (EvalValue::Exact(8), EvalValue::Exact(8)));
        for m in 1..=60u64 {
            for n in 1..=60u64 {
                let (lhs, rhs) = lemma_sides(n, Lemma::PhiMult { m }).unwrap();
                assert_eq!(lhs, rhs, "phi-mult at ({m}, {n})");
            }
        }
    }

    #[test]
    fn coprime_lemmas_hold_over_a_range() {
        for n in 2..=300u64 {
            let (lhs, rhs) = lemma_sides(n, Lemma::CoprimeSum).unwrap();
            assert_eq!(lhs, rhs, "coprime sum at {n}");
        }
        for n in 1..=100u64 {
            for k in (1..=3 * n).filter(|&k| gcd(k, n) == 1) {
                let (lhs, rhs) = lemma_sides(n, Lemma::CoprimeFloor { k }).unwrap();
                assert_eq!(lhs, rhs, "coprime floor at ({k}, {n})");
            }
        }
    }
}
