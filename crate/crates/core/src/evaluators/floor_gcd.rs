//! The gcd expressed through floor sums: the single-sum form and the
//! two-sum reciprocity relation it derives from.

use crate::error::Error;
use crate::exact::gcd;
use crate::Result;

use super::sums::{floor_sum_over_j, pair_width_guard};

/// gcd(k, n) rebuilt from a single floor sum:
/// 2 * sum_{j=1}^{n-1} floor(j*k/n) + k + n - k*n.
///
/// Signed arithmetic; a correct evaluation is always positive. Holds for
/// every k >= 1, n >= 1, including k > n.
pub fn gcd_via_floor(k: u64, n: u64) -> Result<i64> {
    let what = "gcd via floor sum";
    if k == 0 || n == 0 {
        return Err(Error::UnsupportedInput { what, value: 0 });
    }
    pair_width_guard(k, n, what)?;
    let s = floor_sum_over_j(k, n);
    let (k, n) = (k as i64, n as i64);
    Ok(2 * s + k + n - k * n)
}

/// Both sides of the floor reciprocity relation, left for the caller to
/// compare:
/// (sum_{k=1}^{n} floor(k*m/n) + sum_{k=1}^{m} floor(k*n/m),  m*n + gcd(m, n)).
pub fn floor_reciprocity_sides(m: u64, n: u64) -> Result<(i64, i64)> {
    let what = "floor reciprocity";
    if m == 0 || n == 0 {
        return Err(Error::UnsupportedInput { what, value: 0 });
    }
    pair_width_guard(m, n, what)?;
    let full_sum = |a: u64, b: u64| -> i64 {
        // sum_{k=1}^{b} floor(k*a/b)
        (1..=b).map(|k| (k * a / b) as i64).sum()
    };
    let lhs = full_sum(m, n) + full_sum(n, m);
    let rhs = (m * n + gcd(m, n)) as i64;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_via_floor_examples() {
        assert_eq!(gcd_via_floor(2, 3).unwrap(), 1); // 2*(0+1) + 2 + 3 - 6
        assert_eq!(gcd_via_floor(5, 5).unwrap(), 5); // floor sum n(n-1)/2 = 10
        assert_eq!(gcd_via_floor(6, 4).unwrap(), 2); // 2*8 + 6 + 4 - 24
        assert_eq!(gcd_via_floor(7, 1).unwrap(), 1); // empty sum
    }

    #[test]
    fn gcd_via_floor_rejects_zero_and_oversized_inputs() {
        assert!(gcd_via_floor(0, 3).is_err());
        assert!(gcd_via_floor(3, 0).is_err());
        assert!(matches!(
            gcd_via_floor(u64::MAX / 2, 100),
            Err(Error::Overflow { .. })
        ));
    }

    #[test]
    fn matches_euclidean_gcd_beyond_k_equals_n() {
        for n in 1..=120u64 {
            for k in 1..=3 * n {
                assert_eq!(
                    gcd_via_floor(k, n).unwrap(),
                    gcd(k, n) as i64,
                    "gcd_via_floor({k}, {n})"
                );
            }
        }
    }

    #[test]
    fn argument_swap_agrees_with_gcd_symmetry() {
        for k in 1..=300u64 {
            for n in 1..=300u64 {
                let a = gcd_via_floor(k, n).unwrap();
                let b = gcd_via_floor(n, k).unwrap();
                assert_eq!(a, b, "swap ({k}, {n})");
                assert_eq!(a, gcd(k, n) as i64);
            }
        }
    }

    #[test]
    fn reciprocity_examples() {
        assert_eq!(floor_reciprocity_sides(4, 6).unwrap(), (26, 26)); // 12+14 vs 24+2
        assert_eq!(floor_reciprocity_sides(1, 1).unwrap(), (2, 2));
        assert_eq!(floor_reciprocity_sides(5, 5).unwrap(), (30, 30));
    }

    #[test]
    fn reciprocity_holds_on_small_pairs() {
        for m in 1..=80u64 {
            for n in 1..=80u64 {
                let (lhs, rhs) = floor_reciprocity_sides(m, n).unwrap();
                assert_eq!(lhs, rhs, "reciprocity ({m}, {n})");
            }
        }
    }
}
