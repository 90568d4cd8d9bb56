//! Exact integer primitives: gcd, factorization, divisor enumeration.
//!
//! Factorization walks a shared smallest-prime-factor table for inputs up
//! to [`DEFAULT_SIEVE_LIMIT`] and falls back to plain trial division above
//! it. The table is built once on first use and is read-only afterwards,
//! so everything here is safe to call concurrently.

use std::sync::OnceLock;

use crate::error::Error;
use crate::Result;

/// Greatest common divisor by the Euclidean algorithm, with gcd(0, 0) = 0
/// and gcd(0, n) = n.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Ceiling of the shared smallest-prime-factor table.
pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;

/// Largest input `factorize` accepts. Trial division above the sieve limit
/// costs at most sqrt(n)/2 divisions, so this keeps a single call well
/// under a millisecond.
pub const MAX_FACTOR_INPUT: u64 = 1_000_000_000_000;

/// Smallest-prime-factor table built by a linear sieve.
pub struct SpfSieve {
    spf: Vec<u32>,
}

impl SpfSieve {
    /// Builds the table for all n <= limit.
    pub fn new(limit: u64) -> Self {
        let limit = limit.max(1) as usize;
        let mut spf = vec![0u32; limit + 1];
        let mut primes: Vec<u32> = Vec::new();
        for i in 2..=limit {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            for &p in &primes {
                let ip = i * p as usize;
                if p > spf[i] || ip > limit {
                    break;
                }
                spf[ip] = p;
            }
        }
        SpfSieve { spf }
    }

    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Smallest prime factor of n, or `None` when n < 2 or n is beyond the
    /// table.
    pub fn smallest_factor(&self, n: u64) -> Option<u64> {
        if n < 2 || n > self.limit() {
            return None;
        }
        Some(self.spf[n as usize] as u64)
    }

    /// Factors n by repeated table lookups. Panics if n exceeds the table;
    /// callers outside that range go through [`factorize`] instead.
    pub fn factor(&self, mut n: u64) -> Vec<(u64, u32)> {
        assert!(n >= 1 && n <= self.limit(), "input outside sieve range");
        let mut factors = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            let mut exp = 0u32;
            while n.is_multiple_of(p) {
                n /= p;
                exp += 1;
            }
            factors.push((p, exp));
        }
        factors.sort_unstable();
        factors
    }
}

fn shared_sieve() -> &'static SpfSieve {
    static SIEVE: OnceLock<SpfSieve> = OnceLock::new();
    SIEVE.get_or_init(|| SpfSieve::new(DEFAULT_SIEVE_LIMIT))
}

/// A positive integer together with its canonical prime factorization.
///
/// Invariants, guaranteed by construction: the primes are strictly
/// ascending, every exponent is at least 1, the product of prime powers
/// equals `value`, and `value == 1` exactly when the factor list is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Prime/exponent pairs in ascending prime order.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// All divisors of `value`, strictly ascending. The count is the
    /// product of (exponent + 1) over the factors.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Factors n into its canonical prime decomposition.
///
/// Rejects n = 0 and inputs above [`MAX_FACTOR_INPUT`].
pub fn factorize(n: u64) -> Result<FactoredInteger> {
    if n == 0 {
        return Err(Error::UnsupportedInput {
            what: "factorize",
            value: 0,
        });
    }
    if n > MAX_FACTOR_INPUT {
        return Err(Error::UnsupportedInput {
            what: "factorize",
            value: n,
        });
    }
    let sieve = shared_sieve();
    let factors = if n <= sieve.limit() {
        sieve.factor(n)
    } else {
        trial_division(n)
    };
    Ok(FactoredInteger { value: n, factors })
}

fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut strip = |n: &mut u64, p: u64| {
        let mut exp = 0u32;
        while (*n).is_multiple_of(p) {
            *n /= p;
            exp += 1;
        }
        if exp > 0 {
            factors.push((p, exp));
        }
    };
    strip(&mut n, 2);
    strip(&mut n, 3);
    let mut p = 5u64;
    while p * p <= n {
        strip(&mut n, p);
        strip(&mut n, p + 2);
        p += 6;
    }
    if n > 1 {
        factors.push((n, 1));
    }
    factors
}

/// All divisors of the factored integer, strictly ascending.
pub fn divisors(n: &FactoredInteger) -> Vec<u64> {
    n.divisors()
}
