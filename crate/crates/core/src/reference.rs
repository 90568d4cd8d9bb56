//! Independent reference implementations of the arithmetic functions the
//! identities are checked against: totient, divisor count, Mobius, the
//! gcd-sum (Pillai) function, Jordan totients, and Mertens sums.
//!
//! Each function comes in a definition-based form (literal brute force,
//! used as the oracle) and, where one exists, a factorization-based form.
//! [`ReferenceTables`] provides sieved batch lookups for verification
//! sweeps, where per-n brute force would dominate the runtime.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::exact::{gcd, FactoredInteger, SpfSieve};
use crate::Result;

/// Count of k in 1..=n with gcd(k, n) = 1. The k = n term contributes only
/// at n = 1, giving phi(1) = 1.
pub fn phi_definition(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

/// Totient from the Euler product: n * prod (p-1)/p, evaluated per prime
/// factor as an exact integer divide-then-multiply.
pub fn phi_factored(n: &FactoredInteger) -> u64 {
    let mut v = n.value();
    for p in n.distinct_primes() {
        v = v / p * (p - 1);
    }
    v
}

/// Divisor count by a full divisibility scan of 1..=n.
pub fn tau_definition(n: u64) -> u64 {
    (1..=n).filter(|d| n.is_multiple_of(*d)).count() as u64
}

/// Divisor count as the product of (exponent + 1).
pub fn tau_factored(n: &FactoredInteger) -> u64 {
    n.factors().iter().map(|&(_, e)| (e + 1) as u64).product()
}

/// Mobius function: 1 at n = 1, 0 when any square divides n, otherwise
/// (-1)^(number of prime factors).
pub fn mu(n: &FactoredInteger) -> i32 {
    if !n.is_squarefree() {
        0
    } else if n.factors().len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Gcd-sum function P(n) = sum of gcd(k, n) for k in 1..=n.
pub fn pillai_definition(n: u64) -> u64 {
    (1..=n).map(|k| gcd(k, n)).sum()
}

/// Jordan totient: n^k * prod (1 - p^-k), evaluated exactly per prime
/// factor. Overflow of n^k is detected and reported.
pub fn jordan(k: u32, n: &FactoredInteger) -> Result<u64> {
    let overflow = || Error::Overflow { what: "jordan" };
    if k == 0 {
        return Err(Error::UnsupportedInput {
            what: "jordan order",
            value: 0,
        });
    }
    let mut v: u128 = (n.value() as u128).checked_pow(k).ok_or_else(overflow)?;
    for p in n.distinct_primes() {
        let pk = (p as u128).checked_pow(k).ok_or_else(overflow)?;
        v = v / pk * (pk - 1);
    }
    u64::try_from(v).map_err(|_| overflow())
}

/// Mertens function M(n): cumulative Mobius sum, computed through a sieve.
pub fn mertens(n: u64) -> i64 {
    if n == 0 {
        return 0;
    }
    let tables = ReferenceTables::new(n);
    (1..=n).map(|k| tables.mu(k) as i64).sum()
}

/// Sieved lookup tables for phi, tau, and mu up to a fixed limit, built
/// from one smallest-prime-factor pass. Immutable after construction.
pub struct ReferenceTables {
    limit: u64,
    phi: Vec<u32>,
    tau: Vec<u32>,
    mu: Vec<i8>,
    spf: SpfSieve,
}

impl ReferenceTables {
    pub fn new(limit: u64) -> Self {
        let limit = limit.max(1);
        let spf = SpfSieve::new(limit);
        let len = limit as usize + 1;
        let mut phi = vec![0u32; len];
        let mut tau = vec![0u32; len];
        let mut mu = vec![0i8; len];
        // exponent of the smallest prime factor, for the tau recurrence
        let mut spf_exp = vec![0u32; len];
        if limit >= 1 {
            phi[1] = 1;
            tau[1] = 1;
            mu[1] = 1;
        }
        for i in 2..len {
            let p = spf.smallest_factor(i as u64).unwrap() as usize;
            let m = i / p;
            if m.is_multiple_of(p) {
                phi[i] = phi[m] * p as u32;
                mu[i] = 0;
                let e = spf_exp[m];
                tau[i] = tau[m] / (e + 1) * (e + 2);
                spf_exp[i] = e + 1;
            } else {
                phi[i] = phi[m] * (p as u32 - 1);
                mu[i] = -mu[m];
                tau[i] = tau[m] * 2;
                spf_exp[i] = 1;
            }
        }
        ReferenceTables {
            limit,
            phi,
            tau,
            mu,
            spf,
        }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn phi(&self, n: u64) -> u64 {
        self.phi[n as usize] as u64
    }

    pub fn tau(&self, n: u64) -> u64 {
        self.tau[n as usize] as u64
    }

    pub fn mu(&self, n: u64) -> i32 {
        self.mu[n as usize] as i32
    }

    pub fn spf(&self) -> &SpfSieve {
        &self.spf
    }
}

/// Selector for the reference functions, as exposed by `eval` and the
/// bench harness. Jordan totients carry their order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithFunctionId {
    Phi,
    Tau,
    Mu,
    Pillai,
    Jordan { k: u32 },
    Mertens,
}

impl ArithFunctionId {
    pub fn name(&self) -> &'static str {
        match self {
            ArithFunctionId::Phi => "phi",
            ArithFunctionId::Tau => "tau",
            ArithFunctionId::Mu => "mu",
            ArithFunctionId::Pillai => "pillai",
            ArithFunctionId::Jordan { .. } => "jordan",
            ArithFunctionId::Mertens => "mertens",
        }
    }
}

impl fmt::Display for ArithFunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithFunctionId::Jordan { k } => write!(f, "jordan[{k}]"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for ArithFunctionId {
    type Err = Error;

    /// Parses a bare function name; `jordan` defaults to order 1.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi" | "totient" => Ok(ArithFunctionId::Phi),
            "tau" => Ok(ArithFunctionId::Tau),
            "mu" | "mobius" => Ok(ArithFunctionId::Mu),
            "pillai" | "gcd-sum" => Ok(ArithFunctionId::Pillai),
            "jordan" => Ok(ArithFunctionId::Jordan { k: 1 }),
            "mertens" => Ok(ArithFunctionId::Mertens),
            _ => Err(Error::UnknownFunction(s.to_string())),
        }
    }
}
