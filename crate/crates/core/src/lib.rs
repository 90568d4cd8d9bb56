//! Exact and floating-point evaluation of classical arithmetic-function
//! identities, with a sweep verifier and a micro-benchmark harness.
//!
//! Three layers:
//!
//! * [`reference`] holds independent implementations of the usual
//!   multiplicative functions (totient, divisor count, Mobius, the gcd-sum
//!   function, Jordan totients, Mertens sums), each with a brute-force
//!   definition and a factorization-based variant, plus sieved tables for
//!   batch lookups;
//! * [`evaluators`] computes the identities that rewrite those functions
//!   as floor sums, gcd sums, and cosine sums, exactly as stated — exact
//!   modes enforce zero-remainder division, float modes use compensated
//!   summation under a rounding guard, rational modes must reduce to
//!   integers;
//! * [`verify`] sweeps the whole catalog (see [`registry`]) over
//!   configurable ranges, compares both sides of every instance, and
//!   aggregates JSON/CSV/text reports; [`bench`] measures evaluator cost
//!   across n grids.
//!
//! The `arith-identities` binary exposes all of it on the command line.

#![forbid(unsafe_code)]

pub mod approx;
pub mod bench;
pub mod cli;
pub mod error;
pub mod evaluators;
pub mod exact;
pub mod rational;
pub mod reference;
pub mod registry;
pub mod verify;

pub use approx::{ApproxInteger, EvalValue, KahanSum};
pub use error::Error;
pub use exact::{divisors, factorize, gcd, FactoredInteger};
pub use rational::ExactRational;
pub use registry::{list_identities, IdentityDescriptor, IdentityId, ALL_IDENTITIES};
pub use verify::{verify_all, verify_identity, verify_selected, RangeConfig, RunReport};

pub type Result<T> = std::result::Result<T, Error>;
