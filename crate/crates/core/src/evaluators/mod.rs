//! One evaluator per cataloged identity.
//!
//! Every evaluator computes its formula literally as stated — floor double
//! sums term by term, cosine sums with compensated accumulation — so that
//! a wrong identity has nowhere to hide: exact modes enforce zero-remainder
//! division, float modes refuse to round past the residual guard, and
//! rational modes must reduce to integers.

mod divisor_count;
mod floor_gcd;
mod lemmas;
mod mobius_sums;
mod pillai_forms;
mod sums;
mod totient;

pub use divisor_count::{tau_formula, TauForm};
pub use floor_gcd::{floor_reciprocity_sides, gcd_via_floor};
pub use lemmas::{lemma_sides, Lemma};
pub use mobius_sums::{mobius_sum_lhs, MobiusSum};
pub use pillai_forms::{pillai_form, PillaiForm};
pub use sums::MAX_FLOOR_N;
pub use totient::{menon_rhs, phi_formula, phi_inversion_sum, PhiMethod};
