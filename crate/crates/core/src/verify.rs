//! Sweep verifier: evaluates every identity over configured ranges,
//! compares both sides, and aggregates per-identity and whole-run reports.
//!
//! Sweeps may be partitioned across worker threads; evaluation order is
//! immaterial because every instance is independent, and outcomes are
//! collected back in enumeration order, so reports are identical for any
//! worker count.

use std::fmt;
use std::time::Instant;

use chrono::{SecondsFormat, Utc};
use rayon::prelude::*;
use serde::Serialize;

use crate::approx::{ApproxInteger, EvalValue, RESIDUAL_WARN_LIMIT};
use crate::evaluators::{
    floor_reciprocity_sides, gcd_via_floor, lemma_sides, menon_rhs, mobius_sum_lhs, phi_formula,
    phi_inversion_sum, pillai_form, tau_formula, Lemma, MobiusSum, PhiMethod, PillaiForm, TauForm,
};
use crate::exact::{factorize, gcd};
use crate::rational::ExactRational;
use crate::reference::{phi_factored, pillai_definition, ReferenceTables};
use crate::registry::{
    descriptor, Arity, CostClass, IdentityDescriptor, IdentityId, ALL_IDENTITIES,
};
use crate::Result;

/// Sweep ranges and execution knobs for a verification run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RangeConfig {
    /// Overrides the per-class default ceiling for every single-n identity
    /// (and the n axis of the (k, n) identities) when set.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_n: Option<u64>,
    /// Both members of the (m, n) pair identities sweep 1..=max_pair.
    pub max_pair: u64,
    /// The (k, n) identities sweep k in 1..=k_multiplier*n.
    pub k_multiplier: u64,
    /// Default n ceiling for the (k, n) identities.
    pub max_n_floor_pair: u64,
    /// Default n ceiling per cost class, used when `max_n` is unset.
    pub max_n_quadratic: u64,
    pub max_n_linear: u64,
    pub max_n_constant: u64,
    /// Stop at the first failing instance. Forces serial evaluation so
    /// "first" is well-defined.
    pub fail_fast: bool,
    /// Worker threads for the sweeps. Deliberately not serialized: reports
    /// must stay byte-comparable across worker counts.
    #[serde(skip)]
    pub workers: usize,
    /// Self-test hook: perturbs the oracle side of the named identity so
    /// the failure path can be exercised against true identities.
    #[doc(hidden)]
    #[serde(skip)]
    pub perturb: Option<IdentityId>,
}

impl Default for RangeConfig {
    fn default() -> Self {
        RangeConfig {
            max_n: None,
            max_pair: 200,
            k_multiplier: 3,
            max_n_floor_pair: 500,
            max_n_quadratic: 1000,
            max_n_linear: 2000,
            max_n_constant: 100_000,
            fail_fast: false,
            workers: 1,
            perturb: None,
        }
    }
}

impl RangeConfig {
    /// Resolved n ceiling for a single-n identity (or the n axis of a
    /// (k, n) identity).
    pub fn resolved_max_n(&self, desc: &IdentityDescriptor) -> u64 {
        if let Some(m) = self.max_n {
            return m;
        }
        match desc.arity {
            Arity::PairKn => self.max_n_floor_pair,
            _ => match desc.cost_class {
                CostClass::Constant => self.max_n_constant,
                CostClass::Linear => self.max_n_linear,
                CostClass::Quadratic => self.max_n_quadratic,
            },
        }
    }
}

/// Inputs of one identity instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Inputs {
    Single { n: u64 },
    PairMn { m: u64, n: u64 },
    PairKn { k: u64, n: u64 },
}

impl fmt::Display for Inputs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inputs::Single { n } => write!(f, "n={n}"),
            Inputs::PairMn { m, n } => write!(f, "m={m}, n={n}"),
            Inputs::PairKn { k, n } => write!(f, "k={k}, n={n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutcomeStatus {
    Pass,
    Fail,
    SkippedDegenerate,
}

/// Result of one identity instance.
#[derive(Debug, Clone)]
pub struct VerificationOutcome {
    pub id: IdentityId,
    pub inputs: Inputs,
    pub status: OutcomeStatus,
    pub lhs: Option<EvalValue>,
    pub rhs: Option<EvalValue>,
    pub residual: f64,
    pub error: Option<String>,
}

/// Failure detail carried into reports.
#[derive(Debug, Clone, Serialize)]
pub struct FailureRecord {
    pub inputs: Inputs,
    pub lhs: Option<EvalValue>,
    pub rhs: Option<EvalValue>,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Aggregated result of sweeping one identity.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub name: String,
    pub anchor: String,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub max_residual: f64,
    pub elapsed_ms: u64,
    pub failures: Vec<FailureRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunMeta {
    pub config: RangeConfig,
    pub started_at: String,
}

/// Whole-run report: per-identity aggregates plus the global verdict.
/// The verdict is pass exactly when no identity recorded a failure.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub run: RunMeta,
    pub identities: Vec<IdentityReport>,
    pub verdict: Verdict,
}

/// Evaluates both sides of one identity instance. The left side is the
/// identity's stated left-hand side (usually the reference function), the
/// right side the formula under test.
fn evaluate(
    id: IdentityId,
    inputs: Inputs,
    tables: &ReferenceTables,
) -> Result<(EvalValue, EvalValue)> {
    use IdentityId::*;
    let single = || match inputs {
        Inputs::Single { n } => n,
        other => panic!("identity {id} expects a single n, got {other}"),
    };
    match id {
        GcdFloor => {
            let Inputs::PairKn { k, n } = inputs else {
                panic!("identity I1 expects (k, n) inputs")
            };
            Ok((
                EvalValue::Exact(gcd(k, n) as i64),
                EvalValue::Exact(gcd_via_floor(k, n)?),
            ))
        }
        FloorReciprocity => {
            let Inputs::PairMn { m, n } = inputs else {
                panic!("identity I2 expects (m, n) inputs")
            };
            let (lhs, rhs) = floor_reciprocity_sides(m, n)?;
            Ok((EvalValue::Exact(lhs), EvalValue::Exact(rhs)))
        }
        PhiRes1 => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.phi(n) as i64),
                phi_formula(n, PhiMethod::Res1)?,
            ))
        }
        PhiFourier => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.phi(n) as i64),
                phi_formula(n, PhiMethod::Fourier)?,
            ))
        }
        PhiRes2 => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.phi(n) as i64),
                phi_formula(n, PhiMethod::Res2)?,
            ))
        }
        Menon => {
            let n = single();
            Ok((
                EvalValue::Exact((tables.phi(n) * tables.tau(n)) as i64),
                EvalValue::Exact(menon_rhs(n)? as i64),
            ))
        }
        CoprimeFloorLemma => {
            let Inputs::PairKn { k, n } = inputs else {
                panic!("identity I7 expects (k, n) inputs")
            };
            let (lhs, rhs) = lemma_sides(n, Lemma::CoprimeFloor { k })?;
            Ok((lhs, rhs))
        }
        CoprimeSumLemma => lemma_sides(single(), Lemma::CoprimeSum),
        CosSumZero => lemma_sides(single(), Lemma::CosSum),
        KCosSumHalf => lemma_sides(single(), Lemma::KCosSum),
        PhiRes3 => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.phi(n) as i64),
                phi_formula(n, PhiMethod::Res3)?,
            ))
        }
        TauToto => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.tau(n) as i64),
                tau_formula(n, TauForm::Toto)?,
            ))
        }
        TauRes1Form => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.tau(n) as i64),
                tau_formula(n, TauForm::Res1Form)?,
            ))
        }
        TauRes2Form => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.tau(n) as i64),
                tau_formula(n, TauForm::Res2Form)?,
            ))
        }
        TauRes3Form => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.tau(n) as i64),
                tau_formula(n, TauForm::Res3Form)?,
            ))
        }
        PillaiDivisorPhi | PillaiDivisorTauMu | PillaiPadicProduct | PillaiPhiOverD => {
            let n = single();
            let form = match id {
                PillaiDivisorPhi => PillaiForm::DivisorPhi,
                PillaiDivisorTauMu => PillaiForm::DivisorTauMu,
                PillaiPadicProduct => PillaiForm::PadicProduct,
                _ => PillaiForm::PhiOverD,
            };
            Ok((
                EvalValue::Exact(pillai_definition(n) as i64),
                pillai_form(n, form)?,
            ))
        }
        MobiusExpsum => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.mu(n) as i64),
                mobius_sum_lhs(n, MobiusSum::Expsum)?,
            ))
        }
        MobiusFloorSum => {
            let n = single();
            Ok((mobius_sum_lhs(n, MobiusSum::FloorSum)?, EvalValue::Exact(1)))
        }
        KlineSineSum => {
            let n = single();
            Ok((mobius_sum_lhs(n, MobiusSum::Kline)?, EvalValue::Exact(1)))
        }
        Mu2OverPhi => lemma_sides(single(), Lemma::Mu2OverPhi),
        PhiMultGcd => {
            let Inputs::PairMn { m, n } = inputs else {
                panic!("identity I24 expects (m, n) inputs")
            };
            let (lhs, rhs) = lemma_sides(n, Lemma::PhiMult { m })?;
            Ok((lhs, rhs))
        }
        MobiusInversionPhi => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.phi(n) as i64),
                EvalValue::Exact(phi_inversion_sum(&factorize(n)?)),
            ))
        }
        EulerProductPhi => {
            let n = single();
            Ok((
                EvalValue::Exact(tables.phi(n) as i64),
                EvalValue::Exact(phi_factored(&factorize(n)?) as i64),
            ))
        }
    }
}

/// Domain gate applied before evaluation; out-of-domain inputs become
/// skipped outcomes, never evaluator errors.
fn in_domain(desc: &IdentityDescriptor, inputs: &Inputs) -> bool {
    match (desc.id, inputs) {
        (IdentityId::CoprimeFloorLemma, Inputs::PairKn { k, n }) => gcd(*k, *n) == 1,
        (_, Inputs::Single { n }) => *n >= desc.domain.min_n,
        // pair sweeps start at 1, which is every pair identity's minimum
        _ => true,
    }
}

fn enumerate_inputs(desc: &IdentityDescriptor, cfg: &RangeConfig) -> Vec<Inputs> {
    match desc.arity {
        Arity::SingleN => (1..=cfg.resolved_max_n(desc))
            .map(|n| Inputs::Single { n })
            .collect(),
        Arity::PairMn => (1..=cfg.max_pair)
            .flat_map(|m| (1..=cfg.max_pair).map(move |n| Inputs::PairMn { m, n }))
            .collect(),
        Arity::PairKn => (1..=cfg.resolved_max_n(desc))
            .flat_map(|n| (1..=cfg.k_multiplier * n).map(move |k| Inputs::PairKn { k, n }))
            .collect(),
    }
}

/// Nearest-integer comparison for approx values against exact targets;
/// structural equality for the exact and rational modes. The residual is
/// reported alongside, never compared across sides.
fn compare(lhs: &EvalValue, rhs: &EvalValue) -> (bool, f64) {
    use EvalValue::*;
    match (lhs, rhs) {
        (Exact(a), Exact(b)) => (a == b, 0.0),
        (Rational(a), Rational(b)) => (a == b, 0.0),
        (Rational(r), Exact(v)) | (Exact(v), Rational(r)) => (r.to_integer() == Some(*v), 0.0),
        (Approx(a), Exact(v)) | (Exact(v), Approx(a)) => (a.nearest == *v, a.residual),
        (Approx(a), Rational(r)) | (Rational(r), Approx(a)) => {
            (r.to_integer() == Some(a.nearest), a.residual)
        }
        (Approx(a), Approx(b)) => (a.nearest == b.nearest, a.residual.max(b.residual)),
    }
}

/// Shifts a value by one; used only by the perturbation self-test hook.
fn bump(value: EvalValue) -> EvalValue {
    match value {
        EvalValue::Exact(v) => EvalValue::Exact(v + 1),
        EvalValue::Rational(r) => {
            EvalValue::Rational(r.checked_add(&ExactRational::one()).unwrap_or(r))
        }
        EvalValue::Approx(a) => EvalValue::Approx(ApproxInteger {
            raw: a.raw + 1.0,
            nearest: a.nearest + 1,
            residual: a.residual,
        }),
    }
}

fn run_instance(
    desc: &IdentityDescriptor,
    inputs: Inputs,
    tables: &ReferenceTables,
    perturb: bool,
) -> VerificationOutcome {
    if !in_domain(desc, &inputs) {
        return VerificationOutcome {
            id: desc.id,
            inputs,
            status: OutcomeStatus::SkippedDegenerate,
            lhs: None,
            rhs: None,
            residual: 0.0,
            error: None,
        };
    }
    match evaluate(desc.id, inputs, tables) {
        Ok((lhs, rhs)) => {
            let rhs = if perturb { bump(rhs) } else { rhs };
            let (ok, residual) = compare(&lhs, &rhs);
            VerificationOutcome {
                id: desc.id,
                inputs,
                status: if ok {
                    OutcomeStatus::Pass
                } else {
                    OutcomeStatus::Fail
                },
                lhs: Some(lhs),
                rhs: Some(rhs),
                residual,
                error: None,
            }
        }
        // guard trips (overflow, unroundable residual, inexact division)
        // inside the domain are identity violations, reported as failures
        Err(e) => VerificationOutcome {
            id: desc.id,
            inputs,
            status: OutcomeStatus::Fail,
            lhs: None,
            rhs: None,
            residual: 0.0,
            error: Some(e.to_string()),
        },
    }
}

/// Runs every instance of one identity and returns the outcomes in
/// enumeration order (sorted by input).
pub fn sweep_outcomes(id: IdentityId, cfg: &RangeConfig) -> Vec<VerificationOutcome> {
    let desc = descriptor(id);
    let tables = ReferenceTables::new(table_limit(&[id], cfg));
    sweep_with_tables(desc, cfg, &tables, None)
}

fn sweep_with_tables(
    desc: &IdentityDescriptor,
    cfg: &RangeConfig,
    tables: &ReferenceTables,
    pool: Option<&rayon::ThreadPool>,
) -> Vec<VerificationOutcome> {
    let inputs = enumerate_inputs(desc, cfg);
    let perturb = cfg.perturb == Some(desc.id);
    if cfg.fail_fast {
        let mut outcomes = Vec::new();
        for inp in inputs {
            let outcome = run_instance(desc, inp, tables, perturb);
            let failed = outcome.status == OutcomeStatus::Fail;
            outcomes.push(outcome);
            if failed {
                break;
            }
        }
        outcomes
    } else if let Some(pool) = pool {
        pool.install(|| {
            inputs
                .par_iter()
                .map(|&inp| run_instance(desc, inp, tables, perturb))
                .collect()
        })
    } else {
        inputs
            .into_iter()
            .map(|inp| run_instance(desc, inp, tables, perturb))
            .collect()
    }
}

fn aggregate(
    desc: &IdentityDescriptor,
    outcomes: &[VerificationOutcome],
    elapsed_ms: u64,
) -> IdentityReport {
    let mut checked = 0u64;
    let mut passed = 0u64;
    let mut failed = 0u64;
    let mut skipped = 0u64;
    let mut max_residual = 0.0f64;
    let mut failures = Vec::new();
    for o in outcomes {
        max_residual = max_residual.max(o.residual);
        match o.status {
            OutcomeStatus::Pass => {
                checked += 1;
                passed += 1;
            }
            OutcomeStatus::Fail => {
                checked += 1;
                failed += 1;
                failures.push(FailureRecord {
                    inputs: o.inputs,
                    lhs: o.lhs,
                    rhs: o.rhs,
                    residual: o.residual,
                    error: o.error.clone(),
                });
            }
            OutcomeStatus::SkippedDegenerate => skipped += 1,
        }
    }
    IdentityReport {
        id: desc.id.token().to_string(),
        name: desc.name.to_string(),
        anchor: desc.anchor.to_string(),
        checked,
        passed,
        failed,
        skipped,
        max_residual,
        elapsed_ms,
        failures,
        note: desc.note.map(str::to_string),
    }
}

fn table_limit(ids: &[IdentityId], cfg: &RangeConfig) -> u64 {
    ids.iter()
        .map(|&id| {
            let desc = descriptor(id);
            match desc.arity {
                Arity::SingleN => cfg.resolved_max_n(desc),
                _ => 1,
            }
        })
        .max()
        .unwrap_or(1)
        .max(1)
}

fn build_pool(cfg: &RangeConfig) -> Option<rayon::ThreadPool> {
    if cfg.workers > 1 && !cfg.fail_fast {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .ok()
    } else {
        None
    }
}

/// Sweeps a single identity and aggregates its report.
pub fn verify_identity(id: IdentityId, cfg: &RangeConfig) -> IdentityReport {
    let desc = descriptor(id);
    let tables = ReferenceTables::new(table_limit(&[id], cfg));
    let pool = build_pool(cfg);
    let started = Instant::now();
    let outcomes = sweep_with_tables(desc, cfg, &tables, pool.as_ref());
    aggregate(desc, &outcomes, started.elapsed().as_millis() as u64)
}

/// Runs the selected identities in catalog order. Duplicate selections
/// collapse; unknown ids cannot reach here (they fail at token parse).
pub fn verify_selected(ids: &[IdentityId], cfg: &RangeConfig) -> RunReport {
    let started_at = Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true);
    let selected: Vec<IdentityId> = ALL_IDENTITIES
        .into_iter()
        .filter(|id| ids.contains(id))
        .collect();
    let tables = ReferenceTables::new(table_limit(&selected, cfg));
    let pool = build_pool(cfg);
    let mut identities = Vec::with_capacity(selected.len());
    for id in selected {
        let desc = descriptor(id);
        let started = Instant::now();
        let outcomes = sweep_with_tables(desc, cfg, &tables, pool.as_ref());
        let report = aggregate(desc, &outcomes, started.elapsed().as_millis() as u64);
        let failed = report.failed > 0;
        identities.push(report);
        if cfg.fail_fast && failed {
            break;
        }
    }
    let verdict = if identities.iter().all(|r| r.failed == 0) {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    RunReport {
        run: RunMeta {
            config: cfg.clone(),
            started_at,
        },
        identities,
        verdict,
    }
}

/// Runs the full catalog.
pub fn verify_all(cfg: &RangeConfig) -> RunReport {
    verify_selected(&ALL_IDENTITIES, cfg)
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per identity; the same aggregates the JSON object carries.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "name",
            "anchor",
            "checked",
            "passed",
            "failed",
            "skipped",
            "max_residual",
            "elapsed_ms",
        ])
        .expect("csv header");
        for r in &self.identities {
            w.write_record([
                r.id.as_str(),
                r.name.as_str(),
                r.anchor.as_str(),
                &r.checked.to_string(),
                &r.passed.to_string(),
                &r.failed.to_string(),
                &r.skipped.to_string(),
                &r.max_residual.to_string(),
                &r.elapsed_ms.to_string(),
            ])
            .expect("csv row");
        }
        String::from_utf8(w.into_inner().expect("csv flush")).expect("csv utf8")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "identity verification, started {}\n",
            self.run.started_at
        ));
        out.push_str(&format!(
            "  {:<5} {:<22} {:>9} {:>9} {:>7} {:>8} {:>13} {:>9}\n",
            "id", "name", "checked", "passed", "failed", "skipped", "max_residual", "time"
        ));
        for r in &self.identities {
            let warn = if r.max_residual > RESIDUAL_WARN_LIMIT {
                "  [warn: residual]"
            } else {
                ""
            };
            out.push_str(&format!(
                "  {:<5} {:<22} {:>9} {:>9} {:>7} {:>8} {:>13.3e} {:>7}ms{}\n",
                r.id,
                r.name,
                r.checked,
                r.passed,
                r.failed,
                r.skipped,
                r.max_residual,
                r.elapsed_ms,
                warn
            ));
            for f in r.failures.iter().take(5) {
                let detail = match (&f.lhs, &f.rhs, &f.error) {
                    (Some(l), Some(rv), _) => format!("lhs {l} vs rhs {rv}"),
                    (_, _, Some(e)) => e.clone(),
                    _ => String::from("no detail"),
                };
                out.push_str(&format!("        failure at {}: {}\n", f.inputs, detail));
            }
            if r.failures.len() > 5 {
                out.push_str(&format!(
                    "        ... and {} more failures\n",
                    r.failures.len() - 5
                ));
            }
            if let Some(note) = &r.note {
                out.push_str(&format!("        note: {note}\n"));
            }
        }
        out.push_str(&format!("{}\n", self.summary_line()));
        out
    }

    pub fn summary_line(&self) -> String {
        let failures: u64 = self.identities.iter().map(|r| r.failed).sum();
        let checked: u64 = self.identities.iter().map(|r| r.checked).sum();
        format!(
            "verdict: {} ({} identities, {} instances checked, {} failures)",
            self.verdict,
            self.identities.len(),
            checked,
            failures
        )
    }
}
