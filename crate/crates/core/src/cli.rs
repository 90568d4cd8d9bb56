//! Command-line interface: `eval`, `verify`, `bench`, and `list`.
//!
//! Exit codes: 0 success / all identities pass; 1 at least one identity
//! violation; 2 usage or domain error; 3 a numeric guard tripped
//! (unroundable residual or overflow).

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::approx::EvalValue;
use crate::bench::{bench, records_to_csv, BenchTarget};
use crate::error::Error;
use crate::evaluators::{
    mobius_sum_lhs, phi_formula, pillai_form, tau_formula, MobiusSum, PhiMethod, PillaiForm,
    TauForm,
};
use crate::exact::factorize;
use crate::reference::{
    jordan, mertens, mu, phi_definition, phi_factored, pillai_definition, tau_definition,
    tau_factored, ArithFunctionId,
};
use crate::registry::{list_identities, IdentityId, ALL_IDENTITIES};
use crate::verify::{verify_selected, RangeConfig, Verdict};
use crate::Result;

#[derive(Parser)]
#[command(
    name = "arith-identities",
    version,
    about = "Evaluate, verify, and benchmark classical arithmetic-function identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a reference function, optionally through one of its
    /// identity-based methods
    Eval {
        /// Function: phi, tau, mu, pillai, jordan, mertens
        function: String,
        n: u64,
        /// Identity-based method, e.g. res1/fourier/res2/res3 for phi,
        /// toto/res1-form/... for tau, divisor-phi/... for pillai,
        /// expsum for mu
        #[arg(long)]
        method: Option<String>,
        /// Order of the Jordan totient
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Sweep identities over ranges and compare both sides
    Verify {
        /// Comma-separated identity ids, e.g. I1,I6
        #[arg(long, value_delimiter = ',')]
        id: Vec<String>,
        /// Verify the full catalog (the default when --id is absent)
        #[arg(long, conflicts_with = "id")]
        all: bool,
        /// Override the sweep ceiling for single-n identities
        #[arg(long)]
        max_n: Option<u64>,
        /// Sweep ceiling for both members of pair identities
        #[arg(long)]
        max_pair: Option<u64>,
        /// k sweeps to k_multiplier * n for the (k, n) identities
        #[arg(long)]
        k_multiplier: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report to this path and print a one-line summary
        #[arg(long)]
        out: Option<PathBuf>,
        /// Stop at the first failing instance
        #[arg(long)]
        fail_fast: bool,
        /// Worker threads for the sweeps
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Time evaluators across an n grid and print CSV records
    Bench {
        /// Comma-separated targets: identity ids (I3) or function names
        /// (phi_factored) [default: I3]
        #[arg(long, value_delimiter = ',')]
        id: Vec<String>,
        /// Comma-separated ascending n grid [default: 250,500,1000,2000]
        #[arg(long, value_delimiter = ',')]
        ns: Vec<u64>,
        /// Timed repetitions per grid point (minimum 3)
        #[arg(long, default_value_t = 5)]
        reps: u32,
    },
    /// List the identity catalog
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Writes to stdout, swallowing broken pipes so `list | head` and friends
/// exit quietly.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

/// Parses argv and runs the selected command, returning the process exit
/// code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Eval {
            function,
            n,
            method,
            k,
        } => cmd_eval(&function, n, method.as_deref(), k),
        Command::Verify {
            id,
            all: _,
            max_n,
            max_pair,
            k_multiplier,
            format,
            out,
            fail_fast,
            workers,
        } => {
            let ids = parse_ids(&id)?;
            let mut cfg = RangeConfig {
                max_n,
                fail_fast,
                workers: workers.max(1),
                ..RangeConfig::default()
            };
            if let Some(p) = max_pair {
                cfg.max_pair = p;
            }
            if let Some(m) = k_multiplier {
                cfg.k_multiplier = m;
            }
            cmd_verify(&ids, &cfg, format, out.as_deref())
        }
        Command::Bench { id, ns, reps } => cmd_bench(&id, &ns, reps),
        Command::List { format } => cmd_list(format),
    }
}

fn parse_ids(tokens: &[String]) -> Result<Vec<IdentityId>> {
    if tokens.is_empty() {
        return Ok(ALL_IDENTITIES.to_vec());
    }
    tokens.iter().map(|t| IdentityId::from_token(t)).collect()
}

fn require_positive(n: u64, what: &'static str) -> Result<()> {
    if n == 0 {
        return Err(Error::UnsupportedInput { what, value: 0 });
    }
    Ok(())
}

fn cmd_eval(function: &str, n: u64, method: Option<&str>, k: u32) -> Result<i32> {
    let id: ArithFunctionId = function.parse()?;
    let unknown_method = |m: &str| Error::UnknownMethod {
        function: function.to_string(),
        method: m.to_string(),
    };
    let value = match id {
        ArithFunctionId::Phi => match method {
            None | Some("definition") => {
                require_positive(n, "phi")?;
                EvalValue::Exact(phi_definition(n) as i64)
            }
            Some("factored") => EvalValue::Exact(phi_factored(&factorize(n)?) as i64),
            Some("res1") => phi_formula(n, PhiMethod::Res1)?,
            Some("fourier") => phi_formula(n, PhiMethod::Fourier)?,
            Some("res2") => phi_formula(n, PhiMethod::Res2)?,
            Some("res3") => phi_formula(n, PhiMethod::Res3)?,
            Some(m) => return Err(unknown_method(m)),
        },
        ArithFunctionId::Tau => match method {
            None | Some("definition") => {
                require_positive(n, "tau")?;
                EvalValue::Exact(tau_definition(n) as i64)
            }
            Some("factored") => EvalValue::Exact(tau_factored(&factorize(n)?) as i64),
            Some("toto") => tau_formula(n, TauForm::Toto)?,
            Some("res1-form") => tau_formula(n, TauForm::Res1Form)?,
            Some("res2-form") => tau_formula(n, TauForm::Res2Form)?,
            Some("res3-form") => tau_formula(n, TauForm::Res3Form)?,
            Some(m) => return Err(unknown_method(m)),
        },
        ArithFunctionId::Mu => match method {
            None | Some("definition") | Some("factored") => {
                EvalValue::Exact(mu(&factorize(n)?) as i64)
            }
            Some("expsum") => mobius_sum_lhs(n, MobiusSum::Expsum)?,
            Some(m) => return Err(unknown_method(m)),
        },
        ArithFunctionId::Pillai => match method {
            None | Some("definition") => {
                require_positive(n, "pillai")?;
                EvalValue::Exact(pillai_definition(n) as i64)
            }
            Some("divisor-phi") => pillai_form(n, PillaiForm::DivisorPhi)?,
            Some("divisor-tau-mu") => pillai_form(n, PillaiForm::DivisorTauMu)?,
            Some("padic-product") => pillai_form(n, PillaiForm::PadicProduct)?,
            Some("phi-over-d") => pillai_form(n, PillaiForm::PhiOverD)?,
            Some(m) => return Err(unknown_method(m)),
        },
        ArithFunctionId::Jordan { .. } => match method {
            None | Some("definition") => EvalValue::Exact(jordan(k, &factorize(n)?)? as i64),
            Some(m) => return Err(unknown_method(m)),
        },
        ArithFunctionId::Mertens => match method {
            None | Some("definition") => {
                require_positive(n, "mertens")?;
                EvalValue::Exact(mertens(n))
            }
            Some(m) => return Err(unknown_method(m)),
        },
    };
    emit(&format!("{value}\n"));
    Ok(0)
}

fn cmd_verify(
    ids: &[IdentityId],
    cfg: &RangeConfig,
    format: Format,
    out: Option<&std::path::Path>,
) -> Result<i32> {
    let report = verify_selected(ids, cfg);
    let body = match format {
        Format::Text => report.render_text(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match out {
        Some(path) => {
            std::fs::write(path, &body)?;
            emit(&format!(
                "{} -> {}\n",
                report.summary_line(),
                path.display()
            ));
        }
        None => emit(&body),
    }
    Ok(if report.verdict == Verdict::Pass {
        0
    } else {
        1
    })
}

fn cmd_bench(targets: &[String], ns: &[u64], reps: u32) -> Result<i32> {
    let targets: Vec<BenchTarget> = if targets.is_empty() {
        vec![BenchTarget::Identity(IdentityId::PhiRes1)]
    } else {
        targets
            .iter()
            .map(|t| BenchTarget::parse(t))
            .collect::<Result<_>>()?
    };
    let default_grid = [250u64, 500, 1000, 2000];
    let grid: &[u64] = if ns.is_empty() { &default_grid } else { ns };
    let records = bench(&targets, grid, reps)?;
    emit(&records_to_csv(&records));
    Ok(0)
}

fn cmd_list(format: Format) -> Result<i32> {
    let mut out = String::new();
    match format {
        Format::Json => {
            out.push_str(
                &serde_json::to_string_pretty(list_identities()).expect("catalog serializes"),
            );
            out.push('\n');
        }
        Format::Text | Format::Csv => {
            for d in list_identities() {
                out.push_str(&format!(
                    "{:<5} {:<22} {:<10} {:<9} {:<10} {:<24} {}\n",
                    d.id.token(),
                    d.name,
                    d.arity.label(),
                    d.mode.label(),
                    d.cost_class.label(),
                    d.domain.to_string(),
                    d.anchor
                ));
                if let Some(note) = d.note {
                    out.push_str(&format!("      note: {note}\n"));
                }
            }
        }
    }
    emit(&out);
    Ok(0)
}
