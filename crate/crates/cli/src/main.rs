use clap::{Parser, Subcommand, ValueEnum};
use cudiv::bundle::MultiLowerBound;
use cudiv::divisibility::{least_with, matrix_div, DivKind, DivisibilityReport, SearchConfig};
use cudiv::euler::{euler_of_family_guarded, hall_check, SetFamily};
use cudiv::model::{CuModel, FiniteCuModel};
use cudiv::suite::run_suite;
use cudiv::villadsen::{build, verify_lm_simple2, verify_thm_inf_tensor, verify_thm_simple, Variant};
use cudiv::{Budget, Error};
use serde::Serialize;
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MALFORMED: u8 = 3;
const EXIT_GUARD: u8 = 4;

#[derive(Parser)]
#[command(name = "cudiv", version, about = "Divisibility numbers of Cuntz-semigroup models")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    /// Newline-delimited JSON records.
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Div_m of the unit k in the matrix-algebra model ExtNat(k).
    MatrixDiv {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
    },
    /// Least-n reports of every divisibility notion for a model file.
    Analyze {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        m: u64,
        /// Restrict to one notion: div, decomp, weakdiv or cov.
        #[arg(long)]
        kind: Option<DivKind>,
        #[arg(long)]
        cutoff: Option<u64>,
    },
    /// Euler class of a family of line bundles, or the guard verdict.
    Euler {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        max_terms: Option<usize>,
    },
    /// Hall feasibility of a family with a re-checkable certificate.
    Hall {
        #[arg(long)]
        family: PathBuf,
    },
    /// Construction data and certified bounds for a staged construction.
    Villadsen {
        /// simple1, simple2 or inf_tensor.
        #[arg(long)]
        variant: Variant,
        #[arg(long = "N", default_value_t = 1)]
        big_n: u64,
        #[arg(long)]
        n: u64,
        /// simple2: exponent k of m = 2^k.
        #[arg(long, default_value_t = 1)]
        k: u32,
        /// inf_tensor: number of tensor factors.
        #[arg(long = "factors", default_value_t = 2)]
        factors: usize,
    },
    /// Runs the invariant property suites.
    VerifySuite {
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Schema(_)
        | Error::NotCommutative { .. }
        | Error::NotAssociative { .. }
        | Error::NotNeutral(_)
        | Error::NotAntisymmetric { .. }
        | Error::OrderIncompatible { .. }
        | Error::NotPositive(_)
        | Error::BadTop { .. } => EXIT_MALFORMED,
        Error::SearchSpaceTooLarge { .. } | Error::TermGuard { .. } | Error::TooLarge(_) | Error::MultiplicityOverflow(_) => {
            EXIT_GUARD
        }
        _ => EXIT_USAGE,
    }
}

struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(exit_code(&e), e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(EXIT_MALFORMED, format!("{}: {e}", path.display())))
}

fn emit(format: Format, record: &impl Serialize, table: impl FnOnce() -> String) {
    match format {
        Format::Records => println!("{}", serde_json::to_string(record).expect("records serialize")),
        Format::Table => print!("{}", table()),
    }
}

fn labelled(model: &FiniteCuModel, u: usize, r: &DivisibilityReport<usize>) -> serde_json::Value {
    let witness = r.witness.as_ref().map(|w| {
        json!({
            "elements": w.elements.iter().map(|x| model.label(x)).collect::<Vec<_>>(),
            "parts": w.parts.iter().map(|p| p.iter().map(|(k, y)| json!([k, model.label(y)])).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    });
    json!({
        "model": model.name(),
        "u": model.label(&u),
        "kind": r.kind,
        "m": r.m,
        "value": r.value,
        "witness": witness,
        "cutoff": r.cutoff,
        "proof_tag": r.proof_tag,
    })
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let format = cli.format;
    match cli.command {
        Command::MatrixDiv { m, k } => {
            let value = matrix_div(m, k)?;
            emit(format, &json!({ "m": m, "k": k, "value": value }), || format!("Div_{m}({k}) = {value}\n"));
            Ok(true)
        }
        Command::Analyze { model, m, kind, cutoff } => {
            let model = FiniteCuModel::load(&read(&model)?)?;
            let mut cfg = SearchConfig::default();
            if let Some(c) = cutoff {
                cfg.cutoff = c;
            }
            let u = model.unit();
            let kinds = kind.map_or(DivKind::ALL.to_vec(), |k| vec![k]);
            for kind in kinds {
                let r = least_with(&model, &u, kind, m, &cfg)?;
                let record = labelled(&model, u, &r);
                emit(format, &record, || {
                    let w = record["witness"]["elements"].as_array().map(|xs| {
                        xs.iter().map(|x| x.as_str().unwrap_or("?")).collect::<Vec<_>>().join(", ")
                    });
                    let tag = r.proof_tag.as_deref().map(|t| format!("  ({t})")).unwrap_or_default();
                    format!("{:<8} m={m}  {:<6} witness [{}]{tag}\n", kind.to_string(), r.value.to_string(), w.unwrap_or_default())
                });
            }
            Ok(true)
        }
        Command::Euler { family, max_terms } => {
            let f = SetFamily::from_json(&read(&family)?)?;
            let terms = max_terms.unwrap_or(Budget::from_env().terms);
            let (poly, nonzero, via) = match euler_of_family_guarded(&f, terms) {
                Ok(p) => (Some(p.to_string()), !p.is_zero(), "polynomial"),
                Err(Error::TermGuard { .. }) => (None, hall_check(&f)?.feasible, "matching"),
                Err(e) => return Err(e.into()),
            };
            let record = json!({ "euler": poly, "nonzero": nonzero, "decided_by": via });
            emit(format, &record, || {
                let p = poly.clone().unwrap_or_else(|| "(term guard exceeded)".into());
                format!("e = {p}\nnonzero: {nonzero} (by {via})\n")
            });
            Ok(nonzero)
        }
        Command::Hall { family } => {
            let f = SetFamily::from_json(&read(&family)?)?;
            let cert = hall_check(&f)?;
            emit(format, &cert, || match (&cert.transversal, &cert.violator) {
                (Some(t), _) => format!("feasible\ntransversal {t:?}\n"),
                (_, Some(v)) => format!(
                    "infeasible\nviolator members {:?}: union {} < demand {}\n",
                    v.members, v.union_size, v.demand
                ),
                _ => "inconsistent certificate\n".into(),
            });
            Ok(cert.feasible)
        }
        Command::Villadsen { variant, big_n, n, k, factors } => villadsen(format, variant, big_n, n, k, factors),
        Command::VerifySuite { filter, seed } => {
            let results = run_suite(filter.as_deref(), seed)?;
            let mut all = true;
            for r in &results {
                all &= r.pass;
                let record = json!({ "seed": seed, "property": r.name, "pass": r.pass, "checked": r.checked, "failure": r.failure });
                emit(format, &record, || {
                    let status = if r.pass { "pass" } else { "FAIL" };
                    let why = r.failure.as_deref().map(|f| format!("  {f}")).unwrap_or_default();
                    format!("{status}  {:<22} {:>8} checked{why}\n", r.name, r.checked)
                });
            }
            if format == Format::Table {
                println!("seed {seed}: {} of {} properties pass", results.iter().filter(|r| r.pass).count(), results.len());
            }
            Ok(all)
        }
    }
}

fn villadsen(format: Format, variant: Variant, big_n: u64, n: u64, k: u32, factors: usize) -> Result<bool, Failure> {
    match variant {
        Variant::Simple1 => {
            let spec = build(variant, big_n, n)?;
            let interval = verify_thm_simple(big_n, n)?;
            emit(format, &json!({ "construction": spec, "interval": interval }), || {
                format!(
                    "q_{n} = {}\nd_{n} = {}\ninterval {interval}: {} < div_2 ≤ Div_2 ≤ {}\nupper witness p_{{J_2}} with n = {}\n{}\n",
                    spec.q_n, spec.d_n, interval.lower, interval.upper, interval.upper_cert.n, interval.provenance
                )
            });
            Ok(true)
        }
        Variant::Simple2 => {
            let spec = build(variant, 0, n)?;
            let outcome = verify_lm_simple2(k, n)?;
            let holds = outcome.holds();
            emit(format, &json!({ "construction": spec, "lower_bound": outcome }), || {
                let verdict = match &outcome {
                    MultiLowerBound::Matching { m, big_n, bound } => {
                        format!("div_{m} > {big_n}: {} ({} members)", bound.holds, bound.family.members.len())
                    }
                    MultiLowerBound::InfiniteByRank { m, rank } => format!("div_{m} = ∞ by rank ({m} > {rank})"),
                };
                format!("q_{n} = {}\nd_{n} = {}\n{verdict}\n", spec.q_n, spec.d_n)
            });
            Ok(holds)
        }
        Variant::InfTensor { .. } => {
            let outcome = verify_thm_inf_tensor(big_n, factors, n)?;
            emit(format, &outcome, || {
                format!(
                    "{} tensor factors, stage {n}: {} members on {} points\ndiv_2 > {big_n}: {}\n",
                    factors,
                    outcome.family.members.len(),
                    outcome.family.ground,
                    outcome.holds
                )
            });
            Ok(outcome.holds)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
