//! `riordan`: build Riordan arrays, symmetrize them, compute principal
//! minors and run the verification suites.

mod error;
mod family;
mod oeis;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use riordan_core::verify::{self, Config, Status, Suite, SuiteReport};
use riordan_core::{principal_minors, symmetrize, symmetrize_gf, symmetrize_matrix, QMatrix};
use serde_json::{json, Value};

use crate::error::{CliError, CliResult, EXIT_VERIFY};
use crate::family::Family;
use crate::render::Format;

#[derive(Parser)]
#[command(name = "riordan", version, about = "Exact Riordan arrays, symmetrizations and principal minors")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Series truncation order (default 2N+4).
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Seed for the randomized property checks.
    #[arg(long, global = true, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Never touch the network; read b-files from the cache only.
    #[arg(long, global = true)]
    offline: bool,
    /// b-file cache directory.
    #[arg(long, global = true, env = oeis::CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Mirror the reversed rows of the N×N triangle.
    Matrix,
    /// Expand B(xy, 1/y) + B(xy, 1/x) - g(xy).
    Gf,
}

#[derive(Subcommand)]
enum Command {
    /// Print the N×N matrix of a family.
    Matrix {
        #[arg(value_name = "FAMILY")]
        family: Family,
        n: usize,
    },
    /// Print the N×N square symmetrization of a family.
    Symmetrize {
        #[arg(value_name = "FAMILY")]
        family: Family,
        n: usize,
        #[arg(long, value_enum, default_value_t = Route::Matrix)]
        route: Route,
    },
    /// Print leading principal minors.
    Minors {
        #[arg(value_name = "FAMILY")]
        family: Family,
        count: usize,
        /// Take minors of the symmetrization instead of the matrix itself.
        #[arg(long)]
        symmetrize: bool,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        /// Machine-readable report (same as --format json).
        #[arg(long)]
        json: bool,
        /// Cases per randomized property.
        #[arg(long, default_value_t = verify::DEFAULT_CASES)]
        cases: usize,
    },
    /// Show an OEIS b-file, or compare it with the local computation.
    Oeis {
        id: String,
        /// Compare against the sequence computed here.
        #[arg(long)]
        check: bool,
    },
}

fn order_for(cli_order: Option<usize>, n: usize) -> usize {
    cli_order.unwrap_or(2 * n + 4)
}

fn require_size(n: usize) -> CliResult<()> {
    if n == 0 {
        Err(CliError::Usage("N must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn symmetrized(family: Family, n: usize, order: usize, route: Route) -> CliResult<QMatrix> {
    let s = match (route, family.pair(order)) {
        (Route::Gf, Some(pair)) => symmetrize_gf(&pair, n)?,
        (Route::Matrix, Some(pair)) => symmetrize(&pair, n)?,
        (_, None) => symmetrize_matrix(&family.matrix(n, order)?)
            .map_err(|e| CliError::Usage(format!("{family} is not a Riordan array and cannot be symmetrized: {e}")))?,
    };
    Ok(s.into_matrix())
}

fn run(cli: Cli) -> CliResult<(String, u8)> {
    match cli.command {
        Command::Matrix { family, n } => {
            require_size(n)?;
            let m = family.matrix(n, order_for(cli.order, n))?;
            let triangle = family.pair(2).is_some();
            Ok((render::matrix(&m, cli.format, triangle), 0))
        }
        Command::Symmetrize { family, n, route } => {
            require_size(n)?;
            let m = symmetrized(family, n, order_for(cli.order, n), route)?;
            Ok((render::matrix(&m, cli.format, false), 0))
        }
        Command::Minors { family, count, symmetrize } => {
            require_size(count)?;
            let order = order_for(cli.order, count);
            let m = if symmetrize {
                symmetrized(family, count, order, Route::Matrix)?
            } else {
                family.matrix(count, order)?
            };
            let minors = principal_minors(&m, count)?;
            Ok((render::sequence(minors.values(), cli.format), 0))
        }
        Command::Verify { suite, json, cases } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(|e: verify::UnknownSuite| {
                    CliError::Usage(format!("{e}; expected one of {}, all", suite_names()))
                })?]
            };
            let config = Config { seed: cli.seed, cases };
            let reports = verify::run_suites(&suites, &config);
            let code = if reports.iter().all(SuiteReport::passed) { 0 } else { EXIT_VERIFY };
            let text = if json || cli.format == Format::Json {
                format!("{:#}\n", verify_json(&reports, &config))
            } else {
                verify_text(&reports)
            };
            Ok((text, code))
        }
        Command::Oeis { id, check } => {
            let cache = oeis::Cache::new(cli.cache_dir.unwrap_or_else(oeis::default_cache_dir));
            let bfile = oeis::fetch(&id, &cache, cli.offline)?;
            if check {
                oeis_check(&bfile, cli.format)
            } else {
                Ok((bfile_text(&bfile, cli.format), 0))
            }
        }
    }
}

fn suite_names() -> String {
    Suite::ALL.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
}

fn status_word(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

fn verify_json(reports: &[SuiteReport], config: &Config) -> Value {
    let suites: Vec<Value> = reports
        .iter()
        .map(|r| {
            let checks: Vec<Value> = r
                .checks
                .iter()
                .map(|c| {
                    let mut v = json!({
                        "id": c.id,
                        "status": c.status.as_str(),
                        "expected": c.expected,
                        "actual": c.actual,
                    });
                    if c.status == Status::Reported {
                        v["holds"] = Value::Bool(c.holds);
                    }
                    v
                })
                .collect();
            json!({
                "suite": r.suite.name(),
                "status": status_word(r.passed()),
                "passed": r.count(Status::Pass),
                "failed": r.count(Status::Fail),
                "reported": r.count(Status::Reported),
                "checks": checks,
            })
        })
        .collect();
    json!({
        "status": status_word(reports.iter().all(SuiteReport::passed)),
        "seed": config.seed,
        "cases": config.cases,
        "suites": suites,
    })
}

fn verify_text(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("{}\n", r.suite));
        for c in &r.checks {
            let note = if c.status == Status::Reported {
                if c.holds {
                    " (holds)"
                } else {
                    " (differs)"
                }
            } else {
                ""
            };
            out.push_str(&format!(
                "  {:<8} {}{note}\n           expected: {}\n           actual:   {}\n",
                c.status, c.id, c.expected, c.actual
            ));
        }
        out.push_str(&format!(
            "{}: {} passed, {} failed, {} reported\n",
            r.suite,
            r.count(Status::Pass),
            r.count(Status::Fail),
            r.count(Status::Reported)
        ));
    }
    let failed: usize = reports.iter().map(|r| r.count(Status::Fail)).sum();
    out.push_str(&format!(
        "overall: {} ({} suites, {} failed checks)\n",
        status_word(failed == 0).to_uppercase(),
        reports.len(),
        failed
    ));
    out
}

fn bfile_text(b: &oeis::BFile, format: Format) -> String {
    match format {
        Format::Table => b.terms.iter().map(|(i, v)| format!("{i} {v}\n")).collect(),
        Format::Csv => b.terms.iter().map(|(i, v)| format!("{i},{v}\n")).collect(),
        Format::Json => {
            let terms: Vec<Value> = b
                .terms
                .iter()
                .map(|(i, v)| json!([i, render::json_number(&riordan_core::Rational::from_integer(v.clone()))]))
                .collect();
            format!("{}\n", json!({ "id": b.id, "terms": terms }))
        }
    }
}

fn oeis_check(b: &oeis::BFile, format: Format) -> CliResult<(String, u8)> {
    let local = oeis::local_sequence(&b.id, b.terms.len())
        .ok_or_else(|| CliError::Usage(format!("no local computation for {}; known: {}", b.id, oeis::KNOWN)))?;
    let a = oeis::align(&b.values(), &local);
    let verdict = if a.is_match() { "match" } else { "mismatch" };
    let text = match format {
        Format::Json => format!(
            "{}\n",
            json!({
                "id": b.id,
                "status": verdict,
                "offset": a.offset,
                "matched": a.matched,
                "compared": a.compared,
            })
        ),
        Format::Csv => format!("{},{verdict},{},{},{}\n", b.id, a.offset, a.matched, a.compared),
        Format::Table => {
            format!("{}: {verdict} (offset {}, {} of {} terms agree)\n", b.id, a.offset, a.matched, a.compared)
        }
    };
    Ok((text, if a.is_match() { 0 } else { EXIT_VERIFY }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("riordan: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
