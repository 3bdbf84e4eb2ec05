mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use torus_nog4::gamma4::classify_range;
use torus_nog4::verify::{self, Mutation};
use torus_nog4::{gamma4_bounds, make_knot};

use render::{Glyphs, ReportFormat};

/// Invariants of torus knots and bounds on their non-orientable 4-genus.
#[derive(Parser, Debug)]
#[command(name = "nog4", version, about, allow_negative_numbers = true)]
struct Cli {
    /// Plain ASCII instead of Greek letters in text output.
    #[arg(long, global = true)]
    ascii: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signature, Arf, upsilon and d-invariant of T(p,q).
    Invariants {
        p: i64,
        q: i64,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
        /// Also print the Alexander polynomial as `exponent<TAB>coefficient` lines.
        #[arg(long)]
        dump_alexander: bool,
    },
    /// Lower and upper bounds on the non-orientable 4-genus with provenance.
    Bounds {
        p: i64,
        q: i64,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
    },
    /// One row per q coprime to p in [q_min, q_max].
    Table {
        p: i64,
        q_min: i64,
        q_max: i64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Run every cross-check sweep; exits 1 on any mismatch.
    Verify {
        #[arg(long, default_value_t = 8)]
        p_max: i64,
        #[arg(long, default_value_t = 80)]
        q_max: i64,
        /// Report file (`check<TAB>instances<TAB>failures<TAB>first_failure`); stdout when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Deliberately break one formula to test the harness.
        #[arg(long, default_value = "none", value_parser = Mutation::NAMES)]
        mutation: String,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), ExitCode> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| usage_error(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    let g = Glyphs::new(cli.ascii);
    match cli.command {
        Command::Invariants {
            p,
            q,
            format,
            dump_alexander,
        } => {
            let k = make_knot(p, q).map_err(usage_error)?;
            let text = render::invariants(&k, format, dump_alexander, &g).map_err(|e| {
                eprintln!("internal error: {e}");
                ExitCode::FAILURE
            })?;
            emit(&text, None)?;
        }
        Command::Bounds { p, q, format } => {
            let k = make_knot(p, q).map_err(usage_error)?;
            emit(&render::bounds(&gamma4_bounds(&k), format, &g), None)?;
        }
        Command::Table {
            p,
            q_min,
            q_max,
            format,
            out,
        } => {
            let c = classify_range(p, q_min, q_max).map_err(usage_error)?;
            emit(&render::table(&c, format, &g), out.as_ref())?;
        }
        Command::Verify {
            p_max,
            q_max,
            report,
            mutation,
        } => {
            if p_max < 2 || q_max < p_max {
                return Err(usage_error("verify needs p-max >= 2 and q-max >= p-max"));
            }
            let mutation: Mutation = mutation.parse().map_err(usage_error)?;
            let r = verify::run(p_max, q_max, mutation);
            emit(&r.to_tsv(), report.as_ref())?;
            if !r.passed() {
                for c in r.checks.iter().filter(|c| c.failures > 0) {
                    eprintln!(
                        "FAIL {}: {} of {} ({})",
                        c.name,
                        c.failures,
                        c.instances,
                        c.first_failure.as_deref().unwrap_or("-")
                    );
                }
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    run(Cli::parse()).unwrap_or_else(|code| code)
}
