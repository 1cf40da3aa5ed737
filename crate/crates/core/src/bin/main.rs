use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use abelian_parabolic::parabolic::ParabolicDatum;
use abelian_parabolic::report::{case_report, Coords};
use abelian_parabolic::rootsys::{Kind, RootSystem};
use abelian_parabolic::selftest::{self, Options};
use abelian_parabolic::table1::table1;
use abelian_parabolic::{AbelianCase, Error};

#[derive(Parser)]
#[command(name = "abelian-parabolic", version, about = "Orbit, Arthur-pair and microlocal tables for abelian parabolics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one root system and node.
    Classify {
        /// Root system type: A, B, C, D or E.
        #[arg(value_name = "TYPE")]
        kind: String,
        rank: usize,
        /// 1-based Bourbaki node.
        node: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, value_enum, default_value = "simple")]
        coords: Coords,
    },
    /// Recompute the classification table with orbit counts.
    Table1 {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run every property suite over all supported cases.
    Selftest {
        /// Corrupt one structure constant to exercise the Jacobi suite.
        #[arg(long)]
        inject_sign_flip: bool,
    },
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.code() as u8)
}

fn classify(kind: &str, rank: usize, node: usize, format: Format, coords: Coords) -> Result<String, Error> {
    let kind = Kind::from_str(kind)?;
    let rs = RootSystem::build(kind, rank)?;
    // Validates the node and names a witness root before any heavier work.
    ParabolicDatum::from_node(&rs, node)?.require_abelian()?;
    let report = case_report(&AbelianCase::new(kind, rank, node)?)?;
    Ok(match format {
        Format::Table => report.render_table(coords),
        Format::Json => report.to_json() + "\n",
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Classify {
            kind,
            rank,
            node,
            format,
            coords,
        } => match classify(&kind, rank, node, format, coords) {
            Ok(out) => {
                print!("{out}");
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
        Command::Table1 { max_rank, format } => match table1(max_rank) {
            Ok(t) => {
                match format {
                    Format::Table => print!("{}", t.render()),
                    Format::Json => println!("{}", serde_json::to_string_pretty(&t).expect("table serializes")),
                }
                if t.is_consistent() {
                    ExitCode::SUCCESS
                } else {
                    for r in t.mismatched_rows() {
                        eprintln!("error: row {} node {} does not match the table formulas", r.system, r.node);
                    }
                    for m in &t.classification_mismatches {
                        eprintln!("error: abelian classification differs at {m}");
                    }
                    ExitCode::from(4)
                }
            }
            Err(e) => fail(&e),
        },
        Command::Selftest { inject_sign_flip } => match selftest::run_all(Options { inject_sign_flip }) {
            Ok(results) => {
                let mut ok = true;
                for r in &results {
                    println!(
                        "{:<18} {} ({} checks)",
                        r.name,
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.checks
                    );
                    for f in r.failures.iter().take(5) {
                        println!("    {f}");
                    }
                    ok &= r.passed();
                }
                if ok {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(4)
                }
            }
            Err(e) => fail(&e),
        },
    }
}
