use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sedn_lab::constructor::construct;
use sedn_lab::error::exit;
use sedn_lab::graph::{verify, LabelingDocument};
use sedn_lab::harness::{
    conjecture_report, status_counts, summary_line, sweep, to_csv, Status, SweepConfig, TripleRange,
};
use sedn_lab::oracle::gamma;
use sedn_lab::solver::{solve_exact, SolveConfig, DEFAULT_MAX_EDGES};
use sedn_lab::{Result, SednError, TripartiteParams};

const MAX_EDGES_ENV: &str = "SEDN_MAX_EDGES";

#[derive(Parser)]
#[command(name = "sedn-lab", version, about = "Signed edge domination on K(m,n,p)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Triple {
    m: u32,
    n: u32,
    p: u32,
}

impl Triple {
    fn params(self) -> Result<TripartiteParams> {
        TripartiteParams::new(self.m, self.n, self.p)
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RangeArgs {
    /// All canonical triples with m+n+p at most this.
    #[arg(long)]
    max_sum: Option<u32>,
    /// e.g. m=2..6,n=2..6,p=msum..msum+4
    #[arg(long)]
    range: Option<String>,
}

impl RangeArgs {
    fn triples(&self) -> Result<Vec<TripartiteParams>> {
        let range = match (&self.max_sum, &self.range) {
            (Some(s), _) => TripleRange::MaxSum(*s),
            (None, Some(text)) => text.parse()?,
            (None, None) => unreachable!("clap requires one of the two"),
        };
        Ok(range.triples())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form value with its case tags.
    Gamma {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        json: bool,
    },
    /// Build and verify a minimum-weight labeling.
    Construct {
        #[command(flatten)]
        triple: Triple,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labeling file.
    Verify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exact optimum by branch and bound.
    Solve {
        #[command(flatten)]
        triple: Triple,
        /// Edge cap; defaults to $SEDN_MAX_EDGES, then 26.
        #[arg(long)]
        max_edges: Option<u32>,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        no_symmetry: bool,
        #[arg(long)]
        no_bound: bool,
        /// Write the certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Formula, construction and optionally solver over a range, as CSV.
    Sweep {
        #[command(flatten)]
        range: RangeArgs,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        with_solver: bool,
        #[arg(long)]
        max_edges: Option<u32>,
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Slack of the formula values against m+n+p-1.
    Conjecture {
        #[command(flatten)]
        range: RangeArgs,
    },
}

fn max_edges(flag: Option<u32>) -> Result<u32> {
    if let Some(v) = flag {
        return Ok(v);
    }
    match std::env::var(MAX_EDGES_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| SednError::Parse(format!("{MAX_EDGES_ENV}={v:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_EDGES),
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<()> {
    fs::write(path, text).map_err(SednError::from)
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Gamma { triple, json } => {
            let result = gamma(triple.params()?)?;
            if json {
                println!("{}", serde_json::to_string(&result)?);
            } else {
                println!("{result}");
            }
            Ok(if result.is_conflict() { exit::CONFLICT } else { exit::OK })
        }
        Command::Construct { triple, out } => {
            let cert = construct(triple.params()?)?;
            if let Some(path) = out {
                write_file(&path, &cert.to_json())?;
            }
            println!("weight {}, {}", cert.weight, cert.case);
            Ok(exit::OK)
        }
        Command::Verify { file, json } => {
            let text = fs::read_to_string(&file)?;
            let doc = LabelingDocument::from_json(&text)?;
            let report = verify(&doc.to_labeling()?);
            if json {
                println!("{}", serde_json::to_string(&report)?);
            } else if report.is_sedf {
                println!("SEDF, weight {}", report.weight);
            } else {
                println!(
                    "NOT SEDF, {} violations, weight {}",
                    report.violations.len(),
                    report.weight
                );
            }
            if let Some(claimed) = doc.claimed_gamma.filter(|&c| c != report.weight) {
                eprintln!("note: claimed_gamma {claimed} differs from weight {}", report.weight);
            }
            Ok(if report.is_sedf { exit::OK } else { exit::INVALID_LABELING })
        }
        Command::Solve {
            triple,
            max_edges: cap,
            threads,
            no_symmetry,
            no_bound,
            out,
            json,
        } => {
            let config = SolveConfig {
                max_edges: max_edges(cap)?,
                symmetry_pruning: !no_symmetry,
                bound_pruning: !no_bound,
                parallel_width: threads,
            };
            let report = solve_exact(triple.params()?, &config)?;
            if let Some(path) = out {
                write_file(&path, &report.certificate_document().to_json())?;
            }
            if json {
                println!("{}", report.to_json());
            } else {
                println!(
                    "optimum {} ({}, nodes {}, incumbent {}, {} ms)",
                    report.optimum,
                    if report.exhausted { "exhausted" } else { "not exhausted" },
                    report.nodes_explored,
                    report.initial_incumbent,
                    report.elapsed_ms
                );
            }
            Ok(exit::OK)
        }
        Command::Sweep {
            range,
            csv,
            with_solver,
            max_edges: cap,
            threads,
        } => {
            let config = SweepConfig {
                with_solver,
                solve: SolveConfig {
                    max_edges: max_edges(cap)?,
                    ..SolveConfig::default()
                },
                threads,
            };
            let rows = sweep(&range.triples()?, &config)?;
            let text = to_csv(&rows);
            match csv {
                Some(path) => write_file(&path, &text)?,
                None => print!("{text}"),
            }
            eprintln!("{}", summary_line(&rows));
            let mismatches = status_counts(&rows)[&Status::Mismatch];
            Ok(if mismatches > 0 { exit::INTERNAL_MISMATCH } else { exit::OK })
        }
        Command::Conjecture { range } => {
            let report = conjecture_report(&range.triples()?);
            print!("{}", report.render());
            Ok(if report.exceeding().is_empty() {
                exit::OK
            } else {
                exit::INTERNAL_MISMATCH
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::IO_PARSE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
