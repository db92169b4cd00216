use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use monocurve::harness::{emit_report, run_suite, ReportFormat};
use monocurve::{
    certify_cohomology_annihilator, classify, enumerate_by_genus, enumerate_ideal_classes,
    stable_annihilator, NumericalSemigroup,
};

#[derive(Parser)]
#[command(name = "monocurve", version, about = "Ideal theory of monomial curves k[[t^S]]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and Gorenstein-type classification, as JSON.
    Info { generators: NumericalSemigroup },
    /// Semigroups of the given genus, one per line.
    Enumerate {
        #[arg(long)]
        genus: usize,
        #[arg(long, value_enum, default_value_t = Filter::None)]
        filter: Filter,
    },
    /// Ideal classes with reflexivity, trace and stable annihilator.
    Ideals { generators: NumericalSemigroup },
    /// Cohomology annihilator certificate, as JSON.
    Ca { generators: NumericalSemigroup },
    /// Run a verification suite over all semigroups up to a genus.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_genus: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        fail_fast: bool,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    Gorenstein,
    Almost,
    Med,
    None,
}

impl Filter {
    fn keep(self, s: &NumericalSemigroup) -> bool {
        match self {
            Filter::Gorenstein => s.is_symmetric(),
            Filter::Almost => s.is_almost_symmetric(),
            Filter::Med => s.embedding_dimension() as i64 == s.multiplicity(),
            Filter::None => true,
        }
    }
}

fn usage_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Info { generators: s } => {
            let classification = match classify(&s) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            print_json(&json!({
                "semigroup": s,
                "invariants": s.invariants(),
                "classification": classification,
            }));
        }
        Command::Enumerate { genus, filter } => {
            for s in enumerate_by_genus(genus).into_iter().filter(|s| filter.keep(s)) {
                println!("{s}");
            }
        }
        Command::Ideals { generators: s } => {
            for e in &enumerate_ideal_classes(&s) {
                println!(
                    "{e}\treflexive={}\ttrace={}\tann={}",
                    e.is_reflexive(),
                    e.trace(),
                    stable_annihilator(e)
                );
            }
        }
        Command::Ca { generators: s } => print_json(&certify_cohomology_annihilator(&s).to_json()),
        Command::Verify { suite, max_genus, jobs, fail_fast, format, out } => {
            let format: ReportFormat = match format.parse() {
                Ok(f) => f,
                Err(e) => return usage_error(e),
            };
            let report = match run_suite(&suite, max_genus, jobs, fail_fast) {
                Ok(r) => r,
                Err(e) => return usage_error(e),
            };
            let bytes = match emit_report(&report, format) {
                Ok(b) => b,
                Err(e) => return usage_error(e),
            };
            let written = match out {
                Some(path) => std::fs::write(&path, &bytes),
                None => std::io::stdout().write_all(&bytes),
            };
            if let Err(e) = written {
                return usage_error(e);
            }
            if !report.passed() {
                return ExitCode::from(1);
            }
        }
    }
    ExitCode::SUCCESS
}
