use blowup_frontend::bind::{CorpusSpec, Item, Program, MAX_CORPUS_COUNT, MAX_CORPUS_DEGREE, MAX_CORPUS_VARS};
use blowup_frontend::runner::run_program;
use blowup_frontend::{run_source, RunOptions, RunReport};
use blowup_core::algebra::DEFAULT_PRIME;
use clap::{Args, Parser, Subcommand};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "blowup", version, about = "Depth of associated graded rings and blowup algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a session file.
    Check {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check every statement on random monomial ideals.
    Corpus {
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=MAX_CORPUS_VARS))]
        vars: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..=MAX_CORPUS_DEGREE))]
        maxdeg: u64,
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..=MAX_CORPUS_COUNT))]
        count: u64,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Seed for random reductions and, in `corpus`, for the ideals.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Characteristic used for every ring, overriding the file.
    #[arg(long)]
    prime: Option<u32>,
    /// Highest power of I examined.
    #[arg(long, default_value_t = 12)]
    max_power: usize,
    /// Cap on the reduction-number search.
    #[arg(long, default_value_t = 30)]
    rmax: u32,
    /// Record per-instance wall-clock time.
    #[arg(long)]
    timing: bool,
}

impl Common {
    fn options(&self) -> RunOptions {
        RunOptions { seed: self.seed, prime: self.prime, max_power: self.max_power.max(1), r_max: self.rmax, timing: self.timing }
    }
}

fn emit(report: &RunReport, json: bool) -> ExitCode {
    let text = if json { report.to_json() + "\n" } else { report.to_text() };
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Check { file, common } => {
            let src = match std::fs::read_to_string(&file) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {}: {e}", file.display());
                    return ExitCode::from(1);
                }
            };
            match run_source(&src, &common.options()) {
                Ok(r) => emit(&r, common.json),
                Err(e) => {
                    eprintln!("{}:{e}", file.display());
                    ExitCode::from(1)
                }
            }
        }
        Cmd::Corpus { vars, maxdeg, count, common } => {
            let prime = common.prime.unwrap_or(DEFAULT_PRIME);
            if blowup_core::algebra::PrimeField::new(prime).is_err() {
                eprintln!("error: {prime} is not a usable prime");
                return ExitCode::from(1);
            }
            let spec = CorpusSpec { line: 0, vars: vars as usize, maxdeg: maxdeg as u32, count: count as usize, seed: common.seed };
            let program = Program { items: vec![Item::Corpus(spec)], prime };
            emit(&run_program(&program, &common.options()), common.json)
        }
    }
}
