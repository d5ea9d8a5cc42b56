//! Command-line front end: automaton files in, reduced automata and reports out.
//!
//! Exit codes: 0 success, 1 parse, 2 validation, 3 cap exceeded, 4 internal
//! invariant violation, 5 `verify` found a distinguishing word.

pub mod bench;
pub mod document;
pub mod error;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use latred_core::{reduce, Equivalence, LatticeKind, Method, ReduceOptions, DEFAULT_WORD_CAP};

pub use bench::{bench, BenchParams, BenchRow};
pub use document::{AutomatonDocument, Counterexample, ReportDocument};
pub use error::{CliError, EXIT_NOT_EQUIVALENT, EXIT_OK};

/// Overrides the word-tree cap of weak families and equivalence checks.
pub const WORD_CAP_ENV: &str = "LATRED_WORD_CAP";

#[derive(Debug, Parser)]
#[command(
    name = "latred",
    version,
    about = "k-reduction of fuzzy finite automata"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce an automaton and check the result is k-equivalent to it.
    Reduce(ReduceArgs),
    /// Compare two automata on every word of length at most k.
    Verify(VerifyArgs),
    /// Time reductions of seeded random automata and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub method: Method,
    #[arg(long)]
    pub k: usize,
    /// Collapse further through a greedy r-factorization.
    #[arg(long)]
    pub factorize: bool,
    /// Also look for a counterexample up to this length (must exceed k).
    #[arg(long)]
    pub verify_to: Option<usize>,
    /// Reduced automaton destination; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub a: PathBuf,
    pub b: PathBuf,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long)]
    pub letters: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub method: Method,
    #[arg(long)]
    pub lattice: LatticeKind,
    #[arg(long)]
    pub seed: u64,
    /// Entries are drawn from {0, 1/grid, .., 1}.
    #[arg(long, default_value_t = 4)]
    pub grid: u32,
    /// Reductions per size; the fastest is reported.
    #[arg(long, default_value_t = 1)]
    pub repeats: usize,
}

/// Word cap from the environment, or the default when unset.
pub fn word_cap_from_env() -> Result<u64, CliError> {
    match std::env::var(WORD_CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map_err(|e| CliError::Parse(format!("{WORD_CAP_ENV}={v:?}: {e}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_WORD_CAP),
        Err(e) => Err(CliError::Parse(format!("{WORD_CAP_ENV}: {e}"))),
    }
}

/// Runs one command. `out` receives primary output, `err` diagnostics.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, CliError> {
    let word_cap = word_cap_from_env()?;
    match cli.command {
        Command::Reduce(args) => cmd_reduce(&args, word_cap, out, err),
        Command::Verify(args) => cmd_verify(&args, word_cap, out),
        Command::Bench(args) => cmd_bench(&args, word_cap, out),
    }
}

fn emit(w: &mut dyn Write, text: &str) -> Result<(), CliError> {
    w.write_all(text.as_bytes())
        .map_err(|e| CliError::Io(e.to_string()))
}

pub fn cmd_reduce(
    args: &ReduceArgs,
    word_cap: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, CliError> {
    let doc = AutomatonDocument::load(&args.input)?;
    let a = doc.to_automaton()?;
    if let Some(v) = args.verify_to {
        if v <= args.k {
            return Err(CliError::Validation(format!(
                "--verify-to {v} must exceed --k {}",
                args.k
            )));
        }
    }
    let opts = ReduceOptions {
        factorize: args.factorize,
        word_cap,
    };
    let r = reduce(&a, args.method, args.k, &opts)?;
    let mut report = ReportDocument::from_report(&r.report);

    if let Some(v) = args.verify_to {
        report.verified_to = Some(v);
        match a.k_equivalent(&r.automaton, v, word_cap)? {
            Equivalence::Equal => {
                emit(err, &format!("no counterexample up to length {v}\n"))?;
            }
            Equivalence::Witness { word, left, right } => {
                emit(
                    err,
                    &format!(
                        "counterexample of length {}: {} (original {left}, reduced {right})\n",
                        word.len(),
                        a.format_word(&word)
                    ),
                )?;
                report.counterexample = Some(Counterexample {
                    word: word
                        .letters()
                        .iter()
                        .map(|&x| a.alphabet()[x].clone())
                        .collect(),
                    original: left,
                    reduced: right,
                });
            }
        }
    }

    let name = doc
        .name
        .as_ref()
        .map(|n| format!("{n} ({} k={})", args.method, args.k));
    let reduced = AutomatonDocument::from_automaton(&r.automaton, name);
    match &args.output {
        Some(path) => reduced.save(path)?,
        None => emit(out, &reduced.to_json())?,
    }
    match &args.report {
        Some(path) => report.save(path)?,
        None => emit(
            err,
            &format!(
                "{} k={}: {} -> {} states, d = {:?}\n",
                args.method,
                args.k,
                report.original_states,
                report.reduced_states,
                report.d_sequence
            ),
        )?,
    }
    Ok(EXIT_OK)
}

pub fn cmd_verify(args: &VerifyArgs, word_cap: u64, out: &mut dyn Write) -> Result<u8, CliError> {
    let a = AutomatonDocument::load(&args.a)?.to_automaton()?;
    let b = AutomatonDocument::load(&args.b)?.to_automaton()?;
    match a.k_equivalent(&b, args.k, word_cap)? {
        Equivalence::Equal => {
            emit(out, "equal\n")?;
            Ok(EXIT_OK)
        }
        Equivalence::Witness { word, left, right } => {
            emit(
                out,
                &format!(
                    "witness: {}\nfirst: {left}\nsecond: {right}\n",
                    a.format_word(&word)
                ),
            )?;
            Ok(EXIT_NOT_EQUIVALENT)
        }
    }
}

pub fn cmd_bench(args: &BenchArgs, word_cap: u64, out: &mut dyn Write) -> Result<u8, CliError> {
    let params = BenchParams {
        sizes: args.sizes.clone(),
        letters: args.letters,
        k: args.k,
        method: args.method,
        lattice: args.lattice,
        seed: args.seed,
        grid: args.grid,
        repeats: args.repeats,
        word_cap,
    };
    let rows = bench(&params)?;
    emit(out, &bench::to_csv(&rows))?;
    Ok(EXIT_OK)
}
