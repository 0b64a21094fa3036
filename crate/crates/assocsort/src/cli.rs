//! Command-line front end.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use crate::baselines::{predict_passes_uniform, verify, VerifyFailure};
use crate::bench::{run_bench, BenchConfig};
use crate::error::AppError;
use crate::format::{read_values, write_values, Format};
use crate::runner::{self, Algo};
use crate::workload::{generate, Beta, Dist, Unit, WorkloadSpec};

/// Above this range-to-count ratio `auto` switches to the modifiable variant.
pub const AUTO_RATIO: u128 = 10;

#[derive(Debug, Parser)]
#[command(
    name = "assocsort",
    version,
    about = "In-place associative integer sorting"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sort a file of distinct unsigned integers.
    Sort(SortArgs),
    /// Run a benchmark matrix and write one CSV row per run.
    Bench(BenchArgs),
    /// Generate a workload file.
    Gen(GenArgs),
    /// Check that a file is the sorted permutation of another.
    Verify(VerifyArgs),
    /// Print the expected pass count for uniform keys.
    Predict(PredictArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Readonly,
    Modifiable,
    Auto,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "readonly" => Ok(Variant::Readonly),
            "modifiable" => Ok(Variant::Modifiable),
            "auto" => Ok(Variant::Auto),
            _ => Err(format!("unknown variant `{s}`")),
        }
    }
}

fn parse_width(s: &str) -> Result<u32, String> {
    match s.parse() {
        Ok(w @ (8 | 16 | 32 | 64)) => Ok(w),
        _ => Err(format!("word width must be 8, 16, 32 or 64, got `{s}`")),
    }
}

#[derive(Debug, Args)]
pub struct SortArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value = "auto")]
    pub variant: Variant,
    #[arg(long, default_value = "64", value_parser = parse_width)]
    pub word_width: u32,
    #[arg(long)]
    pub output: PathBuf,
    /// Write pass and movement counters as key=value lines.
    #[arg(long)]
    pub stats: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub beta: Vec<Beta>,
    #[arg(long, default_value = "uniform_distinct")]
    pub dist: Dist,
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "assoc-ro,assoc-mod,counting,radix,std"
    )]
    pub algos: Vec<Algo>,
    #[arg(long, default_value = "5")]
    pub reps: usize,
    #[arg(long, default_value = "0")]
    pub seed: u64,
    #[arg(long)]
    pub csv: PathBuf,
    #[arg(long, default_value = "64", value_parser = parse_width)]
    pub word_width: u32,
    #[arg(long, default_value = "key")]
    pub unit: Unit,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub dist: Dist,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "2")]
    pub beta: Beta,
    #[arg(long, default_value = "0")]
    pub seed: u64,
    #[arg(long)]
    pub output: PathBuf,
    #[arg(long, default_value = "64", value_parser = parse_width)]
    pub word_width: u32,
    #[arg(long, default_value = "key")]
    pub unit: Unit,
    #[arg(long, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// The supposedly sorted file.
    #[arg(long)]
    pub input: PathBuf,
    /// The original, unsorted file.
    #[arg(long)]
    pub against: PathBuf,
    #[arg(long, default_value = "text")]
    pub format: Format,
    #[arg(long, default_value = "64", value_parser = parse_width)]
    pub word_width: u32,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub beta: Beta,
}

/// Parses arguments, runs the command, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn run(command: Command) -> Result<(), AppError> {
    match command {
        Command::Sort(a) => cmd_sort(&a),
        Command::Bench(a) => cmd_bench(&a),
        Command::Gen(a) => cmd_gen(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Predict(a) => cmd_predict(&a),
    }
}

/// `readonly` for dense inputs, `modifiable` once the range exceeds
/// [`AUTO_RATIO`] times the count.
pub fn choose_algo(variant: Variant, values: &[u64]) -> Algo {
    match variant {
        Variant::Readonly => Algo::AssocRo,
        Variant::Modifiable => Algo::AssocFull,
        Variant::Auto => {
            let (Some(lo), Some(hi)) = (values.iter().min(), values.iter().max()) else {
                return Algo::AssocRo;
            };
            let m = (hi - lo) as u128 + 1;
            if m <= AUTO_RATIO * values.len() as u128 {
                Algo::AssocRo
            } else {
                Algo::AssocFull
            }
        }
    }
}

pub fn cmd_sort(a: &SortArgs) -> Result<(), AppError> {
    let values = read_values(&a.input, a.format, a.word_width)?;
    let algo = choose_algo(a.variant, &values);
    let outcome = runner::run(algo, &values, a.word_width)?;
    write_values(&a.output, &outcome.output, a.format, a.word_width)?;
    if let Some(path) = &a.stats {
        let variant = if algo == Algo::AssocRo {
            "readonly"
        } else {
            "modifiable"
        };
        let s = &outcome.stats;
        let body = format!(
            "variant={variant}\nn={}\npasses={}\nswaps={}\nmoves={}\nreads={}\n",
            values.len(),
            s.passes,
            s.swaps,
            s.moves,
            s.reads
        );
        std::fs::write(path, body).map_err(|e| AppError::io(path, e))?;
    }
    Ok(())
}

pub fn cmd_bench(a: &BenchArgs) -> Result<(), AppError> {
    let cfg = BenchConfig {
        ns: a.n.clone(),
        betas: a.beta.clone(),
        dist: a.dist,
        algos: a.algos.clone(),
        reps: a.reps,
        seed: a.seed,
        width: a.word_width,
        unit: a.unit,
    };
    let file = File::create(&a.csv).map_err(|e| AppError::io(&a.csv, e))?;
    let mut out = BufWriter::new(file);
    let records = run_bench(&cfg, &mut out)?;
    out.flush().map_err(|e| AppError::io(&a.csv, e))?;
    let failed = records.iter().filter(|r| !r.ok).count();
    if failed > 0 {
        return Err(AppError::Verify(format!(
            "{failed} of {} runs produced incorrect output",
            records.len()
        )));
    }
    Ok(())
}

pub fn cmd_gen(a: &GenArgs) -> Result<(), AppError> {
    let workload = generate(&WorkloadSpec {
        dist: a.dist,
        n: a.n,
        beta: a.beta,
        width: a.word_width,
        unit: a.unit,
        seed: a.seed,
    })?;
    write_values(&a.output, &workload.values, a.format, a.word_width)
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<(), AppError> {
    let output = read_values(&a.input, a.format, a.word_width)?;
    let input = read_values(&a.against, a.format, a.word_width)?;
    match verify(&output, &input).failure {
        None => {
            println!("ok: {} values", output.len());
            Ok(())
        }
        Some(f) => Err(AppError::Verify(describe(f, &a.input))),
    }
}

fn describe(f: VerifyFailure, path: &Path) -> String {
    let path = path.display();
    match f {
        VerifyFailure::LengthMismatch { output, input } => {
            format!("{path} has {output} values, expected {input}")
        }
        VerifyFailure::OutOfOrder { index } => format!("{path} is out of order at index {index}"),
        VerifyFailure::MultisetMismatch { index } => {
            format!("{path} differs from the sorted input at index {index}")
        }
    }
}

pub fn cmd_predict(a: &PredictArgs) -> Result<(), AppError> {
    let k = predict_passes_uniform(a.n, a.beta.as_f64())?;
    println!("{k}");
    Ok(())
}
