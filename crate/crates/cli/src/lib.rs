//! The `gbls` command-line tool.
//!
//! Exit codes: 0 success, 1 usage error, 2 unreadable or malformed input,
//! 3 input larger than the size guards allow.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use gbls::criterion::run_criterion;
use gbls::experiment::{run_table, write_csv, ExperimentConfig};
use gbls::graph::{automorphism_orbits, read_graph6_lines};
use gbls::linalg::{smith_normal_form, FactorBudget};
use gbls::spectra::{compare, Variant};
use gbls::wl::wl2_equivalent;
use gbls::{Error, Graph, IntMatrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SIZE: i32 = 3;

/// Largest graph order accepted by `check`, `compare` and `experiment`.
pub const MAX_ORDER: usize = 128;
/// Largest row or column count accepted by `snf`.
pub const MAX_MATRIX_DIM: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "gbls", version, about = "Spectral identification of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the walk-matrix/discriminant test on every graph in a graph6 file.
    Check {
        file: PathBuf,
        /// Use the truncated degree partition.
        #[arg(long)]
        truncated: bool,
        /// One JSON report per line.
        #[arg(long)]
        json: bool,
    },
    /// Compare the first graphs of two graph6 files.
    Compare {
        first: PathBuf,
        second: PathBuf,
        /// spectrum, generalized, gdls, gbdls, gbls, gbls_truncated or wl2.
        #[arg(long, default_value = "gbls")]
        variant: String,
        #[arg(long)]
        json: bool,
    },
    /// Smith invariant factors of a whitespace-separated integer matrix.
    Snf { file: PathBuf },
    /// Criterion statistics over seeded G(n, 1/2) samples.
    Experiment {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        truncated: bool,
        /// Per-sample CSV log.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Automorphism orbits of the first graph in a graph6 file.
    Orbits { file: PathBuf },
}

enum Failure {
    Usage(String),
    Parse(String),
    Size(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Parse(_) => EXIT_PARSE,
            Failure::Size(_) => EXIT_SIZE,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Parse(m) | Failure::Size(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Graph6 { .. } | Error::Parse(_) => Failure::Parse(e.to_string()),
            Error::Unsupported(_) => Failure::Size(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match dispatch(cli.command, &mut out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("gbls: {}", f.message());
            f.code()
        }
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Check { file, truncated, json } => check(&file, truncated, json, out),
        Command::Compare {
            first,
            second,
            variant,
            json,
        } => compare_files(&first, &second, &variant, json, out),
        Command::Snf { file } => snf(&file, out),
        Command::Experiment {
            n,
            samples,
            seed,
            truncated,
            csv,
            threads,
        } => {
            let mut config = ExperimentConfig::new(n, samples, seed);
            config.truncated = truncated;
            config.threads = threads;
            config.keep_records = csv.is_some();
            experiment(&config, csv.as_deref(), out)
        }
        Command::Orbits { file } => orbits(&file, out),
    }
}

fn read_text(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn read_graphs(path: &Path) -> std::result::Result<Vec<Graph>, Failure> {
    let text = read_text(path)?;
    let graphs = read_graph6_lines(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    if graphs.is_empty() {
        return Err(Failure::Parse(format!("{}: no graph6 records", path.display())));
    }
    for g in &graphs {
        guard_order(g.order())?;
    }
    Ok(graphs)
}

fn guard_order(n: usize) -> Outcome {
    if n > MAX_ORDER {
        return Err(Failure::Size(format!("order {n} exceeds the limit of {MAX_ORDER}")));
    }
    Ok(())
}

fn emit(out: &mut impl Write, line: impl std::fmt::Display) -> Outcome {
    writeln!(out, "{line}").map_err(|e| Failure::Usage(format!("write failed: {e}")))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}

fn check(path: &Path, truncated: bool, json: bool, out: &mut impl Write) -> Outcome {
    let budget = FactorBudget::default();
    for g in read_graphs(path)? {
        if g.order() == 0 {
            return Err(Failure::Parse("the criterion needs at least one vertex".into()));
        }
        let report = run_criterion(&g, truncated, &budget)?;
        if json {
            emit(out, to_json(&report))?;
        } else {
            emit(
                out,
                format!(
                    "n={} d_n={} delta={} gcd={} verdict={}",
                    report.n, report.d_n, report.delta, report.gcd_dn_delta, report.verdict
                ),
            )?;
        }
    }
    Ok(())
}

fn compare_files(first: &Path, second: &Path, variant: &str, json: bool, out: &mut impl Write) -> Outcome {
    let parsed = if variant == "wl2" {
        None
    } else {
        Some(variant.parse::<Variant>().map_err(|e| Failure::Usage(e.to_string()))?)
    };
    let g = read_graphs(first)?.swap_remove(0);
    let h = read_graphs(second)?.swap_remove(0);
    match parsed {
        None => {
            let equivalent = wl2_equivalent(&g, &h);
            if json {
                emit(out, to_json(&serde_json::json!({ "equivalent": equivalent })))
            } else {
                emit(out, format!("equivalent: {equivalent}"))
            }
        }
        Some(v) => {
            let verdict = compare(&g, &h, v);
            if json {
                emit(out, to_json(&verdict))
            } else {
                let value = serde_json::to_value(&verdict).expect("verdicts serialize");
                emit(out, format!("outcome: {}", value["outcome"].as_str().unwrap_or("?")))?;
                emit(out, format!("equal: {}", verdict.is_equal()))
            }
        }
    }
}

fn parse_matrix(text: &str) -> std::result::Result<IntMatrix, Failure> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| tok.parse().map_err(|_| Failure::Parse(format!("line {}: bad integer {tok:?}", k + 1))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Failure::Parse("empty matrix".into()));
    }
    let (r, c) = (rows.len(), rows[0].len());
    if r > MAX_MATRIX_DIM || c > MAX_MATRIX_DIM {
        return Err(Failure::Size(format!("{r}x{c} matrix exceeds {MAX_MATRIX_DIM}x{MAX_MATRIX_DIM}")));
    }
    IntMatrix::from_rows(rows).map_err(|e| Failure::Parse(e.to_string()))
}

fn snf(path: &Path, out: &mut impl Write) -> Outcome {
    let m = parse_matrix(&read_text(path)?)?;
    let smith = smith_normal_form(&m);
    let factors: Vec<String> = smith.factors.iter().map(|d| d.to_string()).collect();
    emit(out, format!("rank: {}", smith.rank()))?;
    emit(out, format!("invariant factors: {}", factors.join(" ")))
}

fn experiment(config: &ExperimentConfig, csv: Option<&Path>, out: &mut impl Write) -> Outcome {
    if config.n == 0 || config.samples == 0 {
        return Err(Failure::Usage("--n and --samples must be at least 1".into()));
    }
    guard_order(config.n)?;
    let summary = run_table(config)?;
    if let Some(path) = csv {
        let file = fs::File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        write_csv(file, &summary.records)?;
    }
    emit(out, serde_json::to_string_pretty(&summary).expect("summaries serialize"))?;
    eprintln!("runtime: {:.3}s", summary.runtime.as_secs_f64());
    Ok(())
}

fn orbits(path: &Path, out: &mut impl Write) -> Outcome {
    let g = read_graphs(path)?.swap_remove(0);
    let basis = automorphism_orbits(&g)?;
    emit(out, format!("orbits: {}", basis.orbits.len()))?;
    for orbit in &basis.orbits {
        let labels: Vec<String> = orbit.iter().map(|v| v.to_string()).collect();
        emit(out, labels.join(" "))?;
    }
    Ok(())
}
