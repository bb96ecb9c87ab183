//! Seeded `G(n, 1/2)` experiments over the criterion.
//!
//! Sample `i` draws from its own ChaCha8 stream `(seed, i)`, so totals do not
//! depend on the number of worker threads.

use std::io::{Read, Write};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::criterion::{run_criterion, Verdict};
use crate::error::{Error, Result};
use crate::graph::{truncated_cell_count, Graph};
use crate::linalg::FactorBudget;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "GBLS_THREADS";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExperimentConfig {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub truncated: bool,
    /// Worker threads; `None` reads [`THREADS_ENV`], then falls back to rayon's default.
    pub threads: Option<usize>,
    pub factor_budget: FactorBudget,
    /// Keep one [`SampleRecord`] per sample in the summary.
    pub keep_records: bool,
}

impl ExperimentConfig {
    pub fn new(n: usize, samples: u64, seed: u64) -> Self {
        ExperimentConfig {
            n,
            samples,
            seed,
            truncated: false,
            threads: None,
            factor_budget: FactorBudget {
                trial_bound: 100_000,
                rho_rounds: 8,
                rho_iterations: 1 << 16,
            },
            keep_records: false,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub d_zero: u64,
    pub d_one: u64,
    pub certified: u64,
    pub inconclusive_even: u64,
    pub inconclusive_square: u64,
    pub unknown: u64,
}

impl Counts {
    fn add(&mut self, record: &SampleRecord) {
        match record.d_n.as_str() {
            "0" => self.d_zero += 1,
            "1" => self.d_one += 1,
            _ => {}
        }
        match record.verdict.as_str() {
            "Certified" => self.certified += 1,
            "InconclusiveEven" => self.inconclusive_even += 1,
            "InconclusiveSquare" => self.inconclusive_square += 1,
            "Unknown" => self.unknown += 1,
            _ => {}
        }
    }

    pub fn from_records<'a>(records: impl IntoIterator<Item = &'a SampleRecord>) -> Self {
        let mut c = Counts::default();
        for r in records {
            c.add(r);
        }
        c
    }

    /// Every sample lands in exactly one verdict; rank-deficient samples are
    /// the `d_zero` ones.
    pub fn total(&self) -> u64 {
        self.d_zero + self.certified + self.inconclusive_even + self.inconclusive_square + self.unknown
    }

    pub fn proportions(&self, samples: u64) -> Proportions {
        let f = |x: u64| x as f64 / samples as f64;
        Proportions {
            d_zero: f(self.d_zero),
            d_one: f(self.d_one),
            certified: f(self.certified),
            inconclusive_even: f(self.inconclusive_even),
            inconclusive_square: f(self.inconclusive_square),
            unknown: f(self.unknown),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Proportions {
    pub d_zero: f64,
    pub d_one: f64,
    pub certified: f64,
    pub inconclusive_even: f64,
    pub inconclusive_square: f64,
    pub unknown: f64,
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub n: usize,
    pub sample_index: u64,
    /// Decimal string.
    pub d_n: String,
    pub verdict: String,
    pub delta_zero: bool,
    pub ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub truncated: bool,
    /// Cell count of the truncated partition, for truncated runs.
    pub cells: Option<usize>,
    pub counts: Counts,
    pub proportions: Proportions,
    /// `1/ζ(r - 1)` for truncated runs with `r >= 3`.
    pub zeta_reference: Option<f64>,
    #[serde(skip)]
    pub runtime: Duration,
    #[serde(skip)]
    pub records: Vec<SampleRecord>,
}

impl ExperimentSummary {
    fn from_parts(config: &ExperimentConfig, counts: Counts, runtime: Duration, records: Vec<SampleRecord>) -> Self {
        let cells = config.truncated.then(|| truncated_cell_count(config.n));
        ExperimentSummary {
            n: config.n,
            samples: config.samples,
            seed: config.seed,
            truncated: config.truncated,
            cells,
            counts,
            proportions: counts.proportions(config.samples),
            zeta_reference: cells.and_then(|r| zeta_reference(r as u32 - 1).ok()),
            runtime,
            records,
        }
    }

    /// Rebuilds a summary from CSV records of a run with `config`.
    pub fn from_records(config: &ExperimentConfig, records: Vec<SampleRecord>) -> Self {
        let counts = Counts::from_records(&records);
        let kept = if config.keep_records { records } else { Vec::new() };
        Self::from_parts(config, counts, Duration::ZERO, kept)
    }
}

/// The RNG stream of sample `index`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Each pair `u < v` becomes an edge with probability 1/2, drawn in
/// lexicographic pair order.
pub fn sample_gnp_half<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<bool>() {
                g.add_edge(u, v).expect("distinct in-range endpoints");
            }
        }
    }
    g
}

fn thread_count(config: &ExperimentConfig) -> Option<usize> {
    config.threads.or_else(|| std::env::var(THREADS_ENV).ok()?.parse().ok()).filter(|&t| t > 0)
}

/// Runs the criterion on `config.samples` random graphs.
pub fn run_table(config: &ExperimentConfig) -> Result<ExperimentSummary> {
    if config.n == 0 || config.samples == 0 {
        return Err(Error::Contract("experiments need n >= 1 and at least one sample".into()));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = thread_count(config) {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| Error::Contract(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let records: Vec<SampleRecord> = pool.install(|| {
        (0..config.samples)
            .into_par_iter()
            .map(|index| {
                let t0 = Instant::now();
                let g = sample_gnp_half(config.n, &mut sample_rng(config.seed, index));
                let report = run_criterion(&g, config.truncated, &config.factor_budget)?;
                Ok(SampleRecord {
                    n: config.n,
                    sample_index: index,
                    d_n: report.d_n.to_string(),
                    verdict: report.verdict.name().to_string(),
                    delta_zero: num_traits::Zero::is_zero(&report.delta),
                    ms: t0.elapsed().as_secs_f64() * 1e3,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let counts = Counts::from_records(&records);
    debug_assert_eq!(counts.total(), config.samples);
    let kept = if config.keep_records { records } else { Vec::new() };
    Ok(ExperimentSummary::from_parts(config, counts, start.elapsed(), kept))
}

/// `1/ζ(k)`: the first 999 terms summed directly, the tail by Euler–Maclaurin.
pub fn zeta_reference(k: u32) -> Result<f64> {
    if k < 2 {
        return Err(Error::Contract(format!("zeta reference needs k >= 2, got {k}")));
    }
    let kf = k as f64;
    const N: u32 = 1000;
    let head: f64 = (1..N).rev().map(|m| (m as f64).powf(-kf)).sum();
    let nf = N as f64;
    let tail = nf.powf(1.0 - kf) / (kf - 1.0) + nf.powf(-kf) / 2.0 + kf * nf.powf(-kf - 1.0) / 12.0
        - kf * (kf + 1.0) * (kf + 2.0) * nf.powf(-kf - 3.0) / 720.0;
    Ok(1.0 / (head + tail))
}

pub fn write_csv<W: Write>(writer: W, records: &[SampleRecord]) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    for r in records {
        w.serialize(r).map_err(|e| Error::Parse(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_csv<R: Read>(reader: R) -> Result<Vec<SampleRecord>> {
    csv::Reader::from_reader(reader)
        .deserialize()
        .map(|row| row.map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

/// Parses the verdict name of a record; an `InconclusiveSquare` comes back without its prime.
pub fn verdict_of(record: &SampleRecord) -> Option<Verdict> {
    match record.verdict.as_str() {
        "Certified" => Some(Verdict::Certified),
        "RankDeficient" => Some(Verdict::RankDeficient),
        "InconclusiveEven" => Some(Verdict::InconclusiveEven),
        "InconclusiveSquare" => Some(Verdict::InconclusiveSquare(None)),
        "Unknown" => Some(Verdict::Unknown),
        _ => None,
    }
}
