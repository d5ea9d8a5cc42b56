use std::fmt::Write as _;
use std::time::Instant;

use latred_core::random::{random_automaton, seeded};
use latred_core::{reduce, LatticeKind, LatticeSpec, Method, ReduceOptions};

use crate::error::CliError;

pub const CSV_HEADER: &str = "n,m,k,method,millis,d_final";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchParams {
    pub sizes: Vec<usize>,
    pub letters: usize,
    pub k: usize,
    pub method: Method,
    pub lattice: LatticeKind,
    pub seed: u64,
    pub grid: u32,
    pub repeats: usize,
    pub word_cap: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub method: Method,
    /// Fastest wall-clock time over the repeats. The only nondeterministic column.
    pub millis: f64,
    pub d_final: usize,
}

/// Seed of the automaton generated for size `n`; independent of the other sizes.
pub fn size_seed(seed: u64, n: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(n as u64)
}

pub fn bench(p: &BenchParams) -> Result<Vec<BenchRow>, CliError> {
    if p.sizes.contains(&0) {
        return Err(CliError::Validation("sizes must be positive".into()));
    }
    if p.letters == 0 {
        return Err(CliError::Validation("--letters must be positive".into()));
    }
    if p.grid == 0 {
        return Err(CliError::Validation("--grid must be positive".into()));
    }
    if p.repeats == 0 {
        return Err(CliError::Validation("--repeats must be positive".into()));
    }
    let lattice = LatticeSpec::with_default_epsilon(p.lattice);
    let opts = ReduceOptions {
        factorize: false,
        word_cap: p.word_cap,
    };
    let mut rows = Vec::with_capacity(p.sizes.len());
    for &n in &p.sizes {
        let mut rng = seeded(size_seed(p.seed, n));
        let a = random_automaton(&mut rng, lattice, n, p.letters, p.grid);
        let mut best = f64::INFINITY;
        let mut d_final = 0;
        for _ in 0..p.repeats {
            let start = Instant::now();
            let r = reduce(&a, p.method, p.k, &opts)?;
            best = best.min(start.elapsed().as_secs_f64() * 1e3);
            d_final = *r.report.d_sequence.last().expect("at least one member");
        }
        rows.push(BenchRow {
            n,
            m: p.letters,
            k: p.k,
            method: p.method,
            millis: best,
            d_final,
        });
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from(CSV_HEADER);
    s.push('\n');
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{},{:.3},{}",
            r.n, r.m, r.k, r.method, r.millis, r.d_final
        );
    }
    s
}

/// Least-squares slope of `y` against `x`.
pub fn linear_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

/// Fitted exponent `e` of `y ~ x^e`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    linear_slope(&logs)
}

/// Fitted base `b` of `y ~ b^x`.
pub fn growth_factor(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x, y.ln())).collect();
    linear_slope(&logs).exp()
}
