//! Wall-clock timing of the algorithms on random inputs, plus the
//! least-squares fits used to read growth rates off the measurements.

use std::fmt;
use std::hint::black_box;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use nalgebra::{DMatrix, DVector};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bezout::{bezout_euclid, bezout_stein};
use crate::error::{ArithError, Result};
use crate::fermat::fermat_factor;
use crate::fta::{factorize, gen_pms};
use crate::gcd::{euclid_gcd_bin, nat_gcd, stein_gcd};
use crate::isqrt::{fast_sqrt, pos_sqrt_floor};
use crate::numerals::{BinPos, PosSeq, UnaryNat};
use crate::primes::is_prime_pos;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BenchOp {
    Stein,
    EuclidBin,
    NatGcd,
    BezoutStein,
    BezoutEuclid,
    PosSqrt,
    FastSqrt,
    Factorize,
    Fermat,
    GenPms,
}

impl BenchOp {
    pub const ALL: [BenchOp; 10] = [
        BenchOp::Stein,
        BenchOp::EuclidBin,
        BenchOp::NatGcd,
        BenchOp::BezoutStein,
        BenchOp::BezoutEuclid,
        BenchOp::PosSqrt,
        BenchOp::FastSqrt,
        BenchOp::Factorize,
        BenchOp::Fermat,
        BenchOp::GenPms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchOp::Stein => "stein",
            BenchOp::EuclidBin => "euclidBin",
            BenchOp::NatGcd => "natGcd",
            BenchOp::BezoutStein => "bezoutStein",
            BenchOp::BezoutEuclid => "bezoutEuclid",
            BenchOp::PosSqrt => "posSqrt",
            BenchOp::FastSqrt => "fastSqrt",
            BenchOp::Factorize => "factorize",
            BenchOp::Fermat => "fermat",
            BenchOp::GenPms => "genPms",
        }
    }

    fn arity(self) -> usize {
        match self {
            BenchOp::Stein
            | BenchOp::EuclidBin
            | BenchOp::NatGcd
            | BenchOp::BezoutStein
            | BenchOp::BezoutEuclid => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for BenchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BenchOp {
    type Err = ArithError;
    fn from_str(s: &str) -> Result<Self> {
        BenchOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| ArithError::UnknownOp(s.to_string()))
    }
}

/// Median timing of one operation at one input size.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub op: BenchOp,
    pub digits: usize,
    pub seed: u64,
    pub seconds: f64,
    pub reps: usize,
}

/// One timed repetition, as written to CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct RawTiming {
    pub op: String,
    pub digits: usize,
    pub seed: u64,
    pub rep: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone, Default)]
pub struct BenchRun {
    pub samples: Vec<Sample>,
    pub raw: Vec<RawTiming>,
}

/// Uniform decimal string of exactly `digits` digits with a nonzero lead.
pub fn random_decimal(rng: &mut impl Rng, digits: usize) -> String {
    let mut s = String::with_capacity(digits);
    s.push(char::from(b'1' + rng.random_range(0..9u8)));
    for _ in 1..digits {
        s.push(char::from(b'0' + rng.random_range(0..10u8)));
    }
    s
}

/// Decimal inputs for `op` at each size, fully determined by `seed`.
///
/// For `genPms` the size is a count of primes rather than a digit count;
/// the input is the first that many primes followed by a shuffled copy.
pub fn generate_inputs(op: BenchOp, sizes: &[usize], seed: u64) -> Result<Vec<Vec<String>>> {
    if let Some(&bad) = sizes.iter().find(|&&d| d == 0) {
        return Err(ArithError::Precondition(format!("input size {bad} is below 1")));
    }
    if op == BenchOp::NatGcd {
        if let Some(&big) = sizes.iter().find(|&&d| d > 19) {
            return Err(ArithError::Precondition(format!(
                "natGcd takes machine-sized naturals, {big} digits is too many"
            )));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(sizes
        .iter()
        .map(|&d| match op {
            BenchOp::GenPms => {
                let primes: Vec<BinPos> = (2u64..)
                    .map(|v| BinPos::try_from(v).expect("positive"))
                    .filter(is_prime_pos)
                    .take(d)
                    .collect();
                let mut shuffled = primes.clone();
                shuffled.shuffle(&mut rng);
                primes
                    .iter()
                    .chain(shuffled.iter())
                    .map(ToString::to_string)
                    .collect()
            }
            _ => (0..op.arity()).map(|_| random_decimal(&mut rng, d)).collect(),
        })
        .collect())
}

fn run_once(op: BenchOp, input: &[String]) -> Result<f64> {
    let nums: Vec<BinPos> = if op == BenchOp::NatGcd {
        Vec::new()
    } else {
        input.iter().map(|s| s.parse()).collect::<Result<_>>()?
    };
    let start = Instant::now();
    match op {
        BenchOp::Stein => {
            black_box(stein_gcd(&nums[0], &nums[1]));
        }
        BenchOp::EuclidBin => {
            black_box(euclid_gcd_bin(&nums[0], &nums[1]));
        }
        BenchOp::NatGcd => {
            let a: u64 = input[0].parse().map_err(|e| ArithError::Parse(format!("{e}")))?;
            let b: u64 = input[1].parse().map_err(|e| ArithError::Parse(format!("{e}")))?;
            black_box(nat_gcd(UnaryNat(a), UnaryNat(b)));
        }
        BenchOp::BezoutStein => {
            black_box(bezout_stein(&nums[0], &nums[1]));
        }
        BenchOp::BezoutEuclid => {
            black_box(bezout_euclid(&nums[0], &nums[1]));
        }
        BenchOp::PosSqrt => {
            black_box(pos_sqrt_floor(&nums[0]));
        }
        BenchOp::FastSqrt => {
            black_box(fast_sqrt(&nums[0]));
        }
        BenchOp::Factorize => {
            black_box(factorize(&nums[0]));
        }
        BenchOp::Fermat => {
            black_box(fermat_factor(&nums[0])?);
        }
        BenchOp::GenPms => {
            let n = nums.len() / 2;
            let ps = PosSeq::from_vec(nums[..n].to_vec());
            let qs = PosSeq::from_vec(nums[n..].to_vec());
            black_box(gen_pms(n, n, &ps, &qs));
        }
    }
    Ok(start.elapsed().as_secs_f64())
}

pub fn median(values: &[f64]) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Times `op` at each size `reps` times, sequentially, reporting medians.
pub fn run_bench(op: BenchOp, sizes: &[usize], reps: usize, seed: u64) -> Result<BenchRun> {
    if reps == 0 {
        return Err(ArithError::Precondition("at least one repetition is needed".into()));
    }
    let inputs = generate_inputs(op, sizes, seed)?;
    let mut run = BenchRun::default();
    for (&digits, input) in sizes.iter().zip(&inputs) {
        let mut times = Vec::with_capacity(reps);
        for rep in 0..reps {
            let seconds = run_once(op, input)?;
            times.push(seconds);
            run.raw.push(RawTiming { op: op.name().to_string(), digits, seed, rep, seconds });
        }
        run.samples.push(Sample { op, digits, seed, seconds: median(&times), reps });
    }
    Ok(run)
}

const CSV_HEADER: [&str; 5] = ["op", "digits", "seed", "rep", "seconds"];

pub fn write_csv(path: &Path, rows: &[RawTiming]) -> Result<()> {
    let io = |e: csv::Error| ArithError::Io(e.to_string());
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in rows {
        w.write_record([
            r.op.clone(),
            r.digits.to_string(),
            r.seed.to_string(),
            r.rep.to_string(),
            r.seconds.to_string(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| ArithError::Io(e.to_string()))
}

pub fn read_csv(path: &Path) -> Result<Vec<RawTiming>> {
    let io = |e: csv::Error| ArithError::Io(e.to_string());
    let mut r = csv::Reader::from_path(path).map_err(io)?;
    let header = r.headers().map_err(io)?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(ArithError::Io(format!(
            "unexpected CSV header, want {}",
            CSV_HEADER.join(",")
        )));
    }
    let field = |rec: &csv::StringRecord, i: usize| -> Result<String> {
        rec.get(i)
            .map(str::to_string)
            .ok_or_else(|| ArithError::Io(format!("missing column {}", CSV_HEADER[i])))
    };
    let num_err = |e: &dyn fmt::Display| ArithError::Io(format!("bad CSV number: {e}"));
    r.records()
        .map(|rec| {
            let rec = rec.map_err(io)?;
            Ok(RawTiming {
                op: field(&rec, 0)?,
                digits: field(&rec, 1)?.parse().map_err(|e| num_err(&e))?,
                seed: field(&rec, 2)?.parse().map_err(|e| num_err(&e))?,
                rep: field(&rec, 3)?.parse().map_err(|e| num_err(&e))?,
                seconds: field(&rec, 4)?.parse().map_err(|e| num_err(&e))?,
            })
        })
        .collect()
}

/// Polynomial `Σ coefficients[k]·x^(k+1)`, without constant term.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyFit {
    pub degree: usize,
    pub coefficients: Vec<f64>,
    pub residual: f64,
}

impl PolyFit {
    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| (acc + c) * x)
    }
}

impl fmt::Display for PolyFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree: {}", self.degree)?;
        let cs: Vec<String> = self.coefficients.iter().map(|c| format!("{c:.5e}")).collect();
        writeln!(f, "coefficients: {}", cs.join(" "))?;
        write!(f, "residual: {:.5e}", self.residual)
    }
}

/// Least-squares fit with basis `x, x², …`, lowering the degree until the
/// design matrix has full column rank.
pub fn fit_poly(samples: &[(f64, f64)], max_degree: usize) -> Result<PolyFit> {
    if samples.is_empty() {
        return Err(ArithError::Precondition("no samples to fit".into()));
    }
    if max_degree == 0 {
        return Err(ArithError::Precondition("degree must be at least 1".into()));
    }
    let scale = samples.iter().map(|s| s.0.abs()).fold(0.0, f64::max);
    let scale = if scale > 0.0 { scale } else { 1.0 };
    let y = DVector::from_iterator(samples.len(), samples.iter().map(|s| s.1));
    for degree in (1..=max_degree).rev() {
        let mut a = DMatrix::from_fn(samples.len(), degree, |i, j| {
            (samples[i].0 / scale).powi(j as i32 + 1)
        });
        // Unit column norms; undone on the solution below.
        let norms: Vec<f64> = a.column_iter().map(|c| c.norm()).collect();
        if norms.contains(&0.0) {
            continue;
        }
        for (j, n) in norms.iter().enumerate() {
            a.column_mut(j).unscale_mut(*n);
        }
        let svd = a.svd(true, true);
        let smax = svd.singular_values.max();
        let tol = smax * 1e-13 * samples.len().max(degree) as f64;
        if svd.rank(tol) < degree {
            continue;
        }
        let c = svd.solve(&y, tol).map_err(|e| ArithError::Precondition(e.to_string()))?;
        let coefficients: Vec<f64> = c
            .iter()
            .enumerate()
            .map(|(j, v)| v / norms[j] / scale.powi(j as i32 + 1))
            .collect();
        let mut fit = PolyFit { degree, coefficients, residual: 0.0 };
        fit.residual = samples.iter().map(|&(x, y)| (y - fit.eval(x)).powi(2)).sum();
        return Ok(fit);
    }
    Err(ArithError::Precondition(
        "samples do not determine even a linear fit".into(),
    ))
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(samples: &[(f64, f64)]) -> Result<f64> {
    if samples.len() < 2 {
        return Err(ArithError::Precondition("slope needs two samples".into()));
    }
    if samples.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return Err(ArithError::Precondition("slope needs positive values".into()));
    }
    let pts: Vec<(f64, f64)> = samples.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(ArithError::Precondition("slope needs distinct sizes".into()));
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Ok(sxy / sxx)
}
