use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use consarith::bezout::{bezout_euclid, bezout_stein};
use consarith::fermat::fermat_factor;
use consarith::fta::{factorize, gen_pms, prod_split};
use consarith::gcd::{euclid_gcd_bin, nat_gcd, stein_gcd};
use consarith::isqrt::{fast_sqrt, nat_sqrt_ceil, pos_sqrt_floor};
use consarith::primes::{is_prime_pos, least_factor, least_factor_odd_step, new_prime};
use consarith::timing::{self, BenchOp};
use consarith::{ArithError, BinPos, PosSeq, UnaryNat};

#[derive(Parser)]
#[command(name = "consarith", version, about = "Elementary number theory on decimal big numbers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Greatest common divisor
    Gcd {
        #[arg(long, value_enum, default_value_t = GcdAlgo::Stein)]
        algo: GcdAlgo,
        a: String,
        b: String,
    },
    /// Bézout certificate for a pair of positive numbers
    Bezout {
        #[arg(long, value_enum, default_value_t = BezoutAlgo::Stein)]
        algo: BezoutAlgo,
        a: String,
        b: String,
    },
    /// Integer square root
    Sqrt {
        #[arg(long, value_enum, default_value_t = SqrtAlgo::Fast)]
        algo: SqrtAlgo,
        n: String,
    },
    /// Primality test
    Prime { n: String },
    /// Least factor above one
    LeastFactor {
        /// Only try odd candidates
        #[arg(long)]
        odd_step: bool,
        n: String,
    },
    /// Least factor of the product of the listed numbers plus one
    NewPrime {
        #[arg(default_value = "")]
        list: String,
    },
    /// Factorization
    Factor {
        #[arg(long, value_enum, default_value_t = FactorMethod::Trial)]
        method: FactorMethod,
        n: String,
    },
    /// Permutation taking one prime list onto another
    Pms { ps: String, qs: String },
    /// Four-way split of p0·p1 = q0·q1
    Prodsplit { p0: String, p1: String, q0: String, q1: String },
    /// Time an operation on random inputs
    Bench {
        #[arg(long)]
        op: String,
        /// Comma-separated input sizes
        #[arg(long)]
        digits: String,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write one row per repetition here
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Also fit a polynomial of at most this degree to the medians
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Fit polynomials to timings read from a CSV file
    Fit {
        #[arg(long)]
        csv: PathBuf,
        #[arg(long, default_value_t = 9)]
        max_degree: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GcdAlgo {
    Stein,
    Euclid,
    Nat,
}

#[derive(Clone, Copy, ValueEnum)]
enum BezoutAlgo {
    Stein,
    Euclid,
}

#[derive(Clone, Copy, ValueEnum)]
enum SqrtAlgo {
    Fast,
    Floor,
    Ceil,
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorMethod {
    Trial,
    Fermat,
}

fn pos(s: &str) -> Result<BinPos, ArithError> {
    s.parse()
}

fn nat(s: &str) -> Result<UnaryNat, ArithError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ArithError::Parse(format!("'{s}' is not a decimal natural number")));
    }
    s.parse::<u64>()
        .map(UnaryNat)
        .map_err(|_| ArithError::Precondition(format!("{s} exceeds the unary range (2^64 - 1)")))
}

fn pos_list(s: &str) -> Result<Vec<BinPos>, ArithError> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(pos).collect()
}

fn size_list(s: &str) -> Result<Vec<usize>, ArithError> {
    s.split(',')
        .map(|d| {
            d.parse::<usize>()
                .map_err(|_| ArithError::Parse(format!("'{d}' is not an input size")))
        })
        .collect()
}

fn run(cmd: Cmd) -> Result<String, ArithError> {
    Ok(match cmd {
        Cmd::Gcd { algo, a, b } => match algo {
            GcdAlgo::Stein => stein_gcd(&pos(&a)?, &pos(&b)?).to_string(),
            GcdAlgo::Euclid => euclid_gcd_bin(&pos(&a)?, &pos(&b)?).to_string(),
            GcdAlgo::Nat => nat_gcd(nat(&a)?, nat(&b)?).to_string(),
        },
        Cmd::Bezout { algo, a, b } => {
            let (a, b) = (pos(&a)?, pos(&b)?);
            match algo {
                BezoutAlgo::Stein => bezout_stein(&a, &b),
                BezoutAlgo::Euclid => bezout_euclid(&a, &b),
            }
            .to_string()
        }
        Cmd::Sqrt { algo, n } => match algo {
            SqrtAlgo::Fast => fast_sqrt(&pos(&n)?).to_string(),
            SqrtAlgo::Floor => pos_sqrt_floor(&pos(&n)?).to_string(),
            SqrtAlgo::Ceil => nat_sqrt_ceil(nat(&n)?).to_string(),
        },
        Cmd::Prime { n } => {
            let n = pos(&n)?;
            if n.is_one() {
                return Err(ArithError::Precondition("1 is neither prime nor composite".into()));
            }
            if is_prime_pos(&n) { "prime" } else { "composite" }.to_string()
        }
        Cmd::LeastFactor { odd_step, n } => {
            let n = pos(&n)?;
            if odd_step {
                least_factor_odd_step(&n)
            } else {
                least_factor(&n)
            }
            .to_string()
        }
        Cmd::NewPrime { list } => {
            let ps = pos_list(&list)?;
            let n = ps.len();
            new_prime(&PosSeq::from_vec(ps), n).to_string()
        }
        Cmd::Factor { method, n } => {
            let n = pos(&n)?;
            match method {
                FactorMethod::Trial => factorize(&n).to_string(),
                FactorMethod::Fermat => fermat_factor(&n)?.to_string(),
            }
        }
        Cmd::Pms { ps, qs } => {
            let (ps, qs) = (pos_list(&ps)?, pos_list(&qs)?);
            let (n, m) = (ps.len(), qs.len());
            let (_, w) = gen_pms(n, m, &PosSeq::from_vec(ps), &PosSeq::from_vec(qs));
            let fwd: Vec<String> = (0..n.max(m)).map(|i| w.apply(i).to_string()).collect();
            format!("[{}]", fwd.join(","))
        }
        Cmd::Prodsplit { p0, p1, q0, q1 } => {
            let (r0, r1, r2, r3) = prod_split(&pos(&p0)?, &pos(&p1)?, &pos(&q0)?, &pos(&q1)?)?;
            format!("({r0},({r1},({r2},{r3})))")
        }
        Cmd::Bench { op, digits, reps, seed, csv, max_degree } => {
            let op: BenchOp = op.parse()?;
            let sizes = size_list(&digits)?;
            let run = timing::run_bench(op, &sizes, reps, seed)?;
            if let Some(path) = &csv {
                timing::write_csv(path, &run.raw)?;
            }
            let mut lines: Vec<String> = run
                .samples
                .iter()
                .map(|s| format!("{} {} {:.6e}", s.op, s.digits, s.seconds))
                .collect();
            if let Some(d) = max_degree {
                let pts: Vec<(f64, f64)> =
                    run.samples.iter().map(|s| (s.digits as f64, s.seconds)).collect();
                lines.push(timing::fit_poly(&pts, d)?.to_string());
            }
            lines.join("\n")
        }
        Cmd::Fit { csv, max_degree } => {
            let rows = timing::read_csv(&csv)?;
            let mut groups: BTreeMap<String, BTreeMap<usize, Vec<f64>>> = BTreeMap::new();
            for r in rows {
                groups.entry(r.op).or_default().entry(r.digits).or_default().push(r.seconds);
            }
            if groups.is_empty() {
                return Err(ArithError::Precondition("the CSV file has no timings".into()));
            }
            let mut out = Vec::new();
            for (op, by_size) in groups {
                let pts: Vec<(f64, f64)> = by_size
                    .iter()
                    .map(|(&d, ts)| (d as f64, timing::median(ts)))
                    .collect();
                out.push(format!("op: {op}\n{}", timing::fit_poly(&pts, max_degree)?));
            }
            out.join("\n")
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let line = msg.lines().next().unwrap_or("invalid arguments");
            eprintln!("{}", line.trim());
            return ExitCode::FAILURE;
        }
    };
    match run(cli.cmd) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
