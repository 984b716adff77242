//! Command-line front end for the Fibonacci partition counts and the
//! golden-rotation dynamics: every library operation has a subcommand, data
//! commands emit CSV or JSON for figure reproduction, and `verify` runs the
//! cross-path consistency sweeps.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use fibpart::asymptotics::{
    cdf_bounds, growth_curve, limit_profile_with_depth, ratio_to_f64, CdfContext,
};
use fibpart::counting::{r_bruteforce_bounded, r_pair, RStream, DEFAULT_BRUTE_BOUND};
use fibpart::dynamics::{g_index, h_eval, orbit_point, rotate, successor};
use fibpart::golden::GoldenNum;
use fibpart::staircase::{
    density, patch_hits_by_scan, patch_hits_in_window, patch_window, run_statistics,
    staircase_table, Patch, Window,
};
use fibpart::zeckendorf::encode;
use fibpart::Ratio;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fibpart",
    version,
    about = "Exact Fibonacci partition counts, golden-rotation orbits, staircase level sets, \
             patch windows, and growth asymptotics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for tabular data
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    /// Write output to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,

    /// Decimal digits for rendered real numbers
    #[arg(long, global = true, default_value_t = 12)]
    precision: usize,

    /// Worker threads for range scans (chunks merged in order; output is
    /// byte-identical for every value)
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print R(n): the number of partitions of n into distinct Fibonacci numbers
    R {
        /// Nonnegative integer (arbitrary size)
        n: String,
    },
    /// Table of n, R(n) over a range
    Seq {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Print the Zeckendorf word of n (most significant digit first)
    Zeckendorf {
        /// Nonnegative integer (arbitrary size)
        n: String,
    },
    /// Orbit table: index, rotation coordinate y_n, staircase value h(y_n)
    Orbit {
        /// Last orbit index to emit
        #[arg(long, default_value_t = 2582)]
        steps: u64,
    },
    /// Plateau table of the staircase to a recursion depth
    Staircase {
        /// Pullback depth (table size is 2(2^(depth+1) - 1))
        #[arg(long)]
        depth: usize,
    },
    /// Exact acceptance window of a patch pattern
    Window {
        /// Comma-separated positive ratios, e.g. "1,1" or "3/2,2"
        #[arg(long)]
        pattern: String,
    },
    /// Occurrences of a patch pattern among the counts
    Patch {
        /// Comma-separated positive ratios, e.g. "1,1" or "3/2,2"
        #[arg(long)]
        pattern: String,
        /// Largest start index scanned
        #[arg(long)]
        limit: u64,
        /// Report the exact occurrence density instead of the hit list
        #[arg(long)]
        density: bool,
    },
    /// Normalized growth profile A(H)/H^alpha over a range of H
    Growth {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Two-sided dyadic bounds on the base-phi Bernoulli convolution CDF
    Cdf {
        /// Query point in [0, phi]: decimal ("0.5"), fraction ("2/3"), or "phi"
        x: String,
        /// Bound denominator exponent: bounds have denominator 2^depth
        #[arg(long, default_value_t = 24)]
        depth: u32,
    },
    /// Log-periodic limit profile on gamma in [1, phi]
    Profile {
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 24)]
        depth: u32,
    },
    /// Cross-path consistency suite; exits 2 if any invariant fails
    Verify {
        /// Largest index swept by the consistency checks
        #[arg(long, default_value_t = 3000)]
        max: u64,
    },
}

struct AppError {
    message: String,
    code: u8,
}

impl AppError {
    fn usage(message: impl Into<String>) -> Self {
        AppError { message: message.into(), code: 1 }
    }
}

impl From<fibpart::Error> for AppError {
    fn from(e: fibpart::Error) -> Self {
        AppError::usage(e.to_string())
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::usage(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

/// Everything a command emits: either a bare value or a named table.
enum Output {
    /// Plain single value (printed bare in CSV mode).
    Value(Vec<(&'static str, String)>),
    Table { columns: Vec<&'static str>, rows: Vec<Vec<String>> },
}

fn run(cli: Cli) -> Result<u8, AppError> {
    if cli.jobs == 0 {
        return Err(AppError::usage("--jobs must be at least 1"));
    }
    if cli.precision == 0 || cli.precision > 100 {
        return Err(AppError::usage("--precision must lie in 1..=100"));
    }
    let mut sink: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(std::io::BufWriter::new(std::fs::File::create(path)?)),
        None => Box::new(std::io::BufWriter::new(std::io::stdout())),
    };
    if let Command::Verify { max } = cli.command {
        return verify(max, cli.jobs, &mut sink);
    }
    let output = match &cli.command {
        Command::R { n } => cmd_r(n),
        Command::Seq { from, to } => cmd_seq(*from, *to, cli.jobs),
        Command::Zeckendorf { n } => cmd_zeckendorf(n),
        Command::Orbit { steps } => cmd_orbit(*steps, cli.precision),
        Command::Staircase { depth } => cmd_staircase(*depth, cli.precision),
        Command::Window { pattern } => cmd_window(pattern, cli.precision),
        Command::Patch { pattern, limit, density } => {
            cmd_patch(pattern, *limit, *density, cli.jobs, cli.precision)
        }
        Command::Growth { from, to } => cmd_growth(*from, *to, cli.precision),
        Command::Cdf { x, depth } => cmd_cdf(x, *depth, cli.precision),
        Command::Profile { samples, depth } => cmd_profile(*samples, *depth, cli.precision),
        Command::Verify { .. } => unreachable!("handled above"),
    }?;
    emit(output, cli.format, &mut sink)?;
    sink.flush()?;
    Ok(0)
}

fn emit(output: Output, format: Format, sink: &mut dyn Write) -> Result<(), AppError> {
    match (output, format) {
        (Output::Value(fields), Format::Csv) => {
            // bare value(s), one per line, no header
            for (_, v) in fields {
                writeln!(sink, "{v}")?;
            }
        }
        (Output::Value(fields), Format::Json) => {
            let mut map = serde_json::Map::new();
            for (k, v) in fields {
                map.insert(k.to_string(), serde_json::Value::String(v));
            }
            writeln!(sink, "{}", serde_json::Value::Object(map))?;
        }
        (Output::Table { columns, rows }, Format::Csv) => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(&columns)?;
            for row in rows {
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        (Output::Table { columns, rows }, Format::Json) => {
            let value = serde_json::json!({
                "columns": columns,
                "rows": rows,
            });
            writeln!(sink, "{value}")?;
        }
    }
    Ok(())
}

impl From<csv::Error> for AppError {
    fn from(e: csv::Error) -> Self {
        AppError::usage(format!("csv error: {e}"))
    }
}

// ---------- argument parsing helpers ----------

fn parse_nonneg_bigint(s: &str) -> Result<BigInt, AppError> {
    let n: BigInt = s
        .parse()
        .map_err(|_| AppError::usage(format!("`{s}` is not an integer")))?;
    if n.is_negative() {
        return Err(AppError::usage(format!("`{s}` must be nonnegative")));
    }
    Ok(n)
}

fn parse_ratio(s: &str) -> Result<Ratio, AppError> {
    let bad = |_| AppError::usage(format!("`{s}` is not a number"));
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(bad)?;
        let d: BigInt = den.trim().parse().map_err(bad)?;
        if d.is_zero() {
            return Err(AppError::usage(format!("`{s}` has a zero denominator")));
        }
        return Ok(Ratio::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int = if int.is_empty() { "0" } else { int };
        let whole: BigInt = int.trim().parse().map_err(bad)?;
        let digits = frac.trim();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(AppError::usage(format!("`{s}` is not a number")));
        }
        let scale = BigInt::from(10u8).pow(digits.len() as u32);
        let frac_num: BigInt = digits.parse().map_err(bad)?;
        let num = &whole * &scale + if whole.is_negative() { -frac_num } else { frac_num };
        return Ok(Ratio::new(num, scale));
    }
    let n: BigInt = s.trim().parse().map_err(bad)?;
    Ok(Ratio::from_integer(n))
}

fn parse_pattern(s: &str) -> Result<Patch, AppError> {
    let ratios = s
        .split(',')
        .map(|part| parse_ratio(part.trim()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Patch::new(ratios)?)
}

fn format_f64(v: f64, precision: usize) -> String {
    format!("{v:.precision$}")
}

// ---------- deterministic chunked parallelism ----------

/// Splits [from, to] into at most `jobs` contiguous chunks, runs `work` on
/// each (in parallel when jobs > 1), and returns the results in range
/// order, so downstream output never depends on the worker count.
fn chunked<T: Send>(
    from: u64,
    to: u64,
    jobs: usize,
    work: impl Fn(u64, u64) -> T + Sync,
) -> Vec<T> {
    let total = to - from + 1;
    let lanes = jobs.max(1).min(total.try_into().unwrap_or(usize::MAX)).max(1);
    let per = total.div_ceil(lanes as u64);
    let ranges: Vec<(u64, u64)> = (0..lanes as u64)
        .map(|i| (from + i * per, (from + i * per).saturating_add(per - 1).min(to)))
        .filter(|(lo, _)| *lo <= to)
        .collect();
    if ranges.len() == 1 {
        let (lo, hi) = ranges[0];
        return vec![work(lo, hi)];
    }
    let work = &work;
    std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(lo, hi)| scope.spawn(move || work(lo, hi)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

// ---------- commands ----------

fn cmd_r(n: &str) -> Result<Output, AppError> {
    let n = parse_nonneg_bigint(n)?;
    let (r, _) = r_pair(&n);
    Ok(Output::Value(vec![("R", r.to_string())]))
}

fn cmd_seq(from: u64, to: u64, jobs: usize) -> Result<Output, AppError> {
    if from > to {
        return Err(AppError::usage("--from must not exceed --to"));
    }
    let chunks = chunked(from, to, jobs, |lo, hi| {
        RStream::starting_at(lo)
            .take((hi - lo + 1) as usize)
            .map(|(n, r)| vec![n.to_string(), r.to_string()])
            .collect::<Vec<_>>()
    });
    Ok(Output::Table {
        columns: vec!["n", "R"],
        rows: chunks.into_iter().flatten().collect(),
    })
}

fn cmd_zeckendorf(n: &str) -> Result<Output, AppError> {
    let n = parse_nonneg_bigint(n)?;
    Ok(Output::Value(vec![("word", encode(&n).to_string())]))
}

fn cmd_orbit(steps: u64, precision: usize) -> Result<Output, AppError> {
    let mut rows = Vec::with_capacity(steps as usize + 1);
    let mut y = GoldenNum::zero();
    for n in 0..=steps {
        let h = h_eval(&y)?;
        let log_h = ratio_to_f64(&h).ln();
        rows.push(vec![
            n.to_string(),
            y.to_decimal(precision),
            y.p.to_string(),
            y.q.to_string(),
            h.numer().to_string(),
            h.denom().to_string(),
            format_f64(log_h, precision),
        ]);
        y = rotate(&y)?;
    }
    Ok(Output::Table {
        columns: vec!["n", "y_decimal", "y_p", "y_q", "h_num", "h_den", "log_h"],
        rows,
    })
}

fn cmd_staircase(depth: usize, precision: usize) -> Result<Output, AppError> {
    if depth > 20 {
        return Err(AppError::usage(
            "--depth above 20 would materialize more than 4 million plateaus",
        ));
    }
    let rows = staircase_table(depth)
        .into_iter()
        .map(|(i, v)| {
            vec![
                i.lo.to_decimal(precision),
                i.hi.to_decimal(precision),
                v.numer().to_string(),
                v.denom().to_string(),
            ]
        })
        .collect();
    Ok(Output::Table {
        columns: vec!["lo_dec", "hi_dec", "value_num", "value_den"],
        rows,
    })
}

fn window_rows(w: &Window, precision: usize) -> Vec<Vec<String>> {
    w.intervals
        .iter()
        .map(|i| {
            vec![
                i.lo.p.to_string(),
                i.lo.q.to_string(),
                i.hi.p.to_string(),
                i.hi.q.to_string(),
                i.lo_closed.to_string(),
                i.hi_closed.to_string(),
                i.lo.to_decimal(precision),
                i.hi.to_decimal(precision),
            ]
        })
        .collect()
}

const WINDOW_COLUMNS: [&str; 8] = [
    "lo_p", "lo_q", "hi_p", "hi_q", "lo_closed", "hi_closed", "lo_dec", "hi_dec",
];

fn cmd_window(pattern: &str, precision: usize) -> Result<Output, AppError> {
    let patch = parse_pattern(pattern)?;
    let w = patch_window(&patch)?;
    Ok(Output::Table {
        columns: WINDOW_COLUMNS.to_vec(),
        rows: window_rows(&w, precision),
    })
}

fn cmd_patch(
    pattern: &str,
    limit: u64,
    want_density: bool,
    jobs: usize,
    precision: usize,
) -> Result<Output, AppError> {
    let patch = parse_pattern(pattern)?;
    if want_density {
        let (exact, _) = density(&patch)?;
        return Ok(Output::Table {
            columns: vec!["density_p", "density_q", "density_dec"],
            rows: vec![vec![
                exact.p.to_string(),
                exact.q.to_string(),
                exact.to_decimal(precision),
            ]],
        });
    }
    let w = patch_window(&patch)?;
    let chunks = chunked(0, limit, jobs, |lo, hi| patch_hits_in_window(&w, lo, hi));
    let rows = chunks
        .into_iter()
        .flatten()
        .map(|n| vec![n.to_string()])
        .collect();
    Ok(Output::Table { columns: vec!["n"], rows })
}

fn cmd_growth(from: u64, to: u64, precision: usize) -> Result<Output, AppError> {
    if from == 0 || from > to {
        return Err(AppError::usage("need 1 <= --from <= --to"));
    }
    let rows = growth_curve(from, to)
        .into_iter()
        .map(|s| {
            vec![
                s.h.to_string(),
                format_f64(s.log_h, precision),
                format_f64(s.ratio, precision),
            ]
        })
        .collect();
    Ok(Output::Table { columns: vec!["H", "logH", "ratio"], rows })
}

fn cmd_cdf(x: &str, depth: u32, precision: usize) -> Result<Output, AppError> {
    if !(2..=34).contains(&depth) {
        return Err(AppError::usage("--depth must lie in 2..=34"));
    }
    let bound = if x.trim() == "phi" {
        CdfContext::new(depth).bounds_qphi(&GoldenNum::phi(), &BigInt::one())?
    } else {
        cdf_bounds(&parse_ratio(x)?, depth)?
    };
    Ok(Output::Table {
        columns: vec![
            "x", "k", "lower_num", "lower_den", "upper_num", "upper_den", "lower_dec",
            "upper_dec",
        ],
        rows: vec![vec![
            format_f64(bound.x, precision),
            bound.k.to_string(),
            bound.lower.numer().to_string(),
            bound.lower.denom().to_string(),
            bound.upper.numer().to_string(),
            bound.upper.denom().to_string(),
            format_f64(ratio_to_f64(&bound.lower), precision),
            format_f64(ratio_to_f64(&bound.upper), precision),
        ]],
    })
}

fn cmd_profile(samples: usize, depth: u32, precision: usize) -> Result<Output, AppError> {
    if samples < 2 {
        return Err(AppError::usage("--samples must be at least 2"));
    }
    if !(2..=34).contains(&depth) {
        return Err(AppError::usage("--depth must lie in 2..=34"));
    }
    let rows = limit_profile_with_depth(samples, depth)?
        .into_iter()
        .map(|s| vec![format_f64(s.gamma, precision), format_f64(s.value, precision)])
        .collect();
    Ok(Output::Table { columns: vec!["gamma", "value"], rows })
}

// ---------- verify ----------

struct Check {
    name: &'static str,
    failure: Option<String>,
}

fn verify(max: u64, jobs: usize, sink: &mut dyn Write) -> Result<u8, AppError> {
    if max < 100 {
        return Err(AppError::usage("--max must be at least 100"));
    }
    let mut checks = Vec::new();

    // 1. Matrix route vs brute-force oracle (capped at the oracle bound)
    //    and pair consistency R(n-1), in parallel chunks.
    let oracle_cap = max.min(DEFAULT_BRUTE_BOUND);
    let mismatches = chunked(0, oracle_cap, jobs, |lo, hi| {
        let mut prev: Option<BigInt> = None;
        for (n, r) in RStream::starting_at(lo).take((hi - lo + 1) as usize) {
            let nn = BigInt::from(n);
            let (direct, below) = r_pair(&nn);
            if direct != r {
                return Some(format!("r_pair({n}) = {direct} but stream gives {r}"));
            }
            if let (Some(p), Some(b)) = (&prev, &below) {
                if p != b {
                    return Some(format!("r_pair({n}) reports R({}) = {b}, expected {p}", n - 1));
                }
            }
            let brute = r_bruteforce_bounded(&nn, DEFAULT_BRUTE_BOUND)
                .expect("n is within the oracle bound");
            if brute != r {
                return Some(format!("oracle({n}) = {brute} but matrix gives {r}"));
            }
            prev = Some(r);
        }
        None
    });
    checks.push(Check {
        name: "matrix/oracle/pair equality",
        failure: mismatches.into_iter().flatten().next(),
    });

    // 2. Cocycle route: R(n+1) = R(n) * h(y_n), walked incrementally.
    checks.push(Check { name: "cocycle product equality", failure: cocycle_check(max) });

    // 3. Orbit confinement and the successor index law.
    checks.push(Check { name: "orbit confinement and indexing", failure: orbit_check(max) });

    // 4. Window/scan duality for patches (1) and (1,1).
    checks.push(Check { name: "patch window/scan duality", failure: duality_check(max, jobs) });

    // 5. Longest nondecreasing run.
    checks.push(Check { name: "nondecreasing run maximum", failure: run_check(max) });

    // 6. CDF sandwich validity and monotonicity.
    checks.push(Check { name: "cdf sandwich validity", failure: cdf_check() });

    let mut first_failure = None;
    for c in &checks {
        match &c.failure {
            None => writeln!(sink, "ok: {}", c.name)?,
            Some(detail) => {
                writeln!(sink, "FAIL: {}: {detail}", c.name)?;
                if first_failure.is_none() {
                    first_failure = Some(c.name);
                }
            }
        }
    }
    sink.flush()?;
    if let Some(name) = first_failure {
        eprintln!("first failing invariant: {name}");
        Ok(2)
    } else {
        Ok(0)
    }
}

fn cocycle_check(max: u64) -> Option<String> {
    let mut y = GoldenNum::zero();
    let mut cur = BigInt::one();
    for (n, r) in RStream::new().take(max as usize + 1) {
        if cur != r {
            return Some(format!("cocycle R({n}) = {cur}, stream gives {r}"));
        }
        let h = match h_eval(&y) {
            Ok(h) => h,
            Err(e) => return Some(format!("h(y_{n}) failed: {e}")),
        };
        let scaled = &cur * h.numer();
        if (&scaled % h.denom()).is_zero() {
            cur = scaled / h.denom();
        } else {
            return Some(format!("h(y_{n}) does not divide R({n}) exactly"));
        }
        y = match rotate(&y) {
            Ok(y) => y,
            Err(e) => return Some(format!("rotate failed at n = {n}: {e}")),
        };
    }
    None
}

fn orbit_check(max: u64) -> Option<String> {
    let lo = GoldenNum::new(-2, 1); // -1/phi^2
    let hi = GoldenNum::new(-1, 1); // 1/phi
    let mut pt = orbit_point(0);
    for n in 0..=max {
        if (&pt.y - &lo).signum() < 0 || (&pt.y - &hi).signum() >= 0 {
            return Some(format!("y_{n} escapes the strip"));
        }
        match g_index(&pt.x, &pt.y) {
            Ok(idx) if idx == BigInt::from(n) => {}
            Ok(idx) => return Some(format!("g(x_{n}, y_{n}) = {idx}")),
            Err(e) => return Some(format!("g rejected the orbit point {n}: {e}")),
        }
        if n % 512 == 0 && orbit_point(n) != pt {
            return Some(format!("direct orbit formula disagrees at n = {n}"));
        }
        pt = successor(&pt);
    }
    None
}

fn duality_check(max: u64, jobs: usize) -> Option<String> {
    for entries in [&[1i64][..], &[1, 1][..]] {
        let patch = Patch::from_ints(entries).expect("static patch is valid");
        let w = match patch_window(&patch) {
            Ok(w) => w,
            Err(e) => return Some(format!("window for {entries:?} failed: {e}")),
        };
        let via_window: Vec<u64> = chunked(0, max, jobs, |lo, hi| {
            patch_hits_in_window(&w, lo, hi)
        })
        .into_iter()
        .flatten()
        .collect();
        let via_scan = match patch_hits_by_scan(&patch, max) {
            Ok(v) => v,
            Err(e) => return Some(format!("scan for {entries:?} failed: {e}")),
        };
        if via_window != via_scan {
            let diff = via_window
                .iter()
                .zip(&via_scan)
                .find(|(a, b)| a != b)
                .map(|(a, b)| format!("first divergence {a} vs {b}"))
                .unwrap_or_else(|| {
                    format!("lengths {} vs {}", via_window.len(), via_scan.len())
                });
            return Some(format!("patch {entries:?}: {diff}"));
        }
    }
    None
}

fn run_check(max: u64) -> Option<String> {
    let report = run_statistics(max);
    if report.weak.k_max != 3 {
        return Some(format!("longest nondecreasing run has {} steps", report.weak.k_max));
    }
    if report.weak.witnesses != [0] {
        return Some(format!("unexpected run witnesses {:?}", report.weak.witnesses));
    }
    None
}

fn cdf_check() -> Option<String> {
    let ctx = CdfContext::new(16);
    let den = BigInt::from(32);
    let mut prev: Option<(Ratio, Ratio)> = None;
    for j in 0..=32i64 {
        let b = match ctx.bounds_qphi(&GoldenNum::new(0, j), &den) {
            Ok(b) => b,
            Err(e) => return Some(format!("bounds at {j}phi/32 failed: {e}")),
        };
        if b.lower > b.upper {
            return Some(format!("inverted sandwich at {j}phi/32"));
        }
        if b.lower < Ratio::zero() || b.upper > Ratio::one() {
            return Some(format!("bounds escape [0,1] at {j}phi/32"));
        }
        if let Some((pl, pu)) = &prev {
            if &b.lower < pl || &b.upper < pu {
                return Some(format!("bounds not monotone at {j}phi/32"));
            }
        }
        prev = Some((b.lower, b.upper));
    }
    None
}
