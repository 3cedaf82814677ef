//! Command-line front end for the linear reliability channel toolkit.
//!
//! Curve subcommands write a CSV plus a JSON sidecar (same stem, `.json`
//! extension) holding the scalar summary; `simulate` writes a single JSON
//! report. Floats are serialized with 17 significant digits so every emitted
//! value re-parses to the exact f64 the library computed. Randomized
//! subcommands are reproducible from `--seed`, and `--workers` only sizes
//! the thread pool; it never changes emitted numbers.
//!
//! Exit codes: 0 on success, 2 on validation errors (a diagnostic names the
//! violated precondition), 1 when an output file cannot be written. Set
//! `RUST_LOG=info` for progress logging; the environment controls verbosity
//! only, never results.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lrc::asymptotics::{
    entropy_rates, exponent_curve, match_beta_to_bsc, rate_function, BscChannel, GuessworkScgf,
    Mode, ScgfSpec,
};
use lrc::decode::{monte_carlo_bler, CodebookMode, DecoderKind, SimulationConfig};
use lrc::llr::{linearity_report, reliability_profile, LinearityReport, NoiseFamily, NoiseKind};
use lrc::model::LrcParams;
use lrc::weights::{bridges_log_approx, logistic_coefficient_log_table, max_logistic_weight};

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

#[derive(Parser)]
#[command(
    name = "lrc",
    version,
    about = "Linear reliability channel: coefficients, exponents, and decoding experiments",
    propagate_version = true
)]
struct Cli {
    /// Worker threads for curve evaluation (0 = one per core). Changes
    /// runtime only, never the emitted numbers.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact log logistic coefficients next to the saddle-point
    /// approximation, one row per weight.
    Coeff {
        /// Block length (2..=512; the table has n(n+1)/2 rows).
        #[arg(long)]
        n: usize,
        /// CSV destination; the JSON sidecar lands next to it.
        #[arg(long)]
        out: PathBuf,
    },
    /// Scaled cumulant generating functions of the guesswork for both
    /// decision modes over an alpha grid.
    Scgf {
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = -2.0)]
        alpha_min: f64,
        #[arg(long, default_value_t = 5.0)]
        alpha_max: f64,
        /// Number of grid points (>= 2).
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Large-deviations rate functions of the guesswork exponent for both
    /// decision modes.
    Rate {
        #[arg(long)]
        beta: f64,
        /// Number of interior grid points on (0, ln 2).
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Error and success exponents of random-code maximum-likelihood
    /// decoding for both decision modes, with capacities and critical rates.
    Exponents {
        #[arg(long)]
        beta: f64,
        /// Number of interior rate grid points on (0, 1).
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Match a binary symmetric channel to the channel's guessing behavior
    /// and compare error exponents.
    MatchBsc {
        #[arg(long)]
        beta: f64,
        /// Decision mode to match.
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long, default_value_t = 256)]
        grid: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Monte-Carlo block-error-rate estimate for one decoder.
    Simulate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        beta: f64,
        /// Code rate in bits per channel use, in (0, 1).
        #[arg(long)]
        rate: f64,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = DecoderArg::Soft)]
        decoder: DecoderArg,
        #[arg(long, value_enum, default_value_t = CodebookArg::Fresh)]
        codebook: CodebookArg,
        /// Per-trial query cap (default 2^min(n, 24); capped trials count as
        /// errors).
        #[arg(long)]
        max_queries: Option<u64>,
        /// JSON destination.
        #[arg(long)]
        out: PathBuf,
    },
    /// Sorted reliability profile of an additive-noise channel with a
    /// linearity report sidecar.
    Llr {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Noise standard deviation.
        #[arg(long)]
        sigma: f64,
        #[arg(long, default_value_t = 65536)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Initial fraction of the sorted profile the linear fit covers.
        #[arg(long, default_value_t = 0.5)]
        fraction: f64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Soft,
    Hard,
}

impl From<ModeArg> for Mode {
    fn from(arg: ModeArg) -> Mode {
        match arg {
            ModeArg::Soft => Mode::Soft,
            ModeArg::Hard => Mode::Hard,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DecoderArg {
    Soft,
    Hard,
}

impl From<DecoderArg> for DecoderKind {
    fn from(arg: DecoderArg) -> DecoderKind {
        match arg {
            DecoderArg::Soft => DecoderKind::Soft,
            DecoderArg::Hard => DecoderKind::Hard,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CodebookArg {
    /// Fresh uniform code book every trial (the random-code ensemble).
    Fresh,
    /// One fixed code book shared by all trials.
    Fixed,
}

impl From<CodebookArg> for CodebookMode {
    fn from(arg: CodebookArg) -> CodebookMode {
        match arg {
            CodebookArg::Fresh => CodebookMode::FreshPerTrial,
            CodebookArg::Fixed => CodebookMode::Fixed,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Normal,
    Logistic,
    Laplace,
}

impl From<FamilyArg> for NoiseKind {
    fn from(arg: FamilyArg) -> NoiseKind {
        match arg {
            FamilyArg::Normal => NoiseKind::Normal,
            FamilyArg::Logistic => NoiseKind::Logistic,
            FamilyArg::Laplace => NoiseKind::Laplace,
        }
    }
}

enum CliError {
    /// A precondition was violated; the message names it. Exit 2.
    Invalid(String),
    /// An artifact could not be written. Exit 1.
    Io(io::Error),
}

impl From<lrc::Error> for CliError {
    fn from(err: lrc::Error) -> Self {
        CliError::Invalid(err.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(err: io::Error) -> Self {
        CliError::Io(err)
    }
}

fn main() {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
        Err(CliError::Io(err)) => {
            eprintln!("error: {err}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers)
        .build()
        .map_err(|e| CliError::Invalid(format!("worker pool: {e}")))?;
    let start = Instant::now();
    pool.install(|| dispatch(cli.command))?;
    log::info!("done in {:.2}s", start.elapsed().as_secs_f64());
    Ok(())
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Coeff { n, out } => coeff(n, &out),
        Command::Scgf {
            beta,
            alpha_min,
            alpha_max,
            grid,
            out,
        } => scgf(beta, alpha_min, alpha_max, grid, &out),
        Command::Rate { beta, grid, out } => rate(beta, grid, &out),
        Command::Exponents { beta, grid, out } => exponents(beta, grid, &out),
        Command::MatchBsc {
            beta,
            mode,
            grid,
            out,
        } => match_bsc(beta, mode.into(), grid, &out),
        Command::Simulate {
            n,
            beta,
            rate,
            trials,
            seed,
            decoder,
            codebook,
            max_queries,
            out,
        } => simulate(
            n,
            beta,
            rate,
            trials,
            seed,
            decoder.into(),
            codebook.into(),
            max_queries,
            &out,
        ),
        Command::Llr {
            family,
            sigma,
            samples,
            seed,
            fraction,
            out,
        } => llr(family.into(), sigma, samples, seed, fraction, &out),
    }
}

/// 17 significant digits: enough for exact f64 round-trips.
fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn write_csv<I: IntoIterator<Item = String>>(
    path: &Path,
    header: &str,
    rows: I,
) -> Result<(), CliError> {
    let mut file = BufWriter::new(fs::File::create(path)?);
    writeln!(file, "{header}")?;
    for row in rows {
        writeln!(file, "{row}")?;
    }
    file.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let mut file = BufWriter::new(fs::File::create(path)?);
    serde_json::to_writer_pretty(&mut file, value)
        .map_err(|e| CliError::Io(io::Error::other(e)))?;
    writeln!(file)?;
    file.flush()?;
    Ok(())
}

/// The JSON summary lands next to the CSV, same stem.
fn sidecar_path(out: &Path) -> Result<PathBuf, CliError> {
    let sidecar = out.with_extension("json");
    if sidecar == out {
        return Err(CliError::Invalid(
            "output path must not use the .json extension (it is reserved for the sidecar)".into(),
        ));
    }
    Ok(sidecar)
}

#[derive(Serialize)]
struct CoeffSummary {
    n: usize,
    max_weight: usize,
    center_weight: usize,
    center_relative_log_error: f64,
}

fn coeff(n: usize, out: &Path) -> Result<(), CliError> {
    if !(2..=512).contains(&n) {
        return Err(CliError::Invalid(format!(
            "block length n must lie in 2..=512 for the coefficient table, got {n}"
        )));
    }
    let cap = max_logistic_weight(n);
    let exact = logistic_coefficient_log_table(n)?;
    let mut rows = Vec::with_capacity(cap - 1);
    for (w, &exact_w) in exact.iter().enumerate().take(cap).skip(1) {
        let approx = bridges_log_approx(n, w)?.log_count;
        let mut row = String::new();
        let _ = write!(
            row,
            "{w},{},{},{}",
            fmt(exact_w),
            fmt(approx),
            fmt(approx - exact_w)
        );
        rows.push(row);
    }
    write_csv(
        out,
        "w,exact_log_count,bridges_log_count,signed_error",
        rows,
    )?;

    let center = cap / 2;
    let center_err =
        ((bridges_log_approx(n, center)?.log_count - exact[center]) / exact[center]).abs();
    write_json(
        &sidecar_path(out)?,
        &CoeffSummary {
            n,
            max_weight: cap,
            center_weight: center,
            center_relative_log_error: center_err,
        },
    )?;
    log::info!(
        "coeff: {} rows, central relative log error {center_err:.3e}",
        cap - 1
    );
    Ok(())
}

#[derive(Serialize)]
struct ScgfSummary {
    beta: f64,
    h_min: f64,
    h1_soft: f64,
    h1_hard: f64,
    h_half_soft: f64,
    h_half_hard: f64,
}

fn scgf(
    beta: f64,
    alpha_min: f64,
    alpha_max: f64,
    grid: usize,
    out: &Path,
) -> Result<(), CliError> {
    if grid < 2 {
        return Err(CliError::Invalid(format!(
            "grid must have at least 2 points, got {grid}"
        )));
    }
    if !(alpha_min.is_finite() && alpha_max.is_finite() && alpha_min < alpha_max) {
        return Err(CliError::Invalid(format!(
            "alpha range must be finite with alpha_min < alpha_max, got [{alpha_min}, {alpha_max}]"
        )));
    }
    let soft = ScgfSpec::new(Mode::Soft, beta)?;
    let hard = ScgfSpec::new(Mode::Hard, beta)?;
    let rows: Vec<String> = (0..grid)
        .map(|k| {
            let alpha = alpha_min + (alpha_max - alpha_min) * k as f64 / (grid - 1) as f64;
            format!(
                "{},{},{},{},{}",
                fmt(alpha),
                fmt(soft.scgf(alpha)),
                fmt(hard.scgf(alpha)),
                fmt(soft.scgf_derivative(alpha)),
                fmt(hard.scgf_derivative(alpha))
            )
        })
        .collect();
    write_csv(
        out,
        "alpha,scgf_soft,scgf_hard,derivative_soft,derivative_hard",
        rows,
    )?;

    let soft_rates = entropy_rates(&soft);
    let hard_rates = entropy_rates(&hard);
    write_json(
        &sidecar_path(out)?,
        &ScgfSummary {
            beta,
            h_min: soft_rates.h_min,
            h1_soft: soft_rates.h1,
            h1_hard: hard_rates.h1,
            h_half_soft: soft_rates.h_half,
            h_half_hard: hard_rates.h_half,
        },
    )
}

#[derive(Serialize)]
struct RateSummary {
    beta: f64,
    h_min: f64,
    h1_soft: f64,
    h1_hard: f64,
}

fn rate(beta: f64, grid: usize, out: &Path) -> Result<(), CliError> {
    if grid == 0 {
        return Err(CliError::Invalid("grid must have at least 1 point".into()));
    }
    let soft = ScgfSpec::new(Mode::Soft, beta)?;
    let hard = ScgfSpec::new(Mode::Hard, beta)?;
    let rows = (1..=grid)
        .map(|k| {
            let x = std::f64::consts::LN_2 * k as f64 / (grid + 1) as f64;
            let s = rate_function(&soft, x)?;
            let h = rate_function(&hard, x)?;
            Ok(format!(
                "{},{},{},{},{},{}",
                fmt(x),
                fmt(x / std::f64::consts::LN_2),
                fmt(s.value),
                fmt(h.value),
                fmt(s.alpha_star),
                fmt(h.alpha_star)
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    write_csv(
        out,
        "x_nats,x_bits,rate_soft,rate_hard,alpha_star_soft,alpha_star_hard",
        rows,
    )?;

    let soft_rates = entropy_rates(&soft);
    let hard_rates = entropy_rates(&hard);
    write_json(
        &sidecar_path(out)?,
        &RateSummary {
            beta,
            h_min: soft_rates.h_min,
            h1_soft: soft_rates.h1,
            h1_hard: hard_rates.h1,
        },
    )
}

#[derive(Serialize)]
#[allow(non_snake_case)]
struct ExponentSummary {
    C_hard: f64,
    C_soft: f64,
    Rcr_hard: f64,
    Rcr_soft: f64,
    H_half_hard: f64,
    H_half_soft: f64,
}

fn exponents(beta: f64, grid: usize, out: &Path) -> Result<(), CliError> {
    if grid == 0 {
        return Err(CliError::Invalid("grid must have at least 1 point".into()));
    }
    let soft = exponent_curve(&ScgfSpec::new(Mode::Soft, beta)?, grid)?;
    let hard = exponent_curve(&ScgfSpec::new(Mode::Hard, beta)?, grid)?;
    let rows: Vec<String> = (0..grid)
        .map(|k| {
            format!(
                "{},{},{},{},{}",
                fmt(soft.rates[k]),
                fmt(hard.error_exponent[k]),
                fmt(soft.error_exponent[k]),
                fmt(hard.success_exponent[k]),
                fmt(soft.success_exponent[k])
            )
        })
        .collect();
    write_csv(out, "R,eps_hard,eps_soft,s_hard,s_soft", rows)?;
    write_json(
        &sidecar_path(out)?,
        &ExponentSummary {
            C_hard: hard.capacity,
            C_soft: soft.capacity,
            Rcr_hard: hard.critical_rate,
            Rcr_soft: soft.critical_rate,
            H_half_hard: hard.h_half_bits,
            H_half_soft: soft.h_half_bits,
        },
    )?;
    log::info!(
        "exponents: beta={beta}, C_hard={:.4}, C_soft={:.4}",
        hard.capacity,
        soft.capacity
    );
    Ok(())
}

#[derive(Serialize)]
struct MatchSummary {
    mode: Mode,
    beta: f64,
    p: f64,
    h_half_bits: f64,
    capacity_lrc: f64,
    capacity_bsc: f64,
    critical_rate_lrc: f64,
    critical_rate_bsc: f64,
}

fn match_bsc(beta: f64, mode: Mode, grid: usize, out: &Path) -> Result<(), CliError> {
    if grid == 0 {
        return Err(CliError::Invalid("grid must have at least 1 point".into()));
    }
    let spec = ScgfSpec::new(mode, beta)?;
    let p = match_beta_to_bsc(mode, beta)?;
    let channel = BscChannel::new(p)?;
    let lrc_curve = exponent_curve(&spec, grid)?;
    let bsc_profile = channel.exponent_profile();
    let rows = (0..grid)
        .map(|k| {
            let r = lrc_curve.rates[k];
            Ok(format!(
                "{},{},{}",
                fmt(r),
                fmt(lrc_curve.error_exponent[k]),
                fmt(bsc_profile.error_exponent(r)?)
            ))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    write_csv(out, "R,eps_lrc,eps_bsc", rows)?;
    write_json(
        &sidecar_path(out)?,
        &MatchSummary {
            mode,
            beta,
            p,
            h_half_bits: lrc_curve.h_half_bits,
            capacity_lrc: lrc_curve.capacity,
            capacity_bsc: channel.capacity_bits(),
            critical_rate_lrc: lrc_curve.critical_rate,
            critical_rate_bsc: channel.critical_rate_bits(),
        },
    )?;
    log::info!("match-bsc: beta={beta} {mode} matched to p={p:.6e}");
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn simulate(
    n: usize,
    beta: f64,
    rate: f64,
    trials: u64,
    seed: u64,
    decoder: DecoderKind,
    codebook: CodebookMode,
    max_queries: Option<u64>,
    out: &Path,
) -> Result<(), CliError> {
    if trials == 0 {
        return Err(CliError::Invalid("trials must be at least 1".into()));
    }
    let config = SimulationConfig {
        params: LrcParams::new(n, beta)?,
        rate,
        trials,
        seed,
        decoder,
        codebook,
        max_queries,
    };
    let report = monte_carlo_bler(&config)?;
    log::info!(
        "simulate: bler={:.4e} over {} trials",
        report.bler,
        report.trials
    );
    write_json(out, &report)
}

#[derive(Serialize)]
struct LlrSummary {
    family: NoiseKind,
    sigma: f64,
    samples: usize,
    seed: u64,
    fraction: f64,
    #[serde(flatten)]
    fit: LinearityReport,
}

fn llr(
    kind: NoiseKind,
    sigma: f64,
    samples: usize,
    seed: u64,
    fraction: f64,
    out: &Path,
) -> Result<(), CliError> {
    let family = NoiseFamily::new(kind, sigma)?;
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let profile = reliability_profile(samples, &family, &mut rng)?;
    let report = linearity_report(&profile, fraction)?;
    let rows: Vec<String> = profile
        .index_grid()
        .iter()
        .zip(profile.values())
        .map(|(x, v)| format!("{},{}", fmt(*x), fmt(*v)))
        .collect();
    write_csv(out, "normalized_index,sorted_reliability", rows)?;
    write_json(
        &sidecar_path(out)?,
        &LlrSummary {
            family: kind,
            sigma,
            samples,
            seed,
            fraction,
            fit: report,
        },
    )?;
    log::info!(
        "llr: r_squared={:.4} over {} points",
        report.r_squared,
        report.points
    );
    Ok(())
}
