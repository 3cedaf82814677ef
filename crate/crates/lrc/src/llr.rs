//! Log-likelihood-ratio reliability profiles for BPSK over additive noise.
//!
//! The linear reliability channel idealizes what these profiles look like
//! empirically: transmit X uniform on {-1, +1}, receive Y = X + N, map Y to
//! its LLR, and sort the magnitudes. For wide noise the sorted curve is
//! close to a line through the origin; this module generates the profiles
//! and quantifies how linear they actually are.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::numeric::softplus;

/// Scale of a unit-variance logistic density.
const LOGISTIC_STD_SCALE: f64 = 0.551_328_895_421_792_1; // sqrt(3)/pi

/// Base shape of the additive noise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NoiseKind {
    Normal,
    Logistic,
    Laplace,
}

impl NoiseKind {
    pub fn label(self) -> &'static str {
        match self {
            NoiseKind::Normal => "normal",
            NoiseKind::Logistic => "logistic",
            NoiseKind::Laplace => "laplace",
        }
    }
}

impl std::fmt::Display for NoiseKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for NoiseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "normal" => Ok(NoiseKind::Normal),
            "logistic" => Ok(NoiseKind::Logistic),
            "laplace" => Ok(NoiseKind::Laplace),
            other => Err(Error::domain(format!(
                "noise family must be normal, logistic or laplace, got {other:?}"
            ))),
        }
    }
}

/// A zero-mean noise family parameterized by its standard deviation.
///
/// `sigma` is always the standard deviation, not the family's native scale:
/// the Laplace scale is `sigma/sqrt(2)` and the logistic scale is
/// `sigma*sqrt(3)/pi`.
///
/// The Laplace family is deliberately the odd one out: its density is not
/// smooth at the origin, its LLR saturates for `|y| > 1`, and it serves as
/// the counterexample to the linear profile shape.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseFamily {
    kind: NoiseKind,
    sigma: f64,
}

impl NoiseFamily {
    pub fn new(kind: NoiseKind, sigma: f64) -> Result<Self> {
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::domain(format!(
                "sigma must be positive and finite, got {sigma}"
            )));
        }
        Ok(NoiseFamily { kind, sigma })
    }

    pub fn normal(sigma: f64) -> Result<Self> {
        NoiseFamily::new(NoiseKind::Normal, sigma)
    }

    pub fn logistic(sigma: f64) -> Result<Self> {
        NoiseFamily::new(NoiseKind::Logistic, sigma)
    }

    pub fn laplace(sigma: f64) -> Result<Self> {
        NoiseFamily::new(NoiseKind::Laplace, sigma)
    }

    pub fn kind(&self) -> NoiseKind {
        self.kind
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Log of the unit-variance base density at `u`.
    fn log_std_density(&self, u: f64) -> f64 {
        match self.kind {
            NoiseKind::Normal => -0.5 * u * u - 0.5 * (2.0 * std::f64::consts::PI).ln(),
            NoiseKind::Logistic => {
                let a = u.abs() / LOGISTIC_STD_SCALE;
                -a - LOGISTIC_STD_SCALE.ln() - 2.0 * softplus(-a)
            }
            NoiseKind::Laplace => -SQRT_2 * u.abs() - SQRT_2.ln(),
        }
    }

    /// Draws one noise value with standard deviation `sigma`.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self.kind {
            NoiseKind::Normal => {
                let z: f64 = rng.sample(StandardNormal);
                self.sigma * z
            }
            NoiseKind::Logistic => {
                let u = positive_unit(rng);
                self.sigma * LOGISTIC_STD_SCALE * (u / (1.0 - u)).ln()
            }
            NoiseKind::Laplace => {
                let b = self.sigma / SQRT_2;
                let u = positive_unit(rng);
                if u < 0.5 {
                    b * (2.0 * u).ln()
                } else {
                    -b * (2.0 * (1.0 - u)).ln()
                }
            }
        }
    }
}

/// Uniform draw in the open interval (0, 1).
fn positive_unit<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    loop {
        let u: f64 = rng.random();
        if u > 0.0 && u < 1.0 {
            return u;
        }
    }
}

/// LLR of the received value `y` for X uniform on {-1, +1}:
/// `phi(y) = ln f0((y-1)/sigma) - ln f0((y+1)/sigma)`, in the closed form of
/// each family.
pub fn llr_map(y: f64, family: &NoiseFamily) -> f64 {
    let sigma = family.sigma();
    match family.kind() {
        NoiseKind::Normal => 2.0 * y / (sigma * sigma),
        NoiseKind::Logistic => {
            let s = LOGISTIC_STD_SCALE;
            let a = (y - 1.0) / (sigma * s);
            let b = (y + 1.0) / (sigma * s);
            (b - a) + 2.0 * (softplus(-b) - softplus(-a))
        }
        // Piecewise linear: slope 2*sqrt(2)/sigma inside |y| <= 1, flat
        // outside, because the Laplace log-density is -sqrt(2)|u|.
        NoiseKind::Laplace => 2.0 * SQRT_2 * y.clamp(-1.0, 1.0) / sigma,
    }
}

/// Same LLR evaluated straight from the log-density difference; the oracle
/// for the closed forms in [`llr_map`].
pub fn llr_map_from_density(y: f64, family: &NoiseFamily) -> f64 {
    let sigma = family.sigma();
    family.log_std_density((y - 1.0) / sigma) - family.log_std_density((y + 1.0) / sigma)
}

/// Sorted reliability magnitudes of an i.i.d. channel sample.
#[derive(Clone, Debug)]
pub struct ReliabilityProfile {
    values: Vec<f64>,
}

impl ReliabilityProfile {
    /// Wraps precomputed reliabilities; they must already be sorted
    /// ascending and nonnegative.
    pub fn from_sorted_values(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::domain(
                "reliabilities must be finite and nonnegative",
            ));
        }
        if values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::domain("reliabilities must be sorted ascending"));
        }
        Ok(ReliabilityProfile { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Normalized index grid i/n for i = 1..=n, the x-axis the profile is
    /// plotted and fitted against.
    pub fn index_grid(&self) -> Vec<f64> {
        let n = self.values.len() as f64;
        (1..=self.values.len()).map(|i| i as f64 / n).collect()
    }
}

/// Simulates `n` channel uses Y = X + N with X uniform on {-1, +1} and
/// returns the sorted |LLR| profile.
pub fn reliability_profile<R: Rng + ?Sized>(
    n: usize,
    family: &NoiseFamily,
    rng: &mut R,
) -> Result<ReliabilityProfile> {
    if n < 2 {
        return Err(Error::domain(format!(
            "a profile needs at least 2 samples, got {n}"
        )));
    }
    let mut values: Vec<f64> = (0..n)
        .map(|_| {
            let x = if rng.random::<bool>() { 1.0 } else { -1.0 };
            let y = x + family.sample(rng);
            llr_map(y, family).abs()
        })
        .collect();
    values.sort_unstable_by(|a, b| a.partial_cmp(b).expect("LLR values are never NaN"));
    Ok(ReliabilityProfile { values })
}

/// Ordinary-least-squares diagnostics of a profile's initial segment.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct LinearityReport {
    /// Fitted slope against the normalized index i/n.
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub max_abs_residual: f64,
    /// Number of leading profile entries the fit used.
    pub points: usize,
}

/// Fits a line to the first `initial_fraction` of the sorted profile
/// against the normalized index grid.
pub fn linearity_report(
    profile: &ReliabilityProfile,
    initial_fraction: f64,
) -> Result<LinearityReport> {
    if !(initial_fraction > 0.0 && initial_fraction <= 1.0) {
        return Err(Error::domain(format!(
            "initial fraction must lie in (0, 1], got {initial_fraction}"
        )));
    }
    let n = profile.len();
    let m = ((initial_fraction * n as f64).ceil() as usize).min(n);
    if m < 2 {
        return Err(Error::domain(format!(
            "linear fit needs at least 2 points, selection was {m}"
        )));
    }
    let xs: Vec<f64> = (1..=m).map(|i| i as f64 / n as f64).collect();
    let ys = &profile.values()[..m];
    let mf = m as f64;
    let x_mean = xs.iter().sum::<f64>() / mf;
    let y_mean = ys.iter().sum::<f64>() / mf;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxx += (x - x_mean) * (x - x_mean);
        sxy += (x - x_mean) * (y - y_mean);
        syy += (y - y_mean) * (y - y_mean);
    }
    let slope = sxy / sxx;
    let intercept = y_mean - slope * x_mean;
    let mut ss_res = 0.0;
    let mut max_abs_residual = 0.0f64;
    for (&x, &y) in xs.iter().zip(ys) {
        let r = y - (slope * x + intercept);
        ss_res += r * r;
        max_abs_residual = max_abs_residual.max(r.abs());
    }
    let r_squared = if syy > 0.0 {
        1.0 - ss_res / syy
    } else if ss_res > 0.0 {
        0.0
    } else {
        1.0
    };
    Ok(LinearityReport {
        slope,
        intercept,
        r_squared,
        max_abs_residual,
        points: m,
    })
}

/// Density of the LLR L = 2Y/sigma^2 under normal noise: an equal mixture
/// of two Gaussians at +-2/sigma^2 with standard deviation 2/sigma.
pub fn normal_llr_density(sigma: f64, l: f64) -> f64 {
    let mu = 2.0 / (sigma * sigma);
    let s = 2.0 / sigma;
    let phi = |z: f64| (-0.5 * z * z).exp() / (2.0 * std::f64::consts::PI).sqrt();
    0.5 * (phi((l - mu) / s) + phi((l + mu) / s)) / s
}

/// Central-difference estimate of `f_L''(0) / sigma^3` for normal noise,
/// probing how the curvature of the LLR density at the origin scales.
pub fn fl_curvature_probe(family: &NoiseFamily) -> Result<f64> {
    if family.kind() != NoiseKind::Normal {
        return Err(Error::domain(format!(
            "curvature probe is defined for the normal family only, got {}",
            family.kind()
        )));
    }
    let sigma = family.sigma();
    let h = 2.0 / sigma / 1000.0;
    let f = |l: f64| normal_llr_density(sigma, l);
    let second = (f(h) - 2.0 * f(0.0) + f(-h)) / (h * h);
    Ok(second / (sigma * sigma * sigma))
}

/// Two-sample Kolmogorov-Smirnov statistic between profiles.
pub fn ks_statistic(a: &ReliabilityProfile, b: &ReliabilityProfile) -> f64 {
    let av = a.values();
    let bv = b.values();
    let (mut i, mut j) = (0usize, 0usize);
    let mut d = 0.0f64;
    while i < av.len() && j < bv.len() {
        // Advance past the whole block of ties at the current value in both
        // samples before comparing the empirical CDFs; saturated profiles
        // (Laplace) contain long runs of identical values.
        let v = av[i].min(bv[j]);
        while i < av.len() && av[i] <= v {
            i += 1;
        }
        while j < bv.len() && bv[j] <= v {
            j += 1;
        }
        let fa = i as f64 / av.len() as f64;
        let fb = j as f64 / bv.len() as f64;
        d = d.max((fa - fb).abs());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn rng(seed: u64) -> ChaCha12Rng {
        ChaCha12Rng::seed_from_u64(seed)
    }

    fn families(sigma: f64) -> [NoiseFamily; 3] {
        [
            NoiseFamily::normal(sigma).unwrap(),
            NoiseFamily::logistic(sigma).unwrap(),
            NoiseFamily::laplace(sigma).unwrap(),
        ]
    }

    #[test]
    fn llr_closed_forms_match_density_difference() {
        for family in families(4.0) {
            for k in -40..=40 {
                let y = k as f64 / 10.0;
                let closed = llr_map(y, &family);
                let generic = llr_map_from_density(y, &family);
                assert!(
                    (closed - generic).abs() < 1e-12,
                    "{} y={y}: {closed} vs {generic}",
                    family.kind()
                );
            }
        }
    }

    #[test]
    fn llr_is_odd_and_zero_at_origin() {
        for family in families(2.5) {
            assert_eq!(llr_map(0.0, &family), 0.0);
            for k in 1..=30 {
                let y = k as f64 / 7.0;
                let pos = llr_map(y, &family);
                let neg = llr_map(-y, &family);
                assert!((pos + neg).abs() < 1e-13, "{} y={y}", family.kind());
            }
        }
    }

    #[test]
    fn llr_monotonicity_by_family() {
        let grid: Vec<f64> = (-50..=50).map(|k| k as f64 / 10.0).collect();
        for family in [
            NoiseFamily::normal(3.0).unwrap(),
            NoiseFamily::logistic(3.0).unwrap(),
        ] {
            for w in grid.windows(2) {
                assert!(
                    llr_map(w[1], &family) > llr_map(w[0], &family),
                    "{} not strictly increasing",
                    family.kind()
                );
            }
        }
        let laplace = NoiseFamily::laplace(3.0).unwrap();
        for w in grid.windows(2) {
            assert!(llr_map(w[1], &laplace) >= llr_map(w[0], &laplace));
        }
        // Saturated tails are exactly flat.
        assert_eq!(llr_map(1.5, &laplace), llr_map(2.5, &laplace));
        assert_eq!(llr_map(-1.5, &laplace), llr_map(-80.0, &laplace));
        assert_eq!(llr_map(2.0, &laplace), 2.0 * SQRT_2 / 3.0);
    }

    #[test]
    fn normal_llr_is_two_y_over_sigma_squared() {
        let family = NoiseFamily::normal(4.0).unwrap();
        for k in -25..=25 {
            let y = k as f64 / 5.0;
            assert!((llr_map(y, &family) - 2.0 * y / 16.0).abs() < 1e-15);
        }
    }

    #[test]
    fn sample_moments_match_sigma() {
        let mut r = rng(11);
        for family in families(2.0) {
            let n = 200_000;
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            for _ in 0..n {
                let v = family.sample(&mut r);
                sum += v;
                sum_sq += v * v;
            }
            let mean = sum / n as f64;
            let var = sum_sq / n as f64 - mean * mean;
            assert!(mean.abs() < 0.03, "{}: mean {mean}", family.kind());
            assert!(
                (var - 4.0).abs() < 0.15,
                "{}: variance {var}",
                family.kind()
            );
        }
    }

    #[test]
    fn profile_is_sorted_nonnegative_and_validated() {
        let family = NoiseFamily::normal(4.0).unwrap();
        let profile = reliability_profile(4096, &family, &mut rng(3)).unwrap();
        assert_eq!(profile.len(), 4096);
        assert!(profile.values().iter().all(|&v| v >= 0.0));
        assert!(profile.values().windows(2).all(|w| w[0] <= w[1]));
        let grid = profile.index_grid();
        assert_eq!(grid.len(), 4096);
        assert!((grid[4095] - 1.0).abs() < 1e-15);

        assert!(reliability_profile(1, &family, &mut rng(3)).is_err());
        assert!(ReliabilityProfile::from_sorted_values(vec![0.2, 0.1]).is_err());
        assert!(ReliabilityProfile::from_sorted_values(vec![-0.1, 0.2]).is_err());
        assert!(ReliabilityProfile::from_sorted_values(vec![0.1, f64::NAN]).is_err());
    }

    #[test]
    fn normal_profile_is_near_linear_initially() {
        let family = NoiseFamily::normal(4.0).unwrap();
        let profile = reliability_profile(1 << 16, &family, &mut rng(42)).unwrap();
        let report = linearity_report(&profile, 0.5).unwrap();
        assert!(report.r_squared >= 0.99, "r^2 = {}", report.r_squared);
        assert!(report.slope > 0.0);
        assert_eq!(report.points, 1 << 15);
    }

    /// Exact quantiles of |phi(Y)| under normal noise, bypassing sampling
    /// noise: |Y| has CDF Phi((t-1)/sigma) + Phi((t+1)/sigma) - 1.
    fn normal_population_profile(sigma: f64, n: usize) -> ReliabilityProfile {
        let phi = |u: f64| (-0.5 * u * u).exp() / (2.0 * std::f64::consts::PI).sqrt();
        let std_cdf = |x: f64| {
            if x <= -12.0 {
                0.0
            } else if x >= 12.0 {
                1.0
            } else {
                0.5 + crate::numeric::integrate(&phi, 0.0, x, 1e-12)
            }
        };
        let abs_cdf = |t: f64| std_cdf((t - 1.0) / sigma) + std_cdf((t + 1.0) / sigma) - 1.0;
        let values = (1..=n)
            .map(|i| {
                let p = (i as f64 - 0.5) / n as f64;
                let t = crate::numeric::bisect(&|t| abs_cdf(t) - p, 0.0, 1.0 + 12.0 * sigma, 1e-10);
                2.0 * t / (sigma * sigma)
            })
            .collect();
        ReliabilityProfile::from_sorted_values(values).unwrap()
    }

    #[test]
    fn normal_linear_fit_improves_absolutely_with_sigma() {
        // On common absolute axes the sorted curve hugs its line better as
        // sigma grows: residuals scale down roughly like 1/sigma while the
        // fixed-fraction r^2 stays pinned near its wide-noise limit (the
        // population r^2 is flat to within 1e-3 over this sweep, so the
        // residual scale is the discriminating statistic).
        let mut last_residual = f64::INFINITY;
        let mut r_squared = Vec::new();
        for sigma in [2.0, 4.0, 8.0] {
            let profile = normal_population_profile(sigma, 512);
            let report = linearity_report(&profile, 0.5).unwrap();
            assert!(
                report.r_squared >= 0.99,
                "sigma={sigma}: {}",
                report.r_squared
            );
            assert!(
                report.max_abs_residual < 0.6 * last_residual,
                "sigma={sigma}: residual {} vs previous {last_residual}",
                report.max_abs_residual
            );
            last_residual = report.max_abs_residual;
            r_squared.push(report.r_squared);
        }
        let spread = r_squared.iter().cloned().fold(0.0f64, f64::max)
            - r_squared.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(spread < 1e-3, "r^2 spread {spread}");
    }

    #[test]
    fn laplace_fit_quality_degrades_with_sigma() {
        let mut last = 1.0;
        for sigma in [2.0, 4.0, 8.0] {
            let family = NoiseFamily::laplace(sigma).unwrap();
            let profile = reliability_profile(1 << 14, &family, &mut rng(9)).unwrap();
            let report = linearity_report(&profile, 0.9).unwrap();
            assert!(
                report.r_squared < last,
                "sigma={sigma}: r^2 {} >= {last}",
                report.r_squared
            );
            last = report.r_squared;
        }
    }

    #[test]
    fn laplace_profile_has_exactly_flat_tail() {
        let family = NoiseFamily::laplace(4.0).unwrap();
        let profile = reliability_profile(1 << 14, &family, &mut rng(5)).unwrap();
        let cap = 2.0 * SQRT_2 / 4.0;
        let saturated = profile.values().iter().filter(|&&v| v == cap).count();
        // A solid fraction of draws lands beyond |y| = 1 and saturates.
        assert!(
            saturated > profile.len() / 10,
            "only {saturated} saturated values"
        );
        assert!(profile.values().iter().all(|&v| v <= cap));
        let tail = &profile.values()[profile.len() - saturated..];
        assert!(tail.iter().all(|&v| v == cap));
    }

    #[test]
    fn synthetic_exact_line_fits_perfectly() {
        let n = 100;
        let values: Vec<f64> = (1..=n).map(|i| 0.5 + 2.0 * i as f64 / n as f64).collect();
        let profile = ReliabilityProfile::from_sorted_values(values).unwrap();
        let report = linearity_report(&profile, 1.0).unwrap();
        assert!((report.slope - 2.0).abs() < 1e-12);
        assert!((report.intercept - 0.5).abs() < 1e-12);
        assert!((report.r_squared - 1.0).abs() < 1e-12);
        assert!(report.max_abs_residual < 1e-12);
    }

    #[test]
    fn linearity_report_validation() {
        let profile = ReliabilityProfile::from_sorted_values(vec![0.1, 0.2, 0.3]).unwrap();
        assert!(linearity_report(&profile, 0.0).is_err());
        assert!(linearity_report(&profile, 1.5).is_err());
        assert!(linearity_report(&profile, 0.1).is_err());
        assert!(linearity_report(&profile, 0.67).is_ok());
    }

    #[test]
    fn profiles_from_different_seeds_agree_in_distribution() {
        for family in families(4.0) {
            let n = 1 << 14;
            let a = reliability_profile(n, &family, &mut rng(100)).unwrap();
            let b = reliability_profile(n, &family, &mut rng(200)).unwrap();
            let d = ks_statistic(&a, &b);
            // Two-sample 1% critical value: 1.628*sqrt(2/n).
            let critical = 1.628 * (2.0 / n as f64).sqrt();
            assert!(d < critical, "{}: D={d} critical={critical}", family.kind());
        }
    }

    #[test]
    fn profiles_do_not_depend_on_transmitted_sign() {
        let family = NoiseFamily::logistic(3.0).unwrap();
        let n = 1 << 14;
        let mut r = rng(77);
        let collect = |x: f64, r: &mut ChaCha12Rng| {
            let mut values: Vec<f64> = (0..n)
                .map(|_| llr_map(x + family.sample(r), &family).abs())
                .collect();
            values.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
            ReliabilityProfile::from_sorted_values(values).unwrap()
        };
        let plus = collect(1.0, &mut r);
        let minus = collect(-1.0, &mut r);
        let d = ks_statistic(&plus, &minus);
        let critical = 1.628 * (2.0 / n as f64).sqrt();
        assert!(d < critical, "D={d} critical={critical}");
    }

    #[test]
    fn curvature_probe_matches_mixture_closed_form() {
        // f_L''(0) = (sigma^3/8) (1/sigma^2 - 1) phi(1/sigma) for the
        // two-component mixture, so the probe has an exact target.
        for sigma in [4.0f64, 8.0, 16.0] {
            let family = NoiseFamily::normal(sigma).unwrap();
            let probe = fl_curvature_probe(&family).unwrap();
            let z = 1.0 / sigma;
            let phi = (-0.5 * z * z).exp() / (2.0 * std::f64::consts::PI).sqrt();
            let exact = (z * z - 1.0) * phi / 8.0;
            assert!(
                (probe - exact).abs() < 1e-4 * exact.abs(),
                "sigma={sigma}: {probe} vs {exact}"
            );
        }
    }

    #[test]
    fn curvature_probe_scaling_and_symmetry() {
        let mut ratios = Vec::new();
        for sigma in [4.0f64, 8.0, 16.0] {
            let family = NoiseFamily::normal(sigma).unwrap();
            ratios.push(fl_curvature_probe(&family).unwrap().abs());

            let f = |l: f64| normal_llr_density(sigma, l);
            assert!(f(0.0) > 0.0);
            let h = 1e-4 / sigma;
            let first = (f(h) - f(-h)) / (2.0 * h);
            assert!(first.abs() < 1e-8, "sigma={sigma}: f'(0) = {first}");
        }
        let max = ratios.iter().cloned().fold(0.0f64, f64::max);
        let min = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(max / min < 2.0, "ratio spread {min}..{max}");

        assert!(fl_curvature_probe(&NoiseFamily::laplace(4.0).unwrap()).is_err());
        assert!(fl_curvature_probe(&NoiseFamily::logistic(4.0).unwrap()).is_err());
    }

    #[test]
    fn family_construction_validation() {
        assert!(NoiseFamily::normal(0.0).is_err());
        assert!(NoiseFamily::logistic(-1.0).is_err());
        assert!(NoiseFamily::laplace(f64::NAN).is_err());
        assert_eq!("normal".parse::<NoiseKind>().unwrap(), NoiseKind::Normal);
        assert_eq!("laplace".parse::<NoiseKind>().unwrap(), NoiseKind::Laplace);
        assert!("cauchy".parse::<NoiseKind>().is_err());
        assert_eq!(NoiseKind::Logistic.to_string(), "logistic");
    }
}
