//! Asymptotics of optimal guessing over the linear reliability channel:
//! scaled cumulant generating functions (sCGFs) of the soft- and
//! hard-decision guesswork processes, their Legendre-Fenchel transforms,
//! Renyi entropy rates, channel-coding exponents, and a matched-BSC
//! reference model.
//!
//! Quantities are per channel use and in nats unless a name says `bits`;
//! base-2 variants divide by ln 2.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use std::f64::consts::{LN_2, PI};

use crate::decode::{guess_rank, GuessOrder, RankTables};
use crate::error::{Error, Result};
use crate::model::{soft_noise_log_pmf, BitSequence, LrcParams, ReliabilityPermutation};
use crate::numeric::{
    binary_entropy, bisect, golden_section_max, integrate, li2_neg_exp, li2_real, log_sum_exp,
    softplus,
};

/// Decision mode of the decoder-side observer: `Soft` knows the reliability
/// permutation of each channel use, `Hard` sees only the bit values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Soft,
    Hard,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Soft => "soft",
            Mode::Hard => "hard",
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "soft" => Ok(Mode::Soft),
            "hard" => Ok(Mode::Hard),
            other => Err(Error::domain(format!(
                "mode must be \"soft\" or \"hard\", got {other:?}"
            ))),
        }
    }
}

/// Parameters selecting one guesswork sCGF: the decision mode and the
/// reliability slope `beta > 0`.
#[derive(Clone, Copy, Debug)]
pub struct ScgfSpec {
    mode: Mode,
    beta: f64,
    quadrature_j: bool,
}

impl ScgfSpec {
    pub fn new(mode: Mode, beta: f64) -> Result<Self> {
        if !beta.is_finite() || beta <= 0.0 {
            return Err(Error::domain(format!(
                "beta must be positive and finite, got {beta}"
            )));
        }
        Ok(ScgfSpec {
            mode,
            beta,
            quadrature_j: false,
        })
    }

    /// Evaluates the J integrals inside `scgf` by adaptive quadrature
    /// instead of the dilogarithm closed form. Roughly 100x slower; kept as
    /// a cross-check switch.
    pub fn with_quadrature_j(mut self) -> Self {
        self.quadrature_j = true;
        self
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    fn j(&self, r: f64, gamma: f64) -> f64 {
        if self.quadrature_j {
            j_quad(r, gamma)
        } else {
            j_closed(r, gamma)
        }
    }
}

/// Dilogarithm Li2(x) for real `x <= 1` (where it is real-valued).
pub fn dilog(x: f64) -> Result<f64> {
    if x.is_nan() || x > 1.0 {
        return Err(Error::domain(format!(
            "dilog is real-valued only for x <= 1, got {x}"
        )));
    }
    Ok(li2_real(x))
}

/// Real part of the analytically continued dilogarithm, defined for every
/// real `x`. Matches `dilog` on `x <= 1`.
pub fn dilog_real_part(x: f64) -> f64 {
    li2_real(x)
}

/// `J(r; gamma) = \int_0^1 ln(1 + r e^{-gamma x}) dx`, via the closed form
/// `[Li2(-r e^{-gamma}) - Li2(-r)] / gamma`.
pub fn j_integral(r: f64, gamma: f64) -> Result<f64> {
    check_j_args(r, gamma)?;
    Ok(j_closed(r, gamma))
}

/// `J(r; gamma)` by adaptive quadrature; the oracle for the closed form.
pub fn j_integral_quadrature(r: f64, gamma: f64) -> Result<f64> {
    check_j_args(r, gamma)?;
    Ok(j_quad(r, gamma))
}

fn check_j_args(r: f64, gamma: f64) -> Result<()> {
    if r < 0.0 || !r.is_finite() {
        return Err(Error::domain(format!("J needs r >= 0, got {r}")));
    }
    if gamma <= 0.0 || !gamma.is_finite() {
        return Err(Error::domain(format!("J needs gamma > 0, got {gamma}")));
    }
    Ok(())
}

fn j_closed(r: f64, gamma: f64) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    if gamma < 1e-3 {
        // The closed form subtracts two nearly equal dilogarithms here; a
        // short expansion in gamma stays exact to well below 1e-13.
        let s = r / (1.0 + r);
        let g2 = s * (1.0 - s);
        let g3 = g2 * (1.0 - 2.0 * s);
        return r.ln_1p() - 0.5 * gamma * s + gamma * gamma * (g2 / 6.0 - gamma * g3 / 24.0);
    }
    (li2_real(-r * (-gamma).exp()) - li2_real(-r)) / gamma
}

fn j_quad(r: f64, gamma: f64) -> f64 {
    if r == 0.0 {
        return 0.0;
    }
    let f = |x: f64| (r * (-gamma * x).exp()).ln_1p();
    // Split where the integrand has decayed so a narrow boundary layer at
    // large gamma cannot slip between the sample points.
    let split = ((r.ln_1p() + 5.0) / gamma).min(1.0);
    integrate(&f, 0.0, split, 1e-13) + integrate(&f, split, 1.0, 1e-13)
}

/// A guesswork process described through its sCGF. `scgf` must be convex,
/// zero at the origin, and flat at `-h_min` for `alpha <= -1`; the
/// derivative is only queried above the kink.
pub trait GuessworkScgf {
    /// Lambda(alpha) in nats.
    fn scgf(&self, alpha: f64) -> f64;

    /// d Lambda / d alpha for `alpha > -1`.
    fn scgf_derivative(&self, alpha: f64) -> f64;

    /// Min-entropy rate `H_min = -Lambda(-1)` in nats.
    fn h_min(&self) -> f64 {
        -self.scgf(-1.0)
    }
}

impl GuessworkScgf for ScgfSpec {
    fn scgf(&self, alpha: f64) -> f64 {
        let baseline = self.j(1.0, self.beta);
        if alpha <= -1.0 {
            return -baseline;
        }
        match self.mode {
            Mode::Soft => (1.0 + alpha) * self.j(1.0, self.beta / (1.0 + alpha)) - baseline,
            Mode::Hard => {
                let s = hard_saddle(self.beta, alpha);
                alpha * binary_entropy(s.t) + self.j(s.r, self.beta) - s.t * s.r.ln() - baseline
            }
        }
    }

    fn scgf_derivative(&self, alpha: f64) -> f64 {
        if alpha <= -1.0 {
            return 0.0;
        }
        match self.mode {
            Mode::Soft => {
                let gamma = self.beta / (1.0 + alpha);
                2.0 * self.j(1.0, gamma) - softplus(-gamma)
            }
            // Envelope theorem: the inner maximizer contributes no first-order
            // variation, leaving d Lambda_Z / d alpha = h(t*).
            Mode::Hard => binary_entropy(hard_saddle(self.beta, alpha).t),
        }
    }
}

/// Saddle coordinates of the hard-mode inner maximization.
#[derive(Clone, Copy, Debug)]
pub struct SaddleState {
    /// Hamming-fraction maximizer in (0, 1).
    pub t: f64,
    /// `r_{t,beta}` evaluated at that `t`.
    pub r: f64,
}

/// `r_{t,beta} = (e^{beta t} - 1) / (1 - e^{beta (t-1)})` in a
/// cancellation-free arrangement.
pub fn saddle_ratio(t: f64, beta: f64) -> f64 {
    (beta * t).exp_m1() / (-((beta * (t - 1.0)).exp_m1()))
}

fn d_ln_saddle_ratio(t: f64, beta: f64) -> f64 {
    beta * (1.0 / (-((-beta * t).exp_m1())) + 1.0 / (beta * (1.0 - t)).exp_m1())
}

/// Maximizer of `f(t) = alpha h(t) + J(r_{t,beta}; beta) - t ln r_{t,beta}`
/// over `t` in (0, 1), for `alpha > -1`. Golden-section bracketing followed
/// by a guarded Newton polish of the stationarity condition
/// `alpha ln((1-t)/t) = ln r_{t,beta}`.
pub fn hard_saddle(beta: f64, alpha: f64) -> SaddleState {
    const EDGE: f64 = 1e-9;
    let value = |t: f64| {
        let r = saddle_ratio(t, beta);
        alpha * binary_entropy(t) + j_closed(r, beta) - t * r.ln()
    };
    let mut t = golden_section_max(&value, EDGE, 1.0 - EDGE, 1e-10);
    for _ in 0..3 {
        let slope = alpha * ((1.0 - t) / t).ln() - saddle_ratio(t, beta).ln();
        let curvature = -alpha / (t * (1.0 - t)) - d_ln_saddle_ratio(t, beta);
        if curvature.is_nan() || curvature >= 0.0 {
            break;
        }
        let next = t - slope / curvature;
        if !next.is_finite() || next <= 0.0 || next >= 1.0 {
            break;
        }
        t = next;
    }
    SaddleState {
        t,
        r: saddle_ratio(t, beta),
    }
}

/// Renyi entropy rates of the noise process, in nats.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EntropyRates {
    pub mode: Mode,
    pub beta: f64,
    /// Min-entropy rate, `-Lambda(-1)`.
    pub h_min: f64,
    /// Shannon rate, `Lambda'(0)`.
    pub h1: f64,
    /// Order-1/2 rate, `Lambda(1)`.
    pub h_half: f64,
}

impl EntropyRates {
    pub fn h_min_bits(&self) -> f64 {
        self.h_min / LN_2
    }

    pub fn h1_bits(&self) -> f64 {
        self.h1 / LN_2
    }

    pub fn h_half_bits(&self) -> f64 {
        self.h_half / LN_2
    }
}

pub fn entropy_rates(spec: &ScgfSpec) -> EntropyRates {
    let h_min = spec.j(1.0, spec.beta());
    let h_half = spec.scgf(1.0);
    let h1 = match spec.mode() {
        Mode::Soft => spec.scgf_derivative(0.0),
        Mode::Hard => {
            // No closed derivative at 0 is exposed for the hard mode, so use
            // Richardson-extrapolated central differences (steps 1e-4, 5e-5).
            let d = |h: f64| (spec.scgf(h) - spec.scgf(-h)) / (2.0 * h);
            (4.0 * d(5e-5) - d(1e-4)) / 3.0
        }
    };
    EntropyRates {
        mode: spec.mode(),
        beta: spec.beta(),
        h_min,
        h1,
        h_half,
    }
}

/// Clamp applied to rate-function values on the divergent edge, in nats.
pub const RATE_FUNCTION_CAP: f64 = 1e6;

const ALPHA_SEARCH_CAP: f64 = 1e9;

/// One evaluation of a guesswork rate function `I(x) = sup_a {x a - Lambda(a)}`.
#[derive(Clone, Copy, Debug)]
pub struct RateValue {
    /// Queried guesswork exponent, nats.
    pub x: f64,
    /// `I(x)` in nats, clamped at [`RATE_FUNCTION_CAP`].
    pub value: f64,
    /// Maximizing alpha (-1 on the linear segment, the search cap when
    /// diverged).
    pub alpha_star: f64,
    /// Set when the conjugate supremum ran past the alpha search cap, which
    /// happens exactly on the `x = ln 2` edge.
    pub diverged: bool,
}

/// Legendre-Fenchel transform of the model's sCGF at `x` in [0, ln 2],
/// solved through the stationarity condition `Lambda'(alpha) = x`.
pub fn rate_function<M: GuessworkScgf + ?Sized>(model: &M, x: f64) -> Result<RateValue> {
    if !x.is_finite() || !(0.0..=LN_2).contains(&x) {
        return Err(Error::domain(format!(
            "rate function argument must lie in [0, ln 2], got {x}"
        )));
    }
    let h_min = model.h_min();
    if x == 0.0 {
        return Ok(RateValue {
            x,
            value: h_min,
            alpha_star: -1.0,
            diverged: false,
        });
    }
    let capped = |x: f64| -> RateValue {
        let value = (x * ALPHA_SEARCH_CAP - model.scgf(ALPHA_SEARCH_CAP)).min(RATE_FUNCTION_CAP);
        RateValue {
            x,
            value,
            alpha_star: ALPHA_SEARCH_CAP,
            diverged: true,
        }
    };
    if x >= LN_2 {
        return Ok(capped(x));
    }
    let lo = -1.0 + 1e-10;
    if model.scgf_derivative(lo) >= x {
        // The supremum is pinned at the alpha = -1 kink; the rate function is
        // linear with slope -1 there.
        return Ok(RateValue {
            x,
            value: h_min - x,
            alpha_star: -1.0,
            diverged: false,
        });
    }
    let mut hi = 1.0;
    while model.scgf_derivative(hi) < x {
        hi *= 2.0;
        if hi > ALPHA_SEARCH_CAP {
            return Ok(capped(x));
        }
    }
    let alpha = bisect(&|a: f64| model.scgf_derivative(a) - x, lo, hi, 1e-13);
    let value = (x * alpha - model.scgf(alpha)).min(RATE_FUNCTION_CAP);
    Ok(RateValue {
        x,
        value,
        alpha_star: alpha,
        diverged: false,
    })
}

/// Soft-mode slope at `alpha = 1` in nats, in closed form:
/// `pi^2/(3 beta) + (4/beta) Li2(-e^{-beta/2}) - ln(1 + e^{-beta/2})`.
pub fn soft_critical_slope(beta: f64) -> f64 {
    PI * PI / (3.0 * beta) + 4.0 * li2_neg_exp(-beta / 2.0) / beta - softplus(-beta / 2.0)
}

/// The Hamming fraction `t(beta)` in (0, 1/2) at which the hard-mode slope
/// at `alpha = 1` sits: the unique root of
/// `e^{beta (1-t)} = 1 + (e^beta - 1) t`, solved in the equivalent stable
/// form `-beta t = ln(t + (1-t) e^{-beta})`.
pub fn hard_critical_t(beta: f64) -> f64 {
    let em = (-beta).exp();
    let f = |t: f64| -beta * t - (t + (1.0 - t) * em).ln();
    let mut t = bisect(&f, 1e-16, 0.5, 1e-15);
    for _ in 0..3 {
        let denom = t + (1.0 - t) * em;
        let slope = -beta - (1.0 - em) / denom;
        let next = t - f(t) / slope;
        if next > 0.0 && next < 0.5 {
            t = next;
        } else {
            break;
        }
    }
    t
}

/// Critical rate `R_cr = 1 - Lambda'(1)/ln 2`, in bits.
pub fn critical_rate(spec: &ScgfSpec) -> f64 {
    let slope = match spec.mode() {
        Mode::Soft => soft_critical_slope(spec.beta()),
        Mode::Hard => binary_entropy(hard_critical_t(spec.beta())),
    };
    1.0 - slope / LN_2
}

/// Channel capacity `1 - H_1/ln 2`, in bits.
pub fn capacity(spec: &ScgfSpec) -> f64 {
    1.0 - entropy_rates(spec).h1 / LN_2
}

/// Error- and success-exponent evaluator for one guesswork model, in bits.
#[derive(Clone, Copy, Debug)]
pub struct ExponentProfile<M> {
    model: M,
    pub capacity: f64,
    pub critical_rate: f64,
    pub h_half_bits: f64,
}

impl<M: GuessworkScgf + Sync> ExponentProfile<M> {
    /// Decay rate of the block-error probability of ML decoding a uniformly
    /// random rate-`R` codebook, for `R` in (0, 1).
    pub fn error_exponent(&self, rate: f64) -> Result<f64> {
        check_rate(rate)?;
        if rate >= self.capacity {
            return Ok(0.0);
        }
        if rate < self.critical_rate {
            return Ok(1.0 - rate - self.h_half_bits);
        }
        Ok(rate_function(&self.model, (1.0 - rate) * LN_2)?.value / LN_2)
    }

    /// Decay rate of the probability of decoding success above capacity.
    pub fn success_exponent(&self, rate: f64) -> Result<f64> {
        check_rate(rate)?;
        if rate <= self.capacity {
            return Ok(0.0);
        }
        Ok(rate_function(&self.model, (1.0 - rate) * LN_2)?.value / LN_2)
    }

    /// Both exponents on a uniform open grid of `grid_size >= 2` rates.
    pub fn curve(&self, grid_size: usize) -> Result<ExponentCurve> {
        if grid_size < 2 {
            return Err(Error::domain(format!(
                "exponent grid needs at least 2 points, got {grid_size}"
            )));
        }
        let denom = (grid_size + 1) as f64;
        let rates: Vec<f64> = (1..=grid_size).map(|k| k as f64 / denom).collect();
        let points: Vec<(f64, f64)> = rates
            .par_iter()
            .map(|&r| Ok((self.error_exponent(r)?, self.success_exponent(r)?)))
            .collect::<Result<_>>()?;
        let (error_exponent, success_exponent) = points.into_iter().unzip();
        Ok(ExponentCurve {
            rates,
            error_exponent,
            success_exponent,
            capacity: self.capacity,
            critical_rate: self.critical_rate,
            h_half_bits: self.h_half_bits,
        })
    }
}

fn check_rate(rate: f64) -> Result<()> {
    if !(rate > 0.0 && rate < 1.0) {
        return Err(Error::domain(format!(
            "code rate must lie in (0, 1), got {rate}"
        )));
    }
    Ok(())
}

/// Exponent evaluator for an LRC mode at slope `beta`.
pub fn exponent_profile(spec: &ScgfSpec) -> ExponentProfile<ScgfSpec> {
    let rates = entropy_rates(spec);
    ExponentProfile {
        model: *spec,
        capacity: 1.0 - rates.h1 / LN_2,
        critical_rate: critical_rate(spec),
        h_half_bits: rates.h_half / LN_2,
    }
}

/// Error/success exponents of `spec` sampled on a `grid_size`-point grid.
pub fn exponent_curve(spec: &ScgfSpec, grid_size: usize) -> Result<ExponentCurve> {
    exponent_profile(spec).curve(grid_size)
}

/// Sampled exponent curves plus the transition points, all in bits.
#[derive(Clone, Debug)]
pub struct ExponentCurve {
    pub rates: Vec<f64>,
    pub error_exponent: Vec<f64>,
    pub success_exponent: Vec<f64>,
    pub capacity: f64,
    pub critical_rate: f64,
    pub h_half_bits: f64,
}

/// Memoryless binary symmetric channel with flip probability `p` in
/// (0, 1/2], used as the comparison noise model.
#[derive(Clone, Copy, Debug)]
pub struct BscChannel {
    p: f64,
}

impl BscChannel {
    pub fn new(p: f64) -> Result<Self> {
        if !(p > 0.0 && p <= 0.5) {
            return Err(Error::domain(format!(
                "BSC flip probability must lie in (0, 1/2], got {p}"
            )));
        }
        Ok(BscChannel { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Shannon entropy rate `H_1` in nats.
    pub fn shannon_entropy(&self) -> f64 {
        binary_entropy(self.p)
    }

    /// Order-1/2 entropy rate `2 ln(sqrt(p) + sqrt(1-p))` in nats.
    pub fn h_half(&self) -> f64 {
        2.0 * (self.p.sqrt() + (1.0 - self.p).sqrt()).ln()
    }

    pub fn capacity_bits(&self) -> f64 {
        1.0 - self.shannon_entropy() / LN_2
    }

    pub fn critical_rate_bits(&self) -> f64 {
        1.0 - self.scgf_derivative(1.0) / LN_2
    }

    pub fn exponent_profile(&self) -> ExponentProfile<BscChannel> {
        ExponentProfile {
            model: *self,
            capacity: self.capacity_bits(),
            critical_rate: self.critical_rate_bits(),
            h_half_bits: self.h_half() / LN_2,
        }
    }
}

impl GuessworkScgf for BscChannel {
    fn scgf(&self, alpha: f64) -> f64 {
        let q = 1.0 - self.p;
        if alpha <= -1.0 {
            return q.ln();
        }
        let u = 1.0 / (1.0 + alpha);
        // (1+a) ln(p^u + q^u), factored through the dominant q^u term so the
        // powers cannot underflow to ln(0) as alpha -> -1.
        q.ln() + (1.0 + alpha) * (self.p / q).powf(u).ln_1p()
    }

    fn scgf_derivative(&self, alpha: f64) -> f64 {
        let q = 1.0 - self.p;
        let u = 1.0 / (1.0 + alpha);
        let wu = (self.p / q).powf(u);
        wu.ln_1p() - u * wu * (self.p / q).ln() / (1.0 + wu)
    }
}

/// Flip probability of the BSC whose order-1/2 entropy rate matches the
/// requested LRC mode at slope `beta`; unique in (0, 1/2].
pub fn match_beta_to_bsc(mode: Mode, beta: f64) -> Result<f64> {
    let spec = ScgfSpec::new(mode, beta)?;
    let target = spec.scgf(1.0);
    let g = |p: f64| 2.0 * (p.sqrt() + (1.0 - p).sqrt()).ln() - target;
    Ok(bisect(&g, 1e-30, 0.5, 1e-16))
}

/// `f(z) = ((z^2-1)/ln z) ln((1+z)/2) - (3z^2 - 2z - 1)/4` for `z > 1`.
/// Positivity of this expression is what separates the two critical rates;
/// exposed so tests can probe it directly.
pub fn zpos_check(z: f64) -> Result<f64> {
    if z.is_nan() || z <= 1.0 {
        return Err(Error::domain(format!("zpos_check needs z > 1, got {z}")));
    }
    Ok(((z * z - 1.0) / z.ln()) * ((1.0 + z) / 2.0).ln() - (3.0 * z * z - 2.0 * z - 1.0) / 4.0)
}

/// Exhaustive finite-`n` moment bounds: `lower <= empirical <= upper`.
#[derive(Clone, Copy, Debug)]
pub struct SandwichBounds {
    /// `(alpha/n) (H_{1/(1+alpha)} - ln(1 + n ln 2))`.
    pub lower: f64,
    /// `(1/n) ln E[G^alpha]` over all `2^n` noise values.
    pub empirical: f64,
    /// `(alpha/n) H_{1/(1+alpha)}` of the block noise distribution.
    pub upper: f64,
}

/// Sandwiches the exhaustive guesswork moment of the soft order (identity
/// permutation) between the classical Renyi-entropy bounds. `n <= 12`.
pub fn finite_n_sandwich(params: &LrcParams, alpha: f64) -> Result<SandwichBounds> {
    let n = params.n();
    if n > 12 {
        return Err(Error::TooLarge(format!(
            "exhaustive sandwich needs n <= 12, got {n}"
        )));
    }
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(Error::domain(format!(
            "sandwich moment order must be nonnegative, got {alpha}"
        )));
    }
    if alpha == 0.0 {
        return Ok(SandwichBounds {
            lower: 0.0,
            empirical: 0.0,
            upper: 0.0,
        });
    }
    let tau = ReliabilityPermutation::identity(n);
    let tables = RankTables::new(n)?;
    let order = GuessOrder::Soft(tau.clone());
    let count = 1usize << n;
    let mut moment_terms = Vec::with_capacity(count);
    let mut renyi_terms = Vec::with_capacity(count);
    for code in 0..count as u64 {
        let ones: Vec<usize> = (0..n)
            .filter(|i| code >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        let z = BitSequence::from_ones(n, &ones)?;
        let log_p = soft_noise_log_pmf(params, &z, &tau)?.value();
        let rank = guess_rank(&z, &order, &tables)?
            .to_f64()
            .expect("guess rank fits in f64 for n <= 12");
        moment_terms.push(log_p + alpha * rank.ln());
        renyi_terms.push(log_p / (1.0 + alpha));
    }
    let nf = n as f64;
    let empirical = log_sum_exp(&moment_terms) / nf;
    // alpha * H_{1/(1+alpha)} collapses to (1+alpha) ln sum p^{1/(1+alpha)}.
    let alpha_renyi = (1.0 + alpha) * log_sum_exp(&renyi_terms);
    let upper = alpha_renyi / nf;
    let lower = upper - alpha * (1.0 + nf * LN_2).ln() / nf;
    Ok(SandwichBounds {
        lower,
        empirical,
        upper,
    })
}
