//! Logistic-weight combinatorics.
//!
//! The soft noise PMF depends on a sequence only through its logistic weight
//! `w_tau(z) = sum of tau(i) over one-positions i of z`, an integer in
//! `[0, n(n+1)/2]`. The number of sequences in weight class `w` equals
//! `a(n, w)`, the number of partitions of `w` into distinct parts `<= n`
//! (equivalently the coefficient of `q^w` in `prod_{i=1}^n (1 + q^i)`).
//!
//! This module provides:
//!
//! - [`logistic_weight`]: the weight statistic itself;
//! - [`landslide_enumerate`]: a streaming enumerator of one weight class in
//!   the crate's canonical order (colexicographic by part set);
//! - [`LogisticCoefficientTable`]: exact `a(n, w)` in big integers together
//!   with the prefix sums and the partition-ranking DP used by the decoders'
//!   closed-form guess ranks;
//! - [`logistic_coefficient_log_table`]: a log-domain float DP for block
//!   lengths where exact integers are impractical;
//! - [`bridges_beta`] / [`bridges_log_approx`]: the saddle-point
//!   approximation `a(n, w) ~ A(t) w^{-3/4} e^{B(t) sqrt(w)}` with
//!   `t = n/sqrt(w)`, where `beta(t)` solves
//!   `1 = int_0^t u e^{-beta u}/(1+e^{-beta u}) du`,
//!   `A(t) = cosh(beta t/2) sqrt(beta'(t)/(pi t))`, and
//!   `B(t) = 2 beta + t ln(1+e^{-beta t})`. Weights past the symmetry point
//!   are reflected through `a(n, w) = a(n, n(n+1)/2 - w)`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::model::{BitSequence, ReliabilityPermutation};
use crate::numeric::{bisect, integrate, li2_neg_exp, ln_cosh, log_sum_exp, sigmoid, softplus};

/// Largest logistic weight at block length `n`.
pub fn max_logistic_weight(n: usize) -> usize {
    n * (n + 1) / 2
}

/// `w_tau(z)`: sum of the reliability ranks of the one-positions of `z`.
pub fn logistic_weight(z: &BitSequence, tau: &ReliabilityPermutation) -> Result<u64> {
    if z.len() != tau.len() {
        return Err(Error::LengthMismatch {
            expected: tau.len(),
            got: z.len(),
        });
    }
    let mut w = 0u64;
    for i in z.ones() {
        w += tau.rank_of(i)? as u64;
    }
    Ok(w)
}

/// Hamming weight of a sequence (the hard-decision analogue of
/// [`logistic_weight`]).
pub fn hamming_weight(z: &BitSequence) -> usize {
    z.hamming_weight()
}

/// Smallest feasible largest part of a distinct-part partition of `v`:
/// the least `m` with `m(m+1)/2 >= v`.
fn min_largest_part(v: usize) -> usize {
    if v == 0 {
        return 0;
    }
    let mut m = (((8.0 * v as f64 + 1.0).sqrt() - 1.0) / 2.0).floor() as usize;
    while m * (m + 1) / 2 < v {
        m += 1;
    }
    while m > 1 && (m - 1) * m / 2 >= v {
        m -= 1;
    }
    m
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    v: usize,
    cap: usize,
    m: usize,
}

/// Streaming depth-first enumerator of partitions of `w` into distinct parts
/// `<= n`, in colexicographic order of the part set (partitions with a
/// smaller largest part come first; ties recurse on the remainder). Yields
/// borrowed part slices in descending part order; O(depth) memory.
#[derive(Debug, Clone)]
pub(crate) struct PartsStream {
    w: usize,
    n: usize,
    stack: Vec<Frame>,
    parts: Vec<usize>,
    started: bool,
    done: bool,
}

impl PartsStream {
    pub(crate) fn new(n: usize, w: usize) -> Self {
        PartsStream {
            w,
            n,
            stack: Vec::new(),
            parts: Vec::new(),
            started: false,
            done: false,
        }
    }

    pub(crate) fn next_parts(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.w == 0 {
                self.done = true;
                return Some(&self.parts);
            }
            self.stack.push(Frame {
                v: self.w,
                cap: self.n,
                m: min_largest_part(self.w),
            });
        } else {
            // The previous emission consumed the top frame's candidate part;
            // undo it and advance that frame.
            self.parts.pop();
            match self.stack.last_mut() {
                Some(top) => top.m += 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        loop {
            let Some(top) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            let limit = top.cap.min(top.v);
            if top.m > limit {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return None;
                }
                self.parts.pop();
                self.stack.last_mut().unwrap().m += 1;
                continue;
            }
            let m = top.m;
            let rest = top.v - m;
            // m >= min_largest_part(v) guarantees rest <= m(m-1)/2, and
            // distinct parts <= m-1 realize every value in that range.
            debug_assert!(rest <= m * (m - 1) / 2);
            self.parts.push(m);
            if rest == 0 {
                return Some(&self.parts);
            }
            self.stack.push(Frame {
                v: rest,
                cap: m - 1,
                m: min_largest_part(rest),
            });
        }
    }
}

/// Iterator over the weight class `{z : w_identity(z) = w}` at block length
/// `n`, i.e. sequences whose set of one-positions sums to `w`, in the
/// canonical (colex) order. Errors if `w > n(n+1)/2`.
pub fn landslide_enumerate(n: usize, w: usize) -> Result<LandslideIter> {
    if n == 0 {
        return Err(Error::domain("block length n must be at least 1"));
    }
    if w > max_logistic_weight(n) {
        return Err(Error::domain(format!(
            "weight {w} outside [0, {}]",
            max_logistic_weight(n)
        )));
    }
    Ok(LandslideIter {
        stream: PartsStream::new(n, w),
        n,
    })
}

pub struct LandslideIter {
    stream: PartsStream,
    n: usize,
}

impl Iterator for LandslideIter {
    type Item = BitSequence;

    fn next(&mut self) -> Option<BitSequence> {
        let n = self.n;
        self.stream
            .next_parts()
            .map(|parts| BitSequence::from_ones(n, parts).expect("parts within 1..=n"))
    }
}

/// Exact distinct-part partition counts for one block length.
///
/// `count_limited(limit, v)` is the number of partitions of `v` into distinct
/// parts `<= limit`; the top row `limit = n` gives the logistic coefficients
/// `a(n, w)`. Prefix sums over the top row and the full triangular table
/// together turn a weight class and a part set into a 1-based guess rank in
/// O(n) big-integer additions.
#[derive(Debug, Clone)]
pub struct LogisticCoefficientTable {
    n: usize,
    // rows[limit][v] = #partitions of v into distinct parts <= limit,
    // for v <= limit(limit+1)/2 (zero beyond).
    rows: Vec<Vec<BigUint>>,
    // prefix_below[w] = sum over w' < w of a(n, w'), length W+2.
    prefix_below: Vec<BigUint>,
}

impl LogisticCoefficientTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("block length n must be at least 1"));
        }
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
        rows.push(vec![BigUint::one()]);
        for limit in 1..=n {
            let prev = &rows[limit - 1];
            let len = max_logistic_weight(limit) + 1;
            let mut row = vec![BigUint::zero(); len];
            for v in 0..len {
                if v < prev.len() {
                    row[v] += &prev[v];
                }
                if v >= limit && v - limit < prev.len() {
                    row[v] += &prev[v - limit];
                }
            }
            rows.push(row);
        }
        let top = &rows[n];
        let mut prefix_below = Vec::with_capacity(top.len() + 1);
        let mut acc = BigUint::zero();
        for value in top {
            prefix_below.push(acc.clone());
            acc += value;
        }
        prefix_below.push(acc);
        Ok(LogisticCoefficientTable {
            n,
            rows,
            prefix_below,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn max_weight(&self) -> usize {
        max_logistic_weight(self.n)
    }

    /// `a(n, w)`; zero outside `[0, n(n+1)/2]`.
    pub fn count(&self, w: usize) -> BigUint {
        self.rows[self.n]
            .get(w)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Partitions of `v` into distinct parts `<= limit`; zero out of range.
    pub fn count_limited(&self, limit: usize, v: usize) -> BigUint {
        if limit > self.n {
            return BigUint::zero();
        }
        self.rows[limit]
            .get(v)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Sum of `a(n, w')` over `w' < w` (clamped at the table end): the number
    /// of sequences in strictly lighter weight classes.
    pub fn prefix_below(&self, w: usize) -> BigUint {
        let idx = w.min(self.prefix_below.len() - 1);
        self.prefix_below[idx].clone()
    }

    /// `ln a(n, w)`; `-inf` for empty classes.
    pub fn log_count(&self, w: usize) -> f64 {
        big_ln(&self.count(w))
    }

    /// 1-based colexicographic rank of a part set within its weight class.
    ///
    /// `parts` must be distinct values in `1..=n` (any order). With the parts
    /// sorted ascending as `s_1 < ... < s_k` and `P_i = s_1 + ... + s_i`, the
    /// number of strictly earlier partitions is
    /// `sum_i count_limited(s_i - 1, P_i)`: an earlier partition agrees above
    /// some `s_i`, omits `s_i`, and re-partitions `P_i` into parts `< s_i`.
    pub fn class_rank(&self, parts: &[usize]) -> Result<BigUint> {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::domain(format!("part {} repeated", pair[0])));
            }
        }
        if let Some(&first) = sorted.first() {
            if first == 0 {
                return Err(Error::domain("parts must be >= 1"));
            }
        }
        if let Some(&last) = sorted.last() {
            if last > self.n {
                return Err(Error::domain(format!("part {last} exceeds n={}", self.n)));
            }
        }
        let mut rank = BigUint::one();
        let mut prefix = 0usize;
        for &s in &sorted {
            prefix += s;
            rank += self.count_limited(s - 1, prefix);
        }
        Ok(rank)
    }
}

/// `a(n, w)` as an exact big integer via the 1-D knapsack DP (descending
/// update keeps parts distinct). Cheaper than a full table when only one
/// block length's row is needed.
pub fn logistic_coefficient_exact(n: usize, w: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::domain("block length n must be at least 1"));
    }
    if w > max_logistic_weight(n) {
        return Err(Error::domain(format!(
            "weight {w} outside [0, {}]",
            max_logistic_weight(n)
        )));
    }
    let mut dp = vec![BigUint::zero(); w + 1];
    dp[0] = BigUint::one();
    for part in 1..=n.min(w) {
        for v in (part..=w).rev() {
            let add = dp[v - part].clone();
            dp[v] += add;
        }
    }
    Ok(dp[w].clone())
}

/// Full row `[ln a(n, 0), ..., ln a(n, W)]` by a log-domain float DP, for
/// block lengths beyond exact-integer practicality. Absolute log error stays
/// near 1e-12 per the accumulation depth.
pub fn logistic_coefficient_log_table(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::domain("block length n must be at least 1"));
    }
    let cap = max_logistic_weight(n);
    let mut dp = vec![f64::NEG_INFINITY; cap + 1];
    dp[0] = 0.0;
    for part in 1..=n {
        for v in (part..=cap).rev() {
            let from = dp[v - part];
            if from > f64::NEG_INFINITY {
                dp[v] = log_sum_exp(&[dp[v], from]);
            }
        }
    }
    Ok(dp)
}

fn big_ln(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 512 {
        x.to_f64().expect("fits f64 range").ln()
    } else {
        let shift = bits - 64;
        let top: u64 = (x >> shift).to_u64().expect("64 bits");
        (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
    }
}

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// Upper end of the range of `beta(t)`: `pi/(2 sqrt 3)`.
pub const BRIDGES_BETA_SUP: f64 = 0.906_899_682_117_089;

const PI2_12: f64 = std::f64::consts::PI * std::f64::consts::PI / 12.0;

/// `int_0^t u sigmoid(-beta u) du`. Integrating by parts against
/// `d/du ln(1 + e^{-beta u}) = -beta sigmoid(-beta u)` gives the closed form
/// `-(t/beta) ln(1+e^{-beta t}) + (Li2(-e^{-beta t}) + pi^2/12) / beta^2`,
/// which stays accurate however sharp the sigmoid transition is. Near
/// beta = 0 the dilogarithm term divides a ~1e-16 absolute error by beta^2,
/// so quadrature (safe there: the integrand has no boundary layer) takes over.
fn bridges_integral(beta: f64, t: f64) -> f64 {
    if beta.abs() < 0.05 {
        return bridges_integral_quadrature(beta, t);
    }
    let x = beta * t;
    -(t / beta) * softplus(-x) + (li2_neg_exp(-x) + PI2_12) / (beta * beta)
}

fn bridges_integral_quadrature(beta: f64, t: f64) -> f64 {
    // Split at the sigmoid transition scale so adaptive refinement cannot
    // step over it.
    let layer = (60.0 / beta.abs().max(1.0)).min(t);
    let f = |u: f64| u * sigmoid(-beta * u);
    integrate(&f, 0.0, layer, 1e-13) + integrate(&f, layer, t, 1e-13)
}

/// d/dbeta of the defining integral: `-int_0^t u^2 s(bu) s(-bu) du`.
/// By parts (`s(bu) s(-bu) = -(1/beta) d/du s(-beta u)`) this reduces to the
/// first integral: `-(2 I1 - t^2 s(-beta t)) / beta`.
fn bridges_integral_dbeta(beta: f64, t: f64) -> f64 {
    if beta.abs() < 0.05 {
        return bridges_integral_dbeta_quadrature(beta, t);
    }
    -(2.0 * bridges_integral(beta, t) - t * t * sigmoid(-beta * t)) / beta
}

fn bridges_integral_dbeta_quadrature(beta: f64, t: f64) -> f64 {
    let layer = (60.0 / beta.abs().max(1.0)).min(t);
    let f = |u: f64| u * u * sigmoid(beta * u) * sigmoid(-beta * u);
    -(integrate(&f, 0.0, layer, 1e-13) + integrate(&f, layer, t, 1e-13))
}

fn solve_bridges(t: f64) -> Result<(f64, f64)> {
    if t.is_nan() || t <= SQRT_2 {
        return Err(Error::domain(format!(
            "bridges argument t={t} must exceed sqrt(2)"
        )));
    }
    let g = |beta: f64| bridges_integral(beta, t) - 1.0;
    // g is strictly decreasing in beta; g(BRIDGES_BETA_SUP) < 0 for finite t.
    let at_zero = g(0.0);
    let (lo, hi) = if at_zero == 0.0 {
        (0.0, 0.0)
    } else if at_zero > 0.0 {
        // For large t the deficit 1 - I(sup, t) decays like e^{-sup t} and
        // falls below f64 resolution, so g can evaluate as >= 0 at the
        // supremum; the root is then numerically the supremum itself.
        if g(BRIDGES_BETA_SUP) >= 0.0 {
            (BRIDGES_BETA_SUP, BRIDGES_BETA_SUP)
        } else {
            (0.0, BRIDGES_BETA_SUP)
        }
    } else {
        // Negative branch: expand the lower end until the sign flips. The
        // root scales like -1/sqrt(t - sqrt 2), so allow a deep bracket.
        let mut lo = -1.0;
        let mut hi = 0.0;
        while g(lo) < 0.0 {
            hi = lo;
            lo *= 2.0;
            if lo < -1e13 {
                return Err(Error::domain(format!(
                    "bridges solver: no bracket for t={t}"
                )));
            }
        }
        (lo, hi)
    };
    let mut beta = if lo == hi {
        lo
    } else {
        bisect(&g, lo, hi, 1e-12)
    };
    // Newton polish sharpens the bisection result; steps that would leave
    // the bracket are rejected (g is flat enough near the boundary that an
    // unguarded step can jump far past the root).
    for _ in 0..3 {
        let f = g(beta);
        let fp = bridges_integral_dbeta(beta, t);
        if fp == 0.0 {
            break;
        }
        let step = f / fp;
        if !step.is_finite() {
            break;
        }
        let next = beta - step;
        if next < lo || next > hi {
            break;
        }
        beta = next;
    }
    let beta_prime = t * sigmoid(-beta * t) / (-bridges_integral_dbeta(beta, t));
    Ok((beta, beta_prime))
}

/// `beta(t)`: the implicit solution of `1 = int_0^t u e^{-beta u}/(1+e^{-beta u}) du`
/// on `t in (sqrt 2, inf)`, with values in `(-inf, pi/(2 sqrt 3))`.
/// Strictly increasing in `t`; `beta(2) = 0`. Errors for `t <= sqrt 2`.
pub fn bridges_beta(t: f64) -> Result<f64> {
    solve_bridges(t).map(|(beta, _)| beta)
}

/// Saddle-point estimate of `ln a(n, w)` and its ingredients.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct BridgesEstimate {
    /// Effective weight after the symmetry reflection, if any.
    pub w_effective: usize,
    /// `t = n / sqrt(w_effective)`; always `> sqrt 2` post-reflection.
    pub t: f64,
    /// `beta(t)` from the defining integral.
    pub beta: f64,
    /// Prefactor `A(t) = cosh(beta t / 2) sqrt(beta'(t) / (pi t))`.
    /// May overflow to `inf` for extreme `t`; `log_count` stays finite.
    pub a: f64,
    /// Exponent coefficient `B(t) = 2 beta + t ln(1 + e^{-beta t})`.
    pub b: f64,
    /// `ln A(t) - (3/4) ln w + B(t) sqrt(w)` at the effective weight.
    pub log_count: f64,
}

/// Saddle-point approximation to `ln a(n, w)`. Valid for `1 <= w <= W-1`
/// where `W = n(n+1)/2`; weights with `t = n/sqrt(w) <= sqrt 2` are reflected
/// to `W - w` first (the coefficients are symmetric).
pub fn bridges_log_approx(n: usize, w: usize) -> Result<BridgesEstimate> {
    let cap = max_logistic_weight(n);
    if n == 0 || w == 0 || w >= cap {
        return Err(Error::domain(format!(
            "approximation needs 1 <= w <= {} (n={n})",
            cap.saturating_sub(1)
        )));
    }
    // Reflect to the lighter representative of the symmetric pair; this keeps
    // t = n/sqrt(w_eff) >= sqrt(4n/(n+1)) > sqrt(2) for every valid weight.
    let w_eff = w.min(cap - w);
    let t = n as f64 / (w_eff as f64).sqrt();
    let (beta, beta_prime) = solve_bridges(t)?;
    let ln_a = ln_cosh(beta * t * 0.5) + 0.5 * (beta_prime.ln() - (std::f64::consts::PI * t).ln());
    let b = 2.0 * beta + t * softplus(-beta * t);
    let sqrt_w = (w_eff as f64).sqrt();
    let log_count = ln_a - 0.75 * (w_eff as f64).ln() + b * sqrt_w;
    Ok(BridgesEstimate {
        w_effective: w_eff,
        t,
        beta,
        a: (beta * t * 0.5).cosh() * (beta_prime / (std::f64::consts::PI * t)).sqrt(),
        b,
        log_count,
    })
}
