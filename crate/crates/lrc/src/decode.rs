//! Guessing-based maximum-likelihood decoding.
//!
//! Both decoders test candidate noise effects against the received word in a
//! fixed order and return the first hit in the code book. The soft decoder
//! knows the reliability permutation and guesses in nondecreasing logistic
//! weight; the hard decoder guesses in nondecreasing Hamming weight. Within a
//! weight class both follow the canonical colexicographic order of the
//! [`weights`](crate::weights) module, which makes the position of any noise
//! effect in the order a computable quantity ([`guess_rank`]) rather than
//! something only a full enumeration can reveal.
//!
//! The Monte-Carlo harness exploits that: under a fresh uniformly drawn code
//! book per trial, the guess positions of the wrong code words form a uniform
//! random subset of the non-noise positions, so a block-error trial needs one
//! exact rank computation and one sample of a subset minimum instead of an
//! actual guessing loop. That keeps block lengths like `n = 128` tractable
//! while remaining, trial for trial, distributionally identical to decoding
//! against a materialized code book.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{sample_permutation, transmit, BitSequence, LrcParams, ReliabilityPermutation};
use crate::weights::{logistic_weight, max_logistic_weight, LogisticCoefficientTable, PartsStream};

/// The order in which a decoder tests candidate noise effects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GuessOrder {
    /// Permutation-aware order: nondecreasing logistic weight under the given
    /// permutation, colex part order within each weight class.
    Soft(ReliabilityPermutation),
    /// Permutation-blind order: nondecreasing Hamming weight, colex position
    /// order within each class.
    Hard,
}

impl GuessOrder {
    fn check_len(&self, n: usize) -> Result<()> {
        match self {
            GuessOrder::Soft(tau) if tau.len() != n => Err(Error::LengthMismatch {
                expected: n,
                got: tau.len(),
            }),
            _ => Ok(()),
        }
    }

    /// Streams every length-`n` noise effect exactly once, in guess order.
    pub fn candidates(&self, n: usize) -> Result<CandidateStream> {
        if n == 0 {
            return Err(Error::domain("block length n must be at least 1"));
        }
        self.check_len(n)?;
        let kind = match self {
            GuessOrder::Soft(tau) => StreamKind::Soft {
                w: 0,
                max_w: max_logistic_weight(n),
                parts: PartsStream::new(n, 0),
                position_of_rank: tau.positions_by_rank(),
            },
            GuessOrder::Hard => StreamKind::Hard {
                k: 0,
                subset: Vec::new(),
                fresh: true,
            },
        };
        Ok(CandidateStream {
            n,
            kind,
            scratch: BitSequence::zeros(n),
            live_ones: Vec::new(),
            emitted: 0,
        })
    }
}

enum StreamKind {
    Soft {
        w: usize,
        max_w: usize,
        parts: PartsStream,
        position_of_rank: Vec<usize>,
    },
    Hard {
        k: usize,
        subset: Vec<usize>,
        fresh: bool,
    },
}

/// Lending iterator over all `2^n` noise effects in guess order. The borrowed
/// sequence is overwritten by the next call; the candidate emitted by call
/// number `r` has guess rank exactly `r`.
pub struct CandidateStream {
    n: usize,
    kind: StreamKind,
    scratch: BitSequence,
    live_ones: Vec<usize>,
    emitted: u128,
}

impl CandidateStream {
    /// How many candidates have been produced so far (the rank of the last).
    pub fn emitted(&self) -> u128 {
        self.emitted
    }

    pub fn next_candidate(&mut self) -> Option<&BitSequence> {
        for &p in &self.live_ones {
            self.scratch
                .set(p, false)
                .expect("positions came from this stream");
        }
        self.live_ones.clear();
        let found = match &mut self.kind {
            StreamKind::Soft {
                w,
                max_w,
                parts,
                position_of_rank,
            } => loop {
                if let Some(ps) = parts.next_parts() {
                    for &r in ps {
                        self.live_ones.push(position_of_rank[r - 1]);
                    }
                    break true;
                }
                if *w >= *max_w {
                    break false;
                }
                *w += 1;
                *parts = PartsStream::new(self.n, *w);
            },
            StreamKind::Hard { k, subset, fresh } => 'advance: {
                if *fresh {
                    *fresh = false;
                    self.live_ones.extend_from_slice(subset);
                    break 'advance true;
                }
                // Colex successor within the current class: bump the lowest
                // entry with headroom, reset everything below it.
                let len = subset.len();
                for i in 0..len {
                    let ceiling = if i + 1 < len {
                        subset[i + 1]
                    } else {
                        self.n + 1
                    };
                    if subset[i] + 1 < ceiling {
                        subset[i] += 1;
                        for (j, slot) in subset.iter_mut().enumerate().take(i) {
                            *slot = j + 1;
                        }
                        self.live_ones.extend_from_slice(subset);
                        break 'advance true;
                    }
                }
                // Current class exhausted: move to the next weight.
                *k += 1;
                if *k > self.n {
                    break 'advance false;
                }
                *subset = (1..=*k).collect();
                self.live_ones.extend_from_slice(subset);
                true
            }
        };
        if !found {
            return None;
        }
        for &p in &self.live_ones {
            self.scratch
                .set(p, true)
                .expect("positions came from this stream");
        }
        self.emitted += 1;
        Some(&self.scratch)
    }
}

#[derive(Debug, Clone)]
struct PascalTable {
    // rows[m][j] = C(m, j)
    rows: Vec<Vec<BigUint>>,
    // prefix[k] = sum_{k' < k} C(n, k')
    prefix: Vec<BigUint>,
}

impl PascalTable {
    fn new(n: usize) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
        rows.push(vec![BigUint::one()]);
        for m in 1..=n {
            let prev = &rows[m - 1];
            let mut row = Vec::with_capacity(m + 1);
            row.push(BigUint::one());
            for j in 1..m {
                row.push(&prev[j - 1] + &prev[j]);
            }
            row.push(BigUint::one());
            rows.push(row);
        }
        let mut prefix = Vec::with_capacity(n + 2);
        prefix.push(BigUint::zero());
        for k in 0..=n {
            let next = &prefix[k] + &rows[n][k];
            prefix.push(next);
        }
        PascalTable { rows, prefix }
    }

    fn binomial(&self, m: usize, j: usize) -> BigUint {
        self.rows[m].get(j).cloned().unwrap_or_else(BigUint::zero)
    }
}

/// Precomputed tables that turn a noise effect into its guess rank in O(n)
/// big-integer operations: the distinct-part partition counts for the soft
/// order and a Pascal triangle for the hard order.
#[derive(Debug, Clone)]
pub struct RankTables {
    n: usize,
    coefficients: LogisticCoefficientTable,
    pascal: PascalTable,
}

impl RankTables {
    pub fn new(n: usize) -> Result<Self> {
        Ok(RankTables {
            n,
            coefficients: LogisticCoefficientTable::new(n)?,
            pascal: PascalTable::new(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &LogisticCoefficientTable {
        &self.coefficients
    }
}

/// 1-based position of `z` in the guess order: the number of queries a
/// decoder makes before (and including) testing `z`. Bijective onto
/// `[1, 2^n]` for either order.
pub fn guess_rank(z: &BitSequence, order: &GuessOrder, tables: &RankTables) -> Result<BigUint> {
    if z.len() != tables.n {
        return Err(Error::LengthMismatch {
            expected: tables.n,
            got: z.len(),
        });
    }
    order.check_len(tables.n)?;
    match order {
        GuessOrder::Soft(tau) => soft_rank(z, tau, &tables.coefficients),
        GuessOrder::Hard => Ok(hard_rank(z, &tables.pascal)),
    }
}

fn soft_rank(
    z: &BitSequence,
    tau: &ReliabilityPermutation,
    coefficients: &LogisticCoefficientTable,
) -> Result<BigUint> {
    let w = logistic_weight(z, tau)? as usize;
    let parts: Vec<usize> = z
        .ones()
        .map(|i| tau.rank_of(i).expect("position within block"))
        .collect();
    Ok(coefficients.prefix_below(w) + coefficients.class_rank(&parts)?)
}

fn hard_rank(z: &BitSequence, pascal: &PascalTable) -> BigUint {
    let k = z.hamming_weight();
    // Lighter classes first, then the colex combinadic within the class:
    // a size-k set {s_1 < ... < s_k} is preceded by sum_i C(s_i - 1, i)
    // same-size sets.
    let mut rank = &pascal.prefix[k] + BigUint::one();
    for (idx, s) in z.ones().enumerate() {
        rank += pascal.binomial(s - 1, idx + 1);
    }
    rank
}

/// A uniformly sampled code book: `2^ceil(n R)` distinct words with an O(1)
/// membership index.
#[derive(Debug, Clone)]
pub struct Codebook {
    n: usize,
    rate: f64,
    words: Vec<BitSequence>,
    index: HashSet<BitSequence>,
}

impl Codebook {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, message: usize) -> &BitSequence {
        &self.words[message]
    }

    pub fn words(&self) -> &[BitSequence] {
        &self.words
    }

    pub fn contains(&self, word: &BitSequence) -> bool {
        self.index.contains(word)
    }

    #[cfg(test)]
    fn from_words_for_tests(n: usize, rate: f64, words: Vec<BitSequence>) -> Self {
        let index = words.iter().cloned().collect();
        Codebook {
            n,
            rate,
            words,
            index,
        }
    }
}

/// Number of message bits at block length `n` and rate `R`: `ceil(n R)`.
/// Errors unless `0 < R < 1`.
pub fn message_bits(n: usize, rate: f64) -> Result<usize> {
    if n == 0 {
        return Err(Error::domain("block length n must be at least 1"));
    }
    if !rate.is_finite() || rate <= 0.0 || rate >= 1.0 {
        return Err(Error::domain(format!("rate {rate} must lie in (0, 1)")));
    }
    Ok((n as f64 * rate).ceil() as usize)
}

/// Materialization cap: code books larger than `2^24` words are refused.
pub const MAX_CODEBOOK_BITS: usize = 24;

/// Draws `2^ceil(n R)` distinct uniform words. Deterministic given the RNG
/// state. Errors if the rate is outside `(0, 1)` or the book would exceed
/// [`MAX_CODEBOOK_BITS`].
pub fn build_codebook<R: Rng + ?Sized>(n: usize, rate: f64, rng: &mut R) -> Result<Codebook> {
    let k = message_bits(n, rate)?;
    if k > MAX_CODEBOOK_BITS {
        return Err(Error::TooLarge(format!(
            "code book of 2^{k} words exceeds the 2^{MAX_CODEBOOK_BITS} materialization cap"
        )));
    }
    let m = 1usize << k;
    let words: Vec<BitSequence> = if n <= MAX_CODEBOOK_BITS && 2 * m >= (1usize << n) {
        // Dense regime: a partial Fisher-Yates pass over the whole space
        // avoids rejection stalls when the book covers most of it.
        let total = 1usize << n;
        let mut pool: Vec<u32> = (0..total as u32).collect();
        for i in 0..m {
            let j = rng.random_range(i..total);
            pool.swap(i, j);
        }
        pool[..m]
            .iter()
            .map(|&v| word_from_index(n, v as u64))
            .collect()
    } else {
        let mut seen = HashSet::with_capacity(m);
        let mut words = Vec::with_capacity(m);
        while words.len() < m {
            let w = random_word(n, rng);
            if seen.insert(w.clone()) {
                words.push(w);
            }
        }
        words
    };
    let index = words.iter().cloned().collect();
    Ok(Codebook {
        n,
        rate,
        words,
        index,
    })
}

fn word_from_index(n: usize, mut v: u64) -> BitSequence {
    let mut z = BitSequence::zeros(n);
    while v != 0 {
        let b = v.trailing_zeros() as usize;
        z.set(b + 1, true).expect("index below 2^n");
        v &= v - 1;
    }
    z
}

fn random_word<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BitSequence {
    let mut z = BitSequence::zeros(n);
    let mut i = 1;
    while i <= n {
        let take = (n - i + 1).min(64);
        let mut chunk = rng.random::<u64>();
        for b in 0..take {
            if chunk & 1 == 1 {
                z.set(i + b, true).expect("position within block");
            }
            chunk >>= 1;
        }
        i += take;
    }
    z
}

/// Outcome of one decoding attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeResult {
    /// The first code word found, or `None` if the query cap was exhausted.
    pub decoded: Option<BitSequence>,
    /// Number of noise effects tested (equals the cap when abandoned).
    pub queries: u64,
    /// Filled in by [`DecodeResult::judged`] when the truth is known.
    pub correct: Option<bool>,
}

impl DecodeResult {
    pub fn abandoned(&self) -> bool {
        self.decoded.is_none()
    }

    /// Marks the result against the transmitted word; abandonment counts as
    /// incorrect.
    pub fn judged(mut self, truth: &BitSequence) -> Self {
        self.correct = Some(self.decoded.as_ref() == Some(truth));
        self
    }
}

/// Tests noise effects in guess order against `y` and returns the first hit;
/// `queries` is exactly the guess rank of the returned noise effect. Gives up
/// (with `decoded: None`) after `max_queries` tests.
pub fn grand_decode(
    y: &BitSequence,
    book: &Codebook,
    order: &GuessOrder,
    max_queries: u64,
) -> Result<DecodeResult> {
    if y.len() != book.n() {
        return Err(Error::LengthMismatch {
            expected: book.n(),
            got: y.len(),
        });
    }
    if max_queries == 0 {
        return Err(Error::domain("max_queries must be at least 1"));
    }
    let mut stream = order.candidates(book.n())?;
    let mut probe = y.clone();
    let mut queries: u64 = 0;
    while let Some(z) = stream.next_candidate() {
        queries += 1;
        probe.clone_from(y);
        probe.xor_assign(z)?;
        if book.contains(&probe) {
            return Ok(DecodeResult {
                decoded: Some(probe),
                queries,
                correct: None,
            });
        }
        if queries == max_queries {
            return Ok(DecodeResult {
                decoded: None,
                queries,
                correct: None,
            });
        }
    }
    // Unreachable for a nonempty book: XORing y against every noise effect
    // visits every word.
    Err(Error::domain(
        "guess stream exhausted without finding a code word",
    ))
}

/// Which decoder the simulation runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DecoderKind {
    Soft,
    Hard,
}

/// Code book handling across trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodebookMode {
    /// A fresh uniform book every trial (the random-code ensemble). Runs via
    /// the rank formula, so any block length is fine.
    FreshPerTrial,
    /// One book shared by all trials; materialized, so the book is capped at
    /// `2^24` words and decoding performs the actual guessing loop.
    Fixed,
}

/// Inputs of a Monte-Carlo block-error run.
#[derive(Debug, Clone)]
pub struct SimulationConfig {
    pub params: LrcParams,
    pub rate: f64,
    pub trials: u64,
    pub seed: u64,
    pub decoder: DecoderKind,
    pub codebook: CodebookMode,
    /// Query cap per trial; defaults to `2^min(n, 24)`. Trials that hit the
    /// cap are abandoned and counted as errors.
    pub max_queries: Option<u64>,
}

impl SimulationConfig {
    pub fn effective_max_queries(&self) -> u64 {
        self.max_queries
            .unwrap_or_else(|| 1u64 << self.params.n().min(24))
    }
}

/// Aggregated result of a Monte-Carlo run. Serializes to exactly the fields
/// shown, with the decoder as `"soft"` or `"hard"`.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct BlerReport {
    pub n: usize,
    pub beta: f64,
    pub rate: f64,
    pub decoder: DecoderKind,
    pub trials: u64,
    pub errors: u64,
    pub bler: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub mean_queries: f64,
    pub median_queries: f64,
    pub seed: u64,
}

struct TrialRecord {
    error: bool,
    queries: f64,
}

/// Estimates the block-error rate by independent trials: sample a
/// permutation and a noise realization, decode, and compare. Deterministic
/// given the config (each trial seeds its own RNG stream from the master
/// seed and the trial index, so thread count does not matter).
pub fn monte_carlo_bler(config: &SimulationConfig) -> Result<BlerReport> {
    if config.trials == 0 {
        return Err(Error::domain("trials must be at least 1"));
    }
    let max_queries = config.effective_max_queries();
    if max_queries == 0 {
        return Err(Error::domain("max_queries must be at least 1"));
    }
    let records = match config.codebook {
        CodebookMode::FreshPerTrial => fresh_simulation(config, max_queries)?,
        CodebookMode::Fixed => fixed_simulation(config, max_queries)?,
    };
    Ok(fold_report(config, &records))
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `2^k - 1` as a float (exact for `k <= 53`).
fn pow2_minus_one(k: usize) -> f64 {
    if k <= 53 {
        ((1u64 << k) - 1) as f64
    } else {
        2f64.powi(k as i32)
    }
}

fn fresh_simulation(config: &SimulationConfig, max_queries: u64) -> Result<Vec<TrialRecord>> {
    let n = config.params.n();
    let k_bits = message_bits(n, config.rate)?;
    let tables = RankTables::new(n)?;
    let m1 = pow2_minus_one(k_bits);
    let n1 = pow2_minus_one(n);
    (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(config.seed, trial);
            let tau = sample_permutation(n, &mut rng)?;
            let zero = BitSequence::zeros(n);
            let noise = transmit(&config.params, &zero, &tau, &mut rng)?;
            let order = match config.decoder {
                DecoderKind::Soft => GuessOrder::Soft(tau),
                DecoderKind::Hard => GuessOrder::Hard,
            };
            let g = guess_rank(&noise, &order, &tables)?
                .to_f64()
                .unwrap_or(f64::INFINITY);
            let max_q = max_queries as f64;
            // The wrong code words occupy a uniform (Msize-1)-subset of the
            // other guess positions; only its minimum matters, and only when
            // it lands below min(g, cap + 1).
            let stop_after = g.min(max_q + 1.0);
            let v = sample_min_rank(&mut rng, m1, n1, stop_after);
            // Exact ties are impossible (the subset excludes g); a tie after
            // float rounding is resolved in favor of the true word.
            let spurious_first = v < g;
            let raw_queries = if spurious_first { v } else { g };
            let abandoned = raw_queries > max_q;
            Ok(TrialRecord {
                error: spurious_first || abandoned,
                queries: raw_queries.min(max_q),
            })
        })
        .collect()
}

fn fixed_simulation(config: &SimulationConfig, max_queries: u64) -> Result<Vec<TrialRecord>> {
    let n = config.params.n();
    // A dedicated stream for the book keeps trial streams 0..trials intact.
    let mut book_rng = trial_rng(config.seed, u64::MAX);
    let book = build_codebook(n, config.rate, &mut book_rng)?;
    (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(config.seed, trial);
            let message = rng.random_range(0..book.len());
            let tau = sample_permutation(n, &mut rng)?;
            let x = book.word(message);
            let y = transmit(&config.params, x, &tau, &mut rng)?;
            let order = match config.decoder {
                DecoderKind::Soft => GuessOrder::Soft(tau),
                DecoderKind::Hard => GuessOrder::Hard,
            };
            let result = grand_decode(&y, &book, &order, max_queries)?;
            let error = match &result.decoded {
                Some(word) => word != x,
                None => true,
            };
            Ok(TrialRecord {
                error,
                queries: result.queries as f64,
            })
        })
        .collect()
}

/// Minimum of a uniform `m1`-subset of `{1, ..., n1}` (floats standing in
/// for potentially huge integers). Returns `+inf` when the minimum is known
/// to be `>= stop_after`, which is all the caller needs.
///
/// Three regimes: a slot-by-slot scan (exact) while the expected minimum is
/// small; bisection on the exact log tail CDF for small subsets; otherwise
/// the continuous inverse CDF with a first-order correction for the
/// without-replacement drift, whose relative error `O(m1/n1)` is far below
/// Monte-Carlo resolution whenever this branch is reached.
fn sample_min_rank<R: Rng + ?Sized>(rng: &mut R, m1: f64, n1: f64, stop_after: f64) -> f64 {
    debug_assert!(m1 >= 1.0 && n1 >= m1);
    if m1 / n1 >= 1e-3 {
        let mut slots_left = n1;
        let mut j = 1.0f64;
        loop {
            if j >= stop_after {
                return f64::INFINITY;
            }
            // P(slot j occupied | slots 1..j-1 empty); reaches 1 by pigeonhole.
            if rng.random::<f64>() < m1 / slots_left {
                return j;
            }
            slots_left -= 1.0;
            j += 1.0;
        }
    }
    let u = rng.random::<f64>();
    let target = (-u).ln_1p(); // ln(1 - u)
    if m1 <= 4096.0 {
        // Smallest v with ln P(min > v) <= ln(1 - u), tail CDF evaluated
        // term by term: ln P(min > v) = sum_j ln(1 - v / (n1 - j)).
        let terms = m1 as usize;
        let tail = |v: f64| -> f64 {
            let mut acc = 0.0;
            for j in 0..terms {
                acc += (-v / (n1 - j as f64)).ln_1p();
                if acc == f64::NEG_INFINITY {
                    break;
                }
            }
            acc
        };
        let mut lo = 0.0f64;
        let mut hi = n1 - m1 + 1.0;
        while hi - lo > 1.0 {
            let mid = ((lo + hi) / 2.0).floor();
            if mid <= lo || mid >= hi {
                break;
            }
            if tail(mid) <= target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        return hi;
    }
    let base = -(n1 * f64::exp_m1(target / m1));
    let v = (base * (1.0 - (m1 - 1.0) / (2.0 * n1))).ceil().max(1.0);
    v.min(n1 - m1 + 1.0)
}

fn wilson_interval(errors: u64, trials: u64) -> (f64, f64) {
    let z = 1.959_963_984_540_054f64;
    let nf = trials as f64;
    let p = errors as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let center = (p + z2 / (2.0 * nf)) / denom;
    let half = z * (p * (1.0 - p) / nf + z2 / (4.0 * nf * nf)).sqrt() / denom;
    // The bound at an empty (or full) count is exactly the estimate; don't
    // let rounding push it past p and break containment.
    let lo = if errors == 0 {
        0.0
    } else {
        (center - half).max(0.0)
    };
    let hi = if errors == trials {
        1.0
    } else {
        (center + half).min(1.0)
    };
    (lo.min(p), hi.max(p))
}

fn fold_report(config: &SimulationConfig, records: &[TrialRecord]) -> BlerReport {
    let trials = records.len() as u64;
    let errors = records.iter().filter(|r| r.error).count() as u64;
    let (ci_low, ci_high) = wilson_interval(errors, trials);
    let mean_queries = records.iter().map(|r| r.queries).sum::<f64>() / trials as f64;
    let mut sorted: Vec<f64> = records.iter().map(|r| r.queries).collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("query counts are finite"));
    let median_queries = if sorted.len() % 2 == 1 {
        sorted[sorted.len() / 2]
    } else {
        0.5 * (sorted[sorted.len() / 2 - 1] + sorted[sorted.len() / 2])
    };
    BlerReport {
        n: config.params.n(),
        beta: config.params.beta(),
        rate: config.rate,
        decoder: config.decoder,
        trials,
        errors,
        bler: errors as f64 / trials as f64,
        ci_low,
        ci_high,
        mean_queries,
        median_queries,
        seed: config.seed,
    }
}
