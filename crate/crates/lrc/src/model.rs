//! Channel model: parameters, bit sequences, reliability permutations, the
//! transmission map, and the exact noise distributions.
//!
//! The channel acts on blocks of `n` bits. Bit position `i` (positions are
//! 1-based throughout this crate) is assigned a reliability rank `tau(i)` by
//! a uniformly drawn permutation, and is flipped independently with
//! probability
//!
//! ```text
//!     q_r = e^{-beta r / n} / (1 + e^{-beta r / n}),   r = tau(i),
//! ```
//!
//! so `q_r` is strictly decreasing in the rank `r` and always below 1/2. A
//! receiver that knows `tau` sees "soft" noise whose probability depends on
//! the logistic weight `w_tau(z) = sum of tau(i) over one-positions i`; a
//! receiver that does not sees "hard" noise whose probability depends only on
//! the Hamming weight, through the elementary symmetric polynomials
//! `a^n_k(beta)` in the variables `e^{-beta i/n}`.
//!
//! All probability computations are log-domain.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::numeric::{log_sum_exp, sigmoid, softplus};

/// Block length and reliability spread of a channel instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LrcParams {
    n: usize,
    beta: f64,
}

impl LrcParams {
    /// Validates `n >= 1` and `beta` finite and strictly positive.
    pub fn new(n: usize, beta: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("block length n must be at least 1"));
        }
        if !beta.is_finite() || beta <= 0.0 {
            return Err(Error::domain(format!(
                "beta must be finite and positive, got {beta}"
            )));
        }
        Ok(LrcParams { n, beta })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// ln(1 + e^{-beta i/n}) summed over i = 1..=n: the log normalizer shared
    /// by both noise PMFs.
    pub fn log_normalizer(&self) -> f64 {
        (1..=self.n)
            .map(|i| softplus(-self.beta * i as f64 / self.n as f64))
            .sum()
    }
}

/// Flip probability of the bit holding reliability rank `i`, `q_i =
/// e^{-beta i/n}/(1+e^{-beta i/n})`. Errors unless `1 <= i <= n`.
pub fn bit_flip_probability(params: &LrcParams, i: usize) -> Result<f64> {
    if i == 0 || i > params.n {
        return Err(Error::domain(format!(
            "rank {i} out of range 1..={}",
            params.n
        )));
    }
    Ok(sigmoid(-params.beta * i as f64 / params.n as f64))
}

/// Log-domain probability, guaranteed `<= 0` and finite-or-`-inf`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct LogProbability(f64);

impl LogProbability {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_nan() || value > 0.0 {
            return Err(Error::domain(format!(
                "log probability must be <= 0, got {value}"
            )));
        }
        Ok(LogProbability(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

impl From<LogProbability> for f64 {
    fn from(lp: LogProbability) -> f64 {
        lp.0
    }
}

/// Fixed-length bit vector. Positions are 1-based, matching the rank and
/// weight conventions used everywhere in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSequence {
    n: usize,
    // Invariant: bits above position n in the last word are zero, so that
    // derived Eq/Hash agree with logical equality.
    words: Vec<u64>,
}

impl BitSequence {
    pub fn zeros(n: usize) -> Self {
        BitSequence {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// Builds a sequence of length `n` with ones exactly at the given
    /// 1-based positions.
    pub fn from_ones(n: usize, ones: &[usize]) -> Result<Self> {
        let mut s = BitSequence::zeros(n);
        for &i in ones {
            s.set(i, true)?;
        }
        Ok(s)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Bit at 1-based position `i`.
    pub fn bit(&self, i: usize) -> Result<bool> {
        if i == 0 || i > self.n {
            return Err(Error::domain(format!(
                "position {i} out of range 1..={}",
                self.n
            )));
        }
        let b = i - 1;
        Ok((self.words[b / 64] >> (b % 64)) & 1 == 1)
    }

    /// Sets the bit at 1-based position `i`.
    pub fn set(&mut self, i: usize, value: bool) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::domain(format!(
                "position {i} out of range 1..={}",
                self.n
            )));
        }
        let b = i - 1;
        if value {
            self.words[b / 64] |= 1u64 << (b % 64);
        } else {
            self.words[b / 64] &= !(1u64 << (b % 64));
        }
        Ok(())
    }

    /// Number of ones.
    pub fn hamming_weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// 1-based positions of the ones, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + tz + 1)
                }
            })
        })
    }

    /// Bitwise XOR; errors on length mismatch.
    pub fn xor(&self, other: &BitSequence) -> Result<BitSequence> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Ok(BitSequence { n: self.n, words })
    }

    /// In-place `self ^= other` without allocating; errors on mismatch.
    pub fn xor_assign(&mut self, other: &BitSequence) -> Result<()> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        Ok(())
    }
}

/// Hex serialization with explicit bit length: `"n:hex"`, where byte `j` of
/// the hex payload carries positions `8j+1..=8j+8` and position `8j+1` is the
/// least significant bit of that byte.
impl std::fmt::Display for BitSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:", self.n)?;
        for byte_idx in 0..self.n.div_ceil(8) {
            let w = self.words[byte_idx / 8];
            let byte = (w >> ((byte_idx % 8) * 8)) & 0xff;
            write!(f, "{byte:02x}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BitSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (len_part, hex_part) = s
            .split_once(':')
            .ok_or_else(|| Error::domain("bit sequence literal must look like \"n:hex\""))?;
        let n: usize = len_part
            .parse()
            .map_err(|_| Error::domain(format!("invalid bit length {len_part:?}")))?;
        let expected_bytes = n.div_ceil(8);
        if hex_part.len() != expected_bytes * 2 {
            return Err(Error::domain(format!(
                "expected {} hex chars for {n} bits, got {}",
                expected_bytes * 2,
                hex_part.len()
            )));
        }
        let mut seq = BitSequence::zeros(n);
        for byte_idx in 0..expected_bytes {
            let byte = u8::from_str_radix(&hex_part[byte_idx * 2..byte_idx * 2 + 2], 16)
                .map_err(|_| Error::domain("invalid hex digit in bit sequence"))?;
            if byte_idx == expected_bytes - 1 && !n.is_multiple_of(8) && byte >> (n % 8) != 0 {
                return Err(Error::domain("padding bits beyond position n must be zero"));
            }
            seq.words[byte_idx / 8] |= (byte as u64) << ((byte_idx % 8) * 8);
        }
        Ok(seq)
    }
}

/// Bijection from bit positions to reliability ranks: `rank_of(i) = tau(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReliabilityPermutation {
    // rank_of[i-1] = tau(i), values a permutation of 1..=n.
    rank_of: Vec<usize>,
}

impl ReliabilityPermutation {
    pub fn identity(n: usize) -> Self {
        ReliabilityPermutation {
            rank_of: (1..=n).collect(),
        }
    }

    /// Builds from `ranks[i-1] = tau(i)`; errors unless the values are a
    /// permutation of 1..=n.
    pub fn from_ranks(ranks: Vec<usize>) -> Result<Self> {
        let n = ranks.len();
        let mut seen = vec![false; n];
        for &r in &ranks {
            if r == 0 || r > n {
                return Err(Error::domain(format!("rank {r} out of range 1..={n}")));
            }
            if seen[r - 1] {
                return Err(Error::domain(format!("rank {r} repeated")));
            }
            seen[r - 1] = true;
        }
        Ok(ReliabilityPermutation { rank_of: ranks })
    }

    pub fn len(&self) -> usize {
        self.rank_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank_of.is_empty()
    }

    /// `tau(i)` for a 1-based position `i`.
    pub fn rank_of(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.rank_of.len() {
            return Err(Error::domain(format!(
                "position {i} out of range 1..={}",
                self.rank_of.len()
            )));
        }
        Ok(self.rank_of[i - 1])
    }

    /// `positions[r-1]` = the position holding rank `r` (the inverse map).
    pub fn positions_by_rank(&self) -> Vec<usize> {
        let mut pos = vec![0usize; self.rank_of.len()];
        for (i0, &r) in self.rank_of.iter().enumerate() {
            pos[r - 1] = i0 + 1;
        }
        pos
    }

    pub fn inverse(&self) -> ReliabilityPermutation {
        ReliabilityPermutation {
            rank_of: self.positions_by_rank(),
        }
    }

    /// Reindexes a sequence: the result has bit `tau(i)` equal to bit `i` of
    /// `z`, so ones move to the positions given by their ranks.
    pub fn apply(&self, z: &BitSequence) -> Result<BitSequence> {
        if z.len() != self.rank_of.len() {
            return Err(Error::LengthMismatch {
                expected: self.rank_of.len(),
                got: z.len(),
            });
        }
        let mut out = BitSequence::zeros(z.len());
        for i in z.ones() {
            out.set(self.rank_of[i - 1], true)?;
        }
        Ok(out)
    }
}

/// Draws a uniformly random reliability permutation (Fisher-Yates).
pub fn sample_permutation<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<ReliabilityPermutation> {
    if n == 0 {
        return Err(Error::domain("block length n must be at least 1"));
    }
    let mut ranks: Vec<usize> = (1..=n).collect();
    ranks.shuffle(rng);
    Ok(ReliabilityPermutation { rank_of: ranks })
}

/// One channel use: flips bit `i` of `x` independently with probability
/// `q_{tau(i)}` and returns the received word. The realized noise is
/// `x XOR y`.
pub fn transmit<R: Rng + ?Sized>(
    params: &LrcParams,
    x: &BitSequence,
    tau: &ReliabilityPermutation,
    rng: &mut R,
) -> Result<BitSequence> {
    if x.len() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            got: x.len(),
        });
    }
    if tau.len() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            got: tau.len(),
        });
    }
    let mut y = x.clone();
    for i in 1..=params.n {
        let q = sigmoid(-params.beta * tau.rank_of[i - 1] as f64 / params.n as f64);
        if rng.random::<f64>() < q {
            let cur = y.bit(i)?;
            y.set(i, !cur)?;
        }
    }
    Ok(y)
}

/// Log-PMF of the soft (permutation-aware) noise:
/// `-beta w_tau(z)/n - sum_i ln(1+e^{-beta i/n})`.
pub fn soft_noise_log_pmf(
    params: &LrcParams,
    z: &BitSequence,
    tau: &ReliabilityPermutation,
) -> Result<LogProbability> {
    if z.len() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            got: z.len(),
        });
    }
    if tau.len() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            got: tau.len(),
        });
    }
    let w: u64 = z.ones().map(|i| tau.rank_of[i - 1] as u64).sum();
    let log_p = -params.beta * w as f64 / params.n as f64 - params.log_normalizer();
    LogProbability::new(log_p)
}

/// `ln a^n_k(beta)`: log of the degree-`k` elementary symmetric polynomial in
/// the variables `e^{-beta i/n}`, i = 1..=n. Errors if `k > n`.
pub fn elementary_symmetric_log(params: &LrcParams, k: usize) -> Result<f64> {
    if k > params.n {
        return Err(Error::domain(format!(
            "degree {k} exceeds variable count {}",
            params.n
        )));
    }
    Ok(elementary_symmetric_log_row(params)[k])
}

/// Full row `[ln a^n_0, ..., ln a^n_n]` by the log-domain Newton identityless
/// DP: process variables one at a time, updating degrees in descending order.
pub fn elementary_symmetric_log_row(params: &LrcParams) -> Vec<f64> {
    let n = params.n;
    let mut row = vec![f64::NEG_INFINITY; n + 1];
    row[0] = 0.0;
    for i in 1..=n {
        let log_x = -params.beta * i as f64 / n as f64;
        let top = i.min(n);
        for k in (1..=top).rev() {
            let candidate = row[k - 1] + log_x;
            row[k] = log_sum_exp(&[row[k], candidate]);
        }
    }
    row
}

/// Log-PMF of the hard (permutation-blind) noise: for Hamming weight `k`,
/// `ln a^n_k - ln C(n,k) - sum_i ln(1+e^{-beta i/n})`.
pub fn hard_noise_log_pmf(params: &LrcParams, z: &BitSequence) -> Result<LogProbability> {
    if z.len() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            got: z.len(),
        });
    }
    let k = z.hamming_weight();
    let log_a = elementary_symmetric_log(params, k)?;
    let log_p = log_a - ln_binomial(params.n, k) - params.log_normalizer();
    LogProbability::new(log_p)
}

/// ln C(n, k) by direct product; exact to ~1e-14 relative for the block
/// lengths this crate works with.
pub(crate) fn ln_binomial(n: usize, k: usize) -> f64 {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let mut acc = 0.0;
    for j in 1..=k {
        acc += ((n - k + j) as f64).ln() - (j as f64).ln();
    }
    acc
}
