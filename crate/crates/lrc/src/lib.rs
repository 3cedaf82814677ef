//! Linear reliability channel toolkit.
//!
//! A binary channel where bit `i` of an `n`-bit block is flipped with
//! probability `q_{tau(i)} = e^{-beta tau(i)/n}/(1+e^{-beta tau(i)/n})` for a
//! uniformly random reliability permutation `tau`. The crate provides:
//!
//! - [`model`]: channel parameters, bit sequences, permutations, transmission,
//!   and the exact soft (tau-aware) and hard (tau-blind) noise PMFs;
//! - [`weights`]: logistic-weight combinatorics — weight-class enumeration,
//!   exact coefficient counts, ranking tables, and the saddle-point
//!   approximation to the coefficients;
//! - [`decode`]: guessing random additive noise decoding in both soft and
//!   hard guess orders, codebooks, and Monte-Carlo block-error simulation;
//! - [`asymptotics`]: scaled cumulant generating functions of the guesswork,
//!   rate functions, entropy rates, critical rates, error/success exponents,
//!   and the memoryless-BSC reference curves;
//! - [`llr`]: log-likelihood-ratio reliability profiles for additive
//!   location-scale noise on a BPSK constellation.

pub mod asymptotics;
pub mod decode;
pub mod error;
pub mod llr;
pub mod model;
pub mod numeric;
pub mod weights;

pub use error::{Error, Result};
