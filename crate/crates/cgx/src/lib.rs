//! Positional numeration over evenly spaced Fibonacci terms.
//!
//! For each positive even spacing `d`, the base sequence `H_k = F_{2+d(k-1)}`
//! turns every non-negative integer into a unique little-endian digit string
//! subject to a three-item rule generalizing the Chung-Graham expansion
//! (`d = 2`, digits over `{0, 1, 2}` with separated 2s). This crate provides:
//!
//! - [`sequences`]: exact generators for `F`, the Lucas companion `K`, the
//!   memoized base sequence `H`, the norm identity `K_d^2 - 5F_d^2 = ±4`,
//!   and the constant `alpha ~ 0.39441967`;
//! - [`rule`]: the digit-string model, digit caps `A = K_d - 1` and
//!   `B = F_{2+d} - 1`, rule validation with violation reporting, and the
//!   high-index-dominant lexicographic order;
//! - [`codec`]: greedy encoding, decoding, and the maximal sequences
//!   `beta(n)` (the "all nines" strings, `1 + <beta(n), H> = H_{n+1}`);
//! - [`blocks`]: proper-block decomposition and the successor operator
//!   `lub`, which adds exactly one to the decoded value;
//! - [`oracle`]: exhaustive desk-scale enumeration used to cross-check the
//!   uniqueness and bijectivity claims against brute force.
//!
//! ```
//! use cgx::{encode, decode, lub, Params};
//! use num_bigint::BigUint;
//!
//! let digits = encode(&BigUint::from(119_562u32), 4).unwrap();
//! assert_eq!(digits.to_string(), "6,5,6,0,5,6");
//! assert_eq!(decode(&digits, 4).unwrap(), BigUint::from(119_562u32));
//!
//! let p = Params::new(4).unwrap();
//! assert_eq!(lub(&digits, &p).unwrap().to_string(), "0,0,0,1,5,6");
//! ```
//!
//! Digit strings are little-endian throughout: the first digit multiplies
//! `H_1 = 1`. See the `examples/` directory for a runnable tour.

pub mod blocks;
pub mod codec;
pub mod error;
pub mod oracle;
pub mod rule;
pub mod sequences;

pub use blocks::{classify_trailing_block, decompose, is_member, lub, successors, Block, BlockKind};
pub use codec::{beta, decode, encode};
pub use error::Error;
pub use oracle::{enumerate_valid, verify_bijection, BijectionReport};
pub use rule::{validate, CoefficientSequence, Params, Violation};
pub use sequences::{alpha, base_term, check_norm_identity, fibonacci, lucas_k, BaseSequence};
