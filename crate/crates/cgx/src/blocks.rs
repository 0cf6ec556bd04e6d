//! Block structure of rule-abiding strings, and the successor operator.
//!
//! Every rule-abiding string splits uniquely into blocks read from position
//! 1 upward: the first block is maximal (`beta`), lower proper, or upper
//! proper; every later block is upper proper. A proper block of order
//! `s >= 2` has the shape `(c, A-1, ..., A-1, A)`; order-1 blocks are bare
//! digits. The leading digit `c` distinguishes the kinds: `c <= A-2` upper,
//! `c <= B-2` lower, `c = B-1` maximal (for order 1 the bounds are `A-1`,
//! `B-1`, and `= B` respectively).
//!
//! The least-upper-bound operator `lub` maps each string to its immediate
//! lexicographic successor, which adds exactly one to the decoded value.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rule::{validate, CoefficientSequence, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// `beta(n)` itself; only valid as the first block.
    Maximal,
    /// Leading digit strictly below the second entry of `beta`; may appear
    /// anywhere.
    UpperProper,
    /// Leading digit strictly below the first entry of `beta`; only valid
    /// as the first block.
    LowerProper,
}

impl BlockKind {
    pub fn tag(self) -> &'static str {
        match self {
            BlockKind::Maximal => "max",
            BlockKind::UpperProper => "upper",
            BlockKind::LowerProper => "lower",
        }
    }
}

/// One block of a decomposition. `digits` is the positional segment
/// little-endian, kept verbatim (a lone zero digit stays `(0)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub kind: BlockKind,
    pub digits: Vec<BigUint>,
}

impl Block {
    pub fn order(&self) -> usize {
        self.digits.len()
    }
}

impl std::fmt::Display for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// Splits off the unique trailing block of a positional digit slice.
///
/// Scanning back from the top: a top digit equal to `A` pulls in the
/// maximal run of `A-1`s below it plus one more digit; any other top digit
/// stands alone as an order-1 block. Returns the block and the untouched
/// prefix. Fails with [`Error::NotDecomposable`] when the segment fits no
/// block kind, carrying the stuck position.
pub fn classify_trailing_block<'a>(
    digits: &'a [BigUint],
    p: &Params,
) -> Result<(Block, &'a [BigUint]), Error> {
    assert!(!digits.is_empty(), "the zero sequence has no trailing block");
    let a = p.digit_cap();
    let b = p.first_digit_cap();
    let a_minus_1 = a - 1u32;
    let len = digits.len();
    let top = &digits[len - 1];

    let block = |kind, from: usize| {
        (
            Block {
                kind,
                digits: digits[from..].to_vec(),
            },
            &digits[..from],
        )
    };

    if len == 1 {
        let kind = if top == b {
            BlockKind::Maximal
        } else if *top <= a_minus_1 {
            BlockKind::UpperProper
        } else if top < b {
            BlockKind::LowerProper
        } else {
            return Err(Error::NotDecomposable { position: 1 });
        };
        return Ok(block(kind, 0));
    }

    if *top <= a_minus_1 {
        return Ok(block(BlockKind::UpperProper, len - 1));
    }
    if top != a {
        return Err(Error::NotDecomposable { position: len });
    }

    // Top digit is A: extend down through the run of (A-1)s.
    let mut j = len - 1;
    while j >= 1 && digits[j - 1] == a_minus_1 {
        j -= 1;
    }
    if j == 0 {
        // The whole slice is (A-1, ..., A-1, A). At d = 2 that is beta
        // itself; for larger d the leading A-1 is within the lower bound.
        let kind = if a_minus_1 == b - 1u32 {
            BlockKind::Maximal
        } else {
            BlockKind::LowerProper
        };
        return Ok(block(kind, 0));
    }
    let lead = &digits[j - 1];
    if lead + 1u32 < *a {
        // lead <= A - 2: an upper proper block, fine in any position.
        return Ok(block(BlockKind::UpperProper, j - 1));
    }
    if j == 1 {
        if *lead == b - 1u32 {
            return Ok(block(BlockKind::Maximal, 0));
        }
        if lead + 1u32 < *b {
            return Ok(block(BlockKind::LowerProper, 0));
        }
    }
    Err(Error::NotDecomposable { position: j })
}

/// The unique decomposition into blocks, lowest positions first. The zero
/// sequence decomposes into no blocks. Errors exactly when the string does
/// not satisfy the rule.
pub fn decompose(eps: &CoefficientSequence, p: &Params) -> Result<Vec<Block>, Error> {
    let mut rest = eps.digits();
    let mut reversed = Vec::new();
    while !rest.is_empty() {
        let (block, prefix) = classify_trailing_block(rest, p)?;
        debug_assert!(
            prefix.is_empty() || block.kind == BlockKind::UpperProper,
            "non-upper block must sit at the bottom"
        );
        reversed.push(block);
        rest = prefix;
    }
    reversed.reverse();
    Ok(reversed)
}

/// Whether the string is built from blocks; agrees with [`validate`] on
/// every digit string whose digits stay at or below `B`.
pub fn is_member(eps: &CoefficientSequence, p: &Params) -> bool {
    decompose(eps, p).is_ok()
}

/// Largest `n` such that the first `n` digits equal `beta(n)`, if any.
///
/// At most one `n` can match: `beta(1)` starts with `B` while every longer
/// `beta` starts with `B - 1`, and among those the position of the closing
/// `A` pins `n` down.
fn beta_prefix_order(digits: &[BigUint], p: &Params) -> Option<usize> {
    let first = digits.first()?;
    let a = p.digit_cap();
    let b = p.first_digit_cap();
    if first == b {
        return Some(1);
    }
    if *first != b - 1u32 {
        return None;
    }
    let a_minus_1 = a - 1u32;
    let mut k = 2;
    while digits.get(k - 1) == Some(&a_minus_1) {
        k += 1;
    }
    if digits.get(k - 1) == Some(a) {
        // A >= 2 separates the closing A from the A-1 run, and B from B-1,
        // so no second order can match.
        debug_assert!(*a >= BigUint::from(2u32));
        Some(k)
    } else {
        None
    }
}

/// In-place successor step; `digits` must already satisfy the rule.
fn lub_in_place(digits: &mut Vec<BigUint>, p: &Params) {
    match beta_prefix_order(digits, p) {
        None => {
            if digits.is_empty() {
                digits.push(BigUint::one());
            } else {
                digits[0] += 1u32;
            }
        }
        Some(n) => {
            // The filled-up prefix carries over into position n + 1.
            for d in digits[..n].iter_mut() {
                d.set_zero();
            }
            if digits.len() == n {
                digits.push(BigUint::one());
            } else {
                digits[n] += 1u32;
            }
        }
    }
}

/// The least upper bound of `eps`: the smallest rule-abiding string that is
/// lexicographically greater. Decodes to exactly `decode(eps) + 1`.
pub fn lub(eps: &CoefficientSequence, p: &Params) -> Result<CoefficientSequence, Error> {
    validate(eps, p).map_err(Error::InvalidInput)?;
    let mut digits = eps.digits().to_vec();
    lub_in_place(&mut digits, p);
    let next = CoefficientSequence::new(digits);
    debug_assert_eq!(validate(&next, p), Ok(()));
    debug_assert!(*eps < next);
    Ok(next)
}

/// Lazy stream of iterated successors: `lub(start)`, `lub^2(start)`, ...
/// limited to `count` elements.
pub fn successors(
    start: &CoefficientSequence,
    count: u64,
    p: &Params,
) -> Result<Successors, Error> {
    validate(start, p).map_err(Error::InvalidInput)?;
    Ok(Successors {
        digits: start.digits().to_vec(),
        remaining: count,
        params: p.clone(),
    })
}

pub struct Successors {
    digits: Vec<BigUint>,
    remaining: u64,
    params: Params,
}

impl Iterator for Successors {
    type Item = CoefficientSequence;

    fn next(&mut self) -> Option<Self::Item> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        lub_in_place(&mut self.digits, &self.params);
        Some(CoefficientSequence::new(self.digits.clone()))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = usize::try_from(self.remaining).ok();
        (n.unwrap_or(usize::MAX), n)
    }
}
