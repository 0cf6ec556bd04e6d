//! The digit-string data model and the three-item expansion rule.
//!
//! A [`CoefficientSequence`] stores its digits little-endian: the first
//! digit multiplies `H_1`, the second `H_2`, and so on. The text form used
//! everywhere (CLI, fixtures) is the comma-joined little-endian digit list,
//! e.g. `"6,5,6,0,5,6"`; the empty string is the zero sequence.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Error;
use crate::sequences::{fibonacci, lucas_k};

/// Digit caps for one even spacing `d`: positions `>= 2` are capped by
/// `A = K_d - 1`, position 1 by `B = F_{2+d} - 1`. `A <= B`, with equality
/// exactly at `d = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    d: u64,
    digit_cap: BigUint,
    first_digit_cap: BigUint,
}

impl Params {
    pub fn new(d: u64) -> Result<Self, Error> {
        if d == 0 || d % 2 != 0 {
            return Err(Error::UnsupportedInterval { d });
        }
        let digit_cap = lucas_k(d).expect("d >= 2") - 1u32;
        let first_digit_cap = fibonacci(2 + d).expect("index >= 4") - 1u32;
        debug_assert!(digit_cap <= first_digit_cap);
        debug_assert!(digit_cap >= BigUint::from(2u32));
        Ok(Self {
            d,
            digit_cap,
            first_digit_cap,
        })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `A`: the cap on every digit at position 2 and above.
    pub fn digit_cap(&self) -> &BigUint {
        &self.digit_cap
    }

    /// `B`: the cap on the first digit.
    pub fn first_digit_cap(&self) -> &BigUint {
        &self.first_digit_cap
    }
}

/// A finite little-endian digit string, kept in canonical form: no trailing
/// zero digits, so the zero integer is the empty list.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct CoefficientSequence {
    digits: Vec<BigUint>,
}

impl CoefficientSequence {
    pub fn new(mut digits: Vec<BigUint>) -> Self {
        while digits.last().is_some_and(Zero::is_zero) {
            digits.pop();
        }
        Self { digits }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_u64_digits(digits: &[u64]) -> Self {
        Self::new(digits.iter().map(|&v| BigUint::from(v)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    /// The largest index with a nonzero digit; 1 for the zero sequence.
    pub fn ord(&self) -> usize {
        self.digits.len().max(1)
    }

    pub fn digits(&self) -> &[BigUint] {
        &self.digits
    }

    /// 1-indexed digit access; positions past the end read as zero.
    pub fn digit(&self, k: usize) -> BigUint {
        assert!(k >= 1, "digits are 1-indexed");
        self.digits.get(k - 1).cloned().unwrap_or_else(BigUint::zero)
    }

}

/// Orders by the highest differing index: `e < t` iff `e_l < t_l` at the
/// largest index `l` where they differ. This is *not* the left-to-right
/// string order; the dominant digit is the one with the highest index.
impl Ord for CoefficientSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.digits.len().cmp(&other.digits.len()) {
            // Canonical forms: the longer sequence has a nonzero digit where
            // the shorter has an implicit zero.
            Ordering::Less => Ordering::Less,
            Ordering::Greater => Ordering::Greater,
            Ordering::Equal => {
                for (a, b) in self.digits.iter().rev().zip(other.digits.iter().rev()) {
                    match a.cmp(b) {
                        Ordering::Equal => continue,
                        ne => return ne,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl PartialOrd for CoefficientSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CoefficientSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for digit in &self.digits {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{digit}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for CoefficientSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::zero());
        }
        let mut digits = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let digit = token
                .parse::<BigUint>()
                .map_err(|_| Error::InvalidDigitString(format!("bad digit {token:?}")))?;
            digits.push(digit);
        }
        Ok(Self::new(digits))
    }
}

/// Which clause of the rule a digit string breaks, and where. The reported
/// pair is the lowest-index witness; ties at the same index go to the
/// smaller item number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    /// Rule item 1, 2, or 3.
    pub item: u8,
    /// 1-based digit position witnessing the failure. Item 1 points at the
    /// over-cap digit, item 2 at the first digit, item 3 at the second of
    /// the offending pair of maximal digits.
    pub index: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "item {} at index {}", self.item, self.index)
    }
}

/// Checks the three-item rule for even interval `d`:
///
/// 1. `e_1 <= B` and `e_k <= A` for `k >= 2`;
/// 2. if some `m >= 2` has `e_m = A` with `e_k = A - 1` for all
///    `2 <= k <= m-1`, then `e_1 < B`;
/// 3. any two positions `2 <= k < j` with `e_k = e_j = A` have some `c`
///    strictly between them with `e_c <= A - 2`.
///
/// An invalid string is a normal return, not an error.
pub fn validate(eps: &CoefficientSequence, p: &Params) -> Result<(), Violation> {
    let digits = eps.digits();
    if digits.is_empty() {
        return Ok(());
    }
    let a = p.digit_cap();
    let b = p.first_digit_cap();
    let a_minus_1 = a - 1u32;
    let a_minus_2 = a - 2u32;

    // (index, item) candidates; the winner is the smallest pair.
    let mut witness: Option<(usize, u8)> = None;
    let mut record = |index: usize, item: u8| match witness {
        Some(best) if best <= (index, item) => {}
        _ => witness = Some((index, item)),
    };

    // Item 1: first digit over its cap.
    for (i, digit) in digits.iter().enumerate() {
        let cap = if i == 0 { b } else { a };
        if digit > cap {
            record(i + 1, 1);
            break;
        }
    }

    // Item 2: a run of (A-1)s from position 2 ending in A forces e_1 < B.
    if digits[0] == *b {
        let mut m = 2;
        while m <= digits.len() && digits[m - 1] == a_minus_1 {
            m += 1;
        }
        if m <= digits.len() && digits[m - 1] == *a {
            record(1, 2);
        }
    }

    // Item 3: two As at positions >= 2 with nothing <= A - 2 between them.
    let mut open_a = false;
    for (i, digit) in digits.iter().enumerate().skip(1) {
        if digit == a {
            if open_a {
                record(i + 1, 3);
                break;
            }
            open_a = true;
        } else if *digit <= a_minus_2 {
            open_a = false;
        }
    }

    match witness {
        None => Ok(()),
        Some((index, item)) => Err(Violation { item, index }),
    }
}
