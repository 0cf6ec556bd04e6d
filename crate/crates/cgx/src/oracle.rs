//! Brute-force ground truth at desk scale.
//!
//! The enumerator generates every rule-abiding string up to a given order
//! by depth-first digit choice with its own incremental rule check, so it
//! shares no logic with `validate`, `encode`, or the block machinery it is
//! used to cross-examine. [`verify_bijection`] then checks that the decoded
//! values are exactly `0..H_{L+1}` with no repeats and that `encode`
//! reproduces each enumerated string.

use num_bigint::BigUint;
use serde::Serialize;

use crate::codec::{decode, encode};
use crate::error::Error;
use crate::rule::{CoefficientSequence, Params};
use crate::sequences::BaseSequence;

/// Ceiling on `H_{L+1}` (the number of sequences enumerated) so exhaustive
/// runs stay at seconds scale. The CLI lets `CGX_DESK_LIMIT` raise it.
pub const DEFAULT_DESK_LIMIT: u64 = 10_000_000;

/// Every rule-abiding sequence of order at most `max_order`, sorted by the
/// high-index-dominant lexicographic order, under the default desk limit.
pub fn enumerate_valid(
    max_order: usize,
    p: &Params,
) -> Result<Vec<CoefficientSequence>, Error> {
    enumerate_valid_with_limit(max_order, p, DEFAULT_DESK_LIMIT)
}

pub fn enumerate_valid_with_limit(
    max_order: usize,
    p: &Params,
    limit: u64,
) -> Result<Vec<CoefficientSequence>, Error> {
    assert!(max_order >= 1, "max_order is a positive order bound");
    let expected = expected_count(max_order, p, limit)?;

    // The guard bounds every digit below H_{L+1} <= limit, so u64 digits
    // are exact here.
    let a = u64::try_from(p.digit_cap()).expect("cap below the desk limit");
    let b = u64::try_from(p.first_digit_cap()).expect("cap below the desk limit");

    let mut out = Vec::with_capacity(usize::try_from(expected).unwrap_or(0));
    let mut digits = vec![0u64; max_order];
    dfs(&mut digits, 0, max_order, a, b, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// `H_{L+1}`, the number of sequences the enumeration must produce, after
/// checking it against the desk-scale guard.
fn expected_count(max_order: usize, p: &Params, limit: u64) -> Result<u64, Error> {
    let expected = BaseSequence::new(p.d())?.term(max_order + 1);
    if expected > BigUint::from(limit) {
        return Err(Error::DeskScaleExceeded { expected, limit });
    }
    Ok(u64::try_from(&expected).expect("checked against the limit"))
}

/// Depth-first digit choice over positions `filled+1 ..= max_order`.
/// `digits[..filled]` always satisfies the rule, which by prefix closure is
/// exactly the condition for some completion to exist.
fn dfs(
    digits: &mut Vec<u64>,
    filled: usize,
    max_order: usize,
    a: u64,
    b: u64,
    out: &mut Vec<CoefficientSequence>,
) {
    if filled == max_order {
        let mut trimmed = digits.clone();
        while trimmed.last() == Some(&0) {
            trimmed.pop();
        }
        out.push(CoefficientSequence::from_u64_digits(&trimmed));
        return;
    }
    let cap = if filled == 0 { b } else { a };
    for v in 0..=cap {
        if v == a && filled > 0 && !maximal_digit_allowed(&digits[..filled], a, b) {
            continue;
        }
        digits[filled] = v;
        dfs(digits, filled + 1, max_order, a, b, out);
    }
    digits[filled] = 0;
}

/// Whether appending the digit `A` after `prefix` keeps the rule intact:
/// walking down through the run of `A-1`s, the next digit must not be
/// another `A` (item 3), and if the run reaches the first position, that
/// digit must stay below `B` (item 2). Digits up to `A-1` are always fine.
fn maximal_digit_allowed(prefix: &[u64], a: u64, b: u64) -> bool {
    let mut i = prefix.len();
    while i >= 2 && prefix[i - 1] == a - 1 {
        i -= 1;
    }
    if i == 1 {
        prefix[0] < b
    } else {
        prefix[i - 1] != a
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DuplicateWitness {
    pub value: u64,
    pub first: String,
    pub second: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EncodeMismatch {
    pub value: u64,
    pub enumerated: String,
    pub encoded: String,
}

/// Outcome of one exhaustive bijection check.
#[derive(Debug, Clone, Serialize)]
pub struct BijectionReport {
    pub d: u64,
    pub max_order: usize,
    /// Number of sequences the enumeration produced.
    pub count: u64,
    /// `H_{L+1}`, the count the uniqueness theorem demands.
    pub expected: u64,
    pub min_value: u64,
    pub max_value: u64,
    pub duplicates: Vec<DuplicateWitness>,
    pub missing: Vec<u64>,
    pub encode_mismatches: Vec<EncodeMismatch>,
    pub ok: bool,
}

/// Decodes every enumerated sequence of order `<= max_order`, demands the
/// value set be exactly `{0, ..., H_{L+1} - 1}`, and re-encodes every value
/// to confirm it lands back on the enumerated string.
pub fn verify_bijection(max_order: usize, d: u64) -> Result<BijectionReport, Error> {
    verify_bijection_with_limit(max_order, d, DEFAULT_DESK_LIMIT)
}

pub fn verify_bijection_with_limit(
    max_order: usize,
    d: u64,
    limit: u64,
) -> Result<BijectionReport, Error> {
    let p = Params::new(d)?;
    let all = enumerate_valid_with_limit(max_order, &p, limit)?;
    let expected = expected_count(max_order, &p, limit)?;

    let mut first_at: Vec<u32> = vec![u32::MAX; expected as usize];
    let mut duplicates = Vec::new();
    let mut encode_mismatches = Vec::new();
    let mut min_value = u64::MAX;
    let mut max_value = 0u64;

    for (i, seq) in all.iter().enumerate() {
        let value = decode(seq, d)?;
        let value = u64::try_from(&value).unwrap_or(u64::MAX);
        min_value = min_value.min(value);
        max_value = max_value.max(value);
        if value < expected {
            let slot = &mut first_at[value as usize];
            if *slot == u32::MAX {
                *slot = i as u32;
            } else {
                duplicates.push(DuplicateWitness {
                    value,
                    first: all[*slot as usize].to_string(),
                    second: seq.to_string(),
                });
            }
        }
        let re = encode(&BigUint::from(value), d)?;
        if re != *seq {
            encode_mismatches.push(EncodeMismatch {
                value,
                enumerated: seq.to_string(),
                encoded: re.to_string(),
            });
        }
    }

    let missing: Vec<u64> = first_at
        .iter()
        .enumerate()
        .filter(|(_, &slot)| slot == u32::MAX)
        .map(|(v, _)| v as u64)
        .collect();
    let count = all.len() as u64;
    let ok = count == expected
        && duplicates.is_empty()
        && missing.is_empty()
        && encode_mismatches.is_empty();

    Ok(BijectionReport {
        d,
        max_order,
        count,
        expected,
        min_value,
        max_value,
        duplicates,
        missing,
        encode_mismatches,
        ok,
    })
}
