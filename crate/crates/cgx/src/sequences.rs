//! The integer sequences everything else is built on: the Fibonacci numbers
//! `F`, their Lucas companion `K = (1, 3, 4, 7, 11, ...)`, and for each even
//! spacing `d` the base sequence `H` with `H_k = F_{2 + d(k-1)}`.
//!
//! All arithmetic is exact. Binet's formula never enters any computation;
//! it only motivates the norm identity checked by [`check_norm_identity`].

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// `F_k` with `(F_1, F_2) = (1, 1)`, by iteration.
pub fn fibonacci(k: u64) -> Result<BigUint, Error> {
    if k == 0 {
        return Err(Error::IndexMustBePositive);
    }
    let mut a = BigUint::one();
    let mut b = BigUint::one();
    for _ in 1..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// `K_k` with `(K_1, K_2) = (1, 3)`, the same recurrence as `F`.
pub fn lucas_k(k: u64) -> Result<BigUint, Error> {
    if k == 0 {
        return Err(Error::IndexMustBePositive);
    }
    let mut a = BigUint::one();
    let mut b = BigUint::from(3u32);
    for _ in 1..k {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// Checks `K_d^2 - 5 F_d^2 = 4 (-1)^d` exactly. Holds for every `d >= 1`.
pub fn check_norm_identity(d: u64) -> bool {
    assert!(d >= 1, "d must be at least 1");
    let k = BigInt::from(lucas_k(d).expect("d >= 1"));
    let f = BigInt::from(fibonacci(d).expect("d >= 1"));
    let lhs = &k * &k - 5 * &f * &f;
    let rhs = if d % 2 == 0 {
        BigInt::from(4)
    } else {
        BigInt::from(-4)
    };
    lhs == rhs
}

struct Table {
    /// `K_d`, the multiplier in `H_{k+2} = K_d H_{k+1} - H_k`.
    multiplier: BigUint,
    /// `terms[i] = H_{i+1}`; append-only, extended under the write lock.
    terms: RwLock<Vec<BigUint>>,
}

static TABLES: OnceLock<Mutex<HashMap<u64, Arc<Table>>>> = OnceLock::new();

/// Memoized table of the base sequence `H_k = F_{2 + d(k-1)}` for one even
/// spacing `d`. Handles for the same `d` share one process-wide table, so
/// terms are computed once. Readers see a fully published prefix; growing
/// the table takes the write lock.
#[derive(Clone)]
pub struct BaseSequence {
    d: u64,
    table: Arc<Table>,
}

impl BaseSequence {
    pub fn new(d: u64) -> Result<Self, Error> {
        if d == 0 || d % 2 != 0 {
            return Err(Error::UnsupportedInterval { d });
        }
        let tables = TABLES.get_or_init(Default::default);
        let table = tables
            .lock()
            .expect("base sequence registry poisoned")
            .entry(d)
            .or_insert_with(|| {
                let multiplier = lucas_k(d).expect("d >= 2");
                let h2 = fibonacci(2 + d).expect("index >= 2");
                Arc::new(Table {
                    multiplier,
                    terms: RwLock::new(vec![BigUint::one(), h2]),
                })
            })
            .clone();
        Ok(Self { d, table })
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    fn ensure(&self, upto: usize) {
        if self.table.terms.read().expect("table poisoned").len() >= upto {
            return;
        }
        let mut terms = self.table.terms.write().expect("table poisoned");
        while terms.len() < upto {
            let n = terms.len();
            // K_d H_{k+1} > H_{k+1} + H_k, so the subtraction cannot underflow.
            let next = &self.table.multiplier * &terms[n - 1] - &terms[n - 2];
            terms.push(next);
        }
    }

    /// `H_k`, 1-indexed.
    pub fn term(&self, k: usize) -> BigUint {
        assert!(k >= 1, "terms are 1-indexed");
        self.ensure(k);
        self.table.terms.read().expect("table poisoned")[k - 1].clone()
    }

    /// Runs `f` over the slice `[H_1, ..., H_upto]` without cloning it.
    pub fn with_prefix<T>(&self, upto: usize, f: impl FnOnce(&[BigUint]) -> T) -> T {
        self.ensure(upto.max(1));
        let terms = self.table.terms.read().expect("table poisoned");
        f(&terms[..upto])
    }

    /// Largest `k` with `H_k <= n`, or `None` when `n = 0`.
    pub fn position_of_max_le(&self, n: &BigUint) -> Option<usize> {
        if n.is_zero() {
            return None;
        }
        loop {
            {
                let terms = self.table.terms.read().expect("table poisoned");
                if terms.last().expect("seeded with two terms") > n {
                    // Strictly increasing, so the count of terms <= n is the
                    // 1-based position of the largest such term.
                    return Some(terms.partition_point(|h| h <= n));
                }
            }
            let len = self.table.terms.read().expect("table poisoned").len();
            self.ensure(len + 8);
        }
    }
}

/// `H_k = F_{2 + d(k-1)}` for even `d`, from the memoized per-`d` table.
pub fn base_term(d: u64, k: usize) -> Result<BigUint, Error> {
    Ok(BaseSequence::new(d)?.term(k))
}

/// The constant `alpha = (1 + sum_{k>=1} 1/F_{2k})^{-1} ~ 0.39441967`,
/// rounded to `decimal_digits` digits after the point.
///
/// The sum is taken with exact rationals; terms stop once `F_{2k}` exceeds
/// `10^(decimal_digits + 2)`. The tail is then below `2 * 10^-(digits+2)`
/// because consecutive even-indexed Fibonacci terms grow by more than a
/// factor of two, so the rounded output is unaffected.
pub fn alpha(decimal_digits: usize) -> String {
    assert!(decimal_digits >= 1, "need at least one digit");
    let cutoff = BigUint::from(10u32).pow(decimal_digits as u32 + 2);
    let mut sum = BigRational::one();
    // Walk F_{2k} directly: (a, b) = (F_{2k-1}, F_{2k}).
    let mut a = BigUint::one();
    let mut b = BigUint::one();
    while b <= cutoff {
        sum += BigRational::new(BigInt::one(), BigInt::from(b.clone()));
        // two Fibonacci steps
        a += &b;
        b += &a;
    }
    let value = sum.recip();
    debug_assert!(value.is_positive());

    let scale = BigInt::from(10u32).pow(decimal_digits as u32);
    let scaled = value * BigRational::from_integer(scale.clone());
    // Round half up; numerator and denominator are positive.
    let mut q = scaled.numer() / scaled.denom();
    let r = scaled.numer() % scaled.denom();
    if 2u32 * r >= *scaled.denom() {
        q += 1;
    }
    format!(
        "{}.{:0width$}",
        &q / &scale,
        &q % &scale,
        width = decimal_digits
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_matches_seeds_and_iteration() {
        assert_eq!(fibonacci(1).unwrap(), BigUint::one());
        assert_eq!(fibonacci(2).unwrap(), BigUint::one());
        assert_eq!(fibonacci(10).unwrap(), BigUint::from(55u32));
        assert_eq!(fibonacci(0), Err(Error::IndexMustBePositive));
    }

    #[test]
    fn lucas_matches_printed_prefix() {
        let want: Vec<u32> = vec![1, 3, 4, 7, 11, 18, 29];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(lucas_k(i as u64 + 1).unwrap(), BigUint::from(*w));
        }
        assert_eq!(lucas_k(5).unwrap(), BigUint::from(11u32));
        assert_eq!(lucas_k(7).unwrap(), BigUint::from(29u32));
        assert_eq!(lucas_k(0), Err(Error::IndexMustBePositive));
    }

    #[test]
    fn base_terms_match_fibonacci_directly() {
        assert_eq!(base_term(2, 3).unwrap(), BigUint::from(8u32));
        assert_eq!(base_term(4, 3).unwrap(), BigUint::from(55u32));
        assert_eq!(base_term(4, 5).unwrap(), BigUint::from(2584u32));
        for d in (2..=20).step_by(2) {
            for k in 1..=40u64 {
                assert_eq!(
                    base_term(d, k as usize).unwrap(),
                    fibonacci(2 + d * (k - 1)).unwrap(),
                    "H_k = F_(2+d(k-1)) failed at d={d}, k={k}"
                );
            }
        }
    }

    #[test]
    fn odd_or_zero_interval_is_rejected() {
        assert_eq!(base_term(3, 1), Err(Error::UnsupportedInterval { d: 3 }));
        assert_eq!(base_term(0, 1), Err(Error::UnsupportedInterval { d: 0 }));
        assert!(BaseSequence::new(7).is_err());
    }

    #[test]
    fn table_seeds_and_recurrence() {
        for d in [2u64, 4, 6, 10] {
            let seq = BaseSequence::new(d).unwrap();
            assert_eq!(seq.term(1), BigUint::one());
            assert_eq!(seq.term(2), fibonacci(2 + d).unwrap());
            let k_d = lucas_k(d).unwrap();
            let mut prev = seq.term(1);
            let mut cur = seq.term(2);
            for k in 3..=30 {
                let next = seq.term(k);
                assert_eq!(next, &k_d * &cur - &prev, "recurrence at d={d}, k={k}");
                assert!(cur > prev, "strictly increasing at d={d}, k={k}");
                prev = cur;
                cur = next;
            }
        }
    }

    #[test]
    fn position_of_max_le_brackets_the_value() {
        let seq = BaseSequence::new(2).unwrap();
        assert_eq!(seq.position_of_max_le(&BigUint::zero()), None);
        assert_eq!(seq.position_of_max_le(&BigUint::one()), Some(1));
        assert_eq!(seq.position_of_max_le(&BigUint::from(2u32)), Some(1));
        assert_eq!(seq.position_of_max_le(&BigUint::from(3u32)), Some(2));
        assert_eq!(seq.position_of_max_le(&BigUint::from(20u32)), Some(3));
        assert_eq!(seq.position_of_max_le(&BigUint::from(21u32)), Some(4));
    }

    #[test]
    fn norm_identity_holds_for_small_d() {
        assert!(check_norm_identity(1)); // 1 - 5 = -4
        assert!(check_norm_identity(2)); // 9 - 5 = 4
        assert!(check_norm_identity(60));
        for d in 1..=60 {
            assert!(check_norm_identity(d), "norm identity failed at d={d}");
        }
    }

    #[test]
    fn alpha_reference_digits() {
        assert_eq!(alpha(8), "0.39441967");
        assert_eq!(alpha(1), "0.4");
        // Recomputing at higher precision agrees on the first eight digits.
        assert!(alpha(12).starts_with("0.39441967"));
    }

    #[test]
    fn alpha_precisions_are_consistent() {
        // The higher-precision value, re-rounded to p digits, must reproduce
        // the p-digit answer exactly.
        for p in [4usize, 8, 12] {
            let coarse = alpha(p);
            let fine = alpha(p + 4);
            let reround = {
                let digits: String = fine[2..].to_string();
                let as_int: u128 = digits.parse().unwrap();
                let down = as_int / 10_000;
                let rounded = if as_int % 10_000 >= 5_000 { down + 1 } else { down };
                format!("0.{rounded:0width$}", width = p)
            };
            assert_eq!(coarse, reround, "alpha({p}) vs re-rounded alpha({})", p + 4);
        }
    }

    #[test]
    fn shared_table_is_safe_across_threads() {
        let handles: Vec<_> = (0..8)
            .map(|i| {
                std::thread::spawn(move || {
                    let seq = BaseSequence::new(6).unwrap();
                    seq.term(20 + i)
                })
            })
            .collect();
        let last = fibonacci(2 + 6 * 26).unwrap();
        for (i, h) in handles.into_iter().enumerate() {
            let got = h.join().unwrap();
            if i == 7 {
                assert_eq!(got, last);
            }
        }
    }
}
