//! Encoding and decoding between non-negative integers and digit strings.
//!
//! `decode` is the plain dot product against the base sequence. `encode` is
//! the greedy construction: peel off the largest multiple of the largest
//! base term that fits, with a special carry-aware path when that multiple
//! reaches the cap `A`. The two are mutually inverse on rule-abiding
//! strings, which the oracle module checks exhaustively at desk scale.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::Error;
use crate::rule::{validate, CoefficientSequence, Params};
use crate::sequences::BaseSequence;

/// The maximal coefficient sequence of order `n`: the lex-greatest
/// rule-abiding string among those of order at most `n`. It plays the role
/// of a run of nines: `1 + <beta(n), H> = H_{n+1}`.
pub fn beta(n: usize, p: &Params) -> CoefficientSequence {
    assert!(n >= 1, "the maximal sequence has positive order");
    let a = p.digit_cap();
    let b = p.first_digit_cap();
    let digits = match n {
        1 => vec![b.clone()],
        2 => vec![b - 1u32, a.clone()],
        _ => {
            let mut v = Vec::with_capacity(n);
            v.push(b - 1u32);
            v.resize(n - 1, a - 1u32);
            v.push(a.clone());
            v
        }
    };
    let seq = CoefficientSequence::new(digits);
    debug_assert_eq!(validate(&seq, p), Ok(()));
    seq
}

/// `sum_k e_k H_k`. Defined for any digit string; validity is not required.
pub fn decode(eps: &CoefficientSequence, d: u64) -> Result<BigUint, Error> {
    let base = BaseSequence::new(d)?;
    if eps.is_zero() {
        return Ok(BigUint::zero());
    }
    let digits = eps.digits();
    Ok(base.with_prefix(digits.len(), |h| {
        let mut total = BigUint::zero();
        for (digit, term) in digits.iter().zip(h) {
            if !digit.is_zero() {
                total += digit * term;
            }
        }
        total
    }))
}

/// The unique rule-abiding digit string for `n`, by the greedy algorithm.
///
/// Working from the top position downward: let `l` be the largest index
/// with `H_l <= n` and `a = floor(n / H_l) <= A`. When `a < A` the digit is
/// written and the remainder carries on below. When `a = A` the string may
/// need a run `(A-1, ..., A-1, A)` extending down from `l`; the run is
/// grown greedily, the digit under it is `b <= A-2`, and the remainder
/// continues below the run. Zero encodes to the empty sequence.
pub fn encode(n: &BigUint, d: u64) -> Result<CoefficientSequence, Error> {
    let base = BaseSequence::new(d)?;
    let p = Params::new(d)?;
    let a = p.digit_cap();
    let b = p.first_digit_cap();
    if n.is_zero() {
        return Ok(CoefficientSequence::zero());
    }
    if n <= b {
        return Ok(CoefficientSequence::new(vec![n.clone()]));
    }

    let top = base
        .position_of_max_le(n)
        .expect("n >= 1 has a base term below it");
    let h: Vec<BigUint> = base.with_prefix(top, |prefix| prefix.to_vec());
    let term = |k: usize| &h[k - 1]; // 1-indexed view

    let mut digits = vec![BigUint::zero(); top];
    let mut rem = n.clone();
    let mut bound = top; // digits may only be written at or below this position
    while !rem.is_zero() {
        if rem <= *b {
            digits[0] = rem;
            break;
        }
        // Largest l <= bound with H_l <= rem.
        let l = h[..bound].partition_point(|t| t <= &rem);
        debug_assert!(l >= 2);
        let quot = &rem / term(l);
        debug_assert!(quot <= *a, "greedy digit exceeded the cap");
        if quot < *a {
            rem -= &quot * term(l);
            digits[l - 1] = quot;
        } else if l == 2 {
            rem -= a * term(2);
            digits[1] = a.clone();
            debug_assert!(rem < *b);
        } else {
            // quot = A at l >= 3: grow the run of (A-1)s below it.
            let a_minus_1 = a - 1u32;
            let mut run_total = a * term(l);
            let mut low = l; // run occupies positions low..l-1 (empty when low = l)
            while low > 1 && &run_total + &a_minus_1 * term(low - 1) <= rem {
                run_total += &a_minus_1 * term(low - 1);
                low -= 1;
            }
            if low <= 2 {
                // Everything from position 2 up is forced; what is left is
                // the first digit, strictly below B.
                let mut used = a * term(l);
                for k in 2..l {
                    used += &a_minus_1 * term(k);
                }
                digits[l - 1] = a.clone();
                for k in 2..l {
                    digits[k - 1] = a_minus_1.clone();
                }
                let first = rem - used;
                debug_assert!(first < *b);
                digits[0] = first;
                break;
            }
            digits[l - 1] = a.clone();
            for k in low..l {
                digits[k - 1] = a_minus_1.clone();
            }
            rem -= run_total;
            // Digit under the run; maximality of the run keeps it <= A - 2.
            let under = &rem / term(low - 1);
            debug_assert!(&under + 1u32 < *a);
            rem -= &under * term(low - 1);
            digits[low - 2] = under;
            bound = low - 2;
            continue;
        }
        bound = l - 1;
    }
    let result = CoefficientSequence::new(digits);
    debug_assert_eq!(validate(&result, &p), Ok(()));
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::base_term;

    fn seq(digits: &[u64]) -> CoefficientSequence {
        CoefficientSequence::from_u64_digits(digits)
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn beta_small_orders() {
        let p4 = Params::new(4).unwrap();
        assert_eq!(beta(1, &p4), seq(&[7]));
        assert_eq!(beta(2, &p4), seq(&[6, 6]));
        assert_eq!(beta(3, &p4), seq(&[6, 5, 6]));
        assert_eq!(beta(5, &p4), seq(&[6, 5, 5, 5, 6]));
        let p2 = Params::new(2).unwrap();
        assert_eq!(beta(1, &p2), seq(&[2]));
        assert_eq!(beta(3, &p2), seq(&[1, 1, 2]));
    }

    #[test]
    fn beta_satisfies_the_carry_identity() {
        for d in [2u64, 4, 6, 8, 10, 12] {
            let p = Params::new(d).unwrap();
            for n in 1..=50usize {
                let lhs = decode(&beta(n, &p), d).unwrap() + 1u32;
                assert_eq!(
                    lhs,
                    base_term(d, n + 1).unwrap(),
                    "carry identity failed at d={d}, n={n}"
                );
            }
        }
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            decode(&CoefficientSequence::zero(), 4).unwrap(),
            BigUint::zero()
        );
        assert_eq!(decode(&seq(&[6, 5, 6, 0, 5, 6]), 4).unwrap(), big(119_562));
        assert_eq!(decode(&seq(&[0, 1, 2]), 2).unwrap(), big(19));
        assert_eq!(decode(&seq(&[1]), 3), Err(Error::UnsupportedInterval { d: 3 }));
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&big(0), 4).unwrap(), CoefficientSequence::zero());
        assert_eq!(encode(&big(19), 2).unwrap(), seq(&[0, 1, 2]));
        assert_eq!(encode(&big(16), 2).unwrap(), seq(&[0, 0, 2]));
        assert_eq!(encode(&big(119_563), 4).unwrap(), seq(&[0, 0, 0, 1, 5, 6]));
        assert!(encode(&big(1), 1).is_err());
    }

    #[test]
    fn round_trip_at_desk_scale() {
        for d in [2u64, 4, 6, 8] {
            let p = Params::new(d).unwrap();
            for n in 0..3000u64 {
                let n = big(n);
                let e = encode(&n, d).unwrap();
                assert_eq!(validate(&e, &p), Ok(()), "encode({n}, {d}) broke the rule");
                assert_eq!(decode(&e, d).unwrap(), n, "round trip failed for {n}, d={d}");
            }
        }
    }

    #[test]
    fn round_trip_on_large_values() {
        let n: BigUint = "123456789012345678901234567890123456789012345678901"
            .parse()
            .unwrap();
        for d in [2u64, 4, 10] {
            let p = Params::new(d).unwrap();
            let e = encode(&n, d).unwrap();
            assert_eq!(validate(&e, &p), Ok(()));
            assert_eq!(decode(&e, d).unwrap(), n);
        }
    }

    #[test]
    fn encoded_value_stays_below_next_term() {
        for d in [2u64, 4] {
            for n in 1..2000u64 {
                let e = encode(&big(n), d).unwrap();
                let next = base_term(d, e.ord() + 1).unwrap();
                assert!(big(n) < next, "decode bound violated at n={n}, d={d}");
            }
        }
    }
}
