//! Acceptance suite: one test per exit criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`) and holding
//! its stated time budget.

use std::time::{Duration, Instant};

use num_bigint::BigUint;

use cgx::blocks::{is_member, lub, successors};
use cgx::codec::{beta, decode, encode};
use cgx::oracle::verify_bijection;
use cgx::rule::{validate, CoefficientSequence, Params, Violation};
use cgx::sequences::{alpha, base_term, check_norm_identity, fibonacci};

fn seq(digits: &[u64]) -> CoefficientSequence {
    CoefficientSequence::from_u64_digits(digits)
}

/// The four desk-scale configurations of criterion 5.
const DESK_CONFIGS: [(u64, usize, u64); 4] =
    [(2, 10, 17_711), (4, 5, 17_711), (6, 4, 121_393), (8, 3, 121_393)];

#[test]
fn criterion_01_alpha_constant() {
    let start = Instant::now();
    assert_eq!(alpha(8), "0.39441967");
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "alpha(8) took {elapsed:?}, budget is 1s"
    );
    println!("criterion 01 (alpha constant): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_parameter_table() {
    let p2 = Params::new(2).unwrap();
    assert_eq!(p2.digit_cap(), &BigUint::from(2u32));
    assert_eq!(p2.first_digit_cap(), &BigUint::from(2u32));
    let p4 = Params::new(4).unwrap();
    assert_eq!(p4.digit_cap(), &BigUint::from(6u32));
    assert_eq!(p4.first_digit_cap(), &BigUint::from(7u32));
    println!("criterion 02 (parameter table): PASS");
}

#[test]
fn criterion_03_worked_strings() {
    let p4 = Params::new(4).unwrap();
    for digits in [
        &[6u64, 5, 5, 5, 6, 0, 2, 5, 6][..],
        &[7, 4, 5, 5, 6, 5, 5][..],
        &[6, 6, 3, 5, 5, 0, 4][..],
    ] {
        assert_eq!(validate(&seq(digits), &p4), Ok(()), "{digits:?} must be valid");
    }
    let p2 = Params::new(2).unwrap();
    match validate(&seq(&[2, 1, 1, 1, 2]), &p2) {
        Err(Violation { item: 2, .. }) => {}
        other => panic!("(2,1,1,1,2) must break item 2, got {other:?}"),
    }
    assert_eq!(validate(&seq(&[1, 1, 1, 1, 2]), &p2), Ok(()));
    println!("criterion 03 (worked strings): PASS");
}

#[test]
fn criterion_04_carry_identity() {
    for d in [2u64, 4, 6, 8, 10, 12] {
        let p = Params::new(d).unwrap();
        for n in 1..=50usize {
            let lhs = decode(&beta(n, &p), d).unwrap() + 1u32;
            let rhs = base_term(d, n + 1).unwrap();
            assert_eq!(lhs, rhs, "1 + <beta({n}), H> != H_{} at d={d}", n + 1);
        }
    }
    println!("criterion 04 (carry identity): PASS");
}

#[test]
fn criterion_05_bijectivity_desk_scale() {
    for (d, max_order, count) in DESK_CONFIGS {
        let start = Instant::now();
        let report = verify_bijection(max_order, d).unwrap();
        let elapsed = start.elapsed();
        assert!(report.ok, "bijection failed: {report:?}");
        assert_eq!(report.count, count, "count mismatch at d={d}, L={max_order}");
        assert_eq!(report.expected, count);
        assert!(
            elapsed < Duration::from_secs(30),
            "verify_bijection({max_order}, {d}) took {elapsed:?}, budget is 30s"
        );
        println!(
            "criterion 05 (bijectivity d={d} L={max_order}, {count} values): PASS in {elapsed:?}"
        );
    }
}

#[test]
fn criterion_06_successor_theorem() {
    let start = Instant::now();
    // eval(lub^n(0)) = n up to a million.
    for d in [2u64, 4] {
        let p = Params::new(d).unwrap();
        let mut n = BigUint::from(0u32);
        for s in successors(&CoefficientSequence::zero(), 1_000_000, &p).unwrap() {
            n += 1u32;
            assert_eq!(decode(&s, d).unwrap(), n, "eval(lub^{n}(0)) != {n} at d={d}");
        }
        assert_eq!(n, BigUint::from(1_000_000u32));
    }
    // lub agrees with encode(decode + 1) on every desk-scale sequence.
    for (d, max_order, _) in DESK_CONFIGS {
        let p = Params::new(d).unwrap();
        for e in cgx::oracle::enumerate_valid(max_order, &p).unwrap() {
            let via_lub = lub(&e, &p).unwrap();
            let via_codec = encode(&(decode(&e, d).unwrap() + 1u32), d).unwrap();
            assert_eq!(via_lub, via_codec, "successors disagree after {e}");
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "successor theorem checks took {elapsed:?}, budget is 60s"
    );
    println!("criterion 06 (successor theorem, 2x10^6 steps + desk agreement): PASS in {elapsed:?}");
}

#[test]
fn criterion_07_rule_set_equals_block_set() {
    // validate and is_member must agree on every digit string with digits
    // <= B, exhaustively.
    for (d, max_len) in [(2u64, 6usize), (4, 4)] {
        let p = Params::new(d).unwrap();
        let b = u64::try_from(p.first_digit_cap()).unwrap();
        let mut digits = vec![0u64; max_len];
        let mut checked = 0u64;
        loop {
            let s = CoefficientSequence::from_u64_digits(&digits);
            let by_rule = validate(&s, &p).is_ok();
            let by_blocks = is_member(&s, &p);
            assert_eq!(
                by_rule, by_blocks,
                "rule and blocks disagree on {digits:?} at d={d}"
            );
            checked += 1;
            // odometer over {0..B}^max_len
            let mut pos = 0;
            loop {
                if pos == max_len {
                    break;
                }
                if digits[pos] < b {
                    digits[pos] += 1;
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == max_len {
                break;
            }
        }
        assert_eq!(checked, (b + 1).pow(max_len as u32));
        println!("criterion 07 (rule = blocks, d={d}, {checked} strings): PASS");
    }
    // the order-1 lower-block boundary case
    let p2 = Params::new(2).unwrap();
    let one = seq(&[1]);
    assert_eq!(validate(&one, &p2), Ok(()));
    assert!(is_member(&one, &p2));
    println!("criterion 07 (boundary string \"1\" at d=2): PASS");
}

#[test]
fn criterion_08_lub_worked_example() {
    let p4 = Params::new(4).unwrap();
    let before = seq(&[6, 5, 6, 0, 5, 6]);
    let after = lub(&before, &p4).unwrap();
    assert_eq!(after, seq(&[0, 0, 0, 1, 5, 6]));
    let delta = decode(&after, 4).unwrap() - decode(&before, 4).unwrap();
    assert_eq!(delta, BigUint::from(1u32));
    println!("criterion 08 (lub worked example): PASS");
}

#[test]
fn criterion_09_identity_suite() {
    for d in 1..=60u64 {
        assert!(check_norm_identity(d), "norm identity failed at d={d}");
    }
    for d in (2..=20u64).step_by(2) {
        for k in 1..=40u64 {
            assert_eq!(
                base_term(d, k as usize).unwrap(),
                fibonacci(2 + d * (k - 1)).unwrap(),
                "base term mismatch at d={d}, k={k}"
            );
        }
    }
    println!("criterion 09 (identity suite): PASS");
}

#[test]
fn criterion_10_lex_value_isomorphism() {
    for (d, max_order, _) in DESK_CONFIGS {
        let p = Params::new(d).unwrap();
        let all = cgx::oracle::enumerate_valid(max_order, &p).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]), "enumeration not sorted");
        let mut expected = BigUint::from(0u32);
        for e in &all {
            assert_eq!(
                decode(e, d).unwrap(),
                expected,
                "lex position of {e} does not match its value at d={d}"
            );
            expected += 1u32;
        }
        println!(
            "criterion 10 (lex/value isomorphism d={d} L={max_order}): PASS"
        );
    }
}
