//! Round-trip a few integers through the digit system.
//!
//!     cargo run --example encode_decode

use cgx::{decode, encode, validate, Params};
use num_bigint::BigUint;

fn main() {
    // d = 2 is the classical system: digits 0..2 over F_2, F_4, F_6, ...
    println!("d = 2, the classical expansion:");
    for n in [0u32, 1, 7, 19, 20, 21, 100] {
        let digits = encode(&BigUint::from(n), 2).unwrap();
        println!("  {n:>4} -> \"{digits}\"");
    }

    // d = 4 uses F_2, F_6, F_10, ... with digits up to A = 6 (B = 7 first).
    println!("\nd = 4, wider digits:");
    let p = Params::new(4).unwrap();
    println!(
        "  caps: A = {} (positions >= 2), B = {} (first position)",
        p.digit_cap(),
        p.first_digit_cap()
    );
    for n in [119_562u64, 119_563] {
        let digits = encode(&BigUint::from(n), 4).unwrap();
        let back = decode(&digits, 4).unwrap();
        assert_eq!(back, BigUint::from(n));
        assert!(validate(&digits, &p).is_ok());
        println!("  {n} -> \"{digits}\" -> {back}");
    }

    // Arbitrary precision end to end.
    let n: BigUint = "340282366920938463463374607431768211456".parse().unwrap(); // 2^128
    for d in [2u64, 10, 40] {
        let digits = encode(&n, d).unwrap();
        println!(
            "\n2^128 at d = {d}: {} digits, top digit {}",
            digits.ord(),
            digits.digit(digits.ord())
        );
        assert_eq!(decode(&digits, d).unwrap(), n);
    }
}
