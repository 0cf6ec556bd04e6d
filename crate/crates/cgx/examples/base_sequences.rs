//! The sequences under the hood: F, its Lucas companion K, and the base
//! sequences H for a few spacings, with their defining identities.
//!
//!     cargo run --example base_sequences

use cgx::{base_term, check_norm_identity, fibonacci, lucas_k, BaseSequence};

fn main() {
    println!("k, F_k, K_k:");
    for k in 1..=10u64 {
        println!(
            "  {k:>2}  {:>3}  {:>3}",
            fibonacci(k).unwrap(),
            lucas_k(k).unwrap()
        );
    }

    println!("\nbase sequences H_k = F_(2 + d(k-1)):");
    for d in [2u64, 4, 6] {
        let row: Vec<String> = (1..=7).map(|k| base_term(d, k).unwrap().to_string()).collect();
        println!("  d = {d}: {}", row.join(", "));
    }

    // H satisfies the order-2 recurrence H_{k+2} = K_d H_{k+1} - H_k.
    let d = 6;
    let seq = BaseSequence::new(d).unwrap();
    let k_d = lucas_k(d).unwrap();
    println!("\nrecurrence at d = {d} (K_{d} = {k_d}):");
    for k in 1..=4usize {
        println!(
            "  {} * {} - {} = {}",
            k_d,
            seq.term(k + 1),
            seq.term(k),
            seq.term(k + 2)
        );
    }

    // The norm identity behind that recurrence.
    println!("\nK_d^2 - 5 F_d^2 = 4(-1)^d holds for d = 1..=60:");
    let all = (1..=60u64).all(check_norm_identity);
    println!("  {all}");
}
