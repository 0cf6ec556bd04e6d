//! Exhaustively confirm the uniqueness theorem at desk scale: enumerate
//! every rule-abiding string up to a maximal order, decode them all, and
//! check the values are exactly 0, 1, ..., H_{L+1} - 1 with encode landing
//! back on each string.
//!
//!     cargo run --example verify_bijection

use cgx::verify_bijection;

fn main() {
    for (d, max_order) in [(2u64, 10usize), (4, 5), (6, 4), (8, 3)] {
        let report = verify_bijection(max_order, d).unwrap();
        println!(
            "d = {d:>2}, order <= {max_order}: {} sequences, values {}..={}, ok = {}",
            report.count, report.min_value, report.max_value, report.ok
        );
        assert!(report.ok);
    }
    println!("\nfull report for the smallest case:");
    let report = verify_bijection(2, 2).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
