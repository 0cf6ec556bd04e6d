//! The constant alpha = (1 + sum 1/F_2k)^-1 that motivated the d = 2
//! system, at increasing precision.
//!
//!     cargo run --example alpha

use cgx::alpha;

fn main() {
    for digits in [1usize, 4, 8, 16, 32, 64] {
        println!("alpha({digits:>2}) = {}", alpha(digits));
    }
}
