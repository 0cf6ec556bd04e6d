//! Split digit strings into their unique block decompositions.
//!
//!     cargo run --example block_decomposition

use cgx::{decompose, is_member, validate, CoefficientSequence, Params};

fn show(text: &str, p: &Params) {
    let e: CoefficientSequence = text.parse().unwrap();
    match decompose(&e, p) {
        Ok(blocks) => {
            let rendered: Vec<String> = blocks
                .iter()
                .map(|b| format!("{b}[{}]", b.kind.tag()))
                .collect();
            println!("  \"{text}\" = {}", rendered.join(" v "));
        }
        Err(err) => println!("  \"{text}\" -> {err}"),
    }
}

fn main() {
    let p = Params::new(4).unwrap();
    println!("d = 4 (A = 6, B = 7):");
    show("5,5,6,0,5,6,0,2,5", &p);
    show("6,5,6,0,5,6", &p);
    show("6,6,3,5,5,0,4", &p);
    // A lower proper block anywhere but the bottom cannot be tiled.
    show("6,4,5,6,5,5,6", &p);

    // Membership in the block language coincides with the digit rule.
    println!("\nblock membership agrees with the rule:");
    for text in ["6,4,5,6,5,5,6", "7,4,5,5,6,5,5", "2"] {
        let e: CoefficientSequence = text.parse().unwrap();
        println!(
            "  \"{text}\": rule {:>7}, blocks {}",
            match validate(&e, &p) {
                Ok(()) => "valid".to_string(),
                Err(v) => format!("invalid ({v})"),
            },
            is_member(&e, &p),
        );
    }
}
