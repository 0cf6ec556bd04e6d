//! Walk the numeration system in order with the successor operator.
//!
//!     cargo run --example successors

use cgx::{decode, lub, successors, CoefficientSequence, Params};

fn main() {
    let p = Params::new(4).unwrap();

    // Counting from zero: plain increments until the first digit fills up
    // at B = 7, then a carry into the second position.
    println!("first steps from zero at d = 4:");
    for (i, s) in successors(&CoefficientSequence::zero(), 10, &p)
        .unwrap()
        .enumerate()
    {
        println!("  {:>2} -> \"{s}\"", i + 1);
    }

    // The carry of a maximal prefix: (6,5,6) is the lex-greatest string of
    // order 3, so one more step rolls all of it over, like 999 -> 1000.
    let e: CoefficientSequence = "6,5,6,0,5,6".parse().unwrap();
    let next = lub(&e, &p).unwrap();
    println!("\nmaximal-prefix carry:");
    println!("  \"{e}\"  = {}", decode(&e, 4).unwrap());
    println!("  \"{next}\" = {}", decode(&next, 4).unwrap());

    // The stream is lazy; a long walk costs only the steps taken.
    let p2 = Params::new(2).unwrap();
    let millionth = successors(&CoefficientSequence::zero(), 1_000_000, &p2)
        .unwrap()
        .last()
        .unwrap();
    println!("\nlub^1000000(0) at d = 2 is \"{millionth}\"");
    println!("decodes to {}", decode(&millionth, 2).unwrap());
}
