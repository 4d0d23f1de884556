//! Applies seeded random inner automorphisms to every catalog entry and
//! checks that the class, parameters included, does not move.
//!
//! ```text
//! cargo run --example conjugation_roundtrip -- [trials] [complexity]
//! ```

use so4::catalog::enumerate_catalog;
use so4::classify::classify;
use so4::conjugacy::random_inner;

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("a number"));
    let trials = args.next().unwrap_or(20);
    let complexity = args.next().unwrap_or(3);
    let entries = enumerate_catalog();
    let mut failures = 0;
    for seed in 0..trials as u64 {
        let phi = random_inner(seed, complexity).unwrap();
        for r in &entries {
            let s = r.subalgebra().unwrap();
            let image = phi.apply_subalgebra(&s);
            if classify(&image).unwrap() != r.label {
                failures += 1;
                println!("seed {seed}: {} moved", r.label);
            }
        }
    }
    println!("{} entries x {trials} automorphisms, {failures} failures", entries.len());

    let phi = random_inner(7, complexity).unwrap();
    let r = &entries[5];
    let image = phi.apply_subalgebra(&r.subalgebra().unwrap());
    println!("\n{} under seed 7 (height {}):", r.label, phi.height());
    for b in image.basis() {
        println!("  {b}");
    }
    let back = phi.inverse().apply_subalgebra(&image);
    println!("inverse restores it: {}", back == r.subalgebra().unwrap());
}
