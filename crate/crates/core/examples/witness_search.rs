//! Finds explicit inner automorphisms between equivalent subalgebras.

use so4::catalog::enumerate_catalog;
use so4::conjugacy::{find_witness, random_inner};

fn main() {
    let budget = 200;
    let mut found = 0;
    let entries = enumerate_catalog();
    for (k, r) in entries.iter().enumerate() {
        let s = r.subalgebra().unwrap();
        let t = random_inner(k as u64, 3).unwrap().apply_subalgebra(&s);
        match find_witness(&s, &t, budget) {
            Some(w) => {
                assert_eq!(w.apply_subalgebra(&s), t);
                found += 1;
            }
            None => println!("{}: no witness within {budget}", r.label),
        }
    }
    println!("witnesses found for {found} of {} planted pairs", entries.len());
}
