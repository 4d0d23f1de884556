//! Derived series, radical and Levi factor of non-solvable subalgebras.

use so4::catalog::{representative_of, ClassLabel};
use so4::lie::Subalgebra;

fn show(name: &str, s: &Subalgebra) {
    println!("{name}: dim {}, derived series {:?}", s.dim(), s.derived_dims());
    match s.levi_decomposition() {
        Ok((levi, radical)) => {
            println!("  levi    {:?}", levi.basis().iter().map(|b| b.to_string()).collect::<Vec<_>>());
            println!("  radical {:?}", radical.basis().iter().map(|b| b.to_string()).collect::<Vec<_>>());
        }
        Err(e) => println!("  {e}; radical is everything: {}", s.radical() == *s),
    }
}

fn main() {
    for label in [
        ClassLabel::A1 { index: 3 },
        ClassLabel::A1PlusJ { index: 2 },
        ClassLabel::A1PlusK2 { index: 1 },
        ClassLabel::M8,
        ClassLabel::Full,
    ] {
        let s = representative_of(&label).unwrap().subalgebra().unwrap();
        show(&label.to_string(), &s);
    }
    let k = representative_of(&ClassLabel::A1 { index: 1 }).unwrap().subalgebra().unwrap().killing_form();
    println!("Killing form of sl(2): {:?}", k.iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
}
