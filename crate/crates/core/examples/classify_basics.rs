//! Classifies a handful of subalgebras given by generators.
//!
//! ```text
//! cargo run --example classify_basics
//! ```

use so4::classify::{classify, profile};
use so4::lie::{Element, Subalgebra};

fn main() {
    let (h1, x1, y1, h2, x2) = (Element::h1(), Element::x1(), Element::y1(), Element::h2(), Element::x2());
    let cases: Vec<(&str, Vec<Element>)> = vec![
        ("<x1 + x2>", vec![x1.clone() + x2.clone()]),
        ("<x1, x2>", vec![x1.clone(), x2.clone()]),
        ("<h1 + h2, x1, x2>", vec![h1.clone() + h2.clone(), x1.clone(), x2.clone()]),
        ("<h1 + h2, x1 + x2, y1 + y2>", vec![h1.clone() + h2.clone(), x1.clone() + x2.clone(), y1.clone() + Element::y2()]),
        ("<h1, x1, y1, x2>", vec![h1.clone(), x1.clone(), y1, x2.clone()]),
        ("<h1, h2, x1, x2>", vec![h1, h2, x1, x2]),
    ];
    for (name, gens) in cases {
        let s = Subalgebra::span_close(&gens).expect("closed");
        let label = classify(&s).expect("classifiable");
        let p = profile(&s);
        println!("{name:32} {label:12} dim {} derived {:?}", p.dim, p.derived_dims);
    }

    // Generators that do not span a subalgebra are reported, not closed up.
    if let Err(e) = Subalgebra::span_close(&[Element::x1(), Element::y1()]) {
        println!("<x1, y1>: {e}");
    }
    // `generated_by` takes the closure instead.
    let s = Subalgebra::generated_by(&[Element::x1(), Element::y1()]);
    println!("closure of <x1, y1>: {}", classify(&s).unwrap());
}
