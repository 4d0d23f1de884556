//! Reading subalgebra documents in either coordinate or 4x4 matrix form,
//! the same formats the `so4` binary accepts.

use so4::classify::classify;
use so4::cli::SubalgebraDocument;
use so4::lie::{Element, Subalgebra};

fn main() {
    let coords = r#"{"format_version": "1", "basis": [["1", "0", "0", "1/2", "0", "0"], ["0", "1", "0", "0", "0", "0"]]}"#;
    let matrices = r#"{"format_version": "1", "basis": [
        [["0", "1", "0", "0"], ["0", "0", "0", "0"], ["0", "0", "0", "1"], ["0", "0", "0", "0"]]
    ]}"#;
    for text in [coords, matrices] {
        let doc = SubalgebraDocument::parse(text).unwrap();
        let s = Subalgebra::span_close(&doc.elements().unwrap()).unwrap();
        println!("{} -> {}", s.basis().iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", "), classify(&s).unwrap());
    }

    let u = Element::h1() + Element::x2();
    let m = u.matrix_form();
    println!("\n{u} as a matrix:");
    for row in &m {
        println!("  {}", row.iter().map(|c| format!("{:>4}", c.to_string())).collect::<String>());
    }
    let out = SubalgebraDocument::from_elements(&[u]);
    println!("\n{}", serde_json::to_string(&out).unwrap());
}
