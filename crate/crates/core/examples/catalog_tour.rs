//! Lists the catalog by dimension with each entry's abstract type.

use so4::catalog::{enumerate_catalog, Catalog, EMBEDDED_CATALOG};
use so4::verify::families_by_dim;

fn main() {
    let catalog = Catalog::from_json(EMBEDDED_CATALOG).unwrap();
    for (dim, families) in families_by_dim(&catalog) {
        println!("dim {dim}: {}", families.into_iter().collect::<Vec<_>>().join(", "));
    }
    println!();
    for r in enumerate_catalog() {
        let kind = match r.label.abstract_type() {
            Some(t) => t.name(),
            None if r.label.is_solvable() => "zero".into(),
            None => "non-solvable".into(),
        };
        println!("{:14} {:14} {}", r.label.to_string(), kind, r.notes);
    }
}
