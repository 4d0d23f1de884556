//! Regenerates `data/catalog.json` from the representative builder.
//!
//! ```text
//! cargo run --example export_catalog            # write the file
//! cargo run --example export_catalog -- --check # fail if it is stale
//! ```

use std::path::PathBuf;

use so4::catalog::Catalog;

fn main() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/catalog.json");
    let text = Catalog::build().to_json() + "\n";
    if std::env::args().any(|a| a == "--check") {
        let current = std::fs::read_to_string(&path).unwrap_or_default();
        if current != text {
            eprintln!("{} is stale", path.display());
            std::process::exit(1);
        }
        println!("{} is up to date", path.display());
        return;
    }
    std::fs::write(&path, text).expect("write catalog");
    println!("wrote {}", path.display());
}
