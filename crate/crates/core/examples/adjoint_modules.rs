//! so(4) as a module over its sl(2) subalgebras, and the extensions of an
//! sl(2) subalgebra by pieces of its centralizer.

use so4::catalog::{representative_of, ClassLabel};
use so4::conjugacy::random_inner;
use so4::modulerep::{adjoint_decompose, extension_candidates, Sl2Triple};

fn main() {
    for index in 1..=3 {
        let label = ClassLabel::A1 { index };
        let s = representative_of(&label).unwrap().subalgebra().unwrap();
        let t = Sl2Triple::from_subalgebra(&s).unwrap();
        let d = adjoint_decompose(&t).unwrap();
        println!("{label}: so(4) = {d}");
        for (m, v) in d.summands.iter().zip(&d.highest_weight_vectors) {
            println!("    V({m}) from {v}");
        }

        // The multiset does not change under an inner automorphism.
        let phi = random_inner(index as u64, 3).unwrap();
        let moved = Sl2Triple::from_subalgebra(&phi.apply_subalgebra(&s)).unwrap();
        assert_eq!(adjoint_decompose(&moved).unwrap().summands, d.summands);

        for k in 1..=2 {
            let ext = extension_candidates(&t, k).unwrap();
            let names: Vec<String> = ext.classes.iter().map(|c| c.to_string()).collect();
            println!("    adjoin {k}: {}", if names.is_empty() { "nothing".into() } else { names.join(", ") });
        }
    }
}
