//! The one-parameter families store `a²`, so `a` and `-a` land in the
//! same class while other values stay apart.

use so4::catalog::{j8_representative, k2_family_representative, representative_of, Branch, ClassLabel};
use so4::classify::classify;
use so4::conjugacy::{equivalent, find_witness};
use so4::Scalar;

fn main() {
    let a: Scalar = "2/3+i".parse().unwrap();
    let plus = j8_representative(&a).subalgebra().unwrap();
    let minus = j8_representative(&-a.clone()).subalgebra().unwrap();
    println!("a = {a}: {} and {}", classify(&plus).unwrap(), classify(&minus).unwrap());
    println!("equivalent: {}", equivalent(&plus, &minus).unwrap());
    if let Some(w) = find_witness(&plus, &minus, 64) {
        println!("witness: first {:?}", w.first().iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    }

    let other = j8_representative(&"3".parse().unwrap()).subalgebra().unwrap();
    println!("a = 3 vs a = {a}: equivalent {}", equivalent(&plus, &other).unwrap());

    for index in [2, 4] {
        let r = k2_family_representative(index, &a);
        println!("{}: {} -> {}", r.notes, r.label, classify(&r.subalgebra().unwrap()).unwrap());
    }

    // L3 has two branches at each a; both exist when sqrt(1+4a) is in Q(i).
    let a: Scalar = "3/4".parse().unwrap();
    for branch in [Branch::One, Branch::Two] {
        let label = ClassLabel::L3 { a: a.clone(), branch };
        let r = representative_of(&label).unwrap();
        println!("{label}: generators {:?}", r.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>());
    }
    let bad = ClassLabel::L3 { a: "-1/4".parse().unwrap(), branch: Branch::One };
    println!("{bad}: {}", representative_of(&bad).unwrap_err());
}
