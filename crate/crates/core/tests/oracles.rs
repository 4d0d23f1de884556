//! Hand-derivable values, each checked against an independent computation
//! on explicit 4x4 matrices rather than against the library alone.

mod common;

use common::oracle::{self, Q};
use num_traits::Zero;

use so4::catalog::{k2_family_representative, representative_of, Branch, ClassLabel};
use so4::classify::classify_span;
use so4::conjugacy::{factor_swap_subalgebra, random_inner};
use so4::lie::{Element, Factor, Sl2Type, Subalgebra};
use so4::{linalg, Scalar};

fn e(c: [i64; 6]) -> Element {
    Element::from_ints(c)
}

fn span(gens: &[Element]) -> Subalgebra {
    Subalgebra::span_close(gens).unwrap()
}

/// Echelon form of a span, for comparing subspaces through the oracle.
fn oracle_span(gens: &[Element]) -> Vec<Vec<Q>> {
    oracle::echelon(&gens.iter().map(oracle::coords).collect::<Vec<_>>())
}

#[test]
fn bracket_of_diagonal_nilpotents() {
    let (u, v) = (e([0, 1, 0, 0, 1, 0]), e([0, 0, 1, 0, 0, 1]));
    let expected = oracle::bracket(&u, &v);
    assert_eq!(expected, oracle::coords(&e([1, 0, 0, 1, 0, 0])));
    assert_eq!(oracle::coords(&u.bracket(&v)), expected);
}

#[test]
fn borel_derived_series() {
    let gens = [Element::h1(), Element::h2(), Element::x1(), Element::x2()];
    let b = span(&gens);
    // The oracle's series: brackets of the current term with itself.
    let mut term: Vec<Element> = gens.to_vec();
    let mut dims = vec![term.len()];
    while !term.is_empty() {
        let next = oracle::bracket_span(&term, &term);
        term = next.iter().map(|r| oracle::to_element(r)).collect();
        dims.push(term.len());
        if dims.len() > 6 {
            break;
        }
    }
    assert_eq!(dims, vec![4, 2, 0]);
    assert_eq!(b.derived_dims(), dims);
    assert_eq!(oracle_span(b.derived().basis()), oracle_span(&[Element::x1(), Element::x2()]));
}

/// `tr(ad u ∘ ad v)` on a subalgebra, with `ad` computed from matrix
/// commutators and coordinates found by the oracle's own elimination.
fn oracle_killing(basis: &[Element]) -> Vec<Vec<Q>> {
    let n = basis.len();
    let ad = |u: &Element| -> Vec<Vec<Q>> {
        // Column j holds the coordinates of [u, b_j] in the basis.
        let mut cols = Vec::new();
        for b in basis {
            let target = oracle::bracket(u, b);
            let mut aug: Vec<Vec<Q>> = (0..6)
                .map(|k| basis.iter().map(|v| oracle::coords(v)[k].clone()).chain([target[k].clone()]).collect())
                .collect();
            aug = oracle::echelon(&aug);
            let mut x = vec![Q::zero(); n];
            for row in &aug {
                let p = row.iter().position(|c| !c.is_zero()).unwrap();
                assert!(p < n, "not closed");
                x[p] = row[n].clone();
            }
            cols.push(x);
        }
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    };
    let ads: Vec<_> = basis.iter().map(ad).collect();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let p = oracle::mul(&ads[i], &ads[j]);
                    (0..n).fold(Q::zero(), |acc, k| acc + &p[k][k])
                })
                .collect()
        })
        .collect()
}

#[test]
fn killing_form_of_sl2() {
    let basis = [Element::h1(), Element::x1(), Element::y1()];
    let k = oracle_killing(&basis);
    assert_eq!(k[0][0], oracle::qi(8));
    assert_eq!(k[1][2], oracle::qi(4));
    let det = oracle::det(&k);
    assert!(!det.is_zero());
    assert_eq!(det, oracle::qi(-128));
    let s = span(&basis);
    let ours: Vec<Vec<Q>> = s.killing_form().iter().map(|r| r.iter().map(oracle::q).collect()).collect();
    assert_eq!(ours, k);
    assert_eq!(oracle::q(&linalg::det(&s.killing_form())), det);
}

#[test]
fn killing_form_of_borel_is_degenerate() {
    let basis = [Element::h1(), Element::x1(), Element::h2(), Element::x2()];
    let s = span(&basis);
    let k = oracle_killing(s.basis());
    assert!(oracle::rank(&k) < 4);
    assert!(!s.has_nondegenerate_killing_form());
}

#[test]
fn projection_of_k2_family() {
    for a in ["2", "-1/3", "1+i"] {
        let a: Scalar = a.parse().unwrap();
        let s = k2_family_representative(2, &a).subalgebra().unwrap();
        // Zero the factor-1 coordinates of each basis vector.
        let projected: Vec<Vec<Q>> =
            s.basis().iter().map(|b| oracle::coords(b).into_iter().enumerate().map(|(k, c)| if k < 3 { Q::zero() } else { c }).collect()).collect();
        let expected = oracle_span(&[Element::h2()]);
        assert_eq!(oracle::echelon(&projected), expected);
        assert_eq!(oracle_span(s.factor_projection(Factor::Second).basis()), expected);
    }
}

#[test]
fn intersection_of_l2_with_first_factor() {
    let s = span(&[Element::x1(), Element::x2(), e([1, 0, 0, 1, 0, 0])]);
    // v ∈ S ∩ factor 1 iff its factor-2 coordinates vanish: solve for the
    // combinations of the basis whose last three coordinates are zero.
    let rows: Vec<Vec<Q>> = (3..6).map(|k| s.basis().iter().map(|b| oracle::coords(b)[k].clone()).collect()).collect();
    let reduced = oracle::echelon(&rows);
    assert_eq!(s.dim() - reduced.len(), 1);
    let meet = s.factor_intersection(Factor::First);
    assert_eq!(oracle_span(meet.basis()), oracle_span(&[Element::x1()]));
}

#[test]
fn type_of_h_plus_x() {
    let c = e([1, 1, 0, 0, 0, 0]).component(Factor::First);
    let m = oracle::block(&e([1, 1, 0, 0, 0, 0]));
    let two_by_two = vec![vec![m[0][0].clone(), m[0][1].clone()], vec![m[1][0].clone(), m[1][1].clone()]];
    assert_eq!(oracle::det(&two_by_two), oracle::qi(-1));
    assert_eq!(oracle::q(&c.det()), oracle::qi(-1));
    assert_eq!(c.sl2_type(), Sl2Type::Semisimple(Scalar::from_int(-1)));
}

/// `a = -μ1 μ2 / (μ1 + μ2)²` from the diagonal of `ad t` on `⟨x1, x2⟩`.
fn l3_parameter(t: &Element) -> (Q, Q, Q) {
    let mu1 = oracle::bracket(t, &Element::x1())[1].clone();
    let mu2 = oracle::bracket(t, &Element::x2())[4].clone();
    let sum = &mu1 + &mu2;
    let a = -(&mu1 * &mu2) / (&sum * &sum);
    (mu1, mu2, a)
}

#[test]
fn l3_parameter_from_eigenvalues() {
    let t = e([3, 0, 0, 1, 0, 0]);
    let (mu1, mu2, a) = l3_parameter(&t);
    assert_eq!((mu1.clone(), mu2.clone()), (oracle::qi(6), oracle::qi(2)));
    let expected = Scalar::frac(-3, 16);
    assert_eq!(a, oracle::q(&expected));
    // Cross-check with a = 2d(2d - 1) for the normalized eigenvalue d.
    let d = Scalar::frac(3, 8);
    let two_d = &Scalar::from_int(2) * &d;
    assert_eq!(&two_d * &(&two_d - &Scalar::one()), expected);

    let one = classify_span(&[Element::x1(), Element::x2(), t]).unwrap();
    assert_eq!(one, ClassLabel::L3 { a: expected.clone(), branch: Branch::One });
    let two = classify_span(&[Element::x1(), Element::x2(), e([1, 0, 0, 3, 0, 0])]).unwrap();
    assert_eq!(two, ClassLabel::L3 { a: expected, branch: Branch::Two });
}

#[test]
fn l3_parameter_over_random_tori() {
    // Random diagonal parts with a generic x-part, conjugated afterwards.
    let values = ["1", "2", "-3", "1/2", "i", "2+i", "-1/3", "5"];
    let mut seen = 0;
    for (k, p) in values.iter().enumerate() {
        for (j, q) in values.iter().enumerate() {
            let (p, q): (Scalar, Scalar) = (p.parse().unwrap(), q.parse().unwrap());
            if (&p + &q).is_zero() || p == q {
                continue;
            }
            let t = Element::h1().scale(&p) + Element::h2().scale(&q) + e([0, 1, 0, 0, 0, 0]).scale(&Scalar::from_int(k as i64));
            let (_, _, a) = l3_parameter(&t);
            let s = span(&[Element::x1(), Element::x2(), t]);
            let phi = random_inner((k * 8 + j) as u64, 3).unwrap();
            match so4::classify::classify(&phi.apply_subalgebra(&s)).unwrap() {
                ClassLabel::L3 { a: got, .. } => assert_eq!(oracle::q(&got), a),
                other => panic!("expected L3, got {other}"),
            }
            seen += 1;
        }
    }
    assert!(seen > 40);
}

#[test]
fn l3_representative_uses_the_square_root() {
    let a = Scalar::frac(-3, 16);
    let root = (&Scalar::one() + &(&Scalar::from_int(4) * &a)).sqrt_exact().unwrap();
    assert_eq!(oracle::q(&root), oracle::q(&Scalar::frac(1, 2)));
    let r = representative_of(&ClassLabel::L3 { a, branch: Branch::One }).unwrap();
    let expected = oracle_span(&[Element::x1(), Element::x2(), e([3, 0, 0, 1, 0, 0])]);
    assert_eq!(oracle_span(r.subalgebra().unwrap().basis()), expected);
}

#[test]
fn scaled_nilpotent_is_j5() {
    let g = e([0, 2, 0, 0, 5, 0]);
    let m = oracle::block(&g);
    assert!(oracle::mul(&m, &m).iter().flatten().all(Zero::is_zero));
    assert_eq!(classify_span(&[g]).unwrap(), ClassLabel::J { index: 5 });
}

#[test]
fn j8_parameter_is_the_determinant_ratio() {
    let c1: Scalar = "1+i".parse().unwrap();
    let c2: Scalar = "2-2i".parse().unwrap();
    let g = Element::h1().scale(&c1) + Element::h2().scale(&c2);
    let m = oracle::block(&g);
    let det = |r: usize| &m[r][r] * &m[r + 1][r + 1] - &m[r][r + 1] * &m[r + 1][r];
    let ratio = det(2) / det(0);
    assert_eq!(ratio, oracle::qi(-4));
    assert_eq!(classify_span(&[g]).unwrap(), ClassLabel::J8 { a_squared: Scalar::from_int(-4) });
}

#[test]
fn swap_of_l30_2_is_l30_4() {
    let s = representative_of(&ClassLabel::L30 { index: 2 }).unwrap().subalgebra().unwrap();
    let swapped = factor_swap_subalgebra(&s);
    let expected = oracle_span(&[Element::x1(), Element::h1(), Element::x2()]);
    assert_eq!(oracle_span(swapped.basis()), expected);
    assert_eq!(so4::classify::classify(&swapped).unwrap(), ClassLabel::L30 { index: 4 });
}

#[test]
fn generated_automorphisms_are_unimodular() {
    for seed in 0..200 {
        for complexity in 1..=4 {
            let phi = random_inner(seed, complexity).unwrap();
            for m in [phi.first(), phi.second()] {
                let q: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(oracle::q).collect()).collect();
                assert_eq!(oracle::det(&q), oracle::qi(1));
            }
        }
    }
}

#[test]
fn complexity_raises_mean_height() {
    let mean_log_height = |complexity: usize| -> f64 {
        (0..200u64).map(|seed| random_inner(seed, complexity).unwrap().height().bits() as f64).sum::<f64>() / 200.0
    };
    let means: Vec<f64> = (1..=5).map(mean_log_height).collect();
    assert!(means.windows(2).all(|w| w[0] < w[1]), "{means:?}");
}
