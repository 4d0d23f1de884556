//! Shared by the integration targets: a 4x4 matrix oracle that never goes
//! through the crate's bracket or scalar arithmetic, proptest strategies,
//! and the property suites.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestError, TestRng, TestRunner};

use so4::catalog::enumerate_catalog;
use so4::cli::SubalgebraDocument;
use so4::conjugacy::{factor_swap_subalgebra, lower, upper, InnerAutomorphism};
use so4::lie::{Element, Factor, Mat2};
use so4::{classify::classify, ClassLabel, Representative, Scalar};

pub mod oracle {
    use super::*;

    pub type Q = Complex<BigRational>;
    pub type M = Vec<Vec<Q>>;

    pub fn q(s: &Scalar) -> Q {
        Complex::new(s.re(), s.im())
    }

    pub fn qi(n: i64) -> Q {
        Complex::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn zeros(n: usize) -> M {
        vec![vec![Q::zero(); n]; n]
    }

    /// The block matrix `diag([[h1, x1], [y1, -h1]], [[h2, x2], [y2, -h2]])`,
    /// read straight from the coordinates.
    pub fn block(e: &Element) -> M {
        let c: Vec<Q> = e.coeffs().iter().map(q).collect();
        let mut m = zeros(4);
        for (b, o) in [(0, 0), (2, 3)] {
            m[b][b] = c[o].clone();
            m[b][b + 1] = c[o + 1].clone();
            m[b + 1][b] = c[o + 2].clone();
            m[b + 1][b + 1] = -c[o].clone();
        }
        m
    }

    /// Inverse of [`block`]; panics off the block-diagonal traceless shape.
    pub fn unblock(m: &M) -> Vec<Q> {
        assert!(m[0][2].is_zero() && m[0][3].is_zero() && m[2][0].is_zero() && m[3][1].is_zero());
        assert!(m[1][2].is_zero() && m[1][3].is_zero() && m[2][1].is_zero() && m[3][0].is_zero());
        assert_eq!(m[0][0], -m[1][1].clone());
        assert_eq!(m[2][2], -m[3][3].clone());
        vec![m[0][0].clone(), m[0][1].clone(), m[1][0].clone(), m[2][2].clone(), m[2][3].clone(), m[3][2].clone()]
    }

    pub fn mul(a: &M, b: &M) -> M {
        let n = a.len();
        let mut out = zeros(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[i][j] = &out[i][j] + &a[i][k] * &b[k][j];
                }
            }
        }
        out
    }

    pub fn sub(a: &M, b: &M) -> M {
        a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
    }

    pub fn commutator(a: &M, b: &M) -> M {
        sub(&mul(a, b), &mul(b, a))
    }

    pub fn coords(e: &Element) -> Vec<Q> {
        e.coeffs().iter().map(q).collect()
    }

    /// `[u, v]` computed as the matrix commutator.
    pub fn bracket(u: &Element, v: &Element) -> Vec<Q> {
        unblock(&commutator(&block(u), &block(v)))
    }

    pub fn embed(a: &Mat2, b: &Mat2) -> M {
        let mut m = zeros(4);
        for r in 0..2 {
            for c in 0..2 {
                m[r][c] = q(&a[r][c]);
                m[r + 2][c + 2] = q(&b[r][c]);
            }
        }
        m
    }

    /// `g M(u) g⁻¹` with `g = diag(first, second)`.
    pub fn conjugate(phi: &InnerAutomorphism, u: &Element) -> Vec<Q> {
        let g = embed(phi.first(), phi.second());
        unblock(&mul(&mul(&g, &block(u)), &inverse(&g).expect("invertible")))
    }

    /// Row reduction over `Q(i)`; returns the echelon rows.
    pub fn echelon(rows: &[Vec<Q>]) -> Vec<Vec<Q>> {
        let mut m: Vec<Vec<Q>> = rows.to_vec();
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            let inv = Q::one() / m[r][c].clone();
            m[r] = m[r].iter().map(|x| x * &inv).collect();
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    m[i] = m[i].iter().zip(&m[r]).map(|(x, y)| x - &f * y).collect();
                }
            }
            r += 1;
        }
        m.truncate(r);
        m
    }

    pub fn rank(rows: &[Vec<Q>]) -> usize {
        echelon(rows).len()
    }

    pub fn det(m: &M) -> Q {
        let n = m.len();
        let mut a = m.clone();
        let mut d = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return Q::zero() };
            if p != c {
                a.swap(p, c);
                d = -d;
            }
            d = &d * &a[c][c];
            for i in c + 1..n {
                let f = &a[i][c] / &a[c][c];
                a[i] = a[i].iter().zip(&a[c]).map(|(x, y)| x - &f * y).collect();
            }
        }
        d
    }

    pub fn inverse(m: &M) -> Option<M> {
        let n = m.len();
        let aug: Vec<Vec<Q>> = m
            .iter()
            .enumerate()
            .map(|(i, r)| r.iter().cloned().chain((0..n).map(|j| if i == j { Q::one() } else { Q::zero() })).collect())
            .collect();
        let e = echelon(&aug);
        if e.len() < n || (0..n).any(|i| !e[i][i].is_one()) {
            return None;
        }
        Some(e.iter().map(|r| r[n..].to_vec()).collect())
    }

    /// Span of all brackets of the rows of `a` with the rows of `b`.
    pub fn bracket_span(a: &[Element], b: &[Element]) -> Vec<Vec<Q>> {
        let all: Vec<Vec<Q>> = a.iter().flat_map(|u| b.iter().map(move |v| bracket(u, v))).collect();
        echelon(&all)
    }

    pub fn to_element(v: &[Q]) -> Element {
        let s = |c: &Q| Scalar::new(c.re.clone(), c.im.clone());
        Element::new(std::array::from_fn(|k| s(&v[k])))
    }
}

pub mod strategies {
    use super::*;

    pub fn scalar() -> impl Strategy<Value = Scalar> {
        (-30i64..=30, 1i64..=12, -30i64..=30, 1i64..=12).prop_map(|(a, b, c, d)| Scalar::gaussian(a, b, c, d))
    }

    pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
        scalar().prop_filter("nonzero", |s| !s.is_zero())
    }

    pub fn element() -> impl Strategy<Value = Element> {
        prop::array::uniform6(scalar()).prop_map(Element::new)
    }

    /// A product of elementary unipotents, independent of `random_inner`.
    pub fn automorphism() -> impl Strategy<Value = InnerAutomorphism> {
        prop::collection::vec((any::<bool>(), any::<bool>(), scalar()), 1..6).prop_map(|steps| {
            steps.into_iter().fold(InnerAutomorphism::identity(), |acc, (second, up, t)| {
                let g: Mat2 = if up { upper(t) } else { lower(t) };
                let f = if second { Factor::Second } else { Factor::First };
                InnerAutomorphism::in_factor(f, g).expect("unipotent").compose(&acc)
            })
        })
    }

    pub fn catalog_entry() -> impl Strategy<Value = Representative> {
        let entries = enumerate_catalog();
        (0..entries.len()).prop_map(move |k| entries[k].clone())
    }
}

/// Runs `test` over `cases` inputs from a fixed-seed generator.
pub fn run<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    runner.run(&strategy, test).map_err(|e| match e {
        TestError::Fail(why, input) => format!("{why} for {input:?}"),
        TestError::Abort(why) => why.to_string(),
    })
}

pub mod suites {
    use super::strategies::*;
    use super::*;

    pub fn field_axioms(cases: u32) -> Result<(), String> {
        run(cases, (scalar(), scalar(), scalar()), |(a, b, c)| {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &Scalar::zero(), a.clone());
            prop_assert_eq!(&a * &Scalar::one(), a.clone());
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a * &b).norm_sqr(), a.norm_sqr() * b.norm_sqr());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
                prop_assert_eq!(&(&b / &a) * &a, b.clone());
            }
            let r = a.square().sqrt_exact().expect("a square has a root");
            prop_assert!(r == a || r == -a.clone());
            prop_assert!(r.is_principal_root() || r.is_zero());
            // The same numbers through an independent representation.
            let (qa, qb) = (oracle::q(&a), oracle::q(&b));
            prop_assert_eq!(oracle::q(&(&a * &b)), &qa * &qb);
            prop_assert_eq!(oracle::q(&(&a - &b)), &qa - &qb);
            Ok(())
        })
    }

    pub fn parse_render(cases: u32) -> Result<(), String> {
        run(cases, (scalar(), prop::collection::vec(element(), 0..4), catalog_entry()), |(a, elements, rep)| {
            prop_assert_eq!(Scalar::parse(&a.render()).unwrap(), a.clone());
            prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a.clone());
            let json = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<Scalar>(&json).unwrap(), a);

            let doc = SubalgebraDocument::from_elements(&elements);
            let text = serde_json::to_string(&doc).unwrap();
            prop_assert_eq!(SubalgebraDocument::parse(&text).unwrap().elements().unwrap(), elements);

            let label_json = serde_json::to_string(&rep.label).unwrap();
            prop_assert_eq!(serde_json::from_str::<ClassLabel>(&label_json).unwrap(), rep.label.clone());
            let rep_json = serde_json::to_string(&rep).unwrap();
            prop_assert_eq!(serde_json::from_str::<Representative>(&rep_json).unwrap(), rep);
            Ok(())
        })
    }

    pub fn bracket_laws(cases: u32) -> Result<(), String> {
        run(cases, (element(), element(), element(), scalar()), |(u, v, w, c)| {
            prop_assert_eq!(u.bracket(&v), -v.bracket(&u));
            prop_assert!(u.bracket(&u).is_zero());
            let jacobi = u.bracket(&v.bracket(&w)) + v.bracket(&w.bracket(&u)) + w.bracket(&u.bracket(&v));
            prop_assert!(jacobi.is_zero());
            prop_assert_eq!(u.scale(&c).bracket(&(v.clone() + w.clone())), (u.bracket(&v) + u.bracket(&w)).scale(&c));
            prop_assert_eq!(oracle::coords(&u.bracket(&v)), oracle::bracket(&u, &v));
            Ok(())
        })
    }

    pub fn automorphism_laws(cases: u32) -> Result<(), String> {
        run(cases, (automorphism(), automorphism(), element(), element()), |(phi, psi, u, v)| {
            prop_assert_eq!(phi.apply(&u.bracket(&v)), phi.apply(&u).bracket(&phi.apply(&v)));
            prop_assert_eq!(phi.apply(&(u.clone() + v.clone())), phi.apply(&u) + phi.apply(&v));
            prop_assert!(so4::lie::mat2_det(phi.first()).is_one() && so4::lie::mat2_det(phi.second()).is_one());
            prop_assert_eq!(phi.compose(&psi).apply(&u), phi.apply(&psi.apply(&u)));
            prop_assert_eq!(phi.inverse().apply(&phi.apply(&u)), u.clone());
            prop_assert_eq!(oracle::coords(&phi.apply(&u)), oracle::conjugate(&phi, &u));
            Ok(())
        })
    }

    pub fn classify_invariance(cases: u32) -> Result<(), String> {
        run(cases, (catalog_entry(), automorphism()), |(rep, phi)| {
            let s = rep.subalgebra().unwrap();
            let image = phi.apply_subalgebra(&s);
            prop_assert_eq!(classify(&image).unwrap(), rep.label.clone());
            prop_assert_eq!(classify(&factor_swap_subalgebra(&image)).unwrap(), rep.label.swapped());
            Ok(())
        })
    }

    pub fn structure(cases: u32) -> Result<(), String> {
        run(cases, (catalog_entry(), automorphism()), |(rep, phi)| {
            let s = phi.apply_subalgebra(&rep.subalgebra().unwrap());
            let rad = s.radical();
            prop_assert!(rad.is_ideal_of(&s));
            prop_assert!(rad.is_solvable());
            let dims = s.derived_dims();
            prop_assert!(dims.windows(2).all(|w| w[0] >= w[1]));
            let k = s.killing_form();
            for i in 0..k.len() {
                for j in 0..k.len() {
                    prop_assert_eq!(&k[i][j], &k[j][i]);
                }
            }
            if !s.is_solvable() {
                let (levi, r) = s.levi_decomposition().unwrap();
                prop_assert!(levi.has_nondegenerate_killing_form());
                prop_assert_eq!(levi.dim() + r.dim(), s.dim());
            }
            Ok(())
        })
    }
}
