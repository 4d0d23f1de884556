//! The decision procedure mapping a subalgebra of `so(4,C)` to its class.
//!
//! Inner automorphisms act factor-wise, so every quantity used here
//! (projection and intersection dimensions, determinants of factor
//! components, eigenvalues of a complement acting on factor-stable lines) is
//! an invariant of the class. None of it needs square roots, so every
//! decision stays inside `Q(i)`.

use serde::Serialize;
use thiserror::Error;

use crate::catalog::{Branch, ClassLabel};
use crate::lie::{Element, Factor, LieError, Sl2Type, Subalgebra};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    NotClosed(#[from] LieError),
    /// A structural assumption that holds for every subalgebra of `so(4,C)`
    /// failed. Seeing this means a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

fn inconsistent<T>(what: impl Into<String>) -> Result<T, ClassifyError> {
    Err(ClassifyError::InternalInconsistency(what.into()))
}

/// Builds the span of `generators` (checking closure) and classifies it.
pub fn classify_span(generators: &[Element]) -> Result<ClassLabel, ClassifyError> {
    classify(&Subalgebra::span_close(generators)?)
}

pub fn classify(s: &Subalgebra) -> Result<ClassLabel, ClassifyError> {
    match s.dim() {
        0 => Ok(ClassLabel::Zero),
        1 => Ok(classify_dim1(s)),
        2 => classify_dim2(s),
        3 => classify_dim3(s),
        4..=6 => classify_dim4plus(s),
        d => inconsistent(format!("dimension {d} exceeds 6")),
    }
}

/// `λ` with `u = λ v`, for `v ≠ 0`.
fn ratio(u: &Element, v: &Element) -> Result<Scalar, ClassifyError> {
    let k = (0..6).find(|&k| !v.coeff(k).is_zero()).expect("v is nonzero");
    let lambda = u.coeff(k) / v.coeff(k);
    if &v.scale(&lambda) != u {
        return inconsistent(format!("{u} is not a multiple of {v}"));
    }
    Ok(lambda)
}

pub fn classify_dim1(s: &Subalgebra) -> ClassLabel {
    assert_eq!(s.dim(), 1);
    let u = &s.basis()[0];
    let t1 = u.component(Factor::First).sl2_type();
    let t2 = u.component(Factor::Second).sl2_type();
    use Sl2Type::*;
    let index = match (&t1, &t2) {
        (Nilpotent, Zero) => 1,
        (Zero, Nilpotent) => 2,
        (Semisimple(_), Zero) => 3,
        (Zero, Semisimple(_)) => 4,
        (Nilpotent, Nilpotent) => 5,
        (Nilpotent, Semisimple(_)) => 6,
        (Semisimple(_), Nilpotent) => 7,
        (Semisimple(d1), Semisimple(d2)) => return ClassLabel::J8 { a_squared: d2 / d1 },
        (Zero, Zero) => unreachable!("a basis vector is nonzero"),
    };
    ClassLabel::J { index }
}

pub fn classify_dim2(s: &Subalgebra) -> Result<ClassLabel, ClassifyError> {
    assert_eq!(s.dim(), 2);
    if s.is_abelian() {
        // An abelian plane splits as one line in each factor.
        let mut types = Vec::with_capacity(2);
        for f in Factor::BOTH {
            let i = s.factor_intersection(f);
            if i.dim() != 1 {
                return inconsistent(format!("abelian plane {s} meets factor {} in dim {}", f.index(), i.dim()));
            }
            types.push(i.basis()[0].component(f).sl2_type());
        }
        let index = match (types[0].is_semisimple(), types[1].is_semisimple()) {
            (false, false) => 1,
            (false, true) => 2,
            (true, false) => 3,
            (true, true) => 4,
        };
        return Ok(ClassLabel::K1 { index });
    }

    let derived = s.derived();
    let n = &derived.basis()[0];
    let t0 = s.complement_vector(&derived).expect("derived algebra is a line");
    let t = t0.scale(&ratio(&t0.bracket(n), n)?.inv().expect("non-abelian"));
    let (n1, n2) = (n.component(Factor::First), n.component(Factor::Second));
    if !n1.is_zero() && !n2.is_zero() {
        return Ok(ClassLabel::K2 { index: 1 });
    }
    // The derived line sits in one factor; the other component of the
    // normalized complement decides the class.
    let (home, index_family, index_nilpotent) =
        if n2.is_zero() { (Factor::First, 2, 3) } else { (Factor::Second, 4, 5) };
    let th = t.component(home);
    let to = t.component(home.other());
    Ok(match to.sl2_type() {
        Sl2Type::Zero => ClassLabel::K2Family { index: index_family, a_squared: Scalar::zero() },
        Sl2Type::Nilpotent => ClassLabel::K2 { index: index_nilpotent },
        Sl2Type::Semisimple(d) => {
            let dh = th.det();
            if dh != Scalar::frac(-1, 4) {
                return inconsistent(format!("normalized complement has det {dh}"));
            }
            ClassLabel::K2Family { index: index_family, a_squared: d / dh }
        }
    })
}

/// Eigenvalues of a complement `t` on the two factor lines of a split
/// two-dimensional derived algebra.
fn split_torus_eigenvalues(s: &Subalgebra, derived: &Subalgebra) -> Result<(Scalar, Scalar), ClassifyError> {
    let lines: Vec<Subalgebra> = Factor::BOTH.iter().map(|&f| derived.factor_intersection(f)).collect();
    if lines.iter().any(|l| l.dim() != 1) {
        return inconsistent(format!("derived algebra {derived} does not split into factor lines"));
    }
    let t = s.complement_vector(derived).expect("derived algebra is proper");
    let n1 = &lines[0].basis()[0];
    let n2 = &lines[1].basis()[0];
    Ok((ratio(&t.bracket(n1), n1)?, ratio(&t.bracket(n2), n2)?))
}

pub fn classify_dim3(s: &Subalgebra) -> Result<ClassLabel, ClassifyError> {
    assert_eq!(s.dim(), 3);
    if !s.is_solvable() {
        if !s.has_nondegenerate_killing_form() {
            return inconsistent(format!("non-solvable {s} has degenerate Killing form"));
        }
        let p1 = s.factor_projection(Factor::First).dim();
        let p2 = s.factor_projection(Factor::Second).dim();
        let i1 = s.factor_intersection(Factor::First).dim();
        let i2 = s.factor_intersection(Factor::Second).dim();
        return match (p1, p2, i1, i2) {
            (3, 0, _, _) => Ok(ClassLabel::A1 { index: 1 }),
            (0, 3, _, _) => Ok(ClassLabel::A1 { index: 2 }),
            (3, 3, 0, 0) => Ok(ClassLabel::A1 { index: 3 }),
            _ => inconsistent(format!("simple {s} has projections ({p1},{p2}) and intersections ({i1},{i2})")),
        };
    }

    let derived = s.derived();
    match derived.dim() {
        2 => {
            let (mu1, mu2) = split_torus_eigenvalues(s, &derived)?;
            if mu1.is_zero() || mu2.is_zero() {
                return inconsistent("complement kills a derived line");
            }
            if mu1 == mu2 {
                return Ok(ClassLabel::L2);
            }
            let sum = &mu1 + &mu2;
            if sum.is_zero() {
                return Ok(ClassLabel::L4);
            }
            let a = -(&mu1 * &mu2 / sum.square());
            // r = 2μ1/(μ1+μ2) - 1 squares to 1 + 4a; the principal choice of
            // r picks branch 1.
            let r = Scalar::from_int(2) * &mu1 / &sum - Scalar::one();
            let branch = if r.is_principal_root() { Branch::One } else { Branch::Two };
            Ok(ClassLabel::L3 { a, branch })
        }
        1 => {
            let d = &derived.basis()[0];
            let home = match (d.component(Factor::First).is_zero(), d.component(Factor::Second).is_zero()) {
                (true, false) => Factor::Second,
                (false, true) => Factor::First,
                _ => return inconsistent(format!("one-dimensional derived algebra {derived} is not in a factor")),
            };
            let proj = s.factor_projection(home.other());
            if proj.dim() != 1 {
                return inconsistent(format!("projection of {s} away from its derived line has dim {}", proj.dim()));
            }
            let semisimple = proj.basis()[0].component(home.other()).sl2_type().is_semisimple();
            let index = match (home, semisimple) {
                (Factor::Second, true) => 1,
                (Factor::Second, false) => 2,
                (Factor::First, true) => 3,
                (Factor::First, false) => 4,
            };
            Ok(ClassLabel::L30 { index })
        }
        k => inconsistent(format!("solvable 3-dim subalgebra with {k}-dim derived algebra")),
    }
}

fn levi_home(levi: &Subalgebra) -> Result<Factor, ClassifyError> {
    for f in Factor::BOTH {
        if *levi == Subalgebra::factor(f) {
            return Ok(f);
        }
    }
    inconsistent(format!("Levi factor {levi} is not one of the two sl(2) summands"))
}

pub fn classify_dim4plus(s: &Subalgebra) -> Result<ClassLabel, ClassifyError> {
    let dim = s.dim();
    assert!((4..=6).contains(&dim));
    if dim == 6 {
        return Ok(ClassLabel::Full);
    }
    if s.is_solvable() {
        if dim == 4 && s.derived_dims()[1] == 2 {
            return Ok(ClassLabel::M8);
        }
        return inconsistent(format!("solvable subalgebra {s} of dimension {dim}"));
    }
    let (levi, radical) = s.levi_decomposition().map_err(|e| ClassifyError::InternalInconsistency(e.to_string()))?;
    let home = levi_home(&levi)?;
    if !Subalgebra::factor(home.other()).contains_all(&radical) {
        return inconsistent(format!("radical {radical} is not in the complementary factor"));
    }
    let offset = if home == Factor::First { 0 } else { 2 };
    match dim {
        4 => {
            let r = radical.basis()[0].component(home.other()).sl2_type();
            let index = if r.is_semisimple() { 1 } else { 2 };
            Ok(ClassLabel::A1PlusJ { index: index + offset })
        }
        _ => {
            if radical.dim() != 2 || radical.is_abelian() {
                return inconsistent(format!("radical {radical} of a 5-dim subalgebra is not K2"));
            }
            Ok(ClassLabel::A1PlusK2 { index: if home == Factor::First { 1 } else { 2 } })
        }
    }
}

/// The invariant data that the classifier decides on, for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub dim: usize,
    pub solvable: bool,
    pub derived_dims: Vec<usize>,
    pub proj_dims: (usize, usize),
    pub inter_dims: (usize, usize),
    /// `sl(2)` types of the two factor components of distinguished lines:
    /// the generator of a line, and the generators of one-dimensional
    /// factor intersections.
    pub factor_types: Vec<(Element, Sl2Type, Sl2Type)>,
    /// Eigenvalues of a complement on the factor lines of a split
    /// two-dimensional derived algebra.
    pub torus_eigendata: Vec<Scalar>,
    pub levi_dim: Option<usize>,
    pub radical_dim: usize,
}

pub fn profile(s: &Subalgebra) -> StructuralProfile {
    let p = |f| s.factor_projection(f).dim();
    let inters: Vec<Subalgebra> = Factor::BOTH.iter().map(|&f| s.factor_intersection(f)).collect();
    let types = |u: &Element| {
        (u.clone(), u.component(Factor::First).sl2_type(), u.component(Factor::Second).sl2_type())
    };
    let mut factor_types = Vec::new();
    if s.dim() == 1 {
        factor_types.push(types(&s.basis()[0]));
    }
    for i in &inters {
        if i.dim() == 1 {
            factor_types.push(types(&i.basis()[0]));
        }
    }
    let derived = s.derived();
    let torus_eigendata = if derived.dim() == 2 && s.dim() == 3 {
        split_torus_eigenvalues(s, &derived).map(|(a, b)| vec![a, b]).unwrap_or_default()
    } else {
        Vec::new()
    };
    let (levi_dim, radical_dim) = match s.levi_decomposition() {
        Ok((l, r)) => (Some(l.dim()), r.dim()),
        Err(_) => (None, s.radical().dim()),
    };
    StructuralProfile {
        dim: s.dim(),
        solvable: s.is_solvable(),
        derived_dims: s.derived_dims(),
        proj_dims: (p(Factor::First), p(Factor::Second)),
        inter_dims: (inters[0].dim(), inters[1].dim()),
        factor_types,
        torus_eigendata,
        levi_dim,
        radical_dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(c: [i64; 6]) -> Element {
        Element::from_ints(c)
    }

    fn c(gens: &[Element]) -> ClassLabel {
        classify_span(gens).unwrap()
    }

    #[test]
    fn dim1_examples() {
        assert_eq!(c(&[e([1, 0, 0, 3, 0, 0])]), ClassLabel::J8 { a_squared: Scalar::from_int(9) });
        assert_eq!(c(&[e([1, 0, 0, -3, 0, 0])]), ClassLabel::J8 { a_squared: Scalar::from_int(9) });
        assert_eq!(c(&[Element::x1() + Element::h2()]), ClassLabel::J { index: 6 });
        assert_eq!(c(&[e([0, 2, 0, 0, 5, 0])]), ClassLabel::J { index: 5 });
        let u = Element::h1().scale(&"1+i".parse().unwrap()) + Element::h2().scale(&"2-2i".parse().unwrap());
        assert_eq!(c(&[u]), ClassLabel::J8 { a_squared: Scalar::from_int(-4) });
    }

    #[test]
    fn dim2_examples() {
        assert_eq!(c(&[Element::x1() + Element::x2(), Element::h1() + Element::h2()]), ClassLabel::K2 { index: 1 });
        assert_eq!(c(&[Element::x2(), Element::h2() + Element::x1()]), ClassLabel::K2 { index: 5 });
        let four = ClassLabel::K2Family { index: 2, a_squared: Scalar::from_int(4) };
        assert_eq!(c(&[Element::x1(), e([1, 0, 0, -2, 0, 0])]), four);
        assert_eq!(c(&[Element::x1(), e([1, 0, 0, 2, 0, 0])]), four);
        assert_eq!(c(&[Element::x1(), Element::h1()]), ClassLabel::K2Family { index: 2, a_squared: Scalar::zero() });
        assert_eq!(c(&[Element::x1(), Element::h2()]), ClassLabel::K1 { index: 2 });
        // h1 + x1 is semisimple, so this is still K1^4 after a shear.
        assert_eq!(c(&[Element::h1() + Element::x1(), Element::h2()]), ClassLabel::K1 { index: 4 });
    }

    #[test]
    fn dim3_examples() {
        let a = Scalar::frac(-3, 16);
        assert_eq!(c(&[Element::x1(), Element::x2(), e([3, 0, 0, 1, 0, 0])]), ClassLabel::L3 { a: a.clone(), branch: Branch::One });
        assert_eq!(c(&[Element::x1(), Element::x2(), e([1, 0, 0, 3, 0, 0])]), ClassLabel::L3 { a, branch: Branch::Two });
        assert_eq!(
            c(&[Element::h1() + Element::h2(), Element::x1() + Element::x2(), Element::y1() + Element::y2()]),
            ClassLabel::A1 { index: 3 }
        );
        assert_eq!(c(&[Element::x1(), Element::x2(), e([1, 0, 0, -1, 0, 0])]), ClassLabel::L4);
        assert_eq!(c(&[Element::h1(), Element::x2(), Element::h2()]), ClassLabel::L30 { index: 1 });
        assert_eq!(c(&[Element::x1(), Element::h1(), Element::x2()]), ClassLabel::L30 { index: 4 });
    }

    #[test]
    fn dim4plus_examples() {
        assert_eq!(c(&[Element::h1(), Element::h2(), Element::x1(), Element::x2()]), ClassLabel::M8);
        assert_eq!(c(&[Element::x1(), Element::y1(), Element::h1(), Element::x2()]), ClassLabel::A1PlusJ { index: 2 });
        assert_eq!(
            c(&[Element::x2(), Element::y2(), Element::h2(), Element::x1(), Element::h1()]),
            ClassLabel::A1PlusK2 { index: 2 }
        );
        assert_eq!(classify(&Subalgebra::full()).unwrap(), ClassLabel::Full);
        assert_eq!(classify(&Subalgebra::zero()).unwrap(), ClassLabel::Zero);
    }

    #[test]
    fn not_closed_propagates() {
        assert!(matches!(classify_span(&[Element::x1(), Element::y1()]), Err(ClassifyError::NotClosed(_))));
    }

    #[test]
    fn profile_of_l3() {
        let s = Subalgebra::span_close(&[Element::x1(), Element::x2(), e([3, 0, 0, 1, 0, 0])]).unwrap();
        let p = profile(&s);
        assert_eq!(p.derived_dims, vec![3, 2, 0]);
        assert_eq!(p.inter_dims, (1, 1));
        assert_eq!(p.torus_eigendata, vec![Scalar::from_int(2), Scalar::frac(2, 3)]);
    }
}
