//! Inner automorphisms `(A, B) ∈ SL(2) × SL(2)`, the outer factor swap,
//! equivalence testing and a bounded search for conjugating witnesses.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{classify, ClassifyError};
use crate::lie::{mat2_adjugate, mat2_det, mat2_identity, mat2_mul, Element, Factor, FactorComponent, Mat2, Sl2Type, Subalgebra};
use crate::scalar::Scalar;

/// Default bound on numerators and denominators of random scalars.
pub const DEFAULT_HEIGHT_BOUND: i64 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjugacyError {
    #[error("factor matrix has determinant {0}, expected 1")]
    NotUnimodular(Scalar),
    #[error("complexity must be at least 1")]
    ZeroComplexity,
    #[error("height bound must be at least 1")]
    ZeroHeightBound,
}

/// Conjugation by `A` in the first factor and `B` in the second.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAutomorphism", into = "RawAutomorphism")]
pub struct InnerAutomorphism {
    first: Mat2,
    second: Mat2,
}

#[derive(Serialize, Deserialize)]
struct RawAutomorphism {
    first: Mat2,
    second: Mat2,
}

impl TryFrom<RawAutomorphism> for InnerAutomorphism {
    type Error = ConjugacyError;
    fn try_from(r: RawAutomorphism) -> Result<Self, Self::Error> {
        InnerAutomorphism::new(r.first, r.second)
    }
}

impl From<InnerAutomorphism> for RawAutomorphism {
    fn from(p: InnerAutomorphism) -> Self {
        RawAutomorphism { first: p.first, second: p.second }
    }
}

impl InnerAutomorphism {
    pub fn new(first: Mat2, second: Mat2) -> Result<Self, ConjugacyError> {
        for m in [&first, &second] {
            let d = mat2_det(m);
            if !d.is_one() {
                return Err(ConjugacyError::NotUnimodular(d));
            }
        }
        Ok(InnerAutomorphism { first, second })
    }

    pub fn identity() -> Self {
        InnerAutomorphism { first: mat2_identity(), second: mat2_identity() }
    }

    /// `g` acting in `factor` only.
    pub fn in_factor(factor: Factor, g: Mat2) -> Result<Self, ConjugacyError> {
        match factor {
            Factor::First => InnerAutomorphism::new(g, mat2_identity()),
            Factor::Second => InnerAutomorphism::new(mat2_identity(), g),
        }
    }

    pub fn first(&self) -> &Mat2 {
        &self.first
    }

    pub fn second(&self) -> &Mat2 {
        &self.second
    }

    pub fn matrix(&self, factor: Factor) -> &Mat2 {
        match factor {
            Factor::First => &self.first,
            Factor::Second => &self.second,
        }
    }

    pub fn apply(&self, u: &Element) -> Element {
        Element::from_components(
            &u.component(Factor::First).conjugate(&self.first),
            &u.component(Factor::Second).conjugate(&self.second),
        )
    }

    pub fn apply_subalgebra(&self, s: &Subalgebra) -> Subalgebra {
        let images: Vec<Element> = Element::chevalley_basis().iter().map(|b| self.apply(b)).collect();
        s.map(|u| {
            let mut out = Element::zero();
            for (c, img) in u.to_vec().iter().zip(&images) {
                if !c.is_zero() {
                    out = out + img.scale(c);
                }
            }
            out
        })
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &InnerAutomorphism) -> InnerAutomorphism {
        InnerAutomorphism { first: mat2_mul(&self.first, &other.first), second: mat2_mul(&self.second, &other.second) }
    }

    pub fn inverse(&self) -> InnerAutomorphism {
        InnerAutomorphism { first: mat2_adjugate(&self.first), second: mat2_adjugate(&self.second) }
    }

    /// Largest height among the eight matrix entries.
    pub fn height(&self) -> num_bigint::BigInt {
        self.first.iter().chain(&self.second).flatten().map(Scalar::height).max().expect("eight entries")
    }
}

/// `[[1, t], [0, 1]]`.
pub fn upper(t: Scalar) -> Mat2 {
    [[Scalar::one(), t], [Scalar::zero(), Scalar::one()]]
}

/// `[[1, 0], [t, 1]]`.
pub fn lower(t: Scalar) -> Mat2 {
    [[Scalar::one(), Scalar::zero()], [t, Scalar::one()]]
}

/// `diag(s, 1/s)`, acting on `x` by `s²` and on `y` by `s⁻²`.
pub fn torus(s: &Scalar) -> Option<Mat2> {
    let inv = s.inv().ok()?;
    Some([[s.clone(), Scalar::zero()], [Scalar::zero(), inv]])
}

/// `[[0, 1], [-1, 0]] = U(1) L(-1) U(1)`, sending `h ↦ -h`, `x ↦ -y`.
pub fn weyl() -> Mat2 {
    mat2_mul(&mat2_mul(&upper(Scalar::one()), &lower(-Scalar::one())), &upper(Scalar::one()))
}

/// A random Gaussian rational with numerators in `[-bound, bound]` and
/// denominators in `[1, bound]`.
pub fn random_scalar<R: Rng>(rng: &mut R, bound: i64) -> Scalar {
    let mut part = || (rng.gen_range(-bound..=bound), rng.gen_range(1..=bound));
    let (rn, rd) = part();
    let (im, id) = part();
    Scalar::gaussian(rn, rd, im, id)
}

/// Deterministic in `seed`: each factor is a product of `complexity`
/// elementary unipotents with alternating shape.
pub fn random_inner(seed: u64, complexity: usize) -> Result<InnerAutomorphism, ConjugacyError> {
    random_inner_with_bound(seed, complexity, DEFAULT_HEIGHT_BOUND)
}

pub fn random_inner_with_bound(seed: u64, complexity: usize, bound: i64) -> Result<InnerAutomorphism, ConjugacyError> {
    if complexity == 0 {
        return Err(ConjugacyError::ZeroComplexity);
    }
    if bound < 1 {
        return Err(ConjugacyError::ZeroHeightBound);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factor = || {
        let mut lower_next: bool = rng.gen();
        let mut m = mat2_identity();
        for _ in 0..complexity {
            let t = random_scalar(&mut rng, bound);
            let e = if lower_next { lower(t) } else { upper(t) };
            m = mat2_mul(&m, &e);
            lower_next = !lower_next;
        }
        m
    };
    let first = factor();
    let second = factor();
    Ok(InnerAutomorphism { first, second })
}

/// The outer automorphism exchanging the two factors.
pub fn factor_swap(u: &Element) -> Element {
    u.swapped()
}

pub fn factor_swap_subalgebra(s: &Subalgebra) -> Subalgebra {
    s.map(factor_swap)
}

/// Decides inner equivalence by comparing class labels, parameters included.
pub fn equivalent(s: &Subalgebra, t: &Subalgebra) -> Result<bool, ClassifyError> {
    Ok(classify(s)? == classify(t)?)
}

/// Searches for `φ` with `φ(S) = T`, trying at most `budget` candidates.
///
/// Candidates come in three rounds: the identity and Weyl flips; normal
/// position moves built from flags, unipotent clearing and torus scaling
/// for both sides; then a seeded random walk. Every candidate is checked
/// exactly, so a returned witness is always correct.
pub fn find_witness(s: &Subalgebra, t: &Subalgebra, budget: usize) -> Option<InnerAutomorphism> {
    let mut search = Search { s, t, left: budget };
    if s.dim() != t.dim() {
        return None;
    }
    let flips = weyl_flips();
    for w in &flips {
        if let Some(found) = search.try_candidate(w) {
            return Some(found);
        }
    }

    if let (Some(ns), Some(nt)) = (normalizer(s), normalizer(t)) {
        let s_norm = ns.apply_subalgebra(s);
        let t_norm = nt.apply_subalgebra(t);
        let nt_inv = nt.inverse();
        for w in &flips {
            let s_flipped = w.apply_subalgebra(&s_norm);
            for d in torus_candidates(&s_flipped, &t_norm) {
                let candidate = nt_inv.compose(&d).compose(w).compose(&ns);
                if let Some(found) = search.try_candidate(&candidate) {
                    return Some(found);
                }
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut walk = InnerAutomorphism::identity();
    while search.left > 0 {
        let t = random_scalar(&mut rng, 2);
        let e = if rng.gen() { upper(t) } else { lower(t) };
        let factor = if rng.gen() { Factor::First } else { Factor::Second };
        walk = InnerAutomorphism::in_factor(factor, e).expect("unipotent").compose(&walk);
        if let Some(found) = search.try_candidate(&walk) {
            return Some(found);
        }
    }
    None
}

struct Search<'a> {
    s: &'a Subalgebra,
    t: &'a Subalgebra,
    left: usize,
}

impl Search<'_> {
    fn try_candidate(&mut self, phi: &InnerAutomorphism) -> Option<InnerAutomorphism> {
        if self.left == 0 {
            return None;
        }
        self.left -= 1;
        (phi.apply_subalgebra(self.s) == *self.t).then(|| phi.clone())
    }
}

fn weyl_flips() -> Vec<InnerAutomorphism> {
    let (i, w) = (mat2_identity(), weyl());
    [(i.clone(), i.clone()), (w.clone(), i.clone()), (i, w.clone()), (w.clone(), w)]
        .into_iter()
        .map(|(a, b)| InnerAutomorphism::new(a, b).expect("determinant one"))
        .collect()
}

/// `A` with `A u = e1` and determinant one.
fn flag_to_e1(u: [Scalar; 2]) -> Mat2 {
    let [u1, u2] = u;
    if !u1.is_zero() {
        [[u1.inv().expect("nonzero"), Scalar::zero()], [-u2, u1]]
    } else {
        [[Scalar::zero(), u2.inv().expect("nonzero")], [-u2, Scalar::zero()]]
    }
}

/// Sends a nonzero nilpotent `c` to a multiple of `x`.
fn nilpotent_flag(c: &FactorComponent) -> Mat2 {
    let m = c.matrix();
    let col = if !m[0][0].is_zero() || !m[1][0].is_zero() { 0 } else { 1 };
    flag_to_e1([m[0][col].clone(), m[1][col].clone()])
}

/// Sends a semisimple `c` to `μ h` with `μ` the principal root of `-det c`.
fn diagonalizer(c: &FactorComponent) -> Option<Mat2> {
    let mu = (-c.det()).sqrt_exact()?;
    let m = c.matrix();
    let eigvec = |lambda: &Scalar| -> [Scalar; 2] {
        let r1 = [&m[0][0] - lambda, m[0][1].clone()];
        if !r1[0].is_zero() || !r1[1].is_zero() {
            [r1[1].clone(), -&r1[0]]
        } else {
            let r2 = [m[1][0].clone(), &m[1][1] - lambda];
            [r2[1].clone(), -&r2[0]]
        }
    };
    let plus = eigvec(&mu);
    let minus = eigvec(&-&mu);
    let p: Mat2 = [[plus[0].clone(), minus[0].clone()], [plus[1].clone(), minus[1].clone()]];
    let d = mat2_det(&p).inv().ok()?;
    let p: Mat2 = [[&p[0][0] * &d, p[0][1].clone()], [&p[1][0] * &d, p[1][1].clone()]];
    Some(mat2_adjugate(&p))
}

/// Moves `S` into a normal position: factor projections upper triangular,
/// semisimple lines diagonal, a diagonal `sl(2)` made the identity graph,
/// and `x`-parts of torus elements cleared.
fn normalizer(s: &Subalgebra) -> Option<InnerAutomorphism> {
    let mut phi = InnerAutomorphism::identity();
    let p1 = s.factor_projection(Factor::First).dim();
    let i1 = s.factor_intersection(Factor::First).dim();
    if p1 == 3 && i1 == 0 && s.dim() == 3 {
        phi = InnerAutomorphism::in_factor(Factor::Second, diagonal_graph_untwister(s)?).ok()?;
    }
    for f in Factor::BOTH {
        let current = phi.apply_subalgebra(s);
        let proj = current.factor_projection(f);
        let g = match proj.dim() {
            1 => {
                let c = proj.basis()[0].component(f);
                match c.sl2_type() {
                    Sl2Type::Nilpotent => nilpotent_flag(&c),
                    _ => diagonalizer(&c)?,
                }
            }
            2 => nilpotent_flag(&proj.derived().basis()[0].component(f)),
            _ => continue,
        };
        phi = InnerAutomorphism::in_factor(f, g).ok()?.compose(&phi);
    }
    for f in Factor::BOTH {
        let current = phi.apply_subalgebra(s);
        let o = f.offset();
        let Some(u) = current.basis().iter().find(|u| !u.coeff(o).is_zero()) else {
            continue;
        };
        if u.coeff(o + 2).is_zero() && !u.coeff(o + 1).is_zero() {
            let t = u.coeff(o + 1) / (Scalar::from_int(2) * u.coeff(o));
            phi = InnerAutomorphism::in_factor(f, upper(t)).ok()?.compose(&phi);
        }
    }
    Some(phi)
}

/// For `S = { (c, M c M⁻¹) }`, returns `M⁻¹` scaled to determinant one.
fn diagonal_graph_untwister(s: &Subalgebra) -> Option<Mat2> {
    let preimage = |target: &Element| -> Option<Element> {
        let rows: Vec<Vec<Scalar>> = (0..3)
            .map(|k| s.basis().iter().map(|b| b.coeff(k).clone()).collect())
            .collect();
        let c = crate::linalg::solve(&rows, &target.to_vec()[0..3])?;
        Some(s.combine(&c))
    };
    let images: Vec<Mat2> = [Element::h1(), Element::x1()]
        .iter()
        .map(|e| preimage(e).map(|p| p.component(Factor::Second).matrix()))
        .collect::<Option<_>>()?;
    let sources = [Element::h1().component(Factor::First).matrix(), Element::x1().component(Factor::First).matrix()];
    // M c = σ(c) M, linear in the four entries of M.
    let mut eqs: Vec<Vec<Scalar>> = Vec::new();
    for (c, sc) in sources.iter().zip(&images) {
        for r in 0..2 {
            for col in 0..2 {
                let mut row = vec![Scalar::zero(); 4];
                for k in 0..2 {
                    row[r * 2 + k] += &c[k][col];
                    row[k * 2 + col] -= &sc[r][k];
                }
                eqs.push(row);
            }
        }
    }
    let ns = crate::linalg::nullspace(&eqs, 4);
    let v = ns.first()?;
    let m: Mat2 = [[v[0].clone(), v[1].clone()], [v[2].clone(), v[3].clone()]];
    let root = mat2_det(&m).sqrt_exact()?;
    let inv = root.inv().ok()?;
    let adj = mat2_adjugate(&m);
    Some(std::array::from_fn(|r| std::array::from_fn(|c| &adj[r][c] * &inv)))
}

/// Torus elements `diag(s1,1/s1) × diag(s2,1/s2)` that might carry `S` to
/// `T` once both are in normal position.
fn torus_candidates(s: &Subalgebra, t: &Subalgebra) -> Vec<InnerAutomorphism> {
    let ratios = |f: Factor| -> Vec<Scalar> {
        let mut out = vec![Scalar::one()];
        let mut push = |r: Scalar| {
            for r in [r.inv().expect("nonzero"), r] {
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        };
        for k in [f.offset() + 1, f.offset() + 2] {
            for a in s.basis() {
                for b in t.basis() {
                    let (ca, cb) = (a.coeff(k), b.coeff(k));
                    if ca.is_zero() || cb.is_zero() {
                        continue;
                    }
                    push(cb / ca);
                    // Echelon bases fix one coordinate to 1, so the scale
                    // also shows up relative to the other coordinates.
                    for j in (0..6).filter(|&j| j != k) {
                        let (da, db) = (a.coeff(j), b.coeff(j));
                        if !da.is_zero() && !db.is_zero() {
                            push(&(cb * da) / &(ca * db));
                        }
                    }
                }
            }
        }
        out.iter()
            .filter_map(|sigma| sigma.sqrt_exact())
            .flat_map(|r| if r.is_one() { vec![r] } else { vec![r.clone(), r.inv().expect("nonzero")] })
            .collect()
    };
    let (r1, r2) = (ratios(Factor::First), ratios(Factor::Second));
    let mut out = Vec::new();
    for a in &r1 {
        for b in &r2 {
            if let (Some(ta), Some(tb)) = (torus(a), torus(b)) {
                out.push(InnerAutomorphism { first: ta, second: tb });
            }
        }
    }
    out
}
