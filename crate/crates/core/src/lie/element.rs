use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

use super::LieError;

/// Names of the Chevalley coordinates, in storage order.
pub const COORD_NAMES: [&str; 6] = ["h1", "x1", "y1", "h2", "x2", "y2"];

/// One of the two `sl(2,C)` summands of `so(4,C)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Factor {
    First,
    Second,
}

impl Factor {
    pub const BOTH: [Factor; 2] = [Factor::First, Factor::Second];

    pub fn other(self) -> Factor {
        match self {
            Factor::First => Factor::Second,
            Factor::Second => Factor::First,
        }
    }

    /// Offset of this factor's `(h, x, y)` block in the coordinate vector.
    pub fn offset(self) -> usize {
        match self {
            Factor::First => 0,
            Factor::Second => 3,
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Factor::First => 1,
            Factor::Second => 2,
        }
    }
}

/// An element of `so(4,C)` in Chevalley coordinates `(h1, x1, y1, h2, x2, y2)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element([Scalar; 6]);

impl Element {
    pub fn new(coeffs: [Scalar; 6]) -> Self {
        Element(coeffs)
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        Element(c.map(Scalar::from_int))
    }

    pub fn from_slice(c: &[Scalar]) -> Self {
        assert_eq!(c.len(), 6, "an element has six coordinates");
        Element(std::array::from_fn(|k| c[k].clone()))
    }

    pub fn zero() -> Self {
        Element::default()
    }

    pub fn unit(k: usize) -> Self {
        let mut e = Element::zero();
        e.0[k] = Scalar::one();
        e
    }

    pub fn h1() -> Self {
        Element::unit(0)
    }
    pub fn x1() -> Self {
        Element::unit(1)
    }
    pub fn y1() -> Self {
        Element::unit(2)
    }
    pub fn h2() -> Self {
        Element::unit(3)
    }
    pub fn x2() -> Self {
        Element::unit(4)
    }
    pub fn y2() -> Self {
        Element::unit(5)
    }

    pub fn chevalley_basis() -> [Element; 6] {
        std::array::from_fn(Element::unit)
    }

    pub fn coeffs(&self) -> &[Scalar; 6] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.0[k]
    }

    pub fn to_vec(&self) -> Vec<Scalar> {
        self.0.to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element(std::array::from_fn(|k| c * &self.0[k]))
    }

    pub fn component(&self, factor: Factor) -> FactorComponent {
        let o = factor.offset();
        FactorComponent {
            h: self.0[o].clone(),
            x: self.0[o + 1].clone(),
            y: self.0[o + 2].clone(),
        }
    }

    pub fn from_components(first: &FactorComponent, second: &FactorComponent) -> Element {
        Element([
            first.h.clone(),
            first.x.clone(),
            first.y.clone(),
            second.h.clone(),
            second.x.clone(),
            second.y.clone(),
        ])
    }

    /// The element living entirely in `factor` with component `c`.
    pub fn in_factor(factor: Factor, c: &FactorComponent) -> Element {
        let zero = FactorComponent::zero();
        match factor {
            Factor::First => Element::from_components(c, &zero),
            Factor::Second => Element::from_components(&zero, c),
        }
    }

    /// Lie bracket. Each factor obeys `[h,x]=2x`, `[h,y]=-2y`, `[x,y]=h`;
    /// the two factors commute.
    pub fn bracket(&self, other: &Element) -> Element {
        Element::from_components(
            &self.component(Factor::First).bracket(&other.component(Factor::First)),
            &self.component(Factor::Second).bracket(&other.component(Factor::Second)),
        )
    }

    /// The 4×4 block-diagonal matrix
    /// `[[a, c, 0, 0], [c', -a, 0, 0], [0, 0, b, d], [0, 0, d', -b]]`
    /// for `a h1 + b h2 + c x1 + d x2 + c' y1 + d' y2`.
    pub fn matrix_form(&self) -> [[Scalar; 4]; 4] {
        let mut m: [[Scalar; 4]; 4] = Default::default();
        for f in Factor::BOTH {
            let o = 2 * (f.index() as usize - 1);
            let c = self.component(f).matrix();
            for r in 0..2 {
                for s in 0..2 {
                    m[o + r][o + s] = c[r][s].clone();
                }
            }
        }
        m
    }

    /// Inverse of [`Element::matrix_form`]; rejects matrices that are not
    /// block diagonal with traceless 2×2 blocks.
    pub fn from_matrix(m: &[Vec<Scalar>]) -> Result<Element, LieError> {
        if m.len() != 4 || m.iter().any(|r| r.len() != 4) {
            return Err(LieError::InvalidMatrix("expected a 4x4 matrix".into()));
        }
        for r in 0..4 {
            for c in 0..4 {
                if r / 2 != c / 2 && !m[r][c].is_zero() {
                    return Err(LieError::InvalidMatrix(format!("entry ({},{}) lies off the diagonal blocks", r + 1, c + 1)));
                }
            }
        }
        let block = |o: usize| {
            FactorComponent::from_matrix(&[
                [m[o][o].clone(), m[o][o + 1].clone()],
                [m[o + 1][o].clone(), m[o + 1][o + 1].clone()],
            ])
        };
        Ok(Element::from_components(&block(0)?, &block(2)?))
    }

    /// Image under the outer automorphism exchanging the two factors.
    pub fn swapped(&self) -> Element {
        Element::from_components(&self.component(Factor::Second), &self.component(Factor::First))
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element(std::array::from_fn(|k| -&self.0[k]))
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

impl Mul<&Element> for &Scalar {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl Mul<Element> for Scalar {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        rhs.scale(&self)
    }
}

fn coefficient_prefix(c: &Scalar) -> String {
    if c.is_one() {
        String::new()
    } else if (-c).is_one() {
        "-".into()
    } else if c.is_real() && c.is_integral() {
        c.to_string()
    } else {
        format!("({c})")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .zip(COORD_NAMES)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| format!("{}{name}", coefficient_prefix(c)))
            .collect();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = terms[0].clone();
        for t in &terms[1..] {
            match t.strip_prefix('-') {
                Some(rest) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                None => {
                    out.push_str(" + ");
                    out.push_str(t);
                }
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element({self})")
    }
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<Scalar>::deserialize(deserializer)?;
        if v.len() != 6 {
            return Err(serde::de::Error::invalid_length(v.len(), &"six Chevalley coordinates"));
        }
        Ok(Element::from_slice(&v))
    }
}

/// Conjugacy type of a single `sl(2)` element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sl2Type {
    Zero,
    Nilpotent,
    /// Carries the determinant; the eigenvalues are `±λ` with `λ² = -det`.
    Semisimple(Scalar),
}

impl Sl2Type {
    pub fn is_semisimple(&self) -> bool {
        matches!(self, Sl2Type::Semisimple(_))
    }
}

/// The traceless 2×2 block `[[h, x], [y, -h]]` of one factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FactorComponent {
    pub h: Scalar,
    pub x: Scalar,
    pub y: Scalar,
}

impl FactorComponent {
    pub fn new(h: Scalar, x: Scalar, y: Scalar) -> Self {
        FactorComponent { h, x, y }
    }

    pub fn zero() -> Self {
        FactorComponent::default()
    }

    pub fn is_zero(&self) -> bool {
        self.h.is_zero() && self.x.is_zero() && self.y.is_zero()
    }

    pub fn matrix(&self) -> Mat2 {
        [[self.h.clone(), self.x.clone()], [self.y.clone(), -&self.h]]
    }

    pub fn from_matrix(m: &Mat2) -> Result<Self, LieError> {
        if !(&m[0][0] + &m[1][1]).is_zero() {
            return Err(LieError::InvalidMatrix("diagonal block is not traceless".into()));
        }
        Ok(FactorComponent::new(m[0][0].clone(), m[0][1].clone(), m[1][0].clone()))
    }

    pub fn det(&self) -> Scalar {
        -(&self.h * &self.h) - &self.x * &self.y
    }

    pub fn bracket(&self, o: &FactorComponent) -> FactorComponent {
        if self.is_zero() || o.is_zero() {
            return FactorComponent::zero();
        }
        let two = Scalar::from_int(2);
        FactorComponent {
            h: &self.x * &o.y - &self.y * &o.x,
            x: &two * &(&self.h * &o.x - &self.x * &o.h),
            y: &two * &(&self.y * &o.h - &self.h * &o.y),
        }
    }

    pub fn sl2_type(&self) -> Sl2Type {
        if self.is_zero() {
            return Sl2Type::Zero;
        }
        let d = self.det();
        if d.is_zero() {
            Sl2Type::Nilpotent
        } else {
            Sl2Type::Semisimple(d)
        }
    }

    /// `A c A⁻¹` for `A` with determinant one.
    pub fn conjugate(&self, a: &Mat2) -> FactorComponent {
        let ainv = mat2_adjugate(a);
        let m = mat2_mul(&mat2_mul(a, &self.matrix()), &ainv);
        FactorComponent::new(m[0][0].clone(), m[0][1].clone(), m[1][0].clone())
    }
}

/// Conjugacy type of a factor component: zero, nilpotent, or semisimple with
/// its determinant.
pub fn sl2_element_type(c: &FactorComponent) -> Sl2Type {
    c.sl2_type()
}

pub type Mat2 = [[Scalar; 2]; 2];

pub fn mat2_identity() -> Mat2 {
    [[Scalar::one(), Scalar::zero()], [Scalar::zero(), Scalar::one()]]
}

pub fn mat2_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|r| std::array::from_fn(|c| &a[r][0] * &b[0][c] + &a[r][1] * &b[1][c]))
}

pub fn mat2_det(a: &Mat2) -> Scalar {
    &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0]
}

/// `[[d, -b], [-c, a]]`; the inverse when the determinant is one.
pub fn mat2_adjugate(a: &Mat2) -> Mat2 {
    [[a[1][1].clone(), -&a[0][1]], [-&a[1][0], a[0][0].clone()]]
}
