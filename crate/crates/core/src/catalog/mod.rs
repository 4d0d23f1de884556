//! Canonical representatives for every class of subalgebras of `so(4,C)`,
//! the abstract solvable types they realize, and the shipped JSON catalog.

mod abstract_type;
mod label;

pub use abstract_type::{abstract_type_of, abstract_type_of_span, AbstractSolvableType, StructureTable};
pub use label::{Branch, ClassLabel};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lie::{Element, LieError, Subalgebra};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid class label: {0}")]
    InvalidLabel(String),
    #[error("{label}: the canonical representative needs √({radicand}), which is not in Q(i)")]
    NonconstructibleOverField { label: String, radicand: Scalar },
    #[error("abstract types are only recognized up to dimension 4 (got {0})")]
    UnsupportedDim(usize),
    #[error("subalgebra is not solvable")]
    NotSolvable,
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("catalog file: {0}")]
    Format(String),
}

/// Format version written to and accepted from catalog files.
pub const CATALOG_FORMAT_VERSION: &str = "1";

/// The shipped catalog, embedded at build time.
pub const EMBEDDED_CATALOG: &str = include_str!("../../data/catalog.json");

/// A class label together with explicit generators of a subalgebra in it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Representative {
    pub label: ClassLabel,
    pub generators: Vec<Element>,
    pub notes: String,
}

impl Representative {
    pub fn subalgebra(&self) -> Result<Subalgebra, LieError> {
        Subalgebra::span_close(&self.generators)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterSamples {
    pub j8: Vec<Scalar>,
    pub k2: Vec<Scalar>,
    pub l3: Vec<Scalar>,
}

/// Parameters at which the continuous families are sampled.
///
/// `L3` samples are restricted to values where `√(1+4a)` lies in `Q(i)`;
/// other values have valid labels but no representative over `Q(i)`.
pub fn parameter_samples() -> ParameterSamples {
    let s = |t: &str| t.parse::<Scalar>().expect("literal");
    let common = ["1", "-1", "2", "-2", "1/2", "-1/2", "3/16", "-3/16", "i", "1+i"];
    let mut k2: Vec<Scalar> = vec![Scalar::zero()];
    k2.extend(common.iter().map(|t| s(t)));
    ParameterSamples {
        j8: common.iter().map(|t| s(t)).collect(),
        k2,
        l3: ["2", "3/4", "-1/2", "-3/16", "-1/4+1/2i"].iter().map(|t| s(t)).collect(),
    }
}

/// The catalog file: every discrete class plus the sampled parametric ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Catalog {
    pub format_version: String,
    pub parameter_samples: ParameterSamples,
    pub entries: Vec<Representative>,
}

impl Catalog {
    pub fn from_json(text: &str) -> Result<Catalog, CatalogError> {
        let cat: Catalog = serde_json::from_str(text).map_err(|e| CatalogError::Format(e.to_string()))?;
        if cat.format_version != CATALOG_FORMAT_VERSION {
            return Err(CatalogError::Format(format!(
                "unsupported format_version {:?} (expected {CATALOG_FORMAT_VERSION:?})",
                cat.format_version
            )));
        }
        for entry in &cat.entries {
            entry.label.validate()?;
        }
        Ok(cat)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    /// Builds the catalog from [`representative_of`] over all discrete
    /// labels and the parameter samples.
    pub fn build() -> Catalog {
        let samples = parameter_samples();
        let mut entries = Vec::new();
        for label in discrete_labels() {
            entries.push(representative_of(&label).expect("discrete classes are constructible"));
        }
        for a in &samples.j8 {
            entries.push(j8_representative(a));
        }
        for index in [2, 4] {
            for a in &samples.k2 {
                entries.push(k2_family_representative(index, a));
            }
        }
        for branch in [Branch::One, Branch::Two] {
            for a in &samples.l3 {
                let label = ClassLabel::L3 { a: a.clone(), branch };
                entries.push(representative_of(&label).expect("L3 samples are constructible"));
            }
        }
        entries.sort_by_key(|r| r.label.dim());
        Catalog { format_version: CATALOG_FORMAT_VERSION.into(), parameter_samples: samples, entries }
    }
}

/// The embedded catalog.
pub fn enumerate_catalog() -> Vec<Representative> {
    Catalog::from_json(EMBEDDED_CATALOG).expect("embedded catalog is valid").entries
}

/// All labels without a continuous parameter, in dimension order.
pub fn discrete_labels() -> Vec<ClassLabel> {
    use ClassLabel::*;
    let mut v = vec![Zero];
    v.extend((1..=7).map(|index| J { index }));
    v.extend((1..=4).map(|index| K1 { index }));
    v.extend([1, 3, 5].map(|index| K2 { index }));
    v.push(L2);
    v.extend((1..=4).map(|index| L30 { index }));
    v.push(L4);
    v.extend((1..=3).map(|index| A1 { index }));
    v.push(M8);
    v.extend((1..=4).map(|index| A1PlusJ { index }));
    v.extend((1..=2).map(|index| A1PlusK2 { index }));
    v.push(Full);
    v
}

fn el(c: [i64; 6]) -> Element {
    Element::from_ints(c)
}

fn rep(label: ClassLabel, generators: Vec<Element>, notes: &str) -> Representative {
    Representative { label, generators, notes: notes.into() }
}

/// `J^{8,a} = ⟨h1 + a h2⟩`, labelled by `a²`.
pub fn j8_representative(a: &Scalar) -> Representative {
    let g = Element::h1() + Element::h2().scale(a);
    rep(ClassLabel::J8 { a_squared: a.square() }, vec![g], &format!("<h1 + a h2>, a = {a}"))
}

/// `K^{2,a}_2 = ⟨x1, h1 + a h2⟩` or `K^{4,a}_2 = ⟨x2, h2 + a h1⟩`.
pub fn k2_family_representative(index: u8, a: &Scalar) -> Representative {
    let label = ClassLabel::K2Family { index, a_squared: a.square() };
    match index {
        2 => rep(label, vec![Element::x1(), Element::h1() + Element::h2().scale(a)], &format!("<x1, h1 + a h2>, a = {a}")),
        _ => rep(label, vec![Element::x2(), Element::h2() + Element::h1().scale(a)], &format!("<x2, h2 + a h1>, a = {a}")),
    }
}

fn sqrt_or_err(label: &ClassLabel, radicand: Scalar) -> Result<Scalar, CatalogError> {
    radicand.sqrt_exact().ok_or_else(|| CatalogError::NonconstructibleOverField { label: label.to_string(), radicand })
}

/// Canonical generators for `label`.
///
/// For the sign-symmetric families the parameter `a` is recovered as the
/// principal square root of the stored `a²`; for `L3` the basis uses the
/// principal root of `1 + 4a`. Either root may fall outside `Q(i)`, in which
/// case the label is still valid but has no representative here.
pub fn representative_of(label: &ClassLabel) -> Result<Representative, CatalogError> {
    use ClassLabel::*;
    label.validate()?;
    let (h1, x1, y1, h2, x2, y2) =
        (Element::h1(), Element::x1(), Element::y1(), Element::h2(), Element::x2(), Element::y2());
    Ok(match label {
        Zero => rep(Zero, vec![], "zero subalgebra"),
        J { index } => {
            let g = match index {
                1 => x1,
                2 => x2,
                3 => h1,
                4 => h2,
                5 => x1 + x2,
                6 => x1 + h2,
                _ => h1 + x2,
            };
            rep(label.clone(), vec![g.clone()], &format!("<{g}>"))
        }
        J8 { a_squared } => j8_representative(&sqrt_or_err(label, a_squared.clone())?),
        K1 { index } => {
            let g = match index {
                1 => vec![x1, x2],
                2 => vec![x1, h2],
                3 => vec![h1, x2],
                _ => vec![h1, h2],
            };
            rep(label.clone(), g, "abelian, one generator per factor")
        }
        K2 { index } => {
            let g = match index {
                1 => vec![x1 + x2, h1 + h2],
                3 => vec![x1, h1 + x2],
                _ => vec![x2, h2 + x1],
            };
            rep(label.clone(), g, "non-abelian 2-dim")
        }
        K2Family { index, a_squared } => k2_family_representative(*index, &sqrt_or_err(label, a_squared.clone())?),
        L2 => rep(L2, vec![x1, x2, h1 + h2], "<x1, x2, h1 + h2>"),
        L3 { a, branch } => {
            let r = sqrt_or_err(label, Scalar::one() + Scalar::from_int(4) * a)?;
            let r = match branch {
                Branch::One => r,
                Branch::Two => -r,
            };
            let t = h1.scale(&(Scalar::one() + &r)) + h2.scale(&(Scalar::one() - &r));
            rep(label.clone(), vec![x1, x2, t], &format!("<x1, x2, (1+r)h1 + (1-r)h2>, r = {r}"))
        }
        L30 { index } => {
            let g = match index {
                1 => vec![h1, x2, h2],
                2 => vec![x1, x2, h2],
                3 => vec![x1, h1, h2],
                _ => vec![x1, h1, x2],
            };
            rep(label.clone(), g, "isomorphic to L3,0")
        }
        L4 => rep(L4, vec![x1, x2, el([1, 0, 0, -1, 0, 0])], "<x1, x2, h1 - h2>"),
        A1 { index } => {
            let g = match index {
                1 => vec![h1, x1, y1],
                2 => vec![h2, x2, y2],
                _ => vec![h1 + h2, x1 + x2, y1 + y2],
            };
            rep(label.clone(), g, "simple, isomorphic to sl(2)")
        }
        M8 => rep(M8, vec![x1, x2, h1, h2], "Borel subalgebra"),
        A1PlusJ { index } => {
            let g = match index {
                1 => vec![x1, y1, h1, h2],
                2 => vec![x1, y1, h1, x2],
                3 => vec![x2, y2, h2, h1],
                _ => vec![x2, y2, h2, x1],
            };
            rep(label.clone(), g, "sl(2) plus a commuting line")
        }
        A1PlusK2 { index } => {
            let g = match index {
                1 => vec![x1, y1, h1, x2, h2],
                _ => vec![x2, y2, h2, x1, h1],
            };
            rep(label.clone(), g, "sl(2) plus a commuting 2-dim non-abelian algebra")
        }
        Full => rep(Full, Element::chevalley_basis().to_vec(), "all of so(4,C)"),
    })
}
