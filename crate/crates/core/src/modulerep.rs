//! `so(4,C)` as a module over an `sl(2)` subalgebra under the adjoint
//! action. `V(m)` is the irreducible module of highest weight `m`, of
//! dimension `m + 1`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::catalog::ClassLabel;
use crate::classify::{classify, ClassifyError};
use crate::lie::{Element, Factor, Subalgebra};
use crate::linalg;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("not an sl(2)-triple: {0}")]
    NotATriple(String),
    #[error("subalgebra is not a 3-dimensional simple subalgebra")]
    NotSemisimple,
    #[error("ad h has weights outside 0..=6 or the weight spaces do not fill so(4)")]
    NonIntegralWeights,
    #[error("extensions are only described for k = 1 or 2 (got {0})")]
    InvalidExtensionDim(usize),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Elements with `[h,x] = 2x`, `[h,y] = -2y`, `[x,y] = h`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Triple {
    pub h: Element,
    pub x: Element,
    pub y: Element,
}

impl Sl2Triple {
    pub fn new(h: Element, x: Element, y: Element) -> Result<Self, ModuleError> {
        let two = Scalar::from_int(2);
        if h.bracket(&x) != x.scale(&two) {
            return Err(ModuleError::NotATriple("[h,x] != 2x".into()));
        }
        if h.bracket(&y) != y.scale(&-two) {
            return Err(ModuleError::NotATriple("[h,y] != -2y".into()));
        }
        if x.bracket(&y) != h {
            return Err(ModuleError::NotATriple("[x,y] != h".into()));
        }
        Ok(Sl2Triple { h, x, y })
    }

    /// The standard triple of one factor.
    pub fn of_factor(f: Factor) -> Sl2Triple {
        let o = f.offset();
        Sl2Triple { h: Element::unit(o), x: Element::unit(o + 1), y: Element::unit(o + 2) }
    }

    /// A triple spanning a 3-dimensional simple subalgebra: the preimages of
    /// a factor's `h, x, y` under a projection that is an isomorphism.
    pub fn from_subalgebra(s: &Subalgebra) -> Result<Sl2Triple, ModuleError> {
        if s.dim() != 3 || !s.has_nondegenerate_killing_form() {
            return Err(ModuleError::NotSemisimple);
        }
        let f = Factor::BOTH
            .into_iter()
            .find(|&f| s.factor_projection(f).dim() == 3)
            .ok_or(ModuleError::NotSemisimple)?;
        let o = f.offset();
        let rows: Vec<Vec<Scalar>> = (o..o + 3).map(|k| s.basis().iter().map(|b| b.coeff(k).clone()).collect()).collect();
        let preimage = |k: usize| -> Result<Element, ModuleError> {
            let target = Element::unit(o + k).to_vec()[o..o + 3].to_vec();
            let c = linalg::solve(&rows, &target).ok_or(ModuleError::NotSemisimple)?;
            Ok(s.combine(&c))
        };
        Sl2Triple::new(preimage(0)?, preimage(1)?, preimage(2)?)
    }

    pub fn span(&self) -> Subalgebra {
        Subalgebra::span_close(&[self.h.clone(), self.x.clone(), self.y.clone()]).expect("a triple spans sl(2)")
    }
}

/// The adjoint matrix of `u` on all of `so(4,C)` in Chevalley coordinates.
fn ad_full(u: &Element) -> Vec<Vec<Scalar>> {
    let cols: Vec<Vec<Scalar>> = Element::chevalley_basis().iter().map(|b| u.bracket(b).to_vec()).collect();
    linalg::transpose(&cols)
}

/// `V(m_1) ⊕ V(m_2) ⊕ …` with one highest-weight vector per summand.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModuleDecomposition {
    /// Highest weights, largest first.
    pub summands: Vec<u32>,
    pub highest_weight_vectors: Vec<Element>,
}

impl ModuleDecomposition {
    pub fn total_dim(&self) -> u32 {
        self.summands.iter().map(|m| m + 1).sum()
    }

    pub fn multiplicity(&self, m: u32) -> usize {
        self.summands.iter().filter(|&&k| k == m).count()
    }
}

impl fmt::Display for ModuleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut weights = self.summands.clone();
        weights.dedup();
        for (k, m) in weights.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match self.multiplicity(*m) {
                1 => write!(f, "V({m})")?,
                n => write!(f, "{n}·V({m})")?,
            }
        }
        Ok(())
    }
}

/// Decomposes `so(4,C)` under `ad` of the triple's span.
pub fn adjoint_decompose(t: &Sl2Triple) -> Result<ModuleDecomposition, ModuleError> {
    let t = Sl2Triple::new(t.h.clone(), t.x.clone(), t.y.clone())?;
    let adh = ad_full(&t.h);
    let adx = ad_full(&t.x);
    let kernel_x = linalg::nullspace(&adx, 6).len();
    let mut summands = Vec::new();
    let mut vectors = Vec::new();
    for m in (0..=6u32).rev() {
        let shifted: Vec<Vec<Scalar>> = adh
            .iter()
            .enumerate()
            .map(|(r, row)| row.iter().enumerate().map(|(c, v)| if r == c { v - Scalar::from_int(m as i64) } else { v.clone() }).collect())
            .collect();
        let stacked: Vec<Vec<Scalar>> = adx.iter().chain(&shifted).cloned().collect();
        let hw = linalg::nullspace(&stacked, 6);
        let (hw, _) = linalg::rref(&hw);
        for v in hw {
            summands.push(m);
            vectors.push(Element::from_slice(&v));
        }
    }
    let decomposition = ModuleDecomposition { summands, highest_weight_vectors: vectors };
    if decomposition.total_dim() != 6 || decomposition.summands.len() != kernel_x {
        return Err(ModuleError::NonIntegralWeights);
    }
    Ok(decomposition)
}

/// The trivial-isotypic part of the adjoint module and the classes of
/// subalgebras obtained by adjoining `k` dimensions from it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionCandidates {
    pub k: usize,
    /// Sum of the `V(0)` summands, equal to the centralizer of the triple.
    pub centralizer: Vec<Element>,
    /// Classes of `⟨t⟩ ⊕ K` for `K` a `k`-dimensional solvable subalgebra
    /// of the centralizer, one per conjugacy class of `K`.
    pub classes: Vec<ClassLabel>,
}

pub fn extension_candidates(t: &Sl2Triple, k: usize) -> Result<ExtensionCandidates, ModuleError> {
    if !(1..=2).contains(&k) {
        return Err(ModuleError::InvalidExtensionDim(k));
    }
    let decomposition = adjoint_decompose(t)?;
    let centralizer: Vec<Element> = decomposition
        .summands
        .iter()
        .zip(&decomposition.highest_weight_vectors)
        .filter(|(m, _)| **m == 0)
        .map(|(_, v)| v.clone())
        .collect();
    let mut classes = Vec::new();
    if !centralizer.is_empty() {
        let c = Subalgebra::span_close(&centralizer).map_err(ClassifyError::from)?;
        let inner = Sl2Triple::from_subalgebra(&c)?;
        // Solvable subalgebras of sl(2) up to conjugacy: ⟨h⟩, ⟨x⟩ in
        // dimension one and the Borel ⟨h, x⟩ in dimension two.
        let choices: Vec<Vec<Element>> = match k {
            1 => vec![vec![inner.h.clone()], vec![inner.x.clone()]],
            _ => vec![vec![inner.h.clone(), inner.x.clone()]],
        };
        for extra in choices {
            let mut gens = vec![t.h.clone(), t.x.clone(), t.y.clone()];
            gens.extend(extra);
            classes.push(classify(&Subalgebra::span_close(&gens).map_err(ClassifyError::from)?)?);
        }
    }
    Ok(ExtensionCandidates { k, centralizer, classes })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagonal() -> Sl2Triple {
        Sl2Triple::new(Element::h1() + Element::h2(), Element::x1() + Element::x2(), Element::y1() + Element::y2()).unwrap()
    }

    #[test]
    fn decompositions() {
        let d1 = adjoint_decompose(&Sl2Triple::of_factor(Factor::First)).unwrap();
        assert_eq!(d1.summands, vec![2, 0, 0, 0]);
        assert_eq!(d1.to_string(), "V(2) + 3·V(0)");
        assert_eq!(d1.highest_weight_vectors[0], Element::x1());
        let d2 = adjoint_decompose(&Sl2Triple::of_factor(Factor::Second)).unwrap();
        assert_eq!(d2.summands, vec![2, 0, 0, 0]);
        let d3 = adjoint_decompose(&diagonal()).unwrap();
        assert_eq!(d3.summands, vec![2, 2]);
        assert_eq!(d3.to_string(), "2·V(2)");
    }

    #[test]
    fn rejects_non_triples() {
        assert!(Sl2Triple::new(Element::h1(), Element::x1(), Element::y2()).is_err());
        let borel = Subalgebra::span_close(&[Element::h1(), Element::x1()]).unwrap();
        assert_eq!(Sl2Triple::from_subalgebra(&borel), Err(ModuleError::NotSemisimple));
    }

    #[test]
    fn triple_from_twisted_subalgebra() {
        let s = Subalgebra::span_close(&[
            Element::h1() - Element::h2(),
            Element::x1() - Element::y2(),
            Element::y1() - Element::x2(),
        ])
        .unwrap();
        let t = Sl2Triple::from_subalgebra(&s).unwrap();
        assert_eq!(t.span(), s);
        assert_eq!(adjoint_decompose(&t).unwrap().summands, vec![2, 2]);
    }

    #[test]
    fn extensions() {
        let none = extension_candidates(&diagonal(), 1).unwrap();
        assert!(none.centralizer.is_empty() && none.classes.is_empty());

        let one = extension_candidates(&Sl2Triple::of_factor(Factor::First), 1).unwrap();
        assert_eq!(Subalgebra::span_close(&one.centralizer).unwrap(), Subalgebra::factor(Factor::Second));
        assert_eq!(one.classes, vec![ClassLabel::A1PlusJ { index: 1 }, ClassLabel::A1PlusJ { index: 2 }]);

        let two = extension_candidates(&Sl2Triple::of_factor(Factor::First), 2).unwrap();
        assert_eq!(two.classes, vec![ClassLabel::A1PlusK2 { index: 1 }]);
        assert!(matches!(extension_candidates(&diagonal(), 3), Err(ModuleError::InvalidExtensionDim(3))));
    }
}
