//! `so(4,C) ≅ sl(2,C) ⊕ sl(2,C)` in its Chevalley basis: elements, the
//! bracket, and structural computations on subalgebras.

mod element;
mod subalgebra;

pub use element::{
    mat2_adjugate, mat2_det, mat2_identity, mat2_mul, sl2_element_type, Element, Factor,
    FactorComponent, Mat2, Sl2Type, COORD_NAMES,
};
pub use subalgebra::{DerivedSeries, Subalgebra};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("span is not closed under the bracket: [v{i}, v{j}] = {bracket} leaves it")]
    NotClosed { i: usize, j: usize, bracket: Element },
    #[error("the derived series stabilized at a subalgebra that is not semisimple")]
    StabilizationNotSemisimple,
    #[error("a solvable subalgebra has no Levi factor")]
    Solvable,
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
}
