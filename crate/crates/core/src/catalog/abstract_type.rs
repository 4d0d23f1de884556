use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lie::{Element, Subalgebra};
use crate::linalg;
use crate::scalar::Scalar;

use super::CatalogError;

/// Solvable Lie algebras of dimension at most four, in the naming of
/// de Graaf's list (only the four-dimensional type `M8` is encoded).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AbstractSolvableType {
    J,
    K1,
    K2,
    L1,
    L2,
    L3(Scalar),
    L4,
    L5,
    M8,
}

/// `[z_i, z_j] = Σ c_k z_k` for `i < j`, zero-based indices. Pairs that are
/// absent bracket to zero.
pub type StructureTable = Vec<((usize, usize), Vec<(usize, Scalar)>)>;

impl AbstractSolvableType {
    pub fn dim(&self) -> usize {
        use AbstractSolvableType::*;
        match self {
            J => 1,
            K1 | K2 => 2,
            L1 | L2 | L3(_) | L4 | L5 => 3,
            M8 => 4,
        }
    }

    pub fn name(&self) -> String {
        match self {
            AbstractSolvableType::L3(a) => format!("L3,{a}"),
            other => format!("{other:?}"),
        }
    }

    /// Nonzero brackets among the abstract basis `z_1, …, z_m`.
    pub fn structure_constants(&self) -> StructureTable {
        use AbstractSolvableType::*;
        let one = Scalar::one;
        let neg = || -Scalar::one();
        // Relations written as [z3, z1] etc. are stored as [z1, z3] = -(…).
        match self {
            J | K1 | L1 => vec![],
            K2 => vec![((0, 1), vec![(0, one())])],
            L2 => vec![((0, 2), vec![(0, neg())]), ((1, 2), vec![(1, neg())])],
            L3(a) => vec![
                ((0, 2), vec![(1, neg())]),
                ((1, 2), vec![(0, -a), (1, neg())]),
            ],
            L4 => vec![((0, 2), vec![(1, neg())]), ((1, 2), vec![(0, neg())])],
            L5 => vec![((0, 2), vec![(1, neg())])],
            M8 => vec![((0, 1), vec![(1, one())]), ((2, 3), vec![(3, one())])],
        }
    }

    /// Bracket of two abstract vectors under [`Self::structure_constants`].
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for ((i, j), terms) in self.structure_constants() {
            let c = &u[i] * &v[j] - &u[j] * &v[i];
            if c.is_zero() {
                continue;
            }
            for (k, s) in terms {
                out[k] += &(&c * &s);
            }
        }
        out
    }

    /// Checks the Jacobi identity on all basis triples.
    pub fn satisfies_jacobi(&self) -> bool {
        let n = self.dim();
        let e = |k: usize| {
            let mut v = vec![Scalar::zero(); n];
            v[k] = Scalar::one();
            v
        };
        (0..n).all(|i| {
            (0..n).all(|j| {
                (0..n).all(|k| {
                    let (a, b, c) = (e(i), e(j), e(k));
                    let t1 = self.bracket(&a, &self.bracket(&b, &c));
                    let t2 = self.bracket(&b, &self.bracket(&c, &a));
                    let t3 = self.bracket(&c, &self.bracket(&a, &b));
                    (0..n).all(|m| (&t1[m] + &t2[m] + &t3[m]).is_zero())
                })
            })
        })
    }
}

impl fmt::Display for AbstractSolvableType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Abstract isomorphism type of a solvable subalgebra of dimension ≤ 4.
///
/// This works only from the bracket structure of `S` (derived algebra and
/// the trace/determinant of a complement acting on it); it never looks at
/// how `S` sits inside the two factors.
pub fn abstract_type_of(s: &Subalgebra) -> Result<AbstractSolvableType, CatalogError> {
    if s.dim() > 4 {
        return Err(CatalogError::UnsupportedDim(s.dim()));
    }
    if !s.is_solvable() {
        return Err(CatalogError::NotSolvable);
    }
    let derived = s.derived();
    Ok(match (s.dim(), derived.dim()) {
        (0, _) => return Err(CatalogError::UnsupportedDim(0)),
        (1, _) => AbstractSolvableType::J,
        (2, 0) => AbstractSolvableType::K1,
        (2, _) => AbstractSolvableType::K2,
        (3, 0) => AbstractSolvableType::L1,
        (3, 1) => {
            let central = s.basis().iter().all(|b| b.bracket(&derived.basis()[0]).is_zero());
            if central {
                AbstractSolvableType::L5
            } else {
                AbstractSolvableType::L3(Scalar::zero())
            }
        }
        (3, _) => {
            let t = s.complement_vector(&derived).expect("derived algebra is proper");
            let m = derived.ad_matrix(t);
            three_dim_from_action(&m)
        }
        (4, _) => AbstractSolvableType::M8,
        _ => unreachable!("dimension checked above"),
    })
}

/// Type of `⟨t⟩ ⋉ d` with `d` two-dimensional abelian and `m = ad t|_d`
/// invertible.
fn three_dim_from_action(m: &[Vec<Scalar>]) -> AbstractSolvableType {
    let scalar = m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1];
    if scalar {
        return AbstractSolvableType::L2;
    }
    let tr = linalg::trace(m);
    if tr.is_zero() {
        return AbstractSolvableType::L4;
    }
    // Rescale t so that tr = 1; then the characteristic polynomial is
    // λ² - λ - a.
    let a = -(linalg::det(m) / tr.square());
    AbstractSolvableType::L3(a)
}

/// Convenience for building a subalgebra from generators and typing it.
pub fn abstract_type_of_span(generators: &[Element]) -> Result<AbstractSolvableType, CatalogError> {
    let s = Subalgebra::span_close(generators).map_err(CatalogError::Lie)?;
    abstract_type_of(&s)
}
