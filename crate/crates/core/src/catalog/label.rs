use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

use super::{AbstractSolvableType, CatalogError};

/// Which of the two inequivalent `L_{3,a}` classes a subalgebra belongs to.
///
/// Branch 1 is the class whose factor-1 eigenvalue, normalized so the two
/// eigenvalues sum to one, equals `(1 + r)/2` for the principal square root
/// `r = √(1+4a)` (open upper half-plane or positive real axis).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Branch {
    One,
    Two,
}

impl Branch {
    pub fn flipped(self) -> Branch {
        match self {
            Branch::One => Branch::Two,
            Branch::Two => Branch::One,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Branch::One => 1,
            Branch::Two => 2,
        }
    }
}

impl TryFrom<u8> for Branch {
    type Error = String;
    fn try_from(v: u8) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Branch::One),
            2 => Ok(Branch::Two),
            _ => Err(format!("branch must be 1 or 2, got {v}")),
        }
    }
}

impl From<Branch> for u8 {
    fn from(b: Branch) -> u8 {
        b.number()
    }
}

/// An inner-automorphism class of subalgebras of `so(4,C)`.
///
/// Families with a sign-symmetric modulus (`J^{8,a}`, `K^{2,a}_2`,
/// `K^{4,a}_2`) store `a²`, so `a` and `-a` give the same label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum ClassLabel {
    Zero,
    /// `J^1 … J^7`.
    J { index: u8 },
    J8 { a_squared: Scalar },
    /// `K^1_1 … K^4_1`.
    K1 { index: u8 },
    /// The discrete `K_2` classes `K^1_2`, `K^3_2`, `K^5_2`.
    K2 { index: u8 },
    /// `K^{2,a}_2` (index 2) or `K^{4,a}_2` (index 4), `a ∈ C`.
    K2Family { index: u8, a_squared: Scalar },
    L2,
    L3 { a: Scalar, branch: Branch },
    /// `L^1_{3,0} … L^4_{3,0}`.
    L30 { index: u8 },
    L4,
    M8,
    /// `A^1_1`, `A^2_1`, `A^3_1`.
    A1 { index: u8 },
    /// `(A1 ⊕ J)^1 … (A1 ⊕ J)^4`.
    A1PlusJ { index: u8 },
    /// `(A1 ⊕ K2)^1`, `(A1 ⊕ K2)^2`.
    A1PlusK2 { index: u8 },
    Full,
}

fn check_index(index: u8, allowed: &[u8], family: &str) -> Result<(), CatalogError> {
    if allowed.contains(&index) {
        Ok(())
    } else {
        Err(CatalogError::InvalidLabel(format!("{family} has no class with index {index}")))
    }
}

impl ClassLabel {
    pub fn validate(&self) -> Result<(), CatalogError> {
        use ClassLabel::*;
        match self {
            Zero | L2 | L4 | M8 | Full => Ok(()),
            J { index } => check_index(*index, &[1, 2, 3, 4, 5, 6, 7], "J"),
            J8 { a_squared } => {
                if a_squared.is_zero() {
                    Err(CatalogError::InvalidLabel("J8 requires a nonzero parameter".into()))
                } else {
                    Ok(())
                }
            }
            K1 { index } => check_index(*index, &[1, 2, 3, 4], "K1"),
            K2 { index } => check_index(*index, &[1, 3, 5], "K2"),
            K2Family { index, .. } => check_index(*index, &[2, 4], "K2 family"),
            L3 { a, .. } => {
                if a.is_zero() {
                    Err(CatalogError::InvalidLabel("L3 with a = 0 is one of the L3,0 classes".into()))
                } else if (Scalar::from_int(4) * a + Scalar::one()).is_zero() {
                    Err(CatalogError::InvalidLabel("L3 with a = -1/4 does not occur in so(4,C)".into()))
                } else {
                    Ok(())
                }
            }
            L30 { index } => check_index(*index, &[1, 2, 3, 4], "L3,0"),
            A1 { index } => check_index(*index, &[1, 2, 3], "A1"),
            A1PlusJ { index } => check_index(*index, &[1, 2, 3, 4], "(A1+J)"),
            A1PlusK2 { index } => check_index(*index, &[1, 2], "(A1+K2)"),
        }
    }

    pub fn dim(&self) -> usize {
        use ClassLabel::*;
        match self {
            Zero => 0,
            J { .. } | J8 { .. } => 1,
            K1 { .. } | K2 { .. } | K2Family { .. } => 2,
            L2 | L3 { .. } | L30 { .. } | L4 | A1 { .. } => 3,
            M8 | A1PlusJ { .. } => 4,
            A1PlusK2 { .. } => 5,
            Full => 6,
        }
    }

    pub fn is_parametric(&self) -> bool {
        matches!(self, ClassLabel::J8 { .. } | ClassLabel::K2Family { .. } | ClassLabel::L3 { .. })
    }

    pub fn is_solvable(&self) -> bool {
        use ClassLabel::*;
        !matches!(self, A1 { .. } | A1PlusJ { .. } | A1PlusK2 { .. } | Full)
    }

    /// Name of the class or family with parameters dropped, e.g. `K2^2` for
    /// every `K^{2,a}_2` and `L3^1` for every branch-1 `L_{3,a}`.
    pub fn family_key(&self) -> String {
        match self {
            ClassLabel::J8 { .. } => "J8".into(),
            ClassLabel::K2Family { index, .. } => format!("K2^{index}"),
            ClassLabel::L3 { branch, .. } => format!("L3^{}", branch.number()),
            other => other.to_string(),
        }
    }

    /// The label of the image under the factor swap `h1↔h2, x1↔x2, y1↔y2`.
    ///
    /// The `J8` family is preserved but its parameter is inverted, since
    /// `⟨h1 + a h2⟩` swaps to `⟨h1 + a⁻¹ h2⟩`.
    pub fn swapped(&self) -> ClassLabel {
        use ClassLabel::*;
        let pair = |i: u8, a: u8, b: u8| if i == a { b } else if i == b { a } else { i };
        match self.clone() {
            J { index } => J { index: pair(pair(pair(index, 1, 2), 3, 4), 6, 7) },
            J8 { a_squared } => J8 { a_squared: a_squared.inv().expect("J8 parameters are nonzero") },
            K1 { index } => K1 { index: pair(index, 2, 3) },
            K2 { index } => K2 { index: pair(index, 3, 5) },
            K2Family { index, a_squared } => K2Family { index: pair(index, 2, 4), a_squared },
            L3 { a, branch } => L3 { a, branch: branch.flipped() },
            L30 { index } => L30 { index: pair(pair(index, 1, 3), 2, 4) },
            A1 { index } => A1 { index: pair(index, 1, 2) },
            A1PlusJ { index } => A1PlusJ { index: pair(pair(index, 1, 3), 2, 4) },
            A1PlusK2 { index } => A1PlusK2 { index: pair(index, 1, 2) },
            fixed => fixed,
        }
    }

    /// The abstract solvable type of every subalgebra in this class, or
    /// `None` for non-solvable classes and the zero subalgebra.
    pub fn abstract_type(&self) -> Option<AbstractSolvableType> {
        use ClassLabel::*;
        Some(match self {
            J { .. } | J8 { .. } => AbstractSolvableType::J,
            K1 { .. } => AbstractSolvableType::K1,
            K2 { .. } | K2Family { .. } => AbstractSolvableType::K2,
            L2 => AbstractSolvableType::L2,
            L3 { a, .. } => AbstractSolvableType::L3(a.clone()),
            L30 { .. } => AbstractSolvableType::L3(Scalar::zero()),
            L4 => AbstractSolvableType::L4,
            M8 => AbstractSolvableType::M8,
            Zero | A1 { .. } | A1PlusJ { .. } | A1PlusK2 { .. } | Full => return None,
        })
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ClassLabel::*;
        match self {
            Zero => f.write_str("0"),
            J { index } => write!(f, "J{index}"),
            J8 { a_squared } => write!(f, "J8[a^2={a_squared}]"),
            K1 { index } => write!(f, "K1^{index}"),
            K2 { index } => write!(f, "K2^{index}"),
            K2Family { index, a_squared } => write!(f, "K2^{index}[a^2={a_squared}]"),
            L2 => f.write_str("L2^1"),
            L3 { a, branch } => write!(f, "L3[a={a}, branch={}]", branch.number()),
            L30 { index } => write!(f, "L3,0^{index}"),
            L4 => f.write_str("L4^1"),
            M8 => f.write_str("M8^1"),
            A1 { index } => write!(f, "A1^{index}"),
            A1PlusJ { index } => write!(f, "(A1⊕J)^{index}"),
            A1PlusK2 { index } => write!(f, "(A1⊕K2)^{index}"),
            Full => f.write_str("so(4)"),
        }
    }
}
