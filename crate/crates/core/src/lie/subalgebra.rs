use std::fmt;

use crate::linalg;
use crate::scalar::Scalar;

use super::element::{Element, Factor};
use super::LieError;

/// A subalgebra of `so(4,C)` stored by its reduced row-echelon basis.
///
/// The echelon form is canonical for the span (pivots taken in coordinate
/// order `h1, x1, y1, h2, x2, y2`), so two subalgebras are equal exactly when
/// their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subalgebra {
    basis: Vec<Element>,
    pivots: Vec<usize>,
}

/// `S ⊇ [S,S] ⊇ …` until the terms stop shrinking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedSeries {
    pub terms: Vec<Subalgebra>,
}

impl DerivedSeries {
    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subalgebra::dim).collect()
    }

    pub fn stable_term(&self) -> &Subalgebra {
        self.terms.last().expect("a derived series has at least one term")
    }

    pub fn is_solvable(&self) -> bool {
        self.stable_term().dim() == 0
    }
}

fn echelon(vectors: &[Element]) -> (Vec<Element>, Vec<usize>) {
    let rows: Vec<Vec<Scalar>> = vectors.iter().map(Element::to_vec).collect();
    let (r, p) = linalg::rref(&rows);
    (r.iter().map(|v| Element::from_slice(v)).collect(), p)
}

fn brackets(a: &[Element], b: &[Element]) -> Vec<Element> {
    a.iter().flat_map(|u| b.iter().map(move |v| u.bracket(v))).collect()
}

/// `[a_i, a_j]` for `i < j`, which spans `[A, A]`.
fn self_brackets(a: &[Element]) -> Vec<Element> {
    let mut out = Vec::with_capacity(a.len() * a.len().saturating_sub(1) / 2);
    for (i, u) in a.iter().enumerate() {
        for v in &a[i + 1..] {
            let b = u.bracket(v);
            if !b.is_zero() {
                out.push(b);
            }
        }
    }
    out
}

impl Subalgebra {
    /// Echelonizes `vectors` and checks that their span is closed under the
    /// bracket. On failure the witness indices refer to `vectors`.
    pub fn span_close(vectors: &[Element]) -> Result<Subalgebra, LieError> {
        let (basis, pivots) = echelon(vectors);
        for i in 0..vectors.len() {
            for j in i + 1..vectors.len() {
                let b = vectors[i].bracket(&vectors[j]);
                if !in_span(&basis, &pivots, &b) {
                    return Err(LieError::NotClosed { i, j, bracket: b });
                }
            }
        }
        Ok(Subalgebra::from_echelon(basis, pivots))
    }

    /// The smallest subalgebra containing `vectors`.
    pub fn generated_by(vectors: &[Element]) -> Subalgebra {
        let (mut basis, mut pivots) = echelon(vectors);
        loop {
            let new: Vec<Element> = self_brackets(&basis)
                .into_iter()
                .filter(|b| !in_span(&basis, &pivots, b))
                .collect();
            if new.is_empty() {
                return Subalgebra::from_echelon(basis, pivots);
            }
            basis.extend(new);
            (basis, pivots) = echelon(&basis);
        }
    }

    fn from_echelon(basis: Vec<Element>, pivots: Vec<usize>) -> Subalgebra {
        Subalgebra { basis, pivots }
    }

    /// Echelonizes a spanning set already known to be closed.
    fn trusted(vectors: &[Element]) -> Subalgebra {
        let (basis, pivots) = echelon(vectors);
        Subalgebra { basis, pivots }
    }

    pub fn zero() -> Subalgebra {
        Subalgebra::from_echelon(Vec::new(), Vec::new())
    }

    pub fn full() -> Subalgebra {
        Subalgebra::from_echelon(Element::chevalley_basis().to_vec(), (0..6).collect())
    }

    /// The whole `sl(2)` summand `factor`.
    pub fn factor(factor: Factor) -> Subalgebra {
        let o = factor.offset();
        Subalgebra::from_echelon((o..o + 3).map(Element::unit).collect(), (o..o + 3).collect())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Element] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Dimensions of the derived series, down to the stable term.
    pub fn derived_dims(&self) -> Vec<usize> {
        let mut dims = vec![self.dim()];
        let mut current = self.basis.clone();
        loop {
            let (next, _) = echelon(&self_brackets(&current));
            if next.len() == current.len() {
                return dims;
            }
            dims.push(next.len());
            current = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_dims().last() == Some(&0)
    }

    pub fn is_abelian(&self) -> bool {
        self_brackets(&self.basis).is_empty()
    }

    pub fn contains(&self, u: &Element) -> bool {
        in_span(&self.basis, &self.pivots, u)
    }

    pub fn contains_all(&self, other: &Subalgebra) -> bool {
        other.basis.iter().all(|u| self.contains(u))
    }

    /// Coordinates of `u` with respect to the echelon basis, if `u` lies in
    /// the span.
    pub fn coords(&self, u: &Element) -> Option<Vec<Scalar>> {
        self.contains(u).then(|| self.pivots.iter().map(|&p| u.coeff(p).clone()).collect())
    }

    pub fn combine(&self, coords: &[Scalar]) -> Element {
        self.basis.iter().zip(coords).fold(Element::zero(), |acc, (b, c)| &acc + &b.scale(c))
    }

    /// `[S, T]`, for pairs where the bracket space is itself a subalgebra
    /// (e.g. `T = S`, or `T` an ideal of `S`).
    pub fn bracket_with(&self, other: &Subalgebra) -> Result<Subalgebra, LieError> {
        let (basis, pivots) = echelon(&brackets(&self.basis, &other.basis));
        Subalgebra::span_close(&basis)?;
        Ok(Subalgebra::from_echelon(basis, pivots))
    }

    pub fn derived(&self) -> Subalgebra {
        Subalgebra::trusted(&self_brackets(&self.basis))
    }

    pub fn derived_series(&self) -> DerivedSeries {
        let mut terms = vec![self.clone()];
        loop {
            let next = terms.last().unwrap().derived();
            if next.dim() == terms.last().unwrap().dim() {
                return DerivedSeries { terms };
            }
            terms.push(next);
        }
    }

    /// Matrix of `ad u` restricted to `S`, in the echelon basis. Requires
    /// `[u, S] ⊆ S`.
    pub fn ad_matrix(&self, u: &Element) -> Vec<Vec<Scalar>> {
        let cols: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|b| self.coords(&u.bracket(b)).expect("ad u preserves the subalgebra"))
            .collect();
        linalg::transpose(&cols)
    }

    /// `K[i][j] = tr(ad b_i ∘ ad b_j)` with `ad` taken inside `S`.
    pub fn killing_form(&self) -> Vec<Vec<Scalar>> {
        let ads: Vec<_> = self.basis.iter().map(|b| self.ad_matrix(b)).collect();
        let n = self.dim();
        let mut k = vec![vec![Scalar::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let v = linalg::trace_of_product(&ads[i], &ads[j]);
                k[j][i] = v.clone();
                k[i][j] = v;
            }
        }
        k
    }

    pub fn has_nondegenerate_killing_form(&self) -> bool {
        self.dim() > 0 && !linalg::det(&self.killing_form()).is_zero()
    }

    /// The maximal solvable ideal, `{ u ∈ S : K(u, [S,S]) = 0 }`.
    pub fn radical(&self) -> Subalgebra {
        let k = self.killing_form();
        let derived = self.derived();
        let conditions: Vec<Vec<Scalar>> = derived
            .basis
            .iter()
            .map(|d| {
                let e = self.coords(d).expect("[S,S] ⊆ S");
                linalg::mat_vec(&k, &e)
            })
            .collect();
        let solutions = if conditions.is_empty() {
            (0..self.dim()).map(|k| self.basis[k].to_vec()).collect::<Vec<_>>()
        } else {
            linalg::nullspace(&conditions, self.dim())
                .iter()
                .map(|c| self.combine(c).to_vec())
                .collect()
        };
        let elems: Vec<Element> = solutions.iter().map(|v| Element::from_slice(v)).collect();
        Subalgebra::trusted(&elems)
    }

    /// The Levi factor, taken as the stable term of the derived series.
    /// Checks that it is semisimple and complements the radical.
    pub fn levi_factor(&self) -> Result<Subalgebra, LieError> {
        self.levi_decomposition().map(|(levi, _)| levi)
    }

    /// `(Levi factor, radical)`, with the same checks as [`Self::levi_factor`].
    pub fn levi_decomposition(&self) -> Result<(Subalgebra, Subalgebra), LieError> {
        let levi = self.derived_series().stable_term().clone();
        if levi.dim() == 0 {
            return Err(LieError::Solvable);
        }
        if !levi.has_nondegenerate_killing_form() {
            return Err(LieError::StabilizationNotSemisimple);
        }
        let rad = self.radical();
        let mut both = levi.basis.clone();
        both.extend(rad.basis.iter().cloned());
        if levi.dim() + rad.dim() != self.dim() || echelon(&both).0.len() != self.dim() {
            return Err(LieError::StabilizationNotSemisimple);
        }
        Ok((levi, rad))
    }

    pub fn is_ideal_of(&self, parent: &Subalgebra) -> bool {
        parent.contains_all(self)
            && brackets(&parent.basis, &self.basis).iter().all(|b| self.contains(b))
    }

    /// Image of `S` under the coordinate projection onto `factor`.
    pub fn factor_projection(&self, factor: Factor) -> Subalgebra {
        let images: Vec<Element> = self
            .basis
            .iter()
            .map(|u| Element::in_factor(factor, &u.component(factor)))
            .collect();
        Subalgebra::trusted(&images)
    }

    /// `S ∩ factor`.
    pub fn factor_intersection(&self, factor: Factor) -> Subalgebra {
        let other = factor.other().offset();
        // Solve sum_k c_k b_k with the other factor's coordinates vanishing.
        let conditions: Vec<Vec<Scalar>> = (other..other + 3)
            .map(|coord| self.basis.iter().map(|b| b.coeff(coord).clone()).collect())
            .collect();
        let elems: Vec<Element> = if self.dim() == 0 {
            Vec::new()
        } else {
            linalg::nullspace(&conditions, self.dim()).iter().map(|c| self.combine(c)).collect()
        };
        Subalgebra::trusted(&elems)
    }

    /// Image under a linear map that is known to be a Lie algebra
    /// automorphism. Closure of the image is not rechecked.
    pub fn map(&self, f: impl Fn(&Element) -> Element) -> Subalgebra {
        let images: Vec<Element> = self.basis.iter().map(f).collect();
        Subalgebra::trusted(&images)
    }

    /// First echelon basis vector not lying in `sub`.
    pub fn complement_vector(&self, sub: &Subalgebra) -> Option<&Element> {
        self.basis.iter().find(|b| !sub.contains(b))
    }
}

fn in_span(basis: &[Element], pivots: &[usize], u: &Element) -> bool {
    let rows: Vec<Vec<Scalar>> = basis.iter().map(Element::to_vec).collect();
    linalg::reduce(&rows, pivots, &u.to_vec()).iter().all(Scalar::is_zero)
}

impl fmt::Display for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (k, b) in self.basis.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for Subalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subalgebra{self}")
    }
}
