//! Dense exact linear algebra over [`Scalar`]. Matrices are row-major
//! `Vec<Vec<Scalar>>`; everything here is small (at most 6×6 in practice).

use crate::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

/// Reduced row-echelon form. Returns the nonzero rows and their pivot
/// columns; pivots are strictly increasing and every pivot entry is 1.
pub fn rref(rows: &[Vec<Scalar>]) -> (Matrix, Vec<usize>) {
    let mut m: Matrix = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    rref(rows).1.len()
}

/// Basis of `{ v : M v = 0 }` for an `m × ncols` matrix `M`.
pub fn nullspace(m: &[Vec<Scalar>], ncols: usize) -> Matrix {
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        })
        .collect()
}

/// Subtracts the echelon rows from `v` to reduce it modulo their span.
pub fn reduce(rows: &[Vec<Scalar>], pivots: &[usize], v: &[Scalar]) -> Vec<Scalar> {
    let mut v = v.to_vec();
    for (row, &p) in rows.iter().zip(pivots) {
        if !v[p].is_zero() {
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &(&f * r);
            }
        }
    }
    v
}

/// The unique solution of `M v = b` for square invertible `M`, or `None`
/// when `M` is singular.
pub fn solve(m: &[Vec<Scalar>], b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = m.len();
    let aug: Matrix = m.iter().zip(b).map(|(row, x)| row.iter().cloned().chain([x.clone()]).collect()).collect();
    let (r, pivots) = rref(&aug);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(r.iter().map(|row| row[n].clone()).collect())
}

pub fn det(m: &[Vec<Scalar>]) -> Scalar {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = Scalar::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&k| !a[k][c].is_zero()) else {
            return Scalar::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].inv().expect("pivot is nonzero");
        for k in c + 1..n {
            if a[k][c].is_zero() {
                continue;
            }
            let f = &a[k][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[k][j] -= &t;
            }
        }
    }
    d
}

pub fn transpose(m: &[Vec<Scalar>]) -> Matrix {
    let ncols = m.first().map_or(0, Vec::len);
    (0..ncols).map(|c| m.iter().map(|row| row[c].clone()).collect()).collect()
}

pub fn mat_vec(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

pub fn trace(m: &[Vec<Scalar>]) -> Scalar {
    m.iter().enumerate().map(|(k, row)| row[k].clone()).sum()
}

/// `tr(AB)` without forming the product.
pub fn trace_of_product(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Scalar {
    let mut t = Scalar::zero();
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                t += &(x * &b[j][i]);
            }
        }
    }
    t
}

pub fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Matrix {
    let bt = transpose(b);
    a.iter().map(|row| bt.iter().map(|col| row.iter().zip(col).map(|(x, y)| x * y).sum()).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect()
    }

    #[test]
    fn rref_and_rank() {
        let (r, p) = rref(&m(&[&[2, 4, 0], &[1, 2, 1], &[3, 6, 1]]));
        assert_eq!(p, vec![0, 2]);
        assert_eq!(r, m(&[&[1, 2, 0], &[0, 0, 1]]));
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let ns = nullspace(&a, 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&a, v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_square_systems() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let v = solve(&a, &[Scalar::from_int(5), Scalar::from_int(10)]).unwrap();
        assert_eq!(v, vec![Scalar::from_int(1), Scalar::from_int(3)]);
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &[Scalar::one(), Scalar::one()]).is_none());
    }

    #[test]
    fn trace_of_product_matches_product() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 5], &[-1, 2]]);
        assert_eq!(trace_of_product(&a, &b), trace(&mat_mul(&a, &b)));
    }

    #[test]
    fn determinant() {
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), Scalar::from_int(-1));
        assert_eq!(det(&m(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]])), Scalar::from_int(-128));
        assert_eq!(det(&m(&[&[1, 2], &[2, 4]])), Scalar::zero());
    }
}
