//! Dense exact linear algebra over the cyclotomic scalars: rank, linear
//! solves and inverses by Gaussian elimination. Small systems only; every
//! operation is exact.

use crate::error::{Error, Result};
use crate::scalars::Cyclotomic;

#[derive(Clone, Debug, PartialEq)]
pub struct CycMat {
    pub rows: usize,
    pub cols: usize,
    a: Vec<Cyclotomic>,
}

impl CycMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CycMat {
            rows,
            cols,
            a: vec![Cyclotomic::zero(1); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CycMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Cyclotomic::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyclotomic) -> Self {
        let mut a = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                a.push(f(i, j));
            }
        }
        CycMat { rows, cols, a }
    }

    pub fn from_cols(cols: &[Vec<Cyclotomic>]) -> Result<Self> {
        let rows = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|c| c.len() != rows) {
            return Err(Error::Dimension("ragged column list".into()));
        }
        Ok(CycMat::from_fn(rows, cols.len(), |i, j| cols[j][i].clone()))
    }

    pub fn mul(&self, other: &CycMat) -> Result<CycMat> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = CycMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    if other[(k, j)].is_zero() {
                        continue;
                    }
                    let t = self[(i, k)].mul(&other[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&t);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Result<Vec<Cyclotomic>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("matrix-vector size mismatch".into()));
        }
        let mut out = vec![Cyclotomic::zero(1); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self[(i, j)].is_zero() && !v[j].is_zero() {
                    out[i] = out[i].add(&self[(i, j)].mul(&v[j]));
                }
            }
        }
        Ok(out)
    }

    pub fn col(&self, j: usize) -> Vec<Cyclotomic> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.a.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl std::ops::Index<(usize, usize)> for CycMat {
    type Output = Cyclotomic;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclotomic {
        &self.a[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CycMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclotomic {
        &mut self.a[i * self.cols + j]
    }
}

/// Row-reduce `m` in place; returns the pivot column of each pivot row.
fn echelonize(m: &mut CycMat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
            continue;
        };
        m.swap_rows(row, p);
        let inv = m[(row, col)].inv().expect("pivot is nonzero");
        for c in col..m.cols {
            m[(row, c)] = m[(row, c)].mul(&inv);
        }
        for r in 0..m.rows {
            if r != row && !m[(r, col)].is_zero() {
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    let t = f.mul(&m[(row, c)]);
                    m[(r, c)] = m[(r, c)].sub(&t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.rows {
            break;
        }
    }
    pivots
}

pub fn rank(m: &CycMat) -> usize {
    let mut w = m.clone();
    echelonize(&mut w).len()
}

/// One solution of A x = b (free variables set to zero), or None.
pub fn solve(a: &CycMat, b: &[Cyclotomic]) -> Result<Option<Vec<Cyclotomic>>> {
    if b.len() != a.rows {
        return Err(Error::Dimension("right-hand side length".into()));
    }
    let mut aug = CycMat::from_fn(a.rows, a.cols + 1, |i, j| {
        if j < a.cols {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = echelonize(&mut aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None); // pivot in the constants column: inconsistent
    }
    let mut x = vec![Cyclotomic::zero(1); a.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[(r, a.cols)].clone();
    }
    Ok(Some(x))
}

/// Inverse of a square matrix; errors when singular.
pub fn invert(a: &CycMat) -> Result<CycMat> {
    if a.rows != a.cols {
        return Err(Error::Dimension("inverse of a non-square matrix".into()));
    }
    let n = a.rows;
    let mut aug = CycMat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else if j == n + i {
            Cyclotomic::one()
        } else {
            Cyclotomic::zero(1)
        }
    });
    let pivots = echelonize(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::NoSolution);
    }
    Ok(CycMat::from_fn(n, n, |i, j| aug[(i, n + j)].clone()))
}

/// Determinant by elimination (used for metric non-degeneracy checks).
pub fn determinant(a: &CycMat) -> Result<Cyclotomic> {
    if a.rows != a.cols {
        return Err(Error::Dimension("determinant of a non-square matrix".into()));
    }
    let n = a.rows;
    let mut w = a.clone();
    let mut det = Cyclotomic::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !w[(r, col)].is_zero()) else {
            return Ok(Cyclotomic::zero(1));
        };
        if p != col {
            w.swap_rows(col, p);
            det = det.neg();
        }
        det = det.mul(&w[(col, col)]);
        let inv = w[(col, col)].inv().expect("pivot is nonzero");
        for r in col + 1..n {
            if !w[(r, col)].is_zero() {
                let f = w[(r, col)].mul(&inv);
                for c in col..n {
                    let t = f.mul(&w[(col, c)]);
                    w[(r, c)] = w[(r, c)].sub(&t);
                }
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }

    #[test]
    fn rank_and_inverse() {
        let i = Cyclotomic::root(4, 1);
        // [[1, i], [i, -1]] has rank 1 (second row = i * first row)
        let m = CycMat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) => q(1),
            (0, 1) => i.clone(),
            (1, 0) => i.clone(),
            (1, 1) => q(-1),
            _ => unreachable!(),
        });
        assert_eq!(rank(&m), 1);
        assert!(invert(&m).is_err());

        // [[1, i], [0, 2]] is invertible
        let m2 = CycMat::from_fn(2, 2, |r, c| match (r, c) {
            (0, 0) => q(1),
            (0, 1) => i.clone(),
            (1, 1) => q(2),
            _ => q(0),
        });
        let inv = invert(&m2).unwrap();
        assert_eq!(m2.mul(&inv).unwrap(), CycMat::identity(2));
        assert_eq!(inv.mul(&m2).unwrap(), CycMat::identity(2));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = CycMat::from_fn(2, 2, |r, c| q([[1, 2], [2, 4]][r][c]));
        // b in the column space
        let x = solve(&a, &[q(3), q(6)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![q(3), q(6)]);
        // b outside
        assert!(solve(&a, &[q(1), q(0)]).unwrap().is_none());
    }

    #[test]
    fn determinant_vandermonde() {
        let z = Cyclotomic::root(3, 1);
        // Vandermonde on 1, zeta3, zeta3^2: det = prod (x_j - x_i) != 0
        let pts = [q(1), z.clone(), z.mul(&z)];
        let m = CycMat::from_fn(3, 3, |i, j| pts[i].pow(j as i64).unwrap());
        let d = determinant(&m).unwrap();
        assert!(!d.is_zero());
        let mut expect = Cyclotomic::one();
        for i in 0..3 {
            for j in i + 1..3 {
                expect = expect.mul(&pts[j].sub(&pts[i]));
            }
        }
        assert_eq!(d, expect);
    }

    #[test]
    fn solve_over_mixed_orders() {
        let a = CycMat::from_fn(1, 2, |_, c| {
            if c == 0 {
                Cyclotomic::root(4, 1)
            } else {
                Cyclotomic::root(3, 1)
            }
        });
        let b = vec![Cyclotomic::one()];
        let x = solve(&a, &b).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), b);
    }
}
