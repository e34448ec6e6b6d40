//! Exact dense linear algebra over the rationals.
//!
//! Elimination is fraction-free (Bareiss style) on integer rows obtained by
//! clearing denominators, which keeps intermediate entries as single products
//! instead of towers of fractions; results are converted back to rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{RatFun, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut m = QMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_columns(cols: &[Vec<Rational>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        QMatrix::from_fn(r, c, |i, j| cols[j][i].clone())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &QMatrix) -> QMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rational) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc += a * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    /// Applies the rational matrix to a vector of rational functions.
    pub fn mul_rf_vec(&self, v: &[RatFun]) -> Vec<RatFun> {
        assert_eq!(self.cols, v.len());
        let nvars = v.first().map_or(0, |f| f.nvars());
        (0..self.rows)
            .map(|i| {
                let mut acc = RatFun::zero(nvars);
                for j in 0..self.cols {
                    let a = &self[(i, j)];
                    if !a.is_zero() && !v[j].is_zero() {
                        acc = acc.add(&v[j].scale(a));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn hstack(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.rows, other.rows);
        QMatrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        // Clear denominators row by row; elimination is then fraction-free.
        let mut m: Vec<Vec<BigInt>> = (0..self.rows).map(|i| int_row(self.row(i))).collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            // Smallest nonzero pivot keeps the integers tame.
            let pick = (r..self.rows)
                .filter(|&i| !m[i][c].is_zero())
                .min_by_key(|&i| m[i][c].magnitude().clone());
            let Some(p) = pick else { continue };
            m.swap(r, p);
            for i in 0..self.rows {
                if i == r || m[i][c].is_zero() {
                    continue;
                }
                // Bareiss step: exact division by the previous pivot.
                for j in 0..self.cols {
                    if j == c {
                        continue;
                    }
                    let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    m[i][j] = &t / &prev;
                }
                m[i][c] = BigInt::zero();
            }
            prev = m[r][c].clone();
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        // Normalize pivot rows to leading one.
        let mut out = QMatrix::zeros(self.rows, self.cols);
        for (ri, &c) in pivots.iter().enumerate() {
            let d = m[ri][c].clone();
            for j in 0..self.cols {
                if !m[ri][j].is_zero() {
                    out[(ri, j)] = Rational::new(m[ri][j].clone(), d.clone());
                }
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace, as columns.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        for j in 0..self.cols {
            if pivot_set.contains(&j) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[j] = Rational::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -r[(ri, j)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b`; `None` when inconsistent. When the solution is
    /// not unique the free coordinates are set to zero.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, b.len());
        let aug = self.hstack(&QMatrix::from_columns(&[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(ri, self.cols)].clone();
        }
        Some(x)
    }

    /// Solves `self * X = B` columnwise; `None` when any column is inconsistent.
    pub fn solve_matrix(&self, b: &QMatrix) -> Option<QMatrix> {
        assert_eq!(self.rows, b.rows);
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            cols.push(self.solve(&b.column(j))?);
        }
        Some(QMatrix::from_columns(&cols))
    }

    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let aug = self.hstack(&QMatrix::identity(self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() < self.rows || pivots[self.rows - 1] >= self.rows {
            return None;
        }
        Some(QMatrix::from_fn(self.rows, self.cols, |i, j| {
            r[(i, self.cols + j)].clone()
        }))
    }

    /// Indices of a maximal independent subset of the columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().1
    }
}

fn int_row(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in row {
        lcm = lcm.lcm(x.denom());
    }
    row.iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[rat(5), rat(10)]).unwrap();
        assert_eq!(x, vec![rat(1), rat(3)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), QMatrix::identity(2));
        assert_eq!(inv[(0, 0)], ratio(3, 5));
    }

    #[test]
    fn inconsistent_system_detected() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(a.solve(&[rat(1), rat(3)]).is_none());
        assert!(a.inverse().is_none());
    }

    #[test]
    fn fractional_entries() {
        let a = QMatrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 3)],
            vec![ratio(1, 5), ratio(2, 7)],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), QMatrix::identity(2));
    }

    #[test]
    fn independent_columns_pick_basis() {
        let a = m(&[&[1, 2, 1], &[0, 0, 1]]);
        assert_eq!(a.independent_columns(), vec![0, 2]);
    }
}
