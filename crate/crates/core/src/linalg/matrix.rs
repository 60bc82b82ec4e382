use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
///
/// Linear maps follow the column convention: column `j` holds the image of
/// the `j`-th basis vector, so `apply` computes `M * x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let mut m = Matrix::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows in matrix literal".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_flat(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    /// Integer literal helper, mostly for fixtures.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
            .collect();
        Matrix::from_rows(v).expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// `self * x`.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols, "vector length mismatch");
        let mut out = vec![Rational::zero(); self.rows];
        for (j, xj) in x.iter().enumerate() {
            if xj.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *o += a * xj;
                }
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn plus(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn minus(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        let entries = self.entries.iter().map(|a| a * c).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    /// `self += c * rhs`.
    pub fn add_scaled(&mut self, rhs: &Matrix, c: &Rational) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&rhs.entries) {
            if !b.is_zero() {
                *a += b * c;
            }
        }
    }

    /// Commutator `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs).minus(&rhs.matmul(self))
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.rows, rhs.rows);
        let cols = self.cols + rhs.cols;
        let mut out = Matrix::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        (m, pivots)
    }

    /// Row-reduces in place, choosing pivots only among the first `pivot_cols` columns.
    fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..cols {
                if !self[(r, j)].is_zero() {
                    self[(r, j)] *= &inv;
                }
            }
            let pivot_row: Vec<(usize, Rational)> = (c..cols)
                .filter(|&j| !self[(r, j)].is_zero())
                .map(|j| (j, self[(r, j)].clone()))
                .collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self[(i, c)].clone();
                if factor.is_zero() {
                    continue;
                }
                for (j, pv) in &pivot_row {
                    let delta = &factor * pv;
                    self[(i, *j)] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        // Eliminating along the shorter side is cheaper and gives the same rank.
        if self.rows < self.cols {
            self.transpose().rref().1.len()
        } else {
            self.rref().1.len()
        }
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = self.hstack(&Matrix::identity(n));
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        self.plus(rhs)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        self.minus(rhs)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}", self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank and a basis of the null space of `m`.
///
/// The kernel basis is read off the reduced echelon form: one vector per free
/// column, with a 1 in that column and zeros in the other free columns.
pub fn rank_kernel(m: &Matrix) -> (usize, Vec<Vec<Rational>>) {
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut kernel = Vec::new();
    for free in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); m.cols()];
        v[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -&r[(row, free)];
        }
        kernel.push(v);
    }
    (pivots.len(), kernel)
}

/// Some `x` with `a * x = b`, or `None` if the system is inconsistent.
pub fn solve_linear(a: &Matrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if b.len() != a.rows() {
        return Err(Error::Dimension(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            a.rows()
        )));
    }
    let rhs = Matrix::from_columns(a.rows(), &[b.to_vec()]);
    let mut aug = a.hstack(&rhs);
    let pivots = aug.rref_in_place(a.cols());
    let last = a.cols();
    for i in pivots.len()..a.rows() {
        if !aug[(i, last)].is_zero() {
            return Ok(None);
        }
    }
    let mut x = vec![Rational::zero(); a.cols()];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = aug[(row, last)].clone();
    }
    Ok(Some(x))
}

/// Reduces `b` modulo the column space of `a`, returning a canonical
/// representative of the class of `b` in the quotient.
///
/// Two vectors differing by an element of the column space reduce to the same
/// representative; the representative is zero iff `b` lies in the column space.
pub fn reduce_modulo_columns(a: &Matrix, b: &[Rational]) -> Vec<Rational> {
    assert_eq!(a.rows(), b.len());
    // Row-reduce the spanning set (columns of `a`, as rows of the transpose).
    let (basis, pivots) = a.transpose().rref();
    let mut out = b.to_vec();
    for (row, &p) in pivots.iter().enumerate() {
        let c = out[p].clone();
        if c.is_zero() {
            continue;
        }
        for (j, o) in out.iter_mut().enumerate() {
            let e = &basis[(row, j)];
            if !e.is_zero() {
                *o -= &c * e;
            }
        }
    }
    out
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], x: &[Rational], c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += b * c;
        }
    }
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{q, qi};

    #[test]
    fn identity_has_full_rank_and_no_kernel() {
        let (r, k) = rank_kernel(&Matrix::identity(2));
        assert_eq!(r, 2);
        assert!(k.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let (r, k) = rank_kernel(&Matrix::zeros(2, 2));
        assert_eq!(r, 0);
        assert_eq!(k, vec![vec![qi(1), qi(0)], vec![qi(0), qi(1)]]);
    }

    #[test]
    fn rank_one_kernel() {
        // Hand elimination: [[1,2],[2,4]] -> [[1,2],[0,0]], free column 2, x1 = -2 x2.
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, k) = rank_kernel(&m);
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![qi(-2), qi(1)]]);
    }

    #[test]
    fn solve_identity() {
        let x = solve_linear(&Matrix::identity(2), &[qi(3), qi(5)]).unwrap();
        assert_eq!(x, Some(vec![qi(3), qi(5)]));
    }

    #[test]
    fn solve_inconsistent() {
        let x = solve_linear(&Matrix::zeros(2, 2), &[qi(1), qi(0)]).unwrap();
        assert_eq!(x, None);
    }

    #[test]
    fn solve_underdetermined() {
        let a = Matrix::from_i64(&[&[1, 1], &[0, 0]]);
        let b = [qi(2), qi(0)];
        let x = solve_linear(&a, &b).unwrap().expect("consistent");
        assert_eq!(a.apply(&x), b.to_vec());
    }

    #[test]
    fn solve_rejects_bad_rhs_length() {
        assert!(solve_linear(&Matrix::identity(2), &[qi(1)]).is_err());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Matrix::from_rows(vec![vec![q(1, 2), qi(1)], vec![qi(3), qi(-1)]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn reduction_modulo_columns() {
        let a = Matrix::from_i64(&[&[1], &[1], &[0]]);
        let r1 = reduce_modulo_columns(&a, &[qi(2), qi(2), qi(0)]);
        assert!(is_zero_vector(&r1));
        let r2 = reduce_modulo_columns(&a, &[qi(1), qi(0), qi(1)]);
        let r3 = reduce_modulo_columns(&a, &[qi(3), qi(2), qi(1)]);
        assert_eq!(r2, r3);
        assert!(!is_zero_vector(&r2));
    }

    #[test]
    fn empty_shapes() {
        let m = Matrix::zeros(0, 3);
        let (r, k) = rank_kernel(&m);
        assert_eq!(r, 0);
        assert_eq!(k.len(), 3);
        let m = Matrix::zeros(3, 0);
        assert_eq!(rank_kernel(&m), (0, vec![]));
        assert_eq!(solve_linear(&m, &[qi(0), qi(0), qi(0)]).unwrap(), Some(vec![]));
    }
}
