use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::monomial::Monomial;
use crate::algebra::poly::Poly;
use crate::scalar::Scalar;
use num_traits::Zero;

/// Dense row-major matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

/// Reduced row-echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<T> {
    /// Only the nonzero rows are kept, so `matrix.rows() == pivots.len()`.
    pub matrix: Matrix<T>,
    pub pivots: Vec<usize>,
}

impl<T> Rref<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            entries.extend(row);
        }
        Matrix {
            rows: nrows,
            cols,
            entries,
        }
    }

    /// Coefficient matrix of a list of polynomials. Columns are the union of
    /// their monomials in ascending graded-lex order, which is returned
    /// alongside.
    pub fn from_polys(polys: &[Poly<T>]) -> (Self, Vec<Monomial>) {
        let support: BTreeSet<&Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
        let columns: Vec<Monomial> = support.into_iter().cloned().collect();
        let m = Matrix::from_polys_on(polys, &columns);
        (m, columns)
    }

    /// Coefficient matrix against a fixed column basis. Monomials outside
    /// `columns` must not occur.
    pub fn from_polys_on(polys: &[Poly<T>], columns: &[Monomial]) -> Self {
        let mut m = Matrix::zeros(polys.len(), columns.len());
        for (i, p) in polys.iter().enumerate() {
            for (mono, c) in p.terms() {
                let j = columns
                    .binary_search(mono)
                    .expect("monomial outside the column basis");
                m[(i, j)] = c.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix<T>) -> Self {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Rank by fraction-free (Bareiss) elimination. Every intermediate entry
    /// is a minor of the input, so entries stay bounded by Hadamard's bound.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let pivot = a[(r, c)].clone();
            for i in r + 1..rows {
                let lead = a[(i, c)].clone();
                for j in c + 1..cols {
                    let v = (pivot.clone() * a[(i, j)].clone() - lead.clone() * a[(r, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
                a[(i, c)] = T::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref<T> {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = T::one() / a[(r, c)].clone();
            for j in c..cols {
                let v = a[(r, j)].clone() * inv.clone();
                a[(r, j)] = v;
            }
            for i in 0..rows {
                if i == r || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in c..cols {
                    let v = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                    a[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        a.entries.truncate(r * cols);
        a.rows = r;
        Rref { matrix: a, pivots }
    }
}

/// Finds `c` with `c · basis_rows = target`.
///
/// Returns `None` when `target` is outside the row space. Among all solutions
/// the one returned comes from back-substitution on the echelon form of
/// `basis_rowsᵀ` with every free variable set to zero.
pub fn solve_in_span<T: Scalar>(target: &[T], basis_rows: &Matrix<T>) -> Option<Vec<T>> {
    assert_eq!(target.len(), basis_rows.cols(), "target length");
    let n = basis_rows.rows();
    // augmented [Bᵀ | target]
    let mut aug = Matrix::zeros(basis_rows.cols(), n + 1);
    for i in 0..basis_rows.rows() {
        for j in 0..basis_rows.cols() {
            aug[(j, i)] = basis_rows[(i, j)].clone();
        }
    }
    for (j, t) in target.iter().enumerate() {
        aug[(j, n)] = t.clone();
    }
    let red = aug.rref();
    if red.pivots.last() == Some(&n) {
        return None;
    }
    let mut coeffs = vec![T::zero(); n];
    for (row, &col) in red.pivots.iter().enumerate() {
        coeffs[col] = red.matrix[(row, n)].clone();
    }
    Some(coeffs)
}

/// Incrementally grown semi-echelon basis of a row space.
///
/// Each stored row has a distinct pivot column, equal to 1, and is zero at
/// the pivots of every row inserted before it.
#[derive(Clone, Debug)]
pub struct EchelonBasis<T> {
    cols: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> EchelonBasis<T> {
    pub fn new(cols: usize) -> Self {
        EchelonBasis { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<T>) -> Vec<T> {
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[T]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length");
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v` and reports whether it enlarged the span.
    pub fn insert(&mut self, v: Vec<T>) -> bool {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = T::one() / v[pivot].clone();
        for x in v.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        self.rows.push((pivot, v));
        true
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entries[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
