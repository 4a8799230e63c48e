//! Dense exact vectors, matrices and rank-3 tensors.
//!
//! Dimensions in this crate stay small (at most a few dozen), so storage is
//! dense and row-major. Rank uses fraction-free (Bareiss) elimination over the
//! integers; kernels, inverses and linear solves use Gauss-Jordan over the
//! rationals.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Scalar::zero(); n])
    }

    /// The standard basis vector `e_i` of length `n`.
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_vec(data: Vec<Scalar>) -> Self {
        Vector(data)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Scalar> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.0.iter()
    }

    /// `(index, coefficient)` pairs with nonzero coefficient.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &Vector) {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        self.0
            .iter()
            .zip(&other.0)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Concatenation `self ⊕ other`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut data = self.0.clone();
        data.extend(other.0.iter().cloned());
        Vector(data)
    }

    pub fn slice(&self, start: usize, end: usize) -> Vector {
        Vector(self.0[start..end].to_vec())
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Vector {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        for c in columns {
            assert_eq!(c.len(), rows, "column length mismatch");
        }
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Row-major entries as one vector.
    pub fn flatten(&self) -> Vector {
        Vector(self.data.clone())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn mul_vec(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = Vector::zeros(self.rows);
        for (j, c) in v.nonzero() {
            for i in 0..self.rows {
                let a = &self.data[i * self.cols + j];
                if !a.is_zero() {
                    out.0[i] += a * c;
                }
            }
        }
        out
    }

    /// Kronecker product; row `(i, k)` of the result is `i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            out[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(idx, v)| (idx / cols, idx % cols, v))
    }

    /// Rank over the rationals by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.integer_rows();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..rows {
                for j in col + 1..cols {
                    let v = &a[rank][col] * &a[i][j] - &a[i][col] * &a[rank][j];
                    a[i][j] = v / &prev;
                }
                a[i][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    /// Each row scaled by the lcm of its denominators.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let lcm = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = Scalar::one() / &m[(r, col)];
            for j in col..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, col)].is_zero() {
                    continue;
                }
                let f = m[(i, col)].clone();
                for j in col..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let v = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = v;
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Basis of the right null space; empty iff the matrix is injective.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.cols);
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[(row, f)];
                }
                v
            })
            .collect()
    }

    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Option<Vector> {
        assert_eq!(self.rows, b.len(), "right-hand side length mismatch");
        let aug = self.hstack(&Matrix::from_columns(self.rows, std::slice::from_ref(b)));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = Vector::zeros(self.cols);
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
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
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        let mut out = self.clone();
        out.axpy(&-Scalar::one(), rhs);
        out
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Element of `K^n ⊗ K^n ⊗ K^n`, stored densely with index `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn offset(&self, a: usize, b: usize, c: usize) -> usize {
        assert!(a < self.dim && b < self.dim && c < self.dim, "tensor index out of bounds");
        (a * self.dim + b) * self.dim + c
    }

    pub fn add_at(&mut self, (a, b, c): (usize, usize, usize), v: &Scalar) {
        if v.is_zero() {
            return;
        }
        let o = self.offset(a, b, c);
        self.data[o] += v;
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        let n = self.dim;
        self.data
            .iter()
            .enumerate()
            .map(move |(idx, v)| ((idx / (n * n), (idx / n) % n, idx % n), v))
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize, usize), &Scalar)> {
        self.entries().filter(|(_, v)| !v.is_zero())
    }

    /// Applies `m` to one tensor leg (0, 1 or 2), identity on the others.
    pub fn apply_leg(&self, leg: usize, m: &Matrix) -> Tensor3 {
        assert!(leg < 3, "tensor leg out of range");
        assert_eq!((m.rows(), m.cols()), (self.dim, self.dim), "operator shape mismatch");
        let mut out = Tensor3::zeros(self.dim);
        for ((a, b, c), v) in self.nonzero() {
            let src = [a, b, c][leg];
            for k in 0..self.dim {
                let coef = &m[(k, src)];
                if coef.is_zero() {
                    continue;
                }
                let mut idx = [a, b, c];
                idx[leg] = k;
                out.add_at((idx[0], idx[1], idx[2]), &(coef * v));
            }
        }
        out
    }

    pub fn axpy(&mut self, c: &Scalar, other: &Tensor3) {
        assert_eq!(self.dim, other.dim, "tensor dimension mismatch");
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }
}

impl Index<(usize, usize, usize)> for Tensor3 {
    type Output = Scalar;
    fn index(&self, (a, b, c): (usize, usize, usize)) -> &Scalar {
        &self.data[self.offset(a, b, c)]
    }
}

impl Add for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        out.axpy(&Scalar::one(), rhs);
        out
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        let mut out = self.clone();
        out.axpy(&-Scalar::one(), rhs);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(2).rank(), 2);
        assert_eq!(Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 1, 2], &[0, 2, 4], &[1, 0, 0]]).rank(), 2);
    }

    #[test]
    fn rank_with_fractions() {
        let a = Matrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(3, 2), int(1)],
        ]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(3).kernel_basis().is_empty());
        assert_eq!(Matrix::zeros(2, 3).kernel_basis().len(), 3);
        let k = m(&[&[1, 1]]).kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], Vector::from_vec(vec![int(-1), int(1)]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(Matrix::identity(3).invert().unwrap(), Matrix::identity(3));
        assert_eq!(
            m(&[&[0, 1], &[-1, 0]]).invert().unwrap(),
            m(&[&[0, -1], &[1, 0]])
        );
        assert_eq!(m(&[&[1, 1], &[1, 1]]).invert(), Err(Error::SingularMatrix));
    }

    #[test]
    fn solve_consistency() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(a.solve(&Vector::from_vec(vec![int(1), int(3)])).is_none());
        let x = a.solve(&Vector::from_vec(vec![int(1), int(2)])).unwrap();
        assert_eq!(a.mul_vec(&x), Vector::from_vec(vec![int(1), int(2)]));
    }

    #[test]
    fn kron_layout() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let i = Matrix::identity(2);
        let k = i.kron(&a);
        assert_eq!(k[(2, 3)], int(2));
        assert_eq!(k[(0, 2)], int(0));
        let k = a.kron(&i);
        assert_eq!(k[(0, 2)], int(2));
    }

    #[test]
    fn tensor_leg_action() {
        let mut t = Tensor3::zeros(2);
        t.add_at((0, 1, 0), &int(1));
        let swap = m(&[&[0, 1], &[1, 0]]);
        let u = t.apply_leg(1, &swap);
        assert_eq!(u[(0, 0, 0)], int(1));
        assert_eq!(u[(0, 1, 0)], int(0));
    }
}
