//! Small dense matrices over exact rings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    BigRational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Zero-based access.
    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[T]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn map<U, F: Fn(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Submatrix on the given zero-based rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut s = Matrix::zeros(rows.len(), cols.len());
        for (a, &r) in rows.iter().enumerate() {
            for (b, &c) in cols.iter().enumerate() {
                s.set(a, b, self.get(r, c).clone());
            }
        }
        s
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + for<'a> Add<&'a T, Output = T>,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = std::mem::replace(&mut out.data[idx], T::zero()) + &(a * b);
                }
            }
        }
        out
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + for<'a> Add<&'a T, Output = T>,
{
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + for<'a> Sub<&'a T, Output = T>,
{
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }
}

impl<T: Clone + Zero + Neg<Output = T>> Matrix<T> {
    pub fn neg(&self) -> Self {
        self.map(|x| -x.clone())
    }
}

impl Matrix<Q> {
    pub fn scale(&self, s: &Q) -> Self {
        self.map(|x| x * s)
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn det(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
                return Q::zero();
            };
            if piv != col {
                for c in 0..n {
                    a.data.swap(piv * n + c, col * n + c);
                }
                det = -det;
            }
            let p = a.get(col, col).clone();
            det *= &p;
            for r in col + 1..n {
                let f = a.get(r, col) / &p;
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a.get(r, c) - &(&f * a.get(col, c));
                    a.set(r, c, v);
                }
            }
        }
        det
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(piv) = (rank..rows).find(|&r| !a.get(r, col).is_zero()) else { continue };
            for c in 0..cols {
                a.data.swap(piv * cols + c, rank * cols + c);
            }
            let p = a.get(rank, col).clone();
            for r in rank + 1..rows {
                let f = a.get(r, col) / &p;
                if f.is_zero() {
                    continue;
                }
                for c in col..cols {
                    let v = a.get(r, c) - &(&f * a.get(rank, c));
                    a.set(r, c, v);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Columns of `self` followed by those of `other`.
    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                m.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    /// `exp(N)` for nilpotent `N`, summed until the power series terminates.
    pub fn exp_nilpotent(&self) -> Self {
        let n = self.rows;
        let mut out = Matrix::identity(n);
        let mut term = Matrix::identity(n);
        for k in 1..=n {
            term = term.mul(self).scale(&Q::new(BigInt::one(), BigInt::from(k)));
            if term.is_zero() {
                return out;
            }
            out = out.add(&term);
        }
        assert!(term.mul(self).is_zero(), "matrix is not nilpotent");
        out
    }
}

impl From<&Matrix<i64>> for Matrix<Q> {
    fn from(m: &Matrix<i64>) -> Self {
        m.map(|&x| q(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small() {
        let m: Matrix<Q> = Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(7), q(4)]]);
        assert_eq!(m.det(), q(1));
        let s: Matrix<Q> = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        assert_eq!(s.det(), q(-1));
    }

    #[test]
    fn exp_of_strictly_lower() {
        let mut n: Matrix<Q> = Matrix::zeros(3, 3);
        n.set(1, 0, q(1));
        n.set(2, 1, q(1));
        let e = n.exp_nilpotent();
        assert_eq!(*e.get(2, 0), Q::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(e.det(), q(1));
        assert_eq!(n.rank(), 2);
        assert_eq!(n.hcat(&e).rank(), 3);
    }
}
