use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::Scalar;
use super::subspace::SubspaceBasis;
use crate::error::{input, Result};

/// Row-major dense matrix over an exact field.
///
/// A matrix with zero rows is allowed and represents an empty constraint
/// system on `cols` unknowns.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DenseMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> DenseMatrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return input(format!("{rows}x{cols} matrix needs {} entries, got {}", rows * cols, data.len()));
        }
        if rows > 0 && cols == 0 {
            return input("matrix with rows must have at least one column");
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    /// Builds a matrix from row vectors, all of which must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return input(format!("row of length {} in a matrix with {cols} columns", bad.len()));
        }
        let n = rows.len();
        Self::new(n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect(),
            cols,
        )
    }

    pub fn empty(cols: usize) -> Self {
        DenseMatrix { rows: 0, cols, data: Vec::new() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = F::one();
        }
        m
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

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        DenseMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            ));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return input(format!("vector of length {} against {} columns", v.len(), self.cols));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return input("matrix sum of mismatched shapes");
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(DenseMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &F) -> Self {
        let data = self.data.iter().map(|a| a.clone() * s.clone()).collect();
        DenseMatrix { rows: self.rows, cols: self.cols, data }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return input(format!("vstack of {} and {} columns", self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(DenseMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form with its pivot columns; zero rows are dropped.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let (rows, pivots) = F::rref(self.row_vecs(), self.cols);
        let n = rows.len();
        let m = DenseMatrix { rows: n, cols: self.cols, data: rows.into_iter().flatten().collect() };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{v : self * v = 0}` as an echelonized basis.
    pub fn kernel(&self) -> SubspaceBasis<F> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let vecs = (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = vec![F::zero(); self.cols];
                v[free] = F::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, free).clone();
                }
                v
            })
            .collect();
        SubspaceBasis::span(self.cols, vecs).expect("kernel vectors have ambient length")
    }

    /// Determinant by elimination; errors on non-square input.
    pub fn det(&self) -> Result<F> {
        if !self.is_square() {
            return input(format!("determinant of a {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        let mut a = self.row_vecs();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[i][col].is_zero()) else {
                return Ok(F::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("nonzero pivot");
            for i in col + 1..n {
                if a[i][col].is_zero() {
                    continue;
                }
                let factor = a[i][col].clone() * inv.clone();
                for j in col..n {
                    let delta = factor.clone() * a[col][j].clone();
                    a[i][j] = a[i][j].clone() - delta;
                }
            }
        }
        Ok(det)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return input(format!("inverse of a {}x{} matrix", self.rows, self.cols));
        }
        let n = self.rows;
        let aug: Vec<Vec<F>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
                r
            })
            .collect();
        let (red, pivots) = F::rref(aug, 2 * n);
        if pivots.len() < n || pivots[n - 1] >= n {
            return Ok(None);
        }
        let data = red.into_iter().flat_map(|r| r.into_iter().skip(n)).collect();
        Ok(Some(DenseMatrix { rows: n, cols: n, data }))
    }

    /// One solution of `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return input(format!("right-hand side of length {} for {} rows", b.len(), self.rows));
        }
        let aug = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let (red, pivots) = F::rref(aug, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &p) in red.iter().zip(&pivots) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> DenseMatrix<G> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<F: fmt::Display> fmt::Debug for DenseMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.data.chunks(self.cols.max(1)) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank over the matrix's field.
pub fn rank<F: Scalar>(m: &DenseMatrix<F>) -> usize {
    m.rank()
}

/// Null space of `m`.
pub fn kernel<F: Scalar>(m: &DenseMatrix<F>) -> SubspaceBasis<F> {
    m.kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::field::{Fp, Q};

    #[test]
    fn identity_and_proportional_rows() {
        assert_eq!(DenseMatrix::<Q>::identity(3).rank(), 3);
        let m = DenseMatrix::<Q>::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel().dim(), 1);
    }

    #[test]
    fn zero_row_and_empty_matrix() {
        let z = DenseMatrix::<Q>::zeros(1, 3);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.kernel().dim(), 3);
        let e = DenseMatrix::<Fp<7>>::empty(4);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.kernel().dim(), 4);
        assert_eq!(DenseMatrix::<Q>::identity(3).kernel().dim(), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = DenseMatrix::<Q>::from_i64_rows(&[&[1, 2, 3, 4], &[2, 4, 7, 9], &[0, 0, 1, 1]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.dim(), 4 - m.rank());
        for v in k.vectors() {
            assert!(m.mul_vec(v).unwrap().iter().all(|x| num_traits::Zero::is_zero(x)));
        }
    }

    #[test]
    fn det_and_inverse() {
        let m = DenseMatrix::<Q>::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]).unwrap();
        assert_eq!(m.det().unwrap(), Q::from_i64(18));
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), DenseMatrix::identity(3));
        let s = DenseMatrix::<Fp<5>>::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert!(s.inverse().unwrap().is_none());
        assert!(num_traits::Zero::is_zero(&s.det().unwrap()));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = DenseMatrix::<Q>::from_i64_rows(&[&[1, 2, 0], &[0, 1, 1]]).unwrap();
        let b = [Q::from_i64(3), Q::from_i64(4)];
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x).unwrap(), b.to_vec());
        let s = DenseMatrix::<Q>::from_i64_rows(&[&[1, 1], &[2, 2]]).unwrap();
        assert!(s.solve(&[Q::from_i64(1), Q::from_i64(3)]).unwrap().is_none());
        assert!(s.solve(&[Q::from_i64(1)]).is_err());
    }

    #[test]
    fn shape_errors() {
        assert!(DenseMatrix::<Q>::new(2, 2, vec![Q::from_i64(1)]).is_err());
        assert!(DenseMatrix::<Q>::zeros(2, 3).det().is_err());
        let a = DenseMatrix::<Q>::zeros(2, 3);
        assert!(a.mul(&a).is_err());
    }
}
