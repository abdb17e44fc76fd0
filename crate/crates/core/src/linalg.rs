//! Dense exact linear algebra over [`Scalar`].
//!
//! Matrices act on column vectors: column `j` of a linear map holds the
//! coordinates of the image of basis vector `j`. Subspaces are stored as the
//! rows of their reduced row echelon basis, so equal subspaces compare equal.

use std::fmt;

use thiserror::Error;

use crate::scalar::Scalar;

pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
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
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        let mut out = vec![Scalar::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, slot) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *slot += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    /// Kronecker product; acts on `V ⊗ W` with index `i * dim W + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack width");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn map_entries<F>(&self, f: F) -> Result<Matrix, crate::scalar::ScalarError>
    where
        F: Fn(&Scalar) -> Result<Scalar, crate::scalar::ScalarError>,
    {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(p, row);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let pv = m.get(row, c);
                    if !pv.is_zero() {
                        let v = m.get(r, c) - &factor * pv;
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, row, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let (red, _, pivots) = aug.rref();
        if (0..n).any(|i| pivots.get(i) != Some(&i)) {
            return Err(LinalgError::Singular);
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }

    /// `{v : self · v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (red, rank, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = -red.get(r, free);
            }
            basis.push(v);
        }
        Subspace::span(self.cols, &basis)
    }

    /// Solve `self · x = rhs`, if a solution exists.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vector> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let (red, _, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = red.get(r, self.cols).clone();
        }
        Some(x)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "Matrix{rows:?}")
    }
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(v: &[Scalar], s: &Scalar) -> Vector {
    v.iter().map(|x| x * s).collect()
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// A subspace of `k^n`, represented by its RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut m = Matrix::zeros(vectors.len(), ambient);
        for (r, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), ambient, "vector length");
            for (c, x) in v.iter().enumerate() {
                m.set(r, c, x.clone());
            }
        }
        Self::from_rows_matrix(&m)
    }

    fn from_rows_matrix(m: &Matrix) -> Self {
        let (red, rank, pivots) = m.rref();
        let mut basis = Matrix::zeros(rank, m.cols());
        for r in 0..rank {
            for c in 0..m.cols() {
                basis.set(r, c, red.get(r, c).clone());
            }
        }
        Subspace {
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    /// Span of a subset of the standard basis.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vector> = indices.iter().map(|&i| unit_vector(ambient, i)).collect();
        Self::span(ambient, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors()
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let f = w[p].clone();
            if f.is_zero() {
                continue;
            }
            for (c, slot) in w.iter_mut().enumerate() {
                let b = self.basis.get(r, c);
                if !b.is_zero() {
                    *slot -= &f * b;
                }
            }
        }
        is_zero_vector(&w)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::AmbientMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::from_rows_matrix(&self.basis.vstack(&other.basis)))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        // Coefficient pairs (c, d) with c·A + d·B = 0 give c·A in the intersection.
        let stacked = self.basis.vstack(&other.basis).transpose();
        let rel = stacked.kernel();
        let k = self.dim();
        let vectors: Vec<Vector> = rel
            .basis_vectors()
            .iter()
            .map(|coeffs| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (r, c) in coeffs[..k].iter().enumerate() {
                    if !c.is_zero() {
                        v = add_vectors(&v, &scale_vector(self.basis.row(r), c));
                    }
                }
                v
            })
            .collect();
        Ok(Subspace::span(self.ambient, &vectors))
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(other
            .basis_vectors()
            .iter()
            .all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    /// Image under a linear map.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let vs: Vec<Vector> = self.basis_vectors().iter().map(|v| map.apply(v)).collect();
        Subspace::span(map.rows(), &vs)
    }

    /// A matrix `Q` with `Q·v = 0` exactly when `v` lies in this subspace.
    pub fn membership_test(&self) -> Matrix {
        let ann = self.basis.kernel();
        ann.basis.clone()
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}, {:?})", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[&str]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| s.parse().unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_examples() {
        let (r, rank, _) = Matrix::identity(2).rref();
        assert_eq!((r, rank), (Matrix::identity(2), 2));
        let (r, rank, _) = m(&[&["1", "2"], &["2", "4"]]).rref();
        assert_eq!(rank, 1);
        assert_eq!(r, m(&[&["1", "2"], &["0", "0"]]));
        let (r, rank, _) = m(&[&["b", "0"], &["0", "b"]]).rref();
        assert_eq!((r, rank), (Matrix::identity(2), 2));
    }

    #[test]
    fn inverses() {
        let alpha = m(&[&["1", "0"], &["0", "-1"]]);
        assert_eq!(alpha.invert().unwrap(), alpha);
        let beta = m(&[&["1", "0"], &["0", "b"]]);
        assert_eq!(beta.invert().unwrap(), m(&[&["1", "0"], &["0", "1/b"]]));
        assert_eq!(Matrix::zeros(1, 1).invert(), Err(LinalgError::Singular));
        assert!(matches!(Matrix::zeros(1, 2).invert(), Err(LinalgError::NotSquare { .. })));
    }

    #[test]
    fn kernels() {
        assert!(Matrix::identity(3).kernel().is_zero());
        assert!(Matrix::zeros(3, 3).kernel().is_full());
        let k = m(&[&["1", "1", "0"]]).kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis_vectors() {
            assert!(is_zero_vector(&m(&[&["1", "1", "0"]]).apply(&v)));
        }
    }

    #[test]
    fn subspace_lattice() {
        let v = Subspace::coordinate(3, &[0, 1]);
        assert_eq!(v.sum(&Subspace::zero(3)).unwrap(), v);
        assert_eq!(v.intersect(&v).unwrap(), v);
        let diag = Subspace::span(3, &[vec![Scalar::one(), Scalar::one(), Scalar::zero()]]);
        assert!(v.contains(&diag).unwrap());
        assert!(!diag.contains(&v).unwrap());
        let w = Subspace::coordinate(3, &[1, 2]);
        assert_eq!(v.intersect(&w).unwrap(), Subspace::coordinate(3, &[1]));
        assert_eq!(v.sum(&w).unwrap(), Subspace::full(3));
        assert_eq!(
            v.sum(&Subspace::zero(2)),
            Err(LinalgError::AmbientMismatch(3, 2))
        );
    }

    #[test]
    fn membership_test_matrix() {
        let v = Subspace::coordinate(3, &[0, 2]);
        let q = v.membership_test();
        assert!(is_zero_vector(&q.apply(&unit_vector(3, 2))));
        assert!(!is_zero_vector(&q.apply(&unit_vector(3, 1))));
    }

    #[test]
    fn solve_linear_system() {
        let a = m(&[&["1", "1"], &["1", "-1"]]);
        let x = a.solve(&["2".parse().unwrap(), "0".parse().unwrap()]).unwrap();
        assert_eq!(x, vec![Scalar::one(), Scalar::one()]);
        let sing = m(&[&["1", "1"], &["1", "1"]]);
        assert!(sing.solve(&[Scalar::one(), Scalar::zero()]).is_none());
    }
}
