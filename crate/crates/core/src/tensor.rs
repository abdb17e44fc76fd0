//! Structure-constant tensors `T[i][j][k]`: the coefficient of basis `k` in the
//! product of basis elements `i` and `j`.

use std::fmt;

use crate::linalg::Vector;
use crate::scalar::{Scalar, ScalarError};

#[derive(Clone, PartialEq, Eq, Hash)]
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

    /// Builds a tensor from `(i, j, k, coefficient)` entries; repeated
    /// positions accumulate.
    pub fn from_sparse<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut t = Tensor3::zeros(dim);
        for (i, j, k, c) in entries {
            let v = t.get(i, j, k) + c;
            t.set(i, j, k, v);
        }
        t
    }

    /// Tensor whose `(i, j)` slice is `f(i, j)`.
    pub fn from_fn<F: FnMut(usize, usize) -> Vector>(dim: usize, mut f: F) -> Self {
        let mut t = Tensor3::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "slice length");
                let base = (i * dim + j) * dim;
                t.data[base..base + dim].clone_from_slice(&v);
            }
        }
        t
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dim + j) * self.dim + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let d = self.dim;
        self.data[(i * d + j) * d + k] = v;
    }

    /// The product of basis elements `i` and `j` as a coordinate vector.
    pub fn slice(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.dim + j) * self.dim;
        &self.data[base..base + self.dim]
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn apply(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.slice(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries in `(i, j, k)` order.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn map_entries<F>(&self, f: F) -> Result<Tensor3, ScalarError>
    where
        F: Fn(&Scalar) -> Result<Scalar, ScalarError>,
    {
        Ok(Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }
}

impl fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .nonzero_entries()
            .into_iter()
            .map(|(i, j, k, c)| format!("({i},{j},{k})={c}"))
            .collect();
        write!(f, "Tensor3(dim {}, {:?})", self.dim, entries)
    }
}
