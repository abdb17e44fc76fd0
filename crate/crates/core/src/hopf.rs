//! Finite-dimensional Hopf algebras given by structure constants, and
//! universal R-matrices on them.
//!
//! Elements of `H^{⊗n}` are dense coordinate vectors of length `dim^n`; the
//! basis tuple `(t0, ..., t_{n-1})` sits at index `Σ t_s · dim^{n-1-s}`.

use thiserror::Error;

use crate::linalg::{sub_vectors, unit_vector, Matrix, Vector};
use crate::report::{AxiomCheck, CheckReport};
use crate::scalar::{Scalar, ScalarError};
use crate::tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a group table: cell ({row}, {col}): {reason}")]
    NotAGroup {
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("R-matrix is not invertible in H⊗H")]
    NotInvertible,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    basis: Vec<String>,
    mult: Tensor3,
    unit: Vector,
    /// `comult[i][j][k]`: coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    comult: Tensor3,
    counit: Vector,
    antipode: Matrix,
}

impl HopfAlgebra {
    pub fn new(
        basis: Vec<String>,
        mult: Tensor3,
        unit: Vector,
        comult: Tensor3,
        counit: Vector,
        antipode: Matrix,
    ) -> Result<Self, HopfError> {
        let d = basis.len();
        let mismatch = |what: &str| Err(HopfError::DimensionMismatch(format!("{what} does not match dim {d}")));
        if mult.dim() != d {
            return mismatch("multiplication tensor");
        }
        if comult.dim() != d {
            return mismatch("comultiplication tensor");
        }
        if unit.len() != d {
            return mismatch("unit vector");
        }
        if counit.len() != d {
            return mismatch("counit vector");
        }
        if antipode.rows() != d || antipode.cols() != d {
            return mismatch("antipode matrix");
        }
        Ok(HopfAlgebra {
            basis,
            mult,
            unit,
            comult,
            counit,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn comult(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix {
        &self.antipode
    }

    pub fn with_antipode(&self, antipode: Matrix) -> Result<Self, HopfError> {
        HopfAlgebra::new(
            self.basis.clone(),
            self.mult.clone(),
            self.unit.clone(),
            self.comult.clone(),
            self.counit.clone(),
            antipode,
        )
    }

    pub fn map_scalars<F>(&self, f: F) -> Result<Self, ScalarError>
    where
        F: Fn(&Scalar) -> Result<Scalar, ScalarError>,
    {
        Ok(HopfAlgebra {
            basis: self.basis.clone(),
            mult: self.mult.map_entries(&f)?,
            unit: self.unit.iter().map(&f).collect::<Result<_, _>>()?,
            comult: self.comult.map_entries(&f)?,
            counit: self.counit.iter().map(&f).collect::<Result<_, _>>()?,
            antipode: self.antipode.map_entries(&f)?,
        })
    }

    fn names(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.basis[i].clone()).collect()
    }

    /// `Δ(e_i)` as an element of `H⊗H`.
    pub fn coproduct_of_basis(&self, i: usize) -> Vector {
        let d = self.dim();
        let mut out = Vec::with_capacity(d * d);
        for j in 0..d {
            out.extend_from_slice(self.comult.slice(i, j));
        }
        out
    }

    /// `Δ(h)` for an arbitrary element.
    pub fn coproduct(&self, h: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d * d];
        for (i, c) in h.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, x) in out.iter_mut().zip(self.coproduct_of_basis(i)) {
                if !x.is_zero() {
                    *slot += c * &x;
                }
            }
        }
        out
    }

    /// `1 ⊗ ... ⊗ 1` in `H^{⊗n}`.
    pub fn tensor_unit(&self, n: usize) -> Vector {
        let mut out = vec![Scalar::one()];
        for _ in 0..n {
            out = kron_vec(&out, &self.unit);
        }
        out
    }

    /// Product in the tensor-power algebra `H^{⊗n}`.
    pub fn tensor_mul(&self, n: usize, x: &[Scalar], y: &[Scalar]) -> Vector {
        let d = self.dim();
        let len = d.pow(n as u32);
        assert_eq!(x.len(), len);
        assert_eq!(y.len(), len);
        let mut out = vec![Scalar::zero(); len];
        for (a, ca) in x.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let ta = digits(a, d, n);
            for (b, cb) in y.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let tb = digits(b, d, n);
                // Expand the slotwise products, skipping zero coefficients.
                let mut partial: Vec<(usize, Scalar)> = vec![(0, ca * cb)];
                for s in 0..n {
                    let prod = self.mult.slice(ta[s], tb[s]);
                    let mut next = Vec::new();
                    for (idx, c) in &partial {
                        for (k, m) in prod.iter().enumerate() {
                            if !m.is_zero() {
                                next.push((idx * d + k, c * m));
                            }
                        }
                    }
                    partial = next;
                }
                for (idx, c) in partial {
                    out[idx] += c;
                }
            }
        }
        out
    }

    /// Applies a linear map `H → H^{⊗m}` (given per basis element) to slot
    /// `slot` of an element of `H^{⊗n}`.
    pub fn expand_slot<F>(&self, x: &[Scalar], n: usize, slot: usize, m: usize, f: F) -> Vector
    where
        F: Fn(usize) -> Vector,
    {
        let d = self.dim();
        let images: Vec<Vector> = (0..d).map(&f).collect();
        let out_n = n - 1 + m;
        let mut out = vec![Scalar::zero(); d.pow(out_n as u32)];
        let dm = d.pow(m as u32);
        for (a, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let t = digits(a, d, n);
            for (img_idx, v) in images[t[slot]].iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let mut idx = 0;
                for &ts in &t[..slot] {
                    idx = idx * d + ts;
                }
                idx = idx * dm + img_idx;
                for &ts in &t[slot + 1..] {
                    idx = idx * d + ts;
                }
                out[idx] += c * v;
            }
        }
        out
    }

    /// Swaps the two factors of an element of `H⊗H`.
    pub fn flip(&self, x: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d * d];
        for i in 0..d {
            for j in 0..d {
                out[j * d + i] = x[i * d + j].clone();
            }
        }
        out
    }

    pub fn check_axioms(&self) -> CheckReport {
        check_hopf_axioms(self)
    }

    /// `Δ = flip ∘ Δ` on every basis element.
    pub fn is_cocommutative(&self) -> bool {
        (0..self.dim()).all(|i| {
            let c = self.coproduct_of_basis(i);
            c == self.flip(&c)
        })
    }
}

fn digits(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for s in (0..n).rev() {
        t[s] = idx % d;
        idx /= d;
    }
    t
}

pub(crate) fn kron_vec(a: &[Scalar], b: &[Scalar]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(if x.is_zero() || y.is_zero() {
                Scalar::zero()
            } else {
                x * y
            });
        }
    }
    out
}

fn concat(a: Vector, b: Vector) -> Vector {
    let mut a = a;
    a.extend(b);
    a
}

/// Runs the Hopf algebra axiom suite on every basis tuple.
pub fn check_hopf_axioms(h: &HopfAlgebra) -> CheckReport {
    let d = h.dim();
    let e = |i: usize| unit_vector(d, i);
    let mut report = CheckReport::new("hopf");

    let mut assoc = AxiomCheck::new("associativity", "(ab)c = a(bc)");
    for i in 0..d {
        for j in 0..d {
            let ij = h.mult.slice(i, j).to_vec();
            for k in 0..d {
                let left = h.mult.apply(&ij, &e(k));
                let right = h.mult.apply(&e(i), h.mult.slice(j, k));
                assoc.record(|| h.names(&[i, j, k]), sub_vectors(&left, &right));
            }
        }
    }
    report.push(assoc.finish());

    let mut unit = AxiomCheck::new("unit", "1a = a = a1");
    for i in 0..d {
        let left = sub_vectors(&h.mult.apply(&h.unit, &e(i)), &e(i));
        let right = sub_vectors(&h.mult.apply(&e(i), &h.unit), &e(i));
        unit.record(|| h.names(&[i]), concat(left, right));
    }
    report.push(unit.finish());

    let mut coassoc = AxiomCheck::new("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ");
    for i in 0..d {
        let delta = h.coproduct_of_basis(i);
        let left = h.expand_slot(&delta, 2, 0, 2, |k| h.coproduct_of_basis(k));
        let right = h.expand_slot(&delta, 2, 1, 2, |k| h.coproduct_of_basis(k));
        coassoc.record(|| h.names(&[i]), sub_vectors(&left, &right));
    }
    report.push(coassoc.finish());

    let mut counit = AxiomCheck::new("counit", "(ε⊗id)Δ = id = (id⊗ε)Δ");
    for i in 0..d {
        let delta = h.coproduct_of_basis(i);
        let eps = |k: usize| vec![h.counit[k].clone()];
        let left = h.expand_slot(&delta, 2, 0, 0, eps);
        let right = h.expand_slot(&delta, 2, 1, 0, eps);
        counit.record(
            || h.names(&[i]),
            concat(sub_vectors(&left, &e(i)), sub_vectors(&right, &e(i))),
        );
    }
    report.push(counit.finish());

    let mut bialg = AxiomCheck::new(
        "bialgebra",
        "Δ(ab) = Δ(a)Δ(b), ε(ab) = ε(a)ε(b), Δ(1) = 1⊗1, ε(1) = 1",
    );
    for i in 0..d {
        for j in 0..d {
            let left = h.coproduct(h.mult.slice(i, j));
            let right = h.tensor_mul(2, &h.coproduct_of_basis(i), &h.coproduct_of_basis(j));
            let eps_ab: Scalar = h
                .mult
                .slice(i, j)
                .iter()
                .zip(&h.counit)
                .map(|(a, b)| a * b)
                .sum();
            let eps_res = eps_ab - &h.counit[i] * &h.counit[j];
            bialg.record(
                || h.names(&[i, j]),
                concat(sub_vectors(&left, &right), vec![eps_res]),
            );
        }
    }
    {
        let delta_one = h.coproduct(&h.unit);
        let eps_one: Scalar = h.unit.iter().zip(&h.counit).map(|(a, b)| a * b).sum();
        bialg.record(
            || vec!["1".to_string()],
            concat(
                sub_vectors(&delta_one, &h.tensor_unit(2)),
                vec![eps_one - Scalar::one()],
            ),
        );
    }
    report.push(bialg.finish());

    let mut antipode = AxiomCheck::new("antipode", "S(a1)a2 = ε(a)1 = a1S(a2)");
    for i in 0..d {
        let delta = h.coproduct_of_basis(i);
        let mut left = vec![Scalar::zero(); d];
        let mut right = vec![Scalar::zero(); d];
        for j in 0..d {
            for k in 0..d {
                let c = &delta[j * d + k];
                if c.is_zero() {
                    continue;
                }
                let sl = h.mult.apply(&h.antipode.column(j), &e(k));
                let sr = h.mult.apply(&e(j), &h.antipode.column(k));
                for t in 0..d {
                    left[t] += c * &sl[t];
                    right[t] += c * &sr[t];
                }
            }
        }
        let target: Vector = h.unit.iter().map(|u| u * &h.counit[i]).collect();
        antipode.record(
            || h.names(&[i]),
            concat(sub_vectors(&left, &target), sub_vectors(&right, &target)),
        );
    }
    report.push(antipode.finish());
    report
}

/// `S(ab) = S(b)S(a)` on all basis pairs; a consequence of the axioms.
pub fn check_antipode_anti_multiplicative(h: &HopfAlgebra) -> CheckReport {
    let d = h.dim();
    let mut report = CheckReport::new("hopf-derived");
    let mut check = AxiomCheck::new("antipode-anti-multiplicative", "S(ab) = S(b)S(a)");
    for i in 0..d {
        for j in 0..d {
            let left = h.antipode.apply(h.mult.slice(i, j));
            let right = h.mult.apply(&h.antipode.column(j), &h.antipode.column(i));
            check.record(|| h.names(&[i, j]), sub_vectors(&left, &right));
        }
    }
    report.push(check.finish());
    report
}

/// The group algebra `kG` of a finite group given by its Cayley table
/// (`table[a][b]` is the index of `ab`).
pub fn group_algebra(
    names: Vec<String>,
    table: &[Vec<usize>],
    identity: usize,
) -> Result<HopfAlgebra, HopfError> {
    let n = names.len();
    let not_group = |row: usize, col: usize, reason: &str| HopfError::NotAGroup {
        row,
        col,
        reason: reason.to_string(),
    };
    if n == 0 {
        return Err(not_group(0, 0, "empty group"));
    }
    if table.len() != n {
        return Err(HopfError::DimensionMismatch(format!(
            "table has {} rows for {n} elements",
            table.len()
        )));
    }
    if identity >= n {
        return Err(not_group(identity, identity, "identity index out of range"));
    }
    for (a, row) in table.iter().enumerate() {
        if row.len() != n {
            return Err(HopfError::DimensionMismatch(format!(
                "table row {a} has {} entries",
                row.len()
            )));
        }
        for (b, &c) in row.iter().enumerate() {
            if c >= n {
                return Err(not_group(a, b, "entry out of range"));
            }
        }
    }
    for a in 0..n {
        if table[identity][a] != a {
            return Err(not_group(identity, a, "identity does not act trivially on the left"));
        }
        if table[a][identity] != a {
            return Err(not_group(a, identity, "identity does not act trivially on the right"));
        }
    }
    let mut inverse = vec![0; n];
    for a in 0..n {
        let Some(b) = (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) else {
            return Err(not_group(a, a, "element has no two-sided inverse"));
        };
        inverse[a] = b;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(not_group(a, b, &format!("associativity fails with element {c}")));
                }
            }
        }
    }

    let mult = Tensor3::from_sparse(
        n,
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b, table[a][b], Scalar::one()))),
    );
    let comult = Tensor3::from_sparse(n, (0..n).map(|a| (a, a, a, Scalar::one())));
    let mut antipode = Matrix::zeros(n, n);
    for (a, &b) in inverse.iter().enumerate() {
        antipode.set(b, a, Scalar::one());
    }
    HopfAlgebra::new(
        names,
        mult,
        unit_vector(n, identity),
        comult,
        vec![Scalar::one(); n],
        antipode,
    )
}

/// Cayley table of the cyclic group of order `n`, elements `g^0 .. g^{n-1}`.
pub fn cyclic_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
}

/// The one-dimensional Hopf algebra `k`.
pub fn trivial_hopf() -> HopfAlgebra {
    group_algebra(vec!["1".to_string()], &[vec![0]], 0).expect("trivial group")
}

/// A universal R-matrix `R = Σ coeffs[i][j] e_i ⊗ e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    coeffs: Matrix,
}

impl RMatrix {
    pub fn new(h: &HopfAlgebra, coeffs: Matrix) -> Result<Self, HopfError> {
        if coeffs.rows() != h.dim() || coeffs.cols() != h.dim() {
            return Err(HopfError::DimensionMismatch(format!(
                "R-matrix is {}x{}, Hopf algebra has dim {}",
                coeffs.rows(),
                coeffs.cols(),
                h.dim()
            )));
        }
        Ok(RMatrix { coeffs })
    }

    /// `R = 1 ⊗ 1`.
    pub fn trivial(h: &HopfAlgebra) -> Self {
        let d = h.dim();
        let u = h.unit();
        let mut coeffs = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                coeffs.set(i, j, &u[i] * &u[j]);
            }
        }
        RMatrix { coeffs }
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    /// `R` as an element of `H⊗H`.
    pub fn as_element(&self) -> Vector {
        let d = self.dim();
        (0..d * d)
            .map(|x| self.coeffs.get(x / d, x % d).clone())
            .collect()
    }

    pub fn from_element(d: usize, x: &[Scalar]) -> Self {
        let mut coeffs = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                coeffs.set(i, j, x[i * d + j].clone());
            }
        }
        RMatrix { coeffs }
    }

    /// Nonzero summands `(i, j, R_ij)`.
    pub fn terms(&self) -> Vec<(usize, usize, Scalar)> {
        let d = self.dim();
        let mut out = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let c = self.coeffs.get(i, j);
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn map_scalars<F>(&self, f: F) -> Result<Self, ScalarError>
    where
        F: Fn(&Scalar) -> Result<Scalar, ScalarError>,
    {
        Ok(RMatrix {
            coeffs: self.coeffs.map_entries(f)?,
        })
    }
}

/// The inverse of `R` in `H⊗H`, if it exists.
pub fn r_inverse(h: &HopfAlgebra, r: &RMatrix) -> Option<Vector> {
    let d = h.dim();
    let n = d * d;
    let rel = r.as_element();
    let columns: Vec<Vector> = (0..n)
        .map(|p| h.tensor_mul(2, &rel, &unit_vector(n, p)))
        .collect();
    let left_mult = Matrix::from_columns(n, &columns);
    // Left multiplication is injective exactly when R is a unit (finite dimension).
    let inv = left_mult.invert().ok()?;
    Some(inv.apply(&h.tensor_unit(2)))
}

/// Embeds `R` into `H⊗H⊗H` on the slots `(a, b)`, with `1` in the remaining slot.
fn embed_r(h: &HopfAlgebra, r: &RMatrix, slots: (usize, usize)) -> Vector {
    let d = h.dim();
    let mut out = vec![Scalar::zero(); d * d * d];
    let free = 3 - slots.0 - slots.1;
    for (i, j, c) in r.terms() {
        for (u, cu) in h.unit().iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            let mut t = [0usize; 3];
            t[slots.0] = i;
            t[slots.1] = j;
            t[free] = u;
            out[(t[0] * d + t[1]) * d + t[2]] += &c * cu;
        }
    }
    out
}

/// The three quasitriangularity axioms; QT3 is checked on every basis element.
pub fn check_quasitriangular(h: &HopfAlgebra, r: &RMatrix) -> Result<CheckReport, HopfError> {
    if r.dim() != h.dim() {
        return Err(HopfError::DimensionMismatch("R-matrix size".into()));
    }
    if r_inverse(h, r).is_none() {
        return Err(HopfError::NotInvertible);
    }
    let d = h.dim();
    let rel = r.as_element();
    let mut report = CheckReport::new("quasitriangular");

    let mut qt1 = AxiomCheck::new("qt1", "(Δ⊗id)(R) = R13 R23");
    let left = h.expand_slot(&rel, 2, 0, 2, |k| h.coproduct_of_basis(k));
    let right = h.tensor_mul(3, &embed_r(h, r, (0, 2)), &embed_r(h, r, (1, 2)));
    qt1.record(|| vec!["R".to_string()], sub_vectors(&left, &right));
    report.push(qt1.finish());

    let mut qt2 = AxiomCheck::new("qt2", "(id⊗Δ)(R) = R13 R12");
    let left = h.expand_slot(&rel, 2, 1, 2, |k| h.coproduct_of_basis(k));
    let right = h.tensor_mul(3, &embed_r(h, r, (0, 2)), &embed_r(h, r, (0, 1)));
    qt2.record(|| vec!["R".to_string()], sub_vectors(&left, &right));
    report.push(qt2.finish());

    let mut qt3 = AxiomCheck::new("qt3", "R Δ(h) = Δcop(h) R");
    for i in 0..d {
        let delta = h.coproduct_of_basis(i);
        let left = h.tensor_mul(2, &rel, &delta);
        let right = h.tensor_mul(2, &h.flip(&delta), &rel);
        qt3.record(|| vec![h.basis[i].clone()], sub_vectors(&left, &right));
    }
    report.push(qt3.finish());
    Ok(report)
}

/// `(ε⊗id)(R) = 1 = (id⊗ε)(R)`; consequences of the quasitriangular axioms.
pub fn check_r_normalization(h: &HopfAlgebra, r: &RMatrix) -> CheckReport {
    let rel = r.as_element();
    let eps = |k: usize| vec![h.counit()[k].clone()];
    let mut report = CheckReport::new("r-normalization");
    let mut check = AxiomCheck::new("counit-normalization", "(ε⊗id)(R) = 1 = (id⊗ε)(R)");
    let left = h.expand_slot(&rel, 2, 0, 0, eps);
    let right = h.expand_slot(&rel, 2, 1, 0, eps);
    check.record(
        || vec!["R".to_string()],
        concat(sub_vectors(&left, h.unit()), sub_vectors(&right, h.unit())),
    );
    report.push(check.finish());
    report
}

/// True iff `R` is invertible and `R^{-1} = Σ R² ⊗ R¹`.
pub fn is_triangular(h: &HopfAlgebra, r: &RMatrix) -> bool {
    match r_inverse(h, r) {
        Some(inv) => inv == h.flip(&r.as_element()),
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn kz2() -> HopfAlgebra {
        group_algebra(vec!["e".into(), "g".into()], &cyclic_table(2), 0).unwrap()
    }

    fn r0(h: &HopfAlgebra) -> RMatrix {
        let half = Scalar::ratio(1, 2);
        let m = Matrix::from_rows(vec![
            vec![half.clone(), half.clone()],
            vec![half.clone(), -half],
        ])
        .unwrap();
        RMatrix::new(h, m).unwrap()
    }

    #[test]
    fn group_algebra_z2_passes() {
        let h = kz2();
        let rep = check_hopf_axioms(&h);
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.entries.len(), 6);
        assert_eq!(h.mult().slice(1, 1), &[Scalar::one(), Scalar::zero()][..]);
        assert!(h.is_cocommutative());
        assert!(check_antipode_anti_multiplicative(&h).passed());
    }

    #[test]
    fn zero_antipode_fails_at_identity() {
        let h = kz2().with_antipode(Matrix::zeros(2, 2)).unwrap();
        let rep = check_hopf_axioms(&h);
        let e = rep.entry("antipode").unwrap();
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.witness.as_ref().unwrap().tuple, vec!["e".to_string()]);
        assert_eq!(rep.count(Status::Fail), 1);
    }

    #[test]
    fn trivial_and_cyclic_four() {
        assert!(check_hopf_axioms(&trivial_hopf()).passed());
        let names = (0..4).map(|i| format!("g{i}")).collect();
        let z4 = group_algebra(names, &cyclic_table(4), 0).unwrap();
        assert_eq!(z4.dim(), 4);
        assert!(check_hopf_axioms(&z4).passed());
        assert!(z4.is_cocommutative());
    }

    #[test]
    fn bad_tables_are_rejected() {
        let names: Vec<String> = vec!["e".into(), "g".into()];
        let not_closed = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            group_algebra(names.clone(), &not_closed, 0),
            Err(HopfError::NotAGroup { .. })
        ));
        let out_of_range = vec![vec![0, 2], vec![1, 0]];
        assert!(matches!(
            group_algebra(names, &out_of_range, 0),
            Err(HopfError::NotAGroup { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn kz2_with_r0_is_triangular() {
        let h = kz2();
        let r = r0(&h);
        let rep = check_quasitriangular(&h, &r).unwrap();
        assert!(rep.passed(), "{rep}");
        assert_eq!(rep.entries.len(), 3);
        assert!(is_triangular(&h, &r));
        assert!(check_r_normalization(&h, &r).passed());
    }

    #[test]
    fn trivial_r_matrix() {
        for h in [kz2(), trivial_hopf()] {
            let r = RMatrix::trivial(&h);
            assert!(check_quasitriangular(&h, &r).unwrap().passed());
            assert!(is_triangular(&h, &r));
        }
    }

    #[test]
    fn e_tensor_g_fails_qt1() {
        let h = kz2();
        let m = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::zero(), Scalar::zero()],
        ])
        .unwrap();
        let r = RMatrix::new(&h, m).unwrap();
        let rep = check_quasitriangular(&h, &r).unwrap();
        assert_eq!(rep.entry("qt1").unwrap().status, Status::Fail);
        // Hand expansion: (Δ⊗id)(e⊗g) = e⊗e⊗g, R13R23 = e⊗e⊗g² = e⊗e⊗e.
        let w = rep.entry("qt1").unwrap().witness.clone().unwrap();
        let mut expected = vec![Scalar::zero(); 8];
        expected[1] = Scalar::one(); // e⊗e⊗g
        expected[0] = -Scalar::one(); // e⊗e⊗e
        assert_eq!(w.residual, expected);
    }

    #[test]
    fn singular_r_is_rejected() {
        let h = kz2();
        let r = RMatrix::new(&h, Matrix::zeros(2, 2)).unwrap();
        assert_eq!(check_quasitriangular(&h, &r), Err(HopfError::NotInvertible));
        assert!(!is_triangular(&h, &r));
    }
}
