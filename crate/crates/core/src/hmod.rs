//! Left modules over a Hopf algebra, module maps, and the braiding induced by
//! an R-matrix.

use std::sync::Arc;

use thiserror::Error;

use crate::hopf::{HopfAlgebra, RMatrix};
use crate::linalg::{sub_vectors, unit_vector, Matrix, Vector};
use crate::report::{AxiomCheck, CheckEntry, CheckReport};
use crate::scalar::{Scalar, ScalarError};
use crate::tensor::Tensor3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HmodError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("modules are over different Hopf algebras")]
    DifferentHopf,
    #[error("map does not commute with the action of `{0}`")]
    NotHLinear(String),
}

/// A left `H`-module; `action[i]` is the operator of the Hopf basis element `e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HModule {
    hopf: Arc<HopfAlgebra>,
    basis: Vec<String>,
    action: Vec<Matrix>,
}

impl HModule {
    pub fn new(
        hopf: Arc<HopfAlgebra>,
        basis: Vec<String>,
        action: Vec<Matrix>,
    ) -> Result<Self, HmodError> {
        let d = basis.len();
        if action.len() != hopf.dim() {
            return Err(HmodError::DimensionMismatch(format!(
                "{} action matrices for a Hopf algebra of dim {}",
                action.len(),
                hopf.dim()
            )));
        }
        if let Some((i, _)) = action
            .iter()
            .enumerate()
            .find(|(_, m)| m.rows() != d || m.cols() != d)
        {
            return Err(HmodError::DimensionMismatch(format!(
                "action of `{}` is not {d}x{d}",
                hopf.basis_names()[i]
            )));
        }
        Ok(HModule { hopf, basis, action })
    }

    /// `H` acting on `k^dim` through the counit.
    pub fn trivial(hopf: Arc<HopfAlgebra>, basis: Vec<String>) -> Self {
        let d = basis.len();
        let action = hopf
            .counit()
            .iter()
            .map(|c| Matrix::identity(d).scale(c))
            .collect();
        HModule { hopf, basis, action }
    }

    pub fn hopf(&self) -> &Arc<HopfAlgebra> {
        &self.hopf
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Operator of an arbitrary element of `H`.
    pub fn operator(&self, h: &[Scalar]) -> Matrix {
        let d = self.dim();
        let mut out = Matrix::zeros(d, d);
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.action[i].scale(c));
            }
        }
        out
    }

    pub fn same_hopf(&self, other: &HModule) -> bool {
        Arc::ptr_eq(&self.hopf, &other.hopf) || self.hopf == other.hopf
    }

    /// `M ⊗ N` with `h` acting through `Δ(h)`; basis `m ⊗ n` at index `m * dim N + n`.
    pub fn tensor(&self, other: &HModule) -> Result<HModule, HmodError> {
        if !self.same_hopf(other) {
            return Err(HmodError::DifferentHopf);
        }
        let h = &self.hopf;
        let d = h.dim();
        let action = (0..d)
            .map(|i| {
                let delta = h.coproduct_of_basis(i);
                let mut op = Matrix::zeros(self.dim() * other.dim(), self.dim() * other.dim());
                for j in 0..d {
                    for k in 0..d {
                        let c = &delta[j * d + k];
                        if !c.is_zero() {
                            op = op.add(&self.action[j].kron(&other.action[k]).scale(c));
                        }
                    }
                }
                op
            })
            .collect();
        let basis = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        Ok(HModule {
            hopf: self.hopf.clone(),
            basis,
            action,
        })
    }

    pub fn map_scalars<F>(&self, hopf: Arc<HopfAlgebra>, f: F) -> Result<Self, ScalarError>
    where
        F: Fn(&Scalar) -> Result<Scalar, ScalarError>,
    {
        Ok(HModule {
            hopf,
            basis: self.basis.clone(),
            action: self
                .action
                .iter()
                .map(|m| m.map_entries(&f))
                .collect::<Result<_, _>>()?,
        })
    }

    pub(crate) fn names(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.basis[i].clone()).collect()
    }

    pub(crate) fn hopf_name(&self, i: usize) -> String {
        self.hopf.basis_names()[i].clone()
    }
}

fn flatten(m: &Matrix) -> Vector {
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

/// Unit acts as the identity and `e_i·(e_j·m) = (e_i e_j)·m`.
pub fn check_module(m: &HModule) -> CheckReport {
    let h = m.hopf();
    let d = h.dim();
    let mut report = CheckReport::new("module");

    let mut unit = AxiomCheck::new("unit-acts-as-identity", "1·m = m");
    let one = m.operator(h.unit());
    unit.record(
        || vec!["1".to_string()],
        flatten(&one.sub(&Matrix::identity(m.dim()))),
    );
    report.push(unit.finish());

    let mut compat = AxiomCheck::new("action-compatibility", "g·(h·m) = (gh)·m");
    for i in 0..d {
        for j in 0..d {
            let left = m.action[i].mul(&m.action[j]);
            let right = m.operator(h.mult().slice(i, j));
            compat.record(
                || vec![m.hopf_name(i), m.hopf_name(j)],
                flatten(&left.sub(&right)),
            );
        }
    }
    report.push(compat.finish());
    report
}

/// First Hopf basis element whose action does not commute with `matrix`.
pub fn h_linearity_defect(source: &HModule, target: &HModule, matrix: &Matrix) -> Option<(usize, Matrix)> {
    (0..source.hopf().dim()).find_map(|i| {
        let diff = matrix.mul(&source.action[i]).sub(&target.action[i].mul(matrix));
        (!diff.is_zero()).then_some((i, diff))
    })
}

/// Report entry for `f(h·m) = h·f(m)` on every Hopf basis element.
pub fn check_h_linear(axiom: &str, module: &HModule, matrix: &Matrix) -> CheckEntry {
    let mut check = AxiomCheck::new(axiom, "f(h·m) = h·f(m)");
    for i in 0..module.hopf().dim() {
        let diff = matrix.mul(&module.action[i]).sub(&module.action[i].mul(matrix));
        check.record(|| vec![module.hopf_name(i)], flatten(&diff));
    }
    check.finish()
}

/// An `H`-linear map between two modules over the same Hopf algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: &HModule, target: &HModule, matrix: Matrix) -> Result<Self, HmodError> {
        if !source.same_hopf(target) {
            return Err(HmodError::DifferentHopf);
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(HmodError::DimensionMismatch(format!(
                "map is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if let Some((i, _)) = h_linearity_defect(source, target, &matrix) {
            return Err(HmodError::NotHLinear(source.hopf_name(i)));
        }
        Ok(ModuleMap { matrix })
    }

    pub fn endomorphism(module: &HModule, matrix: Matrix) -> Result<Self, HmodError> {
        ModuleMap::new(module, module, matrix)
    }

    pub fn identity(module: &HModule) -> Self {
        ModuleMap {
            matrix: Matrix::identity(module.dim()),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            matrix: self.matrix.mul(&other.matrix),
        }
    }
}

/// Matrix of `τ(m ⊗ n) = Σ R²·n ⊗ R¹·m`, from `M⊗N` to `N⊗M`.
pub fn braiding(m: &HModule, n: &HModule, r: &RMatrix) -> Matrix {
    let (dm, dn) = (m.dim(), n.dim());
    let mut out = Matrix::zeros(dn * dm, dm * dn);
    for (i, j, c) in r.terms() {
        // R¹ = e_i acts on the M factor, R² = e_j on the N factor.
        let am = &m.action[i];
        let an = &n.action[j];
        for a in 0..dm {
            for b in 0..dn {
                for p in 0..dn {
                    let x = an.get(p, b);
                    if x.is_zero() {
                        continue;
                    }
                    for q in 0..dm {
                        let y = am.get(q, a);
                        if y.is_zero() {
                            continue;
                        }
                        let (row, col) = (p * dm + q, a * dn + b);
                        let v = out.get(row, col) + &c * &(x * y);
                        out.set(row, col, v);
                    }
                }
            }
        }
    }
    out
}

/// `τ_{M,M} ∘ τ_{M,M} = id`.
pub fn check_braiding_symmetry(m: &HModule, r: &RMatrix) -> bool {
    let t = braiding(m, m, r);
    t.mul(&t).is_identity()
}

/// `τ` commutes with the action of every Hopf basis element.
pub fn check_braiding_naturality(m: &HModule, n: &HModule, r: &RMatrix) -> Result<CheckEntry, HmodError> {
    let mn = m.tensor(n)?;
    let nm = n.tensor(m)?;
    let t = braiding(m, n, r);
    let mut check = AxiomCheck::new("braiding-h-linear", "τ(h·(m⊗n)) = h·τ(m⊗n)");
    for i in 0..m.hopf().dim() {
        let diff = t.mul(mn.action(i)).sub(&nm.action(i).mul(&t));
        check.record(|| vec![m.hopf_name(i)], flatten(&diff));
    }
    Ok(check.finish())
}

/// Both hexagon identities on `U ⊗ V ⊗ W`.
pub fn check_hexagons(u: &HModule, v: &HModule, w: &HModule, r: &RMatrix) -> Result<CheckReport, HmodError> {
    let mut report = CheckReport::new("hexagon");
    let id = |x: &HModule| Matrix::identity(x.dim());

    let mut left = AxiomCheck::new("hexagon-left", "τ(U⊗V,W) = (τ(U,W)⊗1)(1⊗τ(V,W))");
    let lhs = braiding(&u.tensor(v)?, w, r);
    let rhs = braiding(u, w, r)
        .kron(&id(v))
        .mul(&id(u).kron(&braiding(v, w, r)));
    left.record(|| vec!["U".into(), "V".into(), "W".into()], flatten(&lhs.sub(&rhs)));
    report.push(left.finish());

    let mut right = AxiomCheck::new("hexagon-right", "τ(U,V⊗W) = (1⊗τ(U,W))(τ(U,V)⊗1)");
    let lhs = braiding(u, &v.tensor(w)?, r);
    let rhs = id(v)
        .kron(&braiding(u, w, r))
        .mul(&braiding(u, v, r).kron(&id(w)));
    right.record(|| vec!["U".into(), "V".into(), "W".into()], flatten(&lhs.sub(&rhs)));
    report.push(right.finish());
    Ok(report)
}

/// `Σ f(R²·x, R¹·y)` for a bilinear `f` given by structure constants.
pub fn braided_apply(module: &HModule, r: &RMatrix, f: &Tensor3, x: &[Scalar], y: &[Scalar]) -> Vector {
    let mut out = vec![Scalar::zero(); module.dim()];
    for (i, j, c) in r.terms() {
        let fx = module.action[j].apply(x);
        let fy = module.action[i].apply(y);
        for (slot, v) in out.iter_mut().zip(f.apply(&fx, &fy)) {
            if !v.is_zero() {
                *slot += &c * &v;
            }
        }
    }
    out
}

/// `h·(ab) = (h₁·a)(h₂·b)` for every Hopf basis element and basis pair.
pub fn check_equivariant_product(
    axiom: &str,
    citation: &str,
    module: &HModule,
    product: &Tensor3,
) -> CheckEntry {
    let h = module.hopf();
    let (dh, d) = (h.dim(), module.dim());
    let mut check = AxiomCheck::new(axiom, citation);
    for i in 0..dh {
        let delta = h.coproduct_of_basis(i);
        for a in 0..d {
            for b in 0..d {
                let left = module.action[i].apply(product.slice(a, b));
                let mut right = vec![Scalar::zero(); d];
                for j in 0..dh {
                    for k in 0..dh {
                        let c = &delta[j * dh + k];
                        if c.is_zero() {
                            continue;
                        }
                        let ha = module.action[j].column(a);
                        let hb = module.action[k].column(b);
                        for (slot, v) in right.iter_mut().zip(product.apply(&ha, &hb)) {
                            if !v.is_zero() {
                                *slot += c * &v;
                            }
                        }
                    }
                }
                check.record(
                    || {
                        let mut t = vec![module.hopf_name(i)];
                        t.extend(module.names(&[a, b]));
                        t
                    },
                    sub_vectors(&left, &right),
                );
            }
        }
    }
    check.finish()
}

/// `(R²·b)(R¹·a) = ab` for every basis pair.
pub fn is_braided_commutative(module: &HModule, product: &Tensor3, r: &RMatrix) -> bool {
    let d = module.dim();
    (0..d).all(|a| {
        (0..d).all(|b| {
            let braided = braided_apply(module, r, product, &unit_vector(d, b), &unit_vector(d, a));
            braided == product.slice(a, b)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{cyclic_table, group_algebra};
    use crate::report::Status;

    fn kz2() -> Arc<HopfAlgebra> {
        Arc::new(group_algebra(vec!["e".into(), "g".into()], &cyclic_table(2), 0).unwrap())
    }

    fn r0(h: &HopfAlgebra) -> RMatrix {
        let half = Scalar::ratio(1, 2);
        RMatrix::new(
            h,
            Matrix::from_rows(vec![vec![half.clone(), half.clone()], vec![half.clone(), -half]]).unwrap(),
        )
        .unwrap()
    }

    fn graded(h: &Arc<HopfAlgebra>, signs: &[i64]) -> HModule {
        let d = signs.len();
        let g = Matrix::diagonal(&signs.iter().map(|&s| Scalar::from_int(s)).collect::<Vec<_>>());
        let basis = (1..=d).map(|i| format!("x{i}")).collect();
        HModule::new(h.clone(), basis, vec![Matrix::identity(d), g]).unwrap()
    }

    fn assert_flip_with_signs(t: &Matrix, d: usize, sign: impl Fn(usize, usize) -> i64) {
        for a in 0..d {
            for b in 0..d {
                let col = t.column(a * d + b);
                let mut expected = vec![Scalar::zero(); d * d];
                expected[b * d + a] = Scalar::from_int(sign(a, b));
                assert_eq!(col, expected, "τ(x{}⊗x{})", a + 1, b + 1);
            }
        }
    }

    #[test]
    fn graded_modules_are_modules() {
        let h = kz2();
        assert!(check_module(&graded(&h, &[1, -1])).passed());
        assert!(check_module(&graded(&h, &[-1, 1, 1])).passed());
    }

    #[test]
    fn non_involutive_action_fails() {
        let h = kz2();
        let g = Matrix::diagonal(&[Scalar::from_int(2), Scalar::one()]);
        let m = HModule::new(h, vec!["x1".into(), "x2".into()], vec![Matrix::identity(2), g]).unwrap();
        let rep = check_module(&m);
        let e = rep.entry("action-compatibility").unwrap();
        assert_eq!(e.status, Status::Fail);
        assert_eq!(e.witness.as_ref().unwrap().tuple, vec!["g".to_string(), "g".to_string()]);
    }

    #[test]
    fn braiding_two_dim_graded() {
        let h = kz2();
        let m = graded(&h, &[1, -1]);
        let t = braiding(&m, &m, &r0(&h));
        assert_flip_with_signs(&t, 2, |a, b| if a == 1 && b == 1 { -1 } else { 1 });
        assert!(check_braiding_symmetry(&m, &r0(&h)));
    }

    #[test]
    fn braiding_three_dim_table() {
        // x1, x2 odd and x3 even reproduces the full printed braiding table.
        let h = kz2();
        let m = graded(&h, &[-1, -1, 1]);
        let t = braiding(&m, &m, &r0(&h));
        assert_flip_with_signs(&t, 3, |a, b| if a < 2 && b < 2 { -1 } else { 1 });
        assert!(check_braiding_symmetry(&m, &r0(&h)));
    }

    #[test]
    fn trivial_r_gives_plain_flip() {
        let h = kz2();
        let m = graded(&h, &[1, -1, -1]);
        let t = braiding(&m, &m, &RMatrix::trivial(&h));
        assert_flip_with_signs(&t, 3, |_, _| 1);
        assert!(check_braiding_symmetry(&m, &RMatrix::trivial(&h)));
    }

    #[test]
    fn braiding_is_natural_and_hexagonal() {
        let h = kz2();
        let r = r0(&h);
        let u = graded(&h, &[1, -1]);
        let v = graded(&h, &[-1, -1, 1]);
        assert_eq!(check_braiding_naturality(&u, &v, &r).unwrap().status, Status::Pass);
        let rep = check_hexagons(&u, &v, &u, &r).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn module_maps() {
        let h = kz2();
        let m = graded(&h, &[1, -1]);
        let f = ModuleMap::endomorphism(&m, Matrix::diagonal(&[Scalar::one(), Scalar::param("b")])).unwrap();
        let g = ModuleMap::endomorphism(&m, Matrix::diagonal(&[Scalar::from_int(3), Scalar::one()])).unwrap();
        let fg = f.compose(&g);
        assert!(ModuleMap::endomorphism(&m, fg.matrix().clone()).is_ok());
        let swap = Matrix::from_rows(vec![
            vec![Scalar::zero(), Scalar::one()],
            vec![Scalar::one(), Scalar::zero()],
        ])
        .unwrap();
        assert_eq!(
            ModuleMap::endomorphism(&m, swap),
            Err(HmodError::NotHLinear("g".into()))
        );
    }
}
