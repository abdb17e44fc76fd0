//! A quasitriangular but non-triangular instance: kG for G = Z2 x Z2 with the
//! R-matrix of the bicharacter beta(c, d) = (-1)^{c1 d2} on the dual group.

mod common;

use std::sync::Arc;

use bihom::bihom::commutator_bracket;
use bihom::hmod::{check_braiding_symmetry, check_hexagons, HModule};
use bihom::hopf::{check_hopf_axioms, check_quasitriangular, group_algebra, is_triangular, HopfAlgebra};
use bihom::{BiHomAlgebra, BiHomError, Matrix, RMatrix, Scalar, Tensor3};

fn bit(x: usize, i: usize) -> usize {
    (x >> i) & 1
}

/// Character `c` evaluated at group element `g`; index bit 1 is the first coordinate.
fn chi(c: usize, g: usize) -> i64 {
    if (bit(c, 1) * bit(g, 1) + bit(c, 0) * bit(g, 0)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn beta(c: usize, d: usize) -> i64 {
    if bit(c, 1) * bit(d, 0) == 1 {
        -1
    } else {
        1
    }
}

fn klein() -> Arc<HopfAlgebra> {
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    let names = ["e", "b", "a", "ab"].map(String::from).to_vec();
    Arc::new(group_algebra(names, &table, 0).unwrap())
}

/// `R = Σ beta(c, d) p_c ⊗ p_d` with `p_c = 1/4 Σ_g chi_c(g) g`, expanded in the group basis.
fn r_matrix(h: &HopfAlgebra) -> RMatrix {
    let rows = (0..4)
        .map(|g| {
            (0..4)
                .map(|k| {
                    let total: i64 = (0..4)
                        .flat_map(|c| (0..4).map(move |d| beta(c, d) * chi(c, g) * chi(d, k)))
                        .sum();
                    Scalar::ratio(total, 16)
                })
                .collect()
        })
        .collect();
    RMatrix::new(h, Matrix::from_rows(rows).unwrap()).unwrap()
}

/// One basis vector per character degree in `degrees`.
fn graded_module(h: &Arc<HopfAlgebra>, degrees: &[usize]) -> HModule {
    let actions = (0..4)
        .map(|g| Matrix::diagonal(&degrees.iter().map(|&d| Scalar::from_int(chi(d, g))).collect::<Vec<_>>()))
        .collect();
    let names = (0..degrees.len()).map(|i| format!("v{i}")).collect();
    HModule::new(h.clone(), names, actions).unwrap()
}

#[test]
fn bicharacter_r_matrix_is_quasitriangular_but_not_triangular() {
    let h = klein();
    assert!(check_hopf_axioms(&h).passed());
    let r = r_matrix(&h);
    let report = check_quasitriangular(&h, &r).unwrap();
    assert!(report.passed(), "{report}");
    assert!(!is_triangular(&h, &r));
}

#[test]
fn braiding_is_not_symmetric_but_satisfies_hexagons() {
    let h = klein();
    let r = r_matrix(&h);
    let m = graded_module(&h, &[1, 2]);
    assert!(!check_braiding_symmetry(&m, &r));
    let n = graded_module(&h, &[3]);
    let hex = check_hexagons(&m, &n, &m, &r).unwrap();
    assert!(hex.passed(), "{hex}");
}

#[test]
fn commutator_construction_refuses_non_triangular_input() {
    let h = klein();
    let r = r_matrix(&h);
    let module = graded_module(&h, &[0]);
    let mult = Tensor3::from_sparse(1, [(0, 0, 0, Scalar::one())]);
    let a = BiHomAlgebra::new(module, mult, Matrix::identity(1), Matrix::identity(1), Some(vec![Scalar::one()])).unwrap();
    assert_eq!(commutator_bracket(&a, &r).unwrap_err(), BiHomError::NotTriangular);
}
