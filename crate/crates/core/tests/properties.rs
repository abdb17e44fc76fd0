mod common;

use std::collections::BTreeMap;

use bihom::hmod::{braiding, check_braiding_symmetry, HModule};
use bihom::hopf::{cyclic_table, group_algebra, is_triangular, RMatrix};
use bihom::linalg::is_zero_vector;
use bihom::structure::{derived_series, ideal_closure, lower_central_series, ClosureKind};
use bihom::{Matrix, Rational, Scalar, Subspace, TwistedStructure, Vector};
use common::{catalog_objects, s, Structure};
use proptest::prelude::*;
use std::sync::Arc;

fn monomial_sum(terms: &[(i64, u32, u32)]) -> Scalar {
    terms
        .iter()
        .map(|&(c, i, j)| Scalar::from_int(c) * Scalar::param("b").pow(i) * Scalar::param("c").pow(j))
        .sum()
}

fn scalar() -> impl Strategy<Value = Scalar> {
    let poly = prop::collection::vec((-4i64..=4, 0u32..=2, 0u32..=2), 0..4);
    (poly.clone(), poly).prop_filter_map("zero denominator", |(n, d)| {
        let den = monomial_sum(&d);
        let num = monomial_sum(&n);
        num.checked_div(&den).ok()
    })
}

fn int_matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, c), r)
            .prop_map(|rows| Matrix::from_rows(rows.iter().map(|row| common::ints(row)).collect()).unwrap())
    })
}

fn int_vectors(dim: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim).prop_map(|v| common::ints(&v)), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert!(((&a + &b) + &c - (&a + (&b + &c))).is_zero());
        prop_assert!((&a * &b - &b * &a).is_zero());
        prop_assert!(((&a * &b) * &c - &a * (&b * &c)).is_zero());
        prop_assert!((&a * (&b + &c) - (&a * &b + &a * &c)).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_display_parse_round_trip(a in scalar()) {
        let back: Scalar = a.to_string().parse().unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in scalar(), b in scalar(), vb in -5i64..=5, vc in -5i64..=5) {
        let bind: BTreeMap<String, Rational> =
            [("b".to_string(), Rational::from_integer(vb.into())), ("c".to_string(), Rational::from_integer(vc.into()))].into();
        let (Ok(sa), Ok(sb)) = (a.substitute(&bind), b.substitute(&bind)) else { return Ok(()) };
        if let Ok(prod) = (&a * &b).substitute(&bind) {
            prop_assert_eq!(prod, &sa * &sb);
        }
        if let Ok(sum) = (&a + &b).substitute(&bind) {
            prop_assert_eq!(sum, &sa + &sb);
        }
    }

    #[test]
    fn rank_nullity(m in int_matrix(5)) {
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        for v in k.basis_vectors() {
            prop_assert!(is_zero_vector(&m.apply(&v)));
        }
    }

    #[test]
    fn invert_gives_two_sided_inverse(m in int_matrix(4)) {
        match m.invert() {
            Ok(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            }
            Err(_) => prop_assert!(!m.is_square() || m.rank() < m.rows()),
        }
    }

    #[test]
    fn subspace_dimension_formula(u in int_vectors(4, 3), v in int_vectors(4, 3)) {
        let (u, v) = (Subspace::span(4, &u), Subspace::span(4, &v));
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(sum.contains(&u).unwrap() && u.contains(&meet).unwrap());
    }

    #[test]
    fn closure_operator_laws(seed_coords in int_vectors(4, 2), extra in int_vectors(4, 1)) {
        for obj in catalog_objects() {
            with_structure!(obj, |st| {
                let d = st.dim();
                let truncate = |vs: &[Vector]| -> Vec<Vector> { vs.iter().map(|v| v[..d].to_vec()).collect() };
                let small = Subspace::span(d, &truncate(&seed_coords));
                let mut both = truncate(&seed_coords);
                both.extend(truncate(&extra));
                let large = Subspace::span(d, &both);
                for kind in [ClosureKind::Lie, ClosureKind::Associative] {
                    let cs = ideal_closure(st, &small, kind, None).unwrap();
                    let cl = ideal_closure(st, &large, kind, None).unwrap();
                    prop_assert!(cs.contains(&small).unwrap(), "{}: not extensive", obj.label);
                    prop_assert_eq!(&ideal_closure(st, &cs, kind, None).unwrap(), &cs, "{}: not idempotent", obj.label);
                    prop_assert!(cl.contains(&cs).unwrap(), "{}: not monotone", obj.label);
                }
            });
        }
    }

    #[test]
    fn graded_braiding_is_an_involution(m_signs in prop::collection::vec(any::<bool>(), 1..=4),
                                        n_signs in prop::collection::vec(any::<bool>(), 1..=4)) {
        let h = Arc::new(group_algebra(vec!["e".into(), "g".into()], &cyclic_table(2), 0).unwrap());
        let half = s("1/2");
        let r = RMatrix::new(&h, Matrix::from_rows(vec![
            vec![half.clone(), half.clone()],
            vec![half.clone(), -half],
        ]).unwrap()).unwrap();
        let graded = |signs: &[bool]| {
            let diag: Vec<Scalar> = signs.iter().map(|&odd| Scalar::from_int(if odd { -1 } else { 1 })).collect();
            let names = (0..signs.len()).map(|i| format!("v{i}")).collect();
            HModule::new(h.clone(), names, vec![Matrix::identity(signs.len()), Matrix::diagonal(&diag)]).unwrap()
        };
        let (m, n) = (graded(&m_signs), graded(&n_signs));
        prop_assert!(braiding(&n, &m, &r).mul(&braiding(&m, &n, &r)).is_identity());
        prop_assert!(check_braiding_symmetry(&m, &r));
        // Super sign: tau(v⊗w) = (-1)^{|v||w|} w⊗v.
        let tau = braiding(&m, &n, &r);
        for (i, &mi) in m_signs.iter().enumerate() {
            for (j, &nj) in n_signs.iter().enumerate() {
                let sign = if mi && nj { -1 } else { 1 };
                prop_assert_eq!(tau.get(j * m_signs.len() + i, i * n_signs.len() + j), &Scalar::from_int(sign));
            }
        }
    }
}

#[test]
fn braiding_is_symmetric_on_triangular_catalog_instances() {
    let mut seen = 0;
    for obj in catalog_objects() {
        let inst = &obj.instance;
        if !is_triangular(&inst.hopf, &inst.rmatrix) {
            continue;
        }
        seen += 1;
        with_structure!(obj, |st| {
            let m = st.module();
            assert!(check_braiding_symmetry(m, &inst.rmatrix), "{}", obj.label);
            let mm = m.tensor(m).unwrap();
            assert!(check_braiding_symmetry(&mm, &inst.rmatrix), "{} (tensor square)", obj.label);
        });
    }
    assert!(seen >= 8, "only {seen} triangular catalog objects");
}

fn stable_under_maps(st: &impl TwistedStructure, t: &Subspace) -> bool {
    t.basis_vectors().iter().all(|v| {
        let mut images = vec![st.alpha().apply(v), st.beta().apply(v)];
        images.extend(st.module().actions().iter().map(|a| a.apply(v)));
        images.iter().all(|img| t.contains_vector(img))
    })
}

#[test]
fn series_terms_are_stable_across_the_catalog() {
    for obj in catalog_objects() {
        with_structure!(obj, |st| {
            let d = st.dim();
            let ds = derived_series(st, 16).unwrap();
            let lcs = lower_central_series(st, &Subspace::full(d), 16).unwrap();
            for (name, series) in [("derived", &ds), ("lower central", &lcs)] {
                for (k, t) in series.terms.iter().enumerate() {
                    assert!(stable_under_maps(st, t), "{}: {name} term {k}", obj.label);
                    if k > 0 {
                        assert!(series.terms[k - 1].contains(t).unwrap(), "{}: {name} not decreasing at {k}", obj.label);
                    }
                }
            }
            if let Structure::Lie(l) = &obj.structure {
                for t in &lcs.terms {
                    assert!(bihom::structure::is_h_bihom_lie_ideal(l, t).unwrap().holds, "{}: lcs term not an ideal", obj.label);
                }
            }
        });
    }
}

#[test]
fn commutator_satisfies_skew_and_jacobi_wherever_it_applies() {
    let mut built = 0;
    for obj in catalog_objects() {
        let Structure::Algebra(a) = &obj.structure else { continue };
        let Ok(l) = bihom::bihom::commutator_bracket(a, &obj.instance.rmatrix) else { continue };
        let report = bihom::bihom::check_generalized_bihom_lie(&l);
        assert!(report.passed(), "{}:\n{report}", obj.label);
        built += 1;
    }
    assert!(built >= 4, "only {built} commutators built");
}
