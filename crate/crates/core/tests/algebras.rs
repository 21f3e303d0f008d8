use std::collections::BTreeSet;

use gradedexp_core::algebra::{check_associativity, check_grading, AlgebraElement, GradedAlgebra, GradedSubalgebra};
use gradedexp_core::cocycle::TwoCocycle;
use gradedexp_core::glued::{Edge, GluedAlgebra, DEFAULT_BASIS_CAP};
use gradedexp_core::group::{GroupTable, Subgroup};
use gradedexp_core::scalar::{CycScalar, CyclotomicField};
use gradedexp_core::simple::GradedSimple;
use gradedexp_core::Error;
use proptest::prelude::*;

fn simple(g: &GroupTable, h: &[usize], tuple: &[usize]) -> GradedSimple {
    let h = Subgroup::new(g, h).unwrap();
    GradedSimple::new(g, &h, &TwoCocycle::trivial(&h, 2).unwrap(), tuple).unwrap()
}

#[test]
fn zeta_has_the_right_order() {
    for n in [1u32, 2, 3, 4, 6, 8, 12] {
        let f = CyclotomicField::new(n);
        assert!(CycScalar::zeta_pow(&f, n).is_one());
        for k in 1..n {
            assert!(!CycScalar::zeta_pow(&f, k).is_one(), "zeta_{n}^{k}");
        }
    }
}

proptest! {
    #[test]
    fn field_axioms(a in -5i64..5, b in -5i64..5, i in 0u32..12, j in 0u32..12) {
        let f = CyclotomicField::new(12);
        let x = &CycScalar::from_int(&f, a) + &CycScalar::zeta_pow(&f, i);
        let y = &CycScalar::from_int(&f, b) - &CycScalar::zeta_pow(&f, j);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &x, &(&x * &x) + &(&y * &x));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }
}

#[test]
fn simple_dimension_and_invariants() {
    let g = GroupTable::catalog("D4").unwrap();
    for h in g.all_subgroups() {
        for tuple in [vec![0], vec![1, 3], vec![0, 5, 2]] {
            let b = GradedSimple::new(&g, &h, &TwoCocycle::trivial(&h, 2).unwrap(), &tuple).unwrap();
            assert_eq!(b.dim(), h.len() * tuple.len() * tuple.len());
            check_grading(&b).unwrap();
            check_associativity(&b).unwrap();
        }
    }
}

#[test]
fn empty_tuple_is_rejected() {
    let g = GroupTable::cyclic(2).unwrap();
    let h = Subgroup::trivial(&g);
    assert!(matches!(
        GradedSimple::new(&g, &h, &TwoCocycle::trivial(&h, 2).unwrap(), &[]),
        Err(Error::EmptyTuple)
    ));
}

/// Every nonzero basis element generates the whole algebra as a two-sided
/// ideal: `e_{k,i} b e_{j,l}` reaches every matrix cell and every unit.
#[test]
fn graded_simplicity_spot_check() {
    let g = GroupTable::catalog("V4").unwrap();
    let h = Subgroup::whole(&g);
    let b = GradedSimple::new(&g, &h, &TwoCocycle::klein_nontrivial(&g, &h).unwrap(), &[0, 1]).unwrap();
    for x in 0..b.dim() {
        let mut reached = BTreeSet::new();
        for l in 0..b.dim() {
            for r in 0..b.dim() {
                if let Some((_, y)) = b.mul_local(l, x).and_then(|(_, lx)| b.mul_local(lx, r)) {
                    reached.insert(y);
                }
            }
        }
        assert_eq!(reached.len(), b.dim());
    }
}

#[test]
fn upper_triangular_glue() {
    let g = GroupTable::cyclic(2).unwrap();
    let m1 = simple(&g, &[0], &[0]);
    let a = GluedAlgebra::new(&g, &[m1.clone(), m1], &[Edge { from: 0, to: 1, degree: 1 }], 2, DEFAULT_BASIS_CAP).unwrap();
    assert_eq!(a.dim(), 3);
    assert_eq!(a.semisimple_dim(), 2);
    let v = a.radical_basis()[0];
    assert_eq!(a.degree(v), 1);
    // e_0 v e_1 = v, v e_0 = 0, v^2 = 0
    let e0 = a.semisimple_index(0, 0);
    let e1 = a.semisimple_index(1, 0);
    let el = |i| AlgebraElement::basis(&a, i);
    assert_eq!(el(e0).multiply(&el(v)).unwrap().multiply(&el(e1)).unwrap().terms().len(), 1);
    assert!(el(v).multiply(&el(e0)).unwrap().is_zero());
    assert!(el(v).multiply(&el(v)).unwrap().is_zero());
}

#[test]
fn truncation_bounds_path_length() {
    let g = GroupTable::cyclic(3).unwrap();
    let b = simple(&g, &[0], &[0, 1]);
    let loops = [Edge { from: 0, to: 0, degree: 1 }];
    for n in 1..=3 {
        let a = GluedAlgebra::new(&g, &[b.clone()], &loops, n, DEFAULT_BASIS_CAP).unwrap();
        // walks of length l contribute 4^(l+1) basis elements
        let expected: usize = (0..n).map(|l| 4usize.pow(l as u32 + 1)).sum();
        assert_eq!(a.dim(), expected);
        assert!(a.walks().iter().all(|w| w.len() < n));
    }
}

#[test]
fn cap_and_bad_edges() {
    let g = GroupTable::cyclic(2).unwrap();
    let b = simple(&g, &[0, 1], &[0, 1, 0]);
    let e = [Edge { from: 0, to: 0, degree: 0 }];
    assert!(matches!(GluedAlgebra::new(&g, &[b.clone()], &e, 3, 500), Err(Error::BasisCap { .. })));
    let bad = [Edge { from: 0, to: 3, degree: 0 }];
    assert!(matches!(GluedAlgebra::new(&g, &[b], &bad, 2, 500), Err(Error::InvalidEdge { .. })));
}

#[test]
fn subgroup_component_is_closed() {
    let g = GroupTable::catalog("Z2xZ4").unwrap();
    let b = simple(&g, &[0, 2], &[0, 1, 5]);
    let a = GluedAlgebra::new(&g, &[b], &[Edge { from: 0, to: 0, degree: 3 }], 2, DEFAULT_BASIS_CAP).unwrap();
    for k in g.all_subgroups() {
        let sub = GradedSubalgebra::new(&a, &k).unwrap();
        check_grading(&sub).unwrap();
        let brute = (0..a.dim()).filter(|&x| k.contains(a.degree(x))).count();
        assert_eq!(sub.dim(), brute);
    }
}

#[test]
fn elements_of_different_algebras_do_not_mix() {
    let g = GroupTable::cyclic(1).unwrap();
    let a = simple(&g, &[0], &[0]);
    let b = simple(&g, &[0], &[0]);
    let x = AlgebraElement::basis(&a, 0);
    let y = AlgebraElement::basis(&b, 0);
    assert!(matches!(x.multiply(&y), Err(Error::AlgebraMismatch)));
}

#[test]
fn radical_is_nilpotent_of_truncation_index() {
    let g = GroupTable::cyclic(2).unwrap();
    let b = simple(&g, &[0], &[0, 1]);
    let edges = [Edge { from: 0, to: 0, degree: 1 }];
    for n in 1..=3 {
        let a = GluedAlgebra::new(&g, &[b.clone()], &edges, n, DEFAULT_BASIS_CAP).unwrap();
        a.check_nilpotent().unwrap();
        a.verify().unwrap();
    }
}
