use gradedexp_core::cocycle::{CocycleCheck, TwoCocycle};
use gradedexp_core::group::{GroupTable, Subgroup};
use proptest::prelude::*;

#[test]
fn klein_class_anticommutes() {
    let g = GroupTable::catalog("V4").unwrap();
    let h = Subgroup::whole(&g);
    let f = TwoCocycle::klein_nontrivial(&g, &h).unwrap();
    assert_eq!(f.verify(&g), CocycleCheck::Valid);
    // u_a u_b = f(a,b) u_ab and u_b u_a = f(b,a) u_ab differ by -1
    let (a, b) = (h.elements()[1], h.elements()[2]);
    assert_eq!((f.value(a, b).unwrap() + 2 - f.value(b, a).unwrap()) % 2, 1);
}

#[test]
fn klein_needs_a_klein_group() {
    let g = GroupTable::cyclic(4).unwrap();
    assert!(TwoCocycle::klein_nontrivial(&g, &Subgroup::whole(&g)).is_err());
}

#[test]
fn broken_tables_are_rejected() {
    let g = GroupTable::cyclic(2).unwrap();
    let h = Subgroup::whole(&g);
    assert!(TwoCocycle::from_table(&g, &h, 2, vec![1, 0, 0, 0]).is_err());
    assert!(TwoCocycle::from_table(&g, &h, 2, vec![0, 0, 0, 1]).is_ok());
    assert!(TwoCocycle::from_table(&g, &h, 2, vec![0, 0, 0]).is_err());
}

proptest! {
    #[test]
    fn coboundaries_are_cocycles(values in proptest::collection::vec(0u32..6, 8), x in 0usize..8) {
        let g = GroupTable::catalog("D4").unwrap();
        let h = Subgroup::whole(&g);
        let mut v = values.clone();
        v[0] = 0;
        let f = TwoCocycle::coboundary(&g, &h, 6, &v).unwrap();
        prop_assert_eq!(f.verify(&g), CocycleCheck::Valid);
        let c = f.conjugate(&g, x).unwrap();
        prop_assert_eq!(c.verify(&g), CocycleCheck::Valid);
        let k = Subgroup::new(&g, &[0, 2]).unwrap();
        let r = c.restrict(&k.intersection(c.subgroup())).unwrap();
        prop_assert_eq!(r.verify(&g), CocycleCheck::Valid);
    }
}
