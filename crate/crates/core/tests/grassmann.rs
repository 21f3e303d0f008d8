use gradedexp_core::algebra::{check_associativity, check_grading, GradedAlgebra, Product, TableAlgebra};
use gradedexp_core::cocycle::TwoCocycle;
use gradedexp_core::glued::{Edge, GluedAlgebra, DEFAULT_BASIS_CAP};
use gradedexp_core::grassmann::{check_envelope_e_component, merge_sign, Envelope, GrassmannAlgebra};
use gradedexp_core::group::{GroupTable, Subgroup};
use gradedexp_core::simple::GradedSimple;

/// Sign of sorting the concatenation of `s` and `t` by bubble sort.
fn bubble_sign(s: u32, t: u32) -> bool {
    let mut v: Vec<u32> = (0..32).filter(|i| s >> i & 1 == 1).collect();
    v.extend((0..32).filter(|i| t >> i & 1 == 1));
    let mut swaps = 0;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                swaps += 1;
            }
        }
    }
    swaps % 2 == 1
}

fn signed(p: Product) -> Option<(bool, usize)> {
    match p {
        Product::Zero => None,
        Product::Monomial(t) => Some((t.exponent == 1, t.index)),
        Product::Sum(_) => panic!("grassmann products are monomials"),
    }
}

#[test]
fn merge_sign_matches_bubble_sort() {
    for s in 0u32..64 {
        for t in 0u32..64 {
            if s & t == 0 {
                assert_eq!(merge_sign(s, t), bubble_sign(s, t), "{s:b} {t:b}");
            }
        }
    }
}

#[test]
fn supercommutative_up_to_six_generators() {
    for m in 1..=6 {
        let e = GrassmannAlgebra::new(m).unwrap();
        check_grading(&e).unwrap();
        for x in 0..e.dim() {
            for y in 0..e.dim() {
                let xy = signed(e.mul_basis(x, y));
                let yx = signed(e.mul_basis(y, x));
                let odd = e.degree(x) * e.degree(y) == 1;
                match (xy, yx) {
                    (None, None) => {}
                    (Some((a, i)), Some((b, j))) => {
                        assert_eq!(i, j);
                        assert_eq!(a ^ b, odd, "m={m} {x:b} {y:b}");
                    }
                    _ => panic!("one-sided zero"),
                }
            }
        }
    }
    check_associativity(&GrassmannAlgebra::new(4).unwrap()).unwrap();
}

#[test]
fn three_generator_examples() {
    let e = GrassmannAlgebra::new(3).unwrap();
    let (e1, e2, e3) = (e.generator(0), e.generator(1), e.generator(2));
    // e1 e2 = e_{12}, e2 e1 = -e_{12}
    assert_eq!(signed(e.mul_basis(e1, e2)), Some((false, e1 | e2)));
    assert_eq!(signed(e.mul_basis(e2, e1)), Some((true, e1 | e2)));
    // even elements are central
    let e12 = e1 | e2;
    assert_eq!(signed(e.mul_basis(e12, e3)), signed(e.mul_basis(e3, e12)));
    // e3 e1 e2 ... e1 e3 = -e_{13}
    assert_eq!(signed(e.mul_basis(e3, e1)), Some((true, e1 | e3)));
    assert_eq!(signed(e.mul_basis(e1, e1)), None);
}

fn z2xg_algebra(g: &GroupTable) -> GluedAlgebra {
    let big = GroupTable::direct_product(&GroupTable::cyclic(2).unwrap(), g).unwrap();
    let n = g.order();
    let h = Subgroup::new(&big, &[0, n]).unwrap();
    let f = TwoCocycle::trivial(&h, 2).unwrap();
    let b = GradedSimple::new(&big, &h, &f, &[0, 1.min(n - 1) + n]).unwrap();
    let c = GradedSimple::new(&big, &Subgroup::trivial(&big), &TwoCocycle::trivial(&Subgroup::trivial(&big), 2).unwrap(), &[0]).unwrap();
    GluedAlgebra::new(&big, &[b, c], &[Edge { from: 0, to: 1, degree: n }], 2, DEFAULT_BASIS_CAP).unwrap()
}

#[test]
fn envelope_is_a_graded_algebra() {
    for g in [GroupTable::cyclic(1).unwrap(), GroupTable::cyclic(2).unwrap(), GroupTable::catalog("S3").unwrap()] {
        let a = z2xg_algebra(&g);
        for m in 1..=3 {
            let env = Envelope::new(&a, &g, m, 100_000).unwrap();
            assert_eq!(env.dim(), a.dim() << (m - 1));
            check_grading(&env).unwrap();
            let t = TableAlgebra::from_algebra(&env);
            check_associativity(&t).unwrap();
            for i in 0..env.dim() {
                let (x, s) = env.decode(i);
                assert_eq!(env.index(x, s), Some(i));
            }
        }
    }
}

#[test]
fn envelope_identity_component_matches() {
    for g in [GroupTable::cyclic(2).unwrap(), GroupTable::catalog("V4").unwrap()] {
        let a = z2xg_algebra(&g);
        for m in 1..=3 {
            let c = check_envelope_e_component(&a, &g, m, 100_000).unwrap();
            assert!(c.equal, "{c:?}");
            assert_eq!(c.sub_envelope_dim, c.identity_component_dim);
        }
    }
}

#[test]
fn envelope_of_trivial_g_is_concentrated_in_degree_zero() {
    let g = GroupTable::cyclic(1).unwrap();
    let a = z2xg_algebra(&g);
    let env = Envelope::new(&a, &g, 3, 100_000).unwrap();
    assert!((0..env.dim()).all(|i| env.degree(i) == 0));
}

#[test]
fn envelope_rejects_bad_input() {
    let g = GroupTable::cyclic(3).unwrap();
    let a = z2xg_algebra(&GroupTable::cyclic(2).unwrap());
    assert!(Envelope::new(&a, &g, 2, 100_000).is_err());
    let g2 = GroupTable::cyclic(2).unwrap();
    assert!(Envelope::new(&a, &g2, 0, 100_000).is_err());
    assert!(Envelope::new(&a, &g2, 4, 4).is_err());
}
