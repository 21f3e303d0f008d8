//! Graded-simple algebras `F^f H (x) M_r(F)`.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::algebra::{check_grading, GradedAlgebra, Product, Term};
use crate::cocycle::{CocycleCheck, TwoCocycle};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::scalar::CyclotomicField;

/// The algebra `F^f H (x) M_r(F)` with basis `u_h (x) e_{i,j}` of degree
/// `g_i^-1 h g_j`.
///
/// Basis index of `u_h (x) e_{i,j}` is `(i * r + j) * |H| + pos(h)` with
/// zero-based `i`, `j`.
#[derive(Clone, Debug)]
pub struct GradedSimple {
    group: GroupTable,
    h: Subgroup,
    cocycle: TwoCocycle,
    tuple: Vec<usize>,
    field: Arc<CyclotomicField>,
    degrees: Vec<usize>,
}

/// Decoded basis element `u_h (x) e_{row,col}` (zero-based row and column).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimpleBasis {
    pub h: usize,
    pub row: usize,
    pub col: usize,
}

/// `lcm(2, n)`: the smallest root-of-unity order containing both `-1` and
/// the cocycle values.
pub fn unit_modulus(n: u32) -> u32 {
    n.lcm(&2)
}

impl GradedSimple {
    pub fn new(group: &GroupTable, h: &Subgroup, cocycle: &TwoCocycle, tuple: &[usize]) -> Result<Self> {
        Self::with_field(group, h, cocycle, tuple, CyclotomicField::new(unit_modulus(cocycle.modulus())))
    }

    /// Builds the algebra over a larger cyclotomic field; the field's
    /// modulus must be a multiple of the cocycle modulus.
    pub fn with_field(
        group: &GroupTable,
        h: &Subgroup,
        cocycle: &TwoCocycle,
        tuple: &[usize],
        field: Arc<CyclotomicField>,
    ) -> Result<Self> {
        if tuple.is_empty() {
            return Err(Error::EmptyTuple);
        }
        for &g in tuple {
            group.check_index(g)?;
        }
        if h.parent_order() != group.order() {
            return Err(Error::NotSubgroup("subgroup belongs to another group".into()));
        }
        if cocycle.subgroup() != h {
            return Err(Error::InvalidCocycle("cocycle is defined on a different subgroup".into()));
        }
        match cocycle.verify(group) {
            CocycleCheck::Valid => {}
            CocycleCheck::NotNormalized { element } => {
                return Err(Error::InvalidCocycle(format!("not normalized at element {element}")))
            }
            CocycleCheck::IdentityFails { a, b, c } => {
                return Err(Error::InvalidCocycle(format!(
                    "cocycle identity fails at ({a}, {b}, {c})"
                )))
            }
        }
        if field.modulus() % cocycle.modulus() != 0 {
            return Err(Error::InvalidCocycle(format!(
                "field modulus {} is not a multiple of cocycle modulus {}",
                field.modulus(),
                cocycle.modulus()
            )));
        }
        let r = tuple.len();
        let mut degrees = Vec::with_capacity(h.len() * r * r);
        for i in 0..r {
            for j in 0..r {
                for &x in h.elements() {
                    degrees.push(group.product([group.inv(tuple[i]), x, tuple[j]]));
                }
            }
        }
        let b = GradedSimple {
            group: group.clone(),
            h: h.clone(),
            cocycle: cocycle.clone(),
            tuple: tuple.to_vec(),
            field,
            degrees,
        };
        check_grading(&b)?;
        Ok(b)
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.h
    }

    pub fn cocycle(&self) -> &TwoCocycle {
        &self.cocycle
    }

    pub fn tuple(&self) -> &[usize] {
        &self.tuple
    }

    /// Matrix size `r`.
    pub fn size(&self) -> usize {
        self.tuple.len()
    }

    pub fn index(&self, h: usize, row: usize, col: usize) -> Option<usize> {
        let r = self.size();
        if row >= r || col >= r {
            return None;
        }
        let p = self.h.position(h)?;
        Some((row * r + col) * self.h.len() + p)
    }

    pub fn decode(&self, b: usize) -> SimpleBasis {
        let n = self.h.len();
        let r = self.size();
        let cell = b / n;
        SimpleBasis {
            h: self.h.elements()[b % n],
            row: cell / r,
            col: cell % r,
        }
    }

    /// `u_e (x) e_{i,i}`.
    pub fn idempotent(&self, i: usize) -> usize {
        self.index(0, i, i).expect("row out of range")
    }

    /// Product in the cocycle's own exponent units: `(c(h,h'), index)`.
    pub fn mul_local(&self, a: usize, b: usize) -> Option<(u32, usize)> {
        let n = self.h.len();
        let r = self.size();
        let (ca, pa) = (a / n, a % n);
        let (cb, pb) = (b / n, b % n);
        let (i, j) = (ca / r, ca % r);
        let (k, l) = (cb / r, cb % r);
        if j != k {
            return None;
        }
        let x = self.h.elements()[pa];
        let y = self.h.elements()[pb];
        let p = self.h.position(self.group.mul(x, y)).expect("subgroup is closed");
        Some((self.cocycle.value_at(pa, pb), (i * r + l) * n + p))
    }
}

impl GradedAlgebra for GradedSimple {
    fn grading(&self) -> &GroupTable {
        &self.group
    }
    fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }
    fn dim(&self) -> usize {
        self.degrees.len()
    }
    fn degree(&self, b: usize) -> usize {
        self.degrees[b]
    }
    fn mul_basis(&self, a: usize, b: usize) -> Product {
        match self.mul_local(a, b) {
            None => Product::Zero,
            Some((e, index)) => Product::Monomial(Term {
                exponent: e * (self.field.modulus() / self.cocycle.modulus()),
                index,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_associativity;

    fn z4_example() -> GradedSimple {
        let g = GroupTable::cyclic(4).unwrap();
        let h = Subgroup::new(&g, &[0, 2]).unwrap();
        let f = TwoCocycle::trivial(&h, 2).unwrap();
        GradedSimple::new(&g, &h, &f, &[0, 1]).unwrap()
    }

    #[test]
    fn z4_example_degrees() {
        let b = z4_example();
        assert_eq!(b.dim(), 8);
        let x = b.index(2, 0, 1).unwrap();
        assert_eq!(b.degree(x), 3);
        assert_eq!(b.homogeneous_component(3).len(), 2);
        check_associativity(&b).unwrap();
    }

    #[test]
    fn matrix_units_multiply() {
        let b = z4_example();
        let e11 = b.idempotent(0);
        assert_eq!(b.mul_basis(e11, e11), Product::Monomial(Term { exponent: 0, index: e11 }));
        let x = b.index(2, 0, 1).unwrap();
        let y = b.index(0, 0, 1).unwrap();
        assert_eq!(b.mul_basis(x, y), Product::Zero);
    }

    #[test]
    fn klein_twist_anticommutes() {
        let g = GroupTable::catalog("Z2xZ2").unwrap();
        let h = Subgroup::whole(&g);
        let f = TwoCocycle::klein_nontrivial(&g, &h).unwrap();
        let b = GradedSimple::new(&g, &h, &f, &[0]).unwrap();
        check_associativity(&b).unwrap();
        let (x, y) = (b.index(1, 0, 0).unwrap(), b.index(2, 0, 0).unwrap());
        let xy = b.mul_basis(x, y).monomial().unwrap();
        let yx = b.mul_basis(y, x).monomial().unwrap();
        assert_eq!(xy.index, yx.index);
        assert_eq!((xy.exponent + 1) % 2, yx.exponent % 2);
    }

    #[test]
    fn empty_tuple_rejected() {
        let g = GroupTable::cyclic(2).unwrap();
        let h = Subgroup::trivial(&g);
        let f = TwoCocycle::trivial(&h, 2).unwrap();
        assert_eq!(GradedSimple::new(&g, &h, &f, &[]).unwrap_err(), Error::EmptyTuple);
    }
}
