//! Finite Grassmann algebras and Grassmann envelopes.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{GradedAlgebra, GradedSubalgebra, Product, Term};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::scalar::{CycScalar, CyclotomicField};

pub const MAX_GENERATORS: usize = 12;

/// `(-1)^k` where `k` counts pairs `i in s`, `j in t` with `i > j`.
pub fn merge_sign(s: u32, t: u32) -> bool {
    let mut inversions = 0;
    let mut rest = s;
    while rest != 0 {
        let i = rest.trailing_zeros();
        inversions += (t & ((1u32 << i) - 1)).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

/// Grassmann algebra on `m` generators; basis element `S` (a bitmask) is
/// `e_{i_1} ... e_{i_k}` with `i_1 < ... < i_k`, graded by parity.
#[derive(Clone, Debug)]
pub struct GrassmannAlgebra {
    m: usize,
    group: GroupTable,
    field: Arc<CyclotomicField>,
}

impl GrassmannAlgebra {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 || m > MAX_GENERATORS {
            return Err(Error::OutOfRange(format!("generator count {m} not in 1..={MAX_GENERATORS}")));
        }
        Ok(GrassmannAlgebra {
            m,
            group: GroupTable::cyclic(2)?,
            field: CyclotomicField::new(2),
        })
    }

    pub fn generators(&self) -> usize {
        self.m
    }

    /// Basis index of the generator `e_i` (zero-based).
    pub fn generator(&self, i: usize) -> usize {
        1 << i
    }
}

impl GradedAlgebra for GrassmannAlgebra {
    fn grading(&self) -> &GroupTable {
        &self.group
    }
    fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }
    fn dim(&self) -> usize {
        1 << self.m
    }
    fn degree(&self, b: usize) -> usize {
        (b.count_ones() % 2) as usize
    }
    fn mul_basis(&self, a: usize, b: usize) -> Product {
        let (s, t) = (a as u32, b as u32);
        if s & t != 0 {
            return Product::Zero;
        }
        Product::Monomial(Term {
            exponent: merge_sign(s, t) as u32,
            index: (s | t) as usize,
        })
    }
}

/// The Grassmann envelope `A_0 (x) E_0 + A_1 (x) E_1` of an algebra graded
/// by `Z2 x G`, graded by `G`.
///
/// Basis element `(a, S)` has index `a * 2^(m-1) + rank(S)`, where `rank`
/// is the position of `S` among subsets of the same parity.
pub struct Envelope<'a, A: GradedAlgebra + ?Sized> {
    source: &'a A,
    group: GroupTable,
    m: usize,
    /// Subsets of each parity in increasing order.
    subsets: [Vec<u32>; 2],
    rank: Vec<usize>,
    degrees: Vec<usize>,
}

impl<'a, A: GradedAlgebra + ?Sized> Envelope<'a, A> {
    /// `g` is the second factor of the source's grading group `Z2 x g`.
    pub fn new(source: &'a A, g: &GroupTable, m: usize, cap: usize) -> Result<Self> {
        if m == 0 || m > MAX_GENERATORS {
            return Err(Error::OutOfRange(format!("generator count {m} not in 1..={MAX_GENERATORS}")));
        }
        let expected = GroupTable::direct_product(&GroupTable::cyclic(2)?, g)?;
        if source.grading().table() != expected.table() {
            return Err(Error::MissingZ2Factor);
        }
        let size = source.dim() << (m - 1);
        if size > cap {
            return Err(Error::BasisCap { size, cap });
        }
        let mut subsets = [Vec::new(), Vec::new()];
        let mut rank = vec![0; 1 << m];
        for s in 0..(1u32 << m) {
            let p = (s.count_ones() % 2) as usize;
            rank[s as usize] = subsets[p].len();
            subsets[p].push(s);
        }
        let half = 1usize << (m - 1);
        let n = g.order();
        let degrees = (0..size).map(|i| source.degree(i / half) % n).collect();
        Ok(Envelope {
            source,
            group: g.clone(),
            m,
            subsets,
            rank,
            degrees,
        })
    }

    pub fn generators(&self) -> usize {
        self.m
    }

    fn half(&self) -> usize {
        1 << (self.m - 1)
    }

    /// Parity of the `Z2` part of a source basis element.
    fn parity(&self, a: usize) -> usize {
        self.source.degree(a) / self.group.order()
    }

    pub fn index(&self, a: usize, s: u32) -> Option<usize> {
        if (s.count_ones() % 2) as usize != self.parity(a) {
            return None;
        }
        Some(a * self.half() + self.rank[s as usize])
    }

    pub fn decode(&self, i: usize) -> (usize, u32) {
        let a = i / self.half();
        (a, self.subsets[self.parity(a)][i % self.half()])
    }
}

impl<A: GradedAlgebra + ?Sized> GradedAlgebra for Envelope<'_, A> {
    fn grading(&self) -> &GroupTable {
        &self.group
    }
    fn field(&self) -> &Arc<CyclotomicField> {
        self.source.field()
    }
    fn dim(&self) -> usize {
        self.degrees.len()
    }
    fn degree(&self, b: usize) -> usize {
        self.degrees[b]
    }
    fn mul_basis(&self, x: usize, y: usize) -> Product {
        let (a, s) = self.decode(x);
        let (b, t) = self.decode(y);
        if s & t != 0 {
            return Product::Zero;
        }
        let u = s | t;
        let negative = merge_sign(s, t);
        let place = |c: usize| self.index(c, u).expect("parity is multiplicative");
        let modulus = self.field().modulus();
        match self.source.mul_basis(a, b) {
            Product::Zero => Product::Zero,
            Product::Monomial(p) if !negative || modulus % 2 == 0 => Product::Monomial(Term {
                exponent: (p.exponent + if negative { modulus / 2 } else { 0 }) % modulus,
                index: place(p.index),
            }),
            other => {
                let sign = CycScalar::from_int(self.field(), if negative { -1 } else { 1 });
                Product::Sum(
                    other
                        .into_terms(self.field())
                        .into_iter()
                        .map(|(c, v)| (place(c), &v * &sign))
                        .collect(),
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeComparison {
    /// Dimension of the envelope of `A_{Z2 x e}`.
    pub sub_envelope_dim: usize,
    /// Dimension of the identity component of the full envelope.
    pub identity_component_dim: usize,
    pub pairs_checked: usize,
    pub equal: bool,
}

/// Builds `(A_{Z2 x e})*` and `(A*)_e` independently and compares their
/// bases and structure constants inside `A*`.
pub fn check_envelope_e_component<A: GradedAlgebra + ?Sized>(
    a: &A,
    g: &GroupTable,
    m: usize,
    cap: usize,
) -> Result<EnvelopeComparison> {
    let full = Envelope::new(a, g, m, cap)?;
    let identity = GradedSubalgebra::new(&full, &Subgroup::trivial(g))?;

    let z2e = Subgroup::new(a.grading(), &[0, g.order()])?;
    let sub = GradedSubalgebra::new(a, &z2e)?;
    let trivial = GroupTable::cyclic(1)?;
    let sub_env = Envelope::new(&sub, &trivial, m, cap)?;

    // image of each basis element of (A_{Z2 x e})* in A*
    let image: Vec<usize> = (0..sub_env.dim())
        .map(|i| {
            let (b, s) = sub_env.decode(i);
            full.index(sub.embedding()[b], s).expect("parity agrees")
        })
        .collect();
    let mut lhs_set = image.clone();
    lhs_set.sort_unstable();
    let rhs_set: Vec<usize> = identity.embedding().to_vec();
    let mut equal = lhs_set == rhs_set;
    let mut pairs = 0;
    if equal {
        let to_full = |p: Product, map: &dyn Fn(usize) -> usize| -> Vec<(usize, CycScalar)> {
            let mut v: Vec<(usize, CycScalar)> =
                p.into_terms(full.field()).into_iter().map(|(c, x)| (map(c), x)).collect();
            v.sort_by_key(|(c, _)| *c);
            v
        };
        'outer: for i in 0..sub_env.dim() {
            for j in 0..sub_env.dim() {
                pairs += 1;
                let left = to_full(sub_env.mul_basis(i, j), &|c| image[c]);
                let li = identity.local_index(image[i]).unwrap();
                let lj = identity.local_index(image[j]).unwrap();
                let right = to_full(identity.mul_basis(li, lj), &|c| identity.embedding()[c]);
                if left != right {
                    equal = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(EnvelopeComparison {
        sub_envelope_dim: sub_env.dim(),
        identity_component_dim: identity.dim(),
        pairs_checked: pairs,
        equal,
    })
}
