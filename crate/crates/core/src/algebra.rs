//! Structure-constant algebras graded by a finite group.
//!
//! Every algebra in this crate exposes a basis of homogeneous elements and a
//! way to multiply two basis elements. Most of them are monomial: a product
//! of basis elements is zero or a root of unity times a basis element.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand_core::RngCore;
use rand_xoshiro::SplitMix64;
use rand_core::SeedableRng;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::scalar::{CycScalar, CyclotomicField};

/// `zeta^exponent * b_index`, with `zeta` the generator of the algebra's
/// scalar field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub exponent: u32,
    pub index: usize,
}

/// Product of two basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Product {
    Zero,
    Monomial(Term),
    Sum(Vec<(usize, CycScalar)>),
}

impl Product {
    pub fn is_zero(&self) -> bool {
        match self {
            Product::Zero => true,
            Product::Monomial(_) => false,
            Product::Sum(v) => v.iter().all(|(_, c)| c.is_zero()),
        }
    }

    /// The monomial term, if this product is one.
    pub fn monomial(&self) -> Option<Term> {
        match self {
            Product::Monomial(t) => Some(*t),
            _ => None,
        }
    }

    pub fn into_terms(self, field: &Arc<CyclotomicField>) -> Vec<(usize, CycScalar)> {
        match self {
            Product::Zero => Vec::new(),
            Product::Monomial(t) => vec![(t.index, CycScalar::zeta_pow(field, t.exponent))],
            Product::Sum(v) => v.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

/// A finite-dimensional algebra with a homogeneous basis.
pub trait GradedAlgebra {
    fn grading(&self) -> &GroupTable;
    /// Scalar field `Q(zeta_m)`; monomial exponents refer to its `zeta`.
    fn field(&self) -> &Arc<CyclotomicField>;
    fn dim(&self) -> usize;
    fn degree(&self, b: usize) -> usize;
    fn mul_basis(&self, a: usize, b: usize) -> Product;

    /// Basis elements of degree `g`.
    fn homogeneous_component(&self, g: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.degree(b) == g).collect()
    }
}

impl<T: GradedAlgebra + ?Sized> GradedAlgebra for &T {
    fn grading(&self) -> &GroupTable {
        (**self).grading()
    }
    fn field(&self) -> &Arc<CyclotomicField> {
        (**self).field()
    }
    fn dim(&self) -> usize {
        (**self).dim()
    }
    fn degree(&self, b: usize) -> usize {
        (**self).degree(b)
    }
    fn mul_basis(&self, a: usize, b: usize) -> Product {
        (**self).mul_basis(a, b)
    }
}

/// Multiplies two monomials `zeta^e1 b1` and `zeta^e2 b2`.
pub fn mul_terms<A: GradedAlgebra + ?Sized>(alg: &A, x: Term, y: Term) -> Option<Term> {
    let m = alg.field().modulus();
    match alg.mul_basis(x.index, y.index) {
        Product::Zero => None,
        Product::Monomial(t) => Some(Term {
            exponent: (t.exponent + x.exponent + y.exponent) % m,
            index: t.index,
        }),
        Product::Sum(_) => panic!("mul_terms called on a non-monomial product"),
    }
}

/// Left-to-right product of a sequence of monomials.
pub fn mul_chain<A: GradedAlgebra + ?Sized>(alg: &A, factors: &[Term]) -> Option<Term> {
    let (first, rest) = factors.split_first()?;
    rest.iter().try_fold(*first, |acc, &f| mul_terms(alg, acc, f))
}

/// A sparse element of a specific algebra.
pub struct AlgebraElement<'a, A: GradedAlgebra + ?Sized> {
    algebra: &'a A,
    terms: BTreeMap<usize, CycScalar>,
}

impl<A: GradedAlgebra + ?Sized> Clone for AlgebraElement<'_, A> {
    fn clone(&self) -> Self {
        AlgebraElement {
            algebra: self.algebra,
            terms: self.terms.clone(),
        }
    }
}

impl<A: GradedAlgebra + ?Sized> core::fmt::Debug for AlgebraElement<'_, A> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<'a, A: GradedAlgebra + ?Sized> AlgebraElement<'a, A> {
    pub fn zero(algebra: &'a A) -> Self {
        AlgebraElement {
            algebra,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(algebra: &'a A, b: usize) -> Self {
        let mut e = Self::zero(algebra);
        e.terms.insert(b, CycScalar::one(algebra.field()));
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, CycScalar)>>(algebra: &'a A, terms: I) -> Self {
        let mut e = Self::zero(algebra);
        for (b, c) in terms {
            e.add_term(b, c);
        }
        e
    }

    pub fn from_term(algebra: &'a A, t: Term) -> Self {
        Self::from_terms(algebra, [(t.index, CycScalar::zeta_pow(algebra.field(), t.exponent))])
    }

    fn add_term(&mut self, b: usize, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&b) {
            None => {
                self.terms.insert(b, c);
            }
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.terms.insert(b, s);
                }
            }
        }
    }

    pub fn algebra(&self) -> &'a A {
        self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<usize, CycScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if core::ptr::eq(
            self.algebra as *const A as *const u8,
            other.algebra as *const A as *const u8,
        ) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (&b, c) in &other.terms {
            out.add_term(b, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        Self::from_terms(self.algebra, self.terms.iter().map(|(&b, x)| (b, x * c)))
    }

    /// Bilinear extension of the basis multiplication.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let alg = self.algebra;
        let mut out = Self::zero(alg);
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                let xy = x * y;
                for (c, s) in alg.mul_basis(a, b).into_terms(alg.field()) {
                    out.add_term(c, &xy * &s);
                }
            }
        }
        Ok(out)
    }

    /// The common degree of all terms, if the element is nonzero and
    /// homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|&b| self.algebra.degree(b));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

/// Exhaustive pair checks up to this dimension, sampling above it.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 1500;
/// Exhaustive triple checks up to this dimension, sampling above it.
pub const EXHAUSTIVE_TRIPLE_LIMIT: usize = 64;
/// Number of sampled pairs or triples when not exhaustive.
pub const SAMPLE_COUNT: usize = 10_000;

fn sample_indices(rng: &mut SplitMix64, n: usize, k: usize) -> Vec<usize> {
    (0..k).map(|_| (rng.next_u64() % n as u64) as usize).collect()
}

/// `deg(xy) = deg(x) deg(y)` for every nonzero product of basis elements.
pub fn check_grading<A: GradedAlgebra + ?Sized>(alg: &A) -> Result<()> {
    let n = alg.dim();
    let check = |a: usize, b: usize| -> Result<()> {
        let want = alg.grading().mul(alg.degree(a), alg.degree(b));
        for (c, _) in alg.mul_basis(a, b).into_terms(alg.field()) {
            if alg.degree(c) != want {
                return Err(Error::Invariant(format!(
                    "grading violated: b{a} * b{b} has a term b{c} of degree {} instead of {want}",
                    alg.degree(c)
                )));
            }
        }
        Ok(())
    };
    if n <= EXHAUSTIVE_PAIR_LIMIT {
        for a in 0..n {
            for b in 0..n {
                check(a, b)?;
            }
        }
    } else {
        let mut rng = SplitMix64::seed_from_u64(0x6772_6164);
        for _ in 0..SAMPLE_COUNT {
            let s = sample_indices(&mut rng, n, 2);
            check(s[0], s[1])?;
        }
    }
    Ok(())
}

/// `(xy)z = x(yz)` on basis triples.
pub fn check_associativity<A: GradedAlgebra + ?Sized>(alg: &A) -> Result<()> {
    let n = alg.dim();
    let check = |a: usize, b: usize, c: usize| -> Result<()> {
        let x = AlgebraElement::basis(alg, a);
        let y = AlgebraElement::basis(alg, b);
        let z = AlgebraElement::basis(alg, c);
        let left = x.multiply(&y)?.multiply(&z)?;
        let right = x.multiply(&y.multiply(&z)?)?;
        if left.terms() != right.terms() {
            return Err(Error::Invariant(format!("not associative at (b{a}, b{b}, b{c})")));
        }
        Ok(())
    };
    if n <= EXHAUSTIVE_TRIPLE_LIMIT {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    check(a, b, c)?;
                }
            }
        }
    } else {
        let mut rng = SplitMix64::seed_from_u64(0x6173_736f);
        for _ in 0..SAMPLE_COUNT {
            let s = sample_indices(&mut rng, n, 3);
            check(s[0], s[1], s[2])?;
        }
    }
    Ok(())
}

/// Algebra given by an explicit table of basis products.
#[derive(Clone, Debug)]
pub struct TableAlgebra {
    group: GroupTable,
    field: Arc<CyclotomicField>,
    degrees: Vec<usize>,
    table: Vec<Product>,
}

impl TableAlgebra {
    /// `table[a * dim + b]` is the product of basis elements `a` and `b`.
    pub fn new(
        group: GroupTable,
        field: Arc<CyclotomicField>,
        degrees: Vec<usize>,
        table: Vec<Product>,
    ) -> Result<Self> {
        let n = degrees.len();
        if table.len() != n * n {
            return Err(Error::Invariant(format!(
                "product table has {} entries, expected {}",
                table.len(),
                n * n
            )));
        }
        for &d in &degrees {
            group.check_index(d)?;
        }
        Ok(TableAlgebra {
            group,
            field,
            degrees,
            table,
        })
    }

    /// Copies the multiplication of another algebra into a table.
    pub fn from_algebra<A: GradedAlgebra + ?Sized>(alg: &A) -> Self {
        let n = alg.dim();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(alg.mul_basis(a, b));
            }
        }
        TableAlgebra {
            group: alg.grading().clone(),
            field: alg.field().clone(),
            degrees: (0..n).map(|b| alg.degree(b)).collect(),
            table,
        }
    }

    /// Same algebra with the basis relabelled: new basis element `i` is old
    /// basis element `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.dim();
        let mut inverse = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let relabel = |p: &Product| -> Product {
            match p {
                Product::Zero => Product::Zero,
                Product::Monomial(t) => Product::Monomial(Term {
                    exponent: t.exponent,
                    index: inverse[t.index],
                }),
                Product::Sum(v) => Product::Sum(v.iter().map(|(b, c)| (inverse[*b], c.clone())).collect()),
            }
        };
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(relabel(&self.table[perm[a] * n + perm[b]]));
            }
        }
        TableAlgebra {
            group: self.group.clone(),
            field: self.field.clone(),
            degrees: perm.iter().map(|&p| self.degrees[p]).collect(),
            table,
        }
    }
}

impl GradedAlgebra for TableAlgebra {
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
        self.table[a * self.degrees.len() + b].clone()
    }
}

/// The span of the homogeneous components with degree in a subgroup `K`,
/// viewed as a `K`-graded algebra.
pub struct GradedSubalgebra<'a, A: GradedAlgebra + ?Sized> {
    parent: &'a A,
    group: GroupTable,
    subgroup: Subgroup,
    embedding: Vec<usize>,
    back: Vec<usize>,
    degrees: Vec<usize>,
}

impl<'a, A: GradedAlgebra + ?Sized> GradedSubalgebra<'a, A> {
    pub fn new(parent: &'a A, k: &Subgroup) -> Result<Self> {
        let (group, _) = k.as_group(parent.grading())?;
        let mut back = vec![usize::MAX; parent.dim()];
        let mut embedding = Vec::new();
        let mut degrees = Vec::new();
        for b in 0..parent.dim() {
            if let Some(p) = k.position(parent.degree(b)) {
                back[b] = embedding.len();
                embedding.push(b);
                degrees.push(p);
            }
        }
        Ok(GradedSubalgebra {
            parent,
            group,
            subgroup: k.clone(),
            embedding,
            back,
            degrees,
        })
    }

    pub fn parent(&self) -> &'a A {
        self.parent
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Parent basis index of each sub-basis element.
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    /// Sub-basis index of a parent basis element, if it lies in the span.
    pub fn local_index(&self, parent_index: usize) -> Option<usize> {
        match self.back[parent_index] {
            usize::MAX => None,
            i => Some(i),
        }
    }
}

impl<A: GradedAlgebra + ?Sized> GradedAlgebra for GradedSubalgebra<'_, A> {
    fn grading(&self) -> &GroupTable {
        &self.group
    }
    fn field(&self) -> &Arc<CyclotomicField> {
        self.parent.field()
    }
    fn dim(&self) -> usize {
        self.embedding.len()
    }
    fn degree(&self, b: usize) -> usize {
        self.degrees[b]
    }
    fn mul_basis(&self, a: usize, b: usize) -> Product {
        let map = |i: usize| -> usize {
            let j = self.back[i];
            assert!(j != usize::MAX, "subgroup component is not closed under multiplication");
            j
        };
        match self.parent.mul_basis(self.embedding[a], self.embedding[b]) {
            Product::Zero => Product::Zero,
            Product::Monomial(t) => Product::Monomial(Term {
                exponent: t.exponent,
                index: map(t.index),
            }),
            Product::Sum(v) => Product::Sum(v.into_iter().map(|(i, c)| (map(i), c)).collect()),
        }
    }
}

/// The same algebra graded by `G/N` through the quotient projection.
pub struct Regraded<'a, A: GradedAlgebra + ?Sized> {
    parent: &'a A,
    quotient: GroupTable,
    projection: Vec<usize>,
}

impl<'a, A: GradedAlgebra + ?Sized> Regraded<'a, A> {
    pub fn new(parent: &'a A, normal: &Subgroup) -> Result<Self> {
        let (quotient, projection) = parent.grading().quotient_group(normal)?;
        let r = Regraded {
            parent,
            quotient,
            projection,
        };
        check_grading(&r)?;
        Ok(r)
    }

    pub fn parent(&self) -> &'a A {
        self.parent
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }
}

impl<A: GradedAlgebra + ?Sized> GradedAlgebra for Regraded<'_, A> {
    fn grading(&self) -> &GroupTable {
        &self.quotient
    }
    fn field(&self) -> &Arc<CyclotomicField> {
        self.parent.field()
    }
    fn dim(&self) -> usize {
        self.parent.dim()
    }
    fn degree(&self, b: usize) -> usize {
        self.projection[self.parent.degree(b)]
    }
    fn mul_basis(&self, a: usize, b: usize) -> Product {
        self.parent.mul_basis(a, b)
    }
}
