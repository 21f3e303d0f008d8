//! Multilinear codimensions of small algebras by evaluation rank.
//!
//! `c_n(A)` is the rank of the matrix whose rows are the `n!` monomials
//! `x_s(1) ... x_s(n)` and whose columns are basis substitutions paired with
//! output coordinates. The graded version splits rows by the degree of each
//! variable; only substitutions of matching degree contribute.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::algebra::{AlgebraElement, GradedAlgebra, GradedSubalgebra, Product, Term};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::{EchelonBasis, Matrix};
use crate::scalar::CycScalar;

/// Default bound on `substitutions * n!`.
pub const DEFAULT_WORK_CAP: u128 = 10_000_000;

#[derive(Clone, Copy, Debug)]
pub struct CodimOptions {
    pub work_cap: u128,
    /// Above the cap, evaluate a random subset of substitutions instead of
    /// failing. The result is then a lower bound.
    pub sample: bool,
    pub seed: u64,
}

impl Default for CodimOptions {
    fn default() -> Self {
        CodimOptions {
            work_cap: DEFAULT_WORK_CAP,
            sample: false,
            seed: 0x636f_6469_6d00,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Codim {
    pub value: usize,
    /// False when only sampled substitutions were used.
    pub exact: bool,
    pub substitutions: usize,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// Product `b[s(0)] ... b[s(n-1)]` as sparse coordinates.
fn evaluate<A: GradedAlgebra + ?Sized>(a: &A, b: &[usize], s: &[usize]) -> Vec<(usize, CycScalar)> {
    let m = a.field().modulus();
    let mut acc = Term {
        exponent: 0,
        index: b[s[0]],
    };
    for (pos, &i) in s.iter().enumerate().skip(1) {
        match a.mul_basis(acc.index, b[i]) {
            Product::Zero => return Vec::new(),
            Product::Monomial(t) => {
                acc = Term {
                    exponent: (acc.exponent + t.exponent) % m,
                    index: t.index,
                }
            }
            Product::Sum(_) => {
                let mut e = AlgebraElement::from_term(a, acc);
                for &j in &s[pos..] {
                    e = e.multiply(&AlgebraElement::basis(a, b[j])).expect("same algebra");
                }
                return e.terms().iter().map(|(&c, x)| (c, x.clone())).collect();
            }
        }
    }
    vec![(acc.index, CycScalar::zeta_pow(a.field(), acc.exponent))]
}

/// Evaluation columns of one substitution, one per output coordinate hit.
pub fn substitution_columns<A: GradedAlgebra + ?Sized>(
    a: &A,
    perms: &[Vec<usize>],
    tuple: &[usize],
) -> Vec<Vec<CycScalar>> {
    let zero = CycScalar::zero(a.field());
    let mut cols: BTreeMap<usize, Vec<CycScalar>> = BTreeMap::new();
    for (row, s) in perms.iter().enumerate() {
        for (c, x) in evaluate(a, tuple, s) {
            cols.entry(c).or_insert_with(|| vec![zero.clone(); perms.len()])[row] = x;
        }
    }
    cols.into_values().collect()
}

/// All substitutions `dim^n` in lexicographic order.
fn all_tuples(dim: usize, n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = dim.pow(n as u32);
    (0..total).map(move |mut x| {
        let mut t = vec![0; n];
        for slot in t.iter_mut().rev() {
            *slot = x % dim;
            x /= dim;
        }
        t
    })
}

fn work<A: GradedAlgebra + ?Sized>(a: &A, n: usize) -> u128 {
    (a.dim() as u128).saturating_pow(n as u32).saturating_mul(factorial(n))
}

fn substitutions<A: GradedAlgebra + ?Sized>(a: &A, n: usize, opts: &CodimOptions) -> Result<(Vec<Vec<usize>>, bool)> {
    let w = work(a, n);
    if w <= opts.work_cap {
        return Ok((all_tuples(a.dim(), n).collect(), true));
    }
    if !opts.sample {
        return Err(Error::WorkCap {
            work: w,
            cap: opts.work_cap,
        });
    }
    let count = (opts.work_cap / factorial(n)).max(1) as usize;
    let mut rng = SplitMix64::seed_from_u64(opts.seed);
    let tuples = (0..count)
        .map(|_| (0..n).map(|_| (rng.next_u64() % a.dim() as u64) as usize).collect())
        .collect();
    Ok((tuples, false))
}

/// Rank of the evaluation matrix restricted to the given substitutions,
/// keyed by `key(tuple)`; ranks of different keys are summed.
fn keyed_rank<A: GradedAlgebra + ?Sized, K: Ord>(
    a: &A,
    n: usize,
    tuples: &[Vec<usize>],
    key: impl Fn(&[usize]) -> K,
) -> usize {
    let perms = permutations(n);
    let full = perms.len();
    let mut bases: BTreeMap<K, EchelonBasis> = BTreeMap::new();
    for t in tuples {
        let basis = bases.entry(key(t)).or_default();
        if basis.rank() == full {
            continue;
        }
        for col in substitution_columns(a, &perms, t) {
            basis.insert(col);
            if basis.rank() == full {
                break;
            }
        }
    }
    bases.values().map(EchelonBasis::rank).sum()
}

pub fn codimension_with<A: GradedAlgebra + ?Sized>(a: &A, n: usize, opts: &CodimOptions) -> Result<Codim> {
    if n == 0 {
        return Err(Error::OutOfRange("codimension degree must be at least 1".into()));
    }
    if a.dim() == 0 {
        return Ok(Codim {
            value: 0,
            exact: true,
            substitutions: 0,
        });
    }
    let (tuples, exact) = substitutions(a, n, opts)?;
    Ok(Codim {
        value: keyed_rank(a, n, &tuples, |_| ()),
        exact,
        substitutions: tuples.len(),
    })
}

pub fn graded_codimension_with<A: GradedAlgebra + ?Sized>(a: &A, n: usize, opts: &CodimOptions) -> Result<Codim> {
    if n == 0 {
        return Err(Error::OutOfRange("codimension degree must be at least 1".into()));
    }
    let assignments = (a.grading().order() as u128).saturating_pow(n as u32);
    if assignments.saturating_mul(factorial(n)) > opts.work_cap && !opts.sample {
        return Err(Error::WorkCap {
            work: assignments.saturating_mul(factorial(n)),
            cap: opts.work_cap,
        });
    }
    if a.dim() == 0 {
        return Ok(Codim {
            value: 0,
            exact: true,
            substitutions: 0,
        });
    }
    let (tuples, exact) = substitutions(a, n, opts)?;
    let value = keyed_rank(a, n, &tuples, |t| t.iter().map(|&b| a.degree(b)).collect::<Vec<_>>());
    Ok(Codim {
        value,
        exact,
        substitutions: tuples.len(),
    })
}

/// Exact `c_n(A)` with the default cap.
pub fn codimension<A: GradedAlgebra + ?Sized>(a: &A, n: usize) -> Result<usize> {
    codimension_with(a, n, &CodimOptions::default()).map(|c| c.value)
}

/// Exact `c_n^G(A)` with the default cap.
pub fn graded_codimension<A: GradedAlgebra + ?Sized>(a: &A, n: usize) -> Result<usize> {
    graded_codimension_with(a, n, &CodimOptions::default()).map(|c| c.value)
}

/// The full ungraded evaluation matrix, rows in lexicographic permutation
/// order and columns in substitution order. Intended for cross-checks.
pub fn evaluation_matrix<A: GradedAlgebra + ?Sized>(a: &A, n: usize) -> Matrix {
    let perms = permutations(n);
    let mut columns = Vec::new();
    for t in all_tuples(a.dim(), n) {
        columns.extend(substitution_columns(a, &perms, &t));
    }
    (0..perms.len())
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub n: usize,
    pub value: Codim,
    pub graded: Option<Codim>,
    /// `c_n` of the subgroup component, when one was requested.
    pub component: Option<Codim>,
}

/// Codimensions for `n = 1..=n_max`. The numbers are a trend only; nothing
/// is extrapolated from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodimReport {
    pub dim: usize,
    pub rows: Vec<GrowthRow>,
}

impl CodimReport {
    pub const LABEL: &'static str = "trend only";
}

pub fn growth_report<A: GradedAlgebra + ?Sized>(
    a: &A,
    n_max: usize,
    graded: bool,
    k: Option<&Subgroup>,
    opts: &CodimOptions,
) -> Result<CodimReport> {
    let sub = match k {
        Some(k) => Some(GradedSubalgebra::new(a, k)?),
        None => None,
    };
    let mut rows = Vec::new();
    for n in 1..=n_max {
        rows.push(GrowthRow {
            n,
            value: codimension_with(a, n, opts)?,
            graded: if graded {
                Some(graded_codimension_with(a, n, opts)?)
            } else {
                None
            },
            component: match &sub {
                Some(s) => Some(codimension_with(s, n, opts)?),
                None => None,
            },
        });
    }
    Ok(CodimReport { dim: a.dim(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TableAlgebra;
    use crate::grassmann::GrassmannAlgebra;
    use crate::group::GroupTable;
    use crate::linalg::rank;
    use crate::scalar::CyclotomicField;

    fn field_line() -> TableAlgebra {
        let t = Product::Monomial(Term { exponent: 0, index: 0 });
        TableAlgebra::new(GroupTable::cyclic(1).unwrap(), CyclotomicField::new(2), vec![0], vec![t]).unwrap()
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(1), vec![vec![0]]);
    }

    #[test]
    fn unital_line() {
        let a = field_line();
        for n in 1..=4 {
            assert_eq!(codimension(&a, n).unwrap(), 1);
        }
    }

    #[test]
    fn square_zero() {
        let a = TableAlgebra::new(
            GroupTable::cyclic(1).unwrap(),
            CyclotomicField::new(2),
            vec![0, 0],
            vec![Product::Zero; 4],
        )
        .unwrap();
        assert_eq!(codimension(&a, 1).unwrap(), 1);
        for n in 2..=4 {
            assert_eq!(codimension(&a, n).unwrap(), 0);
        }
    }

    #[test]
    fn grassmann_second_codimension() {
        let e = GrassmannAlgebra::new(4).unwrap();
        assert_eq!(codimension(&e, 2).unwrap(), 2);
        let m = evaluation_matrix(&e, 2);
        assert_eq!(rank(e.field(), m), 2);
    }

    #[test]
    fn cap_and_sampling() {
        let e = GrassmannAlgebra::new(4).unwrap();
        let tight = CodimOptions {
            work_cap: 100,
            ..CodimOptions::default()
        };
        assert!(matches!(codimension_with(&e, 3, &tight), Err(Error::WorkCap { .. })));
        let sampled = CodimOptions { sample: true, ..tight };
        let c = codimension_with(&e, 3, &sampled).unwrap();
        assert!(!c.exact);
        assert!(c.value <= codimension(&e, 3).unwrap());
    }
}
