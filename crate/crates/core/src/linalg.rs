//! Exact linear algebra over `Q(zeta_n)`: rank, null spaces, characteristic
//! polynomials and square-free factorization.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::scalar::{CycScalar, CyclotomicField};

/// Dense matrix as a list of rows.
pub type Matrix = Vec<Vec<CycScalar>>;

/// Rank by fraction-free (Bareiss) elimination.
pub fn rank(field: &Arc<CyclotomicField>, mut m: Matrix) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = CycScalar::one(field);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let prev_inv = prev.inv().expect("previous pivot is nonzero");
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = &t * &prev_inv;
            }
            m[i][c] = CycScalar::zero(field);
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Incrementally built echelon basis of a vector space; vectors are
/// reduced against the stored pivots on insertion.
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<CycScalar>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        EchelonBasis { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, mut v: Vec<CycScalar>) -> bool {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&c * y);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // keep earlier rows reduced at the new pivot
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = &*x - &(&c * y);
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

impl Default for EchelonBasis {
    fn default() -> Self {
        Self::new()
    }
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(field: &Arc<CyclotomicField>, m: &Matrix, cols: usize) -> Vec<Vec<CycScalar>> {
    let mut a: Matrix = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![CycScalar::zero(field); cols];
        v[free] = CycScalar::one(field);
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -&a[i][free];
        }
        basis.push(v);
    }
    basis
}

/// Polynomial with coefficients lowest degree first; no trailing zeros
/// except for the zero polynomial `[]`.
pub type Poly = Vec<CycScalar>;

fn trim(mut p: Poly) -> Poly {
    while p.last().map_or(false, CycScalar::is_zero) {
        p.pop();
    }
    p
}

/// Characteristic polynomial `det(x I - m)` (Faddeev-LeVerrier), monic.
pub fn charpoly(field: &Arc<CyclotomicField>, m: &Matrix) -> Poly {
    let n = m.len();
    let zero = CycScalar::zero(field);
    let identity = |k: usize| -> Matrix {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { k_scalar(field, k) } else { zero.clone() })
                    .collect()
            })
            .collect()
    };
    let matmul = |a: &Matrix, b: &Matrix| -> Matrix {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = zero.clone();
                        for k in 0..n {
                            if !a[i][k].is_zero() && !b[k][j].is_zero() {
                                s = &s + &(&a[i][k] * &b[k][j]);
                            }
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    };
    // coefficients c_n = 1, c_{n-k} = -tr(M_k)/k with M_k = m (M_{k-1} + c_{n-k+1} I)
    let mut coeffs = vec![zero.clone(); n + 1];
    coeffs[n] = CycScalar::one(field);
    let mut mk: Matrix = identity(0);
    for k in 1..=n {
        let mut shifted = mk.clone();
        for i in 0..n {
            shifted[i][i] = &shifted[i][i] + &coeffs[n - k + 1];
        }
        mk = matmul(m, &shifted);
        let mut tr = zero.clone();
        for i in 0..n {
            tr = &tr + &mk[i][i];
        }
        let inv_k = BigRational::new(BigInt::from(-1), BigInt::from(k as i64));
        coeffs[n - k] = tr.scale(&inv_k);
    }
    coeffs
}

fn k_scalar(field: &Arc<CyclotomicField>, k: usize) -> CycScalar {
    CycScalar::from_int(field, k as i64)
}

pub fn poly_divrem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.clone());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let field = b[0].field().clone();
    let lead_inv = b.last().unwrap().inv().unwrap();
    let db = b.len() - 1;
    let mut q = vec![CycScalar::zero(&field); r.len() - db];
    for k in (db..r.len()).rev() {
        if r[k].is_zero() {
            continue;
        }
        let c = &r[k] * &lead_inv;
        for (i, y) in b.iter().enumerate() {
            let t = &c * y;
            r[k - db + i] = &r[k - db + i] - &t;
        }
        q[k - db] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

/// Monic greatest common divisor.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = trim(a.clone());
    let mut y = trim(b.clone());
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = core::mem::replace(&mut y, r);
    }
    monic(x)
}

fn monic(p: Poly) -> Poly {
    match p.last() {
        None => p,
        Some(l) => {
            let inv = l.inv().unwrap();
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

pub fn derivative(p: &Poly) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&BigRational::from_integer(BigInt::from(k as i64))))
            .collect(),
    )
}

/// Yun's square-free decomposition of a monic polynomial:
/// `p = prod_i factors[i].1 ^ factors[i].0`, each factor square-free and
/// pairwise coprime. Factors of degree 0 are omitted.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(usize, Poly)> {
    let p = monic(trim(p.clone()));
    let mut out = Vec::new();
    if p.len() <= 1 {
        return out;
    }
    let dp = derivative(&p);
    let a0 = poly_gcd(&p, &dp);
    let mut b = poly_divrem(&p, &a0).0;
    let mut c = poly_divrem(&dp, &a0).0;
    let mut d = poly_sub(&c, &derivative(&b));
    let mut i = 1;
    loop {
        let a = poly_gcd(&b, &d);
        if a.len() > 1 {
            out.push((i, a.clone()));
        }
        b = poly_divrem(&b, &a).0;
        if b.len() <= 1 {
            break;
        }
        c = poly_divrem(&d, &a).0;
        d = poly_sub(&c, &derivative(&b));
        i += 1;
    }
    out
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    let field = a.first().or(b.first()).map(|c| c.field().clone());
    let Some(field) = field else {
        return Vec::new();
    };
    let zero = CycScalar::zero(&field);
    trim(
        (0..n)
            .map(|i| &*a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Arc<CyclotomicField> {
        CyclotomicField::new(1)
    }

    fn mat(f: &Arc<CyclotomicField>, rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| CycScalar::from_int(f, x)).collect())
            .collect()
    }

    fn poly(f: &Arc<CyclotomicField>, c: &[i64]) -> Poly {
        c.iter().map(|&x| CycScalar::from_int(f, x)).collect()
    }

    #[test]
    fn rank_small() {
        let f = q();
        assert_eq!(rank(&f, mat(&f, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
        assert_eq!(rank(&f, mat(&f, &[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&f, mat(&f, &[&[0, 1], &[1, 0]])), 2);
    }

    #[test]
    fn rank_agrees_with_echelon() {
        let f = CyclotomicField::new(3);
        let z = CycScalar::zeta_pow(&f, 1);
        let one = CycScalar::one(&f);
        // rows (1, z), (z, z^2) are dependent; (1, 1) is not
        let m = vec![
            vec![one.clone(), z.clone()],
            vec![z.clone(), &z * &z],
            vec![one.clone(), one.clone()],
        ];
        assert_eq!(rank(&f, m.clone()), 2);
        let mut e = EchelonBasis::new();
        let flags: Vec<bool> = m.into_iter().map(|r| e.insert(r)).collect();
        assert_eq!(flags, vec![true, false, true]);
    }

    #[test]
    fn nullspace_dimension() {
        let f = q();
        let m = mat(&f, &[&[1, 1, 0], &[0, 0, 0]]);
        let ns = nullspace(&f, &m, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s = &(&m[0][0] * &v[0]) + &(&m[0][1] * &v[1]);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn charpoly_and_squarefree() {
        let f = q();
        // diag(2, 2, 3): (x-2)^2 (x-3)
        let m = mat(&f, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        let cp = charpoly(&f, &m);
        assert_eq!(cp, poly(&f, &[-12, 16, -7, 1]));
        let sf = squarefree_decomposition(&cp);
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (1, poly(&f, &[-3, 1])));
        assert_eq!(sf[1], (2, poly(&f, &[-2, 1])));
    }

    #[test]
    fn squarefree_of_irreducible_power() {
        let f = q();
        // (x^2 + 1)^3 has no rational roots but multiplicity 3
        let p = poly(&f, &[1, 0, 3, 0, 3, 0, 1]);
        let sf = squarefree_decomposition(&p);
        assert_eq!(sf, vec![(3, poly(&f, &[1, 0, 1]))]);
    }
}
