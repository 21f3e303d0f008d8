//! Exact scalars in the cyclotomic field `Q(zeta_n)`.
//!
//! Elements are polynomials in `zeta` with rational coefficients, reduced
//! modulo the `n`-th cyclotomic polynomial, so every element has exactly one
//! representation of degree `< phi(n)`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `Q(zeta_n)` together with its defining polynomial.
#[derive(PartialEq, Eq)]
pub struct CyclotomicField {
    modulus: u32,
    /// Monic `Phi_n`, lowest degree first.
    phi: Vec<BigRational>,
    /// Reduced form of `zeta^k` for `0 <= k < n`.
    powers: Vec<Vec<BigRational>>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})", self.modulus)
    }
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n > 0);
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = div_monic_int(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn div_monic_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for k in (dd..rem.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        q[k - dd] = c.clone();
        for (i, d) in den.iter().enumerate() {
            rem[k - dd + i] -= &c * d;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

impl CyclotomicField {
    pub fn new(modulus: u32) -> Arc<Self> {
        assert!(modulus > 0, "cyclotomic modulus must be positive");
        let phi: Vec<BigRational> = cyclotomic_polynomial(modulus)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let mut field = CyclotomicField {
            modulus,
            phi,
            powers: Vec::new(),
        };
        let degree = field.degree();
        let mut powers = Vec::with_capacity(modulus as usize);
        let mut x = vec![BigRational::zero(); degree];
        x[0] = BigRational::one();
        for _ in 0..modulus {
            powers.push(x.clone());
            // multiply by zeta
            let mut shifted = vec![BigRational::zero(); degree + 1];
            shifted[1..].clone_from_slice(&x);
            x = field.reduce(shifted);
        }
        field.powers = powers;
        Arc::new(field)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// `phi(n)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut p: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        for k in (d..p.len()).rev() {
            if p[k].is_zero() {
                continue;
            }
            let c = core::mem::take(&mut p[k]);
            for i in 0..d {
                let t = &c * &self.phi[i];
                p[k - d + i] -= t;
            }
        }
        p.truncate(d);
        p.resize(d, BigRational::zero());
        p
    }
}

/// An element of `Q(zeta_n)`.
#[derive(Clone)]
pub struct CycScalar {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.modulus == other.field.modulus && self.coeffs == other.coeffs
    }
}

impl Eq for CycScalar {}

impl CycScalar {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        CycScalar {
            field: field.clone(),
            coeffs: vec![BigRational::zero(); field.degree()],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, BigRational::one())
    }

    pub fn from_int(field: &Arc<CyclotomicField>, v: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, v: BigRational) -> Self {
        let mut s = Self::zero(field);
        s.coeffs[0] = v;
        s
    }

    /// `zeta^k`.
    pub fn zeta_pow(field: &Arc<CyclotomicField>, k: u32) -> Self {
        CycScalar {
            field: field.clone(),
            coeffs: field.powers[(k % field.modulus) as usize].clone(),
        }
    }

    /// Builds an element from coefficients of `1, zeta, zeta^2, ...` of any
    /// length, reducing as needed.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<BigRational>) -> Self {
        let mut c = coeffs;
        if c.len() < field.degree() {
            c.resize(field.degree(), BigRational::zero());
        }
        CycScalar {
            field: field.clone(),
            coeffs: field.reduce(c),
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    fn check_field(&self, other: &Self) {
        assert_eq!(
            self.field.modulus, other.field.modulus,
            "scalars from different cyclotomic fields"
        );
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // extended Euclid on (self, phi) in Q[x]
        let mut r0 = trim(self.field.phi.clone());
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while !(r1.len() == 1 && !r1[0].is_zero()) {
            let (q, r) = divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s2);
        }
        let c = r1[0].recip();
        let s: Vec<BigRational> = s1.into_iter().map(|x| x * &c).collect();
        Some(Self::from_coeffs(&self.field, s))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let db = b.len() - 1;
    let lead = b[db].recip();
    let mut r = a.to_vec();
    if r.len() <= db {
        return (vec![BigRational::zero()], trim(r));
    }
    let mut q = vec![BigRational::zero(); r.len() - db];
    for k in (db..r.len()).rev() {
        if r[k].is_zero() {
            continue;
        }
        let c = &r[k] * &lead;
        for (i, y) in b.iter().enumerate() {
            let t = &c * y;
            r[k - db + i] -= t;
        }
        q[k - db] = c;
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &'a CycScalar) -> CycScalar {
        self.check_field(rhs);
        CycScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &'a CycScalar) -> CycScalar {
        self.check_field(rhs);
        CycScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &'a CycScalar) -> CycScalar {
        self.check_field(rhs);
        let d = self.field.degree();
        if d == 1 {
            return CycScalar {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &rhs.coeffs[0]],
            };
        }
        let prod = poly_mul(&self.coeffs, &rhs.coeffs);
        CycScalar {
            field: self.field.clone(),
            coeffs: self.field.reduce(prod),
        }
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -(&self)
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let monomial = match k {
                0 => String::new(),
                1 => alloc::format!("z{}", self.field.modulus),
                _ => alloc::format!("z{}^{}", self.field.modulus, k),
            };
            if k == 0 || !mag.is_one() {
                out.push_str(&alloc::format!("{mag}"));
                if k > 0 {
                    out.push('*');
                }
            }
            out.push_str(&monomial);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_has_order_n() {
        for n in 1..=12 {
            let f = CyclotomicField::new(n);
            let z = CycScalar::zeta_pow(&f, 1);
            let mut acc = CycScalar::one(&f);
            for k in 1..=n {
                acc = &acc * &z;
                assert_eq!(acc.is_one(), k == n, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn display() {
        let f = CyclotomicField::new(4);
        let x = &CycScalar::from_int(&f, 2) - &CycScalar::zeta_pow(&f, 1);
        assert_eq!(alloc::format!("{x}"), "2 - z4");
        assert_eq!(alloc::format!("{}", CycScalar::zero(&f)), "0");
        assert_eq!(alloc::format!("{}", CycScalar::zeta_pow(&f, 2)), "-1");
    }

    fn arb_scalar(n: u32) -> impl Strategy<Value = CycScalar> {
        let f = CyclotomicField::new(n);
        proptest::collection::vec((-5i64..6, 1i64..4), f.degree()).prop_map(move |v| {
            let coeffs = v
                .into_iter()
                .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
                .collect();
            CycScalar::from_coeffs(&f, coeffs)
        })
    }

    proptest! {
        #[test]
        fn field_axioms(
            (a, b, c) in prop::sample::select(vec![1u32, 2, 3, 4, 5, 6, 8, 12])
                .prop_flat_map(|n| (arb_scalar(n), arb_scalar(n), arb_scalar(n)))
        ) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                let inv = a.inv().unwrap();
                prop_assert!((&a * &inv).is_one());
            }
            prop_assert!((&a - &a).is_zero());
        }
    }
}
