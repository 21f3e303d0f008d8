//! Normalized 2-cocycles with values in the `n`-th roots of unity.
//!
//! A value `c` in the table stands for `zeta^c` where `zeta` is a fixed
//! primitive `n`-th root of unity, so the cocycle identity becomes additive
//! modulo `n`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    subgroup: Subgroup,
    modulus: u32,
    /// Row-major over positions in `subgroup`.
    table: Vec<u32>,
}

/// Outcome of [`TwoCocycle::verify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleCheck {
    Valid,
    /// `c(e, h)` or `c(h, e)` is nonzero.
    NotNormalized { element: usize },
    /// `c(a,b) + c(ab,c) != c(b,c) + c(a,bc)` for these elements.
    IdentityFails { a: usize, b: usize, c: usize },
}

impl TwoCocycle {
    /// The all-zero cocycle.
    pub fn trivial(h: &Subgroup, modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidCocycle("modulus must be positive".into()));
        }
        Ok(TwoCocycle {
            subgroup: h.clone(),
            modulus,
            table: vec![0; h.len() * h.len()],
        })
    }

    /// Coboundary `c(a,b) = l(a) + l(b) - l(ab)` of a function given by its
    /// values on the sorted elements of `h`; `l(e)` must be 0.
    pub fn coboundary(g: &GroupTable, h: &Subgroup, modulus: u32, values: &[u32]) -> Result<Self> {
        if values.len() != h.len() {
            return Err(Error::InvalidCocycle(format!(
                "expected {} coboundary values, found {}",
                h.len(),
                values.len()
            )));
        }
        if values[0] % modulus.max(1) != 0 {
            return Err(Error::InvalidCocycle("coboundary function must vanish at e".into()));
        }
        let mut c = Self::trivial(h, modulus)?;
        let n = h.len();
        for (i, &a) in h.elements().iter().enumerate() {
            for (j, &b) in h.elements().iter().enumerate() {
                let ab = h.position(g.mul(a, b)).unwrap();
                let v = values[i] as u64 + values[j] as u64 + (modulus as u64 - values[ab] as u64 % modulus as u64);
                c.table[i * n + j] = (v % modulus as u64) as u32;
            }
        }
        Ok(c)
    }

    /// Builds a cocycle from a row-major table and verifies it.
    pub fn from_table(g: &GroupTable, h: &Subgroup, modulus: u32, table: Vec<u32>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidCocycle("modulus must be positive".into()));
        }
        if table.len() != h.len() * h.len() {
            return Err(Error::InvalidCocycle(format!(
                "table has {} entries, expected {}",
                table.len(),
                h.len() * h.len()
            )));
        }
        let c = TwoCocycle {
            subgroup: h.clone(),
            modulus,
            table: table.into_iter().map(|x| x % modulus).collect(),
        };
        match c.verify(g) {
            CocycleCheck::Valid => Ok(c),
            CocycleCheck::NotNormalized { element } => Err(Error::InvalidCocycle(format!(
                "not normalized at element {element}"
            ))),
            CocycleCheck::IdentityFails { a, b, c } => Err(Error::InvalidCocycle(format!(
                "cocycle identity fails at ({a}, {b}, {c})"
            ))),
        }
    }

    /// The non-trivial class on a Klein four-group `h = {e, a, b, ab}` with
    /// `u_a u_b = -u_b u_a`: `c(a^x1 b^x2, a^y1 b^y2) = x2 * y1 (mod 2)`.
    pub fn klein_nontrivial(g: &GroupTable, h: &Subgroup) -> Result<Self> {
        if h.len() != 4 || h.elements().iter().any(|&x| g.mul(x, x) != 0) {
            return Err(Error::InvalidCocycle("subgroup is not a Klein four-group".into()));
        }
        let a = h.elements()[1];
        let b = h.elements()[2];
        let coords = |x: usize| -> (u32, u32) {
            if x == 0 {
                (0, 0)
            } else if x == a {
                (1, 0)
            } else if x == b {
                (0, 1)
            } else {
                (1, 1)
            }
        };
        let table = h
            .elements()
            .iter()
            .flat_map(|&x| h.elements().iter().map(move |&y| (x, y)))
            .map(|(x, y)| (coords(x).1 * coords(y).0) % 2)
            .collect();
        Self::from_table(g, h, 2, table)
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|&x| x == 0)
    }

    /// Exponent `c(h1, h2)`; both arguments must lie in the subgroup.
    pub fn value(&self, h1: usize, h2: usize) -> Result<u32> {
        let i = self.subgroup.position(h1).ok_or(Error::NotInSubgroup(h1))?;
        let j = self.subgroup.position(h2).ok_or(Error::NotInSubgroup(h2))?;
        Ok(self.table[i * self.subgroup.len() + j])
    }

    /// Lookup by positions in the subgroup's sorted element list.
    #[inline]
    pub fn value_at(&self, i: usize, j: usize) -> u32 {
        self.table[i * self.subgroup.len() + j]
    }

    /// Checks normalization and the cocycle identity on all triples.
    pub fn verify(&self, g: &GroupTable) -> CocycleCheck {
        let h = &self.subgroup;
        let n = h.len();
        let m = self.modulus;
        for (i, &x) in h.elements().iter().enumerate() {
            if self.table[i] != 0 || self.table[i * n] != 0 {
                return CocycleCheck::NotNormalized { element: x };
            }
        }
        for (ia, &a) in h.elements().iter().enumerate() {
            for (ib, &b) in h.elements().iter().enumerate() {
                let iab = h.position(g.mul(a, b)).unwrap();
                for (ic, &c) in h.elements().iter().enumerate() {
                    let ibc = h.position(g.mul(b, c)).unwrap();
                    let lhs = (self.table[ia * n + ib] + self.table[iab * n + ic]) % m;
                    let rhs = (self.table[ib * n + ic] + self.table[ia * n + ibc]) % m;
                    if lhs != rhs {
                        return CocycleCheck::IdentityFails { a, b, c };
                    }
                }
            }
        }
        CocycleCheck::Valid
    }

    /// `u_{h1} u_{h2} = zeta^e u_{h1 h2}`; returns `(e, h1 h2)`.
    pub fn twisted_product(&self, g: &GroupTable, h1: usize, h2: usize) -> Result<(u32, usize)> {
        Ok((self.value(h1, h2)?, g.mul(h1, h2)))
    }

    /// Exponent `e` with `u_h^{-1} = zeta^e u_{h^{-1}}`.
    pub fn inverse_exponent(&self, g: &GroupTable, h: usize) -> Result<u32> {
        let c = self.value(h, g.inv(h))?;
        Ok((self.modulus - c) % self.modulus)
    }

    /// The transported cocycle on `x^-1 H x`, defined by
    /// `c'(x^-1 a x, x^-1 b x) = c(a, b)`.
    pub fn conjugate(&self, g: &GroupTable, x: usize) -> Result<Self> {
        let target = g.conjugate_subgroup(x, &self.subgroup)?;
        let n = target.len();
        let mut table = vec![0; n * n];
        for (i, &a) in self.subgroup.elements().iter().enumerate() {
            let ia = target.position(g.conjugate(a, x)).unwrap();
            for (j, &b) in self.subgroup.elements().iter().enumerate() {
                let jb = target.position(g.conjugate(b, x)).unwrap();
                table[ia * n + jb] = self.table[i * self.subgroup.len() + j];
            }
        }
        Ok(TwoCocycle {
            subgroup: target,
            modulus: self.modulus,
            table,
        })
    }

    /// Restriction to a subgroup of the cocycle's domain.
    pub fn restrict(&self, sub: &Subgroup) -> Result<Self> {
        if !sub.is_subset_of(&self.subgroup) {
            return Err(Error::NotSubgroup("restriction target not contained in domain".into()));
        }
        let n = sub.len();
        let mut table = vec![0; n * n];
        for (i, &a) in sub.elements().iter().enumerate() {
            let pa = self.subgroup.position(a).unwrap();
            for (j, &b) in sub.elements().iter().enumerate() {
                let pb = self.subgroup.position(b).unwrap();
                table[i * n + j] = self.table[pa * self.subgroup.len() + pb];
            }
        }
        Ok(TwoCocycle {
            subgroup: sub.clone(),
            modulus: self.modulus,
            table,
        })
    }

    /// Same cocycle re-indexed for a subgroup viewed as a group on its own
    /// (see [`Subgroup::as_group`]). `within` is the subgroup that became the
    /// ambient group.
    pub fn reindex(&self, within: &Subgroup, ambient: &GroupTable) -> Result<Self> {
        let elems: Vec<usize> = self
            .subgroup
            .elements()
            .iter()
            .map(|&x| within.position(x).ok_or(Error::NotInSubgroup(x)))
            .collect::<Result<_>>()?;
        let sub = Subgroup::new(ambient, &elems)?;
        // positions are preserved because re-indexing is monotone
        Ok(TwoCocycle {
            subgroup: sub,
            modulus: self.modulus,
            table: self.table.clone(),
        })
    }
}
