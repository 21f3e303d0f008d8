//! Graded-simple blocks glued by a truncated path radical.
//!
//! A basis element is a walk `t_0 -d_1-> t_1 -> ... -d_k-> t_k` in the edge
//! quiver with `k < N`, together with a basis element `a_i` of component
//! `t_i` at each vertex. Two such elements multiply by concatenating the
//! walks and multiplying the two basis elements that meet at the junction.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_integer::Integer;
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::algebra::{
    check_associativity, check_grading, GradedAlgebra, GradedSubalgebra, Product, Regraded, Term,
    SAMPLE_COUNT,
};
use crate::error::{Error, Result};
use crate::group::{GroupTable, Subgroup};
use crate::scalar::CyclotomicField;
use crate::simple::{unit_modulus, GradedSimple};

/// Default bound on the number of basis elements.
pub const DEFAULT_BASIS_CAP: usize = 20_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub degree: usize,
}

#[derive(Clone, Debug)]
pub struct Walk {
    pub edges: Vec<usize>,
    /// `t_0, ..., t_k`.
    pub vertices: Vec<usize>,
    offset: usize,
    size: usize,
}

impl Walk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }
}

/// Endpoint data of a basis element, used to pick idempotents that keep it
/// nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathEnds {
    pub source: usize,
    /// Row of the first local factor.
    pub source_row: usize,
    pub target: usize,
    /// Column of the last local factor.
    pub target_col: usize,
    pub length: usize,
}

#[derive(Clone, Debug)]
pub struct GluedAlgebra {
    group: GroupTable,
    field: Arc<CyclotomicField>,
    components: Vec<GradedSimple>,
    edges: Vec<Edge>,
    truncation: usize,
    walks: Vec<Walk>,
    extend: HashMap<(usize, usize), usize>,
    degrees: Vec<usize>,
    walk_of: Vec<u32>,
}

impl GluedAlgebra {
    pub fn new(
        group: &GroupTable,
        components: &[GradedSimple],
        edges: &[Edge],
        truncation: usize,
        cap: usize,
    ) -> Result<Self> {
        let a = Self::build(group, components, edges, truncation, cap)?;
        a.verify()?;
        Ok(a)
    }

    /// Builds without running the invariant checks.
    pub fn build(
        group: &GroupTable,
        components: &[GradedSimple],
        edges: &[Edge],
        truncation: usize,
        cap: usize,
    ) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::OutOfRange("truncation N must be at least 1".into()));
        }
        if components.is_empty() {
            return Err(Error::OutOfRange("at least one simple component is required".into()));
        }
        let q = components.len();
        for (index, e) in edges.iter().enumerate() {
            if e.from >= q || e.to >= q {
                return Err(Error::InvalidEdge {
                    index,
                    reason: format!("endpoint out of range for {q} components"),
                });
            }
            if e.degree >= group.order() {
                return Err(Error::InvalidEdge {
                    index,
                    reason: format!("degree {} is not a group element", e.degree),
                });
            }
        }
        let mut modulus = 2u32;
        for c in components {
            if c.group().table() != group.table() {
                return Err(Error::Invariant("component graded by a different group".into()));
            }
            modulus = modulus.lcm(&unit_modulus(c.cocycle().modulus()));
        }
        let field = CyclotomicField::new(modulus);
        let components: Vec<GradedSimple> = components
            .iter()
            .map(|c| GradedSimple::with_field(group, c.subgroup(), c.cocycle(), c.tuple(), field.clone()))
            .collect::<Result<_>>()?;

        let mut out_edges = vec![Vec::new(); q];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.from].push(i);
        }
        let mut walks: Vec<Walk> = Vec::new();
        let mut extend = HashMap::new();
        let mut total = 0usize;
        let mut push = |walks: &mut Vec<Walk>, edges_: Vec<usize>, vertices: Vec<usize>| -> Result<usize> {
            let size = vertices.iter().try_fold(1usize, |acc, &t| acc.checked_mul(components[t].dim()));
            let size = size.ok_or(Error::BasisCap { size: usize::MAX, cap })?;
            let offset = total;
            total = total.saturating_add(size);
            if total > cap {
                return Err(Error::BasisCap { size: total, cap });
            }
            walks.push(Walk {
                edges: edges_,
                vertices,
                offset,
                size,
            });
            Ok(walks.len() - 1)
        };
        for t in 0..q {
            push(&mut walks, Vec::new(), vec![t])?;
        }
        let mut layer: Vec<usize> = (0..q).collect();
        for _ in 1..truncation {
            let mut next = Vec::new();
            for &w in &layer {
                let end = walks[w].end();
                for &e in &out_edges[end] {
                    let mut es = walks[w].edges.clone();
                    es.push(e);
                    let mut vs = walks[w].vertices.clone();
                    vs.push(edges[e].to);
                    let id = push(&mut walks, es, vs)?;
                    extend.insert((w, e), id);
                    next.push(id);
                }
            }
            if next.is_empty() {
                break;
            }
            layer = next;
        }

        let mut degrees = Vec::with_capacity(total);
        let mut walk_of = Vec::with_capacity(total);
        for (w, walk) in walks.iter().enumerate() {
            let mut digits = vec![0usize; walk.vertices.len()];
            for _ in 0..walk.size {
                let mut d = components[walk.vertices[0]].degree(digits[0]);
                for (s, &e) in walk.edges.iter().enumerate() {
                    d = group.mul(d, edges[e].degree);
                    d = group.mul(d, components[walk.vertices[s + 1]].degree(digits[s + 1]));
                }
                degrees.push(d);
                walk_of.push(w as u32);
                // advance the mixed-radix counter, last digit fastest
                for s in (0..digits.len()).rev() {
                    digits[s] += 1;
                    if digits[s] < components[walk.vertices[s]].dim() {
                        break;
                    }
                    digits[s] = 0;
                }
            }
        }

        Ok(GluedAlgebra {
            group: group.clone(),
            field,
            components,
            edges: edges.to_vec(),
            truncation,
            walks,
            extend,
            degrees,
            walk_of,
        })
    }

    /// Grading, associativity and nilpotency checks (exhaustive at small
    /// dimension, sampled above).
    pub fn verify(&self) -> Result<()> {
        check_grading(self)?;
        check_associativity(self)?;
        self.check_nilpotent()
    }

    /// Products of `N` radical basis elements vanish.
    pub fn check_nilpotent(&self) -> Result<()> {
        let rad = self.radical_basis();
        if rad.is_empty() {
            return Ok(());
        }
        let n = self.truncation;
        let total = (rad.len() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        let check = |chain: &[usize]| -> Result<()> {
            let terms: Vec<Term> = chain.iter().map(|&i| Term { exponent: 0, index: i }).collect();
            if crate::algebra::mul_chain(self, &terms).is_some() {
                return Err(Error::Invariant(format!("product of {n} radical elements is nonzero")));
            }
            Ok(())
        };
        if total <= SAMPLE_COUNT as u128 {
            let mut idx = vec![0usize; n];
            loop {
                let chain: Vec<usize> = idx.iter().map(|&i| rad[i]).collect();
                check(&chain)?;
                let mut s = n;
                loop {
                    if s == 0 {
                        return Ok(());
                    }
                    s -= 1;
                    idx[s] += 1;
                    if idx[s] < rad.len() {
                        break;
                    }
                    idx[s] = 0;
                }
            }
        } else {
            let mut rng = SplitMix64::seed_from_u64(0x6e69_6c70);
            for _ in 0..SAMPLE_COUNT {
                let chain: Vec<usize> = (0..n).map(|_| rad[(rng.next_u64() % rad.len() as u64) as usize]).collect();
                check(&chain)?;
            }
            Ok(())
        }
    }

    pub fn components(&self) -> &[GradedSimple] {
        &self.components
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn walks(&self) -> &[Walk] {
        &self.walks
    }

    pub fn walk_of(&self, b: usize) -> usize {
        self.walk_of[b] as usize
    }

    /// The walk extended by one edge, if that walk is in the basis.
    pub fn extend_walk(&self, w: usize, edge: usize) -> Option<usize> {
        self.extend.get(&(w, edge)).copied()
    }

    /// Local basis indices `a_0, ..., a_k` of a basis element.
    pub fn factors(&self, b: usize) -> Vec<usize> {
        let walk = &self.walks[self.walk_of(b)];
        let mut rem = b - walk.offset;
        let mut out = vec![0; walk.vertices.len()];
        for s in (0..out.len()).rev() {
            let d = self.components[walk.vertices[s]].dim();
            out[s] = rem % d;
            rem /= d;
        }
        out
    }

    /// Basis index of a walk with given local factors.
    pub fn path_index(&self, w: usize, factors: &[usize]) -> Option<usize> {
        let walk = self.walks.get(w)?;
        if factors.len() != walk.vertices.len() {
            return None;
        }
        let mut local = 0usize;
        for (s, &a) in factors.iter().enumerate() {
            let d = self.components[walk.vertices[s]].dim();
            if a >= d {
                return None;
            }
            local = local * d + a;
        }
        Some(walk.offset + local)
    }

    /// Global basis index of basis element `a` of component `t`.
    pub fn semisimple_index(&self, t: usize, a: usize) -> usize {
        self.walks[t].offset + a
    }

    pub fn is_radical(&self, b: usize) -> bool {
        !self.walks[self.walk_of(b)].is_empty()
    }

    pub fn semisimple_dim(&self) -> usize {
        self.components.iter().map(|c| c.dim()).sum()
    }

    pub fn radical_basis(&self) -> Vec<usize> {
        let start = self.semisimple_dim();
        (start..self.dim()).collect()
    }

    pub fn ends(&self, b: usize) -> PathEnds {
        let walk = &self.walks[self.walk_of(b)];
        let f = self.factors(b);
        let first = self.components[walk.start()].decode(f[0]);
        let last = self.components[walk.end()].decode(*f.last().unwrap());
        PathEnds {
            source: walk.start(),
            source_row: first.row,
            target: walk.end(),
            target_col: last.col,
            length: walk.len(),
        }
    }

    /// The span of components with degree in `k`, as a `k`-graded algebra.
    pub fn subgroup_component(&self, k: &Subgroup) -> Result<GradedSubalgebra<'_, Self>> {
        GradedSubalgebra::new(self, k)
    }

    /// The same algebra graded by `G/N`.
    pub fn regrade_quotient(&self, normal: &Subgroup) -> Result<Regraded<'_, Self>> {
        Regraded::new(self, normal)
    }
}

impl GradedAlgebra for GluedAlgebra {
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
    fn mul_basis(&self, x: usize, y: usize) -> Product {
        let (w1, w2) = (self.walk_of(x), self.walk_of(y));
        let (p, q) = (&self.walks[w1], &self.walks[w2]);
        let t = p.end();
        if t != q.start() || p.len() + q.len() >= self.truncation {
            return Product::Zero;
        }
        let mut w = w1;
        for &e in &q.edges {
            w = match self.extend_walk(w, e) {
                Some(next) => next,
                None => return Product::Zero,
            };
        }
        let comp = &self.components[t];
        let dt = comp.dim();
        let (l1, l2) = (x - p.offset, y - q.offset);
        let rest = q.size / dt;
        let (prefix, a) = (l1 / dt, l1 % dt);
        let (b, suffix) = (l2 / rest, l2 % rest);
        match comp.mul_local(a, b) {
            None => Product::Zero,
            Some((e, c)) => Product::Monomial(Term {
                exponent: e * (self.field.modulus() / comp.cocycle().modulus()),
                index: self.walks[w].offset + (prefix * dt + c) * rest + suffix,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::TwoCocycle;

    fn m1(g: &GroupTable) -> GradedSimple {
        let h = Subgroup::trivial(g);
        GradedSimple::new(g, &h, &TwoCocycle::trivial(&h, 2).unwrap(), &[0]).unwrap()
    }

    #[test]
    fn upper_triangular_in_disguise() {
        let g = GroupTable::cyclic(1).unwrap();
        let a = GluedAlgebra::new(
            &g,
            &[m1(&g), m1(&g)],
            &[Edge { from: 0, to: 1, degree: 0 }],
            2,
            DEFAULT_BASIS_CAP,
        )
        .unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.radical_basis(), vec![2]);
        // e1 * d = d, d * e2 = d, d * e1 = 0
        assert_eq!(a.mul_basis(0, 2).monomial().unwrap().index, 2);
        assert_eq!(a.mul_basis(2, 1).monomial().unwrap().index, 2);
        assert!(a.mul_basis(2, 0).is_zero());
    }

    #[test]
    fn truncation_kills_long_paths() {
        let g = GroupTable::cyclic(2).unwrap();
        let edges = [Edge { from: 0, to: 0, degree: 1 }];
        let a3 = GluedAlgebra::new(&g, &[m1(&g)], &edges, 3, DEFAULT_BASIS_CAP).unwrap();
        let a2 = GluedAlgebra::new(&g, &[m1(&g)], &edges, 2, DEFAULT_BASIS_CAP).unwrap();
        assert_eq!(a3.dim(), 3);
        let d = a3.path_index(1, &[0, 0]).unwrap();
        let dd = a3.mul_basis(d, d).monomial().unwrap();
        assert_eq!(a3.ends(dd.index).length, 2);
        assert_eq!(a3.degree(dd.index), 0);
        let d2 = a2.path_index(1, &[0, 0]).unwrap();
        assert!(a2.mul_basis(d2, d2).is_zero());
    }

    #[test]
    fn cap_is_enforced() {
        let g = GroupTable::cyclic(1).unwrap();
        let edges = [Edge { from: 0, to: 0, degree: 0 }];
        let err = GluedAlgebra::new(&g, &[m1(&g)], &edges, 10, 5).unwrap_err();
        assert!(matches!(err, Error::BasisCap { .. }));
    }

    #[test]
    fn bad_edge_is_rejected() {
        let g = GroupTable::cyclic(2).unwrap();
        let err = GluedAlgebra::new(&g, &[m1(&g)], &[Edge { from: 0, to: 3, degree: 0 }], 2, 100).unwrap_err();
        assert!(matches!(err, Error::InvalidEdge { index: 0, .. }));
    }
}
