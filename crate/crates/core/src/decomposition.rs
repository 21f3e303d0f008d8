//! The `K`-component of a graded-simple algebra and its splitting into
//! `K`-simple blocks indexed by `H`-`K` double cosets.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{GradedAlgebra, Term};
use crate::cocycle::TwoCocycle;
use crate::error::{Error, Result};
use crate::group::{DoubleCosetPartition, GroupTable, Subgroup};
use crate::simple::GradedSimple;

/// Basis elements `u_h (x) e_{i,j}` with `g_i^-1 h g_j` in `k`.
pub fn k_basis(b: &GradedSimple, k: &Subgroup) -> Vec<usize> {
    (0..b.dim()).filter(|&x| k.contains(b.degree(x))).collect()
}

/// One `H`-`K` double coset and the tuple indices falling into it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    /// Index of the double coset in the partition.
    pub double_coset: usize,
    /// Zero-based tuple indices `i` with `g_i` in this double coset.
    pub indices: Vec<usize>,
    pub pi: usize,
    /// `|g^-1 H g ∩ K|` for any `g` in the double coset.
    pub intersection_order: usize,
    /// `g_i^-1 H g_i ∩ K` for the representative index; absent when
    /// `pi = 0`.
    pub intersection: Option<Subgroup>,
    /// Translator `h_t` for each entry of `indices`.
    pub translators: Vec<usize>,
    /// `K`-grading tuple `g_i^-1 h_t g_t` for each entry of `indices`.
    pub k_tuple: Vec<usize>,
    /// `|g_i^-1 H g_i ∩ K| * pi^2`.
    pub block_dim: usize,
}

impl KClass {
    /// Smallest tuple index in the class.
    pub fn representative(&self) -> Option<usize> {
        self.indices.first().copied()
    }
}

#[derive(Clone, Debug)]
pub struct KDecomposition {
    pub k: Subgroup,
    pub partition: DoubleCosetPartition,
    /// One entry per double coset, including those with `pi = 0`.
    pub classes: Vec<KClass>,
    /// Class (double coset index) of each tuple index.
    pub class_of_index: Vec<usize>,
}

impl KDecomposition {
    /// Classes with `pi > 0`.
    pub fn represented(&self) -> impl Iterator<Item = &KClass> {
        self.classes.iter().filter(|c| c.pi > 0)
    }

    pub fn pi_vector(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.pi).collect()
    }

    pub fn total_block_dim(&self) -> usize {
        self.classes.iter().map(|c| c.block_dim).sum()
    }
}

/// Partition of the tuple indices by `H g_i K`.
pub fn index_classes(b: &GradedSimple, k: &Subgroup) -> Result<(DoubleCosetPartition, Vec<usize>)> {
    let part = b.group().double_cosets(b.subgroup(), k)?;
    let of = b.tuple().iter().map(|&g| part.class_of[g]).collect();
    Ok((part, of))
}

/// First `h` in `H` (by index) with `g_i^-1 h g_t` in `K`.
fn translator(g: &GroupTable, h: &Subgroup, k: &Subgroup, gi: usize, gt: usize) -> Option<usize> {
    h.elements()
        .iter()
        .copied()
        .find(|&x| k.contains(g.product([g.inv(gi), x, gt])))
}

pub fn k_simple_blocks(b: &GradedSimple, k: &Subgroup) -> Result<KDecomposition> {
    let g = b.group();
    let h = b.subgroup();
    let (partition, class_of_index) = index_classes(b, k)?;
    let mut classes = Vec::with_capacity(partition.len());
    for (d, rep) in partition.representatives.iter().enumerate() {
        let indices: Vec<usize> = (0..b.size()).filter(|&i| class_of_index[i] == d).collect();
        let pi = indices.len();
        let conj_rep = match indices.first() {
            Some(&i) => b.tuple()[i],
            None => *rep,
        };
        let inter = g.conjugate_subgroup(conj_rep, h)?.intersection(k);
        let mut translators = Vec::with_capacity(pi);
        let mut k_tuple = Vec::with_capacity(pi);
        if let Some(&i) = indices.first() {
            let gi = b.tuple()[i];
            for &t in &indices {
                let gt = b.tuple()[t];
                let ht = if t == i {
                    0
                } else {
                    translator(g, h, k, gi, gt).ok_or_else(|| {
                        Error::Invariant(format!("no translator for indices {i} ~ {t}"))
                    })?
                };
                translators.push(ht);
                k_tuple.push(g.product([g.inv(gi), ht, gt]));
            }
        }
        classes.push(KClass {
            double_coset: d,
            block_dim: inter.len() * pi * pi,
            intersection_order: inter.len(),
            intersection: (pi > 0).then_some(inter),
            indices,
            pi,
            translators,
            k_tuple,
        });
    }
    Ok(KDecomposition {
        k: k.clone(),
        partition,
        classes,
        class_of_index,
    })
}

/// Explicit isomorphism of one `K`-simple block with
/// `F^{g(f)}(g^-1 H g ∩ K) (x) M_pi(F)`.
#[derive(Clone, Debug)]
pub struct BlockIsomorphism {
    /// The abstract block, graded by `K` viewed as a group on its own.
    pub target: GradedSimple,
    /// Embedding of `K`'s positions into the ambient group.
    pub k_embedding: Vec<usize>,
    /// `(source basis index, image)` for every basis element of the block.
    pub map: Vec<(usize, Term)>,
    pub pairs_checked: usize,
}

pub fn build_block_isomorphism(b: &GradedSimple, dec: &KDecomposition, class: usize) -> Result<BlockIsomorphism> {
    let g = b.group();
    let k = &dec.k;
    let cls = dec
        .classes
        .get(class)
        .ok_or_else(|| Error::OutOfRange(format!("class {class} of {}", dec.classes.len())))?;
    let i = cls
        .representative()
        .ok_or_else(|| Error::OutOfRange(format!("class {class} has no tuple index")))?;
    let gi = b.tuple()[i];
    let inter = cls.intersection.clone().expect("represented class");

    let (k_group, k_embedding) = k.as_group(g)?;
    let f = b.cocycle();
    let transported = f.conjugate(g, gi)?.restrict(&inter)?.reindex(k, &k_group)?;
    let k_local = |x: usize| k.position(x).expect("element of K");
    let inter_local = Subgroup::new(&k_group, &inter.elements().iter().map(|&x| k_local(x)).collect::<Vec<_>>())?;
    let tuple_local: Vec<usize> = cls.k_tuple.iter().map(|&x| k_local(x)).collect();
    let target = GradedSimple::with_field(&k_group, &inter_local, &transported, &tuple_local, b.field().clone())?;

    let m = b.field().modulus();
    let n = f.modulus();
    let scale = m / n;
    let mu_of = |t: usize| cls.indices.iter().position(|&x| x == t);
    let mut map = Vec::new();
    for x in 0..b.dim() {
        let sb = b.decode(x);
        let (mu, nu) = match (mu_of(sb.row), mu_of(sb.col)) {
            (Some(mu), Some(nu)) => (mu, nu),
            _ => continue,
        };
        if !k.contains(b.degree(x)) {
            continue;
        }
        let (ht, hk) = (cls.translators[mu], cls.translators[nu]);
        let hbar = g.product([ht, sb.h, g.inv(hk)]);
        // u_{h_t}^-1 u_{hbar} u_{h_k} = zeta^s u_h
        let ht_inv = g.inv(ht);
        let s = f.inverse_exponent(g, ht)? + f.value(ht_inv, hbar)? + f.value(g.mul(ht_inv, hbar), hk)?;
        let s = s % n;
        let v = g.conjugate(hbar, gi);
        let index = target
            .index(k_local(v), mu, nu)
            .ok_or_else(|| Error::Invariant(format!("{v} is not in the intersection subgroup")))?;
        map.push((
            x,
            Term {
                exponent: ((n - s) % n) * scale,
                index,
            },
        ));
    }

    if map.len() != target.dim() {
        return Err(Error::Invariant(format!(
            "block has {} basis elements, abstract block has dimension {}",
            map.len(),
            target.dim()
        )));
    }
    let mut hit = vec![false; target.dim()];
    for (_, t) in &map {
        if core::mem::replace(&mut hit[t.index], true) {
            return Err(Error::Invariant("block map is not injective".into()));
        }
    }
    let image_of = |x: usize| map.iter().find(|(s, _)| *s == x).map(|(_, t)| *t);
    let mut pairs = 0;
    for &(x, tx) in &map {
        if target.degree(tx.index) != k_local(b.degree(x)) {
            return Err(Error::Invariant(format!("block map changes the degree of b{x}")));
        }
        for &(y, ty) in &map {
            pairs += 1;
            let lhs = b.mul_basis(x, y).monomial().map(|p| {
                let img = image_of(p.index).expect("block is closed");
                Term {
                    exponent: (p.exponent + img.exponent) % m,
                    index: img.index,
                }
            });
            let rhs = crate::algebra::mul_terms(&target, tx, ty);
            if lhs != rhs {
                return Err(Error::Invariant(format!("block map is not multiplicative at (b{x}, b{y})")));
            }
        }
    }
    Ok(BlockIsomorphism {
        target,
        k_embedding,
        map,
        pairs_checked: pairs,
    })
}

/// Cocycle transported to `x^-1 H x` and restricted to `K`, re-indexed
/// within `K`.
pub fn block_cocycle(b: &GradedSimple, x: usize, k: &Subgroup) -> Result<TwoCocycle> {
    let g = b.group();
    let inter = g.conjugate_subgroup(x, b.subgroup())?.intersection(k);
    let (k_group, _) = k.as_group(g)?;
    b.cocycle().conjugate(g, x)?.restrict(&inter)?.reindex(k, &k_group)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_example() -> (GradedSimple, Subgroup) {
        let g = GroupTable::cyclic(4).unwrap();
        let h = Subgroup::new(&g, &[0, 2]).unwrap();
        let f = TwoCocycle::trivial(&h, 2).unwrap();
        (GradedSimple::new(&g, &h, &f, &[0, 1]).unwrap(), h)
    }

    #[test]
    fn z4_example_blocks() {
        let (b, k) = z4_example();
        let kb = k_basis(&b, &k);
        let expect: Vec<usize> = [(0, 0, 0), (2, 0, 0), (0, 1, 1), (2, 1, 1)]
            .iter()
            .map(|&(h, i, j)| b.index(h, i, j).unwrap())
            .collect();
        let mut sorted = expect.clone();
        sorted.sort();
        assert_eq!(kb, sorted);
        let dec = k_simple_blocks(&b, &k).unwrap();
        assert_eq!(dec.pi_vector(), vec![1, 1]);
        assert_eq!(dec.classes.iter().map(|c| c.block_dim).collect::<Vec<_>>(), vec![2, 2]);
        for c in 0..2 {
            let iso = build_block_isomorphism(&b, &dec, c).unwrap();
            assert_eq!(iso.target.dim(), 2);
            assert_eq!(iso.target.subgroup().len(), 2);
        }
    }

    #[test]
    fn klein_twist_survives_transport() {
        let g = GroupTable::catalog("Z2xZ4").unwrap();
        let h = g.subgroup_closure(&[4, 2]).unwrap();
        assert_eq!(h.len(), 4);
        let f = TwoCocycle::klein_nontrivial(&g, &h).unwrap();
        let b = GradedSimple::new(&g, &h, &f, &[0, 1, 5]).unwrap();
        for k in g.all_subgroups() {
            let dec = k_simple_blocks(&b, &k).unwrap();
            assert_eq!(dec.total_block_dim(), k_basis(&b, &k).len());
            for (c, cls) in dec.classes.iter().enumerate() {
                if cls.pi > 0 {
                    build_block_isomorphism(&b, &dec, c).unwrap();
                }
            }
        }
    }
}
