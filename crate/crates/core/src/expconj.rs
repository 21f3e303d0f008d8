//! The conjectural graded exponent of a glued algebra.
//!
//! A nonzero product `S_1 J S_2 J ... J S_k` of simple blocks and radical
//! elements corresponds to a walk in a small graph whose vertices are the
//! blocks and whose arrows are radical basis elements, the total path length
//! staying below the truncation `N`. The value is the largest dimension sum
//! of the distinct blocks visited by such a walk.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::algebra::{mul_chain, GradedAlgebra, Term};
use crate::decomposition::{k_simple_blocks, KDecomposition};
use crate::error::{Error, Result};
use crate::glued::GluedAlgebra;
use crate::group::Subgroup;
use crate::linalg::{charpoly, nullspace, squarefree_decomposition, Matrix};
use crate::scalar::CycScalar;

/// Default bound on memoized search states.
pub const DEFAULT_SEARCH_CAP: usize = 2_000_000;
/// Dimension bound for [`exp_conj_oracle`].
pub const ORACLE_DIM_CAP: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub component: usize,
    /// Class index inside the component (double coset index for subgroup
    /// blocks, 0 for whole components).
    pub class: usize,
    pub dim: usize,
}

/// Cheapest radical connection between two blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transition {
    pub from: usize,
    pub to: usize,
    pub length: usize,
    /// Radical basis element realizing the connection, when known.
    pub witness: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct BlockGraph {
    pub blocks: Vec<Block>,
    pub transitions: Vec<Transition>,
    /// Total radical length available to a walk.
    pub budget: usize,
    out: Vec<Vec<usize>>,
}

impl BlockGraph {
    /// Keeps only the shortest transition per ordered block pair (smallest
    /// witness among ties).
    pub fn new(blocks: Vec<Block>, candidates: Vec<Transition>, budget: usize) -> Result<Self> {
        if blocks.len() > 64 {
            return Err(Error::OutOfRange(format!("{} blocks, at most 64 supported", blocks.len())));
        }
        let mut best: BTreeMap<(usize, usize), Transition> = BTreeMap::new();
        for t in candidates {
            if t.length == 0 || t.length > budget {
                continue;
            }
            best.entry((t.from, t.to))
                .and_modify(|b| {
                    if (t.length, t.witness) < (b.length, b.witness) {
                        *b = t;
                    }
                })
                .or_insert(t);
        }
        let transitions: Vec<Transition> = best.into_values().collect();
        let mut out = vec![Vec::new(); blocks.len()];
        for (i, t) in transitions.iter().enumerate() {
            out[t.from].push(i);
        }
        let n = blocks.len();
        let longest = transitions.iter().map(|t| t.length).max().unwrap_or(0);
        // a walk never needs more than n - 1 arrows between consecutive new blocks
        let budget = budget.min(n * n * longest);
        Ok(BlockGraph {
            blocks,
            transitions,
            budget,
            out,
        })
    }

    fn full_mask(&self) -> u64 {
        if self.blocks.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.blocks.len()) - 1
        }
    }
}

/// `(block, remaining length, visited set)`.
pub type StateKey = (u16, u32, u64);

/// Memo table for the walk search. Values are deterministic, so concurrent
/// implementations may overwrite entries freely.
pub trait WalkMemo {
    fn get(&self, key: &StateKey) -> Option<usize>;
    fn insert(&self, key: StateKey, value: usize);
    fn len(&self) -> usize;
    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Default)]
pub struct LocalMemo {
    map: RefCell<BTreeMap<StateKey, usize>>,
}

impl WalkMemo for LocalMemo {
    fn get(&self, key: &StateKey) -> Option<usize> {
        self.map.borrow().get(key).copied()
    }
    fn insert(&self, key: StateKey, value: usize) {
        self.map.borrow_mut().insert(key, value);
    }
    fn len(&self) -> usize {
        self.map.borrow().len()
    }
}

/// Largest dimension gain of a walk continuing from `block` with `budget`
/// length left, `mask` being the blocks already counted.
pub fn gain<M: WalkMemo + ?Sized>(g: &BlockGraph, memo: &M, cap: usize, block: usize, budget: usize, mask: u64) -> Result<usize> {
    if mask == g.full_mask() || budget == 0 {
        return Ok(0);
    }
    let key = (block as u16, budget as u32, mask);
    if let Some(v) = memo.get(&key) {
        return Ok(v);
    }
    let mut best = 0;
    for &ti in &g.out[block] {
        let t = g.transitions[ti];
        if t.length > budget {
            continue;
        }
        let bit = 1u64 << t.to;
        let add = if mask & bit != 0 { 0 } else { g.blocks[t.to].dim };
        best = best.max(add + gain(g, memo, cap, t.to, budget - t.length, mask | bit)?);
    }
    memo.insert(key, best);
    if memo.len() > cap {
        return Err(Error::SearchCap(cap));
    }
    Ok(best)
}

/// Value of a walk starting at `block`.
pub fn value_from<M: WalkMemo + ?Sized>(g: &BlockGraph, memo: &M, cap: usize, block: usize) -> Result<usize> {
    Ok(g.blocks[block].dim + gain(g, memo, cap, block, g.budget, 1u64 << block)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub value: usize,
    /// Distinct blocks in order of first visit.
    pub sequence: Vec<usize>,
    /// Every block on the walk, repeats included.
    pub path: Vec<usize>,
    /// Transition taken between consecutive entries of `path`.
    pub steps: Vec<usize>,
}

/// Rebuilds an optimal walk whose first-visit sequence is lexicographically
/// smallest, given the optimum value.
pub fn reconstruct<M: WalkMemo + ?Sized>(g: &BlockGraph, memo: &M, cap: usize, value: usize) -> Result<Solution> {
    if g.blocks.is_empty() {
        return Ok(Solution {
            value: 0,
            sequence: Vec::new(),
            path: Vec::new(),
            steps: Vec::new(),
        });
    }
    let mut start = None;
    for b in 0..g.blocks.len() {
        if value_from(g, memo, cap, b)? == value {
            start = Some(b);
            break;
        }
    }
    let start = start.ok_or_else(|| Error::Invariant("no walk attains the optimum".into()))?;
    let mut mask = 1u64 << start;
    let mut need = value - g.blocks[start].dim;
    let mut sequence = vec![start];
    // (block, remaining length, steps so far)
    let mut frontier: Vec<(usize, usize, Vec<usize>)> = vec![(start, g.budget, Vec::new())];
    while need > 0 {
        let mut found: Vec<(usize, usize, Vec<usize>)> = Vec::new();
        let mut best_block = usize::MAX;
        for (b0, l0, steps0) in &frontier {
            // breadth-first through already visited blocks
            let mut seen: BTreeMap<(usize, usize), ()> = BTreeMap::new();
            let mut queue = vec![(*b0, *l0, steps0.clone())];
            seen.insert((*b0, *l0), ());
            let mut qi = 0;
            while qi < queue.len() {
                let (b, l, steps) = queue[qi].clone();
                qi += 1;
                for &ti in &g.out[b] {
                    let t = g.transitions[ti];
                    if t.length > l {
                        continue;
                    }
                    let rest = l - t.length;
                    let bit = 1u64 << t.to;
                    let mut s = steps.clone();
                    s.push(ti);
                    if mask & bit != 0 {
                        if seen.insert((t.to, rest), ()).is_none() {
                            queue.push((t.to, rest, s));
                        }
                    } else if t.to <= best_block
                        && g.blocks[t.to].dim + gain(g, memo, cap, t.to, rest, mask | bit)? == need
                    {
                        if t.to < best_block {
                            best_block = t.to;
                            found.clear();
                        }
                        if !found.iter().any(|(_, r, _)| *r == rest) {
                            found.push((t.to, rest, s));
                        }
                    }
                }
            }
        }
        if best_block == usize::MAX {
            return Err(Error::Invariant("walk reconstruction stalled".into()));
        }
        mask |= 1u64 << best_block;
        need -= g.blocks[best_block].dim;
        sequence.push(best_block);
        frontier = found;
    }
    let steps = frontier.swap_remove(0).2;
    let mut path = vec![start];
    for &ti in &steps {
        path.push(g.transitions[ti].to);
    }
    Ok(Solution {
        value,
        sequence,
        path,
        steps,
    })
}

/// Sequential search with a fresh memo.
pub fn solve(g: &BlockGraph, cap: usize) -> Result<Solution> {
    let memo = LocalMemo::default();
    let mut value = 0;
    for b in 0..g.blocks.len() {
        value = value.max(value_from(g, &memo, cap, b)?);
    }
    reconstruct(g, &memo, cap, value)
}

/// Blocks of `A_K` and their radical connections.
///
/// Each graded-simple component splits into `K`-simple blocks, one per
/// represented double coset; a `K`-degree radical basis element joins the
/// block of its source row to the block of its target column.
pub fn block_graph(a: &GluedAlgebra, k: &Subgroup) -> Result<(BlockGraph, Vec<KDecomposition>)> {
    let mut blocks = Vec::new();
    let mut decs = Vec::new();
    let mut block_of: Vec<BTreeMap<usize, usize>> = Vec::new();
    for (t, c) in a.components().iter().enumerate() {
        let dec = k_simple_blocks(c, k)?;
        let mut ids = BTreeMap::new();
        for cls in dec.represented() {
            ids.insert(cls.double_coset, blocks.len());
            blocks.push(Block {
                component: t,
                class: cls.double_coset,
                dim: cls.block_dim,
            });
        }
        block_of.push(ids);
        decs.push(dec);
    }
    let mut candidates = Vec::new();
    for v in a.radical_basis() {
        if !k.contains(a.degree(v)) {
            continue;
        }
        let e = a.ends(v);
        let from = block_of[e.source][&decs[e.source].class_of_index[e.source_row]];
        let to = block_of[e.target][&decs[e.target].class_of_index[e.target_col]];
        candidates.push(Transition {
            from,
            to,
            length: e.length,
            witness: Some(v),
        });
    }
    let g = BlockGraph::new(blocks, candidates, a.truncation() - 1)?;
    Ok((g, decs))
}

/// A concrete nonzero product realizing the value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// `z_0, v_1, z_1, ..., v_s, z_s` with `z_j` semisimple and `v_j`
    /// radical basis elements of the glued algebra.
    pub factors: Vec<Term>,
    /// Block of each `z_j`.
    pub blocks: Vec<usize>,
    pub product: Term,
}

#[derive(Clone, Debug)]
pub struct ExpConjResult {
    pub value: usize,
    pub graph: BlockGraph,
    pub solution: Solution,
    pub witness: Witness,
}

impl ExpConjResult {
    /// Components of the distinct blocks, in first-visit order.
    pub fn component_sequence(&self) -> Vec<usize> {
        self.solution.sequence.iter().map(|&b| self.graph.blocks[b].component).collect()
    }
}

/// Picks `u_h (x) e_{row,col}` of `K`-degree in component `t`.
fn semisimple_factor(a: &GluedAlgebra, k: &Subgroup, t: usize, row: usize, col: usize) -> Result<usize> {
    let c = &a.components()[t];
    let g = c.group();
    let h = c
        .subgroup()
        .elements()
        .iter()
        .copied()
        .find(|&x| k.contains(g.product([g.inv(c.tuple()[row]), x, c.tuple()[col]])))
        .ok_or_else(|| Error::Invariant(format!("no K-degree element at ({row}, {col}) of component {t}")))?;
    Ok(a.semisimple_index(t, c.index(h, row, col).unwrap()))
}

/// Builds and multiplies the concrete product along a solution's walk.
pub fn certify(a: &GluedAlgebra, k: &Subgroup, g: &BlockGraph, decs: &[KDecomposition], sol: &Solution) -> Result<Witness> {
    let s = sol.steps.len();
    let radicals: Vec<usize> = sol
        .steps
        .iter()
        .map(|&ti| g.transitions[ti].witness.expect("transition without witness"))
        .collect();
    let mut factors = Vec::with_capacity(2 * s + 1);
    for j in 0..=s {
        let block = g.blocks[sol.path[j]];
        let row = if j > 0 { Some(a.ends(radicals[j - 1]).target_col) } else { None };
        let col = if j < s { Some(a.ends(radicals[j]).source_row) } else { None };
        let (row, col) = match (row, col) {
            (Some(r), Some(c)) => (r, c),
            (Some(r), None) => (r, r),
            (None, Some(c)) => (c, c),
            (None, None) => {
                let rep = decs[block.component].classes[block.class].indices[0];
                (rep, rep)
            }
        };
        factors.push(Term {
            exponent: 0,
            index: semisimple_factor(a, k, block.component, row, col)?,
        });
        if j < s {
            factors.push(Term {
                exponent: 0,
                index: radicals[j],
            });
        }
    }
    for f in &factors {
        if !k.contains(a.degree(f.index)) {
            return Err(Error::Invariant(format!("witness factor b{} is not of K-degree", f.index)));
        }
    }
    let product = mul_chain(a, &factors).ok_or_else(|| Error::Invariant("witness product is zero".into()))?;
    Ok(Witness {
        factors,
        blocks: sol.path.clone(),
        product,
    })
}

/// `exp^Conj_K(A_K)` with a certificate.
pub fn exp_conj_sub_with_cap(a: &GluedAlgebra, k: &Subgroup, cap: usize) -> Result<ExpConjResult> {
    exp_conj_sub_using(a, k, |g| solve(g, cap))
}

/// Same as [`exp_conj_sub_with_cap`] with a caller-supplied walk search.
pub fn exp_conj_sub_using<F>(a: &GluedAlgebra, k: &Subgroup, search: F) -> Result<ExpConjResult>
where
    F: FnOnce(&BlockGraph) -> Result<Solution>,
{
    let (graph, decs) = block_graph(a, k)?;
    let solution = search(&graph)?;
    let witness = certify(a, k, &graph, &decs, &solution)?;
    Ok(ExpConjResult {
        value: solution.value,
        graph,
        solution,
        witness,
    })
}

pub fn exp_conj_sub(a: &GluedAlgebra, k: &Subgroup) -> Result<ExpConjResult> {
    exp_conj_sub_with_cap(a, k, DEFAULT_SEARCH_CAP)
}

/// `exp^Conj_G(A)`.
pub fn exp_conj(a: &GluedAlgebra) -> Result<ExpConjResult> {
    exp_conj_sub(a, &Subgroup::whole(a.grading()))
}

/// Basis elements of each `K`-simple block, as glued-algebra indices.
pub fn block_bases(a: &GluedAlgebra, k: &Subgroup, g: &BlockGraph, decs: &[KDecomposition]) -> Vec<Vec<usize>> {
    g.blocks
        .iter()
        .map(|b| {
            let c = &a.components()[b.component];
            let class_of = &decs[b.component].class_of_index;
            (0..c.dim())
                .filter(|&x| {
                    let d = c.decode(x);
                    class_of[d.row] == b.class && class_of[d.col] == b.class && k.contains(c.degree(x))
                })
                .map(|x| a.semisimple_index(b.component, x))
                .collect()
        })
        .collect()
}

/// Brute force: every sequence of distinct blocks, tested by multiplying
/// out all basis products `S_1 J S_2 J ... J S_k`.
pub fn exp_conj_oracle(a: &GluedAlgebra, k: &Subgroup) -> Result<usize> {
    if a.dim() > ORACLE_DIM_CAP {
        return Err(Error::BasisCap {
            size: a.dim(),
            cap: ORACLE_DIM_CAP,
        });
    }
    let (g, decs) = block_graph(a, k)?;
    let bases = block_bases(a, k, &g, &decs);
    let radical: Vec<usize> = a.radical_basis().into_iter().filter(|&v| k.contains(a.degree(v))).collect();
    let mut best = 0;
    for (s, basis) in bases.iter().enumerate() {
        let mut used = vec![false; bases.len()];
        used[s] = true;
        let reach: Vec<bool> = {
            let mut r = vec![false; a.dim()];
            for &x in basis {
                r[x] = true;
            }
            r
        };
        oracle_extend(a, &bases, &radical, &mut used, &reach, basis.len(), &mut best);
    }
    Ok(best)
}

fn oracle_extend(
    a: &GluedAlgebra,
    bases: &[Vec<usize>],
    radical: &[usize],
    used: &mut [bool],
    reach: &[bool],
    sum: usize,
    best: &mut usize,
) {
    *best = (*best).max(sum);
    let current: Vec<usize> = (0..a.dim()).filter(|&x| reach[x]).collect();
    let mut through = vec![false; a.dim()];
    for &x in &current {
        for &v in radical {
            if let Some(t) = a.mul_basis(x, v).monomial() {
                through[t.index] = true;
            }
        }
    }
    let through: Vec<usize> = (0..a.dim()).filter(|&x| through[x]).collect();
    if through.is_empty() {
        return;
    }
    for n in 0..bases.len() {
        if used[n] {
            continue;
        }
        let mut next = vec![false; a.dim()];
        let mut any = false;
        for &x in &through {
            for &y in &bases[n] {
                if let Some(t) = a.mul_basis(x, y).monomial() {
                    next[t.index] = true;
                    any = true;
                }
            }
        }
        if any {
            used[n] = true;
            oracle_extend(a, bases, radical, used, &next, sum + bases[n].len(), best);
            used[n] = false;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainInequality {
    pub lhs: usize,
    pub sub_value: usize,
    pub index: usize,
    pub rhs: usize,
    pub holds: bool,
}

/// `exp^Conj_G(A) <= [G:K]^2 exp^Conj_K(A_K)`.
pub fn check_main_inequality(a: &GluedAlgebra, k: &Subgroup) -> Result<MainInequality> {
    let lhs = exp_conj(a)?.value;
    let sub_value = exp_conj_sub(a, k)?.value;
    Ok(main_inequality(a, k, lhs, sub_value))
}

pub fn main_inequality(a: &GluedAlgebra, k: &Subgroup, lhs: usize, sub_value: usize) -> MainInequality {
    let index = a.grading().order() / k.len();
    let rhs = index * index * sub_value;
    MainInequality {
        lhs,
        sub_value,
        index,
        rhs,
        holds: lhs <= rhs,
    }
}

/// Dimensions of the `G/N`-simple components of one graded-simple
/// component, computed over the algebraic closure.
///
/// The components correspond to the primitive idempotents of the degree-`e`
/// part of the center, `Z(F^f H) ∩ span{u_h : h in H ∩ N}` tensored with
/// the identity matrix. A generic element `z` of that commutative algebra
/// separates the idempotents, and the multiplicity of each eigenvalue of
/// left multiplication by `z` on `F^f H` is the dimension of the matching
/// summand of `F^f H`.
pub fn quotient_component_dims(a: &GluedAlgebra, t: usize, normal: &Subgroup) -> Result<Vec<usize>> {
    let c = &a.components()[t];
    let g = c.group();
    let h = c.subgroup();
    let f = c.cocycle();
    let field = a.field();
    let scale = field.modulus() / f.modulus();
    let n = h.len();
    let r = c.size();
    let zeta = |e: u32| CycScalar::zeta_pow(field, e * scale);
    let hn: Vec<usize> = (0..n).filter(|&i| normal.contains(h.elements()[i])).collect();

    // rows (y, p): coefficient of u_{h_p} in z u_y - u_y z
    let mut m: Matrix = vec![vec![CycScalar::zero(field); hn.len()]; n * n];
    for y in 0..n {
        let hy = h.elements()[y];
        for (col, &x) in hn.iter().enumerate() {
            let hx = h.elements()[x];
            let p1 = h.position(g.mul(hx, hy)).unwrap();
            let p2 = h.position(g.mul(hy, hx)).unwrap();
            let v1 = zeta(f.value_at(x, y));
            let v2 = zeta(f.value_at(y, x));
            m[y * n + p1][col] = &m[y * n + p1][col] + &v1;
            m[y * n + p2][col] = &m[y * n + p2][col] - &v2;
        }
    }
    let center = nullspace(field, &m, hn.len());
    let k = center.len();
    if k == 1 {
        return Ok(vec![n * r * r]);
    }
    for attempt in 1..64i64 {
        // z = sum_j w_j b_j with w_j = attempt^j + j
        let mut coeff = vec![CycScalar::zero(field); n];
        let mut w = 1i64;
        for (j, b) in center.iter().enumerate() {
            w = w.wrapping_mul(attempt).wrapping_add(j as i64) % 1_000_003;
            let wj = CycScalar::from_int(field, w);
            for (col, &x) in hn.iter().enumerate() {
                coeff[x] = &coeff[x] + &(&wj * &b[col]);
            }
        }
        // left multiplication by z on F^f H
        let mut lm: Matrix = vec![vec![CycScalar::zero(field); n]; n];
        for y in 0..n {
            for x in 0..n {
                if coeff[x].is_zero() {
                    continue;
                }
                let p = h.position(g.mul(h.elements()[x], h.elements()[y])).unwrap();
                lm[p][y] = &lm[p][y] + &(&coeff[x] * &zeta(f.value_at(x, y)));
            }
        }
        let factors = squarefree_decomposition(&charpoly(field, &lm));
        let distinct: usize = factors.iter().map(|(_, p)| p.len() - 1).sum();
        if distinct == k {
            let mut dims = Vec::new();
            for (mult, p) in factors {
                for _ in 0..p.len() - 1 {
                    dims.push(mult * r * r);
                }
            }
            dims.sort_unstable();
            return Ok(dims);
        }
    }
    Err(Error::Invariant("no separating central element found".into()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monotonicity {
    pub graded_value: usize,
    pub quotient_value: usize,
    pub quotient_order: usize,
    /// `G/N`-simple component dimensions of each graded-simple component.
    pub quotient_components: Vec<Vec<usize>>,
    pub holds: bool,
}

/// Compares `exp^Conj_G(A)` with `exp^Conj_{G/N}(A)`, the latter computed
/// from the `G/N`-simple decomposition of the regraded algebra.
///
/// Every `G/N`-simple summand of a component is reached by every radical
/// path into or out of that component, so the quotient walk graph joins all
/// summands of `t` to all summands of `t'` along each quiver edge.
pub fn check_monotonicity(a: &GluedAlgebra, normal: &Subgroup) -> Result<Monotonicity> {
    let regraded = a.regrade_quotient(normal)?;
    let graded_value = exp_conj(a)?.value;
    let mut blocks = Vec::new();
    let mut of_component: Vec<Vec<usize>> = Vec::new();
    let mut quotient_components = Vec::new();
    for t in 0..a.components().len() {
        let dims = quotient_component_dims(a, t, normal)?;
        let ids = dims
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                blocks.push(Block {
                    component: t,
                    class: j,
                    dim: d,
                });
                blocks.len() - 1
            })
            .collect();
        of_component.push(ids);
        quotient_components.push(dims);
    }
    let mut candidates = Vec::new();
    for e in a.edges() {
        for &x in &of_component[e.from] {
            for &y in &of_component[e.to] {
                candidates.push(Transition {
                    from: x,
                    to: y,
                    length: 1,
                    witness: None,
                });
            }
        }
    }
    let graph = BlockGraph::new(blocks, candidates, a.truncation() - 1)?;
    let quotient_value = solve(&graph, DEFAULT_SEARCH_CAP)?.value;
    Ok(Monotonicity {
        graded_value,
        quotient_value,
        quotient_order: regraded.grading().order(),
        quotient_components,
        holds: graded_value >= quotient_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::TwoCocycle;
    use crate::glued::{Edge, DEFAULT_BASIS_CAP};
    use crate::group::GroupTable;
    use crate::simple::GradedSimple;

    fn simple(g: &GroupTable, h: &[usize], tuple: &[usize]) -> GradedSimple {
        let h = Subgroup::new(g, h).unwrap();
        GradedSimple::new(g, &h, &TwoCocycle::trivial(&h, 2).unwrap(), tuple).unwrap()
    }

    #[test]
    fn upper_triangular_value_is_two() {
        let g = GroupTable::cyclic(1).unwrap();
        let m1 = simple(&g, &[0], &[0]);
        let a = GluedAlgebra::new(&g, &[m1.clone(), m1], &[Edge { from: 0, to: 1, degree: 0 }], 2, DEFAULT_BASIS_CAP)
            .unwrap();
        let r = exp_conj(&a).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.component_sequence(), vec![0, 1]);
        assert_eq!(r.witness.factors.len(), 3);
        assert_eq!(exp_conj_oracle(&a, &Subgroup::whole(&g)).unwrap(), 2);
    }

    #[test]
    fn z4_example_is_tight() {
        let g = GroupTable::cyclic(4).unwrap();
        let b = simple(&g, &[0, 2], &[0, 1]);
        let a = GluedAlgebra::new(&g, &[b], &[], 1, DEFAULT_BASIS_CAP).unwrap();
        let k = Subgroup::new(&g, &[0, 2]).unwrap();
        let rep = check_main_inequality(&a, &k).unwrap();
        assert_eq!((rep.lhs, rep.rhs, rep.index, rep.holds), (8, 8, 2, true));
        assert_eq!(exp_conj_oracle(&a, &k).unwrap(), 2);
    }

    #[test]
    fn disconnected_components_take_the_max() {
        let g = GroupTable::cyclic(2).unwrap();
        let a = GluedAlgebra::new(
            &g,
            &[simple(&g, &[0], &[0]), simple(&g, &[0, 1], &[0, 1])],
            &[],
            3,
            DEFAULT_BASIS_CAP,
        )
        .unwrap();
        assert_eq!(exp_conj(&a).unwrap().value, 8);
    }

    #[test]
    fn group_algebra_splits_under_full_quotient() {
        let g = GroupTable::cyclic(4).unwrap();
        let a = GluedAlgebra::new(&g, &[simple(&g, &[0, 1, 2, 3], &[0])], &[], 1, DEFAULT_BASIS_CAP).unwrap();
        let m = check_monotonicity(&a, &Subgroup::whole(&g)).unwrap();
        assert_eq!(m.quotient_components, vec![vec![1, 1, 1, 1]]);
        assert_eq!((m.graded_value, m.quotient_value), (4, 1));
        let m = check_monotonicity(&a, &Subgroup::trivial(&g)).unwrap();
        assert_eq!((m.graded_value, m.quotient_value), (4, 4));
    }

    #[test]
    fn twisted_klein_stays_simple() {
        // F^f V4 with the nontrivial class is M_2(F): no splitting at all
        let g = GroupTable::catalog("Z2xZ2").unwrap();
        let h = Subgroup::whole(&g);
        let f = TwoCocycle::klein_nontrivial(&g, &h).unwrap();
        let b = GradedSimple::new(&g, &h, &f, &[0]).unwrap();
        let a = GluedAlgebra::new(&g, &[b], &[], 1, DEFAULT_BASIS_CAP).unwrap();
        let m = check_monotonicity(&a, &h).unwrap();
        assert_eq!(m.quotient_components, vec![vec![4]]);
    }
}
