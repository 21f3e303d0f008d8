//! The enriched monomial behind the subgroup inequality and the counting
//! argument built on it.
//!
//! Starting from a certified product `z_1 v_1 z_2 ... v_n z_{n+1}` over
//! distinct components, every `z_t` is replaced by a monomial that passes
//! through all matrix units of its component and, at each diagonal
//! position, through all of `H`. The prefix degrees of the result are then
//! parsed against left cosets of a subgroup `K`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use crate::algebra::{mul_terms, GradedAlgebra, Term};
use crate::decomposition::{k_simple_blocks, KDecomposition};
use crate::error::{Error, Result};
use crate::expconj::ExpConjResult;
use crate::glued::{GluedAlgebra, PathEnds};
use crate::group::Subgroup;
use crate::simple::GradedSimple;

/// Cells `(row, col)` of an `r x r` matrix ordered so that consecutive
/// elementary matrices compose, starting at row `i` and ending at column
/// `i` (zero-based). Their product is `e_{i,i}`.
///
/// This is an Eulerian circuit of the complete digraph with loops on `r`
/// vertices, found with Hierholzer's algorithm.
pub fn elementary_euler_monomial(r: usize, i: usize) -> Vec<(usize, usize)> {
    assert!(i < r, "start index out of range");
    let mut next = vec![0usize; r];
    let mut stack = vec![i];
    let mut circuit = Vec::with_capacity(r * r + 1);
    while let Some(&u) = stack.last() {
        if next[u] < r {
            stack.push(next[u]);
            next[u] += 1;
        } else {
            circuit.push(u);
            stack.pop();
        }
    }
    circuit.reverse();
    circuit.windows(2).map(|w| (w[0], w[1])).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    /// `u_h (x) e_{row,col}` in a component.
    Semisimple { component: usize, h: usize, row: usize, col: usize },
    Radical(PathEnds),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceFactor {
    pub term: Term,
    pub kind: FactorKind,
}

impl TraceFactor {
    /// Component and matrix index of the idempotent `u_e (x) e_{i,i}` that
    /// keeps this factor nonzero from the right.
    pub fn right_stop(&self) -> (usize, usize) {
        match self.kind {
            FactorKind::Semisimple { component, col, .. } => (component, col),
            FactorKind::Radical(e) => (e.target, e.target_col),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TraceMonomial<'a> {
    pub algebra: &'a GluedAlgebra,
    pub factors: Vec<TraceFactor>,
    /// Entry `l` is the degree of `b_1 ... b_{l+1}`.
    pub prefix_degrees: Vec<usize>,
    /// Entry `l` is the product `b_1 ... b_{l+1}`.
    pub prefix_products: Vec<Term>,
    /// Components in the order their blocks appear.
    pub components: Vec<usize>,
    /// Factor range of each component's expanded block.
    pub blocks: Vec<Range<usize>>,
}

impl TraceMonomial<'_> {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Degree of `b_{from+1} ... b_to` (zero-based half-open range).
    pub fn degree_of(&self, from: usize, to: usize) -> usize {
        let g = self.algebra.grading();
        let right = self.prefix_degrees[to - 1];
        if from == 0 {
            right
        } else {
            g.mul(g.inv(self.prefix_degrees[from - 1]), right)
        }
    }
}

fn semisimple(a: &GluedAlgebra, t: usize, h: usize, row: usize, col: usize) -> TraceFactor {
    let local = a.components()[t].index(h, row, col).expect("valid cell");
    TraceFactor {
        term: Term {
            exponent: 0,
            index: a.semisimple_index(t, local),
        },
        kind: FactorKind::Semisimple { component: t, h, row, col },
    }
}

/// The expanded block `X^_t` for component `t` starting and ending at
/// matrix index `c`.
pub fn expanded_block(a: &GluedAlgebra, t: usize, c: usize) -> Vec<TraceFactor> {
    let comp: &GradedSimple = &a.components()[t];
    let g = comp.group();
    let eta = comp.subgroup().elements();
    let mut out = Vec::new();
    for (i, j) in elementary_euler_monomial(comp.size(), c) {
        if i != j {
            out.push(semisimple(a, t, 0, i, j));
            continue;
        }
        let mut prev = 0;
        for &e in eta {
            out.push(semisimple(a, t, g.mul(g.inv(prev), e), i, i));
            out.push(semisimple(a, t, 0, i, i));
            prev = e;
        }
    }
    out
}

/// Builds the enriched monomial from a certified product for the whole
/// grading group.
pub fn build_lambda_hat<'a>(a: &'a GluedAlgebra, res: &ExpConjResult) -> Result<TraceMonomial<'a>> {
    for (b, block) in res.graph.blocks.iter().enumerate() {
        if block.dim != a.components()[block.component].dim() {
            return Err(Error::Invariant(format!("block {b} is not a whole component")));
        }
    }
    let w = &res.witness;
    if crate::algebra::mul_chain(a, &w.factors) != Some(w.product) {
        return Err(Error::Invariant("witness does not re-verify".into()));
    }
    // keep the first visit to each component; everything between two kept
    // factors is absorbed into one radical factor, and a tail that only
    // revisits components is dropped
    let mut kept: Vec<usize> = Vec::new();
    let mut zs: Vec<(usize, Term)> = Vec::new();
    for j in (0..w.factors.len()).step_by(2) {
        let comp = res.graph.blocks[w.blocks[j / 2]].component;
        if zs.iter().all(|(c, _)| *c != comp) {
            kept.push(j);
            zs.push((comp, w.factors[j]));
        }
    }
    let vs: Vec<Term> = kept
        .windows(2)
        .map(|p| {
            crate::algebra::mul_chain(a, &w.factors[p[0] + 1..p[1]])
                .ok_or_else(|| Error::Invariant("absorbed product vanished".into()))
        })
        .collect::<Result<_>>()?;

    let mut factors: Vec<TraceFactor> = Vec::new();
    let mut blocks = Vec::new();
    let mut components = Vec::new();
    for (t, &(comp, z)) in zs.iter().enumerate() {
        let col = a.components()[comp].decode(a.factors(z.index)[0]).col;
        if t > 0 {
            // v_{t-1} z_t becomes one radical factor
            let v = mul_terms(a, vs[t - 1], z).ok_or_else(|| Error::Invariant("v z product vanished".into()))?;
            factors.push(TraceFactor {
                term: v,
                kind: FactorKind::Radical(a.ends(v.index)),
            });
        }
        let start = factors.len();
        factors.extend(expanded_block(a, comp, col));
        blocks.push(start..factors.len());
        components.push(comp);
    }

    let mut prefix_products = Vec::with_capacity(factors.len());
    let mut acc: Option<Term> = None;
    for f in &factors {
        let next = match acc {
            None => f.term,
            Some(p) => mul_terms(a, p, f.term).ok_or_else(|| Error::Invariant("enriched monomial vanished".into()))?,
        };
        prefix_products.push(next);
        acc = Some(next);
    }
    let g = a.grading();
    let mut prefix_degrees = Vec::with_capacity(factors.len());
    let mut d = 0;
    for f in &factors {
        d = g.mul(d, a.degree(f.term.index));
        prefix_degrees.push(d);
    }
    for (p, &d) in prefix_products.iter().zip(&prefix_degrees) {
        if a.degree(p.index) != d {
            return Err(Error::Invariant("prefix degree mismatch".into()));
        }
    }
    Ok(TraceMonomial {
        algebra: a,
        factors,
        prefix_degrees,
        prefix_products,
        components,
        blocks,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaData {
    /// Prefix degrees with their minimal prefix length (1-based).
    pub omega: BTreeMap<usize, usize>,
    /// Left `K`-coset labels met by `omega`.
    pub pi: BTreeSet<usize>,
    /// Minimal-length representative of each coset in `pi`, ordered by
    /// length.
    pub omega0: Vec<usize>,
    /// Left coset label of each group element.
    pub coset_of: Vec<usize>,
}

impl OmegaData {
    pub fn mu(&self, g: usize) -> Option<usize> {
        self.omega.get(&g).copied()
    }
}

pub fn omega_sets(l: &TraceMonomial, k: &Subgroup) -> Result<OmegaData> {
    let coset_of = l.algebra.grading().left_coset_labels(k)?;
    let mut omega = BTreeMap::new();
    for (i, &d) in l.prefix_degrees.iter().enumerate() {
        omega.entry(d).or_insert(i + 1);
    }
    let mut best: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (&g, &mu) in &omega {
        let e = best.entry(coset_of[g]).or_insert((mu, g));
        if mu < e.0 {
            *e = (mu, g);
        }
    }
    let pi = best.keys().copied().collect();
    let mut reps: Vec<(usize, usize)> = best.into_values().collect();
    reps.sort_unstable();
    Ok(OmegaData {
        omega,
        pi,
        omega0: reps.into_iter().map(|(_, g)| g).collect(),
        coset_of,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KStop {
    pub component: usize,
    /// Matrix index of the idempotent `u_e (x) e_{i,i}`.
    pub index: usize,
    /// `K`-class of `index` in that component.
    pub class: usize,
    /// Degree of the `Sigma` blocks before this stop (`e` for the stop
    /// after `X_g`).
    pub k1: usize,
    /// Factor position (exclusive end) of the block.
    pub end: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GDecomposition {
    pub g: usize,
    pub x: Range<usize>,
    pub sigmas: Vec<Range<usize>>,
    pub y: Range<usize>,
    pub stops: Vec<KStop>,
}

/// Shortest `q > p` with `deg(b_{p+1} ... b_q)` in `K`.
fn next_k_block(l: &TraceMonomial, k: &Subgroup, p: usize) -> Option<usize> {
    (p + 1..=l.len()).find(|&q| k.contains(l.degree_of(p, q)))
}

/// Number of parses `X_g Sigma_1 ... Sigma_d Y(g)` satisfying the three
/// defining conditions, by exhaustive search.
pub fn count_parses(l: &TraceMonomial, k: &Subgroup, g: usize) -> usize {
    let d = l.len();
    // ways[p]: parses of b_{p+1} ... b_d into Sigma blocks and a tail
    let mut ways = vec![0usize; d + 1];
    for p in (0..=d).rev() {
        let mut n = 0;
        let mut first_k = None;
        for q in p + 1..=d {
            if k.contains(l.degree_of(p, q)) {
                first_k = Some(q);
                break;
            }
        }
        match first_k {
            // the tail may be taken here only if it has no K-prefix
            None => n += 1,
            Some(q) => n += ways[q],
        }
        ways[p] = n;
    }
    (1..=d)
        .filter(|&x| l.prefix_degrees[x - 1] == g && (1..x).all(|y| l.prefix_degrees[y - 1] != g))
        .map(|x| ways[x])
        .sum()
}

/// Component classes used for `K`-stops: one decomposition per component.
pub fn component_decompositions(a: &GluedAlgebra, k: &Subgroup) -> Result<Vec<KDecomposition>> {
    a.components().iter().map(|c| k_simple_blocks(c, k)).collect()
}

pub fn decompose_for(
    l: &TraceMonomial,
    k: &Subgroup,
    omega: &OmegaData,
    decs: &[KDecomposition],
    g: usize,
) -> Result<GDecomposition> {
    if !omega.omega0.contains(&g) {
        return Err(Error::OutOfRange(format!("{g} is not a minimal coset representative")));
    }
    let grp = l.algebra.grading();
    let mu = omega.mu(g).unwrap();
    let mut sigmas = Vec::new();
    let mut p = mu;
    while let Some(q) = next_k_block(l, k, p) {
        sigmas.push(p..q);
        p = q;
    }
    let mut stops = Vec::new();
    let mut k1 = 0;
    for (n, end) in core::iter::once(mu).chain(sigmas.iter().map(|r| r.end)).enumerate() {
        if n > 0 {
            let r = &sigmas[n - 1];
            k1 = grp.mul(k1, l.degree_of(r.start, r.end));
        }
        let (component, index) = l.factors[end - 1].right_stop();
        stops.push(KStop {
            component,
            index,
            class: decs[component].class_of_index[index],
            k1,
            end,
        });
    }
    Ok(GDecomposition {
        g,
        x: 0..mu,
        sigmas,
        y: p..l.len(),
        stops,
    })
}

/// Checks the three parse conditions and the uniqueness of each `K`-stop.
pub fn verify_decomposition(l: &TraceMonomial, k: &Subgroup, d: &GDecomposition) -> Result<()> {
    let fail = |m: String| Err(Error::Invariant(format!("decomposition for {}: {m}", d.g)));
    let a = l.algebra;
    if l.degree_of(0, d.x.end) != d.g || (1..d.x.end).any(|q| l.degree_of(0, q) == d.g) {
        return fail("X_g is not a minimal g-prefix".into());
    }
    for r in &d.sigmas {
        if !k.contains(l.degree_of(r.start, r.end)) || (r.start + 1..r.end).any(|q| k.contains(l.degree_of(r.start, q))) {
            return fail(format!("block {r:?} is not a minimal K-monomial"));
        }
    }
    if (d.y.start + 1..=d.y.end).any(|q| k.contains(l.degree_of(d.y.start, q))) {
        return fail("Y(g) has a K-prefix".into());
    }
    if count_parses(l, k, d.g) != 1 {
        return fail(format!("{} parses instead of exactly one", count_parses(l, k, d.g)));
    }
    for s in &d.stops {
        let prod = l.prefix_products[s.end - 1];
        let mut nonzero = Vec::new();
        for (t, c) in a.components().iter().enumerate() {
            for i in 0..c.size() {
                let e = Term {
                    exponent: 0,
                    index: a.semisimple_index(t, c.idempotent(i)),
                };
                if mul_terms(a, prod, e).is_some() {
                    nonzero.push((t, i));
                }
            }
        }
        if nonzero != [(s.component, s.index)] {
            return fail(format!("K-stop at {} is not unique: {nonzero:?}", s.end));
        }
    }
    Ok(())
}

/// One row of the visit table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisitRow {
    pub component: usize,
    pub class: usize,
    pub observed: usize,
    /// `|H g_i K| / |K|`.
    pub expected: usize,
    /// `|g_i^-1 H g_i ∩ K| pi^2`.
    pub block_dim: usize,
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct TraceAnalysis {
    pub omega: OmegaData,
    pub decompositions: Vec<GDecomposition>,
    pub visits: Vec<VisitRow>,
    pub checks: Vec<Check>,
}

impl TraceAnalysis {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Classes of component `t` visited by the decomposition for `g`.
fn visited(d: &GDecomposition, t: usize) -> BTreeSet<usize> {
    d.stops.iter().filter(|s| s.component == t).map(|s| s.class).collect()
}

pub fn verify_visit_counts(l: &TraceMonomial, k: &Subgroup) -> Result<TraceAnalysis> {
    let a = l.algebra;
    let grp = a.grading();
    let omega = omega_sets(l, k)?;
    let decs = component_decompositions(a, k)?;
    let mut decompositions = Vec::new();
    for &g in &omega.omega0 {
        let d = decompose_for(l, k, &omega, &decs, g)?;
        verify_decomposition(l, k, &d)?;
        decompositions.push(d);
    }
    let mut checks = Vec::new();
    let index = grp.order() / k.len();

    checks.push(Check {
        name: "omega0-bound",
        passed: omega.omega0.len() == omega.pi.len() && omega.omega0.len() <= index,
        detail: format!("|Omega0| = {}, [G:K] = {index}", omega.omega0.len()),
    });

    let mut visits = Vec::new();
    for &t in &l.components {
        let dec = &decs[t];
        for cls in dec.represented() {
            let observed = decompositions.iter().filter(|d| visited(d, t).contains(&cls.double_coset)).count();
            let expected = dec.partition.classes[cls.double_coset].len() / k.len();
            visits.push(VisitRow {
                component: t,
                class: cls.double_coset,
                observed,
                expected,
                block_dim: cls.block_dim,
            });
        }
    }
    let bad: Vec<&VisitRow> = visits.iter().filter(|v| v.observed != v.expected).collect();
    checks.push(Check {
        name: "visit-counts",
        passed: bad.is_empty(),
        detail: format!("{} classes, {} mismatched: {bad:?}", visits.len(), bad.len()),
    });

    // (I)(3): one class per component per decomposition
    let clash = decompositions
        .iter()
        .flat_map(|d| l.components.iter().map(move |&t| (d.g, t, visited(d, t))))
        .find(|(_, _, s)| s.len() > 1);
    checks.push(Check {
        name: "visits-I-3",
        passed: clash.is_none(),
        detail: match clash {
            None => "every decomposition stops in one class per component".into(),
            Some((g, t, s)) => format!("g = {g} stops in classes {s:?} of component {t}"),
        },
    });

    // (I)(4): every class of every visited component is determined
    let missing: Vec<(usize, usize)> = visits.iter().filter(|v| v.observed == 0).map(|v| (v.component, v.class)).collect();
    checks.push(Check {
        name: "visits-I-4",
        passed: missing.is_empty(),
        detail: format!("undetermined classes: {missing:?}"),
    });

    // (II)(1)-(3)
    let mut fail1 = Vec::new();
    let mut fail2 = Vec::new();
    let mut fail3 = Vec::new();
    for d in &decompositions {
        for s in &d.stops {
            let comp = &a.components()[s.component];
            let gi = comp.tuple()[s.index];
            let mut set = vec![false; grp.order()];
            let left = grp.mul(d.g, s.k1);
            for &h in comp.subgroup().elements() {
                let x = grp.mul(left, grp.conjugate(h, gi));
                for &kk in k.elements() {
                    set[grp.mul(x, kk)] = true;
                }
            }
            for other in &decompositions {
                let classes = visited(other, s.component);
                if set[other.g] && !classes.is_empty() && !classes.iter().all(|&c| c == s.class) {
                    fail1.push((d.g, s.end, other.g));
                }
                if classes.contains(&s.class) && !set[other.g] {
                    fail3.push((d.g, s.end, other.g));
                }
            }
            for x in grp.elements() {
                if set[x] && !omega.pi.contains(&omega.coset_of[x]) {
                    fail2.push((d.g, s.end, x));
                }
            }
        }
    }
    checks.push(Check {
        name: "visits-II-1",
        passed: fail1.is_empty(),
        detail: format!("violations (g, stop, g'): {fail1:?}"),
    });
    checks.push(Check {
        name: "visits-II-2",
        passed: fail2.is_empty(),
        detail: format!("unrepresented cosets (g, stop, x): {fail2:?}"),
    });
    checks.push(Check {
        name: "visits-II-3",
        passed: fail3.is_empty(),
        detail: format!("violations (g, stop, g'): {fail3:?}"),
    });

    // per-component aggregate inequality
    let mut agg_fail = Vec::new();
    for &t in &l.components {
        let lhs = omega.omega0.len() * a.components()[t].dim();
        let sum: usize = decompositions
            .iter()
            .map(|d| {
                visited(d, t)
                    .iter()
                    .next()
                    .map_or(0, |&c| decs[t].classes[c].block_dim)
            })
            .sum();
        if lhs > index * index * sum {
            agg_fail.push((t, lhs, index * index * sum));
        }
    }
    checks.push(Check {
        name: "aggregate-inequality",
        passed: agg_fail.is_empty(),
        detail: format!("violations (component, lhs, rhs): {agg_fail:?}"),
    });

    Ok(TraceAnalysis {
        omega,
        decompositions,
        visits,
        checks,
    })
}

/// The closing chain of inequalities for one graded-simple algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalityChain {
    /// `pi_j` for every `H`-`K` double coset.
    pub pi: Vec<usize>,
    pub h_order: usize,
    pub index: usize,
    pub m: usize,
    /// `|H g_j K| / |K| * |g_j^-1 H g_j ∩ K| = |H|` for every `j`.
    pub group_identity: bool,
    /// `|H| (sum pi)^2` and `[G:K] sum_j (|H g_j K|/|K|) |g_j^-1 H g_j ∩ K| pi_j^2`.
    pub a: (usize, usize),
    /// `(sum pi)^2` and `[G:K] sum pi^2`.
    pub b: (usize, usize),
    /// `(sum pi)^2` and `m sum pi^2`.
    pub c: (usize, usize),
    pub all_equal: bool,
}

impl InequalityChain {
    pub fn holds(&self) -> bool {
        self.group_identity
            && self.a.0 <= self.a.1
            && self.b.0 <= self.b.1
            && self.c.0 <= self.c.1
            && self.m <= self.index
            && ((self.c.0 == self.c.1) == self.all_equal)
    }
}

pub fn final_inequality_report(b: &GradedSimple, k: &Subgroup) -> Result<InequalityChain> {
    let g = b.group();
    let dec = k_simple_blocks(b, k)?;
    let h = b.subgroup().len();
    let index = g.order() / k.len();
    let m = dec.classes.len();
    let pi = dec.pi_vector();
    let sum: usize = pi.iter().sum();
    let sum_sq: usize = pi.iter().map(|p| p * p).sum();
    let mut identity = true;
    let mut weighted = 0;
    for cls in &dec.classes {
        let visits = dec.partition.classes[cls.double_coset].len() / k.len();
        identity &= visits * cls.intersection_order == h;
        weighted += visits * cls.intersection_order * cls.pi * cls.pi;
    }
    Ok(InequalityChain {
        all_equal: pi.iter().all(|&p| p == pi[0]),
        pi,
        h_order: h,
        index,
        m,
        group_identity: identity,
        a: (h * sum * sum, index * weighted),
        b: (sum * sum, index * sum_sq),
        c: (sum * sum, m * sum_sq),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::TwoCocycle;
    use crate::expconj::exp_conj;
    use crate::glued::DEFAULT_BASIS_CAP;
    use crate::group::GroupTable;

    #[test]
    fn euler_monomials() {
        assert_eq!(elementary_euler_monomial(1, 0), vec![(0, 0)]);
        let m = elementary_euler_monomial(2, 0);
        assert_eq!(m.len(), 4);
        assert_eq!(m[0].0, 0);
        assert_eq!(m[3].1, 0);
    }

    #[test]
    fn z4_trace() {
        let g = GroupTable::cyclic(4).unwrap();
        let h = Subgroup::new(&g, &[0, 2]).unwrap();
        let b = GradedSimple::new(&g, &h, &TwoCocycle::trivial(&h, 2).unwrap(), &[0, 1]).unwrap();
        let a = GluedAlgebra::new(&g, &[b.clone()], &[], 1, DEFAULT_BASIS_CAP).unwrap();
        let res = exp_conj(&a).unwrap();
        let l = build_lambda_hat(&a, &res).unwrap();
        // 4 cells, the 2 diagonal ones expanded to 2|H| = 4 factors each
        assert_eq!(l.len(), 10);
        let an = verify_visit_counts(&l, &h).unwrap();
        assert!(an.all_passed(), "{:?}", an.failures().collect::<Vec<_>>());
        assert!(an.visits.iter().all(|v| v.observed == 1));
        let chain = final_inequality_report(&b, &h).unwrap();
        assert_eq!(chain.c, (4, 4));
        assert!(chain.holds());
    }

    #[test]
    fn omega_example() {
        // prefix degrees (1, 2, 3, 0) in Z4
        let g = GroupTable::cyclic(4).unwrap();
        let h = Subgroup::trivial(&g);
        let b = GradedSimple::new(&g, &h, &TwoCocycle::trivial(&h, 2).unwrap(), &[0]).unwrap();
        let a = GluedAlgebra::new(&g, &[b], &[crate::glued::Edge { from: 0, to: 0, degree: 1 }], 5, DEFAULT_BASIS_CAP)
            .unwrap();
        let d = a.path_index(1, &[0, 0]).unwrap();
        let f = TraceFactor {
            term: Term { exponent: 0, index: d },
            kind: FactorKind::Radical(a.ends(d)),
        };
        let l = TraceMonomial {
            algebra: &a,
            factors: vec![f; 4],
            prefix_degrees: vec![1, 2, 3, 0],
            prefix_products: Vec::new(),
            components: vec![0],
            blocks: vec![0..4],
        };
        let k = Subgroup::new(&g, &[0, 2]).unwrap();
        let o = omega_sets(&l, &k).unwrap();
        assert_eq!(o.omega.len(), 4);
        assert_eq!(o.omega0, vec![1, 2]);
        assert_eq!(o.mu(2), Some(2));
    }
}
