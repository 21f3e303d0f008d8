//! Multi-threaded walk search over a shared memo table.

use std::sync::atomic::{AtomicUsize, Ordering};

use dashmap::DashMap;
use rayon::prelude::*;

use gradedexp_core::expconj::{
    exp_conj_sub_using, reconstruct, value_from, BlockGraph, ExpConjResult, Solution, StateKey, WalkMemo,
    DEFAULT_SEARCH_CAP,
};
use gradedexp_core::algebra::GradedAlgebra;
use gradedexp_core::glued::GluedAlgebra;
use gradedexp_core::group::Subgroup;
use gradedexp_core::Result;

/// Concurrent memo. Values for a key are deterministic, so a lost race
/// only repeats work.
#[derive(Default)]
pub struct SharedMemo {
    map: DashMap<StateKey, usize>,
    len: AtomicUsize,
}

impl WalkMemo for SharedMemo {
    fn get(&self, key: &StateKey) -> Option<usize> {
        self.map.get(key).map(|v| *v)
    }
    fn insert(&self, key: StateKey, value: usize) {
        if self.map.insert(key, value).is_none() {
            self.len.fetch_add(1, Ordering::Relaxed);
        }
    }
    fn len(&self) -> usize {
        self.len.load(Ordering::Relaxed)
    }
}

/// Searches from every start block in parallel, then reconstructs the
/// witness from the shared memo. Agrees with the sequential search.
pub fn solve_parallel(g: &BlockGraph, cap: usize) -> Result<Solution> {
    let memo = SharedMemo::default();
    let values = (0..g.blocks.len())
        .into_par_iter()
        .map(|b| value_from(g, &memo, cap, b))
        .collect::<Result<Vec<_>>>()?;
    let value = values.into_iter().max().unwrap_or(0);
    reconstruct(g, &memo, cap, value)
}

pub fn exp_conj_sub_parallel(a: &GluedAlgebra, k: &Subgroup) -> Result<ExpConjResult> {
    exp_conj_sub_using(a, k, |g| solve_parallel(g, DEFAULT_SEARCH_CAP))
}

pub fn exp_conj_parallel(a: &GluedAlgebra) -> Result<ExpConjResult> {
    exp_conj_sub_parallel(a, &Subgroup::whole(a.grading()))
}
