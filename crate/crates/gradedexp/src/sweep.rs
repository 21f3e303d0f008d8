//! Randomized sweeps: generate instances, run every check on every chosen
//! subgroup, and collect per-instance records in seed order.

use std::time::Instant;

use rayon::prelude::*;

use gradedexp_core::decomposition::{build_block_isomorphism, k_basis, k_simple_blocks};
use gradedexp_core::expconj::{exp_conj, exp_conj_oracle, exp_conj_sub, main_inequality, MainInequality, ORACLE_DIM_CAP};
use gradedexp_core::glued::GluedAlgebra;
use gradedexp_core::group::Subgroup;
use gradedexp_core::trace::{build_lambda_hat, verify_visit_counts, Check};
use gradedexp_core::algebra::GradedAlgebra;

use crate::generate::{generate_instance, Profile};
use crate::instance::InstanceSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupMode {
    /// Every subgroup of the grading group.
    All,
    /// Only the normal subgroups.
    Normal,
    /// Only `{e}` and `G`.
    Extremes,
}

impl SubgroupMode {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "all" => Some(SubgroupMode::All),
            "normal" => Some(SubgroupMode::Normal),
            "extremes" => Some(SubgroupMode::Extremes),
            _ => None,
        }
    }

    pub fn subgroups(self, a: &GluedAlgebra) -> Vec<Subgroup> {
        let g = a.grading();
        match self {
            SubgroupMode::All => g.all_subgroups(),
            SubgroupMode::Normal => g.all_subgroups().into_iter().filter(|k| g.is_normal(k)).collect(),
            SubgroupMode::Extremes => {
                let mut v = vec![Subgroup::trivial(g)];
                if g.order() > 1 {
                    v.push(Subgroup::whole(g));
                }
                v
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checks {
    pub oracle: bool,
    pub bookkeeping: bool,
    pub trace: bool,
}

impl Checks {
    pub const ALL: Checks = Checks {
        oracle: true,
        bookkeeping: true,
        trace: true,
    };
    pub const INEQUALITY: Checks = Checks {
        oracle: false,
        bookkeeping: false,
        trace: false,
    };
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub seed: u64,
    pub count: usize,
    pub profile: Profile,
    pub mode: SubgroupMode,
    pub jobs: usize,
    pub cap: usize,
    pub checks: Checks,
}

/// Double-coset bookkeeping for one component and one subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bookkeeping {
    pub component: usize,
    pub k_basis: usize,
    pub block_sum: usize,
    pub isomorphisms: usize,
    pub error: Option<String>,
}

impl Bookkeeping {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.k_basis == self.block_sum
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupRecord {
    pub k: Vec<usize>,
    pub inequality: MainInequality,
    /// Search value and oracle value for `A_K`.
    pub oracle: Option<(usize, usize)>,
    pub bookkeeping: Vec<Bookkeeping>,
    pub trace: Vec<Check>,
}

#[derive(Clone, Debug)]
pub struct InstanceRecord {
    pub seed: u64,
    pub spec: InstanceSpec,
    pub hash: u64,
    pub group: String,
    pub dim: usize,
    pub subgroups: Vec<SubgroupRecord>,
    pub error: Option<String>,
    pub millis: u128,
}

impl InstanceRecord {
    pub fn inequality_holds(&self) -> bool {
        self.error.is_none() && self.subgroups.iter().all(|s| s.inequality.holds)
    }

    pub fn oracle_agrees(&self) -> bool {
        self.error.is_none() && self.subgroups.iter().filter_map(|s| s.oracle).all(|(x, y)| x == y)
    }

    pub fn all_passed(&self) -> bool {
        self.inequality_holds()
            && self.oracle_agrees()
            && self
                .subgroups
                .iter()
                .all(|s| s.bookkeeping.iter().all(Bookkeeping::passed) && s.trace.iter().all(|c| c.passed))
    }
}

fn bookkeeping(a: &GluedAlgebra, k: &Subgroup) -> Vec<Bookkeeping> {
    a.components()
        .iter()
        .enumerate()
        .map(|(t, b)| {
            let kb = k_basis(b, k).len();
            let mut row = Bookkeeping {
                component: t,
                k_basis: kb,
                block_sum: 0,
                isomorphisms: 0,
                error: None,
            };
            match k_simple_blocks(b, k) {
                Ok(dec) => {
                    row.block_sum = dec
                        .classes
                        .iter()
                        .map(|c| c.intersection_order * c.pi * c.pi)
                        .sum();
                    for (c, cls) in dec.classes.iter().enumerate() {
                        if cls.pi == 0 {
                            continue;
                        }
                        match build_block_isomorphism(b, &dec, c) {
                            Ok(_) => row.isomorphisms += 1,
                            Err(e) => {
                                row.error = Some(format!("class {c}: {e}"));
                                break;
                            }
                        }
                    }
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect()
}

fn failed(name: &'static str, detail: String) -> Check {
    Check {
        name,
        passed: false,
        detail,
    }
}

/// Runs the selected checks on one instance.
pub fn analyze(spec: &InstanceSpec, mode: SubgroupMode, cap: usize, checks: Checks) -> InstanceRecord {
    let start = Instant::now();
    let mut rec = InstanceRecord {
        seed: spec.seed.unwrap_or(0),
        spec: spec.clone(),
        hash: spec.hash(),
        group: String::new(),
        dim: 0,
        subgroups: Vec::new(),
        error: None,
        millis: 0,
    };
    let inst = match spec.build(cap) {
        Ok(i) => i,
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    };
    let a = &inst.algebra;
    rec.group = inst.group.name().to_string();
    rec.dim = a.dim();
    let top = match exp_conj(a) {
        Ok(r) => r,
        Err(e) => {
            rec.error = Some(e.to_string());
            return rec;
        }
    };
    let lambda = if checks.trace { Some(build_lambda_hat(a, &top)) } else { None };
    for k in mode.subgroups(a) {
        let sub = match exp_conj_sub(a, &k) {
            Ok(r) => r,
            Err(e) => {
                rec.error = Some(format!("K = {:?}: {e}", k.elements()));
                break;
            }
        };
        let oracle = if checks.oracle && a.dim() <= ORACLE_DIM_CAP {
            match exp_conj_oracle(a, &k) {
                Ok(v) => Some((sub.value, v)),
                Err(e) => {
                    rec.error = Some(format!("oracle for K = {:?}: {e}", k.elements()));
                    break;
                }
            }
        } else {
            None
        };
        let trace = match &lambda {
            None => Vec::new(),
            Some(Err(e)) => vec![failed("trace-build", e.to_string())],
            Some(Ok(l)) => match verify_visit_counts(l, &k) {
                Ok(an) => an.checks,
                Err(e) => vec![failed("trace-analysis", e.to_string())],
            },
        };
        rec.subgroups.push(SubgroupRecord {
            k: k.elements().to_vec(),
            inequality: main_inequality(a, &k, top.value, sub.value),
            oracle,
            bookkeeping: if checks.bookkeeping { bookkeeping(a, &k) } else { Vec::new() },
            trace,
        });
    }
    rec.millis = start.elapsed().as_millis();
    rec
}

/// Instance `i` of a sweep uses seed `seed + i`. Records come back in seed
/// order whatever the number of jobs.
pub fn run_sweep(opts: &SweepOptions) -> Vec<InstanceRecord> {
    let one = |i: usize| {
        let seed = opts.seed.wrapping_add(i as u64);
        let spec = generate_instance(seed, &opts.profile);
        analyze(&spec, opts.mode, opts.cap, opts.checks)
    };
    if opts.jobs <= 1 {
        return (0..opts.count).map(one).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build() {
        Ok(pool) => pool.install(|| (0..opts.count).into_par_iter().map(one).collect()),
        Err(_) => (0..opts.count).map(one).collect(),
    }
}
