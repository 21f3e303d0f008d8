//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use gradedexp::generate::{generate_instance, Profile};
use gradedexp::instance::InstanceSpec;
use gradedexp::sweep::{run_sweep, Checks, InstanceRecord, SubgroupMode, SweepOptions};
use gradedexp_core::algebra::{GradedAlgebra, TableAlgebra};
use gradedexp_core::cocycle::TwoCocycle;
use gradedexp_core::codim::{codimension, evaluation_matrix};
use gradedexp_core::expconj::{check_main_inequality, check_monotonicity, exp_conj_oracle, ORACLE_DIM_CAP};
use gradedexp_core::glued::DEFAULT_BASIS_CAP;
use gradedexp_core::grassmann::check_envelope_e_component;
use gradedexp_core::group::{GroupTable, Subgroup};
use gradedexp_core::linalg::rank;
use gradedexp_core::simple::GradedSimple;
use gradedexp_core::trace::{elementary_euler_monomial, final_inequality_report};

const Z4: &str = "group { catalog: \"Z4\" }
simple { H: [0, 2], tuple: [0, 1] }
truncation { N: 1 }
";

const CATALOG: [&str; 13] = [
    "Z1", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "V4", "S3", "D4", "Z2xZ4", "Z2xZ2xZ2",
];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn sweep() -> Vec<InstanceRecord> {
    run_sweep(&SweepOptions {
        seed: 0,
        count: 100,
        profile: Profile::default_profile(),
        mode: SubgroupMode::All,
        jobs: 1,
        cap: DEFAULT_BASIS_CAP,
        checks: Checks::ALL,
    })
}

fn main_theorem(records: &[InstanceRecord]) -> Outcome {
    let errors: Vec<String> = records
        .iter()
        .filter_map(|r| r.error.as_ref().map(|e| format!("seed {}: {e}", r.seed)))
        .collect();
    let failing: Vec<u64> = records.iter().filter(|r| !r.inequality_holds()).map(|r| r.seed).collect();
    let pairs: usize = records.iter().map(|r| r.subgroups.len()).sum();

    let a = InstanceSpec::parse(Z4).unwrap().build(DEFAULT_BASIS_CAP).unwrap().algebra;
    let g = a.grading().clone();
    let k = Subgroup::new(&g, &[0, 2]).unwrap();
    let rep = check_main_inequality(&a, &k).unwrap();
    // both sides again by brute force
    let lhs = exp_conj_oracle(&a, &Subgroup::whole(&g)).unwrap();
    let rhs = rep.index * rep.index * exp_conj_oracle(&a, &k).unwrap();
    let tight = (rep.lhs, rep.rhs, lhs, rhs) == (8, 8, 8, 8);

    outcome(
        records.len() >= 100 && errors.is_empty() && failing.is_empty() && tight,
        format!(
            "{} instances, {pairs} (instance, K) pairs, failing seeds {failing:?}, errors {errors:?}; Z4: search {}<={}, oracle {lhs}<={rhs}",
            records.len(),
            rep.lhs,
            rep.rhs
        ),
    )
}

fn oracle_equivalence(records: &[InstanceRecord]) -> Outcome {
    let mut compared = 0;
    let mut instances = 0;
    let mut bad = Vec::new();
    for r in records {
        if r.dim > ORACLE_DIM_CAP {
            continue;
        }
        instances += 1;
        for s in &r.subgroups {
            match s.oracle {
                Some((x, y)) => {
                    compared += 1;
                    if x != y {
                        bad.push((r.seed, s.k.clone(), x, y));
                    }
                }
                None => bad.push((r.seed, s.k.clone(), 0, 0)),
            }
        }
    }
    outcome(
        bad.is_empty() && instances > 0,
        format!("{instances} instances with dim <= {ORACLE_DIM_CAP}, {compared} values compared, mismatches {bad:?}"),
    )
}

fn bookkeeping(records: &[InstanceRecord]) -> Outcome {
    let mut rows = 0;
    let mut isos = 0;
    let mut bad = Vec::new();
    for r in records {
        for s in &r.subgroups {
            for b in &s.bookkeeping {
                rows += 1;
                isos += b.isomorphisms;
                if !b.passed() {
                    bad.push((r.seed, s.k.clone(), b.component, b.error.clone()));
                }
            }
        }
    }
    outcome(
        bad.is_empty() && rows > 0,
        format!("{rows} (component, K) pairs, {isos} block isomorphisms verified, failures {bad:?}"),
    )
}

fn trace_checks(records: &[InstanceRecord], names: &[&str]) -> Outcome {
    let mut traces = 0;
    let mut bad = Vec::new();
    for r in records {
        for s in &r.subgroups {
            traces += 1;
            let relevant: Vec<_> = s
                .trace
                .iter()
                .filter(|c| names.contains(&c.name) || c.name.starts_with("trace-"))
                .collect();
            if relevant.len() < names.len() && !relevant.iter().any(|c| c.name.starts_with("trace-")) {
                bad.push(format!("seed {} K {:?}: missing checks", r.seed, s.k));
            }
            for c in relevant {
                if !c.passed {
                    bad.push(format!("seed {} K {:?}: {} ({})", r.seed, s.k, c.name, c.detail));
                }
            }
        }
    }
    let shown: Vec<_> = bad.iter().take(5).collect();
    outcome(
        bad.is_empty() && traces > 0,
        format!("{traces} traces, {} failures {shown:?}", bad.len()),
    )
}

fn group_identities() -> Outcome {
    let mut triples = 0;
    let mut pairs = 0;
    let mut bad = Vec::new();
    let mut rng = SplitMix64::seed_from_u64(6);
    for name in CATALOG {
        let g = GroupTable::catalog(name).unwrap();
        let n = g.order();
        let subs = g.all_subgroups();
        for h in &subs {
            for k in &subs {
                pairs += 1;
                for x in 0..n {
                    triples += 1;
                    let hxk: BTreeSet<usize> = h
                        .elements()
                        .iter()
                        .flat_map(|&a| k.elements().iter().map(move |&b| (a, b)))
                        .map(|(a, b)| g.mul(g.mul(a, x), b))
                        .collect();
                    let conj: BTreeSet<usize> =
                        h.elements().iter().map(|&a| g.mul(g.mul(g.inv(x), a), x)).collect();
                    let inter = k.elements().iter().filter(|e| conj.contains(e)).count();
                    if hxk.len() / k.len() * inter != h.len() || hxk.len() % k.len() != 0 {
                        bad.push(format!("{name}: H={:?} K={:?} g={x}", h.elements(), k.elements()));
                    }
                }
                // the pi inequalities on a random tuple
                let r = 1 + (rng.next_u64() % 4) as usize;
                let tuple: Vec<usize> = (0..r).map(|_| (rng.next_u64() % n as u64) as usize).collect();
                let f = TwoCocycle::trivial(h, 2).unwrap();
                let b = GradedSimple::new(&g, h, &f, &tuple).unwrap();
                let chain = final_inequality_report(&b, k).unwrap();
                let s: usize = chain.pi.iter().sum();
                let s2: usize = chain.pi.iter().map(|p| p * p).sum();
                let m = chain.pi.len();
                let equal = chain.pi.iter().all(|&p| p == chain.pi[0]);
                let ok = chain.group_identity
                    && m <= n / k.len()
                    && s * s <= m * s2
                    && ((s * s == m * s2) == equal)
                    && chain.holds();
                if !ok {
                    bad.push(format!("{name}: chain {chain:?}"));
                }
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{} groups, {pairs} (H, K) pairs, {triples} (H, K, g) triples, failures {bad:?}", CATALOG.len()),
    )
}

fn euler_monomials() -> Outcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in 1..=5 {
        for i in 0..r {
            checked += 1;
            let cells = elementary_euler_monomial(r, i);
            let distinct: BTreeSet<_> = cells.iter().copied().collect();
            let all = cells.len() == r * r && distinct.len() == r * r;
            // e_{a,b} e_{c,d} = e_{a,d} if b = c, else 0
            let product = cells
                .iter()
                .skip(1)
                .try_fold(cells[0], |(a, b), &(c, d)| (b == c).then_some((a, d)));
            if !all || product != Some((i, i)) {
                bad.push((r, i));
            }
        }
    }
    outcome(bad.is_empty(), format!("{checked} (r, i) pairs, failures {bad:?}"))
}

fn grassmann() -> Outcome {
    let profile = Profile::named("envelope").unwrap();
    let mut bad = Vec::new();
    let mut groups = BTreeSet::new();
    let mut pairs = 0;
    let count = 30;
    for seed in 0..count {
        let spec = generate_instance(seed, &profile);
        let m = 1 + (seed % 4) as usize;
        let inst = match spec.build(DEFAULT_BASIS_CAP) {
            Ok(i) => i,
            Err(e) => {
                bad.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        let g = spec.envelope_factor().unwrap();
        groups.insert(g.name().to_string());
        match check_envelope_e_component(&inst.algebra, &g, m, 1 << 20) {
            Ok(c) if c.equal => pairs += c.pairs_checked,
            Ok(c) => bad.push(format!("seed {seed}: {c:?}")),
            Err(e) => bad.push(format!("seed {seed}: {e}")),
        }
    }
    outcome(
        bad.is_empty(),
        format!("{count} instances over Z2 x G with G in {groups:?}, m <= 4, {pairs} products compared, failures {bad:?}"),
    )
}

fn monotonicity() -> Outcome {
    let profile = Profile::named("monotone").unwrap();
    let mut checked = 0;
    let mut bad = Vec::new();
    let mut specs: Vec<InstanceSpec> = (0..40).map(|s| generate_instance(s, &profile)).collect();
    specs.push(InstanceSpec::parse(Z4).unwrap());
    for spec in specs {
        let inst = match spec.build(DEFAULT_BASIS_CAP) {
            Ok(i) => i,
            Err(e) => {
                bad.push(e.to_string());
                continue;
            }
        };
        let g = &inst.group;
        for n in g.all_subgroups().into_iter().filter(|n| g.is_normal(n)) {
            checked += 1;
            match check_monotonicity(&inst.algebra, &n) {
                Ok(m) if m.holds => {}
                Ok(m) => bad.push(format!("seed {:?} N {:?}: {m:?}", spec.seed, n.elements())),
                Err(e) => bad.push(format!("seed {:?} N {:?}: {e}", spec.seed, n.elements())),
            }
        }
    }
    outcome(
        bad.is_empty(),
        format!("{checked} (instance, normal subgroup) pairs over Z4 and D4, failures {bad:?}"),
    )
}

fn shuffled_rank(a: &TableAlgebra, n: usize, rng: &mut SplitMix64) -> usize {
    let mut m = evaluation_matrix(a, n);
    shuffle(&mut m, rng);
    for row in m.iter_mut() {
        shuffle(row, rng);
    }
    rank(a.field(), m)
}

fn shuffle<T>(v: &mut [T], rng: &mut SplitMix64) {
    for i in (1..v.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
}

fn codim_sanity() -> Outcome {
    use gradedexp_core::algebra::{Product, Term};
    use gradedexp_core::scalar::CyclotomicField;
    let trivial = GroupTable::cyclic(1).unwrap();
    let unit = TableAlgebra::new(
        trivial.clone(),
        CyclotomicField::new(2),
        vec![0],
        vec![Product::Monomial(Term { exponent: 0, index: 0 })],
    )
    .unwrap();
    let line: Vec<usize> = (1..=4).map(|n| codimension(&unit, n).unwrap()).collect();
    let zero = TableAlgebra::new(trivial, CyclotomicField::new(2), vec![0; 3], vec![Product::Zero; 9]).unwrap();
    let square_zero: Vec<usize> = (2..=4).map(|n| codimension(&zero, n).unwrap()).collect();

    let profile = Profile {
        max_dim: 4,
        max_size: 2,
        ..Profile::default_profile()
    };
    let mut rng = SplitMix64::seed_from_u64(10);
    let mut random = 0;
    let mut bad = Vec::new();
    let mut seed = 0;
    while random < 10 && seed < 1000 {
        let spec = generate_instance(seed, &profile);
        seed += 1;
        let Ok(inst) = spec.build(4) else { continue };
        random += 1;
        let a = TableAlgebra::from_algebra(&inst.algebra);
        let mut perm: Vec<usize> = (0..a.dim()).collect();
        shuffle(&mut perm, &mut rng);
        let b = a.permuted(&perm);
        for n in 1..=3 {
            let base = codimension(&a, n).unwrap();
            let values = [base, codimension(&b, n).unwrap(), shuffled_rank(&a, n, &mut rng), shuffled_rank(&b, n, &mut rng)];
            if values.iter().any(|&v| v != base) {
                bad.push((seed - 1, n, values));
            }
        }
    }
    outcome(
        line == [1, 1, 1, 1] && square_zero == [0, 0, 0] && random == 10 && bad.is_empty(),
        format!("unital line {line:?}, square-zero {square_zero:?}, {random} random algebras, mismatches {bad:?}"),
    )
}

fn main() -> ExitCode {
    let records = sweep();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("main inequality sweep", Box::new(|| main_theorem(&records))),
        ("oracle equivalence", Box::new(|| oracle_equivalence(&records))),
        ("double-coset bookkeeping", Box::new(|| bookkeeping(&records))),
        (
            "visit counting",
            Box::new(|| trace_checks(&records, &["omega0-bound", "visit-counts"])),
        ),
        (
            "accounts of visits",
            Box::new(|| {
                trace_checks(
                    &records,
                    &["visits-I-3", "visits-I-4", "visits-II-1", "visits-II-2", "visits-II-3"],
                )
            }),
        ),
        ("group identities", Box::new(group_identities)),
        ("euler monomials", Box::new(euler_monomials)),
        ("grassmann e-component", Box::new(grassmann)),
        ("monotonicity", Box::new(monotonicity)),
        ("codimension oracle", Box::new(codim_sanity)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += !o.passed as usize;
        println!(
            "criterion {:>2} {} {name}: {}",
            i + 1,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
