use gradedexp::generate::{generate_instance, Profile};
use gradedexp::instance::{InstanceError, InstanceSpec};
use gradedexp::parallel::exp_conj_sub_parallel;
use gradedexp::sweep::{run_sweep, Checks, SubgroupMode, SweepOptions};
use gradedexp_core::algebra::GradedAlgebra;
use gradedexp_core::expconj::exp_conj_sub;
use gradedexp_core::glued::DEFAULT_BASIS_CAP;

#[test]
fn generated_instances_round_trip() {
    for name in Profile::NAMES {
        let p = Profile::named(name).unwrap();
        for seed in 0..25 {
            let spec = generate_instance(seed, &p);
            let text = spec.emit();
            let back = InstanceSpec::parse(&text).unwrap();
            assert_eq!(back, spec, "{name} seed {seed}");
            assert_eq!(back.emit(), text);
            assert_eq!(back.hash(), spec.hash());
        }
    }
}

#[test]
fn generator_is_deterministic_and_valid() {
    let p = Profile::default_profile();
    for seed in 0..100 {
        let a = generate_instance(seed, &p);
        assert_eq!(a, generate_instance(seed, &p));
        let inst = a.build(DEFAULT_BASIS_CAP).unwrap();
        assert!(inst.algebra.dim() <= p.max_dim);
    }
    assert_ne!(generate_instance(1, &p), generate_instance(2, &p));
}

#[test]
fn shipped_instances_parse() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../instances");
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        InstanceSpec::parse(&text).unwrap().build(DEFAULT_BASIS_CAP).unwrap();
        seen += 1;
    }
    assert!(seen >= 4);
}

fn semantic_path(text: &str) -> String {
    match InstanceSpec::parse(text).and_then(|s| s.build(DEFAULT_BASIS_CAP).map(|_| ())) {
        Err(InstanceError::Semantic { path, .. }) => path,
        other => panic!("expected a semantic error, got {other:?}"),
    }
}

#[test]
fn diagnostics_point_at_the_culprit() {
    let base = "group { catalog: \"Z4\" }\n";
    assert_eq!(
        semantic_path(&format!("{base}simple {{ H: [0], tuple: [0] }}\nsimple {{ H: [0], tuple: [0, 1, 5] }}\n")),
        "simple[1].tuple[2]"
    );
    assert_eq!(semantic_path(&format!("{base}simple {{ H: [0, 1], tuple: [0] }}\n")), "simple[0].H");
    assert_eq!(
        semantic_path(&format!("{base}simple {{ H: [0], tuple: [0] }}\nedge {{ from: 0, to: 3, degree: 1 }}\n")),
        "edge[0].to"
    );
    match InstanceSpec::parse("group { catalog: \"Z4\" \n simple { H: [0] }") {
        Err(InstanceError::Syntax { line, .. }) => assert!(line >= 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn parallel_search_agrees() {
    let p = Profile::default_profile();
    for seed in 0..30 {
        let inst = generate_instance(seed, &p).build(DEFAULT_BASIS_CAP).unwrap();
        for k in inst.group.all_subgroups() {
            let seq = exp_conj_sub(&inst.algebra, &k).unwrap();
            let par = exp_conj_sub_parallel(&inst.algebra, &k).unwrap();
            assert_eq!(seq.value, par.value);
            assert_eq!(seq.solution.sequence, par.solution.sequence);
        }
    }
}

#[test]
fn sweep_order_does_not_depend_on_jobs() {
    let mut opts = SweepOptions {
        seed: 7,
        count: 12,
        profile: Profile::default_profile(),
        mode: SubgroupMode::Extremes,
        jobs: 1,
        cap: DEFAULT_BASIS_CAP,
        checks: Checks::INEQUALITY,
    };
    let one: Vec<_> = run_sweep(&opts).iter().map(|r| (r.seed, r.hash)).collect();
    opts.jobs = 3;
    let three: Vec<_> = run_sweep(&opts).iter().map(|r| (r.seed, r.hash)).collect();
    assert_eq!(one, three);
    assert_eq!(one.iter().map(|r| r.0).collect::<Vec<_>>(), (7..19).collect::<Vec<_>>());
}
