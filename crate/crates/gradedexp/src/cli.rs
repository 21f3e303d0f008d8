//! Subcommand dispatch. Exit status: 0 on success, 1 when a check fails or
//! an instance is rejected, 2 on usage errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gradedexp_core::algebra::{check_associativity, check_grading, GradedAlgebra};
use gradedexp_core::codim::{growth_report, CodimOptions, CodimReport};
use gradedexp_core::decomposition::{build_block_isomorphism, k_basis, k_simple_blocks};
use gradedexp_core::expconj::{
    check_monotonicity, exp_conj, exp_conj_oracle, exp_conj_sub, main_inequality, ExpConjResult, ORACLE_DIM_CAP,
};
use gradedexp_core::glued::DEFAULT_BASIS_CAP;
use gradedexp_core::grassmann::{check_envelope_e_component, Envelope};
use gradedexp_core::group::Subgroup;
use gradedexp_core::trace::{build_lambda_hat, final_inequality_report, verify_visit_counts};

use crate::generate::Profile;
use crate::instance::{Instance, InstanceSpec};
use crate::parallel::exp_conj_sub_parallel;
use crate::summary::Summary;
use crate::sweep::{run_sweep, Checks, SubgroupMode, SweepOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable overriding the basis-size cap.
pub const CAP_VAR: &str = "GRADEDEXP_CAP";

#[derive(Parser, Debug)]
#[command(name = "gradedexp", version, about = "Exact checks for graded exponents of finite-dimensional algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Instance file.
    #[arg(long)]
    pub instance: PathBuf,
    /// Write a key=value summary to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse and build an instance, running all construction invariants.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Compute exp^Conj of A (or of A_K) with a witness.
    Expconj {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        subgroup: Option<String>,
        /// Worker threads for the walk search.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also run the brute-force oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Split each component's K-part into K-simple blocks.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        subgroup: String,
    },
    /// Check exp^Conj_G(A) <= [G:K]^2 exp^Conj_K(A_K), or monotonicity
    /// under a normal subgroup.
    Check {
        #[command(flatten)]
        common: Common,
        /// Subgroup name, element list, `G`, `e`, or `all`.
        #[arg(long)]
        subgroup: String,
        /// Check monotonicity for this normal subgroup instead.
        #[arg(long)]
        normal: Option<String>,
    },
    /// Build the enriched witness monomial and count visits.
    Trace {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        subgroup: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare (A_{Z2 x e})* with (A*)_e.
    Envelope {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        generators: usize,
    },
    /// Tabulate small codimensions (a trend only).
    Codim {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        graded: bool,
        #[arg(long)]
        subgroup: Option<String>,
        /// Sample substitutions above the work cap (lower bounds).
        #[arg(long)]
        sample: bool,
    },
    /// Run the main inequality over generated instances.
    Sweep {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value = "all")]
        subgroup_mode: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "default")]
        profile: String,
        /// Also run the oracle, bookkeeping and trace checks.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

type Outcome = Result<bool, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn check(msg: impl std::fmt::Display) -> Failure {
    Failure::Check(msg.to_string())
}

fn basis_cap() -> Result<usize, Failure> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{CAP_VAR} must be a positive integer, found '{v}'"))),
        Err(_) => Ok(DEFAULT_BASIS_CAP),
    }
}

fn load(path: &Path, cap: usize) -> Result<Instance, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let spec = InstanceSpec::parse(&text).map_err(|e| check(format!("{}: {e}", path.display())))?;
    spec.build(cap).map_err(|e| check(format!("{}: {e}", path.display())))
}

fn finish(summary: &mut Summary, out: &Option<PathBuf>, start: Instant) -> Result<(), Failure> {
    summary.push("millis", start.elapsed().as_millis());
    if let Some(path) = out {
        summary
            .write(path)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn base_summary(inst: &Instance, command: &str) -> Summary {
    let mut s = Summary::new();
    s.push("command", command)
        .push("instance_hash", format!("{:016x}", inst.spec.hash()))
        .push("group", inst.group.name())
        .push("dim", inst.algebra.dim());
    s
}

fn fmt_set(xs: &[usize]) -> String {
    let items: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

fn print_result(w: &mut dyn Write, label: &str, r: &ExpConjResult) -> std::io::Result<()> {
    writeln!(w, "{label} = {}", r.value)?;
    let seq: Vec<String> = r
        .solution
        .sequence
        .iter()
        .map(|&b| {
            let blk = r.graph.blocks[b];
            format!("S{}[class {}, dim {}]", blk.component, blk.class, blk.dim)
        })
        .collect();
    writeln!(w, "  blocks: {}", seq.join(" -> "))?;
    let factors: Vec<String> = r.witness.factors.iter().map(|t| format!("b{}", t.index)).collect();
    writeln!(w, "  witness: {} = zeta^{} b{}", factors.join(" "), r.witness.product.exponent, r.witness.product.index)
}

fn run_command(cmd: Command, w: &mut dyn Write) -> Outcome {
    let start = Instant::now();
    let cap = basis_cap()?;
    let io = |e: std::io::Error| usage(format!("write failed: {e}"));
    match cmd {
        Command::Validate { common } => {
            let inst = load(&common.instance, cap)?;
            let a = &inst.algebra;
            writeln!(w, "group {} (order {})", inst.group.name(), inst.group.order()).map_err(io)?;
            for (t, c) in a.components().iter().enumerate() {
                writeln!(w, "S{t}: |H| = {}, r = {}, dim = {}", c.subgroup().len(), c.size(), c.dim()).map_err(io)?;
            }
            writeln!(
                w,
                "dim A = {} (semisimple {}, radical {}), N = {}",
                a.dim(),
                a.semisimple_dim(),
                a.dim() - a.semisimple_dim(),
                a.truncation()
            )
            .map_err(io)?;
            writeln!(w, "valid").map_err(io)?;
            let mut s = base_summary(&inst, "validate");
            s.push("valid", true);
            finish(&mut s, &common.out, start)?;
            Ok(true)
        }
        Command::Expconj {
            common,
            subgroup,
            jobs,
            oracle,
        } => {
            let inst = load(&common.instance, cap)?;
            let a = &inst.algebra;
            let k = match &subgroup {
                Some(arg) => inst.subgroup(arg).map_err(check)?,
                None => Subgroup::whole(&inst.group),
            };
            let r = if jobs > 1 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .map_err(|e| usage(e.to_string()))?;
                pool.install(|| exp_conj_sub_parallel(a, &k))
            } else {
                exp_conj_sub(a, &k)
            }
            .map_err(check)?;
            print_result(w, &format!("exp_conj over K = {}", fmt_set(k.elements())), &r).map_err(io)?;
            let mut s = base_summary(&inst, "expconj");
            s.push("subgroup", fmt_set(k.elements())).push("value", r.value);
            let mut ok = true;
            if oracle {
                if a.dim() > ORACLE_DIM_CAP {
                    writeln!(w, "oracle skipped: dim {} > {ORACLE_DIM_CAP}", a.dim()).map_err(io)?;
                } else {
                    let v = exp_conj_oracle(a, &k).map_err(check)?;
                    writeln!(w, "oracle = {v}").map_err(io)?;
                    s.push("oracle", v);
                    ok = v == r.value;
                }
            }
            finish(&mut s, &common.out, start)?;
            Ok(ok)
        }
        Command::Decompose { common, subgroup } => {
            let inst = load(&common.instance, cap)?;
            let k = inst.subgroup(&subgroup).map_err(check)?;
            let mut ok = true;
            let mut s = base_summary(&inst, "decompose");
            s.push("subgroup", fmt_set(k.elements()));
            for (t, b) in inst.algebra.components().iter().enumerate() {
                let dec = k_simple_blocks(b, &k).map_err(check)?;
                let kb = k_basis(b, &k).len();
                writeln!(w, "S{t}: dim of K-part = {kb}, pi = {:?}", dec.pi_vector()).map_err(io)?;
                for (c, cls) in dec.classes.iter().enumerate() {
                    let rep = dec.partition.representatives[cls.double_coset];
                    write!(
                        w,
                        "  H{rep}K: indices {:?}, |g^-1Hg ∩ K| = {}, block dim {}",
                        cls.indices, cls.intersection_order, cls.block_dim
                    )
                    .map_err(io)?;
                    if cls.pi > 0 {
                        match build_block_isomorphism(b, &dec, c) {
                            Ok(iso) => writeln!(w, ", isomorphism verified on {} pairs", iso.pairs_checked),
                            Err(e) => {
                                ok = false;
                                writeln!(w, ", isomorphism FAILED: {e}")
                            }
                        }
                    } else {
                        writeln!(w)
                    }
                    .map_err(io)?;
                }
                ok &= kb == dec.total_block_dim();
                let chain = final_inequality_report(b, &k).map_err(check)?;
                writeln!(
                    w,
                    "  (sum pi)^2 = {} <= m sum pi^2 = {} <= [G:K] sum pi^2 = {}",
                    chain.c.0, chain.c.1, chain.b.1
                )
                .map_err(io)?;
                ok &= chain.holds();
                s.push(format!("S{t}.k_dim"), kb).push(format!("S{t}.blocks"), dec.total_block_dim());
            }
            s.push("holds", ok);
            finish(&mut s, &common.out, start)?;
            Ok(ok)
        }
        Command::Check {
            common,
            subgroup,
            normal,
        } => {
            let inst = load(&common.instance, cap)?;
            let a = &inst.algebra;
            let mut s = base_summary(&inst, "check");
            if let Some(arg) = normal {
                let n = inst.subgroup(&arg).map_err(check)?;
                let m = check_monotonicity(a, &n).map_err(check)?;
                writeln!(
                    w,
                    "N = {}: exp_conj_G = {} >= exp_conj_G/N = {} holds={}",
                    fmt_set(n.elements()),
                    m.graded_value,
                    m.quotient_value,
                    m.holds
                )
                .map_err(io)?;
                s.push("normal", fmt_set(n.elements()))
                    .push("lhs", m.graded_value)
                    .push("rhs", m.quotient_value)
                    .push("holds", m.holds);
                finish(&mut s, &common.out, start)?;
                return Ok(m.holds);
            }
            let ks = if subgroup == "all" {
                inst.group.all_subgroups()
            } else {
                vec![inst.subgroup(&subgroup).map_err(check)?]
            };
            let lhs = exp_conj(a).map_err(check)?.value;
            let mut all = true;
            for k in &ks {
                let sub = exp_conj_sub(a, k).map_err(check)?.value;
                let r = main_inequality(a, k, lhs, sub);
                writeln!(
                    w,
                    "K = {}: lhs={} rhs={} index={} sub={} holds={}",
                    fmt_set(k.elements()),
                    r.lhs,
                    r.rhs,
                    r.index,
                    r.sub_value,
                    r.holds
                )
                .map_err(io)?;
                if ks.len() == 1 {
                    s.push("subgroup", fmt_set(k.elements()))
                        .push("lhs", r.lhs)
                        .push("rhs", r.rhs)
                        .push("index", r.index);
                }
                all &= r.holds;
            }
            s.push("subgroups", ks.len()).push("holds", all);
            finish(&mut s, &common.out, start)?;
            Ok(all)
        }
        Command::Trace {
            common,
            subgroup,
            format,
        } => {
            let inst = load(&common.instance, cap)?;
            let a = &inst.algebra;
            let k = inst.subgroup(&subgroup).map_err(check)?;
            let top = exp_conj(a).map_err(check)?;
            let l = build_lambda_hat(a, &top).map_err(check)?;
            let an = verify_visit_counts(&l, &k).map_err(check)?;
            let mut s = base_summary(&inst, "trace");
            s.push("subgroup", fmt_set(k.elements()))
                .push("factors", l.len())
                .push("omega0", an.omega.omega0.len())
                .push("index", inst.group.order() / k.len());
            for c in &an.checks {
                s.push(format!("check.{}", c.name), c.passed);
            }
            s.push("holds", an.all_passed());
            match format {
                Format::Kv => write!(w, "{}", s.render()).map_err(io)?,
                Format::Text => {
                    writeln!(w, "enriched monomial: {} factors", l.len()).map_err(io)?;
                    let omega0: Vec<String> = an.omega.omega0.iter().map(|g| g.to_string()).collect();
                    writeln!(w, "Omega_0 = {{{}}} ([G:K] = {})", omega0.join(","), inst.group.order() / k.len())
                        .map_err(io)?;
                    for v in &an.visits {
                        writeln!(
                            w,
                            "S{} class {}: visited {} times, |HgK|/|K| = {}",
                            v.component, v.class, v.observed, v.expected
                        )
                        .map_err(io)?;
                    }
                    for c in &an.checks {
                        let mark = if c.passed { "ok  " } else { "FAIL" };
                        writeln!(w, "{mark} {}: {}", c.name, c.detail).map_err(io)?;
                    }
                }
            }
            finish(&mut s, &common.out, start)?;
            Ok(an.all_passed())
        }
        Command::Envelope { common, generators } => {
            let inst = load(&common.instance, cap)?;
            let g = inst.spec.envelope_factor().map_err(check)?;
            let a = &inst.algebra;
            let env = Envelope::new(a, &g, generators, cap).map_err(check)?;
            check_grading(&env).map_err(check)?;
            check_associativity(&env).map_err(check)?;
            let cmp = check_envelope_e_component(a, &g, generators, cap).map_err(check)?;
            writeln!(w, "dim A* = {} (m = {generators})", env.dim()).map_err(io)?;
            writeln!(
                w,
                "dim (A_(Z2 x e))* = {}, dim (A*)_e = {}, pairs compared = {}, equal = {}",
                cmp.sub_envelope_dim, cmp.identity_component_dim, cmp.pairs_checked, cmp.equal
            )
            .map_err(io)?;
            let mut s = base_summary(&inst, "envelope");
            s.push("generators", generators)
                .push("envelope_dim", env.dim())
                .push("e_component_dim", cmp.identity_component_dim)
                .push("holds", cmp.equal);
            finish(&mut s, &common.out, start)?;
            Ok(cmp.equal)
        }
        Command::Codim {
            common,
            n_max,
            graded,
            subgroup,
            sample,
        } => {
            if n_max == 0 {
                return Err(usage("--n-max must be at least 1"));
            }
            let inst = load(&common.instance, cap)?;
            let a = &inst.algebra;
            let k = match &subgroup {
                Some(arg) => Some(inst.subgroup(arg).map_err(check)?),
                None => None,
            };
            let opts = CodimOptions {
                sample,
                ..CodimOptions::default()
            };
            let report = growth_report(a, n_max, graded, k.as_ref(), &opts).map_err(check)?;
            let conj = exp_conj(a).map_err(check)?.value;
            print_codim(w, &report, conj).map_err(io)?;
            let mut s = base_summary(&inst, "codim");
            for row in &report.rows {
                s.push(format!("c{}", row.n), row.value.value);
                s.push(format!("c{}.exact", row.n), row.value.exact);
                if let Some(gc) = row.graded {
                    s.push(format!("cG{}", row.n), gc.value);
                }
                if let Some(kc) = row.component {
                    s.push(format!("cK{}", row.n), kc.value);
                }
            }
            s.push("exp_conj", conj).push("label", CodimReport::LABEL);
            finish(&mut s, &common.out, start)?;
            Ok(true)
        }
        Command::Sweep {
            seed,
            count,
            subgroup_mode,
            jobs,
            profile,
            full,
            out,
        } => {
            let mode = SubgroupMode::parse(&subgroup_mode)
                .ok_or_else(|| usage(format!("unknown --subgroup-mode '{subgroup_mode}' (all, normal, extremes)")))?;
            let profile = Profile::named(&profile).ok_or_else(|| {
                usage(format!("unknown --profile '{profile}' ({})", Profile::NAMES.join(", ")))
            })?;
            let opts = SweepOptions {
                seed,
                count,
                profile,
                mode,
                jobs,
                cap,
                checks: if full { Checks::ALL } else { Checks::INEQUALITY },
            };
            let records = run_sweep(&opts);
            let mut passed = 0;
            let mut pairs = 0;
            let mut tight = 0;
            for r in &records {
                let ok = if full { r.all_passed() } else { r.inequality_holds() };
                passed += ok as usize;
                pairs += r.subgroups.len();
                // K = G is always tight
                let proper = r.subgroups.iter().filter(|s| s.inequality.index > 1);
                tight += proper.clone().filter(|s| s.inequality.lhs == s.inequality.rhs).count();
                let worst = proper
                    .map(|s| (s.inequality.lhs, s.inequality.rhs))
                    .max_by(|x, y| (x.0 * y.1).cmp(&(y.0 * x.1)));
                write!(
                    w,
                    "seed {:>6} {:<10} dim {:>4} subgroups {:>2}",
                    r.seed,
                    r.group,
                    r.dim,
                    r.subgroups.len()
                )
                .map_err(io)?;
                if let Some((l, h)) = worst {
                    write!(w, " tightest {l}/{h}").map_err(io)?;
                }
                match &r.error {
                    Some(e) => writeln!(w, " ERROR {e}"),
                    None => writeln!(w, " {}", if ok { "ok" } else { "FAIL" }),
                }
                .map_err(io)?;
            }
            writeln!(w, "{passed}/{} instances passed, {pairs} (instance, K) pairs, {tight} tight for proper K", records.len())
                .map_err(io)?;
            let all = passed == records.len();
            let mut s = Summary::new();
            s.push("command", "sweep")
                .push("seed", seed)
                .push("count", count)
                .push("pairs", pairs)
                .push("tight", tight)
                .push("passed", passed)
                .push("holds", all);
            finish(&mut s, &out, start)?;
            Ok(all)
        }
    }
}

fn print_codim(w: &mut dyn Write, report: &CodimReport, conj: usize) -> std::io::Result<()> {
    writeln!(w, "codimensions of A (dim {}), {}:", report.dim, CodimReport::LABEL)?;
    for row in &report.rows {
        let root = (row.value.value as f64).powf(1.0 / row.n as f64);
        let bound = if row.value.exact { "" } else { " (lower bound)" };
        write!(w, "  n={} c_n={}{bound} c_n^(1/n)~{root:.3}", row.n, row.value.value)?;
        if let Some(gc) = row.graded {
            write!(w, " c_n^G={}", gc.value)?;
        }
        if let Some(kc) = row.component {
            write!(w, " c_n(A_K)={}", kc.value)?;
        }
        writeln!(w)?;
    }
    writeln!(w, "exp_conj = {conj} (for comparison only)")
}

/// Runs the command line `args` (including the program name), writing
/// reports to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    match run_command(cli.command, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAIL,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAIL
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            EXIT_USAGE
        }
    }
}
