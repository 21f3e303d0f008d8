//! Seeded random instances.
//!
//! All draws come from one SplitMix64 stream seeded with the instance seed;
//! `below(n)` is `next_u64() % n`. The order of draws is part of the
//! format contract (see `docs/instance-format.md`).

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use gradedexp_core::glued::{Edge, GluedAlgebra};
use gradedexp_core::group::{GroupTable, Subgroup};

use crate::instance::{CocycleSpec, GroupSpec, InstanceSpec, SimpleSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Profile {
    pub name: String,
    /// Each entry is a list of catalog factors; one entry means a catalog
    /// group, several mean a direct product.
    pub groups: Vec<Vec<String>>,
    pub max_components: usize,
    pub max_size: usize,
    pub max_truncation: usize,
    pub max_edges: usize,
    pub max_dim: usize,
    pub retries: usize,
}

fn names(list: &[&[&str]]) -> Vec<Vec<String>> {
    list.iter().map(|g| g.iter().map(|s| s.to_string()).collect()).collect()
}

impl Profile {
    pub const NAMES: [&'static str; 4] = ["default", "simple-only", "envelope", "monotone"];

    pub fn default_profile() -> Self {
        Profile {
            name: "default".into(),
            groups: names(&[
                &["Z1"],
                &["Z2"],
                &["Z3"],
                &["Z4"],
                &["Z5"],
                &["Z6"],
                &["Z7"],
                &["Z8"],
                &["V4"],
                &["S3"],
                &["D4"],
                &["Z2xZ4"],
                &["Z2xZ2xZ2"],
            ]),
            max_components: 3,
            max_size: 3,
            max_truncation: 3,
            max_edges: 3,
            max_dim: 400,
            retries: 64,
        }
    }

    pub fn named(name: &str) -> Option<Self> {
        let base = Self::default_profile();
        Some(match name {
            "default" => base,
            "simple-only" => Profile {
                name: name.into(),
                max_components: 1,
                max_truncation: 1,
                max_edges: 0,
                ..base
            },
            // Z/2 x G with G in {Z2, Z4, V4}
            "envelope" => Profile {
                name: name.into(),
                groups: names(&[&["Z2", "Z2"], &["Z2", "Z4"], &["Z2", "V4"]]),
                max_components: 2,
                max_size: 2,
                max_truncation: 2,
                max_edges: 2,
                max_dim: 48,
                ..base
            },
            "monotone" => Profile {
                name: name.into(),
                groups: names(&[&["Z4"], &["D4"]]),
                ..base
            },
            _ => return None,
        })
    }
}

struct Draw(SplitMix64);

impl Draw {
    fn below(&mut self, n: usize) -> usize {
        (self.0.next_u64() % n as u64) as usize
    }
}

fn group_spec(parts: &[String]) -> GroupSpec {
    if parts.len() == 1 {
        GroupSpec::Catalog(parts[0].clone())
    } else {
        GroupSpec::Product(parts.to_vec())
    }
}

fn is_klein(g: &GroupTable, h: &Subgroup) -> bool {
    h.len() == 4 && h.elements().iter().all(|&x| g.mul(x, x) == 0)
}

fn draw_simple(d: &mut Draw, g: &GroupTable, p: &Profile) -> SimpleSpec {
    let n = g.order();
    let gens: Vec<usize> = (0..d.below(3)).map(|_| d.below(n)).collect();
    let h = g.subgroup_closure(&gens).expect("generators are group elements");
    let r = 1 + d.below(p.max_size);
    let tuple = (0..r).map(|_| d.below(n)).collect();
    let cocycle = match d.below(3) {
        0 if is_klein(g, &h) => CocycleSpec::Klein,
        1 => {
            let modulus = [2, 4][d.below(2)];
            let mut values: Vec<u32> = (0..h.len()).map(|_| d.below(modulus as usize) as u32).collect();
            values[0] = 0;
            CocycleSpec::Coboundary { modulus, values }
        }
        _ => CocycleSpec::Trivial { modulus: 2 },
    };
    SimpleSpec {
        h: h.elements().to_vec(),
        tuple,
        cocycle,
    }
}

fn fits(spec: &InstanceSpec, max_dim: usize) -> bool {
    let Ok(group) = spec.build_group() else { return false };
    let Ok(components) = spec.build_components(&group) else { return false };
    GluedAlgebra::build(&group, &components, &spec.edges, spec.truncation, max_dim).is_ok()
}

/// A deterministic instance for `seed`. Draws that exceed `max_dim` are
/// redrawn; after `retries` failures the last draw is stripped of its
/// radical.
pub fn generate_instance(seed: u64, profile: &Profile) -> InstanceSpec {
    let mut d = Draw(SplitMix64::seed_from_u64(seed));
    let parts = &profile.groups[d.below(profile.groups.len())];
    let group = GroupTable::catalog(&parts.join("x")).expect("profile groups are catalog groups");
    let n = group.order();
    let mut last = None;
    for _ in 0..=profile.retries {
        let q = 1 + d.below(profile.max_components);
        let simples = (0..q).map(|_| draw_simple(&mut d, &group, profile)).collect();
        let truncation = 1 + d.below(profile.max_truncation);
        let edges = (0..d.below(profile.max_edges + 1))
            .map(|_| Edge {
                from: d.below(q),
                to: d.below(q),
                degree: d.below(n),
            })
            .collect();
        let spec = InstanceSpec {
            group: group_spec(parts),
            subgroups: Vec::new(),
            simples,
            edges,
            truncation,
            seed: Some(seed),
        };
        if fits(&spec, profile.max_dim) {
            return spec;
        }
        last = Some(spec);
    }
    let mut spec = last.expect("at least one draw");
    spec.edges.clear();
    spec.truncation = 1;
    spec
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let p = Profile::default_profile();
        assert_eq!(generate_instance(11, &p), generate_instance(11, &p));
    }

    #[test]
    fn simple_only_has_no_radical() {
        let p = Profile::named("simple-only").unwrap();
        for seed in 0..20 {
            let s = generate_instance(seed, &p);
            assert_eq!(s.simples.len(), 1);
            assert!(s.edges.is_empty());
            assert_eq!(s.truncation, 1);
        }
    }
}
