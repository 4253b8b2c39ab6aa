//! Named fusion systems.

use std::sync::Arc;

use super::FusionSystem;
use crate::error::{Error, Result};
use crate::group::{self, presets, FiniteGroup, Limits, Subgroup, SubgroupClassification};

/// Names accepted by [`fusion`]. p-groups give their trivial fusion system,
/// other groups the fusion system on a Sylow subgroup for the listed prime.
pub const CATALOG: &[(&str, u64)] = &[
    ("C2", 2),
    ("C3", 3),
    ("C4", 2),
    ("C5", 5),
    ("C9", 3),
    ("C2xC2", 2),
    ("C3xC3", 3),
    ("D8", 2),
    ("Q8", 2),
    ("SD16", 2),
    ("S3", 3),
    ("A4", 2),
    ("S4", 2),
    ("SL2(3)", 2),
    ("A6", 2),
    ("PGL3(3)", 2),
    ("C5-semidirect-C2", 5),
    ("C5-semidirect-C4", 5),
    ("C7-semidirect-C6", 7),
    ("S4-normal-V", 2),
];

/// Default prime for a group name: the unique prime for p-groups, otherwise
/// the catalog entry.
pub fn default_prime(name: &str) -> Result<u64> {
    let n = presets::normalize(name);
    if let Some(&(_, p)) = CATALOG.iter().find(|(k, _)| *k == n) {
        if group::is_prime(p) {
            return Ok(p);
        }
    }
    let g = presets::group(&n)?;
    match g.prime_power_base() {
        Some(p) if p > 1 => Ok(p),
        _ => Err(Error::input(format!("no default prime for {name}; pass one explicitly"))),
    }
}

/// Resolve a Sylow selector: `auto` / `auto:p` picks a Sylow p-subgroup,
/// otherwise the argument is a subgroup-class label of G.
pub fn select_subgroup(g: &FiniteGroup, selector: &str, prime: Option<u64>) -> Result<(Subgroup, u64)> {
    let auto = selector == "auto" || selector.starts_with("auto:");
    if auto {
        let p = match selector.strip_prefix("auto:") {
            Some(x) => x.parse::<u64>().map_err(|_| Error::input(format!("bad prime in '{selector}'")))?,
            None => prime.ok_or_else(|| Error::input("auto Sylow selection needs a prime"))?,
        };
        if !group::is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        return Ok((g.sylow_subgroup(p)?, p));
    }
    let subs = SubgroupClassification::enumerate(g, &Limits::default())?;
    let c = subs
        .class_by_label(selector)
        .ok_or_else(|| Error::input(format!("no subgroup class labelled '{selector}' in {}", g.name())))?;
    let sub = subs.subgroup(subs.class(c).representative()).clone();
    let p = match (group::prime_power_base(sub.order() as u64), prime) {
        (_, Some(p)) => p,
        (Some(b), None) if b > 1 => b,
        _ => return Err(Error::input("cannot infer the prime from the chosen subgroup")),
    };
    Ok((sub, p))
}

/// A named fusion system.
pub fn fusion(name: &str) -> Result<FusionSystem> {
    let n = presets::normalize(name);
    if n == "S4-normal-V" {
        // F_V(Σ4) on the normal Klein four subgroup; V is not Sylow
        let s4 = Arc::new(presets::group("S4")?);
        let derived = s4.derived_subgroup(&s4.full_subgroup());
        let v = s4.derived_subgroup(&derived);
        return Ok(FusionSystem::build(s4, &v, 2)?.with_name("F_V(S4)"));
    }
    let p = default_prime(&n)?;
    let g = Arc::new(presets::group(&n)?);
    let s = g.sylow_subgroup(p)?;
    let label = format!("F_{}({})", s.order(), g.name());
    Ok(FusionSystem::build(g, &s, p)?.with_name(&label))
}

/// Fusion system from a group name, a prime, and an optional Sylow selector.
pub fn fusion_from(group_name: &str, selector: Option<&str>, prime: Option<u64>) -> Result<FusionSystem> {
    let g = Arc::new(presets::group(group_name)?);
    let (s, p) = match selector {
        Some(sel) => select_subgroup(&g, sel, prime)?,
        None => {
            let p = match prime {
                Some(p) => p,
                None => default_prime(group_name)?,
            };
            (g.sylow_subgroup(p)?, p)
        }
    };
    let label = format!("F_{}({})", s.order(), g.name());
    Ok(FusionSystem::build(g, &s, p)?.with_name(&label))
}
