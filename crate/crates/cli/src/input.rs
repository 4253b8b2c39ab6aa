//! Loading groups, fusion systems and super class functions from the command line.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use fusiondim::fusion::{presets as fusion_presets, FusionSystem};
use fusiondim::group::{self, presets as group_presets, FiniteGroup, GroupSpec, Limits};
use fusiondim::superclass::{Domain, DomainKind};
use fusiondim::Error;
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

/// Where a group comes from, plus the JSON that identifies it in the input hash.
pub struct GroupSource {
    pub group: FiniteGroup,
    pub descriptor: Value,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| Error::input(format!("{}: {e}", path.display())).into())
}

/// `preset:NAME`, a path to a JSON group file, or a bare preset name.
pub fn load_group(source: &str) -> Result<GroupSource> {
    if let Some(name) = source.strip_prefix("preset:") {
        let group = group_presets::group(name)?;
        return Ok(GroupSource { descriptor: json!({ "preset": group_presets::normalize(name) }), group });
    }
    let path = Path::new(source);
    if path.is_file() {
        let spec: GroupSpec = read_json(path)?;
        let group = FiniteGroup::from_spec(&spec, &Limits::default())?;
        return Ok(GroupSource { descriptor: serde_json::to_value(&spec)?, group });
    }
    match group_presets::group(source) {
        Ok(group) => Ok(GroupSource { descriptor: json!({ "preset": group_presets::normalize(source) }), group }),
        Err(_) => bail!(Error::input(format!("'{source}' is neither a file nor a group preset"))),
    }
}

pub struct FusionSource {
    pub fs: FusionSystem,
    pub descriptor: Value,
}

/// A fusion system from `--fusion preset:NAME`, or from a group with a Sylow
/// selector and prime.
pub fn load_fusion(fusion: Option<&str>, group: Option<&str>, sylow: Option<&str>, prime: Option<u64>) -> Result<FusionSource> {
    if let Some(spec) = fusion {
        let preset = spec.strip_prefix("preset:");
        if preset.is_some() || !Path::new(spec).is_file() {
            let name = preset.unwrap_or(spec);
            if sylow.is_none() && prime.is_none() {
                let fs = fusion_presets::fusion(name)?;
                return Ok(FusionSource { descriptor: json!({ "fusion": group_presets::normalize(name) }), fs });
            }
        }
        return from_group(&load_group(spec)?, sylow, prime);
    }
    match group {
        Some(g) => from_group(&load_group(g)?, sylow, prime),
        None => bail!(Error::input("pass --fusion or --group")),
    }
}

fn from_group(src: &GroupSource, sylow: Option<&str>, prime: Option<u64>) -> Result<FusionSource> {
    let g = Arc::new(src.group.clone());
    let selector = sylow.unwrap_or("auto");
    let prime = match (prime, selector) {
        (Some(p), _) => Some(p),
        (None, "auto") => match g.prime_power_base() {
            Some(p) if p > 1 => Some(p),
            _ => bail!(Error::input(format!("{} is not a p-group; pass --prime or --sylow auto:p", g.name()))),
        },
        (None, _) => None,
    };
    let (s, p) = fusion_presets::select_subgroup(&g, selector, prime)?;
    if !group::is_prime(p) {
        bail!(Error::input(format!("{p} is not prime")));
    }
    let name = format!("F_{}({})", s.order(), g.name());
    let fs = FusionSystem::build(g, &s, p)?.with_name(&name);
    let descriptor = json!({ "group": src.descriptor, "sylow": selector, "prime": p });
    Ok(FusionSource { fs, descriptor })
}

/// `{"domain": "F", "values": {"1": 2, "4a": 0}}`
#[derive(Clone, Debug, Deserialize, serde::Serialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFile {
    pub domain: String,
    pub values: BTreeMap<String, i64>,
}

/// Reads a function from a path, or from inline JSON when the argument starts with `{`.
pub fn load_function(arg: &str) -> Result<FunctionFile> {
    if arg.trim_start().starts_with('{') {
        return serde_json::from_str(arg).map_err(|e| Error::input(format!("function: {e}")).into());
    }
    read_json(Path::new(arg))
}

impl FunctionFile {
    pub fn kind(&self) -> Result<DomainKind> {
        Ok(self.domain.parse::<DomainKind>()?)
    }

    /// Values in column order of `domain`; every label must be present exactly once.
    pub fn values_on(&self, domain: &Domain) -> Result<Vec<BigInt>> {
        if self.kind()? != domain.kind {
            bail!(Error::input(format!("function is on domain {} but {:?} is expected", self.domain, domain.kind)));
        }
        if let Some(extra) = self.values.keys().find(|k| domain.column(k).is_none()) {
            bail!(Error::input(format!("unknown class label '{extra}'; labels are {:?}", domain.labels)));
        }
        domain
            .labels
            .iter()
            .map(|l| {
                self.values
                    .get(l)
                    .map(|&v| BigInt::from(v))
                    .ok_or_else(|| Error::input(format!("missing value for class '{l}'")).into())
            })
            .collect()
    }
}
