//! The three defining properties of an F-characteristic biset.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{BisetAlgebra, BisetElement, TypeKey};
use crate::fusion::FusionSystem;

#[derive(Clone, Debug, Serialize)]
pub struct CharacteristicVerdict {
    pub support_in_f: bool,
    pub left_stable: bool,
    pub right_stable: bool,
    /// |X|/|S| is a p-local unit.
    pub unit_size: bool,
    /// First failing check, for diagnostics.
    pub failure: Option<String>,
}

impl CharacteristicVerdict {
    pub fn holds(&self) -> bool {
        self.support_in_f && self.left_stable && self.right_stable && self.unit_size
    }
}

/// Checks support in F, left and right F-stability, and |X|/|S| ∈ Z_(p)^×.
pub fn is_characteristic(fs: &FusionSystem, alg: &BisetAlgebra, x: &BisetElement) -> CharacteristicVerdict {
    let mut failure = None;
    let support_in_f = x.coeffs.keys().all(|&id| {
        let t = alg.orbit_type(id);
        let ok = fs.find_morphism(t.q, &t.map).is_some();
        if !ok && failure.is_none() {
            failure = Some(format!("{} is not an F-morphism", alg.type_label(id)));
        }
        ok
    });
    let left_stable = match unstable_witness(fs, alg, x) {
        None => true,
        Some(w) => {
            failure.get_or_insert(format!("left stability fails at {w}"));
            false
        }
    };
    let right_stable = support_in_f
        && match x.op(alg).map(|op| unstable_witness(fs, alg, &op)) {
            Ok(None) => true,
            Ok(Some(w)) => {
                failure.get_or_insert(format!("right stability fails at {w}"));
                false
            }
            Err(e) => {
                failure.get_or_insert(e.to_string());
                false
            }
        };
    let size = x.relative_size(alg);
    let p = BigInt::from(alg.prime());
    let unit_size = !size.is_zero() && !size.numer().is_multiple_of(&p) && !size.denom().is_multiple_of(&p);
    if !unit_size {
        failure.get_or_insert(format!("|X|/|S| = {size} is not a p-local unit"));
    }
    CharacteristicVerdict { support_in_f, left_stable, right_stable, unit_size, failure }
}

/// Some (P, φ) with [P,φ] ×_S X ≇ [P,incl] ×_S X as (P,S)-bisets.
fn unstable_witness(fs: &FusionSystem, alg: &BisetAlgebra, x: &BisetElement) -> Option<String> {
    let s = fs.s();
    let subs = fs.subgroups();
    for class in subs.classes() {
        let p = class.representative();
        let incl = restricted(alg, p, &fs.inclusion(p).map, x);
        let mut seen = Vec::new();
        for m in fs.homs_to_s(p) {
            // post-composing with an inner automorphism of S changes nothing
            let key = (0..s.order()).map(|b| m.map.iter().map(|&v| s.conj(b, v)).collect::<Vec<_>>()).min().unwrap();
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            if restricted(alg, p, &m.map, x) != incl {
                return Some(format!("{} via {:?}", class.label, m.map));
            }
        }
    }
    None
}

fn restricted(alg: &BisetAlgebra, p: usize, phi: &[usize], x: &BisetElement) -> BTreeMap<TypeKey, BigRational> {
    let mut out: BTreeMap<TypeKey, BigRational> = BTreeMap::new();
    for (&id, c) in &x.coeffs {
        for (key, n) in alg.left_restriction(p, phi, id) {
            let e = out.entry(key).or_insert_with(BigRational::zero);
            *e += c * BigInt::from(n);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisets::group_as_biset;
    use crate::fusion::presets;

    #[test]
    fn group_biset_is_characteristic() {
        for name in ["S3", "A4", "S4", "C5-semidirect-C4"] {
            let fs = presets::fusion(name).unwrap();
            let alg = BisetAlgebra::for_fusion(&fs);
            let x = group_as_biset(&fs, &alg);
            let v = is_characteristic(&fs, &alg, &x);
            assert!(v.holds(), "{name}: {:?}", v.failure);
        }
    }

    #[test]
    fn identity_is_not_characteristic_for_nontrivial_fusion() {
        let fs = presets::fusion("A4").unwrap();
        let alg = BisetAlgebra::for_fusion(&fs);
        let id = BisetElement::basis(alg.identity_id());
        let v = is_characteristic(&fs, &alg, &id);
        assert!(v.support_in_f && !v.left_stable && !v.holds());
        let fs = presets::fusion("D8").unwrap();
        let alg = BisetAlgebra::for_fusion(&fs);
        assert!(is_characteristic(&fs, &alg, &BisetElement::basis(alg.identity_id())).holds());
    }
}
