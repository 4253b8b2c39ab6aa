//! The minimal characteristic biset Ω_F, built level by level from marks.
//!
//! A right-free biset supported on F is bistable exactly when its marks
//! |X^Δ(Q,ψ)| agree for all ψ ∈ F(Q,S) and all Q in one F-class. Adding
//! c copies of [Q,ψ] only changes marks at Δ(Q,ψ) among subgroups of order
//! |Q| or less, so working down from S the least admissible common mark
//! fixes the multiplicities at each level.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{group_as_biset, is_characteristic, BisetAlgebra, BisetElement, OrbitType};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;

/// |X^Δ(Q,ψ)| for X = [R,χ]: pairs (a,b) with a⁻¹qa ∈ R and
/// χ(a⁻¹qa) = b⁻¹ψ(q)b for q in Q, divided by |R|.
pub fn mark(alg: &BisetAlgebra, x: &OrbitType, q: usize, psi: &[usize]) -> u64 {
    let s = alg.s();
    let subs = alg.subgroups();
    let r = subs.subgroup(x.q);
    let qs = subs.subgroup(q);
    if r.order() < qs.order() || !r.order().is_multiple_of(qs.order()) {
        return 0;
    }
    let gens = qs.generators(s);
    let gen_images: Vec<usize> = gens.iter().map(|&g| psi[qs.position(g).unwrap()]).collect();
    let mut count = 0u64;
    for a in 0..s.order() {
        let ainv = s.inv(a);
        let mut targets = Vec::with_capacity(gens.len());
        let mut inside = true;
        for &g in &gens {
            match r.position(s.conj(ainv, g)) {
                Some(pos) => targets.push(x.map[pos]),
                None => {
                    inside = false;
                    break;
                }
            }
        }
        if !inside {
            continue;
        }
        for b in 0..s.order() {
            let binv = s.inv(b);
            if gen_images.iter().zip(&targets).all(|(&y, &t)| s.conj(binv, y) == t) {
                count += 1;
            }
        }
    }
    count / r.order() as u64
}

/// Ω_F: the least characteristic biset, checked against the defining
/// properties and (for Sylow S) against the biset G.
pub fn minimal_characteristic_biset(fs: &FusionSystem, alg: &BisetAlgebra) -> Result<BisetElement> {
    let basis = alg.fusion_basis(fs);
    let mut f_classes: Vec<usize> = (0..fs.f_classes().len()).collect();
    f_classes.sort_by_key(|&fc| std::cmp::Reverse(fs.subgroup(fs.f_class_representative(fc)).order()));

    let mut omega = BisetElement::zero();
    let mut support: Vec<(OrbitType, u64)> = Vec::new();
    for (level, &fc) in f_classes.iter().enumerate() {
        let types: Vec<(usize, OrbitType)> = basis
            .iter()
            .map(|&id| (id, alg.orbit_type(id)))
            .filter(|(_, t)| fs.f_class_of_subgroup(t.q) == fc)
            .collect();
        let mut current = Vec::with_capacity(types.len());
        let mut selfmark = Vec::with_capacity(types.len());
        for (_, t) in &types {
            current.push(support.iter().map(|(x, c)| c * mark(alg, x, t.q, &t.map)).sum::<u64>());
            selfmark.push(mark(alg, t, t.q, &t.map));
        }
        let floor = if level == 0 { 1 } else { 0 };
        let step: u64 = selfmark.iter().fold(1, |acc, &m| num_integer::lcm(acc, m));
        let start = current.iter().copied().max().unwrap_or(0).max(floor);
        let target = (start..start + step)
            .find(|&m| current.iter().zip(&selfmark).all(|(&c, &s)| (m - c) % s == 0))
            .ok_or_else(|| Error::computation("no common mark at an F-class"))?;
        for (((id, t), &c), &sm) in types.iter().zip(&current).zip(&selfmark) {
            let mult = (target - c) / sm;
            if mult > 0 {
                omega.add_term(*id, &BigRational::from_integer(BigInt::from(mult)));
                support.push((t.clone(), mult));
            }
        }
    }

    let verdict = is_characteristic(fs, alg, &omega);
    if !verdict.holds() {
        return Err(Error::consistency(format!(
            "Ω_F fails the characteristic checks: {}",
            verdict.failure.unwrap_or_default()
        )));
    }
    if fs.is_sylow() && !omega.le(&group_as_biset(fs, alg)) {
        return Err(Error::consistency("Ω_F is not contained in the biset G"));
    }
    Ok(omega)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::presets;

    #[test]
    fn identity_marks() {
        let fs = presets::fusion("D8").unwrap();
        let alg = BisetAlgebra::for_fusion(&fs);
        let id = alg.orbit_type(alg.identity_id());
        // |Z(D8)| = 2
        assert_eq!(mark(&alg, &id, id.q, &id.map), 2);
        assert_eq!(mark(&alg, &id, 0, &[0]), 8);
    }

    #[test]
    fn minimal_bisets() {
        let fs = presets::fusion("Q8").unwrap();
        let alg = BisetAlgebra::for_fusion(&fs);
        assert_eq!(minimal_characteristic_biset(&fs, &alg).unwrap(), BisetElement::basis(alg.identity_id()));
        for name in ["S3", "A4", "S4", "C5-semidirect-C4", "SL2(3)"] {
            let fs = presets::fusion(name).unwrap();
            let alg = BisetAlgebra::for_fusion(&fs);
            let omega = minimal_characteristic_biset(&fs, &alg).unwrap();
            assert!(omega.is_actual(), "{name}");
        }
        let fs = presets::fusion("A4").unwrap();
        let alg = BisetAlgebra::for_fusion(&fs);
        let omega = minimal_characteristic_biset(&fs, &alg).unwrap();
        assert_eq!(omega, group_as_biset(&fs, &alg));
    }
}
