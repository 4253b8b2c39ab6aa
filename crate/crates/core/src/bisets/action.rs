//! Actions of (S,S)-bisets on characters, super class functions and
//! Burnside ring elements of S, and the transfers they induce.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{BisetAlgebra, BisetElement};
use crate::characters::{CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;

/// X·χ with [Q,ψ]·χ = Ind_Q^S(χ ∘ ψ).
pub fn act_on_character(alg: &BisetAlgebra, table: &CharacterTable, x: &BisetElement, chi: &ClassFunction) -> ClassFunction {
    let mut out = ClassFunction::zero(table.conductor(), table.len());
    for (&id, c) in &x.coeffs {
        let t = alg.orbit_type(id);
        let q = alg.subgroups().subgroup(t.q);
        let values: Vec<Cyclotomic> = t.map.iter().map(|&y| table.value_at(chi, y).clone()).collect();
        out = out.add(&table.induce(q, &values).scale(c));
    }
    out
}

/// Double coset representatives A\S/B for subgroups given by member lists.
fn double_cosets(alg: &BisetAlgebra, a: &[usize], b: &[usize]) -> Vec<usize> {
    let s = alg.s();
    let mut seen = vec![false; s.order()];
    let mut reps = Vec::new();
    for t in 0..s.order() {
        if seen[t] {
            continue;
        }
        reps.push(t);
        for &x in a {
            let xt = s.mul(x, t);
            for &y in b {
                seen[s.mul(xt, y)] = true;
            }
        }
    }
    reps
}

/// X·f for f a function on S-classes of subgroups (indexed by class), with
/// ([Q,ψ]·f)(L) = Σ_{t ∈ L\S/Q} f(ψ(Q ∩ t⁻¹Lt)).
pub fn act_on_superclass(alg: &BisetAlgebra, x: &BisetElement, f: &[BigRational]) -> Vec<BigRational> {
    let s = alg.s();
    let subs = alg.subgroups();
    let mut out = vec![BigRational::zero(); subs.classes().len()];
    for (&id, c) in &x.coeffs {
        let t = alg.orbit_type(id);
        let q = subs.subgroup(t.q);
        for (col, class) in subs.classes().iter().enumerate() {
            let l = subs.subgroup(class.representative());
            let mut acc = BigRational::zero();
            for r in double_cosets(alg, l.members(), q.members()) {
                let mut image: Vec<usize> = q
                    .members()
                    .iter()
                    .zip(&t.map)
                    .filter(|(&y, _)| l.contains(s.conj(r, y)))
                    .map(|(_, &v)| v)
                    .collect();
                image.sort_unstable();
                image.dedup();
                let k = subs.find_members(&image).expect("image of a subgroup");
                acc += &f[subs.class_of(k)];
            }
            out[col] += c * acc;
        }
    }
    out
}

/// X·a for a = Σ a_L [S/L] (indexed by subgroup class), with
/// [Q,ψ]·[S/L] = Σ_{t ∈ ψ(Q)\S/L} [S/ψ⁻¹(tLt⁻¹)].
pub fn act_on_burnside(alg: &BisetAlgebra, x: &BisetElement, a: &[BigRational]) -> Vec<BigRational> {
    let s = alg.s();
    let subs = alg.subgroups();
    let mut out = vec![BigRational::zero(); subs.classes().len()];
    for (&id, c) in &x.coeffs {
        let t = alg.orbit_type(id);
        let q = subs.subgroup(t.q);
        let mut image = t.map.clone();
        image.sort_unstable();
        image.dedup();
        for (col, class) in subs.classes().iter().enumerate() {
            if a[col].is_zero() {
                continue;
            }
            let l = subs.subgroup(class.representative());
            for r in double_cosets(alg, &image, l.members()) {
                let rinv = s.inv(r);
                // ψ(y) ∈ rLr⁻¹
                let pre: Vec<usize> = q
                    .members()
                    .iter()
                    .zip(&t.map)
                    .filter(|(_, &v)| l.contains(s.conj(rinv, v)))
                    .map(|(&y, _)| y)
                    .collect();
                let k = subs.find_members(&pre).expect("preimage of a subgroup");
                out[subs.class_of(k)] += c * &a[col];
            }
        }
    }
    out
}

/// Values on S-classes from values on F-classes.
pub fn f_to_s_classes(fs: &FusionSystem, f: &[BigRational]) -> Vec<BigRational> {
    let subs = fs.subgroups();
    (0..subs.classes().len())
        .map(|c| f[fs.f_class_of_subgroup(subs.class(c).representative())].clone())
        .collect()
}

/// Values on F-classes from an F-stable function on S-classes.
pub fn s_to_f_classes(fs: &FusionSystem, f: &[BigRational]) -> Result<Vec<BigRational>> {
    let subs = fs.subgroups();
    let mut out: Vec<Option<BigRational>> = vec![None; fs.f_classes().len()];
    for (c, v) in f.iter().enumerate() {
        let fc = fs.f_class_of_subgroup(subs.class(c).representative());
        match &out[fc] {
            Some(w) if w != v => return Err(Error::precondition("super class function is not F-stable")),
            _ => out[fc] = Some(v.clone()),
        }
    }
    Ok(out.into_iter().map(|v| v.unwrap()).collect())
}

pub fn integers_to_rationals(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bisets::group_as_biset;
    use crate::fusion::presets;

    #[test]
    fn identity_acts_trivially() {
        let fs = presets::fusion("D8").unwrap();
        let alg = BisetAlgebra::for_fusion(&fs);
        let id = BisetElement::basis(alg.identity_id());
        let table = CharacterTable::compute(fs.s()).unwrap();
        for chi in table.irreducibles() {
            assert_eq!(act_on_character(&alg, &table, &id, chi), *chi);
        }
        let f: Vec<BigRational> = (0..alg.subgroups().classes().len()).map(|i| BigRational::from_integer((i as i64 * 3 + 1).into())).collect();
        assert_eq!(act_on_superclass(&alg, &id, &f), f);
        assert_eq!(act_on_burnside(&alg, &id, &f), f);
    }

    #[test]
    fn group_biset_is_restricted_induction() {
        // G acting on characters of S is Res_S Ind_S^G
        let fs = presets::fusion("S3").unwrap();
        let alg = BisetAlgebra::for_fusion(&fs);
        let x = group_as_biset(&fs, &alg);
        let table = CharacterTable::compute(fs.s()).unwrap();
        let g_table = CharacterTable::compute(fs.ambient()).unwrap();
        for chi in table.irreducibles() {
            let values: Vec<Cyclotomic> = (0..fs.s().order()).map(|y| table.value_at(chi, y).clone()).collect();
            let embedded = fs.ambient().closure(fs.embedding());
            let ordered: Vec<Cyclotomic> = embedded
                .members()
                .iter()
                .map(|&g| values[fs.restrict_index(g).unwrap()].clone())
                .collect();
            let ind = g_table.induce(&embedded, &ordered);
            // the values are rational here, so they can move to the smaller field
            let res = table.from_element_values(|y| {
                Cyclotomic::from_rational(table.conductor(), g_table.value_at(&ind, fs.embed(y)).as_rational().unwrap().clone())
            });
            assert_eq!(act_on_character(&alg, &table, &x, chi), res);
        }
    }
}
