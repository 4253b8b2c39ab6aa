//! Frobenius–Schur indicators, real irreducible characters and Galois transfer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::{CharacterTable, ClassFunction, FieldTag};
use crate::cyclotomic::{units_mod, Cyclotomic};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RealKind {
    /// ν = 1: χ itself is afforded by a real representation.
    Real,
    /// ν = 0: χ + χ̄.
    Complex,
    /// ν = −1: 2χ.
    Quaternionic,
}

/// An irreducible real character with the complex irreducibles it contains.
#[derive(Clone, Debug)]
pub struct RealCharacter {
    pub character: ClassFunction,
    pub kind: RealKind,
    pub constituents: Vec<usize>,
}

/// ν(χ) = (1/|G|) Σ_g χ(g²).
pub fn frobenius_schur(table: &CharacterTable, chi: &ClassFunction) -> Result<i32> {
    let n = table.conductor();
    let mut acc = Cyclotomic::zero(n);
    for c in 0..table.classes().len() {
        let v = &chi.values[table.square_class(c)];
        acc = &acc + &v.scale_int(table.classes().size(c) as i64);
    }
    let nu = acc.scale(&BigRational::new(BigInt::one(), BigInt::from(table.group().order())));
    match nu.as_integer().map(|x| i32::try_from(x).unwrap_or(i32::MAX)) {
        Some(v @ -1..=1) => Ok(v),
        _ => Err(Error::consistency(format!("indicator {nu} outside {{-1, 0, 1}}"))),
    }
}

/// Real irreducible characters, ordered by their first complex constituent.
pub fn real_irreducibles(table: &CharacterTable) -> Result<Vec<RealCharacter>> {
    let mut used = vec![false; table.len()];
    let mut out = Vec::new();
    for i in 0..table.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let chi = table.irreducible(i);
        let nu = frobenius_schur(table, chi)?;
        let rc = match nu {
            1 => RealCharacter { character: chi.clone(), kind: RealKind::Real, constituents: vec![i] },
            -1 => RealCharacter {
                character: chi.scale_int(&BigInt::from(2)),
                kind: RealKind::Quaternionic,
                constituents: vec![i, i],
            },
            _ => {
                let bar = chi.conj();
                let j = table
                    .irreducibles()
                    .iter()
                    .position(|x| *x == bar)
                    .ok_or_else(|| Error::consistency("complex conjugate is not in the table"))?;
                used[j] = true;
                RealCharacter { character: chi.add(&bar), kind: RealKind::Complex, constituents: vec![i, j] }
            }
        };
        out.push(rc);
    }
    Ok(out)
}

/// tr(χ) = Σ_σ σχ over Gal(𝕃/K) with 𝕃 = K(ζ_n), n the table conductor.
pub fn galois_transfer(table: &CharacterTable, chi: &ClassFunction, target: FieldTag) -> Result<ClassFunction> {
    let n = table.conductor();
    match target {
        FieldTag::C => Ok(chi.clone()),
        FieldTag::R => {
            if n <= 2 {
                Ok(chi.clone())
            } else {
                Ok(chi.add(&chi.conj()))
            }
        }
        FieldTag::Q => {
            let mut acc = ClassFunction::zero(n, chi.len());
            for k in units_mod(n) {
                acc = acc.add(&chi.galois(k));
            }
            Ok(acc)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::presets;

    fn table(name: &str) -> CharacterTable {
        CharacterTable::compute(&presets::group(name).unwrap()).unwrap()
    }

    #[test]
    fn indicators() {
        let q8 = table("Q8");
        assert_eq!(frobenius_schur(&q8, &q8.trivial()).unwrap(), 1);
        let two = q8.len() - 1;
        assert_eq!(q8.degree(two), BigInt::from(2));
        assert_eq!(frobenius_schur(&q8, q8.irreducible(two)).unwrap(), -1);
        let reals = real_irreducibles(&q8).unwrap();
        assert_eq!(reals.len(), 5);
        assert_eq!(reals[4].kind, RealKind::Quaternionic);
        // quaternionic 4-dimensional real character: 4 at 1, no fixed vectors elsewhere
        let g = q8.group().clone();
        assert_eq!(q8.fixed_dim_int(&reals[4].character, &g.trivial_subgroup()).unwrap(), BigInt::from(4));
        for x in 1..8 {
            let h = g.closure(&[x]);
            assert_eq!(q8.fixed_dim_int(&reals[4].character, &h).unwrap(), BigInt::from(0));
        }
        let c3 = table("C3");
        assert_eq!(frobenius_schur(&c3, c3.irreducible(1)).unwrap(), 0);
        let reals = real_irreducibles(&c3).unwrap();
        assert_eq!(reals.len(), 2);
        assert_eq!(reals[1].kind, RealKind::Complex);
        assert_eq!(reals[1].character.as_integers().unwrap(), vec![BigInt::from(2), BigInt::from(-1), BigInt::from(-1)]);
    }

    #[test]
    fn transfer_to_rationals() {
        let c4 = table("C4");
        let g = c4.group();
        let r = g.generator_indices()[0];
        let faithful = c4
            .irreducibles()
            .iter()
            .find(|chi| c4.value_at(chi, r).as_rational().is_none())
            .unwrap();
        let tr = galois_transfer(&c4, faithful, FieldTag::Q).unwrap();
        let got: Vec<BigInt> = (0..4).map(|k| c4.value_at(&tr, g.pow(r, k)).as_integer().unwrap()).collect();
        assert_eq!(got, [2, 0, -2, 0].map(BigInt::from).to_vec());
        let d8 = table("D8");
        let chi = d8.irreducible(1);
        let tr = galois_transfer(&d8, chi, FieldTag::Q).unwrap();
        assert_eq!(tr, chi.scale_int(&BigInt::from(2)));
    }
}
