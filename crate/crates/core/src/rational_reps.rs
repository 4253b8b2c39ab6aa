//! Rational irreducible characters of a p-group via the Ritter–Segal
//! construction, with cyclic detection, linearization and Schur indices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::characters::{CharacterTable, ClassFunction};
use crate::cyclotomic::{units_mod, Cyclotomic};
use crate::error::{Error, Result};
use crate::group::SubgroupClassification;
use crate::intlin::{self, IntMatrix, IntegerLattice};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Trivial,
    /// Ind_P^S Inf_{P/Q}^P I_{P/Q}, by subgroup labels.
    Pair { p: String, q: String },
}

/// The rational irreducible characters of S.
#[derive(Clone, Debug)]
pub struct RationalBasis {
    pub characters: Vec<ClassFunction>,
    pub provenance: Vec<Provenance>,
    /// Subgroup indices of representatives of the cyclic subgroup classes.
    pub cyclic_classes: Vec<usize>,
    norms: Vec<BigRational>,
}

impl RationalBasis {
    pub fn ritter_segal(table: &CharacterTable, subgroups: &SubgroupClassification, p: u64) -> Result<Self> {
        let s = table.group();
        let n = table.conductor();
        let mut candidates: Vec<(ClassFunction, Provenance)> = Vec::new();
        for class in subgroups.classes() {
            let big = subgroups.subgroup(class.representative());
            for (qi, small) in subgroups.subgroups().iter().enumerate() {
                if small.order() * p as usize != big.order() || !small.is_subset(big) {
                    continue;
                }
                // inflated augmentation character of P/Q ≅ C_p
                let values: Vec<Cyclotomic> = big
                    .members()
                    .iter()
                    .map(|&x| Cyclotomic::from_int(n, if small.contains(x) { p as i64 - 1 } else { -1 }))
                    .collect();
                let chi = table.induce(big, &values);
                let q_label = subgroups.class(subgroups.class_of(qi)).label.clone();
                candidates.push((chi, Provenance::Pair { p: class.label.clone(), q: q_label }));
            }
        }
        candidates.sort_by(|a, b| a.0.values[0].coords()[0].cmp(&b.0.values[0].coords()[0]));
        let mut characters = vec![table.trivial()];
        let mut provenance = vec![Provenance::Trivial];
        for (chi, prov) in candidates {
            if characters.contains(&chi) {
                continue;
            }
            let orthogonal = characters
                .iter()
                .all(|old| table.inner_rational(&chi, old).map(|x| x.is_zero()).unwrap_or(false));
            if orthogonal {
                characters.push(chi);
                provenance.push(prov);
            }
        }
        let cyclic_classes: Vec<usize> = subgroups
            .classes()
            .iter()
            .map(|c| c.representative())
            .filter(|&i| {
                let h = subgroups.subgroup(i);
                h.members().iter().any(|&x| s.element_order(x) == h.order())
            })
            .collect();
        if characters.len() != cyclic_classes.len() {
            return Err(Error::consistency(format!(
                "{} rational irreducibles but {} classes of cyclic subgroups",
                characters.len(),
                cyclic_classes.len()
            )));
        }
        for chi in &characters {
            for c in table.decompose(chi)? {
                if c.is_negative() {
                    return Err(Error::consistency("Ritter–Segal character is not an actual character"));
                }
            }
        }
        let norms = characters.iter().map(|c| table.inner_rational(c, c)).collect::<Result<_>>()?;
        Ok(RationalBasis { characters, provenance, cyclic_classes, norms })
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn label(&self, i: usize) -> String {
        format!("Q{}", i + 1)
    }

    pub fn degree(&self, i: usize) -> BigInt {
        self.characters[i].values[0].as_integer().unwrap()
    }

    /// Coordinates of a rational virtual character in this basis.
    pub fn coordinates(&self, table: &CharacterTable, chi: &ClassFunction) -> Result<Vec<BigInt>> {
        let coords: Vec<BigInt> = self
            .characters
            .iter()
            .zip(&self.norms)
            .map(|(b, nb)| {
                let c = table.inner_rational(chi, b)? / nb;
                if !c.is_integer() {
                    return Err(Error::consistency("not a rational virtual character"));
                }
                Ok(c.to_integer())
            })
            .collect::<Result<_>>()?;
        if self.combine(table, &coords) != *chi {
            return Err(Error::consistency("class function is not in the rational span"));
        }
        Ok(coords)
    }

    pub fn combine(&self, table: &CharacterTable, coords: &[BigInt]) -> ClassFunction {
        let mut f = table.constant(0);
        for (c, b) in coords.iter().zip(&self.characters) {
            if !c.is_zero() {
                f = f.add(&b.scale_int(c));
            }
        }
        f
    }

    /// Rows: cyclic classes; columns: basis characters; entries dim V^C.
    pub fn detection_matrix(&self, table: &CharacterTable, subgroups: &SubgroupClassification) -> Result<IntMatrix> {
        let m: IntMatrix = self
            .cyclic_classes
            .iter()
            .map(|&c| {
                self.characters
                    .iter()
                    .map(|chi| table.fixed_dim_int(chi, subgroups.subgroup(c)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        if intlin::det(&m).is_zero() {
            return Err(Error::consistency("cyclic detection matrix is singular"));
        }
        Ok(m)
    }
}

/// Σ m_H · (permutation character of S/H).
pub fn linearize(table: &CharacterTable, subgroups: &SubgroupClassification, set: &[(usize, i64)]) -> ClassFunction {
    let mut f = table.constant(0);
    for &(h, m) in set {
        f = f.add(&table.permutation_character(subgroups.subgroup(h)).scale_int(&BigInt::from(m)));
    }
    f
}

/// Coordinates of each transitive S/H (one per subgroup class) in the
/// rational basis, and whether they span the full lattice.
pub fn linearization_lattice(
    table: &CharacterTable,
    subgroups: &SubgroupClassification,
    basis: &RationalBasis,
) -> Result<(IntMatrix, bool)> {
    let rows: IntMatrix = subgroups
        .classes()
        .iter()
        .map(|c| basis.coordinates(table, &table.permutation_character(subgroups.subgroup(c.representative()))))
        .collect::<Result<_>>()?;
    let lattice = IntegerLattice::from_generators(basis.len(), &rows);
    Ok((rows, lattice == IntegerLattice::full(basis.len())))
}

#[derive(Clone, Debug, Serialize)]
pub struct SchurEntry {
    /// Complex irreducible labels in the Galois orbit.
    pub orbit: Vec<String>,
    pub rational: String,
    pub multiplier: u64,
}

/// For each Galois orbit of complex irreducibles, the m with
/// m·(orbit sum) a rational irreducible character.
pub fn schur_index_report(table: &CharacterTable, basis: &RationalBasis) -> Result<Vec<SchurEntry>> {
    let n = table.conductor();
    let mut seen = vec![false; table.len()];
    let mut out = Vec::new();
    for i in 0..table.len() {
        if seen[i] {
            continue;
        }
        let chi = table.irreducible(i);
        let mut orbit: Vec<usize> = Vec::new();
        for k in units_mod(n) {
            let g = chi.galois(k);
            let j = table
                .irreducibles()
                .iter()
                .position(|x| *x == g)
                .ok_or_else(|| Error::consistency("Galois conjugate missing from the table"))?;
            if !orbit.contains(&j) {
                orbit.push(j);
            }
        }
        orbit.sort_unstable();
        for &j in &orbit {
            seen[j] = true;
        }
        let mut sum = table.constant(0);
        for &j in &orbit {
            sum = sum.add(table.irreducible(j));
        }
        let mut found = None;
        for (r, rho) in basis.characters.iter().enumerate() {
            let m = rho.values[0].as_integer().unwrap();
            let d = sum.values[0].as_integer().unwrap();
            if (&m % &d).is_zero() {
                let mult = &m / &d;
                if sum.scale_int(&mult) == *rho {
                    found = Some((r, mult));
                    break;
                }
            }
        }
        let (r, mult) =
            found.ok_or_else(|| Error::consistency("Galois orbit sum is not proportional to a rational irreducible"))?;
        out.push(SchurEntry {
            orbit: orbit.iter().map(|&j| table.label(j)).collect(),
            rational: basis.label(r),
            multiplier: u64::try_from(mult).unwrap(),
        });
    }
    Ok(out)
}

/// Index of R_Q(S) in the group of rational-valued virtual characters.
pub fn schur_gap_index(report: &[SchurEntry]) -> u64 {
    report.iter().map(|e| e.multiplier).product()
}
