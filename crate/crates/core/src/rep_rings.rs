//! Representation rings R_K(S) for K = Q, R, C, their F-stable sublattices,
//! and the dimension-function matrices.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::characters::{real_irreducibles, CharacterTable, ClassFunction, FieldTag, RealKind};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::intlin::{IntMatrix, IntegerLattice};
use crate::rational_reps::RationalBasis;
use crate::superclass::Domain;

/// The irreducible K-characters of S, in a fixed order.
#[derive(Clone, Debug)]
pub struct FieldBasis {
    pub field: FieldTag,
    pub characters: Vec<ClassFunction>,
    pub labels: Vec<String>,
    /// Complex irreducible index and its multiplicity, used to read off
    /// coordinates (unused for Q).
    leading: Vec<(usize, BigInt)>,
}

impl FieldBasis {
    pub fn complex(table: &CharacterTable) -> Self {
        FieldBasis {
            field: FieldTag::C,
            characters: table.irreducibles().to_vec(),
            labels: (0..table.len()).map(|i| table.label(i)).collect(),
            leading: (0..table.len()).map(|i| (i, BigInt::one())).collect(),
        }
    }

    pub fn real(table: &CharacterTable) -> Result<Self> {
        let reals = real_irreducibles(table)?;
        let labels = (0..reals.len()).map(|i| format!("R{}", i + 1)).collect();
        let leading = reals
            .iter()
            .map(|r| (r.constituents[0], BigInt::from(if r.kind == RealKind::Quaternionic { 2 } else { 1 })))
            .collect();
        Ok(FieldBasis { field: FieldTag::R, characters: reals.into_iter().map(|r| r.character).collect(), labels, leading })
    }

    pub fn rational(basis: &RationalBasis) -> Self {
        FieldBasis {
            field: FieldTag::Q,
            characters: basis.characters.clone(),
            labels: (0..basis.len()).map(|i| basis.label(i)).collect(),
            leading: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.characters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.characters.is_empty()
    }

    pub fn degrees(&self) -> Vec<BigInt> {
        self.characters.iter().map(|c| c.values[0].as_integer().unwrap()).collect()
    }

    pub fn combine(&self, table: &CharacterTable, coords: &[BigInt]) -> ClassFunction {
        let mut f = table.constant(0);
        for (c, chi) in coords.iter().zip(&self.characters) {
            if !c.is_zero() {
                f = f.add(&chi.scale_int(c));
            }
        }
        f
    }

    /// Coordinates of a virtual K-character; errors if it is not one.
    pub fn coordinates(&self, table: &CharacterTable, rational: Option<&RationalBasis>, chi: &ClassFunction) -> Result<Vec<BigInt>> {
        let coords = match self.field {
            FieldTag::Q => rational
                .ok_or_else(|| Error::input("rational coordinates need the rational basis"))?
                .coordinates(table, chi)?,
            _ => {
                let complex = table.decompose(chi)?;
                self.leading.iter().map(|(i, m)| &complex[*i] / m).collect()
            }
        };
        if self.combine(table, &coords) != *chi {
            return Err(Error::precondition(format!("class function is not a virtual {:?}-character", self.field)));
        }
        Ok(coords)
    }

    /// Columns of `domain`, rows: dim V_i^H at the column representatives.
    pub fn dim_matrix(&self, table: &CharacterTable, fs: &FusionSystem, domain: &Domain) -> Result<IntMatrix> {
        self.characters
            .iter()
            .map(|chi| {
                domain
                    .representatives
                    .iter()
                    .map(|&h| table.fixed_dim_int(chi, fs.subgroup(h)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect()
    }

    /// Coefficient vectors x with Σ x_i χ_i constant on every F-class of elements.
    pub fn stable_sublattice(&self, table: &CharacterTable, fs: &FusionSystem) -> IntegerLattice {
        let n = table.conductor();
        let cls = table.classes();
        let mut columns: Vec<Vec<BigRational>> = Vec::new();
        for fc in fs.element_f_classes() {
            let first = cls.class_of(fc[0]);
            let mut seen = vec![first];
            for &x in &fc[1..] {
                let c = cls.class_of(x);
                if seen.contains(&c) {
                    continue;
                }
                seen.push(c);
                let diffs: Vec<Vec<BigRational>> = self
                    .characters
                    .iter()
                    .map(|chi| (&chi.values[c].lift(n) - &chi.values[first].lift(n)).coords().to_vec())
                    .collect();
                for k in 0..diffs[0].len() {
                    columns.push(diffs.iter().map(|d| d[k].clone()).collect());
                }
            }
        }
        columns.retain(|col| col.iter().any(|x| !x.is_zero()));
        if columns.is_empty() {
            return IntegerLattice::full(self.len());
        }
        let rows: IntMatrix = (0..self.len())
            .map(|i| {
                columns
                    .iter()
                    .map(|col| {
                        let d = crate::intlin::common_denominator(col);
                        (&col[i] * BigRational::from_integer(d)).to_integer()
                    })
                    .collect()
            })
            .collect();
        let ker = crate::intlin::left_kernel(&rows, columns.len());
        IntegerLattice::from_generators(self.len(), &ker)
    }
}

/// A virtual K-representation in the coordinates of a field basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepVector {
    pub field: FieldTag,
    #[serde(serialize_with = "crate::serde_num::ints")]
    pub coords: Vec<BigInt>,
}

impl RepVector {
    pub fn is_actual(&self) -> bool {
        self.coords.iter().all(|c| c >= &BigInt::zero())
    }

    /// Renders as "2*R1 + R3 - R4".
    pub fn describe(&self, basis: &FieldBasis) -> String {
        let mut parts = Vec::new();
        for (c, l) in self.coords.iter().zip(&basis.labels) {
            if c.is_zero() {
                continue;
            }
            let sign = if c < &BigInt::zero() { "-" } else { "+" };
            let mag = if c.magnitude() == &One::one() { String::new() } else { format!("{}*", c.magnitude()) };
            parts.push(format!("{sign} {mag}{l}"));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let s = parts.join(" ");
        s.strip_prefix("+ ").map(str::to_string).unwrap_or(s)
    }
}

/// Dim x as a vector over the columns of a dim matrix.
pub fn dim_of(dim: &IntMatrix, coords: &[BigInt], ncols: usize) -> Vec<BigInt> {
    crate::intlin::vec_mat(coords, dim, ncols)
}

/// Tensor product of two virtual K-characters, in basis coordinates.
pub fn tensor(
    table: &CharacterTable,
    basis: &FieldBasis,
    rational: Option<&RationalBasis>,
    a: &[BigInt],
    b: &[BigInt],
) -> Result<Vec<BigInt>> {
    let prod = basis.combine(table, a).mul(&basis.combine(table, b));
    basis.coordinates(table, rational, &prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::presets;

    #[test]
    fn stable_real_lattice_frobenius_twenty() {
        let fs = presets::fusion("C5-semidirect-C4").unwrap();
        let table = CharacterTable::compute(fs.s()).unwrap();
        let real = FieldBasis::real(&table).unwrap();
        assert_eq!(real.len(), 3);
        let lat = real.stable_sublattice(&table, &fs);
        assert_eq!(lat.rank(), 2);
        let dom = Domain::f_classes(&fs);
        let dim = real.dim_matrix(&table, &fs, &dom).unwrap();
        let image = lat.image(&dim, dom.len());
        // {1, I_S} ↦ (1,1), (4,0)
        let expect = IntegerLattice::from_generators(2, &[vec![1.into(), 1.into()], vec![4.into(), 0.into()]]);
        assert_eq!(image, expect);
    }

    #[test]
    fn trivial_fusion_everything_stable() {
        let fs = presets::fusion("D8").unwrap();
        let table = CharacterTable::compute(fs.s()).unwrap();
        let c = FieldBasis::complex(&table);
        assert_eq!(c.stable_sublattice(&table, &fs), IntegerLattice::full(c.len()));
    }

    #[test]
    fn real_coordinates_and_tensor() {
        let fs = presets::fusion("Q8").unwrap();
        let table = CharacterTable::compute(fs.s()).unwrap();
        let real = FieldBasis::real(&table).unwrap();
        let reg = table.regular();
        let coords = real.coordinates(&table, None, &reg).unwrap();
        // regular = 1+1+1+1 (linear) + two copies of the 2-dim, i.e. one quaternionic real
        assert_eq!(coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(), vec!["1", "1", "1", "1", "1"]);
        let unit = |i: usize| (0..5).map(|j| BigInt::from((i == j) as i64)).collect::<Vec<_>>();
        assert_eq!(tensor(&table, &real, None, &unit(1), &unit(1)).unwrap(), unit(0));
        let rv = RepVector { field: FieldTag::R, coords };
        assert_eq!(rv.describe(&real), "R1 + R2 + R3 + R4 + R5");
    }
}
