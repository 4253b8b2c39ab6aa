//! Everything derived from one fusion system, computed once and shared.

use std::sync::OnceLock;

use crate::bisets::idempotent::IdempotentReport;
use crate::bisets::{characteristic_idempotent, minimal_characteristic_biset, BisetAlgebra, BisetElement};
use crate::characters::{CharacterTable, FieldTag};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::intlin::{IntMatrix, IntegerLattice};
use crate::rational_reps::RationalBasis;
use crate::rep_rings::FieldBasis;
use crate::superclass::{borel_smith_system, cba_system, ConditionSystem, Domain};

pub struct FusionContext {
    pub fs: FusionSystem,
    pub table: CharacterTable,
    pub rational: RationalBasis,
    pub complex_basis: FieldBasis,
    pub real_basis: FieldBasis,
    pub rational_basis: FieldBasis,
    pub s_domain: Domain,
    pub f_domain: Domain,
    pub alg: BisetAlgebra,
    omega: OnceLock<std::result::Result<IdempotentReport, Error>>,
    omega_min: OnceLock<std::result::Result<BisetElement, Error>>,
}

impl std::fmt::Debug for FusionContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FusionContext({:?})", self.fs)
    }
}

impl FusionContext {
    pub fn new(fs: FusionSystem) -> Result<Self> {
        let table = CharacterTable::compute(fs.s())?;
        let rational = RationalBasis::ritter_segal(&table, fs.subgroups(), fs.prime())?;
        let complex_basis = FieldBasis::complex(&table);
        let real_basis = FieldBasis::real(&table)?;
        let rational_basis = FieldBasis::rational(&rational);
        let s_domain = Domain::s_classes(&fs);
        let f_domain = Domain::f_classes(&fs);
        let alg = BisetAlgebra::for_fusion(&fs);
        Ok(FusionContext {
            fs,
            table,
            rational,
            complex_basis,
            real_basis,
            rational_basis,
            s_domain,
            f_domain,
            alg,
            omega: OnceLock::new(),
            omega_min: OnceLock::new(),
        })
    }

    pub fn basis(&self, field: FieldTag) -> &FieldBasis {
        match field {
            FieldTag::Q => &self.rational_basis,
            FieldTag::R => &self.real_basis,
            FieldTag::C => &self.complex_basis,
        }
    }

    pub fn stable_lattice(&self, field: FieldTag) -> IntegerLattice {
        self.basis(field).stable_sublattice(&self.table, &self.fs)
    }

    /// Dim matrix on F-classes; meaningful on F-stable vectors.
    pub fn dim_f(&self, field: FieldTag) -> Result<IntMatrix> {
        self.basis(field).dim_matrix(&self.table, &self.fs, &self.f_domain)
    }

    pub fn dim_s(&self, field: FieldTag) -> Result<IntMatrix> {
        self.basis(field).dim_matrix(&self.table, &self.fs, &self.s_domain)
    }

    /// Dim(R_K(F)) inside Z^{F-classes}.
    pub fn dim_image(&self, field: FieldTag) -> Result<IntegerLattice> {
        Ok(self.stable_lattice(field).image(&self.dim_f(field)?, self.f_domain.len()))
    }

    /// C_b(F) on F-classes.
    pub fn cb(&self) -> ConditionSystem {
        borel_smith_system(&self.fs, self.f_domain.clone())
    }

    /// C_b(S) on S-classes.
    pub fn cb_s(&self) -> ConditionSystem {
        borel_smith_system(&self.fs, self.s_domain.clone())
    }

    pub fn cba(&self) -> ConditionSystem {
        cba_system(&self.fs, false)
    }

    pub fn omega(&self) -> Result<&IdempotentReport> {
        self.omega
            .get_or_init(|| characteristic_idempotent(&self.fs, &self.alg))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn omega_min(&self) -> Result<&BisetElement> {
        self.omega_min
            .get_or_init(|| minimal_characteristic_biset(&self.fs, &self.alg))
            .as_ref()
            .map_err(Clone::clone)
    }
}
