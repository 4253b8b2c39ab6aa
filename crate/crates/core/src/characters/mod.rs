//! Complex character tables with exact cyclotomic values, class functions,
//! induction/restriction and fixed-point dimensions.

pub mod real;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::fusion::{FusionMorphism, FusionSystem};
use crate::group::{Abelianization, ConjugacyClasses, FiniteGroup, Limits, Subgroup, SubgroupClassification};

pub use real::{frobenius_schur, galois_transfer, real_irreducibles, RealCharacter, RealKind};

/// Coefficient field of a representation ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FieldTag {
    Q,
    R,
    C,
}

impl std::str::FromStr for FieldTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Q" | "q" => Ok(FieldTag::Q),
            "R" | "r" => Ok(FieldTag::R),
            "C" | "c" => Ok(FieldTag::C),
            _ => Err(Error::input(format!("unknown field '{s}' (expected Q, R or C)"))),
        }
    }
}

/// A class function: one value per element conjugacy class, all at the
/// conductor of the owning table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn zero(conductor: u32, classes: usize) -> Self {
        ClassFunction { values: vec![Cyclotomic::zero(conductor); classes] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect() }
    }

    /// Pointwise product (tensor product of characters).
    pub fn mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() }
    }

    pub fn scale(&self, q: &BigRational) -> ClassFunction {
        ClassFunction { values: self.values.iter().map(|a| a.scale(q)).collect() }
    }

    pub fn scale_int(&self, k: &BigInt) -> ClassFunction {
        self.scale(&BigRational::from_integer(k.clone()))
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction { values: self.values.iter().map(|a| a.conj()).collect() }
    }

    pub fn galois(&self, k: i64) -> ClassFunction {
        ClassFunction { values: self.values.iter().map(|a| a.galois(k)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().all(|v| v.as_rational().is_some())
    }

    /// Integer values, when every value is a rational integer.
    pub fn as_integers(&self) -> Option<Vec<BigInt>> {
        self.values.iter().map(|v| v.as_integer()).collect()
    }

    fn sort_key(&self) -> Vec<Vec<BigRational>> {
        self.values.iter().map(|v| v.coords().to_vec()).collect()
    }
}

/// The complex character table of a finite group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: FiniteGroup,
    classes: ConjugacyClasses,
    conductor: u32,
    irreducibles: Vec<ClassFunction>,
    square_class: Vec<usize>,
}

impl CharacterTable {
    /// Compute the table by inducing linear characters of subgroups
    /// (taken by decreasing order) and peeling off known irreducibles.
    /// Non-monomial groups fall back to tensor products of known characters.
    pub fn compute(group: &FiniteGroup) -> Result<Self> {
        let classes = ConjugacyClasses::compute(group);
        let conductor = group.exponent().max(1) as u32;
        let square_class = (0..classes.len())
            .map(|c| {
                let x = classes.representative(c);
                classes.class_of(group.mul(x, x))
            })
            .collect();
        let mut table = CharacterTable {
            group: group.clone(),
            classes,
            conductor,
            irreducibles: Vec::new(),
            square_class,
        };
        let k = table.classes.len();
        let reps: Vec<Subgroup> = if group.order() <= Limits::default().max_subgroup_enumeration {
            let subs = SubgroupClassification::enumerate(group, &Limits::default())?;
            subs.classes().iter().rev().map(|c| subs.subgroup(c.representative()).clone()).collect()
        } else {
            let mut cyc: Vec<Subgroup> = Vec::new();
            for x in 0..group.order() {
                let c = group.closure(&[x]);
                if !cyc.contains(&c) {
                    cyc.push(c);
                }
            }
            cyc.sort_by_key(|c| std::cmp::Reverse(c.order()));
            cyc
        };
        let mut pool: Vec<ClassFunction> = Vec::new();
        'outer: for h in &reps {
            let ab = Abelianization::new(group, h);
            let n = ab.exponent().max(1) as u32;
            for j in ab.character_indices() {
                if table.irreducibles.len() == k {
                    break 'outer;
                }
                let values: Vec<Cyclotomic> = h
                    .members()
                    .iter()
                    .map(|&x| {
                        let e = ab.character_exponent(&j, x);
                        Cyclotomic::zeta_power(conductor, (e * (conductor / n) as u64) as i64)
                    })
                    .collect();
                let ind = table.induce(h, &values);
                if let Some(rest) = table.try_accept(ind)? {
                    pool.push(rest);
                }
            }
        }
        // characters that are not monomial: combine leftover reducible
        // remainders by differences and by products with known characters
        let mut rounds = 0;
        while table.irreducibles.len() < k && rounds < 6 {
            rounds += 1;
            let mut candidates: Vec<ClassFunction> = Vec::new();
            let found = table.irreducibles.clone();
            for a in &found {
                for b in &found {
                    candidates.push(a.mul(b));
                }
                for r in &pool {
                    candidates.push(a.mul(r));
                }
            }
            for (i, a) in pool.iter().enumerate() {
                for b in &pool[i + 1..] {
                    candidates.push(a.sub(b));
                    candidates.push(b.sub(a));
                }
            }
            let mut next: Vec<ClassFunction> = Vec::new();
            for c in candidates {
                if table.irreducibles.len() == k {
                    break;
                }
                if let Some(rest) = table.try_accept(c)? {
                    if !next.contains(&rest) && next.len() < 64 {
                        next.push(rest);
                    }
                }
            }
            // re-peel the pool against everything found so far
            let old: Vec<ClassFunction> = pool.drain(..).chain(next).collect();
            for r in old {
                if let Some(rest) = table.try_accept(r)? {
                    if !pool.contains(&rest) {
                        pool.push(rest);
                    }
                }
            }
            if table.irreducibles.len() + 1 == k {
                table.accept_last()?;
            }
        }
        if table.irreducibles.len() < k {
            return Err(Error::computation(format!(
                "found {} of {k} irreducible characters of {}",
                table.irreducibles.len(),
                group.name()
            )));
        }
        let one = Cyclotomic::one(conductor);
        table.irreducibles.sort_by(|a, b| {
            let ta = a.values.iter().all(|v| *v == one);
            let tb = b.values.iter().all(|v| *v == one);
            (&a.values[0].coords()[0], !ta)
                .cmp(&(&b.values[0].coords()[0], !tb))
                .then_with(|| b.sort_key().cmp(&a.sort_key()))
        });
        table.verify()?;
        Ok(table)
    }

    /// Peel ψ against the known irreducibles and keep the remainder if it has
    /// norm 1 and positive degree. Otherwise the nonzero remainder is returned.
    fn try_accept(&mut self, psi: ClassFunction) -> Result<Option<ClassFunction>> {
        let mut rest = psi;
        for chi in &self.irreducibles {
            let c = self.inner_rational(&rest, chi)?;
            if !c.is_zero() {
                rest = rest.sub(&chi.scale(&c));
            }
        }
        if rest.is_zero() {
            return Ok(None);
        }
        let norm = self.inner_rational(&rest, &rest)?;
        let degree = rest.values[0].as_rational().cloned().unwrap_or_else(BigRational::zero);
        if norm.is_one() && degree.is_positive() {
            self.irreducibles.push(rest);
            return Ok(None);
        }
        Ok(Some(rest))
    }

    /// The single missing irreducible from the regular character.
    fn accept_last(&mut self) -> Result<()> {
        let mut rest = self.regular();
        for chi in &self.irreducibles {
            rest = rest.sub(&chi.scale(&chi.values[0].as_rational().unwrap().clone()));
        }
        let d2 = rest.values[0].as_integer().ok_or_else(|| Error::computation("non-integral degree"))?;
        let d = d2.sqrt();
        if &d * &d != d2 || d.is_zero() {
            return Err(Error::computation("remaining degree is not a square"));
        }
        let chi = rest.scale(&BigRational::new(BigInt::one(), d));
        self.try_accept(chi)?;
        Ok(())
    }

    fn verify(&self) -> Result<()> {
        let k = self.irreducibles.len();
        let mut sum = BigInt::zero();
        for i in 0..k {
            for j in 0..k {
                let ip = self.inner(&self.irreducibles[i], &self.irreducibles[j]);
                let expected = Cyclotomic::from_int(self.conductor, (i == j) as i64);
                if ip != expected {
                    return Err(Error::consistency(format!("row orthogonality fails at ({i},{j})")));
                }
            }
            let d = self.degree(i);
            sum += &d * &d;
        }
        if sum != BigInt::from(self.group.order()) {
            return Err(Error::consistency("sum of squared degrees differs from the group order"));
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        &self.classes
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn irreducible(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn label(&self, i: usize) -> String {
        format!("X{}", i + 1)
    }

    pub fn degree(&self, i: usize) -> BigInt {
        self.irreducibles[i].values[0].as_integer().expect("degrees are integers")
    }

    pub fn degrees(&self) -> Vec<BigInt> {
        (0..self.len()).map(|i| self.degree(i)).collect()
    }

    /// Class of x² for each class.
    pub fn square_class(&self, c: usize) -> usize {
        self.square_class[c]
    }

    pub fn constant(&self, k: i64) -> ClassFunction {
        ClassFunction { values: vec![Cyclotomic::from_int(self.conductor, k); self.classes.len()] }
    }

    pub fn trivial(&self) -> ClassFunction {
        self.constant(1)
    }

    pub fn regular(&self) -> ClassFunction {
        let mut f = self.constant(0);
        f.values[0] = Cyclotomic::from_int(self.conductor, self.group.order() as i64);
        f
    }

    /// Class function from per-element values (must be a class function).
    pub fn from_element_values(&self, f: impl Fn(usize) -> Cyclotomic) -> ClassFunction {
        let values = (0..self.classes.len())
            .map(|c| f(self.classes.representative(c)).lift(self.conductor))
            .collect();
        ClassFunction { values }
    }

    pub fn value_at<'a>(&self, chi: &'a ClassFunction, x: usize) -> &'a Cyclotomic {
        &chi.values[self.classes.class_of(x)]
    }

    /// ⟨a, b⟩ = (1/|G|) Σ_g a(g)·conj(b(g)).
    pub fn inner(&self, a: &ClassFunction, b: &ClassFunction) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.conductor);
        for c in 0..self.classes.len() {
            let t = &a.values[c] * &b.values[c].conj();
            acc = &acc + &t.scale_int(self.classes.size(c) as i64);
        }
        acc.scale(&BigRational::new(BigInt::one(), BigInt::from(self.group.order())))
    }

    pub fn inner_rational(&self, a: &ClassFunction, b: &ClassFunction) -> Result<BigRational> {
        self.inner(a, b)
            .as_rational()
            .cloned()
            .ok_or_else(|| Error::consistency("inner product is not rational"))
    }

    /// Multiplicities of the irreducibles in χ; errors if χ is not a virtual character.
    pub fn decompose(&self, chi: &ClassFunction) -> Result<Vec<BigInt>> {
        let coeffs: Vec<BigInt> = self
            .irreducibles
            .iter()
            .map(|irr| {
                let c = self.inner_rational(chi, irr)?;
                if !c.is_integer() {
                    return Err(Error::consistency("class function is not a virtual character"));
                }
                Ok(c.to_integer())
            })
            .collect::<Result<_>>()?;
        if self.combine(&coeffs) != *chi {
            return Err(Error::consistency("class function is not in the span of the irreducibles"));
        }
        Ok(coeffs)
    }

    /// Σ c_i χ_i.
    pub fn combine(&self, coeffs: &[BigInt]) -> ClassFunction {
        let mut f = self.constant(0);
        for (c, chi) in coeffs.iter().zip(&self.irreducibles) {
            if !c.is_zero() {
                f = f.add(&chi.scale_int(c));
            }
        }
        f
    }

    /// dim V^H = (1/|H|) Σ_{h∈H} χ(h).
    pub fn fixed_dim(&self, chi: &ClassFunction, h: &Subgroup) -> Result<BigRational> {
        let mut acc = Cyclotomic::zero(self.conductor);
        for &x in h.members() {
            acc = &acc + self.value_at(chi, x);
        }
        acc.as_rational()
            .map(|q| q / BigInt::from(h.order()))
            .ok_or_else(|| Error::consistency("fixed-point dimension is not rational"))
    }

    /// Fixed-point dimension of an actual character, which must be a
    /// nonnegative integer.
    pub fn fixed_dim_int(&self, chi: &ClassFunction, h: &Subgroup) -> Result<BigInt> {
        let q = self.fixed_dim(chi, h)?;
        if !q.is_integer() || q.is_negative() {
            return Err(Error::consistency(format!("fixed-point dimension {q} is not a natural number")));
        }
        Ok(q.to_integer())
    }

    /// Values of χ on the members of H, in order.
    pub fn restrict(&self, chi: &ClassFunction, h: &Subgroup) -> Vec<Cyclotomic> {
        h.members().iter().map(|&x| self.value_at(chi, x).clone()).collect()
    }

    /// res_φ χ as values on the members of the source of φ: x ↦ χ(φ(x)).
    pub fn restrict_along(&self, chi: &ClassFunction, m: &FusionMorphism) -> Vec<Cyclotomic> {
        m.map.iter().map(|&y| self.value_at(chi, y).clone()).collect()
    }

    /// Ind_H^G of a class function of H given by its values on H's members.
    pub fn induce(&self, h: &Subgroup, values: &[Cyclotomic]) -> ClassFunction {
        let order = BigInt::from(self.group.order());
        let values = (0..self.classes.len())
            .map(|c| {
                let mut acc = Cyclotomic::zero(self.conductor);
                for &y in self.classes.class(c) {
                    if let Some(pos) = h.position(y) {
                        acc = &acc + &values[pos].lift(self.conductor);
                    }
                }
                // |C_G(x)| / |H|
                let centralizer = &order / BigInt::from(self.classes.size(c));
                acc.scale(&BigRational::new(centralizer, BigInt::from(h.order())))
            })
            .collect();
        ClassFunction { values }
    }

    /// Permutation character of G/H: the number of fixed cosets.
    pub fn permutation_character(&self, h: &Subgroup) -> ClassFunction {
        let ones = vec![Cyclotomic::one(self.conductor); h.order()];
        self.induce(h, &ones)
    }

    /// Constancy on F-classes of elements.
    pub fn is_f_stable(&self, chi: &ClassFunction, fs: &FusionSystem) -> bool {
        fs.element_f_classes().iter().all(|cls| {
            let v = self.value_at(chi, cls[0]);
            cls.iter().all(|&x| self.value_at(chi, x) == v)
        })
    }

    /// res_φ χ = res_P χ for every subgroup P and every φ ∈ F(P, S).
    pub fn is_f_stable_by_restriction(&self, chi: &ClassFunction, fs: &FusionSystem) -> bool {
        (0..fs.subgroups().len()).all(|p| {
            let plain = self.restrict(chi, fs.subgroup(p));
            fs.homs_to_s(p).iter().all(|m| self.restrict_along(chi, m) == plain)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::presets as fusion_presets;
    use crate::group::presets;

    fn table(name: &str) -> CharacterTable {
        CharacterTable::compute(&presets::group(name).unwrap()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclic_two() {
        let t = table("C2");
        let rows: Vec<Vec<BigInt>> = t.irreducibles().iter().map(|c| c.as_integers().unwrap()).collect();
        assert_eq!(rows, vec![ints(&[1, 1]), ints(&[1, -1])]);
    }

    #[test]
    fn degrees_of_small_groups() {
        for (name, degrees) in [
            ("Q8", vec![1, 1, 1, 1, 2]),
            ("D8", vec![1, 1, 1, 1, 2]),
            ("S3", vec![1, 1, 2]),
            ("A4", vec![1, 1, 1, 3]),
            ("C3xC3", vec![1; 9]),
            ("SD16", vec![1, 1, 1, 1, 2, 2, 2]),
        ] {
            assert_eq!(table(name).degrees(), ints(&degrees), "{name}");
        }
        assert!(table("D8").irreducibles().iter().all(|c| c.is_rational()));
        // Q8 is rational-valued even though its 2-dimensional character is not realizable over Q
        assert!(table("Q8").irreducibles().iter().all(|c| c.is_rational()));
    }

    #[test]
    fn non_monomial_group() {
        // SL2(3) has non-monomial 2-dimensional characters
        let t = table("SL2(3)");
        assert_eq!(t.len(), 7);
        assert_eq!(t.degrees(), ints(&[1, 1, 1, 2, 2, 2, 3]));
    }

    #[test]
    fn column_orthogonality() {
        for name in ["D8", "Q8", "C9", "SD16", "C5-semidirect-C4"] {
            let t = table(name);
            let k = t.len();
            for a in 0..k {
                for b in 0..k {
                    let mut acc = Cyclotomic::zero(t.conductor());
                    for chi in t.irreducibles() {
                        acc = &acc + &(&chi.values[a] * &chi.values[b].conj());
                    }
                    let expected = if a == b { t.group().order() / t.classes().size(a) } else { 0 };
                    assert_eq!(acc, Cyclotomic::from_int(t.conductor(), expected as i64), "{name}");
                }
            }
        }
    }

    #[test]
    fn inner_products() {
        let t = table("Q8");
        let two = t.irreducibles().iter().position(|c| t.value_at(c, 0).as_integer() == Some(2.into())).unwrap();
        let chi = t.irreducible(two);
        let z = t.group().center();
        let res = t.restrict(chi, &z);
        let mut acc = Cyclotomic::zero(t.conductor());
        for v in &res {
            acc = &acc + v;
        }
        assert!(acc.is_zero());
        assert_eq!(t.inner(&t.regular(), &t.trivial()), Cyclotomic::one(t.conductor()));
    }

    #[test]
    fn fixed_dims() {
        let t = table("D8");
        let g = t.group().clone();
        let subs = SubgroupClassification::enumerate(&g, &Limits::default()).unwrap();
        for h in subs.subgroups() {
            let d = t.fixed_dim_int(&t.regular(), h).unwrap();
            assert_eq!(d, BigInt::from(8 / h.order()));
        }
        let t5 = table("C5");
        let aug = t5.regular().sub(&t5.trivial());
        assert_eq!(t5.fixed_dim_int(&aug, &t5.group().trivial_subgroup()).unwrap(), BigInt::from(4));
        assert_eq!(t5.fixed_dim_int(&aug, &t5.group().full_subgroup()).unwrap(), BigInt::zero());
    }

    #[test]
    fn induction_from_c2_to_c4() {
        let t = table("C4");
        let g = t.group();
        let r = g.generator_indices()[0];
        let c2 = g.closure(&[g.mul(r, r)]);
        let values: Vec<Cyclotomic> = c2
            .members()
            .iter()
            .map(|&x| Cyclotomic::from_int(4, if x == 0 { 1 } else { -1 }))
            .collect();
        let ind = t.induce(&c2, &values);
        let got: Vec<BigInt> = (0..4)
            .map(|k| t.value_at(&ind, g.pow(r, k)).as_integer().unwrap())
            .collect();
        assert_eq!(got, ints(&[2, 0, -2, 0]));
    }

    #[test]
    fn stability_two_ways() {
        for name in ["C5-semidirect-C4", "S3", "A4", "S4", "SL2(3)", "D8"] {
            let fs = fusion_presets::fusion(name).unwrap();
            let t = CharacterTable::compute(fs.s()).unwrap();
            for chi in t.irreducibles() {
                assert_eq!(t.is_f_stable(chi, &fs), t.is_f_stable_by_restriction(chi, &fs), "{name}");
            }
            assert!(t.is_f_stable(&t.regular(), &fs));
        }
        let fs = fusion_presets::fusion("C5-semidirect-C4").unwrap();
        let t = CharacterTable::compute(fs.s()).unwrap();
        assert!(!t.is_f_stable(t.irreducible(1), &fs));
        let aug = t.regular().sub(&t.trivial());
        assert!(t.is_f_stable(&aug, &fs));
        let fs3 = fusion_presets::fusion("S3").unwrap();
        let t3 = CharacterTable::compute(fs3.s()).unwrap();
        let chi = t3.irreducible(1);
        assert!(t3.is_f_stable(&chi.add(&chi.conj()), &fs3));
    }
}
