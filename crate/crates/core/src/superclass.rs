//! Super class functions on subgroup classes, the Borel-Smith conditions
//! (i)-(iii), the fusion Artin condition (**), Bauer's condition (iv), and the
//! integer lattices they cut out.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::group::{prime_power_base, FiniteGroup, Limits, Subgroup, SubgroupClassification};
use crate::intlin::IntegerLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DomainKind {
    #[serde(rename = "S")]
    S,
    #[serde(rename = "F")]
    F,
    #[serde(rename = "G-prime-power")]
    GPrimePower,
}

impl std::str::FromStr for DomainKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" => Ok(DomainKind::S),
            "F" => Ok(DomainKind::F),
            "G-prime-power" | "G" => Ok(DomainKind::GPrimePower),
            _ => Err(Error::input(format!("unknown domain '{s}'"))),
        }
    }
}

/// Columns of a super class function: classes of subgroups of some universe.
#[derive(Clone, Debug)]
pub struct Domain {
    pub kind: DomainKind,
    pub labels: Vec<String>,
    pub orders: Vec<usize>,
    /// Subgroup index (in the universe) of a representative of each column.
    pub representatives: Vec<usize>,
    column_of: Vec<usize>,
    /// below[a][b]: some subgroup in column a lies in some subgroup in column b.
    below: Vec<Vec<bool>>,
}

impl Domain {
    fn new(
        kind: DomainKind,
        subs: &SubgroupClassification,
        column_of: Vec<usize>,
        labels: Vec<String>,
    ) -> Self {
        let n = labels.len();
        let mut representatives = vec![usize::MAX; n];
        for (i, &c) in column_of.iter().enumerate() {
            if representatives[c] == usize::MAX {
                representatives[c] = i;
            }
        }
        let orders = representatives.iter().map(|&r| subs.subgroup(r).order()).collect();
        let mut below = vec![vec![false; n]; n];
        for (i, a) in subs.subgroups().iter().enumerate() {
            for (j, b) in subs.subgroups().iter().enumerate() {
                if a.order() <= b.order() && b.order() % a.order() == 0 && a.is_subset(b) {
                    below[column_of[i]][column_of[j]] = true;
                }
            }
        }
        Domain { kind, labels, orders, representatives, column_of, below }
    }

    /// S-conjugacy classes of subgroups of S.
    pub fn s_classes(fs: &FusionSystem) -> Self {
        let subs = fs.subgroups();
        let column_of = (0..subs.len()).map(|i| subs.class_of(i)).collect();
        let labels = subs.classes().iter().map(|c| c.label.clone()).collect();
        Self::new(DomainKind::S, subs, column_of, labels)
    }

    /// F-conjugacy classes of subgroups of S.
    pub fn f_classes(fs: &FusionSystem) -> Self {
        let subs = fs.subgroups();
        let column_of = (0..subs.len()).map(|i| fs.f_class_of_subgroup(i)).collect();
        let labels = (0..fs.f_classes().len()).map(|fc| fs.f_class_label(fc).to_string()).collect();
        Self::new(DomainKind::F, subs, column_of, labels)
    }

    /// G-conjugacy classes of a classification (used for prime-power subgroups of G).
    pub fn prime_power(family: &SubgroupClassification) -> Self {
        let column_of = (0..family.len()).map(|i| family.class_of(i)).collect();
        let labels = family.classes().iter().map(|c| c.label.clone()).collect();
        Self::new(DomainKind::GPrimePower, family, column_of, labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn column_of(&self, subgroup: usize) -> usize {
        self.column_of[subgroup]
    }

    pub fn column(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_below(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    /// f(K) ≥ f(H) ≥ 0 whenever K ≤ H.
    pub fn is_monotone(&self, f: &[BigInt]) -> bool {
        if f.iter().any(|x| x.is_negative()) {
            return false;
        }
        (0..self.len()).all(|a| (0..self.len()).all(|b| !self.below[a][b] || f[a] >= f[b]))
    }

    /// Pairs (a, b), a ≠ b, with a below b.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                if a != b && self.below[a][b] {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ConditionKind {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii")]
    III,
    #[serde(rename = "**")]
    Artin,
    #[serde(rename = "iv")]
    Bauer,
}

impl std::fmt::Display for ConditionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConditionKind::I => "i",
            ConditionKind::II => "ii",
            ConditionKind::III => "iii",
            ConditionKind::Artin => "**",
            ConditionKind::Bauer => "iv",
        };
        f.write_str(s)
    }
}

/// row·f ≡ 0 (mod modulus), with modulus 0 meaning row·f = 0.
#[derive(Clone, Debug, Serialize)]
pub struct Constraint {
    pub kind: ConditionKind,
    pub row: Vec<i64>,
    pub modulus: u64,
    pub witness: String,
}

impl Constraint {
    pub fn holds(&self, f: &[BigInt]) -> bool {
        let dot: BigInt = self.row.iter().zip(f).map(|(&a, b)| BigInt::from(a) * b).sum();
        if self.modulus == 0 {
            dot.is_zero()
        } else {
            dot.mod_floor(&BigInt::from(self.modulus)).is_zero()
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub condition: ConditionKind,
    pub witness: String,
    pub modulus: u64,
}

/// A domain together with the constraints defining a lattice on it.
#[derive(Clone, Debug)]
pub struct ConditionSystem {
    pub domain: Domain,
    pub constraints: Vec<Constraint>,
}

impl ConditionSystem {
    pub fn unconstrained(domain: Domain) -> Self {
        ConditionSystem { domain, constraints: Vec::new() }
    }

    pub fn lattice(&self) -> IntegerLattice {
        let mut l = IntegerLattice::full(self.domain.len());
        for c in &self.constraints {
            let row: Vec<BigInt> = c.row.iter().map(|&x| BigInt::from(x)).collect();
            l = l.intersect_congruence(&row, &BigInt::from(c.modulus));
        }
        l
    }

    pub fn check(&self, f: &[BigInt]) -> Vec<Violation> {
        self.constraints
            .iter()
            .filter(|c| !c.holds(f))
            .map(|c| Violation { condition: c.kind, witness: c.witness.clone(), modulus: c.modulus })
            .collect()
    }

    pub fn kinds(&self) -> Vec<ConditionKind> {
        let mut k: Vec<ConditionKind> = Vec::new();
        for c in &self.constraints {
            if !k.contains(&c.kind) {
                k.push(c.kind);
            }
        }
        k
    }

    fn extend(&mut self, other: Vec<Constraint>) {
        self.constraints.extend(other);
    }
}

/// Collects constraints stated on subgroups and maps them to domain columns,
/// dropping duplicates and vacuous ones.
struct Builder<'a> {
    domain: &'a Domain,
    labels: &'a SubgroupClassification,
    seen: HashSet<(ConditionKind, Vec<i64>, u64)>,
    out: Vec<Constraint>,
}

impl<'a> Builder<'a> {
    fn new(domain: &'a Domain, labels: &'a SubgroupClassification) -> Self {
        Builder { domain, labels, seen: HashSet::new(), out: Vec::new() }
    }

    fn label(&self, i: usize) -> &str {
        &self.labels.class(self.labels.class_of(i)).label
    }

    fn push(&mut self, kind: ConditionKind, terms: &[(usize, i64)], modulus: u64, witness: String) {
        if modulus == 1 {
            return;
        }
        let mut row = vec![0i64; self.domain.len()];
        for &(s, c) in terms {
            row[self.domain.column_of(s)] += c;
        }
        if row.iter().all(|&x| x == 0) {
            return;
        }
        if self.seen.insert((kind, row.clone(), modulus)) {
            self.out.push(Constraint { kind, row, modulus, witness });
        }
    }
}

fn is_elementary_quotient(g: &FiniteGroup, h: &Subgroup, l: &Subgroup, p: u64) -> bool {
    h.members().iter().all(|&x| l.contains(g.pow(x, p)))
        && h.members().iter().all(|&x| {
            h.members().iter().all(|&y| {
                let c = g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y)));
                l.contains(c)
            })
        })
}

enum QuotientType {
    Cyclic4,
    Quaternion,
    Other,
}

fn quotient_type(g: &FiniteGroup, n: &Subgroup, l: &Subgroup) -> QuotientType {
    let idx = n.order() / l.order();
    if idx == 4 {
        if n.members().iter().any(|&x| !l.contains(g.mul(x, x))) {
            return QuotientType::Cyclic4;
        }
    } else if idx == 8 {
        let exp4 = n.members().iter().all(|&x| l.contains(g.pow(x, 4)));
        let involution_elems = n
            .members()
            .iter()
            .filter(|&&x| !l.contains(x) && l.contains(g.mul(x, x)))
            .count();
        if exp4 && involution_elems == l.order() {
            return QuotientType::Quaternion;
        }
    }
    QuotientType::Other
}

/// Conditions (i)-(iii) on every chain of prime-power subgroups in `subs`.
fn borel_smith_into(b: &mut Builder, g: &FiniteGroup, subs: &SubgroupClassification) {
    let list = subs.subgroups();
    for (li, l) in list.iter().enumerate() {
        for (hi, h) in list.iter().enumerate() {
            if h.order() <= l.order() || h.order() % l.order() != 0 || !l.is_subset(h) {
                continue;
            }
            let Some(p) = prime_power_base(h.order() as u64).filter(|&p| p > 1) else { continue };
            let idx = (h.order() / l.order()) as u64;
            if idx != p && idx != p * p {
                continue;
            }
            if !g.is_normal(h, l) {
                continue;
            }
            let (ll, hl) = (b.label(li).to_string(), b.label(hi).to_string());
            if idx == p && p % 2 == 1 {
                b.push(ConditionKind::I, &[(li, 1), (hi, -1)], 2, format!("L={ll} H={hl}"));
            }
            if idx == p * p && is_elementary_quotient(g, h, l, p) {
                let mids: Vec<usize> = (0..list.len())
                    .filter(|&k| {
                        let m = &list[k];
                        m.order() == l.order() * p as usize && l.is_subset(m) && m.is_subset(h)
                    })
                    .collect();
                debug_assert_eq!(mids.len(), p as usize + 1);
                let mut terms = vec![(li, 1), (hi, p as i64)];
                terms.extend(mids.iter().map(|&k| (k, -1)));
                b.push(ConditionKind::II, &terms, 0, format!("L={ll} H={hl}"));
            }
            if idx == 2 {
                for (ni, n) in list.iter().enumerate() {
                    let nidx = n.order() / l.order();
                    if (nidx != 4 && nidx != 8) || !h.is_subset(n) || !g.is_normal(n, l) || !g.is_normal(n, h) {
                        continue;
                    }
                    let modulus = match quotient_type(g, n, l) {
                        QuotientType::Cyclic4 => 2,
                        QuotientType::Quaternion => 4,
                        QuotientType::Other => continue,
                    };
                    let nl = b.label(ni).to_string();
                    b.push(ConditionKind::III, &[(li, 1), (hi, -1)], modulus, format!("L={ll} H={hl} N={nl}"));
                }
            }
        }
    }
}

fn mult_order(k: u64, p: u64) -> u64 {
    let mut x = k % p;
    let mut n = 1;
    while x != 1 {
        x = x * k % p;
        n += 1;
    }
    n
}

/// The k with y ≡ x^k mod L, for x ∈ H∖L generating H/L ≅ Z/p.
fn exponent_mod(g: &FiniteGroup, l: &Subgroup, x: usize, y: usize, p: u64) -> u64 {
    (1..p)
        .find(|&k| l.contains(g.mul(g.inv(g.pow(x, k)), y)))
        .expect("y lies in H∖L")
}

/// Condition (**) for pairs L ◁ H ≤ S with H/L ≅ Z/p.
fn fusion_artin_into(b: &mut Builder, fs: &FusionSystem, cyclic_only: bool) {
    let s = fs.s();
    let p = fs.prime();
    let list = fs.subgroups().subgroups();
    for (li, l) in list.iter().enumerate() {
        for (hi, h) in list.iter().enumerate() {
            if h.order() != l.order() * p as usize || !l.is_subset(h) {
                continue;
            }
            if cyclic_only && !h.members().iter().any(|&x| s.element_order(x) == h.order()) {
                continue;
            }
            let x = *h.members().iter().find(|&&x| !l.contains(x)).unwrap();
            let mut m = 1u64;
            for phi in fs.homs_to_s(hi) {
                if phi.image != hi {
                    continue;
                }
                if !l.members().iter().all(|&y| l.contains(fs.apply(phi, y))) {
                    continue;
                }
                let k = exponent_mod(s, l, x, fs.apply(phi, x), p);
                m = m.lcm(&mult_order(k, p));
            }
            let (ll, hl) = (b.label(li).to_string(), b.label(hi).to_string());
            b.push(ConditionKind::Artin, &[(li, 1), (hi, -1)], m, format!("L={ll} H={hl}"));
        }
    }
}

/// Condition (iv) on prime-power subgroups of G, with M ranging over all subgroups.
fn bauer_into(b: &mut Builder, g: &FiniteGroup, family: &SubgroupClassification, all: &SubgroupClassification) {
    let list = family.subgroups();
    let full = g.full_subgroup();
    for (li, l) in list.iter().enumerate() {
        let nl = g.normalizer(&full, l);
        for (hi, h) in list.iter().enumerate() {
            let Some(p) = prime_power_base(h.order() as u64).filter(|&p| p > 1) else { continue };
            if h.order() != l.order() * p as usize || !l.is_subset(h) {
                continue;
            }
            let x = *h.members().iter().find(|&&x| !l.contains(x)).unwrap();
            for (mi, m) in all.subgroups().iter().enumerate() {
                if m.order() <= h.order() || !h.is_subset(m) || !m.is_subset(&nl) || !g.is_normal(m, h) {
                    continue;
                }
                let idx = m.order() / h.order();
                if prime_power_base(idx as u64).is_none() {
                    continue;
                }
                // M/H cyclic: some coset has order |M:H|
                let coset_order = |y: usize| (1..=idx).find(|&j| h.contains(g.pow(y, j as u64))).unwrap();
                if !m.members().iter().any(|&y| coset_order(y) == idx) {
                    continue;
                }
                let mut modulus = 1u64;
                for &y in m.members() {
                    let k = exponent_mod(g, l, x, g.conj(y, x), p);
                    modulus = modulus.lcm(&mult_order(k, p));
                }
                let (ll, hl) = (b.label(li).to_string(), b.label(hi).to_string());
                let ml = all.class(all.class_of(mi)).label.clone();
                b.push(ConditionKind::Bauer, &[(li, 1), (hi, -1)], modulus, format!("L={ll} H={hl} M={ml}"));
            }
        }
    }
}

/// C_b on S-classes or F-classes of S.
pub fn borel_smith_system(fs: &FusionSystem, domain: Domain) -> ConditionSystem {
    let mut b = Builder::new(&domain, fs.subgroups());
    borel_smith_into(&mut b, fs.s(), fs.subgroups());
    let constraints = b.out;
    ConditionSystem { domain, constraints }
}

/// C_ba(F): Borel-Smith plus (**), on F-classes.
pub fn cba_system(fs: &FusionSystem, cyclic_only: bool) -> ConditionSystem {
    let domain = Domain::f_classes(fs);
    let mut sys = borel_smith_system(fs, domain.clone());
    let mut b = Builder::new(&domain, fs.subgroups());
    fusion_artin_into(&mut b, fs, cyclic_only);
    sys.extend(b.out);
    sys
}

/// Only the (**) constraints, on F-classes.
pub fn fusion_artin_system(fs: &FusionSystem, cyclic_only: bool) -> ConditionSystem {
    let domain = Domain::f_classes(fs);
    let mut b = Builder::new(&domain, fs.subgroups());
    fusion_artin_into(&mut b, fs, cyclic_only);
    let constraints = b.out;
    ConditionSystem { domain, constraints }
}

/// Prime-power subgroups of G with their classification, and all subgroups.
pub struct PrimePowerUniverse {
    pub family: SubgroupClassification,
    pub all: SubgroupClassification,
}

impl PrimePowerUniverse {
    pub fn new(g: &FiniteGroup, limits: &Limits) -> Result<Self> {
        if g.order() > limits.max_bauer_order {
            return Err(Error::size(format!(
                "condition (iv) needs all subgroups of G; order {} exceeds bound {}",
                g.order(),
                limits.max_bauer_order
            )));
        }
        let all = SubgroupClassification::enumerate(g, limits)?;
        let family = SubgroupClassification::enumerate_filtered(g, limits, |h| {
            prime_power_base(h.order() as u64).is_some()
        })?;
        Ok(PrimePowerUniverse { family, all })
    }
}

/// D_P(G): conditions (i)-(iii) on p-subgroups and (iv), on prime-power classes.
pub fn dp_system(g: &FiniteGroup, universe: &PrimePowerUniverse) -> ConditionSystem {
    let domain = Domain::prime_power(&universe.family);
    let mut b = Builder::new(&domain, &universe.family);
    borel_smith_into(&mut b, g, &universe.family);
    bauer_into(&mut b, g, &universe.family, &universe.all);
    let constraints = b.out;
    ConditionSystem { domain, constraints }
}

/// Only condition (iv), on prime-power classes.
pub fn bauer_system(g: &FiniteGroup, universe: &PrimePowerUniverse) -> ConditionSystem {
    let domain = Domain::prime_power(&universe.family);
    let mut b = Builder::new(&domain, &universe.family);
    bauer_into(&mut b, g, &universe.family, &universe.all);
    let constraints = b.out;
    ConditionSystem { domain, constraints }
}

/// Extend f on F-classes (F = F_S(G), S Sylow) to prime-power classes of G,
/// with f′(Q) = f(1) for q-subgroups, q ≠ p.
pub fn extend_to_prime_power(fs: &FusionSystem, f: &[BigInt], universe: &PrimePowerUniverse) -> Result<Vec<BigInt>> {
    if !fs.is_sylow() {
        return Err(Error::precondition("extension needs S to be a Sylow subgroup of G"));
    }
    let g = fs.ambient();
    let fdom = Domain::f_classes(fs);
    let p = fs.prime();
    let s_in_g = Subgroup::from_members(g.order(), fs.embedding().to_vec());
    let mut out = Vec::new();
    for class in universe.family.classes() {
        let k = universe.family.subgroup(class.representative());
        let base = prime_power_base(k.order() as u64).unwrap();
        if base != p {
            out.push(f[fdom.column_of(0)].clone());
            continue;
        }
        let conj = (0..g.order())
            .map(|t| g.conjugate_subgroup(t, k))
            .find(|c| c.is_subset(&s_in_g))
            .ok_or_else(|| Error::consistency("p-subgroup not conjugate into S"))?;
        let members: Vec<usize> = conj.members().iter().map(|&x| fs.restrict_index(x).unwrap()).collect();
        let mut sorted = members;
        sorted.sort_unstable();
        let idx = fs.subgroups().find_members(&sorted).unwrap();
        out.push(f[fdom.column_of(idx)].clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::presets;
    use crate::group::presets as group_presets;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn cyclic_two_has_no_constraints() {
        let fs = presets::fusion("C2").unwrap();
        let sys = borel_smith_system(&fs, Domain::s_classes(&fs));
        assert!(sys.constraints.is_empty());
        assert_eq!(sys.lattice(), IntegerLattice::full(2));
    }

    #[test]
    fn cyclic_three_parity() {
        let fs = presets::fusion("C3").unwrap();
        let sys = borel_smith_system(&fs, Domain::s_classes(&fs));
        let l = sys.lattice();
        assert_eq!(IntegerLattice::full(2).index_of(&l), Some(BigInt::from(2)));
        assert!(l.contains(&v(&[3, 1])));
        assert!(!l.contains(&v(&[2, 1])));
    }

    #[test]
    fn quaternion_condition_three() {
        let fs = presets::fusion("Q8").unwrap();
        let dom = Domain::s_classes(&fs);
        let mut f = vec![BigInt::zero(); dom.len()];
        f[0] = BigInt::from(2);
        let sys = borel_smith_system(&fs, dom);
        let viol = sys.check(&f);
        assert!(viol.iter().any(|x| x.condition == ConditionKind::III && x.modulus == 4));
        let c = vec![BigInt::from(5); f.len()];
        assert!(sys.check(&c).is_empty());
    }

    #[test]
    fn elementary_abelian_condition_two() {
        for (name, p) in [("C3xC3", 3i64), ("C2xC2", 2)] {
            let fs = presets::fusion(name).unwrap();
            let dom = Domain::s_classes(&fs);
            let f: Vec<BigInt> = dom.orders.iter().map(|&o| BigInt::from(p * p / o as i64)).collect();
            let sys = borel_smith_system(&fs, dom);
            assert!(sys.constraints.iter().any(|c| c.kind == ConditionKind::II));
            assert!(sys.check(&f).is_empty(), "{name}");
        }
    }

    #[test]
    fn fusion_artin_moduli() {
        let fs = presets::fusion("C5-semidirect-C4").unwrap();
        let sys = fusion_artin_system(&fs, false);
        assert_eq!(sys.constraints.len(), 1);
        assert_eq!(sys.constraints[0].modulus, 4);
        let fs = presets::fusion("S3").unwrap();
        let sys = fusion_artin_system(&fs, false);
        assert_eq!(sys.constraints[0].modulus, 2);
        for name in ["D8", "Q8", "C4", "C9", "C3xC3"] {
            let fs = presets::fusion(name).unwrap();
            assert!(fusion_artin_system(&fs, false).constraints.is_empty(), "{name}");
        }
    }

    #[test]
    fn cyclic_only_artin_gives_same_lattice() {
        for name in ["A4", "S4", "SL2(3)", "C5-semidirect-C4", "S3", "A6", "C3xC3"] {
            let fs = presets::fusion(name).unwrap();
            assert_eq!(cba_system(&fs, false).lattice(), cba_system(&fs, true).lattice(), "{name}");
        }
    }

    #[test]
    fn sigma3_bauer() {
        let g = group_presets::group("S3").unwrap();
        let u = PrimePowerUniverse::new(&g, &Limits::default()).unwrap();
        let sys = dp_system(&g, &u);
        assert_eq!(sys.domain.labels, vec!["1a", "2a", "3a"]);
        assert!(sys.check(&v(&[2, 2, 0])).is_empty());
        let viol = sys.check(&v(&[1, 1, 0]));
        assert!(viol.iter().any(|x| x.condition == ConditionKind::Bauer && x.modulus == 2));
        assert!(sys.lattice().contains(&v(&[2, 2, 0])));
    }

    #[test]
    fn extension_to_prime_power_classes() {
        let fs = presets::fusion_from("S3", Some("auto:2"), None).unwrap();
        let g = fs.ambient().clone();
        let u = PrimePowerUniverse::new(&g, &Limits::default()).unwrap();
        let ext = extend_to_prime_power(&fs, &v(&[7, 3]), &u).unwrap();
        assert_eq!(ext, v(&[7, 3, 7]));
    }

    #[test]
    fn monotonicity() {
        let fs = presets::fusion("C5").unwrap();
        let dom = Domain::s_classes(&fs);
        assert!(dom.is_monotone(&v(&[4, 0])));
        assert!(dom.is_monotone(&v(&[3, 3])));
        assert!(!dom.is_monotone(&v(&[0, 4])));
        assert!(!dom.is_monotone(&v(&[-1, -1])));
    }
}
