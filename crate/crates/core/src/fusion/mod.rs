//! Fusion systems F_S(G) induced by an ambient group, with saturation checks.

pub mod presets;

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{
    prime_power_base, ConjugacyClasses, FiniteGroup, Limits, Permutation, Subgroup,
    SubgroupClassification,
};

/// An injective homomorphism P → S induced by conjugation in G.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionMorphism {
    /// Subgroup index of the source P.
    pub source: usize,
    /// Subgroup index of the image φ(P).
    pub image: usize,
    /// φ(x) for x running over the members of P, in order.
    pub map: Vec<usize>,
    /// Element g of G (index in G) with φ(x) = g x g⁻¹.
    pub witness: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SaturationWitness {
    /// Aut_S(P) is not a Sylow subgroup of Aut_F(P) at a fully normalized P.
    SylowFails { subgroup: String, aut_f_order: usize, aut_s_order: usize },
    /// A fully normalized subgroup which is not fully centralized.
    NotFullyCentralized { subgroup: String },
    /// A morphism with fully centralized image that does not extend to N_φ.
    ExtensionFails { subgroup: String, image: String, n_phi_order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationVerdict {
    pub saturated: bool,
    pub witness: Option<SaturationWitness>,
}

/// Aut_F(P) as a permutation group on the members of P, with Aut_S(P).
#[derive(Clone, Debug)]
pub struct AutF {
    pub group: FiniteGroup,
    pub aut_s: Subgroup,
    /// Morphism index (into hom_F(P,S)) of each element of `group`.
    pub morphisms: Vec<usize>,
}

pub struct FusionSystem {
    name: String,
    ambient: Arc<FiniteGroup>,
    s: FiniteGroup,
    embed: Vec<usize>,
    from_ambient: Vec<u32>,
    prime: u64,
    subgroups: SubgroupClassification,
    homs: Vec<Vec<FusionMorphism>>,
    element_classes: ConjugacyClasses,
    f_class_of_sclass: Vec<usize>,
    f_classes: Vec<Vec<usize>>,
    element_f_class: Vec<usize>,
    element_f_classes: Vec<Vec<usize>>,
    normalizer_orders: Vec<usize>,
    centralizer_orders: Vec<usize>,
    saturation: SaturationVerdict,
}

impl std::fmt::Debug for FusionSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FusionSystem({}, |S| = {}, p = {})", self.name, self.s.order(), self.prime)
    }
}

impl FusionSystem {
    /// Build F_S(G) by transporter search over all of G.
    pub fn build(ambient: Arc<FiniteGroup>, sylow: &Subgroup, prime: u64) -> Result<Self> {
        if !crate::group::is_prime(prime) {
            return Err(Error::input(format!("{prime} is not prime")));
        }
        if !ambient.is_subgroup(sylow.members()) {
            return Err(Error::structure("S is not a subgroup of G"));
        }
        match prime_power_base(sylow.order() as u64) {
            Some(b) if b == 1 || b == prime => {}
            _ => {
                return Err(Error::structure(format!(
                    "S has order {} which is not a power of {prime}",
                    sylow.order()
                )))
            }
        }
        let (s, embed) = ambient.subgroup_as_group(sylow)?;
        let s = s.with_name(&format!("S({})", ambient.name()));
        let mut from_ambient = vec![u32::MAX; ambient.order()];
        for (i, &g) in embed.iter().enumerate() {
            from_ambient[g] = i as u32;
        }
        let limits = Limits { max_subgroup_enumeration: s.order().max(512), ..Limits::default() };
        let subgroups = SubgroupClassification::enumerate(&s, &limits)?;

        let mut homs: Vec<Vec<FusionMorphism>> = Vec::with_capacity(subgroups.len());
        for (pi, p) in subgroups.subgroups().iter().enumerate() {
            let pg: Vec<usize> = p.members().iter().map(|&x| embed[x]).collect();
            let mut seen: HashSet<Vec<usize>> = HashSet::new();
            let mut list = Vec::new();
            'g: for g in 0..ambient.order() {
                let mut map = Vec::with_capacity(pg.len());
                for &x in &pg {
                    let y = from_ambient[ambient.conj(g, x)];
                    if y == u32::MAX {
                        continue 'g;
                    }
                    map.push(y as usize);
                }
                if seen.insert(map.clone()) {
                    let mut sorted = map.clone();
                    sorted.sort_unstable();
                    let image = subgroups.find_members(&sorted).expect("image is a subgroup of S");
                    list.push(FusionMorphism { source: pi, image, map, witness: g });
                }
            }
            list.sort_by(|a, b| (a.image, &a.map).cmp(&(b.image, &b.map)));
            homs.push(list);
        }

        // F-classes of subgroups as unions of S-classes
        let nsc = subgroups.classes().len();
        let mut uf = UnionFind::new(nsc);
        for (pi, list) in homs.iter().enumerate() {
            for m in list {
                uf.union(subgroups.class_of(pi), subgroups.class_of(m.image));
            }
        }
        let (f_class_of_sclass, f_classes) = uf.classes();

        let element_classes = ConjugacyClasses::compute(&s);
        let mut uf = UnionFind::new(s.order());
        for x in 0..s.order() {
            let cyc = s.closure(&[x]);
            let ci = subgroups.find(&cyc).unwrap();
            let pos = cyc.position(x).unwrap();
            for m in &homs[ci] {
                uf.union(x, m.map[pos]);
            }
        }
        let (element_f_class, element_f_classes) = uf.classes();

        let full = s.full_subgroup();
        let normalizer_orders =
            subgroups.subgroups().iter().map(|p| s.normalizer(&full, p).order()).collect();
        let centralizer_orders =
            subgroups.subgroups().iter().map(|p| s.centralizer(&full, p).order()).collect();

        let name = format!("F_{}({})", subgroups.classes().last().unwrap().label, ambient.name());
        let mut fs = FusionSystem {
            name,
            ambient,
            s,
            embed,
            from_ambient,
            prime,
            subgroups,
            homs,
            element_classes,
            f_class_of_sclass,
            f_classes,
            element_f_class,
            element_f_classes,
            normalizer_orders,
            centralizer_orders,
            saturation: SaturationVerdict { saturated: false, witness: None },
        };
        fs.saturation = fs.check_saturation();
        Ok(fs)
    }

    /// The trivial fusion system F_S(S) of a p-group.
    pub fn trivial(s: Arc<FiniteGroup>) -> Result<Self> {
        let p = match s.prime_power_base() {
            Some(1) | None => {
                return Err(Error::structure("trivial fusion needs a nontrivial p-group"));
            }
            Some(p) => p,
        };
        let full = s.full_subgroup();
        Self::build(s, &full, p)
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn ambient(&self) -> &FiniteGroup {
        &self.ambient
    }

    pub fn ambient_arc(&self) -> &Arc<FiniteGroup> {
        &self.ambient
    }

    /// S as a standalone group; all element indices in this module refer to it.
    pub fn s(&self) -> &FiniteGroup {
        &self.s
    }

    /// Index in G of an element of S.
    pub fn embed(&self, x: usize) -> usize {
        self.embed[x]
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embed
    }

    /// Index in S of an element of G lying in S.
    pub fn restrict_index(&self, g: usize) -> Option<usize> {
        let v = self.from_ambient[g];
        (v != u32::MAX).then_some(v as usize)
    }

    pub fn is_sylow(&self) -> bool {
        let mut n = self.ambient.order();
        let mut pp = 1;
        while n.is_multiple_of(self.prime as usize) {
            n /= self.prime as usize;
            pp *= self.prime as usize;
        }
        pp == self.s.order()
    }

    pub fn subgroups(&self) -> &SubgroupClassification {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        self.subgroups.subgroup(i)
    }

    /// Subgroup index of S itself.
    pub fn top(&self) -> usize {
        self.subgroups.top()
    }

    /// All of hom_F(P, S), deduplicated by map.
    pub fn homs_to_s(&self, p: usize) -> &[FusionMorphism] {
        &self.homs[p]
    }

    /// hom_F(P, Q).
    pub fn hom(&self, p: usize, q: usize) -> Vec<&FusionMorphism> {
        let qs = self.subgroup(q);
        self.homs[p]
            .iter()
            .filter(|m| self.subgroup(m.image).is_subset(qs))
            .collect()
    }

    pub fn apply(&self, m: &FusionMorphism, x: usize) -> usize {
        let pos = self.subgroup(m.source).position(x).expect("element lies in the source");
        m.map[pos]
    }

    /// The inclusion P → S as a morphism.
    pub fn inclusion(&self, p: usize) -> &FusionMorphism {
        self.homs[p]
            .iter()
            .find(|m| m.image == p && m.map == self.subgroup(p).members())
            .expect("inclusion is always a fusion morphism")
    }

    pub fn element_classes(&self) -> &ConjugacyClasses {
        &self.element_classes
    }

    pub fn f_class_of_sclass(&self, c: usize) -> usize {
        self.f_class_of_sclass[c]
    }

    pub fn f_class_of_subgroup(&self, p: usize) -> usize {
        self.f_class_of_sclass[self.subgroups.class_of(p)]
    }

    /// F-classes of subgroups, each a list of S-class indices.
    pub fn f_classes(&self) -> &[Vec<usize>] {
        &self.f_classes
    }

    pub fn f_class_label(&self, fc: usize) -> &str {
        &self.subgroups.class(self.f_classes[fc][0]).label
    }

    pub fn f_class_representative(&self, fc: usize) -> usize {
        self.subgroups.class(self.f_classes[fc][0]).representative()
    }

    pub fn element_f_class(&self, x: usize) -> usize {
        self.element_f_class[x]
    }

    pub fn element_f_classes(&self) -> &[Vec<usize>] {
        &self.element_f_classes
    }

    pub fn normalizer_order(&self, p: usize) -> usize {
        self.normalizer_orders[p]
    }

    pub fn centralizer_order(&self, p: usize) -> usize {
        self.centralizer_orders[p]
    }

    pub fn saturation(&self) -> &SaturationVerdict {
        &self.saturation
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation.saturated
    }

    /// Is the fusion trivial, i.e. F = F_S(S)?
    pub fn is_trivial_fusion(&self) -> bool {
        (0..self.subgroups.len()).all(|p| {
            let np = self.normalizer_orders[p] / self.centralizer_orders[p];
            self.homs[p].len() == self.subgroups.class(self.subgroups.class_of(p)).members.len() * np
        })
    }

    /// Aut_F(P) acting on the members of P, with the subgroup Aut_S(P).
    pub fn aut_f(&self, p: usize) -> Result<AutF> {
        let sub = self.subgroup(p);
        let n = sub.order();
        let mut perms = Vec::new();
        let mut idx = Vec::new();
        for (k, m) in self.homs[p].iter().enumerate() {
            if m.image != p {
                continue;
            }
            let images: Vec<usize> = m.map.iter().map(|&y| sub.position(y).unwrap()).collect();
            perms.push(Permutation::from_images(&images)?);
            idx.push(k);
        }
        let limits = Limits { max_degree: 255, ..Limits::default() };
        let group = FiniteGroup::from_generators(&perms, &limits)?;
        let mut morphisms = vec![usize::MAX; group.order()];
        for (perm, &k) in perms.iter().zip(&idx) {
            morphisms[group.index_of(perm).unwrap()] = k;
        }
        let full = self.s.full_subgroup();
        let norm = self.s.normalizer(&full, sub);
        let aut_s_members: Vec<usize> = norm
            .members()
            .iter()
            .map(|&x| {
                let images: Vec<usize> =
                    sub.members().iter().map(|&y| sub.position(self.s.conj(x, y)).unwrap()).collect();
                group.index_of(&Permutation::from_images(&images).unwrap()).unwrap()
            })
            .collect();
        debug_assert_eq!(n, group.degree());
        let aut_s = Subgroup::from_members(group.order(), aut_s_members);
        Ok(AutF { group, aut_s, morphisms })
    }

    fn fully_normalized(&self, p: usize) -> bool {
        let fc = self.f_class_of_subgroup(p);
        let best = self.f_class_subgroups(fc).map(|q| self.normalizer_orders[q]).max().unwrap();
        self.normalizer_orders[p] == best
    }

    fn fully_centralized(&self, p: usize) -> bool {
        let fc = self.f_class_of_subgroup(p);
        let best = self.f_class_subgroups(fc).map(|q| self.centralizer_orders[q]).max().unwrap();
        self.centralizer_orders[p] == best
    }

    /// All subgroup indices in an F-class.
    pub fn f_class_subgroups(&self, fc: usize) -> impl Iterator<Item = usize> + '_ {
        self.f_classes[fc]
            .iter()
            .flat_map(move |&sc| self.subgroups.class(sc).members.iter().copied())
    }

    fn label(&self, p: usize) -> String {
        self.subgroups.class(self.subgroups.class_of(p)).label.clone()
    }

    /// N_φ = {x ∈ N_S(P) : ∃ y ∈ N_S(φP), φ∘c_x = c_y∘φ}.
    pub fn n_phi(&self, m: &FusionMorphism) -> Subgroup {
        let s = &self.s;
        let full = s.full_subgroup();
        let p = self.subgroup(m.source);
        let q = self.subgroup(m.image);
        let np = s.normalizer(&full, p);
        let nq = s.normalizer(&full, q);
        let members: Vec<usize> = np
            .members()
            .iter()
            .copied()
            .filter(|&x| {
                nq.members().iter().any(|&y| {
                    p.members().iter().enumerate().all(|(k, &a)| {
                        let lhs = self.apply(m, s.conj(x, a));
                        let rhs = s.conj(y, m.map[k]);
                        lhs == rhs
                    })
                })
            })
            .collect();
        Subgroup::from_members(s.order(), members)
    }

    fn check_saturation(&self) -> SaturationVerdict {
        for p in 0..self.subgroups.len() {
            if !self.fully_normalized(p) {
                continue;
            }
            if !self.fully_centralized(p) {
                return SaturationVerdict {
                    saturated: false,
                    witness: Some(SaturationWitness::NotFullyCentralized { subgroup: self.label(p) }),
                };
            }
            let aut = self.aut_f(p).expect("Aut_F is a small permutation group");
            let index = aut.group.order() / aut.aut_s.order();
            if index.is_multiple_of(self.prime as usize) {
                return SaturationVerdict {
                    saturated: false,
                    witness: Some(SaturationWitness::SylowFails {
                        subgroup: self.label(p),
                        aut_f_order: aut.group.order(),
                        aut_s_order: aut.aut_s.order(),
                    }),
                };
            }
        }
        for p in 0..self.subgroups.len() {
            for m in &self.homs[p] {
                if !self.fully_centralized(m.image) {
                    continue;
                }
                let nphi = self.n_phi(m);
                let ni = self.subgroups.find(&nphi).expect("N_φ is a subgroup");
                let src = self.subgroup(p);
                let extends = self.homs[ni].iter().any(|e| {
                    src.members().iter().zip(&m.map).all(|(&x, &y)| self.apply(e, x) == y)
                });
                if !extends {
                    return SaturationVerdict {
                        saturated: false,
                        witness: Some(SaturationWitness::ExtensionFails {
                            subgroup: self.label(p),
                            image: self.label(m.image),
                            n_phi_order: nphi.order(),
                        }),
                    };
                }
            }
        }
        SaturationVerdict { saturated: true, witness: None }
    }

    /// Compose two morphisms ψ∘φ where image(φ) ⊆ source(ψ); returns the map table.
    pub fn compose_maps(&self, psi: &FusionMorphism, phi: &FusionMorphism) -> Vec<usize> {
        phi.map.iter().map(|&y| self.apply(psi, y)).collect()
    }

    /// Does some morphism in hom_F(P,S) have exactly this map?
    pub fn find_morphism(&self, p: usize, map: &[usize]) -> Option<&FusionMorphism> {
        self.homs[p].iter().find(|m| m.map == map)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            let next = self.parent[y];
            self.parent[y] = r;
            y = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// (class index per item, items per class), classes ordered by least item.
    fn classes(&mut self) -> (Vec<usize>, Vec<Vec<usize>>) {
        let n = self.parent.len();
        let mut id: HashMap<usize, usize> = HashMap::new();
        let mut of = vec![0; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            let c = *id.entry(r).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            of[x] = c;
            classes[c].push(x);
        }
        (of, classes)
    }
}

#[cfg(test)]
mod tests {
    use super::presets;
    use super::*;

    #[test]
    fn trivial_fusion_matches_s_classes() {
        for name in ["C4", "D8", "Q8", "C3xC3", "C9"] {
            let fs = presets::fusion(name).unwrap();
            assert_eq!(fs.f_classes().len(), fs.subgroups().classes().len(), "{name}");
            assert_eq!(fs.element_f_classes().len(), fs.element_classes().len());
            assert!(fs.is_saturated());
            assert!(fs.is_trivial_fusion());
            let top = fs.top();
            let aut = fs.aut_f(top).unwrap();
            assert_eq!(aut.group.order(), aut.aut_s.order());
        }
    }

    #[test]
    fn a4_on_klein_four() {
        let fs = presets::fusion("A4").unwrap();
        let order2: Vec<usize> = (0..fs.f_classes().len())
            .filter(|&fc| fs.subgroup(fs.f_class_representative(fc)).order() == 2)
            .collect();
        assert_eq!(order2.len(), 1);
        assert_eq!(fs.f_class_subgroups(order2[0]).count(), 3);
        assert_eq!(fs.element_f_classes().len(), 2);
        assert_eq!(fs.aut_f(fs.top()).unwrap().group.order(), 3);
        assert!(fs.is_saturated());
    }

    #[test]
    fn frobenius_twenty() {
        let fs = presets::fusion("C5-semidirect-C4").unwrap();
        assert_eq!(fs.element_f_classes().len(), 2);
        assert_eq!(fs.element_f_classes()[1].len(), 4);
        assert_eq!(fs.aut_f(fs.top()).unwrap().group.order(), 4);
    }

    #[test]
    fn s3_on_c3_has_inversion() {
        let fs = presets::fusion("S3").unwrap();
        let top = fs.top();
        assert_eq!(fs.hom(top, top).len(), 2);
        let s = fs.s();
        let inv: Vec<usize> = fs.subgroup(top).members().iter().map(|&x| s.inv(x)).collect();
        assert!(fs.find_morphism(top, &inv).is_some());
    }

    #[test]
    fn sigma4_on_normal_klein_is_unsaturated() {
        let fs = presets::fusion("S4-normal-V").unwrap();
        assert_eq!(fs.aut_f(fs.top()).unwrap().group.order(), 6);
        let v = fs.saturation();
        assert!(!v.saturated);
        assert_eq!(
            v.witness,
            Some(SaturationWitness::SylowFails { subgroup: "4a".into(), aut_f_order: 6, aut_s_order: 1 })
        );
    }

    #[test]
    fn sylow_presets_are_saturated() {
        for name in ["A4", "S3", "S4", "SL2(3)", "C5-semidirect-C4", "C5-semidirect-C2", "A6"] {
            let fs = presets::fusion(name).unwrap();
            assert!(fs.is_sylow(), "{name}");
            assert!(fs.is_saturated(), "{name}: {:?}", fs.saturation());
        }
    }

    #[test]
    fn morphisms_compose_and_invert() {
        for name in ["S4", "SL2(3)", "A6"] {
            let fs = presets::fusion(name).unwrap();
            for p in 0..fs.subgroups().len() {
                for phi in fs.homs_to_s(p) {
                    // the isomorphism onto the image has its inverse in F
                    let img = fs.subgroup(phi.image);
                    let mut inv = vec![0; img.order()];
                    for (k, &y) in phi.map.iter().enumerate() {
                        inv[img.position(y).unwrap()] = fs.subgroup(p).members()[k];
                    }
                    assert!(fs.find_morphism(phi.image, &inv).is_some());
                    // closure under composition
                    for psi in fs.homs_to_s(phi.image) {
                        let comp = fs.compose_maps(psi, phi);
                        assert!(fs.find_morphism(p, &comp).is_some());
                    }
                }
            }
        }
    }
}
