//! Right-free (S,S)-bisets: transitive orbit types [Q,ψ], their products,
//! and p-local linear combinations.
//!
//! Conventions: [Q,ψ] = S ×_Q S with (s·q, t) ~ (s, ψ(q)·t), so the
//! stabilizer of (1,1) in S×S is {(q, ψ(q))} and |[Q,ψ]| = |S|²/|Q|.
//! The product x ×_S y acts on modules as x·(y·m), and [Q,ψ] acts on
//! characters as Ind_Q^S ∘ res_ψ.

pub mod action;
pub mod characteristic;
pub mod idempotent;
pub mod minimal;

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::group::{FiniteGroup, Limits, Subgroup, SubgroupClassification};

pub use characteristic::{is_characteristic, CharacteristicVerdict};
pub use idempotent::characteristic_idempotent;
pub use minimal::minimal_characteristic_biset;

/// A transitive biset [Q,ψ] in canonical form: Q is the first subgroup of
/// its class and ψ is the least value table over the (S,S)-conjugates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitType {
    /// Subgroup index of Q.
    pub q: usize,
    /// ψ(x) for x over the members of Q.
    pub map: Vec<usize>,
}

/// Canonical key of a (P,S)-biset orbit type; P is implicit.
pub type TypeKey = (usize, Vec<usize>);

#[derive(Default)]
struct Inner {
    types: Vec<OrbitType>,
    ids: HashMap<OrbitType, usize>,
    canon: HashMap<(usize, usize, Vec<usize>), TypeKey>,
    products: HashMap<(usize, usize), Vec<(usize, u64)>>,
}

/// The double Burnside ring of S on right-free orbit types, with lazily
/// computed structure constants.
pub struct BisetAlgebra {
    s: FiniteGroup,
    subgroups: SubgroupClassification,
    prime: u64,
    /// sub_conj[q][a] = index of aQa⁻¹.
    sub_conj: Vec<Vec<usize>>,
    inner: Mutex<Inner>,
}

impl std::fmt::Debug for BisetAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BisetAlgebra(|S| = {}, p = {})", self.s.order(), self.prime)
    }
}

impl BisetAlgebra {
    pub fn new(s: &FiniteGroup, prime: u64) -> Result<Self> {
        let subgroups = SubgroupClassification::enumerate(s, &Limits::default())?;
        Ok(Self::with_subgroups(s.clone(), subgroups, prime))
    }

    /// The algebra over the S of a fusion system, sharing its subgroup indices.
    pub fn for_fusion(fs: &FusionSystem) -> Self {
        Self::with_subgroups(fs.s().clone(), fs.subgroups().clone(), fs.prime())
    }

    fn with_subgroups(s: FiniteGroup, subgroups: SubgroupClassification, prime: u64) -> Self {
        let sub_conj = subgroups
            .subgroups()
            .iter()
            .map(|h| {
                (0..s.order())
                    .map(|a| subgroups.find(&s.conjugate_subgroup(a, h)).expect("conjugate is a subgroup"))
                    .collect()
            })
            .collect();
        BisetAlgebra { s, subgroups, prime, sub_conj, inner: Mutex::new(Inner::default()) }
    }

    pub fn s(&self) -> &FiniteGroup {
        &self.s
    }

    pub fn subgroups(&self) -> &SubgroupClassification {
        &self.subgroups
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn top(&self) -> usize {
        self.subgroups.top()
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Inner> {
        self.inner.lock().expect("biset algebra lock poisoned")
    }

    pub fn orbit_type(&self, id: usize) -> OrbitType {
        self.lock().types[id].clone()
    }

    pub fn len(&self) -> usize {
        self.lock().types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Canonical form of [Q,ψ] as a (P,S)-biset, P = `left` (a subgroup index).
    pub fn canonical_key(&self, left: usize, q: usize, map: &[usize]) -> TypeKey {
        let memo_key = (left, q, map.to_vec());
        if let Some(k) = self.lock().canon.get(&memo_key) {
            return k.clone();
        }
        let key = self.compute_canonical(left, q, map);
        self.lock().canon.insert(memo_key, key.clone());
        key
    }

    fn compute_canonical(&self, left: usize, q: usize, map: &[usize]) -> TypeKey {
        let s = &self.s;
        let lg = self.subgroups.subgroup(left);
        let qsub = self.subgroups.subgroup(q);
        let target = lg.members().iter().map(|&a| self.sub_conj[q][a]).min().unwrap();
        let q0 = self.subgroups.subgroup(target);
        let mut best: Option<Vec<usize>> = None;
        for &a in lg.members() {
            if self.sub_conj[q][a] != target {
                continue;
            }
            let ainv = s.inv(a);
            // ψ∘c_a⁻¹ on the members of Q0
            let base: Vec<usize> = q0
                .members()
                .iter()
                .map(|&y| map[qsub.position(s.conj(ainv, y)).unwrap()])
                .collect();
            for b in 0..s.order() {
                let cand: Vec<usize> = base.iter().map(|&v| s.conj(b, v)).collect();
                if best.as_ref().is_none_or(|cur| cand < *cur) {
                    best = Some(cand);
                }
            }
        }
        (target, best.unwrap())
    }

    /// Basis id of [Q,ψ] (any representative), registering it if new.
    pub fn id_of(&self, q: usize, map: &[usize]) -> usize {
        let (q0, m0) = self.canonical_key(self.top(), q, map);
        let t = OrbitType { q: q0, map: m0 };
        let mut inner = self.lock();
        if let Some(&id) = inner.ids.get(&t) {
            return id;
        }
        let id = inner.types.len();
        inner.types.push(t.clone());
        inner.ids.insert(t, id);
        id
    }

    /// Orbit types [Q',ψ'] (not yet canonical) of [Q,ψ] ×_S [R,φ], where
    /// [Q,ψ] may be a (P,S)-biset for any P ≥ Q.
    pub fn raw_product(&self, q: usize, psi: &[usize], r: usize, phi: &[usize]) -> Vec<(usize, Vec<usize>)> {
        let s = &self.s;
        let qs = self.subgroups.subgroup(q);
        let rs = self.subgroups.subgroup(r);
        let psi_q: Vec<usize> = {
            let mut v = psi.to_vec();
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut seen = vec![false; s.order()];
        let mut out = Vec::new();
        for c in 0..s.order() {
            if seen[c] {
                continue;
            }
            // mark the double coset ψ(Q)·c·R
            for &x in &psi_q {
                let xc = s.mul(x, c);
                for &y in rs.members() {
                    seen[s.mul(xc, y)] = true;
                }
            }
            let cinv = s.inv(c);
            let mut members = Vec::new();
            let mut map = Vec::new();
            for (k, &x) in qs.members().iter().enumerate() {
                let y = s.mul(s.mul(cinv, psi[k]), c);
                if let Some(pos) = rs.position(y) {
                    members.push(x);
                    map.push(phi[pos]);
                }
            }
            let sub = self.subgroups.find_members(&members).expect("Q ∩ ψ⁻¹(cRc⁻¹) is a subgroup");
            out.push((sub, map));
        }
        out
    }

    /// Structure constants of basis products: [i] ×_S [j] = Σ n_k [k].
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, u64)> {
        if let Some(v) = self.lock().products.get(&(i, j)) {
            return v.clone();
        }
        let (a, b) = {
            let inner = self.lock();
            (inner.types[i].clone(), inner.types[j].clone())
        };
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for (q, map) in self.raw_product(a.q, &a.map, b.q, &b.map) {
            *counts.entry(self.id_of(q, &map)).or_insert(0) += 1;
        }
        let v: Vec<(usize, u64)> = counts.into_iter().collect();
        self.lock().products.insert((i, j), v.clone());
        v
    }

    /// [Q,φ]_Q^S ×_S [j] as a multiset of canonical (Q,S)-orbit keys.
    pub fn left_restriction(&self, q: usize, phi: &[usize], j: usize) -> BTreeMap<TypeKey, u64> {
        let b = self.orbit_type(j);
        let mut counts = BTreeMap::new();
        for (sub, map) in self.raw_product(q, phi, b.q, &b.map) {
            *counts.entry(self.canonical_key(q, sub, &map)).or_insert(0) += 1;
        }
        counts
    }

    pub fn identity_id(&self) -> usize {
        let top = self.top();
        let members = self.subgroups.subgroup(top).members().to_vec();
        self.id_of(top, &members)
    }

    /// All homomorphisms Q → S, Q over class representatives, as basis ids.
    pub fn right_free_basis(&self) -> Vec<usize> {
        let mut ids = Vec::new();
        for class in self.subgroups.classes() {
            let q = class.representative();
            for map in homomorphisms(&self.s, self.subgroups.subgroup(q)) {
                let id = self.id_of(q, &map);
                if !ids.contains(&id) {
                    ids.push(id);
                }
            }
        }
        ids.sort_unstable();
        ids
    }

    /// Orbit types [Q,ψ] with ψ ∈ F(Q,S), as basis ids.
    pub fn fusion_basis(&self, fs: &FusionSystem) -> Vec<usize> {
        let mut ids = Vec::new();
        for class in self.subgroups.classes() {
            let q = class.representative();
            for m in fs.homs_to_s(q) {
                let id = self.id_of(q, &m.map);
                if !ids.contains(&id) {
                    ids.push(id);
                }
            }
        }
        ids.sort_unstable();
        ids
    }

    /// |[Q,ψ]| / |S| = |S:Q|.
    pub fn relative_size(&self, id: usize) -> u64 {
        let t = self.orbit_type(id);
        (self.s.order() / self.subgroups.subgroup(t.q).order()) as u64
    }

    /// [Q,ψ]^op = [ψ(Q), ψ⁻¹] for injective ψ.
    pub fn op_id(&self, id: usize) -> Result<usize> {
        let t = self.orbit_type(id);
        let q = self.subgroups.subgroup(t.q);
        let mut pairs: Vec<(usize, usize)> = t.map.iter().copied().zip(q.members().iter().copied()).collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::precondition("op of a non-injective orbit type"));
        }
        let members: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let inv: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        let img = self.subgroups.find_members(&members).unwrap();
        Ok(self.id_of(img, &inv))
    }

    /// Label like "[4a,(0 1 2 3)]": source class label and image table.
    pub fn type_label(&self, id: usize) -> String {
        let t = self.orbit_type(id);
        let label = &self.subgroups.class(self.subgroups.class_of(t.q)).label;
        let m: Vec<String> = t.map.iter().map(|x| x.to_string()).collect();
        format!("[{label},{}]", m.join(" "))
    }

    pub fn source_label(&self, id: usize) -> String {
        let t = self.orbit_type(id);
        self.subgroups.class(self.subgroups.class_of(t.q)).label.clone()
    }

    /// Is ψ the inclusion map of Q?
    pub fn is_inclusion(&self, id: usize) -> bool {
        let t = self.orbit_type(id);
        t.map == self.subgroups.subgroup(t.q).members()
    }
}

/// All homomorphisms from a subgroup H of S into S, as value tables on H's members.
pub fn homomorphisms(s: &FiniteGroup, h: &Subgroup) -> Vec<Vec<usize>> {
    let gens = h.generators(s);
    if gens.is_empty() {
        return vec![vec![0]];
    }
    let n = s.order();
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend_hom(s, h, &gens, &images) {
            out.push(map);
        }
        // next assignment in lexicographic order
        let mut k = gens.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            images[k] += 1;
            if images[k] < n {
                break;
            }
            images[k] = 0;
        }
    }
}

fn extend_hom(s: &FiniteGroup, h: &Subgroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    for (&g, &x) in gens.iter().zip(images) {
        if !s.element_order(g).is_multiple_of(s.element_order(x)) {
            return None;
        }
    }
    let mut map = vec![usize::MAX; h.order()];
    map[h.position(0).unwrap()] = 0;
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = map[h.position(x).unwrap()];
        for (&g, &img) in gens.iter().zip(images) {
            let y = s.mul(x, g);
            let fy = s.mul(fx, img);
            let pos = h.position(y).unwrap();
            if map[pos] == usize::MAX {
                map[pos] = fy;
                queue.push(y);
            } else if map[pos] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// A p-local rational combination of basis orbit types.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BisetElement {
    pub coeffs: BTreeMap<usize, BigRational>,
}

impl BisetElement {
    pub fn zero() -> Self {
        BisetElement::default()
    }

    pub fn basis(id: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(id, BigRational::one());
        BisetElement { coeffs }
    }

    pub fn from_counts(counts: &[(usize, u64)]) -> Self {
        let mut e = BisetElement::zero();
        for &(id, c) in counts {
            e.add_term(id, &BigRational::from_integer(BigInt::from(c)));
        }
        e
    }

    pub fn add_term(&mut self, id: usize, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(id).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&id);
        }
    }

    pub fn coefficient(&self, id: usize) -> BigRational {
        self.coeffs.get(&id).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &BisetElement) -> BisetElement {
        let mut out = self.clone();
        for (&id, c) in &other.coeffs {
            out.add_term(id, c);
        }
        out
    }

    pub fn sub(&self, other: &BisetElement) -> BisetElement {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, q: &BigRational) -> BisetElement {
        let mut out = BisetElement::zero();
        for (&id, c) in &self.coeffs {
            out.add_term(id, &(c * q));
        }
        out
    }

    /// Bilinear extension of the basis product: self ×_S other.
    pub fn compose(&self, alg: &BisetAlgebra, other: &BisetElement) -> BisetElement {
        let mut out = BisetElement::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &other.coeffs {
                let ab = a * b;
                for (k, n) in alg.product(i, j) {
                    out.add_term(k, &(&ab * BigInt::from(n)));
                }
            }
        }
        out
    }

    /// All denominators prime to p.
    pub fn is_p_local(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.coeffs.values().all(|c| !(c.denom() % &p).is_zero())
    }

    pub fn is_actual(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer() && !c.is_negative())
    }

    /// |X|/|S| = Σ c·|S:Q|.
    pub fn relative_size(&self, alg: &BisetAlgebra) -> BigRational {
        self.coeffs
            .iter()
            .map(|(&id, c)| c * BigInt::from(alg.relative_size(id)))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn op(&self, alg: &BisetAlgebra) -> Result<BisetElement> {
        let mut out = BisetElement::zero();
        for (&id, c) in &self.coeffs {
            out.add_term(alg.op_id(id)?, c);
        }
        Ok(out)
    }

    /// Is every coefficient ≤ the matching one of `other`?
    pub fn le(&self, other: &BisetElement) -> bool {
        let ids: std::collections::BTreeSet<usize> = self.coeffs.keys().chain(other.coeffs.keys()).copied().collect();
        ids.into_iter().all(|id| self.coefficient(id) <= other.coefficient(id))
    }

    /// Sum of coefficients per S-class of source subgroup.
    pub fn coefficient_sums(&self, alg: &BisetAlgebra) -> BTreeMap<usize, BigRational> {
        let mut sums = BTreeMap::new();
        for (&id, c) in &self.coeffs {
            let q = alg.orbit_type(id).q;
            *sums.entry(alg.subgroups().class_of(q)).or_insert_with(BigRational::zero) += c;
        }
        sums
    }

    /// Σ c = 1 over types with source S and 0 for every smaller source class.
    pub fn coefficient_sums_ok(&self, alg: &BisetAlgebra) -> bool {
        let top = alg.subgroups().class_of(alg.top());
        let sums = self.coefficient_sums(alg);
        sums.get(&top).is_some_and(|c| c.is_one())
            && sums.iter().all(|(&cls, c)| cls == top || c.is_zero())
    }

    /// Coefficients as "num/den" strings keyed by type label, for reports.
    pub fn describe(&self, alg: &BisetAlgebra) -> Vec<(String, String)> {
        self.coeffs.iter().map(|(&id, c)| (alg.type_label(id), c.to_string())).collect()
    }
}

/// The (S,S)-biset G decomposed along the double cosets SgS.
pub fn group_as_biset(fs: &FusionSystem, alg: &BisetAlgebra) -> BisetElement {
    let g = fs.ambient();
    let s_members: Vec<usize> = fs.embedding().to_vec();
    let mut seen = vec![false; g.order()];
    let mut out = BisetElement::zero();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        for &a in &s_members {
            let ax = g.mul(a, x);
            for &b in &s_members {
                seen[g.mul(ax, b)] = true;
            }
        }
        // stabilizer {(a, x⁻¹ax) : a ∈ S ∩ xSx⁻¹}
        let xinv = g.inv(x);
        let mut members = Vec::new();
        let mut map = Vec::new();
        for (i, &a) in s_members.iter().enumerate() {
            let y = g.mul(g.mul(xinv, a), x);
            if let Some(j) = fs.restrict_index(y) {
                members.push(i);
                map.push(j);
            }
        }
        let mut pairs: Vec<(usize, usize)> = members.into_iter().zip(map).collect();
        pairs.sort_unstable();
        let members: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let map: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        let q = alg.subgroups().find_members(&members).expect("S ∩ xSx⁻¹ is a subgroup");
        out.add_term(alg.id_of(q, &map), &BigRational::one());
    }
    out
}

/// Numerator·denominator⁻¹ mod m, for p-local rationals and m a power of p.
pub(crate) fn residue(c: &BigRational, m: &BigInt) -> BigInt {
    let d = c.denom().mod_floor(m);
    let inv = mod_inverse(&d, m).expect("denominator is a unit");
    (c.numer() * inv).mod_floor(m)
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}
