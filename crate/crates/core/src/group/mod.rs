//! Finite permutation groups carried as full, canonically sorted element lists.

mod abelian;
pub mod presets;
mod subgroups;

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use abelian::{Abelianization, Quotient};
pub use subgroups::{ConjugacyClasses, SubgroupClass, SubgroupClassification};

/// Bounds guarding the exhaustive algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_degree: usize,
    pub max_order: usize,
    pub max_subgroup_enumeration: usize,
    pub max_bauer_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: 64,
            max_order: 10_000,
            max_subgroup_enumeration: 512,
            max_bauer_order: 128,
        }
    }
}

/// A permutation of {0, …, degree−1} given by its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u8).collect() }
    }

    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > 255 {
            return Err(Error::size(format!("degree {n} exceeds 255")));
        }
        let mut seen = vec![false; n];
        for &i in images {
            if i >= n || seen[i] {
                return Err(Error::input(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images: images.iter().map(|&i| i as u8).collect() })
    }

    /// Build from disjoint cycles on `degree` points.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                let b = cyc[(k + 1) % cyc.len()];
                if a >= degree || b >= degree {
                    return Err(Error::input("cycle point out of range"));
                }
                images[a] = b;
            }
        }
        Self::from_images(&images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// (self * other)(x) = self(other(x)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Disjoint cycle notation, 0-based.
    pub fn cycle_string(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for s in 0..n {
            if seen[s] || self.images[s] as usize == s {
                continue;
            }
            out.push('(');
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&x.to_string());
                first = false;
                x = self.images[x] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_string())
    }
}

/// JSON carrier for a group definition.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

const TABLE_LIMIT: usize = 1024;

/// A finite permutation group with all elements enumerated.
///
/// Elements are sorted lexicographically by image list, so index 0 is the
/// identity and indices are stable across generator orderings.
#[derive(Clone)]
pub struct FiniteGroup {
    name: Option<String>,
    degree: usize,
    generators: Vec<Permutation>,
    gen_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    orders: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name(), self.order())
    }
}

impl FiniteGroup {
    pub fn from_generators(generators: &[Permutation], limits: &Limits) -> Result<Self> {
        let Some(first) = generators.first() else {
            return Err(Error::input("at least one generator is required"));
        };
        let degree = first.degree();
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::input("generators have different degrees"));
        }
        if degree > limits.max_degree {
            return Err(Error::size(format!("degree {degree} exceeds bound {}", limits.max_degree)));
        }
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        let id = Permutation::identity(degree);
        let mut elements = vec![id.clone()];
        seen.insert(id, ());
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            head += 1;
            for g in generators {
                let y = x.compose(g);
                if !seen.contains_key(&y) {
                    if elements.len() >= limits.max_order {
                        return Err(Error::size(format!(
                            "group order exceeds bound {}",
                            limits.max_order
                        )));
                    }
                    seen.insert(y.clone(), ());
                    elements.push(y);
                }
            }
        }
        elements.sort();
        let index: HashMap<Permutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        let gen_indices = generators.iter().map(|g| index[g]).collect();
        let mut group = FiniteGroup {
            name: None,
            degree,
            generators: generators.to_vec(),
            gen_indices,
            elements,
            index,
            inverses,
            orders: Vec::new(),
            table: None,
        };
        let n = group.elements.len();
        if n <= TABLE_LIMIT {
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let c = group.elements[a].compose(&group.elements[b]);
                    table[a * n + b] = group.index[&c] as u32;
                }
            }
            group.table = Some(table);
        }
        group.orders = (0..n).map(|g| group.compute_order(g)).collect();
        let chain = group.stabilizer_chain_order();
        if chain != n as u128 {
            return Err(Error::consistency(format!(
                "element enumeration found {n} elements but the stabilizer chain gives {chain}"
            )));
        }
        Ok(group)
    }

    pub fn from_spec(spec: &GroupSpec, limits: &Limits) -> Result<Self> {
        if spec.generators.is_empty() {
            return Err(Error::input("group spec has no generators"));
        }
        let gens = spec
            .generators
            .iter()
            .map(|g| {
                if g.len() != spec.degree {
                    return Err(Error::input("generator length differs from degree"));
                }
                Permutation::from_images(g)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_generators(&gens, limits)?.with_name(&spec.name))
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec {
            name: self.name().to_string(),
            degree: self.degree,
            generators: self.generators.iter().map(|g| g.images()).collect(),
        }
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("G")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// g·x·g⁻¹
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn pow(&self, a: usize, mut k: u64) -> usize {
        let mut result = 0;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        result
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    fn compute_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gen_indices;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Prime p when the order is a power of p (p = 1 for the trivial group).
    pub fn prime_power_base(&self) -> Option<u64> {
        prime_power_base(self.order() as u64)
    }

    /// Order of the group from an orbit-stabilizer chain built from the
    /// generators alone (Schreier generators at each level), independent of
    /// the element enumeration.
    fn stabilizer_chain_order(&self) -> u128 {
        let mut gens: Vec<Permutation> =
            self.generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        let mut total: u128 = 1;
        for point in 0..self.degree {
            if gens.is_empty() {
                break;
            }
            // transversal: orbit point -> element mapping `point` there
            let mut transversal: HashMap<usize, Permutation> = HashMap::new();
            transversal.insert(point, Permutation::identity(self.degree));
            let mut queue = vec![point];
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                let ux = transversal[&x].clone();
                for g in &gens {
                    let y = g.apply(x);
                    if let std::collections::hash_map::Entry::Vacant(e) = transversal.entry(y) {
                        e.insert(g.compose(&ux));
                        queue.push(y);
                    }
                }
            }
            total *= queue.len() as u128;
            let mut next: Vec<Permutation> = Vec::new();
            let mut seen: HashMap<Permutation, ()> = HashMap::new();
            for &x in &queue {
                let ux = &transversal[&x];
                for g in &gens {
                    let y = g.apply(x);
                    let s = transversal[&y].inverse().compose(&g.compose(ux));
                    if !s.is_identity() && seen.insert(s.clone(), ()).is_none() {
                        next.push(s);
                    }
                }
            }
            gens = next;
        }
        total
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self.order(), (0..self.order()).collect())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_members(self.order(), vec![0])
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let n = self.order();
        let mut mask = FixedBitSet::with_capacity(n);
        mask.insert(0);
        let mut members = vec![0usize];
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut head = 0;
        while head < members.len() {
            let x = members[head];
            head += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if !mask.contains(y) {
                    mask.insert(y);
                    members.push(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup { members, mask }
    }

    /// Smallest subgroup containing `sub` and `g`.
    pub fn join_element(&self, sub: &Subgroup, g: usize) -> Subgroup {
        if sub.contains(g) {
            return sub.clone();
        }
        let mut gens = sub.generators(self);
        gens.push(g);
        self.closure(&gens)
    }

    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        if members.is_empty() || !members.contains(&0) {
            return false;
        }
        let mut mask = FixedBitSet::with_capacity(self.order());
        for &m in members {
            if m >= self.order() {
                return false;
            }
            mask.insert(m);
        }
        members.iter().all(|&a| members.iter().all(|&b| mask.contains(self.mul(a, b))))
    }

    /// gHg⁻¹
    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        let members: Vec<usize> = h.members.iter().map(|&x| self.conj(g, x)).collect();
        Subgroup::from_members(self.order(), members)
    }

    pub fn normalizer(&self, within: &Subgroup, h: &Subgroup) -> Subgroup {
        let gens = h.generators(self);
        let members = within
            .members
            .iter()
            .copied()
            .filter(|&g| gens.iter().all(|&x| h.contains(self.conj(g, x))))
            .collect();
        Subgroup::from_members(self.order(), members)
    }

    pub fn centralizer(&self, within: &Subgroup, h: &Subgroup) -> Subgroup {
        let gens = h.generators(self);
        let members = within
            .members
            .iter()
            .copied()
            .filter(|&g| gens.iter().all(|&x| self.mul(g, x) == self.mul(x, g)))
            .collect();
        Subgroup::from_members(self.order(), members)
    }

    pub fn center(&self) -> Subgroup {
        let all = self.full_subgroup();
        self.centralizer(&all, &all)
    }

    pub fn is_normal(&self, within: &Subgroup, h: &Subgroup) -> bool {
        let gens = within.generators(self);
        let hg = h.generators(self);
        gens.iter().all(|&g| hg.iter().all(|&x| h.contains(self.conj(g, x))))
    }

    /// Commutator subgroup of `h`.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let gens = h.generators(self);
        let mut comms = Vec::new();
        for &a in &gens {
            for &b in &gens {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                comms.push(c);
            }
        }
        // normal closure in h of the generator commutators
        let mut sub = self.closure(&comms);
        loop {
            let mut extra = Vec::new();
            for &g in &gens {
                for &x in &sub.generators(self) {
                    let y = self.conj(g, x);
                    if !sub.contains(y) {
                        extra.push(y);
                    }
                }
            }
            if extra.is_empty() {
                return sub;
            }
            let mut all = sub.generators(self);
            all.extend(extra);
            sub = self.closure(&all);
        }
    }

    /// A Sylow p-subgroup, grown one normalizing p-element at a time.
    pub fn sylow_subgroup(&self, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        let mut target = 1usize;
        let mut n = self.order();
        while n.is_multiple_of(p as usize) {
            n /= p as usize;
            target *= p as usize;
        }
        let all = self.full_subgroup();
        let mut sub = self.trivial_subgroup();
        while sub.order() < target {
            let norm = self.normalizer(&all, &sub);
            let candidate = norm.members.iter().copied().find(|&g| {
                if sub.contains(g) {
                    return false;
                }
                // order of g modulo sub must be a power of p
                let mut x = g;
                for _ in 0..64 {
                    x = self.pow(x, p);
                    if sub.contains(x) {
                        return true;
                    }
                }
                false
            });
            let Some(g) = candidate else {
                return Err(Error::computation("Sylow growth stalled"));
            };
            // adjoin the p-part step by step so the result stays a p-group
            let mut x = g;
            while !sub.contains(self.pow(x, p)) {
                x = self.pow(x, p);
            }
            sub = self.join_element(&sub, x);
        }
        Ok(sub)
    }

    /// Restrict to a subgroup as a standalone permutation group on the same points.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
        let gens: Vec<Permutation> = {
            let g = h.generators(self);
            if g.is_empty() {
                vec![Permutation::identity(self.degree)]
            } else {
                g.iter().map(|&i| self.elements[i].clone()).collect()
            }
        };
        let limits = Limits { max_order: self.order().max(1), max_degree: self.degree.max(1), ..Limits::default() };
        let sub = FiniteGroup::from_generators(&gens, &limits)?;
        let embed = sub.elements.iter().map(|p| self.index[p]).collect();
        Ok((sub, embed))
    }
}

/// A subgroup of an implicit parent, stored as sorted element indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: FixedBitSet,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.members)
    }
}

impl Subgroup {
    pub fn from_members(parent_order: usize, mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        let mut mask = FixedBitSet::with_capacity(parent_order);
        for &m in &members {
            mask.insert(m);
        }
        Subgroup { members, mask }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.mask.contains(g)
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&g| other.contains(g)).collect();
        Subgroup::from_members(self.mask.len(), members)
    }

    /// Position of g in the sorted member list.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.members.binary_search(&g).ok()
    }

    /// A short generating set, chosen greedily with elements of large order first.
    pub fn generators(&self, group: &FiniteGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = group.trivial_subgroup();
        let mut order: Vec<usize> = self.members.clone();
        order.sort_by_key(|&g| (std::cmp::Reverse(group.element_order(g)), g));
        for g in order {
            if current.order() == self.order() {
                break;
            }
            if !current.contains(g) {
                gens.push(g);
                current = group.closure(&gens);
            }
        }
        gens
    }

    pub fn index_in(&self, parent: &Subgroup) -> usize {
        parent.order() / self.order()
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// p if n = p^k with k ≥ 1, Some(1) for n = 1, None otherwise.
pub fn prime_power_base(n: u64) -> Option<u64> {
    if n == 1 {
        return Some(1);
    }
    let f = prime_factors(n);
    (f.len() == 1).then(|| f[0])
}
