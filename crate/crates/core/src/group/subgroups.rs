//! Subgroup enumeration, conjugacy classes of subgroups and elements, and
//! deterministic labels.

use std::collections::{HashMap, HashSet};

use super::{FiniteGroup, Limits, Subgroup};
use crate::error::{Error, Result};

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub label: String,
    pub order: usize,
    /// Indices into `SubgroupClassification::subgroups`, ascending.
    pub members: Vec<usize>,
}

impl SubgroupClass {
    pub fn representative(&self) -> usize {
        self.members[0]
    }
}

/// All subgroups of a group (optionally only a sub-family), partitioned into
/// conjugacy classes under a designated acting subgroup.
#[derive(Clone, Debug)]
pub struct SubgroupClassification {
    subgroups: Vec<Subgroup>,
    index: HashMap<Vec<usize>, usize>,
    classes: Vec<SubgroupClass>,
    class_of: Vec<usize>,
}

fn letters(mut k: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push((b'a' + (k % 26) as u8) as char);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s.iter().rev().collect()
}

impl SubgroupClassification {
    /// Enumerate every subgroup of `group` by cyclic extension and classify
    /// under conjugation by the whole group.
    pub fn enumerate(group: &FiniteGroup, limits: &Limits) -> Result<Self> {
        if group.order() > limits.max_subgroup_enumeration {
            return Err(Error::size(format!(
                "subgroup enumeration for order {} exceeds bound {}",
                group.order(),
                limits.max_subgroup_enumeration
            )));
        }
        let subgroups = enumerate_all(group);
        Ok(Self::classify(group, &group.full_subgroup(), subgroups))
    }

    /// Enumerate all subgroups, keeping only those accepted by `keep`. The
    /// filter must be closed under conjugation.
    pub fn enumerate_filtered(
        group: &FiniteGroup,
        limits: &Limits,
        keep: impl Fn(&Subgroup) -> bool,
    ) -> Result<Self> {
        if group.order() > limits.max_subgroup_enumeration {
            return Err(Error::size(format!(
                "subgroup enumeration for order {} exceeds bound {}",
                group.order(),
                limits.max_subgroup_enumeration
            )));
        }
        let subgroups = enumerate_all(group).into_iter().filter(|s| keep(s)).collect();
        Ok(Self::classify(group, &group.full_subgroup(), subgroups))
    }

    /// Classify a conjugation-closed family under conjugation by `acting`.
    pub fn classify(group: &FiniteGroup, acting: &Subgroup, mut subgroups: Vec<Subgroup>) -> Self {
        subgroups.sort_by(|a, b| (a.order(), a.members()).cmp(&(b.order(), b.members())));
        subgroups.dedup();
        let index: HashMap<Vec<usize>, usize> =
            subgroups.iter().enumerate().map(|(i, s)| (s.members().to_vec(), i)).collect();
        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        let acting_gens = acting.generators(group);
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let c = raw.len();
            let mut members = vec![i];
            class_of[i] = c;
            let mut head = 0;
            while head < members.len() {
                let h = members[head];
                head += 1;
                for &g in &acting_gens {
                    let conj = group.conjugate_subgroup(g, &subgroups[h]);
                    let j = *index
                        .get(conj.members())
                        .expect("subgroup family must be closed under conjugation");
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                    }
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        // classes appear in order of their smallest member, which is the
        // (order, member-set) minimum since subgroups are sorted that way
        let mut per_order: HashMap<usize, usize> = HashMap::new();
        let classes = raw
            .into_iter()
            .map(|members| {
                let order = subgroups[members[0]].order();
                let k = per_order.entry(order).or_insert(0);
                let label = format!("{}{}", order, letters(*k));
                *k += 1;
                SubgroupClass { label, order, members }
            })
            .collect();
        SubgroupClassification { subgroups, index, classes, class_of }
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &SubgroupClass {
        &self.classes[c]
    }

    pub fn class_of(&self, subgroup: usize) -> usize {
        self.class_of[subgroup]
    }

    pub fn find(&self, sub: &Subgroup) -> Option<usize> {
        self.index.get(sub.members()).copied()
    }

    pub fn find_members(&self, members: &[usize]) -> Option<usize> {
        self.index.get(members).copied()
    }

    pub fn class_by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// Index of the full group (the last subgroup).
    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    /// Verify that two subgroups are conjugate by searching for a witness.
    pub fn conjugating_element(&self, group: &FiniteGroup, acting: &Subgroup, a: usize, b: usize) -> Option<usize> {
        acting.members().iter().copied().find(|&g| {
            group.conjugate_subgroup(g, &self.subgroups[a]).members() == self.subgroups[b].members()
        })
    }
}

/// Cyclic-extension enumeration: every subgroup is reached from a smaller
/// one by adjoining a single element.
fn enumerate_all(group: &FiniteGroup) -> Vec<Subgroup> {
    let trivial = group.trivial_subgroup();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(trivial.members().to_vec());
    let mut all = vec![trivial];
    // representatives of cyclic subgroups suffice as adjoined elements
    let mut cyclic_reps: Vec<usize> = Vec::new();
    let mut cyc_seen: HashSet<Vec<usize>> = HashSet::new();
    for g in 1..group.order() {
        let c = group.closure(&[g]);
        if cyc_seen.insert(c.members().to_vec()) {
            cyclic_reps.push(g);
        }
    }
    let mut head = 0;
    while head < all.len() {
        let h = all[head].clone();
        head += 1;
        for &g in &cyclic_reps {
            if h.contains(g) {
                continue;
            }
            let k = group.join_element(&h, g);
            if seen.insert(k.members().to_vec()) {
                all.push(k);
            }
        }
    }
    all
}

/// Conjugacy classes of elements.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    labels: Vec<String>,
}

impl ConjugacyClasses {
    pub fn compute(group: &FiniteGroup) -> Self {
        Self::compute_under(group, &group.full_subgroup(), &group.full_subgroup())
    }

    /// Classes of the elements of `within` under conjugation by `acting`
    /// (which must normalize `within`).
    pub fn compute_under(group: &FiniteGroup, within: &Subgroup, acting: &Subgroup) -> Self {
        let gens = acting.generators(group);
        let mut class_of = vec![usize::MAX; group.order()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &x in within.members() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = vec![x];
            class_of[x] = c;
            let mut head = 0;
            while head < members.len() {
                let y = members[head];
                head += 1;
                for &g in &gens {
                    let z = group.conj(g, y);
                    if class_of[z] == usize::MAX {
                        class_of[z] = c;
                        members.push(z);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        let mut per_order: HashMap<usize, usize> = HashMap::new();
        let labels = classes
            .iter()
            .map(|c| {
                let o = group.element_order(c[0]);
                let k = per_order.entry(o).or_insert(0);
                let label = format!("{}{}", o, letters(*k).to_uppercase());
                *k += 1;
                label
            })
            .collect();
        ConjugacyClasses { classes, class_of, labels }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, c: usize) -> &str {
        &self.labels[c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Permutation;

    fn group(gens: &[&[&[usize]]], degree: usize) -> FiniteGroup {
        let g: Vec<Permutation> =
            gens.iter().map(|c| Permutation::from_cycles(degree, c).unwrap()).collect();
        FiniteGroup::from_generators(&g, &Limits::default()).unwrap()
    }

    /// Independent oracle: test every subset containing the identity for closure.
    fn naive_subgroup_count(g: &FiniteGroup) -> usize {
        let n = g.order();
        assert!(n <= 12);
        (0u32..(1 << n))
            .filter(|mask| mask & 1 == 1)
            .filter(|mask| {
                let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
                g.is_subgroup(&members)
            })
            .count()
    }

    #[test]
    fn trivial_and_cyclic() {
        let triv = FiniteGroup::from_generators(&[Permutation::identity(1)], &Limits::default()).unwrap();
        let sc = SubgroupClassification::enumerate(&triv, &Limits::default()).unwrap();
        assert_eq!((sc.len(), sc.classes().len()), (1, 1));
        let c4 = group(&[&[&[0, 1, 2, 3]]], 4);
        let sc = SubgroupClassification::enumerate(&c4, &Limits::default()).unwrap();
        assert_eq!((sc.len(), sc.classes().len()), (3, 3));
        let labels: Vec<&str> = sc.classes().iter().map(|c| c.label.as_str()).collect();
        assert_eq!(labels, ["1a", "2a", "4a"]);
    }

    #[test]
    fn dihedral_eight_matches_naive_search() {
        let d8 = group(&[&[&[0, 1, 2, 3]], &[&[1, 3]]], 4);
        let sc = SubgroupClassification::enumerate(&d8, &Limits::default()).unwrap();
        assert_eq!(sc.len(), naive_subgroup_count(&d8));
        assert_eq!(sc.len(), 10);
        assert_eq!(sc.classes().len(), 8);
        let a4 = group(&[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]], 4);
        let sc = SubgroupClassification::enumerate(&a4, &Limits::default()).unwrap();
        assert_eq!(sc.len(), naive_subgroup_count(&a4));
    }

    #[test]
    fn classes_are_conjugation_closed_and_deterministic() {
        let s4 = group(&[&[&[0, 1, 2, 3]], &[&[0, 1]]], 4);
        let s4b = group(&[&[&[0, 1]], &[&[0, 1, 2, 3]]], 4);
        let a = SubgroupClassification::enumerate(&s4, &Limits::default()).unwrap();
        let b = SubgroupClassification::enumerate(&s4b, &Limits::default()).unwrap();
        assert_eq!(a.len(), 30);
        assert_eq!(a.classes().len(), 11);
        let la: Vec<_> = a.classes().iter().map(|c| (c.label.clone(), c.members.clone())).collect();
        let lb: Vec<_> = b.classes().iter().map(|c| (c.label.clone(), c.members.clone())).collect();
        assert_eq!(la, lb);
        for (i, h) in a.subgroups().iter().enumerate() {
            assert_eq!(s4.order() % h.order(), 0);
            for g in 0..s4.order() {
                let j = a.find(&s4.conjugate_subgroup(g, h)).unwrap();
                assert_eq!(a.class_of(i), a.class_of(j));
            }
        }
        let all = s4.full_subgroup();
        for c in a.classes() {
            for &m in &c.members {
                assert!(a.conjugating_element(&s4, &all, c.representative(), m).is_some());
            }
        }
    }

    #[test]
    fn element_classes() {
        let s4 = group(&[&[&[0, 1, 2, 3]], &[&[0, 1]]], 4);
        let cc = ConjugacyClasses::compute(&s4);
        assert_eq!(cc.len(), 5);
        assert_eq!(cc.label(0), "1A");
        let mut sizes: Vec<usize> = (0..5).map(|c| cc.size(c)).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn letter_labels() {
        assert_eq!(letters(0), "a");
        assert_eq!(letters(25), "z");
        assert_eq!(letters(26), "aa");
    }
}
