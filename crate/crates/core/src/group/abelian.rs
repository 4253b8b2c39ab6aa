//! Quotients by normal subgroups and abelianizations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{FiniteGroup, Limits, Permutation, Subgroup};
use crate::error::{Error, Result};
use crate::intlin;

/// G/N realized as a permutation group on the left cosets of N.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Index in `group` of the image of each element of the parent.
    pub projection: Vec<usize>,
}

impl Quotient {
    pub fn new(parent: &FiniteGroup, within: &Subgroup, normal: &Subgroup) -> Result<Self> {
        if !normal.is_subset(within) || !parent.is_normal(within, normal) {
            return Err(Error::structure("quotient requires a normal subgroup"));
        }
        let mut coset_of: HashMap<usize, usize> = HashMap::new();
        let mut reps = Vec::new();
        for &x in within.members() {
            if coset_of.contains_key(&x) {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            for &n in normal.members() {
                coset_of.insert(parent.mul(x, n), c);
            }
        }
        let k = reps.len();
        if k > 255 {
            return Err(Error::size(format!("quotient of order {k} is too large to act on cosets")));
        }
        let act = |g: usize| -> Result<Permutation> {
            let images: Vec<usize> = reps.iter().map(|&r| coset_of[&parent.mul(g, r)]).collect();
            Permutation::from_images(&images)
        };
        let mut gens: Vec<Permutation> = within
            .generators(parent)
            .into_iter()
            .map(act)
            .collect::<Result<_>>()?;
        if gens.is_empty() {
            gens.push(Permutation::identity(k));
        }
        let limits = Limits { max_degree: 255, ..Limits::default() };
        let group = FiniteGroup::from_generators(&gens, &limits)?;
        let mut projection = vec![usize::MAX; parent.order()];
        for &x in within.members() {
            projection[x] = group.index_of(&act(x)?).expect("image lies in quotient");
        }
        Ok(Quotient { group, projection })
    }
}

/// H/[H,H] as a product of cyclic groups, with coordinates of each element.
#[derive(Clone, Debug)]
pub struct Abelianization {
    /// Nontrivial invariant factors d_1 | d_2 | …
    pub invariants: Vec<u64>,
    coords: HashMap<usize, Vec<u64>>,
}

impl Abelianization {
    pub fn new(group: &FiniteGroup, h: &Subgroup) -> Self {
        let derived = group.derived_subgroup(h);
        let gens = h.generators(group);
        let k = gens.len();
        // cosets of the derived subgroup
        let mut coset_of: HashMap<usize, usize> = HashMap::new();
        let mut coset_rep = Vec::new();
        for &x in h.members() {
            if coset_of.contains_key(&x) {
                continue;
            }
            let c = coset_rep.len();
            coset_rep.push(x);
            for &d in derived.members() {
                coset_of.insert(group.mul(x, d), c);
            }
        }
        let ncos = coset_rep.len();
        // spanning tree of the Cayley graph of H/H' with Schreier relations
        let mut vecs: Vec<Option<Vec<i64>>> = vec![None; ncos];
        let start = coset_of[&0];
        vecs[start] = Some(vec![0; k]);
        let mut queue = vec![start];
        let mut relations: Vec<Vec<i64>> = Vec::new();
        let mut head = 0;
        while head < queue.len() {
            let c = queue[head];
            head += 1;
            let v = vecs[c].clone().unwrap();
            for (i, &g) in gens.iter().enumerate() {
                let d = coset_of[&group.mul(coset_rep[c], g)];
                let mut w = v.clone();
                w[i] += 1;
                match &vecs[d] {
                    None => {
                        vecs[d] = Some(w);
                        queue.push(d);
                    }
                    Some(existing) => {
                        let rel: Vec<i64> = w.iter().zip(existing).map(|(a, b)| a - b).collect();
                        if rel.iter().any(|&x| x != 0) {
                            relations.push(rel);
                        }
                    }
                }
            }
        }
        if k == 0 {
            let coords = h.members().iter().map(|&x| (x, Vec::new())).collect();
            return Abelianization { invariants: Vec::new(), coords };
        }
        let rel = intlin::int_matrix(&relations);
        let (d, _u, v) = intlin::smith(&rel, k);
        let mut diag: Vec<BigInt> = d;
        diag.resize(k, BigInt::zero());
        let keep: Vec<usize> = (0..k).filter(|&i| diag[i] != BigInt::from(1)).collect();
        let invariants: Vec<u64> = keep
            .iter()
            .map(|&i| diag[i].to_u64().expect("finite abelianization has nonzero invariants"))
            .collect();
        let mut coords = HashMap::new();
        for &x in h.members() {
            let base = vecs[coset_of[&x]].as_ref().unwrap();
            let b: Vec<BigInt> = base.iter().map(|&t| BigInt::from(t)).collect();
            let w = intlin::vec_mat(&b, &v, k);
            let c: Vec<u64> = keep
                .iter()
                .zip(&invariants)
                .map(|(&i, &m)| w[i].mod_floor(&BigInt::from(m)).to_u64().unwrap())
                .collect();
            coords.insert(x, c);
        }
        Abelianization { invariants, coords }
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariants.iter().fold(1, |a, &b| a.lcm(&b))
    }

    pub fn coordinates(&self, x: usize) -> &[u64] {
        &self.coords[&x]
    }

    /// All character indices j ∈ Π Z/d_i, in lexicographic order.
    pub fn character_indices(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.invariants {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |j| {
                        let mut p = prefix.clone();
                        p.push(j);
                        p
                    })
                })
                .collect();
        }
        out
    }

    /// Exponent e of ζ_N in λ_j(x) = ζ_N^e where N is the abelianization exponent.
    pub fn character_exponent(&self, j: &[u64], x: usize) -> u64 {
        let n = self.exponent();
        let c = self.coordinates(x);
        let mut e = 0u64;
        for ((&ji, &ci), &di) in j.iter().zip(c).zip(&self.invariants) {
            e = (e + ji * ci % di * (n / di)) % n;
        }
        e
    }
}
