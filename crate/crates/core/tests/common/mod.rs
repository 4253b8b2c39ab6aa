//! Test oracles shared by the integration suites.
#![allow(dead_code)]

use std::collections::BTreeMap;

use fusiondim::bisets::{BisetAlgebra, BisetElement};
use fusiondim::context::FusionContext;
use fusiondim::fusion::presets;
use fusiondim::group::{FiniteGroup, Subgroup};
use num_bigint::BigInt;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }

    /// Dense labels 0..k for the classes, and k.
    fn labels(&mut self) -> (Vec<usize>, usize) {
        let n = self.0.len();
        let mut label = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut k = 0;
        for x in 0..n {
            let r = self.find(x);
            if label[r] == usize::MAX {
                label[r] = k;
                k += 1;
            }
            out[x] = label[r];
        }
        (out, k)
    }
}

/// An (S,S)-biset written out element by element.
pub struct ExplicitBiset {
    pub size: usize,
    /// left[a][x] = a·x
    left: Vec<Vec<usize>>,
    /// right[b][x] = x·b
    right: Vec<Vec<usize>>,
}

/// S ×_Q S with (s·q, t) ~ (s, ψ(q)·t).
pub fn transitive(s: &FiniteGroup, q: &Subgroup, psi: &[usize]) -> ExplicitBiset {
    let n = s.order();
    let mut uf = UnionFind::new(n * n);
    for a in 0..n {
        for t in 0..n {
            for (k, &r) in q.members().iter().enumerate() {
                uf.union(s.mul(a, r) * n + t, a * n + s.mul(psi[k], t));
            }
        }
    }
    let (label, size) = uf.labels();
    let mut left = vec![vec![0; size]; n];
    let mut right = vec![vec![0; size]; n];
    for a in 0..n {
        for t in 0..n {
            let x = label[a * n + t];
            for g in 0..n {
                left[g][x] = label[s.mul(g, a) * n + t];
                right[g][x] = label[a * n + s.mul(t, g)];
            }
        }
    }
    ExplicitBiset { size, left, right }
}

/// X ×_S Y: pairs (x, y) modulo (x·b, y) ~ (x, b·y).
pub fn tensor(s: &FiniteGroup, x: &ExplicitBiset, y: &ExplicitBiset) -> ExplicitBiset {
    let n = s.order();
    let m = y.size;
    let mut uf = UnionFind::new(x.size * m);
    for &b in s.generator_indices() {
        for i in 0..x.size {
            for j in 0..m {
                uf.union(x.right[b][i] * m + j, i * m + y.left[b][j]);
            }
        }
    }
    let (label, size) = uf.labels();
    let mut left = vec![vec![0; size]; n];
    let mut right = vec![vec![0; size]; n];
    for i in 0..x.size {
        for j in 0..m {
            let z = label[i * m + j];
            for g in 0..n {
                left[g][z] = label[x.left[g][i] * m + j];
                right[g][z] = label[i * m + y.right[g][j]];
            }
        }
    }
    ExplicitBiset { size, left, right }
}

/// Orbit decomposition of a right-free biset, by stabilizers {(a, b) : a·z = z·b}.
pub fn decompose(alg: &BisetAlgebra, x: &ExplicitBiset) -> BTreeMap<usize, u64> {
    let s = alg.s();
    let n = s.order();
    let mut uf = UnionFind::new(x.size);
    for &g in s.generator_indices() {
        for z in 0..x.size {
            uf.union(z, x.left[g][z]);
            uf.union(z, x.right[g][z]);
        }
    }
    let mut done = vec![false; x.size];
    let mut out = BTreeMap::new();
    for z in 0..x.size {
        let r = uf.find(z);
        if done[r] {
            continue;
        }
        done[r] = true;
        let mut members = Vec::new();
        let mut map = Vec::new();
        for a in 0..n {
            let target = x.left[a][z];
            let bs: Vec<usize> = (0..n).filter(|&b| x.right[b][z] == target).collect();
            assert!(bs.len() <= 1, "biset is not right-free");
            if let Some(&b) = bs.first() {
                members.push(a);
                map.push(b);
            }
        }
        let q = alg.subgroups().find_members(&members).expect("stabilizer projection is a subgroup");
        *out.entry(alg.id_of(q, &map)).or_insert(0) += 1;
    }
    out
}

pub fn explicit_type(alg: &BisetAlgebra, id: usize) -> ExplicitBiset {
    let t = alg.orbit_type(id);
    transitive(alg.s(), alg.subgroups().subgroup(t.q), &t.map)
}

pub fn counts(e: &BisetElement) -> BTreeMap<usize, u64> {
    e.coeffs.iter().map(|(&k, c)| (k, u64::try_from(c.to_integer()).unwrap())).collect()
}

/// The fusion systems of the lattice-equality criterion.
pub const LATTICE_EQUALITY_INSTANCES: &[&str] = &["C4", "C9", "D8", "Q8", "C3xC3", "A4", "S3", "S4", "SL2(3)", "C5-semidirect-C4"];

pub const STRETCH_INSTANCE: &str = "PGL3(3)";

pub const TRIVIAL_PRESETS: &[&str] = &["C2", "C3", "C4", "C5", "C9", "C2xC2", "C3xC3", "D8", "Q8", "SD16"];

pub fn context(name: &str) -> FusionContext {
    FusionContext::new(presets::fusion(name).unwrap()).unwrap()
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}
