//! The characteristic idempotent ω_F as the p-adic limit of powers of G/λ.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{group_as_biset, residue, BisetAlgebra, BisetElement};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;

#[derive(Clone, Debug)]
pub struct IdempotentReport {
    pub omega: BisetElement,
    /// Least k with (G/λ)^k idempotent modulo p.
    pub power: usize,
    /// Coefficients were reconstructed from residues modulo p^precision.
    pub precision: u32,
}

const MAX_POWER: usize = 4096;

/// Dense vectors over a fixed list of basis ids closed under products.
struct Dense<'a> {
    alg: &'a BisetAlgebra,
    ids: Vec<usize>,
    pos: HashMap<usize, usize>,
}

impl<'a> Dense<'a> {
    fn new(alg: &'a BisetAlgebra, ids: Vec<usize>) -> Self {
        let pos = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
        Dense { alg, ids, pos }
    }

    fn mul(&self, a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.ids.len()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, n) in self.alg.product(self.ids[i], self.ids[j]) {
                    out[self.pos[&k]] += &xy * n;
                }
            }
        }
        for v in &mut out {
            *v = v.mod_floor(m);
        }
        out
    }

    fn mul_small(&self, a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.ids.len()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = x * y % p;
                for (k, n) in self.alg.product(self.ids[i], self.ids[j]) {
                    let slot = &mut out[self.pos[&k]];
                    *slot = (*slot + xy * (n % p)) % p;
                }
            }
        }
        out
    }
}

/// Computes ω_F for a fusion system realized on a Sylow subgroup.
pub fn characteristic_idempotent(fs: &FusionSystem, alg: &BisetAlgebra) -> Result<IdempotentReport> {
    if !fs.is_sylow() {
        return Err(Error::precondition("ω_F needs S to be a Sylow subgroup of the realizing group"));
    }
    let p = fs.prime();
    let dense = Dense::new(alg, alg.fusion_basis(fs));
    let x = group_as_biset(fs, alg);
    let lambda = BigRational::from_integer(BigInt::from(fs.ambient().order() / fs.s().order()));
    let y = x.scale(&lambda.recip());
    let to_dense = |m: &BigInt| -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); dense.ids.len()];
        for (id, c) in &y.coeffs {
            v[dense.pos[id]] = residue(c, m);
        }
        v
    };

    // least k with Y^k idempotent mod p
    let pb = BigInt::from(p);
    let y1: Vec<u64> = to_dense(&pb).iter().map(|v| v.to_u64().unwrap()).collect();
    let mut yk = y1.clone();
    let mut k = 1;
    loop {
        if dense.mul_small(&yk, &yk, p) == yk {
            break;
        }
        k += 1;
        if k > MAX_POWER {
            return Err(Error::computation("no power of G/λ is idempotent modulo p"));
        }
        yk = dense.mul_small(&yk, &y1, p);
    }

    let mut precision = 32u32;
    while precision <= 1024 {
        let m = pb.pow(precision);
        let ym = to_dense(&m);
        let mut e = ym.clone();
        for _ in 1..k {
            e = dense.mul(&e, &ym, &m);
        }
        // Newton step e ← 3e² − 2e³ doubles the p-adic precision
        let mut steps = 0;
        loop {
            let e2 = dense.mul(&e, &e, &m);
            let e3 = dense.mul(&e2, &e, &m);
            let next: Vec<BigInt> = e2.iter().zip(&e3).map(|(a, b)| (a * 3u32 - b * 2u32).mod_floor(&m)).collect();
            steps += 1;
            if next == e || steps > 64 {
                e = next;
                break;
            }
            e = next;
        }
        if let Some(omega) = reconstruct(&dense, &e, &m) {
            if omega.compose(alg, &omega) == omega && omega.is_p_local(p) {
                return Ok(IdempotentReport { omega, power: k, precision });
            }
        }
        precision *= 2;
    }
    Err(Error::computation("rational reconstruction of ω_F did not stabilize"))
}

fn reconstruct(dense: &Dense<'_>, e: &[BigInt], m: &BigInt) -> Option<BisetElement> {
    let mut out = BisetElement::zero();
    for (i, a) in e.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        out.add_term(dense.ids[i], &rational_reconstruction(a, m)?);
    }
    Some(out)
}

/// r/s ≡ a mod m with |r|, |s| ≤ √(m/2).
pub fn rational_reconstruction(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !t1.gcd(m).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}
