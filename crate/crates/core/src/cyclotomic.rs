//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! A number is stored as rational coordinates in the power basis
//! 1, ζ, …, ζ^{φ(n)−1}, reduced modulo the n-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Reduction data for one conductor.
#[derive(Debug)]
pub struct CyclotomicField {
    n: u32,
    phi: usize,
    /// `powers[k]` holds the coordinates of ζ^k for 0 ≤ k < n.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicField {
    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.phi
    }

    fn build(n: u32) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x, then reduce x^phi = -(poly[0] + ... + poly[phi-1] x^{phi-1})
            let top = cur[phi - 1];
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    cur[i] -= top * poly[i];
                }
            }
        }
        CyclotomicField { n, phi, powers }
    }
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let lead = den[dl - 1];
    let mut quot = vec![0i64; num.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1] / lead;
        quot[i] = c;
        for j in 0..dl {
            rem[i + j] -= c * den[j];
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let pd = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &pd);
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

/// Shared reduction data for conductor `n`.
pub fn field(n: u32) -> Arc<CyclotomicField> {
    static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
    let fields = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = fields.lock().unwrap().get(&n) {
        return f.clone();
    }
    let f = Arc::new(CyclotomicField::build(n));
    fields.lock().unwrap().entry(n).or_insert(f).clone()
}

pub fn euler_phi(n: u64) -> u64 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        let field = field(n);
        let coords = vec![BigRational::zero(); field.phi];
        Cyclotomic { field, coords }
    }

    pub fn from_rational(n: u32, q: BigRational) -> Self {
        let mut z = Self::zero(n);
        z.coords[0] = q;
        z
    }

    pub fn from_int(n: u32, k: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(BigInt::from(k)))
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    /// ζ_n^k.
    pub fn zeta_power(n: u32, k: i64) -> Self {
        let field = field(n);
        let e = k.rem_euclid(n as i64) as usize;
        let coords = field.powers[e]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Cyclotomic { field, coords }
    }

    /// Build from coordinates in the power basis of conductor `n`.
    pub fn from_coords(n: u32, coords: Vec<BigRational>) -> Self {
        let field = field(n);
        assert_eq!(coords.len(), field.phi, "coordinate count must equal φ(n)");
        Cyclotomic { field, coords }
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    /// Adds `c·ζ^e` to `acc` (length φ(n)).
    fn accumulate(field: &CyclotomicField, acc: &mut [BigRational], e: usize, c: &BigRational) {
        for (slot, &t) in acc.iter_mut().zip(&field.powers[e % field.n as usize]) {
            if t != 0 {
                *slot += c * BigRational::from_integer(BigInt::from(t));
            }
        }
    }

    /// Embed into Q(ζ_m) for a multiple m of the conductor.
    pub fn lift(&self, m: u32) -> Cyclotomic {
        let n = self.field.n;
        if m == n {
            return self.clone();
        }
        assert!(m.is_multiple_of(n), "cannot embed Q(ζ_{n}) into Q(ζ_{m})");
        let target = field(m);
        let scale = (m / n) as usize;
        let mut acc = vec![BigRational::zero(); target.phi];
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                Self::accumulate(&target, &mut acc, i * scale, c);
            }
        }
        Cyclotomic { field: target, coords: acc }
    }

    /// The Galois automorphism ζ ↦ ζ^k (k coprime to the conductor).
    pub fn galois(&self, k: i64) -> Cyclotomic {
        let n = self.field.n as i64;
        debug_assert_eq!(k.rem_euclid(n).gcd(&n), 1);
        let mut acc = vec![BigRational::zero(); self.field.phi];
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                let e = ((i as i64) * k).rem_euclid(n) as usize;
                Self::accumulate(&self.field, &mut acc, e, c);
            }
        }
        Cyclotomic { field: self.field.clone(), coords: acc }
    }

    pub fn conj(&self) -> Cyclotomic {
        self.galois(self.field.n as i64 - 1)
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> Cyclotomic {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    fn common(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        if a.field.n == b.field.n {
            return (a.clone(), b.clone());
        }
        let m = (a.field.n as u64).lcm(&(b.field.n as u64)) as u32;
        (a.lift(m), b.lift(m))
    }

    /// Complex approximation, for display only.
    pub fn approx(&self) -> (f64, f64) {
        let n = self.field.n as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coords.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let ang = 2.0 * std::f64::consts::PI * (i as f64) / n;
            re += v * ang.cos();
            im += v * ang.sin();
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.field.n == other.field.n {
            return self.coords == other.coords;
        }
        let (a, b) = Cyclotomic::common(self, other);
        a.coords == b.coords
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", q);
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if i == 1 {
                        write!(f, "z{}", self.field.n)?;
                    } else {
                        write!(f, "z{}^{}", self.field.n, i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        Cyclotomic {
            field: a.field.clone(),
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        Cyclotomic {
            field: a.field.clone(),
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = Cyclotomic::common(self, rhs);
        let field = a.field.clone();
        let mut acc = vec![BigRational::zero(); field.phi];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                Cyclotomic::accumulate(&field, &mut acc, i + j, &(x * y));
            }
        }
        Cyclotomic { field, coords: acc }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(1), |a, b| &a + &b)
    }
}

/// Units modulo n, in increasing order.
pub fn units_mod(n: u32) -> Vec<i64> {
    (1..=n.max(1) as i64)
        .filter(|k| k.gcd(&(n as i64)) == 1)
        .map(|k| k % n.max(1) as i64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [3u32, 4, 5, 8, 9, 12] {
            let s: Cyclotomic = (0..n as i64).map(|k| Cyclotomic::zeta_power(n, k)).sum();
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn conjugation_inverts_roots() {
        let z = Cyclotomic::zeta_power(8, 3);
        assert_eq!(&z * &z.conj(), Cyclotomic::one(8));
        let w = Cyclotomic::zeta_power(5, 1);
        let r = &w + &w.conj();
        assert_eq!(r.conj(), r);
        assert!(r.as_rational().is_none());
    }

    #[test]
    fn embedding_matches_powers() {
        let z3 = Cyclotomic::zeta_power(3, 1);
        assert_eq!(z3.lift(12), Cyclotomic::zeta_power(12, 4));
        let mixed = &Cyclotomic::zeta_power(4, 1) + &Cyclotomic::zeta_power(3, 1);
        assert_eq!(mixed.conductor(), 12);
        assert_eq!(Cyclotomic::from_rational(5, q(1, 2)), Cyclotomic::from_rational(1, q(1, 2)));
    }

    #[test]
    fn galois_is_multiplicative() {
        let a = &Cyclotomic::zeta_power(9, 2) + &Cyclotomic::from_int(9, 3);
        let b = &Cyclotomic::zeta_power(9, 5) - &Cyclotomic::zeta_power(9, 1);
        for k in units_mod(9) {
            assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        }
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(12), 4);
    }
}
