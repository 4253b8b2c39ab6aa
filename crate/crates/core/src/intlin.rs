//! Integer linear algebra: Hermite and Smith normal forms, integer kernels,
//! and lattices in Z^n kept in Hermite normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn int_row(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| int_row(r)).collect()
}

fn row_sub_mul(target: &mut [BigInt], src: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(src) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

/// Row echelon form by unimodular row operations, pivoting only on the first
/// `pivot_cols` columns. Pivots are positive and entries above each pivot are
/// reduced into `[0, pivot)`. Returns the transformed rows (including zero
/// rows on the pivot part) and the number of pivot rows.
pub fn echelon(mut rows: IntMatrix, pivot_cols: usize) -> (IntMatrix, usize) {
    let nrows = rows.len();
    let mut r = 0;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    for c in 0..pivot_cols {
        if r == nrows {
            break;
        }
        loop {
            // smallest nonzero |entry| in column c among rows r..
            let mut best: Option<usize> = None;
            for i in r..nrows {
                if !rows[i][c].is_zero()
                    && best.is_none_or(|b| rows[i][c].abs() < rows[b][c].abs())
                {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            rows.swap(r, b);
            let mut done = true;
            for i in (r + 1)..nrows {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(i);
                row_sub_mul(&mut tail[0], &head[r], &q);
                if !rows[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < nrows && !rows[r][c].is_zero() {
            if rows[r][c].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                let q = rows[i][c].div_floor(&rows[r][c]);
                let (head, tail) = rows.split_at_mut(r);
                row_sub_mul(&mut head[i], &tail[0], &q);
            }
            pivots.push((r, c));
            r += 1;
        }
    }
    (rows, r)
}

/// Hermite normal form of the lattice spanned by `rows` (nonzero rows only).
pub fn hnf(rows: &[Vec<BigInt>], ncols: usize) -> IntMatrix {
    let (mut h, rank) = echelon(rows.to_vec(), ncols);
    h.truncate(rank);
    h
}

/// Basis (in Hermite normal form) of {y ∈ Z^r : y·M = 0} for an r×c matrix M.
pub fn left_kernel(m: &[Vec<BigInt>], ncols: usize) -> IntMatrix {
    let r = m.len();
    let aug: IntMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.resize(ncols, BigInt::zero());
            v.extend((0..r).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            v
        })
        .collect();
    let (ech, rank) = echelon(aug, ncols);
    let ker: IntMatrix = ech[rank..].iter().map(|row| row[ncols..].to_vec()).collect();
    hnf(&ker, r)
}

/// Smith normal form: returns (d, u, v) with u·m·v = diag(d) (d padded with
/// zeros), u and v unimodular, and d_i | d_{i+1}.
pub fn smith(m: &[Vec<BigInt>], ncols: usize) -> (Vec<BigInt>, IntMatrix, IntMatrix) {
    let nrows = m.len();
    let mut a: IntMatrix = m.to_vec();
    let mut u = identity(nrows);
    let mut v = identity(ncols);
    let steps = nrows.min(ncols);
    for t in 0..steps {
        loop {
            // locate smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..nrows {
                for j in t..ncols {
                    if !a[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            u.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            for row in v.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in (t + 1)..nrows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let (h, tl) = a.split_at_mut(i);
                row_sub_mul(&mut tl[0], &h[t], &q);
                let (h, tl) = u.split_at_mut(i);
                row_sub_mul(&mut tl[0], &h[t], &q);
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in (t + 1)..ncols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let s = row[t].clone();
                    row[j] -= &q * s;
                }
                for row in v.iter_mut() {
                    let s = row[t].clone();
                    row[j] -= &q * s;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: pull a non-divisible entry into row t
            let p = a[t][t].clone();
            let mut bad = None;
            'outer: for i in (t + 1)..nrows {
                for j in (t + 1)..ncols {
                    if !(&a[i][j] % &p).is_zero() {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let (h, tl) = a.split_at_mut(i);
                    for (x, y) in h[t].iter_mut().zip(tl[0].iter()) {
                        *x += y;
                    }
                    let (h, tl) = u.split_at_mut(i);
                    for (x, y) in h[t].iter_mut().zip(tl[0].iter()) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if t < nrows && t < ncols && a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    let d = (0..steps).map(|i| a[i][i].clone()).collect();
    (d, u, v)
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(s) = ((k + 1)..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

pub fn mat_vec(rows: &[Vec<BigInt>], x: &[BigInt]) -> Vec<BigInt> {
    rows.iter()
        .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

/// y·M for a row vector y.
pub fn vec_mat(y: &[BigInt], rows: &[Vec<BigInt>], ncols: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); ncols];
    for (c, row) in y.iter().zip(rows) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(row) {
            *o += c * x;
        }
    }
    out
}

/// Unique solution of A·x = b over Q, if one exists and A has full column rank.
/// Returns `Err(true)` for inconsistent systems and `Err(false)` when the
/// solution is not unique.
pub fn solve_rational(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>, bool> {
    let m = a.len();
    let n = a.first().map_or(0, |r| r.len());
    let mut aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut v = r.clone();
            v.push(x.clone());
            v
        })
        .collect();
    let mut row = 0;
    let mut pivcols = Vec::new();
    for c in 0..n {
        let Some(p) = (row..m).find(|&i| !aug[i][c].is_zero()) else { continue };
        aug.swap(row, p);
        let inv = aug[row][c].recip();
        for x in aug[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != row && !aug[i][c].is_zero() {
                let f = aug[i][c].clone();
                let (src, dst) = if i < row {
                    let (h, t) = aug.split_at_mut(row);
                    (&t[0], &mut h[i])
                } else {
                    let (h, t) = aug.split_at_mut(i);
                    (&h[row], &mut t[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= &f * s;
                }
            }
        }
        pivcols.push(c);
        row += 1;
    }
    if aug[row..].iter().any(|r| !r[n].is_zero()) {
        return Err(true);
    }
    if pivcols.len() < n {
        return Err(false);
    }
    Ok((0..n).map(|i| aug[i][n].clone()).collect())
}

/// Rank over Q.
pub fn rank(rows: &[Vec<BigInt>], ncols: usize) -> usize {
    hnf(rows, ncols).len()
}

/// A sublattice of Z^n stored by its Hermite normal form basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLattice {
    ambient: usize,
    basis: IntMatrix,
}

impl IntegerLattice {
    pub fn from_generators(ambient: usize, gens: &[Vec<BigInt>]) -> Self {
        IntegerLattice { ambient, basis: hnf(gens, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        IntegerLattice { ambient, basis: identity(ambient) }
    }

    pub fn zero(ambient: usize) -> Self {
        IntegerLattice { ambient, basis: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_i64(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.basis
            .iter()
            .map(|r| r.iter().map(|x| x.to_i64().expect("entry fits in i64")).collect())
            .collect()
    }

    fn pivot(row: &[BigInt]) -> usize {
        row.iter().position(|x| !x.is_zero()).expect("HNF rows are nonzero")
    }

    /// Reduce v by the basis; v is in the lattice iff the remainder is zero.
    fn reduce(&self, v: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>) {
        let mut r = v.to_vec();
        let mut coeffs = vec![BigInt::zero(); self.basis.len()];
        for (i, b) in self.basis.iter().enumerate() {
            let c = Self::pivot(b);
            let q = r[c].div_floor(&b[c]);
            row_sub_mul(&mut r, b, &q);
            coeffs[i] = q;
        }
        (r, coeffs)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).0.iter().all(|x| x.is_zero())
    }

    /// Coordinates of v in the HNF basis, if v lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let (r, c) = self.reduce(v);
        r.iter().all(|x| x.is_zero()).then_some(c)
    }

    pub fn contains_lattice(&self, other: &IntegerLattice) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Index [self : sub] when sub ⊆ self has the same rank.
    pub fn index_of(&self, sub: &IntegerLattice) -> Option<BigInt> {
        if sub.rank() != self.rank() || !self.contains_lattice(sub) {
            return None;
        }
        let coords: IntMatrix = sub.basis.iter().map(|b| self.coordinates(b).unwrap()).collect();
        Some(det(&coords).abs())
    }

    /// Intersection with {f : a·f ≡ 0 mod m}; m = 0 means equality a·f = 0.
    pub fn intersect_congruence(&self, a: &[BigInt], m: &BigInt) -> IntegerLattice {
        let k = self.basis.len();
        let c: Vec<BigInt> = self
            .basis
            .iter()
            .map(|b| b.iter().zip(a).map(|(x, y)| x * y).sum())
            .collect();
        let satisfied = if m.is_zero() {
            c.iter().all(|x| x.is_zero())
        } else {
            c.iter().all(|x| (x % m).is_zero())
        };
        if satisfied {
            return self.clone();
        }
        let mut sys: IntMatrix = c.iter().map(|x| vec![x.clone()]).collect();
        if !m.is_zero() {
            sys.push(vec![m.clone()]);
        }
        let ker = left_kernel(&sys, 1);
        let gens: IntMatrix = ker.iter().map(|y| vec_mat(&y[..k], &self.basis, self.ambient)).collect();
        IntegerLattice::from_generators(self.ambient, &gens)
    }

    /// Image under x ↦ x·A where A has `target` columns.
    pub fn image(&self, a: &[Vec<BigInt>], target: usize) -> IntegerLattice {
        let gens: IntMatrix = self.basis.iter().map(|b| vec_mat(b, a, target)).collect();
        IntegerLattice::from_generators(target, &gens)
    }

    /// Preimage {x ∈ Z^n : x·A ∈ L} for L = self ⊆ Z^m and A an n×m matrix.
    pub fn preimage(&self, a: &[Vec<BigInt>]) -> IntegerLattice {
        let n = a.len();
        let m = self.ambient;
        let mut sys: IntMatrix = a.to_vec();
        for b in &self.basis {
            sys.push(b.iter().map(|x| -x).collect());
        }
        let ker = left_kernel(&sys, m);
        let gens: IntMatrix = ker.iter().map(|y| y[..n].to_vec()).collect();
        IntegerLattice::from_generators(n, &gens)
    }
}

/// Solve y·G = v over Z for a list of generators G, returning one solution.
pub fn solve_integer(gens: &[Vec<BigInt>], ncols: usize, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let k = gens.len();
    let aug: IntMatrix = gens
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    let (ech, rank) = echelon(aug, ncols);
    let mut rem = v.to_vec();
    rem.extend(std::iter::repeat_n(BigInt::zero(), k));
    for row in &ech[..rank] {
        let c = row.iter().position(|x| !x.is_zero()).unwrap();
        let (q, r) = rem[c].div_mod_floor(&row[c]);
        if !r.is_zero() {
            return None;
        }
        row_sub_mul(&mut rem, row, &q);
    }
    if rem[..ncols].iter().any(|x| !x.is_zero()) {
        return None;
    }
    // rem = v - y·G restricted, so the transform part holds -y
    Some(rem[ncols..].iter().map(|x| -x).collect())
}

/// Least common multiple of denominators.
pub fn common_denominator(xs: &[BigRational]) -> BigInt {
    xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        rows.iter().map(|r| int_row(r)).collect()
    }

    #[test]
    fn hnf_is_canonical() {
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let b = m(&[&[2, 4, 4], &[-4, 10, 16], &[10, -4, -16], &[0, 0, 0]]);
        assert_eq!(hnf(&a, 3), hnf(&b, 3));
        let h = hnf(&a, 3);
        assert_eq!(h.len(), 3);
        assert_eq!(det(&h).abs(), det(&a).abs());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let a = m(&[&[1, 2], &[2, 4], &[3, 1]]);
        let k = left_kernel(&a, 2);
        assert_eq!(k.len(), 1);
        assert!(vec_mat(&k[0], &a, 2).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn smith_of_relation_matrix() {
        let a = m(&[&[2, 0], &[0, 2], &[2, 2]]);
        let (d, u, v) = smith(&a, 2);
        assert_eq!(d, int_row(&[2, 2]));
        let prod: IntMatrix = (0..3)
            .map(|i| (0..2).map(|j| (0..3).map(|k| &u[i][k] * (0..2).map(|l| &a[k][l] * &v[l][j]).sum::<BigInt>()).sum()).collect())
            .collect();
        assert_eq!(prod, m(&[&[2, 0], &[0, 2], &[0, 0]]));
        let (d, _, _) = smith(&m(&[&[4, 6]]), 2);
        assert_eq!(d, int_row(&[2]));
    }

    #[test]
    fn congruence_intersection_and_index() {
        let full = IntegerLattice::full(2);
        let l = full.intersect_congruence(&int_row(&[1, -1]), &BigInt::from(4));
        assert_eq!(l.basis(), &m(&[&[1, 1], &[0, 4]]));
        let l2 = full.intersect_congruence(&int_row(&[1, -1]), &BigInt::from(2));
        assert_eq!(l2.index_of(&l), Some(BigInt::from(2)));
        assert!(l.contains(&int_row(&[4, 0])));
        assert!(!l.contains(&int_row(&[2, 0])));
        let eq = full.intersect_congruence(&int_row(&[1, -1]), &BigInt::zero());
        assert_eq!(eq.rank(), 1);
    }

    #[test]
    fn integer_solve_and_preimage() {
        let gens = m(&[&[1, 1], &[4, 0]]);
        let y = solve_integer(&gens, 2, &int_row(&[9, 1])).unwrap();
        assert_eq!(vec_mat(&y, &gens, 2), int_row(&[9, 1]));
        assert!(solve_integer(&gens, 2, &int_row(&[2, 0])).is_none());
        let target = IntegerLattice::from_generators(2, &m(&[&[2, 0], &[0, 2]]));
        let pre = target.preimage(&m(&[&[1, 1], &[1, 0]]));
        assert_eq!(pre.basis(), &m(&[&[2, 0], &[0, 2]]));
    }

    #[test]
    fn rational_solve() {
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let a = vec![vec![q(1), q(1)], vec![q(4), q(0)]];
        let x = solve_rational(&a, &[q(2), q(2)]).unwrap();
        assert_eq!(x, vec![BigRational::new(1.into(), 2.into()), BigRational::new(3.into(), 2.into())]);
        assert_eq!(solve_rational(&[vec![q(1)], vec![q(1)]], &[q(1), q(2)]), Err(true));
    }
}
