//! Named permutation groups.

use super::{FiniteGroup, Limits, Permutation};
use crate::error::{Error, Result};

/// Names accepted by [`group`], besides the `C<n>` and
/// `C<p>-semidirect-C<d>` families.
pub const CATALOG: &[&str] = &[
    "C2", "C3", "C4", "C5", "C9", "C2xC2", "C3xC3", "D8", "Q8", "SD16", "S3", "A4", "S4", "SL2(3)",
    "PGL3(3)", "A6", "C3-semidirect-C2", "C5-semidirect-C2", "C5-semidirect-C4", "C7-semidirect-C6",
];

/// Canonical spelling of a preset name.
pub fn normalize(name: &str) -> String {
    let mut s: String = name
        .chars()
        .filter(|c| !matches!(c, '_' | ' '))
        .collect::<String>()
        .replace('Σ', "S")
        .replace("Sigma", "S")
        .replace('⋊', "-semidirect-")
        .replace('×', "x");
    if let Some((a, b)) = s.split_once(':') {
        s = format!("{a}-semidirect-{b}");
    }
    s
}

fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(degree, cycles).expect("preset cycles are valid")
}

fn affine(p: usize, mult: usize) -> Vec<Permutation> {
    let shift: Vec<usize> = (0..p).map(|x| (x + 1) % p).collect();
    let scale: Vec<usize> = (0..p).map(|x| (x * mult) % p).collect();
    vec![
        Permutation::from_images(&shift).unwrap(),
        Permutation::from_images(&scale).unwrap(),
    ]
}

fn mult_order(a: usize, p: usize) -> usize {
    let mut k = 1;
    let mut x = a % p;
    while x != 1 {
        x = x * a % p;
        k += 1;
    }
    k
}

/// Projective plane over F_3 acted on by SL_3(3) = PGL_3(3).
fn pgl33() -> Vec<Permutation> {
    let mut points: Vec<[usize; 3]> = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                let v = [a, b, c];
                if v == [0, 0, 0] {
                    continue;
                }
                let lead = v.iter().find(|&&x| x != 0).copied().unwrap();
                if lead == 1 {
                    points.push(v);
                }
            }
        }
    }
    let normalize = |v: [usize; 3]| -> [usize; 3] {
        let lead = v.iter().find(|&&x| x != 0).copied().unwrap();
        let inv = if lead == 1 { 1 } else { 2 };
        [v[0] * inv % 3, v[1] * inv % 3, v[2] * inv % 3]
    };
    let mut gens = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                continue;
            }
            // transvection adding row j to row i
            let images: Vec<usize> = points
                .iter()
                .map(|v| {
                    let mut w = *v;
                    w[i] = (w[i] + v[j]) % 3;
                    let w = normalize(w);
                    points.iter().position(|p| *p == w).unwrap()
                })
                .collect();
            gens.push(Permutation::from_images(&images).unwrap());
        }
    }
    gens
}

/// SL_2(3) on the eight nonzero vectors of F_3^2.
fn sl23() -> Vec<Permutation> {
    let vecs: Vec<[usize; 2]> = (0..9).map(|i| [i / 3, i % 3]).filter(|v| *v != [0, 0]).collect();
    let act = |m: [[usize; 2]; 2]| -> Permutation {
        let images: Vec<usize> = vecs
            .iter()
            .map(|v| {
                let w = [(m[0][0] * v[0] + m[0][1] * v[1]) % 3, (m[1][0] * v[0] + m[1][1] * v[1]) % 3];
                vecs.iter().position(|x| *x == w).unwrap()
            })
            .collect();
        Permutation::from_images(&images).unwrap()
    };
    vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])]
}

/// Generators for a named group.
pub fn generators(name: &str) -> Result<Vec<Permutation>> {
    let n = normalize(name);
    let gens = match n.as_str() {
        "C2xC2" | "V4" => vec![perm(4, &[&[0, 1]]), perm(4, &[&[2, 3]])],
        "C3xC3" => vec![perm(6, &[&[0, 1, 2]]), perm(6, &[&[3, 4, 5]])],
        "D8" => vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[1, 3]])],
        // left regular representation on 1, i, j, k, -1, -i, -j, -k
        "Q8" => vec![
            Permutation::from_images(&[1, 4, 3, 6, 5, 0, 7, 2]).unwrap(),
            Permutation::from_images(&[2, 7, 4, 1, 6, 3, 0, 5]).unwrap(),
        ],
        "SD16" => {
            let a: Vec<usize> = (0..8).map(|x| (x + 1) % 8).collect();
            let b: Vec<usize> = (0..8).map(|x| (3 * x) % 8).collect();
            vec![Permutation::from_images(&a).unwrap(), Permutation::from_images(&b).unwrap()]
        }
        "S3" => vec![perm(3, &[&[0, 1, 2]]), perm(3, &[&[0, 1]])],
        "A4" => vec![perm(4, &[&[0, 1, 2]]), perm(4, &[&[0, 1], &[2, 3]])],
        "S4" => vec![perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[0, 1]])],
        "A6" => vec![perm(6, &[&[0, 1, 2]]), perm(6, &[&[1, 2, 3, 4, 5]])],
        "SL2(3)" => sl23(),
        "PGL3(3)" | "PSL3(3)" | "SL3(3)" => pgl33(),
        other => {
            if let Some((a, b)) = other.split_once("-semidirect-") {
                let p: usize = a.strip_prefix('C').and_then(|x| x.parse().ok()).ok_or_else(|| unknown(name))?;
                let d: usize = b.strip_prefix('C').and_then(|x| x.parse().ok()).ok_or_else(|| unknown(name))?;
                if !super::is_prime(p as u64) || d == 0 || !(p - 1).is_multiple_of(d) || p > 64 {
                    return Err(Error::input(format!("{name}: need a prime p ≤ 64 and d | p−1")));
                }
                let mult = (1..p).find(|&a| mult_order(a, p) == d).unwrap();
                affine(p, mult)
            } else if let Some(k) = other.strip_prefix('C').and_then(|x| x.parse::<usize>().ok()) {
                if k == 0 || k > 64 {
                    return Err(Error::input(format!("{name}: cyclic order must be in 1..=64")));
                }
                let images: Vec<usize> = (0..k).map(|x| (x + 1) % k).collect();
                vec![Permutation::from_images(&images).unwrap()]
            } else {
                return Err(unknown(name));
            }
        }
    };
    Ok(gens)
}

fn unknown(name: &str) -> Error {
    Error::input(format!("unknown group preset '{name}'"))
}

pub fn group(name: &str) -> Result<FiniteGroup> {
    group_with(name, &Limits::default())
}

pub fn group_with(name: &str, limits: &Limits) -> Result<FiniteGroup> {
    let gens = generators(name)?;
    Ok(FiniteGroup::from_generators(&gens, limits)?.with_name(&normalize(name)))
}
