//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::time::Instant;

use common::{context, counts, decompose, explicit_type, ints, tensor, LATTICE_EQUALITY_INSTANCES, STRETCH_INSTANCE, TRIVIAL_PRESETS};
use fusiondim::bisets::action::{act_on_character, act_on_superclass, f_to_s_classes};
use fusiondim::bisets::{is_characteristic, BisetAlgebra, BisetElement};
use fusiondim::characters::{galois_transfer, FieldTag};
use fusiondim::context::FusionContext;
use fusiondim::fusion::{presets, SaturationWitness};
use fusiondim::intlin::IntegerLattice;
use fusiondim::realize::{
    enumerate_functions, explore_actual, p_local_index, sigma3_demo, lattice_equality_check, MonotoneOptions, MonotoneSolver,
    Status,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ctx = context("C5-semidirect-C4");
    let stable = ctx.stable_lattice(FieldTag::R);
    let trivial = ctx.real_basis.coordinates(&ctx.table, None, &ctx.table.trivial()).map_err(|e| e.to_string())?;
    let aug = ctx.table.regular().sub(&ctx.table.trivial());
    let i_s = ctx.real_basis.coordinates(&ctx.table, None, &aug).map_err(|e| e.to_string())?;
    let expect = IntegerLattice::from_generators(ctx.real_basis.len(), &[trivial, i_s]);
    ensure(stable.rank() == 2 && stable == expect, || format!("stable real lattice {:?}", stable.basis()))?;
    let image = ctx.dim_image(FieldTag::R).map_err(|e| e.to_string())?;
    let mod4 = IntegerLattice::full(2).intersect_congruence(&ints(&[1, -1]), &BigInt::from(4));
    ensure(image == mod4, || format!("Dim image {:?}", image.basis()))?;
    let cb = ctx.cb().lattice();
    let mod2 = IntegerLattice::full(2).intersect_congruence(&ints(&[1, -1]), &BigInt::from(2));
    ensure(cb == mod2, || format!("C_b(F) {:?}", cb.basis()))?;
    let idx = p_local_index(&ctx).map_err(|e| e.to_string())?;
    ensure(idx.index == Some(BigInt::from(2)) && idx.coprime_to_p, || format!("index {:?}", idx.index))?;
    let t = start.elapsed();
    ensure(t.as_secs_f64() < 1.0, || format!("took {t:?}"))?;
    Ok(format!("F_5(C5:C4): stable R-lattice <1, I_S>, image f(1)=f(S) mod 4, C_b mod 2, index 2 ({t:.2?})"))
}

fn criterion_2(contexts: &[FusionContext]) -> Outcome {
    let start = Instant::now();
    let mut names = Vec::new();
    for ctx in contexts {
        let r = lattice_equality_check(ctx).map_err(|e| e.to_string())?;
        ensure(r.contained && r.equal, || format!("{}: image {:?} vs C_ba {:?}", r.fusion, r.image, r.cba))?;
        names.push(r.fusion);
    }
    let t = start.elapsed();
    ensure(t.as_secs() < 60, || format!("took {t:?}"))?;
    Ok(format!("Dim(R_R(F)) = C_ba(F) on {} systems incl. {} ({t:.2?})", names.len(), names.last().unwrap()))
}

fn criterion_3() -> Outcome {
    for name in TRIVIAL_PRESETS {
        let ctx = context(name);
        let image = ctx.stable_lattice(FieldTag::R).image(&ctx.dim_s(FieldTag::R).map_err(|e| e.to_string())?, ctx.s_domain.len());
        let cb = ctx.cb_s().lattice();
        ensure(image == cb, || format!("{name}: Dim(R_R(S)) {:?} vs C_b(S) {:?}", image.basis(), cb.basis()))?;
    }
    Ok(format!("Dim(R_R(S)) = C_b(S) on {} p-groups", TRIVIAL_PRESETS.len()))
}

fn criterion_4(contexts: &[FusionContext]) -> Outcome {
    let mut parts = Vec::new();
    for ctx in contexts {
        let r = p_local_index(ctx).map_err(|e| e.to_string())?;
        ensure(r.index.is_some() && r.coprime_to_p, || format!("{}: index {:?}", r.fusion, r.index))?;
        parts.push(format!("{}:{}", r.fusion, r.index.unwrap()));
    }
    Ok(format!("[C_b(F) : image] finite and prime to p: {}", parts.join(" ")))
}

fn criterion_5(contexts: &[FusionContext]) -> Outcome {
    let mut total = 0usize;
    for ctx in contexts {
        let name = ctx.fs.name();
        let alg = &ctx.alg;
        let omega = &ctx.omega().map_err(|e| format!("{name}: {e}"))?.omega;
        ensure(omega.compose(alg, omega) == *omega, || format!("{name}: ω² ≠ ω"))?;
        let v = is_characteristic(&ctx.fs, alg, omega);
        ensure(v.holds(), || format!("{name}: {:?}", v.failure))?;
        ensure(omega.coefficient_sums_ok(alg), || format!("{name}: coefficient sums {:?}", omega.coefficient_sums(alg)))?;
        for field in [FieldTag::C, FieldTag::R] {
            let basis = ctx.basis(field);
            for x in ctx.stable_lattice(field).basis() {
                let chi = basis.combine(&ctx.table, x);
                ensure(act_on_character(alg, &ctx.table, omega, &chi) == chi, || format!("{name}: ω·χ ≠ χ for {x:?}"))?;
                total += 1;
            }
        }
        for fc in 0..ctx.f_domain.len() {
            let e: Vec<BigRational> =
                (0..ctx.f_domain.len()).map(|j| if j == fc { BigRational::one() } else { BigRational::zero() }).collect();
            let f = f_to_s_classes(&ctx.fs, &e);
            ensure(act_on_superclass(alg, omega, &f) == f, || format!("{name}: ω·f ≠ f at F-class {fc}"))?;
            total += 1;
        }
    }
    Ok(format!("ω_F idempotent, characteristic, sums 1/0, fixes {total} stable inputs on {} systems", contexts.len()))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut comparisons = 0usize;
    for (name, triples) in [("C2xC2", true), ("C4", true), ("D8", false)] {
        let g = fusiondim::group::presets::group(name).map_err(|e| e.to_string())?;
        let alg = BisetAlgebra::new(&g, 2).map_err(|e| e.to_string())?;
        let basis = alg.right_free_basis();
        let explicit: Vec<_> = basis.iter().map(|&i| explicit_type(&alg, i)).collect();
        for (a, xa) in basis.iter().zip(&explicit) {
            for (b, xb) in basis.iter().zip(&explicit) {
                let formula = BisetElement::basis(*a).compose(&alg, &BisetElement::basis(*b));
                let ab = tensor(alg.s(), xa, xb);
                ensure(counts(&formula) == decompose(&alg, &ab), || {
                    format!("{name}: {} x {}", alg.type_label(*a), alg.type_label(*b))
                })?;
                comparisons += 1;
                if !triples {
                    continue;
                }
                for (c, xc) in basis.iter().zip(&explicit) {
                    let formula = formula.compose(&alg, &BisetElement::basis(*c));
                    ensure(counts(&formula) == decompose(&alg, &tensor(alg.s(), &ab, xc)), || {
                        format!("{name}: {} x {} x {}", alg.type_label(*a), alg.type_label(*b), alg.type_label(*c))
                    })?;
                    comparisons += 1;
                }
            }
        }
    }
    ensure(comparisons >= 10_000, || format!("only {comparisons} comparisons"))?;
    Ok(format!("{comparisons} basis products agree with explicit finite sets ({:.2?})", start.elapsed()))
}

fn criterion_7(contexts: &[FusionContext]) -> Outcome {
    let start = Instant::now();
    let mut total = 0usize;
    let mut max_n = BigInt::one();
    for ctx in contexts {
        let solver = MonotoneSolver::new(ctx, MonotoneOptions::default()).map_err(|e| e.to_string())?;
        for f in enumerate_functions(&ctx.cb(), 12, true) {
            let r = solver.solve(&f).map_err(|e| format!("{}: {f:?}: {e}", ctx.fs.name()))?;
            ensure(r.result.status == Status::Realized && r.result.recheck, || {
                format!("{}: falsification at {f:?}: {:?}", ctx.fs.name(), r.result.diagnostics)
            })?;
            if r.result.n > max_n {
                max_n = r.result.n.clone();
            }
            total += 1;
        }
    }
    Ok(format!("{total} monotone f in C_b(F) with f(1) <= 12 realized, max N = {max_n} ({:.2?})", start.elapsed()))
}

fn criterion_8() -> Outcome {
    let r = sigma3_demo().map_err(|e| e.to_string())?;
    let one = BigRational::one();
    ensure(r.function == ints(&[2, 2, 0]) && r.in_dp, || format!("f = {:?}, in D_P = {}", r.function, r.in_dp))?;
    ensure(r.unique && r.solution == vec![one.clone(), -one.clone(), one], || format!("solution {:?}", r.solution))?;
    ensure(r.no_multiple_realizable, || "a multiple of f looks realizable".into())?;
    let c3 = &r.sylow[&3];
    let c2 = &r.sylow[&2];
    ensure(c3.status == Status::Realized && c3.n.is_one() && c3.witness.as_ref().unwrap().coords == ints(&[0, 1]), || {
        format!("C3 restriction {c3:?}")
    })?;
    ensure(c2.status == Status::Realized && c2.n.is_one() && c2.witness.as_ref().unwrap().coords == ints(&[2, 0]), || {
        format!("C2 restriction {c2:?}")
    })?;
    Ok("f = (2,2,0) in D_P(S3), unique solution 1 - sigma + chi, restrictions (2,0) and (2,2) realized".into())
}

fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    for name in ["C3", "S3", "C5", "C5-semidirect-C2", "C5-semidirect-C4", "D8", "S4", "A6"] {
        let ctx = context(name);
        let r = explore_actual(&ctx, 12).map_err(|e| e.to_string())?;
        ensure(r.unknown.is_empty(), || format!("{name}: unrealized {:?}", r.unknown))?;
        parts.push(format!("{}:{}", r.fusion, r.functions));
    }
    Ok(format!("all monotone f in C_ba(F), f(1) <= 12, realized with N = 1: {}", parts.join(" ")))
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize, r: i64) -> Vec<BigInt> {
    (0..n).map(|_| BigInt::from(rng.gen_range(-r..=r))).collect()
}

fn random_in(rng: &mut ChaCha8Rng, lattice: &IntegerLattice, r: i64) -> Vec<BigInt> {
    let y = random_vector(rng, lattice.rank(), r);
    fusiondim::intlin::vec_mat(&y, lattice.basis(), lattice.ambient())
}

fn criterion_10(contexts: &[FusionContext]) -> Outcome {
    const CASES: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);

    // F-stability: value comparison, restriction comparison, lattice membership
    for case in 0..CASES {
        let ctx = &contexts[case % contexts.len()];
        let lat = ctx.stable_lattice(FieldTag::C);
        let x = if case % 2 == 0 { random_in(&mut rng, &lat, 3) } else { random_vector(&mut rng, ctx.table.len(), 2) };
        let chi = ctx.complex_basis.combine(&ctx.table, &x);
        let a = ctx.table.is_f_stable(&chi, &ctx.fs);
        let b = ctx.table.is_f_stable_by_restriction(&chi, &ctx.fs);
        ensure(a == b && b == lat.contains(&x), || format!("{}: stability disagreement at {x:?}", ctx.fs.name()))?;
    }

    // Splitting X = U - V into (U + (Ω - [S,id])V) - ΩV with both actual and stable
    for case in 0..CASES {
        let ctx = &contexts[case % contexts.len()];
        let omega = ctx.omega_min().map_err(|e| e.to_string())?;
        let x = random_in(&mut rng, &ctx.stable_lattice(FieldTag::R), 2);
        let u: Vec<BigInt> = x.iter().map(|c| if c.is_positive() { c.clone() } else { BigInt::zero() }).collect();
        let v: Vec<BigInt> = x.iter().map(|c| if c.is_negative() { -c } else { BigInt::zero() }).collect();
        let basis = &ctx.real_basis;
        let vchar = basis.combine(&ctx.table, &v);
        let omega_v = act_on_character(&ctx.alg, &ctx.table, omega, &vchar);
        let u2 = basis.combine(&ctx.table, &u).add(&omega_v).sub(&vchar);
        let cu = basis.coordinates(&ctx.table, None, &u2).map_err(|e| e.to_string())?;
        let cv = basis.coordinates(&ctx.table, None, &omega_v).map_err(|e| e.to_string())?;
        let ok = cu.iter().chain(&cv).all(|c| !c.is_negative())
            && ctx.table.is_f_stable(&u2, &ctx.fs)
            && ctx.table.is_f_stable(&omega_v, &ctx.fs)
            && u2.sub(&omega_v) == basis.combine(&ctx.table, &x);
        ensure(ok, || format!("{}: splitting fails for {x:?}", ctx.fs.name()))?;
    }

    // Galois transfer keeps F-stable characters F-stable
    for case in 0..CASES {
        let ctx = &contexts[case % contexts.len()];
        let x = random_in(&mut rng, &ctx.stable_lattice(FieldTag::C), 2);
        let chi = ctx.complex_basis.combine(&ctx.table, &x);
        for field in [FieldTag::R, FieldTag::Q] {
            let t = galois_transfer(&ctx.table, &chi, field).map_err(|e| e.to_string())?;
            ensure(ctx.table.is_f_stable(&t, &ctx.fs), || format!("{}: transfer to {field:?} unstable", ctx.fs.name()))?;
        }
    }

    // Actual stable real representations have Dim in C_ba(F)
    let pools: Vec<Vec<Vec<BigInt>>> = contexts.iter().map(|c| fusiondim::realize::stable_actual_vectors(c, 8)).collect();
    for case in 0..CASES {
        let i = case % contexts.len();
        let ctx = &contexts[i];
        let pool = &pools[i];
        let mut x = vec![BigInt::zero(); ctx.real_basis.len()];
        for _ in 0..3 {
            let v = &pool[rng.gen_range(0..pool.len())];
            for (a, b) in x.iter_mut().zip(v) {
                *a += b;
            }
        }
        let dim = ctx.dim_f(FieldTag::R).map_err(|e| e.to_string())?;
        let f = fusiondim::intlin::vec_mat(&x, &dim, ctx.f_domain.len());
        let cba = ctx.cba();
        ensure(cba.check(&f).is_empty() && ctx.f_domain.is_monotone(&f), || format!("{}: Dim {x:?} = {f:?}", ctx.fs.name()))?;
    }

    // Condition checker agrees with lattice membership
    for case in 0..CASES {
        let ctx = &contexts[case % contexts.len()];
        let cba = ctx.cba();
        let lat = cba.lattice();
        let f = if case % 2 == 0 { random_in(&mut rng, &lat, 4) } else { random_vector(&mut rng, ctx.f_domain.len(), 6) };
        ensure(cba.check(&f).is_empty() == lat.contains(&f), || format!("{}: checker vs lattice at {f:?}", ctx.fs.name()))?;
    }
    Ok(format!("5 property suites x {CASES} cases (seed 0x5eed2024) hold"))
}

fn criterion_11() -> Outcome {
    let mut n = 0;
    for &(name, _) in presets::CATALOG {
        if name == "S4-normal-V" {
            continue;
        }
        let fs = presets::fusion(name).map_err(|e| e.to_string())?;
        ensure(fs.is_saturated(), || format!("{name}: {:?}", fs.saturation()))?;
        n += 1;
    }
    let fs = presets::fusion("S4-normal-V").map_err(|e| e.to_string())?;
    let v = fs.saturation();
    let expect = SaturationWitness::SylowFails { subgroup: "4a".into(), aut_f_order: 6, aut_s_order: 1 };
    ensure(!v.saturated && v.witness.as_ref() == Some(&expect), || format!("F_V(S4): {v:?}"))?;
    Ok(format!("{n} Sylow presets saturated; F_V(S4) fails at V with |Aut_F| = 6, |Aut_S| = 1"))
}

fn main() {
    let mut instances: Vec<&str> = LATTICE_EQUALITY_INSTANCES.to_vec();
    instances.push(STRETCH_INSTANCE);
    let build = Instant::now();
    let contexts: Vec<FusionContext> = instances.iter().map(|n| context(n)).collect();
    println!("contexts built in {:.2?}", build.elapsed());
    let small = &contexts[..contexts.len() - 1];

    let criteria: Vec<(usize, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(|| criterion_2(&contexts))),
        (3, Box::new(criterion_3)),
        (4, Box::new(|| criterion_4(&contexts))),
        (5, Box::new(|| criterion_5(&contexts))),
        (6, Box::new(criterion_6)),
        (7, Box::new(|| criterion_7(&contexts))),
        (8, Box::new(criterion_8)),
        (9, Box::new(criterion_9)),
        (10, Box::new(|| criterion_10(small))),
        (11, Box::new(criterion_11)),
    ];
    let mut failed = 0;
    for (n, run) in criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(msg) => println!("PASS criterion {n}: {msg} [{:.2?}]", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {n}: {msg} [{:.2?}]", start.elapsed());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
