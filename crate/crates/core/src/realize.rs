//! Realizing super class functions as dimension functions of F-stable
//! representations: lattice equality, virtual and monotone solvers, the
//! p-local index, the actual-realization explorer and the Σ3 example.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::characters::{CharacterTable, FieldTag};
use crate::context::FusionContext;
use crate::cyclotomic::euler_phi;
use crate::error::{Error, Result};
use crate::fusion::presets;
use crate::group::{self, Limits, Subgroup};
use crate::intlin::{self, IntegerLattice};
use crate::rational_reps::{schur_gap_index, schur_index_report};
use crate::rep_rings::RepVector;
use crate::superclass::{dp_system, ConditionKind, ConditionSystem, Domain, PrimePowerUniverse};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Realized,
    NotRealizable,
    /// Contradicts a proved statement, so it points at a bug.
    FalsificationFlag,
}

#[derive(Clone, Debug, Serialize)]
pub struct RealizationResult {
    pub status: Status,
    #[serde(serialize_with = "crate::serde_num::ints")]
    pub function: Vec<BigInt>,
    pub witness: Option<RepVector>,
    pub witness_text: Option<String>,
    #[serde(serialize_with = "crate::serde_num::int")]
    pub n: BigInt,
    /// Dim(witness) = N·f and stability were re-checked independently.
    pub recheck: bool,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeEqualityReport {
    pub fusion: String,
    pub columns: Vec<String>,
    #[serde(serialize_with = "crate::serde_num::rows")]
    pub image: Vec<Vec<BigInt>>,
    #[serde(serialize_with = "crate::serde_num::rows")]
    pub cba: Vec<Vec<BigInt>>,
    pub contained: bool,
    pub equal: bool,
    /// A vector of the image outside C_ba(F), if any.
    #[serde(serialize_with = "crate::serde_num::opt_ints")]
    pub falsification: Option<Vec<BigInt>>,
}

/// Dim(R_R(F)) against C_ba(F) as lattices.
pub fn lattice_equality_check(ctx: &FusionContext) -> Result<LatticeEqualityReport> {
    if !ctx.fs.is_saturated() {
        return Err(Error::precondition(format!("{} is not saturated", ctx.fs.name())));
    }
    let image = ctx.dim_image(FieldTag::R)?;
    let cba = ctx.cba().lattice();
    let falsification = image.basis().iter().find(|v| !cba.contains(v)).cloned();
    Ok(LatticeEqualityReport {
        fusion: ctx.fs.name().to_string(),
        columns: ctx.f_domain.labels.clone(),
        contained: falsification.is_none(),
        equal: image == cba,
        image: image.basis().clone(),
        cba: cba.basis().clone(),
        falsification,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct PLocalReport {
    pub fusion: String,
    pub prime: u64,
    pub cb_rank: usize,
    pub image_rank: usize,
    #[serde(serialize_with = "crate::serde_num::opt_int")]
    pub index: Option<BigInt>,
    pub coprime_to_p: bool,
}

/// [C_b(F) : Dim(R_R(F))], which must be finite and prime to p.
pub fn p_local_index(ctx: &FusionContext) -> Result<PLocalReport> {
    let image = ctx.dim_image(FieldTag::R)?;
    let cb = ctx.cb().lattice();
    let index = if cb.contains_lattice(&image) { cb.index_of(&image) } else { None };
    let p = BigInt::from(ctx.fs.prime());
    let coprime_to_p = index.as_ref().is_some_and(|i| !i.is_multiple_of(&p));
    Ok(PLocalReport {
        fusion: ctx.fs.name().to_string(),
        prime: ctx.fs.prime(),
        cb_rank: cb.rank(),
        image_rank: image.rank(),
        index,
        coprime_to_p,
    })
}

fn check_len(ctx: &FusionContext, f: &[BigInt]) -> Result<()> {
    if f.len() != ctx.f_domain.len() {
        return Err(Error::input(format!(
            "function has {} values but there are {} F-classes",
            f.len(),
            ctx.f_domain.len()
        )));
    }
    Ok(())
}

fn violation_error(system: &ConditionSystem, f: &[BigInt]) -> Result<()> {
    let v = system.check(f);
    if let Some(first) = v.first() {
        return Err(Error::precondition(format!(
            "condition ({}) fails at {} (modulus {})",
            first.condition, first.witness, first.modulus
        )));
    }
    Ok(())
}

/// An F-stable virtual real representation x with Dim x = f, for f ∈ C_ba(F).
pub fn solve_virtual(ctx: &FusionContext, f: &[BigInt]) -> Result<RealizationResult> {
    check_len(ctx, f)?;
    violation_error(&ctx.cba(), f)?;
    let stable = ctx.stable_lattice(FieldTag::R);
    let dim = ctx.dim_f(FieldTag::R)?;
    let ncols = ctx.f_domain.len();
    let gens: Vec<Vec<BigInt>> = stable.basis().iter().map(|b| intlin::vec_mat(b, &dim, ncols)).collect();
    let Some(y) = intlin::solve_integer(&gens, ncols, f) else {
        return Ok(RealizationResult {
            status: Status::FalsificationFlag,
            function: f.to_vec(),
            witness: None,
            witness_text: None,
            n: BigInt::one(),
            recheck: false,
            diagnostics: vec!["f ∈ C_ba(F) but no stable virtual real representation has Dim = f".into()],
        });
    };
    let x = intlin::vec_mat(&y, stable.basis(), ctx.real_basis.len());
    let recheck = intlin::vec_mat(&x, &dim, ncols) == f
        && ctx.table.is_f_stable(&ctx.real_basis.combine(&ctx.table, &x), &ctx.fs);
    let witness = RepVector { field: FieldTag::R, coords: x };
    Ok(RealizationResult {
        status: if recheck { Status::Realized } else { Status::FalsificationFlag },
        function: f.to_vec(),
        witness_text: Some(witness.describe(&ctx.real_basis)),
        witness: Some(witness),
        n: BigInt::one(),
        recheck,
        diagnostics: Vec::new(),
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MonotoneOptions {
    /// Accept f satisfying only condition (ii) instead of all of C_b(F).
    pub only_condition_ii: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonotoneSolution {
    pub result: RealizationResult,
    /// Unique rational solution in the rational irreducible basis.
    #[serde(serialize_with = "crate::serde_num::rats")]
    pub rational_solution: Vec<BigRational>,
    /// m·φ(e) for m the Schur gap of S and e its exponent: an N that works
    /// for every f.
    #[serde(serialize_with = "crate::serde_num::int")]
    pub uniform_bound: BigInt,
    pub divides_uniform_bound: bool,
}

/// Solves Dim V = N·f for many f over one fusion system; the inverse of
/// the cyclic detection matrix and the Dim matrix are computed once.
pub struct MonotoneSolver<'a> {
    ctx: &'a FusionContext,
    cb: ConditionSystem,
    /// inverse[i][c]: coefficient of f(C_c) in the i-th rational coordinate.
    inverse: Vec<Vec<BigRational>>,
    dim_s: intlin::IntMatrix,
    uniform_bound: BigInt,
}

impl<'a> MonotoneSolver<'a> {
    pub fn new(ctx: &'a FusionContext, opts: MonotoneOptions) -> Result<Self> {
        let mut cb = ctx.cb();
        if opts.only_condition_ii {
            cb.constraints.retain(|c| c.kind == ConditionKind::II);
        }
        let detect = ctx.rational.detection_matrix(&ctx.table, ctx.fs.subgroups())?;
        let k = detect.len();
        let a: Vec<Vec<BigRational>> =
            detect.iter().map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect()).collect();
        let mut inverse = vec![vec![BigRational::zero(); k]; k];
        for c in 0..k {
            let e: Vec<BigRational> = (0..k).map(|j| if j == c { BigRational::one() } else { BigRational::zero() }).collect();
            let col = intlin::solve_rational(&a, &e).map_err(|_| Error::consistency("cyclic detection matrix is singular"))?;
            for (i, x) in col.into_iter().enumerate() {
                inverse[i][c] = x;
            }
        }
        let gap = schur_gap_index(&schur_index_report(&ctx.table, &ctx.rational)?);
        let uniform_bound = BigInt::from(gap) * BigInt::from(euler_phi(ctx.fs.s().exponent() as u64));
        Ok(MonotoneSolver { ctx, cb, inverse, dim_s: ctx.dim_s(FieldTag::Q)?, uniform_bound })
    }

    pub fn solve(&self, f: &[BigInt]) -> Result<MonotoneSolution> {
        let ctx = self.ctx;
        check_len(ctx, f)?;
        if !ctx.f_domain.is_monotone(f) {
            return Err(Error::precondition("f is not monotone and nonnegative"));
        }
        violation_error(&self.cb, f)?;

        let fs = &ctx.fs;
        let f_at = |h: usize| f[fs.f_class_of_subgroup(h)].clone();
        let b: Vec<BigRational> =
            ctx.rational.cyclic_classes.iter().map(|&c| BigRational::from_integer(f_at(c))).collect();
        let sol: Vec<BigRational> = self
            .inverse
            .iter()
            .map(|row| row.iter().zip(&b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y))
            .collect();
        let n = intlin::common_denominator(&sol);
        let coords: Vec<BigInt> = sol.iter().map(|x| (x * BigRational::from_integer(n.clone())).to_integer()).collect();

        let mut diagnostics = Vec::new();
        let dims = intlin::vec_mat(&coords, &self.dim_s, ctx.s_domain.len());
        let dims_ok = ctx.s_domain.representatives.iter().zip(&dims).all(|(&h, d)| *d == &n * f_at(h));
        if !dims_ok {
            diagnostics.push("Dim V differs from N·f at a non-cyclic subgroup".into());
        }
        let actual = coords.iter().all(|c| !c.is_negative());
        if !actual {
            diagnostics.push("the rational solution has a negative coordinate".into());
        }
        let stable = ctx.table.is_f_stable(&ctx.rational_basis.combine(&ctx.table, &coords), fs);
        if !stable {
            diagnostics.push("the solution is not F-stable".into());
        }
        let recheck = dims_ok && actual && stable;
        let divides_uniform_bound = self.uniform_bound.is_multiple_of(&n);
        let witness = RepVector { field: FieldTag::Q, coords };
        Ok(MonotoneSolution {
            result: RealizationResult {
                status: if recheck { Status::Realized } else { Status::FalsificationFlag },
                function: f.to_vec(),
                witness_text: Some(witness.describe(&ctx.rational_basis)),
                witness: Some(witness),
                n,
                recheck,
                diagnostics,
            },
            rational_solution: sol,
            uniform_bound: self.uniform_bound.clone(),
            divides_uniform_bound,
        })
    }
}

/// N ≥ 1 and an actual F-stable rational V with Dim V = N·f, for monotone f ∈ C_b(F).
pub fn solve_monotone(ctx: &FusionContext, f: &[BigInt], opts: MonotoneOptions) -> Result<MonotoneSolution> {
    MonotoneSolver::new(ctx, opts)?.solve(f)
}

/// All functions in the lattice of `system` with 0 ≤ f ≤ f(1) ≤ max_f1,
/// monotone if asked, in lexicographic order of the (order-sorted) columns.
pub fn enumerate_functions(system: &ConditionSystem, max_f1: u64, monotone: bool) -> Vec<Vec<BigInt>> {
    let dom = &system.domain;
    let n = dom.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&c| (dom.orders[c], c));
    let depth_of: Vec<usize> = {
        let mut d = vec![0; n];
        for (i, &c) in order.iter().enumerate() {
            d[c] = i;
        }
        d
    };
    // constraints checked once their last column is assigned
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, c) in system.constraints.iter().enumerate() {
        let last = c.row.iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, _)| depth_of[j]).max();
        if let Some(d) = last {
            due[d].push(k);
        }
    }
    let mut out = Vec::new();
    let mut f = vec![0i64; n];
    enumerate_rec(system, dom, &order, &due, monotone, max_f1 as i64, 0, &mut f, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    system: &ConditionSystem,
    dom: &Domain,
    order: &[usize],
    due: &[Vec<usize>],
    monotone: bool,
    max_f1: i64,
    depth: usize,
    f: &mut [i64],
    out: &mut Vec<Vec<BigInt>>,
) {
    if depth == order.len() {
        out.push(f.iter().map(|&x| BigInt::from(x)).collect());
        return;
    }
    let col = order[depth];
    let mut hi = if depth == 0 { max_f1 } else { f[order[0]] };
    if monotone {
        for &below in &order[..depth] {
            if dom.is_below(below, col) {
                hi = hi.min(f[below]);
            }
        }
    }
    for v in 0..=hi {
        f[col] = v;
        let ok = due[depth].iter().all(|&k| {
            let c = &system.constraints[k];
            let dot: i64 = c.row.iter().zip(f.iter()).map(|(a, b)| a * b).sum();
            if c.modulus == 0 {
                dot == 0
            } else {
                dot.rem_euclid(c.modulus as i64) == 0
            }
        });
        if ok {
            enumerate_rec(system, dom, order, due, monotone, max_f1, depth + 1, f, out);
        }
    }
    f[col] = 0;
}

#[derive(Clone, Debug, Serialize)]
pub struct ExplorerReport {
    pub fusion: String,
    pub bound: u64,
    pub columns: Vec<String>,
    /// Minimal nonzero F-stable actual real representations (real coordinates).
    #[serde(serialize_with = "crate::serde_num::rows")]
    pub atoms: Vec<Vec<BigInt>>,
    pub functions: usize,
    pub realized: usize,
    /// Monotone f ∈ C_ba(F) with no actual realization with N = 1 within the bound.
    #[serde(serialize_with = "crate::serde_num::rows")]
    pub unknown: Vec<Vec<BigInt>>,
}

/// Nonnegative F-stable real coordinate vectors of degree at most `bound`.
pub fn stable_actual_vectors(ctx: &FusionContext, bound: u64) -> Vec<Vec<BigInt>> {
    let stable = ctx.stable_lattice(FieldTag::R);
    let degrees: Vec<i64> = ctx.real_basis.degrees().iter().map(|d| d.to_i64().unwrap()).collect();
    let mut out = Vec::new();
    let mut x = vec![0i64; degrees.len()];
    fn rec(i: usize, left: i64, degrees: &[i64], x: &mut [i64], stable: &IntegerLattice, out: &mut Vec<Vec<BigInt>>) {
        if i == degrees.len() {
            let v: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
            if stable.contains(&v) {
                out.push(v);
            }
            return;
        }
        let mut c = 0;
        while c * degrees[i] <= left {
            x[i] = c;
            rec(i + 1, left - c * degrees[i], degrees, x, stable, out);
            c += 1;
        }
        x[i] = 0;
    }
    rec(0, bound as i64, &degrees, &mut x, &stable, &mut out);
    out
}

/// Searches actual F-stable real representations for every monotone f ∈ C_ba(F)
/// with f(1) ≤ bound. Reports evidence only.
pub fn explore_actual(ctx: &FusionContext, bound: u64) -> Result<ExplorerReport> {
    let vectors = stable_actual_vectors(ctx, bound);
    let dim = ctx.dim_f(FieldTag::R)?;
    let ncols = ctx.f_domain.len();
    let mut dims: HashMap<Vec<BigInt>, Vec<BigInt>> = HashMap::new();
    for v in &vectors {
        dims.entry(intlin::vec_mat(v, &dim, ncols)).or_insert_with(|| v.clone());
    }
    let nonzero: Vec<&Vec<BigInt>> = vectors.iter().filter(|v| v.iter().any(|c| !c.is_zero())).collect();
    let atoms: Vec<Vec<BigInt>> = nonzero
        .iter()
        .filter(|v| !nonzero.iter().any(|u| u != *v && u.iter().zip(v.iter()).all(|(a, b)| a <= b)))
        .map(|v| (*v).clone())
        .collect();
    let functions = enumerate_functions(&ctx.cba(), bound, true);
    let unknown: Vec<Vec<BigInt>> = functions.iter().filter(|f| !dims.contains_key(*f)).cloned().collect();
    Ok(ExplorerReport {
        fusion: ctx.fs.name().to_string(),
        bound,
        columns: ctx.f_domain.labels.clone(),
        atoms,
        functions: functions.len(),
        realized: functions.len() - unknown.len(),
        unknown,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Sigma3Report {
    pub columns: Vec<String>,
    #[serde(serialize_with = "crate::serde_num::ints")]
    pub function: Vec<BigInt>,
    pub in_dp: bool,
    pub basis: Vec<String>,
    /// Coefficients of the unique rational solution on (1, σ, χ).
    #[serde(serialize_with = "crate::serde_num::rats")]
    pub solution: Vec<BigRational>,
    pub unique: bool,
    /// No N·f is the dimension function of an actual representation.
    pub no_multiple_realizable: bool,
    pub sylow: BTreeMap<u64, RealizationResult>,
}

/// f = (2,2,0) on (1, C2, C3) for Σ3 lies in D_P(Σ3) but no multiple of it
/// is realizable, while its Sylow restrictions are.
pub fn sigma3_demo() -> Result<Sigma3Report> {
    let g = group::presets::group("S3")?;
    let universe = PrimePowerUniverse::new(&g, &Limits::default())?;
    let dp = dp_system(&g, &universe);
    let dom = &dp.domain;
    let mut columns: Vec<usize> = (0..dom.len()).collect();
    columns.sort_by_key(|&c| dom.orders[c]);
    let by_order = |o: usize| -> i64 {
        match o {
            1 | 2 => 2,
            _ => 0,
        }
    };
    let f: Vec<BigInt> = (0..dom.len()).map(|c| BigInt::from(by_order(dom.orders[c]))).collect();
    let in_dp = dp.check(&f).is_empty();

    let table = CharacterTable::compute(&g)?;
    if !table.irreducibles().iter().all(|c| c.is_rational()) {
        return Err(Error::consistency("Σ3 has a non-rational irreducible character"));
    }
    // rows (1, σ, χ): trivial, sign, 2-dimensional
    let a: Vec<Vec<BigRational>> = columns
        .iter()
        .map(|&c| {
            let h = universe.family.subgroup(dom.representatives[c]);
            table
                .irreducibles()
                .iter()
                .map(|chi| table.fixed_dim(chi, h))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let b: Vec<BigRational> = columns.iter().map(|&c| BigRational::from_integer(f[c].clone())).collect();
    let (solution, unique) = match intlin::solve_rational(&a, &b) {
        Ok(s) => (s, true),
        Err(_) => (Vec::new(), false),
    };
    let no_multiple_realizable = unique && solution.iter().any(|x| x.is_negative());

    let mut sylow = BTreeMap::new();
    for p in [2u64, 3] {
        let fs = presets::fusion_from("S3", Some(&format!("auto:{p}")), Some(p))?;
        let ctx = FusionContext::new(fs)?;
        // f on F-classes of the Sylow subgroup, read off through G-classes
        let restricted: Vec<BigInt> = (0..ctx.f_domain.len())
            .map(|fc| {
                let h = ctx.fs.subgroup(ctx.f_domain.representatives[fc]);
                let members: Vec<usize> = h.members().iter().map(|&x| ctx.fs.embed(x)).collect();
                let in_g = Subgroup::from_members(g.order(), members);
                let idx = universe.family.find(&in_g).expect("p-subgroup of G");
                f[dom.column_of(idx)].clone()
            })
            .collect();
        let sol = solve_monotone(&ctx, &restricted, MonotoneOptions::default())?;
        sylow.insert(p, sol.result);
    }
    Ok(Sigma3Report {
        columns: columns.iter().map(|&c| dom.labels[c].clone()).collect(),
        function: columns.iter().map(|&c| f[c].clone()).collect(),
        in_dp,
        basis: vec!["1".into(), "sigma".into(), "chi".into()],
        solution,
        unique,
        no_multiple_realizable,
        sylow,
    })
}

/// Is p prime and does it divide |G|? Used by front ends to validate --prime.
pub fn prime_divides(order: usize, p: u64) -> bool {
    group::is_prime(p) && (order as u64).is_multiple_of(p)
}
