//! One function per command; each returns a serializable result.

use anyhow::{bail, Result};
use fusiondim::bisets::action::{act_on_superclass, f_to_s_classes, integers_to_rationals, s_to_f_classes};
use fusiondim::bisets::{group_as_biset, is_characteristic, BisetElement};
use fusiondim::characters::{frobenius_schur, real_irreducibles};
use fusiondim::context::FusionContext;
use fusiondim::fusion::FusionSystem;
use fusiondim::group::{FiniteGroup, Limits, SubgroupClassification};
use fusiondim::intlin::IntegerLattice;
use fusiondim::rational_reps::{schur_gap_index, schur_index_report};
use fusiondim::realize::{self, MonotoneOptions, Status};
use fusiondim::serde_num::rat_string;
use fusiondim::superclass::{
    borel_smith_system, cba_system, dp_system, ConditionSystem, Domain, DomainKind, PrimePowerUniverse,
};
use fusiondim::Error;
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::input::FunctionFile;
use crate::report::{Outcome, Table};

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn int_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| strings(r)).collect()
}

fn row_table(columns: &[String], rows: &[Vec<BigInt>]) -> Table {
    let mut t = Table::new(columns.to_vec());
    for r in int_rows(rows) {
        t.push(r);
    }
    t
}

pub fn group_info(g: &FiniteGroup) -> Result<Outcome> {
    let subs = SubgroupClassification::enumerate(g, &Limits::default())?;
    let classes = fusiondim::group::ConjugacyClasses::compute(g);
    let element_classes: Vec<Value> = (0..classes.len())
        .map(|c| {
            let r = classes.representative(c);
            json!({
                "label": classes.label(c),
                "size": classes.size(c),
                "order": g.element_order(r),
                "representative": g.element(r).cycle_string(),
            })
        })
        .collect();
    let subgroup_classes: Vec<Value> = subs
        .classes()
        .iter()
        .map(|c| json!({ "label": c.label, "order": c.order, "size": c.members.len() }))
        .collect();
    let mut t = Table::new(vec!["subgroup_class".into(), "order".into(), "conjugates".into()]);
    for c in subs.classes() {
        t.push(vec![c.label.clone(), c.order.to_string(), c.members.len().to_string()]);
    }
    Ok(Outcome::new(json!({
        "name": g.name(),
        "degree": g.degree(),
        "order": g.order(),
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "prime_power_base": g.prime_power_base(),
        "generators": g.generators().iter().map(|p| p.cycle_string()).collect::<Vec<_>>(),
        "element_classes": element_classes,
        "subgroup_classes": subgroup_classes,
    }))?
    .with_table(t))
}

fn saturation_json(fs: &FusionSystem) -> Value {
    json!({ "sylow_in_ambient": fs.is_sylow(), "verdict": fs.saturation() })
}

pub fn fusion_build(fs: &FusionSystem) -> Result<Outcome> {
    let subs = fs.subgroups();
    let f_classes: Vec<Value> = (0..fs.f_classes().len())
        .map(|fc| {
            let members: Vec<&str> = fs.f_classes()[fc].iter().map(|&c| subs.class(c).label.as_str()).collect();
            json!({ "label": fs.f_class_label(fc), "order": subs.subgroup(fs.f_class_representative(fc)).order(), "s_classes": members })
        })
        .collect();
    let ecl = fs.element_classes();
    let element_f_classes: Vec<Vec<&str>> = fs
        .element_f_classes()
        .iter()
        .map(|xs| {
            let mut labels: Vec<&str> = xs.iter().map(|&x| ecl.label(ecl.class_of(x))).collect();
            labels.dedup();
            labels
        })
        .collect();
    let mut t = Table::new(vec!["s_class".into(), "order".into(), "f_class".into()]);
    for (c, class) in subs.classes().iter().enumerate() {
        t.push(vec![class.label.clone(), class.order.to_string(), fs.f_class_label(fs.f_class_of_sclass(c)).into()]);
    }
    Ok(Outcome::new(json!({
        "fusion": fs.name(),
        "ambient": fs.ambient().name(),
        "ambient_order": fs.ambient().order(),
        "prime": fs.prime(),
        "s_order": fs.s().order(),
        "trivial_fusion": fs.is_trivial_fusion(),
        "s_subgroup_classes": subs.classes().len(),
        "f_subgroup_classes": f_classes,
        "element_f_classes": element_f_classes,
        "saturation": saturation_json(fs),
    }))?
    .with_table(t))
}

pub fn fusion_saturation(fs: &FusionSystem) -> Result<Outcome> {
    let mut out = saturation_json(fs);
    out["fusion"] = json!(fs.name());
    Outcome::new(out)
}

pub fn characters_table(ctx: &FusionContext) -> Result<Outcome> {
    let table = &ctx.table;
    let classes = table.classes();
    let irreducibles: Vec<Value> = (0..table.len())
        .map(|i| {
            let chi = table.irreducible(i);
            Ok(json!({
                "label": table.label(i),
                "degree": table.degree(i).to_string(),
                "indicator": frobenius_schur(table, chi)?,
                "values": chi.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            }))
        })
        .collect::<fusiondim::Result<_>>()?;
    let real: Vec<Value> = real_irreducibles(table)?
        .iter()
        .zip(&ctx.real_basis.labels)
        .map(|(r, l)| {
            json!({
                "label": l,
                "kind": r.kind,
                "constituents": r.constituents.iter().map(|&i| table.label(i)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let rational: Vec<Value> = (0..ctx.rational.len())
        .map(|i| {
            json!({
                "label": ctx.rational.label(i),
                "degree": ctx.rational.degree(i).to_string(),
                "construction": ctx.rational.provenance[i],
            })
        })
        .collect();
    let schur = schur_index_report(table, &ctx.rational)?;
    let mut header = vec!["character".to_string()];
    header.extend(classes.labels().iter().cloned());
    let mut t = Table::new(header);
    for i in 0..table.len() {
        let mut row = vec![table.label(i)];
        row.extend(table.irreducible(i).values.iter().map(|v| v.to_string()));
        t.push(row);
    }
    Ok(Outcome::new(json!({
        "group": table.group().name(),
        "conductor": table.conductor(),
        "classes": classes.labels(),
        "class_sizes": (0..classes.len()).map(|c| classes.size(c)).collect::<Vec<_>>(),
        "irreducibles": irreducibles,
        "real_basis": real,
        "rational_basis": rational,
        "schur": schur,
        "schur_gap_index": schur_gap_index(&schur),
    }))?
    .with_table(t))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum LatticeKind {
    /// All super class functions on F-classes.
    #[value(name = "C")]
    C,
    /// Borel-Smith conditions (i)-(iii).
    #[value(name = "Cb")]
    Cb,
    /// Borel-Smith conditions plus the fusion Artin condition.
    #[value(name = "Cba")]
    Cba,
    /// Functions on prime-power subgroups of the ambient group, conditions (i)-(iv).
    #[value(name = "DP")]
    Dp,
}

fn system_for(fs: &FusionSystem, kind: LatticeKind) -> Result<ConditionSystem> {
    Ok(match kind {
        LatticeKind::C => ConditionSystem::unconstrained(Domain::f_classes(fs)),
        LatticeKind::Cb => borel_smith_system(fs, Domain::f_classes(fs)),
        LatticeKind::Cba => cba_system(fs, false),
        LatticeKind::Dp => {
            let universe = PrimePowerUniverse::new(fs.ambient(), &Limits::default())?;
            dp_system(fs.ambient(), &universe)
        }
    })
}

pub fn lattice(fs: &FusionSystem, kind: LatticeKind, function: Option<&FunctionFile>) -> Result<Outcome> {
    let system = system_for(fs, kind)?;
    let lat = system.lattice();
    let membership = match function {
        Some(f) => {
            let values = f.values_on(&system.domain)?;
            let violations = system.check(&values);
            Some(json!({
                "function": strings(&values),
                "member": violations.is_empty(),
                "lattice_contains": lat.contains(&values),
                "violations": violations,
            }))
        }
        None => None,
    };
    let index = IntegerLattice::full(system.domain.len()).index_of(&lat);
    Ok(Outcome::new(json!({
        "fusion": fs.name(),
        "lattice": format!("{kind:?}"),
        "domain": system.domain.kind,
        "columns": system.domain.labels,
        "orders": system.domain.orders,
        "constraints": system.constraints,
        "rank": lat.rank(),
        "index_in_full": index.map(|i| i.to_string()),
        "basis": int_rows(lat.basis()),
        "membership": membership,
    }))?
    .with_table(row_table(&system.domain.labels, lat.basis())))
}

fn terms_json(alg: &fusiondim::bisets::BisetAlgebra, x: &BisetElement) -> Vec<Value> {
    x.describe(alg).into_iter().map(|(t, c)| json!({ "type": t, "coefficient": c })).collect()
}

fn terms_table(alg: &fusiondim::bisets::BisetAlgebra, x: &BisetElement) -> Table {
    let mut t = Table::new(vec!["type".into(), "coefficient".into()]);
    for (ty, c) in x.describe(alg) {
        t.push(vec![ty, c]);
    }
    t
}

fn require_saturated(fs: &FusionSystem) -> Result<()> {
    if !fs.is_saturated() {
        bail!(Error::precondition(format!("{} is not saturated", fs.name())));
    }
    Ok(())
}

pub fn omega(ctx: &FusionContext) -> Result<Outcome> {
    require_saturated(&ctx.fs)?;
    let report = ctx.omega()?;
    let alg = &ctx.alg;
    let w = &report.omega;
    let idempotent = w.compose(alg, w) == *w;
    let verdict = is_characteristic(&ctx.fs, alg, w);
    let sums: Vec<Value> = w
        .coefficient_sums(alg)
        .iter()
        .map(|(&c, s)| json!({ "class": alg.subgroups().class(c).label, "sum": rat_string(s) }))
        .collect();
    let ok = idempotent && verdict.holds() && w.coefficient_sums_ok(alg);
    Ok(Outcome::new(json!({
        "fusion": ctx.fs.name(),
        "terms": terms_json(alg, w),
        "power": report.power,
        "precision_bits": report.precision,
        "idempotent": idempotent,
        "characteristic": verdict,
        "relative_size": rat_string(&w.relative_size(alg)),
        "coefficient_sums": sums,
    }))?
    .with_table(terms_table(alg, w))
    .falsified_if(!ok))
}

pub fn omega_min(ctx: &FusionContext) -> Result<Outcome> {
    require_saturated(&ctx.fs)?;
    let alg = &ctx.alg;
    let w = ctx.omega_min()?;
    let verdict = is_characteristic(&ctx.fs, alg, w);
    let g = group_as_biset(&ctx.fs, alg);
    Ok(Outcome::new(json!({
        "fusion": ctx.fs.name(),
        "terms": terms_json(alg, w),
        "actual": w.is_actual(),
        "characteristic": verdict,
        "relative_size": rat_string(&w.relative_size(alg)),
        "below_group_biset": w.le(&g),
    }))?
    .with_table(terms_table(alg, w))
    .falsified_if(!verdict.holds()))
}

/// tr_S^F f = ω_F · f on super class functions of S.
pub fn transfer(ctx: &FusionContext, f: &FunctionFile) -> Result<Outcome> {
    require_saturated(&ctx.fs)?;
    let input_s = match f.kind()? {
        DomainKind::S => integers_to_rationals(&f.values_on(&ctx.s_domain)?),
        DomainKind::F => f_to_s_classes(&ctx.fs, &integers_to_rationals(&f.values_on(&ctx.f_domain)?)),
        DomainKind::GPrimePower => bail!(Error::input("transfer takes a function on S- or F-classes")),
    };
    let w = &ctx.omega()?.omega;
    let out = act_on_superclass(&ctx.alg, w, &input_s);
    let on_f = s_to_f_classes(&ctx.fs, &out).ok();
    let stable_input = s_to_f_classes(&ctx.fs, &input_s).is_ok();
    let fixed = out == input_s;
    let mut t = Table::new(vec!["s_class".into(), "input".into(), "transfer".into()]);
    for (i, l) in ctx.s_domain.labels.iter().enumerate() {
        t.push(vec![l.clone(), rat_string(&input_s[i]), rat_string(&out[i])]);
    }
    Ok(Outcome::new(json!({
        "fusion": ctx.fs.name(),
        "columns": ctx.s_domain.labels,
        "input": input_s.iter().map(rat_string).collect::<Vec<_>>(),
        "transfer": out.iter().map(rat_string).collect::<Vec<_>>(),
        "f_columns": ctx.f_domain.labels,
        "transfer_on_f_classes": on_f.as_ref().map(|v| v.iter().map(rat_string).collect::<Vec<_>>()),
        "input_f_stable": stable_input,
        "output_f_stable": on_f.is_some(),
        "fixed": fixed,
    }))?
    .with_table(t)
    // a stable input must come back unchanged, and the output is always stable
    .falsified_if(on_f.is_none() || (stable_input && !fixed)))
}

fn f_values(ctx: &FusionContext, f: &FunctionFile) -> Result<Vec<BigInt>> {
    match f.kind()? {
        DomainKind::F => f.values_on(&ctx.f_domain),
        DomainKind::S => {
            let s = integers_to_rationals(&f.values_on(&ctx.s_domain)?);
            let on_f = s_to_f_classes(&ctx.fs, &s)?;
            Ok(on_f.iter().map(|q| q.to_integer()).collect())
        }
        DomainKind::GPrimePower => bail!(Error::input("expected a function on F-classes")),
    }
}

fn witness_table(ctx: &FusionContext, r: &realize::RealizationResult) -> Table {
    let mut t = Table::new(vec!["basis".into(), "coefficient".into()]);
    if let Some(w) = &r.witness {
        for (l, c) in ctx.basis(w.field).labels.iter().zip(&w.coords) {
            t.push(vec![l.clone(), c.to_string()]);
        }
    }
    t
}

pub fn realize_virtual(ctx: &FusionContext, f: &FunctionFile) -> Result<Outcome> {
    require_saturated(&ctx.fs)?;
    let values = f_values(ctx, f)?;
    let r = realize::solve_virtual(ctx, &values)?;
    let falsified = r.status == Status::FalsificationFlag;
    let t = witness_table(ctx, &r);
    Ok(Outcome::new(json!({ "fusion": ctx.fs.name(), "columns": ctx.f_domain.labels, "result": r }))?
        .with_table(t)
        .falsified_if(falsified))
}

pub fn realize_monotone(ctx: &FusionContext, f: &FunctionFile) -> Result<Outcome> {
    require_saturated(&ctx.fs)?;
    let values = f_values(ctx, f)?;
    let sol = realize::solve_monotone(ctx, &values, MonotoneOptions::default())?;
    let falsified = sol.result.status == Status::FalsificationFlag;
    let t = witness_table(ctx, &sol.result);
    Ok(Outcome::new(json!({ "fusion": ctx.fs.name(), "columns": ctx.f_domain.labels, "solution": sol }))?
        .with_table(t)
        .falsified_if(falsified))
}

fn explorer(ctx: &FusionContext, bound: u64) -> Result<realize::ExplorerReport> {
    let mut r = realize::explore_actual(ctx, bound)?;
    r.unknown.sort();
    Ok(r)
}

pub fn actual_search(ctx: &FusionContext, bound: u64) -> Result<Outcome> {
    require_saturated(&ctx.fs)?;
    let r = explorer(ctx, bound)?;
    let t = row_table(&r.columns, &r.unknown);
    Outcome::new(json!({ "report": r, "evidence_only": true })).map(|o| o.with_table(t))
}

pub fn lattice_equality(ctx: &FusionContext) -> Result<Outcome> {
    let r = realize::lattice_equality_check(ctx)?;
    let falsified = !(r.contained && r.equal);
    let mut t = Table::new(std::iter::once("lattice".to_string()).chain(r.columns.iter().cloned()).collect());
    for (name, rows) in [("image", &r.image), ("cba", &r.cba)] {
        for row in rows {
            t.push(std::iter::once(name.to_string()).chain(strings(row)).collect());
        }
    }
    Ok(Outcome::new(r)?.with_table(t).falsified_if(falsified))
}

pub fn p_local(ctx: &FusionContext) -> Result<Outcome> {
    require_saturated(&ctx.fs)?;
    let r = realize::p_local_index(ctx)?;
    let falsified = !r.coprime_to_p;
    Ok(Outcome::new(r)?.falsified_if(falsified))
}

/// Fusion systems whose actual realizations are searched by default.
pub const EXPLORER_DEFAULTS: &[&str] = &["C3", "S3", "C5", "C5-semidirect-C2", "C5-semidirect-C4", "D8", "S4", "A6"];

/// `seed` rotates the order in which systems are searched; reports come back in input order.
pub fn question_explorer(contexts: &[FusionContext], bound: u64, seed: u64) -> Result<Outcome> {
    let n = contexts.len().max(1);
    let start = (seed % n as u64) as usize;
    let mut found: Vec<Option<realize::ExplorerReport>> = vec![None; contexts.len()];
    for k in 0..contexts.len() {
        let i = (start + k) % n;
        require_saturated(&contexts[i].fs)?;
        found[i] = Some(explorer(&contexts[i], bound)?);
    }
    let reports: Vec<realize::ExplorerReport> = found.into_iter().flatten().collect();
    let mut t = Table::new(vec!["fusion".into(), "functions".into(), "realized_n1".into(), "unknown".into()]);
    for r in &reports {
        t.push(vec![r.fusion.clone(), r.functions.to_string(), r.realized.to_string(), r.unknown.len().to_string()]);
    }
    let all = reports.iter().all(|r| r.unknown.is_empty());
    Outcome::new(json!({
        "bound": bound,
        "all_realized_with_n_1": all,
        "evidence_only": true,
        "systems": reports,
    }))
    .map(|o| o.with_table(t))
}
