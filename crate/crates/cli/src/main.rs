mod commands;
mod input;
mod report;
mod suite;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fusiondim::context::FusionContext;
use fusiondim::fusion::presets;
use fusiondim::Error;
use serde_json::{json, Value};

use commands::LatticeKind;
use input::{load_fusion, load_function, load_group, FunctionFile};
use report::{Envelope, Outcome};

/// Representation rings, dimension functions and Borel-Smith lattices of fusion systems.
#[derive(Parser, Debug)]
#[command(name = "fusiondim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Args, Debug, Clone)]
struct Options {
    /// Group: `preset:NAME` or a JSON file {"name", "degree", "generators"}.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Sylow selector: `auto`, `auto:p`, or a subgroup class label.
    #[arg(long, global = true)]
    sylow: Option<String>,
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Fusion system: `preset:NAME`, or a group file combined with --sylow/--prime.
    #[arg(long, global = true)]
    fusion: Option<String>,
    /// Super class function: a JSON file {"domain": "F"|"S"|"G", "values": {label: n}} or inline JSON.
    #[arg(long, global = true)]
    function: Option<String>,
    /// Bound on f(1) for searches.
    #[arg(long, global = true, default_value_t = 12)]
    bound: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Affects the order of exploration only, never results.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group structure: classes of elements and subgroups.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    Fusion {
        #[command(subcommand)]
        cmd: FusionCmd,
    },
    Characters {
        #[command(subcommand)]
        cmd: CharactersCmd,
    },
    /// Lattice of super class functions: C, Cb, Cba (on F-classes) or DP (on the ambient group).
    Lattice {
        #[arg(value_enum)]
        kind: LatticeKind,
    },
    /// The characteristic idempotent ω_F.
    Omega,
    /// The minimal actual characteristic biset Ω_F.
    OmegaMin,
    /// Apply tr_S^F = ω_F to a super class function.
    Transfer,
    Realize {
        #[command(subcommand)]
        cmd: RealizeCmd,
    },
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand, Debug)]
enum GroupCmd {
    Info,
}

#[derive(Subcommand, Debug)]
enum FusionCmd {
    /// Fusion classes of subgroups and elements, with the saturation verdict.
    Build,
    Saturation,
}

#[derive(Subcommand, Debug)]
enum CharactersCmd {
    /// Complex, real and rational irreducible characters of S.
    Table,
}

#[derive(Subcommand, Debug)]
enum RealizeCmd {
    /// F-stable virtual real representation with Dim = f.
    Virtual,
    /// Actual F-stable rational representation with Dim = N·f.
    Monotone,
    /// Which monotone functions with f(1) <= bound are Dim of actual stable real representations.
    ActualSearch,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Dim(R_R(F)) = C_ba(F) as lattices.
    #[command(name = "theorem-a")]
    LatticeEquality,
    /// [C_b(F) : Dim(R_R(F))] is finite and prime to p.
    PLocal,
    /// Search for actual realizations with N = 1 (evidence, not proof).
    #[command(name = "question-6-2")]
    ActualExplorer,
    /// Run the reference scenarios and compare with the golden files.
    #[command(name = "paper-suite")]
    ReferenceSuite {
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        /// Rewrite the golden files.
        #[arg(long)]
        bless: bool,
        /// Run one scenario only.
        #[arg(long)]
        scenario: Option<String>,
    },
}

const EXIT_ERROR: u8 = 1;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_SIZE: u8 = 4;
const EXIT_FALSIFIED: u8 = 5;
const EXIT_GOLDEN: u8 = 6;

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Precondition(_)) => EXIT_PRECONDITION,
        Some(Error::Size(_)) => EXIT_SIZE,
        _ => EXIT_ERROR,
    }
}

impl Command {
    fn name(&self) -> String {
        match self {
            Command::Group { cmd: GroupCmd::Info } => "group info".into(),
            Command::Fusion { cmd: FusionCmd::Build } => "fusion build".into(),
            Command::Fusion { cmd: FusionCmd::Saturation } => "fusion saturation".into(),
            Command::Characters { cmd: CharactersCmd::Table } => "characters table".into(),
            Command::Lattice { kind } => format!("lattice {}", kind.to_possible_value().unwrap().get_name()),
            Command::Omega => "omega".into(),
            Command::OmegaMin => "omega-min".into(),
            Command::Transfer => "transfer".into(),
            Command::Realize { cmd: RealizeCmd::Virtual } => "realize virtual".into(),
            Command::Realize { cmd: RealizeCmd::Monotone } => "realize monotone".into(),
            Command::Realize { cmd: RealizeCmd::ActualSearch } => "realize actual-search".into(),
            Command::Verify { cmd: VerifyCmd::LatticeEquality } => "verify theorem-a".into(),
            Command::Verify { cmd: VerifyCmd::PLocal } => "verify p-local".into(),
            Command::Verify { cmd: VerifyCmd::ActualExplorer } => "verify question-6-2".into(),
            Command::Verify { cmd: VerifyCmd::ReferenceSuite { .. } } => "verify paper-suite".into(),
        }
    }

    fn needs_function(&self) -> bool {
        matches!(self, Command::Transfer | Command::Realize { cmd: RealizeCmd::Virtual | RealizeCmd::Monotone })
    }

    fn uses_bound(&self) -> bool {
        matches!(
            self,
            Command::Realize { cmd: RealizeCmd::ActualSearch } | Command::Verify { cmd: VerifyCmd::ActualExplorer }
        )
    }
}

/// Everything that determines the result, for the input hash and the cache key.
fn describe_input(cmd: &Command, o: &Options, function: Option<&FunctionFile>) -> Result<Value> {
    let mut input = json!({});
    if let Some(g) = &o.group {
        input["group"] = load_group(g)?.descriptor;
    }
    if let Some(f) = &o.fusion {
        input["fusion"] = load_fusion(Some(f), None, o.sylow.as_deref(), o.prime)?.descriptor;
    }
    input["sylow"] = json!(o.sylow);
    input["prime"] = json!(o.prime);
    if let Some(f) = function {
        input["function"] = serde_json::to_value(f)?;
    }
    if cmd.uses_bound() {
        input["bound"] = json!(o.bound);
    }
    Ok(input)
}

fn context(o: &Options) -> Result<FusionContext> {
    let src = load_fusion(o.fusion.as_deref(), o.group.as_deref(), o.sylow.as_deref(), o.prime)?;
    Ok(FusionContext::new(src.fs)?)
}

fn compute(cmd: &Command, o: &Options, function: Option<&FunctionFile>) -> Result<Outcome> {
    let f = || function.ok_or_else(|| anyhow::Error::from(Error::input("this command needs --function")));
    match cmd {
        Command::Group { cmd: GroupCmd::Info } => {
            let Some(g) = &o.group else { bail!(Error::input("group info needs --group")) };
            commands::group_info(&load_group(g)?.group)
        }
        Command::Fusion { cmd } => {
            let src = load_fusion(o.fusion.as_deref(), o.group.as_deref(), o.sylow.as_deref(), o.prime)?;
            match cmd {
                FusionCmd::Build => commands::fusion_build(&src.fs),
                FusionCmd::Saturation => commands::fusion_saturation(&src.fs),
            }
        }
        Command::Lattice { kind } => {
            let src = load_fusion(o.fusion.as_deref(), o.group.as_deref(), o.sylow.as_deref(), o.prime)?;
            commands::lattice(&src.fs, *kind, function)
        }
        Command::Characters { cmd: CharactersCmd::Table } => commands::characters_table(&context(o)?),
        Command::Omega => commands::omega(&context(o)?),
        Command::OmegaMin => commands::omega_min(&context(o)?),
        Command::Transfer => commands::transfer(&context(o)?, f()?),
        Command::Realize { cmd } => {
            let ctx = context(o)?;
            match cmd {
                RealizeCmd::Virtual => commands::realize_virtual(&ctx, f()?),
                RealizeCmd::Monotone => commands::realize_monotone(&ctx, f()?),
                RealizeCmd::ActualSearch => commands::actual_search(&ctx, o.bound),
            }
        }
        Command::Verify { cmd } => match cmd {
            VerifyCmd::LatticeEquality => commands::lattice_equality(&context(o)?),
            VerifyCmd::PLocal => commands::p_local(&context(o)?),
            VerifyCmd::ActualExplorer => {
                let contexts = if o.fusion.is_some() || o.group.is_some() {
                    vec![context(o)?]
                } else {
                    commands::EXPLORER_DEFAULTS
                        .iter()
                        .map(|n| Ok(FusionContext::new(presets::fusion(n)?)?))
                        .collect::<Result<Vec<_>>>()?
                };
                commands::question_explorer(&contexts, o.bound, o.seed)
            }
            VerifyCmd::ReferenceSuite { .. } => unreachable!("handled in run"),
        },
    }
}

fn cache_path(hash: &str) -> Option<PathBuf> {
    let dir = std::env::var_os("FUSIONDIM_CACHE_DIR")?;
    Some(PathBuf::from(dir).join(format!("{hash}-{}.json", report::VERSION)))
}

fn render(outcome: &Outcome, envelope: &Envelope, format: Format) -> String {
    match format {
        Format::Json => envelope.to_json(),
        Format::Tsv => outcome.table.clone().unwrap_or_else(|| report::flatten(&outcome.result)).to_tsv(),
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let o = &cli.opts;
    let name = cli.command.name();
    if let Command::Verify { cmd: VerifyCmd::ReferenceSuite { golden_dir, bless, scenario } } = &cli.command {
        let dir = golden_dir.clone().unwrap_or_else(suite::default_golden_dir);
        let run = suite::run(&dir, *bless, scenario.as_deref())?;
        let outcome = Outcome::new(&run.summary)?;
        let envelope = Envelope::new(&name, &json!({ "scenario": scenario }), &outcome);
        report::emit(&render(&outcome, &envelope, o.format), o.output.as_deref())?;
        if run.mismatches > 0 {
            eprint!("{}", run.diffs);
            return Ok(EXIT_GOLDEN);
        }
        return Ok(0);
    }

    let function = match &o.function {
        Some(f) => Some(load_function(f)?),
        None if cli.command.needs_function() => bail!(Error::input("this command needs --function")),
        None => None,
    };
    let input = describe_input(&cli.command, o, function.as_ref())?;
    let hash = report::input_hash(&name, &input);
    let cached = cache_path(&hash).filter(|p| p.is_file());

    let (outcome, envelope) = match cached.and_then(|p| std::fs::read_to_string(p).ok()) {
        // the cache stores JSON envelopes, so TSV output is recomputed
        Some(text) if o.format == Format::Json => {
            let envelope: Envelope = serde_json::from_str(&text)?;
            let outcome = Outcome { result: envelope.result.clone(), table: None, falsified: envelope.falsified };
            (outcome, envelope)
        }
        _ => {
            let outcome = compute(&cli.command, o, function.as_ref())?;
            let envelope = Envelope::new(&name, &input, &outcome);
            if let Some(p) = cache_path(&hash) {
                if let Some(dir) = p.parent() {
                    std::fs::create_dir_all(dir)?;
                }
                std::fs::write(p, envelope.to_json())?;
            }
            (outcome, envelope)
        }
    };
    report::emit(&render(&outcome, &envelope, o.format), o.output.as_deref())?;
    Ok(if outcome.falsified { EXIT_FALSIFIED } else { 0 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
