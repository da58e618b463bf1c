use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::LevelFilter;
use serde::Serialize;

use hecke_reptype::cartan::RootVec;
use hecke_reptype::checks::{run_suite, Suite};
use hecke_reptype::classify::{
    classify_block, classify_heckeB, classify_heckeD, classify_typeA_levelone, BlockInput,
    BlockReport, ClassifierConfig,
};
use hecke_reptype::fock::{content, enumerate_standard, tableau_stats, Bipartition, FockContext};
use hecke_reptype::gdim::{dim_matrix, nonzero_idempotents, ResidueSeq};
use hecke_reptype::orbits::{canonical_rep, dominant_reduce, is_weight, weyl_orbit_bfs};
use hecke_reptype::Error;

#[derive(Parser)]
#[command(
    name = "hecke-reptype",
    version,
    about = "Graded dimensions and representation type of level-two cyclotomic quiver Hecke algebras"
)]
struct Cli {
    /// Print debug logging to stderr.
    #[arg(short, long, global = true)]
    verbose: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the block R^Λ(β).
    Classify(ClassifyArgs),
    /// Graded dimensions e(ν′) R e(ν) over a list of idempotents.
    Dims(DimsArgs),
    /// Weight membership, canonical representative and a bounded orbit.
    Orbit(OrbitArgs),
    /// Classify every block of a Hecke algebra of type B or D.
    Blocks(BlocksArgs),
    /// List the standard tableaux of a bipartition with degrees and residues.
    Tableaux(TableauxArgs),
    /// Run the built-in fixture checks.
    Check(CheckArgs),
}

#[derive(Args)]
struct BlockArgs {
    #[arg(long)]
    ell: i64,
    /// Λ = Λ_0 + Λ_s.
    #[arg(long, default_value_t = 0)]
    s: usize,
    /// Coefficients b_0,...,b_ℓ of β.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        conflicts_with = "from_bipartition"
    )]
    beta: Option<Vec<i64>>,
    /// Use the residue content of a bipartition such as "2,1|1" as β.
    #[arg(long)]
    from_bipartition: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FieldArgs {
    #[arg(long, conflicts_with = "char_odd")]
    char2: bool,
    #[arg(long)]
    char_odd: bool,
    /// Whether λ = (−1)^{ℓ+1}.
    #[arg(long, default_value = "false", action = clap::ArgAction::Set)]
    lambda_sign: bool,
}

impl FieldArgs {
    fn config(&self) -> Result<ClassifierConfig, Error> {
        ClassifierConfig::new(self.char2, self.char_odd, self.lambda_sign)
    }
}

#[derive(Args)]
struct ClassifyArgs {
    #[command(flatten)]
    block: BlockArgs,
    #[command(flatten)]
    field: FieldArgs,
    /// Classify the level-one block R^{Λ_0}(β) instead.
    #[arg(long)]
    level_one: bool,
}

#[derive(Args)]
struct DimsArgs {
    #[command(flatten)]
    block: BlockArgs,
    /// Idempotents separated by ';', each like "0,1,0" or "010".
    #[arg(long, conflicts_with = "all")]
    idems: Option<String>,
    /// Use every nonzero idempotent of the block.
    #[arg(long)]
    all: bool,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    block: BlockArgs,
    /// Word-length bound for listing orbit members.
    #[arg(long, default_value_t = 2)]
    radius: usize,
}

#[derive(Args)]
struct BlocksArgs {
    #[arg(long)]
    e: usize,
    /// −Q = q^s.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "separated")]
    s: Option<i64>,
    /// −Q is not a power of q.
    #[arg(long)]
    separated: bool,
    #[arg(long)]
    n: usize,
    /// Type D (requires --char-odd).
    #[arg(long = "typeD", alias = "type-d")]
    type_d: bool,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableauxArgs {
    #[arg(long)]
    ell: i64,
    #[arg(long, default_value_t = 0)]
    s: usize,
    /// Bipartition such as "2,1|1".
    #[arg(long)]
    shape: String,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Fixtures,
    Oracle,
    All,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum, default_value = "fixtures")]
    suite: SuiteArg,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    NotAWeight(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotAWeight(_) => Failure::NotAWeight(e.to_string()),
            Error::InvalidRank(_)
            | Error::RankMismatch { .. }
            | Error::OutOfRange { .. }
            | Error::InvalidBipartition(_)
            | Error::LengthMismatch { .. }
            | Error::ContentMismatch { .. }
            | Error::InvalidConfig(_)
            | Error::InvalidParameters(_)
            | Error::CharacteristicTwoTypeD
            | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn print_json<T: Serialize>(value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Internal(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn context(ell: i64, s: usize, level_one: bool) -> Result<FockContext, Error> {
    if level_one {
        FockContext::level_one(ell)
    } else {
        FockContext::level_two(ell, s)
    }
}

fn resolve_beta(args: &BlockArgs, ctx: &FockContext) -> Result<RootVec, Error> {
    match (&args.beta, &args.from_bipartition) {
        (Some(b), _) => RootVec::new(ctx.rank(), b.clone()),
        (None, Some(text)) => {
            let lam: Bipartition = text.parse()?;
            if ctx.level() == hecke_reptype::fock::Level::One && !lam.component(2).is_empty() {
                return Err(Error::InvalidBipartition(
                    "level one needs an empty second component".into(),
                ));
            }
            Ok(content(ctx, &lam))
        }
        (None, None) => Err(Error::Parse(
            "one of --beta or --from-bipartition is required".into(),
        )),
    }
}

fn print_report(r: &BlockReport) {
    match &r.input {
        BlockInput::LevelTwo { lambda, beta, .. } => {
            println!(
                "Lambda = Lambda_{} + Lambda_{}, beta = {beta}",
                lambda[0], lambda[1]
            )
        }
        BlockInput::LevelOne { beta, .. } => println!("Lambda = Lambda_0, beta = {beta}"),
        BlockInput::Separated { beta1, beta2, .. } => println!("blocks {beta1} (x) {beta2}"),
    }
    if let Some(c) = &r.canonical {
        println!("  canonical: {c}");
    }
    println!("  type: {}", r.rep_type.tag);
    if let Some(b) = &r.rep_type.structure {
        println!("  {}", b.description);
    }
    if let Some(q) = &r.quiver {
        let idems: Vec<String> = q.idempotents.iter().map(|e| format!("e{e}")).collect();
        println!(
            "  quiver on {}: loops {:?}, arrows {:?}, wild flag {}",
            idems.join(", "),
            q.bound.loops,
            q.bound.arrows,
            q.bound.wild
        );
    }
    for n in &r.notes {
        println!("  note: {n}");
    }
}

fn cmd_classify(a: &ClassifyArgs) -> Outcome {
    let cfg = a.field.config()?;
    let ctx = context(a.block.ell, a.block.s, a.level_one)?;
    let beta = resolve_beta(&a.block, &ctx)?;
    let report = if a.level_one {
        BlockReport {
            input: BlockInput::LevelOne {
                ell: ctx.ell(),
                beta: beta.clone(),
            },
            hecke: None,
            canonical: None,
            rep_type: classify_typeA_levelone(&ctx, &beta)?,
            quiver: None,
            notes: Vec::new(),
        }
    } else {
        classify_block(&ctx, &beta, &cfg)?
    };
    if a.block.json {
        print_json(&report)
    } else {
        print_report(&report);
        Ok(())
    }
}

fn cmd_dims(a: &DimsArgs) -> Outcome {
    let ctx = context(a.block.ell, a.block.s, false)?;
    let beta = resolve_beta(&a.block, &ctx)?;
    let idems = match &a.idems {
        Some(text) => text
            .split(';')
            .filter(|t| !t.trim().is_empty())
            .map(|t| ResidueSeq::parse(ctx.rank(), t))
            .collect::<Result<Vec<_>, _>>()?,
        None if a.all || beta.is_zero() => nonzero_idempotents(&ctx, &beta),
        None => return Err(Failure::Usage("give --idems or --all".into())),
    };
    if !is_weight(&ctx, &beta)? {
        return Err(Failure::NotAWeight(format!(
            "Lambda - {beta} is not a weight"
        )));
    }
    let m = dim_matrix(&ctx, &beta, &idems)?;
    if a.block.json {
        print_json(&m)
    } else {
        print!("{m}");
        Ok(())
    }
}

#[derive(Serialize)]
struct OrbitOutput {
    beta: RootVec,
    is_weight: bool,
    dominant: RootVec,
    canonical: Option<hecke_reptype::orbits::CanonicalRep>,
    radius: usize,
    orbit: Vec<RootVec>,
}

fn cmd_orbit(a: &OrbitArgs) -> Outcome {
    let ctx = context(a.block.ell, a.block.s, false)?;
    let beta = resolve_beta(&a.block, &ctx)?;
    let weight = is_weight(&ctx, &beta)?;
    let out = OrbitOutput {
        beta: beta.clone(),
        is_weight: weight,
        dominant: dominant_reduce(&ctx, &beta)?,
        canonical: if weight {
            Some(canonical_rep(&ctx, &beta)?)
        } else {
            None
        },
        radius: a.radius,
        orbit: weyl_orbit_bfs(&ctx, &beta, a.radius)?.into_iter().collect(),
    };
    if a.block.json {
        print_json(&out)?;
    } else {
        println!("beta = {}", out.beta);
        println!("dominant reduction: {}", out.dominant);
        match &out.canonical {
            Some(c) => println!("canonical: {c}"),
            None => println!("not a weight"),
        }
        println!("orbit members within {} reflections:", out.radius);
        for b in &out.orbit {
            println!("  {b}");
        }
    }
    if weight {
        Ok(())
    } else {
        Err(Failure::NotAWeight(format!(
            "Lambda - {beta} is not a weight"
        )))
    }
}

fn cmd_blocks(a: &BlocksArgs) -> Outcome {
    let cfg = a.field.config()?;
    let reports = if a.type_d {
        if a.s.is_some() || a.separated {
            return Err(Failure::Usage(
                "type D fixes Q = 1; drop --s/--separated".into(),
            ));
        }
        classify_heckeD(a.e, a.n, &cfg)?
    } else {
        if a.s.is_none() && !a.separated {
            return Err(Failure::Usage("give --s or --separated".into()));
        }
        classify_heckeB(a.e, a.s, a.n, &cfg)?
    };
    if a.json {
        return print_json(&reports);
    }
    for r in &reports {
        let label = match &r.input {
            BlockInput::LevelTwo { beta, .. } | BlockInput::LevelOne { beta, .. } => {
                format!("{beta}")
            }
            BlockInput::Separated { beta1, beta2, .. } => format!("{beta1} (x) {beta2}"),
        };
        let canon = r
            .canonical
            .map(|c| c.to_string())
            .unwrap_or_else(|| "-".into());
        println!("{label}  {canon}  {}", r.rep_type);
    }
    Ok(())
}

#[derive(Serialize)]
struct TableauRow {
    growth: hecke_reptype::fock::Bitableau,
    degree: i64,
    residues: Vec<usize>,
}

fn cmd_tableaux(a: &TableauxArgs) -> Outcome {
    let ctx = context(a.ell, a.s, false)?;
    let lam: Bipartition = a.shape.parse()?;
    let mut rows = Vec::new();
    for t in enumerate_standard(&ctx, &lam) {
        let (degree, res) = tableau_stats(&ctx, &t)?;
        rows.push(TableauRow {
            growth: t,
            degree,
            residues: res.iter().map(|r| r.value()).collect(),
        });
    }
    if a.json {
        return print_json(&rows);
    }
    for r in &rows {
        let nodes: Vec<String> = r
            .growth
            .growth()
            .iter()
            .map(|x| format!("({},{},{})", x.component, x.row, x.col))
            .collect();
        let res: Vec<String> = r.residues.iter().map(usize::to_string).collect();
        println!(
            "deg {:>3}  res ({})  {}",
            r.degree,
            res.join(","),
            nodes.join(" ")
        );
    }
    println!("{} standard tableaux", rows.len());
    Ok(())
}

fn cmd_check(a: &CheckArgs) -> Outcome {
    let suite = match a.suite {
        SuiteArg::Fixtures => Suite::Fixtures,
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::All => Suite::All,
    };
    let results = run_suite(suite);
    if a.json {
        print_json(&results)?;
    } else {
        for c in &results {
            let status = if c.passed { "PASS" } else { "FAIL" };
            println!("{} {status}: {} ({})", c.id, c.title, c.detail);
        }
    }
    let failed: Vec<&str> = results
        .iter()
        .filter(|c| !c.passed)
        .map(|c| c.id.as_str())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Internal(format!("failed: {}", failed.join(", "))))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    env_logger::Builder::new()
        .filter_level(if cli.verbose {
            LevelFilter::Debug
        } else {
            LevelFilter::Warn
        })
        .init();
    let outcome = match &cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Dims(a) => cmd_dims(a),
        Command::Orbit(a) => cmd_orbit(a),
        Command::Blocks(a) => cmd_blocks(a),
        Command::Tableaux(a) => cmd_tableaux(a),
        Command::Check(a) => cmd_check(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::NotAWeight(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
