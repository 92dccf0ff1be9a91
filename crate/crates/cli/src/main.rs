//! Command-line front end: `verify` runs the closed-form-versus-oracle
//! suites, `emit` writes crystal graphs, minor tables, triangle tables and
//! rectification traces. Emitted output is byte-identical for identical
//! configuration.

use clap::{Args, Parser, Subcommand, ValueEnum};
use crystal_forge::laurent;
use crystal_forge::monomial::{generate_component, MonomialElt, Sign, DEFAULT_CAP};
use crystal_forge::report::Report;
use crystal_forge::root_data::{Family, LieType};
use crystal_forge::tableaux::{
    rectify, triangle_monomial, triangle_monomial_bar, ColumnTableau, Triangle,
};
use crystal_forge::verify;
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "crystal-forge", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites (closed forms against independent oracles).
    Verify(VerifyArgs),
    /// Emit crystal graphs, minor tables, triangle tables or rectification
    /// traces.
    #[command(subcommand)]
    Emit(EmitCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    A,
    B,
    C,
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::A => Family::A,
            FamilyArg::B => Family::B,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "type", ignore_case = true)]
    family: Option<FamilyArg>,
    #[arg(long)]
    rank: Option<usize>,
    /// minors | del1 | xi | rect | spin-example | triangles | duality |
    /// decoration | verma | trop | mono | all
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    /// Seed for the sampled checks; the CRYSTAL_FORGE_SEED environment
    /// variable overrides it.
    #[arg(long, default_value_t = 20260809)]
    seed: u64,
    /// Number of worker threads for independent suites.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum EmitCommand {
    /// Crystal graph of the monomial component of a highest (or lowest)
    /// monomial.
    Crystal(CrystalArgs),
    /// A single minor in canonical textual form.
    Minor(MinorArgs),
    /// Rectification trace of an extended column.
    Rect(RectArgs),
    /// The triangle table with labels and both monomial families.
    Triangles(TrianglesArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct CrystalArgs {
    #[arg(long = "type", ignore_case = true)]
    family: FamilyArg,
    #[arg(long)]
    rank: usize,
    /// Seed monomial, e.g. "c[1,0]" or "c[2,1]/c[1,2]".
    #[arg(long)]
    highest: String,
    #[arg(long, default_value = "forward")]
    sign: String,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Expand from a non-extremal seed as well.
    #[arg(long, default_value_t = false)]
    force: bool,
    #[arg(long, value_enum, default_value = "dot")]
    format: GraphFormat,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MinorSideArg {
    /// closed form of the left family
    LeftClosed,
    /// oracle value of the left family
    LeftOracle,
    /// closed form of the right (positive inverse) family
    RightClosed,
    /// oracle value of the right family
    RightOracle,
}

#[derive(Args)]
struct MinorArgs {
    #[arg(long = "type", ignore_case = true)]
    family: FamilyArg,
    #[arg(long)]
    rank: usize,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum)]
    side: MinorSideArg,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct RectArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated letters, negative for barred (e.g. 1,2,-2,-1).
    #[arg(long)]
    column: String,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct TrianglesArgs {
    #[arg(long = "type", ignore_case = true)]
    family: FamilyArg,
    #[arg(long)]
    rank: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

fn write_out(path: &Option<std::path::PathBuf>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn lie_of(family: Option<FamilyArg>, rank: Option<usize>) -> Result<Option<LieType>, String> {
    match (family, rank) {
        (Some(f), Some(r)) => LieType::new(f.into(), r)
            .map(Some)
            .map_err(|e| e.to_string()),
        (None, None) => Ok(None),
        _ => Err("--type and --rank must be given together".into()),
    }
}

fn applicable_suites(lie: Option<LieType>) -> Vec<&'static str> {
    let mut suites = vec!["del1", "minors", "mono", "decoration", "verma", "duality", "trop"];
    if let Some(l) = lie {
        match l.family {
            Family::A => {}
            Family::C => {
                suites.push("xi");
                suites.push("rect");
            }
            Family::B | Family::D => {
                suites.push("xi");
                suites.push("triangles");
            }
        }
    } else {
        suites = vec!["spin-example"];
    }
    suites
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let lie = lie_of(args.family, args.rank)?;
    let seed = std::env::var("CRYSTAL_FORGE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(args.seed);
    let suites: Vec<String> = if args.suite == "all" {
        applicable_suites(lie).into_iter().map(String::from).collect()
    } else {
        vec![args.suite.clone()]
    };
    let jobs = args.jobs.max(1);
    let mut checks = Vec::new();
    if jobs == 1 || suites.len() == 1 {
        for s in &suites {
            let batch = verify::run_suite(s, lie, seed)
                .ok_or_else(|| format!("unknown suite '{s}' (or unsupported type for it)"))?;
            checks.extend(batch);
        }
    } else {
        let results = std::thread::scope(|scope| {
            let handles: Vec<_> = suites
                .iter()
                .map(|s| {
                    let s = s.clone();
                    scope.spawn(move || (s.clone(), verify::run_suite(&s, lie, seed)))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker")).collect::<Vec<_>>()
        });
        for (name, batch) in results {
            checks.extend(
                batch.ok_or_else(|| format!("unknown suite '{name}' (or unsupported type for it)"))?,
            );
        }
    }
    // canonical report order regardless of schedule
    checks.sort_by(|a, b| (&a.lie, &a.family).cmp(&(&b.lie, &b.family)));
    let report = Report::new(checks);
    let body = match args.format {
        ReportFormat::Text => report.to_text(),
        ReportFormat::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
    };
    write_out(&args.out, &body)?;
    Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn parse_monomial(s: &str) -> Result<MonomialElt, String> {
    let f = laurent::parse(s).map_err(|e| e.to_string())?;
    MonomialElt::from_rational(&f)
        .ok_or_else(|| "seed must be a single monomial with coefficient 1".into())
}

fn cmd_emit_crystal(args: &CrystalArgs) -> Result<ExitCode, String> {
    let lie = LieType::new(args.family.into(), args.rank).map_err(|e| e.to_string())?;
    let sign = match args.sign.as_str() {
        "forward" => Sign::forward(lie.rank),
        "reverse" => Sign::reverse(lie.rank),
        other => return Err(format!("unknown sign '{other}' (forward|reverse)")),
    };
    let seed = parse_monomial(&args.highest)?;
    let graph = generate_component(lie, &sign, &seed, args.cap, args.force)
        .map_err(|e| e.to_string())?;
    let body = match args.format {
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Json => serde_json::to_string_pretty(&graph.to_json()).unwrap() + "\n",
    };
    write_out(&args.out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_emit_minor(args: &MinorArgs) -> Result<ExitCode, String> {
    use crystal_forge::minors::{closed_form_minor, oracle_minor_side, MinorSide};
    use crystal_forge::rep::Factorization;
    let lie = LieType::new(args.family.into(), args.rank).map_err(|e| e.to_string())?;
    if args.k < 1 || args.k > lie.rank {
        return Err(format!("k = {} out of range for {lie}", args.k));
    }
    let (side, closed) = match args.side {
        MinorSideArg::LeftClosed => (MinorSide::Left, true),
        MinorSideArg::LeftOracle => (MinorSide::Left, false),
        MinorSideArg::RightClosed => (MinorSide::Right, true),
        MinorSideArg::RightOracle => (MinorSide::Right, false),
    };
    let value = if closed {
        closed_form_minor(lie, args.k, side).map_err(|e| e.to_string())?
    } else {
        let fact = Factorization::standard(lie);
        oracle_minor_side(lie, args.k, side, &fact).map_err(|e| e.to_string())?
    };
    let body = match args.format {
        ReportFormat::Text => format!("{value}\n"),
        ReportFormat::Json => {
            serde_json::to_string_pretty(&serde_json::json!({
                "schema": "v1",
                "type": lie.to_string(),
                "k": args.k,
                "side": format!("{:?}", side),
                "value": value.to_string(),
                "terms": value.num_terms(),
            }))
            .unwrap()
                + "\n"
        }
    };
    write_out(&args.out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_emit_rect(args: &RectArgs) -> Result<ExitCode, String> {
    let letters: Result<Vec<i64>, _> =
        args.column.split(',').map(|s| s.trim().parse::<i64>()).collect();
    let letters = letters.map_err(|e| format!("bad column: {e}"))?;
    let column = ColumnTableau::from_letters(args.n, &letters).map_err(|e| e.to_string())?;
    let trace = rectify(&column).map_err(|e| e.to_string())?;
    let body = match args.format {
        ReportFormat::Text => {
            let mut s = String::new();
            s.push_str(&format!("input:  {column}\n"));
            s.push_str(&format!(
                "trace:  {}\n",
                trace
                    .steps
                    .iter()
                    .map(|i| format!("tau_{i}"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
            for (step, inter) in trace.steps.iter().zip(&trace.intermediates) {
                s.push_str(&format!("  tau_{step} -> {inter}\n"));
            }
            s.push_str(&format!("result: {}\n", trace.result));
            s
        }
        ReportFormat::Json => {
            serde_json::to_string_pretty(&serde_json::json!({
                "schema": "v1",
                "n": args.n,
                "input": column.letters(),
                "steps": trace.steps,
                "intermediates": trace.intermediates.iter().map(|c| c.letters()).collect::<Vec<_>>(),
                "levels": trace.levels,
                "result": trace.result.letters(),
            }))
            .unwrap()
                + "\n"
        }
    };
    write_out(&args.out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_emit_triangles(args: &TrianglesArgs) -> Result<ExitCode, String> {
    let lie = LieType::new(args.family.into(), args.rank).map_err(|e| e.to_string())?;
    if !matches!(lie.family, Family::B | Family::D) {
        return Err("triangles exist for types B and D".into());
    }
    let all = Triangle::all(lie);
    let body = match args.format {
        ReportFormat::Text => {
            let mut s = String::new();
            for t in &all {
                s.push_str(&format!(
                    "{}  label={:?}  m={}  mbar={}\n",
                    t,
                    t.label,
                    triangle_monomial(t),
                    triangle_monomial_bar(t)
                ));
            }
            s
        }
        ReportFormat::Json => {
            serde_json::to_string_pretty(&serde_json::json!({
                "schema": "v1",
                "type": lie.to_string(),
                "triangles": all.iter().map(|t| serde_json::json!({
                    "entries": t.entries(),
                    "label": t.label,
                    "monomial": triangle_monomial(t).to_string(),
                    "barred": triangle_monomial_bar(t).to_string(),
                    "weight": t.weight(),
                })).collect::<Vec<_>>(),
            }))
            .unwrap()
                + "\n"
        }
    };
    write_out(&args.out, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Emit(EmitCommand::Crystal(args)) => cmd_emit_crystal(args),
        Command::Emit(EmitCommand::Minor(args)) => cmd_emit_minor(args),
        Command::Emit(EmitCommand::Rect(args)) => cmd_emit_rect(args),
        Command::Emit(EmitCommand::Triangles(args)) => cmd_emit_triangles(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
