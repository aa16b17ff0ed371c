//! gcalab: group-code algebra lab.
//!
//! Subcommands: `group-info`, `idempotents`, `code`, `verify`, `catalog`.
//! Text output is human-oriented; JSON is the stable machine interface and
//! is byte-identical across identical invocations. Exit codes: 0 ok,
//! 1 refutation or failure, 2 usage/parse error, 3 budget exhaustion
//! (with --strict) or size cap.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gcalab_core::lab::{
    default_catalog, enumerate_symmetric_idempotents, run_catalog, run_instance_checks, Catalog,
    CatalogOutcome, CheckReport, LabError, SearchStrategy, StrategyKind, TheoremId, Verdict,
};
use gcalab_core::{
    right_annihilator_dimension, AlgebraElement, FieldSpec, Group, GroupCode, GroupError,
    DEFAULT_SEARCH_BUDGET,
};

const EXIT_OK: u8 = 0;
const EXIT_FAILURE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "gcalab", version, about = "Group codes in finite group algebras: search, analysis, verification")]
struct Cli {
    /// Worker threads for internal parallelism (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    Full,
    Subgroups,
    Classes,
}

impl From<Strategy> for StrategyKind {
    fn from(s: Strategy) -> StrategyKind {
        match s {
            Strategy::Full => StrategyKind::Full,
            Strategy::Subgroups => StrategyKind::SubgroupSums,
            Strategy::Classes => StrategyKind::ClassSums,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,

    /// Write output to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Candidate/codeword cap per enumeration
    #[arg(long, env = "GCALAB_BUDGET", default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a group: order, conjugacy classes, Sylow structure, normal subgroups
    GroupInfo {
        /// Group descriptor ("S3", "C8", "D4xC3", "file:table.json")
        #[arg(long)]
        group: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Enumerate symmetric idempotents and profile the code each generates
    Idempotents {
        #[arg(long)]
        group: String,
        /// Field spec ("2", "3", "2^2", "2^2:1,1,1")
        #[arg(long)]
        field: String,
        /// Search strategy
        #[arg(long, value_enum, default_value = "full")]
        strategy: Strategy,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Analyze the right ideal generated by an element
    Code {
        #[arg(long)]
        group: String,
        #[arg(long)]
        field: String,
        /// Element literal: dense "1,0,0,0,1,1" or sparse "e:1,(123):1,(132):1"
        #[arg(long)]
        z: String,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run theorem checks on one (group, field) instance
    Verify {
        #[arg(long)]
        group: String,
        #[arg(long)]
        field: String,
        /// Comma-separated tags (T1..T11, C1..C9) or "all"
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Treat incomplete searches as failures (exit 3)
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a catalog of instances (builtin default when no path given)
    Catalog {
        /// Catalog JSON path
        path: Option<PathBuf>,
        /// Treat incomplete searches as failures (exit 3)
        #[arg(long)]
        strict: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.exit)
        }
    }
}

struct CliError {
    message: String,
    exit: u8,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError { message: message.into(), exit: EXIT_USAGE }
    }

    fn budget(message: impl Into<String>) -> CliError {
        CliError { message: message.into(), exit: EXIT_BUDGET }
    }
}

fn parse_group(s: &str) -> Result<Group, CliError> {
    match Group::from_descriptor(s) {
        Ok(g) => Ok(g),
        Err(GroupError::SizeCap { order, cap }) => {
            Err(CliError::budget(format!("group order {order} exceeds cap {cap}")))
        }
        Err(e) => {
            let path = std::path::Path::new(s);
            if s.contains('/') || s.ends_with(".json") || path.exists() {
                match gcalab_core::group::load_cayley_table_json(path) {
                    Ok(g) => Ok(g),
                    Err(GroupError::SizeCap { order, cap }) => Err(CliError::budget(format!(
                        "group order {order} exceeds cap {cap}"
                    ))),
                    Err(e) => Err(CliError::usage(e.to_string())),
                }
            } else {
                Err(CliError::usage(e.to_string()))
            }
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    FieldSpec::parse(s).map_err(|e| CliError::usage(e.to_string()))
}

fn emit(output: &OutputArgs, text: String) -> Result<(), CliError> {
    match &output.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
            f.write_all(text.as_bytes())
                .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
            Ok(())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::GroupInfo { group, output } => cmd_group_info(&group, &output),
        Command::Idempotents { group, field, strategy, budget, output } => {
            cmd_idempotents(&group, &field, strategy, budget.budget, &output)
        }
        Command::Code { group, field, z, budget, output } => {
            cmd_code(&group, &field, &z, budget.budget, &output)
        }
        Command::Verify { group, field, theorems, strict, budget, output } => {
            cmd_verify(&group, &field, &theorems, strict, budget.budget, &output)
        }
        Command::Catalog { path, strict, budget, output } => {
            cmd_catalog(path.as_deref(), strict, budget.budget, &output)
        }
    }
}

// ---------------------------------------------------------------------------
// group-info
// ---------------------------------------------------------------------------

fn cmd_group_info(descriptor: &str, output: &OutputArgs) -> Result<u8, CliError> {
    let g = parse_group(descriptor)?;
    let class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(|c| c.len()).collect();
    let mut sylow = Vec::new();
    for p in g.primes_dividing_order() {
        let subs = g.sylow_subgroups(p).map_err(|e| CliError::usage(e.to_string()))?;
        sylow.push(json!({
            "p": p,
            "subgroup_order": subs[0].order(),
            "count": subs.len(),
            "unique": subs.len() == 1,
        }));
    }
    let normal_subgroups: Option<Vec<Vec<String>>> = g
        .all_subgroups(None)
        .ok()
        .map(|subs| subs.iter().filter(|h| h.is_normal()).map(|h| h.member_labels()).collect());
    let report = json!({
        "name": g.name(),
        "order": g.order(),
        "abelian": g.is_abelian(),
        "labels": g.labels(),
        "conjugacy_class_sizes": class_sizes,
        "sylow": sylow,
        "normal_subgroups": normal_subgroups,
    });
    let text = match output.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).unwrap()),
        Format::Csv => return Err(CliError::usage("csv output applies to verify/catalog only")),
        Format::Text => {
            let mut s = String::new();
            s += &format!("group {} of order {}\n", g.name(), g.order());
            s += &format!("abelian: {}\n", g.is_abelian());
            s += &format!("elements: {}\n", g.labels().join(" "));
            s += &format!("conjugacy class sizes: {class_sizes:?}\n");
            for e in &sylow {
                s += &format!(
                    "Sylow-{}: {} subgroup(s) of order {}{}\n",
                    e["p"],
                    e["count"],
                    e["subgroup_order"],
                    if e["unique"] == json!(true) { " (unique, normal)" } else { "" }
                );
            }
            match &normal_subgroups {
                Some(subs) => {
                    s += &format!("normal subgroups: {}\n", subs.len());
                    for h in subs {
                        s += &format!("  {{{}}}\n", h.join(", "));
                    }
                }
                None => s += "normal subgroups: skipped (order above enumeration cap)\n",
            }
            s
        }
    };
    emit(output, text)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// idempotents
// ---------------------------------------------------------------------------

fn profile_json(z: &AlgebraElement, budget: u64) -> serde_json::Value {
    let code = GroupCode::right_ideal(z);
    let report = match code.report(budget) {
        Ok(r) => serde_json::to_value(&r).unwrap(),
        Err(_) => json!({
            "n": code.length(),
            "k": code.dimension(),
            "d": "skipped",
            "lcd": code.is_lcd().ok(),
            "mds": null,
            "self_adjoint": code.is_self_adjoint(),
            "hull_dim": code.hull_dimension(),
        }),
    };
    json!({
        "literal": z.to_literal(),
        "coeffs": z.coeff_reps(),
        "weight": z.weight(),
        "central": z.is_central(),
        "code": report,
    })
}

fn cmd_idempotents(
    descriptor: &str,
    field: &str,
    strategy: Strategy,
    budget: u64,
    output: &OutputArgs,
) -> Result<u8, CliError> {
    let g = parse_group(descriptor)?;
    let f = parse_field(field)?;
    let search = SearchStrategy { kind: strategy.into(), budget };
    let found = enumerate_symmetric_idempotents(&f, &g, &search).map_err(|e| match e {
        LabError::BudgetExceeded { .. } => CliError::budget(e.to_string()),
        LabError::Group(GroupError::SizeCap { .. }) => CliError::budget(e.to_string()),
        other => CliError::usage(other.to_string()),
    })?;
    let profiles: Vec<serde_json::Value> = found.iter().map(|z| profile_json(z, budget)).collect();
    let text = match output.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&profiles).unwrap()),
        Format::Csv => return Err(CliError::usage("csv output applies to verify/catalog only")),
        Format::Text => {
            let mut s = format!(
                "{} symmetric idempotent(s) in GF({})[{}]\n",
                profiles.len(),
                f.order(),
                g.name()
            );
            for p in &profiles {
                s += &format!(
                    "  z = {}  weight={} central={} code: [n={}, k={}, d={}] lcd={} mds={} self_adjoint={}\n",
                    p["literal"].as_str().unwrap(),
                    p["weight"],
                    p["central"],
                    p["code"]["n"],
                    p["code"]["k"],
                    p["code"]["d"],
                    p["code"]["lcd"],
                    p["code"]["mds"],
                    p["code"]["self_adjoint"],
                );
            }
            s
        }
    };
    emit(output, text)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// code
// ---------------------------------------------------------------------------

fn cmd_code(
    descriptor: &str,
    field: &str,
    literal: &str,
    budget: u64,
    output: &OutputArgs,
) -> Result<u8, CliError> {
    let g = parse_group(descriptor)?;
    let f = parse_field(field)?;
    let z = AlgebraElement::parse_literal(&f, &g, literal)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let code = GroupCode::right_ideal(&z);
    let report = code.report(budget).map_err(|e| CliError::budget(e.to_string()))?;
    let ann = right_annihilator_dimension(&z);
    let rank_nullity_ok = report.k + ann == report.n;
    let text = match output.format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).unwrap();
            v["annihilator_dim"] = json!(ann);
            v["rank_nullity_ok"] = json!(rank_nullity_ok);
            v["symmetric_idempotent"] = json!(z.is_symmetric_idempotent());
            format!("{}\n", serde_json::to_string_pretty(&v).unwrap())
        }
        Format::Csv => return Err(CliError::usage("csv output applies to verify/catalog only")),
        Format::Text => {
            let mut s = String::new();
            s += &format!(
                "code zKG for z = {} over GF({})[{}]\n",
                z.to_literal(),
                f.order(),
                g.name()
            );
            s += &format!(
                "  [n={}, k={}, d={}] lcd={} mds={} self_adjoint={} hull_dim={}\n",
                report.n, report.k, report.d, report.lcd, report.mds, report.self_adjoint,
                report.hull_dim
            );
            s += &format!("  symmetric idempotent: {}\n", z.is_symmetric_idempotent());
            s += &format!(
                "  rank-nullity audit: dim(KG) = {} = {} + {} (dim zKG + right annihilator) -> {}\n",
                report.n,
                report.k,
                ann,
                if rank_nullity_ok { "ok" } else { "VIOLATED" }
            );
            s
        }
    };
    emit(output, text)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// verify / catalog
// ---------------------------------------------------------------------------

fn parse_theorems(s: &str) -> Result<Vec<TheoremId>, CliError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    s.split(',')
        .map(|t| t.parse::<TheoremId>().map_err(|e| CliError::usage(e.to_string())))
        .collect()
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn reports_text(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(reports).unwrap()),
        Format::Csv => {
            let mut s = String::from("instance,theorem,verdict\n");
            for r in reports {
                let instance = format!("{}/{}", r.instance.group, r.instance.field);
                s += &format!("{},{},{}\n", csv_escape(&instance), r.theorem, r.verdict);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                s += &format!(
                    "{:<12} {:<4} {:<16} ({:.1} ms)\n",
                    format!("{}/{}", r.instance.group, r.instance.field),
                    r.theorem.to_string(),
                    r.verdict.to_string(),
                    r.elapsed.as_secs_f64() * 1e3,
                );
                if r.verdict == Verdict::Fails {
                    s += &format!("    evidence: {}\n", r.evidence);
                }
            }
            let fails = reports.iter().filter(|r| r.verdict == Verdict::Fails).count();
            let holds = reports.iter().filter(|r| r.verdict == Verdict::Holds).count();
            let vacuous = reports.iter().filter(|r| r.verdict == Verdict::Vacuous).count();
            let budget = reports.iter().filter(|r| r.verdict == Verdict::BudgetExceeded).count();
            s += &format!(
                "{} checks: {holds} holds, {vacuous} vacuous, {fails} fails, {budget} budget-exceeded\n",
                reports.len()
            );
            s
        }
    }
}

fn is_partial(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| {
        r.verdict == Verdict::BudgetExceeded
            || r.evidence["search"]["complete"] == json!(false)
            || r.evidence["witnesses_budget_skipped"].as_u64().unwrap_or(0) > 0
    })
}

fn outcome_exit(outcome: &CatalogOutcome, strict: bool) -> u8 {
    if !outcome.aggregate_holds {
        EXIT_FAILURE
    } else if strict && outcome.partial {
        EXIT_BUDGET
    } else {
        EXIT_OK
    }
}

fn cmd_verify(
    descriptor: &str,
    field: &str,
    theorems: &str,
    strict: bool,
    budget: u64,
    output: &OutputArgs,
) -> Result<u8, CliError> {
    let g = parse_group(descriptor)?;
    let f = parse_field(field)?;
    let tags = parse_theorems(theorems)?;
    let reports = run_instance_checks(&g, &f, &tags, budget);
    let outcome = CatalogOutcome {
        aggregate_holds: reports.iter().all(|r| r.verdict != Verdict::Fails),
        partial: is_partial(&reports),
        reports,
    };
    emit(output, reports_text(&outcome.reports, output.format))?;
    Ok(outcome_exit(&outcome, strict))
}

fn cmd_catalog(
    path: Option<&std::path::Path>,
    strict: bool,
    budget: u64,
    output: &OutputArgs,
) -> Result<u8, CliError> {
    let catalog = match path {
        Some(p) => Catalog::load(p).map_err(|e| CliError::usage(e.to_string()))?,
        None => default_catalog(),
    };
    let outcome = run_catalog(&catalog, budget);
    emit(output, reports_text(&outcome.reports, output.format))?;
    Ok(outcome_exit(&outcome, strict))
}
