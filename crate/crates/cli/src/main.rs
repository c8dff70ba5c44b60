//! Batch front end over the symbolic engine: construction, axiom
//! verification, contraction, primitive-set enumeration, and invariant
//! comparison, with aligned text output by default and stable JSON behind
//! a flag.
//!
//! Exit codes: 0 success or all checks passed, 1 verification failure,
//! 2 singular contraction, 3 usage error (bad flags, unknown targets,
//! malformed input files).

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ckhopf::catalog::{
    allowed_contractions, catalog_entry, catalog_names, enumerate_primitive_sets,
    isomorphism_distinguishers, model_by_name, DistinguisherReport, PrimitiveSet,
};
use ckhopf::coeff::{DualSemantics, JAssignment};
use ckhopf::hopf::{check_hopf_axioms, contract_hopf, HopfAxiomReport, QuantumAlgebraData};
use ckhopf::json as schema;

#[derive(Parser)]
#[command(name = "ckhopf", version, about = "Symbolic engine for Cayley-Klein families of quantum algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SemanticsArg {
    /// Dual units are formal limits: positive powers vanish
    Limit,
    /// Additionally flag odd dual powers that survive cancellation
    Strict,
}

impl From<SemanticsArg> for DualSemantics {
    fn from(a: SemanticsArg) -> Self {
        match a {
            SemanticsArg::Limit => DualSemantics::Limit,
            SemanticsArg::Strict => DualSemantics::Strict,
        }
    }
}

#[derive(Args)]
struct TargetArgs {
    /// Catalog name (e.g. so_z3:X02, galilei:X01) or path to a JSON file
    target: String,
    /// Truncation order, at least 2 (default 6). Files may be truncated,
    /// never extended
    #[arg(long)]
    order: Option<u32>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators, relations, and structure maps of a target
    Show {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Run the Hopf axiom suite and report every section
    Verify {
        #[command(flatten)]
        target: TargetArgs,
    },
    /// Evaluate the contraction parameters and print the limit structure
    Contract {
        #[command(flatten)]
        target: TargetArgs,
        /// Comma-separated parameter values (unit, dual, imaginary, j),
        /// e.g. dual,unit; omitted trailing parameters stay symbolic
        #[arg(long)]
        j: String,
        /// How surviving dual units are interpreted
        #[arg(long, value_enum, default_value_t = SemanticsArg::Limit)]
        dual_semantics: SemanticsArg,
    },
    /// List primitive sets of a rank with allowed-contraction verdicts
    Enumerate {
        /// Rank n of the family (point indices 0..=n)
        n: u32,
        /// Number of primitive pairs; defaults to floor((n+1)/2)
        #[arg(long)]
        k: Option<u32>,
        /// Verdict model used where no exact construction exists
        #[arg(long, default_value = "pair-mixing")]
        model: String,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Compare two targets by computable invariants
    Distinguish {
        /// First catalog name or JSON file
        left: String,
        /// Second catalog name or JSON file
        right: String,
        /// Truncation order for catalog targets
        #[arg(long)]
        order: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 3, message: message.into() }
}

/// Restores default SIGPIPE handling so `ckhopf .. | head` terminates
/// quietly instead of panicking on a closed pipe.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

const DEFAULT_ORDER: u32 = 6;

fn check_order(n: u32) -> Result<u32, Failure> {
    if n < 2 {
        Err(usage(format!("--order must be at least 2, got {n}")))
    } else {
        Ok(n)
    }
}

/// Resolves a target: catalog names are built at the requested order,
/// files are parsed (quantum first, plain Lie tables are enveloped) and
/// may only be truncated.
fn load_target(name: &str, order: Option<u32>) -> Result<QuantumAlgebraData, Failure> {
    let requested = order.map(check_order).transpose()?;
    if let Some(q) = catalog_entry(name, requested.unwrap_or(DEFAULT_ORDER)) {
        return Ok(q);
    }
    let path = Path::new(name);
    if !path.is_file() {
        return Err(usage(format!(
            "unknown target {name:?}: not a catalog name ({}) and not a file",
            catalog_names().join(", ")
        )));
    }
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {name}: {e}")))?;
    let q = parse_structure(&text).map_err(|e| usage(format!("{name}: {e}")))?;
    match requested {
        None => Ok(q),
        Some(n) if n <= q.order() => Ok(q.truncated(n)),
        Some(n) => Err(usage(format!(
            "--order {n} would extend the file's truncation order {}",
            q.order()
        ))),
    }
}

fn parse_structure(text: &str) -> Result<QuantumAlgebraData, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    if value.get("generators").is_some() {
        let dto: schema::QuantumAlgebraDto =
            serde_json::from_value(value).map_err(|e| format!("invalid quantum algebra: {e}"))?;
        schema::quantum_from_dto(&dto)
    } else if value.get("basis").is_some() {
        let dto: schema::LieAlgebraDto =
            serde_json::from_value(value).map_err(|e| format!("invalid Lie algebra: {e}"))?;
        Ok(QuantumAlgebraData::enveloping(&schema::lie_from_dto(&dto)?))
    } else {
        Err("JSON object has neither \"generators\" (quantum) nor \"basis\" (Lie) fields"
            .to_string())
    }
}

fn emit_json(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn report_to_json(report: &HopfAxiomReport) -> serde_json::Value {
    let mut sections = serde_json::Map::new();
    for (name, violations) in report.sections() {
        let list: Vec<serde_json::Value> = violations
            .iter()
            .map(|v| json!({ "location": v.location, "residual": v.residual }))
            .collect();
        sections.insert(name.to_string(), json!(list));
    }
    json!({ "sections": sections, "all_pass": report.all_pass() })
}

fn print_report_text(report: &HopfAxiomReport) {
    println!("{}", report.render_text());
}

fn assignment_text(assignment: &JAssignment) -> String {
    assignment
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| format!("j{}={}", i + 1, v.name()))
        .collect::<Vec<_>>()
        .join(" ")
}

fn enumerate_sets(
    n: u32,
    k: Option<u32>,
    model_name: &str,
    format: FormatArg,
) -> Result<u8, Failure> {
    let model = model_by_name(model_name).ok_or_else(|| {
        usage(format!("unknown model {model_name:?}; available: pair-mixing"))
    })?;
    let k = k.unwrap_or((n + 1) / 2);
    if k == 0 || 2 * k > n + 1 {
        return Err(usage(format!("cannot place {k} disjoint pairs on {} indices", n + 1)));
    }
    let sets = enumerate_primitive_sets(n, k);
    match format {
        FormatArg::Text => {
            println!("{} primitive sets of {k} pairs for n={n}", sets.len());
            for set in &sets {
                println!("primitive set {set}");
                for v in allowed_contractions(set, model.as_ref()) {
                    println!(
                        "  {}: {} ({})",
                        assignment_text(&v.assignment),
                        v.verdict.name(),
                        v.basis.name()
                    );
                }
            }
        }
        FormatArg::Json => {
            let entries: Vec<serde_json::Value> = sets
                .iter()
                .map(|set| {
                    let verdicts: Vec<serde_json::Value> =
                        allowed_contractions(set, model.as_ref())
                            .iter()
                            .map(|v| {
                                serde_json::to_value(schema::verdict_to_dto(v))
                                    .expect("serializable")
                            })
                            .collect();
                    json!({
                        "primitive_set": set_names(set),
                        "verdicts": verdicts,
                    })
                })
                .collect();
            emit_json(&json!(entries));
        }
    }
    Ok(0)
}

fn set_names(set: &PrimitiveSet) -> Vec<String> {
    set.labels().iter().map(|l| l.to_string()).collect()
}

fn distinguisher_json(report: &DistinguisherReport) -> serde_json::Value {
    let comparisons: Vec<serde_json::Value> = report
        .comparisons
        .iter()
        .map(|c| {
            json!({
                "invariant": c.invariant,
                "left": c.left,
                "right": c.right,
                "agree": c.agree,
            })
        })
        .collect();
    json!({
        "comparisons": comparisons,
        "distinguished": report.distinguished(),
        "distinguished_by": report.distinguished_by().map(|c| c.invariant.clone()),
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Show { target } => {
            let q = load_target(&target.target, target.order)?;
            match target.format {
                FormatArg::Text => println!("{}", q.render_structure()),
                FormatArg::Json => {
                    emit_json(&serde_json::to_value(schema::quantum_to_dto(&q)).expect("serializable"))
                }
            }
            Ok(0)
        }
        Command::Verify { target } => {
            let q = load_target(&target.target, target.order)?;
            let report = check_hopf_axioms(&q);
            match target.format {
                FormatArg::Text => print_report_text(&report),
                FormatArg::Json => emit_json(&report_to_json(&report)),
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
        Command::Contract { target, j, dual_semantics } => {
            let q = load_target(&target.target, target.order)?;
            let assignment = JAssignment::parse(&j).map_err(usage)?;
            match contract_hopf(&q, &assignment, dual_semantics.into()) {
                Ok(done) => {
                    match target.format {
                        FormatArg::Text => {
                            for w in &done.warnings {
                                println!("warning: {w}");
                            }
                            println!("{}", done.value.render_structure());
                        }
                        FormatArg::Json => {
                            let warnings: Vec<String> =
                                done.warnings.iter().map(|w| w.to_string()).collect();
                            emit_json(&json!({
                                "result": serde_json::to_value(schema::quantum_to_dto(&done.value))
                                    .expect("serializable"),
                                "warnings": warnings,
                            }));
                        }
                    }
                    Ok(0)
                }
                Err(e) => {
                    match target.format {
                        FormatArg::Text => println!("singular contraction: {e}"),
                        FormatArg::Json => emit_json(&json!({
                            "singular": {
                                "parameter": e.parameter,
                                "monomial": e.monomial,
                                "location": e.location,
                            }
                        })),
                    }
                    Ok(2)
                }
            }
        }
        Command::Enumerate { n, k, model, format } => enumerate_sets(n, k, &model, format),
        Command::Distinguish { left, right, order, format } => {
            let q1 = load_target(&left, order)?;
            let q2 = load_target(&right, order)?;
            if q1.dim() != q2.dim() {
                match format {
                    FormatArg::Text => println!(
                        "generator count: {} | {}  DIFFER\ndistinguished by generator count",
                        q1.dim(),
                        q2.dim()
                    ),
                    FormatArg::Json => emit_json(&json!({
                        "comparisons": [{
                            "invariant": "generator count",
                            "left": q1.dim().to_string(),
                            "right": q2.dim().to_string(),
                            "agree": false,
                        }],
                        "distinguished": true,
                        "distinguished_by": "generator count",
                    })),
                }
                return Ok(0);
            }
            let report = isomorphism_distinguishers(&q1, &q2);
            match format {
                FormatArg::Text => {
                    for c in &report.comparisons {
                        println!(
                            "{}: {} | {}  {}",
                            c.invariant,
                            c.left,
                            c.right,
                            if c.agree { "agree" } else { "DIFFER" }
                        );
                    }
                    match report.distinguished_by() {
                        Some(c) => println!("distinguished by {}", c.invariant),
                        None => println!("not distinguished"),
                    }
                }
                FormatArg::Json => emit_json(&distinguisher_json(&report)),
            }
            Ok(0)
        }
    }
}
