//! Command-line front end: batch verification of operator files, generator
//! and extreme-point queries, hypercube partitions, exhaustive sweeps, and
//! the smallest-enclosing-ball oracle.
//!
//! Exit codes are a stable contract: 0 means every requested check passed,
//! 1 means a mathematical violation was found (a witness is printed), and 2
//! means the input could not be used (missing file, bad syntax, unknown id).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use vspace::axioms::{classify, Axiom};
use vspace::duality::tau_from_violator;
use vspace::enumeration::{census, run_theorem_sweep, theorem_def, theorem_ids, SweepReport};
use vspace::fixtures::Fixture;
use vspace::generators::{extreme_points, generators_of, GeneratorScope};
use vspace::ground::GroundSet;
use vspace::hypercube::{
    classes_as_intervals, equivalence_classes, operator_from_partition, IntervalCheck,
    IntervalPartition,
};
use vspace::mask::SubsetMask;
use vspace::miniball::{materialize, smallest_enclosing_ball, PointConfig};
use vspace::table::{OperatorKind, OperatorTable};
use vspace::Error;

#[derive(Parser)]
#[command(
    name = "vspace",
    version,
    about = "Verify axioms of finite set operators: violator, closure and convex spaces"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,

    /// Suppress report output; rely on exit codes
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExtremeDefArg {
    /// Membership form: x ∉ τ(A − x)
    Ex,
    /// Image-change form: τ(A) ≠ τ(A − x)
    #[value(name = "EX", alias = "ex-upper")]
    ExUpper,
}

#[derive(Subcommand)]
enum Command {
    /// Check axioms of an operator file and classify the space
    Check {
        path: PathBuf,
        /// Comma-separated axiom ids the exit code requires; defaults to the
        /// axioms defining the file's form (C1,C2,C3 for tau files,
        /// consistency,locality for violator files). All eight are reported.
        #[arg(long, value_delimiter = ',')]
        axioms: Vec<String>,
    },
    /// Generators and bases of a set
    Bases {
        path: PathBuf,
        /// Target set as comma-separated element labels (empty for ∅)
        #[arg(long, default_value = "")]
        set: String,
        /// Restrict generators to subsets of the target
        #[arg(long)]
        within: bool,
    },
    /// Extreme points of a set
    Extreme {
        path: PathBuf,
        #[arg(long, default_value = "")]
        set: String,
        /// Which extreme-point definition to print
        #[arg(long, value_enum, default_value_t = ExtremeDefArg::Ex)]
        def: ExtremeDefArg,
    },
    /// Equivalence classes of an operator and whether each is an interval
    Partition { path: PathBuf },
    /// Build the operator table defined by an interval partition file
    FromPartition {
        path: PathBuf,
        /// Write the operator file here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive sweeps: run a registered theorem or a class census
    Enumerate {
        /// Ground-set size
        #[arg(short = 'n', long = "size", default_value_t = 3)]
        n: usize,
        /// Theorem id to sweep (see --list)
        #[arg(long)]
        theorem: Option<String>,
        /// Count spaces per class over all C1 tables
        #[arg(long)]
        census: bool,
        /// List registered theorem ids
        #[arg(long)]
        list: bool,
    },
    /// Smallest enclosing ball of a point file; optionally write its table
    Miniball {
        path: PathBuf,
        /// Materialize the violator table of the configuration
        #[arg(long)]
        materialize: bool,
        /// Write the table here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write a canned example table
    Examples {
        /// Fixture id: ex1, ex1-literal, ex2_2, exms, ex5_1
        #[arg(long)]
        id: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Output {
        format: cli.format,
        quiet: cli.quiet,
    };
    match run(cli.command, &out) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

struct Output {
    format: Format,
    quiet: bool,
}

impl Output {
    fn human(&self, text: &str) {
        if !self.quiet && self.format == Format::Human {
            println!("{text}");
        }
    }

    fn structured(&self, value: Value) {
        if !self.quiet && self.format == Format::Structured {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("valid json")
            );
        }
    }
}

type CliResult = Result<u8, Box<dyn std::error::Error>>;

fn run(command: Command, out: &Output) -> CliResult {
    match command {
        Command::Check { path, axioms } => cmd_check(&path, &axioms, out),
        Command::Bases { path, set, within } => cmd_bases(&path, &set, within, out),
        Command::Extreme { path, set, def } => cmd_extreme(&path, &set, def, out),
        Command::Partition { path } => cmd_partition(&path, out),
        Command::FromPartition { path, output } => cmd_from_partition(&path, output, out),
        Command::Enumerate {
            n,
            theorem,
            census,
            list,
        } => cmd_enumerate(n, theorem, census, list, out),
        Command::Miniball {
            path,
            materialize,
            output,
        } => cmd_miniball(&path, materialize, output, out),
        Command::Examples { id, output } => cmd_examples(&id, output, out),
    }
}

fn load_table(path: &Path) -> Result<OperatorTable, Box<dyn std::error::Error>> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Ok(OperatorTable::from_json(&text)?)
}

/// The τ-form view used by generator and hypercube queries; V-form tables
/// are converted explicitly.
fn tau_view(table: &OperatorTable) -> OperatorTable {
    match table.kind() {
        OperatorKind::Tau => table.clone(),
        OperatorKind::Violator => tau_from_violator(table).expect("kind checked"),
    }
}

fn parse_set_arg(ground: &GroundSet, arg: &str) -> Result<SubsetMask, Error> {
    let labels: Vec<&str> = arg
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    ground.parse_set(&labels)
}

fn write_or_print(
    text: &str,
    output: Option<PathBuf>,
    out: &Output,
) -> Result<(), Box<dyn std::error::Error>> {
    match output {
        Some(path) => {
            fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            out.human(&format!("wrote {}", path.display()));
        }
        None => {
            if !out.quiet {
                println!("{text}");
            }
        }
    }
    Ok(())
}

fn cmd_check(path: &Path, axiom_args: &[String], out: &Output) -> CliResult {
    let table = load_table(path)?;
    let requested: Vec<Axiom> = if axiom_args.is_empty() {
        match table.kind() {
            OperatorKind::Tau => vec![Axiom::C1, Axiom::C2, Axiom::C3],
            OperatorKind::Violator => vec![Axiom::Consistency, Axiom::Locality],
        }
    } else {
        axiom_args
            .iter()
            .map(|a| Axiom::from_str(a))
            .collect::<Result<_, _>>()?
    };

    let report = classify(&table);
    let failed: Vec<String> = requested
        .iter()
        .filter(|a| !report.passes(**a))
        .map(|a| a.to_string())
        .collect();

    let classes = &report.classes;
    let class_list: Vec<&str> = [
        ("closure space", classes.closure_space),
        ("violator space", classes.violator_space),
        ("convex space", classes.convex_space),
        ("convex geometry", classes.convex_geometry),
    ]
    .iter()
    .filter(|(_, holds)| *holds)
    .map(|(name, _)| *name)
    .collect();

    let mut lines = vec![format!(
        "ground {} elements, kind {}",
        table.ground().len(),
        table.kind()
    )];
    for axiom in Axiom::ALL {
        match report.witness_text.get(&axiom) {
            None => lines.push(format!("  {:<14} pass", axiom.to_string())),
            Some(text) => lines.push(format!("  {:<14} FAIL  {text}", axiom.to_string())),
        }
    }
    lines.push(format!(
        "classes: {}",
        if class_list.is_empty() {
            "none".to_string()
        } else {
            class_list.join(", ")
        }
    ));
    let requested_names: Vec<String> = requested.iter().map(|a| a.to_string()).collect();
    lines.push(if failed.is_empty() {
        format!("verdict: pass ({})", requested_names.join(", "))
    } else {
        format!("verdict: FAIL ({})", failed.join(", "))
    });
    out.human(&lines.join("\n"));

    out.structured(json!({
        "ground": table.ground().labels(),
        "kind": table.kind().to_string(),
        "axioms": Axiom::ALL.iter().map(|a| json!({
            "axiom": a.to_string(),
            "pass": report.passes(*a),
            "witness": report.witness_text.get(a),
        })).collect::<Vec<_>>(),
        "classes": {
            "closure_space": classes.closure_space,
            "violator_space": classes.violator_space,
            "convex_space": classes.convex_space,
            "convex_geometry": classes.convex_geometry,
        },
        "requested": requested_names,
        "failed": failed,
    }));

    Ok(if failed.is_empty() { 0 } else { 1 })
}

fn cmd_bases(path: &Path, set_arg: &str, within: bool, out: &Output) -> CliResult {
    let table = tau_view(&load_table(path)?);
    let ground = table.ground().clone();
    let target = parse_set_arg(&ground, set_arg)?;
    let scope = if within {
        GeneratorScope::WithinTarget
    } else {
        GeneratorScope::All
    };
    let family = generators_of(&table, target, scope)?;

    let fmt_list = |sets: &[SubsetMask]| {
        sets.iter()
            .map(|&m| ground.format_set(m))
            .collect::<Vec<_>>()
            .join(", ")
    };
    out.human(&format!(
        "X = {}\nτ(X) = {}\ngenerators: {}\nbases: {}",
        ground.format_set(target),
        ground.format_set(family.closure_value),
        fmt_list(&family.generators),
        fmt_list(&family.bases),
    ));
    out.structured(json!({
        "set": ground.set_labels(target),
        "closure": ground.set_labels(family.closure_value),
        "generators": family.generators.iter().map(|&m| ground.set_labels(m)).collect::<Vec<_>>(),
        "bases": family.bases.iter().map(|&m| ground.set_labels(m)).collect::<Vec<_>>(),
    }));
    Ok(0)
}

fn cmd_extreme(path: &Path, set_arg: &str, def: ExtremeDefArg, out: &Output) -> CliResult {
    let table = tau_view(&load_table(path)?);
    let ground = table.ground().clone();
    let target = parse_set_arg(&ground, set_arg)?;
    let sets = extreme_points(&table, target)?;
    let (name, chosen) = match def {
        ExtremeDefArg::Ex => ("ex", sets.extreme),
        ExtremeDefArg::ExUpper => ("EX", sets.closure_critical),
    };
    out.human(&format!(
        "{name}({}) = {}",
        ground.format_set(target),
        ground.format_set(chosen)
    ));
    out.structured(json!({
        "set": ground.set_labels(target),
        "definition": name,
        "extreme_points": ground.set_labels(chosen),
    }));
    Ok(0)
}

fn cmd_partition(path: &Path, out: &Output) -> CliResult {
    let table = tau_view(&load_table(path)?);
    let ground = table.ground().clone();
    let classes = equivalence_classes(&table)?;
    let check = classes_as_intervals(&table)?;

    let mut lines = Vec::new();
    let mut class_values = Vec::new();
    for class in &classes {
        let members: Vec<String> = class
            .members
            .iter()
            .map(|&m| ground.format_set(m))
            .collect();
        // the witness condition is "this class is NOT an interval"
        let non_interval = vspace::witness::Witness::NonInterval {
            class_value: class.value,
        }
        .replay(&table);
        lines.push(format!(
            "value {}: {{ {} }}{}",
            ground.format_set(class.value),
            members.join(", "),
            if non_interval {
                "  NOT an interval"
            } else {
                ""
            }
        ));
        class_values.push(json!({
            "value": ground.set_labels(class.value),
            "members": class.members.iter().map(|&m| ground.set_labels(m)).collect::<Vec<_>>(),
            "interval": !non_interval,
        }));
    }

    let code = match &check {
        IntervalCheck::Partition(p) => {
            lines.push(format!(
                "all {} classes are intervals; hypercube partition confirmed",
                p.intervals().len()
            ));
            0
        }
        IntervalCheck::NonInterval(w) => {
            lines.push(format!("violation: {}", w.render(&table)));
            1
        }
    };
    out.human(&lines.join("\n"));
    out.structured(json!({
        "classes": class_values,
        "hypercube_partition": matches!(check, IntervalCheck::Partition(_)),
    }));
    Ok(code)
}

fn cmd_from_partition(path: &Path, output: Option<PathBuf>, out: &Output) -> CliResult {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let partition = match IntervalPartition::from_json(&text) {
        Ok(p) => p,
        // invalid partitions are a mathematical failure with a diagnosis,
        // not a usage error
        Err(
            err @ (Error::PartitionOverlap(_) | Error::PartitionGap(_) | Error::BadInterval { .. }),
        ) => {
            out.human(&format!("invalid partition: {err}"));
            return Ok(1);
        }
        Err(err) => return Err(err.into()),
    };
    let table = operator_from_partition(&partition);

    let report = classify(&table);
    let unique = vspace::generators::is_uniquely_generated(&table)?.is_pass();
    if !report.classes.violator_space || !unique {
        // cannot happen for a valid partition; surface loudly if it ever does
        out.human("constructed table is NOT a uniquely generated violator space");
        return Ok(1);
    }

    out.human(&format!(
        "constructed a uniquely generated violator space from {} intervals",
        partition.intervals().len()
    ));
    write_or_print(&table.to_json(), output, out)?;
    Ok(0)
}

fn sweep_to_json(report: &SweepReport) -> Value {
    json!({
        "theorem": report.theorem,
        "statement": report.statement,
        "ground_size": report.ground_size,
        "universe": report.universe,
        "universe_count": report.universe_count,
        "counts": report.counts,
        "expect_counterexamples": report.expect_counterexamples,
        "violations": report.violations.iter().map(|v| json!({
            "subject": v.subject,
            "detail": v.detail,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_enumerate(
    n: usize,
    theorem: Option<String>,
    want_census: bool,
    list: bool,
    out: &Output,
) -> CliResult {
    if list {
        let mut lines = Vec::new();
        for id in theorem_ids() {
            let def = theorem_def(id).expect("registered");
            lines.push(format!("{id:<36} {}", def.statement));
        }
        out.human(&lines.join("\n"));
        out.structured(json!(theorem_ids()));
        return Ok(0);
    }

    let ground = GroundSet::numbered(n)?;
    if let Some(id) = theorem {
        let report = run_theorem_sweep(&ground, &id)?;
        let verdict = if report.conforms() {
            if report.expect_counterexamples {
                format!(
                    "{} counterexamples found (non-implication certified)",
                    report.violations.len()
                )
            } else {
                "0 violations".to_string()
            }
        } else if report.expect_counterexamples {
            "NO counterexample found (expected at least one)".to_string()
        } else {
            format!("{} violations", report.violations.len())
        };
        let mut lines = vec![
            format!("theorem: {} — {}", report.theorem, report.statement),
            format!(
                "universe: {} on {} elements, {} members",
                report.universe, report.ground_size, report.universe_count
            ),
            format!("result: {verdict}"),
        ];
        for v in report.violations.iter().take(5) {
            lines.push(format!("  {}", v.detail));
            lines.push(format!("    on {}", v.subject));
        }
        out.human(&lines.join("\n"));
        out.structured(sweep_to_json(&report));
        return Ok(if report.conforms() { 0 } else { 1 });
    }

    if want_census {
        let c = census(&ground)?;
        let mut lines = vec![format!(
            "n={}: {} C1 tables — {} closure, {} violator, {} convex, {} convex geometries",
            c.ground_size,
            c.c1_tables,
            c.closure_spaces,
            c.violator_spaces,
            c.convex_spaces,
            c.convex_geometries
        )];
        for (signature, count) in &c.signature_counts {
            lines.push(format!("  {signature:<36} {count}"));
        }
        out.human(&lines.join("\n"));
        out.structured(json!({
            "ground_size": c.ground_size,
            "c1_tables": c.c1_tables,
            "closure_spaces": c.closure_spaces,
            "violator_spaces": c.violator_spaces,
            "convex_spaces": c.convex_spaces,
            "convex_geometries": c.convex_geometries,
            "signatures": c.signature_counts,
        }));
        return Ok(0);
    }

    Err("enumerate needs --theorem <id>, --census, or --list".into())
}

fn cmd_miniball(path: &Path, want_table: bool, output: Option<PathBuf>, out: &Output) -> CliResult {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let config = PointConfig::from_json(&text)?;
    let full = config.ground().full_mask();
    let ball = smallest_enclosing_ball(&config, full).expect("configurations are nonempty");

    let center: Vec<String> = ball.center().iter().map(|c| c.to_string()).collect();
    out.human(&format!(
        "{} points in dimension {}\nsmallest enclosing ball: center ({}), squared radius {}",
        config.len(),
        config.dim(),
        center.join(", "),
        ball.radius_sq()
    ));
    out.structured(json!({
        "dim": config.dim(),
        "points": config.len(),
        "center": center,
        "radius_sq": ball.radius_sq().to_string(),
    }));

    if want_table {
        let table = materialize(&config);
        write_or_print(&table.to_json(), output, out)?;
    }
    Ok(0)
}

fn cmd_examples(id: &str, output: Option<PathBuf>, out: &Output) -> CliResult {
    let fixture = Fixture::from_str(id)?;
    let table = fixture.table();
    write_or_print(&table.to_json(), output, out)?;
    Ok(0)
}
