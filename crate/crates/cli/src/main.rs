//! Command line for the critical-ideal machinery: ideals and matchings of
//! trees, Groebner checks, critical groups, the verification suites, and
//! graph-family generation.
//!
//! Exit codes: 0 all assertions passed, 1 assertion failure, 2 usage or
//! parse error, 3 resource cap exceeded.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use critideals::ideal::IdealError;
use critideals::intalg::{
    c5_arithmetical, critical_group_of_arithmetical, critical_group_of_graph, natural_arithmetical,
    validate_arithmetical, IntAlgError,
};
use critideals::poly::{CompletionError, Limits};
use critideals::report::CheckRecord;
use critideals::tree::{
    c5, depth2, j_tree, levine_wired, parse_multigraph, parse_tree, path, random_tree,
    regular_branch, regular_tree, serialize_multigraph, serialize_tree, star, wired_regular,
    FamilyGraph, MultiGraph, Tree,
};
use critideals::verify::{run_suite, SuiteError, SUITES};

#[derive(Parser)]
#[command(
    name = "critideals",
    version,
    about = "Critical ideals of trees over the integers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Family spec `kind:p1,p2,...` (path, star, depth2, j, regular,
    /// branch, c5, wired, levine, random)
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
    /// Tree or multigraph file (first line n, then `u v [mult]` per edge)
    #[arg(long)]
    input: Option<std::path::PathBuf>,
    /// Seed for the `random:n` family
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct FormatArg {
    /// Output format
    #[arg(long, value_parser = ["text", "json"], default_value = "text")]
    format: String,
}

#[derive(Args)]
struct CapArgs {
    /// Completion pair budget
    #[arg(long, default_value_t = 500_000)]
    max_pairs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generators of one or all critical ideals of a tree
    Ideal {
        #[command(flatten)]
        input: InputArgs,
        /// Size index, or "all"
        #[arg(long, default_value = "all")]
        j: String,
        #[command(flatten)]
        format: FormatArg,
        /// Include one provenance 2-matching per generator
        #[arg(long)]
        provenance: bool,
        /// Dump the generalized Laplacian to stderr
        #[arg(long)]
        dump_laplacian: bool,
    },
    /// Print the 2-matching number and algebraic corank
    Gamma {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List the 2-matchings of the looped tree of a given size
    Matchings {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        j: usize,
        /// Restrict to minimal 2-matchings
        #[arg(long)]
        minimal: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check that the leaf-pair basis of the (n-1)-ideal is a reduced
    /// Groebner basis
    Groebner {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Critical group of a graph, or of the Kodaira structure on c5
    Critgroup {
        #[command(flatten)]
        input: InputArgs,
        /// Use the arithmetical structure (d, r) instead of plain degrees;
        /// for the c5 family this is the Kodaira structure
        #[arg(long)]
        arithmetical: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run a verification suite and emit a JSON-lines report
    Verify {
        /// One of: identities, structure, oracle, conjecture, wired,
        /// arithmetical
        #[arg(long)]
        suite: String,
        /// Largest vertex count for the exhaustive sweeps
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Write a family graph in the tree file format
    Family {
        /// Family spec `kind:p1,p2,...`
        spec: String,
        /// Output path (stdout when omitted)
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Assertion(String),
    Resource(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Assertion(_) => 1,
            CliError::Resource(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Assertion(m) | CliError::Resource(m) => m,
        }
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn classify_ideal_error(e: IdealError) -> CliError {
    match e {
        IdealError::Completion(CompletionError::BudgetExhausted { .. })
        | IdealError::Completion(CompletionError::MemoryCapExceeded { .. })
        | IdealError::TooLarge { .. } => CliError::Resource(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn classify_suite_error(e: SuiteError) -> CliError {
    match e {
        SuiteError::Ideal(inner) => classify_ideal_error(inner),
        SuiteError::IntAlg(IntAlgError::SizeCap { .. }) => CliError::Resource(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

fn parse_family(spec: &str, seed: u64) -> Result<FamilyGraph, CliError> {
    let (kind, params) = spec.split_once(':').ok_or_else(|| {
        usage(format!(
            "family spec {spec:?} must look like kind:p1,p2,..."
        ))
    })?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| usage(format!("bad family parameter in {spec:?}: {e}")))?;
    let arity = |k: usize| -> Result<(), CliError> {
        if nums.len() == k {
            Ok(())
        } else {
            Err(usage(format!(
                "family {kind:?} takes {k} parameter(s), got {}",
                nums.len()
            )))
        }
    };
    let tree = |t: Result<Tree, critideals::GraphError>| -> Result<FamilyGraph, CliError> {
        Ok(FamilyGraph::Tree(t.map_err(usage)?))
    };
    let multi = |g: Result<MultiGraph, critideals::GraphError>| -> Result<FamilyGraph, CliError> {
        Ok(FamilyGraph::Multi(g.map_err(usage)?))
    };
    match kind.to_ascii_lowercase().as_str() {
        "path" => {
            arity(1)?;
            tree(path(nums[0]))
        }
        "star" => {
            arity(1)?;
            tree(star(nums[0]))
        }
        "depth2" => tree(depth2(&nums)),
        "j" => {
            arity(3)?;
            tree(j_tree(nums[0], nums[1], nums[2]))
        }
        "regular" | "regular_tree" => {
            arity(2)?;
            tree(regular_tree(nums[0], nums[1]))
        }
        "branch" | "regular_branch" => {
            arity(2)?;
            tree(regular_branch(nums[0], nums[1]))
        }
        "c5" => {
            arity(1)?;
            tree(c5(nums[0]))
        }
        "wired" | "wired_regular" => {
            arity(2)?;
            multi(wired_regular(nums[0], nums[1]))
        }
        "levine" | "levine_wired" => {
            arity(2)?;
            multi(levine_wired(nums[0], nums[1]))
        }
        "random" => {
            arity(1)?;
            tree(random_tree(nums[0], seed))
        }
        other => Err(usage(format!("unknown family kind {other:?}"))),
    }
}

impl InputArgs {
    fn load(&self) -> Result<FamilyGraph, CliError> {
        match (&self.family, &self.input) {
            (Some(spec), None) => parse_family(spec, self.seed),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
                match parse_tree(&text) {
                    Ok(t) => Ok(FamilyGraph::Tree(t)),
                    Err(tree_err) => match parse_multigraph(&text) {
                        Ok(g) => Ok(FamilyGraph::Multi(g)),
                        Err(_) => Err(usage(tree_err)),
                    },
                }
            }
            _ => Err(usage("exactly one of --family or --input is required")),
        }
    }

    fn load_tree(&self) -> Result<Tree, CliError> {
        match self.load()? {
            FamilyGraph::Tree(t) => Ok(t),
            FamilyGraph::Multi(_) => Err(usage("this subcommand needs a tree, not a multigraph")),
        }
    }
}

fn limits_from(caps: &CapArgs) -> Limits {
    let mut limits = Limits {
        max_pairs: caps.max_pairs,
        ..Limits::default()
    };
    if let Ok(mb) = std::env::var("CRITIDEALS_CAP_MB") {
        if let Ok(mb) = mb.parse::<usize>() {
            limits.max_mem_bytes = mb << 20;
        }
    }
    limits
}

#[derive(Serialize)]
struct IdealJson {
    j: usize,
    generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<Vec<String>>,
}

fn cmd_ideal(
    input: &InputArgs,
    j: &str,
    format: &str,
    provenance: bool,
    dump_laplacian: bool,
) -> Result<(), CliError> {
    let tree = input.load_tree()?;
    if dump_laplacian {
        eprintln!("{}", critideals::generalized_laplacian_tree(&tree));
    }
    let js: Vec<usize> = if j == "all" {
        (1..=tree.n()).collect()
    } else {
        vec![j
            .parse::<usize>()
            .map_err(|_| usage(format!("--j must be a size index or \"all\", got {j:?}")))?]
    };
    let single = js.len() == 1;
    let mut out = std::io::stdout().lock();
    let mut json_rows = Vec::new();
    for j in js {
        let ideal = critideals::critical_ideal(&tree, j).map_err(classify_ideal_error)?;
        // Generators already sit in descending leading-monomial order.
        let gens: Vec<String> = ideal.generators.iter().map(|p| p.to_string()).collect();
        let prov: Vec<String> = ideal
            .provenance
            .iter()
            .map(|(d, m)| format!("{d} <- {}", m.text()))
            .collect();
        if format == "json" {
            json_rows.push(IdealJson {
                j,
                generators: gens,
                provenance: provenance.then_some(prov),
            });
        } else {
            if !single {
                writeln!(out, "[j={j}]").unwrap();
            }
            if provenance {
                for line in prov {
                    writeln!(out, "{line}").unwrap();
                }
            } else {
                for g in gens {
                    writeln!(out, "{g}").unwrap();
                }
            }
        }
    }
    if format == "json" {
        let body = if single {
            serde_json::to_string_pretty(&json_rows[0]).unwrap()
        } else {
            serde_json::to_string_pretty(&json_rows).unwrap()
        };
        writeln!(out, "{body}").unwrap();
    }
    Ok(())
}

fn cmd_gamma(input: &InputArgs, format: &str) -> Result<(), CliError> {
    let tree = input.load_tree()?;
    let nu2 = critideals::nu2(&tree);
    let gamma = critideals::gamma(&tree);
    if format == "json" {
        println!("{}", serde_json::json!({ "nu2": nu2, "gamma": gamma }));
    } else {
        println!("nu2={nu2} gamma={gamma}");
    }
    Ok(())
}

fn cmd_matchings(input: &InputArgs, j: usize, minimal: bool, format: &str) -> Result<(), CliError> {
    let tree = input.load_tree()?;
    let matchings = if minimal {
        critideals::enumerate_minimal(&tree, j)
    } else {
        critideals::enumerate_two_matchings(&tree, true, j)
    };
    if format == "json" {
        let rows: Vec<serde_json::Value> = matchings
            .iter()
            .map(|m| {
                serde_json::json!({
                    "edges": m.edges(),
                    "loops": m.loops(),
                })
            })
            .collect();
        println!("{}", serde_json::to_string_pretty(&rows).unwrap());
    } else {
        let mut out = std::io::stdout().lock();
        for m in &matchings {
            writeln!(out, "{}", m.text()).unwrap();
        }
    }
    Ok(())
}

fn cmd_groebner(input: &InputArgs, format: &str) -> Result<(), CliError> {
    let tree = input.load_tree()?;
    let report = critideals::groebner_check_paths(&tree).map_err(classify_ideal_error)?;
    if format == "json" {
        println!(
            "{}",
            serde_json::json!({
                "leaves": report.leaves,
                "basis_size": report.basis_size,
                "size_matches": report.size_matches,
                "groebner": report.groebner,
                "reduced": report.reduced,
            })
        );
    } else {
        println!(
            "leaves={} basis_size={} size_matches={} groebner={} reduced={}",
            report.leaves, report.basis_size, report.size_matches, report.groebner, report.reduced
        );
    }
    if report.holds() {
        Ok(())
    } else {
        Err(CliError::Assertion("path basis check failed".into()))
    }
}

fn cmd_critgroup(input: &InputArgs, arithmetical: bool, format: &str) -> Result<(), CliError> {
    let loaded = input.load()?;
    let (group, valid) = if arithmetical {
        let arith = match (&input.family, &loaded) {
            (Some(spec), _) if spec.to_ascii_lowercase().starts_with("c5:") => {
                let m: usize = spec[3..]
                    .parse()
                    .map_err(|e| usage(format!("bad c5 spec: {e}")))?;
                c5_arithmetical(m).map_err(usage)?
            }
            (_, FamilyGraph::Tree(_)) | (_, FamilyGraph::Multi(_)) => {
                natural_arithmetical(&loaded.as_multigraph())
            }
        };
        let valid = validate_arithmetical(&arith.graph, &arith.d, &arith.r).map_err(usage)?;
        (
            critical_group_of_arithmetical(&arith).map_err(usage)?,
            Some(valid),
        )
    } else {
        (
            critical_group_of_graph(&loaded.as_multigraph()).map_err(usage)?,
            None,
        )
    };
    if format == "json" {
        let torsion: Vec<String> = group.torsion.iter().map(BigInt::to_string).collect();
        println!(
            "{}",
            serde_json::json!({
                "torsion": torsion,
                "free_rank": group.free_rank,
                "validated": valid,
            })
        );
    } else {
        println!("{}", group.torsion_string());
    }
    Ok(())
}

fn cmd_verify(suite: &str, max_n: usize, caps: &CapArgs) -> Result<(), CliError> {
    if !SUITES.contains(&suite) {
        return Err(usage(format!(
            "unknown suite {suite:?}; expected one of {SUITES:?}"
        )));
    }
    let limits = limits_from(caps);
    let records: Vec<CheckRecord> =
        run_suite(suite, max_n, &limits).map_err(classify_suite_error)?;
    let mut out = std::io::stdout().lock();
    let mut failures = 0usize;
    for rec in &records {
        writeln!(out, "{}", serde_json::to_string(rec).unwrap()).unwrap();
        if rec.failed() {
            failures += 1;
        }
    }
    if failures > 0 {
        return Err(CliError::Assertion(format!(
            "{failures} of {} checks failed",
            records.len()
        )));
    }
    Ok(())
}

fn cmd_family(spec: &str, out: Option<&std::path::Path>, seed: u64) -> Result<(), CliError> {
    let graph = parse_family(spec, seed)?;
    let text = match &graph {
        FamilyGraph::Tree(t) => serialize_tree(t),
        FamilyGraph::Multi(g) => serialize_multigraph(g),
    };
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Ideal {
            input,
            j,
            format,
            provenance,
            dump_laplacian,
        } => cmd_ideal(input, j, &format.format, *provenance, *dump_laplacian),
        Command::Gamma { input, format } => cmd_gamma(input, &format.format),
        Command::Matchings {
            input,
            j,
            minimal,
            format,
        } => cmd_matchings(input, *j, *minimal, &format.format),
        Command::Groebner { input, format } => cmd_groebner(input, &format.format),
        Command::Critgroup {
            input,
            arithmetical,
            format,
        } => cmd_critgroup(input, *arithmetical, &format.format),
        Command::Verify { suite, max_n, caps } => cmd_verify(suite, *max_n, caps),
        Command::Family { spec, out, seed } => cmd_family(spec, out.as_deref(), *seed),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
