//! `corona`: build, check, label, verify, search and export corona instances.
//!
//! Exit codes: 0 success or antimagic, 1 not antimagic or no labeling found,
//! 2 forced run with repeated sums, 3 hypotheses unmet, 4 malformed labeling,
//! 64 usage error, 65 invalid input file, 66 unreadable input, 74 write failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use antimagic_corona::io::{self, InstanceSpec, IoError};
use antimagic_corona::labeling::{label_instance, LabelError, Labeling};
use antimagic_corona::search::{self, SearchError, SearchStatus, DEFAULT_EXHAUSTIVE_LIMIT};
use antimagic_corona::verify::{vertex_sums, SumReport};
use antimagic_corona::{check_conditions, CoronaInstance, Graph};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const NOT_ANTIMAGIC: u8 = 1;
const FORCED_DUPLICATES: u8 = 2;
const CONDITIONS_UNMET: u8 = 3;
const MALFORMED_LABELING: u8 = 4;
const USAGE: u8 = 64;
const BAD_INPUT: u8 = 65;
const NO_INPUT: u8 = 66;
const WRITE_FAILED: u8 = 74;

#[derive(Parser)]
#[command(
    name = "corona",
    version,
    about = "Antimagic labelings of generalized edge coronas"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an instance and print its summary
    Build {
        spec: PathBuf,
        /// Also write the composite graph as canonical JSON
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Evaluate the hypotheses of the matching construction
    Conditions { spec: PathBuf },
    /// Run the construction and report vertex sums
    Label {
        spec: PathBuf,
        /// Label even when hypotheses fail
        #[arg(long)]
        force: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Check a labeling of a graph or instance
    Verify { graph: PathBuf, labeling: PathBuf },
    /// Look for an antimagic labeling of a small graph
    Search(SearchArgs),
    /// Convert a graph, optionally with a labeling, to another format
    Export {
        graph: PathBuf,
        #[arg(long)]
        labeling: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["exhaustive", "random"])))]
struct SearchArgs {
    graph: PathBuf,
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100_000)]
    budget: u64,
    /// Largest edge count the exhaustive search accepts
    #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_LIMIT)]
    limit: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Dot,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Build { spec, graph } => cmd_build(&spec, graph.as_deref()),
        Command::Conditions { spec } => cmd_conditions(&spec),
        Command::Label {
            spec,
            force,
            output,
        } => cmd_label(&spec, force, &output),
        Command::Verify { graph, labeling } => cmd_verify(&graph, &labeling),
        Command::Search(args) => cmd_search(&args),
        Command::Export {
            graph,
            labeling,
            output,
        } => cmd_export(&graph, labeling.as_deref(), &output),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(NO_INPUT, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::new(WRITE_FAILED, format!("{}: {e}", path.display())))
}

fn bad_input(path: &Path) -> impl Fn(IoError) -> Failure + '_ {
    move |e| Failure::new(BAD_INPUT, format!("{}: {e}", path.display()))
}

fn print_json(value: &Value) -> Result<(), Failure> {
    let text = io::canonical_json(value).map_err(|e| Failure::new(WRITE_FAILED, e.to_string()))?;
    print!("{text}");
    Ok(())
}

fn load_spec(path: &Path) -> Result<(InstanceSpec, CoronaInstance), Failure> {
    let text = read(path)?;
    let spec = InstanceSpec::from_json(&text).map_err(bad_input(path))?;
    let inst = spec.build().map_err(bad_input(path))?;
    Ok((spec, inst))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    io::read_graph(&read(path)?).map_err(bad_input(path))
}

fn load_labeling(graph: &Graph, path: &Path) -> Result<Labeling, Failure> {
    io::read_labeling(graph, &read(path)?)
        .map_err(|e| Failure::new(MALFORMED_LABELING, format!("{}: {e}", path.display())))
}

fn cmd_build(path: &Path, graph_out: Option<&Path>) -> Outcome {
    let (_, inst) = load_spec(path)?;
    let g = inst.composite();
    let profile = g.degree_profile();
    let roles = inst.role_counts();
    print_json(&json!({
        "base": inst.base().to_string(),
        "summary": format!("{} vertices, {} edges", g.vertex_count(), g.edge_count()),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "max_degree": profile.max_degree,
        "min_degree": profile.min_degree,
        "roles": {"base": roles.base, "internal": roles.internal, "cross": roles.cross},
    }))?;
    if let Some(out) = graph_out {
        let text = io::graph_to_json(g).map_err(|e| Failure::new(WRITE_FAILED, e.to_string()))?;
        write(out, &text)?;
    }
    Ok(0)
}

fn cmd_conditions(path: &Path) -> Outcome {
    let (_, inst) = load_spec(path)?;
    let report = check_conditions(&inst);
    print_json(&io::condition_report_json(&report))?;
    Ok(if report.overall { 0 } else { CONDITIONS_UNMET })
}

fn render(
    graph: &Graph,
    labeling: &Labeling,
    report: &SumReport,
    format: Format,
    inst: Option<&CoronaInstance>,
) -> Result<String, Failure> {
    let text = match format {
        Format::Json => io::labeling_to_json(graph, labeling, Some(report), inst),
        Format::Csv => io::labeling_to_csv(graph, labeling),
        Format::Dot => Ok(io::labeling_to_dot(graph, labeling, Some(report))),
    };
    text.map_err(|e| Failure::new(WRITE_FAILED, e.to_string()))
}

fn cmd_label(path: &Path, force: bool, output: &Output) -> Outcome {
    let (spec, inst) = load_spec(path)?;
    let forced = force || spec.options.force;
    let out = match label_instance(&inst, forced) {
        Ok(out) => out,
        Err(LabelError::ConditionsNotMet(report)) => {
            print_json(&io::condition_report_json(&report))?;
            return Err(Failure::new(
                CONDITIONS_UNMET,
                format!(
                    "hypotheses unmet: {} (use --force to label anyway)",
                    report.failed_ids().join(", ")
                ),
            ));
        }
        Err(LabelError::ConstructionFailed) => {
            return Err(Failure::new(
                NOT_ANTIMAGIC,
                LabelError::ConstructionFailed.to_string(),
            ))
        }
        Err(e) => return Err(Failure::new(BAD_INPUT, e.to_string())),
    };
    let g = inst.composite();
    let report = vertex_sums(g, &out.labeling)
        .expect("constructions yield bijections")
        .with_chain(&out.trace.chain);
    print_json(&io::sum_report_json(g, &report))?;
    if let Some(file) = &output.out {
        write(
            file,
            &render(g, &out.labeling, &report, output.format, Some(&inst))?,
        )?;
    }
    Ok(if report.is_antimagic {
        0
    } else {
        FORCED_DUPLICATES
    })
}

fn cmd_verify(graph_path: &Path, labeling_path: &Path) -> Outcome {
    let g = load_graph(graph_path)?;
    let labeling = load_labeling(&g, labeling_path)?;
    let report =
        vertex_sums(&g, &labeling).map_err(|e| Failure::new(MALFORMED_LABELING, e.to_string()))?;
    print_json(&io::sum_report_json(&g, &report))?;
    Ok(if report.is_antimagic {
        0
    } else {
        NOT_ANTIMAGIC
    })
}

fn cmd_search(args: &SearchArgs) -> Outcome {
    let g = load_graph(&args.graph)?;
    let outcome = if args.exhaustive {
        search::brute_force_search(&g, args.limit)
    } else {
        search::random_search(&g, args.budget, args.seed)
    }
    .map_err(|e| match e {
        SearchError::ZeroBudget => Failure::new(USAGE, e.to_string()),
        SearchError::TooLarge { .. } => Failure::new(BAD_INPUT, e.to_string()),
    })?;
    print_json(&io::search_outcome_json(&g, &outcome))?;
    if let (Some(file), Some(labeling)) = (&args.out, &outcome.labeling) {
        let text = io::labeling_to_json(&g, labeling, None, None)
            .map_err(|e| Failure::new(WRITE_FAILED, e.to_string()))?;
        write(file, &text)?;
    }
    Ok(match outcome.status {
        SearchStatus::Found => 0,
        SearchStatus::ExhaustedNone | SearchStatus::BudgetExceeded => NOT_ANTIMAGIC,
    })
}

fn cmd_export(graph_path: &Path, labeling_path: Option<&Path>, output: &Output) -> Outcome {
    let g = load_graph(graph_path)?;
    let text = match labeling_path {
        Some(path) => {
            let labeling = load_labeling(&g, path)?;
            let report = vertex_sums(&g, &labeling)
                .map_err(|e| Failure::new(MALFORMED_LABELING, e.to_string()))?;
            render(&g, &labeling, &report, output.format, None)?
        }
        None => match output.format {
            Format::Json => {
                io::graph_to_json(&g).map_err(|e| Failure::new(WRITE_FAILED, e.to_string()))?
            }
            Format::Dot => io::graph_to_dot(&g),
            Format::Csv => return Err(Failure::new(USAGE, "CSV export needs --labeling")),
        },
    };
    match &output.out {
        Some(file) => write(file, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}
