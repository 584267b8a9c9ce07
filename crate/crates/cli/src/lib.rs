//! Command-line frontend for `vertex_energy`.
//!
//! [`run`] holds the whole program so it can be driven from tests; the
//! binary only forwards `std::env::args_os` and the standard streams.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use vertex_energy::characterize::{
    cycle_wiener_max_spectral, default_kernel_family, is_balanced, is_weakly_balanced, verify_ddr_equivalence,
};
use vertex_energy::energy::{parse_kernel, rational_string};
use vertex_energy::graph::{
    build_cycle, build_hypercube, build_mobius_ladder, build_path, build_petersen, build_star, cartesian_product,
    parse_edge_list, to_edge_list,
};
use vertex_energy::maxeven::{complement_jrep, is_maximally_even_definitional, j_representation, JSpec};
use vertex_energy::search::{
    brute_force_extremal, is_local_maximizer, is_local_minimizer, local_search, EnumConfig, DEFAULT_ENUM_CAP,
};
use vertex_energy::{CyclicVertexSet, Direction, Graph, ObjectiveKind, ObjectiveSpec, VertexSet};

/// Environment variable overriding the `C(n, m)` enumeration cap.
pub const CAP_ENV: &str = "EXTREMAL_ENUM_CAP";

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "vertex-energy", version, about = "Exact distance energies of vertex sets in small graphs")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a graph as an edge list, JSON or DOT
    Gen {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Vertices to highlight in DOT output
        #[arg(long)]
        set: Option<String>,
    },
    /// Evaluate an objective on one vertex set
    Energy {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        set: String,
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustive search for all optimal sets of a given size
    Extremal {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Refuse to enumerate more than this many subsets (overrides EXTREMAL_ENUM_CAP)
        #[arg(long)]
        cap: Option<u128>,
    },
    /// First-improvement local search from a start set
    LocalSearch {
        #[command(flatten)]
        source: GraphSource,
        #[command(flatten)]
        objective: ObjectiveArgs,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        /// Start set, e.g. 0,2,4
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Test a property of a vertex set (or of the graph, for `ddr`)
    Check {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long)]
        set: Option<String>,
        #[arg(long, value_enum)]
        property: Property,
        #[command(flatten)]
        objective: ObjectiveArgs,
    },
    /// Print the J-representation {⌊(n·i + r)/m⌋ : 0 <= i < m}
    Jrep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        /// Print the complement instead, via its own J-parameters
        #[arg(long)]
        complement: bool,
    },
    /// Exhaustively check the complement identity and distance degree regularity
    Verify {
        #[command(flatten)]
        source: GraphSource,
        /// Kernel table to check instead of the default family
        #[arg(long)]
        kernel_file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct GraphSource {
    /// Builtin graph: cycle:N, path:N, hypercube:D, mobius:K (2K vertices),
    /// star:K (K leaves), petersen, product:SPEC,SPEC
    #[arg(long)]
    graph: Option<String>,
    /// Edge-list file: a header line `n m`, then `m` lines `u v`
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ObjectiveArgs {
    #[arg(long, value_enum, default_value_t = ObjectiveName::Wiener)]
    objective: ObjectiveName,
    /// Kernel table for `--objective kernel`: lines `i p/q` for i = 1..D
    #[arg(long)]
    kernel_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectiveName {
    Wiener,
    Harary,
    Product,
    Kernel,
}

impl ObjectiveName {
    fn label(self) -> &'static str {
        match self {
            ObjectiveName::Wiener => "wiener",
            ObjectiveName::Harary => "harary",
            ObjectiveName::Product => "product",
            ObjectiveName::Kernel => "kernel",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    Min,
    Max,
}

impl From<DirectionArg> for Direction {
    fn from(d: DirectionArg) -> Direction {
        match d {
            DirectionArg::Min => Direction::Minimize,
            DirectionArg::Max => Direction::Maximize,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Property {
    MaximallyEven,
    Balanced,
    WeaklyBalanced,
    WienerMax,
    LocalMin,
    LocalMax,
    Ddr,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<vertex_energy::Error> for Failure {
    fn from(e: vertex_energy::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type CliResult<T> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

struct LoadedGraph {
    graph: Graph,
    label: String,
    /// Set when the graph came from `cycle:N`, enabling cycle-only features.
    cycle: Option<usize>,
}

fn parse_number(text: &str, what: &str) -> CliResult<(usize, usize)> {
    let digits = text.bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return usage(format!("expected a number after {what}"));
    }
    let value = text[..digits]
        .parse()
        .map_err(|_| Failure::Usage(format!("number after {what} is too large")))?;
    Ok((value, digits))
}

/// Parses one builtin graph from the front of `text`, returning what is left.
fn parse_builtin(text: &str) -> CliResult<(Graph, Option<usize>, &str)> {
    if let Some(rest) = text.strip_prefix("petersen") {
        return Ok((build_petersen(), None, rest));
    }
    if let Some(rest) = text.strip_prefix("product:") {
        let (left, _, rest) = parse_builtin(rest)?;
        let Some(rest) = rest.strip_prefix(',') else {
            return usage("product needs two graphs separated by ','");
        };
        let (right, _, rest) = parse_builtin(rest)?;
        return Ok((cartesian_product(&left, &right), None, rest));
    }
    let Some((name, rest)) = text.split_once(':') else {
        return usage(format!("unknown graph '{text}'"));
    };
    let (k, used) = parse_number(rest, name)?;
    let rest = &rest[used..];
    let graph = match name {
        "cycle" => build_cycle(k),
        "path" => build_path(k),
        "hypercube" => build_hypercube(k),
        "mobius" => build_mobius_ladder(k),
        "star" => build_star(k),
        _ => return usage(format!("unknown graph family '{name}'")),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    Ok((graph, (name == "cycle").then_some(k), rest))
}

fn parse_graph_spec(spec: &str) -> CliResult<(Graph, Option<usize>)> {
    let (graph, cycle, rest) = parse_builtin(spec.trim())?;
    if !rest.is_empty() {
        return usage(format!("unexpected '{rest}' after graph"));
    }
    Ok((graph, cycle))
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Compute(format!("{}: {e}", path.display())))
}

fn load_graph(source: &GraphSource) -> CliResult<LoadedGraph> {
    match (&source.graph, &source.edges) {
        (Some(spec), None) => {
            let (graph, cycle) = parse_graph_spec(spec)?;
            Ok(LoadedGraph { graph, label: spec.clone(), cycle })
        }
        (None, Some(path)) => {
            let text = read_file(path)?;
            let graph = parse_edge_list(&text).map_err(|e| Failure::Compute(format!("{}: {e}", path.display())))?;
            Ok(LoadedGraph { graph, label: path.display().to_string(), cycle: None })
        }
        _ => usage("give exactly one of --graph and --edges"),
    }
}

fn parse_set(text: &str, n: usize) -> CliResult<VertexSet> {
    let mut members = Vec::new();
    for part in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|_| Failure::Usage(format!("'{part}' is not a vertex")))?;
        if v >= n {
            return usage(format!("vertex {v} out of range for {n} vertices"));
        }
        members.push(v);
    }
    let set = VertexSet::new(members.iter().copied());
    if set.len() != members.len() {
        return usage("vertex set lists a vertex twice");
    }
    Ok(set)
}

fn objective_kind(args: &ObjectiveArgs) -> CliResult<ObjectiveKind> {
    match (args.objective, &args.kernel_file) {
        (ObjectiveName::Kernel, Some(path)) => {
            let name = path.file_stem().map_or("kernel".into(), |s| s.to_string_lossy().into_owned());
            let text = read_file(path)?;
            let kernel = parse_kernel(&name, &text).map_err(|e| Failure::Compute(format!("{}: {e}", path.display())))?;
            Ok(ObjectiveKind::Energy(kernel))
        }
        (ObjectiveName::Kernel, None) => usage("--objective kernel needs --kernel-file"),
        (_, Some(_)) => usage("--kernel-file only applies to --objective kernel"),
        (ObjectiveName::Wiener, None) => Ok(ObjectiveKind::Wiener),
        (ObjectiveName::Harary, None) => Ok(ObjectiveKind::Harary),
        (ObjectiveName::Product, None) => Ok(ObjectiveKind::DistanceProduct),
    }
}

fn enumeration_cap(flag: Option<u128>) -> CliResult<u128> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{CAP_ENV} must be a non-negative integer, got '{v}'"))),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn members(set: &VertexSet) -> Vec<usize> {
    set.as_slice().to_vec()
}

fn spaced(set: &VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Undirected DOT rendering with the `highlight` vertices filled.
pub fn emit_dot(g: &Graph, highlight: &VertexSet) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        if highlight.contains(v) {
            let _ = writeln!(out, "  {v} [style=filled, fillcolor=gray];");
        } else {
            let _ = writeln!(out, "  {v};");
        }
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn to_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct EnergyJson<'a> {
    graph: &'a str,
    set: Vec<usize>,
    objective: &'a str,
    value: String,
}

#[derive(Serialize)]
struct ExtremalJson<'a> {
    graph: &'a str,
    m: usize,
    objective: &'a str,
    direction: &'a str,
    optimum: String,
    witnesses: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    classes: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
struct LocalSearchJson<'a> {
    graph: &'a str,
    objective: &'a str,
    direction: &'a str,
    start: Vec<usize>,
    set: Vec<usize>,
    value: String,
    steps: usize,
}

#[derive(Serialize)]
struct Counterexample {
    set: Vec<usize>,
    kernel: String,
}

#[derive(Serialize)]
struct ComplementFailureJson {
    set: Vec<usize>,
    kernel: String,
    direction: &'static str,
    local: bool,
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    graph: &'a str,
    ddr: bool,
    identity_holds: bool,
    identity_counterexample: Option<Counterexample>,
    complements_preserved: bool,
    complement_failure: Option<ComplementFailureJson>,
    deleted_histograms_constant: bool,
    subsets_checked: u64,
}

fn require_cycle(g: &LoadedGraph, property: &str) -> CliResult<usize> {
    g.cycle
        .ok_or_else(|| Failure::Usage(format!("{property} needs a cycle given as --graph cycle:N")))
}

fn execute(command: Command) -> CliResult<String> {
    match command {
        Command::Gen { source, format, set } => {
            let g = load_graph(&source)?;
            let highlight = match &set {
                Some(s) => parse_set(s, g.graph.n())?,
                None => VertexSet::empty(),
            };
            Ok(match format {
                Format::Text => to_edge_list(&g.graph),
                Format::Json => to_json(&GraphJson {
                    n: g.graph.n(),
                    edges: g.graph.edges().iter().map(|&(u, v)| [u, v]).collect(),
                }),
                Format::Dot => emit_dot(&g.graph, &highlight),
            })
        }
        Command::Energy { source, set, objective, format } => {
            let g = load_graph(&source)?;
            let a = parse_set(&set, g.graph.n())?;
            let kind = objective_kind(&objective)?;
            let value = rational_string(&kind.evaluate(g.graph.distances(), &a)?);
            Ok(match format {
                Format::Json => to_json(&EnergyJson {
                    graph: &g.label,
                    set: members(&a),
                    objective: objective.objective.label(),
                    value,
                }),
                Format::Text => format!("{value}\n"),
                Format::Dot => emit_dot(&g.graph, &a),
            })
        }
        Command::Extremal { source, objective, direction, m, format, cap } => {
            let g = load_graph(&source)?;
            let kind = objective_kind(&objective)?;
            let config = EnumConfig { cap: enumeration_cap(cap)?, ..EnumConfig::default() };
            let spec = ObjectiveSpec::new(kind, direction.into());
            let mut report = brute_force_extremal(&g.graph, &spec, m, &config)?;
            if let Some(n) = g.cycle {
                report.attach_cycle_classes(n)?;
            }
            let optimum = rational_string(&report.optimum);
            Ok(match format {
                Format::Json => to_json(&ExtremalJson {
                    graph: &g.label,
                    m,
                    objective: objective.objective.label(),
                    direction: spec.direction.name(),
                    optimum,
                    witnesses: report.witnesses.iter().map(members).collect(),
                    classes: report.classes.as_ref().map(|c| c.iter().map(members).collect()),
                }),
                Format::Text => {
                    let mut out = format!("optimum {optimum}\n");
                    for w in &report.witnesses {
                        let _ = writeln!(out, "witness {}", spaced(w));
                    }
                    for c in report.classes.iter().flatten() {
                        let _ = writeln!(out, "class {}", spaced(c));
                    }
                    out
                }
                Format::Dot => emit_dot(&g.graph, &report.witnesses[0]),
            })
        }
        Command::LocalSearch { source, objective, direction, set, format } => {
            let g = load_graph(&source)?;
            let start = parse_set(&set, g.graph.n())?;
            let spec = ObjectiveSpec::new(objective_kind(&objective)?, direction.into());
            let out = local_search(&g.graph, &spec, &start)?;
            let value = rational_string(&out.value);
            Ok(match format {
                Format::Json => to_json(&LocalSearchJson {
                    graph: &g.label,
                    objective: objective.objective.label(),
                    direction: spec.direction.name(),
                    start: members(&start),
                    set: members(&out.set),
                    value,
                    steps: out.steps,
                }),
                Format::Text => format!("set {}\nvalue {value}\nsteps {}\n", spaced(&out.set), out.steps),
                Format::Dot => emit_dot(&g.graph, &out.set),
            })
        }
        Command::Check { source, set, property, objective } => {
            let g = load_graph(&source)?;
            if property == Property::Ddr {
                return Ok(format!("{}\n", g.graph.is_distance_degree_regular()));
            }
            let Some(set) = set else {
                return usage("this property needs --set");
            };
            let a = parse_set(&set, g.graph.n())?;
            let cyclic = |name: &str| -> CliResult<CyclicVertexSet> {
                let n = require_cycle(&g, name)?;
                Ok(CyclicVertexSet::from_set(n, &a)?)
            };
            let answer = match property {
                Property::MaximallyEven => is_maximally_even_definitional(&cyclic("maximally-even")?),
                Property::Balanced => is_balanced(&cyclic("balanced")?),
                Property::WeaklyBalanced => is_weakly_balanced(&cyclic("weakly-balanced")?),
                Property::WienerMax => cycle_wiener_max_spectral(&cyclic("wiener-max")?)?,
                Property::LocalMin => is_local_minimizer(&g.graph, &objective_kind(&objective)?, &a)?,
                Property::LocalMax => is_local_maximizer(&g.graph, &objective_kind(&objective)?, &a)?,
                Property::Ddr => unreachable!("handled above"),
            };
            Ok(format!("{answer}\n"))
        }
        Command::Jrep { n, m, r, complement } => {
            let spec = JSpec::new(n, m, r).map_err(|e| Failure::Usage(e.to_string()))?;
            let spec = if complement {
                complement_jrep(spec).map_err(|e| Failure::Usage(e.to_string()))?
            } else {
                spec
            };
            Ok(format!("{}\n", spaced(&j_representation(spec).to_vertex_set())))
        }
        Command::Verify { source, kernel_file, format } => {
            let g = load_graph(&source)?;
            let kernels = match &kernel_file {
                Some(path) => {
                    let args = ObjectiveArgs { objective: ObjectiveName::Kernel, kernel_file: Some(path.clone()) };
                    match objective_kind(&args)? {
                        ObjectiveKind::Energy(k) => vec![k],
                        _ => unreachable!("kernel objective"),
                    }
                }
                None => default_kernel_family(g.graph.diameter())?,
            };
            let r = verify_ddr_equivalence(&g.graph, &kernels)?;
            let json = VerifyJson {
                graph: &g.label,
                ddr: r.is_ddr,
                identity_holds: r.identity_holds,
                identity_counterexample: r
                    .identity_counterexample
                    .as_ref()
                    .map(|(s, k)| Counterexample { set: members(s), kernel: k.clone() }),
                complements_preserved: r.complements_preserved,
                complement_failure: r.complement_failure.as_ref().map(|f| ComplementFailureJson {
                    set: members(&f.set),
                    kernel: f.kernel.clone(),
                    direction: f.direction.name(),
                    local: f.kind == vertex_energy::characterize::OptimumKind::Local,
                }),
                deleted_histograms_constant: r.deleted_histograms_constant,
                subsets_checked: r.subsets_checked,
            };
            Ok(match format {
                Format::Json => to_json(&json),
                Format::Text | Format::Dot => {
                    let mut out = String::new();
                    let _ = writeln!(out, "ddr {}", json.ddr);
                    let _ = writeln!(out, "identity_holds {}", json.identity_holds);
                    if let Some(c) = &json.identity_counterexample {
                        let _ = writeln!(out, "identity_counterexample {} {}", c.kernel, spaced(&VertexSet::new(c.set.clone())));
                    }
                    let _ = writeln!(out, "complements_preserved {}", json.complements_preserved);
                    if let Some(f) = &json.complement_failure {
                        let kind = if f.local { "local" } else { "global" };
                        let _ = writeln!(
                            out,
                            "complement_failure {} {} {kind} {}",
                            f.kernel,
                            f.direction,
                            spaced(&VertexSet::new(f.set.clone()))
                        );
                    }
                    let _ = writeln!(out, "deleted_histograms_constant {}", json.deleted_histograms_constant);
                    let _ = writeln!(out, "subsets_checked {}", json.subsets_checked);
                    out
                }
            })
        }
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_COMPUTE;
            }
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_COMPUTE
        }
    }
}
