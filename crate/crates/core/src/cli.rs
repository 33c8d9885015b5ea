//! Command-line front end of the `bpd` binary.
//!
//! Every subcommand produces a [`RunReport`] that is printed as JSON with
//! sorted keys. Exit codes: 0 for yes / valid, 1 for no / invalid, 2 for errors.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::detect::{self, StructureKind};
use crate::error::{BpdError, Result};
use crate::format::{parse_bpd, read_bpd_file, write_bpd};
use crate::generate::{
    gadget, parse_dimacs, random_bounded_degree, random_formula, random_instance, reduce_sat_to_bpd, CnfFormula,
    GadgetKind,
};
use crate::graph::{normalize, ColoredGraph, Edge};
use crate::kernel::{kernelize_with, Instance, KernelConfig};
use crate::solve::{
    solve_auto, solve_branching, solve_with, AutoConfig, BranchConfig, DeletionSet, MethodChoice, Mode, SolveResult,
    BRANCHING_FACTOR,
};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bpd", version, about = "Bicolored P3 Deletion: solve, kernelize, detect, generate, verify, bench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide (`--k`) or minimize (`--optimize`) the number of deletions.
    Solve(SolveArgs),
    /// Apply the reduction rules and print the kernel with its trace.
    Kernelize(KernelizeArgs),
    /// Count forbidden structures and report the first witness of each kind.
    Detect(DetectArgs),
    /// Write instances: SAT reductions, gadgets, random graphs.
    #[command(subcommand)]
    Generate(GenerateCommand),
    /// Check a deletion set against a graph.
    Verify(VerifyArgs),
    /// Search-tree sizes over a corpus, next to 1.8393^k.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, conflicts_with = "optimize", required_unless_present = "optimize", allow_negative_numbers = true)]
    pub k: Option<i64>,
    #[arg(long)]
    pub optimize: bool,
    /// auto, branch, vc, deg2, monofree or oracle.
    #[arg(long, default_value = "auto")]
    pub method: String,
    /// Explore the top of the search tree on several threads (see `BPD_THREADS`).
    #[arg(long)]
    pub parallel: bool,
    /// Also apply the bridge rule during kernelization.
    #[arg(long)]
    pub bridge_rule: bool,
    /// Print the report on a single line.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct KernelizeArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, allow_negative_numbers = true)]
    pub k: i64,
    #[arg(long)]
    pub bridge_rule: bool,
    /// Write the kernel graph here instead of embedding it in the report.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DetectArgs {
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum GenerateCommand {
    /// Reduce a (3,4)-CNF formula, read from DIMACS or drawn at random.
    Sat(SatArgs),
    /// One of: variable, clause, lc, lo, iiz, hourglass, alternating_cycle:<len>.
    Gadget(GadgetArgs),
    /// Erdős–Rényi graph with independently colored edges.
    Random(RandomArgs),
}

#[derive(Debug, Args)]
pub struct SatArgs {
    #[arg(long, conflicts_with_all = ["vars", "clauses"])]
    pub cnf: Option<PathBuf>,
    #[arg(long, requires = "clauses")]
    pub vars: Option<usize>,
    #[arg(long, requires = "vars")]
    pub clauses: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Write the gadget layout (vertex roles) as JSON.
    #[arg(long)]
    pub layout: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GadgetArgs {
    pub kind: String,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: f64,
    /// Probability that an edge is blue.
    #[arg(long, default_value_t = 0.5)]
    pub blue: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// JSON with `deleted_edges` (and optionally `k`), or a bare edge list.
    #[arg(long)]
    pub solution: PathBuf,
    /// Budget; overrides the one stored in the solution file.
    #[arg(long, allow_negative_numbers = true)]
    pub k: Option<i64>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Directory of `.bpd` files.
    #[arg(long, conflicts_with = "generate", required_unless_present = "generate")]
    pub corpus: Option<PathBuf>,
    /// `disjoint_p3:<from>..<to>`, `gadget:<kind>`, `random:n=..,p=..,blue=..,count=..`
    /// or `sat:vars=..,clauses=..,count=..`.
    #[arg(long)]
    pub generate: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Branching rules and the nice endgame only, no pruning.
    #[arg(long)]
    pub plain: bool,
    #[arg(long)]
    pub parallel: bool,
    /// Print a CSV table instead of JSON.
    #[arg(long)]
    pub csv: bool,
}

/// Output of one subcommand.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the canonical input (graph in `bpd v1` form plus parameters).
    pub input_digest: String,
    pub version: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub payload: Map<String, Value>,
}

impl RunReport {
    fn new(command: &str, digest: String, seed: Option<u64>, payload: Value) -> RunReport {
        let payload = match payload {
            Value::Object(map) => map,
            other => Map::from_iter([("result".to_string(), other)]),
        };
        RunReport {
            command: command.to_string(),
            input_digest: digest,
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed,
            payload,
        }
    }

    /// JSON with keys sorted at every level.
    pub fn to_json(&self, compact: bool) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        if compact {
            v.to_string()
        } else {
            serde_json::to_string_pretty(&v).expect("report serializes")
        }
    }
}

/// Result of running one command: exit code, report, and how to print it.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub report: RunReport,
    pub compact: bool,
    /// Printed instead of the JSON report when set (CSV tables).
    pub text: Option<String>,
}

impl Outcome {
    fn json(code: i32, report: RunReport) -> Outcome {
        Outcome {
            code,
            report,
            compact: false,
            text: None,
        }
    }

    pub fn render(&self) -> String {
        match &self.text {
            Some(t) => t.clone(),
            None => self.report.to_json(self.compact),
        }
    }
}

pub fn digest(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p.as_bytes());
        h.update([0u8]);
    }
    hex::encode(h.finalize())
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Kernelize(a) => cmd_kernelize(a),
        Command::Detect(a) => cmd_detect(a),
        Command::Generate(g) => cmd_generate(g),
        Command::Verify(a) => cmd_verify(a),
        Command::Bench(a) => cmd_bench(a),
    }
}

/// Parses `args` (including the program name), runs the command, prints the
/// outcome and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_YES };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(out) => {
            use std::io::Write;
            // A closed pipe downstream is not an error of the command.
            let _ = writeln!(std::io::stdout().lock(), "{}", out.render());
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn load(path: &Path) -> Result<(ColoredGraph, String)> {
    let g = read_bpd_file(path)?;
    let canon = write_bpd(&g);
    Ok((g, canon))
}

fn pairs(edges: &[Edge]) -> Value {
    Value::Array(edges.iter().map(|e| json!([e.u, e.v])).collect())
}

fn stats_json(r: &SolveResult) -> Value {
    json!({
        "nodes_expanded": r.stats.nodes_expanded,
        "max_depth": r.stats.max_depth,
        "rule_counts": r.stats.rule_counts,
        "time_ms": r.stats.time_ms(),
    })
}

fn solve_payload(r: &SolveResult) -> Value {
    let deleted = r.solution.as_ref().map(|s| pairs(&s.edges)).unwrap_or(json!([]));
    let mut out = json!({
        "answer": r.answer,
        "k": r.k.or(r.optimum.map(|o| o as i64)),
        "deleted_edges": deleted,
        "method": r.method,
        "stats": stats_json(r),
    });
    if let Some(opt) = r.optimum {
        out["optimum"] = json!(opt);
    }
    out
}

pub fn cmd_solve(a: &SolveArgs) -> Result<Outcome> {
    let (g, canon) = load(&a.input)?;
    let choice: MethodChoice = a.method.parse()?;
    let mode = match a.k {
        Some(k) => Mode::Decide(k),
        None => Mode::Optimize,
    };
    let cfg = AutoConfig {
        branch: BranchConfig {
            parallel: a.parallel,
            ..BranchConfig::default()
        },
        kernel: KernelConfig {
            bridge_rule: a.bridge_rule,
        },
    };
    let r = solve_with(&g, mode, choice, &cfg)?;
    let params = match mode {
        Mode::Decide(k) => format!("k={k} method={}", a.method),
        Mode::Optimize => format!("optimize method={}", a.method),
    };
    let report = RunReport::new("solve", digest(&[&canon, &params]), None, solve_payload(&r));
    let mut out = Outcome::json(if r.answer { EXIT_YES } else { EXIT_NO }, report);
    out.compact = a.json;
    Ok(out)
}

pub fn cmd_kernelize(a: &KernelizeArgs) -> Result<Outcome> {
    let (g, canon) = load(&a.input)?;
    let cfg = KernelConfig {
        bridge_rule: a.bridge_rule,
    };
    let (kernel, trace) = kernelize_with(&Instance::new(g.clone(), a.k), cfg);
    let text = write_bpd(&kernel.graph);
    let mut payload = json!({
        "k": a.k,
        "kernel_k": kernel.k,
        "no_instance": kernel.is_no_instance(),
        "original": {"n": g.n(), "m": g.m()},
        "reduced": {"n": kernel.graph.n(), "m": kernel.graph.m()},
        "trace": trace,
    });
    match &a.output {
        Some(path) => {
            std::fs::write(path, &text)?;
            payload["kernel_file"] = json!(path.display().to_string());
        }
        None => payload["kernel"] = json!(text),
    }
    let params = format!("k={} bridge_rule={}", a.k, a.bridge_rule);
    let report = RunReport::new("kernelize", digest(&[&canon, &params]), None, payload);
    Ok(Outcome::json(EXIT_YES, report))
}

/// Every match of `kind`.
pub fn structures_of(g: &ColoredGraph, kind: StructureKind) -> Vec<detect::ForbiddenStructure> {
    match kind {
        StructureKind::BicoloredP3 => detect::enumerate_bicolored_p3(g),
        StructureKind::MonoP3 => detect::enumerate_mono_p3(g),
        StructureKind::MonoK3 => detect::enumerate_mono_k3(g),
        StructureKind::BicoloredK3 => detect::enumerate_bicolored_k3(g),
        StructureKind::EndangeredK3 => detect::enumerate_endangered_k3(g),
        StructureKind::MultiConflictEdge => detect::enumerate_multi_conflict(g),
        pattern => detect::enumerate_pattern(g, pattern),
    }
}

pub fn cmd_detect(a: &DetectArgs) -> Result<Outcome> {
    let (g, canon) = load(&a.input)?;
    let mut counts = Map::new();
    let mut first = Map::new();
    for kind in StructureKind::ALL {
        let found = structures_of(&g, kind);
        counts.insert(kind.name().into(), json!(found.len()));
        first.insert(
            kind.name().into(),
            found.first().map_or(Value::Null, |s| {
                json!({"witness": s.witness, "orientation": s.orientation, "edges": s.edges})
            }),
        );
    }
    let payload = json!({
        "n": g.n(),
        "m": g.m(),
        "counts": counts,
        "first": first,
        "classes": detect::classify(&g),
        "nice": detect::is_nice(&g),
        "branch_structure": detect::find_branch_structure(&g).map(|s| s.kind.name()),
    });
    Ok(Outcome::json(EXIT_YES, RunReport::new("detect", digest(&[&canon]), None, payload)))
}

fn emit_graph(g: &ColoredGraph, output: &Option<PathBuf>, payload: &mut Value) -> Result<()> {
    let text = write_bpd(g);
    payload["n"] = json!(g.n());
    payload["m"] = json!(g.m());
    payload["graph_digest"] = json!(digest(&[&text]));
    match output {
        Some(path) => {
            std::fs::write(path, &text)?;
            payload["output"] = json!(path.display().to_string());
        }
        None => payload["graph"] = json!(text),
    }
    Ok(())
}

pub fn cmd_generate(cmd: &GenerateCommand) -> Result<Outcome> {
    match cmd {
        GenerateCommand::Sat(a) => {
            let (f, seed) = match (&a.cnf, a.vars, a.clauses) {
                (Some(path), _, _) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| BpdError::Io(format!("{}: {e}", path.display())))?;
                    (parse_dimacs(&text)?, None)
                }
                (None, Some(v), Some(c)) => {
                    let f = random_formula(v, c, a.seed).ok_or_else(|| {
                        BpdError::Formula(format!("no (3,4) formula with {v} variables and {c} clauses"))
                    })?;
                    (f, Some(a.seed))
                }
                _ => return Err(BpdError::Precondition("give --cnf or both --vars and --clauses".into())),
            };
            let (inst, layout) = reduce_sat_to_bpd(&f)?;
            let mut payload = json!({
                "kind": "sat",
                "k": inst.k,
                "variables": f.num_vars,
                "clauses": f.clauses.len(),
                "max_degree": inst.graph.max_degree(),
            });
            emit_graph(&inst.graph, &a.output, &mut payload)?;
            if let Some(path) = &a.layout {
                std::fs::write(path, serde_json::to_string_pretty(&layout).expect("layout serializes"))?;
                payload["layout"] = json!(path.display().to_string());
            }
            let report = RunReport::new("generate", digest(&["sat", &f.to_dimacs()]), seed, payload);
            Ok(Outcome::json(EXIT_YES, report))
        }
        GenerateCommand::Gadget(a) => {
            let kind: GadgetKind = a.kind.parse()?;
            let g = gadget(kind)?;
            let mut payload = json!({"kind": "gadget", "gadget": kind.to_string()});
            emit_graph(&g, &a.output, &mut payload)?;
            let report = RunReport::new("generate", digest(&["gadget", &kind.to_string()]), None, payload);
            Ok(Outcome::json(EXIT_YES, report))
        }
        GenerateCommand::Random(a) => {
            let g = match a.max_degree {
                Some(d) => random_bounded_degree(a.n, a.p, a.blue, d, a.seed)?,
                None => random_instance(a.n, a.p, a.blue, a.seed)?,
            };
            let spec = format!("n={} p={} blue={} max_degree={:?}", a.n, a.p, a.blue, a.max_degree);
            let mut payload = json!({"kind": "random", "params": spec});
            emit_graph(&g, &a.output, &mut payload)?;
            let report = RunReport::new("generate", digest(&["random", &spec]), Some(a.seed), payload);
            Ok(Outcome::json(EXIT_YES, report))
        }
    }
}

/// Reads `[[u, v], ...]`, optionally with a third color entry per edge.
fn parse_edge_list(v: &Value) -> Result<Vec<(usize, usize)>> {
    let bad = |why: &str| BpdError::Precondition(format!("malformed solution: {why}"));
    let list = v.as_array().ok_or_else(|| bad("deleted_edges is not an array"))?;
    list.iter()
        .map(|item| {
            let pair = item.as_array().ok_or_else(|| bad("edge is not an array"))?;
            if pair.len() < 2 || pair.len() > 3 {
                return Err(bad("edge must be [u, v] or [u, v, color]"));
            }
            let id = |x: &Value| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("vertex id is not an integer"));
            Ok((id(&pair[0])?, id(&pair[1])?))
        })
        .collect()
}

pub fn cmd_verify(a: &VerifyArgs) -> Result<Outcome> {
    let (g, canon) = load(&a.input)?;
    let text = std::fs::read_to_string(&a.solution)
        .map_err(|e| BpdError::Io(format!("{}: {e}", a.solution.display())))?;
    let doc: Value = serde_json::from_str(&text)
        .map_err(|e| BpdError::Precondition(format!("malformed solution: {e}")))?;
    let (list, stored_k) = match &doc {
        Value::Array(_) => (parse_edge_list(&doc)?, None),
        Value::Object(map) => {
            let edges = map
                .get("deleted_edges")
                .ok_or_else(|| BpdError::Precondition("malformed solution: no deleted_edges".into()))?;
            (parse_edge_list(edges)?, map.get("k").and_then(Value::as_i64))
        }
        _ => return Err(BpdError::Precondition("malformed solution: expected an object or array".into())),
    };
    let k = a.k.or(stored_k).unwrap_or(list.len() as i64);

    let mut edges = Vec::with_capacity(list.len());
    let mut problem = None;
    for &(u, v) in &list {
        match (u < g.n() && v < g.n()).then(|| g.edge(u, v)).flatten() {
            Some(e) => edges.push(e),
            None => {
                problem = Some(BpdError::MissingEdge(normalize(u, v).0, normalize(u, v).1).to_string());
                break;
            }
        }
    }
    let set = DeletionSet::new(edges);
    if problem.is_none() && set.len() != list.len() {
        problem = Some("deletion set lists an edge twice".into());
    }
    if problem.is_none() {
        problem = set.verify(&g, k).err().map(|e| e.to_string());
    }
    let valid = problem.is_none();
    let mut payload = json!({"valid": valid, "k": k, "size": list.len()});
    if let Some(p) = problem {
        payload["reason"] = json!(p);
    }
    let report = RunReport::new("verify", digest(&[&canon, &format!("k={k}"), &text]), None, payload);
    Ok(Outcome::json(if valid { EXIT_YES } else { EXIT_NO }, report))
}

/// One instance of a benchmark corpus.
pub struct BenchInstance {
    pub name: String,
    pub graph: ColoredGraph,
}

fn spec_params(rest: &str) -> Result<std::collections::BTreeMap<String, String>> {
    rest.split(',')
        .filter(|s| !s.is_empty())
        .map(|kv| {
            kv.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| BpdError::Precondition(format!("expected key=value, got `{kv}`")))
        })
        .collect()
}

fn param<T: std::str::FromStr>(
    map: &std::collections::BTreeMap<String, String>,
    key: &str,
    default: Option<T>,
) -> Result<T> {
    match map.get(key) {
        Some(s) => s
            .parse()
            .map_err(|_| BpdError::Precondition(format!("bad value `{s}` for `{key}`"))),
        None => default.ok_or_else(|| BpdError::Precondition(format!("missing `{key}`"))),
    }
}

/// Builds the instances named by a generator spec (see [`BenchArgs::generate`]).
pub fn bench_corpus(spec: &str, seed: u64) -> Result<Vec<BenchInstance>> {
    let (kind, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let mut out = Vec::new();
    match kind {
        "disjoint_p3" => {
            let (lo, hi) = rest
                .split_once("..")
                .ok_or_else(|| BpdError::Precondition(format!("expected <from>..<to>, got `{rest}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| BpdError::Precondition(format!("bad count `{s}`")))
            };
            for c in parse(lo)?..=parse(hi)? {
                let edges = (0..c).flat_map(|i| {
                    [
                        (3 * i, 3 * i + 1, crate::Color::Blue),
                        (3 * i + 1, 3 * i + 2, crate::Color::Red),
                    ]
                });
                out.push(BenchInstance {
                    name: format!("disjoint_p3_{c}"),
                    graph: ColoredGraph::from_edges(3 * c, edges)?,
                });
            }
        }
        "gadget" => {
            let g = gadget(rest.parse()?)?;
            out.push(BenchInstance {
                name: format!("gadget_{rest}"),
                graph: g,
            });
        }
        "random" => {
            let p = spec_params(rest)?;
            let n: usize = param(&p, "n", None)?;
            let prob: f64 = param(&p, "p", Some(0.5))?;
            let blue: f64 = param(&p, "blue", Some(0.5))?;
            let count: u64 = param(&p, "count", Some(10))?;
            for i in 0..count {
                out.push(BenchInstance {
                    name: format!("random_n{n}_{i}"),
                    graph: random_instance(n, prob, blue, seed.wrapping_add(i))?,
                });
            }
        }
        "sat" => {
            let p = spec_params(rest)?;
            let vars: usize = param(&p, "vars", None)?;
            let clauses: usize = param(&p, "clauses", None)?;
            let count: u64 = param(&p, "count", Some(5))?;
            for i in 0..count {
                let f: CnfFormula = random_formula(vars, clauses, seed.wrapping_add(i)).ok_or_else(|| {
                    BpdError::Formula(format!("no (3,4) formula with {vars} variables and {clauses} clauses"))
                })?;
                out.push(BenchInstance {
                    name: format!("sat_x{vars}_c{clauses}_{i}"),
                    graph: reduce_sat_to_bpd(&f)?.0.graph,
                });
            }
        }
        other => return Err(BpdError::Precondition(format!("unknown generator `{other}`"))),
    }
    Ok(out)
}

fn read_corpus(dir: &Path) -> Result<Vec<BenchInstance>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(|e| BpdError::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "bpd"))
        .collect();
    files.sort();
    files
        .into_iter()
        .map(|p| {
            let text = std::fs::read_to_string(&p)?;
            Ok(BenchInstance {
                name: p.file_stem().unwrap_or_default().to_string_lossy().into_owned(),
                graph: parse_bpd(&text)?,
            })
        })
        .collect()
}

/// One row of the benchmark table.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    /// The optimum; the search is run as a decision at this budget.
    pub k: usize,
    pub nodes_expanded: u64,
    pub reference: f64,
    pub ratio: f64,
    pub time_ms: f64,
}

pub fn bench_rows(corpus: &[BenchInstance], cfg: &BranchConfig) -> Result<Vec<BenchRow>> {
    corpus
        .iter()
        .map(|inst| {
            let opt = solve_auto(&inst.graph, Mode::Optimize, &AutoConfig::default())?
                .optimum
                .expect("optimization reports an optimum");
            let start = Instant::now();
            let r = solve_branching(&inst.graph, Mode::Decide(opt as i64), cfg)?;
            let reference = BRANCHING_FACTOR.powi(opt as i32);
            Ok(BenchRow {
                name: inst.name.clone(),
                n: inst.graph.n(),
                m: inst.graph.m(),
                k: opt,
                nodes_expanded: r.stats.nodes_expanded,
                reference,
                ratio: r.stats.nodes_expanded as f64 / reference,
                time_ms: start.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect()
}

pub fn cmd_bench(a: &BenchArgs) -> Result<Outcome> {
    let (corpus, source) = match (&a.corpus, &a.generate) {
        (Some(dir), _) => (read_corpus(dir)?, dir.display().to_string()),
        (None, Some(spec)) => (bench_corpus(spec, a.seed)?, spec.clone()),
        _ => return Err(BpdError::Precondition("give --corpus or --generate".into())),
    };
    if corpus.is_empty() {
        return Err(BpdError::Precondition(format!("empty corpus: {source}")));
    }
    let mut cfg = if a.plain { BranchConfig::plain() } else { BranchConfig::default() };
    cfg.parallel = a.parallel;
    let rows = bench_rows(&corpus, &cfg)?;

    let total: u64 = rows.iter().map(|r| r.nodes_expanded).sum();
    let max_ratio = rows.iter().map(|r| r.ratio).fold(0.0, f64::max);
    let payload = json!({
        "source": source,
        "config": if a.plain { "plain" } else { "default" },
        "branching_factor": BRANCHING_FACTOR,
        "instances": rows,
        "aggregate": {
            "count": rows.len(),
            "total_nodes": total,
            "max_ratio": max_ratio,
            "mean_ratio": rows.iter().map(|r| r.ratio).sum::<f64>() / rows.len() as f64,
        },
    });
    let canon: Vec<String> = corpus.iter().map(|i| write_bpd(&i.graph)).collect();
    let canon_refs: Vec<&str> = canon.iter().map(String::as_str).collect();
    let seed = a.generate.as_ref().map(|_| a.seed);
    let report = RunReport::new("bench", digest(&canon_refs), seed, payload);
    let text = a.csv.then(|| {
        let mut s = String::from("name,n,m,k,nodes_expanded,reference,ratio,time_ms\n");
        for r in &rows {
            s.push_str(&format!(
                "{},{},{},{},{},{:.3},{:.6},{:.3}\n",
                r.name, r.n, r.m, r.k, r.nodes_expanded, r.reference, r.ratio, r.time_ms
            ));
        }
        s.pop();
        s
    });
    Ok(Outcome {
        code: EXIT_YES,
        report,
        compact: false,
        text,
    })
}
