//! Command-line front end.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

use std::fmt::Write as _;
use std::io;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::family::{self, FamilyError};
use crate::fixtures::{self, FixtureError};
use crate::graph::{FamilySpec, Graph, GraphError};
use crate::minlen::{min_length, DEFAULT_BUDGET};
use crate::postman::{shortest_covering_walk, CoverMode, PostmanError};
use crate::span::{span, span_with_witness, MovementRule, Target};
use crate::walk::{classify, pair_distance, Walk};

/// Tag carried by every structured document.
pub const SCHEMA: &str = "graph-spans/v1";

#[derive(Debug, Parser)]
#[command(name = "graph-spans", version, about = "Spans of graphs and minimal covering walk pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertex and edge spans under each movement rule.
    Span(SpanArgs),
    /// Minimal length of a walk pair achieving each span.
    Minlen(MinlenArgs),
    /// Witness walk pairs achieving each span.
    Witness(SpanArgs),
    /// Shortest walk traversing every edge.
    Postman(PostmanArgs),
    /// Check tabulated family values against the engines.
    VerifyFamily(VerifyFamilyArgs),
    /// Validate the shipped reference walk pairs.
    VerifyFixtures(OutputArgs),
    /// Find the smallest graph whose direct vertex and edge spans differ.
    SearchGap(OutputArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Family member, e.g. `cycle:6` or `kn_plus:5`.
    #[arg(long, value_name = "NAME:PARAMS")]
    pub family: Option<FamilySpec>,
    /// Edge-list file, or graph6 if the name ends in `.g6`.
    #[arg(long, value_name = "PATH")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Strong,
    Direct,
    Cartesian,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Vertices,
    Edges,
    Both,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    #[arg(long, value_enum, default_value_t = RuleArg::All)]
    pub rule: RuleArg,
    #[arg(long, value_enum, default_value_t = TargetArg::Both)]
    pub target: TargetArg,
}

impl FilterArgs {
    fn rules(&self) -> Vec<MovementRule> {
        match self.rule {
            RuleArg::Strong => vec![MovementRule::Traditional],
            RuleArg::Direct => vec![MovementRule::Active],
            RuleArg::Cartesian => vec![MovementRule::Lazy],
            RuleArg::All => MovementRule::ALL.to_vec(),
        }
    }

    fn targets(&self) -> Vec<Target> {
        match self.target {
            TargetArg::Vertices => vec![Target::Vertices],
            TargetArg::Edges => vec![Target::Edges],
            TargetArg::Both => Target::ALL.to_vec(),
        }
    }

    fn cells(&self) -> Vec<(MovementRule, Target)> {
        let rules = self.rules();
        self.targets()
            .into_iter()
            .flat_map(|t| rules.iter().map(move |&r| (r, t)))
            .collect()
    }
}

#[derive(Debug, Args)]
pub struct SpanArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct MinlenArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub filter: FilterArgs,
    /// Maximum number of search states to store.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct PostmanArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Require the walk to end where it starts.
    #[arg(long)]
    pub closed: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyFamilyArgs {
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input: cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("graph: {0}")]
    Graph(#[from] GraphError),
    #[error("postman: {0}")]
    Postman(#[from] PostmanError),
    #[error("family: {0}")]
    Family(#[from] FamilyError),
    #[error("fixtures: {0}")]
    Fixture(#[from] FixtureError),
}

/// Whether every check in a command passed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Failed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Failed => 1,
        }
    }

    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Ok
        } else {
            Status::Failed
        }
    }
}

/// Exit code for an error.
pub const INPUT_ERROR: i32 = 2;

struct Input {
    name: String,
    graph: Graph,
}

fn load(input: &InputArgs) -> Result<Input, CliError> {
    if let Some(spec) = input.family {
        return Ok(Input {
            name: spec.to_string(),
            graph: Graph::generate(&spec)?,
        });
    }
    let path = input.file.as_ref().expect("clap requires one input");
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.clone(),
        source,
    })?;
    let graph = if path.extension().is_some_and(|e| e == "g6") {
        let line = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
        Graph::from_graph6(line)?
    } else {
        Graph::parse_edge_list(&text)?
    };
    Ok(Input {
        name: path.display().to_string(),
        graph,
    })
}

fn graph_json(input: &Input) -> Value {
    let g = &input.graph;
    json!({
        "name": input.name,
        "order": g.order(),
        "size": g.size(),
        "radius": g.radius(),
        "edges": g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect::<Vec<_>>(),
    })
}

fn graph_line(input: &Input) -> String {
    let g = &input.graph;
    format!(
        "graph {} (order {}, size {}, radius {})\n",
        input.name,
        g.order(),
        g.size(),
        g.radius()
    )
}

fn document(command: &str, body: Value) -> String {
    let mut doc = json!({ "schema": SCHEMA, "command": command });
    if let (Value::Object(d), Value::Object(b)) = (&mut doc, body) {
        d.extend(b);
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

fn walks_json(w: &(Walk, Walk)) -> Value {
    json!([w.0.to_string(), w.1.to_string()])
}

/// Checks a witness pair through the walk model.
fn witness_ok(g: &Graph, target: Target, threshold: u32, (f, h): &(Walk, Walk)) -> bool {
    let covers = |w: &Walk| match classify(g, w) {
        Ok(c) => match target {
            Target::Vertices => c.is_lazy_track,
            Target::Edges => c.is_lazy_sweep,
        },
        Err(_) => false,
    };
    covers(f) && covers(h) && pair_distance(g, f, h).is_ok_and(|d| d >= threshold)
}

/// Runs a parsed command, returning the report for standard output.
pub fn run(cli: &Cli) -> Result<(Status, String), CliError> {
    match &cli.command {
        Command::Span(a) => run_span(a),
        Command::Witness(a) => run_witness(a),
        Command::Minlen(a) => run_minlen(a),
        Command::Postman(a) => run_postman(a),
        Command::VerifyFamily(a) => run_verify_family(a),
        Command::VerifyFixtures(a) => run_verify_fixtures(a),
        Command::SearchGap(a) => run_search_gap(a),
    }
}

fn run_span(a: &SpanArgs) -> Result<(Status, String), CliError> {
    let input = load(&a.input)?;
    let g = &input.graph;
    let rules = a.filter.rules();
    let targets = a.filter.targets();
    let values: Vec<(MovementRule, Target, u32)> = a
        .filter
        .cells()
        .into_iter()
        .map(|(r, t)| (r, t, span(g, r, t).value))
        .collect();

    let out = match a.output.format {
        Format::Structured => document(
            "span",
            json!({
                "graph": graph_json(&input),
                "results": values
                    .iter()
                    .map(|&(r, t, v)| json!({ "rule": r, "target": t, "value": v }))
                    .collect::<Vec<_>>(),
            }),
        ),
        Format::Text => {
            let mut s = graph_line(&input);
            write!(s, "{:<10}", "target").unwrap();
            for r in &rules {
                write!(s, "{:>10}", r.span_name()).unwrap();
            }
            s.push('\n');
            for t in &targets {
                write!(s, "{:<10}", t.to_string()).unwrap();
                for &(_, _, v) in values.iter().filter(|c| c.1 == *t) {
                    write!(s, "{v:>10}").unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    Ok((Status::Ok, out))
}

fn run_witness(a: &SpanArgs) -> Result<(Status, String), CliError> {
    let input = load(&a.input)?;
    let g = &input.graph;
    let mut all_ok = true;
    let mut results = Vec::new();
    let mut text = graph_line(&input);
    for (rule, target) in a.filter.cells() {
        let report = span_with_witness(g, rule, target);
        let w = report.witness.expect("witness requested");
        let ok = witness_ok(g, target, report.value, &w);
        all_ok &= ok;
        writeln!(text, "{rule} {target}: span {} (length {})", report.value, w.0.len()).unwrap();
        writeln!(text, "  f: {}", w.0).unwrap();
        writeln!(text, "  g: {}", w.1).unwrap();
        if !ok {
            writeln!(text, "  witness FAILED validation").unwrap();
        }
        results.push(json!({
            "rule": rule,
            "target": target,
            "value": report.value,
            "witness": walks_json(&w),
            "valid": ok,
        }));
    }
    let out = match a.output.format {
        Format::Text => text,
        Format::Structured => document("witness", json!({ "graph": graph_json(&input), "results": results })),
    };
    Ok((Status::from_pass(all_ok), out))
}

fn run_minlen(a: &MinlenArgs) -> Result<(Status, String), CliError> {
    let input = load(&a.input)?;
    let g = &input.graph;
    let mut all_ok = true;
    let mut results = Vec::new();
    let mut text = graph_line(&input);
    for (rule, target) in a.filter.cells() {
        let r = min_length(g, rule, target, a.budget);
        if r.capped {
            writeln!(
                text,
                "{rule} {target}: span {}, length >= {} (capped after {} states)",
                r.span_value, r.length, r.explored_states
            )
            .unwrap();
        } else {
            writeln!(
                text,
                "{rule} {target}: span {}, length {} ({} states)",
                r.span_value, r.length, r.explored_states
            )
            .unwrap();
        }
        let mut entry = json!({
            "rule": rule,
            "target": target,
            "value": r.length,
            "span": r.span_value,
            "explored_states": r.explored_states,
            "capped": r.capped,
        });
        if let Some(w) = &r.witness {
            let ok = w.0.len() == r.length && witness_ok(g, target, r.span_value, w);
            all_ok &= ok;
            writeln!(text, "  f: {}", w.0).unwrap();
            writeln!(text, "  g: {}", w.1).unwrap();
            if !ok {
                writeln!(text, "  witness FAILED validation").unwrap();
            }
            entry["witness"] = walks_json(w);
        }
        results.push(entry);
    }
    let out = match a.output.format {
        Format::Text => text,
        Format::Structured => document("minlen", json!({ "graph": graph_json(&input), "results": results })),
    };
    Ok((Status::from_pass(all_ok), out))
}

fn run_postman(a: &PostmanArgs) -> Result<(Status, String), CliError> {
    let input = load(&a.input)?;
    let mode = if a.closed {
        CoverMode::Closed
    } else {
        CoverMode::FreeEndpoints
    };
    let r = shortest_covering_walk(&input.graph, mode)?;
    let out = match a.output.format {
        Format::Text => format!(
            "{}length {}\nwalk {}\n",
            graph_line(&input),
            r.length_edges,
            r.walk
        ),
        Format::Structured => document(
            "postman",
            json!({
                "graph": graph_json(&input),
                "closed": a.closed,
                "value": r.length_edges,
                "witness": r.walk.to_string(),
            }),
        ),
    };
    Ok((Status::Ok, out))
}

fn mark(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run_verify_family(a: &VerifyFamilyArgs) -> Result<(Status, String), CliError> {
    let checks = family::verify_closed_forms(&family::default_family_instances(), a.budget);
    let all_ok = checks.iter().all(|c| c.pass);
    let out = match a.output.format {
        Format::Structured => document("verify-family", json!({ "pass": all_ok, "checks": checks })),
        Format::Text => {
            let mut s = format!(
                "{:<14}{:<8}{:<11}{:<10}{:>9}{:>9}  result\n",
                "family", "kind", "rule", "target", "expected", "actual"
            );
            for c in &checks {
                let actual = match c.actual {
                    Some(v) => v.to_string(),
                    None => "capped".to_string(),
                };
                writeln!(
                    s,
                    "{:<14}{:<8}{:<11}{:<10}{:>9}{:>9}  {}",
                    c.family,
                    c.kind,
                    c.rule.span_name(),
                    c.target.to_string(),
                    c.expected,
                    actual,
                    mark(c.pass)
                )
                .unwrap();
            }
            let failed = checks.iter().filter(|c| !c.pass).count();
            writeln!(s, "{} checks, {} failed", checks.len(), failed).unwrap();
            s
        }
    };
    Ok((Status::from_pass(all_ok), out))
}

fn run_verify_fixtures(a: &OutputArgs) -> Result<(Status, String), CliError> {
    let mut reports = Vec::new();
    for fx in &fixtures::FIXTURES {
        reports.push(fixtures::verify_fixture(fx)?);
    }
    let all_ok = reports.iter().all(|r| r.pass);
    let out = match a.format {
        Format::Structured => document("verify-fixtures", json!({ "pass": all_ok, "fixtures": reports })),
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let rules: Vec<_> = r.rules.iter().map(|r| r.span_name()).collect();
                writeln!(
                    s,
                    "{} {}: length {}, distance {}, sweeps {}, lazy sweeps {}, opposite lazy {}, rules [{}]  {}",
                    r.name,
                    r.family,
                    r.length,
                    r.distance,
                    r.sweeps,
                    r.lazy_sweeps,
                    r.opposite_lazy,
                    rules.join(","),
                    mark(r.pass)
                )
                .unwrap();
            }
            s
        }
    };
    Ok((Status::from_pass(all_ok), out))
}

fn run_search_gap(a: &OutputArgs) -> Result<(Status, String), CliError> {
    let gap = family::find_minimal_direct_gap();
    let k4_plus = Graph::generate(&FamilySpec::KnPlus(4))?;
    let reference: Vec<_> = family::order_five_reference()
        .into_iter()
        .map(|(g, expected)| {
            let v = span(&g, MovementRule::Active, Target::Vertices).value;
            let e = span(&g, MovementRule::Active, Target::Edges).value;
            (g, expected, v, e)
        })
        .collect();
    let reference_ok = reference.iter().all(|&(_, x, v, e)| v == x && e == x);
    let is_k4_plus = gap
        .as_ref()
        .is_some_and(|r| r.graph.is_isomorphic(&k4_plus) == Some(true));
    let all_ok = reference_ok && is_k4_plus;

    let out = match a.format {
        Format::Structured => {
            let found = gap.as_ref().map(|r| {
                json!({
                    "graph": graph_json(&Input { name: r.graph.to_graph6(), graph: r.graph.clone() }),
                    "vertex_span": r.vertex_span,
                    "edge_span": r.edge_span,
                    "scanned": r.scanned,
                    "isomorphic_to_kn_plus_4": is_k4_plus,
                })
            });
            let refs: Vec<_> = reference
                .iter()
                .map(|(g, x, v, e)| {
                    json!({
                        "graph": graph_json(&Input { name: g.to_graph6(), graph: g.clone() }),
                        "expected": x,
                        "vertex_span": v,
                        "edge_span": e,
                    })
                })
                .collect();
            document(
                "search-gap",
                json!({ "pass": all_ok, "rule": MovementRule::Active, "found": found, "reference": refs }),
            )
        }
        Format::Text => {
            let mut s = String::new();
            match &gap {
                Some(r) => {
                    let edges: Vec<_> = r.graph.edges().iter().map(|&(u, v)| format!("v{}v{}", u + 1, v + 1)).collect();
                    writeln!(
                        s,
                        "first gap after {} graphs: order {}, size {}, graph6 {}",
                        r.scanned,
                        r.graph.order(),
                        r.graph.size(),
                        r.graph.to_graph6()
                    )
                    .unwrap();
                    writeln!(s, "edges {}", edges.join(" ")).unwrap();
                    writeln!(s, "direct vertex span {}, direct edge span {}", r.vertex_span, r.edge_span).unwrap();
                    writeln!(s, "isomorphic to kn_plus:4: {}", is_k4_plus).unwrap();
                }
                None => s.push_str("no gap found\n"),
            }
            s.push_str("order-5 reference graphs (direct vertex / edge span):\n");
            for (g, x, v, e) in &reference {
                writeln!(s, "  {:<8} expected {x}  got {v} / {e}  {}", g.to_graph6(), mark(v == x && e == x)).unwrap();
            }
            writeln!(s, "{}", mark(all_ok)).unwrap();
            s
        }
    };
    Ok((Status::from_pass(all_ok), out))
}
