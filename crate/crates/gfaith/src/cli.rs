//! The `gfaith` command line. [`run`] returns the exit code and the text for
//! standard output and standard error so that it can be driven in-process.
//!
//! Exit codes: 0 when the check passes or the decision is "yes", 1 when it
//! fails or is "no", 2 for usage and input errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use gfaith_core::faithfulness::{
    accepts, decide_graphical_with, graphical_axiom_failure, is_faithful, is_markov, is_minimally_markov,
    is_pairwise_markov, restricted_graphical_with, ClassFilter, DecideOptions, FaithfulnessVerdict,
};
use gfaith_core::gaussian::{model_from_matrix, RationalMatrix, Role};
use gfaith_core::graph::{InducedOptions, MixedGraph, DEFAULT_MODEL_CAP};
use gfaith_core::model::{
    alpha, check_dag_ordered_stabilities, check_downward_stability, check_ordered_downward_stability,
    check_ordered_upward_stability, check_upward_stability, AxiomChecker, CheckReport, IndependenceModel, Limits,
    Property, Violation, Witness, MAX_MODEL_NODES,
};
use gfaith_core::nodeset::{Ground, NodeSet};
use gfaith_core::preorder::{direct_skeleton, is_compatible, Candidate, Directing, Preorder, DEFAULT_EDGE_CAP, MAX_EDGE_CAP};
use serde_json::{json, Value};

use crate::format::{self, write_graph, write_model, write_preorder, write_statement};
use crate::json;

#[derive(Debug, Parser)]
#[command(name = "gfaith", version, about = "Separation, Markov properties and faithfulness for mixed graphs and independence models")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Node cap for materialised models and axiom scans (at most 12).
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
    /// Cap on skeleton edges for preorder enumeration (at most 14).
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_EDGE_CAP)]
    edge_cap: usize,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Report which graph classes a graph belongs to.
    Classify {
        #[arg(long)]
        graph: PathBuf,
        /// Fail unless the graph is in this class.
        #[arg(long, value_enum)]
        require: Option<GraphClass>,
    },
    /// Decide whether C separates A from B.
    Separate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        a: Vec<String>,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        b: Vec<String>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        given: Vec<String>,
    },
    /// Print the independence model induced by a graph.
    Model {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Check the graphoid axioms and singleton-transitivity.
    Axioms {
        #[command(flatten)]
        model: ModelArg,
        /// Properties to check; all by default.
        #[arg(long, value_enum, value_delimiter = ',')]
        property: Vec<AxiomName>,
    },
    /// Check ordered stabilities w.r.t. a preorder or a graph's minimal
    /// preorder, or plain upward and downward stability without either.
    Stability {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, conflicts_with = "graph")]
        preorder: Option<PathBuf>,
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Use the DAG forms (the preorder must be a partial order).
        #[arg(long)]
        dag: bool,
    },
    /// Decide a Markov property of a model w.r.t. a graph.
    Markov {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MarkovKind::Global)]
        kind: MarkovKind,
    },
    /// Decide whether a model and a graph are faithful.
    Faithful {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long)]
        graph: PathBuf,
    },
    /// Decide whether some graph is faithful to a model and list all of them.
    Graphical {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = Filter::Ang)]
        class_filter: Filter,
        /// Test a single preorder instead of searching.
        #[arg(long, conflicts_with = "class_filter")]
        preorder: Option<PathBuf>,
        /// Worker threads for the search (0: one per core).
        #[arg(long, value_name = "N")]
        parallel: Option<usize>,
    },
    /// Independence model of a Gaussian given by a rational matrix.
    Gaussian {
        #[arg(long, value_name = "CSV")]
        cov: PathBuf,
        #[arg(long, value_enum, default_value_t = MatrixRole::Covariance)]
        role: MatrixRole,
        #[arg(long)]
        print_model: bool,
        /// Decide faithfulness to this graph.
        #[arg(long, conflicts_with = "decide")]
        graph: Option<PathBuf>,
        /// Decide graphicality.
        #[arg(long)]
        decide: bool,
    },
    /// Marginalise and condition a model.
    Alpha {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        marginalize: Vec<String>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        condition: Vec<String>,
        /// Also decide graphicality of the result.
        #[arg(long)]
        decide: bool,
    },
}

#[derive(Debug, Args)]
struct ModelArg {
    /// Independence model file.
    #[arg(long)]
    model: PathBuf,
    /// Read the file as elementary statements and add every set statement
    /// whose elementary parts all hold.
    #[arg(long)]
    extend: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphClass {
    Cmg,
    Ang,
    Ug,
    Bg,
    Dag,
    Ag,
    Maximal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxiomName {
    SemiGraphoid,
    Intersection,
    Composition,
    SingletonTransitivity,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MarkovKind {
    Global,
    Pairwise,
    Minimal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Filter {
    Ang,
    Ug,
    Bg,
    Dag,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixRole {
    Covariance,
    Concentration,
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Run = Result<(bool, String, Value), Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { code, stdout, stderr };
        }
    };
    match execute(&cli) {
        Ok((yes, text, value)) => Outcome {
            code: if yes { 0 } else { 1 },
            stdout: if cli.json {
                let mut s = serde_json::to_string_pretty(&value).expect("serialisable");
                s.push('\n');
                s
            } else {
                text
            },
            stderr: String::new(),
        },
        Err(Failure(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> Result<T, format::ParseError>) -> Result<T, Failure> {
    parse(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn limits(cli: &Cli) -> Result<Limits, Failure> {
    match cli.cap {
        None => Ok(Limits::default()),
        Some(c) if c > MAX_MODEL_NODES => Err(Failure(format!("--cap may be at most {MAX_MODEL_NODES}"))),
        Some(c) => Ok(Limits {
            set_axiom_nodes: c,
            elementary_axiom_nodes: c,
        }),
    }
}

fn decide_options(cli: &Cli) -> Result<DecideOptions, Failure> {
    if cli.edge_cap > MAX_EDGE_CAP {
        return Err(Failure(format!("--edge-cap may be at most {MAX_EDGE_CAP}")));
    }
    Ok(DecideOptions {
        limits: limits(cli)?,
        edge_cap: cli.edge_cap,
    })
}

fn induced(cli: &Cli, g: &MixedGraph) -> Result<IndependenceModel, Failure> {
    let cap = cli.cap.unwrap_or(DEFAULT_MODEL_CAP);
    Ok(g.induced_model_with(InducedOptions {
        cap,
        ..InducedOptions::default()
    })?)
}

fn load_model(arg: &ModelArg) -> Result<IndependenceModel, Failure> {
    let m = load(&arg.model, format::parse_model)?;
    if !arg.extend {
        return Ok(m);
    }
    Ok(IndependenceModel::from_elementary(m.ground().clone(), |i, j, c| {
        m.contains_elementary(i, j, c)
    })?)
}

/// The model re-indexed onto the graph's node order.
fn align(m: &IndependenceModel, g: &MixedGraph) -> Result<IndependenceModel, Failure> {
    if !m.ground().same_labels(g.ground()) {
        return Err(Failure(format!(
            "model nodes {:?} and graph nodes {:?} differ",
            m.ground().labels(),
            g.ground().labels()
        )));
    }
    Ok(m.remap(g.ground())?)
}

fn set(g: &Ground, labels: &[String]) -> Result<NodeSet, Failure> {
    Ok(g.set_of(labels)?)
}

fn describe_witness(g: &Ground, w: &Witness) -> String {
    let l = |s: NodeSet| format!("{{{}}}", g.labels_of(s).join(","));
    match *w {
        Witness::Sets { a, b, c, d } => format!("A={} B={} C={} D={}", l(a), l(b), l(c), l(d)),
        Witness::Elementary { i, j, k, c } => {
            format!("i={} j={} k={} C={}", g.label(i), g.label(j), g.label(k), l(c))
        }
        Witness::Search { candidates } => format!("{candidates} compatible preorders examined"),
    }
}

fn describe_violation(g: &Ground, v: &Violation) -> String {
    format!("{} fails at {}", v.axiom, describe_witness(g, &v.witness))
}

fn report_text(g: &Ground, r: &CheckReport, out: &mut String) {
    if r.passed() {
        let _ = writeln!(out, "{}: holds", r.property);
    } else {
        let _ = writeln!(out, "{}: fails ({} violations)", r.property, r.count);
        for v in &r.violations {
            let _ = writeln!(out, "  {}", describe_violation(g, v));
        }
    }
}

fn reports(g: &Ground, rs: &[CheckReport]) -> (bool, String, Value) {
    let mut text = String::new();
    for r in rs {
        report_text(g, r, &mut text);
    }
    let ok = rs.iter().all(CheckReport::passed);
    let value = json!({
        "passed": ok,
        "reports": rs.iter().map(|r| json::report(g, r)).collect::<Vec<_>>(),
    });
    (ok, text, value)
}

fn verdict_text(g: &Ground, v: &FaithfulnessVerdict) -> String {
    let mut out = String::new();
    if v.graphical {
        let _ = writeln!(out, "graphical: {} faithful graph(s)", v.witnesses.len());
        for (k, (w, p)) in v.witnesses.iter().zip(&v.preorders).enumerate() {
            let _ = writeln!(out, "\n# witness {}", k + 1);
            out.push_str(&write_graph(w));
            let _ = writeln!(out, "# preorder");
            for line in write_preorder(p).lines().skip(1) {
                let _ = writeln!(out, "#   {line}");
            }
        }
    } else {
        let _ = writeln!(out, "not graphical");
        if let Some(f) = &v.failure {
            let _ = writeln!(out, "  {}", describe_violation(g, f));
        }
    }
    out
}

fn verdict(g: &Ground, v: FaithfulnessVerdict) -> (bool, String, Value) {
    (v.graphical, verdict_text(g, &v), json::verdict(g, &v))
}

fn yes_no(yes: bool, what: &str, value: Value) -> (bool, String, Value) {
    let text = if yes { format!("{what}\n") } else { format!("not {what}\n") };
    (yes, text, value)
}

/// Graphicality via one given preorder: conditions of the search applied to
/// that preorder alone.
fn single_preorder(j: &IndependenceModel, p: &Preorder, opts: DecideOptions) -> Result<FaithfulnessVerdict, Failure> {
    let fail = |axiom, witness| FaithfulnessVerdict {
        graphical: false,
        witnesses: Vec::new(),
        preorders: Vec::new(),
        failure: Some(Violation { axiom, witness }),
    };
    if let Some(v) = graphical_axiom_failure(j, opts.limits)? {
        return Ok(FaithfulnessVerdict {
            failure: Some(v),
            ..fail(Property::CompatiblePreorder, Witness::Search { candidates: 0 })
        });
    }
    if !is_compatible(p, j)? {
        return Ok(fail(Property::CompatiblePreorder, Witness::Search { candidates: 0 }));
    }
    for r in [check_ordered_upward_stability(j, p)?, check_ordered_downward_stability(j, p)?] {
        if let Some(v) = r.violations.into_iter().next() {
            return Ok(FaithfulnessVerdict {
                failure: Some(v),
                ..fail(Property::CompatiblePreorder, Witness::Search { candidates: 1 })
            });
        }
    }
    let graph = direct_skeleton(&j.skeleton(), p)?;
    let c = Candidate {
        preorder: p.clone(),
        graph,
        code: 0,
    };
    if !accepts(j, &c) || !is_faithful(j, &c.graph)? {
        return Ok(fail(Property::CompatiblePreorder, Witness::Search { candidates: 1 }));
    }
    Ok(FaithfulnessVerdict {
        graphical: true,
        witnesses: vec![c.graph],
        preorders: vec![c.preorder],
        failure: None,
    })
}

fn graphical(cli: &Cli, j: &IndependenceModel, filter: Filter, threads: Option<usize>) -> Result<FaithfulnessVerdict, Failure> {
    let opts = decide_options(cli)?;
    let (filter, alphabet): (ClassFilter, &[Directing]) = match filter {
        Filter::Ang => (ClassFilter::AnG, &Directing::ALL),
        Filter::Dag => (ClassFilter::Dag, &Directing::ARROWS),
        Filter::Ug => (ClassFilter::Ug, &[]),
        Filter::Bg => (ClassFilter::Bg, &[]),
    };
    Ok(match threads {
        Some(t) if !alphabet.is_empty() => crate::decide_parallel(j, alphabet, opts, t)?,
        _ if filter == ClassFilter::AnG => decide_graphical_with(j, opts)?,
        _ => restricted_graphical_with(j, filter, opts)?,
    })
}

fn execute(cli: &Cli) -> Run {
    match &cli.verb {
        Verb::Classify { graph, require } => {
            let g = load(graph, format::parse_graph)?;
            let r = g.classify();
            let mut text = String::new();
            for (name, v) in r.flags() {
                let _ = writeln!(text, "{name}: {}", if v { "yes" } else { "no" });
            }
            let m = r.is_maximal.map_or("n/a", |v| if v { "yes" } else { "no" });
            let _ = writeln!(text, "maximal: {m}");
            let ok = match require {
                None => true,
                Some(GraphClass::Cmg) => r.is_cmg,
                Some(GraphClass::Ang) => r.is_ang,
                Some(GraphClass::Ug) => r.is_ug,
                Some(GraphClass::Bg) => r.is_bg,
                Some(GraphClass::Dag) => r.is_dag,
                Some(GraphClass::Ag) => r.is_ag,
                Some(GraphClass::Maximal) => r.is_maximal == Some(true),
            };
            Ok((ok, text, json::classes(&r)))
        }
        Verb::Separate { graph, a, b, given } => {
            let g = load(graph, format::parse_graph)?;
            let gr = g.ground();
            let (a, b, c) = (set(gr, a)?, set(gr, b)?, set(gr, given)?);
            let walk = g.connecting_walk(a, b, c)?;
            let mut value = json!({ "separated": walk.is_none() });
            let mut text = String::new();
            match &walk {
                None => text.push_str("separated\n"),
                Some(w) => {
                    let path: Vec<&str> = w.nodes().iter().map(|&v| g.label(v)).collect();
                    let _ = writeln!(text, "not separated\nconnecting walk: {}", path.join(" "));
                    value["walk"] = json::walk(&g, w);
                }
            }
            Ok((walk.is_none(), text, value))
        }
        Verb::Model { graph } => {
            let g = load(graph, format::parse_graph)?;
            let m = induced(cli, &g)?;
            Ok((true, write_model(&m), json::model(&m)))
        }
        Verb::Axioms { model, property } => {
            let m = load_model(model)?;
            let ax = AxiomChecker::new(limits(cli)?);
            let all = [
                AxiomName::SemiGraphoid,
                AxiomName::Intersection,
                AxiomName::Composition,
                AxiomName::SingletonTransitivity,
            ];
            let wanted = if property.is_empty() { &all[..] } else { &property[..] };
            let mut rs = Vec::new();
            for p in all.iter().filter(|p| wanted.contains(p)) {
                rs.push(match p {
                    AxiomName::SemiGraphoid => ax.semi_graphoid(&m)?,
                    AxiomName::Intersection => ax.intersection(&m)?,
                    AxiomName::Composition => ax.composition(&m)?,
                    AxiomName::SingletonTransitivity => ax.singleton_transitivity(&m)?,
                });
            }
            Ok(reports(m.ground(), &rs))
        }
        Verb::Stability { model, preorder, graph, dag } => {
            let mut m = load_model(model)?;
            let p = match (preorder, graph) {
                (Some(path), _) => Some(load(path, format::parse_preorder)?),
                (None, Some(path)) => {
                    let g = load(path, format::parse_graph)?;
                    m = align(&m, &g)?;
                    Some(gfaith_core::preorder::minimal_preorder(&g)?)
                }
                (None, None) => None,
            };
            let rs = match p {
                None if *dag => return Err(Failure("--dag needs --preorder or --graph".into())),
                None => vec![check_upward_stability(&m), check_downward_stability(&m)],
                Some(p) => {
                    if !p.ground().same_labels(m.ground()) {
                        return Err(Failure("preorder and model nodes differ".into()));
                    }
                    let p = p.relabel(m.ground())?;
                    if *dag {
                        let (u, d) = check_dag_ordered_stabilities(&m, &p)?;
                        vec![u, d]
                    } else {
                        vec![check_ordered_upward_stability(&m, &p)?, check_ordered_downward_stability(&m, &p)?]
                    }
                }
            };
            Ok(reports(m.ground(), &rs))
        }
        Verb::Markov { model, graph, kind } => {
            let g = load(graph, format::parse_graph)?;
            let m = align(&load_model(model)?, &g)?;
            let (yes, what) = match kind {
                MarkovKind::Global => (is_markov(&m, &g)?, "Markov"),
                MarkovKind::Pairwise => (is_pairwise_markov(&m, &g)?, "pairwise Markov"),
                MarkovKind::Minimal => (is_minimally_markov(&m, &g)?, "minimally Markov"),
            };
            Ok(yes_no(yes, what, json!({ "kind": what, "holds": yes })))
        }
        Verb::Faithful { model, graph } => {
            let g = load(graph, format::parse_graph)?;
            let m = align(&load_model(model)?, &g)?;
            let yes = is_faithful(&m, &g)?;
            let mut value = json!({ "faithful": yes });
            let mut out = yes_no(yes, "faithful", Value::Null);
            if !yes {
                let k = induced(cli, &g)?;
                if let Some((s, in_model)) = m.first_difference(&k)? {
                    let (holds, lacks) = if in_model { ("model", "graph") } else { ("graph", "model") };
                    let _ = writeln!(
                        out.1,
                        "  {} holds in the {holds} but not in the {lacks}",
                        write_statement(m.ground(), &s)
                    );
                    value["difference"] = json!({ "statement": json::statement(m.ground(), &s), "in_model": in_model });
                }
            }
            out.2 = value;
            Ok(out)
        }
        Verb::Graphical { model, class_filter, preorder, parallel } => {
            let m = load_model(model)?;
            let v = match preorder {
                Some(path) => {
                    let p = load(path, format::parse_preorder)?;
                    if !p.ground().same_labels(m.ground()) {
                        return Err(Failure("preorder and model nodes differ".into()));
                    }
                    single_preorder(&m, &p.relabel(m.ground())?, decide_options(cli)?)?
                }
                None => graphical(cli, &m, *class_filter, *parallel)?,
            };
            Ok(verdict(m.ground(), v))
        }
        Verb::Gaussian { cov, role, print_model, graph, decide } => {
            let mat: RationalMatrix = load(cov, format::parse_matrix)?;
            let role = match role {
                MatrixRole::Covariance => Role::Covariance,
                MatrixRole::Concentration => Role::Concentration,
            };
            let m = model_from_matrix(&mat, role)?;
            let concentration = match role {
                Role::Covariance => mat.inverse()?,
                Role::Concentration => mat.clone(),
            };
            let upward = check_upward_stability(&m);
            let mut text = String::new();
            let _ = writeln!(text, "positive definite: yes");
            let _ = writeln!(text, "concentration M-matrix: {}", if concentration.is_m_matrix() { "yes" } else { "no" });
            let _ = writeln!(text, "concentration dense: {}", if concentration.is_dense() { "yes" } else { "no" });
            report_text(m.ground(), &upward, &mut text);
            let mut value = json!({
                "positive_definite": true,
                "m_matrix": concentration.is_m_matrix(),
                "dense_concentration": concentration.is_dense(),
                "upward_stability": json::report(m.ground(), &upward),
            });
            if *print_model {
                text.push_str(&write_model(&m));
                value["model"] = json::model(&m);
            }
            let mut yes = true;
            if let Some(path) = graph {
                let g = load(path, format::parse_graph)?;
                let aligned = align(&m, &g)?;
                yes = is_faithful(&aligned, &g)?;
                text.push_str(if yes { "faithful\n" } else { "not faithful\n" });
                value["faithful"] = yes.into();
            }
            if *decide {
                let v = graphical(cli, &m, Filter::Ang, None)?;
                yes = v.graphical;
                text.push_str(&verdict_text(m.ground(), &v));
                value["verdict"] = json::verdict(m.ground(), &v);
            }
            Ok((yes, text, value))
        }
        Verb::Alpha { model, marginalize, condition, decide } => {
            let m = load_model(model)?;
            let g = m.ground();
            let k = alpha(&m, set(g, marginalize)?, set(g, condition)?)?;
            let mut text = write_model(&k);
            let mut value = json!({ "model": json::model(&k) });
            let mut yes = true;
            if *decide {
                let v = graphical(cli, &k, Filter::Ang, None)?;
                yes = v.graphical;
                text.push_str(&verdict_text(k.ground(), &v));
                value["verdict"] = json::verdict(k.ground(), &v);
            }
            Ok((yes, text, value))
        }
    }
}
