use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use lexdom_core::formula::{construct_witness, predict};
use lexdom_core::io::{generate, load_corpus, parse_graph6, parse_graph_text, write_edge_list, write_graph6, GraphFamilySpec};
use lexdom_core::verify::{verify_corpus, verify_graph_corpus, Budget, ClaimFilter, CorpusReport};
use lexdom_core::{lex_product, solve, Error, Graph, ParameterKind, SolverConfig, TheoremId, Witness};

mod exit {
    pub const VERIFY_FAILED: u8 = 1;
    pub const PARSE: u8 = 3;
    pub const DOMAIN: u8 = 4;
    pub const CAP: u8 = 5;
    pub const INCONSISTENT: u8 = 6;
    pub const IO: u8 = 7;
}

#[derive(Parser)]
#[command(name = "lexdom", version, about = "Domination parameters of lexicographic products")]
struct Cli {
    /// Largest order accepted by the exact solvers.
    #[arg(long, global = true, env = "LEXDOM_MAX_N", default_value_t = SolverConfig::default().max_n,
          value_parser = positive)]
    max_n: usize,
    /// Largest order for which every optimal function is enumerated.
    #[arg(long, global = true, default_value_t = SolverConfig::default().enumeration_max_n,
          value_parser = positive)]
    enum_max_n: usize,
    #[arg(long, global = true, default_value_t = 1, value_parser = positive)]
    workers: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Exact value and canonical witness of one parameter.
    Solve {
        #[arg(long)]
        param: ParameterKind,
        #[command(flatten)]
        graph: GraphInput,
    },
    /// Theorem-based value or interval for a parameter of G ∘ H.
    Predict {
        #[arg(long)]
        param: ParameterKind,
        #[command(flatten)]
        pair: PairInput,
    },
    /// The product G ∘ H in graph6 or edge-list form.
    Product {
        #[command(flatten)]
        pair: PairInput,
        #[arg(long)]
        edges: bool,
    },
    /// The product witness exhibited by a theorem's construction.
    Witness {
        #[arg(long)]
        theorem: TheoremId,
        #[command(flatten)]
        pair: PairInput,
    },
    /// Checks the product statements on every pair of two corpora.
    Verify {
        /// graph6 corpora for the left factor.
        #[arg(long = "gs", num_args = 1.., required_unless_present = "graphs")]
        gs: Vec<PathBuf>,
        /// graph6 corpora for the right factor.
        #[arg(long = "hs", num_args = 1.., requires = "gs")]
        hs: Vec<PathBuf>,
        /// graph6 corpora for the single-graph parameter chains.
        #[arg(long, num_args = 1..)]
        graphs: Vec<PathBuf>,
        /// Comma-separated theorem ids; all claims when absent.
        #[arg(long, value_delimiter = ',')]
        claims: Vec<TheoremId>,
        #[arg(long, default_value_t = Budget::default().max_product_order)]
        max_product: usize,
        #[arg(long, default_value_t = Budget::default().lemma_max_order)]
        lemma_max: usize,
    },
    /// Generates a named graph family.
    Gen {
        /// e.g. `path(4)`, `union(complete(2), empty(1))`, `corona(cycle(3), 2)`.
        #[arg(long)]
        family: GraphFamilySpec,
        #[arg(long)]
        edges: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    #[arg(long)]
    g6: Option<String>,
    /// File holding one graph in graph6 or edge-list form.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    family: Option<GraphFamilySpec>,
}

impl GraphInput {
    fn load(&self) -> Result<(Graph, Value), Error> {
        if let Some(text) = &self.g6 {
            Ok((parse_graph6(text.as_bytes())?, json!({ "g6": text })))
        } else if let Some(path) = &self.input {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            Ok((parse_graph_text(&text)?, json!({ "in": path })))
        } else {
            let spec = self.family.as_ref().expect("clap requires one input");
            Ok((generate(spec)?, json!({ "family": spec.to_string() })))
        }
    }
}

#[derive(Args)]
struct PairInput {
    /// Left factor: graph6, a family spec, or a file path.
    #[arg(long = "gG")]
    g: String,
    /// Right factor: graph6, a family spec, or a file path.
    #[arg(long = "gH")]
    h: String,
}

impl PairInput {
    fn load(&self) -> Result<(Graph, Graph, Value), Error> {
        Ok((load_operand(&self.g)?, load_operand(&self.h)?, json!({ "G": self.g, "H": self.h })))
    }
}

fn load_operand(arg: &str) -> Result<Graph, Error> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{arg}: {e}")))?;
        parse_graph_text(&text)
    } else if arg.contains('(') {
        generate(&arg.parse()?)
    } else {
        parse_graph6(arg.as_bytes())
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::MalformedGraph6 { .. }
        | Error::MalformedEdgeList { .. }
        | Error::CorpusLine { .. }
        | Error::InvalidFamily(_) => exit::PARSE,
        Error::SolverCap { .. } | Error::OrderTooLarge { .. } => exit::CAP,
        Error::Inconsistent(_) => exit::INCONSISTENT,
        Error::Io(_) => exit::IO,
        Error::EmptyGraph
        | Error::LoopEdge { .. }
        | Error::VertexOutOfRange { .. }
        | Error::NotInSet { .. }
        | Error::OverlappingSets { .. }
        | Error::IsolatedVertex { .. }
        | Error::NotASetKind(_)
        | Error::Hypothesis(_) => exit::DOMAIN,
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Set(s) => json!({ "set": s.to_vec() }),
        Witness::Roman(f) => json!({ "weights": f.weights() }),
    }
}

fn witness_tsv(w: &Witness) -> String {
    let items: Vec<String> = match w {
        Witness::Set(s) => s.iter().map(|v| v.to_string()).collect(),
        Witness::Roman(f) => f.weights().iter().map(|v| v.to_string()).collect(),
    };
    items.join(",")
}

/// Result body plus its TSV projection.
struct Output {
    inputs: Value,
    results: Value,
    tsv: Vec<String>,
    failed: bool,
}

fn corpus_tsv(report: &CorpusReport) -> Vec<String> {
    let mut lines = vec!["claim\tapplicable\tpassed\tfailed\tskipped\tnot_applicable\tindeterminate".to_string()];
    lines.extend(report.totals.iter().map(|(claim, t)| {
        format!(
            "{claim}\t{}\t{}\t{}\t{}\t{}\t{}",
            t.applicable, t.passed, t.failed, t.skipped, t.not_applicable, t.indeterminate
        )
    }));
    lines
}

fn load_corpora(paths: &[PathBuf]) -> Result<Vec<Graph>, Error> {
    let mut out = Vec::new();
    for path in paths {
        out.extend(load_corpus(path)?);
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let config = SolverConfig { max_n: cli.max_n, enumeration_max_n: cli.enum_max_n };
    match &cli.command {
        Command::Solve { param, graph } => {
            let (g, inputs) = graph.load()?;
            let r = solve(&g, *param, &config)?;
            Ok(Output {
                inputs,
                results: json!({ "param": param, "value": r.value, "witness": witness_json(&r.witness) }),
                tsv: vec![format!("{param}\t{}\t{}", r.value, witness_tsv(&r.witness))],
                failed: false,
            })
        }
        Command::Predict { param, pair } => {
            let (g, h, inputs) = pair.load()?;
            let p = predict(&g, &h, *param, &config)?;
            Ok(Output {
                inputs,
                tsv: vec![format!("{param}\t{}\t{}\t{}", p.lo, p.hi, p.provenance().join(","))],
                results: serde_json::to_value(&p).expect("predictions serialize"),
                failed: false,
            })
        }
        Command::Product { pair, edges } => {
            let (g, h, inputs) = pair.load()?;
            let (p, _) = lex_product(&g, &h)?;
            let text = if *edges { write_edge_list(&p) } else { write_graph6(&p)? };
            Ok(Output {
                inputs,
                results: json!({ "order": p.order(), "edges": p.edge_count(), "graph": text }),
                tsv: vec![format!("{}\t{}\t{}", p.order(), p.edge_count(), text.trim_end().replace('\n', "\\n"))],
                failed: false,
            })
        }
        Command::Witness { theorem, pair } => {
            let (g, h, inputs) = pair.load()?;
            let c = construct_witness(*theorem, &g, &h, &config)?;
            Ok(Output {
                inputs,
                results: json!({
                    "theorem": c.theorem,
                    "param": c.target,
                    "bound": c.bound,
                    "witness": witness_json(&c.witness),
                }),
                tsv: vec![format!("{}\t{}\t{}\t{}", c.theorem, c.target, c.bound, witness_tsv(&c.witness))],
                failed: false,
            })
        }
        Command::Verify { gs, hs, graphs, claims, max_product, lemma_max } => {
            let filter = if claims.is_empty() {
                ClaimFilter::All
            } else {
                ClaimFilter::Only(claims.iter().copied().collect())
            };
            let budget = Budget { max_product_order: *max_product, lemma_max_order: *lemma_max };
            let mut results = serde_json::Map::new();
            let mut tsv = Vec::new();
            let mut failed = false;
            if !gs.is_empty() {
                let pairs = verify_corpus(&load_corpora(gs)?, &load_corpora(hs)?, &filter, &config, &budget, cli.workers)?;
                failed |= pairs.failed() > 0;
                tsv.extend(corpus_tsv(&pairs));
                results.insert("pairs".into(), serde_json::to_value(&pairs).expect("reports serialize"));
            }
            if !graphs.is_empty() {
                let single = verify_graph_corpus(&load_corpora(graphs)?, &config, cli.workers)?;
                failed |= single.failed() > 0;
                tsv.extend(corpus_tsv(&single));
                results.insert("graphs".into(), serde_json::to_value(&single).expect("reports serialize"));
            }
            let claims: Vec<_> = claims.iter().map(|c| c.name()).collect();
            Ok(Output {
                inputs: json!({ "gs": gs, "hs": hs, "graphs": graphs, "claims": claims, "max_product": max_product }),
                results: Value::Object(results),
                tsv,
                failed,
            })
        }
        Command::Gen { family, edges } => {
            let g = generate(family)?;
            let text = if *edges { write_edge_list(&g) } else { write_graph6(&g)? };
            Ok(Output {
                inputs: json!({ "family": family.to_string() }),
                results: json!({ "order": g.order(), "edges": g.edge_count(), "graph": text }),
                tsv: vec![text.trim_end().to_string()],
                failed: false,
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Solve { .. } => "solve",
        Command::Predict { .. } => "predict",
        Command::Product { .. } => "product",
        Command::Witness { .. } => "witness",
        Command::Verify { .. } => "verify",
        Command::Gen { .. } => "gen",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(out) => {
            // A closed pipe is not an error of the command itself.
            let mut stdout = std::io::stdout().lock();
            match cli.format {
                Format::Json => {
                    let doc = json!({
                        "version": env!("CARGO_PKG_VERSION"),
                        "command": command_name(&cli.command),
                        "inputs": out.inputs,
                        "results": out.results,
                        "timing": { "elapsed_ms": start.elapsed().as_secs_f64() * 1e3 },
                    });
                    let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&doc).expect("json values serialize"));
                }
                Format::Tsv => {
                    for line in &out.tsv {
                        let _ = writeln!(stdout, "{line}");
                    }
                }
            }
            if out.failed {
                ExitCode::from(exit::VERIFY_FAILED)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
