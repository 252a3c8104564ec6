//! Command-line front end. Every subcommand is a pure function of its input
//! files, flags and seed.

mod model;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::combinatorics::{
    contains_pattern, turan_density_estimate, turan_number, DecisionTree, UniformHypergraph,
};
use crate::error::{Error, Result};
use crate::io::{
    format_real, matrix_to_csv, parse_document, partition_to_csv, read_matrix_file, to_json_string,
    GraphDocument,
};
use crate::linalg::{normalized_laplacian_capped, DenseMatrix, DEFAULT_DENSE_CAP};
use crate::partition::{
    degree_centrality, multilevel_partition, ncut_spectral, supervertex_hypergraph, Objective, PartitionConfig,
};
use crate::shgnn::{
    dshgnn_forward, forward, nshgnn_convolve, shg_attention_convolve, shgnn_convolve, AttentionParams,
    DynamicConfig, LayerParams, NetworkConfig, Readout,
};
use crate::structures::{Hypergraph, SuperHyperGraph};
use crate::uncertain::{c_cut, fgnn_forward, fhgnn_convolve, fuzzy_laplacian, ngnn_forward, pgnn_forward};
use crate::walk::{
    expanded_transition_kernel, shg_transition_kernel, simulate, stationary_with_limit, DanglingPolicy, Selection,
    TransitionKernel, WalkConfig, DEFAULT_MAX_ITERS,
};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "shg", version, about = "SuperHyperGraph toolkit")]
pub struct Cli {
    /// Seed for every randomized step; required by randomized commands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Reject unknown document fields and apply strict membership checks.
    #[arg(long, global = true)]
    strict: bool,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Convergence tolerance for iterative commands.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ActivationArg {
    Identity,
    Relu,
    LeakyRelu,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReadoutArg {
    Softmax,
    None,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Domain {
    /// Base vertices of the expansion.
    Expanded,
    Supervertices,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ObjectiveArg {
    Cut,
    Soed,
}

#[derive(Debug, clap::Args)]
struct LayerArgs {
    /// Feature matrix (headerless CSV, one row per base vertex).
    #[arg(long)]
    features: PathBuf,
    #[arg(long, value_enum, default_value = "relu")]
    activation: ActivationArg,
    /// Negative slope of leaky-relu.
    #[arg(long, default_value_t = crate::linalg::DEFAULT_LEAKY_SLOPE)]
    slope: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a graph document and report every violation.
    Validate { graph: PathBuf },
    /// Expand to the flat hypergraph on the base vertices.
    Expand {
        graph: PathBuf,
        /// Union nested members down to leaves at any depth.
        #[arg(long)]
        recursive: bool,
    },
    /// Normalized Laplacian of the expansion (or of the fuzzy block).
    Laplacian {
        graph: PathBuf,
        #[arg(long)]
        fuzzy: bool,
    },
    /// One spectral convolution layer.
    Convolve {
        graph: PathBuf,
        #[command(flatten)]
        layer: LayerArgs,
        #[arg(long)]
        theta: PathBuf,
        /// Use recursive expansion for nested levels.
        #[arg(long)]
        recursive: bool,
    },
    /// Multi-layer convolution network with a readout.
    Forward {
        graph: PathBuf,
        #[command(flatten)]
        layer: LayerArgs,
        /// One weight matrix per layer, in order.
        #[arg(long, required = true)]
        theta: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "softmax")]
        readout: ReadoutArg,
    },
    /// Attention convolution with learned incidence weights.
    Attention {
        graph: PathBuf,
        #[command(flatten)]
        layer: LayerArgs,
        #[arg(long)]
        theta: PathBuf,
        /// Attention vector of length 2c (CSV).
        #[arg(long)]
        vector: PathBuf,
    },
    /// Dynamic superhypergraph network built from the features.
    Dshgnn {
        #[command(flatten)]
        layer: LayerArgs,
        /// Number of supervertices.
        #[arg(short = 's', long = "supervertices")]
        s: usize,
        /// Number of superedges.
        #[arg(short = 't', long = "superedges")]
        t: usize,
        #[arg(long, required = true)]
        theta: Vec<PathBuf>,
    },
    /// Fuzzy rule network.
    Fgnn(RuleArgs),
    /// Neutrosophic rule network.
    Ngnn(RuleArgs),
    /// Plithogenic rule network.
    Pgnn(RuleArgs),
    /// Fuzzy hypergraph convolution.
    Fhgnn {
        graph: PathBuf,
        #[command(flatten)]
        layer: LayerArgs,
        #[arg(long)]
        theta: PathBuf,
    },
    /// Crisp c-cut of the fuzzy hypergraph block.
    Ccut {
        graph: PathBuf,
        #[arg(short = 'c', long)]
        level: f64,
    },
    /// Seeded random walk; prints one state per line.
    Walk {
        graph: PathBuf,
        #[arg(long)]
        start: String,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value = "expanded")]
        on: Domain,
        /// Isolated states stay put instead of failing.
        #[arg(long)]
        lazy: bool,
    },
    /// Stationary distribution of the walk or of a given matrix.
    Stationary {
        #[arg(required_unless_present = "matrix")]
        graph: Option<PathBuf>,
        /// Row-stochastic matrix (CSV) instead of a graph.
        #[arg(long, conflicts_with = "graph")]
        matrix: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "expanded")]
        on: Domain,
        #[arg(long)]
        lazy: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ITERS)]
        max_iters: usize,
    },
    /// Balanced multilevel k-way partition; prints vertex,part CSV.
    Partition {
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'c', default_value_t = 1.0)]
        c: f64,
        #[arg(long, value_enum, default_value = "cut")]
        objective: ObjectiveArg,
        #[arg(long, value_enum, default_value = "expanded")]
        on: Domain,
    },
    /// Spectral normalized-cut clustering; prints vertex,part CSV.
    Cluster {
        graph: PathBuf,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Weighted degree centrality of each base vertex.
    Centrality { graph: PathBuf },
    /// Exact Turán number with a witness, optionally with densities.
    Turan {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'r')]
        r: usize,
        /// Pattern document (its expansion must be r-uniform).
        #[arg(long, required_unless_present = "complete", conflicts_with = "complete")]
        pattern: Option<PathBuf>,
        /// Use the complete r-uniform hypergraph on this many vertices.
        #[arg(long)]
        complete: Option<usize>,
        /// Also report densities for every N from this value to n.
        #[arg(long)]
        from: Option<usize>,
    },
    /// Whether the host contains no copy of the pattern.
    Ffree { host: PathBuf, pattern: PathBuf },
    /// Complete binary decision tree of a truth table.
    Bdtree {
        /// JSON array of 2^m bits (0/1 or booleans).
        #[arg(long)]
        table: PathBuf,
        /// Branching order as comma-separated variable indices.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
        /// Evaluate at this assignment (comma-separated 0/1) instead.
        #[arg(long, value_delimiter = ',')]
        evaluate: Option<Vec<u8>>,
    },
}

#[derive(Debug, clap::Args)]
struct RuleArgs {
    graph: PathBuf,
    #[arg(long)]
    features: PathBuf,
    /// Rule set and layer parameters (JSON).
    #[arg(long)]
    model: PathBuf,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = std::result::Result<String, Failure>;

struct Context<'a> {
    strict: bool,
    seed: Option<u64>,
    tolerance: f64,
    stderr: &'a mut dyn Write,
}

impl Context<'_> {
    fn document(&mut self, path: &Path) -> Result<GraphDocument> {
        let text = std::fs::read_to_string(path)?;
        let loaded = parse_document(&text, self.strict)?;
        for w in &loaded.warnings {
            let _ = writeln!(self.stderr, "warning: {w}");
        }
        Ok(loaded.document)
    }

    fn shg(&mut self, path: &Path) -> Result<SuperHyperGraph> {
        self.document(path)?.superhypergraph()
    }

    fn seed(&self, command: &str) -> std::result::Result<u64, Failure> {
        self.seed
            .ok_or_else(|| Failure::Usage(format!("{command} is randomized and requires --seed")))
    }
}

fn layer_params(theta: &Path, args: &LayerArgs) -> Result<LayerParams> {
    let act = match args.activation {
        ActivationArg::Identity => "identity",
        ActivationArg::Relu => "relu",
        ActivationArg::LeakyRelu => "leaky_relu",
    };
    Ok(LayerParams::new(read_matrix_file(theta)?, model::activation(act, Some(args.slope))?))
}

fn kernel(shg: &SuperHyperGraph, on: Domain, lazy: bool) -> Result<TransitionKernel> {
    let policy = if lazy { DanglingPolicy::Lazy } else { DanglingPolicy::Error };
    match on {
        Domain::Expanded => expanded_transition_kernel(shg, &Selection::Uniform, policy),
        Domain::Supervertices => shg_transition_kernel(shg, &Selection::Uniform, policy),
    }
}

fn partition_domain(shg: &SuperHyperGraph, on: Domain) -> Result<Hypergraph> {
    match on {
        Domain::Expanded => Ok(shg.expand()),
        Domain::Supervertices => supervertex_hypergraph(shg),
    }
}

fn names(h: &Hypergraph) -> Vec<String> {
    h.vertices().iter().map(|v| v.name().to_string()).collect()
}

fn uniform(doc: &GraphDocument, what: &str) -> Result<UniformHypergraph> {
    let h = doc.hypergraph()?;
    let r = h
        .hyperedges()
        .first()
        .map(|e| e.members.len())
        .ok_or_else(|| Error::InvalidArgument(format!("{what} has no edges")))?;
    let edges = h.hyperedges().iter().map(|e| e.members.clone()).collect();
    UniformHypergraph::new(h.num_vertices(), r, edges)
}

fn uniform_document(g: &UniformHypergraph) -> Result<GraphDocument> {
    let edges = g.edges().iter().map(|e| (e.clone(), 1.0)).collect();
    GraphDocument::from_hypergraph(&Hypergraph::with_indexed_vertices(g.num_vertices(), edges)?)
}

fn bits(v: &serde_json::Value) -> Result<Vec<bool>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Document {
            pointer: String::new(),
            msg: "truth table must be an array".into(),
        })?;
    arr.iter()
        .enumerate()
        .map(|(i, b)| match b {
            serde_json::Value::Bool(b) => Ok(*b),
            serde_json::Value::Number(n) if n.as_u64() == Some(0) => Ok(false),
            serde_json::Value::Number(n) if n.as_u64() == Some(1) => Ok(true),
            _ => Err(Error::Document {
                pointer: format!("/{i}"),
                msg: "expected 0, 1, true or false".into(),
            }),
        })
        .collect()
}

fn execute(cmd: Command, ctx: &mut Context) -> Outcome {
    Ok(match cmd {
        Command::Validate { graph } => {
            ctx.document(&graph)?;
            "valid\n".into()
        }
        Command::Expand { graph, recursive } => {
            let shg = ctx.shg(&graph)?;
            let h = if recursive { shg.expand_recursive() } else { shg.expand() };
            GraphDocument::from_hypergraph(&h)?.to_json()
        }
        Command::Laplacian { graph, fuzzy } => {
            let doc = ctx.document(&graph)?;
            let lap = if fuzzy {
                let fh = doc
                    .fuzzy_hypergraph(ctx.strict)?
                    .ok_or_else(|| Error::InvalidArgument("document has no fuzzy_hypergraph block".into()))?;
                fuzzy_laplacian(&fh)
            } else {
                normalized_laplacian_capped(&doc.hypergraph()?, DEFAULT_DENSE_CAP)?
            };
            matrix_to_csv(&lap)
        }
        Command::Convolve {
            graph,
            layer,
            theta,
            recursive,
        } => {
            let shg = ctx.shg(&graph)?;
            let x = read_matrix_file(&layer.features)?;
            let p = layer_params(&theta, &layer)?;
            let y = if recursive {
                nshgnn_convolve(&shg, &x, &p)?
            } else {
                shgnn_convolve(&shg, &x, &p)?
            };
            matrix_to_csv(&y)
        }
        Command::Forward {
            graph,
            layer,
            theta,
            readout,
        } => {
            let shg = ctx.shg(&graph)?;
            let x = read_matrix_file(&layer.features)?;
            let layers = theta.iter().map(|t| layer_params(t, &layer)).collect::<Result<_>>()?;
            let readout = match readout {
                ReadoutArg::Softmax => Readout::Softmax,
                ReadoutArg::None => Readout::None,
            };
            matrix_to_csv(&forward(&shg, &x, &NetworkConfig::new(layers, readout)?)?)
        }
        Command::Attention {
            graph,
            layer,
            theta,
            vector,
        } => {
            let shg = ctx.shg(&graph)?;
            let x = read_matrix_file(&layer.features)?;
            let base = layer_params(&theta, &layer)?;
            let a = read_matrix_file(&vector)?.as_slice().to_vec();
            let mut p = AttentionParams::new(a, base.theta);
            p.slope = layer.slope;
            p.activation = base.activation;
            matrix_to_csv(&shg_attention_convolve(&shg, &x, &p)?)
        }
        Command::Dshgnn { layer, s, t, theta } => {
            let seed = ctx.seed("dshgnn")?;
            let x = read_matrix_file(&layer.features)?;
            let layers = theta
                .iter()
                .enumerate()
                .map(|(l, path)| {
                    let cfg = DynamicConfig::new(s, t, seed.wrapping_add(2 * l as u64));
                    Ok((cfg, layer_params(path, &layer)?))
                })
                .collect::<Result<Vec<_>>>()?;
            matrix_to_csv(&dshgnn_forward(&x, &layers)?)
        }
        Command::Fgnn(args) | Command::Ngnn(args) | Command::Pgnn(args) => {
            unreachable!("rule networks are dispatched before execute: {args:?}")
        }
        Command::Fhgnn { graph, layer, theta } => {
            let doc = ctx.document(&graph)?;
            let fh = doc
                .fuzzy_hypergraph(ctx.strict)?
                .ok_or_else(|| Error::InvalidArgument("document has no fuzzy_hypergraph block".into()))?;
            let x = read_matrix_file(&layer.features)?;
            matrix_to_csv(&fhgnn_convolve(&fh, &x, &layer_params(&theta, &layer)?)?)
        }
        Command::Ccut { graph, level } => {
            let doc = ctx.document(&graph)?;
            let fh = doc
                .fuzzy_hypergraph(ctx.strict)?
                .ok_or_else(|| Error::InvalidArgument("document has no fuzzy_hypergraph block".into()))?;
            GraphDocument::from_hypergraph(&c_cut(&fh, level)?)?.to_json()
        }
        Command::Walk {
            graph,
            start,
            steps,
            on,
            lazy,
        } => {
            let seed = ctx.seed("walk")?;
            let k = kernel(&ctx.shg(&graph)?, on, lazy)?;
            let start = k
                .state_index(&start)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown start state {start:?}")))?;
            let path = simulate(&k, &WalkConfig { start, steps, seed })?;
            path.iter().map(|&i| format!("{}\n", k.states()[i])).collect()
        }
        Command::Stationary {
            graph,
            matrix,
            on,
            lazy,
            max_iters,
        } => {
            let k = match (graph, matrix) {
                (_, Some(m)) => {
                    let p = read_matrix_file(&m)?;
                    let states = (0..p.rows()).map(|i| format!("s{i}")).collect();
                    TransitionKernel::new(states, p)?
                }
                (Some(g), None) => kernel(&ctx.shg(&g)?, on, lazy)?,
                (None, None) => return Err(Failure::Usage("a graph or --matrix is required".into())),
            };
            let pi = stationary_with_limit(&k, ctx.tolerance, max_iters)?;
            let mut out = String::from("state,probability\n");
            for (s, p) in k.states().iter().zip(&pi) {
                out.push_str(&format!("{s},{}\n", format_real(*p)));
            }
            out
        }
        Command::Partition {
            graph,
            k,
            c,
            objective,
            on,
        } => {
            let seed = ctx.seed("partition")?;
            let h = partition_domain(&ctx.shg(&graph)?, on)?;
            let mut cfg = PartitionConfig::new(k, c, seed);
            cfg.objective = match objective {
                ObjectiveArg::Cut => Objective::Cut,
                ObjectiveArg::Soed => Objective::Soed,
            };
            let report = multilevel_partition(&h, &cfg)?;
            partition_to_csv(&names(&h), &report.partition.assignment)
        }
        Command::Cluster { graph, k } => {
            let seed = ctx.seed("cluster")?;
            let h = ctx.shg(&graph)?.expand();
            partition_to_csv(&names(&h), &ncut_spectral(&h, k, seed)?.assignment)
        }
        Command::Centrality { graph } => {
            let shg = ctx.shg(&graph)?;
            let mut out = String::from("vertex,centrality\n");
            for (v, c) in shg.base_vertices().iter().zip(degree_centrality(&shg)) {
                out.push_str(&format!("{},{}\n", v.name(), format_real(c)));
            }
            out
        }
        Command::Turan {
            n,
            r,
            pattern,
            complete,
            from,
        } => {
            let f = match (pattern, complete) {
                (Some(p), _) => uniform(&ctx.document(&p)?, "pattern")?,
                (None, Some(m)) => UniformHypergraph::complete(m, r)?,
                (None, None) => return Err(Failure::Usage("--pattern or --complete is required".into())),
            };
            let result = turan_number(n, r, &f)?;
            let mut value = serde_json::json!({
                "n": n,
                "r": r,
                "ex": result.ex,
                "witness": uniform_document(&result.witness)?,
            });
            if let Some(lo) = from {
                value["density"] = serde_json::to_value(turan_density_estimate(r, &f, lo..=n)?)
                    .expect("density estimate serializes");
            }
            to_json_string(&value)
        }
        Command::Ffree { host, pattern } => {
            let g = uniform(&ctx.document(&host)?, "host")?;
            let f = uniform(&ctx.document(&pattern)?, "pattern")?;
            let contains = contains_pattern(&g, &f)?;
            to_json_string(&serde_json::json!({"contains": contains, "f_free": !contains}))
        }
        Command::Bdtree { table, order, evaluate } => {
            let text = std::fs::read_to_string(&table).map_err(Error::from)?;
            let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Error::Parse {
                line: e.line(),
                column: e.column(),
                msg: e.to_string(),
            })?;
            let table = bits(&value)?;
            let m = table.len().trailing_zeros() as usize;
            let order = order.unwrap_or_else(|| (0..m).collect());
            let tree = DecisionTree::build(&table, &order)?;
            match evaluate {
                Some(a) => {
                    let a: Vec<bool> = a.iter().map(|&b| b != 0).collect();
                    format!("{}\n", u8::from(tree.evaluate(&a)?))
                }
                None => to_json_string(&tree),
            }
        }
    })
}

fn rule_network(kind: &str, args: &RuleArgs, ctx: &mut Context) -> Outcome {
    let doc = ctx.document(&args.graph)?;
    let g = doc
        .annotated_graph(ctx.strict)?
        .ok_or_else(|| Error::InvalidArgument("document has no annotations".into()))?;
    let x = read_matrix_file(&args.features)?;
    let (rules, layers) = model::parse_model(&std::fs::read_to_string(&args.model).map_err(Error::from)?)?;
    let y: DenseMatrix = match kind {
        "fgnn" => fgnn_forward(&g, &x, &rules, &layers)?,
        "ngnn" => ngnn_forward(&g, &x, &rules, &layers)?,
        _ => pgnn_forward(&g, &x, &rules, &layers)?,
    };
    Ok(matrix_to_csv(&y))
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = stdout.write_all(text.as_bytes());
            } else {
                let _ = stderr.write_all(text.as_bytes());
            }
            return if code == 0 { 0 } else { 2 };
        }
    };
    let tolerance = cli.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    let out_path = cli.out.clone();
    let mut ctx = Context {
        strict: cli.strict,
        seed: cli.seed,
        tolerance,
        stderr,
    };
    let outcome = match &cli.command {
        Command::Fgnn(a) => rule_network("fgnn", a, &mut ctx),
        Command::Ngnn(a) => rule_network("ngnn", a, &mut ctx),
        Command::Pgnn(a) => rule_network("pgnn", a, &mut ctx),
        _ => execute(cli.command, &mut ctx),
    };
    match outcome {
        Ok(text) => {
            let written = match out_path {
                Some(p) => std::fs::write(&p, text.as_bytes()),
                None => stdout.write_all(text.as_bytes()),
            };
            match written {
                Ok(()) => 0,
                Err(e) => {
                    let _ = writeln!(ctx.stderr, "error[io]: {e}");
                    1
                }
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(ctx.stderr, "error[usage]: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let line = e.to_string().replace('\n', " ");
            let _ = writeln!(ctx.stderr, "error[{}]: {line}", e.code());
            1
        }
    }
}
