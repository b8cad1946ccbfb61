//! Command-line front end: graph generation and cover solvers, gadget
//! evaluation, tree construction/extraction, coreset builders, the
//! minimization oracles, and the end-to-end reductions.
//!
//! Exit codes: 0 = success / Yes, 1 = No, 2 = error.

use std::fs;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use dtcover::bits::BitString;
use dtcover::coreset::{build_d_g, build_ell_d_g, hard_distribution, Distribution, LabeledPointSet};
use dtcover::dtree::{BoolFunction, DecisionTree, Mass};
use dtcover::graph::{self, Alpha, Graph, VertexSet};
use dtcover::harness::{
    self, builtin_learners, DeciderConfig, ExactMinimizer, IdentityMinimizer, PaddedMinimizer,
    Regime, TreeMinimizer, Verdict,
};
use dtcover::minimize;
use dtcover::reduction;
use dtcover::Error;

#[derive(Parser)]
#[command(name = "dtcover", version, about = "Decision-tree complexity lab over graph gadgets")]
struct Cli {
    /// RNG seed recorded in reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Learner wall-clock budget in seconds.
    #[arg(long, global = true, default_value_t = 60.0)]
    time_budget: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run reductions in desk-scale test mode with this amplification.
    #[arg(long, global = true)]
    test_mode_ell: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Graph utilities.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Gadget evaluation and indicator strings.
    Gadget {
        #[command(subcommand)]
        cmd: GadgetCmd,
    },
    /// Construct trees from covers.
    Build {
        #[command(subcommand)]
        cmd: BuildCmd,
    },
    /// Extract covers from trees.
    Extract {
        #[command(subcommand)]
        cmd: ExtractCmd,
    },
    /// Coreset and distribution builders.
    Coreset {
        #[command(subcommand)]
        cmd: CoresetCmd,
    },
    /// Exact minimization oracles.
    Minimize {
        #[command(subcommand)]
        cmd: MinimizeCmd,
    },
    /// End-to-end reductions.
    Reduce {
        #[command(subcommand)]
        cmd: ReduceCmd,
    },
    /// Pretty-print or validate a run report.
    Report {
        #[arg(long)]
        file: String,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Generate a random bounded-degree graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Exact minimum vertex cover.
    Vc {
        #[arg(long)]
        graph: String,
    },
    /// Exact minimum alpha-partial vertex cover.
    Pvc {
        #[arg(long)]
        graph: String,
        /// Fraction like 1/5.
        #[arg(long)]
        alpha: String,
    },
}

#[derive(Subcommand)]
enum GadgetCmd {
    /// Evaluate the (amplified) gadget on an input string.
    Eval {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        /// 0/1 string; block separators `|` allowed.
        #[arg(long)]
        input: String,
    },
    /// Print the generalized indicator of an edge.
    Ind {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        /// Edge as `u,v`.
        #[arg(long)]
        edge: String,
    },
}

#[derive(Subcommand)]
enum BuildCmd {
    /// Build the cover tree for the (amplified) gadget.
    Tree {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        /// Cover vertices as `1,4`; defaults to an exact minimum cover.
        #[arg(long)]
        cover: Option<String>,
        /// Emit colored DOT instead of the JSON report.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum ExtractCmd {
    /// Extract a vertex cover from a tree file.
    Cover {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        /// Tree JSON file (`{leaf: b} | {var, zero, one}`).
        #[arg(long)]
        tree: String,
        /// Extract an alpha-partial cover from an erring tree.
        #[arg(long)]
        alpha: Option<String>,
    },
}

#[derive(Subcommand)]
enum CoresetCmd {
    /// Write the coreset point set (or weighted distribution).
    Build {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 0)]
        ell: usize,
        /// Emit the weighted distribution instead of the plain set.
        #[arg(long)]
        weighted: bool,
    },
}

#[derive(Subcommand)]
enum MinimizeCmd {
    /// Exact minimization over the full cube.
    Exact {
        /// Truth table file: a 2^N-character 0/1 string.
        #[arg(long, conflicts_with = "graph")]
        table: Option<String>,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value_t = 0)]
        ell: usize,
    },
    /// Smallest tree agreeing with a labeled point-set file.
    Set {
        #[arg(long)]
        points: String,
    },
    /// Size/error Pareto front over a distribution file.
    Front {
        #[arg(long)]
        dist: String,
        #[arg(long)]
        size_cap: usize,
    },
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// Minimization-based reduction: build, minimize, extract.
    Dtmin {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value_t = MinimizerKind::Identity)]
        minimizer: MinimizerKind,
        /// Padding slack for the padded minimizer, like 1/2.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Learning-based decider for "VC(G) <= k".
    Dtlearn {
        #[arg(long)]
        graph: String,
        #[arg(short, long)]
        k: usize,
        #[arg(long, default_value = "occam_ideal")]
        learner: String,
        #[arg(long, value_enum, default_value_t = RegimeArg::InversePoly)]
        regime: RegimeArg,
        /// Cover gap delta' for theorem-mode parameters, like 1/1.
        #[arg(long, default_value = "1")]
        delta_prime: String,
        /// Uncovered fraction for the constant-error regime, like 1/8.
        #[arg(long)]
        alpha: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MinimizerKind {
    Identity,
    Exact,
    Padded,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    InversePoly,
    ConstantError,
}

impl From<RegimeArg> for Regime {
    fn from(r: RegimeArg) -> Regime {
        match r {
            RegimeArg::InversePoly => Regime::InversePoly,
            RegimeArg::ConstantError => Regime::ConstantError,
        }
    }
}

fn read_graph(path: &str) -> Result<Graph, Error> {
    let text = fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        Ok(serde_json::from_str(&text)?)
    } else {
        Graph::from_text(&text)
    }
}

fn parse_fraction(s: &str) -> Result<(u64, u64), Error> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let parse = |v: &str| {
        v.trim()
            .parse::<u64>()
            .map_err(|e| Error::Parse(format!("bad fraction {s:?}: {e}")))
    };
    Ok((parse(num)?, parse(den)?))
}

fn parse_alpha(s: &str) -> Result<Alpha, Error> {
    let (num, den) = parse_fraction(s)?;
    Alpha::new(num, den)
}

fn parse_mass(s: &str) -> Result<Mass, Error> {
    let (num, den) = parse_fraction(s)?;
    if den == 0 {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(Mass::new(num as i64, den as i64))
}

fn parse_vertex_list(s: &str) -> Result<VertexSet, Error> {
    s.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad vertex {part:?}: {e}")))
        })
        .collect()
}

fn print_cover(cover: &VertexSet, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({"size": cover.len(), "cover": cover.iter().collect::<Vec<_>>()})
        ),
        Format::Text => {
            let ids: Vec<String> = cover.iter().map(|v| v.to_string()).collect();
            println!("size {}: {{{}}}", cover.len(), ids.join(", "));
        }
    }
}

fn print_minimize(result: &minimize::MinimizeResult, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "size": result.size,
                "visited_states": result.visited_states,
                "tree": result.tree,
            })
        ),
        Format::Text => println!(
            "minimum size {} ({} states visited)\n{}",
            result.size,
            result.visited_states,
            result.tree.to_json()
        ),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let format = cli.format;
    match cli.command {
        Command::Graph { cmd } => match cmd {
            GraphCmd::Gen { n, d } => {
                let g = graph::random_bounded_degree_graph(n, d, cli.seed);
                match format {
                    Format::Json => println!("{}", serde_json::to_string(&g)?),
                    Format::Text => print!("{}", g.to_text()),
                }
            }
            GraphCmd::Vc { graph } => {
                let g = read_graph(&graph)?;
                print_cover(&graph::min_vertex_cover_exact(&g)?, format);
            }
            GraphCmd::Pvc { graph, alpha } => {
                let g = read_graph(&graph)?;
                let alpha = parse_alpha(&alpha)?;
                print_cover(&graph::min_partial_vertex_cover_exact(&g, alpha)?, format);
            }
        },
        Command::Gadget { cmd } => match cmd {
            GadgetCmd::Eval { graph, ell, input } => {
                let g = read_graph(&graph)?;
                let x = BitString::parse(&input)?;
                let value = dtcover::gadget::ell_isedge_eval(&g, ell, &x)?;
                println!("{}", value as u8);
            }
            GadgetCmd::Ind { graph, ell, edge } => {
                let g = read_graph(&graph)?;
                let ids: Vec<usize> = edge
                    .split(',')
                    .map(|p| {
                        p.trim()
                            .parse()
                            .map_err(|e| Error::Parse(format!("bad edge {edge:?}: {e}")))
                    })
                    .collect::<Result<_, _>>()?;
                if ids.len() != 2 {
                    return Err(Error::Parse("edge must be u,v".into()));
                }
                let e = graph::Edge::new(ids[0], ids[1])?;
                let x = dtcover::gadget::ell_ind(&g, ell, e)?;
                println!("{}", x.to_block_string(g.n()));
            }
        },
        Command::Build { cmd } => match cmd {
            BuildCmd::Tree {
                graph,
                ell,
                cover,
                dot,
            } => {
                let g = read_graph(&graph)?;
                let cover = match cover {
                    Some(s) => parse_vertex_list(&s)?,
                    None => graph::min_vertex_cover_exact(&g)?,
                };
                let report = reduction::build_ell_isedge_tree(&g, &cover, ell)?;
                if dot {
                    print!("{}", report.to_dot());
                } else {
                    println!("{}", report.to_json());
                }
            }
        },
        Command::Extract { cmd } => match cmd {
            ExtractCmd::Cover {
                graph,
                ell,
                tree,
                alpha,
            } => {
                let g = read_graph(&graph)?;
                let arity = dtcover::gadget::GadgetIndex::for_graph(&g, ell).arity();
                let json = fs::read_to_string(&tree)?;
                let tree = DecisionTree::from_json(&json, Some(arity))?;
                match alpha {
                    None => {
                        let cover = reduction::extract_cover_from_ell_tree(&tree, &g, ell)?;
                        print_cover(&cover, format);
                    }
                    Some(a) => {
                        let alpha = parse_alpha(&a)?;
                        let (edges, cover) = reduction::extract_partial_cover_from_errtree(
                            &tree, &g, ell, alpha,
                        )?;
                        match format {
                            Format::Json => println!(
                                "{}",
                                serde_json::json!({
                                    "recognized_edges": edges,
                                    "cover": cover.iter().collect::<Vec<_>>(),
                                })
                            ),
                            Format::Text => {
                                println!("recognized {} edges", edges.len());
                                print_cover(&cover, format);
                            }
                        }
                    }
                }
            }
        },
        Command::Coreset { cmd } => match cmd {
            CoresetCmd::Build {
                graph,
                ell,
                weighted,
            } => {
                let g = read_graph(&graph)?;
                if weighted {
                    print!("{}", hard_distribution(&g, ell)?.to_text());
                } else if ell == 0 {
                    print!("{}", build_d_g(&g).to_text());
                } else {
                    print!("{}", build_ell_d_g(&g, ell)?.to_text());
                }
            }
        },
        Command::Minimize { cmd } => match cmd {
            MinimizeCmd::Exact { table, graph, ell } => {
                let f = match (table, graph) {
                    (Some(path), _) => {
                        BoolFunction::from_table_str(fs::read_to_string(path)?.trim())?
                    }
                    (None, Some(path)) => {
                        let g = read_graph(&path)?;
                        dtcover::gadget::ell_isedge_function(&g, ell)
                    }
                    (None, None) => {
                        return Err(Error::Parse("need --table or --graph".into()));
                    }
                };
                print_minimize(&minimize::dtsize_exact(&f)?, format);
            }
            MinimizeCmd::Set { points } => {
                let set = LabeledPointSet::from_text(&fs::read_to_string(points)?)?;
                print_minimize(&minimize::dtsize_over_set(&set)?, format);
            }
            MinimizeCmd::Front { dist, size_cap } => {
                let dist = Distribution::from_text(&fs::read_to_string(dist)?)?;
                let front = minimize::min_error_front(&dist, size_cap)?;
                let entries: Vec<_> = front
                    .entries()
                    .iter()
                    .map(|e| {
                        serde_json::json!({
                            "size": e.size,
                            "error": e.error.to_string(),
                            "tree": e.tree,
                        })
                    })
                    .collect();
                match format {
                    Format::Json => println!("{}", serde_json::json!({ "front": entries })),
                    Format::Text => {
                        for e in front.entries() {
                            println!("size {:>3}  error {}", e.size, e.error);
                        }
                    }
                }
            }
        },
        Command::Reduce { cmd } => match cmd {
            ReduceCmd::Dtmin {
                graph,
                minimizer,
                delta,
            } => {
                let g = read_graph(&graph)?;
                let delta = delta.as_deref().map(parse_mass).transpose()?;
                let minimizer: Box<dyn TreeMinimizer> = match minimizer {
                    MinimizerKind::Identity => Box::new(IdentityMinimizer),
                    MinimizerKind::Exact => Box::new(ExactMinimizer),
                    MinimizerKind::Padded => Box::new(PaddedMinimizer {
                        delta: delta.unwrap_or_else(|| Mass::new(1, 2)),
                    }),
                };
                let report =
                    harness::dtmin_reduction(&g, minimizer.as_ref(), cli.test_mode_ell, cli.seed)?;
                match format {
                    Format::Json => println!("{}", serde_json::to_string(&report)?),
                    Format::Text => {
                        println!(
                            "extracted cover of size {} (ell={}, input {} -> output {})",
                            report.cover.len(),
                            report.ell,
                            report.input_size,
                            report.output_size
                        );
                        print_cover(&report.cover, format);
                    }
                }
            }
            ReduceCmd::Dtlearn {
                graph,
                k,
                learner,
                regime,
                delta_prime,
                alpha,
            } => {
                let g = read_graph(&graph)?;
                let regime: Regime = regime.into();
                let params = match cli.test_mode_ell {
                    Some(ell) => harness::params_test_mode(&g, ell, regime)?,
                    None => {
                        let dp = parse_mass(&delta_prime)?;
                        let d = g.max_degree().max(1);
                        match regime {
                            Regime::InversePoly => {
                                harness::params_inverse_poly(g.n(), g.m(), d, dp)?
                            }
                            Regime::ConstantError => {
                                let alpha = parse_alpha(alpha.as_deref().unwrap_or("1/8"))?;
                                harness::params_constant_error(g.n(), g.m(), d, dp, alpha)?
                            }
                        }
                    }
                };
                let learners = builtin_learners();
                let learner = learners
                    .get(learner.as_str())
                    .ok_or_else(|| Error::Parse(format!("unknown learner {learner:?}")))?;
                let config = DeciderConfig {
                    seed: cli.seed,
                    time_budget: Duration::from_secs_f64(cli.time_budget),
                    repeats: 1,
                };
                let report =
                    harness::dtlearn_decider(&g, k, Arc::clone(learner), &params, &config)?;
                match format {
                    Format::Json => println!("{}", serde_json::to_string(&report)?),
                    Format::Text => println!(
                        "{:?} (size {:?} vs threshold {}, error {:?} vs epsilon {})",
                        report.verdict,
                        report.hypothesis_size,
                        report.size_threshold,
                        report.hypothesis_error.map(|e| e.to_string()),
                        report.epsilon
                    ),
                }
                if report.verdict == Verdict::No {
                    return Ok(ExitCode::from(1));
                }
            }
        },
        Command::Report { file } => {
            let text = fs::read_to_string(&file)?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&value)?),
                Format::Text => {
                    if let Some(obj) = value.as_object() {
                        for (key, val) in obj {
                            println!("{key}: {val}");
                        }
                    } else {
                        println!("{value}");
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
