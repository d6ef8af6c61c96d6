mod report;

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hublab::approx::{run_cohen_hl, MdsMode};
use hublab::center::UncoveredSet;
use hublab::generators::{self as gen, BadG, BadW};
use hublab::greedy::{run_greedy, Algorithm};
use hublab::highway::{greedy_multiscale_sphs, sphs_to_hhl, HighwayError, DEFAULT_PATH_CAP};
use hublab::labeling::{canonical_hhl, respects_order, verify_cover};
use hublab::oracles::{
    highway_dimension_bruteforce, min_vertex_cover, optimal_hhl_bruteforce, optimal_hl_bnb, OracleError, DEFAULT_HD_LIMIT,
    DEFAULT_HHL_LIMIT, DEFAULT_MDS_LIMIT,
};
use hublab::{DistMatrix, Graph, Labeling, Order};

use report::Report;

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(name = "hublab", version, about = "Hub labelings: build, verify, compare against exact oracles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from one of the built-in families
    Generate(GenerateArgs),
    /// Build a labeling for a graph
    Build(BuildArgs),
    /// Check a label file against a graph
    Verify(VerifyArgs),
    /// Compare a labeling with an exact oracle
    Compare(CompareArgs),
    /// Answer a distance query from a label file
    Query(QueryArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    BadG,
    BadW,
    Separator,
    Cycle4,
    VcUndirected,
    VcDirected,
    Random,
}

#[derive(Args)]
struct GenerateArgs {
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    /// Base graph file for the vertex-cover reductions
    #[arg(long)]
    base: Option<PathBuf>,
    /// Directed variant (cycle4, random)
    #[arg(long)]
    directed: bool,
    /// Lengths 10 and 9 instead of 1 (vc-undirected)
    #[arg(long)]
    scaled: bool,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 1)]
    maxlen: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Perturb lengths so that shortest paths are unique
    #[arg(long)]
    unique: bool,
    /// Also write the family's explicit labeling (separator, cycle4 --directed, vc-*)
    #[arg(long, value_name = "FILE")]
    with_hl: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    GHhl,
    WHhl,
    DHhl,
    Cohen,
    Canonical,
    Sphs,
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    algo: Algo,
    /// Order file for --algo canonical
    #[arg(long)]
    order: Option<PathBuf>,
    /// Exact densest subgraphs in cohen (small graphs only)
    #[arg(long)]
    exact_mds: bool,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the importance order of hierarchical algorithms
    #[arg(long, value_name = "FILE")]
    order_out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    labels: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    /// Minimum hub labeling by branch and bound
    HlBnb,
    /// Minimum hierarchical labeling over all orders
    Hhl,
    /// Highway dimension by brute force
    Hd,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Label file to compare; alternatively use --algo
    #[arg(long, conflicts_with = "algo")]
    labels: Option<PathBuf>,
    #[arg(long)]
    algo: Option<Algo>,
    #[arg(long)]
    oracle: OracleKind,
    /// Search-node budget for hl-bnb
    #[arg(long)]
    budget: Option<u64>,
    /// Largest vertex count accepted by hhl and hd
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct QueryArgs {
    #[arg(long)]
    labels: PathBuf,
    /// Also report the true distance from this graph
    #[arg(long)]
    graph: Option<PathBuf>,
    s: usize,
    t: usize,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse(&read(path)?).with_context(|| format!("parsing graph {}", path.display()))
}

fn read_labels(path: &Path) -> Result<Labeling> {
    Labeling::parse(&read(path)?).with_context(|| format!("parsing labels {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn need<T>(value: Option<T>, flag: &str, what: &str) -> Result<T> {
    value.with_context(|| format!("{what} needs {flag}"))
}

fn generate(args: GenerateArgs) -> Result<u8> {
    let mut params = Vec::new();
    let mut explicit: Option<Labeling> = None;
    let mut graph = match args.family {
        Family::BadG => {
            let k = need(args.k, "--k", "bad-g")?;
            params.push(format!("family=bad-g k={k} n={}", BadG { k }.n()));
            gen::gen_bad_g(k)?
        }
        Family::BadW => {
            let k = need(args.k, "--k", "bad-w")?;
            params.push(format!("family=bad-w k={k} l={} n={}", BadW { k }.l(), BadW { k }.n()));
            gen::gen_bad_w(k)?
        }
        Family::Separator => {
            let k = need(args.k, "--k", "separator")?;
            params.push(format!("family=separator k={k}"));
            explicit = Some(gen::construct_separator_hl(k)?);
            gen::gen_separator(k)?
        }
        Family::Cycle4 => {
            params.push(format!("family=cycle4 directed={}", args.directed));
            if args.directed {
                explicit = Some(gen::construct_c4prime_hl());
            }
            gen::gen_cycle4(args.directed)
        }
        Family::VcUndirected | Family::VcDirected => {
            let path = need(args.base.as_deref(), "--base", "vertex-cover reductions")?;
            let base = read_graph(path)?;
            let vc = min_vertex_cover(&base)?;
            let directed = matches!(args.family, Family::VcDirected);
            let reduced = if directed { gen::reduce_vc_directed(&base)? } else { gen::reduce_vc_undirected(&base, args.scaled)? };
            let d = DistMatrix::compute(&reduced);
            explicit = Some(if directed {
                gen::construct_reduction_labeling_directed(&base, &d, &vc)?
            } else {
                gen::construct_reduction_labeling_undirected(&base, &d, &vc)?
            });
            let name = if directed { "vc-directed" } else { "vc-undirected" };
            params.push(format!("family={name} base_n={} base_m={} cover={vc:?} scaled={}", base.n(), base.m(), args.scaled && !directed));
            reduced
        }
        Family::Random => {
            let n = need(args.n, "--n", "random")?;
            let m = need(args.m, "--m", "random")?;
            params.push(format!("family=random n={n} m={m} maxlen={} seed={} directed={}", args.maxlen, args.seed, args.directed));
            if args.directed {
                gen::gen_random_directed(n, m, args.maxlen, args.seed)?
            } else {
                gen::gen_random(n, m, args.maxlen, args.seed)?
            }
        }
    };
    if args.unique {
        graph = gen::perturb_unique(&graph)?;
        params.push("unique=true".into());
        explicit = None;
    }
    let text = format!("# hublab {}\n{}", params.join(" "), graph.to_text());
    let mut report = Report::new("generate");
    report.put("params", params.join(" ")).put("n", graph.n()).put("m", graph.m()).put("directed", graph.is_directed());
    if let Some(path) = &args.with_hl {
        let l = explicit.context("this family has no explicit labeling")?;
        let d = DistMatrix::compute(&graph);
        if !verify_cover(&l, &d).is_valid() {
            bail!("explicit labeling does not cover the generated graph");
        }
        write(path, &format!("# hublab explicit labeling {}\n{}", params.join(" "), l.to_text()))?;
        report.put("hl_size", l.size()).put("hl_out", path.display().to_string());
    }
    match &args.out {
        Some(path) => {
            write(path, &text)?;
            report.put("out", path.display().to_string());
            report.write(io::stdout().lock())?;
        }
        None => print!("{text}"),
    }
    Ok(0)
}

struct Built {
    labeling: Labeling,
    order: Option<Order>,
    report: Report,
}

fn build_labeling(g: &Graph, d: &DistMatrix, algo: Algo, order_file: Option<&Path>, exact_mds: bool) -> Result<Built> {
    let mut report = Report::new("build");
    let (labeling, order) = match algo {
        Algo::GHhl | Algo::WHhl | Algo::DHhl => {
            let which = match algo {
                Algo::GHhl => Algorithm::GHhl,
                Algo::WHhl => Algorithm::WHhl,
                _ => Algorithm::DHhl,
            };
            let (order, l, trace) = run_greedy(d, which);
            report.put("algo", which.name()).put("iterations", trace.iterations.len());
            (l, Some(order))
        }
        Algo::Cohen => {
            let nodes = if d.is_directed() { 2 * d.n() } else { d.n() };
            let mode = if exact_mds {
                if nodes > DEFAULT_MDS_LIMIT {
                    return Err(OracleError::TooLarge { size: nodes, limit: DEFAULT_MDS_LIMIT }.into());
                }
                MdsMode::Exact { limit: DEFAULT_MDS_LIMIT }
            } else {
                MdsMode::Peel
            };
            let (l, trace) = run_cohen_hl(d, UncoveredSet::initial(d), mode);
            report.put("algo", "cohen").put("mds", if exact_mds { "exact" } else { "peel" }).put("iterations", trace.iterations.len());
            (l, None)
        }
        Algo::Canonical => {
            let path = need(order_file, "--order", "--algo canonical")?;
            let order = Order::parse(&read(path)?).with_context(|| format!("parsing order {}", path.display()))?;
            if order.len() != d.n() {
                bail!("order has {} vertices, graph has {}", order.len(), d.n());
            }
            report.put("algo", "canonical");
            (canonical_hhl(d, &order), Some(order))
        }
        Algo::Sphs => {
            let ms = greedy_multiscale_sphs(g, d, DEFAULT_PATH_CAP)?;
            let (order, l) = sphs_to_hhl(g, d, &ms, DEFAULT_PATH_CAP)?;
            let caps: Vec<usize> = ms.levels.iter().map(|lv| lv.cap).collect();
            let sizes: Vec<usize> = ms.levels.iter().map(|lv| lv.set.len()).collect();
            report.put("algo", "sphs").put("levels", ms.levels.len()).put("label_bound", 1 + ms.cap_sum());
            report.put("level_caps", caps).put("level_sizes", sizes);
            (l, Some(order))
        }
    };
    let valid = verify_cover(&labeling, d).is_valid();
    report.put("n", d.n()).put("directed", d.is_directed()).put("size", labeling.size()).put("max_label", labeling.max_label_size());
    report.put("valid", valid);
    if let Some(order) = &order {
        report.put("respects_order", respects_order(&labeling, order)).put("order", order.sequence());
    }
    Ok(Built { labeling, order, report })
}

fn build(args: BuildArgs) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let d = DistMatrix::compute(&g);
    let mut built = build_labeling(&g, &d, args.algo, args.order.as_deref(), args.exact_mds)?;
    if let Some(path) = &args.out {
        write(path, &built.labeling.to_text())?;
        built.report.put("out", path.display().to_string());
    }
    if let Some(path) = &args.order_out {
        let order = built.order.as_ref().context("cohen labelings have no order")?;
        write(path, &order.to_text())?;
        built.report.put("order_out", path.display().to_string());
    }
    built.report.write(io::stdout().lock())?;
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let l = read_labels(&args.labels)?;
    if l.n() != g.n() || l.is_directed() != g.is_directed() {
        bail!("label file has n={} directed={}, graph has n={} directed={}", l.n(), l.is_directed(), g.n(), g.is_directed());
    }
    let d = DistMatrix::compute(&g);
    let check = verify_cover(&l, &d);
    let mut report = Report::new("verify");
    report.put("n", g.n()).put("size", l.size()).put("max_label", l.max_label_size()).put("valid", check.is_valid());
    report.put("violations", check.violations.len());
    report.put("first_violations", &check.violations[..check.violations.len().min(10)]);
    report.write(io::stdout().lock())?;
    Ok(if check.is_valid() { 0 } else { EXIT_INVALID })
}

fn compare(args: CompareArgs) -> Result<u8> {
    let g = read_graph(&args.graph)?;
    let d = DistMatrix::compute(&g);
    let mut report = Report::new("compare");
    let labeling = match (&args.labels, args.algo) {
        (Some(path), _) => Some(read_labels(path)?),
        (None, Some(algo)) => Some(build_labeling(&g, &d, algo, None, false)?.labeling),
        (None, None) => None,
    };
    if let Some(l) = &labeling {
        if l.n() != g.n() || l.is_directed() != g.is_directed() {
            bail!("labeling does not match the graph");
        }
        report.put("size", l.size()).put("valid", verify_cover(l, &d).is_valid());
    }
    report.put("n", g.n());
    let mut code = 0;
    let mut optimum = None;
    match args.oracle {
        OracleKind::HlBnb => {
            let b = optimal_hl_bnb(&d, &UncoveredSet::initial(&d), args.budget)?;
            report.put("oracle", "hl-bnb").put("lower", b.lower).put("upper", b.upper).put("complete", b.complete).put("nodes", b.nodes);
            if b.complete {
                optimum = Some(b.upper);
            } else {
                code = EXIT_LIMIT;
            }
        }
        OracleKind::Hhl => {
            let (size, order) = optimal_hhl_bruteforce(&d, args.limit.unwrap_or(DEFAULT_HHL_LIMIT))?;
            report.put("oracle", "hhl").put("optimum", size).put("optimal_order", order.sequence());
            optimum = Some(size);
        }
        OracleKind::Hd => {
            let g = if g.is_directed() { g.to_undirected() } else { g.clone() };
            let hd = highway_dimension_bruteforce(&g, args.limit.unwrap_or(DEFAULT_HD_LIMIT))?;
            report.put("oracle", "hd").put("h", hd.h).put("vertex", hd.vertex).put("r", hd.r.map(|r| r.to_string()));
            report.put("hitting_set", &hd.hitting_set);
        }
    }
    if let (Some(l), Some(opt)) = (&labeling, optimum) {
        if opt > 0 {
            report.put("ratio", format!("{:.4}", l.size() as f64 / opt as f64));
        }
    }
    report.write(io::stdout().lock())?;
    Ok(code)
}

fn query(args: QueryArgs) -> Result<u8> {
    let l = read_labels(&args.labels)?;
    for v in [args.s, args.t] {
        if v >= l.n() {
            bail!("vertex {v} out of range 0..{}", l.n());
        }
    }
    let mut report = Report::new("query");
    report.put("s", args.s).put("t", args.t).put("dist", l.query(args.s, args.t));
    if let Some(path) = &args.graph {
        let g = read_graph(path)?;
        if g.n() != l.n() {
            bail!("graph has {} vertices, labels have {}", g.n(), l.n());
        }
        let truth = DistMatrix::compute(&g).get(args.s, args.t);
        report.put("true_dist", truth).put("exact", truth == l.query(args.s, args.t));
    }
    report.write(io::stdout().lock())?;
    Ok(0)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        let limit = matches!(
            cause.downcast_ref::<OracleError>(),
            Some(OracleError::TooLarge { .. } | OracleError::Highway(HighwayError::CapExceeded { .. }))
        ) || matches!(cause.downcast_ref::<HighwayError>(), Some(HighwayError::CapExceeded { .. }));
        if limit {
            return EXIT_LIMIT;
        }
    }
    EXIT_USAGE
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Build(a) => build(a),
        Command::Verify(a) => verify(a),
        Command::Compare(a) => compare(a),
        Command::Query(a) => query(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
