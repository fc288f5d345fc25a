//! `mincut-graphs`: command-line analysis of minimum edge-cut structure.
//!
//! Every subcommand emits deterministic JSON by default; `--format text`
//! gives a human-readable rendering and `--format dot` exports the
//! subcommand's principal graph. Exit codes: 0 success, 1 usage or I/O
//! error, 2 parse error, 3 size limit, 4 synthesis retries exhausted,
//! 5 law violation found, 6 no representation within bound.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mincut_core::laws::{run_default_suite, LawReport};
use mincut_core::synthesis::certificate_intersection_graph;
use mincut_core::{
    atlas, build_mincut_graph, enumerate_mincuts, graph, io as gio, isomorphic, ix_upper_bound,
    operator_trace, property_report, r_intersection_number, search_mincut_duals, synthesize_host,
    DegreeProfile, Error, Graph, Limits, OperatorIndex,
};

#[derive(Parser)]
#[command(
    name = "mincut-graphs",
    version,
    about = "Enumerate minimum edge-cuts, build mincut graphs, and check their structural laws"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree profile, edge connectivity, all mincuts, structural
    /// properties, and a mincut-graph summary for one graph.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// The mincut graph itself, with per-vertex cut labels.
    MincutGraph {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Iterate the mincut-graph operator and report the index.
    Iterate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Maximum number of operator applications.
        #[arg(long, default_value_t = 16)]
        cap: usize,
    },
    /// Build and verify a host graph whose mincut graph matches the input.
    Synthesize {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Maximum number of target-degree bumps.
        #[arg(long, default_value_t = 4)]
        max_retries: usize,
    },
    /// Run the whole default law suite and report every verdict.
    VerifyLaws {
        #[command(flatten)]
        common: CommonArgs,
        /// Seed for the random tree instances.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Search for the minimum universe of an r-uniform set representation.
    IntersectionNumber {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Subset size.
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// Require one-element pairwise intersections with no element in
        /// three or more subsets.
        #[arg(long)]
        constrained: bool,
        /// Largest universe size to try.
        #[arg(long, default_value_t = 12)]
        max_universe: usize,
    },
    /// Counts (and optionally members) of the connected-graph atlas.
    Atlas {
        #[command(flatten)]
        common: CommonArgs,
        /// List every graph instead of only counts.
        #[arg(long)]
        list: bool,
    },
    /// Exhaustive dual-pair and self-dual search over the atlas.
    DualSearch {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Graph file, edge-list or JSON ('-' reads standard input).
    #[arg(value_name = "FILE")]
    file: Option<PathBuf>,
    /// Built-in family spec such as 'wheel,6' or 'random_tree,8,42'.
    #[arg(long, value_name = "NAME,PARAMS")]
    family: Option<String>,
}

#[derive(Args)]
struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Vertex bound for the enumeration sweep (atlas: largest size).
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

impl CommonArgs {
    fn limits(&self) -> Limits {
        match self.max_n {
            Some(n) => Limits::with_max_n(n),
            None => Limits::default(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    });
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) => 2,
        Error::SizeLimitExceeded(_) => 3,
        Error::RetriesExhausted(_) => 4,
        Error::NotFoundWithinBound(_) => 6,
        _ => 1,
    }
}

fn load_graph(input: &InputArgs) -> Result<Graph, Error> {
    if let Some(spec) = &input.family {
        let mut parts = spec.split(',');
        let name = parts.next().unwrap_or_default();
        let params: Vec<u64> = parts
            .map(|p| {
                p.trim()
                    .parse()
                    .map_err(|_| Error::BadParams(format!("bad family parameter '{p}'")))
            })
            .collect::<Result<_, _>>()?;
        return graph::family(name, &params);
    }
    let path = input.file.as_ref().expect("clap guarantees one source");
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?
    };
    gio::parse_auto(&text)
}

fn emit<T: Serialize>(
    format: Format,
    report: &T,
    text: String,
    dot: Option<&Graph>,
) -> Result<i32, Error> {
    match format {
        Format::Json => {
            let json =
                serde_json::to_string_pretty(report).expect("report serialization cannot fail");
            println!("{json}");
        }
        Format::Text => print!("{text}"),
        Format::Dot => match dot {
            Some(g) => print!("{}", gio::to_dot(g)),
            None => {
                return Err(Error::BadParams(
                    "this subcommand has no DOT rendering".into(),
                ))
            }
        },
    }
    Ok(0)
}

#[derive(Serialize)]
struct GraphSummary {
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphSummary {
    fn of(g: &Graph) -> Self {
        GraphSummary {
            n: g.n(),
            m: g.m(),
            edges: g.edges().to_vec(),
        }
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    n: usize,
    m: usize,
    degree_profile: DegreeProfile,
    lambda: usize,
    mincuts: Vec<Vec<usize>>,
    properties: mincut_core::PropertyReport,
    mincut_graph: XSummary,
}

#[derive(Serialize)]
struct XSummary {
    n: usize,
    m: usize,
    connected: bool,
}

fn cmd_analyze(input: InputArgs, common: CommonArgs) -> Result<i32, Error> {
    let g = load_graph(&input)?;
    let limits = common.limits();
    let family = enumerate_mincuts(&g, limits)?;
    let properties = property_report(&g, limits)?;
    let x = build_mincut_graph(&g, limits)?;
    let report = AnalyzeReport {
        n: g.n(),
        m: g.m(),
        degree_profile: g.degree_profile(),
        lambda: family.lambda,
        mincuts: family.cuts.clone(),
        properties,
        mincut_graph: XSummary {
            n: x.graph.n(),
            m: x.graph.m(),
            connected: x.graph.is_connected(),
        },
    };
    let mut text = format!(
        "n={} m={}\ndegrees={:?} delta={} Delta={} V_delta={:?}\nlambda={} mincuts={}\n",
        report.n,
        report.m,
        report.degree_profile.degrees,
        report.degree_profile.delta_min,
        report.degree_profile.delta_max,
        report.degree_profile.v_delta,
        report.lambda,
        report.mincuts.len(),
    );
    for cut in &report.mincuts {
        text.push_str(&format!("  {cut:?}\n"));
    }
    text.push_str(&format!(
        "regular={} maximally_edge_connected={} super_lambda={} self_dual={}\n\
         mincut graph: n={} m={} connected={}\n",
        report.properties.is_regular,
        report.properties.is_maximally_edge_connected,
        report.properties.is_super_lambda,
        report.properties.is_self_dual,
        report.mincut_graph.n,
        report.mincut_graph.m,
        report.mincut_graph.connected,
    ));
    emit(common.format, &report, text, Some(&g))
}

fn cmd_mincut_graph(input: InputArgs, common: CommonArgs) -> Result<i32, Error> {
    let g = load_graph(&input)?;
    let x = build_mincut_graph(&g, common.limits())?;
    let mut text = format!("mincut graph: n={} m={}\n", x.graph.n(), x.graph.m());
    for (i, label) in x.labels.iter().enumerate() {
        text.push_str(&format!("  vertex {i}: cut {label:?}\n"));
    }
    for &(u, v) in x.graph.edges() {
        text.push_str(&format!("  {u} -- {v}\n"));
    }
    let dot = x.graph.clone();
    emit(common.format, &x, text, Some(&dot))
}

#[derive(Serialize)]
#[serde(untagged)]
enum IndexJson {
    Finite(usize),
    Named(&'static str),
}

#[derive(Serialize)]
struct CycleInfo {
    repeats_iterate: usize,
    detected_at: usize,
}

#[derive(Serialize)]
struct IterateReport {
    cap: usize,
    iterates: Vec<GraphSummary>,
    index: IndexJson,
    cycle: Option<CycleInfo>,
}

fn cmd_iterate(input: InputArgs, common: CommonArgs, cap: usize) -> Result<i32, Error> {
    let g = load_graph(&input)?;
    let trace = operator_trace(&g, cap, common.limits())?;
    let (index, cycle) = match trace.index {
        OperatorIndex::Finite(k) => (IndexJson::Finite(k), None),
        OperatorIndex::Infinite {
            repeats_iterate,
            detected_at,
        } => (
            IndexJson::Named("infinite"),
            Some(CycleInfo {
                repeats_iterate,
                detected_at,
            }),
        ),
        OperatorIndex::Indeterminate => (IndexJson::Named("indeterminate"), None),
    };
    let report = IterateReport {
        cap: trace.cap,
        iterates: trace.iterates.iter().map(GraphSummary::of).collect(),
        index,
        cycle,
    };
    let mut text = String::new();
    for (i, it) in report.iterates.iter().enumerate() {
        text.push_str(&format!("iterate {i}: n={} m={}\n", it.n, it.m));
    }
    text.push_str(&match &report.index {
        IndexJson::Finite(k) => format!("index: {k}\n"),
        IndexJson::Named(s) => format!("index: {s}\n"),
    });
    if let Some(c) = &report.cycle {
        text.push_str(&format!(
            "iterate {} repeats iterate {}\n",
            c.detected_at, c.repeats_iterate
        ));
    }
    emit(common.format, &report, text, None)
}

fn cmd_synthesize(input: InputArgs, common: CommonArgs, max_retries: usize) -> Result<i32, Error> {
    let g = load_graph(&input)?;
    let report = synthesize_host(&g, max_retries, common.limits())?;
    let text = format!(
        "host: n={} m={}\ntarget_degree={} clique_size={} retries={}\nverified={}\n{}",
        report.host.n(),
        report.host.m(),
        report.target_degree,
        report.clique_size,
        report.retries,
        report.verified.isomorphic,
        gio::write_edge_list(&report.host),
    );
    let dot = report.host.clone();
    emit(common.format, &report, text, Some(&dot))
}

#[derive(Serialize)]
struct SuiteReport {
    all_hold: bool,
    laws: Vec<LawReport>,
}

fn cmd_verify_laws(common: CommonArgs, seed: u64) -> Result<i32, Error> {
    let laws = run_default_suite(seed, common.limits())?;
    let all_hold = laws.iter().all(|l| l.holds);
    let report = SuiteReport { all_hold, laws };
    let mut text = String::new();
    for l in &report.laws {
        text.push_str(&format!(
            "{:<24} {:<22} {} witness={} {}\n",
            l.law,
            l.params,
            if l.holds { "ok " } else { "FAIL" },
            l.witness_size,
            l.detail,
        ));
    }
    text.push_str(&format!("all_hold={}\n", report.all_hold));
    let code = emit(common.format, &report, text, None)?;
    Ok(if report.all_hold { code } else { 5 })
}

#[derive(Serialize)]
struct CertReport {
    r: usize,
    constrained: bool,
    universe_size: usize,
    subsets: Vec<Vec<u32>>,
    rebuilt_matches: bool,
    ix_upper_bound: usize,
    ix_upper_bound_bumped: usize,
}

fn cmd_intersection_number(
    input: InputArgs,
    common: CommonArgs,
    r: usize,
    constrained: bool,
    max_universe: usize,
) -> Result<i32, Error> {
    let g = load_graph(&input)?;
    let cert = r_intersection_number(&g, r, constrained, max_universe, common.limits())?;
    let rebuilt = certificate_intersection_graph(&cert);
    let report = CertReport {
        r: cert.r,
        constrained: cert.constrained,
        universe_size: cert.universe_size,
        subsets: cert.subsets.clone(),
        rebuilt_matches: isomorphic(&rebuilt, &g)?.isomorphic,
        ix_upper_bound: ix_upper_bound(&g, false),
        ix_upper_bound_bumped: ix_upper_bound(&g, true),
    };
    let mut text = format!(
        "r={} constrained={} universe_size={}\n",
        report.r, report.constrained, report.universe_size
    );
    for (v, s) in report.subsets.iter().enumerate() {
        text.push_str(&format!("  vertex {v}: {s:?}\n"));
    }
    text.push_str(&format!(
        "rebuilt_matches={}\nix_upper_bound={} ix_upper_bound_bumped={}\n",
        report.rebuilt_matches, report.ix_upper_bound, report.ix_upper_bound_bumped
    ));
    emit(common.format, &report, text, None)
}

#[derive(Serialize)]
struct AtlasReport {
    max_n: usize,
    counts: Vec<AtlasCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graphs: Option<Vec<GraphSummary>>,
}

#[derive(Serialize)]
struct AtlasCount {
    n: usize,
    connected_classes: usize,
}

fn cmd_atlas(common: CommonArgs, list: bool) -> Result<i32, Error> {
    let max_n = common.max_n.unwrap_or(7);
    let graphs = atlas::connected_atlas(max_n)?;
    let mut counts = vec![0usize; max_n + 1];
    for g in &graphs {
        counts[g.n()] += 1;
    }
    let report = AtlasReport {
        max_n,
        counts: (1..=max_n)
            .map(|n| AtlasCount {
                n,
                connected_classes: counts[n],
            })
            .collect(),
        graphs: list.then(|| graphs.iter().map(GraphSummary::of).collect()),
    };
    let mut text = String::new();
    for c in &report.counts {
        text.push_str(&format!(
            "n={}: {} connected classes\n",
            c.n, c.connected_classes
        ));
    }
    if let Some(gs) = &report.graphs {
        for g in gs {
            text.push_str(&format!("  n={} m={} edges={:?}\n", g.n, g.m, g.edges));
        }
    }
    emit(common.format, &report, text, None)
}

fn cmd_dual_search(common: CommonArgs) -> Result<i32, Error> {
    let max_n = common.max_n.unwrap_or(7);
    let report = search_mincut_duals(max_n, Limits::default())?;
    let mut text = format!("self-dual graphs up to {} vertices:\n", report.max_n);
    for g in &report.self_dual {
        text.push_str(&format!(
            "  n={} m={} edges={:?}\n",
            g.n(),
            g.m(),
            g.edges()
        ));
    }
    text.push_str(&format!("dual pairs: {}\n", report.dual_pairs.len()));
    for (g, h) in &report.dual_pairs {
        text.push_str(&format!(
            "  n={} m={} edges={:?}  <->  n={} m={} edges={:?}\n",
            g.n(),
            g.m(),
            g.edges(),
            h.n(),
            h.m(),
            h.edges()
        ));
    }
    emit(common.format, &report, text, None)
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Analyze { input, common } => cmd_analyze(input, common),
        Command::MincutGraph { input, common } => cmd_mincut_graph(input, common),
        Command::Iterate { input, common, cap } => cmd_iterate(input, common, cap),
        Command::Synthesize {
            input,
            common,
            max_retries,
        } => cmd_synthesize(input, common, max_retries),
        Command::VerifyLaws { common, seed } => cmd_verify_laws(common, seed),
        Command::IntersectionNumber {
            input,
            common,
            r,
            constrained,
            max_universe,
        } => cmd_intersection_number(input, common, r, constrained, max_universe),
        Command::Atlas { common, list } => cmd_atlas(common, list),
        Command::DualSearch { common } => cmd_dual_search(common),
    }
}
