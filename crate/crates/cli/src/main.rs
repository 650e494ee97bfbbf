// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `krontri`: generate factors, write product manifests, stream product
//! edges and query exact ground truth.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kron_triangles::directed::{directed_edge_census, directed_vertex_census, DirEdgeType, DirVertexType};
use kron_triangles::factor::{
    gen_er, gen_trianglecap_pa, make_clique, make_directed_cycle, make_hub_cycle, random_labels, reduce_to_trianglecap,
    RngSeed,
};
use kron_triangles::io::{
    read_edge_list_path, read_labels_path, write_edge_list, write_labels, write_trussness, write_tsv, ReadOptions,
};
use kron_triangles::labeled::{labeled_edge_census, labeled_vertex_census};
use kron_triangles::manifest::{FactorSource, Manifest};
use kron_triangles::undirected::{clustering_coefficients, triangle_stats};
use kron_triangles::validate::{run_scenario_sized, SCENARIOS};
use kron_triangles::{product_truss, truss_decompose, BlockRange, EmitMode, Error, Graph, MaterializeGuard};

#[derive(Parser)]
#[command(
    name = "krontri",
    version,
    about = "Kronecker product graphs with exact triangle and truss ground truth"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a factor graph as a 1-based edge list.
    GenFactor(GenFactorArgs),
    /// Per-vertex or per-edge triangle statistics of one graph, as TSV.
    Stats(StatsArgs),
    /// Write a product manifest with exact totals.
    KronManifest(ManifestArgs),
    /// Stream product edges for a range of left-factor blocks.
    KronEdges(EdgesArgs),
    /// Ground-truth records for product vertices and edges, one JSON object per line.
    KronQuery(QueryArgs),
    /// Edge list of the egonet of a product vertex.
    Egonet(EgonetArgs),
    /// Trussness of every edge of a graph or of a product.
    Truss(TrussArgs),
    /// Run a named oracle-equivalence scenario.
    Validate(ValidateArgs),
}

#[derive(Args, Clone, Default)]
struct LoadArgs {
    /// Vertex count (default: header or largest id).
    #[arg(long)]
    n: Option<usize>,
    /// Keep arcs as given.
    #[arg(long, conflicts_with = "undirected")]
    directed: bool,
    /// Symmetrize every edge (the default).
    #[arg(long)]
    undirected: bool,
    /// Vertex ids start at 0.
    #[arg(long)]
    zero_based: bool,
    #[arg(long)]
    strip_loops: bool,
    /// Put a self loop on every vertex after loading.
    #[arg(long)]
    add_loops: bool,
}

impl LoadArgs {
    fn options(&self) -> ReadOptions {
        ReadOptions {
            n: self.n,
            directed: self.directed,
            zero_based: self.zero_based,
            strip_loops: self.strip_loops,
            add_loops: self.add_loops,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorKind {
    /// K_n.
    Clique,
    /// J_n: K_n with every vertex looped.
    CliqueLoops,
    /// 4-cycle plus a hub (5 vertices).
    HubCycle,
    DirectedCycle,
    Er,
    ErDirected,
    /// Every edge in at most one triangle.
    TrianglecapPa,
    /// Reduce `--input` until every edge lies in at most one triangle.
    Reduce,
}

#[derive(Args)]
struct GenFactorArgs {
    kind: FactorKind,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Edge probability for `er` kinds.
    #[arg(long, default_value_t = 0.2)]
    p: f64,
    /// `er` only: loop each vertex with probability `p`.
    #[arg(long)]
    loops: bool,
    #[arg(long)]
    input: Option<PathBuf>,
    /// Also write uniform random labels `1..=L`.
    #[arg(long, requires = "labels_out")]
    labels: Option<u32>,
    #[arg(long)]
    labels_out: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Report {
    Vertex,
    Edge,
}

#[derive(Args)]
struct StatsArgs {
    graph: PathBuf,
    #[command(flatten)]
    load: LoadArgs,
    /// Vertex labels; switches to the labeled census.
    #[arg(long)]
    labels: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Report::Vertex)]
    report: Report,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ManifestArgs {
    left: PathBuf,
    right: PathBuf,
    /// Load options applied to both factors.
    #[command(flatten)]
    load: LoadArgs,
    #[arg(long)]
    left_labels: Option<PathBuf>,
    /// Put a self loop on every right-factor vertex (`A ⊗ (B + I)`).
    #[arg(long)]
    right_add_loops: bool,
    /// Seeds recorded in the manifest.
    #[arg(long)]
    seed: Vec<u64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EdgesArgs {
    manifest: PathBuf,
    /// First left-factor block (1-based).
    #[arg(long)]
    lo: Option<u64>,
    /// Last left-factor block, inclusive.
    #[arg(long)]
    hi: Option<u64>,
    /// Only `p <= q` of each undirected pair.
    #[arg(long)]
    canonical: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct QueryArgs {
    manifest: PathBuf,
    #[arg(long)]
    vertex: Vec<u64>,
    /// `p,q`
    #[arg(long, value_parser = parse_pair)]
    edge: Vec<(u64, u64)>,
}

#[derive(Args)]
struct EgonetArgs {
    manifest: PathBuf,
    vertex: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TrussArgs {
    /// Graph edge list, or a manifest with `--manifest`.
    input: PathBuf,
    #[arg(long)]
    manifest: bool,
    #[command(flatten)]
    load: LoadArgs,
    /// Print `kappa size` per truss level instead of per-edge values.
    #[arg(long)]
    levels: bool,
    /// Materialize product trussness beyond the default size guard.
    #[arg(long)]
    force: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Scenario name, or `all`.
    scenario: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    instances: usize,
}

fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    let (p, q) = s.split_once(',').ok_or_else(|| format!("expected p,q, got '{s}'"))?;
    let id = |t: &str| t.trim().parse::<u64>().map_err(|e| format!("'{t}': {e}"));
    Ok((id(p)?, id(q)?))
}

enum Failure {
    Validation(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Manifest(_) | Error::Consistency(_) => Failure::Validation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn gen_factor(args: GenFactorArgs) -> Outcome {
    let seed = RngSeed(args.seed);
    let g = match args.kind {
        FactorKind::Clique => make_clique(args.n, false)?,
        FactorKind::CliqueLoops => make_clique(args.n, true)?,
        FactorKind::HubCycle => make_hub_cycle(),
        FactorKind::DirectedCycle => make_directed_cycle(args.n)?,
        FactorKind::Er => gen_er(args.n, args.p, seed, false, args.loops)?,
        FactorKind::ErDirected => gen_er(args.n, args.p, seed, true, false)?,
        FactorKind::TrianglecapPa => gen_trianglecap_pa(args.n, seed)?,
        FactorKind::Reduce => {
            let input = args
                .input
                .as_deref()
                .ok_or_else(|| Failure::Usage("reduce needs --input".into()))?;
            reduce_to_trianglecap(&read_edge_list_path(input, &ReadOptions::default())?, seed)?
        }
    };
    let mut w = sink(args.output.as_deref())?;
    write_edge_list(&g, &mut w)?;
    w.flush()?;
    if let (Some(count), Some(path)) = (args.labels, args.labels_out.as_deref()) {
        let labels = random_labels(g.n(), count, RngSeed(args.seed ^ 0x6c61_6265_6c73))?;
        write_labels(&labels, BufWriter::new(File::create(path)?))?;
    }
    Ok(())
}

fn load_graph(path: &Path, load: &LoadArgs, labels: Option<&Path>) -> Result<Graph, Failure> {
    let g = read_edge_list_path(path, &load.options())?;
    Ok(match labels {
        Some(l) => {
            let labels = read_labels_path(l, g.n(), None)?;
            g.with_labels(labels)?
        }
        None => g,
    })
}

fn stats(args: StatsArgs) -> Outcome {
    let g = load_graph(&args.graph, &args.load, args.labels.as_deref())?;
    let mut w = sink(args.output.as_deref())?;
    let id = |v: usize| (v + 1).to_string();
    match (g.is_directed(), g.labels().is_some(), args.report) {
        (true, _, Report::Vertex) => {
            let census = directed_vertex_census(&g)?;
            let mut header = vec!["vertex"];
            header.extend(DirVertexType::ALL.iter().map(|t| t.code()));
            let rows = (0..g.n()).map(|v| {
                let mut r = vec![id(v)];
                r.extend(DirVertexType::ALL.iter().map(|&t| census.at(t, v).to_string()));
                r
            });
            write_tsv(&mut w, &header, rows)?;
        }
        (true, _, Report::Edge) => {
            let census = directed_edge_census(&g)?;
            let mut header = vec!["source", "target"];
            header.extend(DirEdgeType::ALL.iter().map(|t| t.code()));
            let rows = g.adj().iter().map(|(u, v, _)| {
                let mut r = vec![id(u), id(v)];
                r.extend(DirEdgeType::ALL.iter().map(|&t| census.at(t, u, v).to_string()));
                r
            });
            write_tsv(&mut w, &header, rows)?;
        }
        (false, true, Report::Vertex) => {
            let census = labeled_vertex_census(&g)?;
            let names: Vec<String> = census.iter().map(|(t, _)| t.to_string()).collect();
            let mut header = vec!["vertex", "label"];
            header.extend(names.iter().map(String::as_str));
            let labels = g.labels().expect("labeled");
            let rows = (0..g.n()).map(|v| {
                let mut r = vec![id(v), labels.of(v).to_string()];
                r.extend(census.iter().map(|(_, c)| c[v].to_string()));
                r
            });
            write_tsv(&mut w, &header, rows)?;
        }
        (false, true, Report::Edge) => {
            let census = labeled_edge_census(&g)?;
            let rows = census.iter().flat_map(|(t, m)| {
                m.iter()
                    .map(move |(u, v, c)| vec![id(u), id(v), t.to_string(), c.to_string()])
            });
            write_tsv(&mut w, &["source", "target", "type", "triangles"], rows)?;
        }
        (false, false, Report::Vertex) => {
            let t = triangle_stats(&g)?;
            let cc = clustering_coefficients(&g)?;
            let rows = (0..g.n()).map(|v| {
                vec![
                    id(v),
                    g.degree(v).to_string(),
                    t.per_vertex[v].to_string(),
                    cc[v].to_string(),
                ]
            });
            write_tsv(&mut w, &["vertex", "degree", "triangles", "clustering"], rows)?;
        }
        (false, false, Report::Edge) => {
            let t = triangle_stats(&g)?;
            let rows = t
                .per_edge
                .iter()
                .filter(|&(u, v, _)| u < v)
                .map(|(u, v, c)| vec![id(u), id(v), c.to_string()]);
            write_tsv(&mut w, &["source", "target", "triangles"], rows)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn kron_manifest(args: ManifestArgs) -> Outcome {
    let mut left = FactorSource::new(&args.left, args.load.options());
    left.labels = args.left_labels.clone();
    let mut right_opts = args.load.options();
    right_opts.add_loops |= args.right_add_loops;
    let right = FactorSource::new(&args.right, right_opts);
    let dir = match args.output.as_deref().and_then(Path::parent) {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => std::env::current_dir()?,
    };
    let built = Manifest::build(&left, &right, &dir, args.seed)?;
    let mut w = sink(args.output.as_deref())?;
    writeln!(w, "{}", built.manifest.to_json()?)?;
    w.flush()?;
    Ok(())
}

fn kron_edges(args: EdgesArgs) -> Outcome {
    let h = Manifest::open(&args.manifest)?.handle()?;
    let n_a = h.left().n() as u64;
    let range = BlockRange::new(args.lo.unwrap_or(1), args.hi.unwrap_or(n_a), n_a)?;
    let mode = if args.canonical {
        EmitMode::Canonical
    } else {
        EmitMode::All
    };
    let mut w = sink(args.output.as_deref())?;
    h.stream_edges(range, mode, |p, q| Ok(writeln!(w, "{p} {q}")?))?;
    w.flush()?;
    Ok(())
}

fn kron_query(args: QueryArgs) -> Outcome {
    if args.vertex.is_empty() && args.edge.is_empty() {
        return Err(Failure::Usage("give at least one --vertex or --edge".into()));
    }
    let h = Manifest::open(&args.manifest)?.handle()?;
    let mut w = sink(None)?;
    let json = |e: serde_json::Error| Failure::Usage(e.to_string());
    for &p in &args.vertex {
        writeln!(
            w,
            "{}",
            serde_json::to_string(&h.vertex_ground_truth(p)?).map_err(json)?
        )?;
    }
    for &(p, q) in &args.edge {
        writeln!(
            w,
            "{}",
            serde_json::to_string(&h.edge_ground_truth(p, q)?).map_err(json)?
        )?;
    }
    w.flush()?;
    Ok(())
}

fn egonet(args: EgonetArgs) -> Outcome {
    let h = Manifest::open(&args.manifest)?.handle()?;
    let ego = h.egonet(args.vertex)?;
    let mut w = sink(args.output.as_deref())?;
    writeln!(
        w,
        "# egonet of {}: {} vertices, {} edges",
        ego.center,
        ego.members.len(),
        ego.edge_count()
    )?;
    for (x, y) in ego.graph.undirected_edges() {
        writeln!(w, "{} {}", ego.members[x], ego.members[y])?;
    }
    w.flush()?;
    Ok(())
}

fn truss(args: TrussArgs) -> Outcome {
    let mut w = sink(args.output.as_deref())?;
    if args.manifest {
        let loaded = Manifest::open(&args.input)?;
        let pt = product_truss(&loaded.left, &loaded.right)?;
        if args.levels {
            let max = pt.left().max_trussness().max(2);
            for kappa in 2..=max + 1 {
                writeln!(w, "{kappa} {}", pt.level_size(kappa))?;
            }
        } else {
            let guard = if args.force {
                MaterializeGuard::unlimited()
            } else {
                MaterializeGuard::default()
            };
            for (p, q, t) in pt.materialize(&guard)? {
                writeln!(w, "{p} {q} {t}")?;
            }
        }
    } else {
        let g = load_graph(&args.input, &args.load, None)?;
        let d = truss_decompose(&g)?;
        if args.levels {
            for kappa in 2..=d.max_trussness() + 1 {
                writeln!(w, "{kappa} {}", d.level(kappa).len())?;
            }
        } else {
            write_trussness(&d, &mut w)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn validate(args: ValidateArgs) -> Outcome {
    let names: Vec<&str> = if args.scenario == "all" {
        SCENARIOS.to_vec()
    } else {
        vec![args.scenario.as_str()]
    };
    let mut failed = 0;
    for name in names {
        let r = run_scenario_sized(name, args.seed, args.instances)?;
        println!("{r}");
        failed += usize::from(!r.passed());
    }
    match failed {
        0 => Ok(()),
        k => Err(Failure::Validation(format!("{k} scenario(s) failed"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::GenFactor(a) => gen_factor(a),
        Command::Stats(a) => stats(a),
        Command::KronManifest(a) => kron_manifest(a),
        Command::KronEdges(a) => kron_edges(a),
        Command::KronQuery(a) => kron_query(a),
        Command::Egonet(a) => egonet(a),
        Command::Truss(a) => truss(a),
        Command::Validate(a) => validate(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("krontri: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("krontri: {msg}");
            ExitCode::from(2)
        }
    }
}
