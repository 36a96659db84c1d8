use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use seppath::edge_systems::edge_system;
use seppath::fault::{decode, signature_table, Diagnosis, ProbeReport};
use seppath::oracle::{min_separating, OracleOptions, VERTEX_CAP};
use seppath::random_graphs::{run_experiment, subcritical_p, supercritical_p, ExperimentConfig};
use seppath::vertex_systems::{vertex_bounds, vertex_system};
use seppath::{profile, Covering, Element, Error, PathSystem, Separation, TargetKind, TargetSet, Tree};

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "seppath", version, about = "Separating path systems for trees and random graphs")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Edges,
    Vertices,
    VAndInterior,
}

impl Target {
    fn kind(self) -> TargetKind {
        match self {
            Target::Edges => TargetKind::Edges,
            Target::Vertices => TargetKind::Vertices,
            Target::VAndInterior => TargetKind::VerticesAndInteriorEdges,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Structural parameters of a tree.
    Profile { tree: PathBuf },
    /// Optimal edge-separating-covering system.
    ConstructEdge {
        tree: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Vertex-separating-covering system with its bounds.
    ConstructVertex {
        tree: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Checks a path system against a target set.
    Verify {
        tree: PathBuf,
        paths: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Exact minimum by exhaustive search (small trees only).
    Oracle {
        tree: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        no_cover: bool,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Seeded G(n, p) experiment.
    RandomExp(RandomExp),
    /// Names the faulty element from a probe report.
    Localize {
        tree: PathBuf,
        paths: PathBuf,
        #[arg(long, value_enum)]
        target: Target,
        /// One `P` or `F` per path.
        #[arg(long)]
        report: String,
    },
    /// Graphviz rendering of a tree.
    ExportDot {
        tree: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RandomExp {
    #[arg(long)]
    n: usize,
    #[arg(long, group = "prob")]
    p: Option<f64>,
    /// p = (2 ln n + 6 ln ln n) / n
    #[arg(long, group = "prob")]
    auto_supercritical: bool,
    /// p = (ln n - 3 ln ln n) / n
    #[arg(long, group = "prob")]
    auto_subcritical: bool,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

/// Failures of the driver itself, mapped to exit codes.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {}", path.display(), e)))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {}", path.display(), e)))
}

fn load_tree(path: &Path) -> Result<Tree, Failure> {
    Ok(Tree::parse(&read(path)?)?)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("plain data serializes");
    s.push('\n');
    s
}

#[derive(Serialize)]
#[serde(untagged)]
enum JsonElement {
    Vertex(usize),
    Edge([usize; 2]),
}

fn json_element(e: Element) -> JsonElement {
    match e {
        Element::Vertex(v) => JsonElement::Vertex(v),
        Element::Edge(e) => JsonElement::Edge([e.lo(), e.hi()]),
    }
}

fn labels(t: &Tree, vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|&v| t.label(v)).collect()
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ProfileDoc {
    n: usize,
    h1: usize,
    h2: usize,
    h2star: usize,
    leaves: Vec<usize>,
    deg2: Vec<usize>,
    interior_edges: Vec<[usize; 2]>,
    bare_paths: Vec<Vec<usize>>,
    set_i: Vec<Vec<usize>>,
    bunches: Vec<BunchDoc>,
    useful_leaves: Vec<usize>,
}

#[derive(Serialize)]
struct BunchDoc {
    vertices: Vec<usize>,
    size: usize,
}

fn cmd_profile(format: Format, tree: &Path) -> Outcome {
    let t = load_tree(tree)?;
    let p = profile(&t);
    let edge = |a: usize, b: usize| {
        let (x, y) = (t.label(a), t.label(b));
        [x.min(y), x.max(y)]
    };
    let doc = ProfileDoc {
        n: p.n,
        h1: p.h1,
        h2: p.h2,
        h2star: p.h2star,
        leaves: labels(&t, &p.leaves),
        deg2: labels(&t, &p.deg2),
        interior_edges: p.interior_edges.iter().map(|e| edge(e.lo(), e.hi())).collect(),
        bare_paths: p.bare_paths.iter().map(|b| labels(&t, b.vertices())).collect(),
        set_i: p.set_i.iter().map(|&i| labels(&t, p.bare_paths[i].vertices())).collect(),
        bunches: p
            .bunches
            .iter()
            .map(|b| BunchDoc {
                vertices: labels(&t, &b.vertices),
                size: b.size(),
            })
            .collect(),
        useful_leaves: labels(&t, &p.useful_leaves),
    };
    if format == Format::Json {
        return Ok(json(&doc));
    }
    let list = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let paths = |ps: &[Vec<usize>]| ps.iter().map(|p| list(p)).collect::<Vec<_>>().join(", ");
    let mut out = String::new();
    out += &format!("n: {}\nh1: {}\nh2: {}\nh2star: {}\n", doc.n, doc.h1, doc.h2, doc.h2star);
    out += &format!("leaves: {}\ndeg2: {}\n", list(&doc.leaves), list(&doc.deg2));
    let ie: Vec<String> = doc.interior_edges.iter().map(|e| format!("{}-{}", e[0], e[1])).collect();
    out += &format!("interiorEdges: {}\n", ie.join(" "));
    out += &format!("barePaths: {}\n", paths(&doc.bare_paths));
    out += &format!("setI: {}\n", paths(&doc.set_i));
    let bs: Vec<String> = doc.bunches.iter().map(|b| format!("{} (size {})", list(&b.vertices), b.size)).collect();
    out += &format!("bunches: {}\n", bs.join(", "));
    out += &format!("usefulLeaves: {}\n", list(&doc.useful_leaves));
    Ok(out)
}

#[derive(Serialize)]
struct SystemDoc {
    size: usize,
    paths: Vec<Vec<usize>>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct BoundsDoc {
    lower: usize,
    upper: usize,
    constructed_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sharp: Option<usize>,
}

#[derive(Serialize)]
struct VertexDoc {
    size: usize,
    paths: Vec<Vec<usize>>,
    bounds: BoundsDoc,
}

/// Text form: a size comment, then the path-system document.
fn system_text(fs: &PathSystem<'_>) -> String {
    format!("# size {}\n{}", fs.len(), fs.to_text())
}

fn cmd_construct_edge(format: Format, tree: &Path, output: Option<&Path>) -> Outcome {
    let t = load_tree(tree)?;
    let fs = edge_system(&t)?;
    if let Some(o) = output {
        write(o, &fs.to_text())?;
    }
    Ok(match format {
        Format::Json => json(&SystemDoc {
            size: fs.len(),
            paths: fs.labeled_paths(),
        }),
        Format::Text => system_text(&fs),
    })
}

fn cmd_construct_vertex(format: Format, tree: &Path, output: Option<&Path>) -> Outcome {
    let t = load_tree(tree)?;
    let fs = vertex_system(&t)?;
    let b = vertex_bounds(&t);
    for w in &b.warnings {
        eprintln!("warning: {}", w);
    }
    if let Some(o) = output {
        write(o, &fs.to_text())?;
    }
    Ok(match format {
        Format::Json => json(&VertexDoc {
            size: fs.len(),
            paths: fs.labeled_paths(),
            bounds: BoundsDoc {
                lower: b.lower,
                upper: b.upper,
                constructed_size: b.constructed_size,
                sharp: b.sharp,
            },
        }),
        Format::Text => {
            let mut out = format!("# lower {} upper {}", b.lower, b.upper);
            if let Some(s) = b.sharp {
                out += &format!(" sharp {}", s);
            }
            out.push('\n');
            out + &system_text(&fs)
        }
    })
}

#[derive(Serialize)]
struct VerifyDoc {
    size: usize,
    separates: bool,
    covers: bool,
    warnings: Vec<String>,
}

fn cmd_verify(format: Format, tree: &Path, paths: &Path, target: Target) -> Outcome {
    let t = load_tree(tree)?;
    let fs = PathSystem::parse(&t, &read(paths)?)?;
    let ts = TargetSet::of(&t, target.kind());
    for w in fs.lint() {
        eprintln!("warning: {}", w);
    }
    if let Separation::NotSeparated(a, b) = fs.separates(&ts) {
        return Err(Failure::Domain(
            Separation::NotSeparated(a.labeled(&t), b.labeled(&t)).to_string(),
        ));
    }
    if let Covering::NotCovered(s) = fs.covers(&ts) {
        return Err(Failure::Domain(Covering::NotCovered(s.labeled(&t)).to_string()));
    }
    Ok(match format {
        Format::Json => json(&VerifyDoc {
            size: fs.len(),
            separates: true,
            covers: true,
            warnings: fs.lint(),
        }),
        Format::Text => format!("Separates Covers size {}\n", fs.len()),
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct OracleDoc {
    size: usize,
    paths: Vec<Vec<usize>>,
    nodes_expanded: u64,
    /// Milliseconds.
    elapsed: f64,
}

fn cmd_oracle(format: Format, tree: &Path, target: Target, no_cover: bool, budget_ms: Option<u64>) -> Outcome {
    let t = load_tree(tree)?;
    let ts = TargetSet::of(&t, target.kind());
    let opts = OracleOptions {
        vertex_cap: VERTEX_CAP,
        budget_ms,
        include_trivial: None,
    };
    let r = min_separating(&t, &ts, !no_cover, &opts)?;
    let doc = OracleDoc {
        size: r.size,
        paths: r.system.labeled_paths(),
        nodes_expanded: r.nodes,
        elapsed: r.elapsed.as_secs_f64() * 1000.0,
    };
    Ok(match format {
        Format::Json => json(&doc),
        Format::Text => format!(
            "# size {} nodesExpanded {} elapsed {:.3} ms\n{}",
            doc.size,
            doc.nodes_expanded,
            doc.elapsed,
            r.system.to_text()
        ),
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct TrialDoc {
    seed: u64,
    success: bool,
    system_size: Option<usize>,
    isolated: usize,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct ExperimentDoc {
    n: usize,
    p: f64,
    trials: usize,
    master_seed: u64,
    per_trial: Vec<TrialDoc>,
    success_rate: f64,
    mean_isolated: f64,
}

fn cmd_random_exp(format: Format, a: &RandomExp) -> Outcome {
    if a.n < 2 {
        return Err(Failure::Usage("--n must be at least 2".into()));
    }
    if a.trials < 1 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let p = if a.auto_supercritical {
        supercritical_p(a.n)
    } else if a.auto_subcritical {
        subcritical_p(a.n)
    } else {
        match a.p {
            Some(p) if (0.0..=1.0).contains(&p) => p,
            Some(p) => return Err(Failure::Usage(format!("--p must lie in [0, 1], got {}", p))),
            None => {
                return Err(Failure::Usage(
                    "one of --p, --auto-supercritical, --auto-subcritical is required".into(),
                ))
            }
        }
    };
    let stats = run_experiment(&ExperimentConfig {
        n: a.n,
        p,
        trials: a.trials,
        seed: a.seed,
    });
    let doc = ExperimentDoc {
        n: a.n,
        p,
        trials: a.trials,
        master_seed: a.seed,
        per_trial: stats
            .per_trial
            .iter()
            .map(|t| TrialDoc {
                seed: t.seed,
                success: t.success,
                system_size: t.system_size,
                isolated: t.isolated,
            })
            .collect(),
        success_rate: stats.success_rate(),
        mean_isolated: stats.mean_isolated(),
    };
    Ok(match format {
        Format::Json => json(&doc),
        Format::Text => {
            let mut out = format!(
                "n {} p {} trials {} masterSeed {}\n",
                doc.n, doc.p, doc.trials, doc.master_seed
            );
            for t in &doc.per_trial {
                let size = t.system_size.map_or("-".to_string(), |s| s.to_string());
                out += &format!("seed {} success {} systemSize {} isolated {}\n", t.seed, t.success, size, t.isolated);
            }
            out += &format!("successRate {}\nmeanIsolated {}\n", doc.success_rate, doc.mean_isolated);
            out
        }
    })
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct LocalizeDoc {
    diagnosis: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    element: Option<JsonElement>,
    failed_set: Vec<usize>,
}

fn cmd_localize(format: Format, tree: &Path, paths: &Path, target: Target, report: &str) -> Outcome {
    let t = load_tree(tree)?;
    let fs = PathSystem::parse(&t, &read(paths)?)?;
    let table = signature_table(&fs, &TargetSet::of(&t, target.kind()))?;
    let report: ProbeReport = report.parse()?;
    let failed = report.failed();
    let (diagnosis, element) = match decode(&table, &report)?.labeled(&t) {
        Diagnosis::NoFault => ("NoFault", None),
        Diagnosis::Identified(e) => ("Identified", Some(e)),
        Diagnosis::Inconsistent { .. } => ("Inconsistent", None),
    };
    Ok(match format {
        Format::Json => json(&LocalizeDoc {
            diagnosis,
            element: element.map(json_element),
            failed_set: failed,
        }),
        Format::Text => {
            let set: Vec<String> = failed.iter().map(|i| i.to_string()).collect();
            match element {
                Some(e) => format!("{} {} failedSet {{{}}}\n", diagnosis, e, set.join(",")),
                None => format!("{} failedSet {{{}}}\n", diagnosis, set.join(",")),
            }
        }
    })
}

fn cmd_export_dot(tree: &Path, output: Option<&Path>) -> Outcome {
    let dot = load_tree(tree)?.emit_dot();
    match output {
        Some(o) => {
            write(o, &dot)?;
            Ok(String::new())
        }
        None => Ok(dot),
    }
}

fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Profile { tree } => cmd_profile(f, tree),
        Command::ConstructEdge { tree, output } => cmd_construct_edge(f, tree, output.as_deref()),
        Command::ConstructVertex { tree, output } => cmd_construct_vertex(f, tree, output.as_deref()),
        Command::Verify { tree, paths, target } => cmd_verify(f, tree, paths, *target),
        Command::Oracle {
            tree,
            target,
            no_cover,
            budget_ms,
        } => cmd_oracle(f, tree, *target, *no_cover, *budget_ms),
        Command::RandomExp(a) => cmd_random_exp(f, a),
        Command::Localize {
            tree,
            paths,
            target,
            report,
        } => cmd_localize(f, tree, paths, *target, report),
        Command::ExportDot { tree, output } => cmd_export_dot(tree, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("{}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("UsageError: {}", msg);
            ExitCode::from(2)
        }
    }
}
