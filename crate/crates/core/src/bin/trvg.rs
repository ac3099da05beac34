use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trvg::analysis::{
    bipartite_bound, classify_complement_power, classify_complete_bipartite, edge_bound, gseer_check_auto, Certificate,
    Evidence, SurfaceKind, Verdict,
};
use trvg::constructors::{construct, construct_torus, fixed_layout, ConstructError, FixedLayout};
use trvg::geometry::{extract_visibility_graph, Layout};
use trvg::graph::{CreationStep, Graph, GraphFamily};
use trvg::io::{self, IoError};
use trvg::rational::Rational;
use trvg::render::{render_svg, RenderSpec};
use trvg::search::{search_graph, SearchOptions, DEFAULT_EXACT_MAX};

#[derive(Parser)]
#[command(name = "trvg", version, about = "Transparent rectangle visibility graphs")]
struct Cli {
    /// Print nothing on stdout; the exit code carries the result.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurfaceArg {
    Plane,
    Torus,
}

#[derive(Args)]
struct SurfaceFlags {
    /// Work on the flat torus instead of the plane.
    #[arg(long)]
    torus: bool,
    #[arg(long, value_enum, conflicts_with = "torus")]
    surface: Option<SurfaceArg>,
}

impl SurfaceFlags {
    fn kind(&self) -> SurfaceKind {
        match (self.torus, self.surface) {
            (true, _) | (_, Some(SurfaceArg::Torus)) => SurfaceKind::Torus,
            _ => SurfaceKind::Plane,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a layout for a graph family.
    ///
    /// Families: path N, cycle N, complete N, tree P1,P2,.. (1-based parents,
    /// root 0), threshold STEPS (e.g. iuiu), kpq P Q, rect-grid M N,
    /// tri-grid ROWS COLS, hex-grid ROWS COLS, power-cycle N A, dan N A,
    /// extremal N, extremal-torus N, fixed NAME (D2_9, D2_10_torus).
    Construct {
        family: String,
        params: Vec<String>,
        #[command(flatten)]
        surface: SurfaceFlags,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Print the visibility graph of a layout.
    Extract {
        layout: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exit 0 iff the layout's visibility graph equals the graph, labels included.
    Verify { layout: PathBuf, graph: PathBuf },
    /// Decide a family member and print a certificate.
    Classify {
        #[command(subcommand)]
        which: ClassifyCommand,
    },
    /// Check a bipartite graph against the edge bound.
    Bound {
        graph: PathBuf,
        #[command(flatten)]
        surface: SurfaceFlags,
    },
    /// Evaluate the counting inequalities on a bipartite layout.
    Gseer { layout: PathBuf },
    /// Decide a graph by exact search, obstruction search or random search.
    Search {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EXACT_MAX)]
        exact_max: usize,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest induced subgraph tried when looking for an obstruction.
        #[arg(long, default_value_t = 10)]
        max_k: usize,
        #[command(flatten)]
        surface: SurfaceFlags,
    },
    /// Draw a layout as SVG.
    Render {
        layout: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Pixels per unit, e.g. 40 or 81/2.
        #[arg(long, default_value = "40")]
        scale: String,
    },
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// The complete bipartite graph K_{p,q}.
    Kpq {
        p: usize,
        q: usize,
        #[command(flatten)]
        surface: SurfaceFlags,
    },
    /// D^a_n, the complement of the a-th power of the n-cycle.
    Dan {
        n: usize,
        a: usize,
        #[command(flatten)]
        surface: SurfaceFlags,
    },
}

const USAGE: u8 = 2;
const BAD_INPUT: u8 = 3;

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: USAGE,
        msg: msg.into(),
    }
}

fn bad_input(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: BAD_INPUT,
        msg: msg.to_string(),
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Write { .. } => usage(e.to_string()),
            _ => bad_input(e),
        }
    }
}

struct Out {
    quiet: bool,
}

impl Out {
    fn print(&self, s: &str) {
        if !self.quiet {
            // A closed pipe (`| head`) is not an error worth reporting.
            let _ = writeln!(std::io::stdout().lock(), "{}", s.trim_end());
        }
    }

    /// Writes to `path` when given, otherwise prints.
    fn emit(&self, path: Option<&Path>, s: &str) -> Result<(), Failure> {
        match path {
            Some(p) => Ok(io::write_string(p, s)?),
            None => {
                self.print(s);
                Ok(())
            }
        }
    }
}

fn number(params: &[String], k: usize, what: &str) -> Result<usize, Failure> {
    let s = params.get(k).ok_or_else(|| usage(format!("missing {what}")))?;
    s.parse().map_err(|_| usage(format!("{what} must be a non-negative integer, got {s:?}")))
}

fn family_of(name: &str, params: &[String]) -> Result<GraphFamily, Failure> {
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(usage(format!("{name} takes {k} parameter(s), got {}", params.len())))
        }
    };
    let n = |k| number(params, k, "parameter");
    Ok(match name {
        "path" => {
            arity(1)?;
            GraphFamily::Path(n(0)?)
        }
        "cycle" => {
            arity(1)?;
            GraphFamily::Cycle(n(0)?)
        }
        "complete" => {
            arity(1)?;
            GraphFamily::Complete(n(0)?)
        }
        "tree" => {
            arity(1)?;
            let parents = params[0]
                .split(',')
                .map(|s| s.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| usage("tree parents must be a comma-separated list of integers"))?;
            GraphFamily::Tree(parents)
        }
        "threshold" => {
            arity(1)?;
            let s = &params[0];
            let tokens: Vec<String> = if s.contains(',') {
                s.split(',').map(|t| t.trim().to_string()).collect()
            } else {
                s.chars().map(String::from).collect()
            };
            let steps = tokens
                .iter()
                .map(|t| t.parse::<CreationStep>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| usage(e.to_string()))?;
            GraphFamily::Threshold(steps)
        }
        "kpq" | "complete-bipartite" => {
            arity(2)?;
            GraphFamily::CompleteBipartite(n(0)?, n(1)?)
        }
        "rect-grid" => {
            arity(2)?;
            GraphFamily::RectGrid(n(0)?, n(1)?)
        }
        "tri-grid" => {
            arity(2)?;
            GraphFamily::TriGrid { rows: n(0)?, cols: n(1)? }
        }
        "hex-grid" => {
            arity(2)?;
            GraphFamily::HexGrid { rows: n(0)?, cols: n(1)? }
        }
        "power-cycle" => {
            arity(2)?;
            GraphFamily::PowerCycle { n: n(0)?, a: n(1)? }
        }
        "dan" | "complement-power" => {
            arity(2)?;
            GraphFamily::ComplementPowerCycle { n: n(0)?, a: n(1)? }
        }
        "extremal" => {
            arity(1)?;
            GraphFamily::ExtremalBipartite(n(0)?)
        }
        "extremal-torus" => {
            arity(1)?;
            GraphFamily::ExtremalBipartiteTorus(n(0)?)
        }
        other => return Err(usage(format!("unknown family {other:?}"))),
    })
}

fn read_valid_layout(path: &Path) -> Result<Layout, Failure> {
    let layout = io::read_layout(path)?;
    layout
        .ensure_valid()
        .map_err(|e| bad_input(format!("{}: {e}", path.display())))?;
    Ok(layout)
}

fn verdict_code(c: &Certificate) -> u8 {
    match c.verdict {
        Verdict::Trvg => 0,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let out = Out { quiet: cli.quiet };
    match cli.command {
        Command::Construct {
            family,
            params,
            surface,
            out: path,
            svg,
        } => {
            let layout = if family == "fixed" {
                let [name] = params.as_slice() else {
                    return Err(usage("fixed takes one name"));
                };
                let which: FixedLayout = name.parse().map_err(|e: ConstructError| usage(e.to_string()))?;
                fixed_layout(which).map_err(|e| usage(e.to_string()))?
            } else {
                let f = family_of(&family, &params)?;
                let built = match surface.kind() {
                    SurfaceKind::Plane => construct(&f),
                    SurfaceKind::Torus => construct_torus(&f),
                };
                built.map_err(|e| match e {
                    ConstructError::InvalidParameters(_) | ConstructError::Graph(_) => usage(e.to_string()),
                    _ => Failure {
                        code: 1,
                        msg: e.to_string(),
                    },
                })?
            };
            out.emit(path.as_deref(), &io::layout_to_json(&layout))?;
            if let Some(svg) = svg {
                io::write_string(&svg, &render_svg(&layout, &RenderSpec::default()))?;
            }
            Ok(0)
        }
        Command::Extract { layout, out: path } => {
            let l = read_valid_layout(&layout)?;
            let g = extract_visibility_graph(&l).map_err(bad_input)?;
            out.emit(path.as_deref(), &io::graph_to_json(&g))?;
            Ok(0)
        }
        Command::Verify { layout, graph } => {
            let l = read_valid_layout(&layout)?;
            let expected = io::read_graph(&graph)?;
            let got = extract_visibility_graph(&l).map_err(bad_input)?;
            if got == expected {
                out.print("ok: the layout realizes the graph");
                Ok(0)
            } else {
                out.print(&describe_difference(&got, &expected));
                Ok(1)
            }
        }
        Command::Classify { which } => {
            let cert = match which {
                ClassifyCommand::Kpq { p, q, surface } => classify_complete_bipartite(p, q, surface.kind()),
                ClassifyCommand::Dan { n, a, surface } => classify_complement_power(n, a, surface.kind()),
            }
            .map_err(|e| usage(e.to_string()))?;
            out.print(&io::certificate_to_json(&cert));
            Ok(verdict_code(&cert))
        }
        Command::Bound { graph, surface } => {
            let g = io::read_graph(&graph)?;
            let kind = surface.kind();
            match bipartite_bound(&g, kind).map_err(bad_input)? {
                Some(v) => {
                    let cert = Certificate::new(Verdict::NotTrvg, kind, Evidence::BoundViolation(v));
                    out.print(&io::certificate_to_json(&cert));
                    Ok(1)
                }
                None => {
                    let report = serde_json::json!({
                        "surface": kind.name(),
                        "vertices": g.vertex_count(),
                        "edges": g.edge_count(),
                        "bound": edge_bound(g.vertex_count(), kind),
                        "violated": false,
                    });
                    out.print(&io::to_compact_json(&report));
                    Ok(0)
                }
            }
        }
        Command::Gseer { layout } => {
            let l = read_valid_layout(&layout)?;
            let report = gseer_check_auto(&l).map_err(bad_input)?;
            out.print(&io::to_compact_json(&io::gseer_to_value(&report)));
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Search {
            graph,
            exact_max,
            budget,
            seed,
            max_k,
            surface,
        } => {
            let g = io::read_graph(&graph)?;
            let opts = SearchOptions {
                surface: surface.kind(),
                exact_max,
                budget,
                seed,
                obstruction_max_k: max_k,
            };
            let cert = search_graph(&g, &opts).map_err(|e| usage(e.to_string()))?;
            out.print(&io::certificate_to_json(&cert));
            Ok(verdict_code(&cert))
        }
        Command::Render { layout, svg, scale } => {
            let l = read_valid_layout(&layout)?;
            let scale: Rational = scale.parse().map_err(|_| usage(format!("bad scale {scale:?}")))?;
            if !scale.is_positive() {
                return Err(usage("scale must be positive"));
            }
            let spec = RenderSpec {
                scale,
                ..RenderSpec::default()
            };
            out.emit(svg.as_deref(), &render_svg(&l, &spec))?;
            Ok(0)
        }
    }
}

fn describe_difference(got: &Graph, expected: &Graph) -> String {
    if got.labels().iter().collect::<std::collections::BTreeSet<_>>()
        != expected.labels().iter().collect::<std::collections::BTreeSet<_>>()
    {
        return "mismatch: the layout and the graph have different vertex sets".into();
    }
    let a: std::collections::BTreeSet<_> = got.edge_labels().into_iter().map(|(x, y)| if x <= y { (x, y) } else { (y, x) }).collect();
    let b: std::collections::BTreeSet<_> = expected.edge_labels().into_iter().map(|(x, y)| if x <= y { (x, y) } else { (y, x) }).collect();
    let extra: Vec<_> = a.difference(&b).collect();
    let missing: Vec<_> = b.difference(&a).collect();
    format!("mismatch: extra edges {extra:?}, missing edges {missing:?}")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("trvg: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
