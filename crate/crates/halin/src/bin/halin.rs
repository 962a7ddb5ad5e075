use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use halin::certificate::{parse_certificate, write_certificate};
use halin::dot::to_dot;
use halin::edgelist::{parse_edge_list, write_edge_list};
use halin::report::write_report;
use halin::witness::write_witness;
use halin::{write_atomic, FormatError};
use halin_core::extract::{halin_pipeline, Built, PipelineParams};
use halin_core::rays::{thick_end_witness, WitnessSearch};
use halin_core::verify::{mutate_embedding, verify_embedding};
use halin_core::{ball, hex_prefix, Family, FiniteGraph, HexPrefixSpec, LazyGraph, VertexId};

/// Thick ends and hexagonal grid minors in locally finite graphs.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// Built-in family: hex, grid2d, binary_tree or ladder.
    #[arg(long, conflicts_with = "file")]
    family: Option<String>,
    /// Edge-list file to use instead of a built-in family.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Root vertex id; defaults to the family origin or the smallest id.
    #[arg(long)]
    root: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the ball around the root as an edge list.
    Gen {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        radius: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Search for k disjoint rays of one end.
    Witness {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        r: u64,
        #[arg(long)]
        radius: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full extraction and print a report.
    Extract {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        r: u64,
        #[arg(long)]
        radius: u64,
        #[arg(long, default_value_t = 8)]
        t: usize,
        #[arg(long)]
        cols: u32,
        #[arg(long)]
        depth: u32,
        /// Where to write the certificate on success.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a host graph (an edge list, or a ball of a family).
    Verify {
        certificate: PathBuf,
        #[command(flatten)]
        graph: GraphArgs,
        /// Ball radius when the host is a built-in family.
        #[arg(long)]
        radius: Option<u64>,
    },
    /// Export a graph as DOT: an edge list, a ball of a family, or a grid prefix.
    Dot {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long)]
        radius: Option<u64>,
        #[arg(long, requires = "depth")]
        cols: Option<u32>,
        #[arg(long, requires = "cols")]
        depth: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply one seeded fault to a certificate.
    Mutate {
        certificate: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    File { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Core(#[from] halin_core::Error),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::File { path: path.into(), source: e.into() })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_atomic(path, text).map_err(|e| CliError::File { path: path.into(), source: e.into() }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

impl GraphArgs {
    fn load(&self) -> Result<(LazyGraph, VertexId, &'static str), CliError> {
        let g = match (&self.family, &self.file) {
            (Some(name), None) => match Family::from_name(name) {
                Some(Family::HexQuarterGrid) => LazyGraph::HexQuarterGrid,
                Some(Family::Grid2d) => LazyGraph::Grid2d,
                Some(Family::BinaryTree) => LazyGraph::BinaryTree,
                Some(Family::Ladder) => LazyGraph::Ladder,
                _ => return Err(CliError::Usage(format!("unknown family {name:?}"))),
            },
            (None, Some(path)) => {
                let g = parse_edge_list(&read(path)?).map_err(|e| CliError::File { path: path.clone(), source: e })?;
                LazyGraph::Finite(g)
            }
            _ => return Err(CliError::Usage("give exactly one of --family and --file".into())),
        };
        let root = self.root.map_or_else(|| g.origin(), VertexId);
        if !g.contains(root) {
            return Err(CliError::Usage(format!("root {root} is not a vertex of the graph")));
        }
        Ok((g.clone(), root, g.family().name()))
    }

    fn has_source(&self) -> bool {
        self.family.is_some() || self.file.is_some()
    }
}

fn labels(g: &LazyGraph) -> impl Fn(VertexId) -> Option<(u64, u64)> + '_ {
    move |v| g.coords(v)
}

/// Host for `verify`: the edge list itself, or a ball of a family.
fn host_graph(graph: &GraphArgs, radius: Option<u64>) -> Result<FiniteGraph, CliError> {
    let (g, root, _) = graph.load()?;
    match (g, radius) {
        (LazyGraph::Finite(h), None) => Ok(h),
        (g, Some(radius)) => Ok(ball(&g, root, radius)?),
        (_, None) => Err(CliError::Usage("a family host needs --radius".into())),
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Gen { graph, radius, out } => {
            let (g, root, _) = graph.load()?;
            emit(out.as_deref(), &write_edge_list(&ball(&g, root, radius)?))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Witness { graph, k, r, radius, out } => {
            let (g, root, _) = graph.load()?;
            match thick_end_witness(&g, root, k, r, radius)? {
                WitnessSearch::Found(w) => {
                    emit(out.as_deref(), &write_witness(&w))?;
                    if out.is_some() {
                        println!("found {k} equivalent rays at radius {radius}");
                    }
                    Ok(ExitCode::SUCCESS)
                }
                WitnessSearch::NotFound { rays_found, best_group, separator_size } => {
                    print!("not found: {rays_found} disjoint rays, at most {best_group} in one end");
                    match separator_size {
                        Some(s) => println!(", separator size {s}"),
                        None => println!(),
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Extract { graph, k, r, radius, t, cols, depth, out } => {
            let (g, root, family) = graph.load()?;
            if t == 0 || r >= radius {
                return Err(CliError::Usage("need t >= 1 and r < radius".into()));
            }
            let spec = HexPrefixSpec::new(cols, depth)?;
            let report = halin_pipeline(&g, PipelineParams { root, k, r, radius, t, spec })?;
            print!("{}", write_report(&report, family));
            match &report.outcome {
                Built::Success(emb) => {
                    if let Some(path) = out.as_deref() {
                        emit(Some(path), &write_certificate(emb))?;
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Built::Insufficient { .. } => Ok(ExitCode::from(1)),
            }
        }
        Command::Verify { certificate, graph, radius } => {
            let emb = parse_certificate(&read(&certificate)?)
                .map_err(|e| CliError::File { path: certificate.clone(), source: e })?;
            let host = host_graph(&graph, radius)?;
            let violations = verify_embedding(&host, &emb);
            if violations.is_empty() {
                println!("ok");
                return Ok(ExitCode::SUCCESS);
            }
            for v in &violations {
                println!("{v}");
            }
            Ok(ExitCode::from(1))
        }
        Command::Dot { graph, radius, cols, depth, out } => {
            let text = match (cols, depth) {
                (Some(cols), Some(depth)) if !graph.has_source() => {
                    let spec = HexPrefixSpec::new(cols, depth)?;
                    to_dot(&hex_prefix(spec), |v| Some(halin_core::graph::unpair(v.0)))
                }
                (None, None) => {
                    let (g, root, _) = graph.load()?;
                    match (&g, radius) {
                        (LazyGraph::Finite(h), None) => to_dot(h, |_| None),
                        (_, Some(radius)) => to_dot(&ball(&g, root, radius)?, labels(&g)),
                        (_, None) => return Err(CliError::Usage("a family needs --radius".into())),
                    }
                }
                _ => return Err(CliError::Usage("give a graph or --cols/--depth, not both".into())),
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Mutate { certificate, seed, out } => {
            let emb = parse_certificate(&read(&certificate)?)
                .map_err(|e| CliError::File { path: certificate.clone(), source: e })?;
            emit(out.as_deref(), &write_certificate(&mutate_embedding(&emb, seed)))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("HALIN_LOG", "warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
