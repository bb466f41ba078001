//! Command-line front end: argument model, dispatch and exit codes.
//!
//! Every command except `gen` prints one summary line `width=<w> valid=<bool>`
//! on stdout.
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 solver budget exceeded.

pub mod formats;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;
use widthforge::cobipartite::{build_f, lift_pathdec_to_f};
use widthforge::cubic::{
    brick_wall_pathdec, build_brick_wall, build_g1, build_grid_wall, g1_decomposition_to_ordering,
    ordering_to_g1_pathdec, reduce_cutwidth_to_treewidth_with, PipelineConfig,
};
use widthforge::generators;
use widthforge::solvers::{
    DEFAULT_CUTWIDTH_BUDGET, DEFAULT_PATHWIDTH_BUDGET, DEFAULT_TREEWIDTH_BUDGET,
};
use widthforge::special::{
    build_d_regular_instance, embed_3d_grid, lift_decomposition_to_subdivision,
    lift_through_d_regular, reduce_cutwidth_to_treewidth_4regular,
};
use widthforge::{
    cutwidth_of_ordering, exact_cutwidth, exact_pathwidth, exact_treewidth,
    verify_path_decomposition, verify_tree_decomposition, DecompositionError, Graph,
    LinearOrdering, SolveError, TreeDecomposition,
};

use formats::FormatError;

/// Environment variable overriding every solver size limit.
pub const BUDGET_ENV: &str = "WIDTHFORGE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "widthforge", version, about = "Width reductions, certificates and exact solvers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a width parameter exactly and write an optimal certificate.
    Solve {
        #[arg(value_enum)]
        measure: Measure,
        graph: PathBuf,
        /// Certificate output (`.td` for tw and pw, ordering for cw).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify {
        #[arg(value_enum)]
        kind: CertificateKind,
        graph: PathBuf,
        certificate: PathBuf,
        /// Also fail when the width exceeds this bound.
        #[arg(long)]
        max_width: Option<i64>,
    },
    /// Build a reduction instance and lift a certificate into it.
    Reduce {
        #[command(subcommand)]
        reduction: Reduction,
    },
    /// Lift an ordering of a cubic graph to `G1` and extract an ordering back.
    Roundtrip {
        graph: PathBuf,
        /// Ordering file; defaults to the identity ordering.
        #[arg(long)]
        ordering: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a brick (or grid) wall and its column-sweep path decomposition.
    Wall {
        rows: usize,
        cols: usize,
        #[arg(long)]
        grid: bool,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Generate a test instance.
    Gen {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Measure {
    Tw,
    Pw,
    Cw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CertificateKind {
    Td,
    Pd,
    Ordering,
}

#[derive(Debug, Subcommand)]
pub enum Reduction {
    /// Pathwidth to treewidth on co-bipartite graphs: writes `f.gr`, `cert.td`.
    Cobipartite {
        graph: PathBuf,
        /// Path decomposition to lift; an optimal one is computed if absent.
        #[arg(long)]
        pathdec: Option<PathBuf>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Cutwidth to treewidth on cubic graphs: writes `g4.gr`, `cert.td`.
    Cubic {
        graph: PathBuf,
        #[arg(long)]
        ordering: Option<PathBuf>,
        /// Wall width override (default `24n`).
        #[arg(long)]
        columns: Option<usize>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// `d`-regular instance from a cubic source: writes `gd.gr`, `cert.td`.
    Dregular {
        graph: PathBuf,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        ordering: Option<PathBuf>,
        #[arg(long)]
        columns: Option<usize>,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Induced embedding of a cubic graph in the 3D grid: writes `host.gr`,
    /// `host.coords`, `cert.td`.
    Grid3d {
        graph: PathBuf,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Random cubic graph on `n` vertices.
    Cubic {
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Complete {
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Prism {
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Budget(#[from] SolveError),
    #[error("{0}")]
    Reduction(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Budget(_) => 3,
            CliError::Io { .. } | CliError::Format { .. } | CliError::Usage(_) | CliError::Reduction(_) => 2,
        }
    }
}

/// The summary printed as the last stdout line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summary {
    pub width: i64,
    pub valid: bool,
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "width={} valid={}", self.width, self.valid)
    }
}

struct Budgets {
    tw: usize,
    pw: usize,
    cw: usize,
}

fn budgets() -> Result<Budgets, CliError> {
    match std::env::var(BUDGET_ENV) {
        Ok(text) => {
            let b: usize = text
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{BUDGET_ENV}={text:?} is not a vertex count")))?;
            Ok(Budgets { tw: b, pw: b, cw: b })
        }
        Err(_) => Ok(Budgets {
            tw: DEFAULT_TREEWIDTH_BUDGET,
            pw: DEFAULT_PATHWIDTH_BUDGET,
            cw: DEFAULT_CUTWIDTH_BUDGET,
        }),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|source| CliError::Io { path: dir.to_path_buf(), source })?;
    }
    fs::write(path, text).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn parsed<T>(path: &Path, r: Result<T, FormatError>) -> Result<T, CliError> {
    r.map_err(|source| CliError::Format { path: path.to_path_buf(), source })
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parsed(path, formats::parse_graph(&read(path)?))
}

fn load_ordering(path: Option<&Path>, g: &Graph) -> Result<LinearOrdering, CliError> {
    match path {
        Some(p) => parsed(p, formats::parse_ordering(&read(p)?, g.vertex_count())),
        None => Ok(LinearOrdering::identity(g)),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn failed(e: DecompositionError) -> CliError {
    CliError::Verification(e.to_string())
}

fn reduction<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Reduction(e.to_string())
}

/// Writes `graph` and `td` into `dir`, reads both back and verifies them.
fn write_instance(dir: &Path, graph_name: &str, g: &Graph, td: &TreeDecomposition) -> Result<i64, CliError> {
    let gpath = dir.join(graph_name);
    let tpath = dir.join("cert.td");
    write(&gpath, &formats::write_graph(g))?;
    write(&tpath, &formats::write_td(g, td))?;
    let g2 = load_graph(&gpath)?;
    let td2 = parsed(&tpath, formats::parse_td(&read(&tpath)?, g2.vertex_count()))?;
    eprintln!("wrote {} and {}", gpath.display(), tpath.display());
    verify_tree_decomposition(&g2, &td2).map_err(failed)
}

fn pipeline_config(columns: Option<usize>) -> PipelineConfig {
    PipelineConfig { wall_columns: columns }
}

/// Runs one command. `gen` has no width to report and returns `None`.
pub fn run(cli: Cli) -> Result<Option<Summary>, CliError> {
    let summary = match cli.command {
        Command::Solve { measure, graph, out } => solve(measure, &graph, out.as_deref())?,
        Command::Verify { kind, graph, certificate, max_width } => {
            verify(kind, &graph, &certificate, max_width)?
        }
        Command::Reduce { reduction } => reduce(reduction)?,
        Command::Roundtrip { graph, ordering, out } => roundtrip(&graph, ordering.as_deref(), out.as_deref())?,
        Command::Wall { rows, cols, grid, out_dir } => wall(rows, cols, grid, &out_dir)?,
        Command::Gen { family } => {
            generate(family)?;
            return Ok(None);
        }
    };
    Ok(Some(summary))
}

fn solve(measure: Measure, path: &Path, out: Option<&Path>) -> Result<Summary, CliError> {
    let g = load_graph(path)?;
    let b = budgets()?;
    let width = match measure {
        Measure::Tw => {
            let r = exact_treewidth(&g, b.tw)?;
            if let Some(p) = out {
                write(p, &formats::write_td(&g, &r.certificate))?;
            }
            r.width
        }
        Measure::Pw => {
            let r = exact_pathwidth(&g, b.pw)?;
            if let Some(p) = out {
                write(p, &formats::write_pd(&g, &r.certificate))?;
            }
            r.width
        }
        Measure::Cw => {
            let r = exact_cutwidth(&g, b.cw)?;
            if let Some(p) = out {
                write(p, &formats::write_ordering(&g, &r.certificate))?;
            }
            r.width
        }
    };
    Ok(Summary { width, valid: true })
}

fn verify(kind: CertificateKind, gpath: &Path, cpath: &Path, max_width: Option<i64>) -> Result<Summary, CliError> {
    let g = load_graph(gpath)?;
    let text = read(cpath)?;
    let n = g.vertex_count();
    let width = match kind {
        CertificateKind::Td => {
            let td = parsed(cpath, formats::parse_td(&text, n))?;
            verify_tree_decomposition(&g, &td).map_err(failed)?
        }
        CertificateKind::Pd => {
            let td = parsed(cpath, formats::parse_td(&text, n))?;
            let pd = td.as_path().ok_or(CliError::Verification(DecompositionError::NotAPath.to_string()))?;
            verify_path_decomposition(&g, &pd).map_err(failed)?
        }
        CertificateKind::Ordering => {
            let f = parsed(cpath, formats::parse_ordering(&text, n))?;
            cutwidth_of_ordering(&g, &f).map_err(|e| CliError::Verification(e.to_string()))? as i64
        }
    };
    if let Some(bound) = max_width.filter(|&b| width > b) {
        return Err(CliError::Verification(format!("width {width} exceeds {bound}")));
    }
    Ok(Summary { width, valid: true })
}

fn reduce(r: Reduction) -> Result<Summary, CliError> {
    match r {
        Reduction::Cobipartite { graph, pathdec, out_dir } => {
            let g = load_graph(&graph)?;
            let pd = match pathdec {
                Some(p) => parsed(&p, formats::parse_pd(&read(&p)?, g.vertex_count()))?,
                None => exact_pathwidth(&g, budgets()?.pw)?.certificate,
            };
            let inst = build_f(&g);
            let lifted = lift_pathdec_to_f(&inst, &pd).map_err(reduction)?;
            let width = write_instance(&out_dir, "f.gr", &inst.graph, &lifted.to_tree_decomposition())?;
            Ok(Summary { width, valid: true })
        }
        Reduction::Cubic { graph, ordering, columns, out_dir } => {
            let g = load_graph(&graph)?;
            let f = load_ordering(ordering.as_deref(), &g)?;
            let r = reduce_cutwidth_to_treewidth_with(&g, &f, pipeline_config(columns)).map_err(reduction)?;
            let width = write_instance(&out_dir, "g4.gr", &r.g4, &r.certificate)?;
            Ok(Summary { width, valid: r.validity_flag })
        }
        Reduction::Dregular { graph, degree, ordering, columns, out_dir } => {
            let g = load_graph(&graph)?;
            let f = load_ordering(ordering.as_deref(), &g)?;
            let config = pipeline_config(columns);
            if degree < 3 {
                return Err(CliError::Usage(format!("degree must be at least 3, got {degree}")));
            }
            let (base, td, flag) = if degree % 2 == 1 {
                let r = reduce_cutwidth_to_treewidth_with(&g, &f, config).map_err(reduction)?;
                (r.g4, r.certificate, r.validity_flag)
            } else {
                let r = reduce_cutwidth_to_treewidth_4regular(&g, &f, config).map_err(reduction)?;
                (r.graph, r.certificate, r.validity_flag)
            };
            let inst = build_d_regular_instance(&base, degree).map_err(reduction)?;
            let lifted = lift_through_d_regular(&inst, &base, &td).map_err(reduction)?;
            let width = write_instance(&out_dir, "gd.gr", &inst.graph, &lifted)?;
            Ok(Summary { width, valid: flag })
        }
        Reduction::Grid3d { graph, out_dir } => {
            let g = load_graph(&graph)?;
            let emb = embed_3d_grid(&g).map_err(reduction)?;
            emb.validate().map_err(|e| CliError::Verification(e.to_string()))?;
            let opt = exact_treewidth(&g, budgets()?.tw)?;
            let lifted = lift_decomposition_to_subdivision(&emb, &g, &opt.certificate).map_err(reduction)?;
            write(&out_dir.join("host.coords"), &formats::write_coordinates(&emb.host_graph, &emb.coords))?;
            let width = write_instance(&out_dir, "host.gr", &emb.host_graph, &lifted)?;
            Ok(Summary { width, valid: true })
        }
    }
}

fn roundtrip(path: &Path, ordering: Option<&Path>, out: Option<&Path>) -> Result<Summary, CliError> {
    let g = load_graph(path)?;
    let f = load_ordering(ordering, &g)?;
    let k = cutwidth_of_ordering(&g, &f).map_err(|e| CliError::Usage(e.to_string()))?;
    let inst = build_g1(&g).map_err(reduction)?;
    let pd = ordering_to_g1_pathdec(&inst, &f).map_err(reduction)?;
    let back = g1_decomposition_to_ordering(&inst, &pd.to_tree_decomposition()).map_err(reduction)?;
    let k2 = cutwidth_of_ordering(&g, &back).map_err(|e| CliError::Usage(e.to_string()))?;
    if let Some(p) = out {
        write(p, &formats::write_ordering(&g, &back))?;
    }
    Ok(Summary { width: k2 as i64, valid: k2 <= k })
}

fn wall(rows: usize, cols: usize, grid: bool, dir: &Path) -> Result<Summary, CliError> {
    let w = if grid { build_grid_wall(rows, cols) } else { build_brick_wall(rows, cols) }
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let pd = brick_wall_pathdec(&w);
    let width = write_instance(dir, "wall.gr", &w.graph, &pd.to_tree_decomposition())?;
    Ok(Summary { width, valid: width <= cols as i64 })
}

fn generate(family: Family) -> Result<(), CliError> {
    let (g, out) = match family {
        Family::Cubic { n, seed, out } => {
            let g = generators::random_cubic(n, &mut ChaCha8Rng::seed_from_u64(seed))
                .ok_or_else(|| CliError::Usage(format!("no cubic graph on {n} vertices")))?;
            (g, out)
        }
        Family::Complete { n, out } => (generators::complete(n), out),
        Family::Prism { k, out } => {
            if k < 3 {
                return Err(CliError::Usage("prism needs k >= 3".into()));
            }
            (generators::prism(k), out)
        }
    };
    emit(out.as_deref(), &formats::write_graph(&g))
}
