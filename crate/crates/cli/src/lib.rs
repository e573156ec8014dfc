//! Command-line pipeline over one graph file: parse, validate, classify,
//! construct and verify. [`run`] returns the output instead of printing it so
//! the binary and the tests share one code path.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use rcop_toric::blockpath::{
    is_block_graph, structural_audit, BlockVerdict, LambdaMultiset, NonBlockWitness,
};
use rcop_toric::graph::{parse_graph, validate, GraphDocument};
use rcop_toric::markov::{
    certify_markov, completion_basis, rcop_basis, uncolored_basis, Certification, LinearMoves,
    MarkovMove,
};
use rcop_toric::symmetry::{is_rcop, GroupDescription, RcopWitness};
use rcop_toric::toric::{
    completion, exponent_matrix, exponent_matrix_endpoint, kernel_member, PathMap,
};
use rcop_toric::verify::{
    jordan_square_closed, rank_dimension_check, verify_vanishing, DimensionReport, JordanReport,
    VanishingReport,
};
use rcop_toric::{ColoredGraph, Edge};

/// Environment variable holding the worker thread count.
pub const THREADS_VAR: &str = "RCOP_TORIC_THREADS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Validate the graph and decide the block and RCOP properties
    Check,
    /// Print an exponent matrix
    Matrix,
    /// Print the completion graph
    Completion,
    /// Print a Markov basis
    Basis,
    /// Check that the basis connects every fiber up to the degree bound
    Fibers,
    /// Evaluate basis moves on sampled covariance matrices
    Verify,
    /// Run the exhaustive shortest-path scans
    Audit,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    #[default]
    Endpoint,
    Full,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Part {
    Uncolored,
    Linear,
    #[default]
    All,
}

#[derive(Clone, Debug, Parser)]
#[command(
    name = "rcop-toric",
    version,
    about = "Markov bases for colored Gaussian graphical models on RCOP block graphs"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Graph file in JSON
    pub input: PathBuf,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Total degree bound for `fibers`
    #[arg(long = "degree", default_value_t = 3)]
    pub degree_bound: usize,
    /// Largest fiber `fibers` will enumerate
    #[arg(long = "cap", default_value_t = 5000)]
    pub fiber_cap: usize,
    /// Sampled matrices for `verify`
    #[arg(long, default_value_t = 10)]
    pub trials: u64,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t)]
    pub map: MapKind,
    #[arg(long, value_enum, default_value_t)]
    pub part: Part,
    /// Moves for `verify` as a JSON array; defaults to the computed basis
    #[arg(long)]
    pub basis: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command, input: impl Into<PathBuf>) -> Self {
        RunConfig {
            command,
            input: input.into(),
            seed: 1,
            degree_bound: 3,
            fiber_cap: 5000,
            trials: 10,
            format: Format::Json,
            map: MapKind::Endpoint,
            part: Part::All,
            basis: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    VerdictFalse = 1,
    InputError = 2,
    VerificationFailure = 3,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot parse basis file {path}: {source}")]
    BasisFile {
        path: String,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Library(#[from] rcop_toric::Error),
}

impl CliError {
    pub fn status(&self) -> Status {
        use rcop_toric::Error as E;
        match self {
            CliError::Read { .. } | CliError::BasisFile { .. } => Status::InputError,
            CliError::Library(e) => match e {
                E::Disconnected
                | E::NotBlockGraph { .. }
                | E::NonUniquePath { .. }
                | E::NotRcop(_)
                | E::NotComplete(_) => Status::VerdictFalse,
                E::Singular | E::Internal(_) => Status::VerificationFailure,
                _ => Status::InputError,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    pub stdout: String,
    pub stderr: String,
}

/// Sizes the global thread pool from [`THREADS_VAR`] when it is set.
pub fn configure_threads(value: Option<&str>) -> Result<(), String> {
    let Some(text) = value else { return Ok(()) };
    let n: usize = text
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_VAR} must be a positive integer, got {text:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

pub fn run(config: &RunConfig) -> Outcome {
    match execute(config) {
        Ok((status, stdout)) => Outcome {
            status,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: e.status(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read(path: &std::path::Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })
}

fn render<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("outputs serialize");
            s.push('\n');
            s
        }
        Format::Text => text(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(config: &RunConfig) -> Result<(Status, String), CliError> {
    let g = parse_graph(&read(&config.input)?)?;
    match config.command {
        Command::Check => check(&g, config.format),
        Command::Matrix => {
            let map = match config.map {
                MapKind::Endpoint => PathMap::Endpoint,
                MapKind::Full => PathMap::Full,
            };
            let m = exponent_matrix(&g, map)?;
            Ok((Status::Success, render(config.format, &m, || m.to_text())))
        }
        Command::Completion => completion_command(&g, config.format),
        Command::Basis => {
            let moves = match config.part {
                Part::Uncolored => uncolored_basis(&g)?,
                Part::Linear => completion_basis(&g, LinearMoves::Star)?,
                Part::All => rcop_basis(&g)?,
            };
            Ok((
                Status::Success,
                render(config.format, &moves, || move_lines(&moves)),
            ))
        }
        Command::Fibers => fibers(&g, config),
        Command::Verify => verify(&g, config),
        Command::Audit => {
            let report = structural_audit(&g)?;
            let status = if report.passed() {
                Status::Success
            } else if is_rcop(&g)?.rcop {
                Status::VerificationFailure
            } else {
                Status::VerdictFalse
            };
            let text = || {
                let mut s = String::new();
                for c in &report.checks {
                    let status = serde_json::to_value(c.status).expect("status serializes");
                    let _ = writeln!(
                        s,
                        "{}: {} ({} cases)",
                        c.name,
                        status.as_str().unwrap_or("?"),
                        c.cases
                    );
                }
                s
            };
            Ok((status, render(config.format, &report, text)))
        }
    }
}

fn move_lines(moves: &[MarkovMove]) -> String {
    moves.iter().map(|m| format!("{m}\n")).collect()
}

#[derive(Serialize)]
struct CheckOutput {
    vertices: usize,
    edges: usize,
    colors: usize,
    connected: bool,
    block: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    block_witness: Option<NonBlockWitness>,
    /// Absent for disconnected graphs.
    rcop: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rcop_witness: Option<RcopWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    group: Option<GroupDescription>,
}

fn check(g: &ColoredGraph, format: Format) -> Result<(Status, String), CliError> {
    let connected = validate(g).connected;
    let mut out = CheckOutput {
        vertices: g.n(),
        edges: g.edge_count(),
        colors: g.color_count(),
        connected,
        block: false,
        block_witness: None,
        rcop: None,
        rcop_witness: None,
        group: None,
    };
    if connected {
        match is_block_graph(g)? {
            BlockVerdict::Block(_) => out.block = true,
            BlockVerdict::NotBlock(w) => out.block_witness = Some(w),
        }
        let verdict = is_rcop(g)?;
        out.rcop = Some(verdict.rcop);
        out.rcop_witness = verdict.witness;
        out.group = Some(verdict.group);
    }
    let status = if out.block && out.rcop == Some(true) {
        Status::Success
    } else {
        Status::VerdictFalse
    };
    let text = || {
        let mut s = String::new();
        let _ = writeln!(s, "vertices: {}", out.vertices);
        let _ = writeln!(s, "edges: {}", out.edges);
        let _ = writeln!(s, "colors: {}", out.colors);
        let _ = writeln!(s, "connected: {}", yes_no(out.connected));
        match &out.block_witness {
            Some(w) => {
                let _ = writeln!(
                    s,
                    "block graph: no (block {:?} lacks edge {})",
                    w.block, w.missing
                );
            }
            None => {
                let _ = writeln!(s, "block graph: {}", yes_no(out.block));
            }
        }
        if let Some(rcop) = out.rcop {
            match &out.rcop_witness {
                Some(w) => {
                    let _ = writeln!(s, "rcop: no ({w})");
                }
                None => {
                    let _ = writeln!(s, "rcop: {}", yes_no(rcop));
                }
            }
        }
        if let Some(group) = &out.group {
            let _ = writeln!(s, "group order: {}", group.order);
            let generators: Vec<String> =
                group.generators.iter().map(ToString::to_string).collect();
            if generators.is_empty() {
                let _ = writeln!(s, "generators: none");
            } else {
                let _ = writeln!(s, "generators: {}", generators.join(", "));
            }
        }
        s
    };
    Ok((status, render(format, &out, text)))
}

#[derive(Serialize)]
struct AddedEdge<'a> {
    edge: Edge,
    color: &'a str,
    lambda: &'a LambdaMultiset,
}

#[derive(Serialize)]
struct CompletionOutput<'a> {
    graph: GraphDocument,
    added: Vec<AddedEdge<'a>>,
}

fn completion_command(g: &ColoredGraph, format: Format) -> Result<(Status, String), CliError> {
    let c = completion(g)?;
    let out = CompletionOutput {
        graph: GraphDocument::from(&c.graph),
        added: c
            .provenance
            .iter()
            .map(|(&edge, lambda)| AddedEdge {
                edge,
                color: c.graph.color_of_edge(edge).expect("complete").label(),
                lambda,
            })
            .collect(),
    };
    let text = || {
        let mut s = String::new();
        for a in &out.added {
            let lambda: Vec<String> = a.lambda.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "{} {} [{}]", a.edge, a.color, lambda.join(", "));
        }
        s
    };
    Ok((Status::Success, render(format, &out, text)))
}

fn fibers(g: &ColoredGraph, config: &RunConfig) -> Result<(Status, String), CliError> {
    let a = exponent_matrix_endpoint(g)?;
    let moves = rcop_basis(g)?;
    let cert: Certification = certify_markov(&a, &moves, config.degree_bound, config.fiber_cap)?;
    let status = if cert.connected() {
        Status::Success
    } else {
        Status::VerificationFailure
    };
    let text = || {
        let mut s = String::new();
        let _ = writeln!(s, "degree bound: {}", cert.degree_bound);
        let _ = writeln!(s, "fibers: {}", cert.fibers);
        let _ = writeln!(s, "points: {}", cert.points);
        let _ = writeln!(s, "largest fiber: {}", cert.largest_fiber);
        let _ = writeln!(s, "disconnected: {}", cert.disconnected.len());
        for d in &cert.disconnected {
            let monomial: String = d.representative.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                s,
                "  {monomial}: {} points, {} components",
                d.points, d.components
            );
        }
        s
    };
    Ok((status, render(config.format, &cert, text)))
}

#[derive(Serialize)]
struct KernelReport {
    moves: usize,
    outside: Vec<MarkovMove>,
}

#[derive(Serialize)]
struct VerifyOutput {
    passed: bool,
    kernel: KernelReport,
    vanishing: VanishingReport,
    jordan: JordanReport,
    dimension: DimensionReport,
}

fn verify(g: &ColoredGraph, config: &RunConfig) -> Result<(Status, String), CliError> {
    let moves: Vec<MarkovMove> = match &config.basis {
        Some(path) => serde_json::from_str(&read(path)?).map_err(|source| CliError::BasisFile {
            path: path.display().to_string(),
            source,
        })?,
        None => rcop_basis(g)?,
    };
    let a = exponent_matrix_endpoint(g)?;
    let mut outside = Vec::new();
    for m in &moves {
        if !kernel_member(&a, m)? {
            outside.push(m.clone());
        }
    }
    let kernel = KernelReport {
        moves: moves.len(),
        outside,
    };
    let vanishing = verify_vanishing(g, &moves, config.trials, config.seed)?;
    let jordan = jordan_square_closed(&completion(g)?.graph, config.trials, config.seed)?;
    let dimension = rank_dimension_check(g)?;
    let out = VerifyOutput {
        passed: kernel.outside.is_empty() && vanishing.passed() && jordan.closed && dimension.equal,
        kernel,
        vanishing,
        jordan,
        dimension,
    };
    let status = if out.passed {
        Status::Success
    } else {
        Status::VerificationFailure
    };
    let text = || {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "kernel: {}/{} moves in the kernel",
            out.kernel.moves - out.kernel.outside.len(),
            out.kernel.moves
        );
        let _ = writeln!(
            s,
            "vanishing: {} evaluations over {} trials, {} failures",
            out.vanishing.evaluations,
            out.vanishing.trials,
            out.vanishing.failures.len()
        );
        let _ = writeln!(
            s,
            "jordan: {}",
            if out.jordan.closed {
                "closed"
            } else {
                "not closed"
            }
        );
        let _ = writeln!(
            s,
            "dimension: rank {} vs {} colors",
            out.dimension.rank, out.dimension.colors
        );
        let _ = writeln!(s, "passed: {}", yes_no(out.passed));
        s
    };
    Ok((status, render(config.format, &out, text)))
}
