//! Command-line front end: colour, verify, exact rc, generate, benchmark.
//!
//! Exit codes: 0 ok, 1 parse/usage, 2 structure rejected, 3 colouring
//! failed, 4 not rainbow connected, 5 instance too large.

pub mod bench;
pub mod document;
mod error;

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rainbow_core::gen::{generate, Family, GeneratorSpec};
use rainbow_core::verify::{rc_exact_with_cap, RcValue, DEFAULT_MAX_EDGES};
use rainbow_core::{color_bridgeless_diam2, color_radius1_pendant, color_rc2, is_rainbow_connected, Verdict};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "rainbow", version, about = "Rainbow colourings for graphs with rainbow connection number 2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Colour an edge list; writes a colouring document.
    Color(ColorArgs),
    /// Check that a colouring makes a graph rainbow connected.
    Verify(VerifyArgs),
    /// Exact rainbow connection number of a small graph.
    Rc(RcArgs),
    /// Generate a graph as an edge list.
    Gen(GenArgs),
    /// Colour a generated corpus and report a CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Pick the construction from the graph's bridges.
    Auto,
    /// Bridgeless, diameter at most 2 (at most 5 colours).
    Diam2,
    /// Radius-1 graph with a pendant edge at its center (at most 4 colours).
    Pendant,
}

#[derive(Debug, Args)]
pub struct ColorArgs {
    /// Edge list file, or `-` for stdin.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Auto)]
    pub mode: Mode,
    /// Write the colouring here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Write the JSON trace of the construction here.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub graph: PathBuf,
    pub coloring: PathBuf,
}

#[derive(Debug, Args)]
pub struct RcArgs {
    pub graph: PathBuf,
    #[arg(long, default_value_t = 5)]
    pub k_max: usize,
    /// Refuse graphs with more edges than this.
    #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
    pub max_edges: usize,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// random-diam2 | pendant | named
    #[arg(long, default_value = "random-diam2")]
    pub family: String,
    /// petersen, wheel_k, cycle_k, complete_k, complete_bipartite_s_t, path_k
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSON generator spec; overrides the other flags.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// random-diam2 | pendant
    #[arg(long, default_value = "random-diam2")]
    pub family: String,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 10)]
    pub n_min: usize,
    #[arg(long, default_value_t = 40)]
    pub n_max: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fixed edge probability (default: chosen per instance).
    #[arg(long)]
    pub p: Option<f64>,
    /// Write 0 for wall_time so the CSV is reproducible byte for byte.
    #[arg(long)]
    pub no_timing: bool,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Write to `path`, or return the text for stdout.
fn emit(path: Option<&Path>, text: String) -> Result<String, CliError> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn parse_family(s: &str) -> Result<Family, CliError> {
    s.parse().map_err(CliError::from)
}

/// Run a command; on success returns what to print on stdout.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Color(a) => color(a),
        Command::Verify(a) => verify(a),
        Command::Rc(a) => rc(a),
        Command::Gen(a) => gen(a),
        Command::Bench(a) => bench_cmd(a),
    }
}

fn color(a: ColorArgs) -> Result<String, CliError> {
    let g = document::parse_edge_list(&read_input(&a.input)?)?;
    let result = match a.mode {
        Mode::Auto => color_rc2(&g),
        Mode::Diam2 => color_bridgeless_diam2(&g),
        Mode::Pendant => color_radius1_pendant(&g),
    }?;
    if let Some(path) = &a.trace {
        let json = serde_json::to_string_pretty(&result.trace).expect("trace serializes");
        emit(Some(path), json + "\n")?;
    }
    emit(a.output.as_deref(), document::write_coloring(&g, &result.coloring))
}

fn verify(a: VerifyArgs) -> Result<String, CliError> {
    let g = document::parse_edge_list(&read_input(&a.graph)?)?;
    let c = document::parse_coloring(&read_input(&a.coloring)?)?.to_coloring(&g)?;
    match is_rainbow_connected(&g, &c)? {
        Verdict::Connected(cert) => Ok(format!(
            "RAINBOW-CONNECTED pairs={} colors_used={} longest_witness={}\n",
            cert.witnesses.len(),
            c.colors_used(),
            cert.longest_witness()
        )),
        Verdict::Failing(pair) => Err(CliError::NotRainbow(pair)),
    }
}

fn rc(a: RcArgs) -> Result<String, CliError> {
    let g = document::parse_edge_list(&read_input(&a.graph)?)?;
    Ok(match rc_exact_with_cap(&g, a.k_max, a.max_edges)? {
        RcValue::Exact(k) => format!("{k}\n"),
        RcValue::ExceedsKMax(k) => format!("> {k}\n"),
    })
}

fn gen(a: GenArgs) -> Result<String, CliError> {
    let spec = match &a.spec {
        Some(path) => serde_json::from_str::<GeneratorSpec>(&read_input(path)?)
            .map_err(|e| CliError::Parse(format!("generator spec: {e}")))?,
        None => GeneratorSpec { family: parse_family(&a.family)?, n: a.n, p: a.p, seed: a.seed, name: a.name },
    };
    let g = generate(&spec)?;
    emit(a.output.as_deref(), document::write_edge_list(&g))
}

fn bench_cmd(a: BenchArgs) -> Result<String, CliError> {
    let cfg = bench::BenchConfig {
        family: parse_family(&a.family)?,
        count: a.count,
        n_min: a.n_min,
        n_max: a.n_max,
        seed: a.seed,
        p: a.p,
        timing: !a.no_timing,
    };
    let (rows, summary) = bench::run_bench(&cfg)?;
    emit(a.output.as_deref(), bench::write_csv(&rows, &summary))
}
