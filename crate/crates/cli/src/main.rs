use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ricci_core::Rational;

mod commands;

use commands::CliError;

/// Exact Ollivier-Ricci curvature of graph edges.
#[derive(Debug, Parser)]
#[command(name = "ricci", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Curvature of one edge or of every edge.
    Curvature(CurvatureArgs),
    /// Core neighborhood partition of an edge.
    Decompose(EdgeArgs),
    /// Maximum matching between the exclusive neighbor sets of an edge.
    Matching(EdgeArgs),
    /// Normalized Laplacian spectrum and eigenvalue checks.
    Spectrum(SourceArgs),
    /// Rigidity, spectral and certificate checks.
    Verify(VerifyArgs),
    /// Curvature of Paley graphs against the conference-graph prediction.
    Scan(ScanArgs),
    /// Print a generated graph.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Edge-list or JSON graph file.
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Named generator, e.g. petersen, complete:6, paley:13.
    #[arg(long, value_name = "NAME[:ARGS]")]
    generate: Option<String>,
}

#[derive(Debug, Args)]
struct SourceArgs {
    #[command(flatten)]
    source: Source,
}

#[derive(Debug, Args)]
struct EdgeArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_name = "U,V", value_parser = parse_edge)]
    edge: (usize, usize),
}

#[derive(Debug, Args)]
struct CurvatureArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_name = "U,V", value_parser = parse_edge, required_unless_present = "all", conflicts_with = "all")]
    edge: Option<(usize, usize)>,
    /// Every edge, in lexicographic order.
    #[arg(long)]
    all: bool,
    /// Require the matching certificate (regular graphs of diameter at most 2).
    #[arg(long, conflicts_with = "eps")]
    certify: bool,
    /// Report kappa_eps / eps at this idleness instead of the condensed value.
    #[arg(long, value_name = "N/D")]
    eps: Option<Rational>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// Also check this many seeded random connected graphs.
    #[arg(long, value_name = "K")]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// Prime orders q = 1 mod 4 with q >= 13.
    #[arg(long, value_delimiter = ',', required = true)]
    paley: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(value_name = "NAME[:ARGS]")]
    spec: String,
    #[arg(long, value_enum, default_value_t = GraphFormat::EdgeList)]
    output: GraphFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    EdgeList,
    Json,
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s
        .split_once(',')
        .ok_or_else(|| format!("expected U,V, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad vertex {t:?}"));
    Ok((parse(u)?, parse(v)?))
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("RICCI_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("RICCI_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<commands::Output, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Curvature(a) => {
            let g = commands::load(a.source.graph.as_deref(), a.source.generate.as_deref())?;
            let opts = commands::CurvatureOptions {
                edge: a.edge,
                certify: a.certify,
                eps: a.eps,
                csv: a.format == Format::Csv,
            };
            commands::curvature(&g, &opts)
        }
        Command::Decompose(a) => {
            let g = commands::load(a.source.graph.as_deref(), a.source.generate.as_deref())?;
            commands::decompose(&g, a.edge)
        }
        Command::Matching(a) => {
            let g = commands::load(a.source.graph.as_deref(), a.source.generate.as_deref())?;
            commands::matching(&g, a.edge)
        }
        Command::Spectrum(a) => {
            let g = commands::load(a.source.graph.as_deref(), a.source.generate.as_deref())?;
            commands::spectrum(&g)
        }
        Command::Verify(a) => {
            let g = commands::load(a.source.graph.as_deref(), a.source.generate.as_deref())?;
            commands::verify(&g, a.random, a.seed)
        }
        Command::Scan(a) => commands::scan(&a.paley, a.format == Format::Csv),
        Command::Generate(a) => commands::generate(&a.spec, a.output == GraphFormat::Json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if out.inconsistent {
                eprintln!("ricci: inconsistency: a certificate or check failed, see report");
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("ricci: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
