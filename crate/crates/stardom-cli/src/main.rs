//! Command-line driver: per-graph queries (spectrum, domination, star-set)
//! and check sweeps (verify, sweep) with CSV or JSON output.
//!
//! Exit status: 0 when every check holds or is skipped, 1 on usage or input
//! errors, 2 when at least one check is violated.

mod input;
mod report;
mod runner;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stardom_core::graph6::encode_graph6;
use stardom_core::spectra::spectrum;
use stardom_core::star_sets::{find_connected_star_complement, find_star_set};
use stardom_core::verify::CheckKind;
use stardom_core::{domination_number, DominationVariant, Graph, MatrixKind};

use input::InputArgs;
use runner::{VerifyJob, VerifyOutcome};

#[derive(Parser)]
#[command(
    name = "stardom",
    version,
    about = "Exact graph spectra, domination numbers, star sets, and spectral bound checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues with exact multiplicities
    Spectrum(SpectrumArgs),
    /// Domination numbers with lexicographically least minimum witnesses
    Domination(DominationArgs),
    /// Star set and star complement for each eigenvalue
    StarSet(StarSetArgs),
    /// Run checks over the input graphs, one output row per detail
    Verify(VerifyArgs),
    /// Verify with a closing summary line on stderr (checks default to all)
    Sweep(VerifyArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum MatrixArg {
    Adjacency,
    Laplacian,
}

impl From<MatrixArg> for MatrixKind {
    fn from(m: MatrixArg) -> MatrixKind {
        match m {
            MatrixArg::Adjacency => MatrixKind::Adjacency,
            MatrixArg::Laplacian => MatrixKind::Laplacian,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(clap::Args)]
struct OutputArgs {
    /// Write the report here instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Report format
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
}

#[derive(clap::Args)]
struct SpectrumArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Which matrix to analyze
    #[arg(long, value_enum, default_value = "adjacency")]
    matrix: MatrixArg,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum VariantArg {
    /// Ordinary domination
    Domination,
    /// Total domination
    Total,
    /// p-domination for each value of --p
    P,
}

#[derive(clap::Args)]
struct DominationArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Domination variant
    #[arg(long, value_enum, default_value = "domination")]
    variant: VariantArg,

    /// p values for --variant p (comma-separated)
    #[arg(long, value_delimiter = ',', default_value = "1")]
    p: Vec<usize>,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(clap::Args)]
struct StarSetArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Which matrix to analyze
    #[arg(long, value_enum, default_value = "adjacency")]
    matrix: MatrixArg,

    /// Grow a connected star complement instead of the greedy star set
    #[arg(long)]
    connected: bool,

    #[command(flatten)]
    output: OutputArgs,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Checks to run (comma-separated names; default: all)
    #[arg(long, value_delimiter = ',')]
    checks: Vec<String>,

    /// p values for the checks that take one (comma-separated)
    #[arg(long, value_delimiter = ',', default_value = "1")]
    p: Vec<usize>,

    /// Process only graphs with ordinal K mod M (format K/M)
    #[arg(long, value_name = "K/M")]
    shard: Option<String>,

    /// Keep sweeping past violated checks instead of stopping
    #[arg(long)]
    keep_going: bool,

    /// Worker threads
    #[arg(long, default_value = "1", value_name = "N")]
    jobs: usize,

    #[command(flatten)]
    output: OutputArgs,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Domination(args) => cmd_domination(args),
        Command::StarSet(args) => cmd_star_set(args),
        Command::Verify(args) => cmd_verify(args, false),
        Command::Sweep(args) => cmd_verify(args, true),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn open_output(args: &OutputArgs) -> Result<Box<dyn Write + Send>, String> {
    match &args.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(BufWriter::new(std::io::stdout()))),
    }
}

fn write_json_array(out: &mut dyn Write, values: &[serde_json::Value]) -> Result<(), String> {
    let text = serde_json::to_string_pretty(&serde_json::Value::Array(values.to_vec()))
        .expect("report serialization cannot fail");
    writeln!(out, "{text}").map_err(|e| format!("cannot write output: {e}"))
}

fn graph_label(g: &Graph) -> String {
    encode_graph6(g).expect("graphs under 64 vertices always encode")
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<u8, String> {
    let mut out = open_output(&args.output)?;
    let mut csv: Vec<String> = Vec::new();
    let mut json: Vec<serde_json::Value> = Vec::new();
    for item in input::stream(&args.input)? {
        let (_, g) = item?;
        let g6 = graph_label(&g);
        let summary = spectrum(&g, args.matrix.into());
        match args.output.format {
            OutputFormat::Csv => report::spectrum_csv_rows(&g6, g.n(), &summary, &mut csv),
            OutputFormat::Json => json.push(report::spectrum_json(&g6, g.n(), &summary)),
        }
    }
    finish_simple(&mut *out, args.output.format, report::spectrum_csv_header(), csv, json)?;
    Ok(0)
}

fn cmd_domination(args: DominationArgs) -> Result<u8, String> {
    let variants: Vec<DominationVariant> = match args.variant {
        VariantArg::Domination => vec![DominationVariant::Domination],
        VariantArg::Total => vec![DominationVariant::TotalDomination],
        VariantArg::P => {
            if args.p.iter().any(|&p| p == 0) {
                return Err("--p values must be positive".to_string());
            }
            args.p.iter().map(|&p| DominationVariant::PDomination(p)).collect()
        }
    };
    let mut out = open_output(&args.output)?;
    let mut csv: Vec<String> = Vec::new();
    let mut json: Vec<serde_json::Value> = Vec::new();
    for item in input::stream(&args.input)? {
        let (ordinal, g) = item?;
        let g6 = graph_label(&g);
        for &variant in &variants {
            let cert = domination_number(&g, variant)
                .map_err(|e| format!("graph {} ({g6}): {e}", ordinal + 1))?;
            match args.output.format {
                OutputFormat::Csv => {
                    csv.push(report::domination_csv_row(&g6, &g, variant, cert.value, cert.witness))
                }
                OutputFormat::Json => {
                    json.push(report::domination_json(&g6, &g, variant, cert.value, cert.witness))
                }
            }
        }
    }
    finish_simple(&mut *out, args.output.format, report::domination_csv_header(), csv, json)?;
    Ok(0)
}

fn cmd_star_set(args: StarSetArgs) -> Result<u8, String> {
    if args.matrix == MatrixArg::Laplacian {
        return Err("star sets are built on the adjacency matrix; drop --matrix laplacian".to_string());
    }
    let mut out = open_output(&args.output)?;
    let mut csv: Vec<String> = Vec::new();
    let mut json: Vec<serde_json::Value> = Vec::new();
    for item in input::stream(&args.input)? {
        let (ordinal, g) = item?;
        let g6 = graph_label(&g);
        let summary = spectrum(&g, args.matrix.into());
        for (lambda, _) in &summary.eigenvalues {
            let part = if args.connected {
                find_connected_star_complement(&g, lambda, None)
            } else {
                find_star_set(&g, lambda)
            }
            .map_err(|e| format!("graph {} ({g6}) at {lambda}: {e}", ordinal + 1))?;
            match args.output.format {
                OutputFormat::Csv => csv.push(report::star_set_csv_row(&g6, &g, &part)),
                OutputFormat::Json => json.push(report::star_set_json(&g6, &g, &part)),
            }
        }
    }
    finish_simple(&mut *out, args.output.format, report::star_set_csv_header(), csv, json)?;
    Ok(0)
}

fn finish_simple(
    out: &mut dyn Write,
    format: OutputFormat,
    header: &str,
    csv: Vec<String>,
    json: Vec<serde_json::Value>,
) -> Result<(), String> {
    let io = |e: std::io::Error| format!("cannot write output: {e}");
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{header}").map_err(io)?;
            for row in csv {
                writeln!(out, "{row}").map_err(io)?;
            }
        }
        OutputFormat::Json => write_json_array(out, &json)?,
    }
    out.flush().map_err(io)
}

fn cmd_verify(args: VerifyArgs, sweep_mode: bool) -> Result<u8, String> {
    let checks: Vec<CheckKind> = if args.checks.is_empty() {
        CheckKind::all().to_vec()
    } else {
        args.checks
            .iter()
            .map(|name| {
                CheckKind::parse(name).ok_or_else(|| {
                    let valid: Vec<&str> = CheckKind::all().iter().map(|c| c.name()).collect();
                    format!("unknown check {name:?} (valid: {})", valid.join(", "))
                })
            })
            .collect::<Result<_, _>>()?
    };
    if args.p.is_empty() || args.p.iter().any(|&p| p == 0) {
        return Err("--p values must be positive".to_string());
    }
    let shard = args.shard.as_deref().map(input::parse_shard).transpose()?;
    if args.jobs == 0 {
        return Err("--jobs must be positive".to_string());
    }

    let job = VerifyJob {
        checks,
        p_values: args.p.clone(),
        shard,
        keep_going: args.keep_going,
        jobs: args.jobs,
        format: args.output.format,
    };
    let stream = input::stream(&args.input)?;
    let mut out = open_output(&args.output)?;

    let outcome: VerifyOutcome = if args.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .map_err(|e| format!("cannot start {} workers: {e}", args.jobs))?;
        pool.install(|| runner::run_verify(stream, &job, &mut *out))?
    } else {
        runner::run_verify(stream, &job, &mut *out)?
    };

    if sweep_mode {
        eprintln!(
            "swept {} graphs: {} reports, {} violated, {} equality census rows{}",
            outcome.graphs,
            outcome.reports,
            outcome.violated,
            outcome.census.len(),
            if outcome.aborted { " (stopped at first violation)" } else { "" },
        );
    }
    Ok(if outcome.violated > 0 { 2 } else { 0 })
}
