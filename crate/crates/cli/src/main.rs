//! `triadic`: directed triangle censuses, closure charts and null-model
//! comparisons for SNAP-style edge lists.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use triadic::census::{CensusReport, GroupsReport, SCHEMA_VERSION};
use triadic::chart::ChartData;
use triadic::graph::Digraph;
use triadic::io::load_digraph;
use triadic::null::{deviation_report, randomized_chart};
use triadic::sampling::{full_estimated_census, SamplingConfig};
use triadic::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_UNDEFINED: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "triadic", version, about = "Directed triangle and wedge censuses with reciprocal edges")]
struct Cli {
    /// Worker threads; defaults to all cores. 1 gives the sequential path.
    #[arg(long, global = true, env = "TRIADIC_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact wedge and triangle census with all closures.
    Census(Common),
    /// Sampled census with Hoeffding error bounds.
    Estimate {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Closure chart data: one stacked bar per wedge type.
    Chart {
        #[command(flatten)]
        common: Common,
        /// Build the chart from a sampled census.
        #[arg(long)]
        estimated: bool,
        #[command(flatten)]
        sampling: OptionalSampling,
    },
    /// Triangle-type fractions against the random-direction null model.
    Null {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random assignments averaged into the randomized chart.
        #[arg(long, default_value_t = 1)]
        repeats: u32,
    },
    /// Closures grouped by reciprocal-edge count and the cyclic breakdown.
    Groups(Common),
    /// Wall-clock comparison of the sampled and exact censuses.
    Bench {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 0.001)]
        delta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
struct Common {
    /// Edge list: one `source target` pair per line, `#` comments.
    #[arg(long)]
    input: PathBuf,
    /// Output file; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
struct Sampling {
    /// Wedges sampled per wedge type.
    #[arg(long)]
    samples: u64,
    /// Failure probability of each error bound.
    #[arg(long)]
    delta: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Args)]
struct OptionalSampling {
    #[arg(long, default_value_t = 20_000, requires = "estimated")]
    samples: u64,
    #[arg(long, default_value_t = 0.001, requires = "estimated")]
    delta: f64,
    #[arg(long, default_value_t = 0, requires = "estimated")]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Lib(Error::Io(e))
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::Csv(_) => EXIT_IO,
        Error::Parse { .. } => EXIT_PARSE,
        Error::InvalidArgument(_) => EXIT_USAGE,
        Error::Undefined(_)
        | Error::NoWedges(_)
        | Error::IncompatibleTypes { .. }
        | Error::NotATriangle
        | Error::CapExceeded { .. } => EXIT_UNDEFINED,
    }
}

fn load(path: &Path) -> Result<Digraph, Failure> {
    let (g, stats) = load_digraph(path).map_err(|e| match e {
        Error::Io(io) => Error::Io(io::Error::new(io.kind(), format!("{}: {io}", path.display()))),
        other => other,
    })?;
    if stats.self_loops > 0 {
        eprintln!("warning: dropped {} self-loops", stats.self_loops);
    }
    if stats.duplicates > 0 {
        eprintln!("warning: merged {} duplicate edges", stats.duplicates);
    }
    Ok(g)
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| {
            io::Error::new(e.kind(), format!("{}: {e}", p.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn emit_json(out: &mut dyn Write, json: String) -> Result<(), Failure> {
    out.write_all(json.as_bytes())?;
    out.write_all(b"\n")?;
    out.flush()?;
    Ok(())
}

fn write_census(report: &CensusReport, common: &Common) -> Result<(), Failure> {
    let mut out = open_output(common.output.as_deref())?;
    match common.format {
        Format::Json => emit_json(&mut out, report.to_json()?),
        Format::Csv => {
            report.write_csv(&mut out)?;
            Ok(out.flush()?)
        }
    }
}

fn sampling_config(samples: u64, delta: f64, seed: u64) -> Result<SamplingConfig, Failure> {
    SamplingConfig::new(samples, delta, seed).map_err(|e| Failure::Usage(e.to_string()))
}

#[derive(Serialize)]
struct Timing {
    exact_seconds: f64,
    estimated_seconds: f64,
    speedup: f64,
}

#[derive(Serialize)]
struct BenchReport {
    schema_version: u32,
    kind: &'static str,
    samples: u64,
    delta: f64,
    seed: u64,
    /// Wall-clock values; the only part that varies between runs.
    timing: Timing,
    exact: CensusReport,
    estimated: CensusReport,
}

fn run(cli: Cli) -> Result<(), Failure> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(Failure::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Census(common) => {
            let g = load(&common.input)?;
            write_census(&CensusReport::exact(&g), &common)
        }
        Command::Estimate { common, sampling } => {
            let cfg = sampling_config(sampling.samples, sampling.delta, sampling.seed)?;
            let g = load(&common.input)?;
            write_census(&full_estimated_census(&g, cfg)?, &common)
        }
        Command::Chart {
            common,
            estimated,
            sampling,
        } => {
            let cfg = sampling_config(sampling.samples, sampling.delta, sampling.seed)?;
            let g = load(&common.input)?;
            let report = if estimated {
                full_estimated_census(&g, cfg)?
            } else {
                CensusReport::exact(&g)
            };
            let chart = ChartData::from_report(&report);
            let mut out = open_output(common.output.as_deref())?;
            match common.format {
                Format::Json => emit_json(&mut out, chart.to_json()?),
                Format::Csv => {
                    chart.write_csv(&mut out)?;
                    Ok(out.flush()?)
                }
            }
        }
        Command::Null { common, seed, repeats } => {
            if repeats == 0 {
                return Err(Failure::Usage("--repeats must be at least 1".into()));
            }
            let g = load(&common.input)?;
            let mut report = deviation_report(&g)?;
            report.randomized_chart = Some(randomized_chart(&g, seed, repeats)?);
            let mut out = open_output(common.output.as_deref())?;
            match common.format {
                Format::Json => emit_json(&mut out, report.to_json()?),
                Format::Csv => {
                    report.write_csv(&mut out)?;
                    Ok(out.flush()?)
                }
            }
        }
        Command::Groups(common) => {
            let g = load(&common.input)?;
            let report = GroupsReport::from_census(&CensusReport::exact(&g));
            let mut out = open_output(common.output.as_deref())?;
            match common.format {
                Format::Json => emit_json(&mut out, report.to_json()?),
                Format::Csv => {
                    report.write_csv(&mut out)?;
                    Ok(out.flush()?)
                }
            }
        }
        Command::Bench {
            input,
            output,
            samples,
            delta,
            seed,
        } => {
            let cfg = sampling_config(samples, delta, seed)?;
            let g = load(&input)?;
            let start = Instant::now();
            let exact = CensusReport::exact(&g);
            let exact_seconds = start.elapsed().as_secs_f64();
            let start = Instant::now();
            let estimated = full_estimated_census(&g, cfg)?;
            let estimated_seconds = start.elapsed().as_secs_f64();
            let report = BenchReport {
                schema_version: SCHEMA_VERSION,
                kind: "bench",
                samples,
                delta,
                seed,
                timing: Timing {
                    exact_seconds,
                    estimated_seconds,
                    speedup: exact_seconds / estimated_seconds,
                },
                exact,
                estimated,
            };
            let json = serde_json::to_string_pretty(&report).map_err(Error::from)?;
            emit_json(&mut open_output(output.as_deref())?, json)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
