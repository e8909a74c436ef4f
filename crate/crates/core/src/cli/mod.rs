//! The `rankjump` command line: `analyze`, `degree` and `plot`.
//!
//! Exit codes: 0 on success, 1 on input errors, 2 when a verification
//! inside the report fails.

mod cache;
mod io;
mod plot;
mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{Analyzer, DegreeBox};
use crate::error::{Error, Result};

pub use cache::{cache_key, CACHE_DIR_VAR};
pub use io::{parse_csv, parse_degree, parse_json, read_matrix, MatrixFile};
pub use plot::render_svg;
pub use report::{
    analyze, degree, AnalysisReport, DegreeReport, ETableEntry, FaceSummary, FarDegreeSummary, RefinementSummary,
    SpotCheck, Timing, SCHEMA, SKIPPED_NOT_SIMPLEX,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "rankjump", version, about = "Local cohomology and rank jumps of affine semigroup rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Matrix file: {"rows": [[...], ...]} or CSV with --csv.
    #[arg(long)]
    pub matrix: PathBuf,
    #[arg(long)]
    pub csv: bool,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    /// Box as lo:hi per coordinate, comma separated; defaults to -3:3.
    #[arg(long = "box", allow_hyphen_values = true)]
    pub region: Option<String>,
    #[arg(long, default_value_t = 2)]
    pub margin: i64,
    /// Worker threads; defaults to the number of logical cores.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Cache directory; falls back to $RANKJUMP_CACHE_DIR.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Seed for the randomized membership spot check.
    #[arg(long)]
    pub rng_seed: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full box analysis.
    Analyze {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[command(flatten)]
        scan: ScanArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write the SVG plot (d = 2 only).
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Single-degree drill-down.
    Degree {
        #[command(flatten)]
        matrix: MatrixArgs,
        /// Degree as comma-separated integers.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// SVG of the scan (d = 2 only).
    Plot {
        #[command(flatten)]
        matrix: MatrixArgs,
        #[command(flatten)]
        scan: ScanArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Validated configuration of a box analysis.
#[derive(Clone, Debug)]
pub struct AnalysisConfig {
    pub matrix: PathBuf,
    pub csv: bool,
    pub region: Option<DegreeBox>,
    pub margin: i64,
    pub jobs: Option<usize>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub plot: Option<PathBuf>,
    pub cache: Option<PathBuf>,
    pub rng_seed: Option<u64>,
}

impl AnalysisConfig {
    fn from_args(matrix: MatrixArgs, scan: ScanArgs, format: Format, output: Option<PathBuf>, plot: Option<PathBuf>) -> Result<Self> {
        if scan.jobs == Some(0) {
            return Err(Error::Parse("--jobs must be at least 1".into()));
        }
        Ok(Self {
            region: scan.region.as_deref().map(|b| DegreeBox::parse(b, scan.margin)).transpose()?,
            matrix: matrix.matrix,
            csv: matrix.csv,
            margin: scan.margin,
            jobs: scan.jobs,
            format,
            output,
            plot,
            cache: cache::resolve_dir(scan.cache.as_deref()),
            rng_seed: scan.rng_seed,
        })
    }

    fn region_for(&self, d: usize) -> Result<DegreeBox> {
        match &self.region {
            Some(b) => Ok(b.clone()),
            None => DegreeBox::cube(d, -3, 3, self.margin),
        }
    }
}

/// Loads the report from the cache or computes and stores it.
pub fn analysis_report(config: &AnalysisConfig, rows: &[Vec<i64>]) -> Result<AnalysisReport> {
    let region = config.region_for(rows.len())?;
    let key = cache_key(rows, &region, config.rng_seed);
    if let Some(dir) = &config.cache {
        if let Some(mut r) = cache::load(dir, &key) {
            log::info!("cache hit {key}");
            r.timing.cached = true;
            return Ok(r);
        }
    }
    let run = || analyze(rows, &region, config.rng_seed);
    let r = match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Parse(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    if let Some(dir) = &config.cache {
        cache::store(dir, &key, &r)?;
    }
    Ok(r)
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                out.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

/// Runs `analyze`; the returned flag reports whether all checks passed.
pub fn cmd_analyze(config: &AnalysisConfig) -> Result<bool> {
    let rows = read_matrix(&config.matrix, config.csv)?;
    let report = analysis_report(config, &rows)?;
    let text = match config.format {
        Format::Json => serde_json::to_string_pretty(&report)?,
        Format::Table => report.table(),
    };
    emit(config.output.as_deref(), &text)?;
    if let Some(p) = &config.plot {
        let analyzer = Analyzer::from_rows(&rows)?;
        std::fs::write(p, render_svg(&analyzer, &report)?)?;
    }
    Ok(report.verified())
}

pub fn cmd_degree(matrix: &Path, csv: bool, beta: &[i64], format: Format, output: Option<&Path>) -> Result<DegreeReport> {
    let rows = read_matrix(matrix, csv)?;
    let r = degree(&rows, beta)?;
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&r)?,
        Format::Table => r.table(),
    };
    emit(output, &text)?;
    Ok(r)
}

pub fn cmd_plot(config: &AnalysisConfig) -> Result<String> {
    let rows = read_matrix(&config.matrix, config.csv)?;
    let analyzer = Analyzer::from_rows(&rows)?;
    if analyzer.d() != 2 {
        return Err(Error::UnsupportedDimension(analyzer.d()));
    }
    let report = analysis_report(config, &rows)?;
    let svg = render_svg(&analyzer, &report)?;
    emit(config.output.as_deref(), &svg)?;
    Ok(svg)
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            e.print().ok();
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Analyze {
            matrix,
            scan,
            format,
            output,
            plot,
        } => AnalysisConfig::from_args(matrix, scan, format, output, plot).and_then(|c| cmd_analyze(&c)),
        Command::Degree {
            matrix,
            beta,
            format,
            output,
        } => parse_degree(&beta)
            .and_then(|b| cmd_degree(&matrix.matrix, matrix.csv, &b, format, output.as_deref()))
            .map(|_| true),
        Command::Plot { matrix, scan, output } => {
            AnalysisConfig::from_args(matrix, scan, Format::Json, output, None).and_then(|c| cmd_plot(&c).map(|_| true))
        }
    };
    match outcome {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            eprintln!("rankjump: verification failed");
            EXIT_VERIFY
        }
        Err(e) => {
            eprintln!("rankjump: {e}");
            EXIT_INPUT
        }
    }
}
