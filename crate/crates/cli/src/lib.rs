//! Argument handling and the run loop behind the `fspi` binary.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser};
use fspi_core::experiment::{
    default_illumination_counts, validate_counts, write_curve_csv, ExperimentConfig,
    ExperimentReport, PreparedExperiment, DEFAULT_DUMP_COUNT, DEFAULT_DUMP_ILLUMINATIONS,
    DEFAULT_IMAGE_SIZE, DEFAULT_TEST_COUNT, DEFAULT_TRAIN_COUNT,
};
use fspi_core::{bayes::DEFAULT_SMOOTHING, Execution};

/// Classify MNIST digits from simulated Fourier single-pixel intensity
/// sequences and report accuracy against the number of illuminations.
#[derive(Debug, Parser)]
#[command(name = "fspi", version)]
struct Args {
    /// Training images (IDX, uncompressed)
    #[arg(long, value_name = "PATH")]
    train_images: PathBuf,
    /// Training labels (IDX, uncompressed)
    #[arg(long, value_name = "PATH")]
    train_labels: PathBuf,
    /// Test images (IDX, uncompressed)
    #[arg(long, value_name = "PATH")]
    test_images: PathBuf,
    /// Test labels (IDX, uncompressed)
    #[arg(long, value_name = "PATH")]
    test_labels: PathBuf,
    /// Number of leading training records to use
    #[arg(long, default_value_t = DEFAULT_TRAIN_COUNT)]
    train_count: usize,
    /// Number of leading test records to use
    #[arg(long, default_value_t = DEFAULT_TEST_COUNT)]
    test_count: usize,
    /// Side length objects are resized to (even)
    #[arg(long, default_value_t = DEFAULT_IMAGE_SIZE)]
    size: usize,
    /// Strictly ascending illumination counts, comma separated
    /// [default: 1..=20, then 25..=200 step 5]
    #[arg(long, value_delimiter = ',', value_name = "N,N,...")]
    counts: Option<Vec<usize>>,
    /// Relative variance smoothing
    #[arg(long, default_value_t = DEFAULT_SMOOTHING)]
    smoothing: f64,
    /// Where to write the accuracy curve
    #[arg(long, default_value = "curve.csv", value_name = "PATH")]
    out_csv: PathBuf,
    /// Write original/reconstruction PGM pairs and a manifest here
    #[arg(long, value_name = "DIR")]
    dump_dir: Option<PathBuf>,
    /// Number of test objects to dump
    #[arg(long, default_value_t = DEFAULT_DUMP_COUNT)]
    dump_n: usize,
    /// Illumination count used for dumped reconstructions
    #[arg(long, default_value_t = DEFAULT_DUMP_ILLUMINATIONS)]
    dump_illuminations: usize,
    /// Run on a single thread
    #[arg(long)]
    sequential: bool,
}

/// Parses `argv` (including the program name) into a validated config.
pub fn parse_cli<I, T>(argv: I) -> Result<ExperimentConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = Args::try_parse_from(argv)?;
    let usage = |msg: String| Args::command().error(ErrorKind::ValueValidation, msg);

    let counts = args.counts.unwrap_or_else(default_illumination_counts);
    let mut config = ExperimentConfig::new(
        args.train_images,
        args.train_labels,
        args.test_images,
        args.test_labels,
    );
    config.train_count = args.train_count;
    config.test_count = args.test_count;
    config.image_size = args.size;
    config.illumination_counts = counts;
    config.smoothing = args.smoothing;
    config.out_csv = args.out_csv;
    config.dump_dir = args.dump_dir;
    config.dump_count = args.dump_n;
    config.dump_illuminations = args.dump_illuminations;
    config.execution = if args.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };

    validate_counts(
        &config.illumination_counts,
        config.image_size * config.image_size,
    )
    .map_err(|e| usage(format!("invalid --counts: {e}")))?;
    config.validate().map_err(|e| usage(e.to_string()))?;
    Ok(config)
}

/// Runs the sweep, writes the CSV and, if configured, the dumps.
pub fn run(config: &ExperimentConfig) -> fspi_core::Result<ExperimentReport> {
    let start = std::time::Instant::now();
    let prepared = PreparedExperiment::load(config)?;
    let points = prepared.curve()?;
    let report = ExperimentReport {
        image_size: config.image_size,
        points,
        elapsed_secs: start.elapsed().as_secs_f64(),
    };
    write_curve_csv(&report, &config.out_csv)?;

    if let Some(dir) = &config.dump_dir {
        let entries = prepared.dump(dir, config.dump_illuminations, config.dump_count)?;
        let correct = entries.iter().filter(|e| e.is_correct()).count();
        eprintln!(
            "dumped {} objects at {} illuminations to {} ({correct}/{} classified correctly)",
            entries.len(),
            config.dump_illuminations,
            dir.display(),
            entries.len()
        );
    }
    Ok(report)
}
