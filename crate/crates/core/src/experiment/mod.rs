//! End-to-end harness: ingest, measure, fit once, sweep illumination
//! counts, and write the curve CSV and reconstruction dumps.

mod config;
mod csv;
mod dump;
mod pgm;
mod report;
mod run;

pub use config::{
    default_illumination_counts, validate_counts, ExperimentConfig, DEFAULT_DUMP_COUNT,
    DEFAULT_DUMP_ILLUMINATIONS, DEFAULT_IMAGE_SIZE, DEFAULT_TEST_COUNT, DEFAULT_TRAIN_COUNT,
};
pub use csv::{format_curve_csv, parse_curve_csv, write_curve_csv, CURVE_HEADER};
pub use dump::{DumpEntry, MANIFEST_HEADER, MANIFEST_NAME};
pub use pgm::{decode_pgm, encode_pgm, to_gray8, write_pgm};
pub use report::{CurvePoint, ExperimentReport};
pub use run::{dump_reconstructions, run_curve_experiment, PreparedExperiment};
