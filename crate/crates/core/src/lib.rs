//! Object classification from Fourier single-pixel intensity sequences.
//!
//! A single-pixel detector records one number per structured illumination.
//! With sinusoidal illumination each number is the real or imaginary part of
//! one Fourier coefficient of the object. This crate simulates that
//! acquisition ([`fourier`]), classifies objects straight from a short
//! low-frequency intensity sequence with a Gaussian naive Bayes model
//! ([`bayes`]), loads MNIST digits as test objects ([`ingest`]) and runs the
//! accuracy-versus-illuminations sweep ([`experiment`]).

pub mod bayes;
pub mod error;
pub mod exec;
pub mod experiment;
pub mod fourier;
pub mod image;
pub mod ingest;

pub use bayes::{fit, gaussian_log_pdf, ClassLabel, GaussianParams, NaiveBayesModel, Posterior};
pub use error::{Error, Result};
pub use exec::Execution;
pub use fourier::{
    build_schedule, dft_coefficient, generate_pattern, measure_sequence, reconstruct,
    FrequencySample, MeasurementVector, Part, SamplingSchedule,
};
pub use image::Image;
