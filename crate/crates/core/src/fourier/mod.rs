//! Simulated Fourier single-pixel acquisition: the illumination schedule,
//! the patterns, the detector intensity sequence and inverse-DFT
//! reconstruction from a partial spectrum.
//!
//! Convention throughout: forward kernel `exp(-i2π(fu·x/width + fv·y/height))`,
//! unnormalized; the inverse carries the `1/(width·height)` factor.

mod measure;
mod pattern;
mod reconstruct;
mod schedule;
mod transform;

pub use measure::{
    dft_coefficient, measure_sequence, measure_with_patterns, MeasurementVector, Measurer,
};
pub use pattern::generate_pattern;
pub use reconstruct::{reconstruct, reconstruct_with_residue};
pub use schedule::{build_schedule, is_canonical, FrequencySample, Part, SamplingSchedule};
