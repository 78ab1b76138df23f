use std::f64::consts::TAU;

use super::schedule::{FrequencySample, Part};
use crate::error::Result;
use crate::image::Image;

/// Phase `2π (fu·x/width + fv·y/height)`, reduced to a whole number of
/// `2π/(width·height)` steps before scaling so large frequencies keep full
/// precision.
#[inline]
pub(crate) fn phase(fu: i64, fv: i64, x: usize, y: usize, width: usize, height: usize) -> f64 {
    let n = (width * height) as i64;
    let k = (fu * x as i64 * height as i64 + fv * y as i64 * width as i64).rem_euclid(n);
    TAU * k as f64 / n as f64
}

/// Illumination pattern whose inner product with an object yields the
/// scheduled part of its forward DFT coefficient.
///
/// `Real` patterns are `cos(phase)`; `Imag` patterns are `-sin(phase)`, which
/// matches the kernel `exp(-i·phase)`.
pub fn generate_pattern(width: usize, height: usize, sample: FrequencySample) -> Result<Image> {
    sample.validate(width, height)?;
    let (fu, fv) = (i64::from(sample.fu), i64::from(sample.fv));
    Image::from_fn(width, height, |x, y| {
        let p = phase(fu, fv, x, y, width, height);
        match sample.part {
            Part::Real => p.cos(),
            Part::Imag => -p.sin(),
        }
    })
}
