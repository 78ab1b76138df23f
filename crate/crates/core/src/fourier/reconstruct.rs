use rustfft::num_complex::Complex;

use super::measure::MeasurementVector;
use super::schedule::{Part, SamplingSchedule};
use super::transform::Transform2d;
use crate::error::{Error, Result};
use crate::image::Image;

/// Inverse-DFT reconstruction from a partial, half-plane spectrum.
///
/// Measured parts are placed at their bins and mirrored as complex
/// conjugates; everything unmeasured is zero. Returns the real part of the
/// `1/(width·height)`-normalized inverse transform.
pub fn reconstruct(measurements: &MeasurementVector, schedule: &SamplingSchedule) -> Result<Image> {
    reconstruct_with_residue(measurements, schedule).map(|(img, _)| img)
}

/// Like [`reconstruct`], also returning the largest absolute imaginary
/// component discarded from the inverse transform.
pub fn reconstruct_with_residue(
    measurements: &MeasurementVector,
    schedule: &SamplingSchedule,
) -> Result<(Image, f64)> {
    if measurements.len() != schedule.len() {
        return Err(Error::LengthMismatch {
            expected: schedule.len(),
            actual: measurements.len(),
        });
    }
    let (w, h) = (schedule.width(), schedule.height());
    if measurements.width() != w || measurements.height() != h {
        return Err(Error::DimensionMismatch {
            expected: format!("{w}x{h}"),
            actual: format!("{}x{}", measurements.width(), measurements.height()),
        });
    }

    let mut spectrum = vec![Complex::new(0.0, 0.0); w * h];
    for (sample, &value) in schedule.samples().iter().zip(measurements.values()) {
        let (u, v) = sample.bin(w, h);
        let (mu, mv) = sample.mirror_bin(w, h);
        let (idx, mirror) = (v * w + u, mv * w + mu);
        match sample.part {
            Part::Real => {
                spectrum[idx].re = value;
                spectrum[mirror].re = value;
            }
            // Self-conjugate bins never carry an Imag sample.
            Part::Imag => {
                spectrum[idx].im = value;
                spectrum[mirror].im = -value;
            }
        }
    }

    Transform2d::new(w, h).inverse(&mut spectrum);
    let scale = 1.0 / (w * h) as f64;
    let mut residue = 0.0f64;
    let pixels = spectrum
        .iter()
        .map(|c| {
            residue = residue.max((c.im * scale).abs());
            c.re * scale
        })
        .collect();
    Ok((Image::new(w, h, pixels)?, residue))
}
