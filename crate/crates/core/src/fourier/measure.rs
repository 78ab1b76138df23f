use super::pattern::{generate_pattern, phase};
use super::schedule::{Part, SamplingSchedule};
use super::transform::Transform2d;
use crate::error::{Error, Result};
use crate::exec::{try_map_slice, Execution};
use crate::image::Image;

/// Single-pixel intensity sequence, one value per scheduled illumination.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementVector {
    width: usize,
    height: usize,
    values: Vec<f64>,
}

impl MeasurementVector {
    /// Wraps raw detector values recorded for a `width x height` object.
    pub fn new(width: usize, height: usize, values: Vec<f64>) -> Self {
        Self {
            width,
            height,
            values,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// The first `t` intensities.
    pub fn prefix(&self, t: usize) -> &[f64] {
        &self.values[..t.min(self.values.len())]
    }
}

impl AsRef<[f64]> for MeasurementVector {
    fn as_ref(&self) -> &[f64] {
        &self.values
    }
}

fn check_object(object: &Image, schedule: &SamplingSchedule) -> Result<()> {
    if object.width() != schedule.width() || object.height() != schedule.height() {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{}", schedule.width(), schedule.height()),
            actual: format!("{}x{}", object.width(), object.height()),
        });
    }
    Ok(())
}

/// Simulated single-pixel acquisition for one schedule.
///
/// Computes the full spectrum once per object and reads the scheduled
/// parts out of it, which is identical to summing object x pattern for
/// every illumination. Cheap to clone and safe to share across threads.
#[derive(Clone)]
pub struct Measurer {
    schedule: SamplingSchedule,
    transform: Transform2d,
    bins: Vec<(usize, Part)>,
}

impl Measurer {
    pub fn new(schedule: SamplingSchedule) -> Self {
        let (w, h) = (schedule.width(), schedule.height());
        let bins = schedule
            .samples()
            .iter()
            .map(|s| {
                let (u, v) = s.bin(w, h);
                (v * w + u, s.part)
            })
            .collect();
        Self {
            transform: Transform2d::new(w, h),
            schedule,
            bins,
        }
    }

    pub fn schedule(&self) -> &SamplingSchedule {
        &self.schedule
    }

    pub fn measure(&self, object: &Image) -> Result<MeasurementVector> {
        check_object(object, &self.schedule)?;
        let spectrum = self.transform.forward(object.pixels());
        let values = self
            .bins
            .iter()
            .map(|&(idx, part)| match part {
                Part::Real => spectrum[idx].re,
                Part::Imag => spectrum[idx].im,
            })
            .collect();
        Ok(MeasurementVector::new(
            object.width(),
            object.height(),
            values,
        ))
    }

    pub fn measure_batch(
        &self,
        objects: &[Image],
        exec: Execution,
    ) -> Result<Vec<MeasurementVector>> {
        try_map_slice(exec, objects, |o| self.measure(o))
    }
}

/// Intensity sequence recorded for `object` under every illumination of
/// `schedule`.
pub fn measure_sequence(object: &Image, schedule: &SamplingSchedule) -> Result<MeasurementVector> {
    check_object(object, schedule)?;
    Measurer::new(schedule.clone()).measure(object)
}

/// Same result as [`measure_sequence`], computed literally as the sum of
/// object x pattern for each illumination. O(samples x pixels).
pub fn measure_with_patterns(
    object: &Image,
    schedule: &SamplingSchedule,
) -> Result<MeasurementVector> {
    check_object(object, schedule)?;
    let values = schedule
        .samples()
        .iter()
        .map(|&s| {
            let pattern = generate_pattern(schedule.width(), schedule.height(), s)?;
            Ok(object
                .pixels()
                .iter()
                .zip(pattern.pixels())
                .map(|(o, p)| o * p)
                .sum())
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(MeasurementVector::new(
        object.width(),
        object.height(),
        values,
    ))
}

/// Direct double-sum evaluation of one forward DFT coefficient with kernel
/// `exp(-i2π(fu·x/width + fv·y/height))`. Frequencies wrap modulo the
/// dimensions. Returns `(re, im)`.
pub fn dft_coefficient(object: &Image, fu: i64, fv: i64) -> (f64, f64) {
    let (w, h) = (object.width(), object.height());
    let (mut re, mut im) = (0.0, 0.0);
    for y in 0..h {
        for x in 0..w {
            let o = object.get(x, y);
            let p = phase(fu, fv, x, y, w, h);
            re += o * p.cos();
            im -= o * p.sin();
        }
    }
    (re, im)
}
