//! Low-to-high frequency sampling schedule over half of a real image's
//! spectrum.
//!
//! Frequencies are signed cycles per image side in `[-n/2, n/2)`. A real
//! image's spectrum is conjugate-symmetric, so only one member of each pair
//! `(fu, fv) ~ (-fu, -fv)` (taken modulo the dimensions) is measured. The
//! representative kept is the one with `fv > 0`; on the two rows that mirror
//! onto themselves (`fv == 0` and `fv == -height/2`) it is the one with
//! `fu >= 0`, or `fu == -width/2`.
//!
//! Each representative contributes its real part and, unless it is
//! self-conjugate, its imaginary part. For even dimensions there are exactly
//! four self-conjugate bins, so the full schedule has `width * height`
//! entries.

use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    Real,
    Imag,
}

/// One scheduled illumination: a signed frequency pair and which part of
/// the complex coefficient it records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrequencySample {
    pub fu: i32,
    pub fv: i32,
    pub part: Part,
}

impl FrequencySample {
    pub const fn new(fu: i32, fv: i32, part: Part) -> Self {
        Self { fu, fv, part }
    }

    /// Spectrum bin `(column, row)` this sample reads from.
    pub fn bin(&self, width: usize, height: usize) -> (usize, usize) {
        (
            self.fu.rem_euclid(width as i32) as usize,
            self.fv.rem_euclid(height as i32) as usize,
        )
    }

    /// Bin of the conjugate mirror `(-fu, -fv)`.
    pub fn mirror_bin(&self, width: usize, height: usize) -> (usize, usize) {
        (
            (-self.fu).rem_euclid(width as i32) as usize,
            (-self.fv).rem_euclid(height as i32) as usize,
        )
    }

    pub fn is_self_conjugate(&self, width: usize, height: usize) -> bool {
        self.bin(width, height) == self.mirror_bin(width, height)
    }

    pub fn validate(&self, width: usize, height: usize) -> Result<()> {
        let ok = check_dims(width, height).is_ok()
            && is_canonical(self.fu, self.fv, width, height)
            && !(self.part == Part::Imag && self.is_self_conjugate(width, height));
        if ok {
            Ok(())
        } else {
            Err(Error::ScheduleConsistency {
                fu: self.fu,
                fv: self.fv,
                part: self.part,
                width,
                height,
            })
        }
    }
}

fn check_dims(width: usize, height: usize) -> Result<()> {
    if width == 0
        || height == 0
        || !width.is_multiple_of(2)
        || !height.is_multiple_of(2)
        || width > i32::MAX as usize
        || height > i32::MAX as usize
    {
        return Err(Error::UnsupportedDimension { width, height });
    }
    Ok(())
}

/// True when `(fu, fv)` lies in the signed range and is the kept member of
/// its conjugate pair.
pub fn is_canonical(fu: i32, fv: i32, width: usize, height: usize) -> bool {
    let (hw, hh) = ((width / 2) as i32, (height / 2) as i32);
    if !(-hw..hw).contains(&fu) || !(-hh..hh).contains(&fv) {
        return false;
    }
    fv > 0 || ((fv == 0 || fv == -hh) && (fu >= 0 || fu == -hw))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplingSchedule {
    width: usize,
    height: usize,
    samples: Vec<FrequencySample>,
}

impl SamplingSchedule {
    /// Wraps an explicit sample list, checking every sample and rejecting
    /// duplicates.
    pub fn from_samples(
        width: usize,
        height: usize,
        samples: Vec<FrequencySample>,
    ) -> Result<Self> {
        check_dims(width, height)?;
        let mut seen = HashSet::with_capacity(samples.len());
        for s in &samples {
            s.validate(width, height)?;
            if !seen.insert(*s) {
                return Err(Error::Domain(format!("duplicate sample {s:?} in schedule")));
            }
        }
        Ok(Self {
            width,
            height,
            samples,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn samples(&self) -> &[FrequencySample] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// The schedule truncated to its first `count` samples.
    pub fn prefix(&self, count: usize) -> Result<Self> {
        if count == 0 || count > self.len() {
            return Err(Error::Range(format!(
                "prefix length {count} outside 1..={}",
                self.len()
            )));
        }
        Ok(Self {
            width: self.width,
            height: self.height,
            samples: self.samples[..count].to_vec(),
        })
    }

    /// `count / (width * height)`.
    pub fn sampling_ratio(&self) -> f64 {
        self.len() as f64 / (self.width * self.height) as f64
    }
}

/// First `count` samples of the low-to-high frequency order for a
/// `width x height` image.
///
/// Representatives are sorted by squared radius, then `fv`, then `fu`; each
/// emits `Real` then `Imag` (`Real` only when self-conjugate).
pub fn build_schedule(width: usize, height: usize, count: usize) -> Result<SamplingSchedule> {
    check_dims(width, height)?;
    let total = width * height;
    if count == 0 || count > total {
        return Err(Error::Range(format!(
            "illumination count {count} outside 1..={total} for a {width}x{height} image"
        )));
    }

    let (hw, hh) = ((width / 2) as i32, (height / 2) as i32);
    let mut reps: Vec<(i64, i32, i32)> = Vec::with_capacity(total / 2 + 2);
    for fv in -hh..hh {
        for fu in -hw..hw {
            if is_canonical(fu, fv, width, height) {
                let r2 = i64::from(fu) * i64::from(fu) + i64::from(fv) * i64::from(fv);
                reps.push((r2, fv, fu));
            }
        }
    }
    reps.sort_unstable();

    let mut samples = Vec::with_capacity(count);
    'outer: for &(_, fv, fu) in &reps {
        let real = FrequencySample::new(fu, fv, Part::Real);
        let with_imag = !real.is_self_conjugate(width, height);
        for part in [Part::Real, Part::Imag] {
            if part == Part::Imag && !with_imag {
                continue;
            }
            if samples.len() == count {
                break 'outer;
            }
            samples.push(FrequencySample::new(fu, fv, part));
        }
    }
    debug_assert_eq!(samples.len(), count);
    Ok(SamplingSchedule {
        width,
        height,
        samples,
    })
}
