use std::path::PathBuf;

use crate::bayes::DEFAULT_SMOOTHING;
use crate::error::{Error, Result};
use crate::exec::Execution;

pub const DEFAULT_TRAIN_COUNT: usize = 9000;
pub const DEFAULT_TEST_COUNT: usize = 500;
pub const DEFAULT_IMAGE_SIZE: usize = 64;
pub const DEFAULT_DUMP_COUNT: usize = 15;
pub const DEFAULT_DUMP_ILLUMINATIONS: usize = 13;

/// Every count from 1 to 20, then every 5 up to 200.
pub fn default_illumination_counts() -> Vec<usize> {
    (1..=20).chain((25..=200).step_by(5)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub train_images: PathBuf,
    pub train_labels: PathBuf,
    pub test_images: PathBuf,
    pub test_labels: PathBuf,
    pub train_count: usize,
    pub test_count: usize,
    pub image_size: usize,
    pub illumination_counts: Vec<usize>,
    pub smoothing: f64,
    pub out_csv: PathBuf,
    pub dump_dir: Option<PathBuf>,
    pub dump_count: usize,
    pub dump_illuminations: usize,
    pub execution: Execution,
}

impl ExperimentConfig {
    /// Defaults for everything but the four IDX paths.
    pub fn new(
        train_images: impl Into<PathBuf>,
        train_labels: impl Into<PathBuf>,
        test_images: impl Into<PathBuf>,
        test_labels: impl Into<PathBuf>,
    ) -> Self {
        Self {
            train_images: train_images.into(),
            train_labels: train_labels.into(),
            test_images: test_images.into(),
            test_labels: test_labels.into(),
            train_count: DEFAULT_TRAIN_COUNT,
            test_count: DEFAULT_TEST_COUNT,
            image_size: DEFAULT_IMAGE_SIZE,
            illumination_counts: default_illumination_counts(),
            smoothing: DEFAULT_SMOOTHING,
            out_csv: PathBuf::from("curve.csv"),
            dump_dir: None,
            dump_count: DEFAULT_DUMP_COUNT,
            dump_illuminations: DEFAULT_DUMP_ILLUMINATIONS,
            execution: Execution::default(),
        }
    }

    /// Standard MNIST file names inside `dir`.
    pub fn from_mnist_dir(dir: impl Into<PathBuf>) -> Self {
        let dir = dir.into();
        Self::new(
            dir.join("train-images-idx3-ubyte"),
            dir.join("train-labels-idx1-ubyte"),
            dir.join("t10k-images-idx3-ubyte"),
            dir.join("t10k-labels-idx1-ubyte"),
        )
    }

    pub fn max_illuminations(&self) -> usize {
        self.image_size * self.image_size
    }

    pub fn validate(&self) -> Result<()> {
        if self.train_count == 0 || self.test_count == 0 {
            return Err(Error::Domain(
                "train and test counts must be positive".into(),
            ));
        }
        if self.image_size == 0 || !self.image_size.is_multiple_of(2) {
            return Err(Error::UnsupportedDimension {
                width: self.image_size,
                height: self.image_size,
            });
        }
        validate_counts(&self.illumination_counts, self.max_illuminations())?;
        if !(self.smoothing >= 0.0 && self.smoothing.is_finite()) {
            return Err(Error::Domain(format!(
                "smoothing must be >= 0, got {}",
                self.smoothing
            )));
        }
        if self.dump_dir.is_some() {
            if self.dump_count == 0 || self.dump_count > self.test_count {
                return Err(Error::Range(format!(
                    "dump count {} outside 1..={}",
                    self.dump_count, self.test_count
                )));
            }
            if self.dump_illuminations == 0 || self.dump_illuminations > self.max_illuminations() {
                return Err(Error::Range(format!(
                    "dump illuminations {} outside 1..={}",
                    self.dump_illuminations,
                    self.max_illuminations()
                )));
            }
        }
        Ok(())
    }
}

/// Counts must be non-empty, positive, strictly ascending and at most `max`.
pub fn validate_counts(counts: &[usize], max: usize) -> Result<()> {
    if counts.is_empty() {
        return Err(Error::Domain("no illumination counts given".into()));
    }
    if counts[0] == 0 {
        return Err(Error::Range("illumination counts must be positive".into()));
    }
    if let Some(w) = counts.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::Domain(format!(
            "illumination counts must be strictly ascending ({} then {})",
            w[0], w[1]
        )));
    }
    let last = *counts.last().expect("non-empty");
    if last > max {
        return Err(Error::Range(format!(
            "illumination count {last} exceeds {max}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid() {
        let counts = default_illumination_counts();
        assert_eq!(counts.len(), 20 + 36);
        assert_eq!(counts[..3], [1, 2, 3]);
        assert_eq!(*counts.last().unwrap(), 200);
        assert!(counts.contains(&13) && counts.contains(&50));
        assert!(validate_counts(&counts, 4096).is_ok());
    }

    #[test]
    fn count_validation() {
        assert!(validate_counts(&[], 10).is_err());
        assert!(validate_counts(&[0, 3], 10).is_err());
        assert!(validate_counts(&[5, 5], 10).is_err());
        assert!(validate_counts(&[50, 13], 4096).is_err());
        assert!(validate_counts(&[3, 11], 10).is_err());
        assert!(validate_counts(&[13, 50], 4096).is_ok());
    }

    #[test]
    fn config_validation() {
        let mut cfg = ExperimentConfig::from_mnist_dir("/data");
        assert!(cfg.validate().is_ok());
        cfg.image_size = 63;
        assert!(cfg.validate().is_err());
        cfg.image_size = 64;
        cfg.dump_dir = Some("/tmp/x".into());
        cfg.dump_count = 501;
        assert!(cfg.validate().is_err());
    }
}
