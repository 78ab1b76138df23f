use std::path::Path;
use std::time::Instant;

use super::config::ExperimentConfig;
use super::dump::{write_dump, DumpEntry};
use super::report::{CurvePoint, ExperimentReport};
use crate::bayes::{fit_with, ClassLabel, NaiveBayesModel};
use crate::error::{Error, Result};
use crate::fourier::{build_schedule, MeasurementVector, Measurer, SamplingSchedule};
use crate::ingest::{prepare_dataset_with, LabeledImage, NUM_DIGITS};

fn read(path: &Path) -> Result<Vec<u8>> {
    std::fs::read(path).map_err(|e| Error::io(path, e))
}

/// Train and test sets measured once at the longest schedule needed, with
/// the classifier fitted on the full-length training sequences.
///
/// Per-feature Gaussians are independent, so classifying a length-t prefix
/// against this model is the same as refitting on t features.
pub struct PreparedExperiment {
    config: ExperimentConfig,
    schedule: SamplingSchedule,
    train_labels: Vec<ClassLabel>,
    train_vectors: Vec<MeasurementVector>,
    test: Vec<LabeledImage>,
    test_vectors: Vec<MeasurementVector>,
    model: NaiveBayesModel,
}

impl PreparedExperiment {
    pub fn load(config: &ExperimentConfig) -> Result<Self> {
        config.validate()?;
        let train = prepare_dataset_with(
            &read(&config.train_images)?,
            &read(&config.train_labels)?,
            config.train_count,
            config.image_size,
            config.execution,
        )?;
        let test = prepare_dataset_with(
            &read(&config.test_images)?,
            &read(&config.test_labels)?,
            config.test_count,
            config.image_size,
            config.execution,
        )?;
        Self::from_datasets(config, train, test)
    }

    /// Measures and fits already-prepared datasets.
    pub fn from_datasets(
        config: &ExperimentConfig,
        train: Vec<LabeledImage>,
        test: Vec<LabeledImage>,
    ) -> Result<Self> {
        config.validate()?;
        let mut length = *config
            .illumination_counts
            .last()
            .expect("validated non-empty");
        if config.dump_dir.is_some() {
            length = length.max(config.dump_illuminations);
        }
        let schedule = build_schedule(config.image_size, config.image_size, length)?;
        let measurer = Measurer::new(schedule.clone());

        let train_images: Vec<_> = train.iter().map(|l| l.image.clone()).collect();
        let train_labels: Vec<_> = train.iter().map(|l| l.label).collect();
        drop(train);
        let train_vectors = measurer.measure_batch(&train_images, config.execution)?;
        drop(train_images);

        let test_images: Vec<_> = test.iter().map(|l| l.image.clone()).collect();
        let test_vectors = measurer.measure_batch(&test_images, config.execution)?;

        let model = fit_with(
            &train_vectors,
            &train_labels,
            NUM_DIGITS,
            config.smoothing,
            config.execution,
        )?;
        Ok(Self {
            config: config.clone(),
            schedule,
            train_labels,
            train_vectors,
            test,
            test_vectors,
            model,
        })
    }

    pub fn config(&self) -> &ExperimentConfig {
        &self.config
    }

    pub fn schedule(&self) -> &SamplingSchedule {
        &self.schedule
    }

    pub fn model(&self) -> &NaiveBayesModel {
        &self.model
    }

    pub fn train_vectors(&self) -> &[MeasurementVector] {
        &self.train_vectors
    }

    pub fn train_labels(&self) -> &[ClassLabel] {
        &self.train_labels
    }

    pub fn test_set(&self) -> &[LabeledImage] {
        &self.test
    }

    pub fn test_vectors(&self) -> &[MeasurementVector] {
        &self.test_vectors
    }

    /// Predicted label of every test object from its first `t` intensities.
    pub fn predict_test(&self, t: usize) -> Result<Vec<ClassLabel>> {
        self.model
            .predict_batch(&self.test_vectors, t, self.config.execution)
    }

    /// Top-1 test accuracy using the first `t` intensities.
    pub fn accuracy(&self, t: usize) -> Result<f64> {
        let predicted = self.predict_test(t)?;
        let correct = predicted
            .iter()
            .zip(&self.test)
            .filter(|(p, item)| **p == item.label)
            .count();
        Ok(correct as f64 / self.test.len() as f64)
    }

    /// Accuracy at every configured illumination count.
    pub fn curve(&self) -> Result<Vec<CurvePoint>> {
        let pixels = (self.config.image_size * self.config.image_size) as f64;
        self.config
            .illumination_counts
            .iter()
            .map(|&t| {
                Ok(CurvePoint {
                    illuminations: t,
                    sampling_ratio: t as f64 / pixels,
                    accuracy: self.accuracy(t)?,
                })
            })
            .collect()
    }

    /// Writes originals and `t`-illumination reconstructions of the first
    /// `n` test objects to `dir`, plus `manifest.tsv`.
    pub fn dump(&self, dir: &Path, t: usize, n: usize) -> Result<Vec<DumpEntry>> {
        if n == 0 || n > self.test.len() {
            return Err(Error::Range(format!(
                "dump count {n} outside 1..={}",
                self.test.len()
            )));
        }
        if t == 0 || t > self.schedule.len() {
            return Err(Error::Range(format!(
                "dump illuminations {t} outside 1..={}",
                self.schedule.len()
            )));
        }
        let predicted =
            self.model
                .predict_batch(&self.test_vectors[..n], t, self.config.execution)?;
        write_dump(
            dir,
            &self.schedule.prefix(t)?,
            &self.test[..n],
            &self.test_vectors[..n],
            &predicted,
        )
    }
}

/// Measures, fits once and sweeps the configured illumination counts.
pub fn run_curve_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let start = Instant::now();
    let prepared = PreparedExperiment::load(config)?;
    let points = prepared.curve()?;
    Ok(ExperimentReport {
        image_size: config.image_size,
        points,
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

/// Writes Fig. 5 style dumps for the first `n_images` test objects into
/// `config.dump_dir`.
pub fn dump_reconstructions(
    config: &ExperimentConfig,
    count_t: usize,
    n_images: usize,
) -> Result<Vec<DumpEntry>> {
    let dir = config
        .dump_dir
        .clone()
        .ok_or_else(|| Error::Precondition("no dump directory configured".into()))?;
    let mut config = config.clone();
    config.dump_illuminations = count_t;
    config.dump_count = n_images;
    PreparedExperiment::load(&config)?.dump(&dir, count_t, n_images)
}
