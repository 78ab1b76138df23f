//! Gaussian naive Bayes over single-pixel intensity sequences.
//!
//! Every intensity is one feature with an independent per-class normal
//! likelihood. Scores are unnormalized log-posteriors
//! `ln P(class) + Σ ln N(x_t; μ, σ)`; the decision is their argmax with ties
//! going to the lowest class index.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::exec::{map_range, Execution};

/// Variance floor for features that show no spread at all.
pub const VARIANCE_FLOOR: f64 = 1e-12;

/// Default relative variance smoothing.
pub const DEFAULT_SMOOTHING: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassLabel(pub usize);

impl ClassLabel {
    pub fn index(self) -> usize {
        self.0
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianParams {
    pub mean: f64,
    pub stddev: f64,
}

impl GaussianParams {
    pub fn new(mean: f64, stddev: f64) -> Result<Self> {
        if !(stddev > 0.0 && stddev.is_finite()) || !mean.is_finite() {
            return Err(Error::Domain(format!(
                "gaussian needs finite mean and positive stddev, got ({mean}, {stddev})"
            )));
        }
        Ok(Self { mean, stddev })
    }

    pub fn log_pdf(&self, x: f64) -> f64 {
        gaussian_log_pdf(x, *self)
    }
}

/// `ln` of the normal density with the given parameters at `x`.
#[inline]
pub fn gaussian_log_pdf(x: f64, p: GaussianParams) -> f64 {
    let z = (x - p.mean) / p.stddev;
    -0.5 * TAU.ln() - p.stddev.ln() - 0.5 * z * z
}

#[derive(Clone, Debug, PartialEq)]
pub struct Posterior {
    pub log_scores: Vec<f64>,
    pub predicted: ClassLabel,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NaiveBayesModel {
    num_classes: usize,
    num_features: usize,
    log_priors: Vec<f64>,
    /// Class-major: `params[class * num_features + feature]`.
    params: Vec<GaussianParams>,
}

impl NaiveBayesModel {
    /// Assembles a model from explicit parts. `params` is class-major,
    /// `num_classes x num_features`.
    pub fn from_parts(
        log_priors: Vec<f64>,
        num_features: usize,
        params: Vec<GaussianParams>,
    ) -> Result<Self> {
        let num_classes = log_priors.len();
        if num_classes < 2 {
            return Err(Error::Domain(format!(
                "need at least 2 classes, got {num_classes}"
            )));
        }
        if num_features == 0 || params.len() != num_classes * num_features {
            return Err(Error::Shape(format!(
                "expected {num_classes}x{num_features} gaussian parameters, got {}",
                params.len()
            )));
        }
        let total: f64 = log_priors.iter().map(|lp| lp.exp()).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Domain(format!("class priors sum to {total}, not 1")));
        }
        if let Some(p) = params
            .iter()
            .find(|p| p.stddev.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater))
        {
            return Err(Error::Domain(format!("non-positive stddev in {p:?}")));
        }
        Ok(Self {
            num_classes,
            num_features,
            log_priors,
            params,
        })
    }

    pub fn num_classes(&self) -> usize {
        self.num_classes
    }

    pub fn num_features(&self) -> usize {
        self.num_features
    }

    pub fn log_priors(&self) -> &[f64] {
        &self.log_priors
    }

    pub fn params(&self, class: ClassLabel, feature: usize) -> GaussianParams {
        self.params[class.0 * self.num_features + feature]
    }

    /// Parameters of one class for all features.
    pub fn class_params(&self, class: ClassLabel) -> &[GaussianParams] {
        let start = class.0 * self.num_features;
        &self.params[start..start + self.num_features]
    }

    /// Scores `features` (a length-t prefix of a full sequence, `1 <= t <= N`)
    /// against the first t features of every class.
    pub fn classify(&self, features: &[f64]) -> Result<Posterior> {
        let t = features.len();
        if t == 0 || t > self.num_features {
            return Err(Error::Range(format!(
                "sequence length {t} outside 1..={}",
                self.num_features
            )));
        }
        let log_scores: Vec<f64> = (0..self.num_classes)
            .map(|m| {
                let params = &self.class_params(ClassLabel(m))[..t];
                features
                    .iter()
                    .zip(params)
                    .fold(self.log_priors[m], |acc, (&x, &p)| {
                        acc + gaussian_log_pdf(x, p)
                    })
            })
            .collect();
        let predicted = argmax_first(&log_scores);
        Ok(Posterior {
            log_scores,
            predicted,
        })
    }

    /// Predicted labels for the length-`t` prefix of every sequence.
    pub fn predict_batch<V>(
        &self,
        vectors: &[V],
        t: usize,
        exec: Execution,
    ) -> Result<Vec<ClassLabel>>
    where
        V: AsRef<[f64]> + Sync,
    {
        if let Some(short) = vectors.iter().find(|v| v.as_ref().len() < t) {
            return Err(Error::Range(format!(
                "prefix {t} longer than a sequence of length {}",
                short.as_ref().len()
            )));
        }
        crate::exec::try_map_slice(exec, vectors, |v| {
            self.classify(&v.as_ref()[..t]).map(|p| p.predicted)
        })
    }
}

fn argmax_first(scores: &[f64]) -> ClassLabel {
    let mut best = 0;
    for (m, &s) in scores.iter().enumerate().skip(1) {
        if s > scores[best] {
            best = m;
        }
    }
    ClassLabel(best)
}

/// Fits one normal per (class, feature) from labeled sequences.
///
/// Means and population variances come from a single Welford pass per
/// feature. Each feature's variances are then widened by
/// `smoothing x` the largest variance of that feature over all classes
/// (or [`VARIANCE_FLOOR`] when that largest variance is zero), which keeps
/// the fit of any feature prefix identical to fitting the truncated data.
pub fn fit<V>(
    vectors: &[V],
    labels: &[ClassLabel],
    num_classes: usize,
    smoothing: f64,
) -> Result<NaiveBayesModel>
where
    V: AsRef<[f64]> + Sync,
{
    fit_with(
        vectors,
        labels,
        num_classes,
        smoothing,
        Execution::default(),
    )
}

pub fn fit_with<V>(
    vectors: &[V],
    labels: &[ClassLabel],
    num_classes: usize,
    smoothing: f64,
    exec: Execution,
) -> Result<NaiveBayesModel>
where
    V: AsRef<[f64]> + Sync,
{
    if num_classes < 2 {
        return Err(Error::Domain(format!(
            "need at least 2 classes, got {num_classes}"
        )));
    }
    if !(smoothing >= 0.0 && smoothing.is_finite()) {
        return Err(Error::Domain(format!(
            "smoothing must be finite and >= 0, got {smoothing}"
        )));
    }
    if vectors.is_empty() {
        return Err(Error::InsufficientData("no training vectors".into()));
    }
    if labels.len() != vectors.len() {
        return Err(Error::Shape(format!(
            "{} vectors but {} labels",
            vectors.len(),
            labels.len()
        )));
    }
    let num_features = vectors[0].as_ref().len();
    if num_features == 0 {
        return Err(Error::Shape("training vectors are empty".into()));
    }
    if let Some((i, v)) = vectors
        .iter()
        .enumerate()
        .find(|(_, v)| v.as_ref().len() != num_features)
    {
        return Err(Error::Shape(format!(
            "vector {i} has {} features, expected {num_features}",
            v.as_ref().len()
        )));
    }

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); num_classes];
    for (i, label) in labels.iter().enumerate() {
        if label.0 >= num_classes {
            return Err(Error::Domain(format!(
                "label {} outside 0..{num_classes}",
                label.0
            )));
        }
        members[label.0].push(i);
    }
    if let Some(m) = members.iter().position(|idx| idx.len() < 2) {
        return Err(Error::InsufficientData(format!(
            "class {m} has {} training samples, need at least 2",
            members[m].len()
        )));
    }

    // Column-wise so every feature is independent and the result does not
    // depend on how work is split.
    let per_feature: Vec<Vec<GaussianParams>> = map_range(exec, num_features, |t| {
        let stats: Vec<(f64, f64)> = members
            .iter()
            .map(|idx| welford(idx.iter().map(|&i| vectors[i].as_ref()[t])))
            .collect();
        let max_var = stats.iter().map(|&(_, v)| v).fold(0.0, f64::max);
        let widen = if max_var > 0.0 {
            smoothing * max_var
        } else {
            VARIANCE_FLOOR
        };
        stats
            .into_iter()
            .map(|(mean, var)| {
                let var = var + widen;
                let var = if var > 0.0 { var } else { VARIANCE_FLOOR };
                GaussianParams {
                    mean,
                    stddev: var.sqrt(),
                }
            })
            .collect()
    });

    let mut params = Vec::with_capacity(num_classes * num_features);
    for m in 0..num_classes {
        params.extend(per_feature.iter().map(|col| col[m]));
    }
    let total = vectors.len() as f64;
    let log_priors = members
        .iter()
        .map(|idx| (idx.len() as f64 / total).ln())
        .collect();

    Ok(NaiveBayesModel {
        num_classes,
        num_features,
        log_priors,
        params,
    })
}

/// Mean and population variance in one pass.
fn welford(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (mut n, mut mean, mut m2) = (0.0f64, 0.0f64, 0.0f64);
    for x in values {
        n += 1.0;
        let delta = x - mean;
        mean += delta / n;
        m2 += delta * (x - mean);
    }
    (mean, if n > 0.0 { m2 / n } else { 0.0 })
}
