mod common;

use common::{random_problem, rng};
use fspi_core::bayes::{fit_with, GaussianParams, NaiveBayesModel};
use fspi_core::{fit, gaussian_log_pdf, ClassLabel, Execution};
use proptest::prelude::*;
use rand::Rng;

/// Neumaier-compensated sum.
fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for v in values {
        let t = sum + v;
        comp += if sum.abs() >= v.abs() {
            (sum - t) + v
        } else {
            (v - t) + sum
        };
        sum = t;
    }
    sum + comp
}

/// Two-pass mean and population variance.
fn two_pass(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = compensated_sum(values.iter().copied()) / n;
    let var = compensated_sum(values.iter().map(|v| (v - mean) * (v - mean))) / n;
    (mean, var)
}

/// Gaussian densities and the prior multiplied in probability space, then logged.
fn probability_space_scores(model: &NaiveBayesModel, x: &[f64]) -> Vec<f64> {
    (0..model.num_classes())
        .map(|m| {
            let mut p = model.log_priors()[m].exp();
            for (t, &xi) in x.iter().enumerate() {
                let g = model.params(ClassLabel(m), t);
                let z = (xi - g.mean) / g.stddev;
                p *= (-0.5 * z * z).exp() / ((2.0 * std::f64::consts::PI).sqrt() * g.stddev);
            }
            assert!(p.is_normal(), "oracle underflowed");
            p.ln()
        })
        .collect()
}

#[test]
fn fitted_parameters_match_two_pass_oracle() {
    let (x, y) = random_problem(42, 3, 10, 200);
    let model = fit(&x, &y, 3, 0.0).unwrap();
    for m in 0..3 {
        for t in 0..10 {
            let column: Vec<f64> = x
                .iter()
                .zip(&y)
                .filter(|(_, l)| l.0 == m)
                .map(|(v, _)| v[t])
                .collect();
            let (mean, var) = two_pass(&column);
            let g = model.params(ClassLabel(m), t);
            assert!(
                (g.mean - mean).abs() <= 1e-12 * mean.abs().max(1e-300),
                "mean {m},{t}"
            );
            assert!(
                (g.stddev * g.stddev - var).abs() <= 1e-12 * var,
                "var {m},{t}"
            );
        }
    }
}

#[test]
fn smoothing_widens_each_feature_by_its_own_maximum() {
    let (x, y) = random_problem(9, 2, 4, 50);
    let raw = fit(&x, &y, 2, 0.0).unwrap();
    let smoothed = fit(&x, &y, 2, 1e-3).unwrap();
    for t in 0..4 {
        let max_var = (0..2)
            .map(|m| raw.params(ClassLabel(m), t).stddev.powi(2))
            .fold(0.0, f64::max);
        for m in 0..2 {
            let expected = raw.params(ClassLabel(m), t).stddev.powi(2) + 1e-3 * max_var;
            let got = smoothed.params(ClassLabel(m), t).stddev.powi(2);
            assert!((got - expected).abs() <= 1e-12 * expected);
        }
    }
}

#[test]
fn log_pdf_matches_direct_density() {
    let mut rng = rng(8);
    let mut checked = 0;
    for _ in 0..1000 {
        let (x, mu, sigma): (f64, f64, f64) = (
            rng.gen_range(-10.0..10.0),
            rng.gen_range(-10.0..10.0),
            rng.gen_range(0.5..10.0),
        );
        let density = (-(x - mu) * (x - mu) / (2.0 * sigma * sigma)).exp()
            / ((2.0 * std::f64::consts::PI).sqrt() * sigma);
        if !density.is_normal() {
            continue;
        }
        checked += 1;
        let lib = gaussian_log_pdf(x, GaussianParams::new(mu, sigma).unwrap());
        assert!(
            (lib - density.ln()).abs() <= 1e-12 * lib.abs().max(1.0),
            "({x}, {mu}, {sigma})"
        );
    }
    assert!(checked > 900);
}

#[test]
fn log_scores_match_probability_space() {
    for seed in 0..20 {
        let mut r = rng(1000 + seed);
        let (k, n) = (r.gen_range(2..=4), r.gen_range(1..=20));
        let (x, y) = random_problem(seed, k, n, 200);
        let model = fit(&x, &y, k, 1e-9).unwrap();
        for v in x.iter().take(25) {
            let post = model.classify(v).unwrap();
            for (a, b) in post
                .log_scores
                .iter()
                .zip(probability_space_scores(&model, v))
            {
                assert!((a - b).abs() <= 1e-10, "seed {seed}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn prefix_classification_equals_refit_exactly() {
    let (x, y) = random_problem(77, 4, 20, 180);
    let full = fit(&x, &y, 4, 1e-9).unwrap();
    for t in [1, 5, 13, 20] {
        let truncated: Vec<Vec<f64>> = x.iter().map(|v| v[..t].to_vec()).collect();
        let refit = fit(&truncated, &y, 4, 1e-9).unwrap();
        for v in &x {
            assert_eq!(
                full.classify(&v[..t]).unwrap(),
                refit.classify(&v[..t]).unwrap()
            );
        }
    }
}

#[test]
fn execution_strategies_fit_identically() {
    let (x, y) = random_problem(5, 3, 30, 150);
    let a = fit_with(&x, &y, 3, 1e-9, Execution::Sequential).unwrap();
    let b = fit_with(&x, &y, 3, 1e-9, Execution::Parallel).unwrap();
    assert_eq!(a, b);
    let pa = a.predict_batch(&x, 30, Execution::Sequential).unwrap();
    let pb = a.predict_batch(&x, 30, Execution::Parallel).unwrap();
    assert_eq!(pa, pb);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn argmax_is_scale_invariant(seed in any::<u64>(), c in 0.01f64..100.0) {
        let (x, y) = random_problem(seed, 3, 8, 90);
        let scaled: Vec<Vec<f64>> = x.iter().map(|v| v.iter().map(|e| e * c).collect()).collect();
        let model = fit(&x, &y, 3, 1e-9).unwrap();
        let model_c = fit(&scaled, &y, 3, 1e-9).unwrap();
        for m in 0..3 {
            for t in 0..8 {
                let (g, gc) = (model.params(ClassLabel(m), t), model_c.params(ClassLabel(m), t));
                prop_assert!((gc.mean - c * g.mean).abs() <= 1e-9 * (c * g.mean).abs().max(1e-9 * c));
                prop_assert!((gc.stddev - c * g.stddev).abs() <= 1e-9 * c * g.stddev);
            }
        }
        for (v, vc) in x.iter().zip(&scaled).take(30) {
            let (p, pc) = (model.classify(v).unwrap(), model_c.classify(vc).unwrap());
            prop_assert_eq!(p.predicted, pc.predicted);
            for (a, b) in p.log_scores.iter().zip(&pc.log_scores) {
                prop_assert!((b - a + 8.0 * c.ln()).abs() <= 1e-8 * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn shared_feature_never_changes_the_decision(seed in any::<u64>(), mean in -5.0f64..5.0, sd in 0.1f64..5.0, extra in -20.0f64..20.0) {
        let (x, y) = random_problem(seed, 4, 6, 80);
        let base = fit(&x, &y, 4, 1e-9).unwrap();
        let shared = GaussianParams::new(mean, sd).unwrap();
        let mut params = Vec::new();
        for m in 0..4 {
            params.extend_from_slice(base.class_params(ClassLabel(m)));
            params.push(shared);
        }
        let widened = NaiveBayesModel::from_parts(base.log_priors().to_vec(), 7, params).unwrap();
        let shift = gaussian_log_pdf(extra, shared);
        for v in x.iter().take(20) {
            let mut w = v.clone();
            w.push(extra);
            let (p, q) = (base.classify(v).unwrap(), widened.classify(&w).unwrap());
            prop_assert_eq!(p.predicted, q.predicted);
            for (a, b) in p.log_scores.iter().zip(&q.log_scores) {
                prop_assert!((b - a - shift).abs() <= 1e-9 * a.abs().max(1.0));
            }
        }
    }

    #[test]
    fn classification_is_bit_reproducible(seed in any::<u64>()) {
        let (x, y) = random_problem(seed, 2, 5, 40);
        let model = fit(&x, &y, 2, 1e-9).unwrap();
        for v in &x {
            let (a, b) = (model.classify(v).unwrap(), model.classify(v).unwrap());
            prop_assert!(a.log_scores.iter().zip(&b.log_scores).all(|(p, q)| p.to_bits() == q.to_bits()));
            prop_assert_eq!(a.predicted, b.predicted);
        }
    }
}
