mod common;

use common::write_synthetic_mnist;
use fspi_core::bayes::fit;
use fspi_core::experiment::{
    decode_pgm, dump_reconstructions, format_curve_csv, parse_curve_csv, run_curve_experiment,
    to_gray8, write_curve_csv, ExperimentConfig, PreparedExperiment, MANIFEST_HEADER,
    MANIFEST_NAME,
};
use fspi_core::{Error, Execution};

fn synthetic_config(dir: &std::path::Path) -> ExperimentConfig {
    let data = write_synthetic_mnist(dir, 300, 60, 17);
    let mut config = ExperimentConfig::from_mnist_dir(data);
    config.train_count = 300;
    config.test_count = 60;
    config.image_size = 32;
    config.illumination_counts = vec![1, 5, 13, 50];
    config
}

#[test]
fn curve_runs_end_to_end_on_synthetic_digits() {
    let dir = tempfile::tempdir().unwrap();
    let config = synthetic_config(dir.path());
    let report = run_curve_experiment(&config).unwrap();
    assert_eq!(report.points.len(), 4);
    for p in &report.points {
        assert!((0.0..=1.0).contains(&p.accuracy));
        assert_eq!(p.sampling_ratio, p.illuminations as f64 / 1024.0);
    }
    // Bars at different positions separate easily once a few frequencies are in.
    assert!(report.accuracy_at(50).unwrap() > 0.9);
    let back = parse_curve_csv(&format_curve_csv(&report).unwrap()).unwrap();
    assert_eq!(
        back.iter().map(|p| p.illuminations).collect::<Vec<_>>(),
        vec![1, 5, 13, 50]
    );
}

#[test]
fn repeated_runs_write_identical_csv() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = synthetic_config(dir.path());
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    write_curve_csv(&run_curve_experiment(&config).unwrap(), &a).unwrap();
    config.execution = Execution::Sequential;
    write_curve_csv(&run_curve_experiment(&config).unwrap(), &b).unwrap();
    assert_eq!(std::fs::read(a).unwrap(), std::fs::read(b).unwrap());
}

#[test]
fn prefix_accuracy_equals_refit_accuracy() {
    let dir = tempfile::tempdir().unwrap();
    let config = synthetic_config(dir.path());
    let prepared = PreparedExperiment::load(&config).unwrap();
    for t in [1, 13, 50] {
        let truncated: Vec<Vec<f64>> = prepared
            .train_vectors()
            .iter()
            .map(|v| v.prefix(t).to_vec())
            .collect();
        let refit = fit(&truncated, prepared.train_labels(), 10, config.smoothing).unwrap();
        let correct = prepared
            .test_vectors()
            .iter()
            .zip(prepared.test_set())
            .filter(|(v, item)| refit.classify(v.prefix(t)).unwrap().predicted == item.label)
            .count();
        assert_eq!(
            prepared.accuracy(t).unwrap(),
            correct as f64 / prepared.test_set().len() as f64
        );
    }
}

#[test]
fn dump_writes_pairs_and_manifest() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = synthetic_config(dir.path());
    let out = dir.path().join("dump");
    config.dump_dir = Some(out.clone());
    let entries = dump_reconstructions(&config, 13, 15).unwrap();
    assert_eq!(entries.len(), 15);
    let pgms = std::fs::read_dir(&out)
        .unwrap()
        .filter(|e| {
            e.as_ref()
                .unwrap()
                .path()
                .extension()
                .is_some_and(|x| x == "pgm")
        })
        .count();
    assert_eq!(pgms, 30);
    let manifest = std::fs::read_to_string(out.join(MANIFEST_NAME)).unwrap();
    let mut lines = manifest.lines();
    assert_eq!(lines.next(), Some(MANIFEST_HEADER));
    let first: Vec<&str> = lines.next().unwrap().split('\t').collect();
    assert_eq!(first[1], "test_000_original.pgm");
    assert_eq!(first[2], "test_000_recon_t13.pgm");
    assert_eq!(first[3], entries[0].true_label.to_string());
    let (w, h, _) = decode_pgm(&std::fs::read(&entries[0].reconstruction).unwrap()).unwrap();
    assert_eq!((w, h), (32, 32));
}

#[test]
fn full_sampling_dump_reproduces_originals() {
    let dir = tempfile::tempdir().unwrap();
    let mut config = synthetic_config(dir.path());
    config.illumination_counts = vec![1024];
    let prepared = PreparedExperiment::load(&config).unwrap();
    let entries = prepared.dump(&dir.path().join("full"), 1024, 3).unwrap();
    for (entry, item) in entries.iter().zip(prepared.test_set()) {
        let (_, _, recon) = decode_pgm(&std::fs::read(&entry.reconstruction).unwrap()).unwrap();
        let (_, _, orig) = decode_pgm(&std::fs::read(&entry.original).unwrap()).unwrap();
        assert_eq!(orig, to_gray8(&item.image));
        assert!(recon.iter().zip(&orig).all(|(a, b)| a.abs_diff(*b) <= 1));
    }
}

#[test]
fn missing_files_and_empty_classes_are_errors() {
    let dir = tempfile::tempdir().unwrap();
    let missing = ExperimentConfig::from_mnist_dir(dir.path().join("nope"));
    assert!(matches!(
        run_curve_experiment(&missing),
        Err(Error::Io { .. })
    ));

    let mut config = synthetic_config(dir.path());
    config.train_count = 5;
    assert!(matches!(
        run_curve_experiment(&config),
        Err(Error::InsufficientData(_))
    ));
}
