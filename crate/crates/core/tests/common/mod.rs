#![allow(dead_code)]

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use fspi_core::ingest::{encode_idx_labels, RawIdxSet};
use fspi_core::{ClassLabel, Image};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_image(rng: &mut impl Rng, w: usize, h: usize) -> Image {
    Image::new(w, h, (0..w * h).map(|_| rng.gen::<f64>()).collect()).unwrap()
}

/// Textbook double-sum DFT, written independently of the library: the
/// angle is formed directly in floating point.
pub fn naive_dft(img: &Image, fu: i32, fv: i32) -> (f64, f64) {
    let (w, h) = (img.width() as f64, img.height() as f64);
    let mut re = 0.0;
    let mut im = 0.0;
    for y in 0..img.height() {
        for x in 0..img.width() {
            let angle = 2.0 * PI * (fu as f64 * x as f64 / w + fv as f64 * y as f64 / h);
            re += img.get(x, y) * angle.cos();
            im += -img.get(x, y) * angle.sin();
        }
    }
    (re, im)
}

/// `|a - b| <= tol * max(|b|, 1)`.
pub fn close_rel(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * b.abs().max(1.0)
}

/// Ten visually distinct 28x28 "digit" classes: a bright bar whose position
/// and orientation depend on the class, plus per-sample jitter and noise.
pub fn synthetic_digit(rng: &mut impl Rng, class: usize) -> Vec<u8> {
    let mut px = vec![0u8; 28 * 28];
    let shift: i32 = rng.gen_range(-1..=1);
    let offset = 4 + 2 * class as i32 + shift;
    for i in 4..24 {
        let (x, y) = if class.is_multiple_of(2) {
            (offset, i)
        } else {
            (i, offset)
        };
        for d in 0..3 {
            let (xx, yy) = if class.is_multiple_of(2) {
                (x + d, y)
            } else {
                (x, y + d)
            };
            if (0..28).contains(&xx) && (0..28).contains(&yy) {
                px[(yy * 28 + xx) as usize] = 200 + rng.gen_range(0..56);
            }
        }
    }
    for p in px.iter_mut() {
        if *p == 0 && rng.gen_bool(0.02) {
            *p = rng.gen_range(0..80);
        }
    }
    px
}

/// Writes a synthetic MNIST-like train/test pair into `dir` and returns the
/// directory.
pub fn write_synthetic_mnist(dir: &Path, train: usize, test: usize, seed: u64) -> PathBuf {
    let mut rng = rng(seed);
    for (stem, count) in [("train", train), ("t10k", test)] {
        let labels: Vec<ClassLabel> = (0..count)
            .map(|i| ClassLabel((i * 7 + i / 10) % 10))
            .collect();
        let mut pixels = Vec::with_capacity(count * 784);
        for l in &labels {
            pixels.extend(synthetic_digit(&mut rng, l.0));
        }
        let set = RawIdxSet {
            count,
            rows: 28,
            cols: 28,
            pixels,
        };
        std::fs::write(
            dir.join(format!("{stem}-images-idx3-ubyte")),
            set.to_bytes(),
        )
        .unwrap();
        std::fs::write(
            dir.join(format!("{stem}-labels-idx1-ubyte")),
            encode_idx_labels(&labels),
        )
        .unwrap();
    }
    dir.to_path_buf()
}

/// MNIST location: `FSPI_MNIST_DIR`, else `<workspace>/data/mnist`.
pub fn mnist_dir() -> Option<PathBuf> {
    let dir = std::env::var_os("FSPI_MNIST_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/mnist"));
    dir.join("train-images-idx3-ubyte").is_file().then_some(dir)
}

/// Random labeled problem with overlapping classes. Every class gets at
/// least two samples.
pub fn random_problem(
    seed: u64,
    k: usize,
    n: usize,
    samples: usize,
) -> (Vec<Vec<f64>>, Vec<ClassLabel>) {
    let mut rng = rng(seed);
    let centers: Vec<Vec<f64>> = (0..k)
        .map(|_| (0..n).map(|_| rng.gen_range(-2.0..2.0)).collect())
        .collect();
    let spreads: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..3.0)).collect();
    let mut labels: Vec<ClassLabel> = (0..samples).map(|i| ClassLabel(i % k)).collect();
    for l in labels.iter_mut().skip(2 * k) {
        *l = ClassLabel(rng.gen_range(0..k));
    }
    let vectors = labels
        .iter()
        .map(|l| {
            (0..n)
                .map(|t| {
                    Normal::new(centers[l.0][t], spreads[t])
                        .unwrap()
                        .sample(&mut rng)
                })
                .collect()
        })
        .collect();
    (vectors, labels)
}
