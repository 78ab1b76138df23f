//! Unnormalized 2D DFT of row-major real images, built from rustfft 1D
//! plans (rows, then columns via transposition).

use std::sync::Arc;

use rustfft::num_complex::Complex;
use rustfft::{Fft, FftPlanner};

pub(crate) type Spectrum = Vec<Complex<f64>>;

#[derive(Clone)]
pub(crate) struct Transform2d {
    width: usize,
    height: usize,
    row_fwd: Arc<dyn Fft<f64>>,
    col_fwd: Arc<dyn Fft<f64>>,
    row_inv: Arc<dyn Fft<f64>>,
    col_inv: Arc<dyn Fft<f64>>,
}

impl Transform2d {
    pub(crate) fn new(width: usize, height: usize) -> Self {
        let mut planner = FftPlanner::new();
        Self {
            width,
            height,
            row_fwd: planner.plan_fft_forward(width),
            col_fwd: planner.plan_fft_forward(height),
            row_inv: planner.plan_fft_inverse(width),
            col_inv: planner.plan_fft_inverse(height),
        }
    }

    /// Forward transform; bin `(u, v)` lands at index `v * width + u`.
    pub(crate) fn forward(&self, pixels: &[f64]) -> Spectrum {
        let mut buf: Spectrum = pixels.iter().map(|&p| Complex::new(p, 0.0)).collect();
        self.run(&mut buf, &self.row_fwd, &self.col_fwd);
        buf
    }

    /// Unnormalized inverse transform, in place.
    pub(crate) fn inverse(&self, spectrum: &mut Spectrum) {
        self.run(spectrum, &self.row_inv, &self.col_inv);
    }

    fn run(&self, buf: &mut [Complex<f64>], rows: &Arc<dyn Fft<f64>>, cols: &Arc<dyn Fft<f64>>) {
        let (w, h) = (self.width, self.height);
        debug_assert_eq!(buf.len(), w * h);
        let scratch_len = rows
            .get_inplace_scratch_len()
            .max(cols.get_inplace_scratch_len());
        let mut scratch = vec![Complex::new(0.0, 0.0); scratch_len];

        rows.process_with_scratch(buf, &mut scratch[..rows.get_inplace_scratch_len()]);

        let mut transposed = vec![Complex::new(0.0, 0.0); w * h];
        for y in 0..h {
            for x in 0..w {
                transposed[x * h + y] = buf[y * w + x];
            }
        }
        cols.process_with_scratch(
            &mut transposed,
            &mut scratch[..cols.get_inplace_scratch_len()],
        );
        for x in 0..w {
            for y in 0..h {
                buf[y * w + x] = transposed[x * h + y];
            }
        }
    }
}
