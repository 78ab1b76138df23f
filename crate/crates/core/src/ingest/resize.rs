use crate::error::{Error, Result};
use crate::image::Image;

/// Source sample position and blend weight along one axis, using
/// pixel-center alignment: `(i + 0.5) * src / dst - 0.5`, clamped.
fn axis_taps(src: usize, dst: usize) -> Vec<(usize, usize, f64)> {
    let scale = src as f64 / dst as f64;
    let last = (src - 1) as f64;
    (0..dst)
        .map(|i| {
            let pos = ((i as f64 + 0.5) * scale - 0.5).clamp(0.0, last);
            let lo = pos.floor() as usize;
            let hi = (lo + 1).min(src - 1);
            (lo, hi, pos - lo as f64)
        })
        .collect()
}

#[inline]
fn lerp(a: f64, b: f64, t: f64) -> f64 {
    let v = a + t * (b - a);
    v.clamp(a.min(b), a.max(b))
}

/// Bilinear resampling to `dst_w x dst_h` with pixel-center alignment.
/// Output values stay within the source range.
pub fn resize_bilinear(src: &Image, dst_w: usize, dst_h: usize) -> Result<Image> {
    if dst_w == 0 || dst_h == 0 {
        return Err(Error::Domain(format!(
            "target size {dst_w}x{dst_h} must be positive"
        )));
    }
    if dst_w == src.width() && dst_h == src.height() {
        return Ok(src.clone());
    }
    let xs = axis_taps(src.width(), dst_w);
    let ys = axis_taps(src.height(), dst_h);
    let mut pixels = Vec::with_capacity(dst_w * dst_h);
    for &(y0, y1, fy) in &ys {
        for &(x0, x1, fx) in &xs {
            let top = lerp(src.get(x0, y0), src.get(x1, y0), fx);
            let bottom = lerp(src.get(x0, y1), src.get(x1, y1), fx);
            pixels.push(lerp(top, bottom, fy));
        }
    }
    Image::new(dst_w, dst_h, pixels)
}
