//! 8-bit binary PGM (P5) output with per-image min-max scaling.

use std::path::Path;

use crate::error::{Error, Result};
use crate::image::Image;

/// Maps the image's value range onto 0..=255 (constant images become 0).
pub fn to_gray8(image: &Image) -> Vec<u8> {
    let (lo, hi) = image.min_max();
    let span = hi - lo;
    image
        .pixels()
        .iter()
        .map(|&p| {
            if span > 0.0 {
                ((p - lo) / span * 255.0).round().clamp(0.0, 255.0) as u8
            } else {
                0
            }
        })
        .collect()
}

pub fn encode_pgm(image: &Image) -> Vec<u8> {
    let header = format!("P5\n{} {}\n255\n", image.width(), image.height());
    let mut out = Vec::with_capacity(header.len() + image.width() * image.height());
    out.extend_from_slice(header.as_bytes());
    out.extend(to_gray8(image));
    out
}

pub fn write_pgm(image: &Image, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path.as_ref(), encode_pgm(image)).map_err(|e| Error::io(path, e))
}

/// Reads back a P5 file with maxval 255 as written by [`encode_pgm`];
/// returns `(width, height, pixels)`.
pub fn decode_pgm(bytes: &[u8]) -> Result<(usize, usize, Vec<u8>)> {
    let mut fields = Vec::with_capacity(4);
    let mut pos = 0;
    while fields.len() < 4 {
        while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        let start = pos;
        while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
            pos += 1;
        }
        if start == pos {
            return Err(Error::Format("truncated PGM header".into()));
        }
        fields.push(
            std::str::from_utf8(&bytes[start..pos])
                .map_err(|_| Error::Format("non-ASCII PGM header".into()))?,
        );
    }
    if fields[0] != "P5" || fields[3] != "255" {
        return Err(Error::Format(format!("unsupported PGM header {fields:?}")));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Format(format!("bad PGM size {s:?}")))
    };
    let (w, h) = (parse(fields[1])?, parse(fields[2])?);
    let data = &bytes[pos + 1..];
    if data.len() != w * h {
        return Err(Error::Truncated {
            expected: w * h,
            actual: data.len(),
        });
    }
    Ok((w, h, data.to_vec()))
}
