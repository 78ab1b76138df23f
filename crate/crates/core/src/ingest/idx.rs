//! MNIST IDX containers: big-endian `u32` magic, big-endian `u32`
//! dimensions, then one unsigned byte per element.

use crate::bayes::ClassLabel;
use crate::error::{Error, Result};

pub const IMAGES_MAGIC: u32 = 0x0000_0803;
pub const LABELS_MAGIC: u32 = 0x0000_0801;

/// Largest digit label accepted.
pub const MAX_LABEL: u8 = 9;

/// Raw image set as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawIdxSet {
    pub count: usize,
    pub rows: usize,
    pub cols: usize,
    pub pixels: Vec<u8>,
}

impl RawIdxSet {
    pub fn image_len(&self) -> usize {
        self.rows * self.cols
    }

    /// Bytes of image `i`, row-major.
    pub fn image(&self, i: usize) -> &[u8] {
        let n = self.image_len();
        &self.pixels[i * n..(i + 1) * n]
    }

    /// Re-encodes the set in IDX form.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + self.pixels.len());
        for word in [
            IMAGES_MAGIC,
            self.count as u32,
            self.rows as u32,
            self.cols as u32,
        ] {
            out.extend_from_slice(&word.to_be_bytes());
        }
        out.extend_from_slice(&self.pixels);
        out
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn u32(&mut self) -> Result<u32> {
        let end = self.pos + 4;
        let word = self.bytes.get(self.pos..end).ok_or(Error::Truncated {
            expected: end,
            actual: self.bytes.len(),
        })?;
        self.pos = end;
        Ok(u32::from_be_bytes(word.try_into().expect("4-byte slice")))
    }

    fn magic(&mut self, expected: u32) -> Result<()> {
        let magic = self.u32()?;
        if magic != expected {
            return Err(Error::Format(format!(
                "bad IDX magic {magic:#010x}, expected {expected:#010x}"
            )));
        }
        Ok(())
    }

    /// The remaining bytes, which must be exactly `len` long.
    fn payload(self, len: usize) -> Result<&'a [u8]> {
        let rest = &self.bytes[self.pos..];
        if rest.len() < len {
            return Err(Error::Truncated {
                expected: self.pos + len,
                actual: self.bytes.len(),
            });
        }
        if rest.len() > len {
            return Err(Error::Format(format!(
                "{} trailing bytes after IDX payload",
                rest.len() - len
            )));
        }
        Ok(rest)
    }
}

pub fn parse_idx_images(bytes: &[u8]) -> Result<RawIdxSet> {
    let mut r = Reader { bytes, pos: 0 };
    r.magic(IMAGES_MAGIC)?;
    let count = r.u32()? as usize;
    let rows = r.u32()? as usize;
    let cols = r.u32()? as usize;
    let len = count
        .checked_mul(rows)
        .and_then(|n| n.checked_mul(cols))
        .ok_or_else(|| Error::Format(format!("IDX dimensions {count}x{rows}x{cols} overflow")))?;
    let pixels = r.payload(len)?.to_vec();
    Ok(RawIdxSet {
        count,
        rows,
        cols,
        pixels,
    })
}

pub fn parse_idx_labels(bytes: &[u8]) -> Result<Vec<ClassLabel>> {
    let mut r = Reader { bytes, pos: 0 };
    r.magic(LABELS_MAGIC)?;
    let count = r.u32()? as usize;
    r.payload(count)?
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            if b > MAX_LABEL {
                Err(Error::Domain(format!(
                    "label {b} at index {i} is not a digit"
                )))
            } else {
                Ok(ClassLabel(usize::from(b)))
            }
        })
        .collect()
}

/// IDX label file for `labels` (each must fit in a byte).
pub fn encode_idx_labels(labels: &[ClassLabel]) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + labels.len());
    out.extend_from_slice(&LABELS_MAGIC.to_be_bytes());
    out.extend_from_slice(&(labels.len() as u32).to_be_bytes());
    out.extend(labels.iter().map(|l| l.0 as u8));
    out
}
