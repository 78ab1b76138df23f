//! Turning MNIST IDX files into normalized, resized labeled objects.

mod idx;
mod resize;

pub use idx::{
    encode_idx_labels, parse_idx_images, parse_idx_labels, RawIdxSet, IMAGES_MAGIC, LABELS_MAGIC,
};
pub use resize::resize_bilinear;

use crate::bayes::ClassLabel;
use crate::error::{Error, Result};
use crate::exec::{try_map_slice, Execution};
use crate::image::Image;

/// Number of digit classes.
pub const NUM_DIGITS: usize = 10;

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledImage {
    pub image: Image,
    pub label: ClassLabel,
}

/// The first `take` records of an IDX image/label pair, scaled to `[0, 1]`
/// by `/255` and resized to `target x target`.
pub fn prepare_dataset(
    image_bytes: &[u8],
    label_bytes: &[u8],
    take: usize,
    target: usize,
) -> Result<Vec<LabeledImage>> {
    prepare_dataset_with(image_bytes, label_bytes, take, target, Execution::default())
}

pub fn prepare_dataset_with(
    image_bytes: &[u8],
    label_bytes: &[u8],
    take: usize,
    target: usize,
    exec: Execution,
) -> Result<Vec<LabeledImage>> {
    let images = parse_idx_images(image_bytes)?;
    let labels = parse_idx_labels(label_bytes)?;
    if images.count != labels.len() {
        return Err(Error::Shape(format!(
            "{} images but {} labels",
            images.count,
            labels.len()
        )));
    }
    if take == 0 || take > images.count {
        return Err(Error::Range(format!(
            "cannot take {take} records from a set of {}",
            images.count
        )));
    }
    if target == 0 {
        return Err(Error::Domain("target size must be positive".into()));
    }
    let indices: Vec<usize> = (0..take).collect();
    try_map_slice(exec, &indices, |&i| {
        let pixels = images
            .image(i)
            .iter()
            .map(|&b| f64::from(b) / 255.0)
            .collect();
        let raw = Image::new(images.cols, images.rows, pixels)?;
        Ok(LabeledImage {
            image: resize_bilinear(&raw, target, target)?,
            label: labels[i],
        })
    })
}
