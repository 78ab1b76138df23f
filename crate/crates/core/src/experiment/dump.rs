use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::pgm::write_pgm;
use crate::bayes::ClassLabel;
use crate::error::{Error, Result};
use crate::fourier::{reconstruct, MeasurementVector, SamplingSchedule};
use crate::ingest::LabeledImage;

pub const MANIFEST_NAME: &str = "manifest.tsv";
pub const MANIFEST_HEADER: &str = "index\toriginal\treconstruction\ttrue_label\tpredicted_label";

#[derive(Clone, Debug, PartialEq)]
pub struct DumpEntry {
    pub index: usize,
    pub original: PathBuf,
    pub reconstruction: PathBuf,
    pub true_label: ClassLabel,
    pub predicted: ClassLabel,
}

impl DumpEntry {
    pub fn is_correct(&self) -> bool {
        self.true_label == self.predicted
    }
}

/// Writes one original/reconstruction PGM pair per object and the
/// tab-separated manifest. `schedule` must already be truncated to the
/// illumination count being shown.
pub(crate) fn write_dump(
    dir: &Path,
    schedule: &SamplingSchedule,
    objects: &[LabeledImage],
    vectors: &[MeasurementVector],
    predicted: &[ClassLabel],
) -> Result<Vec<DumpEntry>> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let t = schedule.len();
    let mut manifest = String::from(MANIFEST_HEADER);
    manifest.push('\n');
    let mut entries = Vec::with_capacity(objects.len());
    for (i, ((item, vector), &pred)) in objects.iter().zip(vectors).zip(predicted).enumerate() {
        let truncated =
            MeasurementVector::new(vector.width(), vector.height(), vector.prefix(t).to_vec());
        let recon = reconstruct(&truncated, schedule)?;
        let original_name = format!("test_{i:03}_original.pgm");
        let recon_name = format!("test_{i:03}_recon_t{t}.pgm");
        write_pgm(&item.image, dir.join(&original_name))?;
        write_pgm(&recon, dir.join(&recon_name))?;
        writeln!(
            manifest,
            "{i}\t{original_name}\t{recon_name}\t{}\t{pred}",
            item.label
        )
        .expect("write to String");
        entries.push(DumpEntry {
            index: i,
            original: dir.join(original_name),
            reconstruction: dir.join(recon_name),
            true_label: item.label,
            predicted: pred,
        });
    }
    let manifest_path = dir.join(MANIFEST_NAME);
    std::fs::write(&manifest_path, manifest).map_err(|e| Error::io(&manifest_path, e))?;
    Ok(entries)
}
