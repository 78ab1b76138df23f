/// One point of the accuracy-versus-illuminations curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub illuminations: usize,
    pub sampling_ratio: f64,
    pub accuracy: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentReport {
    pub image_size: usize,
    pub points: Vec<CurvePoint>,
    pub elapsed_secs: f64,
}

impl ExperimentReport {
    pub fn accuracy_at(&self, illuminations: usize) -> Option<f64> {
        self.points
            .iter()
            .find(|p| p.illuminations == illuminations)
            .map(|p| p.accuracy)
    }
}
