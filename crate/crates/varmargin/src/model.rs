//! Core domain types: datasets, hyperplanes, directional class statistics,
//! and per-class margins.
//!
//! Everything here is an immutable value type or a pure function, safe to
//! share across threads. The two solver families build on these primitives.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Binary class label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassLabel {
    /// The −1 class.
    Minus,
    /// The +1 class.
    Plus,
}

impl ClassLabel {
    pub const BOTH: [ClassLabel; 2] = [ClassLabel::Minus, ClassLabel::Plus];

    pub fn as_f64(self) -> f64 {
        match self {
            ClassLabel::Minus => -1.0,
            ClassLabel::Plus => 1.0,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            ClassLabel::Minus => -1,
            ClassLabel::Plus => 1,
        }
    }

    /// Parse a numeric label; only exactly −1 and +1 are accepted.
    pub fn try_from_f64(v: f64) -> Option<ClassLabel> {
        if v == -1.0 {
            Some(ClassLabel::Minus)
        } else if v == 1.0 {
            Some(ClassLabel::Plus)
        } else {
            None
        }
    }

    pub fn flipped(self) -> ClassLabel {
        match self {
            ClassLabel::Minus => ClassLabel::Plus,
            ClassLabel::Plus => ClassLabel::Minus,
        }
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

/// N labeled observations in p dimensions, stored row-major.
///
/// Coordinates must be finite and every label exactly −1 or +1. Both classes
/// are only required by training operations, which check for themselves.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    coords: Vec<f64>,
    dim: usize,
    labels: Vec<ClassLabel>,
    coord_range: f64,
}

impl Dataset {
    /// Build a dataset from row vectors and labels.
    pub fn from_rows(rows: Vec<Vec<f64>>, labels: Vec<ClassLabel>) -> Result<Dataset> {
        if rows.is_empty() {
            return Err(Error::InvalidData("dataset has no rows".into()));
        }
        if rows.len() != labels.len() {
            return Err(Error::LengthMismatch {
                expected: rows.len(),
                got: labels.len(),
            });
        }
        let dim = rows[0].len();
        if dim == 0 {
            return Err(Error::InvalidData("points have zero dimensions".into()));
        }
        let mut coords = Vec::with_capacity(rows.len() * dim);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::InvalidData(format!(
                    "row {i} has {} coordinates, expected {dim}",
                    row.len()
                )));
            }
            for &v in row {
                if !v.is_finite() {
                    return Err(Error::InvalidData(format!(
                        "row {i} contains a non-finite coordinate"
                    )));
                }
                coords.push(v);
            }
        }
        let coord_range = max_coord_range(&coords, dim);
        Ok(Dataset {
            coords,
            dim,
            labels,
            coord_range,
        })
    }

    /// Convenience constructor for 1-dimensional data.
    pub fn one_dim(points: &[(f64, ClassLabel)]) -> Result<Dataset> {
        let rows = points.iter().map(|&(x, _)| vec![x]).collect();
        let labels = points.iter().map(|&(_, l)| l).collect();
        Dataset::from_rows(rows, labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Feature dimension p.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn label(&self, i: usize) -> ClassLabel {
        self.labels[i]
    }

    pub fn labels(&self) -> &[ClassLabel] {
        &self.labels
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[f64], ClassLabel)> + '_ {
        self.coords.chunks_exact(self.dim).zip(self.labels.iter().copied())
    }

    /// Indices of the members of one class.
    pub fn class_indices(&self, label: ClassLabel) -> impl Iterator<Item = usize> + '_ {
        self.labels
            .iter()
            .enumerate()
            .filter(move |(_, &l)| l == label)
            .map(|(i, _)| i)
    }

    pub fn class_count(&self, label: ClassLabel) -> usize {
        self.class_indices(label).count()
    }

    /// Error unless both classes are present (training precondition).
    pub fn require_both_classes(&self) -> Result<()> {
        for label in ClassLabel::BOTH {
            if self.class_count(label) == 0 {
                return Err(Error::MissingClass {
                    label: label.as_i8(),
                });
            }
        }
        Ok(())
    }

    /// Largest per-coordinate range in the data; used to scale the sigma floor.
    pub fn coord_range(&self) -> f64 {
        self.coord_range
    }

    /// A copy with every label flipped.
    pub fn with_flipped_labels(&self) -> Dataset {
        Dataset {
            coords: self.coords.clone(),
            dim: self.dim,
            labels: self.labels.iter().map(|l| l.flipped()).collect(),
            coord_range: self.coord_range,
        }
    }
}

fn max_coord_range(coords: &[f64], dim: usize) -> f64 {
    let mut range = 0.0f64;
    for d in 0..dim {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for row in coords.chunks_exact(dim) {
            lo = lo.min(row[d]);
            hi = hi.max(row[d]);
        }
        range = range.max(hi - lo);
    }
    range
}

/// Separating hyperplane `{x : x·beta + beta0 = 0}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyperplane {
    /// Normal direction.
    pub beta: Vec<f64>,
    /// Offset.
    pub beta0: f64,
}

impl Hyperplane {
    pub fn new(beta: Vec<f64>, beta0: f64) -> Hyperplane {
        Hyperplane { beta, beta0 }
    }

    pub fn dim(&self) -> usize {
        self.beta.len()
    }

    pub fn norm(&self) -> f64 {
        norm(&self.beta)
    }

    /// Error if the normal vector is zero or non-finite.
    pub fn validate(&self) -> Result<()> {
        if self.beta.iter().any(|v| !v.is_finite()) || !self.beta0.is_finite() {
            return Err(Error::InvalidHyperplane);
        }
        if self.norm() == 0.0 {
            return Err(Error::InvalidHyperplane);
        }
        Ok(())
    }

    /// Same hyperplane rescaled so that `‖beta‖ = 1`.
    pub fn normalized(&self) -> Result<Hyperplane> {
        self.validate()?;
        let n = self.norm();
        Ok(Hyperplane {
            beta: self.beta.iter().map(|v| v / n).collect(),
            beta0: self.beta0 / n,
        })
    }

    /// Signed position of the boundary along the unit normal: `−beta0/‖beta‖`.
    ///
    /// In one dimension with `beta > 0` this is the decision threshold.
    pub fn boundary_offset(&self) -> Result<f64> {
        self.validate()?;
        Ok(-self.beta0 / self.norm())
    }

    /// Cosine of the angle between this normal and another's.
    pub fn direction_cosine(&self, other: &Hyperplane) -> f64 {
        dot(&self.beta, &other.beta) / (self.norm() * other.norm())
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

/// Evaluate `x·beta + beta0`.
pub fn decision_value(h: &Hyperplane, x: &[f64]) -> Result<f64> {
    h.validate()?;
    if x.len() != h.beta.len() {
        return Err(Error::LengthMismatch {
            expected: h.beta.len(),
            got: x.len(),
        });
    }
    Ok(dot(&h.beta, x) + h.beta0)
}

/// Classification rule: the sign of the decision value.
///
/// A decision value of exactly zero classifies as +1.
pub fn classify(h: &Hyperplane, x: &[f64]) -> Result<ClassLabel> {
    let v = decision_value(h, x)?;
    Ok(if v >= 0.0 {
        ClassLabel::Plus
    } else {
        ClassLabel::Minus
    })
}

/// How the directional standard deviation is normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SigmaMode {
    /// Population standard deviation: divide the sum of squared projections
    /// by the class count. Size-independent; the default.
    #[default]
    Normalized,
    /// Plain root of the unnormalized sum of squared projections, kept for
    /// fidelity experiments. Grows with class size.
    #[serde(rename = "paper-literal")]
    Unnormalized,
}

/// Per-class count, mean, and directional standard deviation along `beta`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassStats {
    pub label: ClassLabel,
    pub count: usize,
    pub mean: Vec<f64>,
    /// Raw (unfloored) standard deviation of the class projections.
    pub sigma: f64,
}

/// Mean vector of one class.
pub fn class_mean(data: &Dataset, label: ClassLabel) -> Result<Vec<f64>> {
    let mut mean = vec![0.0; data.dim()];
    let mut count = 0usize;
    for i in data.class_indices(label) {
        for (m, v) in mean.iter_mut().zip(data.point(i)) {
            *m += v;
        }
        count += 1;
    }
    if count == 0 {
        return Err(Error::MissingClass {
            label: label.as_i8(),
        });
    }
    for m in &mut mean {
        *m /= count as f64;
    }
    Ok(mean)
}

/// Standard deviation of one class's points projected onto `beta/‖beta‖`,
/// centered at the class mean. Invariant under positive rescaling of `beta`.
pub fn class_sigma(data: &Dataset, label: ClassLabel, beta: &[f64]) -> Result<f64> {
    class_sigma_mode(data, label, beta, SigmaMode::Normalized)
}

/// [`class_sigma`] with an explicit normalization mode.
pub fn class_sigma_mode(
    data: &Dataset,
    label: ClassLabel,
    beta: &[f64],
    mode: SigmaMode,
) -> Result<f64> {
    Ok(class_stats(data, label, beta, mode)?.sigma)
}

/// Count, mean, and directional standard deviation for one class.
pub fn class_stats(
    data: &Dataset,
    label: ClassLabel,
    beta: &[f64],
    mode: SigmaMode,
) -> Result<ClassStats> {
    if beta.len() != data.dim() {
        return Err(Error::LengthMismatch {
            expected: data.dim(),
            got: beta.len(),
        });
    }
    let beta_norm = norm(beta);
    if beta_norm == 0.0 || beta.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidHyperplane);
    }
    let mean = class_mean(data, label)?;
    let mut sum_sq = 0.0;
    let mut count = 0usize;
    for i in data.class_indices(label) {
        let proj: f64 = data
            .point(i)
            .iter()
            .zip(&mean)
            .zip(beta)
            .map(|((x, m), b)| (x - m) * (b / beta_norm))
            .sum();
        sum_sq += proj * proj;
        count += 1;
    }
    let sigma = match mode {
        SigmaMode::Normalized => (sum_sq / count as f64).sqrt(),
        SigmaMode::Unnormalized => sum_sq.sqrt(),
    };
    Ok(ClassStats {
        label,
        count,
        mean,
        sigma,
    })
}

/// Lower bound applied to class sigmas before any division: `1e−8` times the
/// largest per-coordinate range of the data (1.0 if the data has no spread).
pub fn sigma_floor(data: &Dataset) -> f64 {
    let scale = if data.coord_range() > 0.0 {
        data.coord_range()
    } else {
        1.0
    };
    1e-8 * scale
}

/// Class sigma clamped to the floor, with a flag saying whether the clamp hit.
pub fn effective_sigma(
    data: &Dataset,
    label: ClassLabel,
    beta: &[f64],
    mode: SigmaMode,
) -> Result<(f64, bool)> {
    let raw = class_sigma_mode(data, label, beta, mode)?;
    let floor = sigma_floor(data);
    if raw < floor {
        Ok((floor, true))
    } else {
        Ok((raw, false))
    }
}

/// The margin of one class: the minimum over its members of the
/// sigma-normalized signed decision value `y (x·beta + beta0) / sigma`.
///
/// This is a functional margin scaled by the class's directional spread, not
/// a Euclidean distance. Negative when a member is misclassified.
pub fn class_margin(data: &Dataset, label: ClassLabel, h: &Hyperplane) -> Result<f64> {
    class_margin_mode(data, label, h, SigmaMode::Normalized)
}

/// [`class_margin`] with an explicit sigma normalization mode.
pub fn class_margin_mode(
    data: &Dataset,
    label: ClassLabel,
    h: &Hyperplane,
    mode: SigmaMode,
) -> Result<f64> {
    h.validate()?;
    let (sigma, _) = effective_sigma(data, label, &h.beta, mode)?;
    let mut margin = f64::INFINITY;
    for i in data.class_indices(label) {
        let v = decision_value(h, data.point(i))?;
        margin = margin.min(label.as_f64() * v / sigma);
    }
    if margin == f64::INFINITY {
        return Err(Error::MissingClass {
            label: label.as_i8(),
        });
    }
    Ok(margin)
}

/// Both class margins, the sigmas they were scaled by, and the gap between
/// them. The gap vanishes at a balanced variance-adjusted optimum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MarginReport {
    pub margin_neg: f64,
    pub margin_pos: f64,
    /// Effective (floor-clamped) sigma of the −1 class along the normal.
    pub sigma_neg: f64,
    /// Effective (floor-clamped) sigma of the +1 class along the normal.
    pub sigma_pos: f64,
    /// `|margin_neg − margin_pos|` over the sigma-normalized margins.
    pub ratio_gap: f64,
}

/// Per-class margins and sigmas of `h` on `data`.
pub fn margin_report(data: &Dataset, h: &Hyperplane) -> Result<MarginReport> {
    margin_report_mode(data, h, SigmaMode::Normalized)
}

/// [`margin_report`] with an explicit sigma normalization mode.
pub fn margin_report_mode(
    data: &Dataset,
    h: &Hyperplane,
    mode: SigmaMode,
) -> Result<MarginReport> {
    data.require_both_classes()?;
    let (sigma_neg, _) = effective_sigma(data, ClassLabel::Minus, &h.beta, mode)?;
    let (sigma_pos, _) = effective_sigma(data, ClassLabel::Plus, &h.beta, mode)?;
    let margin_neg = class_margin_mode(data, ClassLabel::Minus, h, mode)?;
    let margin_pos = class_margin_mode(data, ClassLabel::Plus, h, mode)?;
    Ok(MarginReport {
        margin_neg,
        margin_pos,
        sigma_neg,
        sigma_pos,
        ratio_gap: (margin_neg - margin_pos).abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn h(beta: &[f64], beta0: f64) -> Hyperplane {
        Hyperplane::new(beta.to_vec(), beta0)
    }

    #[test]
    fn decision_value_on_plane_is_zero() {
        let hp = h(&[1.0, 0.0], 0.0);
        assert_eq!(decision_value(&hp, &[0.0, 5.0]).unwrap(), 0.0);
    }

    #[test]
    fn decision_value_affine_evaluation() {
        assert_eq!(decision_value(&h(&[1.0, 0.0], -1.0), &[3.0, 2.0]).unwrap(), 2.0);
        assert_eq!(decision_value(&h(&[2.0, 1.0], 0.5), &[1.0, 1.0]).unwrap(), 3.5);
    }

    #[test]
    fn decision_value_rejects_zero_beta() {
        let hp = h(&[0.0, 0.0], 1.0);
        assert!(matches!(
            decision_value(&hp, &[1.0, 1.0]),
            Err(Error::InvalidHyperplane)
        ));
    }

    #[test]
    fn classify_signs_and_tie_break() {
        let hp = h(&[1.0, 0.0], -1.0);
        assert_eq!(classify(&hp, &[3.0, 0.0]).unwrap(), ClassLabel::Plus);
        assert_eq!(classify(&hp, &[0.0, 0.0]).unwrap(), ClassLabel::Minus);
        // Boundary point classifies as +1.
        let hp0 = h(&[1.0, 0.0], 0.0);
        assert_eq!(classify(&hp0, &[0.0, 9.0]).unwrap(), ClassLabel::Plus);
    }

    #[test]
    fn sigma_two_point_symmetric_class() {
        let data = Dataset::one_dim(&[
            (-3.0, ClassLabel::Minus),
            (-1.0, ClassLabel::Minus),
            (2.0, ClassLabel::Plus),
            (6.0, ClassLabel::Plus),
        ])
        .unwrap();
        assert_eq!(class_sigma(&data, ClassLabel::Minus, &[1.0]).unwrap(), 1.0);
        assert_eq!(class_sigma(&data, ClassLabel::Plus, &[1.0]).unwrap(), 2.0);
    }

    #[test]
    fn sigma_homogeneous_in_beta() {
        let data = Dataset::from_rows(
            vec![
                vec![0.3, -1.2],
                vec![2.0, 0.7],
                vec![-0.5, 1.9],
                vec![1.1, 1.1],
            ],
            vec![
                ClassLabel::Minus,
                ClassLabel::Minus,
                ClassLabel::Plus,
                ClassLabel::Plus,
            ],
        )
        .unwrap();
        let a = class_sigma(&data, ClassLabel::Minus, &[0.8, -0.6]).unwrap();
        let b = class_sigma(&data, ClassLabel::Minus, &[1.6, -1.2]).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-12);
    }

    /// Independent scalar-statistics oracle: project the class onto the unit
    /// direction by hand and take the population standard deviation.
    fn projection_sd_oracle(points: &[[f64; 2]], dir: [f64; 2]) -> f64 {
        let n = (dir[0] * dir[0] + dir[1] * dir[1]).sqrt();
        let u = [dir[0] / n, dir[1] / n];
        let projs: Vec<f64> = points.iter().map(|p| p[0] * u[0] + p[1] * u[1]).collect();
        let mean = projs.iter().sum::<f64>() / projs.len() as f64;
        let var = projs.iter().map(|t| (t - mean) * (t - mean)).sum::<f64>() / projs.len() as f64;
        var.sqrt()
    }

    #[test]
    fn sigma_2d_square_class_matches_projection_oracle() {
        let square = [[0.0, 0.0], [2.0, 0.0], [0.0, 2.0], [2.0, 2.0]];
        let expected = projection_sd_oracle(&square, [1.0, 1.0]);
        // Frozen value computed by the oracle: deviations along (1,1)/√2 are
        // {−√2, 0, 0, √2}, so the population SD is exactly 1.
        assert_relative_eq!(expected, 1.0, max_relative = 1e-15);

        let mut rows: Vec<Vec<f64>> = square.iter().map(|p| p.to_vec()).collect();
        rows.push(vec![9.0, 9.0]); // opposite class, must not affect the stat
        let labels = vec![
            ClassLabel::Plus,
            ClassLabel::Plus,
            ClassLabel::Plus,
            ClassLabel::Plus,
            ClassLabel::Minus,
        ];
        let data = Dataset::from_rows(rows, labels).unwrap();
        let sigma = class_sigma(&data, ClassLabel::Plus, &[1.0, 1.0]).unwrap();
        assert_relative_eq!(sigma, expected, max_relative = 1e-14);
    }

    #[test]
    fn sigma_unnormalized_mode_scales_with_count() {
        let data = Dataset::one_dim(&[
            (-3.0, ClassLabel::Minus),
            (-1.0, ClassLabel::Minus),
            (2.0, ClassLabel::Plus),
            (6.0, ClassLabel::Plus),
        ])
        .unwrap();
        let raw =
            class_sigma_mode(&data, ClassLabel::Minus, &[1.0], SigmaMode::Unnormalized).unwrap();
        // Sum of squared deviations is 2, no division by the count.
        assert_relative_eq!(raw, 2.0f64.sqrt(), max_relative = 1e-15);
    }

    #[test]
    fn sigma_missing_class_errors() {
        let data = Dataset::one_dim(&[(0.0, ClassLabel::Plus), (1.0, ClassLabel::Plus)]).unwrap();
        assert!(matches!(
            class_sigma(&data, ClassLabel::Minus, &[1.0]),
            Err(Error::MissingClass { label: -1 })
        ));
    }

    #[test]
    fn class_margin_two_point_class() {
        let data = Dataset::one_dim(&[
            (2.0, ClassLabel::Plus),
            (6.0, ClassLabel::Plus),
            (-1.0, ClassLabel::Minus),
        ])
        .unwrap();
        // sigma of {2,6} is 2, so the margin is min(2/2, 6/2) = 1.
        let m = class_margin(&data, ClassLabel::Plus, &h(&[1.0], 0.0)).unwrap();
        assert_relative_eq!(m, 1.0, max_relative = 1e-14);
    }

    #[test]
    fn class_margin_boundary_point_is_zero_term() {
        let data = Dataset::one_dim(&[
            (0.0, ClassLabel::Plus),
            (4.0, ClassLabel::Plus),
            (-2.0, ClassLabel::Minus),
        ])
        .unwrap();
        let m = class_margin(&data, ClassLabel::Plus, &h(&[1.0], 0.0)).unwrap();
        assert_eq!(m, 0.0);
    }

    #[test]
    fn class_margin_misclassified_member_is_negative() {
        let data = Dataset::one_dim(&[
            (-0.5, ClassLabel::Plus),
            (4.0, ClassLabel::Plus),
            (-2.0, ClassLabel::Minus),
        ])
        .unwrap();
        let m = class_margin(&data, ClassLabel::Plus, &h(&[1.0], 0.0)).unwrap();
        assert!(m < 0.0);
    }

    #[test]
    fn sigma_floor_applies_to_degenerate_class() {
        // The −1 class has no spread along beta, so its sigma hits the floor
        // and the margin stays finite.
        let data = Dataset::from_rows(
            vec![vec![-1.0, 0.0], vec![-1.0, 5.0], vec![2.0, 0.0], vec![3.0, 0.0]],
            vec![
                ClassLabel::Minus,
                ClassLabel::Minus,
                ClassLabel::Plus,
                ClassLabel::Plus,
            ],
        )
        .unwrap();
        let beta = [1.0, 0.0];
        let (sig, floored) =
            effective_sigma(&data, ClassLabel::Minus, &beta, SigmaMode::Normalized).unwrap();
        assert!(floored);
        assert_eq!(sig, sigma_floor(&data));
        let m = class_margin(&data, ClassLabel::Minus, &h(&beta, 0.0)).unwrap();
        assert!(m.is_finite());
    }

    #[test]
    fn margin_report_symmetric_data_has_zero_gap() {
        // Mirror-symmetric equal-variance classes; the midline hyperplane
        // balances both margins exactly.
        let data = Dataset::one_dim(&[
            (-3.0, ClassLabel::Minus),
            (-1.0, ClassLabel::Minus),
            (1.0, ClassLabel::Plus),
            (3.0, ClassLabel::Plus),
        ])
        .unwrap();
        let report = margin_report(&data, &h(&[1.0], 0.0)).unwrap();
        assert_eq!(report.ratio_gap, 0.0);
        assert_eq!(report.sigma_neg, report.sigma_pos);
    }

    #[test]
    fn margin_report_non_optimal_hyperplane_has_positive_gap() {
        let data = Dataset::one_dim(&[
            (-3.0, ClassLabel::Minus),
            (-1.0, ClassLabel::Minus),
            (2.0, ClassLabel::Plus),
            (6.0, ClassLabel::Plus),
        ])
        .unwrap();
        // Boundary at 0.5 balances Euclidean margins, not sigma-scaled ones.
        let report = margin_report(&data, &h(&[1.0], -0.5)).unwrap();
        assert!(report.ratio_gap > 0.1);
    }

    #[test]
    fn margin_report_balanced_at_variance_optimum() {
        // Boundary at 0 equalizes (b+1)/1 and (2−b)/2 for the fixture classes.
        let data = Dataset::one_dim(&[
            (-3.0, ClassLabel::Minus),
            (-1.0, ClassLabel::Minus),
            (2.0, ClassLabel::Plus),
            (6.0, ClassLabel::Plus),
        ])
        .unwrap();
        let report = margin_report(&data, &h(&[1.0], 0.0)).unwrap();
        assert!(report.ratio_gap <= 1e-12);
    }

    #[test]
    fn boundary_offset_is_signed_position() {
        let hp = h(&[2.0 / 3.0], -(2.0 / 3.0) * 0.5);
        assert_relative_eq!(hp.boundary_offset().unwrap(), 0.5, max_relative = 1e-12);
    }

    #[test]
    fn dataset_rejects_bad_rows() {
        assert!(Dataset::from_rows(vec![], vec![]).is_err());
        assert!(Dataset::from_rows(
            vec![vec![1.0], vec![1.0, 2.0]],
            vec![ClassLabel::Plus, ClassLabel::Minus]
        )
        .is_err());
        assert!(Dataset::from_rows(
            vec![vec![f64::NAN]],
            vec![ClassLabel::Plus]
        )
        .is_err());
    }
}
