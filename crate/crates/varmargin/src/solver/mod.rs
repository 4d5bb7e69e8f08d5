//! Soft-margin solvers.
//!
//! [`classical`] trains the standard linear SVM through its dual;
//! [`variance`] trains the variant whose per-class margins are scaled by the
//! class's directional standard deviation. Both share the pairwise
//! coordinate-ascent core in [`smo`] and the types here.

pub mod classical;
mod smo;
pub mod variance;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{dot, norm, Dataset, Hyperplane, SigmaMode};

/// Which formulation a trained model came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Classical,
    Variance,
}

/// Which expression is used for the sigma term of the Lagrangian gradient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum GradientMode {
    /// Analytic gradient of the directional standard deviation, including the
    /// full normal-direction coupling. The only mode used for descent.
    #[default]
    #[serde(rename = "exact")]
    Exact,
    /// Hadamard-product approximation of the projection gradient, retained as
    /// a diagnostic. Disagrees with finite differences in general.
    #[serde(rename = "paper")]
    Hadamard,
}

/// Solver parameters for both formulations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Slack penalty C.
    pub cost: f64,
    /// Acceptance threshold for the KKT residual of a dual solve.
    pub kkt_tol: f64,
    /// Budget for the dual solver: `max_passes` sweeps of N pair updates.
    pub max_passes: usize,
    /// Directional standard deviation normalization.
    pub sigma_mode: SigmaMode,
    /// Direction-change threshold for the outer sigma iteration.
    pub outer_tol: f64,
    /// Cap on outer sigma iterations.
    pub max_outer: usize,
    /// Gradient expression reported by diagnostics.
    pub gradient_mode: GradientMode,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            cost: 1.0,
            kkt_tol: 1e-6,
            max_passes: 10_000,
            sigma_mode: SigmaMode::Normalized,
            outer_tol: 1e-8,
            max_outer: 100,
            gradient_mode: GradientMode::Exact,
        }
    }
}

impl SolverConfig {
    /// A configuration for the hard-margin regime on separable data.
    pub fn hard_margin() -> Self {
        SolverConfig {
            cost: 1e6,
            ..SolverConfig::default()
        }
    }

    pub fn with_cost(mut self, cost: f64) -> Self {
        self.cost = cost;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.cost > 0.0 && self.cost.is_finite()) {
            return Err(Error::InvalidSpec {
                field: "cost".into(),
                reason: "must be a positive finite number".into(),
            });
        }
        if !(self.kkt_tol > 0.0) || !(self.outer_tol > 0.0) {
            return Err(Error::InvalidSpec {
                field: "tolerance".into(),
                reason: "kkt_tol and outer_tol must be positive".into(),
            });
        }
        if self.max_passes == 0 || self.max_outer == 0 {
            return Err(Error::InvalidSpec {
                field: "iterations".into(),
                reason: "max_passes and max_outer must be at least 1".into(),
            });
        }
        Ok(())
    }
}

/// Effective per-class sigmas attached to a variance-variant solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassSigmas {
    pub neg: f64,
    pub pos: f64,
}

impl ClassSigmas {
    pub fn for_label(&self, label: crate::model::ClassLabel) -> f64 {
        match label {
            crate::model::ClassLabel::Minus => self.neg,
            crate::model::ClassLabel::Plus => self.pos,
        }
    }
}

/// A fitted model: hyperplane plus the dual state that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainedModel {
    pub hyperplane: Hyperplane,
    /// Dual coefficients, one per training point, in `[0, cost]`.
    pub alphas: Vec<f64>,
    /// Slack values at the hyperplane (variant-appropriate definition).
    pub slacks: Vec<f64>,
    /// Multipliers of the slack positivity constraints: `cost − alpha`.
    pub mus: Vec<f64>,
    /// Primal objective of the returned hyperplane.
    pub objective: f64,
    /// Maximum KKT violation of the (frozen-sigma, for the variance variant)
    /// subproblem at return.
    pub kkt_residual: f64,
    /// Dual pair updates performed.
    pub iterations: usize,
    /// Outer sigma refreshes (zero for the classical variant).
    pub outer_iterations: usize,
    pub variant: Variant,
    pub converged: bool,
    /// Effective class sigmas along the returned normal (variance variant).
    pub sigmas: Option<ClassSigmas>,
    /// True when a class sigma hit the degeneracy floor during the solve.
    pub sigma_floored: bool,
    /// Sigma normalization the model was trained with.
    pub sigma_mode: SigmaMode,
    /// Slack penalty the model was trained with.
    pub cost: f64,
}

impl TrainedModel {
    /// Per-point effective constraint weights `y_i / sigma_{y_i}`
    /// (sigma ≡ 1 for the classical variant).
    pub fn weights(&self, data: &Dataset) -> Vec<f64> {
        match (self.variant, self.sigmas) {
            (Variant::Variance, Some(s)) => data
                .labels()
                .iter()
                .map(|l| l.as_f64() / s.for_label(*l))
                .collect(),
            _ => data.labels().iter().map(|l| l.as_f64()).collect(),
        }
    }
}

/// One dual-solver progress sample, used by diagnostics and tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    /// Pair updates performed when the sample was taken.
    pub updates: usize,
    /// Dual objective of the current multipliers.
    pub dual_objective: f64,
    /// Primal objective of the hyperplane recovered from them.
    pub primal_objective: f64,
}

/// Slacks of the weighted constraint set: `max(0, 1 − u_i (x_i·beta + beta0))`.
pub(crate) fn weighted_slacks(data: &Dataset, u: &[f64], h: &Hyperplane) -> Vec<f64> {
    (0..data.len())
        .map(|i| {
            let f = dot(&h.beta, data.point(i)) + h.beta0;
            (1.0 - u[i] * f).max(0.0)
        })
        .collect()
}

/// Maximum KKT violation of the weighted soft-margin problem at the given
/// primal/dual point: stationarity in beta, the bias equality, the box
/// identity `alpha + mu = cost`, both complementarity products, and primal
/// feasibility (including slack positivity and the alpha box).
pub(crate) fn weighted_kkt_residual(
    data: &Dataset,
    u: &[f64],
    cost: f64,
    h: &Hyperplane,
    alphas: &[f64],
    slacks: &[f64],
    mus: &[f64],
) -> f64 {
    let p = data.dim();
    let mut recovered = vec![0.0; p];
    for i in 0..data.len() {
        let c = alphas[i] * u[i];
        for (r, x) in recovered.iter_mut().zip(data.point(i)) {
            *r += c * x;
        }
    }
    let stationarity: f64 = norm(
        &h.beta
            .iter()
            .zip(&recovered)
            .map(|(b, r)| b - r)
            .collect::<Vec<_>>(),
    );
    let equality: f64 = alphas
        .iter()
        .zip(u)
        .map(|(a, ui)| a * ui)
        .sum::<f64>()
        .abs();

    let mut worst = stationarity.max(equality);
    for i in 0..data.len() {
        let f = dot(&h.beta, data.point(i)) + h.beta0;
        let constraint = u[i] * f - (1.0 - slacks[i]);
        worst = worst
            .max((alphas[i] + mus[i] - cost).abs())
            .max((alphas[i] * constraint).abs())
            .max((mus[i] * slacks[i]).abs())
            .max(-constraint) // primal feasibility violation
            .max(-slacks[i]) // slack positivity
            .max(-alphas[i])
            .max(alphas[i] - cost);
    }
    worst.max(0.0)
}
