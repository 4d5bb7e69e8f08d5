//! Classical soft-margin linear SVM, trained through its Wolfe dual.
//!
//! Serves as the baseline method, the initializer for the variance-adjusted
//! solver, and the reference in equal-variance coincidence checks.

use crate::error::{Error, Result};
use crate::model::{dot, Dataset, Hyperplane};
use crate::solver::smo::solve_weighted;
use crate::solver::{
    weighted_kkt_residual, weighted_slacks, SolverConfig, TracePoint, TrainedModel, Variant,
};

/// Per-point slack `max(0, 1 − y_i (x_i·beta + beta0))`.
///
/// A slack above 1 marks a misclassified point.
pub fn classical_slack(data: &Dataset, h: &Hyperplane) -> Result<Vec<f64>> {
    h.validate()?;
    check_dim(data, h)?;
    let u: Vec<f64> = data.labels().iter().map(|l| l.as_f64()).collect();
    Ok(weighted_slacks(data, &u, h))
}

/// Soft-margin primal objective `½‖beta‖² + C Σ slack_i`.
pub fn primal_objective(data: &Dataset, h: &Hyperplane, cost: f64) -> Result<f64> {
    let slacks = classical_slack(data, h)?;
    Ok(0.5 * dot(&h.beta, &h.beta) + cost * slacks.iter().sum::<f64>())
}

/// Wolfe dual objective `Σ a_i − ½ ΣΣ a_i a_j y_i y_j ⟨x_i, x_j⟩`.
pub fn dual_objective(data: &Dataset, alphas: &[f64]) -> Result<f64> {
    if alphas.len() != data.len() {
        return Err(Error::LengthMismatch {
            expected: data.len(),
            got: alphas.len(),
        });
    }
    // The double sum collapses to ‖Σ a_i y_i x_i‖².
    let mut w = vec![0.0; data.dim()];
    for (i, (x, label)) in data.iter().enumerate() {
        let c = alphas[i] * label.as_f64();
        for (wk, xk) in w.iter_mut().zip(x) {
            *wk += c * xk;
        }
    }
    Ok(alphas.iter().sum::<f64>() - 0.5 * dot(&w, &w))
}

/// Maximum KKT violation of `model` on `data` at slack penalty `cost`.
///
/// Uses the model's stored slack vector as-is, so hand-altered models report
/// the corresponding feasibility violation.
pub fn kkt_residual(data: &Dataset, model: &TrainedModel, cost: f64) -> Result<f64> {
    for (name, len) in [
        ("alphas", model.alphas.len()),
        ("slacks", model.slacks.len()),
        ("mus", model.mus.len()),
    ] {
        if len != data.len() {
            return Err(Error::InvalidData(format!(
                "model field {name} has length {len}, dataset has {}",
                data.len()
            )));
        }
    }
    check_dim(data, &model.hyperplane)?;
    let u = model.weights(data);
    Ok(weighted_kkt_residual(
        data,
        &u,
        cost,
        &model.hyperplane,
        &model.alphas,
        &model.slacks,
        &model.mus,
    ))
}

/// Train the classical soft-margin SVM.
///
/// The dual is maximized by deterministic pairwise coordinate ascent; beta is
/// assembled from the multipliers and the offset from the margin equations of
/// free support vectors. Non-convergence within the update budget returns
/// [`Error::NotConverged`] carrying the best iterate.
pub fn solve_classical(data: &Dataset, config: &SolverConfig) -> Result<TrainedModel> {
    Ok(solve_classical_traced(data, config, None)?)
}

/// [`solve_classical`] with optional progress sampling (one sample per sweep
/// of N pair updates).
pub fn solve_classical_traced(
    data: &Dataset,
    config: &SolverConfig,
    trace: Option<&mut Vec<TracePoint>>,
) -> Result<TrainedModel> {
    config.validate()?;
    data.require_both_classes()?;
    let u: Vec<f64> = data.labels().iter().map(|l| l.as_f64()).collect();
    let budget = config.max_passes.saturating_mul(data.len());
    let trace = trace.map(|t| (t, data.len()));
    let solve = solve_weighted(data, &u, config.cost, config.kkt_tol, budget, trace);

    let objective = 0.5 * dot(&solve.hyperplane.beta, &solve.hyperplane.beta)
        + config.cost * solve.slacks.iter().sum::<f64>();
    let converged = solve.converged;
    let residual = solve.kkt_residual;
    let model = TrainedModel {
        hyperplane: solve.hyperplane,
        alphas: solve.alphas,
        slacks: solve.slacks,
        mus: solve.mus,
        objective,
        kkt_residual: residual,
        iterations: solve.updates,
        outer_iterations: 0,
        variant: Variant::Classical,
        converged,
        sigmas: None,
        sigma_floored: false,
        sigma_mode: config.sigma_mode,
        cost: config.cost,
    };
    if converged {
        Ok(model)
    } else {
        Err(Error::NotConverged {
            model: Box::new(model),
            residual,
        })
    }
}

fn check_dim(data: &Dataset, h: &Hyperplane) -> Result<()> {
    if h.dim() != data.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            got: data.dim(),
        });
    }
    Ok(())
}
