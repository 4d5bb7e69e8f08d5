//! Pairwise coordinate ascent on the weighted soft-margin dual.
//!
//! Solves `min_a  ½ ΣΣ a_i a_j u_i u_j ⟨x_i,x_j⟩ − Σ a_i` subject to
//! `0 ≤ a_i ≤ C` and `Σ u_i a_i = 0`, where `u_i` is the per-point constraint
//! weight (`y_i` for the classical problem, `y_i/sigma_{y_i}` for the
//! frozen-sigma variance subproblem). Two multipliers are updated jointly so
//! the equality constraint is preserved exactly; the working pair is the one
//! with the largest KKT violation. Selection is fully deterministic, so runs
//! are reproducible.

use crate::model::{dot, Dataset, Hyperplane};
use crate::solver::{weighted_slacks, TracePoint};

/// Why a `run` call returned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum RunStatus {
    /// The maximal KKT violation dropped to the requested gap tolerance.
    GapReached,
    /// The update budget ran out first.
    BudgetExhausted,
    /// No numerically meaningful step is possible anymore.
    Stalled,
}

pub(crate) struct SmoState<'a> {
    data: &'a Dataset,
    u: &'a [f64],
    inv_u: Vec<f64>,
    cost: f64,
    pub alphas: Vec<f64>,
    /// Normal vector implied by the multipliers: `Σ a_i u_i x_i`.
    pub beta: Vec<f64>,
    grad: Vec<f64>,
    pub updates: usize,
    snap_tol: f64,
}

impl<'a> SmoState<'a> {
    pub fn new(data: &'a Dataset, u: &'a [f64], cost: f64) -> Self {
        let n = data.len();
        SmoState {
            data,
            u,
            inv_u: u.iter().map(|v| 1.0 / v).collect(),
            cost,
            alphas: vec![0.0; n],
            beta: vec![0.0; data.dim()],
            grad: vec![-1.0; n],
            updates: 0,
            snap_tol: 1e-12 * cost.max(1.0),
        }
    }

    /// Maximal violating pair: the index pair whose joint move can decrease
    /// the dual objective the most, and the size of its violation.
    fn select_pair(&self) -> Option<(usize, usize, f64)> {
        let mut best_up: Option<(usize, f64)> = None;
        let mut best_low: Option<(usize, f64)> = None;
        for i in 0..self.alphas.len() {
            let r = self.grad[i] * self.inv_u[i];
            let movable_up = if self.u[i] > 0.0 {
                self.alphas[i] < self.cost
            } else {
                self.alphas[i] > 0.0
            };
            let movable_down = if self.u[i] > 0.0 {
                self.alphas[i] > 0.0
            } else {
                self.alphas[i] < self.cost
            };
            if movable_up && best_up.map_or(true, |(_, b)| r < b) {
                best_up = Some((i, r));
            }
            if movable_down && best_low.map_or(true, |(_, b)| r > b) {
                best_low = Some((i, r));
            }
        }
        match (best_up, best_low) {
            (Some((i, ri)), Some((j, rj))) if i != j => Some((i, j, rj - ri)),
            _ => None,
        }
    }

    /// Run pair updates until the violation gap reaches `gap_tol`, the total
    /// update budget is hit, or progress stalls numerically.
    pub fn run(
        &mut self,
        gap_tol: f64,
        budget: usize,
        mut trace: Option<(&mut Vec<TracePoint>, usize)>,
    ) -> RunStatus {
        loop {
            let Some((i, j, gap)) = self.select_pair() else {
                return RunStatus::GapReached;
            };
            if gap <= gap_tol {
                return RunStatus::GapReached;
            }
            if self.updates >= budget {
                return RunStatus::BudgetExhausted;
            }
            if !self.step(i, j, gap) {
                return RunStatus::Stalled;
            }
            self.updates += 1;
            if self.updates % 1024 == 0 {
                self.refresh();
            }
            if let Some((points, every)) = trace.as_mut() {
                if self.updates % *every == 0 {
                    let sample = self.trace_point();
                    points.push(sample);
                }
            }
        }
    }

    /// Joint update of the pair `(i, j)` along the equality-preserving
    /// direction. Returns false when no movement was possible.
    fn step(&mut self, i: usize, j: usize, gap: f64) -> bool {
        let xi = self.data.point(i);
        let xj = self.data.point(j);
        let curvature = dot(xi, xi) + dot(xj, xj) - 2.0 * dot(xi, xj);

        // Box limit on the step length s (alpha_i moves by s/u_i, alpha_j by −s/u_j).
        let cap_i = if self.u[i] > 0.0 {
            self.u[i] * (self.cost - self.alphas[i])
        } else {
            -self.u[i] * self.alphas[i]
        };
        let cap_j = if self.u[j] > 0.0 {
            self.u[j] * self.alphas[j]
        } else {
            -self.u[j] * (self.cost - self.alphas[j])
        };
        let s_max = cap_i.min(cap_j);
        if !(s_max > 0.0) {
            return false;
        }
        let s = if curvature > 0.0 {
            (gap / curvature).min(s_max)
        } else {
            s_max
        };

        let new_i = self.snap(self.alphas[i] + s * self.inv_u[i]);
        let new_j = self.snap(self.alphas[j] - s * self.inv_u[j]);
        let delta_i = new_i - self.alphas[i];
        let delta_j = new_j - self.alphas[j];
        if delta_i == 0.0 && delta_j == 0.0 {
            return false;
        }
        self.alphas[i] = new_i;
        self.alphas[j] = new_j;

        let ci = delta_i * self.u[i];
        let cj = delta_j * self.u[j];
        let mut delta_beta = vec![0.0; self.beta.len()];
        for ((db, a), b) in delta_beta.iter_mut().zip(xi).zip(xj) {
            *db = ci * a + cj * b;
        }
        for (b, db) in self.beta.iter_mut().zip(&delta_beta) {
            *b += db;
        }
        for k in 0..self.alphas.len() {
            self.grad[k] += self.u[k] * dot(&delta_beta, self.data.point(k));
        }
        true
    }

    fn snap(&self, a: f64) -> f64 {
        if a < self.snap_tol {
            0.0
        } else if a > self.cost - self.snap_tol {
            self.cost
        } else {
            a
        }
    }

    /// Recompute beta and the gradient from the multipliers, shedding the
    /// rounding accumulated by incremental updates.
    fn refresh(&mut self) {
        for b in &mut self.beta {
            *b = 0.0;
        }
        for i in 0..self.alphas.len() {
            let c = self.alphas[i] * self.u[i];
            for (b, x) in self.beta.iter_mut().zip(self.data.point(i)) {
                *b += c * x;
            }
        }
        for k in 0..self.alphas.len() {
            self.grad[k] = self.u[k] * dot(&self.beta, self.data.point(k)) - 1.0;
        }
    }

    /// Dual objective of the current multipliers: `Σ a − ½‖beta‖²`.
    pub fn dual_objective(&self) -> f64 {
        self.alphas.iter().sum::<f64>() - 0.5 * dot(&self.beta, &self.beta)
    }

    /// Offset recovered from the KKT conditions: the average of the margin
    /// equations over free support vectors, or the midpoint of the interval
    /// the bound support vectors imply when none are free.
    pub fn bias(&self) -> f64 {
        let mut free_sum = 0.0;
        let mut free_count = 0usize;
        let mut lower = f64::NEG_INFINITY;
        let mut upper = f64::INFINITY;
        for i in 0..self.alphas.len() {
            let t = self.inv_u[i] - dot(&self.beta, self.data.point(i));
            let a = self.alphas[i];
            if a > 0.0 && a < self.cost {
                free_sum += t;
                free_count += 1;
            } else if (a == 0.0) == (self.u[i] > 0.0) {
                // constraint may only be slack upward: beta0 ≥ t
                lower = lower.max(t);
            } else {
                upper = upper.min(t);
            }
        }
        if free_count > 0 {
            free_sum / free_count as f64
        } else if lower.is_finite() && upper.is_finite() {
            0.5 * (lower + upper)
        } else if lower.is_finite() {
            lower
        } else if upper.is_finite() {
            upper
        } else {
            0.0
        }
    }

    pub fn hyperplane(&self) -> Hyperplane {
        Hyperplane::new(self.beta.clone(), self.bias())
    }

    fn trace_point(&self) -> TracePoint {
        let h = self.hyperplane();
        let slacks = weighted_slacks(self.data, self.u, &h);
        let primal = 0.5 * dot(&h.beta, &h.beta) + self.cost * slacks.iter().sum::<f64>();
        TracePoint {
            updates: self.updates,
            dual_objective: self.dual_objective(),
            primal_objective: primal,
        }
    }
}

/// Outcome of a full weighted dual solve.
pub(crate) struct WeightedSolve {
    pub alphas: Vec<f64>,
    pub hyperplane: Hyperplane,
    pub slacks: Vec<f64>,
    pub mus: Vec<f64>,
    pub kkt_residual: f64,
    pub updates: usize,
    pub converged: bool,
}

/// Solve the weighted dual to the requested KKT residual, tightening the
/// internal violation-gap tolerance until the full residual (which includes
/// the complementarity products) meets `kkt_tol` or progress is exhausted.
pub(crate) fn solve_weighted(
    data: &Dataset,
    u: &[f64],
    cost: f64,
    kkt_tol: f64,
    budget: usize,
    mut trace: Option<(&mut Vec<TracePoint>, usize)>,
) -> WeightedSolve {
    let mut state = SmoState::new(data, u, cost);
    let mut gap_tol = kkt_tol;
    loop {
        let status = state.run(gap_tol, budget, trace.as_mut().map(|(t, e)| (&mut **t, *e)));
        let hyperplane = state.hyperplane();
        let slacks = weighted_slacks(data, u, &hyperplane);
        let mus: Vec<f64> = state.alphas.iter().map(|a| cost - a).collect();
        let residual =
            super::weighted_kkt_residual(data, u, cost, &hyperplane, &state.alphas, &slacks, &mus);
        let done = residual <= kkt_tol;
        let exhausted = matches!(status, RunStatus::BudgetExhausted | RunStatus::Stalled)
            || gap_tol <= 1e-15;
        if done || exhausted {
            if let Some((points, _)) = trace.as_mut() {
                let sample = TracePoint {
                    updates: state.updates,
                    dual_objective: state.dual_objective(),
                    primal_objective: 0.5 * dot(&hyperplane.beta, &hyperplane.beta)
                        + cost * slacks.iter().sum::<f64>(),
                };
                points.push(sample);
            }
            return WeightedSolve {
                alphas: state.alphas,
                hyperplane,
                slacks,
                mus,
                kkt_residual: residual,
                updates: state.updates,
                converged: done,
            };
        }
        gap_tol *= 0.1;
    }
}
