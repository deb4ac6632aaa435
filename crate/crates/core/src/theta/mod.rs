//! Lovász theta by a dense SDP solver.
//!
//! `ϑ(G) = max ⟨J, X⟩` over positive semidefinite `X` with `tr X = 1` and
//! `X_uv = 0` on every edge, so `α(G) <= ϑ(G)`. To bound cliques instead, pass the
//! complement graph.
//!
//! The solver is ADMM on the split `X` (affine constraints) and `Z` (PSD cone):
//!
//! ```text
//! X ← Π_affine(Z − U + J/ρ)
//! Z ← Π_psd(X + U)
//! U ← U + X − Z
//! ```
//!
//! Both projections are exact: the affine one zeroes edge entries and shifts the
//! diagonal, and the PSD one clips eigenvalues. Eigenvectors from one iteration seed
//! the Jacobi sweeps of the next.

mod matrix;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::structures::Graph;

pub use matrix::{Eigen, SymMatrix};

#[derive(Clone, Copy, Debug)]
pub struct ThetaConfig {
    pub tolerance: f64,
    pub max_iterations: usize,
    pub max_vertices: usize,
}

impl Default for ThetaConfig {
    fn default() -> Self {
        ThetaConfig {
            tolerance: 1e-7,
            max_iterations: 200_000,
            max_vertices: 256,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ThetaResult {
    pub value: f64,
    /// `‖X − Z‖_F` between the affine and the PSD iterate.
    pub primal_residual: f64,
    /// `λ_max(A) − value` for the dual matrix `A` read off the multipliers; `A`
    /// has ones on the diagonal and on non-edges, so `λ_max(A) >= ϑ`.
    pub dual_gap_estimate: f64,
    pub iterations: usize,
}

impl ThetaResult {
    pub fn to_json(&self, vertices: usize) -> serde_json::Value {
        serde_json::json!({
            "vertices": vertices,
            "theta": self.value,
            "residuals": {
                "primal": self.primal_residual,
                "dual_gap_estimate": self.dual_gap_estimate,
            },
            "iterations": self.iterations,
        })
    }
}

pub fn lovasz_theta(g: &Graph) -> Result<ThetaResult> {
    lovasz_theta_with(g, &ThetaConfig::default())
}

pub fn lovasz_theta_with(g: &Graph, config: &ThetaConfig) -> Result<ThetaResult> {
    let n = g.vertex_count();
    if n > config.max_vertices {
        return Err(Error::VertexCap {
            requested: n as u128,
            cap: config.max_vertices,
        });
    }
    if n == 0 {
        return Ok(ThetaResult {
            value: 0.0,
            primal_residual: 0.0,
            dual_gap_estimate: 0.0,
            iterations: 0,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let project_affine = |m: &mut SymMatrix| {
        for &(u, v) in &edges {
            m.set(u, v, 0.0);
        }
        let shift = (1.0 - m.trace()) / n as f64;
        for i in 0..n {
            m.set(i, i, m.get(i, i) + shift);
        }
    };

    let mut rho = 1.0 / n as f64;
    let mut z = SymMatrix::identity(n);
    z.raw_mut().iter_mut().for_each(|x| *x /= n as f64);
    let mut u = SymMatrix::zeros(n);
    let mut x = z.clone();
    let mut basis = SymMatrix::identity(n).raw().to_vec();
    let (mut primal, mut dual) = (f64::INFINITY, f64::INFINITY);
    let mut iterations = 0;
    while iterations < config.max_iterations {
        iterations += 1;
        x = z.clone();
        for (xi, ui) in x.raw_mut().iter_mut().zip(u.raw()) {
            *xi += 1.0 / rho - ui;
        }
        project_affine(&mut x);

        let mut w = x.clone();
        w.raw_mut().iter_mut().zip(u.raw()).for_each(|(a, b)| *a += b);
        let e = w.eigh_from(&basis);
        basis.clone_from(&e.vectors);
        let z_new = SymMatrix::psd_part(&e);

        u.raw_mut()
            .iter_mut()
            .zip(x.raw().iter().zip(z_new.raw()))
            .for_each(|(ui, (xi, zi))| *ui += xi - zi);
        primal = x.distance(&z_new);
        dual = rho * z.distance(&z_new);
        z = z_new;
        if primal <= config.tolerance && dual <= config.tolerance {
            break;
        }
        // keep the two residuals within a factor of 10 of each other
        if iterations % 20 == 0 {
            let factor = if primal > 10.0 * dual {
                2.0
            } else if dual > 10.0 * primal {
                0.5
            } else {
                1.0
            };
            if factor != 1.0 {
                rho *= factor;
                u.raw_mut().iter_mut().for_each(|v| *v /= factor);
            }
        }
    }
    if primal > config.tolerance || dual > config.tolerance {
        return Err(Error::NonConvergence {
            iterations,
            residual: primal.max(dual),
        });
    }
    let value = x.sum();
    // ρU ∈ -(PSD cone) at the optimum; its edge entries complete the dual matrix
    let mut best_dual = f64::INFINITY;
    for sign in [1.0, -1.0] {
        let mut a = SymMatrix::from_fn(n, |_, _| 1.0);
        for &(p, q) in &edges {
            a.set(p, q, sign * rho * u.get(p, q));
        }
        let lmax = a.eigh().values.into_iter().fold(f64::NEG_INFINITY, f64::max);
        best_dual = best_dual.min(lmax);
    }
    Ok(ThetaResult {
        value,
        primal_residual: primal,
        dual_gap_estimate: best_dual - value,
        iterations,
    })
}

/// `ϑ(G) ϑ(Ḡ)` against `|V|`, which agree for vertex-transitive `G`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultiplicativityReport {
    pub vertices: usize,
    pub theta: f64,
    pub theta_complement: f64,
    pub product: f64,
    pub deviation: f64,
}

pub fn check_multiplicativity(g: &Graph, config: &ThetaConfig) -> Result<MultiplicativityReport> {
    let a = lovasz_theta_with(g, config)?.value;
    let b = lovasz_theta_with(&g.complement(), config)?.value;
    let n = g.vertex_count();
    Ok(MultiplicativityReport {
        vertices: n,
        theta: a,
        theta_complement: b,
        product: a * b,
        deviation: (a * b - n as f64).abs(),
    })
}

/// For a vertex-transitive `G` with `α(G) α(Ḡ) = |V|`, the sandwich
/// `α <= Θ <= ϑ` collapses: `ϑ(G) = α(G)`, so the zero-error capacity is `α(G)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CapacityReport {
    pub vertices: usize,
    pub alpha: usize,
    pub alpha_complement: usize,
    pub alpha_product_is_order: bool,
    pub theta: f64,
    pub theta_complement: f64,
    pub theta_equals_alpha: bool,
    pub tolerance: f64,
}

impl CapacityReport {
    pub fn holds(&self) -> bool {
        self.alpha_product_is_order && self.theta_equals_alpha
    }
}

pub fn capacity_family_check(
    g: &Graph,
    alpha: usize,
    alpha_complement: usize,
    config: &ThetaConfig,
) -> Result<CapacityReport> {
    const TOLERANCE: f64 = 1e-3;
    let m = check_multiplicativity(g, config)?;
    Ok(CapacityReport {
        vertices: m.vertices,
        alpha,
        alpha_complement,
        alpha_product_is_order: alpha * alpha_complement == m.vertices,
        theta: m.theta,
        theta_complement: m.theta_complement,
        theta_equals_alpha: (m.theta - alpha as f64).abs() <= TOLERANCE
            && (m.theta_complement - alpha_complement as f64).abs() <= TOLERANCE,
        tolerance: TOLERANCE,
    })
}

#[cfg(test)]
mod tests;
