//! Gauss-Lobatto-Legendre quadrature rules on [-1, 1].
//!
//! A rule of order M has M+1 nodes: the endpoints ±1 plus the M-1 zeros of
//! L'_M, with weights ρ_i = 2 / ((M+1) M L_M(η_i)²). These nodes are the
//! backbone of the tensorized interpolation grids used by the schemes.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// Highest supported order. Beyond this the node conditioning is not certified.
pub const MAX_ORDER: usize = 32;

/// Evaluate the Legendre polynomial L_n and its derivative L'_n at `x`.
///
/// Uses the three-term recurrence (n+1) L_{n+1} = (2n+1) x L_n - n L_{n-1}
/// with L_0 = 1, L_1 = x, and L'_{n+1} = L'_{n-1} + (2n+1) L_n for the
/// derivative. Valid for any real `x`, also outside [-1, 1].
pub fn legendre_eval(n: usize, x: f64) -> (f64, f64) {
    match n {
        0 => (1.0, 0.0),
        1 => (x, 1.0),
        _ => {
            let mut prev = 1.0;
            let mut cur = x;
            let mut dprev = 0.0;
            let mut dcur = 1.0;
            for k in 1..n {
                let kf = k as f64;
                let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
                let dnext = dprev + (2.0 * kf + 1.0) * cur;
                prev = cur;
                cur = next;
                dprev = dcur;
                dcur = dnext;
            }
            (cur, dcur)
        }
    }
}

/// Nodes and weights of the Gauss-Lobatto-Legendre rule of a given order.
#[derive(Debug, Clone, PartialEq)]
pub struct GllRule {
    /// Order M of the rule; the rule has M+1 nodes.
    pub order: usize,
    /// Nodes η_1..η_{M+1}, strictly increasing, with η_1 = -1 and η_{M+1} = 1.
    pub nodes: Vec<f64>,
    /// Positive quadrature weights, summing to 2.
    pub weights: Vec<f64>,
    /// Barycentric weights of the nodes (normalized to unit max magnitude),
    /// used by the Lagrange interpolation routines.
    pub bary: Vec<f64>,
}

impl GllRule {
    /// Build the rule of order `order` (1 ..= [`MAX_ORDER`]).
    ///
    /// Interior nodes start from the Chebyshev-Lobatto points cos(πk/M) and
    /// are polished by Newton iteration on L'_M, then symmetrized so that
    /// η_i = -η_{M+2-i} holds exactly.
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::InvalidOrder {
                got: order,
                max: MAX_ORDER,
            });
        }
        let m = order;
        let mut nodes = vec![0.0; m + 1];
        nodes[0] = -1.0;
        nodes[m] = 1.0;
        for k in 1..m {
            let mut x = -(PI * k as f64 / m as f64).cos();
            for _ in 0..100 {
                let (lm, dlm) = legendre_eval(m, x);
                // L''_M from the Legendre ODE: (1-x²) L'' = 2x L' - M(M+1) L
                let d2 = (2.0 * x * dlm - (m * (m + 1)) as f64 * lm) / (1.0 - x * x);
                let step = dlm / d2;
                x -= step;
                if step.abs() <= 1e-14 {
                    break;
                }
            }
            nodes[k] = x;
        }
        // Enforce exact symmetry about the origin.
        for k in 0..=(m / 2) {
            let s = 0.5 * (nodes[k] - nodes[m - k]);
            nodes[k] = s;
            nodes[m - k] = -s;
        }

        let denom = ((m + 1) * m) as f64;
        let weights = nodes
            .iter()
            .map(|&x| {
                let (lm, _) = legendre_eval(m, x);
                2.0 / (denom * lm * lm)
            })
            .collect();

        let bary = barycentric_weights(&nodes);

        Ok(GllRule {
            order,
            nodes,
            weights,
            bary,
        })
    }

    /// Number of nodes, M+1.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

fn barycentric_weights(nodes: &[f64]) -> Vec<f64> {
    let mut w: Vec<f64> = (0..nodes.len())
        .map(|j| {
            let mut prod = 1.0;
            for (k, &xk) in nodes.iter().enumerate() {
                if k != j {
                    prod *= nodes[j] - xk;
                }
            }
            1.0 / prod
        })
        .collect();
    let scale = w.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    for v in &mut w {
        *v /= scale;
    }
    w
}
