//! Equally spaced rules for smooth 2π-periodic integrands over [−π, π).
//!
//! On a periodic integrand the trapezoid rule with `n` nodes integrates every
//! trigonometric polynomial of degree below `n` exactly, so convergence is
//! checked by doubling the grid rather than by error estimates.

use std::f64::consts::PI;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Nodes on the first grid.
    pub start_nodes: usize,
    /// Successive grids agreeing this closely are accepted.
    pub tolerance: f64,
    /// Looser agreement accepted once `max_nodes` is reached.
    pub accept_tolerance: f64,
    pub max_nodes: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { start_nodes: 512, tolerance: 1e-10, accept_tolerance: 1e-8, max_nodes: 1 << 18 }
    }
}

impl QuadratureConfig {
    pub fn with_start_nodes(mut self, nodes: usize) -> Self {
        self.start_nodes = nodes.max(1);
        self
    }
}

/// Trapezoid nodes `−π + 2πj/n`.
pub fn trapezoid_nodes(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |j| -PI + 2.0 * PI * j as f64 / n as f64)
}

/// Midpoint nodes `−π + 2π(j + ½)/n`; they avoid `k ∈ {0, ±π/2, ±π}`.
pub fn midpoint_nodes(n: usize) -> impl Iterator<Item = f64> {
    (0..n).map(move |j| -PI + 2.0 * PI * (j as f64 + 0.5) / n as f64)
}

/// `(1/2π) ∫_{−π}^{π} f(k) dk` by the trapezoid rule on `n` nodes.
pub fn periodic_mean(n: usize, f: impl FnMut(f64) -> f64) -> f64 {
    trapezoid_nodes(n).map(f).sum::<f64>() / n as f64
}

/// Evaluates `eval(n)` on doubling grids until two successive results differ
/// by at most `config.tolerance` under `distance`.
///
/// Returns the finer result and its node count.
pub fn converge<T>(
    config: &QuadratureConfig,
    mut eval: impl FnMut(usize) -> Result<T>,
    distance: impl Fn(&T, &T) -> f64,
) -> Result<(T, usize)> {
    let mut nodes = config.start_nodes.max(1);
    let mut previous = eval(nodes)?;
    loop {
        let finer_nodes = nodes * 2;
        let finer = eval(finer_nodes)?;
        let difference = distance(&previous, &finer);
        if difference <= config.tolerance {
            return Ok((finer, finer_nodes));
        }
        if finer_nodes >= config.max_nodes {
            if difference <= config.accept_tolerance {
                return Ok((finer, finer_nodes));
            }
            return Err(Error::QuadratureNotConverged { nodes: finer_nodes, difference });
        }
        previous = finer;
        nodes = finer_nodes;
    }
}
