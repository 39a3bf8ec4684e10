//! State trajectories, probability distributions and moments.

use std::collections::HashMap;
use std::io::{self, Write};

use crate::graph::{line_tessellations, Graph};
use crate::operators::{compose, EvolutionOperator, OrthogonalReflection};
use crate::{Error, Result};

pub use crate::state::WalkState;

/// Evolves `psi0` for `steps` steps and keeps every state, `psi0` first.
pub fn evolve(u: &EvolutionOperator, psi0: &WalkState, steps: usize) -> Result<Vec<WalkState>> {
    Ok(trajectory(u, psi0)?.take(steps + 1).collect())
}

/// Endless stream `ψ0, Uψ0, U²ψ0, …` holding only the current state.
pub fn trajectory<'a>(u: &'a EvolutionOperator, psi0: &WalkState) -> Result<Trajectory<'a>> {
    psi0.check_dimension(u.dimension())?;
    Ok(Trajectory { operator: u, next: Some(psi0.clone()) })
}

pub struct Trajectory<'a> {
    operator: &'a EvolutionOperator,
    next: Option<WalkState>,
}

impl Iterator for Trajectory<'_> {
    type Item = WalkState;

    fn next(&mut self) -> Option<WalkState> {
        let current = self.next.take()?;
        self.next = Some(self.operator.step_unchecked(&current));
        Some(current)
    }
}

/// Walk on a ring of `ring_size` sites, `e^{iθ₁H₁} e^{iθ₀H₀}` with the line
/// tessellations.
pub fn line_evolution(
    ring_size: usize,
    theta0: f64,
    theta1: f64,
    alpha: f64,
    beta: f64,
    phi0: f64,
    phi1: f64,
) -> Result<EvolutionOperator> {
    let ring = Graph::cycle(ring_size);
    let (first, second) = line_tessellations(ring_size, alpha, beta, phi0, phi1)?;
    compose(vec![
        (theta0, OrthogonalReflection::from_tessellation(&ring, &first)?),
        (theta1, OrthogonalReflection::from_tessellation(&ring, &second)?),
    ])
}

/// Line coordinate of each ring index: `i` below `n/2`, `i − n` above.
pub fn line_labels(ring_size: usize) -> Vec<i64> {
    let half = ring_size / 2;
    (0..ring_size).map(|i| if i < half { i as i64 } else { i as i64 - ring_size as i64 }).collect()
}

/// Ring index of a line coordinate.
pub fn ring_index(position: i64, ring_size: usize) -> usize {
    position.rem_euclid(ring_size as i64) as usize
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    probabilities: Vec<f64>,
    positions: Vec<i64>,
}

impl ProbabilityDistribution {
    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn positions(&self) -> &[i64] {
        &self.positions
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    /// `(position, probability)` sorted by position.
    pub fn sorted(&self) -> Vec<(i64, f64)> {
        let mut rows: Vec<_> = self.positions.iter().copied().zip(self.probabilities.iter().copied()).collect();
        rows.sort_by_key(|&(x, _)| x);
        rows
    }

    /// Probability of each position, summing duplicates.
    pub fn by_position(&self) -> HashMap<i64, f64> {
        let mut map = HashMap::new();
        for (&x, &p) in self.positions.iter().zip(&self.probabilities) {
            *map.entry(x).or_insert(0.0) += p;
        }
        map
    }

    /// `max_x |p(x) − p(axis − x)|`: zero when the distribution is symmetric
    /// about `axis / 2`.
    pub fn mirror_defect(&self, axis: i64) -> f64 {
        let map = self.by_position();
        map.iter()
            .map(|(&x, &p)| (p - map.get(&(axis - x)).copied().unwrap_or(0.0)).abs())
            .fold(0.0, f64::max)
    }

    /// Mass at positive positions minus mass at negative positions.
    pub fn side_imbalance(&self) -> f64 {
        self.positions
            .iter()
            .zip(&self.probabilities)
            .map(|(&x, &p)| p * x.signum() as f64)
            .sum()
    }
}

/// `p_v = |ψ_v|²` tagged with the given position labels.
pub fn distribution(psi: &WalkState, positions: &[i64]) -> Result<ProbabilityDistribution> {
    if positions.len() != psi.dimension() {
        return Err(Error::LabelMismatch { labels: positions.len(), dimension: psi.dimension() });
    }
    Ok(ProbabilityDistribution {
        probabilities: psi.amplitudes().iter().map(|a| a.norm_sqr()).collect(),
        positions: positions.to_vec(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MomentSummary {
    pub step: usize,
    pub mean: f64,
    pub second: f64,
    pub sigma: f64,
    /// `raw[n] = ⟨xⁿ⟩`, starting at `n = 0`.
    pub raw: Vec<f64>,
}

impl MomentSummary {
    pub fn with_step(mut self, step: usize) -> Self {
        self.step = step;
        self
    }

    pub fn variance(&self) -> f64 {
        self.sigma * self.sigma
    }
}

/// Raw moments `⟨xⁿ⟩ = Σ p_v xⁿ` up to `max_order` (at least 2).
pub fn moments(d: &ProbabilityDistribution, max_order: usize) -> MomentSummary {
    let order = max_order.max(2);
    let mut raw = vec![0.0; order + 1];
    for (&x, &p) in d.positions.iter().zip(&d.probabilities) {
        let x = x as f64;
        let mut power = p;
        for slot in raw.iter_mut() {
            *slot += power;
            power *= x;
        }
    }
    let (mean, second) = (raw[1], raw[2]);
    let sigma = (second - mean * mean).max(0.0).sqrt();
    MomentSummary { step: 0, mean, second, sigma, raw }
}

/// Probability within `guard_band` ring steps of the point opposite `origin`.
pub fn antipodal_mass(psi: &WalkState, origin: usize, guard_band: usize) -> f64 {
    let n = psi.dimension();
    let antipode = (origin + n / 2) % n;
    let reach = guard_band.min(n / 2);
    let mut indices: Vec<usize> = (0..=reach)
        .flat_map(|d| [(antipode + d) % n, (antipode + n - d) % n])
        .collect();
    indices.sort_unstable();
    indices.dedup();
    indices.into_iter().map(|i| psi[i].norm_sqr()).sum()
}

/// Threshold on the antipodal mass tolerated by [`wrap_check`].
pub const WRAP_TOLERANCE: f64 = 1e-12;

/// Certifies that a ring run never let probability near the antipode of
/// `origin`, so it agrees with the walk on the infinite line.
pub fn wrap_check<'a>(
    trajectory: impl IntoIterator<Item = &'a WalkState>,
    origin: usize,
    guard_band: usize,
) -> Result<()> {
    for (step, psi) in trajectory.into_iter().enumerate() {
        if antipodal_mass(psi, origin, guard_band) >= WRAP_TOLERANCE {
            return Err(Error::WavefrontWrapped(step));
        }
    }
    Ok(())
}

/// Smallest ring that keeps a `steps`-step line walk started on sites {0, 1}
/// away from the antipode; the walk moves at most two sites per step.
pub fn safe_ring_size(steps: usize) -> usize {
    4 * (steps + 1) + 8
}

/// Writes `position\tprobability` rows (zero rows skipped) sorted by position.
pub fn write_distribution_tsv(d: &ProbabilityDistribution, mut w: impl Write) -> io::Result<()> {
    writeln!(w, "position\tprobability")?;
    for (x, p) in d.sorted() {
        if p != 0.0 {
            writeln!(w, "{x}\t{p:.16e}")?;
        }
    }
    Ok(())
}

pub fn write_moments_tsv(rows: &[MomentSummary], mut w: impl Write) -> io::Result<()> {
    writeln!(w, "t\tmean\tx2\tsigma")?;
    for m in rows {
        writeln!(w, "{}\t{:.16e}\t{:.16e}\t{:.16e}", m.step, m.mean, m.second, m.sigma)?;
    }
    Ok(())
}
