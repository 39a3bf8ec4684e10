use std::ops::Index;

use num_complex::Complex64;

use crate::{Error, Result, NORM_TOLERANCE};

/// Pure state of a walker: one complex amplitude per vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkState {
    amplitudes: Vec<Complex64>,
}

impl WalkState {
    /// Wraps an amplitude vector, rejecting it unless its norm is 1 within
    /// [`NORM_TOLERANCE`].
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let state = Self { amplitudes };
        let norm = state.norm();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized { norm, tolerance: NORM_TOLERANCE });
        }
        Ok(state)
    }

    /// Result of applying a unitary to a normalised state; not rechecked.
    pub(crate) fn from_unitary_image(amplitudes: Vec<Complex64>) -> Self {
        Self { amplitudes }
    }

    pub fn basis(dimension: usize, index: usize) -> Result<Self> {
        if index >= dimension {
            return Err(Error::OutOfRangeVertex { vertex: index, vertex_count: dimension });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dimension];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { amplitudes })
    }

    /// Equal-weight superposition of the listed basis vectors.
    pub fn uniform_over(dimension: usize, indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::EmptyPolygon);
        }
        let weight = Complex64::new(1.0 / (indices.len() as f64).sqrt(), 0.0);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dimension];
        for &i in indices {
            if i >= dimension {
                return Err(Error::OutOfRangeVertex { vertex: i, vertex_count: dimension });
            }
            if amplitudes[i] != Complex64::new(0.0, 0.0) {
                return Err(Error::DuplicateVertex(i));
            }
            amplitudes[i] = weight;
        }
        Ok(Self { amplitudes })
    }

    pub fn dimension(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &WalkState) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    pub(crate) fn check_dimension(&self, expected: usize) -> Result<()> {
        if self.dimension() != expected {
            return Err(Error::DimensionMismatch { expected, found: self.dimension() });
        }
        Ok(())
    }

    /// `min_φ ‖self − e^{iφ} other‖`, the distance between the rays.
    pub fn phase_distance(&self, other: &WalkState) -> f64 {
        let overlap = other.inner(self);
        let phase = if overlap.norm() > 0.0 { overlap / overlap.norm() } else { Complex64::new(1.0, 0.0) };
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - phase * b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }
}

impl Index<usize> for WalkState {
    type Output = Complex64;

    fn index(&self, index: usize) -> &Complex64 {
        &self.amplitudes[index]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unnormalised_vectors() {
        let v = vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        assert!(matches!(WalkState::new(v), Err(Error::NotNormalized { .. })));
    }

    #[test]
    fn phase_distance_ignores_global_phase() {
        let a = WalkState::uniform_over(3, &[0, 2]).unwrap();
        let rotated: Vec<_> = a.amplitudes().iter().map(|x| x * Complex64::from_polar(1.0, 1.3)).collect();
        let b = WalkState::new(rotated).unwrap();
        assert!(a.phase_distance(&b) < 1e-15);
        let c = WalkState::basis(3, 1).unwrap();
        assert!((a.phase_distance(&c) - 2f64.sqrt()).abs() < 1e-15);
    }
}
