//! Orthogonal reflections and the local unitaries they generate.
//!
//! A reflection is kept as its polygon vectors and applied in time linear in
//! their total support. Because `H² = I`, the exponential is exact:
//! `e^{iθH} = cos θ·I + i sin θ·H`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::graph::{validate_tessellation, Graph, Polygon, Tessellation};
use crate::{Error, Result, WalkState};

/// Largest dimension [`dense_matrix`] materialises by default.
pub const DEFAULT_DENSE_CAP: usize = 4096;

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

/// `H = 2 Σ_k |α_k⟩⟨α_k| − I` for orthonormal polygon vectors `α_k`.
///
/// Basis vectors outside every polygon are eigenvectors with eigenvalue −1.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalReflection {
    dimension: usize,
    polygons: Vec<Polygon>,
}

impl OrthogonalReflection {
    /// Reflection from polygon vectors with pairwise-disjoint supports.
    pub fn new(dimension: usize, polygons: Vec<Polygon>) -> Result<Self> {
        let mut used = vec![false; dimension];
        for polygon in &polygons {
            for &v in polygon.vertices() {
                if v >= dimension {
                    return Err(Error::OutOfRangeVertex { vertex: v, vertex_count: dimension });
                }
                if std::mem::replace(&mut used[v], true) {
                    return Err(Error::OverlappingPolygons(v));
                }
            }
        }
        Ok(Self { dimension, polygons })
    }

    /// Reflection induced by a tessellation of `g`, which is validated first.
    pub fn from_tessellation(g: &Graph, t: &Tessellation) -> Result<Self> {
        validate_tessellation(g, t)?;
        Self::new(g.vertex_count(), t.polygons().to_vec())
    }

    /// `+I`: every basis vector is a polygon.
    pub fn identity(dimension: usize) -> Self {
        Self::from_tessellation(&Graph::new(dimension, []).expect("no edges"), &Tessellation::singletons(dimension))
            .expect("singletons tessellate any graph")
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn apply(&self, psi: &WalkState) -> Result<WalkState> {
        psi.check_dimension(self.dimension)?;
        Ok(WalkState::from_unitary_image(self.combine(psi.amplitudes(), -Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0))))
    }

    /// `scale·ψ + weight·Σ_k ⟨α_k|ψ⟩ α_k`, the shape of every operator here.
    fn combine(&self, psi: &[Complex64], scale: Complex64, weight: Complex64) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = psi.iter().map(|a| scale * a).collect();
        for polygon in &self.polygons {
            let overlap: Complex64 = polygon.iter().map(|(v, a)| a.conj() * psi[v]).sum();
            let overlap = weight * overlap;
            for (v, a) in polygon.iter() {
                out[v] += overlap * a;
            }
        }
        out
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        let mut m = -DMatrix::<Complex64>::identity(self.dimension, self.dimension);
        for polygon in &self.polygons {
            for (u, a) in polygon.iter() {
                for (v, b) in polygon.iter() {
                    m[(u, v)] += 2.0 * a * b.conj();
                }
            }
        }
        m
    }
}

pub fn reflection_from_tessellation(g: &Graph, t: &Tessellation) -> Result<OrthogonalReflection> {
    OrthogonalReflection::from_tessellation(g, t)
}

/// `2 Σ_k ⟨α_k|ψ⟩ α_k − ψ`.
pub fn apply_reflection(h: &OrthogonalReflection, psi: &WalkState) -> Result<WalkState> {
    h.apply(psi)
}

/// `e^{iθH}` for an orthogonal reflection `H`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalUnitary {
    angle: f64,
    reflection: OrthogonalReflection,
}

impl LocalUnitary {
    pub fn new(angle: f64, reflection: OrthogonalReflection) -> Self {
        Self { angle, reflection }
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn reflection(&self) -> &OrthogonalReflection {
        &self.reflection
    }

    pub fn dimension(&self) -> usize {
        self.reflection.dimension
    }

    pub fn apply(&self, psi: &WalkState) -> Result<WalkState> {
        psi.check_dimension(self.dimension())?;
        Ok(WalkState::from_unitary_image(self.apply_raw(psi.amplitudes())))
    }

    // cos θ ψ + i sin θ (2Σ⟨α|ψ⟩α − ψ)
    fn apply_raw(&self, psi: &[Complex64]) -> Vec<Complex64> {
        let (sin, cos) = self.angle.sin_cos();
        self.reflection.combine(psi, Complex64::new(cos, -sin), 2.0 * I * sin)
    }
}

/// `cos θ·ψ + i sin θ·Hψ`.
pub fn apply_exp(u: &LocalUnitary, psi: &WalkState) -> Result<WalkState> {
    u.apply(psi)
}

/// `ψ − (1 − e^{2iθ}) Σ_k ⟨α_k|ψ⟩ α_k`, which is `e^{iθ}·e^{iθH}ψ`.
///
/// With a single uniform polygon over all vertices this is the phase-matched
/// Grover operator `I − (1 − e^{iφ})|s⟩⟨s|` at `φ = 2θ`.
pub fn grover_phase_apply(theta: f64, h: &OrthogonalReflection, psi: &WalkState) -> Result<WalkState> {
    psi.check_dimension(h.dimension)?;
    let weight = Complex64::from_polar(1.0, 2.0 * theta) - 1.0;
    Ok(WalkState::from_unitary_image(h.combine(psi.amplitudes(), Complex64::new(1.0, 0.0), weight)))
}

/// Product of local unitaries; `factors()[0]` acts first.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionOperator {
    factors: Vec<LocalUnitary>,
}

impl EvolutionOperator {
    pub fn new(factors: Vec<LocalUnitary>) -> Result<Self> {
        let first = factors.first().ok_or(Error::EmptyFactorList)?;
        let dimension = first.dimension();
        if let Some(bad) = factors.iter().find(|f| f.dimension() != dimension) {
            return Err(Error::DimensionMismatch { expected: dimension, found: bad.dimension() });
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[LocalUnitary] {
        &self.factors
    }

    pub fn dimension(&self) -> usize {
        self.factors[0].dimension()
    }

    /// One step of the walk.
    pub fn step(&self, psi: &WalkState) -> Result<WalkState> {
        psi.check_dimension(self.dimension())?;
        Ok(self.step_unchecked(psi))
    }

    pub(crate) fn step_unchecked(&self, psi: &WalkState) -> WalkState {
        let mut amplitudes = self.factors[0].apply_raw(psi.amplitudes());
        for factor in &self.factors[1..] {
            amplitudes = factor.apply_raw(&amplitudes);
        }
        WalkState::from_unitary_image(amplitudes)
    }
}

/// Composes `(θ, H)` factors; the first pair is applied first.
pub fn compose(factors: Vec<(f64, OrthogonalReflection)>) -> Result<EvolutionOperator> {
    EvolutionOperator::new(factors.into_iter().map(|(theta, h)| LocalUnitary::new(theta, h)).collect())
}

/// Matrix of one step, column `j` being the image of basis vector `j`.
pub fn dense_matrix(u: &EvolutionOperator, cap: usize) -> Result<DMatrix<Complex64>> {
    let n = u.dimension();
    if n > cap {
        return Err(Error::DimensionCapExceeded { dimension: n, cap });
    }
    let mut m = DMatrix::zeros(n, n);
    for j in 0..n {
        let column = u.step_unchecked(&WalkState::basis(n, j)?);
        for (i, a) in column.amplitudes().iter().enumerate() {
            m[(i, j)] = *a;
        }
    }
    Ok(m)
}

/// Largest entry of `M†M − I`.
pub fn unitarity_defect(m: &DMatrix<Complex64>) -> f64 {
    let product = m.adjoint() * m;
    let identity = DMatrix::<Complex64>::identity(m.nrows(), m.ncols());
    (product - identity).iter().map(|x| x.norm()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::line_tessellations;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn max_diff(a: &WalkState, b: &WalkState) -> f64 {
        a.amplitudes().iter().zip(b.amplitudes()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    fn ring4_reflections() -> (OrthogonalReflection, OrthogonalReflection) {
        let ring = Graph::cycle(4);
        let (a, b) = line_tessellations(4, PI / 2.0, PI / 2.0, 0.0, 0.0).unwrap();
        (
            OrthogonalReflection::from_tessellation(&ring, &a).unwrap(),
            OrthogonalReflection::from_tessellation(&ring, &b).unwrap(),
        )
    }

    fn pauli_x_blocks(pairs: &[(usize, usize)], n: usize) -> DMatrix<Complex64> {
        let mut m = DMatrix::zeros(n, n);
        for &(u, v) in pairs {
            m[(u, v)] = c(1.0, 0.0);
            m[(v, u)] = c(1.0, 0.0);
        }
        m
    }

    #[test]
    fn singleton_reflection_is_identity() {
        let h = OrthogonalReflection::identity(5);
        assert!((h.to_dense() - DMatrix::identity(5, 5)).iter().all(|x| x.norm() < 1e-15));
        let psi = WalkState::uniform_over(5, &[1, 3]).unwrap();
        assert!(max_diff(&apply_reflection(&h, &psi).unwrap(), &psi) < 1e-15);
    }

    #[test]
    fn uniform_pairs_give_pauli_x_blocks() {
        let (h0, h1) = ring4_reflections();
        let x0 = pauli_x_blocks(&[(0, 1), (2, 3)], 4);
        let x1 = pauli_x_blocks(&[(1, 2), (3, 0)], 4);
        assert!((h0.to_dense() - x0).iter().all(|x| x.norm() < 1e-15));
        assert!((h1.to_dense() - x1).iter().all(|x| x.norm() < 1e-15));

        let image = apply_reflection(&h0, &WalkState::basis(4, 0).unwrap()).unwrap();
        assert!(max_diff(&image, &WalkState::basis(4, 1).unwrap()) < 1e-15);
    }

    #[test]
    fn unsupported_basis_vector_is_negated() {
        let h = OrthogonalReflection::new(3, vec![Polygon::uniform(&[0, 1]).unwrap()]).unwrap();
        let image = h.apply(&WalkState::basis(3, 2).unwrap()).unwrap();
        assert!((image[2] - c(-1.0, 0.0)).norm() < 1e-15);
        assert!(image[0].norm() < 1e-15 && image[1].norm() < 1e-15);
    }

    #[test]
    fn polygon_vector_is_fixed() {
        let (h0, _) = ring4_reflections();
        let alpha = WalkState::uniform_over(4, &[0, 1]).unwrap();
        assert!(max_diff(&h0.apply(&alpha).unwrap(), &alpha) < 1e-15);
    }

    #[test]
    fn overlapping_supports_rejected() {
        let polys = vec![Polygon::uniform(&[0, 1]).unwrap(), Polygon::uniform(&[1, 2]).unwrap()];
        assert_eq!(OrthogonalReflection::new(3, polys), Err(Error::OverlappingPolygons(1)));
    }

    #[test]
    fn exponential_special_angles() {
        let (h0, _) = ring4_reflections();
        let psi = WalkState::basis(4, 0).unwrap();

        let still = apply_exp(&LocalUnitary::new(0.0, h0.clone()), &psi).unwrap();
        assert!(max_diff(&still, &psi) < 1e-15);

        let quarter = apply_exp(&LocalUnitary::new(PI / 2.0, h0.clone()), &psi).unwrap();
        let expected = WalkState::from_unitary_image(h0.apply(&psi).unwrap().amplitudes().iter().map(|a| I * a).collect());
        assert!(max_diff(&quarter, &expected) < 1e-15);

        let eighth = apply_exp(&LocalUnitary::new(PI / 4.0, h0), &psi).unwrap();
        assert!((eighth[0] - c(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((eighth[1] - c(0.0, FRAC_1_SQRT_2)).norm() < 1e-15);
    }

    #[test]
    fn grover_phase_special_angles() {
        let (h0, _) = ring4_reflections();
        let psi = WalkState::new(vec![c(0.5, 0.0), c(0.0, 0.5), c(-0.5, 0.0), c(0.5, 0.0)]).unwrap();
        assert!(max_diff(&grover_phase_apply(0.0, &h0, &psi).unwrap(), &psi) < 1e-15);

        let negated = grover_phase_apply(PI / 2.0, &h0, &psi).unwrap();
        let h_psi = h0.apply(&psi).unwrap();
        let minus_h_psi = WalkState::from_unitary_image(h_psi.amplitudes().iter().map(|a| -a).collect());
        assert!(max_diff(&negated, &minus_h_psi) < 1e-15);
    }

    #[test]
    fn standard_walk_recovery_on_ring4() {
        let (h0, h1) = ring4_reflections();
        let product = h1.to_dense() * h0.to_dense();
        let u = compose(vec![(-PI / 2.0, h0), (PI / 2.0, h1)]).unwrap();
        let m = dense_matrix(&u, DEFAULT_DENSE_CAP).unwrap();
        assert!((m - product).iter().all(|x| x.norm() < 1e-15));
    }

    #[test]
    fn compose_errors_and_shapes() {
        assert_eq!(compose(vec![]), Err(Error::EmptyFactorList));
        let (h0, h1) = ring4_reflections();
        let mismatched = compose(vec![(0.1, h0.clone()), (0.2, OrthogonalReflection::identity(3))]);
        assert_eq!(mismatched, Err(Error::DimensionMismatch { expected: 4, found: 3 }));

        let single = compose(vec![(0.3, h0.clone())]).unwrap();
        let psi = WalkState::basis(4, 2).unwrap();
        assert_eq!(single.step(&psi).unwrap(), apply_exp(&LocalUnitary::new(0.3, h0.clone()), &psi).unwrap());

        let three = compose(vec![(0.3, h0.clone()), (0.7, h1), (-0.2, h0)]).unwrap();
        assert_eq!(three.factors().len(), 3);
        assert!(unitarity_defect(&dense_matrix(&three, 16).unwrap()) < 1e-12);
        assert!(matches!(three.step(&WalkState::basis(3, 0).unwrap()), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn dense_matrix_cap_and_identity() {
        let identity = compose(vec![(0.0, OrthogonalReflection::identity(6))]).unwrap();
        let m = dense_matrix(&identity, DEFAULT_DENSE_CAP).unwrap();
        assert!((m - DMatrix::identity(6, 6)).iter().all(|x| x.norm() < 1e-15));
        assert_eq!(
            dense_matrix(&identity, 5),
            Err(Error::DimensionCapExceeded { dimension: 6, cap: 5 })
        );
    }
}
