//! The Fourier solution of the line walk checked against dense operators.

mod common;

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::DVector;
use num_complex::Complex64;
use proptest::prelude::*;

use sqw::graph::line_tessellations;
use sqw::line::quadrature::QuadratureConfig;
use sqw::line::{
    asymptotic_odd_moment, asymptotic_sigma2, closed_form_sigma2, closed_form_sigma2_ratio, coefficients_ab,
    evolve_line, reduced_block, ring_wavefunction, LineParams,
};
use sqw::operators::{dense_matrix, DEFAULT_DENSE_CAP};
use sqw::simulation::{line_evolution, ring_index, safe_ring_size, trajectory};
use sqw::{Graph, OrthogonalReflection, WalkState};

/// `Σ_{s ≡ parity} e^{−iks}|s⟩` on a ring of `n` sites.
fn plane_wave(n: usize, k: f64, parity: usize) -> DVector<Complex64> {
    DVector::from_fn(n, |s, _| {
        if s % 2 == parity {
            Complex64::from_polar(1.0, -k * s as f64)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

fn angle() -> impl Strategy<Value = f64> {
    -PI..PI
}

fn tess_angle() -> impl Strategy<Value = f64> {
    0.05..(PI - 0.05)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The dense ring operator maps each plane wave into the span of the
    /// two plane waves of that momentum, with coefficients A and B.
    #[test]
    fn blocks_match_dense_operator(
        half in 2usize..12, m in 0usize..64,
        theta in angle(), alpha in tess_angle(), beta in tess_angle(), phi0 in angle(), phi1 in angle(),
    ) {
        let n = 2 * half;
        let k = 2.0 * PI * (m % n) as f64 / n as f64;
        let u = dense_matrix(&line_evolution(n, theta, theta, alpha, beta, phi0, phi1).unwrap(), DEFAULT_DENSE_CAP).unwrap();
        let p = LineParams::new(theta, alpha, beta, phi0, phi1).unwrap();
        let block = reduced_block(&p, k).matrix();
        for col in [0, 1] {
            let image = &u * plane_wave(n, k, col);
            let expected = plane_wave(n, k, 0) * block[0][col] + plane_wave(n, k, 1) * block[1][col];
            let gap = (image - expected).iter().map(|x| x.norm()).fold(0.0, f64::max);
            prop_assert!(gap < 1e-12, "momentum {k}, column {col}: {gap}");
        }
    }

    #[test]
    fn ring_solution_is_exact(
        half in 2usize..10, t in 0u32..40,
        theta in angle(), alpha in tess_angle(), beta in tess_angle(), phi0 in angle(), phi1 in angle(),
        seed in any::<u64>(),
    ) {
        let n = 2 * half;
        let psi0 = common::random_state(&mut common::rng(seed), n);
        let u = line_evolution(n, theta, theta, alpha, beta, phi0, phi1).unwrap();
        let simulated = trajectory(&u, &psi0).unwrap().nth(t as usize).unwrap();
        let p = LineParams::new(theta, alpha, beta, phi0, phi1).unwrap();
        let exact = ring_wavefunction(&p, t, &psi0).unwrap();
        prop_assert!(common::max_entry_distance(&exact, &simulated) < 1e-11);
    }

    #[test]
    fn line_solution_matches_wide_ring(
        t in 0usize..24, theta in angle(), alpha in tess_angle(), beta in tess_angle(), phi0 in angle(),
        start in -3i64..=3, odd_weight in 0.0f64..1.0,
    ) {
        let ring = safe_ring_size(t) + 8;
        let a = Complex64::new((1.0 - odd_weight).sqrt(), 0.0);
        let b = Complex64::new(0.0, odd_weight.sqrt());
        let initial = [(start, a), (start + 1, b)];
        let mut amps = vec![Complex64::new(0.0, 0.0); ring];
        for &(x, c) in &initial {
            amps[ring_index(x, ring)] = c;
        }
        let u = line_evolution(ring, theta, theta, alpha, beta, phi0, 0.0).unwrap();
        let simulated = trajectory(&u, &WalkState::new(amps).unwrap()).unwrap().nth(t).unwrap();
        let p = LineParams::new(theta, alpha, beta, phi0, 0.0).unwrap();
        let reach = 2 * t as i64 + 6;
        let exact = evolve_line(&p, t as u32, &initial, -reach..=reach, &QuadratureConfig::default()).unwrap();
        for (x, amp) in (-reach..=reach).zip(&exact) {
            prop_assert!((amp - simulated[ring_index(x, ring)]).norm() < 1e-8);
        }
    }

    #[test]
    fn leading_moment_matches_closed_form(theta in 0.0f64..PI, alpha in 0.05f64..FRAC_PI_2) {
        let p = LineParams::symmetric(theta, alpha).unwrap();
        let config = QuadratureConfig::default();
        let t = 100.0;
        let numeric = asymptotic_sigma2(&p, t, &config).unwrap();
        let closed = closed_form_sigma2(theta, alpha, t).unwrap();
        prop_assert!((numeric - closed).abs() <= 1e-6 * closed.abs().max(1e-12), "{numeric} vs {closed}");
    }

    #[test]
    fn coefficients_are_normalised(
        theta in angle(), alpha in tess_angle(), beta in tess_angle(), phi0 in angle(), phi1 in angle(), k in angle(),
    ) {
        let p = LineParams::new(theta, alpha, beta, phi0, phi1).unwrap();
        let (a, b) = coefficients_ab(&p, k);
        prop_assert!((a.norm_sqr() + b.norm_sqr() - 1.0).abs() < 1e-12);
    }
}

#[test]
fn b_vanishes_at_the_standard_point() {
    let p = LineParams::symmetric(FRAC_PI_2, FRAC_PI_2).unwrap();
    for i in 0..=1000 {
        let k = -PI + 2.0 * PI * i as f64 / 1000.0;
        let block = reduced_block(&p, k);
        assert!(block.b.norm() <= 1e-12);
        assert!((block.a.norm() - 1.0).abs() <= 1e-12);
    }
}

#[test]
fn first_moment_of_the_hadamard_like_walk() {
    // at α = π/2 the leading ⟨x⟩/t is 2(1 − cos θ)
    let p = LineParams::symmetric(PI / 4.0, FRAC_PI_2).unwrap();
    let first = asymptotic_odd_moment(&p, 1, 1.0, &QuadratureConfig::default()).unwrap();
    assert!((first - (1.0 - 0.5f64.sqrt()) * 2.0).abs() < 1e-10, "{first}");
    let ratio = closed_form_sigma2_ratio(PI / 4.0, FRAC_PI_2).unwrap();
    assert!(((2.0 - first) * first - ratio).abs() < 1e-10);
}

#[test]
fn dense_reflections_square_to_identity() {
    for n in [4usize, 6, 10] {
        let g = Graph::cycle(n);
        let (a, b) = line_tessellations(n, 1.1, 2.3, 0.4, -0.9).unwrap();
        for t in [a, b] {
            let h = OrthogonalReflection::from_tessellation(&g, &t).unwrap().to_dense();
            let square = &h * &h;
            for i in 0..n {
                for j in 0..n {
                    let expected = if i == j { 1.0 } else { 0.0 };
                    assert!((square[(i, j)] - Complex64::new(expected, 0.0)).norm() < 1e-12);
                }
            }
        }
    }
}
