//! Fourier solution of the staggered walk on the line.
//!
//! With both tessellations pairing neighbouring sites and a common angle θ,
//! the walk `U = e^{iθH₁} e^{iθH₀}` leaves every plane spanned by
//!
//! ```text
//! |ψ̃⁰_k⟩ = Σ_x e^{−2xki} |2x⟩,      |ψ̃¹_k⟩ = Σ_x e^{−(2x+1)ki} |2x+1⟩
//! ```
//!
//! invariant and acts on it as the 2×2 matrix `[[A, −B*], [B, A*]]`. Its
//! eigenvalues are `e^{±iλ}` with `cos λ = Re A`. Everything in this module
//! is built from that block: wavefunctions are momentum averages of powers
//! of the block, and the ballistic moments come from its group velocity.

pub mod quadrature;

use std::f64::consts::{FRAC_PI_2, PI};
use std::io::{self, Write};
use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::simulation::WalkState;
use crate::{Error, Result};
use quadrature::{converge, midpoint_nodes, trapezoid_nodes, QuadratureConfig};

/// Below this `|B|` or `sin λ` a block counts as diagonal.
pub const DEGENERACY_EPS: f64 = 1e-10;

const SINGULAR_EPS: f64 = 1e-14;

/// Parameters of the line walk: common angle θ, tessellation angles α, β and
/// phases φ₀, φ₁.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineParams {
    pub theta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub phi0: f64,
    pub phi1: f64,
}

impl LineParams {
    pub fn new(theta: f64, alpha: f64, beta: f64, phi0: f64, phi1: f64) -> Result<Self> {
        for angle in [alpha, beta] {
            if !(angle > 0.0 && angle < PI) {
                return Err(Error::DegenerateAngle(angle));
            }
        }
        Ok(Self { theta, alpha, beta, phi0, phi1 })
    }

    /// `α = β`, zero phases.
    pub fn symmetric(theta: f64, alpha: f64) -> Result<Self> {
        Self::new(theta, alpha, alpha, 0.0, 0.0)
    }
}

/// Coefficients `(A, B)` of the block at momentum `k`.
pub fn coefficients_ab(p: &LineParams, k: f64) -> (Complex64, Complex64) {
    let (st, ct) = p.theta.sin_cos();
    let (sa, ca) = p.alpha.sin_cos();
    let (sb, cb) = p.beta.sin_cos();
    let i = Complex64::i();

    let a = st * st * (ca * cb - sa * sb * Complex64::from_polar(1.0, p.phi0 + p.phi1 + 2.0 * k))
        + ct * ct
        + i * st * ct * (ca - cb);
    let b = st * sa * (i * ct - st * cb) * Complex64::from_polar(1.0, p.phi0 + k)
        + st * sb * (i * ct - st * ca) * Complex64::from_polar(1.0, -(p.phi1 + k));
    (a, b)
}

/// The walk restricted to the momentum-`k` plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedBlock {
    pub k: f64,
    pub a: Complex64,
    pub b: Complex64,
    /// Eigenphase in `[0, π]`.
    pub lambda: f64,
    pub c_plus: Complex64,
    pub c_minus: Complex64,
    sin_lambda: f64,
    // sin λ ∓ Im A, computed without cancellation
    s_minus: f64,
    s_plus: f64,
}

pub fn reduced_block(p: &LineParams, k: f64) -> ReducedBlock {
    let (a, b) = coefficients_ab(p, k);
    ReducedBlock::from_coefficients(k, a, b)
}

impl ReducedBlock {
    /// Builds the block from `A` and `B`, assuming `|A|² + |B|² = 1`.
    ///
    /// `sin²λ = 1 − (Re A)² = |B|² + (Im A)²`; the second form keeps `λ`
    /// accurate near `0` and `π` where `arccos` is ill-conditioned.
    pub fn from_coefficients(k: f64, a: Complex64, b: Complex64) -> Self {
        let b2 = b.norm_sqr();
        let sin_lambda = (b2 + a.im * a.im).sqrt();
        let lambda = sin_lambda.atan2(a.re);
        // (sin λ − Im A)(sin λ + Im A) = |B|²
        let (s_minus, s_plus) = if a.im >= 0.0 {
            let s_plus = sin_lambda + a.im;
            (if s_plus > 0.0 { b2 / s_plus } else { 0.0 }, s_plus)
        } else {
            let s_minus = sin_lambda - a.im;
            (s_minus, b2 / s_minus)
        };
        Self {
            k,
            a,
            b,
            lambda,
            c_plus: Complex64::new(2.0 * sin_lambda * s_minus, 0.0),
            c_minus: Complex64::new(2.0 * sin_lambda * s_plus, 0.0),
            sin_lambda,
            s_minus,
            s_plus,
        }
    }

    pub fn sin_lambda(&self) -> f64 {
        self.sin_lambda
    }

    /// `[[A, −B*], [B, A*]]`, row-major.
    pub fn matrix(&self) -> [[Complex64; 2]; 2] {
        [[self.a, -self.b.conj()], [self.b, self.a.conj()]]
    }

    pub fn is_degenerate(&self, eps: f64) -> bool {
        self.b.norm() <= eps || self.sin_lambda <= eps
    }

    /// `U_RED^t` from the spectral decomposition `Σ± e^{±iλt} |v±⟩⟨v±|`.
    ///
    /// With the normalisation `C±` the projector entries reduce to
    /// `(sin λ ± Im A)/(2 sin λ)` on the diagonal and `∓iB/(2 sin λ)` off it.
    /// When `sin λ` vanishes the block is diagonal and `diag(Aᵗ, A*ᵗ)` is
    /// returned instead.
    pub fn power(&self, t: u32) -> [[Complex64; 2]; 2] {
        if self.sin_lambda <= DEGENERACY_EPS {
            let at = self.a.powu(t);
            return [[at, Complex64::new(0.0, 0.0)], [Complex64::new(0.0, 0.0), at.conj()]];
        }
        let forward = Complex64::from_polar(1.0, self.lambda * t as f64);
        let backward = forward.conj();
        let half = 0.5 / self.sin_lambda;
        let turn = (self.lambda * t as f64).sin() / self.sin_lambda;
        [
            [half * (self.s_plus * forward + self.s_minus * backward), -self.b.conj() * turn],
            [self.b * turn, half * (self.s_minus * forward + self.s_plus * backward)],
        ]
    }
}

/// Unit eigenvectors `(−B*, e^{±iλ} − A)/√C±` for eigenvalues `e^{+iλ}`
/// and `e^{−iλ}`, in that order.
pub fn block_eigenvectors(block: &ReducedBlock, eps: f64) -> Result<[[Complex64; 2]; 2]> {
    if block.is_degenerate(eps) {
        return Err(Error::DegenerateBlock);
    }
    let i = Complex64::i();
    // e^{iλ} − A = i(sin λ − Im A) and e^{−iλ} − A = −i(sin λ + Im A) since cos λ = Re A
    let plus = [-block.b.conj(), i * block.s_minus].map(|x| x / block.c_plus.re.sqrt());
    let minus = [-block.b.conj(), -i * block.s_plus].map(|x| x / block.c_minus.re.sqrt());
    Ok([plus, minus])
}

/// Momentum average `(1/n) Σ_k` of the propagated initial state, read out
/// at `positions` (line coordinates, also used as ring indices).
fn momentum_sum(
    p: &LineParams,
    t: u32,
    initial: &[(i64, Complex64)],
    positions: &[i64],
    nodes: impl Iterator<Item = f64>,
    n: usize,
) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); positions.len()];
    for k in nodes {
        let m = reduced_block(p, k).power(t);
        // |s⟩ = avg_k e^{iks} |ψ̃^{s mod 2}_k⟩
        let mut f = [Complex64::new(0.0, 0.0); 2];
        for &(s, amp) in initial {
            f[s.rem_euclid(2) as usize] += amp * Complex64::from_polar(1.0, k * s as f64);
        }
        let g = [m[0][0] * f[0] + m[0][1] * f[1], m[1][0] * f[0] + m[1][1] * f[1]];
        for (slot, &y) in out.iter_mut().zip(positions) {
            *slot += g[y.rem_euclid(2) as usize] * Complex64::from_polar(1.0, -k * y as f64);
        }
    }
    let scale = 1.0 / n as f64;
    out.iter_mut().for_each(|a| *a *= scale);
    out
}

fn max_difference(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Amplitudes at time `t` on the infinite line from an arbitrary finitely
/// supported initial state `(position, amplitude)`.
///
/// Even and odd starting sites enter through their own Fourier component, so
/// superpositions are handled by linearity.
pub fn evolve_line(
    p: &LineParams,
    t: u32,
    initial: &[(i64, Complex64)],
    positions: RangeInclusive<i64>,
    config: &QuadratureConfig,
) -> Result<Vec<Complex64>> {
    let positions: Vec<i64> = positions.collect();
    converge(
        config,
        |n| Ok(momentum_sum(p, t, initial, &positions, trapezoid_nodes(n), n)),
        |a, b| max_difference(a, b),
    )
    .map(|(amplitudes, _)| amplitudes)
}

/// `ψ_x(t)` for the walk started at `|0⟩`:
///
/// ```text
/// ψ_{2x}(t)   = ∫ dk/2π |B|² (e^{i(λt−2kx)}/C⁺ + e^{−i(λt+2kx)}/C⁻)
/// ψ_{2x+1}(t) = ∫ dk/2π (B sin λt / sin λ) e^{−(2x+1)ki}
/// ```
pub fn wavefunction(
    p: &LineParams,
    t: u32,
    positions: RangeInclusive<i64>,
    config: &QuadratureConfig,
) -> Result<Vec<Complex64>> {
    evolve_line(p, t, &[(0, Complex64::new(1.0, 0.0))], positions, config)
}

/// Exact state after `t` steps on a ring of `ring_size` sites.
///
/// The ring admits only the momenta `k = 2πm/ring_size`, so the momentum
/// integral becomes a finite sum and the result matches direct simulation up
/// to rounding.
pub fn ring_wavefunction(p: &LineParams, t: u32, initial: &WalkState) -> Result<WalkState> {
    let n = initial.dimension();
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::OddRingSize(n));
    }
    let support: Vec<(i64, Complex64)> = initial
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 0.0)
        .map(|(s, &a)| (s as i64, a))
        .collect();
    let positions: Vec<i64> = (0..n as i64).collect();
    Ok(WalkState::from_unitary_image(momentum_sum(p, t, &support, &positions, trapezoid_nodes(n), n)))
}

/// `(2 Im A / sin λ)^{2n}`, the integrand of the odd moments.
fn moment_integrand(p: &LineParams, k: f64, n: u32) -> Result<f64> {
    let block = reduced_block(p, k);
    let numerator = 2.0 * block.a.im;
    if block.sin_lambda <= SINGULAR_EPS {
        if numerator.abs() <= SINGULAR_EPS {
            // A = ±1: the block does not transport
            return Ok(0.0);
        }
        return Err(Error::SingularIntegrand(k));
    }
    Ok((numerator / block.sin_lambda).powi(2 * n as i32))
}

/// Leading-order `⟨x^{2n−1}⟩_t = t^{2n−1}/(4π) ∫ [(A − A*)/(i sin λ)]^{2n} dk`
/// for the walk started at `|0⟩`.
pub fn asymptotic_odd_moment(p: &LineParams, n: u32, t: f64, config: &QuadratureConfig) -> Result<f64> {
    if n == 0 {
        return Err(Error::DomainError("moment index n must be at least 1".into()));
    }
    let (mean, _) = converge(
        config,
        |nodes| {
            let mut sum = 0.0;
            for k in midpoint_nodes(nodes) {
                sum += moment_integrand(p, k, n)?;
            }
            Ok(sum / nodes as f64)
        },
        |a, b| (a - b).abs() / b.abs().max(1.0),
    )?;
    // ∫ dk = 2π · mean
    Ok(t.powi(2 * n as i32 - 1) * mean / 2.0)
}

/// Leading-order `σ² = (2t − ⟨x⟩_t)⟨x⟩_t`.
pub fn asymptotic_sigma2(p: &LineParams, t: f64, config: &QuadratureConfig) -> Result<f64> {
    let first = asymptotic_odd_moment(p, 1, t, config)?;
    Ok((2.0 * t - first) * first)
}

/// `σ²/t² = 4√(1 − sin²θ sin²α)(1 − √(1 − sin²θ sin²α))` for `α = β ≤ π/2`
/// and zero phases.
pub fn closed_form_sigma2_ratio(theta: f64, alpha: f64) -> Result<f64> {
    if !(0.0..=FRAC_PI_2).contains(&alpha) {
        return Err(Error::DomainError(format!("closed form needs 0 <= alpha <= pi/2, got {alpha}")));
    }
    // 1 − sin²θ sin²α without cancellation
    let (st, ct) = theta.sin_cos();
    let root = (ct * ct + st * st * alpha.cos().powi(2)).sqrt();
    Ok(4.0 * root * (1.0 - root))
}

pub fn closed_form_sigma2(theta: f64, alpha: f64, t: f64) -> Result<f64> {
    Ok(closed_form_sigma2_ratio(theta, alpha)? * t * t)
}

/// Where `σ²/t²` reaches its maximum 1: `sin²θ sin²α = 3/4`. Returns the
/// `α ≤ π/2` on that locus for the given θ, if any.
pub fn unit_spread_alpha(theta: f64) -> Option<f64> {
    let s = theta.sin().powi(2);
    let target = 0.75 / s;
    (s > 0.0 && target <= 1.0).then(|| target.sqrt().asin())
}

/// Inclusive uniform grid; a single point sits at `start`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn new(start: f64, end: f64, count: usize) -> Self {
        Self { start, end, count }
    }

    pub fn points(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.start],
            n => (0..n).map(|i| self.start + (self.end - self.start) * i as f64 / (n - 1) as f64).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfacePoint {
    pub theta: f64,
    pub alpha: f64,
    pub sigma2_over_t2: f64,
}

/// `σ²/t²` over a (θ, α) grid inside `[0, π]²`, using `sin²α = sin²(π − α)`
/// for `α > π/2`.
pub fn sigma2_surface(thetas: &GridAxis, alphas: &GridAxis) -> Result<Vec<SurfacePoint>> {
    let (thetas, alphas) = (thetas.points(), alphas.points());
    if let Some(bad) = thetas.iter().chain(&alphas).find(|x| !(0.0..=PI).contains(*x)) {
        return Err(Error::DomainError(format!("grid value {bad} outside [0, pi]")));
    }
    let mut rows = Vec::with_capacity(thetas.len() * alphas.len());
    for &theta in &thetas {
        for &alpha in &alphas {
            let folded = if alpha > FRAC_PI_2 { PI - alpha } else { alpha };
            rows.push(SurfacePoint { theta, alpha, sigma2_over_t2: closed_form_sigma2_ratio(theta, folded)? });
        }
    }
    Ok(rows)
}

/// Blocks at `count` equally spaced momenta covering `[−π, π]`.
pub fn block_table(p: &LineParams, count: usize) -> Vec<ReducedBlock> {
    GridAxis::new(-PI, PI, count).points().into_iter().map(|k| reduced_block(p, k)).collect()
}

pub fn write_block_table_tsv(blocks: &[ReducedBlock], mut w: impl Write) -> io::Result<()> {
    writeln!(w, "k\tReA\tImA\tReB\tImB\tlambda")?;
    for b in blocks {
        writeln!(
            w,
            "{:.16e}\t{:.16e}\t{:.16e}\t{:.16e}\t{:.16e}\t{:.16e}",
            b.k, b.a.re, b.a.im, b.b.re, b.b.im, b.lambda
        )?;
    }
    Ok(())
}

pub fn write_surface_tsv(points: &[SurfacePoint], mut w: impl Write) -> io::Result<()> {
    writeln!(w, "theta\talpha\tsigma2_over_t2")?;
    for p in points {
        writeln!(w, "{:.16e}\t{:.16e}\t{:.16e}", p.theta, p.alpha, p.sigma2_over_t2)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_4;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol
    }

    fn walk(theta: f64) -> LineParams {
        LineParams::symmetric(theta, FRAC_PI_2).unwrap()
    }

    #[test]
    fn rejects_degenerate_tessellation_angles() {
        assert_eq!(LineParams::symmetric(0.3, 0.0), Err(Error::DegenerateAngle(0.0)));
        assert_eq!(LineParams::new(0.3, 1.0, PI, 0.0, 0.0), Err(Error::DegenerateAngle(PI)));
    }

    #[test]
    fn coefficients_at_theta_zero() {
        let (a, b) = coefficients_ab(&LineParams::new(0.0, 0.7, 1.9, 0.3, -1.1).unwrap(), 0.4);
        assert!(close(a, Complex64::new(1.0, 0.0), 1e-15));
        assert!(b.norm() < 1e-15);
    }

    #[test]
    fn coefficients_at_quarter_turn() {
        // A = (1 − e^{2ik})/2, B = i cos k
        let p = walk(FRAC_PI_4);
        for k in [-3.0, -1.2, 0.0, 0.5, 2.2] {
            let (a, b) = coefficients_ab(&p, k);
            assert!(close(a, (1.0 - Complex64::from_polar(1.0, 2.0 * k)) / 2.0, 1e-15));
            assert!(close(b, Complex64::new(0.0, k.cos()), 1e-15));
        }
    }

    #[test]
    fn coefficients_at_half_turn() {
        // A = −e^{2ik}, B = 0
        let p = walk(FRAC_PI_2);
        for k in [-2.5, 0.0, 0.9, 3.1] {
            let (a, b) = coefficients_ab(&p, k);
            assert!(close(a, -Complex64::from_polar(1.0, 2.0 * k), 1e-15));
            assert!(b.norm() < 1e-12);
        }
    }

    #[test]
    fn reduced_block_examples() {
        let still = reduced_block(&LineParams::symmetric(0.0, 1.0).unwrap(), 0.3);
        assert!(close(still.a, Complex64::new(1.0, 0.0), 1e-15));
        assert_eq!(still.lambda, 0.0);
        assert!(still.c_plus.norm() < 1e-15 && still.c_minus.norm() < 1e-15);

        let block = reduced_block(&walk(FRAC_PI_4), FRAC_PI_4);
        assert!((block.a.re - 0.5).abs() < 1e-15);
        assert!((block.lambda - PI / 3.0).abs() < 1e-15);

        let block = reduced_block(&walk(FRAC_PI_4), 0.0);
        assert!(block.a.norm() < 1e-15);
        assert!((block.lambda - FRAC_PI_2).abs() < 1e-15);
        assert!(close(block.b, Complex64::i(), 1e-15));
    }

    #[test]
    fn c_coefficients_match_their_definition() {
        let p = LineParams::new(0.9, 1.2, 0.5, 0.4, -0.8).unwrap();
        for k in [-2.0, -0.3, 0.7, 1.9] {
            let b = reduced_block(&p, k);
            let s = b.sin_lambda();
            let i = Complex64::i();
            assert!(close(b.c_plus, s * (2.0 * s + i * (b.a - b.a.conj())), 1e-12));
            assert!(close(b.c_minus, s * (2.0 * s - i * (b.a - b.a.conj())), 1e-12));
            assert!((b.lambda.cos() - b.a.re).abs() < 1e-12);
        }
    }

    #[test]
    fn eigenvectors_have_small_residuals() {
        let block = reduced_block(&walk(FRAC_PI_4), FRAC_PI_4);
        let m = block.matrix();
        let vectors = block_eigenvectors(&block, DEGENERACY_EPS).unwrap();
        for (v, sign) in vectors.iter().zip([1.0, -1.0]) {
            let eig = Complex64::from_polar(1.0, sign * block.lambda);
            for row in 0..2 {
                let mv = m[row][0] * v[0] + m[row][1] * v[1];
                assert!((mv - eig * v[row]).norm() <= 1e-10);
            }
            assert!((v[0].norm_sqr() + v[1].norm_sqr() - 1.0).abs() < 1e-12);
        }
        let overlap = vectors[0][0].conj() * vectors[1][0] + vectors[0][1].conj() * vectors[1][1];
        assert!(overlap.norm() < 1e-10);
    }

    #[test]
    fn degenerate_block_is_reported() {
        let block = reduced_block(&walk(FRAC_PI_2), 0.4);
        assert_eq!(block_eigenvectors(&block, DEGENERACY_EPS), Err(Error::DegenerateBlock));
    }

    #[test]
    fn power_matches_repeated_multiplication() {
        let p = LineParams::new(0.8, 1.1, 2.3, 0.2, 0.9).unwrap();
        for k in [-1.7, 0.2, 2.9] {
            let block = reduced_block(&p, k);
            let m = block.matrix();
            let mut acc = [[Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)], [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)]];
            for t in 0..12u32 {
                let power = block.power(t);
                for r in 0..2 {
                    for c in 0..2 {
                        assert!(close(power[r][c], acc[r][c], 1e-12), "t={t} k={k}");
                    }
                }
                let mut next = [[Complex64::new(0.0, 0.0); 2]; 2];
                for r in 0..2 {
                    for c in 0..2 {
                        next[r][c] = m[r][0] * acc[0][c] + m[r][1] * acc[1][c];
                    }
                }
                acc = next;
            }
        }
    }

    #[test]
    fn wavefunction_at_time_zero() {
        let amps = wavefunction(&walk(0.7), 0, -3..=3, &QuadratureConfig::default()).unwrap();
        for (x, a) in (-3..=3).zip(&amps) {
            let expected = if x == 0 { 1.0 } else { 0.0 };
            assert!((a - Complex64::new(expected, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn asymptotic_moments_vanish_without_hopping() {
        let p = LineParams::symmetric(0.0, 1.0).unwrap();
        let config = QuadratureConfig::default();
        for n in 1..=3 {
            assert_eq!(asymptotic_odd_moment(&p, n, 10.0, &config).unwrap(), 0.0);
        }
        assert_eq!(asymptotic_sigma2(&p, 10.0, &config).unwrap(), 0.0);
        assert!(asymptotic_odd_moment(&p, 0, 10.0, &config).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert!((closed_form_sigma2_ratio(PI / 3.0, FRAC_PI_2).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(closed_form_sigma2_ratio(0.0, 1.0).unwrap(), 0.0);
        let expected = 4.0 * std::f64::consts::FRAC_1_SQRT_2 * (1.0 - std::f64::consts::FRAC_1_SQRT_2);
        assert!((closed_form_sigma2(FRAC_PI_4, FRAC_PI_2, 3.0).unwrap() - 9.0 * expected).abs() < 1e-13);
        assert!((expected - 0.828_427_124_746_190_1).abs() < 1e-15);
        assert!(matches!(closed_form_sigma2_ratio(1.0, 2.0), Err(Error::DomainError(_))));
    }

    #[test]
    fn surface_examples() {
        let at = |theta: f64, alpha: f64| {
            sigma2_surface(&GridAxis::new(theta, theta, 1), &GridAxis::new(alpha, alpha, 1)).unwrap()[0].sigma2_over_t2
        };
        assert!(at(FRAC_PI_2, FRAC_PI_2).abs() < 1e-15);
        assert!((at(PI / 3.0, FRAC_PI_2) - 1.0).abs() < 1e-15);
        assert!((at(FRAC_PI_2, PI / 3.0) - 1.0).abs() < 1e-15);
        assert!((at(FRAC_PI_2, 2.0 * PI / 3.0) - 1.0).abs() < 1e-15);
        assert_eq!(at(0.0, FRAC_PI_2), 0.0);
        assert!(sigma2_surface(&GridAxis::new(0.0, 4.0, 3), &GridAxis::new(0.0, 1.0, 2)).is_err());
    }

    #[test]
    fn unit_spread_locus() {
        // on the axes through (π/2, π/2) the locus sits π/6 away from the centre
        assert!((unit_spread_alpha(FRAC_PI_2).unwrap() - PI / 3.0).abs() < 1e-15);
        assert!(unit_spread_alpha(0.3).is_none());
        for theta in [1.1, 1.3, 1.5] {
            let alpha = unit_spread_alpha(theta).unwrap();
            assert!((closed_form_sigma2_ratio(theta, alpha).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn grid_axis_points() {
        assert_eq!(GridAxis::new(0.0, 1.0, 1).points(), vec![0.0]);
        assert_eq!(GridAxis::new(0.0, 1.0, 3).points(), vec![0.0, 0.5, 1.0]);
        assert!(GridAxis::new(0.0, 1.0, 0).points().is_empty());
    }
}
