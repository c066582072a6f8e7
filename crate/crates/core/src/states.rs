//! Position-space wavefunctions of the coupled pair: ground, coherent and
//! number states, in the rotated `y`-frame and in the physical `X`-frame.
//!
//! Frames. The normal coordinates are
//! `y1 = x1 cos(theta/2) - x2 sin(theta/2)`,
//! `y2 = x1 sin(theta/2) + x2 cos(theta/2)`, where `x1 = mu X1` and
//! `x2 = X2/mu` are the mass-rescaled coordinates. The Jacobian of
//! `(X1, X2) -> (x1, x2)` is `mu * (1/mu) = 1`, so a wavefunction normalized
//! over `(y1, y2)` is normalized over `(X1, X2)` as well, with no extra
//! factors.
//!
//! Number states are evaluated as products of 1D oscillator eigenfunctions
//! (Hermite functions) with mode widths `lambda1`, `lambda2` rather than by
//! differentiating the coherent generating function; the two agree, which is
//! pinned by a finite-difference test.

use num_complex::Complex64;

use crate::model::{CanonicalParams, QuantumNumbers};

/// Inverse-length widths of the two normal modes:
/// `lambda1 = e^{eta/2} (mk/hbar^2)^{1/4}`,
/// `lambda2 = e^{-eta/2} (mk/hbar^2)^{1/4}`,
/// so `lambda1 * lambda2 = m omega / hbar`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WidthParams {
    pub lambda1: f64,
    pub lambda2: f64,
}

impl WidthParams {
    pub fn new(p: &CanonicalParams, hbar: f64) -> Self {
        let scale = p.mk_over_hbar2(hbar).powf(0.25);
        Self {
            lambda1: (0.5 * p.eta).exp() * scale,
            lambda2: (-0.5 * p.eta).exp() * scale,
        }
    }
}

/// Complex displacements labelling a coherent state of the two modes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentLabel {
    pub alpha: Complex64,
    pub beta: Complex64,
}

impl CoherentLabel {
    pub fn new(alpha: Complex64, beta: Complex64) -> Self {
        Self { alpha, beta }
    }

    /// Real displacements; the resulting wavefunction is real.
    pub fn real(alpha: f64, beta: f64) -> Self {
        Self {
            alpha: Complex64::new(alpha, 0.0),
            beta: Complex64::new(beta, 0.0),
        }
    }

    pub fn vacuum() -> Self {
        Self::real(0.0, 0.0)
    }
}

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence
/// `H_{n+1} = 2x H_n - 2n H_{n-1}` with `H_0 = 1`, `H_1 = 2x`.
pub fn hermite(n: u32, x: f64) -> f64 {
    match n {
        0 => 1.0,
        1 => 2.0 * x,
        _ => {
            let mut prev = 1.0;
            let mut curr = 2.0 * x;
            for m in 1..n {
                let next = 2.0 * x * curr - 2.0 * m as f64 * prev;
                prev = curr;
                curr = next;
            }
            curr
        }
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, m| acc * m as f64)
}

/// Normalized 1D oscillator eigenfunction
/// `phi_n(y) = sqrt(lambda / (2^n n! sqrt(pi))) H_n(lambda y) e^{-(lambda y)^2/2}`.
pub fn oscillator_eigenfunction(n: u32, lambda: f64, y: f64) -> f64 {
    let xi = lambda * y;
    let norm = (lambda / (2.0_f64.powi(n as i32) * factorial(n) * std::f64::consts::PI.sqrt()))
        .sqrt();
    norm * hermite(n, xi) * (-0.5 * xi * xi).exp()
}

/// Rotates rescaled coordinates `(x1, x2)` into the normal frame.
fn rotate(theta: f64, x1: f64, x2: f64) -> (f64, f64) {
    let (sin_half, cos_half) = (0.5 * theta).sin_cos();
    (
        x1 * cos_half - x2 * sin_half,
        x1 * sin_half + x2 * cos_half,
    )
}

/// Maps physical coordinates `(X1, X2)` to the normal frame, including the
/// `mu`-rescaling.
fn physical_to_normal(p: &CanonicalParams, x1_physical: f64, x2_physical: f64) -> (f64, f64) {
    rotate(p.theta, p.mu * x1_physical, x2_physical / p.mu)
}

/// Ground-state wavefunction in the normal frame:
/// `sqrt(m omega / pi hbar) exp(-(m omega / 2 hbar)(e^{eta} y1^2 + e^{-eta} y2^2))`.
pub fn ground_wavefunction_y(p: &CanonicalParams, hbar: f64, y1: f64, y2: f64) -> f64 {
    let m_omega = p.m * p.omega / hbar;
    (m_omega / std::f64::consts::PI).sqrt()
        * (-0.5 * m_omega * (p.eta.exp() * y1 * y1 + (-p.eta).exp() * y2 * y2)).exp()
}

/// Ground-state wavefunction in the rescaled `x`-frame; equals
/// [`ground_wavefunction_y`] at the rotated point. Does not factorize in
/// `(x1, x2)` unless `theta in {0, pi}` or `eta = 0`.
pub fn ground_wavefunction_x(p: &CanonicalParams, hbar: f64, x1: f64, x2: f64) -> f64 {
    let (y1, y2) = rotate(p.theta, x1, x2);
    ground_wavefunction_y(p, hbar, y1, y2)
}

/// Coherent-state wavefunction in the normal frame,
/// `sqrt(lambda1 lambda2 / pi) *
///  exp(-lambda1^2 y1^2/2 - |alpha|^2/2 - alpha^2/2 + sqrt(2) alpha lambda1 y1)
///  * (same with 2 <-> beta)`.
///
/// For complex displacements the normalization convention follows the
/// `alpha^2/2` (not `|alpha|^2/2`) exponent literally; quadrature
/// normalization is asserted for real displacements only.
pub fn coherent_wavefunction_y(
    p: &CanonicalParams,
    hbar: f64,
    label: &CoherentLabel,
    y1: f64,
    y2: f64,
) -> Complex64 {
    let w = WidthParams::new(p, hbar);
    let norm = (w.lambda1 * w.lambda2 / std::f64::consts::PI).sqrt();
    let sqrt2 = std::f64::consts::SQRT_2;
    let exponent = -0.5 * w.lambda1 * w.lambda1 * y1 * y1 - 0.5 * w.lambda2 * w.lambda2 * y2 * y2
        - 0.5 * label.alpha.norm_sqr()
        - 0.5 * label.beta.norm_sqr()
        - 0.5 * label.alpha * label.alpha
        - 0.5 * label.beta * label.beta
        + sqrt2 * label.alpha * w.lambda1 * y1
        + sqrt2 * label.beta * w.lambda2 * y2;
    norm * exponent.exp()
}

/// Coherent-state wavefunction in the physical `X`-frame (arguments carry
/// the `mu`, `1/mu` scaling). Reduces to the ground-state Gaussian at
/// `alpha = beta = 0`.
pub fn coherent_wavefunction_x(
    p: &CanonicalParams,
    hbar: f64,
    label: &CoherentLabel,
    x1_physical: f64,
    x2_physical: f64,
) -> Complex64 {
    let (y1, y2) = physical_to_normal(p, x1_physical, x2_physical);
    coherent_wavefunction_y(p, hbar, label, y1, y2)
}

/// Real-displacement coherent state in the `X`-frame; the quadrature oracle
/// works with this real-valued path only.
pub fn coherent_wavefunction_x_real(
    p: &CanonicalParams,
    hbar: f64,
    alpha: f64,
    beta: f64,
    x1_physical: f64,
    x2_physical: f64,
) -> f64 {
    let (y1, y2) = physical_to_normal(p, x1_physical, x2_physical);
    let w = WidthParams::new(p, hbar);
    let norm = (w.lambda1 * w.lambda2 / std::f64::consts::PI).sqrt();
    let sqrt2 = std::f64::consts::SQRT_2;
    // for real alpha the |alpha|^2/2 + alpha^2/2 terms combine to alpha^2
    let exponent = -0.5 * w.lambda1 * w.lambda1 * y1 * y1
        - 0.5 * w.lambda2 * w.lambda2 * y2 * y2
        - alpha * alpha
        - beta * beta
        + sqrt2 * (alpha * w.lambda1 * y1 + beta * w.lambda2 * y2);
    norm * exponent.exp()
}

/// Number-state wavefunction in the normal frame: the product
/// `phi_{n1}(lambda1 y1) phi_{n2}(lambda2 y2)` of 1D eigenfunctions.
pub fn number_wavefunction_y(
    p: &CanonicalParams,
    hbar: f64,
    n: QuantumNumbers,
    y1: f64,
    y2: f64,
) -> f64 {
    let w = WidthParams::new(p, hbar);
    oscillator_eigenfunction(n.n1, w.lambda1, y1) * oscillator_eigenfunction(n.n2, w.lambda2, y2)
}

/// Number-state wavefunction in the physical `X`-frame.
pub fn number_wavefunction_x(
    p: &CanonicalParams,
    hbar: f64,
    n: QuantumNumbers,
    x1_physical: f64,
    x2_physical: f64,
) -> f64 {
    let (y1, y2) = physical_to_normal(p, x1_physical, x2_physical);
    number_wavefunction_y(p, hbar, n, y1, y2)
}

/// Mean physical position `(X1, X2)` of a real-displacement coherent state.
/// Mode `i` is displaced by `<y_i> = sqrt(2) alpha_i / lambda_i`; the inverse
/// rotation and rescaling carry that into the physical frame. Used by the
/// oracle to center its grid.
pub fn coherent_center(p: &CanonicalParams, hbar: f64, alpha: f64, beta: f64) -> (f64, f64) {
    let w = WidthParams::new(p, hbar);
    let sqrt2 = std::f64::consts::SQRT_2;
    let y1 = sqrt2 * alpha / w.lambda1;
    let y2 = sqrt2 * beta / w.lambda2;
    let (sin_half, cos_half) = (0.5 * p.theta).sin_cos();
    let x1 = cos_half * y1 + sin_half * y2;
    let x2 = -sin_half * y1 + cos_half * y2;
    (x1 / p.mu, p.mu * x2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    fn simpson_weights(n: usize, h: f64) -> Vec<f64> {
        // composite Simpson for odd n (even interval count)
        assert!(n >= 3 && n % 2 == 1);
        let mut w = vec![h / 3.0; n];
        for (idx, wi) in w.iter_mut().enumerate().take(n - 1).skip(1) {
            *wi = if idx % 2 == 1 { 4.0 * h / 3.0 } else { 2.0 * h / 3.0 };
        }
        w
    }

    /// 2D quadrature of f^2 over a centered square window.
    fn norm2<F: Fn(f64, f64) -> f64>(f: F, half_width: f64, n: usize) -> f64 {
        let h = 2.0 * half_width / (n - 1) as f64;
        let w = simpson_weights(n, h);
        let mut total = 0.0;
        for a in 0..n {
            let x1 = -half_width + a as f64 * h;
            let mut row = 0.0;
            for b in 0..n {
                let x2 = -half_width + b as f64 * h;
                let v = f(x1, x2);
                row += w[b] * v * v;
            }
            total += w[a] * row;
        }
        total
    }

    #[test]
    fn hermite_small_orders() {
        assert_eq!(hermite(0, 1.3), 1.0);
        assert_eq!(hermite(1, 0.4), 0.8);
        assert_abs_diff_eq!(hermite(2, 1.0), 2.0, epsilon = 1e-14);
        // explicit coefficients 32 x^5 - 160 x^3 + 120 x as an independent check
        let x = 0.5_f64;
        let explicit = 32.0 * x.powi(5) - 160.0 * x.powi(3) + 120.0 * x;
        assert_abs_diff_eq!(hermite(5, x), explicit, epsilon = 1e-12);
        assert_abs_diff_eq!(explicit, 41.0, epsilon = 1e-12);
    }

    #[test]
    fn ground_peak_value_and_parity() {
        let p = CanonicalParams::from_synthetic(0.0, 1.0, 1.0, 1.0).unwrap();
        assert_relative_eq!(
            ground_wavefunction_y(&p, 1.0, 0.0, 0.0),
            1.0 / PI.sqrt(),
            max_relative = 1e-15
        );
        let q = CanonicalParams::from_synthetic(0.7, 2.0, 1.0, 1.0).unwrap();
        for &(y1, y2) in &[(0.3, -0.8), (1.1, 0.2)] {
            assert_eq!(
                ground_wavefunction_y(&q, 1.0, y1, y2),
                ground_wavefunction_y(&q, 1.0, -y1, -y2)
            );
        }
    }

    #[test]
    fn ground_normalized_by_quadrature() {
        let p = CanonicalParams::from_synthetic(0.9, 1.2, 1.0, 1.0).unwrap();
        let n = norm2(|y1, y2| ground_wavefunction_y(&p, 1.0, y1, y2), 12.0, 401);
        assert_abs_diff_eq!(n, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn ground_y_factorizes_but_x_does_not() {
        let p = CanonicalParams::from_synthetic(1.0, PI / 2.0, 1.0, 1.0).unwrap();
        let f = |y1: f64, y2: f64| ground_wavefunction_y(&p, 1.0, y1, y2);
        assert_relative_eq!(
            f(0.7, -0.4) * f(0.0, 0.0),
            f(0.7, 0.0) * f(0.0, -0.4),
            max_relative = 1e-12
        );
        let g = |x1: f64, x2: f64| ground_wavefunction_x(&p, 1.0, x1, x2);
        let cross = g(0.7, -0.4) * g(0.0, 0.0);
        let split = g(0.7, 0.0) * g(0.0, -0.4);
        assert!((cross - split).abs() > 1e-3 * split.abs());
    }

    #[test]
    fn x_frame_reduces_to_y_frame() {
        // identity rotation
        let p = CanonicalParams::from_synthetic(0.8, 0.0, 1.0, 1.0).unwrap();
        assert_eq!(
            ground_wavefunction_x(&p, 1.0, 0.6, -0.9),
            ground_wavefunction_y(&p, 1.0, 0.6, -0.9)
        );
        // isotropic case: any rotation acts trivially
        let iso = CanonicalParams::from_synthetic(0.0, 1.1, 1.0, 1.0).unwrap();
        assert_relative_eq!(
            ground_wavefunction_x(&iso, 1.0, 0.6, -0.9),
            ground_wavefunction_y(&iso, 1.0, 0.6, -0.9),
            max_relative = 1e-13
        );
        // explicit rotated evaluation point
        let q = CanonicalParams::from_synthetic(1.0, PI / 2.0, 1.0, 1.0).unwrap();
        let quarter = PI / 4.0;
        assert_relative_eq!(
            ground_wavefunction_x(&q, 1.0, 1.0, 0.0),
            ground_wavefunction_y(&q, 1.0, quarter.cos(), quarter.sin()),
            max_relative = 1e-14
        );
    }

    #[test]
    fn coherent_vacuum_is_ground_state() {
        let p = CanonicalParams::from_synthetic(0.6, 1.3, 1.0, 1.0).unwrap();
        let label = CoherentLabel::vacuum();
        for &(x1, x2) in &[(0.0, 0.0), (0.4, 0.9), (-1.2, 0.3)] {
            let c = coherent_wavefunction_x(&p, 1.0, &label, x1, x2);
            assert_abs_diff_eq!(c.im, 0.0, epsilon = 1e-15);
            // mu = 1 here, so the x- and X-frames coincide
            assert_relative_eq!(c.re, ground_wavefunction_x(&p, 1.0, x1, x2), max_relative = 1e-13);
        }
    }

    #[test]
    fn coherent_real_labels_give_real_values() {
        let p = CanonicalParams::from_synthetic(0.8, PI / 3.0, 1.0, 1.0).unwrap();
        let label = CoherentLabel::real(0.7, -0.3);
        for &(x1, x2) in &[(0.5, 0.5), (-0.3, 1.4)] {
            let c = coherent_wavefunction_x(&p, 1.0, &label, x1, x2);
            assert_abs_diff_eq!(c.im, 0.0, epsilon = 1e-15);
            assert_relative_eq!(
                c.re,
                coherent_wavefunction_x_real(&p, 1.0, 0.7, -0.3, x1, x2),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn coherent_normalized_by_quadrature() {
        let p = CanonicalParams::from_synthetic(0.8, PI / 3.0, 1.0, 1.0).unwrap();
        let n = norm2(
            |x1, x2| coherent_wavefunction_x_real(&p, 1.0, 0.7, -0.3, x1, x2),
            14.0,
            501,
        );
        assert_abs_diff_eq!(n, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn number_state_ground_matches() {
        let p = CanonicalParams::from_synthetic(1.1, 0.9, 1.0, 1.0).unwrap();
        for &(y1, y2) in &[(0.0, 0.0), (0.8, -0.2)] {
            assert_relative_eq!(
                number_wavefunction_y(&p, 1.0, QuantumNumbers::new(0, 0), y1, y2),
                ground_wavefunction_y(&p, 1.0, y1, y2),
                max_relative = 1e-13
            );
        }
    }

    #[test]
    fn number_states_orthonormal() {
        let p = CanonicalParams::from_synthetic(0.5, 1.0, 1.0, 1.0).unwrap();
        let overlap = |na: QuantumNumbers, nb: QuantumNumbers| {
            let half = 12.0;
            let n = 401;
            let h = 2.0 * half / (n - 1) as f64;
            let w = simpson_weights(n, h);
            let mut total = 0.0;
            for a in 0..n {
                let y1 = -half + a as f64 * h;
                let mut row = 0.0;
                for b in 0..n {
                    let y2 = -half + b as f64 * h;
                    row += w[b]
                        * number_wavefunction_y(&p, 1.0, na, y1, y2)
                        * number_wavefunction_y(&p, 1.0, nb, y1, y2);
                }
                total += w[a] * row;
            }
            total
        };
        assert_abs_diff_eq!(
            overlap(QuantumNumbers::new(0, 1), QuantumNumbers::new(0, 1)),
            1.0,
            epsilon = 1e-8
        );
        assert_abs_diff_eq!(
            overlap(QuantumNumbers::new(0, 1), QuantumNumbers::new(0, 0)),
            0.0,
            epsilon = 1e-8
        );
    }

    #[test]
    fn number_state_parity() {
        let p = CanonicalParams::from_synthetic(0.4, 2.0, 1.0, 1.0).unwrap();
        for (n1, n2) in [(1, 0), (2, 1), (3, 2)] {
            let n = QuantumNumbers::new(n1, n2);
            let sign = if (n1 + n2) % 2 == 0 { 1.0 } else { -1.0 };
            for &(y1, y2) in &[(0.7, 0.2), (-0.1, 1.3)] {
                assert_relative_eq!(
                    number_wavefunction_y(&p, 1.0, n, -y1, -y2),
                    sign * number_wavefunction_y(&p, 1.0, n, y1, y2),
                    max_relative = 1e-12
                );
            }
        }
    }

    /// The (1,0) number state equals the alpha-derivative of the coherent
    /// generating function at zero displacement, taken by central
    /// differences. This pins the eigenfunction-product implementation to
    /// the generating-function definition.
    #[test]
    fn number_state_matches_finite_difference_generating_function() {
        let p = CanonicalParams::from_synthetic(0.8, PI / 3.0, 1.0, 1.0).unwrap();
        let h = 1e-3;
        for &(x1, x2) in &[(0.3, -0.5), (1.1, 0.2), (-0.7, 0.9)] {
            // g(alpha) = e^{|alpha|^2/2} Phi_{alpha,0}(X); for real alpha the
            // prefactor is e^{alpha^2/2}
            let g = |alpha: f64| {
                (0.5 * alpha * alpha).exp()
                    * coherent_wavefunction_x_real(&p, 1.0, alpha, 0.0, x1, x2)
            };
            let fd = (g(h) - g(-h)) / (2.0 * h);
            let direct = number_wavefunction_x(&p, 1.0, QuantumNumbers::new(1, 0), x1, x2);
            assert_relative_eq!(fd, direct, max_relative = 1e-5);
        }
    }

    #[test]
    fn coherent_center_matches_peak() {
        let p = CanonicalParams::from_synthetic(0.9, 1.1, 1.0, 1.0).unwrap();
        let (c1, c2) = coherent_center(&p, 1.0, 0.8, -0.5);
        let f = |x1: f64, x2: f64| coherent_wavefunction_x_real(&p, 1.0, 0.8, -0.5, x1, x2);
        let peak = f(c1, c2).abs();
        for &(d1, d2) in &[(0.05, 0.0), (-0.05, 0.0), (0.0, 0.05), (0.0, -0.05)] {
            assert!(f(c1 + d1, c2 + d2).abs() < peak);
        }
    }
}
