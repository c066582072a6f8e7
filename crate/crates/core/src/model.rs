//! Canonical reduction of the coupled-oscillator Hamiltonian and its energy
//! spectrum.
//!
//! The raw system
//! `H = p1^2/2m1 + p2^2/2m2 + (C1 X1^2 + C2 X2^2 + C3 X1 X2)/2`
//! is rescaled (`x1 = mu X1`, `x2 = X2/mu` with `mu = (m1/m2)^(1/4)`) to a
//! common mass `m = sqrt(m1 m2)`, then rotated by half the mixing angle
//! `theta` into normal coordinates `(y1, y2)` in which the potential is
//! diagonal with stiffnesses `k e^{2 eta}` and `k e^{-2 eta}`. Everything
//! downstream (wavefunctions, purities) depends on the pair `(eta, theta)`
//! plus the overall scales `(m, k, hbar)`.

use crate::error::{Error, Result};

/// Raw parameters of two coupled oscillators: masses and the three stiffness
/// constants of the quadratic potential (the diagonal `c1`, `c2` and the
/// bilinear coupling `c3`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorSystem {
    pub m1: f64,
    pub m2: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl OscillatorSystem {
    /// Validates masses and the stability of the rescaled potential.
    ///
    /// The rescaled stiffnesses must satisfy `4 c1 c2 > c3^2`, otherwise the
    /// potential has a flat or runaway direction and no ground state exists.
    pub fn new(m1: f64, m2: f64, c1: f64, c2: f64, c3: f64) -> Result<Self> {
        if !(m1 > 0.0) || !(m2 > 0.0) {
            return Err(Error::NonPositiveMass { m1, m2 });
        }
        let sys = Self { m1, m2, c1, c2, c3 };
        let (rc1, rc2, rc3) = sys.rescaled_stiffnesses();
        let margin = 4.0 * rc1 * rc2 - rc3 * rc3;
        if !(margin > 0.0) {
            return Err(Error::UnstablePotential {
                c1: rc1,
                c2: rc2,
                c3: rc3,
                margin,
            });
        }
        Ok(sys)
    }

    /// Stiffnesses after the mass rescaling:
    /// `c1' = c1 sqrt(m2/m1)`, `c2' = c2 sqrt(m1/m2)`, `c3' = c3`.
    fn rescaled_stiffnesses(&self) -> (f64, f64, f64) {
        let ratio = (self.m2 / self.m1).sqrt();
        (self.c1 * ratio, self.c2 / ratio, self.c3)
    }
}

/// Parameters of the reduced model: scale factor `mu`, common mass `m`,
/// rescaled stiffnesses, mixing angle `theta in [0, pi)`, effective stiffness
/// `k`, coupling strength `eta` and frequency `omega = sqrt(k/m)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalParams {
    pub mu: f64,
    pub m: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub theta: f64,
    pub k: f64,
    pub eta: f64,
    pub omega: f64,
}

/// Excitation counts of the two normal modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumNumbers {
    pub n1: u32,
    pub n2: u32,
}

impl QuantumNumbers {
    pub fn new(n1: u32, n2: u32) -> Self {
        Self { n1, n2 }
    }

    pub fn total(&self) -> u32 {
        self.n1 + self.n2
    }
}

/// Reduces a raw [`OscillatorSystem`] to [`CanonicalParams`].
///
/// The mixing angle is fixed by `tan(theta) = c3/(c2 - c1)` and resolved as
/// `theta = atan2(c3, c2 - c1)` normalized into `[0, pi)`, which keeps
/// `sin(theta) >= 0`. In the degenerate case `c1 = c2` this gives
/// `theta = pi/2` for `c3 != 0` and `theta = 0` for `c3 = 0` (a negative
/// `c3` maps to `theta = pi/2` with the sign carried by the normalization).
///
/// The coupling strength follows
/// `e^{2 eta} = (c1 + c2 + sqrt((c1-c2)^2 + c3^2)) / (2k)` literally, which
/// yields `eta >= 0` for every stable system. Note that this expression is
/// nonzero whenever `c1 != c2`, even for `c3 = 0` where the oscillators do
/// not interact; callers probing the decoupled point should construct
/// parameters through [`CanonicalParams::from_synthetic`] instead.
pub fn rescale(sys: &OscillatorSystem) -> Result<CanonicalParams> {
    // OscillatorSystem::new enforces the invariants, but re-check so raw
    // struct literals cannot smuggle an unstable system through.
    let checked = OscillatorSystem::new(sys.m1, sys.m2, sys.c1, sys.c2, sys.c3)?;
    let (c1, c2, c3) = checked.rescaled_stiffnesses();

    let mu = (checked.m1 / checked.m2).powf(0.25);
    let m = (checked.m1 * checked.m2).sqrt();
    let k = (c1 * c2 - c3 * c3 / 4.0).sqrt();
    let omega = (k / m).sqrt();

    let mut theta = f64::atan2(c3, c2 - c1);
    // tan is pi-periodic, so shifting by pi preserves tan(theta) = c3/(c2-c1)
    if theta < 0.0 {
        theta += std::f64::consts::PI;
    }
    if theta >= std::f64::consts::PI {
        theta = 0.0;
    }

    let split = ((c1 - c2) * (c1 - c2) + c3 * c3).sqrt();
    let eta = 0.5 * ((c1 + c2 + split) / (2.0 * k)).ln();

    Ok(CanonicalParams {
        mu,
        m,
        c1,
        c2,
        c3,
        theta,
        k,
        eta,
        omega,
    })
}

impl CanonicalParams {
    /// Builds parameters directly in the `(eta, theta)` plane the purity
    /// formulas live in, with unit scale factor (`mu = 1`).
    ///
    /// Accepts `theta in [0, pi]` so boundary behavior can be probed with
    /// the formulas that stay finite there; `eta` may be negative. The
    /// stiffnesses are back-filled so that `c1 + c2 = 2k cosh(2 eta)`,
    /// `c2 - c1 = 2k sinh(2 eta) cos(theta)` and
    /// `c3 = 2k sinh(2 eta) sin(theta)`, consistent with the defining
    /// relations of `(k, eta, theta)` whenever `eta >= 0`.
    pub fn from_synthetic(eta: f64, theta: f64, m: f64, k: f64) -> Result<Self> {
        if !(m > 0.0) || !(k > 0.0) {
            return Err(Error::Domain(format!(
                "scales must be positive, got m = {m}, k = {k}"
            )));
        }
        if !theta.is_finite() || !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(Error::Domain(format!(
                "mixing angle must lie in [0, pi], got theta = {theta}"
            )));
        }
        if !eta.is_finite() {
            return Err(Error::Domain(format!("coupling must be finite, got eta = {eta}")));
        }
        let spread = 2.0 * k * (2.0 * eta).sinh();
        Ok(Self {
            mu: 1.0,
            m,
            c1: k * (2.0 * eta).cosh() - 0.5 * spread * theta.cos(),
            c2: k * (2.0 * eta).cosh() + 0.5 * spread * theta.cos(),
            c3: spread * theta.sin(),
            theta,
            k,
            eta,
            omega: (k / m).sqrt(),
        })
    }

    /// Like [`CanonicalParams::from_synthetic`] but rejects the
    /// `sin(theta) = 0` boundary, for callers headed into formulas that
    /// divide by `sin(theta)`.
    pub fn from_synthetic_division_safe(eta: f64, theta: f64, m: f64, k: f64) -> Result<Self> {
        if !(theta > 0.0 && theta < std::f64::consts::PI) {
            return Err(Error::Domain(format!(
                "mixing angle must lie strictly inside (0, pi), got theta = {theta}"
            )));
        }
        Self::from_synthetic(eta, theta, m, k)
    }

    /// Dimensionless scale `m k / hbar^2` entering widths and kernels.
    pub fn mk_over_hbar2(&self, hbar: f64) -> f64 {
        self.m * self.k / (hbar * hbar)
    }
}

/// Energy of the eigenstate `|n1, n2>`:
/// `E = hbar omega (e^{eta} n1 + e^{-eta} n2 + cosh(eta))`.
///
/// At `eta = 0` this reduces to the decoupled ladder
/// `hbar omega (n1 + n2 + 1)`.
pub fn energy(p: &CanonicalParams, n: QuantumNumbers, hbar: f64) -> f64 {
    hbar * p.omega * (p.eta.exp() * n.n1 as f64 + (-p.eta).exp() * n.n2 as f64 + p.eta.cosh())
}
