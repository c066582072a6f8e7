//! Purity of the reduced single-oscillator state along the analytic routes.
//!
//! All purities here are functions of `(eta, theta)` alone. The coherent
//! closed form holds for every displacement; number states `|n1, n2>` are
//! covered by two independent analytic routes — a constrained combinatorial
//! sum ([`purity_number_appendix`]) and a generating-function expansion
//! ([`purity_number_gf`]) — plus hand-reduced closed forms for `(0,1)` and
//! `(1,1)`. A third, brute-force route lives in [`crate::oracle`].

mod coefficients;
mod gf;

pub use coefficients::{coefficient_c, coefficient_table, CoefficientTerm, PrincipalIndex};
pub use gf::{purity_number_gf, purity_number_gf_with, GfEvaluator};

use serde::Serialize;

use crate::error::{Error, Result};

/// Default cap on `n1 + n2` for the number-state routes. Both the
/// coefficient enumeration and the polynomial expansion grow combinatorially
/// with the total excitation; the cap keeps them at interactive scale and
/// can be raised explicitly through the `_with` entry points.
pub const DEFAULT_QUANTUM_CAP: u32 = 4;

/// Threshold used by the refinement oracle to declare convergence failure.
pub const REFINEMENT_LIMIT: f64 = 1e-4;

/// How a purity value was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    ClosedForm,
    AppendixA,
    GeneratingFunction,
    Oracle,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::ClosedForm,
        Route::AppendixA,
        Route::GeneratingFunction,
        Route::Oracle,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Route::ClosedForm => "closed-form",
            Route::AppendixA => "appendix-a",
            Route::GeneratingFunction => "generating-function",
            Route::Oracle => "oracle",
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed-form" => Ok(Route::ClosedForm),
            "appendix-a" => Ok(Route::AppendixA),
            "generating-function" => Ok(Route::GeneratingFunction),
            "oracle" => Ok(Route::Oracle),
            other => Err(Error::InvalidRequest(format!(
                "unknown route '{other}' (expected closed-form, appendix-a, \
                 generating-function or oracle)"
            ))),
        }
    }
}

/// A purity value together with its provenance. `error_estimate` is zero for
/// the analytic routes and a grid-refinement difference for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PurityResult {
    pub value: f64,
    pub route: Route,
    pub error_estimate: f64,
}

impl PurityResult {
    pub(crate) fn analytic(value: f64, route: Route) -> Self {
        Self {
            value,
            route,
            error_estimate: 0.0,
        }
    }

    pub fn linear_entropy(&self) -> f64 {
        1.0 - self.value
    }
}

/// Linear entropy `L = 1 - P`, the companion entanglement monotone.
pub fn linear_entropy(p: &PurityResult) -> f64 {
    p.linear_entropy()
}

/// The scalars `(rho, u, v, w, t, s)` entering the number-state purity, all
/// carrying one power of `mk/hbar^2`. Every purity depends on them only
/// through the dimensionless ratios `x/rho`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PurityKernelParams {
    pub rho: f64,
    pub u: f64,
    pub v: f64,
    pub w: f64,
    pub t: f64,
    pub s: f64,
}

impl PurityKernelParams {
    /// Ratios `(u, v, w, t, s) / rho`.
    pub fn ratios(&self) -> [f64; 5] {
        [
            self.u / self.rho,
            self.v / self.rho,
            self.w / self.rho,
            self.t / self.rho,
            self.s / self.rho,
        ]
    }
}

fn require_interior_theta(theta: f64) -> Result<()> {
    if theta > 0.0 && theta < std::f64::consts::PI && theta.sin() > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "mixing angle must lie strictly inside (0, pi) where sin(theta) > 0, \
             got theta = {theta}"
        )))
    }
}

/// Kernel scalars at coupling `eta`, mixing angle `theta in (0, pi)` and
/// scale `mk/hbar^2`:
///
/// ```text
/// rho = 4 (mk/hbar^2) [2 cosh(2 eta) + cot^2(theta/2) + tan^2(theta/2)]
/// u   = 2 (mk/hbar^2) sinh(2 eta)
/// v   = 2 (mk/hbar^2) [cosh(2 eta) + tan^2(theta/2)]
/// w   = 2 (mk/hbar^2) [cosh(2 eta) + cot^2(theta/2)]
/// t   = 4 (mk/hbar^2) cosh(eta) / sin(theta)
/// s   = -4 (mk/hbar^2) sinh(eta) cos(theta) / sin(theta)
/// ```
pub fn kernel_params(eta: f64, theta: f64, mk_over_hbar2: f64) -> Result<PurityKernelParams> {
    require_interior_theta(theta)?;
    if !(mk_over_hbar2 > 0.0) {
        return Err(Error::Domain(format!(
            "mk/hbar^2 must be positive, got {mk_over_hbar2}"
        )));
    }
    let g = mk_over_hbar2;
    let tan2 = (0.5 * theta).tan().powi(2);
    let cot2 = 1.0 / tan2;
    let cosh2 = (2.0 * eta).cosh();
    Ok(PurityKernelParams {
        rho: 4.0 * g * (2.0 * cosh2 + cot2 + tan2),
        u: 2.0 * g * (2.0 * eta).sinh(),
        v: 2.0 * g * (cosh2 + tan2),
        w: 2.0 * g * (cosh2 + cot2),
        t: 4.0 * g * eta.cosh() / theta.sin(),
        s: -4.0 * g * eta.sinh() * theta.cos() / theta.sin(),
    })
}

/// Coherent-state purity
/// `P = 1 / sqrt(2 cosh(2 eta) sin^2(theta/2) cos^2(theta/2)
///              + cos^4(theta/2) + sin^4(theta/2))`,
/// independent of the displacements. Defined on all of `theta in [0, pi]`
/// (the boundary values are 1). At `theta = pi/2` it reduces to
/// `1/cosh(eta)`.
pub fn purity_coherent(eta: f64, theta: f64) -> PurityResult {
    let s2 = (0.5 * theta).sin().powi(2);
    let c2 = (0.5 * theta).cos().powi(2);
    let value = 1.0 / (2.0 * (2.0 * eta).cosh() * s2 * c2 + c2 * c2 + s2 * s2).sqrt();
    PurityResult::analytic(value, Route::ClosedForm)
}

/// Closed-form purity of the `|0, 1>` state:
///
/// ```text
///        3 cosh(4 eta) + 4 (T + G) cosh(2 eta) + 2 T^2 + 2 G^2 + 1
/// P01 = ------------------------------------------------------------
///                sin(theta) (2 cosh(2 eta) + T + G)^{5/2}
/// ```
///
/// with `T = tan^2(theta/2)`, `G = cot^2(theta/2)`. At `theta = pi/2` this
/// becomes `(3 cosh(4 eta) + 8 cosh(2 eta) + 5) / (32 cosh^5(eta))`, equal
/// to 1/2 at `eta = 0`.
pub fn purity_p01(eta: f64, theta: f64) -> Result<PurityResult> {
    require_interior_theta(theta)?;
    let tan2 = (0.5 * theta).tan().powi(2);
    let cot2 = 1.0 / tan2;
    let denom_base = 2.0 * (2.0 * eta).cosh() + tan2 + cot2;
    let numerator = 3.0 * (4.0 * eta).cosh()
        + 4.0 * (tan2 + cot2) * (2.0 * eta).cosh()
        + 2.0 * tan2 * tan2
        + 2.0 * cot2 * cot2
        + 1.0;
    let value = numerator / (theta.sin() * denom_base.powf(2.5));
    Ok(PurityResult::analytic(value, Route::ClosedForm))
}

/// Closed-form purity of the `|1, 1>` state:
///
/// ```text
///        9 cosh(8 eta) + 16 (T + G) cosh(6 eta)
///        + (96 T^2 + 96 G^2 - 36) cosh(4 eta) + 240 (T + G) cosh(2 eta)
///        + 8 T^4 + 8 G^4 - 64 T^2 - 64 G^2 + 459
/// P11 = ---------------------------------------------------------------
///              4 sin(theta) (2 cosh(2 eta) + T + G)^{9/2}
/// ```
///
/// At `theta = pi/2`:
/// `(9 cosh(8 eta) + 32 cosh(6 eta) + 156 cosh(4 eta) + 480 cosh(2 eta)
///   + 347) / (2048 cosh^9(eta))`.
pub fn purity_p11(eta: f64, theta: f64) -> Result<PurityResult> {
    require_interior_theta(theta)?;
    let tan2 = (0.5 * theta).tan().powi(2);
    let cot2 = 1.0 / tan2;
    let sum2 = tan2 + cot2;
    let denom_base = 2.0 * (2.0 * eta).cosh() + sum2;
    let numerator = 9.0 * (8.0 * eta).cosh()
        + 16.0 * sum2 * (6.0 * eta).cosh()
        + (96.0 * tan2 * tan2 + 96.0 * cot2 * cot2 - 36.0) * (4.0 * eta).cosh()
        + 240.0 * sum2 * (2.0 * eta).cosh()
        + 8.0 * tan2.powi(4)
        + 8.0 * cot2.powi(4)
        - 64.0 * tan2 * tan2
        - 64.0 * cot2 * cot2
        + 459.0;
    let value = numerator / (4.0 * theta.sin() * denom_base.powf(4.5));
    Ok(PurityResult::analytic(value, Route::ClosedForm))
}

/// Shared prefactor of the number-state purity:
/// `2 (n1! n2!)^2 / (sin(theta) sqrt(2 cosh(2 eta) + tan^2 + cot^2))`.
/// The remaining `(2/rho)^{2(n1+n2)}` power is folded into the kernel ratios
/// during summation.
fn number_state_prefactor(n1: u32, n2: u32, eta: f64, theta: f64) -> f64 {
    let tan2 = (0.5 * theta).tan().powi(2);
    let base = 2.0 * (2.0 * eta).cosh() + tan2 + 1.0 / tan2;
    let fact = |n: u32| (1..=n).fold(1.0, |acc, m| acc * m as f64);
    let nn = fact(n1) * fact(n2);
    2.0 * nn * nn / (theta.sin() * base.sqrt())
}

fn check_cap(n1: u32, n2: u32, cap: u32) -> Result<()> {
    if n1 + n2 > cap {
        Err(Error::CapExceeded {
            requested: n1 + n2,
            cap,
        })
    } else {
        Ok(())
    }
}

/// Number-state purity by the combinatorial route: the constrained sum
/// `P = prefactor * sum_{i+j+k+l+r = 2(n1+n2)} C(i,j,k,l,r)
///      (2u/rho)^i (2v/rho)^j (2w/rho)^k (2t/rho)^l (2s/rho)^r`.
///
/// The result is independent of `mk/hbar^2` because each kernel power is
/// consumed as a ratio against `rho`.
pub fn purity_number_appendix(n1: u32, n2: u32, eta: f64, theta: f64) -> Result<PurityResult> {
    purity_number_appendix_with(n1, n2, eta, theta, 1.0, DEFAULT_QUANTUM_CAP)
}

/// [`purity_number_appendix`] with explicit scale and cap.
pub fn purity_number_appendix_with(
    n1: u32,
    n2: u32,
    eta: f64,
    theta: f64,
    mk_over_hbar2: f64,
    cap: u32,
) -> Result<PurityResult> {
    check_cap(n1, n2, cap)?;
    let kernel = kernel_params(eta, theta, mk_over_hbar2)?;
    purity_number_from_kernel(n1, n2, &kernel, eta, theta)
}

/// The combinatorial route evaluated on explicit kernel scalars. Exposed so
/// kernel perturbations can be injected (the validation suite uses this as a
/// negative control); no cap check is applied here.
pub fn purity_number_from_kernel(
    n1: u32,
    n2: u32,
    kernel: &PurityKernelParams,
    eta: f64,
    theta: f64,
) -> Result<PurityResult> {
    require_interior_theta(theta)?;
    let [ru, rv, rw, rt, rs] = kernel.ratios().map(|x| 2.0 * x);
    let table = coefficient_table(n1, n2);
    let mut sum = 0.0;
    for term in table.iter() {
        let idx = &term.index;
        sum += term.value
            * ru.powi(idx.i as i32)
            * rv.powi(idx.j as i32)
            * rw.powi(idx.k as i32)
            * rt.powi(idx.l as i32)
            * rs.powi(idx.r as i32);
    }
    let value = number_state_prefactor(n1, n2, eta, theta) * sum;
    Ok(PurityResult::analytic(value, Route::AppendixA))
}
