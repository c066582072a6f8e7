//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A mass parameter was zero or negative.
    #[error("masses must be positive, got m1 = {m1}, m2 = {m2}")]
    NonPositiveMass { m1: f64, m2: f64 },

    /// The stability condition 4 c1 c2 > c3^2 of the rescaled potential is
    /// violated; the quadratic form is not positive definite.
    #[error(
        "unstable potential: 4*c1*c2 > c3^2 is violated (c1 = {c1}, c2 = {c2}, c3 = {c3}, \
         4*c1*c2 - c3^2 = {margin})"
    )]
    UnstablePotential {
        c1: f64,
        c2: f64,
        c3: f64,
        margin: f64,
    },

    /// An argument lies outside the domain of the requested formula,
    /// typically a mixing angle on the sin(theta) = 0 boundary.
    #[error("domain error: {0}")]
    Domain(String),

    /// A principal index does not satisfy i + j + k + l + r = 2(n1 + n2).
    #[error(
        "principal index ({i}, {j}, {k}, {l}, {r}) violates \
         i+j+k+l+r = 2(n1+n2) = {expected}"
    )]
    ConstraintViolation {
        i: u32,
        j: u32,
        k: u32,
        l: u32,
        r: u32,
        expected: u32,
    },

    /// Requested quantum numbers exceed the configured enumeration cap.
    #[error("n1 + n2 = {requested} exceeds the configured cap {cap}")]
    CapExceeded { requested: u32, cap: u32 },

    /// The quadrature grid truncates too much probability density at its
    /// boundary; the caller should widen it.
    #[error(
        "grid too narrow: boundary density is {ratio:.3e} of the peak \
         (limit {limit:.1e}); widen the grid"
    )]
    GridTooNarrow { ratio: f64, limit: f64 },

    /// Grid refinement did not reduce the purity change below the
    /// convergence threshold.
    #[error(
        "oracle did not converge: refinement changed the purity by \
         {difference:.3e} (limit {limit:.1e})"
    )]
    NotConverged { difference: f64, limit: f64 },

    /// Invalid sweep or grid request (bad step counts, empty ranges, ...).
    #[error("invalid request: {0}")]
    InvalidRequest(String),
}
