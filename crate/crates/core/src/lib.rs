//! Entanglement purity of two coupled harmonic oscillators.
//!
//! Two harmonic oscillators coupled through a bilinear potential term reduce,
//! after a mass rescaling and a rotation of the coordinate system, to a pair
//! of decoupled modes governed by two dimensionless parameters: a coupling
//! strength `eta` and a mixing angle `theta`. The purity of the reduced
//! single-oscillator state (Tr rho^2 after tracing out the partner) measures
//! the entanglement between the two oscillators and depends on `(eta, theta)`
//! only.
//!
//! The crate computes that purity along four independent routes and
//! cross-validates them:
//!
//! * [`purity::purity_coherent`] — the closed form for coherent states,
//!   together with the special cases [`purity::purity_p01`] and
//!   [`purity::purity_p11`] for low number states;
//! * [`purity::purity_number_appendix`] — the general number-state formula
//!   as a constrained sum over principal indices with combinatorially
//!   enumerated coefficients;
//! * [`purity::purity_number_gf`] — the same quantity obtained by expanding a
//!   truncated exponential of an eight-variable quadratic form and extracting
//!   one polynomial coefficient;
//! * [`oracle`] — a brute-force quadrature oracle that builds the reduced
//!   density matrix on a position grid and traces its square.
//!
//! [`sweep`] evaluates any of the routes over `(eta, theta)` grids and writes
//! plot-ready CSV or JSON; [`validate`] runs the full cross-route identity
//! suite and reports per-identity pass/fail.
//!
//! With the default `parallel` feature, oracle matrix assembly and sweeps
//! fan out over a rayon thread pool (`RAYON_NUM_THREADS` limits the width);
//! without it every computation runs sequentially on the calling thread.
//! Results are identical either way.

pub mod error;
pub mod model;
pub mod oracle;
pub mod polyalg;
pub mod purity;
pub mod states;
pub mod sweep;
pub mod validate;

mod par;

pub use error::{Error, Result};
pub use model::{CanonicalParams, OscillatorSystem, QuantumNumbers};
pub use purity::{PurityResult, Route};
