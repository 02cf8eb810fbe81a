//! Numerical toolkit for Gaussian time-frequency analysis.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`] — quadrature engines (adaptive periodic trapezoid, composite
//!   Gauss-Legendre) and log-gamma plumbing that everything else builds on.
//! * [`hermite`] — L²-normalized Hermite functions via the stable three-term
//!   recurrence, tensor products, and orthonormality diagnostics.
//! * [`poisson_poly`] — Poisson-weighted exponential partial sums, their
//!   angular L¹ norms, and the two-sided envelope checks around them.
//! * [`phase_space`] — Gaussian-window short-time Fourier transforms and
//!   modulation-space norms computed by polar quadrature.
//! * [`operators`] — coefficient multipliers (partial sums, smoothed cutoffs),
//!   convergence probes, and torus partial-sum comparisons.
//! * [`zak_gabor`] — Zak transforms of Hermite functions, lattice point
//!   counting, and Gabor frame estimates.
//!
//! All computations are deterministic: randomized probes take explicit seeds
//! and parallel reductions run in a fixed order, so equal inputs give
//! bit-identical outputs regardless of thread count.

pub mod error;
pub mod hermite;
pub mod numerics;
pub mod operators;
pub mod phase_space;
pub mod poisson_poly;
pub mod report;
pub mod zak_gabor;

pub use error::{Error, Result};
pub use report::BoundReport;
