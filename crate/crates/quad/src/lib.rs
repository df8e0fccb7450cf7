//! Oscillatory-integral quadrature at desk scale.
//!
//! The integrals of interest look like `int a(x) exp(i lambda phi(x)) dx`
//! with `lambda` up to about `2^16`. Composite Gauss-Legendre panels sized
//! against a sampled derivative bound keep ten-plus nodes per oscillation,
//! which is enough to treat the computed value as ground truth when testing
//! decay rates. The crate also carries the concrete phase families the
//! verification suites drive through the integrator, and a least-squares
//! slope fit for reading off decay exponents from dyadic lambda sweeps.

pub mod abs;
pub mod error;
pub mod fit;
pub mod gl;
pub mod osc;
pub mod phase;

pub use abs::{integrate_abs_1d, integrate_abs_2d, AbsOpts};
pub use error::QuadError;
pub use fit::{decay_fit, dyadic_lambdas, DecayFit};
pub use gl::{gauss_legendre, gl16};
pub use osc::{
    max_abs_derivative, osc_integral_1d, osc_integral_2d, osc_integral_2d_separable, QuadOpts,
};
pub use phase::{g_constants, CompiledPoly, D4Phase, FullSharpPhase, PhaseDescriptor};
