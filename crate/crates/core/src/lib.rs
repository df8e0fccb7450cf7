//! Exact geometry of Newton polyhedra for bivariate Puiseux polynomials, and
//! the critical-exponent bookkeeping built on top of it.
//!
//! Everything in this crate is exact rational arithmetic; floats only appear
//! at the boundary (`evaluate`, the delta/rho helpers) where a numeric
//! consumer needs them.

pub mod cutoff;
pub mod error;
pub mod newton;
pub mod parse;
pub mod poly;
pub mod rational;
pub mod restriction;

pub use error::CoreError;
pub use newton::{
    dilate, kappa_principal_part, newton_distance, newton_polyhedron, principal_face,
    principal_weight, Face, NewtonPolyhedron, PolyEdge, Weight,
};
pub use parse::parse_poly;
pub use poly::{Exponent2, PuiseuxPoly};
pub use rational::Rat;
pub use restriction::{
    augmented_polyhedron, classify, delta_vector, duistermaat_scale, exponent_lemmas,
    linear_height, r_height, rho, rho_from_slots, Branch, CaseAb, DeltaVector, LemmaCheck,
    LinearHeight, RestrictionReport, RhoValue,
};
pub use restriction::{
    case_one_identity_gap, h_threshold, m_polynomial, model_p0, p_span_prime, p_tilde_c_prime,
    quadratic_gap, summability_margin, theta_span, theta_tilde,
};
