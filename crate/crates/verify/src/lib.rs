//! Numerical verification harness: exact geometry regressions, stationary
//! phase decay-rate fits, and sup-ratio stability checks for the sublevel
//! and oscillatory-sum bounds, all reproducible from a fixed seed.

pub mod absolute;
pub mod config;
pub mod cubic;
pub mod decay;
pub mod error;
pub mod exact;
pub mod report;
pub mod sums;
pub mod uniform;

pub use absolute::{check_as1, check_as2, check_simple_int};
pub use config::VerifyConfig;
pub use decay::{
    check_counterexample, check_decay_rates, counterexample_abs, unperturbed_abs,
    CounterexampleCase, CounterexampleReport, DecayCase,
};
pub use error::VerifyError;
pub use exact::{
    check_closed_form_sweep, check_exact_geometry, check_exponent_identities,
    check_rho_homogeneity, check_shear_family, ExactCheck,
};
pub use report::{blocks_stable, BoundCheck, Verdict, STABILITY_FACTOR};
pub use sums::{check_dyadic_sum_lemma, check_osc_sum, dyadic_trial, DyadicTrial};
pub use uniform::{check_duistermaat_uniform, pure_vertex_slope};
