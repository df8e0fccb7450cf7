//! Dyadic decay-rate fits: model phases with known van der Corput rates, and
//! the quartic perturbation whose decay sits strictly between the generic
//! cubic-family rate and the unperturbed one.

use num_complex::Complex;
use phaselab_core::cutoff::CutoffSpec;
use phaselab_core::rational::{rat, rat_i};
use phaselab_core::{newton_distance, newton_polyhedron, principal_face, principal_weight, Face};
use phaselab_quad::{
    decay_fit, dyadic_lambdas, osc_integral_1d, osc_integral_2d, osc_integral_2d_separable,
    D4Phase, DecayFit, QuadOpts,
};

use crate::config::VerifyConfig;
use crate::error::VerifyError;

pub struct DecayCase {
    pub name: &'static str,
    pub expected_slope: f64,
    pub fit: DecayFit,
    pub within: bool,
    /// `(lambda, I(lambda))` pairs behind the fit.
    pub samples: Vec<(f64, Complex<f64>)>,
}

/// Fitted `log2 |I|` against `log2 lambda` for the standard model phases:
/// one nondegenerate and three degenerate one-dimensional stationary points,
/// plus the separable product of a cubic and a quartic.
pub fn check_decay_rates(cfg: &VerifyConfig) -> Result<Vec<DecayCase>, VerifyError> {
    let lambdas = dyadic_lambdas(cfg.lambda_min_exp, cfg.lambda_max_exp);
    let opts = QuadOpts::default();
    let bump = CutoffSpec::Bump {
        center: 0.0,
        radius: 1.0,
    };
    let amp = |t: f64| bump.eval(t);
    let phases: [(&'static str, fn(f64) -> f64, f64); 5] = [
        ("quadratic", |t| t * t, -0.5),
        ("airy", |t| t * t * t / 3.0, -1.0 / 3.0),
        ("power_3", |t| t * t * t, -1.0 / 3.0),
        ("power_4", |t| t * t * t * t, -0.25),
        ("power_5", |t| t * t * t * t * t, -0.2),
    ];
    let mut cases = Vec::new();
    for (name, phase, expected) in phases {
        let mut pts = Vec::with_capacity(lambdas.len());
        let mut samples = Vec::with_capacity(lambdas.len());
        for &lambda in &lambdas {
            let v = osc_integral_1d(lambda, phase, amp, (-1.0, 1.0), &opts)?;
            pts.push((lambda.log2(), v.norm().log2()));
            samples.push((lambda, v));
        }
        let fit = decay_fit(&pts)?;
        let within = (fit.slope - expected).abs() <= cfg.slope_tol;
        cases.push(DecayCase {
            name,
            expected_slope: expected,
            fit,
            within,
            samples,
        });
    }
    let mut pts = Vec::with_capacity(lambdas.len());
    let mut samples = Vec::with_capacity(lambdas.len());
    for &lambda in &lambdas {
        let v = osc_integral_2d_separable(
            lambda,
            |x| x * x * x / 3.0,
            amp,
            (-1.0, 1.0),
            |y| y * y * y * y,
            amp,
            (-1.0, 1.0),
            &opts,
        )?;
        pts.push((lambda.log2(), v.norm().log2()));
        samples.push((lambda, v));
    }
    let fit = decay_fit(&pts)?;
    let expected = -(1.0 / 3.0 + 0.25);
    let within = (fit.slope - expected).abs() <= cfg.slope_tol;
    cases.push(DecayCase {
        name: "product_3_4",
        expected_slope: expected,
        fit,
        within,
        samples,
    });
    Ok(cases)
}

pub struct CounterexampleCase {
    pub delta: f64,
    pub fit: DecayFit,
    /// Slope within `expected_slope +- slope_tol`.
    pub slope_ok: bool,
    /// Slope strictly above `control_floor`: the generic cubic-family rate
    /// is genuinely violated, not just missed by noise.
    pub control_ok: bool,
    /// `(lambda, J(lambda))` pairs behind the fit.
    pub samples: Vec<(f64, Complex<f64>)>,
}

pub struct CounterexampleReport {
    pub cases: Vec<CounterexampleCase>,
    pub expected_slope: f64,
    pub slope_tol: f64,
    pub control_floor: f64,
    /// Exact Newton data of the shear-transformed phase at delta = 1/16:
    /// principal edge [(0,4), (2,1)], weight (3/8, 1/4), distance 8/5.
    pub edge_ok: bool,
    pub kappa_ok: bool,
    pub distance_ok: bool,
}

impl CounterexampleReport {
    pub fn all_ok(&self) -> bool {
        self.edge_ok
            && self.kappa_ok
            && self.distance_ok
            && self.cases.iter().all(|c| c.slope_ok && c.control_ok)
    }
}

/// `|J(lambda)|` for the quartic perturbation, fitted per delta over the
/// dyadic lambda range. The bump pair isolates the degenerate critical point
/// `(0, delta)`; the companion nondegenerate point sits outside the support
/// for every admissible delta.
pub fn check_counterexample(
    deltas: &[f64],
    cfg: &VerifyConfig,
) -> Result<CounterexampleReport, VerifyError> {
    let poly = D4Phase::normal_form_poly(&rat(1, 2))?;
    let np = newton_polyhedron(&poly)?;
    let edge_ok = match principal_face(&np) {
        Face::Edge(e) => {
            *e.from.e1() == rat_i(0)
                && *e.from.e2() == rat_i(4)
                && *e.to.e1() == rat_i(2)
                && *e.to.e2() == rat_i(1)
        }
        _ => false,
    };
    let w = principal_weight(&np)?;
    let kappa_ok = w.k1 == rat(3, 8) && w.k2 == rat(1, 4);
    let distance_ok = newton_distance(&np) == rat(8, 5);

    let opts = QuadOpts::default();
    let lambdas = dyadic_lambdas(cfg.lambda_min_exp, cfg.lambda_max_exp);
    let expected_slope = -5.0 / 8.0;
    let control_floor = -2.0 / 3.0 + 0.02;
    let mut cases = Vec::new();
    for &delta in deltas {
        if !(delta > 0.0 && delta <= 0.3) {
            return Err(VerifyError::Domain(format!(
                "delta must lie in (0, 0.3], got {delta}"
            )));
        }
        let phase = D4Phase::new(delta)?;
        let amp1 = CutoffSpec::Bump {
            center: 0.0,
            radius: 0.25,
        };
        let amp2 = CutoffSpec::Bump {
            center: delta,
            radius: 0.25,
        };
        let mut pts = Vec::with_capacity(lambdas.len());
        let mut samples = Vec::with_capacity(lambdas.len());
        for &lambda in &lambdas {
            let v = osc_integral_2d(
                lambda,
                |x1, x2| phase.eval(x1, x2),
                |x1, x2| amp1.eval(x1) * amp2.eval(x2),
                (-0.25, 0.25),
                (delta - 0.25, delta + 0.25),
                &opts,
            )?;
            pts.push((lambda.log2(), v.norm().log2()));
            samples.push((lambda, v));
        }
        let fit = decay_fit(&pts)?;
        let slope_ok = (fit.slope - expected_slope).abs() <= cfg.slope_tol;
        let control_ok = fit.slope > control_floor;
        cases.push(CounterexampleCase {
            delta,
            fit,
            slope_ok,
            control_ok,
            samples,
        });
    }
    Ok(CounterexampleReport {
        cases,
        expected_slope,
        slope_tol: cfg.slope_tol,
        control_floor,
        edge_ok,
        kappa_ok,
        distance_ok,
    })
}

/// `|J|` of the quartic perturbation at one `(delta, lambda)` point; used to
/// watch the limit toward the unperturbed phase.
pub fn counterexample_abs(delta: f64, lambda: f64) -> Result<f64, VerifyError> {
    let phase = D4Phase::new(delta)?;
    let amp1 = CutoffSpec::Bump {
        center: 0.0,
        radius: 0.25,
    };
    let amp2 = CutoffSpec::Bump {
        center: delta,
        radius: 0.25,
    };
    let v = osc_integral_2d(
        lambda,
        |x1, x2| phase.eval(x1, x2),
        |x1, x2| amp1.eval(x1) * amp2.eval(x2),
        (-0.25, 0.25),
        (delta - 0.25, delta + 0.25),
        &QuadOpts::default(),
    )?;
    Ok(v.norm())
}

/// The unperturbed comparison point: `x1^3 + x2^4` with the same bump pair
/// centered at the origin.
pub fn unperturbed_abs(lambda: f64) -> Result<f64, VerifyError> {
    let amp = CutoffSpec::Bump {
        center: 0.0,
        radius: 0.25,
    };
    let v = osc_integral_2d_separable(
        lambda,
        |x1| x1 * x1 * x1,
        |x1| amp.eval(x1),
        (-0.25, 0.25),
        |x2| x2 * x2 * x2 * x2,
        |x2| amp.eval(x2),
        (-0.25, 0.25),
        &QuadOpts::default(),
    )?;
    Ok(v.norm())
}
