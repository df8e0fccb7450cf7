//! Composite quadrature of `int a(x) exp(i lambda phi(x)) dx` in one and two
//! dimensions. Panels are sized from a sampled bound on `|phi'|` so that each
//! panel covers at most 1.5 wavelengths of the integrand; with the 16-point
//! rule that keeps more than ten nodes per oscillation.

use num_complex::Complex;
use rayon::prelude::*;

use crate::error::QuadError;
use crate::gl::{gauss_legendre, gl16};

#[derive(Debug, Clone)]
pub struct QuadOpts {
    pub nodes_per_panel: usize,
    /// Cap on the total number of panels (product over axes in 2-D).
    pub panel_budget: usize,
    /// Panel width in units of the shortest resolved wavelength.
    pub wavelength_factor: f64,
    /// Sample count for the derivative bound.
    pub derivative_samples: usize,
    /// Panels used even where the phase is flat.
    pub min_panels: usize,
}

impl Default for QuadOpts {
    fn default() -> Self {
        QuadOpts {
            nodes_per_panel: 16,
            panel_budget: 1 << 21,
            wavelength_factor: 1.5,
            derivative_samples: 1025,
            min_panels: 4,
        }
    }
}

impl QuadOpts {
    fn rule(&self) -> (Vec<f64>, Vec<f64>) {
        if self.nodes_per_panel == 16 {
            gl16().clone()
        } else {
            gauss_legendre(self.nodes_per_panel)
        }
    }
}

/// Sampled upper bound for `max |f'|` on `[a, b]`.
pub fn max_abs_derivative<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, samples: usize) -> f64 {
    let n = samples.max(3);
    let h = (b - a) / (n as f64 - 1.0);
    let mut prev = f(a);
    let mut best = 0.0f64;
    for i in 1..n {
        let x = a + h * i as f64;
        let cur = f(x);
        best = best.max(((cur - prev) / h).abs());
        prev = cur;
    }
    best
}

fn panel_count(
    lambda: f64,
    dphi_max: f64,
    width: f64,
    opts: &QuadOpts,
) -> Result<usize, QuadError> {
    if !(width > 0.0) || !width.is_finite() {
        return Err(QuadError::Domain(format!("bad interval width {width}")));
    }
    let rate = lambda * dphi_max;
    let needed = if rate <= 0.0 {
        opts.min_panels
    } else {
        let wavelength = std::f64::consts::TAU / rate;
        let panel_w = opts.wavelength_factor * wavelength;
        ((width / panel_w).ceil() as usize).max(opts.min_panels)
    };
    if needed > opts.panel_budget {
        return Err(QuadError::ResolutionBudget {
            needed,
            budget: opts.panel_budget,
        });
    }
    Ok(needed)
}

fn check_lambda(lambda: f64) -> Result<(), QuadError> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(QuadError::Domain(format!(
            "lambda must be positive and finite, got {lambda}"
        )));
    }
    Ok(())
}

/// `int_a^b amp(x) exp(i lambda phase(x)) dx`.
pub fn osc_integral_1d<P, A>(
    lambda: f64,
    phase: P,
    amp: A,
    support: (f64, f64),
    opts: &QuadOpts,
) -> Result<Complex<f64>, QuadError>
where
    P: Fn(f64) -> f64,
    A: Fn(f64) -> f64,
{
    check_lambda(lambda)?;
    let (a, b) = support;
    let dmax = max_abs_derivative(&phase, a, b, opts.derivative_samples);
    let panels = panel_count(lambda, dmax, b - a, opts)?;
    let (xs, ws) = opts.rule();
    let pw = (b - a) / panels as f64;
    let mut total = Complex::new(0.0, 0.0);
    for p in 0..panels {
        let lo = a + pw * p as f64;
        let half = pw / 2.0;
        let mid = lo + half;
        let mut acc = Complex::new(0.0, 0.0);
        for (x, w) in xs.iter().zip(&ws) {
            let t = mid + half * x;
            let av = amp(t);
            if av != 0.0 {
                acc += Complex::from_polar(w * av, lambda * phase(t));
            }
        }
        total += acc * half;
    }
    Ok(total)
}

/// Per-axis sampled bounds for `max |d phi/dx1|` and `max |d phi/dx2|` on a
/// rectangle.
fn max_abs_gradient<P>(phase: &P, s1: (f64, f64), s2: (f64, f64), samples: usize) -> (f64, f64)
where
    P: Fn(f64, f64) -> f64,
{
    let n = samples.max(3);
    let h1 = (s1.1 - s1.0) / (n as f64 - 1.0);
    let h2 = (s2.1 - s2.0) / (n as f64 - 1.0);
    let mut d1 = 0.0f64;
    let mut d2 = 0.0f64;
    let mut row_prev: Vec<f64> = (0..n).map(|j| phase(s1.0, s2.0 + h2 * j as f64)).collect();
    for i in 1..n {
        let x1 = s1.0 + h1 * i as f64;
        let row: Vec<f64> = (0..n).map(|j| phase(x1, s2.0 + h2 * j as f64)).collect();
        for j in 0..n {
            d1 = d1.max(((row[j] - row_prev[j]) / h1).abs());
            if j > 0 {
                d2 = d2.max(((row[j] - row[j - 1]) / h2).abs());
            }
        }
        row_prev = row;
    }
    (d1, d2)
}

/// `int int amp(x) exp(i lambda phase(x)) dx1 dx2` over a rectangle. Panels
/// are sized per axis; rows of panels run in parallel and are reduced in a
/// fixed order, so results are bit-stable across thread counts.
pub fn osc_integral_2d<P, A>(
    lambda: f64,
    phase: P,
    amp: A,
    support1: (f64, f64),
    support2: (f64, f64),
    opts: &QuadOpts,
) -> Result<Complex<f64>, QuadError>
where
    P: Fn(f64, f64) -> f64 + Sync,
    A: Fn(f64, f64) -> f64 + Sync,
{
    check_lambda(lambda)?;
    let grid = (opts.derivative_samples as f64).sqrt().ceil() as usize + 32;
    let (d1, d2) = max_abs_gradient(&phase, support1, support2, grid);
    let n1 = panel_count(lambda, d1, support1.1 - support1.0, opts)?;
    let n2 = panel_count(lambda, d2, support2.1 - support2.0, opts)?;
    if n1.saturating_mul(n2) > opts.panel_budget {
        return Err(QuadError::ResolutionBudget {
            needed: n1.saturating_mul(n2),
            budget: opts.panel_budget,
        });
    }
    let (xs, ws) = opts.rule();
    let pw1 = (support1.1 - support1.0) / n1 as f64;
    let pw2 = (support2.1 - support2.0) / n2 as f64;
    let half1 = pw1 / 2.0;
    let half2 = pw2 / 2.0;
    let rows: Vec<Complex<f64>> = (0..n1)
        .into_par_iter()
        .map(|p1| {
            let mid1 = support1.0 + pw1 * p1 as f64 + half1;
            let mut row = Complex::new(0.0, 0.0);
            for p2 in 0..n2 {
                let mid2 = support2.0 + pw2 * p2 as f64 + half2;
                let mut acc = Complex::new(0.0, 0.0);
                for (x1, w1) in xs.iter().zip(&ws) {
                    let t1 = mid1 + half1 * x1;
                    for (x2, w2) in xs.iter().zip(&ws) {
                        let t2 = mid2 + half2 * x2;
                        let av = amp(t1, t2);
                        if av != 0.0 {
                            acc += Complex::from_polar(w1 * w2 * av, lambda * phase(t1, t2));
                        }
                    }
                }
                row += acc;
            }
            row * (half1 * half2)
        })
        .collect();
    Ok(rows.into_iter().sum())
}

/// Product-form shortcut when phase and amplitude both split as
/// `phi1(x1) + phi2(x2)` and `a1(x1) a2(x2)`.
pub fn osc_integral_2d_separable<P1, A1, P2, A2>(
    lambda: f64,
    phase1: P1,
    amp1: A1,
    support1: (f64, f64),
    phase2: P2,
    amp2: A2,
    support2: (f64, f64),
    opts: &QuadOpts,
) -> Result<Complex<f64>, QuadError>
where
    P1: Fn(f64) -> f64,
    A1: Fn(f64) -> f64,
    P2: Fn(f64) -> f64,
    A2: Fn(f64) -> f64,
{
    let i1 = osc_integral_1d(lambda, phase1, amp1, support1, opts)?;
    let i2 = osc_integral_1d(lambda, phase2, amp2, support2, opts)?;
    Ok(i1 * i2)
}
