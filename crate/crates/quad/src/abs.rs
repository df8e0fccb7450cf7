//! Adaptive quadrature for absolute (non-oscillatory) integrands. The
//! integrands behind the bound checks are smooth away from a few sharp
//! ridges whose locations the caller usually knows, so the driver accepts
//! seed points: initial panel edges that force refinement to start near the
//! ridges instead of hoping a coarse probe notices them.

use crate::error::QuadError;
use crate::gl::{gauss_legendre, gl16};

#[derive(Debug, Clone)]
pub struct AbsOpts {
    /// Absolute tolerance on the final value.
    pub tol: f64,
    /// Cap on the number of panels examined in one call.
    pub max_panels: usize,
}

impl Default for AbsOpts {
    fn default() -> Self {
        AbsOpts {
            tol: 1e-8,
            max_panels: 1 << 16,
        }
    }
}

fn gl_on<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, xs: &[f64], ws: &[f64]) -> f64 {
    let half = (hi - lo) / 2.0;
    let mid = lo + half;
    let mut acc = 0.0;
    for (x, w) in xs.iter().zip(ws) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// `int_a^b f`, refining panels until the local 8-vs-16-node discrepancy
/// fits inside a share of `tol` proportional to panel width.
pub fn integrate_abs_1d<F: Fn(f64) -> f64>(
    f: F,
    support: (f64, f64),
    seeds: &[f64],
    opts: &AbsOpts,
) -> Result<f64, QuadError> {
    let (a, b) = support;
    if !(b > a) || !a.is_finite() || !b.is_finite() {
        return Err(QuadError::Domain(format!("bad interval [{a}, {b}]")));
    }
    let (xs16, ws16) = gl16();
    let (xs8, ws8) = gauss_legendre(8);
    let mut edges: Vec<f64> = Vec::with_capacity(seeds.len() + 2);
    edges.push(a);
    edges.extend(seeds.iter().copied().filter(|s| *s > a && *s < b));
    edges.push(b);
    edges.sort_by(|p, q| p.partial_cmp(q).unwrap());
    edges.dedup();

    let width = b - a;
    let mut stack: Vec<(f64, f64)> = edges.windows(2).rev().map(|w| (w[0], w[1])).collect();
    let mut total = 0.0;
    let mut used = 0usize;
    while let Some((lo, hi)) = stack.pop() {
        used += 1;
        if used > opts.max_panels {
            return Err(QuadError::ResolutionBudget {
                needed: used + stack.len(),
                budget: opts.max_panels,
            });
        }
        let coarse = gl_on(&f, lo, hi, &xs8, &ws8);
        let fine = gl_on(&f, lo, hi, xs16, ws16);
        let share = opts.tol * ((hi - lo) / width);
        if (fine - coarse).abs() <= share || (hi - lo) < 1e-14 * width {
            total += fine;
        } else {
            let mid = lo + (hi - lo) / 2.0;
            stack.push((mid, hi));
            stack.push((lo, mid));
        }
    }
    Ok(total)
}

/// Iterated 2-D version: adaptive in `x1` of an adaptive inner integral in
/// `x2`. `seeds2` supplies inner panel edges as a function of `x1`.
pub fn integrate_abs_2d<F, S>(
    f: F,
    support1: (f64, f64),
    support2: (f64, f64),
    seeds2: S,
    opts: &AbsOpts,
) -> Result<f64, QuadError>
where
    F: Fn(f64, f64) -> f64,
    S: Fn(f64) -> Vec<f64>,
{
    let inner_opts = AbsOpts {
        tol: opts.tol / 8.0,
        max_panels: opts.max_panels,
    };
    let failure: std::cell::RefCell<Option<QuadError>> = std::cell::RefCell::new(None);
    let outer = integrate_abs_1d(
        |x1| {
            if failure.borrow().is_some() {
                return 0.0;
            }
            match integrate_abs_1d(|x2| f(x1, x2), support2, &seeds2(x1), &inner_opts) {
                Ok(v) => v,
                Err(e) => {
                    *failure.borrow_mut() = Some(e);
                    0.0
                }
            }
        },
        support1,
        &[],
        opts,
    )?;
    match failure.into_inner() {
        Some(e) => Err(e),
        None => Ok(outer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_square_has_unit_mass() {
        let v = integrate_abs_2d(
            |_, _| 1.0,
            (0.0, 1.0),
            (0.0, 1.0),
            |_| Vec::new(),
            &AbsOpts::default(),
        )
        .unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn product_tails_match_the_closed_form() {
        // int (1+|t|)^-4 dt = 2/3, so the product integrand gives (2/3)^2
        // up to the truncation tail.
        let v = integrate_abs_2d(
            |y1, y2| (1.0 + y1.abs()).powi(-4) * (1.0 + y2.abs()).powi(-4),
            (-64.0, 64.0),
            (-64.0, 64.0),
            |_| vec![0.0],
            &AbsOpts::default(),
        )
        .unwrap();
        let want = (2.0f64 / 3.0).powi(2);
        assert!((v - want).abs() < 1e-5, "{v} vs {want}");
    }

    #[test]
    fn seeds_rescue_a_narrow_ridge() {
        // A spike of width 1e-6 at t = 0.3 inside [-500, 500]: mass
        // ~ pi * 1e-6. Seeded edges make the refinement find it.
        let spike = |t: f64| 1.0 / (1.0 + ((t - 0.3) / 1e-6).powi(2));
        let seeds: Vec<f64> = (-20..=20).map(|k| 0.3 + 1e-6 * k as f64).collect();
        let opts = AbsOpts {
            tol: 1e-12,
            max_panels: 1 << 18,
        };
        let v = integrate_abs_1d(spike, (-500.0, 500.0), &seeds, &opts).unwrap();
        let want = std::f64::consts::PI * 1e-6; // arctan tails are ~4e-9 relative
        assert!((v - want).abs() < 2e-12, "{v} vs {want}");
    }

    #[test]
    fn budget_excess_is_an_error() {
        let opts = AbsOpts {
            tol: 1e-14,
            max_panels: 8,
        };
        let err = integrate_abs_1d(|t| (40.0 * t).sin().abs(), (0.0, 10.0), &[], &opts);
        assert!(matches!(err, Err(QuadError::ResolutionBudget { .. })));
    }
}
