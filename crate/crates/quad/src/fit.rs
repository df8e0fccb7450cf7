//! Least-squares slope extraction from dyadic decay data.

use crate::error::QuadError;

/// Fit of `y = intercept + slope * x` to `(log2 lambda, log2 |I|)` samples.
#[derive(Debug, Clone)]
pub struct DecayFit {
    pub slope: f64,
    pub intercept: f64,
    pub max_residual: f64,
    pub points: Vec<(f64, f64)>,
}

/// `2^j` for `j` in `min_exp..=max_exp`.
pub fn dyadic_lambdas(min_exp: u32, max_exp: u32) -> Vec<f64> {
    (min_exp..=max_exp).map(|j| (j as f64).exp2()).collect()
}

/// Least-squares line through the finite points. Needs at least six of them
/// to say anything about an asymptotic rate.
pub fn decay_fit(points: &[(f64, f64)]) -> Result<DecayFit, QuadError> {
    let clean: Vec<(f64, f64)> = points
        .iter()
        .copied()
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();
    if clean.len() < 6 {
        return Err(QuadError::InsufficientData {
            got: clean.len(),
            need: 6,
        });
    }
    let n = clean.len() as f64;
    let sx: f64 = clean.iter().map(|p| p.0).sum();
    let sy: f64 = clean.iter().map(|p| p.1).sum();
    let sxx: f64 = clean.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = clean.iter().map(|p| p.0 * p.1).sum();
    let det = n * sxx - sx * sx;
    if det.abs() < 1e-12 {
        return Err(QuadError::Domain(
            "abscissae are collinear; cannot fit a slope".into(),
        ));
    }
    let slope = (n * sxy - sx * sy) / det;
    let intercept = (sy - slope * sx) / n;
    let max_residual = clean
        .iter()
        .map(|&(x, y)| (y - intercept - slope * x).abs())
        .fold(0.0f64, f64::max);
    Ok(DecayFit {
        slope,
        intercept,
        max_residual,
        points: clean,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law_is_recovered_exactly() {
        // |I| = 7 * lambda^(-5/8) gives log2 |I| = log2 7 - (5/8) log2 lambda.
        let pts: Vec<(f64, f64)> = (8..=16)
            .map(|j| (j as f64, 7.0f64.log2() - 0.625 * j as f64))
            .collect();
        let fit = decay_fit(&pts).unwrap();
        assert!((fit.slope + 0.625).abs() < 1e-12);
        assert!((fit.intercept - 7.0f64.log2()).abs() < 1e-12);
        assert!(fit.max_residual < 1e-12);
    }

    #[test]
    fn too_few_points_is_an_error_not_a_guess() {
        let pts: Vec<(f64, f64)> = (0..5).map(|j| (j as f64, -(j as f64))).collect();
        match decay_fit(&pts) {
            Err(QuadError::InsufficientData { got: 5, need: 6 }) => {}
            other => panic!("expected InsufficientData, got {other:?}"),
        }
        let mut with_nan = pts.clone();
        with_nan.push((5.0, f64::NAN));
        with_nan.push((6.0, f64::INFINITY));
        assert!(decay_fit(&with_nan).is_err());
    }

    #[test]
    fn dyadic_grid_is_inclusive() {
        let l = dyadic_lambdas(8, 10);
        assert_eq!(l, vec![256.0, 512.0, 1024.0]);
    }
}
