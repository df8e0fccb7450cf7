//! Cutoff functions used as quadrature amplitudes. One fixed mollifier
//! family (`exp(-1/u)` ramps) keeps every smooth cutoff C-infinity and the
//! numeric experiments reproducible.

/// Smooth transition: 0 for `u <= 0`, 1 for `u >= 1`, strictly monotone
/// in between.
pub fn smooth_step(u: f64) -> f64 {
    if u <= 0.0 {
        return 0.0;
    }
    if u >= 1.0 {
        return 1.0;
    }
    let f = |v: f64| (-1.0 / v).exp();
    let a = f(u);
    a / (a + f(1.0 - u))
}

/// One-dimensional cutoff profile.
#[derive(Debug, Clone, PartialEq)]
pub enum CutoffSpec {
    /// `1` on `|t - center| <= radius/2`, `0` on `|t - center| >= radius`,
    /// smooth in between.
    Bump { center: f64, radius: f64 },
    /// Supported on `inner <= |t| <= outer`, identically `1` on the middle
    /// half of the band, smooth ramps on the outer quarters.
    Annulus { inner: f64, outer: f64 },
    /// Sharp indicator of `[a, b]`.
    Indicator { a: f64, b: f64 },
}

impl CutoffSpec {
    pub fn eval(&self, t: f64) -> f64 {
        match *self {
            CutoffSpec::Bump { center, radius } => {
                debug_assert!(radius > 0.0);
                let d = (t - center).abs();
                if d >= radius {
                    0.0
                } else if d <= radius / 2.0 {
                    1.0
                } else {
                    smooth_step((radius - d) / (radius / 2.0))
                }
            }
            CutoffSpec::Annulus { inner, outer } => {
                debug_assert!(0.0 <= inner && inner < outer);
                let r = t.abs();
                if r <= inner || r >= outer {
                    return 0.0;
                }
                let band = (outer - inner) / 4.0;
                let up = smooth_step((r - inner) / band);
                let down = smooth_step((outer - r) / band);
                up.min(down)
            }
            CutoffSpec::Indicator { a, b } => {
                if t >= a && t <= b {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Smallest interval containing the support.
    pub fn support(&self) -> (f64, f64) {
        match *self {
            CutoffSpec::Bump { center, radius } => (center - radius, center + radius),
            CutoffSpec::Annulus { outer, .. } => (-outer, outer),
            CutoffSpec::Indicator { a, b } => (a, b),
        }
    }
}
