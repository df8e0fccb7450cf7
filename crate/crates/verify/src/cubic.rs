//! Root-aware panel seeding. The absolute integrands behind the bound checks
//! concentrate along the zero set of a cubic `u(y) = c0 + c1 y + c3 y^3`;
//! handing the adaptive driver panel edges laddered around each real root
//! guarantees the ridges are resolved instead of discovered by luck.

use std::f64::consts::TAU;

fn polish(t: f64, p: f64, q: f64) -> f64 {
    let mut t = t;
    for _ in 0..2 {
        let f = t * t * t + p * t + q;
        let df = 3.0 * t * t + p;
        if df.abs() > 1e-300 {
            t -= f / df;
        }
    }
    t
}

/// Real roots of `t^3 + p t + q`, ascending.
pub fn depressed_cubic_roots(p: f64, q: f64) -> Vec<f64> {
    let disc = -4.0 * p * p * p - 27.0 * q * q;
    let mut roots = if disc > 0.0 {
        // Three distinct real roots; requires p < 0.
        let m = (-p / 3.0).sqrt();
        let arg = (3.0 * q / (2.0 * p * m)).clamp(-1.0, 1.0);
        let phi = arg.acos();
        (0..3)
            .map(|k| 2.0 * m * ((phi - TAU * k as f64) / 3.0).cos())
            .collect()
    } else if disc == 0.0 {
        if p == 0.0 {
            vec![0.0]
        } else {
            // Simple root and a double root.
            vec![3.0 * q / p, -3.0 * q / (2.0 * p)]
        }
    } else {
        // One real root; the sign split keeps the cube root cancellation-free.
        if q == 0.0 {
            vec![0.0]
        } else {
            let s = (q * q / 4.0 + p * p * p / 27.0).sqrt();
            let a = -q.signum() * (q.abs() / 2.0 + s).cbrt();
            vec![a - p / (3.0 * a)]
        }
    };
    for r in &mut roots {
        *r = polish(*r, p, q);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

/// Panel-edge seeds bracketing each real root of `c0 + c1 y + c3 y^3` inside
/// `[lo, hi]`, spaced dyadically from the scale on which `|u|` reaches 1.
pub fn ridge_seeds(c0: f64, c1: f64, c3: f64, lo: f64, hi: f64) -> Vec<f64> {
    let width = hi - lo;
    let mut seeds = Vec::new();
    let roots = if c3 != 0.0 {
        depressed_cubic_roots(c1 / c3, c0 / c3)
    } else if c1 != 0.0 {
        vec![-c0 / c1]
    } else {
        return seeds;
    };
    for r in roots {
        if r < lo - width || r > hi + width {
            continue;
        }
        // Scale on which |u| grows to 1 near the root, from whichever
        // derivative order is the first to be nonzero there.
        let d1 = (c1 + 3.0 * c3 * r * r).abs();
        let d2 = (3.0 * c3 * r).abs();
        let d3 = c3.abs();
        let mut w = width;
        if d1 > 1e-300 {
            w = w.min(1.0 / d1);
        }
        if d2 > 1e-300 {
            w = w.min((1.0 / d2).sqrt());
        }
        if d3 > 1e-300 {
            w = w.min((1.0 / d3).cbrt());
        }
        let w = w.max(1e-12 * width.max(1.0));
        seeds.push(r);
        for k in 0..=16 {
            let off = w * (k as f64).exp2();
            seeds.push(r - off);
            seeds.push(r + off);
            if off > width {
                break;
            }
        }
    }
    seeds
}
