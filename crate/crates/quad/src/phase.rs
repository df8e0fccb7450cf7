//! Concrete phase functions used by the verification suites: the perturbed
//! normal forms with prescribed coefficient slots, the quartic phase whose
//! normal-form coordinates are reached through a genuinely nonlinear change
//! of variables, and fast evaluators for parsed polynomials.

use num_traits::ToPrimitive;
use phaselab_core::poly::PuiseuxPoly;
use phaselab_core::rational::to_f64;

use crate::error::QuadError;

/// Coefficient pattern of the cubic profile `u^3/3 - B1 u` and its first
/// Taylor data at the right-hand root: `[1, (n^2-n-2)/2, n(n-2),
/// n(n-1)(n-2)/6, (n-1)(n-2)/2]`. The last entry is `G1*G3 - G2`; it is
/// nonzero for every integer `n >= 3`, which is what makes the root
/// nondegenerate, and the function asserts it.
pub fn g_constants(n: i64) -> [i128; 5] {
    assert!(n >= 3, "profile order must be at least 3, got {n}");
    let n = n as i128;
    let g1 = 1i128;
    let g2 = (n * n - n - 2) / 2;
    let g3 = n * (n - 2);
    let g4 = n * (n - 1) * (n - 2) / 6;
    let g5 = g1 * g3 - g2;
    assert!(g5 != 0, "degenerate profile at n = {n}");
    [g1, g2, g3, g4, g5]
}

/// `x1^3/3 - b1 x1 + x2^B + sum_j mid[j-2] x2^j + delta30 x2 (+ delta0 x1 x2)`
/// with `j` running over `2..=B-2`. The `delta0` cross term is only present
/// on the degenerate branch. Coefficient slots are plain constants, so the
/// scaling behaviour of the family is carried entirely by how callers choose
/// them.
#[derive(Debug, Clone)]
pub struct FullSharpPhase {
    pub b_exp: u64,
    pub b1: f64,
    pub delta0: f64,
    pub delta30: f64,
    /// Coefficients of `x2^j` for `j = 2..=B-2`, so the length is `B - 3`.
    pub mid: Vec<f64>,
    pub degenerate: bool,
}

impl FullSharpPhase {
    pub fn new(
        b_exp: u64,
        b1: f64,
        delta0: f64,
        delta30: f64,
        mid: Vec<f64>,
        degenerate: bool,
    ) -> Result<Self, QuadError> {
        if b_exp < 3 {
            return Err(QuadError::Domain(format!(
                "vertical exponent must be at least 3, got {b_exp}"
            )));
        }
        if mid.len() != (b_exp - 3) as usize {
            return Err(QuadError::Domain(format!(
                "expected {} middle coefficients for B = {}, got {}",
                b_exp - 3,
                b_exp,
                mid.len()
            )));
        }
        Ok(FullSharpPhase {
            b_exp,
            b1,
            delta0,
            delta30,
            mid,
            degenerate,
        })
    }

    pub fn eval(&self, x1: f64, x2: f64) -> f64 {
        let mut v = x1 * x1 * x1 / 3.0 - self.b1 * x1;
        v += x2.powi(self.b_exp as i32);
        for (idx, c) in self.mid.iter().enumerate() {
            let j = idx as i32 + 2;
            v += c * x2.powi(j);
        }
        v += self.delta30 * x2;
        if self.degenerate {
            v += self.delta0 * x1 * x2;
        }
        v
    }
}

/// Quartic phase, normalized to vanish at its degenerate critical point
/// `(0, delta)`:
///
/// `Phi(x) = x1^3 + w^4 + 4 delta w^3 - 3 t^2 x1 w^2`,
/// `w = x2 - delta`, `t = (2 delta)^(1/3)`.
///
/// At `delta = 0` this is the unperturbed `x1^3 + x2^4`. The linear
/// substitution `z1 = x1 - t w`, `z2 = x1 + 2 t w` turns it into
/// `z1^2 z2 + ((z2 - z1)/(3 t))^4` with no error term at all, because
/// `z1^2 z2 = x1^3 - 3 t^2 x1 w^2 + 2 t^3 w^3` and `2 t^3 = 4 delta`.
#[derive(Debug, Clone, Copy)]
pub struct D4Phase {
    pub delta: f64,
    pub t: f64,
}

impl D4Phase {
    pub fn new(delta: f64) -> Result<Self, QuadError> {
        if !(delta > 0.0) || !delta.is_finite() {
            return Err(QuadError::Domain(format!(
                "delta must be positive and finite, got {delta}"
            )));
        }
        Ok(D4Phase {
            delta,
            t: (2.0 * delta).cbrt(),
        })
    }

    pub fn degenerate_point(&self) -> (f64, f64) {
        (0.0, self.delta)
    }

    pub fn eval(&self, x1: f64, x2: f64) -> f64 {
        let d = self.delta;
        let w = x2 - d;
        let w2 = w * w;
        x1 * x1 * x1 + w2 * w2 + 4.0 * d * w2 * w - 3.0 * self.t * self.t * x1 * w2
    }

    pub fn to_normal(&self, x1: f64, x2: f64) -> (f64, f64) {
        let w = x2 - self.delta;
        (x1 - self.t * w, x1 + 2.0 * self.t * w)
    }

    pub fn normal_form_eval(&self, z1: f64, z2: f64) -> f64 {
        let u = (z2 - z1) / (3.0 * self.t);
        let u2 = u * u;
        z1 * z1 * z2 + u2 * u2
    }

    /// The same normal form as an exact polynomial, usable only when both
    /// `delta` and `t = (2 delta)^(1/3)` are the given rationals. The one
    /// point used in practice is `delta = 1/16`, `t = 1/2`.
    pub fn normal_form_poly(
        t: &phaselab_core::Rat,
    ) -> Result<PuiseuxPoly, phaselab_core::CoreError> {
        let quartic = phaselab_core::parse_poly("x2 - x1")?.pow(4);
        let t4 = phaselab_core::rational::pow_i(t, 4);
        let scale = phaselab_core::rational::rat_i(81) * t4;
        let lead = phaselab_core::parse_poly("x1^2*x2")?;
        Ok(lead.add(&quartic.scale(&(phaselab_core::rational::rat_i(1) / scale))))
    }
}

/// Dense evaluator for a polynomial with small nonnegative integer
/// exponents.
#[derive(Debug, Clone)]
pub struct CompiledPoly {
    terms: Vec<(f64, i32, i32)>,
}

impl CompiledPoly {
    pub fn from_poly(p: &PuiseuxPoly) -> Result<Self, QuadError> {
        let mut terms = Vec::with_capacity(p.num_terms());
        for (e, c) in p.terms() {
            if !e.is_integral() {
                return Err(QuadError::Domain(format!(
                    "cannot compile fractional exponent {e}"
                )));
            }
            let e1 = e
                .e1()
                .to_integer()
                .to_i32()
                .ok_or_else(|| QuadError::Domain(format!("exponent {e} too large")))?;
            let e2 = e
                .e2()
                .to_integer()
                .to_i32()
                .ok_or_else(|| QuadError::Domain(format!("exponent {e} too large")))?;
            terms.push((to_f64(c), e1, e2));
        }
        Ok(CompiledPoly { terms })
    }

    pub fn eval(&self, x1: f64, x2: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(c, e1, e2)| c * x1.powi(e1) * x2.powi(e2))
            .sum()
    }
}

/// A phase the quadrature driver can evaluate, whatever its origin.
#[derive(Debug, Clone)]
pub enum PhaseDescriptor {
    FullSharp(FullSharpPhase),
    D4(D4Phase),
    Poly(CompiledPoly),
}

impl PhaseDescriptor {
    pub fn eval(&self, x1: f64, x2: f64) -> f64 {
        match self {
            PhaseDescriptor::FullSharp(p) => p.eval(x1, x2),
            PhaseDescriptor::D4(p) => p.eval(x1, x2),
            PhaseDescriptor::Poly(p) => p.eval(x1, x2),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use phaselab_core::rational::rat;

    #[test]
    fn profile_constants_satisfy_their_identities() {
        for n in 3..=12 {
            let [g1, g2, g3, g4, g5] = g_constants(n);
            assert_eq!(g1, 1);
            assert_eq!(g5, g1 * g3 - g2);
            assert_eq!(g5, (n as i128 - 1) * (n as i128 - 2) / 2);
            assert_eq!(3 * g4, n as i128 * g5);
            assert!(g5 > 0);
        }
    }

    #[test]
    fn quartic_phase_vanishes_at_its_degenerate_point() {
        for delta in [0.04, 0.0625, 0.1] {
            let p = D4Phase::new(delta).unwrap();
            let (c1, c2) = p.degenerate_point();
            assert_eq!(p.eval(c1, c2), 0.0);
            // The gradient vanishes there too.
            let h = 1e-6;
            let g1 = (p.eval(c1 + h, c2) - p.eval(c1 - h, c2)) / (2.0 * h);
            let g2 = (p.eval(c1, c2 + h) - p.eval(c1, c2 - h)) / (2.0 * h);
            assert!(g1.abs() < 1e-10 && g2.abs() < 1e-10, "delta {delta}");
        }
        // At delta -> 0 the phase tends to x1^3 + x2^4.
        let p = D4Phase::new(1e-9).unwrap();
        let (x1, x2) = (0.3, -0.2);
        let pure = x1 * x1 * x1 + x2 * x2 * x2 * x2;
        assert!((p.eval(x1, x2) - pure).abs() < 1e-5);
    }

    #[test]
    fn normal_form_substitution_is_an_identity() {
        // Phi(x) = Phi_tilde(z(x)) with no truncation error beyond
        // floating-point rounding.
        let points = [
            (0.11, 0.2),
            (-0.2, -0.13),
            (0.02, 0.31),
            (-0.31, 0.07),
            (0.25, -0.25),
        ];
        for delta in [0.04, 0.0625, 0.1] {
            let p = D4Phase::new(delta).unwrap();
            for &(x1, x2) in &points {
                let (z1, z2) = p.to_normal(x1, x2);
                let lhs = p.eval(x1, x2);
                let rhs = p.normal_form_eval(z1, z2);
                assert!(
                    (lhs - rhs).abs() <= 1e-12 * lhs.abs().max(1.0),
                    "delta {delta} point ({x1}, {x2}): {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn rational_normal_form_matches_the_float_one() {
        // delta = 1/16 makes t = 1/2 exactly representable.
        let p = D4Phase::new(1.0 / 16.0).unwrap();
        assert_eq!(p.t, 0.5);
        let poly = D4Phase::normal_form_poly(&rat(1, 2)).unwrap();
        let compiled = CompiledPoly::from_poly(&poly).unwrap();
        for &(z1, z2) in &[(0.3, 0.1), (-0.2, 0.4), (0.05, -0.17)] {
            let a = p.normal_form_eval(z1, z2);
            let b = compiled.eval(z1, z2);
            assert!((a - b).abs() < 1e-14, "({z1}, {z2}): {a} vs {b}");
        }
    }

    #[test]
    fn perturbed_phase_places_every_slot() {
        let p = FullSharpPhase::new(5, 0.25, 0.5, 0.125, vec![2.0, 4.0], true).unwrap();
        let (x1, x2) = (0.3f64, -0.2f64);
        let want = x1 * x1 * x1 / 3.0 - 0.25 * x1
            + x2.powi(5)
            + 2.0 * x2 * x2
            + 4.0 * x2 * x2 * x2
            + 0.125 * x2
            + 0.5 * x1 * x2;
        assert!((p.eval(x1, x2) - want).abs() < 1e-15);
        assert!(FullSharpPhase::new(5, 0.0, 0.0, 0.0, vec![1.0], false).is_err());
        assert!(FullSharpPhase::new(2, 0.0, 0.0, 0.0, vec![], false).is_err());
    }
}
