//! Bivariate polynomials with nonnegative rational (Puiseux) exponents and
//! exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::CoreError;
use crate::rational::{pow_i, to_f64, Rat};

/// An exponent pair `(e1, e2)`, both nonnegative rationals.
/// Ordering is lexicographic, `e1` first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Exponent2 {
    e1: Rat,
    e2: Rat,
}

impl Exponent2 {
    pub fn new(e1: Rat, e2: Rat) -> Result<Self, CoreError> {
        if e1.is_negative() || e2.is_negative() {
            return Err(CoreError::NegativeExponent {
                e1: e1.to_string(),
                e2: e2.to_string(),
            });
        }
        Ok(Exponent2 { e1, e2 })
    }

    pub fn e1(&self) -> &Rat {
        &self.e1
    }

    pub fn e2(&self) -> &Rat {
        &self.e2
    }

    pub fn is_integral(&self) -> bool {
        self.e1.is_integer() && self.e2.is_integer()
    }
}

impl fmt::Display for Exponent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.e1, self.e2)
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Finitely supported exact polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PuiseuxPoly {
    terms: BTreeMap<Exponent2, Rat>,
}

impl PuiseuxPoly {
    pub fn zero() -> Self {
        PuiseuxPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = PuiseuxPoly::zero();
        if !c.is_zero() {
            p.terms.insert(
                Exponent2::new(Rat::zero(), Rat::zero()).unwrap(),
                c,
            );
        }
        p
    }

    pub fn monomial(e: Exponent2, c: Rat) -> Self {
        let mut p = PuiseuxPoly::zero();
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(terms: Vec<(Exponent2, Rat)>) -> Self {
        let mut p = PuiseuxPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponent2, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent2, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Exponent2> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, e: &Exponent2) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn has_integral_exponents(&self) -> bool {
        self.terms.keys().all(Exponent2::is_integral)
    }

    pub fn max_e2(&self) -> Option<Rat> {
        self.terms.keys().map(|e| e.e2().clone()).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rat) -> Self {
        if k.is_zero() {
            return PuiseuxPoly::zero();
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= k;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = PuiseuxPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = Exponent2::new(ea.e1() + eb.e1(), ea.e2() + eb.e2())
                    .expect("sum of nonnegative exponents");
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = PuiseuxPoly::constant(Rat::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute `x2 -> x2 + c * x1^a` (`a > 0`). Every `x2`-exponent must be
    /// a nonnegative integer for the binomial expansion to stay polynomial.
    pub fn substitute_shear(&self, c: &Rat, a: &Rat) -> Result<Self, CoreError> {
        if !a.is_positive() {
            return Err(CoreError::Domain(format!(
                "shear exponent must be positive, got {a}"
            )));
        }
        if c.is_zero() {
            return Ok(self.clone());
        }
        let mut out = PuiseuxPoly::zero();
        for (e, coeff) in &self.terms {
            if !e.e2().is_integer() {
                return Err(CoreError::Domain(format!(
                    "shear needs integer x2-exponents, found {}",
                    e.e2()
                )));
            }
            let n = e.e2().to_integer().to_u64().ok_or_else(|| {
                CoreError::Domain(format!("x2-exponent too large: {}", e.e2()))
            })?;
            for j in 0..=n {
                let b = binomial(n, j);
                let coef = coeff * Rat::from_integer(b) * pow_i(c, (n - j) as i64);
                let e1 = e.e1() + a * Rat::from_integer(BigInt::from(n - j));
                let e2 = Rat::from_integer(BigInt::from(j));
                out.add_term(Exponent2::new(e1, e2)?, coef);
            }
        }
        Ok(out)
    }

    /// Swap the roles of `x1` and `x2`.
    pub fn swap_vars(&self) -> Self {
        let mut out = PuiseuxPoly::zero();
        for (e, c) in &self.terms {
            out.add_term(
                Exponent2::new(e.e2().clone(), e.e1().clone()).unwrap(),
                c.clone(),
            );
        }
        out
    }

    /// Float evaluation. Fractional exponents restrict the corresponding
    /// variable to `>= 0`.
    pub fn evaluate(&self, x1: f64, x2: f64) -> Result<f64, CoreError> {
        let pow_var = |x: f64, e: &Rat, name: &str| -> Result<f64, CoreError> {
            if e.is_zero() {
                return Ok(1.0);
            }
            if e.is_integer() {
                let k = e.to_integer().to_i32().ok_or_else(|| {
                    CoreError::Domain(format!("exponent too large: {e}"))
                })?;
                Ok(x.powi(k))
            } else if x < 0.0 {
                Err(CoreError::Domain(format!(
                    "{name} = {x} < 0 under fractional exponent {e}"
                )))
            } else {
                Ok(x.powf(to_f64(e)))
            }
        };
        let mut acc = 0.0;
        for (e, c) in &self.terms {
            acc += to_f64(c) * pow_var(x1, e.e1(), "x1")? * pow_var(x2, e.e2(), "x2")?;
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point; integer exponents only.
    pub fn eval_rational(&self, x1: &Rat, x2: &Rat) -> Result<Rat, CoreError> {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            if !e.is_integral() {
                return Err(CoreError::Domain(format!(
                    "exact evaluation needs integer exponents, found {e}"
                )));
            }
            let p1 = e.e1().to_integer().to_i64().ok_or_else(|| {
                CoreError::Domain(format!("exponent too large: {}", e.e1()))
            })?;
            let p2 = e.e2().to_integer().to_i64().ok_or_else(|| {
                CoreError::Domain(format!("exponent too large: {}", e.e2()))
            })?;
            if (x1.is_zero() && p1 > 0) || (x2.is_zero() && p2 > 0) {
                continue;
            }
            acc += c * pow_i(x1, p1) * pow_i(x2, p2);
        }
        Ok(acc)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let fmt_exp = |e: &Rat| -> String {
            if e.is_integer() {
                format!("^{e}")
            } else {
                format!("^({e})")
            }
        };
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            let coeff_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            let has_vars = !e.e1().is_zero() || !e.e2().is_zero();
            if !mag.is_one() || !has_vars {
                factors.push(coeff_str);
            }
            if !e.e1().is_zero() {
                if e.e1().is_one() {
                    factors.push("x1".to_string());
                } else {
                    factors.push(format!("x1{}", fmt_exp(e.e1())));
                }
            }
            if !e.e2().is_zero() {
                if e.e2().is_one() {
                    factors.push("x2".to_string());
                } else {
                    factors.push(format!("x2{}", fmt_exp(e.e2())));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for PuiseuxPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_i};

    fn e(a: i64, b: i64) -> Exponent2 {
        Exponent2::new(rat_i(a), rat_i(b)).unwrap()
    }

    #[test]
    fn negative_exponents_rejected() {
        assert!(Exponent2::new(rat_i(-1), rat_i(0)).is_err());
    }

    #[test]
    fn terms_merge_and_cancel() {
        let p = PuiseuxPoly::from_terms(vec![
            (e(1, 1), rat_i(2)),
            (e(1, 1), rat_i(-2)),
            (e(0, 3), rat_i(1)),
        ]);
        assert_eq!(p.num_terms(), 1);
        assert_eq!(p.coeff(&e(0, 3)), rat_i(1));
    }

    #[test]
    fn shear_expands_binomially() {
        // (x2 + x1^2)^3 sheared by c = -1, a = 2 collapses to x2^3.
        let block = PuiseuxPoly::from_terms(vec![(e(0, 1), rat_i(1)), (e(2, 0), rat_i(1))]).pow(3);
        let sheared = block.substitute_shear(&rat_i(-1), &rat_i(2)).unwrap();
        assert_eq!(sheared, PuiseuxPoly::monomial(e(0, 3), rat_i(1)));
    }

    #[test]
    fn shear_is_inverted_by_opposite_shear() {
        let p = PuiseuxPoly::from_terms(vec![
            (e(1, 3), rat_i(1)),
            (e(9, 0), rat(1, 2)),
            (e(4, 1), rat_i(-3)),
        ]);
        let c = rat(2, 3);
        let a = rat_i(2);
        let back = p
            .substitute_shear(&c, &a)
            .unwrap()
            .substitute_shear(&(-c.clone()), &a)
            .unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn shear_matches_pointwise_evaluation() {
        let p = PuiseuxPoly::from_terms(vec![
            (e(0, 4), rat_i(1)),
            (e(3, 1), rat_i(-2)),
            (e(5, 0), rat(7, 3)),
        ]);
        let c = rat(-3, 2);
        let a = rat_i(1);
        let q = p.substitute_shear(&c, &a).unwrap();
        // q(x1, x2) == p(x1, x2 + c x1) exactly at rational points.
        for (x1, x2) in [(rat(1, 2), rat_i(3)), (rat_i(-2), rat(5, 7)), (rat_i(0), rat_i(1))] {
            let shifted = &x2 + &c * &x1;
            assert_eq!(
                q.eval_rational(&x1, &x2).unwrap(),
                p.eval_rational(&x1, &shifted).unwrap()
            );
        }
    }

    #[test]
    fn evaluate_rejects_negative_base_under_fractional_power() {
        let p = PuiseuxPoly::monomial(
            Exponent2::new(rat(7, 2), rat_i(0)).unwrap(),
            rat(1, 2),
        );
        assert!(p.evaluate(-1.0, 0.0).is_err());
        let v = p.evaluate(4.0, 0.0).unwrap();
        assert!((v - 0.5 * 128.0).abs() < 1e-12);
    }

    #[test]
    fn render_is_stable() {
        let p = PuiseuxPoly::from_terms(vec![
            (e(1, 2), rat_i(1)),
            (e(0, 3), rat_i(2)),
            (e(1, 1), rat_i(-1)),
            (Exponent2::new(rat(7, 2), rat_i(0)).unwrap(), rat(1, 2)),
        ]);
        assert_eq!(p.render(), "2*x2^3 - x1*x2 + x1*x2^2 + (1/2)*x1^(7/2)");
    }
}
