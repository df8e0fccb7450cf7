//! Exact rational regression checks over the geometry pipeline: no floats,
//! no tolerances, every comparison is a `Rat` equality (except the scaling
//! identity, whose fractional powers force floats at 1e-12).

use phaselab_core::rational::{rat, rat_i};
use phaselab_core::{
    case_one_identity_gap, classify, duistermaat_scale, h_threshold, m_polynomial, model_p0,
    newton_distance, newton_polyhedron, p_span_prime, p_tilde_c_prime, parse_poly,
    principal_face, principal_weight, r_height, rho_from_slots, Branch, Face, Rat,
};
use phaselab_quad::D4Phase;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::VerifyError;

pub struct ExactCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn push(list: &mut Vec<ExactCheck>, name: &str, passed: bool, detail: String) {
    list.push(ExactCheck {
        name: name.to_string(),
        passed,
        detail,
    });
}

/// Newton data of the shear-transformed quartic perturbation at delta = 1/16
/// (where the shear slope is exactly 1/2): principal edge, weight, distance.
pub fn check_exact_geometry() -> Result<Vec<ExactCheck>, VerifyError> {
    let poly = D4Phase::normal_form_poly(&rat(1, 2))?;
    let np = newton_polyhedron(&poly)?;
    let mut checks = Vec::new();
    let face = principal_face(&np);
    let edge_ok = match &face {
        Face::Edge(e) => {
            *e.from.e1() == rat_i(0)
                && *e.from.e2() == rat_i(4)
                && *e.to.e1() == rat_i(2)
                && *e.to.e2() == rat_i(1)
        }
        _ => false,
    };
    push(
        &mut checks,
        "principal_edge",
        edge_ok,
        format!("principal face {face:?}, want edge (0,4)-(2,1)"),
    );
    let w = principal_weight(&np)?;
    push(
        &mut checks,
        "principal_weight",
        w.k1 == rat(3, 8) && w.k2 == rat(1, 4),
        format!("kappa = ({}, {}), want (3/8, 1/4)", w.k1, w.k2),
    );
    let d = newton_distance(&np);
    push(
        &mut checks,
        "newton_distance",
        d == rat(8, 5),
        format!("d = {d}, want 8/5"),
    );
    Ok(checks)
}

/// The corner family `x1^A x2^B + x1^n`: geometric sweep height against the
/// closed form `(n+3) B / (n + B - A) - 1`, across every exponent triple in
/// the stated box, plus the two spot values read off the family exponents.
pub fn check_closed_form_sweep() -> Result<Vec<ExactCheck>, VerifyError> {
    let mut checks = Vec::new();
    let mut mismatches = Vec::new();
    let mut count = 0usize;
    for b in 3u64..=5 {
        for a in 0..=(b - 3) {
            for n in (2 * b + 1)..=(2 * b + 8) {
                let src = if a == 0 {
                    format!("x2^{b} + x1^{n}")
                } else {
                    format!("x1^{a}*x2^{b} + x1^{n}")
                };
                let p = parse_poly(&src)?;
                let np = newton_polyhedron(&p)?;
                let hr = r_height(&np, &rat_i(2))?;
                let want =
                    rat(((n + 3) * b) as i64, (n + b - a) as i64) - rat_i(1);
                count += 1;
                if hr != want {
                    mismatches.push(format!("{src}: got {hr}, want {want}"));
                }
            }
        }
    }
    push(
        &mut checks,
        "corner_family_sweep",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{count} exponent triples match the closed form exactly")
        } else {
            mismatches.join("; ")
        },
    );

    let spot = |b: u64, n: u64| -> Result<Rat, VerifyError> {
        let p = parse_poly(&format!("x2^{b} + x1^{n}"))?;
        Ok(r_height(&newton_polyhedron(&p)?, &rat_i(2))?)
    };
    let hr = spot(3, 9)?;
    let p_c = rat_i(2) * &hr + rat_i(2);
    push(
        &mut checks,
        "spot_p_c",
        p_c == rat_i(6),
        format!("x2^3 + x1^9: p'_c = {p_c}, want 6"),
    );
    let hr = spot(5, 11)?;
    let theta = rat_i(1) / (&hr + rat_i(1));
    push(
        &mut checks,
        "spot_theta",
        theta == rat(8, 35),
        format!("x2^5 + x1^11: theta_c = {theta}, want 8/35"),
    );
    Ok(checks)
}

/// The quadratic-shear family `x1 (x2 + x1^2)^3 + x1^n`: every member in the
/// window has weight (1/7, 2/7) and height 7/3 = distance, putting the
/// augmented height `h^r + 1 = 10/3` inside (3, 3.5].
pub fn check_shear_family() -> Result<Vec<ExactCheck>, VerifyError> {
    let mut checks = Vec::new();
    let mut mismatches = Vec::new();
    for n in 8..=14 {
        let src = format!("x1*(x2 + x1^2)^3 + x1^{n}");
        let rep = classify(&parse_poly(&src)?)?;
        let ok = rep.kappa == Some((rat(1, 7), rat(2, 7)))
            && rep.d == rat(7, 3)
            && rep.hr == Some(rat(7, 3));
        let window_ok = match &rep.hr {
            Some(hr) => {
                let aug = hr + rat_i(1);
                aug > rat_i(3) && aug <= rat(7, 2)
            }
            None => false,
        };
        if !(ok && window_ok) {
            mismatches.push(format!(
                "{src}: kappa {:?}, d {}, hr {:?}",
                rep.kappa, rep.d, rep.hr
            ));
        }
    }
    push(
        &mut checks,
        "shear_family",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            "n = 8..=14 all give kappa = (1/7, 2/7), h^r = d = 7/3".to_string()
        } else {
            mismatches.join("; ")
        },
    );
    Ok(checks)
}

/// Spot values of the closed-form exponent identities.
pub fn check_exponent_identities() -> Vec<ExactCheck> {
    let mut checks = Vec::new();
    let p_tilde = p_tilde_c_prime(&rat_i(2), &rat_i(3));
    let p_span = p_span_prime(&rat_i(3));
    push(
        &mut checks,
        "cusp_height_three",
        p_tilde == rat_i(6) && p_span == rat_i(6),
        format!("p~'_c = {p_tilde}, p'_span = {p_span}, want 6 = 6"),
    );
    let m34 = m_polynomial(&rat_i(3), &rat_i(4));
    push(
        &mut checks,
        "m_vanishes_at_3_4",
        m34 == rat_i(0),
        format!("M(3,4) = {m34}, want 0"),
    );
    let m26 = m_polynomial(&rat_i(2), &rat_i(6));
    push(
        &mut checks,
        "m_at_2_6",
        m26 == rat_i(9),
        format!("M(2,6) = {m26}, want 9"),
    );
    let h4 = h_threshold(&rat_i(4));
    push(
        &mut checks,
        "height_threshold_at_4",
        h4 == rat(9, 2),
        format!("H(4) = {h4}, want 9/2"),
    );
    let p0 = model_p0(&rat(5, 3), &rat(5, 6));
    push(
        &mut checks,
        "model_p0",
        p0 == rat(6, 5),
        format!("p0(5/3, 5/6) = {p0}, want 6/5"),
    );
    let gap = case_one_identity_gap(&rat_i(7));
    push(
        &mut checks,
        "case_one_identity",
        gap == rat_i(0),
        format!("identity gap at B = 7 is {gap}, want 0"),
    );
    checks
}

/// The anisotropic rescaling makes the degeneracy functional exactly
/// homogeneous of degree one; checked on random slot vectors and scales.
pub fn check_rho_homogeneity(seed: u64, trials: usize) -> Result<Vec<ExactCheck>, VerifyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let mut worst_desc = String::new();
    for i in 0..trials {
        let b_exp = rng.gen_range(3u64..=6);
        let branch = if rng.gen_bool(0.5) {
            Branch::D
        } else {
            Branch::Nd
        };
        let mut slot = || rng.gen_range(-8.0..=0.0f64).exp2();
        let d0 = slot();
        let d30 = slot();
        let mid: Vec<f64> = (0..(b_exp - 3) as usize).map(|_| slot()).collect();
        let r = rng.gen_range(-10.0..=10.0f64).exp2();
        let base = rho_from_slots(b_exp, branch, d0, d30, &mid)?.value;
        let (sd0, sd30, smid) = duistermaat_scale(b_exp, branch, r, d0, d30, &mid);
        let scaled = rho_from_slots(b_exp, branch, sd0, sd30, &smid)?.value;
        let rel = (scaled - r * base).abs() / (r * base);
        if rel > worst {
            worst = rel;
            worst_desc = format!("trial {i}: B = {b_exp}, {branch:?}, r = {r:.3e}");
        }
    }
    let mut checks = Vec::new();
    push(
        &mut checks,
        "rho_homogeneity",
        worst <= 1e-12,
        format!("worst relative error {worst:.3e} over {trials} trials ({worst_desc})"),
    );
    Ok(checks)
}
