//! Critical-exponent pipeline for finite-type bivariate phases: linear
//! height, the augmented Newton polyhedron, the r-height read off from the
//! shifted diagonal `t2 = t1 + m + 1`, the resulting exponents
//! `p'_c = 2 h^r + 2`, `theta_c = 1/(h^r + 1)`, and the small-parameter
//! bookkeeping (delta vector, rho functional, its scaling).

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::CoreError;
use crate::newton::{
    hull_of_points, kappa_principal_part, newton_distance, newton_polyhedron, principal_face,
    Face, NewtonPolyhedron, Weight,
};
use crate::poly::{Exponent2, PuiseuxPoly};
use crate::rational::{rat, rat_i, to_f64, Rat};

/// Which face type the bisectrix meets in adapted coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseAb {
    /// Principal face is a compact edge.
    A,
    /// Principal face is the vertex `(h, h)`.
    B,
}

/// Nondegenerate / degenerate branch of the small-parameter normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Nd,
    D,
}

/// Result of the linear-height search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearHeight {
    pub value: Rat,
    /// Total shear `x2 -> x2 + c*x1` realizing the maximum.
    pub shear: Rat,
    /// False when an irrational multiple root could not be excluded, making
    /// `value` a lower bound only.
    pub exact: bool,
}

/// Everything `classify` can determine about a phase. Fields are `None` when
/// the input leaves the handled family; `gaps` says why.
#[derive(Debug, Clone, PartialEq)]
pub struct RestrictionReport {
    pub input: String,
    pub d: Rat,
    pub h_lin: Rat,
    pub h_lin_exact: bool,
    pub lin_shear: Rat,
    /// Shear `(c, a)` mapping the input to adapted coordinates, if applied.
    pub adapted_shear: Option<(Rat, Rat)>,
    pub swapped: bool,
    pub case_ab: Option<CaseAb>,
    pub m: Option<Rat>,
    pub m_defaulted: bool,
    pub kappa: Option<(Rat, Rat)>,
    pub kappa_tilde: Option<(Rat, Rat)>,
    pub a_exp: Option<Rat>,
    pub b_exp: Option<u64>,
    pub n_exp: Option<Rat>,
    pub h_cap: Option<Rat>,
    pub hr: Option<Rat>,
    pub p_c_prime: Option<Rat>,
    pub theta_c: Option<Rat>,
    pub n1: Option<Rat>,
    pub branch: Option<Branch>,
    pub gaps: Vec<String>,
}

// ---------------------------------------------------------------------------
// linear height
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over the rationals; `coeffs[i]` multiplies u^i.
struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Divide by `(u - c)` assuming `c` is a root.
    fn deflate(&self, c: &Rat) -> UniPoly {
        let mut out = vec![Rat::zero(); self.degree()];
        let mut carry = Rat::zero();
        for i in (1..self.coeffs.len()).rev() {
            carry = &self.coeffs[i] + &carry * c;
            out[i - 1] = carry.clone();
        }
        UniPoly { coeffs: out }
    }
}

fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let v = n.abs().to_u64()?;
    if v == 0 {
        return None;
    }
    if v > 1_000_000_000_000 {
        return None;
    }
    let mut divs = Vec::new();
    let mut i = 1u64;
    while i * i <= v {
        if v % i == 0 {
            divs.push(BigInt::from(i));
            divs.push(BigInt::from(v / i));
        }
        i += 1;
    }
    Some(divs)
}

/// All rational roots with multiplicity, plus the degree of the deflated
/// remainder (a positive remainder degree >= 2 may hide an irrational
/// multiple root). `None` when the coefficients are too large to factor.
fn rational_roots(poly: &mut UniPoly) -> Option<(Vec<Rat>, usize)> {
    poly.trim();
    if poly.coeffs.len() <= 1 {
        return Some((Vec::new(), 0));
    }
    // Strip the root at zero; it is not a shear candidate.
    let mut shift = 0;
    while poly.coeffs[shift].is_zero() {
        shift += 1;
    }
    let mut work = UniPoly {
        coeffs: poly.coeffs[shift..].to_vec(),
    };
    let mut roots = Vec::new();
    'outer: loop {
        work.trim();
        if work.degree() == 0 {
            break;
        }
        // Clear denominators.
        let mut lcm = BigInt::one();
        for c in &work.coeffs {
            lcm = num_integer::lcm(lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = work
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
            .collect();
        let a0 = ints.iter().find(|c| !c.is_zero()).unwrap().clone();
        let an = ints.last().unwrap().clone();
        let ps = small_divisors(&a0)?;
        let qs = small_divisors(&an)?;
        for p in &ps {
            for q in &qs {
                for sign in [1i64, -1] {
                    let cand = Rat::new(p * BigInt::from(sign), q.clone());
                    if work.eval(&cand).is_zero() {
                        work = work.deflate(&cand);
                        roots.push(cand);
                        continue 'outer;
                    }
                }
            }
        }
        break;
    }
    work.trim();
    Some((roots, work.degree()))
}

/// Maximal Newton distance over iterated linear shears `x2 -> x2 + c*x1`.
/// Candidates are the rational roots of the principal part along a slope-one
/// principal edge; other face geometries admit no improving linear shear.
pub fn linear_height(p: &PuiseuxPoly) -> Result<LinearHeight, CoreError> {
    let mut cur = p.clone();
    let mut total = Rat::zero();
    let mut exact = true;
    for _ in 0..64 {
        let np = newton_polyhedron(&cur)?;
        let d = newton_distance(&np);
        let Face::Edge(edge) = principal_face(&np) else {
            break;
        };
        if edge.weight.k1 != edge.weight.k2 {
            break;
        }
        let pr = kappa_principal_part(&cur, &edge.weight);
        if !pr.has_integral_exponents() {
            exact = false;
            break;
        }
        // Restrict to the edge direction: q(u) = pr(1, u).
        let deg = pr
            .terms()
            .map(|(e, _)| e.e2().to_integer().to_usize().unwrap())
            .max()
            .unwrap();
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (e, c) in pr.terms() {
            let j = e.e2().to_integer().to_usize().unwrap();
            coeffs[j] = &coeffs[j] + c;
        }
        let mut q = UniPoly { coeffs };
        let Some((roots, leftover_degree)) = rational_roots(&mut q) else {
            exact = false;
            break;
        };
        if leftover_degree >= 2 {
            exact = false;
        }
        let mut improved = false;
        for c in roots {
            if c.is_zero() {
                continue;
            }
            let sheared = cur.substitute_shear(&c, &Rat::one())?;
            let d2 = newton_distance(&newton_polyhedron(&sheared)?);
            if d2 > d {
                cur = sheared;
                total += c;
                improved = true;
                break;
            }
        }
        if !improved {
            break;
        }
    }
    let value = newton_distance(&newton_polyhedron(&cur)?);
    Ok(LinearHeight {
        value,
        shear: total,
        exact,
    })
}

// ---------------------------------------------------------------------------
// augmented polyhedron and r-height
// ---------------------------------------------------------------------------

/// Augment a polyhedron by the piece of the supporting line `l` running from
/// its rightmost contact vertex up to the `t2`-axis. `l` must support the
/// polyhedron and touch it.
pub fn augmented_polyhedron(
    np: &NewtonPolyhedron,
    l: &Weight,
) -> Result<NewtonPolyhedron, CoreError> {
    let one = Rat::one();
    let values: Vec<Rat> = np.vertices.iter().map(|v| l.dot(v)).collect();
    let min = values.iter().min().unwrap().clone();
    if min < one {
        return Err(CoreError::NotSupporting(format!(
            "line cuts the polyhedron (min weighted value {min} < 1)"
        )));
    }
    if min > one {
        return Err(CoreError::NotSupporting(format!(
            "line does not touch the polyhedron (min weighted value {min} > 1)"
        )));
    }
    let intercept = Exponent2::new(Rat::zero(), one / &l.k2)?;
    let mut pts = np.vertices.clone();
    pts.push(intercept);
    hull_of_points(pts)
}

/// Second coordinate of the crossing of `t2 = t1 + m + 1` with the boundary,
/// minus one. Callers pass the augmented polyhedron when the upper supporting
/// segment matters. The crossing must stay in the closed quadrant; for the
/// handled family it always does.
pub fn r_height(np: &NewtonPolyhedron, m: &Rat) -> Result<Rat, CoreError> {
    if *m < Rat::one() {
        return Err(CoreError::Domain(format!("shifted diagonal needs m >= 1, got {m}")));
    }
    let shift = m + rat_i(1);
    let (pt, _) = np.crossing_with_shifted_diagonal(&shift);
    Ok(pt.e2() - rat_i(1))
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

/// Try to read the weighted principal part as
/// `coef * x1^A * (x2 + c0*x1^a)^B  [+ c1*x1^n]`; returns `(B, c0)`.
fn factor_shear_form(pr: &PuiseuxPoly, a: &Rat) -> Option<(u64, Rat)> {
    let b_rat = pr.max_e2()?;
    if !b_rat.is_integer() {
        return None;
    }
    let b_exp = b_rat.to_integer().to_u64()?;
    if b_exp == 0 {
        return None;
    }
    let tops: Vec<(&Exponent2, &Rat)> = pr.terms().filter(|(e, _)| *e.e2() == b_rat).collect();
    if tops.len() != 1 {
        return None;
    }
    let (top_e, coef) = (tops[0].0.clone(), tops[0].1.clone());
    let a_exp = top_e.e1().clone();
    let next = Exponent2::new(&a_exp + a, &b_rat - rat_i(1)).ok()?;
    let c0 = pr.coeff(&next) / (rat_i(b_exp as i64) * &coef);
    let shifted = PuiseuxPoly::from_terms(vec![
        (Exponent2::new(Rat::zero(), Rat::one()).unwrap(), Rat::one()),
        (Exponent2::new(a.clone(), Rat::zero()).unwrap(), c0.clone()),
    ]);
    let block = PuiseuxPoly::monomial(Exponent2::new(a_exp, Rat::zero()).unwrap(), coef)
        .mul(&shifted.pow(b_exp as u32));
    let rem = pr.sub(&block);
    if !rem.is_zero() {
        // Everything off the block must be a single monomial on the x1-axis.
        if rem.num_terms() != 1 {
            return None;
        }
        let (e, _) = rem.terms().next().unwrap();
        if !e.e2().is_zero() {
            return None;
        }
    }
    Some((b_exp, c0))
}

fn row_coeff_sum(p: &PuiseuxPoly, j: u64) -> Rat {
    let j_rat = rat_i(j as i64);
    let mut acc = Rat::zero();
    for (e, c) in p.terms() {
        if *e.e2() == j_rat {
            acc += c;
        }
    }
    acc
}

fn min_e1_in_row(p: &PuiseuxPoly, j: u64) -> Option<Rat> {
    let j_rat = rat_i(j as i64);
    p.terms()
        .filter(|(e, _)| *e.e2() == j_rat)
        .map(|(e, _)| e.e1().clone())
        .min()
}

fn partial_report(
    input: &PuiseuxPoly,
    d: Rat,
    lh: &LinearHeight,
    swapped: bool,
    case_ab: Option<CaseAb>,
    m: Option<Rat>,
    kappa: Option<(Rat, Rat)>,
    mut gaps: Vec<String>,
    why: &str,
) -> RestrictionReport {
    gaps.push(why.to_string());
    RestrictionReport {
        input: input.render(),
        d,
        h_lin: lh.value.clone(),
        h_lin_exact: lh.exact,
        lin_shear: lh.shear.clone(),
        adapted_shear: None,
        swapped,
        case_ab,
        m,
        m_defaulted: false,
        kappa,
        kappa_tilde: None,
        a_exp: None,
        b_exp: None,
        n_exp: None,
        h_cap: None,
        hr: None,
        p_c_prime: None,
        theta_c: None,
        n1: None,
        branch: None,
        gaps,
    }
}

/// Full pipeline: orient coordinates, pass to linearly adapted coordinates,
/// detect and undo the shear block, read the adapted polyhedron, augment by
/// the original principal line, intersect with the shifted diagonal, and
/// convert the r-height into the critical exponents.
pub fn classify(p: &PuiseuxPoly) -> Result<RestrictionReport, CoreError> {
    if p.is_zero() {
        return Err(CoreError::EmptyPolynomial);
    }
    let mut gaps: Vec<String> = Vec::new();
    let mut work = p.clone();
    let mut swapped = false;
    {
        let np0 = newton_polyhedron(&work)?;
        if let Face::Edge(e) = principal_face(&np0) {
            if e.weight.k2 < e.weight.k1 {
                work = work.swap_vars();
                swapped = true;
            }
        }
    }
    let lh = linear_height(&work)?;
    if !lh.shear.is_zero() {
        work = work.substitute_shear(&lh.shear, &Rat::one())?;
        gaps.push(format!(
            "input was not linearly adapted; worked in coordinates sheared by {}",
            lh.shear
        ));
    }
    let np = newton_polyhedron(&work)?;
    let d = newton_distance(&np);

    let edge = match principal_face(&np) {
        Face::Edge(e) => e,
        Face::Vertex(v) => {
            return Ok(partial_report(
                p,
                d,
                &lh,
                swapped,
                Some(CaseAb::B),
                None,
                None,
                gaps,
                &format!("principal face is the vertex {v}; the compact-edge pipeline does not apply"),
            ));
        }
        _ => {
            return Ok(partial_report(
                p, d, &lh, swapped, None, None, None, gaps,
                "principal face lies on an axis ray; no finite principal weight",
            ));
        }
    };
    let kappa_own = edge.weight.clone();
    let m_own = kappa_own.m();

    // Peel the shear block if the principal part carries one.
    let pr = kappa_principal_part(&work, &kappa_own);
    let block = factor_shear_form(&pr, &m_own);
    let mut adapted_shear = None;
    let (phi_t, kappa, m, m_defaulted) = match block {
        Some((blk_b, ref blk_c0)) if !blk_c0.is_zero() && rat_i(blk_b as i64) > d => {
            if m_own < rat_i(2) {
                return Ok(partial_report(
                    p,
                    d,
                    &lh,
                    swapped,
                    Some(CaseAb::A),
                    Some(m_own.clone()),
                    Some((kappa_own.k1.clone(), kappa_own.k2.clone())),
                    gaps,
                    &format!("m = {m_own} < 2; the handled family needs m >= 2"),
                ));
            }
            let shear_c = -blk_c0.clone();
            let sheared = work.substitute_shear(&shear_c, &m_own)?;
            adapted_shear = Some((shear_c, m_own.clone()));
            (sheared, kappa_own.clone(), m_own.clone(), false)
        }
        _ => {
            // Already adapted in these coordinates. If the polyhedron is the
            // normal form x1^A x2^B + c1 x1^n with n > A + 2B, read it as the
            // adapted representative of an m = 2 phase whose principal line
            // is the slope-1/2 supporting line through (A, B).
            let np_t = newton_polyhedron(&work)?;
            let normal_form = (|| -> Option<(Rat, Rat)> {
                let f = match principal_face(&np_t) {
                    Face::Edge(e) => e,
                    _ => return None,
                };
                let (a_v, b_v) = (f.from.clone(), f.to.clone());
                if !a_v.is_integral() || !b_v.is_integral() || !b_v.e2().is_zero() {
                    return None;
                }
                let b_exp = a_v.e2().to_integer().to_u64()?;
                if b_exp < 3 {
                    return None;
                }
                let n = b_v.e1().clone();
                let a = a_v.e1().clone();
                if n <= &a + rat_i(2) * a_v.e2() {
                    return None;
                }
                // Slope-1/2 line value; it must attain its minimum at (A, B).
                let line_at = |v: &Exponent2| v.e1() + rat_i(2) * v.e2();
                let c_star = np_t.vertices.iter().map(line_at).min().unwrap();
                if c_star != line_at(&a_v) {
                    return None;
                }
                Some((Rat::one() / &c_star, rat_i(2) / &c_star))
            })();
            match normal_form {
                Some((k1, k2)) => {
                    gaps.push(
                        "input read as the adapted representative of an m = 2 phase; \
                         d refers to that phase"
                            .to_string(),
                    );
                    (work.clone(), Weight::new(k1, k2)?, rat_i(2), true)
                }
                None => {
                    if m_own < rat_i(2) {
                        return Ok(partial_report(
                            p,
                            d,
                            &lh,
                            swapped,
                            Some(CaseAb::A),
                            Some(m_own.clone()),
                            Some((kappa_own.k1.clone(), kappa_own.k2.clone())),
                            gaps,
                            &format!("m = {m_own} < 2; the handled family needs m >= 2"),
                        ));
                    }
                    (work.clone(), kappa_own.clone(), m_own.clone(), false)
                }
            }
        }
    };

    // Distance of the phase the exponents refer to: for a defaulted input the
    // relevant polyhedron is cut off by the principal line.
    let d_report = if m_defaulted {
        Rat::one() / kappa.norm()
    } else {
        d.clone()
    };

    let np_t = newton_polyhedron(&phi_t)?;
    let edge_t = match principal_face(&np_t) {
        Face::Edge(e) => e,
        Face::Vertex(v) => {
            let mut rep = partial_report(
                p,
                d_report,
                &lh,
                swapped,
                Some(CaseAb::B),
                Some(m.clone()),
                Some((kappa.k1.clone(), kappa.k2.clone())),
                gaps,
                &format!("adapted principal face is the vertex {v}"),
            );
            rep.adapted_shear = adapted_shear;
            return Ok(rep);
        }
        _ => {
            let mut rep = partial_report(
                p,
                d_report,
                &lh,
                swapped,
                None,
                Some(m.clone()),
                Some((kappa.k1.clone(), kappa.k2.clone())),
                gaps,
                "adapted principal face lies on an axis ray",
            );
            rep.adapted_shear = adapted_shear;
            return Ok(rep);
        }
    };
    let kappa_tilde = edge_t.weight.clone();
    let a_exp = edge_t.from.e1().clone();
    let b_rat = edge_t.from.e2().clone();
    let b_exp = if b_rat.is_integer() {
        b_rat.to_integer().to_u64()
    } else {
        None
    };
    if b_exp.is_none() {
        gaps.push(format!("left endpoint height {b_rat} is not an integer"));
    }
    let n_exp = Rat::one() / &kappa_tilde.k1;
    let h_cap = Rat::one() / &kappa_tilde.k2;

    // Vanishing-order sanity: rows 1..B of the adapted principal part are
    // empty, so B is also the order of the first surviving x2-derivative.
    if let Some(b) = b_exp {
        let pr_t = kappa_principal_part(&phi_t, &kappa_tilde);
        for j in 1..b {
            if !row_coeff_sum(&pr_t, j).is_zero() {
                gaps.push(format!(
                    "adapted principal part has a nonzero x2^{j} row below B = {b}"
                ));
                break;
            }
        }
        if row_coeff_sum(&pr_t, b).is_zero() {
            gaps.push(format!("adapted principal part vanishes at x2-order B = {b}"));
        }
    }

    let np_r = match augmented_polyhedron(&np_t, &kappa) {
        Ok(h) => h,
        Err(e) => {
            let mut rep = partial_report(
                p,
                d_report,
                &lh,
                swapped,
                Some(CaseAb::A),
                Some(m.clone()),
                Some((kappa.k1.clone(), kappa.k2.clone())),
                gaps,
                &format!("augmentation failed: {e}"),
            );
            rep.kappa_tilde = Some((kappa_tilde.k1.clone(), kappa_tilde.k2.clone()));
            rep.adapted_shear = adapted_shear;
            return Ok(rep);
        }
    };
    let shift = &m + Rat::one();
    let (cross_pt, cross_face) = np_r.crossing_with_shifted_diagonal(&shift);
    let hr = match cross_face {
        // The upper supporting segment continues along the principal line
        // past the t2-axis; follow that line instead of the clipped boundary.
        Face::VerticalRay { .. } => {
            let t = (Rat::one() - &kappa.k2 * &shift) / (&kappa.k1 + &kappa.k2);
            t + &shift - Rat::one()
        }
        _ => cross_pt.e2() - rat_i(1),
    };
    if hr < d_report {
        gaps.push(format!("r-height {hr} fell below the distance {d_report}"));
    }
    let p_c_prime = rat_i(2) * &hr + rat_i(2);
    let theta_c = Rat::one() / (&hr + Rat::one());

    // Degenerate-branch test: the x2-linear row of the adapted phase starts
    // at n1 = n - 2 in the degenerate case.
    let n1 = min_e1_in_row(&phi_t, 1);
    let branch = match (&n1, n_exp.is_integer()) {
        (Some(v), true) if *v == &n_exp - rat_i(2) => Some(Branch::D),
        _ => Some(Branch::Nd),
    };

    Ok(RestrictionReport {
        input: p.render(),
        d: d_report,
        h_lin: lh.value,
        h_lin_exact: lh.exact,
        lin_shear: lh.shear,
        adapted_shear,
        swapped,
        case_ab: Some(CaseAb::A),
        m: Some(m),
        m_defaulted,
        kappa: Some((kappa.k1, kappa.k2)),
        kappa_tilde: Some((kappa_tilde.k1, kappa_tilde.k2)),
        a_exp: Some(a_exp),
        b_exp,
        n_exp: Some(n_exp),
        h_cap: Some(h_cap),
        hr: Some(hr),
        p_c_prime: Some(p_c_prime),
        theta_c: Some(theta_c),
        n1,
        branch,
        gaps,
    })
}

// ---------------------------------------------------------------------------
// exponent formulas
// ---------------------------------------------------------------------------

/// `2 (mH/(m+1) + 1)`: the dual exponent the adapted picture alone predicts.
pub fn p_tilde_c_prime(m: &Rat, h: &Rat) -> Rat {
    rat_i(2) * (m * h / (m + Rat::one()) + Rat::one())
}

/// `(m+1)/(mH + m + 1)`, the interpolation parameter dual to `p_tilde_c'`.
pub fn theta_tilde(m: &Rat, h: &Rat) -> Rat {
    (m + Rat::one()) / (m * h + m + Rat::one())
}

/// `12x/(3+x)`: dual exponent matching `theta = 1/(2x) + 1/6`.
pub fn p_span_prime(x: &Rat) -> Rat {
    rat_i(12) * x / (rat_i(3) + x)
}

/// `1/(2x) + 1/6`.
pub fn theta_span(x: &Rat) -> Rat {
    Rat::one() / (rat_i(2) * x) + rat(1, 6)
}

/// `mH^2 - (2m+5)H + 3(m+1)`; nonnegative exactly when
/// `p_tilde_c' >= p_span'(H)`, vanishing only at `(m, H) = (2, 3)`.
pub fn quadratic_gap(m: &Rat, h: &Rat) -> Rat {
    m * h * h - (rat_i(2) * m + rat_i(5)) * h + rat_i(3) * (m + Rat::one())
}

/// `mB^2 - (3m+6)B + 3(m+1)`.
pub fn m_polynomial(m: &Rat, b: &Rat) -> Rat {
    m * b * b - (rat_i(3) * m + rat_i(6)) * b + rat_i(3) * (m + Rat::one())
}

/// `21B/(2(B+3)) - 3/2`: the H-threshold making the summability margin
/// negative at m = 2.
pub fn h_threshold(b: &Rat) -> Rat {
    rat_i(21) * b / (rat_i(2) * (b + rat_i(3))) - rat(3, 2)
}

/// `-1/3 - 1/B + (7/3) * theta`.
pub fn summability_margin(b: &Rat, theta: &Rat) -> Rat {
    -rat(1, 3) - Rat::one() / b + rat(7, 3) * theta
}

/// `-1/B - 1/2 + (5/2) theta_span(B) - (1/B - 1/3)/4`; identically zero.
pub fn case_one_identity_gap(b: &Rat) -> Rat {
    -Rat::one() / b - rat(1, 2) + rat(5, 2) * theta_span(b)
        - (Rat::one() / b - rat(1, 3)) / rat_i(4)
}

/// `2(a+b)/(2a+b)`: the two-parameter model exponent.
pub fn model_p0(a: &Rat, b: &Rat) -> Rat {
    rat_i(2) * (a + b) / (rat_i(2) * a + b)
}

/// One named exactness check over a report's exponents.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

/// Exact consistency checks tying a full report to the exponent formulas.
pub fn exponent_lemmas(report: &RestrictionReport) -> Vec<LemmaCheck> {
    let mut out = Vec::new();
    let (Some(hr), Some(pc), Some(th)) = (&report.hr, &report.p_c_prime, &report.theta_c) else {
        return out;
    };
    out.push(LemmaCheck {
        name: "pc_formula",
        holds: *pc == rat_i(2) * hr + rat_i(2) && th * (hr + Rat::one()) == Rat::one(),
        detail: format!("p_c' = {pc}, h^r = {hr}, theta_c = {th}"),
    });
    out.push(LemmaCheck {
        name: "hr_at_least_d",
        holds: *hr >= report.d,
        detail: format!("h^r = {hr}, d = {}", report.d),
    });
    let (Some(m), Some(h)) = (&report.m, &report.h_cap) else {
        return out;
    };
    if let Some(b) = report.b_exp {
        let b_rat = rat_i(b as i64);
        out.push(LemmaCheck {
            name: "b_at_most_h",
            holds: b_rat <= *h,
            detail: format!("B = {b}, H = {h}"),
        });
        if *m == rat_i(2) {
            let margin = summability_margin(&b_rat, &theta_tilde(m, h));
            let threshold = h_threshold(&b_rat);
            out.push(LemmaCheck {
                name: "summability_vs_threshold",
                holds: (margin < Rat::zero()) == (*h > threshold),
                detail: format!("margin = {margin}, H = {h}, threshold = {threshold}"),
            });
        }
    }
    let h_tilde_r = m * h / (m + Rat::one());
    let p_tilde = p_tilde_c_prime(m, h);
    let adapted_ok = if *hr > h_tilde_r {
        *pc > p_tilde
    } else if *hr == h_tilde_r {
        *hr == report.d
            && hr + Rat::one() >= *h
            && *pc == p_tilde
            && *pc == rat_i(2) * (&report.d + Rat::one())
    } else {
        false
    };
    out.push(LemmaCheck {
        name: "adapted_comparison",
        holds: adapted_ok,
        detail: format!("h^r = {hr}, adapted prediction {h_tilde_r}, p_c' = {pc}, p~' = {p_tilde}"),
    });
    out.push(LemmaCheck {
        name: "pc_vs_span_quadratic",
        holds: (p_tilde >= p_span_prime(h)) == (quadratic_gap(m, h) >= Rat::zero()),
        detail: format!(
            "p~' = {p_tilde}, p_span'(H) = {}, gap = {}",
            p_span_prime(h),
            quadratic_gap(m, h)
        ),
    });
    out
}

// ---------------------------------------------------------------------------
// delta vector, rho, scaling
// ---------------------------------------------------------------------------

/// Dyadic small-parameter exponents at scale `2^-k`: `delta_j = 2^(-q_j)`.
/// `q_mid[j-1]` corresponds to `delta_{j+2}` for `j = 1..=B-2`; `None` marks
/// an identically vanishing coefficient row (the parameter is absent).
#[derive(Debug, Clone, PartialEq)]
pub struct DeltaVector {
    pub k: u32,
    pub b_exp: u64,
    pub q0: Rat,
    pub q1: Rat,
    pub q2: Rat,
    pub q_mid: Vec<Option<Rat>>,
    pub q30: Rat,
    pub branch: Branch,
    pub taylor_order: u32,
}

impl DeltaVector {
    fn value(q: &Rat) -> f64 {
        2f64.powf(-to_f64(q))
    }

    pub fn delta0(&self) -> f64 {
        Self::value(&self.q0)
    }

    pub fn delta1(&self) -> f64 {
        Self::value(&self.q1)
    }

    pub fn delta2(&self) -> f64 {
        Self::value(&self.q2)
    }

    /// `delta_{j+2}` for `j = 1..=B-2`; zero for an absent row.
    pub fn delta_mid(&self, j: usize) -> f64 {
        match self.q_mid.get(j - 1) {
            Some(Some(q)) => Self::value(q),
            _ => 0.0,
        }
    }

    pub fn delta30(&self) -> f64 {
        Self::value(&self.q30)
    }

    /// Exponent of `delta_j` as a power of `delta_0`; every parameter is a
    /// rational power of `delta_0`.
    pub fn as_power_of_delta0(&self, q: &Rat) -> Rat {
        q / &self.q0
    }
}

/// Build the delta vector from the adapted weight. `n_list[j-1]` declares the
/// leading `x1`-exponent of the `x2^j` coefficient row for `j = 1..=B-2`
/// (`None` = the row vanishes identically). The branch is degenerate exactly
/// when `n_1 = n - 2`.
pub fn delta_vector(
    kappa_tilde: (&Rat, &Rat),
    b_exp: u64,
    k: u32,
    n_list: &[Option<Rat>],
    taylor_order: u32,
) -> Result<DeltaVector, CoreError> {
    let (k1, k2) = kappa_tilde;
    if b_exp < 3 {
        return Err(CoreError::OutsideFamily(format!(
            "delta vector needs B >= 3, got {b_exp}"
        )));
    }
    if n_list.len() != (b_exp - 2) as usize {
        return Err(CoreError::Domain(format!(
            "expected {} coefficient rows, got {}",
            b_exp - 2,
            n_list.len()
        )));
    }
    let k_rat = rat_i(k as i64);
    let q0 = &k_rat * (k2 - rat_i(2) * k1);
    if !q0.is_positive() {
        return Err(CoreError::OutsideFamily(format!(
            "delta0 exponent k*(k2 - 2 k1) = {q0} is not positive; \
             the configuration is not reachable from an m = 2 phase"
        )));
    }
    let q1 = &k_rat * k1;
    let q2 = &k_rat * k2;
    let mut q_mid = Vec::with_capacity(n_list.len());
    for (idx, nj) in n_list.iter().enumerate() {
        let j = idx as u64 + 1;
        match nj {
            None => q_mid.push(None),
            Some(n_j) => {
                let q = &k_rat * (n_j * k1 + rat_i(j as i64) * k2 - Rat::one());
                if !q.is_positive() {
                    return Err(CoreError::OutsideFamily(format!(
                        "coefficient row j = {j} sits on or below the principal line \
                         (exponent {q})"
                    )));
                }
                q_mid.push(Some(q));
            }
        }
    }
    let n = Rat::one() / k1;
    let branch = match &q_mid[0] {
        Some(_) if n.is_integer() && n_list[0] == Some(&n - rat_i(2)) => Branch::D,
        _ => Branch::Nd,
    };
    let q30 = match branch {
        Branch::D => {
            let q3 = q_mid[0].clone().unwrap();
            debug_assert_eq!(q3, q0, "degenerate branch forces delta3 = delta0");
            &q0 + rat_i(taylor_order as i64) * &q1
        }
        Branch::Nd => match &q_mid[0] {
            // max(delta0, delta3) = 2^(-min(q0, q3))
            Some(q3) => q0.clone().min(q3.clone()),
            None => q0.clone(),
        },
    };
    Ok(DeltaVector {
        k,
        b_exp,
        q0,
        q1,
        q2,
        q_mid,
        q30,
        branch,
        taylor_order,
    })
}

/// Value of the degeneracy functional rho together with the branch it was
/// computed on.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoValue {
    pub value: f64,
    pub branch: Branch,
}

/// `rho(delta~) = delta30^{B/(B-1)} + sum_{j=2}^{B-2} delta_{j+2}^{B/(B-j)}`,
/// plus `delta0^{3B/(2B-3)}` on the degenerate branch. `mid[j-2]` holds
/// `delta_{j+2}` for `j = 2..=B-2`.
pub fn rho_from_slots(
    b_exp: u64,
    branch: Branch,
    delta0: f64,
    delta30: f64,
    mid: &[f64],
) -> Result<RhoValue, CoreError> {
    if b_exp < 3 {
        return Err(CoreError::OutsideFamily(format!(
            "rho needs B >= 3, got {b_exp}"
        )));
    }
    if mid.len() != (b_exp - 3) as usize {
        return Err(CoreError::Domain(format!(
            "expected {} upper slots, got {}",
            b_exp - 3,
            mid.len()
        )));
    }
    if delta0 < 0.0 || delta30 < 0.0 || mid.iter().any(|v| *v < 0.0) {
        return Err(CoreError::Domain("rho needs nonnegative slots".into()));
    }
    let b = b_exp as f64;
    let mut value = delta30.powf(b / (b - 1.0));
    for (idx, v) in mid.iter().enumerate() {
        let j = idx as f64 + 2.0;
        value += v.powf(b / (b - j));
    }
    if branch == Branch::D {
        value += delta0.powf(3.0 * b / (2.0 * b - 3.0));
    }
    Ok(RhoValue {
        value,
        branch,
    })
}

/// Rho of a delta vector.
pub fn rho(dv: &DeltaVector) -> Result<RhoValue, CoreError> {
    let mid: Vec<f64> = (2..=dv.b_exp.saturating_sub(2) as usize)
        .map(|j| dv.delta_mid(j))
        .collect();
    rho_from_slots(dv.b_exp, dv.branch, dv.delta0(), dv.delta30(), &mid)
}

/// Anisotropic scaling making rho exactly homogeneous of degree one:
/// `delta30 -> r^{(B-1)/B} delta30`, `delta_{j+2} -> r^{(B-j)/B} delta_{j+2}`,
/// and on the degenerate branch `delta0 -> r^{(2B-3)/(3B)} delta0`.
pub fn duistermaat_scale(
    b_exp: u64,
    branch: Branch,
    r: f64,
    delta0: f64,
    delta30: f64,
    mid: &[f64],
) -> (f64, f64, Vec<f64>) {
    let b = b_exp as f64;
    let d0 = match branch {
        Branch::D => delta0 * r.powf((2.0 * b - 3.0) / (3.0 * b)),
        Branch::Nd => delta0,
    };
    let d30 = delta30 * r.powf((b - 1.0) / b);
    let scaled_mid = mid
        .iter()
        .enumerate()
        .map(|(idx, v)| {
            let j = idx as f64 + 2.0;
            v * r.powf((b - j) / b)
        })
        .collect();
    (d0, d30, scaled_mid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn poly(src: &str) -> PuiseuxPoly {
        parse_poly(src).unwrap()
    }

    #[test]
    fn linear_height_finds_the_slope_one_shear() {
        // d((x2 - x1)^2) = 1; shearing by c = 1 gives x2^2 with d = 2.
        let lh = linear_height(&poly("(x2 - x1)^2")).unwrap();
        assert_eq!(lh.value, rat_i(2));
        assert_eq!(lh.shear, rat_i(1));
        assert!(lh.exact);
    }

    #[test]
    fn linear_height_stops_when_no_linear_shear_helps() {
        let lh = linear_height(&poly("(x2 - x1^2)^2")).unwrap();
        // Quadratic shears are out of scope for the linear height.
        assert_eq!(lh.value, rat(4, 3));
        assert_eq!(lh.shear, rat_i(0));
        let lh2 = linear_height(&poly("x2^3 + x1^9")).unwrap();
        assert_eq!(lh2.value, rat(9, 4));
        assert_eq!(lh2.shear, rat_i(0));
    }

    #[test]
    fn linear_height_detects_the_hidden_cusp() {
        // After c = 1 the polynomial x2^2 + x1^3 appears: d goes 1 -> 6/5 and
        // the new principal edge has slope -2/3, ending the search.
        let p = poly("(x2 - x1)^2 + x1^3");
        let lh = linear_height(&p).unwrap();
        assert_eq!(lh.value, rat(6, 5));
        assert_eq!(lh.shear, rat_i(1));
        assert!(lh.exact);
    }

    #[test]
    fn augmentation_prepends_the_supporting_segment() {
        // Adapted phase of the B = 3 vertex family: x1*x2^3 + x1^8,
        // supporting line t1/7 + 2 t2/7 = 1 touching at (1, 3).
        let np = newton_polyhedron(&poly("x1*x2^3 + x1^8")).unwrap();
        let l = Weight::new(rat(1, 7), rat(2, 7)).unwrap();
        let aug = augmented_polyhedron(&np, &l).unwrap();
        let verts: Vec<(Rat, Rat)> = aug
            .vertices
            .iter()
            .map(|v| (v.e1().clone(), v.e2().clone()))
            .collect();
        assert_eq!(
            verts,
            vec![
                (rat_i(0), rat(7, 2)),
                (rat_i(1), rat_i(3)),
                (rat_i(8), rat_i(0))
            ]
        );
        // A cutting line errors.
        let cutting = Weight::new(rat(1, 2), rat(1, 2)).unwrap();
        assert!(matches!(
            augmented_polyhedron(&np, &cutting),
            Err(CoreError::NotSupporting(_))
        ));
        // A line strictly below errors too.
        let below = Weight::new(rat(1, 20), rat(1, 20)).unwrap();
        assert!(augmented_polyhedron(&np, &below).is_err());
    }

    #[test]
    fn augmentation_collapses_vertices_swallowed_by_the_segment() {
        // Slope-1/2 line through (11, 0) clips the vertex (2, 5).
        let np = newton_polyhedron(&poly("x1^2*x2^5 + x1^11")).unwrap();
        let l = Weight::new(rat(1, 11), rat(2, 11)).unwrap();
        let aug = augmented_polyhedron(&np, &l).unwrap();
        assert_eq!(aug.vertices.len(), 2);
        assert_eq!(*aug.vertices[0].e2(), rat(11, 2));
        assert_eq!(*aug.vertices[1].e1(), rat_i(11));
    }

    #[test]
    fn r_height_on_the_vertex_family() {
        // Augmented polyhedron of the B = 3 vertex family, m = 2:
        // crossing at (1/3, 10/3), so h^r = 7/3 independent of n > 7.
        for n in 8..=14 {
            let p = PuiseuxPoly::from_terms(vec![
                (Exponent2::new(rat_i(1), rat_i(3)).unwrap(), rat_i(1)),
                (Exponent2::new(rat_i(n), rat_i(0)).unwrap(), rat_i(1)),
            ]);
            let np = newton_polyhedron(&p).unwrap();
            let l = Weight::new(rat(1, 7), rat(2, 7)).unwrap();
            let aug = augmented_polyhedron(&np, &l).unwrap();
            assert_eq!(r_height(&aug, &rat_i(2)).unwrap(), rat(7, 3));
        }
    }

    #[test]
    fn closed_form_r_height_on_the_corner_family() {
        // Unaugmented boundary crossing reproduces B(n+3)/(n+B-A) - 1.
        for b in [3i64, 4, 5] {
            for a in 0..=(b - 3) {
                for n in (2 * b + 1)..=(2 * b + 8) {
                    let p = PuiseuxPoly::from_terms(vec![
                        (Exponent2::new(rat_i(a), rat_i(b)).unwrap(), rat_i(1)),
                        (Exponent2::new(rat_i(n), rat_i(0)).unwrap(), rat_i(1)),
                    ]);
                    let np = newton_polyhedron(&p).unwrap();
                    let hr = r_height(&np, &rat_i(2)).unwrap();
                    let expect = rat(b * (n + 3), n + b - a) - rat_i(1);
                    assert_eq!(hr, expect, "A={a} B={b} n={n}");
                }
            }
        }
    }

    #[test]
    fn classify_vertex_family_member() {
        let rep = classify(&poly("x1*(x2 + x1^2)^3 + x1^8")).unwrap();
        assert_eq!(rep.d, rat(7, 3));
        assert_eq!(rep.kappa, Some((rat(1, 7), rat(2, 7))));
        assert_eq!(rep.m, Some(rat_i(2)));
        assert!(!rep.m_defaulted);
        assert_eq!(rep.adapted_shear, Some((rat_i(-1), rat_i(2))));
        assert_eq!(rep.kappa_tilde, Some((rat(1, 8), rat(7, 24))));
        assert_eq!(rep.a_exp, Some(rat_i(1)));
        assert_eq!(rep.b_exp, Some(3));
        assert_eq!(rep.n_exp, Some(rat_i(8)));
        assert_eq!(rep.h_cap, Some(rat(24, 7)));
        assert_eq!(rep.hr, Some(rat(7, 3)));
        assert_eq!(rep.p_c_prime, Some(rat(20, 3)));
        assert_eq!(rep.theta_c, Some(rat(3, 10)));
        assert_eq!(rep.branch, Some(Branch::Nd));
        assert_eq!(rep.case_ab, Some(CaseAb::A));
    }

    #[test]
    fn classify_defaults_adapted_normal_forms_to_m_two() {
        let rep = classify(&poly("x2^3 + x1^9")).unwrap();
        assert!(rep.m_defaulted);
        assert_eq!(rep.m, Some(rat_i(2)));
        assert_eq!(rep.kappa, Some((rat(1, 6), rat(1, 3))));
        assert_eq!(rep.d, rat_i(2));
        assert_eq!(rep.hr, Some(rat_i(2)));
        assert_eq!(rep.p_c_prime, Some(rat_i(6)));
        assert_eq!(rep.theta_c, Some(rat(1, 3)));
    }

    #[test]
    fn classify_degenerate_branch_detection() {
        // n = 9, n1 = 7 = n - 2 in the x2-row makes the branch degenerate.
        let rep = classify(&poly("x2^3 + x1^9 + x1^7*x2")).unwrap();
        assert_eq!(rep.n1, Some(rat_i(7)));
        assert_eq!(rep.branch, Some(Branch::D));
        let rep2 = classify(&poly("x2^3 + x1^9 + x1^8*x2")).unwrap();
        assert_eq!(rep2.branch, Some(Branch::Nd));
    }

    #[test]
    fn classify_reports_gaps_outside_the_family() {
        // m = 3/2 < 2.
        let rep = classify(&poly("x2^4 + x1^6")).unwrap();
        assert!(rep.hr.is_none());
        assert!(rep.gaps.iter().any(|g| g.contains("m = 3/2")));
        // Vertex principal face.
        let rep2 = classify(&poly("x1^2*x2^2 + x1^6")).unwrap();
        assert_eq!(rep2.case_ab, Some(CaseAb::B));
        assert!(rep2.hr.is_none());
    }

    #[test]
    fn classify_applies_linear_adaptation_first() {
        // (x2 - x1)^2 + x1^5: linear shear by 1 gives x2^2 + x1^5. B = 2 is
        // outside the m = 2 normal-form family, so the phase is measured
        // against its own principal line (m = 5/2); the shifted diagonal then
        // leaves through the supporting line beyond the t2-axis and h^r = d.
        let rep = classify(&poly("(x2 - x1)^2 + x1^5")).unwrap();
        assert_eq!(rep.lin_shear, rat_i(1));
        assert_eq!(rep.h_lin, rat(10, 7));
        assert_eq!(rep.m, Some(rat(5, 2)));
        assert_eq!(rep.d, rat(10, 7));
        assert_eq!(rep.hr, Some(rat(10, 7)));
    }

    #[test]
    fn exponent_formula_values() {
        // Quadratic gap vanishes exactly at (m, H) = (2, 3), where both
        // exponents equal 6.
        assert_eq!(quadratic_gap(&rat_i(2), &rat_i(3)), rat_i(0));
        assert_eq!(p_tilde_c_prime(&rat_i(2), &rat_i(3)), rat_i(6));
        assert_eq!(p_span_prime(&rat_i(3)), rat_i(6));
        assert!(quadratic_gap(&rat_i(2), &rat(5, 2)) < rat_i(0));
        assert!(quadratic_gap(&rat_i(2), &rat_i(4)) > rat_i(0));

        assert_eq!(m_polynomial(&rat_i(3), &rat_i(4)), rat_i(0));
        assert_eq!(m_polynomial(&rat_i(2), &rat_i(6)), rat_i(9));

        assert_eq!(h_threshold(&rat_i(4)), rat(9, 2));
        assert_eq!(h_threshold(&rat_i(5)), rat(81, 16));

        for b in 2..=12 {
            assert_eq!(case_one_identity_gap(&rat_i(b)), rat_i(0), "B = {b}");
        }

        assert_eq!(model_p0(&rat(5, 3), &rat(5, 6)), rat(6, 5));
    }

    #[test]
    fn exponent_lemmas_on_the_vertex_family() {
        let rep = classify(&poly("x1*(x2 + x1^2)^3 + x1^8")).unwrap();
        let checks = exponent_lemmas(&rep);
        assert!(!checks.is_empty());
        for c in &checks {
            assert!(c.holds, "{} failed: {}", c.name, c.detail);
        }
        // Equality case of the adapted comparison: (A,B,n) = (0,3,9).
        let rep2 = classify(&poly("x2^3 + x1^9")).unwrap();
        for c in exponent_lemmas(&rep2) {
            assert!(c.holds, "{} failed: {}", c.name, c.detail);
        }
    }

    #[test]
    fn delta_vector_example() {
        // kappa~ = (1/9, 1/3), k = 9: delta0 = 2^{-9*(1/3 - 2/9)} = 1/2.
        let k1 = rat(1, 9);
        let k2 = rat(1, 3);
        let dv = delta_vector((&k1, &k2), 3, 9, &[None], 1).unwrap();
        assert_eq!(dv.q0, rat_i(1));
        assert!((dv.delta0() - 0.5).abs() < 1e-15);
        assert_eq!(dv.branch, Branch::Nd);
        assert_eq!(dv.q30, rat_i(1));
        // Everything is a rational power of delta0.
        assert_eq!(dv.as_power_of_delta0(&dv.q1), rat_i(1));
        assert_eq!(dv.as_power_of_delta0(&dv.q2), rat_i(3));
    }

    #[test]
    fn delta_vector_degenerate_branch() {
        // n = 9: declaring n1 = 7 = n - 2 selects the degenerate branch and
        // delta30 = delta0 * delta1^N.
        let k1 = rat(1, 9);
        let k2 = rat(1, 3);
        let dv = delta_vector((&k1, &k2), 3, 9, &[Some(rat_i(7))], 1).unwrap();
        assert_eq!(dv.branch, Branch::D);
        // q3 = 9*(7/9 + 1/3 - 1) = 1 = q0; q30 = q0 + 1*q1 = 2.
        assert_eq!(dv.q30, rat_i(2));
        let dv2 = delta_vector((&k1, &k2), 3, 9, &[Some(rat_i(7))], 3).unwrap();
        assert_eq!(dv2.q30, rat_i(4));
    }

    #[test]
    fn delta_vector_rejects_out_of_family_weights() {
        // (A,B,n) = (2,5,11): kappa~ = (1/11, 9/55), q0 exponent negative.
        let k1 = rat(1, 11);
        let k2 = rat(9, 55);
        let err = delta_vector((&k1, &k2), 5, 55, &[None, None, None], 1).unwrap_err();
        assert!(matches!(err, CoreError::OutsideFamily(_)));
    }

    #[test]
    fn rho_shapes() {
        // B = 3: rho = delta30^{3/2} (+ delta0^3 on the degenerate branch).
        let nd = rho_from_slots(3, Branch::Nd, 0.2, 0.04, &[]).unwrap();
        assert!((nd.value - 0.04f64.powf(1.5)).abs() < 1e-15);
        let d = rho_from_slots(3, Branch::D, 0.2, 0.04, &[]).unwrap();
        assert!((d.value - (0.04f64.powf(1.5) + 0.2f64.powi(3))).abs() < 1e-15);
        // B = 4: delta30^{4/3} + delta4^2 (+ delta0^{12/5}).
        let nd4 = rho_from_slots(4, Branch::Nd, 0.1, 0.3, &[0.5]).unwrap();
        assert!((nd4.value - (0.3f64.powf(4.0 / 3.0) + 0.25)).abs() < 1e-15);
        let d4 = rho_from_slots(4, Branch::D, 0.1, 0.3, &[0.5]).unwrap();
        assert!((d4.value - (0.3f64.powf(4.0 / 3.0) + 0.25 + 0.1f64.powf(2.4))).abs() < 1e-15);
    }

    #[test]
    fn scaling_makes_rho_homogeneous() {
        let cases = [
            (3u64, Branch::Nd, 0.0, 0.37, vec![]),
            (3, Branch::D, 0.21, 0.37, vec![]),
            (4, Branch::D, 0.11, 0.52, vec![0.3]),
            (5, Branch::Nd, 0.0, 0.13, vec![0.7, 0.29]),
            (6, Branch::D, 0.4, 0.9, vec![0.1, 0.2, 0.3]),
        ];
        for (b, branch, d0, d30, mid) in cases {
            let base = rho_from_slots(b, branch, d0, d30, &mid).unwrap().value;
            for r in [0.001f64, 0.37, 1.0, 42.0, 1e6] {
                let (s0, s30, smid) = duistermaat_scale(b, branch, r, d0, d30, &mid);
                let scaled = rho_from_slots(b, branch, s0, s30, &smid).unwrap().value;
                let rel = (scaled - r * base).abs() / (r * base).max(f64::MIN_POSITIVE);
                assert!(rel <= 1e-12, "B={b} r={r} rel={rel}");
            }
        }
    }

    #[test]
    fn scaling_matches_hand_computed_powers() {
        // B = 4, r = 2^12, dyadic slots: the scaled values are hand-checkable
        // powers of two (the 5/12 exponent is not a dyadic rational, so the
        // comparison is up to rounding).
        let b = 4u64;
        let r = 2f64.powi(12);
        let d30 = 0.5f64.powi(3);
        let d4 = 0.5f64.powi(2);
        let d0 = 0.5f64.powi(5);
        let (s0, s30, smid) = duistermaat_scale(b, Branch::D, r, d0, d30, &[d4]);
        // delta30 * r^{3/4} = 2^{-3} * 2^9 = 2^6; delta4 * r^{1/2} = 2^4;
        // delta0 * r^{5/12} = 2^{-5} * 2^5 = 1.
        assert!((s30 - 64.0).abs() < 1e-12);
        assert!((smid[0] - 16.0).abs() < 1e-13);
        assert!((s0 - 1.0).abs() < 1e-14);
    }
}
