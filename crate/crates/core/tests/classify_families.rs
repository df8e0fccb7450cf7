//! End-to-end classification of the two worked phase families. The closed
//! form `h^r + 1 = B(n+3)/(n+B-A)` is computed independently here and checked
//! against the geometric pipeline (hull, shear, augmentation, diagonal).

use phaselab_core::{classify, exponent_lemmas, parse_poly, Branch, CaseAb, Rat};

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn rat_i(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

#[test]
fn corner_family_matches_the_closed_form() {
    // x1^A (x2 + c0 x1^2)^B + c1 x1^n over the whole family range.
    for b in [3i64, 4, 5] {
        for a in 0..=(b - 3) {
            for n in (a + 2 * b + 1)..=(a + 2 * b + 9) {
                let src = format!("x1^{a}*(x2 + x1^2)^{b} + x1^{n}");
                let rep = classify(&parse_poly(&src).unwrap()).unwrap();
                let hr_oracle = rat(b * (n + 3), n + b - a) - rat_i(1);
                assert_eq!(rep.hr, Some(hr_oracle.clone()), "{src}");
                assert_eq!(
                    rep.p_c_prime,
                    Some(rat_i(2) * &hr_oracle + rat_i(2)),
                    "{src}"
                );
                assert_eq!(rep.m, Some(rat_i(2)), "{src}");
                assert_eq!(rep.d, rat(a + 2 * b, 3), "{src}");
                assert_eq!(rep.a_exp, Some(rat_i(a)), "{src}");
                assert_eq!(rep.b_exp, Some(b as u64), "{src}");
                assert_eq!(rep.n_exp, Some(rat_i(n)), "{src}");
                assert_eq!(rep.h_cap, Some(rat(b * n, n - a)), "{src}");
                assert_eq!(rep.case_ab, Some(CaseAb::A), "{src}");
                assert_eq!(rep.adapted_shear, Some((rat_i(-1), rat_i(2))), "{src}");
                for check in exponent_lemmas(&rep) {
                    assert!(check.holds, "{src}: {} failed: {}", check.name, check.detail);
                }
            }
        }
    }
}

#[test]
fn corner_family_spot_values() {
    // (A, B, n) = (0, 3, 9) sits exactly at the adapted/augmented crossover.
    let rep = classify(&parse_poly("(x2 + x1^2)^3 + x1^9").unwrap()).unwrap();
    assert_eq!(rep.p_c_prime, Some(rat_i(6)));
    assert_eq!(rep.theta_c, Some(rat(1, 3)));
    // (A, B, n) = (0, 5, 11).
    let rep = classify(&parse_poly("(x2 + x1^2)^5 + x1^11").unwrap()).unwrap();
    assert_eq!(rep.theta_c, Some(rat(8, 35)));
    assert_eq!(rep.hr, Some(rat(27, 8)));
}

#[test]
fn coefficients_do_not_move_the_exponents() {
    // The invariants depend on the support alone; coefficients only steer the
    // shear that gets undone.
    let cases = [
        ("1", "1", "1", rat_i(1)),
        ("1", "(3/2)", "(-1/7)", rat(3, 2)),
        ("(-2)", "(-5)", "2", rat_i(-5)),
        ("(1/3)", "2", "(7/2)", rat_i(2)),
    ];
    for (e0, c0, c1, c0_rat) in cases {
        let src = format!("{e0}*x1*(x2 + {c0}*x1^2)^4 + {c1}*x1^12");
        let rep = classify(&parse_poly(&src).unwrap()).unwrap();
        assert_eq!(rep.b_exp, Some(4), "{src}");
        assert_eq!(rep.a_exp, Some(rat_i(1)), "{src}");
        // Closed form with (A, B, n) = (1, 4, 12): 4*15/15 = 4.
        assert_eq!(rep.hr, Some(rat_i(3)), "{src}");
        assert_eq!(rep.adapted_shear, Some((-c0_rat, rat_i(2))), "{src}");
    }
}

#[test]
fn vertex_family_across_the_axis_exponent() {
    // x1 (x2 + c0 x1^2)^3 + c1 x1^n: kappa and the exponents are independent
    // of n > 7 because the augmented segment caps the diagonal first.
    for n in 8..=14 {
        let src = format!("x1*(x2 + x1^2)^3 + x1^{n}");
        let rep = classify(&parse_poly(&src).unwrap()).unwrap();
        assert_eq!(rep.kappa, Some((rat(1, 7), rat(2, 7))), "{src}");
        assert_eq!(rep.d, rat(7, 3), "{src}");
        assert_eq!(rep.hr, Some(rat(7, 3)), "{src}");
        assert_eq!(rep.theta_c, Some(rat(3, 10)), "{src}");
        assert_eq!(rep.p_c_prime, Some(rat(20, 3)), "{src}");
        assert_eq!(rep.h_cap, Some(rat(3 * n, n - 1)), "{src}");
        assert_eq!(rep.branch, Some(Branch::Nd), "{src}");
        for check in exponent_lemmas(&rep) {
            assert!(check.holds, "{src}: {} failed: {}", check.name, check.detail);
        }
    }
}

#[test]
fn adapted_representatives_default_to_the_family_reading() {
    // Inputs already in adapted normal form are read as family members.
    let rep = classify(&parse_poly("x2^3 + x1^9").unwrap()).unwrap();
    assert!(rep.m_defaulted);
    assert_eq!(rep.p_c_prime, Some(rat_i(6)));
    let rep = classify(&parse_poly("x1*x2^3 + x1^8").unwrap()).unwrap();
    assert!(rep.m_defaulted);
    assert_eq!(rep.kappa, Some((rat(1, 7), rat(2, 7))));
    assert_eq!(rep.hr, Some(rat(7, 3)));
}

#[test]
fn swapped_coordinates_are_normalized() {
    let rep = classify(&parse_poly("x2^9 + x1^3").unwrap()).unwrap();
    assert!(rep.swapped);
    assert_eq!(rep.p_c_prime, Some(rat_i(6)));
    assert_eq!(rep.theta_c, Some(rat(1, 3)));
}

#[test]
fn linear_then_quadratic_shear_composes() {
    // The quadratic block hides behind a linear shear by 1.
    let rep = classify(&parse_poly("x1*(x2 - x1 + x1^2)^3 + x1^8").unwrap()).unwrap();
    assert_eq!(rep.lin_shear, rat_i(1));
    assert_eq!(rep.d, rat(7, 3));
    assert_eq!(rep.hr, Some(rat(7, 3)));
    assert_eq!(rep.p_c_prime, Some(rat(20, 3)));
}

#[test]
fn degenerate_branch_is_detected_from_the_linear_row() {
    let rep = classify(&parse_poly("x2^3 + x1^7*x2 + x1^9").unwrap()).unwrap();
    assert_eq!(rep.branch, Some(Branch::D));
    assert_eq!(rep.n1, Some(rat_i(7)));
    let rep = classify(&parse_poly("x2^3 + x1^8*x2 + x1^9").unwrap()).unwrap();
    assert_eq!(rep.branch, Some(Branch::Nd));
}
