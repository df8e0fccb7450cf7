//! Runs with the same seed must replay bit for bit; a different seed must
//! actually change the sampled trials.

use phaselab_verify::{check_dyadic_sum_lemma, check_rho_homogeneity, VerifyConfig};

#[test]
fn dyadic_trials_replay_bit_for_bit() {
    let cfg = VerifyConfig::default();
    let a = check_dyadic_sum_lemma(&cfg).unwrap();
    let b = check_dyadic_sum_lemma(&cfg).unwrap();
    assert_eq!(a.rows, b.rows);
    assert_eq!(a.ratio_sup.to_bits(), b.ratio_sup.to_bits());
    assert_eq!(a.verdict, b.verdict);

    let mut other = VerifyConfig::default();
    other.seed = cfg.seed + 1;
    let c = check_dyadic_sum_lemma(&other).unwrap();
    assert_ne!(a.rows, c.rows, "a new seed must draw new trials");
}

#[test]
fn homogeneity_detail_replays_verbatim() {
    let a = check_rho_homogeneity(42, 200).unwrap();
    let b = check_rho_homogeneity(42, 200).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.passed, y.passed);
        assert_eq!(x.detail, y.detail);
    }
}
