//! As the perturbation size goes to zero the quartic counterexample phase
//! degenerates to the unperturbed vertex `x1^3 + x2^4`, and the oscillatory
//! integral at fixed frequency must follow: the phase coefficients differ by
//! O(delta^(2/3)), so at lambda = 64 the gap shrinks by roughly 4.6x per
//! decade of delta.

use phaselab_verify::{counterexample_abs, unperturbed_abs};

#[test]
fn integral_converges_to_the_unperturbed_vertex() {
    let lambda = 64.0;
    let base = unperturbed_abs(lambda).unwrap();
    assert!(base > 0.0);
    let mut gaps = Vec::new();
    for delta in [1e-4, 1e-5, 1e-6] {
        let v = counterexample_abs(delta, lambda).unwrap();
        let gap = (v - base).abs() / base;
        eprintln!("delta {delta:.0e}: |J| {v:.6e}, relative gap {gap:.3e}");
        gaps.push(gap);
    }
    assert!(gaps[1] < gaps[0], "gap must shrink with delta: {gaps:?}");
    assert!(gaps[2] < gaps[1], "gap must shrink with delta: {gaps:?}");
    assert!(gaps[2] < 1e-4, "residual gap too large: {gaps:?}");
}
