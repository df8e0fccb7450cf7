//! Gauss-Legendre nodes and weights on [-1, 1].

use std::sync::OnceLock;

/// Value and derivative of the Legendre polynomial `P_n` at `x`.
fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for j in 2..=n {
        let jf = j as f64;
        let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
        p0 = p1;
        p1 = p2;
    }
    // Valid away from x = +-1; all roots lie strictly inside.
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Nodes (ascending) and weights of the n-point rule.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2, "a rule needs at least two nodes");
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..64 {
            let (p, d) = legendre_pair(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 5e-16 {
                break;
            }
        }
        let (_, d) = legendre_pair(n, x);
        let w = 2.0 / ((1.0 - x * x) * d * d);
        // The initial guesses walk down from the largest root.
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    (nodes, weights)
}

static GL16: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();

/// The cached 16-point rule used by the oscillatory integrators.
pub fn gl16() -> &'static (Vec<f64>, Vec<f64>) {
    GL16.get_or_init(|| gauss_legendre(16))
}
