/// Knobs shared by the verification suites. Defaults match the values the
/// acceptance run uses; the CLI overrides the first four.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Dyadic sweeps run over `lambda = 2^j` for `j` in
    /// `lambda_min_exp..=lambda_max_exp`.
    pub lambda_min_exp: u32,
    pub lambda_max_exp: u32,
    /// Seed for every randomized grid; identical seeds give bit-identical
    /// reports.
    pub seed: u64,
    /// Tolerance on fitted decay slopes.
    pub slope_tol: f64,
    /// Admissibility floor `L`: scale parameters below it fall outside the
    /// bound's hypotheses and the row is skipped.
    pub admissible_floor: f64,
    /// Margin `M` in the cubic-branch precondition `rho~ >= M * delta0^3`.
    pub cubic_margin: f64,
    /// Cap `delta0` on the small parameter of the one-dimensional van der
    /// Corput estimate (`delta * T <= delta0`).
    pub delta_cap: f64,
    /// Trial count for randomized checks.
    pub trials: usize,
    /// Uniform-bound grids integrate genuinely two-dimensional phases, whose
    /// panel counts grow like `lambda^2`; their sweep stops at this exponent
    /// regardless of `lambda_max_exp`.
    pub uniform_lambda_max_exp: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            lambda_min_exp: 8,
            lambda_max_exp: 16,
            seed: 42,
            slope_tol: 0.05,
            admissible_floor: 16.0,
            cubic_margin: 8.0,
            delta_cap: 0.1,
            trials: 500,
            uniform_lambda_max_exp: 12,
        }
    }
}

impl VerifyConfig {
    pub fn uniform_max_exp(&self) -> u32 {
        self.lambda_max_exp.min(self.uniform_lambda_max_exp)
    }
}
