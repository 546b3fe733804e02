use thiserror::Error;

/// Errors surfaced by the numerical routines.
///
/// Poles, domain violations and exhausted iteration budgets are reported
/// explicitly instead of letting NaN/∞ escape from public operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma-function pole at a nonpositive integer.
    #[error("gamma pole at nonpositive integer argument {0}")]
    GammaPole(f64),

    /// Hypergeometric parameter c at a nonpositive integer.
    #[error("hypergeometric parameter c = {0} is a nonpositive integer")]
    ParameterPole(f64),

    /// Argument outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or iteration did not converge within its budget.
    #[error("no convergence after {terms} terms (last relative term {last_rel:.3e})")]
    NoConvergence { terms: usize, last_rel: f64 },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature tolerance not reached: estimated error {err:.3e} > target {target:.3e}")]
    QuadratureAccuracy { err: f64, target: f64 },

    /// The two boundary exponents of the scattering problem differ by an
    /// even integer, so the two-power boundary expansion degenerates.
    #[error("resonant order gamma = {0}: boundary exponents differ by an even integer")]
    Resonance(f64),

    /// The boundary least-squares fit did not reproduce the solution.
    #[error("boundary fit residual {0:.3e} exceeds tolerance")]
    FitResidual(f64),

    /// A parameter search failed to find any admissible value.
    #[error("search failure: {0}")]
    SearchFailure(String),

    /// ODE step-size control failed (stiffness or a singular coefficient).
    #[error("integration failure: {0}")]
    Integration(String),
}
