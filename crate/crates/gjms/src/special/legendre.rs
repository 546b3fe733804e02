//! Associated Legendre functions of the first kind on (1, ∞), with complex
//! degree — the building block of the spherical functions on ℍⁿ.

use num_complex::Complex64;

use super::gamma::log_gamma;
use super::hyp2f1::hyp2f1;
use crate::{Error, Result};

/// Associated Legendre function of the first kind,
///
/// P^μ_ν(x) = (1/Γ(1−μ)) ((x+1)/(x−1))^{μ/2} F(−ν, ν+1; 1−μ; (1−x)/2),
///
/// for real x > 1, real order μ and complex degree ν. The hypergeometric
/// argument (1−x)/2 is negative; for x beyond 3 the evaluation goes through
/// the Pfaff transformation (handled inside [`hyp2f1`]).
///
/// # Errors
///
/// * [`Error::Domain`] — x ≤ 1;
/// * [`Error::GammaPole`] — 1−μ a nonpositive integer;
/// * propagated hypergeometric errors.
pub fn legendre_p(mu: f64, nu: Complex64, x: f64) -> Result<Complex64> {
    if x <= 1.0 {
        return Err(Error::Domain(format!("legendre_p requires x > 1, got {x}")));
    }
    let c = 1.0 - mu;
    if c < 0.5 && (c - c.round()).abs() < 1e-12 {
        return Err(Error::GammaPole(c));
    }
    let inv_gamma = (-log_gamma(Complex64::new(c, 0.0))?).exp();
    let prefactor = ((x + 1.0) / (x - 1.0)).powf(mu / 2.0);
    let f = hyp2f1(-nu, nu + 1.0, c, (1.0 - x) / 2.0)?;
    Ok(inv_gamma * prefactor * f)
}
