//! The named sharp constants — Sobolev, Hardy–Littlewood–Sobolev and Adams —
//! and the exact duality relation tying the first two together.
//!
//! Everything is computed through log-gamma differences, never raw gamma
//! products, so the formulas stay finite well past n = 30.

use crate::special::ln_gamma;
use crate::{Error, Result};

use std::f64::consts::PI;

/// Best constant in the order-γ Sobolev inequality on ℝⁿ:
///
/// S_{n,γ} = 2^{2γ} π^γ (Γ((n+2γ)/2)/Γ((n−2γ)/2)) (Γ(n/2)/Γ(n))^{2γ/n}.
///
/// # Errors
///
/// [`Error::Domain`] unless 0 < γ < n/2.
pub fn sobolev_constant(n: u32, gamma: f64) -> Result<f64> {
    let nf = n as f64;
    if gamma <= 0.0 || gamma >= nf / 2.0 {
        return Err(Error::Domain(format!("Sobolev constant needs 0 < γ < n/2, got γ={gamma}")));
    }
    let ln = 2.0 * gamma * 2.0f64.ln()
        + gamma * PI.ln()
        + ln_gamma((nf + 2.0 * gamma) / 2.0)
        - ln_gamma((nf - 2.0 * gamma) / 2.0)
        + 2.0 * gamma / nf * (ln_gamma(nf / 2.0) - ln_gamma(nf));
    Ok(ln.exp())
}

/// Best constant of the classical Hardy–Littlewood–Sobolev inequality on ℝⁿ
/// with kernel exponent λ:
///
/// C_{n,λ} = π^{λ/2} (Γ(n/2−λ/2)/Γ(n−λ/2)) (Γ(n/2)/Γ(n))^{−1+λ/n}.
///
/// # Errors
///
/// [`Error::Domain`] unless 0 < λ < n.
pub fn hls_constant(n: u32, lambda_exp: f64) -> Result<f64> {
    let nf = n as f64;
    if lambda_exp <= 0.0 || lambda_exp >= nf {
        return Err(Error::Domain(format!("HLS constant needs 0 < λ < n, got λ={lambda_exp}")));
    }
    let ln = lambda_exp / 2.0 * PI.ln()
        + ln_gamma(nf / 2.0 - lambda_exp / 2.0)
        - ln_gamma(nf - lambda_exp / 2.0)
        + (lambda_exp / nf - 1.0) * (ln_gamma(nf / 2.0) - ln_gamma(nf));
    Ok(ln.exp())
}

/// Residual of the duality identity linking the Green-kernel coefficient,
/// the HLS constant at exponent n−2γ and the Sobolev constant:
///
/// [Γ(n/2−γ)/(2ⁿπ^{n/2}Γ(γ))] · 2^{n−2γ} · C_{n,n−2γ} − 1/S_{n,γ}.
///
/// Identically zero in exact arithmetic.
///
/// # Errors
///
/// [`Error::Domain`] unless (n−1)/2 ≤ γ < n/2.
pub fn duality_residual(n: u32, gamma: f64) -> Result<f64> {
    let nf = n as f64;
    if gamma < (nf - 1.0) / 2.0 || gamma >= nf / 2.0 {
        return Err(Error::Domain(format!(
            "duality identity stated for (n−1)/2 ≤ γ < n/2, got n={n}, γ={gamma}"
        )));
    }
    let ln_coeff = ln_gamma(nf / 2.0 - gamma)
        - nf * 2.0f64.ln()
        - nf / 2.0 * PI.ln()
        - ln_gamma(gamma)
        + (nf - 2.0 * gamma) * 2.0f64.ln();
    let lhs = ln_coeff.exp() * hls_constant(n, nf - 2.0 * gamma)?;
    Ok(lhs - 1.0 / sobolev_constant(n, gamma)?)
}

/// Sharp exponent of the fractional Adams (exponential-class) inequality:
///
/// β₀(n,m) = (n/|𝕊^{n−1}|) [π^{n/2} 2^m Γ(m/2)/Γ((n−m)/2)]^{n/(n−m)},
///
/// with |𝕊^{n−1}| = 2π^{n/2}/Γ(n/2).
///
/// # Errors
///
/// [`Error::Domain`] unless 0 < m < n.
pub fn adams_constant(n: u32, m: f64) -> Result<f64> {
    let nf = n as f64;
    if m <= 0.0 || m >= nf {
        return Err(Error::Domain(format!("Adams constant needs 0 < m < n, got m={m}")));
    }
    let ln_sphere = 2.0f64.ln() + nf / 2.0 * PI.ln() - ln_gamma(nf / 2.0);
    let ln_bracket =
        nf / 2.0 * PI.ln() + m * 2.0f64.ln() + ln_gamma(m / 2.0) - ln_gamma((nf - m) / 2.0);
    Ok((nf.ln() - ln_sphere + nf / (nf - m) * ln_bracket).exp())
}

/// Residual between the two closed forms of the bottom constant of the
/// integer-order operator: ∏_{i=1}^{k}(2i−1)²/4 − Γ(k+1/2)²/π.
pub fn gjms_bottom_integer_check(k: u32) -> f64 {
    debug_assert!(k >= 1);
    let mut product = 1.0;
    for i in 1..=k {
        let odd = (2 * i - 1) as f64;
        product *= odd * odd / 4.0;
    }
    product - (2.0 * ln_gamma(k as f64 + 0.5) - PI.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn sobolev_closed_values() {
        assert_relative_eq!(
            sobolev_constant(3, 1.0).unwrap(),
            3.0 * (PI / 2.0).powf(4.0 / 3.0),
            max_relative = 1e-13
        );
        assert_relative_eq!(
            sobolev_constant(4, 1.0).unwrap(),
            8.0 * PI / 6.0f64.sqrt(),
            max_relative = 1e-13
        );
        assert!(sobolev_constant(3, 1.5).is_err());
        assert!(sobolev_constant(3, 0.0).is_err());
    }

    #[test]
    fn sobolev_shape_in_gamma() {
        // Positive and unimodal on (0, n/2): increasing through moderate γ,
        // then collapsing as γ → n/2 because of the (Γ(n/2)/Γ(n))^{2γ/n}
        // volume factor beating the Γ((n−2γ)/2) pole. (It is not monotone
        // increasing over the whole range.)
        for n in [3u32, 5, 8] {
            let mut prev = 0.0;
            for j in 1..=10 {
                let gamma = 1.1 * j as f64 / 10.0;
                let s = sobolev_constant(n, gamma).unwrap();
                assert!(s > prev, "n={n} γ={gamma}");
                prev = s;
            }
        }
        // for n = 3 the peak sits near γ ≈ 1.1 and the tail is far below it
        let peak = sobolev_constant(3, 1.1).unwrap();
        assert!(sobolev_constant(3, 1.45).unwrap() < peak);
        assert!(sobolev_constant(3, 1.499).unwrap() < 0.1 * peak);
    }

    #[test]
    fn sobolev_vanishes_at_half_dimension() {
        for n in [3u32, 6] {
            let near = sobolev_constant(n, n as f64 / 2.0 - 1e-3).unwrap();
            let far = sobolev_constant(n, n as f64 / 2.0 - 1e-2).unwrap();
            assert!(near > 0.0 && near <= far / 5.0);
        }
    }

    #[test]
    fn hls_frozen_value() {
        // C_{3,1} = π^{1/2}Γ(1)/Γ(5/2)·(Γ(3/2)/Γ(3))^{−2/3}; 50-digit oracle.
        assert_relative_eq!(hls_constant(3, 1.0).unwrap(), 2.294_010_703_541_599, max_relative = 1e-13);
        assert!(hls_constant(3, 3.0).is_err());
        for &(n, l) in &[(3u32, 0.5), (5, 2.2), (9, 7.7)] {
            assert!(hls_constant(n, l).unwrap() > 0.0);
        }
    }

    #[test]
    fn duality_identity_spot_values() {
        for &(n, gamma) in &[(3u32, 1.0), (5, 2.3), (7, 3.0)] {
            let r = duality_residual(n, gamma).unwrap();
            let scale = 1.0 / sobolev_constant(n, gamma).unwrap();
            assert!(r.abs() <= 1e-12 * scale, "n={n} γ={gamma}: {r:e}");
        }
    }

    #[test]
    fn duality_identity_dense_grid() {
        for n in 3..=9u32 {
            let lo = (n as f64 - 1.0) / 2.0;
            let hi = n as f64 / 2.0;
            for j in 0..20 {
                let gamma = lo + (hi - lo) * j as f64 / 20.0;
                let r = duality_residual(n, gamma).unwrap();
                let scale = 1.0 / sobolev_constant(n, gamma).unwrap();
                assert!(r.abs() <= 1e-12 * scale, "n={n} γ={gamma}: {r:e}");
            }
        }
    }

    #[test]
    fn adams_values() {
        assert_relative_eq!(adams_constant(3, 1.5).unwrap(), 6.0 * PI * PI, max_relative = 1e-13);
        // pinned 50-digit oracle value
        assert_relative_eq!(adams_constant(4, 2.0).unwrap(), 315.827_340_834_859_5, max_relative = 1e-13);
        assert!(adams_constant(3, 3.0).is_err());
        for &(n, m) in &[(3u32, 0.5), (7, 3.2), (12, 11.0)] {
            assert!(adams_constant(n, m).unwrap() > 0.0);
        }
    }

    #[test]
    fn integer_bottom_residual() {
        for k in 1..=7u32 {
            let mut product = 1.0;
            for i in 1..=k {
                let odd = (2 * i - 1) as f64;
                product *= odd * odd / 4.0;
            }
            let r = gjms_bottom_integer_check(k);
            assert!(r.abs() <= 1e-12 * product, "k={k}: {r:e}");
        }
    }
}
