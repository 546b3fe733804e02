//! The radial Helgason–Fourier transform on ℍⁿ: spherical functions, the
//! Plancherel density, numerical transforms of radial functions, and the
//! closed forms / series the kernels K and H transform into.

use num_complex::Complex64;

use std::cell::Cell;
use std::f64::consts::PI;

use crate::kernels::KernelParams;
use crate::quad::integrate;
use crate::special::{abs_gamma_sq, legendre_p, ln_gamma, recip_abs_gamma_sq};
use crate::{Error, Result};

/// Controls for the numerical radial transform.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    /// Truncation radius of the half-line integral.
    pub rho_max: f64,
    pub max_nodes: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { rho_max: 40.0, max_nodes: 200_000, abs_tol: 1e-300, rel_tol: 1e-10 }
    }
}

impl QuadratureSpec {
    /// Truncation radius adapted to a kernel decaying like e^{−(ν+(n−1)/2)ρ}:
    /// slower decay (small ν) pushes the cutoff out.
    pub fn for_kernel(n: u32, nu: f64) -> Self {
        let rho_max = 40.0f64.max((20.0 + n as f64) * (1.0f64 / nu).max(1.0));
        QuadratureSpec { rho_max, max_nodes: 2_000_000, rel_tol: 1e-9, ..Self::default() }
    }
}

/// A radial function together with the exponential rate it decays at, which
/// gates convergence of its transform.
pub struct RadialFunction<'a> {
    pub eval: &'a dyn Fn(f64) -> f64,
    /// r such that f(ρ) = O(e^{−rρ}); the transform needs r > (n−1)/2.
    pub decay_rate: f64,
}

/// Inverse square modulus of the Harish-Chandra c-function (the Plancherel
/// density up to the spherical measure):
///
/// |c(λ)|^{−2} = |Γ(iλ+(n−1)/2)|² / (2(2π)ⁿ |Γ(iλ)|²).
///
/// The reciprocal-gamma route keeps the λ → 0 limit finite (it vanishes).
pub fn c_function_inv_sq(n: u32, lambda: f64) -> f64 {
    let nf = n as f64;
    abs_gamma_sq((nf - 1.0) / 2.0, lambda).unwrap_or(f64::INFINITY)
        * recip_abs_gamma_sq(0.0, lambda)
        / (2.0 * (2.0 * PI).powi(n as i32))
}

/// Spherical function φ_λ(ρ) on ℍⁿ, normalized to φ_λ(0) = 1:
///
/// φ_λ = 2^{(n−2)/2} Γ(n/2) (sinh ρ)^{(2−n)/2} P^{(2−n)/2}_{iλ−1/2}(cosh ρ).
///
/// # Errors
///
/// [`Error::Domain`] for ρ < 0; propagated Legendre errors.
pub fn spherical_fn(n: u32, lambda: f64, rho: f64) -> Result<f64> {
    if rho < 0.0 {
        return Err(Error::Domain(format!("spherical_fn needs ρ ≥ 0, got {rho}")));
    }
    let nf = n as f64;
    if rho < 1e-4 {
        // cosh ρ − 1 loses half its digits here, so use the Taylor
        // expansion instead: Δφ = −(λ² + (n−1)²/4)φ with φ(0) = 1 gives
        // φ = 1 − (λ² + (n−1)²/4) ρ²/(2n) + O(ρ⁴).
        let c = (lambda * lambda + (nf - 1.0) * (nf - 1.0) / 4.0) / (2.0 * nf);
        return Ok(1.0 - c * rho * rho);
    }
    let mu = (2.0 - nf) / 2.0;
    let p = legendre_p(mu, Complex64::new(-0.5, lambda), rho.cosh())?;
    let pre = ((nf - 2.0) / 2.0 * 2.0f64.ln() + ln_gamma(nf / 2.0)).exp()
        * rho.sinh().powf((2.0 - nf) / 2.0);
    let value = pre * p;
    if value.im.abs() > 1e-10 * value.re.abs().max(1.0) {
        return Err(Error::Domain(format!(
            "spherical function came out non-real: {} + {}i",
            value.re, value.im
        )));
    }
    Ok(value.re)
}

/// Radial Helgason–Fourier transform,
///
/// f̂(λ) = (2π)^{n/2} ∫₀^∞ f(ρ) (sinh ρ)^{n/2} P^{(2−n)/2}_{iλ−1/2}(cosh ρ) dρ,
///
/// truncated at `spec.rho_max` and evaluated adaptively.
///
/// # Errors
///
/// [`Error::Domain`] unless the declared decay rate exceeds (n−1)/2, which
/// is what makes the integrand decay (the Legendre factor grows like
/// e^{(n−1)ρ/2} against the (sinh ρ)^{n/2} weight); propagated quadrature
/// and special-function errors.
pub fn radial_hf_transform(f: &RadialFunction, n: u32, lambda: f64, spec: &QuadratureSpec) -> Result<f64> {
    let nf = n as f64;
    if f.decay_rate <= (nf - 1.0) / 2.0 {
        return Err(Error::Domain(format!(
            "transform needs decay rate > (n−1)/2 = {}, got {}",
            (nf - 1.0) / 2.0,
            f.decay_rate
        )));
    }
    let mu = (2.0 - nf) / 2.0;
    let deg = Complex64::new(-0.5, lambda);
    let failure: Cell<Option<Error>> = Cell::new(None);
    let integrand = |rho: f64| -> f64 {
        if rho < 1e-7 {
            // The integrand vanishes like ρ^{n−1} times the kernel's power
            // at the origin; below machine resolution of cosh ρ − 1 it is 0.
            return 0.0;
        }
        match legendre_p(mu, deg, rho.cosh()) {
            Ok(p) => (f.eval)(rho) * rho.sinh().powf(nf / 2.0) * p.re,
            Err(e) => {
                failure.set(Some(e));
                0.0
            }
        }
    };
    let q = integrate(integrand, 0.0, spec.rho_max, spec.abs_tol, spec.rel_tol, spec.max_nodes)?;
    if let Some(e) = failure.take() {
        return Err(e);
    }
    Ok((2.0 * PI).powf(nf / 2.0) * q.value)
}

/// Closed form of the transform of the Green's kernel K_{ν,γ}:
///
/// K̂(λ) = |Γ(ν+iλ)|² / |Γ(ν+γ+iλ)|².
///
/// # Errors
///
/// [`Error::Domain`] for ν = 0, where K̂ only exists distributionally.
pub fn hf_k_closed(p: &KernelParams, lambda: f64) -> Result<f64> {
    if p.nu == 0.0 {
        return Err(Error::Domain("transform of K needs ν > 0".into()));
    }
    Ok(abs_gamma_sq(p.nu, lambda)? * recip_abs_gamma_sq(p.nu + p.gamma, lambda))
}

/// Sum Σ_k t_k of a positive series whose terms eventually decay like
/// k^{−s} with s = decay + 1 > 1. `ratio(k)` gives t_{k+1}/t_k.
///
/// Partial sums are Kahan-compensated. At checkpoints N = 64, 128, 256, …
/// the tail Σ_{k>N} t_k is completed with the Euler–Maclaurin estimate
/// t_N·(N/(s−1) + 1/2 + s/(12N)); summation stops once two successive
/// checkpoint estimates agree, which happens long before the naive
/// stopping rule t_N ≤ ε·sum would fire for slowly decaying tails.
fn sum_power_tail<R: Fn(usize) -> f64>(t0: f64, ratio: R, decay: f64) -> Result<f64> {
    let s = decay + 1.0;
    if s <= 1.0 {
        return Err(Error::Domain(format!("series tail exponent {s} ≤ 1 does not converge")));
    }
    let mut term = t0;
    let mut sum = t0;
    let mut comp = 0.0f64;
    let mut checkpoint = 64usize;
    let mut prev_est = f64::NAN;
    let mut prev_refined = f64::NAN;
    let mut k = 0usize;
    while k < 4_000_000 {
        term *= ratio(k);
        k += 1;
        if term == 0.0 {
            // Terminating series (a Pochhammer factor hit zero).
            return Ok(sum + comp);
        }
        let t = sum + term;
        comp += if sum.abs() >= term.abs() { (sum - t) + term } else { (term - t) + sum };
        sum = t;
        if k == checkpoint {
            let nf = k as f64;
            let est = sum + comp + term * (nf / (s - 1.0) + 0.5 + s / (12.0 * nf));
            // est carries an O(N⁻²) bias from the neglected 1/k corrections
            // to the pure power law; one Richardson step across the doubled
            // checkpoints removes it.
            let refined = est + (est - prev_est) / 3.0;
            if (refined - prev_refined).abs() <= 2e-11 * refined.abs() {
                return Ok(refined);
            }
            prev_est = est;
            prev_refined = refined;
            checkpoint *= 2;
        }
    }
    Err(Error::NoConvergence { terms: 4_000_000, last_rel: (term / sum).abs() })
}

/// Transform of the companion kernel H_{ν,γ} as a hypergeometric-type series,
///
/// Ĥ(λ) = 2ⁿπ^{n/2} Σ_k |Γ(ν+k+iλ)|² (n/2−γ)_k
///         / (Γ((n−1)/2+ν+k) Γ(1/2+ν+k) k!),
///
/// with a power-law tail completion (the terms decay like k^{−γ−1}).
///
/// # Errors
///
/// [`Error::Domain`] for ν = 0; [`Error::NoConvergence`] if the budget runs
/// out (γ very close to 0).
pub fn hf_h_series(p: &KernelParams, lambda: f64) -> Result<f64> {
    if p.nu == 0.0 {
        return Err(Error::Domain("transform of H needs ν > 0".into()));
    }
    let nf = p.n as f64;
    let t0 = (abs_gamma_sq(p.nu, lambda)?.ln()
        - ln_gamma((nf - 1.0) / 2.0 + p.nu)
        - ln_gamma(0.5 + p.nu))
    .exp();
    let (nu, g) = (p.nu, p.gamma);
    let l2 = lambda * lambda;
    let ratio = move |k: usize| {
        let kf = k as f64;
        ((nu + kf) * (nu + kf) + l2) * (nf / 2.0 - g + kf)
            / (((nf - 1.0) / 2.0 + nu + kf) * (0.5 + nu + kf) * (kf + 1.0))
    };
    let sum = sum_power_tail(t0, ratio, g)?;
    Ok((nf * 2.0f64.ln() + nf / 2.0 * PI.ln()).exp() * sum)
}

/// The transform of K as a series over the same gamma weights,
///
/// K̂(λ) = (1/Γ(γ)) Σ_k |Γ(ν+k+iλ)|² / (Γ(2ν+γ+k) k!),
///
/// agreeing with [`hf_k_closed`]; terms decay like k^{−γ−1} and get the same
/// tail completion.
///
/// # Errors
///
/// Same as [`hf_h_series`].
pub fn hf_k_series(p: &KernelParams, lambda: f64) -> Result<f64> {
    if p.nu == 0.0 {
        return Err(Error::Domain("transform of K needs ν > 0".into()));
    }
    let t0 = (abs_gamma_sq(p.nu, lambda)?.ln() - ln_gamma(2.0 * p.nu + p.gamma)).exp();
    let (nu, g) = (p.nu, p.gamma);
    let l2 = lambda * lambda;
    let ratio = move |k: usize| {
        let kf = k as f64;
        ((nu + kf) * (nu + kf) + l2) / ((2.0 * nu + g + kf) * (kf + 1.0))
    };
    let sum = sum_power_tail(t0, ratio, g)?;
    Ok((-ln_gamma(g)).exp() * sum)
}

/// Closed form of ∫₀^∞ (cosh ρ/2)^{−g} (sinh ρ)^{n/2} P^{(2−n)/2}_{iλ−1/2}(cosh ρ) dρ:
///
/// 2^{n/2} |Γ((g+1−n)/2+iλ)|² / (Γ(g/2) Γ((g+2−n)/2)).
///
/// # Errors
///
/// [`Error::Domain`] unless g > n − 1 (convergence of the integral).
pub fn legendre_integral_closed(g: f64, n: u32, lambda: f64) -> Result<f64> {
    let nf = n as f64;
    if g <= nf - 1.0 {
        return Err(Error::Domain(format!("integral needs g > n − 1, got g={g}, n={n}")));
    }
    Ok((abs_gamma_sq((g + 1.0 - nf) / 2.0, lambda)?.ln()
        + nf / 2.0 * 2.0f64.ln()
        - ln_gamma(g / 2.0)
        - ln_gamma((g + 2.0 - nf) / 2.0))
    .exp())
}
