//! Radial Green's kernels on hyperbolic space, the hyperbolic distance in
//! the ball and half-space models, and the Euclidean fractional Green's
//! functions which those kernels turn into under the conformal factors.

use num_complex::Complex64;

use crate::quad::integrate;
use crate::special::{hyp2f1, ln_gamma};
use crate::{Error, Result};

use std::f64::consts::PI;

/// Parameters of the kernel family K_{ν,γ} / H_{ν,γ} on ℍⁿ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams {
    pub nu: f64,
    pub gamma: f64,
    pub n: u32,
}

impl KernelParams {
    /// # Errors
    ///
    /// [`Error::Domain`] unless ν ≥ 0, γ > 0, n ≥ 2.
    pub fn new(nu: f64, gamma: f64, n: u32) -> Result<Self> {
        if nu < 0.0 || gamma <= 0.0 || n < 2 {
            return Err(Error::Domain(format!(
                "kernel parameters need ν ≥ 0, γ > 0, n ≥ 2; got ν={nu}, γ={gamma}, n={n}"
            )));
        }
        Ok(KernelParams { nu, gamma, n })
    }
}

/// Leading coefficient of K_{ν,γ}:
///
/// C_{ν,γ} = Γ((n−1)/2+ν) Γ(ν+1/2) / (2ⁿ π^{n/2} Γ(γ) Γ(2ν+γ)).
pub fn kernel_coeff(p: &KernelParams) -> f64 {
    let n = p.n as f64;
    (ln_gamma((n - 1.0) / 2.0 + p.nu) + ln_gamma(p.nu + 0.5)
        - n * 2.0f64.ln()
        - n / 2.0 * PI.ln()
        - ln_gamma(p.gamma)
        - ln_gamma(2.0 * p.nu + p.gamma))
    .exp()
}

/// Green's kernel
///
/// K_{ν,γ}(cosh ρ) = C_{ν,γ} (cosh ρ/2)^{1−n−2ν}
///                   F(ν+(n−1)/2, ν+1/2; 2ν+γ; (cosh ρ/2)^{−2}).
///
/// # Errors
///
/// [`Error::Domain`] for ρ ≤ 0 (the kernel is singular at 0 for γ ≤ n/2);
/// propagated hypergeometric errors.
pub fn kernel_k(p: &KernelParams, rho: f64) -> Result<f64> {
    if rho <= 0.0 {
        return Err(Error::Domain(format!("kernel_k needs ρ > 0, got {rho}")));
    }
    let n = p.n as f64;
    let ch = (rho / 2.0).cosh();
    let f = hyp2f1(
        Complex64::new(p.nu + (n - 1.0) / 2.0, 0.0),
        Complex64::new(p.nu + 0.5, 0.0),
        2.0 * p.nu + p.gamma,
        ch.powi(-2),
    )?;
    Ok(kernel_coeff(p) * ch.powf(1.0 - n - 2.0 * p.nu) * f.re)
}

/// Companion kernel
///
/// H_{ν,γ}(cosh ρ) = (cosh ρ/2)^{1−2γ−2ν} (sinh ρ/2)^{2γ−n}.
///
/// # Errors
///
/// [`Error::Domain`] for ρ ≤ 0.
pub fn kernel_h(p: &KernelParams, rho: f64) -> Result<f64> {
    if rho <= 0.0 {
        return Err(Error::Domain(format!("kernel_h needs ρ > 0, got {rho}")));
    }
    let n = p.n as f64;
    Ok((rho / 2.0).cosh().powf(1.0 - 2.0 * p.gamma - 2.0 * p.nu)
        * (rho / 2.0).sinh().powf(2.0 * p.gamma - n))
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn dist_sq(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum()
}

/// cosh(ρ(x,y)/2) in the Poincaré ball model:
///
/// √(1 − 2x·y + |x|²|y|²) / √((1−|x|²)(1−|y|²)).
pub fn cosh_half_distance_ball(x: &[f64], y: &[f64]) -> f64 {
    let (x2, y2) = (dot(x, x), dot(y, y));
    debug_assert!(x2 < 1.0 && y2 < 1.0, "ball points need |x| < 1");
    ((1.0 - 2.0 * dot(x, y) + x2 * y2) / ((1.0 - x2) * (1.0 - y2))).sqrt()
}

/// cosh(ρ(x,y)/2) in the half-space model (first coordinate positive):
///
/// √(|x−y|² + 4x₁y₁) / (2√(x₁y₁)).
pub fn cosh_half_distance_halfspace(x: &[f64], y: &[f64]) -> f64 {
    debug_assert!(x[0] > 0.0 && y[0] > 0.0, "half-space points need x₁ > 0");
    (dist_sq(x, y) + 4.0 * x[0] * y[0]).sqrt() / (2.0 * (x[0] * y[0]).sqrt())
}

/// Incomplete integral ∫₀^T t^{γ−1}(t+1)^{−n/2} dt shared by both Euclidean
/// Green's functions, evaluated by adaptive quadrature after the
/// substitution t = T u^{1/γ} which removes the endpoint singularity.
fn green_integral(gamma: f64, n: f64, t_upper: f64) -> Result<f64> {
    let inv_gamma_exp = 1.0 / gamma;
    let integrand =
        move |u: f64| (1.0 + t_upper * u.powf(inv_gamma_exp)).powf(-n / 2.0);
    let q = integrate(integrand, 0.0, 1.0, 1e-300, 1e-12, 400_000)?;
    Ok(t_upper.powf(gamma) / gamma * q.value)
}

fn green_coeff(gamma: f64, n: f64) -> f64 {
    (ln_gamma(n / 2.0) - n / 2.0 * PI.ln() - 2.0 * gamma * 2.0f64.ln() - 2.0 * ln_gamma(gamma))
        .exp()
}

/// Green's function of (−Δ)^γ on the unit ball:
///
/// G(x,y) = Γ(n/2)/(π^{n/2} 4^γ Γ(γ)²) |x−y|^{2γ−n} ∫₀^T t^{γ−1}(t+1)^{−n/2} dt,
/// T = (1−|x|²)(1−|y|²)/|x−y|².
///
/// # Errors
///
/// [`Error::Domain`] for coincident points or γ ≤ 0.
pub fn green_ball(gamma: f64, n: u32, x: &[f64], y: &[f64]) -> Result<f64> {
    let d2 = dist_sq(x, y);
    if d2 == 0.0 {
        return Err(Error::Domain("Green's function at coincident points".into()));
    }
    if gamma <= 0.0 {
        return Err(Error::Domain(format!("green_ball needs γ > 0, got {gamma}")));
    }
    let nf = n as f64;
    let t_upper = (1.0 - dot(x, x)) * (1.0 - dot(y, y)) / d2;
    Ok(green_coeff(gamma, nf) * d2.powf(gamma - nf / 2.0) * green_integral(gamma, nf, t_upper)?)
}

/// Green's function of (−Δ)^γ on the half-space {x₁ > 0}: same shape as the
/// ball version with T = 4x₁y₁/|x−y|².
///
/// # Errors
///
/// [`Error::Domain`] for coincident points or γ ≤ 0.
pub fn green_halfspace(gamma: f64, n: u32, x: &[f64], y: &[f64]) -> Result<f64> {
    let d2 = dist_sq(x, y);
    if d2 == 0.0 {
        return Err(Error::Domain("Green's function at coincident points".into()));
    }
    if gamma <= 0.0 {
        return Err(Error::Domain(format!("green_halfspace needs γ > 0, got {gamma}")));
    }
    let nf = n as f64;
    let t_upper = 4.0 * x[0] * y[0] / d2;
    Ok(green_coeff(gamma, nf) * d2.powf(gamma - nf / 2.0) * green_integral(gamma, nf, t_upper)?)
}

/// Radial Laplace–Beltrami operator on ℍⁿ applied to a radial function:
///
/// Δf = f''(ρ) + (n−1) coth(ρ) f'(ρ),
///
/// with 5-point central finite differences (O(step⁴) truncation).
///
/// # Errors
///
/// [`Error::Domain`] when the stencil would cross ρ = 0.
pub fn radial_laplace_beltrami<F: Fn(f64) -> f64>(
    f: F,
    rho: f64,
    step: f64,
    n: u32,
) -> Result<f64> {
    if step <= 0.0 || 2.0 * step >= rho {
        return Err(Error::Domain(format!(
            "finite-difference step {step} too large for ρ = {rho}"
        )));
    }
    let (f1, f2) = (f(rho - step), f(rho + step));
    let (f0, f4) = (f(rho - 2.0 * step), f(rho + 2.0 * step));
    let fc = f(rho);
    let d2 = (-f0 + 16.0 * f1 - 30.0 * fc + 16.0 * f2 - f4) / (12.0 * step * step);
    let d1 = (f0 - 8.0 * f1 + 8.0 * f2 - f4) / (12.0 * step);
    Ok(d2 + (n as f64 - 1.0) / rho.tanh() * d1)
}

/// Residual of the differential identity for H_{0,γ}:
///
/// (−Δ_ℍ − (n−1)²/4) H_{0,γ}
///   = ((n−2γ)(2γ−2)/4)(sinh ρ/2)^{2γ−2−n}(cosh ρ/2)^{1−2γ}
///   + ((2γ−1)(2γ+1−n)/(4 cosh²(ρ/2))) H_{0,γ},
///
/// with the left side obtained by finite differences (step max(1e-4, 1e-3·ρ)).
///
/// # Errors
///
/// [`Error::Domain`] unless (n−1)/2 ≤ γ < n/2 and ρ > 0.
pub fn lemma61_residual(gamma: f64, n: u32, rho: f64) -> Result<f64> {
    let nf = n as f64;
    if gamma < (nf - 1.0) / 2.0 || gamma >= nf / 2.0 {
        return Err(Error::Domain(format!(
            "identity stated for (n−1)/2 ≤ γ < n/2; got n={n}, γ={gamma}"
        )));
    }
    let p = KernelParams::new(0.0, gamma, n)?;
    let h = move |r: f64| {
        (r / 2.0).cosh().powf(1.0 - 2.0 * gamma) * (r / 2.0).sinh().powf(2.0 * gamma - nf)
    };
    let step = 1e-4f64.max(1e-3 * rho);
    let lap = radial_laplace_beltrami(h, rho, step, n)?;
    let h0 = kernel_h(&p, rho)?;
    let lhs = -lap - (nf - 1.0) * (nf - 1.0) / 4.0 * h0;
    let ch2 = (rho / 2.0).cosh().powi(2);
    let rhs = (nf - 2.0 * gamma) * (2.0 * gamma - 2.0) / 4.0
        * (rho / 2.0).sinh().powf(2.0 * gamma - 2.0 - nf)
        * (rho / 2.0).cosh().powf(1.0 - 2.0 * gamma)
        + (2.0 * gamma - 1.0) * (2.0 * gamma + 1.0 - nf) / (4.0 * ch2) * h0;
    Ok(lhs - rhs)
}

/// Closed form of the right side of the differential identity, used to scale
/// residuals into relative form.
pub fn lemma61_closed_form(gamma: f64, n: u32, rho: f64) -> Result<f64> {
    let nf = n as f64;
    let p = KernelParams::new(0.0, gamma, n)?;
    let h0 = kernel_h(&p, rho)?;
    let ch2 = (rho / 2.0).cosh().powi(2);
    Ok((nf - 2.0 * gamma) * (2.0 * gamma - 2.0) / 4.0
        * (rho / 2.0).sinh().powf(2.0 * gamma - 2.0 - nf)
        * (rho / 2.0).cosh().powf(1.0 - 2.0 * gamma)
        + (2.0 * gamma - 1.0) * (2.0 * gamma + 1.0 - nf) / (4.0 * ch2) * h0)
}
