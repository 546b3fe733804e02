//! Gauss hypergeometric function F(a,b;c;z) for real z < 1 (z = 1 allowed
//! when the Gauss sum converges), with complex parameters a, b and real c.
//!
//! Region strategy: direct series for |z| ≤ 1/2, Pfaff transformation for
//! z < −1/2, and the 1−z connection formulas for z ∈ (1/2, 1) — including
//! the degenerate logarithmic case when c−a−b sits at an integer, which the
//! Green's kernels hit whenever γ − n/2 is an integer.

use num_complex::Complex64;

use super::gamma::log_gamma;
use crate::{Error, Result};

/// Hard budget on total series terms per evaluation.
const MAX_TERMS: usize = 1_000_000;

/// Series termination: last term below this fraction of the partial sum,
/// three times in a row (guards alternating near-cancellation).
const TERM_EPS: f64 = 1e-16;

fn near_nonpositive_integer(x: f64, tol: f64) -> bool {
    x < 0.5 && (x - x.round()).abs() <= tol
}

fn is_real_nonpositive_integer(z: Complex64) -> Option<i64> {
    if z.im.abs() <= 1e-12 && near_nonpositive_integer(z.re, 1e-12) {
        Some(z.re.round() as i64)
    } else {
        None
    }
}

/// Gauss hypergeometric function F(a, b; c; z).
///
/// # Errors
///
/// * [`Error::ParameterPole`] — c is a nonpositive integer;
/// * [`Error::Domain`] — z > 1, or z = 1 without Re(c−a−b) > 0;
/// * [`Error::NoConvergence`] — the 10⁶-term budget is exhausted.
pub fn hyp2f1(a: Complex64, b: Complex64, c: f64, z: f64) -> Result<Complex64> {
    if near_nonpositive_integer(c, 1e-12) {
        return Err(Error::ParameterPole(c));
    }
    hyp2f1_c(a, b, Complex64::new(c, 0.0), z)
}

/// Internal evaluator; c is complex because the 1−z connection formulas
/// produce complex inner c parameters even when the caller's c is real.
fn hyp2f1_c(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    // Terminating series: polynomial in z, valid everywhere.
    if let Some(m) = is_real_nonpositive_integer(a) {
        return series_fixed(a, b, c, z, (-m) as usize);
    }
    if let Some(m) = is_real_nonpositive_integer(b) {
        return series_fixed(b, a, c, z, (-m) as usize);
    }

    if z > 1.0 {
        return Err(Error::Domain(format!("hypergeometric argument z = {z} > 1")));
    }
    if z < -1e6 {
        // So far out the Pfaff image w = z/(z−1) collides with 1 in
        // floating point. Use the connection at infinity, except near its
        // degeneracy b − a ∈ ℤ, where Euler's integral takes over (there
        // Im b is small, so the t^{b−1} endpoint oscillation it would
        // otherwise have is mild).
        let ba = b - a;
        if ba.im.abs() < 0.05 && (ba.re - ba.re.round()).abs() < 0.05 {
            return euler_integral(a, b, c, z);
        }
        return infinity_connection(a, b, c, z);
    }
    if z == 1.0 {
        let s = c - a - b;
        if s.re <= 0.0 {
            return Err(Error::Domain(
                "z = 1 requires Re(c - a - b) > 0 for convergence".into(),
            ));
        }
        return gauss_sum_at_one(a, b, c);
    }
    if z < -0.5 {
        // Pfaff: F(a,b;c;z) = (1−z)^{−a} F(a, c−b; c; z/(z−1))
        let w = z / (z - 1.0);
        let pf = hyp2f1_c(a, c - b, c, w)?;
        return Ok((-a * (1.0 - z).ln()).exp() * pf);
    }
    if z <= 0.5 {
        return series(a, b, c, z);
    }
    connection_near_one(a, b, c, z)
}

/// Direct power series Σ (a)_k (b)_k / ((c)_k k!) z^k.
fn series(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut calm = 0u32;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term.norm() <= TERM_EPS * sum.norm() {
            calm += 1;
            if calm >= 3 {
                return Ok(sum);
            }
        } else {
            calm = 0;
        }
    }
    Err(Error::NoConvergence {
        terms: MAX_TERMS,
        last_rel: term.norm() / sum.norm(),
    })
}

/// Terminating series: `a` is the nonpositive integer −m; exactly m+1 terms.
fn series_fixed(a: Complex64, b: Complex64, c: Complex64, z: f64, m: usize) -> Result<Complex64> {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 0..m {
        let kf = k as f64;
        let denom = c + kf;
        if denom.norm() < 1e-14 {
            return Err(Error::ParameterPole(c.re));
        }
        term *= (a + kf) * (b + kf) / (denom * (kf + 1.0)) * z;
        sum += term;
    }
    Ok(sum)
}

/// Gauss summation F(a,b;c;1) = Γ(c)Γ(c−a−b)/(Γ(c−a)Γ(c−b)).
fn gauss_sum_at_one(a: Complex64, b: Complex64, c: Complex64) -> Result<Complex64> {
    if is_real_nonpositive_integer(c - a).is_some() || is_real_nonpositive_integer(c - b).is_some()
    {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let ln = log_gamma(c)? + log_gamma(c - a - b)? - log_gamma(c - a)? - log_gamma(c - b)?;
    Ok(ln.exp())
}

/// 1−z connection for z ∈ (1/2, 1).
fn connection_near_one(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let s = c - a - b;
    // Integer c−a−b (within 1e-9) needs the degenerate formulas.
    if s.im.abs() <= 1e-9 && (s.re - s.re.round()).abs() <= 1e-9 {
        let m = s.re.round() as i64;
        if m < 0 {
            // Euler transform flips the sign of c−a−b; the transformed
            // series then falls in the nonnegative-integer case below.
            // Route through the dispatcher: c−a or c−b may be a nonpositive
            // integer, making the transformed series terminate.
            let f = hyp2f1_c(c - a, c - b, c, z)?;
            return Ok((s * (1.0 - z).ln()).exp() * f);
        }
        return log_case(a, b, c, z, m as usize);
    }

    // Generic two-term connection (valid since ±s are not integers):
    // F = Γ(c)Γ(s)/(Γ(c−a)Γ(c−b)) F(a,b;1−s;1−z)
    //   + (1−z)^s Γ(c)Γ(−s)/(Γ(a)Γ(b)) F(c−a,c−b;1+s;1−z)
    let w = 1.0 - z;
    let lnw = w.ln();
    let one = Complex64::new(1.0, 0.0);
    let lg_c = log_gamma(c)?;

    let first = if is_real_nonpositive_integer(c - a).is_some()
        || is_real_nonpositive_integer(c - b).is_some()
    {
        Complex64::new(0.0, 0.0)
    } else {
        let coef = (lg_c + log_gamma(s)? - log_gamma(c - a)? - log_gamma(c - b)?).exp();
        coef * hyp2f1_c(a, b, one - s, w)?
    };
    let second = if is_real_nonpositive_integer(a).is_some()
        || is_real_nonpositive_integer(b).is_some()
    {
        Complex64::new(0.0, 0.0)
    } else {
        let coef = (lg_c + log_gamma(-s)? - log_gamma(a)? - log_gamma(b)? + s * lnw).exp();
        coef * hyp2f1_c(c - a, c - b, one + s, w)?
    };
    Ok(first + second)
}

/// Degenerate connection for c − a − b = m ∈ {0, 1, 2, …}:
///
/// F(a,b;a+b+m;z) = Γ(m)Γ(c)/(Γ(a+m)Γ(b+m)) Σ_{k<m} (a)_k(b)_k/(k!(1−m)_k) w^k
///   − (−1)^m Γ(c)/(Γ(a)Γ(b)) w^m Σ_{k≥0} (a+m)_k(b+m)_k/(k!(k+m)!) w^k
///       × [ln w − ψ(k+1) − ψ(k+m+1) + ψ(a+k+m) + ψ(b+k+m)],  w = 1−z.
fn log_case(a: Complex64, b: Complex64, c: Complex64, z: f64, m: usize) -> Result<Complex64> {
    let w = 1.0 - z;
    let lnw = w.ln();
    let mf = m as f64;
    let lg_c = log_gamma(c)?;

    let mut finite = Complex64::new(0.0, 0.0);
    if m >= 1 {
        let coef = (lg_c + log_gamma(Complex64::new(mf, 0.0))?
            - log_gamma(a + mf)?
            - log_gamma(b + mf)?)
        .exp();
        // Σ_{k=0}^{m-1} (a)_k (b)_k / (k! (1−m)_k) w^k
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 0..m - 1 {
            let kf = k as f64;
            term *= (a + kf) * (b + kf) / ((kf + 1.0) * (1.0 - mf + kf)) * w;
            sum += term;
        }
        finite = coef * sum;
    }

    // 1/(Γ(a)Γ(b)) kills the infinite series when a or b is a nonpositive
    // integer (the finite sum above is then the whole function).
    if is_real_nonpositive_integer(a).is_some() || is_real_nonpositive_integer(b).is_some() {
        return Ok(finite);
    }
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let coef = sign * (lg_c - log_gamma(a)? - log_gamma(b)? + mf * Complex64::new(lnw, 0.0)).exp();

    // factor_k = (a+m)_k (b+m)_k / (k! (k+m)!); bracket carries the digammas.
    let ln_m_fact: f64 = (1..=m).map(|j| (j as f64).ln()).sum();
    let mut factor = Complex64::new((-ln_m_fact).exp(), 0.0);
    let mut psi_k1 = digamma_c(Complex64::new(1.0, 0.0));
    let mut psi_km1 = digamma_c(Complex64::new(mf + 1.0, 0.0));
    let mut psi_a = digamma_c(a + mf);
    let mut psi_b = digamma_c(b + mf);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut calm = 0u32;
    for k in 0..MAX_TERMS {
        let bracket = lnw - psi_k1 - psi_km1 + psi_a + psi_b;
        let term = factor * bracket;
        sum += term;
        if term.norm() <= TERM_EPS * sum.norm().max(1e-300) {
            calm += 1;
            if calm >= 3 {
                return Ok(finite - coef * sum);
            }
        } else {
            calm = 0;
        }
        let kf = k as f64;
        factor *= (a + mf + kf) * (b + mf + kf) / ((kf + 1.0) * (kf + mf + 1.0)) * w;
        psi_k1 += 1.0 / (kf + 1.0);
        psi_km1 += 1.0 / (kf + mf + 1.0);
        psi_a += 1.0 / (a + mf + kf);
        psi_b += 1.0 / (b + mf + kf);
    }
    Err(Error::NoConvergence { terms: MAX_TERMS, last_rel: factor.norm() })
}

/// Connection at infinity (valid away from b − a ∈ ℤ):
///
/// F(a,b;c;z) = Γ(c)Γ(b−a)/(Γ(b)Γ(c−a)) (−z)^{−a} F(a, 1−c+a; 1−b+a; 1/z)
///            + Γ(c)Γ(a−b)/(Γ(a)Γ(c−b)) (−z)^{−b} F(b, 1−c+b; 1−a+b; 1/z);
///
/// the inner arguments satisfy |1/z| < 10⁻⁶, so the direct series finishes
/// in a handful of terms.
fn infinity_connection(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let ln_mz = (-z).ln();
    let inv = 1.0 / z;
    let one = Complex64::new(1.0, 0.0);
    let lg_c = log_gamma(c)?;
    let mut total = Complex64::new(0.0, 0.0);
    for &(p, q) in &[(a, b), (b, a)] {
        // 1/Γ(c−p) zeroes the term when c − p is a nonpositive integer
        if is_real_nonpositive_integer(c - p).is_some() {
            continue;
        }
        let coef = (lg_c + log_gamma(q - p)? - log_gamma(q)? - log_gamma(c - p)? - p * ln_mz).exp();
        total += coef * hyp2f1_c(p, one - c + p, one - q + p, inv)?;
    }
    Ok(total)
}

/// Euler integral representation, used for extremely negative z:
///
/// F(a,b;c;z) = Γ(c)/(Γ(b)Γ(c−b)) ∫₀¹ t^{b−1}(1−t)^{c−b−1}(1−zt)^{−a} dt,
///
/// valid for Re b > 0, Re(c−b) > 0 (swapping a and b if only the swap
/// satisfies that). The substitution t = u² tames the t^{b−1} endpoint.
fn euler_integral(a: Complex64, b: Complex64, c: Complex64, z: f64) -> Result<Complex64> {
    let (a, b) = if b.re > 0.0 && (c - b).re > 0.0 {
        (a, b)
    } else if a.re > 0.0 && (c - a).re > 0.0 {
        (b, a)
    } else {
        return Err(Error::Domain(format!(
            "no Euler-integral parameter ordering for a={a}, b={b}, c={c}"
        )));
    };
    let integrand = move |u: f64| -> Complex64 {
        if u <= 0.0 || u >= 1.0 {
            return Complex64::new(0.0, 0.0);
        }
        let t = u * u;
        let ln_t = 2.0 * u.ln();
        let ln_1mt = (1.0 - t).ln();
        let ln_1mzt = (1.0 - z * t).ln();
        2.0 * u * ((b - 1.0) * ln_t + (c - b - 1.0) * ln_1mt - a * ln_1mzt).exp()
    };
    let real = crate::quad::integrate(|u| integrand(u).re, 0.0, 1.0, 1e-13, 1e-11, 400_000)?;
    let imag = crate::quad::integrate(|u| integrand(u).im, 0.0, 1.0, 1e-13, 1e-11, 400_000)?;
    let coef = (log_gamma(c)? - log_gamma(b)? - log_gamma(c - b)?).exp();
    Ok(coef * Complex64::new(real.value, imag.value))
}

/// Digamma for complex argument (recurrence into Re z ≥ 8, then the
/// Stirling-type series; reflection for Re z < 0).
fn digamma_c(z: Complex64) -> Complex64 {
    let pi = std::f64::consts::PI;
    if z.re < 0.0 {
        let piz = pi * z;
        return digamma_c(1.0 - z) - pi * piz.cos() / piz.sin();
    }
    let mut z = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while z.re < 8.0 {
        acc -= 1.0 / z;
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let series = inv2
        * (1.0 / 12.0
            - inv2
                * (1.0 / 120.0
                    - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    acc + z.ln() - 0.5 / z - series
}
