//! Special-function layer: complex log-gamma, squared gamma moduli,
//! Pochhammer symbols, the Gauss hypergeometric function for real argument
//! below 1, and associated Legendre functions of the first kind on (1, ∞).
//!
//! Everything is double precision and self-contained; the hypergeometric
//! evaluation switches between the direct series, the Pfaff transformation
//! and the 1−z connection formulas (including their logarithmic degenerate
//! case) so that arguments approaching 1 stay accurate.

mod gamma;
mod hyp2f1;
mod legendre;

pub use gamma::{
    abs_gamma_sq, digamma, ln_abs_gamma_sq, ln_gamma, ln_sinh, log_gamma, pochhammer,
    recip_abs_gamma_sq,
};
pub use hyp2f1::hyp2f1;
pub use legendre::legendre_p;
