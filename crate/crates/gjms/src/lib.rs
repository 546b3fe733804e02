//! Numerical toolkit for the fractional conformally covariant operators
//! P_γ and P̃_γ on hyperbolic space ℍⁿ.
//!
//! The crate evaluates, in plain double precision:
//!
//! * the special functions everything else is built from — complex log-gamma,
//!   squared gamma moduli |Γ(a+iλ)|², Pochhammer symbols, the Gauss
//!   hypergeometric function for real argument below 1 and associated
//!   Legendre functions on (1, ∞) ([`special`]);
//! * the spectral symbols of P_γ and P̃_γ, their bottom-of-spectrum
//!   constants, and the margin functions of the gamma-ratio inequalities
//!   that drive the sharp-constant arguments ([`symbols`]);
//! * the radial Green's kernels K_{ν,γ} and H_{ν,γ} on ℍⁿ together with the
//!   Euclidean fractional Green's functions on the unit ball and the upper
//!   half-space, related to the hyperbolic kernels by explicit conformal
//!   factors ([`kernels`]);
//! * the radial Helgason–Fourier transform, Harish-Chandra c-function and
//!   spherical functions, with closed-form transforms of both kernels
//!   ([`helgason`]);
//! * the sharp Sobolev, Hardy–Littlewood–Sobolev and Adams constants and
//!   the exact duality relation linking the first two ([`constants`]);
//! * an independent oracle for the P_γ symbol obtained by integrating the
//!   scattering ODE on the conformally compact extension and reading the
//!   symbol off the boundary expansion — no gamma functions involved
//!   ([`scattering`]).
//!
//! All public functions are pure and safe to call from multiple threads.

pub mod constants;
mod error;
pub mod helgason;
pub mod kernels;
pub mod quad;
pub mod scattering;
pub mod special;
pub mod symbols;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
