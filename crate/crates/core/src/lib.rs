//! Spectral simulation and exterior-control synthesis for the space-time
//! fractional diffusion equation
//!
//! ```text
//! D_t^α u + (-Δ)^s u = 0   in (0, T) × Ω,
//!                   u = g   in (0, T) × (ℝ \ Ω),
//!              u(0) = u_0   in Ω,
//! ```
//!
//! on an interval `Ω`, with the control `g` supported in an exterior set `O`.
//!
//! The crate is organised bottom-up:
//!
//! * [`special_fn`]: Gamma and Mittag-Leffler functions, the relaxation
//!   kernels, and discrete fractional integrals/derivatives;
//! * [`nonlocal`]: finite elements for the fractional Laplacian, the nonlocal
//!   normal derivative and the harmonic extension of exterior data;
//! * [`spectral`]: the Dirichlet eigenbasis, fractional powers and exterior
//!   traces of eigenfunctions;
//! * [`evolution`]: forward and adjoint solution series and the duality gap;
//! * [`control`]: the control-to-state input map, regularised synthesis and
//!   the unique-continuation probe.

pub mod control;
pub mod error;
pub mod evolution;
pub mod io;
pub mod nonlocal;
pub mod quad;
pub mod special_fn;
pub mod spectral;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/mittag_leffler.md")]
    mod mittag_leffler {}
    #[doc = include_str!("../../../book/src/fractional_calculus.md")]
    mod fractional_calculus {}
    #[doc = include_str!("../../../book/src/fractional_laplacian.md")]
    mod fractional_laplacian {}
    #[doc = include_str!("../../../book/src/spectral.md")]
    mod spectral {}
    #[doc = include_str!("../../../book/src/evolution.md")]
    mod evolution {}
    #[doc = include_str!("../../../book/src/control.md")]
    mod control {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
