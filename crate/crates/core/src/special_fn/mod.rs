//! Special functions and discrete fractional-calculus operators.

mod fractional;
mod gamma;
mod grid;
mod kernel;
mod laplace;
mod mittag_leffler;

pub use fractional::{
    caputo_derivative, left_frac_integral, left_frac_integral_weighted, right_frac_integral,
};
pub use gamma::{gamma, ln_gamma_abs, rgamma};
pub use grid::TimeGrid;
pub use kernel::{
    kernel_first_moment, kernel_panel_moments, kernel_primitive, ml_time_kernel, relaxation,
};
pub use laplace::{laplace_closed_form, laplace_transform_residual};
pub use mittag_leffler::{
    decay_constant, mittag_leffler, mittag_leffler_derivative, mittag_leffler_with, MlConfig,
    MlParams, Regime,
};
