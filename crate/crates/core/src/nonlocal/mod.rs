//! The fractional Laplacian on an interval: finite-element assembly, the
//! nonlocal normal derivative and the harmonic extension of exterior data.

mod assembly;
mod domain;
mod extension;
mod mesh;
mod normal;

pub use assembly::{
    assemble_mass, assemble_stiffness, assemble_stiffness_with, normalization_constant,
    AssemblyOptions, StiffnessMatrix,
};
pub use domain::{DomainSpec, Interval, DEFAULT_PADDING};
pub use extension::{harmonic_extension, HarmonicExtension};
pub use mesh::Mesh;
pub use normal::{
    nonlocal_normal_derivative, nonlocal_normal_derivative_with, NormalFunctional, NormalOptions,
};

