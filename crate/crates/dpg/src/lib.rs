//! Practical DPG solver for the Poisson problem on 2D triangular meshes with
//! 1-irregular hanging nodes and fully discontinuous trace approximation.
//!
//! The crate is organized around the pipeline
//! mesh -> reference bases/quadrature -> element-local DPG systems ->
//! global normal equations -> solve -> error norms and stability diagnostics,
//! with a convergence-study harness on top (see the `dpg` binary).

pub mod dpg_core;
pub mod harness;
pub mod linalg;
pub mod mesh;
pub mod norms_diag;
pub mod polybasis;
pub mod solver;

pub use dpg_core::{Config, DofMap, GlobalSystem, TrialCoefficients};
pub use mesh::Mesh;
