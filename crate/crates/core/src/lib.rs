//! Certified enumeration of the equilibria of the rank-one coupled Kuramoto
//! model `ω_ν = (1/n) Σ_μ k_ν k_μ sin(θ_ν − θ_μ)`.
//!
//! Each equilibrium is found as a positive root `R` of one of `2ⁿ` scalar
//! conjugate functions `f_σ`; roots are enclosed by an interval Newton search
//! and patterns that cannot have roots are pruned beforehand.

pub mod conjugate;
pub mod counting;
pub mod error;
pub mod fixtures;
pub mod interval;
pub mod model;
pub mod oracle;
pub mod prune;
pub mod solver;

pub use conjugate::SignPattern;
pub use error::{Error, Result};
pub use interval::Interval;
pub use model::{Equilibrium, ModelInput, NormalizedModel, DEFAULT_SUM_TOL};
pub use solver::{solve, Algorithm, SolveReport, SolverConfig};
