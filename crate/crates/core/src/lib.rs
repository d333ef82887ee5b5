//! Time-dependent polynomials with multiple zeros and the planar ODE systems
//! they make solvable.

pub mod catalog;
pub mod cli;
pub mod complex;
pub mod config;
pub mod engine;
pub mod error;
pub mod extensions;
pub mod identities;
pub mod ode;
pub mod polynomials;
pub mod solvers;
pub mod specfun;

pub use config::Tolerances;
pub use error::{Error, Result};
