//! The one record holding every numerical threshold.
//!
//! Profiles scale the verification thresholds together; the environment
//! variable [`PROFILE_ENV`] picks the default profile for the CLI.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const PROFILE_ENV: &str = "ZERODYN_TOL_PROFILE";

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Minimum distance between distinct zeros, relative to max(1, |x|).
    pub separation: f64,
    /// Reported cluster spread threshold, relative to max(1, |root|).
    pub cluster_radius: f64,
    /// Forward-map residual certifying a multiplicity structure.
    pub structure: f64,
    /// Constraint violation allowed in xdot_from_ydot, relative to |ydot|.
    pub ydot_consistency: f64,
    /// Reciprocal condition number below which a minor counts as singular.
    pub singular_rcond: f64,
    /// Newton residual accepted by the continuation corrector.
    pub newton_residual: f64,
    pub max_halvings: u32,
    /// Landen recursion stops once |k_n| drops below this.
    pub landen_stop: f64,
    pub landen_max_iter: u32,
    /// Relative target for adaptive quadrature.
    pub quadrature: f64,
    /// Below this (times scale) a closed form switches to its limit formula.
    pub switchover: f64,
    /// Initial-data residual a reconstructed branch must meet.
    pub branch_consistency: f64,
    /// Local error per step of the numerical oracle.
    pub ode: f64,
    /// Forward-map residual along analytic trajectories.
    pub recovery: f64,
    /// Catalog printed-vs-rederived match, relative to 1+|printed|.
    pub rhs_match: f64,
    /// Analytic vs oracle trajectory match, relative.
    pub trajectory_match: f64,
    /// Conda residual threshold, relative to the coefficient scale.
    pub conda: f64,
    /// Reduction round trip, relative.
    pub reduction: f64,
    /// Uniform deviation accepted by the period search.
    pub period: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            separation: 1e-9,
            cluster_radius: 1e-6,
            structure: 1e-8,
            ydot_consistency: 1e-9,
            singular_rcond: 1e-13,
            newton_residual: 1e-12,
            max_halvings: 40,
            landen_stop: 1e-15,
            landen_max_iter: 64,
            quadrature: 1e-13,
            switchover: 1e-8,
            branch_consistency: 1e-8,
            ode: 1e-10,
            recovery: 1e-8,
            rhs_match: 1e-9,
            trajectory_match: 1e-7,
            conda: 1e-10,
            reduction: 1e-9,
            period: 1e-6,
        }
    }
}

impl Tolerances {
    /// Named profile: `default`, `strict` (verification thresholds / 10) or
    /// `loose` (verification thresholds x 100).
    pub fn profile(name: &str) -> Result<Self> {
        let base = Tolerances::default();
        let scale = match name {
            "default" => return Ok(base),
            "strict" => 0.1,
            "loose" => 100.0,
            other => return Err(Error::Config(format!("unknown tolerance profile {other:?}"))),
        };
        Ok(base.scale_verification(scale))
    }

    /// Profile named by the environment, falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(PROFILE_ENV) {
            Ok(name) if !name.is_empty() => Self::profile(&name),
            _ => Ok(Self::default()),
        }
    }

    /// Multiply the pass/fail verification thresholds; numerical kernel
    /// settings stay as they are.
    pub fn scale_verification(mut self, factor: f64) -> Self {
        self.rhs_match *= factor;
        self.trajectory_match *= factor;
        self.recovery *= factor;
        self.conda *= factor;
        self.reduction *= factor;
        self.period *= factor;
        self
    }

    /// Force every verification threshold to one value.
    pub fn with_verification(mut self, tol: f64) -> Self {
        self.rhs_match = tol;
        self.trajectory_match = tol;
        self.recovery = tol;
        self.conda = tol;
        self.reduction = tol;
        self.period = tol;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles() {
        assert_eq!(Tolerances::profile("default").unwrap(), Tolerances::default());
        let strict = Tolerances::profile("strict").unwrap();
        assert!((strict.rhs_match - 1e-10).abs() < 1e-20);
        assert_eq!(strict.separation, 1e-9);
        assert!(Tolerances::profile("bogus").is_err());
    }
}
