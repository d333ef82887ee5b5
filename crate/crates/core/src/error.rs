use thiserror::Error;

/// Every failure the library reports. Variants carry the measured quantity
/// that tripped the check so callers can log it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("coefficients do not admit the multiplicity structure (residual {residual:.3e})")]
    StructureMismatch { residual: f64 },
    #[error("two distinct zeros collapsed (distance {distance:.3e})")]
    Degenerate { distance: f64 },
    #[error("zeros collide (distance {distance:.3e})")]
    Collision { distance: f64 },
    #[error("ydot violates the multiple-zero constraints (residual {residual:.3e})")]
    InconsistentYdot { residual: f64 },
    #[error("complementary minor is singular (reciprocal condition {rcond:.3e})")]
    SingularMinor { rcond: f64 },
    #[error("Landen recursion did not converge for this modulus")]
    ModulusSingular,
    #[error("repeated root in partial fractions (distance {distance:.3e})")]
    RepeatedRoot { distance: f64 },
    #[error("continuation stalled at t = {t}")]
    ContinuationStall { t: f64 },
    #[error("quadrature did not converge (error estimate {estimate:.3e})")]
    NonConvergent { estimate: f64 },
    #[error("movable singularity near t = {t}")]
    BlowUp { t: f64 },
    #[error("no elliptic branch reproduces the initial data (residual {residual:.3e})")]
    NoConsistentBranch { residual: f64 },
    #[error("right-hand side singular: factor {factor} vanishes")]
    SingularPoint { factor: String },
    #[error("branch tracking ambiguous at t = {t}")]
    RecoveryBranchLoss { t: f64 },
    #[error("no elimination root reproduces the coefficient pair")]
    NoRealizableRoot,
    #[error("step size collapsed after t = {t}")]
    StepCollapse { t: f64 },
    #[error("linear reshuffle has vanishing determinant")]
    SingularTransform,
    #[error("system is not reducible to the canonical form (residual {residual:.3e})")]
    NotReducible { residual: f64 },
    #[error("quadratic forms are proportional")]
    DegenerateForms,
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("unknown model {0}")]
    UnknownModel(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for the failures that mean "the trajectory hit a singular configuration".
    pub fn is_singularity(&self) -> bool {
        matches!(
            self,
            Error::Collision { .. }
                | Error::BlowUp { .. }
                | Error::SingularPoint { .. }
                | Error::StepCollapse { .. }
                | Error::SingularMinor { .. }
                | Error::RecoveryBranchLoss { .. }
                | Error::ContinuationStall { .. }
                | Error::Degenerate { .. }
        )
    }
}
