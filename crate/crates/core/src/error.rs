use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("matrix entries must be finite")]
    NonFiniteEntries,
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },
    #[error("matrix set needs at least one generator")]
    EmptySet,
    #[error("invalid multi-index: {0}")]
    InvalidMultiIndex(String),
    #[error("point is not on the manifold (distance {dist:.3e} exceeds tolerance)")]
    NotOnManifold { dist: f64 },
    #[error("no chart contains the point; the atlas does not cover it")]
    NoChart,
    #[error("unknown built-in manifold {0:?}")]
    UnknownManifold(String),
    #[error("every sampled point failed the differentiability test")]
    DegenerateSample,
    #[error("radius {t} is outside the field's domain of definition (cap {cap})")]
    OutsideCap { t: f64, cap: f64 },
    #[error("inverse-norm precondition violated: |S(x)^-1| = {inv_norm:.6} is not below lambda = {lambda:.6}")]
    PreconditionViolated { inv_norm: f64, lambda: f64 },
    #[error("sample point admits no admissible chart/selector pair")]
    InadmissibleSample,
    #[error("partial Jacobian is not invertible within the required bound")]
    CqFailure,
    #[error("no column selection yields an invertible square block")]
    CqViolated,
    #[error("solver diverged after {0} iterations")]
    Diverged(usize),
    #[error("query point is outside the certified domain (|y - y0| = {dist:.3e} >= {radius:.3e})")]
    OutOfDomain { dist: f64, radius: f64 },
    #[error("feasible set is empty at the sampled parameter")]
    EmptyFeasibleSet,
    #[error("tracked point drifted off the constraint (violation {0:.3e})")]
    ConstraintDrift(f64),
    #[error("point cloud is empty")]
    EmptyCloud,
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("scenario {scenario:?} does not provide the data needed by {what}")]
    ScenarioUnsupported { scenario: String, what: String },
}

pub type Result<T> = std::result::Result<T, Error>;
