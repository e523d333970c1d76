use thiserror::Error;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("order of zero undefined")]
    ZeroPolynomial,
    #[error("substitution image count {got} does not match variable count {expected}")]
    ImageCountMismatch { expected: usize, got: usize },
    #[error("divisor not monic in selected variable")]
    NotMonic,
    #[error("weight entries must have gcd 1, got {0}")]
    WeightNotPrimitive(String),
    #[error("weight length {got} does not match dimension {expected}")]
    WeightLengthMismatch { expected: usize, got: usize },
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error("ideal factor must vanish at the origin (generator has a constant term)")]
    FactorNotAtOrigin,
    #[error("plan is empty")]
    EmptyPlan,
    #[error("first step of a plan must be centered at the origin")]
    FirstStepNotOrigin,
    #[error("center does not lie on the current exceptional divisor: {0}")]
    CenterOffExceptional(String),
    #[error(
        "closed point center lies on a coordinate hyperplane of the exceptional \
         weighted projective plane; admissible centers avoid the coordinate locus, \
         where the chart may be singular"
    )]
    CenterOnCoordinateHyperplane,
    #[error("curve center {0}")]
    BadCurveCenter(String),
    #[error(
        "cannot continue the chart after a weighted blow-up at a curve whose equation \
         is not linear in its monic variable; such a step must be the last of the plan"
    )]
    NonLinearCurveChart,
    #[error("restriction vanishes identically")]
    RestrictionVanishes,
    #[error("weight is not standard (expected v1 = v2 <= v3): {0}")]
    NotStandardWeight(String),
    #[error("point does not lie on the given curve")]
    PointNotOnCurve,
    #[error("point lies on a coordinate plane")]
    PointOnCoordinatePlane,
    #[error("form is not weighted homogeneous")]
    NotWeightedHomogeneous,
    #[error("dimension {0} not supported (expected 2 or 3)")]
    UnsupportedDimension(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
