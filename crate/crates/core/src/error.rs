use thiserror::Error;

/// Errors across the geometry and verification APIs.
///
/// Hypothesis refusals (`NotConvexIntegrand`, `HypothesisNotMet`,
/// `NotHemispherical`, `Inconclusive`, `PolarNotHemispherical`) are kept
/// distinct from input errors so callers can map them to different exit
/// codes: a verifier that refuses to run is not a verifier that failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point is too close to the origin to invert or normalize")]
    ZeroPoint,

    #[error("sphere point is not in the open upper hemisphere (w = {w:.3e})")]
    NotInOpenHemisphere { w: f64 },

    #[error("spherical blow-up is undefined within eps of the poles")]
    AtPole,

    #[error("need at least {needed} directions, got {got}")]
    TooFewDirections { needed: usize, got: usize },

    #[error("integrand is not positive: value {value:.6e} at angle {angle:.6}")]
    NotPositive { angle: f64, value: f64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid sample table: {0}")]
    InvalidSamples(String),

    #[error("input points span a degenerate (collinear or empty) configuration")]
    DegenerateInput,

    #[error("convex hull of the sampled points is degenerate")]
    DegenerateHull,

    #[error("half-plane intersection is unbounded")]
    Unbounded,

    #[error("half-plane offsets must be strictly positive (got {0:.3e})")]
    NonPositiveOffset(f64),

    #[error("polygon intersection is empty")]
    EmptyIntersection,

    #[error("origin is not strictly interior to the polygon")]
    OriginNotInterior,

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    #[error("generator set is not contained in any open hemisphere")]
    NotHemispherical,

    #[error("feasibility margin within the degeneracy band; cannot certify either way")]
    Inconclusive,

    #[error("polar set does not fit in an open projection chart")]
    PolarNotHemispherical,

    #[error("integrand fails the convex-integrand hypothesis (worst violation {worst:.3e})")]
    NotConvexIntegrand { worst: f64 },

    #[error("duality hypothesis not met: distance {distance:.3e} exceeds tolerance {tolerance:.3e}")]
    HypothesisNotMet { distance: f64, tolerance: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that mean "the hypothesis of the statement under test
    /// does not hold", as opposed to malformed input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::NotConvexIntegrand { .. }
                | Error::HypothesisNotMet { .. }
                | Error::NotHemispherical
                | Error::Inconclusive
                | Error::PolarNotHemispherical
        )
    }
}
