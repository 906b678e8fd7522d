use thiserror::Error;

use crate::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    #[error("k = {k} does not divide v*r = {v}*{r}; no integral line count")]
    NonIntegralLineCount { k: usize, r: usize, v: usize },

    #[error("point {point} is out of range for v = {v}")]
    PointOutOfRange { point: u64, v: usize },

    #[error("step {step} does not divide modulus {v}")]
    StepNotDividingV { step: usize, v: usize },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: expected {expected} entries, found {found}")]
    ArityMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("line {points:?} repeats a point")]
    RepeatedPoint { points: Vec<Point> },

    #[error("pair {{{}, {}}} lies on line #{first} and line #{second}", pair.0, pair.1)]
    PairCoveredTwice {
        pair: (Point, Point),
        first: usize,
        second: usize,
    },

    #[error("not admissible: {0}")]
    Inadmissible(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(usize),

    #[error("no field table for order {0} (largest supported order is 49)")]
    FieldTooLarge(usize),

    #[error("at most {max} mutually orthogonal Latin squares of side {q}, asked for {t}")]
    TooManySquares { q: usize, t: usize, max: usize },

    #[error("no construction available: {0}")]
    NoConstructionAvailable(String),

    #[error("hill climbing exhausted after {attempts} attempts")]
    ClimbFailed { attempts: usize },

    #[error("geometry fails the axioms: {0}")]
    NotValidGeometry(String),

    #[error(
        "line split mismatch on a girth >= 5 geometry: b_opp = {b_opp} (expected {expected_opp}), \
         b_non_opp = {b_non_opp} (expected {expected_non_opp})"
    )]
    SplitMismatch {
        b_opp: usize,
        expected_opp: usize,
        b_non_opp: usize,
        expected_non_opp: i64,
    },

    #[error("forbidden opposite-design overlap |N({x}) & N({y})| = {size}")]
    ForbiddenOverlap { x: Point, y: Point, size: usize },

    #[error("point {point} has distance-3 degree {degree}, expected {relation} {bound}")]
    DegreeBoundViolated {
        point: Point,
        degree: usize,
        bound: i64,
        relation: &'static str,
    },

    #[error("distance-3 neighbourhood of point {point} is not partitioned by non-opposite lines")]
    PartitionFailed { point: Point },

    #[error("invalid plan: {0}")]
    PlanInvalid(String),

    #[error("invalid ingredient: {0}")]
    IngredientInvalid(String),

    #[error("constructed geometry failed verification: {0}")]
    ResultFailedVerification(String),

    #[error("tripling needs block size 3, got {k}")]
    NotBlockSize3 { k: usize },

    #[error("missing ingredient: {0}")]
    NoIngredient(String),

    #[error("unsuitable seed graph: {0}")]
    BadSeedGraph(String),

    #[error("{missing} non-opposite lines of size {k} would need to be found; only k = 3 can be completed")]
    CompletionUnsupported { k: usize, missing: usize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("unreachable: {0}")]
    Unreachable(String),

    #[error("malformed input: {0}")]
    Format(String),
}
