use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("a half of the bimatching is not noncrossing ({0} half)")]
    CrossingHalf(&'static str),
    #[error("pair {pair:?} crosses {count} pairs of the opposite parity")]
    ExcessCrossings { pair: (usize, usize), count: usize },
    #[error("partition is not noncrossing")]
    NotNoncrossing,
    #[error("block {0:?} leaves a gap whose size is not divisible by 4")]
    BadBlockResidues([usize; 4]),
    #[error("matching has no outer pair {{0, {0}}}")]
    MissingOuterPair(usize),
    #[error("order {order} exceeds the enumeration limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("matching {index} of the necklace is not noncrossing")]
    CrossingMatching { index: usize },
    #[error("bad transition from matching {index} to the next")]
    BadTransition { index: usize },
    #[error("necklace has {got} matchings, expected {expected}")]
    WrongLength { got: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CurveError {
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("root finder did not converge after {restarts} restarts")]
    NoConvergence { restarts: usize },
    #[error("polynomial has a repeated root; every C_θ is singular")]
    Degenerate,
    #[error("angle {theta} is within {margin} of the singular angle {singular}")]
    SingularTheta { theta: f64, singular: f64, margin: f64 },
    #[error("no certified radius found after {doublings} doublings")]
    RadiusSearchFailed { doublings: usize },
    #[error("boundary bracket lost at radius {radius}")]
    BracketLost { radius: f64 },
    #[error("trace passed within {distance:e} of a critical point")]
    NearSingular { distance: f64 },
    #[error("trace exceeded {0} steps")]
    StepLimit(usize),
    #[error("trace from label {start} left the disk at angle {angle}, away from every boundary point")]
    ExitMismatch { start: usize, angle: f64 },
    #[error("traced components are inconsistent: {0}")]
    InconsistentTrace(String),
    #[error("traced pairs do not form a basketball: {0}")]
    NotABasketball(CombinatoricsError),
    #[error("traced pairs do not form a valid necklace: {0}")]
    NotANecklace(CombinatoricsError),
    #[error("necklace is degenerate: {0}")]
    NecklaceDegenerate(String),
    #[error("angles must satisfy 0 <= alpha < beta < pi (got {alpha}, {beta})")]
    AngleOrder { alpha: f64, beta: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RealizeError {
    #[error("root insertion failed after {doublings} doublings")]
    InsertionFailed { doublings: usize },
    #[error("forward analysis of the realized polynomial disagrees with the target")]
    VerificationFailed,
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
}
