use thiserror::Error;

use crate::exact::Int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("gcd of an empty list is undefined")]
    EmptyList,
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("expected {expected} entries, found {found}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("matrix with determinant {0} is not invertible over the integers")]
    NotUnimodular(Int),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("level must be positive, got {0}")]
    NonPositiveLevel(Int),
    #[error("a path needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("index set {first}..={last} must contain 0 and 1")]
    IndexSet { first: i64, last: i64 },
    #[error("vertex {index} is (0,0)")]
    ZeroVertex { index: i64 },
    #[error("vertex {index} = ({a},{b}) has gcd not dividing level {level}")]
    GcdNotDividing { index: i64, a: Int, b: Int, level: Int },
    #[error("pair ({i},{j}): cross minor {found} differs from level {level}")]
    NotAnEdge { i: i64, j: i64, found: Int, level: Int },
    #[error("matrix has determinant {0}, expected 1")]
    NotSl2(Int),
    #[error("path is not minimal")]
    NotMinimal,
    #[error("itinerary and edge give a non-integer vertex at index {index}")]
    InconsistentItinerary { index: i64 },
    #[error("edge index {0} lies outside the itinerary's path")]
    EdgeOutOfRange(i64),
    #[error("cyclic order needs three distinct points")]
    RepeatedPoint,
    #[error("scale factor must be positive, got {0}")]
    NonPositiveScale(Int),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("tiling needs at least 2 rows and 2 columns")]
    TooSmall,
    #[error("rows have unequal lengths")]
    Ragged,
    #[error("index range {first}..={last} must contain 0 and 1")]
    IndexSet { first: i64, last: i64 },
    #[error("2x2 block at ({row},{col}) has determinant {found}, expected {expected}")]
    InconsistentBlock { row: i64, col: i64, expected: Int, found: Int },
    #[error("tiling is not tame")]
    NotTame,
    #[error("tiling has rank {0}, expected at most 2")]
    RankTooLarge(usize),
    #[error("operation requires N != 0")]
    ZeroDeterminant,
    #[error("operation requires N > 0")]
    NonPositiveDeterminant,
    #[error("recurrence coefficient at index {index} is undetermined (all-zero line)")]
    UndeterminedCoefficient { index: i64 },
    #[error("{0} is not a positive perfect square")]
    NotASquare(Int),
    #[error("entry at ({row},{col}) is not divisible by {by}")]
    NotDivisible { row: i64, col: i64, by: Int },
    #[error("parameter {name} must be {requirement}")]
    BadParameter { name: &'static str, requirement: &'static str },
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("width must be at least 3, got {0}")]
    Width(usize),
    #[error("frieze data has the wrong shape")]
    Shape,
    #[error("border violation at row {row}, position {pos}")]
    Border { row: usize, pos: usize },
    #[error("diamond rule fails at ({i},{j}): determinant {found}, expected {expected}")]
    Diamond { i: i64, j: i64, found: Int, expected: Int },
    #[error("entry at row {row}, position {pos} is not positive")]
    NotPositive { row: usize, pos: usize },
    #[error("glide symmetry fails at row {row}, position {pos}")]
    Glide { row: usize, pos: usize },
    #[error("entries have gcd {found}, expected {expected}")]
    Gcd { found: Int, expected: Int },
    #[error("denominator {denom} is not a multiple of gcd {gcd}")]
    DenomGcd { denom: Int, gcd: Int },
    #[error("path is not closed (last vertex must be the negated first vertex)")]
    NotClosed,
    #[error("path is not clockwise")]
    NotClockwise,
    #[error("path is not minimal")]
    NotMinimal,
    #[error("entry {0} is not in (1/N)Z")]
    NotScaled(String),
    #[error("polygon: {0}")]
    Polygon(String),
    #[error("weighted polygon products d*w*w are not all equal")]
    UnequalProducts,
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Path(#[from] PathError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperError {
    #[error("each axis needs at least 2 entries")]
    TooSmall,
    #[error("nested arrays have unequal lengths")]
    Ragged,
    #[error("index range {first}..={last} must contain 0 and 1")]
    IndexSet { first: i64, last: i64 },
    #[error("block at ({i},{j},{k}) has hyperdeterminant {found}, expected {expected}")]
    InconsistentBlock { i: i64, j: i64, k: i64, expected: Int, found: Int },
    #[error("hyperdeterminant is zero")]
    Singular,
    #[error("axis must be 0, 1 or 2")]
    BadAxis,
    #[error("index {0} out of range")]
    OutOfRange(i64),
    #[error("hypertiling is not tame")]
    NotTame,
    #[error("recurrence along axis {axis} inconsistent at index {index}")]
    Recurrence { axis: usize, index: i64 },
    #[error("cube has hyperdeterminant {0}, expected 1")]
    NotUnitDet(Int),
    #[error("matrix triple is not in SL2(Z)^3")]
    NotSl2,
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("field `{0}` is missing or malformed")]
    Field(String),
    #[error("integer in field `{field}` exceeds {limit} digits")]
    TooManyDigits { field: String, limit: usize },
    #[error("csv: {0}")]
    Csv(String),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Frieze(#[from] FriezeError),
    #[error(transparent)]
    Hyper(#[from] HyperError),
}
