use thiserror::Error;

/// Errors reported by the exact-arithmetic and deformation pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A zero denominator was supplied for a rational number.
    #[error("zero denominator")]
    ZeroDenominator,

    /// A rational literal could not be parsed.
    #[error("cannot parse `{0}` as a rational (expected `p` or `p/q`)")]
    ParseRational(String),

    /// Matrix entry data does not match the declared shape.
    #[error("matrix shape {rows}x{cols} needs {expected} entries, got {got}")]
    BadMatrixShape {
        rows: usize,
        cols: usize,
        expected: usize,
        got: usize,
    },

    /// A span matrix has the wrong number of columns for its ambient space.
    #[error("span has {got} columns but the ambient space has dimension {expected}")]
    AmbientMismatch { expected: usize, got: usize },

    /// The zero vector does not name a subgroup direction.
    #[error("(0,0) does not name a one-parameter subgroup")]
    ZeroDirection,

    /// A curve with trivial tangent character has no pointwise stabilizer line.
    #[error("zero tangent character has no primitive annihilator")]
    ZeroCharacter,

    /// A cohomology degree outside the dimension of the variety.
    #[error("cohomology degree {got} out of range (max {max})")]
    BadCohomologyDegree { got: u8, max: u8 },

    /// The parameter list does not define a valid configuration.
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    /// The span of the symmetry-algebra image dropped below full rank.
    #[error("degenerate configuration: image rank {rank} < 5")]
    DegenerateConfiguration { rank: usize },

    /// An operation requires more projective-plane summands than supplied.
    #[error("n = {n} is too small here (need n >= {min})")]
    NTooSmall { n: usize, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
