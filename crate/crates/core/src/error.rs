//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("braid letter 0 is not a generator")]
    ZeroLetter,
    #[error("letter {letter} is out of range for a braid on {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("braid groups need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("cannot parse braid letter {0:?}")]
    BadLetter(String),
    #[error("cannot parse rational number {0:?}")]
    BadRational(String),
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NonSquareMatrix { rows: usize, cols: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    NonSymmetricMatrix(usize, usize),
    #[error("diagram has {crossings} crossings, above the configured limit {limit}")]
    CrossingLimitExceeded { crossings: usize, limit: usize },
    #[error("canonical classes are degenerate in homology; the complex is inconsistent")]
    DegenerateHomology,
    #[error("{0} has the wrong parity: the formula needs {1} strand counts")]
    ParityMismatch(i64, &'static str),
    #[error("defect must be positive, got {0}")]
    NonPositiveDefect(String),
    #[error("epsilon must lie strictly between 0 and 1/2")]
    BadEpsilon,
    #[error("chord length {chord} at time {t} is not below epsilon {epsilon}; knot type is ambiguous")]
    ChordTooLong { t: f64, chord: f64, epsilon: f64 },
    #[error("windings ({p}, {q}) are not coprime; the closed orbit is a link, not a knot")]
    NotCoprime { p: i64, q: i64 },
}
