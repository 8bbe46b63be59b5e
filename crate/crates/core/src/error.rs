use thiserror::Error;

use crate::chromatic::CliqueCertificate;
use crate::gallai::RainbowTriangle;
use crate::search::SearchResult;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header, expected \"n r G\" or \"n r T\"")]
    MalformedHeader,
    #[error("missing header line")]
    MissingHeader,
    #[error("malformed edge line")]
    MalformedEdge,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("edge endpoints must satisfy i < j, got {0} {1}")]
    UnorderedPair(usize, usize),
    #[error("pair {0} {1} listed twice")]
    DuplicatePair(usize, usize),
    #[error("pair {0} {1} missing")]
    MissingPair(usize, usize),
    #[error("color {0} out of range 1..={1}")]
    ColorOutOfRange(u64, u8),
    #[error("bad direction token {0:?}, expected \"+\" or \"-\"")]
    BadDirection(String),
    #[error("direction field not allowed for a colored complete graph")]
    UnexpectedDirection,
    #[error("invalid instance parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("coloring contains a rainbow triangle {0}")]
    RainbowTriangle(RainbowTriangle),

    #[error("chromatic search exceeded its node budget (bounds {lower}..={upper})")]
    ChromaticBudgetExceeded { lower: usize, upper: usize },

    #[error("clique search exceeded its node budget (best clique found has size {})", best.len())]
    CliqueBudgetExceeded { best: CliqueCertificate },

    #[error("coloring search exceeded its budget after {} colorings (upper bound {})", partial.colorings_examined, partial.f_value)]
    SearchBudgetExceeded { partial: Box<SearchResult> },

    #[error("instance with {n} vertices exceeds the exact-path limit of {limit} and is not transitive")]
    PathLimitExceeded { n: usize, limit: usize },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_budget_exceeded(&self) -> bool {
        matches!(
            self,
            Error::ChromaticBudgetExceeded { .. }
                | Error::CliqueBudgetExceeded { .. }
                | Error::SearchBudgetExceeded { .. }
        )
    }
}
