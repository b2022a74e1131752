use thiserror::Error;

/// Errors raised while reading Gauss codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussCodeError {
    #[error("malformed token {token:?} at position {position}")]
    MalformedToken { position: usize, token: String },
    #[error("crossing {id} has role {role} twice (second at position {position})")]
    DuplicateRole { id: u32, role: char, position: usize },
    #[error("crossing {id}: sign at position {position} disagrees with its partner")]
    SignMismatch { id: u32, position: usize },
    #[error("odd number of tokens ({0})")]
    OddTokenCount(usize),
    #[error("crossing {id} appears only once")]
    MissingPartner { id: u32 },
    #[error("chord {id} appears {count} times")]
    BadChordMultiplicity { id: u32, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} at index {index} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, index: usize, strands: usize },
    #[error("braid closure has {0} components, expected a knot")]
    NotAKnot(usize),
    #[error("rule {rule} is not applicable at site {site}")]
    Inapplicable { rule: &'static str, site: usize },
    #[error("malformed braid: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("arc index {arc} out of range (diagram has {arcs} arcs)")]
    ArcOutOfRange { arc: usize, arcs: usize },
    #[error("arcs {0} and {1} lie on the same edge")]
    SameEdge(usize, usize),
    #[error("arcs {0} and {1} do not bound a common face")]
    NoCommonFace(usize, usize),
    #[error("crossing {0} is not removable by this move")]
    NotRemovable(u32),
    #[error("unknown crossing {0}")]
    UnknownCrossing(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChordError {
    #[error("malformed involution: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("order mismatch: weight system has order {expected}, diagram has order {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("weight system {name} is nonzero ({value}) on the excluded diagram {diagram}")]
    ConstraintViolation { name: String, value: String, diagram: String },
    #[error("weight system {name} violates {count} relations")]
    NotAWeightSystem { name: String, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
