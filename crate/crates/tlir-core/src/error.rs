//! Error type shared across the crate.

/// Errors reported by graph construction, verifiers, oracles, and the
/// constructive algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Malformed input: unknown vertex, self-loop, duplicate element, bad
    /// parameter, and similar caller mistakes.
    #[error("input error: {0}")]
    Input(String),

    /// The graph handed to a class-specific algorithm is not in the class the
    /// algorithm is defined for (or fails a documented screening test).
    #[error("class precondition violated: {0}")]
    ClassPrecondition(String),

    /// A precondition on a coloring argument does not hold (partial where a
    /// total coloring is required, improper where properness is required, ...).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An exhaustive search proved that no coloring with the requested palette
    /// exists.
    #[error("no coloring: {0}")]
    NoColoring(String),

    /// A search gave up because its node or time budget ran out; the answer is
    /// unknown rather than negative.
    #[error("search budget exhausted: {0}")]
    BudgetExhausted(String),

    /// A step that is guaranteed to succeed for inputs in the algorithm's class
    /// failed; this indicates a bug or an out-of-class input that slipped past
    /// the precondition checks.
    #[error("internal invariant failed: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
