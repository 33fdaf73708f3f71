use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Formula text failed to parse. `pos` is a byte offset into the input.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A temporal interval with lower bound above its upper bound.
    #[error("interval lower bound exceeds upper: [{lo},{hi}]")]
    Interval { lo: u32, hi: u32 },

    /// Signal data violates a domain invariant (bounds, overlap, non-Boolean value).
    #[error("domain error: {0}")]
    Domain(String),

    /// Two signals with different time kinds or domain ends were combined.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// Query time outside the signal domain.
    #[error("time {t} outside domain [0,{domain_end})")]
    OutOfDomain { t: f64, domain_end: f64 },

    /// Formula refers to a proposition absent from the signal bundle.
    #[error("unknown proposition: {0}")]
    UnknownProposition(String),

    /// Negation above until/since has no dual operator in the grammar.
    #[error("negation above until/since has no positive normal form")]
    UnsupportedNegation,

    /// Quantitative evaluation requires positive normal form.
    #[error("formula is not in positive normal form")]
    NotPnf,

    /// Kernel shape not admissible for the requested evaluation.
    #[error("kernel shape error: {0}")]
    KernelShape(String),

    /// Open modal intervals are not supported by the evaluators.
    #[error("open modal interval unsupported: {0}")]
    OpenIntervalUnsupported(String),

    /// Invalid kernel or run parameter.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
