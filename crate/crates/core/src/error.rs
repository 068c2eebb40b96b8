use alloc::string::String;

/// Malformed polynomial text, with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {reason}")]
pub struct ParseError {
    pub position: usize,
    pub reason: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor leading coefficient must be +1 or -1")]
    NonUnitLeadingCoefficient,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("residues live in different rings (Phi_{left} vs Phi_{right})")]
    ModulusMismatch { left: usize, right: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error(
        "bound {bound} exceeds the soft limit {limit} for {claim}; pass an override to run anyway"
    )]
    BoundTooLarge {
        claim: &'static str,
        bound: u64,
        limit: u64,
    },
    #[error("bad instance parameters: {0}")]
    BadInstance(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
