//! Crate-wide error type.

use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A numeric parameter is outside its valid range.
    #[error("{name} must be {requirement}, got {value}")]
    InvalidParameter {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },

    /// An input collection that must be non-empty was empty.
    #[error("{0} must not be empty")]
    EmptyInput(&'static str),

    /// An RTT does not quantize to a multiple of the clock's round duration.
    #[error("rtt {rtt}s is not a multiple of the round duration {t_rnd}s; the clock was built from a different RTT set")]
    ClockMismatch { rtt: f64, t_rnd: f64 },

    /// Path list and round clock disagree on the number of sub-flows.
    #[error("{paths} paths but clock has {alphas} multipliers")]
    PathCountMismatch { paths: usize, alphas: usize },

    /// Redundancy below the critical value 1/(1-p); the closed form does not
    /// cover this regime, use the Monte Carlo simulator instead.
    #[error("redundancy {redundancy} for path {path} is below the critical value {critical}; the closed form requires (1-p)R >= 1 -- use the simulator for sub-critical redundancy")]
    SubCriticalRedundancy {
        path: String,
        redundancy: f64,
        critical: f64,
    },

    /// Zero has no multiplicative inverse in the field.
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    /// Payloads within one generation must share the same length.
    #[error("payload length {got} does not match the generation's payload length {expected}")]
    RaggedPayload { expected: usize, got: usize },

    /// A coded packet was offered to a decoder for a different generation.
    #[error("generation mismatch: packet belongs to generation {got}, decoder to {expected}")]
    GenerationMismatch { expected: u32, got: u32 },

    /// Coefficient vector length does not match the decoder's generation size.
    #[error("coefficient vector length {got} does not match generation size {expected}")]
    CoefficientLength { expected: usize, got: usize },

    /// The decoder has not yet collected a full generation's worth of
    /// degrees of freedom.
    #[error("decoder is missing {missing} degrees of freedom")]
    NotReady { missing: usize },

    /// A serialized coded packet was truncated or structurally invalid.
    #[error("malformed coded packet: {0}")]
    MalformedPacket(&'static str),

    /// A trace line could not be parsed.
    #[error("trace line {line}: {message}")]
    TraceParse { line: usize, message: String },

    /// A trace field is outside its valid range.
    #[error("trace line {line}: {field} = {value} is out of range")]
    TraceRange {
        line: usize,
        field: &'static str,
        value: f64,
    },

    /// Timestamps within one network must be strictly increasing.
    #[error("trace line {line}: time {t} is not strictly increasing for network {network}")]
    TraceOrder { line: usize, network: String, t: f64 },

    /// The operation needs a time-aligned (averaged) trace grid.
    #[error("trace series is not aligned on a shared interval grid; run loss averaging first")]
    UnalignedTrace,
}
