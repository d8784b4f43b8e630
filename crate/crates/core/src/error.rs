use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("channel count {0} exceeds the supported maximum of {max}", max = crate::word::MAX_CHANNELS)]
    TooManyChannels(usize),

    #[error("channel count must be at least {min}, got {got}")]
    TooFewChannels { min: usize, got: usize },

    #[error("word length {got} does not match expected channel count {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("comparator {top}:{bottom} is degenerate (equal endpoints)")]
    DegenerateComparator { top: usize, bottom: usize },

    #[error("comparator {top}:{bottom} out of range for {n} channels")]
    ChannelOutOfRange { top: usize, bottom: usize, n: usize },

    #[error("channel {channel} used by more than one comparator in a layer")]
    OverlappingComparators { channel: usize },

    #[error("layer index {index} out of range for depth {depth}")]
    LayerOutOfRange { index: usize, depth: usize },

    #[error("comparator {top}:{bottom} not present in layer {layer}")]
    ComparatorNotInLayer { top: usize, bottom: usize, layer: usize },

    #[error("network is not standard (contains reversed comparators)")]
    NotStandard,

    #[error("network is not a sorting network")]
    NotSorting,

    #[error("permutation on {got} channels applied to a network on {expected}")]
    PermutationSizeMismatch { expected: usize, got: usize },

    #[error("not a bijection on 1..={n}: {reason}")]
    InvalidPermutation { n: usize, reason: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{what} is only supported up to n={limit}, got n={n} (use {alternative})")]
    SizeGuard {
        what: &'static str,
        limit: usize,
        n: usize,
        alternative: &'static str,
    },

    #[error("first layer is not maximal on {n} channels")]
    FirstLayerNotMaximal { n: usize },

    #[error("{0} requires a power-of-two channel count, got {1}")]
    NotPowerOfTwo(&'static str, usize),

    #[error("invalid encoding options: {0}")]
    InvalidOptions(String),

    #[error("prefix depth {prefix} exceeds target depth {target}")]
    PrefixTooDeep { prefix: usize, target: usize },

    #[error("model leaves variable {0} unassigned")]
    UnassignedVariable(i32),

    #[error("decoded layer {layer} has overlapping comparators (encoder `once` violated)")]
    InvalidModel { layer: usize },

    #[error("solver error: {0}")]
    Solver(String),

    #[error("witness verification failed: solver model does not yield a sorting network")]
    WitnessVerification,

    #[error("journal mismatch: {0}")]
    Journal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse_at(text: &str, offset: usize, message: impl Into<String>) -> Self {
        let mut line = 1;
        let mut column = 1;
        for (idx, ch) in text.char_indices() {
            if idx >= offset {
                break;
            }
            if ch == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
