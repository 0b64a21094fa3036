use alloc::string::String;
use core::fmt;

/// Errors raised when a precondition of the sorting algorithms is violated.
///
/// After an error the slice still holds a permutation of the input for the
/// read-only variant. For the modifiable variant its contents are
/// unspecified, because values have already been folded into node records.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SortError {
    /// Two equal keys met. `position` is an index into the slice passed to
    /// the driver; `value` is the repeated key.
    DuplicateKey {
        position: usize,
        value: u64,
    },
    /// `n > 2^(w-1)`: node positions no longer fit beside the tag bit.
    CapacityExceeded {
        n: usize,
        width: u32,
    },
    /// A pass found nothing to practice and nothing left over.
    EmptyInterval,
    MalformedInput(String),
}

impl fmt::Display for SortError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortError::DuplicateKey { position, value } => {
                write!(f, "duplicate key {value} at position {position}")
            }
            SortError::CapacityExceeded { n, width } => {
                write!(
                    f,
                    "{n} values exceed the capacity 2^{} of a {width}-bit word",
                    width - 1
                )
            }
            SortError::EmptyInterval => f.write_str("practiced interval is empty"),
            SortError::MalformedInput(detail) => write!(f, "malformed input: {detail}"),
        }
    }
}

impl core::error::Error for SortError {}
