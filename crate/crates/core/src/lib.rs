//! In-place associative sorting for lists of distinct unsigned integers.
//!
//! Two variants are provided:
//!
//! - [`readonly`]: keys are never written. Each pass places every key in
//!   `[δ, δ + n)` at index `key - δ` by cycle-leader swaps, then clusters
//!   those placed keys at the front of the region. Elements may carry an
//!   arbitrary payload (see [`Keyed`]).
//! - [`modifiable`]: the integers themselves are overwritten with tagged
//!   node records. A record's free bits act as a bitmask, so one pass covers
//!   `[δ, δ + r·n)` where `r = w - ⌈log₂ n⌉`. Sorted values are
//!   reconstructed from the records afterwards.
//!
//! Both variants use `O(1)` auxiliary words beyond the per-pass statistics
//! log returned in [`SortStats`].
//!
//! ```
//! use assocsort_core::{modifiable, readonly};
//!
//! let mut keys = [9u32, 2, 0, 7];
//! let stats = readonly::sort_readonly(&mut keys).unwrap();
//! assert_eq!(keys, [0, 2, 7, 9]);
//! assert_eq!(stats.passes, 3);
//!
//! let mut values = [13u8, 3, 22, 7];
//! let stats = modifiable::sort_sequential(&mut values).unwrap();
//! assert_eq!(values, [3, 7, 13, 22]);
//! assert_eq!(stats.passes, 1);
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod layout;
pub mod modifiable;
pub mod readonly;
mod stats;
mod word;

pub use error::SortError;
pub use layout::BitLayout;
pub use stats::{PassState, PassStats, SortStats, Tally};
pub use word::{Keyed, KeyedElement, Word};
