//! Associative sort for read-only distinct keys.
//!
//! Keys are never written; a key sitting at index `key - δ` of the region
//! marks itself as placed. One pass places every key of `[δ, δ + n)` by
//! following permutation cycles, then clusters the placed keys at the front
//! in order. The sorted prefix is final after each pass, and the next pass
//! starts at the smallest key left over.

use crate::error::SortError;
use crate::stats::{PassState, SortStats, Tally};
use crate::word::{Keyed, Word};

/// How the first interval start is chosen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum InitialDelta {
    /// Scan for the minimum key first.
    #[default]
    Prescan,
    /// Start at zero; an empty first pass discovers the minimum instead.
    Zero,
}

/// Index of `key` within a region of length `n` whose interval starts at
/// `delta`, or `None` when the key lies beyond the interval.
#[inline(always)]
pub fn hash_key<W: Word>(key: W, delta: W, n: usize) -> Option<usize> {
    debug_assert!(key >= delta);
    let d = key.to_u64() - delta.to_u64();
    if (d as u128) < n as u128 {
        Some(d as usize)
    } else {
        None
    }
}

#[inline(always)]
fn is_placed<W: Word>(key: W, delta: W, i: usize) -> bool {
    key >= delta && key.to_u64() - delta.to_u64() == i as u64
}

/// Places every key of `[δ, δ + len)` at index `key - δ`.
///
/// Every key in the region must be `>= state.delta`. Updates `n_d`,
/// `n_d_next` and `delta_next`; keys beyond the interval stay in the region,
/// possibly moved.
pub fn implicit_practice<T: Keyed>(
    region: &mut [T],
    state: &mut PassState<T::Key>,
) -> Result<Tally, SortError> {
    let n = region.len();
    let delta = state.delta;
    let mut tally = Tally::default();
    let mut i = 0;
    while i < n {
        let key = region[i].key();
        tally.reads += 1;
        let Some(j) = hash_key(key, delta, n) else {
            state.n_d_next += 1;
            if key < state.delta_next {
                state.delta_next = key;
            }
            i += 1;
            continue;
        };
        if j == i {
            state.n_d += 1;
            i += 1;
            continue;
        }
        let target = region[j].key();
        tally.reads += 1;
        if target == key {
            return Err(SortError::DuplicateKey {
                position: state.offset + i,
                value: key.to_u64(),
            });
        }
        region.swap(i, j);
        tally.swaps += 1;
        if j < i {
            // Slots behind `i` are never revisited.
            state.n_d += 1;
            i += 1;
        }
    }
    Ok(tally)
}

/// Moves the `n_d` placed keys to the front of the region, in order.
pub fn implicit_store<T: Keyed>(region: &mut [T], state: &PassState<T::Key>) -> Tally {
    let mut tally = Tally::default();
    let mut remaining = state.n_d;
    let mut front = 0;
    let mut i = 0;
    while remaining > 0 {
        tally.reads += 1;
        if is_placed(region[i].key(), state.delta, i) {
            if i != front {
                region.swap(i, front);
                tally.swaps += 1;
            }
            front += 1;
            remaining -= 1;
        }
        i += 1;
    }
    tally
}

/// Sorts elements ascending by key. Keys must be pairwise distinct.
pub fn sort_readonly<T: Keyed>(elements: &mut [T]) -> Result<SortStats, SortError> {
    sort_readonly_with(elements, InitialDelta::Prescan)
}

pub fn sort_readonly_with<T: Keyed>(
    elements: &mut [T],
    initial: InitialDelta,
) -> Result<SortStats, SortError> {
    let n = elements.len();
    let mut stats = SortStats::default();
    if n == 0 {
        return Ok(stats);
    }

    let mut delta = match initial {
        InitialDelta::Prescan => {
            stats.reads += n as u64;
            elements.iter().map(Keyed::key).min().unwrap()
        }
        InitialDelta::Zero => <T::Key as Word>::from_u64(0),
    };
    let swap_budget = 2 * n as u64;
    let mut offset = 0;

    while offset < n {
        let region = &mut elements[offset..];
        let mut state = PassState::new(delta, offset, region.len());
        let mut tally = implicit_practice(region, &mut state)?;
        tally += implicit_store(region, &state);
        stats.record(&state, tally);

        if cfg!(debug_assertions) && stats.swaps > swap_budget {
            return Err(SortError::DuplicateKey {
                position: offset,
                value: delta.to_u64(),
            });
        }
        if state.n_d_next == 0 {
            if state.n_d != state.len {
                return Err(SortError::EmptyInterval);
            }
            break;
        }
        offset += state.n_d;
        delta = state.delta_next;
    }
    Ok(stats)
}
