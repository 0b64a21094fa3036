use alloc::vec::Vec;

use crate::word::Word;

/// Bookkeeping for one pass over the unsorted suffix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PassState<W> {
    /// Minimum of the practiced interval.
    pub delta: W,
    /// Running minimum of values beyond the interval; seeds the next pass.
    pub delta_next: W,
    /// Nodes created (read-only: keys placed).
    pub n_d: usize,
    /// Idle values folded into an existing node (modifiable only).
    pub n_c: usize,
    /// Values beyond the interval.
    pub n_d_next: usize,
    /// Start of the region within the driver's slice.
    pub offset: usize,
    pub len: usize,
}

impl<W: Word> PassState<W> {
    pub fn new(delta: W, offset: usize, len: usize) -> Self {
        PassState {
            delta,
            delta_next: W::MAX,
            n_d: 0,
            n_c: 0,
            n_d_next: 0,
            offset,
            len,
        }
    }
}

/// Data movement counted by a single phase.
///
/// `swaps` counts exchanges of two distinct slots; `moves` counts one-way
/// writes (node creation, value expansion); `reads` counts element reads.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub swaps: u64,
    pub moves: u64,
    pub reads: u64,
}

impl core::ops::AddAssign for Tally {
    fn add_assign(&mut self, rhs: Tally) {
        self.swaps += rhs.swaps;
        self.moves += rhs.moves;
        self.reads += rhs.reads;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PassStats {
    pub offset: usize,
    pub len: usize,
    pub delta: u64,
    pub n_d: usize,
    pub n_c: usize,
    pub n_d_next: usize,
    pub swaps: u64,
    pub moves: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SortStats {
    /// Number of passes (iterations, or recursion depth), `k`.
    pub passes: usize,
    pub swaps: u64,
    pub moves: u64,
    pub reads: u64,
    pub per_pass: Vec<PassStats>,
}

impl SortStats {
    pub(crate) fn record<W: Word>(&mut self, state: &PassState<W>, tally: Tally) {
        self.passes += 1;
        self.swaps += tally.swaps;
        self.moves += tally.moves;
        self.reads += tally.reads;
        self.per_pass.push(PassStats {
            offset: state.offset,
            len: state.len,
            delta: state.delta.to_u64(),
            n_d: state.n_d,
            n_c: state.n_c,
            n_d_next: state.n_d_next,
            swaps: tally.swaps,
            moves: tally.moves,
        });
    }

    /// Folds the statistics of an independent sort of `slice[offset..]`.
    pub(crate) fn absorb(&mut self, other: SortStats, offset: usize) {
        self.passes += other.passes;
        self.swaps += other.swaps;
        self.moves += other.moves;
        self.reads += other.reads;
        self.per_pass
            .extend(other.per_pass.into_iter().map(|mut p| {
                p.offset += offset;
                p
            }));
    }
}
