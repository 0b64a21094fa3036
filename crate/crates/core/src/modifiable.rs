//! Associative sort for modifiable distinct integers.
//!
//! A pass over a region of length `n` practices every value `v` in
//! `[δ, δ + r·n)` by mapping it to node `j = (v-δ) / r` and mask bit
//! `k = (v-δ) % r`, where `r` is the bitmask width of the region's
//! [`BitLayout`]. The first value mapped to `j` turns slot `j` into a tagged
//! record; later ones only set their bit and become idle. Records are then
//! packed to the front with their original slot encoded in the position
//! field, and expanded back into sorted values right to left.
//!
//! Values must lie below `2^(w-1)` so the tag bit is free, and `n` must not
//! exceed `2^(w-1)`. [`sort_full_universe`] lifts the value restriction.

use crate::error::SortError;
use crate::layout::BitLayout;
use crate::stats::{PassState, SortStats, Tally};
use crate::word::Word;

/// Node index and mask bit of `v`, or `None` beyond the interval.
#[inline(always)]
pub fn super_hash<W: Word>(v: W, delta: W, layout: &BitLayout) -> Option<(usize, u32)> {
    debug_assert!(v >= delta);
    let d = v.to_u64() - delta.to_u64();
    if (d as u128) < layout.capacity() {
        let r = layout.mask_bits() as u64;
        Some(((d / r) as usize, (d % r) as u32))
    } else {
        None
    }
}

/// `j·r + k + δ`.
#[inline(always)]
pub fn inverse_super_hash<W: Word>(j: usize, k: u32, delta: W, layout: &BitLayout) -> W {
    let v = j as u128 * layout.mask_bits() as u128 + k as u128 + delta.to_u64() as u128;
    debug_assert!(v <= W::MAX.to_u64() as u128);
    W::from_u64(v as u64)
}

/// Practices every value of the interval into node records.
///
/// Values below `state.delta` are skipped untouched, as are existing
/// records. Updates `n_d`, `n_c`, `n_d_next` and `delta_next`.
pub fn practice<W: Word>(
    region: &mut [W],
    state: &mut PassState<W>,
    layout: &BitLayout,
) -> Result<Tally, SortError> {
    let n = region.len();
    debug_assert_eq!(n, layout.n());
    let delta = state.delta;
    let mut tally = Tally::default();
    let mut i = 0;
    while i < n {
        let v = region[i];
        tally.reads += 1;
        if v < delta || layout.is_node(v) {
            i += 1;
            continue;
        }
        let Some((j, k)) = super_hash(v, delta, layout) else {
            state.n_d_next += 1;
            if v < state.delta_next {
                state.delta_next = v;
            }
            i += 1;
            continue;
        };
        let occupant = region[j];
        tally.reads += 1;
        if !layout.is_node(occupant) {
            region[i] = occupant;
            region[j] = layout.set_mask_bit(layout.tag_node(W::default()), k).0;
            tally.moves += 1;
            state.n_d += 1;
            if j <= i {
                i += 1;
            }
        } else {
            let (record, already) = layout.set_mask_bit(occupant, k);
            if already {
                return Err(SortError::DuplicateKey {
                    position: state.offset + i,
                    value: v.to_u64(),
                });
            }
            region[j] = record;
            state.n_c += 1;
            i += 1;
        }
    }
    Ok(tally)
}

/// Packs the `n_d` records to the front in their original order, replacing
/// each tag with the record's pre-store slot index.
pub fn store<W: Word>(region: &mut [W], state: &PassState<W>, layout: &BitLayout) -> Tally {
    let mut tally = Tally::default();
    let mut remaining = state.n_d;
    let mut front = 0;
    let mut i = 0;
    while remaining > 0 {
        let rec = region[i];
        tally.reads += 1;
        if layout.is_node(rec) {
            let rec = layout.encode_position(layout.clear_tag(rec), i);
            region[i] = region[front];
            region[front] = rec;
            if i != front {
                tally.swaps += 1;
            }
            front += 1;
            remaining -= 1;
        }
        i += 1;
    }
    tally
}

/// Moves every value below `δ + r·n` ahead of the out-of-interval values
/// within `region[n_d..]`. Returns the tally and the size of the lower part.
pub fn partition_idle<W: Word>(
    region: &mut [W],
    state: &PassState<W>,
    layout: &BitLayout,
) -> (Tally, usize) {
    let threshold = state.delta.to_u64() as u128 + layout.capacity();
    let below = |v: W| (v.to_u64() as u128) < threshold;
    let tail = &mut region[state.n_d..];
    let mut tally = Tally::default();
    let mut lo = 0;
    let mut hi = tail.len();
    loop {
        while lo < hi && below(tail[lo]) {
            tally.reads += 1;
            lo += 1;
        }
        while lo < hi && !below(tail[hi - 1]) {
            tally.reads += 1;
            hi -= 1;
        }
        if lo >= hi {
            break;
        }
        tally.reads += 2;
        tail.swap(lo, hi - 1);
        tally.swaps += 1;
        lo += 1;
        hi -= 1;
    }
    (tally, lo)
}

/// Expands the `n_d` records at the front of the region into the
/// `n_d + n_c` sorted values of the interval, written right to left so that
/// the last one lands at `end - 1`.
///
/// `end` must be at least `n_d + n_c`. Each record is copied out before its
/// values are written, since the final write of a record may land on its own
/// slot.
pub fn retrieve_into<W: Word>(
    region: &mut [W],
    state: &PassState<W>,
    layout: &BitLayout,
    end: usize,
) -> Tally {
    debug_assert!(end >= state.n_d + state.n_c && end <= region.len());
    let mut tally = Tally::default();
    let mut p = end;
    for i in (0..state.n_d).rev() {
        let rec = region[i];
        tally.reads += 1;
        let j = layout.decode_position(rec);
        let mut mask = layout.mask(rec);
        while mask != 0 {
            let k = 63 - mask.leading_zeros();
            mask &= !(1u64 << k);
            p -= 1;
            region[p] = inverse_super_hash(j, k, state.delta, layout);
            tally.moves += 1;
        }
    }
    debug_assert_eq!(p, end - state.n_d - state.n_c);
    tally
}

/// Expands the records over `region[..n_d + n_c]`. Returns the number of
/// values written.
pub fn retrieve<W: Word>(
    region: &mut [W],
    state: &PassState<W>,
    layout: &BitLayout,
) -> (usize, Tally) {
    let count = state.n_d + state.n_c;
    (count, retrieve_into(region, state, layout, count))
}

/// Scans for the minimum and checks the value and size preconditions.
fn prescan<W: Word>(values: &[W]) -> Result<(W, u64), SortError> {
    let half = 1u64 << (W::BITS - 1);
    if values.len() as u128 > half as u128 {
        return Err(SortError::CapacityExceeded {
            n: values.len(),
            width: W::BITS,
        });
    }
    let (mut min, mut max) = (W::MAX, W::default());
    for &v in values {
        min = min.min(v);
        max = max.max(v);
    }
    if max.to_u64() >= half {
        return Err(SortError::MalformedInput(alloc::format!(
            "value {} does not fit below the tag bit of a {}-bit word",
            max.to_u64(),
            W::BITS
        )));
    }
    Ok((min, values.len() as u64))
}

/// Sorts distinct values below `2^(w-1)` pass by pass.
pub fn sort_sequential<W: Word>(values: &mut [W]) -> Result<SortStats, SortError> {
    let n = values.len();
    let mut stats = SortStats::default();
    if n == 0 {
        return Ok(stats);
    }
    let (mut delta, reads) = prescan(values)?;
    stats.reads += reads;

    let mut offset = 0;
    while offset < n {
        let region = &mut values[offset..];
        let layout = BitLayout::for_word::<W>(region.len())?;
        let mut state = PassState::new(delta, offset, region.len());
        let mut tally = practice(region, &mut state, &layout)?;
        if state.n_d == 0 {
            return Err(SortError::EmptyInterval);
        }
        tally += store(region, &state, &layout);
        let (t, idle) = partition_idle(region, &state, &layout);
        debug_assert_eq!(idle, state.n_c);
        tally += t;
        let (expanded, t) = retrieve(region, &state, &layout);
        tally += t;
        stats.record(&state, tally);

        if state.n_d_next == 0 {
            break;
        }
        offset += expanded;
        delta = state.delta_next;
    }
    Ok(stats)
}

/// Same contract and output as [`sort_sequential`]; one stack frame per
/// pass. Each frame hands its unsorted remainder, idle values included, to
/// the next frame and expands its own interval only after the deeper frames
/// have filled the tail of the region.
pub fn sort_recursive<W: Word>(values: &mut [W]) -> Result<SortStats, SortError> {
    let mut stats = SortStats::default();
    if values.is_empty() {
        return Ok(stats);
    }
    let (delta, reads) = prescan(values)?;
    stats.reads += reads;
    let mut frames = alloc::vec::Vec::new();
    let expanded = recurse(values, delta, 0, &mut frames)?;
    debug_assert_eq!(expanded, values.len());
    for (state, tally) in frames {
        stats.record(&state, tally);
    }
    Ok(stats)
}

fn recurse<W: Word>(
    region: &mut [W],
    delta: W,
    offset: usize,
    frames: &mut alloc::vec::Vec<(PassState<W>, Tally)>,
) -> Result<usize, SortError> {
    let len = region.len();
    let layout = BitLayout::for_word::<W>(len)?;
    let mut state = PassState::new(delta, offset, len);
    let mut tally = practice(region, &mut state, &layout)?;
    if state.n_d == 0 {
        return Err(SortError::EmptyInterval);
    }
    tally += store(region, &state, &layout);
    let frame = frames.len();
    frames.push((state, tally));

    let below = if state.n_d_next > 0 {
        recurse(
            &mut region[state.n_d..],
            state.delta_next,
            offset + state.n_d,
            frames,
        )?
    } else {
        0
    };
    let t = retrieve_into(region, &state, &layout, len - below);
    frames[frame].1 += t;
    Ok(below + state.n_d + state.n_c)
}

/// Sorts distinct values anywhere in `[0, 2^w)`.
///
/// The slice is partitioned around `2^(w-1)`; the upper part is shifted down
/// by `2^(w-1)`, both parts are sorted with [`sort_sequential`], and the
/// upper part is shifted back.
pub fn sort_full_universe<W: Word>(values: &mut [W]) -> Result<SortStats, SortError> {
    let half = 1u64 << (W::BITS - 1);
    let mut stats = SortStats::default();

    let mut lo = 0;
    let mut hi = values.len();
    while lo < hi {
        if values[lo].to_u64() < half {
            lo += 1;
        } else {
            hi -= 1;
            values.swap(lo, hi);
            stats.swaps += 1;
        }
    }
    stats.reads += values.len() as u64;

    let (lower, upper) = values.split_at_mut(lo);
    for v in upper.iter_mut() {
        *v = W::from_u64(v.to_u64() - half);
    }
    let low_stats = sort_sequential(lower)?;
    let high_stats = sort_sequential(upper).map_err(|e| match e {
        SortError::DuplicateKey { position, value } => SortError::DuplicateKey {
            position: position + lo,
            value: value + half,
        },
        e => e,
    })?;
    for v in upper.iter_mut() {
        *v = W::from_u64(v.to_u64() + half);
    }
    stats.moves += 2 * upper.len() as u64;
    stats.absorb(low_stats, 0);
    stats.absorb(high_stats, lo);
    Ok(stats)
}
