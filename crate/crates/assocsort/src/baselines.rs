//! Reference sorts, the output verifier, and the analytic pass predictor.

use assocsort_core::{SortError, Word};

/// Largest range the counting sort will allocate counters for.
pub const COUNTING_RANGE_CAP: u64 = 1 << 28;

/// Ascending copy via the standard library's comparison sort.
pub fn comparison_oracle_sort<T: Ord + Clone>(values: &[T]) -> Vec<T> {
    let mut out = values.to_vec();
    out.sort_unstable();
    out
}

/// Distribution counting sort over `[min, max]`. Allocates one counter per
/// value of the range.
pub fn counting_sort<W: Word>(values: &[W], min: W, max: W) -> Result<Vec<W>, SortError> {
    if values.is_empty() {
        return Ok(Vec::new());
    }
    if min > max {
        return Err(SortError::MalformedInput(format!(
            "empty range [{min:?}, {max:?}]"
        )));
    }
    let range = max.to_u64() - min.to_u64();
    if range >= COUNTING_RANGE_CAP {
        return Err(SortError::MalformedInput(format!(
            "range {} exceeds the counting sort cap {COUNTING_RANGE_CAP}",
            range as u128 + 1
        )));
    }
    let base = min.to_u64();
    let mut counts = vec![0u32; range as usize + 1];
    for &v in values {
        if v < min || v > max {
            return Err(SortError::MalformedInput(format!(
                "value {v:?} outside [{min:?}, {max:?}]"
            )));
        }
        counts[(v.to_u64() - base) as usize] += 1;
    }
    let mut out = Vec::with_capacity(values.len());
    for (offset, &c) in counts.iter().enumerate() {
        let v = W::from_u64(base + offset as u64);
        out.extend(std::iter::repeat_n(v, c as usize));
    }
    Ok(out)
}

/// Least-significant-digit radix sort, one byte per pass.
pub fn lsd_radix_sort<W: Word>(values: &[W]) -> Vec<W> {
    let mut src = values.to_vec();
    let mut dst = vec![W::default(); values.len()];
    for shift in (0..W::BITS).step_by(8) {
        let digit = |v: W| (v.to_u64() >> shift & 0xFF) as usize;
        let mut counts = [0usize; 256];
        for &v in &src {
            counts[digit(v)] += 1;
        }
        if counts.contains(&src.len()) {
            continue;
        }
        let mut start = 0;
        for c in counts.iter_mut() {
            let here = *c;
            *c = start;
            start += here;
        }
        for &v in &src {
            let d = digit(v);
            dst[counts[d]] = v;
            counts[d] += 1;
        }
        std::mem::swap(&mut src, &mut dst);
    }
    src
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyFailure {
    LengthMismatch {
        output: usize,
        input: usize,
    },
    /// `output[index] < output[index - 1]`.
    OutOfOrder {
        index: usize,
    },
    /// First index where the sorted input and the output disagree.
    MultisetMismatch {
        index: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub failure: Option<VerifyFailure>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks that `output` is ascending and holds the same multiset as `input`.
pub fn verify<T: Ord + Clone>(output: &[T], input: &[T]) -> VerifyReport {
    let failure = if output.len() != input.len() {
        Some(VerifyFailure::LengthMismatch {
            output: output.len(),
            input: input.len(),
        })
    } else if let Some(i) = output.windows(2).position(|w| w[1] < w[0]) {
        Some(VerifyFailure::OutOfOrder { index: i + 1 })
    } else {
        let expect = comparison_oracle_sort(input);
        expect
            .iter()
            .zip(output)
            .position(|(a, b)| a != b)
            .map(|index| VerifyFailure::MultisetMismatch { index })
    };
    VerifyReport { failure }
}

/// Expected number of passes for `n` uniformly distributed keys over a range
/// of `beta` times the per-pass capacity: the smallest `k` with
/// `(β-1)^(k-1) / β^k <= 1/n`.
///
/// `β <= 1` means one interval covers everything, so one pass.
pub fn predict_passes_uniform(n: u64, beta: f64) -> Result<u64, SortError> {
    if !beta.is_finite() || beta <= 0.0 {
        return Err(SortError::MalformedInput(format!(
            "beta must be a positive number, got {beta}"
        )));
    }
    if n == 0 {
        return Ok(0);
    }
    if beta <= 1.0 || n == 1 {
        return Ok(1);
    }
    // (k-1)·ln(β-1) - k·ln β <= -ln n  ⇔  k >= (ln n - ln(β-1)) / (ln β - ln(β-1))
    let ln_n = (n as f64).ln();
    let a = (beta - 1.0).ln();
    let c = beta.ln();
    let k = (ln_n - a) / (c - a);
    Ok((k - 1e-9).ceil().max(1.0) as u64)
}
