//! Runs any of the sorting algorithms on a `u64` value list at a chosen word
//! width.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use assocsort_core::{modifiable, readonly, SortError, SortStats, Word};

use crate::baselines::{comparison_oracle_sort, counting_sort, lsd_radix_sort};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    /// Read-only variant.
    AssocRo,
    /// Modifiable variant, sequential driver.
    AssocMod,
    /// Modifiable variant, recursive driver.
    AssocRec,
    /// Modifiable variant behind the universe split.
    AssocFull,
    Counting,
    Radix,
    /// `slice::sort_unstable`.
    Std,
}

impl Algo {
    pub const ALL: [Algo; 7] = [
        Algo::AssocRo,
        Algo::AssocMod,
        Algo::AssocRec,
        Algo::AssocFull,
        Algo::Counting,
        Algo::Radix,
        Algo::Std,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::AssocRo => "assoc-ro",
            Algo::AssocMod => "assoc-mod",
            Algo::AssocRec => "assoc-rec",
            Algo::AssocFull => "assoc-full",
            Algo::Counting => "counting",
            Algo::Radix => "radix",
            Algo::Std => "std",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown algorithm `{s}`"))
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    /// Zeroed for the baselines, which are not instrumented.
    pub stats: SortStats,
    pub wall_nanos: u128,
    pub output: Vec<u64>,
}

/// Sorts a copy of `values` as `width`-bit words. Only the sort itself is
/// timed.
pub fn run(algo: Algo, values: &[u64], width: u32) -> Result<Outcome, SortError> {
    match width {
        8 => run_typed::<u8>(algo, values),
        16 => run_typed::<u16>(algo, values),
        32 => run_typed::<u32>(algo, values),
        64 => run_typed::<u64>(algo, values),
        _ => Err(SortError::MalformedInput(format!(
            "unsupported word width {width}"
        ))),
    }
}

fn run_typed<W: Word>(algo: Algo, values: &[u64]) -> Result<Outcome, SortError> {
    let limit = W::MAX.to_u64();
    if let Some(v) = values.iter().find(|&&v| v > limit) {
        return Err(SortError::MalformedInput(format!(
            "value {v} does not fit in {} bits",
            W::BITS
        )));
    }
    let mut data: Vec<W> = values.iter().map(|&v| W::from_u64(v)).collect();

    let start = Instant::now();
    let (stats, data) = match algo {
        Algo::AssocRo => (readonly::sort_readonly(&mut data)?, data),
        Algo::AssocMod => (modifiable::sort_sequential(&mut data)?, data),
        Algo::AssocRec => (modifiable::sort_recursive(&mut data)?, data),
        Algo::AssocFull => (modifiable::sort_full_universe(&mut data)?, data),
        Algo::Counting => {
            let lo = data.iter().copied().min().unwrap_or_default();
            let hi = data.iter().copied().max().unwrap_or_default();
            (SortStats::default(), counting_sort(&data, lo, hi)?)
        }
        Algo::Radix => (SortStats::default(), lsd_radix_sort(&data)),
        Algo::Std => (SortStats::default(), comparison_oracle_sort(&data)),
    };
    let wall_nanos = start.elapsed().as_nanos().max(1);

    Ok(Outcome {
        stats,
        wall_nanos,
        output: data.into_iter().map(Word::to_u64).collect(),
    })
}
