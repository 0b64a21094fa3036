//! Deterministic input generators.
//!
//! Every generator is a pure function of its parameters and seed. Values are
//! returned as `u64` and always fit the requested word width.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use assocsort_core::{BitLayout, SortError};
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Ranges up to this size are sampled by the index sampler; larger ones by
/// rejection into a hash set.
const INDEX_SAMPLE_CAP: u128 = 1 << 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dist {
    UniformDistinct,
    ConsecutiveSorted,
    WorstSingleton,
    FullUniverse,
}

impl Dist {
    pub fn name(self) -> &'static str {
        match self {
            Dist::UniformDistinct => "uniform_distinct",
            Dist::ConsecutiveSorted => "consecutive_sorted",
            Dist::WorstSingleton => "worst_singleton",
            Dist::FullUniverse => "full_universe",
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Dist {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "uniform_distinct" | "uniform" => Ok(Dist::UniformDistinct),
            "consecutive_sorted" | "consecutive" => Ok(Dist::ConsecutiveSorted),
            "worst_singleton" | "worst" => Ok(Dist::WorstSingleton),
            "full_universe" => Ok(Dist::FullUniverse),
            _ => Err(format!("unknown distribution `{s}`")),
        }
    }
}

/// What one unit of `β` measures: a key slot (`m = β·n`) or a record's
/// bitmask (`m = β·n·r`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Unit {
    #[default]
    Key,
    Record,
}

impl FromStr for Unit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "key" => Ok(Unit::Key),
            "record" => Ok(Unit::Record),
            _ => Err(format!("unknown unit `{s}`")),
        }
    }
}

/// An exact non-negative rational, parsed from `3`, `1.5` or `3/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Beta {
    num: u64,
    den: u64,
}

impl Beta {
    pub fn new(num: u64, den: u64) -> Beta {
        assert!(den > 0);
        Beta { num, den }
    }

    pub fn integer(v: u64) -> Beta {
        Beta { num: v, den: 1 }
    }

    pub fn as_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `⌊β · x⌋`.
    pub fn scale(self, x: u128) -> u128 {
        x * self.num as u128 / self.den as u128
    }
}

impl fmt::Display for Beta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Beta {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("invalid ratio `{s}`");
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let num = n.trim().parse().map_err(|_| bad())?;
            let den: u64 = d.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            return Ok(Beta { num, den });
        }
        if let Some((int, frac)) = s.split_once('.') {
            if frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let den = 10u64.pow(frac.len() as u32);
            let int: u64 = if int.is_empty() {
                0
            } else {
                int.parse().map_err(|_| bad())?
            };
            let frac: u64 = if frac.is_empty() {
                0
            } else {
                frac.parse().map_err(|_| bad())?
            };
            let num = int
                .checked_mul(den)
                .and_then(|v| v.checked_add(frac))
                .ok_or_else(bad)?;
            return Ok(Beta { num, den });
        }
        Ok(Beta::integer(s.parse().map_err(|_| bad())?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Workload {
    pub dist: Dist,
    pub n: usize,
    pub beta: Beta,
    pub width: u32,
    /// Size of the interval the values were drawn from.
    pub m: u128,
    pub seed: u64,
    pub values: Vec<u64>,
}

/// Parameters shared by every distribution; unused ones are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WorkloadSpec {
    pub dist: Dist,
    pub n: usize,
    pub beta: Beta,
    pub width: u32,
    pub unit: Unit,
    pub seed: u64,
}

pub fn generate(spec: &WorkloadSpec) -> Result<Workload, SortError> {
    match spec.dist {
        Dist::UniformDistinct => {
            gen_uniform_distinct(spec.n, spec.beta, spec.width, spec.unit, spec.seed)
        }
        Dist::ConsecutiveSorted => gen_consecutive_sorted(spec.n, spec.width),
        Dist::WorstSingleton => gen_worst_singleton(spec.n, spec.unit, spec.width),
        Dist::FullUniverse => gen_full_universe(spec.n, spec.beta, spec.width, spec.seed),
    }
}

fn check_width(width: u32) -> Result<(), SortError> {
    if matches!(width, 8 | 16 | 32 | 64) {
        Ok(())
    } else {
        Err(SortError::MalformedInput(format!(
            "unsupported word width {width}"
        )))
    }
}

fn unit_size(n: usize, width: u32, unit: Unit) -> Result<u128, SortError> {
    match unit {
        Unit::Key => Ok(1),
        Unit::Record => Ok(BitLayout::new(n.max(1), width)?.mask_bits() as u128),
    }
}

/// `n` distinct values sampled uniformly from `[base, base + m)`, in random
/// order.
fn sample_distinct(n: usize, base: u64, m: u128, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut values: Vec<u64> = if m <= INDEX_SAMPLE_CAP {
        index::sample(rng, m as usize, n)
            .into_iter()
            .map(|i| base + i as u64)
            .collect()
    } else {
        let mut seen = HashSet::with_capacity(n);
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let off = rng.gen_range(0..m);
            if seen.insert(off) {
                out.push(base + off as u64);
            }
        }
        out
    };
    values.shuffle(rng);
    values
}

/// `n` distinct values over `[0, m)` with `m = ⌊β·n·unit⌋`.
pub fn gen_uniform_distinct(
    n: usize,
    beta: Beta,
    width: u32,
    unit: Unit,
    seed: u64,
) -> Result<Workload, SortError> {
    check_width(width)?;
    let m = beta.scale(n as u128 * unit_size(n, width, unit)?);
    if m < n as u128 {
        return Err(SortError::MalformedInput(format!(
            "range {m} cannot hold {n} distinct values"
        )));
    }
    if m > 1u128 << width {
        return Err(SortError::MalformedInput(format!(
            "range {m} exceeds the {width}-bit universe"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Workload {
        dist: Dist::UniformDistinct,
        n,
        beta,
        width,
        m,
        seed,
        values: sample_distinct(n, 0, m, &mut rng),
    })
}

/// `0, 1, …, n-1` in order.
pub fn gen_consecutive_sorted(n: usize, width: u32) -> Result<Workload, SortError> {
    check_width(width)?;
    if n as u128 > 1u128 << width {
        return Err(SortError::MalformedInput(format!(
            "{n} distinct values do not fit in {width} bits"
        )));
    }
    Ok(Workload {
        dist: Dist::ConsecutiveSorted,
        n,
        beta: Beta::integer(1),
        width,
        m: n as u128,
        seed: 0,
        values: (0..n as u64).collect(),
    })
}

/// Values spaced so that every pass finds exactly one of them in its
/// interval.
///
/// For keys the stride is `n`: pass `t` covers `[(t-1)n, (t-1)n + n-t]`.
/// For records it is the largest per-pass capacity `(w - ⌈log₂ l⌉)·l` over
/// the region lengths `l ≤ n` the passes will see.
pub fn gen_worst_singleton(n: usize, unit: Unit, width: u32) -> Result<Workload, SortError> {
    check_width(width)?;
    if n == 0 {
        return Err(SortError::MalformedInput("worst case needs n >= 1".into()));
    }
    let (stride, limit) = match unit {
        Unit::Key => (n as u128, 1u128 << width),
        Unit::Record => {
            let mut stride = 0;
            for l in 1..=n {
                stride = stride.max(BitLayout::new(l, width)?.capacity());
            }
            (stride, 1u128 << (width - 1))
        }
    };
    let last = (n as u128 - 1) * stride;
    if last >= limit {
        return Err(SortError::MalformedInput(format!(
            "worst case for n = {n} needs values up to {last}, beyond the {width}-bit word"
        )));
    }
    Ok(Workload {
        dist: Dist::WorstSingleton,
        n,
        beta: Beta::integer(stride as u64),
        width,
        m: last + 1,
        seed: 0,
        values: (0..n as u64).map(|i| i * stride as u64).collect(),
    })
}

/// Uniform distinct values from an interval of size `⌊β·n⌋` centred on
/// `2^(w-1)`, so both halves of the universe are populated.
pub fn gen_full_universe(
    n: usize,
    beta: Beta,
    width: u32,
    seed: u64,
) -> Result<Workload, SortError> {
    check_width(width)?;
    let universe = 1u128 << width;
    let m = beta.scale(n as u128).min(universe);
    if m < n as u128 {
        return Err(SortError::MalformedInput(format!(
            "range {m} cannot hold {n} distinct values"
        )));
    }
    let base = ((universe / 2).saturating_sub(m / 2)).min(universe - m) as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Workload {
        dist: Dist::FullUniverse,
        n,
        beta,
        width,
        m,
        seed,
        values: sample_distinct(n, base, m, &mut rng),
    })
}
