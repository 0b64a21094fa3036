//! Field geometry of a node record in the modifiable variant.
//!
//! A `w`-bit word is split as
//!
//! ```text
//!  w-1                r  r-1                 0
//! +--------------------+---------------------+
//! |  position (b bits) |  bitmask (r bits)   |
//! +--------------------+---------------------+
//!  ^ tag bit (w-1), only while practicing
//! ```
//!
//! with `b = max(1, ⌈log₂ n⌉)` and `r = w - b`. The tag bit overlaps the
//! position field; it is cleared before a position is encoded.

use crate::error::SortError;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BitLayout {
    width: u32,
    n: usize,
    pos_bits: u32,
    mask_bits: u32,
}

impl BitLayout {
    /// Builds the layout for a region of `n` records in `width`-bit words.
    pub fn new(n: usize, width: u32) -> Result<BitLayout, SortError> {
        if !matches!(width, 8 | 16 | 32 | 64) {
            return Err(SortError::MalformedInput(alloc::format!(
                "unsupported word width {width}"
            )));
        }
        if n == 0 {
            return Err(SortError::MalformedInput(
                "layout for an empty region".into(),
            ));
        }
        if n as u128 > 1u128 << (width - 1) {
            return Err(SortError::CapacityExceeded { n, width });
        }
        let pos_bits = ceil_log2(n).max(1);
        Ok(BitLayout {
            width,
            n,
            pos_bits,
            mask_bits: width - pos_bits,
        })
    }

    pub fn for_word<W: Word>(n: usize) -> Result<BitLayout, SortError> {
        BitLayout::new(n, W::BITS)
    }

    /// Word width `w`.
    pub fn width(&self) -> u32 {
        self.width
    }

    /// Region length the layout was built for.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Width of the position field, `b`.
    pub fn pos_bits(&self) -> u32 {
        self.pos_bits
    }

    /// Width of the bitmask, `r`.
    pub fn mask_bits(&self) -> u32 {
        self.mask_bits
    }

    /// Number of consecutive values one pass can practice: `r·n`.
    pub fn capacity(&self) -> u128 {
        self.mask_bits as u128 * self.n as u128
    }

    #[inline(always)]
    fn tag(&self) -> u64 {
        1u64 << (self.width - 1)
    }

    #[inline(always)]
    fn low_mask(&self) -> u64 {
        // mask_bits <= 63
        (1u64 << self.mask_bits) - 1
    }

    #[inline(always)]
    pub fn tag_node<W: Word>(&self, record: W) -> W {
        W::from_u64(record.to_u64() | self.tag())
    }

    #[inline(always)]
    pub fn is_node<W: Word>(&self, record: W) -> bool {
        record.to_u64() & self.tag() != 0
    }

    #[inline(always)]
    pub fn clear_tag<W: Word>(&self, record: W) -> W {
        W::from_u64(record.to_u64() & !self.tag())
    }

    /// Sets mask bit `k`. The flag reports whether it was already set, which
    /// for distinct input means a duplicate.
    #[inline(always)]
    pub fn set_mask_bit<W: Word>(&self, record: W, k: u32) -> (W, bool) {
        assert!(k < self.mask_bits, "mask bit {k} out of range");
        let bit = 1u64 << k;
        let raw = record.to_u64();
        (W::from_u64(raw | bit), raw & bit != 0)
    }

    #[inline(always)]
    pub fn mask_bit<W: Word>(&self, record: W, k: u32) -> bool {
        assert!(k < self.mask_bits, "mask bit {k} out of range");
        record.to_u64() >> k & 1 == 1
    }

    /// The `r`-bit bitmask of a record.
    #[inline(always)]
    pub fn mask<W: Word>(&self, record: W) -> u64 {
        record.to_u64() & self.low_mask()
    }

    /// Writes `pos` into the top `b` bits, leaving the bitmask untouched.
    #[inline(always)]
    pub fn encode_position<W: Word>(&self, record: W, pos: usize) -> W {
        debug_assert!((pos as u64) < 1u64 << self.pos_bits);
        debug_assert!(!self.is_node(record), "tag must be cleared before encoding");
        let raw = record.to_u64() & self.low_mask();
        W::from_u64(raw | (pos as u64) << self.mask_bits)
    }

    #[inline(always)]
    pub fn decode_position<W: Word>(&self, record: W) -> usize {
        (record.to_u64() >> self.mask_bits) as usize
    }
}

/// Smallest `b` with `2^b >= n`.
fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}
