use core::fmt::Debug;
use core::hash::Hash;

/// A fixed-width unsigned machine word.
///
/// All record arithmetic is carried out on the `u64` image of the word;
/// quantities that can exceed the word width (such as `δ + r·n`) use `u128`.
pub trait Word: Copy + Ord + Eq + Hash + Debug + Default + Send + Sync + 'static {
    /// Bit width `w`.
    const BITS: u32;
    /// `2^w - 1`.
    const MAX: Self;

    fn to_u64(self) -> u64;

    /// Truncating conversion. Callers guarantee `v < 2^w`.
    fn from_u64(v: u64) -> Self;
}

macro_rules! impl_word {
    ($($t:ty),*) => {$(
        impl Word for $t {
            const BITS: u32 = <$t>::BITS;
            const MAX: Self = <$t>::MAX;

            #[inline(always)]
            fn to_u64(self) -> u64 {
                self as u64
            }

            #[inline(always)]
            fn from_u64(v: u64) -> Self {
                debug_assert!(v <= <$t>::MAX as u64);
                v as $t
            }
        }
    )*};
}

impl_word!(u8, u16, u32, u64);

/// Anything that can be ordered by an integer key.
///
/// The read-only variant only ever reads keys and swaps whole elements, so
/// whatever else the element carries travels with its key.
pub trait Keyed {
    type Key: Word;

    fn key(&self) -> Self::Key;
}

impl<W: Word> Keyed for W {
    type Key = W;

    #[inline(always)]
    fn key(&self) -> W {
        *self
    }
}

/// A key paired with an opaque payload.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct KeyedElement<K, P> {
    pub key: K,
    pub payload: P,
}

impl<K, P> KeyedElement<K, P> {
    pub fn new(key: K, payload: P) -> Self {
        KeyedElement { key, payload }
    }
}

impl<K: Word, P> Keyed for KeyedElement<K, P> {
    type Key = K;

    #[inline(always)]
    fn key(&self) -> K {
        self.key
    }
}
