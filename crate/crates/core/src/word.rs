//! Boolean words and output sets.
//!
//! A word packs the channel values of one Boolean input into a `u64`:
//! channel `i` (1-based) lives at bit `i - 1`. A word is *sorted* when its
//! values are nondecreasing along increasing channel index, i.e. all zeros
//! precede all ones. Comparators route the minimum to their first endpoint,
//! so a sorting network maps every word to a sorted one under this layout.

use crate::error::{Error, Result};
use crate::perm::ChannelPermutation;
use std::fmt;
use std::str::FromStr;

/// Largest supported channel count; words must fit a `u64` with one bit to spare.
pub const MAX_CHANNELS: usize = 63;

pub(crate) fn mask(n: usize) -> u64 {
    (1u64 << n) - 1
}

pub(crate) fn check_channels(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::TooFewChannels { min: 1, got: 0 });
    }
    if n > MAX_CHANNELS {
        return Err(Error::TooManyChannels(n));
    }
    Ok(())
}

/// Leading zeros, trailing ones and the window of a word.
///
/// The window is the stretch of channels whose value is not already pinned
/// by the sorted ends: `window = n - leading_zeros - trailing_ones`. It is
/// zero exactly for sorted words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowStats {
    pub leading_zeros: usize,
    pub trailing_ones: usize,
    pub window: usize,
}

/// An n-bit Boolean vector, channel `i` at bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord {
    n: u8,
    bits: u64,
}

impl BitWord {
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        check_channels(n)?;
        if bits & !mask(n) != 0 {
            return Err(Error::LengthMismatch {
                expected: n,
                got: 64 - bits.leading_zeros() as usize,
            });
        }
        Ok(BitWord { n: n as u8, bits })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Value on `channel` (1-based).
    pub fn get(&self, channel: usize) -> bool {
        debug_assert!(channel >= 1 && channel <= self.n());
        self.bits >> (channel - 1) & 1 == 1
    }

    pub fn popcount(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Number of channels from channel 1 upward that carry a zero.
    pub fn leading_zeros(&self) -> usize {
        word_leading_zeros(self.bits, self.n())
    }

    /// Number of channels from channel n downward that carry a one.
    pub fn trailing_ones(&self) -> usize {
        word_trailing_ones(self.bits, self.n())
    }

    pub fn is_sorted(&self) -> bool {
        word_is_sorted(self.bits, self.n())
    }

    /// The sorted word with the same number of ones.
    pub fn sorted(&self) -> BitWord {
        BitWord {
            n: self.n,
            bits: sorted_word(self.popcount(), self.n()),
        }
    }

    pub fn window(&self) -> WindowStats {
        let leading_zeros = self.leading_zeros();
        let trailing_ones = self.trailing_ones();
        WindowStats {
            leading_zeros,
            trailing_ones,
            window: self.n() - leading_zeros - trailing_ones,
        }
    }

    pub fn permuted(&self, perm: &ChannelPermutation) -> Result<BitWord> {
        if perm.n() != self.n() {
            return Err(Error::PermutationSizeMismatch {
                expected: self.n(),
                got: perm.n(),
            });
        }
        Ok(BitWord {
            n: self.n,
            bits: perm.apply_word(self.bits),
        })
    }

    /// Reverse the channel order and complement every bit.
    ///
    /// This is the reflection symmetry of comparator networks: it maps
    /// sorted words to sorted words and commutes with reflected networks.
    pub fn reflected(&self) -> BitWord {
        BitWord {
            n: self.n,
            bits: reflect_word(self.bits, self.n()),
        }
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for channel in 1..=self.n() {
            write!(f, "{}", if self.get(channel) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    /// Parses e.g. `10101`, channel 1 first.
    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut n = 0usize;
        for (idx, ch) in s.char_indices() {
            match ch {
                '0' => n += 1,
                '1' => {
                    bits |= 1 << n;
                    n += 1;
                }
                _ => {
                    return Err(Error::parse_at(s, idx, format!("unexpected character {ch:?} in word")));
                }
            }
            if n > MAX_CHANNELS {
                return Err(Error::TooManyChannels(n));
            }
        }
        if n == 0 {
            return Err(Error::parse_at(s, 0, "empty word"));
        }
        Ok(BitWord { n: n as u8, bits })
    }
}

pub(crate) fn word_leading_zeros(bits: u64, n: usize) -> usize {
    if bits == 0 {
        n
    } else {
        (bits.trailing_zeros() as usize).min(n)
    }
}

pub(crate) fn word_trailing_ones(bits: u64, n: usize) -> usize {
    // Ones at the top of the n-bit range, counted from channel n downward.
    (!(bits << (64 - n))).leading_zeros() as usize
}

pub(crate) fn word_is_sorted(bits: u64, n: usize) -> bool {
    bits == sorted_word(bits.count_ones() as usize, n)
}

pub(crate) fn sorted_word(ones: usize, n: usize) -> u64 {
    mask(n) & !mask(n - ones)
}

pub(crate) fn reflect_word(bits: u64, n: usize) -> u64 {
    !bits.reverse_bits().wrapping_shr(64 - n as u32) & mask(n)
}

/// A deduplicated set of same-length words, kept in ascending numeric order.
#[derive(Clone, PartialEq, Eq)]
pub struct OutputSet {
    n: usize,
    words: Vec<u64>,
}

impl OutputSet {
    /// Builds a set from raw words, sorting and deduplicating.
    pub fn from_words(n: usize, mut words: Vec<u64>) -> Result<Self> {
        check_channels(n)?;
        let m = mask(n);
        if let Some(&bad) = words.iter().find(|&&w| w & !m != 0) {
            return Err(Error::LengthMismatch {
                expected: n,
                got: 64 - bad.leading_zeros() as usize,
            });
        }
        words.sort_unstable();
        words.dedup();
        Ok(OutputSet { n, words })
    }

    pub(crate) fn from_sorted_words(n: usize, words: Vec<u64>) -> Self {
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]));
        OutputSet { n, words }
    }

    /// Every word of length n.
    pub fn full_cube(n: usize) -> Result<Self> {
        check_channels(n)?;
        if n > 26 {
            return Err(Error::SizeGuard {
                what: "materializing the full Boolean cube",
                limit: 26,
                n,
                alternative: "an explicit word list",
            });
        }
        Ok(OutputSet {
            n,
            words: (0..1u64 << n).collect(),
        })
    }

    /// The n + 1 sorted words of length n.
    pub fn sorted_words(n: usize) -> Result<Self> {
        check_channels(n)?;
        Ok(OutputSet {
            n,
            words: (0..=n).map(|ones| sorted_word(ones, n)).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn contains(&self, word: u64) -> bool {
        self.words.binary_search(&word).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = BitWord> + '_ {
        let n = self.n as u8;
        self.words.iter().map(move |&bits| BitWord { n, bits })
    }

    pub fn sorted_count(&self) -> usize {
        self.words.iter().filter(|&&w| word_is_sorted(w, self.n)).count()
    }

    /// Total window size over the set; the size driver for SAT encodings.
    pub fn window_sum(&self) -> u64 {
        let n = self.n;
        self.words
            .iter()
            .map(|&w| (n - word_leading_zeros(w, n) - word_trailing_ones(w, n)) as u64)
            .sum()
    }

    pub fn permuted(&self, perm: &ChannelPermutation) -> Result<OutputSet> {
        if perm.n() != self.n {
            return Err(Error::PermutationSizeMismatch {
                expected: self.n,
                got: perm.n(),
            });
        }
        OutputSet::from_words(self.n, self.words.iter().map(|&w| perm.apply_word(w)).collect())
    }

    pub fn reflected(&self) -> OutputSet {
        let n = self.n;
        let mut words: Vec<u64> = self.words.iter().map(|&w| reflect_word(w, n)).collect();
        words.sort_unstable();
        OutputSet { n, words }
    }

    pub fn is_subset_of(&self, other: &OutputSet) -> bool {
        if self.n != other.n || self.len() > other.len() {
            return false;
        }
        // Both sides are sorted: one merge walk.
        let mut it = other.words.iter();
        'outer: for &w in &self.words {
            for &o in it.by_ref() {
                match o.cmp(&w) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    /// Word counts per popcount class, indexed 0..=n.
    pub fn popcount_profile(&self) -> Vec<usize> {
        let mut profile = vec![0usize; self.n + 1];
        for &w in &self.words {
            profile[w.count_ones() as usize] += 1;
        }
        profile
    }
}

impl fmt::Debug for OutputSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OutputSet(n={}, |words|={})", self.n, self.words.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_roundtrip_and_layout() {
        let w: BitWord = "10101".parse().unwrap();
        assert_eq!(w.n(), 5);
        assert!(w.get(1) && w.get(3) && w.get(5));
        assert!(!w.get(2) && !w.get(4));
        assert_eq!(w.to_string(), "10101");
        assert_eq!(w.popcount(), 3);
        assert_eq!(w.sorted().to_string(), "00111");
    }

    #[test]
    fn window_stats_examples() {
        let w: BitWord = "001011".parse().unwrap();
        assert_eq!(
            w.window(),
            WindowStats { leading_zeros: 2, trailing_ones: 2, window: 2 }
        );
        let sorted: BitWord = "000111".parse().unwrap();
        assert_eq!(sorted.window().window, 0);
        assert!(sorted.is_sorted());
        let spread: BitWord = "100000".parse().unwrap();
        assert_eq!(spread.window().window, 6);
        let zeros: BitWord = "0000".parse().unwrap();
        assert_eq!(zeros.window(), WindowStats { leading_zeros: 4, trailing_ones: 0, window: 0 });
        assert!(zeros.is_sorted());
        let ones: BitWord = "1111".parse().unwrap();
        assert_eq!(ones.window(), WindowStats { leading_zeros: 0, trailing_ones: 4, window: 0 });
    }

    #[test]
    fn sorted_iff_zero_window() {
        for n in 1..=10usize {
            for bits in 0..1u64 << n {
                let w = BitWord::new(n, bits).unwrap();
                assert_eq!(w.is_sorted(), w.window().window == 0, "word {w}");
            }
        }
    }

    #[test]
    fn reflection_is_involutive_and_preserves_sortedness() {
        for bits in 0..1u64 << 7 {
            let w = BitWord::new(7, bits).unwrap();
            assert_eq!(w.reflected().reflected(), w);
            assert_eq!(w.is_sorted(), w.reflected().is_sorted());
        }
    }

    #[test]
    fn output_set_basics() {
        let set = OutputSet::from_words(3, vec![0b110, 0b000, 0b110, 0b011]).unwrap();
        assert_eq!(set.len(), 3);
        assert_eq!(set.words(), &[0b000, 0b011, 0b110]);
        assert!(set.contains(0b011));
        assert!(!set.contains(0b101));
        assert_eq!(set.sorted_count(), 2);
        let full = OutputSet::full_cube(3).unwrap();
        assert_eq!(full.len(), 8);
        assert!(set.is_subset_of(&full));
        assert!(!full.is_subset_of(&set));
        assert_eq!(OutputSet::sorted_words(5).unwrap().len(), 6);
    }
}
