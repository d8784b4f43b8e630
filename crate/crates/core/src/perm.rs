//! Channel permutations.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A bijection on channels 1..=n.
///
/// `apply(i)` gives the channel that `i` is renamed to. Acting on a word
/// moves the value of channel `i` to channel `apply(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PermRepr", into = "PermRepr")]
pub struct ChannelPermutation {
    /// `map[i - 1]` is the 0-based image of channel i.
    map: Vec<u8>,
}

#[derive(Serialize, Deserialize)]
struct PermRepr {
    map: Vec<usize>,
}

impl From<ChannelPermutation> for PermRepr {
    fn from(perm: ChannelPermutation) -> Self {
        PermRepr { map: perm.map.iter().map(|&v| v as usize + 1).collect() }
    }
}

impl TryFrom<PermRepr> for ChannelPermutation {
    type Error = Error;
    fn try_from(repr: PermRepr) -> Result<Self> {
        ChannelPermutation::from_one_based(&repr.map)
    }
}

impl ChannelPermutation {
    pub fn identity(n: usize) -> Result<Self> {
        crate::word::check_channels(n)?;
        Ok(ChannelPermutation { map: (0..n as u8).collect() })
    }

    /// The transposition swapping channels `a` and `b` (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut perm = Self::identity(n)?;
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation {
                n,
                reason: format!("transposition ({a} {b}) out of range"),
            });
        }
        perm.map.swap(a - 1, b - 1);
        Ok(perm)
    }

    /// Builds from images of channels 1..=n, e.g. `[2, 1, 3]` swaps 1 and 2.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        crate::word::check_channels(n)?;
        let mut seen = vec![false; n];
        let mut map = Vec::with_capacity(n);
        for &image in images {
            if image == 0 || image > n {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("image {image} out of range"),
                });
            }
            if seen[image - 1] {
                return Err(Error::InvalidPermutation {
                    n,
                    reason: format!("image {image} repeated"),
                });
            }
            seen[image - 1] = true;
            map.push((image - 1) as u8);
        }
        Ok(ChannelPermutation { map })
    }

    pub fn n(&self) -> usize {
        self.map.len()
    }

    /// Image of `channel` (1-based).
    pub fn apply(&self, channel: usize) -> usize {
        self.map[channel - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i as u8 == v)
    }

    pub fn inverse(&self) -> ChannelPermutation {
        let mut map = vec![0u8; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[v as usize] = i as u8;
        }
        ChannelPermutation { map }
    }

    /// The composite that applies `self` first, then `next`.
    pub fn then(&self, next: &ChannelPermutation) -> Result<ChannelPermutation> {
        if next.n() != self.n() {
            return Err(Error::PermutationSizeMismatch { expected: self.n(), got: next.n() });
        }
        Ok(ChannelPermutation {
            map: self.map.iter().map(|&v| next.map[v as usize]).collect(),
        })
    }

    /// Moves bit `i - 1` to bit `apply(i) - 1`.
    pub fn apply_word(&self, bits: u64) -> u64 {
        let mut out = 0u64;
        for (i, &v) in self.map.iter().enumerate() {
            out |= (bits >> i & 1) << v;
        }
        out
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize + 1).collect()
    }
}

impl fmt::Debug for ChannelPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChannelPermutation{:?}", self.one_based())
    }
}

impl fmt::Display for ChannelPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<String> = self.one_based().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", images.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let swap12 = ChannelPermutation::transposition(4, 1, 2).unwrap();
        let swap34 = ChannelPermutation::transposition(4, 3, 4).unwrap();
        let both = swap12.then(&swap34).unwrap();
        assert_eq!(both.one_based(), vec![2, 1, 4, 3]);
        assert!(both.then(&both.inverse()).unwrap().is_identity());
        assert_eq!(both.apply(1), 2);
        assert_eq!(both.apply_word(0b0101), 0b1010);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(ChannelPermutation::from_one_based(&[1, 1, 3]).is_err());
        assert!(ChannelPermutation::from_one_based(&[0, 1]).is_err());
        assert!(ChannelPermutation::from_one_based(&[1, 5]).is_err());
    }

    #[test]
    fn word_action_moves_values() {
        // pi: 1 -> 2, 2 -> 3, 3 -> 1 applied to 100 puts channel 1's value on channel 2.
        let perm = ChannelPermutation::from_one_based(&[2, 3, 1]).unwrap();
        assert_eq!(perm.apply_word(0b001), 0b010);
        assert_eq!(perm.apply_word(0b010), 0b100);
        assert_eq!(perm.apply_word(0b100), 0b001);
    }
}
