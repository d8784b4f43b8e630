//! Comparator and sorting network toolkit.
//!
//! Construction, verification, and transformation of comparator networks;
//! structural analysis of network suffixes (blocks, last-layer normal form,
//! co-saturation); generation of complete two-layer filter sets; evolutionary
//! prefix optimization; CNF encoding of depth-restricted existence questions;
//! and orchestration of external SAT solvers over filter sets.

pub mod catalog;
pub mod encode;
pub mod error;
pub mod filters;
pub mod format;
pub mod net;
pub mod perm;
pub mod prefopt;
pub mod solver;
pub mod subsume;
pub mod suffix;
pub mod word;

pub use error::{Error, Result};
pub use net::{Comparator, Layer, Network};
pub use perm::ChannelPermutation;
pub use word::{BitWord, OutputSet, WindowStats};

/// FNV-1a fingerprint used for stable file and registry hashes.
pub fn fnv64(bytes: &[u8]) -> u64 {
    let mut hash = 0xcbf2_9ce4_8422_2325u64;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}
