//! Subsumption and co-subsumption between comparator networks.
//!
//! `a` subsumes `b` when some channel permutation embeds `outputs(a)` into
//! `outputs(b)`; co-subsumption asks the same of the sorts-sets. Both reduce
//! to finding a permutation embedding one word set into another. 17! is far
//! out of reach unpruned, so the search assigns the permutation channel by
//! channel, rejecting early on per-popcount channel signatures and on
//! per-word candidate sets maintained incrementally.

use crate::error::{Error, Result};
use crate::net::Network;
use crate::perm::ChannelPermutation;
use crate::word::OutputSet;

/// Searches for a permutation with `pi(outputs(a)) subseteq outputs(b)`.
/// The returned witness is re-checked by direct set computation.
pub fn subsumes(a: &Network, b: &Network) -> Result<Option<ChannelPermutation>> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch { expected: a.n(), got: b.n() });
    }
    Ok(find_embedding(&a.outputs()?, &b.outputs()?))
}

/// Searches for a permutation with `pi(sorts(a)) subseteq sorts(b)`.
pub fn cosubsumes(a: &Network, b: &Network) -> Result<Option<ChannelPermutation>> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch { expected: a.n(), got: b.n() });
    }
    Ok(find_embedding(&a.sorts_set()?, &b.sorts_set()?))
}

/// Finds a permutation mapping `source` into a subset of `target`, if any.
pub fn find_embedding(source: &OutputSet, target: &OutputSet) -> Option<ChannelPermutation> {
    debug_assert_eq!(source.n(), target.n());
    let n = source.n();
    if source.len() > target.len() {
        return None;
    }
    if source.is_empty() {
        return Some(ChannelPermutation::identity(n).expect("n validated"));
    }

    // Permutations preserve popcount, so each class must embed on its own.
    let source_profile = source.popcount_profile();
    let target_profile = target.popcount_profile();
    if source_profile.iter().zip(&target_profile).any(|(s, t)| s > t) {
        return None;
    }

    let search = Search::new(n, source, target, &source_profile, &target_profile)?;
    let perm = search.run()?;
    // Independent confirmation of the witness.
    let image = source.permuted(&perm).expect("permutation sized to the set");
    debug_assert!(image.is_subset_of(target));
    if image.is_subset_of(target) {
        Some(perm)
    } else {
        None
    }
}

/// Bitset over target-word indices.
type WordMask = Vec<u64>;

struct Search<'a> {
    n: usize,
    source: &'a OutputSet,
    /// Candidate target channels per source channel, from signature pruning.
    candidates: Vec<Vec<usize>>,
    /// Source channels in most-constrained-first order.
    order: Vec<usize>,
    /// For each target channel, the mask of target words with a one there.
    target_ones: Vec<WordMask>,
    /// For each source word, the mask of same-popcount target words.
    class_masks: Vec<WordMask>,
    mask_len: usize,
}

impl<'a> Search<'a> {
    fn new(
        n: usize,
        source: &'a OutputSet,
        target: &OutputSet,
        source_profile: &[usize],
        target_profile: &[usize],
    ) -> Option<Self> {
        let mask_len = target.len().div_ceil(64);
        let mut target_ones = vec![vec![0u64; mask_len]; n];
        for (idx, &w) in target.words().iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let ch = bits.trailing_zeros() as usize;
                target_ones[ch][idx / 64] |= 1 << (idx % 64);
                bits &= bits - 1;
            }
        }

        let mut class_mask_by_popcount = vec![vec![0u64; mask_len]; n + 1];
        for (idx, &w) in target.words().iter().enumerate() {
            class_mask_by_popcount[w.count_ones() as usize][idx / 64] |= 1 << (idx % 64);
        }
        let class_masks = source
            .words()
            .iter()
            .map(|&w| class_mask_by_popcount[w.count_ones() as usize].clone())
            .collect();

        // Per-channel, per-popcount one-counts; an assignment i -> j must not
        // demand more ones (or more zeros) in any class than j offers.
        let ones_sig = |set: &OutputSet| {
            let mut sig = vec![vec![0usize; set.n() + 1]; set.n()];
            for &w in set.words() {
                let p = w.count_ones() as usize;
                let mut bits = w;
                while bits != 0 {
                    sig[bits.trailing_zeros() as usize][p] += 1;
                    bits &= bits - 1;
                }
            }
            sig
        };
        let source_sig = ones_sig(source);
        let target_sig = ones_sig(target);

        let mut candidates = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                let ok = (0..=n).all(|p| {
                    source_sig[i][p] <= target_sig[j][p]
                        && source_profile[p] - source_sig[i][p]
                            <= target_profile[p] - target_sig[j][p]
                });
                if ok {
                    candidates[i].push(j);
                }
            }
            if candidates[i].is_empty() {
                return None;
            }
        }

        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| candidates[i].len());

        Some(Search { n, source, candidates, order, target_ones, class_masks, mask_len })
    }

    fn run(&self) -> Option<ChannelPermutation> {
        let mut assignment = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        let word_masks = self.class_masks.clone();
        if self.assign(0, &mut assignment, &mut used, &word_masks) {
            let images: Vec<usize> = assignment.iter().map(|&j| j + 1).collect();
            Some(ChannelPermutation::from_one_based(&images).expect("search yields a bijection"))
        } else {
            None
        }
    }

    fn assign(
        &self,
        depth: usize,
        assignment: &mut [usize],
        used: &mut [bool],
        word_masks: &[WordMask],
    ) -> bool {
        let Some(&i) = self.order.get(depth) else {
            return true;
        };
        'next_candidate: for &j in &self.candidates[i] {
            if used[j] {
                continue;
            }
            // Restrict every source word to target words that agree on
            // channel j; an empty candidate set kills this branch.
            let mut narrowed = word_masks.to_vec();
            for (w_idx, &w) in self.source.words().iter().enumerate() {
                let bit_set = w >> i & 1 == 1;
                let ones = &self.target_ones[j];
                let mask = &mut narrowed[w_idx];
                let mut any = 0u64;
                for k in 0..self.mask_len {
                    if bit_set {
                        mask[k] &= ones[k];
                    } else {
                        mask[k] &= !ones[k];
                    }
                    any |= mask[k];
                }
                if any == 0 {
                    continue 'next_candidate;
                }
            }
            assignment[i] = j;
            used[j] = true;
            if self.assign(depth + 1, assignment, used, &narrowed) {
                return true;
            }
            assignment[i] = usize::MAX;
            used[j] = false;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::Network;

    fn five_channel_example() -> Network {
        crate::format::parse_text("1:2 3:4; 2:4 3:5; 1:3 2:5; 2:3 4:5; 3:4", None).unwrap()
    }

    #[test]
    fn subsumption_is_reflexive() {
        let net = five_channel_example();
        let witness = subsumes(&net, &net).unwrap().expect("self-subsumption");
        let outs = net.outputs().unwrap();
        assert!(outs.permuted(&witness).unwrap().is_subset_of(&outs));
    }

    #[test]
    fn cardinality_obstruction() {
        // A two-layer prefix has no more outputs than its first layer alone.
        let one = Network::from_layer_pairs(4, &[&[(1, 2), (3, 4)]]).unwrap();
        let two = Network::from_layer_pairs(4, &[&[(1, 2), (3, 4)], &[(2, 3)]]).unwrap();
        assert!(two.outputs().unwrap().len() < one.outputs().unwrap().len());
        assert!(subsumes(&two, &one).unwrap().is_some());
        assert!(subsumes(&one, &two).unwrap().is_none());
    }

    #[test]
    fn witness_respects_inclusion_on_permuted_pairs() {
        let base = Network::from_layer_pairs(5, &[&[(1, 2), (3, 4)], &[(1, 3), (2, 5)]]).unwrap();
        let perm = ChannelPermutation::from_one_based(&[3, 1, 4, 5, 2]).unwrap();
        let other = base.permuted(&perm).unwrap().standardize_forward();
        let witness = subsumes(&base, &other).unwrap().expect("permuted prefix subsumes");
        let image = base.outputs().unwrap().permuted(&witness).unwrap();
        assert!(image.is_subset_of(&other.outputs().unwrap()));
    }

    #[test]
    fn cosubsumption_reflexive_and_extension() {
        let layer = Network::from_layer_pairs(5, &[&[(3, 4)]]).unwrap();
        assert!(cosubsumes(&layer, &layer).unwrap().is_some());
        // Appending a layer only grows the sorts-set, so identity embeds.
        let extended = Network::from_layer_pairs(5, &[&[(3, 4)], &[(1, 2)]]).unwrap();
        assert!(cosubsumes(&layer, &extended).unwrap().is_some());
    }

    #[test]
    fn full_cube_sorts_set_needs_sorting_target() {
        let sorter = five_channel_example();
        let not_sorter = Network::from_layer_pairs(5, &[&[(1, 2)]]).unwrap();
        assert_eq!(sorter.sorts_set().unwrap().len(), 32);
        assert!(cosubsumes(&sorter, &not_sorter).unwrap().is_none());
        assert!(cosubsumes(&not_sorter, &sorter).unwrap().is_some());
    }
}
