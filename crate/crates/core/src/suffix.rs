//! Structure of the end of a network: k-blocks, last-layer normal form,
//! co-saturation, validators for the necessary suffix conditions, and
//! enumeration of admissible last layers and two-layer suffixes.

use crate::error::{Error, Result};
use crate::net::{Comparator, Layer, Network};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The partition of channels into k-blocks: connected components of the
/// channel graph induced by comparators strictly after layer k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPartition {
    pub k: usize,
    /// Blocks ordered by least channel; each block sorted ascending.
    blocks: Vec<Vec<usize>>,
}

impl BlockPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, channel: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&channel))
            .expect("blocks partition the channels")
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// True when every block is a set of consecutive channels.
    pub fn all_intervals(&self) -> bool {
        self.blocks.iter().all(|b| b.last().unwrap() - b.first().unwrap() + 1 == b.len())
    }
}

/// Connected components of the channels linked by layers k+1..d.
/// `k = depth - 1` gives the plain blocks.
pub fn k_blocks(net: &Network, k: usize) -> Result<BlockPartition> {
    if k >= net.depth() {
        return Err(Error::LayerOutOfRange { index: k, depth: net.depth() });
    }
    let mut parent: Vec<usize> = (0..net.n()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for layer in &net.layers()[k..] {
        for c in layer.iter() {
            let a = find(&mut parent, c.top() - 1);
            let b = find(&mut parent, c.bottom() - 1);
            if a != b {
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); net.n()];
    for ch in 0..net.n() {
        let root = find(&mut parent, ch);
        groups[root].push(ch + 1);
    }
    let mut blocks: Vec<Vec<usize>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
    blocks.sort_by_key(|b| b[0]);
    Ok(BlockPartition { k, blocks })
}

/// Checks that on the given input, at most one k-block receives both
/// zeros and ones, for every k. Requires a sorting network.
pub fn mixed_block_check(net: &Network, input: &crate::word::BitWord) -> Result<bool> {
    if !net.is_sorting_network() {
        return Err(Error::NotSorting);
    }
    let trace = net.trace(input)?;
    for k in 0..net.depth() {
        let partition = k_blocks(net, k)?;
        let values = &trace[k];
        let mixed = partition
            .blocks()
            .iter()
            .filter(|block| {
                let mut zeros = false;
                let mut ones = false;
                for &ch in *block {
                    if values.get(ch) {
                        ones = true;
                    } else {
                        zeros = true;
                    }
                }
                zeros && ones
            })
            .count();
        if mixed > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A violated necessary condition on the last two layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuffixViolation {
    /// Last-layer comparator spanning non-adjacent channels.
    NonAdjacentLastLayer(Comparator),
    /// Penultimate comparator more than three channels wide.
    PenultimateTooWide(Comparator),
    /// Penultimate (i, i+2) without (i, i+1) or (i+1, i+2) in the last layer.
    PenultimateSpanTwo(Comparator),
    /// Penultimate (i, i+3) without both (i, i+1) and (i+2, i+3) below.
    PenultimateSpanThree(Comparator),
}

impl fmt::Display for SuffixViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuffixViolation::NonAdjacentLastLayer(c) => {
                write!(f, "last layer has non-adjacent comparator {c}")
            }
            SuffixViolation::PenultimateTooWide(c) => {
                write!(f, "penultimate comparator {c} spans more than 3 channels")
            }
            SuffixViolation::PenultimateSpanTwo(c) => write!(
                f,
                "penultimate {c} lacks a last-layer comparator on either adjacent pair below it"
            ),
            SuffixViolation::PenultimateSpanThree(c) => write!(
                f,
                "penultimate {c} lacks the two last-layer comparators it implies"
            ),
        }
    }
}

/// Checks the necessary conditions every non-redundant sorting network
/// satisfies: adjacent-only last layer, and penultimate comparators at most
/// three channels wide with their last-layer implications.
pub fn validate_suffix_conditions(net: &Network) -> Vec<SuffixViolation> {
    let mut violations = Vec::new();
    let d = net.depth();
    if d == 0 {
        return violations;
    }
    let last = &net.layers()[d - 1];
    for c in last.iter() {
        if c.max_channel() - c.min_channel() != 1 {
            violations.push(SuffixViolation::NonAdjacentLastLayer(*c));
        }
    }
    if d >= 2 {
        let has_last = |i: usize, j: usize| {
            Comparator::new(i, j).is_ok_and(|c| last.contains(&c))
        };
        for c in net.layers()[d - 2].iter() {
            let i = c.min_channel();
            let span = c.max_channel() - i;
            match span {
                0 | 1 => {}
                2 => {
                    if !has_last(i, i + 1) && !has_last(i + 1, i + 2) {
                        violations.push(SuffixViolation::PenultimateSpanTwo(*c));
                    }
                }
                3 => {
                    if !(has_last(i, i + 1) && has_last(i + 2, i + 3)) {
                        violations.push(SuffixViolation::PenultimateSpanThree(*c));
                    }
                }
                _ => violations.push(SuffixViolation::PenultimateTooWide(*c)),
            }
        }
    }
    violations
}

fn last_layer_uses(net: &Network, channel: usize) -> bool {
    net.last_layer().is_some_and(|l| l.uses_channel(channel))
}

/// Adds `(j, j+1)` to the last layer wherever channels j and j+1 are both
/// unused, scanning left to right. For a sorting network every such
/// addition is redundant.
fn fill_last_layer(net: &mut Network) {
    let n = net.n();
    for j in 1..n {
        if !last_layer_uses(net, j) && !last_layer_uses(net, j + 1) {
            let d = net.depth();
            let mut comps: Vec<Comparator> = net.layers()[d - 1].comparators().to_vec();
            comps.push(Comparator::new(j, j + 1).expect("adjacent pair"));
            let layer = Layer::new(comps).expect("both channels unused");
            replace_layer(net, d - 1, layer);
        }
    }
}

fn replace_layer(net: &mut Network, index: usize, layer: Layer) {
    let mut layers = net.layers().to_vec();
    layers[index] = layer;
    *net = Network::new(net.n(), layers).expect("same channel count");
}

/// Rewrites a sorting network into last layer normal form: an adjacent-only
/// last layer with no two adjacent unused channels, preserving depth and
/// the sorting property.
pub fn to_llnf(net: &Network) -> Result<Network> {
    if !net.is_sorting_network() {
        return Err(Error::NotSorting);
    }
    let target_depth = net.depth();
    let mut result = net.remove_redundant()?;
    // Removal may have dropped whole layers; pad with redundant adjacent
    // fills to keep the depth.
    while result.depth() < target_depth {
        result.push_layer(Layer::empty())?;
        fill_last_layer(&mut result);
    }
    fill_last_layer(&mut result);
    debug_assert!(is_llnf(&result));
    debug_assert!(result.is_sorting_network());
    Ok(result)
}

/// Last layer normal form: only adjacent comparators in the last layer, and
/// no two adjacent channels both unused there.
pub fn is_llnf(net: &Network) -> bool {
    let Some(last) = net.last_layer() else {
        return net.n() == 1;
    };
    if last.iter().any(|c| c.max_channel() - c.min_channel() != 1) {
        return false;
    }
    (1..net.n()).all(|j| last.uses_channel(j) || last.uses_channel(j + 1))
}

fn penult_uses(net: &Network, channel: usize) -> bool {
    let d = net.depth();
    d >= 2 && net.layers()[d - 2].uses_channel(channel)
}

/// Co-saturation: llnf, plus (ii) no two consecutive blocks with channels
/// unused at the penultimate layer, and (iii) every last-layer comparator
/// untouched at the penultimate layer has used neighbors in the last layer.
pub fn is_cosaturated(net: &Network) -> bool {
    if !is_llnf(net) {
        return false;
    }
    let d = net.depth();
    if d == 0 {
        return net.n() == 1;
    }
    let blocks = k_blocks(net, d - 1).expect("depth checked");
    let block_free = |block: &Vec<usize>| block.iter().any(|&ch| !penult_uses(net, ch));
    for pair in blocks.blocks().windows(2) {
        if block_free(&pair[0]) && block_free(&pair[1]) {
            return false;
        }
    }
    let last = net.last_layer().expect("depth checked");
    for c in last.iter() {
        let i = c.min_channel();
        if !penult_uses(net, i) && !penult_uses(net, i + 1) {
            if i > 1 && !last.uses_channel(i - 1) {
                return false;
            }
            if i + 2 <= net.n() && !last.uses_channel(i + 2) {
                return false;
            }
        }
    }
    true
}

/// Rewrites a sorting network into a co-saturated one of the same depth:
/// llnf first, then redundant penultimate links between consecutive blocks
/// with free channels, then the move-and-refill rewrite until the
/// co-saturation conditions hold. Rewrites scan left to right.
pub fn cosaturate(net: &Network) -> Result<Network> {
    let mut current = to_llnf(net)?;
    if current.depth() < 2 {
        return Ok(current);
    }
    loop {
        fill_last_layer(&mut current);
        link_free_blocks(&mut current);
        if !rewrite_one_untouched_comparator(&mut current)? {
            break;
        }
    }
    debug_assert!(is_cosaturated(&current));
    if !current.is_sorting_network() {
        return Err(Error::NotSorting);
    }
    Ok(current)
}

/// Adds penultimate comparators between consecutive blocks while both have
/// channels unused at the penultimate layer; such additions are redundant.
fn link_free_blocks(net: &mut Network) {
    let d = net.depth();
    loop {
        let blocks = k_blocks(net, d - 1).expect("depth >= 2");
        let free_channels = |block: &Vec<usize>| -> Vec<usize> {
            block.iter().copied().filter(|&ch| !penult_uses(net, ch)).collect()
        };
        let mut addition = None;
        for pair in blocks.blocks().windows(2) {
            let left = free_channels(&pair[0]);
            let right = free_channels(&pair[1]);
            if let (Some(&u), Some(&v)) = (left.last(), right.first()) {
                addition = Some(Comparator::new(u, v).expect("distinct blocks"));
                break;
            }
        }
        match addition {
            Some(c) => {
                let mut comps = net.layers()[d - 2].comparators().to_vec();
                comps.push(c);
                let layer = Layer::new(comps).expect("both endpoints were free");
                replace_layer(net, d - 2, layer);
            }
            None => return,
        }
    }
}

/// Finds the leftmost last-layer comparator violating condition (iii) and
/// moves it to the penultimate layer, refilling the last layer. Returns
/// whether a rewrite happened.
fn rewrite_one_untouched_comparator(net: &mut Network) -> Result<bool> {
    let d = net.depth();
    let n = net.n();
    let last = net.layers()[d - 1].clone();
    for c in last.iter() {
        let i = c.min_channel();
        if penult_uses(net, i) || penult_uses(net, i + 1) {
            continue;
        }
        let left_gap = i > 1 && !last.uses_channel(i - 1);
        let right_gap = i + 2 <= n && !last.uses_channel(i + 2);
        if !left_gap && !right_gap {
            continue;
        }
        // Move (i, i+1) to the penultimate layer; both its channels are
        // unused there, so the function is unchanged. The refill then adds
        // the redundant adjacent comparators the move exposed.
        let mut penult = net.layers()[d - 2].comparators().to_vec();
        penult.push(*c);
        let remaining: Vec<Comparator> =
            last.iter().filter(|x| *x != c).copied().collect();
        replace_layer(net, d - 2, Layer::new(penult).expect("channels free at d-1"));
        replace_layer(net, d - 1, Layer::new(remaining).expect("subset of a layer"));
        fill_last_layer(net);
        return Ok(true);
    }
    Ok(false)
}

/// What a report enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnumerationKind {
    /// Non-empty adjacent-only last layers.
    #[serde(rename = "nonredundant")]
    NonRedundantLastLayer,
    /// Last layers in last layer normal form.
    #[serde(rename = "llnf")]
    LlnfLastLayer,
    /// Co-saturated two-layer suffixes.
    #[serde(rename = "cosat")]
    CosaturatedSuffix,
}

/// Count (and optionally the items) of an enumeration.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub kind: EnumerationKind,
    pub count: u64,
    /// Last layers as one-layer networks, suffixes as two-layer networks
    /// (penultimate layer possibly empty). Only present when materialized.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub items: Option<Vec<Network>>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum LastLayerMode {
    NonRedundant,
    Llnf,
}

/// Enumerates admissible last layers on n channels. Non-redundant mode
/// counts non-empty layers of adjacent comparators; llnf mode additionally
/// forbids two adjacent unused channels (and admits the empty layer when it
/// qualifies, which happens only for n = 1).
pub fn enumerate_last_layers(
    n: usize,
    mode: LastLayerMode,
    materialize: bool,
) -> Result<EnumerationReport> {
    crate::word::check_channels(n)?;
    struct Walk<'a> {
        n: usize,
        mode: LastLayerMode,
        count: u64,
        items: &'a mut Option<Vec<Network>>,
    }
    impl Walk<'_> {
        /// `channel` is the next undecided channel; `prev_unused` says
        /// whether the channel just below it was left unused.
        fn go(&mut self, channel: usize, prev_unused: bool, comps: &mut Vec<Comparator>) {
            if channel > self.n {
                let admissible = match self.mode {
                    LastLayerMode::NonRedundant => !comps.is_empty(),
                    LastLayerMode::Llnf => true,
                };
                if admissible {
                    self.count += 1;
                    if let Some(items) = self.items {
                        let layer = Layer::new(comps.clone()).expect("disjoint by construction");
                        items.push(Network::new(self.n, vec![layer]).expect("valid"));
                    }
                }
                return;
            }
            // Leave `channel` unused, unless llnf forbids two in a row.
            if !(self.mode == LastLayerMode::Llnf && prev_unused) {
                self.go(channel + 1, true, comps);
            }
            // Or place the comparator (channel, channel + 1).
            if channel < self.n {
                comps.push(Comparator::new(channel, channel + 1).expect("adjacent"));
                self.go(channel + 2, false, comps);
                comps.pop();
            }
        }
    }
    let mut items = materialize.then(Vec::new);
    let mut walk = Walk { n, mode, count: 0, items: &mut items };
    walk.go(1, false, &mut Vec::new());
    let count = walk.count;
    let kind = match mode {
        LastLayerMode::NonRedundant => EnumerationKind::NonRedundantLastLayer,
        LastLayerMode::Llnf => EnumerationKind::LlnfLastLayer,
    };
    Ok(EnumerationReport { n, kind, count, items })
}

/// Enumerates the distinct co-saturated two-layer suffixes on n channels.
///
/// A suffix is a pair (penultimate layer, last layer) where the last layer
/// is a non-empty llnf layer, every penultimate comparator connects two
/// channels in adjacent blocks of the last layer, no two consecutive blocks
/// both have channels unused at the penultimate layer, and a last-layer
/// comparator untouched at the penultimate layer has its existing neighbor
/// channels used in the last layer. The penultimate layer may be empty.
pub fn enumerate_cosat_suffixes(n: usize, materialize: bool) -> Result<EnumerationReport> {
    if n < 3 {
        return Err(Error::TooFewChannels { min: 3, got: n });
    }
    crate::word::check_channels(n)?;
    let last_layers = enumerate_last_layers(n, LastLayerMode::Llnf, true)?
        .items
        .expect("materialized");
    let mut count = 0u64;
    let mut items = materialize.then(Vec::new);
    for last_net in &last_layers {
        let last = &last_net.layers()[0];
        if last.is_empty() {
            continue;
        }
        let blocks: Vec<Vec<usize>> =
            k_blocks(last_net, 0)?.blocks().to_vec();
        // Pair blocks must be touched by the penultimate layer whenever
        // condition (iii) would otherwise fail against this last layer.
        let must_touch: Vec<bool> = blocks
            .iter()
            .map(|block| {
                if block.len() != 2 {
                    return false;
                }
                let i = block[0];
                let left_ok = i == 1 || last.uses_channel(i - 1);
                let right_ok = i + 2 > n || last.uses_channel(i + 2);
                !(left_ok && right_ok)
            })
            .collect();
        count += count_penultimate_choices(
            last_net,
            last,
            &blocks,
            &must_touch,
            &mut items,
        );
    }
    Ok(EnumerationReport { n, kind: EnumerationKind::CosaturatedSuffix, count, items })
}

/// Walks the gaps between consecutive blocks left to right, choosing the
/// penultimate comparators crossing each gap, and counts the completions
/// satisfying the co-saturation side conditions.
fn count_penultimate_choices(
    last_net: &Network,
    last: &Layer,
    blocks: &[Vec<usize>],
    must_touch: &[bool],
    items: &mut Option<Vec<Network>>,
) -> u64 {
    struct Walk<'a> {
        last_net: &'a Network,
        last: &'a Layer,
        blocks: &'a [Vec<usize>],
        must_touch: &'a [bool],
        count: u64,
        items: &'a mut Option<Vec<Network>>,
    }
    impl Walk<'_> {
        fn free(&self, block: usize, used: u64) -> bool {
            self.blocks[block].iter().any(|&ch| used >> (ch - 1) & 1 == 0)
        }

        /// `gap` separates blocks `gap - 1` and `gap`; `used` is the mask of
        /// channels taken by chosen comparators so far.
        fn go(&mut self, gap: usize, used: u64, chosen: &mut Vec<Comparator>) {
            if gap == self.blocks.len() {
                // All gaps decided: check per-block conditions.
                for b in 0..self.blocks.len() {
                    let free = self.free(b, used);
                    if b > 0 && free && self.free(b - 1, used) {
                        return;
                    }
                    let untouched =
                        self.blocks[b].iter().all(|&ch| used >> (ch - 1) & 1 == 0);
                    if untouched && self.must_touch[b] {
                        return;
                    }
                }
                self.count += 1;
                if let Some(items) = self.items {
                    let penult = Layer::new(chosen.clone()).expect("disjoint by construction");
                    items.push(
                        Network::new(
                            self.last_net.n(),
                            vec![penult, self.last.clone()],
                        )
                        .expect("valid"),
                    );
                }
                return;
            }
            // Candidate comparators across this gap, in channel order; take
            // any disjoint subset (including none).
            let left = &self.blocks[gap - 1];
            let right = &self.blocks[gap];
            let mut pairs = Vec::new();
            for &u in left {
                for &v in right {
                    pairs.push((u, v));
                }
            }
            self.subsets(gap, 0, used, &pairs, chosen);
        }

        fn subsets(
            &mut self,
            gap: usize,
            from: usize,
            used: u64,
            pairs: &[(usize, usize)],
            chosen: &mut Vec<Comparator>,
        ) {
            self.go(gap + 1, used, chosen);
            for idx in from..pairs.len() {
                let (u, v) = pairs[idx];
                let mask = 1 << (u - 1) | 1 << (v - 1);
                if used & mask != 0 {
                    continue;
                }
                chosen.push(Comparator::new(u, v).expect("cross-block pair"));
                self.subsets(gap, idx + 1, used | mask, pairs, chosen);
                chosen.pop();
            }
        }
    }
    let mut walk = Walk { last_net, last, blocks, must_touch, count: 0, items };
    walk.go(1, 0, &mut Vec::new());
    walk.count
}

#[cfg(test)]
mod enumeration_tests {
    use super::*;

    /// F_1 = F_2 = 1.
    fn fib(n: usize) -> u64 {
        let (mut a, mut b) = (1u64, 1u64);
        for _ in 3..=n {
            let c = a + b;
            a = b;
            b = c;
        }
        match n {
            0 => 0,
            _ => b,
        }
    }

    fn padovan(n: usize) -> u64 {
        let mut p = vec![1u64, 0, 0];
        for i in 3..=n {
            let v = p[i - 2] + p[i - 3];
            p.push(v);
        }
        p[n]
    }

    #[test]
    fn last_layer_counts_match_recurrences() {
        for n in 1..=25 {
            let nonred = enumerate_last_layers(n, LastLayerMode::NonRedundant, false).unwrap();
            assert_eq!(nonred.count, fib(n + 1) - 1, "nonredundant count at n={n}");
            let llnf = enumerate_last_layers(n, LastLayerMode::Llnf, false).unwrap();
            assert_eq!(llnf.count, padovan(n + 5), "llnf count at n={n}");
        }
    }

    #[test]
    fn seventeen_channel_counts() {
        assert_eq!(
            enumerate_last_layers(17, LastLayerMode::NonRedundant, false).unwrap().count,
            2583
        );
        assert_eq!(enumerate_last_layers(17, LastLayerMode::Llnf, false).unwrap().count, 86);
        assert_eq!(enumerate_last_layers(3, LastLayerMode::Llnf, false).unwrap().count, 2);
    }

    #[test]
    fn materialized_items_match_count_and_mode() {
        let report = enumerate_last_layers(6, LastLayerMode::Llnf, true).unwrap();
        let items = report.items.unwrap();
        assert_eq!(items.len() as u64, report.count);
        for net in &items {
            assert!(is_llnf(net), "item {net:?}");
        }
    }

    /// Published counts of distinct co-saturated two-layer suffixes.
    const COSAT_COUNTS: [(usize, u64); 18] = [
        (3, 4),
        (4, 4),
        (5, 12),
        (6, 26),
        (7, 44),
        (8, 86),
        (9, 180),
        (10, 376),
        (11, 700),
        (12, 1_440),
        (13, 2_892),
        (14, 5_676),
        (15, 11_488),
        (16, 22_848),
        (17, 45_664),
        (18, 90_976),
        (19, 182_112),
        (20, 363_896),
    ];

    #[test]
    fn cosat_suffix_counts_small() {
        for &(n, expected) in COSAT_COUNTS.iter().take(8) {
            let report = enumerate_cosat_suffixes(n, false).unwrap();
            assert_eq!(report.count, expected, "co-saturated suffixes at n={n}");
        }
    }

    #[test]
    fn cosat_suffix_counts_large() {
        for &(n, expected) in COSAT_COUNTS.iter().skip(8) {
            let report = enumerate_cosat_suffixes(n, false).unwrap();
            assert_eq!(report.count, expected, "co-saturated suffixes at n={n}");
        }
    }

    #[test]
    fn cosat_suffix_items_pass_the_predicate_checks() {
        let report = enumerate_cosat_suffixes(6, true).unwrap();
        let items = report.items.unwrap();
        assert_eq!(items.len() as u64, report.count);
        for suffix in &items {
            assert_eq!(suffix.depth(), 2);
            assert!(is_llnf(suffix), "last layer of {suffix:?}");
            for c in suffix.layers()[0].iter() {
                assert!(c.max_channel() - c.min_channel() <= 3);
            }
        }
        // Distinctness as (penultimate, last) pairs.
        let mut texts: Vec<String> =
            items.iter().map(|s| format!("{s:?}")).collect();
        texts.sort();
        texts.dedup();
        assert_eq!(texts.len(), items.len());
    }
}

#[cfg(test)]
mod structure_tests {
    use super::*;
    use crate::format::parse_text;
    use crate::word::BitWord;

    fn five_channel_example() -> Network {
        parse_text("1:2 3:4; 2:4 3:5; 1:3 2:5; 2:3 4:5; 3:4", None).unwrap()
    }

    #[test]
    fn blocks_of_the_example() {
        let net = five_channel_example();
        let b4 = k_blocks(&net, 4).unwrap();
        assert_eq!(b4.blocks(), &[vec![1], vec![2], vec![3, 4], vec![5]]);
        let b3 = k_blocks(&net, 3).unwrap();
        assert_eq!(b3.blocks(), &[vec![1], vec![2, 3, 4, 5]]);
        for k in 0..3 {
            assert_eq!(k_blocks(&net, k).unwrap().blocks(), &[vec![1, 2, 3, 4, 5]]);
        }
        assert!(k_blocks(&net, 5).is_err());
        assert!(b4.all_intervals());
    }

    #[test]
    fn blocks_with_unused_channels_are_singletons() {
        let net = Network::from_layer_pairs(5, &[&[(1, 2)], &[(3, 4)]]).unwrap();
        let blocks = k_blocks(&net, 1).unwrap();
        assert_eq!(blocks.blocks(), &[vec![1], vec![2], vec![3, 4], vec![5]]);
    }

    #[test]
    fn mixed_blocks_bounded_on_example() {
        let net = five_channel_example();
        for bits in 0..32u64 {
            let input = BitWord::new(5, bits).unwrap();
            assert!(mixed_block_check(&net, &input).unwrap(), "input {input}");
        }
        let not_sorting = Network::from_layer_pairs(5, &[&[(1, 2)]]).unwrap();
        assert!(mixed_block_check(&not_sorting, &BitWord::zero(5).unwrap()).is_err());
    }

    #[test]
    fn suffix_conditions_on_catalog_style_networks() {
        assert!(validate_suffix_conditions(&five_channel_example()).is_empty());
        // A last-layer comparator spanning two channels is flagged.
        let bad = Network::from_layer_pairs(3, &[&[(1, 2)], &[(1, 3)]]).unwrap();
        let violations = validate_suffix_conditions(&bad);
        assert_eq!(violations.len(), 1);
        assert!(matches!(violations[0], SuffixViolation::NonAdjacentLastLayer(_)));
    }

    #[test]
    fn tight_penultimate_networks_pass() {
        // Depth-3 sorter on 4 channels with (1,4) in its penultimate layer.
        let four = parse_text("2:4 1:3; 1:4 2:3; 1:2 3:4", None).unwrap();
        assert!(four.is_sorting_network());
        assert!(validate_suffix_conditions(&four).is_empty());
        // Depth-5 sorter on 5 channels with (1,4) in its penultimate layer.
        let five = parse_text("4:5 2:3; 2:4 1:3; 4:5; 3:5 1:4; 1:2 3:4", None).unwrap();
        assert!(five.is_sorting_network());
        assert!(validate_suffix_conditions(&five).is_empty());
    }

    #[test]
    fn llnf_completion_of_the_example() {
        let net = five_channel_example();
        let llnf = to_llnf(&net).unwrap();
        assert_eq!(llnf.depth(), net.depth());
        assert!(is_llnf(&llnf));
        assert!(llnf.is_sorting_network());
        let last = llnf.last_layer().unwrap();
        assert!(last.contains(&Comparator::new(1, 2).unwrap()));
        assert!(last.contains(&Comparator::new(3, 4).unwrap()));
        // Already in llnf: unchanged.
        assert_eq!(to_llnf(&llnf).unwrap(), llnf);
        // Each added last-layer comparator is redundant.
        let added = Comparator::new(1, 2).unwrap();
        assert!(llnf.is_redundant(llnf.depth() - 1, &added).unwrap());
    }

    #[test]
    fn llnf_rejects_shapes() {
        let gap = Network::from_layer_pairs(4, &[&[(1, 2)]]).unwrap();
        assert!(!is_llnf(&gap)); // channels 3,4 unused and adjacent
        let wide = Network::from_layer_pairs(4, &[&[(1, 4), (2, 3)]]).unwrap();
        assert!(!is_llnf(&wide));
    }

    #[test]
    fn cosaturate_example_and_idempotence() {
        let net = five_channel_example();
        let cosat = cosaturate(&net).unwrap();
        assert_eq!(cosat.depth(), net.depth());
        assert!(is_cosaturated(&cosat));
        assert!(cosat.is_sorting_network());
        assert_eq!(cosaturate(&cosat).unwrap(), cosat);
    }

    #[test]
    fn cosaturate_moves_untouched_comparators() {
        // Three channels: last layer (2,3), channel 1 used at the penultimate
        // layer, channels 2,3 free there. Condition (iii) forces a rewrite.
        let net = parse_text("1:2; 1:3; 2:3", None).unwrap();
        assert!(net.is_sorting_network());
        let cosat = cosaturate(&net).unwrap();
        assert!(is_cosaturated(&cosat));
        assert_eq!(cosat.depth(), 3);
        assert!(cosat.is_sorting_network());
    }
}
