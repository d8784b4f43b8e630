//! Comparator networks: layers of disjoint compare-exchange gates.
//!
//! A comparator `(top, bottom)` routes the minimum of its two channel values
//! to `top` and the maximum to `bottom`. Standard comparators have
//! `top < bottom`; a reversed pair marks a *generalized* comparator, which
//! evaluates by the same min-to-top rule so that `sorts_set` stays
//! well-defined before standardization.

use crate::error::{Error, Result};
use crate::perm::ChannelPermutation;
use crate::word::{self, BitWord, OutputSet, WindowStats};

/// One compare-exchange gate. Channels are 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Comparator {
    top: usize,
    bottom: usize,
}

impl Comparator {
    pub fn new(top: usize, bottom: usize) -> Result<Self> {
        if top == bottom {
            return Err(Error::DegenerateComparator { top, bottom });
        }
        if top == 0 || bottom == 0 {
            return Err(Error::ChannelOutOfRange { top, bottom, n: 0 });
        }
        Ok(Comparator { top, bottom })
    }

    /// Where the minimum goes.
    pub fn top(&self) -> usize {
        self.top
    }

    /// Where the maximum goes.
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn is_standard(&self) -> bool {
        self.top < self.bottom
    }

    pub fn min_channel(&self) -> usize {
        self.top.min(self.bottom)
    }

    pub fn max_channel(&self) -> usize {
        self.top.max(self.bottom)
    }

    pub fn touches(&self, channel: usize) -> bool {
        self.top == channel || self.bottom == channel
    }

    /// The same gate with min and max destinations exchanged.
    pub fn reversed(&self) -> Comparator {
        Comparator { top: self.bottom, bottom: self.top }
    }

    /// Renames both endpoints; the result may be generalized.
    pub fn permuted(&self, perm: &ChannelPermutation) -> Comparator {
        Comparator {
            top: perm.apply(self.top),
            bottom: perm.apply(self.bottom),
        }
    }
}

impl std::fmt::Debug for Comparator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.top, self.bottom)
    }
}

impl std::fmt::Display for Comparator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.top, self.bottom)
    }
}

/// A parallel set of comparators with pairwise disjoint endpoints, kept
/// sorted by lower endpoint. Empty layers are representable; they arise
/// from SAT model decoding and as the penultimate layer of enumerated
/// two-layer suffixes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Layer {
    comparators: Vec<Comparator>,
}

impl Layer {
    pub fn new(mut comparators: Vec<Comparator>) -> Result<Self> {
        comparators.sort_by_key(Comparator::min_channel);
        let mut used = 0u128;
        for c in &comparators {
            for ch in [c.top(), c.bottom()] {
                if used >> ch & 1 == 1 {
                    return Err(Error::OverlappingComparators { channel: ch });
                }
                used |= 1 << ch;
            }
        }
        Ok(Layer { comparators })
    }

    pub fn empty() -> Self {
        Layer { comparators: Vec::new() }
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Layer::new(pairs.iter().map(|&(t, b)| Comparator::new(t, b)).collect::<Result<_>>()?)
    }

    pub fn len(&self) -> usize {
        self.comparators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comparators.is_empty()
    }

    pub fn comparators(&self) -> &[Comparator] {
        &self.comparators
    }

    pub fn iter(&self) -> impl Iterator<Item = &Comparator> {
        self.comparators.iter()
    }

    pub fn contains(&self, c: &Comparator) -> bool {
        self.comparators.contains(c)
    }

    pub fn uses_channel(&self, channel: usize) -> bool {
        self.comparators.iter().any(|c| c.touches(channel))
    }

    pub fn comparator_on(&self, channel: usize) -> Option<&Comparator> {
        self.comparators.iter().find(|c| c.touches(channel))
    }

    /// Maximal means exactly floor(n / 2) comparators.
    pub fn is_maximal(&self, n: usize) -> bool {
        self.len() == n / 2
    }

    /// Bitmask of touched channels, channel i at bit i - 1.
    pub fn channel_mask(&self) -> u64 {
        self.comparators
            .iter()
            .fold(0, |m, c| m | 1 << (c.top() - 1) | 1 << (c.bottom() - 1))
    }

    fn max_channel(&self) -> usize {
        self.comparators.iter().map(Comparator::max_channel).max().unwrap_or(0)
    }
}

impl std::fmt::Debug for Layer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.comparators).finish()
    }
}

/// A comparator network: `n` channels and an ordered sequence of layers.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Network {
    n: usize,
    layers: Vec<Layer>,
}

impl Network {
    pub fn new(n: usize, layers: Vec<Layer>) -> Result<Self> {
        word::check_channels(n)?;
        for layer in &layers {
            if layer.max_channel() > n {
                let c = layer
                    .iter()
                    .find(|c| c.max_channel() > n)
                    .expect("max_channel came from some comparator");
                return Err(Error::ChannelOutOfRange { top: c.top(), bottom: c.bottom(), n });
            }
        }
        Ok(Network { n, layers })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Network::new(n, Vec::new())
    }

    /// Builds from layer pair lists, e.g. `&[&[(1, 2), (3, 4)], &[(2, 3)]]`.
    pub fn from_layer_pairs(n: usize, layers: &[&[(usize, usize)]]) -> Result<Self> {
        Network::new(
            n,
            layers.iter().map(|pairs| Layer::from_pairs(pairs)).collect::<Result<_>>()?,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn size(&self) -> usize {
        self.layers.iter().map(Layer::len).sum()
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn layer(&self, index: usize) -> Result<&Layer> {
        self.layers.get(index).ok_or(Error::LayerOutOfRange { index, depth: self.depth() })
    }

    pub fn last_layer(&self) -> Option<&Layer> {
        self.layers.last()
    }

    pub fn is_standard(&self) -> bool {
        self.layers.iter().all(|l| l.iter().all(Comparator::is_standard))
    }

    pub fn push_layer(&mut self, layer: Layer) -> Result<()> {
        if layer.max_channel() > self.n {
            let c = layer.iter().find(|c| c.max_channel() > self.n).expect("nonempty");
            return Err(Error::ChannelOutOfRange { top: c.top(), bottom: c.bottom(), n: self.n });
        }
        self.layers.push(layer);
        Ok(())
    }

    /// The first `depth` layers.
    pub fn prefix(&self, depth: usize) -> Network {
        Network { n: self.n, layers: self.layers[..depth.min(self.depth())].to_vec() }
    }

    /// The layers from index `from` on.
    pub fn suffix_from(&self, from: usize) -> Network {
        Network { n: self.n, layers: self.layers[from.min(self.depth())..].to_vec() }
    }

    pub fn concat(&self, suffix: &Network) -> Result<Network> {
        if suffix.n != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: suffix.n });
        }
        let mut layers = self.layers.clone();
        layers.extend(suffix.layers.iter().cloned());
        Ok(Network { n: self.n, layers })
    }

    /// Drops empty layers.
    pub fn compacted(&self) -> Network {
        Network {
            n: self.n,
            layers: self.layers.iter().filter(|l| !l.is_empty()).cloned().collect(),
        }
    }

    /// Runs one word through the network (min to `top`, max to `bottom`).
    pub fn apply_word(&self, mut bits: u64) -> u64 {
        for layer in &self.layers {
            for c in layer.iter() {
                let t = c.top() - 1;
                let b = c.bottom() - 1;
                let vt = bits >> t & 1;
                let vb = bits >> b & 1;
                bits = bits & !(1 << t) & !(1 << b) | (vt & vb) << t | (vt | vb) << b;
            }
        }
        bits
    }

    pub fn evaluate(&self, input: &BitWord) -> Result<BitWord> {
        if input.n() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: input.n() });
        }
        BitWord::new(self.n, self.apply_word(input.bits()))
    }

    /// The value vectors before layer 1 and after each layer; `trace[d]`
    /// is the network output.
    pub fn trace(&self, input: &BitWord) -> Result<Vec<BitWord>> {
        if input.n() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: input.n() });
        }
        let mut states = Vec::with_capacity(self.depth() + 1);
        let mut bits = input.bits();
        states.push(*input);
        for layer in &self.layers {
            for c in layer.iter() {
                let t = c.top() - 1;
                let b = c.bottom() - 1;
                let vt = bits >> t & 1;
                let vb = bits >> b & 1;
                bits = bits & !(1 << t) & !(1 << b) | (vt & vb) << t | (vt | vb) << b;
            }
            states.push(BitWord::new(self.n, bits)?);
        }
        Ok(states)
    }

    /// Image of a word list; input order is preserved and duplicates kept.
    pub fn eval_many(&self, words: &[u64]) -> Vec<u64> {
        let gates = self.gate_list();
        let mut out = Vec::with_capacity(words.len());
        let mut lanes = vec![0u64; self.n];
        for chunk in words.chunks(64) {
            transpose_into_lanes(chunk, &mut lanes);
            apply_gates(&gates, &mut lanes);
            for (t, _) in chunk.iter().enumerate() {
                out.push(collect_word(&lanes, t));
            }
        }
        out
    }

    /// The image of the full Boolean cube, deduplicated.
    pub fn outputs(&self) -> Result<OutputSet> {
        let mut words = self.outputs_raw()?;
        words.sort_unstable();
        words.dedup();
        Ok(OutputSet::from_sorted_words(self.n, words))
    }

    fn outputs_raw(&self) -> Result<Vec<u64>> {
        if self.n > 26 {
            return Err(Error::SizeGuard {
                what: "computing outputs over the full cube",
                limit: 26,
                n: self.n,
                alternative: "eval_many on an explicit input set",
            });
        }
        let gates = self.gate_list();
        let mut words = Vec::with_capacity(1usize << self.n);
        let mut lanes = vec![0u64; self.n];
        let inputs = 1usize << self.n;
        for block in 0..inputs.div_ceil(64) {
            fill_cube_lanes(block as u64, self.n, &mut lanes);
            apply_gates(&gates, &mut lanes);
            let in_block = (inputs - block * 64).min(64);
            for t in 0..in_block {
                words.push(collect_word(&lanes, t));
            }
        }
        Ok(words)
    }

    /// Image of an output set under this network.
    pub fn outputs_of(&self, inputs: &OutputSet) -> Result<OutputSet> {
        if inputs.n() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: inputs.n() });
        }
        OutputSet::from_words(self.n, self.eval_many(inputs.words()))
    }

    /// Zero-one principle check: sorts every Boolean input.
    ///
    /// Evaluates 64 inputs per word-operation and exits on the first
    /// violation, so the full 2^20 check stays well under a second.
    pub fn is_sorting_network(&self) -> bool {
        let gates = self.gate_list();
        let inputs: u128 = 1u128 << self.n;
        let blocks = inputs.div_ceil(64) as u64;
        let valid = if self.n >= 6 { !0u64 } else { (1u64 << (1u32 << self.n)) - 1 };
        let mut lanes = vec![0u64; self.n];
        for block in 0..blocks {
            fill_cube_lanes(block, self.n, &mut lanes);
            apply_gates(&gates, &mut lanes);
            let mut violation = 0u64;
            for i in 0..self.n - 1 {
                violation |= lanes[i] & !lanes[i + 1];
            }
            if violation & valid != 0 {
                return false;
            }
        }
        true
    }

    /// The inputs this network sorts.
    pub fn sorts_set(&self) -> Result<OutputSet> {
        if self.n > 26 {
            return Err(Error::SizeGuard {
                what: "materializing sorts()",
                limit: 26,
                n: self.n,
                alternative: "is_sorting_network or explicit evaluation",
            });
        }
        let gates = self.gate_list();
        let inputs = 1usize << self.n;
        let valid = if self.n >= 6 { !0u64 } else { (1u64 << (1u32 << self.n)) - 1 };
        let mut lanes = vec![0u64; self.n];
        let mut words = Vec::new();
        for block in 0..inputs.div_ceil(64) {
            fill_cube_lanes(block as u64, self.n, &mut lanes);
            apply_gates(&gates, &mut lanes);
            let mut violation = 0u64;
            for i in 0..self.n - 1 {
                violation |= lanes[i] & !lanes[i + 1];
            }
            let mut sorted = !violation & valid;
            while sorted != 0 {
                let t = sorted.trailing_zeros() as u64;
                words.push(block as u64 * 64 + t);
                sorted &= sorted - 1;
            }
        }
        Ok(OutputSet::from_sorted_words(self.n, words))
    }

    pub fn window_stats(word: &BitWord) -> WindowStats {
        word.window()
    }

    /// Renames channels; the result may contain reversed comparators.
    pub fn permuted(&self, perm: &ChannelPermutation) -> Result<Network> {
        if perm.n() != self.n {
            return Err(Error::PermutationSizeMismatch { expected: self.n, got: perm.n() });
        }
        let layers = self
            .layers
            .iter()
            .map(|layer| Layer::new(layer.iter().map(|c| c.permuted(perm)).collect()))
            .collect::<Result<_>>()?;
        Ok(Network { n: self.n, layers })
    }

    /// Mirror image: channel i becomes n + 1 - i with every gate kept
    /// standard. Reflection preserves the sorting property.
    pub fn reflected(&self) -> Network {
        let n = self.n;
        let layers = self
            .layers
            .iter()
            .map(|layer| {
                Layer::new(
                    layer
                        .iter()
                        .map(|c| Comparator { top: n + 1 - c.bottom(), bottom: n + 1 - c.top() })
                        .collect(),
                )
                .expect("reflection preserves disjointness")
            })
            .collect();
        Network { n, layers }
    }

    /// Front-to-back untangling: each reversed comparator is flipped and its
    /// endpoints exchanged in all later layers. Preserves depth, size, and
    /// extension behavior.
    pub fn standardize_forward(&self) -> Network {
        let mut layers = self.layers.clone();
        for k in 0..layers.len() {
            let reversed: Vec<Comparator> =
                layers[k].iter().filter(|c| !c.is_standard()).copied().collect();
            for c in reversed {
                flip_in_layer(&mut layers[k], &c);
                for later in layers.iter_mut().skip(k + 1) {
                    swap_channels(later, c.top(), c.bottom());
                }
            }
        }
        Network { n: self.n, layers }
    }

    /// Back-to-front standardization: repeatedly take the last layer holding
    /// a reversed comparator, flip it, and exchange its endpoints in every
    /// layer up to and including that one. Keeps the last layers' shape, and
    /// maps generalized sorting networks to sorting networks.
    pub fn standardize_dual(&self) -> Network {
        let mut layers = self.layers.clone();
        loop {
            let Some((k, c)) = layers
                .iter()
                .enumerate()
                .rev()
                .find_map(|(k, layer)| {
                    layer.iter().find(|c| !c.is_standard()).map(|c| (k, *c))
                })
            else {
                return Network { n: self.n, layers };
            };
            for layer in layers.iter_mut().take(k + 1) {
                swap_channels(layer, c.top(), c.bottom());
            }
        }
    }

    /// Whether the given comparator never exchanges values, judged against
    /// the outputs of everything before it. Earlier comparators of the same
    /// layer are taken to act first; they are disjoint from `comp`, so the
    /// convention does not change the answer.
    pub fn is_redundant(&self, layer_index: usize, comp: &Comparator) -> Result<bool> {
        let layer = self.layer(layer_index)?;
        if !layer.contains(comp) {
            return Err(Error::ComparatorNotInLayer {
                top: comp.top(),
                bottom: comp.bottom(),
                layer: layer_index,
            });
        }
        let prefix = self.prefix(layer_index);
        let outputs = prefix.outputs_raw()?;
        let t = comp.top() - 1;
        let b = comp.bottom() - 1;
        Ok(outputs.iter().all(|&w| w >> t & 1 <= w >> b & 1))
    }

    /// Removes every redundant comparator, rescanning until none remain;
    /// layers emptied by removal are dropped, so depth may shrink. The
    /// computed function is unchanged.
    pub fn remove_redundant(&self) -> Result<Network> {
        let mut layers = self.layers.clone();
        loop {
            let mut changed = false;
            let mut outputs = Network { n: self.n, layers: Vec::new() }.outputs_raw()?;
            for layer in layers.iter_mut() {
                let kept: Vec<Comparator> = layer
                    .iter()
                    .filter(|c| {
                        let t = c.top() - 1;
                        let b = c.bottom() - 1;
                        let redundant = outputs.iter().all(|&w| w >> t & 1 <= w >> b & 1);
                        changed |= redundant;
                        !redundant
                    })
                    .copied()
                    .collect();
                if kept.len() != layer.len() {
                    *layer = Layer::new(kept).expect("subset of a valid layer");
                }
                apply_layer_to_words(layer, &mut outputs);
                outputs.sort_unstable();
                outputs.dedup();
            }
            layers.retain(|l| !l.is_empty());
            if !changed {
                return Ok(Network { n: self.n, layers });
            }
        }
    }

    /// Exhaustive monotonicity check: x <= y pointwise implies
    /// C(x) <= C(y). A test utility; guarded to small n.
    pub fn monotone_check(&self) -> Result<bool> {
        if self.n > 12 {
            return Err(Error::SizeGuard {
                what: "exhaustive monotonicity check",
                limit: 12,
                n: self.n,
                alternative: "sampled checks",
            });
        }
        let all: Vec<u64> = (0..1u64 << self.n).collect();
        let images = self.eval_many(&all);
        for x in 0..all.len() {
            // Enumerate y >= x by raising each zero bit; monotonicity over
            // single-bit steps implies the full partial order.
            let mut zeros = !all[x] & word::mask(self.n);
            while zeros != 0 {
                let bit = zeros & zeros.wrapping_neg();
                let y = (all[x] | bit) as usize;
                if images[x] & !images[y] != 0 {
                    return Ok(false);
                }
                zeros &= zeros - 1;
            }
        }
        Ok(true)
    }

    fn gate_list(&self) -> Vec<(usize, usize)> {
        self.layers
            .iter()
            .flat_map(|l| l.iter().map(|c| (c.top() - 1, c.bottom() - 1)))
            .collect()
    }
}

impl std::fmt::Debug for Network {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Network(n={}, {})", self.n, crate::format::to_text(self))
    }
}

fn flip_in_layer(layer: &mut Layer, comp: &Comparator) {
    let fixed = layer
        .iter()
        .map(|c| if c == comp { c.reversed() } else { *c })
        .collect();
    *layer = Layer::new(fixed).expect("flip preserves disjointness");
}

fn swap_channels(layer: &mut Layer, a: usize, b: usize) {
    let swap = |ch: usize| {
        if ch == a {
            b
        } else if ch == b {
            a
        } else {
            ch
        }
    };
    let mapped = layer
        .iter()
        .map(|c| Comparator { top: swap(c.top()), bottom: swap(c.bottom()) })
        .collect();
    *layer = Layer::new(mapped).expect("relabeling preserves disjointness");
}

fn apply_layer_to_words(layer: &Layer, words: &mut [u64]) {
    for c in layer.iter() {
        let t = c.top() - 1;
        let b = c.bottom() - 1;
        for w in words.iter_mut() {
            let vt = *w >> t & 1;
            let vb = *w >> b & 1;
            *w = *w & !(1 << t) & !(1 << b) | (vt & vb) << t | (vt | vb) << b;
        }
    }
}

// Transposed evaluation: lane i carries channel i + 1's bit for 64 inputs.

/// Bit t of `CUBE_PATTERNS[j]` equals bit j of t, for t in 0..64.
const CUBE_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

fn fill_cube_lanes(block: u64, n: usize, lanes: &mut [u64]) {
    for i in 0..n {
        lanes[i] = if i < 6 {
            CUBE_PATTERNS[i]
        } else if block >> (i - 6) & 1 == 1 {
            !0
        } else {
            0
        };
    }
}

fn transpose_into_lanes(words: &[u64], lanes: &mut [u64]) {
    for lane in lanes.iter_mut() {
        *lane = 0;
    }
    for (t, &w) in words.iter().enumerate() {
        let mut bits = w;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            lanes[i] |= 1 << t;
            bits &= bits - 1;
        }
    }
}

fn apply_gates(gates: &[(usize, usize)], lanes: &mut [u64]) {
    for &(t, b) in gates {
        let hi = lanes[t];
        let lo = lanes[b];
        lanes[t] = hi & lo;
        lanes[b] = hi | lo;
    }
}

fn collect_word(lanes: &[u64], t: usize) -> u64 {
    let mut w = 0u64;
    for (i, &lane) in lanes.iter().enumerate() {
        w |= (lane >> t & 1) << i;
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The 5-channel, depth-5, size-9 network used as the running example.
    pub(crate) fn five_channel_example() -> Network {
        Network::from_layer_pairs(
            5,
            &[
                &[(1, 2), (3, 4)],
                &[(2, 4), (3, 5)],
                &[(1, 3), (2, 5)],
                &[(2, 3), (4, 5)],
                &[(3, 4)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn evaluate_routes_min_to_top() {
        let net = Network::from_layer_pairs(2, &[&[(1, 2)]]).unwrap();
        let out = net.evaluate(&"10".parse().unwrap()).unwrap();
        assert_eq!(out.to_string(), "01");
    }

    #[test]
    fn example_network_sorts_10101() {
        let net = five_channel_example();
        assert_eq!(net.depth(), 5);
        assert_eq!(net.size(), 9);
        let out = net.evaluate(&"10101".parse().unwrap()).unwrap();
        assert_eq!(out.to_string(), "00111");
        assert!(net.is_sorting_network());
    }

    #[test]
    fn zero_word_is_fixed() {
        let net = five_channel_example();
        let zero = BitWord::zero(5).unwrap();
        assert_eq!(net.evaluate(&zero).unwrap(), zero);
    }

    #[test]
    fn trace_follows_layers() {
        let net = five_channel_example();
        let trace = net.trace(&"10101".parse().unwrap()).unwrap();
        let shown: Vec<String> = trace.iter().map(|w| w.to_string()).collect();
        // Hand simulation of the layer recurrence.
        assert_eq!(shown, ["10101", "01011", "01011", "01011", "00111", "00111"]);
        assert_eq!(trace[5], net.evaluate(&"10101".parse().unwrap()).unwrap());
    }

    #[test]
    fn trace_of_depth_zero_is_input() {
        let net = Network::empty(4).unwrap();
        let input: BitWord = "0110".parse().unwrap();
        assert_eq!(net.trace(&input).unwrap(), vec![input]);
    }

    #[test]
    fn sorted_input_gives_constant_trace() {
        let net = five_channel_example();
        for ones in 0..=5 {
            let input = BitWord::new(5, crate::word::sorted_word(ones, 5)).unwrap();
            let trace = net.trace(&input).unwrap();
            assert!(trace.iter().all(|w| *w == input));
        }
    }

    #[test]
    fn outputs_of_empty_network_is_cube() {
        let net = Network::empty(5).unwrap();
        assert_eq!(net.outputs().unwrap().len(), 32);
    }

    #[test]
    fn identity_is_not_a_sorting_network() {
        for n in 2..=6 {
            assert!(!Network::empty(n).unwrap().is_sorting_network());
        }
        assert!(Network::empty(1).unwrap().is_sorting_network());
    }

    #[test]
    fn sorts_set_of_sorter_is_cube_and_of_identity_is_sorted_words() {
        let net = five_channel_example();
        assert_eq!(net.sorts_set().unwrap().len(), 32);
        let id = Network::empty(5).unwrap();
        let sorts = id.sorts_set().unwrap();
        assert_eq!(sorts.len(), 6);
        assert!(sorts.iter().all(|w| w.is_sorted()));
    }

    #[test]
    fn permute_can_reverse_comparators() {
        let net = Network::from_layer_pairs(2, &[&[(1, 2)]]).unwrap();
        let swap = ChannelPermutation::transposition(2, 1, 2).unwrap();
        let permuted = net.permuted(&swap).unwrap();
        assert!(!permuted.is_standard());
        let c = permuted.layers()[0].comparators()[0];
        assert_eq!((c.top(), c.bottom()), (2, 1));
        let id = ChannelPermutation::identity(5).unwrap();
        let example = five_channel_example();
        assert_eq!(example.permuted(&id).unwrap(), example);
    }

    #[test]
    fn generalized_evaluation_routes_min_to_top() {
        let net = Network::from_layer_pairs(2, &[&[(2, 1)]]).unwrap();
        // min goes to channel 2, max to channel 1
        assert_eq!(net.apply_word(0b01), 0b01);
        assert_eq!(net.apply_word(0b10), 0b01);
    }

    #[test]
    fn standardize_forward_fixes_single_reversed_gate() {
        let net = Network::from_layer_pairs(2, &[&[(2, 1)]]).unwrap();
        let std = net.standardize_forward();
        assert!(std.is_standard());
        assert_eq!(std, Network::from_layer_pairs(2, &[&[(1, 2)]]).unwrap());
        let example = five_channel_example();
        assert_eq!(example.standardize_forward(), example);
        assert_eq!(example.standardize_dual(), example);
    }

    #[test]
    fn redundancy_detects_repeated_comparator() {
        let mut net = five_channel_example();
        net.push_layer(Layer::from_pairs(&[(3, 4)]).unwrap()).unwrap();
        let comp = Comparator::new(3, 4).unwrap();
        assert!(net.is_redundant(5, &comp).unwrap());
        assert!(!net.is_redundant(4, &comp).unwrap());
        let cleaned = net.remove_redundant().unwrap();
        assert_eq!(cleaned, five_channel_example());
    }

    #[test]
    fn first_layer_is_never_redundant() {
        let net = five_channel_example();
        for c in net.layers()[0].iter() {
            assert!(!net.is_redundant(0, c).unwrap());
        }
    }

    #[test]
    fn remove_redundant_preserves_function() {
        let mut net = five_channel_example();
        net.push_layer(Layer::from_pairs(&[(1, 2), (3, 4)]).unwrap()).unwrap();
        let cleaned = net.remove_redundant().unwrap();
        for bits in 0..32u64 {
            assert_eq!(net.apply_word(bits), cleaned.apply_word(bits));
        }
    }

    #[test]
    fn monotone_on_example() {
        assert!(five_channel_example().monotone_check().unwrap());
        assert!(Network::empty(4).unwrap().monotone_check().unwrap());
    }

    #[test]
    fn eval_many_matches_apply_word() {
        let net = five_channel_example();
        let words: Vec<u64> = (0..32).collect();
        let batch = net.eval_many(&words);
        for (&w, &out) in words.iter().zip(&batch) {
            assert_eq!(out, net.apply_word(w));
        }
    }
}
