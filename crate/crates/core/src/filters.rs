//! Prefix construction: canonical first layers, Green filters, saturated
//! second layers, and subsumption-pruned complete two-layer filter sets.

use crate::error::{Error, Result};
use crate::net::{Comparator, Layer, Network};
use crate::subsume::find_embedding;
use crate::word::OutputSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// The first layer pairing neighbors: `(2i-1, 2i)`.
pub fn first_layer_p(n: usize) -> Result<Layer> {
    crate::word::check_channels(n)?;
    if n < 2 {
        return Err(Error::TooFewChannels { min: 2, got: n });
    }
    Layer::new(
        (1..=n / 2)
            .map(|i| Comparator::new(2 * i - 1, 2 * i))
            .collect::<Result<_>>()?,
    )
}

/// The first layer pairing outermost channels: `(i, n+1-i)`.
pub fn first_layer_bz(n: usize) -> Result<Layer> {
    crate::word::check_channels(n)?;
    if n < 2 {
        return Err(Error::TooFewChannels { min: 2, got: n });
    }
    Layer::new(
        (1..=n / 2)
            .map(|i| Comparator::new(i, n + 1 - i))
            .collect::<Result<_>>()?,
    )
}

/// The first `depth` layers of a Green filter: layer t holds comparators
/// `(i, i + 2^(t-1))` for every i whose offset within its stride-2^t block
/// is below 2^(t-1). Requires a power-of-two channel count.
pub fn green_filter(n: usize, depth: usize) -> Result<Network> {
    crate::word::check_channels(n)?;
    if !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo("green filter", n));
    }
    let max_depth = n.trailing_zeros() as usize;
    if depth > max_depth {
        return Err(Error::LayerOutOfRange { index: depth, depth: max_depth });
    }
    let mut layers = Vec::with_capacity(depth);
    for t in 1..=depth {
        let stride = 1usize << (t - 1);
        let comps = (1..=n - stride)
            .filter(|i| (i - 1) % (2 * stride) < stride)
            .map(|i| Comparator::new(i, i + stride))
            .collect::<Result<_>>()?;
        layers.push(Layer::new(comps)?);
    }
    Network::new(n, layers)
}

/// Number of matchings of the complete graph on n vertices (the empty one
/// included), by the involution recurrence.
pub fn matching_count(n: usize) -> u128 {
    let mut prev = 1u128; // I(0)
    let mut curr = 1u128; // I(1)
    if n == 0 {
        return 1;
    }
    for k in 2..=n {
        let next = curr + (k as u128 - 1) * prev;
        prev = curr;
        curr = next;
    }
    curr
}

/// Streams every non-empty layer on n channels in a canonical order.
/// There are `matching_count(n) - 1` of them.
pub fn enumerate_layers(n: usize) -> Result<impl Iterator<Item = Layer>> {
    crate::word::check_channels(n)?;
    Ok(MatchingIter::new(n).filter(|l| !l.is_empty()))
}

/// Streams every matching on n channels, the empty one first.
fn all_matchings(n: usize) -> MatchingIter {
    MatchingIter::new(n)
}

/// Depth-first matching generator over an explicit stack.
struct MatchingIter {
    n: usize,
    stack: Vec<(usize, u64, Vec<Comparator>)>,
}

impl MatchingIter {
    fn new(n: usize) -> Self {
        MatchingIter { n, stack: vec![(1, 0, Vec::new())] }
    }
}

impl Iterator for MatchingIter {
    type Item = Layer;

    fn next(&mut self) -> Option<Layer> {
        // Decide channels low to high: leave the channel unmatched, or pair
        // it with any higher free channel. Leaves of the decision tree are
        // exactly the matchings, each emitted once.
        loop {
            let (mut from, used, comps) = self.stack.pop()?;
            while from <= self.n && used >> (from - 1) & 1 == 1 {
                from += 1;
            }
            if from > self.n {
                return Some(Layer::new(comps).expect("pairwise disjoint by construction"));
            }
            for b in ((from + 1)..=self.n).rev() {
                if used >> (b - 1) & 1 == 0 {
                    let mut extended = comps.clone();
                    extended.push(Comparator::new(from, b).expect("distinct free channels"));
                    self.stack.push((from + 1, used | 1 << (from - 1) | 1 << (b - 1), extended));
                }
            }
            self.stack.push((from + 1, used, comps));
        }
    }
}

/// All second layers L2 over a maximal first layer such that no strict
/// superset of L2 strictly shrinks the two-layer output set. The empty
/// layer participates; it survives only in degenerate cases (n = 2).
pub fn saturated_second_layers(first: &Layer, n: usize) -> Result<Vec<Layer>> {
    crate::word::check_channels(n)?;
    if !first.is_maximal(n) {
        return Err(Error::FirstLayerNotMaximal { n });
    }
    let first_net = Network::new(n, vec![first.clone()])?;
    let candidates: Vec<Layer> = all_matchings(n).collect();
    let saturated: Vec<Layer> = candidates
        .into_par_iter()
        .filter_map(|l2| {
            let net = first_net
                .concat(&Network::new(n, vec![l2.clone()]).ok()?)
                .ok()?;
            let outputs = net.outputs().ok()?;
            is_saturated(n, &outputs, &l2).then_some(l2)
        })
        .collect();
    Ok(saturated)
}

/// No strict superset extension of `l2` may map `outputs` into a strict
/// subset of itself. Added comparators commute with the rest of the layer,
/// so the image under the additions alone decides.
fn is_saturated(n: usize, outputs: &OutputSet, l2: &Layer) -> bool {
    let used = l2.channel_mask();
    let free: Vec<usize> = (1..=n).filter(|&ch| used >> (ch - 1) & 1 == 0).collect();
    fn any_shrinks(
        free: &[usize],
        start: usize,
        taken: u64,
        extension: &mut Vec<Comparator>,
        outputs: &OutputSet,
    ) -> bool {
        if !extension.is_empty() && image_shrinks(outputs, extension) {
            return true;
        }
        for i in start..free.len() {
            let a = free[i];
            if taken >> (a - 1) & 1 == 1 {
                continue;
            }
            for j in i + 1..free.len() {
                let b = free[j];
                if taken >> (b - 1) & 1 == 1 {
                    continue;
                }
                extension.push(Comparator::new(a, b).expect("distinct"));
                let shrinks = any_shrinks(
                    free,
                    i + 1,
                    taken | 1 << (a - 1) | 1 << (b - 1),
                    extension,
                    outputs,
                );
                extension.pop();
                if shrinks {
                    return true;
                }
            }
        }
        false
    }
    !any_shrinks(&free, 0, 0, &mut Vec::new(), outputs)
}

fn image_shrinks(outputs: &OutputSet, extension: &[Comparator]) -> bool {
    let mut image: Vec<u64> = outputs.words().to_vec();
    for c in extension {
        let t = c.top() - 1;
        let b = c.bottom() - 1;
        for w in image.iter_mut() {
            let vt = *w >> t & 1;
            let vb = *w >> b & 1;
            *w = *w & !(1 << t) & !(1 << b) | (vt & vb) << t | (vt | vb) << b;
        }
    }
    image.sort_unstable();
    image.dedup();
    image.len() < outputs.len()
        && OutputSet::from_sorted_words(outputs.n(), image).is_subset_of(outputs)
}

/// How a filter set was produced.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Provenance {
    pub first_layer: String,
    pub saturated_candidates: usize,
    pub reflection_pruning: bool,
}

/// A complete set of two-layer filters: pairwise incomparable prefixes such
/// that some optimal-depth sorting network extends one of them.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FilterSet {
    pub n: usize,
    pub prefixes: Vec<Network>,
    pub provenance: Provenance,
}

impl FilterSet {
    pub fn len(&self) -> usize {
        self.prefixes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefixes.is_empty()
    }

    /// One canonical network JSON object per line.
    pub fn to_jsonl(&self) -> Result<String> {
        let mut out = String::new();
        for net in &self.prefixes {
            out.push_str(&serde_json::to_string(net)?);
            out.push('\n');
        }
        Ok(out)
    }

    pub fn from_jsonl(n: usize, text: &str) -> Result<FilterSet> {
        let mut prefixes = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let net: Network = serde_json::from_str(line)?;
            if net.n() != n {
                return Err(Error::LengthMismatch { expected: n, got: net.n() });
            }
            prefixes.push(net);
        }
        Ok(FilterSet {
            n,
            prefixes,
            provenance: Provenance {
                first_layer: "loaded".into(),
                saturated_candidates: 0,
                reflection_pruning: false,
            },
        })
    }
}

/// Default ceiling for in-process generation; beyond it the candidate space
/// makes generation a deliberate long-running choice.
pub const GENERATION_LIMIT: usize = 11;

/// Generates the complete two-layer filter set over the neighbor-pairing
/// first layer, pruned to an antichain.
///
/// Pruning removes a prefix when another one embeds into it by a channel
/// permutation, either directly or after reflecting the candidate; the
/// reflection of a prefix extends to a sorting network exactly when the
/// prefix does, so both removals preserve completeness.
pub fn complete_filter_set(n: usize) -> Result<FilterSet> {
    if n > GENERATION_LIMIT {
        return Err(Error::SizeGuard {
            what: "complete filter set generation",
            limit: GENERATION_LIMIT,
            n,
            alternative: "complete_filter_set_unbounded or a precomputed set",
        });
    }
    complete_filter_set_unbounded(n)
}

/// As `complete_filter_set`, without the size guard. Generation beyond
/// eleven channels can take hours.
pub fn complete_filter_set_unbounded(n: usize) -> Result<FilterSet> {
    let first = first_layer_p(n)?;
    let saturated = saturated_second_layers(&first, n)?;
    let first_net = Network::new(n, vec![first])?;

    struct Candidate {
        net: Network,
        outputs: OutputSet,
        reflected: OutputSet,
    }
    let mut candidates: Vec<Candidate> = saturated
        .into_par_iter()
        .map(|l2| {
            let net = first_net
                .concat(&Network::new(n, vec![l2]).expect("validated layer"))
                .expect("same n");
            let outputs = net.outputs().expect("n within guard");
            let reflected = outputs.reflected();
            Candidate { net, outputs, reflected }
        })
        .collect();
    let candidate_count = candidates.len();
    // Smaller output sets subsume more easily; visit them first. Ties break
    // on the canonical text for determinism.
    candidates.sort_by(|a, b| {
        (a.outputs.len(), crate::format::to_text(&a.net))
            .cmp(&(b.outputs.len(), crate::format::to_text(&b.net)))
    });

    let subsumes_with_reflection = |a: &Candidate, b: &Candidate| {
        find_embedding(&a.outputs, &b.outputs).is_some()
            || find_embedding(&a.reflected, &b.outputs).is_some()
    };

    let mut kept: Vec<Candidate> = Vec::new();
    for candidate in candidates {
        if kept.iter().any(|k| subsumes_with_reflection(k, &candidate)) {
            continue;
        }
        kept.retain(|k| !subsumes_with_reflection(&candidate, k));
        kept.push(candidate);
    }

    Ok(FilterSet {
        n,
        prefixes: kept.into_iter().map(|c| c.net).collect(),
        provenance: Provenance {
            first_layer: "P".into(),
            saturated_candidates: candidate_count,
            reflection_pruning: true,
        },
    })
}
