//! Canonical network formats.
//!
//! Text: layers separated by `;`, comparators `top:bottom` separated by
//! single spaces, channels 1-based. The five-channel example renders as
//! `1:2 3:4; 2:4 3:5; 1:3 2:5; 2:3 4:5; 3:4`. Reversed comparators keep
//! their orientation, e.g. `3:1`. The text form does not carry the channel
//! count; parsing infers it as the largest endpoint unless told otherwise.
//!
//! JSON: `{"n":5,"layers":[[[1,2],[3,4]],...]}`, which round-trips networks
//! whose highest channels are untouched.

use crate::error::{Error, Result};
use crate::net::{Comparator, Layer, Network};
use serde::{Deserialize, Serialize};

pub fn to_text(net: &Network) -> String {
    net.layers()
        .iter()
        .map(|layer| {
            layer
                .iter()
                .map(|c| format!("{}:{}", c.top(), c.bottom()))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Parses the text form. `n` overrides the inferred channel count; it must
/// be at least the largest endpoint mentioned.
pub fn parse_text(text: &str, n: Option<usize>) -> Result<Network> {
    let mut layers = Vec::new();
    let mut max_channel = 0usize;
    let body = text.trim();
    if body.is_empty() {
        return Err(Error::parse_at(text, 0, "empty network text"));
    }
    let mut offset = 0usize;
    for segment in body.split(';') {
        let mut comparators = Vec::new();
        if segment.trim().is_empty() {
            return Err(Error::parse_at(text, offset, "empty layer"));
        }
        for token in segment.split_whitespace() {
            let token_offset = offset + find_offset(segment, token);
            let (top, bottom) = parse_comparator(text, token, token_offset)?;
            max_channel = max_channel.max(top).max(bottom);
            comparators.push(
                Comparator::new(top, bottom)
                    .map_err(|e| Error::parse_at(text, token_offset, e.to_string()))?,
            );
        }
        layers.push(
            Layer::new(comparators).map_err(|e| Error::parse_at(text, offset, e.to_string()))?,
        );
        offset += segment.len() + 1;
    }
    let n = match n {
        Some(n) if n >= max_channel => n,
        Some(n) => {
            return Err(Error::ChannelOutOfRange { top: max_channel, bottom: max_channel, n });
        }
        None => max_channel,
    };
    Network::new(n, layers)
}

fn find_offset(haystack: &str, token: &str) -> usize {
    // Tokens come from split_whitespace over the same segment.
    token.as_ptr() as usize - haystack.as_ptr() as usize
}

fn parse_comparator(full: &str, token: &str, offset: usize) -> Result<(usize, usize)> {
    let Some((a, b)) = token.split_once(':') else {
        return Err(Error::parse_at(full, offset, format!("expected top:bottom, got {token:?}")));
    };
    let top: usize = a
        .parse()
        .map_err(|_| Error::parse_at(full, offset, format!("bad channel number {a:?}")))?;
    let bottom: usize = b
        .parse()
        .map_err(|_| Error::parse_at(full, offset, format!("bad channel number {b:?}")))?;
    Ok((top, bottom))
}

#[derive(Serialize, Deserialize)]
struct NetworkRepr {
    n: usize,
    layers: Vec<Vec<(usize, usize)>>,
}

impl Serialize for Network {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        NetworkRepr {
            n: self.n(),
            layers: self
                .layers()
                .iter()
                .map(|l| l.iter().map(|c| (c.top(), c.bottom())).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Network {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = NetworkRepr::deserialize(deserializer)?;
        let layers = repr
            .layers
            .iter()
            .map(|pairs| Layer::from_pairs(pairs))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Network::new(repr.n, layers).map_err(serde::de::Error::custom)
    }
}

/// Reads a network from a file. `.json` files use the JSON form; anything
/// else is parsed as text with an optional explicit channel count.
pub fn read_network_file(path: &std::path::Path, n: Option<usize>) -> Result<Network> {
    let content = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        Ok(serde_json::from_str(&content)?)
    } else {
        parse_text(&content, n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIVE: &str = "1:2 3:4; 2:4 3:5; 1:3 2:5; 2:3 4:5; 3:4";

    #[test]
    fn text_roundtrip() {
        let net = parse_text(FIVE, None).unwrap();
        assert_eq!(net.n(), 5);
        assert_eq!(net.depth(), 5);
        assert_eq!(net.size(), 9);
        assert_eq!(to_text(&net), FIVE);
    }

    #[test]
    fn explicit_channel_count() {
        let net = parse_text("1:2", Some(4)).unwrap();
        assert_eq!(net.n(), 4);
        assert!(parse_text("1:5", Some(3)).is_err());
    }

    #[test]
    fn reversed_comparators_keep_orientation() {
        let net = parse_text("2:1 3:4", None).unwrap();
        assert!(!net.is_standard());
        assert_eq!(to_text(&net), "2:1 3:4");
    }

    #[test]
    fn parse_errors_carry_position() {
        let err = parse_text("1:2; 3:x", None).unwrap_err();
        match err {
            Error::Parse { line: 1, column, .. } => assert_eq!(column, 6),
            other => panic!("unexpected error {other}"),
        }
        assert!(parse_text("", None).is_err());
        assert!(parse_text("1:2;; 3:4", None).is_err());
        assert!(parse_text("1:1", None).is_err());
        assert!(parse_text("1:2 2:3", None).is_err());
    }

    #[test]
    fn json_roundtrip_preserves_unused_top_channel() {
        let net = Network::from_layer_pairs(6, &[&[(1, 2), (3, 4)]]).unwrap();
        let json = serde_json::to_string(&net).unwrap();
        assert_eq!(json, r#"{"n":6,"layers":[[[1,2],[3,4]]]}"#);
        let back: Network = serde_json::from_str(&json).unwrap();
        assert_eq!(back, net);
    }
}
