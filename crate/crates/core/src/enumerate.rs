//! Exhaustive sweep over labeled graphs of small order, deduplicated by
//! distance distribution.
//!
//! Roots of the Wiener polynomial depend only on the distance distribution,
//! so the sweep keeps one representative per distinct d-vector instead of
//! testing isomorphism. The mask space is split by its top bits and each
//! part is scanned by a separate rayon task.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{DistanceDistribution, Graph};

/// Largest order scanned without opting in to long sweeps.
pub const DEFAULT_MAX_ORDER: usize = 7;
/// Largest order the labeled sweep supports at all (2^28 masks).
pub const LONG_MAX_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("order {order} outside the supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationStats {
    pub order: usize,
    /// Labeled connected graphs seen.
    pub instances_examined: u64,
    pub distinct_distributions: u64,
    /// Labeled graphs skipped because they are disconnected.
    pub disconnected_skipped: u64,
}

/// One distinct distance distribution together with the labeled graph of
/// smallest edge mask that realises it.
#[derive(Debug, Clone)]
pub struct ConnectedClass {
    pub distribution: DistanceDistribution,
    pub representative: Graph,
}

/// Pair `(u, v)` with `u < v` for every bit of the edge mask, in graph6 order.
fn pair_table(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    pairs
}

/// Packs counts (each below 32) into 5-bit fields; zero terminates.
fn pack(counts: &[u8; 8], len: usize) -> u64 {
    counts[..len]
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &c)| acc | (c as u64) << (5 * i))
}

fn unpack(key: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = key;
    while k != 0 {
        out.push(k & 31);
        k >>= 5;
    }
    out
}

/// Distance counts of a graph on at most 8 vertices given as byte rows;
/// `None` if disconnected.
fn small_distribution(rows: &[u8; 8], n: usize) -> Option<([u8; 8], usize)> {
    let full: u8 = if n == 8 { 0xff } else { (1u8 << n) - 1 };
    let mut counts = [0u8; 8];
    let mut diameter = 0;
    for s in 0..n {
        let mut seen: u8 = 1 << s;
        let mut frontier = seen;
        let mut level = 0;
        while seen != full {
            let mut next = 0u8;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                next |= rows[v];
                f &= f - 1;
            }
            next &= !seen;
            if next == 0 {
                return None;
            }
            seen |= next;
            counts[level] += next.count_ones() as u8;
            level += 1;
            frontier = next;
        }
        diameter = diameter.max(level);
    }
    for c in counts.iter_mut().take(diameter) {
        *c /= 2;
    }
    Some((counts, diameter))
}

struct Partial {
    classes: HashMap<u64, u32>,
    connected: u64,
    disconnected: u64,
}

impl Partial {
    fn new() -> Self {
        Partial {
            classes: HashMap::new(),
            connected: 0,
            disconnected: 0,
        }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.connected += other.connected;
        self.disconnected += other.disconnected;
        for (key, mask) in other.classes {
            self.classes
                .entry(key)
                .and_modify(|m| *m = (*m).min(mask))
                .or_insert(mask);
        }
        self
    }
}

/// Scans all `2^C(n,2)` labeled graphs of order `n`, returning each distinct
/// distance distribution of a connected graph once, sorted by d-vector.
///
/// Orders above [`DEFAULT_MAX_ORDER`] require `allow_long`.
pub fn connected_distributions(
    n: usize,
    allow_long: bool,
) -> Result<(Vec<ConnectedClass>, EnumerationStats), EnumerationError> {
    let max = if allow_long { LONG_MAX_ORDER } else { DEFAULT_MAX_ORDER };
    if !(2..=max).contains(&n) {
        return Err(EnumerationError::OrderOutOfRange { order: n, min: 2, max });
    }
    let pairs = pair_table(n);
    let bits = pairs.len();
    let split = bits.min(10);
    let low_bits = bits - split;

    let total = (0u32..1 << split)
        .into_par_iter()
        .map(|prefix| {
            let mut part = Partial::new();
            let mut base = [0u8; 8];
            for (k, &(u, v)) in pairs.iter().enumerate().skip(low_bits) {
                if prefix >> (k - low_bits) & 1 == 1 {
                    base[u] |= 1 << v;
                    base[v] |= 1 << u;
                }
            }
            for low in 0u32..1 << low_bits {
                let mut rows = base;
                let mut m = low;
                while m != 0 {
                    let k = m.trailing_zeros() as usize;
                    let (u, v) = pairs[k];
                    rows[u] |= 1 << v;
                    rows[v] |= 1 << u;
                    m &= m - 1;
                }
                match small_distribution(&rows, n) {
                    Some((counts, diameter)) => {
                        part.connected += 1;
                        let key = pack(&counts, diameter);
                        let mask = prefix << low_bits | low;
                        part.classes
                            .entry(key)
                            .and_modify(|m| *m = (*m).min(mask))
                            .or_insert(mask);
                    }
                    None => part.disconnected += 1,
                }
            }
            part
        })
        .reduce(Partial::new, Partial::merge);

    let mut classes: Vec<ConnectedClass> = total
        .classes
        .into_iter()
        .map(|(key, mask)| {
            let mut g = Graph::empty(n);
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    g.link(u, v);
                }
            }
            let distribution =
                DistanceDistribution::new(n, unpack(key)).expect("sweep produced an invalid distribution");
            ConnectedClass {
                distribution,
                representative: g,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.distribution.cmp(&b.distribution));
    let stats = EnumerationStats {
        order: n,
        instances_examined: total.connected,
        distinct_distributions: classes.len() as u64,
        disconnected_skipped: total.disconnected,
    };
    Ok((classes, stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn order_two_and_three() {
        let (classes, stats) = connected_distributions(2, false).unwrap();
        assert_eq!(stats.instances_examined, 1);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].distribution.counts(), &[1]);

        let (classes, stats) = connected_distributions(3, false).unwrap();
        assert_eq!(stats.instances_examined, 4);
        let d: Vec<_> = classes.iter().map(|c| c.distribution.counts().to_vec()).collect();
        assert_eq!(d, vec![vec![2, 1], vec![3]]);
    }

    #[test]
    fn rejects_unsupported_orders() {
        assert!(connected_distributions(1, false).is_err());
        assert!(connected_distributions(8, false).is_err());
        assert!(connected_distributions(9, true).is_err());
    }

    #[test]
    fn representatives_match_their_distribution() {
        let (classes, _) = connected_distributions(6, false).unwrap();
        let mut seen = HashSet::new();
        for c in &classes {
            assert!(seen.insert(c.distribution.clone()));
            assert_eq!(c.representative.distance_distribution().unwrap(), c.distribution);
        }
    }

    #[test]
    fn pack_round_trip() {
        let counts = [5u8, 4, 3, 2, 1, 0, 0, 0];
        assert_eq!(unpack(pack(&counts, 5)), vec![5, 4, 3, 2, 1]);
    }
}
