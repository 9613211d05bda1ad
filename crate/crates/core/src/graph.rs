//! Simple undirected graphs stored as adjacency bit rows, plus the distance
//! computations everything else is built on.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Errors raised when building or analysing a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph is disconnected; its Wiener polynomial is undefined")]
    Disconnected,
    #[error("graph of order {0} has no vertex pairs")]
    TooSmall(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty record")]
    Empty,
    #[error("orders above 62 are not supported")]
    UnsupportedOrder,
    #[error("character {found:?} at byte {position} is outside 63..=126")]
    CharOutOfRange { position: usize, found: char },
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits in the last data byte are not zero")]
    TrailingBits,
}

/// Simple undirected graph on vertices `0..n`.
///
/// Row `v` has bit `u` set iff `{u, v}` is an edge. Rows are padded to whole
/// 64-bit words so any order is representable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let stride = n.div_ceil(64).max(1);
        Graph {
            n,
            stride,
            bits: vec![0; stride * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            for u in 0..v {
                g.link(u, v);
            }
        }
        g
    }

    /// Builds a graph from 0-indexed vertex pairs. Duplicate pairs collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.link(u, v);
        Ok(())
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[v * self.stride + u / 64] |= 1 << (u % 64);
        self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
    }

    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.bits[v * self.stride + u / 64] &= !(1 << (u % 64));
        self.bits[u * self.stride + v / 64] &= !(1 << (v % 64));
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(v)[u / 64] >> (u % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bit_indices(self.row(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Sizes of the BFS layers around `source`; entry `i` counts vertices at
    /// distance `i + 1`. The layers stop at the eccentricity of `source`.
    pub fn layer_sizes(&self, source: usize) -> Vec<u64> {
        let mut visited = vec![0u64; self.stride];
        let mut frontier = vec![0u64; self.stride];
        let mut next = vec![0u64; self.stride];
        visited[source / 64] |= 1 << (source % 64);
        frontier[source / 64] |= 1 << (source % 64);
        let mut layers = Vec::new();
        loop {
            next.iter_mut().for_each(|w| *w = 0);
            for v in bit_indices(&frontier) {
                for (acc, w) in next.iter_mut().zip(self.row(v)) {
                    *acc |= w;
                }
            }
            let mut count = 0u64;
            for (acc, seen) in next.iter_mut().zip(visited.iter_mut()) {
                *acc &= !*seen;
                *seen |= *acc;
                count += acc.count_ones() as u64;
            }
            if count == 0 {
                return layers;
            }
            layers.push(count);
            std::mem::swap(&mut frontier, &mut next);
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return self.n == 1;
        }
        self.layer_sizes(0).iter().sum::<u64>() == self.n as u64 - 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edge_count() == self.n - 1 && self.is_connected()
    }

    /// Counts unordered pairs by distance using one frontier BFS per vertex.
    pub fn distance_distribution(&self) -> Result<DistanceDistribution, GraphError> {
        if self.n < 2 {
            return Err(GraphError::TooSmall(self.n));
        }
        let mut doubled: Vec<u64> = Vec::new();
        for v in 0..self.n {
            let layers = self.layer_sizes(v);
            if layers.iter().sum::<u64>() != self.n as u64 - 1 {
                return Err(GraphError::Disconnected);
            }
            if layers.len() > doubled.len() {
                doubled.resize(layers.len(), 0);
            }
            for (acc, c) in doubled.iter_mut().zip(&layers) {
                *acc += c;
            }
        }
        let d = doubled.into_iter().map(|c| c / 2).collect();
        Ok(DistanceDistribution::new(self.n, d).expect("BFS counts form a valid distribution"))
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        if self.n == 1 {
            return Ok(0);
        }
        let mut best = 0;
        for v in 0..self.n {
            let layers = self.layer_sizes(v);
            if layers.iter().sum::<u64>() != self.n as u64 - 1 {
                return Err(GraphError::Disconnected);
            }
            best = best.max(layers.len());
        }
        Ok(best)
    }

    /// Parses one graph6 record. Only the single-byte order form (n <= 62) is
    /// accepted; an optional `>>graph6<<` header and trailing newline are skipped.
    pub fn parse_graph6(text: &str) -> Result<Self, GraphError> {
        let text = text.trim_end_matches(['\n', '\r']);
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        let bytes = text.as_bytes();
        let (&head, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
        check_graph6_byte(0, head)?;
        if head == 126 {
            return Err(Graph6Error::UnsupportedOrder.into());
        }
        let n = (head - 63) as usize;
        let pair_bits = n * n.saturating_sub(1) / 2;
        let expected = pair_bits.div_ceil(6);
        if data.len() != expected {
            return Err(Graph6Error::WrongLength {
                expected,
                found: data.len(),
            }
            .into());
        }
        let mut g = Graph::empty(n);
        let mut k = 0;
        for v in 1..n {
            for u in 0..v {
                let byte = data[k / 6];
                check_graph6_byte(1 + k / 6, byte)?;
                if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                    g.link(u, v);
                }
                k += 1;
            }
        }
        if let Some(&last) = data.last() {
            check_graph6_byte(data.len(), last)?;
            let used = pair_bits - 6 * (expected - 1);
            if (last - 63) & ((1u8 << (6 - used)) - 1) != 0 {
                return Err(Graph6Error::TrailingBits.into());
            }
        }
        Ok(g)
    }

    /// graph6 encoding, or `None` for orders above 62.
    pub fn to_graph6(&self) -> Option<String> {
        if self.n > 62 {
            return None;
        }
        let mut out = vec![self.n as u8 + 63];
        let mut acc = 0u8;
        let mut filled = 0;
        for v in 1..self.n {
            for u in 0..v {
                acc = acc << 1 | self.has_edge(u, v) as u8;
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        Some(String::from_utf8(out).expect("graph6 bytes are ASCII"))
    }

    /// Parses the plain edge-list format: first non-comment line is the order,
    /// every following line is a 0-indexed pair `u v`. Lines starting with `#`
    /// and blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, first) = lines.next().ok_or(GraphError::EdgeList {
            line: 0,
            message: "missing vertex count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| GraphError::EdgeList {
            line,
            message: format!("bad vertex count {first:?}"),
        })?;
        let mut g = Graph::empty(n);
        for (line, l) in lines {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let parsed: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
            match parsed.as_deref() {
                Some(&[u, v]) => g.add_edge(u, v)?,
                _ => {
                    return Err(GraphError::EdgeList {
                        line,
                        message: format!("expected two vertex indices, got {l:?}"),
                    })
                }
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Attaches a new pendant vertex to `v` and returns its index.
    pub fn attach_leaf(&mut self, v: usize) -> usize {
        let mut grown = Graph::empty(self.n + 1);
        for (a, b) in self.edges() {
            grown.link(a, b);
        }
        grown.link(v, self.n);
        *self = grown;
        self.n - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

fn check_graph6_byte(position: usize, b: u8) -> Result<(), Graph6Error> {
    if (63..=126).contains(&b) {
        Ok(())
    } else {
        Err(Graph6Error::CharOutOfRange {
            position,
            found: b as char,
        })
    }
}

pub(crate) fn bit_indices(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            }
        })
    })
}

/// Pair counts `(d_1, ..., d_D)` of a connected graph of order `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DistanceDistribution {
    n: usize,
    d: Vec<u64>,
}

impl DistanceDistribution {
    /// Checks the sum and positivity invariants.
    pub fn new(n: usize, d: Vec<u64>) -> Option<Self> {
        let pairs = (n * n.saturating_sub(1) / 2) as u64;
        let valid = n >= 2 && !d.is_empty() && d.iter().all(|&c| c >= 1) && d.iter().sum::<u64>() == pairs;
        valid.then_some(DistanceDistribution { n, d })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[u64] {
        &self.d
    }

    pub fn diameter(&self) -> usize {
        self.d.len()
    }

    pub fn edge_count(&self) -> u64 {
        self.d[0]
    }
}

impl fmt::Display for DistanceDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.d.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn graph6_complete_four() {
        let g = Graph::parse_graph6("C~").unwrap();
        assert_eq!(g, Graph::complete(4));
        assert_eq!(g.to_graph6().unwrap(), "C~");
    }

    #[test]
    fn graph6_small_records() {
        assert_eq!(Graph::parse_graph6("A_").unwrap(), Graph::complete(2));
        let empty = Graph::parse_graph6("A?\n").unwrap();
        assert_eq!(empty.edge_count(), 0);
        assert_eq!(empty.order(), 2);
        assert_eq!(Graph::parse_graph6(">>graph6<<A_").unwrap(), Graph::complete(2));
        assert_eq!(Graph::parse_graph6("@").unwrap().order(), 1);
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(matches!(
            Graph::parse_graph6(""),
            Err(GraphError::Graph6(Graph6Error::Empty))
        ));
        assert!(matches!(
            Graph::parse_graph6("C~~"),
            Err(GraphError::Graph6(Graph6Error::WrongLength { .. }))
        ));
        assert!(matches!(
            Graph::parse_graph6("C"),
            Err(GraphError::Graph6(Graph6Error::WrongLength { .. }))
        ));
        assert!(matches!(
            Graph::parse_graph6("C "),
            Err(GraphError::Graph6(Graph6Error::CharOutOfRange { .. }))
        ));
        // n=2 uses one bit; 'A' + '`' sets a padding bit.
        assert!(matches!(
            Graph::parse_graph6("A`"),
            Err(GraphError::Graph6(Graph6Error::TrailingBits))
        ));
        assert!(matches!(
            Graph::parse_graph6("~?@A"),
            Err(GraphError::Graph6(Graph6Error::UnsupportedOrder))
        ));
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(1, 1)]), Err(GraphError::Loop(1)));
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn edge_list_text_round_trip() {
        let g = path(5);
        let text = g.to_edge_list();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        assert!(Graph::parse_edge_list("# only a comment\n").is_err());
        assert!(Graph::parse_edge_list("3\n0 1 2\n").is_err());
    }

    #[test]
    fn distributions_of_small_graphs() {
        assert_eq!(Graph::complete(3).distance_distribution().unwrap().counts(), &[3]);
        assert_eq!(path(4).distance_distribution().unwrap().counts(), &[3, 2, 1]);
        assert_eq!(Graph::complete(5).diameter().unwrap(), 1);
        assert_eq!(path(4).diameter().unwrap(), 3);
    }

    #[test]
    fn disconnected_and_tiny_inputs_are_errors() {
        let two_k2 = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.distance_distribution(), Err(GraphError::Disconnected));
        assert_eq!(two_k2.diameter(), Err(GraphError::Disconnected));
        assert_eq!(Graph::empty(1).distance_distribution(), Err(GraphError::TooSmall(1)));
    }

    #[test]
    fn path_distribution_is_descending() {
        for n in 3..=50 {
            let d = path(n).distance_distribution().unwrap();
            let expected: Vec<u64> = (1..n as u64).rev().collect();
            assert_eq!(d.counts(), expected.as_slice());
        }
    }

    #[test]
    fn wide_graphs_span_several_words() {
        let g = path(130);
        assert_eq!(g.diameter().unwrap(), 129);
        assert!(g.is_tree());
        assert_eq!(g.to_graph6(), None);
    }

    #[test]
    fn attach_leaf_grows_order() {
        let mut g = path(3);
        let leaf = g.attach_leaf(1);
        assert_eq!(leaf, 3);
        assert!(g.has_edge(1, 3));
        assert!(g.is_tree());
    }
}
