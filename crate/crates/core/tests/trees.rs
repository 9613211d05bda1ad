//! Free-tree generation against Otter's counting formula and a brute-force
//! Prüfer sweep reduced by a center-rooted canonical form.

// index loops mirror the recurrences and matrices they implement
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use wiener_roots::trees::{free_trees, LevelSequences, MAX_TREE_ORDER};
use wiener_roots::Graph;

const KNOWN: [u64; 18] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867,
];

/// Free-tree counts for orders `1..=max` via rooted-tree counts and
/// Otter's dissimilarity theorem.
fn otter(max: usize) -> Vec<u128> {
    // rooted[n]: rooted unlabeled trees with n vertices
    let mut rooted = vec![0u128; max + 1];
    rooted[1] = 1;
    for n in 1..max {
        let mut s = 0u128;
        for k in 1..=n {
            let dsum: u128 = (1..=k).filter(|d| k % d == 0).map(|d| d as u128 * rooted[d]).sum();
            s += dsum * rooted[n - k + 1];
        }
        rooted[n + 1] = s / n as u128;
    }
    // t(n) = r(n) - sum_{i < n/2} r(i) r(n-i) - [n even] C(r(n/2), 2)
    let mut free = vec![0u128; max + 1];
    for n in 1..=max {
        let below: u128 = (1..).take_while(|i| 2 * i < n).map(|i| rooted[i] * rooted[n - i]).sum();
        let mut f = rooted[n] - below;
        if n % 2 == 0 {
            let h = rooted[n / 2];
            f -= h * (h - 1) / 2;
        }
        free[n] = f;
    }
    free
}

fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).collect()).collect()
}

fn encode(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| encode(adj, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Canonical string of a tree: the smallest encoding rooted at a center.
fn canonical(g: &Graph) -> String {
    let adj = adjacency(g);
    let n = adj.len();
    if n == 1 {
        return "()".to_string();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| encode(&adj, c, usize::MAX)).min().unwrap()
}

fn prufer_decode(seq: &[usize], n: usize) -> Graph {
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::new();
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Canonical forms of every labeled tree of order `n` (`n^(n-2)` of them).
fn prufer_classes(n: usize) -> BTreeSet<String> {
    if n <= 2 {
        let edges: Vec<(usize, usize)> = if n == 2 { vec![(0, 1)] } else { vec![] };
        return BTreeSet::from([canonical(&Graph::from_edge_list(n, &edges).unwrap())]);
    }
    let len = n - 2;
    let mut seq = vec![0usize; len];
    let mut out = BTreeSet::new();
    loop {
        out.insert(canonical(&prufer_decode(&seq, n)));
        let mut i = 0;
        while i < len {
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
        if i == len {
            return out;
        }
    }
}

#[test]
fn otter_formula_reproduces_known_counts() {
    let f = otter(18);
    for n in 1..=18 {
        assert_eq!(f[n], KNOWN[n - 1] as u128, "order {n}");
    }
}

#[test]
fn generated_counts_match_otter() {
    let f = otter(MAX_TREE_ORDER);
    for n in 1..=MAX_TREE_ORDER {
        assert_eq!(LevelSequences::new(n).unwrap().count() as u128, f[n], "order {n}");
    }
}

#[test]
fn generated_trees_match_prufer_sweep() {
    for n in 1..=8 {
        let ours: Vec<String> = free_trees(n).unwrap().map(|t| canonical(&t)).collect();
        let distinct: BTreeSet<String> = ours.iter().cloned().collect();
        assert_eq!(distinct.len(), ours.len(), "duplicate tree at order {n}");
        assert_eq!(distinct, prufer_classes(n), "order {n}");
    }
}

#[test]
fn generated_trees_are_distinct_trees() {
    for n in 1..=13 {
        let mut seen = BTreeSet::new();
        for t in free_trees(n).unwrap() {
            assert_eq!(t.order(), n);
            assert_eq!(t.edge_count(), n - 1);
            assert!(t.is_connected());
            assert!(seen.insert(canonical(&t)), "order {n}");
        }
    }
}

#[test]
fn order_gate() {
    assert!(LevelSequences::new(0).is_err());
    assert!(LevelSequences::new(MAX_TREE_ORDER + 1).is_err());
}
