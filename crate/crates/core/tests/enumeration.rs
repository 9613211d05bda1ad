//! Labeled connected-graph sweep against independent oracles: the
//! inclusion-exclusion count of connected labeled graphs and a
//! Floyd-Warshall distance census over every labeled graph.

// index loops mirror the recurrences and matrices they implement
#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use wiener_roots::enumerate::{connected_distributions, EnumerationError};

fn binom(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// c_n = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c_k 2^C(n-k,2).
fn connected_labeled(max: usize) -> Vec<BigUint> {
    let two_pow = |m: usize| BigUint::one() << (m * m.saturating_sub(1) / 2);
    let mut c = vec![BigUint::zero(); max + 1];
    for n in 1..=max {
        let mut v = two_pow(n);
        for k in 1..n {
            v -= binom(n - 1, k - 1) * &c[k] * two_pow(n - k);
        }
        c[n] = v;
    }
    c
}

#[test]
fn oracle_matches_published_counts() {
    let c = connected_labeled(7);
    let want: [u64; 7] = [1, 1, 4, 38, 728, 26704, 1866256];
    for n in 1..=7 {
        assert_eq!(c[n], BigUint::from(want[n - 1]), "order {n}");
    }
}

#[test]
fn instance_counts_match_inclusion_exclusion() {
    let c = connected_labeled(7);
    for n in 2..=7 {
        let (classes, stats) = connected_distributions(n, false).unwrap();
        assert_eq!(BigUint::from(stats.instances_examined), c[n], "order {n}");
        assert_eq!(
            stats.instances_examined + stats.disconnected_skipped,
            1u64 << (n * (n - 1) / 2)
        );
        assert_eq!(stats.distinct_distributions as usize, classes.len());
    }
}

/// Distance distributions of all connected labeled graphs of order `n`
/// via Floyd-Warshall on an adjacency matrix.
fn floyd_census(n: usize) -> BTreeSet<Vec<u64>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let inf = usize::MAX / 4;
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        let mut d = vec![vec![inf; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = 0;
        }
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                d[u][v] = 1;
                d[v][u] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        if pairs.iter().any(|&(u, v)| d[u][v] >= inf) {
            continue;
        }
        let diam = pairs.iter().map(|&(u, v)| d[u][v]).max().unwrap_or(0);
        let mut counts = vec![0u64; diam];
        for &(u, v) in &pairs {
            counts[d[u][v] - 1] += 1;
        }
        out.insert(counts);
    }
    out
}

#[test]
fn distributions_match_floyd_warshall_census() {
    for n in 2..=6 {
        let (classes, _) = connected_distributions(n, false).unwrap();
        let ours: BTreeSet<Vec<u64>> = classes.iter().map(|c| c.distribution.counts().to_vec()).collect();
        assert_eq!(ours.len(), classes.len(), "duplicates at order {n}");
        assert_eq!(ours, floyd_census(n), "order {n}");
        for c in &classes {
            let again = c.representative.distance_distribution().unwrap();
            assert_eq!(again, c.distribution);
        }
    }
}

#[test]
fn order_gate() {
    assert_eq!(
        connected_distributions(8, false).unwrap_err(),
        EnumerationError::OrderOutOfRange {
            order: 8,
            min: 2,
            max: 7
        }
    );
    assert!(connected_distributions(1, false).is_err());
    assert!(connected_distributions(9, true).is_err());
}
