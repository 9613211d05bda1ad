//! Root sets of every distinct distance distribution of a class, computed
//! once per order and shared by all verifiers.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::enumerate::{self, EnumerationError, DEFAULT_MAX_ORDER, LONG_MAX_ORDER};
use crate::graph::{DistanceDistribution, Graph};
use crate::poly::{ComplexRoot, ReducedPolynomial, RootError, WienerPolynomial};
use crate::trees::{self, TreeOrderError, MAX_TREE_ORDER};

/// One distinct distribution with a realising graph and its roots.
#[derive(Debug, Clone)]
pub struct RootSet {
    pub distribution: DistanceDistribution,
    pub polynomial: ReducedPolynomial,
    /// graph6 of a realising graph.
    pub representative: String,
    pub roots: Result<Vec<ComplexRoot>, RootError>,
}

impl RootSet {
    pub fn from_graph(g: &Graph, distribution: DistanceDistribution) -> Self {
        let polynomial = WienerPolynomial::from(&distribution).reduce();
        let roots = polynomial.roots();
        RootSet {
            distribution,
            polynomial,
            representative: g.to_graph6().unwrap_or_else(|| g.to_edge_list()),
            roots,
        }
    }

    /// `graph6 (d_1,...,d_D)`.
    pub fn label(&self) -> String {
        format!("{} {}", self.representative, self.distribution)
    }
}

/// All distinct distributions of one class at one order, sorted by
/// distribution.
#[derive(Debug)]
pub struct Sweep {
    pub order: usize,
    /// Labeled connected graphs or free trees scanned.
    pub instances: u64,
    pub sets: Vec<RootSet>,
}

type Slot = OnceLock<Arc<Sweep>>;

static GRAPHS: [Slot; LONG_MAX_ORDER + 1] = [const { OnceLock::new() }; LONG_MAX_ORDER + 1];
static TREES: [Slot; MAX_TREE_ORDER + 1] = [const { OnceLock::new() }; MAX_TREE_ORDER + 1];

/// Connected graphs of order `n`; orders above 7 need `allow_long`.
pub fn graph_root_sets(n: usize, allow_long: bool) -> Result<Arc<Sweep>, EnumerationError> {
    let max = if allow_long { LONG_MAX_ORDER } else { DEFAULT_MAX_ORDER };
    if !(2..=max).contains(&n) {
        return Err(EnumerationError::OrderOutOfRange { order: n, min: 2, max });
    }
    Ok(GRAPHS[n]
        .get_or_init(|| {
            let (classes, stats) = enumerate::connected_distributions(n, allow_long).expect("order checked above");
            let sets = classes
                .into_par_iter()
                .map(|c| RootSet::from_graph(&c.representative, c.distribution))
                .collect();
            Arc::new(Sweep {
                order: n,
                instances: stats.instances_examined,
                sets,
            })
        })
        .clone())
}

/// Free trees of order `n`, `1 <= n <= 18`.
pub fn tree_root_sets(n: usize) -> Result<Arc<Sweep>, TreeOrderError> {
    if !(1..=MAX_TREE_ORDER).contains(&n) {
        return Err(TreeOrderError(n));
    }
    Ok(TREES[n]
        .get_or_init(|| {
            let sequences: Vec<Vec<u8>> = trees::LevelSequences::new(n).expect("order checked above").collect();
            let count = sequences.len() as u64;
            let mut first: BTreeMap<DistanceDistribution, (usize, Graph)> = BTreeMap::new();
            let found: Vec<(usize, Graph, Option<DistanceDistribution>)> = sequences
                .par_iter()
                .enumerate()
                .map(|(i, l)| {
                    let g = trees::tree_from_levels(l);
                    let dd = g.distance_distribution().ok();
                    (i, g, dd)
                })
                .collect();
            for (i, g, dd) in found {
                // K_1 has no pairs and so no distribution
                let Some(dd) = dd else { continue };
                first.entry(dd).or_insert((i, g));
            }
            let sets = first
                .into_iter()
                .collect::<Vec<_>>()
                .into_par_iter()
                .map(|(dd, (_, g))| RootSet::from_graph(&g, dd))
                .collect();
            Arc::new(Sweep {
                order: n,
                instances: count,
                sets,
            })
        })
        .clone())
}
