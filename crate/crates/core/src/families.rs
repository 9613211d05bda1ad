//! Named graph families: closed-form Wiener polynomials where one is known,
//! explicit constructors for all of them, and the density constructions.
//!
//! Orders are `u64` so closed forms can be evaluated far beyond anything
//! that could be built as a [`Graph`]; constructors stop at
//! [`MAX_CONSTRUCT_ORDER`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use thiserror::Error;

use crate::graph::Graph;
use crate::poly::WienerPolynomial;

/// Largest order for which a family graph is materialised.
pub const MAX_CONSTRUCT_ORDER: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family}: parameters out of range (need {requirement})")]
    OutOfRange {
        family: &'static str,
        requirement: &'static str,
    },
    #[error("order {order} exceeds the constructor limit {MAX_CONSTRUCT_ORDER}")]
    TooLarge { order: u64 },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("{family} takes {expected} parameter(s), got {found:?}")]
    Arity {
        family: &'static str,
        expected: usize,
        found: String,
    },
    #[error("leaf augmentation needs a tree of order at least 3")]
    NotAugmentable,
}

/// A member of one of the named families.
///
/// Two-parameter families take the size of the distinguished part first and
/// the total order second: `DoubleStar { k, n }` is `D_{k,n-k}` and
/// `Broom { k, n }` is `B_{k,n-k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Complete {
        n: u64,
    },
    CompleteMinusEdge {
        n: u64,
    },
    Star {
        n: u64,
    },
    Path {
        n: u64,
    },
    DoubleStar {
        k: u64,
        n: u64,
    },
    Broom {
        k: u64,
        n: u64,
    },
    /// Path on five vertices with `n - 5` leaves on the middle vertex.
    TreeTn {
        n: u64,
    },
    /// `K_{n-1} - e` with a pendant vertex on an endpoint of the missing edge.
    PendantGn {
        n: u64,
    },
    /// Diameter-2 graph with `m` edges.
    Diameter2 {
        n: u64,
        m: u64,
    },
    /// Path on `path` vertices with `leaves` leaves on vertex `attach`
    /// (1-indexed along the path).
    PathWithPendants {
        path: u64,
        attach: u64,
        leaves: u64,
    },
    /// `P_path` after `rounds` leaf augmentations.
    LeafAugmented {
        path: u64,
        rounds: u64,
    },
}

fn choose2(n: u64) -> BigUint {
    BigUint::from(n as u128 * n.saturating_sub(1) as u128 / 2)
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn check(ok: bool, family: &'static str, requirement: &'static str) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::OutOfRange { family, requirement })
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteMinusEdge { .. } => "complete_minus_edge",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Path { .. } => "path",
            FamilySpec::DoubleStar { .. } => "double_star",
            FamilySpec::Broom { .. } => "broom",
            FamilySpec::TreeTn { .. } => "t_n",
            FamilySpec::PendantGn { .. } => "g_n",
            FamilySpec::Diameter2 { .. } => "diameter2",
            FamilySpec::PathWithPendants { .. } => "path_with_pendants",
            FamilySpec::LeafAugmented { .. } => "leaf_augmented",
        }
    }

    pub fn params(&self) -> Vec<u64> {
        match *self {
            FamilySpec::Complete { n }
            | FamilySpec::CompleteMinusEdge { n }
            | FamilySpec::Star { n }
            | FamilySpec::Path { n }
            | FamilySpec::TreeTn { n }
            | FamilySpec::PendantGn { n } => vec![n],
            FamilySpec::DoubleStar { k, n } | FamilySpec::Broom { k, n } => vec![k, n],
            FamilySpec::Diameter2 { n, m } => vec![n, m],
            FamilySpec::PathWithPendants { path, attach, leaves } => vec![path, attach, leaves],
            FamilySpec::LeafAugmented { path, rounds } => vec![path, rounds],
        }
    }

    /// Number of vertices, saturating for absurd augmentation counts.
    pub fn order(&self) -> u64 {
        match *self {
            FamilySpec::Complete { n }
            | FamilySpec::CompleteMinusEdge { n }
            | FamilySpec::Star { n }
            | FamilySpec::Path { n }
            | FamilySpec::DoubleStar { n, .. }
            | FamilySpec::Broom { n, .. }
            | FamilySpec::TreeTn { n }
            | FamilySpec::PendantGn { n }
            | FamilySpec::Diameter2 { n, .. } => n,
            FamilySpec::PathWithPendants { path, leaves, .. } => path.saturating_add(leaves),
            FamilySpec::LeafAugmented { path, rounds } => u32::try_from(rounds)
                .ok()
                .and_then(|r| 1u64.checked_shl(r))
                .and_then(|f| path.checked_mul(f))
                .unwrap_or(u64::MAX),
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let name = self.name();
        match *self {
            FamilySpec::Complete { n } => check(n >= 2, name, "n >= 2"),
            FamilySpec::CompleteMinusEdge { n } => check(n >= 3, name, "n >= 3"),
            FamilySpec::Star { n } => check(n >= 3, name, "n >= 3"),
            FamilySpec::Path { n } => check(n >= 2, name, "n >= 2"),
            FamilySpec::DoubleStar { k, n } => check(n >= 4 && k >= 2 && k <= n / 2, name, "n >= 4 and 2 <= k <= n/2"),
            FamilySpec::Broom { k, n } => check(k >= 3 && n > k, name, "n > k >= 3"),
            FamilySpec::TreeTn { n } => check(n >= 5, name, "n >= 5"),
            FamilySpec::PendantGn { n } => check(n >= 4, name, "n >= 4"),
            FamilySpec::Diameter2 { n, m } => check(
                n >= 3 && m + 1 >= n && choose2(n) > big(m),
                name,
                "n >= 3 and n-1 <= m < n(n-1)/2",
            ),
            FamilySpec::PathWithPendants { path, attach, .. } => check(
                path >= 2 && attach >= 1 && attach <= path,
                name,
                "path >= 2 and 1 <= attach <= path",
            ),
            FamilySpec::LeafAugmented { path, .. } => check(path >= 3, name, "path >= 3"),
        }
    }

    /// Coefficients from a closed form, for the families that have one.
    pub fn closed_form(&self) -> Result<Option<WienerPolynomial>, FamilyError> {
        self.validate()?;
        let d: Vec<BigUint> = match *self {
            FamilySpec::Complete { n } => vec![choose2(n)],
            FamilySpec::CompleteMinusEdge { n } => vec![choose2(n) - 1u32, big(1)],
            FamilySpec::Star { n } => vec![big(n - 1), choose2(n - 1)],
            FamilySpec::Path { n } => {
                if n > MAX_CONSTRUCT_ORDER {
                    return Err(FamilyError::TooLarge { order: n });
                }
                (1..n).rev().map(big).collect()
            }
            FamilySpec::DoubleStar { k, n } => vec![
                big(n - 1),
                choose2(k) + choose2(n - k),
                BigUint::from((k - 1) as u128 * (n - k - 1) as u128),
            ],
            FamilySpec::Broom { k: 4, n } => vec![big(n - 1), choose2(n - 3) + 2u32, big(n - 3), big(n - 4)],
            FamilySpec::Broom { k: 5, n } => {
                vec![big(n - 1), choose2(n - 4) + 3u32, big(n - 3), big(n - 4), big(n - 5)]
            }
            FamilySpec::TreeTn { n } => vec![big(n - 1), choose2(n - 3) + 2u32, big(2 * (n - 4)), big(1)],
            FamilySpec::PendantGn { n } => vec![choose2(n - 1), big(n - 2), big(1)],
            FamilySpec::Diameter2 { n, m } => vec![big(m), choose2(n) - big(m)],
            FamilySpec::Broom { .. } | FamilySpec::PathWithPendants { .. } | FamilySpec::LeafAugmented { .. } => {
                return Ok(None)
            }
        };
        Ok(Some(
            WienerPolynomial::new(d).expect("closed forms have positive coefficients"),
        ))
    }

    /// Explicit graph realising the family member.
    pub fn graph(&self) -> Result<Graph, FamilyError> {
        self.validate()?;
        let order = self.order();
        if order > MAX_CONSTRUCT_ORDER {
            return Err(FamilyError::TooLarge { order });
        }
        let g = match *self {
            FamilySpec::Complete { n } => Graph::complete(n as usize),
            FamilySpec::CompleteMinusEdge { n } => {
                let mut g = Graph::complete(n as usize);
                g.unlink(0, 1);
                g
            }
            FamilySpec::Star { n } => star(n as usize),
            FamilySpec::Path { n } => path_with_pendants(n as usize, 0, 0),
            FamilySpec::DoubleStar { k, n } => {
                let (k, n) = (k as usize, n as usize);
                let mut g = Graph::empty(n);
                g.link(0, 1);
                for v in 2..=k {
                    g.link(0, v);
                }
                for v in k + 1..n {
                    g.link(1, v);
                }
                g
            }
            FamilySpec::Broom { k, n } => path_with_pendants(k as usize, k as usize - 1, (n - k) as usize),
            FamilySpec::TreeTn { n } => path_with_pendants(5, 2, n as usize - 5),
            FamilySpec::PendantGn { n } => {
                let n = n as usize;
                let mut g = Graph::empty(n);
                for v in 0..n - 1 {
                    for u in 0..v {
                        if (u, v) != (0, 1) {
                            g.link(u, v);
                        }
                    }
                }
                g.link(0, n - 1);
                g
            }
            FamilySpec::Diameter2 { n, m } => {
                let n = n as usize;
                let mut g = star(n);
                let extra = (m as usize) + 1 - n;
                let pairs = (1..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                for (u, v) in pairs.take(extra) {
                    g.link(u, v);
                }
                g
            }
            FamilySpec::PathWithPendants { path, attach, leaves } => {
                path_with_pendants(path as usize, attach as usize - 1, leaves as usize)
            }
            FamilySpec::LeafAugmented { path, rounds } => {
                let mut g = path_with_pendants(path as usize, 0, 0);
                for _ in 0..rounds {
                    g = leaf_augment(&g)?;
                }
                g
            }
        };
        Ok(g)
    }

    /// Closed form when available, otherwise BFS on [`FamilySpec::graph`].
    pub fn polynomial(&self) -> Result<WienerPolynomial, FamilyError> {
        if let Some(w) = self.closed_form()? {
            return Ok(w);
        }
        let g = self.graph()?;
        let dd = g.distance_distribution().expect("family graphs are connected");
        Ok(WienerPolynomial::from(&dd))
    }
}

fn star(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.link(0, v);
    }
    g
}

/// Path `0..path` plus `leaves` new vertices adjacent to path vertex `at`.
fn path_with_pendants(path: usize, at: usize, leaves: usize) -> Graph {
    let mut g = Graph::empty(path + leaves);
    for v in 1..path {
        g.link(v - 1, v);
    }
    for v in path..path + leaves {
        g.link(at, v);
    }
    g
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(u64::to_string).collect();
        write!(f, "{}:{}", self.name(), params.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses `name:p1,p2,...`, e.g. `double_star:2,5` or `broom:4,12`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let values: Result<Vec<u64>, _> = rest
            .split(',')
            .filter(|p| !p.trim().is_empty())
            .map(|p| p.trim().parse::<u64>())
            .collect();
        let arity = |family: &'static str, expected: usize| FamilyError::Arity {
            family,
            expected,
            found: rest.to_string(),
        };
        let spec = match name {
            "complete" => one(values, arity("complete", 1)).map(|n| FamilySpec::Complete { n })?,
            "complete_minus_edge" => {
                one(values, arity("complete_minus_edge", 1)).map(|n| FamilySpec::CompleteMinusEdge { n })?
            }
            "star" => one(values, arity("star", 1)).map(|n| FamilySpec::Star { n })?,
            "path" => one(values, arity("path", 1)).map(|n| FamilySpec::Path { n })?,
            "t_n" => one(values, arity("t_n", 1)).map(|n| FamilySpec::TreeTn { n })?,
            "g_n" => one(values, arity("g_n", 1)).map(|n| FamilySpec::PendantGn { n })?,
            "double_star" => two(values, arity("double_star", 2)).map(|(k, n)| FamilySpec::DoubleStar { k, n })?,
            "broom" => two(values, arity("broom", 2)).map(|(k, n)| FamilySpec::Broom { k, n })?,
            "diameter2" => two(values, arity("diameter2", 2)).map(|(n, m)| FamilySpec::Diameter2 { n, m })?,
            "leaf_augmented" => two(values, arity("leaf_augmented", 2))
                .map(|(path, rounds)| FamilySpec::LeafAugmented { path, rounds })?,
            "path_with_pendants" => match values.as_deref() {
                Ok(&[path, attach, leaves]) => FamilySpec::PathWithPendants { path, attach, leaves },
                _ => return Err(arity("path_with_pendants", 3)),
            },
            other => return Err(FamilyError::UnknownFamily(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn one<E>(values: Result<Vec<u64>, E>, err: FamilyError) -> Result<u64, FamilyError> {
    match values.as_deref() {
        Ok(&[a]) => Ok(a),
        _ => Err(err),
    }
}

fn two<E>(values: Result<Vec<u64>, E>, err: FamilyError) -> Result<(u64, u64), FamilyError> {
    match values.as_deref() {
        Ok(&[a, b]) => Ok((a, b)),
        _ => Err(err),
    }
}

/// Diameter-2 graph whose single nonzero Wiener root is `-a/b`:
/// `n = 2(a+b)`, `m = a(2(a+b) - 1)`.
pub fn dense_construct(a: u64, b: u64) -> Result<(FamilySpec, BigRational), FamilyError> {
    check(a >= 1 && b >= 1, "dense_construct", "a, b >= 1")?;
    let n = 2 * (a + b);
    let spec = FamilySpec::Diameter2 { n, m: a * (n - 1) };
    spec.validate()?;
    Ok((spec, BigRational::new((-(a as i64)).into(), (b as i64).into())))
}

/// Double star whose leftmost root tends to `-r - 1/(4r)`, `r = a/b`, as
/// `ell` grows: order `(2a+b)·ell` with one side of size `ell·b`.
///
/// The side sizes are `ell·b` and `2a·ell`; the smaller one is reported as `k`
/// so the result satisfies the `k <= n/2` convention.
pub fn tree_dense_construct(a: u64, b: u64, ell: u64) -> Result<FamilySpec, FamilyError> {
    check(
        a >= 1 && b >= 1 && ell >= 5,
        "tree_dense_construct",
        "a, b >= 1 and ell >= 5",
    )?;
    let n = (2 * a + b) * ell;
    let side = ell * b;
    let spec = FamilySpec::DoubleStar {
        k: side.min(n - side),
        n,
    };
    spec.validate()?;
    Ok(spec)
}

/// Attaches one new leaf to every vertex of a tree; vertex `v` gets leaf
/// `n + v`.
pub fn leaf_augment(t: &Graph) -> Result<Graph, FamilyError> {
    let n = t.order();
    if n < 3 || !t.is_tree() {
        return Err(FamilyError::NotAugmentable);
    }
    let mut g = Graph::empty(2 * n);
    for (u, v) in t.edges() {
        g.link(u, v);
    }
    for v in 0..n {
        g.link(v, n + v);
    }
    Ok(g)
}

/// `(C(k,2)+C(n-k,2))^2 - 4(n-1)(k-1)(n-k-1)`, the discriminant of the
/// reduced double-star quadratic.
pub fn double_star_discriminant(k: u64, n: u64) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    let b = BigInt::from(choose2(k) + choose2(n - k));
    let ac = BigInt::from(n - 1) * BigInt::from(k - 1) * BigInt::from(n - k - 1);
    &b * &b - ac * 4
}

/// Small extremal graphs, stored as 0-indexed edge lists.
pub mod fixtures {
    use crate::graph::Graph;

    const SQRT2_AXIS_GRAPH: &str = include_str!("../data/sqrt2_axis_graph.txt");
    const UNIT_ROOT_TREE: &str = include_str!("../data/unit_root_tree.txt");
    const MAX_REAL_TREE_16: &str = include_str!("../data/max_real_tree_16.txt");
    const MAX_REAL_TREE_17: &str = include_str!("../data/max_real_tree_17.txt");

    fn load(text: &str) -> Graph {
        Graph::parse_edge_list(text).expect("bundled fixture is well formed")
    }

    /// Order 6, distribution `(6,4,3,2)`, roots `±i√2`.
    pub fn sqrt2_axis_graph() -> Graph {
        load(SQRT2_AXIS_GRAPH)
    }

    /// Tree of order 12 with `i` as a root.
    pub fn unit_root_tree() -> Graph {
        load(UNIT_ROOT_TREE)
    }

    /// Order-16 tree maximising the real part of a root.
    pub fn max_real_tree_16() -> Graph {
        load(MAX_REAL_TREE_16)
    }

    /// Order-17 tree maximising the real part of a root.
    pub fn max_real_tree_17() -> Graph {
        load(MAX_REAL_TREE_17)
    }
}
