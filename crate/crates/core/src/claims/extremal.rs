//! Exhaustive extremal searches over the roots of a class at one order.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use super::sweep::{graph_root_sets, tree_root_sets, RootSet, Sweep};
use super::{describe_root, ClaimReport, Evidence, Params, VerifyConfig};
use crate::enumerate::EnumerationError;
use crate::families::{fixtures, FamilySpec};
use crate::graph::DistanceDistribution;
use crate::poly::ComplexRoot;
use crate::trees::TreeOrderError;

/// Relative width within which two objective values count as tied.
const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    MaxModulus,
    MaxReal,
    MaxImag,
    MinNonzeroModulus,
}

impl Objective {
    /// Quantity to maximise.
    fn score(self, z: &ComplexRoot) -> f64 {
        match self {
            Objective::MaxModulus => z.modulus(),
            Objective::MaxReal => z.re,
            Objective::MaxImag => z.im,
            Objective::MinNonzeroModulus => -z.modulus(),
        }
    }

    fn value(self, score: f64) -> f64 {
        match self {
            Objective::MinNonzeroModulus => -score,
            _ => score,
        }
    }
}

impl FromStr for Objective {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "max_modulus" => Ok(Objective::MaxModulus),
            "max_real" => Ok(Objective::MaxReal),
            "max_imag" => Ok(Objective::MaxImag),
            "min_nonzero_modulus" => Ok(Objective::MinNonzeroModulus),
            other => Err(format!(
                "unknown objective {other:?} (expected max_modulus, max_real, max_imag or min_nonzero_modulus)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphClass {
    Graphs,
    Trees,
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graphs" => Ok(GraphClass::Graphs),
            "trees" => Ok(GraphClass::Trees),
            other => Err(format!("unknown class {other:?} (expected graphs or trees)")),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphClass::Graphs => "graphs",
            GraphClass::Trees => "trees",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(transparent)]
    Graphs(#[from] EnumerationError),
    #[error("trees of order {} are not enumerated", .0 .0)]
    Trees(#[from] TreeOrderError),
    #[error("no graph of order {0} in this class has a nonzero root")]
    NoRoots(usize),
    #[error("root finder failed on {0}")]
    Unresolved(String),
}

/// One distribution attaining the optimum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extremum {
    #[serde(serialize_with = "crate::poly::as_string")]
    pub distribution: DistanceDistribution,
    pub representative: String,
    pub root: String,
}

/// Best objective value over every nonzero root of the class, with all
/// distributions attaining it (ties within a relative `1e-9`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalReport {
    pub order: usize,
    pub objective: Objective,
    pub class: GraphClass,
    pub best_value: f64,
    pub argmax: Vec<Extremum>,
}

pub(crate) fn sweep_for(
    order: usize,
    class: GraphClass,
    allow_long: bool,
) -> Result<std::sync::Arc<Sweep>, SearchError> {
    Ok(match class {
        GraphClass::Graphs => graph_root_sets(order, allow_long)?,
        GraphClass::Trees => tree_root_sets(order)?,
    })
}

pub fn search_extremal(
    order: usize,
    objective: Objective,
    class: GraphClass,
    allow_long: bool,
) -> Result<ExtremalReport, SearchError> {
    let sweep = sweep_for(order, class, allow_long)?;
    let mut per_set: Vec<(&RootSet, &ComplexRoot, f64)> = Vec::new();
    for set in &sweep.sets {
        let roots = set.roots.as_ref().map_err(|_| SearchError::Unresolved(set.label()))?;
        let best = roots
            .iter()
            .map(|z| (z, objective.score(z)))
            .max_by(|a, b| a.1.total_cmp(&b.1));
        if let Some((z, s)) = best {
            per_set.push((set, z, s));
        }
    }
    let best = per_set
        .iter()
        .map(|t| t.2)
        .max_by(f64::total_cmp)
        .ok_or(SearchError::NoRoots(order))?;
    let tol = TIE_TOLERANCE * best.abs().max(1.0);
    let argmax = per_set
        .iter()
        .filter(|t| t.2 >= best - tol)
        .map(|(set, z, _)| Extremum {
            distribution: set.distribution.clone(),
            representative: set.representative.clone(),
            root: describe_root(z),
        })
        .collect();
    Ok(ExtremalReport {
        order,
        objective,
        class,
        best_value: objective.value(best),
        argmax,
    })
}

fn argmax_evidence(r: &ExtremalReport) -> Vec<Evidence> {
    r.argmax
        .iter()
        .map(|e| {
            Evidence::new(
                format!("{} {}", e.representative, e.distribution),
                [format!("best {:.12}", r.best_value), format!("root {}", e.root)],
            )
        })
        .collect()
}

/// Compares the argmax distributions with the single expected one.
fn expect_unique(report: &mut ClaimReport, found: &ExtremalReport, expected: &DistanceDistribution, name: &str) {
    let matches = found.argmax.iter().any(|e| &e.distribution == expected);
    for e in argmax_evidence(found) {
        if matches && found.argmax.len() == 1 {
            report.witness(e);
        } else {
            report.violation(e);
        }
    }
    if !matches {
        report.violation(Evidence::new(
            format!("{name} {expected}"),
            ["expected argmax is not attained".to_string()],
        ));
    }
}

fn path_distribution(n: usize) -> DistanceDistribution {
    DistanceDistribution::new(n, (1..n as u64).rev().collect()).expect("path distribution")
}

pub(super) fn extremal_real_trees(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let n = params.usize("n");
    let mut report = ClaimReport::new("extremal_real_trees", params);
    let found = match search_extremal(n, Objective::MaxReal, GraphClass::Trees, false) {
        Ok(f) => f,
        Err(e) => {
            report.violation(Evidence::new(format!("trees of order {n}"), [e.to_string()]));
            return report;
        }
    };
    let (expected, name) = match n {
        16 => (
            fixtures::max_real_tree_16().distance_distribution().expect("tree"),
            "order-16 fixture tree",
        ),
        17 => (
            fixtures::max_real_tree_17().distance_distribution().expect("tree"),
            "order-17 fixture tree",
        ),
        _ => (path_distribution(n), "path"),
    };
    expect_unique(&mut report, &found, &expected, name);
    report
}

pub(super) fn extremal_real_graphs(params: &Params, cfg: &VerifyConfig) -> ClaimReport {
    let n = params.usize("n");
    let mut report = ClaimReport::new("extremal_real_graphs", params);
    let found = match search_extremal(n, Objective::MaxReal, GraphClass::Graphs, cfg.allow_long) {
        Ok(f) => f,
        Err(SearchError::Graphs(e)) => return report.inconclusive(format!("{e}; enable the long sweep")),
        Err(e) => {
            report.violation(Evidence::new(format!("graphs of order {n}"), [e.to_string()]));
            return report;
        }
    };
    if n <= 5 {
        let evidence = argmax_evidence(&found);
        for e in evidence {
            if found.best_value <= cfg.eps {
                report.witness(e);
            } else {
                report.violation(e);
            }
        }
    } else {
        expect_unique(&mut report, &found, &path_distribution(n), "path");
    }
    report
}

/// Reduced polynomial of `spec` as a distribution, for argmax comparisons.
pub(super) fn family_distribution(spec: FamilySpec) -> DistanceDistribution {
    let w = spec.polynomial().expect("family in range");
    let d = w
        .counts()
        .iter()
        .map(|c| u64::try_from(c).expect("small order"))
        .collect();
    DistanceDistribution::new(spec.order() as usize, d).expect("family distribution is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tree_searches() {
        let r = search_extremal(5, Objective::MaxModulus, GraphClass::Trees, false).unwrap();
        assert_eq!(r.argmax.len(), 1);
        assert_eq!(r.argmax[0].distribution.counts(), [4, 3, 2, 1]);
        // P_5 = T_5 stays strictly inside the tree bound 2(n-4) = 2
        assert!(r.best_value > 1.6 && r.best_value < 2.0, "{}", r.best_value);
        let r = search_extremal(5, Objective::MinNonzeroModulus, GraphClass::Graphs, false).unwrap();
        assert_eq!(r.argmax[0].distribution.counts(), [4, 6]);
        assert!((r.best_value - 2.0 / 3.0).abs() < 1e-12);
        assert!(matches!(
            search_extremal(2, Objective::MaxReal, GraphClass::Graphs, false),
            Err(SearchError::NoRoots(2))
        ));
        assert!(search_extremal(9, Objective::MaxReal, GraphClass::Graphs, false).is_err());
    }

    #[test]
    fn objective_names() {
        for s in ["max_modulus", "max_real", "max_imag", "min_nonzero_modulus"] {
            let o: Objective = s.parse().unwrap();
            assert_eq!(serde_json::to_string(&o).unwrap(), format!("\"{s}\""));
        }
        assert!("max".parse::<Objective>().is_err());
    }
}
