//! Modulus bounds: the graph maximum and minimum, the tree bound and the
//! extremality of `T_n`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::extremal::{family_distribution, search_extremal, GraphClass, Objective};
use super::sweep::{graph_root_sets, tree_root_sets, RootSet, Sweep};
use super::{describe_root, ClaimReport, Evidence, Params, VerifyConfig};
use crate::families::FamilySpec;
use crate::graph::DistanceDistribution;
use crate::poly::{exact, ComplexRoot};

/// Position of `|z|` relative to a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Below,
    Equal,
    Above,
    /// Numeric root within tolerance of the bound.
    Near,
}

fn side(z: &ComplexRoot, bound: &BigRational, eps: f64) -> Side {
    if let Some(e) = &z.exact {
        return match e.modulus_cmp(bound) {
            Ordering::Less => Side::Below,
            Ordering::Equal => Side::Equal,
            Ordering::Greater => Side::Above,
        };
    }
    let b = exact::to_f64(bound);
    let m = z.modulus();
    if m > b + eps {
        Side::Above
    } else if m < b - eps {
        Side::Below
    } else {
        Side::Near
    }
}

fn sweep_or_report(n: usize, cfg: &VerifyConfig, report: &mut ClaimReport) -> Option<std::sync::Arc<Sweep>> {
    match graph_root_sets(n, cfg.allow_long) {
        Ok(s) => Some(s),
        Err(e) => {
            report.note(format!("{e}; enable the long sweep"));
            None
        }
    }
}

fn roots_or_violation<'a>(set: &'a RootSet, report: &mut ClaimReport) -> Option<&'a [ComplexRoot]> {
    match &set.roots {
        Ok(r) => Some(r),
        Err(e) => {
            report.violation(Evidence::new(set.label(), [format!("root finder: {e}")]));
            None
        }
    }
}

/// Checks that no root crosses `bound` in direction `outside` and that the
/// roots on the bound come from exactly the `expected` distribution.
fn extremal_bound(
    report: &mut ClaimReport,
    sweep: &Sweep,
    bound: &BigRational,
    outside: Side,
    expected: &DistanceDistribution,
    eps: f64,
) {
    let mut attainers = BTreeSet::new();
    for set in &sweep.sets {
        let Some(roots) = roots_or_violation(set, report) else {
            continue;
        };
        let annulus = set.polynomial.annulus().ok();
        // strict annulus separation certifies numeric roots near the bound
        let certified = annulus.is_some_and(|a| match outside {
            Side::Above => a.outer < *bound,
            _ => a.inner > *bound,
        });
        for z in roots {
            match side(z, bound, eps) {
                Side::Equal => {
                    attainers.insert(set.distribution.clone());
                    if &set.distribution == expected {
                        report.witness(Evidence::new(set.label(), [format!("root {}", describe_root(z))]));
                    } else {
                        report.violation(Evidence::new(
                            set.label(),
                            [format!("also attains: {}", describe_root(z))],
                        ));
                    }
                }
                Side::Near if !certified => report.violation(Evidence::new(
                    set.label(),
                    [format!(
                        "numeric root {} within tolerance of the bound",
                        describe_root(z)
                    )],
                )),
                s if s == outside => report.violation(Evidence::new(
                    set.label(),
                    [format!("root {} beyond {bound}", describe_root(z))],
                )),
                _ => {}
            }
        }
    }
    if !attainers.contains(expected) {
        report.violation(Evidence::new(expected.to_string(), ["does not attain the bound"]));
    }
    report.note(format!(
        "{} distributions from {} connected instances",
        sweep.sets.len(),
        sweep.instances
    ));
}

pub(super) fn max_modulus(params: &Params, cfg: &VerifyConfig) -> ClaimReport {
    let n = params.usize("n");
    let mut report = ClaimReport::new("max_modulus", params);
    let Some(sweep) = sweep_or_report(n, cfg, &mut report) else {
        return report.inconclusive("order not enumerated");
    };
    let c = (n * (n - 1) / 2) as u64;
    let bound = BigRational::from_integer(BigInt::from(c - 1));
    let expected = DistanceDistribution::new(n, vec![c - 1, 1]).expect("K_n - e");
    extremal_bound(&mut report, &sweep, &bound, Side::Above, &expected, cfg.eps);
    report
}

pub(super) fn min_modulus(params: &Params, cfg: &VerifyConfig) -> ClaimReport {
    let n = params.usize("n");
    let mut report = ClaimReport::new("min_modulus", params);
    let Some(sweep) = sweep_or_report(n, cfg, &mut report) else {
        return report.inconclusive("order not enumerated");
    };
    let bound = BigRational::new(2.into(), BigInt::from(n - 2));
    let m = n as u64 - 1;
    let expected = DistanceDistribution::new(n, vec![m, m * (m - 1) / 2]).expect("star");
    extremal_bound(&mut report, &sweep, &bound, Side::Below, &expected, cfg.eps);
    report
}

pub(super) fn tree_root_bound(params: &Params, cfg: &VerifyConfig) -> ClaimReport {
    let n = params.usize("n");
    let mut report = ClaimReport::new("tree_root_bound", params);
    let sweep = tree_root_sets(n).expect("order in registry range");
    let bound = BigRational::from_integer(BigInt::from(2 * (n - 4)));
    for set in &sweep.sets {
        let Some(roots) = roots_or_violation(set, &mut report) else {
            continue;
        };
        let certified = set.polynomial.annulus().is_ok_and(|a| a.outer <= bound);
        for z in roots {
            let s = side(z, &bound, cfg.eps);
            if s == Side::Above || (s == Side::Near && !certified) {
                report.violation(Evidence::new(
                    set.label(),
                    [format!("root {} vs bound {bound}", describe_root(z))],
                ));
            }
        }
    }
    match search_extremal(n, Objective::MaxModulus, GraphClass::Trees, false) {
        Ok(best) => {
            let e = Evidence::new(
                best.argmax
                    .iter()
                    .map(|e| e.distribution.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                [format!("max modulus {:.12} <= {bound}", best.best_value)],
            );
            if best.best_value <= exact::to_f64(&bound) + cfg.eps {
                report.witness(e);
            } else {
                report.violation(e);
            }
        }
        Err(e) => report.violation(Evidence::new(format!("trees of order {n}"), [e.to_string()])),
    }
    report.note(format!("{} trees, {} distributions", sweep.instances, sweep.sets.len()));
    report
}

pub(super) fn tn_extremal(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let n = params.usize("n");
    let mut report = ClaimReport::new("tn_extremal", params);
    let expected = family_distribution(FamilySpec::TreeTn { n: n as u64 });
    match search_extremal(n, Objective::MaxModulus, GraphClass::Trees, false) {
        Ok(best) => {
            let unique = best.argmax.len() == 1 && best.argmax[0].distribution == expected;
            for e in &best.argmax {
                let ev = Evidence::new(
                    format!("{} {}", e.representative, e.distribution),
                    [format!("modulus {:.12}", best.best_value), format!("root {}", e.root)],
                );
                if unique {
                    report.witness(ev);
                } else {
                    report.violation(ev);
                }
            }
            if !unique && !best.argmax.iter().any(|e| e.distribution == expected) {
                report.violation(Evidence::new(format!("T_{n} {expected}"), ["not the maximiser"]));
            }
        }
        Err(e) => report.violation(Evidence::new(format!("trees of order {n}"), [e.to_string()])),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(f: fn(&Params, &VerifyConfig) -> ClaimReport, n: i64) -> ClaimReport {
        f(&Params::new().with("n", n), &VerifyConfig::default())
    }

    #[test]
    fn small_orders_pass() {
        for n in 3..=5 {
            let r = run(max_modulus, n);
            assert!(r.passed(), "{r:?}");
            let r = run(min_modulus, n);
            assert!(r.passed(), "{r:?}");
        }
        let r = run(max_modulus, 4);
        assert_eq!(r.witnesses[0].values, ["root -5"]);
        let r = run(min_modulus, 5);
        assert_eq!(r.witnesses[0].values, ["root -2/3"]);
    }

    #[test]
    fn tree_bounds_pass() {
        for n in 5..=9 {
            assert!(run(tree_root_bound, n).passed());
            assert!(run(tn_extremal, n).passed(), "{n}");
        }
    }
}
