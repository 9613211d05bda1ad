//! Structural properties that every root set of a sweep must satisfy.

use num_complex::Complex64;

use super::sweep::{graph_root_sets, tree_root_sets, RootSet, Sweep};
use super::{describe_root, ClaimReport, Evidence, Params, VerifyConfig};
use crate::graph::Graph;
use crate::poly::{ComplexRoot, RESIDUAL_LIMIT};

/// Real-root test and conjugate pairing tolerance.
const PAIR_TOLERANCE: f64 = 1e-9;
/// Matching tolerance between exact imaginary-axis roots and numeric roots.
const AXIS_MATCH: f64 = 1e-8;
/// Numeric roots with `|re|` below this must come from the exact axis test.
const AXIS_REAL_PART: f64 = 1e-10;

/// Every violated property of one root set.
pub(crate) fn check_set(set: &RootSet, n: usize, eps: f64) -> Vec<String> {
    let mut bad = Vec::new();
    let d = set.distribution.counts();
    let pairs = (n * (n - 1) / 2) as u64;
    if d.iter().sum::<u64>() != pairs || d.contains(&0) {
        bad.push(format!("distribution does not partition the {pairs} pairs"));
    }
    if let Ok(g) = Graph::parse_graph6(&set.representative) {
        if g.edge_count() as u64 != d[0] {
            bad.push(format!(
                "d_1 = {} but the representative has {} edges",
                d[0],
                g.edge_count()
            ));
        }
    }
    let roots = match &set.roots {
        Ok(r) => r,
        Err(e) => {
            bad.push(format!("root finder: {e}"));
            return bad;
        }
    };
    if roots.len() != set.polynomial.degree() {
        bad.push(format!("{} roots for degree {}", roots.len(), set.polynomial.degree()));
    }
    let annulus = set.polynomial.annulus().ok();
    for z in roots {
        if z.residual > RESIDUAL_LIMIT || z.residual.is_nan() {
            bad.push(format!("root {} residual {:e}", describe_root(z), z.residual));
        }
        if annulus.as_ref().is_some_and(|a| !a.contains(z.value(), eps)) {
            bad.push(format!("root {} outside the annulus", describe_root(z)));
        }
        if z.is_real(PAIR_TOLERANCE) && z.re > PAIR_TOLERANCE {
            bad.push(format!("positive real root {}", describe_root(z)));
        }
    }
    if !conjugate_closed(roots) {
        bad.push("root multiset is not closed under conjugation".to_string());
    }
    if set.distribution.diameter() == 2 && !(roots.len() == 1 && roots[0].exact.as_ref().is_some_and(|e| e.is_real())) {
        bad.push("diameter 2 without a single exact real root".to_string());
    }
    let axis = set.polynomial.purely_imaginary_roots();
    for b in axis.iter().map(|r| r.b()) {
        for target in [Complex64::new(0.0, b), Complex64::new(0.0, -b)] {
            if !roots.iter().any(|z| (z.value() - target).norm() <= AXIS_MATCH) {
                bad.push(format!("exact axis root {target} has no numeric match"));
            }
        }
    }
    for z in roots.iter().filter(|z| z.re.abs() <= AXIS_REAL_PART && z.im != 0.0) {
        if !axis.iter().any(|r| (r.b() - z.im.abs()).abs() <= AXIS_MATCH) {
            bad.push(format!(
                "numeric root {} on the axis missed by the exact test",
                describe_root(z)
            ));
        }
    }
    bad
}

/// Greedy pairing of each nonreal root with a conjugate partner.
fn conjugate_closed(roots: &[ComplexRoot]) -> bool {
    let mut unmatched: Vec<Complex64> = roots
        .iter()
        .filter(|z| !z.is_real(PAIR_TOLERANCE))
        .map(ComplexRoot::value)
        .collect();
    while let Some(z) = unmatched.pop() {
        let tol = PAIR_TOLERANCE * z.norm().max(1.0);
        match unmatched.iter().position(|w| (w - z.conj()).norm() <= tol) {
            Some(i) => {
                unmatched.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

fn check_sweep(report: &mut ClaimReport, sweep: &Sweep, eps: f64) {
    let mut roots = 0usize;
    for set in &sweep.sets {
        roots += set.roots.as_ref().map_or(0, Vec::len);
        for problem in check_set(set, sweep.order, eps) {
            report.violation(Evidence::new(set.label(), [problem]));
        }
    }
    report.witness(Evidence::new(
        format!("order {}", sweep.order),
        [format!(
            "{} instances, {} distributions, {roots} roots checked",
            sweep.instances,
            sweep.sets.len()
        )],
    ));
}

pub(super) fn root_properties_graphs(params: &Params, cfg: &VerifyConfig) -> ClaimReport {
    let n = params.usize("n");
    let mut report = ClaimReport::new("root_properties_graphs", params);
    match graph_root_sets(n, cfg.allow_long) {
        Ok(sweep) => check_sweep(&mut report, &sweep, cfg.eps),
        Err(e) => return report.inconclusive(format!("{e}; enable the long sweep")),
    }
    report
}

pub(super) fn root_properties_trees(params: &Params, cfg: &VerifyConfig) -> ClaimReport {
    let n = params.usize("n");
    let mut report = ClaimReport::new("root_properties_trees", params);
    let sweep = tree_root_sets(n).expect("order in registry range");
    check_sweep(&mut report, &sweep, cfg.eps);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn root(re: f64, im: f64) -> ComplexRoot {
        ComplexRoot {
            re,
            im,
            residual: 0.0,
            exact: None,
        }
    }

    #[test]
    fn conjugate_pairing() {
        assert!(conjugate_closed(&[root(-1.0, 2.0), root(-1.0, -2.0), root(-3.0, 0.0)]));
        assert!(!conjugate_closed(&[root(-1.0, 2.0), root(-1.0, -2.5)]));
        assert!(!conjugate_closed(&[root(-1.0, 2.0)]));
    }

    #[test]
    fn small_sweeps_are_clean() {
        let cfg = VerifyConfig::default();
        for n in 2..=6 {
            let r = root_properties_graphs(&Params::new().with("n", n), &cfg);
            assert!(r.passed(), "{r:?}");
        }
        for n in 2..=12 {
            let r = root_properties_trees(&Params::new().with("n", n), &cfg);
            assert!(r.passed(), "{r:?}");
        }
    }
}
