//! Exact bounds on consecutive distance-count ratios `d_k / d_{k+1}`.

use super::sweep::{graph_root_sets, tree_root_sets, Sweep};
use super::{ClaimReport, Evidence, Params, VerifyConfig};

/// Runs `check(k, d_k, d_{k+1}, D)` on every consecutive pair; it returns
/// `Some(true)` on equality, `Some(false)` on violation and `None` otherwise.
fn scan(report: &mut ClaimReport, sweep: &Sweep, check: impl Fn(u64, u64, u64, u64) -> Option<bool>, what: &str) {
    let mut tight = 0usize;
    for set in &sweep.sets {
        let d = set.distribution.counts();
        let diameter = d.len() as u64;
        for (i, w) in d.windows(2).enumerate() {
            let k = i as u64 + 1;
            match check(k, w[0], w[1], diameter) {
                Some(true) => {
                    tight += 1;
                    report.witness(Evidence::new(
                        set.label(),
                        [format!("k={k}: d_k/d_(k+1) = {}/{} attains {what}", w[0], w[1])],
                    ));
                }
                Some(false) => report.violation(Evidence::new(
                    set.label(),
                    [format!("k={k}: d_k/d_(k+1) = {}/{} violates {what}", w[0], w[1])],
                )),
                None => {}
            }
        }
    }
    report.note(format!(
        "{what}: {tight} tight ratios over {} distributions",
        sweep.sets.len()
    ));
}

fn compare(lhs: u64, rhs: u64) -> Option<bool> {
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Equal => Some(true),
        std::cmp::Ordering::Greater => Some(false),
        std::cmp::Ordering::Less => None,
    }
}

pub(super) fn tree_ratio_bounds(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let n = params.u64("n");
    let mut report = ClaimReport::new("tree_ratio_bounds", params);
    let sweep = tree_root_sets(n as usize).expect("order in registry range");
    // d_k <= 2(n - D) d_{k+1}
    scan(
        &mut report,
        &sweep,
        |_, a, b, dia| compare(a, 2 * (n - dia) * b),
        "2(n-D)",
    );
    if n >= 5 {
        scan(&mut report, &sweep, |_, a, b, _| compare(a, 2 * (n - 4) * b), "2(n-4)");
    }
    report
}

pub(super) fn ratio_lower(params: &Params, cfg: &VerifyConfig) -> ClaimReport {
    let n = params.u64("n");
    let mut report = ClaimReport::new("ratio_lower", params);
    let sweep = match graph_root_sets(n as usize, cfg.allow_long) {
        Ok(s) => s,
        Err(e) => return report.inconclusive(format!("{e}; enable the long sweep")),
    };
    // d_k (n - k - 1) >= 2 d_{k+1}
    scan(
        &mut report,
        &sweep,
        |k, a, b, _| compare(2 * b, a * (n - k - 1)),
        "2/(n-k-1)",
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_hold_at_small_orders() {
        for n in 3..=9 {
            let r = tree_ratio_bounds(&Params::new().with("n", n), &VerifyConfig::default());
            assert!(r.passed(), "{r:?}");
        }
        let r = ratio_lower(&Params::new().with("n", 5), &VerifyConfig::default());
        assert!(r.passed());
        assert!(r.witnesses.iter().any(|w| w.subject.ends_with("(4,6)")));
    }

    #[test]
    fn path_of_three_is_tight() {
        let r = tree_ratio_bounds(&Params::new().with("n", 3), &VerifyConfig::default());
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.witnesses[0].values[0].contains("2/1"));
    }
}
