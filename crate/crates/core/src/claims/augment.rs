//! Leaf augmentation: the polynomial identity and preservation of real
//! roots under iteration.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::sweep::tree_root_sets;
use super::{describe_root, ClaimReport, Evidence, Params, VerifyConfig};
use crate::families::leaf_augment;
use crate::graph::Graph;
use crate::poly::WienerPolynomial;

/// Fixed so that reports are reproducible.
const SAMPLE_SEED: u64 = 0x5745_494e_4552;

/// Labeled tree with the given Prüfer sequence over `0..seq.len() + 2`.
pub(crate) fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Graph::empty(n);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf remains");
        g.link(leaf, v);
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    g.link(rest[0], rest[1]);
    g
}

fn signed(w: &WienerPolynomial) -> Vec<BigInt> {
    w.counts().iter().map(|c| BigInt::from(c.clone())).collect()
}

/// `sum c_i x^(i+1)` with zero terms dropped.
fn show(c: &[BigInt]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, v)| **v != BigInt::from(0))
        .map(|(i, v)| {
            if i == 0 {
                format!("{v}x")
            } else {
                format!("{v}x^{}", i + 1)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub(super) fn leaf_augmentation(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let samples = params.u64("samples");
    let (lo, hi) = (params.usize("min_order"), params.usize("max_order"));
    let mut report = ClaimReport::new("leaf_augmentation", params);
    if lo > hi {
        return report.inconclusive("empty order range");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut matched = 0u64;
    for _ in 0..samples {
        let n = rng.gen_range(lo..=hi);
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let t0 = prufer_tree(&seq);
        let w0 = WienerPolynomial::from(&t0.distance_distribution().expect("tree"));
        let t1 = leaf_augment(&t0).expect("order >= 3 tree");
        let w1 = WienerPolynomial::from(&t1.distance_distribution().expect("tree"));
        let predicted = w0.times_x_plus_one_pow(2);
        let subject = format!("{} (order {n})", t0.to_graph6().unwrap_or_else(|| t0.to_edge_list()));
        if w1 == predicted {
            matched += 1;
            report.witness(Evidence::new(subject, [format!("W(T1) = {w1}")]));
        } else {
            let (a, b) = (signed(&w1), signed(&predicted));
            let len = a.len().max(b.len());
            let diff: Vec<BigInt> = (0..len)
                .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
                .collect();
            report.violation(Evidence::new(
                subject,
                [
                    format!("W(T1) = {w1}"),
                    format!("(x+1)^2 W(T0) = {predicted}"),
                    format!("difference {}", show(&diff)),
                ],
            ));
        }
    }
    report.note(format!("{matched} of {samples} samples satisfy the identity"));
    report
}

pub(super) fn leaf_augmentation_real(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let (max_order, rounds) = (params.usize("max_order"), params.u64("rounds"));
    let mut report = ClaimReport::new("leaf_augmentation_real", params);
    let mut starts = 0;
    for n in 3..=max_order {
        let sweep = tree_root_sets(n).expect("small order");
        for set in &sweep.sets {
            let Ok(roots) = &set.roots else { continue };
            if !roots.iter().all(|z| z.is_real(1e-9)) {
                continue;
            }
            starts += 1;
            let rational = set.polynomial.rational_roots().len() == set.polynomial.degree();
            let mut t = Graph::parse_graph6(&set.representative).expect("own graph6");
            for k in 1..=rounds {
                t = leaf_augment(&t).expect("trees stay trees");
                let w = WienerPolynomial::from(&t.distance_distribution().expect("tree"));
                let p = w.reduce();
                let subject = format!("{} after {k} augmentation(s)", set.label());
                let roots = match p.roots() {
                    Ok(r) => r,
                    Err(e) => {
                        report.violation(Evidence::new(subject, [format!("root finder: {e}")]));
                        break;
                    }
                };
                if let Some(z) = roots.iter().find(|z| !z.is_real(1e-9)) {
                    report.violation(Evidence::new(
                        subject,
                        [format!("W = {w}"), format!("nonreal root {}", describe_root(z))],
                    ));
                    break;
                }
                if rational && p.rational_roots().len() != p.degree() {
                    report.violation(Evidence::new(
                        subject,
                        [format!("W = {w}"), "irrational root".to_string()],
                    ));
                    break;
                }
                if k == rounds {
                    report.witness(Evidence::new(subject, [format!("all {} roots real", roots.len())]));
                }
            }
        }
    }
    report.note(format!(
        "{starts} real-rooted starting distributions of order 3..={max_order}"
    ));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_decoding() {
        let star = prufer_tree(&[0, 0, 0]);
        assert_eq!(star.degree(0), 4);
        assert!(star.is_tree());
        let path = prufer_tree(&[1, 2]);
        assert!(path.is_tree());
        assert_eq!(path.diameter().unwrap(), 3);
        assert!(prufer_tree(&[]).is_tree());
    }

    #[test]
    fn identity_residual_is_n_x() {
        let r = leaf_augmentation(
            &Params::new()
                .with("samples", 20)
                .with("min_order", 3)
                .with("max_order", 9),
            &VerifyConfig::default(),
        );
        assert_eq!(r.violations, 20);
        for c in &r.counterexamples {
            let n: usize = c
                .subject
                .rsplit("order ")
                .next()
                .unwrap()
                .trim_end_matches(')')
                .parse()
                .unwrap();
            assert_eq!(c.values[2], format!("difference {n}x"));
        }
    }
}
