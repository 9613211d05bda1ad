//! Randomised invariants over graphs, trees, families and polynomials.

// index loops mirror the recurrences and matrices they implement
#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;
use proptest::prelude::*;
use wiener_roots::families::leaf_augment;
use wiener_roots::{FamilySpec, Graph, ReducedPolynomial, WienerPolynomial};

/// Graph on `n` vertices from a bit per unordered pair.
fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, &b)| b).map(|(p, _)| p).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.45), n * (n - 1) / 2).prop_map(move |b| graph_from_bits(n, &b))
    })
}

fn arb_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0..n, n - 2).prop_map(move |seq| {
            let mut degree = vec![1usize; n];
            seq.iter().for_each(|&v| degree[v] += 1);
            let mut edges = Vec::new();
            for &v in &seq {
                let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
                edges.push((leaf, v));
                degree[leaf] -= 1;
                degree[v] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
            edges.push((rest[0], rest[1]));
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

/// All-pairs distances by repeated relaxation on the adjacency matrix.
fn distance_counts(g: &Graph) -> Option<Vec<u64>> {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    let mut counts = Vec::new();
    for v in 0..n {
        for u in 0..v {
            let x = d[u][v];
            if x >= inf {
                return None;
            }
            if counts.len() < x {
                counts.resize(x, 0);
            }
            counts[x - 1] += 1;
        }
    }
    Some(counts)
}

fn check_roots(p: &ReducedPolynomial) -> Result<(), TestCaseError> {
    let roots = p.roots().map_err(|e| TestCaseError::fail(e.to_string()))?;
    prop_assert_eq!(roots.len(), p.degree());
    let annulus = p.annulus().ok();
    let mut nonreal: Vec<Complex64> = Vec::new();
    for z in &roots {
        prop_assert!(z.residual <= 1e-9, "residual {} at {:?}", z.residual, z);
        prop_assert!(p.residual(z.value()) <= 1e-9);
        if let Some(a) = &annulus {
            prop_assert!(a.contains(z.value(), 1e-8), "{:?} outside {:?}", z, a);
        }
        if z.is_real(1e-9) {
            prop_assert!(z.re <= 1e-9, "positive real root {:?}", z);
        } else {
            nonreal.push(z.value());
        }
    }
    while let Some(z) = nonreal.pop() {
        let tol = 1e-9 * z.norm().max(1.0);
        let i = nonreal.iter().position(|w| (w - z.conj()).norm() <= tol);
        prop_assert!(i.is_some(), "{} has no conjugate partner", z);
        nonreal.swap_remove(i.unwrap());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bfs_distribution_matches_floyd(g in arb_graph(9)) {
        match (g.distance_distribution(), distance_counts(&g)) {
            (Ok(d), Some(c)) => {
                let n = g.order() as u64;
                prop_assert_eq!(d.counts(), &c[..]);
                prop_assert_eq!(d.counts().iter().sum::<u64>(), n * (n - 1) / 2);
                prop_assert_eq!(d.counts()[0], g.edge_count() as u64);
                let w = WienerPolynomial::from(&d);
                let index: u64 = c.iter().enumerate().map(|(i, x)| (i as u64 + 1) * x).sum();
                prop_assert_eq!(w.wiener_index(), index.into());
                // W(1) counts every pair once
                let at_one = w.evaluate(Complex64::new(1.0, 0.0));
                prop_assert!((at_one.re - (n * (n - 1) / 2) as f64).abs() < 1e-9);
                prop_assert!(w.evaluate(Complex64::new(0.0, 0.0)).norm() == 0.0);
            }
            (Err(_), None) => prop_assert!(!g.is_connected()),
            (a, b) => prop_assert!(false, "BFS {:?} vs Floyd {:?}", a, b),
        }
    }

    #[test]
    fn serialisations_round_trip(g in arb_graph(12)) {
        let g6 = g.to_graph6().unwrap();
        prop_assert_eq!(&Graph::parse_graph6(&g6).unwrap(), &g);
        prop_assert_eq!(&Graph::parse_edge_list(&g.to_edge_list()).unwrap(), &g);
    }

    #[test]
    fn graph_roots_satisfy_invariants(g in arb_graph(9)) {
        if let Ok(d) = g.distance_distribution() {
            let p = WienerPolynomial::from(&d).reduce();
            check_roots(&p)?;
            if d.diameter() == 2 {
                let roots = p.roots().unwrap();
                prop_assert!(roots.len() == 1 && roots[0].exact.as_ref().is_some_and(|e| e.is_real()));
            }
        }
    }

    #[test]
    fn tree_roots_satisfy_invariants(t in arb_tree(16)) {
        let d = t.distance_distribution().unwrap();
        check_roots(&WienerPolynomial::from(&d).reduce())?;
    }

    #[test]
    fn positive_polynomials_satisfy_invariants(c in prop::collection::vec(1u64..=1000, 1..14)) {
        check_roots(&ReducedPolynomial::from_coefficients(&c).unwrap())?;
    }

    #[test]
    fn imaginary_axis_test_matches_numeric_roots(g in arb_graph(8)) {
        if let Ok(d) = g.distance_distribution() {
            let p = WienerPolynomial::from(&d).reduce();
            let roots = p.roots().unwrap();
            let axis = p.purely_imaginary_roots();
            for b in axis.iter().map(|r| r.b()) {
                prop_assert!(roots.iter().any(|z| (z.value() - Complex64::new(0.0, b)).norm() <= 1e-8));
            }
            for z in roots.iter().filter(|z| z.re.abs() <= 1e-10 && z.im != 0.0) {
                prop_assert!(axis.iter().any(|r| (r.b() - z.im.abs()).abs() <= 1e-8), "{:?}", z);
            }
        }
    }

    /// Leaf augmentation adds exactly `n x` on top of `(x+1)^2 W(T0)`.
    #[test]
    fn leaf_augmentation_excess_is_n_x(t in arb_tree(14)) {
        let n = t.order() as u64;
        let w0 = WienerPolynomial::from(&t.distance_distribution().unwrap());
        let t1 = leaf_augment(&t).unwrap();
        prop_assert!(t1.is_tree());
        prop_assert_eq!(t1.order() as u64, 2 * n);
        let w1 = WienerPolynomial::from(&t1.distance_distribution().unwrap());
        let mut expected: Vec<u64> = w0
            .times_x_plus_one_pow(2)
            .counts()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect();
        expected[0] += n;
        prop_assert_eq!(w1, WienerPolynomial::from_counts(&expected).unwrap());
    }

    #[test]
    fn family_closed_forms_match_bfs(
        which in 0usize..9,
        a in 1u64..30,
        b in 1u64..30,
    ) {
        let n = a + 4;
        let spec = match which {
            0 => FamilySpec::Complete { n: a + 1 },
            1 => FamilySpec::CompleteMinusEdge { n: a + 2 },
            2 => FamilySpec::Star { n: a + 2 },
            3 => FamilySpec::Path { n: a + 1 },
            4 => FamilySpec::DoubleStar { k: 2 + b % (n / 2 - 1), n },
            5 => FamilySpec::Broom { k: 3 + b % (n - 3), n },
            6 => FamilySpec::TreeTn { n: a + 4 },
            7 => FamilySpec::PendantGn { n: a + 3 },
            _ => {
                let n = a + 2;
                let lo = n - 1;
                let hi = n * (n - 1) / 2;
                FamilySpec::Diameter2 { n, m: lo + b % (hi - lo) }
            }
        };
        prop_assert!(spec.validate().is_ok(), "{} invalid", spec);
        let g = spec.graph().unwrap();
        prop_assert_eq!(g.order() as u64, spec.order());
        let bfs = WienerPolynomial::from(&g.distance_distribution().unwrap());
        prop_assert_eq!(spec.polynomial().unwrap(), bfs.clone());
        if let Some(closed) = spec.closed_form().unwrap() {
            prop_assert_eq!(closed, bfs);
        }
        let round: FamilySpec = spec.to_string().parse().unwrap();
        prop_assert_eq!(round, spec);
    }
}
