//! Verifiers built on closed-form families: the `T_n` interval, the path
//! annulus, both density constructions, double-star discriminants, broom and
//! pendant asymptotics, and the half-plane certificates.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{describe_root, ClaimReport, Evidence, Params, VerifyConfig};
use crate::families::{self, dense_construct, tree_dense_construct, FamilySpec};
use crate::poly::{exact, ComplexRoot, ExactRoot, ReducedPolynomial, RESIDUAL_LIMIT};

/// Real-root test for numeric roots.
const REAL_TOLERANCE: f64 = 1e-9;

fn reduced(spec: FamilySpec) -> ReducedPolynomial {
    spec.polynomial().expect("parameters validated").reduce()
}

fn roots_of(spec: FamilySpec, report: &mut ClaimReport) -> Option<Vec<ComplexRoot>> {
    match reduced(spec).roots() {
        Ok(r) => Some(r),
        Err(e) => {
            report.violation(Evidence::new(spec.to_string(), [format!("root finder: {e}")]));
            None
        }
    }
}

/// `a + b√2`.
#[derive(Clone)]
struct Surd2(BigRational, BigRational);

impl Surd2 {
    fn mul(&self, o: &Surd2) -> Surd2 {
        let two = BigRational::from_integer(2.into());
        Surd2(&self.0 * &o.0 + two * &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }

    fn sign(&self) -> Sign {
        exact::sign_of_surd(&self.0, &self.1, &BigInt::from(2))
    }
}

fn eval_surd(p: &ReducedPolynomial, x: &Surd2) -> Surd2 {
    p.coefficients()
        .iter()
        .rev()
        .fold(Surd2(BigRational::zero(), BigRational::zero()), |acc, c| {
            let mut v = acc.mul(x);
            v.0 += BigRational::from_integer(BigInt::from(c.clone()));
            v
        })
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Minus => "-",
        Sign::NoSign => "0",
        Sign::Plus => "+",
    }
}

pub(super) fn tn_interval(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let n = params.u64("n");
    let mut report = ClaimReport::new("tn_interval", params);
    if n < 6 {
        return report.inconclusive("the interval is asserted for n >= 6 only");
    }
    let spec = FamilySpec::TreeTn { n };
    let p = reduced(spec);
    // endpoints c - (n/2)√2 for c = 7 - n and 8 - n
    let half_n = BigRational::new(BigInt::from(n), BigInt::from(2));
    let endpoint = |c: i64| Surd2(BigRational::from_integer((c - n as i64).into()), -half_n.clone());
    let left = eval_surd(&p, &endpoint(7)).sign();
    let right = eval_surd(&p, &endpoint(8)).sign();
    let signs = format!("signs at endpoints: {} {}", sign_str(left), sign_str(right));
    if left != Sign::Minus || right != Sign::Plus {
        report.violation(Evidence::new(spec.to_string(), [signs.clone()]));
    }
    let lo = -(1.0 + std::f64::consts::FRAC_1_SQRT_2) * n as f64 + 7.0;
    let hi = lo + 1.0;
    let Some(roots) = roots_of(spec, &mut report) else {
        return report;
    };
    match roots
        .iter()
        .find(|z| z.is_real(REAL_TOLERANCE) && lo < z.re && z.re < hi)
    {
        Some(z) => report.witness(Evidence::new(
            spec.to_string(),
            [signs, format!("root {} in ({lo:.6}, {hi:.6})", describe_root(z))],
        )),
        None => report.violation(Evidence::new(
            spec.to_string(),
            [format!("no numeric root in ({lo:.6}, {hi:.6})")],
        )),
    }
    report
}

pub(super) fn path_annulus(params: &Params, cfg: &VerifyConfig) -> ClaimReport {
    let n = params.u64("n");
    let mut report = ClaimReport::new("path_annulus", params);
    let spec = FamilySpec::Path { n };
    let p = reduced(spec);
    let inner = BigRational::new(BigInt::from(n - 1), BigInt::from(n - 2));
    let outer = BigRational::from_integer(2.into());
    match p.annulus() {
        Ok(a) if a.inner == inner && a.outer == outer => {}
        Ok(a) => report.violation(Evidence::new(
            spec.to_string(),
            [format!("annulus [{}, {}]", a.inner, a.outer)],
        )),
        Err(e) => report.violation(Evidence::new(spec.to_string(), [e.to_string()])),
    }
    let Some(roots) = roots_of(spec, &mut report) else {
        return report;
    };
    let (lo, hi) = (exact::to_f64(&inner), 2.0);
    let mut extremes = (f64::INFINITY, 0.0f64);
    for z in &roots {
        let m = z.modulus();
        extremes = (extremes.0.min(m), extremes.1.max(m));
        if m < lo - cfg.eps || m > hi + cfg.eps || z.residual > RESIDUAL_LIMIT {
            report.violation(Evidence::new(
                spec.to_string(),
                [format!(
                    "root {} modulus {m:.12} residual {:e}",
                    describe_root(z),
                    z.residual
                )],
            ));
        }
    }
    if roots.len() as u64 != n - 2 {
        report.violation(Evidence::new(
            spec.to_string(),
            [format!("{} roots for degree {}", roots.len(), n - 2)],
        ));
    }
    report.witness(Evidence::new(
        spec.to_string(),
        [format!(
            "moduli in [{:.12}, {:.12}] within [{inner}, 2]",
            extremes.0, extremes.1
        )],
    ));
    report
}

pub(super) fn density(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let (a, b) = (params.u64("a"), params.u64("b"));
    let mut report = ClaimReport::new("density", params);
    let (spec, target) = dense_construct(a, b).expect("a, b >= 1");
    let closed = spec.closed_form().expect("valid").expect("diameter2 has a closed form");
    match spec.graph() {
        Ok(g) => {
            let dd = g.distance_distribution().expect("diameter-2 construction is connected");
            if crate::poly::WienerPolynomial::from(&dd) != closed || dd.diameter() != 2 {
                report.violation(Evidence::new(spec.to_string(), [format!("constructed graph has {dd}")]));
            }
        }
        Err(e) => report.note(format!("graph not materialised: {e}")),
    }
    let p = closed.reduce();
    let Some(roots) = roots_of(spec, &mut report) else {
        return report;
    };
    let exact_roots: Vec<_> = roots.iter().filter_map(|z| z.exact.clone()).collect();
    let ok = roots.len() == 1
        && exact_roots == [ExactRoot::Rational(target.clone())]
        && p.rational_roots() == [target.clone()];
    let ev = Evidence::new(
        spec.to_string(),
        [format!(
            "root {} (target {target})",
            roots.iter().map(describe_root).collect::<Vec<_>>().join(", ")
        )],
    );
    if ok {
        report.witness(ev);
    } else {
        report.violation(ev);
    }
    report
}

/// Real root of smallest real part.
fn leftmost_real(roots: &[ComplexRoot]) -> Option<&ComplexRoot> {
    roots
        .iter()
        .filter(|z| z.is_real(REAL_TOLERANCE))
        .min_by(|a, b| a.re.total_cmp(&b.re))
}

fn fmt_devs(devs: &[f64]) -> String {
    devs.iter().map(|d| format!("{d:.3e}")).collect::<Vec<_>>().join(", ")
}

/// True when every deviation is strictly smaller than the one before.
fn decreasing(devs: &[f64]) -> bool {
    devs.windows(2).all(|w| w[1] < w[0])
}

pub(super) fn tree_density_limit(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let (a, b, ell_max) = (params.u64("a"), params.u64("b"), params.u64("ell_max"));
    let mut report = ClaimReport::new("tree_density_limit", params);
    let r = a as f64 / b as f64;
    let limit = -r - 1.0 / (4.0 * r);
    let mut devs = Vec::new();
    for ell in [ell_max / 8, ell_max / 4, ell_max / 2, ell_max] {
        let spec = match tree_dense_construct(a, b, ell) {
            Ok(s) => s,
            Err(e) => {
                report.violation(Evidence::new(format!("ell={ell}"), [e.to_string()]));
                return report;
            }
        };
        let Some(roots) = roots_of(spec, &mut report) else {
            return report;
        };
        let Some(z) = leftmost_real(&roots) else {
            report.violation(Evidence::new(spec.to_string(), ["no real root"]));
            return report;
        };
        let dev = ((z.re - limit) / limit).abs();
        devs.push(dev);
        report.witness(Evidence::new(
            format!("ell={ell} {spec}"),
            [
                format!("leftmost {:.12}", z.re),
                format!("limit {limit:.12}"),
                format!("relative deviation {dev:.3e}"),
            ],
        ));
    }
    let last = *devs.last().expect("four rungs");
    if last > 0.01 || !decreasing(&devs) {
        report.violation(Evidence::new(
            format!("r={a}/{b}"),
            [format!(
                "deviations {}: need <= 1% at ell={ell_max} and strictly decreasing",
                fmt_devs(&devs)
            )],
        ));
    }
    report
}

pub(super) fn double_star_discriminant(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let n = params.u64("n");
    let mut report = ClaimReport::new("double_star_discriminant", params);
    let mut negative = Vec::new();
    let mut min: Option<(BigInt, u64)> = None;
    for k in 2..=n / 2 {
        let disc = families::double_star_discriminant(k, n);
        let spec = FamilySpec::DoubleStar { k, n };
        // the root finder's exact quadratic is an independent route to realness
        if let Some(roots) = roots_of(spec, &mut report) {
            let all_real = roots.iter().all(|z| z.is_real(REAL_TOLERANCE));
            if all_real == disc.is_negative() {
                report.violation(Evidence::new(
                    spec.to_string(),
                    [format!(
                        "discriminant {disc} disagrees with roots {}",
                        roots.iter().map(describe_root).collect::<Vec<_>>().join(", ")
                    )],
                ));
            }
        }
        if disc.is_negative() {
            negative.push(k);
        }
        if min.as_ref().is_none_or(|(m, _)| disc < *m) {
            min = Some((disc, k));
        }
    }
    let (min_disc, min_k) = min.expect("n >= 4 gives k = 2");
    let summary = format!("minimum discriminant {min_disc} at k={min_k}");
    if n <= 14 {
        match negative.first() {
            Some(&k) => report.witness(Evidence::new(
                FamilySpec::DoubleStar { k, n }.to_string(),
                [format!("negative discriminant; nonreal for k in {negative:?}")],
            )),
            None => report.violation(Evidence::new(
                format!("n={n}"),
                [format!("no nonreal double star; {summary}")],
            )),
        }
    } else if negative.is_empty() {
        report.witness(Evidence::new(format!("n={n}"), [summary]));
    } else {
        report.violation(Evidence::new(
            format!("n={n}"),
            [format!("negative discriminant for k in {negative:?}")],
        ));
    }
    report
}

/// `n_max / 1000, n_max / 100, n_max / 10, n_max`.
fn ladder(n_max: u64) -> [u64; 4] {
    [n_max / 1000, n_max / 100, n_max / 10, n_max]
}

/// Normalised quantity of a designated root along the ladder; passes when
/// within `tol` of 1 at the top rung with strictly decreasing deviation.
fn asymptotic(
    report: &mut ClaimReport,
    rungs: &[u64],
    family: impl Fn(u64) -> FamilySpec,
    pick: impl Fn(&[ComplexRoot]) -> Option<&ComplexRoot>,
    normalise: impl Fn(&ComplexRoot, u64) -> f64,
    tol: f64,
) {
    let mut devs = Vec::new();
    for &n in rungs {
        let spec = family(n);
        let Some(roots) = roots_of(spec, report) else { return };
        let Some(z) = pick(&roots) else {
            report.violation(Evidence::new(spec.to_string(), ["no nonreal root pair"]));
            return;
        };
        let q = normalise(z, n);
        devs.push((q - 1.0).abs());
        report.witness(Evidence::new(
            spec.to_string(),
            [format!("root {}", describe_root(z)), format!("normalised {q:.9}")],
        ));
    }
    let last = *devs.last().expect("nonempty ladder");
    if last > tol || !decreasing(&devs) {
        report.violation(Evidence::new(
            "ladder",
            [format!(
                "deviations {}: need <= {tol} at the top and strictly decreasing",
                fmt_devs(&devs)
            )],
        ));
    }
}

fn upper_nonreal(roots: &[ComplexRoot], key: impl Fn(&ComplexRoot) -> f64) -> Option<&ComplexRoot> {
    roots
        .iter()
        .filter(|z| !z.is_real(REAL_TOLERANCE) && z.im > 0.0)
        .max_by(|a, b| key(a).total_cmp(&key(b)))
}

pub(super) fn broom_imag(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let mut report = ClaimReport::new("broom_imag", params);
    asymptotic(
        &mut report,
        &ladder(params.u64("n_max")),
        |n| FamilySpec::Broom { k: 4, n },
        |r| upper_nonreal(r, |z| z.im),
        |z, n| z.im / (n as f64).sqrt() / std::f64::consts::FRAC_1_SQRT_2,
        0.05,
    );
    report
}

pub(super) fn broom_real(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let mut report = ClaimReport::new("broom_real", params);
    asymptotic(
        &mut report,
        &ladder(params.u64("n_max")),
        |n| FamilySpec::Broom { k: 5, n },
        |r| upper_nonreal(r, |z| z.re),
        |z, n| z.re / (n as f64).cbrt() / 2f64.powf(-4.0 / 3.0),
        0.05,
    );
    report
}

pub(super) fn pendant_imag(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let n = params.u64("n");
    let mut report = ClaimReport::new("pendant_imag", params);
    let spec = FamilySpec::PendantGn { n };
    let Some(roots) = roots_of(spec, &mut report) else {
        return report;
    };
    let nf = n as f64;
    let (re, im_sq) = (1.0 - nf / 2.0, (nf * nf - 2.0 * nf) / 4.0);
    let Some(z) = upper_nonreal(&roots, |z| z.im) else {
        report.violation(Evidence::new(spec.to_string(), ["no nonreal root pair"]));
        return report;
    };
    // the quadratic formula -n/2 + 1 ± (1/2)√(2n - n²) is an independent route
    let formula_ok =
        (z.re - re).abs() <= 1e-9 * re.abs().max(1.0) && (z.im * z.im - im_sq).abs() <= 1e-9 * im_sq.max(1.0);
    let q = z.im / (nf / 2.0);
    let ev = Evidence::new(
        spec.to_string(),
        [format!("root {}", describe_root(z)), format!("im/(n/2) = {q:.9}")],
    );
    if formula_ok && (q - 1.0).abs() <= 0.01 {
        report.witness(ev);
    } else {
        report.violation(ev);
    }
    report
}

/// A family member, what its root certifies, and the test a root must pass.
type Certificate = (FamilySpec, &'static str, fn(&ComplexRoot) -> bool);

pub(super) fn half_plane(params: &Params, _cfg: &VerifyConfig) -> ClaimReport {
    let mut report = ClaimReport::new("half_plane", params);
    let certificates: [Certificate; 3] = [
        (FamilySpec::CompleteMinusEdge { n: 50 }, "real root below -1000", |z| {
            z.is_real(REAL_TOLERANCE) && z.re < -1000.0
        }),
        (
            FamilySpec::Broom { k: 4, n: 100_000 },
            "imaginary part above 100",
            |z| z.im > 100.0,
        ),
        (FamilySpec::Broom { k: 5, n: 1_000_000 }, "real part above 10", |z| {
            z.re > 10.0
        }),
    ];
    for (spec, what, test) in certificates {
        let Some(roots) = roots_of(spec, &mut report) else {
            continue;
        };
        match roots.iter().find(|z| test(z)) {
            Some(z) => report.witness(Evidence::new(
                spec.to_string(),
                [format!("{what}: {}", describe_root(z))],
            )),
            None => report.violation(Evidence::new(spec.to_string(), [format!("no root with {what}")])),
        }
    }
    report
}
