//! One verifier per root-location result. Each verifier takes integer
//! parameters and returns a [`ClaimReport`]; [`run`] dispatches by id and
//! [`profile`] lists the parameter sets of the `quick` and `full` suites.
//!
//! Inequalities on numeric roots are checked with tolerance
//! [`VerifyConfig::eps`]. Attainment and uniqueness are decided exactly on
//! closed-form roots and never by float comparison.

mod augment;
mod constructions;
mod extremal;
mod imaginary;
mod modulus;
mod properties;
mod ratios;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::poly::ComplexRoot;

pub use extremal::{search_extremal, ExtremalReport, Extremum, GraphClass, Objective, SearchError};
pub use sweep::{graph_root_sets, tree_root_sets, RootSet, Sweep};

/// Most counterexamples kept verbatim in a report; the rest are counted.
const MAX_RECORDED: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "inconclusive-budget")]
    InconclusiveBudget,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::InconclusiveBudget => "inconclusive-budget",
        })
    }
}

/// A graph or family member together with the values that make it relevant.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evidence {
    pub subject: String,
    pub values: Vec<String>,
}

impl Evidence {
    pub fn new(subject: impl Into<String>, values: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Evidence {
            subject: subject.into(),
            values: values.into_iter().map(Into::into).collect(),
        }
    }
}

/// Outcome of one verifier run.
///
/// `verdict` is `fail` exactly when `violations > 0`; the first
/// [`MAX_RECORDED`] violations are kept in `counterexamples`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub params: BTreeMap<String, i64>,
    pub verdict: Verdict,
    pub witnesses: Vec<Evidence>,
    pub counterexamples: Vec<Evidence>,
    pub violations: u64,
    pub notes: Vec<String>,
    pub runtime_secs: f64,
}

impl ClaimReport {
    fn new(claim_id: &str, params: &Params) -> Self {
        ClaimReport {
            claim_id: claim_id.to_string(),
            params: params.0.clone(),
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            counterexamples: Vec::new(),
            violations: 0,
            notes: Vec::new(),
            runtime_secs: 0.0,
        }
    }

    fn witness(&mut self, e: Evidence) {
        if self.witnesses.len() < MAX_RECORDED {
            self.witnesses.push(e);
        }
    }

    fn violation(&mut self, e: Evidence) {
        self.violations += 1;
        if self.counterexamples.len() < MAX_RECORDED {
            self.counterexamples.push(e);
        }
        self.verdict = Verdict::Fail;
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    fn inconclusive(mut self, why: impl Into<String>) -> Self {
        self.note(why);
        if self.violations == 0 {
            self.verdict = Verdict::InconclusiveBudget;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// `name=value` pairs joined by spaces, in key order.
    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("claim {claim} has no parameter {param:?}")]
    UnknownParam { claim: &'static str, param: String },
    #[error("{claim}: {param}={value} outside {lo}..={hi}")]
    ParamOutOfRange {
        claim: &'static str,
        param: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    /// Tolerance for inequalities on numeric roots.
    pub eps: f64,
    /// Permits order-8 labeled graph sweeps.
    pub allow_long: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            eps: 1e-8,
            allow_long: cfg!(feature = "long"),
        }
    }
}

/// Resolved integer parameters of one run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, i64>);

impl Params {
    pub fn new() -> Self {
        Params::default()
    }

    pub fn with(mut self, name: &str, value: i64) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    fn get(&self, name: &str) -> i64 {
        self.0[name]
    }

    fn usize(&self, name: &str) -> usize {
        self.get(name) as usize
    }

    fn u64(&self, name: &str) -> u64 {
        self.get(name) as u64
    }
}

/// Allowed range and default of one parameter.
#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
    pub default: i64,
}

const fn p(name: &'static str, lo: i64, hi: i64, default: i64) -> ParamSpec {
    ParamSpec { name, lo, hi, default }
}

type Verifier = fn(&Params, &VerifyConfig) -> ClaimReport;

/// Registry entry for one claim.
#[derive(Clone, Copy)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamSpec],
    run: Verifier,
}

impl fmt::Debug for ClaimInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ClaimInfo").field("id", &self.id).finish()
    }
}

pub const CLAIMS: &[ClaimInfo] = &[
    ClaimInfo {
        id: "max_modulus",
        summary: "every root has |z| <= C(n,2)-1, attained only by K_n - e",
        params: &[p("n", 3, 8, 5)],
        run: modulus::max_modulus,
    },
    ClaimInfo {
        id: "min_modulus",
        summary: "every nonzero root has |z| >= 2/(n-2), attained only by the star",
        params: &[p("n", 3, 8, 5)],
        run: modulus::min_modulus,
    },
    ClaimInfo {
        id: "tree_ratio_bounds",
        summary: "trees satisfy d_k/d_{k+1} <= 2(n-D), and <= 2(n-4) for n >= 5",
        params: &[p("n", 3, 18, 10)],
        run: ratios::tree_ratio_bounds,
    },
    ClaimInfo {
        id: "ratio_lower",
        summary: "connected graphs satisfy d_k/d_{k+1} >= 2/(n-k-1)",
        params: &[p("n", 3, 8, 5)],
        run: ratios::ratio_lower,
    },
    ClaimInfo {
        id: "tree_root_bound",
        summary: "every root of a tree of order n >= 5 has |z| <= 2(n-4)",
        params: &[p("n", 5, 18, 10)],
        run: modulus::tree_root_bound,
    },
    ClaimInfo {
        id: "tn_interval",
        summary: "T_n has a real root in (-(1+1/sqrt2)n+7, -(1+1/sqrt2)n+8) for n >= 6",
        params: &[p("n", 5, 100_000, 6)],
        run: constructions::tn_interval,
    },
    ClaimInfo {
        id: "tn_extremal",
        summary: "T_n is the unique tree of order n with a root of maximum modulus",
        params: &[p("n", 5, 18, 10)],
        run: modulus::tn_extremal,
    },
    ClaimInfo {
        id: "path_annulus",
        summary: "roots of P_n lie in (n-1)/(n-2) <= |z| <= 2",
        params: &[p("n", 3, 400, 10)],
        run: constructions::path_annulus,
    },
    ClaimInfo {
        id: "density",
        summary: "the diameter-2 construction for (a,b) has root exactly -a/b",
        params: &[p("a", 1, 1000, 1), p("b", 1, 1000, 1)],
        run: constructions::density,
    },
    ClaimInfo {
        id: "tree_density_limit",
        summary: "leftmost double-star root of the (a,b,ell) construction tends to -r-1/(4r)",
        params: &[p("a", 1, 100, 1), p("b", 1, 100, 1), p("ell_max", 40, 100_000, 1000)],
        run: constructions::tree_density_limit,
    },
    ClaimInfo {
        id: "double_star_discriminant",
        summary: "double stars have only real roots iff n >= 15",
        params: &[p("n", 4, 2_000, 15)],
        run: constructions::double_star_discriminant,
    },
    ClaimInfo {
        id: "broom_imag",
        summary: "B_{4,n-4} has a nonreal pair with b_n/sqrt(n) -> 2^(-1/2)",
        params: &[p("n_max", 10_000, 1_000_000_000, 1_000_000)],
        run: constructions::broom_imag,
    },
    ClaimInfo {
        id: "broom_real",
        summary: "B_{5,n-5} has a nonreal pair with a_n/n^(1/3) -> 2^(-4/3)",
        params: &[p("n_max", 10_000, 1_000_000_000, 1_000_000)],
        run: constructions::broom_real,
    },
    ClaimInfo {
        id: "pendant_imag",
        summary: "G_n has roots with imaginary parts near n/2",
        params: &[p("n", 4, 1_000_000_000, 10_000)],
        run: constructions::pendant_imag,
    },
    ClaimInfo {
        id: "half_plane",
        summary: "roots reach below -1000, above 100i and right of 10, so no half-plane holds them all",
        params: &[],
        run: constructions::half_plane,
    },
    ClaimInfo {
        id: "extremal_real_trees",
        summary: "the tree with the root of largest real part is P_n (n <= 15) or the order-16/17 fixtures",
        params: &[p("n", 6, 17, 10)],
        run: extremal::extremal_real_trees,
    },
    ClaimInfo {
        id: "extremal_real_graphs",
        summary: "no graph of order <= 5 has a root with positive real part; P_n is extremal for 6 <= n <= 9",
        params: &[p("n", 3, 8, 5)],
        run: extremal::extremal_real_graphs,
    },
    ClaimInfo {
        id: "imaginary_graphs",
        summary: "no graph of order <= 5 has a purely imaginary root; (6,4,3,2) has +-i*sqrt2",
        params: &[p("n", 2, 8, 6)],
        run: imaginary::imaginary_graphs,
    },
    ClaimInfo {
        id: "imaginary_trees",
        summary: "no tree of order < 12 has root i; the order-12 fixture does",
        params: &[p("n", 1, 18, 12)],
        run: imaginary::imaginary_trees,
    },
    ClaimInfo {
        id: "leaf_augmentation",
        summary: "W(T_1) = (x+1)^2 W(T_0) for random trees T_0",
        params: &[p("samples", 1, 100_000, 200), p("min_order", 3, 200, 3), p("max_order", 3, 200, 15)],
        run: augment::leaf_augmentation,
    },
    ClaimInfo {
        id: "leaf_augmentation_real",
        summary: "iterated leaf augmentation keeps real (and rational) root sets real (and rational)",
        params: &[p("max_order", 3, 10, 6), p("rounds", 1, 4, 3)],
        run: augment::leaf_augmentation_real,
    },
    ClaimInfo {
        id: "root_properties_graphs",
        summary: "conjugate closure, annulus containment, nonpositive real roots and distribution sums over all graphs of order n",
        params: &[p("n", 2, 8, 5)],
        run: properties::root_properties_graphs,
    },
    ClaimInfo {
        id: "root_properties_trees",
        summary: "the same properties over all free trees of order n",
        params: &[p("n", 2, 18, 10)],
        run: properties::root_properties_trees,
    },
];

pub fn claim(id: &str) -> Result<&'static ClaimInfo, ClaimError> {
    CLAIMS
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| ClaimError::UnknownClaim(id.to_string()))
}

impl ClaimInfo {
    /// Fills defaults and checks names and ranges.
    pub fn resolve(&self, given: &BTreeMap<String, i64>) -> Result<Params, ClaimError> {
        if let Some(unknown) = given.keys().find(|k| !self.params.iter().any(|p| p.name == k.as_str())) {
            return Err(ClaimError::UnknownParam {
                claim: self.id,
                param: unknown.clone(),
            });
        }
        let mut out = Params::new();
        for spec in self.params {
            let value = given.get(spec.name).copied().unwrap_or(spec.default);
            if !(spec.lo..=spec.hi).contains(&value) {
                return Err(ClaimError::ParamOutOfRange {
                    claim: self.id,
                    param: spec.name,
                    value,
                    lo: spec.lo,
                    hi: spec.hi,
                });
            }
            out = out.with(spec.name, value);
        }
        Ok(out)
    }

    pub fn run(&self, params: &Params, config: &VerifyConfig) -> ClaimReport {
        let start = Instant::now();
        let mut report = (self.run)(params, config);
        report.runtime_secs = start.elapsed().as_secs_f64();
        report
    }
}

/// Runs claim `id` with `given` parameters (missing ones take defaults).
pub fn run(id: &str, given: &BTreeMap<String, i64>, config: &VerifyConfig) -> Result<ClaimReport, ClaimError> {
    let info = claim(id)?;
    let params = info.resolve(given)?;
    Ok(info.run(&params, config))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(format!("unknown profile {other:?} (expected quick or full)")),
        }
    }
}

/// A claim id with fully specified parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Job {
    pub claim: &'static str,
    pub params: BTreeMap<String, i64>,
}

fn jobs_over(claim: &'static str, name: &str, values: impl IntoIterator<Item = i64>) -> Vec<Job> {
    values
        .into_iter()
        .map(|v| Job {
            claim,
            params: BTreeMap::from([(name.to_string(), v)]),
        })
        .collect()
}

fn job(claim: &'static str, params: &[(&str, i64)]) -> Job {
    Job {
        claim,
        params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
    }
}

/// Parameter sets making up a suite. `quick` stays at small orders; `full`
/// covers every range of the acceptance criteria.
pub fn profile(which: Profile, config: &VerifyConfig) -> Vec<Job> {
    let full = which == Profile::Full;
    let graph_max = if config.allow_long { 8 } else { 7 };
    let (g_hi, tree_hi, ratio_tree_hi) = if full { (graph_max, 17, 14) } else { (6, 12, 10) };
    let mut jobs = Vec::new();
    jobs.extend(jobs_over("max_modulus", "n", 3..=g_hi));
    jobs.extend(jobs_over("min_modulus", "n", 3..=g_hi));
    jobs.extend(jobs_over("tree_ratio_bounds", "n", 3..=ratio_tree_hi));
    jobs.extend(jobs_over("ratio_lower", "n", 3..=g_hi));
    jobs.extend(jobs_over("tree_root_bound", "n", 5..=tree_hi));
    jobs.extend(jobs_over("tn_interval", "n", 6..=if full { 1000 } else { 100 }));
    jobs.extend(jobs_over("tn_extremal", "n", 5..=tree_hi));
    jobs.extend(jobs_over("path_annulus", "n", 3..=if full { 100 } else { 40 }));
    let ab = if full { 50 } else { 10 };
    for a in 1..=ab {
        for b in 1..=ab {
            jobs.push(job("density", &[("a", a), ("b", b)]));
        }
    }
    for (a, b) in [(1, 2), (1, 1), (2, 1), (5, 1)] {
        jobs.push(job("tree_density_limit", &[("a", a), ("b", b), ("ell_max", 1000)]));
    }
    jobs.extend(jobs_over("double_star_discriminant", "n", 4..=200));
    jobs.push(job("broom_imag", &[("n_max", 1_000_000)]));
    jobs.push(job("broom_real", &[("n_max", 1_000_000)]));
    jobs.push(job("pendant_imag", &[("n", 10_000)]));
    jobs.push(job("half_plane", &[]));
    jobs.extend(jobs_over("extremal_real_trees", "n", 6..=tree_hi));
    jobs.extend(jobs_over("extremal_real_graphs", "n", 3..=g_hi));
    jobs.extend(jobs_over("imaginary_graphs", "n", 2..=g_hi));
    jobs.extend(jobs_over("imaginary_trees", "n", 1..=12));
    jobs.push(job(
        "leaf_augmentation",
        &[("samples", 200), ("min_order", 3), ("max_order", 15)],
    ));
    jobs.push(job("leaf_augmentation_real", &[("max_order", 6), ("rounds", 3)]));
    jobs.extend(jobs_over("root_properties_graphs", "n", 2..=g_hi));
    jobs.extend(jobs_over("root_properties_trees", "n", 2..=tree_hi));
    jobs
}

/// Runs every job, in parallel, returning reports in job order.
pub fn run_jobs(jobs: &[Job], config: &VerifyConfig) -> Result<Vec<ClaimReport>, ClaimError> {
    use rayon::prelude::*;
    let resolved: Vec<(&ClaimInfo, Params)> = jobs
        .iter()
        .map(|j| {
            let info = claim(j.claim)?;
            Ok((info, info.resolve(&j.params)?))
        })
        .collect::<Result<_, ClaimError>>()?;
    Ok(resolved
        .par_iter()
        .map(|(info, params)| info.run(params, config))
        .collect())
}

/// Display of a root: the closed form when known, otherwise `re+imi`.
pub fn describe_root(r: &ComplexRoot) -> String {
    match &r.exact {
        Some(e) => e.to_string(),
        None if r.im == 0.0 => format!("{:.12}", r.re),
        None => format!("{:.12}{:+.12}i", r.re, r.im),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_defaults_in_range() {
        for (i, c) in CLAIMS.iter().enumerate() {
            assert!(CLAIMS[..i].iter().all(|d| d.id != c.id), "{}", c.id);
            for s in c.params {
                assert!((s.lo..=s.hi).contains(&s.default), "{}.{}", c.id, s.name);
            }
        }
    }

    #[test]
    fn parameter_resolution() {
        let info = claim("max_modulus").unwrap();
        assert_eq!(info.resolve(&BTreeMap::new()).unwrap(), Params::new().with("n", 5));
        let bad = BTreeMap::from([("n".to_string(), 2)]);
        assert!(matches!(info.resolve(&bad), Err(ClaimError::ParamOutOfRange { .. })));
        let unknown = BTreeMap::from([("m".to_string(), 2)]);
        assert!(matches!(info.resolve(&unknown), Err(ClaimError::UnknownParam { .. })));
        assert!(matches!(claim("nope"), Err(ClaimError::UnknownClaim(_))));
    }

    #[test]
    fn profiles_resolve() {
        let config = VerifyConfig::default();
        for which in [Profile::Quick, Profile::Full] {
            for j in profile(which, &config) {
                claim(j.claim).unwrap().resolve(&j.params).unwrap();
            }
        }
    }

    #[test]
    fn verdict_follows_violations() {
        let params = Params::new();
        let mut r = ClaimReport::new("x", &params);
        assert!(r.passed());
        r.violation(Evidence::new("g", ["v"]));
        assert_eq!(r.verdict, Verdict::Fail);
        let r = r.inconclusive("budget");
        assert_eq!(r.verdict, Verdict::Fail);
        let r = ClaimReport::new("x", &params).inconclusive("budget");
        assert_eq!(r.verdict, Verdict::InconclusiveBudget);
    }
}
