//! Exact detection of roots on the imaginary axis.
//!
//! Writing `p(x) = E(x^2) + x·O(x^2)`, a point `bi` with `b != 0` is a root
//! exactly when `t = -b^2` is a common root of `E` and `O`. The negative
//! real roots of `gcd(E, O)` are isolated with a Sturm chain.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::exact::{self, QPoly};
use super::ReducedPolynomial;

/// Bisection stops once an isolating interval is this narrow.
const ISOLATION_WIDTH_LOG2: u32 = 40;

/// A conjugate pair `±bi` of roots, described through `b^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ImaginaryAxisRoot {
    /// `b^2` is rational and known exactly.
    Exact {
        #[serde(serialize_with = "super::as_string")]
        b_squared: BigRational,
    },
    /// `b^2` is irrational and lies in `[lo, hi]`.
    Isolated {
        #[serde(serialize_with = "super::as_string")]
        lo: BigRational,
        #[serde(serialize_with = "super::as_string")]
        hi: BigRational,
    },
}

impl ImaginaryAxisRoot {
    /// Positive imaginary part `b`.
    pub fn b(&self) -> f64 {
        match self {
            ImaginaryAxisRoot::Exact { b_squared } => exact::to_f64(b_squared).sqrt(),
            ImaginaryAxisRoot::Isolated { lo, hi } => ((exact::to_f64(lo) + exact::to_f64(hi)) / 2.0).sqrt(),
        }
    }

    /// True iff the pair is exactly `±i`.
    pub fn is_unit(&self) -> bool {
        matches!(self, ImaginaryAxisRoot::Exact { b_squared } if b_squared.is_one())
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, ImaginaryAxisRoot::Exact { .. })
    }
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| BigRational::new(n, d))
}

impl fmt::Display for ImaginaryAxisRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImaginaryAxisRoot::Exact { b_squared } => match rational_sqrt(b_squared) {
                Some(b) => write!(f, "{b}"),
                None => write!(f, "sqrt({b_squared})"),
            },
            ImaginaryAxisRoot::Isolated { lo, hi } => write!(f, "sqrt([{lo}, {hi}])"),
        }
    }
}

pub(crate) fn find(p: &ReducedPolynomial) -> Vec<ImaginaryAxisRoot> {
    let c = exact::from_ints(&p.signed());
    if c.len() < 2 {
        return Vec::new();
    }
    let even: QPoly = c.iter().step_by(2).cloned().collect();
    let odd: QPoly = c.iter().skip(1).step_by(2).cloned().collect();
    let g = exact::gcd(&even, &odd);
    if exact::degree(&g) == 0 {
        return Vec::new();
    }
    let mut out: Vec<ImaginaryAxisRoot> = negative_roots(g)
        .into_iter()
        .map(|r| match r {
            NegativeRoot::Exact(t) => ImaginaryAxisRoot::Exact { b_squared: -t },
            NegativeRoot::Isolated(lo, hi) => ImaginaryAxisRoot::Isolated { lo: -hi, hi: -lo },
        })
        .collect();
    out.sort_by(|a, b| a.b().total_cmp(&b.b()));
    out
}

enum NegativeRoot {
    Exact(BigRational),
    Isolated(BigRational, BigRational),
}

fn square_free(g: &QPoly) -> QPoly {
    let d = exact::gcd(g, &exact::derivative(g));
    if exact::degree(&d) == 0 {
        return g.clone();
    }
    let (q, _) = exact::div_rem(g, &d);
    q
}

fn cauchy_bound(g: &QPoly) -> BigRational {
    let d = exact::degree(g);
    let lead = g[d].abs();
    let max = g[..d]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::one()
}

/// Distinct negative real roots of `g`.
fn negative_roots(g: QPoly) -> Vec<NegativeRoot> {
    let width = BigRational::new(BigInt::one(), BigInt::one() << ISOLATION_WIDTH_LOG2);
    let two = BigRational::from_integer(2.into());
    let mut g = square_free(&g);
    let mut found = Vec::new();
    'restart: loop {
        if exact::degree(&g) == 0 {
            return found;
        }
        let chain = exact::sturm_chain(&g);
        let lo = -cauchy_bound(&g);
        let hi = BigRational::zero();
        let total = exact::sign_changes(&chain, &lo) - exact::sign_changes(&chain, &hi);
        let mut stack = vec![(lo, hi, total)];
        let mut isolated = Vec::new();
        while let Some((a, b, count)) = stack.pop() {
            if count == 0 {
                continue;
            }
            if count == 1 && &b - &a <= width {
                isolated.push((a, b));
                continue;
            }
            let mid = (&a + &b) / &two;
            if exact::eval(&g, &mid).is_zero() {
                let linear = vec![-mid.clone(), BigRational::one()];
                g = exact::div_rem(&g, &linear).0;
                found.push(NegativeRoot::Exact(mid));
                continue 'restart;
            }
            let left = exact::sign_changes(&chain, &a) - exact::sign_changes(&chain, &mid);
            stack.push((a, mid.clone(), left));
            stack.push((mid, b, count - left));
        }
        let ints = exact::primitive(&g);
        let lead = ints.last().expect("nonconstant").abs();
        for (a, b) in isolated {
            match rational_in(&ints, &lead, &a, &b) {
                Some(t) => found.push(NegativeRoot::Exact(t)),
                None => found.push(NegativeRoot::Isolated(a, b)),
            }
        }
        return found;
    }
}

/// A rational root of integer polynomial `g` in `[a, b]`, if any. Its reduced
/// denominator must divide the leading coefficient.
fn rational_in(g: &[BigInt], lead: &BigInt, a: &BigRational, b: &BigRational) -> Option<BigRational> {
    let lead_u = lead.to_biguint()?;
    let qs = exact::divisors(&lead_u)?;
    for q in qs {
        let q = BigInt::from(q);
        let first = (a * BigRational::from_integer(q.clone())).ceil().to_integer();
        let last = (b * BigRational::from_integer(q.clone())).floor().to_integer();
        let mut p = first;
        while p <= last {
            if p.gcd(&q).is_one() {
                let t = BigRational::new(p.clone(), q.clone());
                if exact::eval_int(g, &t).is_zero() {
                    return Some(t);
                }
            }
            p += 1;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational;

    fn reduced(c: &[u64]) -> ReducedPolynomial {
        ReducedPolynomial::from_coefficients(c).unwrap()
    }

    #[test]
    fn sqrt2_axis_distribution() {
        let roots = reduced(&[6, 4, 3, 2]).purely_imaginary_roots();
        assert_eq!(
            roots,
            vec![ImaginaryAxisRoot::Exact {
                b_squared: rational(2, 1)
            }]
        );
        assert_eq!(roots[0].to_string(), "sqrt(2)");
    }

    #[test]
    fn no_axis_roots_for_real_rooted() {
        assert!(reduced(&[5, 1]).purely_imaginary_roots().is_empty());
        assert!(reduced(&[7]).purely_imaginary_roots().is_empty());
        assert!(reduced(&[3, 2, 1]).purely_imaginary_roots().is_empty());
    }

    #[test]
    fn unit_root() {
        // (x^2 + 1)(x + 3) = 3 + x + 3x^2 + x^3
        let roots = reduced(&[3, 1, 3, 1]).purely_imaginary_roots();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].is_unit());
    }

    #[test]
    fn irrational_pair_is_isolated() {
        // (x^4 + 4x^2 + 2)(x + 1): t^2 + 4t + 2 has roots -2 ± √2
        // expanded: 2 + 2x + 4x^2 + 4x^3 + x^4 + x^5
        let roots = reduced(&[2, 2, 4, 4, 1, 1]).purely_imaginary_roots();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| !r.is_exact()));
        let expected = [(2.0 - 2f64.sqrt()).sqrt(), (2.0 + 2f64.sqrt()).sqrt()];
        for (r, e) in roots.iter().zip(expected) {
            assert!((r.b() - e).abs() < 1e-9);
        }
    }

    #[test]
    fn dyadic_and_non_dyadic_rationals() {
        // (4x^2 + 1)(x + 1) = 1 + x + 4x^2 + 4x^3 -> b = 1/2
        let roots = reduced(&[1, 1, 4, 4]).purely_imaginary_roots();
        assert_eq!(
            roots,
            vec![ImaginaryAxisRoot::Exact {
                b_squared: rational(1, 4)
            }]
        );
        // (3x^2 + 1)(x + 1) = 1 + x + 3x^2 + 3x^3 -> b^2 = 1/3
        let roots = reduced(&[1, 1, 3, 3]).purely_imaginary_roots();
        assert_eq!(
            roots,
            vec![ImaginaryAxisRoot::Exact {
                b_squared: rational(1, 3)
            }]
        );
    }
}
