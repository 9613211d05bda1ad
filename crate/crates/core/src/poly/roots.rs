//! Root finding for reduced Wiener polynomials.
//!
//! Rational roots are split off exactly first (rational root theorem,
//! candidates restricted to the Eneström–Kakeya annulus). What remains is
//! solved in closed form when its degree is at most two, otherwise by
//! Aberth–Ehrlich simultaneous iteration followed by Newton polishing
//! against the original polynomial.

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use super::exact;
use super::ReducedPolynomial;

/// Largest accepted relative residual `|p(z)| / (max|c_i| · max(1,|z|)^deg)`.
pub const RESIDUAL_LIMIT: f64 = 1e-9;
const MAX_SWEEPS: usize = 500;
const STEP_TOLERANCE: f64 = 1e-13;
const ANGLE_OFFSET: f64 = 0.4;

/// Closed form of a root obtained without iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactRoot {
    Rational(BigRational),
    /// `center + coeff·√radicand`; a negative radicand denotes `i·√|radicand|`.
    Quadratic {
        center: BigRational,
        coeff: BigRational,
        radicand: BigInt,
    },
}

impl ExactRoot {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            ExactRoot::Rational(t) => Complex64::new(exact::to_f64(t), 0.0),
            ExactRoot::Quadratic {
                center,
                coeff,
                radicand,
            } => {
                let s = radicand.abs().to_f64().unwrap_or(f64::INFINITY).sqrt();
                let off = exact::to_f64(coeff) * s;
                if radicand.is_negative() {
                    Complex64::new(exact::to_f64(center), off)
                } else {
                    Complex64::new(exact::to_f64(center) + off, 0.0)
                }
            }
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            ExactRoot::Rational(_) => true,
            ExactRoot::Quadratic { radicand, .. } => !radicand.is_negative(),
        }
    }

    /// Exact comparison of `|z|` with a nonnegative rational.
    pub fn modulus_cmp(&self, bound: &BigRational) -> Ordering {
        match self {
            ExactRoot::Rational(t) => t.abs().cmp(bound),
            ExactRoot::Quadratic {
                center,
                coeff,
                radicand,
            } => {
                let r = BigRational::from_integer(radicand.abs());
                if radicand.is_negative() {
                    (center * center + coeff * coeff * r).cmp(&(bound * bound))
                } else {
                    let x = center * center + coeff * coeff * r - bound * bound;
                    let y = center * coeff * BigRational::from_integer(2.into());
                    match exact::sign_of_surd(&x, &y, radicand) {
                        Sign::Plus => Ordering::Greater,
                        Sign::Minus => Ordering::Less,
                        Sign::NoSign => Ordering::Equal,
                    }
                }
            }
        }
    }
}

impl fmt::Display for ExactRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactRoot::Rational(t) => write!(f, "{t}"),
            ExactRoot::Quadratic {
                center,
                coeff,
                radicand,
            } => {
                let unit = if radicand.is_negative() { "i*" } else { "" };
                let op = if coeff.is_negative() { "-" } else { "+" };
                let c = coeff.abs();
                let r = radicand.abs();
                let surd = if r.is_one() {
                    unit.trim_end_matches('*').to_string()
                } else {
                    format!("{unit}sqrt({r})")
                };
                let scaled = if c.is_one() { surd } else { format!("({c})*{surd}") };
                if center.is_zero() {
                    if coeff.is_negative() {
                        write!(f, "-{scaled}")
                    } else {
                        write!(f, "{scaled}")
                    }
                } else {
                    write!(f, "{center} {op} {scaled}")
                }
            }
        }
    }
}

/// One root of a reduced Wiener polynomial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    /// Relative residual against the original polynomial.
    pub residual: f64,
    #[serde(serialize_with = "exact_as_string")]
    pub exact: Option<ExactRoot>,
}

fn exact_as_string<S: Serializer>(v: &Option<ExactRoot>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(e) => s.collect_str(e),
        None => s.serialize_none(),
    }
}

impl ComplexRoot {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    pub fn modulus(&self) -> f64 {
        self.value().norm()
    }

    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    /// Real for exact roots by construction, otherwise `|im| <= tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        match &self.exact {
            Some(e) => e.is_real(),
            None => self.im.abs() <= tol,
        }
    }
}

#[derive(Debug, Clone, Error)]
pub enum RootError {
    #[error("roots unresolved after {sweeps} sweeps (converged: {converged}, worst residual {worst:e})")]
    Unresolved {
        roots: Vec<ComplexRoot>,
        sweeps: usize,
        converged: bool,
        worst: f64,
    },
}

fn int_poly(c: &[BigUint]) -> Vec<BigInt> {
    c.iter().map(|x| BigInt::from(x.clone())).collect()
}

/// Splits rational roots off `p`, returning them (with multiplicity, in
/// increasing order) and the integer cofactor.
pub(crate) fn rational_roots(p: &ReducedPolynomial) -> (Vec<BigRational>, Vec<BigInt>) {
    let mut rest = int_poly(p.coefficients());
    let mut found = Vec::new();
    if p.degree() == 0 {
        return (found, rest);
    }
    let annulus = p.annulus().expect("degree >= 1");
    let lead = p.coefficients().last().expect("nonempty");
    let (Some(qs), Some(ps)) = (exact::divisors(lead), exact::divisors(&p.coefficients()[0])) else {
        return (found, rest);
    };
    for &q in &qs {
        let qr = BigRational::from_integer(q.into());
        let lo = &annulus.inner * &qr;
        let hi = &annulus.outer * &qr;
        for &num in &ps {
            let nr = BigRational::from_integer(num.into());
            if nr < lo {
                continue;
            }
            if nr > hi {
                break;
            }
            if num.gcd(&q) != 1 {
                continue;
            }
            let t = BigRational::new(-BigInt::from(num), BigInt::from(q));
            // factor (q x + num)
            while rest.len() > 1 && exact::eval_int(&rest, &t).is_zero() {
                rest = divide_linear(&rest, &BigInt::from(q), &BigInt::from(num));
                found.push(t.clone());
            }
        }
    }
    found.sort();
    (found, rest)
}

/// Exact quotient of `p` by `(a x + b)`, assumed to divide it.
fn divide_linear(p: &[BigInt], a: &BigInt, b: &BigInt) -> Vec<BigInt> {
    let n = p.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    // from the top: p_k = a q_{k-1} + b q_k
    for k in (1..=n).rev() {
        let num = &p[k] - &carry;
        let (qk, r) = num.div_rem(a);
        debug_assert!(r.is_zero());
        carry = b * &qk;
        q[k - 1] = qk;
    }
    q
}

fn closed_form_quadratic(c: &[BigInt]) -> [ExactRoot; 2] {
    let (a, b, cc) = (&c[0], &c[1], &c[2]);
    let disc: BigInt = b * b - BigInt::from(4) * a * cc;
    let two_c = BigRational::from_integer(BigInt::from(2) * cc);
    let center = BigRational::from_integer(-b.clone()) / &two_c;
    let (s, f) = exact::extract_square(&disc);
    if disc.is_zero() || f.is_one() {
        let off = BigRational::from_integer(s) / &two_c;
        let mut roots = [&center - &off, &center + &off];
        roots.sort();
        return roots.map(ExactRoot::Rational);
    }
    let coeff = BigRational::from_integer(s) / &two_c;
    [-coeff.clone(), coeff].map(|coeff| ExactRoot::Quadratic {
        center: center.clone(),
        coeff,
        radicand: f.clone(),
    })
}

/// Numerically stable `f64` values of the quadratic roots, matching the order
/// of [`closed_form_quadratic`].
fn quadratic_values(c: &[BigInt], forms: &[ExactRoot; 2]) -> [Complex64; 2] {
    if !forms[0].is_real() {
        return [forms[0].to_complex(), forms[1].to_complex()];
    }
    let a = c[0].to_f64().unwrap_or(f64::NAN);
    let b = c[1].to_f64().unwrap_or(f64::NAN);
    let cc = c[2].to_f64().unwrap_or(f64::NAN);
    let disc = (&c[1] * &c[1] - BigInt::from(4) * &c[0] * &c[2])
        .to_f64()
        .unwrap_or(f64::NAN)
        .max(0.0);
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    let mut vals = if q == 0.0 { [0.0, 0.0] } else { [q / cc, a / q] };
    vals.sort_by(|x, y| x.total_cmp(y));
    // the exact forms are ordered low to high as well
    [Complex64::new(vals[0], 0.0), Complex64::new(vals[1], 0.0)]
}

fn exact_root(p: &ReducedPolynomial, e: ExactRoot, value: Complex64) -> ComplexRoot {
    ComplexRoot {
        re: value.re,
        im: value.im,
        residual: p.residual(value),
        exact: Some(e),
    }
}

pub(crate) fn solve(p: &ReducedPolynomial) -> Result<Vec<ComplexRoot>, RootError> {
    let mut out = Vec::with_capacity(p.degree());
    if p.degree() == 0 {
        return Ok(out);
    }
    let (rationals, rest) = if p.degree() <= 2 {
        (Vec::new(), int_poly(p.coefficients()))
    } else {
        rational_roots(p)
    };
    for t in rationals {
        let v = Complex64::new(exact::to_f64(&t), 0.0);
        out.push(exact_root(p, ExactRoot::Rational(t), v));
    }
    match rest.len() - 1 {
        0 => {}
        1 => {
            let t = BigRational::new(-rest[0].clone(), rest[1].clone());
            let v = Complex64::new(exact::to_f64(&t), 0.0);
            out.push(exact_root(p, ExactRoot::Rational(t), v));
        }
        2 => {
            let forms = closed_form_quadratic(&rest);
            let values = quadratic_values(&rest, &forms);
            for (e, v) in forms.into_iter().zip(values) {
                out.push(exact_root(p, e, v));
            }
        }
        _ => {
            let (numeric, converged, sweeps) = aberth(p, &rest);
            let start = out.len();
            out.extend(numeric);
            let worst = out[start..].iter().map(|r| r.residual).fold(0.0, f64::max);
            // an exhausted sweep budget is tolerated when every residual passes
            if worst > RESIDUAL_LIMIT || worst.is_nan() {
                sort_roots(&mut out);
                return Err(RootError::Unresolved {
                    roots: out,
                    sweeps,
                    converged,
                    worst,
                });
            }
        }
    }
    sort_roots(&mut out);
    Ok(out)
}

fn sort_roots(roots: &mut [ComplexRoot]) {
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut dv = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dv = dv * z + v;
        v = v * z + a;
    }
    (v, dv)
}

/// Aberth–Ehrlich on the cofactor `rest`, polished and scored against `p`.
fn aberth(p: &ReducedPolynomial, rest: &[BigInt]) -> (Vec<ComplexRoot>, bool, usize) {
    let deg = rest.len() - 1;
    let lead = rest[deg].to_f64().unwrap_or(f64::NAN);
    let c: Vec<f64> = rest.iter().map(|x| x.to_f64().unwrap_or(f64::NAN) / lead).collect();
    let radius = (c[0].abs()).powf(1.0 / deg as f64).max(f64::MIN_POSITIVE);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| Complex64::from_polar(radius, TAU * k as f64 / deg as f64 + ANGLE_OFFSET))
        .collect();

    let mut converged = false;
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS {
        sweeps += 1;
        let mut done = true;
        for i in 0..deg {
            let (v, dv) = horner(&c, z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let sum: Complex64 = (0..deg).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() > STEP_TOLERANCE * (1.0 + z[i].norm()) {
                done = false;
            }
        }
        if done {
            converged = true;
            break;
        }
    }

    let deriv: Vec<f64> = p
        .coefficients()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, x)| i as f64 * x.to_f64().unwrap_or(f64::NAN))
        .collect();
    for zi in z.iter_mut() {
        polish(p, &deriv, zi);
    }
    let z = symmetrize(z);
    let roots = z
        .into_iter()
        .map(|v| ComplexRoot {
            re: v.re,
            im: v.im,
            residual: p.residual(v),
            exact: None,
        })
        .collect();
    (roots, converged, sweeps)
}

/// Newton steps with a double-double value and plain derivative; a step is
/// kept only if it lowers the residual.
fn polish(p: &ReducedPolynomial, deriv: &[f64], z: &mut Complex64) {
    let mut best = p.evaluate(*z).norm();
    for _ in 0..3 {
        let v = p.evaluate(*z);
        let (dv, _) = horner(deriv, *z);
        let next = *z - v / dv;
        if !next.is_finite() {
            return;
        }
        let r = p.evaluate(next).norm();
        if r < best {
            best = r;
            *z = next;
        } else {
            return;
        }
    }
}

/// Makes the numeric set closed under conjugation. Roots whose imaginary
/// part is negligible become real; each remaining root below the axis is
/// averaged with the nearest conjugate of a root above it when the two agree
/// to `1e-6` relative, and left untouched otherwise.
fn symmetrize(z: Vec<Complex64>) -> Vec<Complex64> {
    const REAL: f64 = 1e-10;
    const PAIR: f64 = 1e-6;
    let scale = |v: Complex64| v.norm().max(1.0);
    let mut out = Vec::with_capacity(z.len());
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for v in z {
        if v.im.abs() <= REAL * scale(v) {
            out.push(Complex64::new(v.re, 0.0));
        } else if v.im > 0.0 {
            upper.push(v);
        } else {
            lower.push(v);
        }
    }
    for v in lower {
        let nearest = upper
            .iter()
            .enumerate()
            .map(|(k, w)| (k, (w - v.conj()).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1));
        match nearest {
            Some((k, d)) if d <= PAIR * scale(v) => {
                let w = upper.swap_remove(k);
                let m = (w + v.conj()) * 0.5;
                out.push(m);
                out.push(m.conj());
            }
            _ => out.push(v),
        }
    }
    out.extend(upper);
    out
}
