//! Wiener polynomials, their reduced form and the exact and numeric tools
//! used to locate their roots.

mod compensated;
pub(crate) mod exact;
mod imaginary;
mod roots;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::DistanceDistribution;

pub use imaginary::ImaginaryAxisRoot;
pub use roots::{ComplexRoot, ExactRoot, RootError, RESIDUAL_LIMIT};

/// Exact Gaussian rational `a + bi`.
pub type GaussianRational = Complex<BigRational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("a Wiener polynomial needs at least one coefficient")]
    Empty,
    #[error("coefficient {index} is zero; distance counts are positive up to the diameter")]
    ZeroCoefficient { index: usize },
    #[error("a constant polynomial has no Eneström–Kakeya annulus")]
    ConstantPolynomial,
}

/// `W(G;x) = sum_{i=1}^{D} d_i x^i`; stores `d_1..d_D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WienerPolynomial {
    d: Vec<BigUint>,
}

impl WienerPolynomial {
    pub fn new(d: Vec<BigUint>) -> Result<Self, PolyError> {
        check_positive(&d)?;
        Ok(WienerPolynomial { d })
    }

    pub fn from_counts(d: &[u64]) -> Result<Self, PolyError> {
        Self::new(d.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Coefficients `d_1..d_D` (coefficient of `x^i` at index `i - 1`).
    pub fn counts(&self) -> &[BigUint] {
        &self.d
    }

    pub fn diameter(&self) -> usize {
        self.d.len()
    }

    pub fn reduce(&self) -> ReducedPolynomial {
        ReducedPolynomial { c: self.d.clone() }
    }

    /// Sum of all pairwise distances, `W'(G;1)`.
    pub fn wiener_index(&self) -> BigUint {
        self.d.iter().enumerate().map(|(i, c)| c * BigUint::from(i + 1)).sum()
    }

    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        z * self.reduce().evaluate(z)
    }

    /// Expected number of communicating vertex pairs of a tree whose edges
    /// operate independently with probability `p`.
    pub fn resilience(&self, p: f64) -> f64 {
        self.evaluate(Complex64::new(p, 0.0)).re
    }

    /// Product with `(x + 1)^k`; the result has the same positivity.
    pub fn times_x_plus_one_pow(&self, k: usize) -> WienerPolynomial {
        let mut d = self.d.clone();
        for _ in 0..k {
            let mut next = vec![BigUint::zero(); d.len() + 1];
            for (i, c) in d.iter().enumerate() {
                next[i] += c;
                next[i + 1] += c;
            }
            d = next;
        }
        WienerPolynomial { d }
    }
}

impl From<&DistanceDistribution> for WienerPolynomial {
    fn from(dd: &DistanceDistribution) -> Self {
        WienerPolynomial {
            d: dd.counts().iter().map(|&c| BigUint::from(c)).collect(),
        }
    }
}

impl fmt::Display for WienerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.d, 1)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, c: &[BigUint], shift: usize) -> fmt::Result {
    for (i, coeff) in c.iter().enumerate() {
        if i > 0 {
            write!(f, " + ")?;
        }
        match i + shift {
            0 => write!(f, "{coeff}")?,
            1 => write!(f, "{coeff}x")?,
            e => write!(f, "{coeff}x^{e}")?,
        }
    }
    Ok(())
}

fn check_positive(c: &[BigUint]) -> Result<(), PolyError> {
    if c.is_empty() {
        return Err(PolyError::Empty);
    }
    match c.iter().position(Zero::is_zero) {
        Some(index) => Err(PolyError::ZeroCoefficient { index }),
        None => Ok(()),
    }
}

/// `W(G;x) / x = d_1 + d_2 x + ... + d_D x^{D-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedPolynomial {
    c: Vec<BigUint>,
}

impl ReducedPolynomial {
    pub fn new(c: Vec<BigUint>) -> Result<Self, PolyError> {
        check_positive(&c)?;
        Ok(ReducedPolynomial { c })
    }

    pub fn from_coefficients(c: &[u64]) -> Result<Self, PolyError> {
        Self::new(c.iter().map(|&x| BigUint::from(x)).collect())
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.c
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    pub(crate) fn signed(&self) -> Vec<BigInt> {
        self.c.iter().map(|x| BigInt::from(x.clone())).collect()
    }

    pub(crate) fn max_coefficient_f64(&self) -> f64 {
        self.c.iter().max().and_then(|m| m.to_f64()).unwrap_or(f64::INFINITY)
    }

    /// Horner evaluation in double-double precision.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let split: Vec<(f64, f64)> = self.c.iter().map(compensated::split).collect();
        compensated::horner(&split, z)
    }

    /// Exact evaluation at a Gaussian rational.
    pub fn evaluate_gaussian(&self, z: &GaussianRational) -> GaussianRational {
        self.c.iter().rev().fold(GaussianRational::zero(), |acc, c| {
            acc * z.clone()
                + GaussianRational::new(BigRational::from_integer(BigInt::from(c.clone())), BigRational::zero())
        })
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate_rational(&self, x: &BigRational) -> BigRational {
        exact::eval_int(&self.signed(), x)
    }

    /// Relative residual `|p(z)| / (max|c_i| · max(1,|z|)^deg)`.
    pub fn residual(&self, z: Complex64) -> f64 {
        let scale = self.max_coefficient_f64() * z.norm().max(1.0).powi(self.degree() as i32);
        self.evaluate(z).norm() / scale
    }

    /// Eneström–Kakeya annulus from the extreme consecutive coefficient ratios.
    pub fn annulus(&self) -> Result<Annulus, PolyError> {
        if self.c.len() < 2 {
            return Err(PolyError::ConstantPolynomial);
        }
        let ratios = self
            .c
            .windows(2)
            .map(|w| BigRational::new(BigInt::from(w[0].clone()), BigInt::from(w[1].clone())));
        let mut inner: Option<BigRational> = None;
        let mut outer: Option<BigRational> = None;
        for r in ratios {
            if inner.as_ref().is_none_or(|m| r < *m) {
                inner = Some(r.clone());
            }
            if outer.as_ref().is_none_or(|m| r > *m) {
                outer = Some(r);
            }
        }
        Ok(Annulus {
            inner: inner.expect("at least one ratio"),
            outer: outer.expect("at least one ratio"),
        })
    }

    /// All roots with multiplicity. See [`roots::solve`].
    pub fn roots(&self) -> Result<Vec<ComplexRoot>, RootError> {
        roots::solve(self)
    }

    /// Roots `±bi` (`b > 0`) on the imaginary axis, decided exactly.
    pub fn purely_imaginary_roots(&self) -> Vec<ImaginaryAxisRoot> {
        imaginary::find(self)
    }

    /// Exact rational roots with multiplicity, in increasing order.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        roots::rational_roots(self).0
    }
}

impl fmt::Display for ReducedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.c, 0)
    }
}

/// Closed annulus `inner <= |z| <= outer` with exact rational radii.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Annulus {
    #[serde(rename = "r", serialize_with = "as_string")]
    pub inner: BigRational,
    #[serde(rename = "R", serialize_with = "as_string")]
    pub outer: BigRational,
}

impl Annulus {
    pub fn contains(&self, z: Complex64, eps: f64) -> bool {
        let m = z.norm();
        exact::to_f64(&self.inner) - eps <= m && m <= exact::to_f64(&self.outer) + eps
    }
}

pub(crate) fn as_string<T: fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[cfg(test)]
pub(crate) fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub(crate) fn gaussian_i() -> GaussianRational {
    GaussianRational::new(BigRational::zero(), BigRational::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reduced(c: &[u64]) -> ReducedPolynomial {
        ReducedPolynomial::from_coefficients(c).unwrap()
    }

    #[test]
    fn wiener_polynomials_from_distributions() {
        let k3 = DistanceDistribution::new(3, vec![3]).unwrap();
        assert_eq!(WienerPolynomial::from(&k3).to_string(), "3x");
        let k4e = WienerPolynomial::from_counts(&[5, 1]).unwrap();
        assert_eq!(k4e.to_string(), "5x + 1x^2");
        assert_eq!(k4e.reduce().to_string(), "5 + 1x");
        let star = WienerPolynomial::from_counts(&[4, 6]).unwrap();
        assert_eq!(star.to_string(), "4x + 6x^2");
    }

    #[test]
    fn invalid_coefficients() {
        assert_eq!(WienerPolynomial::from_counts(&[]), Err(PolyError::Empty));
        assert_eq!(
            WienerPolynomial::from_counts(&[3, 0, 1]),
            Err(PolyError::ZeroCoefficient { index: 1 })
        );
    }

    #[test]
    fn reduction_drops_one_degree() {
        let w = WienerPolynomial::from_counts(&[3, 2, 1]).unwrap();
        assert_eq!(w.reduce().coefficients(), &[3u32.into(), 2u32.into(), 1u32.into()]);
        assert_eq!(w.reduce().degree(), 2);
        assert_eq!(WienerPolynomial::from_counts(&[7]).unwrap().reduce().degree(), 0);
    }

    #[test]
    fn evaluation_examples() {
        let p3 = WienerPolynomial::from_counts(&[2, 1]).unwrap();
        assert_eq!(p3.evaluate(Complex64::new(1.0, 0.0)), Complex64::new(3.0, 0.0));
        assert!((p3.resilience(0.5) - 1.25).abs() < 1e-15);
        let axis_graph = reduced(&[6, 4, 3, 2]);
        let v = axis_graph.evaluate(Complex64::new(0.0, 2f64.sqrt()));
        assert!(v.norm() < 1e-13, "{v}");
    }

    #[test]
    fn gaussian_evaluation() {
        let p = reduced(&[5, 1]);
        assert_eq!(
            p.evaluate_gaussian(&gaussian_i()),
            GaussianRational::new(rational(5, 1), rational(1, 1))
        );
        let axis_graph = reduced(&[6, 4, 3, 2]);
        let two_i = GaussianRational::new(rational(0, 1), rational(2, 1));
        assert_eq!(
            axis_graph.evaluate_gaussian(&two_i),
            GaussianRational::new(rational(-6, 1), rational(-8, 1))
        );
    }

    #[test]
    fn wiener_index_examples() {
        assert_eq!(WienerPolynomial::from_counts(&[6]).unwrap().wiener_index(), 6u32.into());
        assert_eq!(
            WienerPolynomial::from_counts(&[2, 1]).unwrap().wiener_index(),
            4u32.into()
        );
        assert_eq!(
            WienerPolynomial::from_counts(&[3, 2, 1]).unwrap().wiener_index(),
            10u32.into()
        );
    }

    #[test]
    fn annulus_examples() {
        let a = reduced(&[4, 3, 2, 1]).annulus().unwrap();
        assert_eq!((a.inner, a.outer), (rational(4, 3), rational(2, 1)));
        let a = reduced(&[5, 1]).annulus().unwrap();
        assert_eq!((a.inner, a.outer), (rational(5, 1), rational(5, 1)));
        let a = reduced(&[4, 4, 2]).annulus().unwrap();
        assert_eq!((a.inner, a.outer), (rational(1, 1), rational(2, 1)));
        assert_eq!(reduced(&[6]).annulus(), Err(PolyError::ConstantPolynomial));
    }

    #[test]
    fn augmentation_factor() {
        let p3 = WienerPolynomial::from_counts(&[2, 1]).unwrap();
        assert_eq!(p3.times_x_plus_one_pow(1).to_string(), "2x + 3x^2 + 1x^3");
    }
}
