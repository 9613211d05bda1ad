//! Double-double complex Horner evaluation, used for residuals and Newton
//! polishing where plain `f64` Horner loses too many digits.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, Default)]
struct Dd {
    hi: f64,
    lo: f64,
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    fn new(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Dd { hi, lo }
    }

    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        Dd::new(s, e + self.lo + o.lo)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        Dd::new(p, e + self.lo * b)
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct DdComplex {
    re: Dd,
    im: Dd,
}

impl DdComplex {
    fn mul(self, z: Complex64) -> DdComplex {
        DdComplex {
            re: self.re.mul_f64(z.re).add(self.im.mul_f64(z.im).neg()),
            im: self.re.mul_f64(z.im).add(self.im.mul_f64(z.re)),
        }
    }
}

/// Splits a coefficient into an unevaluated sum of two doubles.
pub(crate) fn split(c: &num_bigint::BigUint) -> (f64, f64) {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    let hi = c.to_f64().unwrap_or(f64::INFINITY);
    if !hi.is_finite() {
        return (hi, 0.0);
    }
    let exact_hi = num_rational::BigRational::from_float(hi)
        .map(|r| r.to_integer())
        .unwrap_or_default();
    let lo = (BigInt::from(c.clone()) - exact_hi).to_f64().unwrap_or(0.0);
    (hi, lo)
}

/// Evaluates `sum c[i] z^i` in double-double precision.
pub(crate) fn horner(coeffs: &[(f64, f64)], z: Complex64) -> Complex64 {
    let mut acc = DdComplex::default();
    for &(hi, lo) in coeffs.iter().rev() {
        acc = acc.mul(z);
        acc.re = acc.re.add(Dd::new(hi, lo));
    }
    Complex64::new(acc.re.hi + acc.re.lo, acc.im.hi + acc.im.lo)
}
