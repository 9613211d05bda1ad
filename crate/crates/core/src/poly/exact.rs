//! Exact univariate arithmetic over the integers and rationals: the small
//! amount needed for rational roots, even/odd gcds and Sturm isolation.
//! Coefficients are stored lowest degree first.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) type QPoly = Vec<BigRational>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn is_zero(p: &QPoly) -> bool {
    p.iter().all(Zero::is_zero)
}

pub(crate) fn degree(p: &QPoly) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

pub(crate) fn from_ints(c: &[BigInt]) -> QPoly {
    c.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

pub(crate) fn eval(p: &QPoly, x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

pub(crate) fn eval_int(p: &[BigInt], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer(c.clone())
    })
}

pub(crate) fn derivative(p: &QPoly) -> QPoly {
    if p.len() <= 1 {
        return vec![BigRational::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

/// Remainder of `a` divided by nonzero `b`.
pub(crate) fn rem(a: &QPoly, b: &QPoly) -> QPoly {
    let (_, r) = div_rem(a, b);
    r
}

pub(crate) fn div_rem(a: &QPoly, b: &QPoly) -> (QPoly, QPoly) {
    let db = degree(b);
    let lead = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(db).max(1)];
    while !is_zero(&r) && degree(&r) >= db {
        let dr = degree(&r);
        let f = &r[dr] / &lead;
        let shift = dr - db;
        for (i, c) in b.iter().enumerate().take(db + 1) {
            r[i + shift] -= &f * c;
        }
        q[shift] = f;
        r.truncate(dr);
        if r.is_empty() {
            r.push(BigRational::zero());
        }
        trim(&mut r);
    }
    (q, r)
}

/// Monic gcd over the rationals; `[1]` when coprime.
pub(crate) fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !is_zero(&y) {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    let lead = x[degree(&x)].clone();
    if lead.is_zero() {
        return x;
    }
    x.iter().map(|c| c / &lead).collect()
}

/// Scales to integer coefficients with content 1 and positive leading term.
pub(crate) fn primitive(p: &QPoly) -> Vec<BigInt> {
    let denom = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p.iter().map(|c| (c * &denom).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() {
        ints.iter_mut().for_each(|c| *c /= &content);
    }
    while ints.len() > 1 && ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        ints.iter_mut().for_each(|c| *c = -&*c);
    }
    ints
}

/// Positive divisors in increasing order, or `None` if the value is too large
/// for trial division.
pub(crate) fn divisors(value: &BigUint) -> Option<Vec<u64>> {
    let v = value.to_u64()?;
    if v == 0 || v > 1 << 50 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Sign of `x + y·√d` for `d >= 0`.
pub(crate) fn sign_of_surd(x: &BigRational, y: &BigRational, d: &BigInt) -> Sign {
    let sx = sign(x);
    let sy = if d.is_zero() { Sign::NoSign } else { sign(y) };
    match (sx, sy) {
        (s, Sign::NoSign) => s,
        (Sign::NoSign, s) => s,
        (a, b) if a == b => a,
        (a, _) => {
            // opposite signs: compare x^2 with y^2 d
            let lhs = x * x;
            let rhs = y * y * BigRational::from_integer(d.clone());
            match lhs.cmp(&rhs) {
                std::cmp::Ordering::Greater => a,
                std::cmp::Ordering::Less => flip(a),
                std::cmp::Ordering::Equal => Sign::NoSign,
            }
        }
    }
}

pub(crate) fn sign(x: &BigRational) -> Sign {
    if x.is_zero() {
        Sign::NoSign
    } else if x.is_positive() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn flip(s: Sign) -> Sign {
    match s {
        Sign::Plus => Sign::Minus,
        Sign::Minus => Sign::Plus,
        Sign::NoSign => Sign::NoSign,
    }
}

/// Splits `|n|` as `s^2 · f` where `f` has no square factor below 10^4.
pub(crate) fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    let negative = n.is_negative();
    let mut rest = n.abs();
    let mut s = BigInt::one();
    let root = rest.sqrt();
    if &root * &root == rest {
        return (root, if negative { -BigInt::one() } else { BigInt::one() });
    }
    let mut p = 2u32;
    while p < 10_000 {
        let sq = BigInt::from(p * p);
        if sq > rest {
            break;
        }
        while (&rest % &sq).is_zero() {
            rest /= &sq;
            s *= p;
        }
        p += 1;
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        s *= root;
        rest = BigInt::one();
    }
    (s, if negative { -rest } else { rest })
}

pub(crate) fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        let n = x.numer().to_f64().unwrap_or(f64::NAN);
        let d = x.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Number of sign changes of the Sturm chain at `x`, ignoring zeros.
pub(crate) fn sign_changes(chain: &[QPoly], x: &BigRational) -> usize {
    let signs = chain.iter().map(|p| sign(&eval(p, x))).filter(|s| *s != Sign::NoSign);
    count_changes(signs)
}

#[cfg(test)]
pub(crate) fn sign_changes_at_neg_infinity(chain: &[QPoly]) -> usize {
    let signs = chain.iter().filter(|p| !is_zero(p)).map(|p| {
        let d = degree(p);
        let s = sign(&p[d]);
        if d % 2 == 1 {
            flip(s)
        } else {
            s
        }
    });
    count_changes(signs)
}

fn count_changes(signs: impl Iterator<Item = Sign>) -> usize {
    let mut prev = None;
    let mut changes = 0;
    for s in signs {
        if let Some(p) = prev {
            if p != s {
                changes += 1;
            }
        }
        prev = Some(s);
    }
    changes
}

/// Sturm chain of a square-free polynomial.
pub(crate) fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), derivative(p)];
    loop {
        let n = chain.len();
        if is_zero(&chain[n - 1]) || degree(&chain[n - 1]) == 0 {
            break;
        }
        let r = rem(&chain[n - 2], &chain[n - 1]);
        if is_zero(&r) {
            break;
        }
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> QPoly {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn gcd_of_even_and_odd_parts() {
        // 6+4x+3x^2+2x^3: E(t) = 6+3t, O(t) = 4+2t, gcd t+2
        let g = gcd(&q(&[6, 3]), &q(&[4, 2]));
        assert_eq!(g, q(&[2, 1]));
        assert_eq!(gcd(&q(&[5]), &q(&[1])), q(&[1]));
    }

    #[test]
    fn division_and_primitive_form() {
        let (quot, r) = div_rem(&q(&[-1, 0, 1]), &q(&[1, 1]));
        assert_eq!(quot, q(&[-1, 1]));
        assert!(is_zero(&r));
        let half = BigRational::new(1.into(), 2.into());
        let p = vec![half.clone(), -half * BigRational::from_integer(3.into())];
        assert_eq!(primitive(&p), vec![BigInt::from(-1), BigInt::from(3)]);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(&BigUint::from(12u32)).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(&BigUint::from(1u32)).unwrap(), vec![1]);
    }

    #[test]
    fn surd_signs() {
        let r = |a: i64| BigRational::from_integer(a.into());
        assert_eq!(sign_of_surd(&r(-1), &r(1), &BigInt::from(2)), Sign::Plus);
        assert_eq!(sign_of_surd(&r(-2), &r(1), &BigInt::from(2)), Sign::Minus);
        assert_eq!(sign_of_surd(&r(-2), &r(1), &BigInt::from(4)), Sign::NoSign);
    }

    #[test]
    fn square_extraction() {
        assert_eq!(extract_square(&BigInt::from(-24)), (BigInt::from(2), BigInt::from(-6)));
        assert_eq!(extract_square(&BigInt::from(49)), (BigInt::from(7), BigInt::from(1)));
        assert_eq!(extract_square(&BigInt::from(7)), (BigInt::from(1), BigInt::from(7)));
    }

    #[test]
    fn sturm_counts_roots() {
        // (x+1)(x+2)(x-3)
        let p = q(&[-6, -7, 0, 1]);
        let chain = sturm_chain(&p);
        let at = |v: i64| sign_changes(&chain, &BigRational::from_integer(v.into()));
        assert_eq!(at(-10) - at(0), 2);
        assert_eq!(sign_changes_at_neg_infinity(&chain) - at(10), 3);
    }
}
