//! Dense univariate polynomials over `Z` and `Q`, stored lowest degree first.
//!
//! These are the workhorses behind the sparse [`LaurentPoly`](super::LaurentPoly)
//! type: exact division, primitive-PRS gcd, reduction modulo a monic
//! polynomial, and inversion modulo an irreducible polynomial over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type IntPoly = Vec<BigInt>;
pub(crate) type RatPoly = Vec<BigRational>;

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn scale_div(p: &[BigInt], d: &BigInt) -> IntPoly {
    p.iter().map(|c| c / d).collect()
}

/// Primitive part with a positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> IntPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut c = content(p);
    if p.last().unwrap().is_negative() {
        c = -c;
    }
    scale_div(p, &c)
}

/// `a / b` when `b` divides `a` exactly in `Z[x]`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem: IntPoly = a.to_vec();
    let lead = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, c) in b.iter().enumerate() {
            rem[k + j] -= &q * c;
        }
        quot[k] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        trim(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut rem: IntPoly = a.to_vec();
    let lead = b.last().unwrap();
    while rem.len() >= b.len() {
        let top = rem.last().unwrap().clone();
        let shift = rem.len() - b.len();
        for c in rem.iter_mut() {
            *c *= lead;
        }
        for (j, c) in b.iter().enumerate() {
            rem[shift + j] -= &top * c;
        }
        trim(&mut rem);
    }
    rem
}

/// Greatest common divisor in `Z[x]`, content included, leading coefficient
/// positive. `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() {
        return primitive_with_content(b);
    }
    if b.is_empty() {
        return primitive_with_content(a);
    }
    let c = content(a).gcd(&content(b));
    let (mut x, mut y) = if a.len() >= b.len() {
        (primitive(a), primitive(b))
    } else {
        (primitive(b), primitive(a))
    };
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    x.iter().map(|v| v * &c).collect()
}

fn primitive_with_content(p: &[BigInt]) -> IntPoly {
    if p.last().is_some_and(|c| c.is_negative()) {
        p.iter().map(|c| -c).collect()
    } else {
        p.to_vec()
    }
}

/// Remainder modulo a monic polynomial; stays in `Z[x]`.
pub(crate) fn rem_monic(a: &mut IntPoly, m: &[BigInt]) {
    debug_assert!(m.last().is_some_and(|c| c.is_one()));
    let d = m.len() - 1;
    while a.len() > d {
        let top = a.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = a.len() - d;
        for (j, c) in m[..d].iter().enumerate() {
            a[shift + j] -= &top * c;
        }
    }
    trim(a);
}

fn rat_trim(p: &mut RatPoly) {
    trim(p);
}

fn rat_divmod(a: &[BigRational], b: &[BigRational]) -> (RatPoly, RatPoly) {
    let mut rem: RatPoly = a.to_vec();
    rat_trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b.last().unwrap().clone();
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = rem[k + b.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let q = &top / &lead;
        for (j, c) in b.iter().enumerate() {
            rem[k + j] -= &q * c;
        }
        quot[k] = q;
    }
    rat_trim(&mut rem);
    rat_trim(&mut quot);
    (quot, rem)
}

fn rat_mul(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    rat_trim(&mut out);
    out
}

fn rat_sub(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out: RatPoly = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    rat_trim(&mut out);
    out
}

/// Inverse of `a` modulo `m` over `Q`, or `None` when they share a factor.
pub(crate) fn rat_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<RatPoly> {
    // Extended Euclid, tracking only the coefficient of `a`.
    let (_, a) = rat_divmod(a, m);
    if a.is_empty() {
        return None;
    }
    let (mut r0, mut r1) = (m.to_vec(), a);
    let (mut t0, mut t1): (RatPoly, RatPoly) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = rat_divmod(&r0, &r1);
        let t = rat_sub(&t0, &rat_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    if r0.len() != 1 {
        return None;
    }
    let inv_lead = BigRational::one() / &r0[0];
    let t: RatPoly = t0.into_iter().map(|c| c * &inv_lead).collect();
    let (_, t) = rat_divmod(&t, m);
    Some(t)
}

pub(crate) fn to_rat(p: &[BigInt]) -> RatPoly {
    p.iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect()
}

/// Clears denominators: returns `(numerator coefficients, positive denominator)`
/// in lowest terms.
pub(crate) fn from_rat(p: &[BigRational]) -> (IntPoly, BigInt) {
    let den = p.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let mut num: IntPoly = p.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    trim(&mut num);
    (num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        let mut out: IntPoly = v.iter().map(|&c| BigInt::from(c)).collect();
        trim(&mut out);
        out
    }

    #[test]
    fn exact_division() {
        // (x^2 - 1) / (x - 1) = x + 1
        assert_eq!(exact_div(&p(&[-1, 0, 1]), &p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(exact_div(&p(&[1, 0, 1]), &p(&[-1, 1])), None);
        assert_eq!(exact_div(&p(&[1, 1]), &p(&[0, 2])), None);
    }

    #[test]
    fn gcd_with_content() {
        // gcd(6(x+1)(x-2), 4(x+1)(x+3)) = 2(x+1)
        let a = mul(&p(&[6]), &mul(&p(&[1, 1]), &p(&[-2, 1])));
        let b = mul(&p(&[4]), &mul(&p(&[1, 1]), &p(&[3, 1])));
        assert_eq!(gcd(&a, &b), p(&[2, 2]));
        assert_eq!(gcd(&p(&[]), &p(&[-3, -1])), p(&[3, 1]));
    }

    #[test]
    fn monic_remainder() {
        // x^3 mod (x^2 + x + 1) = 1
        let mut a = p(&[0, 0, 0, 1]);
        rem_monic(&mut a, &p(&[1, 1, 1]));
        assert_eq!(a, p(&[1]));
    }

    #[test]
    fn inverse_mod_irreducible() {
        // x * (-x - 1) = -x^2 - x = 1 mod (x^2 + x + 1)
        let m = to_rat(&p(&[1, 1, 1]));
        let inv = rat_inverse_mod(&to_rat(&p(&[0, 1])), &m).unwrap();
        assert_eq!(from_rat(&inv), (p(&[-1, -1]), BigInt::one()));
        assert!(rat_inverse_mod(&to_rat(&p(&[1, 1, 1])), &m).is_none());
    }
}
