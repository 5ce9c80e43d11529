use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;

use super::dense;
use super::LaurentPoly;

/// An element of `Q(A)` as a reduced quotient of Laurent polynomials.
///
/// Canonical form: the denominator is an honest polynomial with nonzero
/// constant term and positive leading coefficient, and numerator and
/// denominator are coprime in `Z[A]` (contents included). Structural equality
/// is therefore value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// `num / den`, reduced. Returns `None` when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::normalize(num, den))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self::from_poly(num);
        }
        let (ns, nd) = num.to_dense();
        let (ds, dd) = den.to_dense();
        // A is a unit, so only the A-free parts need a gcd.
        let g = dense::gcd(&nd, &dd);
        let mut nq = dense::exact_div(&nd, &g).expect("gcd divides numerator");
        let mut dq = dense::exact_div(&dd, &g).expect("gcd divides denominator");
        if dq.last().unwrap().is_negative() {
            nq.iter_mut().for_each(|c| *c = -&*c);
            dq.iter_mut().for_each(|c| *c = -&*c);
        }
        Self {
            num: LaurentPoly::from_dense(ns - ds, &nq),
            den: LaurentPoly::from_dense(0, &dq),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            if self.den.is_one() {
                return Self::from_poly(&self.num + &other.num);
            }
            return Self::normalize(&self.num + &other.num, self.den.clone());
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::normalize(num, &self.den * &other.den)
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num * &other.num);
        }
        Self::normalize(&self.num * &other.num, &self.den * &other.den)
    }

    /// `self / other`, or `None` if `other` is zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.den.is_one() && other.den.is_one() {
            if let Some(q) = self.num.exact_div(&other.num) {
                return Some(Self::from_poly(q));
            }
        }
        Some(Self::normalize(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn eval(&self, a: Complex64) -> Complex64 {
        self.num.eval(a) / self.den.eval(a)
    }

    pub fn integer(c: impl Into<BigInt>) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
