use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;

use super::{CyclotomicField, LaurentPoly, RationalFunction, Residue};

/// An exact coefficient: either generic (`Q(A)`) or a residue in a cyclotomic
/// field.
///
/// Generic values combine with residues by specialising `A` to the field's
/// primitive root; two residues from different fields never mix.
#[derive(Clone, Debug)]
pub enum Scalar {
    Generic(RationalFunction),
    Cyclotomic(Residue),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Generic(RationalFunction::zero())
    }

    pub fn one() -> Self {
        Scalar::Generic(RationalFunction::one())
    }

    pub fn integer(c: impl Into<BigInt>) -> Self {
        Scalar::Generic(RationalFunction::integer(c))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Generic(r) => r.is_zero(),
            Scalar::Cyclotomic(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Generic(r) => r.is_one(),
            Scalar::Cyclotomic(r) => r.is_one(),
        }
    }

    /// Specialises a generic value into `field`; `None` if its denominator
    /// vanishes there.
    pub fn specialize(&self, field: &Arc<CyclotomicField>) -> Option<Residue> {
        match self {
            Scalar::Cyclotomic(r) => {
                assert_eq!(r.field().order(), field.order(), "mixing cyclotomic fields");
                Some(r.clone())
            }
            Scalar::Generic(g) => {
                let num = Residue::from_laurent(field, g.numerator());
                if g.is_polynomial() {
                    return Some(num);
                }
                let den = Residue::from_laurent(field, g.denominator());
                num.div(&den)
            }
        }
    }

    fn coerce<'a>(a: &'a Scalar, b: &'a Scalar) -> Pair<'a> {
        match (a, b) {
            (Scalar::Generic(x), Scalar::Generic(y)) => Pair::Generic(x, y),
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => {
                Pair::Cyclotomic(std::borrow::Cow::Borrowed(x), std::borrow::Cow::Borrowed(y))
            }
            (Scalar::Cyclotomic(x), g @ Scalar::Generic(_)) => Pair::Cyclotomic(
                std::borrow::Cow::Borrowed(x),
                std::borrow::Cow::Owned(
                    g.specialize(x.field()).expect("pole at the root of unity"),
                ),
            ),
            (g @ Scalar::Generic(_), Scalar::Cyclotomic(y)) => Pair::Cyclotomic(
                std::borrow::Cow::Owned(
                    g.specialize(y.field()).expect("pole at the root of unity"),
                ),
                std::borrow::Cow::Borrowed(y),
            ),
        }
    }

    /// `self / other`, `None` when `other` is zero.
    pub fn checked_div(&self, other: &Scalar) -> Option<Scalar> {
        match Self::coerce(self, other) {
            Pair::Generic(x, y) => x.div(y).map(Scalar::Generic),
            Pair::Cyclotomic(x, y) => x.div(&y).map(Scalar::Cyclotomic),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Numeric value at `A = point` (generic) or at the field's root.
    pub fn eval_at(&self, point: Complex64) -> Complex64 {
        match self {
            Scalar::Generic(r) => r.eval(point),
            Scalar::Cyclotomic(r) => r.eval_at(point),
        }
    }

    /// Numeric value for residues; `None` for generic values, which need an
    /// evaluation point.
    pub fn eval_root(&self) -> Option<Complex64> {
        match self {
            Scalar::Generic(_) => None,
            Scalar::Cyclotomic(r) => Some(r.eval()),
        }
    }

    pub fn as_generic(&self) -> Option<&RationalFunction> {
        match self {
            Scalar::Generic(r) => Some(r),
            Scalar::Cyclotomic(_) => None,
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Scalar::Generic(RationalFunction::from_poly(p))
    }
}

enum Pair<'a> {
    Generic(&'a RationalFunction, &'a RationalFunction),
    Cyclotomic(std::borrow::Cow<'a, Residue>, std::borrow::Cow<'a, Residue>),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match Self::coerce(self, other) {
            Pair::Generic(x, y) => x == y,
            Pair::Cyclotomic(x, y) => x == y,
        }
    }
}

impl Eq for Scalar {}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match Scalar::coerce(self, rhs) {
            Pair::Generic(x, y) => Scalar::Generic(x.add(y)),
            Pair::Cyclotomic(x, y) => Scalar::Cyclotomic(x.add(&y)),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match Scalar::coerce(self, rhs) {
            Pair::Generic(x, y) => Scalar::Generic(x.mul(y)),
            Pair::Cyclotomic(x, y) => Scalar::Cyclotomic(x.mul(&y)),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Generic(x) => Scalar::Generic(x.neg()),
            Scalar::Cyclotomic(x) => Scalar::Cyclotomic(x.neg()),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Generic(r) => write!(f, "{r}"),
            Scalar::Cyclotomic(r) => write!(f, "{r}"),
        }
    }
}
