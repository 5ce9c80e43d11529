use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dense::{self, IntPoly};
use super::LaurentPoly;

/// `Q(ζ_n)` presented as `Q[A] / Φ_n(A)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u64,
    phi: IntPoly,
}

impl CyclotomicField {
    pub fn new(order: u64) -> Arc<Self> {
        assert!(order > 0, "cyclotomic order must be positive");
        Arc::new(Self {
            order,
            phi: cyclotomic_polynomial(order),
        })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// `φ(order)`.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn modulus(&self) -> LaurentPoly {
        LaurentPoly::from_dense(0, &self.phi)
    }

    /// The distinguished generator `A = e^{2πi/order}`.
    pub fn root(&self) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / self.order as f64)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n)
        .take_while(|d| d * d <= n)
        .filter(|d| n.is_multiple_of(*d))
        .collect();
    let big: Vec<u64> = out
        .iter()
        .rev()
        .map(|d| n / d)
        .filter(|&d| d * d != n)
        .collect();
    out.extend(big);
    out
}

/// `Φ_n(x) = (x^n - 1) / ∏_{d | n, d < n} Φ_d(x)`.
pub fn cyclotomic_polynomial(n: u64) -> IntPoly {
    let mut acc = vec![BigInt::zero(); n as usize + 1];
    acc[0] = -BigInt::one();
    acc[n as usize] = BigInt::one();
    for d in divisors(n) {
        if d < n {
            acc = dense::exact_div(&acc, &cyclotomic_polynomial(d))
                .expect("cyclotomic factors divide x^n - 1");
        }
    }
    acc
}

/// Euler's totient, used to sanity-check `deg Φ_n`.
pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// An element of a [`CyclotomicField`]: `coeffs(A) / den` with
/// `deg coeffs < φ(n)`, `den > 0` and `gcd(content, den) = 1`.
#[derive(Clone, Debug)]
pub struct Residue {
    field: Arc<CyclotomicField>,
    coeffs: IntPoly,
    den: BigInt,
}

impl PartialEq for Residue {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order
            && self.coeffs == other.coeffs
            && self.den == other.den
    }
}

impl Eq for Residue {}

impl Residue {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self {
            field: field.clone(),
            coeffs: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn from_laurent(field: &Arc<CyclotomicField>, p: &LaurentPoly) -> Self {
        let n = field.order as i64;
        let mut dense = vec![BigInt::zero(); n as usize];
        for (e, c) in p.terms() {
            dense[e.rem_euclid(n) as usize] += c;
        }
        dense::trim(&mut dense);
        Self::build(field, dense, BigInt::one())
    }

    fn build(field: &Arc<CyclotomicField>, mut coeffs: IntPoly, den: BigInt) -> Self {
        dense::rem_monic(&mut coeffs, &field.phi);
        let mut out = Self {
            field: field.clone(),
            coeffs,
            den,
        };
        out.reduce_content();
        out
    }

    fn reduce_content(&mut self) {
        if self.coeffs.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -&self.den;
            self.coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        let g = dense::content(&self.coeffs).gcd(&self.den);
        if !g.is_one() {
            self.coeffs.iter_mut().for_each(|c| *c = &*c / &g);
            self.den = &self.den / &g;
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Numerator polynomial (as a Laurent polynomial in `A`) and denominator.
    pub fn parts(&self) -> (LaurentPoly, &BigInt) {
        (LaurentPoly::from_dense(0, &self.coeffs), &self.den)
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "mixing residues from different cyclotomic fields"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c * &other.den;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c * &self.den;
        }
        dense::trim(&mut coeffs);
        let mut out = Self {
            field: self.field.clone(),
            coeffs,
            den: &self.den * &other.den,
        };
        out.reduce_content();
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        Self::build(
            &self.field,
            dense::mul(&self.coeffs, &other.coeffs),
            &self.den * &other.den,
        )
    }

    pub fn inverse(&self) -> Option<Self> {
        let phi = dense::to_rat(&self.field.phi);
        let inv = dense::rat_inverse_mod(&dense::to_rat(&self.coeffs), &phi)?;
        let (num, den) = dense::from_rat(&inv);
        // (p/d)^-1 = d * p^-1
        let num: IntPoly = num.iter().map(|c| c * &self.den).collect();
        Some(Self::build(&self.field, num, den))
    }

    pub fn div(&self, other: &Self) -> Option<Self> {
        Some(self.mul(&other.inverse()?))
    }

    pub fn eval(&self) -> Complex64 {
        self.eval_at(self.field.root())
    }

    pub fn eval_at(&self, a: Complex64) -> Complex64 {
        let mut acc = Complex64::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c.to_f64().unwrap_or(f64::NAN);
        }
        acc / self.den.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (num, den) = self.parts();
        if den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/{den}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        let as_i64 = |n| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| c.to_i64().unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(as_i64(16), vec![1, 0, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(as_i64(30), vec![1, 1, 0, -1, -1, -1, 0, 1, 1]);
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..=60 {
            assert_eq!(
                CyclotomicField::new(n).degree() as u64,
                totient(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn primitive_root_relations() {
        let f = CyclotomicField::new(16);
        let a = Residue::from_laurent(&f, &LaurentPoly::monomial(1, 1));
        let a8 = Residue::from_laurent(&f, &LaurentPoly::monomial(8, 1));
        assert_eq!(a8, Residue::from_laurent(&f, &LaurentPoly::constant(-1)));
        let inv = a.inverse().unwrap();
        assert_eq!(
            inv,
            Residue::from_laurent(&f, &LaurentPoly::monomial(-1, 1))
        );
        assert!((a.eval() - f.root()).norm() < 1e-12);
    }

    #[test]
    fn rational_inverse_roundtrip() {
        let f = CyclotomicField::new(30);
        let x = Residue::from_laurent(&f, &LaurentPoly::from_terms([(6, 1), (0, 1), (-6, 1)]));
        let y = x.inverse().unwrap();
        assert!(x.mul(&y).is_one());
        assert!((y.eval() - x.eval().inv()).norm() < 1e-9);
    }
}
