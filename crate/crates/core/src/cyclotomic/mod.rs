//! Exact coefficient arithmetic.
//!
//! Two coefficient rings are supported: the generic field `Q(A)` and, at level
//! `k`, the cyclotomic field `Q[A]/Φ_{6r}(A)` with `r = k + 3`, in which `A`
//! is the primitive root `e^{2πi/6r}`. Reducing modulo `Φ_{6r}` rather than
//! `A^{6r} - 1` is what makes `[3r] = 0` an exact identity.

mod dense;
mod laurent;
mod parse;
mod ratfunc;
mod residue;
mod scalar;

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

pub use laurent::LaurentPoly;
pub use parse::parse_fraction;
pub use ratfunc::RationalFunction;
pub use residue::{cyclotomic_polynomial, totient, CyclotomicField, Residue};
pub use scalar::Scalar;

use crate::error::Error;

/// Default tolerance for every numeric comparison of embedded scalars.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Generic,
    Level(u32),
}

/// Which coefficient ring computations live in.
#[derive(Clone, Debug)]
pub struct Context {
    mode: Mode,
    field: Option<Arc<CyclotomicField>>,
}

impl PartialEq for Context {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode
    }
}

impl Eq for Context {}

impl Context {
    pub fn generic() -> Self {
        Self {
            mode: Mode::Generic,
            field: None,
        }
    }

    pub fn level(k: u32) -> Self {
        let r = u64::from(k) + 3;
        Self {
            mode: Mode::Level(k),
            field: Some(CyclotomicField::new(6 * r)),
        }
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn level_k(&self) -> Option<u32> {
        match self.mode {
            Mode::Generic => None,
            Mode::Level(k) => Some(k),
        }
    }

    /// `r = k + 3` at level `k`.
    pub fn r(&self) -> Option<u64> {
        self.level_k().map(|k| u64::from(k) + 3)
    }

    pub fn field(&self) -> Option<&Arc<CyclotomicField>> {
        self.field.as_ref()
    }

    pub fn zero(&self) -> Scalar {
        self.from_laurent(&LaurentPoly::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_laurent(&LaurentPoly::one())
    }

    pub fn integer(&self, c: i64) -> Scalar {
        self.from_laurent(&LaurentPoly::constant(c))
    }

    pub fn from_laurent(&self, p: &LaurentPoly) -> Scalar {
        match &self.field {
            None => Scalar::Generic(RationalFunction::from_poly(p.clone())),
            Some(f) => Scalar::Cyclotomic(Residue::from_laurent(f, p)),
        }
    }

    /// Brings a scalar into this context. Fails if a generic denominator
    /// vanishes at the root of unity.
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar, Error> {
        match (&self.field, s) {
            (None, Scalar::Generic(_)) => Ok(s.clone()),
            (None, Scalar::Cyclotomic(_)) => Err(Error::InvalidInput(
                "a root-of-unity scalar cannot be lifted to the generic ring".into(),
            )),
            (Some(f), _) => s.specialize(f).map(Scalar::Cyclotomic).ok_or_else(|| {
                Error::InvalidInput(format!("{s} has a pole at A = e^(2πi/{})", f.order()))
            }),
        }
    }

    /// The quantum integer `[n] = (A^{3n} - A^{-3n}) / (A^3 - A^{-3})`.
    pub fn qint(&self, n: i64) -> Scalar {
        self.from_laurent(&qint_poly(n))
    }

    /// Parses the printed scalar syntax into this context.
    pub fn parse(&self, text: &str) -> Result<Scalar, Error> {
        let (num, den) = parse_fraction(text)?;
        let n = self.from_laurent(&num);
        let d = self.from_laurent(&den);
        n.checked_div(&d)
            .ok_or_else(|| Error::Parse(format!("denominator of {text:?} vanishes in {self}")))
    }

    /// Numeric embedding at `A = e^{2πi/6r}`, or at `point` in generic mode.
    pub fn to_complex(&self, s: &Scalar, point: Option<Complex64>) -> Result<Complex64, Error> {
        match (&self.field, point) {
            (_, Some(p)) => Ok(s.eval_at(p)),
            (Some(f), None) => Ok(self.coerce(s)?.eval_at(f.root())),
            (None, None) => Err(Error::InvalidInput(
                "generic scalars need an evaluation point".into(),
            )),
        }
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.mode {
            Mode::Generic => write!(f, "generic"),
            Mode::Level(k) => write!(f, "level {k} (A = e^(2πi/{}))", 6 * (u64::from(k) + 3)),
        }
    }
}

/// `[n]` as a Laurent polynomial: `Σ_{j=0}^{n-1} A^{3(n-1-2j)}`, odd in `n`.
pub fn qint_poly(n: i64) -> LaurentPoly {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    LaurentPoly::from_terms((0..m).map(|j| (3 * (m - 1 - 2 * j), sign)))
}
