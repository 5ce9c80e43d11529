//! Linear combinations of webs and composition followed by reduction.

use std::collections::BTreeMap;
use std::fmt;

use super::canon::canonicalize;
use super::reduce::{accumulate, evaluate_closed, reduce};
use super::{Sign, Web};
use crate::cyclotomic::{Context, Scalar};
use crate::error::Error;

/// A formal combination of webs sharing one boundary signature. Keys are
/// canonical forms; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebSum {
    signature: Vec<Sign>,
    terms: BTreeMap<Web, Scalar>,
}

impl WebSum {
    pub fn zero(signature: Vec<Sign>) -> Self {
        Self {
            signature,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(w: &Web, coeff: Scalar) -> Self {
        let mut s = Self::zero(w.boundary().to_vec());
        accumulate(&mut s.terms, canonicalize(w), coeff);
        s
    }

    /// Fails if the webs do not all have `signature`.
    pub fn from_terms(
        signature: Vec<Sign>,
        terms: impl IntoIterator<Item = (Web, Scalar)>,
    ) -> Result<Self, Error> {
        let mut s = Self::zero(signature);
        for (w, c) in terms {
            s.add_term(&w, c)?;
        }
        Ok(s)
    }

    pub(crate) fn from_canonical(signature: Vec<Sign>, terms: BTreeMap<Web, Scalar>) -> Self {
        Self { signature, terms }
    }

    pub fn add_term(&mut self, w: &Web, c: Scalar) -> Result<(), Error> {
        if w.boundary() != self.signature.as_slice() {
            return Err(Error::SignatureMismatch(format!(
                "web with boundary of {} points does not match the sum's signature",
                w.boundary_len()
            )));
        }
        accumulate(&mut self.terms, canonicalize(w), c);
        Ok(())
    }

    pub fn signature(&self) -> &[Sign] {
        &self.signature
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Web, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `w` (after canonicalization); zero if absent.
    pub fn coefficient(&self, w: &Web) -> Option<&Scalar> {
        self.terms.get(&canonicalize(w))
    }

    pub fn scale(&self, c: &Scalar) -> WebSum {
        let mut out = Self::zero(self.signature.clone());
        for (w, x) in &self.terms {
            accumulate(&mut out.terms, w.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &WebSum) -> Result<WebSum, Error> {
        if self.signature != other.signature {
            return Err(Error::SignatureMismatch(
                "cannot add sums with different boundaries".into(),
            ));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            accumulate(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WebSum) -> Result<WebSum, Error> {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// Applies a web-level operation to every term and reduces.
    fn map(
        &self,
        signature: Vec<Sign>,
        ctx: &Context,
        f: impl Fn(&Web) -> Result<Web, Error>,
    ) -> Result<WebSum, Error> {
        let mut raw = Self::zero(signature);
        for (w, c) in &self.terms {
            let w2 = f(w)?;
            accumulate(&mut raw.terms, canonicalize(&w2), c.clone());
        }
        reduce(&raw, ctx)
    }

    /// Trace closure (top joined to bottom) of a sum on `2N` points.
    pub fn closure(&self, ctx: &Context) -> Result<Scalar, Error> {
        let mut total = ctx.zero();
        for (w, c) in &self.terms {
            let v = evaluate_closed(&w.closure()?, ctx)?;
            total += &(&ctx.coerce(c)? * &v);
        }
        Ok(total)
    }
}

impl fmt::Display for WebSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "({c}) * {w}")?;
        }
        Ok(())
    }
}

/// Disjoint union, `b` to the right of `a`.
pub fn tensor(a: &WebSum, b: &WebSum, ctx: &Context) -> Result<WebSum, Error> {
    let mut sig = a.signature.clone();
    sig.extend_from_slice(&b.signature);
    let mut raw = WebSum::zero(sig);
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            accumulate(&mut raw.terms, canonicalize(&wa.tensor(wb)), ca * cb);
        }
    }
    reduce(&raw, ctx)
}

/// `upper` on top of `lower`, glued along half of `lower`'s boundary.
///
/// Both are read as maps from a bottom row to a top row with the boundary
/// listed bottom left-to-right then top right-to-left.
pub fn stack(upper: &WebSum, lower: &WebSum, ctx: &Context) -> Result<WebSum, Error> {
    let bl = lower.signature.len();
    if !bl.is_multiple_of(2) {
        return Err(Error::SignatureMismatch(
            "stacking needs the lower sum to have an even boundary".into(),
        ));
    }
    let width = bl / 2;
    if upper.signature.len() < width
        || (0..width).any(|j| upper.signature[j] == lower.signature[bl - 1 - j])
    {
        return Err(Error::SignatureMismatch(
            "top of the lower sum does not match the bottom of the upper sum".into(),
        ));
    }
    let mut sig = lower.signature[..bl - width].to_vec();
    sig.extend_from_slice(&upper.signature[width..]);
    let mut raw = WebSum::zero(sig);
    for (wu, cu) in &upper.terms {
        for (wl, cl) in &lower.terms {
            let w = Web::stack(wu, wl, width)?;
            accumulate(&mut raw.terms, canonicalize(&w), cu * cl);
        }
    }
    reduce(&raw, ctx)
}

pub fn cap(ws: &WebSum, position: usize, ctx: &Context) -> Result<WebSum, Error> {
    let sig = check_adjacent(ws, position, false)?;
    ws.map(sig, ctx, |w| w.cap(position))
}

pub fn attach_y(ws: &WebSum, position: usize, ctx: &Context) -> Result<WebSum, Error> {
    let sig = check_adjacent(ws, position, true)?;
    ws.map(sig, ctx, |w| w.attach_y(position))
}

/// Resulting signature after a cap (`equal = false`) or a Y (`equal = true`).
fn check_adjacent(ws: &WebSum, i: usize, equal: bool) -> Result<Vec<Sign>, Error> {
    let s = &ws.signature;
    if i + 1 >= s.len() {
        return Err(Error::InvalidInput(format!(
            "position {i} is not followed by another boundary point"
        )));
    }
    if (s[i] == s[i + 1]) != equal {
        return Err(Error::SignatureMismatch(format!(
            "points {i} and {} must have {} signs",
            i + 1,
            if equal { "equal" } else { "opposite" }
        )));
    }
    let mut out = s[..i].to_vec();
    if equal {
        out.push(s[i].flip());
    }
    out.extend_from_slice(&s[i + 2..]);
    Ok(out)
}

/// Bilinear pairing: each pair of terms is closed up against the
/// orientation-reversed mirror of the second.
pub fn inner_product(a: &WebSum, b: &WebSum, ctx: &Context) -> Result<Scalar, Error> {
    if a.signature != b.signature {
        return Err(Error::SignatureMismatch(
            "inner product of different boundaries".into(),
        ));
    }
    let mut total = ctx.zero();
    for (wa, ca) in &a.terms {
        for (wb, cb) in &b.terms {
            let v = evaluate_closed(&wa.pair(wb)?, ctx)?;
            total += &(&(&ctx.coerce(ca)? * &ctx.coerce(cb)?) * &v);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::web::VertexKind;

    const IN: Sign = Sign::In;
    const OUT: Sign = Sign::Out;

    fn one(w: &Web) -> WebSum {
        WebSum::single(w, Scalar::one())
    }

    #[test]
    fn stacking_strands() {
        let g = Context::generic();
        let s = one(&Web::identity(&[IN]));
        assert_eq!(stack(&s, &s, &g).unwrap(), s);
    }

    #[test]
    fn cap_on_cup_is_circle() {
        let g = Context::generic();
        let cup = one(&Web::identity(&[IN]));
        let closed = cap(&cup, 0, &g).unwrap();
        assert_eq!(closed.signature(), &[] as &[Sign]);
        assert_eq!(closed.coefficient(&Web::empty()), Some(&g.qint(3)));
    }

    #[test]
    fn y_on_two_strands() {
        let g = Context::generic();
        let two = one(&Web::identity(&[OUT, OUT]).rotate(2));
        let y = attach_y(&two, 0, &g).unwrap();
        assert_eq!(y.len(), 1);
        let (w, c) = y.terms().next().unwrap();
        assert_eq!(w.vertex_count(), 1);
        assert!(c.is_one());
    }

    #[test]
    fn inner_products() {
        let g = Context::generic();
        let s = one(&Web::identity(&[IN]));
        assert_eq!(inner_product(&s, &s, &g).unwrap(), g.qint(3));
        let e = one(&Web::empty());
        assert!(inner_product(&e, &e, &g).unwrap().is_one());
        let cc = one(&Web::empty()
            .insert_arc(0, IN)
            .unwrap()
            .insert_arc(2, OUT)
            .unwrap());
        let three = g.qint(3);
        assert_eq!(inner_product(&cc, &cc, &g).unwrap(), &three * &three);
    }

    #[test]
    fn reduction_rules() {
        let g = Context::generic();
        // a circle next to a strand
        let w = Web::identity(&[IN]).tensor(&Web::circles(1));
        let r = reduce(&one(&w), &g).unwrap();
        assert_eq!(r, one(&Web::identity(&[IN])).scale(&g.qint(3)));
        // a bigon on a strand: split then merge
        let bigon = Web::identity(&[IN])
            .split_y(0)
            .unwrap()
            .attach_y(0)
            .unwrap();
        assert_eq!(bigon.vertex_count(), 2);
        let r = reduce(&one(&bigon), &g).unwrap();
        assert_eq!(r, one(&Web::identity(&[IN])).scale(&g.qint(2)));
        // a square between two strands becomes its two smoothings
        let sq = Web::identity(&[OUT, IN])
            .attach_h(0)
            .unwrap()
            .attach_h(0)
            .unwrap();
        let r = reduce(&one(&sq), &g).unwrap();
        let id = Web::identity(&[OUT, IN]);
        let turn = Web::empty()
            .insert_arc(0, OUT)
            .unwrap()
            .insert_arc(2, OUT)
            .unwrap();
        let expected = WebSum::from_terms(
            id.boundary().to_vec(),
            [(id.clone(), Scalar::one()), (turn, Scalar::one())],
        )
        .unwrap();
        assert_eq!(r, expected);
        // reduce is idempotent and leaves non-elliptic webs alone
        assert_eq!(reduce(&r, &g).unwrap(), r);
        let y = one(&Web::y_vertex(VertexKind::Sink));
        assert_eq!(reduce(&y, &g).unwrap(), y);
    }

    #[test]
    fn mixed_signatures_rejected() {
        let mut s = WebSum::zero(vec![IN, OUT]);
        assert!(matches!(
            s.add_term(&Web::identity(&[OUT]), Scalar::one()),
            Err(Error::SignatureMismatch(_))
        ));
        let a = one(&Web::identity(&[IN]));
        let b = one(&Web::identity(&[OUT]));
        assert!(inner_product(&a, &b, &Context::generic()).is_err());
    }
}
