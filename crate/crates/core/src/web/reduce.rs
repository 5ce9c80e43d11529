//! The reduction engine.
//!
//! Relations (loop value `[3]`, bigon `[2]` times a strand, square equal to
//! the sum of its two smoothings) are applied until no elliptic face is
//! left. Closed components are split off and evaluated on their own, with
//! results cached by canonical form.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::builder::Builder;
use super::canon::canonicalize;
use super::faces::{internal_faces, split_components};
use super::sum::WebSum;
use super::Web;
use crate::cyclotomic::{Context, Mode, Scalar};
use crate::error::Error;

/// Which elliptic face is rewritten next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOrder {
    /// Smallest face first, ties broken by the lowest dart id of the
    /// canonical form.
    Canonical,
    /// Uniformly random elliptic face from a seeded generator. Uses a
    /// private cache so its results are independent of earlier runs.
    Shuffled(u64),
}

thread_local! {
    static MEMO: RefCell<HashMap<(Mode, Web), Scalar>> = RefCell::new(HashMap::new());
}

struct Reducer<'a> {
    ctx: &'a Context,
    rng: Option<ChaCha8Rng>,
    memo: HashMap<(Mode, Web), Scalar>,
    two: Scalar,
    three: Scalar,
}

impl<'a> Reducer<'a> {
    fn run<T>(ctx: &'a Context, order: ReductionOrder, f: impl FnOnce(&mut Self) -> T) -> T {
        let (rng, memo) = match order {
            ReductionOrder::Canonical => {
                (None, MEMO.with(|m| std::mem::take(&mut *m.borrow_mut())))
            }
            ReductionOrder::Shuffled(seed) => {
                (Some(ChaCha8Rng::seed_from_u64(seed)), HashMap::new())
            }
        };
        let mut r = Reducer {
            ctx,
            rng,
            memo,
            two: ctx.qint(2),
            three: ctx.qint(3),
        };
        let out = f(&mut r);
        if order == ReductionOrder::Canonical {
            MEMO.with(|m| *m.borrow_mut() = r.memo);
        }
        out
    }

    fn pick(&mut self, faces: Vec<Vec<usize>>) -> Option<Vec<usize>> {
        let mut elliptic: Vec<Vec<usize>> = faces.into_iter().filter(|f| f.len() <= 4).collect();
        match &mut self.rng {
            None => elliptic
                .into_iter()
                .min_by_key(|f| (f.len(), *f.iter().min().unwrap())),
            Some(rng) => {
                elliptic.shuffle(rng);
                elliptic.pop()
            }
        }
    }

    /// Rewrites one elliptic face; returns the resulting webs and their
    /// coefficients.
    fn apply(&self, w: &Web, face: &[usize]) -> Vec<(Web, Scalar)> {
        let b = w.boundary_len();
        let vertex = |p: usize| (p - b) / 3;
        let ext: Vec<usize> = face.iter().map(|&p| w.rotate_port(p)).collect();
        let smoothing = |pairs: &[(usize, usize)]| -> Web {
            let mut bld = Builder::new();
            let (bn, vn) = bld.place_full(w, false);
            let local = |p: usize| bld.port(vn[vertex(p)], (p - b) % 3);
            let shorts: Vec<(usize, usize)> = pairs
                .iter()
                .map(|&(i, j)| (local(ext[i]), local(ext[j])))
                .collect();
            for &p in face {
                bld.remove_vertex(vn[vertex(p)]);
            }
            for (x, y) in shorts {
                bld.short(x, y);
            }
            bld.finish(&bn)
        };
        match face.len() {
            2 => vec![(smoothing(&[(0, 1)]), self.two.clone())],
            4 => vec![
                (smoothing(&[(0, 1), (2, 3)]), self.ctx.one()),
                (smoothing(&[(1, 2), (3, 0)]), self.ctx.one()),
            ],
            n => unreachable!("face of length {n} is not elliptic"),
        }
    }

    /// Splits off circles and closed components, returning the remaining
    /// boundary-connected web and the scalar factor they contribute.
    fn strip(&mut self, w: &Web) -> (Web, Scalar) {
        let (open, closed, circles) = split_components(w);
        let mut factor = self.ctx.one();
        for _ in 0..circles {
            factor = &factor * &self.three;
        }
        for comp in closed {
            if factor.is_zero() {
                break;
            }
            let value = self.closed_component(canonicalize(&comp));
            factor = &factor * &value;
        }
        (canonicalize(&open), factor)
    }

    fn closed_component(&mut self, comp: Web) -> Scalar {
        let key = (self.ctx.mode(), comp);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let comp = &key.1;
        let face = self
            .pick(internal_faces(comp))
            .expect("a closed planar web always has a face with at most four sides");
        let mut total = self.ctx.zero();
        for (w, k) in self.apply(comp, &face) {
            let (rest, factor) = self.strip(&w);
            debug_assert!(rest.is_empty());
            total += &(&k * &factor);
        }
        self.memo.insert(key, total.clone());
        total
    }

    fn reduce_into(&mut self, w: &Web, coeff: Scalar, out: &mut BTreeMap<Web, Scalar>) {
        let mut frontier: BTreeMap<Web, Scalar> = BTreeMap::new();
        frontier.insert(canonicalize(w), coeff);
        while !frontier.is_empty() {
            let mut next = BTreeMap::new();
            for (web, c) in frontier {
                let (open, factor) = self.strip(&web);
                let c = &c * &factor;
                if c.is_zero() {
                    continue;
                }
                match self.pick(internal_faces(&open)) {
                    None => accumulate(out, open, c),
                    Some(face) => {
                        for (w2, k) in self.apply(&open, &face) {
                            accumulate(&mut next, canonicalize(&w2), &c * &k);
                        }
                    }
                }
            }
            frontier = next;
        }
    }
}

pub(crate) fn accumulate(map: &mut BTreeMap<Web, Scalar>, w: Web, c: Scalar) {
    use std::collections::btree_map::Entry;
    match map.entry(w) {
        Entry::Vacant(e) => {
            if !c.is_zero() {
                e.insert(c);
            }
        }
        Entry::Occupied(mut e) => {
            let sum = e.get() + &c;
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

/// Value of a closed web.
pub fn evaluate_closed(w: &Web, ctx: &Context) -> Result<Scalar, Error> {
    evaluate_closed_with(w, ctx, ReductionOrder::Canonical)
}

pub fn evaluate_closed_with(
    w: &Web,
    ctx: &Context,
    order: ReductionOrder,
) -> Result<Scalar, Error> {
    if !w.is_closed() {
        return Err(Error::InvalidInput(format!(
            "cannot evaluate a web with {} boundary points",
            w.boundary_len()
        )));
    }
    Ok(Reducer::run(ctx, order, |r| r.strip(w).1))
}

/// Rewrites every term into non-elliptic webs.
pub fn reduce(ws: &WebSum, ctx: &Context) -> Result<WebSum, Error> {
    reduce_with(ws, ctx, ReductionOrder::Canonical)
}

pub fn reduce_with(ws: &WebSum, ctx: &Context, order: ReductionOrder) -> Result<WebSum, Error> {
    let coeffs: Vec<(&Web, Scalar)> = ws
        .terms()
        .map(|(w, c)| Ok((w, ctx.coerce(c)?)))
        .collect::<Result<_, Error>>()?;
    let terms = Reducer::run(ctx, order, |r| {
        let mut out = BTreeMap::new();
        for (w, c) in coeffs {
            r.reduce_into(w, c, &mut out);
        }
        out
    });
    Ok(WebSum::from_canonical(ws.signature().to_vec(), terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::web::{Sign, VertexKind};

    fn theta() -> Web {
        Web::from_ports(
            vec![],
            vec![VertexKind::Sink, VertexKind::Source],
            &[(0, 3), (1, 5), (2, 4)],
            0,
        )
        .unwrap()
    }

    #[test]
    fn small_closed_values() {
        for ctx in [Context::generic(), Context::level(2)] {
            assert!(evaluate_closed(&Web::empty(), &ctx).unwrap().is_one());
            assert_eq!(
                evaluate_closed(&Web::circles(1), &ctx).unwrap(),
                ctx.qint(3)
            );
            assert_eq!(
                evaluate_closed(&theta(), &ctx).unwrap(),
                &ctx.qint(3) * &ctx.qint(2)
            );
        }
    }

    #[test]
    fn open_web_is_rejected() {
        let g = Context::generic();
        assert!(evaluate_closed(&Web::identity(&[Sign::In]), &g).is_err());
    }

    #[test]
    fn cube_value_by_both_orders() {
        // the cube: closing an H-square against its mirror
        let g = Context::generic();
        let sq = Web::identity(&[Sign::Out, Sign::In])
            .attach_h(0)
            .unwrap()
            .attach_h(0)
            .unwrap();
        let cube = sq.pair(&sq).unwrap();
        cube.validate().unwrap();
        let a = evaluate_closed(&cube, &g).unwrap();
        for seed in 0..5 {
            assert_eq!(
                evaluate_closed_with(&cube, &g, ReductionOrder::Shuffled(seed)).unwrap(),
                a
            );
        }
    }
}
