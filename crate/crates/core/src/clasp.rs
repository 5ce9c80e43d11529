//! Clasps: the idempotents on `m` outgoing and `n` incoming strands that are
//! killed by every cap and every Y.
//!
//! A clasp is solved for directly. Its boundary has `2(m+n)` points: the
//! bottom row `[out × m, in × n]` read left to right, then the top row read
//! right to left. Writing `P = id + Σ c_w w` over the other non-elliptic webs
//! on that boundary, the annihilation conditions are linear in the `c_w` and
//! have exactly one solution.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{Context, Scalar};
use crate::error::Error;
use crate::linalg::{solve, Solution};
use crate::web::{self, non_elliptic_basis, Sign, Web, WebSum};

/// Largest `m + n` built unless the caller raises the cap.
pub const DEFAULT_MAX_SIZE: u32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClaspLabel {
    pub m: u32,
    pub n: u32,
}

impl ClaspLabel {
    pub const fn new(m: u32, n: u32) -> Self {
        Self { m, n }
    }

    pub fn size(self) -> u32 {
        self.m + self.n
    }

    /// The dual label `(n, m)`.
    pub fn dual(self) -> Self {
        Self::new(self.n, self.m)
    }

    pub fn bottom_signature(self) -> Vec<Sign> {
        let mut s = vec![Sign::Out; self.m as usize];
        s.extend(std::iter::repeat_n(Sign::In, self.n as usize));
        s
    }

    /// Full boundary of the clasp: bottom row, then top row reversed.
    pub fn signature(self) -> Vec<Sign> {
        Web::identity(&self.bottom_signature()).boundary().to_vec()
    }

    /// Positions `i` such that points `i`, `i+1` lie in the same row; a cap
    /// or a Y can be attached at each.
    pub fn annihilation_positions(self) -> Vec<usize> {
        let n = self.size() as usize;
        (0..2 * n)
            .filter(|&i| i + 1 < 2 * n && i + 1 != n)
            .collect()
    }
}

impl fmt::Display for ClaspLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// `[m+1][n+1][m+n+2] / [2]`.
pub fn clasp_trace(c: ClaspLabel, ctx: &Context) -> Scalar {
    let (m, n) = (i64::from(c.m), i64::from(c.n));
    let num = &(&ctx.qint(m + 1) * &ctx.qint(n + 1)) * &ctx.qint(m + n + 2);
    num.checked_div(&ctx.qint(2))
        .expect("[2] is a unit at every level")
}

/// Whether the level-`k` clasp agrees with the classical one: `m + n ≤ k`.
pub fn is_admissible(c: ClaspLabel, k: u32) -> bool {
    c.size() <= k
}

/// Applies a cap or a Y at `position`, whichever the signs allow.
pub fn annihilate(ws: &WebSum, position: usize, ctx: &Context) -> Result<WebSum, Error> {
    let s = ws.signature();
    if s[position] == s[position + 1] {
        web::attach_y(ws, position, ctx)
    } else {
        web::cap(ws, position, ctx)
    }
}

fn cache() -> &'static Mutex<HashMap<ClaspLabel, WebSum>> {
    static CACHE: OnceLock<Mutex<HashMap<ClaspLabel, WebSum>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn solve_generic(c: ClaspLabel) -> Result<WebSum, Error> {
    if let Some(p) = cache().lock().unwrap().get(&c) {
        return Ok(p.clone());
    }
    let g = Context::generic();
    let sig = c.signature();
    let identity = WebSum::single(&Web::identity(&c.bottom_signature()), Scalar::one());
    let id_web = identity.terms().next().unwrap().0.clone();
    let others: Vec<Web> = non_elliptic_basis(&sig)
        .into_iter()
        .filter(|w| *w != id_web)
        .collect();

    // rows are indexed by (position, resulting web)
    let mut rows: BTreeMap<(usize, Web), (Vec<Scalar>, Scalar)> = BTreeMap::new();
    let unknowns = others.len();
    for pos in c.annihilation_positions() {
        let mut add = |col: Option<usize>, image: WebSum| {
            for (w, coeff) in image.terms() {
                let row = rows
                    .entry((pos, w.clone()))
                    .or_insert_with(|| (vec![Scalar::zero(); unknowns], Scalar::zero()));
                match col {
                    Some(j) => row.0[j] = &row.0[j] + coeff,
                    None => row.1 = &row.1 - coeff,
                }
            }
        };
        add(None, annihilate(&identity, pos, &g)?);
        for (j, w) in others.iter().enumerate() {
            add(
                Some(j),
                annihilate(&WebSum::single(w, Scalar::one()), pos, &g)?,
            );
        }
    }
    let (a, b): (Vec<Vec<Scalar>>, Vec<Scalar>) = rows.into_values().unzip();
    let coeffs = if unknowns == 0 {
        if b.iter().any(|x| !x.is_zero()) {
            return Err(Error::Internal(format!(
                "identity on {c} is not annihilated"
            )));
        }
        Vec::new()
    } else {
        match solve(&a, &b)? {
            Solution::Unique(x) => x,
            Solution::Underdetermined(d) => return Err(Error::Internal(format!(
                "clasp {c} is not determined by its annihilation conditions ({d} free parameters)"
            ))),
            Solution::Inconsistent => {
                return Err(Error::Internal(format!(
                    "annihilation conditions for clasp {c} have no solution"
                )))
            }
        }
    };
    let mut p = identity;
    for (w, x) in others.iter().zip(coeffs) {
        p.add_term(w, x)?;
    }
    cache().lock().unwrap().insert(c, p.clone());
    Ok(p)
}

/// The clasp `c` as a sum of non-elliptic webs.
///
/// Sizes above `max_size` are refused, as are labels with `m + n > k` at
/// level `k`.
pub fn build_clasp(c: ClaspLabel, ctx: &Context, max_size: u32) -> Result<WebSum, Error> {
    if c.size() > max_size {
        return Err(Error::Unsupported(format!(
            "clasp {c} has m+n = {} above the size cap {max_size}",
            c.size()
        )));
    }
    if let Some(k) = ctx.level_k() {
        if !is_admissible(c, k) {
            return Err(Error::Unsupported(format!(
                "clasp {c} needs m+n ≤ k but k = {k}"
            )));
        }
    }
    let p = solve_generic(c)?;
    if ctx.level_k().is_none() {
        return Ok(p);
    }
    let terms = p
        .terms()
        .map(|(w, x)| Ok((w.clone(), ctx.coerce(x)?)))
        .collect::<Result<Vec<_>, Error>>()
        .map_err(|e| Error::Internal(format!("clasp {c} does not specialize: {e}")))?;
    WebSum::from_terms(p.signature().to_vec(), terms)
}

/// Which defining properties a candidate clasp satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaspCheck {
    pub identity_coefficient_one: bool,
    pub idempotent: bool,
    pub annihilated: bool,
    pub trace_matches: bool,
}

impl ClaspCheck {
    pub fn all(&self) -> bool {
        self.identity_coefficient_one && self.idempotent && self.annihilated && self.trace_matches
    }
}

pub fn check_clasp(p: &WebSum, c: ClaspLabel, ctx: &Context) -> Result<ClaspCheck, Error> {
    let id = Web::identity(&c.bottom_signature());
    let identity_coefficient_one = p.coefficient(&id).is_some_and(|x| x.is_one());
    let idempotent = web::stack(p, p, ctx)? == *p;
    let mut annihilated = true;
    for pos in c.annihilation_positions() {
        annihilated &= annihilate(p, pos, ctx)?.is_zero();
    }
    let trace_matches = p.closure(ctx)? == clasp_trace(c, ctx);
    Ok(ClaspCheck {
        identity_coefficient_one,
        idempotent,
        annihilated,
        trace_matches,
    })
}
