//! Triangle spaces: invariant vectors for three clasp labels meeting at a
//! vertex.
//!
//! For labels `(m_i, n_i)` with `Σm - Σn = 3ℓ`, the space is the balanced
//! space of `(m_i - ℓ, n_i)` with an ℓ-fold triple point added (or
//! `(m_i, n_i - ℓ)` when the difference is negative). A balanced triple has
//! one basis web per admissible 6-tuple `(x, y, a, b, u, v)`:
//!
//! ```text
//! x + v = m1   y + u = n1   a + y = m2   x + b = n2   b + u = m3   a + v = n3
//! ```
//!
//! and there are `min(m_i, n_i, p_i) + 1` of them, `p_i = s - m_i - n_i`,
//! `s = Σm = Σn`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clasp::ClaspLabel;
use crate::error::Error;
use crate::web::{Builder, Sign, VertexKind, Web};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TripleLabel(pub [ClaspLabel; 3]);

impl TripleLabel {
    pub fn new(l1: (u32, u32), l2: (u32, u32), l3: (u32, u32)) -> Self {
        Self([
            ClaspLabel::new(l1.0, l1.1),
            ClaspLabel::new(l2.0, l2.1),
            ClaspLabel::new(l3.0, l3.1),
        ])
    }

    pub fn m_sum(&self) -> u32 {
        self.0.iter().map(|c| c.m).sum()
    }

    pub fn n_sum(&self) -> u32 {
        self.0.iter().map(|c| c.n).sum()
    }

    /// Cyclic rotation of the three labels.
    pub fn rotate(&self) -> Self {
        Self([self.0[1], self.0[2], self.0[0]])
    }

    /// Every label replaced by its dual.
    pub fn dual(&self) -> Self {
        Self(self.0.map(ClaspLabel::dual))
    }

    /// Parses `"(m1,n1),(m2,n2),(m3,n3)"`.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let nums: Vec<u32> = text
            .split(|c: char| !c.is_ascii_digit())
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse()
                    .map_err(|_| Error::Parse(format!("bad number {s:?}")))
            })
            .collect::<Result<_, _>>()?;
        let shape_ok = text
            .chars()
            .all(|c| c.is_ascii_digit() || c.is_whitespace() || "(),".contains(c))
            && text.matches('(').count() == 3
            && text.matches(')').count() == 3;
        if nums.len() != 6 || !shape_ok {
            return Err(Error::Parse(format!(
                "expected three labels like (1,0),(0,1),(0,0), got {text:?}"
            )));
        }
        Ok(Self::new(
            (nums[0], nums[1]),
            (nums[2], nums[3]),
            (nums[4], nums[5]),
        ))
    }
}

impl fmt::Display for TripleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SixTuple {
    pub x: u32,
    pub y: u32,
    pub a: u32,
    pub b: u32,
    pub u: u32,
    pub v: u32,
}

impl SixTuple {
    pub fn satisfies(&self, t: &TripleLabel) -> bool {
        let [l1, l2, l3] = t.0;
        self.x + self.v == l1.m
            && self.y + self.u == l1.n
            && self.a + self.y == l2.m
            && self.x + self.b == l2.n
            && self.b + self.u == l3.m
            && self.a + self.v == l3.n
    }
}

/// Which side the triple point's strands are taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EllSide {
    /// `Σm > Σn`: the triple point is a cluster of sources on `m` strands.
    M,
    /// `Σn > Σm`: sinks on `n` strands.
    N,
}

/// `ℓ` with `|Σm - Σn| = 3ℓ`, or `None` when 3 does not divide the
/// difference (the space is zero).
pub fn ell_parameter(t: &TripleLabel) -> Option<u32> {
    let d = t.m_sum().abs_diff(t.n_sum());
    d.is_multiple_of(3).then_some(d / 3)
}

/// The balanced triple underlying `t`, with `ℓ` and the side it was taken
/// from. `Ok(None)` when `ℓ` does not exist.
pub fn ell_reduce(t: &TripleLabel) -> Result<Option<(TripleLabel, u32, EllSide)>, Error> {
    let Some(ell) = ell_parameter(t) else {
        return Ok(None);
    };
    let side = if t.m_sum() >= t.n_sum() {
        EllSide::M
    } else {
        EllSide::N
    };
    let mut base = *t;
    for c in &mut base.0 {
        let x = match side {
            EllSide::M => &mut c.m,
            EllSide::N => &mut c.n,
        };
        if *x < ell {
            return Err(Error::Unsupported(format!(
                "cannot remove an ℓ = {ell} triple point from {t}: some label has fewer than ℓ strands on that side"
            )));
        }
        *x -= ell;
    }
    Ok(Some((base, ell, side)))
}

/// `s` and `p_i = s - m_i - n_i` of a balanced triple.
pub fn p_values(t: &TripleLabel) -> (i64, [i64; 3]) {
    let s = i64::from(t.m_sum());
    (s, t.0.map(|c| s - i64::from(c.m) - i64::from(c.n)))
}

/// All admissible 6-tuples of `t`, sorted by `x`. Unbalanced triples have
/// none.
pub fn enumerate_six_tuples(t: &TripleLabel) -> Vec<SixTuple> {
    let [l1, l2, l3] = t.0.map(|c| (i64::from(c.m), i64::from(c.n)));
    let mut out = Vec::new();
    for x in 0..=l1.0.min(l2.1) {
        let v = l1.0 - x;
        let b = l2.1 - x;
        let a = l3.1 - v;
        let y = l2.0 - a;
        let u = l1.1 - y;
        if [a, y, u].iter().any(|&z| z < 0) || b + u != l3.0 {
            continue;
        }
        let c = |z: i64| z as u32;
        out.push(SixTuple {
            x: c(x),
            y: c(y),
            a: c(a),
            b: c(b),
            u: c(u),
            v: c(v),
        });
    }
    out
}

/// Dimension of the triangle space.
pub fn triangle_dim(t: &TripleLabel) -> Result<u64, Error> {
    let Some((base, _, _)) = ell_reduce(t)? else {
        return Ok(0);
    };
    let (_, p) = p_values(&base);
    if p.iter().any(|&x| x < 0) {
        return Ok(0);
    }
    let min = base
        .0
        .iter()
        .flat_map(|c| [i64::from(c.m), i64::from(c.n)])
        .chain(p)
        .min()
        .unwrap();
    Ok(min as u64 + 1)
}

/// Dimension at level `k`, defined when every label has `m + n ≤ k` and
/// `s + ℓ ≤ k`; there it equals the classical dimension.
pub fn triangle_dim_at_level(t: &TripleLabel, k: u32) -> Result<u64, Error> {
    if let Some(c) = t.0.iter().find(|c| c.size() > k) {
        return Err(Error::Unsupported(format!("label {c} has m+n > k = {k}")));
    }
    let Some((base, ell, _)) = ell_reduce(t)? else {
        return Ok(0);
    };
    let s = base.m_sum();
    if s + ell > k {
        return Err(Error::Unsupported(format!(
            "triple {t} has s + ℓ = {s} + {ell} > k = {k}; the level-{k} triangle space is not determined here"
        )));
    }
    triangle_dim(t)
}

/// `ℓ` sources (or sinks) arranged as a triangular patch of hexagons, with
/// `ℓ` boundary points on each side. Boundary order: bottom side left to
/// right, right side upwards, left side downwards.
pub fn triple_point(ell: u32, kind: VertexKind) -> Web {
    let l = ell as usize;
    if l == 0 {
        return Web::empty();
    }
    // index sources s(i,j) with i+j < l and sinks t(i,j) with i+j < l-1
    let mut src = std::collections::HashMap::new();
    let mut snk = std::collections::HashMap::new();
    let mut kinds = Vec::new();
    for j in 0..l {
        for i in 0..l - j {
            src.insert((i, j), kinds.len());
            kinds.push(kind);
        }
    }
    for j in 0..l.saturating_sub(1) {
        for i in 0..l - 1 - j {
            snk.insert((i, j), kinds.len());
            kinds.push(kind.flip());
        }
    }
    let b = 3 * l;
    let port = |v: usize, slot: usize| b + 3 * v + slot;
    let mut edges = Vec::new();
    // boundary positions
    for i in 0..l {
        edges.push((i, port(src[&(i, 0)], 2)));
        edges.push((l + i, port(src[&(l - 1 - i, i)], 0)));
        edges.push((2 * l + i, port(src[&(0, l - 1 - i)], 1)));
    }
    for (&(i, j), &t) in &snk {
        edges.push((port(t, 0), port(src[&(i, j + 1)], 2)));
        edges.push((port(t, 1), port(src[&(i, j)], 0)));
        edges.push((port(t, 2), port(src[&(i + 1, j)], 1)));
    }
    let sign = if kind == VertexKind::Source {
        Sign::Out
    } else {
        Sign::In
    };
    Web::from_ports(vec![sign; b], kinds, &edges, 0).expect("triple point is a valid web")
}

/// The basis web of the triangle space of `t` indexed by `st`, an
/// admissible 6-tuple of the balanced triple underlying `t`.
///
/// Each label's boundary reads `[out × m, in × n]`. Strand bundles join
/// neighbouring labels; the triple point sits in the middle; H's then sort
/// each label's strands into that order.
pub fn build_triangle_basis_web(t: &TripleLabel, st: &SixTuple) -> Result<Web, Error> {
    let (base, ell, side) = ell_reduce(t)?.ok_or_else(|| {
        Error::InvalidInput(format!("{t} has no ℓ: Σm - Σn is not divisible by 3"))
    })?;
    if !st.satisfies(&base) {
        return Err(Error::InvalidInput(format!(
            "6-tuple {st:?} is not admissible for the balanced triple {base}"
        )));
    }
    // per group: prev part [M×q][N×p] and next part [M×p][N×q]
    let prev = [(st.v, st.u), (st.y, st.x), (st.b, st.a)];
    let next = [(st.x, st.y), (st.a, st.b), (st.u, st.v)];
    let t_kind = match side {
        EllSide::M => VertexKind::Source,
        EllSide::N => VertexKind::Sink,
    };
    let mut bld = Builder::new();
    let tp = bld.place(&triple_point(ell, t_kind), false);
    let l = ell as usize;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    // node lists for the four parts of each group, filled by chords
    let mut prev_nodes: Vec<Vec<usize>> = vec![Vec::new(); 3];
    let mut next_nodes: Vec<Vec<usize>> = vec![Vec::new(); 3];
    for g in 0..3 {
        let h = (g + 1) % 3;
        // group g's next part [M×p][N×q] mirrors group h's prev part [M×q][N×p]
        let (p, q) = next[g];
        debug_assert_eq!(prev[h], (q, p));
        let (p, q) = (p as usize, q as usize);
        let mut gn = vec![0; p + q];
        let mut hp = vec![0; p + q];
        for k in 0..p + q {
            // innermost chord joins the last point of g with the first of h
            let arc = bld.place(&Web::identity(&[Sign::In]), false);
            let (g_pos, h_pos) = (p + q - 1 - k, k);
            // positions < p in g's next part are M (Out); in h's prev part the
            // first q are M (Out)
            let g_out = g_pos < p;
            let h_out = h_pos < q;
            debug_assert_ne!(g_out, h_out);
            // arc[0] has sign In, arc[1] Out
            if g_out {
                gn[g_pos] = arc[1];
                hp[h_pos] = arc[0];
            } else {
                gn[g_pos] = arc[0];
                hp[h_pos] = arc[1];
            }
        }
        next_nodes[g] = gn;
        prev_nodes[h] = hp;
    }
    for g in 0..3 {
        let mut nodes = prev_nodes[g].clone();
        nodes.extend_from_slice(&tp[g * l..(g + 1) * l]);
        nodes.extend_from_slice(&next_nodes[g]);
        groups.push(nodes);
    }
    let order: Vec<usize> = groups.iter().flatten().copied().collect();
    let mut w = bld.finish(&order);
    let mut offset = 0;
    for label in t.0 {
        let size = label.size() as usize;
        loop {
            let s = w.boundary();
            let Some(j) = (offset..(offset + size).saturating_sub(1))
                .find(|&j| s[j] == Sign::In && s[j + 1] == Sign::Out)
            else {
                break;
            };
            w = w.attach_h(j)?;
        }
        offset += size;
    }
    w.validate()?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    /// Weight multiplicities of the irreducible representation with highest
    /// weight (m, n), as contents of semistandard tableaux of shape
    /// (m+n, n) in the letters 1, 2, 3.
    fn contents(m: u32, n: u32) -> HashMap<[i64; 3], u64> {
        let row1 = (m + n) as i64;
        let row2 = n as i64;
        let mut out = HashMap::new();
        for a1 in 0..=row1 {
            for a2 in 0..=row1 - a1 {
                let a3 = row1 - a1 - a2;
                for b2 in 0..=row2 {
                    let b3 = row2 - b2;
                    // twos in row two sit under ones, threes under ones or twos
                    if b2 <= a1 && row2 <= a1 + a2 {
                        *out.entry([a1, a2 + b2, a3 + b3]).or_insert(0) += 1;
                    }
                }
            }
        }
        out
    }

    /// Invariant dimension of the triple tensor product, from the Weyl
    /// character formula: Σ_w sgn(w) mult(D/3 + wρ - ρ).
    fn invariant_dim(t: &TripleLabel) -> u64 {
        let mut acc: HashMap<[i64; 3], u64> = HashMap::from([([0, 0, 0], 1)]);
        for c in t.0 {
            let w = contents(c.m, c.n);
            let mut next = HashMap::new();
            for (k1, v1) in &acc {
                for (k2, v2) in &w {
                    let k = [k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]];
                    *next.entry(k).or_insert(0) += v1 * v2;
                }
            }
            acc = next;
        }
        let d: i64 = t.0.iter().map(|c| i64::from(c.m + 2 * c.n)).sum();
        if d % 3 != 0 {
            return 0;
        }
        let rho = [2i64, 1, 0];
        let perms: [([usize; 3], i64); 6] = [
            ([0, 1, 2], 1),
            ([1, 0, 2], -1),
            ([0, 2, 1], -1),
            ([2, 1, 0], -1),
            ([1, 2, 0], 1),
            ([2, 0, 1], 1),
        ];
        let mut total = 0i64;
        for (p, sgn) in perms {
            let mu = [0, 1, 2].map(|i| d / 3 + rho[p[i]] - rho[i]);
            total += sgn * acc.get(&mu).copied().unwrap_or(0) as i64;
        }
        total as u64
    }

    fn all_triples(max: u32) -> Vec<TripleLabel> {
        let b = max + 1;
        (0..b.pow(6))
            .map(|code| {
                let d = |k: u32| code / b.pow(k) % b;
                TripleLabel::new((d(0), d(1)), (d(2), d(3)), (d(4), d(5)))
            })
            .collect()
    }

    #[test]
    fn ell_examples() {
        assert_eq!(
            ell_parameter(&TripleLabel::new((1, 0), (0, 1), (0, 0))),
            Some(0)
        );
        assert_eq!(
            ell_parameter(&TripleLabel::new((1, 0), (1, 0), (1, 0))),
            Some(1)
        );
        assert_eq!(
            ell_parameter(&TripleLabel::new((1, 0), (1, 0), (0, 0))),
            None
        );
    }

    #[test]
    fn tuple_examples() {
        let t = TripleLabel::new((1, 0), (0, 1), (0, 0));
        let e = enumerate_six_tuples(&t);
        assert_eq!(
            e,
            vec![SixTuple {
                x: 1,
                y: 0,
                a: 0,
                b: 0,
                u: 0,
                v: 0
            }]
        );
        let t = TripleLabel::new((1, 1), (1, 1), (1, 1));
        let e = enumerate_six_tuples(&t);
        assert_eq!(
            e,
            vec![
                SixTuple {
                    x: 0,
                    y: 1,
                    a: 0,
                    b: 1,
                    u: 0,
                    v: 1
                },
                SixTuple {
                    x: 1,
                    y: 0,
                    a: 1,
                    b: 0,
                    u: 1,
                    v: 0
                },
            ]
        );
        assert_eq!(
            enumerate_six_tuples(&TripleLabel::new((0, 0), (0, 0), (0, 0))).len(),
            1
        );
    }

    #[test]
    fn dims() {
        assert_eq!(
            triangle_dim(&TripleLabel::new((1, 0), (0, 1), (0, 0))).unwrap(),
            1
        );
        assert_eq!(
            triangle_dim(&TripleLabel::new((1, 1), (1, 1), (1, 1))).unwrap(),
            2
        );
        let t = TripleLabel::new((1, 0), (1, 0), (0, 2));
        assert_eq!(
            triangle_dim(&t).unwrap(),
            enumerate_six_tuples(&t).len() as u64
        );
        assert_eq!(
            triangle_dim(&TripleLabel::new((1, 0), (1, 0), (0, 0))).unwrap(),
            0
        );
    }

    #[test]
    fn level_guard() {
        let t = TripleLabel::new((1, 0), (0, 1), (0, 0));
        assert_eq!(triangle_dim_at_level(&t, 2).unwrap(), 1);
        let t = TripleLabel::new((1, 1), (1, 1), (1, 1));
        assert_eq!(triangle_dim_at_level(&t, 3).unwrap(), 2);
        assert!(matches!(
            triangle_dim_at_level(&t, 2),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn dimension_theorem_matches_enumeration_and_characters() {
        for t in all_triples(3) {
            let Ok(d) = triangle_dim(&t) else { continue };
            assert_eq!(d, invariant_dim(&t), "{t}");
            if ell_parameter(&t) == Some(0) {
                assert_eq!(d, enumerate_six_tuples(&t).len() as u64, "{t}");
            }
            assert_eq!(triangle_dim(&t.rotate()).unwrap(), d);
            assert_eq!(triangle_dim(&t.dual()).unwrap(), d);
        }
    }

    #[test]
    fn basis_webs_are_valid_and_distinct() {
        for t in all_triples(2) {
            let Ok(Some((base, _, _))) = ell_reduce(&t) else {
                continue;
            };
            let tuples = enumerate_six_tuples(&base);
            let mut seen = std::collections::BTreeSet::new();
            for st in &tuples {
                let w = build_triangle_basis_web(&t, st).unwrap();
                assert!(w.is_non_elliptic(), "{t} {st:?}");
                let mut expect = Vec::new();
                for c in t.0 {
                    expect.extend(c.bottom_signature());
                }
                assert_eq!(w.boundary(), expect.as_slice());
                seen.insert(crate::web::canonicalize(&w));
            }
            assert_eq!(seen.len(), tuples.len(), "{t}");
        }
    }

    #[test]
    fn triple_points() {
        for l in 1..=4 {
            let w = triple_point(l, VertexKind::Source);
            assert!(w.is_non_elliptic());
            assert_eq!(w.vertex_count() as u32, l * l);
        }
        let t = TripleLabel::new((1, 0), (1, 0), (1, 0));
        let w = build_triangle_basis_web(
            &t,
            &SixTuple {
                x: 0,
                y: 0,
                a: 0,
                b: 0,
                u: 0,
                v: 0,
            },
        )
        .unwrap();
        assert_eq!(w.vertex_count(), 1);
        assert_eq!(w.kinds(), &[VertexKind::Source]);
    }

    #[test]
    fn parse_labels() {
        let t = TripleLabel::parse("(1,1),(1,1),(1,1)").unwrap();
        assert_eq!(t, TripleLabel::new((1, 1), (1, 1), (1, 1)));
        assert!(TripleLabel::parse("(1,1),(1,1)").is_err());
    }
}
