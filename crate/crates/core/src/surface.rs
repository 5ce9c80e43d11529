//! Spines of handlebodies, curves recorded as crossing words, and the data
//! read off them: edge weights, complexity, the level bound and SU(3)ₖ
//! state-space dimensions.
//!
//! A spine edge runs from `v1` to `v2`. At `v1` it contributes its label, at
//! `v2` the dual label. A vertex of degree 2 carries an implicit vacuum leg,
//! so the one-vertex loop spine of the torus is allowed.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clasp::ClaspLabel;
use crate::error::Error;
use crate::fusion::{triangle_dim_at_level, TripleLabel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpineEdge {
    pub id: String,
    pub v1: String,
    pub v2: String,
}

/// Which end of an edge sits at a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum End {
    /// The edge starts here (`v1`).
    Tail,
    /// The edge ends here (`v2`).
    Head,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpineJson", into = "SpineJson")]
pub struct SpineGraph {
    vertices: Vec<String>,
    edges: Vec<SpineEdge>,
    ends: Vec<Vec<(usize, End)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct SpineJson {
    vertices: Vec<String>,
    edges: Vec<SpineEdge>,
}

impl TryFrom<SpineJson> for SpineGraph {
    type Error = Error;

    fn try_from(j: SpineJson) -> Result<Self, Error> {
        SpineGraph::new(j.vertices, j.edges)
    }
}

impl From<SpineGraph> for SpineJson {
    fn from(s: SpineGraph) -> Self {
        SpineJson {
            vertices: s.vertices,
            edges: s.edges,
        }
    }
}

impl SpineGraph {
    /// Checks ids, endpoints, degrees (2 or 3, loops counted twice) and
    /// connectivity.
    pub fn new(vertices: Vec<String>, edges: Vec<SpineEdge>) -> Result<Self, Error> {
        if vertices.is_empty() {
            return Err(Error::InvalidInput("spine has no vertices".into()));
        }
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_str(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate vertex {v:?}")));
            }
        }
        let mut ends = vec![Vec::new(); vertices.len()];
        let mut seen = HashMap::new();
        for (e, edge) in edges.iter().enumerate() {
            if seen.insert(edge.id.as_str(), e).is_some() {
                return Err(Error::InvalidInput(format!("duplicate edge {:?}", edge.id)));
            }
            let find = |v: &str| {
                index.get(v).copied().ok_or_else(|| {
                    Error::InvalidInput(format!("edge {:?} uses unknown vertex {v:?}", edge.id))
                })
            };
            ends[find(&edge.v1)?].push((e, End::Tail));
            ends[find(&edge.v2)?].push((e, End::Head));
        }
        for (v, list) in ends.iter().enumerate() {
            if !(2..=3).contains(&list.len()) {
                return Err(Error::InvalidInput(format!(
                    "vertex {:?} has degree {}; spines are trivalent",
                    vertices[v],
                    list.len()
                )));
            }
        }
        let spine = Self {
            vertices,
            edges,
            ends,
        };
        if !spine.is_connected() {
            return Err(Error::InvalidInput("spine is not connected".into()));
        }
        Ok(spine)
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spine serializes")
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(e, _) in &self.ends[v] {
                for w in [
                    self.vertex_index(&self.edges[e].v1),
                    self.vertex_index(&self.edges[e].v2),
                ] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn vertex_index(&self, id: &str) -> usize {
        self.vertices
            .iter()
            .position(|v| v == id)
            .expect("validated")
    }

    /// One vertex with a loop.
    pub fn torus() -> Self {
        Self::new(vec!["v".into()], vec![edge("e", "v", "v")]).unwrap()
    }

    /// Two loops joined by a bridge; edges `loop1`, `bridge`, `loop2`.
    pub fn dumbbell() -> Self {
        Self::new(
            vec!["v1".into(), "v2".into()],
            vec![
                edge("loop1", "v1", "v1"),
                edge("bridge", "v1", "v2"),
                edge("loop2", "v2", "v2"),
            ],
        )
        .unwrap()
    }

    /// Two vertices joined by three edges `e1`, `e2`, `e3`.
    pub fn theta() -> Self {
        Self::new(
            vec!["v1".into(), "v2".into()],
            (1..=3)
                .map(|i| edge(&format!("e{i}"), "v1", "v2"))
                .collect(),
        )
        .unwrap()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[SpineEdge] {
        &self.edges
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.edges[e].v1 == self.edges[e].v2
    }

    /// Edge ends at vertex `v`, loops listed twice.
    pub fn ends(&self, v: usize) -> &[(usize, End)] {
        &self.ends[v]
    }

    /// `1 + E - V`.
    pub fn genus(&self) -> i64 {
        1 + self.edges.len() as i64 - self.vertices.len() as i64
    }

    /// The three labels meeting at each vertex, given one label per edge:
    /// tails carry the label, heads its dual, a missing third leg the vacuum.
    pub fn vertex_triples<L: Copy>(
        &self,
        labels: &[L],
        dual: impl Fn(L) -> L,
        vacuum: L,
    ) -> Vec<[L; 3]> {
        self.ends
            .iter()
            .map(|list| {
                let mut t = [vacuum; 3];
                for (slot, &(e, end)) in list.iter().enumerate() {
                    t[slot] = match end {
                        End::Tail => labels[e],
                        End::Head => dual(labels[e]),
                    };
                }
                t
            })
            .collect()
    }
}

fn edge(id: &str, v1: &str, v2: &str) -> SpineEdge {
    SpineEdge {
        id: id.into(),
        v1: v1.into(),
        v2: v2.into(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crossing {
    pub edge: String,
    /// `+1` when crossing the edge's disk along the edge's orientation.
    pub sign: i8,
}

/// A closed curve as the cyclic sequence of disks it crosses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveWord {
    pub crossings: Vec<Crossing>,
}

impl CurveWord {
    pub fn new(crossings: impl IntoIterator<Item = (&'static str, i8)>) -> Self {
        Self {
            crossings: crossings
                .into_iter()
                .map(|(e, s)| Crossing {
                    edge: e.into(),
                    sign: s,
                })
                .collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn rotated(&self, k: usize) -> Self {
        let mut c = self.crossings.clone();
        if !c.is_empty() {
            let k = k % c.len();
            c.rotate_left(k);
        }
        Self { crossings: c }
    }

    /// The same curve traversed backwards.
    pub fn reversed(&self) -> Self {
        Self {
            crossings: self
                .crossings
                .iter()
                .rev()
                .map(|c| Crossing {
                    edge: c.edge.clone(),
                    sign: -c.sign,
                })
                .collect(),
        }
    }

    /// Edge indices of the crossings, after checking the word against
    /// `spine`: non-empty, known edges, signs ±1, and cyclically consecutive
    /// crossings on edges sharing a vertex.
    pub fn check(&self, spine: &SpineGraph) -> Result<Vec<usize>, Error> {
        if self.crossings.is_empty() {
            return Err(Error::InvalidInput("curve has no crossings".into()));
        }
        let idx = self
            .crossings
            .iter()
            .map(|c| {
                if c.sign != 1 && c.sign != -1 {
                    return Err(Error::InvalidInput(format!(
                        "crossing sign {} is not ±1",
                        c.sign
                    )));
                }
                spine
                    .edge_index(&c.edge)
                    .ok_or_else(|| Error::InvalidInput(format!("unknown edge {:?}", c.edge)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let touches = |e: usize| {
            let ed = &spine.edges[e];
            [ed.v1.as_str(), ed.v2.as_str()]
        };
        for i in 0..idx.len() {
            let (a, b) = (idx[i], idx[(i + 1) % idx.len()]);
            if !touches(a).iter().any(|v| touches(b).contains(v)) {
                return Err(Error::InvalidInput(format!(
                    "consecutive crossings on {:?} and {:?} share no vertex",
                    spine.edges[a].id, spine.edges[b].id
                )));
            }
        }
        Ok(idx)
    }
}

/// No two cyclically consecutive crossings on the same edge.
pub fn is_graph_geodesic(spine: &SpineGraph, c: &CurveWord) -> Result<bool, Error> {
    let idx = c.check(spine)?;
    let n = idx.len();
    // a single crossing has no consecutive pair
    Ok(n == 1 || (0..n).all(|i| idx[i] != idx[(i + 1) % n]))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeWeight {
    pub p: u32,
    pub q: u32,
}

/// Positive and negative crossing counts per edge, zero for edges the curve
/// misses.
pub fn edge_weights(
    spine: &SpineGraph,
    c: &CurveWord,
) -> Result<BTreeMap<String, EdgeWeight>, Error> {
    let idx = c.check(spine)?;
    let mut w = vec![EdgeWeight::default(); spine.edges.len()];
    for (e, cr) in idx.iter().zip(&c.crossings) {
        if cr.sign > 0 {
            w[*e].p += 1;
        } else {
            w[*e].q += 1;
        }
    }
    Ok(spine.edges.iter().map(|e| e.id.clone()).zip(w).collect())
}

fn weight_vec(spine: &SpineGraph, c: &CurveWord) -> Result<Vec<EdgeWeight>, Error> {
    let map = edge_weights(spine, c)?;
    Ok(spine.edges.iter().map(|e| map[&e.id]).collect())
}

/// Max over vertices of the larger of the summed `p` and summed `q` over the
/// edge ends there. A loop is counted at both of its ends.
pub fn complexity(spine: &SpineGraph, c: &CurveWord) -> Result<u32, Error> {
    let w = weight_vec(spine, c)?;
    Ok(spine
        .ends
        .iter()
        .map(|list| {
            let p: u32 = list.iter().map(|&(e, _)| w[e].p).sum();
            let q: u32 = list.iter().map(|&(e, _)| w[e].q).sum();
            p.max(q)
        })
        .max()
        .unwrap_or(0))
}

/// `2m`, the smallest level the detection argument uses.
pub fn min_level(spine: &SpineGraph, c: &CurveWord) -> Result<u32, Error> {
    match complexity(spine, c)? {
        0 => Err(Error::InvalidInput("curve has complexity 0".into())),
        m => Ok(2 * m),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexReport {
    pub vertex: String,
    pub triple: TripleLabel,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Certificate {
    pub geodesic: bool,
    pub weights: BTreeMap<String, EdgeWeight>,
    pub complexity: u32,
    pub min_level: u32,
    /// Edge `e` labelled `(p_e, q_e)`.
    pub leading_labelling: BTreeMap<String, ClaspLabel>,
    pub vertices: Vec<VertexReport>,
    /// Every vertex triple has `Σm ≡ Σn (mod 3)`.
    pub flux_balanced: bool,
    /// Every vertex triple has a non-zero triangle space at `min_level`.
    pub leading_term_nonzero: bool,
}

/// Weights, complexity, level and the leading labelling of a geodesic curve,
/// with the triangle dimension of every vertex triple at that level.
pub fn detection_certificate(spine: &SpineGraph, c: &CurveWord) -> Result<Certificate, Error> {
    if !is_graph_geodesic(spine, c)? {
        return Err(Error::InvalidInput(
            "curve crosses the same edge twice in a row; choose a decomposition in which it is a graph geodesic".into(),
        ));
    }
    let w = weight_vec(spine, c)?;
    let m = complexity(spine, c)?;
    let k = min_level(spine, c)?;
    let labels: Vec<ClaspLabel> = w.iter().map(|x| ClaspLabel::new(x.p, x.q)).collect();
    let triples = spine.vertex_triples(&labels, ClaspLabel::dual, ClaspLabel::new(0, 0));
    let mut vertices = Vec::new();
    for (v, t) in spine.vertices.iter().zip(triples) {
        let triple = TripleLabel(t);
        vertices.push(VertexReport {
            vertex: v.clone(),
            triple,
            dim: triangle_dim_at_level(&triple, k)?,
        });
    }
    let flux_balanced = vertices
        .iter()
        .all(|r| (i64::from(r.triple.m_sum()) - i64::from(r.triple.n_sum())) % 3 == 0);
    let leading_term_nonzero = vertices.iter().all(|r| r.dim >= 1);
    Ok(Certificate {
        geodesic: true,
        weights: spine.edges.iter().map(|e| e.id.clone()).zip(w).collect(),
        complexity: m,
        min_level: k,
        leading_labelling: spine
            .edges
            .iter()
            .map(|e| e.id.clone())
            .zip(labels)
            .collect(),
        vertices,
        flux_balanced,
        leading_term_nonzero,
    })
}

/// Labels `(m, n)` with `m + n ≤ k`.
pub fn level_labels(k: u32) -> Vec<ClaspLabel> {
    (0..=k)
        .flat_map(|s| (0..=s).map(move |m| ClaspLabel::new(m, s - m)))
        .collect()
}

/// An edge labelling with non-zero vertex spaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Su3Labelling {
    pub edges: Vec<ClaspLabel>,
    /// Triangle dimension at each vertex; a vertex index ranges below it.
    pub vertex_dims: Vec<u64>,
}

impl Su3Labelling {
    pub fn multiplicity(&self) -> u64 {
        self.vertex_dims.iter().product()
    }
}

fn labelling_dims(
    spine: &SpineGraph,
    labels: &[ClaspLabel],
    k: u32,
    conjugate: bool,
) -> Result<Vec<u64>, Error> {
    let labels: Vec<ClaspLabel> = if conjugate {
        labels.iter().map(|c| c.dual()).collect()
    } else {
        labels.to_vec()
    };
    spine
        .vertex_triples(&labels, ClaspLabel::dual, ClaspLabel::new(0, 0))
        .into_iter()
        .map(|t| triangle_dim_at_level(&TripleLabel(t), k))
        .collect()
}

fn assignment(choices: &[ClaspLabel], edges: usize, mut code: usize) -> Vec<ClaspLabel> {
    let mut out = Vec::with_capacity(edges);
    for _ in 0..edges {
        out.push(choices[code % choices.len()]);
        code /= choices.len();
    }
    out
}

fn labellings_with(
    spine: &SpineGraph,
    k: u32,
    conjugate: bool,
) -> Result<Vec<Su3Labelling>, Error> {
    let choices = level_labels(k);
    let e = spine.edges.len();
    let total = choices
        .len()
        .checked_pow(e as u32)
        .filter(|&t| t <= 50_000_000)
        .ok_or_else(|| Error::Unsupported(format!("too many labellings at level {k}")))?;
    let found: Vec<Option<Su3Labelling>> = (0..total)
        .into_par_iter()
        .map(|code| {
            let edges = assignment(&choices, e, code);
            let vertex_dims = labelling_dims(spine, &edges, k, conjugate)?;
            Ok(vertex_dims
                .iter()
                .all(|&d| d > 0)
                .then_some(Su3Labelling { edges, vertex_dims }))
        })
        .collect::<Result<_, Error>>()?;
    Ok(found.into_iter().flatten().collect())
}

/// Edge labellings at level `k` whose vertex spaces are all non-zero.
pub fn admissible_labellings(spine: &SpineGraph, k: u32) -> Result<Vec<Su3Labelling>, Error> {
    labellings_with(spine, k, false)
}

/// `Σ_labellings Π_vertices triangle_dim_at_level`.
pub fn state_space_dim(spine: &SpineGraph, k: u32) -> Result<u64, Error> {
    Ok(admissible_labellings(spine, k)?
        .iter()
        .map(Su3Labelling::multiplicity)
        .sum())
}

/// The same count with every label replaced by its dual.
pub fn state_space_dim_conjugated(spine: &SpineGraph, k: u32) -> Result<u64, Error> {
    Ok(labellings_with(spine, k, true)?
        .iter()
        .map(Su3Labelling::multiplicity)
        .sum())
}
