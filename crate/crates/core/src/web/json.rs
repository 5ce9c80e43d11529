//! JSON exchange format for single webs.
//!
//! ```json
//! {
//!   "boundary": ["in", "out", "out"],
//!   "vertices": [{"id": "v", "kind": "source"}],
//!   "edges": [
//!     {"id": "a", "from": {"boundary": 0}, "to": {"vertex": "v"}},
//!     ...
//!   ],
//!   "rotation": {"v": ["a", "b", "c"]}
//! }
//! ```
//!
//! Edges run from tail to head. `rotation` lists each vertex's edges
//! counterclockwise. Edge ids default to the edge's index.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{PortOwner, Sign, VertexKind, Web};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    pub kind: VertexKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EndpointJson {
    Boundary(usize),
    Vertex(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    pub from: EndpointJson,
    pub to: EndpointJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WebJson {
    pub boundary: Vec<Sign>,
    #[serde(default)]
    pub vertices: Vec<VertexJson>,
    #[serde(default)]
    pub edges: Vec<EdgeJson>,
    #[serde(default)]
    pub rotation: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub circles: u32,
}

fn is_zero(n: &u32) -> bool {
    *n == 0
}

impl WebJson {
    pub fn to_web(&self) -> Result<Web, Error> {
        let bad = |m: String| Error::InvalidInput(m);
        let b = self.boundary.len();
        let mut vindex = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if vindex.insert(v.id.as_str(), i).is_some() {
                return Err(bad(format!("duplicate vertex id {:?}", v.id)));
            }
        }
        let edge_ids: Vec<String> = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| e.id.clone().unwrap_or_else(|| i.to_string()))
            .collect();
        let mut slot_of: HashMap<(usize, &str), usize> = HashMap::new();
        for v in &self.vertices {
            let rot = self
                .rotation
                .get(&v.id)
                .ok_or_else(|| bad(format!("vertex {:?} has no rotation", v.id)))?;
            if rot.len() != 3 {
                return Err(bad(format!(
                    "vertex {:?} must have exactly three edges",
                    v.id
                )));
            }
            for (j, e) in rot.iter().enumerate() {
                if slot_of
                    .insert((vindex[v.id.as_str()], e.as_str()), j)
                    .is_some()
                {
                    return Err(bad(format!("edge {e:?} repeated at vertex {:?}", v.id)));
                }
            }
        }
        if let Some(extra) = self
            .rotation
            .keys()
            .find(|k| !vindex.contains_key(k.as_str()))
        {
            return Err(bad(format!("rotation given for unknown vertex {extra:?}")));
        }
        let port = |end: &EndpointJson, eid: &str| -> Result<usize, Error> {
            match end {
                EndpointJson::Boundary(i) if *i < b => Ok(*i),
                EndpointJson::Boundary(i) => Err(bad(format!("no boundary point {i}"))),
                EndpointJson::Vertex(id) => {
                    let v = *vindex
                        .get(id.as_str())
                        .ok_or_else(|| bad(format!("unknown vertex {id:?}")))?;
                    let j = slot_of.get(&(v, eid)).ok_or_else(|| {
                        bad(format!("edge {eid:?} missing from rotation of {id:?}"))
                    })?;
                    Ok(b + 3 * v + j)
                }
            }
        };
        let mut pairs = Vec::new();
        for (e, id) in self.edges.iter().zip(&edge_ids) {
            let (p, q) = (port(&e.from, id)?, port(&e.to, id)?);
            pairs.push((p, q));
        }
        let kinds: Vec<VertexKind> = self.vertices.iter().map(|v| v.kind).collect();
        let w = Web::from_ports(self.boundary.clone(), kinds, &pairs, self.circles)?;
        // declared direction must agree with the vertex kinds
        for ((p, _), id) in pairs.iter().zip(&edge_ids) {
            if !w.is_tail(*p) {
                return Err(bad(format!(
                    "edge {id:?} is oriented against its endpoints"
                )));
            }
        }
        Ok(w)
    }

    pub fn from_web(w: &Web) -> Self {
        let b = w.boundary_len();
        let vid = |v: usize| format!("v{v}");
        let mut edges = Vec::new();
        let mut edge_of_port = vec![usize::MAX; w.port_count()];
        for p in 0..w.port_count() {
            let q = w.partner(p);
            if !w.is_tail(p) {
                continue;
            }
            let end = |x: usize| match w.owner(x) {
                PortOwner::Boundary(i) => EndpointJson::Boundary(i),
                PortOwner::Vertex { vertex, .. } => EndpointJson::Vertex(vid(vertex)),
            };
            edge_of_port[p] = edges.len();
            edge_of_port[q] = edges.len();
            edges.push(EdgeJson {
                id: Some(format!("e{}", edges.len())),
                from: end(p),
                to: end(q),
            });
        }
        let mut rotation = BTreeMap::new();
        let vertices = (0..w.vertex_count())
            .map(|v| {
                let rot = (0..3)
                    .map(|j| format!("e{}", edge_of_port[b + 3 * v + j]))
                    .collect();
                rotation.insert(vid(v), rot);
                VertexJson {
                    id: vid(v),
                    kind: w.kinds()[v],
                }
            })
            .collect();
        WebJson {
            boundary: w.boundary().to_vec(),
            vertices,
            edges,
            rotation,
            circles: w.circle_count(),
        }
    }
}

impl Web {
    pub fn from_json(text: &str) -> Result<Web, Error> {
        let j: WebJson = serde_json::from_str(text)?;
        j.to_web()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&WebJson::from_web(self)).expect("web JSON serializes")
    }
}
