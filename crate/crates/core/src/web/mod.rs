//! Planar A2 webs.
//!
//! A web lives in a disk. Its boundary points are listed counterclockwise and
//! every internal vertex is trivalent: a sink (three incoming edges) or a
//! source (three outgoing edges). The combinatorial map is stored as a set of
//! *ports*: boundary point `i` owns port `i`, and internal vertex `v` owns the
//! three ports `b + 3v + {0,1,2}` in counterclockwise order. Each port is
//! paired with exactly one other port; a pair is an edge.
//!
//! Closed loops without vertices are kept as a bare count in `circles`.

mod basis;
mod builder;
mod canon;
mod faces;
mod json;
mod ops;
mod reduce;
mod sum;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use basis::{invariant_dimension, non_elliptic_basis};
pub(crate) use builder::Builder;
pub use canon::canonicalize;
pub use json::{EndpointJson, WebJson};
pub use reduce::{evaluate_closed, evaluate_closed_with, reduce, reduce_with, ReductionOrder};
pub use sum::{attach_y, cap, inner_product, stack, tensor, WebSum};

use crate::error::Error;

/// Orientation of the edge at a boundary point.
///
/// `In` means the edge points into the disk there; `Out` means it leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    In,
    Out,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::In => Sign::Out,
            Sign::Out => Sign::In,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Sink,
    Source,
}

impl VertexKind {
    pub fn flip(self) -> VertexKind {
        match self {
            VertexKind::Sink => VertexKind::Source,
            VertexKind::Source => VertexKind::Sink,
        }
    }
}

/// Where a port lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PortOwner {
    Boundary(usize),
    Vertex { vertex: usize, slot: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Web {
    boundary: Vec<Sign>,
    kinds: Vec<VertexKind>,
    partner: Vec<u32>,
    circles: u32,
}

impl Web {
    /// The empty web on the empty boundary.
    pub fn empty() -> Self {
        Self::from_raw(Vec::new(), Vec::new(), Vec::new(), 0)
    }

    /// `n` disjoint vertex-free circles.
    pub fn circles(n: u32) -> Self {
        Self::from_raw(Vec::new(), Vec::new(), Vec::new(), n)
    }

    pub(crate) fn from_raw(
        boundary: Vec<Sign>,
        kinds: Vec<VertexKind>,
        partner: Vec<u32>,
        circles: u32,
    ) -> Self {
        debug_assert_eq!(partner.len(), boundary.len() + 3 * kinds.len());
        Self {
            boundary,
            kinds,
            partner,
            circles,
        }
    }

    /// Builds a web from explicit port pairings and checks every invariant.
    pub fn from_ports(
        boundary: Vec<Sign>,
        kinds: Vec<VertexKind>,
        edges: &[(usize, usize)],
        circles: u32,
    ) -> Result<Self, Error> {
        let n_ports = boundary.len() + 3 * kinds.len();
        let mut partner = vec![u32::MAX; n_ports];
        for &(a, b) in edges {
            if a >= n_ports || b >= n_ports || a == b {
                return Err(Error::InvalidInput(format!("bad edge ({a}, {b})")));
            }
            if partner[a] != u32::MAX || partner[b] != u32::MAX {
                return Err(Error::InvalidInput(format!(
                    "port reused by edge ({a}, {b})"
                )));
            }
            partner[a] = b as u32;
            partner[b] = a as u32;
        }
        let w = Self::from_raw(boundary, kinds, partner, circles);
        w.validate()?;
        Ok(w)
    }

    /// Parallel strands from `bottom` (left to right) to the top edge.
    ///
    /// Boundary order is the bottom points followed by the top points read
    /// right to left, so bottom point `j` meets top position `2N-1-j`.
    pub fn identity(bottom: &[Sign]) -> Self {
        let n = bottom.len();
        let mut boundary = bottom.to_vec();
        boundary.extend(bottom.iter().rev().map(|s| s.flip()));
        let mut partner = vec![0u32; 2 * n];
        for j in 0..n {
            partner[j] = (2 * n - 1 - j) as u32;
            partner[2 * n - 1 - j] = j as u32;
        }
        Self::from_raw(boundary, Vec::new(), partner, 0)
    }

    /// A single vertex joined to three boundary points.
    pub fn y_vertex(kind: VertexKind) -> Self {
        let sign = match kind {
            VertexKind::Sink => Sign::In,
            VertexKind::Source => Sign::Out,
        };
        Self::from_raw(vec![sign; 3], vec![kind], vec![3, 4, 5, 0, 1, 2], 0)
    }

    pub fn boundary(&self) -> &[Sign] {
        &self.boundary
    }

    pub fn kinds(&self) -> &[VertexKind] {
        &self.kinds
    }

    pub fn boundary_len(&self) -> usize {
        self.boundary.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn edge_count(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn circle_count(&self) -> u32 {
        self.circles
    }

    pub fn is_closed(&self) -> bool {
        self.boundary.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.boundary.is_empty() && self.kinds.is_empty() && self.circles == 0
    }

    pub fn port_count(&self) -> usize {
        self.partner.len()
    }

    pub fn partner(&self, port: usize) -> usize {
        self.partner[port] as usize
    }

    pub fn owner(&self, port: usize) -> PortOwner {
        let b = self.boundary.len();
        if port < b {
            PortOwner::Boundary(port)
        } else {
            PortOwner::Vertex {
                vertex: (port - b) / 3,
                slot: (port - b) % 3,
            }
        }
    }

    pub fn vertex_port(&self, vertex: usize, slot: usize) -> usize {
        self.boundary.len() + 3 * vertex + slot
    }

    /// Next port counterclockwise around the same vertex.
    pub(crate) fn rotate_port(&self, port: usize) -> usize {
        let b = self.boundary.len();
        debug_assert!(port >= b);
        let base = port - (port - b) % 3;
        base + (port - base + 1) % 3
    }

    /// Whether the edge at `port` is oriented away from it.
    pub fn is_tail(&self, port: usize) -> bool {
        match self.owner(port) {
            PortOwner::Boundary(i) => self.boundary[i] == Sign::In,
            PortOwner::Vertex { vertex, .. } => self.kinds[vertex] == VertexKind::Source,
        }
    }

    /// Checks pairing, orientation and planarity.
    ///
    /// Planarity is checked per connected component with the disk boundary
    /// drawn as a cycle through the boundary points: every component of that
    /// augmented map must satisfy `V - E + F = 2`.
    pub fn validate(&self) -> Result<(), Error> {
        let n = self.partner.len();
        for p in 0..n {
            let q = self.partner[p] as usize;
            if q >= n || q == p || self.partner[q] as usize != p {
                return Err(Error::InvalidInput(format!(
                    "port {p} is not paired consistently"
                )));
            }
            if self.is_tail(p) == self.is_tail(q) {
                return Err(Error::InvalidInput(format!(
                    "edge ({p}, {q}) does not run from a tail to a head"
                )));
            }
        }
        self.check_planar()
    }

    fn check_planar(&self) -> Result<(), Error> {
        let b = self.boundary.len();
        let nv = self.kinds.len();
        // Augmented darts: all ports, plus for every boundary point a dart
        // towards the next point (n_i) and one towards the previous (p_i).
        let ports = self.partner.len();
        let next_dart = |i: usize| ports + 2 * i;
        let prev_dart = |i: usize| ports + 2 * i + 1;
        let total = ports + if b > 0 { 2 * b } else { 0 };
        let mut alpha = vec![0usize; total];
        let mut sigma = vec![0usize; total];
        for p in 0..ports {
            alpha[p] = self.partner[p] as usize;
        }
        for p in b..ports {
            sigma[p] = self.rotate_port(p);
        }
        if b > 0 {
            for i in 0..b {
                let j = (i + 1) % b;
                alpha[next_dart(i)] = prev_dart(j);
                alpha[prev_dart(j)] = next_dart(i);
                // Counterclockwise at a boundary point: next arc, interior, previous arc.
                sigma[next_dart(i)] = i;
                sigma[i] = prev_dart(i);
                sigma[prev_dart(i)] = next_dart(i);
            }
        }
        // node of each dart
        let node_of = |d: usize| -> usize {
            if d < b {
                d
            } else if d < ports {
                b + (d - b) / 3
            } else {
                (d - ports) / 2
            }
        };
        let n_nodes = b + nv;
        let mut comp = vec![usize::MAX; n_nodes];
        let mut n_comp = 0;
        for start in 0..n_nodes {
            if comp[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            comp[start] = n_comp;
            while let Some(x) = queue.pop_front() {
                let darts: Vec<usize> = if x < b {
                    let mut d = vec![x];
                    if b > 0 {
                        d.push(next_dart(x));
                        d.push(prev_dart(x));
                    }
                    d
                } else {
                    let base = b + 3 * (x - b);
                    vec![base, base + 1, base + 2]
                };
                for d in darts {
                    let y = node_of(alpha[d]);
                    if comp[y] == usize::MAX {
                        comp[y] = n_comp;
                        queue.push_back(y);
                    }
                }
            }
            n_comp += 1;
        }
        let mut verts = vec![0i64; n_comp];
        let mut darts = vec![0i64; n_comp];
        let mut faces = vec![0i64; n_comp];
        for x in 0..n_nodes {
            verts[comp[x]] += 1;
        }
        let mut seen = vec![false; total];
        for d in 0..total {
            darts[comp[node_of(d)]] += 1;
            if seen[d] {
                continue;
            }
            faces[comp[node_of(d)]] += 1;
            let mut e = d;
            while !seen[e] {
                seen[e] = true;
                e = sigma[alpha[e]];
            }
        }
        for c in 0..n_comp {
            let chi = verts[c] - darts[c] / 2 + faces[c];
            if chi != 2 {
                return Err(Error::NotPlanar(format!(
                    "component {c} has Euler characteristic {chi}"
                )));
            }
        }
        Ok(())
    }

    /// No circles, no closed components, no internal face with at most four
    /// sides.
    pub fn is_non_elliptic(&self) -> bool {
        self.circles == 0
            && faces::internal_faces(self).iter().all(|f| f.len() > 4)
            && faces::closed_components(self).is_empty()
    }

    /// Internal faces (not touching the disk boundary), each as its list of
    /// darts.
    pub fn internal_faces(&self) -> Vec<Vec<usize>> {
        faces::internal_faces(self)
    }
}

impl fmt::Display for Web {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for s in &self.boundary {
            write!(f, "{}", if *s == Sign::In { '+' } else { '-' })?;
        }
        write!(f, "|")?;
        for k in &self.kinds {
            write!(f, "{}", if *k == VertexKind::Sink { 'k' } else { 'o' })?;
        }
        write!(f, "|")?;
        for (i, p) in self.partner.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        if self.circles > 0 {
            write!(f, "|c{}", self.circles)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn theta() -> Web {
        // sink 0 and source 1 joined by three edges; reversed rotation at
        // the source keeps it planar
        Web::from_ports(
            vec![],
            vec![VertexKind::Sink, VertexKind::Source],
            &[(0, 3), (1, 5), (2, 4)],
            0,
        )
        .unwrap()
    }

    #[test]
    fn theta_is_planar_only_with_opposite_rotations() {
        theta();
        let twisted = Web::from_ports(
            vec![],
            vec![VertexKind::Sink, VertexKind::Source],
            &[(0, 3), (1, 4), (2, 5)],
            0,
        );
        assert!(matches!(twisted, Err(Error::NotPlanar(_))));
    }

    #[test]
    fn orientation_is_checked() {
        let bad = Web::from_ports(vec![Sign::In, Sign::In], vec![], &[(0, 1)], 0);
        assert!(matches!(bad, Err(Error::InvalidInput(_))));
        Web::from_ports(vec![Sign::In, Sign::Out], vec![], &[(0, 1)], 0).unwrap();
    }

    #[test]
    fn identity_and_y_are_valid() {
        Web::identity(&[Sign::Out, Sign::Out, Sign::In])
            .validate()
            .unwrap();
        Web::y_vertex(VertexKind::Source).validate().unwrap();
        assert!(Web::identity(&[Sign::In, Sign::Out]).is_non_elliptic());
    }

    #[test]
    fn crossing_chords_are_rejected() {
        // chords 0-2 and 1-3 cross inside the disk
        let bad = Web::from_ports(
            vec![Sign::In, Sign::In, Sign::Out, Sign::Out],
            vec![],
            &[(0, 2), (1, 3)],
            0,
        );
        assert!(matches!(bad, Err(Error::NotPlanar(_))));
    }
}
