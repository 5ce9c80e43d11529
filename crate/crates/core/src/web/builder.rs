//! Gluing webs along boundary points.
//!
//! Every composition is expressed as: place some webs in the plane, glue
//! pairs of their boundary points (each glued point disappears and its two
//! edges fuse), then list the surviving boundary points in their new
//! counterclockwise order. Strands that close up through glued points become
//! circles.

use super::{Sign, VertexKind, Web};

const NONE: usize = usize::MAX;

#[derive(Default)]
pub(crate) struct Builder {
    sign: Vec<Option<Sign>>,
    kind: Vec<Option<VertexKind>>,
    first_port: Vec<usize>,
    port_node: Vec<usize>,
    partner: Vec<usize>,
    through: Vec<usize>,
    removed: Vec<bool>,
    circles: u32,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    fn add_node(&mut self, sign: Option<Sign>, kind: Option<VertexKind>) -> usize {
        let id = self.sign.len();
        let ports = if sign.is_some() { 1 } else { 3 };
        self.sign.push(sign);
        self.kind.push(kind);
        self.first_port.push(self.partner.len());
        self.removed.push(false);
        for _ in 0..ports {
            self.port_node.push(id);
            self.partner.push(NONE);
            self.through.push(NONE);
        }
        id
    }

    /// Places a copy of `w` and returns the node ids of its boundary points
    /// by position.
    ///
    /// A mirrored copy is reflected and has every orientation reversed, so
    /// its boundary reads clockwise; gluing position `i` of a web to
    /// position `i` of a mirrored web is then planar.
    pub fn place(&mut self, w: &Web, mirror: bool) -> Vec<usize> {
        self.place_full(w, mirror).0
    }

    /// Like [`Builder::place`], also returning the vertex node ids.
    pub fn place_full(&mut self, w: &Web, mirror: bool) -> (Vec<usize>, Vec<usize>) {
        let b = w.boundary_len();
        let bnodes: Vec<usize> = w
            .boundary()
            .iter()
            .map(|&s| self.add_node(Some(if mirror { s.flip() } else { s }), None))
            .collect();
        let vnodes: Vec<usize> = w
            .kinds()
            .iter()
            .map(|&k| self.add_node(None, Some(if mirror { k.flip() } else { k })))
            .collect();
        let map = |p: usize| -> usize {
            if p < b {
                self.first_port[bnodes[p]]
            } else {
                let slot = (p - b) % 3;
                let slot = if mirror { (3 - slot) % 3 } else { slot };
                self.first_port[vnodes[(p - b) / 3]] + slot
            }
        };
        let pairs: Vec<(usize, usize)> = (0..w.port_count())
            .map(|p| (map(p), map(w.partner(p))))
            .collect();
        for (p, q) in pairs {
            self.partner[p] = q;
        }
        self.circles += w.circle_count();
        (bnodes, vnodes)
    }

    pub fn port(&self, node: usize, slot: usize) -> usize {
        self.first_port[node] + slot
    }

    /// Deletes a vertex. Its ports must afterwards be joined in pairs with
    /// [`Builder::short`] or lead only to other deleted vertices.
    pub fn remove_vertex(&mut self, node: usize) {
        debug_assert!(self.sign[node].is_none());
        self.removed[node] = true;
    }

    /// Makes the strand arriving at port `a` leave again through port `b`;
    /// both ports belong to deleted vertices.
    pub fn short(&mut self, a: usize, b: usize) {
        debug_assert!(self.is_removed_port(a) && self.is_removed_port(b));
        self.through[a] = b;
        self.through[b] = a;
    }

    pub fn sign(&self, node: usize) -> Sign {
        self.sign[node].expect("boundary node")
    }

    /// Glues two boundary points of opposite sign.
    pub fn glue(&mut self, a: usize, b: usize) {
        debug_assert!(!self.removed[a] && !self.removed[b]);
        debug_assert_ne!(self.sign(a), self.sign(b));
        let (pa, pb) = (self.first_port[a], self.first_port[b]);
        self.removed[a] = true;
        self.removed[b] = true;
        self.through[pa] = pb;
        self.through[pb] = pa;
    }

    fn is_removed_port(&self, p: usize) -> bool {
        self.removed[self.port_node[p]]
    }

    /// Produces the glued web with boundary points in `order`.
    pub fn finish(mut self, order: &[usize]) -> Web {
        let n_nodes = self.sign.len();
        let mut new_index = vec![NONE; n_nodes];
        for (i, &node) in order.iter().enumerate() {
            debug_assert!(self.sign[node].is_some() && !self.removed[node]);
            new_index[node] = i;
        }
        let b = order.len();
        let mut kinds = Vec::new();
        for node in 0..n_nodes {
            if self.sign[node].is_none() && !self.removed[node] {
                new_index[node] = b + 3 * kinds.len();
                kinds.push(self.kind[node].unwrap());
            }
        }
        debug_assert!(
            (0..n_nodes).all(|n| self.removed[n] || self.sign[n].is_none() || new_index[n] != NONE)
        );
        let new_port = |this: &Self, p: usize| -> usize {
            let node = this.port_node[p];
            new_index[node] + (p - this.first_port[node])
        };
        let total = b + 3 * kinds.len();
        let mut partner = vec![0u32; total];
        let mut visited = vec![false; self.partner.len()];
        for p in 0..self.partner.len() {
            if self.is_removed_port(p) {
                continue;
            }
            let mut r = self.partner[p];
            while self.is_removed_port(r) {
                let t = self.through[r];
                visited[r] = true;
                visited[t] = true;
                r = self.partner[t];
            }
            partner[new_port(&self, p)] = new_port(&self, r) as u32;
        }
        for start in 0..self.partner.len() {
            if visited[start] || self.through[start] == NONE {
                continue;
            }
            let mut cur = start;
            loop {
                visited[cur] = true;
                let t = self.through[cur];
                visited[t] = true;
                let q = self.partner[t];
                if q == start {
                    break;
                }
                cur = q;
            }
            self.circles += 1;
        }
        let boundary = order.iter().map(|&n| self.sign[n].unwrap()).collect();
        Web::from_raw(boundary, kinds, partner, self.circles)
    }
}
