//! Canonical relabeling of internal vertices.
//!
//! Vertices reachable from the boundary are numbered breadth-first starting
//! from boundary point 0, each vertex rotated so that the port through which
//! it was first reached becomes slot 0. That labeling is forced by the
//! boundary, so it is already minimal. Closed components have no anchor;
//! each is encoded from every (start vertex, rotation) and the smallest
//! encoding wins. Components are then sorted by encoding.

use std::collections::VecDeque;

use super::faces::split_components;
use super::Web;

const UNSEEN: usize = usize::MAX;

struct Labeling {
    order: Vec<usize>,
    rot: Vec<usize>,
    new_id: Vec<usize>,
}

impl Labeling {
    fn new(nv: usize) -> Self {
        Self {
            order: Vec::new(),
            rot: vec![0; nv],
            new_id: vec![UNSEEN; nv],
        }
    }

    fn visit(&mut self, v: usize, slot: usize, queue: &mut VecDeque<usize>) {
        if self.new_id[v] == UNSEEN {
            self.new_id[v] = self.order.len();
            self.rot[v] = slot;
            self.order.push(v);
            queue.push_back(v);
        }
    }

    fn bfs(&mut self, w: &Web, queue: &mut VecDeque<usize>) {
        let b = w.boundary_len();
        while let Some(v) = queue.pop_front() {
            for s in 0..3 {
                let old = w.vertex_port(v, (self.rot[v] + s) % 3);
                let q = w.partner(old);
                if q >= b {
                    self.visit((q - b) / 3, (q - b) % 3, queue);
                }
            }
        }
    }

    fn port(&self, w: &Web, p: usize, nb: usize) -> usize {
        let b = w.boundary_len();
        if p < b {
            p
        } else {
            let v = (p - b) / 3;
            nb + 3 * self.new_id[v] + ((p - b) % 3 + 3 - self.rot[v]) % 3
        }
    }
}

/// Encoding of a connected closed web when labeled from `start` at
/// rotation `rot`.
fn closed_encoding(w: &Web, start: usize, rot: usize) -> (Vec<u32>, Labeling) {
    let mut lab = Labeling::new(w.vertex_count());
    let mut queue = VecDeque::new();
    lab.visit(start, rot, &mut queue);
    lab.bfs(w, &mut queue);
    let mut code = Vec::with_capacity(4 * lab.order.len());
    for &v in &lab.order {
        code.push(w.kinds()[v] as u32);
        for s in 0..3 {
            let p = w.vertex_port(v, (lab.rot[v] + s) % 3);
            code.push(lab.port(w, w.partner(p), 0) as u32);
        }
    }
    (code, lab)
}

fn canonical_closed(w: &Web) -> Web {
    let mut best: Option<(Vec<u32>, Labeling)> = None;
    for start in 0..w.vertex_count() {
        for rot in 0..3 {
            let (code, lab) = closed_encoding(w, start, rot);
            if best.as_ref().is_none_or(|(c, _)| code < *c) {
                best = Some((code, lab));
            }
        }
    }
    let (_, lab) = best.expect("closed component has vertices");
    relabel(w, &lab)
}

fn relabel(w: &Web, lab: &Labeling) -> Web {
    let b = w.boundary_len();
    let kinds = lab.order.iter().map(|&v| w.kinds()[v]).collect();
    let mut partner = vec![0u32; w.port_count()];
    for p in 0..w.port_count() {
        partner[lab.port(w, p, b)] = lab.port(w, w.partner(p), b) as u32;
    }
    Web::from_raw(w.boundary().to_vec(), kinds, partner, w.circle_count())
}

/// Canonical representative of the isomorphism class of `w` (boundary
/// fixed pointwise).
pub fn canonicalize(w: &Web) -> Web {
    let (open, closed, circles) = split_components(w);
    let mut lab = Labeling::new(open.vertex_count());
    let mut queue = VecDeque::new();
    let b = open.boundary_len();
    for i in 0..b {
        let q = open.partner(i);
        if q >= b {
            lab.visit((q - b) / 3, (q - b) % 3, &mut queue);
            lab.bfs(&open, &mut queue);
        }
    }
    let open = relabel(&open, &lab);
    let mut parts: Vec<Web> = closed.iter().map(canonical_closed).collect();
    parts.sort();
    let mut kinds = open.kinds().to_vec();
    let mut partner: Vec<u32> = (0..open.port_count())
        .map(|p| open.partner(p) as u32)
        .collect();
    for part in &parts {
        let offset = partner.len() as u32;
        kinds.extend_from_slice(part.kinds());
        partner.extend((0..part.port_count()).map(|p| part.partner(p) as u32 + offset));
    }
    Web::from_raw(open.boundary().to_vec(), kinds, partner, circles)
}
