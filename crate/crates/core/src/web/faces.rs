//! Face tracing and connected components.

use super::Web;

/// Internal faces, each as its cyclic list of darts.
///
/// Walking a face: from dart `p` cross the edge to `partner(p)` and turn to
/// the next port counterclockwise there. An orbit that reaches a boundary
/// point touches the disk boundary and is not internal.
pub(crate) fn internal_faces(w: &Web) -> Vec<Vec<usize>> {
    let b = w.boundary_len();
    let n = w.port_count();
    let mut visited = vec![false; n];
    let mut faces = Vec::new();
    for start in b..n {
        if visited[start] {
            continue;
        }
        let mut face = vec![start];
        visited[start] = true;
        let mut p = start;
        let closed = loop {
            let q = w.partner(p);
            if q < b {
                break false;
            }
            p = w.rotate_port(q);
            if p == start {
                break true;
            }
            if visited[p] {
                break false;
            }
            visited[p] = true;
            face.push(p);
        };
        if closed {
            faces.push(face);
        }
    }
    faces
}

/// Component id for every vertex. When the web has boundary points,
/// component 0 is everything reachable from them.
fn vertex_components(w: &Web) -> (Vec<usize>, usize) {
    let b = w.boundary_len();
    let nv = w.vertex_count();
    let mut comp = vec![usize::MAX; nv];
    let mut count = 0;
    let mut stack = Vec::new();
    // boundary-connected vertices all share component 0
    let seed = |comp: &mut Vec<usize>, stack: &mut Vec<usize>, v: usize, c: usize| {
        if comp[v] == usize::MAX {
            comp[v] = c;
            stack.push(v);
        }
    };
    if b > 0 {
        for i in 0..b {
            let q = w.partner(i);
            if q >= b {
                seed(&mut comp, &mut stack, (q - b) / 3, 0);
            }
        }
        count = 1;
        flood(w, &mut comp, &mut stack, 0);
    }
    for v in 0..nv {
        if comp[v] == usize::MAX {
            seed(&mut comp, &mut stack, v, count);
            flood(w, &mut comp, &mut stack, count);
            count += 1;
        }
    }
    (comp, count)
}

fn flood(w: &Web, comp: &mut [usize], stack: &mut Vec<usize>, c: usize) {
    let b = w.boundary_len();
    while let Some(v) = stack.pop() {
        for s in 0..3 {
            let q = w.partner(w.vertex_port(v, s));
            if q >= b {
                let u = (q - b) / 3;
                if comp[u] == usize::MAX {
                    comp[u] = c;
                    stack.push(u);
                }
            }
        }
    }
}

/// Restricts `w` to the vertices selected by `keep`, with boundary
/// `keep_boundary`. Edges must not leave the selection.
fn restrict(w: &Web, keep: &[bool], keep_boundary: bool, circles: u32) -> Web {
    let b = w.boundary_len();
    let nb = if keep_boundary { b } else { 0 };
    let mut new_vertex = vec![usize::MAX; w.vertex_count()];
    let mut kinds = Vec::new();
    for (v, &k) in keep.iter().enumerate() {
        if k {
            new_vertex[v] = kinds.len();
            kinds.push(w.kinds()[v]);
        }
    }
    let map = |p: usize| -> usize {
        if p < b {
            p
        } else {
            nb + 3 * new_vertex[(p - b) / 3] + (p - b) % 3
        }
    };
    let mut partner = vec![0u32; nb + 3 * kinds.len()];
    for p in 0..w.port_count() {
        let keep_p = if p < b {
            keep_boundary
        } else {
            keep[(p - b) / 3]
        };
        if keep_p {
            partner[map(p)] = map(w.partner(p)) as u32;
        }
    }
    let boundary = if keep_boundary {
        w.boundary().to_vec()
    } else {
        Vec::new()
    };
    Web::from_raw(boundary, kinds, partner, circles)
}

/// Splits `w` into its boundary-connected part (carrying no circles) and
/// its closed connected components. Returns the circle count separately.
pub(crate) fn split_components(w: &Web) -> (Web, Vec<Web>, u32) {
    let (comp, count) = vertex_components(w);
    let b = w.boundary_len();
    let first_closed = if b > 0 { 1 } else { 0 };
    let open_keep: Vec<bool> = comp.iter().map(|&c| b > 0 && c == 0).collect();
    let open = restrict(w, &open_keep, true, 0);
    let closed = (first_closed..count)
        .map(|c| {
            let keep: Vec<bool> = comp.iter().map(|&x| x == c).collect();
            restrict(w, &keep, false, 0)
        })
        .collect();
    (open, closed, w.circle_count())
}

/// Closed connected components (vertex sets not reachable from the
/// boundary), as separate webs.
pub(crate) fn closed_components(w: &Web) -> Vec<Web> {
    split_components(w).1
}
