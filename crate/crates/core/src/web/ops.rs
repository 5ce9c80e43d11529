//! Diagrammatic composition of single webs (no reduction).
//!
//! Each operation glues a small piece onto an arc of the boundary. When two
//! disks are glued along an arc their boundary orders run opposite ways, so
//! a piece's glued points are matched in reverse.

use super::builder::Builder;
use super::{Sign, VertexKind, Web};
use crate::error::Error;

fn sig_string(s: &[Sign]) -> String {
    s.iter()
        .map(|x| if *x == Sign::In { '+' } else { '-' })
        .collect()
}

fn check_pair(w: &Web, i: usize) -> Result<(), Error> {
    if i + 1 >= w.boundary_len() {
        return Err(Error::InvalidInput(format!(
            "position {i} needs points {i} and {} but the boundary has {}",
            i + 1,
            w.boundary_len()
        )));
    }
    Ok(())
}

/// Two trivalent vertices joined by an edge, four boundary points. The
/// boundary reads bottom-left, bottom-right, top-right, top-left; the left
/// vertex has kind `left`.
fn h_piece(left: VertexKind) -> Web {
    let (lsign, rsign) = match left {
        VertexKind::Source => (Sign::Out, Sign::In),
        VertexKind::Sink => (Sign::In, Sign::Out),
    };
    let mut partner = vec![0u32; 10];
    for (a, b) in [(4usize, 8usize), (5, 3), (6, 0), (7, 2), (9, 1)] {
        partner[a] = b as u32;
        partner[b] = a as u32;
    }
    Web::from_raw(
        vec![lsign, rsign, rsign, lsign],
        vec![left, left.flip()],
        partner,
        0,
    )
}

impl Web {
    /// Disjoint union, `other` placed to the right (after) of `self`.
    pub fn tensor(&self, other: &Web) -> Web {
        let mut bld = Builder::new();
        let mut order = bld.place(self, false);
        order.extend(bld.place(other, false));
        bld.finish(&order)
    }

    /// Glues `upper` on top of `lower` along `width` points.
    ///
    /// The last `width` points of `lower` (its top, read right to left) meet
    /// the first `width` points of `upper` (its bottom, left to right). The
    /// result lists the rest of `lower` then the rest of `upper`.
    pub fn stack(upper: &Web, lower: &Web, width: usize) -> Result<Web, Error> {
        let (bu, bl) = (upper.boundary_len(), lower.boundary_len());
        if width > bu || width > bl {
            return Err(Error::SignatureMismatch(format!(
                "cannot glue {width} points between boundaries of size {bl} and {bu}"
            )));
        }
        let top: Vec<Sign> = (0..width).map(|j| lower.boundary()[bl - 1 - j]).collect();
        let bottom = &upper.boundary()[..width];
        if top.iter().zip(bottom).any(|(a, b)| a == b) {
            return Err(Error::SignatureMismatch(format!(
                "top of lower web reads {} but bottom of upper web reads {}",
                sig_string(&top),
                sig_string(bottom)
            )));
        }
        let mut bld = Builder::new();
        let lo = bld.place(lower, false);
        let up = bld.place(upper, false);
        for j in 0..width {
            bld.glue(lo[bl - 1 - j], up[j]);
        }
        let order: Vec<usize> = lo[..bl - width]
            .iter()
            .chain(&up[width..])
            .copied()
            .collect();
        Ok(bld.finish(&order))
    }

    /// Joins boundary points `i` and `i+1` (opposite signs) by a turnback.
    pub fn cap(&self, i: usize) -> Result<Web, Error> {
        check_pair(self, i)?;
        let s = self.boundary();
        if s[i] == s[i + 1] {
            return Err(Error::SignatureMismatch(format!(
                "cap at {i} needs opposite signs, found {}",
                sig_string(&s[i..i + 2])
            )));
        }
        let mut bld = Builder::new();
        let w = bld.place(self, false);
        let arc = bld.place(&Web::identity(&[s[i]]), false);
        bld.glue(w[i], arc[1]);
        bld.glue(w[i + 1], arc[0]);
        let order: Vec<usize> = w[..i].iter().chain(&w[i + 2..]).copied().collect();
        Ok(bld.finish(&order))
    }

    /// Merges boundary points `i` and `i+1` (equal signs) at a new vertex;
    /// the merged point carries the opposite sign.
    pub fn attach_y(&self, i: usize) -> Result<Web, Error> {
        check_pair(self, i)?;
        let s = self.boundary();
        if s[i] != s[i + 1] {
            return Err(Error::SignatureMismatch(format!(
                "Y at {i} needs equal signs, found {}",
                sig_string(&s[i..i + 2])
            )));
        }
        let kind = if s[i] == Sign::Out {
            VertexKind::Sink
        } else {
            VertexKind::Source
        };
        let mut bld = Builder::new();
        let w = bld.place(self, false);
        let y = bld.place(&Web::y_vertex(kind), false);
        bld.glue(w[i + 1], y[0]);
        bld.glue(w[i], y[1]);
        let order: Vec<usize> = w[..i]
            .iter()
            .chain(std::iter::once(&y[2]))
            .chain(&w[i + 2..])
            .copied()
            .collect();
        Ok(bld.finish(&order))
    }

    /// Splits boundary point `i` into two points of the opposite sign.
    pub fn split_y(&self, i: usize) -> Result<Web, Error> {
        if i >= self.boundary_len() {
            return Err(Error::InvalidInput(format!("no boundary point {i}")));
        }
        let kind = if self.boundary()[i] == Sign::In {
            VertexKind::Source
        } else {
            VertexKind::Sink
        };
        let mut bld = Builder::new();
        let w = bld.place(self, false);
        let y = bld.place(&Web::y_vertex(kind), false);
        bld.glue(w[i], y[0]);
        let order: Vec<usize> = w[..i]
            .iter()
            .chain(&y[1..])
            .chain(&w[i + 1..])
            .copied()
            .collect();
        Ok(bld.finish(&order))
    }

    /// Attaches an H across points `i` and `i+1` (opposite signs), which
    /// swaps their signs.
    pub fn attach_h(&self, i: usize) -> Result<Web, Error> {
        check_pair(self, i)?;
        let s = self.boundary();
        if s[i] == s[i + 1] {
            return Err(Error::SignatureMismatch(format!(
                "H at {i} needs opposite signs, found {}",
                sig_string(&s[i..i + 2])
            )));
        }
        let left = if s[i] == Sign::In {
            VertexKind::Source
        } else {
            VertexKind::Sink
        };
        let mut bld = Builder::new();
        let w = bld.place(self, false);
        let h = bld.place(&h_piece(left), false);
        bld.glue(w[i + 1], h[2]);
        bld.glue(w[i], h[3]);
        let order: Vec<usize> = w[..i]
            .iter()
            .chain(&h[..2])
            .chain(&w[i + 2..])
            .copied()
            .collect();
        Ok(bld.finish(&order))
    }

    /// Inserts a turnback as new points `i`, `i+1` with signs `s`, `-s`.
    pub fn insert_arc(&self, i: usize, s: Sign) -> Result<Web, Error> {
        if i > self.boundary_len() {
            return Err(Error::InvalidInput(format!("no insertion position {i}")));
        }
        let mut bld = Builder::new();
        let w = bld.place(self, false);
        let arc = bld.place(&Web::identity(&[s]), false);
        let order: Vec<usize> = w[..i].iter().chain(&arc).chain(&w[i..]).copied().collect();
        Ok(bld.finish(&order))
    }

    /// Moves the basepoint: new point `j` is old point `(j + k) mod b`.
    pub fn rotate(&self, k: usize) -> Web {
        let b = self.boundary_len();
        if b == 0 {
            return self.clone();
        }
        let mut bld = Builder::new();
        let w = bld.place(self, false);
        let order: Vec<usize> = (0..b).map(|j| w[(j + k) % b]).collect();
        bld.finish(&order)
    }

    /// Closes `self` against the orientation-reversed mirror of `other`.
    pub fn pair(&self, other: &Web) -> Result<Web, Error> {
        if self.boundary() != other.boundary() {
            return Err(Error::SignatureMismatch(format!(
                "cannot pair {} with {}",
                sig_string(self.boundary()),
                sig_string(other.boundary())
            )));
        }
        let mut bld = Builder::new();
        let a = bld.place(self, false);
        let b = bld.place(other, true);
        for (x, y) in a.into_iter().zip(b) {
            bld.glue(x, y);
        }
        Ok(bld.finish(&[]))
    }

    /// Joins the top of a `2N`-point web to its bottom: the trace closure.
    pub fn closure(&self) -> Result<Web, Error> {
        let b = self.boundary_len();
        if !b.is_multiple_of(2) {
            return Err(Error::InvalidInput("closure needs an even boundary".into()));
        }
        let mut w = self.clone();
        for j in (0..b / 2).rev() {
            w = w.cap(j)?;
        }
        Ok(w)
    }
}
