//! Non-elliptic webs on a fixed boundary.
//!
//! Every non-elliptic web with boundary has a turnback, a Y or an H at some
//! pair of cyclically adjacent boundary points. Running that backwards gives
//! a fixpoint generation: starting from the empty web, add arcs, split
//! points and attach H's until no new non-elliptic web appears on any of
//! the boundaries involved.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::canon::canonicalize;
use super::{Sign, Web};

fn rotate_sig(t: &[Sign], k: usize) -> Vec<Sign> {
    let b = t.len();
    (0..b).map(|j| t[(j + k) % b]).collect()
}

/// Boundaries that the webs on `t` can be built from, each paired with the
/// rotation that brings the relevant pair to positions (j, j+1).
fn predecessors(t: &[Sign]) -> Vec<Vec<Sign>> {
    let b = t.len();
    let mut out = Vec::new();
    if b < 2 {
        return out;
    }
    for i in 0..b {
        let (tr, j) = if i + 1 < b {
            (t.to_vec(), i)
        } else {
            (rotate_sig(t, b - 1), 0)
        };
        if tr[j] != tr[j + 1] {
            let mut u = tr[..j].to_vec();
            u.extend_from_slice(&tr[j + 2..]);
            out.push(u);
            let mut h = tr.clone();
            h[j] = h[j].flip();
            h[j + 1] = h[j + 1].flip();
            out.push(h);
        } else {
            let mut y = tr[..j].to_vec();
            y.push(tr[j].flip());
            y.extend_from_slice(&tr[j + 2..]);
            out.push(y);
        }
    }
    out
}

fn generate(t: &[Sign], sets: &BTreeMap<Vec<Sign>, BTreeSet<Web>>) -> Vec<Web> {
    let b = t.len();
    let mut out = Vec::new();
    if b < 2 {
        return out;
    }
    for i in 0..b {
        let (tr, j, back) = if i + 1 < b {
            (t.to_vec(), i, 0)
        } else {
            (rotate_sig(t, b - 1), 0, 1)
        };
        let mut push = |w: Web| {
            let w = canonicalize(&w.rotate(back));
            if w.is_non_elliptic() {
                out.push(w);
            }
        };
        if tr[j] != tr[j + 1] {
            let mut u = tr[..j].to_vec();
            u.extend_from_slice(&tr[j + 2..]);
            for w in &sets[&u] {
                push(w.insert_arc(j, tr[j]).expect("position in range"));
            }
            let mut h = tr.clone();
            h[j] = h[j].flip();
            h[j + 1] = h[j + 1].flip();
            for w in &sets[&h] {
                push(w.attach_h(j).expect("opposite signs"));
            }
        } else {
            let mut y = tr[..j].to_vec();
            y.push(tr[j].flip());
            y.extend_from_slice(&tr[j + 2..]);
            for w in &sets[&y] {
                push(w.split_y(j).expect("position in range"));
            }
        }
    }
    out
}

/// All non-elliptic webs with boundary `signature`, in canonical order.
pub fn non_elliptic_basis(signature: &[Sign]) -> Vec<Web> {
    let mut sigs = BTreeSet::new();
    let mut queue = VecDeque::from([signature.to_vec()]);
    while let Some(t) = queue.pop_front() {
        if sigs.insert(t.clone()) {
            queue.extend(predecessors(&t));
        }
    }
    let mut sets: BTreeMap<Vec<Sign>, BTreeSet<Web>> =
        sigs.iter().map(|s| (s.clone(), BTreeSet::new())).collect();
    if let Some(e) = sets.get_mut(&Vec::new()) {
        e.insert(Web::empty());
    }
    loop {
        let mut changed = false;
        for t in &sigs {
            let fresh = generate(t, &sets);
            let set = sets.get_mut(t).unwrap();
            for w in fresh {
                changed |= set.insert(w);
            }
        }
        if !changed {
            break;
        }
    }
    sets.remove(signature).unwrap().into_iter().collect()
}

/// Dimension of the invariant space of the tensor product read off the
/// boundary (`In` as the standard representation, `Out` as its dual),
/// computed from the Pieri rule on highest weights.
pub fn invariant_dimension(signature: &[Sign]) -> u64 {
    let mut mult: BTreeMap<(u32, u32), u64> = BTreeMap::from([((0, 0), 1)]);
    for s in signature {
        let mut next = BTreeMap::new();
        for (&(a, b), &m) in &mult {
            let mut add = |w: (u32, u32)| *next.entry(w).or_insert(0) += m;
            match s {
                Sign::In => {
                    add((a + 1, b));
                    if a > 0 {
                        add((a - 1, b + 1));
                    }
                    if b > 0 {
                        add((a, b - 1));
                    }
                }
                Sign::Out => {
                    add((a, b + 1));
                    if b > 0 {
                        add((a + 1, b - 1));
                    }
                    if a > 0 {
                        add((a - 1, b));
                    }
                }
            }
        }
        mult = next;
    }
    mult.get(&(0, 0)).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_signatures(n: usize) -> Vec<Vec<Sign>> {
        (0..1u32 << n)
            .map(|bits| {
                (0..n)
                    .map(|i| {
                        if bits >> i & 1 == 1 {
                            Sign::In
                        } else {
                            Sign::Out
                        }
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn pieri_values() {
        use Sign::*;
        assert_eq!(invariant_dimension(&[In, Out]), 1);
        assert_eq!(invariant_dimension(&[In, In, In]), 1);
        assert_eq!(invariant_dimension(&[In, In, Out, Out]), 2);
        assert_eq!(invariant_dimension(&[In, In]), 0);
    }

    #[test]
    fn basis_sizes_match_invariant_dimensions() {
        for n in 0..=6 {
            for sig in all_signatures(n) {
                let basis = non_elliptic_basis(&sig);
                assert_eq!(
                    basis.len() as u64,
                    invariant_dimension(&sig),
                    "signature {sig:?}"
                );
                for w in &basis {
                    w.validate().unwrap();
                    assert!(w.is_non_elliptic());
                }
            }
        }
    }
}
