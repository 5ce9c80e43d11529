//! Exact linear solving over the scalar rings.
//!
//! Forward elimination is fraction-free (Bareiss): every update is
//! `(p·a_ij − a_ik·a_kj) / p_prev`, and the division is exact, so entries
//! stay polynomial when the input is. Back substitution then divides by the
//! pivots.

use crate::cyclotomic::Scalar;
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Scalar>),
    /// The system has solutions but they form a family of this dimension.
    Underdetermined(usize),
    Inconsistent,
}

/// Row echelon form of `m` in place; returns the pivot columns.
fn bareiss(m: &mut [Vec<Scalar>], cols: usize) -> Result<Vec<usize>, Error> {
    let rows = m.len();
    let mut prev = Scalar::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..m[i].len() {
                let num = &(&m[r][c] * &m[i][j]) - &(&m[i][c] * &m[r][j]);
                m[i][j] = num
                    .checked_div(&prev)
                    .ok_or_else(|| Error::Internal("zero pivot in elimination".into()))?;
            }
            m[i][c] = Scalar::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

/// Solves `a x = b`.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> Result<Solution, Error> {
    let n = a.first().map_or(0, |r| r.len());
    if a.len() != b.len() || a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("ragged linear system".into()));
    }
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = bareiss(&mut m, n + 1)?;
    if pivots.last() == Some(&n) {
        return Ok(Solution::Inconsistent);
    }
    if pivots.len() < n {
        return Ok(Solution::Underdetermined(n - pivots.len()));
    }
    let mut x = vec![Scalar::zero(); n];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let mut acc = m[r][n].clone();
        for j in c + 1..n {
            acc = &acc - &(&m[r][j] * &x[j]);
        }
        x[c] = acc
            .checked_div(&m[r][c])
            .ok_or_else(|| Error::Internal("zero pivot in back substitution".into()))?;
    }
    Ok(Solution::Unique(x))
}

/// Rank of `a`.
pub fn rank(a: &[Vec<Scalar>]) -> Result<usize, Error> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut m = a.to_vec();
    Ok(bareiss(&mut m, cols)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Context;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    /// Plain Gauss–Jordan over the rationals.
    fn rational_solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<BigRational>> {
        let n = a.len();
        let mut m: Vec<Vec<BigRational>> = a
            .iter()
            .zip(b)
            .map(|(r, &x)| {
                r.iter()
                    .chain(std::iter::once(&x))
                    .map(|&v| BigRational::from_integer(BigInt::from(v)))
                    .collect()
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !m[i][c].is_zero())?;
            m.swap(c, p);
            let inv = BigRational::one() / m[c][c].clone();
            for j in 0..=n {
                m[c][j] = &m[c][j] * &inv;
            }
            for i in 0..n {
                if i != c && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in 0..=n {
                        let t = &f * &m[c][j];
                        m[i][j] -= t;
                    }
                }
            }
        }
        Some(m.into_iter().map(|r| r[n].clone()).collect())
    }

    fn to_scalars(a: &[Vec<i64>]) -> Vec<Vec<Scalar>> {
        a.iter()
            .map(|r| r.iter().map(|&x| Scalar::integer(x)).collect())
            .collect()
    }

    #[test]
    fn symbolic_system() {
        // [2] x + y = [3],  x - y = 0  =>  x = y = [3] / ([2] + 1)
        let g = Context::generic();
        let a = vec![vec![g.qint(2), g.one()], vec![g.one(), -g.one()]];
        let b = vec![g.qint(3), g.zero()];
        let Solution::Unique(x) = solve(&a, &b).unwrap() else {
            panic!()
        };
        let expected = g.qint(3).checked_div(&(&g.qint(2) + &g.one())).unwrap();
        assert_eq!(x, vec![expected.clone(), expected]);
    }

    #[test]
    fn degenerate_systems() {
        let a = to_scalars(&[vec![1, 2], vec![2, 4]]);
        let b = vec![Scalar::integer(1), Scalar::integer(2)];
        assert_eq!(solve(&a, &b).unwrap(), Solution::Underdetermined(1));
        let b = vec![Scalar::integer(1), Scalar::integer(3)];
        assert_eq!(solve(&a, &b).unwrap(), Solution::Inconsistent);
        assert_eq!(rank(&a).unwrap(), 1);
    }

    proptest! {
        #[test]
        fn matches_rational_gauss(
            a in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 3),
            b in prop::collection::vec(-5i64..=5, 3),
        ) {
            let sa = to_scalars(&a);
            let sb: Vec<Scalar> = b.iter().map(|&x| Scalar::integer(x)).collect();
            match (solve(&sa, &sb).unwrap(), rational_solve(&a, &b)) {
                (Solution::Unique(x), Some(y)) => {
                    for (xi, yi) in x.iter().zip(&y) {
                        let expect = Scalar::integer(yi.numer().clone())
                            .checked_div(&Scalar::integer(yi.denom().clone()))
                            .unwrap();
                        prop_assert_eq!(xi, &expect);
                    }
                }
                (Solution::Unique(_), None) => prop_assert!(false, "oracle found singular matrix"),
                (_, Some(_)) => prop_assert!(false, "solver missed a unique solution"),
                (_, None) => {}
            }
        }
    }
}
