//! Incremental double description over the integers.
//!
//! Constraints are coefficient rows `a` read as `a . x >= 0`. Starting from the
//! simplicial cone cut out by a row basis, the remaining constraints are added
//! one at a time; a new ray is produced for every adjacent pair straddling the
//! new hyperplane. Adjacency uses the algebraic test: the constraints tight at
//! both rays must have rank `dim - 2`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{dot, dual_basis, independent_rows, make_primitive, rank};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn empty(rows: usize) -> Self {
        RowSet(vec![0; rows.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &RowSet) -> RowSet {
        RowSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, bits)| {
            (0..64).filter(move |b| bits & (1u64 << b) != 0).map(move |b| w * 64 + b)
        })
    }
}

struct Ray {
    v: Vec<BigInt>,
    tight: RowSet,
}

/// Extreme rays of `{x : a . x >= 0 for every row a}`.
///
/// Rays are primitive integer vectors, returned sorted lexicographically. The
/// cone must be pointed (the rows must span the whole space); a cone with
/// empty interior is fine and may even be `{0}`, in which case no rays are
/// returned.
pub fn extreme_rays(constraints: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let first = constraints.first().ok_or(Error::NoConstraints)?;
    let dim = first.len();
    if dim == 0 {
        return Err(Error::InvalidArgument("zero-dimensional constraints".into()));
    }
    if let Some(bad) = constraints.iter().find(|c| c.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, got: bad.len() });
    }
    let r = rank(constraints);
    if r < dim {
        return Err(Error::NotPointed { rank: r, dim });
    }

    let m = constraints.len();
    let basis = independent_rows(constraints);
    let basis_rows: Vec<Vec<BigInt>> = basis.iter().map(|&i| constraints[i].clone()).collect();
    let mut rays: Vec<Ray> = dual_basis(&basis_rows)
        .into_iter()
        .enumerate()
        .map(|(j, v)| {
            let mut tight = RowSet::empty(m);
            for (k, &row) in basis.iter().enumerate() {
                if k != j {
                    tight.insert(row);
                }
            }
            Ray { v, tight }
        })
        .collect();

    let mut adjacency_cache: HashMap<RowSet, bool> = HashMap::new();
    for (k, row) in constraints.iter().enumerate() {
        if basis.contains(&k) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.v)).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for (i, s) in values.iter().enumerate() {
            if s.is_positive() {
                positive.push(i);
            } else if s.is_negative() {
                negative.push(i);
            }
        }

        for &p in &positive {
            for &q in &negative {
                let common = rays[p].tight.intersect(&rays[q].tight);
                if dim >= 2 && common.len() < dim - 2 {
                    continue;
                }
                let adjacent = *adjacency_cache.entry(common.clone()).or_insert_with(|| {
                    let sub: Vec<&Vec<BigInt>> = common.iter().map(|i| &constraints[i]).collect();
                    rank(&sub) + 2 == dim
                });
                if !adjacent {
                    continue;
                }
                let sp = &values[p];
                let sq = &values[q];
                let mut v: Vec<BigInt> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(xq, xp)| sp * xq - sq * xp)
                    .collect();
                make_primitive(&mut v);
                let mut tight = common;
                tight.insert(k);
                next.push(Ray { v, tight });
            }
        }

        for (i, mut ray) in rays.into_iter().enumerate() {
            if values[i].is_zero() {
                ray.tight.insert(k);
                next.push(ray);
            } else if values[i].is_positive() {
                next.push(ray);
            }
        }
        rays = next;
    }

    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Rank of the constraints tight at `ray`. A nonzero ray of a pointed cone in
/// dimension `n` is extreme exactly when this equals `n - 1`.
pub fn tight_rank(constraints: &[Vec<BigInt>], ray: &[BigInt]) -> usize {
    let tight: Vec<&Vec<BigInt>> = constraints.iter().filter(|c| dot(c, ray).is_zero()).collect();
    rank(&tight)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(xs: &[&[i64]]) -> Vec<Vec<BigInt>> {
        xs.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn orthant() {
        let c = rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(extreme_rays(&c).unwrap(), rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
    }

    #[test]
    fn square_pyramid() {
        // cone over the square [-1,1]^2 at height 1
        let c = rows(&[&[1, 1, 0], &[1, -1, 0], &[1, 0, 1], &[1, 0, -1]]);
        let rays = extreme_rays(&c).unwrap();
        assert_eq!(
            rays,
            rows(&[&[1, -1, -1], &[1, -1, 1], &[1, 1, -1], &[1, 1, 1]])
        );
    }

    #[test]
    fn redundant_and_degenerate_constraints() {
        let c = rows(&[&[1, 0], &[0, 1], &[1, 1], &[2, 0], &[0, 0]]);
        assert_eq!(extreme_rays(&c).unwrap(), rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn flat_cone() {
        // x >= 0, -x >= 0, y >= 0: a single ray
        let c = rows(&[&[1, 0], &[-1, 0], &[0, 1]]);
        assert_eq!(extreme_rays(&c).unwrap(), rows(&[&[0, 1]]));
        // only the origin
        let c = rows(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        assert!(extreme_rays(&c).unwrap().is_empty());
    }

    #[test]
    fn one_dimensional() {
        assert_eq!(extreme_rays(&rows(&[&[3]])).unwrap(), rows(&[&[1]]));
        assert_eq!(extreme_rays(&rows(&[&[-2]])).unwrap(), rows(&[&[-1]]));
        assert!(extreme_rays(&rows(&[&[1], &[-1]])).unwrap().is_empty());
    }

    #[test]
    fn errors() {
        assert_eq!(extreme_rays(&[]), Err(Error::NoConstraints));
        assert_eq!(
            extreme_rays(&rows(&[&[1, 0]])),
            Err(Error::NotPointed { rank: 1, dim: 2 })
        );
        assert_eq!(
            extreme_rays(&rows(&[&[1, 0], &[1]])),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        );
    }

    #[test]
    fn extremality_ranks() {
        let c = rows(&[&[1, 1, 0], &[1, -1, 0], &[1, 0, 1], &[1, 0, -1]]);
        for r in extreme_rays(&c).unwrap() {
            assert_eq!(tight_rank(&c, &r), 2);
        }
        let interior: Vec<BigInt> = [1, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(tight_rank(&c, &interior), 0);
    }
}
