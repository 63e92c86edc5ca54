//! Exact integer linear algebra used by the cone engine.
//!
//! Everything here works over `Z` with fraction-free elimination, which is
//! equivalent to elimination over `Q` but never leaves the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Non-negative gcd of all entries; zero for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for x in v {
        g = g.gcd(x);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides by the (positive) content, keeping the direction of `v`.
pub fn make_primitive(v: &mut [BigInt]) {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank of the matrix whose rows are `rows`, via Bareiss elimination.
pub fn rank<R: AsRef<[BigInt]>>(rows: &[R]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let cols = first.as_ref().len();
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.as_ref().to_vec()).collect();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        let pivot = pivot_row[col].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (&pivot * &*x - &factor * p) / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Greedily picks row indices forming a basis of the row space, in input order.
pub fn independent_rows<R: AsRef<[BigInt]>>(rows: &[R]) -> Vec<usize> {
    let mut picked: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        basis.push(r.as_ref().to_vec());
        if rank(&basis) == basis.len() {
            picked.push(i);
        } else {
            basis.pop();
        }
    }
    picked
}

/// For a square nonsingular integer matrix `b`, returns primitive integer
/// vectors `r_j` with `b r_j = c_j e_j` for some `c_j > 0`.
///
/// These are the extreme rays of the simplicial cone `{x : b x >= 0}`.
pub fn dual_basis(b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = b.len();
    // Gauss-Jordan on [b | I] over Q, kept fraction-free per row.
    let mut m: Vec<Vec<BigInt>> = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "dual_basis needs a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("dual_basis needs a nonsingular matrix");
        m.swap(col, p);
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let pivot_row = m[col].clone();
            let a = &pivot_row[col];
            let f = m[r][col].clone();
            for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                *x = a * &*x - &f * p;
            }
            make_primitive(&mut m[r]);
        }
    }
    // Row i now reads d_i x_i = (inverse row i) up to scale, so column j of the
    // inverse is (m[i][n + j] / d_i)_i.
    (0..n)
        .map(|j| {
            let denom_lcm = (0..n).fold(BigInt::one(), |acc, i| acc.lcm(&m[i][i]));
            let mut col: Vec<BigInt> = (0..n)
                .map(|i| &m[i][n + j] * (&denom_lcm / &m[i][i]))
                .collect();
            make_primitive(&mut col);
            // b col must be a nonnegative multiple of e_j
            let image: BigInt = dot(&b[j], &col);
            if image.is_negative() {
                for x in col.iter_mut() {
                    *x = -x.clone();
                }
            }
            col
        })
        .collect()
}
