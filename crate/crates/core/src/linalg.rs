//! Exact dense linear algebra over the integers and rationals.
//!
//! Rank uses fraction-free (Bareiss) elimination on integer matrices, so every
//! intermediate value stays an integer. Nullspaces come from reduced row
//! echelon form over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rank of an integer matrix by Bareiss elimination.
pub fn rank_fraction_free(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                // exact by Sylvester's identity
                let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Rref {
    pub rows: Vec<Vec<BigRational>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Nonzero rows only.
    pub fn basis_rows(&self) -> &[Vec<BigRational>] {
        &self.rows[..self.pivots.len()]
    }

    /// One nullspace vector per free column, with a 1 in that column.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut out = Vec::new();
        let mut pivot_iter = self.pivots.iter().peekable();
        for free in 0..self.ncols {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![BigRational::zero(); self.ncols];
            v[free] = BigRational::one();
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = -row[free].clone();
            }
            out.push(v);
        }
        out
    }
}

pub fn rref(mut m: Vec<Vec<BigRational>>, ncols: usize) -> Rref {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut().skip(col) {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !y.is_zero() {
                    *x = &*x - &factor * y;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    Rref {
        rows: m,
        pivots,
        ncols,
    }
}

pub fn to_rational(rows: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect()
}

/// Nullspace basis of an integer matrix with `ncols` columns.
pub fn nullspace_int(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigRational>> {
    rref(to_rational(rows), ncols).nullspace()
}

/// Clears denominators, divides out the content and makes the first nonzero
/// entry positive. The zero vector is returned unchanged.
pub fn normalize_vector(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return ints;
    }
    let flip = ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    for x in ints.iter_mut() {
        *x = &*x / &content;
        if flip {
            *x = -&*x;
        }
    }
    ints
}
