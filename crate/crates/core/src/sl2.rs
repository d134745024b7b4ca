//! Hilbert function, sl2 decomposition, Clebsch–Gordan rule and the strong
//! Lefschetz rank check for `A(n,d)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::{apply_f, monomial_basis, AlgebraParams, QuotientPolynomial};
use crate::error::{Error, Result};
use crate::linalg::rank_fraction_free;

/// Largest `d^n` accepted by [`lefschetz_check`].
pub const LEFSCHETZ_GUARD: u128 = 20_000;

/// `dims[j] = dim A(n,d)_j` for `j = 0..=n(d-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertVector {
    pub n: usize,
    pub d: u32,
    pub dims: Vec<u64>,
}

impl HilbertVector {
    pub fn socle_degree(&self) -> u32 {
        (self.dims.len() - 1) as u32
    }

    pub fn total(&self) -> u64 {
        self.dims.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.dims.iter().eq(self.dims.iter().rev())
    }
}

/// Multiplicity of each `V(m - 2j)` for `j = 0..=floor(m/2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Decomposition {
    pub socle: u32,
    pub mults: Vec<u64>,
}

impl Sl2Decomposition {
    /// `(highest weight, multiplicity)` pairs, highest weight first, zero
    /// multiplicities skipped.
    pub fn irreps(&self) -> Vec<(u32, u64)> {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(j, &a)| (self.socle - 2 * j as u32, a))
            .collect()
    }

    pub fn as_map(&self) -> BTreeMap<u32, u64> {
        self.irreps().into_iter().collect()
    }

    /// `sum a_j (m - 2j + 1)`.
    pub fn total_dimension(&self) -> u64 {
        self.mults
            .iter()
            .enumerate()
            .map(|(j, &a)| a * u64::from(self.socle - 2 * j as u32 + 1))
            .sum()
    }
}

/// Coefficients of `(1 + t + ... + t^(d-1))^n`.
pub fn hilbert(n: usize, d: u32) -> Result<HilbertVector> {
    AlgebraParams::new(n, d)?;
    let mut dims = vec![1u64];
    for _ in 0..n {
        let mut next = vec![0u64; dims.len() + d as usize - 1];
        for (i, &c) in dims.iter().enumerate() {
            for slot in &mut next[i..i + d as usize] {
                *slot = slot
                    .checked_add(c)
                    .ok_or_else(|| Error::Internal("Hilbert coefficient overflow".into()))?;
            }
        }
        dims = next;
    }
    Ok(HilbertVector { n, d, dims })
}

pub fn sl2_decompose(n: usize, d: u32) -> Result<Sl2Decomposition> {
    let h = hilbert(n, d)?;
    let m = h.socle_degree();
    let mults = (0..=(m / 2) as usize)
        .map(|j| {
            if j == 0 {
                h.dims[0]
            } else {
                h.dims[j] - h.dims[j - 1]
            }
        })
        .collect();
    Ok(Sl2Decomposition { socle: m, mults })
}

/// Highest weights in `V(m) ⊗ V(n)`: `m+n, m+n-2, ..., m-n`. Requires `m >= n`.
pub fn clebsch_gordan(m: u32, n: u32) -> Result<Vec<u32>> {
    if m < n {
        return Err(Error::Precondition(format!(
            "clebsch_gordan expects m >= n, got m = {m}, n = {n}"
        )));
    }
    Ok((0..=n).map(|k| m + n - 2 * k).collect())
}

/// Decomposes `V(w1) ⊗ V(w2) ⊗ ...` by repeated Clebsch–Gordan.
pub fn tensor_decompose(weights: &[u32]) -> BTreeMap<u32, u64> {
    let mut acc: BTreeMap<u32, u64> = BTreeMap::new();
    let Some((&first, rest)) = weights.split_first() else {
        acc.insert(0, 1);
        return acc;
    };
    acc.insert(first, 1);
    for &w in rest {
        let mut next = BTreeMap::new();
        for (&hw, &mult) in &acc {
            let (hi, lo) = if hw >= w { (hw, w) } else { (w, hw) };
            for out in clebsch_gordan(hi, lo).expect("ordered") {
                *next.entry(out).or_insert(0) += mult;
            }
        }
        acc = next;
    }
    acc
}

/// Rank of `F^(m-2j): A_j -> A_(m-j)` for one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRank {
    pub j: u32,
    pub rank: usize,
    pub expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LefschetzReport {
    pub n: usize,
    pub d: u32,
    pub degrees: Vec<DegreeRank>,
}

impl LefschetzReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(|r| r.rank == r.expected)
    }
}

/// Checks that every `F^(m-2j)` with `j <= m/2` is bijective, using exact
/// fraction-free rank over the monomial bases.
pub fn lefschetz_check(n: usize, d: u32) -> Result<LefschetzReport> {
    let params = AlgebraParams::new(n, d)?;
    let size = params.dimension();
    if size > LEFSCHETZ_GUARD {
        return Err(Error::SizeGuard {
            size: size as usize,
            limit: LEFSCHETZ_GUARD as usize,
        });
    }
    let m = params.socle_degree();
    let degrees = (0..=m / 2)
        .into_par_iter()
        .map(|j| degree_rank(&params, j, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(LefschetzReport { n, d, degrees })
}

fn degree_rank(params: &AlgebraParams, j: u32, m: u32) -> Result<DegreeRank> {
    let source = monomial_basis(params, j)?;
    let target = monomial_basis(params, m - j)?;
    // columns = source monomials, rows = target monomials
    let mut rows = vec![vec![BigInt::from(0); source.len()]; target.len()];
    for (col, mono) in source.iter().enumerate() {
        let mut p = QuotientPolynomial::monomial(mono.clone());
        for _ in 0..(m - 2 * j) {
            p = apply_f(&p, params);
        }
        for (row, t) in target.iter().enumerate() {
            let c = p.coeff(t);
            if !c.is_integer() {
                return Err(Error::Internal("non-integral power of F".into()));
            }
            rows[row][col] = c.to_integer();
        }
    }
    Ok(DegreeRank {
        j,
        rank: rank_fraction_free(&rows),
        expected: source.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert(3, 3).unwrap().dims, vec![1, 3, 6, 7, 6, 3, 1]);
        assert_eq!(hilbert(1, 5).unwrap().dims, vec![1; 5]);
        // (1+t+t^2+t^3)^3 by hand: 1 3 6 10 12 12 10 6 3 1
        assert_eq!(
            hilbert(3, 4).unwrap().dims,
            vec![1, 3, 6, 10, 12, 12, 10, 6, 3, 1]
        );
        assert!(hilbert(0, 3).is_err());
        assert!(hilbert(3, 1).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let s = sl2_decompose(3, 3).unwrap();
        assert_eq!(s.irreps(), vec![(6, 1), (4, 2), (2, 3), (0, 1)]);
        let s = sl2_decompose(1, 7).unwrap();
        assert_eq!(s.irreps(), vec![(6, 1)]);
        let s = sl2_decompose(2, 2).unwrap();
        assert_eq!(s.irreps(), vec![(2, 1), (0, 1)]);
    }

    #[test]
    fn cg_examples() {
        assert_eq!(clebsch_gordan(3, 2).unwrap(), vec![5, 3, 1]);
        assert_eq!(clebsch_gordan(7, 0).unwrap(), vec![7]);
        assert!(clebsch_gordan(1, 2).is_err());
        let t = tensor_decompose(&[2, 2, 2]);
        assert_eq!(t, BTreeMap::from([(6, 1), (4, 2), (2, 3), (0, 1)]));
    }

    #[test]
    fn invariants_on_grid() {
        for n in 1..=4usize {
            for d in 2..=8u32 {
                let h = hilbert(n, d).unwrap();
                assert!(h.is_symmetric());
                assert_eq!(u128::from(h.total()), u128::from(d).pow(n as u32));
                let s = sl2_decompose(n, d).unwrap();
                assert_eq!(s.mults[0], 1);
                assert_eq!(u128::from(s.total_dimension()), u128::from(d).pow(n as u32));
                assert_eq!(tensor_decompose(&vec![d - 1; n]), s.as_map());
            }
        }
        for m in 0..12 {
            for n in 0..=m {
                let dim: u32 = clebsch_gordan(m, n).unwrap().iter().map(|k| k + 1).sum();
                assert_eq!(dim, (m + 1) * (n + 1));
            }
        }
    }

    #[test]
    fn lefschetz_small() {
        let r = lefschetz_check(3, 3).unwrap();
        assert_eq!(r.degrees.len(), 4);
        assert!(r.passed());
        let r = lefschetz_check(1, 6).unwrap();
        assert!(r.passed());
        let r = lefschetz_check(3, 4).unwrap();
        let ranks: Vec<_> = r.degrees.iter().map(|x| x.rank).collect();
        assert_eq!(ranks, vec![1, 3, 6, 10, 12]);
        assert!(matches!(
            lefschetz_check(3, 30),
            Err(Error::SizeGuard { .. })
        ));
    }
}
