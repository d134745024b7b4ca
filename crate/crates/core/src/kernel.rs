//! Explicit bases of the trivial, sign and standard components of
//! `Ker(E) ∩ A(3,d)_j`, each element certified by exact arithmetic.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{apply_e, monomial_basis, AlgebraParams, Monomial, QuotientPolynomial};
use crate::error::{check_range, Error, Result};
use crate::linalg::{normalize_vector, nullspace_int, rank_fraction_free, rref, to_rational, Rref};
use crate::multiplicity::{by_partitions, max_degree, Method, MultiplicityTriple};
use crate::partitions::{enumerate, Partition, PartitionClass};
use crate::s3::{apply_permutation, orbit_sum, signed_orbit, PermutationS3};

/// Largest `dim A_j` accepted by [`kernel_dim_bruteforce`].
pub const BRUTEFORCE_GUARD: usize = 5000;

/// Matrix of `E` in orbit coordinates: rows are partitions of `j-1`,
/// columns partitions of `j`, both descending lexicographic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientMatrix {
    pub d: u32,
    pub j: u32,
    pub class: PartitionClass,
    pub rows: Vec<Partition>,
    pub cols: Vec<Partition>,
    pub entries: Vec<Vec<BigInt>>,
}

impl CoefficientMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn rank(&self) -> usize {
        rank_fraction_free(&self.entries)
    }

    pub fn rref(&self) -> Rref {
        rref(to_rational(&self.entries), self.ncols())
    }

    /// Entries as machine integers, for display and comparison.
    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        self.entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| i64::try_from(x).expect("coefficient fits in i64"))
                    .collect()
            })
            .collect()
    }
}

fn check_domain(d: u32, j: u32) -> Result<()> {
    if d < 3 {
        return Err(Error::OutOfRange {
            what: "exponent d",
            value: i64::from(d),
            min: 3,
            max: i64::from(u32::MAX),
        });
    }
    check_range("degree j", i64::from(j), 0, i64::from(max_degree(d)))
}

fn orbit_image(lambda: Partition, d: u32, class: PartitionClass) -> Result<QuotientPolynomial> {
    let params = AlgebraParams::three(d)?;
    let expansion = match class {
        PartitionClass::Plain => orbit_sum(lambda, d)?.expansion,
        PartitionClass::Strict => signed_orbit(lambda, d)?.expansion,
        PartitionClass::TwoStrict => {
            return Err(Error::Precondition(
                "coefficient matrices use the plain or strict class".into(),
            ))
        }
    };
    Ok(apply_e(&expansion, &params))
}

fn build_unchecked(d: u32, j: u32, class: PartitionClass) -> Result<CoefficientMatrix> {
    if class == PartitionClass::TwoStrict {
        return Err(Error::Precondition(
            "coefficient matrices use the plain or strict class".into(),
        ));
    }
    let rows = enumerate(3, d - 1, i64::from(j) - 1, class)?;
    let cols = enumerate(3, d - 1, i64::from(j), class)?;
    let mut entries = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for (c, &lambda) in cols.iter().enumerate() {
        let image = orbit_image(lambda, d, class)?;
        for (r, mu) in rows.iter().enumerate() {
            let coeff = image.coeff(&Monomial::new(mu.parts().to_vec()));
            entries[r][c] = coeff.to_integer();
        }
    }
    Ok(CoefficientMatrix {
        d,
        j,
        class,
        rows,
        cols,
        entries,
    })
}

/// `C[μ][λ]` is the coefficient of `x^μ` in `E` applied to the (signed)
/// orbit sum of `λ`.
pub fn build_c(d: u32, j: u32, class: PartitionClass) -> Result<CoefficientMatrix> {
    check_domain(d, j)?;
    check_range("degree j", i64::from(j), 1, i64::from(max_degree(d)))?;
    build_unchecked(d, j, class)
}

/// Outcome of [`echelon_certify`]; every flag is expected to hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonReport {
    pub rank: usize,
    pub nrows: usize,
    /// `C[μ][λ] != 0` only if `λ = μ + e_k` for some `k`.
    pub sparsity: bool,
    /// No row of `C` vanishes.
    pub no_zero_row: bool,
    /// Within each block of rows sharing `μ1`, the leading nonzero columns
    /// strictly increase.
    pub block_staircase: bool,
}

impl EchelonReport {
    pub fn full_row_rank(&self) -> bool {
        self.rank == self.nrows
    }

    pub fn passed(&self) -> bool {
        self.full_row_rank() && self.sparsity && self.no_zero_row && self.block_staircase
    }
}

pub fn echelon_certify(c: &CoefficientMatrix) -> EchelonReport {
    let sparsity = c.rows.iter().enumerate().all(|(r, mu)| {
        c.cols.iter().enumerate().all(|(k, lambda)| {
            c.entries[r][k].is_zero() || (0..3).any(|slot| mu.bump(slot) == Some(*lambda))
        })
    });
    let leads: Vec<Option<usize>> = c
        .entries
        .iter()
        .map(|row| row.iter().position(|x| !x.is_zero()))
        .collect();
    let no_zero_row = leads.iter().all(Option::is_some);
    let block_staircase = no_zero_row
        && (1..c.rows.len())
            .all(|r| c.rows[r].first() != c.rows[r - 1].first() || leads[r] > leads[r - 1]);
    EchelonReport {
        rank: c.rank(),
        nrows: c.nrows(),
        sparsity,
        no_zero_row,
        block_staircase,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepType {
    Trivial,
    Sign,
    Standard,
}

impl RepType {
    pub const ALL: [RepType; 3] = [RepType::Trivial, RepType::Sign, RepType::Standard];

    pub fn name(self) -> &'static str {
        match self {
            RepType::Trivial => "trivial",
            RepType::Sign => "sign",
            RepType::Standard => "standard",
        }
    }
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RepType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(RepType::Trivial),
            "sign" => Ok(RepType::Sign),
            "standard" => Ok(RepType::Standard),
            other => Err(Error::Precondition(format!(
                "unknown representation '{other}', expected trivial, sign or standard"
            ))),
        }
    }
}

/// Highest-weight vector of one standard component. `P3 = -P1 - P2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardPair {
    pub p1: QuotientPolynomial,
    pub p2: QuotientPolynomial,
}

impl StandardPair {
    pub fn p3(&self) -> QuotientPolynomial {
        -&(&self.p1 + &self.p2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisElement {
    Single(QuotientPolynomial),
    Pair(StandardPair),
}

impl BasisElement {
    pub fn polynomials(&self) -> Vec<&QuotientPolynomial> {
        match self {
            BasisElement::Single(p) => vec![p],
            BasisElement::Pair(pair) => vec![&pair.p1, &pair.p2],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Certificate {
    pub in_kernel: bool,
    pub transforms_correctly: bool,
    pub linearly_independent: bool,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.in_kernel && self.transforms_correctly && self.linearly_independent
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport {
    pub d: u32,
    pub j: u32,
    pub rep: RepType,
    /// Expected size from partition counting.
    pub multiplicity: u64,
    pub elements: Vec<BasisElement>,
    pub certificates: Vec<Certificate>,
}

impl BasisReport {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Every certificate passes and the size matches the multiplicity.
    pub fn certified(&self) -> bool {
        self.elements.len() as u64 == self.multiplicity
            && self.certificates.len() == self.elements.len()
            && self.certificates.iter().all(Certificate::passed)
    }
}

fn rank_of(polys: &[&QuotientPolynomial]) -> usize {
    let mut monos: Vec<&Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m))
        .collect();
    monos.sort();
    monos.dedup();
    let rows: Vec<Vec<BigRational>> = polys
        .iter()
        .map(|p| monos.iter().map(|m| p.coeff(m)).collect())
        .collect();
    rref(rows, monos.len()).rank()
}

fn int_rational(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

fn in_kernel(p: &QuotientPolynomial, params: &AlgebraParams) -> bool {
    apply_e(p, params).is_zero()
}

fn transforms_by_sign(p: &QuotientPolynomial, alternating: bool) -> bool {
    PermutationS3::all().iter().all(|s| {
        let image = apply_permutation(s, p);
        if alternating && s.sign() < 0 {
            image == -p
        } else {
            image == *p
        }
    })
}

fn orbit_basis(d: u32, j: u32, rep: RepType) -> Result<BasisReport> {
    check_domain(d, j)?;
    let params = AlgebraParams::three(d)?;
    let expected = by_partitions(d, j)?;
    let (class, multiplicity) = match rep {
        RepType::Trivial => (PartitionClass::Plain, expected.triv),
        RepType::Sign => (PartitionClass::Strict, expected.sign),
        RepType::Standard => unreachable!("standard components use pairs"),
    };
    let c = build_unchecked(d, j, class)?;
    let mut elements = Vec::new();
    for v in nullspace_int(&c.entries, c.ncols()) {
        let coords = normalize_vector(&v);
        let mut p = QuotientPolynomial::zero();
        for (alpha, &lambda) in coords.iter().zip(&c.cols) {
            if alpha.is_zero() {
                continue;
            }
            let orbit = match class {
                PartitionClass::Plain => orbit_sum(lambda, d)?.expansion,
                _ => signed_orbit(lambda, d)?.expansion,
            };
            p = &p + &orbit.scale(&int_rational(alpha));
        }
        elements.push(p);
    }
    let refs: Vec<&QuotientPolynomial> = elements.iter().collect();
    let independent = rank_of(&refs) == elements.len();
    let certificates = elements
        .iter()
        .map(|p| Certificate {
            in_kernel: !p.is_zero() && in_kernel(p, &params),
            transforms_correctly: transforms_by_sign(p, rep == RepType::Sign),
            linearly_independent: independent,
        })
        .collect();
    Ok(BasisReport {
        d,
        j,
        rep,
        multiplicity,
        elements: elements.into_iter().map(BasisElement::Single).collect(),
        certificates,
    })
}

/// Kernel basis of the trivial component: symmetric `P` with `E(P) = 0`.
pub fn trivial_basis(d: u32, j: u32) -> Result<BasisReport> {
    orbit_basis(d, j, RepType::Trivial)
}

/// Kernel basis of the sign component: alternating `P` with `E(P) = 0`.
pub fn sign_basis(d: u32, j: u32) -> Result<BasisReport> {
    orbit_basis(d, j, RepType::Sign)
}

/// Linear system for `P1 = sum c_m (x^m - x^((1,2)m))` over `m` with
/// `m1 > m2`: `E(P1) = 0` together with `P1 + P2 + P3 = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardSystem {
    pub d: u32,
    pub j: u32,
    /// Representatives `m` with `m1 > m2`, descending lexicographic.
    pub pairs: Vec<Monomial>,
    /// One row per nonzero constraint, columns indexed by `pairs`.
    pub rows: Vec<Vec<BigInt>>,
}

impl StandardSystem {
    pub fn rref(&self) -> Rref {
        rref(to_rational(&self.rows), self.pairs.len())
    }

    /// `P1` for a coordinate vector indexed like `pairs`.
    pub fn p1(&self, coords: &[BigInt]) -> QuotientPolynomial {
        let swap = PermutationS3::transposition(1, 2);
        let mut p = QuotientPolynomial::zero();
        for (c, m) in coords.iter().zip(&self.pairs) {
            if c.is_zero() {
                continue;
            }
            p.add_term(m.clone(), int_rational(c));
            p.add_term(swap.act_on_monomial(m), -int_rational(c));
        }
        p
    }
}

fn p2_of(p1: &QuotientPolynomial) -> QuotientPolynomial {
    -&apply_permutation(&PermutationS3::transposition(1, 3), p1)
}

fn p3_of(p2: &QuotientPolynomial) -> QuotientPolynomial {
    -&apply_permutation(&PermutationS3::transposition(1, 2), p2)
}

pub fn standard_system(d: u32, j: u32) -> Result<StandardSystem> {
    check_domain(d, j)?;
    let params = AlgebraParams::three(d)?;
    let pairs: Vec<Monomial> = monomial_basis(&params, j)?
        .into_iter()
        .filter(|m| m.exponents()[0] > m.exponents()[1])
        .collect();
    let below = if j == 0 {
        Vec::new()
    } else {
        monomial_basis(&params, j - 1)?
    };
    let here = monomial_basis(&params, j)?;
    let mut rows = vec![vec![BigInt::zero(); pairs.len()]; below.len() + here.len()];
    let system = StandardSystem {
        d,
        j,
        pairs,
        rows: Vec::new(),
    };
    for k in 0..system.pairs.len() {
        let mut unit = vec![BigInt::zero(); system.pairs.len()];
        unit[k] = BigInt::from(1);
        let p1 = system.p1(&unit);
        let e = apply_e(&p1, &params);
        let p2 = p2_of(&p1);
        let sum = &(&p1 + &p2) + &p3_of(&p2);
        for (r, m) in below.iter().enumerate() {
            rows[r][k] = e.coeff(m).to_integer();
        }
        for (r, m) in here.iter().enumerate() {
            rows[below.len() + r][k] = sum.coeff(m).to_integer();
        }
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    Ok(StandardSystem { rows, ..system })
}

/// One `(P1, P2)` per standard component; `P2 = -(1,3)P1`.
pub fn standard_basis(d: u32, j: u32) -> Result<BasisReport> {
    let params = AlgebraParams::three(d)?;
    let system = standard_system(d, j)?;
    let multiplicity = by_partitions(d, j)?.st;
    let pairs: Vec<StandardPair> = nullspace_int(&system.rows, system.pairs.len())
        .iter()
        .map(|v| {
            let p1 = system.p1(&normalize_vector(v));
            let p2 = p2_of(&p1);
            StandardPair { p1, p2 }
        })
        .collect();
    let firsts: Vec<&QuotientPolynomial> = pairs.iter().map(|p| &p.p1).collect();
    let set_independent = rank_of(&firsts) == pairs.len();
    let swap = PermutationS3::transposition(1, 2);
    let certificates = pairs
        .iter()
        .map(|pair| {
            let p3 = p3_of(&pair.p2);
            let sum = &(&pair.p1 + &pair.p2) + &p3;
            Certificate {
                in_kernel: [&pair.p1, &pair.p2, &p3]
                    .iter()
                    .all(|p| in_kernel(p, &params)),
                transforms_correctly: apply_permutation(&swap, &pair.p1) == -&pair.p1
                    && sum.is_zero(),
                linearly_independent: set_independent
                    && !pair.p1.is_zero()
                    && rank_of(&[&pair.p1, &pair.p2]) == 2,
            }
        })
        .collect();
    Ok(BasisReport {
        d,
        j,
        rep: RepType::Standard,
        multiplicity,
        elements: pairs.into_iter().map(BasisElement::Pair).collect(),
        certificates,
    })
}

pub fn basis(d: u32, j: u32, rep: RepType) -> Result<BasisReport> {
    match rep {
        RepType::Trivial => trivial_basis(d, j),
        RepType::Sign => sign_basis(d, j),
        RepType::Standard => standard_basis(d, j),
    }
}

/// Basis sizes as a multiplicity triple, with whether all three reports
/// certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisSummary {
    pub triple: MultiplicityTriple,
    pub certified: bool,
}

pub fn basis_summary(d: u32, j: u32) -> Result<BasisSummary> {
    let t = trivial_basis(d, j)?;
    let s = sign_basis(d, j)?;
    let st = standard_basis(d, j)?;
    Ok(BasisSummary {
        triple: MultiplicityTriple {
            triv: t.len() as u64,
            sign: s.len() as u64,
            st: st.len() as u64,
            method: Method::Nullspace,
        },
        certified: t.certified() && s.certified() && st.certified(),
    })
}

/// Nullity of `E: A_j -> A_(j-1)` on the full monomial bases.
pub fn kernel_dim_bruteforce(d: u32, j: u32) -> Result<u64> {
    check_domain(d, j)?;
    let params = AlgebraParams::three(d)?;
    let source = monomial_basis(&params, j)?;
    if source.len() > BRUTEFORCE_GUARD {
        return Err(Error::SizeGuard {
            size: source.len(),
            limit: BRUTEFORCE_GUARD,
        });
    }
    if j == 0 {
        return Ok(source.len() as u64);
    }
    let target = monomial_basis(&params, j - 1)?;
    let mut rows = vec![vec![BigInt::zero(); source.len()]; target.len()];
    for (c, m) in source.iter().enumerate() {
        let image = apply_e(&QuotientPolynomial::monomial(m.clone()), &params);
        for (r, t) in target.iter().enumerate() {
            rows[r][c] = image.coeff(t).to_integer();
        }
    }
    Ok((source.len() - rank_fraction_free(&rows)) as u64)
}
