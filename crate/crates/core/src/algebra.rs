//! The truncated polynomial ring `A(n,d) = k[x1..xn]/(x1^d, ..., xn^d)` with
//! exact rational coefficients, and the sl2 triple acting on it:
//!
//! * `F` multiplies by `x1 + ... + xn`,
//! * `E` lowers degree by `E(x^a) = sum_k a_k (d - a_k) x^a / x_k`,
//! * `H = EF - FE`, which acts on degree `j` as the scalar `n(d-1) - 2j`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{check_range, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraParams {
    pub n: usize,
    pub d: u32,
}

impl AlgebraParams {
    pub fn new(n: usize, d: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("need at least one variable".into()));
        }
        if d < 2 {
            return Err(Error::Precondition(format!(
                "exponent d = {d} must be >= 2"
            )));
        }
        Ok(AlgebraParams { n, d })
    }

    /// Shorthand for the three-variable algebra `A(3,d)`.
    pub fn three(d: u32) -> Result<Self> {
        Self::new(3, d)
    }

    /// Socle degree `n(d-1)`.
    pub fn socle_degree(&self) -> u32 {
        self.n as u32 * (self.d - 1)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.0.len() == self.n && m.0.iter().all(|&e| e < self.d)
    }

    /// `d^n`, the total dimension.
    pub fn dimension(&self) -> u128 {
        u128::from(self.d).pow(self.n as u32)
    }
}

/// Exponent vector of a monomial. Ordered lexicographically on exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// `self * x_k`, or `None` if the exponent would reach `d`.
    pub fn times_var(&self, k: usize, d: u32) -> Option<Monomial> {
        let mut e = self.0.clone();
        e[k] += 1;
        (e[k] < d).then_some(Monomial(e))
    }

    pub fn div_var(&self, k: usize) -> Option<Monomial> {
        let mut e = self.0.clone();
        if e[k] == 0 {
            return None;
        }
        e[k] -= 1;
        Some(Monomial(e))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse element of `A(n,d)`: monomial to nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QuotientPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl QuotientPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(Monomial::one(n))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, i64)>,
    {
        Self::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (Monomial(e), BigRational::from_integer(BigInt::from(c)))),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in descending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    /// The common degree of all terms, `None` for zero or inhomogeneous input.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QuotientPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Applies `f` to every exponent vector (used for variable permutations).
    pub fn map_monomials(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }
}

impl Add for &QuotientPolynomial {
    type Output = QuotientPolynomial;
    fn add(self, rhs: &QuotientPolynomial) -> QuotientPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &QuotientPolynomial {
    type Output = QuotientPolynomial;
    fn sub(self, rhs: &QuotientPolynomial) -> QuotientPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &QuotientPolynomial {
    type Output = QuotientPolynomial;
    fn neg(self) -> QuotientPolynomial {
        QuotientPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for QuotientPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let is_const = m.degree() == 0;
            if abs.is_one() {
                write!(f, "{m}")?;
            } else if is_const {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Multiplication by `x1 + ... + xn`, discarding monomials that hit `x_k^d`.
pub fn apply_f(p: &QuotientPolynomial, params: &AlgebraParams) -> QuotientPolynomial {
    let mut out = QuotientPolynomial::zero();
    for (m, c) in &p.terms {
        for k in 0..params.n {
            if let Some(up) = m.times_var(k, params.d) {
                out.add_term(up, c.clone());
            }
        }
    }
    out
}

/// The lowering operator `E`.
pub fn apply_e(p: &QuotientPolynomial, params: &AlgebraParams) -> QuotientPolynomial {
    let d = i64::from(params.d);
    let mut out = QuotientPolynomial::zero();
    for (m, c) in &p.terms {
        for k in 0..params.n {
            let a = i64::from(m.0[k]);
            if let Some(down) = m.div_var(k) {
                let w = BigRational::from_integer(BigInt::from(a * (d - a)));
                out.add_term(down, c * w);
            }
        }
    }
    out
}

/// `H = EF - FE`, computed from the two operators rather than assumed.
pub fn apply_h(p: &QuotientPolynomial, params: &AlgebraParams) -> QuotientPolynomial {
    let ef = apply_e(&apply_f(p, params), params);
    let fe = apply_f(&apply_e(p, params), params);
    &ef - &fe
}

/// All degree-`j` monomials of `A(n,d)`, descending lexicographic.
pub fn monomial_basis(params: &AlgebraParams, j: u32) -> Result<Vec<Monomial>> {
    check_range(
        "degree j",
        i64::from(j),
        0,
        i64::from(params.socle_degree()),
    )?;
    let mut out = Vec::new();
    let mut cur = vec![0u32; params.n];
    fill(params, 0, j, &mut cur, &mut out);
    Ok(out)
}

fn fill(
    params: &AlgebraParams,
    slot: usize,
    rest: u32,
    cur: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    let remaining_slots = (params.n - slot - 1) as u32;
    if slot + 1 == params.n {
        if rest < params.d {
            cur[slot] = rest;
            out.push(Monomial(cur.clone()));
        }
        return;
    }
    let cap = rest.min(params.d - 1);
    for e in (0..=cap).rev() {
        if rest - e > remaining_slots * (params.d - 1) {
            break;
        }
        cur[slot] = e;
        fill(params, slot + 1, rest - e, cur, out);
    }
}
