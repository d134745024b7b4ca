//! The symmetric group on three letters acting on `A(3,d)` by permuting
//! variables.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{Monomial, QuotientPolynomial};
use crate::error::{check_range, Error, Result};
use crate::multiplicity::{Method, MultiplicityTriple};
use crate::partitions::Partition;

/// A permutation of `{1,2,3}`, stored 0-based as the images of `0,1,2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationS3 {
    images: [u8; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConjugacyClass {
    Identity,
    Transposition,
    ThreeCycle,
}

impl ConjugacyClass {
    pub fn size(self) -> i64 {
        match self {
            ConjugacyClass::Identity => 1,
            ConjugacyClass::Transposition => 3,
            ConjugacyClass::ThreeCycle => 2,
        }
    }
}

impl PermutationS3 {
    /// From 1-based images of `1,2,3`.
    pub fn from_images(images: [u8; 3]) -> Result<Self> {
        let mut seen = [false; 3];
        for &i in &images {
            if !(1..=3).contains(&i) || seen[(i - 1) as usize] {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[(i - 1) as usize] = true;
        }
        Ok(PermutationS3 {
            images: images.map(|i| i - 1),
        })
    }

    pub fn identity() -> Self {
        PermutationS3 { images: [0, 1, 2] }
    }

    /// The transposition `(i j)`, 1-based.
    pub fn transposition(i: u8, j: u8) -> Self {
        assert!(i != j && (1..=3).contains(&i) && (1..=3).contains(&j));
        let mut images = [0, 1, 2];
        images.swap((i - 1) as usize, (j - 1) as usize);
        PermutationS3 { images }
    }

    /// `1 -> 2 -> 3 -> 1`.
    pub fn cycle() -> Self {
        PermutationS3 { images: [1, 2, 0] }
    }

    pub fn all() -> [PermutationS3; 6] {
        [
            Self::identity(),
            Self::transposition(1, 2),
            Self::transposition(1, 3),
            Self::transposition(2, 3),
            Self::cycle(),
            Self::cycle().compose(&Self::cycle()),
        ]
    }

    /// 1-based image of `i`.
    pub fn image(&self, i: u8) -> u8 {
        self.images[(i - 1) as usize] + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PermutationS3) -> PermutationS3 {
        PermutationS3 {
            images: other.images.map(|i| self.images[i as usize]),
        }
    }

    pub fn inverse(&self) -> PermutationS3 {
        let mut inv = [0u8; 3];
        for (i, &img) in self.images.iter().enumerate() {
            inv[img as usize] = i as u8;
        }
        PermutationS3 { images: inv }
    }

    pub fn sign(&self) -> i64 {
        let mut s = 1;
        for i in 0..3 {
            for k in i + 1..3 {
                if self.images[i] > self.images[k] {
                    s = -s;
                }
            }
        }
        s
    }

    pub fn class(&self) -> ConjugacyClass {
        let fixed = (0..3).filter(|&i| self.images[i] == i as u8).count();
        match fixed {
            3 => ConjugacyClass::Identity,
            1 => ConjugacyClass::Transposition,
            _ => ConjugacyClass::ThreeCycle,
        }
    }

    /// Moves the exponent of `x_i` onto `x_σ(i)`.
    pub fn act_on_monomial(&self, m: &Monomial) -> Monomial {
        let e = m.exponents();
        assert_eq!(e.len(), 3, "S3 acts on three variables");
        let mut out = vec![0; 3];
        for (i, &img) in self.images.iter().enumerate() {
            out[img as usize] = e[i];
        }
        Monomial::new(out)
    }
}

impl fmt::Display for PermutationS3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class() {
            ConjugacyClass::Identity => f.write_str("id"),
            ConjugacyClass::Transposition => {
                let moved: Vec<_> = (1..=3u8).filter(|&i| self.image(i) != i).collect();
                write!(f, "({},{})", moved[0], moved[1])
            }
            ConjugacyClass::ThreeCycle => {
                write!(f, "(1,{},{})", self.image(1), self.image(self.image(1)))
            }
        }
    }
}

pub fn apply_permutation(sigma: &PermutationS3, p: &QuotientPolynomial) -> QuotientPolynomial {
    p.map_monomials(|m| sigma.act_on_monomial(m))
}

/// Sum of the distinct monomials in the orbit of `x^λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSum {
    pub representative: Partition,
    pub expansion: QuotientPolynomial,
}

/// `sum sgn(σ) σ(x^μ)` over all six group elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedOrbitSum {
    pub representative: Partition,
    pub expansion: QuotientPolynomial,
}

fn check_bounded(lambda: Partition, d: u32) -> Result<()> {
    if d == 0 || lambda.largest() > d - 1 {
        return Err(Error::Precondition(format!(
            "{lambda} has a part exceeding d-1 = {}",
            d.saturating_sub(1)
        )));
    }
    Ok(())
}

pub fn orbit_sum(lambda: Partition, d: u32) -> Result<OrbitSum> {
    check_bounded(lambda, d)?;
    let base = Monomial::new(lambda.parts().to_vec());
    let mut monos: Vec<Monomial> = PermutationS3::all()
        .iter()
        .map(|s| s.act_on_monomial(&base))
        .collect();
    monos.sort();
    monos.dedup();
    let one = BigRational::from_integer(BigInt::from(1));
    Ok(OrbitSum {
        representative: lambda,
        expansion: QuotientPolynomial::from_terms(monos.into_iter().map(|m| (m, one.clone()))),
    })
}

/// Vanishes unless `μ` is strict.
pub fn signed_orbit(mu: Partition, d: u32) -> Result<SignedOrbitSum> {
    check_bounded(mu, d)?;
    let base = Monomial::new(mu.parts().to_vec());
    let expansion = QuotientPolynomial::from_terms(PermutationS3::all().iter().map(|s| {
        (
            s.act_on_monomial(&base),
            BigRational::from_integer(BigInt::from(s.sign())),
        )
    }));
    Ok(SignedOrbitSum {
        representative: mu,
        expansion,
    })
}

/// Trace of `σ` on the monomial basis of `A(3,d)_j`: the number of
/// degree-`j` monomials it fixes.
pub fn fixed_count(sigma: &PermutationS3, d: u32, j: u32) -> Result<u64> {
    if d < 1 {
        return Err(Error::Precondition("d must be positive".into()));
    }
    check_range("degree j", i64::from(j), 0, 3 * i64::from(d - 1))?;
    Ok(fixed_count_total(sigma.class(), d, i64::from(j)))
}

/// As [`fixed_count`], but total: zero outside `0..=3(d-1)`.
pub(crate) fn fixed_count_total(class: ConjugacyClass, d: u32, j: i64) -> u64 {
    if j < 0 {
        return 0;
    }
    let top = i64::from(d) - 1;
    match class {
        ConjugacyClass::Identity => {
            let mut n = 0u64;
            for a in 0..=top.min(j) {
                let rest = j - a;
                // b in [max(0, rest-top), min(top, rest)]
                let lo = (rest - top).max(0);
                let hi = rest.min(top);
                if hi >= lo {
                    n += (hi - lo + 1) as u64;
                }
            }
            n
        }
        ConjugacyClass::Transposition => (0..=top)
            .filter(|&a| {
                let c = j - 2 * a;
                (0..=top).contains(&c)
            })
            .count() as u64,
        ConjugacyClass::ThreeCycle => u64::from(j % 3 == 0 && j / 3 <= top),
    }
}

/// Characters of the trivial, sign and standard representations on the
/// classes (identity, transposition, 3-cycle).
const CHARACTERS: [[i64; 3]; 3] = [[1, 1, 1], [1, -1, 1], [2, 0, -1]];

const CLASSES: [ConjugacyClass; 3] = [
    ConjugacyClass::Identity,
    ConjugacyClass::Transposition,
    ConjugacyClass::ThreeCycle,
];

/// Multiplicities in `Ker(E) ∩ A_j`, using its S3-isomorphism with the formal
/// difference `A_j - A_(j-1)` and the character inner product.
pub fn character_multiplicities(d: u32, j: u32) -> Result<MultiplicityTriple> {
    if d < 1 {
        return Err(Error::Precondition("d must be positive".into()));
    }
    check_range("degree j", i64::from(j), 0, i64::from(3 * (d - 1) / 2))?;
    let traces: Vec<i64> = CLASSES
        .iter()
        .map(|&c| {
            fixed_count_total(c, d, i64::from(j)) as i64
                - fixed_count_total(c, d, i64::from(j) - 1) as i64
        })
        .collect();
    let mut out = [0u64; 3];
    for (slot, chi) in CHARACTERS.iter().enumerate() {
        let num: i64 = CLASSES
            .iter()
            .zip(chi)
            .zip(&traces)
            .map(|((c, x), t)| c.size() * x * t)
            .sum();
        if num % 6 != 0 || num < 0 {
            return Err(Error::Internal(format!(
                "character inner product {num}/6 is not a nonnegative integer at d={d}, j={j}"
            )));
        }
        out[slot] = (num / 6) as u64;
    }
    Ok(MultiplicityTriple {
        triv: out[0],
        sign: out[1],
        st: out[2],
        method: Method::Character,
    })
}
