//! Rectangular partitions with at most three parts.
//!
//! Partitions are stored as padded triples `(a, b, c)` with `a >= b >= c >= 0`,
//! which is how they index orbit sums of monomials in three variables. All
//! listings are in descending lexicographic order, e.g. `(6,0,0)` before
//! `(5,1,0)`.

use std::fmt;

use crate::error::{Error, Result};

/// Number of parts supported by enumeration.
pub const PARTS: usize = 3;

/// A weakly decreasing exponent triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: [u32; 3],
}

impl Partition {
    /// Builds a partition, rejecting triples that are not weakly decreasing.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a < b || b < c {
            return Err(Error::Precondition(format!(
                "({a},{b},{c}) is not weakly decreasing"
            )));
        }
        Ok(Partition { parts: [a, b, c] })
    }

    pub(crate) fn new_unchecked(a: u32, b: u32, c: u32) -> Self {
        debug_assert!(a >= b && b >= c);
        Partition { parts: [a, b, c] }
    }

    pub fn parts(&self) -> [u32; 3] {
        self.parts
    }

    pub fn first(&self) -> u32 {
        self.parts[0]
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts[0]
    }

    pub fn is_strict(&self) -> bool {
        let [a, b, c] = self.parts;
        a > b && b > c
    }

    pub fn is_two_strict(&self) -> bool {
        let [a, b, c] = self.parts;
        a >= b + 2 && b >= c + 2
    }

    pub fn belongs_to(&self, class: PartitionClass) -> bool {
        match class {
            PartitionClass::Plain => true,
            PartitionClass::Strict => self.is_strict(),
            PartitionClass::TwoStrict => self.is_two_strict(),
        }
    }

    /// `self + e_slot`, if the result is still a partition.
    pub fn bump(&self, slot: usize) -> Option<Partition> {
        let mut p = self.parts;
        p[slot] += 1;
        (p[0] >= p[1] && p[1] >= p[2]).then_some(Partition { parts: p })
    }

    /// `self - e_slot`, if the result is still a partition.
    pub fn lower(&self, slot: usize) -> Option<Partition> {
        let mut p = self.parts;
        if p[slot] == 0 {
            return None;
        }
        p[slot] -= 1;
        (p[0] >= p[1] && p[1] >= p[2]).then_some(Partition { parts: p })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.parts;
        write!(f, "({a},{b},{c})")
    }
}

/// Which family of partitions to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    Plain,
    /// `a > b > c`
    Strict,
    /// `a >= b + 2` and `b >= c + 2`
    TwoStrict,
}

/// The staircase `(k-1, k-2, ..., 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Staircase {
    pub delta: Partition,
}

impl Staircase {
    pub fn for_parts(k: usize) -> Result<Self> {
        if k != PARTS {
            return Err(Error::UnsupportedRank {
                requested: k,
                supported: PARTS,
            });
        }
        Ok(Staircase {
            delta: Partition::new_unchecked(2, 1, 0),
        })
    }

    /// Weight `k(k-1)/2` of the staircase.
    pub fn weight(&self) -> u32 {
        self.delta.weight()
    }
}

/// Every partition of `j` into at most `k` parts, each at most `l`, lying in
/// `class`, in descending lexicographic order.
///
/// Negative weights produce an empty list.
pub fn enumerate(k: usize, l: u32, j: i64, class: PartitionClass) -> Result<Vec<Partition>> {
    if k != PARTS {
        return Err(Error::UnsupportedRank {
            requested: k,
            supported: PARTS,
        });
    }
    let mut out = Vec::new();
    if j < 0 || j > 3 * i64::from(l) {
        return Ok(out);
    }
    let j = j as u32;
    for a in (0..=l.min(j)).rev() {
        let rest = j - a;
        for b in (0..=a.min(rest)).rev() {
            let c = rest - b;
            if c > b {
                break;
            }
            let p = Partition::new_unchecked(a, b, c);
            if p.belongs_to(class) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// `|enumerate(k, l, j, class)|` without materialising the list.
pub fn count(k: usize, l: u32, j: i64, class: PartitionClass) -> Result<u64> {
    if k != PARTS {
        return Err(Error::UnsupportedRank {
            requested: k,
            supported: PARTS,
        });
    }
    if j < 0 || j > 3 * i64::from(l) {
        return Ok(0);
    }
    let j = j as u32;
    let mut n = 0u64;
    for a in 0..=l.min(j) {
        let rest = j - a;
        for b in 0..=a.min(rest) {
            let c = rest - b;
            if c <= b && Partition::new_unchecked(a, b, c).belongs_to(class) {
                n += 1;
            }
        }
    }
    Ok(n)
}

/// Subtracts the staircase `(2,1,0)`.
///
/// Sends strict partitions to plain ones and 2-strict partitions to strict
/// ones, shrinking the part bound by two and the weight by three.
pub fn staircase_reduce(lambda: Partition, source: PartitionClass) -> Result<Partition> {
    if source == PartitionClass::Plain {
        return Err(Error::Precondition(
            "staircase reduction needs a strict or 2-strict source class".into(),
        ));
    }
    if !lambda.belongs_to(source) {
        return Err(Error::Precondition(format!(
            "{lambda} is not in class {source:?}"
        )));
    }
    let [a, b, c] = lambda.parts;
    Ok(Partition::new_unchecked(a - 2, b - 1, c))
}

/// Inverse of [`staircase_reduce`].
pub fn staircase_lift(mu: Partition) -> Partition {
    let [a, b, c] = mu.parts;
    Partition::new_unchecked(a + 2, b + 1, c)
}

/// The partitions among `mu + e_1`, `mu + e_2`, `mu + e_3` that lie in
/// `P_{3,d-1}(j)`. Never empty below the middle degree.
pub fn successor_cover(mu: Partition, d: u32, j: u32) -> Result<Vec<Partition>> {
    if d < 1 {
        return Err(Error::Precondition("exponent d must be positive".into()));
    }
    let max_j = 3 * (d - 1) / 2;
    if j == 0 || j > max_j {
        return Err(Error::Precondition(format!(
            "degree {j} outside 1..={max_j} for d = {d}"
        )));
    }
    if mu.weight() != j - 1 || mu.largest() > d - 1 {
        return Err(Error::Precondition(format!(
            "{mu} is not in P_{{3,{}}}({})",
            d - 1,
            j - 1
        )));
    }
    Ok((0..PARTS)
        .filter_map(|slot| mu.bump(slot))
        .filter(|p| p.largest() < d)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: u32, b: u32, c: u32) -> Partition {
        Partition::new(a, b, c).unwrap()
    }

    #[test]
    fn small_listing() {
        let got = enumerate(3, 3, 3, PartitionClass::Plain).unwrap();
        assert_eq!(got, vec![p(3, 0, 0), p(2, 1, 0), p(1, 1, 1)]);
    }

    #[test]
    fn seven_partitions_of_six() {
        let got = enumerate(3, 6, 6, PartitionClass::Plain).unwrap();
        assert_eq!(
            got,
            vec![
                p(6, 0, 0),
                p(5, 1, 0),
                p(4, 2, 0),
                p(4, 1, 1),
                p(3, 3, 0),
                p(3, 2, 1),
                p(2, 2, 2)
            ]
        );
    }

    #[test]
    fn strict_nine_bounded_by_eight() {
        let got = enumerate(3, 8, 9, PartitionClass::Strict).unwrap();
        assert_eq!(
            got,
            vec![
                p(8, 1, 0),
                p(7, 2, 0),
                p(6, 3, 0),
                p(6, 2, 1),
                p(5, 4, 0),
                p(5, 3, 1),
                p(4, 3, 2)
            ]
        );
    }

    #[test]
    fn empty_partition() {
        for l in 0..5 {
            assert_eq!(
                enumerate(3, l, 0, PartitionClass::Plain).unwrap(),
                vec![p(0, 0, 0)]
            );
        }
    }

    #[test]
    fn counts() {
        assert_eq!(count(3, 6, 5, PartitionClass::Plain).unwrap(), 5);
        assert_eq!(count(3, 8, 8, PartitionClass::Strict).unwrap(), 5);
        assert_eq!(count(3, 4, -1, PartitionClass::Plain).unwrap(), 0);
        assert_eq!(count(3, 4, 13, PartitionClass::Plain).unwrap(), 0);
    }

    #[test]
    fn rank_other_than_three_is_rejected() {
        assert!(matches!(
            enumerate(4, 3, 3, PartitionClass::Plain),
            Err(Error::UnsupportedRank { requested: 4, .. })
        ));
        assert!(count(2, 3, 3, PartitionClass::Plain).is_err());
        assert!(Staircase::for_parts(5).is_err());
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(
            staircase_reduce(p(8, 1, 0), PartitionClass::Strict).unwrap(),
            p(6, 0, 0)
        );
        assert_eq!(Staircase::for_parts(3).unwrap().delta, p(2, 1, 0));
        assert!(staircase_reduce(p(3, 3, 0), PartitionClass::Strict).is_err());
        assert!(staircase_reduce(p(3, 2, 1), PartitionClass::TwoStrict).is_err());
        assert_eq!(
            count(3, 8, 9, PartitionClass::Strict).unwrap(),
            count(3, 6, 6, PartitionClass::Plain).unwrap()
        );
    }

    #[test]
    fn two_strict_count_matches_brute_force() {
        // brute force over all triples, independent of `enumerate`
        let brute = |l: u32, j: u32, gap: u32| {
            let mut n = 0;
            for a in 0..=l {
                for b in 0..=l {
                    for c in 0..=l {
                        if a + b + c == j && a >= b + gap && b >= c + gap {
                            n += 1;
                        }
                    }
                }
            }
            n
        };
        assert_eq!(brute(8, 12, 2), brute(6, 9, 1));
        assert_eq!(
            count(3, 8, 12, PartitionClass::TwoStrict).unwrap(),
            brute(8, 12, 2)
        );
        assert_eq!(
            count(3, 6, 9, PartitionClass::Strict).unwrap(),
            brute(6, 9, 1)
        );
    }

    #[test]
    fn successor_cover_examples() {
        assert_eq!(successor_cover(p(2, 0, 0), 3, 3).unwrap(), vec![p(2, 1, 0)]);
        assert_eq!(successor_cover(p(1, 1, 1), 4, 4).unwrap(), vec![p(2, 1, 1)]);
        assert_eq!(
            successor_cover(p(2, 1, 0), 4, 4).unwrap(),
            vec![p(3, 1, 0), p(2, 2, 0), p(2, 1, 1)]
        );
        assert!(successor_cover(p(2, 1, 0), 4, 5).is_err());
        assert!(successor_cover(p(3, 0, 0), 3, 4).is_err());
    }

    #[test]
    fn grid_is_sorted_and_counts_agree() {
        for d in 3..=15u32 {
            for j in 0..=3 * (d - 1) {
                for class in [
                    PartitionClass::Plain,
                    PartitionClass::Strict,
                    PartitionClass::TwoStrict,
                ] {
                    let list = enumerate(3, d - 1, i64::from(j), class).unwrap();
                    assert!(list.windows(2).all(|w| w[0] > w[1]));
                    assert_eq!(
                        list.len() as u64,
                        count(3, d - 1, i64::from(j), class).unwrap()
                    );
                    assert!(list.iter().all(|q| q.weight() == j && q.largest() < d));
                }
            }
        }
    }

    #[test]
    fn staircase_bijections_on_grid() {
        for d in 3..=15u32 {
            for j in 0..=3 * (d - 1) as i64 {
                let strict = enumerate(3, d - 1, j, PartitionClass::Strict).unwrap();
                let mapped: Vec<_> = strict
                    .iter()
                    .map(|&q| staircase_reduce(q, PartitionClass::Strict).unwrap())
                    .collect();
                assert_eq!(
                    mapped,
                    enumerate(3, d - 3, j - 3, PartitionClass::Plain).unwrap()
                );

                let two = enumerate(3, d - 1, j, PartitionClass::TwoStrict).unwrap();
                let mapped: Vec<_> = two
                    .iter()
                    .map(|&q| staircase_reduce(q, PartitionClass::TwoStrict).unwrap())
                    .collect();
                assert_eq!(
                    mapped,
                    enumerate(3, d - 3, j - 3, PartitionClass::Strict).unwrap()
                );
                assert!(mapped.iter().all(|&q| staircase_lift(q).is_two_strict()));
            }
        }
    }

    #[test]
    fn successor_cover_never_empty() {
        for d in 2..=20u32 {
            for j in 1..=3 * (d - 1) / 2 {
                for mu in enumerate(3, d - 1, i64::from(j) - 1, PartitionClass::Plain).unwrap() {
                    assert!(
                        !successor_cover(mu, d, j).unwrap().is_empty(),
                        "d={d} j={j} mu={mu}"
                    );
                }
            }
        }
    }
}
