//! Multiplicities `triv(d,j)`, `sign(d,j)`, `st(d,j)` of the three S3
//! irreducibles in `Ker(E) ∩ A(3,d)_j`, computed by independent pipelines:
//!
//! * [`by_partitions`]: differences of rectangular and strict partition counts,
//! * [`by_recursion`]: the `(d, j) -> (d-2, j-3)` recursions,
//! * [`by_closed_form`]: floor formulas split on the parity of `d` and `j - d`,
//! * [`crate::s3::character_multiplicities`]: character inner products,
//! * the sizes of the explicit kernel bases in [`crate::kernel`].
//!
//! [`cross_validate`] runs them all over a grid and reports any disagreement.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{check_range, Error, Result};
use crate::kernel;
use crate::partitions::{count, PartitionClass};
use crate::s3::character_multiplicities;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Partitions,
    Recursion,
    ClosedForm,
    Character,
    Nullspace,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Partitions => "partitions",
            Method::Recursion => "recursion",
            Method::ClosedForm => "closed-form",
            Method::Character => "character",
            Method::Nullspace => "nullspace",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MultiplicityTriple {
    pub triv: u64,
    pub sign: u64,
    pub st: u64,
    pub method: Method,
}

impl MultiplicityTriple {
    pub fn counts(&self) -> (u64, u64, u64) {
        (self.triv, self.sign, self.st)
    }

    /// `triv + sign + 2 st`, the dimension of the kernel it describes.
    pub fn dimension(&self) -> u64 {
        self.triv + self.sign + 2 * self.st
    }
}

impl fmt::Display for MultiplicityTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "triv {} sign {} st {} [{}]",
            self.triv, self.sign, self.st, self.method
        )
    }
}

/// Largest degree with nonzero highest-weight content, `floor(3(d-1)/2)`.
pub fn max_degree(d: u32) -> u32 {
    3 * (d - 1) / 2
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

/// `dim Ker(E) ∩ A(3,d)_j`.
pub fn mult_total(d: u32, j: u32) -> Result<u64> {
    check_domain(d, j)?;
    Ok(mult_total_unchecked(i64::from(d), i64::from(j)) as u64)
}

fn mult_total_unchecked(d: i64, j: i64) -> i64 {
    if j < 0 {
        0
    } else if j < d {
        j + 1
    } else {
        3 * d - 2 - 2 * j
    }
}

pub fn by_partitions(d: u32, j: u32) -> Result<MultiplicityTriple> {
    check_domain(d, j)?;
    let l = d - 1;
    let j = i64::from(j);
    let plain = |w| count(3, l, w, PartitionClass::Plain);
    let strict = |w| count(3, l, w, PartitionClass::Strict);
    let triv = plain(j)? as i64 - plain(j - 1)? as i64;
    let sign = strict(j)? as i64 - strict(j - 1)? as i64;
    let rest = mult_total_unchecked(i64::from(d), j) - triv - sign;
    if triv < 0 || sign < 0 || rest < 0 || rest % 2 != 0 {
        return Err(Error::Internal(format!(
            "partition counts give triv {triv}, sign {sign}, remainder {rest} at d={d}, j={j}"
        )));
    }
    Ok(MultiplicityTriple {
        triv: triv as u64,
        sign: sign as u64,
        st: (rest / 2) as u64,
        method: Method::Partitions,
    })
}

/// Memo table for [`by_recursion`], keyed on `(d, j)`.
#[derive(Debug, Default, Clone)]
pub struct RecursionMemo {
    table: HashMap<(i64, i64), (i64, i64, i64)>,
}

impl RecursionMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `(triv, sign, st)` at any `(d, j)`; zero for `j < 0`.
    ///
    /// Descends `(d, j) -> (d-2, j-3)`:
    /// `sign(d,j) = triv(d-2,j-3)`,
    /// `triv(d,j) = sign(d-2,j-3) + [j <= d-1]`,
    /// `st(d,j) = st(d-2,j-3) + [j <= d-1]`,
    /// with `triv(d,0) = 1`, `sign(d,0) = st(d,0) = 0` and `triv(d,1) = 0`.
    pub fn triple(&mut self, d: i64, j: i64) -> (i64, i64, i64) {
        if j < 0 {
            return (0, 0, 0);
        }
        if j == 0 {
            return (1, 0, 0);
        }
        if let Some(&hit) = self.table.get(&(d, j)) {
            return hit;
        }
        let (t, s, st) = self.triple(d - 2, j - 3);
        let low = i64::from(j < d);
        // j = 1 has no partition (a,a,b) of weight j, so the +1 in the
        // trivial recursion does not apply there.
        let triv = if j == 1 { 0 } else { s + low };
        let out = (triv, t, st + low);
        self.table.insert((d, j), out);
        out
    }
}

pub fn by_recursion(d: u32, j: u32) -> Result<MultiplicityTriple> {
    by_recursion_with(&mut RecursionMemo::new(), d, j)
}

pub fn by_recursion_with(memo: &mut RecursionMemo, d: u32, j: u32) -> Result<MultiplicityTriple> {
    check_domain(d, j)?;
    let (t, s, st) = memo.triple(i64::from(d), i64::from(j));
    if t < 0 || s < 0 || st < 0 {
        return Err(Error::Internal(format!(
            "negative multiplicity from recursion at d={d}, j={j}"
        )));
    }
    Ok(MultiplicityTriple {
        triv: t as u64,
        sign: s as u64,
        st: st as u64,
        method: Method::Recursion,
    })
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Closed forms, split on `j >= d` versus `j <= d-1` and on parities.
pub fn by_closed_form(d: u32, j: u32) -> Result<MultiplicityTriple> {
    check_domain(d, j)?;
    let (d, j) = (i64::from(d), i64::from(j));
    let odd_d = d % 2 == 1;
    let (triv, sign, st);
    if j >= d {
        if odd_d {
            let f = floor_div(3 * d - 2 * j - 3, 6);
            if (j - d) % 2 == 0 {
                (triv, sign) = (f, f + 1);
            } else {
                (triv, sign) = (f + 1, f);
            }
        } else {
            let f = floor_div(3 * d - 2 * j, 6);
            (triv, sign) = (f, f);
        }
        st = floor_div(3 * d - 2 * j - 1, 3);
    } else {
        let gap = d - j;
        if odd_d {
            let f = floor_div(3 * d - 2 * j - 3, 6);
            if gap % 2 == 0 {
                let v = f - (gap - 2) / 2;
                (triv, sign) = (v, v);
            } else {
                (triv, sign) = (f - (gap - 3) / 2, f - (gap - 1) / 2);
            }
        } else {
            let f = floor_div(3 * d - 2 * j, 6);
            if gap % 2 == 0 {
                (triv, sign) = (f - (gap - 2) / 2, f - gap / 2);
            } else {
                let v = f - (gap - 1) / 2;
                (triv, sign) = (v, v);
            }
        }
        st = floor_div(3 * d - 2 * j - 1, 3) - (gap - 1);
    }
    if triv < 0 || sign < 0 || st < 0 {
        return Err(Error::Internal(format!(
            "negative closed form at d={d}, j={j}"
        )));
    }
    Ok(MultiplicityTriple {
        triv: triv as u64,
        sign: sign as u64,
        st: st as u64,
        method: Method::ClosedForm,
    })
}

/// `(triv(d,d-1), sign(d,d-1))` from the boundary formulas.
pub fn boundary_triv_sign(d: u32) -> (u64, u64) {
    let d = u64::from(d);
    if d % 2 == 1 {
        ((d - 1) / 6 + 1, (d - 1) / 6)
    } else {
        ((d + 2) / 6, (d + 2) / 6)
    }
}

/// `st(d, d-1) = floor((d+1)/3)`.
pub fn boundary_st(d: u32) -> u64 {
    (u64::from(d) + 1) / 3
}

/// One `(d, j)` entry of a [`MultiplicityTable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub d: u32,
    pub j: u32,
    pub mult: u64,
    pub results: Vec<MultiplicityTriple>,
    /// Whether the explicit bases certified, when they were computed.
    pub bases_certified: Option<bool>,
}

impl Cell {
    /// All pipelines agree with each other and with `mult`.
    pub fn agrees(&self) -> bool {
        let Some(first) = self.results.first() else {
            return false;
        };
        self.bases_certified != Some(false)
            && self
                .results
                .iter()
                .all(|r| r.counts() == first.counts() && r.dimension() == self.mult)
    }

    pub fn get(&self, method: Method) -> Option<&MultiplicityTriple> {
        self.results.iter().find(|r| r.method == method)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityTable {
    pub d_min: u32,
    pub d_max: u32,
    pub cells: Vec<Cell>,
}

impl MultiplicityTable {
    pub fn agreement(&self) -> bool {
        self.cells.iter().all(Cell::agrees)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.agrees())
    }

    pub fn cell(&self, d: u32, j: u32) -> Option<&Cell> {
        self.cells.iter().find(|c| c.d == d && c.j == j)
    }

    pub fn rows_for(&self, d: u32) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(move |c| c.d == d)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CrossValidateOptions {
    /// Also compare explicit kernel basis sizes for every `d` up to this bound.
    pub basis_d_max: Option<u32>,
}

/// Every pipeline on every cell `3 <= d <= d_max`, `0 <= j <= floor(3(d-1)/2)`.
pub fn cross_validate(d_max: u32) -> Result<MultiplicityTable> {
    cross_validate_with(d_max, CrossValidateOptions::default())
}

pub fn cross_validate_with(d_max: u32, opts: CrossValidateOptions) -> Result<MultiplicityTable> {
    if d_max < 3 {
        return Err(Error::OutOfRange {
            what: "d_max",
            value: i64::from(d_max),
            min: 3,
            max: i64::from(u32::MAX),
        });
    }
    let grid: Vec<(u32, u32)> = (3..=d_max)
        .flat_map(|d| (0..=max_degree(d)).map(move |j| (d, j)))
        .collect();
    let cells = grid
        .par_iter()
        .map(|&(d, j)| validate_cell(d, j, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityTable {
        d_min: 3,
        d_max,
        cells,
    })
}

/// Runs every pipeline on one cell.
pub fn validate_cell(d: u32, j: u32, opts: CrossValidateOptions) -> Result<Cell> {
    let mut results = vec![
        by_partitions(d, j)?,
        by_recursion(d, j)?,
        by_closed_form(d, j)?,
        character_multiplicities(d, j)?,
    ];
    let mut bases_certified = None;
    if opts.basis_d_max.is_some_and(|b| d <= b) {
        let summary = kernel::basis_summary(d, j)?;
        results.push(summary.triple);
        bases_certified = Some(summary.certified);
    }
    Ok(Cell {
        d,
        j,
        mult: mult_total(d, j)?,
        results,
        bases_certified,
    })
}
