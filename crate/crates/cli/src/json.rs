//! JSON documents. Field order is the struct order, so output is byte stable.
//! Rationals are written as `"p/q"` strings and never as floats.

use lefschetz_core::{
    BasisReport, Cell, HilbertVector, Monomial, QuotientPolynomial, Sl2Decomposition,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| format!("bad numerator in '{s}'"))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| format!("bad denominator in '{s}'"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in '{s}'"));
    }
    Ok(BigRational::new(n, d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub monomial: Vec<u32>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    pub terms: Vec<TermDoc>,
}

impl PolynomialDoc {
    pub fn from_poly(p: &QuotientPolynomial) -> Self {
        PolynomialDoc {
            terms: p
                .terms()
                .map(|(m, c)| TermDoc {
                    monomial: m.exponents().to_vec(),
                    coeff: format_rational(c),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<QuotientPolynomial, String> {
        let mut p = QuotientPolynomial::zero();
        for t in &self.terms {
            p.add_term(Monomial::new(t.monomial.clone()), parse_rational(&t.coeff)?);
        }
        Ok(p)
    }
}

/// A basis report. For the standard representation `polynomials` holds
/// `P1, P2` of each component in turn.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub d: u32,
    pub j: u32,
    pub rep: String,
    pub multiplicity: u64,
    pub polynomials: Vec<PolynomialDoc>,
    pub certified: bool,
}

impl BasisDoc {
    pub fn from_report(r: &BasisReport) -> Self {
        BasisDoc {
            d: r.d,
            j: r.j,
            rep: r.rep.name().to_string(),
            multiplicity: r.multiplicity,
            polynomials: r
                .elements
                .iter()
                .flat_map(|e| e.polynomials())
                .map(PolynomialDoc::from_poly)
                .collect(),
            certified: r.certified(),
        }
    }

    pub fn polynomials(&self) -> Result<Vec<QuotientPolynomial>, String> {
        self.polynomials
            .iter()
            .map(PolynomialDoc::to_poly)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowDoc {
    pub j: u32,
    pub mult: u64,
    pub triv: u64,
    pub sign: u64,
    pub st: u64,
    pub agree: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub d: u32,
    pub rows: Vec<TableRowDoc>,
}

impl TableDoc {
    pub fn from_cells(d: u32, cells: &[Cell]) -> Self {
        TableDoc {
            d,
            rows: cells
                .iter()
                .map(|c| {
                    let (triv, sign, st) = c.results[0].counts();
                    TableRowDoc {
                        j: c.j,
                        mult: c.mult,
                        triv,
                        sign,
                        st,
                        agree: c.agrees(),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertDoc {
    pub n: usize,
    pub d: u32,
    pub dims: Vec<u64>,
}

impl From<&HilbertVector> for HilbertDoc {
    fn from(h: &HilbertVector) -> Self {
        HilbertDoc {
            n: h.n,
            d: h.d,
            dims: h.dims.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrrepDoc {
    pub weight: u32,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeDoc {
    pub n: usize,
    pub d: u32,
    pub socle: u32,
    pub irreps: Vec<IrrepDoc>,
}

impl DecomposeDoc {
    pub fn new(n: usize, d: u32, s: &Sl2Decomposition) -> Self {
        DecomposeDoc {
            n,
            d,
            socle: s.socle,
            irreps: s
                .irreps()
                .into_iter()
                .map(|(weight, mult)| IrrepDoc { weight, mult })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CgDoc {
    pub m: u32,
    pub k: u32,
    pub weights: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineValueDoc {
    pub method: String,
    pub triv: u64,
    pub sign: u64,
    pub st: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisagreementDoc {
    pub d: u32,
    pub j: u32,
    pub mult: u64,
    pub values: Vec<PipelineValueDoc>,
    pub bases_certified: Option<bool>,
}

impl From<&Cell> for DisagreementDoc {
    fn from(c: &Cell) -> Self {
        DisagreementDoc {
            d: c.d,
            j: c.j,
            mult: c.mult,
            values: c
                .results
                .iter()
                .map(|r| PipelineValueDoc {
                    method: r.method.name().to_string(),
                    triv: r.triv,
                    sign: r.sign,
                    st: r.st,
                })
                .collect(),
            bases_certified: c.bases_certified,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzDoc {
    pub n: usize,
    pub d: u32,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub dmax: u32,
    pub cells: usize,
    pub pipelines: Vec<String>,
    pub agree: bool,
    pub disagreements: Vec<DisagreementDoc>,
    /// Cells whose kernel dimension by brute force differs from `mult`;
    /// `null` unless bases were requested.
    pub kernel_mismatches: Option<Vec<[u32; 2]>>,
    pub lefschetz: Option<Vec<LefschetzDoc>>,
    pub passed: bool,
}

pub fn to_document<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use lefschetz_core::{trivial_basis, validate_cell, CrossValidateOptions};

    #[test]
    fn rationals_round_trip() {
        for (n, d) in [(0, 1), (3, 1), (-5, 2), (7, -14)] {
            let q = BigRational::new(BigInt::from(n), BigInt::from(d));
            assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
        assert_eq!(
            format_rational(&BigRational::new(BigInt::from(-5), BigInt::from(2))),
            "-5/2"
        );
        assert_eq!(
            parse_rational("4").unwrap(),
            BigRational::from_integer(BigInt::from(4))
        );
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn basis_document_round_trip() {
        let r = trivial_basis(7, 6).unwrap();
        let doc = BasisDoc::from_report(&r);
        let text = to_document(&doc);
        let back: BasisDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        let polys = back.polynomials().unwrap();
        let want: Vec<QuotientPolynomial> = r
            .elements
            .iter()
            .flat_map(|e| e.polynomials())
            .cloned()
            .collect();
        assert_eq!(polys, want);
    }

    #[test]
    fn field_order_is_fixed() {
        let doc = BasisDoc::from_report(&trivial_basis(3, 3).unwrap());
        let text = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            text,
            r#"{"d":3,"j":3,"rep":"trivial","multiplicity":0,"polynomials":[],"certified":true}"#
        );
        let cell = validate_cell(3, 0, CrossValidateOptions::default()).unwrap();
        let table = serde_json::to_string(&TableDoc::from_cells(3, &[cell])).unwrap();
        assert_eq!(
            table,
            r#"{"d":3,"rows":[{"j":0,"mult":1,"triv":1,"sign":0,"st":0,"agree":true}]}"#
        );
    }
}
