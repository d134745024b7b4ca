//! Plain text and LaTeX renderings.

use std::fmt::Write;

use lefschetz_core::{BasisElement, BasisReport, Monomial, QuotientPolynomial, Sl2Decomposition};
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::json::TableDoc;

pub fn plain_table(doc: &TableDoc) -> String {
    let mut out = format!("d = {}\n", doc.d);
    out.push_str("   j  mult  triv  sign    st  agree\n");
    for r in &doc.rows {
        let mark = if r.agree { "✓" } else { "✗" };
        let _ = writeln!(
            out,
            "{:>4}  {:>4}  {:>4}  {:>4}  {:>4}  {mark}",
            r.j, r.mult, r.triv, r.sign, r.st
        );
    }
    out
}

pub fn latex_table(doc: &TableDoc) -> String {
    let mut out = String::from("\\begin{tabular}{rrrrrc}\n");
    let _ = writeln!(out, "\\multicolumn{{6}}{{c}}{{$d = {}$}} \\\\", doc.d);
    out.push_str("$j$ & $\\mathrm{mult}$ & $\\mathrm{triv}$ & $\\mathrm{sign}$ & $\\mathrm{st}$ & agree \\\\\n\\hline\n");
    for r in &doc.rows {
        let mark = if r.agree { "\\checkmark" } else { "$\\times$" };
        let _ = writeln!(
            out,
            "{} & {} & {} & {} & {} & {mark} \\\\",
            r.j, r.mult, r.triv, r.sign, r.st
        );
    }
    out.push_str("\\end{tabular}\n");
    out
}

fn heading(r: &BasisReport) -> String {
    let status = if r.certified() {
        "certified"
    } else {
        "NOT certified"
    };
    format!(
        "{} component of Ker(E) in A(3,{})_{}: multiplicity {}, {status}\n",
        r.rep, r.d, r.j, r.multiplicity
    )
}

pub fn plain_basis(r: &BasisReport) -> String {
    let mut out = heading(r);
    if r.is_empty() {
        let _ = writeln!(out, "no basis elements (multiplicity {})", r.multiplicity);
        return out;
    }
    for (i, e) in r.elements.iter().enumerate() {
        let k = i + 1;
        match e {
            BasisElement::Single(p) => {
                let _ = writeln!(out, "P{k} = {p}");
            }
            BasisElement::Pair(pair) => {
                let _ = writeln!(out, "P1[{k}] = {}", pair.p1);
                let _ = writeln!(out, "P2[{k}] = {}", pair.p2);
            }
        }
    }
    out
}

pub fn latex_basis(r: &BasisReport) -> String {
    let mut out = format!("% {}", heading(r));
    if r.is_empty() {
        let _ = writeln!(out, "% no basis elements (multiplicity {})", r.multiplicity);
        return out;
    }
    out.push_str("\\begin{align*}\n");
    let mut lines = Vec::new();
    for (i, e) in r.elements.iter().enumerate() {
        let k = i + 1;
        match e {
            BasisElement::Single(p) => lines.push(format!("P_{{{k}}} &= {}", latex_poly(p))),
            BasisElement::Pair(pair) => {
                lines.push(format!("P_{{1}}^{{({k})}} &= {}", latex_poly(&pair.p1)));
                lines.push(format!("P_{{2}}^{{({k})}} &= {}", latex_poly(&pair.p2)));
            }
        }
    }
    out.push_str(&lines.join(" \\\\\n"));
    out.push_str("\n\\end{align*}\n");
    out
}

fn latex_monomial(m: &Monomial) -> String {
    let mut s = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => {
                let _ = write!(s, "x_{{{}}}", i + 1);
            }
            _ => {
                let _ = write!(s, "x_{{{}}}^{{{e}}}", i + 1);
            }
        }
    }
    s
}

fn latex_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn latex_poly(p: &QuotientPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let mono = latex_monomial(m);
        if mono.is_empty() {
            s.push_str(&latex_coeff(&a));
        } else {
            if !a.is_one() {
                s.push_str(&latex_coeff(&a));
            }
            s.push_str(&mono);
        }
    }
    s
}

pub fn plain_hilbert(dims: &[u64]) -> String {
    let parts: Vec<String> = dims.iter().map(u64::to_string).collect();
    format!("{}\n", parts.join(" "))
}

pub fn latex_hilbert(dims: &[u64]) -> String {
    let terms: Vec<String> = dims
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, _) => c.to_string(),
            (1, 1) => "t".into(),
            (1, _) => format!("{c}t"),
            (_, 1) => format!("t^{{{k}}}"),
            _ => format!("{c}t^{{{k}}}"),
        })
        .collect();
    format!("${}$\n", terms.join(" + "))
}

pub fn plain_decompose(s: &Sl2Decomposition) -> String {
    let parts: Vec<String> = s
        .irreps()
        .iter()
        .map(|(w, m)| format!("V{w}:{m}"))
        .collect();
    format!("{}\n", parts.join(" "))
}

pub fn latex_decompose(s: &Sl2Decomposition) -> String {
    let parts: Vec<String> = s
        .irreps()
        .iter()
        .map(|&(w, m)| {
            if m == 1 {
                format!("V({w})")
            } else {
                format!("{m}V({w})")
            }
        })
        .collect();
    format!("${}$\n", parts.join(" \\oplus "))
}

pub fn plain_cg(weights: &[u32]) -> String {
    let parts: Vec<String> = weights.iter().map(u32::to_string).collect();
    format!("{}\n", parts.join(" "))
}

pub fn latex_cg(m: u32, k: u32, weights: &[u32]) -> String {
    let parts: Vec<String> = weights.iter().map(|w| format!("V({w})")).collect();
    format!("$V({m}) \\otimes V({k}) = {}$\n", parts.join(" \\oplus "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn latex_polynomials() {
        let p = QuotientPolynomial::from_terms([
            (Monomial::new(vec![2, 1, 0]), int(1)),
            (Monomial::new(vec![0, 0, 0]), int(-3)),
            (
                Monomial::new(vec![1, 2, 0]),
                BigRational::new(BigInt::from(-5), BigInt::from(2)),
            ),
        ]);
        assert_eq!(
            latex_poly(&p),
            "x_{1}^{2}x_{2} - \\frac{5}{2}x_{1}x_{2}^{2} - 3"
        );
        assert_eq!(latex_poly(&QuotientPolynomial::zero()), "0");
    }

    #[test]
    fn hilbert_renderings() {
        assert_eq!(plain_hilbert(&[1, 3, 6, 7, 6, 3, 1]), "1 3 6 7 6 3 1\n");
        assert_eq!(latex_hilbert(&[1, 1, 2]), "$1 + t + 2t^{2}$\n");
    }
}
