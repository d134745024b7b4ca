//! The `lefschetz` command line. [`run`] takes an argument list and returns
//! the exit status with both output streams, so it can be tested in process.
//!
//! Exit status: 0 on success, 1 when a verification or certification fails,
//! 2 for usage and range errors.

pub mod json;
pub mod render;

use std::ffi::OsString;
use std::fmt::Write;

use clap::{Parser, Subcommand, ValueEnum};
use lefschetz_core::{
    basis, clebsch_gordan, cross_validate_with, hilbert, kernel_dim_bruteforce, lefschetz_check,
    max_degree, sl2_decompose, validate_cell, CrossValidateOptions, Error, Method,
    MultiplicityTable, RepType,
};

use crate::json::{
    to_document, BasisDoc, CgDoc, DecomposeDoc, DisagreementDoc, HilbertDoc, LefschetzDoc,
    TableDoc, VerifyDoc,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Largest `d^n` included in the `verify --with-lefschetz` suite.
pub const VERIFY_LEFSCHETZ_LIMIT: u128 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RepArg {
    Trivial,
    Sign,
    Standard,
}

impl From<RepArg> for RepType {
    fn from(r: RepArg) -> Self {
        match r {
            RepArg::Trivial => RepType::Trivial,
            RepArg::Sign => RepType::Sign,
            RepArg::Standard => RepType::Standard,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PipelineArg {
    Partitions,
    Recursion,
    ClosedForm,
    Character,
    Nullspace,
}

impl From<PipelineArg> for Method {
    fn from(p: PipelineArg) -> Self {
        match p {
            PipelineArg::Partitions => Method::Partitions,
            PipelineArg::Recursion => Method::Recursion,
            PipelineArg::ClosedForm => Method::ClosedForm,
            PipelineArg::Character => Method::Character,
            PipelineArg::Nullspace => Method::Nullspace,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "lefschetz",
    version,
    about = "S3 x sl2 structure of k[x1,x2,x3]/(x1^d, x2^d, x3^d)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiplicities triv, sign, st for every degree j, from all pipelines.
    Table {
        #[arg(long = "d")]
        d: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Certified basis polynomials of one component of Ker(E) in degree j.
    Basis {
        #[arg(long = "d")]
        d: u32,
        #[arg(long = "j")]
        j: u32,
        #[arg(long, value_enum)]
        rep: RepArg,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Hilbert function of A(n,d).
    Hilbert {
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "d")]
        d: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Decomposition of A(n,d) into irreducible sl2-modules.
    Decompose {
        #[arg(long = "n")]
        n: usize,
        #[arg(long = "d")]
        d: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Highest weights of V(m) tensor V(k), for m >= k.
    Cg {
        #[arg(long = "m")]
        m: u32,
        #[arg(long = "k")]
        k: u32,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Cross-validate every pipeline for 3 <= d <= dmax.
    Verify {
        #[arg(long = "dmax")]
        dmax: u32,
        /// Also build and certify explicit bases and compare kernel dimensions.
        #[arg(long)]
        with_bases: bool,
        /// Also run the strong Lefschetz rank check on small algebras.
        #[arg(long)]
        with_lefschetz: bool,
        /// Perturb one pipeline, to check that faults are caught.
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<PipelineArg>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_code(code: u8, stdout: String) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        let code = match e {
            Error::Internal(_) => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        Output {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            };
        }
    };
    match execute(cli.command) {
        Ok(out) => out,
        Err(e) => Output::error(&e),
    }
}

fn execute(command: Command) -> lefschetz_core::Result<Output> {
    match command {
        Command::Table { d, format } => table(d, format),
        Command::Basis { d, j, rep, format } => {
            let report = basis(d, j, rep.into())?;
            let text = match format {
                OutputFormat::Plain => render::plain_basis(&report),
                OutputFormat::Json => to_document(&BasisDoc::from_report(&report)),
                OutputFormat::Latex => render::latex_basis(&report),
            };
            let code = if report.certified() {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            Ok(Output::with_code(code, text))
        }
        Command::Hilbert { n, d, format } => {
            let h = hilbert(n, d)?;
            Ok(Output::ok(match format {
                OutputFormat::Plain => render::plain_hilbert(&h.dims),
                OutputFormat::Json => to_document(&HilbertDoc::from(&h)),
                OutputFormat::Latex => render::latex_hilbert(&h.dims),
            }))
        }
        Command::Decompose { n, d, format } => {
            let s = sl2_decompose(n, d)?;
            Ok(Output::ok(match format {
                OutputFormat::Plain => render::plain_decompose(&s),
                OutputFormat::Json => to_document(&DecomposeDoc::new(n, d, &s)),
                OutputFormat::Latex => render::latex_decompose(&s),
            }))
        }
        Command::Cg { m, k, format } => {
            let weights = clebsch_gordan(m, k)?;
            Ok(Output::ok(match format {
                OutputFormat::Plain => render::plain_cg(&weights),
                OutputFormat::Json => to_document(&CgDoc { m, k, weights }),
                OutputFormat::Latex => render::latex_cg(m, k, &weights),
            }))
        }
        Command::Verify {
            dmax,
            with_bases,
            with_lefschetz,
            inject_fault,
            format,
        } => verify(
            dmax,
            with_bases,
            with_lefschetz,
            inject_fault.map(Method::from),
            format,
        ),
    }
}

fn table(d: u32, format: OutputFormat) -> lefschetz_core::Result<Output> {
    if d < 3 {
        return Err(Error::OutOfRange {
            what: "exponent d",
            value: i64::from(d),
            min: 3,
            max: i64::from(u32::MAX),
        });
    }
    let cells = (0..=max_degree(d))
        .map(|j| validate_cell(d, j, CrossValidateOptions::default()))
        .collect::<lefschetz_core::Result<Vec<_>>>()?;
    let doc = TableDoc::from_cells(d, &cells);
    let text = match format {
        OutputFormat::Plain => render::plain_table(&doc),
        OutputFormat::Json => to_document(&doc),
        OutputFormat::Latex => render::latex_table(&doc),
    };
    let code = if doc.rows.iter().all(|r| r.agree) {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    Ok(Output::with_code(code, text))
}

fn inject(table: &mut MultiplicityTable, method: Method) {
    for cell in &mut table.cells {
        for r in cell.results.iter_mut().filter(|r| r.method == method) {
            r.triv += 1;
        }
    }
}

fn verify(
    dmax: u32,
    with_bases: bool,
    with_lefschetz: bool,
    fault: Option<Method>,
    format: OutputFormat,
) -> lefschetz_core::Result<Output> {
    let opts = CrossValidateOptions {
        basis_d_max: with_bases.then_some(dmax),
    };
    let mut table = cross_validate_with(dmax, opts)?;
    if let Some(method) = fault {
        inject(&mut table, method);
    }
    let pipelines: Vec<String> = table
        .cells
        .first()
        .map(|c| {
            c.results
                .iter()
                .map(|r| r.method.name().to_string())
                .collect()
        })
        .unwrap_or_default();
    let disagreements: Vec<DisagreementDoc> =
        table.disagreements().map(DisagreementDoc::from).collect();

    let kernel_mismatches = if with_bases {
        let mut bad = Vec::new();
        for c in &table.cells {
            if kernel_dim_bruteforce(c.d, c.j)? != c.mult {
                bad.push([c.d, c.j]);
            }
        }
        Some(bad)
    } else {
        None
    };

    let lefschetz = if with_lefschetz {
        let mut runs = Vec::new();
        for n in 2..=3usize {
            for d in 2..=dmax {
                if u128::from(d).pow(n as u32) > VERIFY_LEFSCHETZ_LIMIT {
                    break;
                }
                runs.push(LefschetzDoc {
                    n,
                    d,
                    passed: lefschetz_check(n, d)?.passed(),
                });
            }
        }
        Some(runs)
    } else {
        None
    };

    let passed = disagreements.is_empty()
        && kernel_mismatches.as_ref().is_none_or(Vec::is_empty)
        && lefschetz
            .as_ref()
            .is_none_or(|v| v.iter().all(|r| r.passed));
    let doc = VerifyDoc {
        dmax,
        cells: table.cells.len(),
        pipelines,
        agree: table.agreement(),
        disagreements,
        kernel_mismatches,
        lefschetz,
        passed,
    };
    let text = match format {
        OutputFormat::Json => to_document(&doc),
        OutputFormat::Plain => plain_verify(&doc),
        OutputFormat::Latex => latex_verify(&doc),
    };
    Ok(Output::with_code(
        if passed { EXIT_OK } else { EXIT_FAILED },
        text,
    ))
}

fn describe(c: &DisagreementDoc) -> String {
    let values: Vec<String> = c
        .values
        .iter()
        .map(|v| format!("{} ({},{},{})", v.method, v.triv, v.sign, v.st))
        .collect();
    let mut s = format!("d={} j={} mult={}: {}", c.d, c.j, c.mult, values.join(", "));
    if c.bases_certified == Some(false) {
        s.push_str(", bases not certified");
    }
    s
}

fn plain_verify(doc: &VerifyDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cells        {} (3 <= d <= {})", doc.cells, doc.dmax);
    let _ = writeln!(out, "pipelines    {}", doc.pipelines.join(", "));
    let _ = writeln!(out, "agreement    {}", if doc.agree { "yes" } else { "NO" });
    for c in &doc.disagreements {
        let _ = writeln!(out, "  disagreement at {}", describe(c));
    }
    if let Some(bad) = &doc.kernel_mismatches {
        let _ = writeln!(
            out,
            "kernel dims  {}/{} match brute force",
            doc.cells - bad.len(),
            doc.cells
        );
        for [d, j] in bad {
            let _ = writeln!(out, "  mismatch at d={d} j={j}");
        }
    }
    if let Some(runs) = &doc.lefschetz {
        let parts: Vec<String> = runs
            .iter()
            .map(|r| {
                format!(
                    "({},{}) {}",
                    r.n,
                    r.d,
                    if r.passed { "ok" } else { "FAILED" }
                )
            })
            .collect();
        let _ = writeln!(out, "lefschetz    {}", parts.join(", "));
    }
    let _ = writeln!(
        out,
        "result       {}",
        if doc.passed { "PASS" } else { "FAIL" }
    );
    out
}

fn latex_verify(doc: &VerifyDoc) -> String {
    let mut out = String::from("\\begin{tabular}{ll}\n");
    let _ = writeln!(
        out,
        "cells & {} ($3 \\le d \\le {}$) \\\\",
        doc.cells, doc.dmax
    );
    let _ = writeln!(out, "pipelines & {} \\\\", doc.pipelines.join(", "));
    let _ = writeln!(
        out,
        "agreement & {} \\\\",
        if doc.agree { "yes" } else { "no" }
    );
    let _ = writeln!(
        out,
        "result & {} \\\\",
        if doc.passed { "pass" } else { "fail" }
    );
    out.push_str("\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_subcommand() {
        for argv in [
            &["lefschetz", "table", "--d", "9"][..],
            &[
                "lefschetz",
                "basis",
                "--d",
                "7",
                "--j",
                "6",
                "--rep",
                "trivial",
                "--format",
                "json",
            ],
            &["lefschetz", "hilbert", "--n", "3", "--d", "3"],
            &[
                "lefschetz",
                "decompose",
                "--n",
                "3",
                "--d",
                "3",
                "--format",
                "latex",
            ],
            &["lefschetz", "cg", "--m", "3", "--k", "2"],
            &[
                "lefschetz",
                "verify",
                "--dmax",
                "5",
                "--with-bases",
                "--with-lefschetz",
            ],
        ] {
            assert!(Cli::try_parse_from(argv).is_ok(), "{argv:?}");
        }
    }

    #[test]
    fn rejects_bad_flags() {
        assert!(Cli::try_parse_from([
            "lefschetz",
            "basis",
            "--d",
            "7",
            "--j",
            "6",
            "--rep",
            "vector"
        ])
        .is_err());
        assert!(Cli::try_parse_from(["lefschetz", "table", "--d", "-1"]).is_err());
        assert!(
            Cli::try_parse_from(["lefschetz", "table", "--d", "5", "--format", "xml"]).is_err()
        );
        assert!(Cli::try_parse_from(["lefschetz"]).is_err());
    }

    #[test]
    fn fault_injection_only_touches_one_pipeline() {
        let mut t = lefschetz_core::cross_validate(4).unwrap();
        assert!(t.agreement());
        inject(&mut t, Method::Recursion);
        assert!(!t.agreement());
        for c in &t.cells {
            assert_eq!(
                c.get(Method::Partitions).unwrap().triv + 1,
                c.get(Method::Recursion).unwrap().triv
            );
        }
    }
}
