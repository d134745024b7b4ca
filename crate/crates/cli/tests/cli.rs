use lefschetz_cli::json::{BasisDoc, TableDoc, VerifyDoc};
use lefschetz_cli::{run, Output, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use lefschetz_core::{basis, QuotientPolynomial, RepType};

fn lefschetz(args: &str) -> Output {
    run(std::iter::once("lefschetz").chain(args.split_whitespace()))
}

#[test]
fn table_row_for_d9_j8() {
    let out = lefschetz("table --d 9");
    assert_eq!(out.code, EXIT_OK);
    let row = out
        .stdout
        .lines()
        .find(|l| l.trim_start().starts_with("8 "))
        .unwrap();
    let fields: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(fields, ["8", "9", "2", "1", "3", "✓"]);
}

#[test]
fn table_json_for_d10() {
    let out = lefschetz("table --d 10 --format json");
    assert_eq!(out.code, EXIT_OK);
    let doc: TableDoc = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc.d, 10);
    assert_eq!(doc.rows.len(), 14);
    let r = &doc.rows[12];
    assert_eq!(
        (r.j, r.mult, r.triv, r.sign, r.st, r.agree),
        (12, 4, 1, 1, 1, true)
    );
    assert!(doc.rows.iter().all(|r| r.agree));
}

#[test]
fn empty_basis_message() {
    let out = lefschetz("basis --d 3 --j 3 --rep trivial");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("no basis elements (multiplicity 0)"));
    let out = lefschetz("basis --d 3 --j 3 --rep trivial --format json");
    assert!(out.stdout.contains("\"polynomials\": []"));
}

#[test]
fn hilbert_line() {
    let out = lefschetz("hilbert --n 3 --d 3");
    assert_eq!(
        (out.code, out.stdout.as_str()),
        (EXIT_OK, "1 3 6 7 6 3 1\n")
    );
}

#[test]
fn decompose_and_cg() {
    assert_eq!(
        lefschetz("decompose --n 3 --d 3").stdout,
        "V6:1 V4:2 V2:3 V0:1\n"
    );
    assert_eq!(lefschetz("cg --m 3 --k 2").stdout, "5 3 1\n");
    let out = lefschetz("cg --m 3 --k 2 --format latex");
    assert_eq!(
        out.stdout,
        "$V(3) \\otimes V(2) = V(5) \\oplus V(3) \\oplus V(1)$\n"
    );
}

#[test]
fn trivial_7_6_json_round_trip() {
    let out = lefschetz("basis --d 7 --j 6 --rep trivial --format json");
    assert_eq!(out.code, EXIT_OK);
    let doc: BasisDoc = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc.polynomials.len(), 2);
    assert!(doc.certified);
    assert_eq!(
        serde_json::to_string_pretty(&doc).unwrap() + "\n",
        out.stdout
    );
    let report = basis(7, 6, RepType::Trivial).unwrap();
    let want: Vec<QuotientPolynomial> = report
        .elements
        .iter()
        .flat_map(|e| e.polynomials())
        .cloned()
        .collect();
    assert_eq!(doc.polynomials().unwrap(), want);
}

#[test]
fn every_rep_round_trips() {
    for (d, j) in [(5, 4), (9, 9), (8, 7)] {
        for rep in ["trivial", "sign", "standard"] {
            let out = lefschetz(&format!("basis --d {d} --j {j} --rep {rep} --format json"));
            assert_eq!(out.code, EXIT_OK);
            let doc: BasisDoc = serde_json::from_str(&out.stdout).unwrap();
            let report = basis(d, j, rep.parse().unwrap()).unwrap();
            let want: Vec<QuotientPolynomial> = report
                .elements
                .iter()
                .flat_map(|e| e.polynomials())
                .cloned()
                .collect();
            assert_eq!(doc.polynomials().unwrap(), want, "{d} {j} {rep}");
            let factor = if rep == "standard" { 2 } else { 1 };
            assert_eq!(doc.polynomials.len() as u64, factor * doc.multiplicity);
            // coefficients are exact strings
            assert!(out.stdout.contains("\"coeff\": \"") || doc.polynomials.is_empty());
        }
    }
}

#[test]
fn usage_and_range_errors_exit_2() {
    for args in [
        "",
        "table",
        "table --d 2",
        "basis --d 3 --j 4 --rep sign",
        "basis --d 3 --j 1 --rep vector",
        "hilbert --n 0 --d 3",
        "cg --m 1 --k 2",
        "verify --dmax 2",
        "frobnicate",
    ] {
        let out = lefschetz(args);
        assert_eq!(out.code, EXIT_USAGE, "{args}");
        assert!(!out.stderr.is_empty(), "{args}");
        assert!(out.stdout.is_empty(), "{args}");
    }
}

#[test]
fn help_goes_to_stdout() {
    let out = lefschetz("--help");
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("verify"));
}

#[test]
fn verify_passes_with_bases() {
    let out = lefschetz("verify --dmax 12 --with-bases --format json");
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    let doc: VerifyDoc = serde_json::from_str(&out.stdout).unwrap();
    assert!(doc.passed && doc.agree);
    assert_eq!(doc.kernel_mismatches, Some(vec![]));
    assert!(doc.pipelines.contains(&"nullspace".to_string()));
}

#[test]
fn verify_with_lefschetz() {
    let out = lefschetz("verify --dmax 6 --with-lefschetz");
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.contains("(3,6) ok"));
    assert!(out.stdout.ends_with("result       PASS\n"));
}

#[test]
fn seeded_fault_in_any_pipeline_fails() {
    for p in [
        "partitions",
        "recursion",
        "closed-form",
        "character",
        "nullspace",
    ] {
        let out = lefschetz(&format!("verify --dmax 12 --with-bases --inject-fault {p}"));
        assert_eq!(out.code, EXIT_FAILED, "{p}");
        assert!(out.stdout.contains("disagreement at d=3 j=0"), "{p}");
        assert!(out.stdout.ends_with("result       FAIL\n"));
    }
}
