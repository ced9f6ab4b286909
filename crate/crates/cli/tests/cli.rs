//! End-to-end tests of the binary: exit codes, report documents, and the
//! canonical file format.

use std::path::PathBuf;
use std::process::{Command, Output};

use liya::problem::ProblemFile;
use liya::report_doc::ReportDocument;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liya"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn doc_of(out: &Output) -> ReportDocument {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is a report document: {e}\n{}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn verify_fixtures_pass_with_exit_zero() {
    for name in ["two_dim.lya", "four_dim.lya", "empty.lya"] {
        let out = run(&["verify", fixture(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}: {out:?}");
        let doc = doc_of(&out);
        assert!(doc.passed());
        assert!(doc.checks.iter().all(|c| c.passed));
    }
}

#[test]
fn verify_broken_axiom_fails_with_named_axiom() {
    let out = run(&["verify", fixture("broken_axiom.lya").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let doc = doc_of(&out);
    assert_eq!(doc.status, "fail");
    let failed = doc
        .checks
        .iter()
        .find(|c| c.name == "axiom3_binary_derivation")
        .unwrap();
    assert!(!failed.passed);
    let ce = failed.counterexample.as_ref().unwrap();
    assert!(!ce.tuple.is_empty());
    assert!(ce.tuple.iter().all(|&i| i >= 1), "file indices are 1-based");
}

#[test]
fn parse_errors_exit_two_with_location() {
    let dir = std::env::temp_dir().join("liya-test-parse");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.lya");
    std::fs::write(&bad, "{ \"algebra\": { \"dimension\": 2, }").unwrap();
    let out = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line") && err.contains("column"), "{err}");

    // Zero denominators and inverted index pairs are input errors too.
    let zero_den = dir.join("zero_den.lya");
    std::fs::write(
        &zero_den,
        r#"{ "algebra": { "dimension": 2, "binary": [ {"i":1, "j":2, "value": ["1/0", "0"]} ] } }"#,
    )
    .unwrap();
    let out = run(&["verify", zero_den.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero denominator"));

    let inverted = dir.join("inverted.lya");
    std::fs::write(
        &inverted,
        r#"{ "algebra": { "dimension": 2, "binary": [ {"i":2, "j":1, "value": ["1", "0"]} ] } }"#,
    )
    .unwrap();
    let out = run(&["verify", inverted.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("i < j"));
}

#[test]
fn rb_check_passes_family_and_flags_disagreements_never() {
    let out = run(&[
        "rb-check",
        fixture("two_dim.lya").to_str().unwrap(),
        "--adjoint",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let doc = doc_of(&out);
    for name in [
        "rb_binary",
        "rb_ternary",
        "strict_mc_l2",
        "strict_mc_l3",
        "oracle_agreement_direct_vs_strict_mc",
    ] {
        assert!(
            doc.checks.iter().any(|c| c.name == name && c.passed),
            "missing or failing check {name}"
        );
    }

    let out = run(&[
        "rb-check",
        fixture("bad_operator.lya").to_str().unwrap(),
        "--adjoint",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let doc = doc_of(&out);
    assert!(doc
        .checks
        .iter()
        .any(|c| c.name == "oracle_agreement_direct_vs_strict_mc" && c.passed));

    // Missing operator section is an input error.
    let out = run(&[
        "rb-check",
        fixture("broken_axiom.lya").to_str().unwrap(),
        "--adjoint",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cohomology_tables_and_caps() {
    let file = fixture("two_dim.lya");
    let out = run(&[
        "cohomology",
        file.to_str().unwrap(),
        "--level",
        "2",
        "--complex",
        "rb",
        "--adjoint",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc = doc_of(&out);
    assert_eq!(doc.tables.len(), 2);
    for row in &doc.tables {
        assert_eq!(row.dim_cohomology, row.dim_cocycles - row.dim_coboundaries);
        assert!(row.dim_cocycles <= row.dim_cochains);
    }
    assert_eq!(doc.tables[0].dim_cochains, 4);

    // Deterministic across runs.
    let again = doc_of(&run(&[
        "cohomology",
        file.to_str().unwrap(),
        "--level",
        "2",
        "--complex",
        "rb",
        "--adjoint",
    ]));
    assert_eq!(doc.tables, again.tables);

    // The classical complex of the fixture with the adjoint action.
    let out = run(&[
        "cohomology",
        file.to_str().unwrap(),
        "--level",
        "3",
        "--complex",
        "yamaguti",
        "--adjoint",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = doc_of(&out);
    assert_eq!(doc.tables.len(), 2); // levels 2 and 3
    assert_eq!(
        (
            doc.tables[0].dim_cocycles,
            doc.tables[0].dim_coboundaries,
            doc.tables[0].dim_cohomology
        ),
        (3, 2, 1)
    );

    // Levels beyond the cap exit with the resource code and suggest the
    // override flag, which then works.
    let out = run(&[
        "cohomology",
        file.to_str().unwrap(),
        "--level",
        "5",
        "--complex",
        "rb",
        "--adjoint",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("max_level"));
    let out = run(&[
        "cohomology",
        file.to_str().unwrap(),
        "--level",
        "5",
        "--complex",
        "rb",
        "--adjoint",
        "--max-level",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn deform_subcommands() {
    let file = fixture("two_dim.lya");
    for action in ["nijenhuis", "check-linear", "order-n"] {
        let out = run(&["deform", file.to_str().unwrap(), action, "--adjoint"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{action}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(doc_of(&out).passed());
    }
    let out = run(&["deform", file.to_str().unwrap(), "obstruction", "--adjoint"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = doc_of(&out);
    assert!(doc.passed());
    let ext = doc.extension.expect("extension emitted");
    assert_eq!(ext.len(), 2);

    // 4-dim fixture: the zero tail extends by zero.
    let out = run(&[
        "deform",
        fixture("four_dim.lya").to_str().unwrap(),
        "obstruction",
        "--adjoint",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = doc_of(&out);
    let ext = doc.extension.expect("extension emitted");
    assert!(ext.iter().flatten().all(|s| s == "0"));

    // Unverified base operator: input error.
    let out = run(&[
        "deform",
        fixture("bad_operator.lya").to_str().unwrap(),
        "nijenhuis",
        "--adjoint",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_is_deterministic_given_seed() {
    let a = run(&["selftest", "--seed", "7", "--dims", "2,2", "--degree", "2"]);
    assert_eq!(
        a.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&a.stderr)
    );
    let b = run(&["selftest", "--seed", "7", "--dims", "2,2", "--degree", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let doc = doc_of(&a);
    assert!(doc.passed());
    assert!(doc
        .checks
        .iter()
        .all(|c| c.note.as_deref().is_none_or(|n| n.contains("samples"))));

    // Degenerate dims pass vacuously; a modest 3,2 run stays in budget.
    let out = run(&["selftest", "--seed", "1", "--dims", "1,1", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["selftest", "--seed", "1", "--dims", "3,2", "--degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn text_format_renders_tables() {
    let out = run(&[
        "cohomology",
        fixture("two_dim.lya").to_str().unwrap(),
        "--level",
        "1",
        "--complex",
        "rb",
        "--adjoint",
        "--format",
        "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("dim C") && text.contains("dim H"), "{text}");
}

#[test]
fn problem_files_round_trip_semantically() {
    for name in ["two_dim.lya", "four_dim.lya"] {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        let pf = ProblemFile::from_json(&text).unwrap();
        let alg = pf.algebra().unwrap();
        let re = ProblemFile::from_json(&pf.to_json()).unwrap();
        assert_eq!(re.algebra().unwrap(), alg, "{name}");
        // The canonical sparse section regenerates the same constants.
        let section = liya::problem::algebra_to_section(&alg);
        let regen = ProblemFile {
            algebra: section,
            representation: None,
            operator: None,
            deformation: None,
            wedge_element: None,
        };
        assert_eq!(regen.algebra().unwrap(), alg, "{name}");
    }
}

#[test]
fn report_documents_round_trip_losslessly() {
    let out = run(&[
        "rb-check",
        fixture("two_dim.lya").to_str().unwrap(),
        "--adjoint",
    ]);
    let doc = doc_of(&out);
    let json = doc.to_json();
    let re: ReportDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(json, re.to_json());
}
