use std::path::{Path, PathBuf};
use std::process::Command;

use hombi_core::constructions::{dualize, opposite, OppositeVariant};
use hombi_core::document::Document;
use hombi_core::fixtures;
use hombi_core::linalg::rat;
use hombi_core::structures::{check_hom_algebra, EpsHomBialgebra, Structure};
use serde_json::Value;

fn samples() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn hombi(args: &[&str], dir: &Path) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_hombi"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn in_samples(args: &[&str]) -> Run {
    hombi(args, &samples())
}

fn structure_fields(text: &str) -> Value {
    let mut v: Value = serde_json::from_str(text).unwrap();
    let o = v.as_object_mut().unwrap();
    o.remove("name");
    o.remove("provenance");
    v
}

fn bialgebra(doc: &Document) -> &EpsHomBialgebra {
    match &doc.structure {
        Structure::Bialgebra(b) => b,
        _ => panic!("not a bialgebra"),
    }
}

#[test]
fn verify_kronecker_passes() {
    let run = in_samples(&["verify", "f2-kronecker.json"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert!(run.stdout.contains("cocycle                      pass"));
    assert!(run.stdout.ends_with("result: pass\n"));
}

#[test]
fn corrupted_product_fails_with_the_oracle_witness() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(samples().join("f2-kronecker.json")).unwrap();
    let mut v: Value = serde_json::from_str(&text).unwrap();
    v["mu"][0]["c"] = Value::from("2");
    std::fs::write(dir.path().join("bad.json"), v.to_string()).unwrap();

    let doc = Document::parse(&v.to_string()).unwrap();
    let oracle = check_hom_algebra(bialgebra(&doc).algebra());
    let w = oracle.first_failure().unwrap().witness.clone().unwrap();

    let run = hombi(&["verify", "bad.json"], dir.path());
    assert_eq!(run.code, 1);
    assert!(run.stdout.contains(&format!("FAIL at basis tuple {:?}", w.tuple)), "{}", run.stdout);

    let run = hombi(&["verify", "bad.json", "--format", "json"], dir.path());
    let report: Value = serde_json::from_str(&run.stdout).unwrap();
    assert_eq!(report["result"], "fail");
    let failing: Vec<&Value> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "fail")
        .collect();
    assert_eq!(failing[0]["witness"]["tuple"], serde_json::json!(w.tuple));
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = r#"{"name": "z", "kind": "hom_algebra", "basis": ["a"], "mu": [{"i": 0, "j": 0, "k": 0, "c": "1/0"}]}"#;
    std::fs::write(dir.path().join("z.json"), bad).unwrap();
    let run = hombi(&["verify", "z.json"], dir.path());
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("1/0"), "{}", run.stderr);
    assert_eq!(hombi(&["verify", "missing.json"], dir.path()).code, 2);
    std::fs::write(dir.path().join("trunc.json"), "{\"name\": \"z\",\n  \"kind\": ").unwrap();
    let run = hombi(&["verify", "trunc.json"], dir.path());
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 2"), "{}", run.stderr);
}

#[test]
fn derive_recovers_the_kronecker_path_bialgebra() {
    let dir = tempfile::tempdir().unwrap();
    let q = samples().join("kronecker.quiver");
    let m = samples().join("kronecker-permute.morphism");
    let run = hombi(
        &["quiver", "build", q.to_str().unwrap(), "--morphism", m.to_str().unwrap(), "--out", "kp.json"],
        dir.path(),
    );
    assert_eq!(run.code, 0, "{}", run.stderr);
    let run = hombi(&["construct", "derive", "kp.json", "--n", "1", "--format", "json"], dir.path());
    assert_eq!(run.code, 0, "{}", run.stderr);
    let plain = Document::new("k", Structure::Bialgebra(fixtures::f2())).to_json_string();
    assert_eq!(structure_fields(&run.stdout), structure_fields(&plain));
    let doc = Document::parse(&run.stdout).unwrap();
    assert_eq!(doc.provenance.as_deref(), Some("twist(kronecker-permute) → derive(1)"));
}

#[test]
fn hom_lie_on_the_coboundary_document() {
    let run = in_samples(&["construct", "hom-lie", "f4-coboundary.json"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert!(run.stdout.contains("\n[x,y] = -x\n"));
    assert!(run.stdout.contains("\nδ(x) = 0\n"));
    assert!(run.stdout.contains("\nδ(y) = -x⊗y + y⊗x\n"));
}

#[test]
fn zero_perturbation_is_the_identity() {
    for doc in ["f4-coboundary.json", "f1-dual-numbers.json"] {
        let run = in_samples(&["construct", "perturb", doc, "--r", "zero-r-2.json", "--format", "json"]);
        assert_eq!(run.code, 0, "{}", run.stderr);
        let input = std::fs::read_to_string(samples().join(doc)).unwrap();
        assert_eq!(structure_fields(&run.stdout), structure_fields(&input));
    }
}

#[test]
fn report_suites() {
    let run = in_samples(&["report", "f4-coboundary.json"]);
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert!(!run.stdout.contains("skipped"));
    assert!(!run.stdout.contains("FAIL"));

    let run = in_samples(&["report", "f5-truncated.json", "--format", "json"]);
    assert_eq!(run.code, 0);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    for c in v["checks"].as_array().unwrap() {
        let expected = match c["axiom"].as_str().unwrap() {
            "deltaB" | "Btp" | "Btp2" => "pass",
            _ => "skipped",
        };
        assert_eq!(c["verdict"], expected, "{c}");
    }

    assert_eq!(in_samples(&["report", "f4-algebra.json"]).code, 2);
}

#[test]
fn refused_constructions_exit_one() {
    // x ↦ −x is not an endomorphism of the dual numbers with Δ(x) = x⊗x.
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("neg.json"), r#"{"map": [["1", "0"], ["0", "-1"]]}"#).unwrap();
    let doc = samples().join("f1-dual-numbers.json");
    let run = hombi(&["construct", "twist", doc.to_str().unwrap(), "--morphism", "neg.json"], dir.path());
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("commutes_with_delta"), "{}", run.stderr);

    // y⊗y is not fixed by α when c ≠ 0.
    std::fs::write(dir.path().join("yy.json"), r#"{"r": [{"i": 1, "j": 1, "c": "1"}]}"#).unwrap();
    let alg = samples().join("f4-algebra.json");
    let run = hombi(&["construct", "coboundary-from-r", alg.to_str().unwrap(), "--r", "yy.json"], dir.path());
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("not fixed"), "{}", run.stderr);

    // 1⊗x is not anti-symmetric, but F6 still has a symmetric-balanceator Hom-Lie bialgebra.
    let run = in_samples(&["construct", "hom-lie", "f6-square-zero.json"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    // The Kronecker path bialgebra has an asymmetric balanceator.
    let run = in_samples(&["construct", "hom-lie", "f2-kronecker.json", "--format", "json"]);
    assert_eq!(run.code, 1);
    let v: Value = serde_json::from_str(&run.stdout).unwrap();
    assert!(v["error"].as_str().unwrap().contains("balanceator"));
}

#[test]
fn json_documents_round_trip() {
    let run = in_samples(&["construct", "dual", "f3-triangular.json", "--format", "json"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc = Document::parse(&run.stdout).unwrap();
    assert_eq!(*bialgebra(&doc), dualize(&fixtures::f3()));
    assert_eq!(doc.to_json_string(), run.stdout);
}

#[test]
fn opposite_twice_is_the_identity() {
    let dir = tempfile::tempdir().unwrap();
    let src = samples().join("f4-coboundary.json");
    let run = hombi(&["construct", "opposite", src.to_str().unwrap(), "--variant", "op", "--out", "op.json"], dir.path());
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc = Document::parse(&std::fs::read_to_string(dir.path().join("op.json")).unwrap()).unwrap();
    let once = opposite(&fixtures::f4_coboundary(&hombi_core::linalg::ratio(1, 2)), OppositeVariant::Op);
    assert_eq!(*bialgebra(&doc), once);
    let run = hombi(&["construct", "opposite", "op.json", "--variant", "op", "--format", "json"], dir.path());
    let twice = Document::parse(&run.stdout).unwrap();
    let original = fixtures::f4_coboundary(&hombi_core::linalg::ratio(1, 2));
    assert_eq!(bialgebra(&twice).mu(), original.mu());
    assert_eq!(bialgebra(&twice).delta(), original.delta());
}

#[test]
fn twisting_the_dual_numbers_by_the_scalar_map() {
    let run = in_samples(&["construct", "twist", "f1-dual-numbers.json", "--morphism", "f1-scalar.map.json", "--format", "json"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let doc = Document::parse(&run.stdout).unwrap();
    let b = bialgebra(&doc);
    assert!(b.delta().is_zero());
    assert_eq!(b.mu().get(0, 0, 0), &rat(1));
    assert_eq!(b.mu().constants().iter().filter(|c| **c != rat(0)).count(), 1);
}

#[test]
fn quiver_input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("cyc.quiver"), "vertex a\narrow f : a -> a\n").unwrap();
    let run = hombi(&["quiver", "build", "cyc.quiver"], dir.path());
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("cycle"), "{}", run.stderr);
    std::fs::write(dir.path().join("bad.quiver"), "vertex a\narow f : a -> a\n").unwrap();
    let run = hombi(&["quiver", "build", "bad.quiver"], dir.path());
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("line 2"), "{}", run.stderr);
}

#[test]
fn construct_quiver_build_matches_the_quiver_command() {
    let a = in_samples(&["construct", "quiver-build", "triangular.quiver", "--format", "json"]);
    let b = in_samples(&["quiver", "build", "triangular.quiver", "--format", "json"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let doc = Document::parse(&a.stdout).unwrap();
    assert_eq!(*bialgebra(&doc), fixtures::f3());
}
