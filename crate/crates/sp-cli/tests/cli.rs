//! End-to-end tests of the `sp` binary: file formats, report keys, exit
//! codes, and the determinism contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn write_file(name: &str, content: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let path = dir.join(name);
    std::fs::write(&path, content).expect("write temp file");
    path
}

fn sp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

const D30: &str = "name D30\ndegree 15\n\
gen (0 1 2 3 4 5 6 7 8 9 10 11 12 13 14)\n\
gen (1 14)(2 13)(3 12)(4 11)(5 10)(6 9)(7 8)\n\
stab (1 14)(2 13)(3 12)(4 11)(5 10)(6 9)(7 8)\n";

const D8_ON_4: &str = "degree 4\ngen (0 1 2 3)\ngen (1 3)\nstab (1 3)\n";

#[test]
fn check_d30_reports_semiprimitive() {
    let f = write_file("d30.grp", D30);
    let out = sp(&["check", f.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("semiprimitive: yes"));
    assert!(text.contains("plinth_count: 1"));
    assert!(text.contains("plinth_orders: 15"));
    assert!(text.contains("primitive: no"));
}

#[test]
fn check_d8_reports_witness() {
    let f = write_file("d8.grp", D8_ON_4);
    let out = sp(&["check", f.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("semiprimitive: no"));
    assert!(text.contains("witness_order: 4"));
    assert!(text.contains("witness_gen_0:"));
}

#[test]
fn glue_d6_d10_gives_d30() {
    let f1 = write_file("d6.grp", "degree 3\ngen (0 1 2)\ngen (1 2)\nstab (1 2)\n");
    let f2 = write_file(
        "d10.grp",
        "degree 5\ngen (0 1 2 3 4)\ngen (1 4)(2 3)\nstab (1 4)(2 3)\n",
    );
    let out = sp(&["glue", f1.to_str().unwrap(), f2.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 30"));
    assert!(text.contains("degree: 15"));
    assert!(text.contains("isomorphic_to_dihedral: proven_yes"));
}

#[test]
fn parse_error_exits_one() {
    let f = write_file("bad.grp", "degree 3\ngen (0 1 5)\n");
    let out = sp(&["check", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
}

#[test]
fn usage_error_exits_one() {
    let out = sp(&["not-a-command"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn capacity_exits_two() {
    let f = write_file("d30cap.grp", D30);
    let out = sp(&["--order-cap", "4", "check", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    let f = write_file("d30det.grp", D30);
    let a = sp(&["--porcelain", "check", f.to_str().unwrap()]);
    let b = sp(&["--porcelain", "check", f.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("format: 1\n"));
}

#[test]
fn classify_d30() {
    let f = write_file("d30cls.grp", D30);
    let out = sp(&["classify", f.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("case: a_ii"));
    assert!(text.contains("quotient_types: HA,HA"));
    assert!(text.contains("glue_witness: proven_yes"));
}

#[test]
fn quotient_by_c5() {
    let f = write_file("d30quo.grp", D30);
    let out = sp(&[
        "quotient",
        f.to_str().unwrap(),
        "--normal",
        "(0 3 6 9 12)(1 4 7 10 13)(2 5 8 11 14)",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree: 3"));
    assert!(text.contains("stabilizer_order: 2"));
    assert!(text.contains("semiprimitive: yes"));
}

#[test]
fn triple_validate_build_roundtrip() {
    let t = write_file("c3.trip", "K:\ndegree 3\ngen (0 1 2)\naut:\n(0 2 1)\nL:\n");
    let out = sp(&["triple", "validate", t.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("valid: yes"));

    let out = sp(&["triple", "build", t.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree: 3"));
    assert!(text.contains("order: 6"));
}

#[test]
fn triple_invalid_c4() {
    let t = write_file("c4.trip", "K:\ndegree 4\ngen (0 1 2 3)\naut:\n(0 3 2 1)\nL:\n");
    let out = sp(&["triple", "validate", t.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("valid: no"));
    assert!(text.contains("failed_condition: 1"));
}

#[test]
fn triple_extract_roundtrips_through_build() {
    let f = write_file("d30ext.grp", D30);
    let out = sp(&["triple", "extract", f.to_str().unwrap()]);
    assert!(out.status.success());
    let triple_text = stdout(&out);
    assert!(triple_text.contains("K:"));
    let t = write_file("d30ext.trip", &triple_text);
    let out = sp(&["triple", "build", t.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 30"));
    assert!(text.contains("degree: 15"));
}

#[test]
fn bad_aut_line_is_rejected() {
    // The generator image has the wrong order, so no automorphism exists.
    let t = write_file("bad.trip", "K:\ndegree 4\ngen (0 1 2 3)\naut:\n(0 2)(1 3)\nL:\n");
    let out = sp(&["triple", "validate", t.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn isocheck_d30_files() {
    let f1 = write_file("iso1.grp", D30);
    // The same dihedral action with every point shifted by one.
    let relabeled = "degree 15\n\
gen (1 2 3 4 5 6 7 8 9 10 11 12 13 14 0)\n\
gen (2 0)(3 14)(4 13)(5 12)(6 11)(7 10)(8 9)\n\
stab (2 0)(3 14)(4 13)(5 12)(6 11)(7 10)(8 9)\n";
    let f2 = write_file("iso2.grp", relabeled);
    let out = sp(&["isocheck", f1.to_str().unwrap(), f2.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("outcome: proven_yes"));
}

#[test]
fn wreath_product_mode() {
    let fm = write_file("sym3.grp", "degree 3\ngen (0 1 2)\ngen (1 2)\nstab (1 2)\n");
    let ft = write_file("c2.grp", "degree 2\ngen (0 1)\n");
    let out = sp(&[
        "wreath",
        fm.to_str().unwrap(),
        ft.to_str().unwrap(),
        "--mode",
        "product",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("criterion_semiprimitive: yes"));
    assert!(text.contains("degree: 9"));
    assert!(text.contains("order: 72"));
    assert!(text.contains("semiprimitive: yes"));
}

#[test]
fn corpus_run_filtered() {
    let out = sp(&["corpus", "run", "--filter", "sym3_on_3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("entry_sym3_on_3: PASS"));
    assert!(text.contains("result: PASS"));
}
