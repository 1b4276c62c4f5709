use std::path::Path;
use std::process::{Command, Output};

fn flagmap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagmap"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn klein_bottle_quotient_is_unstable_with_index_4() {
    let dir = tempfile::tempdir().unwrap();
    let torus = dir.path().join("torus.json");
    let kb = dir.path().join("kb.json");
    let o = flagmap(&[
        "build",
        "torus44",
        "--lattice",
        "diag",
        "--m",
        "1",
        "-o",
        path(&torus),
    ]);
    assert!(o.status.success());
    let o = flagmap(&[
        "quotient",
        path(&torus),
        "--glide",
        "diag",
        "--m",
        "1",
        "-o",
        path(&kb),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let o = flagmap(&["analyze", path(&kb)]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["summary"]["stable"], false);
    assert_eq!(v["summary"]["index"], 4);
    assert_eq!(v["summary"]["baseAut"], 8);
    assert_eq!(v["invariants"]["flags"], 32);
}

#[test]
fn quotient_by_cycles_matches_named_reflection() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    assert!(flagmap(&["build", "semistar", "--n", "1", "-o", path(&h)])
        .status
        .success());
    // the semi-star with one semi-edge has two flags swapped by its reflection
    let named = flagmap(&["quotient", path(&h), "--reflection", "semistar", "--n", "1"]);
    let cycles = flagmap(&["quotient", path(&h), "--auto", "(1,2)"]);
    assert!(named.status.success() && cycles.status.success());
    assert_eq!(stdout(&named), stdout(&cycles));
    assert!(stdout(&named).contains("\"flags\":1"));
}

#[test]
fn cover_of_orientable_closed_map_fails_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    assert!(
        flagmap(&["build", "hosohedron", "--n", "3", "-o", path(&h)])
            .status
            .success()
    );
    let o = flagmap(&["cover", path(&h)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("already orientable"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(flagmap(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(flagmap(&["census"]).status.code(), Some(2));
    assert_eq!(flagmap(&["op", "twist", "x.json"]).status.code(), Some(2));
}

#[test]
fn malformed_input_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    std::fs::write(
        &f,
        r#"{"kind":"map","flags":3,"r0":[1,2,0],"r1":[0,1,2],"r2":[0,1,2]}"#,
    )
    .unwrap();
    let o = flagmap(&["analyze", path(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("non-involution"));
}

#[test]
fn operations_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    let d = dir.path().join("d.json");
    assert!(
        flagmap(&["build", "hosohedron", "--n", "4", "-o", path(&h)])
            .status
            .success()
    );
    assert!(flagmap(&["op", "dual", path(&h), "-o", path(&d)])
        .status
        .success());
    let o = flagmap(&["analyze", path(&d)]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["invariants"]["vertices"], 4);
    assert_eq!(v["invariants"]["faces"], 2);
    assert!(v["stability"].is_null());
    let o = flagmap(&["op", "petrie", path(&h)]);
    assert!(o.status.success());
    let dot = stdout(&flagmap(&["export-dot", path(&h)]));
    assert!(dot.starts_with("graph flags {") && dot.contains("label=\"r1\""));
}

#[test]
fn census_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for f in [&a, &b] {
        let o = flagmap(&[
            "census",
            "--max-flags",
            "6",
            "--kind",
            "hypermap",
            "--out",
            path(f),
        ]);
        assert!(o.status.success());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("flags,vertices,edges,faces,chi,"));
    let summary = stdout(&flagmap(&["census", "--max-flags", "4", "--summary"]));
    assert_eq!(summary.lines().nth(1), Some("1,1,1,0,0"));
}

#[test]
fn sym_table() {
    let o = flagmap(&["sym", "--n", "11"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cells"]["chi"], "-4838400");
    assert_eq!(v["analyses"][0]["autOrder"], "2880");
    let o = flagmap(&["sym", "--n", "11", "--hypermap", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 2);
    assert_eq!(flagmap(&["sym", "--n", "12"]).status.code(), Some(1));
}

#[test]
fn verify_paper_prints_one_line_per_criterion() {
    let o = flagmap(&["verify-paper"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 10);
    let all_pass = lines.iter().all(|l| l.starts_with("[PASS]"));
    assert_eq!(o.status.code(), Some(if all_pass { 0 } else { 1 }));
}
