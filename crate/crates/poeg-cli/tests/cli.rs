//! End-to-end checks of the binary: output formats, determinism, exit codes.

use std::process::{Command, Output};

fn poeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = poeg(args);
    assert!(
        out.status.success(),
        "poeg {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn strip_wall_ms(v: &mut serde_json::Value) {
    if let Some(obj) = v.as_object_mut() {
        obj.remove("wall_ms");
    }
}

#[test]
fn laplacian_text_and_csv() {
    let text = stdout(&["laplacian", "--group", "Z:9"]);
    assert!(text.contains("kind: laplacian"));
    assert!(text.contains("(0, 2) (1, 3) (3, 3) (4, 1)"));
    assert!(text.contains("integral: true"));

    let csv = stdout(&["laplacian", "--group", "Z:9", "--csv"]);
    assert_eq!(csv, "eigenvalue,multiplicity\n0,2\n1,3\n3,3\n4,1\n");
}

#[test]
fn spectrum_json_is_deterministic_modulo_wall_time() {
    let a = stdout(&["spectrum", "--group", "Z:2xZ:4", "--json"]);
    let b = stdout(&["spectrum", "--group", "Z:2xZ:4", "--json"]);
    let mut ja: serde_json::Value = serde_json::from_str(&a).unwrap();
    let mut jb: serde_json::Value = serde_json::from_str(&b).unwrap();
    strip_wall_ms(&mut ja);
    strip_wall_ms(&mut jb);
    assert_eq!(ja, jb);
    assert_eq!(ja["command"], "spectrum");
    assert_eq!(ja["group"], "Z:2xZ:4");
    assert_eq!(ja["payload"]["integral"], true);
}

#[test]
fn graph_dot_output() {
    let dot = stdout(&["graph", "--group", "Z:5", "--dot"]);
    assert!(dot.starts_with("graph \"Z:5\""));
    assert!(dot.contains("0 -- 1;"));
    assert!(!dot.contains("1 -- 4;"));
    // repeated emission is byte-identical
    assert_eq!(dot, stdout(&["graph", "--group", "Z:5", "--dot"]));
}

#[test]
fn components_and_planar_payloads() {
    let out = stdout(&["components", "--group", "Z:8xZ:2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let labels: Vec<&str> = v["payload"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["label"].as_str().unwrap())
        .collect();
    assert_eq!(labels, vec!["CLIQUE(4)", "CUBE", "CYCLE4"]);

    let out = stdout(&["planar", "--group", "Z:27", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["planar"], true);
    assert_eq!(
        v["payload"]["clauses"].as_array().unwrap()[0],
        "cyclic-3-group"
    );
}

#[test]
fn laplacian_brute_force_path_for_non_abelian_groups() {
    let out = stdout(&["laplacian", "--group", "D:4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["integral"], true);
    assert_eq!(v["payload"]["n"], 8);
    // the whole catalog is Laplacian integral so far; D4 follows suit
    let mult: Vec<(i64, u64)> = v["payload"]["eigenvalues"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| (p[0].as_i64().unwrap(), p[1].as_u64().unwrap()))
        .collect();
    let total: u64 = mult.iter().map(|&(_, m)| m).sum();
    assert_eq!(total, 8);
}

#[test]
fn clique_payload() {
    let out = stdout(&["clique", "--group", "Z:25", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["payload"]["omega"], 3);
    assert_eq!(v["payload"]["closed_form"], 3);
    assert_eq!(v["payload"]["closed_form_matches"], true);
}

#[test]
fn cayley_table_file_loading() {
    let dir = std::env::temp_dir().join("poeg-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("z3.table");
    std::fs::write(&path, "order 3\ntable\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
    let arg = format!("table:{}", path.display());
    let out = stdout(&["spectrum", "--group", &arg, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    // Z3 poeg graph is the path 1-0-2: eigenvalues 0, +-sqrt(2)
    assert_eq!(v["payload"]["integral"], false);

    // invalid table -> usage error naming the axiom
    let bad = dir.join("bad.table");
    std::fs::write(&bad, "order 2\ntable\n1 0\n0 1\n").unwrap();
    let out = poeg(&["spectrum", "--group", &format!("table:{}", bad.display())]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("identity"));
}

#[test]
fn verify_suites_pass_with_exit_zero() {
    for (suite, cap) in [
        ("integral-2group", "32"),
        ("irrational-cyclic-p", "49"),
        ("laplacian-abelian", "24"),
        ("lspec-zpr", "49"),
        ("lspec-zn-odd", "45"),
        ("planarity", "16"),
        ("clique", "27"),
    ] {
        let out = poeg(&["verify", suite, "--max-order", cap]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "suite {suite}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("PASS"), "{suite}: {text}");
        assert!(text.contains("0 failed"), "{suite}: {text}");
    }
}

#[test]
fn verify_conjectures_reports_findings() {
    let out = poeg(&["verify", "conjectures", "--max-order", "20", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["payload"]["findings_only"], true);
    assert_eq!(v["payload"]["failed"], 0);
    let results = v["payload"]["results"].as_array().unwrap();
    assert!(!results.is_empty());
    for r in results {
        let d = r["detail"].as_str().unwrap();
        assert!(d.contains("adjacency_irrational="), "{d}");
        assert!(d.contains("laplacian_integral="), "{d}");
    }
    // results sorted by group descriptor
    let groups: Vec<&str> = results
        .iter()
        .map(|r| r["group"].as_str().unwrap())
        .collect();
    let mut sorted = groups.clone();
    sorted.sort();
    assert_eq!(groups, sorted);
}

#[test]
fn usage_errors_exit_two() {
    let out = poeg(&["verify", "bogus-suite"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("valid suites"));

    let out = poeg(&["spectrum", "--group", "Q:8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Q:8"));

    let out = poeg(&["spectrum", "--group", "Z:400"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-order"));

    // clap maps bad flags to exit 2 as well
    let out = poeg(&["spectrum", "--nope"]);
    assert_eq!(out.status.code(), Some(2));

    let out = poeg(&["verify", "clique", "--max-order", "9999"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph size cap"));
}

#[test]
fn max_order_override_allows_bigger_spectra() {
    let out = poeg(&[
        "spectrum",
        "--group",
        "Z:343",
        "--max-order",
        "343",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(v["payload"]["integral"], false);
    assert_eq!(v["payload"]["n"], 343);
}
