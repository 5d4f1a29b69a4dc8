use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn hurwitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurwitz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/schemas")
        .join(name);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_valid(validator: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn number_examples() {
    let o = hurwitz(&["number", "-d", "5", "-e", "2,3,3,4", "--check"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "8 8"));
    let o = hurwitz(&["number", "-d", "5", "-e", "3,4,4"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "1"));
    let o = hurwitz(&["number", "-d", "4", "-e", "4,4"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "1"));
    let o = hurwitz(&["number", "-d", "4", "-e", "2,2,2,2,2,2"]);
    assert_eq!(code(&o), 0);
    let o = hurwitz(&["number", "-d", "3", "-e", "2,2,2,2", "--check"]);
    assert_eq!(stdout(&o).trim(), "4 4");
}

#[test]
fn number_rejects_bad_input() {
    // (2,2) in degree 3 fails Riemann-Hurwitz
    let o = hurwitz(&["number", "-d", "3", "-e", "2,2"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("Riemann-Hurwitz"));
    assert_eq!(code(&hurwitz(&["number", "-d", "5", "-e", "2,3,x"])), 2);
    assert_eq!(code(&hurwitz(&["number", "-d", "9", "-e", "9,9"])), 0);
    // the formula needs no enumeration; the check is outside the degree bound
    assert_eq!(code(&hurwitz(&["number", "-d", "9", "-e", "2,2,7,9"])), 0);
    assert_eq!(
        code(&hurwitz(&["number", "-d", "9", "-e", "2,2,7,9", "--check"])),
        2
    );
    assert_eq!(
        code(&hurwitz(&[
            "number",
            "-d",
            "9",
            "-e",
            "2,8,9",
            "--check",
            "--max-degree",
            "9"
        ])),
        0
    );
    assert_eq!(code(&hurwitz(&["nonsense"])), 2);
    assert_eq!(code(&hurwitz(&["--help"])), 0);
}

#[test]
fn unsorted_e_is_sorted_with_notice() {
    let o = hurwitz(&["number", "-d", "5", "-e", "4,3,2,3", "--check"]);
    assert_eq!(stdout(&o).trim(), "8 8");
    assert!(stderr(&o).contains("sorted e to 2,3,3,4"));
    let o = hurwitz(&["number", "-d", "5", "-e", "4,3,2,3", "--check", "--no-sort"]);
    assert_eq!(stdout(&o).trim(), "8 8");
    assert!(stderr(&o).is_empty());
}

#[test]
fn orbits_single() {
    let o = hurwitz(&["orbits", "-d", "3", "-e", "2,2,2,2", "--expect-single"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("orbits: 1\n"));
    assert!(out.contains("sizes: 4\n"));
    let o = hurwitz(&["orbits", "-d", "5", "-e", "3,4,4", "--expect-single"]);
    assert!(stdout(&o).contains("orbits: 1\n"));
}

#[test]
fn orbits_higher_genus_reports() {
    let o = hurwitz(&[
        "orbits",
        "-d",
        "3",
        "-e",
        "3,2",
        "--genus",
        "1",
        "--simple",
        "3",
        "--expect-single",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("g=1 e=(2,3) +3 transpositions"));
}

#[test]
fn orbits_adjacent_squares_split() {
    // without the A_13-type letters the action need not be transitive
    let o = hurwitz(&[
        "orbits",
        "-d",
        "3",
        "-e",
        "2,2,2,2",
        "--generators",
        "adjacent",
        "--expect-single",
    ]);
    let out = stdout(&o);
    let single = out.contains("orbits: 1\n");
    assert_eq!(code(&o), if single { 0 } else { 1 });
}

#[test]
fn orbit_json_matches_schema() {
    let v = schema("orbit-report.schema.json");
    for args in [
        vec![
            "orbits",
            "-d",
            "3",
            "-e",
            "2,2,2,2",
            "--json",
            "--witnesses",
        ],
        vec!["orbits", "-d", "5", "-e", "2,3,3,4", "--json"],
        vec![
            "orbits",
            "-d",
            "4",
            "-e",
            "2,2,2,2,2,2",
            "--json",
            "--generators",
            "braid",
        ],
    ] {
        let o = hurwitz(&args);
        assert_eq!(code(&o), 0);
        let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_valid(&v, &doc);
        let sizes: u64 = doc["orbit_sizes"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s.as_u64().unwrap())
            .sum();
        assert_eq!(sizes, doc["class_count"].as_u64().unwrap());
    }
}

#[test]
fn table_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let o = hurwitz(&[
        "table",
        "--dmax",
        "5",
        "--r",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("d,e1,e2,e3,e4,h_formula,h_enum,orbit_count,group_tag,degen_count")
    );
    assert!(text.lines().any(|l| l == "3,2,2,2,2,4,4,1,SYMMETRIC,2"));
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[5], cols[6], "{line}");
        assert_eq!(cols[7], "1", "{line}");
    }
}

#[test]
fn table_three_point_all_one() {
    let o = hurwitz(&["table", "--dmax", "4", "--r", "3"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert!(!rows.is_empty());
    for row in rows {
        assert_eq!(row.split(',').nth(5), Some("1"), "{row}");
    }
}

#[test]
fn table_empty_is_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    let o = hurwitz(&[
        "table",
        "--dmax",
        "2",
        "--r",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "d,e1,e2,e3,e4,h_formula,h_enum,orbit_count,group_tag,degen_count\n"
    );
}

#[test]
fn table_is_reproducible() {
    let a = hurwitz(&[
        "table",
        "--dmax",
        "6",
        "--r",
        "4",
        "--format",
        "json",
        "--workers",
        "1",
    ]);
    let b = hurwitz(&[
        "table",
        "--dmax",
        "6",
        "--r",
        "4",
        "--format",
        "json",
        "--workers",
        "3",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_valid(&schema("table.schema.json"), &doc);
}

#[test]
fn table_io_error() {
    let o = hurwitz(&[
        "table",
        "--dmax",
        "3",
        "--r",
        "4",
        "--out",
        "/nonexistent-dir/t.csv",
    ]);
    assert_eq!(code(&o), 3);
}

#[test]
fn fourpoint_list_and_classify() {
    let o = hurwitz(&["fourpoint", "-d", "3", "-e", "2,2,2,2", "list"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = hurwitz(&[
        "fourpoint",
        "classify",
        "--sigma",
        "(1 2);(1 3);(1 3);(1 2)",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("case I, k=1, l=1"));
    // not a factorization
    let o = hurwitz(&[
        "fourpoint",
        "classify",
        "--sigma",
        "(1 2);(1 3);(1 2);(1 3)",
    ]);
    assert_eq!(code(&o), 2);
    let o = hurwitz(&["fourpoint", "-d", "5", "-e", "2,3,3,4", "list", "--json"]);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid(&schema("fourpoint-list.schema.json"), &doc);
    assert_eq!(doc["count"], 8);
}

#[test]
fn fourpoint_path_reaches_base() {
    let o = hurwitz(&[
        "fourpoint",
        "-d",
        "5",
        "-e",
        "2,3,3,4",
        "path",
        "--from",
        "II,1,3",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let base = out.lines().find_map(|l| l.strip_prefix("base: ")).unwrap();
    assert!(base.starts_with("I,"));
    let last_step = out.lines().rfind(|l| l.contains(" -> ")).unwrap();
    assert!(last_step.contains(&format!("-> {base}")));
    assert!(out.lines().any(|l| l.starts_with("word: A")));
    let o = hurwitz(&[
        "fourpoint",
        "-d",
        "5",
        "-e",
        "2,3,3,4",
        "path",
        "--from",
        "II,9,3",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn degenerate_examples() {
    let o = hurwitz(&["degenerate", "-d", "4", "-e", "2,2,2,2,3", "list"]);
    assert_eq!(stdout(&o), "(1,2)\n(3,2)\n(3,4)\n");
    let o = hurwitz(&["degenerate", "-d", "3", "-e", "2,2,2,2", "list"]);
    assert_eq!(stdout(&o), "(1)\n(3)\n");
    let o = hurwitz(&[
        "degenerate",
        "-d",
        "4",
        "-e",
        "2,2,2,2,3",
        "connect",
        "--from",
        "1,2",
        "--to",
        "3,4",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("length: 2\n"));
    let o = hurwitz(&[
        "degenerate",
        "-d",
        "4",
        "-e",
        "2,2,2,2,3",
        "connect",
        "--from",
        "1,2",
        "--to",
        "3,4",
        "--bfs",
    ]);
    assert!(stdout(&o).ends_with("length: 2\n"));
    // the problem is required
    let o = hurwitz(&["degenerate", "connect", "--from", "1,2", "--to", "3,4"]);
    assert_eq!(code(&o), 2);
    // (2,2) is not a valid sequence
    let o = hurwitz(&[
        "degenerate",
        "-d",
        "4",
        "-e",
        "2,2,2,2,3",
        "connect",
        "--from",
        "2,2",
        "--to",
        "3,4",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn config_file_and_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.conf");
    std::fs::write(&cfg, "max_degree = 4\nworkers = 1\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    let o = hurwitz(&[
        "--config", cfg, "number", "-d", "5", "-e", "2,3,3,4", "--check",
    ]);
    assert_eq!(code(&o), 2);
    let o = hurwitz(&[
        "--config",
        cfg,
        "--max-degree",
        "5",
        "number",
        "-d",
        "5",
        "-e",
        "2,3,3,4",
        "--check",
    ]);
    assert_eq!(stdout(&o).trim(), "8 8");
    let o = hurwitz(&[
        "--config",
        "/nonexistent/run.conf",
        "number",
        "-d",
        "5",
        "-e",
        "3,4,4",
    ]);
    assert_eq!(code(&o), 3);
    std::fs::write(dir.path().join("bad.conf"), "speed = 11\n").unwrap();
    let o = hurwitz(&[
        "--config",
        dir.path().join("bad.conf").to_str().unwrap(),
        "number",
        "-d",
        "5",
        "-e",
        "3,4,4",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn factorization_json_matches_schema() {
    use hurwitz_core::explicit::three_point_factorization;
    let v = schema("factorization.schema.json");
    let f = three_point_factorization(5, 3, 4, 4).unwrap();
    let doc = serde_json::to_value(f.to_json()).unwrap();
    assert_valid(&v, &doc);
    assert!(!v.is_valid(&serde_json::json!({"d": 3, "genus": 0, "e": [2], "sigma": []})));
}
