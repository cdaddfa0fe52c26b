//! End-to-end tests of the `pclatt` binary: output formats, bundled
//! fixture access, and exit codes (0 ok, 1 fatal law failure, 2 input
//! error).

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn pclatt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pclatt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = pclatt(args);
    assert!(
        out.status.success(),
        "pclatt {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn check_reports_classification() {
    let out = stdout(&["check", "fig1a"]);
    assert!(out.contains("pseudocomplemented: yes"));
    assert!(out.contains("distributive: no"));
    assert!(out.contains("stone-identity: yes"));
    assert!(out.contains("stone: no"));
    assert!(out.contains("dense: {1}"));

    let out = stdout(&["check", "fig1b"]);
    assert!(out.contains("stone: yes"));
    assert!(out.contains("brouwerian: yes"));
}

#[test]
fn check_json_is_structured() {
    let out = stdout(&["--format", "json", "check", "fig1c"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["distributive"], true);
    assert_eq!(v["stone_identity"], false);
    assert_eq!(v["stone"], false);
    assert_eq!(v["dense"], "{c,1}");
}

#[test]
fn star_table_matches_golden_rows() {
    let out = stdout(&["table", "--op", "star", "fig1b"]);
    let expect = "\
x   x*  x**
0   1   0
a   d   a
b   a   d
c   0   1
d   a   d
1   0   1
";
    assert_eq!(out, expect);
}

#[test]
fn arrow_table_matches_golden_rows() {
    let out = stdout(&["table", "--op", "arrow", "fig1a"]);
    let expect = "\
->  0   a   b   c   1
0   1   1   1   1   1
a   b   1   b   1   1
b   c   c   1   c   1
c   b   1   b   1   1
1   0   a   b   c   1
";
    assert_eq!(out, expect);
}

#[test]
fn darrow_table_row_b() {
    let out = stdout(&["table", "--op", "darrow", "fig1b"]);
    assert!(out
        .lines()
        .any(|l| l.trim_end() == "b   a   a   1   1   1   1"));
}

#[test]
fn ds_enumerations() {
    let out = stdout(&["ds", "fig1b", "--kind", "first"]);
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        [
            "{1}",
            "{c,1}",
            "{d,1}",
            "{a,c,1}",
            "{b,d,1}",
            "{b,c,d,1}",
            "{0,a,b,c,d,1}"
        ]
    );
    let out = stdout(&["ds", "fig1b", "--kind", "second"]);
    assert_eq!(
        out.lines().collect::<Vec<_>>(),
        ["{c,1}", "{a,c,1}", "{b,c,d,1}", "{0,a,b,c,d,1}"]
    );
}

#[test]
fn ds_closure_of_a_singleton() {
    assert_eq!(
        stdout(&["ds", "fig1b", "--kind", "first", "--closure", "d"]),
        "{d,1}\n"
    );
    assert_eq!(
        stdout(&["ds", "fig1b", "--kind", "second", "--closure", "d"]),
        "{b,c,d,1}\n"
    );
}

#[test]
fn cong_enumerates_partitions() {
    let out = stdout(&["cong", "fig1a"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.first(), Some(&"{0} {a} {b} {c} {1}"));
    assert_eq!(lines.last(), Some(&"{0,a,b,c,1}"));
}

#[test]
fn cong_theta_with_report() {
    let out = stdout(&["cong", "fig1b", "--theta", "c,1"]);
    assert!(out.contains("theta(A): {0} {a} {b,d} {c,1}"));
    assert!(out.contains("[1]Theta(A): {c,1}"));
    assert!(out.contains("A meet-closed: yes; transitive: holds"));
}

#[test]
fn cong_theta_rejects_non_system() {
    let out = pclatt(&["cong", "fig1b", "--theta", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a deductive system"));
}

#[test]
fn laws_exit_codes() {
    // informational failure outside the hypothesis class: exit 0
    let out = pclatt(&["laws", "fig1a", "--law", "lem1-i"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("hypothesis not met"));
    assert!(text.contains("a:=c, b:=a"));

    // everything in class passes on a Stone lattice
    let out = pclatt(&["laws", "fig1b"]);
    assert_eq!(out.status.code(), Some(0));

    let out = pclatt(&["laws", "fig1b", "--law", "no-such-law"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn laws_json_lists_all_with_flag() {
    let out = stdout(&["--format", "json", "laws", "fig1c", "--all"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), pclatt::registry().len());
    let th1vi = rows.iter().find(|r| r["law"] == "th1-vi").unwrap();
    assert_eq!(th1vi["hypothesis_met"], false);
    assert_eq!(th1vi["holds"], false);
}

#[test]
fn gen_emits_separated_lattices() {
    let out = stdout(&["gen", "--n", "4", "--dedup"]);
    let blocks: Vec<&str> = out.split("---\n").collect();
    assert_eq!(blocks.len(), 2);
    for block in blocks {
        assert!(block.starts_with("elements:"));
    }
    // the filter keeps only matching lattices
    let out = stdout(&["gen", "--n", "5", "--dedup", "--filter", "stone"]);
    let stone_count = out.split("---\n").count();
    let all_count = stdout(&["gen", "--n", "5", "--dedup"])
        .split("---\n")
        .count();
    assert!(stone_count < all_count);
}

#[test]
fn suite_json_report() {
    let dir = std::env::temp_dir().join("pclatt-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = pclatt(&["suite", "--max-n", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 fatal"));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.is_array());
    assert!(report.as_array().unwrap().iter().all(|e| {
        e.get("lattice").is_some() && e.get("law").is_some() && e.get("holds").is_some()
    }));
}

#[test]
fn export_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pclatt"))
        .args(["export", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"elements: 0 1\ncover: 0 1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "digraph lattice {\n  rankdir=BT;\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\";\n}\n"
    );
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(
        pclatt(&["check", "no-such-file.lat"]).status.code(),
        Some(2)
    );

    let mut child = Command::new(env!("CARGO_BIN_EXE_pclatt"))
        .args(["check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"elements: 0 1\ncover: 1 0\ncover: 0 1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cycle"));

    // a non-pseudocomplemented lattice has no tables to print
    let dir = std::env::temp_dir().join("pclatt-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let m3 = dir.join("m3.lat");
    std::fs::write(
        &m3,
        "elements: 0 a b c 1\ncover: 0 a\ncover: 0 b\ncover: 0 c\ncover: a 1\ncover: b 1\ncover: c 1\n",
    )
    .unwrap();
    let out = pclatt(&["table", "--op", "star", m3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no pseudocomplement"));
    // but classification still works and reports why
    let out = pclatt(&["check", m3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("pseudocomplemented: no"));
}

#[test]
fn enumeration_size_guards() {
    let dir = std::env::temp_dir().join("pclatt-cli-test");
    std::fs::create_dir_all(&dir).unwrap();

    // a 21-element chain: closure still works, enumeration refuses
    let labels: Vec<String> = (0..21).map(|i| format!("e{i}")).collect();
    let mut text = format!("elements: {}\n", labels.join(" "));
    for w in labels.windows(2) {
        text.push_str(&format!("cover: {} {}\n", w[0], w[1]));
    }
    let chain21 = dir.join("chain21.lat");
    std::fs::write(&chain21, &text).unwrap();
    let path = chain21.to_str().unwrap();
    let out = pclatt(&["ds", path, "--kind", "first"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("refusing"));
    assert_eq!(
        stdout(&["ds", path, "--kind", "first", "--closure", "e20"]),
        "{e20}\n"
    );

    // a 9-element chain: congruence enumeration refuses
    let labels: Vec<String> = (0..9).map(|i| format!("e{i}")).collect();
    let mut text = format!("elements: {}\n", labels.join(" "));
    for w in labels.windows(2) {
        text.push_str(&format!("cover: {} {}\n", w[0], w[1]));
    }
    let chain9 = dir.join("chain9.lat");
    std::fs::write(&chain9, &text).unwrap();
    let out = pclatt(&["cong", chain9.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // gen has its own ceiling
    let out = pclatt(&["gen", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
}
