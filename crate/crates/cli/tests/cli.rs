use std::path::PathBuf;
use std::process::{Command, Output};

fn qhankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhankel"))
        .args(args)
        .env_remove("QHANKEL_CACHE")
        .env_remove("QHANKEL_OEIS_URL")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

#[test]
fn listed_examples() {
    let out = qhankel(&["r", "--m", "1", "--n", "1", "--format", "text"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "-1 + q + q^2\n");
    assert_eq!(stdout(&qhankel(&["u", "--n", "2"])), "1 - q\n");
    assert_eq!(stdout(&qhankel(&["r", "--m", "1", "--n", "3", "--q", "2"])), "709\n");
}

#[test]
fn diagnostics_stay_off_stdout() {
    let out = qhankel(&["u", "--n", "3"]);
    assert_eq!(stdout(&out), "-1 + 2*q - q^3\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("elapsed"));
}

#[test]
fn compute_is_deterministic_in_every_format() {
    for format in ["text", "json", "csv"] {
        let args = ["r", "--m", "2", "--n", "0", "--to", "4", "--format", format];
        let a = qhankel(&args);
        let b = qhankel(&args);
        assert!(a.status.success(), "{format}");
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn json_round_trips_for_negative_m() {
    let out = qhankel(&["d", "--m", "-3", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let text = v["text"].as_str().unwrap().to_string();
    let again = qhankel(&["d", "--m", "-3", "--n", "4", "--route", "det"]);
    assert_eq!(stdout(&again).trim_end(), text);
}

#[test]
fn exit_codes() {
    assert_eq!(qhankel(&["r", "--n", "1"]).status.code(), Some(2));
    assert_eq!(qhankel(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(qhankel(&["verify", "thm1", "--oracle-bound", "0"]).status.code(), Some(2));
    assert_eq!(qhankel(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qhankel(&["v", "--k", "3", "--n", "2"]).status.code(), Some(2));
    assert_eq!(qhankel(&["verify", "thm1", "--max-n", "4"]).status.code(), Some(0));
}

#[test]
fn oracle_bound_skips_instead_of_failing() {
    let out = qhankel(&["verify", "eq4", "--max-n", "3", "--oracle-bound", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[skip]"), "{text}");
    assert!(!text.contains("[fail]"));
}

#[test]
fn named_suites_pass() {
    for args in [
        &["verify", "thm1", "--max-n", "8"][..],
        &["verify", "conjecture", "--max-n", "10"],
    ] {
        let out = qhankel(args);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    }
}

#[test]
fn oeis_embedded_offline() {
    let out = qhankel(&["oeis"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("[pass]").count(), 8);
}

#[test]
fn oeis_unreachable_host_is_a_network_error() {
    let out = qhankel(&["oeis", "--online", "--base-url", "http://127.0.0.1:9"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!stdout(&out).contains("[fail]"));
    let out = Command::new(env!("CARGO_BIN_EXE_qhankel"))
        .args(["oeis", "--online"])
        .env("QHANKEL_OEIS_URL", "http://127.0.0.1:9")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn oeis_bfile_fixtures() {
    let good = fixture("b114604_good.txt");
    let out = qhankel(&["oeis", "--bfile", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert_eq!(stdout(&out).matches("[pass]").count(), 12);

    let bad = fixture("b114604_mismatch.txt");
    let out = qhankel(&["oeis", "--bfile", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    let failing: Vec<&str> = text.lines().filter(|l| l.contains("[fail]")).collect();
    assert_eq!(failing.len(), 1, "{text}");
    assert!(failing[0].contains("term n=5"), "{text}");

    let missing = qhankel(&["oeis", "--bfile", "/nonexistent/b114604.txt"]);
    assert_eq!(missing.status.code(), Some(3));
}

#[test]
fn cache_is_write_through_and_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let args = ["--cache", path.to_str().unwrap(), "r", "--m", "3", "--n", "3"];
    let cold = qhankel(&args);
    assert!(path.exists());
    let warm = qhankel(&args);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, qhankel(&["r", "--m", "3", "--n", "3"]).stdout);

    std::fs::write(&path, "not json").unwrap();
    let recovered = qhankel(&args);
    assert!(recovered.status.success());
    assert_eq!(recovered.stdout, cold.stdout);
}

#[test]
fn matrix_and_triangle_commands() {
    let out = qhankel(&["matrix", "--kind", "D", "--m", "-1", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["n"], 2);
    let rows = qhankel(&["triangle", "--rows", "6"]);
    assert!(rows.status.success());
    assert_eq!(stdout(&qhankel(&["triangle", "--n", "5", "--k", "3"])), "q^9 + 6*q^10 + 3*q^12\n");
    assert_eq!(stdout(&qhankel(&["partitions", "--n", "6", "--k", "3"])).lines().count(), 3);
}
