use std::process::{Command, Output};

use serde_json::Value;

fn charvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charvar")).args(args).env_remove("CHARVAR_CACHE_DIR").output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = charvar(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    charvar(args).status.code().unwrap()
}

#[test]
fn figure_eight_curve() {
    assert_eq!(stdout(&["curve", "4/5"]), "x^2 + (-1)*t^2*x + x + t^2 + (-1)\n");
    assert_eq!(stdout(&["curve", "4_1"]), stdout(&["curve", "4/5"]));
    let v = json(&["curve", "4/5", "--format", "json"]);
    assert_eq!(v["knot"], "4_1");
    assert_eq!(stdout(&["curve", "fig8", "--relation", "abABa = bABab"]), stdout(&["curve", "4/5"]));
    assert_eq!(code(&["curve", "z", "--relation", "abAB = 1"]), 1);
}

#[test]
fn phi_table() {
    let t = stdout(&["phi", "--upto", "10"]);
    let rows: Vec<&str> = t.lines().collect();
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0], "Phi_1 = 1\tPsi_1 = 1");
    assert_eq!(rows[4], "Phi_5 = x^2 + x + (-1)\tPsi_5 = x^2 + (-1)*x + (-1)");
    assert_eq!(rows[8], "Phi_9 = x^4 + x^3 + (-3)*x^2 + (-2)*x + 1\tPsi_9 = x^4 + (-1)*x^3 + (-3)*x^2 + 2*x + 1");
    assert_eq!(rows[9], "Phi_10 = x^4 + (-3)*x^2 + 1\tPsi_10 = x^5 + (-5)*x^3 + 5*x");
    assert_eq!(stdout(&["psi", "10"]), "Psi_10 = x^5 + (-5)*x^3 + 5*x\n");
    assert_eq!(stdout(&["phi", "9", "--mod", "3"]), "Phi_9(u) = Phi_1(u)^9 * (u + (-2))^4 mod 3\n");
}

#[test]
fn alexander_and_trace() {
    assert_eq!(stdout(&["alexander", "4/5"]), "T^2 + (-3)*T + 1\n");
    assert_eq!(stdout(&["trace", "abAB"]), "(-1)*s*u*v + s^2 + u^2 + v^2 + (-2)\n");
}

#[test]
fn torus_collapse() {
    let v = json(&["torus", "2", "11", "--mod", "11"]);
    assert_eq!(v["collapse"]["from"], 5);
    assert_eq!(v["collapse"]["to"], 1);
    assert_eq!(v["collapse"]["expected_to"], 1);
    assert_eq!(v["abelian_intersections"][0]["contact"], "Tangent");
    let v = json(&["torus", "2", "11"]);
    assert_eq!(v["component_count"], 6);
    assert_eq!(v["expected_count"], 6);
}

#[test]
fn figure_eight_ramifies_only_at_five() {
    let v = json(&["ramify", "4/5"]);
    let primes: Vec<u64> = v["primes"].as_array().unwrap().iter().map(|r| r["p"].as_u64().unwrap()).collect();
    assert_eq!(primes, [5]);
    assert!(!v["primes"][0]["phenomena"].as_array().unwrap().is_empty());
}

#[test]
fn report_formatting() {
    let s = stdout(&["ramify", "7/25", "--primes", "7"]);
    assert!(s.contains(r#""ComponentChange": {"from": 1, "to": 2}"#), "{s}");
    assert!(stdout(&["ramify", "4/5", "--primes", "7"]).contains(r#""phenomena": []"#));
    let t = stdout(&["ramify", "6_1", "--primes", "3", "--format", "text"]);
    assert!(t.contains("abelian tangency at (0,2)"), "{t}");
    assert!(t.contains("p = 3: ramified"));
}

#[test]
fn scan_finds_split_prime() {
    let v = json(&["ramify", "8_9", "--scan-all-up-to", "50", "--jobs", "2"]);
    let ramified: Vec<u64> = v["primes"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| !r["phenomena"].as_array().unwrap().is_empty())
        .map(|r| r["p"].as_u64().unwrap())
        .collect();
    assert_eq!(ramified, [5, 7, 23]);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["curve", "4/6"]), 2);
    assert_eq!(code(&["torus", "2", "4"]), 2);
    assert_eq!(code(&["ramify", "4/5", "--primes", "9"]), 2);
    assert_eq!(code(&["ramify", "4/5", "--primes", "3", "--scan-all-up-to", "9"]), 2);
    assert_eq!(code(&["phi", "--upto", "100000"]), 3);
    assert_eq!(code(&["trace", "abc"]), 2);
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{"degree_bound": 10}"#).unwrap();
    let c = cfg.to_str().unwrap();
    assert_eq!(code(&["--config", c, "ramify", "8_9", "--primes", "7"]), 3);
    std::fs::write(&cfg, r#"{"k_max": 2}"#).unwrap();
    assert_eq!(code(&["--config", c, "ramify", "4/5"]), 0);
    std::fs::write(&cfg, r#"{"kmax": 2}"#).unwrap();
    assert_eq!(code(&["--config", c, "ramify", "4/5"]), 2);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = charvar(&["ramify", "4/5", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["ramify", "4/5"]));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn trace_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_charvar"))
            .args(["trace", "abbAAbaB"])
            .env("CHARVAR_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    assert_eq!(run().stdout, first.stdout);
    assert_eq!(first.stdout, stdout(&["trace", "abbAAbaB"]).into_bytes());
}

#[test]
fn catalog_commands() {
    let check = stdout(&["catalog", "check"]);
    assert_eq!(check.lines().count(), 6);
    assert!(check.lines().all(|l| l.ends_with(": ok")));
    let list: Value = json(&["catalog", "list"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cat.json");
    let first = serde_json::to_string(&vec![&list[0]]).unwrap();
    std::fs::write(&path, first).unwrap();
    let c = path.to_str().unwrap();
    assert_eq!(stdout(&["--catalog", c, "catalog", "check"]), "4_1 4/5: ok\n");
    std::fs::write(&path, "[{}]").unwrap();
    assert_eq!(code(&["--catalog", c, "catalog", "check"]), 2);
}

#[test]
fn catalog_reports_are_deterministic() {
    let a = stdout(&["catalog", "ramify"]);
    let b = stdout(&["catalog", "ramify", "--jobs", "1"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 6);
}
