use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cache(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("extremal-cli-test-{}-{name}", std::process::id()))
}

fn run_in(cache_dir: &PathBuf, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extremal-lie"))
        .args(args)
        .env("EXTREMAL_LIE_CACHE", cache_dir)
        .output()
        .expect("binary runs")
}

/// Run with `--json`, assert exit 0, and return the parsed report.
fn json(name: &str, args: &[&str]) -> Value {
    let dir = cache(name);
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run_in(&dir, &full);
    let _ = std::fs::remove_dir_all(&dir);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert!(v["runtime_ms"].is_null());
    v
}

fn exit_code(name: &str, args: &[&str]) -> Option<i32> {
    let dir = cache(name);
    let code = run_in(&dir, args).status.code();
    let _ = std::fs::remove_dir_all(&dir);
    code
}

#[test]
fn tables() {
    let lr = json("lr", &["tables", "lr", "--max-r", "4"]);
    let totals: Vec<u64> = (1..=4)
        .map(|r| {
            lr["data"][format!("L{r}")]
                .as_array()
                .unwrap()
                .iter()
                .map(|d| d.as_u64().unwrap())
                .sum()
        })
        .collect();
    assert_eq!(totals, [1, 3, 8, 28]);

    let rr = json("rr", &["tables", "rr", "--max-r", "4"]);
    let totals: Vec<u64> = (1..=4)
        .map(|r| rr["data"][format!("R{r}")]["total_dim"].as_u64().unwrap())
        .collect();
    assert_eq!(totals, [2, 5, 19, 193]);

    let lengths = json("rrl", &["tables", "rr-lengths", "--r", "4"]);
    assert_eq!(
        lengths["data"]["R4"]["dims_by_length"],
        serde_json::json!([1, 4, 12, 24, 36, 40, 36, 24, 12, 4])
    );
}

#[test]
fn mingen_rows() {
    for (args, t) in [
        (["mingen", "--type", "G2", "--char", "0"], 4),
        (["mingen", "--type", "F4", "--char", "5"], 5),
    ] {
        let v = json(args[2], &args);
        let row = &v["data"][0];
        assert_eq!(row["t_claimed"], t);
        assert_eq!(row["lower_bound"], t);
        assert_eq!(row["generation_ok"], true);
    }
}

#[test]
fn e8_needs_heavy() {
    assert_eq!(exit_code("e8", &["mingen", "--type", "E8", "--char", "0"]), Some(2));
}

#[test]
fn radicals_g2_char_3() {
    let v = json("rad", &["radicals", "--type", "G2", "--char", "3"]);
    let row = &v["data"][0];
    assert_eq!(row["rad"], 0);
    assert_eq!(row["rad_f"], 7);
    let strict = v["checks"].as_array().unwrap().iter().any(|c| {
        c["name"].as_str().unwrap().contains("Rad(L) <= Rad(f)")
            && c["actual"].as_str().unwrap().contains("strict")
    });
    assert!(strict);
}

#[test]
fn threegen_case_3() {
    let v = json("tg", &["threegen", "--edges", "-2,-2,-2", "--central", "0"]);
    let checks = v["checks"].as_array().unwrap();
    let find = |needle: &str| checks.iter().find(|c| c["name"].as_str().unwrap().contains(needle));
    assert_eq!(find("case").unwrap()["actual"], "3");
    assert_eq!(find("sl3 matrices").unwrap()["pass"], true);
}

#[test]
fn rootgroups_a2_char_5() {
    json("rg", &["rootgroups", "--type", "A2", "--char", "5"]);
}

#[test]
fn usage_errors() {
    assert_eq!(exit_code("u1", &["mingen", "--type", "A2", "--char", "4"]), Some(2));
    assert_eq!(exit_code("u2", &["mingen", "--type", "A2", "--char", "2"]), Some(2));
    assert_eq!(exit_code("u3", &["mingen", "--type", "D2"]), Some(2));
    assert_eq!(exit_code("u4", &["threegen", "--edges", "-2,-2"]), Some(2));
}

#[test]
fn cold_and_warm_cache_agree() {
    let dir = cache("warm");
    let args = ["--json", "extremal-check", "--type", "G2"];
    let cold = run_in(&dir, &args);
    let warm = run_in(&dir, &args);
    assert!(dir.join("chevalley-G2.json").exists());
    let _ = std::fs::remove_dir_all(&dir);
    assert_eq!(cold.status.code(), Some(0));
    assert_eq!(cold.stdout, warm.stdout);
}
