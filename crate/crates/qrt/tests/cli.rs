use std::process::Command;

fn qrt(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qrt")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn kronecker_quadratic_form() {
    let (code, out) = qrt(&["form", "--quiver", "kronecker", "--d", r#"{"1":1,"2":1}"#, "--quadratic"]);
    assert_eq!((code, out.trim()), (0, "0"));
}

#[test]
fn verify_is_deterministic() {
    let a = qrt(&["verify", "--suite", "closure", "--seed", "3"]);
    let b = qrt(&["verify", "--suite", "closure", "--seed", "3", "--sequential"]);
    assert_eq!(a.0, 0, "{}", a.1);
    assert_eq!(a, b);
}

#[test]
fn bongartz_suite_reports_all_pairs() {
    let (code, out) = qrt(&["verify", "--suite", "bongartz", "--seed", "0"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suites"][0]["checked"], 200);
    assert_eq!(v["suites"][0]["failed"], 0);
}

#[test]
fn catalog_quiver_round_trips_through_validate() {
    let (code, out) = qrt(&["catalog", "--name", "canonical(2,2,2)"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let path = std::env::temp_dir().join(format!("qrt-cli-{}.json", std::process::id()));
    std::fs::write(&path, v["quiver"].to_string()).unwrap();
    let (code, out) = qrt(&["validate", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("\"vertices\":5"));
}

#[test]
fn usage_and_budget_exit_codes() {
    assert_eq!(qrt(&["form", "--quiver", "kronecker"]).0, 2);
    assert_eq!(qrt(&["form", "--quiver", "nowhere", "--d", "[1]", "--a"]).0, 2);
    assert_eq!(qrt(&["oracle", "census", "--q", "3", "--d", "[3,3]", "--budget", "100"]).0, 3);
}

#[test]
fn census_emits_one_line_per_orbit() {
    let (code, out) = qrt(&["oracle", "census", "--q", "2", "--d", "[1,1]"]);
    assert_eq!(code, 0);
    let lines: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[4]["orbits"], 4);
    assert!(lines[..4].iter().all(|l| l["stabilizer_ok"] == true));
}
