use assert_cmd::Command;

fn qng() -> Command {
    let mut cmd = Command::cargo_bin("qng").unwrap();
    cmd.env_remove("QNG_TOL");
    cmd
}

fn stdout_of(args: &[&str]) -> String {
    let out = qng().args(args).output().unwrap();
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn four_cycle_is_an_equality_case() {
    let text = stdout_of(&["check", "--thm", "1.3", "--graph6", "Cr"]);
    assert_eq!(text.trim(), "Cr\tthm1.3\t4.000000000 <= 4\tequality-certified\tC_4");

    let json = stdout_of(&["check", "--thm", "1.3", "--family", "C4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["verdict"], "equality-certified");
    assert_eq!(v["certified"], true);
    assert_eq!(v["family"]["family"], "C_4");
    assert_eq!(v["lhs_exact"], "4");
}

#[test]
fn order_five_interval_scan() {
    let json = stdout_of(&[
        "scan",
        "--n",
        "5",
        "--filter",
        "connected",
        "--predicate",
        "sum-open-interval 5 6",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["total"], 21);
    assert_eq!(v["members"].as_array().unwrap().len(), 8);
    assert!(v["violations"].as_array().unwrap().is_empty());

    let json = stdout_of(&["scan", "--n-range", "5..6", "--predicate", "thm 1.2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
}

#[test]
fn scan_output_ignores_job_count() {
    let args = |jobs: &'static str| ["scan", "--n", "7", "--predicate", "thm 1.2", "--format", "csv", "--jobs", jobs];
    let one = stdout_of(&args("1"));
    assert_eq!(one, stdout_of(&args("4")));
    assert!(one.starts_with("n,role,graph6\n"));
}

#[test]
fn proof_replay_passes() {
    qng().args(["proof-check", "--thm", "1.5", "--n-range", "8..50"]).assert().code(0);
    let json = stdout_of(&["proof-check", "--thm", "1.2", "--n", "9", "--d2", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(json.lines().next().unwrap()).unwrap();
    assert!(v["steps"].as_array().unwrap().iter().all(|s| s["ok"] == true), "{json}");
}

#[test]
fn usage_errors_exit_one() {
    qng().args(["check", "--thm", "9.9", "--graph6", "Cr"]).assert().code(1);
    qng().args(["check", "--thm", "1.2", "--graph6", "!!"]).assert().code(1);
    qng().args(["check", "--thm", "1.2"]).assert().code(1);
    qng().args(["proof-check", "--thm", "1.3", "--n", "8"]).assert().code(1);
    qng().args(["scan", "--n", "4", "--predicate", "thm 1.2", "--jobs", "0"]).assert().code(1);
    qng().env("QNG_TOL", "abc").args(["check", "--thm", "1.2", "--graph6", "Cr"]).assert().code(1);
    qng().arg("--help").assert().code(0);
}

#[test]
fn graphs_from_stdin_and_files() {
    let out =
        qng().args(["enumerate", "--input", "-", "--format", "csv"]).write_stdin("Cr\nCl\nCU\n").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // Cr and CU are both 4-cycles
    assert_eq!(text.lines().count(), 3, "{text}");

    let dir = std::env::temp_dir().join(format!("qng-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("in.g6");
    let output = dir.join("out.csv");
    std::fs::write(&input, "Cr\nCl\n").unwrap();
    qng()
        .args(["spectrum", "--input", input.to_str().unwrap(), "--format", "csv", "--output", output.to_str().unwrap()])
        .assert()
        .code(0)
        .stdout("");
    let csv = std::fs::read_to_string(&output).unwrap();
    assert_eq!(csv.lines().next(), Some("graph6,kind,index,eigenvalue"));
    assert_eq!(csv.lines().count(), 9);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn report_covers_every_bound() {
    let text = stdout_of(&["report", "--family", "P4"]);
    assert!(text.contains("lambda2\t1.236067977 <= -1+sqrt(5)\tequality-certified"), "{text}");
    assert!(text.lines().all(|l| !l.contains("violated")));
    let some = stdout_of(&["report", "--family", "C5", "--thm", "1.2,1.3"]);
    assert_eq!(some.lines().count(), 2);
}
