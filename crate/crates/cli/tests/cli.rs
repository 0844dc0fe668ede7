use assert_cmd::Command;

fn mckay() -> Command {
    let mut cmd = Command::cargo_bin("mckay").unwrap();
    cmd.env_remove("MCKAY_CACHE_DIR");
    cmd
}

fn stdout(args: &[&str]) -> String {
    let out = mckay().args(args).assert().success().get_output().stdout.clone();
    String::from_utf8(out).unwrap()
}

#[test]
fn core_of_a_partition() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["core", "--p", "5", "--partition", "8,5,3,3"])).unwrap();
    assert_eq!(v["core"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(v["nS"], 2);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["core", "--p", "5", "--partition", "7,5,5,3,3"])).unwrap();
    assert_eq!(v["core"], serde_json::json!([4, 1, 1, 1, 1]));
}

#[test]
fn bijection_five_at_five() {
    let out = stdout(&["bijection", "--n", "5", "--p", "5"]);
    assert_eq!(out.lines().count(), 5);
    for line in out.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let ds: u64 = v["dS"].as_str().unwrap().parse().unwrap();
        let dn: u64 = v["dN"].as_str().unwrap().parse().unwrap();
        assert!(dn <= ds);
    }
}

#[test]
fn csv_degree_tables() {
    let out = stdout(&["enumerate", "--n", "6", "--p", "5", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,p,side,label,degree"));
    assert_eq!(lines.count(), 5);
    let out = stdout(&["bijection", "--n", "7", "--p", "3", "--format", "csv"]);
    assert!(out.lines().skip(1).all(|l| l.contains(",S,") || l.contains(",N,")));
}

#[test]
fn bad_input_exits_2() {
    mckay().args(["enumerate", "--n", "6", "--p", "4"]).assert().code(2);
    mckay().args(["core", "--p", "5", "--partition", "1,2"]).assert().code(2);
    mckay().args(["bijection", "--n", "121", "--p", "5"]).assert().code(2);
    mckay().args(["enumerate", "--n", "10", "--p", "5", "--n-cap", "200"]).assert().code(2);
    mckay().args(["lr", "--lambda", "3,1"]).assert().code(2);
    mckay().args(["frobnicate"]).assert().code(2);
    mckay().args(["restrict", "--partition", "4,1", "--p", "5", "--label", "1,1"]).assert().code(2);
}

#[test]
fn lr_and_restrict() {
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["lr", "--lambda", "3,2,1", "--mu", "2,1", "--gamma", "2,1"])).unwrap();
    assert_eq!(v["coefficient"], 2);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["restrict", "--partition", "3,1,1", "--p", "5"])).unwrap();
    // (6 − 1) / 5
    assert_eq!(v["multiplicity"], "1");
}

#[test]
fn verify_sweep_passes() {
    let out = stdout(&["verify", "--n-max", "40", "--primes", "2,3,5,7,11,13"]);
    assert!(out.lines().all(|l| !l.contains("\"status\":\"fail\"")));
}

#[test]
fn verify_output_is_stable() {
    let args = ["verify", "--n-max", "15", "--primes", "2,5"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        let mut cmd = Command::cargo_bin("mckay").unwrap();
        cmd.env("MCKAY_CACHE_DIR", dir.path()).args(["bijection", "--n", "30", "--p", "5"]);
        cmd.assert().success().get_output().stdout.clone()
    };
    let first = run();
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = run();
    assert_eq!(first, second);
    assert_eq!(first, stdout(&["bijection", "--n", "30", "--p", "5"]).into_bytes());
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n.jsonl");
    mckay().args(["normalizer", "--n", "10", "--p", "5", "--output", path.to_str().unwrap()]).assert().success();
    assert_eq!(std::fs::read_to_string(path).unwrap().lines().count(), 20);
}
