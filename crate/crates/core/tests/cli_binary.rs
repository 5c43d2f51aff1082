use std::process::{Command, Output};

fn charval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charval"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn mn_prints_the_integer() {
    let o = charval(&["mn", "--partition", "13,1,1", "--cycle-type", "9,4,2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
    let o = charval(&["mn", "--partition", "14,1,1", "--cycle-type", "2,14"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn exit_codes() {
    assert_eq!(charval(&["verify", "--theorem", "C", "--group", "S4"]).status.code(), Some(0));
    assert_eq!(charval(&["table", "--group", "nosuch"]).status.code(), Some(2));
    assert_eq!(charval(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        charval(&["--max-order", "100", "table", "--group", "S5"]).status.code(),
        Some(2)
    );
}

#[test]
fn table_json_is_stable() {
    let a = charval(&["--json", "table", "--group", "sg_21_1"]);
    let b = charval(&["--json", "--seed", "7", "table", "--group", "sg_21_1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["order"], 21);
    let text = stdout(&a);
    let at = |k: &str| text.find(&format!("\"{k}\"")).unwrap();
    assert!(at("order") < at("dixon_prime") && at("dixon_prime") < at("classes"));
    assert!(at("classes") < at("rows"));
}

#[test]
fn group_file_selector() {
    let dir = std::env::temp_dir().join(format!("charval_cli_{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.grp");
    std::fs::write(&path, "# S3\ndegree 3\n(1 2 3)\n(1 2)\n").unwrap();
    let o = charval(&["--json", "invariants", "--group", path.to_str().unwrap()]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["cv"], serde_json::json!(["-1", "0", "1", "2"]));
}

#[test]
fn scan_lists_matches() {
    let o = charval(&["--json", "scan", "--property", "ncv=3&nonsolvable"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["matches"], serde_json::json!(["S5"]));
}
