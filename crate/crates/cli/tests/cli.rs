use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gbessel"))
        .args(args)
        .env_remove("GBESSEL_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| {
            let mut parts = l.split_whitespace();
            (parts.next() == Some(key)).then(|| parts.next().unwrap_or("").to_string())
        })
        .unwrap_or_else(|| panic!("no field {key} in {out}"))
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn eval_examples() {
    let g = json(&["eval", "--fn", "gbessel", "--a", "1", "--b", "1", "--p", "0.7", "--c", "1", "--z", "0.5"]);
    let j = json(&["eval", "--fn", "besselj", "--nu", "0.7", "--z", "0.5"]);
    assert_eq!(g["re"], j["re"]);
    let o = run(&["eval", "--fn", "besselj", "--nu", "0", "--z", "0"]);
    assert_eq!(field(&stdout(&o), "re"), "1");
    let o = run(&["eval", "--fn", "besseli", "--nu", "0.5", "--z", "1", "--digits", "10"]);
    assert_eq!(field(&stdout(&o), "re"), "0.9376748882");
}

#[test]
fn radius_examples() {
    let o = run(&["radius", "--family", "f", "--a", "1", "--nu", "0.7", "--beta", "0.5"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "value"), "1.05621");
    let o = run(&["radius", "--family", "g", "--a", "3", "--nu", "0.7", "--beta", "0.95"]);
    assert_eq!(field(&stdout(&o), "value"), "0.549716");
    let o = run(&["radius", "--family", "g", "--a", "1", "--nu", "0.7", "--beta", "0"]);
    let out = stdout(&o);
    assert_eq!(field(&out, "value"), "1.68326");
    assert_eq!(field(&out, "in_disk_radius"), "1");
    assert_eq!(field(&out, "equation_id"), "radius-g");
}

#[test]
fn radius_unsupported_names_hypothesis() {
    let o = run(&["radius", "--family", "f", "--a", "2", "--nu", "0", "--beta", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("condition"));
}

#[test]
fn threshold_examples() {
    let o = run(&["threshold", "--family", "f", "--a", "2", "--beta", "0"]);
    assert_eq!(field(&stdout(&o), "value"), "0.659908");
    let o = run(&["threshold", "--family", "g", "--a", "3", "--beta", "0.5"]);
    let out = stdout(&o);
    assert_eq!(field(&out, "value"), "0.751407");
    assert_eq!(field(&out, "nu_tilde"), "-0.774565");
    let o = run(&["threshold", "--family", "g", "--a", "1", "--beta", "0.95"]);
    assert_eq!(field(&stdout(&o), "value"), "9.02272");
}

#[test]
fn table_csv_layout() {
    let o = run(&["table", "--id", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(!out.contains('\r'));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "a,beta=0,beta=0.5,beta=0.95");
    assert_eq!(lines[1], "1,1.44678,1.05621,0.343848");
    assert_eq!(lines.len(), 4);
}

#[test]
fn table_one_matches() {
    let o = run(&["table", "--id", "1", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().nth(3).unwrap(), "3,0.766251,0.776181,0.786989");
}

#[test]
fn table_deviation_sets_status_and_marks_cell() {
    let o = run(&["table", "--id", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().nth(2).unwrap(), "2,0.39001*,0.586273,0.772587");
}

#[test]
fn table_json_records() {
    let v = json(&["table", "--id", "4"]);
    let cells = v.as_array().unwrap();
    assert_eq!(cells.len(), 9);
    assert!(cells.iter().all(|c| c["within_tolerance"] == true));
}

#[test]
fn table_to_file() {
    let dir = std::env::temp_dir().join(format!("gbessel-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t1.csv");
    let o = run(&["table", "--id", "1", "--output", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("a,beta=0,"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_round_trips() {
    for args in [
        vec!["table", "--id", "4", "--format", "json"],
        vec!["radius", "--family", "h", "--a", "2", "--nu", "0.7", "--beta", "0.5", "--format", "json"],
        vec!["threshold", "--family", "g", "--a", "2", "--beta", "0.5", "--format", "json"],
        vec!["verify", "--family", "f", "--a", "1", "--nu", "0.7", "--beta", "0", "--radius", "0.5", "--format", "json"],
    ] {
        let o = run(&args);
        let text = stdout(&o);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(again, text);
    }
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "--family", "f", "--a", "1", "--nu", "0.7", "--beta", "0", "--radius", "1.43"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "verdict"), "PASS");
    let o = run(&["verify", "--family", "f", "--a", "1", "--nu", "0.7", "--beta", "0", "--radius", "1.46"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert_eq!(field(&out, "verdict"), "FAIL");
    assert_eq!(field(&out, "argmin_im"), "0");
    let o = run(&["verify", "--family", "g", "--a", "2", "--nu", "0.9", "--beta", "0", "--radius", "0.1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["eval", "--fn", "besselj", "--z", "1"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--id", "7"]).status.code(), Some(2));
    assert_eq!(run(&["radius", "--family", "q"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--fn", "besselj", "--nu", "0", "--z", "1", "--digits", "13"]).status.code(), Some(2));
}

#[test]
fn tolerance_precedence() {
    let base = ["eval", "--fn", "besselj", "--nu", "0.3", "--z", "1.7"];
    let terms = |o: &Output| field(&stdout(o), "terms").parse::<usize>().unwrap();
    let default = terms(&run(&base));
    let loose_env = Command::new(env!("CARGO_BIN_EXE_gbessel")).args(base).env("GBESSEL_TOL", "1e-4").output().unwrap();
    assert!(terms(&loose_env) < default);
    let mut with_flag = base.to_vec();
    with_flag.extend(["--tol", "1e-16"]);
    let flag_wins = Command::new(env!("CARGO_BIN_EXE_gbessel")).args(&with_flag).env("GBESSEL_TOL", "1e-4").output().unwrap();
    assert_eq!(terms(&flag_wins), default);
    let bad = Command::new(env!("CARGO_BIN_EXE_gbessel")).args(base).env("GBESSEL_TOL", "abc").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--id", "2", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
