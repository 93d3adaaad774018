use std::process::{Command, Output};

fn sqk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqk"))
        .args(args)
        .env_remove("SQK_FUEL")
        .output()
        .expect("sqk runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn taut_reports_falsifying_valuation() {
    let o = sqk(&["oracle", "taut", "P => Q"]);
    assert_eq!(stdout(&o), "invalid: P=true Q=false\n");
    assert_eq!(o.status.code(), Some(1));
    let o = sqk(&["oracle", "taut", "P \\/ ~P"]);
    assert_eq!(stdout(&o), "valid\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn eval_identity_on_star() {
    let o = sqk(&["eval", "ap(lam(x.x); star)", "--fuel", "10"]);
    assert_eq!(stdout(&o), "star\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn eval_out_of_fuel_exits_one() {
    let o = sqk(&["eval", "ap(lam(x.ap(x; x)); lam(x.ap(x; x)))", "--fuel", "5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn fuel_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_sqk"))
        .args(["eval", "ap(lam(x.x); ap(lam(y.y); star))"])
        .env("SQK_FUEL", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn classical_excluded_middle() {
    let o = sqk(&["prove", "--logic", "classical", "P \\/ ~P"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0));
    assert!(out.starts_with("(ClassicalIntro (goal (|- \"{P \\/ ~P}\"))"), "{out}");
    assert!(out.ends_with("realizer: star\n"), "{out}");
}

#[test]
fn printed_proof_checks() {
    let o = sqk(&["prove", "(P => Q) => (Q => R) => P => R"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let proof = out.split("\nrealizer:").next().unwrap();
    let path = std::env::temp_dir().join(format!("sqk-cli-{}.proof", std::process::id()));
    std::fs::write(&path, proof).unwrap();
    let c = sqk(&["check", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).starts_with("accepted: |- (P => Q) => (Q => R) => P => R\n"));
}

#[test]
fn ipc_rejects_excluded_middle() {
    let o = sqk(&["prove", "P \\/ ~P"]);
    assert_eq!(stdout(&o), "not provable\n");
    assert_eq!(o.status.code(), Some(1));
    let o = sqk(&["prove", "--logic", "classical", "P /\\ ~P"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn parse_errors_exit_two() {
    let o = sqk(&["parse", "P => (Q"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("^"), "{err}");
}

#[test]
fn translate_modes() {
    let o = sqk(&["translate", "--mode", "kolmogorov", "P \\/ Q"]);
    assert_eq!(stdout(&o), "~~(~~P \\/ ~~Q)\n");
    let o = sqk(&["translate", "--mode", "erase", "{P} => {Q}"]);
    assert_eq!(stdout(&o), "P => Q\n");
}

#[test]
fn json_report_matches_aggregates() {
    let o = sqk(&["--json", "report", "--atoms", "1", "--depth", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["aggregates"]["formulas"], 30);
    assert_eq!(v["rows"].as_array().unwrap().len(), 30);
    assert_eq!(v["rows"][0]["formula"], "P");
}

#[test]
fn explore_defaults_are_proved() {
    let o = sqk(&["explore"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.starts_with("proved")), "{out}");
}
