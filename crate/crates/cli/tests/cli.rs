use std::process::{Command, Output};

fn weylhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weylhom")).args(args).env_remove("WEYLHOM_MAX_DIM").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn hom_reports_dimension_as_json() {
    let o = weylhom(&["hom", "--p", "3", "--lambda", "11,10,7,3,3", "--mu", "14,10,7,3", "--json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 2);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["p", "lambda", "mu", "dim"]);

    let o = weylhom(&["hom", "--p", "3", "--lambda", "4,3,2,2", "--mu", "5,5,1"]);
    assert_eq!(stdout(&o), "dim 0\n");
}

#[test]
fn hom_basis_vectors_are_listed() {
    let o = weylhom(&["hom", "--p", "2", "--lambda", "1,1", "--mu", "2", "--basis"]);
    assert_eq!(stdout(&o), "dim 1\nv1: 1*[1,1]\n");
    let o = weylhom(&["hom", "--p", "2", "--lambda", "1,1", "--mu", "2", "--basis", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["basis"][0][0]["tableau"], "1,1");
    assert_eq!(v["basis"][0][0]["coeff"], 1);
}

#[test]
fn sst_lists_and_counts() {
    let o = weylhom(&["sst", "--mu", "6,4", "--weight", "4,3,0,3", "--count"]);
    let count: usize = stdout(&o).trim().parse().unwrap();
    assert!(count >= 1);
    let o = weylhom(&["sst", "--mu", "6,4", "--weight", "4,3,0,3"]);
    let listing = stdout(&o);
    assert_eq!(listing.lines().count(), count);
    assert!(listing.lines().any(|l| l == "4,1,0,1;0,2,0,2"));
}

#[test]
fn semistandard_tableaux_straighten_to_themselves() {
    let listing = stdout(&weylhom(&["sst", "--mu", "4,2,1", "--weight", "2,2,2,1"]));
    assert!(!listing.is_empty());
    for t in listing.lines() {
        let o = weylhom(&["straighten", "--p", "3", "--tableau", t]);
        assert_eq!(stdout(&o), format!("1 {t}\n"));
    }
}

#[test]
fn straighten_expands_into_the_basis() {
    let o = weylhom(&["straighten", "--p", "5", "--tableau", "0,1;1,0"]);
    assert_eq!(stdout(&o), "4 1,0;0,1\n");
    let o = weylhom(&["straighten", "--p", "3", "--tableau", "1,0;1,0"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn psi_and_checks() {
    let o = weylhom(&["psi", "--p", "2", "--lambda", "1,1", "--mu", "2"]);
    assert_eq!(stdout(&o), "tableaux 1\nnonzero true\nis_hom true\n");
    let o = weylhom(&["psi", "--p", "3", "--lambda", "1,1", "--mu", "2"]);
    assert_eq!(stdout(&o), "tableaux 1\nnonzero true\nis_hom false\n");

    let o = weylhom(&["check", "stability", "--p", "3", "--lambda", "4,3,2,2", "--mu", "5,5,1", "--gamma", "6,3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdict"]["applicable"], false);
    assert!(v["verdict"]["failed"].as_array().unwrap().iter().any(|f| f.as_str().unwrap().contains("P(mu)")));

    let o = weylhom(&["check", "nonvanishing", "--p", "5", "--lambda", "20,14,4,4,4,4", "--mu", "24,16,10"]);
    assert!(stdout(&o).starts_with("applicable true\n"));
    let o = weylhom(&["check", "carter-payne", "--p", "5", "--lambda", "3,2,1", "--mu", "4,2"]);
    assert!(stdout(&o).contains("witness: i=1 j=3 q=1"));
}

#[test]
fn sweep_prints_csv() {
    let o = weylhom(&["sweep", "--p", "2", "--lambda", "3", "--mu", "2,1", "--nu", "1", "--kmax", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "k,dim\n0,0\n1,0\n2,0\n");
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["hom", "--p", "4", "--lambda", "2,1", "--mu", "3"][..],
        &["hom", "--p", "3", "--lambda", "2,1", "--mu", "2"],
        &["hom", "--p", "3", "--lambda", "1,2", "--mu", "3"],
        &["hom", "--p", "3", "--lambda", "x", "--mu", "3"],
        &["sst", "--mu", "2", "--weight", "1"],
        &["bogus"],
    ] {
        let o = weylhom(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = stderr(&o);
        assert!(err.starts_with("error: invalid-input: ") && err.lines().count() == 1, "{err}");
    }
}

#[test]
fn resource_cap_exits_with_three_after_partial_output() {
    let args = ["sweep", "--p", "2", "--lambda", "2,1,1", "--mu", "3,1", "--nu", "3,1", "--kmax", "6", "--max-dim", "4"];
    let o = weylhom(&args);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).starts_with("error: resource-cap: "));
    let out = stdout(&o);
    assert!(out.starts_with("k,dim\n0,1\n") && out.lines().count() < 8, "{out}");
}

#[test]
fn flag_overrides_environment() {
    let args = ["hom", "--p", "3", "--lambda", "4,3,2", "--mu", "6,3"];
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_weylhom"));
        c.args(args).args(extra).env_remove("WEYLHOM_MAX_DIM");
        if let Some(v) = env {
            c.env("WEYLHOM_MAX_DIM", v);
        }
        c.output().unwrap()
    };
    assert_eq!(run(Some("3"), &[]).status.code(), Some(3));
    assert!(run(Some("3"), &["--max-dim", "100000"]).status.success());
    assert_eq!(run(None, &["--max-dim", "3"]).status.code(), Some(3));
    assert!(run(None, &[]).status.success());
}

#[test]
fn output_is_deterministic() {
    let args = ["hom", "--p", "2", "--lambda", "3,3,2", "--mu", "4,2,2", "--basis", "--json"];
    let first = weylhom(&args);
    assert!(first.status.success());
    for _ in 0..3 {
        assert_eq!(weylhom(&args).stdout, first.stdout);
    }
}
