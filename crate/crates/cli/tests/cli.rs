use std::process::{Command, Output};

use serde_json::Value;

fn siflag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_siflag"))
        .args(args)
        .env_remove("SIMAC_TRUNC")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn roots_dump() {
    let out = siflag(&["roots", "--type", "A2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["Cartan"], serde_json::json!([[2, -1], [-1, 2]]));
    assert_eq!(v["pos_roots"].as_array().unwrap().len(), 3);
    assert_eq!(v["theta"], serde_json::json!([1, 1]));
}

#[test]
fn adapted_sequence_to_w0() {
    let out = siflag(&["qbruhat", "--type", "A2", "--from", "e", "--to", "w0"]);
    assert!(out.status.success());
    let s = String::from_utf8(out.stdout).unwrap();
    assert_eq!(s.split_whitespace().count(), 3);
}

#[test]
fn emac_generic_and_specialized() {
    let out = siflag(&["emac", "--type", "A1", "--gamma", "-1", "--format", "json"]);
    let v = stdout_json(&out);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms[1]["num"], "1-t");
    assert_eq!(terms[1]["den"], "1-q*t");
    let out = siflag(&["emac", "--type", "A1", "--gamma", "-1", "--dagger", "--spec", "t-inf,q-inv", "--format", "json"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"[{"coeff":"1","q":0,"wt":[1]},{"coeff":"1","q":1,"wt":[-1]}]"#
    );
}

#[test]
fn weylchar_and_twisted() {
    let out = siflag(&["weylchar", "--type", "A1", "--lambda", "1", "--w", "s1", "--format", "json"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim(),
        r#"[{"coeff":"1","q":0,"wt":[-1]},{"coeff":"1","q":0,"wt":[1]}]"#
    );
    let out = siflag(&["twisted", "--type", "A1", "--lambda", "1", "--w", "s1", "--format", "json"]);
    let v = stdout_json(&out);
    assert_eq!(v["terms"], serde_json::json!([{"coeff": "1", "q": 0, "wt": [-1]}]));
}

#[test]
fn usage_errors() {
    let out = siflag(&["weylchar", "--lambda", "1,0,0", "--type", "A2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("rank 2"));
    assert!(!siflag(&["roots", "--type", "E8"]).status.success());
    assert!(!siflag(&["roots", "--type", "A2", "--nope"]).status.success());
}

#[test]
fn verify_reports() {
    let out = siflag(&["verify", "--suite", "nmconn", "--type", "A1", "--max-weight", "3"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["cases"].as_array().unwrap().len(), 3);
    assert_eq!(v["failed"], 0);

    let out = siflag(&["verify", "--suite", "all", "--type", "A2", "--max-weight", "0"]);
    assert!(out.status.success());
    assert!(stdout_json(&out)["cases"].as_array().unwrap().is_empty());

    let out = siflag(&["verify", "--suite", "fdif", "--type", "A1", "--max-weight", "2"]);
    let v = stdout_json(&out);
    for c in v["cases"].as_array().unwrap() {
        assert_eq!(c["status"], "pass");
        let d = c["detail"].as_str().unwrap();
        if let Some(rest) = d.strip_prefix("exponent=") {
            let e: i64 = rest.split_whitespace().next().unwrap().parse().unwrap();
            let l = c["lambda"][0].as_i64().unwrap();
            assert_eq!(e, -l);
            assert!(d.contains(&format!("telescoped={e}")));
        }
    }

    let out = siflag(&["verify", "--suite", "nmconn", "--type", "A1", "--beta", "1"]);
    assert_eq!(out.status.code(), Some(1));
    let v = stdout_json(&out);
    assert_eq!(v["cases"][0]["status"], "fail");
}
