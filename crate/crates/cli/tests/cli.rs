use jsonschema::JSONSchema;
use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sympbw"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    } else {
        drop(child.stdin.take());
    }
    child.wait_with_output().expect("wait")
}

fn json_ok(args: &[&str], stdin: Option<&str>) -> Value {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn schema(name: &str) -> JSONSchema {
    let path = format!("{}/../../schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    JSONSchema::compile(&v).expect("valid schema")
}

fn assert_valid(name: &str, v: &Value) {
    let s = schema(name);
    let msgs: Vec<String> = match s.validate(v) {
        Ok(()) => return,
        Err(errs) => errs.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    panic!("{name}: {msgs:?}");
}

#[test]
fn tableaux_census() {
    let v = json_ok(&["tableaux", "--n", "2", "--lambda", "1,1"], None);
    assert_eq!(v["count"], 16);
    assert_eq!(v["lambda"]["partition"], serde_json::json!([2, 1]));
    assert_valid("tableaux", &v);
    for t in v["tableaux"].as_array().unwrap() {
        assert_valid("tableau", t);
    }
}

#[test]
fn degenerate_relations_text() {
    let out = run(&["relations", "--n", "2", "--kind", "degenerate", "--format", "text", "--ascii"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.contains("S^a_{(1,1')} := X^a_{1,1'} + X^a_{2,2'}"), "{text}");
    assert!(text.contains("X^a_{2,2'} X^a_{1'} - X^a_{2,1'} X^a_{2'}"), "{text}");
}

#[test]
fn relation_outputs_match_schema() {
    for kind in ["classical", "degenerate", "s-family"] {
        let v = json_ok(&["relations", "--n", "2", "--kind", kind], None);
        assert_eq!(v.as_array().unwrap().len(), 6);
        assert_valid("relation_polynomial", &v);
    }
}

#[test]
fn enumeration_outputs_match_schema() {
    assert_valid("roots", &json_ok(&["roots", "--n", "3"], None));
    assert_valid("dyck", &json_ok(&["dyck", "--n", "3"], None));
    let p = json_ok(&["polytope", "--n", "2", "--lambda", "1,1"], None);
    assert_eq!(p["points"].as_array().unwrap().len(), 16);
    assert_valid("polytope", &p);
    for pt in p["points"].as_array().unwrap() {
        assert_valid("multi_exponent", pt);
    }
}

#[test]
fn bijection_round_trip_through_cli() {
    let p = json_ok(&["polytope", "--n", "2", "--lambda", "1,1"], None);
    for pt in p["points"].as_array().unwrap() {
        let t = json_ok(&["to-tableau", "--n", "2", "--lambda", "1,1"], Some(&pt.to_string()));
        assert_valid("tableau", &t);
        let back = json_ok(&["to-monomial", "--n", "2"], Some(&t.to_string()));
        assert_valid("to_monomial", &back);
        assert_eq!(&back["monomial"], pt);
    }
}

#[test]
fn straighten_output() {
    let v = json_ok(&["straighten", "--n", "2", "--ring", "degenerate", "--trace"], Some(r#"{"columns":[[1,4]]}"#));
    assert_valid("straighten", &v);
    assert_eq!(v["terms"][0]["coeff"], "-1");
    assert_eq!(v["terms"][0]["tableau"]["columns"], serde_json::json!([[3, 2]]));
    assert_eq!(v["trace"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_reports() {
    let v = json_ok(&["verify", "--n", "2", "--suite", "counts", "--lambda", "1,1"], None);
    assert_eq!(v["passed"], true);
    assert_valid("verify_report", &v);
    let v = json_ok(&["verify", "--n", "2", "--suite", "degenerate-ideal", "--seeds", "3", "--points"], None);
    assert_eq!(v["passed"], true);
    assert_valid("verify_report", &v);
    for p in v["points"].as_array().unwrap() {
        assert_valid("flag_point", p);
    }
    for suite in ["roundtrip", "classical-ideal", "s-family"] {
        let mut args = vec!["verify", "--n", "2", "--suite", suite, "--seeds", "4"];
        if suite == "roundtrip" {
            args.extend(["--lambda", "1,1"]);
        }
        let v = json_ok(&args, None);
        assert_eq!(v["passed"], true, "{suite}");
        assert_valid("verify_report", &v);
    }
    let out = run(&["verify", "--n", "2", "--suite", "counts", "--lambda", "1,1", "--report", "text"], None);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "PASS counts n=2: 16 = 16 = 16\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--n", "2", "--suite", "classical-ideal", "--seeds", "3", "--seed", "7", "--points"];
    assert_eq!(run(&args, None).stdout, run(&args, None).stdout);
}

#[test]
fn exit_codes() {
    let out = run(&["tableaux", "--n", "2", "--lambda", "1"], None);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "usage");

    assert_eq!(run(&["frobnicate"], None).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "2", "--suite", "counts"], None).status.code(), Some(2));

    let out =
        run(&["to-tableau", "--n", "2", "--lambda", "1,0"], Some(r#"[{"root":{"i":1,"j":1,"barred":true},"exp":5}]"#));
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["code"], "outside_polytope");

    let out = run(&["to-monomial", "--n", "2"], Some("not json"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("sympbw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("roots.json");
    let out = run(&["roots", "--n", "2", "--out", path.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn worker_count_does_not_change_output() {
    let args = ["verify", "--n", "2", "--suite", "degenerate-ideal", "--seeds", "5", "--points"];
    let one = Command::new(env!("CARGO_BIN_EXE_sympbw")).args(args).env("SYMPBW_WORKERS", "1").output().unwrap();
    let four = Command::new(env!("CARGO_BIN_EXE_sympbw")).args(args).env("SYMPBW_WORKERS", "4").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}
