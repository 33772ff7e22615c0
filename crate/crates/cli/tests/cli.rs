use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn wittl(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wittl"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn wittl");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn fixture(name: &str, contents: &Value) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-fixtures");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, serde_json::to_string(contents).unwrap()).unwrap();
    path
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn theta_of_three_halves() {
    let out = wittl(&["witt", "theta", "--r", "3/2", "--degree", "4"], None);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["degree_bound"], 4);
    let values = v["values"].as_object().unwrap();
    assert_eq!(values.len(), 11);
    for (k, val) in values {
        let expected = match k.as_str() {
            "1" => "3/2",
            "2" => "3",
            "3" => "9/2",
            "4" => "6",
            _ => "inf",
        };
        assert_eq!(val, expected, "value at {k}");
    }
}

#[test]
fn coproduct_of_m21_has_four_terms() {
    let m21 = fixture("m21.json", &json!({"degree_bound": 8, "coeffs": {"2,1": 1}}));
    let out = wittl(&["sym", "coprod-add", "--input", m21.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["coeffs"], json!({"|2,1": 1, "1|2": 1, "2|1": 1, "2,1|": 1}));
}

#[test]
fn output_keys_follow_partition_order() {
    let out = wittl(&["witt", "theta", "--r", "1", "--degree", "3"], None);
    let v = stdout_json(&out);
    let keys: Vec<&str> = v["values"].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["1", "1,1", "2", "1,1,1", "2,1", "3"]);
}

#[test]
fn sym_products_and_strict_mode() {
    let m1 = fixture("m1.json", &json!({"degree_bound": 2, "coeffs": {"1": 1}}));
    let m2 = fixture("m2.json", &json!({"degree_bound": 2, "coeffs": {"2": 1}}));
    let out = wittl(&["sym", "mul", "--input", m1.to_str().unwrap(), "--other", m1.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["coeffs"], json!({"1,1": 2, "2": 1}));

    let out = wittl(&["sym", "mul", "--input", m1.to_str().unwrap(), "--other", m2.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["coeffs"], json!({}));
    let out = wittl(
        &["sym", "mul", "--strict", "--input", m1.to_str().unwrap(), "--other", m2.to_str().unwrap()],
        None,
    );
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["error"]["kind"], "degree_overflow");
}

#[test]
fn plethysm_and_bases() {
    let m11 = fixture("m11.json", &json!({"degree_bound": 4, "coeffs": {"1,1": 1}}));
    let out = wittl(
        &["sym", "plethysm", "--input", m11.to_str().unwrap(), "--inner", m11.to_str().unwrap()],
        None,
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["coeffs"], json!({"1,1,1,1": 3, "2,1,1": 1}));

    let out = wittl(&["sym", "bases", "--degree", "3"], None);
    let v = stdout_json(&out);
    assert_eq!(v["e"]["2"]["coeffs"], json!({"1,1": 1}));
    assert_eq!(v["h"]["2"]["coeffs"], json!({"1,1": 1, "2": 1}));
}

#[test]
fn witt_arithmetic_round_trip() {
    let theta1 = stdout_json(&wittl(&["witt", "theta", "--r", "1", "--degree", "4"], None));
    let theta2 = stdout_json(&wittl(&["witt", "theta", "--r", "2", "--degree", "4"], None));
    let a = fixture("theta1.json", &theta1);
    let b = fixture("theta2.json", &theta2);

    let out = wittl(&["witt", "mul", "--input", a.to_str().unwrap(), "--other", b.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    let product = stdout_json(&out);
    let theta3 = stdout_json(&wittl(&["witt", "theta", "--r", "3", "--degree", "4"], None));
    assert_eq!(product, theta3);

    let out = wittl(&["witt", "add", "--input", a.to_str().unwrap(), "--other", b.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    let sum = stdout_json(&out);
    assert_eq!(sum["values"]["1"], "1");
    assert_eq!(sum["values"]["1,1"], "3");

    let out = wittl(&["witt", "tau", "--input", b.to_str().unwrap()], None);
    assert_eq!(stdout_json(&out), "2");
    let out = wittl(&["witt", "in-l", "--input", b.to_str().unwrap()], None);
    assert_eq!(stdout_json(&out)["in_wl_l"], true);

    let out = wittl(&["witt", "validate"], Some(&theta1.to_string()));
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["passed"], true);
}

#[test]
fn witt_eval_from_roots_and_at_phi() {
    let out = wittl(&["witt", "eval", "--roots", "0,1", "--degree", "2"], None);
    assert_eq!(code(&out), 0);
    let f = stdout_json(&out);
    assert_eq!(f["values"], json!({"1": "0", "1,1": "1", "2": "0"}));
    let elem = fixture("roots01.json", &f);
    let phi = fixture("phi.json", &json!({"degree_bound": 2, "coeffs": {"1,1": 2}}));
    let out = wittl(
        &["witt", "eval", "--input", elem.to_str().unwrap(), "--phi", phi.to_str().unwrap()],
        None,
    );
    assert_eq!(stdout_json(&out), "1");
}

#[test]
fn non_homomorphisms_are_refused_unless_unchecked() {
    let bad = json!({"degree_bound": 2, "values": {"1": "1", "2": "5", "1,1": "0"}}).to_string();
    let out = wittl(&["witt", "tau"], Some(&bad));
    assert_eq!(code(&out), 1);
    let err = stdout_json(&out);
    assert_eq!(err["error"]["kind"], "not_homomorphism");
    assert!(!err["error"]["detail"]["violations"].as_array().unwrap().is_empty());

    let out = wittl(&["witt", "tau", "--unchecked"], Some(&bad));
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out), "1");

    let out = wittl(&["witt", "validate"], Some(&bad));
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["passed"], false);
}

#[test]
fn malformed_input_exits_two() {
    for (args, stdin) in [
        (vec!["witt", "tau"], "not json"),
        (vec!["witt", "tau"], r#"{"degree_bound": 2, "values": {"1": "-1"}}"#),
        (vec!["witt", "tau"], r#"{"degree_bound": 2, "values": {"1,2": "1"}}"#),
        (vec!["sym", "coprod-add"], r#"{"degree_bound": 2, "coeffs": {"3": 1}}"#),
        (vec!["cat", "validate"], r#"{"points": ["a"], "dist": {}}"#),
        (vec!["witt", "frobnicate"], ""),
        (vec!["witt", "theta", "--r", "abc"], ""),
    ] {
        let out = wittl(&args, Some(stdin));
        assert_eq!(code(&out), 2, "{args:?} on {stdin:?}");
        let err = stdout_json(&out);
        assert!(err["error"]["kind"].is_string(), "{err}");
        assert!(err["error"]["message"].is_string(), "{err}");
    }
    let out = wittl(&["witt", "tau", "--input", "/nonexistent/file.json"], None);
    assert_eq!(code(&out), 2);
}

fn metric() -> Value {
    json!({
        "points": ["a", "b"],
        "dist": {"a|a": "0", "a|b": "1", "b|a": "3/2", "b|b": "0"}
    })
}

#[test]
fn categories_through_theta_and_tau() {
    let out = wittl(&["cat", "validate"], Some(&metric().to_string()));
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["kind"], "lawvere");

    let out = wittl(&["cat", "theta", "--degree", "4"], Some(&metric().to_string()));
    assert_eq!(code(&out), 0);
    let w = stdout_json(&out);
    assert_eq!(w["dist"]["a|b"]["values"]["3"], "3");

    let w_text = w.to_string();
    let out = wittl(&["cat", "validate"], Some(&w_text));
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["kind"], "witt");

    let out = wittl(&["cat", "tau"], Some(&w_text));
    assert_eq!(stdout_json(&out), metric());

    let out = wittl(&["cat", "slice", "--lambda", "2"], Some(&w_text));
    let slice = stdout_json(&out);
    assert_eq!(slice["table"]["dist"]["b|a"], "3");
    assert_eq!(slice["is_l_category"], true);

    let out = wittl(&["cat", "slice", "--lambda", "1,1"], Some(&w_text));
    assert_eq!(stdout_json(&out)["table"]["dist"]["a|a"], "inf");

    let out = wittl(&["cat", "slice", "--h", "2"], Some(&w_text));
    assert_eq!(stdout_json(&out)["table"]["dist"]["a|b"], "2");

    let wfile = fixture("theta_metric.json", &w);
    let m2 = fixture("act_m2.json", &json!({"degree_bound": 4, "coeffs": {"2": 1}}));
    let out = wittl(
        &["cat", "act", "--input", wfile.to_str().unwrap(), "--g", m2.to_str().unwrap(), "--f", m2.to_str().unwrap()],
        None,
    );
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_json(&out)["dist"]["a|b"], "4");
}

#[test]
fn broken_metric_fails_validation() {
    let bad = json!({
        "points": ["a", "b", "c"],
        "dist": {
            "a|a": "0", "a|b": "1", "a|c": "5",
            "b|a": "1", "b|b": "0", "b|c": "1",
            "c|a": "5", "c|b": "1", "c|c": "0"
        }
    });
    let out = wittl(&["cat", "validate"], Some(&bad.to_string()));
    assert_eq!(code(&out), 1);
    let v = stdout_json(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(v["report"]["violations"][0]["kind"], "triangle");

    let out = wittl(&["cat", "theta"], Some(&bad.to_string()));
    assert_eq!(code(&out), 1);
    assert_eq!(stdout_json(&out)["error"]["kind"], "invalid_category");
}

#[test]
fn plancherel_commands() {
    let out = wittl(&["plancherel", "measure", "--n", "3"], None);
    assert_eq!(stdout_json(&out)["measure"], json!({"1,1,1": "1/6", "2,1": "2/3", "3": "1/6"}));

    let a = stdout_json(&wittl(&["plancherel", "sample", "--steps", "6", "--seed", "42"], None));
    let b = stdout_json(&wittl(&["plancherel", "sample", "--steps", "6", "--seed", "42"], None));
    assert_eq!(a, b);
    assert_eq!(a["steps"].as_array().unwrap().len(), 6);
    assert_eq!(a["seed"], 42);

    let w = stdout_json(&wittl(&["cat", "theta", "--degree", "6"], Some(&metric().to_string())));
    let wfile = fixture("observe.json", &w);
    let out = wittl(
        &["plancherel", "observe", "--cat", wfile.to_str().unwrap(), "--steps", "6", "--seed", "42"],
        None,
    );
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert_eq!(v["path"], a);
    let obs = v["observations"].as_array().unwrap();
    assert_eq!(obs.len(), 6);
    for (o, step) in obs.iter().zip(a["steps"].as_array().unwrap()) {
        assert_eq!(&o["partition"], step);
        // slices of θ(X) are honest metrics exactly at one-row shapes
        let one_row = step.as_array().unwrap().len() == 1;
        assert_eq!(o["is_l_category"], one_row);
    }
}

#[test]
fn output_flag_writes_a_file() {
    let target = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-fixtures").join("written.json");
    std::fs::create_dir_all(target.parent().unwrap()).unwrap();
    let out = wittl(&["witt", "theta", "--r", "2", "--degree", "2", "--output", target.to_str().unwrap()], None);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert_eq!(written["values"]["2"], "4");
}

#[test]
fn suite_run_passes() {
    let out = wittl(&["suite", "run"], None);
    let v = stdout_json(&out);
    assert_eq!(code(&out), 0, "{v:#}");
    assert_eq!(v["failed"], 0);
    assert!(v["cases"].as_u64().unwrap() > 0);

    let out = wittl(&["suite", "run", "--module", "quantale"], None);
    assert_eq!(code(&out), 0);
    let v = stdout_json(&out);
    assert!(v["suites"].as_array().unwrap().iter().all(|s| s["module"] == "quantale"));

    let out = wittl(&["suite", "run", "--module", "nope"], None);
    assert_eq!(code(&out), 2);
}
