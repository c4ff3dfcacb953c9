use std::process::{Command, Output};

fn weil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weil")).args(args).output().expect("run weil")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn algebra_presets() {
    let o = weil(&["algebra", "dual"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "dim: 2\nheight: 1\nbasis: [1, T]\n");
    let o = weil(&["algebra", "trunc:2,2", "--json"]);
    assert_eq!(json(&o)["dim"], 6);
    let o = weil(&["algebra", "tensor:dual,dual", "--json"]);
    let v = json(&o);
    assert_eq!((v["dim"].as_u64(), v["height"].as_u64()), (Some(4), Some(2)));
}

#[test]
fn algebra_json_reingests() {
    for spec in ["trunc:2,2", "tensor:dual,dual", "tensor:trunc:1,2,dual", "trunc:3,2"] {
        let first = weil(&["algebra", spec, "--json"]);
        let text = stdout(&first);
        let again = weil(&["algebra", text.trim(), "--json"]);
        assert!(again.status.success(), "{}", stderr(&again));
        assert_eq!(json(&first)["basis"], json(&again)["basis"]);

        let dir = std::env::temp_dir().join(format!("weil-reingest-{}-{}", std::process::id(), spec.replace(':', "_")));
        std::fs::write(&dir, &text).unwrap();
        let from_file = weil(&["algebra", &format!("@{}", dir.display()), "--json"]);
        assert_eq!(stdout(&from_file), text);
        std::fs::remove_file(dir).unwrap();
    }
}

#[test]
fn lift_outputs() {
    let v = json(&weil(&["lift", "dual", "x1^2", "--point", "x1=3+1T"]));
    assert_eq!(v, serde_json::json!({"1": 9.0, "T": 6.0}));
    let v = json(&weil(&["lift", "trunc:1,3", "exp(x1)", "--point", "x1=0+1T"]));
    assert_eq!(v["T^2"], 0.5);
    assert!((v["T^3"].as_f64().unwrap() - 1.0 / 6.0).abs() < 1e-15);
    let v = json(&weil(&["lift", "trunc:2,2", "x1*x2", "--point", "x1=1+T1,x2=2+T2", "--json"]));
    assert_eq!(v["coeffs"].as_array().unwrap().len(), 6);
}

#[test]
fn lift_outside_domain() {
    let o = weil(&["lift", "dual", "1/x1", "--point", "x1=0+1T"]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.starts_with("error:") && err.contains("denominator not invertible at base point"), "{err}");
    assert_eq!(err.lines().count(), 1);
}

#[test]
fn mul_and_tensor_and_taylor() {
    assert_eq!(stdout(&weil(&["mul", "dual", "3+5T", "2-T"])), "6 + 7T\n");
    let v = json(&weil(&["tensor", "dual", "trunc:1,2", "--json"]));
    assert_eq!((v["dim"].as_u64(), v["height"].as_u64()), (Some(6), Some(3)));
    let v = json(&weil(&["taylor", "exp(x1)", "--at", "0", "--order", "3", "--json"]));
    assert_eq!(v["coeffs"][2], 0.5);
}

#[test]
fn frame_check_exit_codes() {
    let o = weil(&["frame-check", "--algebra", "trunc:2,2", "--field", "1,0", "--field", "0,1", "--samples", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "pass");

    let o = weil(&["frame-check", "--algebra", "dual", "--field", "x1", "--point", "x1=0+1T", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["samples"][0]["ok"], false);
    assert_eq!(v["samples"][0]["base"][0], 0.0);

    let o = weil(&[
        "frame-check", "--algebra", "tensor:dual,dual", "--field", "cos(x1),sin(x1)", "--field", "-sin(x1),cos(x1)",
        "--region", "x1:[-3,3],x2:[-3,3]",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn frame_check_writes_file() {
    let path = std::env::temp_dir().join(format!("weil-frame-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = weil(&["frame-check", "--algebra", "dual", "--field", "1", "--samples", "3", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["samples"].as_array().unwrap().len(), 3);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn weil_check_pairs() {
    for (a, b) in [("dual", "dual"), ("trunc:2,2", "reals"), ("trunc:1,2", "dual")] {
        let o = weil(&["weil-check", a, b, "--samples", "200", "--seed", "0"]);
        assert_eq!(o.status.code(), Some(0), "{a} {b}");
        assert!(json(&o)["max_residual"].as_f64().unwrap() <= 1e-10);
    }
}

#[test]
fn usage_errors_exit_64_with_one_line() {
    let cases: &[&[&str]] = &[
        &["algebra", "trunc:0,2"],
        &["algebra", "nonsense"],
        &["bogus"],
        &["lift", "dual", "x1^", "--point", "x1=1"],
        &["lift", "dual", "x2", "--point", "x1=1"],
        &["frame-check", "--algebra", "dual", "--field", "1,0"],
        &["frame-check", "--algebra", "dual", "--field", "1", "--region", "x1:[1,0]"],
        &["mul", "dual", "1+T^2", "T"],
        &["taylor", "exp(x1)", "--order", "abc"],
    ];
    for args in cases {
        let o = weil(args);
        assert_eq!(o.status.code(), Some(64), "{args:?}: {}", stderr(&o));
        let err = stderr(&o);
        assert!(err.starts_with("error: "), "{args:?}: {err}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn help_and_version_succeed() {
    assert!(weil(&["--help"]).status.success());
    assert!(weil(&["--version"]).status.success());
}
