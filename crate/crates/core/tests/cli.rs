use std::process::Command;

use serde_json::Value;

fn bcwitt(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bcwitt")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let v = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v, String::from_utf8(out.stderr).unwrap())
}

#[test]
fn dr_table_gaussian() {
    let (code, v, _) = bcwitt(&["dr", "table", "--field", "x^2+1", "--modulus", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["elements"].as_array().unwrap().len(), 3);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn constructions_agree_in_size() {
    for c in ["a", "b", "c"] {
        let (code, v, _) = bcwitt(&["dr", "table", "--field", "x", "--modulus", "12", "--construction", c]);
        assert_eq!(code, 0);
        assert_eq!(v["size"], "12");
    }
}

#[test]
fn reducible_is_input_error() {
    let (code, _, err) = bcwitt(&["field", "new", "--poly", "x^2-x"]);
    assert_eq!(code, 1);
    assert!(err.contains("reducible"));
}

#[test]
fn usage_errors() {
    assert_eq!(bcwitt(&["dr", "table", "--field", "x"]).0, 3);
    assert_eq!(bcwitt(&["witt", "ghost", "--vector", "not json"]).0, 3);
    assert_eq!(bcwitt(&["witt", "ghost", "--ring", "r", "--vector", "{}"]).0, 3);
}

#[test]
fn deterministic_output() {
    let args = ["witt", "frobcheck", "--m", "7", "--p", "3", "--seed", "5"];
    let a = Command::new(env!("CARGO_BIN_EXE_bcwitt")).args(args).output().unwrap();
    let b = Command::new(env!("CARGO_BIN_EXE_bcwitt")).args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let (code, v, _) = bcwitt(&args);
    assert_eq!((code, v["passed"].clone()), (0, Value::Bool(true)));
}

#[test]
fn rayclass_payload() {
    let (code, v, _) = bcwitt(&["rayclass", "--field", "x^2-3", "--modulus", "1", "--strict"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], "2");
    let (_, v, _) = bcwitt(&["rayclass", "--field", "x^2-3", "--modulus", "1"]);
    assert_eq!(v["order"], "1");
}

#[test]
fn ideal_payload() {
    let (code, v, _) = bcwitt(&["ideal", "show", "--field", "x^2+5", "--gens", "2, 1+t"]);
    assert_eq!(code, 0);
    assert_eq!(v["norm"], "2");
    assert_eq!(v["den"], "1");
    let (_, v, _) = bcwitt(&["ideal", "factor", "--field", "x^2+5", "--gens", "6"]);
    assert_eq!(v["factors"].as_array().unwrap().len(), 3);
}

#[test]
fn witt_payloads() {
    let (_, v, _) = bcwitt(&["witt", "ghost", "--vector", r#"{"S":[1,2,4],"x":{"1":"2","2":"0","4":"0"}}"#]);
    assert_eq!(v["w"]["4"], "16");
    let (code, _, err) = bcwitt(&["witt", "unghost", "--vector", r#"{"S":[1,2],"w":{"1":"0","2":"1"}}"#]);
    assert_eq!(code, 1);
    assert!(err.contains("non-integral"));
    let (_, v, _) = bcwitt(&["witt", "member", "--vector", r#"{"S":[1,2,4],"w":{"1":"1","2":"1","4":"1"}}"#]);
    assert_eq!(v["member"], true);
    let (_, v, _) = bcwitt(&["witt", "periodic-rank", "--field", "x^2+1", "--modulus", "2"]);
    assert_eq!(v["rank"], "3");
}

#[test]
fn endo_payloads() {
    let (code, v, _) = bcwitt(&["endo", "zeta", "--field", "x^2+5", "--bound", "5", "--euler-check"]);
    assert_eq!(code, 0);
    assert_eq!(v["coefficients"], serde_json::json!(["1", "1", "2", "1", "1"]));
    let (code, v, _) = bcwitt(&["endo", "verify", "--field", "x", "--modulus", "6"]);
    assert_eq!((code, v["all_hold"].clone()), (0, Value::Bool(true)));
    let (code, v, _) = bcwitt(&["endo", "ggc", "--level", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["bijection"].as_array().unwrap().len(), 6);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("bcwitt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.csv");
    let (code, _, _) = bcwitt(&["endo", "spectrum", "--field", "x", "--modulus", "4", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("path,value\n"));
    assert!(text.contains("size,4"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sidecar_field() {
    let dir = std::env::temp_dir().join(format!("bcwitt-sidecar-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cubic.json");
    std::fs::write(
        &path,
        r#"{"integral_basis": [["1","0","0"],["0","1","0"],["0","0","1"]],
            "units": {"torsion": {"element": ["-1","0","0"], "order": 2}, "fundamental": [["-1","1","0"]]},
            "class_number": "1"}"#,
    )
    .unwrap();
    let (code, v, _) = bcwitt(&["field", "new", "--poly", "x^3-2", "--sidecar", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["discriminant"], "-108");
    assert_eq!(v["units"]["fundamental_norms"], serde_json::json!(["1"]));
    std::fs::remove_dir_all(&dir).unwrap();
}
