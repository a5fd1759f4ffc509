use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_real-enum"))
        .env("REAL_ENUM_CACHE", cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn value_of(out: &Output) -> String {
    json(out)["entries"][0]["value"].as_str().unwrap().to_string()
}

#[test]
fn compute_records() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["compute", "gw", "--surface", "cp2", "--degree", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(value_of(&out), "12");
    let doc = json(&out);
    assert_eq!(doc["schema"], 1);
    assert_eq!(doc["meta"]["convention"], "f-mass");

    let out = run(dir.path(), &["compute", "welschinger", "--surface", "f2", "--class", "2,0"]);
    assert_eq!(code(&out), 0);
    let ellipsoid = run(dir.path(), &["compute", "ellipsoid", "--degree", "2"]);
    assert_eq!(value_of(&out), value_of(&ellipsoid));
    assert_eq!(value_of(&out), "6");

    let out = run(dir.path(), &["--format", "csv", "compute", "welschinger", "--surface", "f0", "--class", "2,2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "surface,class,s,kind,value\nf0,\"2,2\",0,welschinger,8\n");
}

#[test]
fn invalid_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["compute", "gw", "--surface", "cp2", "--degree", "0"][..],
        &["compute", "gw", "--surface", "p3", "--degree", "1"],
        &["compute", "gw", "--surface", "f0", "--class", "1"],
        &["compute", "gw", "--surface", "f0", "--degree", "2"],
        &["compute", "welschinger", "--surface", "cp2_1", "--class", "2,-1"],
        &["compute", "ellipsoid", "--degree", "0"],
        &["check", "homology", "--model", "dp9"],
        &["check", "table", "/nonexistent/table.json"],
        &["frobnicate"],
    ] {
        let out = run(dir.path(), args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn warm_cache_is_byte_identical_and_short_circuits() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["compute", "gw", "--surface", "f0", "--class", "2,3"];
    let cold = run(dir.path(), &args);
    let warm = run(dir.path(), &args);
    assert_eq!(code(&cold), 0);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(value_of(&cold), "96");

    // a planted cache entry is returned without recomputation
    let ls = json(&run(dir.path(), &["cache", "ls"]));
    let file = ls[0]["file"].as_str().unwrap();
    let path = dir.path().join(file);
    let text = std::fs::read_to_string(&path).unwrap().replace("\"96\"", "\"97\"");
    std::fs::write(&path, text).unwrap();
    assert_eq!(value_of(&run(dir.path(), &args)), "97");
    assert_eq!(value_of(&run(dir.path(), &["--no-cache", "compute", "gw", "--surface", "f0", "--class", "2,3"])), "96");

    let cleared = json(&run(dir.path(), &["cache", "clear"]));
    assert_eq!(cleared["removed"], 1);
    assert_eq!(json(&run(dir.path(), &["cache", "ls"])), Value::Array(Vec::new()));
}

#[test]
fn output_round_trips_through_ingest() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["--no-cache", "compute", "welschinger", "--degree", "4"]);
    let file = dir.path().join("w4.json");
    std::fs::write(&file, &out.stdout).unwrap();
    let store = dir.path().join("store");
    let ingested = run(&store, &["ingest", file.to_str().unwrap()]);
    assert_eq!(code(&ingested), 0, "{}", String::from_utf8_lossy(&ingested.stderr));
    let stored = json(&ingested)["stored"].as_str().unwrap().to_string();
    let back: Value = serde_json::from_str(&std::fs::read_to_string(stored).unwrap()).unwrap();
    assert_eq!(back, json(&out));
}

#[test]
fn ingest_rejects_bad_tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["--no-cache", "compute", "gw", "--degree", "2"]);
    let base: Value = json(&out);

    let mut dup = base.clone();
    let entry = dup["entries"][0].clone();
    dup["entries"].as_array_mut().unwrap().push(entry);
    let mut missing = base.clone();
    missing["meta"].as_object_mut().unwrap().remove("convention");
    let mut unsourced = base.clone();
    unsourced["meta"].as_object_mut().unwrap().remove("source");

    for (name, doc, needle) in [
        ("dup", dup, "duplicate"),
        ("missing", missing, "f-mass-complement"),
        ("unsourced", unsourced, "source"),
    ] {
        let file = dir.path().join(format!("{name}.json"));
        std::fs::write(&file, doc.to_string()).unwrap();
        let out = run(dir.path(), &["ingest", file.to_str().unwrap()]);
        assert_eq!(code(&out), 2, "{name}");
        assert!(String::from_utf8_lossy(&out.stderr).contains(needle), "{name}");
    }
}

fn synthetic(dir: &Path, flags: Value, entries: Value) -> String {
    let doc = serde_json::json!({
        "schema": 1,
        "meta": {
            "surface": "cp2_1",
            "real_structure": "synthetic",
            "L": "S1",
            "F": "standard",
            "flags": flags,
            "convention": "f-mass",
            "kind": "welschinger",
            "source": "planted"
        },
        "entries": entries
    });
    let path = dir.join(format!("t{}.json", doc.to_string().len()));
    std::fs::write(&path, doc.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn table_checks_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let flags = serde_json::json!({ "chain_of_spheres": true, "F_nontrivial": true });
    let divisibility = synthetic(dir.path(), flags.clone(), serde_json::json!([{ "class": [3, -1], "s": 3, "value": "-6" }]));
    let out = run(dir.path(), &["check", "table", &divisibility]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    let failed: Vec<&str> = report["lines"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|l| l["status"] == "fail")
        .map(|l| l["check"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["divisibility"]);

    let vanishing = synthetic(dir.path(), flags, serde_json::json!([{ "class": [3, -1], "s": 0, "value": "2" }]));
    assert_eq!(code(&run(dir.path(), &["check", "table", &vanishing])), 1);

    let unflagged = synthetic(dir.path(), serde_json::json!({}), serde_json::json!([{ "class": [3, -1], "s": 3, "value": "-6" }]));
    let out = run(dir.path(), &["check", "table", &unflagged]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["lines"].as_array().unwrap().iter().all(|l| l["status"] == "n/a"));
}

#[test]
fn monotonicity_and_identity_checks() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    std::fs::write(&good, r#"[{"chi": -2, "value": "12"}, {"chi": 0, "value": 8}, {"chi": 2, "value": "8"}]"#).unwrap();
    assert_eq!(code(&run(dir.path(), &["check", "monotonicity", good.to_str().unwrap()])), 0);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"[{"chi": 0, "value": "1"}, {"chi": 2, "value": "5"}]"#).unwrap();
    assert_eq!(code(&run(dir.path(), &["check", "monotonicity", bad.to_str().unwrap()])), 1);

    for args in [
        &["check", "abv-complex", "--max-total", "3"][..],
        &["check", "abv-real", "--class", "2,2"],
        &["check", "class-trop", "--max-degree", "2"],
        &["check", "homology", "--model", "dp2"],
    ] {
        let out = run(dir.path(), args);
        assert_eq!(code(&out), 0, "{args:?}");
    }
    // the wrong sign bit breaks the real identity
    let out = run(dir.path(), &["check", "abv-real", "--gamma", "1"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn homology_model_files() {
    let dir = tempfile::tempdir().unwrap();
    let model = real_enum_core::mod2homology::builtin_model("dp1_N").unwrap();
    let path = dir.path().join("model.json");
    std::fs::write(&path, model.to_json()).unwrap();
    let out = run(dir.path(), &["--format", "text", "check", "homology", "--model-file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("dimension 7"));

    let mut broken = model;
    broken.b1_l = 3;
    std::fs::write(&path, broken.to_json()).unwrap();
    let out = run(dir.path(), &["check", "homology", "--model-file", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}
