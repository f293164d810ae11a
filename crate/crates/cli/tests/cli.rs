use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    root.to_string_lossy().into_owned()
}

fn lattik(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lattik"))
        .args(args)
        .env_remove("LATTIK_SIZE_GUARD")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn spectrum_of_b2_has_two_points() {
    let out = lattik(&["spectrum", &data("B2.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["points"], serde_json::json!([["0", "a"], ["0", "b"]]));
    assert_eq!(v["supp"][3], serde_json::json!(["1", ["{0,a}", "{0,b}"]]));
}

#[test]
fn spectrum_of_m3_is_empty() {
    let out = lattik(&["spectrum", &data("M3.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["points"], serde_json::json!([]));
}

#[test]
fn malformed_json_reports_position() {
    let dir = std::env::temp_dir().join(format!("lattik-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"name\": \"x\",\n \"elements\": [").unwrap();
    let out = lattik(&["validate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn invalid_lattice_is_an_input_error() {
    let dir = std::env::temp_dir().join(format!("lattik-cli-nj-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("v.json");
    std::fs::write(&f, r#"{"name":"V","elements":["0","x","y"],"leq":[["0","x"],["0","y"]]}"#).unwrap();
    let out = lattik(&["validate", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("least upper bound"));
}

#[test]
fn failed_checks_exit_one() {
    let out = lattik(&["support-check", &data("two.json"), &data("datum-bad-empty.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["violation"]["detail"]["axiom"], "empty");
    let out = lattik(&["tensor-validate", &data("B2-join.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"].as_str().unwrap().starts_with("zero law fails"));
    let out = lattik(&["id-vs-omega", "--unchecked", &data("N5.json")]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["certificate"]["injective"], false);
}

#[test]
fn valid_datum_and_adjunction() {
    let out = lattik(&["support-check", &data("two.json"), &data("datum-two-sierpinski.json")]);
    assert_eq!(out.status.code(), Some(0));
    let out = lattik(&["adjunction", &data("two.json"), &data("sierpinski.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["adjunction"]["map_count"], 3);
    assert_eq!(v["adjunction"]["datum_count"], 3);
    assert_eq!(v["finality"]["final_object"], true);
    for flavor in ["lattice-closed", "lattice-open"] {
        let out = lattik(&["adjunction", "--flavor", flavor, &data("B2.json"), &data("discrete2.json")]);
        assert_eq!(out.status.code(), Some(0), "{flavor}");
    }
}

#[test]
fn frame_verbs() {
    let out = lattik(&["frame-points", &data("B2.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["points"].as_array().unwrap().len(), 2);
    assert_eq!(lattik(&["frame-points", &data("M3.json")]).status.code(), Some(1));
    assert_eq!(lattik(&["spatial", &data("C3.json")]).status.code(), Some(0));
    assert_eq!(lattik(&["pt-vs-hochster", &data("C3.json")]).status.code(), Some(0));
    assert_eq!(lattik(&["id-vs-omega", &data("B2.json")]).status.code(), Some(0));
    let out = lattik(&["extend", &data("B2.json"), &data("two.json"), &data("phi-B2-to-2.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["extension"][3], serde_json::json!([["0", "a", "b", "1"], "1"]));
}

#[test]
fn tensor_verbs() {
    let f = data("C3-nilpotent.json");
    assert_eq!(lattik(&["tensor-validate", &f]).status.code(), Some(0));
    let out = lattik(&["radicals", &f]);
    assert_eq!(json(&out)["radical_ideals"], serde_json::json!([["0", "m"], ["0", "m", "1"]]));
    let out = lattik(&["quotient", &f]);
    assert_eq!(json(&out)["quotient"]["elements"], serde_json::json!(["[0]", "[1]"]));
    assert_eq!(lattik(&["tensor-lemma", &f]).status.code(), Some(0));
    assert_eq!(lattik(&["classify", &data("B2-meet.json")]).status.code(), Some(0));
    // a plain lattice file has no tensor section
    assert_eq!(lattik(&["radicals", &data("B2.json")]).status.code(), Some(2));
}

#[test]
fn naturality_along_a_constant() {
    let out = lattik(&["naturality", &data("C3.json"), &data("map-sierpinski-constant.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["naturality"]["commutes"], true);
}

#[test]
fn dot_output() {
    let out = lattik(&["dot", &data("B2.json")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("->").count(), 4);
    let out = lattik(&["sp", "--format", "dot", &data("C3.json")]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches("->").count(), 2);
    let out = lattik(&["dot", &data("sierpinski.json")]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"p\" -> \"q\""));
    assert_eq!(lattik(&["primes", "--format", "dot", &data("B2.json")]).status.code(), Some(2));
}

#[test]
fn corpus_listing_and_bounds() {
    let out = lattik(&["corpus", "--max", "5"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 10);
    let out = lattik(&["corpus", "--max", "1"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 1);
    assert_eq!(lattik(&["corpus", "--max", "9"]).status.code(), Some(2));
}

#[test]
fn size_guard_from_flag_and_environment() {
    let out = lattik(&["--size-guard", "3", "ideals", &data("M3.json")]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_lattik"))
        .args(["ideals", &data("M3.json")])
        .env("LATTIK_SIZE_GUARD", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size guard"));
}

#[test]
fn corpus_verification_is_deterministic() {
    let args = ["corpus", "--verify", "--max", "4", "--fuzz", "40", "--seed", "5"];
    let one = lattik(&args);
    let mut parallel = args.to_vec();
    parallel.extend(["--jobs", "3"]);
    let two = lattik(&parallel);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
    let v = json(&one);
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 7);
}
