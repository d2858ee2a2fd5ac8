use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;
use tropcomp::grasstrop::{random_refinement_pair, trial_rng};
use tropcomp::matroidlab::LiftFunctionJson;

struct Run {
    code: i32,
    stdout: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", self.stdout))
    }
}

fn tropcomp(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tropcomp")).args(args).output().unwrap();
    Run { code: out.status.code().unwrap(), stdout: String::from_utf8(out.stdout).unwrap() }
}

fn write(dir: &TempDir, name: &str, v: &Value) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const PAIRS: [[usize; 2]; 6] = [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]];

fn lift24(values: [i64; 6]) -> Value {
    let entries: Vec<Value> =
        PAIRS.iter().zip(values).map(|(p, v)| json!({ "subset": p, "value": v.to_string() })).collect();
    json!({ "r": 2, "n": 4, "values": entries })
}

fn gr24() -> Value {
    json!({ "ring": { "vars": ["p12", "p13", "p14", "p23", "p24", "p34"] },
            "generators": ["p12*p34 - p13*p24 + p14*p23"] })
}

#[test]
fn initial_ideal_command() {
    let dir = TempDir::new().unwrap();
    let ideal = write(&dir, "g.json", &gr24());
    let zero = tropcomp(&["initial", "--input", s(&ideal), "--weight", "0,0,0,0,0,0"]);
    assert_eq!(zero.code, 0);
    let gens = zero.json()["result"]["generators"].as_array().unwrap().clone();
    assert_eq!(gens.len(), 1);
    assert_eq!(gens[0].as_str().unwrap().matches('p').count(), 6);

    let split = tropcomp(&["initial", "--input", s(&ideal), "--weight", "0,0,1,1,0,0"]);
    assert_eq!(split.code, 0);
    let g = split.json()["result"]["generators"][0].as_str().unwrap().to_string();
    assert!(g.contains("p12*p34") && g.contains("p13*p24") && !g.contains("p14"), "{g}");

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(tropcomp(&["initial", "--input", s(&bad), "--weight", "0,0,0,0,0,0"]).code, 2);
}

#[test]
fn plucker_ideal_default() {
    let r = tropcomp(&["initial", "--r", "2", "--n", "4", "--weight", "0,0,1,1,0,0"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["result"]["generators"].as_array().unwrap().len(), 1);
}

#[test]
fn tropmember_command() {
    let dir = TempDir::new().unwrap();
    let ideal = write(&dir, "g.json", &gr24());
    let r = tropcomp(&["tropmember", "--input", s(&ideal), "--weight", "0,0,0,0,0,0"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["result"]["tropical"], true);

    let r = tropcomp(&["tropmember", "--input", s(&ideal), "--weight", "0,-1,0,0,0,0"]);
    assert_eq!(r.code, 1);
    let v = r.json();
    assert_eq!(v["verdict"], "fail");
    assert!(!v["counterexamples"].as_array().unwrap().is_empty());

    let inhom = write(&dir, "h.json", &json!({ "ring": { "vars": ["x", "y"] }, "generators": ["x - 1"] }));
    assert_eq!(tropcomp(&["tropmember", "--input", s(&inhom), "--weight", "0,0"]).code, 2);
}

#[test]
fn gfan_cone_command() {
    let dir = TempDir::new().unwrap();
    let ideal = write(&dir, "g.json", &gr24());
    let r = tropcomp(&["gfan-cone", "--input", s(&ideal), "--weight", "0,0,1,1,0,0"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert!(v["result"]["equalities"].is_array());
    assert!(v["result"]["inequalities"].is_array());
}

#[test]
fn subdivide_command() {
    let dir = TempDir::new().unwrap();
    let trivial = write(&dir, "z.json", &lift24([0; 6]));
    let r = tropcomp(&["subdivide", "--input", s(&trivial)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["result"]["subdivision"]["cells"].as_array().unwrap().len(), 1);

    let split = write(&dir, "s.json", &lift24([0, 0, 1, 1, 0, 0]));
    let r = tropcomp(&["subdivide", "--input", s(&split), "--r", "2", "--n", "4"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["result"]["subdivision"]["cells"].as_array().unwrap().len(), 2);
    assert_eq!(v["result"]["matroid"], true);

    let short = json!({ "r": 2, "n": 4, "values": [{ "subset": [1, 2], "value": "0" }] });
    let short = write(&dir, "short.json", &short);
    assert_eq!(tropcomp(&["subdivide", "--input", s(&short)]).code, 2);
    assert_eq!(tropcomp(&["subdivide", "--input", s(&split), "--n", "5"]).code, 2);
}

#[test]
fn crossratio_command() {
    let dir = TempDir::new().unwrap();
    let cases = [([0; 6], 0, Some("NoSplit")), ([0, 0, 1, 1, 0, 0], 0, Some("SplitC")), ([0, -1, 0, 0, 0, 0], 1, None)];
    for (k, (vals, code, class)) in cases.into_iter().enumerate() {
        let f = write(&dir, &format!("w{k}.json"), &lift24(vals));
        let r = tropcomp(&["crossratio", "--input", s(&f), "--i", "1,2,3,4"]);
        assert_eq!(r.code, code, "{vals:?}");
        let v = r.json();
        match class {
            Some(c) => assert_eq!(v["result"]["class"], c),
            None => assert_eq!(v["verdict"], "fail"),
        }
    }
    let f = write(&dir, "w.json", &lift24([0; 6]));
    assert_eq!(tropcomp(&["crossratio", "--input", s(&f), "--i", "1,2,3"]).code, 2);
}

#[test]
fn matroid_check_command() {
    let dir = TempDir::new().unwrap();
    let m = write(&dir, "m.json", &json!({ "n": 4, "bases": [[1, 2], [1, 3], [1, 4]] }));
    let r = tropcomp(&["matroid-check", "--input", s(&m)]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["result"], json!({ "matroid": true, "connected": false }));
    let bad = write(&dir, "b.json", &json!({ "n": 4, "bases": [[1, 2], [3, 4]] }));
    assert_eq!(tropcomp(&["matroid-check", "--input", s(&bad)]).code, 1);
}

#[test]
fn face_command() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "s.json", &lift24([0, 0, 1, 1, 0, 0]));
    let r = tropcomp(&["face", "--input", s(&f), "--i0", "4", "--value", "1"]);
    assert_eq!(r.code, 0);
    let face: LiftFunctionJson = serde_json::from_value(r.json()["result"].clone()).unwrap();
    let face = face.to_lift().unwrap();
    assert_eq!((face.r(), face.n()), (1, 3));
    assert_eq!(tropcomp(&["face", "--input", s(&f), "--i0", "9", "--value", "1"]).code, 2);
}

#[test]
fn pluecker_val_command() {
    let dir = TempDir::new().unwrap();
    let one = json!([{ "exp": 0, "coeff": "1" }]);
    let zero = json!([]);
    let t = json!([{ "exp": 1, "coeff": "1" }]);
    let m = json!({ "r": 2, "n": 4, "entries": [[one, zero, one, one], [zero, one, one, t]] });
    let f = write(&dir, "l.json", &m);
    let r = tropcomp(&["pluecker-val", "--input", s(&f)]);
    assert_eq!(r.code, 0);
    let w: LiftFunctionJson = serde_json::from_value(r.json()["result"].clone()).unwrap();
    let w = w.to_lift().unwrap();
    assert_eq!(w.value_at(&[1, 4]).unwrap().to_string(), "1");
    assert_eq!(w.value_at(&[3, 4]).unwrap().to_string(), "0");

    let rep = json!({ "r": 2, "n": 4, "entries": [[one, one, one, one], [zero, zero, one, t]] });
    let f = write(&dir, "rep.json", &rep);
    assert_eq!(tropcomp(&["pluecker-val", "--input", s(&f)]).code, 2);
}

#[test]
fn tree_and_dressian_commands() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "s.json", &lift24([0, 0, 1, 1, 0, 0]));
    let r = tropcomp(&["tree", "--input", s(&f)]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["result"]["leaves"], 4);
    assert_eq!(v["result"]["edges"].as_array().unwrap().len(), 5);
    assert_eq!(tropcomp(&["dressian-check", "--input", s(&f)]).code, 0);

    let bad = write(&dir, "b.json", &lift24([0, -1, 0, 0, 0, 0]));
    assert_eq!(tropcomp(&["tree", "--input", s(&bad)]).code, 1);
    let r = tropcomp(&["dressian-check", "--input", s(&bad)]);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["counterexamples"].as_array().unwrap().len(), 1);
}

#[test]
fn refine_command() {
    let dir = TempDir::new().unwrap();
    let fine = write(&dir, "f.json", &lift24([0, 0, 1, 1, 0, 0]));
    let coarse = write(&dir, "c.json", &lift24([0; 6]));
    let r = tropcomp(&["refine", "--fine", s(&fine), "--coarse", s(&coarse), "--r", "2", "--n", "4"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["result"]["I"], json!([1, 2, 3, 4]));
    assert_eq!(v["result"]["class_fine"], "SplitC");
    assert_eq!(v["result"]["class_coarse"], "NoSplit");
    let same = tropcomp(&["refine", "--fine", s(&fine), "--coarse", s(&fine), "--r", "2", "--n", "4"]);
    assert_eq!(same.code, 2);
}

#[test]
fn refine_command_on_realizable_d36_pair() {
    let dir = TempDir::new().unwrap();
    let (fine, coarse) = (0..).find_map(|k| random_refinement_pair(3, 6, &mut trial_rng(9, k)).unwrap()).unwrap();
    let fine = write(&dir, "f.json", &serde_json::to_value(LiftFunctionJson::from_lift(&fine)).unwrap());
    let coarse = write(&dir, "c.json", &serde_json::to_value(LiftFunctionJson::from_lift(&coarse)).unwrap());
    let r = tropcomp(&["refine", "--fine", s(&fine), "--coarse", s(&coarse), "--r", "3", "--n", "6"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_ne!(v["result"]["class_fine"], v["result"]["class_coarse"]);
    assert_ne!(v["result"]["initial_fine"], v["result"]["initial_coarse"]);
}

#[test]
fn suite_command() {
    let r = tropcomp(&["suite", "--name", "membership-equiv", "--seed", "5", "--trials", "50", "--n", "5"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.json()["verdict"], "pass");
    let r = tropcomp(&["suite", "--name", "realizability", "--seed", "5", "--trials", "10", "--r", "3", "--n", "6"]);
    assert_eq!(r.code, 0);
    assert_eq!(tropcomp(&["suite", "--name", "nope", "--seed", "5"]).code, 2);
    // the seed is mandatory
    assert_eq!(tropcomp(&["suite", "--name", "lineality"]).code, 2);
}

#[test]
fn reports_are_reproducible() {
    let args = ["suite", "--name", "lineality", "--seed", "3", "--trials", "12", "--r", "2", "--n", "5"];
    let a = tropcomp(&args);
    let b = tropcomp(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let c = tropcomp(&["suite", "--name", "lineality", "--seed", "4", "--trials", "12", "--r", "2", "--n", "5"]);
    assert_ne!(a.json()["input_digest"], c.json()["input_digest"]);
    let timed = tropcomp(&["suite", "--name", "lineality", "--seed", "3", "--trials", "12", "--timing"]);
    assert!(timed.json()["timing_ms"].is_u64());
}

#[test]
fn output_flag_writes_file() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "z.json", &lift24([0; 6]));
    let out = dir.path().join("report.json");
    let r = tropcomp(&["subdivide", "--input", s(&f), "--output", s(&out)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["command"], "subdivide");
}
