use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jcrystal"))
        .args(args)
        .env_remove("JCRYSTAL_GUARD")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// A JSON bipartition `{minus, plus}` as `(λ⁻;λ⁺)`.
fn shape(v: &Value) -> String {
    let parts = |k: &str| {
        let p: Vec<String> = v[k].as_array().unwrap().iter().map(|x| x.to_string()).collect();
        p.join(",")
    };
    format!("({};{})", parts("minus"), parts("plus"))
}

/// Runs with `--format json`, checks exit code 0 and validates against the
/// shipped schema.
fn run_json(schema: &str, args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("../../docs/schemas/{schema}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: {errors:?}");
    v
}

#[test]
fn decompose_rank_one_degree_two() {
    let v = run_json("decompose", &["decompose", "--r", "1", "--d", "2"]);
    let shapes: Vec<(String, u64)> = v["shapes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| (shape(&s["shape"]), s["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(
        shapes,
        vec![
            ("(0,0;2)".to_string(), 1),
            ("(1,0;1)".to_string(), 2),
            ("(1,1;0)".to_string(), 1),
            ("(2,0;0)".to_string(), 1),
        ]
    );
    assert_eq!(v["dimension"], 9);
}

#[test]
fn verify_passes_and_exits_zero() {
    let o = run(&["verify", "--r", "1", "--d", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("r=1 d=2:") && stdout(&o).contains(" 0 failed"));
    let v = run_json("verify", &["verify", "--r", "1", "--d", "1", "--only", "defrel,hecke"]);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] != "fail"));
}

#[test]
fn branching_of_a_single_box() {
    let v = run_json("lr", &["lr", "--r", "1", "--lambda", "(;)", "--mu", "(1,0,0)", "--check"]);
    let terms: Vec<(String, u64)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (shape(&t["nu"]), t["multiplicity"].as_u64().unwrap()))
        .collect();
    // the vector representation splits into pieces of sizes 2 and 1
    assert_eq!(terms, vec![("(0,0;1)".to_string(), 1), ("(1,0;0)".to_string(), 1)]);
    assert_eq!(v["agree"], true);
    assert_eq!(v["branching"].as_array().unwrap().len(), 2);
}

#[test]
fn single_lr_coefficient() {
    let o = run(&["lr", "--r", "1", "--lambda", "(1;)", "--mu", "1", "--nu", "(1;1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(1,0;1)                  1"));
}

#[test]
fn cells_and_kl() {
    let v = run_json("cells", &["cells", "--rank", "2"]);
    assert_eq!(v["cells"].as_array().unwrap().len(), 6);
    assert_eq!(v["agree"], true);
    let v = run_json("kl", &["kl", "--rank", "2"]);
    assert_eq!(v["entries"].as_array().unwrap().len(), 8);
    assert_eq!(v["parabolic"], true);
}

#[test]
fn graphs_in_every_format() {
    let v = run_json("graph", &["jcrystal-graph", "--r", "1", "--power", "2"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 9);
    let v = run_json("graph", &["crystal-graph", "--r", "1", "--shape", "2,1"]);
    assert_eq!(v["nodes"].as_array().unwrap().len(), 8);
    let o = run(&["jcrystal-graph", "--r", "2", "--shape", "(1;1)", "--format", "dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph") && dot.contains("style=dashed"));
}

#[test]
fn dot_file_is_written() {
    let path = std::env::temp_dir().join(format!("jcrystal-test-{}.dot", std::process::id()));
    let o = run(&["jcrystal-graph", "--r", "2", "--power", "1", "--dot", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(dot.matches(" -> ").count(), 4);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["decompose", "--r", "2", "--d", "3", "--format", "json"][..],
        &["jcrystal-graph", "--r", "2", "--power", "2", "--format", "dot"],
        &["lr", "--r", "2", "--lambda", "(1;1)", "--mu", "2,1"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_two_and_name_the_flag() {
    for (args, flag) in [
        (&["decompose", "--r", "0", "--d", "2"][..], "--r"),
        (&["verify", "--r", "1", "--d", "1", "--only", "nope"], "--only"),
        (&["lr", "--r", "1", "--lambda", "(1,2;)", "--mu", "1"], "--lambda"),
        (&["lr", "--r", "1", "--lambda", "(;)", "--mu", "1,1,1,1"], "--mu"),
        (&["decompose", "--r", "1", "--d", "2", "--format", "dot"], "--format"),
        (&["decompose", "--r", "2", "--d", "6", "--guard", "100"], "--guard"),
        (&["frobnicate"], "frobnicate"),
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains(flag), "{args:?}");
    }
}

#[test]
fn guard_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_jcrystal"))
        .args(["decompose", "--r", "1", "--d", "3"])
        .env("JCRYSTAL_GUARD", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("above the guard of 10"));
}
