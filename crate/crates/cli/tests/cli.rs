use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(rel: &str) -> String {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures");
    root.join(rel).to_string_lossy().into_owned()
}

fn walllat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walllat"))
        .args(args)
        .env_remove("WALLLAT_ORDER_CAP")
        .env_remove("WALLLAT_INTERVAL_CAP")
        .env_remove("WALLLAT_RADO_CAP")
        .env_remove("WALLLAT_SEED")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = walllat(&full);
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), value)
}

#[test]
fn wall_on_s4_file() {
    let (code, v) = json(&["wall", &fixture("groups/s4.grp")]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "wall");
    assert_eq!(v["maximal_count"], 8);
    assert_eq!(v["bound"], 24);
    assert_eq!(v["holds"], true);
}

#[test]
fn relative_wall_on_diagonal() {
    let (code, v) = json(&["relative-wall", &fixture("groups/s3xs3.grp"), "--subgroup", "diag"]);
    assert_eq!(code, 0);
    assert_eq!(v["maximal_count"], 1);
    assert_eq!(v["bound"], 3);
}

#[test]
fn mod2_all_maximal_and_named() {
    let (code, v) = json(&["mod2", "catalog:s3"]);
    assert_eq!(code, 0);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 4);
    assert_eq!(v["verified"], true);
    let path = std::env::temp_dir().join(format!("walllat-mod2-{}.grp", std::process::id()));
    std::fs::write(
        &path,
        "[group]\nname = s3\ndegree = 3\ngenerators = (1 2 3), (1 2)\n\n[subgroup t]\ngenerators = (1 2)\n\n[subgroup r]\ngenerators = (1 2 3)\n",
    )
    .unwrap();
    let (code, v) = json(&["mod2", path.to_str().unwrap(), "--subgroups", "t,r"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["subgroups"][0]["name"], "t");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 2);
    assert_eq!(walllat(&["mod2", "catalog:s3xs3", "--subgroups", "left"]).status.code(), Some(2));
}

#[test]
fn tensor_equality_for_klein_four() {
    let (code, v) = json(&["tensor", "catalog:c2x2", "catalog:c2x2"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 9);
    assert_eq!(v["bound"], 9);
    assert_eq!(v["equality"], true);
}

#[test]
fn kac_commands() {
    let input = fixture("kac/c3c2_trivial.kac");
    let (code, v) = json(&["kac", "coideals", &input]);
    assert_eq!(code, 0);
    assert_eq!(v["node_count"], 6);
    let nodes = v["nodes"].as_array().unwrap();
    assert!(nodes.iter().all(|n| n["closure"] == true));
    let mut dims: Vec<u64> = nodes.iter().map(|n| n["dim"].as_u64().unwrap()).collect();
    dims.sort_unstable();
    assert_eq!(dims, vec![1, 2, 2, 2, 3, 6]);

    let (code, v) = json(&["kac", "wall", "--input", &input]);
    assert_eq!(code, 0);
    assert_eq!(v["max_count"], 4);
    assert_eq!(v["min_count"], 4);

    let (code, v) = json(&["kac", "relative", &input]);
    assert_eq!(code, 0);
    assert_eq!(v["bound"], 6);

    let (code, v) = json(&["kac", "validate", &fixture("kac/swap_quadratic.kac")]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
    let (code, v) = json(&["kac", "validate", &fixture("kac/swap_quadratic.kac"), "--pentagon", "proof-display"]);
    assert_eq!(code, 1);
    assert_eq!(v["valid"], false);
}

#[test]
fn fusion_commands() {
    let (code, v) = json(&["fusion", "chartable", &fixture("chartables/s3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 1);
    assert_eq!(v["objects"], 3);
    let (code, v) = json(&["fusion", "group", "catalog:s3"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 4);
}

#[test]
fn catalog_commands() {
    let (code, v) = json(&["catalog", "list"]);
    assert_eq!(code, 0);
    assert!(v["groups"].as_array().unwrap().len() >= 40);
    let out = walllat(&["catalog", "sweep", "--family", "solvable"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("s4"));
    assert!(!text.contains("a5"));
}

#[test]
fn text_output() {
    let out = walllat(&["wall", "catalog:s3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "s3 (order 6): 4 maximal subgroups, bound 6: holds\n");
}

#[test]
fn input_errors_exit_2() {
    let missing = walllat(&["wall", "no/such/file.grp"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).contains("no/such/file.grp"));

    let dir = std::env::temp_dir().join(format!("walllat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.grp");
    std::fs::write(&bad, "[group]\nname = bad\ndegree = 3\ngenerators = (1 2\n").unwrap();
    let out = walllat(&["wall", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    assert_eq!(walllat(&["wall"]).status.code(), Some(2));
    assert_eq!(walllat(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(walllat(&["relative-wall", "catalog:s3xs3", "--subgroup", "nope"]).status.code(), Some(2));
    assert_eq!(walllat(&["kac", "relative", &fixture("kac/c3c2_trivial.kac"), "--triple", "99"]).status.code(), Some(2));
}

#[test]
fn caps_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_walllat"))
        .args(["wall", "catalog:s4"])
        .env("WALLLAT_ORDER_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap is 10"));
    let out = walllat(&["--rado-cap", "3", "mod2", "catalog:s4"]);
    assert_eq!(out.status.code(), Some(2));
}
