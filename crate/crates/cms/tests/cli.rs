//! Black-box tests of the `cms` binary: exit codes, output formats,
//! and a JSON round-trip through a temp file.

use std::process::{Command, Output};

fn cms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cms"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn construct_catalog_pretty() {
    let out = cms(&["construct", "--catalog", "m3", "--format", "pretty"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "8 1 6\n3 5 7\n4 9 2\n");
}

#[test]
fn construct_couples_json() {
    let out = cms(&["construct", "--level", "2", "--couples", "3,1;27,9"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["order"], 9);
    assert_eq!(doc["elements"][0], 71);
    assert_eq!(doc["provenance"]["spec"]["k"], 1);
}

#[test]
fn construct_compound_recipe() {
    let out = cms(&[
        "construct", "--compound", "pattern=m3", "base=m3", "step=9", "--format", "pretty",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("71 64 69 |  8  1  6 | 53 46 51"));
}

#[test]
fn construct_require_natural_rejects() {
    let out = cms(&["construct", "--couples", "1,3;5,7", "--require-natural"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8(out.stderr).unwrap().is_empty());
}

#[test]
fn construct_level_mismatch_rejects() {
    let out = cms(&["construct", "--level", "3", "--couples", "1,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn analyze_catalog_csv() {
    let out = cms(&["analyze", "--catalog", "t9a", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "name,n,S,rank,H,C,R,L,is_magic,is_associative,is_pandiagonal"
    );
    let row = lines.next().unwrap();
    assert_eq!(
        row,
        "t9a,9,369,5,1.12999,48.5720,1301165856,19840983777,true,true,false"
    );
}

#[test]
fn analyze_spec_json() {
    let out = cms(&["analyze", "--spec", "3,1", "--name", "m3-spec"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["name"], "m3-spec");
    assert_eq!(doc["properties"]["magic_constant"], "15");
    assert_eq!(doc["spectrum"]["rank"], 3);
    assert_eq!(doc["spectrum"]["R"]["exact"], "2448");
}

#[test]
fn analyze_roundtrip_through_file() {
    let dir = std::env::temp_dir().join(format!("cms-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("f27a.json");

    let constructed = cms(&["construct", "--catalog", "f27a"]);
    assert!(constructed.status.success());
    std::fs::write(&path, constructed.stdout).unwrap();

    let out = cms(&["analyze", "--in", path.to_str().unwrap(), "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().starts_with("f27a,27,9855,7,"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn enumerate_counts() {
    let out = cms(&["enumerate", "--counts", "--max-level", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,l,first_couples,num_squares,num_clans,variant_exponent,variant_count"
    );
    assert_eq!(lines.next().unwrap(), "3,1,1,1,1,0,1");
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows[4].starts_with("243,5,45,113400,945,7380,8^7380"));
}

#[test]
fn enumerate_series() {
    let out = cms(&["enumerate", "--series", "--max-level", "6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("l,n,sigma1"));
    assert!(text.contains("5,243,7174575,1.16800,78.7368,11"));
}

#[test]
fn enumerate_clan_table() {
    let out = cms(&["enumerate", "--level", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 16); // header + 15 clans
    assert!(text.contains("\"{(1,3),(9,27),(81,243)}\",1.16247,64.7291"));
}

#[test]
fn verify_all_tables() {
    let out = cms(&["verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for table in ["table2", "table3", "table4", "table5", "table6", "table7", "table8"] {
        assert!(text.contains(&format!("{table}: PASS")), "missing {table} in {text}");
    }
}

#[test]
fn verify_single_table() {
    let out = cms(&["verify", "--only", "table5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "table5: PASS\n");

    let out = cms(&["verify", "--only", "table99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_catalog_name_rejects() {
    let out = cms(&["construct", "--catalog", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}
