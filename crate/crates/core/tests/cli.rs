use std::process::{Command, Output};

use serde_json::Value;

use charnum::catalog::{classify, Family, SpaceSpec};

fn charnum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charnum")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = charnum(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn error_code(args: &[&str]) -> String {
    let out = charnum(args);
    assert_eq!(out.status.code(), Some(1), "{args:?}");
    let v: Value = serde_json::from_slice(&out.stdout).expect("error JSON");
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn classify_sl4() {
    let v = json(&["classify", "SLnR(4)"]);
    assert_eq!(v["verdict"], "RankGap_PontrjaginVanish");
    assert_eq!(v["rank_gu"], 3);
    assert_eq!(v["rank_k"], 2);
    assert_eq!(v["toral_rank"], 1);
    assert_eq!(v["dual"], "SU(4)/SO(4)");
    assert_eq!(v["dim"], 9);
}

#[test]
fn cayley_numbers() {
    let v = json(&["p-numbers", "CayH"]);
    assert_eq!(v["entries"]["2,2"], 36);
    assert_eq!(v["entries"]["4"], 39);
    assert_eq!(v["entries"]["3,1"], 0);
}

#[test]
fn partition_filter() {
    let v = json(&["p-numbers", "HP^2", "--partition", "1,1"]);
    assert_eq!(v["entries"].as_object().unwrap().len(), 1);
    assert_eq!(v["entries"]["1,1"], 4);
}

#[test]
fn mu_example() {
    let v = json(&["mu", "--m", r#"{"4":3}"#, "--mu-dual", r#"{"4":9}"#]);
    assert_eq!(v["mu"], 3);
}

#[test]
fn transfer_with_negative_degree() {
    let v = json(&["transfer", "--table", r#"{"2":1,"1,1":1}"#, "--deg", "-3"]);
    assert_eq!(v["entries"]["2"], -3);
    assert_eq!(v["entries"]["1,1"], -3);
}

#[test]
fn big_integers_stay_exact() {
    let v = json(&["gl-order", "--n", "8", "--q", "7"]);
    let order = v["order"].to_string();
    assert!(order.len() > 40, "{order}");
    assert!(!order.contains('e') && !order.contains('.'));
}

#[test]
fn distinct_error_codes() {
    let codes = [
        error_code(&["classify", "Nonsense(3)"]),
        error_code(&["classify", "E6(2)"]),
        error_code(&["classify", "SU_pq(0,1)"]),
        error_code(&["gl-order", "--n", "2", "--q", "6"]),
        error_code(&["ds-check", "--mu", "3", "--k", "2", "--q1", "4", "--q2", "8"]),
        error_code(&["mu", "--m", r#"{"4":3}"#, "--mu-dual", r#"{"4":0}"#]),
    ];
    let mut unique = codes.to_vec();
    unique.sort();
    unique.dedup();
    assert_eq!(unique.len(), codes.len(), "{codes:?}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [&["bogus"][..], &["classify"], &["gl-order", "--n", "x", "--q", "2"]] {
        assert_eq!(charnum(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["p-numbers", "CP^8"];
    let first = charnum(&args).stdout;
    for _ in 0..3 {
        assert_eq!(charnum(&args).stdout, first);
    }
}

#[test]
fn pretty_matches_compact() {
    let compact = json(&["classify", "SO0_pq(3,5)"]);
    let pretty = json(&["--pretty", "classify", "SO0_pq(3,5)"]);
    assert_eq!(compact, pretty);
}

#[test]
fn table_from_file_and_output_file() {
    let dir = std::env::temp_dir().join(format!("charnum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let table = dir.join("table.json");
    let out = dir.join("out.json");
    std::fs::write(&table, r#"{"dim":8,"kind":"pontrjagin","entries":{"2":7,"1,1":4}}"#).unwrap();
    let arg = format!("@{}", table.display());
    let status = charnum(&["-o", out.to_str().unwrap(), "transfer", "--table", &arg, "--deg", "2"]);
    assert_eq!(status.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["entries"]["2"], 14);
    assert_eq!(v["entries"]["1,1"], 8);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn classification_round_trips_through_json() {
    let mut specs = Vec::new();
    for family in Family::ALL {
        for a in 1..=5 {
            for b in 1..=5 {
                let params = match family.arity() {
                    0 => vec![],
                    1 => vec![a],
                    _ => vec![a, b],
                };
                if let Ok(spec) = SpaceSpec::new(family, params) {
                    specs.push(spec);
                }
            }
        }
    }
    specs.dedup();
    assert!(specs.len() > 50);
    for spec in specs {
        let text = spec.to_string();
        let v = json(&["classify", &text]);
        let reparsed: SpaceSpec = serde_json::from_value(serde_json::json!({
            "family": v["family"],
            "params": v["params"],
        }))
        .unwrap();
        assert_eq!(reparsed, spec);
        let expected = serde_json::to_value(classify(&spec).unwrap()).unwrap();
        assert_eq!(v, expected, "{text}");
        assert_eq!(json(&["classify", &reparsed.to_string()]), v);
    }
}

#[test]
fn wall_verdicts() {
    assert_eq!(json(&["wall", "CP^3"])["verdict"], "bounds");
    assert_eq!(json(&["wall", "CP^2"])["verdict"], "does_not_bound");
    let v = json(&["wall", "--p", r#"{"2":0,"1,1":0}"#]);
    assert_eq!(v["verdict"], "insufficient_data");
}
