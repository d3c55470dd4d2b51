use std::process::Command;

use serde_json::Value;

fn dcells(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dcells")).args(args).env_remove("DCELLS_CACHE_DIR").output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn lines(s: &str) -> Vec<Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn rs_of_small_element() {
    let (code, out, _) = dcells(&["rs", "--rank", "2", "--element", "[-2,-1]"]);
    assert_eq!(code, 0);
    let rec = &lines(&out)[0];
    assert_eq!(rec["shape"], serde_json::json!([2, 2]));
}

#[test]
fn rs_then_unrs_round_trips() {
    let (_, out, _) = dcells(&["rs", "--element", "[3,-1,-2,4,5]"]);
    let rec = &lines(&out)[0];
    let pair = serde_json::json!({ "left": rec["left"], "right": rec["right"] }).to_string();
    let (code, out, _) = dcells(&["unrs", "--pair", &pair]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out)[0]["element"], serde_json::json!([3, -1, -2, 4, 5]));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dcells(&["frobnicate"]).0, 2);
    assert_eq!(dcells(&["rs", "--element", "[1,1]"]).0, 2);
    assert_eq!(dcells(&["rs", "--rank", "3", "--element", "[1,2]"]).0, 2);
    assert_eq!(dcells(&["rs", "--element", "not json"]).0, 2);
    assert_eq!(dcells(&["tableaux", "--shape", "3,2"]).0, 2);
    assert_eq!(dcells(&["cells", "--rank", "5"]).0, 2);
    assert_eq!(dcells(&["verify", "theorem1", "--total", "7"]).0, 2);
    assert_eq!(dcells(&["orbit", "--element", "[1,2,3,4]", "--ops", "nonsense"]).0, 2);
    let (code, _, err) = dcells(&["unrs", "--pair", "{\"left\": 3}"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn tableaux_count_and_json_round_trip() {
    let (code, out, _) = dcells(&["tableaux", "--shape", "4,2"]);
    assert_eq!(code, 0);
    let recs = lines(&out);
    assert_eq!(recs.len(), 3);
    for r in &recs {
        let t: domino_cells::tableaux::DominoTableau = serde_json::from_value(r.clone()).unwrap();
        assert_eq!(serde_json::to_value(&t).unwrap(), *r);
    }
}

#[test]
fn ascii_render_of_first_model_tableau() {
    let t = domino_cells::operators::quasi_staircase_tables(1).unwrap().t1;
    let art = dcells::render_ascii(&t);
    // Rows 3 and 4 of the drawing hold the vertical domino labelled 4.
    let cells: Vec<Vec<String>> = art
        .lines()
        .filter(|l| l.starts_with('|'))
        .map(|l| l.split(['|', ' ']).filter(|s| !s.is_empty()).map(String::from).collect())
        .collect();
    assert_eq!(cells[2][0], "4");
    assert_eq!(cells[3][0], "4");
    assert_eq!(art, dcells::render_ascii(&t));
}

#[test]
fn theorem1_small_total_passes() {
    let (code, out, _) = dcells(&["verify", "theorem1", "--total", "8"]);
    assert_eq!(code, 0);
    let last = lines(&out).pop().unwrap();
    assert_eq!(last["passed"], last["total"]);
}

#[test]
fn theorem1_without_quasi_operators_fails() {
    let (code, _, _) = dcells(&["verify", "theorem1", "--total", "8", "--ops", "wall,fork,chain"]);
    assert_eq!(code, 1);
}

#[test]
fn characters_spot_check() {
    let (code, out, _) = dcells(&["verify", "characters", "--rank", "7", "--spot", "20", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(lines(&out)[0]["pass"], true);
}

#[test]
fn cells_cache_is_reused() {
    let dir = std::env::temp_dir().join(format!("dcells-test-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    let first = dcells(&["--cache-dir", d, "cells", "--rank", "3"]);
    assert!(dir.join("kl-d3.v1.bin").exists());
    let second = dcells(&["--cache-dir", d, "cells", "--rank", "3"]);
    assert_eq!(first, second);
    assert_eq!(lines(&first.1).len(), 10);
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn equivariance_at_rank_three() {
    let (code, out, _) = dcells(&["--jobs", "2", "verify", "equivariance", "--rank", "3"]);
    assert_eq!(code, 0);
    let last = lines(&out).pop().unwrap();
    assert_eq!(last["summary"], "equivariance");
}

#[test]
fn cycles_accepts_either_coloring_case() {
    for c in ["A", "b"] {
        let (code, out, _) = dcells(&["cycles", "--element", "[3,-1,-2,4]", "--coloring", c]);
        assert_eq!(code, 0);
        assert_eq!(lines(&out)[0]["coloring"], c.to_uppercase());
    }
}
