use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perioddomain")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, String, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (v, text, out.status.code().unwrap())
}

#[test]
fn g2_has_twelve_roots() {
    let (v, _, code) = json(&["roots", "--type", "G2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["num_roots"], 12);
    assert_eq!(v["results"]["roots"].as_array().unwrap().len(), 12);
    assert_eq!(v["command"], "roots");
}

#[test]
fn sp31_is_below_threshold() {
    let (v, _, code) = json(&["classify", "--group", "Sp(3,1)"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["hodge"], true);
    assert_eq!(r["hermitian"], false);
    assert_eq!(r["verdict"], "BelowThreshold");
    assert_eq!(r["rank"], 1);
}

#[test]
fn betti_and_poincare_of_quaternionic_projective_space() {
    let (v, _, code) = json(&["betti", "--pair", "Sp(3,1)"]);
    assert_eq!(code, 0);
    assert_eq!((v["results"]["h2"].as_u64(), v["results"]["h4"].as_u64()), (Some(0), Some(1)));
    let (p, _, _) = json(&["poincare", "--u", "A3", "--v-marking", "0,1,0"]);
    let coeffs: Vec<u64> = p["results"]["poincare"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(coeffs, vec![1, 0, 1, 0, 2, 0, 1, 0, 1]);
}

#[test]
fn json_output_round_trips() {
    for args in [
        vec!["roots", "--type", "B3"],
        vec!["hodge", "--type", "A3", "--u", "0,1,0"],
        vec!["classify", "--group", "SO(2,5)"],
        vec!["xi-check", "--type", "C3", "--u", "1,0,0", "--pairs", "20"],
    ] {
        let (v, text, _) = json(&args);
        assert_eq!(format!("{}\n", serde_json::to_string_pretty(&v).unwrap()), text, "{args:?}");
    }
}

#[test]
fn exit_code_tracks_failures() {
    for args in [
        vec!["xi-check", "--type", "A2", "--u", "1,0", "--pairs", "30"],
        vec!["chevalley-verify", "--type", "A3"],
        vec!["chevalley-verify", "--type", "G2"],
        vec!["betti", "--pair", "SO(1,4)"],
    ] {
        let (v, _, code) = json(&args);
        let empty = v["failures"].as_array().unwrap().is_empty();
        assert_eq!(code == 0, empty, "{args:?}");
        assert!(code == 0 || code == 1);
    }
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["roots", "--type", "X9"]).status.code(), Some(2));
    assert_eq!(run(&["roots"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--group", "SU(99)"]).status.code(), Some(2));
    assert_eq!(run(&["hodge", "--type", "A3", "--u", "1,0"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn datum_file_input() {
    let dir = std::env::temp_dir().join(format!("pd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("datum.json");
    std::fs::write(&path, r#"{"type": "A3", "marking": [0,1,0]}"#).unwrap();
    let (v, _, _) = json(&["hodge", "--input", path.to_str().unwrap()]);
    assert_eq!(v["results"]["horizontal"].as_array().unwrap().len(), 4);
    assert_eq!(v["results"]["hermitian_grading"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn same_seed_same_bytes_across_thread_counts() {
    let base = ["xi-check", "--type", "B3", "--u", "0,1,0", "--pairs", "40", "--seed", "7", "--format", "json"];
    let a = run(&[&base[..], &["--threads", "1"]].concat()).stdout;
    let b = run(&[&base[..], &["--threads", "3"]].concat()).stdout;
    let c = run(&base).stdout;
    assert_eq!(a, b);
    assert_eq!(b, c);
    let small = ["verify-all", "--max-rank", "2", "--pairs", "10", "--format", "json"];
    let x = run(&[&small[..], &["--threads", "1"]].concat());
    let y = run(&[&small[..], &["--threads", "4"]].concat());
    assert_eq!(x.stdout, y.stdout);
    let v: Value = serde_json::from_slice(&x.stdout).unwrap();
    assert_eq!(x.status.code() == Some(0), v["failures"].as_array().unwrap().is_empty());
}
