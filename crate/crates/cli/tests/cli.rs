// Copyright 2026 qresonance Contributors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qresonance"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn parse_rows(csv: &str) -> Vec<Vec<f64>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect()
}

#[test]
fn sweep_writes_csv_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.csv");
    let o = run(&[
        "sweep",
        "--state",
        "0.1,0.2,0.9",
        "--x-range",
        "0,0.7",
        "--steps",
        "701",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().next(), Some("x,N,C,F,H_out,b1,b2,b3"));
    let rows = parse_rows(&csv);
    assert_eq!(rows.len(), 701);
    assert!(rows.iter().all(|r| r.len() == 8));
    assert_eq!(rows[700][0], 0.7);
    assert!(!csv.contains('\r'));
    let summary = stdout(&o);
    assert!(summary.contains("noise peak: x = 0.454"), "{summary}");
    assert!(summary.contains("fidelity enhancement: present"));
    assert!(summary.contains("multivalued capacity: N in"));
}

#[test]
fn mixed_state_row_at_half() {
    let o = run(&["sweep", "--state", "0,0,0", "--x-range", "0,1", "--steps", "11"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = parse_rows(&stdout(&o));
    let row = rows.iter().find(|r| r[0] == 0.5).unwrap();
    assert!((row[1] - 1.5).abs() < 1e-12);
    assert!((row[2] + 0.5).abs() < 1e-12);
    assert!((row[3] - 0.5).abs() < 1e-12);
    assert!((row[4] - 1.0).abs() < 1e-12);
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("capacity enhancement: none"));
}

#[test]
fn output_is_deterministic_and_respects_precision() {
    let a = run(&["sweep", "--state", "0.3,0.4,0.2", "--steps", "101", "--precision", "5"]);
    let b = run(&["sweep", "--state", "0.3,0.4,0.2", "--steps", "101", "--precision", "5"]);
    assert_eq!(a.stdout, b.stdout);
    for line in stdout(&a).lines().skip(1) {
        for field in line.split(',') {
            let digits = field
                .trim_start_matches('-')
                .split('e')
                .next()
                .unwrap()
                .replace('.', "");
            assert!(digits.trim_start_matches('0').len() <= 5, "{field}");
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["sweep", "--state", "0,0,0", "--x-range", "1,1"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["sweep", "--state", "1,1,1"]).status.code(), Some(1));
    assert_eq!(run(&["sweep"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let o = run(&["sweep", "--state", "0,0,0", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_passes_and_detects_broken_channel() {
    let o = run(&["validate", "--grid-resolution", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 5);
    let line = text.lines().find(|l| l.contains("analytic vs generic")).unwrap();
    let dev: f64 = line
        .split("max deviation ")
        .nth(1)
        .unwrap()
        .split(' ')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(dev <= 1e-12);

    let o = run(&["validate", "--grid-resolution", "3", "--inject-broken-channel"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("[FAIL] completeness"));
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("validation failed: completeness"));
}

#[test]
fn figure1_writes_four_curves() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["figure1", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for label in ["a", "b", "c", "d"] {
        let path = dir.path().join(format!("fig1{label}.csv"));
        assert!(Path::new(&path).exists());
        assert_eq!(parse_rows(&fs::read_to_string(path).unwrap()).len(), 701);
    }
    let report = stdout(&o);
    let sections: Vec<&str> = report.split("== fig1").skip(1).collect();
    assert_eq!(sections.len(), 4);
    for s in &sections[1..] {
        assert!(s.contains("fidelity enhancement: present"), "{s}");
    }
    assert!(sections.iter().any(|s| s.contains("multivalued capacity: N in")));
}

#[test]
fn scan_rows_stay_in_the_ball() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.csv");
    let o = run(&[
        "scan",
        "--grid-resolution",
        "11",
        "--steps",
        "701",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().next(), Some("a1,a2,a3,cap_enh,fid_enh,noise_peak_x"));
    let mut fid = 0;
    for line in csv.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 6);
        let a: Vec<f64> = f[..3].iter().map(|v| v.parse().unwrap()).collect();
        assert!(a.iter().map(|v| v * v).sum::<f64>() <= 1.0 + 1e-12);
        fid += f[4].parse::<u32>().unwrap();
    }
    assert!(fid > 0);
    let summary = stdout(&o);
    assert!(
        summary.contains(&format!("fidelity enhancement: {fid} states")),
        "{summary}"
    );
}
