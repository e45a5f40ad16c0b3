use std::path::Path;
use std::process::{Command, Output};

use biramsey::{parse_witness, witness_8x29};

fn biramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biramsey"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    assert!(
        biramsey(&["fixtures", "emit", "witness_8x29", path_str(&good)])
            .status
            .success()
    );
    let out = biramsey(&["verify", path_str(&good)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("max pairwise intersection: 1"));

    // a star coloring is valid only while m <= t
    let star = dir.path().join("star.txt");
    assert!(
        biramsey(&["fixtures", "emit", "star", path_str(&star), "6", "12", "5"])
            .status
            .success()
    );
    let out = biramsey(&["verify", path_str(&star)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("verdict: invalid"));

    let broken = dir.path().join("broken.txt");
    std::fs::write(&broken, "biramsey-witness v1\nm=2 n=3 t=2\n1: 1 4\n2: 2\n").unwrap();
    let out = biramsey(&["verify", path_str(&broken)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    assert_eq!(
        biramsey(&["verify", path_str(&dir.path().join("missing.txt"))])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn fixtures_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    assert!(
        biramsey(&["fixtures", "emit", "witness_8x29", path_str(&path)])
            .status
            .success()
    );
    let cert = parse_witness(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert.graph, witness_8x29());
    assert!(stdout(&biramsey(&["fixtures", "list"])).contains("witness_6x39"));
    assert_eq!(
        biramsey(&["fixtures", "emit", "nope", path_str(&path)])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        biramsey(&["fixtures", "emit", "star", path_str(&path), "3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn arrows_exit_codes() {
    assert_eq!(
        biramsey(&["arrows", "-m", "5", "-n", "5", "-t", "2"])
            .status
            .code(),
        Some(0)
    );

    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("found.txt");
    let out = biramsey(&[
        "arrows",
        "-m",
        "4",
        "-n",
        "6",
        "-t",
        "2",
        "-o",
        path_str(&out_path),
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("NOT_ARROWS"));
    let cert = parse_witness(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert!(cert.is_valid());

    let out = biramsey(&[
        "arrows",
        "-m",
        "7",
        "-n",
        "9",
        "-t",
        "3",
        "--budget-nodes",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("BUDGET_EXHAUSTED"));
}

#[test]
fn arrows_rejects_bad_arguments() {
    assert_eq!(
        biramsey(&["arrows", "-m", "0", "-n", "5", "-t", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        biramsey(&[
            "arrows",
            "-m",
            "5",
            "-n",
            "5",
            "-t",
            "2",
            "--no-prune",
            "bogus"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(biramsey(&["arrows", "-m", "5"]).status.code(), Some(1));
    assert_eq!(biramsey(&["frobnicate"]).status.code(), Some(1));
}

#[test]
fn disabled_rules_are_accepted() {
    let mut args = vec!["arrows", "-m", "5", "-n", "5", "-t", "2"];
    for rule in ["degree-cap", "pair-budget", "coverage", "canonical"] {
        args.extend(["--no-prune", rule]);
    }
    assert_eq!(biramsey(&args).status.code(), Some(0));
}

#[test]
fn help_states_the_arrowing_convention() {
    let out = biramsey(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("standard sense"));
    assert!(stdout(&biramsey(&["arrows", "--help"])).contains("no good coloring exists"));
}

#[test]
fn brfind_reports() {
    let out = biramsey(&["brfind", "-m", "5", "-t", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("NONEXISTENT (m ≤ t: star construction)"));

    let out = biramsey(&["brfind", "-m", "4", "-t", "2", "--limit", "10"]);
    assert!(stdout(&out).starts_with("BR_4(K_{2,2}, K_{2,2}) = 7"));

    let out = biramsey(&[
        "brfind",
        "-m",
        "7",
        "-t",
        "3",
        "--limit",
        "12",
        "--budget-nodes",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains(">="));
}

#[test]
fn export_and_decode() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("f.cnf");
    let out = biramsey(&[
        "export-cnf",
        "-m",
        "3",
        "-n",
        "3",
        "-t",
        "2",
        "-o",
        path_str(&cnf),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&cnf).unwrap();
    assert!(text.starts_with("p cnf 9 18\n"));
    assert_eq!(text.lines().count(), 19);

    let out = biramsey(&["export-cnf", "-m", "3", "-n", "3", "-t", "2", "-o", "-"]);
    assert_eq!(stdout(&out), text);
    assert_eq!(
        biramsey(&["export-cnf", "-m", "3", "-n", "5", "-t", "4", "-o", "-"])
            .status
            .code(),
        Some(1)
    );

    // a model for the 2x2 diagonal with t = 2
    let model = dir.path().join("model.txt");
    std::fs::write(&model, "s SATISFIABLE\nv 1 -2 -3 4 0\n").unwrap();
    let wit = dir.path().join("w.txt");
    let out = biramsey(&[
        "decode-model",
        "-m",
        "2",
        "-n",
        "2",
        "-t",
        "2",
        path_str(&model),
        "-o",
        path_str(&wit),
    ]);
    assert!(out.status.success());
    assert!(parse_witness(&std::fs::read_to_string(&wit).unwrap())
        .unwrap()
        .is_valid());

    std::fs::write(&model, "v -1 -2 -3 -4 0\n").unwrap();
    let out = biramsey(&[
        "decode-model",
        "-m",
        "2",
        "-n",
        "2",
        "-t",
        "2",
        path_str(&model),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid coloring"));
}

#[test]
fn table_rows() {
    let out = biramsey(&["table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let row = text
        .lines()
        .find(|l| l.starts_with("BR_m(K22,K55)") && l.split_whitespace().nth(1) == Some("6"))
        .unwrap();
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(&cols[2..], ["40", "verified-witness", "trusted-literature"]);
    assert!(text.contains("BR(K22,K55) = 17 (trusted-literature)"));
}

#[test]
fn table_search_upgrades_small_rows() {
    let out = biramsey(&["table", "--search", "--budget-secs", "20"]);
    let text = stdout(&out);
    let row = text
        .lines()
        .find(|l| l.starts_with("BR_m(K22,K33)") && l.split_whitespace().nth(1) == Some("7"))
        .unwrap();
    let cols: Vec<&str> = row.split_whitespace().collect();
    assert_eq!(&cols[2..], ["9", "searched", "searched"]);
    // upper bounds out of reach stay labelled as literature
    let row = text
        .lines()
        .find(|l| l.starts_with("BR_m(K22,K55)") && l.split_whitespace().nth(1) == Some("7"))
        .unwrap();
    assert!(row.ends_with("trusted-literature") || row.trim_end().ends_with("trusted-literature"));
}

#[test]
fn no_color_output_is_plain() {
    let out = biramsey(&["arrows", "-m", "5", "-n", "5", "-t", "2"]);
    assert!(!stdout(&out).contains('\x1b'));
}
