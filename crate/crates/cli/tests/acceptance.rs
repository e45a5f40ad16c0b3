//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, ExitCode, Output};
use std::time::{Duration, Instant};

use biramsey::oracle;
use biramsey::{
    arrows, parse_witness, serialize_witness, star_witness, verify_good_coloring, witness_6x39,
    witness_8x29, ArrowingInstance, BipartiteGraph, PruneRule, PruneToggles, SearchConfig, Verdict,
};
use sha2::{Digest, Sha256};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn biramsey(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biramsey"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

/// Union sizes of all 5-row subsets, keyed by whether row 0 is included.
fn five_row_coverage(g: &BipartiteGraph) -> BTreeMap<(bool, usize), usize> {
    let mut hist = BTreeMap::new();
    for rows in oracle::subsets(g.m(), 5) {
        let covered = (0..g.n())
            .filter(|&j| rows.iter().any(|&i| g.has_edge(i, j)))
            .count();
        *hist.entry((rows.contains(&0), covered)).or_insert(0) += 1;
    }
    hist
}

fn emit_and_verify(dir: &Path, name: &str) -> Result<(String, Duration), String> {
    let path = dir.join(format!("{name}.txt"));
    let start = Instant::now();
    ensure(
        biramsey(&["fixtures", "emit", name, p(&path)])
            .status
            .success(),
        || format!("emit {name} failed"),
    )?;
    let out = biramsey(&["verify", p(&path)]);
    let elapsed = start.elapsed();
    ensure(out.status.code() == Some(0), || {
        format!("verify {name} exited {:?}", out.status.code())
    })?;
    Ok((stdout(&out), elapsed))
}

fn criterion_1() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;

    let (text, t6) = emit_and_verify(dir.path(), "witness_6x39")?;
    for line in [
        "max degree: 9",
        "max pairwise intersection: 1",
        "pairs with intersection 1: 15",
        "verdict: valid",
    ] {
        ensure(text.contains(line), || {
            format!("6x39 report lacks {line:?}")
        })?;
    }
    ensure(
        text.contains("min t-subset coverage: 35") && text.contains("t-subsets covering 35: 6"),
        || "6x39: not every 5-row union covers 35 columns".into(),
    )?;
    let cov6 = five_row_coverage(&witness_6x39());
    ensure(cov6.keys().all(|&(_, c)| c == 35), || {
        format!("6x39 coverage {cov6:?}")
    })?;

    let (text, t8) = emit_and_verify(dir.path(), "witness_8x29")?;
    for line in [
        "max pairwise intersection: 1",
        "pairs with intersection 1: 28",
        "t-subsets covering 25: 21",
        "t-subsets covering 26: 35",
        "verdict: valid",
    ] {
        ensure(text.contains(line), || {
            format!("8x29 report lacks {line:?}")
        })?;
    }
    let cov8 = five_row_coverage(&witness_8x29());
    let expected = BTreeMap::from([((false, 25), 21), ((true, 26), 35)]);
    ensure(cov8 == expected, || format!("8x29 coverage split {cov8:?}"))?;

    ensure(
        t6 < Duration::from_secs(1) && t8 < Duration::from_secs(1),
        || format!("too slow: {t6:?}, {t8:?}"),
    )?;
    Ok(format!("6x39 in {t6:.2?}, 8x29 in {t8:.2?}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    for m in 2..=5 {
        for n in 1..=100 {
            let g = star_witness(m, n).map_err(|e| e.to_string())?;
            let cert = verify_good_coloring(&g, 5).map_err(|e| e.to_string())?;
            ensure(cert.is_valid(), || format!("star {m}x{n} invalid"))?;
        }
    }
    let out = biramsey(&["brfind", "-m", "5", "-t", "5"]);
    let text = stdout(&out);
    ensure(
        out.status.success() && text.contains("= NONEXISTENT (m ≤ t: star construction)"),
        || format!("brfind -m 5 -t 5 printed {text:?}"),
    )?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "400 star colorings valid, brfind NONEXISTENT, {elapsed:.2?}"
    ))
}

/// Oracle verdicts for m, n in 1..=5 and t = 2.
fn oracle_verdicts() -> Vec<((usize, usize), bool)> {
    let mut out = Vec::new();
    for m in 1..=5 {
        for n in 1..=5 {
            let a = if m * n <= 24 {
                oracle::exhaustive_arrows(m, n, 2)
            } else {
                oracle::row_canonical_arrows(m, n, 2)
            };
            out.push(((m, n), a));
        }
    }
    out
}

fn engine_arrows(m: usize, n: usize, prune: PruneToggles) -> Result<bool, String> {
    let cfg = SearchConfig {
        prune,
        ..SearchConfig::default()
    };
    match arrows(ArrowingInstance::new(m, n, 2).unwrap(), &cfg).verdict {
        Verdict::Arrows => Ok(true),
        Verdict::NotArrows(_) => Ok(false),
        Verdict::BudgetExhausted => Err(format!("({m},{n},2) exhausted an unlimited budget")),
    }
}

fn criterion_3(expected: &[((usize, usize), bool)]) -> Check {
    let start = Instant::now();
    for &((m, n), a) in expected {
        let got = engine_arrows(m, n, PruneToggles::default())?;
        ensure(got == a, || {
            format!("({m},{n},2): engine {got}, oracle {a}")
        })?;
    }
    ensure(
        expected
            .iter()
            .find(|((m, n), _)| (*m, *n) == (5, 5))
            .is_some_and(|(_, a)| *a),
        || "(5,5,2) is not ARROWS".into(),
    )?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(600), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{} instances agree, (5,5,2) ARROWS",
        expected.len()
    ))
}

fn criterion_4(expected: &[((usize, usize), bool)]) -> Check {
    for rule in PruneRule::ALL {
        for &((m, n), a) in expected {
            let got = engine_arrows(m, n, PruneToggles::default().without(rule))?;
            ensure(got == a, || {
                format!("({m},{n},2) without {rule}: {got}, oracle {a}")
            })?;
        }
    }
    Ok(format!(
        "{} rules x {} instances unchanged",
        PruneRule::ALL.len(),
        expected.len()
    ))
}

/// Every C4-free `m x n` graph with a row of degree `2t` has `K_{t,t}` in its
/// complement; returns the number of such graphs.
fn degree_cap_bound(m: usize, n: usize, t: usize) -> Result<u64, String> {
    let full = (1u32 << n) - 1;
    let row_sets = oracle::subsets(m, t);
    let mut rows = vec![0u32; m];
    let mut checked = 0u64;
    for mask in 0u64..1 << (m * n) {
        for (i, r) in rows.iter_mut().enumerate() {
            *r = (mask >> (i * n)) as u32 & full;
        }
        if !rows.iter().any(|r| r.count_ones() as usize == 2 * t) {
            continue;
        }
        let c4_free = (0..m).all(|i| (i + 1..m).all(|j| (rows[i] & rows[j]).count_ones() <= 1));
        if !c4_free {
            continue;
        }
        checked += 1;
        // t rows missing t common columns
        let blocked = row_sets.iter().any(|s| {
            let union = s.iter().fold(0u32, |acc, &i| acc | rows[i]);
            (n - union.count_ones() as usize) >= t
        });
        ensure(blocked, || {
            format!(
                "{m}x{n}, t={t}: C4-free graph {mask:#x} with degree {} row is good",
                2 * t
            )
        })?;
    }
    Ok(checked)
}

fn criterion_5() -> Check {
    let start = Instant::now();
    let a = degree_cap_bound(3, 4, 2)?;
    let b = degree_cap_bound(4, 6, 3)?;
    ensure(a > 0 && b > 0, || "degree-cap check was vacuous".into())?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{a} graphs for (3,4,2), {b} for (4,6,3), {elapsed:.2?}"
    ))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let out = biramsey(&["brfind", "-m", "7", "-t", "3", "--limit", "12"]);
    let elapsed = start.elapsed();
    let text = stdout(&out);
    ensure(text.starts_with("BR_7(K_{2,2}, K_{3,3}) = 9,"), || {
        format!("brfind printed {text:?}")
    })?;
    ensure(
        text.contains("witness: 7x8 good coloring, verified true"),
        || format!("no n = 8 witness in {text:?}"),
    )?;
    ensure(elapsed < Duration::from_secs(1800), || {
        format!("took {elapsed:?}")
    })?;
    let cfg = SearchConfig::default();
    let cert = arrows(ArrowingInstance::new(7, 8, 3).unwrap(), &cfg)
        .verdict
        .witness()
        .cloned();
    ensure(
        cert.is_some_and(|c| verify_good_coloring(&c.graph, 3).unwrap().is_valid()),
        || "n = 8 witness does not verify".into(),
    )?;
    Ok(format!("BR_7 = 9 in {elapsed:.2?}"))
}

fn sha256_file(path: &Path) -> Result<String, String> {
    let bytes = std::fs::read(path).map_err(|e| e.to_string())?;
    Ok(Sha256::digest(&bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect())
}

fn criterion_7() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;

    // (a) seeding with the fixtures
    for (name, m, n) in [("witness_6x39", "6", "39"), ("witness_8x29", "8", "29")] {
        let seed = dir.path().join(format!("{name}.txt"));
        ensure(
            biramsey(&["fixtures", "emit", name, p(&seed)])
                .status
                .success(),
            || "emit failed".into(),
        )?;
        let start = Instant::now();
        let out = biramsey(&[
            "arrows",
            "-m",
            m,
            "-n",
            n,
            "-t",
            "5",
            "--seed",
            p(&seed),
            "--budget-nodes",
            "0",
        ]);
        let elapsed = start.elapsed();
        let text = stdout(&out);
        ensure(
            out.status.code() == Some(3)
                && text.contains("NOT_ARROWS")
                && text.contains("(seed accepted)"),
            || format!("seeded ({m},{n},5) gave {:?}: {text}", out.status.code()),
        )?;
        ensure(elapsed < Duration::from_secs(1), || {
            format!("seeded run took {elapsed:?}")
        })?;
    }

    // (b) DIMACS for (7,30,5)
    let clauses = 21 * 435 + 21 * 142506;
    let mut digests = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("k7_30_{run}.cnf"));
        let out = biramsey(&[
            "export-cnf",
            "-m",
            "7",
            "-n",
            "30",
            "-t",
            "5",
            "-o",
            p(&path),
        ]);
        ensure(out.status.success(), || "export-cnf failed".into())?;
        let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        let header = text.lines().next().unwrap_or_default();
        ensure(header == format!("p cnf 210 {clauses}"), || {
            format!("header {header:?}")
        })?;
        ensure(text.lines().count() == clauses + 1, || {
            "clause line count differs from header".into()
        })?;
        digests.push(sha256_file(&path)?);
    }
    ensure(digests[0] == digests[1], || {
        "DIMACS bytes differ between runs".into()
    })?;

    // (c) provenance labels of the unreproduced upper bounds
    let text = stdout(&biramsey(&["table"]));
    for (m, v) in [("6", "40"), ("7", "30"), ("8", "30")] {
        let row = text
            .lines()
            .find(|l| l.starts_with("BR_m(K22,K55)") && l.split_whitespace().nth(1) == Some(m))
            .ok_or_else(|| format!("table has no K55 row for m={m}"))?;
        let cols: Vec<&str> = row.split_whitespace().collect();
        ensure(
            cols[2..] == [v, "verified-witness", "trusted-literature"],
            || format!("row {row:?}"),
        )?;
    }
    Ok(format!(
        "seeds accepted, 210 vars / {clauses} clauses, sha256 {}",
        &digests[0][..16]
    ))
}

fn criterion_8() -> Check {
    // witness files
    for g in [witness_6x39(), witness_8x29(), star_witness(4, 17).unwrap()] {
        let text = serialize_witness(&verify_good_coloring(&g, 5).unwrap());
        let back = parse_witness(&text).map_err(|e| e.to_string())?;
        ensure(serialize_witness(&back) == text && back.graph == g, || {
            "witness round trip differs".into()
        })?;
    }

    // arrows across thread counts: verdict and witness lines, not timings
    let stable = |out: &Output| -> Vec<String> {
        stdout(out)
            .lines()
            .filter(|l| !l.starts_with("nodes:") && !l.starts_with("prunes:"))
            .map(String::from)
            .collect()
    };
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    for (m, n, t) in [
        ("5", "5", "2"),
        ("7", "8", "3"),
        ("6", "11", "3"),
        ("5", "20", "4"),
    ] {
        let mut seen: Option<(Option<i32>, Vec<String>, Vec<u8>)> = None;
        for threads in ["1", "2", "4", "7"] {
            let path = dir.path().join(format!("w{m}{n}{t}_{threads}.txt"));
            let out = biramsey(&[
                "arrows",
                "-m",
                m,
                "-n",
                n,
                "-t",
                t,
                "--threads",
                threads,
                "-o",
                p(&path),
            ]);
            let file = std::fs::read(&path).unwrap_or_default();
            let now = (out.status.code(), stable(&out), file);
            match &seen {
                None => seen = Some(now),
                Some(first) => ensure(*first == now, || {
                    format!("({m},{n},{t}) differs with {threads} threads")
                })?,
            }
        }
    }

    // DIMACS bytes across runs
    let a = stdout(&biramsey(&[
        "export-cnf",
        "-m",
        "5",
        "-n",
        "9",
        "-t",
        "3",
        "-o",
        "-",
    ]));
    let b = stdout(&biramsey(&[
        "export-cnf",
        "-m",
        "5",
        "-n",
        "9",
        "-t",
        "3",
        "-o",
        "-",
    ]));
    ensure(a == b && !a.is_empty(), || {
        "DIMACS differs between runs".into()
    })?;
    Ok("witness files, verdicts and DIMACS are byte-stable".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let expected = oracle_verdicts();
    let criteria: Vec<Criterion> = vec![
        ("1 witness verification", Box::new(criterion_1)),
        ("2 nonexistence", Box::new(criterion_2)),
        ("3 oracle equivalence", Box::new(|| criterion_3(&expected))),
        ("4 pruning ablation", Box::new(|| criterion_4(&expected))),
        ("5 degree-cap bound", Box::new(criterion_5)),
        ("6 BR_7(K22,K33) = 9", Box::new(criterion_6)),
        ("7 substitute properties", Box::new(criterion_7)),
        ("8 round trip and determinism", Box::new(criterion_8)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1?}",
        criteria.len() - failed,
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
