//! End-to-end tests of the `lrc` binary: output schemas, determinism,
//! exit codes, and agreement between emitted CSV and the library.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use lrc::asymptotics::{exponent_curve, Mode, ScgfSpec};
use lrc::weights::{bridges_log_approx, logistic_coefficient_log_table, max_logistic_weight};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lrc"))
}

/// Fresh scratch directory, unique per test so runs never collide.
fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lrc-cli-{}-{tag}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("failed to spawn lrc")
}

fn assert_ok(out: &Output) {
    assert!(
        out.status.success(),
        "expected success, got {:?}\nstderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
}

fn read_rows(path: &PathBuf, header: &str) -> Vec<Vec<f64>> {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(header), "unexpected CSV header");
    lines
        .map(|line| {
            line.split(',')
                .map(|field| field.parse::<f64>().unwrap())
                .collect()
        })
        .collect()
}

#[test]
fn exponents_round_trips_library_values() {
    let dir = scratch("exponents");
    let out = dir.join("e.csv");
    assert_ok(&run(&[
        "exponents",
        "--beta",
        "2",
        "--grid",
        "96",
        "--out",
        out.to_str().unwrap(),
    ]));

    let rows = read_rows(&out, "R,eps_hard,eps_soft,s_hard,s_soft");
    assert_eq!(rows.len(), 96);

    // 17-significant-digit CSV floats must reproduce the library bit for bit.
    let soft = exponent_curve(&ScgfSpec::new(Mode::Soft, 2.0).unwrap(), 96).unwrap();
    let hard = exponent_curve(&ScgfSpec::new(Mode::Hard, 2.0).unwrap(), 96).unwrap();
    for (k, row) in rows.iter().enumerate() {
        assert_eq!(row[0], soft.rates[k], "rate mismatch at row {k}");
        assert_eq!(
            row[1], hard.error_exponent[k],
            "eps_hard mismatch at row {k}"
        );
        assert_eq!(
            row[2], soft.error_exponent[k],
            "eps_soft mismatch at row {k}"
        );
        assert_eq!(
            row[3], hard.success_exponent[k],
            "s_hard mismatch at row {k}"
        );
        assert_eq!(
            row[4], soft.success_exponent[k],
            "s_soft mismatch at row {k}"
        );
    }

    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("e.json")).unwrap()).unwrap();
    let c_hard = sidecar["C_hard"].as_f64().unwrap();
    let c_soft = sidecar["C_soft"].as_f64().unwrap();
    assert!(c_hard < c_soft, "hard capacity must trail soft");
    assert_eq!(c_hard, hard.capacity);
    assert_eq!(c_soft, soft.capacity);
    assert!(sidecar["Rcr_hard"].as_f64().unwrap() < c_hard);
}

#[test]
fn coeff_matches_exact_counts_at_midweights() {
    let dir = scratch("coeff");
    let out = dir.join("c.csv");
    assert_ok(&run(&[
        "coeff",
        "--n",
        "64",
        "--out",
        out.to_str().unwrap(),
    ]));

    let cap = max_logistic_weight(64);
    let rows = read_rows(&out, "w,exact_log_count,bridges_log_count,signed_error");
    assert_eq!(rows.len(), cap - 1);

    let exact = logistic_coefficient_log_table(64).unwrap();
    for row in &rows {
        let w = row[0] as usize;
        assert_eq!(row[1], exact[w], "exact column mismatch at w={w}");
        let approx = bridges_log_approx(64, w).unwrap().log_count;
        assert_eq!(row[2], approx, "bridges column mismatch at w={w}");
        if (cap / 4..=3 * cap / 4).contains(&w) {
            let rel = ((row[2] - row[1]) / row[1]).abs();
            assert!(rel < 0.01, "log-scale error {rel} at w={w} exceeds 1%");
        }
    }

    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("c.json")).unwrap()).unwrap();
    assert_eq!(sidecar["center_weight"].as_u64(), Some(cap as u64 / 2));
    assert!(sidecar["center_relative_log_error"].as_f64().unwrap() < 0.01);
}

#[test]
fn simulate_is_deterministic_for_fixed_seed() {
    let dir = scratch("simulate");
    let first = dir.join("a.json");
    let second = dir.join("b.json");
    let args = |path: &PathBuf| {
        vec![
            "simulate".to_string(),
            "--n".into(),
            "32".into(),
            "--beta".into(),
            "5".into(),
            "--rate".into(),
            "0.9".into(),
            "--trials".into(),
            "150".into(),
            "--seed".into(),
            "11".into(),
            "--decoder".into(),
            "soft".into(),
            "--out".into(),
            path.to_str().unwrap().to_string(),
        ]
    };
    assert_ok(&bin().args(args(&first)).output().unwrap());
    assert_ok(&bin().args(args(&second)).output().unwrap());
    let a = fs::read(&first).unwrap();
    let b = fs::read(&second).unwrap();
    assert_eq!(a, b, "same seed must reproduce the report byte for byte");

    let report: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let trials = report["trials"].as_u64().unwrap();
    let errors = report["errors"].as_u64().unwrap();
    assert_eq!(trials, 150);
    assert_eq!(
        report["bler"].as_f64().unwrap(),
        errors as f64 / trials as f64
    );
    assert!(report["ci_low"].as_f64().unwrap() <= report["bler"].as_f64().unwrap());
    assert!(report["ci_high"].as_f64().unwrap() >= report["bler"].as_f64().unwrap());
}

#[test]
fn worker_count_does_not_change_output() {
    let dir = scratch("workers");
    let one = dir.join("one.csv");
    let four = dir.join("four.csv");
    assert_ok(&run(&[
        "--workers",
        "1",
        "exponents",
        "--beta",
        "2",
        "--grid",
        "64",
        "--out",
        one.to_str().unwrap(),
    ]));
    assert_ok(&run(&[
        "--workers",
        "4",
        "exponents",
        "--beta",
        "2",
        "--grid",
        "64",
        "--out",
        four.to_str().unwrap(),
    ]));
    assert_eq!(
        fs::read(&one).unwrap(),
        fs::read(&four).unwrap(),
        "worker count changed the numbers"
    );
}

#[test]
fn llr_profile_is_sorted_with_fit_sidecar() {
    let dir = scratch("llr");
    let out = dir.join("l.csv");
    assert_ok(&run(&[
        "llr",
        "--family",
        "normal",
        "--sigma",
        "4",
        "--samples",
        "2048",
        "--seed",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]));

    let rows = read_rows(&out, "normalized_index,sorted_reliability");
    assert_eq!(rows.len(), 2048);
    for (k, pair) in rows.windows(2).enumerate() {
        assert!(pair[0][0] < pair[1][0], "index grid not increasing at {k}");
        assert!(pair[0][1] <= pair[1][1], "reliabilities not sorted at {k}");
    }
    assert_eq!(rows[0][0], 1.0 / 2048.0);
    assert_eq!(rows.last().unwrap()[0], 1.0);

    let sidecar: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("l.json")).unwrap()).unwrap();
    assert_eq!(sidecar["points"].as_u64(), Some(1024));
    assert!(sidecar["r_squared"].as_f64().unwrap() > 0.99);
    assert!(sidecar["slope"].as_f64().unwrap() > 0.0);
    assert!(sidecar["max_abs_residual"].as_f64().unwrap() < 0.1);
}

#[test]
fn validation_failures_exit_two_and_name_the_precondition() {
    let dir = scratch("validation");
    let out = dir.join("x.csv");
    let out_str = out.to_str().unwrap();

    let bad_rate = run(&[
        "simulate", "--n", "32", "--beta", "5", "--rate", "1.5", "--trials", "10", "--out", out_str,
    ]);
    assert_eq!(bad_rate.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&bad_rate.stderr);
    assert!(msg.contains("rate"), "diagnostic must name the rate: {msg}");

    let bad_n = run(&["coeff", "--n", "600", "--out", out_str]);
    assert_eq!(bad_n.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&bad_n.stderr);
    assert!(msg.contains("block length"), "diagnostic: {msg}");

    let json_out = dir.join("x.json");
    let collision = run(&["scgf", "--beta", "2", "--out", json_out.to_str().unwrap()]);
    assert_eq!(collision.status.code(), Some(2));
    let msg = String::from_utf8_lossy(&collision.stderr);
    assert!(msg.contains("sidecar"), "diagnostic: {msg}");

    let unknown = run(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_one() {
    let out = run(&[
        "scgf",
        "--beta",
        "2",
        "--out",
        "/nonexistent-dir/deep/x.csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
