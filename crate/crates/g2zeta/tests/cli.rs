//! End-to-end checks of the command-line surface: output schemas, JSON
//! round-trips, cache reuse, and exit codes.

use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_g2zeta"))
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("g2zeta-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn zeta_eval_emits_value_json() {
    let out = bin()
        .args(["zeta", "eval", "--fn", "Z1", "--s", "0.5+2i"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["re"].is_f64() && v["im"].is_f64() && v["abs"].is_f64());
    // purely imaginary on the critical line
    assert!(v["re"].as_f64().unwrap().abs() <= 1e-9 * v["abs"].as_f64().unwrap());
}

#[test]
fn eval_alias_matches_zeta_eval() {
    let a = bin()
        .args(["zeta", "eval", "--fn", "F1", "--s", "1.5-0.5i"])
        .output()
        .unwrap();
    let b = bin()
        .args(["eval", "--fn", "F1", "--s", "1.5-0.5i"])
        .output()
        .unwrap();
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn period_build_json_round_trips() {
    let out = bin()
        .args(["period", "build", "--kind", "long", "--emit", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let expr: g2zeta::period::ZetaExpression = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(expr.terms.len(), 8);
    // the re-parsed expression evaluates identically to the in-memory one
    let rs = g2zeta::rootsystem::build_g2();
    let built = g2zeta::period::pipeline(&rs, g2zeta::period::ParabolicKind::Long);
    let s = num_complex::Complex64::new(1.23, 4.56);
    let a = built.eval(s).unwrap();
    let b = expr.eval(s).unwrap();
    assert!((a - b).norm() <= 1e-15 * a.norm());
}

#[test]
fn period_build_stages_have_expected_term_counts() {
    for (stage, count) in [("period", 12), ("residue", 8), ("unshifted", 8), ("final", 8)] {
        let out = bin()
            .args([
                "period", "build", "--kind", "short", "--emit", "json", "--stage", stage,
            ])
            .output()
            .unwrap();
        assert!(out.status.success(), "stage {stage}");
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(
            v["terms"].as_array().unwrap().len(),
            count,
            "stage {stage}"
        );
    }
}

#[test]
fn g2_table_lists_all_rows() {
    let out = bin().args(["g2", "table"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 13);
    for name in ["w_a", "w_b", "rot(60)", "rot(180)", "rot(300)"] {
        assert!(text.contains(name), "missing row {name}");
    }
}

#[test]
fn zeros_count_reports_three() {
    let out = bin()
        .args(["zeros", "count", "--fn", "F1", "--rect", "0.5,5,-10,10"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"].as_i64().unwrap(), 3);
}

#[test]
fn zeros_scan_csv_shape() {
    let out = bin()
        .args([
            "zeros", "scan", "--fn", "Z1", "--t0", "0", "--t1", "1", "--step", "0.05",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "t,re_part,im_part");
    // starts at t = step, not t = 0
    let first: f64 = lines
        .next()
        .unwrap()
        .split(',')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(first > 0.0);
    assert!(!text.contains('\r'));
}

#[test]
fn xi_table_cache_reuse() {
    let dir = tmpdir("xitable");
    let path = dir.join("zeros_xi.json");
    let out = bin()
        .args(["zeros", "xi-table", "--T", "30"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["height"].as_f64().unwrap(), 30.0);
    assert!(v["ordinates"].as_array().unwrap().len() >= 3);

    // second run with smaller T reuses the cache and says so
    let out = bin()
        .args(["zeros", "xi-table", "--T", "26"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("reusing cached table"), "stderr: {stderr}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn usage_error_exits_two() {
    let out = bin().args(["zeta", "eval", "--fn", "Z1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["nonsense"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_complex_number_is_a_usage_error() {
    let out = bin()
        .args(["zeta", "eval", "--fn", "Z1", "--s", "fish"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_and_env_overrides() {
    let dir = tmpdir("config");
    let cfg = dir.join("config.toml");
    std::fs::write(&cfg, "seed = 123\nscan_step = 0.02\n").unwrap();
    let out = bin()
        .args(["--config"])
        .arg(&cfg)
        .args(["zeta", "check-fe", "--fn", "Z1", "--samples", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"].as_u64().unwrap(), 123);

    // environment beats the file
    let out = bin()
        .args(["--config"])
        .arg(&cfg)
        .env("G2ZETA_SEED", "77")
        .args(["zeta", "check-fe", "--fn", "Z1", "--samples", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"].as_u64().unwrap(), 77);

    // unknown keys are rejected
    std::fs::write(&cfg, "mystery = 1\n").unwrap();
    let out = bin()
        .args(["--config"])
        .arg(&cfg)
        .args(["g2", "table"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn check_fe_reports_small_residual() {
    let out = bin()
        .args(["zeta", "check-fe", "--fn", "long", "--samples", "20", "--seed", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["max_rel_residual"].as_f64().unwrap() <= 1e-9);
}
