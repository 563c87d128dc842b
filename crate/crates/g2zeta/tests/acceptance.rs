//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use g2zeta::period::{pipeline, reference_zeta, ParabolicKind};
use g2zeta::rhverify::{
    full_report, rh_scan, verify_central, verify_constants, verify_f_side,
    verify_functional_equation, verify_known_zeros, verify_lasu_grid, verify_pipeline,
    verify_poles, verify_right_plane, CheckStatus, VerifyOptions,
};
use g2zeta::rootsystem::build_g2;
use g2zeta::zeros::{winding_count, xi_zeros_up_to, Rectangle};
use g2zeta::zetas::{laurent_probe, FunctionId};
use num_complex::Complex64;
use std::time::Instant;

fn verdict(id: &str, pass: bool, detail: &str) {
    println!(
        "acceptance {}: {} — {}",
        id,
        if pass { "PASS" } else { "FAIL" },
        detail
    );
    assert!(pass, "criterion {id} failed: {detail}");
}

// 1. The symbolic pipeline reproduces both published expressions, with
// numeric agreement at 1e-12 over 50 random pole-avoiding points each,
// in under five seconds.
#[test]
fn criterion_01_symbolic_pipeline_equivalence() {
    let start = Instant::now();
    let rs = build_g2();
    let mut pass = true;
    let mut notes = Vec::new();
    for kind in [ParabolicKind::Long, ParabolicKind::Short] {
        let symbolic = pipeline(&rs, kind).canonical() == reference_zeta(kind).canonical();
        let rec = verify_pipeline(kind, 7);
        pass &= symbolic && rec.status == CheckStatus::Pass;
        notes.push(format!(
            "{}: symbolic={} numeric={}",
            kind.label(),
            symbolic,
            rec.measured["max_rel_residual"]
        ));
    }
    let elapsed = start.elapsed();
    pass &= elapsed.as_secs_f64() < 5.0;
    verdict(
        "1 (pipeline equivalence)",
        pass,
        &format!("{}; elapsed {:.2?}", notes.join("; "), elapsed),
    );
}

// 2. Functional equations: zetas symmetric, companions antisymmetric, to
// 1e-9 relative over 100 random points each.
#[test]
fn criterion_02_functional_equations() {
    let mut pass = true;
    let mut notes = Vec::new();
    for id in [
        FunctionId::ZetaLong,
        FunctionId::ZetaShort,
        FunctionId::Z1,
        FunctionId::Z2,
    ] {
        let rec = verify_functional_equation(id, 7);
        pass &= rec.status == CheckStatus::Pass;
        notes.push(format!("{}: {}", id, rec.measured["max_rel_residual"]));
    }
    verdict("2 (functional equations)", pass, &notes.join("; "));
}

// 3. Pole profiles: simple poles at -1 and 2 plus double poles at 0 and 1
// for the long zeta; four simple poles at -2, 0, 1, 3 for the short one.
#[test]
fn criterion_03_pole_profiles() {
    let mut pass = true;
    for kind in [ParabolicKind::Long, ParabolicKind::Short] {
        let rec = verify_poles(kind);
        pass &= rec.status == CheckStatus::Pass;
    }
    // spot-check the probe output directly
    pass &= laurent_probe(FunctionId::ZetaLong, 0.0).unwrap().0 == 2;
    pass &= laurent_probe(FunctionId::ZetaLong, 1.0).unwrap().0 == 2;
    pass &= laurent_probe(FunctionId::ZetaLong, -1.0).unwrap().0 == 1;
    pass &= laurent_probe(FunctionId::ZetaLong, 2.0).unwrap().0 == 1;
    for p in [-2.0, 0.0, 1.0, 3.0] {
        pass &= laurent_probe(FunctionId::ZetaShort, p).unwrap().0 == 1;
    }
    verdict("3 (pole profiles)", pass, "orders confirmed by Laurent probes");
}

// 4. The listed real zeros of Z1 and Z2 vanish to 1e-8 of the local scale.
#[test]
fn criterion_04_known_zeros() {
    let mut pass = true;
    for id in [FunctionId::Z1, FunctionId::Z2] {
        let rec = verify_known_zeros(id);
        pass &= rec.status == CheckStatus::Pass;
    }
    verdict(
        "4 (known zeros)",
        pass,
        "Z1 at {0, 1/3, 2/3, 1, 1/2}; Z2 at {-1, 0, 1, 2, 1/2}",
    );
}

// 5. Each auxiliary function has exactly three zeros in the window
// [1/2, 5] x [-10, 10], with the conjugate pair within 0.01 of its
// expected location, in under a minute per function.
#[test]
fn criterion_05_window_counts() {
    let mut pass = true;
    let mut notes = Vec::new();
    for (id, want) in [
        (FunctionId::F1, Complex64::new(0.90, 2.09)),
        (FunctionId::F2, Complex64::new(1.17, 3.43)),
    ] {
        let start = Instant::now();
        let (rec, rho) = verify_f_side(id);
        let elapsed = start.elapsed();
        let ok = rec.status == CheckStatus::Pass
            && rho.is_some_and(|r| (r.re - want.re).abs() <= 0.01 && (r.im - want.im).abs() <= 0.01)
            && elapsed.as_secs_f64() < 60.0;
        pass &= ok;
        notes.push(format!(
            "{id}: rho0 = {:?} in {:.2?}",
            rho.map(|r| (r.re, r.im)),
            elapsed
        ));
    }
    verdict("5 (window counts of three)", pass, &notes.join("; "));
}

// 6. Constants: A = pi/3 - 1, the two asymptotic remainder constants in
// closed form within 5e-4 of their reference decimals and within 10% of
// far-left grid measurements, f1'(0) and f2(0) within 5e-3.
#[test]
fn criterion_06_constants() {
    let rec = verify_constants();
    let a = std::f64::consts::PI / 3.0 - 1.0;
    let pass = rec.status == CheckStatus::Pass
        && (rec.measured["a"].as_f64().unwrap() - a).abs() < 1e-15;
    verdict("6 (constants)", pass, &rec.measured.to_string());
}

// 7. |chi(2s-1)/chi(2s)| < 1 strictly on the default grid.
#[test]
fn criterion_07_ratio_inequality() {
    let rec = verify_lasu_grid();
    verdict(
        "7 (ratio inequality)",
        rec.status == CheckStatus::Pass,
        &format!("max = {}", rec.measured["max"]),
    );
}

// 8. Remainder bound grids: per-term maxima within the stated constants at
// Re >= 20 and the absolute sums below one on Re in [10, 40].
#[test]
fn criterion_08_remainder_bound_grids() {
    let mut pass = true;
    let mut notes = Vec::new();
    for kind in [ParabolicKind::Long, ParabolicKind::Short] {
        let rec = verify_right_plane(kind);
        pass &= rec.status == CheckStatus::Pass;
        notes.push(format!(
            "{}: max sum {}",
            kind.label(),
            rec.measured["max_sum"]
        ));
    }
    verdict("8 (remainder bound grids)", pass, &notes.join("; "));
}

// 9. The xi zero table starts 14.13, 21.02, 25.01 (within 0.01) and every
// |t| <= 100 window of radius 22 holds at least three zeros, in under
// two minutes.
#[test]
fn criterion_09_xi_table_and_window_counts() {
    let start = Instant::now();
    let table = xi_zeros_up_to(122.5).unwrap();
    let want = [14.13, 21.02, 25.01];
    let mut pass = table
        .ordinates
        .iter()
        .take(3)
        .zip(want.iter())
        .filter(|(g, w)| (**g - **w).abs() <= 0.01)
        .count()
        == 3;
    let gap = g2zeta::zeros::lagarias_gap_check(&table, 100.0).unwrap();
    pass &= gap.pass;
    let elapsed = start.elapsed();
    pass &= elapsed.as_secs_f64() < 120.0;
    verdict(
        "9 (xi zero table + window counts)",
        pass,
        &format!(
            "first three {:?}, min window count {}, elapsed {:.2?}",
            &table.ordinates[..3.min(table.ordinates.len())],
            gap.min_count,
            elapsed
        ),
    );
}

// 10. Band verification at T = 60: the full-rectangle winding count equals
// the critical-line scan count for both companions, the band strictly right
// of the critical line holds no zeros with 0 < t <= 60 at all, and grid
// checks are labelled as sampled evidence in the report.
#[test]
fn criterion_10_band_scan_cross_check() {
    let mut pass = true;
    let mut notes = Vec::new();
    for kind in [ParabolicKind::Long, ParabolicKind::Short] {
        let rec = rh_scan(kind, 60.0, 0.01);
        pass &= rec.status == CheckStatus::Pass;
        notes.push(format!(
            "{}: {} line zeros, winding {}",
            kind.label(),
            rec.measured["line_zero_count"],
            rec.measured["winding"]
        ));
        // no zeros strictly right of the line in the band
        let zid = match kind {
            ParabolicKind::Long => FunctionId::Z1,
            ParabolicKind::Short => FunctionId::Z2,
        };
        let band = Rectangle::new(0.501, 20.0, 1e-3, 60.0).unwrap();
        let w = winding_count(zid, band).unwrap();
        pass &= w.count == 0;
        // and the central regions contain exactly the exceptional real zeros
        let rec = verify_central(kind);
        pass &= rec.status == CheckStatus::Pass;
    }
    // grid checks are labelled as sampled evidence
    let rec = verify_lasu_grid();
    pass &= rec.evidence.contains("sampled");
    verdict("10 (band scan cross-check)", pass, &notes.join("; "));
}

// 11. Determinism: `rh verify --T 60 --seed 7` twice produces
// byte-identical reports.
#[test]
fn criterion_11_determinism() {
    let dir = std::env::temp_dir().join(format!("g2zeta-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |name: &str| -> Vec<u8> {
        let out = dir.join(name);
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_g2zeta"))
            .args(["rh", "verify", "--T", "60", "--seed", "7", "--out"])
            .arg(&out)
            .stderr(std::process::Stdio::null())
            .status()
            .expect("binary runs");
        assert!(status.success(), "rh verify must exit 0 on all-pass");
        std::fs::read(&out).unwrap()
    };
    let a = run("report_a.json");
    let b = run("report_b.json");
    let mut pass = a == b && !a.is_empty();
    let detail = format!("two runs, {} bytes each, identical = {}", a.len(), a == b);
    let _ = std::fs::remove_dir_all(&dir);

    // structural schema: unique check ids, non-empty claims, consistent summary
    let doc: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let checks = doc["checks"].as_array().unwrap();
    let mut ids: Vec<&str> = checks
        .iter()
        .map(|c| c["check_id"].as_str().unwrap())
        .collect();
    let n = ids.len();
    ids.sort();
    ids.dedup();
    pass &= ids.len() == n;
    pass &= checks
        .iter()
        .all(|c| !c["claim"].as_str().unwrap_or("").is_empty());
    pass &= checks.iter().all(|c| c.get("runtime_ms").is_none());
    pass &= doc["summary"]["total"].as_u64().unwrap() as usize == n;
    pass &= doc["summary"]["all_pass"].as_bool().unwrap();
    // in-process double run must agree as well
    let opts = VerifyOptions {
        t_max: 60.0,
        seed: 7,
        timings: false,
        scan_step: 0.01,
    };
    let x = full_report(&opts).to_json_pretty();
    let y = full_report(&opts).to_json_pretty();
    verdict("11 (determinism)", pass && x == y, &detail);
}
