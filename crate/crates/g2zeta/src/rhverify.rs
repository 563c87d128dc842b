//! The verification pipeline: functional equations, pole profiles, symbolic
//! pipeline equivalence, inequality and bound grids, window counts of zeros,
//! and the critical-line scans, assembled into a machine-readable report.
//!
//! Grid checks sample finite regions and are labelled as sampled evidence;
//! winding counts over finite rectangles are exact integers. Nothing here
//! proves the unbounded-region statements; the report says exactly what was
//! measured and where.

use crate::config::Config;
use crate::error::Error;
use crate::exec;
use crate::period::{pipeline, reference_zeta, ParabolicKind};
use crate::rootsystem::build_g2;
use crate::special::a_const;
use crate::zeros::{
    lagarias_gap_check, line_scan, local_scale, locate_zeros_in_rect, ratio_bound_scan, refine,
    winding_count, xi_zeros_up_to, GridSpec, Rectangle, RefineStart, XiZeroTable, ZeroRecord,
};
use crate::zetas::{
    eval_f, eval_remainder, eval_z, eval_zeta_g2, laurent_probe, pole_profile, FunctionId,
    RemainderCtx, RemainderFamily,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

/// One verification record. `claim` states what was checked in plain words;
/// `evidence` says how (exact identity, winding count, or sampled grid).
#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub claim: String,
    pub evidence: String,
    pub status: CheckStatus,
    pub measured: Value,
    pub tolerance: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub all_pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub t_max: f64,
    pub seed: u64,
    pub checks: Vec<CheckRecord>,
    pub summary: ReportSummary,
}

impl ReportDocument {
    pub fn all_pass(&self) -> bool {
        self.summary.all_pass
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Options for a full verification run.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub t_max: f64,
    pub seed: u64,
    /// Include wall-clock timings in the serialized report (breaks
    /// byte-for-byte reproducibility across runs).
    pub timings: bool,
    pub scan_step: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            t_max: 60.0,
            seed: 7,
            timings: false,
            scan_step: 0.01,
        }
    }
}

impl VerifyOptions {
    pub fn from_config(cfg: &Config) -> Self {
        VerifyOptions {
            t_max: cfg.default_t,
            seed: cfg.seed,
            timings: false,
            scan_step: cfg.scan_step,
        }
    }
}

fn record(
    check_id: &str,
    claim: &str,
    evidence: &str,
    pass: bool,
    measured: Value,
    tolerance: Value,
) -> CheckRecord {
    CheckRecord {
        check_id: check_id.into(),
        claim: claim.into(),
        evidence: evidence.into(),
        status: if pass { CheckStatus::Pass } else { CheckStatus::Fail },
        measured,
        tolerance,
        runtime_ms: None,
    }
}

fn error_record(check_id: &str, claim: &str, err: &Error) -> CheckRecord {
    CheckRecord {
        check_id: check_id.into(),
        claim: claim.into(),
        evidence: "aborted".into(),
        status: CheckStatus::Error,
        measured: json!({ "error": err.to_string() }),
        tolerance: Value::Null,
        runtime_ms: None,
    }
}

fn obj(entries: &[(&str, Value)]) -> Value {
    let mut m = Map::new();
    for (k, v) in entries {
        m.insert((*k).to_string(), v.clone());
    }
    Value::Object(m)
}

/// Constants: A and the two asymptotic remainder constants in closed form,
/// the derivative/value of the auxiliary functions at the origin, and the
/// far-left grid measurements the asymptotic constants are matched against.
#[allow(clippy::approx_constant)] // -6.283 is the reference decimal under test
pub fn verify_constants() -> CheckRecord {
    let a = a_const();
    let c1 = 2.0 * 3.0_f64.sqrt() * std::f64::consts::PI * a;
    let c2 = 2.0 * std::f64::consts::PI * a;

    let h = 1e-5;
    let f1p0 = ((eval_f(FunctionId::F1, Complex64::new(h, 0.0))
        - eval_f(FunctionId::F1, Complex64::new(-h, 0.0)))
        / (2.0 * h))
        .re;
    let f2_0 = eval_f(FunctionId::F2, Complex64::new(0.0, 0.0)).re;

    // Far-left sampling of the dominant left-half-plane remainders. The
    // finite-|s| correction decays like 1/(A |s|), so the grid sits at
    // real parts of several hundred; the log-modulus route avoids the
    // overflow of the direct chi products out there.
    let mut pts = Vec::new();
    for k in 0..21 {
        let sigma = -900.0 + 10.0 * k as f64;
        for t in [0.0, 5.0, 20.0] {
            pts.push(Complex64::new(sigma, t));
        }
    }
    let r2_f1 = exec::map(&pts, |&s| {
        crate::zetas::left_remainder_log_abs(RemainderFamily::F1LeftR, 2, s).unwrap_or(f64::NAN)
    });
    let r2_f2 = exec::map(&pts, |&s| {
        crate::zetas::left_remainder_log_abs(RemainderFamily::F2LeftR, 2, s).unwrap_or(f64::NAN)
    });
    let max1 = r2_f1.iter().copied().fold(0.0, f64::max);
    let max2 = r2_f2.iter().copied().fold(0.0, f64::max);

    let pass = (f1p0 - -2.176).abs() <= 0.005
        && (f2_0 - -6.283).abs() <= 0.005
        && (c1 - 0.51364).abs() <= 0.0005
        && (c2 - 0.29655).abs() <= 0.0005
        && (max1 - c1).abs() <= 0.1 * c1
        && (max2 - c2).abs() <= 0.1 * c2;

    record(
        "constants",
        "A = pi/3 - 1; asymptotic remainder constants 2*sqrt(3)*pi*A and 2*pi*A \
         match far-left grid measurements; f1'(0) and f2(0) match their expected values",
        "closed form + sampled grid",
        pass,
        obj(&[
            ("a", json!(a)),
            ("two_sqrt3_pi_a", json!(c1)),
            ("two_pi_a", json!(c2)),
            ("f1_deriv_0", json!(f1p0)),
            ("f2_at_0", json!(f2_0)),
            ("far_left_max_r2_f1", json!(max1)),
            ("far_left_max_r2_f2", json!(max2)),
        ]),
        obj(&[
            ("f1_deriv_0", json!(0.005)),
            ("f2_at_0", json!(0.005)),
            ("constants", json!(0.0005)),
            ("far_left_match_rel", json!(0.1)),
        ]),
    )
}

fn kind_name(kind: ParabolicKind) -> &'static str {
    kind.label()
}

/// Symbolic pipeline equivalence: the built expression must equal the
/// published one structurally and numerically at random pole-avoiding points.
pub fn verify_pipeline(kind: ParabolicKind, seed: u64) -> CheckRecord {
    let check_id = format!("pipeline_{}", kind_name(kind));
    let claim = format!(
        "period -> residue -> normalize reproduces the eight-term {} zeta expression",
        kind_name(kind)
    );
    let rs = build_g2();
    let built = pipeline(&rs, kind);
    let reference = reference_zeta(kind);
    let symbolic_equal = built.canonical() == reference.canonical();

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    let mut max_rel = 0f64;
    let mut checked = 0;
    while checked < 50 {
        let s = Complex64::new(rng.gen_range(-3.0..4.0), rng.gen_range(-20.0..20.0));
        let (a, b) = match (built.eval(s), reference.eval(s)) {
            (Ok(a), Ok(b)) => (a, b),
            _ => continue, // a pole of some xi factor; resample
        };
        if !a.is_finite() || !b.is_finite() {
            continue;
        }
        max_rel = max_rel.max((a - b).norm() / b.norm().max(1.0));
        checked += 1;
    }
    let pass = symbolic_equal && max_rel <= 1e-12;
    record(
        &check_id,
        &claim,
        "exact term comparison + 50 sampled points",
        pass,
        obj(&[
            ("symbolic_equal", json!(symbolic_equal)),
            ("max_rel_residual", json!(max_rel)),
        ]),
        json!(1e-12),
    )
}

/// Functional equations of the zetas and antisymmetry of the companions.
pub fn verify_functional_equation(id: FunctionId, seed: u64) -> CheckRecord {
    let (check_id, claim): (String, String) = match id {
        FunctionId::ZetaLong | FunctionId::ZetaShort => (
            format!("fe_zeta_{id}"),
            format!("zeta[{id}](s) = zeta[{id}](1-s) on 100 random points"),
        ),
        _ => (
            format!("fe_{}", id.label().to_lowercase()),
            format!("{id}(s) + {id}(1-s) = 0 on 100 random points"),
        ),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2545f4914f6cdd1d);
    let mut max_rel = 0f64;
    let mut checked = 0;
    while checked < 100 {
        let s = Complex64::new(rng.gen_range(-4.0..5.0), rng.gen_range(-20.0..20.0));
        let rel = match id {
            FunctionId::ZetaLong | FunctionId::ZetaShort => {
                let kind = if id == FunctionId::ZetaLong {
                    ParabolicKind::Long
                } else {
                    ParabolicKind::Short
                };
                match (eval_zeta_g2(kind, s), eval_zeta_g2(kind, 1.0 - s)) {
                    (Ok(a), Ok(b)) => (a - b).norm() / a.norm().max(1e-300),
                    _ => continue,
                }
            }
            FunctionId::Z1 | FunctionId::Z2 => {
                let a = eval_z(id, s);
                let b = eval_z(id, 1.0 - s);
                (a + b).norm() / a.norm().max(1e-300)
            }
            _ => unreachable!(),
        };
        max_rel = max_rel.max(rel);
        checked += 1;
    }
    record(
        &check_id,
        &claim,
        "sampled points",
        max_rel <= 1e-9,
        obj(&[("max_rel_residual", json!(max_rel))]),
        json!(1e-9),
    )
}

/// Pole profile confirmation by Laurent probes.
pub fn verify_poles(kind: ParabolicKind) -> CheckRecord {
    let check_id = format!("poles_{}", kind_name(kind));
    let profile = pole_profile(kind);
    let claim = format!(
        "all declared poles of the {} zeta have the declared orders",
        kind_name(kind)
    );
    let mut results = Vec::new();
    let mut pass = true;
    for (loc, want) in &profile.poles {
        match laurent_probe(profile.function, *loc) {
            Ok((order, lead)) => {
                let ok = order == *want && lead.norm() > 0.0;
                pass &= ok;
                results.push(json!({
                    "location": loc,
                    "expected_order": want,
                    "measured_order": order,
                    "leading_abs": lead.norm(),
                }));
            }
            Err(e) => {
                pass = false;
                results.push(json!({ "location": loc, "error": e.to_string() }));
            }
        }
    }
    record(
        &check_id,
        &claim,
        "log-log slope on two circles",
        pass,
        Value::Array(results),
        json!({ "slope_tolerance": 0.1 }),
    )
}

/// The listed real zeros of the entire companions vanish to 1e-8 of the
/// local scale.
pub fn verify_known_zeros(id: FunctionId) -> CheckRecord {
    let check_id = format!("zeros_known_{}", id.label().to_lowercase());
    let claim = format!("{id} vanishes at its listed real zeros");
    let zeros = crate::zetas::known_real_zeros(id);
    let mut rows = Vec::new();
    let mut pass = true;
    for &x in zeros {
        let z = Complex64::new(x, 0.0);
        let v = eval_z(id, z).norm();
        let scale = local_scale(id, z).unwrap_or(f64::NAN);
        let ok = v <= 1e-8 * scale;
        pass &= ok;
        rows.push(json!({ "s": x, "abs": v, "local_scale": scale }));
    }
    record(
        &check_id,
        &claim,
        "direct evaluation vs local scale",
        pass,
        Value::Array(rows),
        json!(1e-8),
    )
}

/// Strict inequality |chi(2s-1)/chi(2s)| < 1 on the default grid.
pub fn verify_lasu_grid() -> CheckRecord {
    let grid = GridSpec::default_ratio_grid();
    match ratio_bound_scan(&grid) {
        Ok(rep) => record(
            "lasu_grid",
            "|chi(2s-1)/chi(2s)| < 1 strictly for Re(s) in [0.51, 20], |Im(s)| <= 50",
            "sampled grid (200 x 200)",
            rep.pass,
            obj(&[
                ("max", json!(rep.max)),
                ("argmax_re", json!(rep.argmax.0)),
                ("argmax_im", json!(rep.argmax.1)),
            ]),
            json!("strictly below 1"),
        ),
        Err(e) => error_record("lasu_grid", "ratio inequality grid", &e),
    }
}

/// Windows [1/2,5] x [-10,10]: the auxiliary function has exactly three
/// zeros; locate them and return the non-real representative.
pub fn verify_f_side(id: FunctionId) -> (CheckRecord, Option<Complex64>) {
    let check_id = format!("{}_window", id.label().to_lowercase());
    let claim = format!("{id} has exactly three zeros in [1/2, 5] x [-10, 10]");
    let rect = match Rectangle::new(0.5, 5.0, -10.0, 10.0) {
        Ok(r) => r,
        Err(e) => return (error_record(&check_id, &claim, &e), None),
    };
    let wind = match winding_count(id, rect) {
        Ok(w) => w,
        Err(e) => return (error_record(&check_id, &claim, &e), None),
    };
    let zeros = match locate_zeros_in_rect(id, rect, 0.25) {
        Ok(z) => z,
        Err(e) => return (error_record(&check_id, &claim, &e), None),
    };
    let real_zeros: Vec<&ZeroRecord> = zeros.iter().filter(|r| r.location.1.abs() < 1e-6).collect();
    let complex_zeros: Vec<&ZeroRecord> =
        zeros.iter().filter(|r| r.location.1.abs() >= 1e-6).collect();
    // conjugate pair: the two non-real zeros mirror each other
    let conjugate_ok = complex_zeros.len() == 2
        && (complex_zeros[0].location.0 - complex_zeros[1].location.0).abs() < 1e-6
        && (complex_zeros[0].location.1 + complex_zeros[1].location.1).abs() < 1e-6;
    let rho0 = complex_zeros
        .iter()
        .find(|r| r.location.1 > 0.0)
        .map(|r| r.location_c());
    let pass = wind.count == 3 && zeros.len() == 3 && real_zeros.len() == 1 && conjugate_ok;
    let rec = record(
        &check_id,
        &claim,
        "winding count + located zeros",
        pass,
        obj(&[
            ("winding", json!(wind.count)),
            ("confidence", json!(wind.confidence)),
            (
                "zeros",
                Value::Array(
                    zeros
                        .iter()
                        .map(|r| json!({ "re": r.location.0, "im": r.location.1, "residual": r.residual }))
                        .collect(),
                ),
            ),
        ]),
        json!({ "count": 3 }),
    );
    (rec, rho0)
}

const Z1_RIGHT_BOUNDS: [f64; 5] = [0.1, 0.3, 0.05, 0.1, 0.1];
const Z2_RIGHT_BOUNDS: [f64; 5] = [0.3, 0.13, 0.15, 0.2, 0.1];

/// Right-half-plane remainder grids: each |R_i| within its stated constant
/// for Re(s) >= 20, and the absolute sum below one on Re(s) in [10, 40].
pub fn verify_right_plane(kind: ParabolicKind) -> CheckRecord {
    let (check_id, family, bounds) = match kind {
        ParabolicKind::Long => ("z1_right_plane", RemainderFamily::Z1R, Z1_RIGHT_BOUNDS),
        ParabolicKind::Short => ("z2_right_plane", RemainderFamily::Z2R, Z2_RIGHT_BOUNDS),
    };
    let claim = format!(
        "remainder moduli of the {} companion stay within the stated constants \
         (Re >= 20) and their sum stays below one (Re in [10, 40], |Im| <= 60)",
        kind_name(kind)
    );
    let ctx = RemainderCtx::default();
    let (n_re, n_im) = (400usize, 240usize);
    let pts: Vec<Complex64> = (0..n_im)
        .flat_map(|j| {
            (0..n_re).map(move |i| {
                Complex64::new(
                    10.0 + 30.0 * i as f64 / (n_re - 1) as f64,
                    -60.0 + 120.0 * j as f64 / (n_im - 1) as f64,
                )
            })
        })
        .collect();
    let rows = exec::map(&pts, |&s| {
        let mut r = [f64::NAN; 5];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = eval_remainder(family, (i + 1) as u32, s, &ctx)
                .map(|v| v.norm())
                .unwrap_or(f64::NAN);
        }
        r
    });
    let mut max_each_right = [0f64; 5]; // over Re >= 20
    let mut max_sum = 0f64;
    let mut argmax_sum = pts[0];
    for (s, r) in pts.iter().zip(rows.iter()) {
        let sum: f64 = r.iter().sum();
        if !sum.is_finite() {
            return record(
                check_id,
                &claim,
                "sampled grid",
                false,
                obj(&[("non_finite_at", json!([s.re, s.im]))]),
                Value::Null,
            );
        }
        if sum > max_sum {
            max_sum = sum;
            argmax_sum = *s;
        }
        if s.re >= 20.0 {
            for i in 0..5 {
                max_each_right[i] = max_each_right[i].max(r[i]);
            }
        }
    }
    let bounds_ok = max_each_right
        .iter()
        .zip(bounds.iter())
        .all(|(m, b)| m <= b);
    let pass = bounds_ok && max_sum < 1.0;
    record(
        check_id,
        &claim,
        "sampled grid (400 x 240)",
        pass,
        obj(&[
            ("max_each_at_re_ge_20", json!(max_each_right.to_vec())),
            ("max_sum", json!(max_sum)),
            ("argmax_sum", json!([argmax_sum.re, argmax_sum.im])),
        ]),
        obj(&[
            ("per_term", json!(bounds.to_vec())),
            ("sum", json!(1.0)),
        ]),
    )
}

/// Strip tails: the exceptional-zero ratio stays below one on the band grid,
/// and a winding count over the band rectangle finds no zero.
pub fn verify_strip_tail(kind: ParabolicKind, rho0: Complex64) -> CheckRecord {
    let (check_id, zid, family, t_min) = match kind {
        ParabolicKind::Long => ("z1_strip_tail", FunctionId::Z1, RemainderFamily::RatioR1, 25.0),
        ParabolicKind::Short => ("z2_strip_tail", FunctionId::Z2, RemainderFamily::RatioR2, 36.0),
    };
    let claim = format!(
        "no zeros of the {} companion in the band 1/2 < Re <= 20, {} <= Im <= {}: \
         ratio bound below one and winding count zero",
        kind_name(kind),
        t_min,
        t_min + 60.0
    );
    let ctx = match kind {
        ParabolicKind::Long => RemainderCtx {
            rho0_f1: Some(rho0),
            rho0_f2: None,
        },
        ParabolicKind::Short => RemainderCtx {
            rho0_f1: None,
            rho0_f2: Some(rho0),
        },
    };
    // 0.1-spaced grid over the band
    let n_re = 195usize;
    let n_im = 601usize;
    let pts: Vec<Complex64> = (0..n_im)
        .flat_map(|j| {
            (0..n_re).map(move |i| {
                Complex64::new(
                    0.6 + (20.0 - 0.6) * i as f64 / (n_re - 1) as f64,
                    t_min + 60.0 * j as f64 / (n_im - 1) as f64,
                )
            })
        })
        .collect();
    let vals = exec::map(&pts, |&s| {
        eval_remainder(family, 1, s, &ctx)
            .map(|v| v.re)
            .unwrap_or(f64::NAN)
    });
    let idx = exec::argmax(&vals).expect("non-empty grid");
    let max_ratio = vals[idx];

    let rect = Rectangle::new(0.5 + 1e-3, 20.0, t_min, t_min + 60.0).expect("valid band");
    let wind = match winding_count(zid, rect) {
        Ok(w) => w,
        Err(e) => return error_record(check_id, &claim, &e),
    };
    let pass = max_ratio < 1.0 && max_ratio.is_finite() && wind.count == 0;
    record(
        check_id,
        &claim,
        "sampled grid (0.1 spacing) + winding count",
        pass,
        obj(&[
            ("max_ratio", json!(max_ratio)),
            ("argmax", json!([pts[idx].re, pts[idx].im])),
            ("winding", json!(wind.count)),
            ("winding_confidence", json!(wind.confidence)),
        ]),
        obj(&[("ratio", json!(1.0)), ("winding", json!(0))]),
    )
}

/// Central regions: the winding count must find exactly the two exceptional
/// real zeros, each confirmed simple by a small-square count.
pub fn verify_central(kind: ParabolicKind) -> CheckRecord {
    let (check_id, zid, t_cap, exceptional): (&str, FunctionId, f64, [f64; 2]) = match kind {
        ParabolicKind::Long => ("z1_central", FunctionId::Z1, 25.0, [2.0 / 3.0, 1.0]),
        ParabolicKind::Short => ("z2_central", FunctionId::Z2, 36.0, [1.0, 2.0]),
    };
    let claim = format!(
        "the {} companion has exactly the two exceptional real zeros in \
         1/2 < Re <= 20, |Im| <= {t_cap}, and both are simple",
        kind_name(kind)
    );
    let rect = Rectangle::new(0.5 + 1e-3, 20.0, -t_cap, t_cap).expect("valid central region");
    let wind = match winding_count(zid, rect) {
        Ok(w) => w,
        Err(e) => return error_record(check_id, &claim, &e),
    };
    let mut rows = Vec::new();
    let mut simple_ok = true;
    for &x in &exceptional {
        let sq = Rectangle::new(x - 1e-3, x + 1e-3, -1e-3, 1e-3).expect("valid probe square");
        match winding_count(zid, sq) {
            Ok(w) => {
                simple_ok &= w.count == 1;
                rows.push(json!({ "zero": x, "multiplicity": w.count }));
            }
            Err(e) => {
                simple_ok = false;
                rows.push(json!({ "zero": x, "error": e.to_string() }));
            }
        }
    }
    let pass = wind.count == 2 && simple_ok;
    record(
        check_id,
        &claim,
        "winding counts",
        pass,
        obj(&[
            ("winding", json!(wind.count)),
            ("confidence", json!(wind.confidence)),
            ("exceptional", Value::Array(rows)),
        ]),
        json!({ "count": 2, "multiplicity": 1 }),
    )
}

/// The xi zero table and the window-count check on it.
pub fn verify_xi_table_and_gap() -> (CheckRecord, CheckRecord, Option<XiZeroTable>) {
    let claim_table = "first three xi zero ordinates are 14.13, 21.02, 25.01 (within 0.01)";
    let claim_gap = "every |t| <= 100 has at least three xi zeros within window 22";
    let table = match xi_zeros_up_to(122.5) {
        Ok(t) => t,
        Err(e) => {
            return (
                error_record("xi_zero_table", claim_table, &e),
                error_record("lagarias_window", claim_gap, &e),
                None,
            )
        }
    };
    let want = [14.13, 21.02, 25.01];
    let first_ok = table.ordinates.len() >= 3
        && table
            .ordinates
            .iter()
            .take(3)
            .zip(want.iter())
            .all(|(g, w)| (g - w).abs() <= 0.01);
    let rec_table = record(
        "xi_zero_table",
        claim_table,
        "critical-line scan at step 0.05 + bisection",
        first_ok,
        obj(&[
            ("count", json!(table.ordinates.len())),
            ("height", json!(table.height)),
            (
                "first_three",
                json!(table.ordinates.iter().take(3).copied().collect::<Vec<_>>()),
            ),
        ]),
        json!(0.01),
    );
    let rec_gap = match lagarias_gap_check(&table, 100.0) {
        Ok(rep) => record(
            "lagarias_window",
            claim_gap,
            "window counts on the computed table",
            rep.pass,
            obj(&[
                ("min_count", json!(rep.min_count)),
                ("argmin_t", json!(rep.argmin_t)),
                ("window", json!(rep.window)),
            ]),
            json!({ "min_count": 3 }),
        ),
        Err(e) => error_record("lagarias_window", claim_gap, &e),
    };
    (rec_table, rec_gap, Some(table))
}

/// Critical-line scan of a companion up to height T, cross-checked against a
/// full-rectangle winding count at a quiet height between consecutive zeros.
pub fn rh_scan(kind: ParabolicKind, t_max: f64, scan_step: f64) -> CheckRecord {
    let (check_id, zid) = match kind {
        ParabolicKind::Long => ("rh_scan_z1", FunctionId::Z1),
        ParabolicKind::Short => ("rh_scan_z2", FunctionId::Z2),
    };
    let claim = format!(
        "every zero of the {} companion with 0 < Im <= {t_max} found by winding \
         lies on Re = 1/2 (line-scan count equals full-rectangle count)",
        kind_name(kind)
    );
    // scan a little beyond T so a quiet cross-check height can be chosen
    let brackets = match line_scan(zid, scan_step, t_max + 2.0, scan_step) {
        Ok(b) => b,
        Err(e) => return error_record(check_id, &claim, &e),
    };
    let mut ordinates = Vec::new();
    for (a, b) in &brackets {
        match refine(zid, RefineStart::Bracket(*a, *b)) {
            Ok(rec) => ordinates.push(rec.location.1),
            Err(e) => return error_record(check_id, &claim, &e),
        }
    }
    ordinates.sort_by(|a, b| a.total_cmp(b));
    // quiet height: midway between the last zero at or below T and the next
    let below: Vec<f64> = ordinates.iter().copied().filter(|&g| g <= t_max).collect();
    let above = ordinates.iter().copied().find(|&g| g > t_max);
    let t_top = match (below.last(), above) {
        (Some(&lo), Some(hi)) => 0.5 * (lo + hi),
        (Some(&lo), None) => lo + 1.0,
        (None, _) => t_max,
    };
    let rect = match Rectangle::new(-10.0, 11.0, 1e-3, t_top) {
        Ok(r) => r,
        Err(e) => return error_record(check_id, &claim, &e),
    };
    let wind = match winding_count(zid, rect) {
        Ok(w) => w,
        Err(e) => return error_record(check_id, &claim, &e),
    };
    // each line zero, divided by the prefactor, is a zero of the zeta itself
    let mut zeta_residual_max = 0f64;
    for &g in &below {
        let s = Complex64::new(0.5, g);
        match eval_zeta_g2(kind, s) {
            Ok(v) => {
                let scale = eval_zeta_g2(kind, s + Complex64::new(0.0, 0.05))
                    .map(|w| w.norm())
                    .unwrap_or(1.0);
                zeta_residual_max = zeta_residual_max.max(v.norm() / scale.max(1e-300));
            }
            Err(e) => return error_record(check_id, &claim, &e),
        }
    }
    let pass = wind.count == below.len() as i64 && zeta_residual_max <= 1e-6;
    record(
        check_id,
        &claim,
        "line scan + winding cross-check",
        pass,
        obj(&[
            ("line_zero_count", json!(below.len())),
            ("winding", json!(wind.count)),
            ("winding_confidence", json!(wind.confidence)),
            ("cross_check_height", json!(t_top)),
            ("zeta_residual_max", json!(zeta_residual_max)),
            ("ordinates", json!(below)),
            (
                "excluded_real_zeros",
                json!(crate::zetas::known_real_zeros(zid)),
            ),
        ]),
        obj(&[("count_match", json!(true)), ("zeta_residual", json!(1e-6))]),
    )
}

/// Dual-route consistency of the companions against prefactor times the
/// eight-term sum.
pub fn verify_consistency(seed: u64) -> CheckRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xda3e39cb94b95bdb);
    let mut max_rel = 0f64;
    let mut checked = 0;
    while checked < 25 {
        let s = Complex64::new(rng.gen_range(-3.0..4.0), rng.gen_range(1.0..15.0));
        match crate::zetas::consistency_check(s) {
            Ok(rep) => {
                max_rel = max_rel.max(rep.rel_long.max(rep.rel_short));
                checked += 1;
            }
            Err(_) => continue,
        }
    }
    record(
        "consistency_dual_route",
        "chi-form of each companion equals its polynomial prefactor times the eight-term sum",
        "sampled points",
        max_rel <= 1e-9,
        obj(&[("max_rel", json!(max_rel))]),
        json!(1e-9),
    )
}

fn timed(timings: bool, rec: impl FnOnce() -> CheckRecord) -> CheckRecord {
    let start = Instant::now();
    let mut r = rec();
    if timings {
        r.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    r
}

/// Run the whole pipeline and assemble the report.
pub fn full_report(opts: &VerifyOptions) -> ReportDocument {
    let mut checks: Vec<CheckRecord> = Vec::new();
    let t = opts.timings;

    checks.push(timed(t, verify_constants));
    checks.push(timed(t, || verify_pipeline(ParabolicKind::Long, opts.seed)));
    checks.push(timed(t, || verify_pipeline(ParabolicKind::Short, opts.seed)));
    checks.push(timed(t, || verify_consistency(opts.seed)));
    checks.push(timed(t, || {
        verify_functional_equation(FunctionId::ZetaLong, opts.seed)
    }));
    checks.push(timed(t, || {
        verify_functional_equation(FunctionId::ZetaShort, opts.seed)
    }));
    checks.push(timed(t, || verify_functional_equation(FunctionId::Z1, opts.seed)));
    checks.push(timed(t, || verify_functional_equation(FunctionId::Z2, opts.seed)));
    checks.push(timed(t, || verify_poles(ParabolicKind::Long)));
    checks.push(timed(t, || verify_poles(ParabolicKind::Short)));
    checks.push(timed(t, || verify_known_zeros(FunctionId::Z1)));
    checks.push(timed(t, || verify_known_zeros(FunctionId::Z2)));
    checks.push(timed(t, verify_lasu_grid));

    let start = Instant::now();
    let (mut rec_f1, rho1) = verify_f_side(FunctionId::F1);
    if t {
        rec_f1.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    checks.push(rec_f1);
    let start = Instant::now();
    let (mut rec_f2, rho2) = verify_f_side(FunctionId::F2);
    if t {
        rec_f2.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    checks.push(rec_f2);

    checks.push(timed(t, || verify_right_plane(ParabolicKind::Long)));
    checks.push(timed(t, || verify_right_plane(ParabolicKind::Short)));

    match rho1 {
        Some(rho) => checks.push(timed(t, || verify_strip_tail(ParabolicKind::Long, rho))),
        None => checks.push(error_record(
            "z1_strip_tail",
            "strip tail needs the f1 exceptional zero",
            &Error::InvalidInput("f1 window check did not produce a zero".into()),
        )),
    }
    match rho2 {
        Some(rho) => checks.push(timed(t, || verify_strip_tail(ParabolicKind::Short, rho))),
        None => checks.push(error_record(
            "z2_strip_tail",
            "strip tail needs the f2 exceptional zero",
            &Error::InvalidInput("f2 window check did not produce a zero".into()),
        )),
    }

    checks.push(timed(t, || verify_central(ParabolicKind::Long)));
    checks.push(timed(t, || verify_central(ParabolicKind::Short)));

    let start = Instant::now();
    let (mut rec_table, rec_gap, _table) = verify_xi_table_and_gap();
    if t {
        rec_table.runtime_ms = Some(start.elapsed().as_millis() as u64);
    }
    checks.push(rec_table);
    checks.push(rec_gap);

    checks.push(timed(t, || rh_scan(ParabolicKind::Long, opts.t_max, opts.scan_step)));
    checks.push(timed(t, || rh_scan(ParabolicKind::Short, opts.t_max, opts.scan_step)));

    let passed = checks
        .iter()
        .filter(|c| c.status == CheckStatus::Pass)
        .count();
    let total = checks.len();
    ReportDocument {
        t_max: opts.t_max,
        seed: opts.seed,
        summary: ReportSummary {
            total,
            passed,
            failed: total - passed,
            all_pass: passed == total,
        },
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_check_passes() {
        let rec = verify_constants();
        assert_eq!(rec.status, CheckStatus::Pass, "{:?}", rec.measured);
    }

    #[test]
    fn pipeline_checks_pass() {
        for kind in [ParabolicKind::Long, ParabolicKind::Short] {
            let rec = verify_pipeline(kind, 7);
            assert_eq!(rec.status, CheckStatus::Pass, "{:?}", rec.measured);
        }
    }

    #[test]
    fn functional_equation_checks_pass() {
        for id in [
            FunctionId::ZetaLong,
            FunctionId::ZetaShort,
            FunctionId::Z1,
            FunctionId::Z2,
        ] {
            let rec = verify_functional_equation(id, 7);
            assert_eq!(rec.status, CheckStatus::Pass, "{id}: {:?}", rec.measured);
        }
    }

    #[test]
    fn pole_checks_pass() {
        for kind in [ParabolicKind::Long, ParabolicKind::Short] {
            let rec = verify_poles(kind);
            assert_eq!(rec.status, CheckStatus::Pass, "{:?}", rec.measured);
        }
    }

    #[test]
    fn f_side_produces_exceptional_zero() {
        let (rec, rho) = verify_f_side(FunctionId::F1);
        assert_eq!(rec.status, CheckStatus::Pass, "{:?}", rec.measured);
        let rho = rho.unwrap();
        assert!((rho.re - 0.90).abs() < 0.01 && (rho.im - 2.09).abs() < 0.01);
    }

    #[test]
    fn report_serializes_deterministically() {
        let rec = verify_constants();
        let doc = ReportDocument {
            t_max: 1.0,
            seed: 7,
            summary: ReportSummary {
                total: 1,
                passed: 1,
                failed: 0,
                all_pass: true,
            },
            checks: vec![rec],
        };
        let a = doc.to_json_pretty();
        let b = doc.to_json_pretty();
        assert_eq!(a, b);
        assert!(!a.contains("runtime_ms"));
    }
}
