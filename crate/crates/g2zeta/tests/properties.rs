//! Property tests for the exact-arithmetic layer and the CLI parsers, plus
//! the scan-stability invariant of the zero table.

use g2zeta::cli::parse_complex;
use g2zeta::period::{build_period, eval_period, pipeline, ParabolicKind};
use g2zeta::rootsystem::{build_g2, pairing, LinearForm};
use g2zeta::zeros::line_scan;
use g2zeta::zetas::FunctionId;
use num_complex::Complex64;
use proptest::prelude::*;

proptest! {
    #[test]
    fn complex_parser_round_trips(re in -1e6f64..1e6, im in -1e6f64..1e6) {
        let text = if im >= 0.0 {
            format!("{re}+{im}i")
        } else {
            format!("{re}{im}i")
        };
        let parsed = parse_complex(&text).unwrap();
        prop_assert_eq!(parsed, Complex64::new(re, im));
    }

    #[test]
    fn linear_form_shift_matches_substitution(
        a in -5i64..=5, c in -5i64..=5, k in -3i64..=3,
        re in -4f64..4.0, im in -4f64..4.0,
    ) {
        let f = LinearForm::new(a, 0, c);
        let s = Complex64::new(re, im);
        let direct = f.shifted(k).eval_single(s);
        let substituted = f.eval_single(s - k as f64);
        prop_assert!((direct - substituted).norm() <= 1e-12 * direct.norm().max(1.0));
    }

    #[test]
    fn hyperplane_restriction_agrees_with_evaluation(
        a in -5i64..=5, b in -5i64..=5, c in -5i64..=5,
        re in -4f64..4.0, im in -4f64..4.0,
    ) {
        let f = LinearForm::new(a, b, c);
        let s = Complex64::new(re, im);
        // z1 = s + 1, z2 = s
        let on_long = f.on_long_hyperplane().eval_single(s);
        let direct = f.eval(s + 1.0, s);
        prop_assert!((on_long - direct).norm() <= 1e-12 * direct.norm().max(1.0));
        // z1 = s, z2 = 1
        let on_short = f.on_short_hyperplane().eval_single(s);
        let direct = f.eval(s, Complex64::new(1.0, 0.0));
        prop_assert!((on_short - direct).norm() <= 1e-12 * direct.norm().max(1.0));
    }

    #[test]
    fn weyl_action_preserves_pairing_numerically(widx in 0usize..12, gidx in 0usize..6) {
        let rs = build_g2();
        let w = &rs.elements[widx];
        let gamma = rs.positive[gidx];
        let wg = w.action_root.apply_root(gamma);
        let lhs = if wg.is_positive() {
            pairing(wg).after_action(&w.action_z)
        } else {
            pairing(wg.neg()).after_action(&w.action_z).negate()
        };
        prop_assert_eq!(lhs, pairing(gamma));
    }
}

/// The period is invariant under the Weyl symmetry it was built from only
/// as a whole; individual evaluations must at least agree with the
/// Laurent structure at conjugate points.
#[test]
fn period_conjugation_symmetry_random_points() {
    let rs = build_g2();
    let p = build_period(&rs);
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(19);
    let mut checked = 0;
    while checked < 20 {
        let z1 = Complex64::new(rng.gen_range(2.5..4.0), rng.gen_range(0.2..2.0));
        let z2 = Complex64::new(rng.gen_range(1.2..2.2), rng.gen_range(0.2..2.0));
        let (Ok(v), Ok(w)) = (
            eval_period(&p, z1, z2),
            eval_period(&p, z1.conj(), z2.conj()),
        ) else {
            continue;
        };
        assert!((w - v.conj()).norm() <= 1e-10 * v.norm().max(1e-300));
        checked += 1;
    }
}

/// Halving the critical-line scan step changes no xi bracket count up to 150.
#[test]
fn xi_scan_step_halving_stable() {
    let coarse = line_scan(FunctionId::Xi, 0.05, 150.0, 0.05).unwrap();
    let fine = line_scan(FunctionId::Xi, 0.025, 150.0, 0.025).unwrap();
    assert_eq!(coarse.len(), fine.len());
}

/// The built pipelines evaluate to the same values under JSON round-trips
/// for both parabolics.
#[test]
fn pipeline_json_round_trip_both_kinds() {
    let rs = build_g2();
    for kind in [ParabolicKind::Long, ParabolicKind::Short] {
        let expr = pipeline(&rs, kind);
        let text = serde_json::to_string(&expr).unwrap();
        let back: g2zeta::period::ZetaExpression = serde_json::from_str(&text).unwrap();
        let s = Complex64::new(0.77, 3.21);
        let a = expr.eval(s).unwrap();
        let b = back.eval(s).unwrap();
        assert!((a - b).norm() <= 1e-15 * a.norm());
    }
}
