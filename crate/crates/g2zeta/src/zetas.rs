//! Numeric evaluators for the two G2 zeta functions, the entire companions
//! Z1 and Z2, the auxiliary functions f_i and their tilde variants, and the
//! remainder families used in the zero-free-region estimates.
//!
//! Production evaluation of Z1 and Z2 goes through the chi-form, which is
//! entire and stable; the eight-term xi sum is kept as an independent route
//! and cross-checked against it.

use crate::error::{EvalError, Result};
use crate::period::{reference_zeta, ParabolicKind, ZetaExpression};
use crate::special::{a_const, chi, xi};
use num_complex::Complex64;
use std::sync::OnceLock;

/// Identifiers for every function the scanners and probes can address.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum FunctionId {
    ZetaLong,
    ZetaShort,
    Z1,
    Z2,
    F1,
    F2,
    Ft1,
    Ft2,
    Xi,
}

impl FunctionId {
    pub fn label(&self) -> &'static str {
        match self {
            FunctionId::ZetaLong => "long",
            FunctionId::ZetaShort => "short",
            FunctionId::Z1 => "Z1",
            FunctionId::Z2 => "Z2",
            FunctionId::F1 => "F1",
            FunctionId::F2 => "F2",
            FunctionId::Ft1 => "FT1",
            FunctionId::Ft2 => "FT2",
            FunctionId::Xi => "xi",
        }
    }
}

impl std::str::FromStr for FunctionId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "LONG" | "ZETA_LONG" => Ok(FunctionId::ZetaLong),
            "SHORT" | "ZETA_SHORT" => Ok(FunctionId::ZetaShort),
            "Z1" => Ok(FunctionId::Z1),
            "Z2" => Ok(FunctionId::Z2),
            "F1" => Ok(FunctionId::F1),
            "F2" => Ok(FunctionId::F2),
            "FT1" => Ok(FunctionId::Ft1),
            "FT2" => Ok(FunctionId::Ft2),
            "XI" => Ok(FunctionId::Xi),
            other => Err(format!("unknown function id: {other}")),
        }
    }
}

impl std::fmt::Display for FunctionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The tilde companion of f1: three chi-products with polynomial weights.
fn ft1(s: Complex64) -> Complex64 {
    let a = a_const();
    (s - 1.0) * (3.0 * s - 2.0) * (a * s - a + 1.0) * chi(s + 1.0) * chi(3.0 * s)
        - (s + 1.0) * (s - 2.0) * chi(s) * chi(3.0 * s - 1.0)
        - 2.0 * (s - 1.0) * (s - 2.0) * chi(s) * chi(3.0 * s)
}

/// The tilde companion of f2.
fn ft2(s: Complex64) -> Complex64 {
    let a = a_const();
    (a * s + 3.0) * (s - 1.0) * (s - 1.0) * chi(s + 2.0)
        - 2.0 * (s - 1.0) * (s - 3.0) * chi(s + 1.0)
        - (s + 2.0) * (s - 3.0) * chi(s)
}

fn f1(s: Complex64) -> Complex64 {
    (s - 1.0) * ft1(s)
}

fn f2(s: Complex64) -> Complex64 {
    (s - 2.0) * ft2(s)
}

/// Entire companions: Z_i(s) = chi(2s) f_i(s) - chi(2s-1) f_i(1-s).
pub fn eval_z(kind: FunctionId, s: Complex64) -> Complex64 {
    let f = match kind {
        FunctionId::Z1 => f1,
        FunctionId::Z2 => f2,
        other => panic!("eval_z expects Z1 or Z2, got {other}"),
    };
    chi(2.0 * s) * f(s) - chi(2.0 * s - 1.0) * f(1.0 - s)
}

/// The auxiliary entire functions f1, f2 and their tilde companions.
pub fn eval_f(kind: FunctionId, s: Complex64) -> Complex64 {
    match kind {
        FunctionId::F1 => f1(s),
        FunctionId::F2 => f2(s),
        FunctionId::Ft1 => ft1(s),
        FunctionId::Ft2 => ft2(s),
        other => panic!("eval_f expects F1/F2/FT1/FT2, got {other}"),
    }
}

/// Polynomial prefactor relating Z_i to the corresponding zeta.
pub fn prefactor(kind: ParabolicKind, s: Complex64) -> Complex64 {
    match kind {
        ParabolicKind::Long => {
            12.0 * s.powu(3)
                * (s - 1.0).powu(3)
                * (s + 1.0)
                * (3.0 * s - 1.0)
                * (2.0 * s - 1.0)
                * (3.0 * s - 2.0)
                * (s - 2.0)
        }
        ParabolicKind::Short => {
            4.0 * s.powu(2)
                * (s - 1.0).powu(2)
                * (s + 2.0)
                * (s + 1.0)
                * (2.0 * s - 1.0)
                * (s - 2.0)
                * (s - 3.0)
        }
    }
}

/// Declared pole locations and orders.
#[derive(Debug, Clone, serde::Serialize)]
pub struct PoleProfile {
    pub function: FunctionId,
    pub poles: Vec<(f64, i32)>,
}

pub fn pole_profile(kind: ParabolicKind) -> PoleProfile {
    match kind {
        ParabolicKind::Long => PoleProfile {
            function: FunctionId::ZetaLong,
            poles: vec![(-1.0, 1), (0.0, 2), (1.0, 2), (2.0, 1)],
        },
        ParabolicKind::Short => PoleProfile {
            function: FunctionId::ZetaShort,
            poles: vec![(-2.0, 1), (0.0, 1), (1.0, 1), (3.0, 1)],
        },
    }
}

/// Real zeros listed for the entire companions (all simple).
pub fn known_real_zeros(kind: FunctionId) -> &'static [f64] {
    match kind {
        FunctionId::Z1 => &[0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0, 0.5],
        FunctionId::Z2 => &[-1.0, 0.0, 1.0, 2.0, 0.5],
        _ => &[],
    }
}

fn reference(kind: ParabolicKind) -> &'static ZetaExpression {
    static LONG: OnceLock<ZetaExpression> = OnceLock::new();
    static SHORT: OnceLock<ZetaExpression> = OnceLock::new();
    match kind {
        ParabolicKind::Long => LONG.get_or_init(|| reference_zeta(ParabolicKind::Long)),
        ParabolicKind::Short => SHORT.get_or_init(|| reference_zeta(ParabolicKind::Short)),
    }
}

const POLE_DISTANCE: f64 = 1e-4;
/// A single xi term larger than this multiple of the value marks the term
/// sum as ill-conditioned.
const ILL_CONDITION_RATIO: f64 = 1e6;

/// The zeta function itself, with a dual evaluation route.
///
/// Away from conditioning trouble the eight-term xi sum is used directly;
/// when any single term dwarfs the value (which happens near the poles of
/// individual xi factors, e.g. around s = 1/2), the entire chi-form divided
/// by the polynomial prefactor takes over. Where both routes are sound they
/// must agree to 1e-8 relative, else `PrecisionLoss` is reported.
pub fn eval_zeta_g2(kind: ParabolicKind, s: Complex64) -> Result<Complex64> {
    let profile = pole_profile(kind);
    for (p, _) in &profile.poles {
        if (s - re(*p)).norm() < POLE_DISTANCE {
            return Err(EvalError::at_pole(s, format!("declared pole at {p}")).into());
        }
    }
    let zid = match kind {
        ParabolicKind::Long => FunctionId::Z1,
        ParabolicKind::Short => FunctionId::Z2,
    };
    let z = eval_z(zid, s);
    let p = prefactor(kind, s);

    let expr = reference(kind);
    let term_sum = expr.eval(s);
    let max_term = expr.max_term_abs(s);
    let chi_route_ok = p.norm() > 1e-12;

    match (term_sum, max_term) {
        (Ok(v), Ok(m)) => {
            let cond = m / v.norm().max(1e-300);
            let ill = cond > ILL_CONDITION_RATIO;
            if !ill {
                if chi_route_ok {
                    let w = z / p;
                    // cancellation in the term sum costs about cond ulps
                    let tol = (1e-8_f64).max(1e-12 * cond);
                    if (v - w).norm() > tol * v.norm().max(w.norm()) {
                        return Err(EvalError::precision_loss(
                            s,
                            format!("term sum {v} and chi-form {w} disagree"),
                        )
                        .into());
                    }
                }
                Ok(v)
            } else if chi_route_ok {
                Ok(z / p)
            } else {
                Err(EvalError::precision_loss(
                    s,
                    "ill-conditioned term sum at a prefactor zero",
                )
                .into())
            }
        }
        // xi poles inside individual terms: fall back to the chi route
        _ if chi_route_ok => Ok(z / p),
        _ => Err(EvalError::precision_loss(s, "both evaluation routes unavailable").into()),
    }
}

/// Unified dispatch used by scanners and the CLI.
pub fn eval_fn(id: FunctionId, s: Complex64) -> Result<Complex64> {
    match id {
        FunctionId::ZetaLong => eval_zeta_g2(ParabolicKind::Long, s),
        FunctionId::ZetaShort => eval_zeta_g2(ParabolicKind::Short, s),
        FunctionId::Z1 | FunctionId::Z2 => Ok(eval_z(id, s)),
        FunctionId::F1 | FunctionId::F2 | FunctionId::Ft1 | FunctionId::Ft2 => Ok(eval_f(id, s)),
        FunctionId::Xi => Ok(xi(s)?),
    }
}

/// Estimate the pole order (negative = zero multiplicity) and the leading
/// Laurent coefficient at s0, from |f| on two circles and a contour average.
pub fn laurent_probe(id: FunctionId, s0: f64) -> Result<(i32, Complex64)> {
    let r1 = 1e-2;
    let r2 = 1e-3;
    let samples = 64usize;
    let mean_log_abs = |r: f64| -> Result<f64> {
        let mut acc = 0.0;
        for k in 0..samples {
            let th = 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
            let z = re(s0) + Complex64::from_polar(r, th);
            acc += eval_fn(id, z)?.norm().ln();
        }
        Ok(acc / samples as f64)
    };
    let m1 = mean_log_abs(r1)?;
    let m2 = mean_log_abs(r2)?;
    let slope = (m1 - m2) / (r1.ln() - r2.ln()); // = -order
    let order = -slope.round();
    if (slope + order).abs() > 0.1 {
        return Err(EvalError::precision_loss(
            re(s0),
            format!("log-log slope {slope:.4} not near an integer"),
        )
        .into());
    }
    let order = order as i32;
    // leading coefficient: average of f(z) (z - s0)^order on the outer circle
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..samples {
        let th = 2.0 * std::f64::consts::PI * k as f64 / samples as f64;
        let dz = Complex64::from_polar(r1, th);
        acc += eval_fn(id, re(s0) + dz)? * dz.powi(order);
    }
    Ok((order, acc / samples as f64))
}

/// The remainder and ratio families from the zero-free-region analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemainderFamily {
    /// Left-half-plane family: f1 = -(s+1)(s-1)(s-2) chi(s) chi(3s-1) [1 + R1 - R2].
    F1LeftR,
    /// Left-half-plane family: f2 = -(s+2)(s-2)(s-3) chi(s) [1 + R1 - R2].
    F2LeftR,
    /// Right-half-plane family: f1 = (s-1)^2 (3s-2)(As-A+1) chi(s+1) chi(3s) [1 - Q1 - Q2].
    F1RightQ,
    /// Right-half-plane family: f2 = (As+3)(s-1)^2 (s-2) chi(s+2) [1 - Q1 - Q2].
    F2RightQ,
    /// Z1 = (s-1)^2 (3s-2)(As-A+1) chi(s+1) chi(3s) chi(2s) (1 - R1 - R2 - R3 - R4 - R5).
    Z1R,
    /// Z2 = (s-1)^2 (s-2)(As+3) chi(s+2) chi(2s) (1 - R1 - R2 - R3 - R4 - R5).
    Z2R,
    /// |((s-1+r0)/(s-r0)) ((s-1+conj r0)/(s-conj r0))| |chi(2s-1)/chi(2s)|
    /// with r0 the exceptional zero of f1.
    RatioR1,
    /// Same with the f2 zero and the extra |s/(1-s)| factor.
    RatioR2,
    /// The g (index 1) and h (index 2) correction quotients, long case.
    GHLong,
    /// The g and h correction quotients, short case.
    GHShort,
}

/// Exceptional zeros consumed by the ratio families; computed at pipeline
/// startup, never hard-coded.
#[derive(Debug, Clone, Copy, Default)]
pub struct RemainderCtx {
    pub rho0_f1: Option<Complex64>,
    pub rho0_f2: Option<Complex64>,
}

/// Complex division by Smith's algorithm: no intermediate |b|^2, so ratios
/// of values near the top of the double range stay finite.
fn cdiv(a: Complex64, b: Complex64) -> Complex64 {
    if b.re.abs() >= b.im.abs() {
        let r = b.im / b.re;
        let d = b.re + b.im * r;
        Complex64::new((a.re + a.im * r) / d, (a.im - a.re * r) / d)
    } else {
        let r = b.re / b.im;
        let d = b.im + b.re * r;
        Complex64::new((a.re * r + a.im) / d, (a.im * r - a.re) / d)
    }
}

fn chir(num: Complex64, den: Complex64) -> Complex64 {
    cdiv(chi(num), chi(den))
}

/// Evaluate one member of a remainder family, verbatim from its defining
/// display. `AtPole` at the singularities of the specific formula.
pub fn eval_remainder(
    family: RemainderFamily,
    index: u32,
    s: Complex64,
    ctx: &RemainderCtx,
) -> Result<Complex64> {
    let a = a_const();
    let bad_index = || -> crate::error::Error {
        crate::error::Error::InvalidInput(format!("index {index} out of range for {family:?}"))
    };
    let guard = |d: Complex64| -> Result<Complex64> {
        if d.norm() < 1e-12 {
            Err(EvalError::at_pole(s, "remainder formula singularity").into())
        } else {
            Ok(d)
        }
    };
    let v = match family {
        RemainderFamily::F1LeftR => match index {
            1 => 2.0 * (s - 1.0) / guard(s + 1.0)? * chir(3.0 * s, 3.0 * s - 1.0),
            2 => {
                (s - 1.0) * (3.0 * s - 2.0) * (a * s - a + 1.0) / guard((s + 1.0) * (s - 2.0))?
                    * chir(s + 1.0, s)
                    * chir(3.0 * s, 3.0 * s - 1.0)
            }
            _ => return Err(bad_index()),
        },
        RemainderFamily::F2LeftR => match index {
            1 => 2.0 * (s - 1.0) / guard(s + 2.0)? * chir(s + 1.0, s),
            2 => {
                (a * s + 3.0) * (s - 1.0) * (s - 1.0) / guard((s + 2.0) * (s - 3.0))?
                    * chir(s + 2.0, s)
            }
            _ => return Err(bad_index()),
        },
        RemainderFamily::F1RightQ => match index {
            1 => {
                (s + 1.0) * (s - 2.0) / guard((s - 1.0) * (3.0 * s - 2.0) * (a * s - a + 1.0))?
                    * chir(s, s + 1.0)
                    * chir(3.0 * s - 1.0, 3.0 * s)
            }
            2 => 2.0 * (s - 2.0) / guard((3.0 * s - 2.0) * (a * s - a + 1.0))? * chir(s, s + 1.0),
            _ => return Err(bad_index()),
        },
        RemainderFamily::F2RightQ => match index {
            1 => 2.0 * (s - 3.0) / guard((a * s + 3.0) * (s - 1.0))? * chir(s + 1.0, s + 2.0),
            2 => {
                (s + 2.0) * (s - 3.0) / guard((a * s + 3.0) * (s - 1.0) * (s - 1.0))?
                    * chir(s, s + 2.0)
            }
            _ => return Err(bad_index()),
        },
        RemainderFamily::Z1R => {
            let d1 = guard((s - 1.0) * (3.0 * s - 2.0) * (a * s - a + 1.0))?;
            let d2 = guard((s - 1.0) * (s - 1.0) * (3.0 * s - 2.0) * (a * s - a + 1.0))?;
            match index {
                1 => (s + 1.0) * (s - 2.0) / d1 * chir(s, s + 1.0) * chir(3.0 * s - 1.0, 3.0 * s),
                2 => 2.0 * (s - 1.0) * (s - 2.0) / d1 * chir(s, s + 1.0),
                3 => {
                    s * s * (3.0 * s - 1.0) * (a * s - 1.0) / d2
                        * chir(s - 1.0, s + 1.0)
                        * chir(3.0 * s - 2.0, 3.0 * s)
                        * chir(2.0 * s - 1.0, 2.0 * s)
                }
                4 => {
                    s * (s + 1.0) * (s - 2.0) / d2
                        * chir(s, s + 1.0)
                        * chir(3.0 * s - 1.0, 3.0 * s)
                        * chir(2.0 * s - 1.0, 2.0 * s)
                }
                5 => {
                    2.0 * s * s * (s + 1.0) / d2
                        * chir(s, s + 1.0)
                        * chir(3.0 * s - 2.0, 3.0 * s)
                        * chir(2.0 * s - 1.0, 2.0 * s)
                }
                _ => return Err(bad_index()),
            }
        }
        RemainderFamily::Z2R => {
            let d1 = guard((s - 1.0) * (a * s + 3.0))?;
            let d2 = guard((s - 1.0) * (s - 1.0) * (a * s + 3.0))?;
            let d3 = guard((s - 1.0) * (s - 1.0) * (s - 2.0) * (a * s + 3.0))?;
            match index {
                1 => 2.0 * (s - 3.0) / d1 * chir(s + 1.0, s + 2.0),
                2 => (s + 2.0) * (s - 3.0) / d2 * chir(s, s + 2.0),
                3 => {
                    s * s * (s + 1.0) * (a * s - 3.0 - a) / d3
                        * chir(s - 2.0, s + 2.0)
                        * chir(2.0 * s - 1.0, 2.0 * s)
                }
                4 => {
                    2.0 * s * (s + 1.0) * (s + 2.0) / d3
                        * chir(s - 1.0, s + 2.0)
                        * chir(2.0 * s - 1.0, 2.0 * s)
                }
                5 => {
                    (s - 3.0) * (s + 1.0) * (s + 2.0) / d3
                        * chir(s, s + 2.0)
                        * chir(2.0 * s - 1.0, 2.0 * s)
                }
                _ => return Err(bad_index()),
            }
        }
        RemainderFamily::RatioR1 => {
            let rho = ctx.rho0_f1.ok_or_else(|| {
                crate::error::Error::InvalidInput(
                    "ratio family needs the f1 exceptional zero".into(),
                )
            })?;
            let d = guard((s - rho) * (s - rho.conj()))?;
            let m = ((s - 1.0 + rho) * (s - 1.0 + rho.conj()) / d).norm()
                * (chi(2.0 * s - 1.0) / chi(2.0 * s)).norm();
            re(m)
        }
        RemainderFamily::RatioR2 => {
            let rho = ctx.rho0_f2.ok_or_else(|| {
                crate::error::Error::InvalidInput(
                    "ratio family needs the f2 exceptional zero".into(),
                )
            })?;
            let d = guard((1.0 - s) * (s - rho) * (s - rho.conj()))?;
            let m = (s * (s - 1.0 + rho) * (s - 1.0 + rho.conj()) / d).norm()
                * (chi(2.0 * s - 1.0) / chi(2.0 * s)).norm();
            re(m)
        }
        RemainderFamily::GHLong => match index {
            1 => {
                (s - 2.0) * (s + 1.0) / guard(s * (3.0 * s - 1.0) * (a * s - 1.0))?
                    * chir(s, s - 1.0)
                    * chir(3.0 * s - 1.0, 3.0 * s - 2.0)
                    + 2.0 * (s + 1.0) / guard((3.0 * s - 1.0) * (a * s - 1.0))? * chir(s, s - 1.0)
            }
            2 => {
                (s + 1.0) * (s - 2.0) / guard((s - 1.0) * (3.0 * s - 2.0) * (a * s - a + 1.0))?
                    * chir(s, s + 1.0)
                    * chir(3.0 * s - 1.0, 3.0 * s)
                    + 2.0 * (s - 2.0) / guard((3.0 * s - 2.0) * (a * s - a + 1.0))?
                        * chir(s, s + 1.0)
            }
            _ => return Err(bad_index()),
        },
        RemainderFamily::GHShort => match index {
            1 => {
                2.0 * (s + 2.0) / guard(s * (a * s - a - 3.0))? * chir(s - 1.0, s - 2.0)
                    + (s + 2.0) * (s - 3.0) / guard(s * s * (a * s - a - 3.0))? * chir(s, s - 2.0)
            }
            2 => {
                2.0 * (s - 3.0) / guard((s - 1.0) * (a * s + 3.0))? * chir(s + 1.0, s + 2.0)
                    + (s + 2.0) * (s - 3.0) / guard((s - 1.0) * (s - 1.0) * (a * s + 3.0))?
                        * chir(s, s + 2.0)
            }
            _ => return Err(bad_index()),
        },
    };
    Ok(v)
}

/// |R_index| for the left-half-plane families, via log-moduli, so the
/// far-left asymptotic constants can be measured at real parts far beyond
/// the overflow range of the direct chi products.
pub fn left_remainder_log_abs(family: RemainderFamily, index: u32, s: Complex64) -> Result<f64> {
    use crate::special::chi_ln_abs;
    let a = a_const();
    let ln = match (family, index) {
        (RemainderFamily::F1LeftR, 1) => {
            (2.0 * (s - 1.0) / (s + 1.0)).norm().ln() + chi_ln_abs(3.0 * s)
                - chi_ln_abs(3.0 * s - 1.0)
        }
        (RemainderFamily::F1LeftR, 2) => {
            ((s - 1.0) * (3.0 * s - 2.0) * (a * s - a + 1.0) / ((s + 1.0) * (s - 2.0)))
                .norm()
                .ln()
                + chi_ln_abs(s + 1.0)
                + chi_ln_abs(3.0 * s)
                - chi_ln_abs(s)
                - chi_ln_abs(3.0 * s - 1.0)
        }
        (RemainderFamily::F2LeftR, 1) => {
            (2.0 * (s - 1.0) / (s + 2.0)).norm().ln() + chi_ln_abs(s + 1.0) - chi_ln_abs(s)
        }
        (RemainderFamily::F2LeftR, 2) => {
            ((a * s + 3.0) * (s - 1.0) * (s - 1.0) / ((s + 2.0) * (s - 3.0)))
                .norm()
                .ln()
                + chi_ln_abs(s + 2.0)
                - chi_ln_abs(s)
        }
        _ => {
            return Err(crate::error::Error::InvalidInput(format!(
                "log-modulus path covers the left families only, got {family:?} index {index}"
            )))
        }
    };
    Ok(ln.exp())
}

/// Decomposition prefactors, so tests can assert the bracket identities.
pub fn bracket_prefactor(family: RemainderFamily, s: Complex64) -> Complex64 {
    let a = a_const();
    match family {
        RemainderFamily::F1LeftR => {
            -(s + 1.0) * (s - 1.0) * (s - 2.0) * chi(s) * chi(3.0 * s - 1.0)
        }
        RemainderFamily::F2LeftR => -(s + 2.0) * (s - 2.0) * (s - 3.0) * chi(s),
        RemainderFamily::F1RightQ => {
            (s - 1.0) * (s - 1.0) * (3.0 * s - 2.0) * (a * s - a + 1.0) * chi(s + 1.0)
                * chi(3.0 * s)
        }
        RemainderFamily::F2RightQ => {
            (a * s + 3.0) * (s - 1.0) * (s - 1.0) * (s - 2.0) * chi(s + 2.0)
        }
        RemainderFamily::Z1R => {
            (s - 1.0) * (s - 1.0) * (3.0 * s - 2.0) * (a * s - a + 1.0)
                * chi(s + 1.0)
                * chi(3.0 * s)
                * chi(2.0 * s)
        }
        RemainderFamily::Z2R => {
            (s - 1.0) * (s - 1.0) * (s - 2.0) * (a * s + 3.0) * chi(s + 2.0) * chi(2.0 * s)
        }
        _ => panic!("no bracket prefactor for {family:?}"),
    }
}

/// Report from the dual-route consistency check Z_i = p_i * zeta_i.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ConsistencyReport {
    pub s: (f64, f64),
    pub rel_long: f64,
    pub rel_short: f64,
    pub pass: bool,
}

/// Cross-validate the chi-form of Z_i against the prefactor times the
/// eight-term sum at a point away from prefactor zeros and xi poles.
pub fn consistency_check(s: Complex64) -> Result<ConsistencyReport> {
    let mut rels = [0.0; 2];
    for (i, kind) in [ParabolicKind::Long, ParabolicKind::Short]
        .into_iter()
        .enumerate()
    {
        let zid = if i == 0 { FunctionId::Z1 } else { FunctionId::Z2 };
        let z = eval_z(zid, s);
        let term = reference(kind).eval(s)?;
        let p = prefactor(kind, s);
        rels[i] = (z - p * term).norm() / z.norm().max(1e-300);
    }
    Ok(ConsistencyReport {
        s: (s.re, s.im),
        rel_long: rels[0],
        rel_short: rels[1],
        pass: rels[0] <= 1e-9 && rels[1] <= 1e-9,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Reference values computed with mpmath at 50 digits.

    #[test]
    fn z_spot_values() {
        let v = eval_z(FunctionId::Z1, cx(0.7, 3.0));
        let want = cx(-0.17194291018430298842, 1.7234130303692582725);
        assert!((v - want).norm() < 1e-12 * want.norm().max(1.0));

        let v = eval_z(FunctionId::Z2, cx(0.7, 3.0));
        let want = cx(0.84851145222876125576, 5.2757280506025412544);
        assert!((v - want).norm() < 1e-12 * want.norm());

        let v = eval_z(FunctionId::Z1, cx(20.0, 5.0));
        let want = cx(1.5117781798883375876e37, -1.338695629601552228e35);
        assert!((v - want).norm() < 1e-11 * want.norm());
    }

    #[test]
    fn z1_known_zeros_are_small() {
        for &x in known_real_zeros(FunctionId::Z1) {
            let v = eval_z(FunctionId::Z1, cx(x, 0.0));
            // local scale: max |Z1| on a radius-0.1 circle
            let mut scale = 0f64;
            for k in 0..16 {
                let th = 2.0 * std::f64::consts::PI * k as f64 / 16.0;
                scale = scale.max(
                    eval_z(FunctionId::Z1, cx(x, 0.0) + Complex64::from_polar(0.1, th)).norm(),
                );
            }
            assert!(
                v.norm() <= 1e-8 * scale,
                "Z1({x}) = {v} too large vs scale {scale}"
            );
        }
    }

    #[test]
    fn z2_known_zeros_are_small() {
        for &x in known_real_zeros(FunctionId::Z2) {
            let v = eval_z(FunctionId::Z2, cx(x, 0.0));
            let mut scale = 0f64;
            for k in 0..16 {
                let th = 2.0 * std::f64::consts::PI * k as f64 / 16.0;
                scale = scale.max(
                    eval_z(FunctionId::Z2, cx(x, 0.0) + Complex64::from_polar(0.1, th)).norm(),
                );
            }
            assert!(
                v.norm() <= 1e-8 * scale,
                "Z2({x}) = {v} too large vs scale {scale}"
            );
        }
    }

    #[test]
    fn f_values_at_origin() {
        // f1(1) = 0 by the explicit factor
        assert_eq!(eval_f(FunctionId::F1, cx(1.0, 0.0)).norm(), 0.0);
        // f2(0) = -2 pi exactly
        let v = eval_f(FunctionId::F2, cx(0.0, 0.0));
        assert!((v.re + 2.0 * std::f64::consts::PI).abs() < 1e-12 && v.im == 0.0);
        // f1'(0) by central difference
        let h = 1e-5;
        let d =
            (eval_f(FunctionId::F1, cx(h, 0.0)) - eval_f(FunctionId::F1, cx(-h, 0.0))) / (2.0 * h);
        assert!(
            (d.re - -2.1767616898751290058).abs() < 1e-3,
            "f1'(0) = {}",
            d.re
        );
    }

    #[test]
    fn z_antisymmetry_and_reality_grid() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..200 {
            let s = cx(rng.gen_range(-8.0..9.0), rng.gen_range(-40.0..40.0));
            for id in [FunctionId::Z1, FunctionId::Z2] {
                let v = eval_z(id, s);
                let w = eval_z(id, 1.0 - s);
                assert!(
                    (v + w).norm() <= 1e-9 * v.norm().max(1e-300),
                    "antisymmetry fails for {id} at {s}"
                );
                let c = eval_z(id, s.conj());
                assert!((c - v.conj()).norm() <= 1e-9 * v.norm());
            }
        }
        // purely imaginary on the critical line
        for k in 1..40 {
            let t = 0.37 * k as f64;
            for id in [FunctionId::Z1, FunctionId::Z2] {
                let v = eval_z(id, cx(0.5, t));
                assert!(v.re.abs() <= 1e-9 * v.norm().max(1e-300));
            }
        }
    }

    #[test]
    fn zeta_g2_functional_equation() {
        let s = cx(2.3, 4.0);
        for kind in [ParabolicKind::Long, ParabolicKind::Short] {
            let a = eval_zeta_g2(kind, s).unwrap();
            let b = eval_zeta_g2(kind, 1.0 - s).unwrap();
            assert!((a - b).norm() <= 1e-9 * a.norm(), "FE fails for {kind:?}");
        }
    }

    #[test]
    fn zeta_g2_spot_value() {
        let v = eval_zeta_g2(ParabolicKind::Long, cx(1.7, 3.0)).unwrap();
        let want = cx(4.5122138972942591098e-9, 4.278840801923139561e-8);
        assert!((v - want).norm() < 1e-12 * want.norm().max(1e-7), "got {v}");

        let v = eval_zeta_g2(ParabolicKind::Short, cx(1.7, 3.0)).unwrap();
        let want = cx(-7.4679602693754890542e-6, 1.3502695716880051984e-5);
        assert!((v - want).norm() < 1e-11 * want.norm());
    }

    #[test]
    fn zeta_g2_at_pole_errors() {
        assert!(eval_zeta_g2(ParabolicKind::Long, cx(2.0, 0.0)).is_err());
        assert!(eval_zeta_g2(ParabolicKind::Short, cx(3.0, 0.0)).is_err());
    }

    #[test]
    fn zeta_g2_near_critical_point_uses_chi_route() {
        // individual terms blow up near s = 1/2 but the value stays finite
        let v = eval_zeta_g2(ParabolicKind::Long, cx(0.5, 0.2)).unwrap();
        assert!(v.norm().is_finite());
        let w = eval_zeta_g2(ParabolicKind::Long, cx(0.500001, 0.2)).unwrap();
        assert!((v - w).norm() < 1e-3 * v.norm());
    }

    #[test]
    fn pole_orders_probe() {
        let (o, lead) = laurent_probe(FunctionId::ZetaLong, 0.0).unwrap();
        assert_eq!(o, 2);
        assert!(lead.norm() > 0.0);
        let (o, _) = laurent_probe(FunctionId::ZetaLong, 2.0).unwrap();
        assert_eq!(o, 1);
        let (o, _) = laurent_probe(FunctionId::ZetaShort, 1.0).unwrap();
        assert_eq!(o, 1);
        // a simple zero reports order -1
        let (o, _) = laurent_probe(FunctionId::Z1, 1.0).unwrap();
        assert_eq!(o, -1);
    }

    #[test]
    fn remainder_bracket_identities() {
        // each decomposition must reassemble the function it came from
        let ctx = RemainderCtx::default();
        let pts = [cx(-5.0, 3.0), cx(-12.0, 7.5), cx(-30.0, 2.0)];
        for &s in &pts {
            let r1 = eval_remainder(RemainderFamily::F1LeftR, 1, s, &ctx).unwrap();
            let r2 = eval_remainder(RemainderFamily::F1LeftR, 2, s, &ctx).unwrap();
            let lhs = eval_f(FunctionId::F1, s);
            let rhs = bracket_prefactor(RemainderFamily::F1LeftR, s) * (1.0 + r1 - r2);
            assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm(), "f1 left at {s}");

            let r1 = eval_remainder(RemainderFamily::F2LeftR, 1, s, &ctx).unwrap();
            let r2 = eval_remainder(RemainderFamily::F2LeftR, 2, s, &ctx).unwrap();
            let lhs = eval_f(FunctionId::F2, s);
            let rhs = bracket_prefactor(RemainderFamily::F2LeftR, s) * (1.0 + r1 - r2);
            assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm(), "f2 left at {s}");
        }
        let pts = [cx(3.0, 2.0), cx(8.0, -4.0), cx(25.0, 10.0)];
        for &s in &pts {
            let q1 = eval_remainder(RemainderFamily::F1RightQ, 1, s, &ctx).unwrap();
            let q2 = eval_remainder(RemainderFamily::F1RightQ, 2, s, &ctx).unwrap();
            let lhs = eval_f(FunctionId::F1, s);
            let rhs = bracket_prefactor(RemainderFamily::F1RightQ, s) * (1.0 - q1 - q2);
            assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm(), "f1 right at {s}");

            let q1 = eval_remainder(RemainderFamily::F2RightQ, 1, s, &ctx).unwrap();
            let q2 = eval_remainder(RemainderFamily::F2RightQ, 2, s, &ctx).unwrap();
            let lhs = eval_f(FunctionId::F2, s);
            let rhs = bracket_prefactor(RemainderFamily::F2RightQ, s) * (1.0 - q1 - q2);
            assert!((lhs - rhs).norm() <= 1e-10 * lhs.norm(), "f2 right at {s}");

            let r: Vec<Complex64> = (1..=5)
                .map(|i| eval_remainder(RemainderFamily::Z1R, i, s, &ctx).unwrap())
                .collect();
            let lhs = eval_z(FunctionId::Z1, s);
            let rhs = bracket_prefactor(RemainderFamily::Z1R, s)
                * (1.0 - r[0] - r[1] - r[2] - r[3] - r[4]);
            assert!((lhs - rhs).norm() <= 1e-9 * lhs.norm(), "Z1 bracket at {s}");

            let r: Vec<Complex64> = (1..=5)
                .map(|i| eval_remainder(RemainderFamily::Z2R, i, s, &ctx).unwrap())
                .collect();
            let lhs = eval_z(FunctionId::Z2, s);
            let rhs = bracket_prefactor(RemainderFamily::Z2R, s)
                * (1.0 - r[0] - r[1] - r[2] - r[3] - r[4]);
            assert!((lhs - rhs).norm() <= 1e-9 * lhs.norm(), "Z2 bracket at {s}");
        }
    }

    #[test]
    fn z1_remainders_small_far_right() {
        let ctx = RemainderCtx::default();
        let s = cx(20.0, 5.0);
        let bounds = [0.1, 0.3, 0.05, 0.1, 0.1];
        for i in 1..=5u32 {
            let r = eval_remainder(RemainderFamily::Z1R, i, s, &ctx).unwrap();
            assert!(
                r.norm() <= bounds[(i - 1) as usize],
                "R{i} = {} exceeds bound",
                r.norm()
            );
        }
    }

    #[test]
    fn left_log_modulus_matches_direct_route() {
        // where the direct products are still finite the two routes agree
        for s in [cx(-8.0, 3.0), cx(-40.0, 10.0), cx(-90.0, 0.0)] {
            for (family, idx) in [
                (RemainderFamily::F1LeftR, 1),
                (RemainderFamily::F1LeftR, 2),
                (RemainderFamily::F2LeftR, 1),
                (RemainderFamily::F2LeftR, 2),
            ] {
                let direct = eval_remainder(family, idx, s, &RemainderCtx::default())
                    .unwrap()
                    .norm();
                let logged = left_remainder_log_abs(family, idx, s).unwrap();
                assert!(
                    (direct - logged).abs() <= 1e-10 * direct,
                    "{family:?} R{idx} at {s}: {direct} vs {logged}"
                );
            }
        }
        // and the log route keeps working far beyond overflow
        let v = left_remainder_log_abs(RemainderFamily::F1LeftR, 2, cx(-800.0, 0.0)).unwrap();
        assert!(v.is_finite() && v > 0.4 && v < 0.6);
    }

    #[test]
    fn ratio_families_need_context() {
        let ctx = RemainderCtx::default();
        assert!(eval_remainder(RemainderFamily::RatioR1, 1, cx(3.0, 30.0), &ctx).is_err());
        let ctx = RemainderCtx {
            rho0_f1: Some(cx(0.9, 2.09)),
            rho0_f2: Some(cx(1.17, 3.43)),
        };
        let r = eval_remainder(RemainderFamily::RatioR1, 1, cx(3.0, 30.0), &ctx).unwrap();
        assert!(r.re < 1.0 && r.im == 0.0);
        let r = eval_remainder(RemainderFamily::RatioR2, 1, cx(3.0, 40.0), &ctx).unwrap();
        assert!(r.re < 1.0);
    }

    #[test]
    fn consistency_check_points() {
        for s in [cx(1.7, 3.0), cx(0.5, 10.0), cx(-2.3, 6.0)] {
            let rep = consistency_check(s).unwrap();
            assert!(rep.pass, "consistency fails at {s}: {rep:?}");
        }
    }
}
