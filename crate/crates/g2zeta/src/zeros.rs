//! Zero counting by the argument principle over rectangles, critical-line
//! scanning and refinement, the xi zero table, and the window-count check on
//! consecutive xi zeros.
//!
//! Winding numbers are computed by phase continuation: walk the contour,
//! subdividing until each step turns the phase by less than pi/2, and round
//! the accumulated turn count. No derivative of the function is needed, and
//! the distance of the raw turn count from the nearest integer is reported as
//! the confidence of the count.

use crate::error::{Error, EvalError, Result};
use crate::exec;
use crate::special;
use crate::zetas::{eval_fn, eval_z, FunctionId};
use num_complex::Complex64;
use serde::Serialize;

/// Axis-aligned rectangle in the complex plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rectangle {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Rectangle {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        if !(re_min < re_max && im_min < im_max) {
            return Err(Error::InvalidInput(format!(
                "degenerate rectangle [{re_min},{re_max}]x[{im_min},{im_max}]"
            )));
        }
        Ok(Rectangle {
            re_min,
            re_max,
            im_min,
            im_max,
        })
    }

    pub fn perimeter(&self) -> f64 {
        2.0 * ((self.re_max - self.re_min) + (self.im_max - self.im_min))
    }

    pub fn center(&self) -> Complex64 {
        Complex64::new(
            0.5 * (self.re_min + self.re_max),
            0.5 * (self.im_min + self.im_max),
        )
    }

    pub fn contains(&self, z: Complex64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }

    /// Multiplicative dilation about the center.
    pub fn dilated(&self, factor: f64) -> Rectangle {
        let c = self.center();
        Rectangle {
            re_min: c.re + (self.re_min - c.re) * factor,
            re_max: c.re + (self.re_max - c.re) * factor,
            im_min: c.im + (self.im_min - c.im) * factor,
            im_max: c.im + (self.im_max - c.im) * factor,
        }
    }

    /// Counterclockwise boundary point at arc-length fraction t in [0, 1).
    fn boundary_point(&self, t: f64) -> Complex64 {
        let w = self.re_max - self.re_min;
        let h = self.im_max - self.im_min;
        let p = self.perimeter();
        let d = t * p;
        if d < w {
            Complex64::new(self.re_min + d, self.im_min)
        } else if d < w + h {
            Complex64::new(self.re_max, self.im_min + (d - w))
        } else if d < 2.0 * w + h {
            Complex64::new(self.re_max - (d - w - h), self.im_max)
        } else {
            Complex64::new(self.re_min, self.im_max - (d - 2.0 * w - h))
        }
    }
}

/// Outcome of a winding-number computation.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WindingResult {
    pub count: i64,
    pub raw_phase_turns: f64,
    /// |raw - count|; accepted results have confidence < 0.25.
    pub confidence: f64,
    /// Smallest |f| seen on the contour.
    pub edge_min_abs: f64,
    /// Number of function evaluations spent.
    pub evals: usize,
}

/// How a zero was pinned down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RefineMethod {
    Bisect,
    Secant,
    Newton,
}

/// A located zero with its certificate data.
#[derive(Debug, Clone, Serialize)]
pub struct ZeroRecord {
    pub function: FunctionId,
    pub location: (f64, f64),
    pub residual: f64,
    pub method: RefineMethod,
    pub tol: f64,
}

impl ZeroRecord {
    pub fn location_c(&self) -> Complex64 {
        Complex64::new(self.location.0, self.location.1)
    }
}

/// Ascending positive ordinates of critical-line xi zeros up to `height`.
#[derive(Debug, Clone, Serialize, serde::Deserialize)]
pub struct XiZeroTable {
    pub height: f64,
    pub ordinates: Vec<f64>,
}

const MAX_DILATIONS: u32 = 5;
const DILATION_FACTOR: f64 = 1.0 + 1e-3;
const MAX_REFINE_PASSES: u32 = 48;
const INITIAL_CONTOUR_POINTS: usize = 2000;

/// Winding number of `f` around the rectangle boundary.
///
/// When a zero sits on (or hopelessly close to) the contour, the rectangle is
/// dilated by 1 + 1e-3 about its center and the walk retried, up to five
/// times; `ContourNearZero` afterwards. A raw phase further than 0.25 turns
/// from an integer reports `NonIntegerWinding`.
pub fn winding_count(f: FunctionId, rect: Rectangle) -> Result<WindingResult> {
    let mut r = rect;
    let mut last_err = None;
    for _ in 0..=MAX_DILATIONS {
        match walk_contour(f, r) {
            Ok(w) => return Ok(w),
            Err(Error::ContourNearZero { attempts, min_abs }) => {
                last_err = Some(Error::ContourNearZero { attempts, min_abs });
                r = r.dilated(DILATION_FACTOR);
            }
            Err(e) => return Err(e),
        }
    }
    Err(match last_err {
        Some(Error::ContourNearZero { min_abs, .. }) => Error::ContourNearZero {
            attempts: MAX_DILATIONS,
            min_abs,
        },
        _ => unreachable!(),
    })
}

fn walk_contour(f: FunctionId, rect: Rectangle) -> Result<WindingResult> {
    // Evaluate the initial uniform sampling in parallel; refinement is then
    // driven by the phase-step criterion.
    let n0 = INITIAL_CONTOUR_POINTS;
    let ts: Vec<f64> = (0..n0).map(|k| k as f64 / n0 as f64).collect();
    let mut pts: Vec<(f64, Complex64)> = Vec::with_capacity(n0 + 1);
    {
        let vals = exec::map(&ts, |&t| eval_fn(f, rect.boundary_point(t)));
        for (t, v) in ts.iter().zip(vals) {
            pts.push((*t, v?));
        }
    }
    pts.push((1.0, pts[0].1)); // close the loop

    let near_zero = |min_abs: f64| Error::ContourNearZero {
        attempts: 0,
        min_abs,
    };
    let mut evals = n0;
    for (_, v) in &pts {
        if !v.is_finite() || v.norm() == 0.0 {
            return Err(near_zero(0.0));
        }
    }

    // Per-step criteria: phase turn below pi/2 and magnitude ratio within
    // [0.2, 5]; both guard against hopping over a 2*pi jump near a zero just
    // outside the contour.
    let bad = |a: Complex64, b: Complex64| -> bool {
        let dphi = (b / a).arg().abs();
        let ratio = b.norm() / a.norm();
        dphi >= std::f64::consts::FRAC_PI_2 || !(0.2..=5.0).contains(&ratio)
    };

    for pass in 0..=MAX_REFINE_PASSES {
        let mids: Vec<f64> = pts
            .windows(2)
            .filter(|w| bad(w[0].1, w[1].1))
            .map(|w| 0.5 * (w[0].0 + w[1].0))
            .collect();
        if mids.is_empty() {
            break;
        }
        if pass == MAX_REFINE_PASSES {
            let min_abs = pts.iter().map(|(_, v)| v.norm()).fold(f64::INFINITY, f64::min);
            return Err(near_zero(min_abs));
        }
        evals += mids.len();
        let vals = exec::map(&mids, |&t| eval_fn(f, rect.boundary_point(t % 1.0)));
        let mut new_pts = Vec::with_capacity(mids.len());
        for (t, v) in mids.iter().zip(vals) {
            let v = v?;
            if !v.is_finite() || v.norm() == 0.0 {
                return Err(near_zero(0.0));
            }
            new_pts.push((*t, v));
        }
        pts.extend(new_pts);
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    }

    let mut total = 0.0;
    let mut min_abs = f64::INFINITY;
    for w in pts.windows(2) {
        total += (w[1].1 / w[0].1).arg();
        min_abs = min_abs.min(w[0].1.norm());
    }
    let raw = total / (2.0 * std::f64::consts::PI);
    let count = raw.round();
    let confidence = (raw - count).abs();
    if confidence >= 0.25 {
        return Err(Error::NonIntegerWinding { raw });
    }
    Ok(WindingResult {
        count: count as i64,
        raw_phase_turns: raw,
        confidence,
        edge_min_abs: min_abs,
        evals,
    })
}

/// The real-valued restriction scanned along the critical line: Im for the
/// entire companions (purely imaginary there), the real value for xi.
fn line_restriction(f: FunctionId, t: f64) -> Result<f64> {
    match f {
        FunctionId::Z1 | FunctionId::Z2 => {
            let v = eval_z(f, Complex64::new(0.5, t));
            if v.re.abs() > 1e-9 * v.norm() + 1e-300 {
                return Err(EvalError::precision_loss(
                    Complex64::new(0.5, t),
                    format!("Re {f}(1/2+it) = {:e} not negligible", v.re),
                )
                .into());
            }
            Ok(v.im)
        }
        FunctionId::Xi => Ok(special::xi_critical_real(t)?),
        other => Err(Error::InvalidInput(format!(
            "line scan supports Z1, Z2, xi; got {other}"
        ))),
    }
}

/// Sign-change brackets of the critical-line restriction on [t0, t1].
pub fn line_scan(f: FunctionId, t0: f64, t1: f64, step: f64) -> Result<Vec<(f64, f64)>> {
    if !(step > 0.0 && step <= 0.05) {
        return Err(Error::InvalidInput(format!(
            "scan step {step} outside (0, 0.05]"
        )));
    }
    if !(t1 > t0) {
        return Err(Error::InvalidInput("empty scan interval".into()));
    }
    let n = ((t1 - t0) / step).ceil() as usize + 1;
    let ts: Vec<f64> = (0..n).map(|k| (t0 + k as f64 * step).min(t1)).collect();
    let vals = exec::map(&ts, |&t| line_restriction(f, t));
    let mut out = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for (t, v) in ts.iter().zip(vals) {
        let v = v?;
        if let Some((pt, pv)) = prev {
            if pv != 0.0 && v != 0.0 && pv.signum() != v.signum() {
                out.push((pt, *t));
            }
        }
        prev = Some((*t, v));
    }
    Ok(out)
}

/// Where refinement should start.
#[derive(Debug, Clone, Copy)]
pub enum RefineStart {
    /// A sign-change bracket of the critical-line restriction.
    Bracket(f64, f64),
    /// A complex seed near an isolated zero.
    Seed(Complex64),
}

const REFINE_TOL: f64 = 1e-8;
const MAX_NEWTON_ITER: u32 = 200;

/// Largest |f| on a radius-0.1 circle around z: the local scale a residual
/// is judged against.
pub fn local_scale(f: FunctionId, z: Complex64) -> Result<f64> {
    let mut m = 0f64;
    for k in 0..16 {
        let th = 2.0 * std::f64::consts::PI * k as f64 / 16.0;
        m = m.max(eval_fn(f, z + Complex64::from_polar(0.1, th))?.norm());
    }
    Ok(m)
}

/// Refine a zero from a bracket (bisection + one secant polish) or a seed
/// (damped Newton with a numeric derivative).
pub fn refine(f: FunctionId, start: RefineStart) -> Result<ZeroRecord> {
    match start {
        RefineStart::Bracket(a, b) => {
            let (mut a, mut b) = (a, b);
            let mut fa = line_restriction(f, a)?;
            let fb = line_restriction(f, b)?;
            if fa == 0.0 {
                b = a;
            } else if fb != 0.0 && fa.signum() == fb.signum() {
                return Err(Error::InvalidInput(format!(
                    "bracket [{a}, {b}] has no sign change"
                )));
            }
            let mut iterations = 0;
            while b - a > 1e-10 && iterations < 200 {
                let m = 0.5 * (a + b);
                let fm = line_restriction(f, m)?;
                if fm == 0.0 {
                    a = m;
                    b = m;
                    break;
                }
                if fm.signum() == fa.signum() {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
                iterations += 1;
            }
            // one secant polish
            let (ga, gb) = (line_restriction(f, a)?, line_restriction(f, b)?);
            let t = if (gb - ga).abs() > 0.0 && b > a {
                let t = a - ga * (b - a) / (gb - ga);
                if t.is_finite() && t >= a - 1e-9 && t <= b + 1e-9 {
                    t
                } else {
                    0.5 * (a + b)
                }
            } else {
                0.5 * (a + b)
            };
            let loc = Complex64::new(0.5, t);
            finish_record(f, loc, RefineMethod::Bisect)
        }
        RefineStart::Seed(seed) => {
            let mut z = seed;
            let mut fz = eval_fn(f, z)?;
            let mut iterations = 0u32;
            loop {
                if iterations >= MAX_NEWTON_ITER {
                    return Err(Error::NoConvergence {
                        iterations,
                        last_abs: fz.norm(),
                    });
                }
                iterations += 1;
                let h = 1e-6 * (1.0 + z.norm());
                let d = (eval_fn(f, z + h)? - eval_fn(f, z - h)?) / (2.0 * h);
                if d.norm() == 0.0 {
                    return Err(Error::NoConvergence {
                        iterations,
                        last_abs: fz.norm(),
                    });
                }
                let mut step = fz / d;
                // damping: halve the step until |f| decreases
                let mut improved = false;
                for _ in 0..30 {
                    let cand = z - step;
                    let fc = eval_fn(f, cand)?;
                    if fc.norm() < fz.norm() {
                        z = cand;
                        fz = fc;
                        improved = true;
                        break;
                    }
                    step *= 0.5;
                }
                let done = step.norm() < 1e-12 * (1.0 + z.norm());
                if !improved || done {
                    break;
                }
            }
            finish_record(f, z, RefineMethod::Newton)
        }
    }
}

fn finish_record(f: FunctionId, loc: Complex64, method: RefineMethod) -> Result<ZeroRecord> {
    let residual = eval_fn(f, loc)?.norm();
    let scale = local_scale(f, loc)?;
    if residual > REFINE_TOL * scale {
        return Err(Error::NoConvergence {
            iterations: MAX_NEWTON_ITER,
            last_abs: residual,
        });
    }
    Ok(ZeroRecord {
        function: f,
        location: (loc.re, loc.im),
        residual,
        method,
        tol: REFINE_TOL,
    })
}

/// Locate all zeros of `f` inside a rectangle without prior seeds: sample
/// |f| on a grid, refine every strict local minimum, and deduplicate.
pub fn locate_zeros_in_rect(f: FunctionId, rect: Rectangle, grid_step: f64) -> Result<Vec<ZeroRecord>> {
    let nx = ((rect.re_max - rect.re_min) / grid_step).ceil() as usize + 1;
    let ny = ((rect.im_max - rect.im_min) / grid_step).ceil() as usize + 1;
    let pts: Vec<Complex64> = (0..ny)
        .flat_map(|j| {
            (0..nx).map(move |i| {
                Complex64::new(
                    rect.re_min + i as f64 * grid_step,
                    rect.im_min + j as f64 * grid_step,
                )
            })
        })
        .collect();
    let vals = exec::map(&pts, |&z| eval_fn(f, z).map(|v| v.norm()));
    let mut mags = Vec::with_capacity(pts.len());
    for v in vals {
        mags.push(v?);
    }
    let at = |i: usize, j: usize| mags[j * nx + i];
    let mut records: Vec<ZeroRecord> = Vec::new();
    for j in 1..ny.saturating_sub(1) {
        for i in 1..nx.saturating_sub(1) {
            let c = at(i, j);
            let neighbors = [
                at(i - 1, j),
                at(i + 1, j),
                at(i, j - 1),
                at(i, j + 1),
            ];
            if neighbors.iter().all(|&n| c <= n) {
                // plausible basin; only keep it if Newton lands inside
                if let Ok(rec) = refine(f, RefineStart::Seed(pts[j * nx + i])) {
                    let loc = rec.location_c();
                    if rect.contains(loc)
                        && !records
                            .iter()
                            .any(|r| (r.location_c() - loc).norm() < 1e-6)
                    {
                        records.push(rec);
                    }
                }
            }
        }
    }
    records.sort_by(|a, b| {
        (a.location.0, a.location.1).partial_cmp(&(b.location.0, b.location.1)).unwrap()
    });
    Ok(records)
}

/// All critical-line xi zero ordinates in (0, T], by scanning at step 0.05
/// and refining each bracket.
pub fn xi_zeros_up_to(t_max: f64) -> Result<XiZeroTable> {
    if !(t_max > 0.0) {
        return Err(Error::InvalidInput("height must be positive".into()));
    }
    if t_max > 200.0 {
        return Err(Error::InvalidInput(
            "xi zero table is tuned for heights up to 200".into(),
        ));
    }
    let step = 0.05;
    let brackets = line_scan(FunctionId::Xi, step, t_max, step)?;
    let mut ordinates = Vec::with_capacity(brackets.len());
    for (a, b) in brackets {
        let rec = refine(FunctionId::Xi, RefineStart::Bracket(a, b))?;
        ordinates.push(rec.location.1);
    }
    ordinates.sort_by(|a, b| a.total_cmp(b));
    ordinates.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    Ok(XiZeroTable {
        height: t_max,
        ordinates,
    })
}

/// Result of the window-count check.
#[derive(Debug, Clone, Serialize)]
pub struct GapCheckReport {
    pub t_max: f64,
    pub window: f64,
    pub min_count: usize,
    pub argmin_t: f64,
    pub pass: bool,
}

/// For t on a step-0.5 grid over [0, T], count table ordinates (with their
/// mirror images) within |t - gamma| <= 22; passes when the minimum count
/// is at least three.
pub fn lagarias_gap_check(table: &XiZeroTable, t_max: f64) -> Result<GapCheckReport> {
    const WINDOW: f64 = 22.0;
    if table.ordinates.is_empty() {
        return Err(Error::InvalidInput("xi zero table is empty".into()));
    }
    if table.height < t_max + WINDOW {
        return Err(Error::InvalidInput(format!(
            "table height {} insufficient for T = {t_max} (need {})",
            table.height,
            t_max + WINDOW
        )));
    }
    let mut min_count = usize::MAX;
    let mut argmin_t = 0.0;
    let mut t = 0.0;
    while t <= t_max + 1e-12 {
        let count = table
            .ordinates
            .iter()
            .flat_map(|&g| [g, -g])
            .filter(|g| (t - g).abs() <= WINDOW)
            .count();
        if count < min_count {
            min_count = count;
            argmin_t = t;
        }
        t += 0.5;
    }
    Ok(GapCheckReport {
        t_max,
        window: WINDOW,
        min_count,
        argmin_t,
        pass: min_count >= 3,
    })
}

/// Grid specification for the modulus-ratio scan.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridSpec {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub n_re: usize,
    pub n_im: usize,
}

impl GridSpec {
    pub fn default_ratio_grid() -> Self {
        GridSpec {
            re_min: 0.51,
            re_max: 20.0,
            im_min: -50.0,
            im_max: 50.0,
            n_re: 200,
            n_im: 200,
        }
    }

    pub fn points(&self) -> Vec<Complex64> {
        let mut pts = Vec::with_capacity(self.n_re * self.n_im);
        for j in 0..self.n_im {
            for i in 0..self.n_re {
                let x = if self.n_re == 1 {
                    self.re_min
                } else {
                    self.re_min + (self.re_max - self.re_min) * i as f64 / (self.n_re - 1) as f64
                };
                let y = if self.n_im == 1 {
                    self.im_min
                } else {
                    self.im_min + (self.im_max - self.im_min) * j as f64 / (self.n_im - 1) as f64
                };
                pts.push(Complex64::new(x, y));
            }
        }
        pts
    }
}

/// Result of the strict-inequality scan of |chi(2s-1)/chi(2s)|.
#[derive(Debug, Clone, Serialize)]
pub struct RatioScanReport {
    pub max: f64,
    pub argmax: (f64, f64),
    pub pass: bool,
}

/// Maximum of |chi(2s-1)/chi(2s)| over the grid; passes iff strictly
/// below one everywhere.
pub fn ratio_bound_scan(grid: &GridSpec) -> Result<RatioScanReport> {
    if grid.re_min <= 0.5 {
        return Err(Error::InvalidInput(
            "ratio grid must lie strictly right of Re(s) = 1/2".into(),
        ));
    }
    let pts = grid.points();
    let vals = exec::map(&pts, |&s| {
        (special::chi(2.0 * s - 1.0) / special::chi(2.0 * s)).norm()
    });
    let idx = exec::argmax(&vals).expect("non-empty grid");
    Ok(RatioScanReport {
        max: vals[idx],
        argmax: (pts[idx].re, pts[idx].im),
        pass: vals[idx] < 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rectangle_validation() {
        assert!(Rectangle::new(0.0, 1.0, 0.0, 1.0).is_ok());
        assert!(Rectangle::new(1.0, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn winding_counts_f1_window() {
        let rect = Rectangle::new(0.5, 5.0, -10.0, 10.0).unwrap();
        let w = winding_count(FunctionId::F1, rect).unwrap();
        assert_eq!(w.count, 3, "raw = {}", w.raw_phase_turns);
        assert!(w.confidence < 0.25);
    }

    #[test]
    fn winding_counts_f2_window() {
        let rect = Rectangle::new(0.5, 5.0, -10.0, 10.0).unwrap();
        let w = winding_count(FunctionId::F2, rect).unwrap();
        assert_eq!(w.count, 3);
    }

    #[test]
    fn winding_isolates_z1_simple_zero() {
        let rect = Rectangle::new(0.9, 1.1, -0.1, 0.1).unwrap();
        let w = winding_count(FunctionId::Z1, rect).unwrap();
        assert_eq!(w.count, 1);
    }

    #[test]
    fn winding_additivity_split() {
        // split at Im = 0.5, clear of the three zeros in the window
        let whole = winding_count(
            FunctionId::F1,
            Rectangle::new(0.5, 5.0, -10.0, 10.0).unwrap(),
        )
        .unwrap();
        let lower = winding_count(
            FunctionId::F1,
            Rectangle::new(0.5, 5.0, -10.0, 0.5).unwrap(),
        )
        .unwrap();
        let upper = winding_count(
            FunctionId::F1,
            Rectangle::new(0.5, 5.0, 0.5, 10.0).unwrap(),
        )
        .unwrap();
        assert_eq!(whole.count, lower.count + upper.count);
    }

    #[test]
    fn line_scan_finds_first_xi_zero() {
        let brackets = line_scan(FunctionId::Xi, 14.0, 14.3, 0.01).unwrap();
        assert_eq!(brackets.len(), 1);
        let rec = refine(FunctionId::Xi, RefineStart::Bracket(brackets[0].0, brackets[0].1)).unwrap();
        assert!((rec.location.1 - 14.134725141734694).abs() < 1e-8);
    }

    #[test]
    fn line_scan_rejects_bad_step() {
        assert!(line_scan(FunctionId::Xi, 0.0, 1.0, 0.2).is_err());
    }

    #[test]
    fn refine_newton_locates_f1_pair() {
        let rec = refine(FunctionId::F1, RefineStart::Seed(Complex64::new(0.9, 2.1))).unwrap();
        assert!((rec.location.0 - 0.90).abs() < 0.01);
        assert!((rec.location.1 - 2.09).abs() < 0.01);
        let scale = local_scale(FunctionId::F1, rec.location_c()).unwrap();
        assert!(rec.residual <= 1e-8 * scale);
    }

    #[test]
    fn refine_newton_locates_f2_pair() {
        let rec = refine(FunctionId::F2, RefineStart::Seed(Complex64::new(1.2, 3.4))).unwrap();
        assert!((rec.location.0 - 1.17).abs() < 0.01);
        assert!((rec.location.1 - 3.43).abs() < 0.01);
    }

    #[test]
    fn local_zero_multiplicity_by_winding() {
        let rec = refine(FunctionId::F1, RefineStart::Seed(Complex64::new(0.9, 2.1))).unwrap();
        let (x, y) = rec.location;
        let rect = Rectangle::new(x - 1e-3, x + 1e-3, y - 1e-3, y + 1e-3).unwrap();
        let w = winding_count(FunctionId::F1, rect).unwrap();
        assert_eq!(w.count, 1);
    }

    #[test]
    fn xi_table_first_three_and_symmetry() {
        let table = xi_zeros_up_to(26.0).unwrap();
        assert!(table.ordinates.len() >= 3);
        assert!((table.ordinates[0] - 14.134725141734694).abs() < 1e-6);
        assert!((table.ordinates[1] - 21.022039638771555).abs() < 1e-6);
        assert!((table.ordinates[2] - 25.010857580145689).abs() < 1e-6);
        assert!(table.ordinates.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn xi_table_count_up_to_fifty() {
        let table = xi_zeros_up_to(50.0).unwrap();
        assert_eq!(table.ordinates.len(), 10);
        // halving the scan step must find the same zeros
        let brackets = line_scan(FunctionId::Xi, 0.025, 50.0, 0.025).unwrap();
        assert_eq!(brackets.len(), 10);
    }

    #[test]
    fn gap_check_single_point() {
        let table = xi_zeros_up_to(26.0).unwrap();
        let rep = lagarias_gap_check(&table, 0.0).unwrap();
        // +-14.13 and +-21.02 (and +-25.01) are all within 22 of t = 0
        assert!(rep.min_count >= 3);
        assert!(rep.pass);
    }

    #[test]
    fn gap_check_requires_tall_enough_table() {
        let table = xi_zeros_up_to(26.0).unwrap();
        assert!(lagarias_gap_check(&table, 100.0).is_err());
        let empty = XiZeroTable {
            height: 200.0,
            ordinates: vec![],
        };
        assert!(lagarias_gap_check(&empty, 10.0).is_err());
    }

    #[test]
    fn ratio_scan_small_grid() {
        let grid = GridSpec {
            re_min: 0.51,
            re_max: 20.0,
            im_min: -50.0,
            im_max: 50.0,
            n_re: 40,
            n_im: 40,
        };
        let rep = ratio_bound_scan(&grid).unwrap();
        assert!(rep.pass, "max = {} at {:?}", rep.max, rep.argmax);
        assert!(rep.max < 1.0);
        // approaches one from below near the boundary line
        let edge = GridSpec {
            re_min: 0.5001,
            re_max: 0.5001,
            im_min: -10.0,
            im_max: 10.0,
            n_re: 1,
            n_im: 41,
        };
        let rep = ratio_bound_scan(&edge).unwrap();
        assert!(rep.max < 1.0 && rep.max > 0.99);
    }

    #[test]
    fn ratio_scan_conjugate_symmetry() {
        let s = Complex64::new(1.3, 7.0);
        let r = (special::chi(2.0 * s - 1.0) / special::chi(2.0 * s)).norm();
        let rc = (special::chi(2.0 * s.conj() - 1.0) / special::chi(2.0 * s.conj())).norm();
        assert!((r - rc).abs() <= 1e-12 * r);
    }

    #[test]
    fn locate_zeros_finds_all_three_in_window() {
        let rect = Rectangle::new(0.5, 5.0, -10.0, 10.0).unwrap();
        let recs = locate_zeros_in_rect(FunctionId::F1, rect, 0.25).unwrap();
        assert_eq!(recs.len(), 3, "{recs:?}");
    }
}
