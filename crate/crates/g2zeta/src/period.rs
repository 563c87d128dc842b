//! Symbolic construction of the two-variable period attached to G2, residue
//! extraction along its two singular hyperplanes, and normalization into the
//! two single-variable zeta functions.
//!
//! All manipulation is exact: rational constants, integer affine forms, and
//! multiset cancellation of matching xi-factor arguments. Numbers only enter
//! at evaluation time.

use crate::error::{EvalError, Result};
use crate::rootsystem::{pairing, LinearForm, RootSystemData, WeylName};
use crate::special;
use num_complex::Complex64;
use num_rational::Rational64;
use serde::{Deserialize, Serialize};
use std::fmt;

/// One factor xi(arg) / xi(arg + 1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct XiRatioFactor {
    pub arg: LinearForm,
}

/// Exact rational constant times a product of affine forms over another.
///
/// Canonical shape: every form has its leading coefficient positive (sign
/// folded into the constant), both factor lists are sorted, and no form
/// appears in both lists. The constant serializes as a `[numerator,
/// denominator]` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalCoeff {
    #[serde(with = "rational_pair")]
    pub constant: Rational64,
    pub num: Vec<LinearForm>,
    pub den: Vec<LinearForm>,
}

mod rational_pair {
    use num_rational::Rational64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        (*r.numer(), *r.denom()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let (p, q) = <(i64, i64)>::deserialize(d)?;
        if q == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rational64::new(p, q))
    }
}

impl RationalCoeff {
    pub fn one() -> Self {
        RationalCoeff {
            constant: Rational64::new(1, 1),
            num: vec![],
            den: vec![],
        }
    }

    /// 1 / (f1 * f2 * ...) with canonicalization.
    pub fn inverse_of(forms: Vec<LinearForm>) -> Self {
        let mut c = RationalCoeff {
            constant: Rational64::new(1, 1),
            num: vec![],
            den: forms,
        };
        c.canonicalize();
        c
    }

    fn canonicalize(&mut self) {
        fn gcd(a: i64, b: i64) -> i64 {
            let (mut a, mut b) = (a.abs(), b.abs());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        }
        // Pull integer content and signs out of each form, and turn constant
        // forms into plain rational factors, so equal coefficients have a
        // unique representation.
        fn reduce(forms: &mut Vec<LinearForm>) -> Rational64 {
            let mut scale = Rational64::new(1, 1);
            let mut kept = Vec::with_capacity(forms.len());
            for f in forms.drain(..) {
                let mut f = f;
                let g = gcd(gcd(f.a, f.b), f.c);
                if g > 1 {
                    scale *= Rational64::new(g, 1);
                    f = LinearForm::new(f.a / g, f.b / g, f.c / g);
                }
                if f.a == 0 && f.b == 0 {
                    assert!(f.c != 0, "zero factor in a coefficient");
                    scale *= Rational64::new(f.c, 1);
                    continue;
                }
                let lead = if f.a != 0 { f.a } else { f.b };
                if lead < 0 {
                    f = f.negate();
                    scale *= Rational64::new(-1, 1);
                }
                kept.push(f);
            }
            *forms = kept;
            scale
        }
        let sn = reduce(&mut self.num);
        let sd = reduce(&mut self.den);
        self.constant = self.constant * sn / sd;
        self.num.sort();
        self.den.sort();
        // cancel shared factors
        let mut i = 0;
        while i < self.num.len() {
            if let Some(j) = self.den.iter().position(|d| *d == self.num[i]) {
                self.num.remove(i);
                self.den.remove(j);
            } else {
                i += 1;
            }
        }
    }

    fn eval2(&self, z1: Complex64, z2: Complex64) -> Result<Complex64> {
        let mut v = Complex64::new(
            *self.constant.numer() as f64 / *self.constant.denom() as f64,
            0.0,
        );
        for f in &self.num {
            v *= f.eval(z1, z2);
        }
        for f in &self.den {
            let d = f.eval(z1, z2);
            if d.norm() < 1e-12 {
                return Err(EvalError::at_pole(
                    z1,
                    format!("coefficient denominator {f} vanishes"),
                )
                .into());
            }
            v /= d;
        }
        Ok(v)
    }

    fn eval1(&self, s: Complex64) -> Result<Complex64> {
        let mut v = Complex64::new(
            *self.constant.numer() as f64 / *self.constant.denom() as f64,
            0.0,
        );
        for f in &self.num {
            v *= f.eval_single(s);
        }
        for f in &self.den {
            let d = f.eval_single(s);
            if d.norm() < 1e-12 {
                let form = crate::rootsystem::SingleVar(*f);
                return Err(EvalError::at_pole(
                    s,
                    format!("coefficient denominator {form} vanishes"),
                )
                .into());
            }
            v /= d;
        }
        Ok(v)
    }
}

impl RationalCoeff {
    /// Human-readable rendering; single-variable coefficients use s.
    pub fn render(&self, single_var: bool) -> String {
        use crate::rootsystem::SingleVar;
        let show = |f: &LinearForm| -> String {
            if single_var {
                format!("({})", SingleVar(*f))
            } else {
                format!("({f})")
            }
        };
        let mut out = self.constant.to_string();
        for n in &self.num {
            out.push(' ');
            out.push_str(&show(n));
        }
        if !self.den.is_empty() {
            out.push_str(" /");
            for d in &self.den {
                out.push(' ');
                out.push_str(&show(d));
            }
        }
        out
    }
}

impl fmt::Display for RationalCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// The contribution of one Weyl element to the period.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodTerm {
    pub weyl: WeylName,
    pub coeff: RationalCoeff,
    pub ratios: Vec<XiRatioFactor>,
}

/// The full 12-term period expression in (z1, z2).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PeriodExpression {
    pub terms: Vec<PeriodTerm>,
}

/// One term of a single-variable zeta expression: rational coefficient times
/// a ratio of xi evaluations at affine arguments (constant arguments allowed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingleVarTerm {
    pub coeff: RationalCoeff,
    pub xi_num: Vec<LinearForm>,
    pub xi_den: Vec<LinearForm>,
}

impl SingleVarTerm {
    fn canonicalize(&mut self) {
        self.coeff.canonicalize();
        self.xi_num.sort();
        self.xi_den.sort();
        let mut i = 0;
        while i < self.xi_num.len() {
            if let Some(j) = self.xi_den.iter().position(|d| *d == self.xi_num[i]) {
                self.xi_num.remove(i);
                self.xi_den.remove(j);
            } else {
                i += 1;
            }
        }
    }
}

/// A sum of single-variable terms, representing one of the zeta functions or
/// an intermediate residue expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZetaExpression {
    pub terms: Vec<SingleVarTerm>,
}

impl ZetaExpression {
    /// Sorted canonical form for structural comparison.
    pub fn canonical(&self) -> ZetaExpression {
        let mut terms = self.terms.clone();
        for t in terms.iter_mut() {
            t.canonicalize();
        }
        terms.sort_by(|a, b| {
            (&a.xi_num, &a.xi_den, &a.coeff.num, &a.coeff.den, a.coeff.constant).cmp(&(
                &b.xi_num,
                &b.xi_den,
                &b.coeff.num,
                &b.coeff.den,
                b.coeff.constant,
            ))
        });
        ZetaExpression { terms }
    }

    /// Numeric value at s.
    pub fn eval(&self, s: Complex64) -> Result<Complex64> {
        let mut sum = Complex64::new(0.0, 0.0);
        for t in &self.terms {
            let mut v = t.coeff.eval1(s)?;
            for arg in &t.xi_num {
                v *= special::xi(arg.eval_single(s))?;
            }
            for arg in &t.xi_den {
                v /= special::xi(arg.eval_single(s))?;
            }
            sum += v;
        }
        Ok(sum)
    }

    /// Largest single-term magnitude at s, for conditioning estimates.
    pub fn max_term_abs(&self, s: Complex64) -> Result<f64> {
        let mut m = 0f64;
        for t in &self.terms {
            let mut v = t.coeff.eval1(s)?;
            for arg in &t.xi_num {
                v *= special::xi(arg.eval_single(s))?;
            }
            for arg in &t.xi_den {
                v /= special::xi(arg.eval_single(s))?;
            }
            m = m.max(v.norm());
        }
        Ok(m)
    }
}

/// Which maximal parabolic the construction is aimed at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParabolicKind {
    Long,
    Short,
}

impl ParabolicKind {
    pub fn label(&self) -> &'static str {
        match self {
            ParabolicKind::Long => "long",
            ParabolicKind::Short => "short",
        }
    }
}

impl std::str::FromStr for ParabolicKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "long" => Ok(ParabolicKind::Long),
            "short" => Ok(ParabolicKind::Short),
            other => Err(format!("unknown parabolic kind: {other}")),
        }
    }
}

/// The singular hyperplane selected by each parabolic, with its residue
/// parametrization (which variable is eliminated, which survives as s).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hyperplane {
    /// z1 - z2 = 1; residue in z1, survivor z2 -> s.
    Z1MinusZ2EqOne,
    /// z2 = 1; residue in z2, survivor z1 -> s.
    Z2EqOne,
}

impl Hyperplane {
    pub fn for_kind(kind: ParabolicKind) -> Self {
        match kind {
            ParabolicKind::Long => Hyperplane::Z1MinusZ2EqOne,
            ParabolicKind::Short => Hyperplane::Z2EqOne,
        }
    }

    /// The vanishing form (z1 - z2 - 1 or z2 - 1).
    pub fn form(&self) -> LinearForm {
        match self {
            Hyperplane::Z1MinusZ2EqOne => LinearForm::new(1, -1, -1),
            Hyperplane::Z2EqOne => LinearForm::new(0, 1, -1),
        }
    }

    /// Restrict a two-variable form to the hyperplane, in the surviving
    /// variable s.
    fn restrict(&self, f: &LinearForm) -> LinearForm {
        match self {
            Hyperplane::Z1MinusZ2EqOne => f.on_long_hyperplane(),
            Hyperplane::Z2EqOne => f.on_short_hyperplane(),
        }
    }

    /// Coefficient of the eliminated variable in a form (the Jacobian factor
    /// of the residue).
    fn dying_coeff(&self, f: &LinearForm) -> i64 {
        match self {
            Hyperplane::Z1MinusZ2EqOne => f.a,
            Hyperplane::Z2EqOne => f.b,
        }
    }
}

/// Assemble the 12-term period: for each Weyl element w the coefficient
/// 1 / (<w lambda - rho, a*> <w lambda - rho, b*>) and one xi-ratio per
/// inversion of w.
pub fn build_period(rs: &RootSystemData) -> PeriodExpression {
    let alpha = rs.simple[0];
    let beta = rs.simple[1];
    let terms = rs
        .elements
        .iter()
        .map(|w| {
            let da = rs.pairing_after_action(w, alpha).add_const(-1);
            let db = rs.pairing_after_action(w, beta).add_const(-1);
            let ratios = w
                .inversions
                .iter()
                .map(|gamma| XiRatioFactor {
                    arg: pairing(*gamma),
                })
                .collect();
            PeriodTerm {
                weyl: w.name,
                coeff: RationalCoeff::inverse_of(vec![da, db]),
                ratios,
            }
        })
        .collect();
    PeriodExpression { terms }
}

/// Residue of the period along a singular hyperplane, with the surviving
/// variable renamed s.
///
/// Per-term rule: a pole can come from a vanishing coefficient denominator
/// or from one xi-ratio whose numerator argument is identically 1 on the
/// hyperplane (xi has residue 1 at 1, so the ratio collapses to 1/xi(2));
/// terms with neither are regular and contribute nothing. Pole order two or
/// higher is asserted away.
pub fn residue_along(expr: &PeriodExpression, hyperplane: Hyperplane) -> ZetaExpression {
    let mut out = Vec::new();
    for term in &expr.terms {
        // Denominator factors proportional to the hyperplane form.
        let den_hits: Vec<usize> = term
            .coeff
            .den
            .iter()
            .enumerate()
            .filter(|(_, f)| {
                let r = hyperplane.restrict(f);
                r.is_zero() && hyperplane.dying_coeff(f) != 0
            })
            .map(|(i, _)| i)
            .collect();
        // Ratio factors whose numerator argument is identically 1 there.
        let ratio_hits: Vec<usize> = term
            .ratios
            .iter()
            .enumerate()
            .filter(|(_, r)| {
                let restricted = hyperplane.restrict(&r.arg);
                restricted == LinearForm::constant(1)
            })
            .map(|(i, _)| i)
            .collect();
        // Arguments identically 0 would put a xi pole in both numerator and
        // denominator of a ratio; that does not happen along these two
        // hyperplanes, so it is treated as a hard error.
        for r in &term.ratios {
            assert!(
                hyperplane.restrict(&r.arg) != LinearForm::constant(0),
                "unsupported xi pole at 0 along the hyperplane"
            );
        }
        let order = den_hits.len() + ratio_hits.len();
        assert!(order <= 1, "pole order >= 2 along the hyperplane");
        if order == 0 {
            continue; // regular term, zero residue
        }

        let mut constant = term.coeff.constant;
        let num: Vec<LinearForm> = term.coeff.num.iter().map(|f| hyperplane.restrict(f)).collect();
        let mut den: Vec<LinearForm> = Vec::new();
        let mut xi_num: Vec<LinearForm> = Vec::new();
        let mut xi_den: Vec<LinearForm> = Vec::new();

        for (i, f) in term.coeff.den.iter().enumerate() {
            if den_hits.first() == Some(&i) {
                // 1/(k * H): residue contributes 1/k with k the coefficient
                // of the eliminated variable.
                constant /= Rational64::new(hyperplane.dying_coeff(f), 1);
            } else {
                den.push(hyperplane.restrict(f));
            }
        }
        for (i, r) in term.ratios.iter().enumerate() {
            if ratio_hits.first() == Some(&i) {
                // xi(arg)/xi(arg+1) with arg -> 1: residue 1 / (k * xi(2)).
                constant /= Rational64::new(hyperplane.dying_coeff(&r.arg), 1);
                xi_den.push(LinearForm::constant(2));
            } else {
                let a = hyperplane.restrict(&r.arg);
                xi_num.push(a);
                xi_den.push(a.add_const(1));
            }
        }

        let mut t = SingleVarTerm {
            coeff: RationalCoeff { constant, num, den },
            xi_num,
            xi_den,
        };
        t.canonicalize();
        out.push(t);
    }
    ZetaExpression { terms: out }
}

/// Multiply every term by the given xi factors (cancelling matching
/// arguments symbolically) and then substitute s -> s - shift.
pub fn normalize(expr: &ZetaExpression, multipliers: &[LinearForm], shift: i64) -> ZetaExpression {
    let terms = expr
        .terms
        .iter()
        .map(|t| {
            let mut t = t.clone();
            t.xi_num.extend_from_slice(multipliers);
            t.canonicalize();
            SingleVarTerm {
                coeff: RationalCoeff {
                    constant: t.coeff.constant,
                    num: t.coeff.num.iter().map(|f| f.shifted(shift)).collect(),
                    den: t.coeff.den.iter().map(|f| f.shifted(shift)).collect(),
                },
                xi_num: t.xi_num.iter().map(|f| f.shifted(shift)).collect(),
                xi_den: t.xi_den.iter().map(|f| f.shifted(shift)).collect(),
            }
        })
        .map(|mut t| {
            t.canonicalize();
            t
        })
        .collect();
    ZetaExpression { terms }
}

/// The normalizing xi multipliers for each residue pipeline.
pub fn multipliers(kind: ParabolicKind) -> Vec<LinearForm> {
    let lf = LinearForm::new;
    match kind {
        // xi(2) xi(s+2) xi(2s+2) xi(3s+3)
        ParabolicKind::Long => vec![lf(0, 0, 2), lf(1, 0, 2), lf(2, 0, 2), lf(3, 0, 3)],
        // xi(2) xi(s+3) xi(2s+2)
        ParabolicKind::Short => vec![lf(0, 0, 2), lf(1, 0, 3), lf(2, 0, 2)],
    }
}

/// The final shift applied after multiplying.
pub fn shift(_kind: ParabolicKind) -> i64 {
    1
}

/// Run the full symbolic pipeline for one parabolic.
pub fn pipeline(rs: &RootSystemData, kind: ParabolicKind) -> ZetaExpression {
    let period = build_period(rs);
    let residue = residue_along(&period, Hyperplane::for_kind(kind));
    normalize(&residue, &multipliers(kind), shift(kind))
}

/// Numeric evaluation of the two-variable period at (z1, z2).
///
/// Errors with `AtPole` when (z1, z2) is within 1e-6 of a singular
/// hyperplane of any term.
pub fn eval_period(expr: &PeriodExpression, z1: Complex64, z2: Complex64) -> Result<Complex64> {
    // Distance proxy: |form(z)| / |(a, b)|.
    let too_close = |f: &LinearForm| -> bool {
        let scale = ((f.a * f.a + f.b * f.b) as f64).sqrt();
        scale > 0.0 && f.eval(z1, z2).norm() / scale < 1e-6
    };
    for term in &expr.terms {
        for f in &term.coeff.den {
            if too_close(f) {
                return Err(EvalError::at_pole(z1, format!("near hyperplane {f} = 0")).into());
            }
        }
        for r in &term.ratios {
            // xi poles of the ratio at arg = 0 and arg = 1
            if too_close(&r.arg) || too_close(&r.arg.add_const(-1)) {
                return Err(EvalError::at_pole(
                    z1,
                    format!("near xi-ratio singularity at {} in {{0,1}}", r.arg),
                )
                .into());
            }
        }
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for term in &expr.terms {
        let mut v = term.coeff.eval2(z1, z2)?;
        for r in &term.ratios {
            let arg = r.arg.eval(z1, z2);
            v *= special::xi(arg)? / special::xi(arg + 1.0)?;
        }
        sum += v;
    }
    Ok(sum)
}

/// The two published eight-term zeta expressions, hard-coded term by term.
pub fn reference_zeta(kind: ParabolicKind) -> ZetaExpression {
    let lf = LinearForm::new;
    let term = |constant: (i64, i64),
                den: Vec<LinearForm>,
                xi2: bool,
                xi_num: Vec<LinearForm>|
     -> SingleVarTerm {
        let mut xi_num = xi_num;
        if xi2 {
            xi_num.push(lf(0, 0, 2));
        }
        let mut t = SingleVarTerm {
            coeff: RationalCoeff {
                constant: Rational64::new(constant.0, constant.1),
                num: vec![],
                den,
            },
            xi_num,
            xi_den: vec![],
        };
        t.canonicalize();
        t
    };
    let terms = match kind {
        ParabolicKind::Long => vec![
            // 1/(s-2) xi(2) xi(s+1) xi(2s) xi(3s)
            term((1, 1), vec![lf(1, 0, -2)], true, vec![lf(1, 0, 1), lf(2, 0, 0), lf(3, 0, 0)]),
            // -1/(s+1) xi(2) xi(s-1) xi(2s-1) xi(3s-2)
            term((-1, 1), vec![lf(1, 0, 1)], true, vec![lf(1, 0, -1), lf(2, 0, -1), lf(3, 0, -2)]),
            // -1/(2s-2) xi(s+1) xi(2s) xi(3s)
            term((-1, 1), vec![lf(2, 0, -2)], false, vec![lf(1, 0, 1), lf(2, 0, 0), lf(3, 0, 0)]),
            // +1/(2s) xi(s-1) xi(2s-1) xi(3s-2)
            term((1, 1), vec![lf(2, 0, 0)], false, vec![lf(1, 0, -1), lf(2, 0, -1), lf(3, 0, -2)]),
            // -1/((3s)(2s-2)) xi(s) xi(2s) xi(3s-1)
            term((-1, 1), vec![lf(3, 0, 0), lf(2, 0, -2)], false, vec![lf(1, 0, 0), lf(2, 0, 0), lf(3, 0, -1)]),
            // -1/((3s-1)(s-2)) xi(s) xi(2s-1) xi(3s-2)
            term((-1, 1), vec![lf(3, 0, -1), lf(1, 0, -2)], false, vec![lf(1, 0, 0), lf(2, 0, -1), lf(3, 0, -2)]),
            // -1/((3s-3)(2s)) xi(s) xi(2s-1) xi(3s-1)
            term((-1, 1), vec![lf(3, 0, -3), lf(2, 0, 0)], false, vec![lf(1, 0, 0), lf(2, 0, -1), lf(3, 0, -1)]),
            // -1/((3s-2)(s+1)) xi(s) xi(2s) xi(3s)
            term((-1, 1), vec![lf(3, 0, -2), lf(1, 0, 1)], false, vec![lf(1, 0, 0), lf(2, 0, 0), lf(3, 0, 0)]),
        ],
        ParabolicKind::Short => vec![
            // 1/(s-3) xi(2) xi(s+2) xi(2s)
            term((1, 1), vec![lf(1, 0, -3)], true, vec![lf(1, 0, 2), lf(2, 0, 0)]),
            // -1/(s+2) xi(2) xi(s-2) xi(2s-1)
            term((-1, 1), vec![lf(1, 0, 2)], true, vec![lf(1, 0, -2), lf(2, 0, -1)]),
            // +1/(2s-2) xi(s-2) xi(2s-1)
            term((1, 1), vec![lf(2, 0, -2)], false, vec![lf(1, 0, -2), lf(2, 0, -1)]),
            // -1/(2s) xi(s+2) xi(2s)
            term((-1, 1), vec![lf(2, 0, 0)], false, vec![lf(1, 0, 2), lf(2, 0, 0)]),
            // -1/(s(s-3)) xi(s-1) xi(2s-1)
            term((-1, 1), vec![lf(1, 0, 0), lf(1, 0, -3)], false, vec![lf(1, 0, -1), lf(2, 0, -1)]),
            // -1/((s-1)(s+2)) xi(s+1) xi(2s)
            term((-1, 1), vec![lf(1, 0, -1), lf(1, 0, 2)], false, vec![lf(1, 0, 1), lf(2, 0, 0)]),
            // -1/((2s-2)(s+1)) xi(s) xi(2s)
            term((-1, 1), vec![lf(2, 0, -2), lf(1, 0, 1)], false, vec![lf(1, 0, 0), lf(2, 0, 0)]),
            // -1/((2s)(s-2)) xi(s) xi(2s-1)
            term((-1, 1), vec![lf(2, 0, 0), lf(1, 0, -2)], false, vec![lf(1, 0, 0), lf(2, 0, -1)]),
        ],
    };
    ZetaExpression { terms }
}
