//! Exact integer model of the G2 root system.
//!
//! Everything is derived from the two simple reflections: the 12-element Weyl
//! group is generated by closure, inversion sets are computed by acting on the
//! positive roots, and the coroot pairings come from the Gram matrix. The
//! published table of actions and inversion sets is regenerated, not copied.
//!
//! Coordinates: a character lambda = z1 (2a+b) + z2 (a+b), where a is the
//! short simple root and b the long one. In this basis the six coroot
//! pairings are integer linear forms in (z1, z2).

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;

/// A root m*a + n*b in the simple-root basis (a short, b long).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub m: i64,
    pub n: i64,
}

impl Root {
    pub const fn new(m: i64, n: i64) -> Self {
        Root { m, n }
    }

    pub fn is_positive(&self) -> bool {
        self.m > 0 || (self.m == 0 && self.n > 0)
    }

    pub fn neg(&self) -> Root {
        Root::new(-self.m, -self.n)
    }

    /// Squared length in the scaled Gram metric [[2,-3],[-3,6]].
    fn norm2(&self) -> i64 {
        2 * self.m * self.m - 6 * self.m * self.n + 6 * self.n * self.n
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.m, self.n) {
            (1, 0) => write!(f, "a"),
            (0, 1) => write!(f, "b"),
            (m, 0) => write!(f, "{m}a"),
            (0, n) => write!(f, "{n}b"),
            (1, 1) => write!(f, "a+b"),
            (m, 1) => write!(f, "{m}a+b"),
            (1, n) => write!(f, "a+{n}b"),
            (m, n) => write!(f, "{m}a+{n}b"),
        }
    }
}

/// Integer affine form a*z1 + b*z2 + c. Serializes as the triple [a, b, c].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.a, self.b, self.c).serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let (a, b, c) = <(i64, i64, i64)>::deserialize(d)?;
        Ok(LinearForm { a, b, c })
    }
}

impl LinearForm {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        LinearForm { a, b, c }
    }

    pub fn constant(c: i64) -> Self {
        LinearForm::new(0, 0, c)
    }

    pub fn eval(&self, z1: num_complex::Complex64, z2: num_complex::Complex64) -> num_complex::Complex64 {
        z1 * self.a as f64 + z2 * self.b as f64 + num_complex::Complex64::new(self.c as f64, 0.0)
    }

    /// Value at a single variable s, ignoring the z2 slot (requires b = 0).
    pub fn eval_single(&self, s: num_complex::Complex64) -> num_complex::Complex64 {
        debug_assert_eq!(self.b, 0, "single-variable form expected");
        s * self.a as f64 + num_complex::Complex64::new(self.c as f64, 0.0)
    }

    pub fn add_const(&self, k: i64) -> Self {
        LinearForm::new(self.a, self.b, self.c + k)
    }

    pub fn negate(&self) -> Self {
        LinearForm::new(-self.a, -self.b, -self.c)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    /// Compose with a coordinate action: the form evaluated on M (z1, z2).
    pub fn after_action(&self, m: &Mat2) -> Self {
        LinearForm::new(
            self.a * m.e[0][0] + self.b * m.e[1][0],
            self.a * m.e[0][1] + self.b * m.e[1][1],
            self.c,
        )
    }

    /// Substitute z1 = s + 1, z2 = s (the long-case hyperplane), returning a
    /// single-variable form in s.
    pub fn on_long_hyperplane(&self) -> LinearForm {
        LinearForm::new(self.a + self.b, 0, self.c + self.a)
    }

    /// Substitute z2 = 1, z1 = s (the short-case hyperplane).
    pub fn on_short_hyperplane(&self) -> LinearForm {
        LinearForm::new(self.a, 0, self.c + self.b)
    }

    /// Substitute s -> s - k in a single-variable form.
    pub fn shifted(&self, k: i64) -> LinearForm {
        debug_assert_eq!(self.b, 0);
        LinearForm::new(self.a, 0, self.c - self.a * k)
    }

    fn fmt_var(&self, f: &mut fmt::Formatter<'_>, vars: [&str; 2]) -> fmt::Result {
        let mut first = true;
        for (coef, var) in [(self.a, vars[0]), (self.b, vars[1])] {
            if coef == 0 {
                continue;
            }
            if first {
                match coef {
                    1 => write!(f, "{var}")?,
                    -1 => write!(f, "-{var}")?,
                    c => write!(f, "{c}{var}")?,
                }
                first = false;
            } else {
                match coef {
                    1 => write!(f, "+{var}")?,
                    -1 => write!(f, "-{var}")?,
                    c if c > 0 => write!(f, "+{c}{var}")?,
                    c => write!(f, "{c}{var}")?,
                }
            }
        }
        if self.c != 0 || first {
            if first {
                write!(f, "{}", self.c)?;
            } else if self.c > 0 {
                write!(f, "+{}", self.c)?;
            } else {
                write!(f, "{}", self.c)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_var(f, ["z1", "z2"])
    }
}

/// Render a single-variable form (b = 0) in the variable s.
pub struct SingleVar(pub LinearForm);

impl fmt::Display for SingleVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_assert_eq!(self.0.b, 0);
        self.0.fmt_var(f, ["s", ""])
    }
}

/// 2x2 integer matrix acting on column vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub e: [[i64; 2]; 2],
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2 {
        e: [[1, 0], [0, 1]],
    };

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let mut e = [[0i64; 2]; 2];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.e[i][0] * rhs.e[0][j] + self.e[i][1] * rhs.e[1][j];
            }
        }
        Mat2 { e }
    }

    pub fn apply(&self, v: (i64, i64)) -> (i64, i64) {
        (
            self.e[0][0] * v.0 + self.e[0][1] * v.1,
            self.e[1][0] * v.0 + self.e[1][1] * v.1,
        )
    }

    pub fn apply_root(&self, r: Root) -> Root {
        let (m, n) = self.apply((r.m, r.n));
        Root::new(m, n)
    }

    pub fn det(&self) -> i64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    pub fn trace(&self) -> i64 {
        self.e[0][0] + self.e[1][1]
    }
}

/// Names of the 12 Weyl elements: identity, the six reflections labelled by
/// the positive root they negate, and the five non-trivial rotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum WeylName {
    E,
    WAlpha,
    WBeta,
    W3AlphaBeta,
    W2AlphaBeta,
    W3Alpha2Beta,
    WAlphaBeta,
    Rot60,
    Rot120,
    Rot180,
    Rot240,
    Rot300,
}

impl WeylName {
    /// The 12 names in the conventional listing order.
    pub const ALL: [WeylName; 12] = [
        WeylName::E,
        WeylName::WAlpha,
        WeylName::WBeta,
        WeylName::W3AlphaBeta,
        WeylName::W2AlphaBeta,
        WeylName::W3Alpha2Beta,
        WeylName::WAlphaBeta,
        WeylName::Rot60,
        WeylName::Rot120,
        WeylName::Rot180,
        WeylName::Rot240,
        WeylName::Rot300,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            WeylName::E => "e",
            WeylName::WAlpha => "w_a",
            WeylName::WBeta => "w_b",
            WeylName::W3AlphaBeta => "w_3a+b",
            WeylName::W2AlphaBeta => "w_2a+b",
            WeylName::W3Alpha2Beta => "w_3a+2b",
            WeylName::WAlphaBeta => "w_a+b",
            WeylName::Rot60 => "rot(60)",
            WeylName::Rot120 => "rot(120)",
            WeylName::Rot180 => "rot(180)",
            WeylName::Rot240 => "rot(240)",
            WeylName::Rot300 => "rot(300)",
        }
    }
}

impl fmt::Display for WeylName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One Weyl element with its derived data.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub name: WeylName,
    /// Action on (z1, z2) coordinates.
    pub action_z: Mat2,
    /// Action on root coordinates (m, n).
    pub action_root: Mat2,
    /// Positive roots sent negative.
    pub inversions: Vec<Root>,
    /// Word length in the simple reflections.
    pub word_len: usize,
}

/// The assembled G2 data: roots, pairings, and the Weyl group.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub simple: [Root; 2],
    pub positive: [Root; 6],
    /// rho in (z1, z2) coordinates.
    pub rho_z: (i64, i64),
    /// Elements in the conventional listing order.
    pub elements: Vec<WeylElement>,
}

/// Pairing <lambda, gamma-check> as a linear form in (z1, z2), for any root.
pub fn pairing(gamma: Root) -> LinearForm {
    // lambda in root coordinates is B (z1, z2) with B = [[2,1],[1,1]];
    // <lambda, gamma-check> = 2 (lambda, gamma) / (gamma, gamma) with the
    // scaled Gram matrix G = [[2,-3],[-3,6]].
    let g = [[2i64, -3], [-3, 6]];
    let gv = (
        g[0][0] * gamma.m + g[0][1] * gamma.n,
        g[1][0] * gamma.m + g[1][1] * gamma.n,
    );
    // B^T gv
    let v = (2 * gv.0 + gv.1, gv.0 + gv.1);
    let n2 = gamma.norm2();
    assert!(n2 > 0);
    let (two_a, two_b) = (2 * v.0, 2 * v.1);
    assert!(
        two_a % n2 == 0 && two_b % n2 == 0,
        "pairing is not integral for {gamma:?}"
    );
    LinearForm::new(two_a / n2, two_b / n2, 0)
}

fn simple_reflection_root_action(simple_idx: usize) -> Mat2 {
    // w_gamma(x) = x - <x, gamma-check> gamma on the root lattice.
    let gamma = if simple_idx == 0 {
        Root::new(1, 0)
    } else {
        Root::new(0, 1)
    };
    let mut cols = [[0i64; 2]; 2];
    for (j, basis) in [Root::new(1, 0), Root::new(0, 1)].iter().enumerate() {
        let p = root_pairing(*basis, gamma);
        let img = Root::new(basis.m - p * gamma.m, basis.n - p * gamma.n);
        cols[0][j] = img.m;
        cols[1][j] = img.n;
    }
    Mat2 { e: cols }
}

/// <x, gamma-check> for roots x, gamma (an integer).
fn root_pairing(x: Root, gamma: Root) -> i64 {
    let g = [[2i64, -3], [-3, 6]];
    let inner = x.m * (g[0][0] * gamma.m + g[0][1] * gamma.n)
        + x.n * (g[1][0] * gamma.m + g[1][1] * gamma.n);
    let n2 = gamma.norm2();
    assert_eq!((2 * inner) % n2, 0);
    2 * inner / n2
}

/// Change of basis from (z1, z2) coordinates to root coordinates.
const BASIS: Mat2 = Mat2 { e: [[2, 1], [1, 1]] };
const BASIS_INV: Mat2 = Mat2 {
    e: [[1, -1], [-1, 2]],
};

fn z_action_from_root_action(a: &Mat2) -> Mat2 {
    BASIS_INV.mul(a).mul(&BASIS)
}

/// Rotation angle of a determinant-one root-space action, in exact
/// multiples of 60 degrees.
fn rotation_steps(a: &Mat2) -> usize {
    debug_assert_eq!(a.det(), 1);
    // trace = 2 cos(theta); sign of sin(theta) from the Euclidean embedding
    // alpha = (1, 0), beta = (-3/2, sqrt(3)/2).
    let cos2 = a.trace(); // 2 cos
    let (m, n) = (a.e[0][0] as f64, a.e[1][0] as f64);
    let (p, q) = (a.e[0][1] as f64, a.e[1][1] as f64);
    // image of alpha and beta in Euclidean coordinates
    let ax = m - 1.5 * n;
    let ay = 0.866025403784438646_f64 * n;
    let bx = p - 1.5 * q;
    let by = 0.866025403784438646_f64 * q;
    // sin(theta) = cross(alpha, R alpha) / |alpha|^2 with alpha = (1, 0)
    let _ = (bx, by);
    let sin_t = ay / (ax * ax + ay * ay).sqrt();
    let steps = match cos2 {
        2 => 0,
        1 => 1,  // +-60
        -1 => 2, // +-120
        -2 => 3, // 180
        t => panic!("unexpected rotation trace {t}"),
    };
    if steps == 0 || steps == 3 || sin_t > 0.0 {
        steps
    } else {
        6 - steps
    }
}

/// Build the full G2 structure from the two simple reflections.
pub fn build_g2() -> RootSystemData {
    let alpha = Root::new(1, 0);
    let beta = Root::new(0, 1);
    let positive = [
        Root::new(1, 0),
        Root::new(0, 1),
        Root::new(1, 1),
        Root::new(2, 1),
        Root::new(3, 1),
        Root::new(3, 2),
    ];

    // Closure of the simple reflections, breadth-first so the generation
    // depth is the word length.
    let gens = [
        simple_reflection_root_action(0),
        simple_reflection_root_action(1),
    ];
    let mut found: Vec<(Mat2, usize)> = vec![(Mat2::IDENTITY, 0)];
    let mut queue: VecDeque<(Mat2, usize)> = VecDeque::from([(Mat2::IDENTITY, 0)]);
    while let Some((m, len)) = queue.pop_front() {
        for g in &gens {
            let next = m.mul(g);
            if !found.iter().any(|(f, _)| *f == next) {
                found.push((next, len + 1));
                queue.push_back((next, len + 1));
            }
        }
    }
    assert_eq!(found.len(), 12, "G2 Weyl group must have 12 elements");

    // Name each element from its own action.
    let mut named: Vec<WeylElement> = Vec::with_capacity(12);
    for (m, len) in &found {
        let inversions: Vec<Root> = positive
            .iter()
            .copied()
            .filter(|r| !m.apply_root(*r).is_positive())
            .collect();
        let name = if *m == Mat2::IDENTITY {
            WeylName::E
        } else if m.det() == -1 {
            let negated: Vec<Root> = positive
                .iter()
                .copied()
                .filter(|r| m.apply_root(*r) == r.neg())
                .collect();
            assert_eq!(negated.len(), 1, "a reflection negates exactly one positive root");
            match (negated[0].m, negated[0].n) {
                (1, 0) => WeylName::WAlpha,
                (0, 1) => WeylName::WBeta,
                (1, 1) => WeylName::WAlphaBeta,
                (2, 1) => WeylName::W2AlphaBeta,
                (3, 1) => WeylName::W3AlphaBeta,
                (3, 2) => WeylName::W3Alpha2Beta,
                other => panic!("unexpected negated root {other:?}"),
            }
        } else {
            match rotation_steps(m) {
                1 => WeylName::Rot60,
                2 => WeylName::Rot120,
                3 => WeylName::Rot180,
                4 => WeylName::Rot240,
                5 => WeylName::Rot300,
                k => panic!("unexpected rotation step {k}"),
            }
        };
        named.push(WeylElement {
            name,
            action_z: z_action_from_root_action(m),
            action_root: *m,
            inversions: {
                let mut inv = inversions;
                inv.sort();
                inv
            },
            word_len: *len,
        });
    }

    // Order by the conventional listing.
    let mut elements = Vec::with_capacity(12);
    for name in WeylName::ALL {
        let e = named
            .iter()
            .find(|e| e.name == name)
            .unwrap_or_else(|| panic!("missing Weyl element {name}"))
            .clone();
        elements.push(e);
    }

    // rho = half the sum of the positive roots; in z-coordinates it must
    // pair to 1 with both simple coroots.
    let sum = positive
        .iter()
        .fold((0i64, 0i64), |acc, r| (acc.0 + r.m, acc.1 + r.n));
    assert_eq!((sum.0 % 2, sum.1 % 2), (0, 0), "sum of positive roots must be even");
    let rho_root = (sum.0 / 2, sum.1 / 2);
    let rho_z = BASIS_INV.apply(rho_root);
    assert_eq!(
        pairing(alpha).eval(
            num_complex::Complex64::new(rho_z.0 as f64, 0.0),
            num_complex::Complex64::new(rho_z.1 as f64, 0.0)
        ),
        num_complex::Complex64::new(1.0, 0.0)
    );
    assert_eq!(
        pairing(beta).eval(
            num_complex::Complex64::new(rho_z.0 as f64, 0.0),
            num_complex::Complex64::new(rho_z.1 as f64, 0.0)
        ),
        num_complex::Complex64::new(1.0, 0.0)
    );

    RootSystemData {
        simple: [alpha, beta],
        positive,
        rho_z,
        elements,
    }
}

impl RootSystemData {
    pub fn element(&self, name: WeylName) -> &WeylElement {
        self.elements.iter().find(|e| e.name == name).unwrap()
    }

    /// <w lambda, gamma-check> as a linear form in (z1, z2).
    pub fn pairing_after_action(&self, w: &WeylElement, gamma: Root) -> LinearForm {
        pairing(gamma).after_action(&w.action_z)
    }

    /// The inversion set {gamma > 0 : w gamma < 0}.
    pub fn inversion_set<'a>(&self, w: &'a WeylElement) -> &'a [Root] {
        &w.inversions
    }

    /// Render the regenerated action/inversion table, one row per element in
    /// the conventional order.
    pub fn table_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let header = format!(
            "{:<10} {:<14} {:<34} <wl,a*>-1 | <wl,b*>-1",
            "w", "w(z1,z2)", "inversions"
        );
        let _ = writeln!(out, "{header}");
        for e in &self.elements {
            let img1 = LinearForm::new(1, 0, 0).after_action(&e.action_z);
            let img2 = LinearForm::new(0, 1, 0).after_action(&e.action_z);
            let pa = self.pairing_after_action(e, self.simple[0]).add_const(-1);
            let pb = self.pairing_after_action(e, self.simple[1]).add_const(-1);
            let inv = e
                .inversions
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            let action = format!("({img1}, {img2})");
            let _ = writeln!(
                out,
                "{:<10} {:<16} {:<34} {} | {}",
                e.name.to_string(),
                action,
                if inv.is_empty() { "-".to_string() } else { inv },
                pa,
                pb
            );
        }
        out
    }
}
