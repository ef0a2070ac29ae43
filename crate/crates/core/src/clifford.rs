//! Clifford's chain of `n` lines in exact Gaussian-rational arithmetic.
//!
//! Line `ℓ_i` is the perpendicular bisector of `0` and `y_i`, i.e. `z̄ = t_i (z - y_i)`
//! with `t_i = -ȳ_i / y_i`.

use std::fmt;

use num_complex::Complex;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::qt::{parse_rat, rat, rat_to_string, ratio, Rat};

pub type GaussianRat = Complex<Rat>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("y_{0} is zero")]
    ZeroPoint(usize),
    #[error("lines {0} and {1} are parallel")]
    GenericityViolation(usize, usize),
    #[error("degenerate configuration: {0}")]
    Degenerate(&'static str),
    #[error("Hankel matrix is singular")]
    SingularHankel,
    #[error("expected {0} number of lines, got {1}")]
    WrongParity(&'static str, usize),
    #[error("{0} lines not supported here")]
    UnsupportedSize(usize),
    #[error("constructed points are not concyclic")]
    NotConcyclic,
    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub fn gr(re: i64, im: i64) -> GaussianRat {
    Complex::new(rat(re), rat(im))
}

pub fn gr_to_string(z: &GaussianRat) -> String {
    format!("{},{}", rat_to_string(&z.re), rat_to_string(&z.im))
}

fn gr_json(z: &GaussianRat) -> serde_json::Value {
    serde_json::json!({"re": rat_to_string(&z.re), "im": rat_to_string(&z.im)})
}

fn norm(z: &GaussianRat) -> Rat {
    z.norm_sqr()
}

fn inv(z: &GaussianRat) -> GaussianRat {
    let n = norm(z);
    Complex::new(&z.re / &n, -&z.im / &n)
}

/// `"2,0;0,2;1/2,-3"` as a list of `re,im` pairs.
pub fn parse_ys(s: &str) -> Result<Vec<GaussianRat>, CliffordError> {
    let bad = || CliffordError::Parse(s.to_string());
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (re, im) = p.split_once(',').ok_or_else(bad)?;
            Ok(Complex::new(parse_rat(re).map_err(|_| bad())?, parse_rat(im).map_err(|_| bad())?))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NLineConfig {
    ys: Vec<GaussianRat>,
    ts: Vec<GaussianRat>,
}

impl NLineConfig {
    pub fn new(ys: Vec<GaussianRat>) -> Result<Self, CliffordError> {
        let mut ts = Vec::with_capacity(ys.len());
        for (i, y) in ys.iter().enumerate() {
            if y.is_zero() {
                return Err(CliffordError::ZeroPoint(i + 1));
            }
            ts.push(-(y.conj() * inv(y)));
        }
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                if ts[i] == ts[j] {
                    return Err(CliffordError::GenericityViolation(i + 1, j + 1));
                }
            }
        }
        Ok(Self { ys, ts })
    }

    pub fn n(&self) -> usize {
        self.ys.len()
    }

    pub fn ys(&self) -> &[GaussianRat] {
        &self.ys
    }

    pub fn ts(&self) -> &[GaussianRat] {
        &self.ts
    }

    /// The configuration with the given (0-based) lines removed, order kept.
    pub fn omit(&self, drop: &[usize]) -> Self {
        let keep = |i: &usize| !drop.contains(i);
        Self {
            ys: (0..self.n()).filter(keep).map(|i| self.ys[i].clone()).collect(),
            ts: (0..self.n()).filter(keep).map(|i| self.ts[i].clone()).collect(),
        }
    }

    /// `g_j = ∏_{m≠j} (t_j - t_m)`, `j` 0-based.
    pub fn g(&self, j: usize) -> GaussianRat {
        let mut g = GaussianRat::one();
        for (m, t) in self.ts.iter().enumerate() {
            if m != j {
                g *= &self.ts[j] - t;
            }
        }
        g
    }
}

fn pow(z: &GaussianRat, e: i64) -> GaussianRat {
    let base = if e < 0 { inv(z) } else { z.clone() };
    let mut out = GaussianRat::one();
    for _ in 0..e.unsigned_abs() {
        out *= &base;
    }
    out
}

/// `c_k = Σ_j y_j t_j^{n-1-k} / g_j`; defined for any `k ≥ 0` since `|t_j| = 1`.
pub fn c_coeff(l: &NLineConfig, k: usize) -> GaussianRat {
    let n = l.n() as i64;
    let mut s = GaussianRat::zero();
    for j in 0..l.n() {
        let term = &l.ys[j] * pow(&l.ts[j], n - 1 - k as i64) * inv(&l.g(j));
        s += term;
    }
    s
}

/// Determinant by Gaussian elimination over the field.
fn det(mut m: Vec<Vec<GaussianRat>>) -> GaussianRat {
    let n = m.len();
    let mut d = GaussianRat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return GaussianRat::zero();
        };
        if p != col {
            m.swap(p, col);
            d = -d;
        }
        d *= &m[col][col];
        let piv = inv(&m[col][col]);
        for r in col + 1..n {
            let f = &m[r][col] * &piv;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] = &m[r][c] - v;
            }
        }
    }
    d
}

/// Solves `m a = rhs`.
fn solve(mut m: Vec<Vec<GaussianRat>>, mut rhs: Vec<GaussianRat>) -> Option<Vec<GaussianRat>> {
    let n = m.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        rhs.swap(p, col);
        let piv = inv(&m[col][col]);
        for c in col..n {
            m[col][c] = &m[col][c] * &piv;
        }
        rhs[col] = &rhs[col] * &piv;
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] = &m[r][c] - v;
            }
            let v = &f * &rhs[col];
            rhs[r] = &rhs[r] - v;
        }
    }
    Some(rhs)
}

fn hankel(c: &[GaussianRat], size: usize, offset: usize) -> Vec<Vec<GaussianRat>> {
    (0..size)
        .map(|i| (0..size).map(|j| c[i + j + offset].clone()).collect())
        .collect()
}

/// `p(L) = c_0 + a_1 c_1 + ... + a_{k-1} c_{k-1}` with `(c_{i+j})_{2..} a = -(c_1..c_{k-1})`.
pub fn clifford_point_even(l: &NLineConfig) -> Result<GaussianRat, CliffordError> {
    let n = l.n();
    if n < 2 || !n.is_multiple_of(2) {
        return Err(CliffordError::WrongParity("an even", n));
    }
    let k = n / 2;
    let c: Vec<GaussianRat> = (0..2 * k).map(|i| c_coeff(l, i)).collect();
    let rhs: Vec<GaussianRat> = (1..k).map(|i| -c[i].clone()).collect();
    let a = solve(hankel(&c, k - 1, 2), rhs).ok_or(CliffordError::SingularHankel)?;
    let mut p = c[0].clone();
    for (i, ai) in a.iter().enumerate() {
        p += ai * &c[i + 1];
    }
    Ok(p)
}

/// `(A, B)` with the circle `{A - θB : |θ| = 1}`.
pub fn clifford_circle_odd(l: &NLineConfig) -> Result<(GaussianRat, GaussianRat), CliffordError> {
    let n = l.n();
    if n < 3 || n % 2 != 1 {
        return Err(CliffordError::WrongParity("an odd", n));
    }
    let k = (n - 1) / 2;
    let c: Vec<GaussianRat> = (0..2 * k).map(|i| c_coeff(l, i)).collect();
    // the empty determinant is 1
    let den = det(hankel(&c, k - 1, 2));
    if den.is_zero() {
        return Err(CliffordError::SingularHankel);
    }
    let dinv = inv(&den);
    Ok((det(hankel(&c, k, 0)) * &dinv, det(hankel(&c, k, 1)) * dinv))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactCircle {
    pub center: GaussianRat,
    pub radius_sq: Rat,
}

impl ExactCircle {
    pub fn from_ab(a: &GaussianRat, b: &GaussianRat) -> Self {
        Self {
            center: a.clone(),
            radius_sq: norm(b),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"center": gr_json(&self.center), "radius_sq": rat_to_string(&self.radius_sq)})
    }
}

impl fmt::Display for ExactCircle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "circle(center {}, radius^2 {})", gr_to_string(&self.center), rat_to_string(&self.radius_sq))
    }
}

pub fn on_circle(p: &GaussianRat, c: &ExactCircle) -> bool {
    norm(&(p - &c.center)) == c.radius_sq
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliffordObject {
    Point(GaussianRat),
    Circle(ExactCircle),
}

impl CliffordObject {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            CliffordObject::Point(p) => serde_json::json!({"point": gr_json(p)}),
            CliffordObject::Circle(c) => serde_json::json!({"circle": c.to_json()}),
        }
    }
}

/// The formula side: point for even `n`, circle for odd `n`.
pub fn clifford_formula(l: &NLineConfig) -> Result<CliffordObject, CliffordError> {
    if l.n().is_multiple_of(2) {
        clifford_point_even(l).map(CliffordObject::Point)
    } else {
        let (a, b) = clifford_circle_odd(l)?;
        Ok(CliffordObject::Circle(ExactCircle::from_ab(&a, &b)))
    }
}

/// Solves the real system `a1 x + b1 y = r1`, `a2 x + b2 y = r2`.
fn cramer(a1: &Rat, b1: &Rat, r1: &Rat, a2: &Rat, b2: &Rat, r2: &Rat) -> Option<GaussianRat> {
    let d = a1 * b2 - a2 * b1;
    if d.is_zero() {
        return None;
    }
    Some(Complex::new((r1 * b2 - r2 * b1) / &d, (a1 * r2 - a2 * r1) / d))
}

/// `ℓ_i ∩ ℓ_j` from the real equations `Re(z ȳ) = |y|² / 2`.
pub fn line_intersection(y1: &GaussianRat, y2: &GaussianRat) -> Option<GaussianRat> {
    let half = ratio(1, 2);
    cramer(&y1.re, &y1.im, &(norm(y1) * &half), &y2.re, &y2.im, &(norm(y2) * half))
}

/// Circle through three points via the perpendicular-bisector system.
pub fn circumcircle(p1: &GaussianRat, p2: &GaussianRat, p3: &GaussianRat) -> Option<ExactCircle> {
    let two = rat(2);
    let d2 = p2 - p1;
    let d3 = p3 - p1;
    let center = cramer(
        &(&d2.re * &two),
        &(&d2.im * &two),
        &(norm(p2) - norm(p1)),
        &(&d3.re * &two),
        &(&d3.im * &two),
        &(norm(p3) - norm(p1)),
    )?;
    let radius_sq = norm(&(p1 - &center));
    Some(ExactCircle { center, radius_sq })
}

/// Independent construction by the incidence statements themselves.
pub fn constructive_clifford(l: &NLineConfig) -> Result<CliffordObject, CliffordError> {
    let n = l.n();
    if !(2..=6).contains(&n) {
        return Err(CliffordError::UnsupportedSize(n));
    }
    construct(l)
}

fn construct(l: &NLineConfig) -> Result<CliffordObject, CliffordError> {
    let n = l.n();
    let ys = l.ys();
    if n == 2 {
        return line_intersection(&ys[0], &ys[1])
            .map(CliffordObject::Point)
            .ok_or(CliffordError::GenericityViolation(1, 2));
    }
    if n == 3 {
        let pts = pair_points(l)?;
        return circumcircle(&pts[0], &pts[1], &pts[2])
            .map(CliffordObject::Circle)
            .ok_or(CliffordError::Degenerate("intersection points are collinear"));
    }
    if n.is_multiple_of(2) {
        // C(omit 1) and C(omit 2) both pass through the point of the (n-2)-line omitting both
        let c1 = construct_circle(&l.omit(&[0]))?;
        let c2 = construct_circle(&l.omit(&[1]))?;
        let shared = construct_point(&l.omit(&[0, 1]))?;
        let d = &c2.center - &c1.center;
        if d.is_zero() {
            return Err(CliffordError::Degenerate("concentric subset circles"));
        }
        let rel = &shared - &c1.center;
        let w = &c1.center + &d * rel.conj() * inv(&d.conj());
        return Ok(CliffordObject::Point(w));
    }
    let pts: Vec<GaussianRat> = (0..n).map(|i| construct_point(&l.omit(&[i]))).collect::<Result<_, _>>()?;
    let circle =
        circumcircle(&pts[0], &pts[1], &pts[2]).ok_or(CliffordError::Degenerate("subset points are collinear"))?;
    if pts[3..].iter().all(|p| on_circle(p, &circle)) {
        Ok(CliffordObject::Circle(circle))
    } else {
        Err(CliffordError::NotConcyclic)
    }
}

fn construct_point(l: &NLineConfig) -> Result<GaussianRat, CliffordError> {
    match construct(l)? {
        CliffordObject::Point(p) => Ok(p),
        CliffordObject::Circle(_) => unreachable!("even configurations give points"),
    }
}

fn construct_circle(l: &NLineConfig) -> Result<ExactCircle, CliffordError> {
    match construct(l)? {
        CliffordObject::Circle(c) => Ok(c),
        CliffordObject::Point(_) => unreachable!("odd configurations give circles"),
    }
}

fn pair_points(l: &NLineConfig) -> Result<Vec<GaussianRat>, CliffordError> {
    let ys = l.ys();
    let mut pts = Vec::new();
    for i in 0..ys.len() {
        for j in i + 1..ys.len() {
            pts.push(line_intersection(&ys[i], &ys[j]).ok_or(CliffordError::GenericityViolation(i + 1, j + 1))?);
        }
    }
    Ok(pts)
}

#[derive(Clone, Debug, Serialize)]
pub struct IncidenceCheck {
    pub label: String,
    pub ok: bool,
}

/// Formula against construction, plus the incidence statements with subset objects.
pub fn verify_config(l: &NLineConfig) -> Result<Vec<IncidenceCheck>, CliffordError> {
    let n = l.n();
    let formula = clifford_formula(l)?;
    let built = constructive_clifford(l)?;
    let mut checks = Vec::new();
    let mut push = |label: String, ok: bool| checks.push(IncidenceCheck { label, ok });
    match &formula {
        CliffordObject::Point(p) => {
            push("formula point equals constructed point".into(), Some(p) == point_of(&built));
            if n >= 4 {
                for i in 0..n {
                    let (a, b) = clifford_circle_odd(&l.omit(&[i]))?;
                    push(format!("point on circle omitting line {}", i + 1), on_circle(p, &ExactCircle::from_ab(&a, &b)));
                }
            }
        }
        CliffordObject::Circle(c) => {
            if n == 3 {
                for (k, p) in pair_points(l)?.iter().enumerate() {
                    push(format!("intersection {} on circle", k + 1), on_circle(p, c));
                }
            } else {
                for i in 0..n {
                    let p = clifford_point_even(&l.omit(&[i]))?;
                    push(format!("point omitting line {} on circle", i + 1), on_circle(&p, c));
                }
            }
            push("formula circle equals constructed circle".into(), Some(c) == circle_of(&built));
        }
    }
    Ok(checks)
}

fn point_of(o: &CliffordObject) -> Option<&GaussianRat> {
    match o {
        CliffordObject::Point(p) => Some(p),
        CliffordObject::Circle(_) => None,
    }
}

fn circle_of(o: &CliffordObject) -> Option<&ExactCircle> {
    match o {
        CliffordObject::Circle(c) => Some(c),
        CliffordObject::Point(_) => None,
    }
}

/// A random configuration with small Gaussian-rational `y`s on which both the
/// formula and the construction are defined.
pub fn random_generic_config<R: Rng>(n: usize, rng: &mut R) -> NLineConfig {
    loop {
        let ys: Vec<GaussianRat> = (0..n)
            .map(|_| {
                Complex::new(
                    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
                    ratio(rng.gen_range(-5..=5), rng.gen_range(1..=3)),
                )
            })
            .collect();
        let Ok(l) = NLineConfig::new(ys) else { continue };
        if clifford_formula(&l).is_ok() && constructive_clifford(&l).is_ok() {
            return l;
        }
    }
}

fn to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// SVG figure of the lines, their pairwise intersections and the Clifford object.
pub fn svg(l: &NLineConfig, result: &CliffordObject) -> String {
    let pts: Vec<(f64, f64)> = pair_points(l)
        .unwrap_or_default()
        .iter()
        .map(|p| (to_f64(&p.re), to_f64(&p.im)))
        .collect();
    let mut xs: Vec<f64> = pts.iter().map(|p| p.0).chain([0.0]).collect();
    let mut ys: Vec<f64> = pts.iter().map(|p| p.1).chain([0.0]).collect();
    match result {
        CliffordObject::Point(p) => {
            xs.push(to_f64(&p.re));
            ys.push(to_f64(&p.im));
        }
        CliffordObject::Circle(c) => {
            let r = to_f64(&c.radius_sq).sqrt();
            let (cx, cy) = (to_f64(&c.center.re), to_f64(&c.center.im));
            xs.extend([cx - r, cx + r]);
            ys.extend([cy - r, cy + r]);
        }
    }
    let lo = |v: &[f64]| v.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = |v: &[f64]| v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let span = (hi(&xs) - lo(&xs)).max(hi(&ys) - lo(&ys)).max(1.0);
    let pad = 0.2 * span;
    let (x0, y0, w) = (lo(&xs) - pad, -hi(&ys) - pad, span + 2.0 * pad);
    let stroke = w / 400.0;
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {w} {w}\" width=\"600\" height=\"600\">\n"
    );
    for y in l.ys() {
        let (a, b) = (to_f64(&y.re), to_f64(&y.im));
        let len = (a * a + b * b).sqrt();
        let (mx, my) = (a / 2.0, b / 2.0);
        let (dx, dy) = (-b / len * 2.0 * w, a / len * 2.0 * w);
        s.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"{stroke}\"/>\n",
            mx - dx,
            -(my - dy),
            mx + dx,
            -(my + dy)
        ));
    }
    for (x, y) in &pts {
        s.push_str(&format!("  <circle cx=\"{x}\" cy=\"{}\" r=\"{}\" fill=\"blue\"/>\n", -y, 3.0 * stroke));
    }
    match result {
        CliffordObject::Point(p) => s.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"red\"/>\n",
            to_f64(&p.re),
            -to_f64(&p.im),
            5.0 * stroke
        )),
        CliffordObject::Circle(c) => s.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"red\" stroke-width=\"{stroke}\"/>\n",
            to_f64(&c.center.re),
            -to_f64(&c.center.im),
            to_f64(&c.radius_sq).sqrt()
        )),
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cfg(ys: &[(i64, i64)]) -> NLineConfig {
        NLineConfig::new(ys.iter().map(|&(a, b)| gr(a, b)).collect()).unwrap()
    }

    #[test]
    fn basics() {
        let l = cfg(&[(2, 0), (0, 2)]);
        assert_eq!(l.ts(), &[gr(-1, 0), gr(1, 0)]);
        assert_eq!(c_coeff(&l, 0), gr(1, 1));
        assert_eq!(c_coeff(&l, 1), gr(-1, 1));
        assert_eq!(clifford_point_even(&l).unwrap(), gr(1, 1));
        assert_eq!(constructive_clifford(&l).unwrap(), CliffordObject::Point(gr(1, 1)));
        assert!(matches!(
            NLineConfig::new(vec![gr(2, 0), gr(3, 0)]),
            Err(CliffordError::GenericityViolation(1, 2))
        ));
        assert!(matches!(NLineConfig::new(vec![gr(0, 0)]), Err(CliffordError::ZeroPoint(1))));
        let one = NLineConfig::new(vec![gr(2, 2)]).unwrap();
        let t = &one.ts()[0];
        assert!(norm(t).is_one());
    }

    #[test]
    fn parity_errors() {
        let l = cfg(&[(2, 0), (0, 2), (1, 3)]);
        assert!(clifford_point_even(&l).is_err());
        assert!(clifford_circle_odd(&cfg(&[(2, 0), (0, 2), (1, 3), (-1, 2)])).is_err());
        let (a, b) = clifford_circle_odd(&l).unwrap();
        assert_eq!((a, b), (c_coeff(&l, 0), c_coeff(&l, 1)));
    }

    #[test]
    fn on_circle_examples() {
        let c = ExactCircle {
            center: gr(1, 0),
            radius_sq: rat(1),
        };
        assert!(on_circle(&gr(1, 1), &c));
        assert!(on_circle(&gr(0, 0), &c));
        assert!(!on_circle(&gr(3, 0), &c));
    }

    #[test]
    fn chain_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=6 {
            let l = random_generic_config(n, &mut rng);
            let checks = verify_config(&l).unwrap();
            assert!(checks.iter().all(|c| c.ok), "n={n}: {checks:?}");
        }
    }

    #[test]
    fn parse() {
        assert_eq!(parse_ys("2,0;0,2").unwrap(), vec![gr(2, 0), gr(0, 2)]);
        assert_eq!(parse_ys("1/2,-3").unwrap(), vec![Complex::new(ratio(1, 2), rat(-3))]);
        assert!(parse_ys("2;0").is_err());
    }
}
