//! Zeta functions of symmetric products `Σ(n)` of a curve over `F_q`.
//!
//! Everything except [`rh_check`] is exact; Frobenius eigenvalues only ever
//! appear through their power sums.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::qt::{rat, rat_to_string, Rat, UPoly};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("bad numerator: {0}")]
    BadNumerator(String),
    #[error("q must be at least 2, got {0}")]
    BadQ(i64),
    #[error("n must be at least 1")]
    BadN,
    #[error("point counts disagree: log-derivative gives {0}, base change gives {1}")]
    InternalMismatch(String, String),
    #[error("root {root} of F_{k} has modulus {modulus}, expected {expected}")]
    RHViolation {
        k: usize,
        root: String,
        modulus: f64,
        expected: f64,
    },
}

/// `Z_1(t) = P(t) / ((1 - t)(1 - qt))` with `P(t) = ∏ (1 - ρ_i t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveZeta {
    q: i64,
    g: usize,
    numer: UPoly,
}

impl CurveZeta {
    pub fn new(q: i64, coeffs: &[i64]) -> Result<Self, ZetaError> {
        if q < 2 {
            return Err(ZetaError::BadQ(q));
        }
        let mut c = coeffs.to_vec();
        while c.len() > 1 && c.last() == Some(&0) {
            c.pop();
        }
        if c.first() != Some(&1) {
            return Err(ZetaError::BadNumerator("constant term must be 1".into()));
        }
        if !(c.len() - 1).is_multiple_of(2) {
            return Err(ZetaError::BadNumerator(format!("odd degree {}", c.len() - 1)));
        }
        Ok(Self {
            q,
            g: (c.len() - 1) / 2,
            numer: UPoly::from_ints(&c),
        })
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn numer(&self) -> &UPoly {
        &self.numer
    }

    fn qr(&self) -> Rat {
        rat(self.q)
    }

    /// `e_k(ρ)`, read off `P(t) = Σ (-1)^k e_k t^k`.
    fn elementary(&self) -> Vec<Rat> {
        (0..=2 * self.g)
            .map(|k| if k % 2 == 0 { self.numer.coeff(k) } else { -self.numer.coeff(k) })
            .collect()
    }

    /// `p_1(ρ), ..., p_m(ρ)` (index 0 unused).
    pub fn power_sums(&self, m: usize) -> Vec<Rat> {
        power_sums_from_elementary(&self.elementary(), m)
    }

    /// Message when `|p_1(ρ)| > 2g q^{1/2}`.
    pub fn weil_warning(&self) -> Option<String> {
        let p1 = self.power_sums(1)[1].clone();
        let bound_sq = rat(4 * (self.g * self.g) as i64 * self.q);
        (&p1 * &p1 > bound_sq).then(|| {
            format!(
                "|p_1| = {} exceeds the Weil bound 2g*sqrt(q) for g = {}, q = {}",
                rat_to_string(&p1.abs()),
                self.g,
                self.q
            )
        })
    }
}

pub fn curve_from_numerator(q: i64, coeffs: &[i64]) -> Result<CurveZeta, ZetaError> {
    CurveZeta::new(q, coeffs)
}

/// Newton: `p_m = Σ_{i<m} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m`, `e[0] = 1`.
pub fn power_sums_from_elementary(e: &[Rat], m: usize) -> Vec<Rat> {
    let ei = |i: usize| e.get(i).cloned().unwrap_or_else(Rat::zero);
    let mut p = vec![Rat::zero(); m + 1];
    for k in 1..=m {
        let sign = |i: usize| if i % 2 == 1 { rat(1) } else { rat(-1) };
        let mut s = rat(k as i64) * ei(k) * sign(k);
        for i in 1..k {
            s += ei(i) * &p[k - i] * sign(i);
        }
        p[k] = s;
    }
    p
}

/// Inverse Newton: `k e_k = Σ_{i=1}^k (-1)^{i-1} e_{k-i} p_i`.
pub fn elementary_from_power_sums(p: &[Rat], k_max: usize) -> Vec<Rat> {
    let mut e = vec![Rat::zero(); k_max + 1];
    e[0] = Rat::one();
    for k in 1..=k_max {
        let mut s = Rat::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i];
            if i % 2 == 1 {
                s += term;
            } else {
                s -= term;
            }
        }
        e[k] = s / rat(k as i64);
    }
    e
}

/// `∏ (1 - r t)` from the elementary symmetric functions of the `r`.
fn poly_from_elementary(e: &[Rat]) -> UPoly {
    UPoly::from_coeffs(
        e.iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
            .collect(),
    )
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `binom(a, k)` for any integer `a`.
fn gen_binom(a: i64, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= a - i as i64;
        den *= (i + 1) as i64;
    }
    num / den
}

/// `φ_k(t) = ∏_{i_1<...<i_k} (1 - ρ_{i_1}...ρ_{i_k} t)`, with `φ_0 = 1 - t` and `φ_k = 1` outside `0..=2g`.
pub fn phi_k(c: &CurveZeta, k: i64) -> UPoly {
    if k == 0 {
        return UPoly::from_ints(&[1, -1]);
    }
    if k < 0 || k as usize > 2 * c.g {
        return UPoly::one();
    }
    let k = k as usize;
    let count = binom(2 * c.g, k);
    let p = c.power_sums(k * count);
    // power sums of the k-fold products: p_m(Λ^k) = e_k(ρ^m)
    let big: Vec<Rat> = std::iter::once(Rat::zero())
        .chain((1..=count).map(|m| {
            let pm: Vec<Rat> = std::iter::once(Rat::zero()).chain((1..=k).map(|j| p[j * m].clone())).collect();
            elementary_from_power_sums(&pm, k)[k].clone()
        }))
        .collect();
    poly_from_elementary(&elementary_from_power_sums(&big, count))
}

/// `F_k` for `Σ(n)`: `∏_j φ_{k-2j}(q^j t)` for `k ≤ n`, `F_{2n-k}(q^{k-n} t)` above.
pub fn f_k(c: &CurveZeta, n: usize, k: usize) -> UPoly {
    assert!(k <= 2 * n, "F_k needs k <= 2n");
    if k > n {
        return f_k(c, n, 2 * n - k).dilate(&c.qr().pow((k - n) as i32));
    }
    let mut out = UPoly::one();
    for j in 0..=k / 2 {
        out = &out * &phi_k(c, (k - 2 * j) as i64).dilate(&c.qr().pow(j as i32));
    }
    out
}

/// `Z_n = F_1 F_3 ... F_{2n-1} / (F_0 F_2 ... F_{2n})`, factors kept apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZSymFactored {
    pub n: usize,
    pub numerator: Vec<(usize, UPoly)>,
    pub denominator: Vec<(usize, UPoly)>,
}

impl ZSymFactored {
    pub fn factors(&self) -> impl Iterator<Item = &(usize, UPoly)> {
        self.denominator.iter().chain(&self.numerator)
    }

    pub fn expand(&self) -> (UPoly, UPoly) {
        let prod = |v: &[(usize, UPoly)]| v.iter().fold(UPoly::one(), |acc, (_, f)| &acc * f);
        (prod(&self.numerator), prod(&self.denominator))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let side = |v: &[(usize, UPoly)]| {
            v.iter()
                .map(|(k, f)| serde_json::json!({"k": k, "coeffs": coeff_strings(f), "text": f.to_string()}))
                .collect::<Vec<_>>()
        };
        serde_json::json!({"n": self.n, "numerator": side(&self.numerator), "denominator": side(&self.denominator)})
    }
}

fn coeff_strings(f: &UPoly) -> Vec<String> {
    f.coeffs().iter().map(rat_to_string).collect()
}

pub fn z_sym(c: &CurveZeta, n: usize) -> Result<ZSymFactored, ZetaError> {
    if n == 0 {
        return Err(ZetaError::BadN);
    }
    let (mut numerator, mut denominator) = (Vec::new(), Vec::new());
    for k in 0..=2 * n {
        let f = f_k(c, n, k);
        if k % 2 == 1 {
            numerator.push((k, f));
        } else {
            denominator.push((k, f));
        }
    }
    Ok(ZSymFactored { n, numerator, denominator })
}

/// Coefficients `0..len` of `f'/f` as a power series, `f(0) = 1`.
fn log_derivative_series(f: &UPoly, len: usize) -> Vec<Rat> {
    let mut inv = vec![Rat::zero(); len];
    inv[0] = Rat::one();
    for k in 1..len {
        let mut s = Rat::zero();
        for i in 1..=k {
            s -= f.coeff(i) * &inv[k - i];
        }
        inv[k] = s;
    }
    let d = f.derivative();
    (0..len)
        .map(|k| (0..=k).fold(Rat::zero(), |acc, i| acc + d.coeff(i) * &inv[k - i]))
        .collect()
}

/// Route (i): coefficient of `t^{m-1}` in `d/dt log Z_n`.
pub fn count_by_log_derivative(c: &CurveZeta, n: usize, m: usize) -> Result<Rat, ZetaError> {
    let z = z_sym(c, n)?;
    let mut total = Rat::zero();
    for (_, f) in &z.numerator {
        total += &log_derivative_series(f, m)[m - 1];
    }
    for (_, f) in &z.denominator {
        total -= &log_derivative_series(f, m)[m - 1];
    }
    Ok(total)
}

/// Route (ii): coefficient of `t^n` in `Z_1` of the curve over `F_{q^m}`.
pub fn count_by_base_change(c: &CurveZeta, n: usize, m: usize) -> Rat {
    let g2 = 2 * c.g;
    let p = c.power_sums(g2 * m);
    let pm: Vec<Rat> = std::iter::once(Rat::zero()).chain((1..=g2).map(|j| p[j * m].clone())).collect();
    let numer = poly_from_elementary(&elementary_from_power_sums(&pm, g2));
    let qm = c.qr().pow(m as i32);
    // 1 / ((1-t)(1-q^m t)) = Σ_j (1 + q^m + ... + q^{jm}) t^j
    let geom = |j: usize| (0..=j).fold(Rat::zero(), |acc, i| acc + qm.pow(i as i32));
    (0..=n.min(g2)).fold(Rat::zero(), |acc, i| acc + numer.coeff(i) * geom(n - i))
}

/// `Card Σ(n)(F_{q^m})`, the common value of both routes.
pub fn count_points_sym(c: &CurveZeta, n: usize, m: usize) -> Result<BigInt, ZetaError> {
    if n == 0 || m == 0 {
        return Err(ZetaError::BadN);
    }
    let a = count_by_log_derivative(c, n, m)?;
    let b = count_by_base_change(c, n, m);
    if a != b || !a.is_integer() {
        return Err(ZetaError::InternalMismatch(rat_to_string(&a), rat_to_string(&b)));
    }
    Ok(a.to_integer())
}

#[derive(Clone, Debug, Serialize)]
pub struct FeReport {
    pub n: usize,
    pub g: usize,
    /// `(-1)^n binom(2g-2, n)`
    pub exponent: String,
    /// `Z_n(1/(q^n t)) = (-q^{-n/2} t)^e Z_n(t)`
    pub printed_holds: bool,
    /// `Z_n(1/(q^n t)) = (-q^{n/2} t)^e Z_n(t)`
    pub corrected_holds: bool,
    /// `Z_n(1/(q^n t)) / Z_n(t)` when it is a monomial `c t^d`: `(c, d)`
    pub observed_ratio: Option<(String, i64)>,
    pub lhs: String,
    pub rhs_printed: String,
}

/// `t^{deg f} f(1/(s t))`.
fn reflect(f: &UPoly, s: &Rat) -> UPoly {
    let d = f.degree().unwrap_or(0);
    let sinv = s.recip();
    UPoly::from_coeffs((0..=d).map(|i| f.coeff(d - i) * sinv.pow((d - i) as i32)).collect())
}

fn shifted(f: &UPoly, k: usize) -> UPoly {
    f * &UPoly::monomial(Rat::one(), k)
}

/// Checks `Z_n(1/(q^n t)) = (-q^{-n/2} t)^e Z_n(t)`, `e = (-1)^n binom(2g-2, n)`, exactly.
///
/// Both sides are compared as `t^a N~ / D~` against `K t^e N / D` by cross-multiplying.
/// Since `ne` is always even, `K = (-1)^e q^{∓ne/2}` is rational.
pub fn functional_eq_check(c: &CurveZeta, n: usize) -> Result<FeReport, ZetaError> {
    let z = z_sym(c, n)?;
    let (num, den) = z.expand();
    let s = c.qr().pow(n as i32);
    let (rn, rd) = (reflect(&num, &s), reflect(&den, &s));
    // LHS = t^{a} rn / rd
    let a = den.degree().unwrap_or(0) as i64 - num.degree().unwrap_or(0) as i64;
    let e_big: BigInt = gen_binom(2 * c.g as i64 - 2, n) * if n.is_multiple_of(2) { 1 } else { -1 };
    let e = e_big.to_i64().expect("small exponent");
    let holds = |sign: i64| -> bool {
        let ne = n as i64 * e;
        if ne % 2 != 0 {
            return false;
        }
        let mut k = c.qr().pow((sign * ne / 2) as i32);
        if e % 2 != 0 {
            k = -k;
        }
        // rn * den * t^a  ==  k * num * rd * t^e
        let lhs = &rn * &den;
        let rhs = (&num * &rd).scale(&k);
        let shift = a - e;
        if shift >= 0 {
            shifted(&lhs, shift as usize) == rhs
        } else {
            lhs == shifted(&rhs, (-shift) as usize)
        }
    };
    let ratio_poly = |p: &UPoly, q: &UPoly| p.div_exact(q).filter(|r| r.coeffs().iter().filter(|c| !c.is_zero()).count() == 1);
    let observed_ratio = ratio_poly(&(&rn * &den), &(&num * &rd)).map(|r| {
        let d = r.degree().expect("nonzero");
        (rat_to_string(&r.coeff(d)), a + d as i64)
    });
    let observed_ratio = observed_ratio.or_else(|| {
        ratio_poly(&(&num * &rd), &(&rn * &den)).map(|r| {
            let d = r.degree().expect("nonzero");
            (rat_to_string(&r.coeff(d).recip()), a - d as i64)
        })
    });
    let pow_str = |sign: &str| format!("(-q^{{{sign}{n}/2}} t)^({e})");
    Ok(FeReport {
        n,
        g: c.g,
        exponent: e.to_string(),
        printed_holds: holds(-1),
        corrected_holds: holds(1),
        observed_ratio,
        lhs: format!("t^({a}) * ({rn}) / ({rd})"),
        rhs_printed: format!("{} * ({num}) / ({den})", pow_str("-")),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorRoots {
    pub k: usize,
    pub expected_modulus: f64,
    pub moduli: Vec<f64>,
    pub max_rel_err: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RhReport {
    pub n: usize,
    pub tol: f64,
    pub factors: Vec<FactorRoots>,
    pub ok: bool,
    pub weil_warning: Option<String>,
}

/// All roots of `p` by Aberth iteration; `p` should be square-free.
pub fn aberth_roots(p: &[f64]) -> Vec<Complex64> {
    let d = p.len() - 1;
    if d == 0 {
        return Vec::new();
    }
    let lead = p[d];
    let c: Vec<f64> = p.iter().map(|a| a / lead).collect();
    // Cauchy-type radius for the initial circle
    let r = 1.0 + c[..d].iter().map(|a| a.abs()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|j| Complex64::from_polar(0.5 * r, 2.0 * std::f64::consts::PI * (j as f64 + 0.25) / d as f64))
        .collect();
    let eval = |x: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            dv = dv * x + v;
            v = v * x + a;
        }
        (v, dv)
    };
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for i in 0..d {
            let (v, dv) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / dv;
            let s: Complex64 = (0..d).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            z[i] -= w;
            moved = moved.max(w.norm() / z[i].norm().max(1e-300));
        }
        if moved < 1e-15 {
            break;
        }
    }
    // one Newton polish per root
    for zi in &mut z {
        let (v, dv) = eval(*zi);
        if dv.norm() > 0.0 {
            *zi -= v / dv;
        }
    }
    z
}

/// Every root of every `F_k` has modulus `q^{-k/2}`; checked numerically on square-free parts.
pub fn rh_check(c: &CurveZeta, n: usize, tol: f64) -> Result<RhReport, ZetaError> {
    let z = z_sym(c, n)?;
    let mut factors = Vec::new();
    let mut ok = true;
    for (k, f) in z.factors() {
        let sf = f.squarefree();
        let coeffs: Vec<f64> = sf.coeffs().iter().map(|a| a.to_f64().unwrap_or(f64::NAN)).collect();
        let roots = aberth_roots(&coeffs);
        let expected = (c.q as f64).powf(-(*k as f64) / 2.0);
        let moduli: Vec<f64> = roots.iter().map(|r| r.norm()).collect();
        let max_rel_err = moduli.iter().map(|m| (m - expected).abs() / expected).fold(0.0, f64::max);
        if !(max_rel_err <= tol) {
            ok = false;
        }
        factors.push(FactorRoots {
            k: *k,
            expected_modulus: expected,
            moduli,
            max_rel_err,
        });
    }
    factors.sort_by_key(|f| f.k);
    Ok(RhReport {
        n,
        tol,
        factors,
        ok,
        weil_warning: c.weil_warning(),
    })
}

/// Like [`rh_check`] but turns the first offending root into an error.
pub fn rh_assert(c: &CurveZeta, n: usize, tol: f64) -> Result<RhReport, ZetaError> {
    let rep = rh_check(c, n, tol)?;
    for f in &rep.factors {
        for m in &f.moduli {
            if !((m - f.expected_modulus).abs() / f.expected_modulus <= tol) {
                return Err(ZetaError::RHViolation {
                    k: f.k,
                    root: format!("|root| = {m}"),
                    modulus: *m,
                    expected: f.expected_modulus,
                });
            }
        }
    }
    Ok(rep)
}

/// Brute-force point counts of `y^2 = f(x)` over `F_p` and `F_{p^2}`, odd `p`.
///
/// Enough to pin down `P(t)` for genus at most 2. Not a general point counter.
pub mod pointcount {
    use super::{CurveZeta, ZetaError};

    fn nonresidue(p: i64) -> i64 {
        (2..p).find(|&a| (1..p).all(|y| (y * y - a).rem_euclid(p) != 0)).expect("odd prime")
    }

    /// `a + b w` with `w^2 = nr`.
    #[derive(Clone, Copy, PartialEq, Eq, Hash)]
    struct Fp2 {
        a: i64,
        b: i64,
    }

    fn mul(x: Fp2, y: Fp2, p: i64, nr: i64) -> Fp2 {
        Fp2 {
            a: (x.a * y.a + nr * x.b % p * y.b).rem_euclid(p),
            b: (x.a * y.b + x.b * y.a).rem_euclid(p),
        }
    }

    fn eval(f: &[i64], x: Fp2, p: i64, nr: i64) -> Fp2 {
        f.iter().rev().fold(Fp2 { a: 0, b: 0 }, |acc, &c| {
            let m = mul(acc, x, p, nr);
            Fp2 { a: (m.a + c).rem_euclid(p), b: m.b }
        })
    }

    fn points_at_infinity(f: &[i64], p: i64, over_square: bool) -> usize {
        let d = f.len() - 1;
        if d % 2 == 1 {
            return 1;
        }
        // two points if the leading coefficient is a square, none otherwise
        let lead = f[d].rem_euclid(p);
        if over_square || (0..p).any(|y| (y * y - lead).rem_euclid(p) == 0) {
            2
        } else {
            0
        }
    }

    /// `(N_1, N_2)` for the smooth model of `y^2 = f(x)`, `f` low degree first.
    pub fn count_hyperelliptic(p: i64, f: &[i64]) -> (usize, usize) {
        let nr = nonresidue(p);
        let mut squares = std::collections::HashMap::new();
        for a in 0..p {
            for b in 0..p {
                let y = Fp2 { a, b };
                *squares.entry(mul(y, y, p, nr)).or_insert(0usize) += 1;
            }
        }
        let mut n1 = points_at_infinity(f, p, false);
        let mut n2 = points_at_infinity(f, p, true);
        for a in 0..p {
            let v = eval(f, Fp2 { a, b: 0 }, p, nr);
            n1 += (0..p).filter(|y| (y * y - v.a).rem_euclid(p) == 0).count();
            for b in 0..p {
                n2 += squares.get(&eval(f, Fp2 { a, b }, p, nr)).copied().unwrap_or(0);
            }
        }
        (n1, n2)
    }

    /// `P(t)` of a genus 1 or 2 curve from `N_1` (and `N_2`).
    pub fn numerator_from_counts(q: i64, g: usize, n1: usize, n2: usize) -> Result<CurveZeta, ZetaError> {
        let p1 = q + 1 - n1 as i64;
        match g {
            1 => CurveZeta::new(q, &[1, -p1, q]),
            2 => {
                let p2 = q * q + 1 - n2 as i64;
                let e2 = (p1 * p1 - p2) / 2;
                CurveZeta::new(q, &[1, -p1, e2, -q * p1, q * q])
            }
            _ => Err(ZetaError::BadNumerator(format!("genus {g} needs more counts"))),
        }
    }
}
