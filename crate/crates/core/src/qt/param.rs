//! Polynomials in the square-root parameters `u_q`, `u_t` (`q = u_q^2`, `t = u_t^2`).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rat::{rat, rat_to_string, Rat};
use super::upoly::UPoly;

/// Exponent pair `(e_uq, e_ut)`; the derived `Ord` is the lexicographic order
/// used for canonical printing and denominator normalization.
pub type ParamExp = (u32, u32);

/// Sparse polynomial in `u_q`, `u_t` with rational coefficients, no zero entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<ParamExp, Rat>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::term(c, 0, 0)
    }

    /// `c u_q^eq u_t^et`.
    pub fn term(c: Rat, eq: u32, et: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eq, et), c);
        }
        Self { terms }
    }

    pub fn uq() -> Self {
        Self::term(Rat::one(), 1, 0)
    }

    pub fn ut() -> Self {
        Self::term(Rat::one(), 0, 1)
    }

    /// `q = u_q^2`.
    pub fn q() -> Self {
        Self::term(Rat::one(), 2, 0)
    }

    /// `t = u_t^2`.
    pub fn t() -> Self {
        Self::term(Rat::one(), 0, 2)
    }

    pub fn from_terms<I: IntoIterator<Item = (ParamExp, Rat)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: ParamExp, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Terms in ascending lexicographic order of `(e_uq, e_ut)`.
    pub fn terms(&self) -> impl Iterator<Item = (&ParamExp, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    /// `Some((c, eq, et))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(&Rat, u32, u32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(a, b), c) = self.terms.iter().next()?;
        Some((c, a, b))
    }

    /// Lowest term in lexicographic order.
    pub fn lowest(&self) -> Option<(&ParamExp, &Rat)> {
        self.terms.iter().next()
    }

    /// Highest term in lexicographic order.
    pub fn leading(&self) -> Option<(&ParamExp, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, a)| (e, a * c)).collect(),
        }
    }

    pub fn shift(&self, eq: u32, et: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + eq, b + et), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> ParamExp {
        let mut it = self.terms.keys();
        let Some(&first) = it.next() else {
            return (0, 0);
        };
        it.fold(first, |(a, b), &(c, d)| (a.min(c), b.min(d)))
    }

    pub fn max_exponents(&self) -> ParamExp {
        self.terms
            .keys()
            .fold((0, 0), |(a, b), &(c, d)| (a.max(c), b.max(d)))
    }

    /// Divides out `u_q^eq u_t^et`; the caller guarantees every term is divisible.
    pub fn unshift(&self, eq: u32, et: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a - eq, b - et), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient by lexicographic long division, `None` if not divisible.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (&(dq, dt), dlc) = d.leading()?;
        if d.terms.len() == 1 {
            let inv = dlc.recip();
            let mut out = BTreeMap::new();
            for (&(a, b), c) in &self.terms {
                if a < dq || b < dt {
                    return None;
                }
                out.insert((a - dq, b - dt), c * &inv);
            }
            return Some(Self { terms: out });
        }
        let inv = dlc.recip();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&(a, b), c)) = rem.leading() {
            if a < dq || b < dt {
                return None;
            }
            let e = (a - dq, b - dt);
            let m = c * &inv;
            for (&(x, y), dc) in &d.terms {
                rem.add_term((x + e.0, y + e.1), -(dc * &m));
            }
            quot.add_term(e, m);
        }
        Some(quot)
    }

    /// Greatest common divisor, normalized so its lowest term has coefficient one.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let (a0, a1) = self.min_exponents();
        let (b0, b1) = other.min_exponents();
        let mono = (a0.min(b0), a1.min(b1));
        let a = self.unshift(a0, a1);
        let b = other.unshift(b0, b1);
        let core = if a.is_constant() || b.is_constant() {
            Self::one()
        } else if a == b {
            a
        } else if a.len() == 1 || b.len() == 1 {
            // a monomial with trivial monomial content is a constant
            Self::one()
        } else {
            recursive_gcd(&a, &b)
        };
        core.shift(mono.0, mono.1).normalized()
    }

    /// Least common multiple, normalized like [`ParamPoly::gcd`].
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        (self * &other.div_exact(&g).expect("gcd divides")).normalized()
    }

    /// Divides by the coefficient of the lowest term.
    pub fn normalized(&self) -> Self {
        match self.lowest() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Evaluates at rational `u_q`, `u_t`.
    pub fn eval_rat(&self, uq: &Rat, ut: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * pow_rat(uq, a) * pow_rat(ut, b);
        }
        acc
    }

    /// View as a polynomial in `u_t` with coefficients in `Q[u_q]`.
    fn to_recursive(&self) -> Vec<UPoly> {
        let (_, maxt) = self.max_exponents();
        let mut rows: Vec<Vec<Rat>> = vec![Vec::new(); maxt as usize + 1];
        for (&(a, b), c) in &self.terms {
            let row = &mut rows[b as usize];
            if row.len() <= a as usize {
                row.resize(a as usize + 1, Rat::zero());
            }
            row[a as usize] = c.clone();
        }
        rows.into_iter().map(UPoly::from_coeffs).collect()
    }

    fn from_recursive(rows: &[UPoly]) -> Self {
        let mut out = Self::zero();
        for (b, row) in rows.iter().enumerate() {
            for (a, c) in row.coeffs().iter().enumerate() {
                out.add_term((a as u32, b as u32), c.clone());
            }
        }
        out
    }
}

fn pow_rat(x: &Rat, e: u32) -> Rat {
    num_traits::pow(x.clone(), e as usize)
}

fn trim(rows: &mut Vec<UPoly>) {
    while rows.last().is_some_and(|r| r.is_zero()) {
        rows.pop();
    }
}

fn content(rows: &[UPoly]) -> UPoly {
    let mut g = UPoly::zero();
    for r in rows {
        if r.is_zero() {
            continue;
        }
        g = g.gcd(r);
        if g.is_one() {
            break;
        }
    }
    g
}

fn primitive(rows: &[UPoly]) -> (UPoly, Vec<UPoly>) {
    let c = content(rows);
    if c.is_zero() {
        return (c, Vec::new());
    }
    if c.is_one() {
        // still rescale so the leading coefficient's leading rational is one
        let lc = rows.last().and_then(|r| r.leading()).cloned();
        let rows = match lc {
            Some(lc) if !lc.is_one() => rows.iter().map(|r| r.scale(&lc.recip())).collect(),
            _ => rows.to_vec(),
        };
        return (c, rows);
    }
    let pp = rows
        .iter()
        .map(|r| r.div_exact(&c).expect("content divides every coefficient"))
        .collect::<Vec<_>>();
    let lc = pp.last().and_then(|r| r.leading()).cloned();
    let pp = match lc {
        Some(lc) if !lc.is_one() => pp.iter().map(|r| r.scale(&lc.recip())).collect(),
        _ => pp,
    };
    (c, pp)
}

/// Pseudo-remainder of `a` by `b` in `Q[u_q][u_t]`.
fn prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r: Vec<UPoly> = a.to_vec();
    trim(&mut r);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let shift = dr - db;
        for row in r.iter_mut() {
            *row = &*row * lcb;
        }
        for (j, bj) in b.iter().enumerate() {
            let sub = &lcr * bj;
            r[shift + j] = &r[shift + j] - &sub;
        }
        debug_assert!(r[dr].is_zero());
        trim(&mut r);
    }
    r
}

fn recursive_gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
    let ra = a.to_recursive();
    let rb = b.to_recursive();
    let (ca, mut pa) = primitive(&ra);
    let (cb, mut pb) = primitive(&rb);
    let c = ca.gcd(&cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    let g = loop {
        if pb.is_empty() {
            break pa;
        }
        if pb.len() == 1 {
            break vec![UPoly::one()];
        }
        let r = prem(&pa, &pb);
        let (_, pr) = primitive(&r);
        pa = pb;
        pb = pr;
    };
    let g: Vec<UPoly> = g.iter().map(|row| row * &c).collect();
    ParamPoly::from_recursive(&g)
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        if let Some((c, a, b)) = rhs.as_monomial() {
            return self.shift(a, b).scale(c);
        }
        if let Some((c, a, b)) = self.as_monomial() {
            return rhs.shift(a, b).scale(c);
        }
        let mut out = ParamPoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term((a + c, b + d), x * y);
            }
        }
        out
    }
}

/// Writes `u_q^a u_t^b` as `q^{a/2} t^{b/2}` without multiplication signs,
/// e.g. `q`, `qt^{3/2}`, `t^{1/2}`. Empty string for the unit monomial.
pub(crate) fn latex_param_monomial(a: u32, b: u32) -> String {
    fn one(sym: &str, e: u32) -> String {
        match e {
            0 => String::new(),
            2 => sym.to_string(),
            e if e % 2 == 0 => format!("{sym}^{{{}}}", e / 2),
            e => format!("{sym}^{{{e}/2}}"),
        }
    }
    format!("{}{}", one("q", a), one("t", b))
}

impl ParamPoly {
    /// LaTeX rendering in ascending lexicographic order, e.g. `1-qt`, `1+q`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let mono = latex_param_monomial(a, b);
            let coeff = if mag.denom().is_one() {
                mag.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom())
            };
            if mono.is_empty() {
                s.push_str(&coeff);
            } else {
                if !mag.is_one() {
                    s.push_str(&coeff);
                }
                s.push_str(&mono);
            }
        }
        s
    }
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", rat_to_string(c))?;
            if a > 0 {
                write!(f, "*uq^{a}")?;
            }
            if b > 0 {
                write!(f, "*ut^{b}")?;
            }
        }
        Ok(())
    }
}

/// `1 - c q^a t^b` style helper used throughout: `1 + coeff * u_q^eq u_t^et`.
pub fn one_plus(coeff: i64, eq: u32, et: u32) -> ParamPoly {
    &ParamPoly::one() + &ParamPoly::term(rat(coeff), eq, et)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_(c: i64, a: u32, b: u32) -> ParamPoly {
        ParamPoly::term(rat(c), a, b)
    }

    #[test]
    fn exact_division() {
        // (1 - qt)(1 + q) / (1 + q)
        let a = one_plus(-1, 2, 2);
        let b = one_plus(1, 2, 0);
        let p = &a * &b;
        assert_eq!(p.div_exact(&b).unwrap(), a);
        assert!(a.div_exact(&b).is_none());
    }

    #[test]
    fn gcd_finds_common_factor() {
        let f1 = one_plus(-1, 0, 2); // 1 - t
        let f2 = one_plus(1, 2, 0); // 1 + q
        let f3 = one_plus(-1, 2, 2); // 1 - qt
        let a = &(&f1 * &f2) * &t_(3, 1, 0);
        let b = &(&f1 * &f3) * &t_(2, 2, 1);
        assert_eq!(a.gcd(&b), (&f1 * &ParamPoly::uq()).normalized());
        assert_eq!(f2.gcd(&f3), ParamPoly::one());
    }

    #[test]
    fn gcd_with_mixed_factors() {
        // (uq - ut)^2 (1 + uq ut) vs (uq - ut)(1 - uq ut)
        let d = &ParamPoly::uq() - &ParamPoly::ut();
        let a = &(&d * &d) * &one_plus(1, 1, 1);
        let b = &d * &one_plus(-1, 1, 1);
        let g = a.gcd(&b);
        assert!(g.div_exact(&d).is_some() && d.div_exact(&g).is_some());
    }

    #[test]
    fn latex_forms() {
        assert_eq!(one_plus(-1, 2, 2).to_latex(), "1-qt");
        assert_eq!(one_plus(1, 2, 0).to_latex(), "1+q");
        assert_eq!(t_(1, 0, 1).to_latex(), "t^{1/2}");
        assert_eq!(t_(-2, 4, 3).to_latex(), "-2q^{2}t^{3/2}");
    }
}
