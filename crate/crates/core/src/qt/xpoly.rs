//! Sparse Laurent polynomials in `x_1..x_n` over [`CoeffElem`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::CoeffElem;
use super::QtError;

/// Exponent vector; negative entries are allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XMonomial(pub Vec<i32>);

impl XMonomial {
    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self(e)
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// Sparse Laurent polynomial; the map never stores zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XPoly {
    n: usize,
    terms: BTreeMap<XMonomial, CoeffElem>,
}

impl XPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, CoeffElem::one())
    }

    pub fn constant(n: usize, c: CoeffElem) -> Self {
        Self::term(XMonomial::one(n), c)
    }

    pub fn term(m: XMonomial, c: CoeffElem) -> Self {
        let mut out = Self::zero(m.len());
        out.add_term(m, c);
        out
    }

    /// `x^exps` with coefficient 1.
    pub fn monomial(exps: &[i32]) -> Self {
        Self::term(XMonomial(exps.to_vec()), CoeffElem::one())
    }

    /// The variable `x_{i+1}` (zero-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        Self::term(XMonomial::var(n, i), CoeffElem::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (XMonomial, CoeffElem)>>(
        n: usize,
        it: I,
    ) -> Result<Self, QtError> {
        let mut out = Self::zero(n);
        for (m, c) in it {
            if m.len() != n {
                return Err(QtError::DimensionMismatch(n, m.len()));
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    pub(crate) fn add_term(&mut self, m: XMonomial, c: CoeffElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&XMonomial, &CoeffElem)> {
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

    pub fn coeff(&self, exps: &[i32]) -> CoeffElem {
        self.terms
            .get(&XMonomial(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    fn check_dim(&self, other: &Self) -> Result<(), QtError> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(QtError::DimensionMismatch(self.n, other.n))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, QtError> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, QtError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, QtError> {
        self.check_dim(other)?;
        let mut out = Self::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.mul(b), x * y);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CoeffElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        if c.is_one() {
            return self.clone();
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the monomial `x^exps`.
    pub fn shift(&self, exps: &[i32]) -> Self {
        let m = XMonomial(exps.to_vec());
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(a, c)| (a.mul(&m), c.clone())).collect(),
        }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn try_map_coeffs<F>(&self, mut f: F) -> Result<Self, QtError>
    where
        F: FnMut(&CoeffElem) -> Result<CoeffElem, QtError>,
    {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }

    /// `x_i -> scalar_i * x_{target_i}`; targets are zero-based.
    pub fn substitute(&self, images: &[(CoeffElem, usize)]) -> Result<Self, QtError> {
        if images.len() != self.n {
            return Err(QtError::DimensionMismatch(self.n, images.len()));
        }
        if let Some(&(_, j)) = images.iter().find(|(_, j)| *j >= self.n) {
            return Err(QtError::IndexOutOfRange(j));
        }
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let mut e = vec![0i32; self.n];
            let mut coeff = c.clone();
            for (i, &k) in m.0.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let (s, j) = &images[i];
                e[*j] += k;
                if !s.is_one() {
                    coeff = &coeff * &s.pow(k as i64)?;
                }
            }
            out.add_term(XMonomial(e), coeff);
        }
        Ok(out)
    }

    /// Evaluates the coefficients at `u_q -> uq`, `u_t -> ut` (`None` keeps the generator).
    pub fn specialize(
        &self,
        uq: Option<&CoeffElem>,
        ut: Option<&CoeffElem>,
    ) -> Result<Self, QtError> {
        self.try_map_coeffs(|c| c.specialize(uq, ut))
    }

    /// `x_i -> x_{w(i)}`, with `w` a zero-based permutation in one-line form,
    /// so that `(vw).f = v.(w.f)`.
    pub fn permute(&self, w: &[usize]) -> Self {
        assert_eq!(w.len(), self.n, "permutation length");
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0i32; self.n];
                    for (i, &k) in m.0.iter().enumerate() {
                        e[w[i]] = k;
                    }
                    (XMonomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// The simple transposition `s_{i+1}` swapping `x_{i+1}` and `x_{i+2}` (zero-based `i`).
    pub fn swap(&self, i: usize) -> Self {
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.swap(i, i + 1);
                    (XMonomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Per-variable minimum and maximum exponents; `None` for zero.
    pub fn degree_bounds(&self) -> Option<(Vec<i32>, Vec<i32>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for m in it {
            for (k, &e) in m.0.iter().enumerate() {
                lo[k] = lo[k].min(e);
                hi[k] = hi[k].max(e);
            }
        }
        Some((lo, hi))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|m| m.0.iter().all(|&e| e >= 0))
    }

    pub fn leading(&self) -> Option<(&XMonomial, &CoeffElem)> {
        self.terms.iter().next_back()
    }

    /// `h` with `self = g * h`, by lexicographic long division.
    ///
    /// The quotient lives in the polynomial ring when both operands are
    /// polynomials and in the Laurent ring otherwise. A quotient term outside
    /// the per-variable degree window `[lo(f) - lo(g), hi(f) - hi(g)]` proves
    /// inexactness.
    pub fn divide_exact(&self, g: &Self) -> Result<Self, QtError> {
        self.check_dim(g)?;
        let Some((gm, gc)) = g.leading() else {
            return Err(QtError::DivisionByZero);
        };
        let (gm, gc_inv) = (gm.clone(), gc.inv()?);
        let Some((flo, fhi)) = self.degree_bounds() else {
            return Ok(Self::zero(self.n));
        };
        let (glo, ghi) = g.degree_bounds().expect("nonzero divisor");
        let laurent = !(self.is_polynomial() && g.is_polynomial());
        let lo: Vec<i32> = flo
            .iter()
            .zip(&glo)
            .map(|(a, b)| if laurent { a - b } else { (a - b).max(0) })
            .collect();
        let hi: Vec<i32> = fhi.iter().zip(&ghi).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(QtError::InexactDivision);
        }
        let outside = |m: &XMonomial| m.0.iter().enumerate().any(|(k, &e)| e < lo[k] || e > hi[k]);
        if g.len() == 1 {
            let inv = XMonomial(gm.0.iter().map(|e| -e).collect());
            let mut quot = Self::zero(self.n);
            for (m, c) in &self.terms {
                let m = m.mul(&inv);
                if outside(&m) {
                    return Err(QtError::InexactDivision);
                }
                quot.terms.insert(m, c * &gc_inv);
            }
            return Ok(quot);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero(self.n);
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(&gm);
            if outside(&m) {
                return Err(QtError::InexactDivision);
            }
            let c = rc * &gc_inv;
            for (b, y) in &g.terms {
                rem.add_term(b.mul(&m), -&(y * &c));
            }
            quot.add_term(m, c);
        }
        Ok(quot)
    }

    /// Symmetric under every adjacent transposition.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap(i) == *self)
    }

    /// LaTeX with terms in ascending lexicographic order, e.g. `x_2 + \frac{1-t}{1-qt}x_1`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.leading_sign_negative();
            let mag = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = latex_monomial(m);
            let coeff = if mag.den().is_one() && mag.num().len() > 1 && !mono.is_empty() {
                format!("({})", mag.to_latex())
            } else {
                mag.to_latex()
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

fn latex_monomial(m: &XMonomial) -> String {
    let mut s = String::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let idx = i + 1;
        if idx < 10 {
            s.push_str(&format!("x_{idx}"));
        } else {
            s.push_str(&format!("x_{{{idx}}}"));
        }
        if e != 1 {
            s.push_str(&format!("^{{{e}}}"));
        }
    }
    s
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        self.checked_add(rhs).expect("XPoly dimension mismatch")
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self.checked_sub(rhs).expect("XPoly dimension mismatch")
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        self.checked_mul(rhs).expect("XPoly dimension mismatch")
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_latex())
    }
}
