//! Divided differences and Demazure-Lusztig operators.

use crate::qt::{rat, CoeffElem, XMonomial, XPoly};

use super::HeckeError;

fn check_index(f: &XPoly, i: usize) -> Result<usize, HeckeError> {
    if i == 0 || i >= f.n() {
        return Err(HeckeError::BadIndex(i, f.n()));
    }
    Ok(i - 1)
}

/// `(x^m - s_i x^m) / (x_i - x_{i+1})` for zero-based `i`, added into `out` with factor `c`.
fn partial_monomial(out: &mut XPoly, m: &XMonomial, i: usize, c: &CoeffElem) {
    let (a, b) = (m.0[i], m.0[i + 1]);
    if a == b {
        return;
    }
    let (hi, lo, c) = if a > b { (a, b, c.clone()) } else { (b, a, -c) };
    let mut e = m.0.clone();
    for k in 0..hi - lo {
        e[i] = lo + k;
        e[i + 1] = hi - 1 - k;
        out.add_term(XMonomial(e.clone()), c.clone());
    }
}

pub(crate) fn partial0(f: &XPoly, i: usize) -> XPoly {
    let mut out = XPoly::zero(f.n());
    for (m, c) in f.terms() {
        partial_monomial(&mut out, m, i, c);
    }
    out
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, `i` in `1..n`.
pub fn apply_partial(f: &XPoly, i: usize) -> Result<XPoly, HeckeError> {
    let i = check_index(f, i)?;
    Ok(partial0(f, i))
}

pub(crate) fn ti0(f: &XPoly, i: usize) -> XPoly {
    let u = CoeffElem::ut();
    let uinv = CoeffElem::monomial(rat(1), 0, -1);
    // (u^{-1} x_i - u x_{i+1}) f
    let mut g = XPoly::zero(f.n());
    for (m, c) in f.terms() {
        let mut e = m.0.clone();
        e[i] += 1;
        g.add_term(XMonomial(e.clone()), c * &uinv);
        e[i] -= 1;
        e[i + 1] += 1;
        g.add_term(XMonomial(e), -&(c * &u));
    }
    let mut out = partial0(&g, i);
    let neg_uinv = -&uinv;
    for (m, c) in f.terms() {
        out.add_term(m.clone(), c * &neg_uinv);
    }
    out
}

/// `t^{1/2} T_i f = -f + ∂_i ((x_i - t x_{i+1}) f)`; keeps polynomial coefficients polynomial.
pub(crate) fn ti_scaled0(f: &XPoly, i: usize) -> XPoly {
    let t = CoeffElem::t();
    let mut g = XPoly::zero(f.n());
    for (m, c) in f.terms() {
        let mut e = m.0.clone();
        e[i] += 1;
        g.add_term(XMonomial(e.clone()), c.clone());
        e[i] -= 1;
        e[i + 1] += 1;
        g.add_term(XMonomial(e), -&(c * &t));
    }
    let mut out = partial0(&g, i);
    for (m, c) in f.terms() {
        out.add_term(m.clone(), -c);
    }
    out
}

/// `T_i f = -t^{-1/2} f + (1 + s_i) (t^{-1/2} - t^{1/2} x_i^{-1} x_{i+1}) / (1 - x_i^{-1} x_{i+1}) f`.
pub fn apply_ti(f: &XPoly, i: usize) -> Result<XPoly, HeckeError> {
    let i = check_index(f, i)?;
    Ok(ti0(f, i))
}

/// `T_w f = T_{i_1} ... T_{i_k} f` for a 1-based word.
pub fn apply_tw(f: &XPoly, word: &[usize]) -> Result<XPoly, HeckeError> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        g = apply_ti(&g, i)?;
    }
    Ok(g)
}
