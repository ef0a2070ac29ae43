//! Antisymmetrizations `A_μ`, `a_μ`, the Weyl character formula quotient, and Hall-Littlewood `P_λ(x;t)`.

use crate::qt::{rat, CoeffElem, ParamPoly, XMonomial, XPoly};
use crate::tableaux::Partition;

use super::emac::{e_poly, EMemo};
use super::operators::ti_scaled0;
use super::perm::{bruhat_levels, length};
use super::HeckeError;

/// `δ = (n-1, ..., 1, 0)`.
pub fn delta(n: usize) -> Vec<usize> {
    (0..n).rev().collect()
}

fn check_strict(mu: &[usize]) -> Result<(), HeckeError> {
    if mu.windows(2).all(|w| w[0] > w[1]) {
        Ok(())
    } else {
        Err(HeckeError::NotStrictlyDecreasing(mu.to_vec()))
    }
}

fn shape_plus_delta(lam: &Partition, n: usize) -> Result<Vec<usize>, HeckeError> {
    if lam.len() > n {
        return Err(HeckeError::ShapeTooLong(lam.len(), n));
    }
    Ok(lam.padded(n).iter().zip(delta(n)).map(|(a, b)| a + b).collect())
}

/// `A_μ = Σ_w (-t^{-1/2})^{ℓ(w)-ℓ(w_0)} T_w E_μ` for strictly decreasing `μ`.
///
/// With `T'_i = t^{1/2} T_i` this is `t^{-ℓ(w_0)/2} Σ_w (-t)^{ℓ(w_0)-ℓ(w)} T'_w E_μ`;
/// the sum is formed on `D E_μ` for a common denominator `D` so that every
/// intermediate coefficient is a polynomial.
pub fn ferm_a(mu: &[usize], memo: &mut EMemo) -> Result<XPoly, HeckeError> {
    let (total, den) = ferm_a_scaled(mu, memo)?;
    let scale_den = den.shift(0, (mu.len() * mu.len().saturating_sub(1) / 2) as u32);
    Ok(total.try_map_coeffs(|c| CoeffElem::from_parts(c.num().clone(), &scale_den * c.den()))?)
}

/// `(S, D)` with `A_μ = t^{-ℓ(w_0)/2} S / D` and `S` polynomial in the parameters.
fn ferm_a_scaled(mu: &[usize], memo: &mut EMemo) -> Result<(XPoly, ParamPoly), HeckeError> {
    check_strict(mu)?;
    let n = mu.len();
    let top = n * n.saturating_sub(1) / 2;
    let e = e_poly(mu, memo);
    let den = e
        .terms()
        .fold(ParamPoly::one(), |acc, (_, c)| acc.lcm(c.den()));
    let dc = CoeffElem::from_poly(den.clone());
    let e = e.scale(&dc);
    let mut prev = vec![e.clone()];
    let mut total = XPoly::zero(n);
    for (len, level) in bruhat_levels(n).into_iter().enumerate() {
        let cur: Vec<XPoly> = if len == 0 {
            vec![e.clone()]
        } else {
            level.iter().map(|(_, i, parent)| ti_scaled0(&prev[*parent], *i)).collect()
        };
        let k = (top - len) as u32;
        let sign = if k.is_multiple_of(2) { 1 } else { -1 };
        let c = CoeffElem::from_poly(ParamPoly::term(rat(sign), 0, 2 * k));
        for f in &cur {
            total = &total + &f.scale(&c);
        }
        prev = cur;
    }
    Ok((total, den))
}

/// `a_μ = Σ_w (-1)^{ℓ(w)-ℓ(w_0)} w x^μ` for strictly decreasing `μ`.
pub fn classical_a(mu: &[usize]) -> Result<XPoly, HeckeError> {
    check_strict(mu)?;
    let n = mu.len();
    let top = n * n.saturating_sub(1) / 2;
    let xm = XPoly::monomial(&mu.iter().map(|&m| m as i32).collect::<Vec<_>>());
    let mut out = XPoly::zero(n);
    for level in bruhat_levels(n) {
        for (w, _, _) in level {
            let sign = if (length(&w) + top).is_multiple_of(2) { 1 } else { -1 };
            out = &out + &xm.permute(&w).scale(&CoeffElem::from_int(sign));
        }
    }
    Ok(out)
}

/// `A_{λ+δ} / A_δ` followed by `t -> t q^{-1}`, i.e. `P_λ(q,t)`.
pub fn wcf_p(lam: &Partition, n: usize, memo: &mut EMemo) -> Result<XPoly, HeckeError> {
    let mu = shape_plus_delta(lam, n)?;
    // the t^{-ℓ(w_0)/2} factors cancel
    let (num, dn) = ferm_a_scaled(&mu, memo)?;
    let (den, dd) = ferm_a_scaled(&delta(n), memo)?;
    let ratio = CoeffElem::from_parts(dd, dn)?;
    let quot = num.divide_exact(&den)?.scale(&ratio);
    let ut_img = CoeffElem::monomial(rat(1), -1, 1);
    Ok(quot.specialize(None, Some(&ut_img))?)
}

/// `∏_{i<j} (x_i - c x_j)`, or `∏_{i<j} (x_j - c x_i)` when `reversed`.
pub fn vandermonde_like(n: usize, c: &CoeffElem, reversed: bool) -> XPoly {
    let mut out = XPoly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = if reversed { (j, i) } else { (i, j) };
            let f = &XPoly::var(n, a) - &XPoly::var(n, b).scale(c);
            out = &out * &f;
        }
    }
    out
}

/// Hall-Littlewood `P_λ(x;t)`, normalized to be monic in `x^λ`.
pub fn hall_littlewood(lam: &Partition, n: usize) -> Result<XPoly, HeckeError> {
    if lam.len() > n {
        return Err(HeckeError::ShapeTooLong(lam.len(), n));
    }
    let e: Vec<i32> = lam.padded(n).iter().map(|&p| p as i32).collect();
    let base = &XPoly::monomial(&e) * &vandermonde_like(n, &CoeffElem::t(), false);
    let mut num = XPoly::zero(n);
    for level in bruhat_levels(n) {
        for (w, _, _) in level {
            let sign = if length(&w).is_multiple_of(2) { 1 } else { -1 };
            num = &num + &base.permute(&w).scale(&CoeffElem::from_int(sign));
        }
    }
    let p = num.divide_exact(&vandermonde_like(n, &CoeffElem::one(), false))?;
    let lead = p.coeff(&e);
    Ok(p.scale(&lead.inv()?))
}

/// How a computed antisymmetrization matches a product form: `value = unit * product`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFactor {
    pub reversed: bool,
    pub unit: CoeffElem,
}

impl ProductFactor {
    /// `(sign, k)` with `unit = sign * u_t^k`.
    pub fn sign_and_power(&self) -> Option<(i64, i64)> {
        let (c, eq, et) = self.unit.as_monomial()?;
        if eq != 0 {
            return None;
        }
        if c == rat(1) {
            Some((1, et))
        } else if c == rat(-1) {
            Some((-1, et))
        } else {
            None
        }
    }
}

/// Matches `value` against `∏(x_i - c x_j)` and its index reversal up to a unit `±u_t^k`.
pub fn match_product_form(value: &XPoly, c: &CoeffElem) -> Option<ProductFactor> {
    let n = value.n();
    for reversed in [false, true] {
        let Ok(q) = value.divide_exact(&vandermonde_like(n, c, reversed)) else {
            continue;
        };
        if q.len() != 1 {
            continue;
        }
        let (m, unit) = q.terms().next()?;
        if m != &XMonomial::one(n) {
            continue;
        }
        let pf = ProductFactor {
            reversed,
            unit: unit.clone(),
        };
        if pf.sign_and_power().is_some() {
            return Some(pf);
        }
    }
    None
}

/// The observed unit relating `A_δ` to `∏_{i<j}(x_i - t x_j)`.
pub fn a_delta_factor(n: usize, memo: &mut EMemo) -> Result<Option<ProductFactor>, HeckeError> {
    let a = ferm_a(&delta(n), memo)?;
    Ok(match_product_form(&a, &CoeffElem::t()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::one_plus;

    fn u() -> CoeffElem {
        CoeffElem::ut()
    }

    #[test]
    fn fermionic_two_variables() {
        let mut memo = EMemo::new();
        let a10 = ferm_a(&[1, 0], &mut memo).unwrap();
        let expect = &XPoly::var(2, 0).scale(&-&u()) + &XPoly::var(2, 1).scale(&u().inv().unwrap());
        assert_eq!(a10, expect);
        let a21 = ferm_a(&[2, 1], &mut memo).unwrap();
        assert_eq!(a21, &XPoly::monomial(&[1, 1]) * &expect);
        assert!(ferm_a(&[0, 1], &mut memo).is_err());
    }

    #[test]
    fn classical_examples() {
        let a = classical_a(&[1, 0]).unwrap();
        assert_eq!(a, &XPoly::var(2, 1) - &XPoly::var(2, 0));
        assert_eq!(a.swap(0), -&a);
        let q = classical_a(&[2, 1]).unwrap().divide_exact(&a).unwrap();
        assert_eq!(q, XPoly::monomial(&[1, 1]));
    }

    #[test]
    fn wcf_small() {
        let mut memo = EMemo::new();
        let p11 = wcf_p(&Partition::new(&[1, 1]).unwrap(), 2, &mut memo).unwrap();
        assert_eq!(p11, XPoly::monomial(&[1, 1]));
        assert_eq!(wcf_p(&Partition::empty(), 3, &mut memo).unwrap(), XPoly::one(3));
        let p2 = wcf_p(&Partition::new(&[2]).unwrap(), 2, &mut memo).unwrap();
        let c = CoeffElem::from_parts(&one_plus(-1, 0, 2) * &one_plus(1, 2, 0), one_plus(-1, 2, 2)).unwrap();
        assert_eq!(p2.coeff(&[1, 1]), c);
    }

    #[test]
    fn hall_littlewood_small() {
        let one = Partition::new(&[1]).unwrap();
        assert_eq!(hall_littlewood(&one, 2).unwrap(), &XPoly::var(2, 0) + &XPoly::var(2, 1));
        let p11 = Partition::new(&[1, 1]).unwrap();
        assert_eq!(hall_littlewood(&p11, 2).unwrap(), XPoly::monomial(&[1, 1]));
    }

    #[test]
    fn a_delta_product_form() {
        let mut memo = EMemo::new();
        for n in 2..=3 {
            let f = a_delta_factor(n, &mut memo).unwrap().unwrap();
            let k = (n * (n - 1) / 2) as i64;
            assert!(f.reversed);
            assert_eq!(f.sign_and_power(), Some((1, -k)));
        }
    }
}
