//! The coefficient field `Q(q^{1/2}, t^{1/2})` as reduced ratios of [`ParamPoly`]s.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::param::ParamPoly;
use super::rat::{rat, Rat};
use super::QtError;

/// `num / den` with `gcd(num, den) = 1` and the lowest term of `den` having coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoeffElem {
    num: ParamPoly,
    den: ParamPoly,
}

impl Default for CoeffElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl CoeffElem {
    pub fn zero() -> Self {
        Self {
            num: ParamPoly::zero(),
            den: ParamPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat(n))
    }

    pub fn from_rat(c: Rat) -> Self {
        Self {
            num: ParamPoly::constant(c),
            den: ParamPoly::one(),
        }
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        Self {
            num: p,
            den: ParamPoly::one(),
        }
    }

    /// `c u_q^eq u_t^et` for arbitrary integer exponents.
    pub fn monomial(c: Rat, eq: i64, et: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let (nq, dq) = split_exp(eq);
        let (nt, dt) = split_exp(et);
        Self {
            num: ParamPoly::term(c, nq, nt),
            den: ParamPoly::term(Rat::one(), dq, dt),
        }
    }

    pub fn uq() -> Self {
        Self::monomial(Rat::one(), 1, 0)
    }

    pub fn ut() -> Self {
        Self::monomial(Rat::one(), 0, 1)
    }

    pub fn q() -> Self {
        Self::monomial(Rat::one(), 2, 0)
    }

    pub fn t() -> Self {
        Self::monomial(Rat::one(), 0, 2)
    }

    /// Builds `num / den` in canonical form.
    pub fn from_parts(num: ParamPoly, den: ParamPoly) -> Result<Self, QtError> {
        if den.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_unit(num, den)
    }

    /// Scales so the denominator's lowest term has coefficient 1; no gcd work.
    fn normalize_unit(num: ParamPoly, den: ParamPoly) -> Self {
        let lc = den.lowest().map(|(_, c)| c.clone()).expect("nonzero denominator");
        if lc.is_one() {
            Self { num, den }
        } else {
            let inv = lc.recip();
            Self {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Rational value when the element is a constant.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// `Some((c, eq, et))` when the element is `c u_q^eq u_t^et` (exponents may be negative).
    pub fn as_monomial(&self) -> Option<(Rat, i64, i64)> {
        if self.is_zero() {
            return Some((Rat::zero(), 0, 0));
        }
        let (c, a, b) = self.num.as_monomial()?;
        let (d, x, y) = self.den.as_monomial()?;
        Some((c / d, a as i64 - x as i64, b as i64 - y as i64))
    }

    pub fn inv(&self) -> Result<Self, QtError> {
        if self.is_zero() {
            return Err(QtError::DivisionByZero);
        }
        Ok(Self::normalize_unit(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, QtError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, QtError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Substitutes `u_q -> uq`, `u_t -> ut` (`None` keeps the generator).
    pub fn specialize(
        &self,
        uq: Option<&CoeffElem>,
        ut: Option<&CoeffElem>,
    ) -> Result<Self, QtError> {
        let img_q = match uq {
            None => Some((Rat::one(), 1, 0)),
            Some(c) => c.as_monomial(),
        };
        let img_t = match ut {
            None => Some((Rat::one(), 0, 1)),
            Some(c) => c.as_monomial(),
        };
        if let (Some(mq), Some(mt)) = (img_q, img_t) {
            let num = map_monomial(&self.num, &mq, &mt);
            let den = map_monomial(&self.den, &mq, &mt);
            if den.is_empty() {
                return Err(QtError::SpecializationPole);
            }
            let (mut sq, mut st) = (0i64, 0i64);
            for &(a, b) in num.keys().chain(den.keys()) {
                sq = sq.min(a);
                st = st.min(b);
            }
            let to_poly = |m: BTreeMap<(i64, i64), Rat>| {
                ParamPoly::from_terms(
                    m.into_iter()
                        .map(|((a, b), c)| (((a - sq) as u32, (b - st) as u32), c)),
                )
            };
            return Ok(Self::reduce(to_poly(num), to_poly(den)));
        }
        let gq = uq.cloned().unwrap_or_else(Self::uq);
        let gt = ut.cloned().unwrap_or_else(Self::ut);
        let num = eval_general(&self.num, &gq, &gt);
        let den = eval_general(&self.den, &gq, &gt);
        if den.is_zero() {
            return Err(QtError::SpecializationPole);
        }
        num.checked_div(&den)
    }

    /// Numeric value at rational `u_q`, `u_t`.
    pub fn eval_rat(&self, uq: &Rat, ut: &Rat) -> Result<Rat, QtError> {
        let d = self.den.eval_rat(uq, ut);
        if d.is_zero() {
            return Err(QtError::SpecializationPole);
        }
        Ok(self.num.eval_rat(uq, ut) / d)
    }

    /// True when the numerator's lowest coefficient is negative; the printers
    /// pull that sign out in front of the term.
    pub(crate) fn leading_sign_negative(&self) -> bool {
        self.num.lowest().is_some_and(|(_, c)| c.is_negative())
    }

    /// LaTeX: `\frac{1-t}{1-qt}`, `1+q`, `t^{1/2}`.
    pub fn to_latex(&self) -> String {
        if self.den.is_one() {
            self.num.to_latex()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
        }
    }
}

fn split_exp(e: i64) -> (u32, u32) {
    if e >= 0 {
        (e as u32, 0)
    } else {
        (0, (-e) as u32)
    }
}

fn map_monomial(
    p: &ParamPoly,
    mq: &(Rat, i64, i64),
    mt: &(Rat, i64, i64),
) -> BTreeMap<(i64, i64), Rat> {
    let mut out: BTreeMap<(i64, i64), Rat> = BTreeMap::new();
    for (&(a, b), c) in p.terms() {
        if (a > 0 && mq.0.is_zero()) || (b > 0 && mt.0.is_zero()) {
            continue;
        }
        let coeff = c
            * num_traits::pow(mq.0.clone(), a as usize)
            * num_traits::pow(mt.0.clone(), b as usize);
        let e = (
            mq.1 * a as i64 + mt.1 * b as i64,
            mq.2 * a as i64 + mt.2 * b as i64,
        );
        let slot = out.entry(e).or_insert_with(Rat::zero);
        *slot += coeff;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn eval_general(p: &ParamPoly, gq: &CoeffElem, gt: &CoeffElem) -> CoeffElem {
    let (mq, mt) = p.max_exponents();
    let mut pq = vec![CoeffElem::one()];
    for _ in 0..mq {
        let next = pq.last().expect("nonempty") * gq;
        pq.push(next);
    }
    let mut pt = vec![CoeffElem::one()];
    for _ in 0..mt {
        let next = pt.last().expect("nonempty") * gt;
        pt.push(next);
    }
    let mut acc = CoeffElem::zero();
    for (&(a, b), c) in p.terms() {
        let term = &(&pq[a as usize] * &pt[b as usize]) * &CoeffElem::from_rat(c.clone());
        acc = &acc + &term;
    }
    acc
}

impl Add for &CoeffElem {
    type Output = CoeffElem;
    fn add(self, rhs: &CoeffElem) -> CoeffElem {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return CoeffElem {
                    num,
                    den: self.den.clone(),
                };
            }
            return CoeffElem::reduce(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            // gcd(num, den) = 1 already when the denominators are coprime
            if num.is_zero() {
                return CoeffElem::zero();
            }
            return CoeffElem::normalize_unit(num, den);
        }
        let da = self.den.div_exact(&g).expect("gcd divides");
        let db = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        let den = &self.den * &db;
        CoeffElem::reduce(num, den)
    }
}

impl Sub for &CoeffElem {
    type Output = CoeffElem;
    fn sub(self, rhs: &CoeffElem) -> CoeffElem {
        self + &(-rhs)
    }
}

impl Neg for &CoeffElem {
    type Output = CoeffElem;
    fn neg(self) -> CoeffElem {
        CoeffElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &CoeffElem {
    type Output = CoeffElem;
    fn mul(self, rhs: &CoeffElem) -> CoeffElem {
        if self.is_zero() || rhs.is_zero() {
            return CoeffElem::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return CoeffElem {
                num: &self.num * &rhs.num,
                den: ParamPoly::one(),
            };
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let div = |p: &ParamPoly, g: &ParamPoly| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&rhs.num, &g2);
        let den = &div(&self.den, &g2) * &div(&rhs.den, &g1);
        CoeffElem::normalize_unit(num, den)
    }
}

impl From<i64> for CoeffElem {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

fn rat_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rat::new(n, d))
}

/// Parses `"q=t"`, `"q=0,t=0"`, `"t=1/4"`, `"uq=2"` into images of `(u_q, u_t)`.
///
/// Values given for `q` or `t` must be squares of rationals; the nonnegative root is used.
pub fn parse_specialization(s: &str) -> Result<(Option<CoeffElem>, Option<CoeffElem>), QtError> {
    let bad = |m: &str| QtError::Parse(format!("{m} in specialization {s:?}"));
    let (mut uq, mut ut) = (None, None);
    for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| bad("missing '='"))?;
        let (k, v) = (k.trim(), v.trim());
        let img = match (k, v) {
            ("q", "t") => CoeffElem::ut(),
            ("t", "q") => CoeffElem::uq(),
            ("uq" | "ut", v) => CoeffElem::from_rat(super::rat::parse_rat(v)?),
            ("q" | "t", v) => {
                let r = super::rat::parse_rat(v)?;
                CoeffElem::from_rat(rat_sqrt(&r).ok_or_else(|| bad("value is not a rational square"))?)
            }
            _ => return Err(bad("unknown parameter")),
        };
        match k {
            "q" | "uq" => uq = Some(img),
            _ => ut = Some(img),
        }
    }
    Ok((uq, ut))
}
