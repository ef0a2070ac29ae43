//! Rational cohomology of `Σ(n)` from generators `ξ_i, ξ'_i, η` and relations.
//!
//! Monomials are stored as an exterior part (a bitmask, `ξ_1..ξ_g` then
//! `ξ'_1..ξ'_g`) times a power of `η`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::qt::{rat, rat_to_string, Rat};
use crate::zeta::{f_k, CurveZeta};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("g = {0}, n = {1} exceeds the size guard g <= 3, n <= 3")]
    SizeGuardExceeded(usize, usize),
    #[error("n must be at least 1")]
    BadN,
    #[error("curve has genus {0}, expected {1}")]
    GenusMismatch(usize, usize),
    #[error("generator index {0} out of range")]
    BadIndex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    Xi(usize),
    XiPrime(usize),
    Eta,
}

/// Normal-form monomial `coeff · ξ_S ξ'_T η^c`, `S`, `T` ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresMonomial {
    pub xi: Vec<usize>,
    pub xi_prime: Vec<usize>,
    pub eta: u32,
    pub coeff: String,
}

type Key = (u32, u32);

/// Linear combination of normal-form monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohElem {
    g: usize,
    terms: BTreeMap<Key, Rat>,
}

fn bit(g: usize, x: Gen) -> Option<u32> {
    match x {
        Gen::Xi(i) => Some(i as u32 - 1),
        Gen::XiPrime(i) => Some((g + i) as u32 - 1),
        Gen::Eta => None,
    }
}

/// Sign and mask of `m1 · m2` in the exterior algebra, `None` if it vanishes.
fn wedge(m1: u32, m2: u32) -> Option<(bool, u32)> {
    if m1 & m2 != 0 {
        return None;
    }
    let mut swaps = 0u32;
    for b in 0..32 {
        if m2 >> b & 1 == 1 {
            swaps += (m1 >> (b + 1)).count_ones();
        }
    }
    Some((swaps % 2 == 1, m1 | m2))
}

impl CohElem {
    pub fn zero(g: usize) -> Self {
        Self { g, terms: BTreeMap::new() }
    }

    pub fn one(g: usize) -> Self {
        Self::monomial(g, 0, 0)
    }

    fn monomial(g: usize, mask: u32, c: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((mask, c), Rat::one());
        Self { g, terms }
    }

    pub fn gen(g: usize, x: Gen) -> Result<Self, CohomologyError> {
        match x {
            Gen::Xi(i) | Gen::XiPrime(i) if i == 0 || i > g => Err(CohomologyError::BadIndex(i)),
            Gen::Eta => Ok(Self::monomial(g, 0, 1)),
            _ => Ok(Self::monomial(g, 1 << bit(g, x).expect("exterior generator"), 0)),
        }
    }

    /// Normal form of a word in the generators.
    pub fn from_word(g: usize, word: &[Gen]) -> Result<Self, CohomologyError> {
        let mut out = Self::one(g);
        for &x in word {
            out = out.mul(&Self::gen(g, x)?, None);
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, k: Key, c: Rat) {
        let e = self.terms.entry(k).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c.clone());
        }
        out
    }

    /// Product, dropping `η^c` with `c > eta_cap` when a cap is given.
    pub fn mul(&self, other: &Self, eta_cap: Option<u32>) -> Self {
        let mut out = Self::zero(self.g);
        for ((m1, c1), a) in &self.terms {
            for ((m2, c2), b) in &other.terms {
                let c = c1 + c2;
                if eta_cap.is_some_and(|cap| c > cap) {
                    continue;
                }
                if let Some((neg, m)) = wedge(*m1, *m2) {
                    let v = a * b;
                    out.add_term((m, c), if neg { -v } else { v });
                }
            }
        }
        out
    }

    pub fn monomials(&self) -> Vec<PresMonomial> {
        let g = self.g as u32;
        self.terms
            .iter()
            .map(|((m, c), a)| PresMonomial {
                xi: (0..g).filter(|b| m >> b & 1 == 1).map(|b| b as usize + 1).collect(),
                xi_prime: (g..2 * g).filter(|b| m >> b & 1 == 1).map(|b| (b - g) as usize + 1).collect(),
                eta: *c,
                coeff: rat_to_string(a),
            })
            .collect()
    }
}

impl fmt::Display for CohElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .monomials()
            .iter()
            .map(|m| {
                let mut s = String::new();
                for i in &m.xi {
                    s.push_str(&format!("ξ_{i}"));
                }
                for i in &m.xi_prime {
                    s.push_str(&format!("ξ'_{i}"));
                }
                match m.eta {
                    0 => {}
                    1 => s.push('η'),
                    c => s.push_str(&format!("η^{c}")),
                }
                if s.is_empty() {
                    s.push('1');
                }
                match m.coeff.as_str() {
                    "1" => s,
                    "-1" => format!("-{s}"),
                    c => format!("{c}{s}"),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// `ξ_I ξ'_J (ξ_{k_1}ξ'_{k_1} - η)...(ξ_{k_c}ξ'_{k_c} - η) η^q` with `a+b+2c+q = n+1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationInstance {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub q: usize,
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub k: Vec<usize>,
}

impl RelationInstance {
    pub fn degree(&self) -> usize {
        self.a + self.b + 2 * self.c + 2 * self.q
    }

    pub fn element(&self, g: usize) -> CohElem {
        let gen = |x| CohElem::gen(g, x).expect("indices in range");
        let mut out = CohElem::one(g);
        for &i in &self.i {
            out = out.mul(&gen(Gen::Xi(i)), None);
        }
        for &j in &self.j {
            out = out.mul(&gen(Gen::XiPrime(j)), None);
        }
        for &k in &self.k {
            let pair = gen(Gen::Xi(k)).mul(&gen(Gen::XiPrime(k)), None);
            out = out.mul(&pair.sub(&gen(Gen::Eta)), None);
        }
        for _ in 0..self.q {
            out = out.mul(&gen(Gen::Eta), None);
        }
        out
    }
}

impl fmt::Display for RelationInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        for i in &self.i {
            s.push_str(&format!("ξ_{i}"));
        }
        for j in &self.j {
            s.push_str(&format!("ξ'_{j}"));
        }
        for k in &self.k {
            s.push_str(&format!("(ξ_{k}ξ'_{k}-η)"));
        }
        match self.q {
            0 => {}
            1 => s.push('η'),
            q => s.push_str(&format!("η^{q}")),
        }
        if s.is_empty() {
            s.push('1');
        }
        write!(f, "{s}")
    }
}

fn subsets(pool: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (p, &x) in pool.iter().enumerate() {
        if pool.len() - p < size {
            break;
        }
        for mut rest in subsets(&pool[p + 1..], size - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// All relation instances with pairwise distinct indices, by decreasing `q`, then `c`, then decreasing `a`.
pub fn enumerate_relations(g: usize, n: usize) -> Vec<RelationInstance> {
    let all: Vec<usize> = (1..=g).collect();
    let mut out = Vec::new();
    for q in (0..=n + 1).rev() {
        let rem = n + 1 - q;
        for c in 0..=rem / 2 {
            let ab = rem - 2 * c;
            for a in (0..=ab).rev() {
                let b = ab - a;
                if a + b + c > g {
                    continue;
                }
                for k in subsets(&all, c) {
                    let left: Vec<usize> = all.iter().copied().filter(|x| !k.contains(x)).collect();
                    for i in subsets(&left, a) {
                        let left2: Vec<usize> = left.iter().copied().filter(|x| !i.contains(x)).collect();
                        for j in subsets(&left2, b) {
                            out.push(RelationInstance {
                                a,
                                b,
                                c,
                                q,
                                i: i.clone(),
                                j,
                                k: k.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = rows[r][col].recip();
        for i in r + 1..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] * &inv;
            for c in col..cols {
                let v = &f * &rows[r][c];
                rows[i][c] -= v;
            }
        }
        r += 1;
    }
    r
}

fn check_guard(g: usize, n: usize) -> Result<(), CohomologyError> {
    if n == 0 {
        return Err(CohomologyError::BadN);
    }
    if g > 3 || n > 3 {
        return Err(CohomologyError::SizeGuardExceeded(g, n));
    }
    Ok(())
}

/// `b_0, ..., b_{2n}` of `Σ(n)` for a genus `g` curve.
pub fn betti(g: usize, n: usize) -> Result<Vec<usize>, CohomologyError> {
    check_guard(g, n)?;
    let cap = n as u32;
    let rels: Vec<(usize, CohElem)> = enumerate_relations(g, n)
        .iter()
        .map(|r| (r.degree(), r.element(g)))
        .collect();
    let masks: Vec<u32> = (0..1u32 << (2 * g)).collect();
    let basis = |d: usize| -> Vec<Key> {
        masks
            .iter()
            .flat_map(|&m| {
                let e = m.count_ones() as usize;
                (e <= d && (d - e).is_multiple_of(2) && (d - e) / 2 <= n).then(|| (m, ((d - e) / 2) as u32))
            })
            .collect()
    };
    let mut out = Vec::with_capacity(2 * n + 1);
    for d in 0..=2 * n {
        let b = basis(d);
        let index: BTreeMap<Key, usize> = b.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let mut rows = Vec::new();
        for (rd, rel) in &rels {
            if *rd > d {
                continue;
            }
            for &(m, c) in &basis(d - rd) {
                let prod = rel.mul(&CohElem::monomial(g, m, c), Some(cap));
                if prod.is_zero() {
                    continue;
                }
                let mut row = vec![Rat::zero(); b.len()];
                for (k, v) in &prod.terms {
                    row[index[k]] = v.clone();
                }
                rows.push(row);
            }
        }
        out.push(b.len() - rank(rows));
    }
    Ok(out)
}

/// `Σ b_k x^k` as text.
pub fn poincare(g: usize, n: usize) -> Result<String, CohomologyError> {
    let b = betti(g, n)?;
    let parts: Vec<String> = b
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match (k, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}x"),
            (k, 1) => format!("x^{k}"),
            (k, c) => format!("{c}x^{k}"),
        })
        .collect();
    Ok(parts.join(" + "))
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossCheck {
    pub g: usize,
    pub n: usize,
    pub betti: Vec<usize>,
    pub f_degrees: Vec<usize>,
    pub ok: bool,
}

/// Compares `b_k` with `deg F_k` for `k = 0..2n`.
pub fn cross_check_zeta(g: usize, n: usize, c: &CurveZeta) -> Result<CrossCheck, CohomologyError> {
    if c.genus() != g {
        return Err(CohomologyError::GenusMismatch(c.genus(), g));
    }
    let betti = betti(g, n)?;
    let f_degrees: Vec<usize> = (0..=2 * n).map(|k| f_k(c, n, k).degree().unwrap_or(0)).collect();
    Ok(CrossCheck {
        g,
        n,
        ok: betti == f_degrees,
        betti,
        f_degrees,
    })
}

/// `Σ (-1)^k b_k`.
pub fn euler_characteristic(b: &[usize]) -> i64 {
    b.iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// `(-1)^n binom(2g-2, n)` with the generalized binomial for `g = 0`.
pub fn expected_euler(g: usize, n: usize) -> i64 {
    let top = 2 * g as i64 - 2;
    let mut v = rat(1);
    for i in 0..n as i64 {
        v = v * rat(top - i) / rat(i + 1);
    }
    let v: i64 = v.to_integer().try_into().expect("small");
    if n.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::curve_from_numerator;

    #[test]
    fn relations_g1_n1() {
        let r = enumerate_relations(1, 1);
        let shapes: Vec<_> = r.iter().map(|x| (x.a, x.b, x.c, x.q)).collect();
        assert_eq!(shapes, [(0, 0, 0, 2), (1, 0, 0, 1), (0, 1, 0, 1), (0, 0, 1, 0)]);
        let text: Vec<_> = r.iter().map(|x| x.to_string()).collect();
        assert_eq!(text, ["η^2", "ξ_1η", "ξ'_1η", "(ξ_1ξ'_1-η)"]);
        assert_eq!(enumerate_relations(0, 2).len(), 1);
    }

    #[test]
    fn normal_form() {
        let a = CohElem::from_word(2, &[Gen::XiPrime(1), Gen::Xi(2), Gen::Xi(1)]).unwrap();
        let b = CohElem::from_word(2, &[Gen::Xi(1), Gen::Xi(2), Gen::XiPrime(1)]).unwrap();
        assert_eq!(a, b.sub(&b).sub(&b));
        assert!(CohElem::from_word(2, &[Gen::Xi(1), Gen::Xi(1)]).unwrap().is_zero());
        let l = CohElem::from_word(1, &[Gen::Xi(1), Gen::Eta]).unwrap();
        let r = CohElem::from_word(1, &[Gen::Eta, Gen::Xi(1)]).unwrap();
        assert!(l.sub(&r).is_zero());
        assert_eq!(b.to_string(), "ξ_1ξ_2ξ'_1");
        assert!(CohElem::gen(1, Gen::Xi(2)).is_err());
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti(1, 1).unwrap(), [1, 2, 1]);
        assert_eq!(betti(1, 2).unwrap(), [1, 2, 2, 2, 1]);
        assert_eq!(betti(0, 2).unwrap(), [1, 0, 1, 0, 1]);
        assert_eq!(betti(2, 2).unwrap(), [1, 4, 7, 4, 1]);
        assert!(matches!(betti(4, 1), Err(CohomologyError::SizeGuardExceeded(4, 1))));
        assert_eq!(poincare(1, 1).unwrap(), "1 + 2x + x^2");
    }

    #[test]
    fn zeta_cross_check() {
        let c = curve_from_numerator(2, &[1, 0, 2]).unwrap();
        let r = cross_check_zeta(1, 2, &c).unwrap();
        assert!(r.ok);
        assert_eq!(r.f_degrees, [1, 2, 2, 2, 1]);
        assert!(cross_check_zeta(2, 2, &c).is_err());
    }
}
