//! Nonsymmetric (electronic) Macdonald polynomials `E_μ` by the (E0)/(E1)/(E2) recursion.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::qt::{one_plus, rat, CoeffElem, ParamPoly, QtError, XMonomial, XPoly, XPolyJson};

use super::operators::partial0;
use super::perm::min_sorting_perm;

/// Cache of `E_μ` for a fixed number of variables.
#[derive(Clone, Debug, Default)]
pub struct EMemo {
    cache: HashMap<(usize, Vec<usize>), XPoly>,
}

#[derive(Serialize, Deserialize)]
struct MemoEntry {
    n: usize,
    mu: Vec<usize>,
    poly: XPolyJson,
}

#[derive(Serialize, Deserialize)]
struct MemoFile {
    entries: Vec<MemoEntry>,
}

impl EMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }

    pub fn get(&self, mu: &[usize]) -> Option<&XPoly> {
        self.cache.get(&(mu.len(), mu.to_vec()))
    }

    pub fn keys(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.cache.keys().map(|(_, mu)| mu)
    }

    fn insert(&mut self, mu: &[usize], f: XPoly) {
        self.cache.insert((mu.len(), mu.to_vec()), f);
    }

    /// JSON keyed by `(n, μ)`, entries sorted for deterministic output.
    pub fn to_json(&self) -> String {
        let mut keys: Vec<_> = self.cache.keys().cloned().collect();
        keys.sort();
        let entries = keys
            .into_iter()
            .map(|k| MemoEntry {
                poly: XPolyJson::from(&self.cache[&k]),
                n: k.0,
                mu: k.1,
            })
            .collect();
        serde_json::to_string(&MemoFile { entries }).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, QtError> {
        let file: MemoFile = serde_json::from_str(s).map_err(|e| QtError::Parse(e.to_string()))?;
        let mut memo = Self::new();
        for e in file.entries {
            if e.mu.len() != e.n {
                return Err(QtError::DimensionMismatch(e.n, e.mu.len()));
            }
            let f = XPoly::try_from(&e.poly)?;
            if f.n() != e.n {
                return Err(QtError::DimensionMismatch(e.n, f.n()));
            }
            memo.insert(&e.mu, f);
        }
        Ok(memo)
    }

    /// Recomputes every cached entry from scratch and compares.
    pub fn replay_check(&self) -> bool {
        let mut fresh = EMemo::new();
        self.cache.keys().all(|(_, mu)| e_poly(mu, &mut fresh) == self.cache[&(mu.len(), mu.clone())])
    }
}

/// `(1-t) q^d t^e / (1 - q^d t^e)`.
pub fn intertwiner_coeff(d: u32, e: u32) -> CoeffElem {
    let num = &one_plus(-1, 0, 2) * &ParamPoly::term(rat(1), 2 * d, 2 * e);
    CoeffElem::from_parts(num, one_plus(-1, 2 * d, 2 * e)).expect("nonzero denominator")
}

/// `E_μ`, monic in `x^μ`.
pub fn e_poly(mu: &[usize], memo: &mut EMemo) -> XPoly {
    let n = mu.len();
    if let Some(f) = memo.get(mu) {
        return f.clone();
    }
    let f = if mu.iter().all(|&m| m == 0) {
        XPoly::one(n)
    } else if let Some(i) = (0..n - 1).find(|&i| mu[i] < mu[i + 1]) {
        // (E2) from ν = s_i μ, which has ν_i > ν_{i+1}
        let mut nu = mu.to_vec();
        nu.swap(i, i + 1);
        let f = e_poly(&nu, memo);
        let v = min_sorting_perm(&nu);
        let d = (nu[i] - nu[i + 1]) as u32;
        let e = (v[i] - v[i + 1]) as u32;
        let xi = XPoly::var(n, i);
        let a = partial0(&(&xi * &f), i);
        let b = (&xi * &partial0(&f, i)).scale(&CoeffElem::t());
        &(&a - &b) + &f.scale(&intertwiner_coeff(d, e))
    } else {
        // (E1): μ = (m_n + 1, m_1, ..., m_{n-1})
        let mut m: Vec<usize> = mu[1..].to_vec();
        m.push(mu[0] - 1);
        let f = e_poly(&m, memo);
        let qinv = CoeffElem::monomial(rat(1), -2, 0);
        let mut images: Vec<(CoeffElem, usize)> = (1..n).map(|j| (CoeffElem::one(), j)).collect();
        images.push((qinv, 0));
        let g = f.substitute(&images).expect("images are well formed");
        let qpow = CoeffElem::monomial(rat(1), 2 * m[n - 1] as i64, 0);
        g.shift(&XMonomial::var(n, 0).0).scale(&qpow)
    };
    memo.insert(mu, f.clone());
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let mut memo = EMemo::new();
        assert_eq!(e_poly(&[0, 0], &mut memo), XPoly::one(2));
        assert_eq!(e_poly(&[1, 0], &mut memo), XPoly::var(2, 0));
        let c = CoeffElem::from_parts(one_plus(-1, 0, 2), one_plus(-1, 2, 2)).unwrap();
        assert_eq!(
            e_poly(&[0, 1], &mut memo),
            &XPoly::var(2, 1) + &XPoly::var(2, 0).scale(&c)
        );
        assert_eq!(e_poly(&[1, 1], &mut memo), XPoly::monomial(&[1, 1]));
    }

    #[test]
    fn monic_on_leading_weight() {
        let mut memo = EMemo::new();
        for mu in [[2, 0, 1], [0, 1, 2], [1, 2, 0], [0, 0, 3], [2, 2, 1]] {
            let f = e_poly(&mu, &mut memo);
            let e: Vec<i32> = mu.iter().map(|&m| m as i32).collect();
            assert!(f.coeff(&e).is_one(), "{mu:?}");
        }
    }

    #[test]
    fn memo_round_trip() {
        let mut memo = EMemo::new();
        e_poly(&[0, 2, 1], &mut memo);
        let s = memo.to_json();
        let back = EMemo::from_json(&s).unwrap();
        assert_eq!(back.len(), memo.len());
        assert_eq!(back.to_json(), s);
        assert!(back.replay_check());
    }
}
