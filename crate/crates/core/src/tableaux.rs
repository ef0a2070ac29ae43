//! Partitions, semistandard tableaux and the tableau formula for `P_λ(q,t)`.

use std::fmt;

use thiserror::Error;

use crate::qt::{one_plus, CoeffElem, XMonomial, XPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("parts are not weakly decreasing: {0:?}")]
    MalformedPartition(Vec<i64>),
    #[error("box ({0},{1}) is not in the shape")]
    BoxOutOfShape(usize, usize),
    #[error("entry bound {0} is out of range")]
    BadBound(usize),
}

/// Weakly decreasing parts; trailing zeros are dropped.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: &[i64]) -> Result<Self, TableauError> {
        if parts.iter().any(|&p| p < 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::MalformedPartition(parts.to_vec()));
        }
        Ok(Self {
            parts: parts.iter().map(|&p| p as usize).filter(|&p| p > 0).collect(),
        })
    }

    pub fn from_parts(parts: &[usize]) -> Result<Self, TableauError> {
        let v: Vec<i64> = parts.iter().map(|&p| p as i64).collect();
        Self::new(&v)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Row `r` (1-based) length, zero past the end.
    pub fn row(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, b: Box) -> bool {
        b.r >= 1 && b.c >= 1 && b.c <= self.row(b.r)
    }

    /// Boxes in row-reading order.
    pub fn boxes(&self) -> impl Iterator<Item = Box> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Box { r: r + 1, c }))
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    /// All partitions of `size` with at most `max_len` parts, in reverse lexicographic order.
    pub fn all(size: usize, max_len: usize) -> Vec<Partition> {
        fn rec(rem: usize, max_part: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=rem.min(max_part)).rev() {
                cur.push(p);
                rec(rem - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A box `(r, c)`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Box {
    pub r: usize,
    pub c: usize,
}

/// A filling of a shape by `1..=n`, stored row by row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Checks the row/column conditions.
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Option<Self> {
        if rows.len() != shape.len() || rows.iter().zip(shape.parts()).any(|(r, &l)| r.len() != l) {
            return None;
        }
        let t = Self { shape, rows };
        t.is_semistandard().then_some(t)
    }

    fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&v| v >= 1));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        rows_ok && cols_ok
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, b: Box) -> Option<usize> {
        self.rows.get(b.r.checked_sub(1)?)?.get(b.c.checked_sub(1)?).copied()
    }

    fn entry(&self, r: usize, c: usize) -> usize {
        self.rows[r - 1][c - 1]
    }

    /// Entries of the boxes strictly right of `b` in its row.
    pub fn arm_entries(&self, b: Box) -> impl Iterator<Item = usize> + '_ {
        self.rows[b.r - 1][b.c..].iter().copied()
    }

    /// Entries of the boxes strictly below `b` in its column.
    pub fn leg_entries(&self, b: Box) -> impl Iterator<Item = usize> + '_ {
        self.rows[b.r..]
            .iter()
            .take_while(move |row| row.len() >= b.c)
            .map(move |row| row[b.c - 1])
    }

    /// Exponent vector of `x^T` in `n` variables.
    pub fn weight(&self, n: usize) -> Vec<i32> {
        let mut e = vec![0i32; n];
        for row in &self.rows {
            for &v in row {
                e[v - 1] += 1;
            }
        }
        e
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// All SSYT of shape `lam` with entries in `1..=n`, in row-reading lexicographic order.
pub fn enumerate_ssyt(lam: &Partition, n: usize) -> Vec<Tableau> {
    if lam.len() > n {
        return Vec::new();
    }
    let boxes: Vec<Box> = lam.boxes().collect();
    let mut rows: Vec<Vec<usize>> = lam.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fn rec(k: usize, boxes: &[Box], n: usize, rows: &mut Vec<Vec<usize>>, lam: &Partition, out: &mut Vec<Tableau>) {
        if k == boxes.len() {
            out.push(Tableau {
                shape: lam.clone(),
                rows: rows.clone(),
            });
            return;
        }
        let Box { r, c } = boxes[k];
        let mut lo = 1;
        if c > 1 {
            lo = lo.max(rows[r - 1][c - 2]);
        }
        if r > 1 {
            lo = lo.max(rows[r - 2][c - 1] + 1);
        }
        // leave room for the strictly increasing column below
        let below = (r..lam.len()).take_while(|&rr| lam.parts()[rr] >= c).count();
        let hi = n.saturating_sub(below);
        for v in lo..=hi {
            rows[r - 1][c - 1] = v;
            rec(k + 1, boxes, n, rows, lam, out);
        }
    }
    rec(0, &boxes, n, &mut rows, lam, &mut out);
    out
}

/// `(1 - q^a t^{l+1}) / (1 - q^{a+1} t^l)`.
pub fn hook_ratio(a: usize, l: usize) -> CoeffElem {
    let (a, l) = (a as u32, l as u32);
    CoeffElem::from_parts(one_plus(-1, 2 * a, 2 * l + 2), one_plus(-1, 2 * a + 2, 2 * l))
        .expect("nonzero denominator")
}

/// The `i`-restricted arm, leg and `(q,t)`-hook of `b` in `t`.
pub fn restricted_hook(t: &Tableau, b: Box, i: usize) -> Result<(usize, usize, CoeffElem), TableauError> {
    if !t.shape.contains(b) {
        return Err(TableauError::BoxOutOfShape(b.r, b.c));
    }
    let a = t.arm_entries(b).filter(|&v| v < i).count();
    let l = t.leg_entries(b).filter(|&v| v < i).count();
    Ok((a, l, hook_ratio(a, l)))
}

/// `ψ_T(q,t)`; arm and leg enter through the sets of their entry values.
pub fn psi_weight(t: &Tableau) -> CoeffElem {
    let mut acc = CoeffElem::one();
    for b in t.shape.boxes() {
        let v = t.entry(b.r, b.c);
        let mut arm: Vec<usize> = t.arm_entries(b).filter(|&x| x > v).collect();
        arm.dedup();
        for i in arm {
            if t.leg_entries(b).any(|x| x == i) {
                continue;
            }
            let (_, _, h0) = restricted_hook(t, b, i).expect("box in shape");
            let (_, _, h1) = restricted_hook(t, b, i + 1).expect("box in shape");
            acc = &acc * &h0;
            acc = acc.checked_div(&h1).expect("hook ratios are nonzero");
        }
    }
    acc
}

/// `P_λ(q,t) = Σ_T x^T ψ_T(q,t)` in `n` variables.
pub fn p_tableaux(lam: &Partition, n: usize) -> XPoly {
    let mut out = XPoly::zero(n);
    for t in enumerate_ssyt(lam, n) {
        out.add_term(XMonomial(t.weight(n)), psi_weight(&t));
    }
    out
}

/// `s_λ = Σ_T x^T`.
pub fn schur(lam: &Partition, n: usize) -> XPoly {
    let mut out = XPoly::zero(n);
    for t in enumerate_ssyt(lam, n) {
        out.add_term(XMonomial(t.weight(n)), CoeffElem::one());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::ParamPoly;

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts).unwrap()
    }

    fn ce(num: ParamPoly, den: ParamPoly) -> CoeffElem {
        CoeffElem::from_parts(num, den).unwrap()
    }

    #[test]
    fn ssyt_counts() {
        let t = enumerate_ssyt(&p(&[2]), 2);
        let s: Vec<String> = t.iter().map(|t| t.to_string()).collect();
        assert_eq!(s, ["1 1", "1 2", "2 2"]);
        assert!(enumerate_ssyt(&p(&[1, 1, 1]), 2).is_empty());
        assert_eq!(enumerate_ssyt(&p(&[1]), 3).len(), 3);
        assert_eq!(enumerate_ssyt(&p(&[2, 1]), 3).len(), 8);
    }

    #[test]
    fn malformed_partition() {
        assert!(Partition::new(&[1, 2]).is_err());
        assert!(Partition::new(&[-1]).is_err());
        assert_eq!(p(&[2, 0, 0]).parts(), &[2]);
    }

    #[test]
    fn restricted_hooks() {
        let t = Tableau::new(p(&[2]), vec![vec![1, 2]]).unwrap();
        let b = Box { r: 1, c: 1 };
        let (a, l, h) = restricted_hook(&t, b, 2).unwrap();
        assert_eq!((a, l), (0, 0));
        assert_eq!(h, ce(one_plus(-1, 0, 2), one_plus(-1, 2, 0)));
        let (a, l, h) = restricted_hook(&t, b, 3).unwrap();
        assert_eq!((a, l), (1, 0));
        assert_eq!(h, ce(one_plus(-1, 2, 2), one_plus(-1, 4, 0)));
        assert_eq!(restricted_hook(&t, Box { r: 2, c: 1 }, 1), Err(TableauError::BoxOutOfShape(2, 1)));
    }

    #[test]
    fn psi_examples() {
        let t = Tableau::new(p(&[2]), vec![vec![1, 2]]).unwrap();
        let expect = ce(&one_plus(-1, 0, 2) * &one_plus(1, 2, 0), one_plus(-1, 2, 2));
        assert_eq!(psi_weight(&t), expect);
        let t = Tableau::new(p(&[2]), vec![vec![1, 1]]).unwrap();
        assert!(psi_weight(&t).is_one());
    }

    #[test]
    fn p2_in_two_variables() {
        let f = p_tableaux(&p(&[2]), 2);
        let c = ce(&one_plus(-1, 0, 2) * &one_plus(1, 2, 0), one_plus(-1, 2, 2));
        let expect = &(&XPoly::monomial(&[2, 0]) + &XPoly::monomial(&[0, 2])) + &XPoly::monomial(&[1, 1]).scale(&c);
        assert_eq!(f, expect);
        assert_eq!(p_tableaux(&Partition::empty(), 3), XPoly::one(3));
    }

    #[test]
    fn schur_21() {
        let s = schur(&p(&[2, 1]), 3);
        assert_eq!(s.len(), 7);
        assert_eq!(s.coeff(&[1, 1, 1]), CoeffElem::from_int(2));
        assert_eq!(schur(&p(&[1, 1]), 2), XPoly::monomial(&[1, 1]));
    }

    #[test]
    fn partitions_listing() {
        assert_eq!(Partition::all(4, 4).len(), 5);
        assert_eq!(Partition::all(4, 2).len(), 3);
        assert_eq!(Partition::all(0, 2), vec![Partition::empty()]);
    }
}
