//! Canonical JSON for [`XPoly`].
//!
//! `{"n": 2, "terms": [{"exp": [0,1], "num": [[0,0,"1"]], "den": [[0,0,"1"]]}]}`
//! with terms and parameter entries in ascending lexicographic order.

use serde::{Deserialize, Serialize};

use super::coeff::CoeffElem;
use super::param::ParamPoly;
use super::rat::{parse_rat, rat_to_string};
use super::xpoly::{XMonomial, XPoly};
use super::QtError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct XPolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub num: Vec<(u32, u32, String)>,
    pub den: Vec<(u32, u32, String)>,
}

fn param_entries(p: &ParamPoly) -> Vec<(u32, u32, String)> {
    p.terms().map(|(&(a, b), c)| (a, b, rat_to_string(c))).collect()
}

fn param_from_entries(v: &[(u32, u32, String)]) -> Result<ParamPoly, QtError> {
    let mut terms = Vec::with_capacity(v.len());
    for (a, b, c) in v {
        terms.push(((*a, *b), parse_rat(c)?));
    }
    Ok(ParamPoly::from_terms(terms))
}

impl From<&XPoly> for XPolyJson {
    fn from(f: &XPoly) -> Self {
        Self {
            n: f.n(),
            terms: f
                .terms()
                .map(|(m, c)| TermJson {
                    exp: m.0.clone(),
                    num: param_entries(c.num()),
                    den: param_entries(c.den()),
                })
                .collect(),
        }
    }
}

impl TryFrom<&XPolyJson> for XPoly {
    type Error = QtError;

    fn try_from(j: &XPolyJson) -> Result<Self, QtError> {
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let c = CoeffElem::from_parts(param_from_entries(&t.num)?, param_from_entries(&t.den)?)?;
            terms.push((XMonomial(t.exp.clone()), c));
        }
        XPoly::from_terms(j.n, terms)
    }
}

pub fn xpoly_to_json(f: &XPoly) -> String {
    serde_json::to_string(&XPolyJson::from(f)).expect("plain data serializes")
}

pub fn xpoly_from_json(s: &str) -> Result<XPoly, QtError> {
    let j: XPolyJson = serde_json::from_str(s).map_err(|e| QtError::Parse(e.to_string()))?;
    XPoly::try_from(&j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qt::param::one_plus;

    #[test]
    fn round_trip() {
        let c = CoeffElem::from_parts(one_plus(-1, 0, 2), one_plus(-1, 2, 2)).unwrap();
        let f = &XPoly::var(2, 1) + &XPoly::var(2, 0).scale(&c);
        let s = xpoly_to_json(&f);
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"exp":[0,1],"num":[[0,0,"1"]],"den":[[0,0,"1"]]},{"exp":[1,0],"num":[[0,0,"1"],[0,2,"-1"]],"den":[[0,0,"1"],[2,2,"-1"]]}]}"#
        );
        let g = xpoly_from_json(&s).unwrap();
        assert_eq!(g, f);
        assert_eq!(xpoly_to_json(&g), s);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(xpoly_from_json(r#"{"n":2,"terms":[{"exp":[1],"num":[],"den":[[0,0,"1"]]}]}"#).is_err());
        assert!(xpoly_from_json(r#"{"n":1,"terms":[{"exp":[1],"num":[[0,0,"1"]],"den":[]}]}"#).is_err());
        assert!(xpoly_from_json("nope").is_err());
    }
}
