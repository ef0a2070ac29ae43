//! The lattice `V_Z`, the affine Weyl group of type C, the orbits `O_1..O_5`,
//! and the poset of classical affine root systems with their specializations.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineError {
    #[error("unknown root system {0:?}")]
    UnknownSystem(String),
    #[error("generator s_{0} out of range for n = {1}")]
    BadGenerator(usize, usize),
    #[error("cannot parse vector {0:?}")]
    Parse(String),
}

/// `Σ eps_i ε_i + (delta2 / 2) δ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct AffineVector {
    pub eps: Vec<i64>,
    pub delta2: i64,
}

impl AffineVector {
    pub fn new(eps: Vec<i64>, delta2: i64) -> Self {
        Self { eps, delta2 }
    }

    /// `ε_i` (1-based) in rank `n`.
    pub fn eps_i(n: usize, i: usize) -> Self {
        let mut eps = vec![0; n];
        eps[i - 1] = 1;
        Self { eps, delta2: 0 }
    }

    pub fn n(&self) -> usize {
        self.eps.len()
    }

    /// Parses `"1e1+1d2"`-style input: `<c>e<i>` is `c ε_i`, `<c>d2` is `c (δ/2)`, `<c>d` is `c δ`.
    /// The rank is the largest index seen, or `n` if larger.
    pub fn parse(s: &str, n: Option<usize>) -> Result<Self, AffineError> {
        let bad = || AffineError::Parse(s.to_string());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        let mut terms: Vec<String> = Vec::new();
        for (k, ch) in cleaned.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 {
                terms.push(String::new());
            }
            if terms.is_empty() {
                terms.push(String::new());
            }
            terms.last_mut().expect("nonempty").push(ch);
        }
        let mut eps: BTreeMap<usize, i64> = BTreeMap::new();
        let mut delta2 = 0i64;
        for t in terms {
            let split = t.find(['e', 'd']).ok_or_else(bad)?;
            let (coef, rest) = t.split_at(split);
            let coef = match coef {
                "" | "+" => 1,
                "-" => -1,
                c => c.parse::<i64>().map_err(|_| bad())?,
            };
            match rest {
                "d" => delta2 += 2 * coef,
                "d2" => delta2 += coef,
                r if r.starts_with('e') => {
                    let i: usize = r[1..].parse().map_err(|_| bad())?;
                    if i == 0 {
                        return Err(bad());
                    }
                    *eps.entry(i).or_insert(0) += coef;
                }
                _ => return Err(bad()),
            }
        }
        let rank = eps.keys().copied().max().unwrap_or(0).max(n.unwrap_or(0));
        if rank == 0 {
            return Err(bad());
        }
        let mut v = vec![0; rank];
        for (i, c) in eps {
            v[i - 1] = c;
        }
        Ok(Self { eps: v, delta2 })
    }
}

impl fmt::Display for AffineVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.eps.iter().enumerate() {
            if c != 0 {
                parts.push(format!("{c}e{}", i + 1));
            }
        }
        if self.delta2 != 0 || parts.is_empty() {
            parts.push(format!("{}d2", self.delta2));
        }
        let mut s = parts.join("+");
        s = s.replace("+-", "-");
        f.write_str(&s)
    }
}

/// `s_0`, `s_1..s_{n-1}`, `s_n` acting on `V_Z`.
pub fn apply_gen(v: &AffineVector, i: usize) -> Result<AffineVector, AffineError> {
    let n = v.n();
    let mut out = v.clone();
    match i {
        0 => {
            let l1 = v.eps[0];
            out.eps[0] = -l1;
            out.delta2 += 2 * l1;
        }
        i if i == n => out.eps[n - 1] = -v.eps[n - 1],
        i if i < n => out.eps.swap(i - 1, i),
        _ => return Err(AffineError::BadGenerator(i, n)),
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Orbit {
    O1,
    O2,
    O3,
    O4,
    O5,
}

impl Orbit {
    pub const ALL: [Orbit; 5] = [Orbit::O1, Orbit::O2, Orbit::O3, Orbit::O4, Orbit::O5];

    pub fn index(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O{}", self.index())
    }
}

/// Which of `O_1..O_5` contains `v`, if any.
pub fn orbit_membership(v: &AffineVector) -> Option<Orbit> {
    let nz: Vec<i64> = v.eps.iter().copied().filter(|&c| c != 0).collect();
    let d = v.delta2;
    match nz.as_slice() {
        [a] if a.abs() == 1 => Some(if d.rem_euclid(2) == 0 { Orbit::O1 } else { Orbit::O3 }),
        [a] if a.abs() == 2 => match d.rem_euclid(4) {
            0 => Some(Orbit::O2),
            2 => Some(Orbit::O4),
            _ => None,
        },
        [a, b] if a.abs() == 1 && b.abs() == 1 && d.rem_euclid(2) == 0 => Some(Orbit::O5),
        _ => None,
    }
}

/// Everything reachable from `seed` by at most `radius` generators.
pub fn orbit_closure(seed: &AffineVector, radius: usize) -> BTreeSet<AffineVector> {
    let n = seed.n();
    let mut seen = BTreeSet::new();
    seen.insert(seed.clone());
    let mut queue = VecDeque::from([(seed.clone(), 0usize)]);
    while let Some((v, r)) = queue.pop_front() {
        if r == radius {
            continue;
        }
        for i in 0..=n {
            let w = apply_gen(&v, i).expect("generator in range");
            if seen.insert(w.clone()) {
                queue.push_back((w, r + 1));
            }
        }
    }
    seen
}

/// Parameters appearing in the specialization tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Param {
    TnHalf,
    UnHalf,
    T0Half,
    U0Half,
    T,
    One,
}

impl Param {
    pub fn latex(self) -> &'static str {
        match self {
            Param::TnHalf => "t_n^{1/2}",
            Param::UnHalf => "u_n^{1/2}",
            Param::T0Half => "t_0^{1/2}",
            Param::U0Half => "u_0^{1/2}",
            Param::T => "t",
            Param::One => "1",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.latex())
    }
}

pub type SpecTuple = [Param; 5];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SystemDescriptor {
    pub key: &'static str,
    pub kac_name: &'static str,
    pub macdonald_name: &'static str,
    pub bruhat_tits_name: &'static str,
    pub orbits: Vec<Orbit>,
    pub spec_tuple: Option<SpecTuple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetEdge {
    pub upper: &'static str,
    pub lower: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct Catalog {
    pub nodes: Vec<SystemDescriptor>,
    pub edges: Vec<PosetEdge>,
}

fn node(
    key: &'static str,
    names: (&'static str, &'static str, &'static str),
    orbits: &[usize],
    spec: Option<SpecTuple>,
) -> SystemDescriptor {
    SystemDescriptor {
        key,
        kac_name: names.0,
        macdonald_name: names.1,
        bruhat_tits_name: names.2,
        orbits: orbits.iter().map(|&k| Orbit::ALL[k - 1]).collect(),
        spec_tuple: spec,
    }
}

/// The twelve systems and fifteen edges of the classical-type poset.
pub fn catalog() -> Catalog {
    use Param::*;
    let nodes = vec![
        node("CvC", ("(C^\\vee_n,C_n)", "(C^\\vee_n,C_n)", "C-BC_n^{II}"), &[1, 2, 3, 4, 5], Some([TnHalf, UnHalf, T0Half, U0Half, T])),
        node("CvBC", ("(C^\\vee_n,BC_n)", "(C^\\vee_n,BC_n)", "C-BC_n^{I}"), &[1, 2, 3, 5], Some([TnHalf, UnHalf, T0Half, T0Half, T])),
        node("BCC", ("(BC_n,C_n)", "(BC_n,C_n)", "C-BC_n^{IV}"), &[1, 2, 4, 5], Some([TnHalf, UnHalf, T0Half, One, T])),
        node("Cv", ("D_{n+1}^{(2)}", "C_n^\\vee", "C-B_n"), &[1, 3, 5], Some([TnHalf, TnHalf, T0Half, T0Half, T])),
        node("BBv", ("(B_n,B_n^\\vee)", "(B_n,B_n^\\vee)", "B-BC_n"), &[1, 2, 5], Some([TnHalf, UnHalf, One, One, T])),
        node("BC", ("A_{2n}^{(2)}", "BC_n", "C-BC_n^{III}"), &[1, 4, 5], Some([TnHalf, TnHalf, T0Half, One, T])),
        node("C", ("C_n^{(1)}", "C_n", "C_n"), &[2, 4, 5], Some([TnHalf, One, T0Half, One, T])),
        node("B", ("B_n^{(1)}", "B_n", "B_n"), &[1, 5], Some([TnHalf, TnHalf, One, One, T])),
        node("Bv", ("A_{2n-1}^{(2)}", "B_n^\\vee", "B-C_n"), &[2, 5], Some([TnHalf, One, One, One, T])),
        node("D", ("D_n^{(1)}", "D_n", "D_n"), &[5], Some([One, One, One, One, T])),
        node("GL", ("GL_n", "GL_n", "GL_n"), &[], None),
        node("empty", ("\\emptyset", "\\emptyset", "\\emptyset"), &[], None),
    ];
    let pairs = [
        ("CvC", "CvBC"),
        ("CvC", "BCC"),
        ("CvBC", "Cv"),
        ("CvBC", "BBv"),
        ("BCC", "BC"),
        ("BCC", "C"),
        ("Cv", "B"),
        ("BBv", "B"),
        ("BBv", "Bv"),
        ("BC", "B"),
        ("C", "Bv"),
        ("B", "D"),
        ("Bv", "D"),
        ("D", "GL"),
        ("GL", "empty"),
    ];
    let edges = pairs
        .iter()
        .map(|&(upper, lower)| PosetEdge { upper, lower })
        .collect();
    Catalog { nodes, edges }
}

impl Catalog {
    /// Looks a system up by key or by any of its three names.
    pub fn find(&self, name: &str) -> Result<&SystemDescriptor, AffineError> {
        self.nodes
            .iter()
            .find(|d| d.key == name || d.kac_name == name || d.macdonald_name == name || d.bruhat_tits_name == name)
            .ok_or_else(|| AffineError::UnknownSystem(name.to_string()))
    }

    pub fn children(&self, key: &str) -> impl Iterator<Item = &'static str> + '_ {
        let key = key.to_string();
        self.edges.iter().filter(move |e| e.upper == key).map(|e| e.lower)
    }

    /// Graphviz rendering of the poset.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph affine_root_systems {\n");
        for d in &self.nodes {
            let orbits: Vec<String> = d.orbits.iter().map(|o| o.to_string()).collect();
            let spec = d
                .spec_tuple
                .map(|t| t.iter().map(|p| p.latex()).collect::<Vec<_>>().join(","))
                .unwrap_or_default();
            s.push_str(&format!(
                "  {} [label=\"{} = {} = {}\\n{{{}}}\\n({})\"];\n",
                d.key,
                d.kac_name.replace('\\', "\\\\"),
                d.macdonald_name.replace('\\', "\\\\"),
                d.bruhat_tits_name.replace('\\', "\\\\"),
                orbits.join(","),
                spec
            ));
        }
        for e in &self.edges {
            s.push_str(&format!("  {} -- {};\n", e.upper, e.lower));
        }
        s.push_str("}\n");
        s
    }
}

/// Substitution turning `from` into `to` position by position, if it is a function
/// of the parameters of `from`.
pub fn edge_substitution(from: &SpecTuple, to: &SpecTuple) -> Option<BTreeMap<Param, Param>> {
    let mut map = BTreeMap::new();
    for (a, b) in from.iter().zip(to) {
        if let Some(prev) = map.insert(*a, *b) {
            if prev != *b {
                return None;
            }
        }
    }
    if map.get(&Param::One).is_some_and(|&p| p != Param::One) || map.get(&Param::T).is_some_and(|&p| p != Param::T) {
        return None;
    }
    Some(map)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecPath {
    pub nodes: Vec<&'static str>,
    /// Composite map on the parameters of the start node; `None` once a
    /// node without a tuple is reached.
    pub substitution: Option<BTreeMap<Param, Param>>,
}

/// A downward chain from `a` to `b`, breadth first in edge order.
pub fn specialization_path(a: &str, b: &str) -> Result<Option<SpecPath>, AffineError> {
    let cat = catalog();
    let start = cat.find(a)?.key;
    let goal = cat.find(b)?.key;
    let mut parent: HashMap<&'static str, &'static str> = HashMap::new();
    let mut queue = VecDeque::from([start]);
    let mut found = start == goal;
    while let Some(k) = queue.pop_front() {
        if found {
            break;
        }
        for c in cat.children(k) {
            if c != start && !parent.contains_key(c) {
                parent.insert(c, k);
                if c == goal {
                    found = true;
                    break;
                }
                queue.push_back(c);
            }
        }
    }
    if !found {
        return Ok(None);
    }
    let mut nodes = vec![goal];
    while let Some(&p) = parent.get(nodes.last().expect("nonempty")) {
        nodes.push(p);
    }
    nodes.reverse();
    let start_tuple = cat.find(start)?.spec_tuple;
    let end_tuple = cat.find(goal)?.spec_tuple;
    let substitution = match (start_tuple, end_tuple) {
        (Some(s), Some(_)) => {
            let mut map: BTreeMap<Param, Param> = s.iter().map(|&p| (p, p)).collect();
            for w in nodes.windows(2) {
                let from = cat.find(w[0])?.spec_tuple.expect("tuple present");
                let to = cat.find(w[1])?.spec_tuple.expect("tuple present");
                let step = edge_substitution(&from, &to).expect("catalog edges are substitutions");
                for v in map.values_mut() {
                    *v = step.get(v).copied().unwrap_or(*v);
                }
            }
            Some(map)
        }
        _ => None,
    };
    Ok(Some(SpecPath { nodes, substitution }))
}

/// Checks every edge: orbits shrink and the lower tuple is a substitution instance of the upper.
pub fn check_catalog_consistency(cat: &Catalog) -> Vec<String> {
    let mut problems = Vec::new();
    for e in &cat.edges {
        let (Ok(u), Ok(l)) = (cat.find(e.upper), cat.find(e.lower)) else {
            problems.push(format!("dangling edge {}--{}", e.upper, e.lower));
            continue;
        };
        if !l.orbits.iter().all(|o| u.orbits.contains(o)) {
            problems.push(format!("orbits of {} not contained in {}", l.key, u.key));
        }
        if let (Some(a), Some(b)) = (u.spec_tuple, l.spec_tuple) {
            if edge_substitution(&a, &b).is_none() {
                problems.push(format!("{} is not a specialization of {}", l.key, u.key));
            }
        }
    }
    problems
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(eps: &[i64], d2: i64) -> AffineVector {
        AffineVector::new(eps.to_vec(), d2)
    }

    #[test]
    fn generators() {
        assert_eq!(apply_gen(&v(&[1, 0], 0), 0).unwrap(), v(&[-1, 0], 2));
        assert_eq!(apply_gen(&v(&[0, 1], 0), 2).unwrap(), v(&[0, -1], 0));
        assert_eq!(apply_gen(&v(&[1, -1], 0), 1).unwrap(), v(&[-1, 1], 0));
        assert!(apply_gen(&v(&[1, -1], 0), 3).is_err());
    }

    #[test]
    fn orbits() {
        assert_eq!(orbit_membership(&v(&[0, 0, 1], 10)), Some(Orbit::O1));
        assert_eq!(orbit_membership(&v(&[0, 2], 6)), Some(Orbit::O4));
        assert_eq!(orbit_membership(&v(&[0, -2], 4)), Some(Orbit::O2));
        assert_eq!(orbit_membership(&v(&[-1, 0], 1)), Some(Orbit::O3));
        assert_eq!(orbit_membership(&v(&[1, 1], 0)), Some(Orbit::O5));
        assert_eq!(orbit_membership(&v(&[3, 0], 0)), None);
        assert_eq!(orbit_membership(&v(&[1, 1], 1)), None);
    }

    #[test]
    fn closure_stays_in_orbit() {
        let seed = AffineVector::eps_i(2, 2);
        assert_eq!(orbit_closure(&seed, 0).len(), 1);
        assert!(orbit_closure(&seed, 2).iter().all(|w| orbit_membership(w) == Some(Orbit::O1)));
        let seed = v(&[1, -1], 0);
        assert!(orbit_closure(&seed, 3).iter().all(|w| orbit_membership(w) == Some(Orbit::O5)));
    }

    #[test]
    fn parse_vectors() {
        assert_eq!(AffineVector::parse("1e1+1d2", None).unwrap(), v(&[1], 1));
        assert_eq!(AffineVector::parse("e3 + 5d", None).unwrap(), v(&[0, 0, 1], 10));
        assert_eq!(AffineVector::parse("2e2-3d2", Some(3)).unwrap(), v(&[0, 2, 0], -3));
        assert!(AffineVector::parse("1x", None).is_err());
        assert_eq!(v(&[0, 2, 0], -3).to_string(), "2e2-3d2");
    }

    #[test]
    fn catalog_shape() {
        let cat = catalog();
        assert_eq!(cat.nodes.len(), 12);
        assert_eq!(cat.edges.len(), 15);
        let b = cat.find("B").unwrap();
        assert_eq!(b.spec_tuple, Some([Param::TnHalf, Param::TnHalf, Param::One, Param::One, Param::T]));
        assert_eq!(cat.find("CvC").unwrap().orbits.len(), 5);
        assert!(check_catalog_consistency(&cat).is_empty());
    }

    #[test]
    fn paths() {
        let p = specialization_path("CvC", "D").unwrap().unwrap();
        let sub = p.substitution.unwrap();
        for k in [Param::TnHalf, Param::UnHalf, Param::T0Half, Param::U0Half] {
            assert_eq!(sub[&k], Param::One);
        }
        assert_eq!(sub[&Param::T], Param::T);
        assert_eq!(specialization_path("B", "CvC").unwrap(), None);
        let p = specialization_path("CvC", "C").unwrap().unwrap();
        assert_eq!(p.nodes, ["CvC", "BCC", "C"]);
        assert!(specialization_path("CvC", "nope").is_err());
    }
}
