//! Permutations of `0..n` in one-line notation.

/// `w[i]` is the image of `i`.
pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// Number of inversions, i.e. the Coxeter length.
pub fn length(w: &[usize]) -> usize {
    let mut k = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                k += 1;
            }
        }
    }
    k
}

/// `v o w`.
pub fn compose(v: &[usize], w: &[usize]) -> Perm {
    w.iter().map(|&i| v[i]).collect()
}

pub fn inverse(w: &[usize]) -> Perm {
    let mut out = vec![0; w.len()];
    for (i, &j) in w.iter().enumerate() {
        out[j] = i;
    }
    out
}

/// Left multiplication by the simple transposition swapping `i` and `i+1`.
pub fn left_simple(i: usize, w: &[usize]) -> Perm {
    w.iter()
        .map(|&x| match x {
            x if x == i => i + 1,
            x if x == i + 1 => i,
            x => x,
        })
        .collect()
}

/// `w` from a word `s_{i_1} ... s_{i_k}` (zero-based letters).
pub fn from_word(n: usize, word: &[usize]) -> Perm {
    word.iter().rev().fold(identity(n), |w, &i| left_simple(i, &w))
}

/// A reduced word for `w` (zero-based letters); `from_word(n, &reduced_word(w)) == w`.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    // peel left descents: s_i w is shorter iff i+1 precedes i in w
    let mut cur = w.to_vec();
    let mut word = Vec::new();
    let pos = |w: &[usize], v: usize| w.iter().position(|&x| x == v).expect("value present");
    'outer: loop {
        for i in 0..cur.len().saturating_sub(1) {
            if pos(&cur, i + 1) < pos(&cur, i) {
                cur = left_simple(i, &cur);
                word.push(i);
                continue 'outer;
            }
        }
        break;
    }
    word
}

pub fn is_reduced(n: usize, word: &[usize]) -> bool {
    word.iter().all(|&i| i + 1 < n) && length(&from_word(n, word)) == word.len()
}

/// All permutations grouped by length; each non-identity entry records
/// `(w, i, parent)` with `w = s_i * levels[len-1][parent]` and `len(w) = len(parent) + 1`.
pub fn bruhat_levels(n: usize) -> Vec<Vec<(Perm, usize, usize)>> {
    let top = n * n.saturating_sub(1) / 2;
    let mut levels: Vec<Vec<(Perm, usize, usize)>> = vec![vec![(identity(n), 0, 0)]];
    let mut seen = std::collections::HashSet::new();
    seen.insert(identity(n));
    for _ in 0..top {
        let prev = levels.last().expect("nonempty");
        let mut next = Vec::new();
        for (k, (w, _, _)) in prev.iter().enumerate() {
            for i in 0..n - 1 {
                let pi = w.iter().position(|&x| x == i).expect("value present");
                let pj = w.iter().position(|&x| x == i + 1).expect("value present");
                if pi < pj {
                    let sw = left_simple(i, w);
                    if seen.insert(sw.clone()) {
                        next.push((sw, i, k));
                    }
                }
            }
        }
        levels.push(next);
    }
    levels
}

/// The stable-sort permutation `v` with `v[i]` the sorted position of index `i`;
/// `v.μ` is weakly increasing and `v` has minimal length among such permutations.
pub fn min_sorting_perm(mu: &[usize]) -> Perm {
    let mut order: Vec<usize> = (0..mu.len()).collect();
    order.sort_by_key(|&i| mu[i]);
    let mut v = vec![0; mu.len()];
    for (pos, &i) in order.iter().enumerate() {
        v[i] = pos;
    }
    v
}

/// `(w.μ)_{w(i)} = μ_i`.
pub fn act_on_weight(w: &[usize], mu: &[usize]) -> Vec<usize> {
    let mut out = vec![0; mu.len()];
    for (i, &m) in mu.iter().enumerate() {
        out[w[i]] = m;
    }
    out
}
