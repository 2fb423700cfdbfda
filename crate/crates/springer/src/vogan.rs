//! Descents and the Vogan transformations on standard tableaux.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::diagrams::YoungDiagram;
use crate::oracle::enumerate_standard;
use crate::tableaux::StandardTableau;
use crate::{Error, Result};

/// Entries `i` with `i + 1` in a strictly lower row.
pub fn descents(t: &StandardTableau) -> BTreeSet<usize> {
    (1..t.n()).filter(|&i| t.row_of(i) < t.row_of(i + 1)).collect()
}

fn is_descent(t: &StandardTableau, i: usize) -> bool {
    i >= 1 && i < t.n() && t.row_of(i) < t.row_of(i + 1)
}

/// Domain of the forward map at `i`: `i + 1` is a descent and `i` is not.
pub fn in_forward_domain(t: &StandardTableau, i: usize) -> bool {
    i >= 1 && i + 2 <= t.n() && is_descent(t, i + 1) && !is_descent(t, i)
}

/// Domain of the backward map at `i`: `i` is a descent and `i + 1` is not.
pub fn in_backward_domain(t: &StandardTableau, i: usize) -> bool {
    i >= 1 && i + 2 <= t.n() && is_descent(t, i) && !is_descent(t, i + 1)
}

fn swap(t: &StandardTableau, a: usize, b: usize) -> Result<StandardTableau> {
    t.swap_entries(a, b)
        .map_err(|e| Error::Invariant(format!("exchanging {a} and {b} in {t}: {e}")))
}

/// The transformation acting on `i, i+1, i+2`, or its inverse when `forward` is false.
pub fn vogan_t_ab(t: &StandardTableau, i: usize, forward: bool) -> Result<StandardTableau> {
    if forward {
        if !in_forward_domain(t, i) {
            return Err(Error::Domain(format!("{t} is not in the forward domain at {i}")));
        }
        if t.row_of(i) < t.row_of(i + 2) {
            swap(t, i + 1, i + 2)
        } else {
            swap(t, i, i + 1)
        }
    } else {
        if !in_backward_domain(t, i) {
            return Err(Error::Domain(format!("{t} is not in the backward domain at {i}")));
        }
        let pre = if t.row_of(i) < t.row_of(i + 2) { swap(t, i, i + 1)? } else { swap(t, i + 1, i + 2)? };
        if !in_forward_domain(&pre, i) || &vogan_t_ab(&pre, i, true)? != t {
            return Err(Error::Invariant(format!("backward map at {i} does not invert on {t}")));
        }
        Ok(pre)
    }
}

/// `i` and `i + 1` lie in different rows and different columns, `2 <= i <= n - 1`.
pub fn in_swap_domain(t: &StandardTableau, i: usize) -> bool {
    i >= 2 && i < t.n() && t.row_of(i) != t.row_of(i + 1) && t.col_of(i) != t.col_of(i + 1)
}

pub fn vogan_t_i(t: &StandardTableau, i: usize) -> Result<StandardTableau> {
    if !in_swap_domain(t, i) {
        return Err(Error::Domain(format!("{i} and {} share a row or column of {t}", i + 1)));
    }
    swap(t, i, i + 1)
}

/// One application of [`vogan_t_ab`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Transform {
    pub i: usize,
    pub forward: bool,
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.forward { "+" } else { "-" }, self.i)
    }
}

/// A pair reached from a seed `(T, T_i(T))` by transforming both members alike.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoganPair {
    pub first: StandardTableau,
    pub second: StandardTableau,
    pub seed: StandardTableau,
    pub seed_swap: usize,
    /// Applied in order to both members of the seed.
    pub provenance: Vec<Transform>,
}

impl VoganPair {
    /// Recomputes the pair from its seed and provenance.
    pub fn replay(&self) -> Result<(StandardTableau, StandardTableau)> {
        let mut a = self.seed.clone();
        let mut b = vogan_t_i(&a, self.seed_swap)?;
        for step in &self.provenance {
            a = vogan_t_ab(&a, step.i, step.forward)?;
            b = vogan_t_ab(&b, step.i, step.forward)?;
        }
        Ok((a, b))
    }

    /// The pair as an unordered set, smaller tableau first.
    pub fn key(&self) -> (StandardTableau, StandardTableau) {
        if self.first <= self.second {
            (self.first.clone(), self.second.clone())
        } else {
            (self.second.clone(), self.first.clone())
        }
    }
}

/// Closure of the seeds `(T, T_i(T))` under simultaneous transformations, as unordered pairs.
pub fn vogan_set(shape: &YoungDiagram) -> Vec<VoganPair> {
    let tabs = enumerate_standard(shape);
    let index: HashMap<&StandardTableau, usize> = tabs.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let n = shape.n();
    let moves: Vec<Transform> = (1..n.saturating_sub(1))
        .flat_map(|i| [Transform { i, forward: true }, Transform { i, forward: false }])
        .collect();
    let image: Vec<Vec<Option<usize>>> = tabs
        .iter()
        .map(|t| {
            moves
                .iter()
                .map(|m| vogan_t_ab(t, m.i, m.forward).ok().map(|x| index[&x]))
                .collect()
        })
        .collect();

    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut found: HashMap<(usize, usize), (usize, usize, Vec<Transform>)> = HashMap::new();
    let mut queue = VecDeque::new();
    for (a, t) in tabs.iter().enumerate() {
        for i in 2..n {
            if let Ok(s) = vogan_t_i(t, i) {
                let b = index[&s];
                if !found.contains_key(&key(a, b)) {
                    found.insert(key(a, b), (a, i, Vec::new()));
                    queue.push_back((a, b));
                }
            }
        }
    }
    while let Some((a, b)) = queue.pop_front() {
        let (seed, swap_at, path) = found[&key(a, b)].clone();
        for (m, step) in moves.iter().enumerate() {
            if let (Some(x), Some(y)) = (image[a][m], image[b][m]) {
                if !found.contains_key(&key(x, y)) {
                    let mut p = path.clone();
                    p.push(*step);
                    found.insert(key(x, y), (seed, swap_at, p));
                    queue.push_back((x, y));
                }
            }
        }
    }
    let mut pairs: Vec<((usize, usize), VoganPair)> = found
        .into_iter()
        .map(|(k, (seed, seed_swap, provenance))| {
            let mut a = tabs[seed].clone();
            let mut b = vogan_t_i(&a, seed_swap).expect("seed in domain");
            for step in &provenance {
                a = vogan_t_ab(&a, step.i, step.forward).expect("recorded step");
                b = vogan_t_ab(&b, step.i, step.forward).expect("recorded step");
            }
            let pair = VoganPair { first: a, second: b, seed: tabs[seed].clone(), seed_swap, provenance };
            (k, pair)
        })
        .collect();
    pairs.sort_by_key(|(k, _)| *k);
    pairs.into_iter().map(|(_, p)| p).collect()
}
