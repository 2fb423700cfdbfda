//! Exhaustive enumeration and cross-validation on small shapes.
//!
//! [`cross_validate`] evaluates every pair of a shape and checks that the
//! decision procedures of this crate agree with each other and with the
//! structural properties of membership and intersections.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::constructibility::{construct_hook, construct_two_col, construct_two_row, strips_cross_through_rectangle};
use crate::diagrams::{dominated_unchecked, YoungDiagram};
use crate::jdt::{schuetzenberger, QuotientTable};
use crate::meanders::{codim_one_condition_iii, hook_intersection, intersection_2row, is_adjacent_swap, two_col_codim_one};
use crate::membership::{dominance_member, first_dominance_failure, hook_a, two_col_a, two_col_standard_member, two_row_a};
use crate::tableaux::{RowStandardTableau, StandardTableau};
use crate::vogan::{vogan_set, vogan_t_i};
use crate::{Error, Result};

/// All standard tableaux of a shape in lexicographic order of their rows.
pub fn enumerate_standard(shape: &YoungDiagram) -> Vec<StandardTableau> {
    fn go(shape: &[usize], k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<StandardTableau>) {
        let n: usize = shape.iter().sum();
        if k > n {
            out.push(StandardTableau::new(rows.clone()).expect("filled by addable boxes"));
            return;
        }
        for p in 0..shape.len() {
            let len = rows[p].len();
            if len < shape[p] && (p == 0 || rows[p - 1].len() > len) {
                rows[p].push(k);
                go(shape, k + 1, rows, out);
                rows[p].pop();
            }
        }
    }
    let mut out = Vec::new();
    if shape.is_empty() {
        return out;
    }
    go(shape.rows(), 1, &mut vec![Vec::new(); shape.num_rows()], &mut out);
    out.sort();
    out
}

/// All row-standard tableaux of a shape in lexicographic order of their rows.
pub fn enumerate_row_standard(shape: &YoungDiagram) -> Vec<RowStandardTableau> {
    fn go(shape: &[usize], k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<RowStandardTableau>) {
        let n: usize = shape.iter().sum();
        if k > n {
            out.push(RowStandardTableau::new(rows.clone()).expect("rows filled increasingly"));
            return;
        }
        for p in 0..shape.len() {
            if rows[p].len() < shape[p] {
                rows[p].push(k);
                go(shape, k + 1, rows, out);
                rows[p].pop();
            }
        }
    }
    let mut out = Vec::new();
    if shape.is_empty() {
        return out;
    }
    go(shape.rows(), 1, &mut vec![Vec::new(); shape.num_rows()], &mut out);
    out.sort();
    out
}

/// Number of standard tableaux by the hook-length formula.
pub fn hook_length_count(shape: &YoungDiagram) -> u128 {
    let cols = shape.columns();
    let num: u128 = (1..=shape.n() as u128).product();
    let hooks: u128 = shape
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(p, &len)| {
            let cols = &cols;
            (0..len).map(move |c| ((len - c - 1) + (cols[c] - p - 1) + 1) as u128)
        })
        .product();
    num / hooks
}

/// Number of row-standard tableaux, `n! / ∏ λ_p!`.
pub fn multinomial_count(shape: &YoungDiagram) -> u128 {
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    shape.rows().iter().fold(fact(shape.n()), |acc, &l| acc / fact(l))
}

fn require_family(shape: &YoungDiagram) -> Result<()> {
    if shape.classify().is_general() {
        return Err(Error::GeneralShape(shape.to_string()));
    }
    Ok(())
}

/// Every member pair `(τ, T)` of the shape, ordered by `τ` then `T`.
pub fn k_pairs(shape: &YoungDiagram) -> Result<Vec<(RowStandardTableau, StandardTableau)>> {
    require_family(shape)?;
    let data = ShapeData::new(shape);
    let mut out = Vec::new();
    for (a, tau) in data.row_standard.iter().enumerate() {
        for (b, t) in data.standard.iter().enumerate() {
            if data.member[a][b] {
                out.push((tau.clone(), t.clone()));
            }
        }
    }
    Ok(out)
}

/// Hook, two-row and two-column shapes with `1..=max_boxes` boxes.
pub fn family_shapes(max_boxes: usize) -> Vec<YoungDiagram> {
    (1..=max_boxes)
        .flat_map(YoungDiagram::partitions)
        .filter(|y| !y.classify().is_general())
        .collect()
}

/// Enumerations, quotient tables and the dominance verdict of every pair of one shape.
pub struct ShapeData {
    pub shape: YoungDiagram,
    pub standard: Vec<StandardTableau>,
    pub row_standard: Vec<RowStandardTableau>,
    pub tables: Vec<QuotientTable>,
    pub std_index: HashMap<StandardTableau, usize>,
    pub rs_index: HashMap<RowStandardTableau, usize>,
    /// `member[a][b]`: `row_standard[a] ∈ standard[b]`.
    pub member: Vec<Vec<bool>>,
}

impl ShapeData {
    pub fn new(shape: &YoungDiagram) -> Self {
        let standard = enumerate_standard(shape);
        let row_standard = enumerate_row_standard(shape);
        let tables: Vec<QuotientTable> = standard.par_iter().map(QuotientTable::new).collect();
        let member = row_standard
            .par_iter()
            .map(|tau| tables.iter().map(|tb| first_dominance_failure(tau, tb).is_none()).collect())
            .collect();
        let std_index = standard.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        let rs_index = row_standard.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();
        ShapeData { shape: shape.clone(), standard, row_standard, tables, std_index, rs_index, member }
    }

    fn rs_of(&self, t: &StandardTableau) -> usize {
        self.rs_index[t.as_row_standard()]
    }

    /// Whether some standard tableau lies in both components.
    pub fn common_standard(&self, b: usize, c: usize) -> bool {
        self.standard.iter().any(|s| {
            let a = self.rs_of(s);
            self.member[a][b] && self.member[a][c]
        })
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let m = self.standard.len();
        (0..m).flat_map(|b| (b + 1..m).map(move |c| (b, c))).collect()
    }
}

/// One named check with its population and the counterexamples found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub population: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn new(name: &str, population: usize, mut failures: Vec<String>) -> Self {
        failures.sort();
        failures.dedup();
        Check { name: name.to_string(), population, failures }
    }
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub shape: YoungDiagram,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }

    /// `key=value` lines, one per check, then one per counterexample.
    pub fn structured(&self) -> String {
        let mut out = format!("shape={} elapsed_ms={}\n", self.shape, self.elapsed.as_millis());
        for c in &self.checks {
            out.push_str(&format!(
                "check={} population={} failures={}\n",
                c.name,
                c.population,
                c.failures.len()
            ));
            for f in &c.failures {
                out.push_str(&format!("failure check={} pair={f}\n", c.name));
            }
        }
        out
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "shape {} ({:.2?})", self.shape, self.elapsed)?;
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            let status = if c.passed() { "ok" } else { "FAILED" };
            writeln!(f, "  {:<width$}  {:>8}  {:>6}  {status}", c.name, c.population, c.failures.len())?;
            for x in c.failures.iter().take(5) {
                writeln!(f, "    {x}")?;
            }
        }
        Ok(())
    }
}

fn pair_name(a: &impl fmt::Display, b: &impl fmt::Display) -> String {
    format!("{a}|{b}")
}

/// Runs `f` on every `(τ, T)` index pair in parallel and collects the failures.
fn over_pairs<F>(d: &ShapeData, f: F) -> (usize, Vec<String>)
where
    F: Fn(usize, usize) -> Option<String> + Sync,
{
    let m = d.standard.len();
    let failures = (0..d.row_standard.len())
        .into_par_iter()
        .flat_map_iter(|a| (0..m).filter_map(|b| f(a, b)).collect::<Vec<_>>())
        .collect();
    (d.row_standard.len() * m, failures)
}

/// Dominance, each applicable inductive criterion and each applicable algorithm agree.
pub fn check_criteria(d: &ShapeData) -> Check {
    let fam = d.shape.classify();
    let (pop, failures) = over_pairs(d, |a, b| {
        let tau = &d.row_standard[a];
        let t = &d.standard[b];
        let want = d.member[a][b];
        let mut got: Vec<(&str, Result<bool>)> = Vec::new();
        if fam.hook {
            got.push(("hook_A", hook_a(tau, t)));
            got.push(("constructible_hook", construct_hook(tau, t).map(|x| x.succeeded())));
        }
        if fam.two_row {
            got.push(("two_row_A", two_row_a(tau, t)));
            got.push(("constructible_two_row", construct_two_row(tau, t).map(|x| x.succeeded())));
        }
        if fam.two_column {
            got.push(("two_col_A", two_col_a(tau, t)));
            got.push(("constructible_two_col", construct_two_col(tau, t).map(|x| x.succeeded())));
        }
        let bad: Vec<String> = got
            .into_iter()
            .filter_map(|(name, r)| match r {
                Ok(v) if v == want => None,
                Ok(v) => Some(format!("{name}={v}")),
                Err(e) => Some(format!("{name}: {e}")),
            })
            .collect();
        (!bad.is_empty()).then(|| format!("{} dominance={want} {}", pair_name(tau, t), bad.join(" ")))
    });
    Check::new("criteria-agree", pop, failures)
}

/// `(τ, st(τ))` is always a member pair.
pub fn check_standardization(d: &ShapeData) -> Check {
    let failures = d
        .row_standard
        .iter()
        .enumerate()
        .filter(|(a, tau)| !d.member[*a][d.std_index[&tau.standardize()]])
        .map(|(_, tau)| pair_name(tau, &tau.standardize()))
        .collect();
    Check::new("standardization-member", d.row_standard.len(), failures)
}

/// `τ ∈ T` implies `st(τ) ∈ T`.
pub fn check_standardization_monotone(d: &ShapeData) -> Check {
    let (pop, failures) = over_pairs(d, |a, b| {
        let s = d.row_standard[a].standardize();
        let a2 = d.rs_of(&s);
        (d.member[a][b] && !d.member[a2][b]).then(|| pair_name(&d.row_standard[a], &d.standard[b]))
    });
    Check::new("standardization-monotone", pop, failures)
}

/// Permuting rows of equal length does not change membership; adjacent swaps generate all such permutations.
pub fn check_row_equivalence(d: &ShapeData) -> Check {
    let rows = d.shape.rows();
    let swaps: Vec<usize> = (1..rows.len()).filter(|&p| rows[p - 1] == rows[p]).collect();
    let mut failures = Vec::new();
    for (a, tau) in d.row_standard.iter().enumerate() {
        for &p in &swaps {
            let other = tau.swap_rows(p - 1, p).expect("rows of equal length");
            if d.member[a] != d.member[d.rs_index[&other]] {
                failures.push(pair_name(tau, &other));
            }
        }
    }
    Check::new("row-equivalence-invariance", d.row_standard.len() * swaps.len(), failures)
}

/// `τ ∈ T` iff `S·τ ∈ T^S`.
pub fn check_schuetzenberger(d: &ShapeData) -> Check {
    let dual_t: Vec<usize> = d.standard.iter().map(|t| d.std_index[&schuetzenberger(t)]).collect();
    let dual_tau: Vec<usize> = d.row_standard.iter().map(|t| d.rs_index[&t.s_dual()]).collect();
    let (pop, failures) = over_pairs(d, |a, b| {
        (d.member[a][b] != d.member[dual_tau[a]][dual_t[b]]).then(|| pair_name(&d.row_standard[a], &d.standard[b]))
    });
    Check::new("schuetzenberger-stability", pop, failures)
}

/// Restriction to the entries `1..=k` when the restricted shapes agree: membership
/// passes down, and back up when the remaining entries sit in the same columns.
pub fn check_subtableaux(d: &ShapeData) -> Vec<Check> {
    let n = d.shape.n();
    let prefixes: Vec<Vec<(StandardTableau, QuotientTable)>> = d
        .standard
        .par_iter()
        .map(|t| {
            (1..n)
                .map(|k| {
                    let p = t.prefix(k);
                    let tb = QuotientTable::new(&p);
                    (p, tb)
                })
                .collect()
        })
        .collect();
    let m = d.standard.len();
    let results: Vec<(usize, usize, Vec<String>, Vec<String>)> = (0..d.row_standard.len())
        .into_par_iter()
        .map(|a| {
            let tau = &d.row_standard[a];
            let (mut pa, mut pb, mut fa, mut fb) = (0, 0, Vec::new(), Vec::new());
            for b in 0..m {
                let t = &d.standard[b];
                for k in 1..n {
                    let sub = tau.prefix(k);
                    let (tp, tb) = &prefixes[b][k - 1];
                    if sub.shape() != tp.shape() {
                        continue;
                    }
                    let sub_member = first_dominance_failure(&sub, tb).is_none();
                    pa += 1;
                    if d.member[a][b] && !sub_member {
                        fa.push(format!("{} k={k}", pair_name(tau, t)));
                    }
                    if (k + 1..=n).all(|e| tau.col_of(e) == t.col_of(e)) {
                        pb += 1;
                        if sub_member != d.member[a][b] {
                            fb.push(format!("{} k={k}", pair_name(tau, t)));
                        }
                    }
                }
            }
            (pa, pb, fa, fb)
        })
        .collect();
    let (mut pa, mut pb, mut fa, mut fb) = (0, 0, Vec::new(), Vec::new());
    for (x, y, f, g) in results {
        pa += x;
        pb += y;
        fa.extend(f);
        fb.extend(g);
    }
    vec![Check::new("subtableau-restriction", pa, fa), Check::new("subtableau-same-column", pb, fb)]
}

/// On two columns, membership of a standard `S` is decided by the prefix shapes alone.
pub fn check_two_column_standard(d: &ShapeData) -> Check {
    let mut failures = Vec::new();
    for s in &d.standard {
        let a = d.rs_of(s);
        for (b, t) in d.standard.iter().enumerate() {
            match two_col_standard_member(s, t) {
                Ok(v) if v == d.member[a][b] => {}
                Ok(v) => failures.push(format!("{} prefix={v}", pair_name(s, t))),
                Err(e) => failures.push(format!("{}: {e}", pair_name(s, t))),
            }
        }
    }
    Check::new("standard-two-column-prefix", d.standard.len().pow(2), failures)
}

/// On two rows, `S ∈ T` implies `T^t ∈ S^t`.
pub fn check_transpose_bridge(d: &ShapeData) -> Check {
    let mut failures = Vec::new();
    for s in &d.standard {
        let a = d.rs_of(s);
        for (b, t) in d.standard.iter().enumerate() {
            if !d.member[a][b] {
                continue;
            }
            let tt = t.transpose();
            match dominance_member(tt.as_row_standard(), &s.transpose()) {
                Ok(v) if v.member => {}
                Ok(_) => failures.push(pair_name(s, t)),
                Err(e) => failures.push(format!("{}: {e}", pair_name(s, t))),
            }
        }
    }
    Check::new("transpose-bridge", d.standard.len().pow(2), failures)
}

type PairSet = BTreeSet<(StandardTableau, StandardTableau)>;

fn unordered(t: &StandardTableau, s: &StandardTableau) -> (StandardTableau, StandardTableau) {
    if t <= s {
        (t.clone(), s.clone())
    } else {
        (s.clone(), t.clone())
    }
}

fn vogan_keys(shape: &YoungDiagram) -> PairSet {
    vogan_set(shape).iter().map(|p| p.key()).collect()
}

fn set_difference_failures(name_a: &str, a: &PairSet, name_b: &str, b: &PairSet) -> Vec<String> {
    let mut out: Vec<String> = a
        .difference(b)
        .map(|(x, y)| format!("{} in {name_a} only", pair_name(x, y)))
        .collect();
    out.extend(b.difference(a).map(|(x, y)| format!("{} in {name_b} only", pair_name(x, y))));
    out
}

/// Two rows: a common standard member exists iff the meander is even.
pub fn check_intersection_graph_meander(d: &ShapeData) -> Check {
    let pairs = d.pairs();
    let failures = pairs
        .par_iter()
        .filter_map(|&(b, c)| {
            let (t, s) = (&d.standard[b], &d.standard[c]);
            match intersection_2row(t, s) {
                Ok(x) if x.nonempty == d.common_standard(b, c) => None,
                Ok(x) => Some(format!("{} meander_even={}", pair_name(t, s), x.nonempty)),
                Err(e) => Some(format!("{}: {e}", pair_name(t, s))),
            }
        })
        .collect();
    Check::new("intersection-graph-meander", pairs.len(), failures)
}

/// Two rows: the codimension-one pairs from meanders, from Vogan transformations
/// and from the membership condition coincide.
pub fn check_codim_one_two_row(d: &ShapeData) -> Check {
    let pairs = d.pairs();
    let mut meander_set = PairSet::new();
    let mut cond_set = PairSet::new();
    let mut failures = Vec::new();
    for &(b, c) in &pairs {
        let (t, s) = (&d.standard[b], &d.standard[c]);
        match (intersection_2row(t, s), intersection_2row(s, t), codim_one_condition_iii(t, s)) {
            (Ok(x), Ok(y), Ok(z)) => {
                if x.codim_one != y.codim_one {
                    failures.push(format!("{} asymmetric", pair_name(t, s)));
                }
                if x.codim_one {
                    meander_set.insert(unordered(t, s));
                }
                if z {
                    cond_set.insert(unordered(t, s));
                }
            }
            (x, y, z) => failures.push(format!("{}: {:?} {:?} {:?}", pair_name(t, s), x.err(), y.err(), z.err())),
        }
    }
    let v = vogan_keys(&d.shape);
    failures.extend(set_difference_failures("meander", &meander_set, "vogan", &v));
    failures.extend(set_difference_failures("meander", &meander_set, "condition", &cond_set));
    Check::new("codim-one-two-row", pairs.len(), failures)
}

/// Hooks: codimension one from the formula, from adjacent swaps, from the
/// seeds `(T, T_i(T))` and from the Vogan closure coincide; nonemptiness
/// from interlacing agrees with the common-member test.
pub fn check_hook_intersections(d: &ShapeData) -> Vec<Check> {
    let pairs = d.pairs();
    let mut formula = PairSet::new();
    let mut swaps = PairSet::new();
    let mut nonempty_failures = Vec::new();
    let mut failures = Vec::new();
    for &(b, c) in &pairs {
        let (t, s) = (&d.standard[b], &d.standard[c]);
        match hook_intersection(t, s) {
            Ok(h) => {
                if h.codim_one {
                    formula.insert(unordered(t, s));
                }
                if h.nonempty != d.common_standard(b, c) {
                    nonempty_failures.push(format!("{} interlace={}", pair_name(t, s), h.nonempty));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", pair_name(t, s))),
        }
        if is_adjacent_swap(t, s) {
            swaps.insert(unordered(t, s));
        }
    }
    let mut seeds = PairSet::new();
    for t in &d.standard {
        for i in 2..d.shape.n() {
            if let Ok(s) = vogan_t_i(t, i) {
                seeds.insert(unordered(t, &s));
            }
        }
    }
    let v = vogan_keys(&d.shape);
    failures.extend(set_difference_failures("formula", &formula, "swap", &swaps));
    failures.extend(set_difference_failures("formula", &formula, "seed", &seeds));
    failures.extend(set_difference_failures("formula", &formula, "vogan", &v));
    vec![
        Check::new("hook-codim-one", pairs.len(), failures),
        Check::new("hook-nonempty", pairs.len(), nonempty_failures),
    ]
}

/// Two columns: the codimension-one pairs are the transposes of those of the
/// transposed two-row shape, symmetric, and equal to the Vogan closure, which
/// itself is the transpose of the two-row closure.
pub fn check_codim_one_two_column(d: &ShapeData) -> Check {
    let pairs = d.pairs();
    let mut here = PairSet::new();
    let mut failures = Vec::new();
    for &(b, c) in &pairs {
        let (t, s) = (&d.standard[b], &d.standard[c]);
        match (two_col_codim_one(t, s), two_col_codim_one(s, t)) {
            (Ok(x), Ok(y)) => {
                if x != y {
                    failures.push(format!("{} asymmetric", pair_name(t, s)));
                }
                if x {
                    here.insert(unordered(t, s));
                }
            }
            (x, y) => failures.push(format!("{}: {:?} {:?}", pair_name(t, s), x.err(), y.err())),
        }
    }
    let shape_t = d.shape.transpose();
    let rows = enumerate_standard(&shape_t);
    let mut there = PairSet::new();
    for (b, t) in rows.iter().enumerate() {
        for s in &rows[b + 1..] {
            match intersection_2row(t, s) {
                Ok(x) if x.codim_one => {
                    there.insert(unordered(&t.transpose(), &s.transpose()));
                }
                Ok(_) => {}
                Err(e) => failures.push(format!("{}: {e}", pair_name(t, s))),
            }
        }
    }
    let v = vogan_keys(&d.shape);
    let v_rows: PairSet = vogan_keys(&shape_t).iter().map(|(x, y)| unordered(&x.transpose(), &y.transpose())).collect();
    failures.extend(set_difference_failures("two-column", &here, "transposed", &there));
    failures.extend(set_difference_failures("two-column", &here, "vogan", &v));
    failures.extend(set_difference_failures("vogan", &v, "transposed-vogan", &v_rows));
    Check::new("codim-one-two-column", pairs.len(), failures)
}

/// Codimension one for the pair by every family rule that applies, demanding agreement.
fn family_codim_one(t: &StandardTableau, s: &StandardTableau) -> Result<bool> {
    let fam = t.shape().classify();
    let mut votes = Vec::new();
    if fam.hook {
        votes.push(hook_intersection(t, s)?.codim_one);
    }
    if fam.two_row {
        votes.push(intersection_2row(t, s)?.codim_one);
    }
    if fam.two_column {
        votes.push(two_col_codim_one(t, s)?);
    }
    if votes.windows(2).any(|w| w[0] != w[1]) {
        return Err(Error::Invariant(format!("family rules disagree on codimension one for ({t}, {s})")));
    }
    Ok(votes.first().copied().unwrap_or(false))
}

/// Codimension one implies that one tableau of the pair lies in the other's component.
pub fn check_codim_one_membership(d: &ShapeData) -> Check {
    let pairs = d.pairs();
    let failures = pairs
        .par_iter()
        .filter_map(|&(b, c)| {
            let (t, s) = (&d.standard[b], &d.standard[c]);
            match family_codim_one(t, s) {
                Ok(true) => {
                    let ok = d.member[d.rs_of(s)][b] || d.member[d.rs_of(t)][c];
                    (!ok).then(|| pair_name(t, s))
                }
                Ok(false) => None,
                Err(e) => Some(format!("{}: {e}", pair_name(t, s))),
            }
        })
        .collect();
    Check::new("codim-one-membership", pairs.len(), failures)
}

/// Some `i < j` with `Y^T_{j/i}` strictly below `Y^S_{j/i}`.
pub fn strictly_separated(t: &QuotientTable, s: &QuotientTable) -> Option<(usize, usize)> {
    let n = t.n();
    (0..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .find(|&(i, j)| {
            let (a, b) = (t.get(i, j), s.get(i, j));
            a != b && dominated_unchecked(a.rows(), b.rows())
        })
}

/// Every ordered pair of distinct standard tableaux is separated by a strict quotient inequality.
pub fn check_strict_separation(d: &ShapeData) -> Check {
    let m = d.standard.len();
    let failures = (0..m)
        .into_par_iter()
        .flat_map_iter(|b| {
            (0..m)
                .filter(move |&c| c != b)
                .filter(|&c| strictly_separated(&d.tables[b], &d.tables[c]).is_none())
                .map(|c| pair_name(&d.standard[b], &d.standard[c]))
                .collect::<Vec<_>>()
        })
        .collect();
    Check::new("strict-quotient-separation", m * m.saturating_sub(1), failures)
}

/// Quotient shapes of equal size on the shape are pairwise comparable.
pub fn check_quotients_comparable(d: &ShapeData) -> Check {
    let n = d.shape.n();
    let m = d.standard.len();
    let mut failures = Vec::new();
    for b in 0..m {
        for c in b + 1..m {
            for i in 0..n {
                for j in i + 1..=n {
                    let (x, y) = (d.tables[b].get(i, j).rows(), d.tables[c].get(i, j).rows());
                    if !dominated_unchecked(x, y) && !dominated_unchecked(y, x) {
                        failures.push(format!("{} i={i} j={j}", pair_name(&d.standard[b], &d.standard[c])));
                    }
                }
            }
        }
    }
    Check::new("quotients-comparable", m * m.saturating_sub(1) / 2, failures)
}

/// Successful two-row constructions change which in-place strip is longer only through a rectangle.
pub fn check_strip_rectangle(d: &ShapeData) -> Check {
    let (pop, failures) = over_pairs(d, |a, b| {
        if !d.member[a][b] {
            return None;
        }
        let (tau, t) = (&d.row_standard[a], &d.standard[b]);
        match construct_two_row(tau, t) {
            Ok(tr) if !tr.succeeded() || strips_cross_through_rectangle(&tr) => None,
            Ok(_) => Some(pair_name(tau, t)),
            Err(e) => Some(format!("{}: {e}", pair_name(tau, t))),
        }
    });
    Check::new("strip-rectangle", pop, failures)
}

/// Enumeration sizes match the closed forms and contain no duplicates.
pub fn check_counts(d: &ShapeData) -> Check {
    let mut failures = Vec::new();
    if d.standard.len() as u128 != hook_length_count(&d.shape) {
        failures.push(format!("standard {} vs hook length {}", d.standard.len(), hook_length_count(&d.shape)));
    }
    if d.row_standard.len() as u128 != multinomial_count(&d.shape) {
        failures.push(format!("row-standard {} vs multinomial {}", d.row_standard.len(), multinomial_count(&d.shape)));
    }
    if d.std_index.len() != d.standard.len() || d.rs_index.len() != d.row_standard.len() {
        failures.push("duplicates".to_string());
    }
    Check::new("enumeration-counts", 2, failures)
}

/// The membership checks that apply to every family shape.
pub fn membership_checks(d: &ShapeData) -> Vec<Check> {
    vec![check_criteria(d)]
}

/// Structural properties of membership.
pub fn stability_checks(d: &ShapeData) -> Vec<Check> {
    let fam = d.shape.classify();
    let mut out = vec![
        check_standardization(d),
        check_standardization_monotone(d),
        check_row_equivalence(d),
        check_schuetzenberger(d),
    ];
    out.extend(check_subtableaux(d));
    if fam.two_column {
        out.push(check_two_column_standard(d));
    }
    if fam.two_row {
        out.push(check_transpose_bridge(d));
    }
    out
}

/// Intersection checks for the families of the shape.
pub fn intersection_checks(d: &ShapeData) -> Vec<Check> {
    let fam = d.shape.classify();
    let mut out = Vec::new();
    if fam.two_row {
        out.push(check_intersection_graph_meander(d));
        out.push(check_codim_one_two_row(d));
    }
    if fam.hook {
        out.extend(check_hook_intersections(d));
    }
    if fam.two_column {
        out.push(check_codim_one_two_column(d));
    }
    out.push(check_codim_one_membership(d));
    out
}

/// Runs every applicable check on all pairs of the shape.
pub fn cross_validate(shape: &YoungDiagram) -> Result<ValidationReport> {
    require_family(shape)?;
    let start = Instant::now();
    let d = ShapeData::new(shape);
    let mut checks = vec![check_counts(&d)];
    checks.extend(membership_checks(&d));
    checks.extend(stability_checks(&d));
    checks.extend(intersection_checks(&d));
    checks.push(check_strict_separation(&d));
    checks.push(check_quotients_comparable(&d));
    if shape.classify().two_row {
        checks.push(check_strip_rectangle(&d));
    }
    Ok(ValidationReport { shape: shape.clone(), checks, elapsed: start.elapsed() })
}

/// An edge of the intersection graph, by indices into the node list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub codim_one: bool,
}

/// Components of a shape, joined when they intersect.
#[derive(Debug, Clone)]
pub struct IntersectionGraph {
    pub shape: YoungDiagram,
    pub nodes: Vec<StandardTableau>,
    pub edges: Vec<Edge>,
}

impl IntersectionGraph {
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        self.edges.iter().any(|e| e.a == a && e.b == b)
    }

    /// Graphviz rendering; codimension-one edges are bold.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph \"{}\" {{\n", self.shape);
        for (k, t) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{k} [label=\"{t}\"];\n"));
        }
        for e in &self.edges {
            let style = if e.codim_one { " [style=bold]" } else { "" };
            out.push_str(&format!("  n{} -- n{}{style};\n", e.a, e.b));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for IntersectionGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.nodes.iter().enumerate() {
            writeln!(f, "{k}: {t}")?;
        }
        for e in &self.edges {
            writeln!(f, "{} -- {}{}", e.a, e.b, if e.codim_one { " codim1" } else { "" })?;
        }
        Ok(())
    }
}

/// Edges join tableaux with a common standard member; codimension one is
/// annotated by the family rules.
pub fn intersection_graph(shape: &YoungDiagram) -> Result<IntersectionGraph> {
    require_family(shape)?;
    let d = ShapeData::new(shape);
    let mut edges = Vec::new();
    for (a, b) in d.pairs() {
        if d.common_standard(a, b) {
            let codim_one = family_codim_one(&d.standard[a], &d.standard[b])?;
            edges.push(Edge { a, b, codim_one });
        }
    }
    Ok(IntersectionGraph { shape: shape.clone(), nodes: d.standard, edges })
}

/// A pair with `τ ⪯ T` whose shape contains three rows of lengths `λ₁ > λ₂ >= 2`, `λ₃ >= 1`.
pub fn r_minus_k_pair(shape: &YoungDiagram) -> Result<(RowStandardTableau, StandardTableau)> {
    let l = shape.rows();
    if l.len() < 3 || l[0] <= l[1] || l[1] < 2 {
        return Err(Error::Domain(format!(
            "shape {shape} needs at least three rows with first row longer than the second and second of length >= 2"
        )));
    }
    let (l1, l2, l3) = (l[0], l[1], l[2]);
    let r1: Vec<usize> = (7..=l1 + 3).collect();
    let r2: Vec<usize> = (l1 + 4..=l1 + l2 + 1).collect();
    let r3: Vec<usize> = (l1 + l2 + 2..=l1 + l2 + l3).collect();
    let mut tau = vec![[vec![1, 2, 5], r1.clone()].concat(), [vec![4, 6], r2.clone()].concat(), [vec![3], r3.clone()].concat()];
    let mut t = vec![[vec![1, 2, 5], r1].concat(), [vec![3, 4], r2].concat(), [vec![6], r3].concat()];
    let mut next = l1 + l2 + l3 + 1;
    for &len in &l[3..] {
        let row: Vec<usize> = (next..next + len).collect();
        next += len;
        tau.push(row.clone());
        t.push(row);
    }
    let tau = RowStandardTableau::new(tau)?;
    let t = StandardTableau::new(t)?;
    if !dominance_member(&tau, &t)?.member {
        return Err(Error::Invariant(format!("constructed pair ({tau}, {t}) fails dominance")));
    }
    Ok((tau, t))
}

/// `(i_k, j_k)` for `k = 0..=n` with `j_k - i_k = k`, ending at `(0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RhoSequence {
    pub pairs: Vec<(usize, usize)>,
}

impl RhoSequence {
    pub fn n(&self) -> usize {
        self.pairs.len() - 1
    }

    pub fn is_valid(&self) -> bool {
        let n = self.n();
        self.pairs[0].0 == self.pairs[0].1
            && self.pairs[n] == (0, n)
            && self.pairs.iter().enumerate().all(|(k, &(i, j))| i <= j && j <= n && j - i == k)
            && self.pairs.windows(2).all(|w| {
                let ((i, j), (i2, j2)) = (w[0], w[1]);
                (i2 + 1 == i && j2 == j) || (i2 == i && j2 == j + 1)
            })
    }
}

impl fmt::Display for RhoSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|(i, j)| format!("({i},{j})")).collect();
        f.write_str(&parts.join(" "))
    }
}

/// All sequences for `n`; there are `2^n` of them.
pub fn enumerate_rho(n: usize) -> Vec<RhoSequence> {
    fn go(n: usize, cur: &mut Vec<(usize, usize)>, out: &mut Vec<RhoSequence>) {
        let (i, j) = *cur.last().expect("nonempty");
        if cur.len() == n + 1 {
            out.push(RhoSequence { pairs: cur.clone() });
            return;
        }
        if i > 0 {
            cur.push((i - 1, j));
            go(n, cur, out);
            cur.pop();
        }
        if j < n {
            cur.push((i, j + 1));
            go(n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for i0 in 0..=n {
        go(n, &mut vec![(i0, i0)], &mut out);
    }
    out.sort();
    out
}

/// The pair of shape `(3,2,1)` separated by no strict quotient inequality in one direction.
pub fn rho_sweep_pair() -> (StandardTableau, StandardTableau) {
    let t = StandardTableau::new(vec![vec![1, 2, 5], vec![3, 4], vec![6]]).expect("standard");
    let s = StandardTableau::new(vec![vec![1, 2, 5], vec![3, 6], vec![4]]).expect("standard");
    (t, s)
}

/// For the pair `(T, S)` of [`rho_sweep_pair`]: `Y^S_{j/i} ⪯ Y^T_{j/i}` for all `i < j`,
/// and for every sequence in `R_6` the inequality at `k = 5` is strict.
pub fn rho_sweep_check() -> bool {
    let (t, s) = rho_sweep_pair();
    let (tt, ts) = (QuotientTable::new(&t), QuotientTable::new(&s));
    let n = t.n();
    let everywhere = (0..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .all(|(i, j)| dominated_unchecked(ts.get(i, j).rows(), tt.get(i, j).rows()));
    let strict_at_five = enumerate_rho(n).iter().all(|rho| {
        let (i, j) = rho.pairs[5];
        ts.get(i, j) != tt.get(i, j) && dominated_unchecked(ts.get(i, j).rows(), tt.get(i, j).rows())
    });
    t != s && everywhere && strict_at_five
}

/// One line of a batch file with its verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchLine {
    pub line: usize,
    pub input: String,
    pub result: std::result::Result<bool, String>,
}

impl fmt::Display for BatchLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.result {
            Ok(v) => write!(f, "line={} pair={} member={v}", self.line, self.input),
            Err(e) => write!(f, "line={} pair={} error={e}", self.line, self.input),
        }
    }
}

/// Decides every `τ|T` line of the input; blank lines and `#` comments are skipped.
pub fn run_batch(input: &str) -> Vec<BatchLine> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(k, l)| {
            let result = (|| -> Result<bool> {
                let (a, b) = l
                    .split_once('|')
                    .ok_or_else(|| Error::Parse(format!("expected τ|T, got {l:?}")))?;
                let tau: RowStandardTableau = a.parse()?;
                let t: StandardTableau = b.parse()?;
                require_family(t.shape())?;
                Ok(dominance_member(&tau, &t)?.member)
            })();
            BatchLine { line: k + 1, input: l.trim().to_string(), result: result.map_err(|e| e.to_string()) }
        })
        .collect()
}
