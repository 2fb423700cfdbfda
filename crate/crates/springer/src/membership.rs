//! Deciding whether the flag of `τ` lies in the component of `T`.
//!
//! On hook, two-row and two-column shapes membership is equivalent to
//! dominance of all subquotient shapes, to the family's inductive criterion
//! and to success of the family's insertion algorithm.

use std::fmt;

use crate::constructibility::{construct_hook, construct_two_col, construct_two_row};
use crate::diagrams::{dominated_unchecked, YoungDiagram};
use crate::extended::Ext;
use crate::jdt::{quotient_shape_tau_unchecked, QuotientTable};
use crate::tableaux::{RowStandardTableau, StandardTableau};
use crate::{Error, Result};

/// The procedure that produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Criterion {
    Dominance,
    HookA,
    TwoRowA,
    TwoColA,
    Constructible,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Criterion::Dominance => "dominance",
            Criterion::HookA => "hook_A",
            Criterion::TwoRowA => "two_row_A",
            Criterion::TwoColA => "two_col_A",
            Criterion::Constructible => "constructible",
        };
        f.write_str(s)
    }
}

/// Evidence for a negative verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// First `(i, j)` in lexicographic order with `Y_{j/i}(τ) ⋠ Y^T_{j/i}`.
    Pair(usize, usize),
    /// A failing condition of an inductive criterion or an algorithm.
    Condition(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair(i, j) => write!(f, "i={i}, j={j}"),
            Witness::Condition(c) => f.write_str(c),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    pub criterion: Criterion,
    pub witness: Option<Witness>,
}

impl MembershipVerdict {
    fn from_failure(criterion: Criterion, failure: Option<Witness>) -> Self {
        MembershipVerdict { member: failure.is_none(), criterion, witness: failure }
    }
}

fn same_shape(tau: &RowStandardTableau, t: &StandardTableau) -> Result<()> {
    if tau.shape() != t.shape() {
        return Err(Error::ShapeMismatch(tau.shape().to_string(), t.shape().to_string()));
    }
    Ok(())
}

fn require(tau: &RowStandardTableau, t: &StandardTableau, ok: bool, family: &str) -> Result<()> {
    same_shape(tau, t)?;
    if ok {
        Ok(())
    } else {
        Err(Error::Family(format!("shape {} is not {family}", t.shape())))
    }
}

/// `τ ⪯ T`: `Y_{j/i}(τ) ⪯ Y^T_{j/i}` for all `0 <= i < j <= n`.
pub fn dominance_member(tau: &RowStandardTableau, t: &StandardTableau) -> Result<MembershipVerdict> {
    same_shape(tau, t)?;
    let table = QuotientTable::new(t);
    let failure = first_dominance_failure(tau, &table).map(|(i, j)| Witness::Pair(i, j));
    Ok(MembershipVerdict::from_failure(Criterion::Dominance, failure))
}

/// Lexicographically first `(i, j)` where dominance fails, against a precomputed table.
pub fn first_dominance_failure(tau: &RowStandardTableau, table: &QuotientTable) -> Option<(usize, usize)> {
    let n = tau.n();
    let mut counts = vec![0usize; tau.shape().num_rows()];
    for i in 0..n {
        counts.iter_mut().for_each(|c| *c = 0);
        for j in i + 1..=n {
            counts[tau.row_of(j)] += 1;
            let mut sorted = counts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            if !dominated_unchecked(&sorted, table.get(i, j).rows()) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Interlacing test on first rows: `a'_{q-1} < a_q <= a'_q` for `q >= 2`.
pub fn hook_a(tau: &RowStandardTableau, t: &StandardTableau) -> Result<bool> {
    require(tau, t, t.shape().classify().hook, "a hook")?;
    Ok(hook_a_failure(tau, t).is_none())
}

fn hook_a_failure(tau: &RowStandardTableau, t: &StandardTableau) -> Option<Witness> {
    let a = &t.rows()[0];
    let a2 = &tau.rows()[0];
    (1..a.len())
        .find(|&q| !(a2[q - 1] < a[q] && a[q] <= a2[q]))
        .map(|q| Witness::Condition(format!("first rows do not interlace at position {}", q + 1)))
}

fn is_two_row_rectangle(t: &RowStandardTableau, i: usize) -> bool {
    if i % 2 == 1 || t.shape().num_rows() < 2 {
        return false;
    }
    let top = t.rows()[0].iter().filter(|&&e| e <= i).count();
    top * 2 == i
}

enum TwoRowCase {
    Split(usize),
    DropLast,
    DropFirst,
}

fn two_row_case(tau: &RowStandardTableau, t: &StandardTableau) -> Option<TwoRowCase> {
    let n = t.n();
    let both = |i: usize| is_two_row_rectangle(tau, i) && is_two_row_rectangle(t, i);
    if let Some(i) = (2..n).rev().find(|&i| both(i)) {
        return Some(TwoRowCase::Split(i));
    }
    if n >= 2 && both(n) {
        return Some(TwoRowCase::DropLast);
    }
    let no_rectangle = (2..=n).all(|i| !is_two_row_rectangle(t, i));
    if no_rectangle && tau.position(1) == t.position(1) {
        return Some(TwoRowCase::DropFirst);
    }
    None
}

fn drop_first(t: &RowStandardTableau) -> RowStandardTableau {
    let rows = t
        .rows()
        .iter()
        .map(|r| r.iter().filter(|&&e| e > 1).map(|&e| e - 1).collect::<Vec<_>>())
        .filter(|r| !r.is_empty())
        .collect();
    RowStandardTableau::new(rows).expect("removing the first entry of the longer row")
}

/// One reduction step of the two-row inductive criterion.
pub fn two_row_eta(
    tau: &RowStandardTableau,
    t: &StandardTableau,
) -> Result<Vec<(RowStandardTableau, StandardTableau)>> {
    require(tau, t, t.shape().num_rows() <= 2, "two-row")?;
    let case = two_row_case(tau, t)
        .ok_or_else(|| Error::Domain(format!("({tau}, {t}) satisfies neither defining condition")))?;
    let n = t.n();
    Ok(match case {
        TwoRowCase::Split(i) => {
            let low_t = StandardTableau::from_row_standard(t.restrict(i, n))
                .map_err(|e| Error::Invariant(format!("upper part of {t} above {i}: {e}")))?;
            vec![(tau.prefix(i), t.prefix(i)), (tau.restrict(i, n), low_t)]
        }
        // restricting sorts rows by length, which performs the row swap when n sits in the first row
        TwoRowCase::DropLast => vec![(tau.prefix(n - 1), t.prefix(n - 1))],
        TwoRowCase::DropFirst => {
            let t2 = StandardTableau::from_row_standard(drop_first(t))
                .map_err(|e| Error::Invariant(format!("stripping 1 from {t}: {e}")))?;
            vec![(drop_first(tau), t2)]
        }
    })
}

/// The inductive two-row criterion, evaluated with an explicit work stack.
pub fn two_row_a(tau: &RowStandardTableau, t: &StandardTableau) -> Result<bool> {
    require(tau, t, t.shape().num_rows() <= 2, "two-row")?;
    Ok(two_row_a_failure(tau, t)?.is_none())
}

fn two_row_a_failure(tau: &RowStandardTableau, t: &StandardTableau) -> Result<Option<Witness>> {
    let mut stack = vec![(tau.clone(), t.clone())];
    while let Some((x, y)) = stack.pop() {
        if y.n() == 1 {
            continue;
        }
        if two_row_case(&x, &y).is_none() {
            return Ok(Some(Witness::Condition(format!(
                "({x}, {y}) satisfies neither defining condition"
            ))));
        }
        stack.extend(two_row_eta(&x, &y)?);
    }
    Ok(None)
}

/// Right neighbour of a first-column entry, or `∞`.
fn omega(tau: &RowStandardTableau, i: usize) -> Ext {
    let (p, _) = tau.position(i);
    tau.entry(p, 1).map_or(Ext::Inf, Ext::Fin)
}

struct TwoColStep {
    i: usize,
    swap_with: usize,
}

fn two_col_step(tau: &RowStandardTableau, t: &StandardTableau) -> std::result::Result<Option<TwoColStep>, String> {
    let n = t.n();
    let Some(i) = (1..=n).find(|&i| tau.col_of(i) != t.col_of(i)) else {
        return Ok(None);
    };
    if !(tau.col_of(i) == 0 && t.col_of(i) == 1) {
        return Err(format!("{i} is misplaced but not in the first column of τ and the second of T"));
    }
    let j = (i + 1..=n)
        .find(|&j| tau.col_of(j) == 1 && tau.entry(tau.row_of(j), 0).unwrap() <= i)
        .ok_or_else(|| format!("no second-column entry after {i} has its left neighbour at most {i}"))?;
    let first_col = |k: &usize| tau.col_of(*k) == 0;
    if !(i..j).filter(first_col).any(|k| omega(tau, k) > Ext::Fin(j)) {
        return Err(format!("no first-column entry in {i}..{} has right neighbour beyond {j}", j - 1));
    }
    let wi = omega(tau, i);
    let swap_with = (i + 1..j)
        .filter(first_col)
        .find(|&k| wi < omega(tau, k))
        .unwrap_or(j);
    Ok(Some(TwoColStep { i, swap_with }))
}

/// One reduction step of the two-column inductive criterion.
pub fn two_col_eta(tau: &RowStandardTableau, t: &StandardTableau) -> Result<RowStandardTableau> {
    require(tau, t, t.shape().row(0) <= 2, "two-column")?;
    match two_col_step(tau, t) {
        Ok(Some(step)) => tau
            .swap_entries(step.i, step.swap_with)
            .map_err(|e| Error::Invariant(format!("reduction of ({tau}, {t}): {e}"))),
        Ok(None) => Err(Error::Domain(format!("{t} is the standardization of {tau}"))),
        Err(msg) => Err(Error::Domain(format!("({tau}, {t}): {msg}"))),
    }
}

/// The inductive two-column criterion: reduce until `T = st(τ)` or a condition fails.
pub fn two_col_a(tau: &RowStandardTableau, t: &StandardTableau) -> Result<bool> {
    require(tau, t, t.shape().row(0) <= 2, "two-column")?;
    Ok(two_col_a_failure(tau, t)?.is_none())
}

/// The full reduction chain `τ → τ̃ → …`, ending at acceptance or failure.
pub fn two_col_chain(tau: &RowStandardTableau, t: &StandardTableau) -> Result<(Vec<RowStandardTableau>, Option<Witness>)> {
    require(tau, t, t.shape().row(0) <= 2, "two-column")?;
    let n = t.n();
    let mut chain = vec![tau.clone()];
    for _ in 0..=n * n {
        let cur = chain.last().unwrap();
        match two_col_step(cur, t) {
            Ok(None) => return Ok((chain, None)),
            Err(msg) => return Ok((chain, Some(Witness::Condition(msg)))),
            Ok(Some(step)) => {
                let next = cur
                    .swap_entries(step.i, step.swap_with)
                    .map_err(|e| Error::Invariant(format!("reduction of ({cur}, {t}): {e}")))?;
                chain.push(next);
            }
        }
    }
    Err(Error::Invariant(format!("reduction of ({tau}, {t}) did not terminate")))
}

fn two_col_a_failure(tau: &RowStandardTableau, t: &StandardTableau) -> Result<Option<Witness>> {
    Ok(two_col_chain(tau, t)?.1)
}

/// Prefix dominance `Y_{i/0}(s) ⪯ Y^T_{i/0}`, which decides membership for standard `s` on two columns.
pub fn two_col_standard_member(s: &StandardTableau, t: &StandardTableau) -> Result<bool> {
    require(s, t, t.shape().row(0) <= 2, "two-column")?;
    let ps = s.prefix_shapes();
    let pt = t.prefix_shapes();
    Ok(ps.iter().zip(&pt).all(|(a, b)| dominated_unchecked(a.rows(), b.rows())))
}

fn require_family(tau: &RowStandardTableau, t: &StandardTableau) -> Result<()> {
    same_shape(tau, t)?;
    if t.shape().classify().is_general() {
        return Err(Error::GeneralShape(t.shape().to_string()));
    }
    Ok(())
}

/// Decides `τ ∈ T` by dominance.
pub fn member(tau: &RowStandardTableau, t: &StandardTableau) -> Result<MembershipVerdict> {
    member_with(tau, t, Criterion::Dominance)
}

/// Decides `τ ∈ T` with a chosen criterion.
///
/// For the inductive criteria the shape must lie in that family. For
/// [`Criterion::Constructible`] the algorithm of the first applicable family
/// (hook, two-row, two-column) is used.
pub fn member_with(tau: &RowStandardTableau, t: &StandardTableau, criterion: Criterion) -> Result<MembershipVerdict> {
    require_family(tau, t)?;
    let fam = t.shape().classify();
    let failure = match criterion {
        Criterion::Dominance => return dominance_member(tau, t),
        Criterion::HookA => {
            require(tau, t, fam.hook, "a hook")?;
            hook_a_failure(tau, t)
        }
        Criterion::TwoRowA => {
            require(tau, t, fam.two_row, "two-row")?;
            two_row_a_failure(tau, t)?
        }
        Criterion::TwoColA => {
            require(tau, t, fam.two_column, "two-column")?;
            two_col_a_failure(tau, t)?
        }
        Criterion::Constructible => {
            let trace = if fam.hook {
                construct_hook(tau, t)?
            } else if fam.two_row {
                construct_two_row(tau, t)?
            } else {
                construct_two_col(tau, t)?
            };
            trace.failure().map(|f| Witness::Condition(f.to_string()))
        }
    };
    Ok(MembershipVerdict::from_failure(criterion, failure))
}

/// Every applicable decision procedure with its answer, labelled for display.
///
/// Labels are `dominance`, the inductive criteria of each family containing the
/// shape, and `constructible` (suffixed by family when several apply).
pub fn all_criteria(tau: &RowStandardTableau, t: &StandardTableau) -> Result<Vec<(String, bool)>> {
    require_family(tau, t)?;
    let fam = t.shape().classify();
    let mut out = vec![("dominance".to_string(), dominance_member(tau, t)?.member)];
    if fam.hook {
        out.push(("hook_A".into(), hook_a_failure(tau, t).is_none()));
    }
    if fam.two_row {
        out.push(("two_row_A".into(), two_row_a_failure(tau, t)?.is_none()));
    }
    if fam.two_column {
        out.push(("two_col_A".into(), two_col_a_failure(tau, t)?.is_none()));
    }
    let families = [fam.hook, fam.two_row, fam.two_column].iter().filter(|&&b| b).count();
    let label = |name: &str| {
        if families > 1 {
            format!("constructible_{name}")
        } else {
            "constructible".to_string()
        }
    };
    if fam.hook {
        out.push((label("hook"), construct_hook(tau, t)?.succeeded()));
    }
    if fam.two_row {
        out.push((label("two_row"), construct_two_row(tau, t)?.succeeded()));
    }
    if fam.two_column {
        out.push((label("two_col"), construct_two_col(tau, t)?.succeeded()));
    }
    Ok(out)
}

/// `Y_{j/i}(τ)` for all pairs, row-major in `i` then `j`.
pub fn tau_quotients(tau: &RowStandardTableau) -> Vec<((usize, usize), YoungDiagram)> {
    let n = tau.n();
    (0..n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .map(|(i, j)| ((i, j), quotient_shape_tau_unchecked(tau, i, j)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RowStandardTableau {
        s.parse().unwrap()
    }

    fn st(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_member(&rs("1,2,5/4,6/3"), &st("1,2,5/3,4/6")).unwrap().member);
        let v = dominance_member(&rs("2,3/1"), &st("1,2/3")).unwrap();
        assert!(!v.member);
        assert_eq!(v.witness, Some(Witness::Pair(1, 3)));
        let tau = rs("3,4,8/1,6,7/2,5");
        assert!(dominance_member(&tau, &tau.standardize()).unwrap().member);
        assert!(dominance_member(&rs("1,2/3"), &st("1,2,3")).is_err());
    }

    #[test]
    fn hook_examples() {
        assert!(hook_a(&rs("2,3,5/4/1"), &st("1,3,4/2/5")).unwrap());
        assert!(!hook_a(&rs("2,4,5/3/1"), &st("1,3,4/2/5")).unwrap());
        let t = st("1,3,4/2/5");
        assert!(hook_a(&t, &t).unwrap());
        assert!(hook_a(&rs("1,2/3,4"), &st("1,2/3,4")).is_err());
    }

    #[test]
    fn two_row_eta_example_chain() {
        let eta = two_row_eta(&rs("2,3,5/1,4"), &st("1,3,4/2,5")).unwrap();
        assert_eq!(eta, vec![(rs("2/1"), st("1/2")), (rs("1,3/2"), st("1,2/3"))]);
        assert_eq!(two_row_eta(&rs("2/1"), &st("1/2")).unwrap(), vec![(rs("1"), st("1"))]);
        assert_eq!(two_row_eta(&rs("1,3/2"), &st("1,2/3")).unwrap(), vec![(rs("2/1"), st("1/2"))]);
        assert!(two_row_eta(&rs("2,3/1"), &st("1,2/3")).is_err());
    }

    #[test]
    fn two_row_a_examples() {
        assert!(two_row_a(&rs("2,3,5/1,4"), &st("1,3,4/2,5")).unwrap());
        let t = st("1,2,3,4,7/5,6,8,9");
        assert!(two_row_a(&rs("1,4,6,8,9/2,3,5,7"), &t).unwrap());
        assert!(!two_row_a(&rs("2,3,6,8,9/1,4,5,7"), &t).unwrap());
    }

    #[test]
    fn two_col_eta_example_chain() {
        let t = st("1,2/3,4/5,6/7/8");
        let a = two_col_eta(&rs("2,4/1,7/3,6/8/5"), &t).unwrap();
        assert_eq!(a, rs("3,4/1,7/2,6/8/5"));
        let b = two_col_eta(&a, &t).unwrap();
        assert_eq!(b, rs("3,4/1,7/5,6/8/2"));
        let c = two_col_eta(&b, &t).unwrap();
        assert_eq!(c, rs("3,4/1,2/5,6/8/7"));
        assert_eq!(c.standardize(), t);
        assert!(two_col_eta(&c, &t).is_err());
    }

    #[test]
    fn two_col_a_examples() {
        assert!(two_col_a(&rs("2,4/1,7/3,6/8/5"), &st("1,2/3,4/5,6/7/8")).unwrap());
        assert!(!two_col_a(&rs("2,6/3,5/4/1"), &st("1,2/3,4/5/6")).unwrap());
        let tau = rs("2,6/3,5/4/1");
        assert!(two_col_a(&tau, &tau.standardize()).unwrap());
    }

    #[test]
    fn standard_two_column_examples() {
        let tau0 = st("1,4/2,5/3");
        for t in crate::oracle::enumerate_standard(tau0.shape()) {
            assert!(two_col_standard_member(&tau0, &t).unwrap());
            assert!(two_col_standard_member(&t, &t).unwrap());
        }
        let s = st("1,2/3/4");
        let t = st("1,3/2/4");
        assert!(!two_col_standard_member(&s, &t).unwrap());
        assert!(!two_col_a(&s, &t).unwrap());
    }

    #[test]
    fn member_examples() {
        assert!(member(&rs("2,3,5/4/1"), &st("1,3,4/2/5")).unwrap().member);
        assert!(!member(&rs("1,3,4/5/2"), &st("1,2,5/3/4")).unwrap().member);
        assert!(matches!(member(&rs("1,2,5/4,6/3"), &st("1,2,5/3,4/6")), Err(Error::GeneralShape(_))));
    }

    #[test]
    fn verdict_witness_only_on_failure() {
        let v = member_with(&rs("1,3,4/5/2"), &st("1,2,5/3,4"), Criterion::HookA);
        assert!(v.is_err());
        let v = member_with(&rs("1,3,4/5/2"), &st("1,2,5/3/4"), Criterion::HookA).unwrap();
        assert!(!v.member && v.witness.is_some());
        let v = member_with(&rs("2,3,5/4/1"), &st("1,3,4/2/5"), Criterion::Constructible).unwrap();
        assert!(v.member && v.witness.is_none());
        assert_eq!(v.criterion, Criterion::Constructible);
    }

    #[test]
    fn all_criteria_labels() {
        let labels: Vec<String> = all_criteria(&rs("2,3,5/4/1"), &st("1,3,4/2/5"))
            .unwrap()
            .into_iter()
            .map(|(l, b)| {
                assert!(b);
                l
            })
            .collect();
        assert_eq!(labels, ["dominance", "hook_A", "constructible"]);
    }
}
