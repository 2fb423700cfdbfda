//! Insertion algorithms that try to rebuild `τ` from `T` one entry at a time.
//!
//! Each algorithm works on a fixed grid of absolute box positions and either
//! reaches `τ` after `n` steps or stops at a failure case. The structural
//! invariants of every intermediate grid are checked as the run proceeds and a
//! violation is reported as [`Error::Invariant`].

use std::fmt;

use crate::extended::Ext;
use crate::tableaux::{RowStandardTableau, StandardTableau};
use crate::{Error, Result};

/// A partial numbering of a rectangle, `None` marking a blank box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    cells: Vec<Vec<Option<usize>>>,
}

impl Grid {
    fn new(rows: usize, cols: usize) -> Self {
        Grid { cells: vec![vec![None; cols]; rows] }
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.cells[row][col]
    }

    fn set(&mut self, row: usize, col: usize, v: Option<usize>) {
        self.cells[row][col] = v;
    }

    pub fn num_rows(&self) -> usize {
        self.cells.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cells.first().map_or(0, Vec::len)
    }

    /// Filled entries of a row, left to right.
    pub fn row_entries(&self, row: usize) -> Vec<usize> {
        self.cells[row].iter().flatten().copied().collect()
    }

    fn column_count(&self, col: usize) -> usize {
        self.cells.iter().filter(|r| r[col].is_some()).count()
    }

    fn filled(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.cells
            .iter()
            .enumerate()
            .flat_map(|(p, r)| r.iter().enumerate().filter_map(move |(c, e)| e.map(|e| (p, c, e))))
    }

    /// Whether the grid holds exactly `τ[1..i]` at its positions in `τ`.
    pub fn matches_prefix(&self, tau: &RowStandardTableau, i: usize) -> bool {
        self.mismatches(tau, i).is_empty() && self.filled().count() == i
    }

    /// Entries placed somewhere other than their box in `τ`.
    fn mismatches(&self, tau: &RowStandardTableau, i: usize) -> Vec<(usize, usize, usize)> {
        self.filled()
            .filter(|&(p, c, e)| e > i || tau.position(e) != (p, c))
            .collect()
    }

    /// Rows of the grid as text, blanks shown as `.`.
    pub fn render_lines(&self) -> Vec<String> {
        let width = self.filled().map(|(_, _, e)| e.to_string().len()).max().unwrap_or(1);
        self.cells
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| match e {
                        Some(e) => format!("{e:>width$}"),
                        None => format!("{:>width$}", "."),
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect()
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_lines().join("\n"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    TwoRow,
    TwoColumn,
    Hook,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::TwoRow => "two-row",
            Algorithm::TwoColumn => "two-column",
            Algorithm::Hook => "hook",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureKind {
    /// Two-row: the required box of the last column is taken.
    LastColumnOccupied,
    /// Two-column: the second box of the target row is taken. Hook: the grid
    /// had drifted from `τ` when an entry of the first row of `T` arrived.
    First,
    /// Two-column: the target row has index zero. Hook: a first-column entry
    /// of `T` would land exactly where `τ` has it.
    Second,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::LastColumnOccupied => "last-column occupied",
            FailureKind::First => "first kind",
            FailureKind::Second => "second kind",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Failure {
    pub step: usize,
    pub kind: FailureKind,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "failure at step {} ({})", self.step, self.kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Failure(Failure),
}

/// Per-step auxiliary state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepAux {
    /// Lengths of the strips starting in the first column of each row.
    TwoRow { in_place: (usize, usize) },
    /// Row indices, the rows with a filled first box, and the other nonempty rows (all 0-based).
    TwoColumn { f: Vec<Ext>, first_filled: Vec<usize>, others: Vec<usize> },
    /// Whether the grid equals `τ[1..i]`.
    Hook { coincides: bool },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub algorithm: Algorithm,
    /// Grid after each completed step; `steps[k]` follows insertion of `k + 1`.
    pub steps: Vec<Grid>,
    pub aux: Vec<StepAux>,
    pub outcome: Outcome,
}

impl ConstructionTrace {
    pub fn succeeded(&self) -> bool {
        self.outcome == Outcome::Success
    }

    pub fn failure(&self) -> Option<Failure> {
        match self.outcome {
            Outcome::Success => None,
            Outcome::Failure(f) => Some(f),
        }
    }

    /// Every step as a grid, with the row indices on the right for the two-column algorithm.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, (grid, aux)) in self.steps.iter().zip(&self.aux).enumerate() {
            out.push_str(&format!("step {}:\n", k + 1));
            for (p, line) in grid.render_lines().into_iter().enumerate() {
                match aux {
                    StepAux::TwoColumn { f, .. } => out.push_str(&format!("  {line}   {}\n", f[p])),
                    _ => out.push_str(&format!("  {line}\n")),
                }
            }
        }
        match self.outcome {
            Outcome::Success => out.push_str("constructible\n"),
            Outcome::Failure(f) => out.push_str(&format!("{f}\n")),
        }
        out
    }
}

fn check_shapes(tau: &RowStandardTableau, t: &StandardTableau, ok: bool, family: &str) -> Result<()> {
    if tau.shape() != t.shape() {
        return Err(Error::ShapeMismatch(tau.shape().to_string(), t.shape().to_string()));
    }
    if !ok {
        return Err(Error::Family(format!("shape {} is not {family}", t.shape())));
    }
    Ok(())
}

fn invariant(tau: &RowStandardTableau, t: &StandardTableau, step: usize, what: &str) -> Error {
    Error::Invariant(format!("({tau}, {t}) step {step}: {what}"))
}

/// Grid rows must increase and hold only entries of the same row of `τ`.
fn check_rows(grid: &Grid, tau: &RowStandardTableau, rows: impl Iterator<Item = usize>) -> bool {
    rows.into_iter().all(|p| {
        let e = grid.row_entries(p);
        e.windows(2).all(|w| w[0] < w[1]) && e.iter().all(|&x| tau.row_of(x) == p)
    })
}

/// Column counts of the grid equal those of `T[1..i]` over the given columns.
fn check_columns(grid: &Grid, t: &StandardTableau, i: usize, cols: usize) -> bool {
    (0..cols).all(|c| grid.column_count(c) == t.column(c).iter().filter(|&&e| e <= i).count())
}

/// Maximal runs of filled boxes in a row as `(start, end)` inclusive.
fn strips(grid: &Grid, row: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for c in 0..grid.num_cols() {
        match (grid.get(row, c), start) {
            (Some(_), None) => start = Some(c),
            (None, Some(s)) => {
                out.push((s, c - 1));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, grid.num_cols() - 1));
    }
    out
}

fn in_place_length(grid: &Grid, row: usize) -> usize {
    strips(grid, row).first().filter(|s| s.0 == 0).map_or(0, |s| s.1 + 1)
}

/// Two-row algorithm on a `2 × n` grid.
pub fn construct_two_row(tau: &RowStandardTableau, t: &StandardTableau) -> Result<ConstructionTrace> {
    check_shapes(tau, t, t.shape().num_rows() <= 2, "two-row")?;
    let n = t.n();
    let mut grid = Grid::new(2, n);
    let mut width = 0;
    let mut trace = ConstructionTrace { algorithm: Algorithm::TwoRow, steps: vec![], aux: vec![], outcome: Outcome::Success };
    for i in 1..=n {
        let p = tau.row_of(i);
        if t.row_of(i) == 0 {
            grid.set(p, width, Some(i));
            width += 1;
        } else {
            if width == 0 {
                return Err(invariant(tau, t, i, "no column before a second-row entry"));
            }
            if grid.get(p, width - 1).is_some() {
                trace.outcome = Outcome::Failure(Failure { step: i, kind: FailureKind::LastColumnOccupied });
                return Ok(trace);
            }
            let at = strips(&grid, p).last().map_or(0, |s| s.1 + 1);
            grid.set(p, at, Some(i));
            let mut pending: Vec<(usize, usize)> = (0..2)
                .flat_map(|q| strips(&grid, q).into_iter().filter(|s| s.0 > 0).map(move |s| (s.0, q)))
                .collect();
            pending.sort_by(|a, b| b.cmp(a));
            for (start, q) in pending {
                let target = strips(&grid, q)
                    .iter()
                    .filter(|s| s.1 < start)
                    .last()
                    .map_or(0, |s| s.1 + 1);
                let e = grid.get(q, start);
                grid.set(q, start, None);
                grid.set(q, target, e);
            }
        }
        if !check_rows(&grid, tau, 0..2) || !check_columns(&grid, t, i, n) {
            return Err(invariant(tau, t, i, "grid rows or column counts disagree with τ and T"));
        }
        trace.aux.push(StepAux::TwoRow { in_place: (in_place_length(&grid, 0), in_place_length(&grid, 1)) });
        trace.steps.push(grid.clone());
    }
    if !grid.matches_prefix(tau, n) {
        return Err(invariant(tau, t, n, "final grid differs from τ"));
    }
    Ok(trace)
}

/// Two-column algorithm on an `r × 2` grid with a row index in `ℕ ∪ {∞}` per row.
pub fn construct_two_col(tau: &RowStandardTableau, t: &StandardTableau) -> Result<ConstructionTrace> {
    check_shapes(tau, t, t.shape().row(0) <= 2, "two-column")?;
    let n = t.n();
    let r = t.shape().num_rows();
    let mut grid = Grid::new(r, 2);
    let mut f = vec![Ext::Inf; r];
    let mut trace = ConstructionTrace { algorithm: Algorithm::TwoColumn, steps: vec![], aux: vec![], outcome: Outcome::Success };
    let fail = |mut trace: ConstructionTrace, step, kind| {
        trace.outcome = Outcome::Failure(Failure { step, kind });
        Ok(trace)
    };
    for i in 1..=n {
        let p = tau.row_of(i);
        if grid.get(p, 1).is_some() {
            return fail(trace, i, FailureKind::First);
        }
        grid.set(p, 1, Some(i));
        let old = f.clone();
        if t.col_of(i) == 1 {
            for q in 0..r {
                if old[q] < old[p] {
                    f[q] = old[q].succ();
                }
            }
        } else {
            if old[p] == Ext::Fin(0) {
                return fail(trace, i, FailureKind::Second);
            }
            let candidates: Vec<usize> = (0..r).filter(|&q| grid.get(q, 1).is_some() && grid.get(q, 0).is_none()).collect();
            let by_neighbour = candidates
                .iter()
                .filter_map(|&q| tau.entry(q, 1).map(|nb| (nb, q)))
                .min()
                .map(|(_, q)| q);
            let pj = by_neighbour
                .or_else(|| candidates.first().copied())
                .ok_or_else(|| invariant(tau, t, i, "no entry can be pushed left"))?;
            let j = grid.get(pj, 1);
            grid.set(pj, 1, None);
            grid.set(pj, 0, j);
            for q in 0..r {
                f[q] = if q == pj {
                    Ext::Fin(0)
                } else if old[q] < old[p] {
                    old[q]
                } else {
                    old[q].pred().ok_or_else(|| invariant(tau, t, i, "row index below zero"))?
                };
            }
        }
        let first_filled: Vec<usize> = (0..r).filter(|&q| grid.get(q, 0).is_some()).collect();
        let others: Vec<usize> = (0..r).filter(|&q| grid.get(q, 0).is_none() && grid.get(q, 1).is_some()).collect();
        let finite_ok = (0..r).all(|q| f[q].is_finite() == first_filled.contains(&q));
        let max_ok = first_filled.iter().map(|&q| f[q]).max().map_or(true, |m| m == Ext::Fin(others.len()));
        if !check_rows(&grid, tau, 0..r) || !check_columns(&grid, t, i, 2) || !finite_ok || !max_ok {
            return Err(invariant(tau, t, i, "grid or row indices violate the step invariants"));
        }
        trace.aux.push(StepAux::TwoColumn { f: f.clone(), first_filled, others });
        trace.steps.push(grid.clone());
    }
    if !grid.matches_prefix(tau, n) {
        return Err(invariant(tau, t, n, "final grid differs from τ"));
    }
    Ok(trace)
}

/// Hook algorithm on an `r × (s + 1)` grid.
pub fn construct_hook(tau: &RowStandardTableau, t: &StandardTableau) -> Result<ConstructionTrace> {
    check_shapes(tau, t, t.shape().classify().hook, "a hook")?;
    let n = t.n();
    let r = t.shape().num_rows();
    let s = t.shape().row(0);
    let mut grid = Grid::new(r, s + 1);
    let mut trace = ConstructionTrace { algorithm: Algorithm::Hook, steps: vec![], aux: vec![], outcome: Outcome::Success };
    let first_row = &tau.rows()[0];
    let mut columns_drift = None;
    for i in 1..=n {
        let p = tau.row_of(i);
        let col = first_row.iter().filter(|&&e| e < i).count();
        let coincided = grid.matches_prefix(tau, i - 1);
        if grid.get(p, col).is_some() {
            return Err(invariant(tau, t, i, "target box already filled"));
        }
        let mut next = grid.clone();
        next.set(p, col, Some(i));
        if t.row_of(i) == 0 {
            if !coincided {
                trace.outcome = Outcome::Failure(Failure { step: i, kind: FailureKind::First });
                return Ok(trace);
            }
        } else {
            if col > 0 && next.matches_prefix(tau, i) {
                trace.outcome = Outcome::Failure(Failure { step: i, kind: FailureKind::Second });
                return Ok(trace);
            }
            let q = (1..r)
                .find(|&q| next.get(q, col).is_some())
                .ok_or_else(|| invariant(tau, t, i, "nothing to push to the first column"))?;
            let e = next.get(q, col);
            next.set(q, col, None);
            next.set(q, 0, e);
        }
        grid = next;
        let diff = grid.mismatches(tau, i);
        let rows_ok = (0..r).all(|q| grid.row_entries(q).iter().all(|&x| tau.row_of(x) == q))
            && grid.row_entries(0).windows(2).all(|w| w[0] < w[1]);
        if !rows_ok || diff.len() > 1 || diff.iter().any(|d| d.0 == 0) {
            return Err(invariant(tau, t, i, "grid violates the step invariants"));
        }
        // column counts can drift on pairs that go on to fail
        if columns_drift.is_none() && !check_columns(&grid, t, i, s) {
            columns_drift = Some(i);
        }
        trace.aux.push(StepAux::Hook { coincides: diff.is_empty() });
        trace.steps.push(grid.clone());
    }
    if !grid.matches_prefix(tau, n) {
        return Err(invariant(tau, t, n, "final grid differs from τ"));
    }
    if let Some(i) = columns_drift {
        return Err(invariant(tau, t, i, "column counts differ from T on a successful run"));
    }
    Ok(trace)
}

/// Whether a successful two-row trace that passes from a longer second in-place
/// strip to a longer first one (or back) goes through a two-row rectangle.
pub fn strips_cross_through_rectangle(trace: &ConstructionTrace) -> bool {
    let lens: Vec<(usize, usize)> = trace
        .aux
        .iter()
        .filter_map(|a| match a {
            StepAux::TwoRow { in_place } => Some(*in_place),
            _ => None,
        })
        .collect();
    for a in 0..lens.len() {
        for b in 0..lens.len() {
            let (x, y) = (lens[a], lens[b]);
            if x.0 < x.1 && y.0 > y.1 {
                let (lo, hi) = (a.min(b), a.max(b));
                let rect = (lo..=hi).any(|k| {
                    let g = &trace.steps[k];
                    let filled = g.filled().count();
                    lens[k].0 == lens[k].1 && lens[k].0 * 2 == filled
                });
                if !rect {
                    return false;
                }
            }
        }
    }
    true
}
