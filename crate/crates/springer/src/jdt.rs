//! Skew tableaux, jeu de taquin and the quotient shapes built from it.

use std::fmt;

use crate::diagrams::YoungDiagram;
use crate::tableaux::{RowStandardTableau, StandardTableau};
use crate::{Error, Result};

/// A filling of `outer ∖ inner` by distinct integers increasing along rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewTableau {
    outer: YoungDiagram,
    inner: YoungDiagram,
    cells: Vec<Vec<Option<usize>>>,
}

/// Which inner corner a jeu de taquin slide starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SlideOrder {
    /// Lowest corner first.
    #[default]
    BottomFirst,
    /// Highest corner first.
    TopFirst,
}

impl SkewTableau {
    /// Builds a skew tableau from its inner shape and the filled rows of `outer ∖ inner`.
    pub fn new(inner: YoungDiagram, filled: Vec<Vec<usize>>) -> Result<Self> {
        let counts: Vec<usize> = filled
            .iter()
            .enumerate()
            .map(|(p, r)| inner.row(p) + r.len())
            .collect();
        let outer = YoungDiagram::new(counts.into_iter().filter(|&c| c > 0).collect())?;
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} does not fit in {outer}")));
        }
        let cells: Vec<Vec<Option<usize>>> = (0..outer.num_rows())
            .map(|p| {
                let mut row = vec![None; inner.row(p)];
                row.extend(filled.get(p).into_iter().flatten().map(|&e| Some(e)));
                row
            })
            .collect();
        let s = SkewTableau { outer, inner, cells };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        for (p, row) in self.cells.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                let Some(e) = e else { continue };
                let right = row.get(c + 1).copied().flatten();
                let below = self.cells.get(p + 1).and_then(|r| r.get(c)).copied().flatten();
                if right.is_some_and(|x| x <= e) || below.is_some_and(|x| x <= e) {
                    return Err(Error::InvalidTableau(format!("{self}: entries do not increase")));
                }
            }
        }
        Ok(())
    }

    pub fn outer(&self) -> &YoungDiagram {
        &self.outer
    }

    pub fn inner(&self) -> &YoungDiagram {
        &self.inner
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.cells.get(row).and_then(|r| r.get(col)).copied().flatten()
    }

    /// Filled cells row by row, ignoring the inner shape.
    pub fn filled_rows(&self) -> Vec<Vec<usize>> {
        self.cells.iter().map(|r| r.iter().flatten().copied().collect()).collect()
    }

    /// Multiset of entries, sorted.
    pub fn entries(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.cells.iter().flatten().flatten().copied().collect();
        e.sort_unstable();
        e
    }

    /// Shape after rectification; for a straight tableau this is `outer`.
    pub fn rectified_shape(&self) -> YoungDiagram {
        rectify(self).outer
    }

    /// Moves the hole at `(r, c)` outward until it leaves the tableau.
    fn slide(&mut self, r: usize, c: usize) {
        let (mut r, mut c) = (r, c);
        loop {
            let right = self.cells[r].get(c + 1).copied().flatten();
            let below = self.cells.get(r + 1).and_then(|row| row.get(c)).copied().flatten();
            let go_right = match (right, below) {
                (None, None) => break,
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (Some(a), Some(b)) => a < b,
            };
            if go_right {
                self.cells[r][c] = right;
                self.cells[r][c + 1] = None;
                c += 1;
            } else {
                self.cells[r][c] = below;
                self.cells[r + 1][c] = None;
                r += 1;
            }
        }
        self.cells[r].pop();
        if self.cells[r].is_empty() {
            self.cells.pop();
        }
    }
}

/// Rectifies with the default slide order.
pub fn rectify(s: &SkewTableau) -> SkewTableau {
    rectify_with(s, SlideOrder::BottomFirst)
}

/// Repeatedly slides into an inner corner until the inner shape is empty.
pub fn rectify_with(s: &SkewTableau, order: SlideOrder) -> SkewTableau {
    let mut work = s.clone();
    let mut inner: Vec<usize> = s.inner.rows().to_vec();
    while !inner.is_empty() {
        let r = match order {
            SlideOrder::BottomFirst => inner.len() - 1,
            SlideOrder::TopFirst => (0..inner.len())
                .find(|&p| inner[p] > inner.get(p + 1).copied().unwrap_or(0))
                .expect("a nonempty diagram has a corner"),
        };
        let c = inner[r] - 1;
        inner[r] -= 1;
        if inner[r] == 0 {
            inner.pop();
        }
        work.slide(r, c);
    }
    work.outer = YoungDiagram::new(work.cells.iter().map(Vec::len).collect())
        .expect("sliding keeps a straight shape");
    work.inner = YoungDiagram::empty();
    work
}

fn check_range(n: usize, i: usize, j: usize) -> Result<()> {
    if i < j && j <= n {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!("need 0 <= i < j <= {n}, got i={i}, j={j}")))
    }
}

/// `T[i+1..j]` as a skew tableau with inner shape `sh(T[1..i])`.
pub fn skew_subtableau(t: &StandardTableau, i: usize, j: usize) -> Result<SkewTableau> {
    check_range(t.n(), i, j)?;
    let inner = YoungDiagram::from_counts(
        t.rows().iter().map(|r| r.iter().filter(|&&e| e <= i).count()).collect(),
    );
    let filled = t
        .rows()
        .iter()
        .map(|r| r.iter().copied().filter(|&e| e > i && e <= j).collect())
        .collect();
    SkewTableau::new(inner, filled)
}

/// `Y^T_{j/i}`: shape of the rectification of `T[i+1..j]`.
pub fn quotient_shape_t(t: &StandardTableau, i: usize, j: usize) -> Result<YoungDiagram> {
    Ok(skew_subtableau(t, i, j)?.rectified_shape())
}

/// `Y_{j/i}(τ)`: row counts of entries in `(i, j]`, sorted decreasingly.
pub fn quotient_shape_tau(t: &RowStandardTableau, i: usize, j: usize) -> Result<YoungDiagram> {
    check_range(t.n(), i, j)?;
    Ok(quotient_shape_tau_unchecked(t, i, j))
}

pub(crate) fn quotient_shape_tau_unchecked(t: &RowStandardTableau, i: usize, j: usize) -> YoungDiagram {
    YoungDiagram::from_counts(
        t.rows()
            .iter()
            .map(|r| r.iter().filter(|&&e| e > i && e <= j).count())
            .collect(),
    )
}

/// All `Y^T_{j/i}` for `0 <= i < j <= n`, computed once per tableau.
#[derive(Debug, Clone)]
pub struct QuotientTable {
    n: usize,
    shapes: Vec<YoungDiagram>,
}

impl QuotientTable {
    pub fn new(t: &StandardTableau) -> Self {
        let n = t.n();
        let mut shapes = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            let whole = skew_subtableau(t, i, n).expect("in range");
            let rect = rectify(&whole);
            for j in i + 1..=n {
                // rectification commutes with truncating to the smallest entries
                let counts = rect
                    .filled_rows()
                    .iter()
                    .map(|r| r.iter().filter(|&&e| e <= j).count())
                    .collect();
                shapes.push(YoungDiagram::from_counts(counts));
            }
        }
        QuotientTable { n, shapes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Y^T_{j/i}`; panics outside `0 <= i < j <= n`.
    pub fn get(&self, i: usize, j: usize) -> &YoungDiagram {
        assert!(i < j && j <= self.n, "quotient index out of range");
        let offset = i * self.n - i * (i.saturating_sub(1)) / 2;
        &self.shapes[offset + (j - i - 1)]
    }
}

/// `T^S`: entry `i` goes in the box added from `Y^T_{n/n-i+1}` to `Y^T_{n/n-i}`.
pub fn schuetzenberger(t: &StandardTableau) -> StandardTableau {
    let n = t.n();
    let table = QuotientTable::new(t);
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut prev = YoungDiagram::empty();
    for i in 1..=n {
        let next = table.get(n - i, n);
        let p = (0..next.num_rows())
            .find(|&p| next.row(p) != prev.row(p))
            .expect("the chain grows by one box");
        debug_assert_eq!(next.row(p), prev.row(p) + 1);
        if p == rows.len() {
            rows.push(Vec::new());
        }
        rows[p].push(i);
        prev = next.clone();
    }
    StandardTableau::new(rows).expect("the transform of a standard tableau is standard")
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .cells
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| e.map_or(".".to_string(), |e| e.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_standard;

    fn st(s: &str) -> StandardTableau {
        s.parse().unwrap()
    }

    fn y(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn skew_subtableau_example() {
        let s = skew_subtableau(&st("1,2,4/3,5,8/6,7"), 2, 6).unwrap();
        assert_eq!(s.inner(), &y("2"));
        assert_eq!(s.to_string(), ".,.,4/3,5/6");
        assert_eq!(s.entry(0, 2), Some(4));
        let t = st("1,3/2");
        assert_eq!(skew_subtableau(&t, 0, 3).unwrap().filled_rows(), t.rows());
        assert_eq!(skew_subtableau(&t, 1, 2).unwrap().entries(), vec![2]);
        assert!(skew_subtableau(&t, 2, 2).is_err());
        assert!(skew_subtableau(&t, 0, 4).is_err());
    }

    #[test]
    fn rectify_examples() {
        let r = rectify(&skew_subtableau(&st("1,3,4/2,5,7/6"), 3, 7).unwrap());
        assert_eq!(r.filled_rows(), vec![vec![4, 7], vec![5], vec![6]]);
        assert_eq!(r.outer(), &y("2,1,1"));
        let r = rectify(&skew_subtableau(&st("1,2,4/3,5,8/6,7"), 2, 6).unwrap());
        assert_eq!(r.filled_rows(), vec![vec![3, 4], vec![5], vec![6]]);
        let s = skew_subtableau(&st("1,3/2"), 0, 3).unwrap();
        assert_eq!(rectify(&s).filled_rows(), s.filled_rows());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_shape_t(&st("1,2,4/3,5,8/6,7"), 2, 6).unwrap(), y("2,1,1"));
        assert_eq!(quotient_shape_t(&st("1,3,4/2,5,7/6"), 3, 7).unwrap(), y("2,1,1"));
        let tau: RowStandardTableau = "2,3,7/4,6,8/1,5".parse().unwrap();
        assert_eq!(quotient_shape_tau(&tau, 3, 7).unwrap(), y("2,1,1"));
        assert_eq!(quotient_shape_tau(&tau, 0, 8).unwrap(), y("3,3,2"));
        assert_eq!(quotient_shape_tau(&tau, 4, 5).unwrap(), y("1"));
        assert!(quotient_shape_tau(&tau, 3, 3).is_err());
    }

    #[test]
    fn schuetzenberger_examples() {
        assert_eq!(schuetzenberger(&st("1,3,4/2,5,7/6")), st("1,2,6/3,5,7/4"));
        assert_eq!(schuetzenberger(&st("1,2,3/4,5,6/7")), st("1,3,4/2,6,7/5"));
    }

    #[test]
    fn table_matches_direct_rectification() {
        for shape in ["3,2,2", "4,1,1", "2,2,1,1", "3,3"] {
            for t in enumerate_standard(&y(shape)) {
                let table = QuotientTable::new(&t);
                for i in 0..t.n() {
                    for j in i + 1..=t.n() {
                        assert_eq!(table.get(i, j), &quotient_shape_t(&t, i, j).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn structural_properties_up_to_seven_boxes() {
        for n in 1..=7 {
            for shape in YoungDiagram::partitions(n) {
                for t in enumerate_standard(&shape) {
                    let table = QuotientTable::new(&t);
                    assert_eq!(table.get(0, n), &shape);
                    for i in 0..n {
                        for j in i + 1..=n {
                            let s = skew_subtableau(&t, i, j).unwrap();
                            let a = rectify_with(&s, SlideOrder::BottomFirst);
                            let b = rectify_with(&s, SlideOrder::TopFirst);
                            assert_eq!(a.outer(), b.outer());
                            assert_eq!(a.entries(), s.entries());
                            assert!(a.validate().is_ok());
                        }
                        if i >= 1 {
                            let big = table.get(i - 1, n);
                            let small = table.get(i, n);
                            assert!(big.contains(small) && big.n() == small.n() + 1);
                        }
                        if i >= 1 {
                            assert_eq!(
                                quotient_shape_tau(&t, 0, i).unwrap(),
                                quotient_shape_t(&t, 0, i).unwrap()
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn schuetzenberger_is_a_shape_preserving_involution() {
        for n in 1..=8 {
            for shape in YoungDiagram::partitions(n) {
                for t in enumerate_standard(&shape) {
                    let s = schuetzenberger(&t);
                    assert_eq!(s.shape(), t.shape());
                    assert_eq!(schuetzenberger(&s), t);
                }
            }
        }
    }
}
