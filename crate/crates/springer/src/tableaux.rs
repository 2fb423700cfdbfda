//! Row-standard and standard tableaux.
//!
//! Entries are `1..=n`. Rows and columns are indexed from zero in this API.
//! The wire format lists rows top to bottom joined by `/`, entries joined by `,`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::diagrams::YoungDiagram;
use crate::{Error, Result};

/// A numbering of a Young diagram by `1..=n` whose rows increase to the right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowStandardTableau {
    shape: YoungDiagram,
    rows: Vec<Vec<usize>>,
    pos: Vec<(usize, usize)>,
}

impl RowStandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = YoungDiagram::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("{}: {e}", show_rows(&rows))))?;
        let n = shape.n();
        let mut pos = vec![(usize::MAX, usize::MAX); n];
        for (p, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(format!(
                    "{}: row {} is not increasing",
                    show_rows(&rows),
                    p + 1
                )));
            }
            for (c, &e) in row.iter().enumerate() {
                if e == 0 || e > n || pos[e - 1].0 != usize::MAX {
                    return Err(Error::InvalidTableau(format!(
                        "{}: entries are not a permutation of 1..{n}",
                        show_rows(&rows)
                    )));
                }
                pos[e - 1] = (p, c);
            }
        }
        Ok(RowStandardTableau { shape, rows, pos })
    }

    pub fn shape(&self) -> &YoungDiagram {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// `(row, column)` of entry `i`.
    pub fn position(&self, i: usize) -> (usize, usize) {
        self.pos[i - 1]
    }

    pub fn row_of(&self, i: usize) -> usize {
        self.pos[i - 1].0
    }

    pub fn col_of(&self, i: usize) -> usize {
        self.pos[i - 1].1
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Entries of column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows.iter().filter_map(|r| r.get(c).copied()).collect()
    }

    pub fn is_standard(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above))
    }

    /// The entries in `(lo, hi]` shifted down by `lo`, keeping row membership.
    ///
    /// Empty rows are dropped and the remaining rows are stably sorted by
    /// decreasing length, so the result is again row-standard.
    pub fn restrict(&self, lo: usize, hi: usize) -> RowStandardTableau {
        let mut rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().filter(|&&e| e > lo && e <= hi).map(|&e| e - lo).collect())
            .filter(|r: &Vec<usize>| !r.is_empty())
            .collect();
        rows.sort_by(|a, b| b.len().cmp(&a.len()));
        RowStandardTableau::new(rows).expect("restriction of a row-standard tableau")
    }

    /// `τ[1..k]`.
    pub fn prefix(&self, k: usize) -> RowStandardTableau {
        self.restrict(0, k)
    }

    /// Exchanges the values `a` and `b`, failing if a row stops increasing.
    pub fn swap_entries(&self, a: usize, b: usize) -> Result<RowStandardTableau> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&e| if e == a { b } else if e == b { a } else { e })
                    .collect()
            })
            .collect();
        RowStandardTableau::new(rows)
    }

    /// Exchanges rows `p` and `q`, which must have equal length.
    pub fn swap_rows(&self, p: usize, q: usize) -> Result<RowStandardTableau> {
        let mut rows = self.rows.clone();
        rows.swap(p, q);
        RowStandardTableau::new(rows)
    }

    /// `st(τ)`: sort every column increasingly.
    pub fn standardize(&self) -> StandardTableau {
        let mut rows = self.rows.clone();
        for c in 0..self.shape.row(0) {
            let mut col = self.column(c);
            col.sort_unstable();
            for (p, e) in col.into_iter().enumerate() {
                rows[p][c] = e;
            }
        }
        StandardTableau::new(rows).expect("sorting columns of a row-standard tableau")
    }

    /// `S·τ`: replace `i` by `n - i + 1` and reverse each row.
    pub fn s_dual(&self) -> RowStandardTableau {
        let n = self.n();
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().rev().map(|&e| n + 1 - e).collect())
            .collect();
        RowStandardTableau::new(rows).expect("row reversal preserves row-standardness")
    }

    /// Whether `other ⊆ self`: the rows of `other` induce the same partition of
    /// `1..=|other|` as the rows of `self`.
    pub fn contains_subtableau(&self, other: &RowStandardTableau) -> bool {
        contains_subtableau(self, other)
    }

    /// Same multiset of rows.
    pub fn row_equivalent(&self, other: &RowStandardTableau) -> Result<bool> {
        row_equivalent(self, other)
    }

    /// All tableaux obtained by permuting rows of equal length, `self` included.
    pub fn row_permutations(&self) -> Vec<RowStandardTableau> {
        let mut out = vec![self.clone()];
        let mut start = 0;
        let r = self.rows.len();
        while start < r {
            let mut end = start;
            while end < r && self.rows[end].len() == self.rows[start].len() {
                end += 1;
            }
            let mut next = Vec::new();
            for t in &out {
                let block: Vec<Vec<usize>> = t.rows[start..end].to_vec();
                for perm in permutations(&block) {
                    let mut rows = t.rows.clone();
                    rows.splice(start..end, perm);
                    next.push(RowStandardTableau::new(rows).expect("permuted equal rows"));
                }
            }
            out = next;
            start = end;
        }
        out
    }
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

pub fn contains_subtableau(t: &RowStandardTableau, t2: &RowStandardTableau) -> bool {
    let k = t2.n();
    if k > t.n() {
        return false;
    }
    (1..=k).all(|a| (a + 1..=k).all(|b| (t2.row_of(a) == t2.row_of(b)) == (t.row_of(a) == t.row_of(b))))
}

pub fn row_equivalent(t: &RowStandardTableau, t2: &RowStandardTableau) -> Result<bool> {
    if t.shape() != t2.shape() {
        return Err(Error::ShapeMismatch(t.shape().to_string(), t2.shape().to_string()));
    }
    let mut a = t.rows.clone();
    let mut b = t2.rows.clone();
    a.sort();
    b.sort();
    Ok(a == b)
}

fn show_rows(rows: &[Vec<usize>]) -> String {
    rows.iter()
        .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("/")
}

impl fmt::Display for RowStandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", show_rows(&self.rows))
    }
}

fn parse_rows(s: &str) -> Result<Vec<Vec<usize>>> {
    let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let cleaned = cleaned.trim_start_matches('(').trim_end_matches(')');
    if cleaned.is_empty() {
        return Err(Error::Parse("empty tableau".into()));
    }
    cleaned
        .split('/')
        .map(|row| {
            row.split(',')
                .map(|e| {
                    e.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad entry {e:?} in tableau {s:?}")))
                })
                .collect()
        })
        .collect()
}

impl FromStr for RowStandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RowStandardTableau::new(parse_rows(s)?)
    }
}

/// Parses the wire format into a row-standard tableau.
pub fn parse_tableau(text: &str) -> Result<RowStandardTableau> {
    text.parse()
}

/// A row-standard tableau whose columns also increase downward.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau(RowStandardTableau);

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_row_standard(RowStandardTableau::new(rows)?)
    }

    pub fn from_row_standard(t: RowStandardTableau) -> Result<Self> {
        if t.is_standard() {
            Ok(StandardTableau(t))
        } else {
            Err(Error::InvalidTableau(format!("{t}: a column is not increasing")))
        }
    }

    pub fn as_row_standard(&self) -> &RowStandardTableau {
        &self.0
    }

    pub fn into_row_standard(self) -> RowStandardTableau {
        self.0
    }

    /// `T^t`: row `p` becomes column `p`.
    pub fn transpose(&self) -> StandardTableau {
        let rows = (0..self.shape().row(0)).map(|c| self.column(c)).collect();
        StandardTableau::new(rows).expect("transpose of a standard tableau")
    }

    /// `T[1..k]`, which is again standard.
    pub fn prefix(&self, k: usize) -> StandardTableau {
        StandardTableau(self.0.prefix(k))
    }

    /// Shapes of `T[1..i]` for `i = 1..=n`.
    pub fn prefix_shapes(&self) -> Vec<YoungDiagram> {
        prefix_shapes(self)
    }

    /// Exchanges `a` and `b`, failing if the result is not standard.
    pub fn swap_entries(&self, a: usize, b: usize) -> Result<StandardTableau> {
        StandardTableau::from_row_standard(self.0.swap_entries(a, b)?)
    }
}

pub fn prefix_shapes(t: &StandardTableau) -> Vec<YoungDiagram> {
    let mut counts = vec![0; t.shape().num_rows()];
    (1..=t.n())
        .map(|i| {
            counts[t.row_of(i)] += 1;
            YoungDiagram::from_counts(counts.clone())
        })
        .collect()
}

pub fn standardize(t: &RowStandardTableau) -> StandardTableau {
    t.standardize()
}

pub fn s_dual(t: &RowStandardTableau) -> RowStandardTableau {
    t.s_dual()
}

pub fn transpose_tableau(t: &StandardTableau) -> StandardTableau {
    t.transpose()
}

impl Deref for StandardTableau {
    type Target = RowStandardTableau;

    fn deref(&self) -> &RowStandardTableau {
        &self.0
    }
}

impl From<StandardTableau> for RowStandardTableau {
    fn from(t: StandardTableau) -> Self {
        t.0
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardTableau::new(parse_rows(s)?)
    }
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
    fn parse_examples() {
        let t = rs("3,4,8/1,6,7/2,5");
        assert_eq!(t.shape(), &"3,3,2".parse().unwrap());
        assert_eq!(rs("1").n(), 1);
        assert!("2,1/3".parse::<RowStandardTableau>().is_err());
        assert!("1,2/4".parse::<RowStandardTableau>().is_err());
        assert!("1/2,3".parse::<RowStandardTableau>().is_err());
        assert!("1,x".parse::<RowStandardTableau>().is_err());
        assert_eq!(rs(" (1, 3 / 2) ").to_string(), "1,3/2");
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(rs("3,4,8/1,6,7/2,5").standardize(), st("1,4,7/2,5,8/3,6"));
        assert_eq!(rs("2,3/1").standardize(), st("1,3/2"));
        let t = st("1,3,4/2,5,7/6");
        assert_eq!(t.standardize(), t);
    }

    #[test]
    fn s_dual_examples() {
        assert_eq!(rs("3,4,7/1,5,6/2").s_dual(), rs("1,4,5/2,3,7/6"));
        assert_eq!(rs("2,3,6/1,5,7/4").s_dual(), rs("2,5,6/1,3,7/4"));
        let t = rs("3,4,8/1,6,7/2,5");
        assert_eq!(t.s_dual().s_dual(), t);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(st("1,2/3").transpose(), st("1,3/2"));
        assert_eq!(st("1,2,3,4").transpose(), st("1/2/3/4"));
        let t = st("1,3,4/2,5,7/6");
        assert_eq!(t.transpose().transpose(), t);
        assert!(StandardTableau::new(vec![vec![2, 3], vec![1]]).is_err());
    }

    #[test]
    fn subtableau_examples() {
        assert!(rs("1,6,7/2,3,4/5,8").contains_subtableau(&rs("2,3,4/1")));
        let t = rs("1,6,7/2,3,4/5,8");
        assert!(t.contains_subtableau(&t));
        assert!(!rs("1/2").contains_subtableau(&rs("1,2")));
    }

    #[test]
    fn row_equivalence_examples() {
        assert!(row_equivalent(&rs("1,2/3,4"), &rs("3,4/1,2")).unwrap());
        assert!(!row_equivalent(&rs("1,2/3"), &rs("1,3/2")).unwrap());
        assert!(row_equivalent(&rs("1,2/3"), &rs("1,2/3")).unwrap());
        assert!(row_equivalent(&rs("1,2/3"), &rs("1/2/3")).is_err());
    }

    #[test]
    fn row_permutations_of_equal_rows() {
        let t = rs("1,4/2,5/3,6");
        assert_eq!(t.row_permutations().len(), 6);
        assert_eq!(rs("1,2,3/4/5").row_permutations().len(), 2);
    }

    #[test]
    fn prefix_shape_examples() {
        let shapes: Vec<String> = st("1,3/2").prefix_shapes().iter().map(|d| d.to_string()).collect();
        assert_eq!(shapes, ["1", "1,1", "2,1"]);
        let shapes: Vec<String> = st("1,2,3").prefix_shapes().iter().map(|d| d.to_string()).collect();
        assert_eq!(shapes, ["1", "2", "3"]);
    }

    #[test]
    fn restrict_sorts_rows() {
        let t = rs("1,6,7/2,3,4/5,8");
        assert_eq!(t.prefix(4), rs("2,3,4/1"));
        assert_eq!(t.restrict(4, 8), rs("2,3/1,4"));
    }
}
