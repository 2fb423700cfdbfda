//! Young diagrams, the dominance order and shape families.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A Young diagram stored by its row lengths, longest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    /// Builds a diagram from weakly decreasing positive row lengths.
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.iter().any(|&r| r == 0) {
            return Err(Error::InvalidShape(format!("{rows:?} has an empty row")));
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{rows:?} is not weakly decreasing")));
        }
        Ok(YoungDiagram { rows })
    }

    /// The diagram with no boxes.
    pub fn empty() -> Self {
        YoungDiagram { rows: Vec::new() }
    }

    /// Sorts arbitrary counts decreasingly and drops zeros.
    pub fn from_counts(mut counts: Vec<usize>) -> Self {
        counts.retain(|&c| c > 0);
        counts.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { rows: counts }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of nonempty rows.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Length of row `p` (0-based), zero past the last row.
    pub fn row(&self, p: usize) -> usize {
        self.rows.get(p).copied().unwrap_or(0)
    }

    /// Total number of boxes.
    pub fn n(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Column lengths, left to right.
    pub fn columns(&self) -> Vec<usize> {
        let width = self.row(0);
        (0..width)
            .map(|c| self.rows.iter().take_while(|&&r| r > c).count())
            .collect()
    }

    pub fn transpose(&self) -> YoungDiagram {
        YoungDiagram { rows: self.columns() }
    }

    /// `self ⪯ other` in the dominance order.
    pub fn dominated_by(&self, other: &YoungDiagram) -> Result<bool> {
        dominates(self, other)
    }

    /// `self ⪯ other` and `self ≠ other`.
    pub fn strictly_dominated_by(&self, other: &YoungDiagram) -> Result<bool> {
        Ok(self != other && dominates(self, other)?)
    }

    /// Whether every row of `inner` fits inside the corresponding row of `self`.
    pub fn contains(&self, inner: &YoungDiagram) -> bool {
        inner.num_rows() <= self.num_rows()
            && inner.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    pub fn classify(&self) -> ShapeFamily {
        classify(self)
    }

    pub fn springer_dim(&self) -> usize {
        springer_dim(self)
    }

    /// All partitions of `n`, in reverse lexicographic order starting from `(n)`.
    pub fn partitions(n: usize) -> Vec<YoungDiagram> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if rest == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                cur.push(part);
                go(rest - part, part, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

/// Returns `y ⪯ y2`: every prefix sum of `y` is at most the matching prefix sum of `y2`.
pub fn dominates(y: &YoungDiagram, y2: &YoungDiagram) -> Result<bool> {
    if y.n() != y2.n() {
        return Err(Error::IncomparableSizes(y.n(), y2.n()));
    }
    Ok(dominated_unchecked(y.rows(), y2.rows()))
}

/// Prefix-sum comparison for row vectors known to have equal sums.
pub(crate) fn dominated_unchecked(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    for p in 0..a.len().max(b.len()) {
        sa += a.get(p).copied().unwrap_or(0);
        sb += b.get(p).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// Which of the three tractable families a shape belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ShapeFamily {
    pub hook: bool,
    pub two_row: bool,
    pub two_column: bool,
}

impl ShapeFamily {
    pub fn is_general(&self) -> bool {
        !(self.hook || self.two_row || self.two_column)
    }
}

impl fmt::Display for ShapeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut names = Vec::new();
        if self.hook {
            names.push("hook");
        }
        if self.two_row {
            names.push("two-row");
        }
        if self.two_column {
            names.push("two-column");
        }
        if names.is_empty() {
            names.push("general");
        }
        write!(f, "{}", names.join(","))
    }
}

pub fn classify(y: &YoungDiagram) -> ShapeFamily {
    ShapeFamily {
        hook: y.rows().iter().filter(|&&r| r >= 2).count() <= 1,
        two_row: y.num_rows() <= 2,
        two_column: y.row(0) <= 2,
    }
}

/// Dimension of the Springer fiber: sum over columns of `c(c-1)/2`.
pub fn springer_dim(y: &YoungDiagram) -> usize {
    y.columns().iter().map(|c| c * (c.saturating_sub(1)) / 2).sum()
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let cleaned = cleaned.trim_start_matches('(').trim_end_matches(')');
        if cleaned.is_empty() {
            return Err(Error::Parse("empty shape".into()));
        }
        let rows = cleaned
            .split(',')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row length {p:?} in shape {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        YoungDiagram::new(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&y("2,2,1"), &y("3,2")).unwrap());
        assert!(!dominates(&y("3,1"), &y("2,2")).unwrap());
        assert!(dominates(&y("2,2"), &y("3,1")).unwrap());
        assert!(dominates(&y("4,1"), &y("4,1")).unwrap());
        assert_eq!(dominates(&y("2"), &y("2,1")), Err(Error::IncomparableSizes(2, 3)));
    }

    #[test]
    fn empty_dominates_itself() {
        let e = YoungDiagram::empty();
        assert!(dominates(&e, &e).unwrap());
        assert_eq!(e.n(), 0);
        assert_eq!(e.transpose(), e);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(y("3,2").transpose(), y("2,2,1"));
        assert_eq!(y("1,1,1").transpose(), y("3"));
        assert_eq!(y("5,4").transpose(), y("2,2,2,2,1"));
    }

    #[test]
    fn classify_examples() {
        let f = y("4,1,1").classify();
        assert!(f.hook && !f.two_row && !f.two_column);
        let f = y("2,1").classify();
        assert!(f.hook && f.two_row && f.two_column);
        assert!(y("3,2,1").classify().is_general());
        assert_eq!(y("3,2,1").classify().to_string(), "general");
    }

    #[test]
    fn springer_dim_examples() {
        assert_eq!(y("1").springer_dim(), 0);
        assert_eq!(y("5,4").springer_dim(), 4);
        assert_eq!(y("2,2,1").springer_dim(), 4);
    }

    #[test]
    fn springer_dim_on_families() {
        for n in 1..=8 {
            for d in YoungDiagram::partitions(n) {
                if d.num_rows() <= 2 {
                    assert_eq!(d.springer_dim(), d.row(1));
                }
                if d.classify().hook {
                    let c = d.num_rows();
                    assert_eq!(d.springer_dim(), c * (c - 1) / 2);
                }
            }
        }
    }

    #[test]
    fn parse_rejects_increasing() {
        assert!("2,3".parse::<YoungDiagram>().is_err());
        assert!("2,0".parse::<YoungDiagram>().is_err());
        assert!("".parse::<YoungDiagram>().is_err());
        assert_eq!(y(" 5, 4 ").to_string(), "5,4");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| YoungDiagram::partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn dominance_is_partial_order() {
        for n in 1..=8 {
            let ps = YoungDiagram::partitions(n);
            for a in &ps {
                assert!(dominates(a, a).unwrap());
                for b in &ps {
                    let ab = dominates(a, b).unwrap();
                    let ba = dominates(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    assert_eq!(ab, dominates(&b.transpose(), &a.transpose()).unwrap());
                    for c in &ps {
                        if ab && dominates(b, c).unwrap() {
                            assert!(dominates(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }
}
