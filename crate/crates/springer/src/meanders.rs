//! Cup diagrams, meanders and the classification of pairwise intersections of components.

use std::fmt;

use crate::diagrams::ShapeFamily;
use crate::membership::member;
use crate::oracle::enumerate_standard;
use crate::tableaux::StandardTableau;
use crate::{Error, Result};

/// Non-crossing arcs on points `1..=n` matching each second-row entry of a
/// two-row standard tableau with a first-row entry to its left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CupDiagram {
    pub n: usize,
    /// Arcs `(left, right)`, ordered by right end point.
    pub arcs: Vec<(usize, usize)>,
    /// Points on no arc.
    pub fixed: Vec<usize>,
}

impl CupDiagram {
    /// The other end of the arc at `x`, if any.
    pub fn partner(&self, x: usize) -> Option<usize> {
        self.arcs.iter().find_map(|&(a, b)| {
            if a == x {
                Some(b)
            } else if b == x {
                Some(a)
            } else {
                None
            }
        })
    }

    fn partners(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n + 1];
        for &(a, b) in &self.arcs {
            out[a] = Some(b);
            out[b] = Some(a);
        }
        out
    }

    /// Parenthesis word: `(` and `)` for arc ends, `•` for fixed points.
    pub fn word(&self) -> String {
        let partner = self.partners();
        (1..=self.n)
            .map(|x| match partner[x] {
                None => '•',
                Some(y) if y > x => '(',
                Some(_) => ')',
            })
            .collect()
    }
}

fn require_two_row(t: &StandardTableau) -> Result<()> {
    if t.shape().num_rows() > 2 {
        return Err(Error::Family(format!("shape {} is not two-row", t.shape())));
    }
    Ok(())
}

/// Matches each second-row entry with the largest unused first-row entry below it.
pub fn cup_diagram(t: &StandardTableau) -> Result<CupDiagram> {
    require_two_row(t)?;
    let mut open = Vec::new();
    let mut arcs = Vec::new();
    for x in 1..=t.n() {
        if t.row_of(x) == 0 {
            open.push(x);
        } else {
            let a = open.pop().expect("standard tableaux keep a first-row entry available");
            arcs.push((a, x));
        }
    }
    Ok(CupDiagram { n: t.n(), arcs, fixed: open })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Loop,
    Interval,
}

/// A connected component of a meander.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    /// Number of arcs.
    pub length: usize,
    /// Points in walking order; intervals start at their smaller end point.
    pub points: Vec<usize>,
}

/// The cup diagram of `T` drawn upward superposed with that of `S` drawn downward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Meander {
    pub top: CupDiagram,
    pub bottom: CupDiagram,
    pub components: Vec<Component>,
}

impl Meander {
    pub fn loops(&self) -> usize {
        self.components.iter().filter(|c| c.kind == ComponentKind::Loop).count()
    }

    /// Interval lengths in order of their smallest point.
    pub fn intervals(&self) -> Vec<usize> {
        self.components
            .iter()
            .filter(|c| c.kind == ComponentKind::Interval)
            .map(|c| c.length)
            .collect()
    }

    /// Every interval has an even number of arcs; vacuously true without intervals.
    pub fn is_even(&self) -> bool {
        self.intervals().iter().all(|l| l % 2 == 0)
    }
}

impl fmt::Display for Meander {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lens: Vec<String> = self.intervals().iter().map(|l| l.to_string()).collect();
        write!(
            f,
            "{}, loops={}, intervals=[{}]",
            if self.is_even() { "even" } else { "odd" },
            self.loops(),
            lens.join(",")
        )
    }
}

pub fn meander(t: &StandardTableau, s: &StandardTableau) -> Result<Meander> {
    if t.shape() != s.shape() {
        return Err(Error::ShapeMismatch(t.shape().to_string(), s.shape().to_string()));
    }
    let top = cup_diagram(t)?;
    let bottom = cup_diagram(s)?;
    let up = top.partners();
    let down = bottom.partners();
    let n = t.n();
    let mut seen = vec![false; n + 1];
    let mut components = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        // walk using top arcs first, then alternate
        let mut forward = vec![start];
        let mut use_top = true;
        let mut x = start;
        let closed = loop {
            let next = if use_top { up[x] } else { down[x] };
            match next {
                None => break false,
                Some(y) if y == start => break true,
                Some(y) => {
                    forward.push(y);
                    x = y;
                    use_top = !use_top;
                }
            }
        };
        let (kind, points) = if closed {
            (ComponentKind::Loop, forward)
        } else {
            let mut backward = Vec::new();
            let mut x = start;
            while let Some(y) = down[x] {
                backward.push(y);
                x = y;
                let Some(z) = up[x] else { break };
                backward.push(z);
                x = z;
            }
            backward.reverse();
            backward.extend(forward);
            if backward.last() < backward.first() {
                backward.reverse();
            }
            (ComponentKind::Interval, backward)
        };
        for &p in &points {
            seen[p] = true;
        }
        let length = match kind {
            ComponentKind::Loop => points.len(),
            ComponentKind::Interval => points.len() - 1,
        };
        components.push(Component { kind, length, points });
    }
    Ok(Meander { top, bottom, components })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwoRowIntersection {
    pub nonempty: bool,
    pub dim: Option<usize>,
    pub codim_one: bool,
}

/// Nonempty iff the meander is even; the dimension is then its number of loops.
pub fn intersection_2row(t: &StandardTableau, s: &StandardTableau) -> Result<TwoRowIntersection> {
    let m = meander(t, s)?;
    let nonempty = m.is_even();
    let second = t.shape().row(1);
    Ok(TwoRowIntersection {
        nonempty,
        dim: nonempty.then(|| m.loops()),
        codim_one: nonempty && second >= 1 && m.loops() == second - 1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookIntersection {
    pub nonempty: bool,
    pub codim: Option<usize>,
    pub codim_one: bool,
}

fn require_same(t: &StandardTableau, s: &StandardTableau) -> Result<()> {
    if t.shape() != s.shape() {
        return Err(Error::ShapeMismatch(t.shape().to_string(), s.shape().to_string()));
    }
    Ok(())
}

/// Whether `s` is `t` with some `i, i+1` exchanged, `2 <= i <= n - 1`.
pub fn is_adjacent_swap(t: &StandardTableau, s: &StandardTableau) -> bool {
    let n = t.n();
    (2..n).any(|i| t.swap_entries(i, i + 1).is_ok_and(|x| &x == s))
}

/// Interlacing of first rows decides nonemptiness; the codimension is the
/// sum of differences of first-row entries.
pub fn hook_intersection(t: &StandardTableau, s: &StandardTableau) -> Result<HookIntersection> {
    require_same(t, s)?;
    if !t.shape().classify().hook {
        return Err(Error::Family(format!("shape {} is not a hook", t.shape())));
    }
    let a = &t.rows()[0];
    let b = &s.rows()[0];
    let nonempty = (1..a.len()).all(|q| a[q - 1].max(b[q - 1]) < a[q].min(b[q]));
    let codim = nonempty.then(|| (1..a.len()).map(|q| a[q].abs_diff(b[q])).sum::<usize>());
    let codim_one = codim == Some(1);
    if codim_one != is_adjacent_swap(t, s) {
        return Err(Error::Invariant(format!(
            "codimension formula and adjacent-swap test disagree on ({t}, {s})"
        )));
    }
    Ok(HookIntersection { nonempty, codim, codim_one })
}

/// Codimension one on two columns, read off the transposed two-row pair.
pub fn two_col_codim_one(t: &StandardTableau, s: &StandardTableau) -> Result<bool> {
    require_same(t, s)?;
    if t.shape().row(0) > 2 {
        return Err(Error::Family(format!("shape {} is not two-column", t.shape())));
    }
    Ok(intersection_2row(&t.transpose(), &s.transpose())?.codim_one)
}

/// One of the pair lies in the other's component and the first rows share all entries but one.
pub fn codim_one_condition_iii(t: &StandardTableau, s: &StandardTableau) -> Result<bool> {
    require_same(t, s)?;
    require_two_row(t)?;
    let a = &t.rows()[0];
    let b = &s.rows()[0];
    let shared = a.iter().filter(|x| b.contains(x)).count();
    if shared + 1 != a.len() {
        return Ok(false);
    }
    Ok(member(s, t)?.member || member(t, s)?.member)
}

/// Classification of `K^T ∩ K^S` from every applicable family rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionSummary {
    pub family: ShapeFamily,
    pub nonempty: bool,
    /// Dimension when a family rule gives it.
    pub dim: Option<usize>,
    pub codim_one: bool,
}

impl fmt::Display for IntersectionSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dim = self.dim.map_or("unknown".to_string(), |d| d.to_string());
        let dim = if self.nonempty { dim } else { "-".to_string() };
        write!(f, "nonempty={}, dim={}, codim1={}", self.nonempty, dim, self.codim_one)
    }
}

/// Existence of a standard tableau lying in both components.
pub fn common_standard_member(t: &StandardTableau, s: &StandardTableau) -> Result<bool> {
    require_same(t, s)?;
    for s0 in enumerate_standard(t.shape()) {
        if member(&s0, t)?.member && member(&s0, s)?.member {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Runs every rule that applies to the shape and fails if they disagree.
pub fn intersect(t: &StandardTableau, s: &StandardTableau) -> Result<IntersectionSummary> {
    require_same(t, s)?;
    let family = t.shape().classify();
    if family.is_general() {
        return Err(Error::GeneralShape(t.shape().to_string()));
    }
    let dim_b = t.shape().springer_dim();
    let mut nonempty = vec![common_standard_member(t, s)?];
    let mut dims = Vec::new();
    let mut codim = Vec::new();
    if family.hook {
        let h = hook_intersection(t, s)?;
        nonempty.push(h.nonempty);
        dims.extend(h.codim.map(|c| dim_b - c));
        codim.push(h.codim_one);
    }
    if family.two_row {
        let r = intersection_2row(t, s)?;
        nonempty.push(r.nonempty);
        dims.extend(r.dim);
        codim.push(r.codim_one);
    }
    if family.two_column {
        codim.push(two_col_codim_one(t, s)?);
    }
    let agree = |v: &[bool]| v.windows(2).all(|w| w[0] == w[1]);
    let dims_agree = dims.windows(2).all(|w| w[0] == w[1]);
    if !agree(&nonempty) || !agree(&codim) || !dims_agree {
        return Err(Error::Invariant(format!("intersection rules disagree on ({t}, {s})")));
    }
    Ok(IntersectionSummary { family, nonempty: nonempty[0], dim: dims.first().copied(), codim_one: codim[0] })
}

/// SVG drawing with the arcs of `T` above the line and those of `S` below.
pub fn render_svg(m: &Meander) -> String {
    let n = m.top.n;
    let step = 40;
    let width = step * (n + 1);
    let max_span = m
        .top
        .arcs
        .iter()
        .chain(&m.bottom.arcs)
        .map(|(a, b)| b - a)
        .max()
        .unwrap_or(0);
    let radius = max_span * step / 2;
    let mid = radius + 30;
    let height = 2 * mid;
    let x = |p: usize| p * step;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    );
    out.push_str(&format!(
        "  <line x1=\"0\" y1=\"{mid}\" x2=\"{width}\" y2=\"{mid}\" stroke=\"#ccc\" stroke-dasharray=\"4 4\"/>\n"
    ));
    for (arcs, sweep, color) in [(&m.top.arcs, 1, "#1f77b4"), (&m.bottom.arcs, 0, "#d62728")] {
        for &(a, b) in arcs {
            let r = (b - a) * step / 2;
            out.push_str(&format!(
                "  <path d=\"M {} {mid} A {r} {r} 0 0 {sweep} {} {mid}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"2\"/>\n",
                x(a),
                x(b)
            ));
        }
    }
    for p in 1..=n {
        out.push_str(&format!("  <circle cx=\"{}\" cy=\"{mid}\" r=\"4\" fill=\"black\"/>\n", x(p)));
        out.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{p}</text>\n",
            x(p) + 8,
            mid + 16
        ));
    }
    out.push_str("</svg>\n");
    out
}
