//! Natural numbers extended by an infinite element.

use std::fmt;

/// An element of `ℕ ∪ {∞}` where `∞ + 1 = ∞ - 1 = ∞` and every finite value is below `∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ext {
    Fin(usize),
    Inf,
}

impl Ext {
    pub fn is_finite(self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    pub fn succ(self) -> Ext {
        match self {
            Ext::Fin(a) => Ext::Fin(a + 1),
            Ext::Inf => Ext::Inf,
        }
    }

    /// Predecessor; `None` for zero.
    pub fn pred(self) -> Option<Ext> {
        match self {
            Ext::Fin(0) => None,
            Ext::Fin(a) => Some(Ext::Fin(a - 1)),
            Ext::Inf => Some(Ext::Inf),
        }
    }
}

impl From<usize> for Ext {
    fn from(a: usize) -> Self {
        Ext::Fin(a)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Fin(a) => write!(f, "{a}"),
            Ext::Inf => write!(f, "∞"),
        }
    }
}
