//! Combinatorial decision procedures for torus-fixed points of Springer fibers.
//!
//! A row-standard tableau `τ` indexes a torus-fixed flag and a standard tableau
//! `T` indexes an irreducible component of the Springer fiber. For hook,
//! two-row and two-column shapes this crate decides whether the flag lies in
//! the component, using three independent criteria:
//!
//! * dominance of subquotient shapes ([`membership::dominance_member`]),
//! * the inductive criteria ([`membership::hook_a`], [`membership::two_row_a`],
//!   [`membership::two_col_a`]),
//! * the insertion algorithms in [`constructibility`].
//!
//! Pairwise intersections of components are classified with meanders
//! ([`meanders`]) and Vogan transformations ([`vogan`]). The [`oracle`] module
//! enumerates every pair on small shapes and checks that all of the above agree.
//!
//! ```
//! use springer::{member, RowStandardTableau, StandardTableau};
//!
//! let tau: RowStandardTableau = "2,3,5/4/1".parse().unwrap();
//! let t: StandardTableau = "1,3,4/2/5".parse().unwrap();
//! assert!(member(&tau, &t).unwrap().member);
//! ```

pub mod cli;
pub mod constructibility;
pub mod diagrams;
mod error;
pub mod extended;
pub mod jdt;
pub mod meanders;
pub mod membership;
pub mod oracle;
pub mod tableaux;
pub mod vogan;

pub use diagrams::{ShapeFamily, YoungDiagram};
pub use error::{Error, Result};
pub use extended::Ext;
pub use membership::{member, Criterion, MembershipVerdict};
pub use tableaux::{RowStandardTableau, StandardTableau};
