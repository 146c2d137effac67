//! Difference-set representation machinery over finite abelian groups and
//! step functions on the unit interval, with exhaustive desk-scale
//! verification of its identities, closed forms, and extremal bounds.
//!
//! The building blocks:
//!
//! - [`group`]: cyclic / integer-window / product-of-cyclic carriers,
//!   dense bit-vector sets, centered interval rearrangement, symmetric-set
//!   enumeration;
//! - [`rep`]: the difference representation count `r_A`, its higher-order
//!   version on intersections of translates, and the extremal statistics
//!   `mu`, `mu^(k)`;
//! - [`energy`]: higher energies, the ordered-tuple count `T` with its
//!   closed interval form and upper bounds, and the tuple-count identities;
//! - [`verify`]: instance checkers and exhaustive sweeps for the extremal
//!   statements (interval rearrangement optimality, majorization,
//!   convexity, the basic chain, and the theorem-level bounds);
//! - [`constructions`]: interval, random, greedy Sidon, and the
//!   low-concentration witness family;
//! - [`continuous`]: exact step-function autocorrelation and its extremal
//!   statement.

pub mod caps;
pub mod constructions;
pub mod continuous;
pub mod energy;
pub mod error;
pub mod files;
pub mod group;
pub mod rep;
pub mod report;
pub mod verify;

pub use caps::EnumCap;
pub use error::{Error, Result};
pub use group::{centered_interval, enumerate_symmetric_sets, Element, GSet, GroupSpec};
pub use rep::{diff_set, higher_rep, mu, mu_k, rep_table, RepTable, SparseRepTable};
pub use report::{CheckReport, Verdict};
