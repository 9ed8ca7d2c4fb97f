//! Exact characteristic numbers of compact symmetric-space duals.
//!
//! * [`ring`]: truncated graded polynomial rings over `Z` and `Z/2`.
//! * [`partitions`]: partitions and Stiefel-Whitney monomials.
//! * [`catalog`]: symmetric-space families, duals, ranks and the classifier.
//! * [`charclass`]: total classes and characteristic numbers of the rank-one
//!   duals, and the orientable bounding test.
//! * [`transfer`]: pullback along tangential maps, the cover-degree invariant
//!   μ, and `GL(n, F_q)` orders.
//! * [`cli`]: the `charnum` command-line front end.

pub mod bigjson;
pub mod catalog;
pub mod charclass;
pub mod cli;
pub mod error;
pub mod partitions;
pub mod ring;
pub mod transfer;

pub use catalog::{classify, dual_of, Classification, Family, SpaceSpec, Verdict};
pub use charclass::{CharNumberTable, DualSpace, WallVerdict};
pub use error::{Error, Result};
pub use partitions::{partitions_of, sw_monomials_of, Partition, SWMonomial};
pub use ring::{CoefficientMode, GradedElement, RingDescriptor};
