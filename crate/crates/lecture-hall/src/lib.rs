//! Exact polyhedral combinatorics of s-lecture hall cones, simplices and
//! order polytopes.
//!
//! Given a sequence s of positive integers, the crate works with the cone
//! `0 <= x_1/s_1 <= ... <= x_n/s_n`, the simplex obtained by capping it at
//! `x_n <= s_n`, and the order polytopes O(P, s) attached to naturally
//! labeled posets. It computes Ehrhart counts and h*-polynomials, the
//! unique monotone decomposition of dilate points into chains of degree-1
//! points, the alcoved coordinates and lecture hall multisets (for
//! sequences whose first-order differences are 0 or 1), the quadratic
//! square-free binomial basis of the associated toric relations, and the
//! induced regular unimodular flag triangulation. Every construction ships
//! with an independent brute-force verification path sized for desk-scale
//! inputs.
//!
//! All arithmetic is exact over checked 64-bit integers; ratio comparisons
//! are done by cross-multiplication. Values are immutable after
//! construction, operations are pure functions, and enumerations return
//! deterministic, lexicographically sorted results, so everything can be
//! shared freely across threads.

mod arith;
pub mod error;

pub mod alcove;
pub mod ehrhart;
pub mod groebner;
pub mod idp;
pub mod point;
pub mod polytope;
pub mod poset;
pub mod seq;
pub mod suite;
pub mod triangulation;

pub use error::{Error, Result};
pub use point::LatticePoint;
pub use poset::LabeledPoset;
pub use seq::SSequence;

/// Default cap on box-scan volumes for enumeration operations.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
