//! Exact-arithmetic combinatorics of frieze patterns and Markoff numbers.
//!
//! Everything here is computed over arbitrary-precision integers, exact
//! rationals, or sparse Laurent polynomials; there is no floating point
//! anywhere. The crate is organized around a handful of interlocking
//! models:
//!
//! * [`polygon`] — combinatorial triangulations of a convex polygon,
//!   their flips, dual trees, and triangle paths;
//! * [`matchings`] — weighted bipartite graphs built from triangulations
//!   and exact perfect-matching sums, including Kuo condensation and the
//!   DAG-to-matchings transform;
//! * [`frieze`] — frieze tables built top-down from a quiddity row,
//!   sideways from a zig-zag, or from a weighted triangulation, together
//!   with verification, continuants, vertex markings, and classification;
//! * [`snake`] — snake graphs as codes over `{1,2}` with five equivalent
//!   counting models;
//! * [`markoff`] — Markoff triples via the topograph and via lattice
//!   strips, Markoff polynomials, and the 45-45-90 and Markoff–Hurwitz
//!   analogues;
//! * [`tropical`] — the max-plus analogue: laminations, crossing
//!   distances, and tree metrics;
//! * [`variant`] — the variant recurrence `E = (BD - C)/A`, its
//!   periodicity, enumeration, and symbolic experiments.

pub mod exact;
pub mod frieze;
pub mod markoff;
pub mod matchings;
pub mod polygon;
pub mod snake;
pub mod tropical;
pub mod variant;

pub use exact::{BigInt, ExactError, ExponentVector, LaurentPoly, Mat2, Rational};
