//! Markoff triples and numbers via the topograph and via lattice snake
//! graphs; Markoff polynomials; Dana Scott's sequence; the 45-45-90
//! analogue; Rosenberger ternary cubics; Markoff-Hurwitz quadruples.

mod herriot;
mod lattice;
mod orbits;
mod topograph;

pub use herriot::{herriot_distance, is_vertex, vertex_degree, HERRIOT_FIGURE22};
pub use lattice::{
    markoff_num, markoff_poly, markoff_snake, strip_graph, LatticeTriangle, LatticeVector,
    Superbase,
};
pub use orbits::{
    hurwitz_expand, hurwitz_expand_formal, is_listed_rosenberger, rosenberger_orbit,
    HurwitzFormalReport, HurwitzNode, OrbitNode, ROSENBERGER_COEFFS,
};
pub use topograph::{
    scott_matrices, scott_sequence, superbase_tree, topograph_expand, topograph_expand_formal,
    FormalNode, TopographNode,
};

use thiserror::Error;

use crate::exact::ExactError;
use crate::matchings::GraphError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkoffError {
    #[error("vector ({0},{1}) is not primitive")]
    NotPrimitive(i64, i64),
    #[error("({0},{1}) is a shortest vector; its strip is empty")]
    ShortestVector(i64, i64),
    #[error("seed does not satisfy the defining equation")]
    InvalidSeed,
    #[error("scott sequence needs k >= 3")]
    ScottTooShort,
    #[error("({0},{1}) is not a lattice vertex")]
    NotAVertex(i64, i64),
    #[error("segment from ({0},{1}) to ({2},{3}) passes through a lattice vertex")]
    ThroughVertex(i64, i64, i64, i64),
    #[error("degenerate segment")]
    Degenerate,
    #[error("coefficients must be positive")]
    BadCoefficients,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
