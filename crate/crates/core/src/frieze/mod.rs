//! Frieze tables: construction top-down from a quiddity row, sideways
//! from a zig-zag, or from a weighted triangulation; verification;
//! continuants; the vertex marking scheme; and classification of
//! positive-integer friezes.

mod classify;
mod complete;
mod marking;
mod table;
mod zigzag;

pub use classify::{classify_friezes, Classification};
pub use complete::ptolemy_complete;
pub use marking::{cc_marking, continuant};
pub use table::{FriezeReport, FriezeTable};
pub use zigzag::{ZigStep, Zigzag};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::exact::{ExactError, ExchangeRing, ExchangeValue, LaurentPoly};
use crate::matchings::{build_graph, GraphError};
use crate::polygon::{PolygonError, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("frieze tables need n >= 4, got {0}")]
    TooSmall(usize),
    #[error("division by zero computing entry ({0},{1})")]
    DivisionByZero(usize, usize),
    #[error("quiddity length {0} does not match n")]
    BadQuiddity(usize),
    #[error("zig-zag invalid: {0}")]
    BadZigzag(String),
    #[error("values on a triangulation required: {0} missing")]
    MissingValue(String),
    #[error("propagation stalled with {0} entries unknown")]
    Underdetermined(usize),
    #[error("continuant of an empty list")]
    EmptyContinuant,
    #[error("classification supports 4 <= n <= 12, got {0}")]
    OutOfRange(usize),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Frieze table from its quiddity row: top row all 1, second row the
/// quiddity, each later row from the frieze recurrence D = (BC - 1)/A.
/// The table is returned even when the bottom row is not all 1; use
/// [`FriezeTable::verify`] to decide frieze-hood.
pub fn frieze_from_quiddity<V: ExchangeRing>(quiddity: &[V]) -> Result<FriezeTable<V>, FriezeError> {
    let n = quiddity.len();
    if n < 4 {
        return Err(FriezeError::TooSmall(n));
    }
    let one = quiddity[0].one_like();
    let mut t = FriezeTable::new(n);
    for i in 1..=n {
        t.set(i, i % n + 1, one.clone());
        // m_{i,i+2} = a_{i+1}, the quiddity entry at the enclosed vertex.
        t.set(i, (i + 1) % n + 1, quiddity[i % n].clone());
    }
    for d in 3..n {
        for i in 1..=n {
            let j = (i + d - 1) % n + 1;
            let jm = (i + d - 2) % n + 1;
            let i1 = i % n + 1;
            let a = t.entry(i1, jm).clone();
            let b = t.entry(i, jm);
            let c = t.entry(i1, j);
            if a.is_zero_value() {
                return Err(FriezeError::DivisionByZero(i1, jm));
            }
            let num = b.times(c).minus(&one);
            let val = num.try_div(&a).map_err(|_| FriezeError::DivisionByZero(i1, jm))?;
            t.set(i, j, val);
        }
    }
    Ok(t)
}

/// Frieze table from a zig-zag of entries joining the top and bottom
/// rows, extended by the sideways recurrence (Ptolemy completion with
/// unit sides).
pub fn frieze_from_zigzag<V: ExchangeValue>(z: &Zigzag<V>) -> Result<FriezeTable<V>, FriezeError> {
    let n = z.n();
    let one = z.values()[0].one_like();
    let mut known: BTreeMap<(usize, usize), V> = BTreeMap::new();
    for i in 1..=n {
        let j = i % n + 1;
        known.insert(minmax(i, j), one.clone());
    }
    for (p, v) in z.pairs().iter().zip(z.values()) {
        known.insert(minmax(p.0, p.1), v.clone());
    }
    let full = ptolemy_complete(n, &known)?;
    let mut t = FriezeTable::new(n);
    for ((i, j), v) in full {
        t.set(i, j, v.clone());
        t.set(j, i, v);
    }
    Ok(t)
}

/// Frieze of Laurent polynomials from a weighted triangulation: each
/// entry is the weighted matching sum W_{i,j} of the doubly-deleted
/// incidence graph, divided by the product of all diagonal weights.
pub fn frieze_from_triangulation(
    t: &Triangulation,
    weights: &BTreeMap<(usize, usize), LaurentPoly>,
) -> Result<FriezeTable<LaurentPoly>, FriezeError> {
    let n = t.n();
    if n < 4 {
        return Err(FriezeError::TooSmall(n));
    }
    let g = build_graph(t, weights)?;
    let mut denom = weights
        .values()
        .next()
        .expect("build_graph checked weights")
        .one_like();
    for d in t.diagonal_list() {
        denom = denom.mul(&weights[&d]);
    }
    let mut table = FriezeTable::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let w = g.delete_black(i as u64, j as u64)?.matching_sum()?;
            let m = w.div_exact(&denom)?;
            table.set(i, j, m.clone());
            table.set(j, i, m);
        }
    }
    Ok(table)
}

pub(crate) fn minmax(a: usize, b: usize) -> (usize, usize) {
    if a <= b { (a, b) } else { (b, a) }
}
