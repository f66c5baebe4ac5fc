//! Max-plus analogue of friezes: integral and measured laminations of
//! the n-gon, crossing distances, the tropical frieze relation, and
//! weighted tree metrics.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::json;
use thiserror::Error;

use crate::exact::{ExactError, ExchangeValue, Rational};
use crate::frieze::{ptolemy_complete, FriezeError};
use crate::polygon::Triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropicalError {
    #[error("polygon needs at least 3 gaps, got {0}")]
    TooSmall(usize),
    #[error("gap {0} out of range 1..={1}")]
    GapOutOfRange(usize, usize),
    #[error("arc must join two distinct gaps (got gap {0} twice)")]
    DegenerateArc(usize),
    #[error("arc weights must be positive")]
    BadWeight,
    #[error("tree is not connected or not acyclic")]
    NotATree,
    #[error("leaf list is empty")]
    NoLeaves,
    #[error("leaf id {0} out of range")]
    BadLeaf(usize),
    #[error(transparent)]
    Frieze(#[from] FriezeError),
}

/// Max-plus value: `plus` is max, `times` is +, division is ordinary
/// subtraction (always exact). There is no zero divisor tropically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Tropical(pub Rational);

impl ExchangeValue for Tropical {
    fn one_like(&self) -> Self {
        Tropical(Rational::zero())
    }

    fn plus(&self, rhs: &Self) -> Self {
        Tropical(self.0.clone().max(rhs.0.clone()))
    }

    fn times(&self, rhs: &Self) -> Self {
        Tropical(&self.0 + &rhs.0)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(Tropical(&self.0 - &rhs.0))
    }

    fn is_zero_value(&self) -> bool {
        false
    }
}

/// An arc joining two boundary gaps (gap g is the side between vertex g
/// and g+1), with a positive weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    pub gaps: (usize, usize),
    pub weight: Rational,
}

/// Weighted collection of arcs. Integer weights make it an integral
/// lamination, rational weights a measured one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lamination {
    n: usize,
    arcs: Vec<Arc>,
}

impl Lamination {
    pub fn new(n: usize, arcs: Vec<Arc>) -> Result<Self, TropicalError> {
        if n < 3 {
            return Err(TropicalError::TooSmall(n));
        }
        for a in &arcs {
            for g in [a.gaps.0, a.gaps.1] {
                if g < 1 || g > n {
                    return Err(TropicalError::GapOutOfRange(g, n));
                }
            }
            if a.gaps.0 == a.gaps.1 {
                return Err(TropicalError::DegenerateArc(a.gaps.0));
            }
            if a.weight <= Rational::zero() {
                return Err(TropicalError::BadWeight);
            }
        }
        Ok(Lamination { n, arcs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Sum of weights of arcs separating vertex i from vertex j: an arc
    /// with gaps g1 < g2 separates them iff exactly one lies in
    /// {g1+1, ..., g2}.
    pub fn distance(&self, i: usize, j: usize) -> Rational {
        let mut d = Rational::zero();
        for a in &self.arcs {
            let (g1, g2) = if a.gaps.0 <= a.gaps.1 {
                a.gaps
            } else {
                (a.gaps.1, a.gaps.0)
            };
            let inside = |v: usize| v > g1 && v <= g2;
            if inside(i) != inside(j) {
                d += &a.weight;
            }
        }
        d
    }

    /// The full crossing-distance table.
    pub fn table(&self) -> TropicalTable {
        let mut entries = BTreeMap::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                entries.insert((i, j), self.distance(i, j));
            }
        }
        TropicalTable { n: self.n, entries }
    }
}

impl Serialize for Lamination {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let arcs: Vec<serde_json::Value> = self
            .arcs
            .iter()
            .map(|a| {
                let w = if a.weight.is_integer() {
                    json!(a.weight.to_integer().to_string().parse::<i64>().unwrap_or(0))
                } else {
                    json!(a.weight.to_string())
                };
                json!({"gaps": [a.gaps.0, a.gaps.1], "weight": w})
            })
            .collect();
        json!({"n": self.n, "arcs": arcs}).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Lamination {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct ArcRepr {
            gaps: (usize, usize),
            weight: serde_json::Value,
        }
        #[derive(Deserialize)]
        struct LamRepr {
            n: usize,
            arcs: Vec<ArcRepr>,
        }
        let repr = LamRepr::deserialize(deserializer)?;
        let mut arcs = Vec::with_capacity(repr.arcs.len());
        for a in repr.arcs {
            let weight = match &a.weight {
                serde_json::Value::Number(x) if x.is_i64() => {
                    Rational::from(num_bigint::BigInt::from(x.as_i64().unwrap()))
                }
                serde_json::Value::String(s) => s
                    .parse::<Rational>()
                    .map_err(|_| D::Error::custom("bad arc weight"))?,
                _ => return Err(D::Error::custom("bad arc weight")),
            };
            arcs.push(Arc {
                gaps: a.gaps,
                weight,
            });
        }
        Lamination::new(repr.n, arcs).map_err(D::Error::custom)
    }
}

/// Table of pairwise values d(i,j) = d(j,i), d(i,i) = 0, period n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalTable {
    n: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl TropicalTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> Rational {
        if i == j {
            return Rational::zero();
        }
        let key = (i.min(j), i.max(j));
        self.entries[&key].clone()
    }

    /// Row r of the tropical frieze layout: d(i, i+r) for i = 1..n.
    pub fn row(&self, r: usize) -> Vec<Rational> {
        (1..=self.n)
            .map(|i| self.entry(i, (i + r - 1) % self.n + 1))
            .collect()
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        (1..self.n).map(|r| self.row(r)).collect()
    }

    /// All cyclic quadruples violating the tropical exchange relation
    /// max(d_ij + d_kl, d_jk + d_il) = d_ik + d_jl.
    pub fn ultrametric_violations(&self) -> Vec<(usize, usize, usize, usize)> {
        let mut bad = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                for k in j + 1..=self.n {
                    for l in k + 1..=self.n {
                        let lhs = (self.entry(i, j) + self.entry(k, l))
                            .max(self.entry(j, k) + self.entry(i, l));
                        let rhs = self.entry(i, k) + self.entry(j, l);
                        if lhs != rhs {
                            bad.push((i, j, k, l));
                        }
                    }
                }
            }
        }
        bad
    }

    pub fn scaled(&self, t: &Rational) -> TropicalTable {
        TropicalTable {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (*k, v * t))
                .collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|(&(i, j), v)| json!({"i": i, "j": j, "value": v.to_string()}))
            .collect();
        json!({"n": self.n, "entries": entries})
    }

    /// Staggered ASCII rendering, like the frieze layout.
    pub fn render(&self) -> String {
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            + 2;
        let mut out = String::new();
        for r in 1..self.n {
            let row = self.row(r);
            let mut line = String::new();
            if r % 2 == 0 {
                line.push_str(&" ".repeat(width / 2));
            }
            for _ in 0..2 {
                for v in &row {
                    line.push_str(&format!("{:^width$}", v.to_string(), width = width));
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Complete a table of tropical values from values on the sides and
/// diagonals of a triangulation by max-plus Ptolemy propagation:
/// d(i,k) = max(d(i,j)+d(k,l), d(j,k)+d(i,l)) - d(j,l). The propagation
/// code is the same generic exchange used by the frieze module.
pub fn tropical_complete(
    t: &Triangulation,
    values: &BTreeMap<(usize, usize), Rational>,
) -> Result<TropicalTable, TropicalError> {
    let n = t.n();
    let mut known: BTreeMap<(usize, usize), Tropical> = BTreeMap::new();
    let mut edges = t.sides();
    edges.extend(t.diagonal_list());
    for e in edges {
        let v = values
            .get(&e)
            .ok_or(FriezeError::MissingValue(format!("({},{})", e.0, e.1)))?;
        known.insert(e, Tropical(v.clone()));
    }
    let full = ptolemy_complete(n, &known)?;
    Ok(TropicalTable {
        n,
        entries: full.into_iter().map(|(k, v)| (k, v.0)).collect(),
    })
}

/// Weighted tree with n marked leaf positions (marks may repeat and may
/// sit on internal nodes, matching laminations that do not separate two
/// polygon vertices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafTree {
    pub nodes: usize,
    pub edges: Vec<(usize, usize, Rational)>,
    pub leaves: Vec<usize>,
}

/// Pairwise leaf distances, summing weights along tree paths.
pub fn tree_leaf_distances(tree: &LeafTree) -> Result<TropicalTable, TropicalError> {
    let n = tree.leaves.len();
    if n == 0 {
        return Err(TropicalError::NoLeaves);
    }
    for &l in &tree.leaves {
        if l >= tree.nodes {
            return Err(TropicalError::BadLeaf(l));
        }
    }
    if tree.edges.len() + 1 != tree.nodes {
        return Err(TropicalError::NotATree);
    }
    let mut adj: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); tree.nodes];
    for (a, b, w) in &tree.edges {
        if *a >= tree.nodes || *b >= tree.nodes || w < &Rational::zero() {
            return Err(TropicalError::NotATree);
        }
        adj[*a].push((*b, w.clone()));
        adj[*b].push((*a, w.clone()));
    }
    // Distances from each node by BFS (paths in a tree are unique).
    let dist_from = |s: usize| -> Result<Vec<Rational>, TropicalError> {
        let mut dist: Vec<Option<Rational>> = vec![None; tree.nodes];
        dist[s] = Some(Rational::zero());
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].clone().unwrap();
            for (w, wt) in &adj[v] {
                if dist[*w].is_none() {
                    dist[*w] = Some(&dv + wt);
                    queue.push_back(*w);
                }
            }
        }
        dist.into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or(TropicalError::NotATree)
    };
    let mut entries = BTreeMap::new();
    for i in 1..=n {
        let d = dist_from(tree.leaves[i - 1])?;
        for j in i + 1..=n {
            entries.insert((i, j), d[tree.leaves[j - 1]].clone());
        }
    }
    Ok(TropicalTable { n, entries })
}

/// The hexagon lamination of the paper's tropical example: corner arcs
/// at vertices 1 and 2, and two long arcs from gap 1 and gap 3 down to
/// gap 5, all with unit weight. (The figure also shows a semicircle
/// touching only gap 4; it separates no pair of vertices and is omitted
/// by the separating-arc data model.)
pub fn figure18_lamination() -> Lamination {
    let one = Rational::from(num_bigint::BigInt::from(1));
    Lamination::new(
        6,
        vec![
            Arc { gaps: (6, 1), weight: one.clone() },
            Arc { gaps: (1, 2), weight: one.clone() },
            Arc { gaps: (1, 5), weight: one.clone() },
            Arc { gaps: (3, 5), weight: one },
        ],
    )
    .expect("fixture is valid")
}
