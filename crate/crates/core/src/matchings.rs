//! Weighted bipartite graphs from triangulations and exact perfect
//! matching sums.
//!
//! Matching sums are computed by recursive branching on a minimum-degree
//! white vertex with memoization on the remaining-vertex bitmasks. Desk
//! scale graphs stay far below the 64-vertex-per-color cap, where
//! exactness beats asymptotics.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::exact::LaurentPoly;
use crate::polygon::Triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {black} black and {white} white vertices; matching sums need equal counts")]
    Unbalanced { black: usize, white: usize },
    #[error("vertex {0} is not a black vertex of this graph")]
    NotBlack(u64),
    #[error("kuo_check needs two more black than white vertices, got {black} black / {white} white")]
    NotCondensable { black: usize, white: usize },
    #[error("vertex {0} has degree {1}, expected 2")]
    WrongDegree(u64, usize),
    #[error("contraction at {0} requires two distinct unit-weight edges")]
    BadContraction(u64),
    #[error("missing weight for edge ({0},{1})")]
    MissingWeight(usize, usize),
    #[error("graph too large: at most 64 vertices per color")]
    TooLarge,
    #[error("directed graph has a cycle")]
    Cyclic,
    #[error("need equally many sources and targets")]
    SourceTargetMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchEdge {
    pub black: u64,
    pub white: u64,
    pub weight: LaurentPoly,
    pub mult: u64,
}

/// Bipartite multigraph with Laurent-polynomial edge weights. Parallel
/// edges of equal weight are stored once with a multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchGraph {
    vars: Vec<String>,
    blacks: Vec<u64>,
    whites: Vec<u64>,
    edges: Vec<MatchEdge>,
}

impl MatchGraph {
    pub fn new(vars: &[&str], blacks: Vec<u64>, whites: Vec<u64>) -> Self {
        MatchGraph {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            blacks,
            whites,
            edges: Vec::new(),
        }
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn blacks(&self) -> &[u64] {
        &self.blacks
    }

    pub fn whites(&self) -> &[u64] {
        &self.whites
    }

    pub fn edges(&self) -> &[MatchEdge] {
        &self.edges
    }

    pub fn add_edge(&mut self, black: u64, white: u64, weight: LaurentPoly, mult: u64) {
        debug_assert!(self.blacks.contains(&black));
        debug_assert!(self.whites.contains(&white));
        debug_assert!(!weight.is_zero());
        if let Some(e) = self
            .edges
            .iter_mut()
            .find(|e| e.black == black && e.white == white && e.weight == weight)
        {
            e.mult += mult;
            return;
        }
        self.edges.push(MatchEdge {
            black,
            white,
            weight,
            mult,
        });
    }

    pub fn degree(&self, v: u64) -> usize {
        self.edges
            .iter()
            .filter(|e| e.black == v || e.white == v)
            .map(|e| e.mult as usize)
            .sum()
    }

    /// The graph with black vertices i and j (and incident edges)
    /// removed. Symmetric in i and j.
    pub fn delete_black(&self, i: u64, j: u64) -> Result<MatchGraph, GraphError> {
        for v in [i, j] {
            if !self.blacks.contains(&v) {
                return Err(GraphError::NotBlack(v));
            }
        }
        Ok(MatchGraph {
            vars: self.vars.clone(),
            blacks: self
                .blacks
                .iter()
                .copied()
                .filter(|&v| v != i && v != j)
                .collect(),
            whites: self.whites.clone(),
            edges: self
                .edges
                .iter()
                .filter(|e| e.black != i && e.black != j)
                .cloned()
                .collect(),
        })
    }

    /// Exact weighted perfect-matching sum; zero when no perfect
    /// matching exists. With all weights 1 this is the matching count.
    pub fn matching_sum(&self) -> Result<LaurentPoly, GraphError> {
        if self.blacks.len() != self.whites.len() {
            return Err(GraphError::Unbalanced {
                black: self.blacks.len(),
                white: self.whites.len(),
            });
        }
        if self.blacks.len() > 64 {
            return Err(GraphError::TooLarge);
        }
        let vars = self.vars();
        let zero = LaurentPoly::zero(&vars);
        let one = LaurentPoly::one(&vars);
        if self.whites.is_empty() {
            return Ok(one);
        }

        let bidx: HashMap<u64, usize> =
            self.blacks.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let widx: HashMap<u64, usize> =
            self.whites.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        // (white, black, effective weight) with multiplicity folded in.
        let edges: Vec<(usize, usize, LaurentPoly)> = self
            .edges
            .iter()
            .map(|e| {
                let w = if e.mult == 1 {
                    e.weight.clone()
                } else {
                    e.weight
                        .mul(&LaurentPoly::constant(&vars, e.mult as i64))
                };
                (widx[&e.white], bidx[&e.black], w)
            })
            .collect();
        let mut white_adj: Vec<Vec<usize>> = vec![Vec::new(); self.whites.len()];
        for (k, &(w, _, _)) in edges.iter().enumerate() {
            white_adj[w].push(k);
        }

        struct Ctx<'a> {
            edges: &'a [(usize, usize, LaurentPoly)],
            white_adj: &'a [Vec<usize>],
            memo: HashMap<(u64, u64), LaurentPoly>,
            zero: LaurentPoly,
            one: LaurentPoly,
        }

        fn solve(ctx: &mut Ctx, wmask: u64, bmask: u64) -> LaurentPoly {
            if wmask == 0 {
                return ctx.one.clone();
            }
            if let Some(v) = ctx.memo.get(&(wmask, bmask)) {
                return v.clone();
            }
            // Branch on an alive white vertex of minimum alive degree.
            let mut best: Option<(usize, usize)> = None;
            for w in 0..ctx.white_adj.len() {
                if wmask & (1 << w) == 0 {
                    continue;
                }
                let deg = ctx.white_adj[w]
                    .iter()
                    .filter(|&&k| bmask & (1 << ctx.edges[k].1) != 0)
                    .count();
                if best.map(|(_, d)| deg < d).unwrap_or(true) {
                    best = Some((w, deg));
                }
                if deg == 0 {
                    break;
                }
            }
            let (w, deg) = best.expect("nonempty white mask");
            let mut acc = ctx.zero.clone();
            if deg > 0 {
                let ks = ctx.white_adj[w].clone();
                for k in ks {
                    let b = ctx.edges[k].1;
                    let bbit = 1u64 << b;
                    if bmask & bbit == 0 {
                        continue;
                    }
                    let sub = solve(ctx, wmask & !(1 << w), bmask & !bbit);
                    if !sub.is_zero() {
                        acc = acc.add(&ctx.edges[k].2.mul(&sub));
                    }
                }
            }
            ctx.memo.insert((wmask, bmask), acc.clone());
            acc
        }

        let full_w = mask_of(self.whites.len());
        let full_b = mask_of(self.blacks.len());
        let mut ctx = Ctx {
            edges: &edges,
            white_adj: &white_adj,
            memo: HashMap::new(),
            zero,
            one,
        };
        Ok(solve(&mut ctx, full_w, full_b))
    }

    /// Kuo's condensation identity for black vertices a, b, c, d in
    /// cyclic order on a face: m(a,c)m(b,d) = m(a,b)m(c,d) + m(a,d)m(b,c).
    /// Cyclicity is caller-asserted; the graph must have exactly two more
    /// black than white vertices.
    pub fn kuo_check(&self, a: u64, b: u64, c: u64, d: u64) -> Result<bool, GraphError> {
        if self.blacks.len() != self.whites.len() + 2 {
            return Err(GraphError::NotCondensable {
                black: self.blacks.len(),
                white: self.whites.len(),
            });
        }
        let m = |x: u64, y: u64| -> Result<LaurentPoly, GraphError> {
            self.delete_black(x, y)?.matching_sum()
        };
        let lhs = m(a, c)?.mul(&m(b, d)?);
        let rhs = m(a, b)?.mul(&m(c, d)?).add(&m(a, d)?.mul(&m(b, c)?));
        Ok(lhs == rhs)
    }

    /// Delete a degree-2 vertex and identify its two neighbors. Matching
    /// counts are preserved; both incident edges must have unit weight
    /// and multiplicity.
    pub fn contract_degree2(&self, v: u64) -> Result<MatchGraph, GraphError> {
        let deg = self.degree(v);
        if deg != 2 {
            return Err(GraphError::WrongDegree(v, deg));
        }
        let incident: Vec<&MatchEdge> = self
            .edges
            .iter()
            .filter(|e| e.black == v || e.white == v)
            .collect();
        let unit = |e: &MatchEdge| e.mult == 1 && e.weight.is_one();
        if incident.len() != 2 || !incident.iter().all(|e| unit(e)) {
            return Err(GraphError::BadContraction(v));
        }
        let v_is_black = self.blacks.contains(&v);
        let nbr = |e: &MatchEdge| if v_is_black { e.white } else { e.black };
        let (w1, w2) = (nbr(incident[0]), nbr(incident[1]));
        if w1 == w2 {
            return Err(GraphError::BadContraction(v));
        }
        let merged = w1.min(w2);
        let gone = w1.max(w2);

        let keep = |list: &[u64], drop: u64| -> Vec<u64> {
            list.iter().copied().filter(|&x| x != drop).collect()
        };
        let mut out = MatchGraph {
            vars: self.vars.clone(),
            blacks: if v_is_black {
                keep(&self.blacks, v)
            } else {
                keep(&self.blacks, gone)
            },
            whites: if v_is_black {
                keep(&self.whites, gone)
            } else {
                keep(&self.whites, v)
            },
            edges: Vec::new(),
        };
        for e in &self.edges {
            if e.black == v || e.white == v {
                continue;
            }
            let (mut black, mut white) = (e.black, e.white);
            if v_is_black {
                if white == gone {
                    white = merged;
                }
            } else if black == gone {
                black = merged;
            }
            out.add_edge(black, white, e.weight.clone(), e.mult);
        }
        Ok(out)
    }

    /// Contract degree-2 vertices (smallest id first) until none with
    /// unit-weight edge pairs remain.
    pub fn contract_all_degree2(&self) -> MatchGraph {
        let mut g = self.clone();
        loop {
            let mut ids: Vec<u64> = g.blacks.iter().chain(&g.whites).copied().collect();
            ids.sort_unstable();
            let next = ids.into_iter().find(|&v| g.contract_degree2(v).is_ok());
            match next {
                Some(v) => g = g.contract_degree2(v).expect("checked"),
                None => return g,
            }
        }
    }

    /// JSON dump: vertex lists plus edge records.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("graph serializes")
    }
}

fn mask_of(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// White vertex ids are offset by `WHITE_BASE` to keep them disjoint from
/// the 1..n black ids of polygon graphs.
pub const WHITE_BASE: u64 = 1000;

/// Build the bipartite incidence graph G(T): one black vertex per polygon
/// vertex, one white vertex per triangle, an edge when the vertex lies on
/// the triangle, weighted by the side or diagonal of the triangle
/// opposite the black vertex.
pub fn build_graph(
    t: &Triangulation,
    weights: &BTreeMap<(usize, usize), LaurentPoly>,
) -> Result<MatchGraph, GraphError> {
    let mut all_edges: Vec<(usize, usize)> = t.sides();
    all_edges.extend(t.diagonal_list());
    for &(a, b) in &all_edges {
        if !weights.contains_key(&(a, b)) {
            return Err(GraphError::MissingWeight(a, b));
        }
    }
    let vars_owned: Vec<String> = weights
        .values()
        .next()
        .map(|p| p.vars().to_vec())
        .unwrap_or_default();
    let vars: Vec<&str> = vars_owned.iter().map(|s| s.as_str()).collect();

    let tris = t.triangles();
    let blacks: Vec<u64> = (1..=t.n() as u64).collect();
    let whites: Vec<u64> = (0..tris.len() as u64).map(|i| WHITE_BASE + i).collect();
    let mut g = MatchGraph::new(&vars, blacks, whites);
    for (w, tri) in tris.iter().enumerate() {
        for k in 0..3 {
            let v = tri[k];
            let (p, q) = (tri[(k + 1) % 3], tri[(k + 2) % 3]);
            let key = (p.min(q), p.max(q));
            let weight = weights[&key].clone();
            g.add_edge(v as u64, WHITE_BASE + w as u64, weight, 1);
        }
    }
    Ok(g)
}

/// Unit weights on every side and diagonal: the unweighted G(T).
pub fn unit_weights(t: &Triangulation) -> BTreeMap<(usize, usize), LaurentPoly> {
    let mut m = BTreeMap::new();
    for s in t.sides() {
        m.insert(s, LaurentPoly::one(&[]));
    }
    for d in t.diagonal_list() {
        m.insert(d, LaurentPoly::one(&[]));
    }
    m
}

/// Sides weight 1, diagonals assigned the formal variables `names` in the
/// diagonals' sorted order.
pub fn formal_diagonal_weights(
    t: &Triangulation,
    names: &[&str],
) -> BTreeMap<(usize, usize), LaurentPoly> {
    let diags = t.diagonal_list();
    assert_eq!(diags.len(), names.len(), "one name per diagonal");
    let mut m = BTreeMap::new();
    for s in t.sides() {
        m.insert(s, LaurentPoly::one(names));
    }
    for (i, d) in diags.into_iter().enumerate() {
        m.insert(d, LaurentPoly::variable(names, i));
    }
    m
}

/// Fully formal weights: one variable per side and diagonal, named
/// `sA_B` / `dA_B`, sides first.
pub fn fully_formal_weights(t: &Triangulation) -> BTreeMap<(usize, usize), LaurentPoly> {
    let mut edges: Vec<(bool, (usize, usize))> =
        t.sides().into_iter().map(|e| (true, e)).collect();
    edges.extend(t.diagonal_list().into_iter().map(|e| (false, e)));
    let names_owned: Vec<String> = edges
        .iter()
        .map(|(is_side, (a, b))| {
            if *is_side {
                format!("s{a}_{b}")
            } else {
                format!("d{a}_{b}")
            }
        })
        .collect();
    let names: Vec<&str> = names_owned.iter().map(|s| s.as_str()).collect();
    edges
        .iter()
        .enumerate()
        .map(|(i, (_, e))| (*e, LaurentPoly::variable(&names, i)))
        .collect()
}

/// Directed acyclic multigraph with designated sources and targets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dag {
    pub vertices: usize,
    pub arcs: Vec<(usize, usize)>,
    pub sources: Vec<usize>,
    pub targets: Vec<usize>,
}

impl Dag {
    fn check(&self) -> Result<(), GraphError> {
        if self.sources.len() != self.targets.len() {
            return Err(GraphError::SourceTargetMismatch);
        }
        // Kahn toposort to verify acyclicity.
        let mut indeg = vec![0usize; self.vertices];
        for &(_, w) in &self.arcs {
            indeg[w] += 1;
        }
        let mut stack: Vec<usize> = (0..self.vertices).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(a, b) in &self.arcs {
                if a == v {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        stack.push(b);
                    }
                }
            }
        }
        if seen != self.vertices {
            return Err(GraphError::Cyclic);
        }
        Ok(())
    }
}

/// The doubled graph of the path-systems-to-matchings correspondence:
/// vertices (v,1) and (v,2) joined for every v, arcs v->w becoming edges
/// (v,2)-(w,1), then (s,1) and (t,2) deleted for every source s and
/// target t. Perfect matchings of the result are equinumerous with
/// systems of m pairwise vertex-disjoint source-to-target paths (for a
/// single source and target, disjointness is vacuous).
pub fn dag_to_matching_graph(d: &Dag) -> Result<MatchGraph, GraphError> {
    d.check()?;
    let copy1 = |v: usize| 2 * v as u64;
    let copy2 = |v: usize| 2 * v as u64 + 1;
    let blacks: Vec<u64> = (0..d.vertices)
        .filter(|v| !d.sources.contains(v))
        .map(copy1)
        .collect();
    let whites: Vec<u64> = (0..d.vertices)
        .filter(|v| !d.targets.contains(v))
        .map(copy2)
        .collect();
    let mut g = MatchGraph::new(&[], blacks, whites);
    let one = LaurentPoly::one(&[]);
    for v in 0..d.vertices {
        if !d.sources.contains(&v) && !d.targets.contains(&v) {
            g.add_edge(copy1(v), copy2(v), one.clone(), 1);
        }
    }
    for &(v, w) in &d.arcs {
        if !d.targets.contains(&v) && !d.sources.contains(&w) {
            g.add_edge(copy1(w), copy2(v), one.clone(), 1);
        }
    }
    Ok(g)
}
