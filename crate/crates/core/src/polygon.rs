//! Combinatorial triangulations of a convex n-gon, their enumeration,
//! flips, ear counts, dual trees, and triangle paths.
//!
//! Vertices are labeled 1..n cyclically; all label arithmetic is mod n
//! mapped back to 1..n. Triangulations are purely combinatorial: no
//! coordinates anywhere.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooSmall(usize),
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),
    #[error("({0},{1}) is a side, not a diagonal")]
    NotADiagonal(usize, usize),
    #[error("diagonals ({0},{1}) and ({2},{3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("expected {expected} diagonals for a triangulation of the {n}-gon, got {got}")]
    WrongDiagonalCount { n: usize, expected: usize, got: usize },
    #[error("({0},{1}) is not a diagonal of this triangulation")]
    MissingDiagonal(usize, usize),
    #[error("triangle path endpoints must differ")]
    EqualEndpoints,
    #[error("duplicate diagonal ({0},{1})")]
    Duplicate(usize, usize),
}

/// Unordered vertex pair, stored sorted.
pub type Diagonal = (usize, usize);

fn sorted(a: usize, b: usize) -> Diagonal {
    if a <= b { (a, b) } else { (b, a) }
}

/// Do diagonals (a,b) and (c,d) cross in the interior? With sorted pairs
/// this is strict interleaving.
fn crosses(x: Diagonal, y: Diagonal) -> bool {
    let ((a, b), (c, d)) = (x, y);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// A maximal set of pairwise non-crossing diagonals of the labeled n-gon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    n: usize,
    diagonals: BTreeSet<Diagonal>,
}

impl Triangulation {
    pub fn new(n: usize, diagonals: &[(usize, usize)]) -> Result<Self, PolygonError> {
        if n < 3 {
            return Err(PolygonError::TooSmall(n));
        }
        let mut set = BTreeSet::new();
        for &(a, b) in diagonals {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(PolygonError::VertexOutOfRange(v, n));
                }
            }
            let d = sorted(a, b);
            if d.0 == d.1 || d.1 - d.0 == 1 || (d.0 == 1 && d.1 == n) {
                return Err(PolygonError::NotADiagonal(a, b));
            }
            if !set.insert(d) {
                return Err(PolygonError::Duplicate(d.0, d.1));
            }
        }
        let list: Vec<_> = set.iter().copied().collect();
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                if crosses(list[i], list[j]) {
                    let (x, y) = (list[i], list[j]);
                    return Err(PolygonError::Crossing(x.0, x.1, y.0, y.1));
                }
            }
        }
        if set.len() != n - 3 {
            return Err(PolygonError::WrongDiagonalCount {
                n,
                expected: n - 3,
                got: set.len(),
            });
        }
        Ok(Triangulation { n, diagonals: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn diagonals(&self) -> impl Iterator<Item = Diagonal> + '_ {
        self.diagonals.iter().copied()
    }

    pub fn diagonal_list(&self) -> Vec<Diagonal> {
        self.diagonals.iter().copied().collect()
    }

    /// Sides of the polygon as sorted pairs: (1,2), ..., (n-1,n), (1,n).
    pub fn sides(&self) -> Vec<Diagonal> {
        let mut out: Vec<Diagonal> = (1..self.n).map(|i| (i, i + 1)).collect();
        out.push((1, self.n));
        out
    }

    pub fn has_diagonal(&self, a: usize, b: usize) -> bool {
        self.diagonals.contains(&sorted(a, b))
    }

    /// True when (a,b) is a side or a diagonal of the triangulation.
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = sorted(a, b);
        b - a == 1 || (a == 1 && b == self.n) || self.diagonals.contains(&(a, b))
    }

    /// The n-2 triangular faces, each sorted, listed in lexicographic
    /// order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::with_capacity(self.n - 2);
        self.split(1, self.n, &mut out);
        out.sort();
        out
    }

    // Faces of the sub-polygon a, a+1, ..., b, where (a,b) is an edge.
    fn split(&self, a: usize, b: usize, out: &mut Vec<[usize; 3]>) {
        if b - a < 2 {
            return;
        }
        let apex = (a + 1..b)
            .find(|&m| self.has_edge(a, m) && self.has_edge(m, b))
            .expect("valid triangulation always has an apex");
        out.push([a, apex, b]);
        self.split(a, apex, out);
        self.split(apex, b, out);
    }

    /// `a_k` = number of triangles incident with vertex k, for k = 1..n.
    pub fn ear_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n + 1];
        for t in self.triangles() {
            for v in t {
                counts[v] += 1;
            }
        }
        counts.remove(0);
        counts
    }

    /// Dual tree: one node per triangle, edges between triangles sharing
    /// a diagonal. Returns adjacency lists indexed like `triangles()`.
    pub fn dual_tree(&self) -> Vec<Vec<usize>> {
        let tris = self.triangles();
        let mut by_diag: BTreeMap<Diagonal, Vec<usize>> = BTreeMap::new();
        for (idx, t) in tris.iter().enumerate() {
            for (u, v) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
                if self.has_diagonal(u, v) {
                    by_diag.entry((u, v)).or_default().push(idx);
                }
            }
        }
        let mut adj = vec![Vec::new(); tris.len()];
        for ids in by_diag.values() {
            debug_assert_eq!(ids.len(), 2);
            adj[ids[0]].push(ids[1]);
            adj[ids[1]].push(ids[0]);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// True iff the dual tree is a path.
    pub fn is_zigzag_dual(&self) -> bool {
        self.dual_tree().iter().all(|nbrs| nbrs.len() <= 2)
    }

    /// Replace diagonal `d` by the other diagonal of its quadrilateral.
    pub fn diagonal_flip(&self, d: (usize, usize)) -> Result<Triangulation, PolygonError> {
        let d = sorted(d.0, d.1);
        if !self.diagonals.contains(&d) {
            return Err(PolygonError::MissingDiagonal(d.0, d.1));
        }
        let tris = self.triangles();
        let flank: Vec<&[usize; 3]> = tris
            .iter()
            .filter(|t| t.contains(&d.0) && t.contains(&d.1))
            .collect();
        debug_assert_eq!(flank.len(), 2);
        let apex = |t: &[usize; 3]| *t.iter().find(|&&v| v != d.0 && v != d.1).unwrap();
        let new_d = sorted(apex(flank[0]), apex(flank[1]));
        let mut diags = self.diagonals.clone();
        diags.remove(&d);
        diags.insert(new_d);
        Ok(Triangulation {
            n: self.n,
            diagonals: diags,
        })
    }

    /// The path of triangles joining vertices i and j: the unique minimal
    /// dual-tree path from a triangle incident with i to a triangle
    /// incident with j. When i and j share triangles, the path is exactly
    /// those shared triangles (one for a side, two for a diagonal).
    pub fn triangle_path(&self, i: usize, j: usize) -> Result<Vec<[usize; 3]>, PolygonError> {
        if i == j {
            return Err(PolygonError::EqualEndpoints);
        }
        for v in [i, j] {
            if v < 1 || v > self.n {
                return Err(PolygonError::VertexOutOfRange(v, self.n));
            }
        }
        let tris = self.triangles();
        let at_i: BTreeSet<usize> = (0..tris.len()).filter(|&t| tris[t].contains(&i)).collect();
        let at_j: BTreeSet<usize> = (0..tris.len()).filter(|&t| tris[t].contains(&j)).collect();

        let shared: Vec<usize> = at_i.intersection(&at_j).copied().collect();
        if !shared.is_empty() {
            // Order the flanking pair so that the triangle whose apex lies
            // in the cyclic interval (i, j) comes first; this makes
            // triangle_path(j, i) the exact reverse.
            let mut ordered = shared.clone();
            if ordered.len() == 2 {
                let in_interval = |v: usize| -> bool {
                    // walk i+1, i+2, ... until j
                    let mut w = i % self.n + 1;
                    while w != j {
                        if w == v {
                            return true;
                        }
                        w = w % self.n + 1;
                    }
                    false
                };
                let apex = |t: usize| {
                    *tris[t]
                        .iter()
                        .find(|&&v| v != i && v != j)
                        .expect("flanking triangle has a third vertex")
                };
                if !in_interval(apex(ordered[0])) {
                    ordered.reverse();
                }
            }
            return Ok(ordered.into_iter().map(|t| tris[t]).collect());
        }

        // Multi-source BFS in the dual tree; the minimal path between the
        // two (subtree) sets is unique.
        let adj = self.dual_tree();
        let mut prev: Vec<Option<usize>> = vec![None; tris.len()];
        let mut seen = vec![false; tris.len()];
        let mut queue = VecDeque::new();
        for &s in &at_i {
            seen[s] = true;
            queue.push_back(s);
        }
        while let Some(t) = queue.pop_front() {
            if at_j.contains(&t) {
                let mut path = vec![t];
                let mut cur = t;
                while let Some(p) = prev[cur] {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return Ok(path.into_iter().map(|t| tris[t]).collect());
            }
            for &nb in &adj[t] {
                if !seen[nb] {
                    seen[nb] = true;
                    prev[nb] = Some(t);
                    queue.push_back(nb);
                }
            }
        }
        unreachable!("dual tree is connected")
    }
}

/// All triangulations of the n-gon, in lexicographic order of their
/// sorted diagonal lists. There are Catalan(n-2) of them.
pub fn enumerate_triangulations(n: usize) -> Result<Vec<Triangulation>, PolygonError> {
    if n < 3 {
        return Err(PolygonError::TooSmall(n));
    }
    // For the sub-polygon lo..hi (with (lo,hi) an edge), pick the apex of
    // the triangle on (lo,hi) and recurse on both sides.
    fn gen(lo: usize, hi: usize) -> Vec<Vec<Diagonal>> {
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for apex in lo + 1..hi {
            let lefts = gen(lo, apex);
            let rights = gen(apex, hi);
            for l in &lefts {
                for r in &rights {
                    let mut ds = Vec::new();
                    if apex - lo > 1 {
                        ds.push((lo, apex));
                    }
                    if hi - apex > 1 {
                        ds.push((apex, hi));
                    }
                    ds.extend_from_slice(l);
                    ds.extend_from_slice(r);
                    out.push(ds);
                }
            }
        }
        out
    }
    let mut sets: Vec<Vec<Diagonal>> = gen(1, n)
        .into_iter()
        .map(|mut ds| {
            ds.sort_unstable();
            ds
        })
        .collect();
    sets.sort();
    sets.dedup();
    sets.into_iter()
        .map(|ds| Triangulation::new(n, &ds))
        .collect()
}

/// Catalan number C_k, exactly.
pub fn catalan(k: usize) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    let mut c = vec![BigInt::from(0); k + 1];
    c[0] = BigInt::from(1);
    for i in 1..=k {
        let mut acc = BigInt::from(0);
        for j in 0..i {
            acc += &c[j] * &c[i - 1 - j];
        }
        c[i] = acc;
    }
    c[k].clone()
}
