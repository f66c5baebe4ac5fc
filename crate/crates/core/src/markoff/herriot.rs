//! Triangulation distances in the 45-45-90 reflection tiling: squares
//! with both diagonals, in doubled coordinates so that all intersection
//! arithmetic is integral. Corners sit at even-even points (degree 8),
//! square centers at odd-odd points (degree 4).

use num_bigint::BigInt;
use num_rational::Ratio;

use crate::exact::LaurentPoly;
use crate::matchings::MatchGraph;

use super::MarkoffError;

type Q = Ratio<i64>;

/// A lattice vertex: both coordinates even (a corner) or both odd (a
/// center).
pub fn is_vertex(p: (i64, i64)) -> bool {
    (p.0.rem_euclid(2) == 0 && p.1.rem_euclid(2) == 0)
        || (p.0.rem_euclid(2) == 1 && p.1.rem_euclid(2) == 1)
}

/// The four points O, A, B, C of the paper's 45-45-90 configuration, in
/// doubled coordinates: d(A,B) = d(O,A) = 1, d(B,C) = 2, d(O,B) =
/// d(A,C) = 3, d(O,C) = 11.
pub const HERRIOT_FIGURE22: [(i64, i64); 4] = [(0, 0), (2, 0), (3, 1), (5, 1)];

/// One triangle of the tiling: the quarter of the square with corner
/// `cell` (doubled coordinates) on the given side of its center.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quarter {
    South,
    East,
    North,
    West,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Tri {
    cell: (i64, i64), // lower-left corner, both even
    quarter: Quarter,
}

impl Tri {
    fn vertices(&self) -> [(i64, i64); 3] {
        let (a, b) = self.cell;
        let center = (a + 1, b + 1);
        match self.quarter {
            Quarter::South => [(a, b), (a + 2, b), center],
            Quarter::East => [(a + 2, b), (a + 2, b + 2), center],
            Quarter::North => [(a, b + 2), (a + 2, b + 2), center],
            Quarter::West => [(a, b), (a, b + 2), center],
        }
    }
}

fn crossings_into(times: &mut Vec<Q>, from: i64, delta: i64, parity_step: i64) {
    // Lines at values congruent to 0 mod parity_step, crossed strictly
    // inside the segment.
    if delta == 0 {
        return;
    }
    let to = from + delta;
    let (lo, hi) = if delta > 0 { (from, to) } else { (to, from) };
    let mut k = (lo.div_euclid(parity_step)) * parity_step;
    while k <= hi {
        if k > lo && k < hi {
            times.push(Q::new(k - from, delta));
        }
        k += parity_step;
    }
}

/// Triangulation distance between two vertices of the 45-45-90 tiling:
/// the matching count of the strip of triangles crossed by the open
/// segment, endpoints deleted. Vertices joined by a single lattice edge
/// are at distance 1 (empty strip); segments through an interior vertex
/// are rejected.
pub fn herriot_distance(a: (i64, i64), b: (i64, i64)) -> Result<BigInt, MarkoffError> {
    for p in [a, b] {
        if !is_vertex(p) {
            return Err(MarkoffError::NotAVertex(p.0, p.1));
        }
    }
    if a == b {
        return Err(MarkoffError::Degenerate);
    }
    let d = (b.0 - a.0, b.1 - a.1);
    // Interior lattice vertices on the segment.
    let g = num_integer::gcd(d.0.abs(), d.1.abs());
    for k in 1..g {
        let p = (a.0 + k * d.0 / g, a.1 + k * d.1 / g);
        if is_vertex(p) {
            return Err(MarkoffError::ThroughVertex(a.0, a.1, b.0, b.1));
        }
    }

    // Crossing times with the four edge-line families: x even, y even,
    // x-y even, x+y even.
    let mut times: Vec<Q> = Vec::new();
    crossings_into(&mut times, a.0, d.0, 2);
    crossings_into(&mut times, a.1, d.1, 2);
    crossings_into(&mut times, a.0 - a.1, d.0 - d.1, 2);
    crossings_into(&mut times, a.0 + a.1, d.0 + d.1, 2);
    times.push(Q::new(0, 1));
    times.push(Q::new(1, 1));
    times.sort_unstable();
    times.dedup();

    let mut triangles: Vec<Tri> = Vec::new();
    for w in times.windows(2) {
        let mid = (w[0] + w[1]) / 2;
        let x = Q::from_integer(a.0) + mid * d.0;
        let y = Q::from_integer(a.1) + mid * d.1;
        let cx = 2 * (x / 2).floor().to_integer();
        let cy = 2 * (y / 2).floor().to_integer();
        let s1 = (x - y) - Q::from_integer(cx - cy); // main diagonal side
        let s2 = (x + y) - Q::from_integer(cx + cy + 2); // anti diagonal side
        let quarter = match (s1 > Q::from_integer(0), s2 > Q::from_integer(0)) {
            (true, false) => Quarter::South,
            (true, true) => Quarter::East,
            (false, true) => Quarter::North,
            (false, false) => Quarter::West,
        };
        let tri = Tri {
            cell: (cx, cy),
            quarter,
        };
        if triangles.last() != Some(&tri) {
            triangles.push(tri);
        }
    }

    // Bipartite incidence graph of the strip, endpoints deleted.
    let mut verts = std::collections::BTreeSet::new();
    for t in &triangles {
        for v in t.vertices() {
            verts.insert(v);
        }
    }
    let id = |p: (i64, i64)| -> u64 { (((p.0 + (1 << 20)) as u64) << 24) | ((p.1 + (1 << 20)) as u64) };
    let blacks: Vec<u64> = verts
        .iter()
        .filter(|&&v| v != a && v != b)
        .map(|&v| id(v))
        .collect();
    let whites: Vec<u64> = (0..triangles.len() as u64).collect();
    let mut g = MatchGraph::new(&[], blacks, whites);
    let one = LaurentPoly::one(&[]);
    for (w, t) in triangles.iter().enumerate() {
        for v in t.vertices() {
            if v != a && v != b {
                g.add_edge(id(v), w as u64, one.clone(), 1);
            }
        }
    }
    Ok(g
        .matching_sum()?
        .as_constant()
        .expect("unit weights give a constant"))
}

/// Degree of a vertex in the tiling: corners 8, centers 4.
pub fn vertex_degree(p: (i64, i64)) -> Result<u32, MarkoffError> {
    if !is_vertex(p) {
        return Err(MarkoffError::NotAVertex(p.0, p.1));
    }
    Ok(if p.0.rem_euclid(2) == 0 { 8 } else { 4 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: (i64, i64), b: (i64, i64)) -> i64 {
        i64::try_from(herriot_distance(a, b).unwrap()).unwrap()
    }

    #[test]
    fn figure22_distances() {
        let [o, a, b, c] = HERRIOT_FIGURE22;
        assert_eq!(d(a, b), 1);
        assert_eq!(d(o, a), 1);
        assert_eq!(d(b, c), 2);
        assert_eq!(d(o, b), 3);
        assert_eq!(d(a, c), 3);
        assert_eq!(d(o, c), 11);
        // Symmetry of the distance.
        assert_eq!(d(c, o), 11);
    }

    #[test]
    fn figure22_identities() {
        // 11^2 + 3^2 + 2*1^2 = 4*11*3*1 and 2*11^2 + 2*3^2 + 2^2 =
        // 4*11*3*2, the two quoted solution triples.
        assert_eq!(11 * 11 + 3 * 3 + 2 * 1 * 1, 4 * 11 * 3 * 1);
        assert_eq!(2 * 11 * 11 + 2 * 3 * 3 + 2 * 2, 4 * 11 * 3 * 2);
        // And the parallelogram relation d(B,C) = 2 d(O,A) on the same
        // configuration (O, A corners; B, C centers).
        let [o, a, b, c] = HERRIOT_FIGURE22;
        assert_eq!(vertex_degree(o).unwrap(), 8);
        assert_eq!(vertex_degree(a).unwrap(), 8);
        assert_eq!(vertex_degree(b).unwrap(), 4);
        assert_eq!(vertex_degree(c).unwrap(), 4);
        assert_eq!(d(b, c), 2 * d(o, a));
    }

    #[test]
    fn herriot_equation_on_fundamental_triangles() {
        // For a fundamental triangle, the distances satisfy one of the
        // two ternary cubics according to the degree pattern: the side
        // joining the two like-degree vertices takes the lone
        // coefficient. Checked on the faces of the Figure 22 family.
        let [o, a, b, c] = HERRIOT_FIGURE22;
        // Triangle OAB: degrees (8,8,4).
        let (x, y, z) = (d(o, a), d(o, b), d(a, b)); // x joins the 8s
        assert_eq!(2 * x * x + y * y + z * z, 4 * x * y * z);
        // Triangle ABC: degrees (8,4,4): side BC joins the 4s.
        let (x, y, z) = (d(b, c), d(a, b), d(a, c));
        assert_eq!(x * x + 2 * y * y + 2 * z * z, 4 * x * y * z);
        // Triangle OBC: degrees (8,4,4).
        let (x, y, z) = (d(b, c), d(o, b), d(o, c));
        assert_eq!(x * x + 2 * y * y + 2 * z * z, 4 * x * y * z);
        // Triangle OAC: degrees (8,8,4).
        let (x, y, z) = (d(o, a), d(o, c), d(a, c));
        assert_eq!(2 * x * x + y * y + z * z, 4 * x * y * z);
    }

    #[test]
    fn adjacency_and_errors() {
        // Corner to adjacent center: one diagonal edge.
        assert_eq!(d((0, 0), (1, 1)), 1);
        // Corner to corner along an axis edge.
        assert_eq!(d((0, 0), (0, 2)), 1);
        assert!(matches!(
            herriot_distance((0, 0), (1, 0)),
            Err(MarkoffError::NotAVertex(1, 0))
        ));
        assert!(matches!(
            herriot_distance((0, 0), (0, 0)),
            Err(MarkoffError::Degenerate)
        ));
        // (0,0) -> (2,2) passes through the center (1,1).
        assert!(matches!(
            herriot_distance((0, 0), (2, 2)),
            Err(MarkoffError::ThroughVertex(..))
        ));
        // (0,0) -> (0,4) passes through the corner (0,2).
        assert!(matches!(
            herriot_distance((0, 0), (0, 4)),
            Err(MarkoffError::ThroughVertex(..))
        ));
    }

    #[test]
    fn translation_invariance() {
        // Distances depend on the segment up to lattice translations
        // (by even vectors, preserving vertex classes).
        assert_eq!(d((2, 0), (5, 1)), d((0, 0), (3, 1)));
        assert_eq!(d((-2, -2), (1, -1)), d((0, 0), (3, 1)));
    }
}
