//! The triangular lattice in coordinates: basis e1 = (1,0), e2 = (0,1),
//! e3 = -e1-e2, unit cells split by the diagonal in direction e1+e2.
//! Shortest vectors are +-e1, +-e2, +-(e1+e2). Strips of triangles
//! crossed by a primitive segment carry the Markoff matching model; edge
//! directions e1, e2, e1+e2 carry the weights x, y, z.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::exact::LaurentPoly;
use crate::matchings::MatchGraph;

use super::MarkoffError;

type Q = Ratio<i64>;

/// Vector (p,q) in the basis e1, e2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeVector {
    pub p: i64,
    pub q: i64,
}

impl LatticeVector {
    pub fn new(p: i64, q: i64) -> Self {
        LatticeVector { p, q }
    }

    pub fn is_primitive(&self) -> bool {
        (self.p != 0 || self.q != 0) && self.p.abs().gcd(&self.q.abs()) == 1
    }

    /// The six shortest vectors of the triangular lattice.
    pub fn is_shortest(&self) -> bool {
        matches!(
            (self.p, self.q),
            (1, 0) | (-1, 0) | (0, 1) | (0, -1) | (1, 1) | (-1, -1)
        )
    }

    /// Canonical representative of the lax vector {v, -v}.
    pub fn lax(&self) -> LatticeVector {
        if self.p > 0 || (self.p == 0 && self.q > 0) {
            *self
        } else {
            LatticeVector::new(-self.p, -self.q)
        }
    }

    pub fn add(&self, o: &LatticeVector) -> LatticeVector {
        LatticeVector::new(self.p + o.p, self.q + o.q)
    }

    pub fn sub(&self, o: &LatticeVector) -> LatticeVector {
        LatticeVector::new(self.p - o.p, self.q - o.q)
    }

    pub fn det(&self, o: &LatticeVector) -> i64 {
        self.p * o.q - self.q * o.p
    }
}

/// One triangle of the lattice triangulation: the unit cell at `cell`
/// split by its main diagonal; `lower` is the triangle below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeTriangle {
    pub cell: (i64, i64),
    pub lower: bool,
}

impl LatticeTriangle {
    pub fn vertices(&self) -> [(i64, i64); 3] {
        let (a, b) = self.cell;
        if self.lower {
            [(a, b), (a + 1, b), (a + 1, b + 1)]
        } else {
            [(a, b), (a, b + 1), (a + 1, b + 1)]
        }
    }
}

/// The ordered chain of lattice triangles crossed by the open segment
/// from the origin to `u`.
pub fn markoff_snake(u: &LatticeVector) -> Result<Vec<LatticeTriangle>, MarkoffError> {
    if !u.is_primitive() {
        return Err(MarkoffError::NotPrimitive(u.p, u.q));
    }
    if u.is_shortest() {
        return Err(MarkoffError::ShortestVector(u.p, u.q));
    }
    let (p, q) = (u.p, u.q);
    // Crossing parameters with the three line families x = k, y = k,
    // x - y = k, all strictly inside (0,1). A primitive segment meets no
    // lattice point in its interior, so crossings are simple and sorted
    // strictly.
    let mut times: Vec<Q> = Vec::new();
    let mut add_crossings = |delta: i64| {
        if delta != 0 {
            let (lo, hi) = if delta > 0 { (1, delta - 1) } else { (delta + 1, -1) };
            for k in lo..=hi {
                times.push(Q::new(k, delta));
            }
        }
    };
    add_crossings(p);
    add_crossings(q);
    add_crossings(p - q);
    times.push(Q::new(0, 1));
    times.push(Q::new(1, 1));
    times.sort_unstable();
    times.dedup();

    let mut triangles = Vec::new();
    for w in times.windows(2) {
        let mid = (w[0] + w[1]) / 2;
        let x = mid * p;
        let y = mid * q;
        let cell = (x.floor().to_integer(), y.floor().to_integer());
        let fx = x - Q::from_integer(cell.0);
        let fy = y - Q::from_integer(cell.1);
        triangles.push(LatticeTriangle {
            cell,
            lower: fx > fy,
        });
    }
    Ok(triangles)
}

fn vertex_id(p: (i64, i64)) -> u64 {
    (((p.0 + (1 << 20)) as u64) << 24) | ((p.1 + (1 << 20)) as u64)
}

/// Weight variable index of a lattice edge by direction: e1 -> x,
/// e2 -> y, e1+e2 -> z.
fn direction_var(a: (i64, i64), b: (i64, i64)) -> usize {
    let d = (b.0 - a.0, b.1 - a.1);
    match d {
        (1, 0) | (-1, 0) => 0,
        (0, 1) | (0, -1) => 1,
        (1, 1) | (-1, -1) => 2,
        _ => unreachable!("not a lattice edge: {a:?} -> {b:?}"),
    }
}

/// The bipartite incidence graph of the strip (black = lattice vertices,
/// white = triangles, edge weight = the weight of the side opposite the
/// vertex), with the segment endpoints deleted. `weighted` selects x,y,z
/// weights; otherwise all weights are 1.
pub fn strip_graph(u: &LatticeVector, weighted: bool) -> Result<MatchGraph, MarkoffError> {
    let triangles = markoff_snake(u)?;
    let vars: Vec<&str> = if weighted { vec!["x", "y", "z"] } else { vec![] };
    let mut verts = std::collections::BTreeSet::new();
    for t in &triangles {
        for v in t.vertices() {
            verts.insert(v);
        }
    }
    let endpoints = [(0i64, 0i64), (u.p, u.q)];
    let blacks: Vec<u64> = verts
        .iter()
        .filter(|v| !endpoints.contains(v))
        .map(|&v| vertex_id(v))
        .collect();
    let whites: Vec<u64> = (0..triangles.len() as u64).collect();
    let mut g = MatchGraph::new(&vars, blacks, whites);
    for (w, t) in triangles.iter().enumerate() {
        let vs = t.vertices();
        for k in 0..3 {
            if endpoints.contains(&vs[k]) {
                continue;
            }
            let (a, b) = (vs[(k + 1) % 3], vs[(k + 2) % 3]);
            let weight = if weighted {
                LaurentPoly::variable(&vars, direction_var(a, b))
            } else {
                LaurentPoly::one(&vars)
            };
            g.add_edge(vertex_id(vs[k]), w as u64, weight, 1);
        }
    }
    Ok(g)
}

/// Markoff number of a primitive vector: the matching count of its strip
/// graph; 1 for the six shortest vectors.
pub fn markoff_num(u: &LatticeVector) -> Result<BigInt, MarkoffError> {
    if !u.is_primitive() {
        return Err(MarkoffError::NotPrimitive(u.p, u.q));
    }
    if u.is_shortest() {
        return Ok(BigInt::from(1));
    }
    let g = strip_graph(u, false)?;
    Ok(g.matching_sum()?
        .as_constant()
        .expect("unit weights give a constant"))
}

/// Markoff polynomial of a primitive vector: the weighted matching sum
/// of the strip divided by the product of the interior (shared) edge
/// weights. Shortest vectors map to their seed variables x, y, z.
pub fn markoff_poly(u: &LatticeVector) -> Result<LaurentPoly, MarkoffError> {
    if !u.is_primitive() {
        return Err(MarkoffError::NotPrimitive(u.p, u.q));
    }
    let vars = ["x", "y", "z"];
    if u.is_shortest() {
        let lax = u.lax();
        let idx = direction_var((0, 0), (lax.p, lax.q));
        return Ok(LaurentPoly::variable(&vars, idx));
    }
    let triangles = markoff_snake(u)?;
    let g = strip_graph(u, true)?;
    let w = g.matching_sum()?;
    // Interior edges are those shared by consecutive triangles.
    let mut denom = LaurentPoly::one(&vars);
    for pair in triangles.windows(2) {
        let a: Vec<(i64, i64)> = pair[0].vertices().into();
        let shared: Vec<(i64, i64)> = pair[1]
            .vertices()
            .into_iter()
            .filter(|v| a.contains(v))
            .collect();
        debug_assert_eq!(shared.len(), 2);
        denom = denom.mul(&LaurentPoly::variable(
            &vars,
            direction_var(shared[0], shared[1]),
        ));
    }
    Ok(w.div_exact(&denom)?)
}

/// Lax superbase: three lax vectors with +-u +-v +-w = 0, any two a
/// basis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Superbase {
    pub vectors: [LatticeVector; 3],
}

impl Superbase {
    pub fn new(
        u: LatticeVector,
        v: LatticeVector,
        w: LatticeVector,
    ) -> Result<Self, MarkoffError> {
        let (u, v, w) = (u.lax(), v.lax(), w.lax());
        let closes = |a: &LatticeVector, b: &LatticeVector, c: &LatticeVector| {
            let s = a.add(b);
            s == *c || s.lax() == *c || a.sub(b).lax() == *c
        };
        if !(closes(&u, &v, &w) || closes(&v, &w, &u) || closes(&w, &u, &v)) {
            return Err(MarkoffError::InvalidSeed);
        }
        for (a, b) in [(&u, &v), (&u, &w), (&v, &w)] {
            if a.det(b).abs() != 1 {
                return Err(MarkoffError::InvalidSeed);
            }
        }
        let mut vectors = [u, v, w];
        vectors.sort();
        Ok(Superbase { vectors })
    }

    /// The seed superbase {e1, e2, e3}.
    pub fn seed() -> Self {
        Superbase::new(
            LatticeVector::new(1, 0),
            LatticeVector::new(0, 1),
            LatticeVector::new(-1, -1),
        )
        .expect("seed is a superbase")
    }

    /// The three neighbors in the topograph: replace one vector by the
    /// other combination of the remaining two.
    pub fn neighbors(&self) -> Vec<Superbase> {
        let [u, v, w] = self.vectors;
        let mut out = Vec::with_capacity(3);
        for (keep1, keep2, drop) in [(u, v, w), (u, w, v), (v, w, u)] {
            let sum = keep1.add(&keep2).lax();
            let diff = keep1.sub(&keep2).lax();
            let replacement = if sum == drop { diff } else { sum };
            out.push(
                Superbase::new(keep1, keep2, replacement)
                    .expect("topograph moves preserve superbases"),
            );
        }
        out
    }

    /// Markoff triple of the superbase, by matchings.
    pub fn markoff_triple(&self) -> Result<[BigInt; 3], MarkoffError> {
        Ok([
            markoff_num(&self.vectors[0])?,
            markoff_num(&self.vectors[1])?,
            markoff_num(&self.vectors[2])?,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn v(p: i64, q: i64) -> LatticeVector {
        LatticeVector::new(p, q)
    }

    #[test]
    fn snake_shapes() {
        // e1 - e2: the two triangles of the rhombus O, e1, u, -e2.
        let s = markoff_snake(&v(1, -1)).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(markoff_snake(&v(2, -1)).unwrap().len(), 4);
        assert_eq!(markoff_snake(&v(3, -2)).unwrap().len(), 8);
        assert!(matches!(
            markoff_snake(&v(2, 2)),
            Err(MarkoffError::NotPrimitive(2, 2))
        ));
        assert!(matches!(
            markoff_snake(&v(1, 1)),
            Err(MarkoffError::ShortestVector(1, 1))
        ));
    }

    #[test]
    fn snake_is_a_chain() {
        for (p, q) in [(1, -1), (2, -1), (3, -2), (5, 2), (4, 1), (-3, 1)] {
            let s = markoff_snake(&v(p, q)).unwrap();
            for w in s.windows(2) {
                let a = w[0].vertices();
                let shared = w[1].vertices().iter().filter(|x| a.contains(x)).count();
                assert_eq!(shared, 2, "consecutive triangles share an edge");
            }
        }
    }

    #[test]
    fn markoff_numbers_small() {
        for (p, q) in [(1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1)] {
            assert!(markoff_num(&v(p, q)).unwrap().is_one());
        }
        assert_eq!(markoff_num(&v(1, -1)).unwrap(), BigInt::from(2));
        assert_eq!(markoff_num(&v(2, -1)).unwrap(), BigInt::from(5));
        assert_eq!(markoff_num(&v(3, -2)).unwrap(), BigInt::from(29));
    }

    /// Oracle: the superbase recurrence M(u+v) = (M(u)^2 + M(v)^2) /
    /// M(u-v), independent of the matching model.
    fn markoff_by_recurrence(u: &LatticeVector) -> BigInt {
        fn rec(p: i64, q: i64) -> BigInt {
            let u = LatticeVector::new(p, q).lax();
            if u.is_shortest() {
                return BigInt::one();
            }
            // Write u = a + b with det(a,b) = 1 by the Stern-Brocot
            // style descent: choose the mediant decomposition.
            for ap in -u.p.abs()..=u.p.abs() {
                for aq in -u.q.abs()..=u.q.abs() {
                    let a = LatticeVector::new(ap, aq);
                    let b = u.sub(&a);
                    if a == LatticeVector::new(0, 0) || b == LatticeVector::new(0, 0) {
                        continue;
                    }
                    if a.det(&b) == 1
                        && (a.p.abs() + a.q.abs() < u.p.abs() + u.q.abs())
                        && (b.p.abs() + b.q.abs() < u.p.abs() + u.q.abs())
                    {
                        let ma = rec(a.p, a.q);
                        let mb = rec(b.p, b.q);
                        let md = rec(a.sub(&b).p, a.sub(&b).q);
                        let num = &ma * &ma + &mb * &mb;
                        let (quot, rem) = num.div_rem(&md);
                        if rem == BigInt::from(0) {
                            return quot;
                        }
                    }
                }
            }
            panic!("no decomposition found for ({p},{q})");
        }
        rec(u.p, u.q)
    }

    #[test]
    fn matchings_agree_with_recurrence_oracle() {
        for p in -4i64..=4 {
            for q in -4i64..=4 {
                let u = v(p, q);
                if !u.is_primitive() {
                    continue;
                }
                assert_eq!(
                    markoff_num(&u).unwrap(),
                    markoff_by_recurrence(&u),
                    "u=({p},{q})"
                );
            }
        }
    }

    #[test]
    fn kuo_consistency_on_lax_bases() {
        // M(u+v) M(u-v) = M(u)^2 + M(v)^2 whenever (u,v) is a lax base,
        // with every value an independent matching count.
        let mut checked = 0;
        for up in -4i64..=4 {
            for uq in -4i64..=4 {
                for vp in -4i64..=4 {
                    for vq in -4i64..=4 {
                        let u = v(up, uq);
                        let w = v(vp, vq);
                        if u.det(&w) != 1 {
                            continue;
                        }
                        let sum = u.add(&w);
                        let diff = u.sub(&w);
                        if !sum.is_primitive() || !diff.is_primitive() {
                            continue;
                        }
                        let lhs = markoff_num(&sum).unwrap() * markoff_num(&diff).unwrap();
                        let mu = markoff_num(&u).unwrap();
                        let mv = markoff_num(&w).unwrap();
                        assert_eq!(lhs, &mu * &mu + &mv * &mv, "u={u:?} v={w:?}");
                        checked += 1;
                    }
                }
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn markoff_poly_seeds_and_first_step() {
        let vars = ["x", "y", "z"];
        assert_eq!(
            markoff_poly(&v(1, 0)).unwrap(),
            LaurentPoly::variable(&vars, 0)
        );
        assert_eq!(
            markoff_poly(&v(0, -1)).unwrap(),
            LaurentPoly::variable(&vars, 1)
        );
        assert_eq!(
            markoff_poly(&v(1, 1)).unwrap(),
            LaurentPoly::variable(&vars, 2)
        );
        let m = markoff_poly(&v(1, -1)).unwrap();
        assert_eq!(
            m,
            LaurentPoly::parse_with_vars("x^2*z^-1 + y^2*z^-1", &vars).unwrap()
        );
    }

    #[test]
    fn poly_specializes_to_number() {
        use crate::exact::Rational;
        let ones = vec![Rational::one(), Rational::one(), Rational::one()];
        for p in -4i64..=4 {
            for q in -4i64..=4 {
                let u = v(p, q);
                if !u.is_primitive() {
                    continue;
                }
                let m = markoff_poly(&u).unwrap();
                assert!(m.is_positive(), "positivity of M({p},{q})");
                assert_eq!(
                    m.eval(&ones).unwrap(),
                    Rational::from(markoff_num(&u).unwrap()),
                    "u=({p},{q})"
                );
            }
        }
    }

    #[test]
    fn superbase_seed_and_neighbors() {
        let seed = Superbase::seed();
        assert_eq!(seed.markoff_triple().unwrap().map(|b| b), [
            BigInt::one(),
            BigInt::one(),
            BigInt::one()
        ]);
        let nbrs = seed.neighbors();
        assert_eq!(nbrs.len(), 3);
        for nb in &nbrs {
            let t = nb.markoff_triple().unwrap();
            let mut t: Vec<BigInt> = t.to_vec();
            t.sort();
            assert_eq!(t, vec![BigInt::one(), BigInt::one(), BigInt::from(2)]);
        }
    }

    #[test]
    fn superbase_triple_2_5_29() {
        let sb = Superbase::new(v(1, -1), v(2, -1), v(3, -2)).unwrap();
        let mut t = sb.markoff_triple().unwrap().to_vec();
        t.sort();
        assert_eq!(
            t,
            vec![BigInt::from(2), BigInt::from(5), BigInt::from(29)]
        );
    }

    #[test]
    fn superbases_satisfy_markoff_equation_to_depth_4() {
        let mut frontier = vec![Superbase::seed()];
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(Superbase::seed());
        for _ in 0..4 {
            let mut next = Vec::new();
            for sb in &frontier {
                for nb in sb.neighbors() {
                    if seen.insert(nb.clone()) {
                        next.push(nb);
                    }
                }
            }
            frontier = next;
        }
        for sb in seen {
            let [x, y, z] = sb.markoff_triple().unwrap();
            assert_eq!(
                &x * &x + &y * &y + &z * &z,
                BigInt::from(3) * &x * &y * &z,
                "superbase {sb:?}"
            );
        }
    }
}
