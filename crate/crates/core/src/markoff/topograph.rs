//! The Markoff topograph: trees of numeric or formal triples under the
//! exchange moves, superbase trees, and Dana Scott's extremal branch.

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;

use crate::exact::{LaurentPoly, Mat2};

use super::lattice::Superbase;
use super::MarkoffError;

/// Node of the numeric topograph, children dedup'd by unordered triple
/// and the parent omitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopographNode {
    pub triple: [BigInt; 3],
    pub children: Vec<TopographNode>,
}

impl TopographNode {
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn walk(&self, f: &mut impl FnMut(&TopographNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "triple": self.triple.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "children": self.children.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

fn sorted3(t: &[BigInt; 3]) -> [BigInt; 3] {
    let mut s = t.clone();
    s.sort();
    s
}

fn satisfies_markoff(t: &[BigInt; 3]) -> bool {
    let [x, y, z] = t;
    x * x + y * y + z * z == BigInt::from(3) * x * y * z
}

/// Expand the topograph from a numeric Markoff triple to the given
/// depth. Each exchange uses the integer shortcut z' = 3xy - z; every
/// node is revalidated against the Markoff equation.
pub fn topograph_expand(seed: [BigInt; 3], depth: usize) -> Result<TopographNode, MarkoffError> {
    if !satisfies_markoff(&seed) {
        return Err(MarkoffError::InvalidSeed);
    }
    fn expand(triple: [BigInt; 3], parent: Option<&[BigInt; 3]>, depth: usize) -> TopographNode {
        let mut children = Vec::new();
        if depth > 0 {
            let mut seen: Vec<[BigInt; 3]> = Vec::new();
            for slot in 0..3 {
                let [x, y, z] = triple.clone();
                let mut next = [x.clone(), y.clone(), z.clone()];
                let (a, b, c) = match slot {
                    0 => (&y, &z, &x),
                    1 => (&x, &z, &y),
                    _ => (&x, &y, &z),
                };
                next[slot] = BigInt::from(3) * a * b - c;
                debug_assert!(satisfies_markoff(&next));
                let key = sorted3(&next);
                if parent.map(|p| sorted3(p) == key).unwrap_or(false) {
                    continue;
                }
                if seen.contains(&key) {
                    continue;
                }
                seen.push(key);
                children.push(expand(next, Some(&triple), depth - 1));
            }
        }
        TopographNode { triple, children }
    }
    Ok(expand(seed, None, depth))
}

/// Node of the formal topograph: triples of Laurent polynomials in
/// x, y, z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalNode {
    pub triple: [LaurentPoly; 3],
    pub children: Vec<FormalNode>,
}

impl FormalNode {
    pub fn walk(&self, f: &mut impl FnMut(&FormalNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }
}

/// Expand the formal topograph from the seed (x, y, z): each exchange is
/// X' = (Y^2 + Z^2)/X, an exact Laurent division (a failed division
/// would falsify the Laurent phenomenon and surfaces as an error).
pub fn topograph_expand_formal(depth: usize) -> Result<FormalNode, MarkoffError> {
    let vars = ["x", "y", "z"];
    let seed = [
        LaurentPoly::variable(&vars, 0),
        LaurentPoly::variable(&vars, 1),
        LaurentPoly::variable(&vars, 2),
    ];
    fn expand(
        triple: [LaurentPoly; 3],
        parent: Option<&[LaurentPoly; 3]>,
        depth: usize,
    ) -> Result<FormalNode, MarkoffError> {
        let mut children = Vec::new();
        if depth > 0 {
            let mut seen: Vec<Vec<LaurentPoly>> = Vec::new();
            for slot in 0..3 {
                let mut next = triple.clone();
                let (a, b) = match slot {
                    0 => (&triple[1], &triple[2]),
                    1 => (&triple[0], &triple[2]),
                    _ => (&triple[0], &triple[1]),
                };
                let num = a.mul(a).add(&b.mul(b));
                next[slot] = num.div_exact(&triple[slot])?;
                let mut key = next.to_vec();
                key.sort_by(|p, q| format!("{p:?}").cmp(&format!("{q:?}")));
                if let Some(p) = parent {
                    let mut pk = p.to_vec();
                    pk.sort_by(|a, b| format!("{a:?}").cmp(&format!("{b:?}")));
                    if pk == key {
                        continue;
                    }
                }
                if seen.contains(&key) {
                    continue;
                }
                seen.push(key);
                children.push(expand(next, Some(&triple), depth - 1)?);
            }
        }
        Ok(FormalNode { triple, children })
    }
    expand(seed, None, depth)
}

/// The tree of superbases to a given depth, rooted at {e1, e2, e3}.
/// Returns every distinct superbase reached.
pub fn superbase_tree(depth: usize) -> Vec<Superbase> {
    let seed = Superbase::seed();
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(seed.clone());
    let mut frontier = vec![seed];
    for _ in 0..depth {
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
    seen.into_iter().collect()
}

/// Dana Scott's sequence 1, 1, 2, 5, 29, 433, 37666, ...:
/// f(n) = (f(n-1)^2 + f(n-2)^2) / f(n-3), the greatest-increase branch
/// of the topograph. Division is always exact.
pub fn scott_sequence(k: usize) -> Result<Vec<BigInt>, MarkoffError> {
    if k < 3 {
        return Err(MarkoffError::ScottTooShort);
    }
    let mut f: Vec<BigInt> = vec![BigInt::one(), BigInt::one(), BigInt::from(2)];
    while f.len() < k {
        let n = f.len();
        let num = &f[n - 1] * &f[n - 1] + &f[n - 2] * &f[n - 2];
        let (quot, rem) = num_integer::Integer::div_rem(&num, &f[n - 3]);
        debug_assert!(num_traits::Zero::is_zero(&rem));
        f.push(quot);
    }
    Ok(f)
}

/// The matrix form of the Scott sequence: the upper-left entries of
/// these matrices are f(1), f(2), ... and M(n) = M(n-1) M(n-3)^{-1}
/// M(n-1) holds from the fifth matrix on. (The displayed first matrix
/// has determinant -1 and is not produced by the recurrence; the three
/// matrices after it seed it.)
pub fn scott_matrices(k: usize) -> Result<Vec<Mat2>, MarkoffError> {
    if k < 3 {
        return Err(MarkoffError::ScottTooShort);
    }
    let mut m = vec![
        Mat2::new(1, 1, 1, 0),
        Mat2::identity(),
        Mat2::new(2, 1, 1, 1),
        Mat2::new(5, 2, 2, 1),
    ];
    while m.len() < k {
        let n = m.len();
        let inv = m[n - 3]
            .inverse_unimodular()
            .expect("scott matrices are unimodular");
        let next = m[n - 1].mul(&inv).mul(&m[n - 1]);
        m.push(next);
    }
    m.truncate(k);
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn tree_contains_canonical_path() {
        let root = topograph_expand([big(1), big(1), big(1)], 3).unwrap();
        // (1,1,1) -> (2,1,1) -> (2,5,1) -> (2,5,29), as unordered
        // triples along a root path.
        let mut node = &root;
        for expect in [
            vec![big(1), big(1), big(2)],
            vec![big(1), big(2), big(5)],
            vec![big(2), big(5), big(29)],
        ] {
            let next = node
                .children
                .iter()
                .find(|c| sorted3(&c.triple).to_vec() == expect);
            assert!(next.is_some(), "missing child {expect:?} of {node:?}");
            node = next.unwrap();
        }
    }

    #[test]
    fn all_nodes_satisfy_markoff_to_depth_6() {
        let root = topograph_expand([big(1), big(1), big(1)], 6).unwrap();
        let mut count = 0;
        root.walk(&mut |n| {
            assert!(satisfies_markoff(&n.triple));
            count += 1;
        });
        assert!(count > 30, "expanded {count} nodes");
    }

    #[test]
    fn exchange_is_involution() {
        let t = [big(2), big(5), big(29)];
        for slot in 0..3 {
            let mut once = t.clone();
            let (a, b) = match slot {
                0 => (&t[1], &t[2]),
                1 => (&t[0], &t[2]),
                _ => (&t[0], &t[1]),
            };
            once[slot] = big(3) * a * b - &t[slot];
            let mut twice = once.clone();
            let (a, b) = match slot {
                0 => (&once[1], &once[2]),
                1 => (&once[0], &once[2]),
                _ => (&once[0], &once[1]),
            };
            twice[slot] = big(3) * a * b - &once[slot];
            assert_eq!(twice, t);
        }
    }

    #[test]
    fn invalid_seed_rejected() {
        assert!(matches!(
            topograph_expand([big(1), big(1), big(3)], 1),
            Err(MarkoffError::InvalidSeed)
        ));
    }

    #[test]
    fn formal_tree_positive_to_depth_2() {
        let root = topograph_expand_formal(2).unwrap();
        let mut nodes = 0;
        root.walk(&mut |n| {
            nodes += 1;
            for p in &n.triple {
                assert!(p.is_positive(), "entry {p} not positive");
            }
        });
        assert!(nodes >= 6);
    }

    #[test]
    fn formal_matches_numeric_at_ones() {
        use crate::exact::Rational;
        let ones = vec![Rational::one(), Rational::one(), Rational::one()];
        let formal = topograph_expand_formal(3).unwrap();
        let numeric = topograph_expand([big(1), big(1), big(1)], 3).unwrap();
        // The numeric tree collapses duplicate children, so compare the
        // sets of evaluated triples per depth level instead of shapes.
        fn level_triples(n: &FormalNode, depth: usize, ones: &[Rational]) -> Vec<Vec<BigInt>> {
            let mut out = Vec::new();
            if depth == 0 {
                let mut t: Vec<BigInt> = n
                    .triple
                    .iter()
                    .map(|p| p.eval(ones).unwrap().to_integer())
                    .collect();
                t.sort();
                out.push(t);
            } else {
                for c in &n.children {
                    out.extend(level_triples(c, depth - 1, ones));
                }
            }
            out
        }
        fn numeric_level(n: &TopographNode, depth: usize) -> Vec<Vec<BigInt>> {
            let mut out = Vec::new();
            if depth == 0 {
                out.push(sorted3(&n.triple).to_vec());
            } else {
                for c in &n.children {
                    out.extend(numeric_level(c, depth - 1));
                }
            }
            out
        }
        for d in 0..=3 {
            let mut f = level_triples(&formal, d, &ones);
            let mut m = numeric_level(&numeric, d);
            f.sort();
            f.dedup();
            m.sort();
            m.dedup();
            assert_eq!(f, m, "depth {d}");
        }
    }

    #[test]
    fn scott_sequence_golden() {
        let s = scott_sequence(7).unwrap();
        assert_eq!(
            s,
            vec![big(1), big(1), big(2), big(5), big(29), big(433), big(37666)]
        );
        assert_eq!(scott_sequence(3).unwrap(), vec![big(1), big(1), big(2)]);
        assert!(scott_sequence(2).is_err());
    }

    #[test]
    fn scott_matrices_golden() {
        let m = scott_matrices(7).unwrap();
        assert_eq!(m[4], Mat2::new(29, 12, 12, 5));
        assert_eq!(m[5], Mat2::new(433, 179, 179, 74));
        let f = scott_sequence(7).unwrap();
        for (i, mat) in m.iter().enumerate() {
            assert_eq!(mat.a, f[i], "upper-left of matrix {i}");
        }
        // The multiplicative recurrence reproduces matrices from index 4.
        for n in 4..m.len() {
            let inv = m[n - 3].inverse_unimodular().unwrap();
            assert_eq!(m[n], m[n - 1].mul(&inv).mul(&m[n - 1]));
        }
    }

    #[test]
    fn superbase_tree_matches_topograph_triples() {
        let sbs = superbase_tree(4);
        let root = topograph_expand([big(1), big(1), big(1)], 4).unwrap();
        let mut topo: std::collections::BTreeSet<Vec<BigInt>> = Default::default();
        root.walk(&mut |n| {
            topo.insert(sorted3(&n.triple).to_vec());
        });
        let mut lattice: std::collections::BTreeSet<Vec<BigInt>> = Default::default();
        for sb in sbs {
            let mut t = sb.markoff_triple().unwrap().to_vec();
            t.sort();
            lattice.insert(t);
        }
        // Every triple from lattice superbases appears in the numeric
        // topograph and vice versa at this depth.
        assert_eq!(topo, lattice);
    }
}
