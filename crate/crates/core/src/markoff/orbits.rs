//! Orbits of (1,1,1) under the exchange moves of the Rosenberger ternary
//! cubics ax^2 + by^2 + cz^2 = (a+b+c)xyz, and of (1,1,1,1) under the
//! Markoff-Hurwitz quadruple moves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::json;

use crate::exact::LaurentPoly;

use super::MarkoffError;

/// The three coefficient triples whose cubic has all positive solutions
/// reachable from (1,1,1).
pub const ROSENBERGER_COEFFS: [(u64, u64, u64); 3] = [(1, 1, 1), (1, 1, 2), (1, 2, 3)];

/// Node of a Rosenberger orbit tree. A child whose exchange value fails
/// integrality is recorded, flagged, and not expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitNode {
    pub triple: [BigInt; 3],
    /// Exchange slots (0,1,2) whose value left the integers, with the
    /// rational value as (numerator, denominator).
    pub non_integer_exchanges: Vec<(usize, BigInt, BigInt)>,
    pub children: Vec<OrbitNode>,
}

impl OrbitNode {
    pub fn walk(&self, f: &mut impl FnMut(&OrbitNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "triple": self.triple.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "nonIntegerExchanges": self
                .non_integer_exchanges
                .iter()
                .map(|(s, n, d)| json!({"slot": s, "value": format!("{n}/{d}")}))
                .collect::<Vec<_>>(),
            "children": self.children.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

fn cubic_holds(coeffs: (u64, u64, u64), t: &[BigInt; 3]) -> bool {
    let (a, b, c) = coeffs;
    let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
    let s = &a + &b + &c;
    &a * &t[0] * &t[0] + &b * &t[1] * &t[1] + &c * &t[2] * &t[2] == s * &t[0] * &t[1] * &t[2]
}

/// Orbit of (1,1,1) under x' = (by^2 + cz^2)/ax and its two companions,
/// to the given depth. For the three listed coefficient triples every
/// exchange stays integral; other positive coefficients are allowed and
/// any non-integer exchange is reported on the node rather than fatal.
pub fn rosenberger_orbit(
    coeffs: (u64, u64, u64),
    depth: usize,
) -> Result<OrbitNode, MarkoffError> {
    if coeffs.0 == 0 || coeffs.1 == 0 || coeffs.2 == 0 {
        return Err(MarkoffError::BadCoefficients);
    }
    let seed = [BigInt::one(), BigInt::one(), BigInt::one()];
    debug_assert!(cubic_holds(coeffs, &seed));

    fn expand(
        coeffs: (u64, u64, u64),
        triple: [BigInt; 3],
        parent: Option<&[BigInt; 3]>,
        depth: usize,
    ) -> OrbitNode {
        let (a, b, c) = (
            BigInt::from(coeffs.0),
            BigInt::from(coeffs.1),
            BigInt::from(coeffs.2),
        );
        let mut children = Vec::new();
        let mut flagged = Vec::new();
        if depth > 0 {
            for slot in 0..3 {
                let [x, y, z] = &triple;
                let (num, den) = match slot {
                    0 => (&b * y * y + &c * z * z, &a * x),
                    1 => (&a * x * x + &c * z * z, &b * y),
                    _ => (&a * x * x + &b * y * y, &c * z),
                };
                let (quot, rem) = num.div_rem(&den);
                if !rem.is_zero() {
                    let g = num.gcd(&den);
                    flagged.push((slot, &num / &g, &den / &g));
                    continue;
                }
                let mut next = triple.clone();
                next[slot] = quot;
                if next == triple || parent == Some(&next) {
                    continue;
                }
                debug_assert!(cubic_holds(coeffs, &next));
                children.push(expand(coeffs, next, Some(&triple), depth - 1));
            }
        }
        OrbitNode {
            triple,
            non_integer_exchanges: flagged,
            children,
        }
    }
    Ok(expand(coeffs, seed, None, depth))
}

/// Whether the coefficients are one of the three Rosenberger triples.
pub fn is_listed_rosenberger(coeffs: (u64, u64, u64)) -> bool {
    ROSENBERGER_COEFFS.contains(&coeffs)
}

/// Node of the Markoff-Hurwitz quadruple tree for
/// w^2 + x^2 + y^2 + z^2 = 4wxyz.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzNode<T> {
    pub quad: [T; 4],
    pub children: Vec<HurwitzNode<T>>,
}

impl<T> HurwitzNode<T> {
    pub fn walk(&self, f: &mut impl FnMut(&HurwitzNode<T>)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }
}

fn hurwitz_holds(q: &[BigInt; 4]) -> bool {
    let s: BigInt = q.iter().map(|v| v * v).sum();
    s == BigInt::from(4) * &q[0] * &q[1] * &q[2] * &q[3]
}

/// Numeric Markoff-Hurwitz orbit: exchanges w' = 4xyz - w per slot,
/// children dedup'd by the sorted quadruple with the parent omitted.
pub fn hurwitz_expand(
    seed: [BigInt; 4],
    depth: usize,
) -> Result<HurwitzNode<BigInt>, MarkoffError> {
    if !hurwitz_holds(&seed) {
        return Err(MarkoffError::InvalidSeed);
    }
    fn sorted4(q: &[BigInt; 4]) -> [BigInt; 4] {
        let mut s = q.clone();
        s.sort();
        s
    }
    fn expand(
        quad: [BigInt; 4],
        parent: Option<&[BigInt; 4]>,
        depth: usize,
    ) -> HurwitzNode<BigInt> {
        let mut children = Vec::new();
        if depth > 0 {
            let mut seen = Vec::new();
            for slot in 0..4 {
                let others: BigInt = (0..4)
                    .filter(|&i| i != slot)
                    .map(|i| quad[i].clone())
                    .product();
                let mut next = quad.clone();
                next[slot] = BigInt::from(4) * others - &quad[slot];
                debug_assert!(hurwitz_holds(&next));
                let key = sorted4(&next);
                if parent.map(|p| sorted4(p) == key).unwrap_or(false) || seen.contains(&key) {
                    continue;
                }
                seen.push(key);
                children.push(expand(next, Some(&quad), depth - 1));
            }
        }
        HurwitzNode { quad, children }
    }
    Ok(expand(seed, None, depth))
}

/// Report of a formal Hurwitz expansion: whether every exchange divided
/// exactly (the Laurent phenomenon) and whether every coefficient seen
/// was positive. Positivity is an observation, not a theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HurwitzFormalReport {
    pub root: HurwitzNode<LaurentPoly>,
    pub all_laurent: bool,
    pub all_positive: bool,
}

/// Formal Markoff-Hurwitz orbit from the seed (w, x, y, z): exchanges
/// w' = (x^2 + y^2 + z^2)/w via exact Laurent division; verified by
/// multiplying back.
pub fn hurwitz_expand_formal(depth: usize) -> Result<HurwitzFormalReport, MarkoffError> {
    let vars = ["w", "x", "y", "z"];
    let seed: [LaurentPoly; 4] = std::array::from_fn(|i| LaurentPoly::variable(&vars, i));
    let mut all_positive = true;

    fn expand(
        quad: [LaurentPoly; 4],
        parent: Option<&[LaurentPoly; 4]>,
        depth: usize,
        all_positive: &mut bool,
    ) -> Result<HurwitzNode<LaurentPoly>, MarkoffError> {
        for p in &quad {
            if !p.is_positive() {
                *all_positive = false;
            }
        }
        let mut children = Vec::new();
        if depth > 0 {
            for slot in 0..4 {
                let num = (0..4)
                    .filter(|&i| i != slot)
                    .map(|i| quad[i].mul(&quad[i]))
                    .reduce(|a, b| a.add(&b))
                    .expect("three squares");
                let q = num.div_exact(&quad[slot])?;
                debug_assert_eq!(q.mul(&quad[slot]), num);
                let mut next = quad.clone();
                next[slot] = q;
                if let Some(p) = parent {
                    if *p == next {
                        continue;
                    }
                }
                children.push(expand(next, Some(&quad), depth - 1, all_positive)?);
            }
        }
        Ok(HurwitzNode { quad, children })
    }

    let root = expand(seed, None, depth, &mut all_positive)?;
    Ok(HurwitzFormalReport {
        root,
        all_laurent: true,
        all_positive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn markoff_case_matches_topograph() {
        let orbit = rosenberger_orbit((1, 1, 1), 4).unwrap();
        let topo = super::super::topograph::topograph_expand(std::array::from_fn(|_| big(1)), 4).unwrap();
        let mut orbit_triples = std::collections::BTreeSet::new();
        orbit.walk(&mut |n| {
            let mut t = n.triple.to_vec();
            t.sort();
            orbit_triples.insert(t);
        });
        let mut topo_triples = std::collections::BTreeSet::new();
        topo.walk(&mut |n| {
            let mut t = n.triple.to_vec();
            t.sort();
            topo_triples.insert(t);
        });
        assert_eq!(orbit_triples, topo_triples);
    }

    #[test]
    fn coeffs_112_first_exchange() {
        let orbit = rosenberger_orbit((1, 1, 2), 1).unwrap();
        // (1,1,1) -> x-exchange -> (3,1,1): 9 + 1 + 2 = 12 = 4*3.
        assert!(orbit
            .children
            .iter()
            .any(|c| c.triple == [big(3), big(1), big(1)]));
        // z-exchange: z' = (1 + 1)/2 = 1 = z, a fixed point, omitted.
        assert!(orbit.children.iter().all(|c| c.triple != std::array::from_fn(|_| big(1))));
    }

    #[test]
    fn coeffs_123_seed_and_orbit() {
        // 1 + 2 + 3 = 6 * 1: the seed satisfies the cubic.
        assert!(cubic_holds((1, 2, 3), &[big(1), big(1), big(1)]));
        let orbit = rosenberger_orbit((1, 2, 3), 5).unwrap();
        let mut all_integral = true;
        orbit.walk(&mut |n| {
            if !n.non_integer_exchanges.is_empty() {
                all_integral = false;
            }
            assert!(cubic_holds((1, 2, 3), &n.triple));
        });
        assert!(all_integral);
    }

    #[test]
    fn integrality_to_depth_6_for_all_listed() {
        for coeffs in ROSENBERGER_COEFFS {
            let orbit = rosenberger_orbit(coeffs, 6).unwrap();
            orbit.walk(&mut |n| {
                assert!(
                    n.non_integer_exchanges.is_empty(),
                    "{coeffs:?}: {:?}",
                    n.triple
                );
                assert!(cubic_holds(coeffs, &n.triple));
                assert!(n.triple.iter().all(|v| v > &BigInt::zero()));
            });
        }
    }

    #[test]
    fn unlisted_coeffs_flag_non_integer() {
        // (1,1,5): 1 + 1 + 5 = 7*1 so the seed works, but exchanges leave
        // the integers somewhere down the orbit.
        let orbit = rosenberger_orbit((1, 1, 5), 4).unwrap();
        let mut flagged = 0;
        orbit.walk(&mut |n| flagged += n.non_integer_exchanges.len());
        assert!(flagged > 0, "expected a reported non-integer exchange");
        assert!(!is_listed_rosenberger((1, 1, 5)));
    }

    #[test]
    fn hurwitz_first_exchange_and_involution() {
        let root = hurwitz_expand(std::array::from_fn(|_| big(1)), 2).unwrap();
        // (1,1,1,1) -> (3,1,1,1): 9 + 3 = 12 = 4*3.
        assert_eq!(root.children.len(), 1, "children dedup to one");
        assert_eq!(root.children[0].quad, [big(3), big(1), big(1), big(1)]);
        // Involution per slot.
        let q = [big(3), big(1), big(1), big(1)];
        let mut once = q.clone();
        once[1] = big(4) * &q[0] * &q[2] * &q[3] - &q[1];
        let mut twice = once.clone();
        twice[1] = big(4) * &once[0] * &once[2] * &once[3] - &once[1];
        assert_eq!(twice, q);
        assert!(matches!(
            hurwitz_expand([big(1), big(1), big(1), big(2)], 1),
            Err(MarkoffError::InvalidSeed)
        ));
    }

    #[test]
    fn hurwitz_numeric_depth_4() {
        let root = hurwitz_expand(std::array::from_fn(|_| big(1)), 4).unwrap();
        root.walk(&mut |n| assert!(hurwitz_holds(&n.quad)));
    }

    #[test]
    fn hurwitz_formal_depth_2_is_laurent() {
        let report = hurwitz_expand_formal(2).unwrap();
        assert!(report.all_laurent);
        // Positivity observed (not asserted as a theorem, but the crate
        // records what it sees).
        assert!(report.all_positive);
        let mut nodes = 0;
        report.root.walk(&mut |_| nodes += 1);
        assert!(nodes >= 1 + 4 + 12, "got {nodes}");
    }
}
