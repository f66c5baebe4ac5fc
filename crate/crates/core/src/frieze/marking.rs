use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::ExchangeRing;
use crate::polygon::Triangulation;

use super::FriezeError;

/// Euler continuant [a_1, ..., a_k]: the determinant of the tridiagonal
/// matrix with the sequence on the diagonal and 1's beside it.
pub fn continuant<V: ExchangeRing>(vals: &[V]) -> Result<V, FriezeError> {
    let Some(first) = vals.first() else {
        return Err(FriezeError::EmptyContinuant);
    };
    let mut prev = first.one_like(); // K of the empty window
    let mut cur = first.clone();
    for v in &vals[1..] {
        let next = v.times(&cur).minus(&prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Integer continuant, used by the classification search.
pub(crate) fn continuant_i128(vals: &[i128]) -> i128 {
    let mut prev = 1i128;
    let mut cur = vals[0];
    for &v in &vals[1..] {
        let next = v * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// The marking scheme: vertex v gets 0, its polygon neighbors 1, and
/// each triangle's third vertex the sum of the other two, propagated
/// across the dual tree. The label at u equals m_{v,u}.
pub fn cc_marking(t: &Triangulation, v: usize) -> BTreeMap<usize, BigInt> {
    let n = t.n();
    assert!(v >= 1 && v <= n, "vertex out of range");
    let mut labels: BTreeMap<usize, BigInt> = BTreeMap::new();
    labels.insert(v, BigInt::zero());
    labels.insert(v % n + 1, BigInt::one());
    labels.insert((v + n - 2) % n + 1, BigInt::one());
    let tris = t.triangles();
    loop {
        let mut progressed = false;
        for tri in &tris {
            let unknown: Vec<usize> = tri
                .iter()
                .copied()
                .filter(|u| !labels.contains_key(u))
                .collect();
            if unknown.len() == 1 {
                let sum: BigInt = tri
                    .iter()
                    .filter(|u| **u != unknown[0])
                    .map(|u| labels[u].clone())
                    .sum();
                labels.insert(unknown[0], sum);
                progressed = true;
            }
        }
        if labels.len() == n {
            return labels;
        }
        assert!(progressed, "marking propagation covers the polygon");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::matchings::{build_graph, unit_weights};
    use crate::polygon::enumerate_triangulations;
    use crate::snake::{code_from_triangulation, snake_matchings, SnakeCode};

    fn rat(x: i64) -> Rational {
        Rational::from(BigInt::from(x))
    }

    #[test]
    fn continuant_small() {
        assert_eq!(continuant(&[rat(7)]).unwrap(), rat(7));
        assert_eq!(continuant(&[rat(3), rat(2)]).unwrap(), rat(5));
        assert_eq!(continuant(&[rat(3), rat(2), rat(1)]).unwrap(), rat(2));
        assert!(continuant::<Rational>(&[]).is_err());
    }

    #[test]
    fn continuant_window_equals_matching_count() {
        // [a_{i+1}, ..., a_{j-1}] = m_{i,j} on every triangulation
        // window; the 2-term case is m_{i-1,i+2} = a_i a_{i+1} - 1.
        for n in 5..=7 {
            for t in enumerate_triangulations(n).unwrap() {
                let ears = t.ear_counts();
                let g = build_graph(&t, &unit_weights(&t)).unwrap();
                for i in 1..=n {
                    for len in 1..=n - 2 {
                        let window: Vec<Rational> =
                            (0..len).map(|k| rat(ears[(i + k - 1) % n] as i64)).collect();
                        let kont = continuant(&window).unwrap();
                        let lo = (i + n - 2) % n + 1; // i - 1
                        let hi = (i + len - 1) % n + 1; // i + len
                        let m = g
                            .delete_black(lo as u64, hi as u64)
                            .unwrap()
                            .matching_sum()
                            .unwrap()
                            .as_constant()
                            .unwrap();
                        assert_eq!(kont, Rational::from(m), "n={n} i={i} len={len}");
                    }
                }
            }
        }
    }

    #[test]
    fn marking_triangle() {
        let t = Triangulation::new(3, &[]).unwrap();
        for v in 1..=3 {
            let labels = cc_marking(&t, v);
            let mut vals: Vec<BigInt> = labels.values().cloned().collect();
            vals.sort();
            assert_eq!(vals, vec![BigInt::zero(), BigInt::one(), BigInt::one()]);
            assert_eq!(labels[&v], BigInt::zero());
        }
    }

    #[test]
    fn marking_equals_matching_counts() {
        for t in enumerate_triangulations(7).unwrap() {
            let g = build_graph(&t, &unit_weights(&t)).unwrap();
            for v in 1..=7 {
                let labels = cc_marking(&t, v);
                for u in 1..=7 {
                    if u == v {
                        continue;
                    }
                    let m = g
                        .delete_black(v as u64, u as u64)
                        .unwrap()
                        .matching_sum()
                        .unwrap()
                        .as_constant()
                        .unwrap();
                    assert_eq!(labels[&u], m, "v={v} u={u}");
                }
            }
        }
    }

    #[test]
    fn figure11_snake_marking() {
        // A 9-gon triangulation whose full triangle path has code 2212,
        // marked from the path's head: the label multiset matches the
        // figure and the far endpoint carries the full matching count 13.
        let want: SnakeCode = "2212".parse().unwrap();
        let mut checked = false;
        'outer: for t in enumerate_triangulations(9).unwrap() {
            for i in 1..=9 {
                for j in 1..=9 {
                    if i == j {
                        continue;
                    }
                    if t.triangle_path(i, j).unwrap().len() == 7
                        && code_from_triangulation(&t, i, j).unwrap() == want
                    {
                        let labels = cc_marking(&t, i);
                        let mut vals: Vec<i64> = labels
                            .values()
                            .map(|b| i64::try_from(b.clone()).unwrap())
                            .collect();
                        vals.sort_unstable();
                        assert_eq!(vals, vec![0, 1, 1, 2, 3, 4, 5, 9, 13]);
                        assert_eq!(labels[&j], snake_matchings(&want));
                        checked = true;
                        break 'outer;
                    }
                }
            }
        }
        assert!(checked, "found a 2212 snake in the 9-gon");
    }
}
