use std::collections::BTreeSet;

use crate::polygon::{catalan, enumerate_triangulations};

use super::marking::continuant_i128;
use super::FriezeError;

/// Classification of the positive-integer friezes of order n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub n: usize,
    /// Quiddity rows, one per frieze, sorted.
    pub quiddities: Vec<Vec<u64>>,
    /// Whether the direct bounded search found exactly the same set.
    pub search_agrees: bool,
}

impl Classification {
    pub fn count(&self) -> usize {
        self.quiddities.len()
    }
}

/// Every positive-integer frieze of order n: the ear-count rows of all
/// triangulations, cross-checked by a direct search over bounded
/// quiddity rows (entries at most n-2, the incidence bound).
pub fn classify_friezes(n: usize) -> Result<Classification, FriezeError> {
    if !(4..=12).contains(&n) {
        return Err(FriezeError::OutOfRange(n));
    }
    let from_triangulations: BTreeSet<Vec<u64>> = enumerate_triangulations(n)?
        .iter()
        .map(|t| t.ear_counts().iter().map(|&a| a as u64).collect())
        .collect();
    let expected = catalan(n - 2);
    debug_assert_eq!(num_bigint::BigInt::from(from_triangulations.len()), expected);

    let searched = search_quiddities(n);
    let search_agrees = searched == from_triangulations;
    Ok(Classification {
        n,
        quiddities: from_triangulations.into_iter().collect(),
        search_agrees,
    })
}

/// Positive-integer friezes have entries m_{i,j} = [a_{i+1},...,a_{j-1}]
/// (cyclic windows of the quiddity). A row qualifies iff every window of
/// length <= n-3 is >= 1 and every window of length n-2 equals 1. The
/// search prunes on the linear windows while extending the prefix.
fn search_quiddities(n: usize) -> BTreeSet<Vec<u64>> {
    let bound = (n - 2) as i128;
    let mut found = BTreeSet::new();
    let mut prefix: Vec<i128> = Vec::with_capacity(n);

    fn windows_ok(prefix: &[i128], n: usize) -> bool {
        let k = prefix.len();
        for len in 1..=(n - 2).min(k) {
            let w = &prefix[k - len..];
            let c = continuant_i128(w);
            if len <= n - 3 && c < 1 {
                return false;
            }
            if len == n - 2 && c != 1 {
                return false;
            }
        }
        true
    }

    fn cyclic_ok(row: &[i128], n: usize) -> bool {
        for i in 0..n {
            for len in 1..=n - 2 {
                if i + len <= n {
                    continue; // linear windows already checked
                }
                let w: Vec<i128> = (0..len).map(|k| row[(i + k) % n]).collect();
                let c = continuant_i128(&w);
                if len <= n - 3 && c < 1 {
                    return false;
                }
                if len == n - 2 && c != 1 {
                    return false;
                }
            }
        }
        true
    }

    fn dfs(prefix: &mut Vec<i128>, n: usize, bound: i128, found: &mut BTreeSet<Vec<u64>>) {
        if prefix.len() == n {
            if cyclic_ok(prefix, n) {
                found.insert(prefix.iter().map(|&x| x as u64).collect());
            }
            return;
        }
        for a in 1..=bound {
            prefix.push(a);
            if windows_ok(prefix, n) {
                dfs(prefix, n, bound, found);
            }
            prefix.pop();
        }
    }

    dfs(&mut prefix, n, bound, &mut found);
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_4_5_6() {
        let c4 = classify_friezes(4).unwrap();
        assert_eq!(c4.count(), 2);
        assert!(c4.search_agrees);
        assert_eq!(c4.quiddities, vec![vec![1, 2, 1, 2], vec![2, 1, 2, 1]]);

        let c5 = classify_friezes(5).unwrap();
        assert_eq!(c5.count(), 5);
        assert!(c5.search_agrees);

        let c6 = classify_friezes(6).unwrap();
        assert_eq!(c6.count(), 14);
        assert!(c6.search_agrees);
    }

    #[test]
    fn count_7_with_search() {
        let c7 = classify_friezes(7).unwrap();
        assert_eq!(c7.count(), 42);
        assert!(c7.search_agrees);
    }

    #[test]
    fn out_of_range() {
        assert!(classify_friezes(3).is_err());
        assert!(classify_friezes(13).is_err());
    }
}
