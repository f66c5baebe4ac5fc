use std::collections::BTreeMap;

use crate::exact::ExchangeValue;

use super::{minmax, FriezeError};

/// Direction of the next zig-zag entry, one row further down.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZigStep {
    /// Share the lower vertex: (i, j) -> (i-1, j).
    Left,
    /// Share the upper vertex: (i, j) -> (i, j+1).
    Right,
}

/// A zig-zag of n-3 table entries connecting the top row to the bottom
/// row: one entry per row, consecutive entries horizontally adjacent.
/// Entry d (cyclic distance d+2 from its first vertex) is the pair
/// `pairs[d]` with value `values[d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zigzag<V> {
    n: usize,
    pairs: Vec<(usize, usize)>,
    values: Vec<V>,
}

impl<V: ExchangeValue> Zigzag<V> {
    /// Build from the top entry's first vertex and a list of n-4 steps.
    pub fn from_steps(
        n: usize,
        start: usize,
        steps: &[ZigStep],
        values: Vec<V>,
    ) -> Result<Self, FriezeError> {
        if n < 4 {
            return Err(FriezeError::TooSmall(n));
        }
        if steps.len() != n - 4 || values.len() != n - 3 {
            return Err(FriezeError::BadZigzag(format!(
                "need {} steps and {} values for n = {n}",
                n - 4,
                n - 3
            )));
        }
        let mut pairs = Vec::with_capacity(n - 3);
        let mut i = start;
        let mut j = (start + 1) % n + 1;
        pairs.push((i, j));
        for s in steps {
            match s {
                ZigStep::Left => i = (i + n - 2) % n + 1,
                ZigStep::Right => j = j % n + 1,
            }
            pairs.push((i, j));
        }
        Ok(Zigzag { n, pairs, values })
    }

    /// The straight vertical zig-zag used in the sideways examples:
    /// steps alternate Left, Right, Left, ...
    pub fn vertical(n: usize, start: usize, values: Vec<V>) -> Result<Self, FriezeError> {
        let steps: Vec<ZigStep> = (0..n.saturating_sub(4))
            .map(|k| if k % 2 == 0 { ZigStep::Left } else { ZigStep::Right })
            .collect();
        Self::from_steps(n, start, &steps, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    /// One sideways iteration: the zig-zag one column to the right, with
    /// values computed by the sideways recurrence
    /// m_{i+1,j+1} = (m_{i+1,j} m_{i,j+1} + 1) / m_{i,j}.
    pub fn advance(&self) -> Result<Zigzag<V>, FriezeError> {
        let n = self.n;
        let one = self.values[0].one_like();
        let mut known: BTreeMap<(usize, usize), V> = BTreeMap::new();
        for i in 1..=n {
            known.insert(minmax(i, i % n + 1), one.clone());
        }
        for (p, v) in self.pairs.iter().zip(&self.values) {
            known.insert(minmax(p.0, p.1), v.clone());
        }
        let next_pairs: Vec<(usize, usize)> = self
            .pairs
            .iter()
            .map(|&(i, j)| (i % n + 1, j % n + 1))
            .collect();
        let mut next_vals: Vec<Option<V>> = vec![None; next_pairs.len()];
        // Each new entry needs its two flanks; these are sides, old
        // entries, or new entries already computed, so a few sweeps
        // settle everything.
        loop {
            let mut progressed = false;
            let mut done = true;
            for (idx, &(i1, j1)) in next_pairs.iter().enumerate() {
                if next_vals[idx].is_some() {
                    continue;
                }
                // Solving for (i+1, j+1) with i = i1 - 1, j = j1 - 1.
                let i = (i1 + n - 2) % n + 1;
                let j = (j1 + n - 2) % n + 1;
                let lookup = |a: usize, b: usize| -> Option<V> {
                    let key = minmax(a, b);
                    if let Some(v) = known.get(&key) {
                        return Some(v.clone());
                    }
                    next_pairs
                        .iter()
                        .position(|&p| minmax(p.0, p.1) == key)
                        .and_then(|k| next_vals[k].clone())
                };
                let (Some(a), Some(b)) = (lookup(i1, j), lookup(i, j1)) else {
                    done = false;
                    continue;
                };
                let denom = known[&minmax(i, j)].clone();
                if denom.is_zero_value() {
                    return Err(FriezeError::DivisionByZero(i, j));
                }
                let v = a
                    .times(&b)
                    .plus(&one)
                    .try_div(&denom)
                    .map_err(|_| FriezeError::DivisionByZero(i, j))?;
                next_vals[idx] = Some(v);
                progressed = true;
            }
            if done {
                break;
            }
            if !progressed {
                return Err(FriezeError::BadZigzag("sideways step stalled".into()));
            }
        }
        Ok(Zigzag {
            n,
            pairs: next_pairs,
            values: next_vals.into_iter().map(|v| v.unwrap()).collect(),
        })
    }
}
