//! The variant recurrence E = (BD - C)/A (A above, B left, C center, D
//! right, E below): table construction from double zig-zags, periodicity
//! verification, bounded enumeration of positive-integer tables, and
//! symbolic Laurentness/positivity experiments for the open conjecture.
//!
//! Tables have n-2 rows; the first and last are all 1's and every row
//! has period 2n. The stencil orientation is pinned by the worked
//! example y = (AC+E)/B, x = (y+D)/A, z = (y+F)/C (the module's first
//! golden test), since a misread stencil is the likeliest bug here.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::json;
use thiserror::Error;

use crate::exact::{ExactError, ExchangeRing, FriezeValue, LaurentPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VariantError {
    #[error("variant tables need n >= 5, got {0}")]
    TooSmall(usize),
    #[error("bad double zig-zag: {0}")]
    BadShape(String),
    #[error("division failed at row {row}, column {col}")]
    Division { row: usize, col: i64 },
    #[error("symbolic experiments support 5 <= n <= 7, got {0}")]
    OutOfRange(usize),
    #[error("enumeration bound did not stabilize below {0}")]
    Unstable(u64),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A pair of adjacent entries in each middle row, with the pair in each
/// row displaced from its neighbors by at most one column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleZigzag<V> {
    n: usize,
    start_cols: Vec<i64>,
    values: Vec<[V; 2]>,
}

impl<V: ExchangeRing> DoubleZigzag<V> {
    pub fn new(n: usize, start_cols: Vec<i64>, values: Vec<[V; 2]>) -> Result<Self, VariantError> {
        if n < 5 {
            return Err(VariantError::TooSmall(n));
        }
        let rows = n - 4;
        if start_cols.len() != rows || values.len() != rows {
            return Err(VariantError::BadShape(format!(
                "need {rows} column positions and value pairs"
            )));
        }
        for w in start_cols.windows(2) {
            if (w[0] - w[1]).abs() > 1 {
                return Err(VariantError::BadShape(
                    "adjacent rows displaced by more than one column".into(),
                ));
            }
        }
        Ok(DoubleZigzag {
            n,
            start_cols,
            values,
        })
    }

    /// Vertically aligned double zig-zag at columns (0, 1).
    pub fn aligned(n: usize, values: Vec<[V; 2]>) -> Result<Self, VariantError> {
        let rows = n.saturating_sub(4);
        DoubleZigzag::new(n, vec![0; rows], values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[[V; 2]] {
        &self.values
    }
}

/// All-ones seed.
pub fn all_ones_zigzag(n: usize) -> Result<DoubleZigzag<Rational>, VariantError> {
    let one = Rational::one();
    DoubleZigzag::aligned(n, vec![[one.clone(), one.clone()]; n.saturating_sub(4)])
}

/// Fully formal seed: variables u1, v1, u2, v2, ... per middle row.
pub fn formal_zigzag(n: usize) -> Result<DoubleZigzag<LaurentPoly>, VariantError> {
    let rows = n.saturating_sub(4);
    let names_owned: Vec<String> = (1..=rows)
        .flat_map(|r| [format!("u{r}"), format!("v{r}")])
        .collect();
    let names: Vec<&str> = names_owned.iter().map(|s| s.as_str()).collect();
    let values: Vec<[LaurentPoly; 2]> = (0..rows)
        .map(|r| {
            [
                LaurentPoly::variable(&names, 2 * r),
                LaurentPoly::variable(&names, 2 * r + 1),
            ]
        })
        .collect();
    DoubleZigzag::aligned(n, values)
}

/// Variant table over a fundamental domain of 2n columns. Row indices
/// run 1..=n-2; rows 1 and n-2 are all ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantTable<V> {
    n: usize,
    middle: Vec<Vec<V>>, // rows 2..=n-3, each 2n wide
    one: V,
}

impl<V: ExchangeRing> VariantTable<V> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn period(&self) -> usize {
        2 * self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &V {
        assert!(row >= 1 && row <= self.n - 2, "row out of range");
        let col = col % (2 * self.n);
        if row == 1 || row == self.n - 2 {
            &self.one
        } else {
            &self.middle[row - 2][col]
        }
    }

    pub fn rows(&self) -> Vec<Vec<V>> {
        (1..=self.n - 2)
            .map(|r| (0..2 * self.n).map(|c| self.entry(r, c).clone()).collect())
            .collect()
    }

    /// Mutate one cell; used by negative controls in tests and nowhere
    /// else in anger.
    pub fn perturb(&mut self, row: usize, col: usize, v: V) {
        assert!(row >= 2 && row <= self.n - 3);
        let col = col % (2 * self.n);
        self.middle[row - 2][col] = v;
    }
}

/// Build the table by propagating the sideways form D = (AE + C)/B from
/// the double zig-zag until 2n columns (plus a verification overlap) are
/// filled; the wrap-around equality is checked before the fundamental
/// domain is stored.
pub fn variant_from_double_zigzag<V: ExchangeRing>(
    dz: &DoubleZigzag<V>,
) -> Result<VariantTable<V>, VariantError> {
    let n = dz.n;
    let m = n - 4;
    let one = dz.values[0][0].one_like();
    let width = 2 * n as i64 + 2;
    // Known interval per middle row: columns start..=right, values in
    // absolute column coordinates.
    let mut right: Vec<i64> = dz.start_cols.iter().map(|c| c + 1).collect();
    let mut vals: Vec<std::collections::BTreeMap<i64, V>> = (0..m)
        .map(|r| {
            let mut map = std::collections::BTreeMap::new();
            map.insert(dz.start_cols[r], dz.values[r][0].clone());
            map.insert(dz.start_cols[r] + 1, dz.values[r][1].clone());
            map
        })
        .collect();

    let target: Vec<i64> = dz.start_cols.iter().map(|c| c + width - 1).collect();
    while (0..m).any(|r| right[r] < target[r]) {
        // The row with the smallest frontier can always advance.
        let r = (0..m)
            .filter(|&r| right[r] < target[r])
            .min_by_key(|&r| right[r])
            .expect("some row below target");
        let c = right[r];
        let above = if r == 0 { one.clone() } else { vals[r - 1][&c].clone() };
        let below = if r + 1 == m { one.clone() } else { vals[r + 1][&c].clone() };
        let center = vals[r][&c].clone();
        let left = vals[r][&(c - 1)].clone();
        if left.is_zero_value() {
            return Err(VariantError::Division { row: r + 2, col: c - 1 });
        }
        let next = above
            .times(&below)
            .plus(&center)
            .try_div(&left)
            .map_err(|_| VariantError::Division { row: r + 2, col: c + 1 })?;
        vals[r].insert(c + 1, next);
        right[r] = c + 1;
    }

    // Wrap check: the filled strip repeats with period 2n.
    let p = 2 * n as i64;
    for r in 0..m {
        for c in dz.start_cols[r]..=(target[r] - p) {
            if vals[r][&c] != vals[r][&(c + p)] {
                return Err(VariantError::Division { row: r + 2, col: c });
            }
        }
    }

    let middle: Vec<Vec<V>> = (0..m)
        .map(|r| {
            (0..p)
                .map(|c| {
                    // Shift into the filled window before reducing mod 2n.
                    let mut abs = c;
                    while abs < dz.start_cols[r] {
                        abs += p;
                    }
                    vals[r][&abs].clone()
                })
                .collect()
        })
        .collect();
    Ok(VariantTable { n, middle, one })
}

/// Smallest shift 1 <= k <= 2n after which the double zig-zag values
/// recur in the generated table.
pub fn zigzag_return_period<V: ExchangeRing>(dz: &DoubleZigzag<V>) -> Result<usize, VariantError> {
    let n = dz.n;
    let t = variant_from_double_zigzag(dz)?;
    'shift: for k in 1..=2 * n {
        for (r, row_vals) in dz.values.iter().enumerate() {
            let row = r + 2;
            let c0 = dz.start_cols[r].rem_euclid(2 * n as i64) as usize;
            for (off, v) in row_vals.iter().enumerate() {
                if t.entry(row, c0 + off + k) != v {
                    continue 'shift;
                }
            }
        }
        return Ok(k);
    }
    unreachable!("period 2n always returns the seed");
}

/// Report of the variant checks over the cyclic fundamental domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantReport {
    pub n: usize,
    /// Stencil centers (row, col) where A*E != B*D - C.
    pub relation_failures: Vec<(usize, usize)>,
    pub glide_ok: bool,
    pub positive: bool,
    pub integral: Option<bool>,
}

impl VariantReport {
    pub fn passed(&self) -> bool {
        self.relation_failures.is_empty()
            && self.glide_ok
            && self.positive
            && self.integral.unwrap_or(true)
    }
}

/// Check the five-point relation at every cyclic stencil (which includes
/// period 2n), glide reflection (row r against row n-1-r shifted by n),
/// positivity, and integrality.
pub fn variant_verify<V: FriezeValue>(t: &VariantTable<V>) -> VariantReport {
    let n = t.n();
    let p = 2 * n;
    let mut failures = Vec::new();
    for row in 2..=n - 3 {
        for col in 0..p {
            let a = t.entry(row - 1, col);
            let b = t.entry(row, (col + p - 1) % p);
            let c = t.entry(row, col);
            let d = t.entry(row, (col + 1) % p);
            let e = t.entry(row + 1, col);
            if a.times(e) != b.times(d).minus(c) {
                failures.push((row, col));
            }
        }
    }
    let glide_ok = (1..=n - 2).all(|row| {
        (0..p).all(|col| t.entry(row, col) == t.entry(n - 1 - row, (col + n) % p))
    });
    let mut positive = true;
    let mut integrals: Vec<Option<bool>> = Vec::new();
    for row in 1..=n - 2 {
        for col in 0..p {
            let v = t.entry(row, col);
            positive &= v.is_positive_value();
            integrals.push(v.is_integral());
        }
    }
    let integral = if integrals.iter().all(|x| x.is_none()) {
        None
    } else {
        Some(integrals.iter().all(|x| x.unwrap_or(true)))
    };
    VariantReport {
        n,
        relation_failures: failures,
        glide_ok,
        positive,
        integral,
    }
}

/// Outcome of a bounded enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub n: usize,
    pub bound: u64,
    /// Classes up to horizontal translation and glide reflection.
    pub count: usize,
    /// Classes when the left-right mirror is added to the group.
    pub count_with_mirror: usize,
    /// Counts seen while raising the bound (auto mode only).
    pub history: Vec<(u64, usize)>,
    pub stable: bool,
    /// Largest entry over all tables found.
    pub max_entry: u64,
}

impl Enumeration {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "bound": self.bound,
            "count": self.count,
            "countWithMirror": self.count_with_mirror,
            "stable": self.stable,
            "history": self.history,
            "maxEntry": self.max_entry,
            "note": "counts mirror the paper's non-rigorous computation; \
                     bound stability is reported, not completeness",
        })
    }
}

// Fast integer rollout of an aligned seed. Returns the middle rows over
// columns 0..2n when the seed generates a positive-integer table of
// period 2n, None when it dies. Falls back to BigInt on i128 overflow.
fn rollout(n: usize, seed: &[[i128; 2]]) -> Option<Vec<Vec<i128>>> {
    let m = n - 4;
    let width = 2 * n + 2;
    let mut cols: Vec<Vec<i128>> = vec![seed.iter().map(|p| p[0]).collect()];
    cols.push(seed.iter().map(|p| p[1]).collect());
    for c in 1..width - 1 {
        let mut next = vec![0i128; m];
        for r in 0..m {
            let above = if r == 0 { 1 } else { cols[c][r - 1] };
            let below = if r + 1 == m { 1 } else { cols[c][r + 1] };
            let center = cols[c][r];
            let left = cols[c - 1][r];
            let num = above.checked_mul(below)?.checked_add(center)?;
            if left == 0 || num % left != 0 {
                return None;
            }
            let v = num / left;
            if v <= 0 {
                return None;
            }
            next[r] = v;
        }
        cols.push(next);
    }
    // Period 2n.
    for c in 0..2 {
        if cols[c] != cols[c + 2 * n] {
            return None;
        }
    }
    let rows = (0..m)
        .map(|r| (0..2 * n).map(|c| cols[c][r]).collect())
        .collect();
    Some(rows)
}

// BigInt rollout for the rare seeds that overflow i128 before dying.
fn rollout_big(n: usize, seed: &[[i128; 2]]) -> Option<Vec<Vec<i128>>> {
    let m = n - 4;
    let width = 2 * n + 2;
    let mut cols: Vec<Vec<BigInt>> =
        vec![seed.iter().map(|p| BigInt::from(p[0])).collect()];
    cols.push(seed.iter().map(|p| BigInt::from(p[1])).collect());
    for c in 1..width - 1 {
        let mut next = Vec::with_capacity(m);
        for r in 0..m {
            let above = if r == 0 { BigInt::one() } else { cols[c][r - 1].clone() };
            let below = if r + 1 == m { BigInt::one() } else { cols[c][r + 1].clone() };
            let num = above * below + &cols[c][r];
            let left = &cols[c - 1][r];
            if left.is_zero() || !(&num % left).is_zero() {
                return None;
            }
            let v = num / left;
            if !v.is_positive() {
                return None;
            }
            next.push(v);
        }
        cols.push(next);
    }
    for c in 0..2 {
        if cols[c] != cols[c + 2 * n] {
            return None;
        }
    }
    // A periodic table's entries all appear among the seeds rolled over
    // one period, so they fit in i128 iff the restart matched; convert.
    let mut rows = Vec::with_capacity(m);
    for r in 0..m {
        let mut row = Vec::with_capacity(2 * n);
        for c in 0..2 * n {
            row.push(i128::try_from(&cols[c][r]).ok()?);
        }
        rows.push(row);
    }
    Some(rows)
}

fn canonical_form(n: usize, rows: &[Vec<i128>], mirror: bool) -> Vec<i128> {
    let m = rows.len();
    let p = 2 * n;
    let mut best: Option<Vec<i128>> = None;
    let mut consider = |serialized: Vec<i128>| {
        if best.as_ref().map(|b| serialized < *b).unwrap_or(true) {
            best = Some(serialized);
        }
    };
    for shift in 0..p {
        // Translation.
        let mut ser = Vec::with_capacity(m * p);
        for row in rows {
            for c in 0..p {
                ser.push(row[(c + shift) % p]);
            }
        }
        consider(ser);
        // Glide: rows reversed, shifted by n more.
        let mut ser = Vec::with_capacity(m * p);
        for r in (0..m).rev() {
            for c in 0..p {
                ser.push(rows[r][(c + shift + n) % p]);
            }
        }
        consider(ser);
        if mirror {
            let mut ser = Vec::with_capacity(m * p);
            for row in rows {
                for c in 0..p {
                    ser.push(row[(p + shift - c) % p]);
                }
            }
            consider(ser);
            let mut ser = Vec::with_capacity(m * p);
            for r in (0..m).rev() {
                for c in 0..p {
                    ser.push(rows[r][(p + shift + n - c) % p]);
                }
            }
            consider(ser);
        }
    }
    best.expect("nonempty orbit")
}

/// Enumerate positive-integer variant tables by searching aligned double
/// zig-zag seeds with entries in 1..=bound, deduplicated up to
/// horizontal translation and glide reflection (and, separately, with
/// the left-right mirror added).
pub fn variant_enumerate(n: usize, bound: u64) -> Result<Enumeration, VariantError> {
    if n < 5 {
        return Err(VariantError::TooSmall(n));
    }
    let m = n - 4;
    let b = bound as i128;
    let mut seed = vec![[1i128, 1i128]; m];
    let mut found: BTreeSet<Vec<i128>> = BTreeSet::new();
    let mut found_mirror: BTreeSet<Vec<i128>> = BTreeSet::new();
    let mut max_entry = 0u64;

    // After choosing rows 0..=r of the seed, the column-2 value of row
    // r-1 (or of row m-1 once everything is chosen) is determined; prune
    // on its integrality and positivity.
    fn check_partial(n: usize, seed: &[[i128; 2]], upto: usize) -> bool {
        let m = n - 4;
        for r in 0..=upto {
            let deps_ready = (r == 0 || r - 1 <= upto) && (r + 1 == m || r + 1 <= upto);
            if !deps_ready {
                continue;
            }
            let above = if r == 0 { 1 } else { seed[r - 1][1] };
            let below = if r + 1 == m { 1 } else { seed[r + 1][1] };
            let num = match above.checked_mul(below).and_then(|x| x.checked_add(seed[r][1])) {
                Some(x) => x,
                None => return false,
            };
            if num % seed[r][0] != 0 || num / seed[r][0] <= 0 {
                return false;
            }
        }
        true
    }

    fn dfs(
        n: usize,
        b: i128,
        r: usize,
        seed: &mut Vec<[i128; 2]>,
        found: &mut BTreeSet<Vec<i128>>,
        found_mirror: &mut BTreeSet<Vec<i128>>,
        max_entry: &mut u64,
    ) {
        let m = n - 4;
        if r == m {
            let rows = match rollout(n, seed) {
                Some(rows) => Some(rows),
                None => rollout_big(n, seed),
            };
            if let Some(rows) = rows {
                for row in &rows {
                    for &v in row {
                        *max_entry = (*max_entry).max(v as u64);
                    }
                }
                found.insert(canonical_form(n, &rows, false));
                found_mirror.insert(canonical_form(n, &rows, true));
            }
            return;
        }
        for x in 1..=b {
            for y in 1..=b {
                seed[r] = [x, y];
                if check_partial(n, seed, r) {
                    dfs(n, b, r + 1, seed, found, found_mirror, max_entry);
                }
            }
        }
        seed[r] = [1, 1];
    }

    dfs(n, b, 0, &mut seed, &mut found, &mut found_mirror, &mut max_entry);
    Ok(Enumeration {
        n,
        bound,
        count: found.len(),
        count_with_mirror: found_mirror.len(),
        history: vec![(bound, found.len())],
        stable: false,
        max_entry,
    })
}

/// Default-bound enumeration: start from twice the largest entry seen at
/// the previous n (4 at the base), then double until the count stops
/// changing. Reports the history alongside the counts, since the paper
/// itself flags the computation as non-rigorous.
pub fn variant_enumerate_auto(n: usize) -> Result<Enumeration, VariantError> {
    if n < 5 {
        return Err(VariantError::TooSmall(n));
    }
    let mut bound = if n == 5 {
        4
    } else {
        2 * variant_enumerate_auto(n - 1)?.max_entry.max(2)
    };
    let mut history = Vec::new();
    let mut current = variant_enumerate(n, bound)?;
    history.push((bound, current.count));
    loop {
        let next_bound = bound * 2;
        if next_bound > 512 {
            return Err(VariantError::Unstable(next_bound));
        }
        let next = variant_enumerate(n, next_bound)?;
        history.push((next_bound, next.count));
        if next.count == current.count {
            return Ok(Enumeration {
                n,
                bound: next_bound,
                count: next.count,
                count_with_mirror: next.count_with_mirror,
                history,
                stable: true,
                max_entry: next.max_entry,
            });
        }
        bound = next_bound;
        current = next;
    }
}

/// Report of the symbolic experiment at n in {5, 6, 7}.
#[derive(Debug, Clone)]
pub struct SymbolicReport {
    pub n: usize,
    /// Every entry was an exact Laurent quotient.
    pub laurent_ok: bool,
    /// Where a division failed, if one did.
    pub failure: Option<(usize, i64)>,
    pub positive: bool,
    pub period_ok: bool,
    pub glide_ok: bool,
    pub table: Option<VariantTable<LaurentPoly>>,
}

/// Propagate a fully formal double zig-zag and report Laurentness,
/// positivity, and the symmetries — experimental evidence for the
/// conjecture, never a proof claim.
pub fn variant_symbolic(n: usize) -> Result<SymbolicReport, VariantError> {
    if !(5..=7).contains(&n) {
        return Err(VariantError::OutOfRange(n));
    }
    let dz = formal_zigzag(n)?;
    match variant_from_double_zigzag(&dz) {
        Err(VariantError::Division { row, col }) => Ok(SymbolicReport {
            n,
            laurent_ok: false,
            failure: Some((row, col)),
            positive: false,
            period_ok: false,
            glide_ok: false,
            table: None,
        }),
        Err(e) => Err(e),
        Ok(t) => {
            let report = variant_verify(&t);
            Ok(SymbolicReport {
                n,
                laurent_ok: true,
                failure: None,
                positive: report.positive,
                period_ok: report.relation_failures.is_empty(),
                glide_ok: report.glide_ok,
                table: Some(t),
            })
        }
    }
}
