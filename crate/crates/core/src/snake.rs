//! Snake graphs as codes over {1,2}, with five equivalent counting
//! models: the matching recurrence, AB matrix products, LR path models,
//! strip tilings with multiplicities, and explicit square-snake graphs.
//!
//! Conventions: a snake of order k is a chain of k boxes; its code has
//! length k-2, so the empty code stands for the order-2 snake (two
//! boxes, 3 matchings). The order-0 snake (a single edge) has exactly
//! one matching and the order-1 snake (one box) has two; see
//! [`matchings_of_order`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::exact::{LaurentPoly, Mat2};
use crate::matchings::{Dag, MatchGraph};
use crate::polygon::Triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnakeError {
    #[error("snake codes use only symbols 1 and 2, got {0}")]
    BadSymbol(char),
    #[error("word must be nonempty")]
    Empty,
    #[error("word too short: need length >= {0}")]
    TooShort(usize),
    #[error("strip multiplicities must be >= 1")]
    BadMultiplicity,
}

/// Word over {1,2} describing a chain of boxes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SnakeCode(Vec<u8>);

impl SnakeCode {
    pub fn new(symbols: &[u8]) -> Result<Self, SnakeError> {
        for &s in symbols {
            if s != 1 && s != 2 {
                return Err(SnakeError::BadSymbol((b'0' + s) as char));
            }
        }
        Ok(SnakeCode(symbols.to_vec()))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Order of the snake this code describes.
    pub fn order(&self) -> usize {
        self.0.len() + 2
    }
}

impl FromStr for SnakeCode {
    type Err = SnakeError;

    fn from_str(s: &str) -> Result<Self, SnakeError> {
        let mut symbols = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '1' => symbols.push(1),
                '2' => symbols.push(2),
                other => return Err(SnakeError::BadSymbol(other)),
            }
        }
        Ok(SnakeCode(symbols))
    }
}

impl fmt::Display for SnakeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ab {
    A,
    B,
}

/// Word over {A,B}; length = snake order - 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbWord(Vec<Ab>);

impl AbWord {
    pub fn new(letters: Vec<Ab>) -> Self {
        AbWord(letters)
    }

    pub fn letters(&self) -> &[Ab] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Swap every A for B and vice versa.
    pub fn swapped(&self) -> AbWord {
        AbWord(
            self.0
                .iter()
                .map(|l| match l {
                    Ab::A => Ab::B,
                    Ab::B => Ab::A,
                })
                .collect(),
        )
    }
}

impl FromStr for AbWord {
    type Err = SnakeError;

    fn from_str(s: &str) -> Result<Self, SnakeError> {
        s.chars()
            .map(|c| match c {
                'A' | 'a' => Ok(Ab::A),
                'B' | 'b' => Ok(Ab::B),
                other => Err(SnakeError::BadSymbol(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(AbWord)
    }
}

impl fmt::Display for AbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", if *l == Ab::A { 'A' } else { 'B' })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Lr {
    L,
    R,
}

/// Word over {L,R}; length = snake order - 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LrWord(Vec<Lr>);

impl LrWord {
    pub fn new(letters: Vec<Lr>) -> Self {
        LrWord(letters)
    }

    pub fn letters(&self) -> &[Lr] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromStr for LrWord {
    type Err = SnakeError;

    fn from_str(s: &str) -> Result<Self, SnakeError> {
        s.chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Lr::L),
                'R' | 'r' => Ok(Lr::R),
                other => Err(SnakeError::BadSymbol(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(LrWord)
    }
}

impl fmt::Display for LrWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", if *l == Lr::L { 'L' } else { 'R' })?;
        }
        Ok(())
    }
}

/// Matching count of snakes of order 0 (an edge), 1 (a box), 2 (two
/// boxes): 1, 2, 3. Larger orders need a code.
pub fn matchings_of_order(order: usize) -> Option<BigInt> {
    match order {
        0 => Some(BigInt::one()),
        1 => Some(BigInt::from(2)),
        2 => Some(BigInt::from(3)),
        _ => None,
    }
}

/// Matching count from the code alone: m1 = 2, m2 = 3, then each '1'
/// extends in Fibonacci progression and each '2' in arithmetic
/// progression.
pub fn snake_matchings(code: &SnakeCode) -> BigInt {
    let mut prev = BigInt::from(2);
    let mut cur = BigInt::from(3);
    for &s in code.symbols() {
        let next = match s {
            1 => &cur + &prev,
            _ => 2u32 * &cur - &prev,
        };
        prev = cur;
        cur = next;
    }
    cur
}

/// Code of the triangle path from i to j: one symbol per window of four
/// consecutive triangles, '1' when they have no common vertex and '2'
/// when they do. Paths of up to three triangles give the empty code.
pub fn code_from_triangulation(
    t: &Triangulation,
    i: usize,
    j: usize,
) -> Result<SnakeCode, crate::polygon::PolygonError> {
    let path = t.triangle_path(i, j)?;
    let mut symbols = Vec::new();
    for w in path.windows(4) {
        let common = w[0]
            .iter()
            .any(|v| w[1].contains(v) && w[2].contains(v) && w[3].contains(v));
        symbols.push(if common { 2 } else { 1 });
    }
    Ok(SnakeCode(symbols))
}

pub fn mat_a() -> Mat2 {
    Mat2::new(0, 1, 1, 1)
}

pub fn mat_b() -> Mat2 {
    Mat2::new(1, 1, 1, 0)
}

pub fn mat_l() -> Mat2 {
    Mat2::new(1, 1, 0, 1)
}

pub fn mat_r() -> Mat2 {
    Mat2::new(1, 0, 1, 1)
}

/// Product of the A/B factors; the entry sum counts the matchings of the
/// corresponding snake.
pub fn ab_product(w: &AbWord) -> Result<Mat2, SnakeError> {
    if w.is_empty() {
        return Err(SnakeError::Empty);
    }
    Ok(w.letters().iter().fold(Mat2::identity(), |acc, l| {
        acc.mul(&match l {
            Ab::A => mat_a(),
            Ab::B => mat_b(),
        })
    }))
}

pub fn lr_product(w: &LrWord) -> Result<Mat2, SnakeError> {
    if w.is_empty() {
        return Err(SnakeError::Empty);
    }
    Ok(w.letters().iter().fold(Mat2::identity(), |acc, l| {
        acc.mul(&match l {
            Lr::L => mat_l(),
            Lr::R => mat_r(),
        })
    }))
}

/// Code read off an AB word: equal adjacent factors give '1', distinct
/// ones give '2'.
pub fn ab_to_code(w: &AbWord) -> Result<SnakeCode, SnakeError> {
    if w.len() < 2 {
        return Err(SnakeError::TooShort(2));
    }
    Ok(SnakeCode(
        w.letters()
            .windows(2)
            .map(|p| if p[0] == p[1] { 1 } else { 2 })
            .collect(),
    ))
}

/// An AB word whose code is the given one (A-initial reading).
pub fn code_to_ab(code: &SnakeCode) -> AbWord {
    let mut letters = vec![Ab::A];
    for &s in code.symbols() {
        let last = *letters.last().unwrap();
        letters.push(match (last, s) {
            (l, 1) => l,
            (Ab::A, _) => Ab::B,
            (Ab::B, _) => Ab::A,
        });
    }
    AbWord(letters)
}

/// Translate an AB product to an LR product: two adjacent LR factors are
/// equal exactly when the corresponding AB factors are not. The first
/// letter is a free choice; `r_initial` selects the R-initial reading.
pub fn ab_to_lr(w: &AbWord, r_initial: bool) -> Result<LrWord, SnakeError> {
    if w.is_empty() {
        return Err(SnakeError::Empty);
    }
    let mut letters = vec![if r_initial { Lr::R } else { Lr::L }];
    for pair in w.letters().windows(2) {
        let last = *letters.last().unwrap();
        let flip = pair[0] == pair[1];
        letters.push(match (last, flip) {
            (l, false) => l,
            (Lr::L, true) => Lr::R,
            (Lr::R, true) => Lr::L,
        });
    }
    Ok(LrWord(letters))
}

/// Symbol-wise swap 1 <-> 2; an involution.
pub fn dual_code(code: &SnakeCode) -> SnakeCode {
    SnakeCode(
        code.symbols()
            .iter()
            .map(|&s| if s == 1 { 2 } else { 1 })
            .collect(),
    )
}

/// The planar paths graph of an LR word (the augmented two-row picture
/// with a unique source on the upper left and a unique target on the
/// lower right), as a DAG.
///
/// Vertices: 0 = source, 1..=k+1 top row, k+2..=2k+2 bottom row,
/// 2k+3 = target, where k = word length.
pub fn lr_word_dag(w: &LrWord) -> Result<Dag, SnakeError> {
    if w.is_empty() {
        return Err(SnakeError::Empty);
    }
    let k = w.len();
    let top = |i: usize| 1 + i; // i in 0..=k
    let bot = |i: usize| k + 2 + i;
    let source = 0;
    let target = 2 * k + 3;
    let mut arcs = Vec::new();
    arcs.push((source, top(0)));
    arcs.push((source, bot(0)));
    for i in 0..k {
        arcs.push((top(i), top(i + 1)));
        arcs.push((bot(i), bot(i + 1)));
        match w.letters()[i] {
            // L adds the upward diagonal, R the downward one.
            Lr::L => arcs.push((bot(i), top(i + 1))),
            Lr::R => arcs.push((top(i), bot(i + 1))),
        }
    }
    arcs.push((top(k), target));
    arcs.push((bot(k), target));
    Ok(Dag {
        vertices: 2 * k + 4,
        arcs,
        sources: vec![source],
        targets: vec![target],
    })
}

/// Number of source-to-target paths in the augmented planar path graph,
/// by the leftward-neighbor marking rule. Equals the entry sum of the LR
/// matrix product.
pub fn lr_paths_count(w: &LrWord) -> Result<BigInt, SnakeError> {
    if w.is_empty() {
        return Err(SnakeError::Empty);
    }
    let k = w.len();
    let mut top = vec![BigInt::one(); k + 1];
    let mut bot = vec![BigInt::one(); k + 1];
    for i in 0..k {
        top[i + 1] = top[i].clone();
        bot[i + 1] = bot[i].clone();
        match w.letters()[i] {
            Lr::L => top[i + 1] += &bot[i],
            Lr::R => bot[i + 1] += &top[i],
        }
    }
    Ok(&top[k] + &bot[k])
}

/// Run-length multiplicities of the contracted straight snake: duplicate
/// the first and last symbols, then write down the run lengths. Their sum
/// is the snake order + 1.
pub fn run_length_multiplicities(w: &LrWord) -> Result<Vec<u64>, SnakeError> {
    if w.is_empty() {
        return Err(SnakeError::Empty);
    }
    let mut extended = Vec::with_capacity(w.len() + 2);
    extended.push(w.letters()[0]);
    extended.extend_from_slice(w.letters());
    extended.push(*w.letters().last().unwrap());
    let mut runs = Vec::new();
    let mut cur = extended[0];
    let mut len = 0u64;
    for &l in &extended {
        if l == cur {
            len += 1;
        } else {
            runs.push(len);
            cur = l;
            len = 1;
        }
    }
    runs.push(len);
    Ok(runs)
}

/// Coverings of a 1-by-k strip by stackable unit squares (stack height
/// 1..=r_i at cell i) and non-stackable dominoes.
pub fn strip_tilings(r: &[u64]) -> Result<BigInt, SnakeError> {
    if r.is_empty() {
        return Err(SnakeError::Empty);
    }
    if r.iter().any(|&x| x == 0) {
        return Err(SnakeError::BadMultiplicity);
    }
    // f(i) = r_i f(i-1) + f(i-2): stack at cell i, or domino over the
    // last two cells.
    let mut prev = BigInt::one();
    let mut cur = BigInt::from(r[0]);
    for &ri in &r[1..] {
        let next = ri * &cur + &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Square-grid normal form of a snake: boxes chained rightward (A) or
/// downward (B). Rows grow downward.
#[derive(Debug, Clone)]
pub struct SquareSnake {
    pub boxes: Vec<(i64, i64)>,
    pub vertices: Vec<(i64, i64)>,
    pub edges: Vec<((i64, i64), (i64, i64))>,
}

/// Lay out the snake of a code on the square grid.
pub fn square_snake(code: &SnakeCode) -> SquareSnake {
    let ab = code_to_ab(code);
    let mut boxes = vec![(0i64, 0i64)];
    let mut pos = (0i64, 0i64);
    for l in ab.letters() {
        match l {
            Ab::A => pos.0 += 1,
            Ab::B => pos.1 += 1,
        }
        boxes.push(pos);
    }
    let mut vertices = std::collections::BTreeSet::new();
    let mut edges = std::collections::BTreeSet::new();
    for &(c, r) in &boxes {
        let corners = [(c, r), (c + 1, r), (c, r + 1), (c + 1, r + 1)];
        for p in corners {
            vertices.insert(p);
        }
        for (p, q) in [
            ((c, r), (c + 1, r)),
            ((c, r + 1), (c + 1, r + 1)),
            ((c, r), (c, r + 1)),
            ((c + 1, r), (c + 1, r + 1)),
        ] {
            edges.insert((p.min(q), p.max(q)));
        }
    }
    SquareSnake {
        boxes,
        vertices: vertices.into_iter().collect(),
        edges: edges.into_iter().collect(),
    }
}

fn vertex_id(p: (i64, i64)) -> u64 {
    ((p.0 + 512) as u64) << 32 | ((p.1 + 512) as u64)
}

/// The square snake as an unweighted bipartite matching graph, colored
/// by coordinate-sum parity.
pub fn square_snake_graph(code: &SnakeCode) -> MatchGraph {
    let s = square_snake(code);
    let blacks: Vec<u64> = s
        .vertices
        .iter()
        .filter(|p| (p.0 + p.1).rem_euclid(2) == 0)
        .map(|&p| vertex_id(p))
        .collect();
    let whites: Vec<u64> = s
        .vertices
        .iter()
        .filter(|p| (p.0 + p.1).rem_euclid(2) == 1)
        .map(|&p| vertex_id(p))
        .collect();
    let mut g = MatchGraph::new(&[], blacks, whites);
    let one = LaurentPoly::one(&[]);
    for &(p, q) in &s.edges {
        let (b, w) = if (p.0 + p.1).rem_euclid(2) == 0 {
            (p, q)
        } else {
            (q, p)
        };
        g.add_edge(vertex_id(b), vertex_id(w), one.clone(), 1);
    }
    g
}

/// Head-to-tail path count in the square snake: monotone paths from the
/// top-left corner to the bottom-right corner, counted by summing marks
/// of earlier neighbors level by level.
pub fn square_snake_path_count(code: &SnakeCode) -> BigInt {
    let s = square_snake(code);
    let mut marks: std::collections::BTreeMap<(i64, i64), BigInt> = Default::default();
    let mut order: Vec<(i64, i64)> = s.vertices.clone();
    order.sort_by_key(|p| (p.0 + p.1, p.0));
    for &p in &order {
        let mut m = BigInt::from(0u32);
        for &(a, b) in &s.edges {
            let (lo, hi) = (a, b);
            if hi == p && lo.0 + lo.1 == p.0 + p.1 - 1 {
                m += &marks[&lo];
            }
            if lo == p && hi.0 + hi.1 == p.0 + p.1 - 1 {
                m += &marks[&hi];
            }
        }
        if m == BigInt::from(0u32) {
            m = BigInt::one();
        }
        marks.insert(p, m);
    }
    let tail = *order.last().unwrap();
    marks[&tail].clone()
}

/// ASCII rendering of the square-grid normal form.
pub fn render_square_snake(code: &SnakeCode) -> String {
    let s = square_snake(code);
    let min_c = s.boxes.iter().map(|b| b.0).min().unwrap();
    let max_c = s.boxes.iter().map(|b| b.0).max().unwrap();
    let min_r = s.boxes.iter().map(|b| b.1).min().unwrap();
    let max_r = s.boxes.iter().map(|b| b.1).max().unwrap();
    let mut out = String::new();
    for r in min_r..=max_r {
        let mut top = String::new();
        let mut mid = String::new();
        for c in min_c..=max_c {
            if s.boxes.contains(&(c, r)) {
                top.push_str("+--");
                mid.push_str("|  ");
            } else if s.boxes.contains(&(c, r - 1)) {
                top.push_str("+--");
                mid.push_str("   ");
            } else {
                top.push_str("   ");
                mid.push_str("   ");
            }
        }
        if s.boxes.contains(&(max_c, r)) || s.boxes.contains(&(max_c, r - 1)) {
            top.push('+');
        }
        if s.boxes.contains(&(max_c, r)) {
            mid.push('|');
        }
        out.push_str(top.trim_end());
        out.push('\n');
        out.push_str(mid.trim_end());
        out.push('\n');
    }
    let mut bottom = String::new();
    for c in min_c..=max_c {
        if s.boxes.contains(&(c, max_r)) {
            bottom.push_str("+--");
        } else {
            bottom.push_str("   ");
        }
    }
    if s.boxes.contains(&(max_c, max_r)) {
        bottom.push('+');
    }
    out.push_str(bottom.trim_end());
    out.push('\n');
    out
}

/// All five model values for one code. They agree; `all_models` computes
/// each through its own route.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelValues {
    pub recurrence: BigInt,
    pub ab_entry_sum: BigInt,
    pub lr_paths: BigInt,
    pub strip: BigInt,
    pub graph_matchings: BigInt,
}

impl ModelValues {
    pub fn all_equal(&self) -> bool {
        self.recurrence == self.ab_entry_sum
            && self.recurrence == self.lr_paths
            && self.recurrence == self.strip
            && self.recurrence == self.graph_matchings
    }
}

pub fn all_models(code: &SnakeCode) -> ModelValues {
    let ab = code_to_ab(code);
    let lr = ab_to_lr(&ab, false).expect("nonempty by construction");
    ModelValues {
        recurrence: snake_matchings(code),
        ab_entry_sum: ab_product(&ab).expect("nonempty").entry_sum(),
        lr_paths: lr_paths_count(&lr).expect("nonempty"),
        strip: strip_tilings(&run_length_multiplicities(&lr).expect("nonempty"))
            .expect("valid multiplicities"),
        graph_matchings: square_snake_graph(code)
            .matching_sum()
            .expect("snake graphs are balanced")
            .as_constant()
            .expect("unit weights give a constant"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::enumerate_triangulations;

    fn code(s: &str) -> SnakeCode {
        s.parse().unwrap()
    }

    #[test]
    fn recurrence_golden_values() {
        assert_eq!(snake_matchings(&code("2212")), BigInt::from(13));
        assert_eq!(snake_matchings(&code("")), BigInt::from(3));
        // Fan snakes with all-2 codes have n+1 matchings at order n.
        for len in 0..8 {
            let c = SnakeCode::new(&vec![2; len]).unwrap();
            assert_eq!(snake_matchings(&c), BigInt::from(len + 3));
        }
        assert_eq!(snake_matchings(&code("1121")), BigInt::from(19));
    }

    #[test]
    fn order_constants() {
        assert_eq!(matchings_of_order(0), Some(BigInt::from(1)));
        assert_eq!(matchings_of_order(1), Some(BigInt::from(2)));
        assert_eq!(matchings_of_order(2), Some(BigInt::from(3)));
        assert_eq!(matchings_of_order(3), None);
    }

    #[test]
    fn ab_product_golden() {
        let w: AbWord = "ABAAB".parse().unwrap();
        let m = ab_product(&w).unwrap();
        assert_eq!(m, Mat2::new(2, 1, 7, 3));
        assert_eq!(m.entry_sum(), BigInt::from(13));
        let a: AbWord = "A".parse().unwrap();
        assert_eq!(ab_product(&a).unwrap().entry_sum(), BigInt::from(3));
        assert!(ab_product(&AbWord::new(vec![])).is_err());
    }

    #[test]
    fn ab_swap_flips_upside_down() {
        // Swapping A <-> B conjugates the product by the row swap
        // [[0,1],[1,0]]; the entry multiset and sum are preserved.
        let p = Mat2::new(0, 1, 1, 0);
        for len in 1..=7 {
            for bits in 0..(1u32 << len) {
                let w = AbWord::new(
                    (0..len)
                        .map(|i| if bits >> i & 1 == 0 { Ab::A } else { Ab::B })
                        .collect(),
                );
                let m = ab_product(&w).unwrap();
                let swapped = ab_product(&w.swapped()).unwrap();
                assert_eq!(p.mul(&m).mul(&p), swapped);
                assert_eq!(m.entry_sum(), swapped.entry_sum());
            }
        }
    }

    #[test]
    fn ab_code_translation() {
        let w: AbWord = "ABAAB".parse().unwrap();
        assert_eq!(ab_to_code(&w).unwrap(), code("2212"));
        assert_eq!(ab_to_code(&"AAAA".parse().unwrap()).unwrap(), code("111"));
        assert_eq!(ab_to_code(&"ABAB".parse().unwrap()).unwrap(), code("222"));
        assert!(ab_to_code(&"A".parse().unwrap()).is_err());
        // code_to_ab inverts it (A-initial reading).
        assert_eq!(code_to_ab(&code("2212")).to_string(), "ABAAB");
    }

    #[test]
    fn ab_to_lr_golden() {
        let w: AbWord = "ABAAB".parse().unwrap();
        assert_eq!(ab_to_lr(&w, false).unwrap().to_string(), "LLLRR");
        assert_eq!(ab_to_lr(&w, true).unwrap().to_string(), "RRRLL");
        let straight: AbWord = "AAAA".parse().unwrap();
        assert_eq!(ab_to_lr(&straight, false).unwrap().to_string(), "LRLR");
        assert_eq!(ab_to_lr(&straight, true).unwrap().to_string(), "RLRL");
        // Entry sums agree between the two readings and the AB product.
        for bits in 0..(1u32 << 6) {
            let w = AbWord::new(
                (0..6)
                    .map(|i| if bits >> i & 1 == 0 { Ab::A } else { Ab::B })
                    .collect(),
            );
            let s = ab_product(&w).unwrap().entry_sum();
            for r in [false, true] {
                let lr = ab_to_lr(&w, r).unwrap();
                assert_eq!(lr_product(&lr).unwrap().entry_sum(), s);
            }
        }
    }

    #[test]
    fn lr_paths_golden() {
        assert_eq!(
            lr_paths_count(&"RRRLL".parse().unwrap()).unwrap(),
            BigInt::from(13)
        );
        assert_eq!(lr_paths_count(&"L".parse().unwrap()).unwrap(), BigInt::from(3));
        // Equality with the matrix entry sum on all words up to length 10.
        for len in 1..=10 {
            for bits in 0..(1u32 << len) {
                let w = LrWord::new(
                    (0..len)
                        .map(|i| if bits >> i & 1 == 0 { Lr::L } else { Lr::R })
                        .collect(),
                );
                assert_eq!(
                    lr_paths_count(&w).unwrap(),
                    lr_product(&w).unwrap().entry_sum()
                );
            }
        }
    }

    #[test]
    fn lr_dag_matches_marking_and_hexagon_snake() {
        let w: LrWord = "RRRLL".parse().unwrap();
        let dag = lr_word_dag(&w).unwrap();
        let g = crate::matchings::dag_to_matching_graph(&dag).unwrap();
        // 2 * 14 - 2 vertices, all 6-cycles in the drawing.
        assert_eq!(g.blacks().len() + g.whites().len(), 26);
        assert_eq!(
            g.matching_sum().unwrap().as_constant().unwrap(),
            BigInt::from(13)
        );
        // Contracting away degree-2 vertices leaves the two-cell
        // multigraph with multiplicities 4 and 3 on its glue edges.
        let contracted = g.contract_all_degree2();
        assert_eq!(contracted.blacks().len() + contracted.whites().len(), 4);
        let mut mults: Vec<u64> = contracted.edges().iter().map(|e| e.mult).collect();
        mults.sort_unstable();
        assert_eq!(mults, vec![1, 1, 3, 4]);
        assert_eq!(
            contracted.matching_sum().unwrap().as_constant().unwrap(),
            BigInt::from(13)
        );
    }

    #[test]
    fn dual_code_involution_and_values() {
        assert_eq!(dual_code(&code("2212")), code("1121"));
        assert_eq!(dual_code(&code("")), code(""));
        for bits in 0..(1u32 << 5) {
            let c = SnakeCode::new(
                &(0..5)
                    .map(|i| if bits >> i & 1 == 0 { 1 } else { 2 })
                    .collect::<Vec<_>>(),
            )
            .unwrap();
            assert_eq!(dual_code(&dual_code(&c)), c);
        }
    }

    #[test]
    fn duality_matchings_vs_paths() {
        // Matchings of a snake equal head-to-tail paths in its dual.
        for len in 0..=6 {
            for bits in 0..(1u32 << len) {
                let c = SnakeCode::new(
                    &(0..len)
                        .map(|i| if bits >> i & 1 == 0 { 1 } else { 2 })
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                assert_eq!(
                    snake_matchings(&c),
                    square_snake_path_count(&dual_code(&c)),
                    "code {c}"
                );
            }
        }
    }

    #[test]
    fn run_lengths_golden() {
        assert_eq!(
            run_length_multiplicities(&"RRRLL".parse().unwrap()).unwrap(),
            vec![4, 3]
        );
        assert_eq!(
            run_length_multiplicities(&"L".parse().unwrap()).unwrap(),
            vec![3]
        );
        for len in 1..=8 {
            for bits in 0..(1u32 << len) {
                let w = LrWord::new(
                    (0..len)
                        .map(|i| if bits >> i & 1 == 0 { Lr::L } else { Lr::R })
                        .collect(),
                );
                let runs = run_length_multiplicities(&w).unwrap();
                assert_eq!(runs.iter().sum::<u64>(), len as u64 + 2);
            }
        }
    }

    #[test]
    fn strip_tilings_golden() {
        assert_eq!(strip_tilings(&[4, 3]).unwrap(), BigInt::from(13));
        assert_eq!(strip_tilings(&[7]).unwrap(), BigInt::from(7));
        // All-ones strips count Fibonacci numbers.
        let mut fib = (BigInt::one(), BigInt::one());
        for k in 1..=10 {
            let expect = &fib.0 + &fib.1;
            assert_eq!(strip_tilings(&vec![1; k]).unwrap(), fib.1);
            fib = (fib.1, expect);
        }
        assert!(strip_tilings(&[]).is_err());
        assert!(strip_tilings(&[2, 0]).is_err());
    }

    #[test]
    fn code_from_figure5_nonagon() {
        // Find 9-gon triangulations whose full triangle path has code
        // 2212; the Figure 5 snake is one of them.
        let mut found = false;
        for t in enumerate_triangulations(9).unwrap() {
            for i in 1..=9 {
                for j in i + 1..=9 {
                    let path = t.triangle_path(i, j).unwrap();
                    if path.len() == 7 {
                        let c = code_from_triangulation(&t, i, j).unwrap();
                        if c == code("2212") {
                            found = true;
                        }
                    }
                }
            }
            if found {
                break;
            }
        }
        assert!(found, "some 9-gon triangulation realizes code 2212");
    }

    #[test]
    fn code_from_fan_and_short_paths() {
        let fan = Triangulation::new(7, &[(1, 3), (1, 4), (1, 5), (1, 6)]).unwrap();
        // All 5 fan triangles share vertex 1, so every window is case 2.
        assert_eq!(code_from_triangulation(&fan, 2, 7).unwrap(), code("22"));
        // A two-triangle path gives the empty code.
        let t = Triangulation::new(6, &[(2, 6), (2, 5), (3, 5)]).unwrap();
        assert_eq!(code_from_triangulation(&t, 2, 5).unwrap(), code(""));
    }

    #[test]
    fn model_equivalence_small() {
        for len in 0..=6 {
            for bits in 0..(1u32 << len) {
                let c = SnakeCode::new(
                    &(0..len)
                        .map(|i| if bits >> i & 1 == 0 { 1 } else { 2 })
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                let m = all_models(&c);
                assert!(m.all_equal(), "code {c}: {m:?}");
            }
        }
    }

    #[test]
    fn determinant_identities() {
        for len in 1..=8 {
            for bits in 0..(1u32 << len) {
                let w = AbWord::new(
                    (0..len)
                        .map(|i| if bits >> i & 1 == 0 { Ab::A } else { Ab::B })
                        .collect(),
                );
                let det = ab_product(&w).unwrap().det();
                let expect = if len % 2 == 0 { 1 } else { -1 };
                assert_eq!(det, BigInt::from(expect));
                let lr = ab_to_lr(&w, false).unwrap();
                assert_eq!(lr_product(&lr).unwrap().det(), BigInt::one());
            }
        }
    }

    #[test]
    fn render_smoke() {
        let drawing = render_square_snake(&code("2212"));
        assert!(drawing.contains("+--"));
        assert_eq!(drawing.lines().count() % 2, 1);
    }
}
