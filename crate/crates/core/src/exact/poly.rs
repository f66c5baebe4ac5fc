use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{ExactError, Rational};

/// Per-variable integer exponents of a Laurent monomial. Exponents may be
/// negative; the arity is fixed by the ambient variable list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<i32>);

impl ExponentVector {
    pub fn new(exps: Vec<i32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(arity: usize) -> Self {
        ExponentVector(vec![0; arity])
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn add(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// Graded-lexicographic order: total degree first, then lexicographic.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate Laurent polynomial with `BigInt` coefficients.
///
/// No zero coefficients are stored; the term map is kept in graded-lex
/// order, so iteration and serialization are canonical. The empty map is
/// the zero polynomial. Values are immutable; every operation returns a
/// fresh polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &[&str]) -> Self {
        LaurentPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &[&str]) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &[&str], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(ExponentVector::zero(p.vars.len()), c);
        }
        p
    }

    /// The variable `vars[idx]` as a polynomial.
    pub fn variable(vars: &[&str], idx: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[idx] = 1;
        Self::monomial(vars, &exps, BigInt::one())
    }

    pub fn monomial(vars: &[&str], exps: &[i32], coeff: impl Into<BigInt>) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent arity must match vars");
        let mut p = Self::zero(vars);
        let c = coeff.into();
        if !c.is_zero() {
            p.terms.insert(ExponentVector::new(exps.to_vec()), c);
        }
        p
    }

    pub fn from_terms(
        vars: &[&str],
        terms: impl IntoIterator<Item = (Vec<i32>, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), p.vars.len());
            p.add_term(ExponentVector::new(exps), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(e, c)| e.exps().iter().all(|&x| x == 0) && c.is_one())
                .unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The value of a constant polynomial, if it is one.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            return Some(BigInt::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.exps().iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn add_term(&mut self, exp: ExponentVector, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<(), ExactError> {
        if self.vars.len() != other.vars.len() {
            return Err(ExactError::ArityMismatch(self.vars.len(), other.vars.len()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("arity mismatch in add")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("arity mismatch in mul")
    }

    /// Exact product in canonical form.
    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_arity(other)?;
        let mut out = Self::zero_like(self);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.add(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one_of(&self.vars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    fn zero_like(p: &Self) -> Self {
        LaurentPoly {
            vars: p.vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    fn one_of(vars: &[String]) -> Self {
        let mut p = LaurentPoly {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        };
        p.terms.insert(ExponentVector::zero(vars.len()), BigInt::one());
        p
    }

    /// Per-variable minimum exponent over all terms. Zero polynomial has
    /// no terms; returns all zeros.
    pub fn min_exponents(&self) -> Vec<i32> {
        let mut mins = vec![i32::MAX; self.vars.len()];
        for e in self.terms.keys() {
            for (m, &x) in mins.iter_mut().zip(e.exps()) {
                *m = (*m).min(x);
            }
        }
        if self.terms.is_empty() {
            mins.fill(0);
        }
        mins
    }

    fn shift(&self, by: &[i32]) -> Self {
        let shift = ExponentVector::new(by.to_vec());
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.add(&shift), c.clone()))
                .collect(),
        }
    }

    fn leading(&self) -> (&ExponentVector, &BigInt) {
        self.terms.iter().next_back().expect("nonzero polynomial")
    }

    /// Exact Laurent quotient: returns `r` with `r * q == self`, or
    /// `NotDivisible` when no such Laurent polynomial exists. Signals a
    /// violated exchange identity at call sites.
    pub fn div_exact(&self, q: &Self) -> Result<Self, ExactError> {
        self.check_arity(q)?;
        if q.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Self::zero_like(self));
        }
        // Multiplying by a monomial is a unit move, so normalize both
        // operands to ordinary polynomials and divide there.
        let sp = self.min_exponents();
        let sq = q.min_exponents();
        let p_norm = self.shift(&sp.iter().map(|x| -x).collect::<Vec<_>>());
        let q_norm = q.shift(&sq.iter().map(|x| -x).collect::<Vec<_>>());

        let mut rem = p_norm;
        let mut quot = Self::zero_like(self);
        let (lq_exp, lq_coeff) = {
            let (e, c) = q_norm.leading();
            (e.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (lr_exp, lr_coeff) = {
                let (e, c) = rem.leading();
                (e.clone(), c.clone())
            };
            let diff = lr_exp.sub(&lq_exp);
            if diff.exps().iter().any(|&x| x < 0) {
                return Err(ExactError::NotDivisible);
            }
            let (c, r) = lr_coeff.div_rem(&lq_coeff);
            if !r.is_zero() {
                return Err(ExactError::NotDivisible);
            }
            let t = LaurentPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::from([(diff.clone(), c.clone())]),
            };
            rem = rem.sub(&t.mul(&q_norm));
            quot.add_term(diff, c);
        }
        let final_shift: Vec<i32> = sp.iter().zip(&sq).map(|(a, b)| a - b).collect();
        Ok(quot.shift(&final_shift))
    }

    /// True iff the polynomial is nonzero and every coefficient is > 0.
    pub fn is_positive(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_positive())
    }

    /// Exact evaluation at a rational point; a ring homomorphism.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, ExactError> {
        if point.len() != self.vars.len() {
            return Err(ExactError::ArityMismatch(self.vars.len(), point.len()));
        }
        for (i, v) in point.iter().enumerate() {
            if v.is_zero() && self.terms.keys().any(|e| e.exps()[i] < 0) {
                return Err(ExactError::ZeroSubstitution(self.vars[i].clone()));
            }
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = Rational::from(c.clone());
            for (x, &k) in point.iter().zip(e.exps()) {
                if k == 0 {
                    continue;
                }
                let mut base = x.clone();
                if k < 0 {
                    base = base.recip();
                }
                let mut pw = Rational::one();
                for _ in 0..k.unsigned_abs() {
                    pw *= &base;
                }
                t *= pw;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Evaluate with every variable set to 1: the coefficient sum.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Parse the `Display` syntax with a fixed variable list; names not
    /// in `vars` are an error.
    pub fn parse_with_vars(s: &str, vars: &[&str]) -> Result<Self, ExactError> {
        parse_poly(s, Some(vars))
    }

    /// Exponents of the monomial denominator when the polynomial is
    /// written as `P / x1^a1 ... xk^ak` with `P` an ordinary polynomial
    /// not divisible by any variable.
    pub fn denominator_exponents(&self) -> Vec<u32> {
        self.min_exponents()
            .iter()
            .map(|&m| if m < 0 { (-m) as u32 } else { 0 })
            .collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Leading term first.
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || e.exps().iter().all(|&x| x == 0) {
                factors.push(abs.to_string());
            }
            for (name, &k) in self.vars.iter().zip(e.exps()) {
                match k {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = ExactError;

    /// Parses the `Display` syntax: terms joined by `+`/`-`, factors
    /// joined by `*`, exponents after `^` (possibly negative). Variables
    /// are collected left to right unless already seen.
    fn from_str(s: &str) -> Result<Self, ExactError> {
        parse_poly(s, None)
    }
}

/// Parse with a fixed variable list (unknown names are an error).
pub(crate) fn parse_poly(s: &str, fixed_vars: Option<&[&str]>) -> Result<LaurentPoly, ExactError> {
    let mut vars: Vec<String> = fixed_vars
        .map(|v| v.iter().map(|s| s.to_string()).collect())
        .unwrap_or_default();
    let mut terms: Vec<(Vec<(usize, i32)>, BigInt)> = Vec::new();

    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ExactError::Parse("empty input".into()));
    }
    // Split into signed terms.
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut sign = false;
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !matches!(compact.as_bytes()[i - 1], b'^' | b'*') {
            chunks.push((sign, std::mem::take(&mut cur)));
            sign = ch == '-';
        } else if ch == '+' && i == 0 {
        } else if ch == '-' && i == 0 {
            sign = true;
        } else {
            cur.push(ch);
        }
    }
    chunks.push((sign, cur));

    for (neg, chunk) in chunks {
        if chunk.is_empty() {
            return Err(ExactError::Parse("dangling sign".into()));
        }
        let mut coeff = BigInt::one();
        let mut exps: Vec<(usize, i32)> = Vec::new();
        for factor in chunk.split('*') {
            if factor.is_empty() {
                return Err(ExactError::Parse(format!("empty factor in `{chunk}`")));
            }
            if factor.chars().next().unwrap().is_ascii_digit() {
                let c: BigInt = factor
                    .parse()
                    .map_err(|_| ExactError::Parse(format!("bad integer `{factor}`")))?;
                coeff *= c;
            } else {
                let (name, exp) = match factor.find('^') {
                    Some(p) => {
                        let e: i32 = factor[p + 1..]
                            .parse()
                            .map_err(|_| ExactError::Parse(format!("bad exponent in `{factor}`")))?;
                        (&factor[..p], e)
                    }
                    None => (factor, 1),
                };
                if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(ExactError::Parse(format!("bad variable `{name}`")));
                }
                let idx = match vars.iter().position(|v| v == name) {
                    Some(i) => i,
                    None => {
                        if fixed_vars.is_some() {
                            return Err(ExactError::Parse(format!("unknown variable `{name}`")));
                        }
                        vars.push(name.to_string());
                        vars.len() - 1
                    }
                };
                exps.push((idx, exp));
            }
        }
        if neg {
            coeff = -coeff;
        }
        terms.push((exps, coeff));
    }

    let var_refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let mut p = LaurentPoly::zero(&var_refs);
    for (exps, c) in terms {
        let mut ev = vec![0i32; vars.len()];
        for (i, e) in exps {
            ev[i] += e;
        }
        p.add_term(ExponentVector::new(ev), c);
    }
    Ok(p)
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    exp: Vec<i32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let repr = PolyRepr {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| TermRepr {
                    exp: e.exps().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        let vars: Vec<&str> = repr.vars.iter().map(|s| s.as_str()).collect();
        let mut p = LaurentPoly::zero(&vars);
        for t in repr.terms {
            if t.exp.len() != vars.len() {
                return Err(D::Error::custom("exponent arity mismatch"));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| D::Error::custom("bad coefficient"))?;
            p.add_term(ExponentVector::new(t.exp), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> [&'static str; 3] {
        ["x", "y", "z"]
    }

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s, Some(&xyz())).unwrap()
    }

    #[test]
    fn mul_identity_and_inverse_monomials() {
        let xy = p("x + y");
        let one = LaurentPoly::one(&xyz());
        assert_eq!(xy.mul(&one), xy);
        assert_eq!(p("x").mul(&p("x^-1")), one);
    }

    #[test]
    fn mul_expands_square() {
        // (1 + y)^2, expanded by hand.
        let q = p("1 + y");
        assert_eq!(q.mul(&q), p("1 + 2*y + y^2"));
    }

    #[test]
    fn mul_arity_mismatch() {
        let a = LaurentPoly::one(&["x"]);
        let b = LaurentPoly::one(&["x", "y"]);
        assert!(matches!(a.try_mul(&b), Err(ExactError::ArityMismatch(1, 2))));
    }

    #[test]
    fn div_exact_monomial_factor() {
        assert_eq!(p("x^2 + x*y").div_exact(&p("x")).unwrap(), p("x + y"));
        let q = p("1 + 2*y + y^2 + x*z");
        assert_eq!(q.div_exact(&LaurentPoly::one(&xyz())).unwrap(), q);
    }

    #[test]
    fn div_exact_rejects_non_divisible() {
        // Monomials are units, so (x + y)/x = 1 + x^-1*y succeeds; a
        // non-monomial divisor that leaves a remainder must not.
        assert_eq!(p("x + y").div_exact(&p("x")).unwrap(), p("1 + x^-1*y"));
        assert_eq!(
            p("x^2 + y^2").div_exact(&p("x + y")),
            Err(ExactError::NotDivisible)
        );
        assert_eq!(
            p("x + y").div_exact(&p("x + z")),
            Err(ExactError::NotDivisible)
        );
        assert_eq!(p("x").div_exact(&p("0")), Err(ExactError::ZeroDivisor));
    }

    #[test]
    fn div_exact_laurent_quotient() {
        // (x^2 + y^2) / z has a Laurent quotient with negative exponents.
        let q = p("x^2 + y^2").div_exact(&p("z")).unwrap();
        assert_eq!(q, p("x^2*z^-1 + y^2*z^-1"));
        assert_eq!(q.mul(&p("z")), p("x^2 + y^2"));
    }

    #[test]
    fn positivity() {
        assert!(p("1 + 2*y + y^2 + x*z").is_positive());
        assert!(!p("x^2 - x*y + y^2").is_positive());
        assert!(!LaurentPoly::zero(&xyz()).is_positive());
    }

    #[test]
    fn eval_paper_value() {
        // M_{1,4} of the weighted hexagon evaluated at (1,1,1).
        let m14 = p("x^-1*y^-1*z^-1 + 2*x^-1*z^-1 + x^-1*y*z^-1 + y^-1");
        let one = Rational::one();
        assert_eq!(
            m14.eval(&[one.clone(), one.clone(), one]).unwrap(),
            Rational::from(BigInt::from(5))
        );
    }

    #[test]
    fn eval_at_ones_is_coefficient_sum() {
        let q = p("3*x^2 + x^-5*y + 7");
        assert_eq!(q.eval_at_ones(), BigInt::from(11));
    }

    #[test]
    fn eval_x_plus_xinv_at_two() {
        let q = parse_poly("x + x^-1", Some(&["x"])).unwrap();
        let two = Rational::from(BigInt::from(2));
        let r = q.eval(&[two]).unwrap();
        assert_eq!(r, "5/2".parse::<Rational>().unwrap());
    }

    #[test]
    fn eval_zero_substitution() {
        let q = p("x^-1 + y");
        let pt = [
            Rational::zero(),
            Rational::one(),
            Rational::one(),
        ];
        assert_eq!(q.eval(&pt), Err(ExactError::ZeroSubstitution("x".into())));
        // Zero is fine for a variable with only nonnegative exponents.
        let q2 = p("x + y");
        assert!(q2.eval(&pt).is_ok());
    }

    #[test]
    fn json_round_trip_is_identity() {
        let q = p("x^-1*y^-1*z^-1 + 2*x^-1*z^-1 + x^-1*y*z^-1 + y^-1");
        let js = serde_json::to_string(&q).unwrap();
        let back: LaurentPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);
        // Canonical shape of the serialized form.
        let v: serde_json::Value = serde_json::from_str(&js).unwrap();
        assert_eq!(v["vars"], serde_json::json!(["x", "y", "z"]));
        assert!(v["terms"].as_array().unwrap().len() == 4);
    }

    #[test]
    fn display_round_trip() {
        let q = p("x^-1*y^-1*z^-1 + 2*x^-1*z^-1 - x^-1*y*z^-1 + y^-1 - 4");
        let shown = q.to_string();
        assert_eq!(parse_poly(&shown, Some(&xyz())).unwrap(), q);
    }

    #[test]
    fn denominator_exponents_of_markoff_shape() {
        let q = p("x^2*z^-1 + y^2*z^-1");
        assert_eq!(q.denominator_exponents(), vec![0, 0, 1]);
    }
}
