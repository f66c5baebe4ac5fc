use std::collections::BTreeMap;

use crate::exact::ExchangeValue;

use super::{minmax, FriezeError};

/// Fill a partial table of pair values by the subtraction-free Ptolemy
/// exchange: for cyclically ordered i < j < k < l with five of the six
/// pair values known and a diagonal ({i,k} or {j,l}) unknown, solve
///
///   M_ik = (M_ij M_kl + M_jk M_il) / M_jl.
///
/// Keys are unordered pairs (min, max) over vertices 1..=n. The known
/// set must contain the sides and diagonals of some triangulation for
/// the completion to reach every pair; sweeps run until saturation.
///
/// The same code serves the rational, Laurent-polynomial, and tropical
/// (max-plus) instances of the exchange.
pub fn ptolemy_complete<V: ExchangeValue>(
    n: usize,
    known: &BTreeMap<(usize, usize), V>,
) -> Result<BTreeMap<(usize, usize), V>, FriezeError> {
    let mut vals: BTreeMap<(usize, usize), V> = known.clone();
    let total = n * (n - 1) / 2;
    loop {
        if vals.len() == total {
            return Ok(vals);
        }
        let mut progressed = false;
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for l in k + 1..=n {
                        let ik = (i, k);
                        let jl = (j, l);
                        let (target, divisor) = if !vals.contains_key(&ik) {
                            (ik, jl)
                        } else if !vals.contains_key(&jl) {
                            (jl, ik)
                        } else {
                            continue;
                        };
                        let sides = [
                            minmax(i, j),
                            minmax(k, l),
                            minmax(j, k),
                            minmax(i, l),
                        ];
                        if !vals.contains_key(&divisor)
                            || sides.iter().any(|s| !vals.contains_key(s))
                        {
                            continue;
                        }
                        let div = vals[&divisor].clone();
                        if div.is_zero_value() {
                            return Err(FriezeError::DivisionByZero(divisor.0, divisor.1));
                        }
                        let num = vals[&sides[0]]
                            .times(&vals[&sides[1]])
                            .plus(&vals[&sides[2]].times(&vals[&sides[3]]));
                        let v = num
                            .try_div(&div)
                            .map_err(|_| FriezeError::DivisionByZero(divisor.0, divisor.1))?;
                        vals.insert(target, v);
                        progressed = true;
                    }
                }
            }
        }
        if !progressed {
            return Err(FriezeError::Underdetermined(total - vals.len()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use num_bigint::BigInt;

    fn rat(x: i64) -> Rational {
        Rational::from(BigInt::from(x))
    }

    #[test]
    fn completes_square_from_triangulation_values() {
        // Square with sides 1 and diagonal (1,3) = 2: the other diagonal
        // follows from the exchange: M_13 M_24 = M_12 M_34 + M_23 M_14.
        let mut known = BTreeMap::new();
        for (i, j) in [(1, 2), (2, 3), (3, 4), (1, 4)] {
            known.insert((i, j), rat(1));
        }
        known.insert((1, 3), rat(2));
        let full = ptolemy_complete(4, &known).unwrap();
        assert_eq!(full[&(2, 4)], rat(1));
    }

    #[test]
    fn underdetermined_reported() {
        let mut known = BTreeMap::new();
        known.insert((1, 2), rat(1));
        assert!(matches!(
            ptolemy_complete(5, &known),
            Err(FriezeError::Underdetermined(_))
        ));
    }
}
