use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LaurentPoly;
use crate::{Error, Result};

/// `[i] = 1 + q + … + q^{i−1}`; `[0] = 0`.
pub fn qint(i: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..i as i64).map(|e| (e, 1)))
}

/// `[m] = (1 − q^m)/(1 − q)` for any integer `m`; for `m < 0` this is
/// `−(q^m + … + q^{−1})`, i.e. `[−m] = −q^{−m}[m]`.
pub fn qint_signed(m: i64) -> LaurentPoly {
    if m >= 0 {
        qint(m as usize)
    } else {
        LaurentPoly::from_terms((m..0).map(|e| (e, -1)))
    }
}

/// `[i]! = [1][2]⋯[i]`.
pub fn qfactorial(i: usize) -> LaurentPoly {
    (1..=i).fold(LaurentPoly::one(), |acc, m| acc * qint(m))
}

/// The Gaussian binomial `[i]!/([j]![i−j]!)`, computed by exact division.
pub fn qbinomial(i: i64, j: i64) -> Result<LaurentPoly> {
    check_binomial_args(i, j)?;
    let (i, j) = (i as usize, j as usize);
    let num = qfactorial(i);
    let den = qfactorial(j) * qfactorial(i - j);
    num.div_exact(&den)
}

/// The Gaussian binomial via `[i, j] = [i−1, j−1] + q^j [i−1, j]`.
pub fn qbinomial_pascal(i: i64, j: i64) -> Result<LaurentPoly> {
    check_binomial_args(i, j)?;
    let (i, j) = (i as usize, j as usize);
    let mut row = alloc::vec![LaurentPoly::one()];
    for m in 1..=i {
        let mut next = alloc::vec![LaurentPoly::zero(); m + 1];
        for (r, slot) in next.iter_mut().enumerate() {
            if r > 0 {
                *slot += &row[r - 1];
            }
            if r < m {
                *slot += &row[r].shift(r as i64);
            }
        }
        row = next;
    }
    Ok(core::mem::take(&mut row[j]))
}

fn check_binomial_args(i: i64, j: i64) -> Result<()> {
    if i < 0 || j < 0 || j > i {
        return Err(Error::domain(alloc::format!(
            "q-binomial [{i} choose {j}] needs 0 <= j <= i"
        )));
    }
    Ok(())
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn qint_examples() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), LaurentPoly::one());
        assert_eq!(qint(3), lp("1+q+q^2"));
        assert_eq!(qint_signed(-2), lp("-q^-2-q^-1"));
        // [−m] = −q^{−m}[m]
        for m in 0..6 {
            assert_eq!(qint_signed(-m), -qint(m as usize).shift(-m));
        }
    }

    #[test]
    fn qbinomial_examples() {
        assert_eq!(qbinomial(2, 1).unwrap(), lp("1+q"));
        assert_eq!(qbinomial(5, 5).unwrap(), LaurentPoly::one());
        assert_eq!(qbinomial(4, 2).unwrap(), lp("1+q+2q^2+q^3+q^4"));
        assert!(qbinomial(2, 3).is_err());
        assert!(qbinomial(2, -1).is_err());
    }

    #[test]
    fn pascal_agrees_with_division() {
        for i in 0..=12 {
            for j in 0..=i {
                let b = qbinomial(i, j).unwrap();
                assert!(b.has_nonnegative_coefficients() && b.is_polynomial());
                assert_eq!(b, qbinomial_pascal(i, j).unwrap());
                assert_eq!(b.value_at_one(), binomial(i, j));
                if 1 <= j && j < i {
                    let rec =
                        qbinomial(i - 1, j - 1).unwrap() + qbinomial(i - 1, j).unwrap().shift(j);
                    assert_eq!(b, rec);
                }
            }
        }
    }

    #[test]
    fn ordinary_binomials() {
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
