use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{AddAssign, MulAssign, Neg, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::forward_binop;
use crate::{Error, Result};

/// A Laurent polynomial in `q` with arbitrary-precision integer coefficients.
///
/// Terms are kept sparse, keyed by exponent, with no zero coefficient ever
/// stored; the zero polynomial has no terms. Equality is therefore structural.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// Collects `(exponent, coefficient)` pairs, summing repeated exponents.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Polynomial with `coeffs[i]` as the coefficient of `q^i`.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| (i as i64, c)))
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(One::is_one)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Multiplication by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// The substitution `q → q⁻¹`, which negates every exponent.
    pub fn substitute_inverse(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact evaluation at a rational point. `q = 0` is rejected when a
    /// negative exponent is present.
    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        if q.is_zero() && !self.is_polynomial() {
            return Err(Error::domain(
                "cannot evaluate a negative power of q at q = 0",
            ));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let power = if *e >= 0 {
                num_traits::pow(q.clone(), *e as usize)
            } else {
                num_traits::pow(q.recip(), e.unsigned_abs() as usize)
            };
            acc += power * BigRational::from_integer(c.clone());
        }
        Ok(acc)
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at `q = −1`.
    pub fn value_at_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e.is_even() { c.clone() } else { -c })
            .sum()
    }

    /// The inverse of a unit `±q^e`, or `None` for anything else.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(Self::monomial(c.clone(), -e))
        } else {
            None
        }
    }

    /// Exact division. Fails when `divisor` is zero or leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (d_lo, d_hi) = match (divisor.min_exponent(), divisor.max_exponent()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::domain("division by the zero polynomial")),
        };
        let lead = &divisor.terms[&d_hi];
        let mut rem = self.clone();
        let mut quot = Self::zero();
        // Long division from the top; the remainder must vanish once its top
        // exponent falls below the divisor's span.
        while let Some(top) = rem.max_exponent() {
            let low = rem.min_exponent().unwrap_or(top);
            if top - low < d_hi - d_lo {
                return Err(Error::domain(
                    "polynomial division leaves a nonzero remainder",
                ));
            }
            let (c, r) = rem.terms[&top].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::domain(
                    "polynomial division is not exact over the integers",
                ));
            }
            let step = Self::monomial(c, top - d_hi);
            rem -= &(&step * divisor);
            quot += &step;
        }
        Ok(quot)
    }

    /// Renders the polynomial with the highest exponent first.
    pub fn descending(&self) -> Descending<'_> {
        Descending(self)
    }

    fn write_terms<'a>(
        f: &mut fmt::Formatter<'_>,
        terms: impl Iterator<Item = (i64, &'a BigInt)>,
    ) -> fmt::Result {
        let mut first = true;
        for (e, c) in terms {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if e == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }

    fn add_ref(a: &Self, b: &Self) -> Self {
        let mut out = a.clone();
        out += b;
        out
    }

    fn sub_ref(a: &Self, b: &Self) -> Self {
        let mut out = a.clone();
        out -= b;
        out
    }

    fn mul_ref(a: &Self, b: &Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

/// Display adapter returned by [`LaurentPoly::descending`].
pub struct Descending<'a>(&'a LaurentPoly);

impl fmt::Display for Descending<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LaurentPoly::write_terms(f, self.0.terms().rev())
    }
}

/// Ascending exponent order, e.g. `6+4q+q^2`; the zero polynomial is `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Self::write_terms(f, self.terms())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Parses sums of terms `c`, `cq`, `c*q^e`, `q^-e` in any order, e.g.
/// `q^4+4q^3+10q^2+12q+6` or `-q^-1 + 2`.
impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // Whitespace may only separate a term from a '+'/'-' sign.
        let chars: Vec<char> = s.trim().chars().collect();
        for (idx, c) in chars.iter().enumerate() {
            if c.is_whitespace() {
                let before = chars[..idx].iter().rev().find(|c| !c.is_whitespace());
                let after = chars[idx..].iter().find(|c| !c.is_whitespace());
                if !matches!(before, Some('+' | '-')) && !matches!(after, Some('+' | '-')) {
                    return Err(Error::parse("whitespace inside a term"));
                }
            }
        }
        let compact: alloc::string::String = chars.iter().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse("empty polynomial"));
        }
        let bytes = compact.as_bytes();
        let mut out = Self::zero();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = BigInt::one();
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -sign;
                }
                i += 1;
            } else if i > 0 {
                return Err(Error::parse("expected '+' or '-' between terms"));
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coeff = if i > start {
                BigInt::from_str(&compact[start..i]).map_err(|e| Error::parse(e.to_string()))?
            } else {
                BigInt::one()
            };
            if i < bytes.len() && bytes[i] == b'*' {
                i += 1;
            }
            let mut exp = 0i64;
            if i < bytes.len() && bytes[i] == b'q' {
                i += 1;
                exp = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let estart = i;
                    if i < bytes.len() && bytes[i] == b'-' {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = compact[estart..i]
                        .parse()
                        .map_err(|_| Error::parse("bad exponent"))?;
                }
            } else if i == start {
                return Err(Error::parse("empty term"));
            }
            out.add_term(exp, sign * coeff);
        }
        Ok(out)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = LaurentPoly::mul_ref(self, rhs);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

forward_binop!(LaurentPoly, Add, add, LaurentPoly::add_ref);
forward_binop!(LaurentPoly, Sub, sub, LaurentPoly::sub_ref);
forward_binop!(LaurentPoly, Mul, mul, LaurentPoly::mul_ref);

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl core::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> core::iter::Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn display_and_parse() {
        let p = LaurentPoly::from_coeffs([6, 12, 10, 4, 1]);
        assert_eq!(format!("{p}"), "6+12q+10q^2+4q^3+q^4");
        assert_eq!(format!("{}", p.descending()), "q^4+4q^3+10q^2+12q+6");
        assert_eq!(lp("q^4+4q^3+10q^2+12q+6"), p);
        assert_eq!(format!("{}", lp("-q^-1 + 2*q^3 - 1")), "-q^-1-1+2q^3");
        assert_eq!(format!("{}", LaurentPoly::zero()), "0");
        assert!("q^".parse::<LaurentPoly>().is_err());
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("3 4".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = lp("q+1") - lp("q");
        assert_eq!(p, LaurentPoly::one());
        assert_eq!((lp("q") - lp("q")).term_count(), 0);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(lp("1+q") * lp("1+q"), lp("1+2q+q^2"));
        assert_eq!(lp("q^2").substitute_inverse(), lp("q^-2"));
        let minus_one = BigRational::from_integer((-1).into());
        assert_eq!(lp("q+2").eval(&minus_one).unwrap(), BigRational::one());
        assert_eq!(lp("q+2").value_at_minus_one(), BigInt::one());
        assert_eq!(lp("q^-2").shift(3), lp("q"));
        assert_eq!(lp("1+q").pow(3), lp("1+3q+3q^2+q^3"));
        assert_eq!(lp("1+q").pow(0), LaurentPoly::one());
    }

    #[test]
    fn eval_rejects_zero_with_negative_powers() {
        assert!(lp("q^-1").eval(&BigRational::zero()).is_err());
        assert_eq!(
            lp("3+q").eval(&BigRational::zero()).unwrap(),
            BigRational::from_integer(3.into())
        );
    }

    #[test]
    fn exact_division() {
        let num = lp("1+q+q^2") * lp("1+q+q^2+q^3");
        assert_eq!(num.div_exact(&lp("1+q")).unwrap(), lp("1+q+2q^2+q^3+q^4"));
        assert!(lp("1+q^2").div_exact(&lp("1+q")).is_err());
        assert!(lp("1").div_exact(&LaurentPoly::zero()).is_err());
        assert_eq!(lp("q^-1+1").div_exact(&lp("q^-1")).unwrap(), lp("1+q"));
        assert!(lp("2+2q").div_exact(&lp("2")).is_ok());
        assert!(lp("1+2q").div_exact(&lp("2")).is_err());
    }

    #[test]
    fn units() {
        assert_eq!(lp("-q^3").unit_inverse(), Some(lp("-q^-3")));
        assert_eq!(lp("2q").unit_inverse(), None);
        assert_eq!(lp("1+q").unit_inverse(), None);
    }
}
