use alloc::vec::Vec;
use core::ops::Neg;

use super::{forward_binop, LaurentPoly};
use crate::{Error, Result};

/// A power series in `x` and `y` over Laurent polynomials in `q`, truncated
/// modulo `(x^{x_order+1}, y^{y_order+1})`.
///
/// Coefficients are stored densely, `(x_order+1)·(y_order+1)` of them. Binary
/// operations on series of different orders truncate to the componentwise
/// minimum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiSeries {
    x_order: usize,
    y_order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl BiSeries {
    pub fn zero(x_order: usize, y_order: usize) -> Self {
        Self {
            x_order,
            y_order,
            coeffs: alloc::vec![LaurentPoly::zero(); (x_order + 1) * (y_order + 1)],
        }
    }

    pub fn one(x_order: usize, y_order: usize) -> Self {
        Self::constant(LaurentPoly::one(), x_order, y_order)
    }

    pub fn constant(c: LaurentPoly, x_order: usize, y_order: usize) -> Self {
        Self::monomial(c, 0, 0, x_order, y_order)
    }

    /// `c·x^a·y^b`, or zero when the monomial lies beyond the truncation.
    pub fn monomial(c: LaurentPoly, a: usize, b: usize, x_order: usize, y_order: usize) -> Self {
        let mut s = Self::zero(x_order, y_order);
        if a <= x_order && b <= y_order {
            s.coeffs[a * (y_order + 1) + b] = c;
        }
        s
    }

    /// Builds a series from `(a, b, coefficient)` triples; terms beyond the
    /// truncation are dropped and repeated positions are summed.
    pub fn from_terms(
        x_order: usize,
        y_order: usize,
        terms: impl IntoIterator<Item = (usize, usize, LaurentPoly)>,
    ) -> Self {
        let mut s = Self::zero(x_order, y_order);
        for (a, b, c) in terms {
            if a <= x_order && b <= y_order {
                let i = s.index(a, b);
                s.coeffs[i] += &c;
            }
        }
        s
    }

    pub fn x_order(&self) -> usize {
        self.x_order
    }

    pub fn y_order(&self) -> usize {
        self.y_order
    }

    fn index(&self, a: usize, b: usize) -> usize {
        a * (self.y_order + 1) + b
    }

    /// Coefficient of `x^a y^b`; `None` beyond the truncation orders.
    pub fn get(&self, a: usize, b: usize) -> Option<&LaurentPoly> {
        (a <= self.x_order && b <= self.y_order).then(|| &self.coeffs[self.index(a, b)])
    }

    /// Coefficient of `x^a y^b`.
    ///
    /// # Panics
    /// When `(a, b)` lies beyond the truncation orders.
    pub fn coeff(&self, a: usize, b: usize) -> &LaurentPoly {
        self.get(a, b).unwrap_or_else(|| {
            panic!(
                "coefficient x^{a} y^{b} requested from a series truncated at ({}, {})",
                self.x_order, self.y_order
            )
        })
    }

    pub fn set_coeff(&mut self, a: usize, b: usize, c: LaurentPoly) {
        assert!(
            a <= self.x_order && b <= self.y_order,
            "coefficient beyond truncation"
        );
        let i = self.index(a, b);
        self.coeffs[i] = c;
    }

    /// Nonzero coefficients in `(a, b)` lexicographic order.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> + '_ {
        let w = self.y_order + 1;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i / w, i % w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(LaurentPoly::is_zero)
    }

    /// Reduces to smaller truncation orders (larger ones are clamped).
    pub fn truncate(&self, x_order: usize, y_order: usize) -> Self {
        let (xo, yo) = (x_order.min(self.x_order), y_order.min(self.y_order));
        let mut s = Self::zero(xo, yo);
        for a in 0..=xo {
            for b in 0..=yo {
                let i = s.index(a, b);
                s.coeffs[i] = self.coeff(a, b).clone();
            }
        }
        s
    }

    pub fn map_coeffs(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self {
            x_order: self.x_order,
            y_order: self.y_order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        self.map_coeffs(|v| v * c)
    }

    /// Multiplication by the monomial `x^a y^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        let mut s = Self::zero(self.x_order, self.y_order);
        for (i, j, c) in self.nonzero_terms() {
            if i + a <= self.x_order && j + b <= self.y_order {
                let idx = s.index(i + a, j + b);
                s.coeffs[idx] = c.clone();
            }
        }
        s
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.x_order, self.y_order);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// The two-sided inverse in the truncated ring. It exists exactly when
    /// the constant coefficient is a unit `±q^e`.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeff(0, 0);
        let u = c0.unit_inverse().ok_or_else(|| {
            Error::domain(alloc::format!(
                "series with constant coefficient {c0} is not invertible"
            ))
        })?;
        let mut g = Self::zero(self.x_order, self.y_order);
        let w = self.y_order + 1;
        for a in 0..=self.x_order {
            for b in 0..=self.y_order {
                if a == 0 && b == 0 {
                    g.coeffs[0] = u.clone();
                    continue;
                }
                // g[a,b] = −u · Σ_{(i,j)≠(0,0)} s[i,j]·g[a−i,b−j]; every g on the
                // right precedes (a,b) lexicographically.
                let mut acc = LaurentPoly::zero();
                for i in 0..=a {
                    for j in 0..=b {
                        if i == 0 && j == 0 {
                            continue;
                        }
                        let s = &self.coeffs[i * w + j];
                        if s.is_zero() {
                            continue;
                        }
                        let gv = &g.coeffs[(a - i) * w + (b - j)];
                        if !gv.is_zero() {
                            acc += &(s * gv);
                        }
                    }
                }
                g.coeffs[a * w + b] = -(acc * &u);
            }
        }
        Ok(g)
    }

    /// Applies `q → q⁻¹` to every coefficient.
    pub fn substitute_inverse_q(&self) -> Self {
        self.map_coeffs(LaurentPoly::substitute_inverse)
    }

    fn zip(a: &Self, b: &Self, f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly) -> Self {
        let (xo, yo) = (a.x_order.min(b.x_order), a.y_order.min(b.y_order));
        let mut s = Self::zero(xo, yo);
        for i in 0..=xo {
            for j in 0..=yo {
                let idx = s.index(i, j);
                s.coeffs[idx] = f(a.coeff(i, j), b.coeff(i, j));
            }
        }
        s
    }

    fn add_ref(a: &Self, b: &Self) -> Self {
        Self::zip(a, b, |u, v| u + v)
    }

    fn sub_ref(a: &Self, b: &Self) -> Self {
        Self::zip(a, b, |u, v| u - v)
    }

    fn mul_ref(a: &Self, b: &Self) -> Self {
        let (xo, yo) = (a.x_order.min(b.x_order), a.y_order.min(b.y_order));
        let mut s = Self::zero(xo, yo);
        let lhs: Vec<_> = a
            .nonzero_terms()
            .filter(|(i, j, _)| *i <= xo && *j <= yo)
            .collect();
        let rhs: Vec<_> = b
            .nonzero_terms()
            .filter(|(i, j, _)| *i <= xo && *j <= yo)
            .collect();
        for (i1, j1, c1) in &lhs {
            for (i2, j2, c2) in &rhs {
                let (i, j) = (i1 + i2, j1 + j2);
                if i <= xo && j <= yo {
                    let idx = s.index(i, j);
                    s.coeffs[idx] += &(*c1 * *c2);
                }
            }
        }
        s
    }
}

impl core::fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "BiSeries(O(x^{}, y^{}); ",
            self.x_order + 1,
            self.y_order + 1
        )?;
        let mut first = true;
        for (a, b, c) in self.nonzero_terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})x^{a}y^{b}")?;
        }
        f.write_str(")")
    }
}

impl Neg for &BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for BiSeries {
    type Output = BiSeries;
    fn neg(self) -> BiSeries {
        -&self
    }
}

forward_binop!(BiSeries, Add, add, BiSeries::add_ref);
forward_binop!(BiSeries, Sub, sub, BiSeries::sub_ref);
forward_binop!(BiSeries, Mul, mul, BiSeries::mul_ref);

/// A power series in `y` over Laurent polynomials in `q`, truncated modulo
/// `y^{order+1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct UniSeries(BiSeries);

impl UniSeries {
    pub fn zero(order: usize) -> Self {
        Self(BiSeries::zero(0, order))
    }

    pub fn one(order: usize) -> Self {
        Self(BiSeries::one(0, order))
    }

    /// `c·y^d` (zero when `d > order`).
    pub fn monomial(c: LaurentPoly, d: usize, order: usize) -> Self {
        Self(BiSeries::monomial(c, 0, d, 0, order))
    }

    pub fn order(&self) -> usize {
        self.0.y_order()
    }

    pub fn coeff(&self, d: usize) -> &LaurentPoly {
        self.0.coeff(0, d)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        (0..=self.order()).all(|d| {
            if d == 0 {
                self.coeff(0).is_one()
            } else {
                self.coeff(d).is_zero()
            }
        })
    }

    /// Multiplication by `y^d`.
    pub fn shift(&self, d: usize) -> Self {
        Self(self.0.shift(0, d))
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self(self.0.scale(c))
    }

    pub fn invert(&self) -> Result<Self> {
        self.0.invert().map(Self)
    }

    pub fn substitute_inverse_q(&self) -> Self {
        Self(self.0.substitute_inverse_q())
    }

    /// First degree at which the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&d| self.coeff(d) != other.coeff(d))
    }

    fn add_ref(a: &Self, b: &Self) -> Self {
        Self(&a.0 + &b.0)
    }

    fn sub_ref(a: &Self, b: &Self) -> Self {
        Self(&a.0 - &b.0)
    }

    fn mul_ref(a: &Self, b: &Self) -> Self {
        Self(&a.0 * &b.0)
    }
}

impl Neg for &UniSeries {
    type Output = UniSeries;
    fn neg(self) -> UniSeries {
        UniSeries(-&self.0)
    }
}

impl Neg for UniSeries {
    type Output = UniSeries;
    fn neg(self) -> UniSeries {
        -&self
    }
}

forward_binop!(UniSeries, Add, add, UniSeries::add_ref);
forward_binop!(UniSeries, Sub, sub, UniSeries::sub_ref);
forward_binop!(UniSeries, Mul, mul, UniSeries::mul_ref);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qint;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// `q^j − q^j[j+1]x + [j]xy`
    fn master_factor(j: usize, xo: usize, yo: usize) -> BiSeries {
        let qj = LaurentPoly::monomial(1, j as i64);
        BiSeries::from_terms(
            xo,
            yo,
            [
                (0, 0, qj.clone()),
                (1, 0, -(qj * qint(j + 1))),
                (1, 1, qint(j)),
            ],
        )
    }

    #[test]
    fn geometric_series() {
        let s = BiSeries::from_terms(6, 2, [(0, 0, LaurentPoly::one()), (1, 0, lp("-1"))]);
        let inv = s.invert().unwrap();
        for a in 0..=6 {
            for b in 0..=2 {
                let want = if b == 0 {
                    LaurentPoly::one()
                } else {
                    LaurentPoly::zero()
                };
                assert_eq!(inv.coeff(a, b), &want);
            }
        }
    }

    #[test]
    fn master_factor_expansion() {
        let inv = master_factor(1, 3, 3).invert().unwrap();
        assert_eq!(inv.coeff(1, 0), &lp("q^-1+1"));
        for j in 0..5 {
            let inv = master_factor(j, 2, 2).invert().unwrap();
            assert_eq!(inv.coeff(0, 0), &LaurentPoly::monomial(1, -(j as i64)));
        }
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        let s = BiSeries::constant(lp("1+q"), 2, 2);
        assert!(s.invert().is_err());
        assert!(BiSeries::constant(lp("2"), 1, 1).invert().is_err());
        assert!(BiSeries::zero(1, 1).invert().is_err());
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = BiSeries::one(5, 2);
        let b = BiSeries::one(3, 4);
        let s = &a + &b;
        assert_eq!((s.x_order(), s.y_order()), (3, 2));
        let p = &a * &b;
        assert_eq!((p.x_order(), p.y_order()), (3, 2));
    }

    #[test]
    fn inverse_round_trip() {
        let s = master_factor(3, 5, 4);
        let inv = s.invert().unwrap();
        assert_eq!(&s * &inv, BiSeries::one(5, 4));
        assert_eq!(&inv * &s, BiSeries::one(5, 4));
        assert_eq!(inv.invert().unwrap(), s);
    }

    #[test]
    fn uni_series_basics() {
        let s = UniSeries::one(4) - UniSeries::monomial(lp("q"), 1, 4);
        let inv = s.invert().unwrap();
        assert_eq!(inv.coeff(3), &lp("q^3"));
        assert!((&s * &inv).is_one());
        assert_eq!(inv.shift(2).coeff(3), &lp("q"));
        assert_eq!(s.first_difference(&UniSeries::one(4)), Some(1));
    }
}
