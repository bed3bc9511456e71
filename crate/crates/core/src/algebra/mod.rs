//! Exact Laurent polynomials in `q`, truncated power series over them, and the
//! q-analog primitives `[i]`, `[i]!` and the Gaussian binomial.

mod laurent;
mod qanalog;
mod series;

pub use laurent::{Descending, LaurentPoly};
pub use qanalog::{binomial, qbinomial, qbinomial_pascal, qfactorial, qint, qint_signed};
pub use series::{BiSeries, UniSeries};

/// Implements a binary operator for every owned/borrowed operand combination
/// in terms of `fn(&T, &T) -> T`.
macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $method:ident, $f:path) => {
        impl core::ops::$tr<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $f(self, rhs)
            }
        }
        impl core::ops::$tr<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $f(&self, &rhs)
            }
        }
        impl core::ops::$tr<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $f(&self, rhs)
            }
        }
        impl core::ops::$tr<$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $f(self, &rhs)
            }
        }
    };
}
pub(crate) use forward_binop;
