//! Exact enumeration of the cells of the totally nonnegative Grassmannian.
//!
//! The crate computes the rank generating functions `A_{k,n}(q)` of the cell
//! decomposition of `Gr⁺_{k,n}`, the q-Eulerian polynomials derived from them,
//! and the combinatorial objects indexing the cells: Le-diagrams, decorated
//! permutations, the cyclic Bruhat order and the noncrossing-partition
//! bijection. Every closed form is paired with a brute-force enumeration so
//! the two can be compared exactly.
//!
//! All arithmetic is over arbitrary-precision integers and rationals. The
//! crate is `no_std` and only needs `alloc`; IO, file formats, parallel
//! drivers and the command line live in the `positroid` companion crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod bijections;
pub mod decperm;
mod error;
pub mod formulas;
pub mod identities;
pub mod lediagram;
pub mod poset;

pub use algebra::{qbinomial, qfactorial, qint, qint_signed, BiSeries, LaurentPoly, UniSeries};
pub use decperm::{DecoratedPermutation, Orientation};
pub use error::{Error, Result};
pub use lediagram::{LeDiagram, Shape};
