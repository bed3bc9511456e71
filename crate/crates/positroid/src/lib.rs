//! Command-line companion to `positroid-core`: JSON, DOT, CSV and LaTeX
//! output, parallel enumeration drivers, and the verification suites run by
//! `positroid verify`.

pub mod formats;
pub mod json;
pub mod parallel;
pub mod tables;
pub mod verify;
