//! Exact arithmetic and support geometry in the fractional Weyl algebras
//! `A_1^(l)`, together with a corner-shape checker that enumerates and
//! refutes candidate corner configurations of hypothetical commuting pairs.
//!
//! All arithmetic is exact over the rationals; there is no floating point
//! anywhere in this crate.

pub mod autos;
pub mod bracket;
pub mod gen;
pub mod geometry;
pub mod parse;
pub mod rational;
pub mod render;
pub mod selftest;
pub mod shape;
pub mod unipoly;
pub mod weyl;

mod error;

pub use error::Error;
pub use rational::Rat;

pub type Result<T> = std::result::Result<T, Error>;
