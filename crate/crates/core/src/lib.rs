//! Exact Möbius functions of the posets `(Z^m, <=_S)` induced by pointed,
//! finitely generated semigroups `S`.
//!
//! Values are available by chain counting ([`mobius::chain_counts`]), by the
//! convolution recursion ([`mobius::mobius_range`]), by inverting the Hilbert
//! series ([`series::mobius_series`]) and by closed forms for several families
//! ([`formulas`]). [`recognition`] decides whether a relation lattice comes
//! from a semigroup.

pub mod cli;
pub mod error;
pub mod formulas;
pub mod lattice;
pub mod mobius;
pub mod parse;
pub mod recognition;
pub mod semigroup;
pub mod series;
pub mod vector;

pub use error::{Error, Result};
pub use vector::IntVec;
