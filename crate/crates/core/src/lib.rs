//! Folding of pinned root data under groups of diagram automorphisms.
//!
//! The crate computes coinvariant lattices, equivalence classes of positive
//! roots, folded root data, fixed Weyl groups, smoothness and connectedness
//! criteria, equivariant Chevalley systems, and brute-force point counts on
//! `SL_{2n+1}` over small finite fields.

pub mod error;
pub mod intlat;
pub mod rootdata;

pub use error::{Error, Result};
pub mod action;
pub mod folding;
pub mod presets;
pub mod chevalley;
pub mod criteria;
pub mod matrixlab;
