//! Quasi-split iquantum groups of type AIII with diagonal parameters.
//!
//! Exact arithmetic over Q(p, q), the Hecke algebra of type B with its
//! Kazhdan–Lusztig basis, tableaux and Robinson–Schensted correspondences,
//! ordinary and quasi-ȷ-crystals on words, the coideal action on tensor powers
//! of the vector representation, and Littlewood–Richardson type rules.

pub mod error;
pub mod ratfunc;

pub use error::{Error, Result};
pub use ratfunc::{brace, qfact, qint, LaurentPoly, RatFunc};
pub mod weyl;
pub mod hecke;
pub mod tableaux;
pub mod crystal;
pub mod jcrystal;
pub mod ujmod;
pub mod verify;
pub mod cells;
pub mod lr;
pub mod graph;
