//! Computational engine for Kazhdan–Lusztig left cells in Weyl groups of
//! type `D`: domino tableaux and the domino Robinson–Schensted
//! correspondence, cycles and moving-through, operators on tableau pairs,
//! Kazhdan–Lusztig polynomials and cell modules, and the character theory
//! of `W(D_n)` used to identify isotypic components.

pub mod cells_kl;
pub mod cycles;
pub mod error;
pub mod linalg;
pub mod operators;
pub mod repr;
pub mod tableaux;
pub mod weyl_d;

pub use error::{Error, Result};
