//! Skew-monoidal categories, bialgebroids and bimonads as exact linear algebra.
//!
//! Objects are finite-dimensional modules and bimodules over algebras given by
//! structure constants; every structure map is a matrix and every axiom is an
//! exact matrix identity checked on a finite probe set.

pub mod bialgebroid;
pub mod cli;
pub mod ebimod;
pub mod error;
pub mod exactlin;
pub mod laxq;
pub mod report;
pub mod represent;
pub mod ringmod;
pub mod skewcat;

pub use error::{Error, Result};
