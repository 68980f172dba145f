//! Exact construction of simple Lie algebras from symplectic Lie-Jordan
//! structures, the inverse extraction from an sl2-triple, and classification
//! of short gradings of the simple Lie algebras.

pub mod cli;
pub mod commutant;
pub mod error;
pub mod foundation;
pub mod io;
pub mod isotypic;
pub mod models;
pub mod modp;
pub mod rootsys;
pub mod sl2kit;
pub mod sympjordan;
pub mod tkk;

pub use error::Error;
pub use foundation::{ExactMatrix, Rational};
pub use sympjordan::LieJordanStructure;
pub use tkk::{LieAlgebra, Sl2Triple};
