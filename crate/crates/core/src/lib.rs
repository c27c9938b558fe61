//! Exact computations for the singlet-type vertex algebras at admissible
//! level `k = -2 + 1/p` and their quantum-group counterparts.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod c2;
pub mod characters;
pub mod cli;
pub mod error;
pub mod fock;
pub mod lattice;
pub mod linalg;
pub mod parse;
pub mod quantum;
pub mod realizations;
pub mod report;
pub mod screening;
pub mod suite;
pub mod window;

pub use error::{Error, Result};
