//! Exact bigraded equivariant Hilbert series of shift-invariant chains of
//! monomial ideals in a `c x infinity` variable grid.

pub mod asymptotics;
pub mod birational;
pub mod chain;
pub mod equivariant;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod io;
pub mod monomial;
pub mod univar;

pub use error::{Error, Result};
