pub mod cartan;
pub mod checks;
pub mod classify;
pub mod error;
pub mod fock;
pub mod gdim;
pub mod orbits;
pub mod qpoly;

pub use error::{Error, Result};
