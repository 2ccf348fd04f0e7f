//! Exact combinatorial commutative algebra over the rationals.
//!
//! The crate is organised by layer: [`combinat`] holds exponent vectors, term
//! orders and the Borel order; [`monomial`] monomial ideals and Hilbert
//! functions; [`polyalg`] rational polynomials and the Gröbner engine;
//! [`generic`] unipotent coordinate changes, generic initial ideals and the
//! symbolic coefficient calculus; [`binomial`] binomial systems, their
//! filtrations and deformation chains.

pub mod binomial;
pub mod catalog;
pub mod combinat;
pub mod config;
pub mod error;

pub mod generic;
pub mod monomial;
pub mod polyalg;
pub mod sample;

pub use config::Config;
pub use error::{Error, Result};
