//! Exponent vectors, term orders and the Borel order.

mod borel;
mod exponent;
mod order;

pub use borel::{borel_closure, borel_ge, borel_witness, enumerate_u, is_borel_set, UpperTriangularMatrix};
pub use exponent::{count_of_degree, exponent_transforms, exponents_of_degree, Exponent, SignedExponent, Transforms};
pub use order::{compare, TermOrder};
