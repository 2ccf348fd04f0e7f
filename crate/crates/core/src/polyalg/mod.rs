//! Rational polynomials, the Gröbner engine, colon ideals, intersections,
//! saturation and weight degenerations.

mod degeneration;
mod groebner;
mod ideal;
mod poly;
mod saturation;
pub mod text;

pub use degeneration::{find_weight, weight_degeneration, DegenerationFamily};
pub use groebner::{groebner, is_groebner, normal_form, s_polynomial, sort_descending};
pub use ideal::Ideal;
pub use poly::{int, Coeff, Polynomial, Term};
pub use saturation::saturate;
