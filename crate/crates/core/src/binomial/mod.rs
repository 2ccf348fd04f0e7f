//! Binomial systems `(A, C, ρ)`, their ideals and closed-form Gröbner bases,
//! the section filtration with its structural checks, and verification of
//! Gröbner deformation chains.

mod chain;
mod filtration;
mod random;
mod system;

pub use chain::{verify_chain, Annotation, ChainEdge, ChainReport, EdgeReport, Relation};
pub use filtration::{
    check_filtration, check_gb_formulas, filtration, Branch, Claim, Filtration, FiltrationReport, FiltrationStep,
};
pub use random::random_system;
pub use system::{
    gb_formulas, ideal_of, is_good, section_ideal, section_set, validate_system, BinomialSystem, GbFormulas,
    ValidationReport,
};
