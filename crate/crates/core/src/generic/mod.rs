//! Unipotent coordinate changes, certified generic initial ideals and the
//! coefficient calculus of the generic substitution `φ`.

mod gin;
mod symbolic;
mod unipotent;

pub(crate) use gin::certify;
pub use gin::{gin, gin_certified, Certified};
pub use symbolic::{
    alpha, matrices_shift_bijectively, mu, p_rho, p_rho_forced, phi_expand, verify_alpha_shift,
    verify_alpha_shift_forced, y_count, y_index, AlphaShiftReport, PhiExpansion, SymbolicPolynomial,
};
pub use unipotent::{apply_change, UnipotentChange};
