//! Square roots of multivectors in the real Clifford algebras Cl(p,q) with
//! `p + q <= 3`.
//!
//! [`sqrt`] returns every isolated root together with the parametric families
//! of roots that appear in degenerate cases. The [`oracle`] module searches
//! for roots numerically and cross-checks the closed forms, and [`matrix`]
//! relates Cl(3,0) to complex 2x2 matrices.

pub mod algebra;
pub mod error;
pub mod matrix;
mod newton;
pub mod oracle;
pub mod solver;
pub mod text;

pub use algebra::{
    blade_product, determinant, invariants3, Blade, Invariants, Multivector, Signature,
    SymmetricForm,
};
pub use error::{Error, Result};
pub use solver::{sqrt, sqrt_with, ParametricFamily, RootSet, SolverConfig};
pub use text::{format_mv, parse_mv};
