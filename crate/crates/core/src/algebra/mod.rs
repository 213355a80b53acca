//! Multivector arithmetic for Cl(p,q), `p + q <= 3`.

mod blade;
mod invariants;
mod multivector;
mod signature;
mod symmetric;

pub use blade::{blade_product, canonical_order, Blade};
pub use invariants::{determinant, invariants3, Invariants};
pub use multivector::{product_table, Multivector, ProductTable};
pub use signature::Signature;
pub use symmetric::{dual_map, pseudoscalar_square, SymmetricForm};
