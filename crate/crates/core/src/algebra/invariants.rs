use serde::Serialize;

use super::multivector::Multivector;
use super::symmetric::{pseudoscalar_square, require_dim3};
use crate::error::Result;

/// Coordinate-free scalars of an n = 3 multivector `B`:
/// `bS = <B conj(B)>_0`, `bI = <B conj(B) I>_0` and the determinant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Invariants {
    pub bs: f64,
    pub bi: f64,
    pub det: f64,
}

pub fn invariants3(b: &Multivector) -> Result<Invariants> {
    let sig = b.signature();
    require_dim3(sig)?;
    let norm = b.square_norm_product();
    let bs = norm.scalar_part();
    let bi = (norm * Multivector::pseudoscalar(sig)).scalar_part();
    // bS^2 + bI^2 where I^2 = -1, bS^2 - bI^2 where I^2 = +1
    let det = bs * bs - pseudoscalar_square(sig) * bi * bi;
    Ok(Invariants { bs, bi, det })
}

/// Determinant of `B`; a real square root can only exist when it is >= 0.
///
/// For n <= 2 this is the quadratic form `<B conj(B)>_0`
/// (`b0^2 - b1^2` in Cl(1,0), `b0^2 + b1^2 + b2^2 + b3^2` in Cl(0,2), ...),
/// for n = 3 the quartic `D` of [`invariants3`].
pub fn determinant(b: &Multivector) -> f64 {
    if b.signature().dim() == 3 {
        invariants3(b).map(|inv| inv.det).unwrap_or(f64::NAN)
    } else {
        b.square_norm_product().scalar_part()
    }
}

impl Multivector {
    /// `B conj(B)`; central in every algebra handled here.
    pub fn square_norm_product(&self) -> Multivector {
        *self * self.clifford_conjugate()
    }
}
