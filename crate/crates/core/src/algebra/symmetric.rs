use super::multivector::{product_table, Multivector};
use super::Signature;
use crate::error::{Error, Result};

/// The decomposition `A = s + v + (S + V) I` of an n = 3 multivector.
///
/// `vector` holds the grade-1 coefficients and `dual` the vector whose
/// product with the pseudoscalar gives the bivector part.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SymmetricForm {
    pub scalar: f64,
    pub vector: [f64; 3],
    pub pseudoscalar: f64,
    pub dual: [f64; 3],
}

/// For each basis vector `e_i`, the bivector slot and sign with
/// `e_i I = sign * blade[slot]`, read off the product table.
pub fn dual_map(sig: Signature) -> Result<[(f64, usize); 3]> {
    require_dim3(sig)?;
    let table = product_table(sig);
    let mut map = [(0.0, 0); 3];
    for (i, m) in map.iter_mut().enumerate() {
        // vectors sit at canonical slots 1..=3, the pseudoscalar at 7
        *m = table.entry(i + 1, 7);
    }
    Ok(map)
}

/// `I^2` for the algebra: -1 in Cl(3,0) and Cl(1,2), +1 in Cl(0,3) and Cl(2,1).
pub fn pseudoscalar_square(sig: Signature) -> f64 {
    let last = sig.blade_count() - 1;
    product_table(sig).entry(last, last).0
}

pub(crate) fn require_dim3(sig: Signature) -> Result<()> {
    if sig.dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            found: sig,
        });
    }
    Ok(())
}

impl SymmetricForm {
    pub fn from_multivector(a: &Multivector) -> Result<Self> {
        let map = dual_map(a.signature())?;
        let c = a.coeffs();
        let mut dual = [0.0; 3];
        for (d, &(sign, slot)) in dual.iter_mut().zip(map.iter()) {
            *d = sign * c[slot];
        }
        Ok(SymmetricForm {
            scalar: c[0],
            vector: [c[1], c[2], c[3]],
            pseudoscalar: c[7],
            dual,
        })
    }

    pub fn to_multivector(&self, sig: Signature) -> Result<Multivector> {
        let map = dual_map(sig)?;
        let mut c = [0.0; 8];
        c[0] = self.scalar;
        c[1..4].copy_from_slice(&self.vector);
        c[7] = self.pseudoscalar;
        for (&v, &(sign, slot)) in self.dual.iter().zip(map.iter()) {
            c[slot] = sign * v;
        }
        Multivector::from_coeffs(sig, &c)
    }
}

impl Multivector {
    pub fn to_symmetric(&self) -> Result<SymmetricForm> {
        SymmetricForm::from_multivector(self)
    }

    pub fn from_symmetric(sig: Signature, form: &SymmetricForm) -> Result<Self> {
        form.to_multivector(sig)
    }
}
