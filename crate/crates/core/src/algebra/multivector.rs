use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};
use std::sync::OnceLock;

use super::blade::{blade_product, canonical_order, Blade};
use super::Signature;
use crate::error::{Error, Result};

/// Multiplication table of one algebra in canonical blade order.
///
/// `entry(i, j) = (sign, k)` means `blade_i * blade_j = sign * blade_k`.
#[derive(Debug)]
pub struct ProductTable {
    len: usize,
    entries: [[(f64, u8); 8]; 8],
}

impl ProductTable {
    fn build(sig: Signature) -> Self {
        let order = canonical_order(sig);
        let mut entries = [[(0.0, 0u8); 8]; 8];
        for (i, &a) in order.iter().enumerate() {
            for (j, &b) in order.iter().enumerate() {
                let (sign, blade) = blade_product(a, b, sig);
                let k = order.iter().position(|&x| x == blade).unwrap();
                entries[i][j] = (sign, k as u8);
            }
        }
        ProductTable {
            len: order.len(),
            entries,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> (f64, usize) {
        let (s, k) = self.entries[i][j];
        (s, k as usize)
    }
}

/// Shared, lazily built multiplication table for `sig`.
pub fn product_table(sig: Signature) -> &'static ProductTable {
    static TABLES: [OnceLock<ProductTable>; 9] = [const { OnceLock::new() }; 9];
    let slot = Signature::ALL.iter().position(|&s| s == sig).unwrap();
    TABLES[slot].get_or_init(|| ProductTable::build(sig))
}

/// An element of Cl(p,q): `2^n` real coefficients in canonical blade order
/// (`a0, a1, a2, a3, a12, a13, a23, a123` for n = 3).
#[derive(Clone, Copy, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: [f64; 8],
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: [0.0; 8],
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[0] = value;
        mv
    }

    /// Unit blade; panics if `blade` uses an index beyond the algebra's dimension.
    pub fn basis(sig: Signature, blade: Blade) -> Self {
        let mut mv = Self::zero(sig);
        let i = blade
            .index_in(sig)
            .filter(|_| blade.max_index() <= sig.dim())
            .unwrap_or_else(|| panic!("{blade} is not a blade of {sig}"));
        mv.coeffs[i] = 1.0;
        mv
    }

    /// The pseudoscalar `I = e_{12..n}`.
    pub fn pseudoscalar(sig: Signature) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[sig.blade_count() - 1] = 1.0;
        mv
    }

    pub fn from_coeffs(sig: Signature, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::CoefficientCount {
                signature: sig,
                expected: sig.blade_count(),
                found: coeffs.len(),
            });
        }
        let mut mv = Self::zero(sig);
        mv.coeffs[..coeffs.len()].copy_from_slice(coeffs);
        Ok(mv)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Coefficients in canonical order, exactly `2^n` of them.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..self.sig.blade_count()]
    }

    pub fn coeffs_mut(&mut self) -> &mut [f64] {
        let n = self.sig.blade_count();
        &mut self.coeffs[..n]
    }

    pub fn coeff(&self, blade: Blade) -> f64 {
        blade
            .index_in(self.sig)
            .filter(|_| blade.max_index() <= self.sig.dim())
            .map_or(0.0, |i| self.coeffs[i])
    }

    pub fn set_coeff(&mut self, blade: Blade, value: f64) {
        let i = blade
            .index_in(self.sig)
            .filter(|_| blade.max_index() <= self.sig.dim())
            .unwrap_or_else(|| panic!("{blade} is not a blade of {}", self.sig));
        self.coeffs[i] = value;
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let table = product_table(self.sig);
        let mut out = Self::zero(self.sig);
        for i in 0..table.len() {
            let a = self.coeffs[i];
            if a == 0.0 {
                continue;
            }
            for j in 0..table.len() {
                let (sign, k) = table.entry(i, j);
                out.coeffs[k] += sign * a * other.coeffs[j];
            }
        }
        Ok(out)
    }

    pub fn square(&self) -> Self {
        self.geometric_product(self).expect("same signature")
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = *self;
        for (o, b) in out.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *o += b;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = *self;
        for (o, b) in out.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *o -= b;
        }
        Ok(out)
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = *self;
        out.coeffs.iter_mut().for_each(|c| *c *= factor);
        out
    }

    /// Keeps only the grade-`k` part.
    pub fn grade_select(&self, k: usize) -> Self {
        let mut out = *self;
        for (c, blade) in out.coeffs.iter_mut().zip(canonical_order(self.sig)) {
            if blade.grade() != k {
                *c = 0.0;
            }
        }
        out
    }

    /// Clifford conjugate: grade `k` picks up `(-1)^(k(k+1)/2)`.
    pub fn clifford_conjugate(&self) -> Self {
        let mut out = *self;
        for (c, blade) in out.coeffs.iter_mut().zip(canonical_order(self.sig)) {
            if matches!(blade.grade(), 1 | 2) {
                *c = -*c;
            }
        }
        out
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn norm_inf(&self) -> f64 {
        self.coeffs().iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    pub fn distance_inf(&self, other: &Self) -> Result<f64> {
        Ok(self.checked_sub(other)?.norm_inf())
    }

    /// `||self - other||_inf <= tol`; false for mismatched signatures.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance_inf(other).is_ok_and(|d| d <= tol)
    }

    pub fn is_finite(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_finite())
    }

    /// Non-zero `(blade, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, f64)> + '_ {
        canonical_order(self.sig)
            .iter()
            .copied()
            .zip(self.coeffs().iter().copied())
            .filter(|(_, c)| *c != 0.0)
    }
}

impl Index<usize> for Multivector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coeffs()[i]
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.sig, crate::text::format_mv(self))
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_mv(self))
    }
}

// Operator forms panic on mismatched signatures; use the `checked_*` methods
// when operands come from untrusted input.
impl Add for Multivector {
    type Output = Multivector;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("signature mismatch in +")
    }
}

impl Sub for Multivector {
    type Output = Multivector;

    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("signature mismatch in -")
    }
}

impl Mul for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: Self) -> Self {
        self.geometric_product(&rhs)
            .expect("signature mismatch in geometric product")
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;

    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;

    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(sig: Signature, c: &[f64]) -> Multivector {
        Multivector::from_coeffs(sig, c).unwrap()
    }

    #[test]
    fn vector_squares_to_metric() {
        let e1 = Multivector::basis(Signature::CL30, Blade::vector(1));
        assert_eq!(e1 * e1, Multivector::scalar(Signature::CL30, 1.0));
    }

    #[test]
    fn quaternion_root_squares_back() {
        let sig = Signature::CL30;
        let root = mv(sig, &[3.0, 0.0, 0.0, 0.0, 1.0, -1.0, 1.0, 0.0]).scale(1.0 / 6f64.sqrt());
        let other = mv(sig, &[0.0, 1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0]).scale(1.0 / 2f64.sqrt());
        let target = mv(sig, &[1.0, 0.0, 0.0, 0.0, 1.0, -1.0, 1.0, 0.0]);
        for r in [root, -root, other, -other] {
            assert!(r.square().approx_eq(&target, 1e-14));
        }
    }

    #[test]
    fn grade_selection() {
        let sig = Signature::CL30;
        let a = mv(sig, &[1.0, 2.0, 0.0, 0.0, 3.0, 0.0, 0.0, 0.0]);
        assert_eq!(
            a.grade_select(1),
            mv(sig, &[0.0, 2.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0])
        );
        assert_eq!(a.grade_select(0).scalar_part(), 1.0);
        let e1 = Multivector::basis(sig, Blade::vector(1));
        assert_eq!(e1 + (-e1), Multivector::zero(sig));
    }

    #[test]
    fn conjugation_signs() {
        let sig = Signature::CL10;
        assert_eq!(
            mv(sig, &[2.0, 5.0]).clifford_conjugate(),
            mv(sig, &[2.0, -5.0])
        );
        let i = Multivector::pseudoscalar(Signature::CL30);
        assert_eq!(i.clifford_conjugate(), i);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = Multivector::zero(Signature::CL30);
        let b = Multivector::zero(Signature::CL03);
        assert!(matches!(
            a.geometric_product(&b),
            Err(Error::SignatureMismatch { .. })
        ));
        assert!(a.checked_add(&b).is_err());
        assert!(Multivector::from_coeffs(Signature::CL20, &[1.0; 3]).is_err());
    }
}
