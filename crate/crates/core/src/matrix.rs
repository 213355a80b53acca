//! Cl(3,0) and its image in complex 2x2 matrices.
//!
//! Basis vectors map to the Pauli matrices and blades to their products.
//! The map is an isomorphism of real algebras, so the exact real preimage of
//! a matrix square root is a genuine multivector root. Reading the complex
//! scalars of a matrix square-root formula as scalar coefficients instead
//! yields a complex multivector whose square differs from `B`, which
//! [`demonstrate_mismatch`] quantifies.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{canonical_order, product_table, Multivector, Signature};
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// A complex 2x2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMat2(pub [[Complex64; 2]; 2]);

impl ComplexMat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        ComplexMat2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn det(&self) -> Complex64 {
        self.0[0][0] * self.0[1][1] - self.0[0][1] * self.0[1][0]
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let m = self.0;
        Self::new(k * m[0][0], k * m[0][1], k * m[1][0], k * m[1][1])
    }

    /// Largest entry modulus.
    pub fn norm_max(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |m, z| m.max(z.norm()))
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (*self - *other).norm_max() <= tol
    }
}

impl Add for ComplexMat2 {
    type Output = Self;

    fn add(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        Self::new(
            a[0][0] + b[0][0],
            a[0][1] + b[0][1],
            a[1][0] + b[1][0],
            a[1][1] + b[1][1],
        )
    }
}

impl Sub for ComplexMat2 {
    type Output = Self;

    fn sub(self, o: Self) -> Self {
        self + o.scale(-ONE)
    }
}

impl Mul for ComplexMat2 {
    type Output = Self;

    fn mul(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

/// A Cl(3,0) multivector with complex coefficients, in canonical blade order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMultivector(pub [Complex64; 8]);

impl ComplexMultivector {
    pub fn from_real(a: &Multivector) -> Result<Self> {
        require_cl30(a.signature())?;
        let mut c = [ZERO; 8];
        for (z, &x) in c.iter_mut().zip(a.coeffs()) {
            *z = Complex64::new(x, 0.0);
        }
        Ok(ComplexMultivector(c))
    }

    pub fn re(&self) -> Multivector {
        let c: Vec<f64> = self.0.iter().map(|z| z.re).collect();
        Multivector::from_coeffs(Signature::CL30, &c).expect("eight coefficients")
    }

    pub fn im(&self) -> Multivector {
        let c: Vec<f64> = self.0.iter().map(|z| z.im).collect();
        Multivector::from_coeffs(Signature::CL30, &c).expect("eight coefficients")
    }

    /// Largest imaginary part among the coefficients.
    pub fn max_imag(&self) -> f64 {
        self.0.iter().fold(0.0, |m, z| m.max(z.im.abs()))
    }

    pub fn scale(&self, k: Complex64) -> Self {
        ComplexMultivector(self.0.map(|z| k * z))
    }

    /// Geometric product over the complex numbers, using Cl(3,0)'s structure
    /// constants.
    pub fn product(&self, other: &Self) -> Self {
        let table = product_table(Signature::CL30);
        let mut out = [ZERO; 8];
        for (i, &x) in self.0.iter().enumerate() {
            for (j, &y) in other.0.iter().enumerate() {
                let (sign, k) = table.entry(i, j);
                out[k] += x * y * sign;
            }
        }
        ComplexMultivector(out)
    }

    pub fn square(&self) -> Self {
        self.product(self)
    }

    /// Largest coefficient modulus of `self - other`.
    pub fn distance(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(0.0, |m, (a, b)| m.max((a - b).norm()))
    }
}

impl fmt::Display for ComplexMultivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (blade, z) in canonical_order(Signature::CL30).iter().zip(self.0.iter()) {
            if *z == ZERO {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({} {:+}i)", z.re, z.im)?;
            if blade.grade() > 0 {
                write!(f, " {blade}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn require_cl30(sig: Signature) -> Result<()> {
    if sig != Signature::CL30 {
        return Err(Error::SignatureMismatch {
            left: sig,
            right: Signature::CL30,
        });
    }
    Ok(())
}

/// Images of the canonical blades: `e1, e2, e3` go to the Pauli matrices and
/// every other blade to the product of its vectors' images.
pub fn pauli_basis() -> [ComplexMat2; 8] {
    let sigma = [
        ComplexMat2::new(ZERO, ONE, ONE, ZERO),
        ComplexMat2::new(ZERO, -I, I, ZERO),
        ComplexMat2::new(ONE, ZERO, ZERO, -ONE),
    ];
    let mut out = [ComplexMat2::identity(); 8];
    for (m, blade) in out.iter_mut().zip(canonical_order(Signature::CL30)) {
        *m = blade
            .indices()
            .fold(ComplexMat2::identity(), |acc, i| acc * sigma[i - 1]);
    }
    out
}

/// The matrix image of a Cl(3,0) multivector.
pub fn to_pauli(a: &Multivector) -> Result<ComplexMat2> {
    require_cl30(a.signature())?;
    Ok(pauli_basis()
        .iter()
        .zip(a.coeffs())
        .fold(ComplexMat2::zero(), |acc, (m, &c)| {
            acc + m.scale(Complex64::new(c, 0.0))
        }))
}

/// The real multivector whose image is `m`.
///
/// The eight basis images span Mat(2,C) over the reals, so every matrix has
/// exactly one real preimage; the result therefore has zero imaginary parts.
pub fn from_pauli(m: &ComplexMat2) -> ComplexMultivector {
    let [[m00, m01], [m10, m11]] = m.0;
    // m = z0 1 + z1 sx + z2 sy + z3 sz with complex z, and i 1 = e123,
    // i sx = e23, i sy = -e13, i sz = e12
    let z0 = (m00 + m11) * 0.5;
    let z1 = (m01 + m10) * 0.5;
    let z2 = I * (m01 - m10) * 0.5;
    let z3 = (m00 - m11) * 0.5;
    let re = |x: f64| Complex64::new(x, 0.0);
    ComplexMultivector([
        re(z0.re),
        re(z1.re),
        re(z2.re),
        re(z3.re),
        re(z3.im),
        re(-z2.im),
        re(z1.im),
        re(z0.im),
    ])
}

/// `eps2 (B + eps1 sqrt(det B) I) / sqrt(tr B + 2 eps1 sqrt(det B))` with
/// principal complex square roots.
pub fn sullivan_sqrt(b: &ComplexMat2, eps1: i8, eps2: i8) -> Result<ComplexMat2> {
    let (e1, e2) = (eps1.signum() as f64, eps2.signum() as f64);
    let root_det = b.det().sqrt();
    let den = (b.trace() + root_det * (2.0 * e1)).sqrt();
    if den.norm() <= 1e-12 * b.norm_max().max(1.0).sqrt() {
        return Err(Error::SingularBranch { eps1, eps2 });
    }
    let num = *b + ComplexMat2::identity().scale(root_det * e1);
    Ok(num.scale(Complex64::new(e2, 0.0) / den))
}

/// Sullivan's formula read with its determinant and trace as complex scalar
/// coefficients: `A = eps2 (B + eps1 sqrt(Det)) / sqrt(Tr + 2 eps1 sqrt(Det))`
/// as an element of complexified Cl(3,0).
pub fn complex_scalar_root(b: &Multivector, eps1: i8, eps2: i8) -> Result<ComplexMultivector> {
    let m = to_pauli(b)?;
    let (e1, e2) = (eps1.signum() as f64, eps2.signum() as f64);
    let root_det = m.det().sqrt();
    let den = (m.trace() + root_det * (2.0 * e1)).sqrt();
    if den.norm() <= 1e-12 * m.norm_max().max(1.0).sqrt() {
        return Err(Error::SingularBranch { eps1, eps2 });
    }
    let mut num = ComplexMultivector::from_real(b)?;
    num.0[0] += root_det * e1;
    Ok(num.scale(Complex64::new(e2, 0.0) / den))
}

/// What one sign choice of the matrix formula gives back in the algebra.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchReport {
    pub eps1: i8,
    pub eps2: i8,
    /// The denominator of the formula vanishes on this branch.
    pub singular: bool,
    /// Largest modulus of `M^2 - B` for the matrix root `M`.
    pub matrix_residual: f64,
    /// The complex-scalar reading of the root, as `[re, im]` per blade.
    pub root: Vec<[f64; 2]>,
    /// Its square in complexified Cl(3,0), as `[re, im]` per blade.
    pub root_square: Vec<[f64; 2]>,
    /// Largest imaginary coefficient of the root.
    pub imaginary_content: f64,
    /// Largest coefficient modulus of `A^2 - B`.
    pub square_deviation: f64,
    /// `||Re(A)^2 - B||_inf`: how far the real part alone is from a root.
    pub real_part_deviation: f64,
    /// The exact real preimage of the matrix root.
    pub real_preimage: Vec<f64>,
    /// `||R^2 - B||_inf` for that preimage.
    pub real_preimage_residual: f64,
}

/// The four branches of the matrix square root of `B`, mapped back to Cl(3,0).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MismatchReport {
    pub input: Vec<f64>,
    pub matrix: [[[f64; 2]; 2]; 2],
    pub branches: Vec<BranchReport>,
}

impl MismatchReport {
    /// Whether some non-singular branch maps to a real multivector.
    pub fn any_real_branch(&self, tol: f64) -> bool {
        self.branches
            .iter()
            .any(|b| !b.singular && b.imaginary_content <= tol)
    }
}

fn pairs(z: &ComplexMultivector) -> Vec<[f64; 2]> {
    z.0.iter().map(|c| [c.re, c.im]).collect()
}

pub fn demonstrate_mismatch(b: &Multivector) -> Result<MismatchReport> {
    let m = to_pauli(b)?;
    let target = ComplexMultivector::from_real(b)?;
    let mut branches = Vec::new();
    for (eps1, eps2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        let (Ok(root_m), Ok(a)) = (
            sullivan_sqrt(&m, eps1, eps2),
            complex_scalar_root(b, eps1, eps2),
        ) else {
            branches.push(BranchReport {
                eps1,
                eps2,
                singular: true,
                matrix_residual: f64::NAN,
                root: Vec::new(),
                root_square: Vec::new(),
                imaginary_content: f64::NAN,
                square_deviation: f64::NAN,
                real_part_deviation: f64::NAN,
                real_preimage: Vec::new(),
                real_preimage_residual: f64::NAN,
            });
            continue;
        };
        let a2 = a.square();
        let re = a.re();
        let preimage = from_pauli(&root_m).re();
        branches.push(BranchReport {
            eps1,
            eps2,
            singular: false,
            matrix_residual: (root_m * root_m - m).norm_max(),
            root: pairs(&a),
            root_square: pairs(&a2),
            imaginary_content: a.max_imag(),
            square_deviation: a2.distance(&target),
            real_part_deviation: (re.square() - *b).norm_inf(),
            real_preimage: preimage.coeffs().to_vec(),
            real_preimage_residual: (preimage.square() - *b).norm_inf(),
        });
    }
    let entry = |z: Complex64| [z.re, z.im];
    Ok(MismatchReport {
        input: b.coeffs().to_vec(),
        matrix: [
            [entry(m.0[0][0]), entry(m.0[0][1])],
            [entry(m.0[1][0]), entry(m.0[1][1])],
        ],
        branches,
    })
}
