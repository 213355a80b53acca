//! Algebraic and solver properties over random inputs.

mod common;

use common::*;
use mvsqrt::matrix::{sullivan_sqrt, to_pauli, ComplexMat2};
use mvsqrt::oracle::isolated_root_bound;
use mvsqrt::{format_mv, invariants3, parse_mv, sqrt, Blade, Multivector, Signature};
use num_complex::Complex64;
use proptest::prelude::*;

fn signature() -> impl Strategy<Value = Signature> {
    prop::sample::select(Signature::ALL.to_vec())
}

fn three_dim() -> impl Strategy<Value = Signature> {
    prop::sample::select(vec![
        Signature::CL30,
        Signature::CL21,
        Signature::CL12,
        Signature::CL03,
    ])
}

fn multivector(sig: Signature) -> impl Strategy<Value = Multivector> {
    prop::collection::vec(-2.0f64..2.0, sig.blade_count()).prop_map(move |c| mv(sig, &c))
}

fn sig_and_mv() -> impl Strategy<Value = Multivector> {
    signature().prop_flat_map(multivector)
}

fn complex() -> impl Strategy<Value = Complex64> {
    (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex64::new(re, im))
}

#[test]
fn anticommutation_all_signatures() {
    for sig in Signature::ALL {
        let n = sig.dim();
        for i in 0..n {
            for j in 0..n {
                let ei = Multivector::basis(sig, Blade::vector(i + 1));
                let ej = Multivector::basis(sig, Blade::vector(j + 1));
                let anti = ei * ej + ej * ei;
                let expected = if i == j {
                    2.0 * sig.vector_square(i + 1)
                } else {
                    0.0
                };
                assert!((anti - Multivector::scalar(sig, expected)).norm_inf() < 1e-15);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn associativity(
        (a, b, c) in signature().prop_flat_map(|s| (multivector(s), multivector(s), multivector(s)))
    ) {
        let lhs = (a * b) * c;
        let rhs = a * (b * c);
        let scale = lhs.norm_inf().max(1.0);
        prop_assert!((lhs - rhs).norm_inf() <= 1e-12 * scale);
    }

    #[test]
    fn norm_product_is_central(b in three_dim().prop_flat_map(multivector)) {
        let n = b * b.clifford_conjugate();
        for k in [1, 2] {
            prop_assert!(n.grade_select(k).norm_inf() <= 1e-12);
        }
    }

    #[test]
    fn symmetric_form_round_trip(b in three_dim().prop_flat_map(multivector)) {
        let back = Multivector::from_symmetric(b.signature(), &b.to_symmetric().unwrap()).unwrap();
        prop_assert!(back.approx_eq(&b, 1e-15));
    }

    #[test]
    fn text_round_trip(b in sig_and_mv()) {
        let back = parse_mv(&format_mv(&b), b.signature()).unwrap();
        prop_assert!(back.approx_eq(&b, 1e-12));
    }

    #[test]
    fn invariant_coefficient_formulas(b in three_dim().prop_flat_map(multivector)) {
        let sig = b.signature();
        let c = |k: usize| b[k];
        let (b0, b1, b2, b3, b12, b13, b23, b123) = (c(0), c(1), c(2), c(3), c(4), c(5), c(6), c(7));
        let cross = 2.0 * b3 * b12 - 2.0 * b2 * b13 + 2.0 * b1 * b23 - 2.0 * b0 * b123;
        let (bs, bi) = match (sig.p(), sig.q()) {
            (3, 0) => (b0*b0 - b1*b1 - b2*b2 - b3*b3 + b12*b12 + b13*b13 + b23*b23 - b123*b123, cross),
            (1, 2) => (b0*b0 - b1*b1 + b2*b2 + b3*b3 - b12*b12 - b13*b13 + b23*b23 - b123*b123, cross),
            (0, 3) => (b0*b0 + b1*b1 + b2*b2 + b3*b3 + b12*b12 + b13*b13 + b23*b23 + b123*b123, -cross),
            (2, 1) => (b0*b0 - b1*b1 - b2*b2 + b3*b3 + b12*b12 - b13*b13 - b23*b23 + b123*b123, -cross),
            _ => unreachable!(),
        };
        let inv = invariants3(&b).unwrap();
        prop_assert!((inv.bs - bs).abs() <= 1e-12);
        prop_assert!((inv.bi - bi).abs() <= 1e-12);
    }

    #[test]
    fn cl30_determinant_bounds_bs(b in multivector(Signature::CL30)) {
        let inv = invariants3(&b).unwrap();
        prop_assert!(inv.det >= 0.0);
        prop_assert!(inv.det.sqrt() >= inv.bs.abs() - 1e-12);
    }

    #[test]
    fn cl03_determinant_positive(b in multivector(Signature::CL03)) {
        prop_assume!(b.norm_inf() > 1e-6);
        prop_assert!(invariants3(&b).unwrap().det > 0.0);
    }

    #[test]
    fn root_set_invariants(b in sig_and_mv()) {
        let roots = sqrt(&b);
        let iso = &roots.isolated;
        prop_assert!(iso.len() <= isolated_root_bound(b.signature()));
        prop_assert!(roots.residuals().iter().all(|&r| r <= 1e-9));
        for a in iso {
            prop_assert!(iso.iter().any(|x| x.approx_eq(&-*a, 1e-9)));
        }
        if !iso.is_empty() {
            prop_assert!(roots.diagnostics.determinant >= -1e-9);
        }
    }

    #[test]
    fn squares_are_recovered(a in sig_and_mv()) {
        let roots = sqrt(&a.square());
        prop_assert!(roots.contains(&a, 1e-6) || roots.contains(&-a, 1e-6));
    }

    #[test]
    fn pauli_homomorphism(
        (a, b) in (multivector(Signature::CL30), multivector(Signature::CL30))
    ) {
        let lhs = to_pauli(&(a * b)).unwrap();
        let rhs = to_pauli(&a).unwrap() * to_pauli(&b).unwrap();
        prop_assert!((lhs - rhs).norm_max() <= 1e-12 * rhs.norm_max().max(1.0));
    }

    #[test]
    fn sullivan_roots_square_back(
        (a, b, c, d) in (complex(), complex(), complex(), complex()),
        eps1 in prop::sample::select(vec![1i8, -1]),
        eps2 in prop::sample::select(vec![1i8, -1]),
    ) {
        let m = ComplexMat2::new(a, b, c, d);
        let denom = (m.trace() + 2.0 * f64::from(eps1) * m.det().sqrt()).norm();
        prop_assume!(denom > 1e-3);
        let root = sullivan_sqrt(&m, eps1, eps2).unwrap();
        prop_assert!((root * root - m).norm_max() <= 1e-10 * m.norm_max().max(1.0) / denom.min(1.0));
    }
}
