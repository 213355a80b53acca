//! Worked examples with their reference roots, shared by the test targets.
#![allow(dead_code)]

use mvsqrt::{parse_mv, Multivector, Signature};

pub fn mv(sig: Signature, c: &[f64]) -> Multivector {
    Multivector::from_coeffs(sig, c).unwrap()
}

pub fn parse(sig: Signature, text: &str) -> Multivector {
    parse_mv(text, sig).unwrap()
}

/// Coefficients by blade name for a three-dimensional algebra.
pub fn mv3(sig: Signature, terms: &[(&str, f64)]) -> Multivector {
    const NAMES: [&str; 8] = ["1", "e1", "e2", "e3", "e12", "e13", "e23", "e123"];
    let mut c = [0.0; 8];
    for &(name, x) in terms {
        let k = NAMES.iter().position(|n| *n == name).expect("blade name");
        c[k] += x;
    }
    mv(sig, &c)
}

pub fn with_negatives(roots: &[Multivector]) -> Vec<Multivector> {
    roots.iter().flat_map(|a| [*a, -*a]).collect()
}

/// Whether `found` and `expected` agree as sets up to `tol`.
pub fn same_set(found: &[Multivector], expected: &[Multivector], tol: f64) -> bool {
    found.len() == expected.len()
        && expected
            .iter()
            .all(|e| found.iter().any(|f| f.approx_eq(e, tol)))
        && found
            .iter()
            .all(|f| expected.iter().any(|e| e.approx_eq(f, tol)))
}

pub struct Example {
    pub name: &'static str,
    pub input: Multivector,
    pub roots: Vec<Multivector>,
}

pub fn example1() -> Example {
    let sig = Signature::CL30;
    let r5 = 5f64.sqrt();
    let (c1, c2) = ((r5 - 2.0).sqrt(), (r5 + 2.0).sqrt());
    let a1 = mv3(
        sig,
        &[
            ("1", r5 - 2.0),
            ("e1", 1.0),
            ("e23", r5 - 2.0),
            ("e123", -1.0),
        ],
    ) * (-0.5 * c2);
    let a3 = mv3(
        sig,
        &[
            ("1", 2.0 + r5),
            ("e1", 1.0),
            ("e23", -(2.0 + r5)),
            ("e123", 1.0),
        ],
    ) * (0.5 * c1);
    Example {
        name: "Cl(3,0) e1 - 2e23",
        input: parse(sig, "e1 - 2e23"),
        roots: with_negatives(&[a1, a3]),
    }
}

pub fn example2() -> Example {
    let sig = Signature::CL30;
    Example {
        name: "Cl(3,0) -1 + e3 - e12 + e123/2",
        input: parse(sig, "-1 + e3 - e12 + 0.5e123"),
        roots: with_negatives(&[
            parse(sig, "-0.5 + e12 - 0.5e123"),
            parse(sig, "0.5e3 + 0.5e12 - e123"),
        ]),
    }
}

pub fn example3() -> Example {
    let sig = Signature::CL30;
    let r = 0.5f64.sqrt();
    let (c1, c2) = ((r - 0.5).sqrt(), (r + 0.5).sqrt());
    Example {
        name: "Cl(3,0) -1 + e123",
        input: parse(sig, "-1 + e123"),
        roots: with_negatives(&[mv3(sig, &[("1", c1), ("e123", c2)])]),
    }
}

pub fn example4() -> Example {
    let sig = Signature::CL30;
    Example {
        name: "Cl(3,0) 1 + e12 - e13 + e23",
        input: parse(sig, "1 + e12 - e13 + e23"),
        roots: with_negatives(&[
            parse(sig, "e1 + e2 + e3 + e123") * 0.5f64.sqrt(),
            parse(sig, "3 + e12 - e13 + e23") * (1.0 / 6f64.sqrt()),
        ]),
    }
}

pub fn example5() -> Example {
    let sig = Signature::CL12;
    let r5 = 5f64.sqrt();
    let (c1, c2) = ((r5 - 2.0).sqrt(), (r5 + 2.0).sqrt());
    let a1 = mv3(sig, &[("e1", -c2), ("e123", c2), ("1", -c1), ("e23", -c1)]) * 0.5;
    let a3 = mv3(sig, &[("e1", -c1), ("e123", -c1), ("1", -c2), ("e23", c2)]) * 0.5;
    Example {
        name: "Cl(1,2) e1 - 2e23",
        input: parse(sig, "e1 - 2e23"),
        roots: with_negatives(&[a1, a3]),
    }
}

/// The four reference roots `A1..A4`, in order.
pub fn example6_reference() -> [Multivector; 4] {
    let sig = Signature::CL03;
    let r3 = 3f64.sqrt();
    let (d1, d2, d3) = (
        (2.0 - r3).sqrt(),
        (2.0 + r3).sqrt(),
        2f64.sqrt() - 6f64.sqrt(),
    );
    [
        mv3(sig, &[("1", d1), ("e1", d2), ("e23", -d1), ("e123", d2)]) * 0.5,
        mv3(
            sig,
            &[
                ("1", -d2),
                ("e1", d3 / 2.0),
                ("e23", d2),
                ("e123", -1.0 / d2),
            ],
        ) * 0.5,
        mv3(
            sig,
            &[("1", d2), ("e1", d1), ("e23", -d2), ("e123", 1.0 / d2)],
        ) * 0.5,
        mv3(
            sig,
            &[
                ("1", d3 / 2.0),
                ("e1", -d2),
                ("e23", -d3 / 2.0),
                ("e123", -d2),
            ],
        ) * 0.5,
    ]
}

pub fn example6() -> Example {
    Example {
        name: "Cl(0,3) e1 - 2e23",
        input: parse(Signature::CL03, "e1 - 2e23"),
        roots: example6_reference().to_vec(),
    }
}

/// The reference family members `A1..A4` of `-e3 + e12 + 4e123` in Cl(0,3),
/// or `None` where the radicand is negative.
pub fn example7_reference(v2: f64, v3: f64) -> [Option<Multivector>; 4] {
    let sig = Signature::CL03;
    let r5 = 5f64.sqrt();
    let (c1, c2, c3) = ((r5 - 2.0).sqrt(), (r5 + 2.0).sqrt(), 6.0 - r5);
    let rad12 = -4.0 * v2 * v2 + 4.0 * (c1 - v3) * v3 + c3;
    let rad34 = -4.0 * v2 * v2 - 4.0 * v3 * (v3 + c1) + c3;
    let first = |sign: f64| {
        (rad12 >= 0.0).then(|| {
            let q = 0.5 * sign * rad12.sqrt();
            mv3(
                sig,
                &[
                    ("e1", q),
                    ("e23", q),
                    ("e12", -v3),
                    ("e13", v2),
                    ("e2", -v2),
                    ("e3", c1 - v3),
                    ("e123", -0.5 * c2),
                    ("1", -0.5 * c2),
                ],
            )
        })
    };
    let second = |sign: f64| {
        (rad34 >= 0.0).then(|| {
            let q = sign * rad34.sqrt();
            mv3(
                sig,
                &[
                    ("e1", q),
                    ("e23", q),
                    ("e12", -2.0 * v3),
                    ("e13", 2.0 * v2),
                    ("e2", -2.0 * v2),
                    ("e3", -2.0 * (v3 + c1)),
                    ("e123", c2),
                    ("1", c2),
                ],
            ) * 0.5
        })
    };
    [first(-1.0), first(1.0), second(-1.0), second(1.0)]
}

pub fn example8() -> Example {
    let sig = Signature::CL21;
    let r2 = 2f64.sqrt();
    let (c1, c2) = ((2.0 + r2).sqrt(), (2.0 - r2).sqrt());
    let k = 1.0 / (2.0 * r2);
    let roots = [
        mv3(sig, &[("e2", c1), ("e23", -c1), ("e123", -r2 * c2)]) * 0.5,
        mv3(sig, &[("e2", -1.0 / c1), ("e23", 1.0 / c1), ("e123", c1)]) * (1.0 / r2),
        mv3(sig, &[("1", r2 * c2), ("e1", c1), ("e13", c1)]) * 0.5,
        mv3(sig, &[("1", c1), ("e1", 1.0 / c1), ("e13", 1.0 / c1)]) * (1.0 / r2),
        mv3(
            sig,
            &[
                ("1", r2 * c2),
                ("e1", -c2),
                ("e2", -c1),
                ("e13", -c2),
                ("e23", c1),
                ("e123", r2 * c1),
            ],
        ) * k,
        mv3(
            sig,
            &[
                ("1", r2 * c1),
                ("e1", c1),
                ("e2", -c2),
                ("e13", c1),
                ("e23", c2),
                ("e123", -2.0 / c1),
            ],
        ) * k,
        mv3(
            sig,
            &[
                ("1", r2 * c1),
                ("e1", c1),
                ("e2", c2),
                ("e13", c1),
                ("e23", -c2),
                ("e123", 2.0 / c1),
            ],
        ) * k,
        mv3(
            sig,
            &[
                ("1", -r2 * c2),
                ("e1", c2),
                ("e2", -c1),
                ("e13", c2),
                ("e23", c1),
                ("e123", r2 * c1),
            ],
        ) * k,
    ];
    Example {
        name: "Cl(2,1) 2 + e1 + e13",
        input: parse(sig, "2 + e1 + e13"),
        roots: with_negatives(&roots),
    }
}

/// `6 + 2e1 + 3e2 - 4e12` in Cl(2,0), Cl(1,1) and Cl(0,2).
pub fn two_dimensional() -> Vec<Example> {
    let root =
        |sig: Signature, scalar: f64, norm: f64| mv(sig, &[scalar, 2.0, 3.0, -4.0]) * (1.0 / norm);
    let (r39, r65) = (39f64.sqrt(), 65f64.sqrt());
    vec![
        Example {
            name: "Cl(2,0) 6 + 2e1 + 3e2 - 4e12",
            input: parse(Signature::CL20, "6 + 2e1 + 3e2 - 4e12"),
            roots: with_negatives(&[root(Signature::CL20, 6.0 + r39, (2.0 * (6.0 + r39)).sqrt())]),
        },
        Example {
            name: "Cl(1,1) 6 + 2e1 + 3e2 - 4e12",
            input: parse(Signature::CL11, "6 + 2e1 + 3e2 - 4e12"),
            roots: with_negatives(&[
                root(Signature::CL11, 1.0, 2f64.sqrt()),
                root(Signature::CL11, 11.0, 22f64.sqrt()),
            ]),
        },
        Example {
            name: "Cl(0,2) 6 + 2e1 + 3e2 - 4e12",
            input: parse(Signature::CL02, "6 + 2e1 + 3e2 - 4e12"),
            roots: with_negatives(&[root(Signature::CL02, 6.0 + r65, (2.0 * (6.0 + r65)).sqrt())]),
        },
    ]
}
