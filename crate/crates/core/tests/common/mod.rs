#![allow(dead_code)]

use gkrs_core::embed::build_embedding;
use gkrs_core::rootdata::build_root_system;
use gkrs_core::{Embedding, Weight};

pub fn w(c: &[i64]) -> Weight {
    Weight::new(c.to_vec())
}

pub fn embedding(g: &str, roots: &[&[i64]]) -> Embedding {
    let rs = build_root_system(g).unwrap();
    let roots: Vec<Weight> = roots.iter().map(|r| w(r)).collect();
    build_embedding(&rs, &roots).unwrap()
}

/// The equal-rank pairs exercised by the theorem checks.
pub fn catalog() -> Vec<(&'static str, Embedding)> {
    vec![
        ("A1⊃t", embedding("A1", &[])),
        ("A2⊃t", embedding("A2", &[])),
        ("A2⊃A1⊕u(1)", embedding("A2", &[&[2, -1]])),
        ("B2⊃t", embedding("B2", &[])),
        ("B2⊃A1×A1", embedding("B2", &[&[2, -2], &[0, 2]])),
        ("G2⊃A2", embedding("G2", &[&[-3, 2], &[3, -1]])),
        ("G2⊃A1×A1", embedding("G2", &[&[2, -1], &[0, 1]])),
    ]
}

/// Closed-form dimensions, written out per type (α₁ long in B2, short in C2 and G2).
pub fn dimension_oracle(label: &str, l: &[i64]) -> i64 {
    match label {
        "A1" => l[0] + 1,
        "A1xA1" => (l[0] + 1) * (l[1] + 1),
        "A2" => {
            let (a, b) = (l[0], l[1]);
            (a + 1) * (b + 1) * (a + b + 2) / 2
        }
        "B2" => {
            let (a, b) = (l[0], l[1]);
            (a + 1) * (b + 1) * (a + b + 2) * (2 * a + b + 3) / 6
        }
        "C2" => {
            let (a, b) = (l[0], l[1]);
            (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6
        }
        "G2" => {
            let (a, b) = (l[0], l[1]);
            (a + 1)
                * (b + 1)
                * (a + b + 2)
                * (a + 2 * b + 3)
                * (a + 3 * b + 4)
                * (2 * a + 3 * b + 5)
                / 120
        }
        "A3" => {
            let (a, b, c) = (l[0], l[1], l[2]);
            (a + 1) * (b + 1) * (c + 1) * (a + b + 2) * (b + c + 2) * (a + b + c + 3) / 12
        }
        other => panic!("no dimension oracle for {other}"),
    }
}
