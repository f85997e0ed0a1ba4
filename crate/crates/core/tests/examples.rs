//! Worked examples for each public operation, checked end to end.

mod common;

use gkrs_core::chars::{
    decompose_virtual, freudenthal_character, tensor_decompose, weyl_dimension,
};
use gkrs_core::cliffmat::{build_clifford, commutant, quantize, so3_generators};
use gkrs_core::embed::{coset_representatives, restrict_character, spin_module};
use gkrs_core::gkrs::{dirac_induce, euler_restriction, gkrs_multiplet, verify_adjointness};
use gkrs_core::rootdata::{build_root_system, dominant_representative, reflect, weyl_orbit};
use gkrs_core::superring::{classify_clifford, pushforward_truncated, sr_mul, CliffordKind};
use gkrs_core::{Error, SRElement, TwistLabel, WeightMultiset};
use num_rational::Rational64;

use common::{embedding, w};

fn multiset(entries: &[(&[i64], i64)]) -> WeightMultiset {
    entries.iter().map(|(c, m)| (w(c), *m)).collect()
}

#[test]
fn root_data() {
    let a1 = build_root_system("A1").unwrap();
    assert_eq!(a1.positive_roots(), &[w(&[2])]);
    assert_eq!(a1.rho(), &w(&[1]));
    let a2 = build_root_system("A2").unwrap();
    assert_eq!(a2.positive_roots().len(), 3);
    assert_eq!(a2.rho(), &w(&[1, 1]));
    let a1a1 = build_root_system("A1xA1").unwrap();
    let p = a1a1.positive_roots();
    assert_eq!(a1a1.inner(&p[0], &p[1]), Rational64::from_integer(0));
    assert!(matches!(build_root_system("F4"), Err(Error::UnsupportedType(t)) if t.contains("F4")));

    assert_eq!(reflect(&a1, 0, &w(&[3])).unwrap(), w(&[-3]));
    assert_eq!(reflect(&a2, 0, &w(&[1, 0])).unwrap(), w(&[-1, 1]));
    assert_eq!(reflect(&a2, 1, &w(&[0, 0])).unwrap(), w(&[0, 0]));

    assert_eq!(weyl_orbit(&a1, &w(&[3])).unwrap().len(), 2);
    assert_eq!(weyl_orbit(&a2, &w(&[1, 1])).unwrap().len(), 6);
    assert_eq!(weyl_orbit(&a2, &w(&[1, 0])).unwrap().len(), 3);

    assert_eq!(
        dominant_representative(&a1, &w(&[-3]), None).unwrap(),
        (w(&[3]), -1, true)
    );
    assert_eq!(
        dominant_representative(&a1, &w(&[0]), None).unwrap(),
        (w(&[0]), 1, false)
    );
    assert_eq!(
        dominant_representative(&a2, &w(&[-1, -1]), None).unwrap(),
        (w(&[1, 1]), -1, true)
    );

    let b2 = build_root_system("B2").unwrap().weyl_elements().unwrap();
    assert_eq!(b2.len(), 8);
    assert_eq!(b2.iter().filter(|e| e.sign == 1).count(), 4);
    assert_eq!(build_root_system("G2").unwrap().weyl_order().unwrap(), 12);
    let tiny = build_root_system("G2").unwrap().with_weyl_bound(5);
    assert!(matches!(
        tiny.weyl_order(),
        Err(Error::WeylBoundExceeded { bound: 5 })
    ));
}

#[test]
fn characters() {
    let a1 = build_root_system("A1").unwrap();
    let a2 = build_root_system("A2").unwrap();
    assert_eq!(
        freudenthal_character(a1.chamber(), &w(&[2])).unwrap(),
        multiset(&[(&[2], 1), (&[0], 1), (&[-2], 1)])
    );
    let adj = freudenthal_character(a2.chamber(), &w(&[1, 1])).unwrap();
    assert_eq!(adj.total(), 8);
    assert_eq!(adj.get(&w(&[0, 0])), 2);
    assert_eq!(weyl_dimension(a1.chamber(), &w(&[3])).unwrap(), 4);
    assert_eq!(weyl_dimension(a2.chamber(), &w(&[1, 1])).unwrap(), 8);
    assert_eq!(weyl_dimension(a2.chamber(), &w(&[0, 0])).unwrap(), 1);

    let cg = tensor_decompose(a1.chamber(), &w(&[1]), &w(&[1])).unwrap();
    assert_eq!(cg, [(w(&[2]), 1), (w(&[0]), 1)].into_iter().collect());
    let unit = tensor_decompose(a2.chamber(), &w(&[2, 1]), &w(&[0, 0])).unwrap();
    assert_eq!(unit, [(w(&[2, 1]), 1)].into_iter().collect());
    let eight_one = tensor_decompose(a2.chamber(), &w(&[1, 0]), &w(&[0, 1])).unwrap();
    assert_eq!(
        eight_one,
        [(w(&[1, 1]), 1), (w(&[0, 0]), 1)].into_iter().collect()
    );

    let single =
        decompose_virtual(a1.chamber(), &multiset(&[(&[2], 1), (&[0], 1), (&[-2], 1)])).unwrap();
    assert_eq!(single, [(w(&[2]), 1)].into_iter().collect());
    assert!(matches!(
        decompose_virtual(a1.chamber(), &multiset(&[(&[1], 1), (&[-1], -1)])),
        Err(Error::NotInvariant { .. })
    ));
    let two = decompose_virtual(
        a1.chamber(),
        &multiset(&[(&[3], 1), (&[1], 2), (&[-1], 2), (&[-3], 1)]),
    )
    .unwrap();
    assert_eq!(two, [(w(&[3]), 1), (w(&[1]), 1)].into_iter().collect());
}

#[test]
fn embeddings() {
    let e = embedding("A1", &[]);
    assert_eq!(e.complement_roots(), &[w(&[2])]);
    let s = spin_module(&e);
    assert_eq!(s.s0, multiset(&[(&[1], 1)]));
    assert_eq!(s.s1, multiset(&[(&[-1], 1)]));
    assert_eq!(restrict_character(&e, &w(&[2])).unwrap().support_len(), 3);
    assert_eq!(
        coset_representatives(&e, &w(&[3])).unwrap(),
        vec![(1, w(&[3])), (-1, w(&[-3]))]
    );

    let e = embedding("A2", &[&[2, -1]]);
    assert_eq!(e.complement_roots().len(), 2);
    assert_eq!(e.display_h(e.rho_h()), "(1,-1/2)");
    let s = spin_module(&e);
    assert_eq!((s.s0.total(), s.s1.total()), (2, 2));
    assert_eq!(coset_representatives(&e, &w(&[1, 1])).unwrap().len(), 3);
    // V_(1,0) restricts to a doublet plus a singlet
    let r = restrict_character(&e, &w(&[1, 0])).unwrap();
    assert_eq!(r.support_len(), 3);
    let d = decompose_virtual(e.h(), &r).unwrap();
    let dims: Vec<i64> = d
        .iter()
        .map(|(x, _)| weyl_dimension(e.h(), x).unwrap())
        .collect();
    assert_eq!(d.len(), 2);
    assert_eq!(dims.iter().sum::<i64>(), 3);

    let e = embedding("B2", &[&[2, -2], &[0, 2]]);
    assert_eq!(coset_representatives(&e, &w(&[1, 1])).unwrap().len(), 2);
}

#[test]
fn gkrs_maps() {
    let e = embedding("A1", &[]);
    assert_eq!(
        euler_restriction(&e, &w(&[2])).unwrap(),
        [(w(&[3]), 1), (w(&[-3]), -1)].into_iter().collect()
    );
    assert_eq!(
        gkrs_multiplet(&e, &w(&[0])).unwrap().members,
        vec![(1, w(&[1])), (-1, w(&[-1]))]
    );
    assert_eq!(dirac_induce(&e, &w(&[3])).unwrap(), Some((1, w(&[2]))));
    assert_eq!(dirac_induce(&e, &w(&[0])).unwrap(), None);
    assert_eq!(dirac_induce(&e, &w(&[-2])).unwrap(), Some((-1, w(&[1]))));
    assert_eq!(verify_adjointness(&e, &w(&[3]), &w(&[2])).unwrap(), (1, 1));
    assert_eq!(verify_adjointness(&e, &w(&[3]), &w(&[4])).unwrap(), (0, 0));

    let e = embedding("A2", &[&[2, -1]]);
    assert_eq!(euler_restriction(&e, &w(&[0, 0])).unwrap().len(), 3);
    let e = embedding("B2", &[&[2, -2], &[0, 2]]);
    assert_eq!(gkrs_multiplet(&e, &w(&[3, 1])).unwrap().len(), 2);
}

#[test]
fn super_ring() {
    assert_eq!(classify_clifford(0).unwrap().kind, CliffordKind::MPair);
    assert_eq!(classify_clifford(0).unwrap().rank_of_sr, 1);
    assert_eq!(classify_clifford(1).unwrap().kind, CliffordKind::Q);
    assert_eq!(classify_clifford(2).unwrap().kind, CliffordKind::MPair);

    let a1 = build_root_system("A1").unwrap();
    let v = SRElement::irreducible(w(&[1]));
    let sq = sr_mul(&v, &v, a1.chamber()).unwrap();
    assert_eq!(sq.terms, [(w(&[2]), 1), (w(&[0]), 1)].into_iter().collect());

    let e = embedding("A1", &[]);
    let p = pushforward_truncated(&e, &SRElement::irreducible(w(&[0])), 1).unwrap();
    assert_eq!(p.terms, [(w(&[0]), 1), (w(&[2]), 1)].into_iter().collect());
    let zero = SRElement::zero(0, TwistLabel::zero());
    assert!(pushforward_truncated(&e, &zero, 5).unwrap().is_zero());
}

#[test]
fn clifford_matrices() {
    let c1 = commutant(&build_clifford(1).unwrap());
    assert_eq!(c1.kind(), CliffordKind::Q);
    assert!(c1.odd_square.is_some());
    assert_eq!(commutant(&build_clifford(2).unwrap()).odd_dim, 0);

    // L₁ rotates e₂ ↦ e₃; its quantization is ½ e₂e₃ (sign fixed by [r̃(A), v] = A v)
    let alg = build_clifford(3).unwrap();
    let q = quantize(&alg, &so3_generators()[0]).unwrap();
    let e = &alg.generators;
    let half = num_complex::Complex::new(Rational64::new(1, 2), Rational64::from_integer(0));
    assert_eq!(q, (&e[1] * &e[2]).scale(&half));
    let commutator = q.commutator(&e[1]);
    assert_eq!(commutator, e[2]);
}
