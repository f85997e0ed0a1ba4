mod common;

use std::collections::BTreeSet;

use gkrs_core::chars::{
    decompose_virtual, freudenthal_character, tensor_decompose, weyl_dimension,
};
use gkrs_core::embed::{coset_representatives, restrict_character, spin_module};
use gkrs_core::gkrs::{
    dirac_induce, dominant_mu_grid, gkrs_discrepancy, gkrs_multiplet, verify_adjointness,
};
use gkrs_core::rootdata::build_root_system;
use gkrs_core::superring::{pushforward_truncated, sr_add, sr_mul, sr_pair, sr_pi, TwistLabel};
use gkrs_core::{SRElement, VirtualDecomposition, Weight, WeightMultiset};
use proptest::prelude::*;

use common::{catalog, embedding};

const TYPES: [&str; 7] = ["A1", "A2", "B2", "C2", "G2", "A1xA1", "A3"];

fn typed_weight(max: i64) -> impl Strategy<Value = (&'static str, Weight, Weight)> {
    prop::sample::select(TYPES.to_vec()).prop_flat_map(move |g| {
        let rank = build_root_system(g).unwrap().rank();
        (
            Just(g),
            prop::collection::vec(-max..=max, rank).prop_map(Weight::new),
            prop::collection::vec(-max..=max, rank).prop_map(Weight::new),
        )
    })
}

fn dominant(rank: usize, max: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=max, rank).prop_map(Weight::new)
}

fn sr(terms: Vec<(Vec<i64>, i64)>) -> SRElement {
    SRElement::new(
        0,
        TwistLabel::zero(),
        terms
            .into_iter()
            .map(|(w, c)| (Weight::new(w), c))
            .collect(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_group_preserves_form((g, x, y) in typed_weight(4)) {
        let rs = build_root_system(g).unwrap();
        for el in rs.weyl_elements().unwrap() {
            prop_assert_eq!(rs.inner(&el.apply(&x), &el.apply(&y)), rs.inner(&x, &y));
        }
    }

    #[test]
    fn chamber_reduction((g, x, _y) in typed_weight(5)) {
        let rs = build_root_system(g).unwrap();
        let sys = rs.chamber();
        let (rep, sign, regular) = sys.dominant_representative(&x);
        prop_assert!(sys.is_dominant(&rep));
        prop_assert!(sys.orbit(&x).contains(&rep));
        prop_assert_eq!(sys.dominant_representative(&rep), (rep.clone(), 1, regular));
        prop_assert_eq!(regular, sys.is_regular(&rep));
        // the sign agrees with some group element carrying x to rep
        let signs: BTreeSet<i8> = rs
            .weyl_elements()
            .unwrap()
            .iter()
            .filter(|el| el.apply(&x) == rep)
            .map(|el| el.sign)
            .collect();
        prop_assert!(signs.contains(&sign));
    }

    #[test]
    fn characters_are_invariant_and_have_weyl_dimension(
        (g, l) in prop::sample::select(TYPES.to_vec())
            .prop_flat_map(|g| (Just(g), dominant(build_root_system(g).unwrap().rank(), 3)))
    ) {
        let rs = build_root_system(g).unwrap();
        let ch = freudenthal_character(rs.chamber(), &l).unwrap();
        prop_assert_eq!(ch.invariance_violation(rs.chamber()), None);
        prop_assert_eq!(ch.total(), weyl_dimension(rs.chamber(), &l).unwrap());
        prop_assert_eq!(ch.get(&l), 1);
    }

    #[test]
    fn tensor_products_round_trip(
        (g, a, b) in prop::sample::select(vec!["A1", "A2", "B2", "G2"])
            .prop_flat_map(|g| {
                let r = build_root_system(g).unwrap().rank();
                (Just(g), dominant(r, 2), dominant(r, 2))
            })
    ) {
        let rs = build_root_system(g).unwrap();
        let sys = rs.chamber();
        let ab = tensor_decompose(sys, &a, &b).unwrap();
        prop_assert_eq!(&ab, &tensor_decompose(sys, &b, &a).unwrap());
        let product = freudenthal_character(sys, &a).unwrap().convolve(&freudenthal_character(sys, &b).unwrap());
        prop_assert_eq!(ab.reconstruct(sys).unwrap(), product);
        prop_assert!(ab.iter().all(|(_, c)| c > 0));
        prop_assert_eq!(ab.get(&(&a + &b)), 1);
    }

    #[test]
    fn gkrs_identity_beyond_the_acceptance_grid(
        (idx, l) in (0usize..7).prop_flat_map(|i| {
            let rank = catalog()[i].1.ambient().rank();
            (Just(i), dominant(rank, 5))
        })
    ) {
        let (label, e) = catalog().swap_remove(idx);
        prop_assert_eq!(gkrs_discrepancy(&e, &l).unwrap(), None, "{}", label);
    }

    #[test]
    fn adjointness_random(mu0 in -6i64..=6, mu1 in -6i64..=6, l in dominant(2, 4)) {
        let e = embedding("A2", &[&[2, -1]]);
        // h-units: pick the valid coset by forcing μ + ρ_h into the lattice
        let mu = Weight::new(vec![2 * mu0.abs(), 2 * mu1 + 1]);
        let (lhs, rhs) = verify_adjointness(&e, &mu, &l).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pairing_is_bilinear_and_orthonormal(
        a in prop::collection::vec((prop::collection::vec(0i64..3, 2), -3i64..=3), 0..5),
        b in prop::collection::vec((prop::collection::vec(0i64..3, 2), -3i64..=3), 0..5),
    ) {
        let x = sr(a);
        let y = sr(b);
        prop_assert_eq!(sr_pair(&x, &y), sr_pair(&y, &x));
        prop_assert_eq!(sr_pair(&sr_pi(&x), &y), -sr_pair(&x, &y));
        let s = sr_add(&x, &y).unwrap();
        prop_assert_eq!(sr_pair(&s, &s), sr_pair(&x, &x) + 2 * sr_pair(&x, &y) + sr_pair(&y, &y));
        let brute: i64 = x.terms.iter().map(|(w, c)| c * y.coeff(w)).sum();
        prop_assert_eq!(sr_pair(&x, &y), brute);
    }

    #[test]
    fn products_commute_coefficientwise(
        a in prop::collection::vec((prop::collection::vec(0i64..3, 2), -2i64..=2), 0..3),
        b in prop::collection::vec((prop::collection::vec(0i64..3, 2), -2i64..=2), 0..3),
        da in 0u8..2, db in 0u8..2,
    ) {
        let rs = build_root_system("A2").unwrap();
        let mut x = sr(a);
        let mut y = sr(b);
        x.degree = da;
        y.degree = db;
        let xy = sr_mul(&x, &y, rs.chamber()).unwrap();
        let yx = sr_mul(&y, &x, rs.chamber()).unwrap();
        prop_assert_eq!(&xy.terms, &yx.terms);
        prop_assert_eq!(xy.degree, (da + db) % 2);
    }

    #[test]
    fn frobenius_reciprocity(
        u in prop::collection::vec((prop::collection::vec(-3i64..=3, 1), -2i64..=2), 0..4),
        v in 0i64..=6,
    ) {
        let e = embedding("A1", &[]);
        let u = sr(u);
        let pushed = pushforward_truncated(&e, &u, 4).unwrap();
        let restricted = decompose_virtual(e.h(), &restrict_character(&e, &Weight::new(vec![v])).unwrap()).unwrap();
        let lhs = sr_pair(&pushed, &SRElement::irreducible(Weight::new(vec![v])));
        let rhs = sr_pair(&u, &SRElement::new(0, TwistLabel::zero(), restricted));
        // V_v has height v/2, inside the bound 4 for v ≤ 6
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn twist_labels_form_a_group(
        a in prop::collection::vec((prop::sample::select(vec!["b", "τ_G", "τ_H", "c"]), -2i64..=2), 0..4),
        b in prop::collection::vec((prop::sample::select(vec!["b", "τ_G", "τ_H", "c"]), -2i64..=2), 0..4),
    ) {
        let build = |terms: &[(&str, i64)]| {
            terms.iter().fold(TwistLabel::zero(), |acc, (n, k)| {
                let unit = TwistLabel::named(n);
                let mut t = acc;
                for _ in 0..k.abs() {
                    t = if *k > 0 { &t + &unit } else { &t + &TwistLabel::parse(&format!("-{n}")).unwrap() };
                }
                t
            })
        };
        let x = build(&a);
        let y = build(&b);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) + &TwistLabel::zero(), &x + &y);
        prop_assert_eq!(TwistLabel::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn sr_json_round_trip(
        a in prop::collection::vec((prop::collection::vec(-4i64..=4, 2), -3i64..=3), 0..5),
        half in any::<bool>(),
        degree in 0u8..2,
    ) {
        let terms: VirtualDecomposition = a.into_iter().map(|(w, c)| (Weight::new(w), c)).collect();
        let x = SRElement::new(degree, TwistLabel::named("b").with_half_lattice(half), terms);
        let json = x.to_json();
        let back = SRElement::from_json(&json).unwrap();
        prop_assert_eq!(&back, &x);
        prop_assert_eq!(back.to_json().to_string(), json.to_string());
    }
}

#[test]
fn euler_class_factorizes() {
    for (label, e) in catalog() {
        // Π_{β ∈ Δ⁺(g/h)} (δ_{β/2} − δ_{−β/2}), computed in doubled h-units
        let mut product = WeightMultiset::singleton(Weight::zero(e.ambient().rank()), 1);
        for beta in e.complement_roots() {
            let b = e.to_h_units(beta);
            let mut factor = WeightMultiset::new();
            factor.add_entry(b.clone(), 1);
            factor.add_entry(-&b, -1);
            product = product.convolve(&factor);
        }
        let doubled = spin_module(&e).euler_class().map_weights(|w| w.scaled(2));
        assert_eq!(doubled, product, "{label}");
        let sum: Weight = e
            .complement_roots()
            .iter()
            .fold(Weight::zero(e.ambient().rank()), |acc, b| {
                &acc + &e.to_h_units(b)
            });
        assert_eq!(e.spin_highest_weight().scaled(2), sum, "{label}");
    }
}

#[test]
fn coset_counts() {
    for (label, e) in catalog() {
        let xi = e.rho_g().clone();
        let reps = coset_representatives(&e, &xi).unwrap();
        assert_eq!(
            reps.len() * e.weyl_order_h().unwrap(),
            e.ambient().weyl_order().unwrap(),
            "{label}"
        );
    }
}

#[test]
fn multiplets_of_the_torus_are_weyl_numerators() {
    for g in ["A1", "A2", "B2", "G2"] {
        let e = embedding(g, &[]);
        let rs = e.ambient().clone();
        let l = Weight::new(vec![1; rs.rank()]);
        let m = gkrs_multiplet(&e, &l).unwrap();
        let orbit: BTreeSet<Weight> = rs.chamber().orbit(&(&l + rs.rho()));
        let members: BTreeSet<Weight> = m.members.iter().map(|(_, w)| w.clone()).collect();
        assert_eq!(members, orbit, "{g}");
    }
}

#[test]
fn dirac_preimages_are_multiplets() {
    // μ ↦ ±V_λ hits each λ exactly from the members of λ's multiplet, with
    // the member signs; for A1 ⊃ t the two signs differ, so it is injective.
    for (roots, label) in [(vec![], "A1"), (vec![vec![2, -1]], "A2")] {
        let roots: Vec<&[i64]> = roots.iter().map(Vec::as_slice).collect();
        let e = embedding(label, &roots);
        let images: Vec<(Weight, (i8, Weight))> = dominant_mu_grid(&e, 8)
            .into_iter()
            .filter_map(|mu| dirac_induce(&e, &mu).unwrap().map(|out| (mu, out)))
            .collect();
        for l in gkrs_core::gkrs::dominant_lambda_grid(e.ambient().rank(), 2) {
            let preimage: BTreeSet<(i8, Weight)> = images
                .iter()
                .filter(|(_, (_, x))| *x == l)
                .map(|(mu, (s, _))| (*s, mu.clone()))
                .collect();
            let members: BTreeSet<(i8, Weight)> = gkrs_multiplet(&e, &l)
                .unwrap()
                .members
                .into_iter()
                .collect();
            assert_eq!(preimage, members, "{label} λ={l}");
        }
        if label == "A1" {
            let outs: BTreeSet<&(i8, Weight)> = images.iter().map(|(_, o)| o).collect();
            assert_eq!(outs.len(), images.len());
        }
    }
}
