//! Equal-rank embeddings `h ⊂ g` sharing a Cartan subalgebra.
//!
//! `h` is given by simple roots chosen among the positive roots of `g`, so
//! both algebras share `g`'s weight lattice and `h`'s positive system is
//! compatible with `g`'s standard chamber.
//!
//! When `ρ_g − ρ_h` is not in the weight lattice (e.g. `A1 ⊕ u(1) ⊂ A2`) the
//! spinor weights are half-integral. In that case every `h`-side weight is
//! stored doubled; [`Embedding::scale`] is 2 and the *h-units* used by every
//! `h`-side function are halves of fundamental weights. Otherwise the scale
//! is 1 and h-units coincide with ordinary coordinates.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::chars::{freudenthal_character, WeightMultiset};
use crate::linalg;
use crate::rootdata::{build_root_system, format_scaled, RootSubsystem, RootSystem, Weight};
use crate::{Error, Result};

/// Embedding description as read from JSON: `{"g":"A2","h_roots":[[2,-1]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingSpec {
    pub g: String,
    #[serde(default)]
    pub h_roots: Vec<Vec<i64>>,
}

impl EmbeddingSpec {
    pub fn build(&self) -> Result<Embedding> {
        let rs = build_root_system(&self.g)?;
        let roots: Vec<Weight> = self
            .h_roots
            .iter()
            .map(|r| Weight::new(r.clone()))
            .collect();
        build_embedding(&rs, &roots)
    }
}

#[derive(Clone, Debug)]
pub struct Embedding {
    ambient: RootSystem,
    h_simple: Vec<Weight>,
    h_positive: Vec<Weight>,
    complement: Vec<Weight>,
    half_lattice: bool,
    scale: i64,
    h: RootSubsystem,
    g_units: RootSubsystem,
    rho_h: Weight,
    rho_g: Weight,
    spin_top: Weight,
}

/// Weights of the spinor supermodule `S = S₀ ⊕ S₁` of `Cl(g*/h*)`, in h-units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinWeights {
    pub s0: WeightMultiset,
    pub s1: WeightMultiset,
}

impl SpinWeights {
    /// The Euler class `[S₀] − [S₁]` as a signed multiset.
    pub fn euler_class(&self) -> WeightMultiset {
        self.s0.sub(&self.s1)
    }

    /// `[S₀*] − [S₁*]`, the dual spinor realised by negating weights.
    pub fn dual_euler_class(&self) -> WeightMultiset {
        self.euler_class().map_weights(|w| -w)
    }
}

impl Embedding {
    pub fn ambient(&self) -> &RootSystem {
        &self.ambient
    }

    /// Designated simple roots of `h`, in ordinary coordinates.
    pub fn h_simple_roots(&self) -> &[Weight] {
        &self.h_simple
    }

    /// Positive roots of `h`, in ordinary coordinates.
    pub fn h_positive_roots(&self) -> &[Weight] {
        &self.h_positive
    }

    /// `Δ⁺(g/h)`, in ordinary coordinates.
    pub fn complement_roots(&self) -> &[Weight] {
        &self.complement
    }

    /// True when `ρ_g − ρ_h` is half-integral and h-side weights are doubled.
    pub fn half_lattice(&self) -> bool {
        self.half_lattice
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// `h` as a root subsystem acting on h-units.
    pub fn h(&self) -> &RootSubsystem {
        &self.h
    }

    /// `g` acting on h-units.
    pub fn g_in_h_units(&self) -> &RootSubsystem {
        &self.g_units
    }

    /// `ρ_h`, in h-units.
    pub fn rho_h(&self) -> &Weight {
        &self.rho_h
    }

    /// `ρ_g`, in ordinary coordinates.
    pub fn rho_g(&self) -> &Weight {
        &self.rho_g
    }

    /// `ρ_g − ρ_h`, the highest spinor weight, in h-units.
    pub fn spin_highest_weight(&self) -> &Weight {
        &self.spin_top
    }

    pub fn to_h_units(&self, w: &Weight) -> Weight {
        w.scaled(self.scale)
    }

    pub fn from_h_units(&self, w: &Weight) -> Option<Weight> {
        w.checked_div(self.scale)
    }

    /// Renders an h-unit weight with actual (possibly half-integral) coordinates.
    pub fn display_h(&self, w: &Weight) -> String {
        format_scaled(w, self.scale)
    }

    /// `dim g − dim h` over the reals.
    pub fn codimension(&self) -> usize {
        2 * self.complement.len()
    }

    pub fn is_torus(&self) -> bool {
        self.h_simple.is_empty()
    }

    pub fn weyl_order_h(&self) -> Result<usize> {
        self.h.weyl_order(self.ambient.weyl_bound())
    }
}

/// Validates `h_roots` as a base of a closed subsystem compatible with `g`'s
/// positive chamber and derives the embedding data.
pub fn build_embedding(rs: &RootSystem, h_roots: &[Weight]) -> Result<Embedding> {
    for r in h_roots {
        rs.check_weight(r)?;
        if !rs.is_root(r) {
            return Err(Error::InvalidEmbedding(format!(
                "{r} is not a root of {}",
                rs.label()
            )));
        }
        if !rs.is_positive_root(r) {
            return Err(Error::InvalidEmbedding(format!(
                "{r} is a negative root; designated simple roots must be positive in g's chamber"
            )));
        }
    }
    let rows: Vec<Vec<Rational64>> = h_roots
        .iter()
        .map(|r| r.0.iter().map(|&c| Rational64::from_integer(c)).collect())
        .collect();
    if linalg::rank(&rows) < h_roots.len() {
        return Err(Error::InvalidEmbedding(format!(
            "designated roots are linearly dependent: {}",
            h_roots
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        )));
    }
    for (i, a) in h_roots.iter().enumerate() {
        let fa = rs.coroot_functional(a)?;
        for (j, b) in h_roots.iter().enumerate() {
            if i != j && b.dot(&fa) > 0 {
                return Err(Error::InvalidEmbedding(format!(
                    "{b} and {a} pair positively, so they are not simple roots of one system"
                )));
            }
        }
    }

    let h1 = RootSubsystem::generated(rs, h_roots, 1)?;
    let h_positive: Vec<Weight> = h1.positive_roots().to_vec();
    if let Some(bad) = h_positive.iter().find(|b| !rs.is_positive_root(b)) {
        return Err(Error::InvalidEmbedding(format!(
            "h-positive root {bad} is negative in g; positive systems are not compatible"
        )));
    }
    let h_all: BTreeSet<Weight> = h_positive.iter().flat_map(|b| [b.clone(), -b]).collect();
    for a in &h_all {
        for b in &h_all {
            let s = a + b;
            if !s.is_zero() && rs.is_root(&s) && !h_all.contains(&s) {
                return Err(Error::InvalidEmbedding(format!(
                    "subsystem is not closed: {a} + {b} = {s} is a root of g but not of h"
                )));
            }
        }
    }

    let complement: Vec<Weight> = rs
        .positive_roots()
        .iter()
        .filter(|b| !h_positive.contains(b))
        .cloned()
        .collect();
    let rank = rs.rank();
    let two_rho_h = h_positive
        .iter()
        .fold(Weight::zero(rank), |acc, b| &acc + b);
    let two_delta = complement
        .iter()
        .fold(Weight::zero(rank), |acc, b| &acc + b);
    assert_eq!(&two_rho_h + &two_delta, rs.rho().scaled(2));
    let half_lattice = two_delta.checked_div(2).is_none();
    let scale = if half_lattice { 2 } else { 1 };
    let halve = |w: &Weight| {
        w.scaled(scale)
            .checked_div(2)
            .expect("2ρ scaled by the lattice scale is even")
    };

    let h = RootSubsystem::generated(rs, h_roots, scale)?;
    let g_units = RootSubsystem::generated(rs, rs.simple_roots(), scale)?;
    Ok(Embedding {
        ambient: rs.clone(),
        h_simple: h_roots.to_vec(),
        h_positive,
        complement,
        half_lattice,
        scale,
        h,
        g_units,
        rho_h: halve(&two_rho_h),
        rho_g: rs.rho().clone(),
        spin_top: halve(&two_delta),
    })
}

/// Spinor weights `(ρ_g − ρ_h) − Σ_{β∈T} β` over subsets `T ⊆ Δ⁺(g/h)`,
/// graded by `|T| mod 2`.
pub fn spin_module(e: &Embedding) -> SpinWeights {
    let m = e.complement.len();
    let roots: Vec<Weight> = e.complement.iter().map(|b| e.to_h_units(b)).collect();
    let mut s0 = WeightMultiset::new();
    let mut s1 = WeightMultiset::new();
    for mask in 0u64..(1u64 << m) {
        let mut w = e.spin_top.clone();
        for (k, b) in roots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                w = &w - b;
            }
        }
        if mask.count_ones() % 2 == 0 {
            s0.add_entry(w, 1);
        } else {
            s1.add_entry(w, 1);
        }
    }
    SpinWeights { s0, s1 }
}

/// The character of `V_λ` read as an `h`-weight multiset, in h-units.
pub fn restrict_character(e: &Embedding, lambda: &Weight) -> Result<WeightMultiset> {
    let ch = freudenthal_character(e.ambient.chamber(), lambda)?;
    Ok(ch.map_weights(|w| e.to_h_units(w)))
}

/// One representative per coset of `W_g / W_h`: the pairs `(sign(c), c·ξ)`
/// with `c·ξ` strictly `h`-dominant. `ξ` is in ordinary coordinates and must
/// be `g`-regular and dominant.
pub fn coset_representatives(e: &Embedding, xi: &Weight) -> Result<Vec<(i8, Weight)>> {
    let g = e.ambient.chamber();
    g.check_weight(xi)?;
    if !g.is_dominant(xi) {
        return Err(Error::NotDominant(xi.clone()));
    }
    if !g.is_regular(xi) {
        return Err(Error::NotRegular(xi.clone()));
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for c in e.ambient.weyl_elements()? {
        let img = c.apply(xi);
        let img_units = e.to_h_units(&img);
        let strictly = (0..e.h.semisimple_rank()).all(|i| e.h.pairing(&img_units, i) > 0);
        if strictly && seen.insert(img.clone()) {
            out.push((c.sign, img));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn emb(g: &str, roots: &[&[i64]]) -> Embedding {
        let rs = build_root_system(g).unwrap();
        let roots: Vec<Weight> = roots.iter().map(|r| w(r)).collect();
        build_embedding(&rs, &roots).unwrap()
    }

    #[test]
    fn torus_in_a1() {
        let e = emb("A1", &[]);
        assert_eq!(e.complement_roots(), &[w(&[2])]);
        assert!(e.rho_h().is_zero());
        assert_eq!(e.scale(), 1);
        let s = spin_module(&e);
        assert_eq!(s.s0, WeightMultiset::singleton(w(&[1]), 1));
        assert_eq!(s.s1, WeightMultiset::singleton(w(&[-1]), 1));
    }

    #[test]
    fn a1u1_in_a2() {
        let e = emb("A2", &[&[2, -1]]);
        let comp: BTreeSet<_> = e.complement_roots().iter().cloned().collect();
        assert_eq!(comp, [w(&[-1, 2]), w(&[1, 1])].into_iter().collect());
        // ρ_h = α1/2 = (1, -1/2), stored doubled
        assert!(e.half_lattice());
        assert_eq!(e.rho_h(), &w(&[2, -1]));
        assert_eq!(e.display_h(e.rho_h()), "(1,-1/2)");
        let s = spin_module(&e);
        assert_eq!(s.s0.total(), 2);
        assert_eq!(s.s1.total(), 2);
        assert_eq!(s.s0.get(e.spin_highest_weight()), 1);
        // ρ_g − ρ_h = (0, 3/2)
        assert_eq!(e.spin_highest_weight(), &w(&[0, 3]));
    }

    #[test]
    fn long_a1xa1_in_b2() {
        let e = emb("B2", &[&[2, -2], &[0, 2]]);
        let rs = e.ambient();
        assert_eq!(e.complement_roots().len(), 2);
        for b in e.complement_roots() {
            assert_eq!(
                rs.inner(b, b),
                Rational64::from_integer(1),
                "short root {b}"
            );
        }
        assert_eq!(e.weyl_order_h().unwrap(), 4);
    }

    #[test]
    fn invalid_designations() {
        let b2 = build_root_system("B2").unwrap();
        // the two short positive roots span a non-closed A1xA1
        let err = build_embedding(&b2, &[w(&[-1, 2]), w(&[1, 0])]).unwrap_err();
        assert!(matches!(err, Error::InvalidEmbedding(_)), "{err}");

        let a2 = build_root_system("A2").unwrap();
        assert!(build_embedding(&a2, &[w(&[1, 0])]).is_err());
        assert!(build_embedding(&a2, &[w(&[-2, 1])]).is_err());
        assert!(build_embedding(&a2, &[w(&[2, -1]), w(&[2, -1])]).is_err());
        // α1 and α1+α2 pair positively
        assert!(build_embedding(&a2, &[w(&[2, -1]), w(&[1, 1])]).is_err());
    }

    #[test]
    fn full_rank_subsystem_is_g() {
        let e = emb("A2", &[&[2, -1], &[-1, 2]]);
        assert!(e.complement_roots().is_empty());
        let s = spin_module(&e);
        assert_eq!(s.s0, WeightMultiset::singleton(w(&[0, 0]), 1));
        assert!(s.s1.is_empty());
    }

    #[test]
    fn coset_examples() {
        let e = emb("A1", &[]);
        assert_eq!(
            coset_representatives(&e, &w(&[3])).unwrap(),
            vec![(1, w(&[3])), (-1, w(&[-3]))]
        );
        let e = emb("A2", &[&[2, -1]]);
        assert_eq!(coset_representatives(&e, &w(&[1, 1])).unwrap().len(), 3);
        let e = emb("B2", &[&[2, -2], &[0, 2]]);
        assert_eq!(coset_representatives(&e, &w(&[1, 1])).unwrap().len(), 2);
        assert!(matches!(
            coset_representatives(&e, &w(&[0, 1])),
            Err(Error::NotRegular(_))
        ));
    }

    #[test]
    fn restriction_is_identity_on_supports() {
        let e = emb("A1", &[]);
        let r = restrict_character(&e, &w(&[2])).unwrap();
        assert_eq!(r.support_len(), 3);
        let e = emb("A2", &[&[2, -1]]);
        let r = restrict_character(&e, &w(&[0, 0])).unwrap();
        assert_eq!(r, WeightMultiset::singleton(w(&[0, 0]), 1));
    }

    #[test]
    fn spec_json_roundtrip() {
        let spec: EmbeddingSpec = serde_json::from_str(r#"{"g":"A2","h_roots":[[2,-1]]}"#).unwrap();
        let e = spec.build().unwrap();
        assert_eq!(e.h_simple_roots(), &[w(&[2, -1])]);
        let spec: EmbeddingSpec = serde_json::from_str(r#"{"g":"A1"}"#).unwrap();
        assert!(spec.build().unwrap().is_torus());
    }
}
