//! Euler-class restriction, the closed-form multiplet, and Dirac induction.
//!
//! All `h`-side weights (multiplet members, `μ`) are in the h-units of the
//! embedding; see [`crate::embed`].

use serde::Serialize;

use crate::chars::{decompose_virtual, freudenthal_character, VirtualDecomposition};
use crate::embed::{coset_representatives, restrict_character, spin_module, Embedding};
use crate::rootdata::Weight;
use crate::superring::{sr_pair, weight_json, Coord, SRElement, TwistLabel};
use crate::{Error, Result};

/// Signed `h`-irreducibles attached to a `g`-irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multiplet {
    pub source: Weight,
    /// Units of the member weights (the embedding's scale).
    pub scale: i64,
    /// `(sign, h-dominant weight)`, sign-descending then lexicographic.
    pub members: Vec<(i8, Weight)>,
}

#[derive(Serialize)]
struct MemberJson {
    sign: i8,
    weight: Vec<Coord>,
}

impl Multiplet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn as_decomposition(&self) -> VirtualDecomposition {
        self.members
            .iter()
            .map(|(s, w)| (w.clone(), i64::from(*s)))
            .collect()
    }

    /// `[{"sign":1,"weight":[3]},...]`; half-integral coordinates as strings.
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<MemberJson> = self
            .members
            .iter()
            .map(|(s, w)| MemberJson {
                sign: *s,
                weight: weight_json(w, self.scale),
            })
            .collect();
        serde_json::to_value(rows).expect("plain data serializes")
    }
}

fn check_g_dominant(e: &Embedding, lambda: &Weight) -> Result<()> {
    let g = e.ambient().chamber();
    g.check_weight(lambda)?;
    if !g.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(())
}

fn check_h_dominant(e: &Embedding, mu: &Weight) -> Result<()> {
    let h = e.h();
    h.check_weight(mu)?;
    if !h.in_lattice(mu) || !h.is_dominant(mu) {
        return Err(Error::NotDominant(mu.clone()));
    }
    Ok(())
}

/// `i*[V_λ] · ([S₀] − [S₁])` decomposed over `h` by brute-force convolution.
pub fn euler_restriction(e: &Embedding, lambda: &Weight) -> Result<VirtualDecomposition> {
    check_g_dominant(e, lambda)?;
    let restricted = restrict_character(e, lambda)?;
    let product = restricted.convolve(&spin_module(e).euler_class());
    decompose_virtual(e.h(), &product)
}

/// The multiplet `{(sign c, c(λ+ρ_g) − ρ_h)}` over coset representatives.
pub fn gkrs_multiplet(e: &Embedding, lambda: &Weight) -> Result<Multiplet> {
    check_g_dominant(e, lambda)?;
    let xi = lambda + e.rho_g();
    let mut members: Vec<(i8, Weight)> = coset_representatives(e, &xi)?
        .into_iter()
        .map(|(s, w)| (s, &e.to_h_units(&w) - e.rho_h()))
        .collect();
    members.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    Ok(Multiplet {
        source: lambda.clone(),
        scale: e.scale(),
        members,
    })
}

/// Compares the closed form with the brute force; returns the first weight
/// (h-units) where the coefficients differ.
pub fn gkrs_discrepancy(e: &Embedding, lambda: &Weight) -> Result<Option<(Weight, i64, i64)>> {
    let closed = gkrs_multiplet(e, lambda)?.as_decomposition();
    let brute = euler_restriction(e, lambda)?;
    let weights: std::collections::BTreeSet<&Weight> =
        closed.iter().chain(brute.iter()).map(|(w, _)| w).collect();
    let found = weights
        .into_iter()
        .find(|w| closed.get(w) != brute.get(w))
        .map(|w| (w.clone(), closed.get(w), brute.get(w)));
    Ok(found)
}

/// Dirac induction of the `h`-irreducible `U_μ` (μ in h-units): `Some((sign,
/// λ))` for `±[V_λ]`, or `None` when `μ + ρ_h` is `g`-singular.
pub fn dirac_induce(e: &Embedding, mu: &Weight) -> Result<Option<(i8, Weight)>> {
    check_h_dominant(e, mu)?;
    let shifted = mu + e.rho_h();
    let actual = e
        .from_h_units(&shifted)
        .ok_or_else(|| Error::WrongCoset(mu.clone()))?;
    let (rep, sign, regular) = e.ambient().chamber().dominant_representative(&actual);
    Ok(regular.then(|| (sign, &rep - e.rho_g())))
}

/// `[U_μ ⊗ S₀*] − [U_μ ⊗ S₁*]` as an `h`-class in h-units.
pub fn dirac_source_class(e: &Embedding, mu: &Weight) -> Result<SRElement> {
    check_h_dominant(e, mu)?;
    if e.from_h_units(&(mu + e.rho_h())).is_none() {
        return Err(Error::WrongCoset(mu.clone()));
    }
    let ch = freudenthal_character(e.h(), mu)?;
    let product = ch.convolve(&spin_module(e).dual_euler_class());
    let twist = TwistLabel::zero().with_half_lattice(e.half_lattice());
    Ok(SRElement::new(
        0,
        twist,
        decompose_virtual(e.h(), &product)?,
    ))
}

/// Both sides of `⟨ind U_μ, V_λ⟩_g = ⟨[U_μ ⊗ S₀*] − [U_μ ⊗ S₁*], i*V_λ⟩_h`.
pub fn verify_adjointness(e: &Embedding, mu: &Weight, lambda: &Weight) -> Result<(i64, i64)> {
    check_g_dominant(e, lambda)?;
    let lhs = match dirac_induce(e, mu)? {
        Some((s, w)) => sr_pair(
            &SRElement::new(
                0,
                TwistLabel::zero(),
                [(w, i64::from(s))].into_iter().collect(),
            ),
            &SRElement::irreducible(lambda.clone()),
        ),
        None => 0,
    };
    let source = dirac_source_class(e, mu)?;
    let restricted = decompose_virtual(e.h(), &restrict_character(e, lambda)?)?;
    let target = SRElement::new(0, source.twist.clone(), restricted);
    Ok((lhs, sr_pair(&source, &target)))
}

/// `h`-dominant weights `μ` (h-units) with `μ + ρ_h` in the weight lattice and
/// every actual coordinate in `[-max, max]`.
pub fn dominant_mu_grid(e: &Embedding, max: i64) -> Vec<Weight> {
    let s = e.scale();
    let rank = e.ambient().rank();
    let mut out = Vec::new();
    let span = 2 * max * s + 1;
    let total = span.pow(rank as u32);
    for idx in 0..total {
        let mut rem = idx;
        let coords: Vec<i64> = (0..rank)
            .map(|_| {
                let c = rem % span - max * s;
                rem /= span;
                c
            })
            .collect();
        let mu = Weight(coords);
        if e.from_h_units(&(&mu + e.rho_h())).is_some()
            && e.h().in_lattice(&mu)
            && e.h().is_dominant(&mu)
        {
            out.push(mu);
        }
    }
    out.sort();
    out
}

/// `g`-dominant weights with every coordinate at most `max`.
pub fn dominant_lambda_grid(rank: usize, max: i64) -> Vec<Weight> {
    let span = max + 1;
    (0..span.pow(rank as u32))
        .map(|mut idx| {
            Weight(
                (0..rank)
                    .map(|_| {
                        let c = idx % span;
                        idx /= span;
                        c
                    })
                    .collect(),
            )
        })
        .collect()
}
