//! Characters of irreducible modules and signed combinations of them.
//!
//! All routines take a [`RootSubsystem`], so the same code serves `g` itself
//! and any equal-rank subalgebra `h` expressed in `g`'s lattice (possibly in
//! doubled coordinates).

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::rootdata::{RootSubsystem, Weight};
use crate::{Error, Result};

/// Upper bound on peeling steps in [`decompose_virtual`].
pub const DECOMPOSITION_STEP_BOUND: usize = 1_000_000;

/// A finitely supported signed multiset of weights. Zero entries are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, i64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(w: Weight, m: i64) -> Self {
        let mut s = Self::new();
        s.add_entry(w, m);
        s
    }

    pub fn add_entry(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        match self.entries.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += m;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.entries.iter().map(|(w, m)| (w, *m))
    }

    /// Number of distinct weights in the support.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Signed total `Σ m(ν)`.
    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn add(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.add_entry(w.clone(), m);
        }
        out
    }

    pub fn negate(&self) -> WeightMultiset {
        self.scale(-1)
    }

    pub fn sub(&self, other: &WeightMultiset) -> WeightMultiset {
        self.add(&other.negate())
    }

    pub fn scale(&self, k: i64) -> WeightMultiset {
        if k == 0 {
            return WeightMultiset::new();
        }
        WeightMultiset {
            entries: self
                .entries
                .iter()
                .map(|(w, m)| (w.clone(), m * k))
                .collect(),
        }
    }

    /// Product in the group ring: `δ_a ⊛ δ_b = δ_{a+b}`.
    pub fn convolve(&self, other: &WeightMultiset) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (a, m) in self.iter() {
            for (b, n) in other.iter() {
                out.add_entry(a + b, m * n);
            }
        }
        out
    }

    /// Applies `f` to every weight, merging collisions.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in self.iter() {
            out.add_entry(f(w), m);
        }
        out
    }

    /// First simple reflection (with a witness weight) under which the
    /// multiset is not invariant.
    pub fn invariance_violation(&self, sys: &RootSubsystem) -> Option<(usize, Weight)> {
        for i in 0..sys.semisimple_rank() {
            for (w, m) in self.iter() {
                if sys.try_pairing(w, i).is_none() || self.get(&sys.reflect(w, i)) != m {
                    return Some((i, w.clone()));
                }
            }
        }
        None
    }
}

impl FromIterator<(Weight, i64)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut s = WeightMultiset::new();
        for (w, m) in iter {
            s.add_entry(w, m);
        }
        s
    }
}

/// Coordinates of a virtual module in the basis of irreducibles, keyed by
/// dominant highest weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VirtualDecomposition {
    terms: BTreeMap<Weight, i64>,
}

impl VirtualDecomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ coeff · ch(V_λ)`.
    pub fn reconstruct(&self, sys: &RootSubsystem) -> Result<WeightMultiset> {
        let mut out = WeightMultiset::new();
        for (w, c) in self.iter() {
            out = out.add(&freudenthal_character(sys, w)?.scale(c));
        }
        Ok(out)
    }

    /// Signed dimension `Σ coeff · dim V_λ`.
    pub fn signed_dimension(&self, sys: &RootSubsystem) -> Result<i64> {
        self.iter()
            .map(|(w, c)| Ok(c * weyl_dimension(sys, w)?))
            .sum()
    }
}

impl FromIterator<(Weight, i64)> for VirtualDecomposition {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut d = VirtualDecomposition::new();
        for (w, c) in iter {
            d.add_term(w, c);
        }
        d
    }
}

fn check_dominant(sys: &RootSubsystem, lambda: &Weight) -> Result<()> {
    sys.check_weight(lambda)?;
    if !sys.in_lattice(lambda) || !sys.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(())
}

/// Dominant weights `ν ≤ λ`, found by subtracting positive roots while
/// staying in the dominant chamber.
fn dominant_weights_below(sys: &RootSubsystem, lambda: &Weight) -> Vec<Weight> {
    let mut seen: BTreeMap<Weight, ()> = BTreeMap::new();
    let mut stack = vec![lambda.clone()];
    seen.insert(lambda.clone(), ());
    while let Some(nu) = stack.pop() {
        for alpha in sys.positive_roots() {
            let next = &nu - alpha;
            if sys.is_dominant(&next) && !seen.contains_key(&next) {
                seen.insert(next.clone(), ());
                stack.push(next);
            }
        }
    }
    seen.into_keys().collect()
}

/// Weight multiplicities of the irreducible module with highest weight `λ`.
pub fn freudenthal_character(sys: &RootSubsystem, lambda: &Weight) -> Result<WeightMultiset> {
    check_dominant(sys, lambda)?;
    let mut dominant = dominant_weights_below(sys, lambda);
    dominant.sort_by(|a, b| sys.height(b).cmp(&sys.height(a)).then_with(|| b.cmp(a)));

    let two_rho = sys.two_rho();
    let top_height = sys.height(lambda);
    // |λ+ρ|² − |ν+ρ|² = (λ−ν, λ+ν+2ρ)
    let gap = |nu: &Weight| {
        let diff = lambda - nu;
        let sum = &(lambda + nu) + two_rho;
        sys.inner(&diff, &sum)
    };

    let mut mult: HashMap<Weight, i64> = HashMap::new();
    mult.insert(lambda.clone(), 1);
    for nu in dominant.iter().skip(1) {
        let mut acc = Rational64::zero();
        for alpha in sys.positive_roots() {
            let mut k = 1;
            loop {
                let shifted = nu + &alpha.scaled(k);
                if sys.height(&shifted) > top_height {
                    break;
                }
                let (rep, _, _) = sys.dominant_representative(&shifted);
                let m = mult.get(&rep).copied().unwrap_or(0);
                if m != 0 {
                    acc += sys.inner(&shifted, alpha) * m;
                }
                k += 1;
            }
        }
        let denom = gap(nu);
        assert!(
            !denom.is_zero(),
            "Freudenthal divisor vanished at {nu} below {lambda}"
        );
        let m = acc * 2 / denom;
        assert!(m.is_integer(), "non-integral multiplicity {m} at {nu}");
        let m = m.to_integer();
        if m != 0 {
            mult.insert(nu.clone(), m);
        }
    }

    let mut out = WeightMultiset::new();
    for nu in &dominant {
        if let Some(&m) = mult.get(nu) {
            for w in sys.orbit(nu) {
                out.add_entry(w, m);
            }
        }
    }
    Ok(out)
}

/// `Π_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`.
pub fn weyl_dimension(sys: &RootSubsystem, lambda: &Weight) -> Result<i64> {
    check_dominant(sys, lambda)?;
    let shifted = &lambda.scaled(2) + sys.two_rho();
    let mut prod = Rational64::one();
    for alpha in sys.positive_roots() {
        prod *= sys.inner(&shifted, alpha) / sys.inner(sys.two_rho(), alpha);
    }
    assert!(prod.is_integer(), "non-integral Weyl dimension {prod}");
    Ok(prod.to_integer())
}

/// Expresses a Weyl-invariant signed multiset in the basis of irreducible characters.
pub fn decompose_virtual(sys: &RootSubsystem, ch: &WeightMultiset) -> Result<VirtualDecomposition> {
    for (w, _) in ch.iter() {
        sys.check_weight(w)?;
    }
    if let Some((reflection, witness)) = ch.invariance_violation(sys) {
        return Err(Error::NotInvariant {
            reflection,
            witness,
        });
    }
    let mut rest = ch.clone();
    let mut out = VirtualDecomposition::new();
    let mut cache: HashMap<Weight, WeightMultiset> = HashMap::new();
    let mut steps = 0;
    while !rest.is_empty() {
        steps += 1;
        if steps > DECOMPOSITION_STEP_BOUND {
            return Err(Error::StepBound(DECOMPOSITION_STEP_BOUND));
        }
        let top = rest
            .iter()
            .map(|(w, _)| w)
            .max_by(|a, b| sys.height(a).cmp(&sys.height(b)).then_with(|| a.cmp(b)))
            .expect("nonempty")
            .clone();
        if !sys.is_dominant(&top) {
            // an invariant multiset always has a dominant element of maximal height
            return Err(Error::NotDominant(top));
        }
        let c = rest.get(&top);
        if !cache.contains_key(&top) {
            cache.insert(top.clone(), freudenthal_character(sys, &top)?);
        }
        rest = rest.sub(&cache[&top].scale(c));
        out.add_term(top, c);
    }
    Ok(out)
}

/// Clebsch–Gordan decomposition of `V_λ ⊗ V_μ`.
pub fn tensor_decompose(
    sys: &RootSubsystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<VirtualDecomposition> {
    let a = freudenthal_character(sys, lambda)?;
    let b = freudenthal_character(sys, mu)?;
    decompose_virtual(sys, &a.convolve(&b))
}

/// `Σ_{w∈W} (−1)^w δ_{w(ν)}` over the Weyl group of `sys`.
pub fn alternating_sum(sys: &RootSubsystem, nu: &Weight, bound: usize) -> Result<WeightMultiset> {
    let group = sys.weyl_group(bound)?;
    Ok(group
        .iter()
        .map(|el| (el.apply(nu), i64::from(el.sign)))
        .collect())
}
