//! The ℤ₂-graded super representation ring.
//!
//! Classes are integer combinations of type-M irreducibles, one per `M, ΠM`
//! pair, with parity reversal acting as `[ΠV] = −[V]`. This basis is
//! orthonormal for the supersymmetric pairing, which is what makes the
//! pushforward computable coefficient by coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::chars::{decompose_virtual, tensor_decompose, VirtualDecomposition};
use crate::embed::{restrict_character, Embedding};
use crate::rootdata::{format_coord, parse_coord, RootSubsystem, Weight};
use crate::{Error, Result};

/// Formal twisting label: an element of the free abelian group on symbolic
/// cocycle names, with a Clifford degree contribution and a flag recording
/// that weights of the carrying element are stored doubled.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TwistLabel {
    terms: BTreeMap<String, i64>,
    pub parity_shift: i64,
    pub half_lattice: bool,
}

impl TwistLabel {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn named(name: &str) -> Self {
        let mut t = Self::zero();
        t.add_term(name, 1);
        t
    }

    pub fn with_half_lattice(mut self, half: bool) -> Self {
        self.half_lattice = half;
        self
    }

    fn add_term(&mut self, name: &str, k: i64) {
        let e = self.terms.entry(name.to_string()).or_insert(0);
        *e += k;
        if *e == 0 {
            self.terms.remove(name);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.parity_shift == 0
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, i64)> {
        self.terms.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Same cohomological label and degree contribution, regardless of storage units.
    pub fn same_class(&self, other: &TwistLabel) -> bool {
        self.terms == other.terms && self.parity_shift == other.parity_shift
    }

    /// Parses labels such as `"0"`, `"b"`, `"τ_H−i*τ_G"` or `"a+b-c"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = TwistLabel::zero();
        let t = text.trim();
        if t.is_empty() || t == "0" {
            return Ok(out);
        }
        let mut sign = 1;
        let mut cur = String::new();
        let flush = |cur: &mut String, sign: i64, out: &mut TwistLabel| -> Result<()> {
            let name = cur.trim();
            if name.is_empty() {
                return Err(Error::Parse(format!("empty term in twist label `{t}`")));
            }
            if name != "0" {
                out.add_term(name, sign);
            }
            cur.clear();
            Ok(())
        };
        for (i, ch) in t.chars().enumerate() {
            match ch {
                '+' | '-' | '−' => {
                    if i > 0 {
                        flush(&mut cur, sign, &mut out)?;
                    }
                    sign = if ch == '+' { 1 } else { -1 };
                }
                _ => cur.push(ch),
            }
        }
        flush(&mut cur, sign, &mut out)?;
        Ok(out)
    }
}

impl fmt::Display for TwistLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // positive terms first, so "τ_H−i*τ_G" renders as written
        let mut ordered: Vec<(&String, &i64)> = self.terms.iter().collect();
        ordered.sort_by_key(|(name, k)| (**k < 0, (*name).clone()));
        let mut first = true;
        for (name, &k) in ordered {
            let neg = k < 0;
            if neg {
                write!(f, "−")?;
            } else if !first {
                write!(f, "+")?;
            }
            for _ in 0..k.abs() - 1 {
                write!(f, "{name}")?;
                write!(f, "{}", if neg { "−" } else { "+" })?;
            }
            write!(f, "{name}")?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &TwistLabel {
    type Output = TwistLabel;
    fn add(self, rhs: &TwistLabel) -> TwistLabel {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(k, *v);
        }
        out.parity_shift += rhs.parity_shift;
        out.half_lattice = self.half_lattice || rhs.half_lattice;
        out
    }
}

/// A class in the super representation ring: ℤ₂-degree, twist, and integer
/// coefficients on dominant highest weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SRElement {
    pub degree: u8,
    pub twist: TwistLabel,
    pub terms: VirtualDecomposition,
}

impl SRElement {
    pub fn new(degree: u8, twist: TwistLabel, terms: VirtualDecomposition) -> Self {
        SRElement {
            degree: degree % 2,
            twist,
            terms,
        }
    }

    /// Degree-0 untwisted class of a single irreducible.
    pub fn irreducible(w: Weight) -> Self {
        Self::new(0, TwistLabel::zero(), [(w, 1)].into_iter().collect())
    }

    pub fn zero(degree: u8, twist: TwistLabel) -> Self {
        Self::new(degree, twist, VirtualDecomposition::new())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w)
    }

    fn storage_scale(&self) -> i64 {
        if self.twist.half_lattice {
            2
        } else {
            1
        }
    }

    /// Terms re-expressed in doubled coordinates.
    fn doubled_terms(&self) -> BTreeMap<Weight, i64> {
        let k = 2 / self.storage_scale();
        self.terms.iter().map(|(w, c)| (w.scaled(k), c)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let scale = self.storage_scale();
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(w, c)| TermJson {
                weight: w.0.iter().map(|&x| Coord::render(x, scale)).collect(),
                coeff: c,
            })
            .collect();
        serde_json::to_value(SRElementJson {
            degree: self.degree,
            twist: self.twist.to_string(),
            terms,
            half_lattice: self.twist.half_lattice,
        })
        .expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: SRElementJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let needs_half = raw
            .terms
            .iter()
            .flat_map(|t| &t.weight)
            .any(|c| matches!(c, Coord::Text(s) if s.contains('/')));
        let half = raw.half_lattice || needs_half;
        let scale = if half { 2 } else { 1 };
        let mut terms = VirtualDecomposition::new();
        for t in &raw.terms {
            let coords = t
                .weight
                .iter()
                .map(|c| c.to_units(scale))
                .collect::<Result<Vec<_>>>()?;
            terms.add_term(Weight(coords), t.coeff);
        }
        if raw.degree > 1 {
            return Err(Error::Parse(format!("degree {} is not 0 or 1", raw.degree)));
        }
        let twist = TwistLabel::parse(&raw.twist)?.with_half_lattice(half);
        Ok(SRElement::new(raw.degree, twist, terms))
    }
}

#[derive(Serialize, Deserialize)]
struct SRElementJson {
    degree: u8,
    twist: String,
    terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    half_lattice: bool,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    weight: Vec<Coord>,
    coeff: i64,
}

/// A JSON weight coordinate: an integer, or a string such as `"3/2"`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum Coord {
    Int(i64),
    Text(String),
}

impl Coord {
    pub fn render(units: i64, scale: i64) -> Coord {
        if units % scale == 0 {
            Coord::Int(units / scale)
        } else {
            Coord::Text(format_coord(units, scale))
        }
    }

    pub fn to_units(&self, scale: i64) -> Result<i64> {
        match self {
            Coord::Int(x) => Ok(x * scale),
            Coord::Text(s) => parse_coord(s, scale),
        }
    }
}

/// Renders a weight stored in units of `1/scale` as JSON coordinates.
pub fn weight_json(w: &Weight, scale: i64) -> Vec<Coord> {
    w.0.iter().map(|&x| Coord::render(x, scale)).collect()
}

fn check_compatible(x: &SRElement, y: &SRElement) -> Result<()> {
    if x.degree != y.degree {
        return Err(Error::OperandMismatch(format!(
            "degrees {} and {} differ",
            x.degree, y.degree
        )));
    }
    if x.twist != y.twist {
        return Err(Error::OperandMismatch(format!(
            "twists `{}` and `{}` differ",
            x.twist, y.twist
        )));
    }
    Ok(())
}

pub fn sr_add(x: &SRElement, y: &SRElement) -> Result<SRElement> {
    check_compatible(x, y)?;
    let mut terms = x.terms.clone();
    for (w, c) in y.terms.iter() {
        terms.add_term(w.clone(), c);
    }
    Ok(SRElement::new(x.degree, x.twist.clone(), terms))
}

pub fn sr_negate(x: &SRElement) -> SRElement {
    let terms = x.terms.iter().map(|(w, c)| (w.clone(), -c)).collect();
    SRElement::new(x.degree, x.twist.clone(), terms)
}

/// Parity reversal: `[ΠV] = −[V]`.
pub fn sr_pi(x: &SRElement) -> SRElement {
    sr_negate(x)
}

/// Interior tensor product, extended bilinearly. Weights of both operands
/// must be in the units of `sys`.
pub fn sr_mul(x: &SRElement, y: &SRElement, sys: &RootSubsystem) -> Result<SRElement> {
    let doubled = sys.scale() == 2;
    for e in [x, y] {
        if e.twist.half_lattice != doubled {
            return Err(Error::OperandMismatch(format!(
                "element with twist `{}` is not stored in the units of this root system",
                e.twist
            )));
        }
    }
    let mut terms = VirtualDecomposition::new();
    for (a, ca) in x.terms.iter() {
        for (b, cb) in y.terms.iter() {
            for (c, n) in tensor_decompose(sys, a, b)?.iter() {
                terms.add_term(c.clone(), ca * cb * n);
            }
        }
    }
    let twist = (&x.twist + &y.twist).with_half_lattice(doubled);
    Ok(SRElement::new(x.degree + y.degree, twist, terms))
}

/// Supersymmetric pairing; the irreducible basis is orthonormal. Classes in
/// different degrees or twists pair to zero.
pub fn sr_pair(x: &SRElement, y: &SRElement) -> i64 {
    if x.degree != y.degree || !x.twist.same_class(&y.twist) {
        return 0;
    }
    if x.twist.half_lattice == y.twist.half_lattice {
        return x.terms.iter().map(|(w, c)| c * y.coeff(w)).sum();
    }
    let a = x.doubled_terms();
    let b = y.doubled_terms();
    a.iter()
        .map(|(w, c)| c * b.get(w).copied().unwrap_or(0))
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CliffordKind {
    /// Irreducibles come in `M, ΠM` pairs.
    MPair,
    /// The irreducible admits an odd involution, `Q ≅ ΠQ`.
    Q,
}

/// Schur type and rank of `SR(Cl(n))` for the complex Clifford algebra.
///
/// For odd `n` the degree-1 basis `[Q₊], [Q₋]` requires a choice; the class
/// where the extra odd generator acts by `+1` on the first basis vector of
/// the even part is taken as `Q₊`. That choice is a convention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliffordClass {
    pub n: usize,
    pub kind: CliffordKind,
    pub rank_of_sr: usize,
}

pub const MAX_CLIFFORD_N: usize = 12;

pub fn classify_clifford(n: usize) -> Result<CliffordClass> {
    if n > MAX_CLIFFORD_N {
        return Err(Error::OutOfRange(format!(
            "Clifford classification supports n ≤ {MAX_CLIFFORD_N}, got {n}"
        )));
    }
    let (kind, rank_of_sr) = if n.is_multiple_of(2) {
        (CliffordKind::MPair, 1)
    } else {
        (CliffordKind::Q, 0)
    };
    Ok(CliffordClass {
        n,
        kind,
        rank_of_sr,
    })
}

/// Restrictions of all `g`-irreducibles up to a height bound, decomposed over `h`.
///
/// Building this once and reusing it makes repeated pushforwards cheap.
#[derive(Clone, Debug)]
pub struct RestrictionTable {
    scale: i64,
    entries: Vec<(Weight, VirtualDecomposition)>,
}

impl RestrictionTable {
    pub fn new(e: &Embedding, bound: i64) -> Result<Self> {
        let entries = dominant_weights_up_to(e.ambient().chamber(), bound)
            .into_iter()
            .map(|lambda| {
                let r = restrict_character(e, &lambda)?;
                Ok((lambda, decompose_virtual(e.h(), &r)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RestrictionTable {
            scale: e.scale(),
            entries,
        })
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.entries.iter().map(|(w, _)| w)
    }

    /// `Σ_λ ⟨u, i*[V_λ]⟩_h [V_λ]` over the tabulated `λ`.
    pub fn pushforward(&self, u: &SRElement) -> SRElement {
        let mut terms = VirtualDecomposition::new();
        let twist = TwistLabel::zero().with_half_lattice(self.scale == 2);
        for (lambda, dec) in &self.entries {
            let restricted = SRElement::new(0, twist.clone(), dec.clone());
            terms.add_term(lambda.clone(), sr_pair(u, &restricted));
        }
        SRElement::new(u.degree, u.twist.clone().with_half_lattice(false), terms)
    }
}

/// All dominant weights of `sys` with height at most `bound`.
pub fn dominant_weights_up_to(sys: &RootSubsystem, bound: i64) -> Vec<Weight> {
    let rank = sys.rank();
    let limit = Rational64::from_integer(bound);
    let mut out = Vec::new();
    let mut stack = vec![Weight::zero(rank)];
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(Weight::zero(rank));
    while let Some(w) = stack.pop() {
        out.push(w.clone());
        for i in 0..rank {
            let mut next = w.clone();
            next.0[i] += sys.scale();
            if sys.height(&next) <= limit && seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// Truncated pushforward `f_*[U] = Σ_λ ⟨[U], i*[V_λ]⟩ [V_λ]` over the
/// `g`-dominant `λ` of height at most `bound`.
pub fn pushforward_truncated(e: &Embedding, u: &SRElement, bound: i64) -> Result<SRElement> {
    Ok(RestrictionTable::new(e, bound)?.pushforward(u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embed::build_embedding;
    use crate::rootdata::build_root_system;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn el(terms: &[(&[i64], i64)]) -> SRElement {
        SRElement::new(
            0,
            TwistLabel::zero(),
            terms.iter().map(|(c, k)| (w(c), *k)).collect(),
        )
    }

    #[test]
    fn parity_reversal_negates() {
        let x = el(&[(&[1, 1], 1)]);
        assert_eq!(sr_pi(&x), el(&[(&[1, 1], -1)]));
        assert_eq!(sr_pi(&sr_pi(&x)), x);
        assert!(sr_add(&x, &sr_negate(&x)).unwrap().is_zero());
    }

    #[test]
    fn add_rejects_mismatch() {
        let x = el(&[(&[1], 1)]);
        let mut y = x.clone();
        y.degree = 1;
        assert!(matches!(sr_add(&x, &y), Err(Error::OperandMismatch(_))));
        let mut z = x.clone();
        z.twist = TwistLabel::named("b");
        assert!(sr_add(&x, &z).is_err());
    }

    #[test]
    fn products() {
        let a1 = build_root_system("A1").unwrap();
        let sys = a1.chamber();
        let unit = el(&[(&[0], 1)]);
        let x = el(&[(&[3], 2), (&[1], -1)]);
        assert_eq!(sr_mul(&unit, &x, sys).unwrap(), x);
        let v = el(&[(&[1], 1)]);
        assert_eq!(sr_mul(&v, &v, sys).unwrap(), el(&[(&[2], 1), (&[0], 1)]));
        let mut odd = v.clone();
        odd.degree = 1;
        assert_eq!(sr_mul(&odd, &odd, sys).unwrap().degree, 0);
        let tw = SRElement::new(1, TwistLabel::named("b"), v.terms.clone());
        let p = sr_mul(&tw, &tw, sys).unwrap();
        assert_eq!(p.twist.to_string(), "b+b");
    }

    #[test]
    fn pairing_is_orthonormal() {
        let l = el(&[(&[2, 1], 1)]);
        assert_eq!(sr_pair(&l, &l), 1);
        assert_eq!(sr_pair(&l, &sr_pi(&l)), -1);
        assert_eq!(sr_pair(&l, &el(&[(&[1, 2], 1)])), 0);
        let mut shifted = l.clone();
        shifted.degree = 1;
        assert_eq!(sr_pair(&l, &shifted), 0);
    }

    #[test]
    fn pairing_across_storage_units() {
        let a = el(&[(&[1], 1)]);
        let b = SRElement::new(
            0,
            TwistLabel::zero().with_half_lattice(true),
            [(w(&[2]), 3)].into_iter().collect(),
        );
        assert_eq!(sr_pair(&a, &b), 3);
    }

    #[test]
    fn clifford_classification() {
        assert_eq!(classify_clifford(0).unwrap().kind, CliffordKind::MPair);
        assert_eq!(classify_clifford(1).unwrap().kind, CliffordKind::Q);
        assert_eq!(classify_clifford(2).unwrap().rank_of_sr, 1);
        assert!(classify_clifford(13).is_err());
        for n in 0..=10 {
            assert_eq!(
                classify_clifford(n).unwrap().rank_of_sr,
                classify_clifford(n + 2).unwrap().rank_of_sr
            );
        }
    }

    #[test]
    fn twist_labels() {
        let t = TwistLabel::parse("τ_H−i*τ_G").unwrap();
        assert_eq!(t.to_string(), "τ_H−i*τ_G");
        let back = TwistLabel::parse(&t.to_string()).unwrap();
        assert_eq!(back, t);
        assert!(TwistLabel::parse("0").unwrap().is_zero());
        let sum = &t + &TwistLabel::parse("i*τ_G").unwrap();
        assert_eq!(sum, TwistLabel::named("τ_H"));
        assert!((&t + &TwistLabel::parse("-τ_H+i*τ_G").unwrap()).is_zero());
        assert!(TwistLabel::parse("a+").is_err());
    }

    #[test]
    fn json_schema() {
        let x = el(&[(&[1, 1], 1)]);
        let j = x.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"degree":0,"terms":[{"coeff":1,"weight":[1,1]}],"twist":"0"}"#
        );
        assert_eq!(SRElement::from_json(&j).unwrap(), x);

        let parsed = SRElement::from_json(
            &serde_json::json!({"degree":0,"twist":"0","terms":[{"weight":["3/2",1],"coeff":-2}]}),
        )
        .unwrap();
        assert!(parsed.twist.half_lattice);
        assert_eq!(parsed.coeff(&w(&[3, 2])), -2);
        assert_eq!(SRElement::from_json(&parsed.to_json()).unwrap(), parsed);
    }

    #[test]
    fn pushforward_from_torus_of_a1() {
        let rs = build_root_system("A1").unwrap();
        let e = build_embedding(&rs, &[]).unwrap();
        let u = el(&[(&[0], 1)]);
        // heights λ/2 ≤ 3 means λ ≤ 6; V_λ contains weight 0 iff λ is even
        let p = pushforward_truncated(&e, &u, 3).unwrap();
        let expected = el(&[(&[0], 1), (&[2], 1), (&[4], 1), (&[6], 1)]);
        assert_eq!(p, expected);
        assert!(pushforward_truncated(&e, &el(&[]), 3).unwrap().is_zero());
    }

    #[test]
    fn dominant_enumeration_by_height() {
        let rs = build_root_system("A2").unwrap();
        // height of (a,b) is a+b
        assert_eq!(dominant_weights_up_to(rs.chamber(), 2).len(), 6);
    }
}
