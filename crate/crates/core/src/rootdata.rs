//! Root systems, weight lattices and Weyl groups.
//!
//! Weights are integer vectors in fundamental-weight coordinates, so the
//! simple roots are the rows of the Cartan matrix and every reflection is an
//! integer operation. The invariant form is rational and normalised so that
//! long roots of each simple factor have squared length 2.
//!
//! Convention: `cartan[i][j] = ⟨α_i, α_j^∨⟩`, i.e. row `i` is `α_i`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg;
use crate::{Error, Result};

/// Default cap on the number of Weyl group elements enumerated.
pub const DEFAULT_WEYL_BOUND: usize = 1_000_000;

/// An integer vector of weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Weight(coords.into())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Divides every coordinate by `k`, or `None` if some coordinate is not divisible.
    pub fn checked_div(&self, k: i64) -> Option<Weight> {
        self.0
            .iter()
            .map(|c| if c % k == 0 { Some(c / k) } else { None })
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }

    pub fn dot(&self, functional: &[i64]) -> i64 {
        self.0.iter().zip(functional).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

/// Renders a coordinate stored in units of `1/scale`, e.g. `3` at scale 2 as `3/2`.
pub fn format_coord(c: i64, scale: i64) -> String {
    let r = Rational64::new(c, scale);
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a weight stored in units of `1/scale`.
pub fn format_scaled(w: &Weight, scale: i64) -> String {
    let parts: Vec<String> = w.0.iter().map(|&c| format_coord(c, scale)).collect();
    format!("({})", parts.join(","))
}

/// Parses `"3"`, `"-1/2"` into units of `1/scale`.
pub fn parse_coord(text: &str, scale: i64) -> Result<i64> {
    let t = text.trim();
    let bad = || Error::Parse(format!("`{t}` is not an integer or fraction"));
    let r = match t.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Rational64::new(n, d)
        }
        None => Rational64::from_integer(t.parse().map_err(|_| bad())?),
    };
    let u = r * scale;
    if u.is_integer() {
        Ok(u.to_integer())
    } else {
        let expected = if scale == 1 {
            "an integer".to_string()
        } else {
            format!("a multiple of 1/{scale}")
        };
        Err(Error::Parse(format!("`{t}` is not {expected} here")))
    }
}

/// One simple factor of a semisimple type.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SimpleType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
}

impl SimpleType {
    pub fn parse(token: &str) -> Result<Self> {
        let bad = || Error::UnsupportedType(token.to_string());
        let t = token.trim();
        if t == "G2" {
            return Ok(SimpleType::G2);
        }
        let (head, tail) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        let n: usize = tail.parse().map_err(|_| bad())?;
        let ty = match (head, n) {
            ("A", 1..=6) => SimpleType::A(n),
            ("B", 2..=4) => SimpleType::B(n),
            ("C", 2..=4) => SimpleType::C(n),
            ("D", 4..=5) => SimpleType::D(n),
            _ => return Err(bad()),
        };
        Ok(ty)
    }

    pub fn rank(self) -> usize {
        match self {
            SimpleType::A(n) | SimpleType::B(n) | SimpleType::C(n) | SimpleType::D(n) => n,
            SimpleType::G2 => 2,
        }
    }

    /// Cartan matrix with `cartan[i][j] = ⟨α_i, α_j^∨⟩` (Bourbaki numbering).
    pub fn cartan(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self {
            SimpleType::A(_) | SimpleType::B(_) | SimpleType::C(_) => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            SimpleType::D(_) => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            SimpleType::G2 => link(0, 1),
        }
        match self {
            // α_n short: ⟨α_{n-1}, α_n^∨⟩ = -2
            SimpleType::B(_) => c[n - 2][n - 1] = -2,
            // α_n long: ⟨α_n, α_{n-1}^∨⟩ = -2
            SimpleType::C(_) => c[n - 1][n - 2] = -2,
            // α_1 short, α_2 long
            SimpleType::G2 => c[1][0] = -3,
            _ => {}
        }
        c
    }

    /// Half squared lengths `(α_i, α_i)/2` with long roots normalised to 1.
    fn half_norms(self) -> Vec<Rational64> {
        let n = self.rank();
        let one = Rational64::one();
        match self {
            SimpleType::A(_) | SimpleType::D(_) => vec![one; n],
            SimpleType::B(_) => {
                let mut d = vec![one; n];
                d[n - 1] = Rational64::new(1, 2);
                d
            }
            SimpleType::C(_) => {
                let mut d = vec![Rational64::new(1, 2); n];
                d[n - 1] = one;
                d
            }
            SimpleType::G2 => vec![Rational64::new(1, 3), one],
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleType::A(n) => write!(f, "A{n}"),
            SimpleType::B(n) => write!(f, "B{n}"),
            SimpleType::C(n) => write!(f, "C{n}"),
            SimpleType::D(n) => write!(f, "D{n}"),
            SimpleType::G2 => write!(f, "G2"),
        }
    }
}

/// A Weyl group element acting on fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// Simple reflection indices, leftmost applied last.
    pub word: Vec<usize>,
    /// Column-convention integer matrix: `w' = matrix · w`.
    pub matrix: Vec<Vec<i64>>,
    pub sign: i8,
}

impl WeylElement {
    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(self.matrix.iter().map(|row| w.dot(row)).collect())
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

/// A system of simple roots with its reflections, possibly a subsystem of an
/// ambient root system and possibly expressed in scaled coordinates.
///
/// Weights handed to a subsystem are in *units* of `1/scale` fundamental
/// weights of the ambient lattice. Scale 2 is used for equal-rank subalgebras
/// whose spinor weights are half-integral.
#[derive(Clone, Debug)]
pub struct RootSubsystem {
    rank: usize,
    scale: i64,
    /// Simple roots, in units.
    simple: Vec<Weight>,
    /// Coroot functionals on actual ambient fundamental-weight coordinates.
    coroots: Vec<Vec<i64>>,
    /// Positive roots, in units.
    positive: Vec<Weight>,
    two_rho: Weight,
    form: Vec<Vec<Rational64>>,
    height: Vec<Rational64>,
}

impl RootSubsystem {
    /// Builds the subsystem generated by `simple_roots` (actual coordinates,
    /// each a root of `rs`) with weights expressed in units of `1/scale`.
    pub fn generated(rs: &RootSystem, simple_roots: &[Weight], scale: i64) -> Result<Self> {
        let coroots = simple_roots
            .iter()
            .map(|a| rs.coroot_functional(a))
            .collect::<Result<Vec<_>>>()?;
        let positive = close_positive_roots(simple_roots, &coroots)?;
        Ok(Self::assemble(rs, simple_roots, coroots, positive, scale))
    }

    fn assemble(
        rs: &RootSystem,
        simple_roots: &[Weight],
        coroots: Vec<Vec<i64>>,
        positive: Vec<Weight>,
        scale: i64,
    ) -> Self {
        let rank = rs.rank();
        let simple: Vec<Weight> = simple_roots.iter().map(|a| a.scaled(scale)).collect();
        let positive: Vec<Weight> = positive.iter().map(|a| a.scaled(scale)).collect();
        let two_rho = positive.iter().fold(Weight::zero(rank), |acc, a| &acc + a);
        RootSubsystem {
            rank,
            scale,
            simple,
            coroots,
            positive,
            two_rho,
            form: rs.form.clone(),
            height: rs.height_functional.clone(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// Number of simple roots (semisimple rank).
    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// `2ρ`, the sum of the positive roots, in units.
    pub fn two_rho(&self) -> &Weight {
        &self.two_rho
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch {
                weight: w.clone(),
                got: w.rank(),
                expected: self.rank,
            });
        }
        Ok(())
    }

    /// `⟨w, α_i^∨⟩`, or `None` if it is not an integer (the weight lies off
    /// the lattice this subsystem acts on).
    pub fn try_pairing(&self, w: &Weight, i: usize) -> Option<i64> {
        let raw = w.dot(&self.coroots[i]);
        (raw % self.scale == 0).then_some(raw / self.scale)
    }

    pub fn pairing(&self, w: &Weight, i: usize) -> i64 {
        let raw = w.dot(&self.coroots[i]);
        debug_assert_eq!(raw % self.scale, 0, "non-integral pairing for {w}");
        raw / self.scale
    }

    /// True when every coroot pairing is integral.
    pub fn in_lattice(&self, w: &Weight) -> bool {
        (0..self.simple.len()).all(|i| self.try_pairing(w, i).is_some())
    }

    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let p = self.pairing(w, i);
        if p == 0 {
            return w.clone();
        }
        w - &self.simple[i].scaled(p)
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        (0..self.simple.len()).all(|i| self.pairing(w, i) >= 0)
    }

    pub fn is_regular(&self, w: &Weight) -> bool {
        (0..self.simple.len()).all(|i| self.pairing(w, i) != 0)
    }

    /// Chamber reduction: the dominant representative, the sign of the
    /// reflection word applied, and whether the input was regular.
    pub fn dominant_representative(&self, w: &Weight) -> (Weight, i8, bool) {
        let mut cur = w.clone();
        let mut sign = 1i8;
        while let Some(i) = (0..self.simple.len()).find(|&i| self.pairing(&cur, i) < 0) {
            cur = self.reflect(&cur, i);
            sign = -sign;
        }
        let regular = (0..self.simple.len()).all(|i| self.pairing(&cur, i) > 0);
        (cur, sign, regular)
    }

    /// Breadth-first orbit under the simple reflections.
    pub fn orbit(&self, w: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.simple.len() {
                let r = self.reflect(&v, i);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen
    }

    /// Invariant form on unit coordinates (scales by `scale²`, which cancels
    /// in every ratio used).
    pub fn inner(&self, x: &Weight, y: &Weight) -> Rational64 {
        let mut acc = Rational64::zero();
        for (i, xi) in x.0.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if *yj != 0 {
                    acc += self.form[i][j] * (xi * yj);
                }
            }
        }
        acc
    }

    /// Height in the ambient simple-root basis (sum of simple-root coordinates).
    pub fn height(&self, w: &Weight) -> Rational64 {
        let mut acc = Rational64::zero();
        for (c, h) in w.0.iter().zip(&self.height) {
            acc += *h * *c;
        }
        acc / self.scale
    }

    /// Weyl group elements of this subsystem acting on unit coordinates.
    pub fn weyl_group(&self, bound: usize) -> Result<Vec<WeylElement>> {
        // s_i(w) = w - ⟨w, α_i^∨⟩ α_i is scale independent on matrices.
        let n = self.rank;
        let gens: Vec<Vec<Vec<i64>>> = (0..self.simple.len())
            .map(|i| {
                let alpha = &self.simple[i];
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| {
                                let delta = i64::from(j == k);
                                delta - alpha.0[j] * self.coroots[i][k] / self.scale
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        // alpha (units) * coroot / scale must be integral entrywise: alpha
        // units are scale * actual coordinates.
        enumerate_group(n, &gens, bound)
    }

    pub fn weyl_order(&self, bound: usize) -> Result<usize> {
        self.weyl_group(bound).map(|g| g.len())
    }
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

fn enumerate_group(n: usize, gens: &[Vec<Vec<i64>>], bound: usize) -> Result<Vec<WeylElement>> {
    let identity: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut index: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
    let mut out = vec![WeylElement {
        word: Vec::new(),
        matrix: identity.clone(),
        sign: 1,
    }];
    index.insert(identity, 0);
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for (i, g) in gens.iter().enumerate() {
            let m = mat_mul(g, &cur.matrix);
            if index.contains_key(&m) {
                continue;
            }
            if out.len() >= bound {
                return Err(Error::WeylBoundExceeded { bound });
            }
            let mut word = Vec::with_capacity(cur.word.len() + 1);
            word.push(i);
            word.extend_from_slice(&cur.word);
            index.insert(m.clone(), out.len());
            out.push(WeylElement {
                word,
                matrix: m,
                sign: -cur.sign,
            });
        }
    }
    Ok(out)
}

/// Closes a set of simple roots under their reflections and returns the
/// positive roots (nonnegative coefficients in the given simple roots).
fn close_positive_roots(simple: &[Weight], coroots: &[Vec<i64>]) -> Result<Vec<Weight>> {
    let r = simple.len();
    let mut seen: HashMap<Weight, Vec<i64>> = HashMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    for (i, a) in simple.iter().enumerate() {
        let mut c = vec![0; r];
        c[i] = 1;
        if seen.insert(a.clone(), c.clone()).is_none() {
            order.push(a.clone());
            queue.push_back((a.clone(), c));
        }
    }
    while let Some((beta, c)) = queue.pop_front() {
        for j in 0..r {
            let p = beta.dot(&coroots[j]);
            if p == 0 {
                continue;
            }
            let img = &beta - &simple[j].scaled(p);
            let mut ci = c.clone();
            ci[j] -= p;
            if seen.len() > 10_000 {
                return Err(Error::InvalidEmbedding(
                    "root closure does not terminate; simple roots are not a base".into(),
                ));
            }
            if !seen.contains_key(&img) {
                seen.insert(img.clone(), ci.clone());
                order.push(img.clone());
                queue.push_back((img, ci));
            }
        }
    }
    let mut pos = Vec::new();
    for beta in order {
        let c = &seen[&beta];
        if c.iter().all(|&x| x >= 0) {
            pos.push(beta);
        } else if !c.iter().all(|&x| x <= 0) {
            return Err(Error::InvalidEmbedding(format!(
                "root {beta} has mixed-sign coefficients {c:?}; designated roots are not a base"
            )));
        }
    }
    pos.sort_by(|a, b| {
        let ha: i64 = seen[a].iter().sum();
        let hb: i64 = seen[b].iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    Ok(pos)
}

/// A semisimple root system given by its simple factors.
#[derive(Clone, Debug)]
pub struct RootSystem {
    label: String,
    factors: Vec<SimpleType>,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    rho: Weight,
    form: Vec<Vec<Rational64>>,
    height_functional: Vec<Rational64>,
    chamber: Option<Box<RootSubsystem>>,
    weyl_bound: usize,
}

impl RootSystem {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn form(&self) -> &[Vec<Rational64>] {
        &self.form
    }

    pub fn weyl_bound(&self) -> usize {
        self.weyl_bound
    }

    pub fn with_weyl_bound(mut self, bound: usize) -> Self {
        self.weyl_bound = bound;
        self
    }

    /// The full system as a [`RootSubsystem`] in unit scale.
    pub fn chamber(&self) -> &RootSubsystem {
        self.chamber
            .as_deref()
            .expect("chamber initialised at build")
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.positive_roots.contains(w) || self.positive_roots.contains(&-w)
    }

    pub fn is_positive_root(&self, w: &Weight) -> bool {
        self.positive_roots.contains(w)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        self.chamber().check_weight(w)
    }

    pub fn inner(&self, x: &Weight, y: &Weight) -> Rational64 {
        self.chamber().inner(x, y)
    }

    pub fn height(&self, w: &Weight) -> Rational64 {
        self.chamber().height(w)
    }

    /// Integer functional `w ↦ ⟨w, α^∨⟩` for a root `α`.
    pub fn coroot_functional(&self, alpha: &Weight) -> Result<Vec<i64>> {
        self.check_weight(alpha)?;
        if !self.is_root(alpha) {
            return Err(Error::InvalidEmbedding(format!(
                "{alpha} is not a root of {}",
                self.label
            )));
        }
        let norm = self.inner(alpha, alpha);
        (0..self.rank())
            .map(|j| {
                let mut e = Weight::zero(self.rank());
                e.0[j] = 1;
                let v = self.inner(&e, alpha) * 2 / norm;
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(Error::InvalidEmbedding(format!(
                        "non-integral coroot for {alpha}"
                    )))
                }
            })
            .collect()
    }

    pub fn weyl_elements(&self) -> Result<Vec<WeylElement>> {
        self.chamber().weyl_group(self.weyl_bound)
    }

    pub fn weyl_order(&self) -> Result<usize> {
        self.weyl_elements().map(|w| w.len())
    }
}

/// Builds the root system for a descriptor such as `"A2"`, `"G2"` or `"A1xA1"`.
pub fn build_root_system(label: &str) -> Result<RootSystem> {
    let tokens: Vec<&str> = label.split(['x', '×', '*']).map(str::trim).collect();
    if tokens.iter().any(|t| t.is_empty()) {
        return Err(Error::UnsupportedType(label.to_string()));
    }
    let factors = tokens
        .iter()
        .map(|t| SimpleType::parse(t))
        .collect::<Result<Vec<_>>>()?;
    let rank: usize = factors.iter().map(|f| f.rank()).sum();

    let mut cartan = vec![vec![0i64; rank]; rank];
    let mut form = vec![vec![Rational64::zero(); rank]; rank];
    let mut offset = 0;
    for f in &factors {
        let c = f.cartan();
        let d = f.half_norms();
        let n = f.rank();
        let cq: Vec<Vec<Rational64>> = c
            .iter()
            .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
            .collect();
        let inv = linalg::inverse(&cq).expect("Cartan matrices are invertible");
        for i in 0..n {
            for j in 0..n {
                cartan[offset + i][offset + j] = c[i][j];
                // G = C^{-1} diag(d)
                form[offset + i][offset + j] = inv[i][j] * d[j];
            }
        }
        offset += n;
    }

    let cq: Vec<Vec<Rational64>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    let inv = linalg::inverse(&cq).expect("Cartan matrices are invertible");
    let height_functional: Vec<Rational64> = inv
        .iter()
        .map(|row| row.iter().fold(Rational64::zero(), |a, b| a + b))
        .collect();

    let simple_roots: Vec<Weight> = cartan.iter().map(|r| Weight(r.clone())).collect();
    let coroots: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
        .collect();
    let positive_roots = close_positive_roots(&simple_roots, &coroots)?;
    let two_rho = positive_roots
        .iter()
        .fold(Weight::zero(rank), |acc, a| &acc + a);
    let rho = two_rho
        .checked_div(2)
        .expect("half sum of positive roots is integral in fundamental coordinates");

    let mut rs = RootSystem {
        label: factors
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("x"),
        factors,
        cartan,
        simple_roots: simple_roots.clone(),
        positive_roots: positive_roots.clone(),
        rho,
        form,
        height_functional,
        chamber: None,
        weyl_bound: DEFAULT_WEYL_BOUND,
    };
    let chamber = RootSubsystem::assemble(&rs, &simple_roots, coroots, positive_roots, 1);
    rs.chamber = Some(Box::new(chamber));
    Ok(rs)
}

/// `w − ⟨w, α_i^∨⟩ α_i`.
pub fn reflect(rs: &RootSystem, i: usize, w: &Weight) -> Result<Weight> {
    rs.check_weight(w)?;
    if i >= rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: rs.rank(),
        });
    }
    Ok(rs.chamber().reflect(w, i))
}

pub fn weyl_orbit(rs: &RootSystem, w: &Weight) -> Result<BTreeSet<Weight>> {
    rs.check_weight(w)?;
    Ok(rs.chamber().orbit(w))
}

/// Chamber reduction with respect to all simple coroots of `rs`, or with
/// respect to the simple coroots of `sub` when given.
pub fn dominant_representative(
    rs: &RootSystem,
    w: &Weight,
    sub: Option<&RootSubsystem>,
) -> Result<(Weight, i8, bool)> {
    rs.check_weight(w)?;
    let sys = sub.unwrap_or_else(|| rs.chamber());
    if !sys.in_lattice(w) {
        return Err(Error::WrongCoset(w.clone()));
    }
    Ok(sys.dominant_representative(w))
}

pub fn weyl_elements(rs: &RootSystem) -> Result<Vec<WeylElement>> {
    rs.weyl_elements()
}
