//! Exact matrix realizations of complex Clifford algebras, the quantization
//! map `so(V) → Cl(V)`, and checks of the algebraic Thom isomorphism.
//!
//! Scalars are Gaussian rationals. The Clifford relation is
//! `v·w + w·v = −2 b(v, w)` with an orthonormal basis, so `eᵢ² = −1`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::linalg;
use crate::superring::CliffordKind;
use crate::{Error, Result};

pub type Gauss = Complex<Rational64>;

pub const MAX_CLIFFORD_MATRIX_N: usize = 6;

fn re(x: i64) -> Gauss {
    Complex::new(Rational64::from_integer(x), Rational64::zero())
}

fn rat(x: Rational64) -> Gauss {
    Complex::new(x, Rational64::zero())
}

fn imag_unit() -> Gauss {
    Complex::new(Rational64::zero(), Rational64::one())
}

pub fn format_gauss(z: &Gauss) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => format!("{}i", z.im),
        (false, false) => {
            let sign = if z.im < Rational64::zero() { "-" } else { "+" };
            format!("{}{}{}i", z.re, sign, num_traits::Signed::abs(&z.im))
        }
    }
}

/// A square matrix over the Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMat {
    dim: usize,
    data: Vec<Gauss>,
}

impl CMat {
    pub fn zeros(dim: usize) -> Self {
        CMat {
            dim,
            data: vec![Gauss::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Gauss::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Gauss>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidMatrix("matrix is not square".into()));
        }
        Ok(CMat {
            dim,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    pub fn from_rational(rows: &[Vec<Rational64>]) -> Result<Self> {
        let rows: Vec<Vec<Gauss>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Gauss {
        &self.data[r * self.dim + c]
    }

    fn set(&mut self, r: usize, c: usize, v: Gauss) {
        self.data[r * self.dim + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Gauss>> {
        self.data
            .chunks(self.dim.max(1))
            .map(<[Gauss]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &Gauss) -> CMat {
        CMat {
            dim: self.dim,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn kron(&self, other: &CMat) -> CMat {
        let n = self.dim * other.dim;
        let mut out = CMat::zeros(n);
        for a in 0..self.dim {
            for b in 0..self.dim {
                let x = self.get(a, b);
                if x.is_zero() {
                    continue;
                }
                for c in 0..other.dim {
                    for d in 0..other.dim {
                        out.set(a * other.dim + c, b * other.dim + d, x * other.get(c, d));
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &CMat) -> CMat {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &CMat) -> CMat {
        &(self * other) + &(other * self)
    }

    /// `Some(c)` when the matrix is `c·I`.
    pub fn scalar_value(&self) -> Option<Gauss> {
        let c = if self.dim == 0 {
            Gauss::zero()
        } else {
            *self.get(0, 0)
        };
        (*self == CMat::identity(self.dim).scale(&c)).then_some(c)
    }

    /// Describes the first nonzero entry, for failure witnesses.
    pub fn first_nonzero(&self) -> Option<String> {
        self.data.iter().position(|x| !x.is_zero()).map(|k| {
            format!(
                "entry ({},{}) = {}",
                k / self.dim,
                k % self.dim,
                format_gauss(&self.data[k])
            )
        })
    }

    fn check_dim(&self, other: &CMat) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
    }
}

impl Add for &CMat {
    type Output = CMat;
    fn add(self, rhs: &CMat) -> CMat {
        self.check_dim(rhs);
        CMat {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CMat {
    type Output = CMat;
    fn sub(self, rhs: &CMat) -> CMat {
        self.check_dim(rhs);
        CMat {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CMat {
    type Output = CMat;
    fn neg(self) -> CMat {
        CMat {
            dim: self.dim,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CMat {
    type Output = CMat;
    fn mul(self, rhs: &CMat) -> CMat {
        self.check_dim(rhs);
        let n = self.dim;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for CMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|c| format_gauss(self.get(r, c)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn pauli() -> [CMat; 3] {
    let (o, z, i) = (re(1), re(0), imag_unit());
    [
        CMat::from_rows(&[vec![z, o], vec![o, z]]).unwrap(),
        CMat::from_rows(&[vec![z, -i], vec![i, z]]).unwrap(),
        CMat::from_rows(&[vec![o, z], vec![z, -o]]).unwrap(),
    ]
}

fn kron_all(factors: &[CMat]) -> CMat {
    factors.iter().fold(CMat::identity(1), |acc, m| acc.kron(m))
}

/// The irreducible complex Clifford supermodule on `n` generators, as matrices.
#[derive(Clone, Debug)]
pub struct CliffordMatrixAlgebra {
    pub n: usize,
    pub generators: Vec<CMat>,
    pub grading: CMat,
}

impl CliffordMatrixAlgebra {
    pub fn dim(&self) -> usize {
        self.grading.dim()
    }

    /// `Σ_j v_j e_j`.
    pub fn vector(&self, v: &[Gauss]) -> CMat {
        let mut out = CMat::zeros(self.dim());
        for (c, e) in v.iter().zip(&self.generators) {
            out = &out + &e.scale(c);
        }
        out
    }
}

/// Generators `eᵢ = i·γᵢ` from the Pauli tower on `⌈n/2⌉` qubits, graded by `σ₃^{⊗⌈n/2⌉}`.
pub fn build_clifford(n: usize) -> Result<CliffordMatrixAlgebra> {
    if n == 0 || n > MAX_CLIFFORD_MATRIX_N {
        return Err(Error::OutOfRange(format!(
            "Clifford matrices are built for 1 ≤ n ≤ {MAX_CLIFFORD_MATRIX_N}, got {n}"
        )));
    }
    let k = n.div_ceil(2);
    let [s1, s2, s3] = pauli();
    let id2 = CMat::identity(2);
    let mut generators = Vec::with_capacity(2 * k);
    for j in 0..k {
        for s in [&s1, &s2] {
            let factors: Vec<CMat> = (0..k)
                .map(|slot| match slot.cmp(&j) {
                    std::cmp::Ordering::Less => s3.clone(),
                    std::cmp::Ordering::Equal => s.clone(),
                    std::cmp::Ordering::Greater => id2.clone(),
                })
                .collect();
            generators.push(kron_all(&factors).scale(&imag_unit()));
        }
    }
    generators.truncate(n);
    let grading = kron_all(&vec![s3; k]);
    Ok(CliffordMatrixAlgebra {
        n,
        generators,
        grading,
    })
}

/// Status of one checked identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub identity: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

pub type Report = Vec<CheckRecord>;

pub fn report_passes(report: &[CheckRecord]) -> bool {
    report.iter().all(|r| r.status == CheckStatus::Pass)
}

fn record(identity: impl Into<String>, diff: &CMat) -> CheckRecord {
    let witness = diff.first_nonzero();
    CheckRecord {
        identity: identity.into(),
        status: if witness.is_none() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        witness,
    }
}

fn merge(identity: &str, records: Vec<CheckRecord>) -> CheckRecord {
    match records.into_iter().find(|r| r.status == CheckStatus::Fail) {
        Some(r) => CheckRecord {
            identity: identity.to_string(),
            status: CheckStatus::Fail,
            witness: Some(format!("{}: {}", r.identity, r.witness.unwrap_or_default())),
        },
        None => CheckRecord {
            identity: identity.to_string(),
            status: CheckStatus::Pass,
            witness: None,
        },
    }
}

/// `eᵢ² = −1`, `eᵢeⱼ = −eⱼeᵢ`, `ε² = 1`, `ε eᵢ ε = −eᵢ`.
pub fn relations_check(alg: &CliffordMatrixAlgebra) -> Report {
    let id = CMat::identity(alg.dim());
    let e = &alg.generators;
    let mut squares = Vec::new();
    let mut anti = Vec::new();
    let mut odd = Vec::new();
    for i in 0..alg.n {
        squares.push(record(format!("e{}²", i + 1), &(&(&e[i] * &e[i]) + &id)));
        odd.push(record(
            format!("ε e{}", i + 1),
            &alg.grading.anticommutator(&e[i]),
        ));
        for j in i + 1..alg.n {
            anti.push(record(
                format!("e{} e{}", i + 1, j + 1),
                &e[i].anticommutator(&e[j]),
            ));
        }
    }
    vec![
        merge("eᵢ² = −1", squares),
        merge("eᵢeⱼ + eⱼeᵢ = 0 (i≠j)", anti),
        record("ε² = 1", &(&(&alg.grading * &alg.grading) - &id)),
        merge("ε eᵢ = −eᵢ ε", odd),
    ]
}

/// Basis of `{T : T·Mₖ = sₖ·Mₖ·T for all k}`.
fn solve_commutant(dim: usize, constraints: &[(&CMat, i64)]) -> Vec<CMat> {
    let unknowns = dim * dim;
    let mut rows: Vec<Vec<Gauss>> = Vec::new();
    for (m, s) in constraints {
        let s = re(*s);
        for a in 0..dim {
            for b in 0..dim {
                let mut row = vec![Gauss::zero(); unknowns];
                for c in 0..dim {
                    // (T M)_{ab} = Σ_c t_{ac} M_{cb}
                    row[a * dim + c] += m.get(c, b);
                    // (M T)_{ab} = Σ_c M_{ac} t_{cb}
                    row[c * dim + b] -= s * m.get(a, c);
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    linalg::nullspace(&rows, unknowns)
        .into_iter()
        .map(|v| CMat { dim, data: v })
        .collect()
}

/// Graded commutant of the generators on the irreducible supermodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantReport {
    pub n: usize,
    /// Odd `T` with `T eᵢ = −eᵢ T`.
    pub odd_dim: usize,
    /// Even `T` with `T eᵢ = eᵢ T`.
    pub even_dim: usize,
    /// `T² = c·I` for the odd basis element, when one exists.
    pub odd_square: Option<Gauss>,
}

impl CommutantReport {
    pub fn kind(&self) -> CliffordKind {
        if self.odd_dim > 0 {
            CliffordKind::Q
        } else {
            CliffordKind::MPair
        }
    }
}

pub fn commutant(alg: &CliffordMatrixAlgebra) -> CommutantReport {
    let dim = alg.dim();
    let mut odd: Vec<(&CMat, i64)> = vec![(&alg.grading, -1)];
    let mut even: Vec<(&CMat, i64)> = vec![(&alg.grading, 1)];
    for e in &alg.generators {
        odd.push((e, -1));
        even.push((e, 1));
    }
    let odd_basis = solve_commutant(dim, &odd);
    let even_basis = solve_commutant(dim, &even);
    let odd_square = odd_basis.first().and_then(|t| (t * t).scalar_value());
    CommutantReport {
        n: alg.n,
        odd_dim: odd_basis.len(),
        even_dim: even_basis.len(),
        odd_square,
    }
}

/// A square rational matrix, validated antisymmetric.
fn check_antisymmetric(n: usize, a: &[Vec<Rational64>]) -> Result<()> {
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidMatrix(format!("expected a {n}×{n} matrix")));
    }
    for i in 0..n {
        for j in 0..n {
            if a[i][j] != -a[j][i] {
                return Err(Error::InvalidMatrix(format!(
                    "not antisymmetric at ({i},{j}): {} vs {}",
                    a[i][j], a[j][i]
                )));
            }
        }
    }
    Ok(())
}

/// `r̃(A) = ¼ Σᵢ eᵢ·(A eᵢ)` where `A eᵢ = Σⱼ Aⱼᵢ eⱼ`.
///
/// With `eᵢ² = −1` this sign gives `[r̃(A), v] = A v`; the opposite sign
/// yields `−A v` and an anti-homomorphism.
pub fn quantize(alg: &CliffordMatrixAlgebra, a: &[Vec<Rational64>]) -> Result<CMat> {
    quantize_scaled(alg, a, Rational64::new(1, 4))
}

fn quantize_scaled(
    alg: &CliffordMatrixAlgebra,
    a: &[Vec<Rational64>],
    factor: Rational64,
) -> Result<CMat> {
    check_antisymmetric(alg.n, a)?;
    let e = &alg.generators;
    let mut out = CMat::zeros(alg.dim());
    for i in 0..alg.n {
        for j in 0..alg.n {
            if !a[j][i].is_zero() {
                out = &out + &(&e[i] * &e[j]).scale(&rat(a[j][i] * factor));
            }
        }
    }
    Ok(out)
}

type RatMat = Vec<Vec<Rational64>>;

fn rat_commutator(a: &RatMat, b: &RatMat) -> RatMat {
    let n = a.len();
    let mut out = vec![vec![Rational64::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
            }
        }
    }
    out
}

/// Standard basis `L₁, L₂, L₃` of `so(3)`, `(L_a)_{bc} = −ε_{abc}`, with `[L₁, L₂] = L₃`.
pub fn so3_generators() -> Vec<RatMat> {
    (0..3)
        .map(|a| {
            (0..3)
                .map(|b| {
                    (0..3)
                        .map(|c| Rational64::from_integer(-levi_civita(a, b, c)))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn levi_civita(a: usize, b: usize, c: usize) -> i64 {
    if a == b || b == c || a == c {
        return 0;
    }
    let inversions = [(a, b), (a, c), (b, c)]
        .iter()
        .filter(|(x, y)| x > y)
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Structure constants `[X_a, X_b] = Σ_c C[a][b][c] X_c`; `None` if the span
/// is not closed under the bracket.
fn structure_constants(gens: &[RatMat]) -> Option<Vec<Vec<Vec<Rational64>>>> {
    let flat: Vec<Vec<Rational64>> = gens.iter().map(|m| m.concat()).collect();
    let len = flat.first().map_or(0, Vec::len);
    // columns are the generators
    let a: Vec<Vec<Rational64>> = (0..len)
        .map(|k| flat.iter().map(|g| g[k]).collect())
        .collect();
    let mut out = Vec::new();
    for x in gens {
        let mut row = Vec::new();
        for y in gens {
            let target = rat_commutator(x, y).concat();
            if gens.is_empty() || target.iter().all(Zero::is_zero) {
                row.push(vec![Rational64::zero(); gens.len()]);
                continue;
            }
            row.push(linalg::solve(&a, &target)?);
        }
        out.push(row);
    }
    Some(out)
}

fn combination(mats: &[CMat], coeffs: &[Rational64], dim: usize) -> CMat {
    mats.iter()
        .zip(coeffs)
        .fold(CMat::zeros(dim), |acc, (m, c)| &acc + &m.scale(&rat(*c)))
}

/// `[r̃(A), eₖ] = A eₖ` for every generator and `[r̃(A), r̃(B)] = r̃([A, B])`.
pub fn quantize_check(alg: &CliffordMatrixAlgebra, gens: &[RatMat]) -> Result<Report> {
    let q = gens
        .iter()
        .map(|a| quantize(alg, a))
        .collect::<Result<Vec<_>>>()?;
    let mut derivation = Vec::new();
    for (a, (m, qa)) in gens.iter().zip(&q).enumerate() {
        for k in 0..alg.n {
            let col: Vec<Gauss> = (0..alg.n).map(|j| rat(m[j][k])).collect();
            let lhs = qa.commutator(&alg.generators[k]);
            derivation.push(record(
                format!("[r̃(X{}), e{}]", a + 1, k + 1),
                &(&lhs - &alg.vector(&col)),
            ));
        }
    }
    let mut hom = Vec::new();
    for a in 0..gens.len() {
        for b in 0..gens.len() {
            let rhs = quantize(alg, &rat_commutator(&gens[a], &gens[b]))?;
            hom.push(record(
                format!("[r̃(X{}), r̃(X{})]", a + 1, b + 1),
                &(&q[a].commutator(&q[b]) - &rhs),
            ));
        }
    }
    Ok(vec![
        merge("[r̃(A), v] = A v", derivation),
        merge("[r̃(A), r̃(B)] = r̃([A, B])", hom),
    ])
}

/// A formal element of `U(g) ⊗ Cl(V)`: words in the Lie generators mapped to
/// Clifford coefficients. Words are not reduced, which suffices for the
/// cancellations checked here.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Formal {
    dim: usize,
    terms: BTreeMap<Vec<usize>, CMat>,
}

impl Formal {
    fn zero(dim: usize) -> Self {
        Formal {
            dim,
            terms: BTreeMap::new(),
        }
    }

    fn term(dim: usize, word: Vec<usize>, c: CMat) -> Self {
        let mut f = Self::zero(dim);
        f.add_term(word, c);
        f
    }

    fn add_term(&mut self, word: Vec<usize>, c: CMat) {
        let entry = self
            .terms
            .entry(word.clone())
            .or_insert_with(|| CMat::zeros(self.dim));
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&word);
        }
    }

    fn add(&self, other: &Formal) -> Formal {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    fn sub(&self, other: &Formal) -> Formal {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    /// Product in the ordinary tensor product: Lie words commute with Clifford factors.
    fn mul(&self, other: &Formal) -> Formal {
        let mut out = Formal::zero(self.dim);
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    fn witness(&self) -> Option<String> {
        self.terms.iter().next().map(|(w, c)| {
            let word: Vec<String> = w.iter().map(|k| format!("X{}", k + 1)).collect();
            let word = if word.is_empty() {
                "1".to_string()
            } else {
                word.join("")
            };
            format!("{word} ⊗ ({})", c.first_nonzero().unwrap_or_default())
        })
    }
}

fn formal_record(identity: impl Into<String>, diff: &Formal) -> CheckRecord {
    let witness = diff.witness();
    CheckRecord {
        identity: identity.into(),
        status: if witness.is_none() {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        witness,
    }
}

/// Clifford monomials of degree at most 2 (as matrices).
fn low_degree_words(alg: &CliffordMatrixAlgebra) -> Vec<(String, CMat)> {
    let e = &alg.generators;
    let mut out = vec![("1".to_string(), CMat::identity(alg.dim()))];
    for i in 0..alg.n {
        out.push((format!("e{}", i + 1), e[i].clone()));
        for j in 0..alg.n {
            out.push((format!("e{}e{}", i + 1, j + 1), &e[i] * &e[j]));
        }
    }
    out
}

/// Verifies the Thom map `f(X) = X ⊗ 1 + 1 ⊗ r̃(X)`, `f(v) = 1 ⊗ v` for Lie
/// generators acting on `V = ℂⁿ` by themselves.
pub fn thom_map_check(alg: &CliffordMatrixAlgebra, gens: &[RatMat]) -> Result<Report> {
    thom_map_check_scaled(alg, gens, Rational64::new(1, 4))
}

/// [`thom_map_check`] with `r̃` computed using `factor` in place of `¼`;
/// any other factor should fail.
pub fn thom_map_check_scaled(
    alg: &CliffordMatrixAlgebra,
    gens: &[RatMat],
    factor: Rational64,
) -> Result<Report> {
    let structure = structure_constants(gens)
        .ok_or_else(|| Error::InvalidMatrix("generators do not close under the bracket".into()))?;
    let q = gens
        .iter()
        .map(|a| quantize_scaled(alg, a, factor))
        .collect::<Result<Vec<_>>>()?;
    let d = alg.dim();
    let n = alg.n;
    let id_s = CMat::identity(d);
    let id_u = CMat::identity(n);
    let rho: Vec<CMat> = gens
        .iter()
        .map(|m| CMat::from_rational(m))
        .collect::<Result<_>>()?;
    let r_v = |a: usize, k: usize| -> Vec<Gauss> { (0..n).map(|j| rat(gens[a][j][k])).collect() };

    // (a) realization on U ⊗ S
    let f_x: Vec<CMat> = (0..gens.len())
        .map(|a| &rho[a].kron(&id_s) + &id_u.kron(&q[a]))
        .collect();
    let f_v: Vec<CMat> = alg.generators.iter().map(|e| id_u.kron(e)).collect();
    let mut semidirect = Vec::new();
    let mut bracket = Vec::new();
    for a in 0..gens.len() {
        for k in 0..n {
            let rhs = id_u.kron(&alg.vector(&r_v(a, k)));
            semidirect.push(record(
                format!("[f(X{}), f(e{})]", a + 1, k + 1),
                &(&f_x[a].commutator(&f_v[k]) - &rhs),
            ));
        }
        for b in 0..gens.len() {
            let rhs = combination(&f_x, &structure[a][b], n * d);
            bracket.push(record(
                format!("[f(X{}), f(X{})]", a + 1, b + 1),
                &(&f_x[a].commutator(&f_x[b]) - &rhs),
            ));
        }
    }

    // (b) f⁻¹ ∘ f on X ⊗̂ w and 1 ⊗̂ w for Clifford words w of degree ≤ 2
    let words = low_degree_words(alg);
    let mut inverse = Vec::new();
    for (name, w) in &words {
        for a in 0..gens.len() {
            // source element in normal order X ⊗̂ w is stored as ([a], w)
            let source = Formal::term(d, vec![a], w.clone());
            let image =
                Formal::term(d, vec![a], w.clone()).add(&Formal::term(d, vec![], &q[a] * w));
            // f⁻¹(X ⊗ c) = X ⊗̂ c − 1 ⊗̂ r̃(X) c, f⁻¹(1 ⊗ c) = 1 ⊗̂ c
            let mut back = Formal::zero(d);
            for (word, c) in &image.terms {
                back.add_term(word.clone(), c.clone());
                for &x in word {
                    back.add_term(vec![], -&(&q[x] * c));
                }
            }
            inverse.push(formal_record(
                format!("f⁻¹∘f(X{} ⊗̂ {name})", a + 1),
                &back.sub(&source),
            ));
        }
        let scalar = Formal::term(d, vec![], w.clone());
        inverse.push(formal_record(
            format!("f⁻¹∘f(1 ⊗̂ {name})"),
            &scalar.sub(&scalar),
        ));
    }

    // (c) mixed products in U(g) ⊗ Cl(V)
    let mut mixed = Vec::new();
    for a in 0..gens.len() {
        let fx = Formal::term(d, vec![a], id_s.clone()).add(&Formal::term(d, vec![], q[a].clone()));
        for k in 0..n {
            let fv = Formal::term(d, vec![], alg.generators[k].clone());
            let lhs = fx.mul(&fv).sub(&fv.mul(&fx));
            let rhs = Formal::term(d, vec![], alg.vector(&r_v(a, k)));
            mixed.push(formal_record(
                format!("f(X{})f(e{}) − f(e{})f(X{})", a + 1, k + 1, k + 1, a + 1),
                &lhs.sub(&rhs),
            ));
        }
    }

    Ok(vec![
        merge("(a) [f(X), f(v)] = f(r_X v)", semidirect),
        merge("(a) [f(X), f(Y)] = f([X, Y])", bracket),
        merge("(b) f⁻¹ ∘ f = id", inverse),
        merge("(c) f(X)f(v) − f(v)f(X) = 1 ⊗ r_X v", mixed),
    ])
}

/// A finite-dimensional representation of the Lie algebra spanned by given generators.
#[derive(Clone, Debug)]
pub struct LieModule {
    pub name: String,
    pub action: Vec<CMat>,
}

impl LieModule {
    pub fn dim(&self) -> usize {
        self.action.first().map_or(1, CMat::dim)
    }

    pub fn trivial(gens: usize) -> Self {
        LieModule {
            name: "trivial".into(),
            action: vec![CMat::zeros(1); gens],
        }
    }

    /// `J_a = −(i/2) σ_a`, satisfying `[J₁, J₂] = J₃`.
    pub fn spin_half() -> Self {
        let k = Complex::new(Rational64::zero(), Rational64::new(-1, 2));
        LieModule {
            name: "spin-1/2".into(),
            action: pauli().iter().map(|s| s.scale(&k)).collect(),
        }
    }

    pub fn defining(gens: &[RatMat]) -> Result<Self> {
        Ok(LieModule {
            name: "vector".into(),
            action: gens
                .iter()
                .map(|m| CMat::from_rational(m))
                .collect::<Result<_>>()?,
        })
    }

    /// Validates that `action` represents the bracket of `gens`.
    pub fn custom(name: &str, gens: &[RatMat], action: Vec<CMat>) -> Result<Self> {
        let module = LieModule {
            name: name.to_string(),
            action,
        };
        module.validate(gens)?;
        Ok(module)
    }

    pub fn validate(&self, gens: &[RatMat]) -> Result<()> {
        if self.action.len() != gens.len() {
            return Err(Error::InvalidMatrix(format!(
                "module has {} operators for {} generators",
                self.action.len(),
                gens.len()
            )));
        }
        let dim = self.dim();
        if dim > 4 || self.action.iter().any(|m| m.dim() != dim) {
            return Err(Error::InvalidMatrix(
                "module operators must share a dimension ≤ 4".into(),
            ));
        }
        let structure = structure_constants(gens).ok_or_else(|| {
            Error::InvalidMatrix("generators do not close under the bracket".into())
        })?;
        for a in 0..gens.len() {
            for b in 0..gens.len() {
                let rhs = combination(&self.action, &structure[a][b], dim);
                let diff = &self.action[a].commutator(&self.action[b]) - &rhs;
                if let Some(w) = diff.first_nonzero() {
                    return Err(Error::InvalidMatrix(format!(
                        "not a representation: [ρ(X{}), ρ(X{})] differs at {w}",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// `Cl(V)` acting on itself, on the basis of monomials `e_S` indexed by bitmask.
struct RegularClifford {
    n: usize,
    left: Vec<CMat>,
    right: Vec<CMat>,
    grading: CMat,
}

fn monomial_product(n: usize, s: usize, t: usize) -> (i64, usize) {
    // e_S e_T: move each generator of T leftward past the larger ones of S
    let mut sign = 1;
    for i in 0..n {
        if t >> i & 1 == 1 {
            let above = (s >> (i + 1)).count_ones();
            if above % 2 == 1 {
                sign = -sign;
            }
            if s >> i & 1 == 1 {
                sign = -sign; // eᵢ² = −1
            }
        }
    }
    (sign, s ^ t)
}

impl RegularClifford {
    fn new(n: usize) -> Self {
        let size = 1usize << n;
        let mut left = Vec::new();
        let mut right = Vec::new();
        for i in 0..n {
            let g = 1usize << i;
            let mut l = CMat::zeros(size);
            let mut r = CMat::zeros(size);
            for s in 0..size {
                let (sign, out) = monomial_product(n, g, s);
                l.set(out, s, re(sign));
                let (sign, out) = monomial_product(n, s, g);
                r.set(out, s, re(sign));
            }
            left.push(l);
            right.push(r);
        }
        let mut grading = CMat::zeros(size);
        for s in 0..size {
            grading.set(s, s, re(if s.count_ones() % 2 == 0 { 1 } else { -1 }));
        }
        RegularClifford {
            n,
            left,
            right,
            grading,
        }
    }

    fn left_quantized(&self, a: &RatMat, factor: Rational64) -> CMat {
        let mut out = CMat::zeros(1 << self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                if !a[j][i].is_zero() {
                    out = &out + &(&self.left[i] * &self.left[j]).scale(&rat(a[j][i] * factor));
                }
            }
        }
        out
    }
}

/// Checks the twisted actions on `U ⊗ Cl(V)`: `X ↦ ρ(X) ⊗ 1 + 1 ⊗ r̃(X)·`,
/// `v ↦ 1 ⊗ v·`, and `fᵢ(u ⊗ ω) = u ⊗ ε(ω)·eᵢ`.
pub fn twisted_action_check(
    alg: &CliffordMatrixAlgebra,
    gens: &[RatMat],
    module: &LieModule,
) -> Result<Report> {
    twisted_action_check_with(alg, gens, module, true)
}

/// As [`twisted_action_check`]; with `use_grading = false` the `fᵢ` omit
/// the grading involution (a negative control).
pub fn twisted_action_check_with(
    alg: &CliffordMatrixAlgebra,
    gens: &[RatMat],
    module: &LieModule,
    use_grading: bool,
) -> Result<Report> {
    for a in gens {
        check_antisymmetric(alg.n, a)?;
    }
    module.validate(gens)?;
    let cl = RegularClifford::new(alg.n);
    let id_cl = CMat::identity(1 << alg.n);
    let id_u = CMat::identity(module.dim());
    let quarter = Rational64::new(1, 4);
    let xs: Vec<CMat> = gens
        .iter()
        .zip(&module.action)
        .map(|(a, r)| &r.kron(&id_cl) + &id_u.kron(&cl.left_quantized(a, quarter)))
        .collect();
    let vs: Vec<CMat> = cl.left.iter().map(|l| id_u.kron(l)).collect();
    let fs: Vec<CMat> = cl
        .right
        .iter()
        .map(|r| {
            if use_grading {
                id_u.kron(&(r * &cl.grading))
            } else {
                id_u.kron(r)
            }
        })
        .collect();
    let n = alg.n;
    let mut a_rec = Vec::new();
    let mut b_rec = Vec::new();
    for (a, x) in xs.iter().enumerate() {
        for k in 0..n {
            let rhs = (0..n).fold(CMat::zeros(x.dim()), |acc, j| {
                &acc + &vs[j].scale(&rat(gens[a][j][k]))
            });
            a_rec.push(record(
                format!("[X{}, e{}]", a + 1, k + 1),
                &(&x.commutator(&vs[k]) - &rhs),
            ));
        }
        for (i, f) in fs.iter().enumerate() {
            b_rec.push(record(
                format!("[f{}, X{}]", i + 1, a + 1),
                &f.commutator(x),
            ));
        }
    }
    let mut c_rec = Vec::new();
    let mut d_rec = Vec::new();
    let mut e_rec = Vec::new();
    let id = CMat::identity(module.dim() << n);
    for (i, f) in fs.iter().enumerate() {
        for (k, v) in vs.iter().enumerate() {
            c_rec.push(record(
                format!("f{} e{} + e{} f{}", i + 1, k + 1, k + 1, i + 1),
                &f.anticommutator(v),
            ));
        }
        d_rec.push(record(format!("f{}²", i + 1), &(&(f * f) - &id)));
        for (j, g) in fs.iter().enumerate().skip(i + 1) {
            e_rec.push(record(
                format!("f{} f{} + f{} f{}", i + 1, j + 1, j + 1, i + 1),
                &f.anticommutator(g),
            ));
        }
    }
    Ok(vec![
        merge("(a) [X, v] = r_X v", a_rec),
        merge("(b) [fᵢ, X] = 0", b_rec),
        merge("(c) fᵢ v + v fᵢ = 0", c_rec),
        merge("(d) fᵢ² = 1", d_rec),
        merge("fᵢ fⱼ + fⱼ fᵢ = 0 (i≠j)", e_rec),
    ])
}
