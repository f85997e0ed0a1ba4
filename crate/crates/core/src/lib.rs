//! Exact representation-theoretic computations for equal-rank pairs `h ⊂ g`
//! of compact Lie algebras.
//!
//! The crate is organised bottom-up:
//!
//! - [`rootdata`]: Cartan matrices, root systems, Weyl group combinatorics.
//! - [`chars`]: weight multisets, Freudenthal multiplicities, Weyl dimensions,
//!   tensor products and virtual decompositions.
//! - [`embed`]: equal-rank embeddings, the spinor supermodule of `g/h` and
//!   coset representatives of `W_g / W_h`.
//! - [`superring`]: the ℤ₂-graded super representation ring with parity
//!   reversal, the supersymmetric pairing and the truncated pushforward.
//! - [`gkrs`]: Euler-class restriction, GKRS multiplets and Dirac induction.
//! - [`cliffmat`]: explicit Clifford matrices, the quantization map
//!   `so(V) → spin(V)` and the algebraic Thom isomorphism checks.
//!
//! Every computation is exact: integers for weights, rationals for the
//! invariant form, Gaussian rationals for Clifford matrices.

#![allow(clippy::needless_range_loop)]

pub mod chars;
pub mod cliffmat;
pub mod embed;
mod error;
pub mod gkrs;
pub mod linalg;
pub mod rootdata;
pub mod superring;

pub use chars::{VirtualDecomposition, WeightMultiset};
pub use embed::{Embedding, SpinWeights};
pub use error::{Error, Result};
pub use gkrs::Multiplet;
pub use rootdata::{RootSubsystem, RootSystem, Weight, WeylElement};
pub use superring::{CliffordClass, CliffordKind, SRElement, TwistLabel};
