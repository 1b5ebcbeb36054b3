//! Exact-arithmetic critical groups of multigraphs and integer matrices.
//!
//! The crate has three layers:
//!
//! * [`exactlin`] — dense matrices over arbitrary-precision integers, Smith
//!   normal form, minor gcds, fraction-free determinants, and canonical forms
//!   of finitely generated abelian groups. This is the oracle layer: everything
//!   else in the crate is checked against it.
//! * [`polyseq`], [`graphs`], [`matforms`], [`closedform`] — the determinant
//!   recurrences, multigraph constructions (duplication, cones, coupled
//!   two-part families), parametric matrix families with their claimed
//!   diagonal equivalents, and closed-form critical-group formulas.
//! * [`harness`] — a claim registry that sweeps every closed formula and
//!   claimed equivalence against the oracle layer and reports VERIFIED /
//!   REFUTED verdicts with double-confirmed counterexamples.
//!
//! Everything is exact; there is no floating point anywhere in the crate.
//!
//! See the `examples/` directory for one runnable example per capability, and
//! the `critgroup` binary for the command-line surface.

pub mod closedform;
pub mod exactlin;
pub mod graphs;
pub mod harness;
pub mod io;
pub mod matforms;
pub mod polyseq;

pub use exactlin::{
    canonicalize, critical_group, det, minor_gcd, snf, AbelianGroup, GroupOrder, IntMatrix,
    SmithForm,
};

pub use num_bigint::BigInt;

pub(crate) fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `base^exp` for exponents wider than the inherent `u32` method accepts.
pub(crate) fn ipow(base: &BigInt, exp: u64) -> BigInt {
    num_traits::Pow::pow(base, exp)
}
