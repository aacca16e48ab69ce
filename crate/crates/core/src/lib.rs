//! Exact computer algebra for a trigonometric gl(N) integrable lattice model.
//!
//! The crate constructs, over the exact coefficient field Q(q^{1/2}), every
//! matrix object of the model — the constant and spectral R-matrices, the
//! classical r-matrix, the Lax matrix L(z) with noncommuting entries, the
//! reduction data (nu, S, t_j, S-hat) and the C-number matrices V, U, C12,
//! Y12, Z12, K12, R-tilde — and mechanically verifies the identities they
//! satisfy: the Yang-Baxter equation, projector and inverse formulas,
//! involution and centrality of classical invariants, the quantum
//! characteristic identity, auxiliary and closed commutation relations, and
//! q-commutation of separated variables on the spectral curve.
//!
//! Everything is exact: scalars are rational functions of the formal symbol
//! q^{1/2}, and operator identities are certified by degree-bounded
//! membership in the two-sided ideal of RTT relations. No floating point
//! enters except in the dedicated numeric sampling backends of the
//! `classical` and `geometry` modules.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `qlax-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod scalar;
pub mod cpoly;
pub mod cmatrix;
pub mod rmatrix;
pub mod ncpoly;
pub mod ncmatrix;
pub mod relations;
pub mod membership;
pub mod rewrite;
pub mod rtt;
pub mod reduction;
pub mod classical;
pub mod numeric;
pub mod geometry;
pub mod sepvars;
pub mod report;

pub use scalar::ScalarQ;
pub use cpoly::{CPoly, Var, VarSet};
pub use cmatrix::{CMatrix, SpaceTag};
pub use ncpoly::{Alphabet, GenId, NCPoly, Word};
pub use ncmatrix::NCMatrix;
pub use relations::RelationSet;
pub use membership::{Certificate, MembershipOutcome};
