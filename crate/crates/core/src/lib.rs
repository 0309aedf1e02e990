//! Exact computer algebra for the rank-one lattice vertex algebra `V_L`,
//! `<alpha, alpha> = 2p`, and the triplet W-algebra sitting inside it as the
//! kernel of the long screening charge.
//!
//! Everything symbolic is computed over arbitrary-precision rationals:
//!
//! - [`exactmath`]: rationals, dense univariate polynomials, truncated
//!   Puiseux series (rational exponents).
//! - [`fock`]: charged Fock-space vectors, Heisenberg/Virasoro/exponential
//!   operator modes, screening charges, triplet generators, exact kernel
//!   dimensions, singular-vector checks.
//! - [`zhu`]: conformal weights, the degree-(3p-1) vanishing polynomial of
//!   the Virasoro image in Zhu's algebra, the binomial identity and its
//!   residue oracle, the idempotent decomposition, top-component relations.
//! - [`chars`]: eta/theta q-expansions, irreducible and lattice-module
//!   characters, numeric evaluation, and the S-transform closure test.
//! - [`verify`]: the identity-check suite aggregating all of the above into
//!   a machine-readable report.

pub mod chars;
pub mod error;
pub mod exactmath;
pub mod fock;
pub mod verify;
pub mod zhu;

pub use error::{Error, Result};
