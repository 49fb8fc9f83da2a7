//! Finite-group computation and exact verification of bounds on the sum
//! of element orders `psi(G)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: factorization, Euler's totient, `psi(C_n)` in closed form,
//!   and the prime products behind the solvability bounds;
//! - [`permgroup`]: permutation groups with full element enumeration,
//!   subgroups, quotients, Sylow subgroups, derived series and isomorphism;
//! - [`families`]: constructors for cyclic, abelian, dihedral, dicyclic,
//!   semidihedral, symmetric, alternating and cyclic-extension groups, and
//!   a catalog of every group of order at most 16;
//! - [`analysis`]: `psi(G)`, exact ratios against `psi(C_n)`, the
//!   semidirect-product formula and per-group structure reports;
//! - [`harness`]: corpora, theorem runners and table emission.
//!
//! ```
//! use psigroup::{analysis::psi, families};
//!
//! let a5 = families::alternating(5).unwrap();
//! assert_eq!(psi(&a5), 211);
//! ```

pub mod analysis;
pub mod arith;
pub mod families;
pub mod harness;
pub mod permgroup;

pub use arith::Rational;
pub use permgroup::{GroupError, OrderProfile, PermGroup, Permutation};
