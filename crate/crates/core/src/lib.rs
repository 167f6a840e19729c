//! Cyclotomic criteria for the Fermat-Catalan equation `x^p + y^p = z^q`
//! and the rational Catalan equation `X^p + Y^q = 1`.
//!
//! The crate is organized bottom-up:
//!
//! - [`ntcore`] — elementary modular arithmetic: primality, multiplicative
//!   orders, Fermat quotients, Wieferich congruences, exponent-gap tests.
//! - [`cycloring`] — arithmetic in the Galois ring `F_q[X]/(Phi_p(X))`,
//!   Galois action, trace/norm, the unit `gamma`, and the inverse-basis
//!   (resolvent) determinant.
//! - [`characters`] — Dirichlet characters with exact cyclotomic values,
//!   generalized Bernoulli numbers `B_{1,chi}`, relative class numbers
//!   `h_m^-` and the reflection quantity `B_omega`.
//! - [`tsystem`] — the difference-operator calculus and the exhaustive
//!   solver for the congruence system in the parameter `t = -y/x mod q^2`.
//! - [`diophantine`] — desk-scale equation search, Barlow-Abel case
//!   classification, the non-coprime lifting construction, and explicit
//!   lower-bound functions.
//! - [`criteria`] — theorem-level evaluators combining all of the above
//!   into auditable per-pair reports.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `cyclofc-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod characters;
pub mod criteria;
pub mod cycloring;
pub mod diophantine;
pub mod ntcore;
pub mod tsystem;

pub use ntcore::PrimePair;
