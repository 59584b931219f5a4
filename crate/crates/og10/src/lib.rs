//! Exact-arithmetic toolkit around the Euler characteristic of OG10
//! hyper-Kähler manifolds.
//!
//! An OG10 manifold fibered in intermediate Jacobians over the dual
//! projective space of a general cubic fourfold picks up Euler characteristic
//! only over finitely many points of the discriminant: the hyperplanes whose
//! section projects to a 5-nodal plane quintic of geometric genus 1. Each of
//! those fibers is a compactified Prym contributing exactly 1, and there are
//! 176,904 of them, so `chi(OG10) = 176,904`.
//!
//! The crate makes every step of that computation executable and
//! cross-checkable:
//!
//! - [`singularity`]: ADE singularity invariants on plane quintics and the
//!   enumeration of configurations with total Milnor number <= 5;
//! - [`prym`]: Euler characteristics of compactified Prym and Jacobian
//!   varieties via the node-subset stratification, closed form against brute
//!   force;
//! - [`degrees`]: the exact 5-tangent-hyperplane count and its classical
//!   cross-check identities;
//! - [`fibration`]: the stratified aggregation that assembles the total;
//! - [`betti`]: Salamon/Verbitsky/duality/Euler constraints on candidate
//!   Betti numbers, with a feasibility search showing they under-determine
//!   the OG10 Betti numbers;
//! - [`cli`]: the `og10` command-line surface over all of the above.
//!
//! All arithmetic is exact; big values use arbitrary-precision integers.

// Keep the README example compiling.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;

pub mod betti;
pub mod cli;
pub mod degrees;
pub mod error;
pub mod fibration;
pub mod prym;
pub mod singularity;

pub use error::{Error, Result};
