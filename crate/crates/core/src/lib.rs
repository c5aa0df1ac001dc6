//! Numerical nonsmooth analysis toolkit.
//!
//! The crate provides the machinery needed to study parameterized feasible
//! sets `U(x) = {u in M : c(u, x) in C}` where `M` is a compact Lipschitz
//! manifold and `c` is merely Lipschitz continuous:
//!
//! * [`matrixset`] — dense matrices, finitely generated convex matrix sets,
//!   set norms, and multi-index column selections.
//! * [`manifold`] — chart atlases for Lipschitz manifolds plus built-in
//!   analytic examples (circle, sphere, square boundary, torus).
//! * [`jacobian`] — sampled generalized Jacobians, partial Jacobians,
//!   mean-value certificates, and calculus checks.
//! * [`radius`] — the invertibility-radius function of a matrix-set field
//!   and its uniform version over chart families.
//! * [`ift`] — a certified Lipschitz implicit-function solver with explicit
//!   domain-radius estimates, plus open-mapping verifiers.
//! * [`setmap`] — constraint systems, the constraint-qualification checker,
//!   Hausdorff distances between feasible clouds, and the regularity
//!   verification pipeline.
//! * [`scenario`] — the registry of named analytic scenarios driven by the
//!   `lipset` command line tool.

pub mod error;
pub mod ift;
pub mod jacobian;
pub mod manifold;
pub mod matrixset;
pub mod radius;
pub mod sampling;
pub mod scenario;
pub mod setmap;

pub use error::{Error, Result};
