//! Exact computation of the torus representation on the deformation space
//! of LeBrun twistor spaces over nCP^2.
//!
//! A LeBrun self-dual metric on nCP^2 whose defining points are collinear
//! carries a 2-torus of isometries, and its twistor space Z inherits an
//! algebraic C* x C* action. This crate computes, in exact rational
//! arithmetic, the induced weight decomposition of the deformation space
//! H^1(Theta_Z), and from it the classification of the U(1)-subgroups that
//! admit symmetry-breaking equivariant deformations together with the
//! dimensions of the resulting moduli of self-dual metrics.
//!
//! The pipeline:
//!
//! * [`exact`] — arbitrary-precision rationals and exact rank/basis/quotient
//!   linear algebra.
//! * [`weights`] — the character lattice of the torus: weights, weight
//!   multisets, primitive subgroup directions.
//! * [`cohomology`] — line-bundle cohomology on P^1 and P^1 x P^1 and
//!   equivariant Cech H^1 bases.
//! * [`deformation`] — the weight decomposition of H^1(Theta_Z), computed
//!   both by exact linear algebra from a parameter configuration and from
//!   the closed-form weight lists, plus the dimension audit.
//! * [`cycle`] — the invariant cycle of 2n+4 rational curves, pointwise
//!   stabilizers, isotropy weights, semi-freeness classification.
//! * [`moduli`] — subgroup scanning, excess detection, moduli dimensions.
//! * [`report`] — serializable report types with stable field names.
//!
//! Scans and batch assemblies are data-parallel via rayon under the
//! `parallel` feature (enabled by default); disabling it yields a fully
//! sequential build with identical results.

pub mod cohomology;
pub mod cycle;
pub mod deformation;
mod error;
pub mod exact;
pub mod moduli;
mod par;
pub mod report;
pub mod weights;

pub use error::{Error, Result};
