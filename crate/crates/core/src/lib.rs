//! Exact convex-cone workbench core.
//!
//! Everything here is computed over arbitrary-precision rationals; there is
//! no floating point anywhere in the crate. The main layers are
//!
//! * [`exact`] — rational scalars, vectors, matrices and exact linear algebra
//!   (solving, kernels, Hermite normal form, lattice saturation);
//! * [`cone`] — rational polyhedral cones in double description and
//!   Lorentzian (signature `(1, n-1)`) cones, with dual cones, lineality
//!   spaces, rational-hull membership and quotient projections;
//! * [`group`] — finitely generated groups of lattice automorphisms: word
//!   enumeration, cone invariance, dual actions and stabilizer search;
//! * [`domain`] — construction and depth-certified verification of (weak)
//!   rational polyhedral fundamental domains for such group actions.
//!
//! All verification is truncated: certificates always record the word-length
//! depth, sample count and seed they were obtained with.

pub mod cone;
pub mod domain;
pub mod exact;
pub mod group;

pub use cone::{ConeRef, PolyCone, QuadCone};
pub use domain::{DomainCandidate, DomainStatus, ReductionTrace, SidePairing};
pub use exact::{RatMatrix, RatVector, Rational};
pub use group::{GroupSpec, OrbitReport, Word};
