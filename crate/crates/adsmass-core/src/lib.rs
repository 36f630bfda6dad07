//! Rest mass of asymptotically Anti-de Sitter conserved-charge data.
//!
//! Conserved charges `(e, p, c, j)` of an asymptotically AdS initial data set
//! live in the dual of the isometry algebra so(3,2). Pairing them with an
//! *observer Killing field* — a unit-normalized, hypersurface-orthogonal,
//! future-timelike element of so(3,2) — gives the energy that observer
//! measures; the **rest mass** is the infimum of that energy over all
//! observers, and it has the closed form `m² = ½(α + √β)` in terms of the two
//! coadjoint invariants α, β of the charges.
//!
//! This crate implements the full algebraic chain behind that statement and
//! verifies every link numerically:
//!
//! - [`algebra`] — so(3,2) in `(A, B⃗, C⃗, D⃗)` coordinates: matrix
//!   representation, bracket, Killing form, adjoint traces, the charge/field
//!   duality, group exponentials, and boosts to the rest frame.
//! - [`clifford`] — the ℂ⁴ Clifford representation: gamma matrices, the
//!   spinor sesquilinear form, the quadratic spinor → Killing-field map, the
//!   Fierz completeness identity, the contraction identities its image
//!   satisfies, and a constructive preimage for members of the spinor set 𝒮.
//! - [`geometry`] — the AdS hyperboloid and its charts, pointwise Killing
//!   norms, numerical norm minimization, and the Frobenius
//!   (hypersurface-orthogonality) test.
//! - [`sets`] — membership predicates and samplers for the observer set 𝒪
//!   and the spinor set 𝒮, the causal-gap functional, the constructive
//!   convex-hull decomposition of observers into 𝒮-rays, and the witness
//!   showing the hull inclusion is proper.
//! - [`mass`] — the Hermitian energy matrix Q, positivity and rigidity
//!   classification, the optimal-observer construction, the closed-form rest
//!   mass, and a sampling-based numerical cross-check.
//!
//! The crate is `no_std` (with `alloc`): all numerics are fixed-size f64 and
//! `Complex64` arithmetic with no I/O. Serialization of the public data types
//! is available behind the `serde` feature.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod clifford;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod mass;
pub mod sample;
pub mod sets;
pub mod tol;

pub use algebra::{AmbientMatrix, ConservedCharges, GroupElement, InvariantPair, KillingField};
pub use clifford::{Spinor, SpinorBilinears};
pub use error::Error;
pub use mass::{EnergyMatrix, MassReport, RigidityFlag};
pub use sets::{HullDecomposition, MembershipReport};
