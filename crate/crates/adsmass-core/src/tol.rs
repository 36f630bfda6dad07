//! Centralized tolerances with their rationale.
//!
//! Two families cover almost everything, both *scale-multiplied* by the
//! magnitude of the inputs (inputs are assumed O(1)–O(10), but nothing relies
//! on it):
//!
//! - algebraic identities (polynomial consequences of exact relations) get
//!   [`ALGEBRAIC`];
//! - quantities produced by iteration or optimization get [`OPTIMIZATION`].
//!
//! Residuals of degree-k polynomial identities are compared against
//! `tol · scaleᵏ` where `scale` is the largest input magnitude, so membership
//! tests stay meaningful for both tiny and large fields. The remaining
//! constants pin individual algorithms and are referenced from their call
//! sites.

/// Default tolerance for algebraic identities, per unit scale.
///
/// Everything here is a low-degree polynomial in f64 inputs; residuals of
/// true identities sit near 1e-15·scaleᵏ, leaving six orders of headroom.
pub const ALGEBRAIC: f64 = 1e-9;

/// Default tolerance for optimization- or iteration-derived quantities.
///
/// Minima found by sampling plus local refinement carry search error well
/// below this; closed-form cross-checks use it as the acceptance band.
pub const OPTIMIZATION: f64 = 1e-6;

/// Bisection interval width at which scalar root-finding stops.
///
/// All brackets here start with width O(1)–O(10), so ~50 halvings reach this;
/// the iteration cap leaves a 4× margin.
pub const BISECTION: f64 = 1e-12;

/// Hard cap on bisection iterations (3–4× more than needed to reach
/// [`BISECTION`]; hitting it still returns the midpoint, it never loops).
pub const BISECTION_MAX_ITERS: usize = 200;

/// Matrix exponential: scale the argument by halves until its ∞-norm is
/// below this before the Taylor sum.
///
/// At norm ≤ 0.25 the series is strongly convergent and squaring
/// amplification stays ~1e-13 on 5×5 inputs (measured against a reference
/// implementation).
pub const EXPM_SCALE_THRESHOLD: f64 = 0.25;

/// Matrix exponential: stop the Taylor sum once the term's max entry drops
/// below this.
pub const EXPM_TERM_TOL: f64 = 1e-16;

/// Matrix exponential: term cap (the series at norm 0.25 needs ~20 terms;
/// 60 is safety margin).
pub const EXPM_MAX_TERMS: usize = 60;

/// Coordinate-descent step size at which `min_norm`'s local refinement stops
/// shrinking.
pub const MIN_NORM_SHRINK: f64 = 1e-8;

/// Group-membership residual bound: `max|gᵀηg − η| ≤ tol · max(1, ‖g‖∞²)`.
///
/// Exponentials of O(1) algebra elements satisfy this to ~1e-14; the bound
/// rejects matrices that are not isometries without tripping on roundoff.
pub const GROUP_RESIDUAL: f64 = 1e-10;

/// Jacobi eigensolver: stop sweeping once the off-diagonal Frobenius mass
/// falls below this times the matrix scale squared.
pub const JACOBI_OFF_TOL: f64 = 1e-30;
