//! Error type shared by every module.

use core::fmt;

/// Everything that can go wrong across the library.
///
/// Variants are contract-level: each names the violated precondition rather
/// than the internal step that noticed it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Error {
    /// A 5×5 matrix is not in so(3,2): `Mη` is not antisymmetric.
    NotInAlgebra,
    /// A 5×5 matrix is not in O(3,2): `gᵀηg ≠ η` beyond tolerance.
    NotInGroup,
    /// Charges with `e ≤ |p|`: no boost brings the momentum to rest.
    NotTimelikeEnergyMomentum,
    /// A gamma multi-index is repeated, decreasing, or out of `{0,1,2,3}`.
    BadIndex,
    /// A Killing field fails the defining relations of the spinor set 𝒮.
    NotInSpinorSet,
    /// Input degenerate for the requested construction (e.g. `A ≈ 0` where
    /// `Δ² = −B·(C×D)/A` is needed).
    DegenerateInput,
    /// A chart map was evaluated on its excluded locus (`y⁴ = 1` or `u = 0`).
    ChartBoundary,
    /// A Killing field fails the timelike criterion
    /// `|A| > max(|B|,|C|,|D|)` and `A² + |D|² > |B|² + |C|²`.
    NotTimelike,
    /// A Killing field fails the observer-set constraints.
    NotObserver,
    /// A root bracket had the wrong signs: signals an implementation bug,
    /// not bad input.
    BisectionFailure,
    /// The energy matrix Q is not positive semidefinite; carries its minimum
    /// eigenvalue.
    NotPositive(f64),
    /// Charges outside the region where the optimal-observer construction is
    /// defined (`P < R` beyond tolerance).
    Degenerate,
}

impl Error {
    /// Stable machine-readable name (used verbatim in CLI error JSON).
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotInAlgebra => "NotInAlgebra",
            Error::NotInGroup => "NotInGroup",
            Error::NotTimelikeEnergyMomentum => "NotTimelikeEnergyMomentum",
            Error::BadIndex => "BadIndex",
            Error::NotInSpinorSet => "NotInSpinorSet",
            Error::DegenerateInput => "DegenerateInput",
            Error::ChartBoundary => "ChartBoundary",
            Error::NotTimelike => "NotTimelike",
            Error::NotObserver => "NotObserver",
            Error::BisectionFailure => "BisectionFailure",
            Error::NotPositive(_) => "NotPositive",
            Error::Degenerate => "Degenerate",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPositive(min_eig) => {
                write!(f, "NotPositive: Q min eigenvalue {min_eig}")
            }
            other => f.write_str(other.name()),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
