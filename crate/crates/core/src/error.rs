//! Error type shared by all modules of the library.

use std::fmt;

/// Library-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by exact and numeric operations.
///
/// Structural invariant violations (a computation producing an inhomogeneous
/// vector, say) are bugs and panic instead.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Lattice parameter `p < 2`; `p = 1` does not give a new vertex algebra.
    InvalidLatticeParam(i64),
    /// Two interpolation points share an abscissa.
    DuplicateAbscissa(String),
    /// Polynomial division by the zero polynomial.
    DivisionByZeroPoly,
    /// Series inversion requires a nonzero coefficient at the minimal exponent.
    NonInvertibleSeries,
    /// The fractional-power bookkeeping of an exponential-operator mode
    /// failed: `r + <beta, mu>` must be an integer on every term.
    IncompatibleModeIndex { b_num: i64, index: String, charge: i64 },
    /// A polynomial expected to be symmetric under `t -> 2p-2-t` is not.
    NotSymmetric(String),
    /// The degree-two recursion for `A_p(t)` has a pole at `t = 2p-1`.
    RecursionPole { p: i64, t: i64 },
    /// A self-auditing polynomial identity failed to hold.
    IdentityFailure(String),
    /// A top-component operator relation failed, with the offending weight.
    RelationFailure(String),
    /// The theta-subscript convention self-check failed.
    SubscriptConventionMismatch(String),
    /// Series truncation order too low for the requested numeric tolerance.
    InsufficientOrder { tail_bound: f64, tol: f64 },
    /// The sample-value matrix of the closure test is numerically singular.
    IllConditioned { cond: f64, bound: f64 },
    /// Unknown module label passed to a character routine.
    UnknownModule(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidLatticeParam(p) => {
                write!(f, "invalid lattice parameter p = {p}: need p >= 2")
            }
            Error::DuplicateAbscissa(x) => write!(f, "duplicate interpolation abscissa {x}"),
            Error::DivisionByZeroPoly => write!(f, "polynomial division by zero"),
            Error::NonInvertibleSeries => {
                write!(f, "series has zero leading coefficient; not invertible")
            }
            Error::IncompatibleModeIndex { b_num, index, charge } => write!(
                f,
                "mode index {index} incompatible with exponential charge {b_num} on charge {charge}"
            ),
            Error::NotSymmetric(what) => write!(f, "polynomial not symmetric: {what}"),
            Error::RecursionPole { p, t } => {
                write!(f, "recursion pole at t = {t} for p = {p} (valid range t <= 2p-2)")
            }
            Error::IdentityFailure(what) => write!(f, "identity failure: {what}"),
            Error::RelationFailure(what) => write!(f, "relation failure: {what}"),
            Error::SubscriptConventionMismatch(what) => {
                write!(f, "theta subscript convention mismatch: {what}")
            }
            Error::InsufficientOrder { tail_bound, tol } => write!(
                f,
                "series order insufficient: tail bound {tail_bound:.3e} exceeds tolerance {tol:.3e}"
            ),
            Error::IllConditioned { cond, bound } => {
                write!(f, "value matrix ill-conditioned: cond ~ {cond:.3e} > {bound:.3e}")
            }
            Error::UnknownModule(m) => write!(f, "unknown module label: {m}"),
        }
    }
}

impl std::error::Error for Error {}
