//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// |α|² + |β|² strayed too far from 1 to be silently renormalized.
    #[error("norm constraint |alpha|^2 + |beta|^2 = 1 violated by {deviation:.3e}")]
    NormViolation { deviation: f64 },

    /// det of the real transfer-matrix part differs from 1.
    #[error("transfer matrix must satisfy ad - bc = 1, off by {deviation:.3e}")]
    UnimodularViolation { deviation: f64 },

    /// The local (transfer-matrix) description does not cover β = 0: those
    /// interactions split the line into two disconnected half lines.
    #[error("separated interaction (beta = 0) has no transfer-matrix form")]
    SeparatedInteraction,

    /// An operation that is only defined on an invariant subfamily was
    /// applied outside it.
    #[error("matrix is not in the required subfamily {required} (residual {residual:.3e})")]
    NotInSubfamily {
        required: &'static str,
        residual: f64,
    },

    /// The requested transformation has no action of this kind.
    #[error("transformation {transform} is not supported for {context}")]
    Unsupported {
        transform: &'static str,
        context: &'static str,
    },

    /// Scattering denominator vanished: spectral singularity at this momentum.
    #[error("degenerate scattering denominator at k = {k:.6e}")]
    DegenerateDenominator { k: f64 },

    /// The root scan cannot guarantee that all spectral roots were found.
    #[error("root finding incomplete: {detail}")]
    RootFindingIncomplete { detail: String },

    /// Level continuation could not decide between two candidate roots.
    #[error("tracking ambiguity at path parameter {t:.6} near k = {k:.6e}")]
    TrackingAmbiguity { t: f64, k: f64 },

    /// Two consecutive loop states are (anti)parallel in the sense that their
    /// overlap vanishes, so the discrete phase is undefined.
    #[error("gauge singularity: consecutive loop states have vanishing overlap")]
    GaugeSingularity,

    /// A configuration value failed validation.
    #[error("invalid configuration: {reason}")]
    InvalidConfig { reason: String },
}

impl Error {
    pub fn invalid(reason: impl Into<String>) -> Self {
        Error::InvalidConfig {
            reason: reason.into(),
        }
    }
}
