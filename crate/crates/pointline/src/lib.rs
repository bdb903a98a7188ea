//! One-dimensional quantum point interactions, complete with their U(2)
//! parameter family.
//!
//! A zero-range interaction at the origin of a line is fixed by a single
//! unitary 2×2 matrix through the boundary condition
//! (U − I)Φ + iL0(U + I)Φ′ = 0 on the two-sided boundary data of the
//! wavefunction. This crate implements the family end to end:
//!
//! * [`params`] — the characteristic matrix U, the local transfer matrix Λ,
//!   conversions, symmetry classification, the wall/scale-invariant product
//!   decomposition, eigenphases and the reference-length rescaling;
//! * [`symmetry`] — the spectrum-preserving discrete maps P, Q, R (an su(2)
//!   in disguise), the coupling constants g± = tan(θ₊/2), cot(θ₋/2) and the
//!   strong–weak duality transformations;
//! * [`scattering`] — reflection/transmission amplitudes from two
//!   independent routes, bound states, transmission filter profiles;
//! * [`spectra`] — box spectra (Dirichlet, Neumann, periodic, antiperiodic),
//!   spectral flow along parameter paths with its level anholonomy, and the
//!   supersymmetric point U = −I;
//! * [`berry`] — the geometric phase on the scale-invariant sphere, where
//!   the level family behaves as a charge −1 Dirac monopole.
//!
//! Units: ħ²/2m = 1 throughout, so energies are E = k² for scattering and
//! box levels and E = −κ² for bound states. All formulas depend on momenta
//! only through k·L0.
//!
//! ```
//! use pointline::params::{CharacteristicMatrix, ScaleParameter};
//! use pointline::scattering::amplitudes_global;
//!
//! let l0 = ScaleParameter::new(1.0)?;
//! let free = CharacteristicMatrix::free_point();
//! let amp = amplitudes_global(&free, l0, 2.0)?;
//! assert!((amp.transmission() - 1.0).abs() < 1e-14);
//! # Ok::<(), pointline::Error>(())
//! ```

pub mod berry;
pub mod error;
pub mod mat2;
pub mod params;
pub mod sampling;
pub mod scattering;
pub mod spectra;
pub mod symmetry;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    //! The guide chapters double as doc-tests so the book stays in sync
    //! with the crate.
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }

    chapter!(boundary_conditions, "../../../book/src/boundary-conditions.md");
    chapter!(transfer_matrix, "../../../book/src/transfer-matrix.md");
    chapter!(symmetries, "../../../book/src/symmetries.md");
    chapter!(duality, "../../../book/src/duality.md");
    chapter!(scattering_chapter, "../../../book/src/scattering.md");
    chapter!(box_spectra, "../../../book/src/box-spectra.md");
    chapter!(berry_phase, "../../../book/src/berry-phase.md");
}
