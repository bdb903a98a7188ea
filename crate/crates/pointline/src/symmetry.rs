//! Discrete transformations on the interaction family and the coupling
//! constants they act on.
//!
//! Conjugation by the three Pauli matrices gives three involutions on U(2):
//! parity P (σ1), the twisted reflection Q (σ2) and the half-reflection
//! R (σ3). Their generators obey the Pauli product table, so {P, Q, R}
//! represents an su(2); all three preserve spectra because they act on
//! wavefunctions only by reflections and constant factors. On the parity
//! torus the couplings
//!
//! ```text
//! g₊ = tan(θ₊/2),   g₋ = cot(θ₋/2)
//! ```
//!
//! turn R into the strong–weak map (g₊, g₋) → (1/g₋, 1/g₊). Half-cycle
//! shifts I± in the two angles, the inverse map S and the combination
//! C = S·I₊·I₋·R complete the dictionary of coupling transformations.

use crate::error::{Error, Result};
use crate::mat2::{Mat2, C64};
use crate::params::{BoundaryVectors, CharacteristicMatrix, PauliAxis, CLASSIFY_TOL};
use std::f64::consts::PI;

/// Tags for the discrete transformations acting on the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiscreteTransform {
    /// Parity: x → −x, U → σ1 U σ1.
    P,
    /// Time reversal: complex conjugation, U → Uᵀ.
    T,
    /// Combined PT: U → σ1 Uᵀ σ1.
    Pt,
    /// Twisted reflection: U → σ2 U σ2.
    Q,
    /// Half-reflection (sign flip on one half line): U → σ3 U σ3.
    R,
    /// Signature change: U → U⁻¹, i.e. (θ₊, θ₋) → (−θ₊, −θ₋).
    S,
    /// Half-cycle shift θ₊ → θ₊ + π on the parity torus.
    IPlus,
    /// Half-cycle shift θ₋ → θ₋ + π on the parity torus.
    IMinus,
    /// Coupling exchange C = S·I₊·I₋·R, swapping (g₊, g₋) → (g₋, g₊).
    C,
}

impl DiscreteTransform {
    pub fn label(&self) -> &'static str {
        match self {
            DiscreteTransform::P => "P",
            DiscreteTransform::T => "T",
            DiscreteTransform::Pt => "PT",
            DiscreteTransform::Q => "Q",
            DiscreteTransform::R => "R",
            DiscreteTransform::S => "S",
            DiscreteTransform::IPlus => "I+",
            DiscreteTransform::IMinus => "I-",
            DiscreteTransform::C => "C",
        }
    }
}

/// Sector couplings (g₊, g₋) felt by symmetric and antisymmetric states.
/// Poles of tan/cot are kept as signed infinities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingPair {
    pub g_plus: f64,
    pub g_minus: f64,
}

fn require_parity(u: &CharacteristicMatrix) -> Result<()> {
    let m = u.matrix();
    let s1 = Mat2::pauli(1);
    let residual = s1.mul(&m).mul(&s1).distance(&m);
    if residual >= CLASSIFY_TOL {
        return Err(Error::NotInSubfamily {
            required: "omega_p (parity torus)",
            residual,
        });
    }
    Ok(())
}

/// Map the characteristic matrix under a discrete transformation.
///
/// P, T, PT, Q, R, S act on all of U(2) and are involutive; I± and C are
/// defined on the parity torus only.
pub fn apply_transform(
    u: &CharacteristicMatrix,
    t: DiscreteTransform,
) -> Result<CharacteristicMatrix> {
    let m = u.matrix();
    let mapped = match t {
        DiscreteTransform::P => {
            let s = Mat2::pauli(1);
            s.mul(&m).mul(&s)
        }
        DiscreteTransform::T => m.transpose(),
        DiscreteTransform::Pt => {
            let s = Mat2::pauli(1);
            s.mul(&m.transpose()).mul(&s)
        }
        DiscreteTransform::Q => {
            let s = Mat2::pauli(2);
            s.mul(&m).mul(&s)
        }
        DiscreteTransform::R => {
            let s = Mat2::pauli(3);
            s.mul(&m).mul(&s)
        }
        DiscreteTransform::S => m.adjoint(),
        DiscreteTransform::IPlus => {
            require_parity(u)?;
            // e^{iπ P⁺_1} = −σ1
            Mat2::pauli(1).scale(C64::new(-1.0, 0.0)).mul(&m)
        }
        DiscreteTransform::IMinus => {
            require_parity(u)?;
            // e^{iπ P⁻_1} = σ1, right multiplication
            m.mul(&Mat2::pauli(1))
        }
        DiscreteTransform::C => {
            require_parity(u)?;
            let r = apply_transform(u, DiscreteTransform::R)?;
            let im = apply_transform(&r, DiscreteTransform::IMinus)?;
            let ip = apply_transform(&im, DiscreteTransform::IPlus)?;
            return apply_transform(&ip, DiscreteTransform::S);
        }
    };
    CharacteristicMatrix::from_matrix(&mapped)
}

/// Couplings of the parity-torus angles: g₊ = tan(θ₊/2), g₋ = cot(θ₋/2).
///
/// At the poles (θ₊ = π, θ₋ = 0) the value is the one-sided limit from the
/// canonical range, +∞ in both cases.
pub fn coupling_constants(theta_plus: f64, theta_minus: f64) -> CouplingPair {
    const POLE_TOL: f64 = 1e-12;
    let tp = theta_plus.rem_euclid(2.0 * PI);
    let tm = theta_minus.rem_euclid(2.0 * PI);
    let g_plus = if (tp - PI).abs() < POLE_TOL {
        f64::INFINITY
    } else {
        (tp / 2.0).tan()
    };
    let g_minus = if tm < POLE_TOL || (2.0 * PI - tm) < POLE_TOL {
        f64::INFINITY
    } else {
        1.0 / (tm / 2.0).tan()
    };
    CouplingPair { g_plus, g_minus }
}

/// Action of a transformation on the couplings.
///
/// Q and R both swap the chiral angles on the parity torus, so their
/// coupling action coincides; T and PT have no coupling action.
pub fn coupling_transform(c: CouplingPair, t: DiscreteTransform) -> Result<CouplingPair> {
    let CouplingPair { g_plus, g_minus } = c;
    let mapped = match t {
        DiscreteTransform::P => c,
        DiscreteTransform::Q | DiscreteTransform::R => CouplingPair {
            g_plus: 1.0 / g_minus,
            g_minus: 1.0 / g_plus,
        },
        DiscreteTransform::IPlus => CouplingPair {
            g_plus: -1.0 / g_plus,
            g_minus,
        },
        DiscreteTransform::IMinus => CouplingPair {
            g_plus,
            g_minus: -1.0 / g_minus,
        },
        DiscreteTransform::S => CouplingPair {
            g_plus: -g_plus,
            g_minus: -g_minus,
        },
        DiscreteTransform::C => CouplingPair {
            g_plus: g_minus,
            g_minus: g_plus,
        },
        DiscreteTransform::T | DiscreteTransform::Pt => {
            return Err(Error::Unsupported {
                transform: t.label(),
                context: "coupling constants",
            })
        }
    };
    Ok(mapped)
}

/// Action of P, Q, R on boundary data: the corresponding Pauli matrix hits
/// both Φ and Φ′.
pub fn transform_boundary_vectors(
    bv: &BoundaryVectors,
    t: DiscreteTransform,
) -> Result<BoundaryVectors> {
    let axis = match t {
        DiscreteTransform::P => PauliAxis::One,
        DiscreteTransform::Q => PauliAxis::Two,
        DiscreteTransform::R => PauliAxis::Three,
        _ => {
            return Err(Error::Unsupported {
                transform: t.label(),
                context: "boundary vectors",
            })
        }
    };
    let s = Mat2::pauli(axis.index());
    Ok(BoundaryVectors::new(s.apply(&bv.phi), s.apply(&bv.dphi)))
}
