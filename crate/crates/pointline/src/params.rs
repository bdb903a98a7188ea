//! Global and local descriptions of a point interaction.
//!
//! A single point interaction at the origin of the line is fixed by the
//! boundary condition
//!
//! ```text
//! (U − I)Φ + i L0 (U + I)Φ′ = 0,      Φ = (φ(0+), φ(0−))ᵀ,  Φ′ = (φ′(0+), −φ′(0−))ᵀ,
//! ```
//!
//! with a unitary *characteristic matrix* U ∈ U(2) and a reference length L0.
//! We use the parametrization
//!
//! ```text
//! U = e^{iξ} [[α, β], [−β*, α*]],   ξ ∈ [0, π),   |α|² + |β|² = 1.
//! ```
//!
//! Interactions with β ≠ 0 also admit a *local* description through the
//! connection condition (φ(0+), φ′(0+))ᵀ = Λ (φ(0−), φ′(0−))ᵀ with
//! Λ = e^{iχ}[[a, b],[c, d]], ad − bc = 1. The β = 0 interactions act as
//! perfect walls and have no Λ.
//!
//! This module holds both descriptions, the conversions between them, the
//! symmetry classification, the product decomposition into a scale-invariant
//! factor times a wall factor, the eigenphase picture and the reference-scale
//! change that leaves the physics fixed.

use crate::error::{Error, Result};
use crate::mat2::{Mat2, Vec2, C64};
use std::f64::consts::PI;

/// Constructor tolerance: inputs farther than this from the constraint
/// surface are rejected instead of renormalized.
pub const NORM_TOL: f64 = 1e-9;
/// Tolerance for exact algebraic identities evaluated in f64.
pub const ALGEBRA_TOL: f64 = 1e-12;
/// Tolerance for subfamily membership tests.
pub const CLASSIFY_TOL: f64 = 1e-10;

const TAU: f64 = 2.0 * PI;

fn wrap_2pi(x: f64) -> f64 {
    let mut y = x.rem_euclid(TAU);
    if y >= TAU {
        y = 0.0;
    }
    y
}

/// Strictly positive reference length entering the boundary condition.
///
/// It carries no physical freedom of its own: changing it can be absorbed
/// into the characteristic matrix (see [`CharacteristicMatrix::rescale_l0`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleParameter(f64);

impl ScaleParameter {
    pub fn new(l0: f64) -> Result<Self> {
        if l0.is_finite() && l0 > 0.0 {
            Ok(ScaleParameter(l0))
        } else {
            Err(Error::invalid(format!(
                "scale parameter must be positive and finite, got {l0}"
            )))
        }
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Pauli axis selecting one of the three conjugation symmetries:
/// σ1 ↔ parity, σ2 ↔ the twisted reflection Q, σ3 ↔ half-reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliAxis {
    One,
    Two,
    Three,
}

impl PauliAxis {
    pub fn index(&self) -> usize {
        match self {
            PauliAxis::One => 1,
            PauliAxis::Two => 2,
            PauliAxis::Three => 3,
        }
    }

    pub fn from_index(i: usize) -> Result<Self> {
        match i {
            1 => Ok(PauliAxis::One),
            2 => Ok(PauliAxis::Two),
            3 => Ok(PauliAxis::Three),
            _ => Err(Error::invalid(format!("Pauli axis must be 1, 2 or 3, got {i}"))),
        }
    }
}

/// The characteristic matrix U = e^{iξ} [[α, β], [−β*, α*]] of a point
/// interaction; the global coordinate on the whole U(2) family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicMatrix {
    xi: f64,
    alpha: C64,
    beta: C64,
}

/// Local connection matrix Λ = e^{iχ}[[a, b],[c, d]] with real entries and
/// ad − bc = 1.
///
/// Entries are stored dimensionless: the physical matrix acting on
/// (φ, φ′) is [[a, b·L0], [c/L0, d]], so momenta pair with the entries only
/// through the combination k·L0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    chi: f64,
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl TransferMatrix {
    /// Validating constructor; folds χ into [0, π) absorbing the leftover
    /// sign into the entries, and renormalizes tiny determinant drift.
    pub fn new(chi: f64, a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if !(chi.is_finite() && a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite())
        {
            return Err(Error::invalid("non-finite transfer-matrix parameters"));
        }
        let det = a * d - b * c;
        let dev = (det - 1.0).abs();
        if dev >= NORM_TOL {
            return Err(Error::UnimodularViolation { deviation: dev });
        }
        let mut chi = chi.rem_euclid(TAU);
        let mut sign = 1.0;
        if chi >= PI {
            chi -= PI;
            sign = -1.0;
        }
        let s = sign / det.sqrt();
        Ok(TransferMatrix {
            chi,
            a: a * s,
            b: b * s,
            c: c * s,
            d: d * s,
        })
    }

    pub fn identity() -> Self {
        TransferMatrix {
            chi: 0.0,
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 1.0,
        }
    }

    /// The jump interaction in φ′ with symmetric-sector coupling g₊:
    /// Λ = [[1, 0], [−2g₊, 1]].
    pub fn delta(g_plus: f64) -> Self {
        TransferMatrix {
            chi: 0.0,
            a: 1.0,
            b: 0.0,
            c: -2.0 * g_plus,
            d: 1.0,
        }
    }

    /// The jump interaction in φ with antisymmetric-sector coupling g₋:
    /// Λ = [[1, −2g₋], [0, 1]].
    pub fn epsilon(g_minus: f64) -> Self {
        TransferMatrix {
            chi: 0.0,
            a: 1.0,
            b: -2.0 * g_minus,
            c: 0.0,
            d: 1.0,
        }
    }

    pub fn chi(&self) -> f64 {
        self.chi
    }
    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }

    /// Dimensionless complex matrix e^{iχ}[[a, b],[c, d]].
    pub fn matrix(&self) -> Mat2 {
        let ph = C64::from_polar(1.0, self.chi);
        Mat2::from_reals(self.a, self.b, self.c, self.d).scale(ph)
    }

    pub fn unimodularity_defect(&self) -> f64 {
        (self.a * self.d - self.b * self.c - 1.0).abs()
    }
}

/// Boundary data (Φ, Φ′) of a wavefunction at the two sides of the origin.
///
/// `phi` = (φ(0+), φ(0−)) and `dphi` = (φ′(0+), −φ′(0−)); note the sign in
/// the second derivative component.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryVectors {
    pub phi: Vec2,
    pub dphi: Vec2,
}

impl BoundaryVectors {
    pub fn new(phi: Vec2, dphi: Vec2) -> Self {
        BoundaryVectors { phi, dphi }
    }

    /// Generate boundary data admitted by `u`: for every seed v the pair
    /// Φ = (v + Uv)/2, Φ′ = (v − Uv)/(2iL0) satisfies the boundary condition
    /// identically.
    pub fn admitted_by(u: &CharacteristicMatrix, l0: ScaleParameter, seed: Vec2) -> Self {
        let uv = u.matrix().apply(&seed);
        let half = C64::new(0.5, 0.0);
        let phi = seed.add(&uv).scale(half);
        let denom = C64::new(0.0, 2.0 * l0.value());
        let dphi = seed.sub(&uv).scale(C64::new(1.0, 0.0) / denom);
        BoundaryVectors { phi, dphi }
    }

    /// Residual of (U − I)Φ + iL0(U + I)Φ′ for this data.
    pub fn residual(&self, u: &CharacteristicMatrix, l0: ScaleParameter) -> f64 {
        let m = u.matrix();
        let id = Mat2::identity();
        let first = m.sub(&id).apply(&self.phi);
        let second = m
            .add(&id)
            .apply(&self.dphi)
            .scale(C64::new(0.0, l0.value()));
        first.add(&second).max_abs()
    }
}

/// Membership report for the symmetry subfamilies of the U(2) family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SubfamilyFlags {
    /// σ1 U σ1 = U: left-right symmetric interactions (torus Ω_P).
    pub omega_p: bool,
    /// Uᵀ = U: time-reversal invariant interactions.
    pub omega_t: bool,
    /// σ1 Uᵀ σ1 = U: PT-invariant interactions.
    pub omega_pt: bool,
    /// det(U − I) = det(U + I) = 0: the scale-invariant sphere.
    pub omega_w: bool,
    /// σ3 U σ3 = U: separated interactions (perfect walls).
    pub omega_r: bool,
    /// σ2 U σ2 = U.
    pub omega_q: bool,
    /// U = e^{iθ} I: the self-dual circle, fixed by all three conjugations.
    pub omega_sd: bool,
    /// U = I (isolated scale-invariant point).
    pub is_identity: bool,
    /// U = −I (isolated scale-invariant point; the Witten point).
    pub is_minus_identity: bool,
    /// U = σ1: the free line.
    pub free_point: bool,
}

impl SubfamilyFlags {
    /// Scale invariance holds on the sphere and at the two isolated points.
    pub fn scale_invariant(&self) -> bool {
        self.omega_w || self.is_identity || self.is_minus_identity
    }
}

/// Unitary diagonalization U = V⁻¹ diag(e^{iμ+}, e^{iμ−}) V with
/// μ± = ξ ± ρ (mod 2π), ρ = arccos α_R.
///
/// In the eigenbasis the boundary condition decouples into two Robin-type
/// conditions with lengths L0·cot(μ±/2); everything spectral flows from
/// these two phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenphaseDecomposition {
    pub mu_plus: f64,
    pub mu_minus: f64,
    pub rho: f64,
    /// Change of basis with V·U·V⁻¹ diagonal; rows are conjugated eigenvectors.
    pub v: Mat2,
}

impl EigenphaseDecomposition {
    /// Eigenvector for e^{iμ+} (first column of V⁻¹ = V†).
    pub fn eigenvector_plus(&self) -> Vec2 {
        self.v.adjoint().column(0)
    }

    /// Eigenvector for e^{iμ−}.
    pub fn eigenvector_minus(&self) -> Vec2 {
        self.v.adjoint().column(1)
    }
}

impl CharacteristicMatrix {
    /// Validating constructor; folds ξ into [0, π) (absorbing the sign into
    /// α, β) and renormalizes small deviations of |α|² + |β|² from 1.
    pub fn new(xi: f64, alpha: C64, beta: C64) -> Result<Self> {
        if !xi.is_finite() || !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::invalid("non-finite characteristic parameters"));
        }
        let norm2 = alpha.norm_sqr() + beta.norm_sqr();
        let dev = (norm2 - 1.0).abs();
        if dev >= NORM_TOL {
            return Err(Error::NormViolation { deviation: dev });
        }
        let scale = norm2.sqrt();
        let mut alpha = alpha / scale;
        let mut beta = beta / scale;
        let mut xi = xi.rem_euclid(TAU);
        if xi >= PI {
            xi -= PI;
            alpha = -alpha;
            beta = -beta;
        }
        Ok(CharacteristicMatrix { xi, alpha, beta })
    }

    /// Canonicalize an arbitrary unitary 2×2 matrix into (ξ, α, β) form.
    pub fn from_matrix(m: &Mat2) -> Result<Self> {
        let defect = m.unitarity_defect();
        if defect >= NORM_TOL {
            return Err(Error::NormViolation { deviation: defect });
        }
        let det = m.det();
        let mut xi = 0.5 * det.arg();
        if xi < 0.0 {
            xi += PI;
        }
        let ph = C64::from_polar(1.0, -xi);
        let s = m.scale(ph);
        // s must now be in SU(2) form [[α, β], [−β*, α*]]
        let alpha = s.e[0][0];
        let beta = s.e[0][1];
        let check = (s.e[1][0] + beta.conj()).norm() + (s.e[1][1] - alpha.conj()).norm();
        if check >= NORM_TOL {
            return Err(Error::invalid(format!(
                "matrix is not in U(2) form (defect {check:.3e})"
            )));
        }
        CharacteristicMatrix::new(xi, alpha, beta)
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }
    pub fn alpha(&self) -> C64 {
        self.alpha
    }
    pub fn beta(&self) -> C64 {
        self.beta
    }

    /// The full matrix e^{iξ}[[α, β],[−β*, α*]].
    pub fn matrix(&self) -> Mat2 {
        let ph = C64::from_polar(1.0, self.xi);
        Mat2::new(self.alpha, self.beta, -self.beta.conj(), self.alpha.conj()).scale(ph)
    }

    pub fn identity() -> Self {
        CharacteristicMatrix {
            xi: 0.0,
            alpha: C64::new(1.0, 0.0),
            beta: C64::new(0.0, 0.0),
        }
    }

    pub fn minus_identity() -> Self {
        // −I = e^{i·0}·(−1)·I folded into ξ ∈ [0, π): ξ = 0, α = −1.
        CharacteristicMatrix {
            xi: 0.0,
            alpha: C64::new(-1.0, 0.0),
            beta: C64::new(0.0, 0.0),
        }
    }

    /// U = σ1: continuous φ and φ′, i.e. no interaction at all.
    pub fn free_point() -> Self {
        CharacteristicMatrix {
            xi: PI / 2.0,
            alpha: C64::new(0.0, 0.0),
            beta: C64::new(0.0, -1.0),
        }
    }

    /// Self-dual interaction U = e^{iθ} I.
    pub fn self_dual(theta: f64) -> Self {
        let m = Mat2::identity().scale(C64::from_polar(1.0, theta));
        CharacteristicMatrix::from_matrix(&m).expect("scalar unitary")
    }

    /// U = e^{i(ϑ₊ P⁺_i + ϑ₋ P⁻_i)} on the invariant torus of axis `i`.
    pub fn from_chiral_angles(axis: PauliAxis, theta_plus: f64, theta_minus: f64) -> Self {
        let i = axis.index();
        let p = Mat2::projector(i, 1.0).scale(C64::from_polar(1.0, theta_plus));
        let q = Mat2::projector(i, -1.0).scale(C64::from_polar(1.0, theta_minus));
        CharacteristicMatrix::from_matrix(&p.add(&q)).expect("chiral exponential is unitary")
    }

    /// Parity-invariant interaction with angles (θ₊, θ₋); axis-1 chiral form.
    pub fn from_parity_angles(theta_plus: f64, theta_minus: f64) -> Self {
        CharacteristicMatrix::from_chiral_angles(PauliAxis::One, theta_plus, theta_minus)
    }

    pub fn distance(&self, other: &CharacteristicMatrix) -> f64 {
        self.matrix().distance(&other.matrix())
    }

    /// Local connection form Λ of this interaction.
    ///
    /// Fails with [`Error::SeparatedInteraction`] for β = 0, which the local
    /// description cannot reach.
    pub fn to_transfer(&self, _l0: ScaleParameter) -> Result<TransferMatrix> {
        let babs = self.beta.norm();
        if babs < ALGEBRA_TOL {
            return Err(Error::SeparatedInteraction);
        }
        // Λ = i/β* · [[sinξ − α_I, −(cosξ + α_R)], [cosξ − α_R, sinξ + α_I]]
        // in units of L0; i/β* = e^{i(π/2 + arg β)} / |β|.
        let phase = PI / 2.0 + self.beta.arg();
        let (s, c) = self.xi.sin_cos();
        let ar = self.alpha.re;
        let ai = self.alpha.im;
        TransferMatrix::new(
            phase,
            (s - ai) / babs,
            -(c + ar) / babs,
            (c - ar) / babs,
            (s + ai) / babs,
        )
    }

    /// Recover the global description from a transfer matrix: feed basis
    /// boundary data through Λ and read off the unitary relating
    /// Φ + iL0Φ′ to Φ − iL0Φ′. Total on the whole Λ group.
    pub fn from_transfer(lam: &TransferMatrix, l0: ScaleParameter) -> Self {
        let l = l0.value();
        // physical connection matrix at this scale: [[a, b·L0], [c/L0, d]]
        let ph = C64::from_polar(1.0, lam.chi());
        let m = Mat2::from_reals(lam.a(), lam.b() * l, lam.c() / l, lam.d()).scale(ph);
        let il = C64::new(0.0, l);
        // seed (φ(0−), φ′(0−)) = e1, e2
        let mut plus_cols = [Vec2::zero(), Vec2::zero()];
        let mut minus_cols = [Vec2::zero(), Vec2::zero()];
        for (j, seed) in [
            Vec2::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0)),
            Vec2::new(C64::new(0.0, 0.0), C64::new(1.0, 0.0)),
        ]
        .iter()
        .enumerate()
        {
            let out = m.apply(seed); // (φ(0+), φ′(0+))
            let phi = Vec2::new(out.x, seed.x);
            let dphi = Vec2::new(out.y, -seed.y);
            plus_cols[j] = phi.add(&dphi.scale(il));
            minus_cols[j] = phi.sub(&dphi.scale(il));
        }
        let mp = Mat2::new(plus_cols[0].x, plus_cols[1].x, plus_cols[0].y, plus_cols[1].y);
        let mm = Mat2::new(
            minus_cols[0].x,
            minus_cols[1].x,
            minus_cols[0].y,
            minus_cols[1].y,
        );
        let u = mm.mul(&mp.inverse());
        CharacteristicMatrix::from_matrix(&u)
            .expect("a unimodular transfer matrix always maps to a unitary")
    }

    /// Test all subfamily memberships through their defining identities.
    pub fn classify(&self) -> SubfamilyFlags {
        let m = self.matrix();
        let conj_dist = |i: usize| {
            let s = Mat2::pauli(i);
            s.mul(&m).mul(&s).distance(&m)
        };
        let id = Mat2::identity();
        let omega_sd = m.e[0][1].norm() < CLASSIFY_TOL
            && m.e[1][0].norm() < CLASSIFY_TOL
            && (m.e[0][0] - m.e[1][1]).norm() < CLASSIFY_TOL;
        SubfamilyFlags {
            omega_p: conj_dist(1) < CLASSIFY_TOL,
            omega_t: m.transpose().distance(&m) < CLASSIFY_TOL,
            omega_pt: {
                let s1 = Mat2::pauli(1);
                s1.mul(&m.transpose()).mul(&s1).distance(&m) < CLASSIFY_TOL
            },
            omega_w: m.sub(&id).det().norm() < CLASSIFY_TOL
                && m.add(&id).det().norm() < CLASSIFY_TOL,
            omega_r: conj_dist(3) < CLASSIFY_TOL,
            omega_q: conj_dist(2) < CLASSIFY_TOL,
            omega_sd,
            is_identity: m.distance(&id) < CLASSIFY_TOL,
            is_minus_identity: m.distance(&id.scale(C64::new(-1.0, 0.0))) < CLASSIFY_TOL,
            free_point: m.distance(&Mat2::pauli(1)) < CLASSIFY_TOL,
        }
    }

    /// Chiral angles (ϑ₊, ϑ₋) of U = e^{iϑ₊}P⁺_i + e^{iϑ₋}P⁻_i on the
    /// invariant torus of the given axis. Errors if U is not invariant under
    /// the axis conjugation.
    pub fn chiral_angles(&self, axis: PauliAxis) -> Result<(f64, f64)> {
        let i = axis.index();
        let m = self.matrix();
        let s = Mat2::pauli(i);
        let residual = s.mul(&m).mul(&s).distance(&m);
        if residual >= CLASSIFY_TOL {
            let required = match axis {
                PauliAxis::One => "omega_p (sigma1-invariant)",
                PauliAxis::Two => "omega_q (sigma2-invariant)",
                PauliAxis::Three => "omega_r (sigma3-invariant)",
            };
            return Err(Error::NotInSubfamily { required, residual });
        }
        // tr(U P±) = e^{iϑ±}
        let plus = m.mul(&Mat2::projector(i, 1.0)).trace();
        let minus = m.mul(&Mat2::projector(i, -1.0)).trace();
        Ok((wrap_2pi(plus.arg()), wrap_2pi(minus.arg())))
    }

    /// Parity-torus angles (θ₊, θ₋); shorthand for axis 1.
    pub fn parity_angles(&self) -> Result<(f64, f64)> {
        self.chiral_angles(PauliAxis::One)
    }

    /// Factor U = U_W · U_R into a scale-invariant part and a wall part.
    ///
    /// The sheet with α_I ≥ 0 is selected, so the factorization is unique up
    /// to the ρ convention at α′ = 0, where ρ = 0 is chosen. The inputs ±I
    /// are returned as (±I, I).
    pub fn decompose_wr(&self) -> (CharacteristicMatrix, CharacteristicMatrix) {
        let m = self.matrix();
        let id = Mat2::identity();
        if m.distance(&id) < 1e-13 {
            return (
                CharacteristicMatrix::identity(),
                CharacteristicMatrix::identity(),
            );
        }
        if m.distance(&id.scale(C64::new(-1.0, 0.0))) < 1e-13 {
            return (
                CharacteristicMatrix::minus_identity(),
                CharacteristicMatrix::identity(),
            );
        }
        let alpha_abs = self.alpha.norm();
        let rho = if alpha_abs < 1e-14 {
            0.0
        } else {
            self.alpha.arg() - PI / 2.0
        };
        let beta_w = self.beta * C64::from_polar(1.0, rho);
        // U_W = i[[i α_I, β_w], [−β_w*, −i α_I]] with α_I = |α| ≥ 0
        let i = C64::new(0.0, 1.0);
        let w = Mat2::new(
            i * alpha_abs,
            beta_w,
            -beta_w.conj(),
            -i * alpha_abs,
        )
        .scale(i);
        let u_w = CharacteristicMatrix::from_matrix(&w).expect("wall-free factor is unitary");
        // U_R = U_W† U exactly reconstructs the product.
        let r = w.adjoint().mul(&self.matrix());
        let u_r = CharacteristicMatrix::from_matrix(&r).expect("wall factor is unitary");
        (u_w, u_r)
    }

    /// Diagonalize U; eigenphases are μ± = ξ ± ρ (mod 2π) with ρ = arccos α_R,
    /// ordered so that μ₊ belongs to e^{i(ξ+ρ)}. For a degenerate U (α_R = ±1)
    /// the basis is fixed to V = I.
    pub fn eigenphases(&self) -> EigenphaseDecomposition {
        let ar = self.alpha.re.clamp(-1.0, 1.0);
        let rho = ar.acos();
        let s = (1.0 - ar * ar).max(0.0).sqrt();
        let mu_plus = wrap_2pi(self.xi + rho);
        let mu_minus = wrap_2pi(self.xi - rho);
        let v = if s < 1e-13 {
            Mat2::identity()
        } else {
            let ai = self.alpha.im;
            // two algebraically equivalent eigenvector forms; pick the
            // better-conditioned one
            let v_plus = if ai >= 0.0 {
                Vec2::new(C64::new(0.0, -(ai + s)), self.beta.conj())
            } else {
                Vec2::new(self.beta, C64::new(0.0, s - ai))
            }
            .normalized();
            let v_minus = Vec2::new(-v_plus.y.conj(), v_plus.x.conj());
            // rows of V are the conjugated eigenvectors
            Mat2::new(
                v_plus.x.conj(),
                v_plus.y.conj(),
                v_minus.x.conj(),
                v_minus.y.conj(),
            )
        };
        EigenphaseDecomposition {
            mu_plus,
            mu_minus,
            rho,
            v,
        }
    }

    /// Express the same physics against a new reference length.
    ///
    /// The eigenphases move so that L0·cot(μ±/2) stays fixed (with μ = 0, π
    /// as fixed points); the eigenbasis is untouched. Bound-state momenta,
    /// scattering data and box spectra computed from (U′, L0_new) coincide
    /// with those from (U, L0).
    pub fn rescale_l0(&self, l0: ScaleParameter, l0_new: ScaleParameter) -> CharacteristicMatrix {
        let dec = self.eigenphases();
        let remap = |mu: f64| -> f64 {
            let half = 0.5 * mu;
            wrap_2pi(2.0 * f64::atan2(l0_new.value() * half.sin(), l0.value() * half.cos()))
        };
        let d = Mat2::new(
            C64::from_polar(1.0, remap(dec.mu_plus)),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::from_polar(1.0, remap(dec.mu_minus)),
        );
        let m = dec.v.adjoint().mul(&d).mul(&dec.v);
        CharacteristicMatrix::from_matrix(&m).expect("rescaled matrix stays unitary")
    }
}
