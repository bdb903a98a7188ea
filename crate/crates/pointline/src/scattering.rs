//! Reflection/transmission amplitudes, bound states and filter profiles on
//! the line.
//!
//! Two independent derivations of the amplitudes are kept side by side:
//!
//! * the *global* route evaluates the closed forms in (ξ, α, β) with
//!   η = e^{iξ} and q = (1 − kL0)/(1 + kL0),
//! * the *local* route contracts the transfer matrix with the bi-orthogonal
//!   plane-wave eigenvectors u±, v± of the free propagation matrix.
//!
//! They agree wherever both are defined (β ≠ 0); the global route also covers
//! the separated interactions. Bound states live at the unitary eigenvalues
//! of U in the upper half of the unit circle: each eigenphase μ ∈ (0, π)
//! binds one state at κ = tan(μ/2)/L0, so there are at most two.

use crate::error::{Error, Result};
use crate::mat2::C64;
use crate::params::{CharacteristicMatrix, ScaleParameter, TransferMatrix};
use std::f64::consts::PI;

/// Degenerate-denominator threshold for the scattering formulas.
const DENOM_TOL: f64 = 1e-14;

/// The four amplitudes at a fixed positive momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringAmplitudes {
    pub r_l: C64,
    pub t_l: C64,
    pub r_r: C64,
    pub t_r: C64,
    /// Momentum the amplitudes were evaluated at, in units of 1/L0.
    pub k: f64,
}

impl ScatteringAmplitudes {
    /// max of │|r|² + |t|² − 1│ over the two incidence sides.
    pub fn unitarity_residual(&self) -> f64 {
        let left = (self.r_l.norm_sqr() + self.t_l.norm_sqr() - 1.0).abs();
        let right = (self.r_r.norm_sqr() + self.t_r.norm_sqr() - 1.0).abs();
        left.max(right)
    }

    /// │r_l* t_r + t_l* r_r│, the off-diagonal unitarity condition.
    pub fn cross_residual(&self) -> f64 {
        (self.r_l.conj() * self.t_r + self.t_l.conj() * self.r_r).norm()
    }

    /// Transmission probability |t_r|² (= |t_l|²).
    pub fn transmission(&self) -> f64 {
        self.t_r.norm_sqr()
    }
}

/// One negative-energy bound state (ħ²/2m = 1 units, E = −κ²).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    /// Decay momentum, κ > 0 (units 1/length).
    pub kappa: f64,
    /// E = −κ².
    pub energy: f64,
    /// 1 generically, 2 on the self-dual circle.
    pub multiplicity: u8,
    /// The eigenphase μ ∈ (0, π) of U the state descends from.
    pub eigenphase: f64,
}

/// Bound-state census: proper bound states plus the number of zero-energy
/// threshold modes (eigenphases at μ = 0), which are not normalizable on the
/// line and therefore kept out of `states`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BoundStateReport {
    pub states: Vec<BoundState>,
    pub zero_energy_modes: u8,
}

impl BoundStateReport {
    /// Total bound-state count including multiplicities.
    pub fn count(&self) -> usize {
        self.states.iter().map(|s| s.multiplicity as usize).sum()
    }
}

/// Transmission behaviour over a momentum grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterClass {
    HighPass,
    LowPass,
    BandPass,
    AllPass,
    AllBlock,
    Other,
}

impl FilterClass {
    pub fn label(&self) -> &'static str {
        match self {
            FilterClass::HighPass => "high-pass",
            FilterClass::LowPass => "low-pass",
            FilterClass::BandPass => "band-pass",
            FilterClass::AllPass => "all-pass",
            FilterClass::AllBlock => "all-block",
            FilterClass::Other => "other",
        }
    }
}

/// Sampled |t|² profile with its qualitative classification.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterProfile {
    /// (k, |t|²) pairs on the requested grid.
    pub samples: Vec<(f64, f64)>,
    pub classification: FilterClass,
}

/// Amplitudes from the raw q-variable. The q⁻¹ occurrences are cleared
/// beforehand (multiply numerators and denominator by q), so q = 0, i.e.
/// kL0 = 1, is a regular point.
fn amplitudes_from_q(u: &CharacteristicMatrix, q: f64, k: f64) -> Result<ScatteringAmplitudes> {
    let eta = C64::from_polar(1.0, u.xi());
    let alpha = u.alpha();
    let beta = u.beta();
    let q2 = q * q;
    let two_ar = alpha.re * 2.0;
    let two_cos_xi = 2.0 * u.xi().cos();
    // denominator: q·(ηq + η*q⁻¹ − (α + α*)) = ηq² + η* − (α + α*)q
    let denom = eta * q2 + eta.conj() - C64::new(two_ar * q, 0.0);
    if denom.norm() < DENOM_TOL * q.abs() {
        return Err(Error::DegenerateDenominator { k });
    }
    let r_l = (alpha * q2 + alpha.conj() - C64::new(two_cos_xi * q, 0.0)) / denom;
    let r_r = (alpha.conj() * q2 + alpha - C64::new(two_cos_xi * q, 0.0)) / denom;
    let t_l = -beta * (q2 - 1.0) / denom;
    let t_r = beta.conj() * (q2 - 1.0) / denom;
    Ok(ScatteringAmplitudes { r_l, t_l, r_r, t_r, k })
}

/// Scattering amplitudes from the global description, valid on all of U(2).
pub fn amplitudes_global(
    u: &CharacteristicMatrix,
    l0: ScaleParameter,
    k: f64,
) -> Result<ScatteringAmplitudes> {
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::invalid(format!("momentum must be positive, got {k}")));
    }
    let s = k * l0.value();
    let q = (1.0 - s) / (1.0 + s);
    amplitudes_from_q(u, q, s)
}

/// Scattering amplitudes from the transfer matrix.
///
/// `k` is the momentum in units of 1/L0 (the entries of Λ are stored
/// against that scale, so only the product kL0 enters).
pub fn amplitudes_transfer(lam: &TransferMatrix, k: f64) -> Result<ScatteringAmplitudes> {
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::invalid(format!("momentum must be positive, got {k}")));
    }
    let m = lam.matrix();
    let half = C64::new(0.5, 0.0);
    let ihalf = C64::new(0.0, 0.5);
    let diag_sum = (m.e[0][0] + m.e[1][1]) * half;
    let diag_diff = (m.e[0][0] - m.e[1][1]) * half;
    let off_minus = (m.e[0][1] * k - m.e[1][0] / k) * ihalf;
    let off_plus = (m.e[0][1] * k + m.e[1][0] / k) * ihalf;
    let a_minus = diag_sum - off_minus; // v₋† Λ u₋
    let b = diag_diff - off_plus; // v₊† Λ u₋
    let c = diag_diff + off_plus; // v₋† Λ u₊
    let a_plus = diag_sum + off_minus; // v₊† Λ u₊
    if a_minus.norm() < DENOM_TOL {
        return Err(Error::DegenerateDenominator { k });
    }
    let t_r = C64::new(1.0, 0.0) / a_minus;
    let r_r = b / a_minus;
    let r_l = -c / a_minus;
    let t_l = (a_plus * a_minus - b * c) / a_minus;
    Ok(ScatteringAmplitudes { r_l, t_l, r_r, t_r, k })
}

/// Scattering denominator continued to complex momentum, for locating
/// bound-state poles of t on the positive imaginary axis.
pub fn global_denominator_complex(
    u: &CharacteristicMatrix,
    l0: ScaleParameter,
    k: C64,
) -> C64 {
    let s = k * l0.value();
    let one = C64::new(1.0, 0.0);
    let q = (one - s) / (one + s);
    let eta = C64::from_polar(1.0, u.xi());
    eta * q * q + eta.conj() - C64::new(2.0 * u.alpha().re, 0.0) * q
}

/// Negative-energy bound states of (U, L0).
///
/// One state per eigenphase strictly inside (0, π), κ = tan(μ/2)/L0;
/// a doubly degenerate pair when both eigenphases coincide there.
/// Eigenphases at μ = 0 are zero-energy threshold modes and are only counted.
pub fn bound_states(u: &CharacteristicMatrix, l0: ScaleParameter) -> BoundStateReport {
    const PHASE_TOL: f64 = 1e-12;
    let dec = u.eigenphases();
    let mut report = BoundStateReport::default();
    let mut phases: Vec<f64> = Vec::new();
    for mu in [dec.mu_plus, dec.mu_minus] {
        let dist_zero = mu.min(2.0 * PI - mu);
        if dist_zero < PHASE_TOL {
            report.zero_energy_modes += 1;
        } else if mu > 0.0 && mu < PI - PHASE_TOL {
            phases.push(mu);
        } else if (mu - PI).abs() <= PHASE_TOL {
            // μ = π means a hard wall in that channel: κ → ∞, no state
        }
    }
    phases.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut idx = 0;
    while idx < phases.len() {
        let mu = phases[idx];
        let degenerate = idx + 1 < phases.len() && (phases[idx + 1] - mu).abs() < PHASE_TOL;
        let multiplicity = if degenerate { 2 } else { 1 };
        let kappa = (mu / 2.0).tan() / l0.value();
        report.states.push(BoundState {
            kappa,
            energy: -kappa * kappa,
            multiplicity,
            eigenphase: mu,
        });
        idx += multiplicity as usize;
    }
    // strongest binding first
    report
        .states
        .sort_by(|a, b| b.kappa.partial_cmp(&a.kappa).unwrap());
    report
}

/// Sample |t_r|² on a strictly increasing momentum grid and classify the
/// transmission behaviour.
///
/// The thresholds are artifact conventions: ends below 0.1 / above 0.9
/// decide high- vs low-pass, an interior maximum 0.2 above both ends is a
/// band-pass, profiles uniformly above 0.99 or below 0.01 are all-pass /
/// all-block, anything else is reported as other.
pub fn filter_profile(
    u: &CharacteristicMatrix,
    l0: ScaleParameter,
    k_grid: &[f64],
) -> Result<FilterProfile> {
    if k_grid.is_empty() {
        return Err(Error::invalid("empty momentum grid"));
    }
    if k_grid[0] <= 0.0 || k_grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::invalid(
            "momentum grid must be strictly increasing and positive",
        ));
    }
    let mut samples = Vec::with_capacity(k_grid.len());
    for &k in k_grid {
        let amp = amplitudes_global(u, l0, k)?;
        samples.push((k, amp.transmission()));
    }
    let classification = classify_profile(&samples);
    Ok(FilterProfile {
        samples,
        classification,
    })
}

fn classify_profile(samples: &[(f64, f64)]) -> FilterClass {
    let first = samples.first().unwrap().1;
    let last = samples.last().unwrap().1;
    let all_pass = samples.iter().all(|&(_, t)| t >= 0.99);
    let all_block = samples.iter().all(|&(_, t)| t <= 0.01);
    if all_pass {
        return FilterClass::AllPass;
    }
    if all_block {
        return FilterClass::AllBlock;
    }
    if first < 0.1 && last > 0.9 {
        return FilterClass::HighPass;
    }
    if first > 0.9 && last < 0.1 {
        return FilterClass::LowPass;
    }
    let interior_max = samples[1..samples.len().saturating_sub(1)]
        .iter()
        .map(|&(_, t)| t)
        .fold(f64::NEG_INFINITY, f64::max);
    if interior_max >= first + 0.2 && interior_max >= last + 0.2 {
        return FilterClass::BandPass;
    }
    FilterClass::Other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::PauliAxis;

    fn l0(v: f64) -> ScaleParameter {
        ScaleParameter::new(v).unwrap()
    }

    #[test]
    fn free_point_transmits_perfectly() {
        let f = CharacteristicMatrix::free_point();
        for k in [0.1, 1.0, 5.3] {
            let a = amplitudes_global(&f, l0(1.0), k).unwrap();
            assert!(a.r_l.norm() < 1e-14);
            assert!((a.t_l - C64::new(1.0, 0.0)).norm() < 1e-14);
            assert!(a.unitarity_residual() < 1e-14);
        }
    }

    #[test]
    fn scale_invariant_point_is_momentum_independent() {
        // α_I = 0.6, β = 0.8i on the sphere: r_l = 0.6, t_l = −0.8
        let u = CharacteristicMatrix::new(
            PI / 2.0,
            C64::new(0.0, 0.6),
            C64::new(0.0, 0.8),
        )
        .unwrap();
        for k in [0.2, 1.0, 9.0] {
            let a = amplitudes_global(&u, l0(1.0), k).unwrap();
            assert!((a.r_l - C64::new(0.6, 0.0)).norm() < 1e-13);
            assert!((a.t_l - C64::new(-0.8, 0.0)).norm() < 1e-13);
            // r_r = −α_I, t_r = −iβ*
            assert!((a.r_r - C64::new(-0.6, 0.0)).norm() < 1e-13);
            assert!((a.t_r - C64::new(-0.8, 0.0)).norm() < 1e-13);
        }
    }

    #[test]
    fn separated_interaction_reflects_completely() {
        // diagonal U with μ− picked so L− = L0·cot(μ−/2)
        let xi = 1.1f64;
        let rho = 0.4f64;
        let u = CharacteristicMatrix::new(xi, C64::from_polar(1.0, rho), C64::new(0.0, 0.0))
            .unwrap();
        let mu_minus = xi - rho;
        let scale = l0(1.0);
        let l_minus = 1.0 / (mu_minus / 2.0).tan();
        for k in [0.3, 1.0, 2.2] {
            let a = amplitudes_global(&u, scale, k).unwrap();
            assert!(a.t_l.norm() < 1e-14 && a.t_r.norm() < 1e-14);
            let ikl = C64::new(0.0, k * l_minus);
            let expected = -(C64::new(1.0, 0.0) - ikl) / (C64::new(1.0, 0.0) + ikl);
            assert!((a.r_l - expected).norm() < 1e-12);
            assert!(a.unitarity_residual() < 1e-14);
        }
    }

    #[test]
    fn q_zero_point_is_regular() {
        // kL0 = 1 gives q = 0; the combined form evaluates directly
        let u = CharacteristicMatrix::from_parity_angles(1.2, 2.8);
        let a = amplitudes_global(&u, l0(1.0), 1.0).unwrap();
        assert!(a.unitarity_residual() < 1e-13);
        assert!(a.cross_residual() < 1e-13);
    }

    #[test]
    fn transfer_route_delta_filter_values() {
        // δ with g+ = 1 at kL0 = 1: |t|² = 1/2
        let a = amplitudes_transfer(&TransferMatrix::delta(1.0), 1.0).unwrap();
        assert!((a.transmission() - 0.5).abs() < 1e-14);
        // ε with g− = 1 at kL0 = 1: |t|² = 1/2
        let a = amplitudes_transfer(&TransferMatrix::epsilon(1.0), 1.0).unwrap();
        assert!((a.transmission() - 0.5).abs() < 1e-14);
        // free transfer
        let a = amplitudes_transfer(&TransferMatrix::identity(), 0.7).unwrap();
        assert!(a.r_r.norm() < 1e-14 && (a.t_r - C64::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn global_and_transfer_routes_agree() {
        let samples = [
            CharacteristicMatrix::from_parity_angles(0.7, 2.0),
            CharacteristicMatrix::from_chiral_angles(PauliAxis::Two, 1.0, 4.0),
            CharacteristicMatrix::new(
                0.9,
                C64::new(0.2, 0.4),
                C64::new(-0.5, (1.0f64 - 0.04 - 0.16 - 0.25).sqrt()),
            )
            .unwrap(),
        ];
        let scale = l0(0.8);
        for u in samples {
            let lam = u.to_transfer(scale).unwrap();
            for k in [0.25, 1.0, 3.0] {
                let g = amplitudes_global(&u, scale, k).unwrap();
                let t = amplitudes_transfer(&lam, k * scale.value()).unwrap();
                assert!((g.r_l - t.r_l).norm() < 1e-12);
                assert!((g.t_l - t.t_l).norm() < 1e-12);
                assert!((g.r_r - t.r_r).norm() < 1e-12);
                assert!((g.t_r - t.t_r).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn momentum_reversal_identity() {
        // q → q⁻¹ conjugates the reflections and swaps-conjugates the
        // transmissions
        let u = CharacteristicMatrix::new(
            0.6,
            C64::new(0.1, 0.5),
            C64::new(0.7, (1.0f64 - 0.01 - 0.25 - 0.49).sqrt()),
        )
        .unwrap();
        let q = 0.37;
        let a = amplitudes_from_q(&u, q, 1.0).unwrap();
        let b = amplitudes_from_q(&u, 1.0 / q, 1.0).unwrap();
        assert!((b.r_l - a.r_l.conj()).norm() < 1e-12);
        assert!((b.r_r - a.r_r.conj()).norm() < 1e-12);
        assert!((b.t_l - a.t_r.conj()).norm() < 1e-12);
        assert!((b.t_r - a.t_l.conj()).norm() < 1e-12);
    }

    #[test]
    fn parity_and_q_invariant_amplitude_symmetries() {
        let up = CharacteristicMatrix::from_parity_angles(1.0, 2.5);
        let a = amplitudes_global(&up, l0(1.0), 0.9).unwrap();
        assert!((a.r_l - a.r_r).norm() < 1e-13);
        assert!((a.t_l - a.t_r).norm() < 1e-13);

        let uq = CharacteristicMatrix::from_chiral_angles(PauliAxis::Two, 1.0, 2.5);
        let a = amplitudes_global(&uq, l0(1.0), 0.9).unwrap();
        assert!((a.r_l - a.r_r).norm() < 1e-13);
        assert!((a.t_l + a.t_r).norm() < 1e-13);
    }

    #[test]
    fn bound_state_examples() {
        // self-dual θ = π/2: one doubly degenerate state at κ = 1
        let report = bound_states(&CharacteristicMatrix::self_dual(PI / 2.0), l0(1.0));
        assert_eq!(report.states.len(), 1);
        assert_eq!(report.states[0].multiplicity, 2);
        assert!((report.states[0].kappa - 1.0).abs() < 1e-12);
        assert!((report.states[0].energy + 1.0).abs() < 1e-12);

        // ξ = π/2, ρ = π/4: κ = tan(3π/8), tan(π/8)
        let ar = (PI / 4.0).cos();
        let u = CharacteristicMatrix::new(
            PI / 2.0,
            C64::new(ar, 0.0),
            C64::new((1.0 - ar * ar).sqrt(), 0.0),
        )
        .unwrap();
        let report = bound_states(&u, l0(1.0));
        assert_eq!(report.states.len(), 2);
        assert!((report.states[0].kappa - (3.0 * PI / 8.0).tan()).abs() < 1e-12);
        assert!((report.states[1].kappa - (PI / 8.0).tan()).abs() < 1e-12);

        // scale-invariant sphere points bind nothing
        let w = CharacteristicMatrix::new(PI / 2.0, C64::new(0.0, 0.6), C64::new(0.8, 0.0))
            .unwrap();
        let report = bound_states(&w, l0(1.0));
        assert!(report.states.is_empty());
        assert_eq!(report.zero_energy_modes, 1);
    }

    #[test]
    fn zero_energy_threshold_at_identity() {
        let report = bound_states(&CharacteristicMatrix::identity(), l0(1.0));
        assert!(report.states.is_empty());
        assert_eq!(report.zero_energy_modes, 2);
    }

    #[test]
    fn filter_classes() {
        let grid: Vec<f64> = (0..200)
            .map(|i| 0.01 * (100.0f64 / 0.01).powf(i as f64 / 199.0))
            .collect();
        let scale = l0(1.0);

        let delta = CharacteristicMatrix::from_transfer(&TransferMatrix::delta(5.0), scale);
        let p = filter_profile(&delta, scale, &grid).unwrap();
        assert_eq!(p.classification, FilterClass::HighPass);
        assert!(p.samples.windows(2).all(|w| w[1].1 >= w[0].1));

        let eps = CharacteristicMatrix::from_transfer(&TransferMatrix::epsilon(5.0), scale);
        let p = filter_profile(&eps, scale, &grid).unwrap();
        assert_eq!(p.classification, FilterClass::LowPass);
        assert!(p.samples.windows(2).all(|w| w[1].1 <= w[0].1));

        let p = filter_profile(&CharacteristicMatrix::free_point(), scale, &grid).unwrap();
        assert_eq!(p.classification, FilterClass::AllPass);

        let wall = CharacteristicMatrix::new(0.4, C64::from_polar(1.0, 1.0), C64::new(0.0, 0.0))
            .unwrap();
        let p = filter_profile(&wall, scale, &grid).unwrap();
        assert_eq!(p.classification, FilterClass::AllBlock);
    }

    #[test]
    fn bound_states_appear_as_poles_of_t() {
        let u = CharacteristicMatrix::from_parity_angles(2.0, 1.0);
        let scale = l0(1.0);
        let report = bound_states(&u, scale);
        assert!(!report.states.is_empty());
        for st in &report.states {
            for eps in [1e-6, -1e-6] {
                let k = C64::new(0.0, st.kappa * (1.0 + eps));
                let d = global_denominator_complex(&u, scale, k);
                // |t| ~ |q² − 1| / |denominator| blows up near the pole
                let q = {
                    let s = k * scale.value();
                    (C64::new(1.0, 0.0) - s) / (C64::new(1.0, 0.0) + s)
                };
                let t = u.beta().conj() * (q * q - 1.0) / d;
                assert!(t.norm() > 1e4, "|t| = {} not a pole", t.norm());
            }
        }
    }
}
