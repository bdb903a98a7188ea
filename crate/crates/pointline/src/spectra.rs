//! Discrete spectra of a particle in a box with a point interaction at the
//! origin: transcendental eigenvalue equations, level tracking along
//! parameter paths, degeneracy detection and the supersymmetric point.
//!
//! In the eigenbasis of U the boundary condition at the origin decouples
//! into two Robin-type channels with phases μ± = ξ ± ρ. For hard walls
//! (Dirichlet or Neumann edges) the spectral determinant factorizes,
//!
//! ```text
//! F(k) = w₊ f(μ₊, l₊) f(μ₋, l₋) + w₋ f(μ₋, l₊) f(μ₊, l₋),
//! ```
//!
//! with w₊ + w₋ = 1 the eigenbasis weights; for a symmetric box (l₊ = l₋)
//! this collapses to the product f(μ₊) f(μ₋) for *every* U, so each level is
//! a root of one channel equation
//!
//! ```text
//! Dirichlet:  kL0 cot(kl) = tan(μ/2),    Neumann:  kL0 tan(kl) = −tan(μ/2),
//! ```
//!
//! solved branch by branch (each branch is monotone, so bisection with the
//! analytically known endpoint signs finds every root). Periodic and
//! antiperiodic rings use det[Λ ∓ M₀(−2l)] = 0, which does not factorize and
//! is scanned with a tangency-aware bracket search since ring levels can be
//! doubly degenerate.
//!
//! Negative-energy box levels come from the same equations continued to
//! k = iκ (cot → coth, tan → tanh); they are reported separately.

use crate::error::{Error, Result};
use crate::mat2::Vec2;
use crate::params::{CharacteristicMatrix, ScaleParameter, CLASSIFY_TOL};
use std::f64::consts::PI;

const TAU: f64 = 2.0 * PI;

/// Box edge conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxBoundary {
    Dirichlet,
    Neumann,
    Periodic,
    Antiperiodic,
}

impl BoxBoundary {
    pub fn label(&self) -> &'static str {
        match self {
            BoxBoundary::Dirichlet => "dirichlet",
            BoxBoundary::Neumann => "neumann",
            BoxBoundary::Periodic => "periodic",
            BoxBoundary::Antiperiodic => "antiperiodic",
        }
    }
}

/// Parity sector of a level on the left-right symmetric torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sector {
    Symmetric,
    Antisymmetric,
}

impl Sector {
    pub fn label(&self) -> &'static str {
        match self {
            Sector::Symmetric => "symmetric",
            Sector::Antisymmetric => "antisymmetric",
        }
    }
}

/// Box geometry and solver settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxConfig {
    pub boundary: BoxBoundary,
    pub l_plus: f64,
    pub l_minus: f64,
    pub l0: ScaleParameter,
    /// Roots are reported on (0, k_max].
    pub k_max: f64,
    /// Residual bound for accepted roots (also their merge tolerance).
    pub root_tol: f64,
}

impl BoxConfig {
    pub fn new(
        boundary: BoxBoundary,
        l_plus: f64,
        l_minus: f64,
        l0: ScaleParameter,
        k_max: f64,
        root_tol: f64,
    ) -> Result<Self> {
        if !(l_plus.is_finite() && l_plus > 0.0 && l_minus.is_finite() && l_minus > 0.0) {
            return Err(Error::invalid("box half-lengths must be positive"));
        }
        if matches!(boundary, BoxBoundary::Periodic | BoxBoundary::Antiperiodic)
            && (l_plus - l_minus).abs() > 1e-15 * l_plus.max(l_minus)
        {
            return Err(Error::invalid(
                "periodic and antiperiodic boxes require l_plus = l_minus",
            ));
        }
        if !(k_max.is_finite() && k_max > 0.0) {
            return Err(Error::invalid("k_max must be positive"));
        }
        if !(root_tol > 0.0 && root_tol <= 1e-6) {
            return Err(Error::invalid("root_tol must lie in (0, 1e-6]"));
        }
        Ok(BoxConfig {
            boundary,
            l_plus,
            l_minus,
            l0,
            k_max,
            root_tol,
        })
    }

    /// Symmetric box of half-length `l` with the default root tolerance.
    pub fn symmetric(boundary: BoxBoundary, l: f64, l0: ScaleParameter, k_max: f64) -> Result<Self> {
        BoxConfig::new(boundary, l, l, l0, k_max, 1e-12)
    }

    pub fn is_symmetric(&self) -> bool {
        (self.l_plus - self.l_minus).abs() <= 1e-15 * self.l_plus.max(self.l_minus)
    }
}

/// One discrete level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub k: f64,
    pub multiplicity: u8,
    pub sector: Option<Sector>,
}

/// Ordered spectrum in (0, k_max] plus the negative-energy continuation.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    /// Strictly increasing in k.
    pub levels: Vec<Level>,
    /// Decay momenta κ of box levels with E = −κ² (k = iκ continuation).
    pub negative_levels: Vec<f64>,
    /// Neumann boxes: a k = 0 constant mode is admitted (U has eigenvalue 1).
    pub zero_mode: bool,
    /// The residual bound the roots satisfy.
    pub root_tol: f64,
}

impl SpectrumResult {
    /// Levels flattened with multiplicity, ascending.
    pub fn ks_with_multiplicity(&self) -> Vec<f64> {
        let mut out = Vec::new();
        for lv in &self.levels {
            for _ in 0..lv.multiplicity {
                out.push(lv.k);
            }
        }
        out
    }
}

/// Supersymmetry probe of the self-dual circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SusyReport {
    /// True exactly at U = −I, the (π, π) point.
    pub is_witten_point: bool,
    /// True when the boundary condition forces φ(0±) = 0 for every admitted
    /// state, which is what self-adjoint supercharges require.
    pub wavefunctions_vanish_at_origin: bool,
}

/// Check whether U is the Witten point: the only point interaction whose
/// boundary condition kills the wavefunction on both sides of the origin,
/// making the free supercharges self-adjoint.
pub fn susy_check(u: &CharacteristicMatrix) -> SusyReport {
    let flags = u.classify();
    let m = u.matrix();
    let plus_i = m.add(&crate::mat2::Mat2::identity()).max_abs();
    SusyReport {
        is_witten_point: flags.omega_sd && flags.is_minus_identity,
        wavefunctions_vanish_at_origin: plus_i < CLASSIFY_TOL,
    }
}

// ---------------------------------------------------------------------------
// channel equations
// ---------------------------------------------------------------------------

/// One Robin channel of the decoupled boundary condition.
#[derive(Debug, Clone, Copy)]
struct Channel {
    mu: f64,
    sector: Option<Sector>,
}

/// Sector of an eigenvector on the parity torus: (1, 1)/√2 is symmetric,
/// (1, −1)/√2 antisymmetric.
fn sector_of_eigenvector(v: &Vec2) -> Option<Sector> {
    let n2 = v.dot(v).re;
    if n2 <= 0.0 {
        return None;
    }
    let sym = (v.x + v.y).norm_sqr() / (2.0 * n2);
    if (sym - 1.0).abs() < 1e-9 {
        return Some(Sector::Symmetric);
    }
    if sym < 1e-9 {
        return Some(Sector::Antisymmetric);
    }
    None
}

fn channels(u: &CharacteristicMatrix) -> (Vec<Channel>, bool) {
    let dec = u.eigenphases();
    let gap = {
        let d = (dec.mu_plus - dec.mu_minus).rem_euclid(TAU);
        d.min(TAU - d)
    };
    let degenerate = gap < 1e-12;
    if degenerate {
        return (
            vec![Channel {
                mu: dec.mu_plus,
                sector: None,
            }],
            true,
        );
    }
    let on_parity_torus = u.classify().omega_p;
    let sec = |v: &Vec2| {
        if on_parity_torus {
            sector_of_eigenvector(v)
        } else {
            None
        }
    };
    (
        vec![
            Channel {
                mu: dec.mu_plus,
                sector: sec(&dec.eigenvector_plus()),
            },
            Channel {
                mu: dec.mu_minus,
                sector: sec(&dec.eigenvector_minus()),
            },
        ],
        false,
    )
}

/// Dirichlet channel function, k L0 cos(kl) cos(μ/2) − sin(kl) sin(μ/2);
/// division-free, so the sin(kl) = 0 family at μ = π needs no special pole
/// handling in evaluation.
fn dirichlet_f(mu: f64, l: f64, l0: f64, k: f64) -> f64 {
    let (s, c) = (k * l).sin_cos();
    k * l0 * c * (mu / 2.0).cos() - s * (mu / 2.0).sin()
}

/// Neumann channel function, k L0 sin(kl) cos(μ/2) + cos(kl) sin(μ/2).
fn neumann_f(mu: f64, l: f64, l0: f64, k: f64) -> f64 {
    let (s, c) = (k * l).sin_cos();
    k * l0 * s * (mu / 2.0).cos() + c * (mu / 2.0).sin()
}

/// Bisection on (a, b) given the signs at the (possibly singular) endpoints;
/// only interior points are ever evaluated.
fn bisect(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, mut fa_positive: bool) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if (fm > 0.0) == fa_positive {
            a = m;
            fa_positive = fm > 0.0;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// All roots of one Dirichlet channel on (0, k_max].
fn dirichlet_channel_roots(mu: f64, l: f64, l0: f64, k_max: f64) -> Vec<f64> {
    let half = mu / 2.0;
    let (sh, ch) = (half.sin(), half.cos());
    let mut roots = Vec::new();
    if ch.abs() < 1e-15 {
        // μ = π: the channel reduces to sin(kl) = 0
        let mut m = 1;
        loop {
            let k = m as f64 * PI / l;
            if k > k_max {
                break;
            }
            roots.push(k);
            m += 1;
        }
        return roots;
    }
    let f = |k: f64| dirichlet_f(mu, l, l0, k);
    // branch m spans ((m−1)π/l, mπ/l); endpoint signs are analytic:
    // f((m−1)π/l⁺) has sign (−1)^(m−1)·sign(cos μ/2) for m ≥ 2, and the
    // first branch starts with the sign of L0 cos(μ/2) − l sin(μ/2).
    let mut m = 1usize;
    loop {
        let lo = (m as f64 - 1.0) * PI / l;
        let hi_full = m as f64 * PI / l;
        if lo >= k_max {
            break;
        }
        let hi = hi_full.min(k_max);
        let lo_sign_positive = if m == 1 {
            let g0 = l0 * ch - l * sh;
            if g0 != 0.0 {
                g0 > 0.0
            } else {
                // root exactly at k = 0; the next order term decides
                -ch > 0.0
            }
        } else {
            (if m.is_multiple_of(2) { -ch } else { ch }) > 0.0
        };
        let hi_sign_positive = if hi_full <= k_max {
            (if m.is_multiple_of(2) { ch } else { -ch }) > 0.0
        } else {
            let fk = f(k_max);
            if fk == 0.0 {
                roots.push(k_max);
                break;
            }
            fk > 0.0
        };
        if lo_sign_positive != hi_sign_positive {
            roots.push(bisect(&f, lo, hi, lo_sign_positive));
        }
        if hi_full > k_max {
            break;
        }
        m += 1;
    }
    roots
}

/// All roots of one Neumann channel on (0, k_max], plus the k = 0 constant
/// mode flag (μ = 0 admits it).
fn neumann_channel_roots(mu: f64, l: f64, l0: f64, k_max: f64) -> (Vec<f64>, bool) {
    let half = mu / 2.0;
    let (sh, ch) = (half.sin(), half.cos());
    let mut roots = Vec::new();
    if sh.abs() < 1e-15 && ch > 0.0 {
        // μ = 0: Neumann at the origin too; k = mπ/l plus the constant mode
        let mut m = 1;
        loop {
            let k = m as f64 * PI / l;
            if k > k_max {
                break;
            }
            roots.push(k);
            m += 1;
        }
        return (roots, true);
    }
    if ch.abs() < 1e-15 {
        // μ = π: cos(kl) = 0
        let mut m = 1;
        loop {
            let k = (m as f64 - 0.5) * PI / l;
            if k > k_max {
                break;
            }
            roots.push(k);
            m += 1;
        }
        return (roots, false);
    }
    let f = |k: f64| neumann_f(mu, l, l0, k);
    // intervals between tan poles: (0, π/2l), then ((m−1/2)π/l, (m+1/2)π/l);
    // at the poles f = kL0(−1)^(m−1)·cos(μ/2), at k = 0⁺ it is sin(μ/2) ≥ 0.
    let mut m = 0usize; // interval index; interval 0 is (0, π/2l)
    loop {
        let lo = if m == 0 {
            0.0
        } else {
            (m as f64 - 0.5) * PI / l
        };
        let hi_full = (m as f64 + 0.5) * PI / l;
        if lo >= k_max {
            break;
        }
        let hi = hi_full.min(k_max);
        let lo_sign_positive = if m == 0 {
            sh > 0.0 // μ ∈ (0, 2π) here, sin(μ/2) > 0
        } else {
            (if m.is_multiple_of(2) { -ch } else { ch }) > 0.0
        };
        let hi_sign_positive = if hi_full <= k_max {
            (if m.is_multiple_of(2) { ch } else { -ch }) > 0.0
        } else {
            let fk = f(k_max);
            if fk == 0.0 {
                roots.push(k_max);
                break;
            }
            fk > 0.0
        };
        if lo_sign_positive != hi_sign_positive {
            roots.push(bisect(&f, lo, hi, lo_sign_positive));
        }
        if hi_full > k_max {
            break;
        }
        m += 1;
    }
    (roots, false)
}

/// Negative-energy continuation of one wall channel: at most one root of
/// κL0 coth(κl) = tan(μ/2) (Dirichlet) or κL0 tanh(κl) = −tan(μ/2) (Neumann)
/// on (0, κ_max]. Normalized by cosh to stay finite.
fn channel_kappa(boundary: BoxBoundary, mu: f64, l: f64, l0: f64, kappa_max: f64) -> Option<f64> {
    let half = mu / 2.0;
    let (sh, ch) = (half.sin(), half.cos());
    let f: Box<dyn Fn(f64) -> f64> = match boundary {
        BoxBoundary::Dirichlet => Box::new(move |k: f64| k * l0 * ch - (k * l).tanh() * sh),
        BoxBoundary::Neumann => Box::new(move |k: f64| k * l0 * (k * l).tanh() * ch + sh),
        _ => unreachable!("rings are handled by the scan path"),
    };
    let eps = 1e-12;
    let fa = f(eps);
    let fb = f(kappa_max);
    if fa == 0.0 || fb == 0.0 || (fa > 0.0) == (fb > 0.0) {
        return None;
    }
    Some(bisect(&f, eps, kappa_max, fa > 0.0))
}

// ---------------------------------------------------------------------------
// scanned equations (rings, asymmetric wall boxes)
// ---------------------------------------------------------------------------

/// Bracket scan with tangency detection: returns (root, multiplicity) pairs.
/// Local minima of |f| that dip below `tang_tol`·scale without a sign change
/// are taken as double roots.
fn scan_roots(
    f: &dyn Fn(f64) -> f64,
    k_min: f64,
    k_max: f64,
    step: f64,
    scale: &dyn Fn(f64) -> f64,
) -> Vec<(f64, u8)> {
    let n = ((k_max - k_min) / step).ceil() as usize + 1;
    let grid: Vec<f64> = (0..=n)
        .map(|i| k_min + (k_max - k_min) * i as f64 / n as f64)
        .collect();
    let mut vals: Vec<f64> = grid.iter().map(|&k| f(k)).collect();
    // the scaled equations vanish identically at k = 0; a zero at the left
    // edge is that limit, not a spectral root, so take the sign just inside
    if vals[0] == 0.0 {
        vals[0] = f(k_min + 1e-3 * step);
    }
    let mut out: Vec<(f64, u8)> = Vec::new();
    for i in 0..n {
        let (a, b) = (grid[i], grid[i + 1]);
        let (fa, fb) = (vals[i], vals[i + 1]);
        if fa == 0.0 {
            if i > 0 && vals[i - 1] != 0.0 {
                out.push((a, 1));
            }
            continue;
        }
        if fb == 0.0 {
            continue; // picked up as the left endpoint of the next cell
        }
        if (fa > 0.0) != (fb > 0.0) {
            out.push((bisect(f, a, b, fa > 0.0), 1));
        }
    }
    // tangency candidates: strict interior minima of |f| below threshold
    for i in 1..n {
        let prev = vals[i - 1].abs();
        let here = vals[i].abs();
        let next = vals[i + 1].abs();
        if here <= prev && here <= next && vals[i - 1].signum() == vals[i + 1].signum() {
            let curvature = (vals[i - 1] - 2.0 * vals[i] + vals[i + 1]).abs();
            if here > 0.6 * curvature {
                continue;
            }
            // refine the extremum: ternary search on |f| down to ~1e-7,
            // then parabola-vertex iterations on f itself (the vertex of a
            // near-quadratic is located far more accurately than the point
            // where |f| stops decreasing)
            let (mut a, mut b) = (grid[i - 1], grid[i + 1]);
            for _ in 0..60 {
                let m1 = a + (b - a) / 3.0;
                let m2 = b - (b - a) / 3.0;
                if f(m1).abs() < f(m2).abs() {
                    b = m2;
                } else {
                    a = m1;
                }
                if b - a < 1e-7 * b.abs().max(1.0) {
                    break;
                }
            }
            let mut k_star = 0.5 * (a + b);
            for h_exp in [4, 5, 6] {
                let h = k_star.abs().max(1.0) * 10f64.powi(-h_exp);
                let (fp, f0, fm) = (f(k_star + h), f(k_star), f(k_star - h));
                let denom = fp - 2.0 * f0 + fm;
                if denom.abs() < 1e-300 {
                    break;
                }
                let shift = -(fp - fm) * h / (2.0 * denom);
                if shift.is_finite() && shift.abs() < grid[i + 1] - grid[i - 1] {
                    k_star += shift;
                }
            }
            let f_star = f(k_star);
            let sc = scale(k_star).max(1e-300);
            if f_star.signum() != vals[i - 1].signum() && f_star != 0.0 {
                // a resolved close pair: two simple roots around k_star
                out.push((bisect(f, grid[i - 1], k_star, vals[i - 1] > 0.0), 1));
                out.push((bisect(f, k_star, grid[i + 1], f_star > 0.0), 1));
            } else if f_star.abs() <= 1e-10 * sc {
                out.push((k_star, 2));
            }
        }
    }
    out.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    // deduplicate: a double root found by both detectors
    let mut dedup: Vec<(f64, u8)> = Vec::new();
    for (k, m) in out {
        if let Some(last) = dedup.last_mut() {
            if (k - last.0).abs() < 1e-9 * k.max(1.0) {
                last.1 = last.1.max(m);
                continue;
            }
        }
        dedup.push((k, m));
    }
    dedup
}

/// Ring determinant det[Λ ∓ M₀(−2l)] in the parameter form
/// 2kL0 sinξ cos2kl + [(kL0)²(cosξ+α_R) + (cosξ−α_R)] sin2kl ± 2kL0 β_I,
/// continuous across β = 0.
fn ring_f(u: &CharacteristicMatrix, l: f64, l0: f64, periodic: bool, k: f64) -> f64 {
    let xi = u.xi();
    let ar = u.alpha().re;
    let bi = u.beta().im;
    let s = k * l0;
    let (s2, c2) = (2.0 * k * l).sin_cos();
    let sign = if periodic { 1.0 } else { -1.0 };
    2.0 * s * xi.sin() * c2 + (s * s * (xi.cos() + ar) + (xi.cos() - ar)) * s2
        + sign * 2.0 * s * bi
}

fn ring_scale(u: &CharacteristicMatrix, l0: f64, k: f64) -> f64 {
    let xi = u.xi();
    let ar = u.alpha().re;
    let s = k * l0;
    2.0 * s * xi.sin().abs() + (s * s * (xi.cos() + ar)).abs() + (xi.cos() - ar).abs() + 2.0 * s
}

/// Hyperbolic ring determinant (k = iκ), normalized by cosh(2κl).
fn ring_f_kappa(u: &CharacteristicMatrix, l: f64, l0: f64, periodic: bool, kappa: f64) -> f64 {
    let xi = u.xi();
    let ar = u.alpha().re;
    let bi = u.beta().im;
    let s = kappa * l0;
    let t = (2.0 * kappa * l).tanh();
    let sech = 1.0 / (2.0 * kappa * l).cosh();
    let sign = if periodic { 1.0 } else { -1.0 };
    2.0 * s * xi.sin() + (-s * s * (xi.cos() + ar) + (xi.cos() - ar)) * t + sign * 2.0 * s * bi * sech
}

/// General wall-box determinant for asymmetric boxes,
/// F = w₊ f(μ₊,l₊)f(μ₋,l₋) + w₋ f(μ₋,l₊)f(μ₊,l₋).
struct WallDeterminant {
    mu_plus: f64,
    mu_minus: f64,
    w_plus: f64,
    w_minus: f64,
    l_plus: f64,
    l_minus: f64,
    l0: f64,
    neumann: bool,
}

impl WallDeterminant {
    fn from(u: &CharacteristicMatrix, cfg: &BoxConfig) -> Self {
        let dec = u.eigenphases();
        let w_plus = dec.v.e[0][0].norm_sqr();
        let w_minus = dec.v.e[0][1].norm_sqr();
        WallDeterminant {
            mu_plus: dec.mu_plus,
            mu_minus: dec.mu_minus,
            w_plus,
            w_minus,
            l_plus: cfg.l_plus,
            l_minus: cfg.l_minus,
            l0: cfg.l0.value(),
            neumann: matches!(cfg.boundary, BoxBoundary::Neumann),
        }
    }

    fn eval(&self, k: f64) -> f64 {
        let f = |mu: f64, l: f64| {
            if self.neumann {
                neumann_f(mu, l, self.l0, k)
            } else {
                dirichlet_f(mu, l, self.l0, k)
            }
        };
        self.w_plus * f(self.mu_plus, self.l_plus) * f(self.mu_minus, self.l_minus)
            + self.w_minus * f(self.mu_minus, self.l_plus) * f(self.mu_plus, self.l_minus)
    }

    fn eval_kappa(&self, kappa: f64) -> f64 {
        // hyperbolic continuation normalized by cosh(κl±)
        let f = |mu: f64, l: f64| {
            let half = mu / 2.0;
            if self.neumann {
                kappa * self.l0 * (kappa * l).tanh() * half.cos() + half.sin()
            } else {
                kappa * self.l0 * half.cos() - (kappa * l).tanh() * half.sin()
            }
        };
        self.w_plus * f(self.mu_plus, self.l_plus) * f(self.mu_minus, self.l_minus)
            + self.w_minus * f(self.mu_minus, self.l_plus) * f(self.mu_plus, self.l_minus)
    }

    fn scale(&self, k: f64) -> f64 {
        let s = k * self.l0;
        (1.0 + s) * (1.0 + s)
    }
}

// ---------------------------------------------------------------------------
// spectrum assembly
// ---------------------------------------------------------------------------

fn merge_levels(mut raw: Vec<(f64, u8, Option<Sector>)>, tol: f64) -> Vec<Level> {
    raw.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut levels: Vec<Level> = Vec::new();
    for (k, mult, sector) in raw {
        if let Some(last) = levels.last_mut() {
            if (k - last.k).abs() <= tol.max(1e-12 * k) {
                last.multiplicity += mult;
                if last.sector != sector {
                    last.sector = None;
                }
                continue;
            }
        }
        levels.push(Level {
            k,
            multiplicity: mult,
            sector,
        });
    }
    levels
}

/// Discrete spectrum of the boxed interaction.
pub fn box_spectrum(u: &CharacteristicMatrix, cfg: &BoxConfig) -> Result<SpectrumResult> {
    let l0 = cfg.l0.value();
    let kappa_max = 50.0 / l0;
    let mut raw: Vec<(f64, u8, Option<Sector>)> = Vec::new();
    let mut negative: Vec<f64> = Vec::new();
    let mut zero_mode = false;

    match cfg.boundary {
        BoxBoundary::Dirichlet | BoxBoundary::Neumann if cfg.is_symmetric() => {
            let l = cfg.l_plus;
            let (chans, degenerate) = channels(u);
            let mult = if degenerate { 2 } else { 1 };
            for ch in &chans {
                match cfg.boundary {
                    BoxBoundary::Dirichlet => {
                        for k in dirichlet_channel_roots(ch.mu, l, l0, cfg.k_max) {
                            raw.push((k, mult, ch.sector));
                        }
                    }
                    BoxBoundary::Neumann => {
                        let (ks, zm) = neumann_channel_roots(ch.mu, l, l0, cfg.k_max);
                        zero_mode |= zm;
                        for k in ks {
                            raw.push((k, mult, ch.sector));
                        }
                    }
                    _ => unreachable!(),
                }
                if let Some(kappa) = channel_kappa(cfg.boundary, ch.mu, l, l0, kappa_max) {
                    for _ in 0..mult {
                        negative.push(kappa);
                    }
                }
            }
        }
        BoxBoundary::Dirichlet | BoxBoundary::Neumann => {
            // asymmetric box: scan the weighted determinant
            let det = WallDeterminant::from(u, cfg);
            if matches!(cfg.boundary, BoxBoundary::Neumann) {
                let dec = u.eigenphases();
                zero_mode = dec.mu_plus.min(TAU - dec.mu_plus) < 1e-12
                    || dec.mu_minus.min(TAU - dec.mu_minus) < 1e-12;
            }
            let step = PI / (20.0 * cfg.l_plus.max(cfg.l_minus));
            let f = |k: f64| det.eval(k);
            let sc = |k: f64| det.scale(k);
            let eps = (step * 1e-9).max(1e-12);
            let found = scan_roots(&f, eps, cfg.k_max, step, &sc);
            let recheck = scan_roots(&f, eps, cfg.k_max, step / 2.0, &sc);
            if found.len() != recheck.len() {
                return Err(Error::RootFindingIncomplete {
                    detail: format!(
                        "scan with step {:.3e} found {} roots, half step found {}",
                        step,
                        found.len(),
                        recheck.len()
                    ),
                });
            }
            for (k, m) in recheck {
                raw.push((k, m, None));
            }
            let fh = |kappa: f64| det.eval_kappa(kappa);
            for (kappa, m) in scan_roots(&fh, 1e-12, kappa_max, kappa_max / 4000.0, &|_| 1.0) {
                for _ in 0..m {
                    negative.push(kappa);
                }
            }
        }
        BoxBoundary::Periodic | BoxBoundary::Antiperiodic => {
            let l = cfg.l_plus;
            let periodic = matches!(cfg.boundary, BoxBoundary::Periodic);
            let step = PI / (40.0 * l);
            let f = |k: f64| ring_f(u, l, l0, periodic, k);
            let sc = |k: f64| ring_scale(u, l0, k);
            let eps = (step * 1e-9).max(1e-12);
            let found = scan_roots(&f, eps, cfg.k_max, step, &sc);
            let recheck = scan_roots(&f, eps, cfg.k_max, step / 2.0, &sc);
            if found.len() != recheck.len()
                || found
                    .iter()
                    .zip(recheck.iter())
                    .any(|(a, b)| (a.0 - b.0).abs() > 1e-8 * a.0.max(1.0))
            {
                return Err(Error::RootFindingIncomplete {
                    detail: "ring scan count changed under refinement".into(),
                });
            }
            for (k, m) in recheck {
                raw.push((k, m, None));
            }
            let fh = |kappa: f64| ring_f_kappa(u, l, l0, periodic, kappa);
            for (kappa, m) in scan_roots(&fh, 1e-12, kappa_max, kappa_max / 4000.0, &|_| 1.0) {
                for _ in 0..m {
                    negative.push(kappa);
                }
            }
        }
    }

    let levels = merge_levels(raw, 10.0 * cfg.root_tol);
    negative.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // residual validation on the defining channel/ring equation
    for lv in &levels {
        let residual = spectral_residual(u, cfg, lv.k);
        if residual > cfg.root_tol {
            return Err(Error::RootFindingIncomplete {
                detail: format!("root k = {} has residual {:.3e}", lv.k, residual),
            });
        }
    }

    Ok(SpectrumResult {
        levels,
        negative_levels: negative,
        zero_mode,
        root_tol: cfg.root_tol,
    })
}

/// Residual of the defining spectral equation at momentum k, normalized by
/// a slowly varying scale so roots can be validated against `root_tol`.
pub fn spectral_residual(u: &CharacteristicMatrix, cfg: &BoxConfig, k: f64) -> f64 {
    let l0 = cfg.l0.value();
    match cfg.boundary {
        BoxBoundary::Dirichlet | BoxBoundary::Neumann => {
            let det = WallDeterminant::from(u, cfg);
            if cfg.is_symmetric() {
                // distance to the nearest channel root: |f(μ)| for the best μ
                let f = |mu: f64| {
                    if det.neumann {
                        neumann_f(mu, cfg.l_plus, l0, k)
                    } else {
                        dirichlet_f(mu, cfg.l_plus, l0, k)
                    }
                };
                let r = f(det.mu_plus).abs().min(f(det.mu_minus).abs());
                r / (1.0 + k * l0)
            } else {
                det.eval(k).abs() / det.scale(k)
            }
        }
        BoxBoundary::Periodic | BoxBoundary::Antiperiodic => {
            let periodic = matches!(cfg.boundary, BoxBoundary::Periodic);
            ring_f(u, cfg.l_plus, l0, periodic, k).abs() / ring_scale(u, l0, k)
        }
    }
}

/// Residual of the hyperbolic (k = iκ) spectral equation at a reported
/// box-bound level.
pub fn negative_level_residual(u: &CharacteristicMatrix, cfg: &BoxConfig, kappa: f64) -> f64 {
    let l0 = cfg.l0.value();
    match cfg.boundary {
        BoxBoundary::Dirichlet | BoxBoundary::Neumann => {
            let det = WallDeterminant::from(u, cfg);
            if cfg.is_symmetric() {
                let f = |mu: f64| {
                    let half = mu / 2.0;
                    if det.neumann {
                        kappa * l0 * (kappa * cfg.l_plus).tanh() * half.cos() + half.sin()
                    } else {
                        kappa * l0 * half.cos() - (kappa * cfg.l_plus).tanh() * half.sin()
                    }
                };
                let r = f(det.mu_plus).abs().min(f(det.mu_minus).abs());
                r / (1.0 + kappa * l0)
            } else {
                det.eval_kappa(kappa).abs() / (1.0 + kappa * l0).powi(2)
            }
        }
        BoxBoundary::Periodic | BoxBoundary::Antiperiodic => {
            let periodic = matches!(cfg.boundary, BoxBoundary::Periodic);
            ring_f_kappa(u, cfg.l_plus, l0, periodic, kappa).abs()
                / (1.0 + (kappa * l0).powi(2))
        }
    }
}

/// First `n` distinct levels, growing k_max internally as needed.
pub fn first_levels(
    u: &CharacteristicMatrix,
    boundary: BoxBoundary,
    l: f64,
    l0: ScaleParameter,
    n: usize,
) -> Result<SpectrumResult> {
    let mut k_max = (n as f64 + 4.0) * PI / l;
    for _ in 0..8 {
        let cfg = BoxConfig::symmetric(boundary, l, l0, k_max)?;
        let mut spec = box_spectrum(u, &cfg)?;
        if spec.levels.len() >= n {
            spec.levels.truncate(n);
            return Ok(spec);
        }
        k_max *= 2.0;
    }
    Err(Error::RootFindingIncomplete {
        detail: format!("could not collect {n} levels"),
    })
}

/// Cluster levels within `tol` and report (k, multiplicity).
pub fn degeneracy_report(s: &SpectrumResult, tol: f64) -> Result<Vec<(f64, usize)>> {
    if tol < s.root_tol {
        return Err(Error::invalid(
            "degeneracy tolerance must be at least the root tolerance",
        ));
    }
    let mut out: Vec<(f64, usize)> = Vec::new();
    for lv in &s.levels {
        if let Some(last) = out.last_mut() {
            if (lv.k - last.0).abs() <= tol {
                last.1 += lv.multiplicity as usize;
                continue;
            }
        }
        out.push((lv.k, lv.multiplicity as usize));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// spectral flow
// ---------------------------------------------------------------------------

/// One tracked level along a parameter path.
#[derive(Debug, Clone)]
pub struct FlowTrack {
    pub sector: Option<Sector>,
    /// Rank of the starting level within its sector family (0-based).
    pub start_rank: usize,
    pub start_k: f64,
    /// Level position at each recorded step; `None` once the level has left
    /// the spectrum through k = 0.
    pub ks: Vec<Option<f64>>,
    /// Rank within the family at the final step, for surviving tracks.
    pub end_rank: Option<usize>,
}

/// Level tracking result along a parameter path.
#[derive(Debug, Clone)]
pub struct SpectralFlow {
    /// Path parameters of the recorded steps (0 ..= 1).
    pub ts: Vec<f64>,
    pub tracks: Vec<FlowTrack>,
    /// Whether the path returned to its starting matrix.
    pub closed: bool,
    /// For closed paths: the common downward index shift in each family.
    pub family_shifts: Vec<(Option<Sector>, i64)>,
}

impl SpectralFlow {
    /// The uniform per-family level shift of a closed path, if all families
    /// agree. Identity permutation returns Some(0).
    pub fn uniform_shift(&self) -> Option<i64> {
        if !self.closed || self.family_shifts.is_empty() {
            return None;
        }
        let first = self.family_shifts[0].1;
        if self.family_shifts.iter().all(|&(_, d)| d == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Closed-path permutation on the tracked levels, in start-order:
    /// entry j holds the start-order index of the level at which track j
    /// ends (families wrap cyclically through k = 0).
    pub fn permutation(&self) -> Option<Vec<usize>> {
        if !self.closed {
            return None;
        }
        let mut order: Vec<usize> = (0..self.tracks.len()).collect();
        order.sort_by(|&a, &b| {
            self.tracks[a]
                .start_k
                .partial_cmp(&self.tracks[b].start_k)
                .unwrap()
        });
        let mut perm = vec![0usize; self.tracks.len()];
        for (pos, &ti) in order.iter().enumerate() {
            let tr = &self.tracks[ti];
            // family members in start order; rank r sits at family[r]
            let family: Vec<usize> = order
                .iter()
                .copied()
                .filter(|&j| self.tracks[j].sector == tr.sector)
                .collect();
            let m = family.len() as i64;
            let d = self
                .family_shifts
                .iter()
                .find(|(s, _)| *s == tr.sector)
                .map(|&(_, d)| d)?;
            let end_rank = ((tr.start_rank as i64 - d).rem_euclid(m)) as usize;
            let target = family[end_rank];
            perm[pos] = order.iter().position(|&j| j == target).unwrap();
        }
        Some(perm)
    }
}

/// Parameter paths used by the anholonomy studies.
pub mod paths {
    use super::CharacteristicMatrix;
    use std::f64::consts::PI;

    /// Diagonal cycle through the free point: (θ₊, θ₋) = (2πt, 2πt + π).
    pub fn diagonal_through_free_point() -> impl Fn(f64) -> CharacteristicMatrix {
        |t: f64| CharacteristicMatrix::from_parity_angles(2.0 * PI * t, 2.0 * PI * t + PI)
    }

    /// Cycle along the self-dual circle: U = e^{i·2πt} I.
    pub fn self_dual_cycle() -> impl Fn(f64) -> CharacteristicMatrix {
        |t: f64| CharacteristicMatrix::self_dual(2.0 * PI * t)
    }

    /// θ₊ cycle at fixed θ₋ (the δ family for θ₋ = π).
    pub fn theta_plus_cycle(theta_minus: f64) -> impl Fn(f64) -> CharacteristicMatrix {
        move |t: f64| CharacteristicMatrix::from_parity_angles(2.0 * PI * t, theta_minus)
    }

    /// θ₋ cycle at fixed θ₊ (the ε family for θ₊ = 0). The cycle starts at
    /// θ₋ = π so that for θ₊ = 0 it begins at the free point rather than at
    /// the degenerate self-dual point (0, 0).
    pub fn theta_minus_cycle(theta_plus: f64) -> impl Fn(f64) -> CharacteristicMatrix {
        move |t: f64| CharacteristicMatrix::from_parity_angles(theta_plus, 2.0 * PI * t + PI)
    }

    /// Constant path.
    pub fn constant(u: CharacteristicMatrix) -> impl Fn(f64) -> CharacteristicMatrix {
        move |_t: f64| u
    }

    /// Traverse `path` forward then backward.
    pub fn there_and_back<F>(path: F) -> impl Fn(f64) -> CharacteristicMatrix
    where
        F: Fn(f64) -> CharacteristicMatrix,
    {
        move |t: f64| {
            if t <= 0.5 {
                path(2.0 * t)
            } else {
                path(2.0 - 2.0 * t)
            }
        }
    }
}

#[derive(Debug, Clone)]
struct TrackedLevel {
    sector: Option<Sector>,
    start_rank: usize,
    start_k: f64,
    ks: Vec<Option<f64>>,
    current: Option<f64>,
}

/// Levels available to a track of the given family. Unlabeled levels are
/// candidates for every sector family: at isolated degenerate points of a
/// path (e.g. crossing the self-dual circle) the sector labels merge, and
/// each doubly degenerate level continues one track of either parity.
fn family_levels(spec: &SpectrumResult, sector: Option<Sector>) -> Vec<f64> {
    spec.levels
        .iter()
        .filter(|lv| lv.sector == sector || (sector.is_some() && lv.sector.is_none()))
        .map(|lv| lv.k)
        .collect()
}

/// Track the lowest `n_levels` levels along `path` over `n_steps` parameter
/// steps; for closed paths the induced level permutation is reported.
///
/// Levels are matched by nearest continuation inside their sector family;
/// when a match is ambiguous the step is subdivided and, if the ambiguity
/// persists, the run fails with [`Error::TrackingAmbiguity`]. Levels may
/// leave the window through k = 0; on a closed path the permutation then
/// wraps cyclically (the spectrum as a set returns to itself).
pub fn spectral_flow<F>(
    path: F,
    cfg: &BoxConfig,
    n_levels: usize,
    n_steps: usize,
) -> Result<SpectralFlow>
where
    F: Fn(f64) -> CharacteristicMatrix,
{
    if n_levels == 0 || n_steps == 0 {
        return Err(Error::invalid("n_levels and n_steps must be positive"));
    }
    let window = n_levels + 3;
    let spectrum_at = |t: f64| -> Result<SpectrumResult> {
        let u = path(t);
        let mut spec = first_levels(&u, cfg.boundary, cfg.l_plus, cfg.l0, window)?;
        spec.levels.truncate(window);
        Ok(spec)
    };

    let start = spectrum_at(0.0)?;
    let mut tracked: Vec<TrackedLevel> = Vec::new();
    {
        // family ranks at the start
        let sectors: Vec<Option<Sector>> = {
            let mut s: Vec<Option<Sector>> = start.levels.iter().map(|l| l.sector).collect();
            s.dedup();
            let mut uniq = Vec::new();
            for x in s {
                if !uniq.contains(&x) {
                    uniq.push(x);
                }
            }
            uniq
        };
        for sector in sectors {
            let fam = family_levels(&start, sector);
            for (rank, &k) in fam.iter().enumerate() {
                tracked.push(TrackedLevel {
                    sector,
                    start_rank: rank,
                    start_k: k,
                    ks: vec![Some(k)],
                    current: Some(k),
                });
            }
        }
        tracked.sort_by(|a, b| a.start_k.partial_cmp(&b.start_k).unwrap());
        tracked.truncate(n_levels);
    }

    let mut ts = vec![0.0];
    let mut prev_t = 0.0;
    let mut dead: DeadStacks = DeadStacks::new();
    for step in 1..=n_steps {
        let t = step as f64 / n_steps as f64;
        advance_tracks(&mut tracked, &mut dead, &spectrum_at, cfg.root_tol, prev_t, t, 0)?;
        for tr in &mut tracked {
            tr.ks.push(tr.current);
        }
        ts.push(t);
        prev_t = t;
    }

    // closedness and permutation
    let u0 = path(0.0);
    let u1 = path(1.0);
    let closed = u0.distance(&u1) < 1e-9;
    let end = spectrum_at(1.0)?;
    let mut family_shifts: Vec<(Option<Sector>, i64)> = Vec::new();
    let mut tracks: Vec<FlowTrack> = Vec::new();
    if closed {
        let mut sectors: Vec<Option<Sector>> = Vec::new();
        for tr in &tracked {
            if !sectors.contains(&tr.sector) {
                sectors.push(tr.sector);
            }
        }
        for sector in sectors {
            let fam_end = family_levels(&end, sector);
            let members: Vec<&TrackedLevel> =
                tracked.iter().filter(|tr| tr.sector == sector).collect();
            let mut shift: Option<i64> = None;
            for tr in &members {
                if let Some(k) = tr.current {
                    let end_rank = fam_end
                        .iter()
                        .enumerate()
                        .min_by(|a, b| {
                            (a.1 - k).abs().partial_cmp(&(b.1 - k).abs()).unwrap()
                        })
                        .map(|(i, _)| i)
                        .unwrap_or(0);
                    let d = tr.start_rank as i64 - end_rank as i64;
                    match shift {
                        None => shift = Some(d),
                        Some(existing) if existing != d => {
                            return Err(Error::RootFindingIncomplete {
                                detail: format!(
                                    "closed-path shift is not uniform in one family ({existing} vs {d})"
                                ),
                            })
                        }
                        _ => {}
                    }
                }
            }
            let d = shift.unwrap_or(0);
            // exited tracks must be exactly the lowest d start ranks
            for tr in &members {
                if tr.current.is_none() && (tr.start_rank as i64) >= d {
                    return Err(Error::RootFindingIncomplete {
                        detail: "a track left the spectrum away from the k = 0 boundary".into(),
                    });
                }
            }
            family_shifts.push((sector, d));
        }
    }
    for tr in tracked {
        let end_rank = tr.current.map(|k| {
            let fam_end = family_levels(&end, tr.sector);
            fam_end
                .iter()
                .enumerate()
                .min_by(|a, b| (a.1 - k).abs().partial_cmp(&(b.1 - k).abs()).unwrap())
                .map(|(i, _)| i)
                .unwrap_or(0)
        });
        tracks.push(FlowTrack {
            sector: tr.sector,
            start_rank: tr.start_rank,
            start_k: tr.start_k,
            ks: tr.ks,
            end_rank,
        });
    }

    Ok(SpectralFlow {
        ts,
        tracks,
        closed,
        family_shifts,
    })
}

enum Proposal {
    Keep(f64),
    Exit,
    Ambiguous,
}

/// Per-family LIFO of tracks that left through k = 0, so levels re-entering
/// on a reversed path reconnect to the right curves.
type DeadStacks = std::collections::HashMap<Option<Sector>, Vec<usize>>;

fn advance_tracks<S>(
    tracked: &mut [TrackedLevel],
    dead: &mut DeadStacks,
    spectrum_at: &S,
    root_tol: f64,
    t0: f64,
    t1: f64,
    depth: usize,
) -> Result<()>
where
    S: Fn(f64) -> Result<SpectrumResult>,
{
    let spec = spectrum_at(t1)?;
    let mut proposed: Vec<Option<Proposal>> = Vec::with_capacity(tracked.len());
    let mut need_subdivision = false;
    for tr in tracked.iter() {
        let Some(prev) = tr.current else {
            proposed.push(None);
            continue;
        };
        let fam = family_levels(&spec, tr.sector);
        if fam.is_empty() {
            need_subdivision = true;
            proposed.push(Some(Proposal::Ambiguous));
            continue;
        }
        let spacing = local_spacing(&fam, prev);
        let (best_idx, best_dist) = fam
            .iter()
            .enumerate()
            .map(|(i, &k)| (i, (k - prev).abs()))
            .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
            .unwrap();
        let second = fam
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != best_idx)
            .map(|(_, &k)| (k - prev).abs())
            .fold(f64::INFINITY, f64::min);
        if best_dist < 0.45 * spacing && second - best_dist > root_tol {
            proposed.push(Some(Proposal::Keep(fam[best_idx])));
        } else if prev < 0.05 * spacing && fam[best_idx] > prev {
            proposed.push(Some(Proposal::Exit));
        } else {
            need_subdivision = true;
            proposed.push(Some(Proposal::Ambiguous));
        }
    }
    // two tracks of one family claiming the same root means the step
    // outran the level motion as well
    if !need_subdivision {
        for (i, (ta, pa)) in tracked.iter().zip(proposed.iter()).enumerate() {
            if let Some(Proposal::Keep(ka)) = pa {
                for (tb, pb) in tracked.iter().skip(i + 1).zip(proposed.iter().skip(i + 1)) {
                    if let Some(Proposal::Keep(kb)) = pb {
                        if ta.sector == tb.sector && (ka - kb).abs() < 1e-12 * (1.0 + ka.abs()) {
                            need_subdivision = true;
                        }
                    }
                }
            }
        }
    }
    if need_subdivision {
        if depth >= 24 {
            let stuck = tracked
                .iter()
                .find(|tr| tr.current.is_some())
                .and_then(|tr| tr.current)
                .unwrap_or(0.0);
            return Err(Error::TrackingAmbiguity { t: t1, k: stuck });
        }
        let mid = 0.5 * (t0 + t1);
        advance_tracks(tracked, dead, spectrum_at, root_tol, t0, mid, depth + 1)?;
        return advance_tracks(tracked, dead, spectrum_at, root_tol, mid, t1, depth + 1);
    }
    for (idx, (tr, p)) in tracked.iter_mut().zip(proposed.iter()).enumerate() {
        match p {
            Some(Proposal::Keep(k)) => tr.current = Some(*k),
            Some(Proposal::Exit) => {
                tr.current = None;
                dead.entry(tr.sector).or_default().push(idx);
            }
            Some(Proposal::Ambiguous) => unreachable!("subdivision handled above"),
            None => {}
        }
    }
    // revival: an unclaimed family level below every live track of its
    // family has just entered through k = 0 and reconnects the most
    // recently exited curve
    let sectors: Vec<Option<Sector>> = dead
        .iter()
        .filter(|(_, v)| !v.is_empty())
        .map(|(s, _)| *s)
        .collect();
    for sector in sectors {
        loop {
            let stack_empty = dead.get(&sector).is_none_or(|v| v.is_empty());
            if stack_empty {
                break;
            }
            let fam = family_levels(&spec, sector);
            let lowest_live = tracked
                .iter()
                .filter(|tr| tr.sector == sector)
                .filter_map(|tr| tr.current)
                .fold(f64::INFINITY, f64::min);
            let claimed: Vec<f64> = tracked
                .iter()
                .filter(|tr| tr.sector == sector)
                .filter_map(|tr| tr.current)
                .collect();
            let entrant = fam
                .iter()
                .copied()
                .filter(|&k| k < lowest_live)
                .find(|&k| claimed.iter().all(|&c| (c - k).abs() > 1e-12 * (1.0 + k)));
            match entrant {
                Some(k) => {
                    let idx = dead.get_mut(&sector).unwrap().pop().unwrap();
                    tracked[idx].current = Some(k);
                }
                None => break,
            }
        }
    }
    Ok(())
}

/// Gap scale of the family around a given momentum: the size of the
/// neighboring inter-level gaps, falling back to the distance through k = 0.
fn local_spacing(fam: &[f64], around: f64) -> f64 {
    if fam.len() < 2 {
        return if fam.is_empty() {
            f64::INFINITY
        } else {
            2.0 * fam[0]
        };
    }
    let mut gap = f64::INFINITY;
    for w in fam.windows(2) {
        let width = w[1] - w[0];
        if around >= w[0] - width && around <= w[1] + width {
            gap = gap.min(width);
        }
    }
    if gap.is_finite() {
        gap
    } else {
        fam.windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }
}


#[cfg(test)]
mod more_tests {
    use super::*;
    use crate::mat2::C64;
    use std::f64::consts::PI;

    #[test]
    fn self_dual_cycle_shifts_degenerate_levels_by_one() {
        let cfg = BoxConfig::symmetric(
            BoxBoundary::Dirichlet,
            1.0,
            ScaleParameter::new(1.0).unwrap(),
            40.0,
        )
        .unwrap();
        let flow = spectral_flow(paths::self_dual_cycle(), &cfg, 6, 200).unwrap();
        assert!(flow.closed);
        // one unlabeled family of doubly degenerate levels, shifted by one
        assert_eq!(flow.family_shifts.len(), 1);
        assert_eq!(flow.uniform_shift(), Some(1));
    }

    #[test]
    fn separated_ring_matches_cut_interval_oracle() {
        // north pole of the sphere: a Dirichlet|Neumann wall. Cutting the
        // ring of circumference 2l at the wall leaves an interval with one
        // Dirichlet and one Neumann end: k = (n - 1/2)π/(2l).
        let u = CharacteristicMatrix::new(PI / 2.0, C64::new(0.0, 1.0), C64::new(0.0, 0.0))
            .unwrap();
        for boundary in [BoxBoundary::Periodic, BoxBoundary::Antiperiodic] {
            let cfg = BoxConfig::symmetric(
                boundary,
                1.0,
                ScaleParameter::new(1.0).unwrap(),
                12.0,
            )
            .unwrap();
            let spec = box_spectrum(&u, &cfg).unwrap();
            for (n, lv) in spec.levels.iter().enumerate() {
                let expected = (n as f64 + 0.5) * PI / 2.0;
                assert!(
                    (lv.k - expected).abs() < 1e-9,
                    "{boundary:?} level {n}: {} vs {expected}",
                    lv.k
                );
            }
            assert!(spec.levels.len() >= 7);
        }
    }
}
