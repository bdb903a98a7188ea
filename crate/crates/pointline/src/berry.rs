//! Geometric phase on the scale-invariant sphere.
//!
//! The sphere det(U ∓ I) = 0 sits at ξ = π/2, α_R = 0 and is coordinatized
//! by α_I = cosθ, β_R = sinθ cosφ, β_I = sinθ sinφ. In a symmetric Dirichlet
//! box the levels with cos(kl) = 0 persist across the whole sphere, and
//! their eigenfunctions
//!
//! ```text
//! φ_k = cos(θ/2) ξ₊ + sin(θ/2) e^{i(φ+π/2)} ξ₋
//! ```
//!
//! live in the fixed two-dimensional frame of half-line modes ξ±. The Berry
//! connection of this family is A = −sin²(θ/2) dφ with curvature
//! F = −(1/2) sinθ dθ∧dφ: a unit-strength monopole of negative charge, so a
//! loop acquires −1/2 times the solid angle it subtends.
//!
//! Two evaluations of the loop phase are provided: the line integral of A
//! along geodesic interpolation, and the gauge-invariant discrete product of
//! state overlaps. They agree modulo 2π.

use crate::error::{Error, Result};
use crate::mat2::C64;
use crate::params::CharacteristicMatrix;
use std::f64::consts::PI;

/// Point on the scale-invariant sphere in polar coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    /// Polar angle θ ∈ [0, π].
    pub theta: f64,
    /// Azimuth φ ∈ [0, 2π).
    pub phi: f64,
}

impl SpherePoint {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(theta.is_finite() && phi.is_finite()) {
            return Err(Error::invalid("non-finite sphere coordinates"));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::invalid(format!(
                "polar angle must lie in [0, π], got {theta}"
            )));
        }
        Ok(SpherePoint {
            theta,
            phi: phi.rem_euclid(2.0 * PI),
        })
    }

    /// Cartesian unit vector (α_I, β_R, β_I).
    pub fn unit_vector(&self) -> [f64; 3] {
        [
            self.theta.cos(),
            self.theta.sin() * self.phi.cos(),
            self.theta.sin() * self.phi.sin(),
        ]
    }

    fn from_unit_vector(v: [f64; 3]) -> SpherePoint {
        let theta = v[0].clamp(-1.0, 1.0).acos();
        let phi = f64::atan2(v[2], v[1]).rem_euclid(2.0 * PI);
        SpherePoint { theta, phi }
    }
}

/// Closed loop on the sphere: an ordered vertex list with first = last.
#[derive(Debug, Clone, PartialEq)]
pub struct SphereLoop {
    vertices: Vec<SpherePoint>,
}

impl SphereLoop {
    /// Build from an explicitly closed vertex list (first = last).
    pub fn new(vertices: Vec<SpherePoint>) -> Result<Self> {
        if vertices.len() < 4 {
            return Err(Error::invalid(
                "a closed loop needs at least 3 distinct vertices plus the repeat",
            ));
        }
        let first = vertices.first().unwrap().unit_vector();
        let last = vertices.last().unwrap().unit_vector();
        let dist: f64 = first
            .iter()
            .zip(last.iter())
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        if dist.sqrt() > 1e-12 {
            return Err(Error::invalid("loop must be closed (first vertex = last)"));
        }
        let constant = vertices.windows(2).all(|w| {
            let (a, b) = (w[0].unit_vector(), w[1].unit_vector());
            a.iter()
                .zip(b.iter())
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max)
                < 1e-15
        });
        if !constant {
            for v in &vertices {
                if v.theta < 1e-12 || v.theta > PI - 1e-12 {
                    return Err(Error::invalid(
                        "loop vertices may not sit at a pole (azimuth undefined there)",
                    ));
                }
            }
        }
        Ok(SphereLoop { vertices })
    }

    /// Close an open vertex list by repeating the first point.
    pub fn closed(mut points: Vec<SpherePoint>) -> Result<Self> {
        if let Some(&first) = points.first() {
            points.push(first);
        }
        SphereLoop::new(points)
    }

    /// Latitude circle θ = θ0 sampled at `n` vertices.
    pub fn latitude(theta0: f64, n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::invalid("latitude loop needs at least 3 vertices"));
        }
        let mut pts = Vec::with_capacity(n + 1);
        for i in 0..n {
            pts.push(SpherePoint::new(theta0, 2.0 * PI * i as f64 / n as f64)?);
        }
        SphereLoop::closed(pts)
    }

    pub fn vertices(&self) -> &[SpherePoint] {
        &self.vertices
    }

    /// Signed solid angle enclosed by the geodesic polygon, by fan
    /// triangulation with the Van Oosterom–Strackee triangle formula.
    pub fn solid_angle(&self) -> f64 {
        let vs: Vec<[f64; 3]> = self.vertices.iter().map(|p| p.unit_vector()).collect();
        let mut total = 0.0;
        for i in 1..vs.len().saturating_sub(1) {
            total += triangle_solid_angle(&vs[0], &vs[i], &vs[i + 1]);
        }
        total
    }
}

fn dot3(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn triple(a: &[f64; 3], b: &[f64; 3], c: &[f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

fn triangle_solid_angle(a: &[f64; 3], b: &[f64; 3], c: &[f64; 3]) -> f64 {
    let num = triple(a, b, c);
    let den = 1.0 + dot3(a, b) + dot3(b, c) + dot3(c, a);
    2.0 * f64::atan2(num, den)
}

/// Coefficients of a box eigenstate in the orthonormal half-line frame
/// (ξ₊, ξ₋): c₊ = cos(θ/2), c₋ = sin(θ/2) e^{i(φ+π/2)}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenstateCoefficients {
    pub c_plus: C64,
    pub c_minus: C64,
}

impl EigenstateCoefficients {
    pub fn overlap(&self, other: &EigenstateCoefficients) -> C64 {
        self.c_plus.conj() * other.c_plus + self.c_minus.conj() * other.c_minus
    }

    pub fn norm_sqr(&self) -> f64 {
        self.c_plus.norm_sqr() + self.c_minus.norm_sqr()
    }
}

/// Characteristic matrix of a sphere point: ξ = π/2, α = i cosθ,
/// β = sinθ e^{iφ}.
pub fn sphere_to_characteristic(p: &SpherePoint) -> CharacteristicMatrix {
    let [ai, br, bi] = p.unit_vector();
    CharacteristicMatrix::new(PI / 2.0, C64::new(0.0, ai), C64::new(br, bi))
        .expect("sphere coordinates are normalized")
}

/// Box eigenstate coefficients at a sphere point.
pub fn eigenstate_coefficients(p: &SpherePoint) -> EigenstateCoefficients {
    let half = p.theta / 2.0;
    EigenstateCoefficients {
        c_plus: C64::new(half.cos(), 0.0),
        c_minus: C64::from_polar(half.sin(), p.phi + PI / 2.0),
    }
}

/// Berry connection components (A_θ, A_φ) = (0, −sin²(θ/2)).
pub fn connection(p: &SpherePoint) -> (f64, f64) {
    let half = p.theta / 2.0;
    (0.0, -half.sin().powi(2))
}

/// Berry curvature component F_θφ = −sinθ / 2.
pub fn curvature(theta: f64) -> f64 {
    -theta.sin() / 2.0
}

/// How to evaluate a loop phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopPhaseMethod {
    /// Line integral of the connection along geodesic segments.
    Analytic,
    /// −arg of the product of consecutive state overlaps.
    Discrete,
}

/// Geometric phase of a closed loop, reduced to (−π, π].
pub fn loop_phase(loop_: &SphereLoop, method: LoopPhaseMethod) -> Result<f64> {
    match method {
        LoopPhaseMethod::Discrete => {
            let coeffs: Vec<EigenstateCoefficients> = loop_
                .vertices()
                .iter()
                .map(eigenstate_coefficients)
                .collect();
            discrete_phase_from_coefficients(&coeffs)
        }
        LoopPhaseMethod::Analytic => {
            // compensated accumulation keeps the sum independent of the
            // segment order at machine precision
            let mut total = 0.0;
            let mut carry = 0.0;
            for w in loop_.vertices().windows(2) {
                let term = segment_connection_integral(&w[0], &w[1])? - carry;
                let next = total + term;
                carry = (next - total) - term;
                total = next;
            }
            Ok(wrap_phase(total))
        }
    }
}

/// Gauge-invariant discrete loop phase γ = −arg Π_j ⟨c_j, c_{j+1}⟩ for an
/// explicitly closed coefficient sequence (first = last).
pub fn discrete_phase_from_coefficients(coeffs: &[EigenstateCoefficients]) -> Result<f64> {
    if coeffs.len() < 2 {
        return Err(Error::invalid("need at least two loop states"));
    }
    let mut arg_sum = 0.0;
    for w in coeffs.windows(2) {
        let ov = w[0].overlap(&w[1]);
        if ov.norm() < 1e-12 {
            return Err(Error::GaugeSingularity);
        }
        arg_sum += ov.arg();
    }
    Ok(wrap_phase(-arg_sum))
}

fn wrap_phase(x: f64) -> f64 {
    let mut y = x.rem_euclid(2.0 * PI);
    if y > PI {
        y -= 2.0 * PI;
    }
    y
}

/// ∫ A over the great-circle segment from `a` to `b` by adaptive Simpson
/// quadrature. In Cartesian terms the integrand is
/// −(1 − z)/2 · (x y′ − y x′)/(x² + y²).
fn segment_connection_integral(a: &SpherePoint, b: &SpherePoint) -> Result<f64> {
    let va = a.unit_vector();
    let vb = b.unit_vector();
    let cosw = dot3(&va, &vb).clamp(-1.0, 1.0);
    let omega = cosw.acos();
    if omega < 1e-15 {
        return Ok(0.0);
    }
    if PI - omega < 1e-9 {
        return Err(Error::GaugeSingularity);
    }
    let sinw = omega.sin();
    let point = |t: f64| -> [f64; 3] {
        let ca = ((1.0 - t) * omega).sin() / sinw;
        let cb = (t * omega).sin() / sinw;
        [
            ca * va[0] + cb * vb[0],
            ca * va[1] + cb * vb[1],
            ca * va[2] + cb * vb[2],
        ]
    };
    // the connection gauge is singular at the south pole (z = −1)
    for i in 0..=64 {
        let p = point(i as f64 / 64.0);
        if p[0] < 0.0 && p[1] * p[1] + p[2] * p[2] < 1e-16 {
            return Err(Error::GaugeSingularity);
        }
    }
    let deriv = |t: f64| -> [f64; 3] {
        let ca = -omega * ((1.0 - t) * omega).cos() / sinw;
        let cb = omega * (t * omega).cos() / sinw;
        [
            ca * va[0] + cb * vb[0],
            ca * va[1] + cb * vb[1],
            ca * va[2] + cb * vb[2],
        ]
    };
    let integrand = |t: f64| -> f64 {
        let p = point(t);
        let d = deriv(t);
        let planar = p[1] * p[1] + p[2] * p[2];
        if planar < 1e-28 {
            // passing over the north pole: the (1 − z) factor vanishes faster
            return 0.0;
        }
        // sphere coordinates here are (z, x, y) = (α_I, β_R, β_I)
        -(1.0 - p[0]) / 2.0 * (p[1] * d[2] - p[2] * d[1]) / planar
    };
    Ok(adaptive_simpson(&integrand, 0.0, 1.0, 1e-12, 24))
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: usize) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = simpson(a, b, fa, fm, fb);
    adaptive_step(f, a, b, fa, fm, fb, whole, tol, depth)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        left + right + delta / 15.0
    } else {
        adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
}

/// Midpoint of the geodesic between two sphere points (used by tests and
/// refinement utilities).
pub fn geodesic_midpoint(a: &SpherePoint, b: &SpherePoint) -> Result<SpherePoint> {
    let va = a.unit_vector();
    let vb = b.unit_vector();
    let mut m = [
        0.5 * (va[0] + vb[0]),
        0.5 * (va[1] + vb[1]),
        0.5 * (va[2] + vb[2]),
    ];
    let n = dot3(&m, &m).sqrt();
    if n < 1e-12 {
        return Err(Error::GaugeSingularity);
    }
    for x in &mut m {
        *x /= n;
    }
    Ok(SpherePoint::from_unit_vector(m))
}
