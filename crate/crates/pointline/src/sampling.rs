//! Random sampling of interactions, used by the property and acceptance
//! test suites (Haar measure on U(2), uniform sphere points, torus angles).

use crate::berry::SpherePoint;
use crate::mat2::C64;
use crate::params::CharacteristicMatrix;
use std::f64::consts::PI;

/// Minimal xorshift generator so the test suites stay deterministic without
/// threading a RNG dependency through the public API.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn uniform(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Standard normal via Box–Muller.
    pub fn normal(&mut self) -> f64 {
        let u1 = self.uniform().max(1e-300);
        let u2 = self.uniform();
        (-2.0 * u1.ln()).sqrt() * (2.0 * PI * u2).cos()
    }
}

/// Haar-distributed characteristic matrix: ξ uniform on [0, π), (α, β)
/// uniform on the three-sphere.
pub fn haar_characteristic(rng: &mut SplitMix64) -> CharacteristicMatrix {
    loop {
        let g = [rng.normal(), rng.normal(), rng.normal(), rng.normal()];
        let n = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]).sqrt();
        if n < 1e-6 {
            continue;
        }
        let xi = rng.range(0.0, PI);
        let alpha = C64::new(g[0] / n, g[1] / n);
        let beta = C64::new(g[2] / n, g[3] / n);
        return CharacteristicMatrix::new(xi, alpha, beta)
            .expect("normalized sample is admissible");
    }
}

/// Uniform point on the scale-invariant sphere.
pub fn uniform_sphere_point(rng: &mut SplitMix64) -> SpherePoint {
    let z = rng.range(-1.0, 1.0);
    let phi = rng.range(0.0, 2.0 * PI);
    SpherePoint::new(z.clamp(-1.0, 1.0).acos(), phi).expect("sampled coordinates are in range")
}

/// Uniform parity-torus angles (θ₊, θ₋) ∈ [0, 2π)².
pub fn uniform_parity_angles(rng: &mut SplitMix64) -> (f64, f64) {
    (rng.range(0.0, 2.0 * PI), rng.range(0.0, 2.0 * PI))
}
