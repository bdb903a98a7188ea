//! Minimal complex 2×2 matrix and 2-vector arithmetic.
//!
//! Everything in this crate lives in the two-dimensional boundary-value
//! space, so a hand-rolled fixed-size type is both faster and easier to
//! audit than a general linear-algebra dependency.

use num_complex::Complex64;

pub type C64 = Complex64;

/// Complex 2-vector (boundary data, eigenvectors, plane-wave coefficients).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2 {
    pub x: C64,
    pub y: C64,
}

impl Vec2 {
    pub const fn new(x: C64, y: C64) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2::new(C64::new(0.0, 0.0), C64::new(0.0, 0.0))
    }

    /// Hermitian inner product ⟨self, other⟩ = self† · other.
    pub fn dot(&self, other: &Vec2) -> C64 {
        self.x.conj() * other.x + self.y.conj() * other.y
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).re.sqrt()
    }

    pub fn scale(&self, s: C64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }

    pub fn normalized(&self) -> Vec2 {
        let n = self.norm();
        Vec2::new(self.x / n, self.y / n)
    }

    pub fn add(&self, other: &Vec2) -> Vec2 {
        Vec2::new(self.x + other.x, self.y + other.y)
    }

    pub fn sub(&self, other: &Vec2) -> Vec2 {
        Vec2::new(self.x - other.x, self.y - other.y)
    }

    pub fn max_abs(&self) -> f64 {
        self.x.norm().max(self.y.norm())
    }
}

/// Complex 2×2 matrix in row-major layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub e: [[C64; 2]; 2],
}

impl Mat2 {
    pub const fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn from_reals(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2::new(
            C64::new(a, 0.0),
            C64::new(b, 0.0),
            C64::new(c, 0.0),
            C64::new(d, 0.0),
        )
    }

    pub fn identity() -> Self {
        Mat2::from_reals(1.0, 0.0, 0.0, 1.0)
    }

    pub fn zero() -> Self {
        Mat2::from_reals(0.0, 0.0, 0.0, 0.0)
    }

    /// Pauli matrices σ1, σ2, σ3 (index 1-based).
    pub fn pauli(i: usize) -> Self {
        let o = C64::new(0.0, 0.0);
        let one = C64::new(1.0, 0.0);
        let im = C64::new(0.0, 1.0);
        match i {
            1 => Mat2::new(o, one, one, o),
            2 => Mat2::new(o, -im, im, o),
            3 => Mat2::new(one, o, o, -one),
            _ => panic!("Pauli index must be 1, 2 or 3"),
        }
    }

    /// Projector (1 ± σ_i)/2; `sign` is +1 or -1.
    pub fn projector(i: usize, sign: f64) -> Self {
        let half = C64::new(0.5, 0.0);
        Mat2::identity()
            .scale(half)
            .add(&Mat2::pauli(i).scale(half * sign))
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        let mut r = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] = self.e[i][0] * other.e[0][j] + self.e[i][1] * other.e[1][j];
            }
        }
        r
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2::new(
            self.e[0][0] * v.x + self.e[0][1] * v.y,
            self.e[1][0] * v.x + self.e[1][1] * v.y,
        )
    }

    pub fn add(&self, other: &Mat2) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] += other.e[i][j];
            }
        }
        r
    }

    pub fn sub(&self, other: &Mat2) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] -= other.e[i][j];
            }
        }
        r
    }

    pub fn scale(&self, s: C64) -> Mat2 {
        let mut r = *self;
        for i in 0..2 {
            for j in 0..2 {
                r.e[i][j] *= s;
            }
        }
        r
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(self.e[0][0], self.e[1][0], self.e[0][1], self.e[1][1])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        Mat2::new(
            self.e[0][0].conj(),
            self.e[1][0].conj(),
            self.e[0][1].conj(),
            self.e[1][1].conj(),
        )
    }

    pub fn det(&self) -> C64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.e[0][0] + self.e[1][1]
    }

    pub fn inverse(&self) -> Mat2 {
        let d = self.det();
        Mat2::new(
            self.e[1][1] / d,
            -self.e[0][1] / d,
            -self.e[1][0] / d,
            self.e[0][0] / d,
        )
    }

    /// Largest entry-wise modulus; the matrix norm used for tolerance checks.
    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                m = m.max(self.e[i][j].norm());
            }
        }
        m
    }

    pub fn distance(&self, other: &Mat2) -> f64 {
        self.sub(other).max_abs()
    }

    /// Deviation from unitarity, ‖M†M − I‖.
    pub fn unitarity_defect(&self) -> f64 {
        self.adjoint().mul(self).distance(&Mat2::identity())
    }

    pub fn column(&self, j: usize) -> Vec2 {
        Vec2::new(self.e[0][j], self.e[1][j])
    }
}
