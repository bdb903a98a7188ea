//! Property tests over the parameter space.

use num_complex::Complex64;
use pointline::params::{CharacteristicMatrix, ScaleParameter};
use pointline::scattering::amplitudes_global;
use pointline::symmetry::{apply_transform, coupling_constants, DiscreteTransform};
use proptest::prelude::*;
use std::f64::consts::PI;

fn unit_four_sphere() -> impl Strategy<Value = (f64, Complex64, Complex64)> {
    (
        0.0..PI,
        -1.0f64..1.0,
        -1.0f64..1.0,
        -1.0f64..1.0,
        -1.0f64..1.0,
    )
        .prop_filter_map("null vector", |(xi, a, b, c, d)| {
            let n = (a * a + b * b + c * c + d * d).sqrt();
            if n < 1e-3 {
                return None;
            }
            Some((
                xi,
                Complex64::new(a / n, b / n),
                Complex64::new(c / n, d / n),
            ))
        })
}

proptest! {
    #[test]
    fn constructor_canonicalizes(params in unit_four_sphere(), shift in -3i32..4) {
        let (xi, alpha, beta) = params;
        let u = CharacteristicMatrix::new(xi + shift as f64 * PI, alpha, beta).unwrap();
        prop_assert!(u.xi() >= 0.0 && u.xi() < PI);
        prop_assert!(u.matrix().unitarity_defect() < 1e-12);
        // the matrix itself only depends on ξ mod 2π together with the sign
        let direct = CharacteristicMatrix::new(xi, alpha, beta).unwrap();
        let ph = Complex64::from_polar(1.0, shift as f64 * PI);
        prop_assert!(u.matrix().distance(&direct.matrix().scale(ph)) < 1e-12);
    }

    #[test]
    fn classify_is_phase_stable(params in unit_four_sphere()) {
        let (xi, alpha, beta) = params;
        let u = CharacteristicMatrix::new(xi, alpha, beta).unwrap();
        let flags = u.classify();
        let again = CharacteristicMatrix::new(u.xi(), u.alpha(), u.beta()).unwrap().classify();
        prop_assert_eq!(flags, again);
    }

    #[test]
    fn involutions_on_arbitrary_unitaries(params in unit_four_sphere()) {
        let (xi, alpha, beta) = params;
        let u = CharacteristicMatrix::new(xi, alpha, beta).unwrap();
        for t in [
            DiscreteTransform::P,
            DiscreteTransform::T,
            DiscreteTransform::Pt,
            DiscreteTransform::Q,
            DiscreteTransform::R,
            DiscreteTransform::S,
        ] {
            let twice = apply_transform(&apply_transform(&u, t).unwrap(), t).unwrap();
            prop_assert!(twice.distance(&u) < 1e-12);
        }
    }

    #[test]
    fn scattering_is_unitary_everywhere(params in unit_four_sphere(), k in 1e-3..20.0) {
        let (xi, alpha, beta) = params;
        let u = CharacteristicMatrix::new(xi, alpha, beta).unwrap();
        let amp = amplitudes_global(&u, ScaleParameter::new(1.0).unwrap(), k).unwrap();
        prop_assert!(amp.unitarity_residual() < 1e-12);
        prop_assert!(amp.cross_residual() < 1e-12);
    }

    #[test]
    fn reciprocal_couplings_on_the_diagonal(theta in 0.05..(PI - 0.05)) {
        let c = coupling_constants(theta, theta);
        prop_assert!((c.g_plus * c.g_minus - 1.0).abs() < 1e-10);
    }
}
