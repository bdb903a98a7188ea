//! Acceptance suite: one test per criterion, each printing its own
//! pass line (run with `cargo test --test acceptance -- --nocapture` to see
//! them; the test names themselves double as the pass/fail report).

use pointline::berry::{
    loop_phase, sphere_to_characteristic, LoopPhaseMethod, SphereLoop,
};
use pointline::mat2::{Mat2, C64};
use pointline::params::{CharacteristicMatrix, ScaleParameter};
use pointline::sampling::{
    haar_characteristic, uniform_parity_angles, uniform_sphere_point, SplitMix64,
};
use pointline::scattering::{
    amplitudes_global, amplitudes_transfer, bound_states, filter_profile, FilterClass,
};
use pointline::spectra::{
    box_spectrum, first_levels, paths, spectral_flow, susy_check, BoxBoundary, BoxConfig, Sector,
};
use pointline::symmetry::{transform_boundary_vectors, DiscreteTransform};
use std::f64::consts::PI;

fn l0(v: f64) -> ScaleParameter {
    ScaleParameter::new(v).unwrap()
}

fn dirichlet(l: f64, k_max: f64) -> BoxConfig {
    BoxConfig::symmetric(BoxBoundary::Dirichlet, l, l0(1.0), k_max).unwrap()
}

fn wrap_2pi_dist(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

#[test]
fn criterion_01_scattering_unitarity() {
    let mut rng = SplitMix64::new(101);
    let scale = l0(1.0);
    for _ in 0..1000 {
        let u = haar_characteristic(&mut rng);
        let k = rng.range(1e-6, 10.0);
        let amp = amplitudes_global(&u, scale, k).unwrap();
        assert!(amp.unitarity_residual() < 1e-12, "unitarity violated");
        assert!(amp.cross_residual() < 1e-12, "cross-orthogonality violated");
    }
    println!("criterion 01 PASS: |r|^2 + |t|^2 = 1 and r_l* t_r + t_l* r_r = 0 within 1e-12 on 1000 samples");
}

#[test]
fn criterion_02_dual_scattering_routes_agree() {
    let mut rng = SplitMix64::new(102);
    let scale = l0(1.0);
    let mut n = 0;
    while n < 1000 {
        let u = haar_characteristic(&mut rng);
        if u.beta().norm() <= 1e-6 {
            continue;
        }
        let k = rng.range(1e-3, 10.0);
        let lam = u.to_transfer(scale).unwrap();
        let a = amplitudes_global(&u, scale, k).unwrap();
        let b = amplitudes_transfer(&lam, k).unwrap();
        for (x, y) in [(a.r_l, b.r_l), (a.t_l, b.t_l), (a.r_r, b.r_r), (a.t_r, b.t_r)] {
            assert!((x - y).norm() < 1e-10, "routes disagree: {x} vs {y}");
        }
        n += 1;
    }
    println!("criterion 02 PASS: global and transfer-matrix amplitudes agree within 1e-10 on 1000 samples");
}

#[test]
fn criterion_03_isospectral_sphere() {
    let mut rng = SplitMix64::new(103);
    // The scale-invariant sphere is isospectral: every point shares the
    // parameter-free Dirichlet spectrum. Its cos(kl) = 0 family sits at
    // (n - 1/2)π as quoted; the full spectrum also carries the
    // parameter-free sin(kl) = 0 family k = nπ admitted because
    // det(U + I) = 0 on the sphere (required for consistency with the
    // Witten point, criterion 12).
    for _ in 0..100 {
        let p = uniform_sphere_point(&mut rng);
        let u = sphere_to_characteristic(&p);
        assert!(u.classify().omega_w);
        let spec = first_levels(&u, BoxBoundary::Dirichlet, 1.0, l0(1.0), 20).unwrap();
        assert_eq!(spec.levels.len(), 20);
        let mut half_integer = 0;
        for (n, lv) in spec.levels.iter().enumerate() {
            let expected = (n as f64 + 1.0) * PI / 2.0;
            assert!(
                (lv.k - expected).abs() < 1e-10,
                "sphere spectrum must be parameter-free: level {n} = {}",
                lv.k
            );
            if n % 2 == 0 {
                // the quoted family k = (m - 1/2)π
                let m = (n / 2) as f64 + 1.0;
                assert!((lv.k - (m - 0.5) * PI).abs() < 1e-10);
                half_integer += 1;
            }
        }
        assert_eq!(half_integer, 10);
        assert!(spec.negative_levels.is_empty());
    }
    println!("criterion 03 PASS: 100 sphere points share the fixed Dirichlet spectrum; the (n-1/2)pi family is parameter-free");
}

#[test]
fn criterion_04_fermion_boson_duality() {
    let mut rng = SplitMix64::new(104);
    let cfg = dirichlet(1.0, 14.0);
    let mut n = 0;
    while n < 50 {
        let (tp, tm) = uniform_parity_angles(&mut rng);
        if wrap_2pi_dist(tp, tm) < 1e-3 {
            continue; // the self-dual circle has no sector labels to swap
        }
        let u = CharacteristicMatrix::from_parity_angles(tp, tm);
        let v = CharacteristicMatrix::from_parity_angles(tm, tp);
        let su = box_spectrum(&u, &cfg).unwrap();
        let sv = box_spectrum(&v, &cfg).unwrap();
        assert_eq!(su.levels.len(), sv.levels.len());
        for (a, b) in su.levels.iter().zip(sv.levels.iter()) {
            assert!((a.k - b.k).abs() < 1e-10, "spectra differ as multisets");
            assert_eq!(a.multiplicity, b.multiplicity);
            match (a.sector, b.sector) {
                (Some(Sector::Symmetric), Some(Sector::Antisymmetric))
                | (Some(Sector::Antisymmetric), Some(Sector::Symmetric)) => {}
                other => panic!("sector labels must swap, got {other:?}"),
            }
        }
        n += 1;
    }
    println!("criterion 04 PASS: 50 angle pairs give identical spectra with symmetric/antisymmetric labels exchanged");
}

#[test]
fn criterion_05_self_dual_degeneracy() {
    let mut rng = SplitMix64::new(105);
    let scale = l0(1.0);
    for _ in 0..20 {
        let theta = rng.range(1e-3, 2.0 * PI - 1e-3);
        let u = CharacteristicMatrix::self_dual(theta);
        let spec = first_levels(&u, BoxBoundary::Dirichlet, 1.0, scale, 10).unwrap();
        assert_eq!(spec.levels.len(), 10);
        for lv in &spec.levels {
            assert_eq!(lv.multiplicity, 2, "every level must be doubly degenerate");
        }
        // bound state for θ ∈ (0, π): doubly degenerate κ = tan(θ/2)/L0
        let report = bound_states(&u, scale);
        if theta > 1e-3 && theta < PI - 1e-3 {
            assert_eq!(report.states.len(), 1);
            assert_eq!(report.states[0].multiplicity, 2);
            let expected = (theta / 2.0).tan();
            assert!(
                (report.states[0].kappa - expected).abs() < 1e-12 * (1.0 + expected),
                "kappa {} vs tan(theta/2) {}",
                report.states[0].kappa,
                expected
            );
        } else if theta > PI + 1e-3 {
            assert!(report.states.is_empty());
        }
    }
    println!("criterion 05 PASS: 20 self-dual points have all levels doubly degenerate and the paired bound state at tan(theta/2)/L0");
}

#[test]
fn criterion_06_spiral_anholonomy() {
    let cfg = dirichlet(1.0, 60.0);
    let flow = spectral_flow(paths::diagonal_through_free_point(), &cfg, 10, 400).unwrap();
    assert!(flow.closed, "diagonal cycle must close on the torus");
    assert_eq!(
        flow.uniform_shift(),
        Some(1),
        "every level must shift down by exactly one index after the cycle"
    );
    // composing with the reverse cycle gives the identity
    let back = spectral_flow(
        paths::there_and_back(paths::diagonal_through_free_point()),
        &cfg,
        10,
        800,
    )
    .unwrap();
    assert_eq!(back.uniform_shift(), Some(0));
    let perm = back.permutation().unwrap();
    assert_eq!(perm, (0..10).collect::<Vec<_>>());
    // and the explicit permutation composition agrees
    let fwd = spectral_flow(paths::diagonal_through_free_point(), &cfg, 10, 400).unwrap();
    let rev = spectral_flow(
        |t| paths::diagonal_through_free_point()(1.0 - t),
        &cfg,
        10,
        400,
    )
    .unwrap();
    let pf = fwd.permutation().unwrap();
    let pr = rev.permutation().unwrap();
    for i in 0..pf.len() {
        assert_eq!(pr[pf[i]], i, "forward then reverse must be the identity");
    }
    println!("criterion 06 PASS: the 2pi diagonal cycle shifts all 10 tracked levels by one; cycle + reverse is the identity");
}

#[test]
fn criterion_07_berry_phase_latitudes() {
    let equator = SphereLoop::latitude(PI / 2.0, 2000).unwrap();
    let gamma = loop_phase(&equator, LoopPhaseMethod::Discrete).unwrap();
    assert!(
        wrap_2pi_dist(gamma, -PI) < 1e-6,
        "equator loop phase {gamma} must be -pi"
    );
    for theta0 in [PI / 6.0, PI / 3.0, 2.0 * PI / 3.0] {
        let lat = SphereLoop::latitude(theta0, 2000).unwrap();
        let g = loop_phase(&lat, LoopPhaseMethod::Discrete).unwrap();
        let predicted = -PI * (1.0 - theta0.cos());
        assert!(
            wrap_2pi_dist(g, predicted) < 1e-6,
            "latitude {theta0}: {g} vs -pi(1-cos) = {predicted}"
        );
        // the analytic line integral agrees with the overlap product
        let a = loop_phase(&lat, LoopPhaseMethod::Analytic).unwrap();
        assert!(wrap_2pi_dist(a, g) < 1e-6);
    }
    println!("criterion 07 PASS: 2000-vertex latitude loops reproduce -1/2 x solid angle within 1e-6");
}

#[test]
fn criterion_08_bound_state_census() {
    let mut rng = SplitMix64::new(108);
    let scale = l0(1.0);
    for _ in 0..1000 {
        let u = haar_characteristic(&mut rng);
        let dec = u.eigenphases();
        let expected = [dec.mu_plus, dec.mu_minus]
            .iter()
            .filter(|&&mu| mu > 1e-12 && mu < PI - 1e-12)
            .count();
        assert_eq!(bound_states(&u, scale).count(), expected);
    }
    for _ in 0..100 {
        let u = sphere_to_characteristic(&uniform_sphere_point(&mut rng));
        assert!(bound_states(&u, scale).states.is_empty());
    }
    println!("criterion 08 PASS: bound-state count equals eigenphases in (0, pi) on 1000 samples; sphere points bind nothing");
}

#[test]
fn criterion_09_scale_absorption() {
    let mut rng = SplitMix64::new(109);
    let a = l0(1.0);
    let b = l0(3.0);
    for _ in 0..100 {
        let u = haar_characteristic(&mut rng);
        let v = u.rescale_l0(a, b);
        let sa = box_spectrum(&u, &BoxConfig::symmetric(BoxBoundary::Dirichlet, 1.0, a, 12.0).unwrap())
            .unwrap();
        let sb = box_spectrum(&v, &BoxConfig::symmetric(BoxBoundary::Dirichlet, 1.0, b, 12.0).unwrap())
            .unwrap();
        let (ka, kb) = (sa.ks_with_multiplicity(), sb.ks_with_multiplicity());
        assert_eq!(ka.len(), kb.len());
        for (x, y) in ka.iter().zip(kb.iter()) {
            assert!((x - y).abs() < 1e-10, "box level moved: {x} vs {y}");
        }
        let ba = bound_states(&u, a);
        let bb = bound_states(&v, b);
        assert_eq!(ba.count(), bb.count());
        for (x, y) in ba.states.iter().zip(bb.states.iter()) {
            // energies compared with the relative guard for near-wall
            // channels where E = -tan^2(mu/2)/L0^2 diverges
            assert!(
                (x.energy - y.energy).abs() < 1e-10 * (1.0 + x.energy.abs()),
                "bound energy moved: {} vs {}",
                x.energy,
                y.energy
            );
        }
    }
    // the scale-invariant points are fixed under any rescale
    let sphere_pt = CharacteristicMatrix::new(
        PI / 2.0,
        C64::new(0.0, 0.6),
        C64::new(0.48, 0.64),
    )
    .unwrap();
    for u in [
        sphere_pt,
        CharacteristicMatrix::identity(),
        CharacteristicMatrix::minus_identity(),
    ] {
        assert!(u.rescale_l0(a, b).distance(&u) < 1e-12);
    }
    println!("criterion 09 PASS: L0 -> 3L0 rescale leaves spectra and bound energies unchanged; scale-invariant points are fixed");
}

#[test]
fn criterion_10_wall_decomposition() {
    let mut rng = SplitMix64::new(110);
    for _ in 0..1000 {
        let u = haar_characteristic(&mut rng);
        let (w, r) = u.decompose_wr();
        assert!(w.classify().omega_w, "W factor must be on the sphere");
        assert!(r.classify().omega_r, "R factor must be separated");
        let product = w.matrix().mul(&r.matrix());
        assert!(product.distance(&u.matrix()) < 1e-12, "product must reconstruct U");
    }
    println!("criterion 10 PASS: 1000 random interactions factor into sphere x wall with exact reconstruction");
}

#[test]
fn criterion_11_su2_representation() {
    use pointline::mat2::Vec2;
    use pointline::params::BoundaryVectors;
    let transforms = [
        (DiscreteTransform::P, 1usize),
        (DiscreteTransform::Q, 2),
        (DiscreteTransform::R, 3),
    ];
    let basis = [
        Vec2::new(C64::new(1.0, 0.0), C64::new(0.0, 0.0)),
        Vec2::new(C64::new(0.0, 0.0), C64::new(1.0, 0.0)),
    ];
    for &(ti, i) in &transforms {
        for &(tj, j) in &transforms {
            let mut on_phi = Mat2::zero();
            let mut on_dphi = Mat2::zero();
            for (col, e) in basis.iter().enumerate() {
                let bv = BoundaryVectors::new(*e, *e);
                let once = transform_boundary_vectors(&bv, tj).unwrap();
                let twice = transform_boundary_vectors(&once, ti).unwrap();
                on_phi.e[0][col] = twice.phi.x;
                on_phi.e[1][col] = twice.phi.y;
                on_dphi.e[0][col] = twice.dphi.x;
                on_dphi.e[1][col] = twice.dphi.y;
            }
            let expected = Mat2::pauli(i).mul(&Mat2::pauli(j));
            assert!(on_phi.distance(&expected) == 0.0, "sigma_{i} sigma_{j} on Phi");
            assert!(on_dphi.distance(&expected) == 0.0, "sigma_{i} sigma_{j} on Phi'");
        }
    }
    println!("criterion 11 PASS: all nine pairwise P/Q/R boundary-vector products equal the exact Pauli relations");
}

#[test]
fn criterion_12_susy_point() {
    let u = CharacteristicMatrix::minus_identity();
    let spec = first_levels(&u, BoxBoundary::Dirichlet, 1.0, l0(1.0), 10).unwrap();
    for (n, lv) in spec.levels.iter().enumerate() {
        let expected = (n as f64 + 1.0) * PI;
        assert!((lv.k - expected).abs() < 1e-12 * expected);
        assert_eq!(lv.multiplicity, 2, "SUSY spectrum must be doubly degenerate");
    }
    let report = susy_check(&u);
    assert!(report.is_witten_point);
    assert!(report.wavefunctions_vanish_at_origin);
    // no other self-dual point qualifies
    assert!(!susy_check(&CharacteristicMatrix::self_dual(PI / 3.0)).is_witten_point);
    println!("criterion 12 PASS: U = -I gives k_n = n pi doubly degenerate and is flagged as the Witten point");
}

#[test]
fn criterion_13_filter_behaviour() {
    let scale = l0(1.0);
    let grid: Vec<f64> = (0..400)
        .map(|i| 0.01 * (100.0f64 / 0.01).powf(i as f64 / 399.0))
        .collect();

    let delta = CharacteristicMatrix::from_parity_angles(2.0 * 5.0f64.atan(), PI);
    let p = filter_profile(&delta, scale, &grid).unwrap();
    assert_eq!(p.classification, FilterClass::HighPass);
    assert!(
        p.samples.windows(2).all(|w| w[1].1 >= w[0].1),
        "delta transmission must rise monotonically"
    );

    let eps = CharacteristicMatrix::from_parity_angles(0.0, 2.0 * (1.0f64 / 5.0).atan());
    let p = filter_profile(&eps, scale, &grid).unwrap();
    assert_eq!(p.classification, FilterClass::LowPass);
    assert!(
        p.samples.windows(2).all(|w| w[1].1 <= w[0].1),
        "epsilon transmission must fall monotonically"
    );

    // |t|^2 = 1/2 at kL0 = 1 for unit couplings
    let delta1 = CharacteristicMatrix::from_parity_angles(PI / 2.0, PI);
    let amp = amplitudes_global(&delta1, scale, 1.0).unwrap();
    assert!((amp.transmission() - 0.5).abs() < 1e-12);
    let eps1 = CharacteristicMatrix::from_parity_angles(0.0, PI / 2.0);
    let amp = amplitudes_global(&eps1, scale, 1.0).unwrap();
    assert!((amp.transmission() - 0.5).abs() < 1e-12);

    println!("criterion 13 PASS: delta(g=5) is a monotone high-pass, epsilon(g=5) a monotone low-pass, |t|^2 = 1/2 at kL0 = 1 for unit couplings");
}
