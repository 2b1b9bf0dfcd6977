use nalgebra::{Matrix2, Matrix4};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use swapsim_core::qubit::{spin_flip_eigenvalues, spin_flipped};
use swapsim_core::{concurrence_pure, concurrence_wootters, Complex64 as C64, DensityMatrix4, PureTwoQubitState};

fn random_state(rng: &mut impl Rng) -> PureTwoQubitState {
    let raw = [(); 4].map(|_| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    PureTwoQubitState::from_unnormalized(raw).unwrap()
}

fn random_su2(rng: &mut impl Rng) -> Matrix2<C64> {
    let v = [(); 4].map(|_| rng.random_range(-1.0f64..1.0));
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let a = C64::new(v[0] / n, v[1] / n);
    let b = C64::new(v[2] / n, v[3] / n);
    Matrix2::new(a, -b.conj(), b, a.conj())
}

fn kron(a: &Matrix2<C64>, b: &Matrix2<C64>) -> Matrix4<C64> {
    Matrix4::from_fn(|i, j| a[(i / 2, j / 2)] * b[(i % 2, j % 2)])
}

fn apply(u: &Matrix4<C64>, s: &PureTwoQubitState) -> PureTwoQubitState {
    let v = nalgebra::Vector4::from(s.amplitudes());
    let w = u * v;
    PureTwoQubitState::from_unnormalized([w[0], w[1], w[2], w[3]]).unwrap()
}

#[test]
fn pure_and_general_routes_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let s = random_state(&mut rng);
        let a = concurrence_pure(&s);
        let b = concurrence_wootters(&s.projector()).unwrap();
        assert!((a - b).abs() < 1e-8, "{a} vs {b}");
    }
}

#[test]
fn werner_family() {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let z = C64::new(0.0, 0.0);
    let bell = PureTwoQubitState::new([C64::new(h, 0.0), z, z, C64::new(h, 0.0)]).unwrap().projector();
    let singlet = PureTwoQubitState::new([z, C64::new(h, 0.0), C64::new(-h, 0.0), z]).unwrap().projector();
    for k in 0..=50 {
        let p = k as f64 / 50.0;
        let expect = ((3.0 * p - 1.0) / 2.0).max(0.0);
        for b in [&bell, &singlet] {
            let w = b.mix(&DensityMatrix4::maximally_mixed(), p).unwrap();
            let c = concurrence_wootters(&w).unwrap();
            assert!((c - expect).abs() < 1e-8, "p={p}: {c} vs {expect}");
        }
    }
}

#[test]
fn local_unitaries_leave_concurrence_unchanged() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..300 {
        let s = random_state(&mut rng);
        let u = kron(&random_su2(&mut rng), &random_su2(&mut rng));
        let t = apply(&u, &s);
        assert!((concurrence_pure(&s) - concurrence_pure(&t)).abs() < 1e-8);
        let cs = concurrence_wootters(&s.projector()).unwrap();
        let ct = concurrence_wootters(&t.projector()).unwrap();
        assert!((cs - ct).abs() < 1e-8);
    }
}

#[test]
fn mixed_states_invariant_under_local_unitaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let a = random_state(&mut rng).projector();
        let b = random_state(&mut rng).projector();
        let p = rng.random_range(0.0..1.0);
        let rho = a.mix(&b, p).unwrap();
        let u = kron(&random_su2(&mut rng), &random_su2(&mut rng));
        let rotated = DensityMatrix4::new(u * rho.matrix() * u.adjoint()).unwrap();
        let c1 = concurrence_wootters(&rho).unwrap();
        let c2 = concurrence_wootters(&rotated).unwrap();
        assert!((c1 - c2).abs() < 1e-8);
    }
}

#[test]
fn spin_flip_eigenvalues_sum_to_trace() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let a = random_state(&mut rng).projector();
        let b = random_state(&mut rng).projector();
        let c = random_state(&mut rng).projector();
        let rho = a.mix(&b, rng.random_range(0.0..1.0)).unwrap().mix(&c, rng.random_range(0.0..1.0)).unwrap();
        let lambdas = spin_flip_eigenvalues(&rho).unwrap();
        let tr = (rho.matrix() * spin_flipped(&rho)).trace();
        assert!(tr.im.abs() < 1e-12);
        assert!((lambdas.iter().sum::<f64>() - tr.re).abs() < 1e-10);
        assert!(lambdas.iter().all(|&l| l >= 0.0));
    }
}

proptest! {
    #[test]
    fn concurrence_in_unit_interval(v in proptest::array::uniform8(-1.0f64..1.0)) {
        prop_assume!(v.iter().map(|x| x * x).sum::<f64>() > 1e-3);
        let raw = [C64::new(v[0], v[1]), C64::new(v[2], v[3]), C64::new(v[4], v[5]), C64::new(v[6], v[7])];
        let s = PureTwoQubitState::from_unnormalized(raw).unwrap();
        let c = concurrence_pure(&s);
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert!((c - concurrence_wootters(&s.projector()).unwrap()).abs() < 1e-8);
    }
}
