use proptest::prelude::*;

use twoqubit::bloch::{
    from_bloch, partial_transpose, partial_transpose_a, partial_transpose_bloch, to_bloch,
};
use twoqubit::chain::{chain_lambda_min, critical_noise, max_transfer_distance};
use twoqubit::linalg::{eig_hermitian_oracle, kron, Matrix2};
use twoqubit::sample::{bloch_box, ginibre_density, haar_pure, hermitian_trace_one, shard_rng};
use twoqubit::separability::{peres_test, pure_pt_spectrum};
use twoqubit::spectrum::{
    centered_from_traces, coeffs_from_bloch, coeffs_from_traces, eigenvalues,
    quartic_eigs_centered, resolvent, trig_params,
};
use twoqubit::{Complex, TransferDistance};

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn matrix2(seed: u64) -> Matrix2 {
    let mut rng = shard_rng(seed, 9);
    Matrix2::from_fn(|_, _| twoqubit::sample::complex_gaussian(&mut rng))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn bloch_round_trip(seed in any::<u64>()) {
        let t = bloch_box(&mut shard_rng(seed, 0));
        let back = to_bloch(&from_bloch(&t)).unwrap();
        prop_assert!(back.max_abs_diff(&t) < 1e-14);
    }

    #[test]
    fn purity_matches_bloch_norm(seed in any::<u64>()) {
        let rho = ginibre_density(&mut shard_rng(seed, 0));
        let direct = coeffs_from_traces(rho.matrix()).unwrap().tr2;
        prop_assert!((rho.bloch().purity() - direct).abs() < 1e-14);
    }

    #[test]
    fn partial_transpose_commutes_with_bloch_map(seed in any::<u64>()) {
        let t = bloch_box(&mut shard_rng(seed, 0));
        let lhs = partial_transpose(&from_bloch(&t));
        let rhs = from_bloch(&partial_transpose_bloch(&t));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-15);
    }

    #[test]
    fn transposed_side_does_not_matter(seed in any::<u64>()) {
        let rho = ginibre_density(&mut shard_rng(seed, 0));
        let a = eig_hermitian_oracle(&partial_transpose_a(rho.matrix())).unwrap();
        let b = eig_hermitian_oracle(&partial_transpose(rho.matrix())).unwrap();
        prop_assert!(max_diff(&a, &b) < 1e-13);
        let c = coeffs_from_traces(&partial_transpose_a(rho.matrix())).unwrap();
        let d = coeffs_from_traces(&partial_transpose(rho.matrix())).unwrap();
        prop_assert!(c.max_abs_diff(&d) < 1e-15);
    }

    #[test]
    fn kron_mixed_product(s in any::<u64>()) {
        let (a, b, c, d) = (matrix2(s), matrix2(s ^ 1), matrix2(s ^ 2), matrix2(s ^ 3));
        let lhs = kron(&a, &b) * kron(&c, &d);
        let rhs = kron(&(a * c), &(b * d));
        let scale = lhs.frobenius_norm().max(1.0);
        prop_assert!(lhs.max_abs_diff(&rhs) <= 1e-13 * scale);
    }

    #[test]
    fn symmetric_functions_match_coefficients(seed in any::<u64>()) {
        let m = hermitian_trace_one(&mut shard_rng(seed, 0));
        let c = coeffs_from_traces(&m).unwrap();
        let l = eigenvalues(&m).unwrap().lambdas;
        let e1: f64 = l.iter().sum();
        let mut e2 = 0.0;
        let mut e3 = 0.0;
        for i in 0..4 {
            for j in i + 1..4 {
                e2 += l[i] * l[j];
                for k in j + 1..4 {
                    e3 += l[i] * l[j] * l[k];
                }
            }
        }
        let e4: f64 = l.iter().product();
        prop_assert!((e1 - 1.0).abs() < 1e-14);
        prop_assert!((e2 - c.b2).abs() < 1e-14);
        prop_assert!((e3 + c.b1).abs() < 1e-14);
        prop_assert!((e4 - c.b0).abs() < 1e-14);
    }

    #[test]
    fn coefficient_paths_agree(seed in any::<u64>()) {
        let t = bloch_box(&mut shard_rng(seed, 0));
        let direct = coeffs_from_traces(&from_bloch(&t)).unwrap();
        prop_assert!(coeffs_from_bloch(&t).max_abs_diff(&direct) < 1e-13);
        let x = centered_from_traces(&from_bloch(&t)).unwrap();
        prop_assert!(x.to_char().max_abs_diff(&direct) < 1e-13);
    }

    #[test]
    fn real_spectrum_bounds_the_resolvent(seed in any::<u64>()) {
        let m = hermitian_trace_one(&mut shard_rng(seed, 0));
        let c = coeffs_from_traces(&m).unwrap();
        let (c1, c2) = resolvent(&c).unwrap();
        // A real spectrum needs |c₂| ≤ 2c₁³.
        prop_assert!(c2.abs() <= 2.0 * c1.powi(3) * (1.0 + 1e-9) + 1e-15);
        let p = trig_params(&c).unwrap();
        let cos3 = (3.0 * p.phi).cos();
        prop_assert!((cos3 - c2 / (2.0 * c1.powi(3))).abs() < 1e-9);
        prop_assert!((0.0..=std::f64::consts::FRAC_PI_3 + 1e-15).contains(&p.phi));
    }

    #[test]
    fn centered_solver_matches_oracle(seed in any::<u64>()) {
        let m = hermitian_trace_one(&mut shard_rng(seed, 0));
        let x = centered_from_traces(&m).unwrap();
        let s = quartic_eigs_centered(&x).unwrap();
        prop_assert!(max_diff(&s.lambdas, &eig_hermitian_oracle(&m).unwrap()) < 1e-12);
    }

    #[test]
    fn pure_pt_spectrum_matches_verdict(seed in any::<u64>()) {
        let psi = haar_pure(&mut shard_rng(seed, 0));
        let want = pure_pt_spectrum(&psi);
        let r = peres_test(&psi.density()).unwrap();
        prop_assert!(max_diff(&r.pt_spectrum, &want) < 1e-12);
        prop_assert_eq!(r.separable, psi.q() <= twoqubit::tol::SEPARABILITY);
    }

    #[test]
    fn chain_entanglement_only_decays(q in 0.0..=0.5f64, eps in 1e-3..0.5f64, n in 0u32..200) {
        let a = chain_lambda_min(q, eps, n).unwrap();
        let b = chain_lambda_min(q, eps, n + 1).unwrap();
        prop_assert!(b >= a);
        prop_assert!(b <= 0.25);
    }

    #[test]
    fn transfer_distance_brackets_the_sign_change(q in 1e-3..=0.5f64, eps in 1e-3..0.9f64) {
        let tau = twoqubit::tol::SEPARABILITY;
        match max_transfer_distance(q, eps).unwrap() {
            TransferDistance::Finite(n) => {
                if n > 0 {
                    prop_assert!(chain_lambda_min(q, eps, n).unwrap() < -tau);
                }
                prop_assert!(chain_lambda_min(q, eps, n + 1).unwrap() >= -tau);
            }
            TransferDistance::Unbounded => prop_assert!(false, "eps > 0 is bounded"),
        }
    }

    #[test]
    fn critical_noise_zeroes_lambda_min(q in 1e-3..=0.5f64, n in 1u32..100) {
        let eps = critical_noise(q, n).unwrap();
        prop_assert!(chain_lambda_min(q, eps, n).unwrap().abs() < 1e-14);
    }
}

#[test]
fn cos_phi_identity_on_a_grid() {
    // cos φ as the real part of the principal cube root of (c₂ + i√(4c₁⁶ − c₂²))/(2c₁³).
    let mut worst = 0.0_f64;
    for k in 0..1000 {
        let r = -1.0 + 2.0 * k as f64 / 999.0;
        let z = Complex::new(r, (1.0 - r * r).max(0.0).sqrt());
        let cube_root = z.powf(1.0 / 3.0);
        let phi = r.acos() / 3.0;
        worst = worst.max((cube_root.re - phi.cos()).abs());
    }
    assert!(worst < 1e-15, "{worst:e}");
}
