use lindkraus::linalg::{expm, expm_integral, hermitian_eigs, kron, unvec, vec};
use lindkraus::random::{random_density_matrix, random_model, rng, RandomModelSpec};
use lindkraus::{
    choi_matrix, jump_coefficients, kraus_from_choi, schema, solve, ComplexMatrix, LindbladModel,
    LinearMap, C64,
};
use ndarray::array;
use proptest::prelude::*;
use rand::Rng;

fn complex_matrix(n: usize, scale: f64) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-scale..scale, -scale..scale), n * n).prop_map(move |v| {
        ComplexMatrix::from_fn(n, n, |(i, j)| {
            let (re, im) = v[i * n + j];
            C64::new(re, im)
        })
        .unwrap()
    })
}

fn model_strategy() -> impl Strategy<Value = LindbladModel> {
    (2usize..=6, 1usize..=3, any::<u64>()).prop_map(|(n, ch, seed)| {
        let spec = RandomModelSpec::new(n, ch.min(n * (n - 1)));
        random_model(&mut rng(seed), &spec).unwrap()
    })
}

/// Composite Simpson rule for `∫₀ᵗ e^{Ms} ds`.
fn simpson(m: &ComplexMatrix, t: f64, intervals: usize) -> ComplexMatrix {
    let h = t / intervals as f64;
    let mut acc = ComplexMatrix::zeros(m.rows(), m.cols());
    for k in 0..=intervals {
        let w = if k == 0 || k == intervals {
            1.0
        } else if k % 2 == 1 {
            4.0
        } else {
            2.0
        };
        acc = acc
            .add(
                &expm(m, k as f64 * h)
                    .unwrap()
                    .scale(C64::new(w * h / 3.0, 0.0))
                    .unwrap(),
            )
            .unwrap();
    }
    acc
}

#[test]
fn integral_of_singular_defective_generator_matches_quadrature() {
    let gamma = 0.8;
    let g0 = ComplexMatrix::from_real(
        &(array![[0.0, 1.0, 0.0], [0.0, -1.0, 1.0], [0.0, 0.0, -1.0]] * gamma),
    )
    .unwrap();
    for t in [0.1, 1.0, 3.0] {
        let exact = expm_integral(&g0, t).unwrap();
        assert!(exact.max_abs_diff(&simpson(&g0, t, 400)) <= 1e-9, "t = {t}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vec_round_trip(m in complex_matrix(4, 3.0)) {
        prop_assert_eq!(unvec(&vec(&m).unwrap(), 4).unwrap(), m);
    }

    #[test]
    fn vec_of_product(x in complex_matrix(3, 1.0), rho in complex_matrix(3, 1.0), y in complex_matrix(3, 1.0)) {
        let lhs = vec(&x.matmul(&rho).unwrap().matmul(&y).unwrap()).unwrap();
        let rhs = kron(&y.transpose(), &x).as_array().dot(&vec(&rho).unwrap());
        let diff = (&lhs - &rhs).iter().fold(0.0f64, |a, z| a.max(z.norm()));
        prop_assert!(diff < 1e-13);
    }

    #[test]
    fn exponential_semigroup(a in complex_matrix(4, 1.0), s in 0.0f64..3.0, t in 0.0f64..3.0) {
        let whole = expm(&a, s + t).unwrap();
        let parts = expm(&a, s).unwrap().matmul(&expm(&a, t).unwrap()).unwrap();
        prop_assert!(whole.max_abs_diff(&parts) <= 1e-11 * whole.max_norm().max(1.0));
    }

    #[test]
    fn integral_derivative_is_the_exponential(a in complex_matrix(3, 1.0), t in 0.1f64..2.0) {
        let h = 1e-4;
        let forward = expm_integral(&a, t + h).unwrap();
        let backward = expm_integral(&a, t - h).unwrap();
        let derivative = forward.sub(&backward).unwrap().scale(C64::new(0.5 / h, 0.0)).unwrap();
        let e = expm(&a, t).unwrap();
        prop_assert!(derivative.max_abs_diff(&e) <= 1e-6 * e.max_norm().max(1.0));
    }

    #[test]
    fn integral_matches_quadrature(a in complex_matrix(3, 1.0), t in 0.0f64..1.5) {
        let exact = expm_integral(&a, t).unwrap();
        prop_assert!(exact.max_abs_diff(&simpson(&a, t, 200)) <= 1e-9);
    }

    #[test]
    fn hermitian_reconstruction(b in complex_matrix(5, 2.0)) {
        let m = b.add(&b.adjoint()).unwrap();
        let (values, vectors) = hermitian_eigs(&m).unwrap();
        prop_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        let diag = ComplexMatrix::from_diag(&values.iter().map(|&v| C64::new(v, 0.0)).collect::<Vec<_>>()).unwrap();
        let rebuilt = vectors.matmul(&diag).unwrap().matmul(&vectors.adjoint()).unwrap();
        prop_assert!(rebuilt.max_abs_diff(&m) < 1e-12);
    }

    #[test]
    fn jump_coefficients_are_nonnegative(model in model_strategy(), t in 0.0f64..20.0) {
        let c = jump_coefficients(&model, t).unwrap();
        prop_assert!(c.iter().all(|(_, v)| v >= 0.0));
    }

    #[test]
    fn evolution_semigroup(model in model_strategy(), s in 0.0f64..5.0, t in 0.0f64..5.0, seed in any::<u64>()) {
        let rho0 = random_density_matrix(&mut rng(seed), model.dim()).unwrap();
        let direct = solve(&model, s + t).unwrap().apply(rho0.matrix()).unwrap();
        let mid = solve(&model, s).unwrap().apply(rho0.matrix()).unwrap();
        let composed = solve(&model, t).unwrap().apply(&mid).unwrap();
        prop_assert!(direct.max_abs_diff(&composed) <= 1e-10);
    }

    #[test]
    fn choi_kraus_reproduces_the_map(model in model_strategy(), t in 0.0f64..5.0, seed in any::<u64>()) {
        let map = solve(&model, t).unwrap();
        let kraus = kraus_from_choi(&choi_matrix(&map).unwrap()).unwrap();
        prop_assert!(kraus.completeness_residual() <= 1e-10);
        let mut r = rng(seed);
        let x = ComplexMatrix::from_fn(model.dim(), model.dim(), |_| C64::new(r.random(), r.random())).unwrap();
        prop_assert!(kraus.apply(&x).unwrap().max_abs_diff(&map.apply(&x).unwrap()) <= 1e-10);
    }

    #[test]
    fn model_json_round_trip(model in model_strategy()) {
        prop_assert_eq!(schema::parse_model(&schema::model_to_json(&model)).unwrap(), model);
    }
}
