use psa_core::benchmarks::{self, functions as fx, Modality, STYBLINSKI_TANG_MIN};
use psa_core::{Draw, Objective, RandomStream};

#[test]
fn every_function_attains_its_documented_optimum() {
    for dim in [2, 5, 30] {
        for id in benchmarks::suite_ids() {
            let f = benchmarks::get(id, dim).unwrap();
            let v = f.evaluate(f.optimum_position()).unwrap();
            assert!(
                (v - f.optimum_value()).abs() <= 1e-9,
                "{id} at n={dim}: {v} vs {}",
                f.optimum_value()
            );
        }
    }
}

#[test]
fn registry_shape() {
    let list = benchmarks::list_functions();
    assert_eq!(list.len(), 35);
    assert_eq!(benchmarks::ids_with_modality(Modality::Unimodal).len(), 11);
    assert_eq!(
        benchmarks::ids_with_modality(Modality::Multimodal).len(),
        13
    );
    assert_eq!(benchmarks::ids_with_modality(Modality::Shifted).len(), 11);
    assert!(benchmarks::get("f12", 30).is_err());
    assert!(benchmarks::get("f9", 1).is_err());
}

#[test]
fn dixon_price_minimizer_is_stationary() {
    let n = 8;
    let x = fx::dixon_price_minimizer(n);
    assert!(fx::dixon_price(&x).abs() < 1e-12);
    // each term 2 x_i^2 - x_{i-1} vanishes
    for i in 1..n {
        assert!((2.0 * x[i] * x[i] - x[i - 1]).abs() < 1e-12);
    }
}

#[test]
fn sinusoidal_grid_search_finds_120_degrees() {
    let f = benchmarks::get("g12", 30).unwrap();
    let (arg, best) = (0..=180)
        .map(|t| (t, f.evaluate(&vec![t as f64; 30]).unwrap()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap();
    assert_eq!(arg, 120);
    assert!((best + 3.5).abs() < 1e-9);
}

#[test]
fn styblinski_tang_minimum_matches_newton_root() {
    // root of d/dx (x^4 - 16x^2 + 5x) = 4x^3 - 32x + 5 near -2.9
    let mut x: f64 = -3.0;
    for _ in 0..50 {
        x -= (4.0 * x.powi(3) - 32.0 * x + 5.0) / (12.0 * x * x - 32.0);
    }
    let per_coordinate = (x.powi(4) - 16.0 * x * x + 5.0 * x) / 2.0;
    assert!((per_coordinate - STYBLINSKI_TANG_MIN).abs() < 1e-12);
    let f = benchmarks::get("g13", 30).unwrap();
    assert!((f.evaluate(&vec![x; 30]).unwrap() - STYBLINSKI_TANG_MIN).abs() < 1e-9);
}

#[test]
fn sargan_matches_double_sum() {
    let mut rng = RandomStream::new(3);
    for _ in 0..20 {
        let x: Vec<f64> = (0..7).map(|_| rng.uniform(-5.0, 5.0)).collect();
        let n = x.len();
        let mut naive = 0.0;
        for i in 0..n {
            let mut cross = 0.0;
            for j in 0..n {
                if j != i {
                    cross += x[i] * x[j];
                }
            }
            naive += n as f64 * (x[i] * x[i] + 0.4 * cross);
        }
        assert!((fx::sargan(&x) - naive).abs() <= 1e-9 * naive.abs().max(1.0));
    }
}

#[test]
fn schwefel_1_2_matches_prefix_sums() {
    let x = [1.0, -2.0, 3.0, 0.5];
    // prefixes 1, -1, 2, 2.5
    assert_eq!(fx::schwefel_1_2(&x), 1.0 + 1.0 + 4.0 + 6.25);
}

#[test]
fn random_points_are_finite() {
    let mut rng = RandomStream::new(11);
    for id in benchmarks::suite_ids() {
        let f = benchmarks::get(id, 30).unwrap();
        for _ in 0..20 {
            let x = f.search_space().sample(&mut rng);
            let v = f.evaluate(&x).unwrap();
            assert!(v.is_finite(), "{id} gave {v}");
            assert!(v >= f.optimum_value() - 1e-9, "{id} below its optimum: {v}");
        }
    }
}

#[test]
fn even_functions_are_sign_symmetric() {
    let mut rng = RandomStream::new(5);
    for id in ["f9", "f11", "g1", "g4", "h7"] {
        let f = benchmarks::get(id, 10).unwrap();
        for _ in 0..20 {
            let x = f.search_space().sample(&mut rng);
            let neg: Vec<f64> = x.iter().map(|v| -v).collect();
            assert_eq!(f.evaluate(&x).unwrap(), f.evaluate(&neg).unwrap(), "{id}");
        }
    }
}

#[test]
fn shifted_ids_equal_base_at_unit_offset() {
    let mut rng = RandomStream::new(9);
    for k in 1..=11 {
        let base = benchmarks::get(&format!("h{k}"), 6).unwrap();
        let shifted = benchmarks::get(&format!("h{k}s"), 6).unwrap();
        assert_eq!(shifted.modality(), Modality::Shifted);
        for _ in 0..10 {
            let x: Vec<f64> = (0..6).map(|_| rng.uniform(-2.0, 2.0)).collect();
            let moved: Vec<f64> = x.iter().map(|v| v - 1.0).collect();
            assert_eq!(shifted.value(&x), base.value(&moved));
        }
    }
}

#[test]
fn quartic_noise_modes() {
    use psa_core::benchmarks::QuarticNoise;
    let zero = vec![0.0; 4];
    let fixed = benchmarks::get("f4", 4).unwrap();
    assert_eq!(fixed.evaluate(&zero).unwrap(), 0.5);
    let live = fixed.clone().with_quartic_noise(QuarticNoise::Live);
    let mut rng = RandomStream::new(1);
    for _ in 0..100 {
        let v = live.value_with(&zero, &mut rng);
        assert!((0.0..1.0).contains(&v));
    }
}
