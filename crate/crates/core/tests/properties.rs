use proptest::prelude::*;

use psa_core::benchmarks;
use psa_core::objective::FnObjective;
use psa_core::operators::{
    self, OperatorKind, OperatorProbabilities, ProbabilityMode, SigmaDenominator,
};
use psa_core::population::merge_and_truncate;
use psa_core::psa::{run, RunConfig};
use psa_core::{Candidate, Population, RandomStream, SearchSpace};

fn population_strategy() -> impl Strategy<Value = Population> {
    (10usize..30, 2usize..6).prop_flat_map(|(n, d)| {
        proptest::collection::vec(
            (proptest::collection::vec(-50.0f64..50.0, d), -1e3f64..1e3),
            n,
        )
        .prop_map(|rows| {
            Population::from_members(
                rows.into_iter()
                    .map(|(p, v)| Candidate::evaluated(p, v))
                    .collect(),
            )
            .unwrap()
        })
    })
}

fn bounding_box(pop: &Population) -> (Vec<f64>, Vec<f64>) {
    let d = pop.dimension();
    let mut lo = vec![f64::INFINITY; d];
    let mut hi = vec![f64::NEG_INFINITY; d];
    for c in pop.members() {
        for j in 0..d {
            lo[j] = lo[j].min(c.position[j]);
            hi[j] = hi[j].max(c.position[j]);
        }
    }
    (lo, hi)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn probabilities_stay_normalized(
        n in 10usize..80,
        steps in proptest::collection::vec((0usize..3, any::<bool>()), 0..400),
    ) {
        let mut p = OperatorProbabilities::adaptive(n).unwrap();
        for (op, failed) in steps {
            p.depression_update(OperatorKind::ALL[op], failed).unwrap();
            let a = p.as_array();
            prop_assert!((a.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            prop_assert!(a.iter().all(|&v| (0.0..=1.0).contains(&v)));
        }
        p.reset().unwrap();
        for v in p.as_array() {
            prop_assert!((v - 1.0 / 3.0).abs() <= 1e-15);
        }
    }

    #[test]
    fn spp_stays_in_population_box(pop in population_strategy(), seed in any::<u64>()) {
        let (lo, hi) = bounding_box(&pop);
        let mut rng = RandomStream::new(seed);
        for _ in 0..20 {
            let x = operators::spp_generate(&pop, &mut rng);
            for j in 0..x.len() {
                prop_assert!(lo[j] <= x[j] && x[j] <= hi[j]);
                prop_assert!(pop.members().iter().any(|c| c.position[j] == x[j]));
            }
        }
    }

    #[test]
    fn sop_uses_top_pattern_and_keeps_anchor(pop in population_strategy(), seed in any::<u64>()) {
        let mut rng = RandomStream::new(seed);
        let top = operators::pattern_set_size(pop.len());
        for _ in 0..20 {
            let s = operators::sop_sample(&pop, &mut rng);
            prop_assert!(s.pattern < top);
            let p = &pop.member(s.pattern).position;
            prop_assert_eq!(s.position[s.anchor], p[s.anchor]);
            for k in 0..p.len() {
                // |x'_k - p_a| <= 2 |p_k - p_a| up to rounding
                let bound = 2.0 * (p[k] - p[s.anchor]).abs();
                prop_assert!((s.position[k] - p[s.anchor]).abs() <= bound * (1.0 + 1e-12) + 1e-12);
            }
        }
    }

    #[test]
    fn oop_collapses_when_top_ranks_coincide(pop in population_strategy(), seed in any::<u64>()) {
        let best = pop.best().position.clone();
        let members: Vec<Candidate> = pop
            .members()
            .iter()
            .enumerate()
            .map(|(i, c)| Candidate::evaluated(if i < 2 { best.clone() } else { c.position.clone() }, c.value.unwrap()))
            .collect();
        let pop = Population::from_members(members).unwrap();
        let mut rng = RandomStream::new(seed);
        let x = operators::oop_sample(&pop, 2, SigmaDenominator::PopulationMinusOne, &mut rng);
        prop_assert_eq!(x, best);
    }

    #[test]
    fn merge_is_elitist_and_sorted(
        pop in population_strategy(),
        newcomer_values in proptest::collection::vec(-2e3f64..2e3, 30),
    ) {
        let n = pop.len();
        let d = pop.dimension();
        let newcomers: Vec<Candidate> = newcomer_values[..n]
            .iter()
            .map(|&v| Candidate::evaluated(vec![0.0; d], v))
            .collect();
        let mut all: Vec<f64> = pop.values().chain(newcomer_values[..n].iter().copied()).collect();
        all.sort_by(f64::total_cmp);
        let before = pop.best_value();
        let merged = merge_and_truncate(pop, newcomers).unwrap();
        prop_assert_eq!(merged.len(), n);
        prop_assert!(merged.best_value() <= before);
        let got: Vec<f64> = merged.values().collect();
        prop_assert_eq!(&got[..], &all[..n]);
    }

    #[test]
    fn shift_identity(k in 1usize..=11, x in proptest::collection::vec(-3.0f64..3.0, 2..8)) {
        let n = x.len();
        let base = benchmarks::get(&format!("h{k}"), n).unwrap();
        let shifted = benchmarks::get(&format!("h{k}s"), n).unwrap();
        let moved: Vec<f64> = x.iter().map(|v| v - 1.0).collect();
        prop_assert_eq!(shifted.evaluate(&x).unwrap(), base.evaluate(&moved).unwrap());
    }

    #[test]
    fn best_trace_never_increases(seed in any::<u64>(), adaptive in any::<bool>()) {
        let space = SearchSpace::uniform(4, -5.0, 5.0).unwrap();
        let f = FnObjective::new("rastrigin4", space, |x: &[f64]| {
            x.iter().map(|v| v * v - 10.0 * (2.0 * std::f64::consts::PI * v).cos() + 10.0).sum()
        });
        let cfg = RunConfig {
            population_size: 10,
            dimension: 4,
            max_iterations: 30,
            seed,
            probability_mode: if adaptive { ProbabilityMode::Adaptive } else { ProbabilityMode::Fixed },
            ..RunConfig::default()
        };
        let r = run(&cfg, &f).unwrap();
        prop_assert!(r.best_trace.windows(2).all(|w| w[1] <= w[0]));
        prop_assert_eq!(r.nfe, 10 * 31);
        prop_assert_eq!(*r.best_trace.last().unwrap(), r.best_value);
    }
}
