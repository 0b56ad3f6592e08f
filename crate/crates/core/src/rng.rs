//! Seeded random stream shared by every stochastic step of a run.
//!
//! The seed to sequence mapping is frozen:
//!
//! * the raw generator is ChaCha8 keyed with `ChaCha8Rng::seed_from_u64(seed)`
//!   (rand_chacha 0.3, which expands the `u64` with PCG32);
//! * a unit draw takes the top 53 bits of one `u64`: `(w >> 11) * 2^-53`;
//! * `uniform(a, b)` is `a + (b - a) * unit`, nudged below `b` if rounding lands on it;
//! * `integer(lo, hi)` rejects words below `2^64 mod span` and returns
//!   `lo + w mod span`;
//! * `normal()` is the cosine branch of Box-Muller on two unit draws
//!   (`u1` mapped to `(0, 1]`), with no cached second variate.
//!
//! Anything that changes one of these rules changes every recorded trace.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// The three draw kinds the algorithm needs.
///
/// Operators are generic over this trait so tests can script the draws.
pub trait Draw {
    /// Uniform real on `[low, high)`.
    fn uniform(&mut self, low: f64, high: f64) -> f64;
    /// Uniform integer on the inclusive range `low..=high`.
    fn integer(&mut self, low: usize, high: usize) -> usize;
    /// Standard normal variate.
    fn normal(&mut self) -> f64;
}

#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn unit(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.inner.next_u64() >> 11) as f64 * SCALE
    }
}

impl Draw for RandomStream {
    fn uniform(&mut self, low: f64, high: f64) -> f64 {
        debug_assert!(low < high, "empty interval [{low}, {high})");
        let x = low + (high - low) * self.unit();
        if x < high {
            x
        } else {
            high.next_down()
        }
    }

    fn integer(&mut self, low: usize, high: usize) -> usize {
        assert!(low <= high, "empty integer range {low}..={high}");
        let span = (high - low) as u64 + 1;
        if span == 0 {
            // low..=high covers all of u64
            return self.inner.next_u64() as usize;
        }
        let threshold = span.wrapping_neg() % span;
        loop {
            let w = self.inner.next_u64();
            if w >= threshold {
                return low + (w % span) as usize;
            }
        }
    }

    fn normal(&mut self) -> f64 {
        let u1 = 1.0 - self.unit();
        let u2 = self.unit();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_sequence() {
        let mut a = RandomStream::new(99);
        let mut b = RandomStream::new(99);
        for _ in 0..1000 {
            assert_eq!(
                a.uniform(-2.0, 2.0).to_bits(),
                b.uniform(-2.0, 2.0).to_bits()
            );
            assert_eq!(a.integer(2, 50), b.integer(2, 50));
            assert_eq!(a.normal().to_bits(), b.normal().to_bits());
        }
    }

    #[test]
    fn different_seeds_diverge() {
        let mut a = RandomStream::new(1);
        let mut b = RandomStream::new(2);
        let same = (0..100)
            .filter(|_| a.uniform(0.0, 1.0) == b.uniform(0.0, 1.0))
            .count();
        assert!(same < 5);
    }

    #[test]
    fn draws_stay_in_range() {
        let mut rng = RandomStream::new(3);
        for _ in 0..10_000 {
            let u = rng.uniform(-2.0, 2.0);
            assert!((-2.0..2.0).contains(&u));
            let k = rng.integer(2, 5);
            assert!((2..=5).contains(&k));
            assert!(rng.normal().is_finite());
        }
        assert_eq!(rng.integer(4, 4), 4);
    }

    #[test]
    fn integer_hits_every_value() {
        let mut rng = RandomStream::new(11);
        let mut seen = [0usize; 6];
        for _ in 0..6000 {
            seen[rng.integer(0, 5)] += 1;
        }
        assert!(seen.iter().all(|&c| (800..1200).contains(&c)), "{seen:?}");
    }

    #[test]
    fn normal_moments() {
        let mut rng = RandomStream::new(5);
        let n = 100_000;
        let xs: Vec<f64> = (0..n).map(|_| rng.normal()).collect();
        let mean = xs.iter().sum::<f64>() / n as f64;
        let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n as f64;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }

    // Pins the frozen mapping; a failure here means recorded traces are invalid.
    #[test]
    fn frozen_sequence_for_seed_zero() {
        let mut rng = RandomStream::new(0);
        let u: Vec<f64> = (0..3).map(|_| rng.uniform(0.0, 1.0)).collect();
        assert_eq!(
            u,
            [0.7090754154265618, 0.46592172228961015, 0.6991432426747317]
        );
        let k: Vec<usize> = (0..3).map(|_| rng.integer(1, 50)).collect();
        assert_eq!(k, [7, 32, 42]);
        assert_eq!(rng.normal(), 1.7267872203439736);
        assert_eq!(rng.normal(), 1.0210461612753656);
    }
}
