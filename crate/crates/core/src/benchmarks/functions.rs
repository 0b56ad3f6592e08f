//! Formulas of the benchmark suite. All are minimized; `x` may have any length ≥ 2
//! unless noted.

use std::f64::consts::{E, PI};

// ---------------------------------------------------------------- unimodal

/// f1 Brown.
pub fn brown(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| {
            let (a, b) = (w[0] * w[0], w[1] * w[1]);
            a.powf(b + 1.0) + b.powf(a + 1.0)
        })
        .sum()
}

/// f2 Dixon-Price.
pub fn dixon_price(x: &[f64]) -> f64 {
    let head = (x[0] - 1.0).powi(2);
    head + x
        .windows(2)
        .enumerate()
        .map(|(k, w)| (k + 2) as f64 * (2.0 * w[1] * w[1] - w[0]).powi(2))
        .sum::<f64>()
}

/// Minimizer of Dixon-Price: `x_i = 2^(2^(1-i) - 1)` for 1-based `i`.
pub fn dixon_price_minimizer(n: usize) -> Vec<f64> {
    (1..=n)
        .map(|i| 2f64.powf(2f64.powi(1 - i as i32) - 1.0))
        .collect()
}

/// f3 Powell singular 2, summed over 1-based `i = 2..=n-2`.
pub fn powell_singular2(x: &[f64]) -> f64 {
    let n = x.len();
    (2..n.saturating_sub(1))
        .map(|i| {
            // 1-based x_{i-1}, x_i, x_{i+1}, x_{i+2}
            let (a, b, c, d) = (x[i - 2], x[i - 1], x[i], x[i + 1]);
            (a + 10.0 * b).powi(2)
                + 5.0 * (c - d).powi(2)
                + (b - 2.0 * c).powi(4)
                + 10.0 * (a - d).powi(4)
        })
        .sum()
}

/// f4 Quartic without its noise term.
pub fn quartic_base(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(k, v)| (k + 1) as f64 * v.powi(4))
        .sum()
}

/// Constant standing in for the Quartic noise term.
pub const QUARTIC_FIXED_NOISE: f64 = 0.5;

/// f5 Rosenbrock.
pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (w[0] - 1.0).powi(2))
        .sum()
}

/// f6 Schwefel 1.2.
pub fn schwefel_1_2(x: &[f64]) -> f64 {
    let mut partial = 0.0;
    x.iter()
        .map(|v| {
            partial += v;
            partial * partial
        })
        .sum()
}

/// f7 Schwefel 2.20.
pub fn schwefel_2_20(x: &[f64]) -> f64 {
    x.iter().map(|v| v.abs()).sum()
}

/// f8 Schwefel 2.22.
pub fn schwefel_2_22(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let prod: f64 = x.iter().map(|v| v.abs()).product();
    sum + prod
}

/// f9 Sphere.
pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// f10 Step 2.
pub fn step2(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

/// f11 Sum squares.
pub fn sum_squares(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(k, v)| (k + 1) as f64 * v * v)
        .sum()
}

// -------------------------------------------------------------- multimodal

/// g1 Ackley.
pub fn ackley(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / n;
    let cs = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / n;
    -20.0 * (-0.2 * sq.sqrt()).exp() - cs.exp() + 20.0 + E
}

/// g2 Deb 1. Minima at `x_i = (2k + 1) / 10`.
pub fn deb1(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    -x.iter().map(|v| (5.0 * PI * v).sin().powi(6)).sum::<f64>() / n
}

/// g3 Drop wave.
pub fn drop_wave(x: &[f64]) -> f64 {
    let sq: f64 = x.iter().map(|v| v * v).sum();
    -(1.0 + (12.0 * sq.sqrt()).cos()) / (2.0 + 0.5 * sq)
}

/// g4 Griewank.
pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v * v).sum::<f64>() / 4000.0;
    let prod: f64 = x
        .iter()
        .enumerate()
        .map(|(k, v)| (v / ((k + 1) as f64).sqrt()).cos())
        .product();
    1.0 + sum - prod
}

/// g5 Levy. The middle sum runs over every coordinate and the tail term is
/// the bare `(w_n - 1)^2`.
pub fn levy(x: &[f64]) -> f64 {
    let w: Vec<f64> = x.iter().map(|v| 1.0 + (v - 1.0) / 4.0).collect();
    let first = (PI * w[0]).sin().powi(2);
    let middle: f64 = w
        .iter()
        .map(|wi| (wi - 1.0).powi(2) * (1.0 + 10.0 * (PI * wi + 1.0).sin().powi(2)))
        .sum();
    let last = (w[w.len() - 1] - 1.0).powi(2);
    first + middle + last
}

/// g6 Pathological, over consecutive pairs.
pub fn pathological(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            let num = (100.0 * a * a + b * b).sqrt().sin().powi(2) - 0.5;
            let den = 1.0 + 0.001 * (a - b).powi(4);
            0.5 + num / den
        })
        .sum()
}

fn penalty_u(x: f64, a: f64, k: f64, m: i32) -> f64 {
    if x > a {
        k * (x - a).powi(m)
    } else if x < -a {
        k * (-x - a).powi(m)
    } else {
        0.0
    }
}

/// g7 Penalty 2 with `u(x, 5, 100, 4)`.
pub fn penalty2(x: &[f64]) -> f64 {
    let n = x.len();
    let mut inner = (3.0 * PI * x[0]).sin().powi(2);
    inner += x
        .windows(2)
        .map(|w| (w[0] - 1.0).powi(2) * (1.0 + (3.0 * PI * w[1]).sin().powi(2)))
        .sum::<f64>();
    inner += (x[n - 1] - 1.0).powi(2) * (1.0 + (2.0 * PI * x[n - 1]).sin().powi(2));
    let penalty: f64 = x.iter().map(|&v| penalty_u(v, 5.0, 100.0, 4)).sum();
    0.1 * inner + penalty
}

/// g8 Pinter, with cyclic neighbours `x_0 = x_n` and `x_{n+1} = x_1`.
pub fn pinter(x: &[f64]) -> f64 {
    let n = x.len();
    let mut total = 0.0;
    for k in 0..n {
        let i = (k + 1) as f64;
        let prev = x[(k + n - 1) % n];
        let next = x[(k + 1) % n];
        let xi = x[k];
        let a = prev * xi.sin() + next.sin();
        let b = prev * prev - 2.0 * xi + 3.0 * next - xi.cos() + 1.0;
        total += i * xi * xi + 20.0 * i * a.sin().powi(2) + i * (1.0 + i * b * b).log10();
    }
    total
}

/// g9 Quintic. Minima at `-1` and `2` in every coordinate.
pub fn quintic(x: &[f64]) -> f64 {
    x.iter()
        .map(|&v| {
            let v2 = v * v;
            (v2 * v2 * v - 3.0 * v2 * v2 + 4.0 * v2 * v + 2.0 * v2 - 10.0 * v - 4.0).abs()
        })
        .sum()
}

/// g10 Salomon.
pub fn salomon(x: &[f64]) -> f64 {
    let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    1.0 - (2.0 * PI * r).cos() + 0.1 * r
}

/// g11 Sargan: `n Σ_i (x_i² + 0.4 Σ_{j≠i} x_i x_j)`.
pub fn sargan(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let total: f64 = x.iter().sum();
    n * x
        .iter()
        .map(|&v| v * v + 0.4 * v * (total - v))
        .sum::<f64>()
}

/// g12 Sinusoidal, arguments in degrees (`A = 2.5`, `B = 5`, `z = 30`).
/// Minimum `-3.5` at 120° in every coordinate.
pub fn sinusoidal(x: &[f64]) -> f64 {
    let (a, b, z) = (2.5, 5.0, 30.0);
    let p1: f64 = x.iter().map(|v| (v - z).to_radians().sin()).product();
    let p2: f64 = x.iter().map(|v| (b * (v - z)).to_radians().sin()).product();
    -(a * p1 + p2)
}

/// g13 Styblinski-Tang scaled by `1/(2n)`, so the minimum does not depend on `n`.
pub fn styblinski_tang(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    x.iter()
        .map(|&v| {
            let v2 = v * v;
            v2 * v2 - 16.0 * v2 + 5.0 * v
        })
        .sum::<f64>()
        / (2.0 * n)
}

/// Location of the one-dimensional Styblinski-Tang minimum.
pub const STYBLINSKI_TANG_ARGMIN: f64 = -2.903534;

// ---------------------------------------------- bases of the shifted suite

/// h1 Alpine 1.
pub fn alpine1(x: &[f64]) -> f64 {
    x.iter().map(|v| (v * v.sin() + 0.1 * v).abs()).sum()
}

/// h2 Bent cigar.
pub fn bent_cigar(x: &[f64]) -> f64 {
    x[0] * x[0] + 1e6 * x[1..].iter().map(|v| v * v).sum::<f64>()
}

/// h3 Bohachevsky.
pub fn bohachevsky(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|w| {
            let (a, b) = (w[0], w[1]);
            a * a + 2.0 * b * b - 0.3 * (3.0 * PI * a).cos() - 0.4 * (4.0 * PI * b).cos() + 0.7
        })
        .sum()
}

/// h4 Chung Reynolds.
pub fn chung_reynolds(x: &[f64]) -> f64 {
    sphere(x).powi(2)
}

/// h5 Csendes; the summand is 0 at `x_i = 0` (its limit).
pub fn csendes(x: &[f64]) -> f64 {
    x.iter()
        .map(|&v| {
            if v == 0.0 {
                0.0
            } else {
                v.powi(6) * (2.0 + (1.0 / v).sin())
            }
        })
        .sum()
}

/// h6 Ellipsoid, with weights `100^((i-1)/(n-1))` (all 1 when `n = 1`).
pub fn ellipsoid(x: &[f64]) -> f64 {
    let n = x.len();
    x.iter()
        .enumerate()
        .map(|(k, v)| {
            let e = if n > 1 {
                k as f64 / (n - 1) as f64
            } else {
                0.0
            };
            (100f64.powf(e) * v).powi(2)
        })
        .sum()
}

/// h7 Rastrigin.
pub fn rastrigin(x: &[f64]) -> f64 {
    x.iter()
        .map(|v| v * v - 10.0 * (2.0 * PI * v).cos() + 10.0)
        .sum()
}

/// h8 Sum of different powers.
pub fn sum_of_different_powers(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(k, v)| v.abs().powi(k as i32 + 2))
        .sum()
}

/// h9 Trigonometric 1.
pub fn trigonometric1(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    let cos_sum: f64 = x.iter().map(|v| v.cos()).sum();
    x.iter()
        .enumerate()
        .map(|(k, v)| {
            let i = (k + 1) as f64;
            (n - cos_sum + i * (1.0 - v.cos() - v.sin())).powi(2)
        })
        .sum()
}

/// h10 Wavy (`k = 10`).
pub fn wavy(x: &[f64]) -> f64 {
    let n = x.len() as f64;
    1.0 - x
        .iter()
        .map(|v| (10.0 * v).cos() * (-v * v / 2.0).exp())
        .sum::<f64>()
        / n
}

/// h11 Zakharov.
pub fn zakharov(x: &[f64]) -> f64 {
    let sq = sphere(x);
    let lin: f64 = 0.5
        * x.iter()
            .enumerate()
            .map(|(k, v)| (k + 1) as f64 * v)
            .sum::<f64>();
    sq + lin.powi(2) + lin.powi(4)
}
