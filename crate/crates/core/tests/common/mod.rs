//! Independent oracles for the integration tests. Nothing here calls into the
//! code paths it is used to check.
#![allow(dead_code)]

use std::collections::HashSet;
use std::f64::consts::PI;

/// Composite Simpson rule with `panels` (even) subintervals.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let n = panels + panels % 2;
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + h * i as f64);
    }
    s * h / 3.0
}

/// `-int_0^x log|2 sin t| dt` for `0 < x < pi`.
///
/// The endpoint logarithms are integrated in closed form; the smooth
/// remainder `log(sin t / (t (pi - t)))` by Simpson.
pub fn lobachevsky_by_quadrature(x: f64) -> f64 {
    assert!(x > 0.0 && x < PI);
    let smooth = |t: f64| {
        let sinc = if t == 0.0 { 1.0 } else { t.sin() / t };
        let u = PI - t;
        let sinc_u = if u == 0.0 { 1.0 } else { u.sin() / u };
        // sin t = sin(pi - t); use whichever side is better conditioned.
        if t < PI / 2.0 {
            (sinc / u).ln()
        } else {
            (sinc_u / t).ln()
        }
    };
    let log_t = x * x.ln() - x;
    let u = PI - x;
    let log_pi_minus_t = -u * u.ln() + u + PI * PI.ln() - PI;
    let g = simpson(smooth, 0.0, x, 4000);
    -(x * 2f64.ln() + log_t + log_pi_minus_t + g)
}

/// Order of the Coxeter group with labels `m[i][j]` (0 for infinity),
/// by breadth-first enumeration of its geometric representation.
/// Returns `None` when more than `cap` elements are found.
pub fn brute_force_order(m: &[Vec<u32>], cap: usize) -> Option<usize> {
    let n = m.len();
    let bilinear = |i: usize, j: usize| -> f64 {
        if i == j {
            1.0
        } else if m[i][j] == 0 {
            -1.0
        } else {
            -(PI / m[i][j] as f64).cos()
        }
    };
    // Reflection s_i as a matrix acting on coordinates in the basis e_k:
    // s_i(e_k) = e_k - 2 B(e_i, e_k) e_i.
    let gens: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut r = vec![0.0; n * n];
            for k in 0..n {
                r[k * n + k] = 1.0;
                r[i * n + k] -= 2.0 * bilinear(i, k);
            }
            r
        })
        .collect();
    let key = |mat: &[f64]| -> Vec<i64> { mat.iter().map(|&v| (v * 1e6).round() as i64).collect() };
    let mut identity = vec![0.0; n * n];
    for k in 0..n {
        identity[k * n + k] = 1.0;
    }
    let mut seen = HashSet::new();
    seen.insert(key(&identity));
    let mut frontier = vec![identity];
    while let Some(g) = frontier.pop() {
        for s in &gens {
            let mut prod = vec![0.0; n * n];
            for i in 0..n {
                for k in 0..n {
                    let a = s[i * n + k];
                    if a != 0.0 {
                        for j in 0..n {
                            prod[i * n + j] += a * g[k * n + j];
                        }
                    }
                }
            }
            if seen.insert(key(&prod)) {
                if seen.len() > cap {
                    return None;
                }
                frontier.push(prod);
            }
        }
    }
    Some(seen.len())
}

/// Closed form of `sinh w` from the Euclidean parameter.
pub fn sinh_w_3d(y: f64) -> f64 {
    let y2 = y * y;
    (y2 + 3.0) / ((y2 - 1.0) * (9.0 - y2)).sqrt()
}
