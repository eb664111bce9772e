//! Globally adaptive Gauss-Kronrod (7/15) quadrature.

#![allow(clippy::excessive_precision)]

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

// Kronrod abscissae on [0, 1); odd indices are the 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_5,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_48,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224,
    0.063_092_092_629_978_56,
    0.104_790_010_322_250_19,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_42,
    0.204_432_940_075_298_89,
    0.209_482_141_084_727_82,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_64,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

pub const DEFAULT_MAX_SUBDIVISIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult<T> {
    pub value: T,
    pub error_estimate: T,
    pub evaluations: usize,
    pub subintervals: usize,
}

struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

fn kronrod15<T: Real, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> (T, T) {
    let half = T::lit(0.5);
    let centre = half * (a + b);
    let radius = half * (b - a);
    let fc = f(centre);
    let mut kronrod = fc * T::lit(WGK[7]);
    let mut gauss = fc * T::lit(WG[3]);
    for j in 0..7 {
        let dx = radius * T::lit(XGK[j]);
        let pair = f(centre - dx) + f(centre + dx);
        kronrod += pair * T::lit(WGK[j]);
        if j % 2 == 1 {
            gauss += pair * T::lit(WG[j / 2]);
        }
    }
    (kronrod * radius, ((kronrod - gauss) * radius).abs())
}

/// Integrates `f` over `[a, b]` until the summed error estimate is below
/// `abs_tol`, bisecting the worst segment each step.
pub fn integrate<T, F>(
    mut f: F,
    a: T,
    b: T,
    abs_tol: T,
    max_subdivisions: usize,
) -> Result<QuadratureResult<T>>
where
    T: Real,
    F: FnMut(T) -> T,
{
    let (value, error) = kronrod15(&mut f, a, b);
    let mut segments = vec![Segment { a, b, value, error }];
    let mut evaluations = 15;
    loop {
        // Summed in interval order so results do not depend on split history.
        segments.sort_by(|s, t| s.a.partial_cmp(&t.a).unwrap_or(std::cmp::Ordering::Equal));
        let total = segments.iter().fold(T::zero(), |acc, s| acc + s.value);
        let err = segments.iter().fold(T::zero(), |acc, s| acc + s.error);
        if !total.is_finite() || !err.is_finite() {
            return Err(Error::QuadratureNotConverged {
                estimate: total.as_f64(),
                error_estimate: err.as_f64(),
            });
        }
        if err <= abs_tol {
            return Ok(QuadratureResult {
                value: total,
                error_estimate: err,
                evaluations,
                subintervals: segments.len(),
            });
        }
        if segments.len() >= max_subdivisions {
            return Err(Error::QuadratureNotConverged {
                estimate: total.as_f64(),
                error_estimate: err.as_f64(),
            });
        }
        let worst = segments
            .iter()
            .enumerate()
            .max_by(|x, y| {
                x.1.error
                    .partial_cmp(&y.1.error)
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .map(|(i, _)| i)
            .unwrap();
        let s = segments.swap_remove(worst);
        let mid = T::lit(0.5) * (s.a + s.b);
        let (v1, e1) = kronrod15(&mut f, s.a, mid);
        let (v2, e2) = kronrod15(&mut f, mid, s.b);
        evaluations += 30;
        segments.push(Segment {
            a: s.a,
            b: mid,
            value: v1,
            error: e1,
        });
        segments.push(Segment {
            a: mid,
            b: s.b,
            value: v2,
            error: e2,
        });
    }
}
