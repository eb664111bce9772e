//! Bounded scalar maximisation: coarse scan followed by golden-section
//! refinement inside the best scan bracket.

use serde::Serialize;

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Optimum<T> {
    pub argmax: T,
    pub value: T,
    /// Width of the final golden-section bracket.
    pub bracket: T,
    pub iterations: usize,
    pub evaluations: usize,
}

/// Maximises `f` on `[lo, hi]`.
///
/// The scan over `scan_points` equispaced nodes guards against a
/// non-unimodal `f`; golden section then refines the bracket around the best
/// node to width `tol`. An endpoint is returned exactly when it is at least as
/// good as the refined interior point.
pub fn maximize<T, F>(mut f: F, lo: T, hi: T, scan_points: usize, tol: T) -> Optimum<T>
where
    T: Real,
    F: FnMut(T) -> T,
{
    let n = scan_points.max(3);
    let step = (hi - lo) / T::from_usize(n - 1).unwrap();
    let node = |i: usize| {
        if i == n - 1 {
            hi
        } else {
            lo + step * T::from_usize(i).unwrap()
        }
    };
    let mut best = (0, f(lo));
    let mut evaluations = 1;
    for i in 1..n {
        let v = f(node(i));
        evaluations += 1;
        if v > best.1 {
            best = (i, v);
        }
    }
    let (i, _) = best;
    let mut a = node(i.saturating_sub(1));
    let mut b = node((i + 1).min(n - 1));

    let inv_phi = T::lit(0.618_033_988_749_894_8);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    evaluations += 2;
    let mut iterations = 0;
    while (b - a).abs() > tol && iterations < 500 {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        evaluations += 1;
        iterations += 1;
    }
    let mid = T::lit(0.5) * (a + b);
    let mut out = (mid, f(mid));
    evaluations += 1;
    for edge in [lo, hi] {
        if (edge - mid).abs() <= step + tol {
            let v = f(edge);
            evaluations += 1;
            if v >= out.1 {
                out = (edge, v);
            }
        }
    }
    Optimum {
        argmax: out.0,
        value: out.1,
        bracket: b - a,
        iterations,
        evaluations,
    }
}
