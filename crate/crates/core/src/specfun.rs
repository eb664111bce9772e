//! Lobachevsky function and Apéry's constant.
//!
//! Everything here is evaluated from rapidly convergent series; no quadrature
//! is involved, so the functions are cheap enough to sit inside the 5D
//! volume integrand.

use std::sync::OnceLock;

use crate::scalar::Real;

/// Number of terms kept in the Clausen power series. At the worst reduced
/// argument (theta = pi) term k is below 4^-k / (2k^2).
const CLAUSEN_TERMS: usize = 28;

/// `zeta(2k) / (k (2k + 1))`, k = 1..=CLAUSEN_TERMS.
fn clausen_coefficients() -> &'static [f64; CLAUSEN_TERMS] {
    static TABLE: OnceLock<[f64; CLAUSEN_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut out = [0.0; CLAUSEN_TERMS];
        for (i, c) in out.iter_mut().enumerate() {
            let k = (i + 1) as f64;
            *c = zeta_even(i + 1) / (k * (2.0 * k + 1.0));
        }
        out
    })
}

/// zeta(2k) for k >= 1, by direct summation with an Euler-Maclaurin tail.
fn zeta_even(k: usize) -> f64 {
    if k == 1 {
        return std::f64::consts::PI * std::f64::consts::PI / 6.0;
    }
    let s = 2.0 * k as f64;
    const N: usize = 64;
    // Sum small terms first.
    let mut sum = 0.0;
    for n in (2..N).rev() {
        sum += (n as f64).powf(-s);
    }
    let n = N as f64;
    let tail = n.powf(1.0 - s) / (s - 1.0) + 0.5 * n.powf(-s) + s / 12.0 * n.powf(-s - 1.0)
        - s * (s + 1.0) * (s + 2.0) / 720.0 * n.powf(-s - 3.0);
    1.0 + sum + tail
}

/// Clausen function `Cl_2(theta) = sum_{k>=1} sin(k theta) / k^2`.
pub fn clausen2<T: Real>(theta: T) -> T {
    let two_pi = T::PI() + T::PI();
    let mut r = theta - two_pi * (theta / two_pi).round();
    let negate = r < T::zero();
    if negate {
        r = -r;
    }
    let v = clausen2_reduced(r);
    if negate {
        -v
    } else {
        v
    }
}

/// Power series of `Cl_2` valid for `0 <= theta <= pi`:
/// `theta (1 - ln theta + sum_k zeta(2k)/(k(2k+1)) (theta / 2pi)^{2k})`.
fn clausen2_reduced<T: Real>(theta: T) -> T {
    if theta == T::zero() {
        return T::zero();
    }
    let u = {
        let q = theta / (T::PI() + T::PI());
        q * q
    };
    let mut power = T::one();
    let mut series = T::zero();
    for &c in clausen_coefficients() {
        power *= u;
        let term = T::lit(c) * power;
        series += term;
        if term < T::epsilon() * T::lit(1e-2) {
            break;
        }
    }
    theta * (T::one() - theta.ln() + series)
}

/// Lobachevsky function `L(x) = -int_0^x log|2 sin t| dt = Cl_2(2x) / 2`.
///
/// Odd and pi-periodic; the argument is reduced to `[0, pi/2]` before the
/// series is summed.
pub fn lobachevsky<T: Real>(x: T) -> T {
    let pi = T::PI();
    let mut r = x - pi * (x / pi).round();
    let negate = r < T::zero();
    if negate {
        r = -r;
    }
    let v = clausen2_reduced(r + r) / T::lit(2.0);
    if negate {
        -v
    } else {
        v
    }
}

/// Apéry's constant `zeta(3)`, from
/// `zeta(3) = 5/2 sum_{n>=1} (-1)^{n+1} / (n^3 C(2n, n))`.
pub fn zeta3<T: Real>() -> T {
    let mut sum = T::zero();
    let mut binom = T::lit(2.0);
    let mut n = T::one();
    let mut sign = T::one();
    for _ in 0..64 {
        let term = T::one() / (n * n * n * binom);
        sum += sign * term;
        if term < T::epsilon() * T::lit(1e-2) {
            break;
        }
        // C(2n+2, n+1) = C(2n, n) (2n+1)(2n+2) / (n+1)^2
        let two_n = n + n;
        binom =
            binom * (two_n + T::one()) * (two_n + T::lit(2.0)) / ((n + T::one()) * (n + T::one()));
        n += T::one();
        sign = -sign;
    }
    T::lit(2.5) * sum
}
