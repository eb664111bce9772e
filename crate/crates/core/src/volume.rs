//! Volumes of truncated orthoschemes, hyperball lenses and truncation faces.

use serde::Serialize;

use crate::coxeter::{gauss_bonnet_volume_4d, CoxeterGraph};
use crate::error::{Error, Result};
use crate::quadrature::{integrate, QuadratureResult, DEFAULT_MAX_SUBDIVISIONS};
use crate::scalar::Real;
use crate::specfun::{lobachevsky, zeta3};

/// Orthoschemes per truncated regular tetrahedron (|S_4|).
pub const ORTHOSCHEMES_3D: usize = 24;
/// Orthoschemes per truncated regular 5-simplex (|S_6|).
pub const ORTHOSCHEMES_5D: usize = 720;
/// Orthoschemes per truncation face of the 3D tile (|S_3|).
pub const FACE_ORTHOSCHEMES_3D: usize = 6;
/// Orthoschemes per truncation facet of the 5D tile (|S_5|, the symmetry
/// group of the regular 4-simplex).
pub const FACET_ORTHOSCHEMES_5D: usize = 120;

/// Essential angles and truncation degree of an orthoscheme.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthoschemeSpec<T> {
    pub angles: Vec<T>,
    pub truncation_degree: u8,
}

impl<T: Real> OrthoschemeSpec<T> {
    /// `[p, 3, 3]`: angles `(pi/p, pi/3, pi/3)`, truncated at the last vertex.
    pub fn family_3d(p: T) -> Self {
        let pi = T::PI();
        let three = T::lit(3.0);
        Self {
            angles: vec![pi / p, pi / three, pi / three],
            truncation_degree: 1,
        }
    }

    /// `[5, 3, 3, 3, 3]`.
    pub fn family_5d() -> Self {
        let pi = T::PI();
        let mut angles = vec![pi / T::lit(5.0)];
        angles.extend(std::iter::repeat_n(pi / T::lit(3.0), 4));
        Self {
            angles,
            truncation_degree: 1,
        }
    }

    pub fn dimension(&self) -> usize {
        self.angles.len()
    }

    /// Volume for the dimensions this crate supports. In 5D only the
    /// `[5,3,3,3,3]` family is available.
    pub fn volume(&self) -> Result<T> {
        match self.angles.as_slice() {
            &[a, b, c] => orthoscheme_volume_3d(a, b, c),
            _ if *self == Self::family_5d() => {
                orthoscheme_volume_5d(T::quadrature_tol()).map(|r| r.value)
            }
            _ => Err(Error::InvalidRank {
                expected: 3,
                actual: self.dimension(),
            }),
        }
    }
}

/// Parameter `theta` of the 3D volume formula,
/// `tan theta = sqrt(cos^2 a12 - sin^2 a01 sin^2 a23) / (cos a01 cos a23)`.
fn volume_theta<T: Real>(a01: T, a12: T, a23: T) -> Result<T> {
    let c12 = a12.cos();
    let s01 = a01.sin();
    let s23 = a23.sin();
    let radicand = c12 * c12 - s01 * s01 * s23 * s23;
    if radicand < T::zero() {
        return Err(Error::ThetaNotReal {
            radicand: radicand.as_f64(),
        });
    }
    Ok(radicand.sqrt().atan2(a01.cos() * a23.cos()))
}

/// Volume of a 3D complete (possibly simply truncated) orthoscheme with
/// essential angles `a01, a12, a23`.
pub fn orthoscheme_volume_3d<T: Real>(a01: T, a12: T, a23: T) -> Result<T> {
    let theta = volume_theta(a01, a12, a23)?;
    let half_pi = T::FRAC_PI_2();
    let l = lobachevsky::<T>;
    let sum = l(a01 + theta) - l(a01 - theta)
        + l(half_pi + a12 - theta)
        + l(half_pi - a12 - theta)
        + l(a23 + theta)
        - l(a23 - theta)
        + T::lit(2.0) * l(half_pi - theta);
    Ok(sum / T::lit(4.0))
}

/// Angle `beta(t) = arctan sqrt(2 - cot^2 t)` of the compact tetrahedron
/// `[5, 3, beta(t)]` along the Schläfli integration path.
pub fn schlafli_beta<T: Real>(t: T) -> T {
    let cot = t.tan().recip();
    (T::lit(2.0) - cot * cot).max(T::zero()).sqrt().atan()
}

/// Volume of `[5, 3, beta(t)]` via the specialised Lobachevsky combination.
pub fn tetrahedron_volume_along_path<T: Real>(t: T) -> T {
    let pi = T::PI();
    let beta = schlafli_beta(t);
    let a = pi / T::lit(5.0);
    let sin_a = a.sin();
    let sin_b = beta.sin();
    let num = (T::one() - T::lit(4.0) * sin_a * sin_a * sin_b * sin_b)
        .max(T::zero())
        .sqrt();
    let theta = num.atan2(T::lit(2.0) * a.cos() * beta.cos());
    let sixth = pi / T::lit(6.0);
    let l = lobachevsky::<T>;
    let sum = l(a + theta) - l(a - theta) - l(sixth + theta) + l(sixth - theta) + l(beta + theta)
        - l(beta - theta)
        + T::lit(2.0) * l(T::FRAC_PI_2() - theta);
    sum / T::lit(4.0)
}

/// Volume of the truncated `[5,3,3,3,3]` orthoscheme:
/// `1/4 int_{pi/3}^{2pi/5} vol([5,3,beta(t)]) dt + zeta(3)/3200`.
pub fn orthoscheme_volume_5d<T: Real>(abs_tol: T) -> Result<QuadratureResult<T>> {
    let pi = T::PI();
    let lower = pi / T::lit(3.0);
    let upper = T::lit(2.0) * pi / T::lit(5.0);
    // The integral is scaled by 1/4 afterwards.
    let q = integrate(
        tetrahedron_volume_along_path::<T>,
        lower,
        upper,
        abs_tol * T::lit(4.0),
        DEFAULT_MAX_SUBDIVISIONS,
    )?;
    let quarter = T::lit(0.25);
    Ok(QuadratureResult {
        value: quarter * q.value + zeta3::<T>() / T::lit(3200.0),
        error_estimate: quarter * q.error_estimate,
        ..q
    })
}

fn check_lens_inputs<T: Real>(base: T, h: T) -> Result<()> {
    if base < T::zero() {
        return Err(Error::NegativeInput {
            what: "base measure",
            value: base.as_f64(),
        });
    }
    if h < T::zero() {
        return Err(Error::NegativeInput {
            what: "height",
            value: h.as_f64(),
        });
    }
    Ok(())
}

/// `sinh 2h + 2h`, i.e. four times `int_0^h cosh^2`.
pub fn lens_bracket_3d<T: Real>(h: T) -> T {
    (h + h).sinh() + h + h
}

/// `1/2 sinh 4h + 4 sinh 2h + 6h`, i.e. sixteen times `int_0^h cosh^4`.
pub fn lens_bracket_5d<T: Real>(h: T) -> T {
    T::lit(0.5) * (T::lit(4.0) * h).sinh() + T::lit(4.0) * (h + h).sinh() + T::lit(6.0) * h
}

/// Volume of the hyperball piece of height `h` over a planar region of area
/// `base_area`, bounded by planes orthogonal to the base.
pub fn hyperball_lens_volume_3d<T: Real>(base_area: T, h: T) -> Result<T> {
    check_lens_inputs(base_area, h)?;
    Ok(base_area * lens_bracket_3d(h) / T::lit(4.0))
}

/// 5D analogue of [`hyperball_lens_volume_3d`] over a base of 4-volume
/// `base_vol4`.
pub fn hyperball_lens_volume_5d<T: Real>(base_vol4: T, h: T) -> Result<T> {
    check_lens_inputs(base_vol4, h)?;
    Ok(base_vol4 * lens_bracket_5d(h) / T::lit(16.0))
}

fn check_p<T: Real>(p: T) -> Result<()> {
    if !(p > T::lit(6.0)) || !p.is_finite() {
        return Err(Error::InvalidParameter {
            p: p.as_f64(),
            reason: "truncated regular tetrahedra need p > 6",
        });
    }
    Ok(())
}

/// Area of a truncation triangle with angles `2pi/p`: `pi (1 - 6/p)`.
pub fn truncation_face_area_3d<T: Real>(p: T) -> Result<T> {
    check_p(p)?;
    Ok(T::PI() * (T::one() - T::lit(6.0) / p))
}

/// One orthoscheme's share of the truncation triangle: `pi (1/6 - 1/p)`.
pub fn truncation_face_share_3d<T: Real>(p: T) -> Result<T> {
    Ok(truncation_face_area_3d(p)? / T::from_usize(FACE_ORTHOSCHEMES_3D).unwrap())
}

/// One orthoscheme's share of the 5D truncation facet: the covolume of
/// `[5,3,3,3]`, `pi^2 / 10800`.
pub fn truncation_facet_share_5d<T: Real>() -> Result<T> {
    let g = CoxeterGraph::<T>::linear(&[T::lit(5.0), T::lit(3.0), T::lit(3.0), T::lit(3.0)])?;
    gauss_bonnet_volume_4d(&g)
}

/// 4-volume of the regular truncation facet of the 5D tile, `pi^2 / 90`.
pub fn truncation_facet_volume_5d<T: Real>() -> Result<T> {
    Ok(truncation_facet_share_5d::<T>()? * T::from_usize(FACET_ORTHOSCHEMES_5D).unwrap())
}
