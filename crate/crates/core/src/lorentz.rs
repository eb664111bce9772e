//! Projective (Beltrami-Cayley-Klein) model of hyperbolic n-space inside the
//! Lorentz space of signature (1, n).
//!
//! Vectors are homogeneous: every distance below is invariant under
//! independent nonzero rescaling of its arguments. Curvature is fixed to -1.

use std::ops::{Index, IndexMut};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default relative band for [`classify`]: `|<x,x>| <= tol * |x|^2` is Boundary.
pub const BOUNDARY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LorentzVector<T> {
    coords: Vec<T>,
}

impl<T: Real> LorentzVector<T> {
    pub fn new(coords: Vec<T>) -> Result<Self> {
        if coords.iter().all(|c| *c == T::zero()) {
            return Err(Error::ZeroVector);
        }
        Ok(Self { coords })
    }

    /// Point `(1, x_1, ..., x_n)` of the affine Klein chart.
    pub fn affine(spatial: &[T]) -> Self {
        let mut coords = Vec::with_capacity(spatial.len() + 1);
        coords.push(T::one());
        coords.extend_from_slice(spatial);
        Self { coords }
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn spatial(&self) -> &[T] {
        &self.coords[1..]
    }

    /// Dimension n of the hyperbolic space (one less than the length).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn norm_sq(&self) -> T {
        lorentz_form(&self.coords, &self.coords)
    }

    pub fn scaled(&self, s: T) -> Self {
        Self {
            coords: self.coords.iter().map(|&c| c * s).collect(),
        }
    }

    /// Linear combination `a * self + b * other`.
    pub fn combine(&self, a: T, other: &Self, b: T) -> Result<Self> {
        check_dims(self, other)?;
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(&x, &y)| a * x + b * y)
                .collect(),
        )
    }

    fn euclidean_norm_sq(&self) -> T {
        self.coords.iter().fold(T::zero(), |acc, &c| acc + c * c)
    }
}

impl<T> Index<usize> for LorentzVector<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.coords[i]
    }
}

/// Hyperplane represented by its pole under the polarity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hyperplane<T> {
    pole: LorentzVector<T>,
}

impl<T: Real> Hyperplane<T> {
    /// Polar hyperplane of an outer point. Fails unless `<b,b> > 0`.
    pub fn polar_of(pole: LorentzVector<T>) -> Result<Self> {
        let n = pole.norm_sq();
        if !(n > T::zero()) || classify(&pole, T::lit(BOUNDARY_TOL))? != PointClass::Outer {
            return Err(Error::DegenerateHyperplane { norm: n.as_f64() });
        }
        Ok(Self { pole })
    }

    /// Hyperplane `{x : sum_k a_k x^k = 0}` given as a linear functional.
    ///
    /// The pole is obtained by lowering the index with the form, i.e. by
    /// flipping the sign of the time component.
    pub fn from_functional(a: &[T]) -> Result<Self> {
        let mut coords = a.to_vec();
        coords[0] = -coords[0];
        Self::polar_of(LorentzVector::new(coords)?)
    }

    pub fn pole(&self) -> &LorentzVector<T> {
        &self.pole
    }

    /// Whether `x` lies on the hyperplane, relative to the sizes involved.
    pub fn contains(&self, x: &LorentzVector<T>, tol: T) -> Result<bool> {
        let ip = bilinear(&self.pole, x)?;
        let scale = (self.pole.euclidean_norm_sq() * x.euclidean_norm_sq()).sqrt();
        Ok(ip.abs() <= tol * scale)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PointClass {
    Interior,
    Boundary,
    Outer,
}

fn lorentz_form<T: Real>(x: &[T], y: &[T]) -> T {
    let mut acc = -(x[0] * y[0]);
    for (&a, &b) in x[1..].iter().zip(&y[1..]) {
        acc += a * b;
    }
    acc
}

fn check_dims<T>(x: &LorentzVector<T>, y: &LorentzVector<T>) -> Result<()> {
    if x.coords.len() != y.coords.len() {
        return Err(Error::DimensionMismatch {
            left: x.coords.len(),
            right: y.coords.len(),
        });
    }
    Ok(())
}

/// `<x, y> = -x^0 y^0 + x^1 y^1 + ... + x^n y^n`.
pub fn bilinear<T: Real>(x: &LorentzVector<T>, y: &LorentzVector<T>) -> Result<T> {
    check_dims(x, y)?;
    Ok(lorentz_form(&x.coords, &y.coords))
}

/// Sign of `<x,x>`, with `|<x,x>| <= tol * |x|^2` (Euclidean norm of the
/// coordinates) counted as Boundary.
pub fn classify<T: Real>(x: &LorentzVector<T>, tol: T) -> Result<PointClass> {
    let e = x.euclidean_norm_sq();
    if e == T::zero() {
        return Err(Error::ZeroVector);
    }
    let q = x.norm_sq();
    Ok(if q.abs() <= tol * e {
        PointClass::Boundary
    } else if q < T::zero() {
        PointClass::Interior
    } else {
        PointClass::Outer
    })
}

fn require_interior<T: Real>(x: &LorentzVector<T>) -> Result<T> {
    let q = x.norm_sq();
    if classify(x, T::lit(BOUNDARY_TOL))? != PointClass::Interior {
        return Err(Error::NotInterior { norm: q.as_f64() });
    }
    Ok(q)
}

/// Hyperbolic distance between two interior points:
/// `cosh d = |<a,b>| / sqrt(<a,a><b,b>)`.
pub fn dist_points<T: Real>(a: &LorentzVector<T>, b: &LorentzVector<T>) -> Result<T> {
    check_dims(a, b)?;
    let qa = require_interior(a)?;
    let qb = require_interior(b)?;
    let c = bilinear(a, b)?.abs() / (qa * qb).sqrt();
    Ok(c.max(T::one()).acosh())
}

/// Distance from an interior point to a hyperplane:
/// `sinh d = |<b,t>| / sqrt(-<b,b><t,t>)`.
pub fn dist_point_to_hyperplane<T: Real>(t: &LorentzVector<T>, plane: &Hyperplane<T>) -> Result<T> {
    check_dims(t, &plane.pole)?;
    let qt = require_interior(t)?;
    let b = &plane.pole;
    let qb = b.norm_sq();
    if !(qb > T::zero()) {
        return Err(Error::DegenerateHyperplane { norm: qb.as_f64() });
    }
    let s = bilinear(b, t)?.abs() / (-(qb * qt)).sqrt();
    Ok(s.asinh())
}

/// Length of the common perpendicular of two ultraparallel hyperplanes:
/// `cosh e = |<a,b>| / sqrt(<a,a><b,b>)`.
///
/// Intersecting or parallel hyperplanes yield [`Error::NotUltraparallel`]
/// carrying `<a,b> / sqrt(<a,a><b,b>)`.
pub fn dist_ultraparallel_hyperplanes<T: Real>(a: &Hyperplane<T>, b: &Hyperplane<T>) -> Result<T> {
    check_dims(&a.pole, &b.pole)?;
    let qa = a.pole.norm_sq();
    let qb = b.pole.norm_sq();
    let cos = bilinear(&a.pole, &b.pole)? / (qa * qb).sqrt();
    // A few ulps above 1 is still a shared boundary point.
    if cos.abs() <= T::one() + T::lit(8.0) * T::epsilon() {
        return Err(Error::NotUltraparallel {
            cos_angle: cos.as_f64(),
        });
    }
    Ok(cos.abs().acosh())
}

/// Orthogonal projection of `p` onto the polar hyperplane of `b`:
/// `q ~ p <b,b> - b <p,b>`, so that `<q,b> = 0`.
pub fn foot_on_polar<T: Real>(
    p: &LorentzVector<T>,
    b: &LorentzVector<T>,
) -> Result<LorentzVector<T>> {
    check_dims(p, b)?;
    require_interior(p)?;
    let qb = b.norm_sq();
    if classify(b, T::lit(BOUNDARY_TOL))? != PointClass::Outer {
        return Err(Error::DegenerateHyperplane { norm: qb.as_f64() });
    }
    let pb = bilinear(p, b)?;
    p.combine(qb, b, -pb)
}

/// Dense row-major square matrix, intended for sizes up to about 6.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SquareMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Real> SquareMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![T::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Self { n, data })
    }

    pub fn diagonal(diag: &[T]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.data
            .chunks(self.n.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, &x| m.max(x.abs()))
    }

    /// `max |(self * other - I)_ij|`.
    pub fn identity_residual(&self, other: &Self) -> Result<T> {
        let p = self.mul(other)?;
        let mut r = T::zero();
        for i in 0..self.n {
            for j in 0..self.n {
                let target = if i == j { T::one() } else { T::zero() };
                r = r.max((p[(i, j)] - target).abs());
            }
        }
        Ok(r)
    }

    pub fn is_symmetric(&self, tol: T) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= tol))
    }

    /// Solves `self * x = rhs` by Gaussian elimination with partial pivoting.
    pub fn solve(&self, rhs: &[T]) -> Result<Vec<T>> {
        if rhs.len() != self.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: rhs.len(),
            });
        }
        let cols: Vec<Vec<T>> = rhs.iter().map(|&v| vec![v]).collect();
        let x = eliminate(self, cols)?;
        Ok(x.into_iter().map(|r| r[0]).collect())
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.n + j]
    }
}

/// Gauss-Jordan on `[a | rhs]`; returns the solved right-hand block.
fn eliminate<T: Real>(a: &SquareMatrix<T>, mut rhs: Vec<Vec<T>>) -> Result<Vec<Vec<T>>> {
    let n = a.n;
    let mut m = a.clone();
    let scale = m.max_abs();
    if scale == T::zero() || !scale.is_finite() {
        return Err(Error::Singular);
    }
    // Pivots below this are treated as exact zeros.
    let threshold = scale * T::epsilon() * T::lit(64.0) * T::from_usize(n).unwrap();

    for col in 0..n {
        let (piv, best) =
            (col..n)
                .map(|r| (r, m[(r, col)].abs()))
                .fold(
                    (col, -T::one()),
                    |acc, cur| if cur.1 > acc.1 { cur } else { acc },
                );
        if best <= threshold {
            return Err(Error::Singular);
        }
        if piv != col {
            for j in 0..n {
                let t = m[(col, j)];
                m[(col, j)] = m[(piv, j)];
                m[(piv, j)] = t;
            }
            rhs.swap(col, piv);
        }
        let d = m[(col, col)];
        for j in 0..n {
            m[(col, j)] /= d;
        }
        for v in rhs[col].iter_mut() {
            *v /= d;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = m[(r, col)];
            if f == T::zero() {
                continue;
            }
            for j in 0..n {
                let v = m[(col, j)];
                m[(r, j)] -= f * v;
            }
            let pivot_row = rhs[col].clone();
            for (v, p) in rhs[r].iter_mut().zip(pivot_row) {
                *v -= f * p;
            }
        }
    }
    Ok(rhs)
}

/// Inverse by Gauss-Jordan elimination with partial pivoting.
pub fn invert_small<T: Real>(matrix: &SquareMatrix<T>) -> Result<SquareMatrix<T>> {
    let n = matrix.n;
    let rhs = SquareMatrix::<T>::identity(n).rows();
    let rows = eliminate(matrix, rhs)?;
    SquareMatrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> LorentzVector<f64> {
        LorentzVector::new(c.to_vec()).unwrap()
    }

    #[test]
    fn form_signature() {
        assert_eq!(
            bilinear(&v(&[1., 0., 0., 0.]), &v(&[1., 0., 0., 0.])).unwrap(),
            -1.0
        );
        assert_eq!(
            bilinear(&v(&[1., 1., 0., 0.]), &v(&[1., 1., 0., 0.])).unwrap(),
            0.0
        );
        assert!(matches!(
            bilinear(&v(&[1., 0., 0.]), &v(&[1., 0., 0., 0.])),
            Err(Error::DimensionMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn classification() {
        assert_eq!(
            classify(&v(&[1., 0., 0., 0.]), 1e-10).unwrap(),
            PointClass::Interior
        );
        assert_eq!(
            classify(&v(&[1., 1., 0., 0.]), 1e-10).unwrap(),
            PointClass::Boundary
        );
        assert_eq!(
            classify(&v(&[1., 2., 0., 0.]), 1e-10).unwrap(),
            PointClass::Outer
        );
        assert_eq!(
            LorentzVector::<f64>::new(vec![0.0; 4]),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn point_on_its_own_hyperplane() {
        let plane = Hyperplane::polar_of(v(&[0., 1., 0., 0.])).unwrap();
        let t = v(&[1., 0., 0.3, -0.2]);
        assert!(dist_point_to_hyperplane(&t, &plane).unwrap().abs() < 1e-15);
        let off = v(&[1., 0.5, 0., 0.]);
        // sinh d = 0.5 / sqrt(0.75)
        let want = (0.5 / 0.75f64.sqrt()).asinh();
        assert!((dist_point_to_hyperplane(&off, &plane).unwrap() - want).abs() < 1e-15);
    }

    #[test]
    fn distance_rejects_outer_point() {
        let plane = Hyperplane::polar_of(v(&[0., 1., 0., 0.])).unwrap();
        assert!(matches!(
            dist_point_to_hyperplane(&v(&[1., 2., 0., 0.]), &plane),
            Err(Error::NotInterior { .. })
        ));
        assert!(matches!(
            Hyperplane::polar_of(v(&[1., 0., 0., 0.])),
            Err(Error::DegenerateHyperplane { .. })
        ));
    }

    #[test]
    fn identical_hyperplanes_are_not_ultraparallel() {
        let a = Hyperplane::polar_of(v(&[1., 2., 0., 0.])).unwrap();
        let b = Hyperplane::polar_of(v(&[-3., -6., 0., 0.])).unwrap();
        match dist_ultraparallel_hyperplanes(&a, &b) {
            Err(Error::NotUltraparallel { cos_angle }) => {
                assert!((cos_angle.abs() - 1.0).abs() < 1e-12)
            }
            other => panic!("unexpected {other:?}"),
        }
        // Orthogonal planes x1 = 0 and x2 = 0 intersect.
        let c = Hyperplane::polar_of(v(&[0., 1., 0., 0.])).unwrap();
        let d = Hyperplane::polar_of(v(&[0., 0., 1., 0.])).unwrap();
        assert_eq!(
            dist_ultraparallel_hyperplanes(&c, &d),
            Err(Error::NotUltraparallel { cos_angle: 0.0 })
        );
    }

    #[test]
    fn foot_is_incident() {
        let b = v(&[1., 0.2, 1.5, -0.4]);
        let p = v(&[1., 0.1, -0.3, 0.2]);
        let q = foot_on_polar(&p, &b).unwrap();
        assert!(bilinear(&q, &b).unwrap().abs() < 1e-12);
        // Already on the polar: q is a multiple of p.
        let on = v(&[1., 0.0, 0.0, 0.0]);
        let b2 = v(&[0., 0.0, 1.0, 0.0]);
        let q2 = foot_on_polar(&on, &b2).unwrap();
        assert_eq!(q2.coords(), &[1., 0., 0., 0.]);
    }

    #[test]
    fn inversion_basics() {
        let id = SquareMatrix::<f64>::identity(4);
        assert_eq!(invert_small(&id).unwrap(), id);
        let d = SquareMatrix::diagonal(&[2.0, 4.0]);
        assert_eq!(
            invert_small(&d).unwrap(),
            SquareMatrix::diagonal(&[0.5, 0.25])
        );
        let sing = SquareMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]).unwrap();
        assert_eq!(invert_small(&sing), Err(Error::Singular));
        assert!(matches!(
            SquareMatrix::from_rows(&[vec![1.0, 2.0], vec![2.0]]),
            Err(Error::NotSquare { .. })
        ));
    }

    #[test]
    fn solve_needs_pivoting() {
        let a = SquareMatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 1.0]]).unwrap();
        let x = a.solve(&[2.0, 3.0]).unwrap();
        assert_eq!(x, vec![1.0, 2.0]);
    }
}
