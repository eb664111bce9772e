//! Truncated regular simplex tiles `{p,3,3}` (3D) and `{5,3,3,3,3}` (5D) and
//! the hyperball packings they carry.
//!
//! Each tile is built twice over: from projective coordinates of its outer
//! vertices (a Euclidean regular simplex in the Klein ball), and from the
//! inverse Coxeter-Schläfli matrix of its orthoscheme. Construction fails if
//! the two routes disagree.

use serde::Serialize;

use crate::coxeter::{truncation_height, CoxeterGraph};
use crate::error::{Error, Result};
use crate::lorentz::{
    bilinear, dist_point_to_hyperplane, dist_ultraparallel_hyperplanes, Hyperplane, LorentzVector,
    SquareMatrix,
};
use crate::optimize::{maximize, Optimum};
use crate::scalar::Real;
use crate::volume::{
    hyperball_lens_volume_3d, hyperball_lens_volume_5d, orthoscheme_volume_3d,
    orthoscheme_volume_5d, truncation_face_area_3d, truncation_face_share_3d,
    truncation_facet_share_5d, truncation_facet_volume_5d, ORTHOSCHEMES_3D, ORTHOSCHEMES_5D,
};

/// Scan resolution used by the maximisers before golden-section refinement.
pub const SCAN_POINTS: usize = 1000;
/// Target bracket width for the optimum over x.
pub const X_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TruncatedSimplexModel<T> {
    dimension: usize,
    p: T,
    y: T,
    h: T,
    w: T,
    pair_distance: T,
    face_measure: T,
    face_share: T,
    orthoscheme_volume: T,
    orthoscheme_count: usize,
    cell_volume: T,
    vertex_poles: Vec<LorentzVector<T>>,
    base_planes: Vec<Hyperplane<T>>,
    face_planes: Vec<Hyperplane<T>>,
    face_centres: Vec<LorentzVector<T>>,
}

fn check_route<T: Real>(quantity: &'static str, first: T, second: T) -> Result<()> {
    let scale = first.abs().max(second.abs()).max(T::one());
    if (first - second).abs() > T::route_tol() * scale {
        return Err(Error::RouteMismatch {
            quantity,
            first: first.as_f64(),
            second: second.as_f64(),
        });
    }
    Ok(())
}

/// Metric data shared by both dimensions, derived from the vertex poles.
struct CoordinateRoute<T> {
    base_planes: Vec<Hyperplane<T>>,
    face_planes: Vec<Hyperplane<T>>,
    face_centres: Vec<LorentzVector<T>>,
    pair_distance: T,
    w: T,
}

impl<T: Real> CoordinateRoute<T> {
    fn from_poles(poles: &[LorentzVector<T>]) -> Result<Self> {
        let k = poles.len();
        // Regularity: every pair of vertices has the same inner product.
        let reference = bilinear(&poles[0], &poles[1])?;
        for i in 0..k {
            for j in (i + 1)..k {
                check_route(
                    "vertex inner products",
                    reference,
                    bilinear(&poles[i], &poles[j])?,
                )?;
            }
        }

        let base_planes = poles
            .iter()
            .cloned()
            .map(Hyperplane::polar_of)
            .collect::<Result<Vec<_>>>()?;

        let pair_distance = dist_ultraparallel_hyperplanes(&base_planes[0], &base_planes[1])?;
        for i in 0..k {
            for j in (i + 1)..k {
                let e = dist_ultraparallel_hyperplanes(&base_planes[i], &base_planes[j])?;
                check_route("base plane distances", pair_distance, e)?;
            }
        }

        let mut face_planes = Vec::with_capacity(k);
        let mut face_centres = Vec::with_capacity(k);
        for i in 0..k {
            let (plane, centre) = opposite_face(poles, i)?;
            face_planes.push(plane);
            face_centres.push(centre);
        }

        let w = dist_point_to_hyperplane(&face_centres[0], &base_planes[0])?;
        for i in 1..k {
            check_route(
                "base plane to face centre",
                w,
                dist_point_to_hyperplane(&face_centres[i], &base_planes[i])?,
            )?;
        }
        Ok(Self {
            base_planes,
            face_planes,
            face_centres,
            pair_distance,
            w,
        })
    }
}

/// Face of the simplex opposite vertex `i`, and its centre: the point where
/// the face meets the axis through the origin and `B_i`.
fn opposite_face<T: Real>(
    poles: &[LorentzVector<T>],
    i: usize,
) -> Result<(Hyperplane<T>, LorentzVector<T>)> {
    let n = poles[0].dim();
    // Functional a with a_0 = 1 vanishing on every other vertex (normalised
    // to x^0 = 1): sum_k a_k b^k = -1.
    let rows: Vec<Vec<T>> = poles
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, b)| b.spatial().iter().map(|&c| c / b[0]).collect())
        .collect();
    let a = SquareMatrix::from_rows(&rows)?.solve(&vec![-T::one(); n])?;
    let bi: Vec<T> = poles[i]
        .spatial()
        .iter()
        .map(|&c| c / poles[i][0])
        .collect();
    let dot = a
        .iter()
        .zip(&bi)
        .fold(T::zero(), |acc, (&x, &y)| acc + x * y);
    let s = -T::one() / dot;
    let centre = LorentzVector::affine(&bi.iter().map(|&c| c * s).collect::<Vec<_>>());
    let mut functional = vec![T::one()];
    functional.extend(a);
    Ok((Hyperplane::from_functional(&functional)?, centre))
}

impl<T: Real> TruncatedSimplexModel<T> {
    /// Tile of the `{p,3,3}` tiling; `p` may be any real above 6, although
    /// only integers `p >= 7` tile space.
    pub fn build_3d(p: T) -> Result<Self> {
        truncation_face_area_3d(p)?;
        let y = euclidean_parameter_3d(p);
        let poles = vertex_poles_3d(y);
        let route = CoordinateRoute::from_poles(&poles)?;

        let three = T::lit(3.0);
        let graph = CoxeterGraph::linear(&[p, three, three])?;
        let h = truncation_height(&graph)?;
        check_route(
            "half base plane distance",
            h,
            route.pair_distance / T::lit(2.0),
        )?;

        let y2 = y * y;
        let sinh_w = (y2 + three) / ((y2 - T::one()) * (T::lit(9.0) - y2)).sqrt();
        check_route("face centre distance", route.w, sinh_w.asinh())?;

        let orthoscheme_volume =
            orthoscheme_volume_3d(T::PI() / p, T::PI() / three, T::PI() / three)?;
        Ok(Self {
            dimension: 3,
            p,
            y,
            h,
            w: route.w,
            pair_distance: route.pair_distance,
            face_measure: truncation_face_area_3d(p)?,
            face_share: truncation_face_share_3d(p)?,
            orthoscheme_volume,
            orthoscheme_count: ORTHOSCHEMES_3D,
            cell_volume: orthoscheme_volume * T::from_usize(ORTHOSCHEMES_3D).unwrap(),
            vertex_poles: poles,
            base_planes: route.base_planes,
            face_planes: route.face_planes,
            face_centres: route.face_centres,
        })
    }

    /// Tile of the `{5,3,3,3,3}` tiling with the default quadrature tolerance.
    pub fn build_5d() -> Result<Self> {
        Self::build_5d_with_tol(T::quadrature_tol())
    }

    pub fn build_5d_with_tol(quadrature_tol: T) -> Result<Self> {
        let y = euclidean_parameter_5d::<T>();
        let poles = vertex_poles_5d(y);
        let route = CoordinateRoute::from_poles(&poles)?;

        let five = T::lit(5.0);
        let three = T::lit(3.0);
        let graph = CoxeterGraph::linear(&[five, three, three, three, three])?;
        let h = truncation_height(&graph)?;
        check_route(
            "half base plane distance",
            h,
            route.pair_distance / T::lit(2.0),
        )?;

        let y2 = y * y;
        let sinh_w =
            five.sqrt() * (y2 + three) / ((five * y2 - three) * (T::lit(15.0) - y2)).sqrt();
        check_route("face centre distance", route.w, sinh_w.asinh())?;

        let orthoscheme_volume = orthoscheme_volume_5d(quadrature_tol)?.value;
        Ok(Self {
            dimension: 5,
            p: five,
            y,
            h,
            w: route.w,
            pair_distance: route.pair_distance,
            face_measure: truncation_facet_volume_5d()?,
            face_share: truncation_facet_share_5d()?,
            orthoscheme_volume,
            orthoscheme_count: ORTHOSCHEMES_5D,
            cell_volume: orthoscheme_volume * T::from_usize(ORTHOSCHEMES_5D).unwrap(),
            vertex_poles: poles,
            base_planes: route.base_planes,
            face_planes: route.face_planes,
            face_centres: route.face_centres,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Schläfli parameter; fixed to 5 for the 5D tile.
    pub fn p(&self) -> T {
        self.p
    }

    /// Scale of the Euclidean simplex whose vertices are the poles `B_i`.
    pub fn y(&self) -> T {
        self.y
    }

    /// Height of the congruent hyperballs, half the base plane distance.
    pub fn h(&self) -> T {
        self.h
    }

    /// Distance from a base plane to the centre of the opposite face.
    pub fn w(&self) -> T {
        self.w
    }

    /// Common distance `e_ij` between base planes, from coordinates.
    pub fn pair_distance(&self) -> T {
        self.pair_distance
    }

    /// Measure of one full truncation face (area in 3D, 4-volume in 5D).
    pub fn face_measure(&self) -> T {
        self.face_measure
    }

    /// One orthoscheme's share of a truncation face.
    pub fn face_share(&self) -> T {
        self.face_share
    }

    pub fn orthoscheme_volume(&self) -> T {
        self.orthoscheme_volume
    }

    pub fn orthoscheme_count(&self) -> usize {
        self.orthoscheme_count
    }

    pub fn cell_volume(&self) -> T {
        self.cell_volume
    }

    /// Number of hyperballs per tile, one per truncated vertex.
    pub fn ball_count(&self) -> usize {
        self.dimension + 1
    }

    pub fn vertex_poles(&self) -> &[LorentzVector<T>] {
        &self.vertex_poles
    }

    pub fn base_planes(&self) -> &[Hyperplane<T>] {
        &self.base_planes
    }

    /// Side face (facet) opposite each vertex `B_i`.
    pub fn face_planes(&self) -> &[Hyperplane<T>] {
        &self.face_planes
    }

    pub fn face_centres(&self) -> &[LorentzVector<T>] {
        &self.face_centres
    }

    /// Whether the tile generates a tiling of the whole space. Tiles at
    /// non-integer p only describe local configurations.
    pub fn is_realizable(&self) -> bool {
        self.dimension == 5 || (self.p == self.p.round() && self.p >= T::lit(7.0))
    }

    /// Upper end of the expansion interval, `min(h, w - h)`.
    pub fn x_max(&self) -> T {
        self.h.min(self.w - self.h)
    }

    fn lens(&self, base: T, height: T) -> Result<T> {
        match self.dimension {
            3 => hyperball_lens_volume_3d(base, height),
            _ => hyperball_lens_volume_5d(base, height),
        }
    }

    /// Density with heights `h + x` for ball 1 and `h - x` for the others.
    pub fn density(&self, x: T) -> Result<DensityResult<T>> {
        let x_max = self.x_max();
        let slack = T::lit(4.0) * T::epsilon() * x_max;
        if !(x >= T::zero() && x <= x_max + slack) {
            return Err(Error::OutOfRange {
                x: x.as_f64(),
                max: x_max.as_f64(),
            });
        }
        let x = x.min(x_max);
        let heights = HeightAssignment::expansion(self, x);
        let lens_volumes = heights
            .heights
            .iter()
            .map(|&hi| self.lens(self.face_measure, hi))
            .collect::<Result<Vec<_>>>()?;
        let numerator = lens_volumes.iter().fold(T::zero(), |acc, &v| acc + v);
        Ok(DensityResult {
            density: numerator / self.cell_volume,
            x,
            constraints: self.validate(&heights),
            heights: heights.heights,
            lens_volumes,
            numerator,
            cell_volume: self.cell_volume,
        })
    }

    /// Congruent density computed on a single orthoscheme.
    pub fn congruent_density_per_orthoscheme(&self) -> Result<T> {
        Ok(self.lens(self.face_share, self.h)? / self.orthoscheme_volume)
    }

    /// Lens volume over one orthoscheme's face share at the congruent height.
    pub fn congruent_lens_per_orthoscheme(&self) -> Result<T> {
        self.lens(self.face_share, self.h)
    }

    /// Checks the packing requirements for the given heights. Violations are
    /// reported, never returned as errors.
    pub fn validate(&self, heights: &HeightAssignment<T>) -> ConstraintReport<T> {
        let tol = T::route_tol() * self.pair_distance.max(T::one());
        let k = self.vertex_poles.len();

        let base_planes: Vec<BasePlaneCheck<T>> = (0..k)
            .map(|i| {
                // The polar of B_i meets every side face through B_i at a
                // right angle.
                let pole = self.base_planes[i].pole();
                let worst = (0..k)
                    .filter(|&j| j != i)
                    .map(|j| {
                        let u = self.face_planes[j].pole();
                        let c = bilinear(pole, u).unwrap_or_else(|_| T::nan())
                            / (pole.norm_sq() * u.norm_sq()).sqrt();
                        c.abs()
                    })
                    .fold(T::zero(), T::max);
                BasePlaneCheck {
                    ball: i,
                    max_cos_to_side_faces: worst,
                    ok: worst <= T::route_tol(),
                }
            })
            .collect();

        let heights_nonnegative = heights.heights.iter().all(|&hi| hi >= -tol);

        let mut pairs = Vec::new();
        for i in 0..k {
            for j in (i + 1)..k {
                let e = dist_ultraparallel_hyperplanes(&self.base_planes[i], &self.base_planes[j])
                    .unwrap_or_else(|_| T::nan());
                let sum = heights.heights[i] + heights.heights[j];
                let margin = e - sum;
                pairs.push(PairCheck {
                    i,
                    j,
                    distance: e,
                    height_sum: sum,
                    margin,
                    ok: margin >= -tol,
                });
            }
        }

        let facets: Vec<FacetCheck<T>> = heights
            .heights
            .iter()
            .enumerate()
            .map(|(i, &hi)| FacetCheck {
                ball: i,
                height: hi,
                w: self.w,
                margin: self.w - hi,
                ok: self.w - hi >= -tol,
            })
            .collect();

        let satisfied = heights_nonnegative
            && base_planes.iter().all(|c| c.ok)
            && pairs.iter().all(|c| c.ok)
            && facets.iter().all(|c| c.ok);
        ConstraintReport {
            x: heights.x,
            x_max: self.x_max(),
            realizable: self.is_realizable(),
            heights_nonnegative,
            base_planes,
            pairs,
            facets,
            satisfied,
        }
    }

    /// Maximises the density over the expansion interval `[0, x_max]`.
    pub fn maximize_over_x(&self) -> Result<Optimum<T>> {
        // Evaluate once to surface any construction problem as an error.
        self.density(T::zero())?;
        let f = |x: T| {
            self.density(x)
                .map(|d| d.density)
                .unwrap_or(T::neg_infinity())
        };
        Ok(maximize(
            f,
            T::zero(),
            self.x_max(),
            SCAN_POINTS,
            T::lit(X_TOL),
        ))
    }
}

/// `y = sqrt(3) sqrt((3 cos(2pi/p) - 1) / (cos(2pi/p) + 1))`.
pub fn euclidean_parameter_3d<T: Real>(p: T) -> T {
    let c = (T::lit(2.0) * T::PI() / p).cos();
    let three = T::lit(3.0);
    three.sqrt() * ((three * c - T::one()) / (c + T::one())).sqrt()
}

/// Solution of `cos(2pi/5) = (y^2 + 3) / (15 - y^2)`.
pub fn euclidean_parameter_5d<T: Real>() -> T {
    let c = (T::lit(2.0) * T::PI() / T::lit(5.0)).cos();
    ((T::lit(15.0) * c - T::lit(3.0)) / (T::one() + c)).sqrt()
}

/// Vertices of a regular tetrahedron of circumradius `y` in the Klein ball.
pub fn vertex_poles_3d<T: Real>(y: T) -> Vec<LorentzVector<T>> {
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let r2 = two.sqrt();
    let r3 = three.sqrt();
    let z = -y / three;
    vec![
        LorentzVector::affine(&[two * r2 * y / three, T::zero(), z]),
        LorentzVector::affine(&[-r2 * y / three, r2 * y / r3, z]),
        LorentzVector::affine(&[-r2 * y / three, -r2 * y / r3, z]),
        LorentzVector::affine(&[T::zero(), T::zero(), y]),
    ]
}

/// Vertices of a regular 5-simplex with circumradius `sqrt(5/3) y`.
pub fn vertex_poles_5d<T: Real>(y: T) -> Vec<LorentzVector<T>> {
    let s = |k: f64| T::lit(k).sqrt();
    let a = y / s(15.0);
    let b = y / s(10.0);
    let c = y / s(6.0);
    let d = y / s(3.0);
    let z = T::zero();
    vec![
        LorentzVector::affine(&[a, b, c, d, y]),
        LorentzVector::affine(&[a, b, c, d, -y]),
        LorentzVector::affine(&[a, b, -s(3.0) * y / s(2.0), z, z]),
        LorentzVector::affine(&[a, -T::lit(2.0) * s(2.0) * y / s(5.0), z, z, z]),
        LorentzVector::affine(&[a, b, c, -T::lit(2.0) * y / s(3.0), z]),
        LorentzVector::affine(&[-s(5.0) * y / s(3.0), z, z, z, z]),
    ]
}

/// Congruent density of `{p,3,3}` at real `p > 6` from the orthoscheme alone
/// (matrix route for the height, no coordinates).
pub fn congruent_density_3d<T: Real>(p: T) -> Result<T> {
    let share = truncation_face_share_3d(p)?;
    let three = T::lit(3.0);
    let h = truncation_height(&CoxeterGraph::linear(&[p, three, three])?)?;
    let v = orthoscheme_volume_3d(T::PI() / p, T::PI() / three, T::PI() / three)?;
    Ok(hyperball_lens_volume_3d(share, h)? / v)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HeightAssignment<T> {
    pub x: T,
    pub heights: Vec<T>,
}

impl<T: Real> HeightAssignment<T> {
    /// Ball 1 blown up to `h + x`, all others shrunk to `h - x`. No range
    /// check: [`TruncatedSimplexModel::validate`] reports violations.
    pub fn expansion(model: &TruncatedSimplexModel<T>, x: T) -> Self {
        let h = model.h();
        let mut heights = vec![h - x; model.ball_count()];
        heights[0] = h + x;
        Self { x, heights }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityResult<T> {
    pub x: T,
    pub heights: Vec<T>,
    pub lens_volumes: Vec<T>,
    pub numerator: T,
    pub cell_volume: T,
    pub density: T,
    pub constraints: ConstraintReport<T>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BasePlaneCheck<T> {
    pub ball: usize,
    pub max_cos_to_side_faces: T,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairCheck<T> {
    pub i: usize,
    pub j: usize,
    pub distance: T,
    pub height_sum: T,
    /// `e_ij - (h_i + h_j)`; negative means overlapping hyperballs.
    pub margin: T,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FacetCheck<T> {
    pub ball: usize,
    pub height: T,
    pub w: T,
    /// `w - h_i`; negative means the ball crosses the opposite face.
    pub margin: T,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstraintReport<T> {
    pub x: T,
    pub x_max: T,
    pub realizable: bool,
    pub heights_nonnegative: bool,
    pub base_planes: Vec<BasePlaneCheck<T>>,
    pub pairs: Vec<PairCheck<T>>,
    pub facets: Vec<FacetCheck<T>>,
    pub satisfied: bool,
}

/// Optimum of the congruent 3D density over real `p`, with the sampled
/// monotonicity check on either side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimumOverP<T> {
    pub optimum: Optimum<T>,
    pub samples: usize,
    pub increasing_below: bool,
    pub decreasing_above: bool,
}

/// Lower end of the search domain in p, just above the Euclidean limit.
pub const P_SEARCH_MIN: f64 = 6.001;
pub const P_SEARCH_MAX: f64 = 200.0;

/// Maximises [`congruent_density_3d`] over real `p` and checks it increases
/// before and decreases after the optimum on `samples` equispaced points.
pub fn maximize_over_p<T: Real>(tol: T, samples: usize) -> Result<OptimumOverP<T>> {
    let lo = T::lit(P_SEARCH_MIN);
    let hi = T::lit(P_SEARCH_MAX);
    congruent_density_3d(lo)?;
    let f = |p: T| congruent_density_3d(p).unwrap_or(T::neg_infinity());
    let optimum = maximize(f, lo, hi, SCAN_POINTS * 10, tol);

    let n = samples.max(3);
    let step = (hi - lo) / T::from_usize(n - 1).unwrap();
    let grid: Vec<(T, T)> = (0..n)
        .map(|i| {
            let p = lo + step * T::from_usize(i).unwrap();
            congruent_density_3d(p).map(|d| (p, d))
        })
        .collect::<Result<_>>()?;
    let mut increasing_below = true;
    let mut decreasing_above = true;
    for pair in grid.windows(2) {
        let ((p0, d0), (p1, d1)) = (pair[0], pair[1]);
        if p1 <= optimum.argmax && d1 <= d0 {
            increasing_below = false;
        }
        if p0 >= optimum.argmax && d1 >= d0 {
            decreasing_above = false;
        }
    }
    Ok(OptimumOverP {
        optimum,
        samples: n,
        increasing_below,
        decreasing_above,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn p7_metric_data() {
        let m = TruncatedSimplexModel::build_3d(7.0_f64).unwrap();
        assert!(close(m.h(), 0.78871, 5e-6));
        assert!(close(m.w(), 1.51843, 5e-6));
        assert!(close(m.pair_distance(), 1.57741, 5e-6));
        assert!(close(m.x_max(), 0.72972, 5e-6));
        let c = (2.0 * std::f64::consts::PI / 7.0).cos();
        assert_eq!(m.y(), 3f64.sqrt() * ((3.0 * c - 1.0) / (c + 1.0)).sqrt());
        assert!(m.y() > 1.0);
        assert_eq!(m.cell_volume(), 24.0 * m.orthoscheme_volume());
        assert!(m.is_realizable());
    }

    #[test]
    fn p50_metric_data() {
        let m = TruncatedSimplexModel::build_3d(50.0_f64).unwrap();
        assert!(close(m.h(), 0.06325, 5e-6));
        assert!(close(m.orthoscheme_volume(), 0.15167, 5e-6));
    }

    #[test]
    fn rejects_p_at_most_six() {
        assert!(matches!(
            TruncatedSimplexModel::build_3d(6.0),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(TruncatedSimplexModel::build_3d(5.0).is_err());
    }

    #[test]
    fn real_p_is_local_only() {
        let m = TruncatedSimplexModel::build_3d(6.5_f64).unwrap();
        assert!(!m.is_realizable());
        assert!(!m.validate(&HeightAssignment::expansion(&m, 0.0)).realizable);
    }

    #[test]
    fn five_dimensional_constants() {
        let m = TruncatedSimplexModel::<f64>::build_5d().unwrap();
        assert!(close(m.y(), 1.11769, 5e-6));
        assert!(close(m.h(), 0.38360, 5e-6));
        assert!(close(m.pair_distance(), 0.76720, 5e-6));
        assert!(close(m.w(), 1.15080, 5e-6));
        assert_eq!(m.x_max(), m.h());
        assert_eq!(m.ball_count(), 6);
        assert_eq!(m.cell_volume(), 720.0 * m.orthoscheme_volume());
    }

    #[test]
    fn densities_at_reported_points() {
        let m = TruncatedSimplexModel::build_3d(7.0_f64).unwrap();
        assert!(close(m.density(0.0).unwrap().density, 0.82251, 5e-6));
        assert!(close(m.density(m.x_max()).unwrap().density, 0.74649, 5e-6));
        let m5 = TruncatedSimplexModel::<f64>::build_5d().unwrap();
        assert!(close(m5.density(0.0).unwrap().density, 0.50514, 5e-6));
        assert!(close(
            m5.density(m5.x_max()).unwrap().density,
            0.23344,
            5e-6
        ));
    }

    #[test]
    fn density_out_of_range() {
        let m = TruncatedSimplexModel::build_3d(7.0_f64).unwrap();
        assert!(matches!(m.density(-0.1), Err(Error::OutOfRange { .. })));
        assert!(matches!(m.density(0.8), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn validation_cases() {
        let m = TruncatedSimplexModel::build_3d(7.0_f64).unwrap();
        let r = m.validate(&HeightAssignment::expansion(&m, 0.0));
        assert!(r.satisfied);
        assert!(r.pairs.iter().all(|c| c.margin.abs() < 1e-12));

        let r = m.validate(&HeightAssignment::expansion(&m, 0.3));
        assert!(r.satisfied);
        assert!(close(r.facets[0].height, 1.08871, 5e-6));

        let r = m.validate(&HeightAssignment::expansion(&m, m.x_max() + 1e-3));
        assert!(!r.satisfied);
        assert!(!r.facets[0].ok);
        assert!(r.facets[1..].iter().all(|c| c.ok));
        assert!(r.pairs.iter().all(|c| c.ok));

        let m5 = TruncatedSimplexModel::<f64>::build_5d().unwrap();
        assert!(
            m5.validate(&HeightAssignment::expansion(&m5, 0.2))
                .satisfied
        );
    }

    #[test]
    fn overlap_is_reported() {
        let m = TruncatedSimplexModel::build_3d(8.0_f64).unwrap();
        let mut heights = HeightAssignment::expansion(&m, 0.0);
        heights.heights[1] += 0.01;
        let r = m.validate(&heights);
        assert!(!r.satisfied);
        let bad: Vec<_> = r
            .pairs
            .iter()
            .filter(|c| !c.ok)
            .map(|c| (c.i, c.j))
            .collect();
        assert_eq!(bad, vec![(0, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn maximum_over_x_is_congruent() {
        let m = TruncatedSimplexModel::build_3d(7.0_f64).unwrap();
        let o = m.maximize_over_x().unwrap();
        assert_eq!(o.argmax, 0.0);
        assert!(close(o.value, 0.82251, 5e-6));
        let m5 = TruncatedSimplexModel::<f64>::build_5d().unwrap();
        let o = m5.maximize_over_x().unwrap();
        assert_eq!(o.argmax, 0.0);
        assert!(close(o.value, 0.50514, 5e-6));
    }

    #[test]
    fn p7_density_is_not_monotone_in_x() {
        // The density dips to an interior minimum and recovers towards the
        // endpoint, still staying below the congruent value.
        let m = TruncatedSimplexModel::build_3d(7.0_f64).unwrap();
        let xm = m.x_max();
        let d: Vec<f64> = (0..=1000)
            .map(|i| m.density(xm * i as f64 / 1000.0).unwrap().density)
            .collect();
        let argmin = (0..d.len())
            .min_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap())
            .unwrap();
        assert!(argmin > 0 && argmin < 1000);
        assert!(d[1000] > d[argmin]);
        assert!(d[1000] < d[0]);
    }

    #[test]
    fn p_optimum() {
        let r = maximize_over_p(1e-7, 2000).unwrap();
        assert!(
            close(r.optimum.argmax, 6.13499, 1e-4),
            "{}",
            r.optimum.argmax
        );
        assert!(close(r.optimum.value, 0.86338, 5e-6));
        assert!(r.increasing_below && r.decreasing_above);
        assert!(congruent_density_3d(7.0).unwrap() < r.optimum.value);
        assert!(close(congruent_density_3d(9.0).unwrap(), 0.71663, 5e-6));
    }

    #[test]
    fn single_precision_model() {
        let m = TruncatedSimplexModel::<f32>::build_3d(7.0).unwrap();
        assert!((m.density(0.0).unwrap().density - 0.82251).abs() < 1e-4);
    }
}
