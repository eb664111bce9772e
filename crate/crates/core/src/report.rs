//! Rows and series for the tabulated results: congruent 3D data per `p`, and
//! density curves over the expansion parameter.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::packing::TruncatedSimplexModel;
use crate::scalar::Real;

/// Congruent packing data for one `{p,3,3}` tile, normalised per orthoscheme.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow<T> {
    pub p: u32,
    pub h: T,
    pub vol_orthoscheme: T,
    pub vol_lens: T,
    pub delta: T,
}

pub const TABLE1_COLUMNS: &str = "p,h,vol_orthoscheme,vol_lens,delta";
pub const SWEEP_COLUMNS: &str = "x,delta";

/// Values of p tabulated by default.
pub const TABLE1_DEFAULT_P: [u32; 6] = [7, 8, 9, 20, 50, 100];

pub fn table1_row<T: Real>(p: u32) -> Result<ReportRow<T>> {
    if p < 7 {
        return Err(Error::InvalidParameter {
            p: p as f64,
            reason: "{p,3,3} tiles hyperbolic space only for integer p >= 7",
        });
    }
    let m = TruncatedSimplexModel::build_3d(T::from_u32(p).unwrap())?;
    let vol_lens = m.congruent_lens_per_orthoscheme()?;
    Ok(ReportRow {
        p,
        h: m.h(),
        vol_orthoscheme: m.orthoscheme_volume(),
        vol_lens,
        delta: vol_lens / m.orthoscheme_volume(),
    })
}

pub fn table1_rows<T: Real>(p_list: &[u32]) -> Result<Vec<ReportRow<T>>> {
    p_list.iter().map(|&p| table1_row(p)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepPoint<T> {
    pub dimension: usize,
    pub p: T,
    pub x: T,
    pub delta: T,
}

/// Density on a uniform grid of `points` nodes over `[0, x_max]`.
pub fn sweep<T: Real>(
    model: &TruncatedSimplexModel<T>,
    points: usize,
) -> Result<Vec<SweepPoint<T>>> {
    if points < 2 {
        return Err(Error::InvalidRank {
            expected: 2,
            actual: points,
        });
    }
    let x_max = model.x_max();
    let last = points - 1;
    (0..points)
        .map(|i| {
            let x = if i == last {
                x_max
            } else {
                x_max * T::from_usize(i).unwrap() / T::from_usize(last).unwrap()
            };
            Ok(SweepPoint {
                dimension: model.dimension(),
                p: model.p(),
                x,
                delta: model.density(x)?.density,
            })
        })
        .collect()
}

/// CSV with the fixed header and values rounded to `decimals` places.
pub fn table1_csv<T: Real>(rows: &[ReportRow<T>], decimals: usize) -> String {
    let mut out = String::from(TABLE1_COLUMNS);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{:.d$},{:.d$},{:.d$},{:.d$}\n",
            r.p,
            r.h.as_f64(),
            r.vol_orthoscheme.as_f64(),
            r.vol_lens.as_f64(),
            r.delta.as_f64(),
            d = decimals
        ));
    }
    out
}

pub fn sweep_csv<T: Real>(points: &[SweepPoint<T>], decimals: usize) -> String {
    let mut out = String::from(SWEEP_COLUMNS);
    out.push('\n');
    for s in points {
        out.push_str(&format!(
            "{:.d$},{:.d$}\n",
            s.x.as_f64(),
            s.delta.as_f64(),
            d = decimals
        ));
    }
    out
}
