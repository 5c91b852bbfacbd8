//! Transmit covariances, factor-domain projection, and beampattern evaluation.
//!
//! The transmit side is described by a pair of factor covariances (elevation
//! `m_v x m_v`, azimuth `m_h x m_h`). Each factor is pushed through its
//! null-space projector, and the two are combined across the target steering
//! outer product into a single `m_h x m_v` cross covariance:
//!
//! `R = (P_h R_azm P_h^H) a_h(t) a_v(t)^H R_elv + R_azm a_h(t) a_v(t)^H (P_v R_elv P_v^H)`
//!
//! The pattern at a direction is `G(az, el) = |a_h(az)^H R a_v(el)|`, reported
//! in dB. Nulling either factor at a constraint angle zeroes `G` along that
//! entire angle slice, which is what makes the factor-domain approach work.

use crate::array_geometry::{steering_entries, AngleDeg, UraGeometry};
use crate::channel::NullSector;
use crate::nsp::{hermitian_defect, project_covariance, Projector};
use crate::scalar::{as_f64, from_count, lit};
use crate::{CMatrix, CVector, Cplx, Error, Result, Scalar};
use num_traits::Float;
use rayon::prelude::*;

/// Real-valued grid storage.
pub type RMatrix<T> = nalgebra::DMatrix<T>;

/// Default dB clamp applied at exact nulls.
pub const DEFAULT_FLOOR_DB: f64 = -200.0;

/// Upper bound on grid points per evaluation, to catch runaway grids before
/// allocating.
pub const MAX_GRID_POINTS: usize = 16_777_216;

/// Rank-1 covariance `a a^H` aimed at `angle` in an `m_d`-dimensional factor
/// domain. The diagonal is pinned to exactly 1 (unit-modulus steering), so the
/// trace is exactly `m_d`.
pub fn steered_covariance<T: Scalar>(
    angle: T,
    m_d: usize,
    geometry: &UraGeometry<T>,
) -> Result<CMatrix<T>> {
    if m_d == 0 {
        return Err(Error::EmptyDimension { what: "m_d" });
    }
    if !Float::is_finite(angle) {
        return Err(Error::NonFinite { what: "angle" });
    }
    let a = steering_entries(angle, m_d, geometry.spacing());
    let mut r = CMatrix::zeros(m_d, m_d);
    for i in 0..m_d {
        for j in 0..m_d {
            r[(i, j)] = a[i] * a[j].conj();
        }
        r[(i, i)] = Cplx::new(T::one(), T::zero());
    }
    Ok(r)
}

/// Factor-domain transmit covariances: elevation first, azimuth second.
///
/// Construction validates shape and Hermitian symmetry (within 1e-10 relative
/// to the largest entry); positive semidefiniteness is the caller's contract
/// and is not re-verified.
#[derive(Debug, Clone, PartialEq)]
pub struct CovariancePair<T: Scalar> {
    r_elv: CMatrix<T>,
    r_azm: CMatrix<T>,
}

impl<T: Scalar> CovariancePair<T> {
    pub fn new(r_elv: CMatrix<T>, r_azm: CMatrix<T>) -> Result<Self> {
        for (m, context) in [
            (&r_elv, "elevation covariance"),
            (&r_azm, "azimuth covariance"),
        ] {
            if m.nrows() != m.ncols() {
                return Err(Error::ShapeMismatch {
                    context,
                    expected_rows: m.nrows(),
                    expected_cols: m.nrows(),
                    rows: m.nrows(),
                    cols: m.ncols(),
                });
            }
            let defect = hermitian_defect(m);
            let scale = m.iter().map(|z| z.norm()).fold(T::one(), Float::max);
            if defect > lit::<T>(1e-10) * scale {
                return Err(Error::NotHermitian {
                    defect: as_f64(defect),
                });
            }
        }
        Ok(Self { r_elv, r_azm })
    }

    pub fn r_elv(&self) -> &CMatrix<T> {
        &self.r_elv
    }

    pub fn r_azm(&self) -> &CMatrix<T> {
        &self.r_azm
    }
}

/// Combined `m_h x m_v` cross covariance after factor-domain projection,
/// tagged with the target direction used in the cross terms.
#[derive(Debug, Clone, PartialEq)]
pub struct NspCovariance<T: Scalar> {
    matrix: CMatrix<T>,
    target: AngleDeg<T>,
}

impl<T: Scalar> NspCovariance<T> {
    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.matrix
    }

    pub fn target(&self) -> &AngleDeg<T> {
        &self.target
    }
}

/// Projects each factor covariance and combines the two across the target
/// steering outer product (see the module docs for the formula).
pub fn combine_nsp_covariance<T: Scalar>(
    cov: &CovariancePair<T>,
    p_h: &Projector<T>,
    p_v: &Projector<T>,
    target: &AngleDeg<T>,
    radar: &UraGeometry<T>,
) -> Result<NspCovariance<T>> {
    let m_h = radar.m_h();
    let m_v = radar.m_v();
    for (dim, expected, context) in [
        (cov.r_azm().nrows(), m_h, "azimuth covariance vs radar"),
        (cov.r_elv().nrows(), m_v, "elevation covariance vs radar"),
        (p_h.dim(), m_h, "azimuth projector vs radar"),
        (p_v.dim(), m_v, "elevation projector vs radar"),
    ] {
        if dim != expected {
            return Err(Error::ShapeMismatch {
                context,
                expected_rows: expected,
                expected_cols: expected,
                rows: dim,
                cols: dim,
            });
        }
    }
    let r_azm_null = project_covariance(p_h, cov.r_azm())?;
    let r_elv_null = project_covariance(p_v, cov.r_elv())?;
    let a_ht = steering_entries(target.azimuth(), m_h, radar.spacing());
    let a_vt = steering_entries(target.elevation(), m_v, radar.spacing());
    let mut cross = CMatrix::zeros(m_h, m_v);
    for i in 0..m_h {
        for j in 0..m_v {
            cross[(i, j)] = a_ht[i] * a_vt[j].conj();
        }
    }
    let matrix = &r_azm_null * &cross * cov.r_elv() + cov.r_azm() * &cross * &r_elv_null;
    if matrix
        .iter()
        .any(|z| !Float::is_finite(z.re) || !Float::is_finite(z.im))
    {
        return Err(Error::NonFinite {
            what: "combined covariance entry",
        });
    }
    Ok(NspCovariance {
        matrix,
        target: *target,
    })
}

/// Beampattern evaluation knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeampatternOptions<T: Scalar> {
    /// Lower clamp for dB values; exact nulls land here.
    pub floor_db: T,
    /// When set, the whole grid is shifted so its peak sits at this level.
    pub normalize_peak_db: Option<T>,
}

impl<T: Scalar> Default for BeampatternOptions<T> {
    fn default() -> Self {
        Self {
            floor_db: lit(DEFAULT_FLOOR_DB),
            normalize_peak_db: None,
        }
    }
}

/// Sampled pattern surface in dB with its peak located.
///
/// `gain_db` is elevation-major storage: row index follows `el_samples`,
/// column index follows `az_samples`. The peak is the first strictly greater
/// value in azimuth-major scan order (ascending azimuth, then ascending
/// elevation), which makes the argmax deterministic even under the exact
/// mirror-angle ties of the cosine steering convention.
#[derive(Debug, Clone, PartialEq)]
pub struct BeampatternGrid<T: Scalar> {
    az_samples: Vec<T>,
    el_samples: Vec<T>,
    gain_db: RMatrix<T>,
    peak_db: T,
    peak_angle: AngleDeg<T>,
    floor_db: T,
}

impl<T: Scalar> BeampatternGrid<T> {
    pub fn az_samples(&self) -> &[T] {
        &self.az_samples
    }

    pub fn el_samples(&self) -> &[T] {
        &self.el_samples
    }

    /// dB values, `el_samples.len()` rows by `az_samples.len()` columns.
    pub fn gain_db(&self) -> &RMatrix<T> {
        &self.gain_db
    }

    pub fn peak_db(&self) -> T {
        self.peak_db
    }

    pub fn peak_angle(&self) -> &AngleDeg<T> {
        &self.peak_angle
    }

    pub fn floor_db(&self) -> T {
        self.floor_db
    }
}

/// Evaluates `G(az, el) = |a_h(az)^H R a_v(el)|` in dB over the sample grid.
///
/// Exact nulls clamp to `floor_db`. With `normalize_peak_db` set, every value
/// is shifted so the grid peak sits at that level (an all-null grid has no
/// peak to pin and stays at the floor). Columns are evaluated in parallel;
/// each grid point's arithmetic is independent of evaluation order, so
/// results do not depend on scheduling.
pub fn beampattern<T: Scalar>(
    r: &NspCovariance<T>,
    az_samples: &[T],
    el_samples: &[T],
    radar: &UraGeometry<T>,
    opts: &BeampatternOptions<T>,
) -> Result<BeampatternGrid<T>> {
    if az_samples.is_empty() {
        return Err(Error::EmptyInput {
            what: "azimuth sample list",
        });
    }
    if el_samples.is_empty() {
        return Err(Error::EmptyInput {
            what: "elevation sample list",
        });
    }
    if az_samples
        .iter()
        .chain(el_samples.iter())
        .any(|a| !Float::is_finite(*a))
    {
        return Err(Error::NonFinite {
            what: "grid sample",
        });
    }
    if !Float::is_finite(opts.floor_db) {
        return Err(Error::NonFinite { what: "floor_db" });
    }
    if let Some(level) = opts.normalize_peak_db {
        if !Float::is_finite(level) {
            return Err(Error::NonFinite {
                what: "normalize_peak_db",
            });
        }
    }
    let m_h = radar.m_h();
    let m_v = radar.m_v();
    if r.matrix().nrows() != m_h || r.matrix().ncols() != m_v {
        return Err(Error::ShapeMismatch {
            context: "combined covariance vs radar",
            expected_rows: m_h,
            expected_cols: m_v,
            rows: r.matrix().nrows(),
            cols: r.matrix().ncols(),
        });
    }
    if az_samples.len().saturating_mul(el_samples.len()) > MAX_GRID_POINTS {
        return Err(Error::Domain {
            what: "grid point count",
            value: az_samples.len() as f64 * el_samples.len() as f64,
            reason: "exceeds the grid size limit",
        });
    }

    let spacing = radar.spacing();
    let a_vs: Vec<CVector<T>> = el_samples
        .iter()
        .map(|&el| steering_entries(el, m_v, spacing))
        .collect();
    let twenty: T = lit(20.0);
    let m = r.matrix();
    // One column per azimuth sample: y = R^H a_h once, then dot each a_v.
    let columns: Vec<Vec<T>> = (0..az_samples.len())
        .into_par_iter()
        .map(|ai| {
            let a_h = steering_entries(az_samples[ai], m_h, spacing);
            let y = m.ad_mul(&a_h);
            a_vs.iter()
                .map(|a_v| twenty * Float::log10(y.dotc(a_v).norm()))
                .collect()
        })
        .collect();

    let mut raw_peak = T::neg_infinity();
    for col in &columns {
        for &v in col {
            if v > raw_peak {
                raw_peak = v;
            }
        }
    }
    let offset = match opts.normalize_peak_db {
        Some(level) if Float::is_finite(raw_peak) => level - raw_peak,
        _ => T::zero(),
    };

    let floor = opts.floor_db;
    let mut gain_db = RMatrix::zeros(el_samples.len(), az_samples.len());
    for (ai, col) in columns.iter().enumerate() {
        for (ei, &raw) in col.iter().enumerate() {
            gain_db[(ei, ai)] = Float::max(raw + offset, floor);
        }
    }

    let mut peak_db = T::neg_infinity();
    let mut peak = (0usize, 0usize);
    for ai in 0..az_samples.len() {
        for ei in 0..el_samples.len() {
            let v = gain_db[(ei, ai)];
            if v > peak_db {
                peak_db = v;
                peak = (ai, ei);
            }
        }
    }
    let peak_angle = AngleDeg::unchecked(az_samples[peak.0], el_samples[peak.1]);

    Ok(BeampatternGrid {
        az_samples: az_samples.to_vec(),
        el_samples: el_samples.to_vec(),
        gain_db,
        peak_db,
        peak_angle,
        floor_db: floor,
    })
}

/// Aggregates over the grid points inside one sector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SectorMetrics<T: Scalar> {
    pub max_db: T,
    pub mean_db: T,
    /// Grid peak minus the sector maximum: the realized suppression depth.
    pub peak_to_sector_db: T,
}

/// Max and mean dB over the grid points falling inside the sector bounds
/// (inclusive), plus the peak-to-sector suppression depth.
pub fn sector_metrics<T: Scalar>(
    grid: &BeampatternGrid<T>,
    sector: &NullSector<T>,
) -> Result<SectorMetrics<T>> {
    let mut max_db = T::neg_infinity();
    let mut sum = T::zero();
    let mut count = 0usize;
    for (ai, &az) in grid.az_samples().iter().enumerate() {
        for (ei, &el) in grid.el_samples().iter().enumerate() {
            if sector.contains(az, el) {
                let v = grid.gain_db()[(ei, ai)];
                if v > max_db {
                    max_db = v;
                }
                sum = sum + v;
                count += 1;
            }
        }
    }
    if count == 0 {
        return Err(Error::EmptySectorOverlap {
            az_min: as_f64(sector.az_min()),
            az_max: as_f64(sector.az_max()),
            el_min: as_f64(sector.el_min()),
            el_max: as_f64(sector.el_max()),
        });
    }
    Ok(SectorMetrics {
        max_db,
        mean_db: sum / from_count(count),
        peak_to_sector_db: grid.peak_db() - max_db,
    })
}
