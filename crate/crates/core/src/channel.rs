//! Line-of-sight interference channels between the radar URA and base-station
//! ULAs, in block-partitioned form, plus the sampled sector constraints fed to
//! the null-space projectors.
//!
//! A single LoS link is rank 1: the channel toward one radar element column is
//! `path_gain * c * a_v(phi_B)^T` (plain transpose, no conjugation), where `c`
//! is the BS-side ULA response and `a_v` the radar elevation steering toward
//! the BS. Adjacent radar columns differ only by the azimuth phase factor, so
//! the full channel is a Kronecker product of an azimuth steering vector with
//! the first-column block; the elevation-major partition mirrors this with the
//! roles of the axes swapped.

use crate::array_geometry::{sample_axis, steering_entries, AngleDeg, UlaGeometry, UraGeometry};
use crate::scalar::as_f64;
use crate::{CMatrix, Cplx, Error, Result, Scalar};
use num_traits::{Float, One, Zero};

/// Which factor axis of the URA a matrix is organized around.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorDomain {
    /// Horizontal axis: `m_h` blocks (or an `m_h`-dimensional factor space).
    Azimuth,
    /// Vertical axis: `m_v` blocks (or an `m_v`-dimensional factor space).
    Elevation,
}

/// A base station as seen from the radar: direction, array size, and link
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BsDescriptor<T: Scalar> {
    angle: AngleDeg<T>,
    array: UlaGeometry,
    path_gain: Cplx<T>,
    bs_side_angle_deg: T,
}

impl<T: Scalar> BsDescriptor<T> {
    /// BS at the given direction with unit path gain and a broadside (90
    /// degree) radar bearing on the BS side, which makes the BS-side response
    /// all-ones.
    pub fn new(angle: AngleDeg<T>, array: UlaGeometry) -> Self {
        Self {
            angle,
            array,
            path_gain: Cplx::one(),
            bs_side_angle_deg: crate::scalar::lit(90.0),
        }
    }

    /// Replaces the complex path gain; must be finite and nonzero.
    pub fn with_path_gain(mut self, gain: Cplx<T>) -> Result<Self> {
        if !Float::is_finite(gain.re) || !Float::is_finite(gain.im) {
            return Err(Error::NonFinite { what: "path_gain" });
        }
        if gain.is_zero() {
            return Err(Error::NonPositive {
                what: "path_gain modulus",
                value: 0.0,
            });
        }
        self.path_gain = gain;
        Ok(self)
    }

    /// Replaces the angle of the radar as seen from the BS ULA, in degrees.
    pub fn with_bs_side_angle(mut self, angle_deg: T) -> Result<Self> {
        if !Float::is_finite(angle_deg) {
            return Err(Error::NonFinite { what: "bs_side_angle" });
        }
        self.bs_side_angle_deg = angle_deg;
        Ok(self)
    }

    pub fn angle(&self) -> &AngleDeg<T> {
        &self.angle
    }

    pub fn array(&self) -> &UlaGeometry {
        &self.array
    }

    pub fn path_gain(&self) -> Cplx<T> {
        self.path_gain
    }

    pub fn bs_side_angle_deg(&self) -> T {
        self.bs_side_angle_deg
    }
}

/// Angular rectangle to suppress, with the sampling step used to turn the
/// continuous sector into steering constraints (default 1 degree).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NullSector<T: Scalar> {
    az_min: T,
    az_max: T,
    el_min: T,
    el_max: T,
    step: T,
}

impl<T: Scalar> NullSector<T> {
    pub fn new(az_min: T, az_max: T, el_min: T, el_max: T) -> Result<Self> {
        for (what, v) in [
            ("az_min", az_min),
            ("az_max", az_max),
            ("el_min", el_min),
            ("el_max", el_max),
        ] {
            if !Float::is_finite(v) {
                return Err(Error::NonFinite { what });
            }
        }
        if az_min > az_max {
            return Err(Error::Domain {
                what: "az_min",
                value: as_f64(az_min),
                reason: "exceeds az_max",
            });
        }
        if el_min > el_max {
            return Err(Error::Domain {
                what: "el_min",
                value: as_f64(el_min),
                reason: "exceeds el_max",
            });
        }
        Ok(Self {
            az_min,
            az_max,
            el_min,
            el_max,
            step: T::one(),
        })
    }

    /// Replaces the sampling step; must be finite and positive.
    pub fn with_step(mut self, step: T) -> Result<Self> {
        if !Float::is_finite(step) {
            return Err(Error::NonFinite { what: "step" });
        }
        if step <= T::zero() {
            return Err(Error::NonPositive {
                what: "step",
                value: as_f64(step),
            });
        }
        self.step = step;
        Ok(self)
    }

    pub fn az_min(&self) -> T {
        self.az_min
    }

    pub fn az_max(&self) -> T {
        self.az_max
    }

    pub fn el_min(&self) -> T {
        self.el_min
    }

    pub fn el_max(&self) -> T {
        self.el_max
    }

    pub fn step(&self) -> T {
        self.step
    }

    /// Inclusive containment test for a grid point.
    pub fn contains(&self, az: T, el: T) -> bool {
        az >= self.az_min && az <= self.az_max && el >= self.el_min && el <= self.el_max
    }
}

/// Complex interference channel with its URA partition recorded.
///
/// `layout` says how the columns are grouped: [`FactorDomain::Azimuth`] means
/// `m_h` blocks of `m_v` columns (element order matching `linear_index`);
/// [`FactorDomain::Elevation`] means `m_v` blocks of `m_h` columns.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelMatrix<T: Scalar> {
    entries: CMatrix<T>,
    partition: (usize, usize),
    layout: FactorDomain,
}

impl<T: Scalar> ChannelMatrix<T> {
    /// Wraps a raw matrix, checking the column count against the partition
    /// and that every entry is finite.
    pub fn new(entries: CMatrix<T>, partition: (usize, usize), layout: FactorDomain) -> Result<Self> {
        let (m_h, m_v) = partition;
        if entries.ncols() != m_h * m_v {
            return Err(Error::ShapeMismatch {
                context: "channel matrix columns vs partition",
                expected_rows: entries.nrows(),
                expected_cols: m_h * m_v,
                rows: entries.nrows(),
                cols: entries.ncols(),
            });
        }
        if entries
            .iter()
            .any(|z| !Float::is_finite(z.re) || !Float::is_finite(z.im))
        {
            return Err(Error::NonFinite { what: "channel entry" });
        }
        Ok(Self {
            entries,
            partition,
            layout,
        })
    }

    pub fn entries(&self) -> &CMatrix<T> {
        &self.entries
    }

    pub fn into_entries(self) -> CMatrix<T> {
        self.entries
    }

    /// `(m_h, m_v)` of the radar array the columns are indexed by.
    pub fn partition(&self) -> (usize, usize) {
        self.partition
    }

    pub fn layout(&self) -> FactorDomain {
        self.layout
    }

    pub fn nrows(&self) -> usize {
        self.entries.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.entries.ncols()
    }
}

/// Channel block toward the first radar element column: an `N x m_v` rank-1
/// outer product `path_gain * c * a_v(phi_B)^T` with `c` the BS-side ULA
/// response at the descriptor's BS-side angle.
pub fn build_base_submatrix<T: Scalar>(
    bs: &BsDescriptor<T>,
    radar: &UraGeometry<T>,
) -> Result<CMatrix<T>> {
    rank1_block(bs, radar, bs.angle().elevation(), radar.m_v())
}

/// Channel block toward the first radar element row: an `N x m_h` rank-1
/// outer product `path_gain * c * a_h(theta_B)^T`.
pub fn build_base_row_submatrix<T: Scalar>(
    bs: &BsDescriptor<T>,
    radar: &UraGeometry<T>,
) -> Result<CMatrix<T>> {
    rank1_block(bs, radar, bs.angle().azimuth(), radar.m_h())
}

fn rank1_block<T: Scalar>(
    bs: &BsDescriptor<T>,
    radar: &UraGeometry<T>,
    radar_angle: T,
    width: usize,
) -> Result<CMatrix<T>> {
    let n = bs.array().n();
    // The BS ULA spacing is not modeled separately; the radar's wavelength-
    // normalized spacing is reused. At the default 90 degree side angle the
    // response is all-ones and the value never matters.
    let c = steering_entries(bs.bs_side_angle_deg(), n, radar.spacing());
    let a = steering_entries(radar_angle, width, radar.spacing());
    let gain = bs.path_gain();
    let mut out = CMatrix::zeros(n, width);
    for u in 0..n {
        let row_gain = gain * c[u];
        for j in 0..width {
            out[(u, j)] = row_gain * a[j];
        }
    }
    Ok(out)
}

/// Expands the first-column block into the full azimuth-major channel:
/// block `k` (0-based) is the base scaled by azimuth phase
/// `exp(-j 2 pi k d_s cos(theta_b))`.
pub fn assemble_azimuth_partition<T: Scalar>(
    base: &CMatrix<T>,
    theta_b: T,
    radar: &UraGeometry<T>,
) -> Result<ChannelMatrix<T>> {
    assemble_partition(base, theta_b, radar, FactorDomain::Azimuth)
}

/// Expands the first-row block into the full elevation-major channel:
/// block `l` (0-based) is the base scaled by elevation phase
/// `exp(-j 2 pi l d_s cos(phi_b))`.
pub fn assemble_elevation_partition<T: Scalar>(
    base: &CMatrix<T>,
    phi_b: T,
    radar: &UraGeometry<T>,
) -> Result<ChannelMatrix<T>> {
    assemble_partition(base, phi_b, radar, FactorDomain::Elevation)
}

fn assemble_partition<T: Scalar>(
    base: &CMatrix<T>,
    angle_deg: T,
    radar: &UraGeometry<T>,
    layout: FactorDomain,
) -> Result<ChannelMatrix<T>> {
    if !Float::is_finite(angle_deg) {
        return Err(Error::NonFinite { what: "partition angle" });
    }
    let (blocks, width, context) = match layout {
        FactorDomain::Azimuth => (radar.m_h(), radar.m_v(), "azimuth partition base"),
        FactorDomain::Elevation => (radar.m_v(), radar.m_h(), "elevation partition base"),
    };
    if base.ncols() != width {
        return Err(Error::ShapeMismatch {
            context,
            expected_rows: base.nrows(),
            expected_cols: width,
            rows: base.nrows(),
            cols: base.ncols(),
        });
    }
    let factor = steering_entries(angle_deg, blocks, radar.spacing());
    let n = base.nrows();
    let mut entries = CMatrix::zeros(n, blocks * width);
    for b in 0..blocks {
        let f = factor[b];
        for j in 0..width {
            for u in 0..n {
                entries[(u, b * width + j)] = f * base[(u, j)];
            }
        }
    }
    ChannelMatrix::new(entries, (radar.m_h(), radar.m_v()), layout)
}

/// Steering constraints for one factor domain of a sector: one row per
/// sampled angle, each row the conjugate transpose of the domain steering
/// vector, so the retained singular directions span the steering vectors
/// themselves. Sampling covers the domain's angle range at the sector step
/// with both endpoints always included.
pub fn sector_constraint_matrix<T: Scalar>(
    sector: &NullSector<T>,
    radar: &UraGeometry<T>,
    domain: FactorDomain,
) -> Result<CMatrix<T>> {
    let (min, max, m_d) = match domain {
        FactorDomain::Azimuth => (sector.az_min(), sector.az_max(), radar.m_h()),
        FactorDomain::Elevation => (sector.el_min(), sector.el_max(), radar.m_v()),
    };
    let angles = sample_axis(min, max, sector.step())?;
    let mut out = CMatrix::zeros(angles.len(), m_d);
    for (r, &angle) in angles.iter().enumerate() {
        let a = steering_entries(angle, m_d, radar.spacing());
        for c in 0..m_d {
            out[(r, c)] = a[c].conj();
        }
    }
    Ok(out)
}

/// Vertically concatenates channels observed by different receivers.
///
/// All inputs must share the same partition and layout so the column indexing
/// stays meaningful; the row blocks keep their order.
pub fn stack_channels<T: Scalar>(parts: &[ChannelMatrix<T>]) -> Result<ChannelMatrix<T>> {
    let first = parts.first().ok_or(Error::EmptyInput {
        what: "channel list",
    })?;
    let partition = first.partition();
    let layout = first.layout();
    let ncols = first.ncols();
    let mut total_rows = 0;
    for part in parts {
        if part.partition() != partition || part.layout() != layout {
            return Err(Error::ShapeMismatch {
                context: "stacked channel partitions",
                expected_rows: part.nrows(),
                expected_cols: ncols,
                rows: part.nrows(),
                cols: part.ncols(),
            });
        }
        total_rows += part.nrows();
    }
    let mut entries = CMatrix::zeros(total_rows, ncols);
    let mut row = 0;
    for part in parts {
        entries
            .rows_mut(row, part.nrows())
            .copy_from(part.entries());
        row += part.nrows();
    }
    ChannelMatrix::new(entries, partition, layout)
}
