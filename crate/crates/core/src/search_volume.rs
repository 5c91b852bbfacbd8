//! Search-volume accounting: how much solid angle the radar scans, and how
//! much of it the nulled sector costs at a given standoff distance.
//!
//! Solid angles follow the square-degree convention `Omega = az * el / c^2`
//! with the literal constant `c = 57.296` (the conventional degrees-per-radian
//! figure, kept literal rather than recomputed as 180/pi so the unit point is
//! exact). The blocked area can be given directly in square degrees or derived
//! from a planar base-station region of a given width and height band seen
//! from a standoff distance.

use crate::scalar::{as_f64, lit};
use crate::{Error, Result, Scalar};
use num_traits::Float;

/// Degrees-per-radian figure used by the solid-angle formulas, as a literal.
pub const DEG_PER_RAD_CONVENTION: f64 = 57.296;

/// Total angular span the radar searches, in degrees on each axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchExtent<T: Scalar> {
    az_extent: T,
    el_extent: T,
}

impl<T: Scalar> SearchExtent<T> {
    pub fn new(az_extent: T, el_extent: T) -> Result<Self> {
        for (what, v, max) in [
            ("az_extent", az_extent, 360.0),
            ("el_extent", el_extent, 180.0),
        ] {
            if !Float::is_finite(v) {
                return Err(Error::NonFinite { what });
            }
            if v <= T::zero() || v > lit(max) {
                return Err(Error::OutOfRange {
                    what,
                    value: as_f64(v),
                    min: 0.0,
                    max,
                });
            }
        }
        Ok(Self {
            az_extent,
            el_extent,
        })
    }

    pub fn az_extent(&self) -> T {
        self.az_extent
    }

    pub fn el_extent(&self) -> T {
        self.el_extent
    }

    /// Angular area in square degrees.
    fn area_deg2(&self) -> T {
        self.az_extent * self.el_extent
    }
}

/// Solid-angle bookkeeping for one blocked-area value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchVolumeReport<T: Scalar> {
    /// Full search volume in steradians.
    pub omega_sr: T,
    /// Remaining searchable volume in steradians.
    pub omega_nsp_sr: T,
    /// Blocked angular area in square degrees.
    pub null_deg2: T,
    /// `100 * omega_nsp / omega`, in [0, 100].
    pub percent_searchable: T,
}

/// Planar base-station region: a horizontal span of `width_m` and a height
/// band `[height_min_m, height_max_m]`, faced broadside at some distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BsRegion<T: Scalar> {
    width_m: T,
    height_min_m: T,
    height_max_m: T,
}

impl<T: Scalar> BsRegion<T> {
    pub fn new(width_m: T, height_min_m: T, height_max_m: T) -> Result<Self> {
        for (what, v) in [
            ("width_m", width_m),
            ("height_min_m", height_min_m),
            ("height_max_m", height_max_m),
        ] {
            if !Float::is_finite(v) {
                return Err(Error::NonFinite { what });
            }
        }
        if width_m < T::zero() {
            return Err(Error::Domain {
                what: "width_m",
                value: as_f64(width_m),
                reason: "negative",
            });
        }
        if height_max_m < height_min_m {
            return Err(Error::Domain {
                what: "height_max_m",
                value: as_f64(height_max_m),
                reason: "below height_min_m",
            });
        }
        Ok(Self {
            width_m,
            height_min_m,
            height_max_m,
        })
    }

    pub fn width_m(&self) -> T {
        self.width_m
    }

    pub fn height_min_m(&self) -> T {
        self.height_min_m
    }

    pub fn height_max_m(&self) -> T {
        self.height_max_m
    }
}

/// `az * el / 57.296^2` steradians. Exactly 1 at (57.296, 57.296) because
/// numerator and denominator are the same product.
pub fn solid_angle<T: Scalar>(extent: &SearchExtent<T>) -> T {
    let c: T = lit(DEG_PER_RAD_CONVENTION);
    extent.area_deg2() / (c * c)
}

/// Splits the search volume around a blocked area given in square degrees.
pub fn nsp_solid_angle<T: Scalar>(
    extent: &SearchExtent<T>,
    null_deg2: T,
) -> Result<SearchVolumeReport<T>> {
    if !Float::is_finite(null_deg2) {
        return Err(Error::NonFinite { what: "null_deg2" });
    }
    let area = extent.area_deg2();
    if null_deg2 < T::zero() || null_deg2 > area {
        return Err(Error::Domain {
            what: "null_deg2",
            value: as_f64(null_deg2),
            reason: "outside [0, az_extent * el_extent]",
        });
    }
    let c: T = lit(DEG_PER_RAD_CONVENTION);
    let c2 = c * c;
    Ok(SearchVolumeReport {
        omega_sr: area / c2,
        omega_nsp_sr: (area - null_deg2) / c2,
        null_deg2,
        percent_searchable: lit::<T>(100.0) * (area - null_deg2) / area,
    })
}

/// Angular area in square degrees subtended by a region at a standoff:
/// azimuth span `2 atan(w / 2d)` across, elevation span
/// `atan(h_max / d) - atan(h_min / d)` high, both in degrees.
///
/// The result decreases with distance whenever `height_min_m <= 0` or
/// `standoff_m >= sqrt(height_min_m * height_max_m)`; very close standoffs
/// below an elevated region can still see the subtended band grow.
pub fn null_extent_from_geometry<T: Scalar>(bs_region: &BsRegion<T>, standoff_m: T) -> Result<T> {
    if !Float::is_finite(standoff_m) {
        return Err(Error::NonFinite { what: "standoff_m" });
    }
    if standoff_m <= T::zero() {
        return Err(Error::NonPositive {
            what: "standoff_m",
            value: as_f64(standoff_m),
        });
    }
    let deg_per_rad = lit::<T>(180.0) / T::pi();
    let two = lit::<T>(2.0);
    let az_span = two * Float::atan(bs_region.width_m() / (two * standoff_m)) * deg_per_rad;
    let el_span = (Float::atan(bs_region.height_max_m() / standoff_m)
        - Float::atan(bs_region.height_min_m() / standoff_m))
        * deg_per_rad;
    Ok(az_span * el_span)
}

/// Percent searchable at each standoff distance, via the region geometry.
///
/// A region subtending more than the whole extent saturates at 0 percent
/// searchable rather than erroring.
pub fn distance_sweep<T: Scalar>(
    extent: &SearchExtent<T>,
    bs_region: &BsRegion<T>,
    distances: &[T],
) -> Result<Vec<(T, T)>> {
    let area = extent.area_deg2();
    let mut out = Vec::with_capacity(distances.len());
    for &d in distances {
        let null = null_extent_from_geometry(bs_region, d)?;
        let clamped = Float::min(null, area);
        let report = nsp_solid_angle(extent, clamped)?;
        out.push((d, report.percent_searchable));
    }
    Ok(out)
}

/// Solves for the region width that makes the sweep hit an anchor point
/// `(anchor_distance_m, anchor_percent)`, keeping the height band. The azimuth
/// span formula inverts in closed form, so the anchor is reproduced to
/// rounding error. Fails when the height band subtends nothing (no width can
/// block area) or the requested blockage exceeds what a 180 degree azimuth
/// span can cover.
pub fn calibrate_region_width<T: Scalar>(
    extent: &SearchExtent<T>,
    bs_region: &BsRegion<T>,
    anchor_distance_m: T,
    anchor_percent: T,
) -> Result<BsRegion<T>> {
    if !Float::is_finite(anchor_percent) {
        return Err(Error::NonFinite {
            what: "anchor_percent",
        });
    }
    if anchor_percent < T::zero() || anchor_percent > lit(100.0) {
        return Err(Error::OutOfRange {
            what: "anchor_percent",
            value: as_f64(anchor_percent),
            min: 0.0,
            max: 100.0,
        });
    }
    if !Float::is_finite(anchor_distance_m) {
        return Err(Error::NonFinite {
            what: "anchor_distance_m",
        });
    }
    if anchor_distance_m <= T::zero() {
        return Err(Error::NonPositive {
            what: "anchor_distance_m",
            value: as_f64(anchor_distance_m),
        });
    }
    let area = extent.area_deg2();
    let target_null = (T::one() - anchor_percent / lit(100.0)) * area;
    if target_null == T::zero() {
        return BsRegion::new(T::zero(), bs_region.height_min_m(), bs_region.height_max_m());
    }
    let deg_per_rad = lit::<T>(180.0) / T::pi();
    let el_span = (Float::atan(bs_region.height_max_m() / anchor_distance_m)
        - Float::atan(bs_region.height_min_m() / anchor_distance_m))
        * deg_per_rad;
    if el_span <= T::zero() {
        return Err(Error::CalibrationInfeasible {
            target_percent: as_f64(anchor_percent),
            distance_m: as_f64(anchor_distance_m),
            reason: "height band subtends zero elevation span",
        });
    }
    let az_target = target_null / el_span;
    if az_target >= lit(180.0) {
        return Err(Error::CalibrationInfeasible {
            target_percent: as_f64(anchor_percent),
            distance_m: as_f64(anchor_distance_m),
            reason: "required azimuth span reaches the 180 degree limit",
        });
    }
    let two = lit::<T>(2.0);
    let width = two * anchor_distance_m * Float::tan(az_target / deg_per_rad / two);
    BsRegion::new(width, bs_region.height_min_m(), bs_region.height_max_m())
}
