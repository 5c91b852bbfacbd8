//! Array descriptions, element indexing, and steering vectors.
//!
//! The radar is an `m_h x m_v` uniform rectangular array (URA): `m_h` element
//! columns spaced horizontally, each a vertical line of `m_v` elements.
//! Elements are numbered 1-based with the elevation (vertical) index varying
//! fastest: element `(l, k)` maps to `s = (k - 1) * m_v + l`.
//!
//! Steering phases follow the cosine convention: entry `k` (1-based) of a
//! steering vector is `exp(-j 2 pi (k - 1) d_s cos(angle))` with the spacing
//! `d_s` in wavelengths. Broadside is therefore at 90 degrees (zero phase,
//! all-ones vector), and a steering vector at `-x` equals the one at `+x`
//! exactly, so a beampattern cannot distinguish an angle from its negative.

use crate::scalar::{as_f64, from_count, lit};
use crate::{CVector, Cplx, Error, Result, Scalar};
use num_traits::Float;

/// Default element spacing in wavelengths.
pub const DEFAULT_SPACING: f64 = 0.5;

/// Uniform rectangular array: `m_h` columns of `m_v` elements, spaced
/// `spacing` wavelengths apart on both axes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UraGeometry<T: Scalar> {
    m_h: usize,
    m_v: usize,
    spacing: T,
}

impl<T: Scalar> UraGeometry<T> {
    /// Builds a URA description; `spacing` is in wavelengths.
    pub fn new(m_h: usize, m_v: usize, spacing: T) -> Result<Self> {
        if m_h == 0 {
            return Err(Error::EmptyDimension { what: "m_h" });
        }
        if m_v == 0 {
            return Err(Error::EmptyDimension { what: "m_v" });
        }
        if !Float::is_finite(spacing) {
            return Err(Error::NonFinite { what: "spacing" });
        }
        if spacing <= T::zero() {
            return Err(Error::NonPositive {
                what: "spacing",
                value: as_f64(spacing),
            });
        }
        Ok(Self { m_h, m_v, spacing })
    }

    /// URA at the default half-wavelength spacing.
    pub fn half_wavelength(m_h: usize, m_v: usize) -> Result<Self> {
        Self::new(m_h, m_v, lit(DEFAULT_SPACING))
    }

    pub fn m_h(&self) -> usize {
        self.m_h
    }

    pub fn m_v(&self) -> usize {
        self.m_v
    }

    /// Element spacing in wavelengths.
    pub fn spacing(&self) -> T {
        self.spacing
    }

    /// Total element count `M = m_h * m_v`.
    pub fn total_elements(&self) -> usize {
        self.m_h * self.m_v
    }
}

/// Uniform linear array with `n` elements (the base-station side).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UlaGeometry {
    n: usize,
}

impl UlaGeometry {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDimension { what: "n" });
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// An (azimuth, elevation) direction in degrees.
///
/// Validated at construction: azimuth in [-180, 180], elevation in [-90, 90].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AngleDeg<T: Scalar> {
    azimuth: T,
    elevation: T,
}

impl<T: Scalar> AngleDeg<T> {
    pub fn new(azimuth: T, elevation: T) -> Result<Self> {
        check_range("azimuth", azimuth, -180.0, 180.0)?;
        check_range("elevation", elevation, -90.0, 90.0)?;
        Ok(Self { azimuth, elevation })
    }

    /// Carries grid samples verbatim (already validated as finite) into
    /// outputs such as the beampattern peak, which may legitimately sit
    /// outside the construction ranges when the caller sweeps a wider grid.
    pub(crate) fn unchecked(azimuth: T, elevation: T) -> Self {
        Self { azimuth, elevation }
    }

    pub fn azimuth(&self) -> T {
        self.azimuth
    }

    pub fn elevation(&self) -> T {
        self.elevation
    }
}

fn check_range<T: Scalar>(what: &'static str, value: T, min: f64, max: f64) -> Result<()> {
    if !Float::is_finite(value) {
        return Err(Error::NonFinite { what });
    }
    if value < lit(min) || value > lit(max) {
        return Err(Error::OutOfRange {
            what,
            value: as_f64(value),
            min,
            max,
        });
    }
    Ok(())
}

/// Which factor (or product) space a steering vector lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SteeringDomain {
    /// Length `m_h`, phases from the azimuth angle.
    Azimuth,
    /// Length `m_v`, phases from the elevation angle.
    Elevation,
    /// Length `m_h * m_v`, Kronecker product of the two factors.
    Joint,
}

/// Unit-modulus steering vector tagged with its domain.
///
/// The first entry is exactly `1 + 0j`.
#[derive(Debug, Clone, PartialEq)]
pub struct SteeringVector<T: Scalar> {
    entries: CVector<T>,
    domain_tag: SteeringDomain,
}

impl<T: Scalar> SteeringVector<T> {
    pub fn entries(&self) -> &CVector<T> {
        &self.entries
    }

    pub fn into_entries(self) -> CVector<T> {
        self.entries
    }

    pub fn domain_tag(&self) -> SteeringDomain {
        self.domain_tag
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// 1-based element number of the URA element in row `l`, column `k`.
pub fn linear_index<T: Scalar>(l: usize, k: usize, geometry: &UraGeometry<T>) -> Result<usize> {
    if l < 1 || l > geometry.m_v() || k < 1 || k > geometry.m_h() {
        return Err(Error::IndexOutOfBounds {
            l,
            k,
            m_v: geometry.m_v(),
            m_h: geometry.m_h(),
        });
    }
    Ok((k - 1) * geometry.m_v() + l)
}

/// Cosine of an angle given in degrees, exact at the quadrant boundaries.
///
/// The sign is folded away first (`abs` is exact and cosine is even), so
/// `cos_deg(-x) == cos_deg(x)` bitwise for every angle, and the quadrant
/// reduction happens in degrees so `cos_deg(90) == 0` exactly. Whenever
/// `180 - x` is exactly representable (every grid angle with a dyadic
/// fraction), `cos_deg(180 - x) == -cos_deg(x)` as well. These identities
/// make the broadside steering vector exactly all-ones and the mirror
/// symmetry of the pattern exact rather than approximate.
pub(crate) fn cos_deg<T: Scalar>(x: T) -> T {
    let full: T = lit(360.0);
    let r = Float::abs(x) % full;
    let quarter: T = lit(90.0);
    let half: T = lit(180.0);
    let three_q: T = lit(270.0);
    let (mag, negate) = if r <= quarter {
        (r, false)
    } else if r <= half {
        (half - r, true)
    } else if r <= three_q {
        (r - half, true)
    } else {
        (full - r, false)
    };
    if mag == quarter {
        return T::zero();
    }
    let c = Float::cos(Float::to_radians(mag));
    if negate {
        -c
    } else {
        c
    }
}

/// Phase-ramp vector of `count` entries at the given angle and spacing:
/// entry `i` (0-based) is `exp(-j 2 pi i spacing cos(angle_deg))`.
pub(crate) fn steering_entries<T: Scalar>(angle_deg: T, count: usize, spacing: T) -> CVector<T> {
    let step = -(lit::<T>(2.0) * T::pi()) * spacing * cos_deg(angle_deg);
    CVector::from_fn(count, |i, _| {
        if i == 0 {
            Cplx::new(T::one(), T::zero())
        } else {
            let phase = step * from_count(i);
            Cplx::new(Float::cos(phase), Float::sin(phase))
        }
    })
}

fn check_angle<T: Scalar>(angle: T) -> Result<()> {
    if Float::is_finite(angle) {
        Ok(())
    } else {
        Err(Error::NonFinite { what: "angle" })
    }
}

/// Azimuth-domain steering vector of length `m_h`.
pub fn steering_azimuth<T: Scalar>(theta: T, geometry: &UraGeometry<T>) -> Result<SteeringVector<T>> {
    check_angle(theta)?;
    Ok(SteeringVector {
        entries: steering_entries(theta, geometry.m_h(), geometry.spacing()),
        domain_tag: SteeringDomain::Azimuth,
    })
}

/// Elevation-domain steering vector of length `m_v`.
pub fn steering_elevation<T: Scalar>(phi: T, geometry: &UraGeometry<T>) -> Result<SteeringVector<T>> {
    check_angle(phi)?;
    Ok(SteeringVector {
        entries: steering_entries(phi, geometry.m_v(), geometry.spacing()),
        domain_tag: SteeringDomain::Elevation,
    })
}

/// Joint steering vector of length `M = m_h * m_v`: the Kronecker product of
/// the azimuth and elevation factors, ordered to match [`linear_index`]
/// (elevation index varies fastest).
pub fn steering_joint<T: Scalar>(
    theta: T,
    phi: T,
    geometry: &UraGeometry<T>,
) -> Result<SteeringVector<T>> {
    let a_h = steering_azimuth(theta, geometry)?;
    let a_v = steering_elevation(phi, geometry)?;
    let m_v = geometry.m_v();
    let entries = CVector::from_fn(geometry.total_elements(), |s, _| {
        a_h.entries()[s / m_v] * a_v.entries()[s % m_v]
    });
    Ok(SteeringVector {
        entries,
        domain_tag: SteeringDomain::Joint,
    })
}

/// Upper bound on samples per axis, to catch runaway step sizes early.
pub const MAX_AXIS_SAMPLES: usize = 2_000_000;

/// Samples `[min, max]` at the given step with both endpoints always
/// included. A degenerate range (`min == max`) yields one sample; a step
/// larger than the range yields exactly the two endpoints.
pub fn sample_axis<T: Scalar>(min: T, max: T, step: T) -> Result<Vec<T>> {
    if !Float::is_finite(min) || !Float::is_finite(max) {
        return Err(Error::NonFinite { what: "sample range" });
    }
    if !Float::is_finite(step) {
        return Err(Error::NonFinite { what: "step" });
    }
    if step <= T::zero() {
        return Err(Error::NonPositive {
            what: "step",
            value: as_f64(step),
        });
    }
    if min > max {
        return Err(Error::Domain {
            what: "sample range minimum",
            value: as_f64(min),
            reason: "exceeds the maximum",
        });
    }
    if min == max {
        return Ok(vec![min]);
    }
    let span = max - min;
    let count_est = as_f64(span / step);
    if !(count_est < MAX_AXIS_SAMPLES as f64) {
        return Err(Error::Domain {
            what: "sample count",
            value: count_est,
            reason: "exceeds the per-axis sample limit",
        });
    }
    // Nudge the quotient so an exactly divisible range keeps its last sample.
    let n = Float::floor(span / step + lit(1e-9));
    let n = n.to_usize().unwrap_or(0);
    let mut samples = Vec::with_capacity(n + 2);
    for i in 0..=n {
        samples.push(min + step * from_count(i));
    }
    let last = *samples.last().expect("at least one sample");
    let snap = step * lit(1e-6);
    // Snapping must never consume the lone `min` sample of a tiny range.
    if samples.len() > 1 && last >= max - snap {
        *samples.last_mut().expect("at least one sample") = max;
    } else {
        samples.push(max);
    }
    Ok(samples)
}
