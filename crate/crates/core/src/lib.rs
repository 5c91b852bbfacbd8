//! Beampattern nulling for a rectangular-array radar that shares spectrum with
//! cellular base stations.
//!
//! The radar transmits from an `m_h x m_v` uniform rectangular array; each base
//! station receives on a uniform linear array over a line-of-sight path. The
//! library builds the interference channel, projects the radar transmit
//! covariance onto the null space of steering-vector constraints independently
//! in the azimuth and elevation factor domains, evaluates the resulting 3D
//! beampattern on an angle grid, and accounts for the search volume lost to the
//! nulled sector.
//!
//! Module map:
//! - [`array_geometry`]: array descriptions, element indexing, steering vectors
//! - [`channel`]: LoS channel blocks, partitioned assembly, sector constraints
//! - [`nsp`]: SVD, null-direction selection, projectors, covariance projection
//! - [`beamform`]: steered covariances, projected-covariance combination, grid
//!   evaluation, sector metrics
//! - [`search_volume`]: solid angles, blocked-area geometry, distance sweeps
//!
//! Angle convention: all public angles are in degrees, and steering phases use
//! the cosine of the angle, so 90 degrees is the zero-phase (broadside)
//! direction. Because cos is even, patterns are exactly symmetric in the sign
//! of any angle; grids that span only one sign of elevation avoid the mirror
//! ambiguity.
//!
//! Every algorithm is generic over the real scalar via [`Scalar`] (`f64` or
//! `f32`); the `*64`/`*32` aliases below fix the common instantiations.

pub mod array_geometry;
pub mod beamform;
pub mod channel;
mod error;
pub mod nsp;
mod scalar;
pub mod search_volume;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Complex scalar over a real type `T`.
pub type Cplx<T> = num_complex::Complex<T>;
/// Dynamically sized complex matrix.
pub type CMatrix<T> = nalgebra::DMatrix<Cplx<T>>;
/// Dynamically sized complex column vector.
pub type CVector<T> = nalgebra::DVector<Cplx<T>>;

pub type Cplx64 = Cplx<f64>;
pub type Cplx32 = Cplx<f32>;
pub type CMatrix64 = CMatrix<f64>;
pub type CMatrix32 = CMatrix<f32>;
pub type CVector64 = CVector<f64>;
pub type CVector32 = CVector<f32>;

pub type UraGeometry64 = array_geometry::UraGeometry<f64>;
pub type UraGeometry32 = array_geometry::UraGeometry<f32>;
pub type AngleDeg64 = array_geometry::AngleDeg<f64>;
pub type AngleDeg32 = array_geometry::AngleDeg<f32>;
pub type SteeringVector64 = array_geometry::SteeringVector<f64>;
pub type SteeringVector32 = array_geometry::SteeringVector<f32>;
pub type ChannelMatrix64 = channel::ChannelMatrix<f64>;
pub type ChannelMatrix32 = channel::ChannelMatrix<f32>;
pub type NullSector64 = channel::NullSector<f64>;
pub type NullSector32 = channel::NullSector<f32>;
pub type Projector64 = nsp::Projector<f64>;
pub type Projector32 = nsp::Projector<f32>;
pub type BeampatternGrid64 = beamform::BeampatternGrid<f64>;
pub type BeampatternGrid32 = beamform::BeampatternGrid<f32>;
pub type NspCovariance64 = beamform::NspCovariance<f64>;
pub type NspCovariance32 = beamform::NspCovariance<f32>;
