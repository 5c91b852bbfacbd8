use nalgebra::RealField;
use num_traits::{Float, FromPrimitive};

/// Real scalar the whole crate is generic over; `f64` and `f32` qualify.
///
/// `RealField` supplies what nalgebra's decompositions need, `Float` the
/// elementary functions, and `FromPrimitive` lossless-enough construction from
/// literals. Both supertraits define overlapping methods (`cos`, `sqrt`, ...);
/// internal code always calls them through an explicit path to stay
/// unambiguous.
pub trait Scalar: RealField + Float + FromPrimitive + Copy + Send + Sync {}

impl<T: RealField + Float + FromPrimitive + Copy + Send + Sync> Scalar for T {}

/// Converts an `f64` literal into `T`. Panics only if `T` cannot represent any
/// `f64` at all, which no `Scalar` impl of interest does.
pub(crate) fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("scalar type must convert from f64 literals")
}

/// Converts a count into `T` for use in phase and averaging arithmetic.
pub(crate) fn from_count<T: Scalar>(n: usize) -> T {
    T::from_usize(n).expect("scalar type must convert from usize counts")
}

/// Lossy view of a `T` as `f64`, for diagnostics carried in errors.
pub(crate) fn as_f64<T: Scalar>(x: T) -> f64 {
    num_traits::NumCast::from(x).unwrap_or(f64::NAN)
}
