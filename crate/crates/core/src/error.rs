/// Unified error type for every fallible operation in the crate.
///
/// Diagnostic values are carried as `f64` regardless of the scalar the crate
/// is instantiated with, so the error type stays non-generic.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    #[error("element index (l={l}, k={k}) outside 1..={m_v} x 1..={m_h}")]
    IndexOutOfBounds {
        l: usize,
        k: usize,
        m_v: usize,
        m_h: usize,
    },

    #[error("{what} must be finite")]
    NonFinite { what: &'static str },

    #[error("{what} = {value} outside [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("{what} must be positive, got {value}")]
    NonPositive { what: &'static str, value: f64 },

    #[error("{what} must have at least one element")]
    EmptyDimension { what: &'static str },

    #[error("{context}: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    ShapeMismatch {
        context: &'static str,
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("singular value decomposition did not converge")]
    SvdNonConvergence,

    #[error("singular values not sorted descending at position {position}")]
    UnsortedSingularValues { position: usize },

    #[error("matrix is not Hermitian: max entry defect {defect:e}")]
    NotHermitian { defect: f64 },

    #[error(
        "sector [{az_min}, {az_max}] x [{el_min}, {el_max}] deg contains no grid sample"
    )]
    EmptySectorOverlap {
        az_min: f64,
        az_max: f64,
        el_min: f64,
        el_max: f64,
    },

    #[error("{what} is empty")]
    EmptyInput { what: &'static str },

    #[error("{what} = {value} invalid: {reason}")]
    Domain {
        what: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("cannot calibrate to {target_percent}% at {distance_m} m: {reason}")]
    CalibrationInfeasible {
        target_percent: f64,
        distance_m: f64,
        reason: &'static str,
    },
}

pub type Result<T> = core::result::Result<T, Error>;
