//! Null-space projectors from singular value decompositions.
//!
//! A constraint matrix stacks conjugated steering rows; its SVD splits the
//! factor space into signal directions (singular value above a relative
//! threshold) and null directions. The projector keeps exactly the null
//! directions, so transmit covariances pushed through it put no power on any
//! constraint steering vector.
//!
//! Constraint matrices sampled from a narrow angular sector are often
//! numerically rank-deficient: tightly clustered steering vectors produce
//! singular values that decay below any reasonable threshold, so the projector
//! legitimately keeps more directions than `m_d - K`. The discarded components
//! are below the threshold by construction, which bounds the residual response
//! inside the sector.

use crate::scalar::{as_f64, lit};
use crate::{CMatrix, CVector, Cplx, Error, Result, Scalar};
use num_traits::Float;

/// Default relative singular-value threshold separating signal from null
/// directions.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Full singular value decomposition `A = U diag(sigma) V^H` with both `U`
/// and `V` square, so null-space directions are available even when the
/// matrix has fewer rows than columns.
#[derive(Debug, Clone, PartialEq)]
pub struct SvdResult<T: Scalar> {
    u: CMatrix<T>,
    sigma: Vec<T>,
    v: CMatrix<T>,
}

impl<T: Scalar> SvdResult<T> {
    /// Left singular vectors as columns of a square unitary matrix.
    pub fn u(&self) -> &CMatrix<T> {
        &self.u
    }

    /// Singular values, non-negative and sorted descending; length
    /// `min(rows, cols)` of the decomposed matrix.
    pub fn sigma(&self) -> &[T] {
        &self.sigma
    }

    /// Right singular vectors as columns of a square unitary matrix.
    pub fn v(&self) -> &CMatrix<T> {
        &self.v
    }

    /// Multiplies the factors back together.
    pub fn reconstruct(&self) -> CMatrix<T> {
        let m = self.u.nrows();
        let n = self.v.nrows();
        let mut s = CMatrix::zeros(m, n);
        for (i, &sv) in self.sigma.iter().enumerate() {
            s[(i, i)] = Cplx::new(sv, T::zero());
        }
        &self.u * s * self.v.adjoint()
    }
}

/// Full SVD of a complex matrix.
///
/// The iteration itself is delegated to nalgebra; the thin factors it returns
/// are completed to square unitaries by pivoted Gram-Schmidt so that the null
/// directions beyond `min(rows, cols)` are explicit columns of `v`.
pub fn svd<T: Scalar>(a: &CMatrix<T>) -> Result<SvdResult<T>> {
    if a.iter()
        .any(|z| !Float::is_finite(z.re) || !Float::is_finite(z.im))
    {
        return Err(Error::NonFinite {
            what: "matrix entry",
        });
    }
    let (m, n) = a.shape();
    if m == 0 || n == 0 {
        return Ok(SvdResult {
            u: CMatrix::identity(m, m),
            sigma: Vec::new(),
            v: CMatrix::identity(n, n),
        });
    }
    let f = a
        .clone()
        .try_svd(true, true, Float::epsilon(), 0)
        .ok_or(Error::SvdNonConvergence)?;
    let sigma: Vec<T> = f.singular_values.iter().copied().collect();
    let u_thin = f.u.expect("u was requested");
    let v_thin = f.v_t.expect("v_t was requested").adjoint();
    let u = if u_thin.ncols() == m {
        u_thin
    } else {
        complete_unitary(u_thin)?
    };
    let v = if v_thin.ncols() == n {
        v_thin
    } else {
        complete_unitary(v_thin)?
    };
    Ok(SvdResult { u, sigma, v })
}

/// Extends `p` orthonormal columns to a square unitary basis.
///
/// Candidates are canonical unit vectors; each round orthogonalizes them
/// against the current basis (two Gram-Schmidt passes for reorthogonalization)
/// and takes the first candidate keeping most of its mass, falling back to
/// the best seen. Mass conservation guarantees some candidate survives, so
/// the error path is defensive only.
fn complete_unitary<T: Scalar>(basis: CMatrix<T>) -> Result<CMatrix<T>> {
    let n = basis.nrows();
    let p = basis.ncols();
    let mut out = CMatrix::zeros(n, n);
    out.columns_mut(0, p).copy_from(&basis);
    let mut filled = p;
    while filled < n {
        let mut best: Option<(T, CVector<T>)> = None;
        for j in 0..n {
            let mut r: CVector<T> = CVector::zeros(n);
            r[j] = Cplx::new(T::one(), T::zero());
            orthogonalize(&mut r, &out, filled);
            let norm = r.norm();
            if norm >= lit(0.7) {
                best = Some((norm, r));
                break;
            }
            if best.as_ref().map_or(true, |(b, _)| norm > *b) {
                best = Some((norm, r));
            }
        }
        let (norm, r) = best.expect("candidate list is non-empty");
        if norm < lit(1e-6) {
            return Err(Error::SvdNonConvergence);
        }
        out.set_column(filled, &(r / Cplx::new(norm, T::zero())));
        filled += 1;
    }
    Ok(out)
}

/// Removes from `r` its projection onto the first `cols` columns of `basis`,
/// twice, to keep orthogonality near working precision.
fn orthogonalize<T: Scalar>(r: &mut CVector<T>, basis: &CMatrix<T>, cols: usize) {
    for _ in 0..2 {
        for c in 0..cols {
            let col = basis.column(c);
            let coef = col.dotc(r);
            r.axpy(-coef, &col, Cplx::new(T::one(), T::zero()));
        }
    }
}

/// Splits singular directions into signal (false) and null (true).
///
/// `q` directions count as signal: those with `sigma > tol_rel * sigma[0]`
/// (none when the largest singular value is zero). Directions beyond the
/// supplied singular values, up to `m_d`, are always null.
pub fn select_null_mask<T: Scalar>(sigma: &[T], m_d: usize, tol_rel: T) -> Result<Vec<bool>> {
    if sigma.len() > m_d {
        return Err(Error::Domain {
            what: "singular value count",
            value: sigma.len() as f64,
            reason: "exceeds the projector dimension",
        });
    }
    if !Float::is_finite(tol_rel) {
        return Err(Error::NonFinite { what: "tol_rel" });
    }
    if tol_rel < T::zero() {
        return Err(Error::NonPositive {
            what: "tol_rel",
            value: as_f64(tol_rel),
        });
    }
    for (i, pair) in sigma.windows(2).enumerate() {
        if pair[1] > pair[0] {
            return Err(Error::UnsortedSingularValues { position: i + 1 });
        }
    }
    if let Some(&last) = sigma.last() {
        if last < T::zero() {
            return Err(Error::Domain {
                what: "singular value",
                value: as_f64(last),
                reason: "negative",
            });
        }
    }
    let q = match sigma.first() {
        None => 0,
        Some(&s1) if s1 <= T::zero() => 0,
        Some(&s1) => {
            let threshold = tol_rel * s1;
            sigma.iter().filter(|&&s| s > threshold).count()
        }
    };
    Ok((0..m_d).map(|u| u >= q).collect())
}

/// Hermitian idempotent projector onto retained null directions.
#[derive(Debug, Clone, PartialEq)]
pub struct Projector<T: Scalar> {
    matrix: CMatrix<T>,
    rank: usize,
    tol: T,
}

impl<T: Scalar> Projector<T> {
    pub fn matrix(&self) -> &CMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.matrix
    }

    /// Dimension of the retained null space.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Relative singular-value threshold the projector was built with.
    pub fn tol(&self) -> T {
        self.tol
    }

    /// Side length of the square projector matrix.
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }
}

/// Builds the null-space projector of a `K x m_d` constraint matrix:
/// `P = V diag(mask) V^H` with the mask from [`select_null_mask`].
///
/// An empty constraint set (zero rows) or an all-zero matrix yields the exact
/// identity; a full signal space yields the exact zero matrix.
pub fn null_projector<T: Scalar>(h: &CMatrix<T>, tol_rel: T) -> Result<Projector<T>> {
    let m_d = h.ncols();
    if m_d == 0 {
        return Err(Error::EmptyInput {
            what: "projector dimension",
        });
    }
    if h.nrows() == 0 {
        return Ok(Projector {
            matrix: CMatrix::identity(m_d, m_d),
            rank: m_d,
            tol: tol_rel,
        });
    }
    let dec = svd(h)?;
    let mask = select_null_mask(dec.sigma(), m_d, tol_rel)?;
    let rank = mask.iter().filter(|&&keep| keep).count();
    let matrix = if rank == m_d {
        CMatrix::identity(m_d, m_d)
    } else if rank == 0 {
        CMatrix::zeros(m_d, m_d)
    } else {
        let mut kept = CMatrix::zeros(m_d, rank);
        let mut out_col = 0;
        for (u, &keep) in mask.iter().enumerate() {
            if keep {
                kept.set_column(out_col, &dec.v().column(u));
                out_col += 1;
            }
        }
        &kept * kept.adjoint()
    };
    // Annihilation sanity bound. Every kept direction has a singular value
    // at most tol_rel * sigma_1, so |HP|_F <= sqrt(m_d) * tol_rel * |H|_F
    // up to rounding, scaled to the scalar's precision so it holds for f32
    // as well as f64.
    debug_assert!(
        as_f64((h * &matrix).norm())
            <= (m_d as f64).sqrt() * as_f64(tol_rel) * as_f64(h.norm())
                + 1e6
                    * as_f64(<T as Float>::epsilon())
                    * as_f64(Float::max(T::one(), h.norm())),
        "projector leak exceeds its tolerance bound"
    );
    Ok(Projector {
        matrix,
        rank,
        tol: tol_rel,
    })
}

/// Pushes a Hermitian covariance through the projector: `P R P^H`.
pub fn project_covariance<T: Scalar>(p: &Projector<T>, r: &CMatrix<T>) -> Result<CMatrix<T>> {
    let d = p.dim();
    if r.nrows() != d || r.ncols() != d {
        return Err(Error::ShapeMismatch {
            context: "covariance vs projector",
            expected_rows: d,
            expected_cols: d,
            rows: r.nrows(),
            cols: r.ncols(),
        });
    }
    let defect = hermitian_defect(r);
    let scale = r.iter().map(|z| z.norm()).fold(T::one(), Float::max);
    if defect > lit::<T>(1e-10) * scale {
        return Err(Error::NotHermitian {
            defect: as_f64(defect),
        });
    }
    Ok(p.matrix() * r * p.matrix().adjoint())
}

/// Largest modulus of `m[(i,j)] - conj(m[(j,i)])` over the upper triangle.
pub(crate) fn hermitian_defect<T: Scalar>(m: &CMatrix<T>) -> T {
    let mut worst = T::zero();
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            let d = (m[(i, j)] - m[(j, i)].conj()).norm();
            worst = Float::max(worst, d);
        }
    }
    worst
}
