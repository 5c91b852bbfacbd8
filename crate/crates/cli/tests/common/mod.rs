//! Shared helpers for the runner tests: seeded randomness, an independent
//! Gram-Schmidt complement oracle for projector checks, and temp-dir plumbing
//! for runs that write artifacts.
#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};

use nullsteer::{CMatrix64, CVector64, Cplx64};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> CMatrix64 {
    CMatrix64::from_fn(rows, cols, |_, _| {
        Cplx64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}

/// Orthogonal-complement projector of the row space of `h`, built with
/// modified Gram-Schmidt (two passes) instead of an SVD: the null space of
/// `h` is the orthogonal complement of the conjugated rows, so
/// `P = I - sum b b^H` over an orthonormal basis `b` of that span.
pub fn gram_schmidt_complement(h: &CMatrix64, tol_rel: f64) -> CMatrix64 {
    let n = h.ncols();
    let mut basis: Vec<CVector64> = Vec::new();
    for r in 0..h.nrows() {
        let original: CVector64 = h.row(r).adjoint();
        let scale = original.norm().max(1.0);
        let mut v = original;
        for _ in 0..2 {
            for b in &basis {
                let coef = b.dotc(&v);
                v.axpy(-coef, b, Cplx64::new(1.0, 0.0));
            }
        }
        let norm = v.norm();
        if norm > tol_rel * scale {
            basis.push(v / Cplx64::new(norm, 0.0));
        }
    }
    let mut p = CMatrix64::identity(n, n);
    for b in &basis {
        p -= b * b.adjoint();
    }
    p
}

static DIR_SEQ: AtomicU64 = AtomicU64::new(0);

/// Fresh directory under the target tmp root; unique per call so parallel
/// tests never share an output directory.
pub fn scratch_dir(tag: &str) -> PathBuf {
    let seq = DIR_SEQ.fetch_add(1, Ordering::Relaxed);
    let dir = std::env::temp_dir().join(format!(
        "nullsteer-test-{}-{}-{}",
        tag,
        std::process::id(),
        seq
    ));
    std::fs::create_dir_all(&dir).expect("create scratch dir");
    dir
}

/// Writes scenario text to a fresh file and returns its path.
pub fn scenario_file(tag: &str, text: &str) -> PathBuf {
    let path = scratch_dir(tag).join("scenario.scn");
    std::fs::write(&path, text).expect("write scenario");
    path
}
