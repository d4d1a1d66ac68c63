//! Parallel determinant evaluation for the gcd loop.

use detres_core::resultant::DeterminantBackend;
use detres_core::{det_fraction_free, Matrix, MatrixError, Polynomial};
use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

pub const THREADS_VAR: &str = "DETRES_THREADS";

/// Runs each batch of minors on a rayon pool.
pub struct RayonBackend {
    pool: ThreadPool,
}

impl RayonBackend {
    /// `threads == 0` lets rayon choose.
    pub fn new(threads: usize) -> Result<Self, rayon::ThreadPoolBuildError> {
        let pool = ThreadPoolBuilder::new().num_threads(threads).build()?;
        Ok(RayonBackend { pool })
    }

    /// Reads `DETRES_THREADS`; unset, empty or `0` means automatic.
    pub fn from_env() -> Result<Self, String> {
        let threads = match std::env::var(THREADS_VAR) {
            Ok(v) if !v.trim().is_empty() => v
                .trim()
                .parse::<usize>()
                .map_err(|_| format!("{} must be a non-negative integer, got {:?}", THREADS_VAR, v))?,
            _ => 0,
        };
        RayonBackend::new(threads).map_err(|e| e.to_string())
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }
}

impl DeterminantBackend for RayonBackend {
    fn batch_size(&self) -> usize {
        self.threads().max(1)
    }

    fn determinants(&self, minors: &[Matrix<Polynomial>]) -> Vec<Result<Polynomial, MatrixError>> {
        self.pool.install(|| minors.par_iter().map(det_fraction_free).collect())
    }
}
