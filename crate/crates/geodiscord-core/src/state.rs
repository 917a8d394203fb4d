//! Validated density matrices and partial traces.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::eig;
use crate::error::Error;
use crate::matrix::{C64, ComplexMatrix};

/// Default validation tolerance for Hermiticity, trace, and positivity.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Which tensor factor survives a partial trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// A density matrix: Hermitian, unit trace, positive semidefinite — all
/// verified at construction against a per-instance tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    mat: ComplexMatrix,
    tolerance: f64,
}

impl DensityMatrix {
    /// Validate with the default tolerance (1e-9).
    pub fn new(mat: ComplexMatrix) -> Result<Self, Error> {
        DensityMatrix::with_tolerance(mat, DEFAULT_TOLERANCE)
    }

    /// Validate with an explicit tolerance.
    pub fn with_tolerance(mat: ComplexMatrix, tolerance: f64) -> Result<Self, Error> {
        if !mat.is_square() {
            return Err(Error::DimensionMismatch {
                expected: mat.rows(),
                found: mat.cols(),
            });
        }
        let herm_dev = mat.hermiticity_deviation();
        if herm_dev > tolerance {
            return Err(Error::NotHermitian { max_dev: herm_dev });
        }
        let tr = mat.trace();
        let tr_dev = (tr - C64::new(1.0, 0.0)).norm();
        if tr_dev > tolerance {
            return Err(Error::NonUnitTrace { dev: tr_dev });
        }
        // Positivity, via the spectrum of the exactly-Hermitian part.
        let n = mat.rows();
        let mut a: Vec<C64> = ComplexMatrix::from_fn(n, n, |i, j| {
            (mat.get(i, j) + mat.get(j, i).conj()) * 0.5
        })
        .as_slice()
        .to_vec();
        let mut evs = vec![0.0; n];
        eig::jacobi_eigvals_inplace(&mut a, n, &mut evs);
        let min_eig = evs[n - 1];
        if min_eig < -tolerance {
            return Err(Error::NotPositive { min_eig });
        }
        Ok(DensityMatrix { mat, tolerance })
    }

    /// Projector onto a pure state, given its amplitudes. The vector must be
    /// normalized within 1e-9.
    pub fn from_pure(amps: &[C64]) -> Result<Self, Error> {
        let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        let dev = (norm_sq.sqrt() - 1.0).abs();
        if dev > 1e-9 {
            return Err(Error::NotNormalized { dev });
        }
        let n = amps.len();
        let mat = ComplexMatrix::from_fn(n, n, |i, j| amps[i] * amps[j].conj());
        Ok(DensityMatrix {
            mat,
            tolerance: DEFAULT_TOLERANCE,
        })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.mat
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C64 {
        self.mat.get(i, j)
    }

    /// Purity Tr ρ².
    pub fn purity(&self) -> f64 {
        let n = self.dim();
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                // Tr ρ² = Σ_ij ρ_ij ρ_ji = Σ_ij |ρ_ij|² for Hermitian ρ.
                s += self.mat.get(i, j).norm_sqr();
            }
        }
        s
    }

    /// Reduced state of one factor of a bipartite system with local
    /// dimensions `dims = (dA, dB)`.
    pub fn partial_trace(&self, dims: (usize, usize), keep: Subsystem) -> Result<DensityMatrix, Error> {
        let (da, db) = dims;
        if da * db != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: da * db,
            });
        }
        let out = match keep {
            Subsystem::A => ComplexMatrix::from_fn(da, da, |i, j| {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..db {
                    acc += self.mat.get(i * db + k, j * db + k);
                }
                acc
            }),
            Subsystem::B => ComplexMatrix::from_fn(db, db, |i, j| {
                let mut acc = C64::new(0.0, 0.0);
                for k in 0..da {
                    acc += self.mat.get(k * db + i, k * db + j);
                }
                acc
            }),
        };
        DensityMatrix::with_tolerance(out, self.tolerance)
    }
}
