//! Hermitian eigendecomposition (cyclic Jacobi) and the derived primitives:
//! PSD matrix square root, trace norm, Uhlmann fidelity.
//!
//! Jacobi is the right tool here: every matrix in this crate is at most 8×8,
//! the method is backward stable, and it needs no external solver. Each
//! rotation annihilates one off-diagonal pair; the off-diagonal mass falls
//! quadratically once sweeps get going, so convergence to machine precision
//! takes a handful of sweeps at these sizes.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::error::Error;
use crate::matrix::{C64, ComplexMatrix};
use crate::state::DensityMatrix;

/// Result of a Hermitian eigendecomposition: real eigenvalues sorted
/// non-increasing, and the matching orthonormal eigenvectors as columns.
#[derive(Clone, Debug)]
pub struct HermEig {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

const MAX_SWEEPS: usize = 60;

/// Sum of squared magnitudes of the strict upper triangle.
fn off_diagonal_sq(a: &[C64], n: usize) -> f64 {
    let mut s = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            s += a[p * n + q].norm_sqr();
        }
    }
    s
}

/// Cyclic Jacobi on a flat row-major Hermitian matrix, in place.
///
/// Diagonalizes `a`; if `v` is provided (flat n×n, preloaded with the
/// identity) the accumulated rotations land there so that the original matrix
/// equals V·diag(a)·V†. The caller guarantees `a` is Hermitian.
pub(crate) fn jacobi_inplace(a: &mut [C64], n: usize, mut v: Option<&mut [C64]>) {
    let fro_sq: f64 = a.iter().map(|x| x.norm_sqr()).sum();
    if fro_sq == 0.0 {
        return;
    }
    let stop = 1e-30 * fro_sq;
    let skip = 1e-32 * fro_sq;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_sq(a, n) <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                let r = apq.norm();
                if r * r <= skip {
                    a[p * n + q] = C64::new(0.0, 0.0);
                    a[q * n + p] = C64::new(0.0, 0.0);
                    continue;
                }
                // Rotation R acting on the (p,q) plane: R[pp]=c, R[pq]=−s̄,
                // R[qp]=s, R[qq]=c with real c and s = t·c·e^{−iα}, where
                // a_pq = r·e^{iα} and t solves t² + 2θt − 1 = 0 for
                // θ = (a_pp − a_qq)/(2r). The root with |t| ≤ 1 keeps the
                // rotation small and the sweep stable.
                let app = a[p * n + p].re;
                let aqq = a[q * n + q].re;
                let theta = (app - aqq) / (2.0 * r);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (theta * theta + 1.0).sqrt())
                } else {
                    -1.0 / (-theta + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let phase = apq / r;
                let s = phase.conj() * (t * c);

                // Columns p and q of A ← A·R.
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = akp * c + akq * s;
                    a[k * n + q] = akp * (-s.conj()) + akq * c;
                }
                // Rows p and q of A ← R†·A.
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = apk * c + aqk * s.conj();
                    a[q * n + k] = apk * (-s) + aqk * c;
                }
                // Kill rounding dust on the annihilated pair and the diagonal.
                a[p * n + q] = C64::new(0.0, 0.0);
                a[q * n + p] = C64::new(0.0, 0.0);
                a[p * n + p] = C64::new(a[p * n + p].re, 0.0);
                a[q * n + q] = C64::new(a[q * n + q].re, 0.0);

                if let Some(vv) = v.as_deref_mut() {
                    for k in 0..n {
                        let vkp = vv[k * n + p];
                        let vkq = vv[k * n + q];
                        vv[k * n + p] = vkp * c + vkq * s;
                        vv[k * n + q] = vkp * (-s.conj()) + vkq * c;
                    }
                }
            }
        }
    }
}

/// Eigenvalues only, written to `evs` in non-increasing order. Destroys `a`.
pub(crate) fn jacobi_eigvals_inplace(a: &mut [C64], n: usize, evs: &mut [f64]) {
    jacobi_inplace(a, n, None);
    for i in 0..n {
        evs[i] = a[i * n + i].re;
    }
    // Insertion sort, descending — n ≤ 8 makes anything fancier a loss.
    for i in 1..n {
        let x = evs[i];
        let mut j = i;
        while j > 0 && evs[j - 1] < x {
            evs[j] = evs[j - 1];
            j -= 1;
        }
        evs[j] = x;
    }
}

fn herm_check(h: &ComplexMatrix) -> Result<(), Error> {
    if !h.is_square() {
        return Err(Error::DimensionMismatch {
            expected: h.rows(),
            found: h.cols(),
        });
    }
    let tol = 1e-9 * h.max_abs().max(1.0);
    let dev = h.hermiticity_deviation();
    if dev > tol {
        return Err(Error::NotHermitian { max_dev: dev });
    }
    Ok(())
}

/// Full Hermitian eigendecomposition: eigenvalues non-increasing, orthonormal
/// eigenvector columns. Rejects inputs that are not Hermitian within
/// 1e-9 (relative to the largest entry).
pub fn herm_eig(h: &ComplexMatrix) -> Result<HermEig, Error> {
    herm_check(h)?;
    let n = h.rows();
    // Work on the exactly-Hermitian part so rounding dust in the input cannot
    // bias the rotations.
    let sym = ComplexMatrix::from_fn(n, n, |i, j| (h.get(i, j) + h.get(j, i).conj()) * 0.5);
    let mut a: Vec<C64> = sym.as_slice().to_vec();
    let mut v: Vec<C64> = ComplexMatrix::identity(n).as_slice().to_vec();
    jacobi_inplace(&mut a, n, Some(&mut v));

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[j * n + j]
            .re
            .partial_cmp(&a[i * n + i].re)
            .expect("eigenvalues are finite")
            .then(i.cmp(&j))
    });
    let values: Vec<f64> = order.iter().map(|&i| a[i * n + i].re).collect();
    let vectors = ComplexMatrix::from_fn(n, n, |row, col| v[row * n + order[col]]);
    Ok(HermEig { values, vectors })
}

/// Eigenvalues of a Hermitian matrix, non-increasing. Same validation as
/// [`herm_eig`] without the eigenvector cost.
pub fn herm_eigvals(h: &ComplexMatrix) -> Result<Vec<f64>, Error> {
    herm_check(h)?;
    let n = h.rows();
    let sym = ComplexMatrix::from_fn(n, n, |i, j| (h.get(i, j) + h.get(j, i).conj()) * 0.5);
    let mut a: Vec<C64> = sym.as_slice().to_vec();
    let mut evs = vec![0.0; n];
    jacobi_eigvals_inplace(&mut a, n, &mut evs);
    Ok(evs)
}

/// Hermitian PSD square root of a density matrix.
///
/// Eigenvalues in [−tolerance, 0) are clamped to 0 before rooting; anything
/// below −tolerance means the state is invalid and is reported as an error.
/// Positive eigenvalues at the numerical noise floor are also zeroed: the
/// square root of rounding dust (√1e-16 = 1e-8) would otherwise dominate the
/// error of the root itself.
pub fn matrix_sqrt_psd(rho: &DensityMatrix) -> Result<ComplexMatrix, Error> {
    let eig = herm_eig(rho.matrix())?;
    let tol = rho.tolerance();
    let n = rho.dim();
    let top = eig.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let dust = 1e-14 * top.max(1.0);
    let mut roots = vec![0.0; n];
    for (k, &val) in eig.values.iter().enumerate() {
        if val < -tol {
            return Err(Error::NotPositive { min_eig: val });
        }
        roots[k] = if val > dust { val.sqrt() } else { 0.0 };
    }
    // V · diag(√λ) · V†
    let out = ComplexMatrix::from_fn(n, n, |i, j| {
        let mut acc = C64::new(0.0, 0.0);
        for k in 0..n {
            acc += eig.vectors.get(i, k) * roots[k] * eig.vectors.get(j, k).conj();
        }
        acc
    });
    Ok(out)
}

/// Trace norm (Schatten 1-norm): the sum of singular values.
///
/// Hermitian inputs take the accurate route — the sum of |eigenvalues| —
/// which keeps near-zero differences of states honest; everything else goes
/// through the eigenvalues of X†X.
pub fn trace_norm(x: &ComplexMatrix) -> f64 {
    assert!(x.is_square(), "trace_norm requires a square matrix");
    let scale = x.max_abs();
    if scale == 0.0 {
        return 0.0;
    }
    if x.is_hermitian(1e-9 * scale.max(1.0)) {
        let vals = herm_eigvals(x).expect("hermiticity just verified");
        return vals.iter().map(|v| v.abs()).sum();
    }
    let gram = &x.dagger() * x;
    let vals = herm_eigvals(&gram).expect("X†X is Hermitian by construction");
    vals.iter().map(|v| v.max(0.0).sqrt()).sum()
}

/// Uhlmann fidelity F(ρ,χ) = [Tr (√ρ χ √ρ)^{1/2}]².
pub fn uhlmann_fidelity(rho: &DensityMatrix, chi: &DensityMatrix) -> Result<f64, Error> {
    if rho.dim() != chi.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            found: chi.dim(),
        });
    }
    let s = matrix_sqrt_psd(rho)?;
    let inner = &(&s * chi.matrix()) * &s;
    let vals = herm_eigvals(&inner)?;
    // Null-space eigenvalues of √ρχ√ρ come back as rounding dust whose
    // square root would swamp the result; zero everything below the noise
    // floor of the assembly above.
    let dust = 1e-14 * vals.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let root_sum: f64 = vals
        .iter()
        .map(|&v| if v > dust { v.sqrt() } else { 0.0 })
        .sum();
    Ok((root_sum * root_sum).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bloch::PauliBasis;
    use crate::state::DensityMatrix;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn sigma3_eigenvalues_are_plus_minus_one() {
        let p = PauliBasis::new();
        let eig = herm_eig(&p.sigma3).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-14);
        assert!((eig.values[1] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn quarter_identity_has_flat_spectrum() {
        let m = ComplexMatrix::identity(4).scale(c(0.5, 0.0));
        let eig = herm_eig(&m).unwrap();
        for v in &eig.values {
            assert!((v - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn sigma1_eigenvectors_are_the_hadamard_pair() {
        let p = PauliBasis::new();
        let eig = herm_eig(&p.sigma1).unwrap();
        assert!((eig.values[0] - 1.0).abs() < 1e-14);
        assert!((eig.values[1] + 1.0).abs() < 1e-14);
        // Eigenvectors are defined up to a phase; compare overlap magnitudes
        // against (|0⟩ ± |1⟩)/√2.
        let inv_sqrt2 = core::f64::consts::FRAC_1_SQRT_2;
        let overlap_plus =
            (eig.vectors.get(0, 0) * inv_sqrt2 + eig.vectors.get(1, 0) * inv_sqrt2).norm();
        let overlap_minus =
            (eig.vectors.get(0, 1) * inv_sqrt2 - eig.vectors.get(1, 1) * inv_sqrt2).norm();
        assert!((overlap_plus - 1.0).abs() < 1e-12);
        assert!((overlap_minus - 1.0).abs() < 1e-12);
    }

    #[test]
    fn reconstruction_error_stays_tiny() {
        // A fixed dense Hermitian 4×4 with distinct eigenvalues.
        let h = ComplexMatrix::from_fn(4, 4, |i, j| {
            let base = (i * 4 + j) as f64;
            if i == j {
                c(1.0 + i as f64, 0.0)
            } else if i < j {
                c(0.1 * base, 0.05 * (base - 2.0))
            } else {
                let ji = (j * 4 + i) as f64;
                c(0.1 * ji, -0.05 * (ji - 2.0))
            }
        });
        let eig = herm_eig(&h).unwrap();
        let n = 4;
        let recon = ComplexMatrix::from_fn(n, n, |i, j| {
            let mut acc = c(0.0, 0.0);
            for k in 0..n {
                acc += eig.vectors.get(i, k) * eig.values[k] * eig.vectors.get(j, k).conj();
            }
            acc
        });
        assert!(h.max_abs_diff(&recon) < 1e-10, "reconstruction drifted: {}", h.max_abs_diff(&recon));
        // Orthonormality of the eigenvector columns.
        let gram = &eig.vectors.dagger() * &eig.vectors;
        assert!(gram.max_abs_diff(&ComplexMatrix::identity(4)) < 1e-12);
    }

    #[test]
    fn non_hermitian_input_is_rejected() {
        let m = ComplexMatrix::from_slice(2, 2, &[c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)])
            .unwrap();
        assert!(matches!(herm_eig(&m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn sqrt_of_half_identity() {
        let rho = DensityMatrix::new(ComplexMatrix::identity(2).scale(c(0.5, 0.0))).unwrap();
        let s = matrix_sqrt_psd(&rho).unwrap();
        let expected = ComplexMatrix::identity(2).scale(c(core::f64::consts::FRAC_1_SQRT_2, 0.0));
        assert!(s.max_abs_diff(&expected) < 1e-12);
    }

    #[test]
    fn sqrt_of_projector_is_projector() {
        let amps = [c(0.6, 0.0), c(0.8, 0.0)];
        let rho = DensityMatrix::from_pure(&amps).unwrap();
        let s = matrix_sqrt_psd(&rho).unwrap();
        assert!(s.max_abs_diff(rho.matrix()) < 1e-12);
    }

    #[test]
    fn sqrt_of_diagonal_roots_each_entry() {
        let m = ComplexMatrix::from_slice(2, 2, &[c(0.25, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.75, 0.0)])
            .unwrap();
        let rho = DensityMatrix::new(m).unwrap();
        let s = matrix_sqrt_psd(&rho).unwrap();
        assert!((s.get(0, 0).re - 0.5).abs() < 1e-14);
        assert!((s.get(1, 1).re - 0.75f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn trace_norm_matches_known_values() {
        let p = PauliBasis::new();
        assert!((trace_norm(&p.sigma3) - 2.0).abs() < 1e-12);
        assert_eq!(trace_norm(&ComplexMatrix::zeros(3, 3)), 0.0);
        // ρ − σ for orthogonal pure states has trace norm 2.
        let rho = DensityMatrix::from_pure(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let sigma = DensityMatrix::from_pure(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let diff = rho.matrix() - sigma.matrix();
        assert!((trace_norm(&diff) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn trace_norm_handles_non_hermitian_input() {
        // Nilpotent ladder operator has a single singular value 1.
        let p = PauliBasis::new();
        assert!((trace_norm(&p.sigma_plus) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fidelity_of_state_with_itself_is_one() {
        let amps = [c(0.6, 0.0), c(0.0, 0.8)];
        let rho = DensityMatrix::from_pure(&amps).unwrap();
        assert!((uhlmann_fidelity(&rho, &rho).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fidelity_of_orthogonal_pure_states_is_zero() {
        let rho = DensityMatrix::from_pure(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let sigma = DensityMatrix::from_pure(&[c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(uhlmann_fidelity(&rho, &sigma).unwrap() < 1e-12);
    }

    #[test]
    fn fidelity_of_ground_state_with_maximally_mixed_is_half() {
        let rho = DensityMatrix::from_pure(&[c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let mixed = DensityMatrix::new(ComplexMatrix::identity(2).scale(c(0.5, 0.0))).unwrap();
        assert!((uhlmann_fidelity(&rho, &mixed).unwrap() - 0.5).abs() < 1e-12);
    }
}
