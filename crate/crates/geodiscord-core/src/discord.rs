//! Geometric quantum discord of two-qubit states.
//!
//! Two measures are implemented, both defined as distances from ρ to the set
//! of classical-quantum states χ = Σᵢ pᵢ Πᵢ^A ⊗ ρᵢ^B:
//!
//! * **Trace-distance discord** D_T — minimal Schatten 1-norm distance. For X
//!   states it has the closed form implemented by [`dt_xstate`]; for
//!   Bell-diagonal states it degenerates to the intermediate value of
//!   {|c₁|,|c₂|,|c₃|} ([`dt_bell_diagonal`]). The measurement-grid oracle
//!   [`dt_measurement_oracle`] minimizes ‖ρ − Π_u(ρ)‖₁ over von Neumann
//!   measurement directions u on qubit A and exists purely as an independent
//!   cross-check for the closed forms.
//! * **Bures-distance discord** D_B = √((2+√2)(1−√F_max)), where F_max is the
//!   maximal Uhlmann fidelity between ρ and the classical-quantum set. F_max
//!   is computed by maximizing ½(1 − TrΛ(u) + 2Σ_{k≤n_B} λ_k(u)) with
//!   Λ(u) = √ρ(σ_u ⊗ I)√ρ over Bloch directions u ([`fmax_2xn`]), with a
//!   Bell-diagonal closed form ([`fmax_bell_diagonal`]) and a pure-state
//!   shortcut F_max = largest reduced eigenvalue ([`db_pure`]).
//!
//! The normalization constant is chosen so that both measures reach exactly 1
//! on maximally entangled states.
//!
//! Basis convention everywhere: |00⟩, |01⟩, |10⟩, |11⟩ with qubit A first and
//! "1" the excited level; ρ₁₄ couples |00⟩↔|11⟩ and ρ₂₃ couples |01⟩↔|10⟩.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)]
use num_traits::Float;

use crate::bloch::{sigma_u, PauliBasis, UnitVector3};
use crate::eig::{self, matrix_sqrt_psd, trace_norm};
use crate::error::Error;
use crate::matrix::{kron, C64, ComplexMatrix};
use crate::state::{DensityMatrix, Subsystem};

/// Which discord measure to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    Trace,
    Bures,
}

/// The seven parameters of a two-qubit X state: four populations down the
/// main diagonal and the two anti-diagonal coherences.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XStateParams {
    pub p11: f64,
    pub p22: f64,
    pub p33: f64,
    pub p44: f64,
    pub rho14: C64,
    pub rho23: C64,
}

impl XStateParams {
    pub fn new(p11: f64, p22: f64, p33: f64, p44: f64, rho14: C64, rho23: C64) -> Result<Self, Error> {
        let sum = p11 + p22 + p33 + p44;
        let dev = (sum - 1.0).abs();
        if dev > 1e-9 {
            return Err(Error::NonUnitTrace { dev });
        }
        for p in [p11, p22, p33, p44] {
            if p < -1e-9 {
                return Err(Error::NotPositive { min_eig: p });
            }
        }
        if p11 * p44 < rho14.norm_sqr() - 1e-9 {
            return Err(Error::Invalid(
                "outer coherence |rho14|^2 exceeds p11*p44 beyond tolerance",
            ));
        }
        if p22 * p33 < rho23.norm_sqr() - 1e-9 {
            return Err(Error::Invalid(
                "inner coherence |rho23|^2 exceeds p22*p33 beyond tolerance",
            ));
        }
        Ok(XStateParams {
            p11,
            p22,
            p33,
            p44,
            rho14,
            rho23,
        })
    }

    /// Extract the X-state parameters from a density matrix, rejecting inputs
    /// with off-X elements above 1e-9.
    pub fn from_density(rho: &DensityMatrix) -> Result<Self, Error> {
        if rho.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: rho.dim(),
            });
        }
        if !is_x_form(rho, 1e-9) {
            return Err(Error::Invalid("state has coherences outside the X pattern"));
        }
        XStateParams::new(
            rho.get(0, 0).re,
            rho.get(1, 1).re,
            rho.get(2, 2).re,
            rho.get(3, 3).re,
            rho.get(0, 3),
            rho.get(1, 2),
        )
    }

    /// Assemble the 4×4 density matrix.
    pub fn to_density(&self) -> Result<DensityMatrix, Error> {
        let z = C64::new(0.0, 0.0);
        let mat = ComplexMatrix::from_slice(
            4,
            4,
            &[
                C64::new(self.p11, 0.0), z, z, self.rho14,
                z, C64::new(self.p22, 0.0), self.rho23, z,
                z, self.rho23.conj(), C64::new(self.p33, 0.0), z,
                self.rho14.conj(), z, z, C64::new(self.p44, 0.0),
            ],
        )?;
        DensityMatrix::new(mat)
    }
}

/// Correlation triple (c₁, c₂, c₃) of a Bell-diagonal state
/// ρ = ¼(I + Σᵢ cᵢ σᵢ⊗σᵢ).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BellDiagonalParams {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl BellDiagonalParams {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self, Error> {
        let params = BellDiagonalParams { c1, c2, c3 };
        let min = params
            .bell_eigenvalues()
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        if min < -1e-9 {
            return Err(Error::NotPositive { min_eig: min });
        }
        Ok(params)
    }

    /// Populations of the four Bell states; all must be ≥ 0 for a physical
    /// state (the tetrahedron condition).
    pub fn bell_eigenvalues(&self) -> [f64; 4] {
        let (c1, c2, c3) = (self.c1, self.c2, self.c3);
        [
            (1.0 + c1 - c2 + c3) / 4.0,
            (1.0 - c1 + c2 + c3) / 4.0,
            (1.0 + c1 + c2 - c3) / 4.0,
            (1.0 - c1 - c2 - c3) / 4.0,
        ]
    }

    /// Extract (c₁,c₂,c₃) from a density matrix, verifying that the
    /// reconstruction matches within 1e-9.
    pub fn from_density(rho: &DensityMatrix) -> Result<Self, Error> {
        if rho.dim() != 4 {
            return Err(Error::DimensionMismatch {
                expected: 4,
                found: rho.dim(),
            });
        }
        let p = PauliBasis::new();
        let sigmas = [&p.sigma1, &p.sigma2, &p.sigma3];
        let mut c = [0.0f64; 3];
        for (i, s) in sigmas.iter().enumerate() {
            let op = kron(s, s);
            c[i] = (&op * rho.matrix()).trace().re;
        }
        let candidate = BellDiagonalParams::new(c[0], c[1], c[2])?;
        if candidate.to_density()?.matrix().max_abs_diff(rho.matrix()) > 1e-9 {
            return Err(Error::Invalid("state is not Bell-diagonal"));
        }
        Ok(candidate)
    }

    pub fn to_density(&self) -> Result<DensityMatrix, Error> {
        self.as_xstate().to_density()
    }

    /// Bell-diagonal states are X states; express them that way.
    pub fn as_xstate(&self) -> XStateParams {
        let (c1, c2, c3) = (self.c1, self.c2, self.c3);
        XStateParams {
            p11: (1.0 + c3) / 4.0,
            p22: (1.0 - c3) / 4.0,
            p33: (1.0 - c3) / 4.0,
            p44: (1.0 + c3) / 4.0,
            rho14: C64::new((c1 - c2) / 4.0, 0.0),
            rho23: C64::new((c1 + c2) / 4.0, 0.0),
        }
    }
}

/// Search grid over the Bloch sphere: `n_theta` points on θ∈[0,π] inclusive,
/// `n_phi` points on φ∈[0,2π), plus an iteration budget for the coordinate-
/// descent polish that follows the grid scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MeasurementGrid {
    pub n_theta: usize,
    pub n_phi: usize,
    pub refinement: usize,
}

impl Default for MeasurementGrid {
    fn default() -> Self {
        MeasurementGrid {
            n_theta: 181,
            n_phi: 361,
            refinement: 200,
        }
    }
}

/// Outcome of the fidelity maximization.
#[derive(Clone, Copy, Debug)]
pub struct FmaxResult {
    pub fmax: f64,
    pub argmax_u: UnitVector3,
    pub evaluations: usize,
}

/// Coarse label for formula dispatch; listed in precedence order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StateClass {
    Pure,
    BellDiagonal,
    XState,
    General,
}

/// Trace-distance discord of an X state.
///
/// With γ₁,₂ = 2(|ρ₂₃| ± |ρ₁₄|), γ₃ = 1 − 2(p22+p33) and
/// x_A3 = 2(p11+p22) − 1, the value is
/// √[(γ₁²γ_max² − γ₂²γ_min²)/(γ_max² − γ_min² + γ₁² − γ₂²)] where
/// γ_max² = max{γ₃², γ₂² + x_A3²} and γ_min² = min{γ₁², γ₃²}. Both terms of
/// the denominator are nonnegative, so a vanishing denominator forces
/// γ_max = γ_min and γ₁ = |γ₂|; the expression then tends to γ₁ along any
/// physical family, which is the value returned (0 for classical states,
/// where the coherences vanish anyway).
pub fn dt_xstate(x: &XStateParams) -> f64 {
    let g1 = 2.0 * (x.rho23.norm() + x.rho14.norm());
    let g2 = 2.0 * (x.rho23.norm() - x.rho14.norm());
    let g3 = 1.0 - 2.0 * (x.p22 + x.p33);
    let xa3 = 2.0 * (x.p11 + x.p22) - 1.0;

    let g1_sq = g1 * g1;
    let g2_sq = g2 * g2;
    let g3_sq = g3 * g3;
    let gmax_sq = g3_sq.max(g2_sq + xa3 * xa3);
    let gmin_sq = g1_sq.min(g3_sq);

    let num = g1_sq * gmax_sq - g2_sq * gmin_sq;
    let den = gmax_sq - gmin_sq + g1_sq - g2_sq;
    if den.abs() < 1e-15 {
        return g1.clamp(0.0, 1.0);
    }
    ((num / den).max(0.0)).sqrt().clamp(0.0, 1.0)
}

/// Trace-distance discord of a Bell-diagonal state: the intermediate value of
/// {|c₁|, |c₂|, |c₃|}.
pub fn dt_bell_diagonal(c: &BellDiagonalParams) -> f64 {
    let mut abs = [c.c1.abs(), c.c2.abs(), c.c3.abs()];
    abs.sort_by(|a, b| a.partial_cmp(b).expect("finite correlation values"));
    abs[1]
}

/// Bures-distance discord from the maximal classical-quantum fidelity:
/// √((2+√2)(1 − √fmax)). Monotone decreasing; 0 at fmax = 1; exactly 1 at
/// fmax = 1/2 (the maximally entangled case).
pub fn db_from_fmax(fmax: f64) -> Result<f64, Error> {
    if !(-1e-9..=1.0 + 1e-9).contains(&fmax) {
        return Err(Error::OutOfRange {
            what: "fmax must lie in [0, 1]",
        });
    }
    let f = fmax.clamp(0.0, 1.0);
    Ok(((2.0 + core::f64::consts::SQRT_2) * (1.0 - f.sqrt())).sqrt())
}

/// Maximal classical-quantum fidelity of a Bell-diagonal state:
/// ½ + ¼·max over cyclic (i,j,k) of
/// [√((1+cᵢ)² − (cⱼ−cₖ)²) + √((1−cᵢ)² − (cⱼ+cₖ)²)].
///
/// The radicands are nonnegative for every state in the tetrahedron; values
/// in [−1e-12, 0) are rounding dust and clamp to zero, anything lower is an
/// unphysical input and errors out.
pub fn fmax_bell_diagonal(c: &BellDiagonalParams) -> Result<f64, Error> {
    let cyclic = [
        (c.c1, c.c2, c.c3),
        (c.c2, c.c3, c.c1),
        (c.c3, c.c1, c.c2),
    ];
    let mut best = f64::NEG_INFINITY;
    for (ci, cj, ck) in cyclic {
        let r1 = (1.0 + ci) * (1.0 + ci) - (cj - ck) * (cj - ck);
        let r2 = (1.0 - ci) * (1.0 - ci) - (cj + ck) * (cj + ck);
        let mut total = 0.0;
        for r in [r1, r2] {
            if r < -1e-12 {
                return Err(Error::Invalid(
                    "negative fidelity radicand: input lies outside the physical tetrahedron",
                ));
            }
            total += r.max(0.0).sqrt();
        }
        if total > best {
            best = total;
        }
    }
    Ok((0.5 + 0.25 * best).clamp(0.0, 1.0))
}

/// Bures-distance discord of a pure 2×n_B state from its amplitudes: F_max is
/// the largest eigenvalue of the reduced state of qubit A.
pub fn db_pure(amplitudes: &[C64], n_b: usize) -> Result<f64, Error> {
    if n_b == 0 || amplitudes.len() != 2 * n_b {
        return Err(Error::DimensionMismatch {
            expected: 2 * n_b,
            found: amplitudes.len(),
        });
    }
    let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
    let dev = (norm_sq.sqrt() - 1.0).abs();
    if dev > 1e-9 {
        return Err(Error::NotNormalized { dev });
    }
    // 2×2 reduced state of A: closed-form top eigenvalue.
    let mut a = 0.0;
    let mut d = 0.0;
    let mut b = C64::new(0.0, 0.0);
    for k in 0..n_b {
        a += amplitudes[k].norm_sqr();
        d += amplitudes[n_b + k].norm_sqr();
        b += amplitudes[k] * amplitudes[n_b + k].conj();
    }
    let mu_max = 0.5 * (a + d) + (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    db_from_fmax(mu_max.clamp(0.0, 1.0))
}

const REFINE_MIN_STEP: f64 = 1e-7;

struct SphereSearch {
    value: f64,
    theta: f64,
    phi: f64,
    evaluations: usize,
}

fn wrap_phi(phi: f64) -> f64 {
    let tau = 2.0 * core::f64::consts::PI;
    let mut p = phi % tau;
    if p < 0.0 {
        p += tau;
    }
    p
}

/// Grid scan over the sphere followed by coordinate descent with step
/// halving. Ties resolve to the first grid index (θ-major scan order), and
/// only strict improvements move the polish, so the result is deterministic.
fn maximize_on_sphere(
    grid: &MeasurementGrid,
    mut objective: impl FnMut(f64, f64) -> f64,
) -> Result<SphereSearch, Error> {
    if grid.n_theta < 2 || grid.n_phi < 1 {
        return Err(Error::OutOfRange {
            what: "grid needs n_theta >= 2 and n_phi >= 1",
        });
    }
    let pi = core::f64::consts::PI;
    let d_theta = pi / (grid.n_theta - 1) as f64;
    let d_phi = 2.0 * pi / grid.n_phi as f64;

    let mut evaluations = 0usize;
    let mut best = f64::NEG_INFINITY;
    let (mut best_theta, mut best_phi) = (0.0, 0.0);
    for j in 0..grid.n_theta {
        let theta = j as f64 * d_theta;
        for k in 0..grid.n_phi {
            let phi = k as f64 * d_phi;
            let v = objective(theta, phi);
            evaluations += 1;
            if v > best {
                best = v;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    let mut step = d_theta.max(d_phi);
    let mut rounds = 0usize;
    while step >= REFINE_MIN_STEP && rounds < grid.refinement {
        rounds += 1;
        let candidates = [
            ((best_theta + step).clamp(0.0, pi), best_phi),
            ((best_theta - step).clamp(0.0, pi), best_phi),
            (best_theta, wrap_phi(best_phi + step)),
            (best_theta, wrap_phi(best_phi - step)),
        ];
        let mut improved = false;
        for (t, p) in candidates {
            let v = objective(t, p);
            evaluations += 1;
            if v > best {
                best = v;
                best_theta = t;
                best_phi = p;
                improved = true;
            }
        }
        if !improved {
            step *= 0.5;
        }
    }

    Ok(SphereSearch {
        value: best,
        theta: best_theta,
        phi: best_phi,
        evaluations,
    })
}

/// Independent oracle for the trace-distance discord of a two-qubit state:
/// minimizes ‖ρ − Π_u(ρ)‖₁ over measurement directions u on qubit A, where
/// Π_u dephases A in the ±u basis. Measurement-dephased states form a subset
/// of the classical-quantum set, so this bounds the discord from above and
/// coincides with it for X states.
pub fn dt_measurement_oracle(rho: &DensityMatrix, grid: &MeasurementGrid) -> Result<f64, Error> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    let identity2 = ComplexMatrix::identity(2);
    // Π₊ρΠ₊ + Π₋ρΠ₋ = (ρ + UρU)/2 for U = σ_u ⊗ I, so the distance to the
    // dephased state is ‖ρ − UρU‖₁/2.
    let outcome = maximize_on_sphere(grid, |theta, phi| {
        let u = UnitVector3::new(theta, phi);
        let big_u = kron(&sigma_u(&u), &identity2);
        let conjugated = &(&big_u * rho.matrix()) * &big_u;
        let delta = (rho.matrix() - &conjugated).scale(C64::new(0.5, 0.0));
        -trace_norm(&delta)
    })?;
    Ok(-outcome.value)
}

/// Maximal classical-quantum fidelity of a 2×n_B state by direct maximization
/// of ½(1 − TrΛ(u) + 2Σ_{k=1}^{n_B} λ_k(u)) with Λ(u) = √ρ(σ_u ⊗ I)√ρ and
/// λ_k the eigenvalues of Λ in non-increasing order.
///
/// √ρ is computed once; Λ(u) is assembled per direction as the real linear
/// combination u₁M₁ + u₂M₂ + u₃M₃ of the cached M_i = √ρ(σ_i ⊗ I)√ρ, which
/// keeps the per-node cost at one small eigenvalue problem.
pub fn fmax_2xn(rho: &DensityMatrix, n_b: usize, grid: &MeasurementGrid) -> Result<FmaxResult, Error> {
    if n_b == 0 || rho.dim() != 2 * n_b {
        return Err(Error::DimensionMismatch {
            expected: 2 * n_b,
            found: rho.dim(),
        });
    }
    let n = rho.dim();
    let sqrt_rho = matrix_sqrt_psd(rho)?;
    let p = PauliBasis::new();
    let identity_b = ComplexMatrix::identity(n_b);

    let mut ms: Vec<Vec<C64>> = Vec::with_capacity(3);
    let mut trs = [0.0f64; 3];
    for (i, sigma) in [&p.sigma1, &p.sigma2, &p.sigma3].into_iter().enumerate() {
        let m = &(&sqrt_rho * &kron(sigma, &identity_b)) * &sqrt_rho;
        // Store the exactly-Hermitian part so every real combination of the
        // three caches is Hermitian in storage.
        let sym = ComplexMatrix::from_fn(n, n, |r, c| (m.get(r, c) + m.get(c, r).conj()) * 0.5);
        trs[i] = sym.trace().re;
        ms.push(sym.as_slice().to_vec());
    }

    let mut lam = vec![C64::new(0.0, 0.0); n * n];
    let mut evs = vec![0.0f64; n];
    let outcome = maximize_on_sphere(grid, |theta, phi| {
        let [u1, u2, u3] = UnitVector3::new(theta, phi).cartesian();
        for idx in 0..n * n {
            lam[idx] = ms[0][idx] * u1 + ms[1][idx] * u2 + ms[2][idx] * u3;
        }
        eig::jacobi_eigvals_inplace(&mut lam, n, &mut evs);
        let top: f64 = evs[..n_b].iter().sum();
        let tr = u1 * trs[0] + u2 * trs[1] + u3 * trs[2];
        0.5 * (1.0 - tr + 2.0 * top)
    })?;

    Ok(FmaxResult {
        fmax: outcome.value.clamp(0.0, 1.0),
        argmax_u: UnitVector3::new(outcome.theta, outcome.phi),
        evaluations: outcome.evaluations,
    })
}

fn is_x_form(rho: &DensityMatrix, tol: f64) -> bool {
    // Every element outside the main diagonal and anti-diagonal must vanish.
    for i in 0..4 {
        for j in 0..4 {
            if i == j || i + j == 3 {
                continue;
            }
            if rho.get(i, j).norm() > tol {
                return false;
            }
        }
    }
    true
}

/// Label a two-qubit state for formula dispatch. Pure wins over Bell-diagonal
/// wins over X-form; anything else is general.
pub fn classify_state(rho: &DensityMatrix) -> StateClass {
    debug_assert_eq!(rho.dim(), 4, "classify_state expects a two-qubit state");
    let tol = 1e-9;
    if (rho.purity() - 1.0).abs() <= tol {
        return StateClass::Pure;
    }
    if is_x_form(rho, tol) {
        let bell_diagonal = (rho.get(0, 0) - rho.get(3, 3)).norm() <= tol
            && (rho.get(1, 1) - rho.get(2, 2)).norm() <= tol
            && rho.get(0, 3).im.abs() <= tol
            && rho.get(1, 2).im.abs() <= tol;
        if bell_diagonal {
            return StateClass::BellDiagonal;
        }
        return StateClass::XState;
    }
    StateClass::General
}

/// Evaluate one discord measure of an arbitrary two-qubit state through the
/// cheapest applicable formula: Bell-diagonal and X closed forms when the
/// state qualifies, the reduced-eigenvalue shortcut for pure states under the
/// Bures measure, and the grid optimizations otherwise.
pub fn discord_of_state(
    rho: &DensityMatrix,
    measure: Measure,
    grid: &MeasurementGrid,
) -> Result<f64, Error> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: rho.dim(),
        });
    }
    match measure {
        Measure::Trace => {
            if let Ok(bd) = BellDiagonalParams::from_density(rho) {
                return Ok(dt_bell_diagonal(&bd));
            }
            if let Ok(x) = XStateParams::from_density(rho) {
                return Ok(dt_xstate(&x));
            }
            dt_measurement_oracle(rho, grid)
        }
        Measure::Bures => {
            let fmax = match classify_state(rho) {
                StateClass::Pure => {
                    let reduced = rho.partial_trace((2, 2), Subsystem::A)?;
                    let evs = eig::herm_eigvals(reduced.matrix())?;
                    evs[0].clamp(0.0, 1.0)
                }
                StateClass::BellDiagonal => {
                    let bd = BellDiagonalParams::from_density(rho)?;
                    fmax_bell_diagonal(&bd)?
                }
                StateClass::XState | StateClass::General => fmax_2xn(rho, 2, grid)?.fmax,
            };
            db_from_fmax(fmax)
        }
    }
}
