//! Bloch-sphere directions and the Pauli operator basis.

#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::{C64, ComplexMatrix};

/// Unit vector on the Bloch sphere, stored as spherical angles.
///
/// `cartesian()` returns (sinθcosφ, sinθsinφ, cosθ), which is a unit vector by
/// construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitVector3 {
    theta: f64,
    phi: f64,
}

impl UnitVector3 {
    /// Build from spherical angles; θ is clamped to [0, π], φ wrapped to [0, 2π).
    pub fn new(theta: f64, phi: f64) -> Self {
        let theta = theta.clamp(0.0, core::f64::consts::PI);
        let tau = 2.0 * core::f64::consts::PI;
        let mut phi = phi % tau;
        if phi < 0.0 {
            phi += tau;
        }
        UnitVector3 { theta, phi }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Cartesian components (u₁, u₂, u₃).
    pub fn cartesian(&self) -> [f64; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [st * cp, st * sp, ct]
    }
}

/// The three Pauli matrices plus the 2×2 identity and the ladder operators
/// σ± = (σ₁ ± iσ₂)/2.
#[derive(Clone, Debug)]
pub struct PauliBasis {
    pub sigma1: ComplexMatrix,
    pub sigma2: ComplexMatrix,
    pub sigma3: ComplexMatrix,
    pub identity2: ComplexMatrix,
    pub sigma_plus: ComplexMatrix,
    pub sigma_minus: ComplexMatrix,
}

impl PauliBasis {
    pub fn new() -> Self {
        let z = C64::new(0.0, 0.0);
        let one = C64::new(1.0, 0.0);
        let i = C64::new(0.0, 1.0);
        let sigma1 = ComplexMatrix::from_slice(2, 2, &[z, one, one, z]).unwrap();
        let sigma2 = ComplexMatrix::from_slice(2, 2, &[z, -i, i, z]).unwrap();
        let sigma3 = ComplexMatrix::from_slice(2, 2, &[one, z, z, -one]).unwrap();
        let identity2 = ComplexMatrix::identity(2);
        // Basis convention: index 0 = ground |0⟩, index 1 = excited |1⟩, so the
        // raising operator σ₊ = |1⟩⟨0| has its single entry at row 1, column 0.
        let sigma_plus = ComplexMatrix::from_slice(2, 2, &[z, z, one, z]).unwrap();
        let sigma_minus = ComplexMatrix::from_slice(2, 2, &[z, one, z, z]).unwrap();
        PauliBasis {
            sigma1,
            sigma2,
            sigma3,
            identity2,
            sigma_plus,
            sigma_minus,
        }
    }
}

impl Default for PauliBasis {
    fn default() -> Self {
        PauliBasis::new()
    }
}

/// The Pauli combination u·σ⃗ = u₁σ₁ + u₂σ₂ + u₃σ₃ for a Bloch direction u.
pub fn sigma_u(u: &UnitVector3) -> ComplexMatrix {
    let [u1, u2, u3] = u.cartesian();
    ComplexMatrix::from_slice(
        2,
        2,
        &[
            C64::new(u3, 0.0),
            C64::new(u1, -u2),
            C64::new(u1, u2),
            C64::new(-u3, 0.0),
        ],
    )
    .unwrap()
}
