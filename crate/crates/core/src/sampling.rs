//! Seeded random operators and states for property checks.

use rand::Rng;

use crate::density::{BlochVector, DensityParams};
use crate::linalg::{ComplexMatrix2, ComplexMatrix4, C64};

fn complex<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_matrix2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix2 {
    ComplexMatrix2::from_fn(|_, _| complex(rng))
}

pub fn random_matrix4<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix4 {
    ComplexMatrix4::from_fn(|_, _| complex(rng))
}

pub fn random_hermitian4<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix4 {
    let g = random_matrix4(rng);
    (g + g.adjoint()).scale_real(0.5)
}

/// Hermitian with unit trace, not necessarily positive.
pub fn random_unit_trace_hermitian<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix4 {
    let h = random_hermitian4(rng);
    let shift = (1.0 - h.trace().re) / 4.0;
    h + ComplexMatrix4::identity().scale_real(shift)
}

/// `G·G† / Tr(G·G†)`: a full-rank density matrix.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix4 {
    let g = random_matrix4(rng);
    let m = g.matmul(&g.adjoint());
    m.scale_real(1.0 / m.trace().re)
}

/// Uniform direction, radius uniform in `[0, 1]`.
pub fn random_bloch<R: Rng + ?Sized>(rng: &mut R) -> BlochVector {
    let r: f64 = rng.gen_range(0.0..=1.0);
    let d = random_pure_bloch(rng);
    BlochVector(d.0.map(|x| x * r))
}

pub fn random_pure_bloch<R: Rng + ?Sized>(rng: &mut R) -> BlochVector {
    let z: f64 = rng.gen_range(-1.0..=1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let rho = (1.0 - z * z).max(0.0).sqrt();
    BlochVector([rho * phi.cos(), rho * phi.sin(), z])
}

/// Parameters of a random positive density matrix.
pub fn random_params<R: Rng + ?Sized>(rng: &mut R) -> DensityParams {
    crate::density::params_of(&random_density(rng)).expect("unit trace by construction")
}
