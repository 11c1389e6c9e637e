//! Ladder-matrix form of the intertwining relations. On a sector's
//! eigenbasis the transform is the diagonal phase P = e^{−iπm/a}diag((−1)^ℓ),
//! so 𝓕∘A∘𝓕⁻¹ = B becomes the matrix identity P A + B P = 0 (the sector
//! phase cancels in conjugation). Checked for the raising/lowering pair
//! (𝓕 E⁺ 𝓕⁻¹ = −E⁻ and conversely, the ladder form of the multiplication
//! and Laplacian intertwining), for the Euler operator
//! (𝓕∘E = −(E+μ)∘𝓕 with E = (aH−μ)/2), and for commutation with K.

use crate::TransformError;
use kaf_sl2::{operator_matrix, RadialSector, Sl2Op};
use kaf_specfun::Cplx;
use nalgebra::DMatrix;

#[derive(Debug, Clone, Copy)]
pub struct IntertwineReport {
    /// max interior entry of P E⁺ + E⁻ P.
    pub raise_to_lower: f64,
    /// max interior entry of P E⁻ + E⁺ P.
    pub lower_to_raise: f64,
    /// max interior entry of P E + (E + μ) P with E = (aH−μ)/2.
    pub euler: f64,
    /// max interior entry of P K − K P.
    pub cayley_commutes: f64,
}

impl IntertwineReport {
    pub fn max(&self) -> f64 {
        self.raise_to_lower
            .max(self.lower_to_raise)
            .max(self.euler)
            .max(self.cayley_commutes)
    }
}

fn interior_max(m: &DMatrix<Cplx>, interior: usize) -> f64 {
    let mut acc = 0.0f64;
    for i in 0..interior.min(m.nrows()) {
        for j in 0..interior.min(m.ncols()) {
            acc = acc.max(m[(i, j)].norm());
        }
    }
    acc
}

/// Builds the sector matrices on {f̃_ℓ}_{ℓ≤ell_max} and checks the four
/// conjugation identities on the interior block (the matrices truncate
/// images past ℓ_max, so the top two rows/columns are excluded).
pub fn intertwining_residuals(
    sector: &RadialSector,
    ell_max: usize,
) -> Result<IntertwineReport, TransformError> {
    if ell_max < 4 {
        return Err(TransformError::domain(
            "need ell_max >= 4 to leave an interior block after truncation",
        ));
    }
    let n = ell_max + 1;
    let interior = n - 2;
    let mu = sector.params().mu();
    let a = sector.params().a();
    let parity = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Cplx::new(if i % 2 == 0 { 1.0 } else { -1.0 }, 0.0)
        } else {
            Cplx::new(0.0, 0.0)
        }
    });
    let eplus = operator_matrix(Sl2Op::EPlus, sector, ell_max)?;
    let eminus = operator_matrix(Sl2Op::EMinus, sector, ell_max)?;
    let hmat = operator_matrix(Sl2Op::H, sector, ell_max)?;
    let kmat = operator_matrix(Sl2Op::K, sector, ell_max)?;
    let euler = (hmat * Cplx::new(a, 0.0)
        - DMatrix::from_diagonal_element(n, n, Cplx::new(mu, 0.0)))
        * Cplx::new(0.5, 0.0);
    let shift = &euler + DMatrix::from_diagonal_element(n, n, Cplx::new(mu, 0.0));
    Ok(IntertwineReport {
        raise_to_lower: interior_max(&(&parity * &eplus + &eminus * &parity), interior),
        lower_to_raise: interior_max(&(&parity * &eminus + &eplus * &parity), interior),
        euler: interior_max(&(&parity * &euler + &shift * &parity), interior),
        cayley_commutes: interior_max(&(&parity * &kmat - &kmat * &parity), interior),
    })
}
